use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use dst_core::bounds::{babai_threshold, main_threshold, ThresholdReport};
use dst_core::distinguish::{distinguishing_number, is_distinguishing};
use dst_core::graph::Graph;
use dst_core::group::file::GroupFile;
use dst_core::{corpus, Partition, PermGroup};

use dst_cli::builder::parse_graph;
use dst_cli::config::{OutputMode, RunConfig};
use dst_cli::error::{CliError, EXIT_FAILURE};
use dst_cli::report::{graph_report, group_report, render_json, render_text};
use dst_cli::suite::run_suite;

#[derive(Parser)]
#[command(
    name = "dst",
    version,
    about = "Distinguishing numbers of permutation groups and graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Permutation group reports
    #[command(subcommand)]
    Group(GroupCommand),
    /// Graph reports and export
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Exact threshold scans
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// The full verification suite
    #[command(subcommand)]
    Paper(PaperCommand),
    /// The built-in group corpus
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Args, Clone)]
struct Common {
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Largest group order enumerated element by element
    #[arg(long, default_value_t = 1_000_000)]
    element_cap: u64,
    /// Largest degree for the distinguishing-subset scan
    #[arg(long, default_value_t = 30)]
    subset_scan_max_degree: usize,
    /// Largest number of colors tried
    #[arg(long, default_value_t = 8)]
    max_colors: usize,
    /// Colorings examined before giving up
    #[arg(long, default_value_t = 100_000_000)]
    coloring_budget: u64,
}

impl Common {
    fn config(&self) -> Result<RunConfig, CliError> {
        let mut config = RunConfig::default();
        config.limits.element_cap = self.element_cap;
        config.limits.subset_scan_max_degree = self.subset_scan_max_degree;
        config.limits.max_colors = self.max_colors;
        config.limits.coloring_budget = self.coloring_budget;
        config.output = if self.json {
            OutputMode::Json
        } else {
            OutputMode::Text
        };
        config.validate()?;
        Ok(config)
    }
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Order, transitivity, primitivity, minimum degree and distinguishing data
    Report {
        /// Group file, or corpus:NAME
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check a partition, or search for a least distinguishing one
    Disting {
        file: String,
        /// Cells such as "1 3 5; 2 4"
        #[arg(long)]
        partition: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Vertex and edge counts, |Aut|, asymmetry and distinguishing number
    Report {
        /// Builder expression such as "johnson 6 2", or an edge-list file
        spec: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print the edge list of a graph
    Export { spec: String },
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Least v with 2^v >= v^(4(1+ceil(log2 v))) from there on
    Threshold {
        #[arg(long, default_value_t = dst_core::bounds::DEFAULT_MAIN_SCAN)]
        scan: u64,
        #[arg(long)]
        json: bool,
    },
    /// Least w with 2^floor(sqrt w) >= w^(4(1+ceil(log2 w))) from there on
    Babai {
        #[arg(long, default_value_t = dst_core::bounds::DEFAULT_BABAI_SCAN)]
        scan: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum PaperCommand {
    /// Run every check and print a pass/fail table
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = dst_core::bounds::DEFAULT_MAIN_SCAN)]
        threshold_scan: u64,
        #[arg(long, default_value_t = dst_core::bounds::DEFAULT_BABAI_SCAN)]
        babai_scan: u64,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Names, degrees and orders
    List,
    /// Print a corpus group file
    Show { name: String },
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

fn load_group(arg: &str) -> Result<PermGroup, CliError> {
    if let Some(name) = arg.strip_prefix("corpus:") {
        return corpus::get(name)
            .map(|e| e.group())
            .ok_or_else(|| CliError::Input(format!("no corpus group named '{name}'")));
    }
    let file = GroupFile::parse(&read(arg)?).map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
    Ok(file.to_group())
}

fn load_graph(spec: &str) -> Result<Graph, CliError> {
    if Path::new(spec).is_file() {
        Graph::parse_edge_list(&read(spec)?).map_err(|e| CliError::Input(format!("{spec}: {e}")))
    } else {
        parse_graph(spec)
    }
}

fn emit<T: serde::Serialize>(report: &T, config: &RunConfig) {
    if config.json() {
        print!("{}", render_json(report));
    } else {
        print!("{}", render_text(report));
    }
}

fn threshold_output(r: &ThresholdReport, json: bool) -> ExitCode {
    if json {
        let doc = json!({
            "threshold": r.threshold.to_string(),
            "scan_limit": r.scan_limit.to_string(),
            "all_beyond_hold": r.all_beyond_hold,
            "first_counterexample": r.first_counterexample.map(|v| v.to_string()),
            "last_failure": r.last_failure.map(|v| v.to_string()),
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        println!("threshold: {}", r.threshold);
        println!("scan limit: {}", r.scan_limit);
        println!("all beyond hold: {}", r.all_beyond_hold);
        match r.last_failure {
            Some(v) => println!("last failure: {v}"),
            None => println!("last failure: none"),
        }
        if let Some(v) = r.first_counterexample {
            println!("first counterexample: {v}");
        }
    }
    if r.all_beyond_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE as u8)
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Group(GroupCommand::Report { file, common }) => {
            let config = common.config()?;
            let group = load_group(&file)?;
            emit(&group_report(&file, &group, &config), &config);
        }
        Command::Group(GroupCommand::Disting {
            file,
            partition,
            common,
        }) => {
            let config = common.config()?;
            let group = load_group(&file)?;
            match partition {
                Some(text) => {
                    let p = Partition::parse(&text, group.degree())?;
                    let ok = is_distinguishing(&group, &p, config.limits.element_cap)?;
                    if config.json() {
                        println!(
                            "{}",
                            json!({ "partition": p.to_string(), "distinguishing": ok })
                        );
                    } else {
                        println!("partition: {p}");
                        println!("distinguishing: {ok}");
                    }
                }
                None => {
                    let d = distinguishing_number(&group, &config.limits)?;
                    if config.json() {
                        println!(
                            "{}",
                            json!({ "distinguishing_number": d.number, "partition": d.witness.to_string() })
                        );
                    } else {
                        println!("distinguishing number: {}", d.number);
                        println!("partition: {}", d.witness);
                    }
                }
            }
        }
        Command::Graph(GraphCommand::Report { spec, common }) => {
            let config = common.config()?;
            let graph = load_graph(&spec)?;
            emit(&graph_report(&spec, &graph, &config), &config);
        }
        Command::Graph(GraphCommand::Export { spec }) => {
            print!("{}", load_graph(&spec)?.to_edge_list())
        }
        Command::Bounds(BoundsCommand::Threshold { scan, json }) => {
            if scan < 2 {
                return Err(CliError::Input("scan must be at least 2".into()));
            }
            return Ok(threshold_output(&main_threshold(scan), json));
        }
        Command::Bounds(BoundsCommand::Babai { scan, json }) => {
            if scan < 2 {
                return Err(CliError::Input("scan must be at least 2".into()));
            }
            return Ok(threshold_output(&babai_threshold(scan), json));
        }
        Command::Paper(PaperCommand::Verify {
            common,
            threshold_scan,
            babai_scan,
        }) => {
            let mut config = common.config()?;
            config.main_scan = threshold_scan;
            config.babai_scan = babai_scan;
            config.validate()?;
            let report = run_suite(&config);
            if config.json() {
                print!("{}", render_json(&report));
            } else {
                print!("{}", report.to_text());
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(EXIT_FAILURE as u8));
            }
        }
        Command::Corpus(CorpusCommand::List) => {
            for e in corpus::entries() {
                let g = e.group();
                println!(
                    "{:<14} degree {:>3}  order {}",
                    e.name,
                    g.degree(),
                    g.order()
                );
            }
        }
        Command::Corpus(CorpusCommand::Show { name }) => {
            let e = corpus::get(&name)
                .ok_or_else(|| CliError::Input(format!("no corpus group named '{name}'")))?;
            print!("{}", e.text);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
