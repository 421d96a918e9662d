use dst_core::bounds::{DEFAULT_BABAI_SCAN, DEFAULT_MAIN_SCAN};
use dst_core::distinguish::Limits;
use dst_core::graph::AutLimits;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub limits: Limits,
    pub aut_limits: AutLimits,
    pub output: OutputMode,
    pub main_scan: u64,
    pub babai_scan: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            limits: Limits::default(),
            aut_limits: AutLimits::default(),
            output: OutputMode::Text,
            main_scan: DEFAULT_MAIN_SCAN,
            babai_scan: DEFAULT_BABAI_SCAN,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let caps = [
            ("element cap", self.limits.element_cap),
            (
                "subset scan degree",
                self.limits.subset_scan_max_degree as u64,
            ),
            ("max colors", self.limits.max_colors as u64),
            ("coloring budget", self.limits.coloring_budget),
            ("main scan", self.main_scan),
            ("babai scan", self.babai_scan),
        ];
        match caps.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(CliError::Input(format!("{name} must be positive"))),
            None => Ok(()),
        }
    }

    pub fn json(&self) -> bool {
        self.output == OutputMode::Json
    }
}

/// Worker count from `DST_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("DST_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
}
