//! Graph builder expressions:
//!
//! ```text
//! expr := "johnson" m l | "complete" v | "cycle" n | "path" n | "tgraph" m
//!       | "power" expr n | "product" expr expr | "linegraph" expr
//!       | "K"v | "C"n | "P"n | "(" expr ")"
//! ```

use dst_core::graph::{
    cartesian_power, cartesian_product, complete_graph, cycle_graph, johnson_graph, line_graph,
    path_graph, t_graph, Graph,
};

use crate::error::CliError;

fn tokenize(text: &str) -> Vec<String> {
    text.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

struct Parser {
    tokens: Vec<String>,
    pos: usize,
}

impl Parser {
    fn next(&mut self) -> Result<String, CliError> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| CliError::Input("unexpected end of graph expression".into()))?;
        self.pos += 1;
        Ok(tok)
    }

    fn int(&mut self) -> Result<usize, CliError> {
        let tok = self.next()?;
        tok.parse()
            .map_err(|_| CliError::Input(format!("expected an integer, found '{tok}'")))
    }

    fn expr(&mut self) -> Result<Graph, CliError> {
        let tok = self.next()?;
        let graph = match tok.as_str() {
            "(" => {
                let g = self.expr()?;
                let close = self.next()?;
                if close != ")" {
                    return Err(CliError::Input(format!("expected ')', found '{close}'")));
                }
                g
            }
            "johnson" => {
                let m = self.int()?;
                let l = self.int()?;
                johnson_graph(m, l)?
            }
            "complete" => complete_graph(self.int()?),
            "cycle" => cycle_graph(self.int()?)?,
            "path" => path_graph(self.int()?),
            "tgraph" => t_graph(self.int()?)?,
            "power" => {
                let base = self.expr()?;
                let n = self.int()?;
                cartesian_power(&base, n)?
            }
            "product" => {
                let a = self.expr()?;
                let b = self.expr()?;
                cartesian_product(&a, &b)
            }
            "linegraph" => line_graph(&self.expr()?)?,
            other => {
                let shorthand = |prefix: char| {
                    other
                        .strip_prefix(prefix)
                        .and_then(|n| n.parse::<usize>().ok())
                };
                if let Some(n) = shorthand('K') {
                    complete_graph(n)
                } else if let Some(n) = shorthand('C') {
                    cycle_graph(n)?
                } else if let Some(n) = shorthand('P') {
                    path_graph(n)
                } else {
                    return Err(CliError::Input(format!("unknown graph builder '{other}'")));
                }
            }
        };
        Ok(graph)
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    let mut parser = Parser {
        tokens: tokenize(text),
        pos: 0,
    };
    let graph = parser.expr()?;
    if let Some(extra) = parser.tokens.get(parser.pos) {
        return Err(CliError::Input(format!(
            "unexpected '{extra}' after graph expression"
        )));
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders() {
        assert_eq!(parse_graph("johnson 6 2").unwrap().vertex_count(), 15);
        let cube = parse_graph("power K2 3").unwrap();
        assert_eq!((cube.vertex_count(), cube.edge_count()), (8, 12));
        assert_eq!(parse_graph("tgraph 6").unwrap().edge_count(), 6);
        assert_eq!(parse_graph("complete 4").unwrap().edge_count(), 6);
        let g = parse_graph("product (path 3) C4").unwrap();
        assert_eq!(g.vertex_count(), 12);
        let l = parse_graph("linegraph (complete 5)").unwrap();
        assert_eq!((l.vertex_count(), l.is_regular()), (10, Some(6)));
        assert_eq!(
            parse_graph("power (johnson 4 2) 2").unwrap().vertex_count(),
            36
        );
    }

    #[test]
    fn errors() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("johnson 6").is_err());
        assert!(parse_graph("johnson 6 2 extra").is_err());
        assert!(parse_graph("wheel 5").is_err());
        assert!(parse_graph("(K3").is_err());
        assert!(matches!(parse_graph("johnson 3 3"), Err(CliError::Core(_))));
    }
}
