//! Text format for groups:
//!
//! ```text
//! degree 5
//! # optional comments
//! (1 2)
//! (1 2 3 4 5)
//! ```
//!
//! `#` starts a comment anywhere on a line. Whole-line comments are kept and
//! written back after the header, so canonical files round-trip exactly.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    /// Whole-line comments, text after the `#`.
    pub comments: Vec<String>,
    pub generators: Vec<Permutation>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut degree = None;
        let mut comments = Vec::new();
        let mut generators = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let trimmed = raw.trim();
            if let Some(comment) = trimmed.strip_prefix('#') {
                comments.push(comment.to_string());
                continue;
            }
            let body = trimmed.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            match degree {
                None => {
                    let value = body
                        .strip_prefix("degree")
                        .filter(|rest| rest.starts_with(char::is_whitespace))
                        .and_then(|rest| rest.trim().parse::<usize>().ok())
                        .filter(|&v| v > 0)
                        .ok_or_else(|| Error::Parse {
                            line: line_no,
                            message: format!("expected 'degree <v>', found '{body}'"),
                        })?;
                    degree = Some(value);
                }
                Some(v) => {
                    let g = Permutation::parse(body, v).map_err(|e| Error::Parse {
                        line: line_no,
                        message: e.to_string(),
                    })?;
                    generators.push(g);
                }
            }
        }
        let degree = degree.ok_or(Error::Parse {
            line: 1,
            message: "missing 'degree <v>' header".into(),
        })?;
        Ok(GroupFile {
            degree,
            comments,
            generators,
        })
    }

    pub fn from_group(group: &PermGroup) -> Self {
        GroupFile {
            degree: group.degree(),
            comments: Vec::new(),
            generators: group.generators().to_vec(),
        }
    }

    /// The generated group; an empty generator list gives the trivial group.
    pub fn to_group(&self) -> PermGroup {
        if self.generators.is_empty() {
            PermGroup::trivial(self.degree)
        } else {
            PermGroup::new(self.generators.clone()).expect("degrees checked while parsing")
        }
    }
}

impl fmt::Display for GroupFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree {}", self.degree)?;
        for c in &self.comments {
            writeln!(f, "#{c}")?;
        }
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}
