//! Permutations of `{1..v}` stored as image tables.
//!
//! Composition is left-to-right: `p.compose(&q)` sends `x` to `q(p(x))`,
//! which matches the right action `x^g` used throughout the crate.
//! Points are 1-based in all text and error messages and 0-based in
//! [`Permutation::apply`] and [`Permutation::images`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from a 0-based image table.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &y in &images {
            if y >= degree {
                return Err(Error::PointOutOfRange {
                    point: y + 1,
                    degree,
                });
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::DuplicatePointInCycle { point: y + 1 });
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles given with 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::DuplicatePointInCycle { point: p });
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"` or `"()"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `x`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// `x ↦ other(self(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked form of [`compose`](Self::compose) for equal-degree operands.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&y| other.images[y]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// Number of moved points.
    pub fn support_size(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &y)| i != y)
            .count()
    }

    /// 0-based moved points in increasing order.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &y)| i != y)
            .map(|(i, _)| i)
            .collect()
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut count = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point and
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Smallest moved point (0-based).
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(i, &y)| i != y)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Parses the cycle list of a permutation without range checks.
fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let bytes = text.as_bytes();
    let malformed = |position: usize, reason: &str| Error::MalformedCycle {
        position,
        reason: reason.to_string(),
    };
    let mut cycles = Vec::new();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(malformed(pos, "empty input"));
    }
    let mut saw_identity = false;
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(malformed(pos, "expected '('"));
        }
        let open = pos;
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut pos);
            match bytes.get(pos) {
                None => return Err(malformed(pos, "unclosed cycle")),
                Some(b')') => {
                    pos += 1;
                    break;
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let value: usize = text[start..pos]
                        .parse()
                        .map_err(|_| malformed(start, "integer too large"))?;
                    if let Some(&next) = bytes.get(pos) {
                        if next != b')' && !next.is_ascii_whitespace() {
                            return Err(malformed(pos, "expected whitespace or ')'"));
                        }
                    }
                    cycle.push(value);
                }
                Some(_) => return Err(malformed(pos, "unexpected character")),
            }
        }
        if cycle.is_empty() {
            if !cycles.is_empty() || saw_identity {
                return Err(malformed(open, "'()' must stand alone"));
            }
            saw_identity = true;
        } else {
            if saw_identity {
                return Err(malformed(open, "'()' must stand alone"));
            }
            cycles.push(cycle);
        }
        skip_ws(&mut pos);
    }
    Ok(cycles)
}

/// Cycle notation with an explicit degree, e.g. for argument parsing.
impl FromStr for Permutation {
    type Err = Error;

    /// Degree is the largest point mentioned; use [`Permutation::parse`]
    /// when the degree is known.
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0);
        Permutation::from_cycles(degree.max(1), &cycles)
    }
}
