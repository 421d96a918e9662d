use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A partition of `{1..v}` into nonempty cells.
///
/// Stored as a cell index per point; indices are `0..num_cells` and every
/// index is used.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    cell_of: Vec<usize>,
    cells: usize,
}

impl Partition {
    /// Every point in its own cell.
    pub fn singletons(degree: usize) -> Self {
        Partition {
            cell_of: (0..degree).collect(),
            cells: degree,
        }
    }

    /// One cell holding every point.
    pub fn whole(degree: usize) -> Self {
        Partition {
            cell_of: vec![0; degree],
            cells: usize::from(degree > 0),
        }
    }

    /// Builds a partition from arbitrary per-point labels. Cells are numbered
    /// by the sorted order of the distinct labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut distinct: Vec<usize> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let cell_of = labels
            .iter()
            .map(|l| distinct.binary_search(l).unwrap())
            .collect();
        Partition {
            cell_of,
            cells: distinct.len(),
        }
    }

    /// Builds a partition from explicit 1-based cells, which must be nonempty,
    /// disjoint and cover `{1..degree}`.
    pub fn from_cells(degree: usize, cells: &[Vec<usize>]) -> Result<Self> {
        let mut cell_of = vec![usize::MAX; degree];
        for (index, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidPartition(format!(
                    "cell {} is empty",
                    index + 1
                )));
            }
            for &p in cell {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if cell_of[p - 1] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "point {p} is listed more than once"
                    )));
                }
                cell_of[p - 1] = index;
            }
        }
        if let Some(missing) = cell_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "point {} is not listed",
                missing + 1
            )));
        }
        Ok(Partition {
            cell_of,
            cells: cells.len(),
        })
    }

    /// Parses `"1 3 5; 2 4"`: semicolon-separated cells of whitespace-separated points.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut cells = Vec::new();
        for chunk in text.split(';') {
            let cell = chunk
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::InvalidPartition(format!("'{tok}' is not a point")))
                })
                .collect::<Result<Vec<_>>>()?;
            cells.push(cell);
        }
        Partition::from_cells(degree, &cells)
    }

    pub fn degree(&self) -> usize {
        self.cell_of.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cells
    }

    /// Cell index of the 0-based point `x`.
    pub fn cell_of(&self, x: usize) -> usize {
        self.cell_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.cell_of
    }

    /// Cells as sorted 1-based point lists, in cell-index order.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.cells];
        for (x, &c) in self.cell_of.iter().enumerate() {
            out[c].push(x + 1);
        }
        out
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.cells];
        for &c in &self.cell_of {
            sizes[c] += 1;
        }
        sizes
    }

    /// True if `g` maps every cell onto itself.
    pub fn is_preserved_by(&self, g: &Permutation) -> bool {
        self.cell_of
            .iter()
            .enumerate()
            .all(|(x, &c)| self.cell_of[g.apply(x)] == c)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, cell) in self.cells().iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (j, p) in cell.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}
