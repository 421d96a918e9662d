//! Hypergraphs on `{1..m}`, the hyperpath family whose asymmetry breaks the
//! symmetry of `J(m, ell)`, and the induced two-cell partitions.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::subsets::k_subsets;

/// Largest vertex count for the exhaustive automorphism scan.
pub const MAX_SCAN_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: usize,
    /// Sorted 1-based edges, in insertion order.
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for mut edge in edges {
            if edge.is_empty() {
                return Err(Error::BadParameters(
                    "hypergraph edges must be nonempty".into(),
                ));
            }
            if edge.iter().any(|&p| p == 0 || p > vertices) {
                return Err(Error::EdgeOutOfRange { edge, vertices });
            }
            edge.sort_unstable();
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BadParameters(format!(
                    "edge {edge:?} repeats a vertex"
                )));
            }
            if !seen.insert(edge.clone()) {
                return Err(Error::DuplicateEdge(edge));
            }
            normalized.push(edge);
        }
        Ok(Hypergraph {
            vertices,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    fn edge_masks(&self) -> Vec<u64> {
        self.edges
            .iter()
            .map(|e| e.iter().fold(0u64, |acc, &p| acc | 1 << (p - 1)))
            .collect()
    }

    fn scan(&self) -> Result<impl Iterator<Item = Permutation> + '_> {
        let m = self.vertices;
        if m > MAX_SCAN_VERTICES {
            return Err(Error::BadParameters(format!(
                "hypergraph automorphism scan is limited to {MAX_SCAN_VERTICES} vertices"
            )));
        }
        let masks = self.edge_masks();
        let edge_set: HashSet<u64> = masks.iter().copied().collect();
        Ok((0..m).permutations(m).filter_map(move |images| {
            let preserved = masks.iter().all(|&e| {
                let image = (0..m)
                    .filter(|&x| e & (1 << x) != 0)
                    .fold(0u64, |acc, x| acc | 1 << images[x]);
                edge_set.contains(&image)
            });
            preserved.then(|| Permutation::from_images(images).unwrap())
        }))
    }

    /// Every vertex permutation mapping the edge set onto itself, in
    /// lexicographic order.
    pub fn automorphisms(&self) -> Result<Vec<Permutation>> {
        Ok(self.scan()?.collect())
    }

    pub fn is_asymmetric(&self) -> Result<bool> {
        Ok(!self.scan()?.any(|g| !g.is_identity()))
    }
}

/// The consecutive windows `{i, ..., i + ell - 1}` on `{1..vertices}`, plus
/// an optional extra edge.
pub fn modified_hyperpath(
    vertices: usize,
    ell: usize,
    extra_edge: Option<&[usize]>,
) -> Result<Hypergraph> {
    if ell < 3 || vertices < ell + 2 {
        return Err(Error::BadParameters(format!(
            "hyperpath needs l >= 3 and at least l + 2 vertices, got {vertices} vertices, l = {ell}"
        )));
    }
    let mut edges: Vec<Vec<usize>> = (1..=vertices - ell + 1)
        .map(|i| (i..i + ell).collect())
        .collect();
    if let Some(extra) = extra_edge {
        edges.push(extra.to_vec());
    }
    Hypergraph::new(vertices, edges)
}

/// The first extra `ell`-subset (lexicographically) that makes the hyperpath
/// on `vertices` points asymmetric.
pub fn first_asymmetric_hyperpath(vertices: usize, ell: usize) -> Result<Option<Hypergraph>> {
    let windows = modified_hyperpath(vertices, ell, None)?;
    for subset in k_subsets(vertices, ell) {
        let extra: Vec<usize> = subset.into_iter().map(|x| x + 1).collect();
        if windows.edges().contains(&extra) {
            continue;
        }
        let h = modified_hyperpath(vertices, ell, Some(&extra))?;
        if h.is_asymmetric()? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Two-cell partition of the vertices of `J(m, ell)`: the `ell`-subsets that
/// are edges of `h`, then the rest. Collapses to one cell when `h` has no
/// edges or every `ell`-subset as an edge.
pub fn hypergraph_partition(h: &Hypergraph, m: usize, ell: usize) -> Result<Partition> {
    let mut edges = HashSet::new();
    for e in h.edges() {
        if e.len() != ell || e.iter().any(|&p| p > m) {
            return Err(Error::EdgeNotAnLSubset {
                edge: e.clone(),
                size: ell,
            });
        }
        edges.insert(e.iter().map(|&p| p - 1).collect::<Vec<_>>());
    }
    let labels: Vec<usize> = k_subsets(m, ell)
        .iter()
        .map(|s| usize::from(!edges.contains(s)))
        .collect();
    Ok(Partition::from_labels(&labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::distinguish::is_distinguishing;

    #[test]
    fn plain_windows_are_symmetric() {
        let h = modified_hyperpath(6, 3, None).unwrap();
        assert_eq!(h.edges().len(), 4);
        let auts = h.automorphisms().unwrap();
        assert_eq!(auts.len(), 2);
        assert_eq!(auts[1].images(), &[5, 4, 3, 2, 1, 0]);
        assert!(!h.is_asymmetric().unwrap());
        for (v, ell) in [(5, 3), (8, 3), (9, 4), (10, 5)] {
            let h = modified_hyperpath(v, ell, None).unwrap();
            assert_eq!(h.edges().len(), v - ell + 1);
        }
    }

    #[test]
    fn extra_edge_on_six_points() {
        // {2,3,5} has a mirror image {2,4,5} that is not an edge, so the
        // reflection is broken; the scan decides whether anything else survives.
        let h = modified_hyperpath(6, 3, Some(&[2, 3, 5])).unwrap();
        let auts = h.automorphisms().unwrap();
        assert!(auts[0].is_identity());
        assert_eq!(h.is_asymmetric().unwrap(), auts.len() == 1);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            modified_hyperpath(6, 2, None),
            Err(Error::BadParameters(_))
        ));
        assert!(matches!(
            modified_hyperpath(4, 3, None),
            Err(Error::BadParameters(_))
        ));
        assert!(matches!(
            modified_hyperpath(6, 3, Some(&[1, 2, 9])),
            Err(Error::EdgeOutOfRange { .. })
        ));
        assert!(matches!(
            modified_hyperpath(6, 3, Some(&[1, 2, 3])),
            Err(Error::DuplicateEdge(_))
        ));
        let big = Hypergraph::new(11, vec![vec![1]]).unwrap();
        assert!(big.automorphisms().is_err());
    }

    #[test]
    fn partitions_from_hypergraphs() {
        let s6 = corpus::symmetric(6).induced_subset_action(3).unwrap();
        let all = Hypergraph::new(
            6,
            k_subsets(6, 3)
                .into_iter()
                .map(|s| s.iter().map(|x| x + 1).collect())
                .collect(),
        )
        .unwrap();
        let p = hypergraph_partition(&all, 6, 3).unwrap();
        assert_eq!(p.num_cells(), 1);
        assert!(!is_distinguishing(&s6, &p, 1000).unwrap());
        let empty = Hypergraph::new(6, vec![]).unwrap();
        assert_eq!(hypergraph_partition(&empty, 6, 3).unwrap().num_cells(), 1);
        let h = modified_hyperpath(6, 3, None).unwrap();
        assert!(matches!(
            hypergraph_partition(&h, 6, 4),
            Err(Error::EdgeNotAnLSubset { .. })
        ));
        assert!(matches!(
            hypergraph_partition(&h, 5, 3),
            Err(Error::EdgeNotAnLSubset { .. })
        ));
    }

    #[test]
    fn asymmetric_hyperpaths_give_distinguishing_partitions() {
        for vertices in [6, 7] {
            let sm = corpus::symmetric(vertices)
                .induced_subset_action(3)
                .unwrap();
            let windows = modified_hyperpath(vertices, 3, None).unwrap();
            for subset in k_subsets(vertices, 3) {
                let extra: Vec<usize> = subset.iter().map(|x| x + 1).collect();
                if windows.edges().contains(&extra) {
                    continue;
                }
                let h = modified_hyperpath(vertices, 3, Some(&extra)).unwrap();
                let p = hypergraph_partition(&h, vertices, 3).unwrap();
                // The stabilizer of the partition is exactly Aut(h).
                let asym = h.is_asymmetric().unwrap();
                assert_eq!(
                    is_distinguishing(&sm, &p, 10_000).unwrap(),
                    asym,
                    "{extra:?}"
                );
            }
        }
    }
}
