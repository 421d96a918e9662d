//! Automorphism groups by individualization and colour refinement.
//!
//! A base `b_0, b_1, ...` is chosen by individualizing the least vertex of
//! the first non-singleton cell until refinement is discrete. Working from
//! the deepest level up, each level looks for an automorphism fixing
//! `b_0..b_{i-1}` and sending `b_i` to every candidate not yet in the orbit
//! of `b_i`; the automorphisms found form a strong generating set.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutLimits {
    pub max_vertices: usize,
    /// Search nodes allowed across the whole computation.
    pub node_budget: u64,
}

impl Default for AutLimits {
    fn default() -> Self {
        AutLimits {
            max_vertices: 64,
            node_budget: 10_000_000,
        }
    }
}

struct Search<'a> {
    graph: &'a Graph,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Refines two colourings in lockstep; a vertex of either colouring gets
    /// a new colour from its old colour and the multiset of its neighbours'
    /// colours. Returns false as soon as the colour histograms differ.
    fn refine_pair(&self, a: &mut [u32], b: &mut [u32]) -> bool {
        let n = a.len();
        let mut classes = distinct(a, b);
        loop {
            let signature = |colors: &[u32], v: usize| {
                let mut ns: Vec<u32> = self.graph.neighbors(v).iter().map(|&w| colors[w]).collect();
                ns.sort_unstable();
                (colors[v], ns)
            };
            let sa: Vec<_> = (0..n).map(|v| signature(a, v)).collect();
            let sb: Vec<_> = (0..n).map(|v| signature(b, v)).collect();
            let mut all: Vec<&(u32, Vec<u32>)> = sa.iter().chain(sb.iter()).collect();
            all.sort_unstable();
            all.dedup();
            let rank = |s: &(u32, Vec<u32>)| all.binary_search(&s).unwrap() as u32;
            for v in 0..n {
                a[v] = rank(&sa[v]);
                b[v] = rank(&sb[v]);
            }
            if histogram(a, all.len()) != histogram(b, all.len()) {
                return false;
            }
            if all.len() == classes {
                return true;
            }
            classes = all.len();
        }
    }

    fn find(&mut self, mut a: Vec<u32>, mut b: Vec<u32>) -> Result<Option<Permutation>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded { k: 0 });
        }
        if !self.refine_pair(&mut a, &mut b) {
            return Ok(None);
        }
        let n = a.len();
        let Some(v) = first_in_nontrivial_cell(&a) else {
            let mut position = vec![0; n];
            for w in 0..n {
                position[b[w] as usize] = w;
            }
            let images: Vec<usize> = (0..n).map(|v| position[a[v] as usize]).collect();
            let ok = self
                .graph
                .edges()
                .iter()
                .all(|&(x, y)| self.graph.has_edge(images[x], images[y]));
            return Ok(ok.then(|| Permutation::from_images(images).unwrap()));
        };
        let fresh = a.iter().copied().max().unwrap() + 1;
        let cell = a[v];
        for w in (0..n).filter(|&w| b[w] == cell) {
            let mut a2 = a.clone();
            let mut b2 = b.clone();
            a2[v] = fresh;
            b2[w] = fresh;
            if let Some(found) = self.find(a2, b2)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

fn distinct(a: &[u32], b: &[u32]) -> usize {
    let mut all: Vec<u32> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn histogram(colors: &[u32], classes: usize) -> Vec<usize> {
    let mut h = vec![0; classes];
    for &c in colors {
        h[c as usize] += 1;
    }
    h
}

/// Least vertex whose colour class has more than one member.
fn first_in_nontrivial_cell(colors: &[u32]) -> Option<usize> {
    let classes = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
    let h = histogram(colors, classes);
    (0..colors.len()).find(|&v| h[colors[v] as usize] > 1)
}

/// Colouring with `prefix[j]` individualized as colour `j + 1`.
fn individualized(n: usize, prefix: &[usize]) -> Vec<u32> {
    let mut colors = vec![0u32; n];
    for (j, &v) in prefix.iter().enumerate() {
        colors[v] = j as u32 + 1;
    }
    colors
}

fn orbit_of(point: usize, n: usize, gens: &[Permutation]) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut stack = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Full automorphism group of `graph`, as the group generated by a strong
/// generating set found by search.
pub fn automorphism_group(graph: &Graph, limits: &AutLimits) -> Result<PermGroup> {
    let n = graph.vertex_count();
    if n > limits.max_vertices {
        return Err(Error::BadParameters(format!(
            "automorphism search is limited to {} vertices, graph has {n}",
            limits.max_vertices
        )));
    }
    if n == 0 {
        return Err(Error::BadParameters("graph has no vertices".into()));
    }
    let mut search = Search {
        graph,
        nodes: 0,
        budget: limits.node_budget,
    };

    // Base: individualize until the refined colouring is discrete.
    let mut base = Vec::new();
    loop {
        let mut a = individualized(n, &base);
        let mut b = a.clone();
        search.refine_pair(&mut a, &mut b);
        match first_in_nontrivial_cell(&a) {
            Some(v) => base.push(v),
            None => break,
        }
    }

    let mut generators: Vec<Permutation> = Vec::new();
    for level in (0..base.len()).rev() {
        let prefix = &base[..level];
        let point = base[level];
        let mut a = individualized(n, prefix);
        let mut b = a.clone();
        search.refine_pair(&mut a, &mut b);
        let mut orbit = orbit_of(point, n, &generators);
        for candidate in (0..n).filter(|&c| a[c] == a[point]) {
            if orbit[candidate] {
                continue;
            }
            let mut source = prefix.to_vec();
            source.push(point);
            let mut target = prefix.to_vec();
            target.push(candidate);
            if let Some(g) = search.find(individualized(n, &source), individualized(n, &target))? {
                generators.push(g);
                orbit = orbit_of(point, n, &generators);
            }
        }
    }
    if generators.is_empty() {
        Ok(PermGroup::trivial(n))
    } else {
        PermGroup::new(generators)
    }
}

pub fn is_asymmetric(graph: &Graph, limits: &AutLimits) -> Result<bool> {
    Ok(automorphism_group(graph, limits)?.is_trivial())
}

#[cfg(test)]
mod tests {
    use itertools::Itertools;
    use num_bigint::BigUint;

    use super::*;
    use crate::graph::{
        cartesian_power, complete_graph, cycle_graph, johnson_graph, path_graph, t_graph,
    };

    fn aut_order(g: &Graph) -> BigUint {
        automorphism_group(g, &AutLimits::default())
            .unwrap()
            .order()
    }

    fn brute_force_order(g: &Graph) -> usize {
        let n = g.vertex_count();
        (0..n)
            .permutations(n)
            .filter(|p| g.is_isomorphism(g, p))
            .count()
    }

    #[test]
    fn small_groups() {
        assert_eq!(aut_order(&cycle_graph(4).unwrap()), BigUint::from(8u32));
        assert_eq!(aut_order(&complete_graph(5)), BigUint::from(120u32));
        assert_eq!(aut_order(&path_graph(5)), BigUint::from(2u32));
        assert_eq!(
            aut_order(&johnson_graph(5, 2).unwrap()),
            BigUint::from(120u32)
        );
        assert_eq!(
            aut_order(&johnson_graph(6, 3).unwrap()),
            BigUint::from(1440u32)
        );
        let cube = cartesian_power(&complete_graph(2), 3).unwrap();
        assert_eq!(aut_order(&cube), BigUint::from(48u32));
    }

    #[test]
    fn agrees_with_brute_force() {
        let graphs = [
            t_graph(5).unwrap(),
            t_graph(6).unwrap(),
            cycle_graph(6).unwrap(),
            johnson_graph(4, 2).unwrap(),
            cartesian_power(&path_graph(3), 2).unwrap(),
            Graph::from_edges(7, &[(1, 2), (2, 3), (3, 1), (4, 5), (6, 7)]).unwrap(),
            Graph::from_edges(6, &[]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(aut_order(g), BigUint::from(brute_force_order(g)));
            let aut = automorphism_group(g, &AutLimits::default()).unwrap();
            for s in aut.generators() {
                assert!(g.is_isomorphism(g, s.images()));
            }
        }
    }

    #[test]
    fn t_graph_symmetry() {
        let limits = AutLimits::default();
        assert!(!is_asymmetric(&t_graph(5).unwrap(), &limits).unwrap());
        assert!(is_asymmetric(&t_graph(6).unwrap(), &limits).unwrap());
        assert!(is_asymmetric(&t_graph(10).unwrap(), &limits).unwrap());
    }

    #[test]
    fn limits_are_enforced() {
        let tiny = AutLimits {
            max_vertices: 4,
            ..AutLimits::default()
        };
        assert!(automorphism_group(&path_graph(5), &tiny).is_err());
        let few_nodes = AutLimits {
            node_budget: 1,
            ..AutLimits::default()
        };
        assert!(matches!(
            automorphism_group(&johnson_graph(5, 2).unwrap(), &few_nodes),
            Err(Error::SearchBudgetExceeded { .. })
        ));
    }
}
