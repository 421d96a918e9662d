use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::subsets::k_subsets;

use super::{Graph, VertexLabel};

pub fn complete_graph(n: usize) -> Graph {
    let adjacency = (0..n)
        .map(|u| (0..n).filter(|&v| v != u).collect())
        .collect();
    Graph::from_adjacency(adjacency)
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameters(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// `J(m, ell)`: vertices are the `ell`-subsets of `{1..m}` in lexicographic
/// order, adjacent when they share `ell - 1` points.
pub fn johnson_graph(m: usize, ell: usize) -> Result<Graph> {
    if ell == 0 || ell >= m || m > 128 {
        return Err(Error::BadParameters(format!(
            "Johnson graph needs 1 <= l <= m - 1 and m <= 128, got m = {m}, l = {ell}"
        )));
    }
    let subsets = k_subsets(m, ell);
    let masks: Vec<u128> = subsets
        .iter()
        .map(|s| s.iter().fold(0u128, |acc, &x| acc | 1 << x))
        .collect();
    let adjacency = masks
        .iter()
        .map(|&a| {
            masks
                .iter()
                .enumerate()
                .filter(|&(_, &b)| (a & b).count_ones() as usize == ell - 1)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let labels = subsets
        .into_iter()
        .map(|s| VertexLabel::Subset(s.into_iter().map(|x| x + 1).collect()))
        .collect();
    Graph::from_adjacency(adjacency).with_labels(labels)
}

fn coordinates(g: &Graph, v: usize) -> Vec<usize> {
    match g.labels().map(|l| &l[v]) {
        Some(VertexLabel::Tuple(t)) => t.clone(),
        _ => vec![v + 1],
    }
}

/// `X □ Y` with vertex `(x, y)` at index `x·|Y| + y`. Two vertices are
/// adjacent when they agree in one coordinate and are adjacent in the other.
pub fn cartesian_product(x: &Graph, y: &Graph) -> Graph {
    let ny = y.vertex_count();
    let n = x.vertex_count() * ny;
    let mut adjacency = vec![Vec::new(); n];
    for a in 0..x.vertex_count() {
        for b in 0..ny {
            let list = &mut adjacency[a * ny + b];
            list.extend(x.neighbors(a).iter().map(|&a2| a2 * ny + b));
            list.extend(y.neighbors(b).iter().map(|&b2| a * ny + b2));
        }
    }
    let labels = (0..x.vertex_count())
        .flat_map(|a| (0..ny).map(move |b| (a, b)))
        .map(|(a, b)| {
            let mut coords = coordinates(x, a);
            coords.extend(coordinates(y, b));
            VertexLabel::Tuple(coords)
        })
        .collect();
    Graph::from_adjacency(adjacency)
        .with_labels(labels)
        .expect("product coordinates are distinct")
}

/// `X^{□n}`, vertices as row-major `n`-tuples of vertices of `X`.
pub fn cartesian_power(x: &Graph, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameters("Cartesian power needs n >= 1".into()));
    }
    let base = x
        .clone()
        .with_labels(
            (0..x.vertex_count())
                .map(|v| VertexLabel::Tuple(vec![v + 1]))
                .collect(),
        )
        .unwrap();
    let mut acc = base.clone();
    for _ in 1..n {
        acc = cartesian_product(&acc, &base);
    }
    Ok(acc)
}

/// Automorphisms of `X^{□n}` built from automorphisms of `X`: each generator
/// of `base` acting on the first coordinate, plus the coordinate
/// transposition `(1 2)` and the coordinate cycle `(1 2 ... n)`.
pub fn power_automorphisms(base: &PermGroup, n: usize) -> Vec<Permutation> {
    let v = base.degree();
    let total = v.pow(n as u32);
    let digits = |mut index: usize| -> Vec<usize> {
        let mut d = vec![0; n];
        for slot in d.iter_mut().rev() {
            *slot = index % v;
            index /= v;
        }
        d
    };
    let index = |d: &[usize]| d.iter().fold(0, |acc, &x| acc * v + x);
    let from_map = |f: &dyn Fn(Vec<usize>) -> Vec<usize>| {
        Permutation::from_images((0..total).map(|i| index(&f(digits(i)))).collect())
            .expect("coordinate maps are bijections")
    };
    let mut out: Vec<Permutation> = base
        .generators()
        .iter()
        .map(|g| {
            from_map(&|mut d| {
                d[0] = g.apply(d[0]);
                d
            })
        })
        .collect();
    if n >= 2 {
        out.push(from_map(&|mut d| {
            d.swap(0, 1);
            d
        }));
        out.push(from_map(&|mut d| {
            d.rotate_right(1);
            d
        }));
    }
    out
}

/// Vertices are the edges of `x` in lexicographic order, adjacent when they
/// share an endpoint; labelled by their endpoint pair.
pub fn line_graph(x: &Graph) -> Result<Graph> {
    let edges = x.edges();
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let adjacency = edges
        .iter()
        .map(|&(a, b)| {
            edges
                .iter()
                .enumerate()
                .filter(|&(_, &(c, d))| (a, b) != (c, d) && (a == c || a == d || b == c || b == d))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let labels = edges
        .iter()
        .map(|&(a, b)| VertexLabel::Subset(vec![a + 1, b + 1]))
        .collect();
    Graph::from_adjacency(adjacency).with_labels(labels)
}

fn t_graph_edges(m: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
    edges.push((2, 4));
    edges
}

/// The path `1–2–…–m` with the extra edge `{2, 4}`.
pub fn t_graph(m: usize) -> Result<Graph> {
    if m < 4 {
        return Err(Error::BadParameters(format!("T_m needs m >= 4, got {m}")));
    }
    Graph::from_edges(m, &t_graph_edges(m))
}

/// Two-cell partition of the vertices of `J(m, 2)`: the 2-subsets that are
/// edges of `T_m`, then the rest.
pub fn tm_partition(m: usize) -> Result<Partition> {
    if m < 4 {
        return Err(Error::BadParameters(format!("T_m needs m >= 4, got {m}")));
    }
    let edges = t_graph_edges(m);
    let labels: Vec<usize> = k_subsets(m, 2)
        .iter()
        .map(|s| usize::from(!edges.contains(&(s[0] + 1, s[1] + 1))))
        .collect();
    Ok(Partition::from_labels(&labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::binomial;

    #[test]
    fn johnson_examples() {
        let j = johnson_graph(5, 2).unwrap();
        assert_eq!((j.vertex_count(), j.is_regular()), (10, Some(6)));
        let j = johnson_graph(4, 2).unwrap();
        assert_eq!((j.vertex_count(), j.is_regular()), (6, Some(4)));
        for m in 2..=7 {
            let identity: Vec<usize> = (0..m).collect();
            assert!(johnson_graph(m, 1)
                .unwrap()
                .is_isomorphism(&complete_graph(m), &identity));
        }
        for m in 2..=8 {
            for ell in 1..m {
                let j = johnson_graph(m, ell).unwrap();
                assert_eq!(j.vertex_count(), binomial(m, ell));
                assert_eq!(j.is_regular(), Some(ell * (m - ell)));
            }
        }
        assert!(johnson_graph(4, 0).is_err());
        assert!(johnson_graph(4, 4).is_err());
    }

    #[test]
    fn products() {
        let square = cartesian_power(&complete_graph(2), 2).unwrap();
        assert_eq!((square.vertex_count(), square.edge_count()), (4, 4));
        assert_eq!(square.is_regular(), Some(2));
        let cube = cartesian_power(&complete_graph(2), 3).unwrap();
        assert_eq!(
            (cube.vertex_count(), cube.is_regular(), cube.edge_count()),
            (8, Some(3), 12)
        );
        assert_eq!(cube.labels().unwrap()[5], VertexLabel::Tuple(vec![2, 1, 2]));
        let p = cartesian_product(&path_graph(3), &cycle_graph(4).unwrap());
        assert_eq!(p.vertex_count(), 12);
        assert_eq!(p.edge_count(), 2 * 4 + 3 * 4);
        assert!(cartesian_power(&path_graph(2), 0).is_err());
        assert_eq!(cartesian_power(&path_graph(3), 1).unwrap().edge_count(), 2);
    }

    #[test]
    fn line_graphs() {
        let c5 = cycle_graph(5).unwrap();
        let l = line_graph(&c5).unwrap();
        assert_eq!((l.vertex_count(), l.is_regular()), (5, Some(2)));
        let l = line_graph(&path_graph(3)).unwrap();
        assert_eq!((l.vertex_count(), l.edge_count()), (2, 1));
        assert_eq!(line_graph(&path_graph(1)).unwrap_err(), Error::NoEdges);
    }

    #[test]
    fn t_graphs() {
        assert_eq!(t_graph(4).unwrap().edge_count(), 4);
        let mut degrees = t_graph(6).unwrap().degree_sequence();
        assert_eq!(degrees, vec![1, 3, 2, 3, 2, 1]);
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 2, 3, 3]);
        for m in 4..=12 {
            assert_eq!(t_graph(m).unwrap().edge_count(), m);
        }
        assert!(t_graph(3).is_err());
        assert_eq!(tm_partition(6).unwrap().cell_sizes(), vec![6, 9]);
        assert!(tm_partition(3).is_err());
    }
}
