//! Finite simple graphs and hypergraphs used to realise Johnson graphs,
//! Cartesian powers and the asymmetric gadgets that break their symmetry.

mod automorphism;
mod builders;
pub mod hypergraph;

use std::fmt;

pub use automorphism::{automorphism_group, is_asymmetric, AutLimits};
pub use builders::{
    cartesian_power, cartesian_product, complete_graph, cycle_graph, johnson_graph, line_graph,
    path_graph, power_automorphisms, t_graph, tm_partition,
};

use crate::distinguish::{distinguishing_number, Distinguishing, Limits};
use crate::error::{Error, Result};

/// Where a vertex came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    /// A subset of `{1..m}`, e.g. a Johnson vertex or an edge of a line graph.
    Subset(Vec<usize>),
    /// Coordinates of a product vertex, 1-based.
    Tuple(Vec<usize>),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close, items) = match self {
            VertexLabel::Subset(s) => ('{', '}', s),
            VertexLabel::Tuple(t) => ('(', ')', t),
        };
        write!(f, "{open}")?;
        for (i, x) in items.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "{close}")
    }
}

impl VertexLabel {
    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        let (ctor, inner): (fn(Vec<usize>) -> VertexLabel, &str) =
            if let Some(inner) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
                (VertexLabel::Subset, inner)
            } else {
                let inner = text.strip_prefix('(')?.strip_suffix(')')?;
                (VertexLabel::Tuple, inner)
            };
        let items = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| x.trim().parse().ok())
                .collect::<Option<Vec<usize>>>()?
        };
        Some(ctor(items))
    }
}

/// Undirected simple graph on vertices `0..n` (1-based in text).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<VertexLabel>>,
}

impl Graph {
    /// Graph on `n` vertices from 1-based edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::EdgeOutOfRange {
                    edge: vec![u, v],
                    vertices: n,
                });
            }
            if u == v {
                return Err(Error::BadParameters(format!("loop at vertex {u}")));
            }
            if adjacency[u - 1].contains(&(v - 1)) {
                return Err(Error::DuplicateEdge(vec![u.min(v), u.max(v)]));
            }
            adjacency[u - 1].push(v - 1);
            adjacency[v - 1].push(u - 1);
        }
        Ok(Graph::from_adjacency(adjacency))
    }

    pub(crate) fn from_adjacency(mut adjacency: Vec<Vec<usize>>) -> Self {
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Graph {
            adjacency,
            labels: None,
        }
    }

    /// Attaches provenance labels; they must be distinct and one per vertex.
    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::BadParameters(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadParameters(
                "vertex labels are not distinct".into(),
            ));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Neighbours of the 0-based vertex `v`, sorted.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// 0-based edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    pub fn is_regular(&self) -> Option<usize> {
        let first = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency
            .iter()
            .all(|a| a.len() == first)
            .then_some(first)
    }

    /// True if the 0-based vertex map `phi` is an isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &Graph, phi: &[usize]) -> bool {
        if self.vertex_count() != other.vertex_count()
            || self.edge_count() != other.edge_count()
            || phi.len() != self.vertex_count()
        {
            return false;
        }
        let mut seen = vec![false; phi.len()];
        for &y in phi {
            if y >= phi.len() || std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        self.edges()
            .iter()
            .all(|&(u, v)| other.has_edge(phi[u], phi[v]))
    }

    /// Edge-list text: an `n <count>` header, one `u v` pair per line, and
    /// labels as `# label <v> <label>` comments.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count());
        if let Some(labels) = &self.labels {
            for (v, l) in labels.iter().enumerate() {
                out.push_str(&format!("# label {} {l}\n", v + 1));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        let mut labels: Vec<(usize, VertexLabel)> = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let err = |message: String| Error::Parse { line, message };
            let trimmed = raw.trim();
            if let Some(comment) = trimmed.strip_prefix('#') {
                if let Some(rest) = comment.trim().strip_prefix("label ") {
                    let (v, label) = rest
                        .trim()
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| err("malformed label comment".into()))?;
                    let v: usize = v.parse().map_err(|_| err(format!("bad vertex '{v}'")))?;
                    let label = VertexLabel::parse(label)
                        .ok_or_else(|| err(format!("bad label '{label}'")))?;
                    labels.push((v, label));
                }
                continue;
            }
            if trimmed.is_empty() {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match (n, fields.as_slice()) {
                (None, ["n", count]) => {
                    n = Some(
                        count
                            .parse::<usize>()
                            .map_err(|_| err(format!("bad count '{count}'")))?,
                    )
                }
                (None, _) => return Err(err(format!("expected 'n <count>', found '{trimmed}'"))),
                (Some(_), [u, v]) => {
                    let u = u.parse().map_err(|_| err(format!("bad vertex '{u}'")))?;
                    let v = v.parse().map_err(|_| err(format!("bad vertex '{v}'")))?;
                    edges.push((u, v));
                }
                (Some(_), _) => return Err(err(format!("expected 'u v', found '{trimmed}'"))),
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 1,
            message: "missing 'n <count>' header".into(),
        })?;
        let graph = Graph::from_edges(n, &edges)?;
        if labels.is_empty() {
            return Ok(graph);
        }
        labels.sort_by_key(|(v, _)| *v);
        if labels.iter().map(|(v, _)| *v).ne(1..=n) {
            return Err(Error::BadParameters(
                "labels must cover every vertex once".into(),
            ));
        }
        graph.with_labels(labels.into_iter().map(|(_, l)| l).collect())
    }
}

/// Distinguishing number of the full automorphism group of `graph`.
pub fn graph_distinguishing_number(
    graph: &Graph,
    aut_limits: &AutLimits,
    limits: &Limits,
) -> Result<Distinguishing> {
    let aut = automorphism_group(graph, aut_limits)?;
    distinguishing_number(&aut, limits)
}
