use crate::perm::Permutation;

/// A nonempty set of points, stored 1-based and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block(Vec<usize>);

impl Block {
    pub fn points(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, point: usize) -> bool {
        self.0.binary_search(&point).is_ok()
    }

    pub(crate) fn from_zero_based(mut points: Vec<usize>) -> Self {
        points.sort_unstable();
        Block(points.into_iter().map(|p| p + 1).collect())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        // Smaller representative wins so results do not depend on merge order.
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
    }
}

/// Finest invariant equivalence relation containing `(a, b)` (0-based);
/// returns the class of `a`.
///
/// Atkinson's method: every merged pair `(x, y)` forces `(x^s, y^s)` for each
/// generator `s`.
pub(crate) fn minimal_block(degree: usize, gens: &[Permutation], a: usize, b: usize) -> Vec<usize> {
    let mut uf = UnionFind::new(degree);
    uf.union(a, b);
    let mut queue = vec![(a, b)];
    while let Some((x, y)) = queue.pop() {
        for s in gens {
            let u = uf.find(s.apply(x));
            let w = uf.find(s.apply(y));
            if u != w {
                uf.union(u, w);
                queue.push((u, w));
            }
        }
    }
    let root = uf.find(a);
    (0..degree).filter(|&x| uf.find(x) == root).collect()
}
