//! Permutation groups given by generators.

mod blocks;
mod chain;
pub mod file;

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

pub use blocks::Block;
use chain::StabilizerChain;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::subsets::{k_subsets, subset_rank};

/// Default limit on the number of elements any exhaustive scan may list.
pub const DEFAULT_ELEMENT_CAP: u64 = 1_000_000;

/// A permutation group on `{1..v}`.
///
/// The stabilizer chain and the element list are built on first use and
/// cached; both caches are safe to initialise from several threads.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
    elements: OnceLock<Vec<Permutation>>,
}

impl PermGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators
            .first()
            .ok_or(Error::EmptyGeneratorList)?
            .degree();
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
            elements: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(vec![Permutation::identity(degree)]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    /// Base points of the stabilizer chain (0-based).
    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.chain().strong_generators()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// Fails with [`Error::OrderExceedsCap`] when `|G| > cap`.
    pub fn check_cap(&self, cap: u64) -> Result<()> {
        let order = self.order();
        match order.to_u64() {
            Some(n) if n <= cap => Ok(()),
            _ => Err(Error::OrderExceedsCap { order, cap }),
        }
    }

    /// All elements, sorted lexicographically by image table.
    pub fn elements(&self, cap: u64) -> Result<&[Permutation]> {
        self.check_cap(cap)?;
        Ok(self.elements.get_or_init(|| {
            let mut all = self.chain().elements();
            all.sort_unstable();
            all
        }))
    }

    /// Orbit partition of the points; cells are numbered by their least point.
    pub fn orbits(&self) -> Partition {
        let mut label = vec![usize::MAX; self.degree];
        for start in 0..self.degree {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = start;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for g in &self.generators {
                    let y = g.apply(x);
                    if label[y] == usize::MAX {
                        label[y] = start;
                        stack.push(y);
                    }
                }
            }
        }
        Partition::from_labels(&label)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().num_cells() == 1
    }

    /// Smallest block containing the 1-based points `a` and `b`.
    pub fn minimal_block(&self, a: usize, b: usize) -> Result<Block> {
        for p in [a, b] {
            if p == 0 || p > self.degree {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
        }
        if a == b {
            return Err(Error::EqualPoints(a));
        }
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        Ok(Block::from_zero_based(blocks::minimal_block(
            self.degree,
            &self.generators,
            a - 1,
            b - 1,
        )))
    }

    /// A block strictly between a singleton and the whole set, if one exists.
    /// `None` for intransitive groups.
    pub fn nontrivial_block(&self) -> Option<Block> {
        if !self.is_transitive() {
            return None;
        }
        (2..=self.degree)
            .map(|b| self.minimal_block(1, b).unwrap())
            .find(|block| block.len() < self.degree)
    }

    pub fn is_primitive(&self) -> bool {
        self.is_transitive() && self.nontrivial_block().is_none()
    }

    /// Least number of points moved by a nonidentity element.
    pub fn minimum_degree(&self, cap: u64) -> Result<usize> {
        if self.is_trivial() {
            return Err(Error::TrivialGroup);
        }
        let elements = self.elements(cap)?;
        Ok(elements
            .iter()
            .map(Permutation::support_size)
            .filter(|&s| s > 0)
            .min()
            .expect("nontrivial group has a nonidentity element"))
    }

    /// True iff the only element mapping the 1-based subset onto itself is
    /// the identity.
    pub fn setwise_stabilizer_is_trivial(&self, subset: &[usize], cap: u64) -> Result<bool> {
        let mut member = vec![false; self.degree];
        for &p in subset {
            if p == 0 || p > self.degree {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
            member[p - 1] = true;
        }
        let elements = self.elements(cap)?;
        Ok(!elements
            .iter()
            .filter(|g| !g.is_identity())
            .any(|g| (0..self.degree).all(|x| member[g.apply(x)] == member[x])))
    }

    /// True iff the group contains the alternating group of its degree,
    /// decided by `2·|G| ≥ v!`.
    pub fn contains_alternating(&self) -> bool {
        let factorial: BigUint = (1..=self.degree).map(BigUint::from).product();
        self.order() * 2u32 >= factorial
    }

    /// The action on `ell`-subsets of the points, ordered lexicographically.
    pub fn induced_subset_action(&self, ell: usize) -> Result<PermGroup> {
        if ell == 0 || ell > self.degree {
            return Err(Error::BadSubsetSize {
                size: ell,
                degree: self.degree,
            });
        }
        let subsets = k_subsets(self.degree, ell);
        let generators = self
            .generators
            .iter()
            .map(|g| induced_permutation(g, &subsets))
            .collect();
        PermGroup::new(generators)
    }
}

/// The permutation `g` induces on the given lexicographic list of subsets.
pub(crate) fn induced_permutation(g: &Permutation, subsets: &[Vec<usize>]) -> Permutation {
    let n = g.degree();
    let images = subsets
        .iter()
        .map(|s| {
            let mut image: Vec<usize> = s.iter().map(|&x| g.apply(x)).collect();
            image.sort_unstable();
            subset_rank(n, &image)
        })
        .collect();
    Permutation::from_images(images).expect("induced map is a bijection")
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::corpus;

    fn perm(text: &str, degree: usize) -> Permutation {
        Permutation::parse(text, degree).unwrap()
    }

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(gens.iter().map(|g| perm(g, degree)).collect()).unwrap()
    }

    /// Closure of the generators under multiplication, used as an
    /// independent order oracle.
    fn closure(g: &PermGroup) -> HashSet<Permutation> {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let id = Permutation::identity(g.degree());
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for s in g.generators() {
                let y = x.compose(s).unwrap();
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    fn brute_force_minimal_block(g: &PermGroup, a: usize, b: usize) -> Vec<usize> {
        let v = g.degree();
        let elements = closure(g);
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..(1 << v) {
            if mask & (1 << (a - 1)) == 0 || mask & (1 << (b - 1)) == 0 {
                continue;
            }
            let is_block = elements.iter().all(|e| {
                let image: u32 = (0..v)
                    .filter(|&x| mask & (1 << x) != 0)
                    .map(|x| 1 << e.apply(x))
                    .sum();
                image == mask || image & mask == 0
            });
            if is_block
                && best
                    .as_ref()
                    .is_none_or(|b| mask.count_ones() < b.len() as u32)
            {
                best = Some(
                    (0..v)
                        .filter(|&x| mask & (1 << x) != 0)
                        .map(|x| x + 1)
                        .collect(),
                );
            }
        }
        best.unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            PermGroup::new(vec![]).unwrap_err(),
            Error::EmptyGeneratorList
        );
        assert_eq!(
            PermGroup::new(vec![Permutation::identity(3), Permutation::identity(4)]).unwrap_err(),
            Error::DegreeMismatch {
                expected: 3,
                found: 4
            }
        );
    }

    #[test]
    fn orders() {
        assert_eq!(
            group(5, &["(1 2)", "(1 2 3 4 5)"]).order(),
            BigUint::from(120u32)
        );
        assert_eq!(group(4, &["()"]).order(), BigUint::from(1u32));
        assert_eq!(
            group(4, &["(1 2)", "(1 2 3 4)"]).order(),
            BigUint::from(24u32)
        );
        assert_eq!(group(7, &["(1 2 3 4 5 6 7)"]).order(), BigUint::from(7u32));
        let s5_pairs = corpus::symmetric(5).induced_subset_action(2).unwrap();
        assert_eq!(s5_pairs.degree(), 10);
        assert_eq!(s5_pairs.order(), BigUint::from(120u32));
        assert_eq!(closure(&s5_pairs).len(), 120);
        let s4_pairs = corpus::symmetric(4).induced_subset_action(2).unwrap();
        assert_eq!(
            (s4_pairs.degree(), s4_pairs.order()),
            (6, BigUint::from(24u32))
        );
        assert_eq!(closure(&s4_pairs).len(), 24);
    }

    #[test]
    fn order_matches_closure_on_corpus() {
        for entry in corpus::entries() {
            let g = entry.group();
            if g.order() > BigUint::from(50_000u32) {
                continue;
            }
            assert_eq!(
                BigUint::from(closure(&g).len()),
                g.order(),
                "{}",
                entry.name
            );
        }
    }

    #[test]
    fn enumeration() {
        let t = PermGroup::trivial(3);
        assert_eq!(t.elements(10).unwrap(), &[Permutation::identity(3)]);
        assert_eq!(corpus::cyclic(3).elements(10).unwrap().len(), 3);
        let s5_pairs = corpus::symmetric(5).induced_subset_action(2).unwrap();
        let elements = s5_pairs.elements(DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(elements.len(), 120);
        let set: HashSet<_> = elements.iter().cloned().collect();
        assert_eq!(set, closure(&s5_pairs));
        assert!(elements.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            s5_pairs.elements(100),
            Err(Error::OrderExceedsCap { cap: 100, .. })
        ));
    }

    #[test]
    fn membership() {
        let s5_pairs = corpus::symmetric(5).induced_subset_action(2).unwrap();
        let members: HashSet<_> = s5_pairs.elements(1000).unwrap().iter().cloned().collect();
        assert!(members.iter().all(|g| s5_pairs.contains(g)));
        // (1 2) on points is not induced by any point permutation of 5 letters.
        assert!(!s5_pairs.contains(&perm("(1 2)", 10)));
        assert!(!s5_pairs.contains(&Permutation::identity(9)));
        let c4 = corpus::cyclic(4);
        assert!(c4.contains(&perm("(1 3)(2 4)", 4)));
        assert!(!c4.contains(&perm("(1 2)", 4)));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(corpus::symmetric(3).orbits().cells(), vec![vec![1, 2, 3]]);
        assert_eq!(
            group(4, &["(1 2)"]).orbits().cells(),
            vec![vec![1, 2], vec![3], vec![4]]
        );
        assert_eq!(
            corpus::cyclic(6).orbits().cells(),
            vec![vec![1, 2, 3, 4, 5, 6]]
        );
        assert!(corpus::cyclic(6).is_transitive());
        assert!(!group(4, &["(1 2)"]).is_transitive());
    }

    #[test]
    fn minimal_block_examples() {
        let c4 = corpus::cyclic(4);
        assert_eq!(c4.minimal_block(1, 3).unwrap().points(), &[1, 3]);
        assert_eq!(brute_force_minimal_block(&c4, 1, 3), vec![1, 3]);
        let s4 = corpus::symmetric(4);
        assert_eq!(s4.minimal_block(1, 2).unwrap().points(), &[1, 2, 3, 4]);
        assert_eq!(brute_force_minimal_block(&s4, 1, 2), vec![1, 2, 3, 4]);
        let c5 = corpus::cyclic(5);
        assert_eq!(c5.minimal_block(1, 2).unwrap().points(), &[1, 2, 3, 4, 5]);
        assert_eq!(c5.minimal_block(1, 1).unwrap_err(), Error::EqualPoints(1));
        assert_eq!(
            group(4, &["(1 2)"]).minimal_block(1, 2).unwrap_err(),
            Error::NotTransitive
        );
    }

    #[test]
    fn minimal_blocks_agree_with_brute_force() {
        for entry in corpus::entries() {
            let g = entry.group();
            if g.degree() > 12 || !g.is_transitive() || g.order() > BigUint::from(20_000u32) {
                continue;
            }
            let elements = g.elements(DEFAULT_ELEMENT_CAP).unwrap();
            for b in 2..=g.degree() {
                let block = g.minimal_block(1, b).unwrap();
                assert_eq!(
                    block.points(),
                    brute_force_minimal_block(&g, 1, b),
                    "{}",
                    entry.name
                );
                assert_eq!(g.degree() % block.len(), 0);
                for e in elements {
                    let image: HashSet<usize> =
                        block.points().iter().map(|&p| e.apply(p - 1) + 1).collect();
                    let same = block.points().iter().all(|p| image.contains(p));
                    let disjoint = block.points().iter().all(|p| !image.contains(p));
                    assert!(same || disjoint);
                }
            }
        }
    }

    #[test]
    fn primitivity() {
        assert!(corpus::cyclic(5).is_primitive());
        assert!(!corpus::cyclic(4).is_primitive());
        assert_eq!(
            corpus::cyclic(4).nontrivial_block().unwrap().points(),
            &[1, 3]
        );
        assert!(corpus::symmetric(5)
            .induced_subset_action(2)
            .unwrap()
            .is_primitive());
        assert!(!group(4, &["(1 2)"]).is_primitive());
        assert!(PermGroup::trivial(1).is_primitive());
        for entry in corpus::entries() {
            let g = entry.group();
            if g.is_transitive() && is_prime(g.degree()) {
                assert!(g.is_primitive(), "{}", entry.name);
            }
        }
    }

    fn is_prime(n: usize) -> bool {
        n >= 2
            && (2..n)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn minimum_degree_examples() {
        for n in 2..=6 {
            assert_eq!(
                corpus::symmetric(n)
                    .minimum_degree(DEFAULT_ELEMENT_CAP)
                    .unwrap(),
                2
            );
        }
        assert_eq!(corpus::cyclic(5).minimum_degree(100).unwrap(), 5);
        let s5_pairs = corpus::symmetric(5).induced_subset_action(2).unwrap();
        assert_eq!(s5_pairs.minimum_degree(1000).unwrap(), 6);
        assert_eq!(
            PermGroup::trivial(3).minimum_degree(10).unwrap_err(),
            Error::TrivialGroup
        );
        assert!(matches!(
            corpus::symmetric(6).minimum_degree(10),
            Err(Error::OrderExceedsCap { .. })
        ));
    }

    #[test]
    fn setwise_stabilizers() {
        assert!(PermGroup::trivial(3)
            .setwise_stabilizer_is_trivial(&[], 10)
            .unwrap());
        assert!(!corpus::cyclic(3)
            .setwise_stabilizer_is_trivial(&[], 10)
            .unwrap());
        assert!(corpus::cyclic(4)
            .setwise_stabilizer_is_trivial(&[1], 10)
            .unwrap());
        assert!(!corpus::cyclic(4)
            .setwise_stabilizer_is_trivial(&[1, 3], 10)
            .unwrap());
        let s5_pairs = corpus::symmetric(5).induced_subset_action(2).unwrap();
        for mask in 0u32..1024 {
            let subset: Vec<usize> = (0..10)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i + 1)
                .collect();
            assert!(!s5_pairs
                .setwise_stabilizer_is_trivial(&subset, 1000)
                .unwrap());
        }
    }

    #[test]
    fn alternating_containment() {
        assert!(corpus::symmetric(4).contains_alternating());
        assert!(corpus::alternating(5).contains_alternating());
        assert!(!corpus::cyclic(6).contains_alternating());
        assert!(!corpus::symmetric(5)
            .induced_subset_action(2)
            .unwrap()
            .contains_alternating());
    }

    #[test]
    fn induced_actions() {
        let s5 = corpus::symmetric(5);
        let same = s5.induced_subset_action(1).unwrap();
        assert_eq!(same.generators(), s5.generators());
        assert_eq!(
            s5.induced_subset_action(0).unwrap_err(),
            Error::BadSubsetSize { size: 0, degree: 5 }
        );
        assert!(s5.induced_subset_action(6).is_err());
        let all = s5.induced_subset_action(5).unwrap();
        assert_eq!(all.degree(), 1);
    }
}
