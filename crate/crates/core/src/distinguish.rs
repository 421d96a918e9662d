//! Distinguishing partitions and the distinguishing number.
//!
//! A partition is distinguishing for `G` when the only element fixing every
//! cell setwise is the identity. All searches enumerate the group once and
//! test candidate colorings against the nonidentity elements, so they are
//! bounded by [`Limits`].

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{PermGroup, DEFAULT_ELEMENT_CAP};
use crate::partition::Partition;

/// Budgets for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order that may be enumerated.
    pub element_cap: u64,
    /// Largest degree for which all `2^v` subsets may be scanned.
    pub subset_scan_max_degree: usize,
    /// Largest number of cells tried by [`distinguishing_number`].
    pub max_colors: usize,
    /// Total colorings [`distinguishing_number`] may examine.
    pub coloring_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            element_cap: DEFAULT_ELEMENT_CAP,
            subset_scan_max_degree: 30,
            max_colors: 8,
            coloring_budget: 100_000_000,
        }
    }
}

/// Nonidentity elements reduced to their moved points, cheapest first.
struct MovedPairs {
    elements: Vec<Vec<(u32, u32)>>,
}

impl MovedPairs {
    fn new(group: &PermGroup, cap: u64) -> Result<Self> {
        let mut elements: Vec<Vec<(u32, u32)>> = group
            .elements(cap)?
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| {
                g.support()
                    .into_iter()
                    .map(|x| (x as u32, g.apply(x) as u32))
                    .collect()
            })
            .collect();
        // Stable sort keeps the lexicographic element order within a support size.
        elements.sort_by_key(Vec::len);
        Ok(MovedPairs { elements })
    }

    fn preserves(pairs: &[(u32, u32)], labels: &[u32]) -> bool {
        pairs
            .iter()
            .all(|&(x, y)| labels[x as usize] == labels[y as usize])
    }

    /// Checks whether any nonidentity element preserves the coloring.
    /// `hint` caches the index of the last element that did, which is tried
    /// first next time.
    fn is_distinguishing(&self, labels: &[u32], hint: &mut usize) -> bool {
        if let Some(pairs) = self.elements.get(*hint) {
            if Self::preserves(pairs, labels) {
                return false;
            }
        }
        match self
            .elements
            .iter()
            .position(|pairs| Self::preserves(pairs, labels))
        {
            Some(i) => {
                *hint = i;
                false
            }
            None => true,
        }
    }
}

/// True iff no nonidentity element of `group` fixes every cell of `partition`.
pub fn is_distinguishing(group: &PermGroup, partition: &Partition, cap: u64) -> Result<bool> {
    if partition.degree() != group.degree() {
        return Err(Error::DegreeMismatch {
            expected: group.degree(),
            found: partition.degree(),
        });
    }
    Ok(!group
        .elements(cap)?
        .iter()
        .any(|g| !g.is_identity() && partition.is_preserved_by(g)))
}

/// Least subset (shortest first, then lexicographic) whose setwise
/// stabilizer is trivial, as sorted 1-based points; `None` if no subset has
/// a trivial stabilizer.
pub fn find_distinguishing_subset(
    group: &PermGroup,
    limits: &Limits,
) -> Result<Option<Vec<usize>>> {
    let v = group.degree();
    if v > limits.subset_scan_max_degree {
        return Err(Error::SearchBudgetExceeded { k: 2 });
    }
    let pairs = MovedPairs::new(group, limits.element_cap)?;
    let mut labels = vec![0u32; v];
    let mut hint = 0;
    // A subset and its complement have the same stabilizer.
    for size in 0..=v / 2 {
        for subset in (0..v).combinations(size) {
            labels.iter_mut().for_each(|l| *l = 0);
            for &x in &subset {
                labels[x] = 1;
            }
            if pairs.is_distinguishing(&labels, &mut hint) {
                return Ok(Some(subset.into_iter().map(|x| x + 1).collect()));
            }
        }
    }
    Ok(None)
}

/// Outcome of [`distinguishing_number`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distinguishing {
    pub number: usize,
    /// The least distinguishing partition with `number` cells, in
    /// restricted-growth order.
    pub witness: Partition,
}

/// Least number of cells in a distinguishing partition.
///
/// For each `k = 1, 2, ...` the partitions into at most `k` cells are
/// enumerated as restricted growth strings (the first point of each new cell
/// takes the next unused color), which removes the color-permutation
/// symmetry from the search.
pub fn distinguishing_number(group: &PermGroup, limits: &Limits) -> Result<Distinguishing> {
    let v = group.degree();
    let pairs = MovedPairs::new(group, limits.element_cap)?;
    if pairs.elements.is_empty() {
        return Ok(Distinguishing {
            number: 1,
            witness: Partition::whole(v),
        });
    }
    let mut examined: u64 = 0;
    let mut hint = 0;
    for k in 2..=v {
        if k > limits.max_colors {
            return Err(Error::SearchBudgetExceeded { k });
        }
        let mut labels = vec![0u32; v];
        let mut prefix_max = vec![0u32; v];
        loop {
            examined += 1;
            if examined > limits.coloring_budget {
                return Err(Error::SearchBudgetExceeded { k });
            }
            if pairs.is_distinguishing(&labels, &mut hint) {
                let labels: Vec<usize> = labels.iter().map(|&l| l as usize).collect();
                return Ok(Distinguishing {
                    number: k,
                    witness: Partition::from_labels(&labels),
                });
            }
            if !next_growth_string(&mut labels, &mut prefix_max, k as u32) {
                break;
            }
        }
    }
    unreachable!("the partition into singletons is distinguishing")
}

/// Advances to the next restricted growth string with values below `k`.
fn next_growth_string(labels: &mut [u32], prefix_max: &mut [u32], k: u32) -> bool {
    for i in (1..labels.len()).rev() {
        if labels[i] + 1 < k && labels[i] <= prefix_max[i - 1] {
            labels[i] += 1;
            prefix_max[i] = prefix_max[i - 1].max(labels[i]);
            for j in i + 1..labels.len() {
                labels[j] = 0;
                prefix_max[j] = prefix_max[i];
            }
            return true;
        }
    }
    false
}

/// Number of orbits of `group` on the power set of its points, as the
/// average of `2^(cycle count)` over the group.
pub fn subset_orbit_count(group: &PermGroup, cap: u64) -> Result<BigUint> {
    let elements = group.elements(cap)?;
    let sum = elements.iter().fold(BigUint::zero(), |acc, g| {
        acc + (BigUint::one() << g.cycle_count())
    });
    let order = BigUint::from(elements.len());
    if !(&sum % &order).is_zero() {
        return Err(Error::NonIntegerAverage { sum, order });
    }
    Ok(sum / order)
}

/// `(|G| − 1)^2 ≥ 2^δ`, the integer form of `|G| ≥ 1 + 2^(δ/2)`.
pub fn order_bound_holds(order: &BigUint, minimum_degree: usize) -> bool {
    if order.is_zero() {
        return false;
    }
    let m = order - 1u32;
    &m * &m >= BigUint::one() << minimum_degree
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderBoundReport {
    pub order: BigUint,
    pub distinguishing_number: usize,
    /// `None` for the trivial group.
    pub minimum_degree: Option<usize>,
    /// The order bound when the distinguishing number is at least three;
    /// vacuously true otherwise.
    pub bound_ok: bool,
}

/// Checks that a group with distinguishing number at least three satisfies
/// `|G| ≥ 1 + 2^(δ/2)`.
pub fn check_order_bound(group: &PermGroup, limits: &Limits) -> Result<OrderBoundReport> {
    let d = distinguishing_number(group, limits)?.number;
    let order = group.order();
    let minimum_degree = if group.is_trivial() {
        None
    } else {
        Some(group.minimum_degree(limits.element_cap)?)
    };
    let bound_ok = match minimum_degree {
        Some(delta) if d >= 3 => order_bound_holds(&order, delta),
        _ => true,
    };
    Ok(OrderBoundReport {
        order,
        distinguishing_number: d,
        minimum_degree,
        bound_ok,
    })
}
