//! Small combinatorial helpers shared by the induced actions and Johnson graphs.

/// Binomial coefficient; panics on overflow.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial coefficient overflows usize")
}

/// All `k`-subsets of `0..n` as sorted vectors, in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations(k).collect()
}

/// Lexicographic rank of a sorted `k`-subset of `0..n`.
pub fn subset_rank(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut rank = 0;
    let mut prev = 0;
    for (i, &x) in subset.iter().enumerate() {
        for y in prev..x {
            rank += binomial(n - y - 1, k - i - 1);
        }
        prev = x + 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn rank_matches_enumeration() {
        for n in 0..9 {
            for k in 0..=n {
                for (i, s) in k_subsets(n, k).iter().enumerate() {
                    assert_eq!(subset_rank(n, s), i, "n={n} k={k} s={s:?}");
                }
            }
        }
    }
}
