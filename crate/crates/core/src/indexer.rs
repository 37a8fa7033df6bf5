//! Rank/unrank bijections between process states and `0..size`.
//!
//! Permutations are ranked in lexicographic order via the Lehmer code and
//! subsets in colexicographic order via combinadics, so ranking and
//! unranking are O(n^2) and O(n) with no hashing.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest n for which n! fits comfortably in a usize state space here.
pub const MAX_PERM_N: usize = 16;

const FACTORIALS: [u64; 17] = {
    let mut f = [1u64; 17];
    let mut i = 1;
    while i < 17 {
        f[i] = f[i - 1] * i as u64;
        i += 1;
    }
    f
};

/// n! for n <= 16.
pub fn factorial(n: usize) -> u64 {
    FACTORIALS[n]
}

/// Binomial coefficient, exact in u64 for the desk-scale ranges used here.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// The indexed state space of a generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum StateSpace {
    /// States are the vertices 0..n of a graph.
    Vertices { n: usize },
    /// States are words w with w[v] = particle occupying vertex v,
    /// i.e. permutations of 0..n, ranked lexicographically.
    Permutations { n: usize },
    /// States are m-element subsets of 0..n (occupied vertex sets),
    /// ranked colexicographically.
    Subsets { n: usize, m: usize },
}

impl StateSpace {
    pub fn size(&self) -> usize {
        match *self {
            StateSpace::Vertices { n } => n,
            StateSpace::Permutations { n } => factorial(n) as usize,
            StateSpace::Subsets { n, m } => binomial(n, m) as usize,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            StateSpace::Vertices { .. } => "vertex",
            StateSpace::Permutations { .. } => "permutation",
            StateSpace::Subsets { .. } => "subset",
        }
    }
}

/// Lexicographic rank of a permutation of 0..n given as a word.
pub fn perm_rank(word: &[u8]) -> usize {
    let n = word.len();
    let mut rank: u64 = 0;
    for i in 0..n {
        let mut smaller = 0u64;
        for j in i + 1..n {
            if word[j] < word[i] {
                smaller += 1;
            }
        }
        rank += smaller * FACTORIALS[n - 1 - i];
    }
    rank as usize
}

/// Inverse of [`perm_rank`]; writes the word into `out`.
pub fn perm_unrank(mut rank: usize, n: usize, out: &mut [u8]) {
    debug_assert_eq!(out.len(), n);
    let mut pool: [u8; MAX_PERM_N] = [0; MAX_PERM_N];
    for (v, slot) in pool.iter_mut().take(n).enumerate() {
        *slot = v as u8;
    }
    for i in 0..n {
        let f = FACTORIALS[n - 1 - i] as usize;
        let idx = rank / f;
        rank %= f;
        out[i] = pool[idx];
        pool.copy_within(idx + 1..n - i, idx);
    }
}

/// Advances `word` to its lexicographic successor; returns false at the last
/// permutation. Used to walk rank order without repeated unranking.
pub fn perm_next(word: &mut [u8]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Colex rank of a strictly increasing m-subset of 0..n.
pub fn subset_rank(subset: &[u8]) -> usize {
    let mut rank: u64 = 0;
    for (i, &c) in subset.iter().enumerate() {
        rank += binomial(c as usize, i + 1);
    }
    rank as usize
}

/// Inverse of [`subset_rank`]; writes the sorted subset into `out`.
pub fn subset_unrank(mut rank: usize, n: usize, m: usize, out: &mut [u8]) {
    debug_assert_eq!(out.len(), m);
    let mut c = n;
    for i in (0..m).rev() {
        // Largest c with C(c, i+1) <= rank.
        while binomial(c, i + 1) as usize > rank {
            c -= 1;
        }
        out[i] = c as u8;
        rank -= binomial(c, i + 1) as usize;
    }
}

/// Checks n! against the state budget.
pub fn check_perm_budget(n: usize, budget: usize, what: &str) -> Result<()> {
    if n > MAX_PERM_N || factorial(n.min(MAX_PERM_N)) as usize > budget {
        return Err(Error::BudgetExceeded {
            what: what.to_string(),
            required: if n > MAX_PERM_N {
                usize::MAX
            } else {
                factorial(n) as usize
            },
            budget,
        });
    }
    Ok(())
}

/// Checks C(n, m) against the state budget.
pub fn check_subset_budget(n: usize, m: usize, budget: usize, what: &str) -> Result<()> {
    let size = binomial(n, m);
    if size > budget as u64 {
        return Err(Error::BudgetExceeded {
            what: what.to_string(),
            required: size as usize,
            budget,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_rank_unrank_roundtrip() {
        for n in 0..=6 {
            let size = factorial(n) as usize;
            let mut word = vec![0u8; n];
            for r in 0..size {
                perm_unrank(r, n, &mut word);
                assert_eq!(perm_rank(&word), r, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn perm_rank_is_lexicographic() {
        let mut word = vec![0u8, 1, 2, 3];
        let mut rank = 0;
        loop {
            assert_eq!(perm_rank(&word), rank);
            rank += 1;
            if !perm_next(&mut word) {
                break;
            }
        }
        assert_eq!(rank, 24);
    }

    #[test]
    fn subset_rank_unrank_roundtrip() {
        for n in 1..=8 {
            for m in 1..n {
                let size = binomial(n, m) as usize;
                let mut subset = vec![0u8; m];
                for r in 0..size {
                    subset_unrank(r, n, m, &mut subset);
                    for w in subset.windows(2) {
                        assert!(w[0] < w[1]);
                    }
                    assert_eq!(subset_rank(&subset), r, "n={n} m={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn budget_checks() {
        assert!(check_perm_budget(9, 4_000_000, "t").is_ok());
        assert!(check_perm_budget(11, 4_000_000, "t").is_err());
        assert!(check_subset_budget(30, 15, 4_000_000, "t").is_err());
    }
}
