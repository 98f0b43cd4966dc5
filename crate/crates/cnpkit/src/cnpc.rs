//! Adjacency and breakpoint metrics between strings, and the profile
//! conforming construction: given two CNPs, build two strings realizing
//! them with the maximum number of common adjacencies.
//!
//! An adjacency is a matched unordered pair of adjacent characters under a
//! maximum matching of 2-substrings; matches between distinct pair values
//! are independent, so the matching size is the sum over pair values of the
//! smaller multiplicity. The construction centers on the componentwise
//! minimum of the two profiles (the unique maximum common sub-vector `v`):
//! laying out `S(v)` as a common substring yields `sum(v) - 1` adjacencies,
//! and one extra adjacency is available exactly when a transfer pair
//! exists. A brute-force oracle over multiset permutations backs this up on
//! small inputs.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::genome::{same_alphabet, Cnp, Genome};

/// Multiplicities of unordered adjacent-symbol pairs of a string. A string
/// of length `m` contributes `max(m - 1, 0)` pairs in total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMultiset {
    counts: BTreeMap<(u32, u32), u64>,
}

impl AdjacencyMultiset {
    pub fn of(g: &Genome) -> AdjacencyMultiset {
        let mut counts = BTreeMap::new();
        for w in g.seq().windows(2) {
            let key = (w[0].min(w[1]), w[0].max(w[1]));
            *counts.entry(key).or_insert(0) += 1;
        }
        AdjacencyMultiset { counts }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Size of the maximum matching between the two pair multisets.
    pub fn matching(&self, other: &AdjacencyMultiset) -> u64 {
        self.counts
            .iter()
            .map(|(key, &n)| n.min(other.counts.get(key).copied().unwrap_or(0)))
            .sum()
    }
}

/// Number of common adjacencies between `a` and `b`.
pub fn adjacencies(a: &Genome, b: &Genome) -> Result<u64> {
    same_alphabet(a.alphabet(), b.alphabet())?;
    Ok(AdjacencyMultiset::of(a).matching(&AdjacencyMultiset::of(b)))
}

/// Unmatched pair counts `(in a, in b)` under the maximum matching.
pub fn breakpoints(a: &Genome, b: &Genome) -> Result<(u64, u64)> {
    let adj = adjacencies(a, b)?;
    let pairs_a = a.len().saturating_sub(1) as u64;
    let pairs_b = b.len().saturating_sub(1) as u64;
    Ok((pairs_a - adj, pairs_b - adj))
}

/// Total breakpoint distance; for non-empty strings this equals
/// `m1 + m2 - 2 * adjacencies - 2`.
pub fn breakpoint_distance(a: &Genome, b: &Genome) -> Result<u64> {
    let (da, db) = breakpoints(a, b)?;
    Ok(da + db)
}

/// Componentwise minimum, which is the unique maximum common sub-vector.
pub fn max_common_subvector(c1: &Cnp, c2: &Cnp) -> Result<Cnp> {
    same_alphabet(c1.alphabet(), c2.alphabet())?;
    let counts = c1
        .counts()
        .iter()
        .zip(c2.counts())
        .map(|(&a, &b)| a.min(b))
        .collect();
    Cnp::new(Arc::clone(c1.alphabet()), counts)
}

/// Finds symbols `(x, y)` with `v(x) >= 1`, `c1(x) > v(x)`, `v(y) >= 1`,
/// `c2(y) > v(y)` — a surplus of `x` on the first side and of `y` on the
/// second, both present in the common part. Smallest alphabet index wins on
/// each side. Such `x` and `y` are automatically distinct: both strict
/// inequalities at one symbol would contradict `v` being the minimum.
pub fn find_transfer_pair(c1: &Cnp, c2: &Cnp, v: &Cnp) -> Result<Option<(u32, u32)>> {
    same_alphabet(c1.alphabet(), c2.alphabet())?;
    same_alphabet(c1.alphabet(), v.alphabet())?;
    let min = max_common_subvector(c1, c2)?;
    if v != &min {
        return Err(Error::InvalidSubvector(format!(
            "{v} is not the componentwise minimum {min}"
        )));
    }
    let x = (0..v.counts().len()).find(|&s| v.counts()[s] >= 1 && c1.counts()[s] > v.counts()[s]);
    let y = (0..v.counts().len()).find(|&s| v.counts()[s] >= 1 && c2.counts()[s] > v.counts()[s]);
    match (x, y) {
        (Some(x), Some(y)) => {
            assert_ne!(x, y, "transfer pair cannot share a symbol");
            Ok(Some((x as u32, y as u32)))
        }
        _ => Ok(None),
    }
}

/// Two strings realizing the input profiles together with their adjacency
/// count and `n_star = sum(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnpcSolution {
    pub s1: Genome,
    pub s2: Genome,
    pub adjacencies: u64,
    pub n_star: u64,
}

/// Total size guard for the construction.
pub const SOLVE_SIZE_GUARD: u64 = 1_000_000;
/// Per-side size guard for the brute-force oracle.
pub const ORACLE_SIZE_GUARD: u64 = 8;

/// Symbols of a count vector laid out in alphabet order.
fn canonical(counts: &[u64]) -> Vec<u32> {
    let mut out = Vec::new();
    for (s, &c) in counts.iter().enumerate() {
        out.extend(std::iter::repeat(s as u32).take(c as usize));
    }
    out
}

/// Builds strings `s1`, `s2` with `cnp(s1) = c1`, `cnp(s2) = c2` maximizing
/// common adjacencies. The count lands on `sum(v)` when a transfer pair
/// exists, on `sum(v) - 1` when the common part is non-empty but no pair
/// exists, and on `0` when the common part is empty.
pub fn cnpc_solve(c1: &Cnp, c2: &Cnp) -> Result<CnpcSolution> {
    same_alphabet(c1.alphabet(), c2.alphabet())?;
    if c1.total() + c2.total() > SOLVE_SIZE_GUARD {
        return Err(Error::SizeGuardExceeded(format!(
            "total profile size {} exceeds the construction guard {SOLVE_SIZE_GUARD}",
            c1.total() + c2.total()
        )));
    }
    let alphabet = Arc::clone(c1.alphabet());
    let v = max_common_subvector(c1, c2)?;
    let n_star = v.total();

    let leftover = |c: &Cnp| -> Vec<u64> {
        c.counts()
            .iter()
            .zip(v.counts())
            .map(|(&c, &v)| c - v)
            .collect()
    };
    let x_left = leftover(c1);
    let y_left = leftover(c2);

    let (seq1, seq2) = if n_star == 0 {
        (canonical(c1.counts()), canonical(c2.counts()))
    } else if let Some((x, y)) = find_transfer_pair(c1, c2, &v)? {
        // s(v) starts with x and ends with y; s1 = s(v)x, s2 = y s(v);
        // leftovers go to the right end in alphabet order.
        let mut middle = v.counts().to_vec();
        middle[x as usize] -= 1;
        middle[y as usize] -= 1;
        let mut sv = vec![x];
        sv.extend(canonical(&middle));
        sv.push(y);

        let mut seq1 = sv.clone();
        seq1.push(x);
        let mut rest1 = x_left;
        rest1[x as usize] -= 1;
        seq1.extend(canonical(&rest1));

        let mut seq2 = vec![y];
        seq2.extend(sv);
        let mut rest2 = y_left;
        rest2[y as usize] -= 1;
        seq2.extend(canonical(&rest2));
        (seq1, seq2)
    } else {
        let sv = canonical(v.counts());
        let mut seq1 = sv.clone();
        seq1.extend(canonical(&x_left));
        let mut seq2 = sv;
        seq2.extend(canonical(&y_left));
        (seq1, seq2)
    };

    let s1 = Genome::new(Arc::clone(&alphabet), seq1)?;
    let s2 = Genome::new(Arc::clone(&alphabet), seq2)?;
    debug_assert_eq!(&s1.cnp(), c1);
    debug_assert_eq!(&s2.cnp(), c2);
    let adjacencies = adjacencies(&s1, &s2)?;
    Ok(CnpcSolution {
        s1,
        s2,
        adjacencies,
        n_star,
    })
}

/// Exact maximum adjacency count over all string pairs realizing the two
/// profiles, by enumerating distinct multiset permutations of both sides.
pub fn cnpc_brute_force(c1: &Cnp, c2: &Cnp) -> Result<u64> {
    same_alphabet(c1.alphabet(), c2.alphabet())?;
    for c in [c1, c2] {
        if c.total() > ORACLE_SIZE_GUARD {
            return Err(Error::SizeGuardExceeded(format!(
                "profile size {} exceeds the oracle guard {ORACLE_SIZE_GUARD}",
                c.total()
            )));
        }
    }
    let p1 = pair_profiles(c1);
    let p2 = pair_profiles(c2);
    let mut best = 0;
    for a in &p1 {
        for b in &p2 {
            let m: u64 = a.iter().zip(b).map(|(&x, &y)| u64::from(x.min(y))).sum();
            best = best.max(m);
        }
    }
    Ok(best)
}

/// Distinct adjacent-pair histograms over all multiset permutations of the
/// profile. Pair `(x, y)`, `x <= y`, is indexed by rows of the upper
/// triangle.
fn pair_profiles(c: &Cnp) -> Vec<Vec<u16>> {
    let m = c.counts().len();
    let idx = move |a: usize, b: usize| -> usize {
        let (lo, hi) = (a.min(b), a.max(b));
        let before: usize = (0..lo).map(|r| m - r).sum();
        before + (hi - lo)
    };
    let npairs = m * (m + 1) / 2;
    let mut remaining: Vec<u64> = c.counts().to_vec();
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    let mut hist = vec![0u16; npairs];
    let total = c.total();

    fn rec(
        remaining: &mut [u64],
        hist: &mut Vec<u16>,
        prev: Option<usize>,
        placed: u64,
        total: u64,
        idx: &dyn Fn(usize, usize) -> usize,
        seen: &mut HashSet<Vec<u16>>,
    ) {
        if placed == total {
            seen.insert(hist.clone());
            return;
        }
        for s in 0..remaining.len() {
            if remaining[s] == 0 {
                continue;
            }
            remaining[s] -= 1;
            let touched = prev.map(|p| idx(p, s));
            if let Some(t) = touched {
                hist[t] += 1;
            }
            rec(remaining, hist, Some(s), placed + 1, total, idx, seen);
            if let Some(t) = touched {
                hist[t] -= 1;
            }
            remaining[s] += 1;
        }
    }
    rec(&mut remaining, &mut hist, None, 0, total, &idx, &mut seen);
    let mut out: Vec<Vec<u16>> = seen.into_iter().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genome::Alphabet;
    use proptest::prelude::*;

    fn g(alpha: &Arc<Alphabet>, s: &str) -> Genome {
        Genome::from_str_chars(alpha, s).unwrap()
    }

    fn cnp(alpha: &Arc<Alphabet>, counts: &[u64]) -> Cnp {
        Cnp::new(Arc::clone(alpha), counts.to_vec()).unwrap()
    }

    #[test]
    fn adjacency_example() {
        let alpha = Alphabet::from_chars("abcd").unwrap();
        let a = g(&alpha, "acbdcb");
        let b = g(&alpha, "abcdabcd");
        assert_eq!(adjacencies(&a, &b).unwrap(), 3);
        assert_eq!(breakpoints(&a, &b).unwrap(), (2, 4));
        assert_eq!(breakpoint_distance(&a, &b).unwrap(), 6);
    }

    #[test]
    fn adjacency_degenerate_cases() {
        let alpha = Alphabet::from_chars("ab").unwrap();
        let a = g(&alpha, "abab");
        assert_eq!(adjacencies(&a, &a).unwrap(), 3);
        assert_eq!(breakpoints(&a, &a).unwrap(), (0, 0));
        assert_eq!(adjacencies(&g(&alpha, "aa"), &g(&alpha, "bb")).unwrap(), 0);
        assert_eq!(
            breakpoints(&g(&alpha, "a"), &g(&alpha, "b")).unwrap(),
            (0, 0)
        );
        assert_eq!(
            breakpoint_distance(&g(&alpha, "ab"), &g(&alpha, "")).unwrap(),
            1
        );
    }

    #[test]
    fn max_common_subvector_is_componentwise_min() {
        let alpha = Alphabet::from_chars("abcde").unwrap();
        let u = cnp(&alpha, &[3, 2, 1, 0, 5]);
        let v = cnp(&alpha, &[2, 1, 3, 1, 4]);
        assert_eq!(
            max_common_subvector(&u, &v).unwrap().counts(),
            &[2, 1, 1, 0, 4]
        );
        assert_eq!(max_common_subvector(&u, &u).unwrap(), u);
        let zero = Cnp::zero(Arc::clone(&alpha));
        assert_eq!(max_common_subvector(&u, &zero).unwrap(), zero);
    }

    #[test]
    fn transfer_pair_choice_is_lexicographic() {
        let alpha = Alphabet::from_chars("abcde").unwrap();
        let c1 = cnp(&alpha, &[2, 2, 2, 4, 1]);
        let c2 = cnp(&alpha, &[4, 4, 1, 1, 1]);
        let v = max_common_subvector(&c1, &c2).unwrap();
        assert_eq!(v.counts(), &[2, 2, 1, 1, 1]);
        let pair = find_transfer_pair(&c1, &c2, &v).unwrap();
        // c is the first surplus on side 1 (2 > 1); a the first on side 2
        assert_eq!(pair, Some((2, 0)));
        // (d, a) also satisfies the predicate, it is just not the tie-break
        // winner
        let (d, a) = (3usize, 0usize);
        assert!(v.counts()[d] >= 1 && c1.counts()[d] > v.counts()[d]);
        assert!(v.counts()[a] >= 1 && c2.counts()[a] > v.counts()[a]);

        assert_eq!(find_transfer_pair(&c1, &c1, &c1).unwrap(), None);

        let ab = Alphabet::from_chars("ab").unwrap();
        let d1 = cnp(&ab, &[2, 1]);
        let d2 = cnp(&ab, &[1, 2]);
        let vv = max_common_subvector(&d1, &d2).unwrap();
        assert_eq!(find_transfer_pair(&d1, &d2, &vv).unwrap(), Some((0, 1)));
    }

    #[test]
    fn transfer_pair_rejects_bad_subvector() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let c1 = cnp(&ab, &[2, 1]);
        let c2 = cnp(&ab, &[1, 2]);
        let bad = cnp(&ab, &[0, 0]);
        assert!(matches!(
            find_transfer_pair(&c1, &c2, &bad),
            Err(Error::InvalidSubvector(_))
        ));
    }

    #[test]
    fn solve_walkthrough_reaches_n_star() {
        let alpha = Alphabet::from_chars("abcde").unwrap();
        let c1 = cnp(&alpha, &[2, 2, 2, 4, 1]);
        let c2 = cnp(&alpha, &[4, 4, 1, 1, 1]);
        let sol = cnpc_solve(&c1, &c2).unwrap();
        assert_eq!(sol.n_star, 7);
        assert_eq!(sol.adjacencies, 7);
        assert_eq!(sol.s1.cnp(), c1);
        assert_eq!(sol.s2.cnp(), c2);
    }

    #[test]
    fn solve_no_transfer_pair_lands_one_below() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let c1 = cnp(&ab, &[2, 1]);
        let c2 = cnp(&ab, &[1, 1]);
        let sol = cnpc_solve(&c1, &c2).unwrap();
        assert_eq!(sol.n_star, 2);
        assert_eq!(sol.adjacencies, 1);
        assert_eq!(cnpc_brute_force(&c1, &c2).unwrap(), 1);
    }

    #[test]
    fn solve_zero_vectors() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let zero = Cnp::zero(Arc::clone(&ab));
        let sol = cnpc_solve(&zero, &zero).unwrap();
        assert!(sol.s1.is_empty() && sol.s2.is_empty());
        assert_eq!(sol.adjacencies, 0);
        assert_eq!(sol.n_star, 0);
    }

    #[test]
    fn brute_force_small_values() {
        let ab = Alphabet::from_chars("ab").unwrap();
        assert_eq!(
            cnpc_brute_force(&cnp(&ab, &[2, 1]), &cnp(&ab, &[1, 2])).unwrap(),
            2
        );
        assert_eq!(
            cnpc_brute_force(&cnp(&ab, &[1, 0]), &cnp(&ab, &[1, 0])).unwrap(),
            0
        );
        assert_eq!(
            cnpc_brute_force(&cnp(&ab, &[2, 1]), &cnp(&ab, &[1, 1])).unwrap(),
            1
        );
    }

    #[test]
    fn brute_force_guard() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let big = cnp(&ab, &[9, 0]);
        assert!(matches!(
            cnpc_brute_force(&big, &big),
            Err(Error::SizeGuardExceeded(_))
        ));
    }

    proptest! {
        #[test]
        fn adjacency_count_is_symmetric(a in proptest::collection::vec(0u32..3, 0..12),
                                        b in proptest::collection::vec(0u32..3, 0..12)) {
            let alpha = Alphabet::from_chars("abc").unwrap();
            let ga = Genome::new(Arc::clone(&alpha), a).unwrap();
            let gb = Genome::new(Arc::clone(&alpha), b).unwrap();
            prop_assert_eq!(adjacencies(&ga, &gb).unwrap(), adjacencies(&gb, &ga).unwrap());
        }

        #[test]
        fn breakpoint_identity_on_nonempty_strings(a in proptest::collection::vec(0u32..3, 1..12),
                                                   b in proptest::collection::vec(0u32..3, 1..12)) {
            let alpha = Alphabet::from_chars("abc").unwrap();
            let ga = Genome::new(Arc::clone(&alpha), a).unwrap();
            let gb = Genome::new(Arc::clone(&alpha), b).unwrap();
            let adj = adjacencies(&ga, &gb).unwrap();
            let dist = breakpoint_distance(&ga, &gb).unwrap() as i64;
            prop_assert_eq!(dist, ga.len() as i64 + gb.len() as i64 - 2 * adj as i64 - 2);
        }
    }
}
