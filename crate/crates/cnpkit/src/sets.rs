//! Set systems, covers and exact covers, with an exhaustive minimum
//! set-cover solver, subset closure and cover disjointification.
//!
//! Universes stay small here (the exhaustive solver is guarded at 24 sets),
//! so sets are plain bitmasks over universe indices.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Largest collection the exhaustive cover enumeration accepts.
pub const MAX_SETS_FOR_EXHAUSTIVE: usize = 24;
/// Largest member-set size accepted by [`subset_closure`].
pub const MAX_CLOSURE_SET_SIZE: usize = 10;

/// A named subset of the universe; elements are universe indices, kept
/// sorted and distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSet {
    pub name: String,
    pub elements: Vec<usize>,
}

/// A collection of named sets over an ordered universe of element names.
///
/// Elements not covered by any set are allowed at this level (some
/// constructions deliberately emit them); operations that require full
/// coverage check it themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    universe: Vec<String>,
    sets: Vec<NamedSet>,
}

impl SetSystem {
    pub fn new(universe: Vec<String>, sets: Vec<(String, Vec<String>)>) -> Result<SetSystem> {
        let mut index = std::collections::HashMap::new();
        for (i, name) in universe.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!(
                    "duplicate universe element {name:?}"
                )));
            }
        }
        let resolved = sets
            .into_iter()
            .map(|(name, elems)| {
                let elements = elems
                    .iter()
                    .map(|e| {
                        index
                            .get(e.as_str())
                            .copied()
                            .ok_or_else(|| Error::UnknownSymbol(e.clone()))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                Ok((name, elements))
            })
            .collect::<Result<Vec<_>>>()?;
        SetSystem::from_indices(universe, resolved)
    }

    pub fn from_indices(
        universe: Vec<String>,
        sets: Vec<(String, Vec<usize>)>,
    ) -> Result<SetSystem> {
        let mut names = HashSet::new();
        let sets = sets
            .into_iter()
            .map(|(name, mut elements)| {
                if !names.insert(name.clone()) {
                    return Err(Error::InvalidInput(format!("duplicate set name {name:?}")));
                }
                if let Some(&bad) = elements.iter().find(|&&e| e >= universe.len()) {
                    return Err(Error::Index(format!(
                        "element index {bad} out of range in set {name:?}"
                    )));
                }
                elements.sort_unstable();
                if elements.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::InvalidInput(format!(
                        "duplicate element in set {name:?}"
                    )));
                }
                Ok(NamedSet { name, elements })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SetSystem { universe, sets })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn sets(&self) -> &[NamedSet] {
        &self.sets
    }

    pub fn set(&self, idx: usize) -> &NamedSet {
        &self.sets[idx]
    }

    pub fn element_name(&self, idx: usize) -> &str {
        &self.universe[idx]
    }

    /// How many sets contain element `u`.
    pub fn frequency(&self, u: usize) -> usize {
        self.sets
            .iter()
            .filter(|s| s.elements.binary_search(&u).is_ok())
            .count()
    }
}

/// A choice of sets by index, in a meaningful order (the difference chain in
/// [`disjointify`] walks it front to back).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub chosen: Vec<usize>,
}

impl Cover {
    pub fn new(chosen: Vec<usize>) -> Cover {
        Cover { chosen }
    }

    pub fn sorted(&self) -> Vec<usize> {
        let mut out = self.chosen.clone();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Fixed-width bitmask over universe indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub(crate) fn empty(bits: usize) -> BitSet {
        BitSet {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    pub(crate) fn full(bits: usize) -> BitSet {
        let mut s = BitSet::empty(bits);
        for i in 0..bits {
            s.insert(i);
        }
        s
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub(crate) fn union_with(&mut self, other: &BitSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }
}

pub(crate) fn set_masks(s: &SetSystem) -> (Vec<BitSet>, BitSet) {
    let bits = s.universe().len();
    let masks = s
        .sets()
        .iter()
        .map(|set| {
            let mut m = BitSet::empty(bits);
            for &e in &set.elements {
                m.insert(e);
            }
            m
        })
        .collect();
    (masks, BitSet::full(bits))
}

/// Calls `f` on every ascending `k`-combination of `0..n` in lexicographic
/// order until `f` returns true; reports whether that happened.
pub(crate) fn for_each_combination(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> bool,
) -> bool {
    if k > n {
        return false;
    }
    if k == 0 {
        return f(&[]);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        // advance to the next combination
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return false;
            }
        }
    }
}

/// True iff the chosen sets cover the whole universe.
pub fn is_cover(s: &SetSystem, cover: &Cover) -> bool {
    let (masks, full) = set_masks(s);
    let mut u = BitSet::empty(s.universe().len());
    for &i in &cover.chosen {
        u.union_with(&masks[i]);
    }
    u == full
}

/// True iff the chosen sets partition the universe (cover it with pairwise
/// disjoint sets).
pub fn is_exact_cover(s: &SetSystem, cover: &Cover) -> bool {
    let total: usize = cover.chosen.iter().map(|&i| s.set(i).elements.len()).sum();
    is_cover(s, cover) && total == s.universe().len()
}

/// Minimum-cardinality cover of size at most `k_max`, lexicographically
/// first among the minimums, found by exhaustive enumeration in increasing
/// cardinality.
pub fn min_set_cover(s: &SetSystem, k_max: usize) -> Result<Option<Cover>> {
    let n = s.sets().len();
    if n > MAX_SETS_FOR_EXHAUSTIVE {
        return Err(Error::TooManySets {
            got: n,
            limit: MAX_SETS_FOR_EXHAUSTIVE,
        });
    }
    let (masks, full) = set_masks(s);
    for k in 0..=k_max.min(n) {
        let mut found: Option<Vec<usize>> = None;
        for_each_combination(n, k, |combo| {
            let mut u = BitSet::empty(s.universe().len());
            for &i in combo {
                u.union_with(&masks[i]);
            }
            if u == full {
                found = Some(combo.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(chosen) = found {
            return Ok(Some(Cover::new(chosen)));
        }
    }
    Ok(None)
}

/// All non-empty subsets of every member set, deduplicated, over the same
/// universe. Subset names spell out their elements. The empty set is
/// dropped: it can never help a cover.
pub fn subset_closure(s: &SetSystem, t: usize) -> Result<SetSystem> {
    if t > MAX_CLOSURE_SET_SIZE {
        return Err(Error::SetTooLarge(format!(
            "closure parameter {t} exceeds the guard {MAX_CLOSURE_SET_SIZE}"
        )));
    }
    if let Some(set) = s.sets().iter().find(|set| set.elements.len() > t) {
        return Err(Error::SetTooLarge(format!(
            "set {:?} has {} elements, more than t = {t}",
            set.name,
            set.elements.len()
        )));
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out: Vec<(String, Vec<usize>)> = Vec::new();
    for set in s.sets() {
        let k = set.elements.len();
        for mask in 1u32..(1 << k) {
            let subset: Vec<usize> = (0..k)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| set.elements[b])
                .collect();
            if seen.insert(subset.clone()) {
                let name = format!(
                    "{{{}}}",
                    subset
                        .iter()
                        .map(|&e| s.element_name(e))
                        .collect::<Vec<_>>()
                        .join(",")
                );
                out.push((name, subset));
            }
        }
    }
    SetSystem::from_indices(s.universe().to_vec(), out)
}

/// Turns a cover into an exact cover by the ordered difference chain
/// `S_1, S_2 - S_1, S_3 - (S_1 u S_2), ...`, dropping empty residuals.
/// Every returned set is a subset of the corresponding chosen set, so it
/// exists in the subset closure of the system.
pub fn disjointify(s: &SetSystem, cover: &Cover) -> Result<Vec<Vec<usize>>> {
    if !is_cover(s, cover) {
        let (masks, _) = set_masks(s);
        let mut u = BitSet::empty(s.universe().len());
        for &i in &cover.chosen {
            u.union_with(&masks[i]);
        }
        let missing = (0..s.universe().len())
            .find(|&e| !u.contains(e))
            .map(|e| s.element_name(e).to_string())
            .unwrap_or_default();
        return Err(Error::NotACover(format!("element {missing:?} uncovered")));
    }
    let mut taken = BitSet::empty(s.universe().len());
    let mut out = Vec::new();
    for &i in &cover.chosen {
        let residual: Vec<usize> = s
            .set(i)
            .elements
            .iter()
            .copied()
            .filter(|&e| !taken.contains(e))
            .collect();
        for &e in &residual {
            taken.insert(e);
        }
        if !residual.is_empty() {
            out.push(residual);
        }
    }
    debug_assert_eq!(out.iter().map(Vec::len).sum::<usize>(), s.universe().len());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig_system() -> SetSystem {
        SetSystem::new(
            ["1", "2", "3", "4", "5"].map(String::from).to_vec(),
            vec![
                ("S1".into(), vec!["1".into(), "2".into(), "3".into()]),
                ("S2".into(), vec!["1".into(), "3".into(), "4".into()]),
                ("S3".into(), vec!["2".into(), "3".into(), "5".into()]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn cover_predicates() {
        let s = fig_system();
        assert!(is_cover(&s, &Cover::new(vec![1, 2])));
        assert!(!is_cover(&s, &Cover::new(vec![0, 1])));
        // S2 and S3 share element 3
        assert!(!is_exact_cover(&s, &Cover::new(vec![1, 2])));

        let part = SetSystem::new(
            ["1", "2", "3"].map(String::from).to_vec(),
            vec![
                ("A".into(), vec!["1".into(), "2".into()]),
                ("B".into(), vec!["3".into()]),
            ],
        )
        .unwrap();
        assert!(is_exact_cover(&part, &Cover::new(vec![0, 1])));

        let empty = SetSystem::new(vec![], vec![]).unwrap();
        assert!(is_exact_cover(&empty, &Cover::new(vec![])));
    }

    #[test]
    fn minimum_cover_is_lex_first() {
        let s = fig_system();
        let c = min_set_cover(&s, 3).unwrap().unwrap();
        assert_eq!(c.chosen, vec![1, 2]);

        let whole = SetSystem::new(
            ["1", "2"].map(String::from).to_vec(),
            vec![("U".into(), vec!["1".into(), "2".into()])],
        )
        .unwrap();
        assert_eq!(min_set_cover(&whole, 2).unwrap().unwrap().chosen, vec![0]);

        let gap = SetSystem::new(
            ["1", "2"].map(String::from).to_vec(),
            vec![("A".into(), vec!["1".into()])],
        )
        .unwrap();
        assert_eq!(min_set_cover(&gap, 2).unwrap(), None);
    }

    #[test]
    fn minimum_cover_guard() {
        let universe: Vec<String> = (0..30).map(|i| i.to_string()).collect();
        let sets: Vec<(String, Vec<String>)> = (0..30)
            .map(|i| (format!("S{i}"), vec![i.to_string()]))
            .collect();
        let s = SetSystem::new(universe, sets).unwrap();
        assert!(matches!(
            min_set_cover(&s, 30),
            Err(Error::TooManySets { got: 30, limit: 24 })
        ));
    }

    #[test]
    fn closure_of_a_pair() {
        let s = SetSystem::new(
            ["1", "2"].map(String::from).to_vec(),
            vec![("S1".into(), vec!["1".into(), "2".into()])],
        )
        .unwrap();
        let closed = subset_closure(&s, 2).unwrap();
        let contents: Vec<Vec<usize>> = closed
            .sets()
            .iter()
            .map(|set| set.elements.clone())
            .collect();
        assert_eq!(contents, vec![vec![0], vec![1], vec![0, 1]]);
    }

    #[test]
    fn closure_of_singletons_keeps_contents() {
        let s = SetSystem::new(
            ["1", "2"].map(String::from).to_vec(),
            vec![
                ("A".into(), vec!["1".into()]),
                ("B".into(), vec!["2".into()]),
            ],
        )
        .unwrap();
        let closed = subset_closure(&s, 1).unwrap();
        assert_eq!(closed.sets().len(), 2);
        assert_eq!(closed.sets()[0].elements, vec![0]);
        assert_eq!(closed.sets()[1].elements, vec![1]);
    }

    // The figure system has three triples sharing some singletons and
    // pairs; the deduplicated closure is computed independently here and
    // pinned.
    #[test]
    fn closure_of_figure_system() {
        let s = fig_system();
        let closed = subset_closure(&s, 3).unwrap();

        let mut expected: HashSet<Vec<usize>> = HashSet::new();
        for set in s.sets() {
            let k = set.elements.len();
            for mask in 1u32..(1 << k) {
                expected.insert(
                    (0..k)
                        .filter(|b| mask & (1 << b) != 0)
                        .map(|b| set.elements[b])
                        .collect(),
                );
            }
        }
        assert_eq!(expected.len(), 15);
        assert_eq!(closed.sets().len(), 15);
        let got: HashSet<Vec<usize>> = closed
            .sets()
            .iter()
            .map(|set| set.elements.clone())
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn closure_guards() {
        let s = fig_system();
        assert!(matches!(
            subset_closure(&s, 2),
            Err(Error::SetTooLarge(_))
        ));
        assert!(matches!(
            subset_closure(&s, 11),
            Err(Error::SetTooLarge(_))
        ));
    }

    #[test]
    fn disjointify_chains_differences() {
        let s = fig_system();
        // cover by S2 then S3: residuals {1,3,4} and {2,5}
        let out = disjointify(&s, &Cover::new(vec![1, 2])).unwrap();
        assert_eq!(out, vec![vec![0, 2, 3], vec![1, 4]]);

        let part = SetSystem::new(
            ["1", "2", "3"].map(String::from).to_vec(),
            vec![
                ("A".into(), vec!["1".into(), "2".into()]),
                ("B".into(), vec!["3".into()]),
            ],
        )
        .unwrap();
        assert_eq!(
            disjointify(&part, &Cover::new(vec![0, 1])).unwrap(),
            vec![vec![0, 1], vec![2]]
        );
        assert_eq!(
            disjointify(&part, &Cover::new(vec![0])).unwrap_err().to_string().contains("cover"),
            true
        );

        let single = SetSystem::new(
            ["1".to_string()].to_vec(),
            vec![("A".into(), vec!["1".into()])],
        )
        .unwrap();
        assert_eq!(
            disjointify(&single, &Cover::new(vec![0])).unwrap(),
            vec![vec![0]]
        );
    }

    #[test]
    fn combination_enumeration_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
