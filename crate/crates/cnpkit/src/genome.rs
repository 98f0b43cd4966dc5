//! Alphabets, genomes, copy-number profiles and the two string events
//! (segmental deletion and duplication), plus origin tagging.
//!
//! Positions are 1-based and inclusive at the public surface; a deletion
//! `(i, j)` removes `G[i..=j]`, a duplication `(i, j, p)` inserts a copy of
//! `G[i..=j]` after position `p` (`p = 0` prepends). The copy may never be
//! inserted strictly inside the copied span.
//!
//! All values are immutable after construction; every operation returns a
//! fresh value and is safe to call concurrently.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of distinct symbol names. The order fixes the component
/// order of every [`Cnp`] over this alphabet and every lexicographic
/// tie-break in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, u32>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Arc<Alphabet>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(symbols.len());
        for (id, name) in symbols.iter().enumerate() {
            if index.insert(name.clone(), id as u32).is_some() {
                return Err(Error::InvalidInput(format!(
                    "duplicate symbol {name:?} in alphabet"
                )));
            }
        }
        Ok(Arc::new(Alphabet { symbols, index }))
    }

    /// Alphabet whose symbols are the characters of `chars`, in the given
    /// order. Convenient for single-character symbol sets.
    pub fn from_chars(chars: &str) -> Result<Arc<Alphabet>> {
        Alphabet::new(chars.chars().map(|c| c.to_string()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, id: u32) -> &str {
        &self.symbols[id as usize]
    }

    pub fn id_of(&self, name: &str) -> Result<u32> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// True when every symbol renders as a single character, in which case
    /// genomes display as plain strings.
    pub fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }
}

pub(crate) fn same_alphabet(a: &Alphabet, b: &Alphabet) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch(format!(
            "{:?} vs {:?}",
            a.symbols, b.symbols
        )))
    }
}

/// A genome: a string over an alphabet, stored as symbol ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Genome {
    alphabet: Arc<Alphabet>,
    seq: Vec<u32>,
}

/// A deletion or duplication, with 1-based inclusive indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Event {
    Del { i: usize, j: usize },
    Dup { i: usize, j: usize, p: usize },
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Del { i, j } => write!(f, "del({i},{j})"),
            Event::Dup { i, j, p } => write!(f, "dup({i},{j},{p})"),
        }
    }
}

impl Event {
    /// Validates the event against a genome of length `n`.
    pub fn check(&self, n: usize) -> Result<()> {
        match *self {
            Event::Del { i, j } => {
                if i < 1 || i > j || j > n {
                    return Err(Error::Index(format!(
                        "deletion ({i},{j}) invalid for genome of length {n}"
                    )));
                }
            }
            Event::Dup { i, j, p } => {
                if i < 1 || i > j || j > n {
                    return Err(Error::Index(format!(
                        "duplication ({i},{j},{p}) invalid for genome of length {n}"
                    )));
                }
                if p > n {
                    return Err(Error::Index(format!(
                        "insertion point {p} beyond genome of length {n}"
                    )));
                }
                if p > i - 1 && p < j {
                    return Err(Error::InsideCopy { i, j, p });
                }
            }
        }
        Ok(())
    }

    /// All valid events on a genome of length `n`, in the enumeration order
    /// used everywhere: deletions before duplications, each ordered
    /// lexicographically by `(i, j, p)`.
    pub fn all_for_len(n: usize, deletions_only: bool) -> Vec<Event> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i..=n {
                out.push(Event::Del { i, j });
            }
        }
        if !deletions_only {
            for i in 1..=n {
                for j in i..=n {
                    for p in 0..i {
                        out.push(Event::Dup { i, j, p });
                    }
                    for p in j..=n {
                        out.push(Event::Dup { i, j, p });
                    }
                }
            }
        }
        out
    }
}

/// Applies one event to a raw sequence. Shared between plain and
/// origin-tagged genomes so the two can never drift apart.
pub(crate) fn apply_event_seq<T: Clone>(seq: &[T], ev: &Event) -> Result<Vec<T>> {
    ev.check(seq.len())?;
    match *ev {
        Event::Del { i, j } => {
            let mut out = Vec::with_capacity(seq.len() - (j - i + 1));
            out.extend_from_slice(&seq[..i - 1]);
            out.extend_from_slice(&seq[j..]);
            Ok(out)
        }
        Event::Dup { i, j, p } => {
            let mut out = Vec::with_capacity(seq.len() + (j - i + 1));
            out.extend_from_slice(&seq[..p]);
            out.extend_from_slice(&seq[i - 1..j]);
            out.extend_from_slice(&seq[p..]);
            Ok(out)
        }
    }
}

pub(crate) fn apply_sequence_seq<T: Clone>(seq: &[T], events: &[Event]) -> Result<Vec<T>> {
    let mut cur = seq.to_vec();
    for (index, ev) in events.iter().enumerate() {
        cur = apply_event_seq(&cur, ev).map_err(|source| Error::EventInSequence {
            index,
            source: Box::new(source),
        })?;
    }
    Ok(cur)
}

impl Genome {
    pub fn new(alphabet: Arc<Alphabet>, seq: Vec<u32>) -> Result<Genome> {
        if let Some(&bad) = seq.iter().find(|&&id| id as usize >= alphabet.len()) {
            return Err(Error::Index(format!(
                "symbol id {bad} out of range for alphabet of size {}",
                alphabet.len()
            )));
        }
        Ok(Genome { alphabet, seq })
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Genome {
        Genome {
            alphabet,
            seq: Vec::new(),
        }
    }

    /// Builds a genome from symbol names.
    pub fn parse<S: AsRef<str>>(alphabet: &Arc<Alphabet>, tokens: &[S]) -> Result<Genome> {
        let seq = tokens
            .iter()
            .map(|t| alphabet.id_of(t.as_ref()))
            .collect::<Result<Vec<u32>>>()?;
        Ok(Genome {
            alphabet: Arc::clone(alphabet),
            seq,
        })
    }

    /// Builds a genome from a plain string, one character per symbol.
    pub fn from_str_chars(alphabet: &Arc<Alphabet>, s: &str) -> Result<Genome> {
        let seq = s
            .chars()
            .map(|c| alphabet.id_of(&c.to_string()))
            .collect::<Result<Vec<u32>>>()?;
        Ok(Genome {
            alphabet: Arc::clone(alphabet),
            seq,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn seq(&self) -> &[u32] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Symbol name at 1-based position `pos`.
    pub fn symbol_at(&self, pos: usize) -> &str {
        self.alphabet.symbol(self.seq[pos - 1])
    }

    /// The copy-number profile: per-symbol occurrence counts.
    pub fn cnp(&self) -> Cnp {
        let mut counts = vec![0u64; self.alphabet.len()];
        for &id in &self.seq {
            counts[id as usize] += 1;
        }
        Cnp {
            alphabet: Arc::clone(&self.alphabet),
            counts,
        }
    }

    pub fn apply(&self, ev: &Event) -> Result<Genome> {
        Ok(Genome {
            alphabet: Arc::clone(&self.alphabet),
            seq: apply_event_seq(&self.seq, ev)?,
        })
    }

    /// Applies the events left to right; an invalid event is reported with
    /// its index in the sequence.
    pub fn apply_sequence(&self, events: &[Event]) -> Result<Genome> {
        Ok(Genome {
            alphabet: Arc::clone(&self.alphabet),
            seq: apply_sequence_seq(&self.seq, events)?,
        })
    }

    /// Tags each character with its position, so descendants can be traced
    /// through any later event sequence.
    pub fn with_origins(&self) -> OriginTaggedGenome {
        OriginTaggedGenome {
            alphabet: Arc::clone(&self.alphabet),
            seq: self
                .seq
                .iter()
                .enumerate()
                .map(|(idx, &id)| (id, idx + 1))
                .collect(),
        }
    }

    /// The subsequence obtained by dropping every occurrence of symbol `s`.
    pub fn remove_symbol(&self, s: &str) -> Result<Genome> {
        let id = self.alphabet.id_of(s)?;
        Ok(Genome {
            alphabet: Arc::clone(&self.alphabet),
            seq: self.seq.iter().copied().filter(|&x| x != id).collect(),
        })
    }

    pub fn tokens(&self) -> Vec<String> {
        self.seq
            .iter()
            .map(|&id| self.alphabet.symbol(id).to_string())
            .collect()
    }
}

impl fmt::Display for Genome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.single_char() {
            for &id in &self.seq {
                f.write_str(self.alphabet.symbol(id))?;
            }
            Ok(())
        } else {
            f.write_str(&self.tokens().join(" "))
        }
    }
}

/// A copy-number profile: one non-negative count per alphabet symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnp {
    alphabet: Arc<Alphabet>,
    counts: Vec<u64>,
}

impl Cnp {
    pub fn new(alphabet: Arc<Alphabet>, counts: Vec<u64>) -> Result<Cnp> {
        if counts.len() != alphabet.len() {
            return Err(Error::InvalidInput(format!(
                "profile has {} components but the alphabet has {} symbols",
                counts.len(),
                alphabet.len()
            )));
        }
        Ok(Cnp { alphabet, counts })
    }

    pub fn zero(alphabet: Arc<Alphabet>) -> Cnp {
        let counts = vec![0; alphabet.len()];
        Cnp { alphabet, counts }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, s: &str) -> Result<u64> {
        Ok(self.counts[self.alphabet.id_of(s)? as usize])
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// Same profile with component `s` set to zero.
    pub fn zero_symbol(&self, s: &str) -> Result<Cnp> {
        let id = self.alphabet.id_of(s)? as usize;
        let mut counts = self.counts.clone();
        counts[id] = 0;
        Ok(Cnp {
            alphabet: Arc::clone(&self.alphabet),
            counts,
        })
    }
}

impl fmt::Display for Cnp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "\u{27e8}{}\u{27e9}",
            self.counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A genome whose characters carry the 1-based position of the original
/// character they descend from. Duplications copy the tags along with the
/// characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OriginTaggedGenome {
    alphabet: Arc<Alphabet>,
    seq: Vec<(u32, usize)>,
}

impl OriginTaggedGenome {
    pub fn seq(&self) -> &[(u32, usize)] {
        &self.seq
    }

    pub fn apply(&self, ev: &Event) -> Result<OriginTaggedGenome> {
        Ok(OriginTaggedGenome {
            alphabet: Arc::clone(&self.alphabet),
            seq: apply_event_seq(&self.seq, ev)?,
        })
    }

    pub fn apply_sequence(&self, events: &[Event]) -> Result<OriginTaggedGenome> {
        Ok(OriginTaggedGenome {
            alphabet: Arc::clone(&self.alphabet),
            seq: apply_sequence_seq(&self.seq, events)?,
        })
    }

    /// Drops the tags, leaving the plain genome.
    pub fn erase_origins(&self) -> Genome {
        Genome {
            alphabet: Arc::clone(&self.alphabet),
            seq: self.seq.iter().map(|&(id, _)| id).collect(),
        }
    }

    /// Origin ids present in the current string.
    pub fn origins(&self) -> BTreeSet<usize> {
        self.seq.iter().map(|&(_, origin)| origin).collect()
    }
}

/// Origin ids of `g` that still have at least one descendant after applying
/// `events` (the important positions); the complement of the result within
/// `1..=g.len()` is the set of unimportant positions.
pub fn surviving_origins(g: &Genome, events: &[Event]) -> Result<BTreeSet<usize>> {
    Ok(g.with_origins().apply_sequence(events)?.origins())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Arc<Alphabet> {
        Alphabet::from_chars("abc").unwrap()
    }

    fn g(alpha: &Arc<Alphabet>, s: &str) -> Genome {
        Genome::from_str_chars(alpha, s).unwrap()
    }

    #[test]
    fn cnp_counts_occurrences() {
        let a = abc();
        assert_eq!(g(&a, "abbcbbcca").cnp().counts(), &[2, 4, 3]);
        assert_eq!(g(&a, "").cnp().counts(), &[0, 0, 0]);
        let ab = Alphabet::from_chars("ab").unwrap();
        assert_eq!(g(&ab, "aa").cnp().counts(), &[2, 0]);
    }

    #[test]
    fn deletion_removes_inclusive_span() {
        let a = abc();
        let g1 = g(&a, "abbccabcab");
        assert_eq!(
            g1.apply(&Event::Del { i: 5, j: 7 }).unwrap(),
            g(&a, "abbccab")
        );
        assert_eq!(
            g(&a, "abc").apply(&Event::Del { i: 1, j: 3 }).unwrap(),
            g(&a, "")
        );
        assert_eq!(
            g(&a, "abc").apply(&Event::Del { i: 2, j: 2 }).unwrap(),
            g(&a, "ac")
        );
    }

    #[test]
    fn deletion_bounds_checked() {
        let a = abc();
        assert!(g(&a, "abc").apply(&Event::Del { i: 2, j: 1 }).is_err());
        assert!(g(&a, "abc").apply(&Event::Del { i: 0, j: 1 }).is_err());
        assert!(g(&a, "abc").apply(&Event::Del { i: 1, j: 4 }).is_err());
        assert!(g(&a, "").apply(&Event::Del { i: 1, j: 1 }).is_err());
    }

    #[test]
    fn duplication_inserts_copy_after_p() {
        let a = abc();
        assert_eq!(
            g(&a, "abbccab")
                .apply(&Event::Dup { i: 2, j: 5, p: 6 })
                .unwrap(),
            g(&a, "abbccabbccb")
        );
        assert_eq!(
            g(&a, "a").apply(&Event::Dup { i: 1, j: 1, p: 0 }).unwrap(),
            g(&a, "aa")
        );
        assert_eq!(
            g(&a, "ab").apply(&Event::Dup { i: 1, j: 2, p: 2 }).unwrap(),
            g(&a, "abab")
        );
    }

    #[test]
    fn duplication_rejects_insertion_inside_copy() {
        let a = abc();
        let g1 = g(&a, "abcabc");
        for p in 2..4 {
            let err = g1.apply(&Event::Dup { i: 2, j: 4, p }).unwrap_err();
            assert!(matches!(err, Error::InsideCopy { .. }), "p={p}: {err}");
        }
        // boundary insertion points are fine
        for p in [0, 1, 4, 5, 6] {
            assert!(g1.apply(&Event::Dup { i: 2, j: 4, p }).is_ok(), "p={p}");
        }
        assert!(g1.apply(&Event::Dup { i: 2, j: 4, p: 7 }).is_err());
    }

    #[test]
    fn sequence_application_folds_left_to_right() {
        let a = abc();
        let chain = [Event::Del { i: 5, j: 7 }, Event::Dup { i: 2, j: 5, p: 6 }];
        assert_eq!(
            g(&a, "abbccabcab").apply_sequence(&chain).unwrap(),
            g(&a, "abbccabbccb")
        );
        let g1 = g(&a, "abacab");
        assert_eq!(g1.apply_sequence(&[]).unwrap(), g1);
        assert_eq!(
            g(&a, "ab")
                .apply_sequence(&[Event::Dup { i: 1, j: 1, p: 1 }, Event::Del { i: 1, j: 1 }])
                .unwrap(),
            g(&a, "ab")
        );
    }

    #[test]
    fn sequence_error_carries_event_index() {
        let a = abc();
        let err = g(&a, "ab")
            .apply_sequence(&[Event::Del { i: 1, j: 2 }, Event::Del { i: 1, j: 1 }])
            .unwrap_err();
        match err {
            Error::EventInSequence { index, .. } => assert_eq!(index, 1),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn origin_tagging_assigns_positions() {
        let a = abc();
        let tagged = g(&a, "aabcb").with_origins();
        let ids: Vec<(String, usize)> = tagged
            .seq()
            .iter()
            .map(|&(id, o)| (a.symbol(id).to_string(), o))
            .collect();
        assert_eq!(
            ids,
            [("a", 1), ("a", 2), ("b", 3), ("c", 4), ("b", 5)]
                .map(|(s, o)| (s.to_string(), o))
        );
        assert!(g(&a, "").with_origins().seq().is_empty());
        assert_eq!(g(&a, "c").with_origins().seq(), &[(2, 1)]);
    }

    #[test]
    fn surviving_origins_tracks_descendants() {
        let a = abc();
        let g1 = g(&a, "ab");
        assert_eq!(
            surviving_origins(&g1, &[]).unwrap(),
            BTreeSet::from([1, 2])
        );
        assert_eq!(
            surviving_origins(&g1, &[Event::Del { i: 1, j: 1 }]).unwrap(),
            BTreeSet::from([2])
        );
        // the copy of origin 1 survives the deletion of the original
        assert_eq!(
            surviving_origins(
                &g1,
                &[Event::Dup { i: 1, j: 1, p: 1 }, Event::Del { i: 1, j: 1 }]
            )
            .unwrap(),
            BTreeSet::from([1, 2])
        );
    }

    #[test]
    fn remove_and_zero_symbol() {
        let ab = Alphabet::from_chars("ab").unwrap();
        assert_eq!(g(&ab, "abab").remove_symbol("a").unwrap(), g(&ab, "bb"));
        assert_eq!(g(&ab, "bb").remove_symbol("a").unwrap(), g(&ab, "bb"));
        assert_eq!(g(&ab, "aaa").remove_symbol("a").unwrap(), g(&ab, ""));
        assert!(g(&ab, "ab").remove_symbol("z").is_err());

        let c = Cnp::new(Arc::clone(&ab), vec![2, 1]).unwrap();
        assert_eq!(c.zero_symbol("a").unwrap().counts(), &[0, 1]);
        let c2 = Cnp::new(Arc::clone(&ab), vec![0, 3]).unwrap();
        assert_eq!(c2.zero_symbol("a").unwrap().counts(), &[0, 3]);
        let z = Cnp::zero(Arc::clone(&ab));
        assert_eq!(z.zero_symbol("b").unwrap().counts(), &[0, 0]);
    }

    #[test]
    fn event_json_round_trip() {
        let evs = vec![
            Event::Del { i: 5, j: 7 },
            Event::Dup { i: 2, j: 5, p: 6 },
        ];
        let s = serde_json::to_string(&evs).unwrap();
        assert_eq!(
            s,
            r#"[{"op":"del","i":5,"j":7},{"op":"dup","i":2,"j":5,"p":6}]"#
        );
        let back: Vec<Event> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, evs);
    }

    // Exhaustive projection check: erasing origins commutes with event
    // application for every short genome and event pair.
    #[test]
    fn origin_projection_commutes_exhaustively() {
        let ab = Alphabet::from_chars("ab").unwrap();
        for len in 0..=4usize {
            for code in 0..(1u32 << len) {
                let seq: Vec<u32> = (0..len).map(|b| (code >> b) & 1).collect();
                let g0 = Genome::new(Arc::clone(&ab), seq).unwrap();
                for e1 in Event::all_for_len(g0.len(), false) {
                    let g1 = g0.apply(&e1).unwrap();
                    let t1 = g0.with_origins().apply(&e1).unwrap();
                    assert_eq!(t1.erase_origins(), g1);
                    for e2 in Event::all_for_len(g1.len(), false) {
                        let g2 = g1.apply(&e2).unwrap();
                        assert_eq!(t1.apply(&e2).unwrap().erase_origins(), g2);
                    }
                }
            }
        }
    }

    #[test]
    fn display_uses_plain_string_for_char_alphabets() {
        let a = abc();
        assert_eq!(g(&a, "abba").to_string(), "abba");
        let cnp = g(&a, "abbcbbcca").cnp();
        assert_eq!(cnp.to_string(), "\u{27e8}2,4,3\u{27e9}");
        let wide = Alphabet::new(["s:S1", "e:1"]).unwrap();
        let gw = Genome::parse(&wide, &["s:S1", "e:1"]).unwrap();
        assert_eq!(gw.to_string(), "s:S1 e:1");
    }
}
