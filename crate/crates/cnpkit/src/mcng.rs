//! Exact, budget-bounded genome-to-CNP and genome-to-genome distances.
//!
//! Both distances are intractable in general, so this module enumerates
//! every event sequence up to a depth budget (iterative deepening), with
//! only exactness-preserving cuts:
//!
//! * branches where a needed symbol has been wiped out are dead (events
//!   cannot create an absent symbol);
//! * a transposition table skips genomes already proven to have no solution
//!   within the remaining depth;
//! * at one remaining event the step is resolved in closed form (the last
//!   deletion/duplication must account for the full residual difference,
//!   which pins its span length), scanning candidates in the same order the
//!   plain enumeration would.
//!
//! Results are deterministic: the witness is the first optimal sequence in
//! enumeration order, deletions before duplications, events ordered
//! lexicographically by `(i, j, p)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::genome::{same_alphabet, Cnp, Event, Genome};

/// Event repertoire for [`d_gcnp_exact`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    AllEvents,
    DeletionsOnly,
}

/// Search limits. `node_ceiling` bounds the number of visited search nodes;
/// exceeding it aborts with [`Error::BudgetTooLarge`] rather than returning
/// a possibly wrong distance.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub node_ceiling: u64,
}

pub const DEFAULT_NODE_CEILING: u64 = 10_000_000;

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_ceiling: DEFAULT_NODE_CEILING,
        }
    }
}

/// A genome together with the profile it should be transformed into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McngInstance {
    pub genome: Genome,
    pub target: Cnp,
}

impl McngInstance {
    pub fn new(genome: Genome, target: Cnp) -> Result<McngInstance> {
        same_alphabet(genome.alphabet(), target.alphabet())?;
        Ok(McngInstance { genome, target })
    }
}

/// Outcome of an exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    /// `distance` is the true minimum over the chosen repertoire and
    /// `witness` is the first optimal sequence in enumeration order.
    Found { distance: usize, witness: Vec<Event> },
    /// No event sequence of any length can reach the target (some needed
    /// symbol is absent). Exact and independent of the budget.
    Infeasible,
    /// Every sequence up to `budget` was ruled out; the distance exceeds it.
    ExceedsBudget { budget: usize },
}

impl SearchResult {
    pub fn distance(&self) -> Option<usize> {
        match self {
            SearchResult::Found { distance, .. } => Some(*distance),
            _ => None,
        }
    }
}

/// True iff every symbol required by `c` occurs in `g`. Duplications copy
/// existing characters, so absent symbols are uncreatable and this is the
/// exact feasibility condition.
pub fn feasible(g: &Genome, c: &Cnp) -> Result<bool> {
    same_alphabet(g.alphabet(), c.alphabet())?;
    let have = g.cnp();
    Ok(c.counts()
        .iter()
        .zip(have.counts())
        .all(|(&want, &have)| want == 0 || have > 0))
}

/// Minimum number of events transforming `g` into a genome whose profile
/// equals `c`, searched up to `budget` events.
pub fn d_gcnp_exact(
    g: &Genome,
    c: &Cnp,
    budget: usize,
    mode: SearchMode,
    config: &SolverConfig,
) -> Result<SearchResult> {
    same_alphabet(g.alphabet(), c.alphabet())?;
    if !feasible(g, c)? {
        return Ok(SearchResult::Infeasible);
    }
    let goal = Goal::Profile {
        target: c.counts().to_vec(),
    };
    search(g, goal, mode == SearchMode::DeletionsOnly, budget, config)
}

/// Minimum number of events transforming `g` into exactly the string `h`,
/// searched up to `budget` events.
pub fn d_gg_exact(g: &Genome, h: &Genome, budget: usize, config: &SolverConfig) -> Result<SearchResult> {
    same_alphabet(g.alphabet(), h.alphabet())?;
    if !feasible(g, &h.cnp())? {
        return Ok(SearchResult::Infeasible);
    }
    let goal = Goal::Exact {
        target: h.seq().to_vec(),
        target_counts: h.cnp().counts().to_vec(),
    };
    search(g, goal, false, budget, config)
}

enum Goal {
    Profile { target: Vec<u64> },
    Exact { target: Vec<u32>, target_counts: Vec<u64> },
}

fn search(
    g: &Genome,
    goal: Goal,
    deletions_only: bool,
    budget: usize,
    config: &SolverConfig,
) -> Result<SearchResult> {
    let mut s = Search {
        goal,
        deletions_only,
        ceiling: config.node_ceiling,
        nodes: 0,
        memo: HashMap::new(),
        path: Vec::new(),
    };
    let counts = g.cnp().counts().to_vec();
    if s.reached(g.seq(), &counts) {
        return Ok(SearchResult::Found {
            distance: 0,
            witness: Vec::new(),
        });
    }
    for limit in 1..=budget {
        if s.dfs(g.seq(), &counts, limit)? {
            debug_assert_eq!(s.path.len(), limit);
            return Ok(SearchResult::Found {
                distance: limit,
                witness: s.path,
            });
        }
        debug_assert!(s.path.is_empty());
    }
    Ok(SearchResult::ExceedsBudget { budget })
}

// Memo entries for leaf-depth nodes would dominate memory without saving
// much time, so the table only records nodes with at least two events left.
const MEMO_MIN_REMAINING: usize = 2;
const MEMO_MAX_ENTRIES: usize = 1 << 21;

struct Search {
    goal: Goal,
    deletions_only: bool,
    ceiling: u64,
    nodes: u64,
    memo: HashMap<Vec<u32>, usize>,
    path: Vec<Event>,
}

impl Search {
    fn reached(&self, seq: &[u32], counts: &[u64]) -> bool {
        match &self.goal {
            Goal::Profile { target } => counts == target.as_slice(),
            Goal::Exact { target, .. } => seq == target.as_slice(),
        }
    }

    /// Admissible lower bound on the events still needed, or `None` when the
    /// state is dead (a needed symbol has count zero).
    fn lower_bound(&self, seq: &[u32], counts: &[u64]) -> Option<usize> {
        let (target_counts, exact) = match &self.goal {
            Goal::Profile { target } => (target.as_slice(), false),
            Goal::Exact { target_counts, .. } => (target_counts.as_slice(), true),
        };
        let mut surplus = false;
        let mut deficit = false;
        for (&have, &want) in counts.iter().zip(target_counts) {
            if have > want {
                surplus = true;
            } else if have < want {
                if have == 0 {
                    return None;
                }
                deficit = true;
            }
        }
        let mut lb = usize::from(surplus) + usize::from(deficit);
        if exact && lb == 0 {
            // Equal profiles but unequal strings need a deletion and a
            // duplication: a single event always changes the profile.
            if let Goal::Exact { target, .. } = &self.goal {
                if seq != target.as_slice() {
                    lb = 2;
                }
            }
        }
        Some(lb)
    }

    fn dfs(&mut self, seq: &[u32], counts: &[u64], remaining: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.ceiling {
            return Err(Error::BudgetTooLarge {
                ceiling: self.ceiling,
            });
        }
        if let Some(&failed) = self.memo.get(seq) {
            if failed >= remaining {
                return Ok(false);
            }
        }
        let found = if remaining == 1 {
            match &self.goal {
                Goal::Profile { .. } => self.single_step_profile(seq, counts),
                Goal::Exact { .. } => self.single_step_exact(seq),
            }
        } else {
            self.expand(seq, counts, remaining)?
        };
        if !found && remaining >= MEMO_MIN_REMAINING && self.memo.len() < MEMO_MAX_ENTRIES {
            let entry = self.memo.entry(seq.to_vec()).or_insert(0);
            if *entry < remaining {
                *entry = remaining;
            }
        }
        Ok(found)
    }

    fn expand(&mut self, seq: &[u32], counts: &[u64], remaining: usize) -> Result<bool> {
        let n = seq.len();
        for ev in Event::all_for_len(n, self.deletions_only) {
            let child_seq = crate::genome::apply_event_seq(seq, &ev).expect("enumerated event is valid");
            let mut child_counts = counts.to_vec();
            match ev {
                Event::Del { i, j } => {
                    for &id in &seq[i - 1..j] {
                        child_counts[id as usize] -= 1;
                    }
                }
                Event::Dup { i, j, .. } => {
                    for &id in &seq[i - 1..j] {
                        child_counts[id as usize] += 1;
                    }
                }
            }
            match self.lower_bound(&child_seq, &child_counts) {
                None => continue,
                Some(lb) if lb > remaining - 1 => continue,
                Some(_) => {}
            }
            self.path.push(ev);
            if self.dfs(&child_seq, &child_counts, remaining - 1)? {
                return Ok(true);
            }
            self.path.pop();
        }
        Ok(false)
    }

    /// One event left, profile goal: the event's span histogram must equal
    /// the residual difference exactly, which fixes its length; slide a
    /// window of that length and take the first match. The first matching
    /// deletion is the lexicographically first reaching deletion, and for a
    /// duplication `p = 0` is always legal and lexicographically first.
    fn single_step_profile(&mut self, seq: &[u32], counts: &[u64]) -> bool {
        let target = match &self.goal {
            Goal::Profile { target } => target.as_slice(),
            Goal::Exact { .. } => unreachable!(),
        };
        let mut surplus: u64 = 0;
        let mut deficit: u64 = 0;
        let mut need = vec![0u64; target.len()];
        for (s, (&have, &want)) in counts.iter().zip(target).enumerate() {
            if have > want {
                surplus += have - want;
                need[s] = have - want;
            } else if have < want {
                deficit += want - have;
                need[s] = want - have;
            }
        }
        if (surplus > 0) == (deficit > 0) {
            // both directions (one event cannot fix both) or no difference
            // (every event changes the profile)
            return false;
        }
        if deficit > 0 && self.deletions_only {
            return false;
        }
        let span = (surplus + deficit) as usize;
        let n = seq.len();
        if span > n {
            return false;
        }
        match first_window_matching(seq, span, &need) {
            Some(w) => {
                let (i, j) = (w + 1, w + span);
                self.path.push(if surplus > 0 {
                    Event::Del { i, j }
                } else {
                    Event::Dup { i, j, p: 0 }
                });
                true
            }
            None => false,
        }
    }

    /// One event left, exact-string goal: the length difference fixes the
    /// event kind and span length.
    fn single_step_exact(&mut self, seq: &[u32]) -> bool {
        let target = match &self.goal {
            Goal::Exact { target, .. } => target.as_slice(),
            Goal::Profile { .. } => unreachable!(),
        };
        let n = seq.len();
        let m = target.len();
        if n > m {
            let span = n - m;
            let lcp = seq
                .iter()
                .zip(target)
                .take_while(|(a, b)| a == b)
                .count();
            let lcs = seq
                .iter()
                .rev()
                .zip(target.iter().rev())
                .take_while(|(a, b)| a == b)
                .count();
            let i_min = (m + 1).saturating_sub(lcs).max(1);
            let i_max = (lcp + 1).min(m + 1);
            if i_min <= i_max {
                self.path.push(Event::Del {
                    i: i_min,
                    j: i_min + span - 1,
                });
                return true;
            }
            false
        } else if m > n && !self.deletions_only {
            let span = m - n;
            if span > n {
                return false;
            }
            for i in 1..=n - span + 1 {
                let j = i + span - 1;
                let try_p = |p: usize| -> bool {
                    target[..p] == seq[..p]
                        && target[p..p + span] == seq[i - 1..j]
                        && target[p + span..] == seq[p..]
                };
                for p in (0..i).chain(j..=n) {
                    if try_p(p) {
                        self.path.push(Event::Dup { i, j, p });
                        return true;
                    }
                }
            }
            false
        } else {
            false
        }
    }
}

/// First 0-based start of a window of length `span` whose symbol histogram
/// equals `need`, scanning left to right.
fn first_window_matching(seq: &[u32], span: usize, need: &[u64]) -> Option<usize> {
    debug_assert!(span >= 1 && span <= seq.len());
    let mut window = vec![0u64; need.len()];
    let mut mismatches = need.iter().filter(|&&c| c > 0).count();
    let bump = |window: &mut [u64], mism: &mut usize, s: usize, delta: i64| {
        let was = window[s] == need[s];
        window[s] = (window[s] as i64 + delta) as u64;
        let is = window[s] == need[s];
        match (was, is) {
            (true, false) => *mism += 1,
            (false, true) => *mism -= 1,
            _ => {}
        }
    };
    for &id in &seq[..span] {
        bump(&mut window, &mut mismatches, id as usize, 1);
    }
    if mismatches == 0 {
        return Some(0);
    }
    for w in 1..=seq.len() - span {
        bump(&mut window, &mut mismatches, seq[w - 1] as usize, -1);
        bump(&mut window, &mut mismatches, seq[w + span - 1] as usize, 1);
        if mismatches == 0 {
            return Some(w);
        }
    }
    None
}
