//! Instance constructions between set cover, genome-to-CNP instances and
//! multicolored clique, with the converters that move solutions across.
//!
//! The set-cover-to-MCNG construction builds one separator symbol `s:<set>`
//! per set and one element symbol `e:<element>` per universe element; the
//! genome concatenates blocks `s:<set> q(set)` where `q` lists the set's
//! elements in universe order, and the target profile keeps every separator
//! at one and asks every element symbol to lose exactly one copy.
//!
//! Covers travel in both directions: an exact cover maps to one deletion
//! per chosen set (the whole block), and any event sequence reaching the
//! target maps back to a cover by tracing, for each element, an original
//! occurrence whose descendants all die; its nearest separator to the left
//! names a chosen set.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::genome::{surviving_origins, Alphabet, Cnp, Event, Genome};
use crate::mcng::McngInstance;
use crate::sets::{
    for_each_combination, is_cover, is_exact_cover, set_masks, BitSet, Cover, SetSystem,
    MAX_SETS_FOR_EXHAUSTIVE,
};

/// Positions of the blocks of a constructed genome, all in original
/// (1-based) coordinates.
struct Layout {
    /// separator position per set index
    sep_pos: Vec<usize>,
    /// original positions carrying each element symbol, ascending
    elem_positions: Vec<Vec<usize>>,
    /// set index of the nearest separator at or before each position
    pred_set: Vec<usize>,
    len: usize,
}

fn layout(s: &SetSystem) -> Layout {
    let mut sep_pos = Vec::with_capacity(s.sets().len());
    let mut elem_positions = vec![Vec::new(); s.universe().len()];
    let mut pred_set = Vec::new();
    let mut pos = 0usize;
    for (i, set) in s.sets().iter().enumerate() {
        pos += 1;
        sep_pos.push(pos);
        pred_set.push(i);
        for &u in &set.elements {
            pos += 1;
            elem_positions[u].push(pos);
            pred_set.push(i);
        }
    }
    Layout {
        sep_pos,
        elem_positions,
        pred_set,
        len: pos,
    }
}

/// Builds the genome and target profile for a set system. Fails with
/// [`Error::UncoveredElement`] if some universe element occurs in no set
/// (its target count would be negative).
pub fn sc_to_mcng(s: &SetSystem) -> Result<McngInstance> {
    let n_sets = s.sets().len();
    let mut symbols: Vec<String> = s.sets().iter().map(|set| format!("s:{}", set.name)).collect();
    symbols.extend(s.universe().iter().map(|u| format!("e:{u}")));
    let alphabet = Alphabet::new(symbols)?;

    let mut seq = Vec::new();
    let mut freq = vec![0u64; s.universe().len()];
    for (i, set) in s.sets().iter().enumerate() {
        seq.push(i as u32);
        for &u in &set.elements {
            seq.push((n_sets + u) as u32);
            freq[u] += 1;
        }
    }
    let mut counts = vec![1u64; n_sets];
    for (u, &f) in freq.iter().enumerate() {
        if f == 0 {
            return Err(Error::UncoveredElement(s.element_name(u).to_string()));
        }
        counts.push(f - 1);
    }
    let genome = Genome::new(Arc::clone(&alphabet), seq)?;
    let target = Cnp::new(alphabet, counts)?;
    McngInstance::new(genome, target)
}

/// One deletion per chosen set, each removing the whole block `q(set)`,
/// emitted right to left so every index is valid without re-indexing.
/// Replaying the sequence on the constructed genome reaches the target.
pub fn exact_cover_deletions(s: &SetSystem, cover: &Cover) -> Result<Vec<Event>> {
    if !is_exact_cover(s, cover) {
        return Err(Error::NotExactCover(describe_exactness_failure(s, cover)));
    }
    let lay = layout(s);
    let mut chosen = cover.sorted();
    chosen.sort_by_key(|&i| std::cmp::Reverse(lay.sep_pos[i]));
    Ok(chosen
        .into_iter()
        .filter(|&i| !s.set(i).elements.is_empty())
        .map(|i| Event::Del {
            i: lay.sep_pos[i] + 1,
            j: lay.sep_pos[i] + s.set(i).elements.len(),
        })
        .collect())
}

fn describe_exactness_failure(s: &SetSystem, cover: &Cover) -> String {
    let mut seen: HashMap<usize, usize> = HashMap::new();
    for &i in &cover.chosen {
        for &e in &s.set(i).elements {
            if let Some(&other) = seen.get(&e) {
                return format!(
                    "sets {:?} and {:?} share element {:?}",
                    s.set(other).name,
                    s.set(i).name,
                    s.element_name(e)
                );
            }
            seen.insert(e, i);
        }
    }
    match (0..s.universe().len()).find(|e| !seen.contains_key(e)) {
        Some(e) => format!("element {:?} uncovered", s.element_name(e)),
        None => "not an exact cover".to_string(),
    }
}

/// Recovers a cover from a deletions-only solution: every deleted character
/// maps to the separator immediately to its left in the original genome,
/// and the affected separators form a cover no larger than the sequence.
pub fn extract_cover_deletions(
    inst: &McngInstance,
    s: &SetSystem,
    events: &[Event],
) -> Result<Cover> {
    if events.iter().any(|e| matches!(e, Event::Dup { .. })) {
        return Err(Error::HasDuplication);
    }
    let replayed = inst.genome.apply_sequence(events)?;
    if replayed.cnp() != inst.target {
        return Err(Error::NotASolution(format!(
            "replay ends with profile {} instead of {}",
            replayed.cnp(),
            inst.target
        )));
    }
    let lay = layout(s);
    let surviving = surviving_origins(&inst.genome, events)?;
    let mut affected = BTreeSet::new();
    for p in 1..=lay.len {
        if !surviving.contains(&p) {
            debug_assert!(
                !lay.sep_pos.contains(&p),
                "a valid deletions-only solution cannot delete a separator"
            );
            affected.insert(lay.pred_set[p - 1]);
        }
    }
    let cover = Cover::new(affected.into_iter().collect());
    confirm_extracted(s, &cover, events.len())?;
    Ok(cover)
}

/// Recovers a cover from any solution, deletions and duplications alike.
/// For each universe element the leftmost original occurrence with no
/// surviving descendant is charged to its left separator. At least one such
/// occurrence exists per element: the target keeps one copy less than the
/// number of original occurrences, so they cannot all have survivors.
pub fn extract_cover_general(
    inst: &McngInstance,
    s: &SetSystem,
    events: &[Event],
) -> Result<Cover> {
    let replayed = inst.genome.apply_sequence(events)?;
    if replayed.cnp() != inst.target {
        return Err(Error::NotASolution(format!(
            "replay ends with profile {} instead of {}",
            replayed.cnp(),
            inst.target
        )));
    }
    let lay = layout(s);
    let surviving = surviving_origins(&inst.genome, events)?;
    let mut affected = BTreeSet::new();
    for (u, positions) in lay.elem_positions.iter().enumerate() {
        let dead = positions.iter().find(|p| !surviving.contains(p));
        match dead {
            Some(&p) => {
                affected.insert(lay.pred_set[p - 1]);
            }
            None => {
                return Err(Error::InternalInvariantViolation(format!(
                    "every original occurrence of {:?} has a surviving descendant",
                    s.element_name(u)
                )))
            }
        }
    }
    let cover = Cover::new(affected.into_iter().collect());
    confirm_extracted(s, &cover, events.len())?;
    Ok(cover)
}

fn confirm_extracted(s: &SetSystem, cover: &Cover, k: usize) -> Result<()> {
    if !is_cover(s, cover) {
        return Err(Error::InternalInvariantViolation(
            "extracted separators do not cover the universe".to_string(),
        ));
    }
    if cover.chosen.len() > k {
        return Err(Error::InternalInvariantViolation(format!(
            "extracted cover has {} sets for a {k}-event solution",
            cover.chosen.len()
        )));
    }
    Ok(())
}

/// A properly colored simple graph; colors are `1..=k` and edges never join
/// two vertices of the same color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    vertices: Vec<String>,
    k: usize,
    colors: Vec<usize>,
    edges: Vec<(usize, usize)>,
    adjacency: HashSet<(usize, usize)>,
}

impl ColoredGraph {
    /// Vertices are sorted by name; edges are normalized and checked for
    /// self-loops, duplicates and color clashes.
    pub fn new(
        k: usize,
        colors: Vec<(String, usize)>,
        edges: Vec<(String, String)>,
    ) -> Result<ColoredGraph> {
        if k == 0 {
            return Err(Error::InvalidInput("color count must be at least 1".into()));
        }
        let mut named: Vec<(String, usize)> = colors;
        named.sort_by(|a, b| a.0.cmp(&b.0));
        if named.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInput("duplicate vertex name".into()));
        }
        let vertices: Vec<String> = named.iter().map(|(v, _)| v.clone()).collect();
        let colors: Vec<usize> = named.iter().map(|(_, c)| *c).collect();
        if let Some((v, c)) = named.iter().find(|(_, c)| *c < 1 || *c > k) {
            return Err(Error::InvalidInput(format!(
                "vertex {v:?} has color {c}, outside 1..={k}"
            )));
        }
        let index: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut norm = Vec::with_capacity(edges.len());
        let mut adjacency = HashSet::new();
        for (a, b) in &edges {
            let ia = *index
                .get(a.as_str())
                .ok_or_else(|| Error::UnknownSymbol(a.clone()))?;
            let ib = *index
                .get(b.as_str())
                .ok_or_else(|| Error::UnknownSymbol(b.clone()))?;
            if ia == ib {
                return Err(Error::InvalidInput(format!("self-loop at {a:?}")));
            }
            if colors[ia] == colors[ib] {
                return Err(Error::ImproperColoring(format!(
                    "edge {a:?}-{b:?} joins two vertices of color {}",
                    colors[ia]
                )));
            }
            let e = (ia.min(ib), ia.max(ib));
            if !adjacency.insert(e) {
                return Err(Error::InvalidInput(format!("duplicate edge {a:?}-{b:?}")));
            }
            norm.push(e);
        }
        norm.sort_unstable();
        Ok(ColoredGraph {
            vertices,
            k,
            colors,
            edges: norm,
            adjacency,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency.contains(&(a.min(b), a.max(b)))
    }

    /// Vertex indices of each color class, ascending, indexed by `color-1`.
    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&w| self.has_edge(v, w))
            .collect()
    }
}

/// A set system paired with the cover budget `k' = k + C(k, 2)` under which
/// every cover is an exact cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScEcInstance {
    pub system: SetSystem,
    pub k_prime: usize,
}

/// Builds the exact-cover-promise set system of a properly colored graph.
///
/// The universe holds one element per color (`col:i`), one per color pair
/// (`pair:i:j`, `i < j`), and two per edge (`arc:u:v` and `arc:v:u`). Each
/// vertex set `V:u` covers its color element plus every arc leaving `u`;
/// each edge set `E:u:v` (u from the smaller color) covers its pair element
/// plus every arc between the two classes except those leaving `u` or `v`.
pub fn mcq_to_scec(g: &ColoredGraph) -> Result<ScEcInstance> {
    let k = g.k();
    if k < 2 {
        return Err(Error::InvalidInput(
            "clique reduction needs at least two colors".into(),
        ));
    }
    let mut universe: Vec<String> = (1..=k).map(|i| format!("col:{i}")).collect();
    for i in 1..=k {
        for j in i + 1..=k {
            universe.push(format!("pair:{i}:{j}"));
        }
    }
    // arcs grouped by color pair, each edge contributing both directions
    let mut arcs_by_pair: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for &(a, b) in g.edges() {
        let (u, v) = if g.color(a) < g.color(b) { (a, b) } else { (b, a) };
        arcs_by_pair
            .entry((g.color(u), g.color(v)))
            .or_default()
            .push((u, v));
    }
    for i in 1..=k {
        for j in i + 1..=k {
            if let Some(edges) = arcs_by_pair.get_mut(&(i, j)) {
                edges.sort_unstable();
                for &(u, v) in edges.iter() {
                    universe.push(format!("arc:{}:{}", g.vertices()[u], g.vertices()[v]));
                    universe.push(format!("arc:{}:{}", g.vertices()[v], g.vertices()[u]));
                }
            }
        }
    }
    let elem_index: HashMap<&str, usize> = universe
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_str(), i))
        .collect();
    let arc = |from: usize, to: usize| -> usize {
        elem_index[format!("arc:{}:{}", g.vertices()[from], g.vertices()[to]).as_str()]
    };

    let mut sets: Vec<(String, Vec<usize>)> = Vec::new();
    for (class_idx, class) in g.color_classes().iter().enumerate() {
        for &u in class {
            let mut elements = vec![elem_index[format!("col:{}", class_idx + 1).as_str()]];
            for w in g.neighbors(u) {
                elements.push(arc(u, w));
            }
            sets.push((format!("V:{}", g.vertices()[u]), elements));
        }
    }
    for i in 1..=k {
        for j in i + 1..=k {
            let Some(edges) = arcs_by_pair.get(&(i, j)) else {
                continue;
            };
            for &(u, v) in edges {
                let mut elements = vec![elem_index[format!("pair:{i}:{j}").as_str()]];
                for &(x, y) in edges {
                    // both directions of every edge in this color pair,
                    // except arcs leaving u or v
                    if x != u && x != v {
                        elements.push(arc(x, y));
                    }
                    if y != u && y != v {
                        elements.push(arc(y, x));
                    }
                }
                sets.push((
                    format!("E:{}:{}", g.vertices()[u], g.vertices()[v]),
                    elements,
                ));
            }
        }
    }
    let system = SetSystem::from_indices(universe, sets)?;
    Ok(ScEcInstance {
        system,
        k_prime: k + k * (k - 1) / 2,
    })
}

/// Guard for the clique enumeration: product of color-class sizes.
pub const MAX_CLIQUE_COMBINATIONS: u64 = 1_000_000;

/// First multicolored clique in lexicographic order (one vertex per color,
/// classes in color order), or `None`.
pub fn has_multicolored_clique(g: &ColoredGraph) -> Result<Option<Vec<usize>>> {
    let classes = g.color_classes();
    let mut combos: u64 = 1;
    for class in &classes {
        combos = combos.saturating_mul(class.len() as u64);
        if combos > MAX_CLIQUE_COMBINATIONS {
            return Err(Error::TooLarge(format!(
                "color-class product exceeds {MAX_CLIQUE_COMBINATIONS}"
            )));
        }
    }
    if combos == 0 {
        return Ok(None);
    }
    let mut pick = vec![0usize; classes.len()];
    loop {
        let chosen: Vec<usize> = pick.iter().zip(&classes).map(|(&i, c)| c[i]).collect();
        let is_clique = (0..chosen.len())
            .all(|a| (a + 1..chosen.len()).all(|b| g.has_edge(chosen[a], chosen[b])));
        if is_clique {
            return Ok(Some(chosen));
        }
        // odometer step
        let mut level = classes.len();
        loop {
            if level == 0 {
                return Ok(None);
            }
            level -= 1;
            pick[level] += 1;
            if pick[level] < classes[level].len() {
                break;
            }
            pick[level] = 0;
        }
    }
}

/// Exhaustively verifies the promise that every cover of size at most
/// `k_prime` is an exact cover.
pub fn check_scec_promise(inst: &ScEcInstance) -> Result<bool> {
    let s = &inst.system;
    let n = s.sets().len();
    if n > MAX_SETS_FOR_EXHAUSTIVE {
        return Err(Error::TooManySets {
            got: n,
            limit: MAX_SETS_FOR_EXHAUSTIVE,
        });
    }
    let (masks, full) = set_masks(s);
    let m = s.universe().len();
    for size in 0..=inst.k_prime.min(n) {
        let mut bad = false;
        for_each_combination(n, size, |combo| {
            let mut u = BitSet::empty(m);
            let mut total = 0usize;
            for &i in combo {
                u.union_with(&masks[i]);
                total += s.set(i).elements.len();
            }
            if u == full && total != m {
                bad = true;
                return true;
            }
            false
        });
        if bad {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcng::{d_gcnp_exact, SearchMode, SolverConfig};
    use crate::sets::min_set_cover;

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
    fn construction_matches_figure_instance() {
        let inst = sc_to_mcng(&fig_system()).unwrap();
        assert_eq!(
            inst.genome.tokens(),
            [
                "s:S1", "e:1", "e:2", "e:3", "s:S2", "e:1", "e:3", "e:4", "s:S3", "e:2", "e:3",
                "e:5"
            ]
            .map(String::from)
        );
        assert_eq!(
            inst.genome.alphabet().symbols(),
            [
                "s:S1", "s:S2", "s:S3", "e:1", "e:2", "e:3", "e:4", "e:5"
            ]
            .map(String::from)
        );
        assert_eq!(inst.target.counts(), &[1, 1, 1, 1, 1, 2, 0, 0]);
    }

    #[test]
    fn construction_degenerate_systems() {
        let single = SetSystem::new(
            vec!["u".to_string()],
            vec![("S1".into(), vec!["u".into()])],
        )
        .unwrap();
        let inst = sc_to_mcng(&single).unwrap();
        assert_eq!(inst.genome.tokens(), ["s:S1", "e:u"].map(String::from));
        assert_eq!(inst.target.counts(), &[1, 0]);

        let disjoint = SetSystem::new(
            ["u1", "u2"].map(String::from).to_vec(),
            vec![
                ("S1".into(), vec!["u1".into()]),
                ("S2".into(), vec!["u2".into()]),
            ],
        )
        .unwrap();
        let inst = sc_to_mcng(&disjoint).unwrap();
        assert_eq!(
            inst.genome.tokens(),
            ["s:S1", "e:u1", "s:S2", "e:u2"].map(String::from)
        );
        assert_eq!(inst.target.counts(), &[1, 1, 0, 0]);

        let uncovered = SetSystem::new(
            ["a", "b"].map(String::from).to_vec(),
            vec![("S1".into(), vec!["a".into()])],
        )
        .unwrap();
        assert!(matches!(
            sc_to_mcng(&uncovered),
            Err(Error::UncoveredElement(e)) if e == "b"
        ));
    }

    #[test]
    fn exact_cover_replays_to_target() {
        let s = SetSystem::new(
            ["1", "2", "3"].map(String::from).to_vec(),
            vec![
                ("S1".into(), vec!["1".into(), "2".into()]),
                ("S2".into(), vec!["3".into()]),
            ],
        )
        .unwrap();
        let inst = sc_to_mcng(&s).unwrap();
        let events = exact_cover_deletions(&s, &Cover::new(vec![0, 1])).unwrap();
        assert_eq!(events.len(), 2);
        let replayed = inst.genome.apply_sequence(&events).unwrap();
        assert_eq!(replayed.cnp(), inst.target);

        // overlapping cover is rejected with the offending overlap
        let err = exact_cover_deletions(&fig_system(), &Cover::new(vec![1, 2])).unwrap_err();
        assert!(err.to_string().contains("share element \"3\""), "{err}");

        let empty = SetSystem::new(vec![], vec![]).unwrap();
        assert_eq!(
            exact_cover_deletions(&empty, &Cover::new(vec![])).unwrap(),
            vec![]
        );
    }

    #[test]
    fn deletion_extraction_recovers_affected_separators() {
        let s = fig_system();
        let inst = sc_to_mcng(&s).unwrap();
        // delete all of q(S2), then e:2 and e:5 from the third block
        let events = vec![
            Event::Del { i: 6, j: 8 },
            Event::Del { i: 7, j: 7 },
            Event::Del { i: 8, j: 8 },
        ];
        let cover = extract_cover_deletions(&inst, &s, &events).unwrap();
        assert_eq!(cover.chosen, vec![1, 2]);

        // round trip through an exact cover
        let part = SetSystem::new(
            ["1", "2", "3"].map(String::from).to_vec(),
            vec![
                ("S1".into(), vec!["1".into(), "2".into()]),
                ("S2".into(), vec!["3".into()]),
            ],
        )
        .unwrap();
        let pinst = sc_to_mcng(&part).unwrap();
        let planted = Cover::new(vec![0, 1]);
        let events = exact_cover_deletions(&part, &planted).unwrap();
        assert_eq!(
            extract_cover_deletions(&pinst, &part, &events).unwrap().chosen,
            planted.sorted()
        );

        let single = SetSystem::new(
            vec!["u".to_string()],
            vec![("S1".into(), vec!["u".into()])],
        )
        .unwrap();
        let sinst = sc_to_mcng(&single).unwrap();
        let cover = extract_cover_deletions(&sinst, &single, &[Event::Del { i: 2, j: 2 }]).unwrap();
        assert_eq!(cover.chosen, vec![0]);
    }

    #[test]
    fn deletion_extraction_rejects_bad_input() {
        let s = fig_system();
        let inst = sc_to_mcng(&s).unwrap();
        assert!(matches!(
            extract_cover_deletions(&inst, &s, &[Event::Dup { i: 1, j: 1, p: 0 }]),
            Err(Error::HasDuplication)
        ));
        assert!(matches!(
            extract_cover_deletions(&inst, &s, &[Event::Del { i: 2, j: 2 }]),
            Err(Error::NotASolution(_))
        ));
    }

    #[test]
    fn general_extraction_handles_duplications() {
        let single = SetSystem::new(
            vec!["u".to_string()],
            vec![("S1".into(), vec!["u".into()])],
        )
        .unwrap();
        let inst = sc_to_mcng(&single).unwrap();
        // duplicate the element, then delete both copies in one span
        let events = vec![Event::Dup { i: 2, j: 2, p: 2 }, Event::Del { i: 2, j: 3 }];
        let cover = extract_cover_general(&inst, &single, &events).unwrap();
        assert_eq!(cover.chosen, vec![0]);

        // a genuine solver witness over the figure system stays a valid cover
        let s = fig_system();
        let finst = sc_to_mcng(&s).unwrap();
        let result = d_gcnp_exact(
            &finst.genome,
            &finst.target,
            3,
            SearchMode::AllEvents,
            &SolverConfig::default(),
        )
        .unwrap();
        let witness = match result {
            crate::mcng::SearchResult::Found { witness, .. } => witness,
            other => panic!("unexpected {other:?}"),
        };
        let cover = extract_cover_general(&finst, &s, &witness).unwrap();
        assert!(is_cover(&s, &cover));
        assert!(cover.chosen.len() <= 3);

        // specializing to deletions agrees with the dedicated extractor
        let part = SetSystem::new(
            ["1", "2", "3"].map(String::from).to_vec(),
            vec![
                ("S1".into(), vec!["1".into(), "2".into()]),
                ("S2".into(), vec!["3".into()]),
            ],
        )
        .unwrap();
        let pinst = sc_to_mcng(&part).unwrap();
        let planted = Cover::new(vec![0, 1]);
        let events = exact_cover_deletions(&part, &planted).unwrap();
        assert_eq!(
            extract_cover_general(&pinst, &part, &events).unwrap().chosen,
            planted.sorted()
        );
    }

    #[test]
    fn clique_reduction_single_edge() {
        let g = ColoredGraph::new(
            2,
            vec![("u".into(), 1), ("v".into(), 2)],
            vec![("u".into(), "v".into())],
        )
        .unwrap();
        let inst = mcq_to_scec(&g).unwrap();
        assert_eq!(inst.k_prime, 3);
        assert_eq!(
            inst.system.universe(),
            ["col:1", "col:2", "pair:1:2", "arc:u:v", "arc:v:u"].map(String::from)
        );
        let names: Vec<&str> = inst.system.sets().iter().map(|s| s.name.as_str()).collect();
        assert_eq!(names, ["V:u", "V:v", "E:u:v"]);
        // E:u:v covers only the pair element: both arcs leave u or v
        assert_eq!(inst.system.sets()[2].elements, vec![2]);

        let cover = min_set_cover(&inst.system, inst.k_prime).unwrap().unwrap();
        assert_eq!(cover.chosen.len(), 3);
        assert!(check_scec_promise(&inst).unwrap());
    }

    // Three edges between two color classes: u1v1, u1v2, u2v3. The set of
    // edge u1v1 covers the pair element plus every arc not leaving u1 or v1.
    #[test]
    fn clique_reduction_edge_set_contents() {
        let g = ColoredGraph::new(
            2,
            vec![
                ("u1".into(), 1),
                ("u2".into(), 1),
                ("v1".into(), 2),
                ("v2".into(), 2),
                ("v3".into(), 2),
            ],
            vec![
                ("u1".into(), "v1".into()),
                ("u1".into(), "v2".into()),
                ("u2".into(), "v3".into()),
            ],
        )
        .unwrap();
        let inst = mcq_to_scec(&g).unwrap();
        let set = inst
            .system
            .sets()
            .iter()
            .find(|s| s.name == "E:u1:v1")
            .unwrap();
        let elements: Vec<&str> = set
            .elements
            .iter()
            .map(|&e| inst.system.element_name(e))
            .collect();
        let expected = ["pair:1:2", "arc:v2:u1", "arc:u2:v3", "arc:v3:u2"];
        assert_eq!(
            elements.iter().collect::<std::collections::BTreeSet<_>>(),
            expected.iter().collect::<std::collections::BTreeSet<_>>()
        );
    }

    #[test]
    fn clique_reduction_empty_color_class() {
        let g = ColoredGraph::new(2, vec![("u".into(), 1)], vec![]).unwrap();
        assert_eq!(has_multicolored_clique(&g).unwrap(), None);
        let inst = mcq_to_scec(&g).unwrap();
        // col:2 exists but no set covers it
        assert!(inst.system.universe().contains(&"col:2".to_string()));
        assert_eq!(min_set_cover(&inst.system, inst.k_prime).unwrap(), None);
    }

    #[test]
    fn multicolored_clique_basics() {
        let triangle = ColoredGraph::new(
            3,
            vec![("a".into(), 1), ("b".into(), 2), ("c".into(), 3)],
            vec![
                ("a".into(), "b".into()),
                ("a".into(), "c".into()),
                ("b".into(), "c".into()),
            ],
        )
        .unwrap();
        assert_eq!(has_multicolored_clique(&triangle).unwrap(), Some(vec![0, 1, 2]));

        let edgeless =
            ColoredGraph::new(2, vec![("a".into(), 1), ("b".into(), 2)], vec![]).unwrap();
        assert_eq!(has_multicolored_clique(&edgeless).unwrap(), None);

        let path = ColoredGraph::new(
            2,
            vec![("a".into(), 1), ("b".into(), 2)],
            vec![("a".into(), "b".into())],
        )
        .unwrap();
        assert_eq!(has_multicolored_clique(&path).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn improper_coloring_is_rejected() {
        let err = ColoredGraph::new(
            2,
            vec![("a".into(), 1), ("b".into(), 1)],
            vec![("a".into(), "b".into())],
        )
        .unwrap_err();
        assert!(matches!(err, Error::ImproperColoring(_)));
    }

    #[test]
    fn promise_check_on_plain_systems() {
        let fig = fig_system();
        // {S2, S3} covers with overlap at element 3
        assert!(!check_scec_promise(&ScEcInstance {
            system: fig.clone(),
            k_prime: 2
        })
        .unwrap());
        assert!(!check_scec_promise(&ScEcInstance {
            system: fig,
            k_prime: 3
        })
        .unwrap());

        let disjoint = SetSystem::new(
            ["1", "2"].map(String::from).to_vec(),
            vec![
                ("A".into(), vec!["1".into()]),
                ("B".into(), vec!["2".into()]),
            ],
        )
        .unwrap();
        for k in 0..=2 {
            assert!(check_scec_promise(&ScEcInstance {
                system: disjoint.clone(),
                k_prime: k
            })
            .unwrap());
        }
    }
}
