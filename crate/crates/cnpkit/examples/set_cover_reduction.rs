//! From set systems to genome/profile instances and back: exact covers
//! map to deletion sequences, solutions map back to covers, and the
//! subset-closure + disjointification pair turns any cover into an exact
//! cover of the closed system.
//!
//! Run with: cargo run --release -p cnpkit --example set_cover_reduction

use cnpkit::mcng::{d_gcnp_exact, SearchMode, SearchResult, SolverConfig};
use cnpkit::reductions::{
    exact_cover_deletions, extract_cover_deletions, extract_cover_general, sc_to_mcng,
};
use cnpkit::sets::{disjointify, is_exact_cover, min_set_cover, subset_closure, Cover, SetSystem};

fn main() {
    let system = SetSystem::new(
        ["1", "2", "3", "4", "5"].map(String::from).to_vec(),
        vec![
            ("S1".into(), vec!["1".into(), "2".into(), "3".into()]),
            ("S2".into(), vec!["1".into(), "3".into(), "4".into()]),
            ("S3".into(), vec!["2".into(), "3".into(), "5".into()]),
        ],
    )
    .unwrap();

    let inst = sc_to_mcng(&system).unwrap();
    println!("genome : {}", inst.genome);
    println!("target : {}", inst.target);

    // the minimum cover is {S2, S3}, but it overlaps at element 3, so it
    // does not translate into two whole-block deletions
    let cover = min_set_cover(&system, 3).unwrap().unwrap();
    println!("minimum cover: {:?}", cover.chosen);
    assert!(!is_exact_cover(&system, &cover));
    assert!(exact_cover_deletions(&system, &cover).is_err());

    // the exact distance needs one extra event
    let config = SolverConfig::default();
    let result = d_gcnp_exact(&inst.genome, &inst.target, 3, SearchMode::AllEvents, &config).unwrap();
    let SearchResult::Found { distance, witness } = result else {
        panic!("expected a solution");
    };
    println!("exact distance: {distance}");

    // any solution maps back to a cover at most as large
    let recovered = extract_cover_general(&inst, &system, &witness).unwrap();
    println!("cover recovered from the witness: {:?}", recovered.chosen);
    assert!(recovered.chosen.len() <= distance);

    // a partition maps to one deletion per part, and extraction returns it
    let partition = SetSystem::new(
        ["1", "2", "3"].map(String::from).to_vec(),
        vec![
            ("A".into(), vec!["1".into(), "2".into()]),
            ("B".into(), vec!["3".into()]),
        ],
    )
    .unwrap();
    let pinst = sc_to_mcng(&partition).unwrap();
    let planted = Cover::new(vec![0, 1]);
    let deletions = exact_cover_deletions(&partition, &planted).unwrap();
    println!("\npartition cover -> {} deletions", deletions.len());
    assert_eq!(pinst.genome.apply_sequence(&deletions).unwrap().cnp(), pinst.target);
    let back = extract_cover_deletions(&pinst, &partition, &deletions).unwrap();
    assert_eq!(back.sorted(), planted.sorted());

    // closure + disjointification: the overlapping cover becomes an exact
    // cover of the closed system, no larger than the original
    let closed = subset_closure(&system, 3).unwrap();
    println!("closure has {} sets", closed.sets().len());

    let parts = disjointify(&system, &cover).unwrap();
    let named: Vec<String> = parts
        .iter()
        .map(|p| {
            format!(
                "{{{}}}",
                p.iter()
                    .map(|&e| system.element_name(e))
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    println!("disjointified cover: {}", named.join(" "));

    // each residual exists verbatim in the closure, so the closed system
    // has an exact cover of the same size
    let chosen: Vec<usize> = named
        .iter()
        .map(|n| {
            closed
                .sets()
                .iter()
                .position(|s| &s.name == n)
                .expect("residual present in closure")
        })
        .collect();
    assert!(is_exact_cover(&closed, &Cover::new(chosen)));
    println!("…and it is an exact cover of the closed system");
}
