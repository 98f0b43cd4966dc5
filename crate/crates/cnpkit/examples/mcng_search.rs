//! Exact genome-to-CNP and genome-to-genome distances by budget-bounded
//! exhaustive search.
//!
//! Run with: cargo run --release -p cnpkit --example mcng_search

use std::sync::Arc;

use cnpkit::genome::{Alphabet, Cnp, Genome};
use cnpkit::mcng::{d_gcnp_exact, d_gg_exact, feasible, SearchMode, SearchResult, SolverConfig};

fn main() {
    let alphabet = Alphabet::from_chars("pqrabcde").unwrap();
    // three blocks p|abc q|acd r|bce; every element letter must lose one
    // copy, separators stay at one
    let genome = Genome::from_str_chars(&alphabet, "pabcqacdrbce").unwrap();
    let target = Cnp::new(Arc::clone(&alphabet), vec![1, 1, 1, 1, 1, 2, 0, 0]).unwrap();
    let config = SolverConfig::default();

    assert!(feasible(&genome, &target).unwrap());
    match d_gcnp_exact(&genome, &target, 3, SearchMode::AllEvents, &config).unwrap() {
        SearchResult::Found { distance, witness } => {
            println!("genome {genome} -> profile {target}");
            println!("distance {distance} via:");
            for ev in &witness {
                println!("  {ev}");
            }
            let replayed = genome.apply_sequence(&witness).unwrap();
            assert_eq!(replayed.cnp(), target);
            println!("replayed end state: {replayed}");
        }
        other => panic!("unexpected {other:?}"),
    }

    // restricting to deletions can only make things worse, never better
    let dels = d_gcnp_exact(&genome, &target, 3, SearchMode::DeletionsOnly, &config).unwrap();
    println!("deletions-only distance: {:?}", dels.distance());

    // budgets are hard bounds: below the true distance the search reports
    // exhaustion rather than guessing
    let short = d_gcnp_exact(&genome, &target, 2, SearchMode::AllEvents, &config).unwrap();
    assert!(matches!(short, SearchResult::ExceedsBudget { budget: 2 }));
    println!("budget 2: exceeded (distance is 3)");

    // absent symbols are uncreatable, which the solver reports exactly
    let ab = Alphabet::from_chars("ab").unwrap();
    let lone = Genome::from_str_chars(&ab, "a").unwrap();
    let needs_b = Cnp::new(Arc::clone(&ab), vec![1, 1]).unwrap();
    assert!(matches!(
        d_gcnp_exact(&lone, &needs_b, 9, SearchMode::AllEvents, &config).unwrap(),
        SearchResult::Infeasible
    ));
    println!("target needing an absent symbol: infeasible");

    // string-to-string distance: same event model, exact string equality
    let abc = Alphabet::from_chars("abc").unwrap();
    let from = Genome::from_str_chars(&abc, "abbccabcab").unwrap();
    let to = Genome::from_str_chars(&abc, "abbccabbccb").unwrap();
    match d_gg_exact(&from, &to, 2, &config).unwrap() {
        SearchResult::Found { distance, witness } => {
            println!("{from} -> {to} in {distance} events");
            assert_eq!(from.apply_sequence(&witness).unwrap(), to);
        }
        other => panic!("unexpected {other:?}"),
    }
}
