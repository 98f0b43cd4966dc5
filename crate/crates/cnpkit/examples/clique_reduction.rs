//! Multicolored clique to exact-cover-promise set systems: a k-clique with
//! one vertex per color exists exactly when the constructed system has a
//! cover of size k + C(k,2), and any such cover is automatically exact.
//!
//! Run with: cargo run -p cnpkit --example clique_reduction

use cnpkit::reductions::{check_scec_promise, has_multicolored_clique, mcq_to_scec, ColoredGraph};
use cnpkit::sets::min_set_cover;

fn run_on(name: &str, graph: &ColoredGraph) {
    println!("== {name}");
    let clique = has_multicolored_clique(graph).unwrap();
    match &clique {
        Some(vs) => {
            let names: Vec<&str> = vs.iter().map(|&v| graph.vertices()[v].as_str()).collect();
            println!("multicolored clique: {}", names.join(" "));
        }
        None => println!("no multicolored clique"),
    }

    let inst = mcq_to_scec(graph).unwrap();
    println!(
        "constructed system: {} elements, {} sets, k' = {}",
        inst.system.universe().len(),
        inst.system.sets().len(),
        inst.k_prime
    );

    let cover = min_set_cover(&inst.system, inst.k_prime).unwrap();
    match &cover {
        Some(c) => {
            let names: Vec<&str> = c
                .chosen
                .iter()
                .map(|&i| inst.system.set(i).name.as_str())
                .collect();
            println!("cover of size {}: {}", c.chosen.len(), names.join(" "));
        }
        None => println!("no cover within k'"),
    }
    assert_eq!(clique.is_some(), cover.is_some());

    // the promise: within k', covers can only be exact
    assert!(check_scec_promise(&inst).unwrap());
    println!("promise verified: every cover within k' is exact");
}

fn main() {
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
    run_on("triangle, k = 3", &triangle);

    // two "u" vertices of color 1, three "v" vertices of color 2, edges
    // u1v1, u1v2, u2v3 — has a clique (any edge is one)
    let bipartite = ColoredGraph::new(
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
    run_on("three-edge bipartite, k = 2", &bipartite);

    let edgeless = ColoredGraph::new(
        2,
        vec![("a".into(), 1), ("b".into(), 2)],
        vec![],
    )
    .unwrap();
    run_on("edgeless, k = 2", &edgeless);
}
