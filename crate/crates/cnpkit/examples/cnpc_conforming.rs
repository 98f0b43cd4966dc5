//! Realizing two copy-number profiles as strings with as many common
//! adjacencies as possible, and the breakpoint metrics behind it.
//!
//! Run with: cargo run -p cnpkit --example cnpc_conforming

use std::sync::Arc;

use cnpkit::cnpc::{
    adjacencies, breakpoint_distance, breakpoints, cnpc_brute_force, cnpc_solve,
    find_transfer_pair, max_common_subvector,
};
use cnpkit::genome::{Alphabet, Cnp, Genome};

fn main() {
    let alphabet = Alphabet::from_chars("abcd").unwrap();
    let a = Genome::from_str_chars(&alphabet, "acbdcb").unwrap();
    let b = Genome::from_str_chars(&alphabet, "abcdabcd").unwrap();
    println!("a = {a}, b = {b}");
    println!("adjacencies        : {}", adjacencies(&a, &b).unwrap());
    println!("breakpoints        : {:?}", breakpoints(&a, &b).unwrap());
    println!(
        "breakpoint distance: {}",
        breakpoint_distance(&a, &b).unwrap()
    );

    // profile conforming: choose the strings, maximize shared adjacencies
    let wide = Alphabet::from_chars("abcde").unwrap();
    let c1 = Cnp::new(Arc::clone(&wide), vec![2, 2, 2, 4, 1]).unwrap();
    let c2 = Cnp::new(Arc::clone(&wide), vec![4, 4, 1, 1, 1]).unwrap();

    let v = max_common_subvector(&c1, &c2).unwrap();
    println!("\nc1 = {c1}, c2 = {c2}");
    println!("maximum common sub-vector v = {v}, n* = {}", v.total());

    // a transfer pair buys the last adjacency on top of n* - 1
    let pair = find_transfer_pair(&c1, &c2, &v).unwrap();
    if let Some((x, y)) = pair {
        println!(
            "transfer pair: ({}, {})",
            wide.symbol(x),
            wide.symbol(y)
        );
    }

    let sol = cnpc_solve(&c1, &c2).unwrap();
    println!("s1 = {}", sol.s1);
    println!("s2 = {}", sol.s2);
    println!("adjacencies = {} (n* = {})", sol.adjacencies, sol.n_star);
    assert_eq!(sol.adjacencies, 7);
    assert_eq!(sol.s1.cnp(), c1);
    assert_eq!(sol.s2.cnp(), c2);

    // on small inputs the brute-force oracle confirms optimality
    let ab = Alphabet::from_chars("ab").unwrap();
    let d1 = Cnp::new(Arc::clone(&ab), vec![2, 1]).unwrap();
    let d2 = Cnp::new(Arc::clone(&ab), vec![1, 1]).unwrap();
    let small = cnpc_solve(&d1, &d2).unwrap();
    let best = cnpc_brute_force(&d1, &d2).unwrap();
    println!("\nsmall pair {d1} vs {d2}: construction {} = oracle {best}", small.adjacencies);
    assert_eq!(small.adjacencies, best);
    // no surplus on the second side, so no transfer pair: n* - 1 is optimal
    assert_eq!(small.adjacencies, small.n_star - 1);
}
