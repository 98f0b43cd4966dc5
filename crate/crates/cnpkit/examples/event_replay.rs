//! Segmental deletions and duplications, applied one at a time and as a
//! sequence, with origin tags tracing which original characters survive.
//!
//! Run with: cargo run -p cnpkit --example event_replay

use cnpkit::genome::{Alphabet, Event, Genome};
use cnpkit::surviving_origins;

fn main() {
    let alphabet = Alphabet::from_chars("abc").unwrap();
    let g1 = Genome::from_str_chars(&alphabet, "abbccabcab").unwrap();

    // delete positions 5..=7, then copy positions 2..=5 in after position 6
    let chain = [Event::Del { i: 5, j: 7 }, Event::Dup { i: 2, j: 5, p: 6 }];

    let g2 = g1.apply(&chain[0]).unwrap();
    let g3 = g2.apply(&chain[1]).unwrap();
    println!("g1: {g1}");
    println!("g2: {g2}   after {}", chain[0]);
    println!("g3: {g3}   after {}", chain[1]);
    assert_eq!(g3, g1.apply_sequence(&chain).unwrap());
    assert_eq!(g3.to_string(), "abbccabbccb");

    // events can only shuffle existing material: duplications never create
    // a symbol that is absent
    assert_eq!(g3.cnp().count("c").unwrap(), 4);

    // origin tags: each character remembers the original position it
    // descends from, through any number of copies
    let tagged = g1.with_origins().apply_sequence(&chain).unwrap();
    let rendered: Vec<String> = tagged
        .seq()
        .iter()
        .map(|&(id, origin)| format!("{}@{origin}", alphabet.symbol(id)))
        .collect();
    println!("tagged g3: {}", rendered.join(" "));
    assert_eq!(tagged.erase_origins(), g3);

    // positions 5..=7 of g1 were deleted with no copies made first, so they
    // are exactly the origins without surviving descendants
    let survivors = surviving_origins(&g1, &chain).unwrap();
    let dead: Vec<usize> = (1..=g1.len()).filter(|p| !survivors.contains(p)).collect();
    println!("origins with no descendants: {dead:?}");
    assert_eq!(dead, vec![5, 6, 7]);
}
