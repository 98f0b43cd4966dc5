//! Alphabets, genomes and copy-number profiles, plus the JSON documents
//! the CLI speaks.
//!
//! Run with: cargo run -p cnpkit --example cnp_basics

use cnpkit::genome::{Alphabet, Genome};
use cnpkit::json::{cnp_to_json, genome_from_json, genome_to_json};

fn main() {
    // an ordered alphabet fixes profile component order once and for all
    let alphabet = Alphabet::from_chars("abc").unwrap();
    let genome = Genome::from_str_chars(&alphabet, "abbcbbcca").unwrap();

    let profile = genome.cnp();
    println!("genome  : {genome}");
    println!("profile : {profile}");
    assert_eq!(profile.counts(), &[2, 4, 3]);
    assert_eq!(profile.count("b").unwrap(), 4);

    // zeroing one component / dropping one symbol
    println!("profile - b : {}", profile.zero_symbol("b").unwrap());
    println!("genome - b  : {}", genome.remove_symbol("b").unwrap());

    // multi-character symbols work the same way; genomes render token-wise
    let wide = Alphabet::new(["s:S1", "e:1", "e:2"]).unwrap();
    let block = Genome::parse(&wide, &["s:S1", "e:1", "e:2"]).unwrap();
    println!("block genome: {block}");

    // JSON round trip
    let doc = genome_to_json(&genome);
    println!("genome JSON : {doc}");
    assert_eq!(genome_from_json(&doc).unwrap(), genome);
    println!("profile JSON: {}", cnp_to_json(&profile));
}
