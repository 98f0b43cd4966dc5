//! Toolkit for copy-number profiles under segmental duplications and
//! deletions.
//!
//! What's here:
//!
//! * [`genome`] — alphabets, genomes, copy-number profiles (Parikh vectors),
//!   the two string events, and origin tagging for tracing descendants of
//!   each original character.
//! * [`mcng`] — exact, budget-bounded computation of the genome-to-CNP and
//!   genome-to-genome distances by iterative-deepening enumeration. The
//!   general problem is intractable, so this is a desk-scale oracle.
//! * [`cnpc`] — adjacency/breakpoint metrics between strings and the
//!   polynomial profile-conforming construction that realizes two CNPs as
//!   strings with the maximum number of common adjacencies, plus a
//!   brute-force oracle over multiset permutations.
//! * [`sets`] — set systems, covers, exact covers, an exhaustive minimum
//!   set-cover solver, subset closure and cover disjointification.
//! * [`reductions`] — the set-cover-to-MCNG instance construction with both
//!   cover-to-deletions and events-to-cover converters, and the
//!   multicolored-clique-to-exact-cover construction.
//! * [`verify`] — seeded/exhaustive property checks binding the structural
//!   claims behind the constructions to reproducible pass/fail reports.
//! * [`json`] — the JSON document formats used by the CLI and the examples.
//!
//! The `cnpkit` binary exposes all of it over JSON documents; see the
//! `examples/` directory for library usage.

pub mod cli;
pub mod cnpc;
pub mod error;
pub mod genome;
pub mod json;
pub mod mcng;
pub mod reductions;
pub mod sets;
pub mod verify;

pub use error::{Error, Result};
pub use genome::{surviving_origins, Alphabet, Cnp, Event, Genome, OriginTaggedGenome};
pub use mcng::{d_gcnp_exact, d_gg_exact, feasible, McngInstance, SearchMode, SearchResult, SolverConfig};
