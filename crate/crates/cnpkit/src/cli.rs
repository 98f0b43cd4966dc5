//! Command-line front end over the JSON document formats.
//!
//! Arguments accept inline JSON (anything starting with `{` or `[`), a path
//! to a JSON file, or — for genomes over single-character alphabets — a
//! plain string like `abbcbbcca`. Plain strings infer their alphabet from
//! the sorted distinct characters of all plain-string arguments, unless a
//! JSON argument in the same invocation already fixes one.
//!
//! Exit codes: 0 success/pass, 1 check failure, 2 usage or format error,
//! 3 guard or budget exhaustion.

use std::collections::BTreeSet;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cnpc::{adjacencies, breakpoint_distance, breakpoints, cnpc_brute_force, cnpc_solve};
use crate::error::{Error, Result};
use crate::genome::{Alphabet, Genome};
use crate::json::{
    cnp_from_json, cnp_to_json, cnpc_solution_to_json, colored_graph_from_json, events_from_json,
    genome_from_json, genome_to_json, mcng_instance_to_json, scec_instance_to_json,
    search_result_to_json, set_system_from_json, set_system_to_json,
};
use crate::mcng::{d_gcnp_exact, d_gg_exact, SearchMode, SearchResult, SolverConfig};
use crate::reductions::{mcq_to_scec, sc_to_mcng};
use crate::sets::subset_closure;
use crate::verify;

pub const NODE_CEILING_ENV: &str = "CNPKIT_NODE_CEILING";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "cnpkit",
    version,
    about = "Copy-number profile toolkit: exact event-distance search, breakpoint-distance profile conforming, and set-cover reductions"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include wall-clock timing in verification reports
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the copy-number profile of a genome
    Cnp { genome: String },
    /// Apply an event sequence to a genome
    Apply { genome: String, events: String },
    /// Exact genome-to-CNP distance within a budget
    Mcng {
        genome: String,
        cnp: String,
        #[arg(long, default_value_t = 4)]
        budget: usize,
        #[arg(long)]
        deletions_only: bool,
    },
    /// Exact genome-to-genome distance within a budget
    Dgg {
        g1: String,
        g2: String,
        #[arg(long, default_value_t = 4)]
        budget: usize,
    },
    /// Realize two profiles as strings maximizing common adjacencies
    Cnpc {
        cnp1: String,
        cnp2: String,
        /// Cross-check against the brute-force oracle (small inputs only)
        #[arg(long)]
        oracle: bool,
    },
    /// Adjacency and breakpoint counts between two strings
    Adjacency { s1: String, s2: String },
    /// Instance constructions
    #[command(subcommand)]
    Reduce(Reduce),
    /// Run a property-check suite: lemma2, extraction, alternation,
    /// propositions, cnpc or w1
    Verify {
        check: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        trials: u64,
        /// Check-specific size bound (alternation n, cnpc sum, w1 vertices)
        #[arg(long)]
        max: Option<u64>,
        /// Sequence budget for the extraction check
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum Reduce {
    /// Set system to genome + target profile
    ScMcng { system: String },
    /// Properly colored graph to an exact-cover-promise set system
    McqScec { graph: String },
    /// Replace every set by all its non-empty subsets
    SubsetClosure {
        system: String,
        #[arg(long)]
        t: usize,
    },
}

/// Parses and runs an invocation; returns the process exit code.
pub fn run(argv: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_guard() {
                3
            } else {
                2
            }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Cnp { genome } => {
            let g = one_genome(genome)?;
            let c = g.cnp();
            emit(cli, cnp_to_json(&c), c.to_string());
            Ok(0)
        }
        Command::Apply { genome, events } => {
            let g = one_genome(genome)?;
            let events = events_from_json(&load_json(events)?)?;
            let out = g.apply_sequence(&events)?;
            emit(cli, genome_to_json(&out), out.to_string());
            Ok(0)
        }
        Command::Mcng {
            genome,
            cnp,
            budget,
            deletions_only,
        } => {
            let target = cnp_from_json(&load_json(cnp)?)?;
            let g = genome_with_context(genome, Some(target.alphabet()))?;
            let mode = if *deletions_only {
                SearchMode::DeletionsOnly
            } else {
                SearchMode::AllEvents
            };
            let result = d_gcnp_exact(&g, &target, *budget, mode, &solver_config()?)?;
            emit_search(cli, &result);
            Ok(search_exit(&result))
        }
        Command::Dgg { g1, g2, budget } => {
            let (a, b) = two_genomes(g1, g2)?;
            let result = d_gg_exact(&a, &b, *budget, &solver_config()?)?;
            emit_search(cli, &result);
            Ok(search_exit(&result))
        }
        Command::Cnpc { cnp1, cnp2, oracle } => {
            let c1 = cnp_from_json(&load_json(cnp1)?)?;
            let c2 = cnp_from_json(&load_json(cnp2)?)?;
            let sol = cnpc_solve(&c1, &c2)?;
            let mut doc = cnpc_solution_to_json(&sol);
            let mut text = format!(
                "s1: {}\ns2: {}\nadjacencies: {}\nn_star: {}",
                sol.s1, sol.s2, sol.adjacencies, sol.n_star
            );
            if *oracle {
                let best = cnpc_brute_force(&c1, &c2)?;
                doc.as_object_mut()
                    .unwrap()
                    .insert("oracle".into(), json!(best));
                text.push_str(&format!("\noracle: {best}"));
            }
            emit(cli, doc, text);
            Ok(0)
        }
        Command::Adjacency { s1, s2 } => {
            let (a, b) = two_genomes(s1, s2)?;
            let adj = adjacencies(&a, &b)?;
            let (ba, bb) = breakpoints(&a, &b)?;
            let dist = breakpoint_distance(&a, &b)?;
            emit(
                cli,
                json!({
                    "adjacencies": adj,
                    "breakpoints": [ba, bb],
                    "breakpoint_distance": dist,
                }),
                format!(
                    "adjacencies: {adj}\nbreakpoints: ({ba}, {bb})\nbreakpoint distance: {dist}"
                ),
            );
            Ok(0)
        }
        Command::Reduce(reduce) => {
            match reduce {
                Reduce::ScMcng { system } => {
                    let s = set_system_from_json(&load_json(system)?)?;
                    let inst = sc_to_mcng(&s)?;
                    emit(
                        cli,
                        mcng_instance_to_json(&inst),
                        format!("genome: {}\ntarget: {}", inst.genome, inst.target),
                    );
                }
                Reduce::McqScec { graph } => {
                    let g = colored_graph_from_json(&load_json(graph)?)?;
                    let inst = mcq_to_scec(&g)?;
                    emit(
                        cli,
                        scec_instance_to_json(&inst),
                        format!(
                            "k_prime: {}\n{}",
                            inst.k_prime,
                            render_system(&inst.system)
                        ),
                    );
                }
                Reduce::SubsetClosure { system, t } => {
                    let s = set_system_from_json(&load_json(system)?)?;
                    let closed = subset_closure(&s, *t)?;
                    emit(cli, set_system_to_json(&closed), render_system(&closed));
                }
            }
            Ok(0)
        }
        Command::Verify {
            check,
            seed,
            trials,
            max,
            budget,
        } => {
            let report = match check.as_str() {
                "lemma2" => verify::check_lemma2(*trials, *seed)?,
                "extraction" => verify::check_extraction(budget.unwrap_or(2))?,
                "alternation" => verify::check_alternation(max.unwrap_or(2) as usize)?,
                "propositions" => verify::check_propositions(*trials, *seed)?,
                "cnpc" => verify::check_cnpc(max.unwrap_or(6))?,
                "w1" => verify::check_w1_reduction(max.unwrap_or(6) as usize, *trials, *seed)?,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown check {other:?}; expected lemma2, extraction, alternation, propositions, cnpc or w1"
                    )))
                }
            };
            emit(
                cli,
                report.to_json(cli.timing),
                report.render_text(cli.timing),
            );
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn render_system(s: &crate::sets::SetSystem) -> String {
    let mut out = format!("universe: {}", s.universe().join(" "));
    for set in s.sets() {
        out.push_str(&format!(
            "\n{}: {}",
            set.name,
            set.elements
                .iter()
                .map(|&e| s.element_name(e))
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    out
}

fn emit(cli: &Cli, doc: Value, text: String) {
    match cli.format {
        Format::Json => println!("{doc}"),
        Format::Text => println!("{text}"),
    }
}

fn emit_search(cli: &Cli, result: &SearchResult) {
    let text = match result {
        SearchResult::Found { distance, witness } => format!(
            "status: found\ndistance: {distance}\nwitness: {}",
            witness
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        ),
        SearchResult::Infeasible => "status: infeasible".to_string(),
        SearchResult::ExceedsBudget { budget } => {
            format!("status: budget\nno solution within {budget} events")
        }
    };
    emit(cli, search_result_to_json(result), text);
}

fn search_exit(result: &SearchResult) -> i32 {
    match result {
        SearchResult::ExceedsBudget { .. } => 3,
        _ => 0,
    }
}

fn solver_config() -> Result<SolverConfig> {
    let mut config = SolverConfig::default();
    if let Ok(raw) = std::env::var(NODE_CEILING_ENV) {
        config.node_ceiling = raw.parse().map_err(|_| {
            Error::InvalidInput(format!("{NODE_CEILING_ENV} must be an integer, got {raw:?}"))
        })?;
    }
    Ok(config)
}

enum Arg {
    Json(Value),
    Plain(String),
}

fn load_arg(arg: &str) -> Result<Arg> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(Arg::Json(serde_json::from_str(arg)?));
    }
    let path = std::path::Path::new(arg);
    if path.exists() {
        return Ok(Arg::Json(serde_json::from_str(&std::fs::read_to_string(
            path,
        )?)?));
    }
    if !arg.is_empty() && arg.chars().all(|c| c.is_ascii_alphanumeric()) {
        return Ok(Arg::Plain(arg.to_string()));
    }
    Err(Error::InvalidInput(format!(
        "{arg:?} is neither inline JSON, an existing file, nor a plain genome string"
    )))
}

fn load_json(arg: &str) -> Result<Value> {
    match load_arg(arg)? {
        Arg::Json(v) => Ok(v),
        Arg::Plain(_) => Err(Error::InvalidInput(format!(
            "{arg:?}: expected a JSON document (inline or path)"
        ))),
    }
}

fn chars_alphabet(strings: &[&str]) -> Result<Arc<Alphabet>> {
    let distinct: BTreeSet<char> = strings.iter().flat_map(|s| s.chars()).collect();
    Alphabet::new(distinct.iter().map(|c| c.to_string()))
}

fn one_genome(arg: &str) -> Result<Genome> {
    genome_with_context(arg, None)
}

fn genome_with_context(arg: &str, context: Option<&Arc<Alphabet>>) -> Result<Genome> {
    match load_arg(arg)? {
        Arg::Json(v) => genome_from_json(&v),
        Arg::Plain(s) => {
            let alphabet = match context {
                Some(a) => Arc::clone(a),
                None => chars_alphabet(&[&s])?,
            };
            Genome::from_str_chars(&alphabet, &s)
        }
    }
}

fn two_genomes(a: &str, b: &str) -> Result<(Genome, Genome)> {
    let (la, lb) = (load_arg(a)?, load_arg(b)?);
    match (la, lb) {
        (Arg::Json(va), Arg::Json(vb)) => Ok((genome_from_json(&va)?, genome_from_json(&vb)?)),
        (Arg::Json(va), Arg::Plain(sb)) => {
            let ga = genome_from_json(&va)?;
            let gb = Genome::from_str_chars(ga.alphabet(), &sb)?;
            Ok((ga, gb))
        }
        (Arg::Plain(sa), Arg::Json(vb)) => {
            let gb = genome_from_json(&vb)?;
            let ga = Genome::from_str_chars(gb.alphabet(), &sa)?;
            Ok((ga, gb))
        }
        (Arg::Plain(sa), Arg::Plain(sb)) => {
            let alphabet = chars_alphabet(&[&sa, &sb])?;
            Ok((
                Genome::from_str_chars(&alphabet, &sa)?,
                Genome::from_str_chars(&alphabet, &sb)?,
            ))
        }
    }
}
