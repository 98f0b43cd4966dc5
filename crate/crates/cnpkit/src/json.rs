//! JSON document formats used by the CLI, the examples and the reports.
//!
//! Documents carry symbol names, never internal ids:
//!
//! * genome: `{"alphabet": ["a","b"], "seq": ["a","b","a"]}`
//! * profile: `{"alphabet": ["a","b"], "counts": [2,1]}`
//! * events: `[{"op":"del","i":5,"j":7}, {"op":"dup","i":2,"j":5,"p":6}]`
//! * set system: `{"universe": ["1","2"], "sets": {"S1": ["1"], ...}}`
//! * colored graph: `{"k": 2, "colors": {"u": 1, "v": 2}, "edges": [["u","v"]]}`

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::cnpc::CnpcSolution;
use crate::error::{Error, Result};
use crate::genome::{Alphabet, Cnp, Event, Genome};
use crate::mcng::{McngInstance, SearchResult};
use crate::reductions::{ColoredGraph, ScEcInstance};
use crate::sets::SetSystem;

fn field<'v>(v: &'v Value, name: &str) -> Result<&'v Value> {
    v.get(name)
        .ok_or_else(|| Error::InvalidInput(format!("missing field {name:?}")))
}

fn string_list(v: &Value, what: &str) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| Error::InvalidInput(format!("{what} must be an array")))?
        .iter()
        .map(|s| {
            s.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::InvalidInput(format!("{what} entries must be strings")))
        })
        .collect()
}

fn alphabet_from(v: &Value) -> Result<Arc<Alphabet>> {
    Alphabet::new(string_list(field(v, "alphabet")?, "alphabet")?)
}

pub fn genome_to_json(g: &Genome) -> Value {
    json!({
        "alphabet": g.alphabet().symbols(),
        "seq": g.tokens(),
    })
}

pub fn genome_from_json(v: &Value) -> Result<Genome> {
    let alphabet = alphabet_from(v)?;
    let tokens = string_list(field(v, "seq")?, "seq")?;
    Genome::parse(&alphabet, &tokens)
}

pub fn cnp_to_json(c: &Cnp) -> Value {
    json!({
        "alphabet": c.alphabet().symbols(),
        "counts": c.counts(),
    })
}

pub fn cnp_from_json(v: &Value) -> Result<Cnp> {
    let alphabet = alphabet_from(v)?;
    let counts = field(v, "counts")?
        .as_array()
        .ok_or_else(|| Error::InvalidInput("counts must be an array".into()))?
        .iter()
        .map(|c| {
            c.as_u64()
                .ok_or_else(|| Error::InvalidInput("counts must be non-negative integers".into()))
        })
        .collect::<Result<Vec<u64>>>()?;
    Cnp::new(alphabet, counts)
}

pub fn events_to_json(events: &[Event]) -> Value {
    serde_json::to_value(events).expect("events serialize infallibly")
}

pub fn events_from_json(v: &Value) -> Result<Vec<Event>> {
    Ok(serde_json::from_value(v.clone())?)
}

pub fn set_system_to_json(s: &SetSystem) -> Value {
    let mut sets = Map::new();
    for set in s.sets() {
        sets.insert(
            set.name.clone(),
            Value::Array(
                set.elements
                    .iter()
                    .map(|&e| Value::String(s.element_name(e).to_string()))
                    .collect(),
            ),
        );
    }
    json!({
        "universe": s.universe(),
        "sets": sets,
    })
}

pub fn set_system_from_json(v: &Value) -> Result<SetSystem> {
    let universe = string_list(field(v, "universe")?, "universe")?;
    let sets_obj = field(v, "sets")?
        .as_object()
        .ok_or_else(|| Error::InvalidInput("sets must be an object".into()))?;
    let sets = sets_obj
        .iter()
        .map(|(name, elems)| Ok((name.clone(), string_list(elems, "set elements")?)))
        .collect::<Result<Vec<_>>>()?;
    SetSystem::new(universe, sets)
}

pub fn colored_graph_to_json(g: &ColoredGraph) -> Value {
    let mut colors = Map::new();
    for (i, v) in g.vertices().iter().enumerate() {
        colors.insert(v.clone(), json!(g.color(i)));
    }
    json!({
        "k": g.k(),
        "colors": colors,
        "edges": g.edges().iter()
            .map(|&(a, b)| json!([g.vertices()[a], g.vertices()[b]]))
            .collect::<Vec<_>>(),
    })
}

pub fn colored_graph_from_json(v: &Value) -> Result<ColoredGraph> {
    let k = field(v, "k")?
        .as_u64()
        .ok_or_else(|| Error::InvalidInput("k must be a positive integer".into()))?
        as usize;
    let colors = field(v, "colors")?
        .as_object()
        .ok_or_else(|| Error::InvalidInput("colors must be an object".into()))?
        .iter()
        .map(|(name, c)| {
            let c = c
                .as_u64()
                .ok_or_else(|| Error::InvalidInput(format!("color of {name:?} must be an integer")))?;
            Ok((name.clone(), c as usize))
        })
        .collect::<Result<Vec<_>>>()?;
    let edges = field(v, "edges")?
        .as_array()
        .ok_or_else(|| Error::InvalidInput("edges must be an array".into()))?
        .iter()
        .map(|e| {
            let pair = string_list(e, "edge")?;
            if pair.len() != 2 {
                return Err(Error::InvalidInput("edges must be pairs".into()));
            }
            Ok((pair[0].clone(), pair[1].clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    ColoredGraph::new(k, colors, edges)
}

pub fn mcng_instance_to_json(inst: &McngInstance) -> Value {
    json!({
        "genome": genome_to_json(&inst.genome),
        "target": cnp_to_json(&inst.target),
    })
}

pub fn scec_instance_to_json(inst: &ScEcInstance) -> Value {
    json!({
        "k_prime": inst.k_prime,
        "system": set_system_to_json(&inst.system),
    })
}

pub fn search_result_to_json(r: &SearchResult) -> Value {
    match r {
        SearchResult::Found { distance, witness } => json!({
            "status": "found",
            "distance": distance,
            "witness": events_to_json(witness),
        }),
        SearchResult::Infeasible => json!({"status": "infeasible"}),
        SearchResult::ExceedsBudget { .. } => json!({"status": "budget"}),
    }
}

pub fn cnpc_solution_to_json(sol: &CnpcSolution) -> Value {
    json!({
        "s1": sol.s1.tokens(),
        "s2": sol.s2.tokens(),
        "adjacencies": sol.adjacencies,
        "n_star": sol.n_star,
    })
}
