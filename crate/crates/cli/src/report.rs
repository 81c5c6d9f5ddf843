use std::fmt::Write as _;

use gcm_core::{ExplicitMatroid, Multigraph};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub trivalent: bool,
    pub two_edge_connected: bool,
    pub genus: usize,
}

impl GraphSummary {
    pub fn of(g: &Multigraph) -> Self {
        GraphSummary {
            n: g.vertex_count(),
            m: g.edge_count(),
            trivalent: g.is_trivalent(),
            two_edge_connected: g.is_two_edge_connected(),
            genus: g.genus(),
        }
    }
}

/// Every field is always present; values that a command did not compute are null.
#[derive(Debug, Default, Serialize)]
pub struct MatroidSummary {
    pub rank: Option<usize>,
    pub circuits: Option<Vec<Vec<usize>>>,
    pub num_bases: Option<usize>,
    pub is_isd: Option<bool>,
}

impl MatroidSummary {
    pub fn with_circuits(m: &ExplicitMatroid) -> Self {
        MatroidSummary { rank: Some(m.rank()), circuits: Some(m.circuits().to_vecs()), ..Default::default() }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Verification {
    /// Number of circuits found by exactly one of the two engines.
    pub engine_diff: Option<usize>,
    pub bond_realization: Option<bool>,
    pub hyperplane_match: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub graph: Option<GraphSummary>,
    pub matroid: MatroidSummary,
    pub verification: Verification,
    pub seed: u64,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Value>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            command: command.to_string(),
            graph: None,
            matroid: MatroidSummary::default(),
            verification: Verification::default(),
            seed,
            elapsed_ms: 0.0,
            timings_ms: None,
            details: Value::Null,
            failures: Vec::new(),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        if !self.details.is_object() {
            self.details = Value::Object(Default::default());
        }
        let value = serde_json::to_value(value).expect("detail serializes");
        self.details.as_object_mut().expect("object").insert(key.to_string(), value);
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(g) = &self.graph {
            let _ = writeln!(
                out,
                "graph: n={} m={} genus={} trivalent={} two_edge_connected={}",
                g.n, g.m, g.genus, g.trivalent, g.two_edge_connected
            );
        }
        let m = &self.matroid;
        if let Some(rank) = m.rank {
            let _ = writeln!(out, "rank: {rank}");
        }
        if let Some(circuits) = &m.circuits {
            let shown: Vec<String> = circuits.iter().map(|c| brace(c)).collect();
            let _ = writeln!(out, "circuits ({}): {}", circuits.len(), shown.join(" "));
        }
        if let Some(b) = m.num_bases {
            let _ = writeln!(out, "bases: {b}");
        }
        if let Some(isd) = m.is_isd {
            let _ = writeln!(out, "identically self-dual: {isd}");
        }
        let v = &self.verification;
        if let Some(d) = v.engine_diff {
            let _ = writeln!(out, "engine diff: {d}");
        }
        if let Some(b) = v.bond_realization {
            let _ = writeln!(out, "bond realization: {}", verdict(b));
        }
        if let Some(h) = v.hyperplane_match {
            let _ = writeln!(out, "hyperplane section matches: {}", verdict(h));
        }
        if let Value::Object(map) = &self.details {
            for (key, value) in map {
                let _ = writeln!(out, "{key}: {value}");
            }
        }
        for failure in &self.failures {
            let _ = writeln!(out, "FAILED: {failure}");
        }
        let _ = writeln!(out, "seed: {}  elapsed: {:.2} ms", self.seed, self.elapsed_ms);
        out
    }
}

pub fn brace(items: &[usize]) -> String {
    let inner: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}
