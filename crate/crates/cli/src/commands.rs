use std::collections::HashMap;
use std::time::Instant;

use gcm_core::cographic::{self, cographic_rank_of_neighborhood};
use gcm_core::gcmatroid::{circuits_naive_within, circuits_structured_within, neighborhood_rank, rank_subset};
use gcm_core::io::{serialize_dimacs, GraphDocument};
use gcm_core::multigraph::{enumerate_trivalent_graphs, is_isomorphic};
use gcm_core::realization::{hyperplane_section, verify_bond_realization};
use gcm_core::{gallery, CircuitList, EdgeId, EdgeSet, Error, ExplicitMatroid, Multigraph, SwitchPairing, VertexSet};
use rayon::prelude::*;
use serde_json::json;

use crate::report::{GraphSummary, MatroidSummary, Report};
use crate::{EngineChoice, GraphInput, OtherInput};

pub struct Options {
    pub engine: EngineChoice,
    pub seed: u64,
    pub bound: usize,
}

#[derive(Debug)]
pub enum Failure {
    /// The input cannot be processed as given: exit status 2.
    Input(String),
    /// A computed result contradicted an expected identity: exit status 1.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Genericity { .. }
            | Error::BondMismatch { .. }
            | Error::VertexTriple { .. }
            | Error::CircuitMismatch(_)
            | Error::CircuitAxiom { .. } => Failure::Verification(err.to_string()),
            _ => Failure::Input(err.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn load(input: &GraphInput) -> Result<GraphDocument, Failure> {
    match (&input.gallery, &input.file) {
        (Some(name), _) => Ok(GraphDocument::from_gallery(name)?),
        (None, Some(path)) => Ok(GraphDocument::from_file(path)?),
        (None, None) => Err(Failure::Input("one of --gallery or --file is required".into())),
    }
}

fn load_other(input: &OtherInput) -> Result<GraphDocument, Failure> {
    load(&GraphInput { gallery: input.with_gallery.clone(), file: input.with_file.clone() })
}

fn parse_set(text: &str, limit: usize, what: &str) -> Result<u64, Failure> {
    let mut bits = 0u64;
    for token in text.trim_matches(|c| c == '{' || c == '}').split(',').map(str::trim) {
        if token.is_empty() {
            continue;
        }
        let x: usize = token.parse().map_err(|_| Failure::Input(format!("`{token}` is not a {what} id")))?;
        if x == 0 || x > limit {
            return Err(Failure::Input(format!("{what} {x} is outside 1..={limit}")));
        }
        bits |= 1 << (x - 1);
    }
    Ok(bits)
}

/// Circuits of M_G by the selected engine. With `both`, the naive result is kept
/// and the size of the symmetric difference is reported.
fn compute_circuits(g: &Multigraph, options: &Options, report: &mut Report) -> Result<CircuitList, Failure> {
    let timed = |f: &dyn Fn() -> gcm_core::Result<CircuitList>| {
        let start = Instant::now();
        let out = f();
        (out, start.elapsed().as_secs_f64() * 1e3)
    };
    let naive = || circuits_naive_within(g, options.bound);
    let structured = || circuits_structured_within(g, options.bound);
    match options.engine {
        EngineChoice::Naive => {
            let (c, ms) = timed(&naive);
            add_timing(report, "naive", ms);
            Ok(c?)
        }
        EngineChoice::Structured => {
            let (c, ms) = timed(&structured);
            add_timing(report, "structured", ms);
            Ok(c?)
        }
        EngineChoice::Both => {
            let (a, naive_ms) = timed(&naive);
            let (b, structured_ms) = timed(&structured);
            add_timing(report, "naive", naive_ms);
            add_timing(report, "structured", structured_ms);
            let (a, b) = (a?, b?);
            let only_naive: Vec<Vec<usize>> = a.iter().filter(|c| !b.contains(**c)).map(|c| c.to_vec()).collect();
            let only_structured: Vec<Vec<usize>> = b.iter().filter(|c| !a.contains(**c)).map(|c| c.to_vec()).collect();
            report.verification.engine_diff = Some(only_naive.len() + only_structured.len());
            if !only_naive.is_empty() || !only_structured.is_empty() {
                report.detail("only_naive", &only_naive);
                report.detail("only_structured", &only_structured);
                report.failures.push("naive and structured engines disagree".into());
            }
            Ok(a)
        }
    }
}

/// Engine time accumulates when a command computes several matroids.
fn add_timing(report: &mut Report, engine: &str, ms: f64) {
    let timings = report.timings_ms.get_or_insert_with(|| json!({}));
    let slot = &mut timings[engine];
    *slot = json!(slot.as_f64().unwrap_or(0.0) + ms);
}

fn start(command: &str, doc: &GraphDocument, options: &Options) -> Report {
    let mut report = Report::new(command, options.seed);
    report.graph = Some(GraphSummary::of(&doc.multigraph));
    report.detail("name", &doc.name);
    report
}

fn matroid_of(g: &Multigraph, options: &Options, report: &mut Report) -> Result<ExplicitMatroid, Failure> {
    let circuits = compute_circuits(g, options, report)?;
    Ok(ExplicitMatroid::from_circuits(g.vertex_count(), circuits.as_slice().to_vec(), false)?)
}

pub fn circuits(input: &GraphInput, options: &Options) -> Outcome {
    let doc = load(input)?;
    let mut report = start("circuits", &doc, options);
    let m = matroid_of(&doc.multigraph, options, &mut report)?;
    report.matroid = MatroidSummary::with_circuits(&m);
    Ok(report)
}

pub fn matroid(input: &GraphInput, verify: bool, options: &Options) -> Outcome {
    let doc = load(input)?;
    let g = &doc.multigraph;
    let mut report = start("matroid", &doc, options);
    let m = matroid_of(g, options, &mut report)?;
    let is_isd = m.is_identically_self_dual_within(options.bound)?;
    report.matroid = MatroidSummary {
        num_bases: Some(m.bases_within(options.bound)?.len()),
        is_isd: Some(is_isd),
        ..MatroidSummary::with_circuits(&m)
    };
    if verify {
        let mut checks = Vec::new();
        if g.vertex_count() <= gcm_core::matroid::MAX_DEEP_VALIDATION {
            let ok = m.validate_circuit_axioms().is_ok();
            checks.push(("circuit elimination axiom", ok));
        }
        let hypothesis = g.is_trivalent() && g.is_two_edge_connected();
        if g.is_trivalent() {
            checks.push(("self-dual exactly when 2-edge-connected", is_isd == g.is_two_edge_connected()));
        }
        if hypothesis {
            checks.push(("rank equals genus minus one", m.rank() + 1 == g.genus()));
            let tight = m.circuits().iter().all(|&c| neighborhood_rank(g, c) == c.len());
            checks.push(("every circuit C has r*(delta(C)) = |C|", tight));
        }
        for (name, ok) in &checks {
            if !ok {
                report.failures.push(format!("check failed: {name}"));
            }
        }
        let names: Vec<&str> = checks.iter().map(|(name, _)| *name).collect();
        report.detail("checks_run", names);
    }
    Ok(report)
}

pub fn isd(input: &GraphInput, options: &Options) -> Outcome {
    let doc = load(input)?;
    let mut report = start("isd", &doc, options);
    let m = matroid_of(&doc.multigraph, options, &mut report)?;
    let is_isd = m.is_identically_self_dual_within(options.bound)?;
    report.matroid = MatroidSummary { is_isd: Some(is_isd), ..MatroidSummary::with_circuits(&m) };
    let loops = m.loops();
    let reason = if is_isd {
        None
    } else if !loops.is_empty() {
        Some(format!("matroid loop at vertices {loops}"))
    } else if m.ground_size() != 2 * m.rank() {
        Some(format!("rank {} is not half of the ground set size {}", m.rank(), m.ground_size()))
    } else {
        let full = m.ground_set();
        let witness = m
            .bases_within(options.bound)?
            .into_iter()
            .find(|&b| m.is_dependent(full.difference(b)))
            .expect("a non-self-dual matroid of rank n/2 has a basis with dependent complement");
        Some(format!("the complement of basis {witness} is dependent"))
    };
    report.detail("reason", reason);
    Ok(report)
}

pub fn rank(input: &GraphInput, subset: Option<&str>, options: &Options) -> Outcome {
    let doc = load(input)?;
    let g = &doc.multigraph;
    let mut report = start("rank", &doc, options);
    match subset {
        Some(text) => {
            let a = VertexSet::from_bits(parse_set(text, g.vertex_count(), "vertex")?);
            report.detail("subset", a.to_vec());
            report.detail("subset_rank", rank_subset(g, a));
            report.matroid.rank = Some(rank_subset(g, g.vertices()));
        }
        None => {
            let m = matroid_of(g, options, &mut report)?;
            report.matroid.rank = Some(m.rank());
        }
    }
    Ok(report)
}

pub fn cographic_rank(input: &GraphInput, subset: Option<&str>, edges: Option<&str>, options: &Options) -> Outcome {
    let doc = load(input)?;
    let g = &doc.multigraph;
    let mut report = start("cographic-rank", &doc, options);
    if let Some(text) = subset {
        let a = VertexSet::from_bits(parse_set(text, g.vertex_count(), "vertex")?);
        let delta = g.delta(a);
        report.detail("subset", a.to_vec());
        report.detail("delta", delta.to_vec());
        report.detail("cographic_rank", cographic::cographic_rank(g, delta));
        if g.is_connected() {
            report.detail("closed_form", cographic_rank_of_neighborhood(g, a)?);
        }
    } else if let Some(text) = edges {
        let b = EdgeSet::from_bits(parse_set(text, g.edge_count(), "edge")?);
        report.detail("edges", b.to_vec());
        report.detail("cographic_rank", cographic::cographic_rank(g, b));
    }
    Ok(report)
}

pub fn realize(input: &GraphInput, options: &Options) -> Outcome {
    let doc = load(input)?;
    let g = &doc.multigraph;
    let mut report = start("realize", &doc, options);
    if !g.is_trivalent() || !g.is_two_edge_connected() {
        return Err(Failure::Input("realize needs a trivalent 2-edge-connected graph".into()));
    }
    match verify_bond_realization(g, options.seed) {
        Ok(bond) => {
            report.verification.bond_realization = Some(true);
            report.detail("bond_subsets_checked", bond.subsets_checked);
            report.detail("bond_exhaustive", bond.exhaustive);
        }
        Err(err) => {
            report.verification.bond_realization = Some(false);
            report.failures.push(err.to_string());
        }
    }
    let m = matroid_of(g, options, &mut report)?;
    report.matroid = MatroidSummary::with_circuits(&m);
    let (points, sample) = match hyperplane_section(g, options.seed) {
        Ok(found) => found,
        Err(err) => {
            report.verification.hyperplane_match = Some(false);
            report.failures.push(err.to_string());
            return Ok(report);
        }
    };
    let section = gcm_core::realization::linear_matroid(&points.points, options.bound)?;
    let matches = section == m;
    report.verification.hyperplane_match = Some(matches);
    report.detail("hyperplane", &sample.h);
    report.detail("hyperplane_attempt", sample.attempt);
    report.detail("hyperplane_circuits", section.circuits().to_vecs());
    if !matches {
        report.failures.push("hyperplane-section matroid differs from M_G".into());
    }
    Ok(report)
}

pub fn compare(input: &GraphInput, other: &OtherInput, options: &Options) -> Outcome {
    let first = load(input)?;
    let second = load_other(other)?;
    let mut report = start("compare", &first, options);
    let m1 = matroid_of(&first.multigraph, options, &mut report)?;
    let m2 = matroid_of(&second.multigraph, options, &mut report)?;
    report.matroid = MatroidSummary::with_circuits(&m1);
    report.detail("other", &second.name);
    report.detail("other_graph", GraphSummary::of(&second.multigraph));
    report.detail("other_circuits", m2.circuits().to_vecs());
    report.detail("graphs_isomorphic", is_isomorphic(&first.multigraph, &second.multigraph));
    report.detail("matroids_equal", m1 == m2);
    report.detail("matroid_isomorphism", m1.find_isomorphism(&m2)?);
    Ok(report)
}

pub fn two_switch(
    input: &GraphInput,
    other: &OtherInput,
    e1: usize,
    e2: usize,
    crossed: bool,
    options: &Options,
) -> Outcome {
    let first = load(input)?;
    let second = load_other(other)?;
    let pairing = if crossed { SwitchPairing::Crossed } else { SwitchPairing::Straight };
    let (g1, g2) = (&first.multigraph, &second.multigraph);
    let g = g1.two_switch(g2, EdgeId(e1), EdgeId(e2), pairing)?;
    let mut report = Report::new("two-switch", options.seed);
    report.graph = Some(GraphSummary::of(&g));
    let m = matroid_of(&g, options, &mut report)?;
    let m1 = matroid_of(g1, options, &mut report)?;
    let m2 = matroid_of(g2, options, &mut report)?;
    let sum = m1.direct_sum(&m2)?;
    report.matroid = MatroidSummary::with_circuits(&m);
    report.detail("first", &first.name);
    report.detail("second", &second.name);
    report.detail("switched_graph", serialize_dimacs(&g));
    report.detail("equals_direct_sum", m == sum);
    if m != sum {
        report.failures.push("matroid of the switched graph is not the direct sum".into());
    }
    Ok(report)
}

struct Found {
    graph: Multigraph,
    matroid: ExplicitMatroid,
}

pub fn search_pairs(max_n: usize, options: &Options) -> Outcome {
    let mut report = Report::new("search-pairs", options.seed);
    let mut groups_out = Vec::new();
    let mut examined = 0;
    for n in (2..=max_n).step_by(2) {
        let graphs = enumerate_trivalent_graphs(n, true)?;
        examined += graphs.len();
        let found = graphs
            .into_par_iter()
            .map(|g| {
                let circuits = circuits_naive_within(&g, options.bound)?;
                let matroid = ExplicitMatroid::from_circuits(n, circuits.as_slice().to_vec(), false)?;
                Ok(Found { graph: g, matroid })
            })
            .collect::<gcm_core::Result<Vec<Found>>>()?;

        let mut buckets: HashMap<_, Vec<Vec<usize>>> = HashMap::new();
        for (k, f) in found.iter().enumerate() {
            let classes = buckets.entry(f.matroid.fingerprint()).or_default();
            let mut placed = false;
            for class in classes.iter_mut() {
                if found[class[0]].matroid.is_isomorphic(&f.matroid)? {
                    class.push(k);
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(vec![k]);
            }
        }
        let mut classes: Vec<Vec<usize>> = buckets.into_values().flatten().filter(|c| c.len() > 1).collect();
        classes.sort();
        for class in classes {
            let members: Vec<String> = class.iter().map(|&k| edge_list(&found[k].graph)).collect();
            groups_out.push(json!({
                "n": n,
                "rank": found[class[0]].matroid.rank(),
                "circuit_count": found[class[0]].matroid.circuits().len(),
                "graphs": members,
            }));
        }
    }
    report.detail("graphs_examined", examined);
    report.detail("groups", groups_out);
    Ok(report)
}

fn edge_list(g: &Multigraph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|&(u, v)| format!("{u}-{v}")).collect();
    edges.join(" ")
}

pub fn gallery_list(options: &Options) -> Outcome {
    let mut report = Report::new("gallery-list", options.seed);
    let entries: Vec<_> = gallery::NAMES
        .iter()
        .map(|&name| {
            let g = gallery::by_name(name).expect("gallery names resolve");
            json!({
                "name": name,
                "n": g.vertex_count(),
                "m": g.edge_count(),
                "genus": g.genus(),
                "two_edge_connected": g.is_two_edge_connected(),
                "edges": edge_list(&g),
            })
        })
        .collect();
    report.detail("graphs", entries);
    Ok(report)
}
