//! Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.
//! Runs without the libtest harness so the lines are always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gcm_core::cographic::{cographic_rank, cographic_rank_of_neighborhood};
use gcm_core::gcmatroid::{
    self, basis_containing_vertex, circuits_naive, circuits_structured, is_dependent, is_independent,
    neighborhood_rank, rank_subset,
};
use gcm_core::multigraph::{enumerate_trivalent_graphs, is_isomorphic};
use gcm_core::realization::{hyperplane_section_matroid, verify_bond_realization, EXHAUSTIVE_EDGE_LIMIT};
use gcm_core::{
    gallery, EdgeId, Engine, ExplicitMatroid, GraphCurveMatroid, Multigraph, SwitchPairing, VertexId, VertexSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Title, time limit in milliseconds, and the check itself.
type Criterion = (&'static str, u64, fn() -> Outcome);

const TWO_CONNECTED: [&str; 7] = ["theta", "k4", "sodacan", "prism", "doublehouse", "cube", "petersen"];

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn graph(name: &str) -> Multigraph {
    gallery::by_name(name).expect("gallery graph")
}

fn matroid_of(g: &Multigraph) -> Result<ExplicitMatroid, String> {
    GraphCurveMatroid::compute(g, Engine::Naive).map(GraphCurveMatroid::into_matroid).map_err(|e| e.to_string())
}

fn set(items: &[usize]) -> VertexSet {
    items.iter().copied().collect()
}

fn k4_is_uniform() -> Outcome {
    let g = gallery::k4();
    let circuits = circuits_naive(&g).map_err(|e| e.to_string())?;
    let expected = vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]];
    ensure!(circuits.to_vecs() == expected, "circuits {:?}", circuits.to_vecs());
    let m = matroid_of(&g)?;
    let u24 = ExplicitMatroid::uniform(2, 4).unwrap();
    ensure!(m.is_isomorphic(&u24).unwrap(), "not isomorphic to U(2,4)");
    Ok("four 3-subsets, isomorphic to U(2,4)".into())
}

fn theta_and_soda_can() -> Outcome {
    let u12 = ExplicitMatroid::uniform(1, 2).unwrap();
    let u12x2 = u12.direct_sum(&u12).unwrap();
    for (name, expected) in [("theta", &u12), ("sodacan", &u12x2)] {
        let m = matroid_of(&graph(name))?;
        ensure!(m.is_isomorphic(expected).unwrap(), "{name}: circuits {:?}", m.circuits().to_vecs());
        for seed in 0..5 {
            let h = hyperplane_section_matroid(&graph(name), seed).map_err(|e| e.to_string())?;
            ensure!(
                h.is_isomorphic(expected).unwrap(),
                "{name}: hyperplane seed {seed} gives {:?}",
                h.circuits().to_vecs()
            );
        }
    }
    Ok("U(1,2) and U(1,2)+U(1,2), hyperplane sections agree for seeds 0..5".into())
}

fn double_house() -> Outcome {
    let g = gallery::double_house();
    let r = |a: &[usize]| cographic_rank(&g, g.delta(set(a)));
    ensure!(r(&[1, 2, 3]) == 3, "r*(d{{1,2,3}}) = {}", r(&[1, 2, 3]));
    ensure!(r(&[1, 2, 3, 6]) == 5, "r*(d{{1,2,3,6}}) = {}", r(&[1, 2, 3, 6]));
    let circuits = circuits_naive(&g).map_err(|e| e.to_string())?;
    for c in [&[1, 2, 3][..], &[2, 3, 5, 6, 7], &[1, 2, 5, 6, 8]] {
        ensure!(circuits.contains(set(c)), "{} is not a circuit", set(c));
    }
    ensure!(is_dependent(&g, set(&[1, 2, 3, 6])), "{{1,2,3,6}} is independent");
    Ok("ranks 3 and 5, three known circuits present, {1,2,3,6} dependent".into())
}

fn closed_form_exhaustive() -> Outcome {
    let mut checked = 0usize;
    for name in gallery::NAMES {
        let g = graph(name);
        if g.vertex_count() > 10 {
            continue;
        }
        for a in g.vertices().subsets() {
            let closed = cographic_rank_of_neighborhood(&g, a).map_err(|e| e.to_string())?;
            let direct = cographic_rank(&g, g.delta(a));
            ensure!(closed == direct, "{name} {a}: closed form {closed}, direct {direct}");
            checked += 1;
        }
    }
    Ok(format!("{checked} vertex subsets agree"))
}

fn engines_agree() -> Outcome {
    let mut total = 0;
    for name in TWO_CONNECTED {
        let g = graph(name);
        let naive = circuits_naive(&g).map_err(|e| e.to_string())?;
        let structured = circuits_structured(&g).map_err(|e| e.to_string())?;
        ensure!(naive == structured, "{name}: naive {:?} vs structured {:?}", naive.to_vecs(), structured.to_vecs());
        total += naive.len();
    }
    Ok(format!("identical circuit lists on 7 graphs ({total} circuits)"))
}

fn rank_and_bases() -> Outcome {
    for name in TWO_CONNECTED {
        let g = graph(name);
        let target = g.genus() - 1;
        let rank = rank_subset(&g, g.vertices());
        ensure!(rank == target, "{name}: rank {rank}, genus - 1 = {target}");
        for v in 1..=g.vertex_count() {
            let b = basis_containing_vertex(&g, VertexId(v)).map_err(|e| e.to_string())?;
            ensure!(b.contains(v) && b.len() == target && is_independent(&g, b), "{name}: basis for vertex {v} is {b}");
        }
    }
    Ok("rank g-1 everywhere, a basis through every vertex".into())
}

fn identically_self_dual() -> Outcome {
    let isd = |g: &Multigraph| -> Result<bool, String> {
        matroid_of(g)?.is_identically_self_dual().map_err(|e| e.to_string())
    };
    for name in TWO_CONNECTED {
        ensure!(isd(&graph(name))?, "{name} is not ISD");
    }
    ensure!(!isd(&gallery::dumbbell())?, "dumbbell is ISD");
    let mut positive = 0;
    for n in [2, 4, 6, 8] {
        for g in enumerate_trivalent_graphs(n, true).map_err(|e| e.to_string())? {
            ensure!(isd(&g)?, "{g:?} is not ISD");
            positive += 1;
        }
    }
    let mut negative = 0;
    for n in [2, 4, 6] {
        for g in enumerate_trivalent_graphs(n, false).map_err(|e| e.to_string())? {
            if g.bridges().is_empty() {
                continue;
            }
            ensure!(!isd(&g)?, "{g:?} has a bridge but is ISD");
            negative += 1;
        }
    }
    Ok(format!("{positive} enumerated 2-edge-connected graphs ISD, {negative} bridged graphs not"))
}

fn hyperplane_sections() -> Outcome {
    let mut samples = 0;
    for name in TWO_CONNECTED {
        let g = graph(name);
        if g.vertex_count() > 10 {
            continue;
        }
        let m = matroid_of(&g)?;
        for seed in 0..5 {
            let h = hyperplane_section_matroid(&g, seed).map_err(|e| e.to_string())?;
            ensure!(h == m, "{name} seed {seed}: {:?} vs {:?}", h.circuits().to_vecs(), m.circuits().to_vecs());
            samples += 1;
        }
        if g.edge_count() <= EXHAUSTIVE_EDGE_LIMIT {
            let report = verify_bond_realization(&g, 0).map_err(|e| e.to_string())?;
            ensure!(report.exhaustive, "{name}: bond check was sampled");
        }
    }
    Ok(format!("{samples} hyperplane samples equal M_G, bond realization exhaustive"))
}

fn two_switch_sums() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    while done < 20 {
        let g1 = graph(TWO_CONNECTED[rng.random_range(0..TWO_CONNECTED.len())]);
        let g2 = graph(TWO_CONNECTED[rng.random_range(0..TWO_CONNECTED.len())]);
        if g1.vertex_count() + g2.vertex_count() > gcmatroid::DEFAULT_ENUMERATION_BOUND {
            continue;
        }
        let e1 = EdgeId(rng.random_range(1..=g1.edge_count()));
        let e2 = EdgeId(rng.random_range(1..=g2.edge_count()));
        let pairing = if rng.random() { SwitchPairing::Crossed } else { SwitchPairing::Straight };
        let g = g1.two_switch(&g2, e1, e2, pairing).map_err(|e| e.to_string())?;
        let expected = matroid_of(&g1)?.direct_sum(&matroid_of(&g2)?).map_err(|e| e.to_string())?;
        let actual = matroid_of(&g)?;
        ensure!(actual == expected, "switch of {g1:?} and {g2:?} at {e1:?}, {e2:?}");
        done += 1;
    }
    let soda = gallery::theta().two_switch(&gallery::theta(), EdgeId(1), EdgeId(1), SwitchPairing::Straight);
    ensure!(is_isomorphic(&soda.map_err(|e| e.to_string())?, &gallery::soda_can()), "theta switch is not the soda can");
    Ok("20 random switches give direct sums; theta with theta is the soda can".into())
}

fn property_suites() -> Outcome {
    let graphs: Vec<Multigraph> = TWO_CONNECTED.iter().map(|n| graph(n)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..10_000 {
        let g = &graphs[rng.random_range(0..graphs.len())];
        let a = VertexSet::from_bits(rng.random()).intersection(g.vertices());
        let b = VertexSet::from_bits(rng.random()).intersection(g.vertices());
        let f = |s| neighborhood_rank(g, s);
        ensure!(f(a.union(b)) + f(a.intersection(b)) <= f(a) + f(b), "submodularity fails at {a}, {b}");
        if g.is_cyclic_subset(a) {
            ensure!(is_dependent(g, a), "cyclic {a} is independent");
        }
    }
    let mut sums = Vec::new();
    for g in &graphs {
        let m = matroid_of(g)?;
        for &c in m.circuits().iter() {
            ensure!(neighborhood_rank(g, c) == c.len(), "circuit {c} has the wrong neighbourhood rank");
        }
        for b in m.bases().map_err(|e| e.to_string())? {
            let rest = g.vertices().difference(b);
            ensure!(g.components(rest) == g.components(b), "basis {b} is unbalanced");
        }
        let dual = m.dual().map_err(|e| e.to_string())?;
        ensure!(dual.dual().map_err(|e| e.to_string())? == m, "dual is not an involution");
        if g.vertex_count() <= 4 {
            sums.push(m);
        }
    }
    for m1 in &sums {
        for m2 in &sums {
            let sum = m1.direct_sum(m2).map_err(|e| e.to_string())?;
            ensure!(sum.rank() == m1.rank() + m2.rank(), "rank is not additive");
        }
    }
    Ok("submodularity on 10^4 pairs, cyclic dependence, circuit ranks, basis balance, duals, sums".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("K4 matroid is U(2,4)", 100, k4_is_uniform),
        ("theta and soda can matroids", 1_000, theta_and_soda_can),
        ("double house ranks and circuits", 1_000, double_house),
        ("closed-form neighbourhood rank", 10_000, closed_form_exhaustive),
        ("naive and structured engines agree", 60_000, engines_agree),
        ("rank g-1 and bases through every vertex", 30_000, rank_and_bases),
        ("identical self-duality iff 2-edge-connected", 120_000, identically_self_dual),
        ("hyperplane sections and bond realization", 120_000, hyperplane_sections),
        ("2-switch gives direct sums", 60_000, two_switch_sums),
        ("property suites", 120_000, property_suites),
    ];
    let mut failures = 0;
    for (number, (title, limit_ms, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let limit = Duration::from_millis(limit_ms);
        let line = match outcome {
            Ok(detail) if elapsed <= limit => format!("PASS  {detail}"),
            Ok(_) => format!("FAIL  over time limit of {limit_ms} ms"),
            Err(reason) => format!("FAIL  {reason}"),
        };
        if line.starts_with("FAIL") {
            failures += 1;
        }
        println!("criterion {:>2} [{title}] {:.1} ms: {line}", number + 1, elapsed.as_secs_f64() * 1e3);
    }
    println!("{} of 10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
