//! Acceptance checks for the toolchain: one test per criterion, each
//! printing a single `criterion N: PASS/FAIL` line (visible under
//! `cargo test -- --nocapture`, and always on failure).
//!
//! A FAIL line here is evidence, not breakage. The suite holds the formula
//! catalogue to the exhaustive oracle, and three catalogue claims are false
//! as stated: the sandwich bound of criterion 3, the edge-corona edge
//! formula of criterion 5, and the subdivision-vertex low-range value of
//! criterion 7. Those tests list their witnesses and stay red on purpose;
//! README.md discusses all three.

use std::time::{Duration, Instant};

use once_cell::sync::Lazy;

use extraconn_cli::{
    canonical_graph6, emit_graph6, enumerate_connected_base_graphs, parse_graph6, report_json,
    run_verification, Construction, GChoice, OracleOutcome, RunConfig, VerificationRecord,
    Verdict,
};
use extraconn_core::{
    edge_corona, g_extra_edge_connectivity, g_extra_vertex_connectivity, generalized_corona,
    neighbourhood_corona, rooted_product, subdivision_edge_nc, subdivision_vertex_nc,
    ExtendedCount, GeneralizedCoronaSpec, Graph, PredictionKind, Quantity, RangeReading,
    RootedGraph, SearchBudget,
};

fn report(criterion: usize, passed: bool, detail: &str) {
    let status = if passed { "PASS" } else { "FAIL" };
    println!("criterion {criterion}: {status} - {detail}");
    assert!(passed, "criterion {criterion}: {status} - {detail}");
}

fn preview(items: &[String]) -> String {
    const CAP: usize = 8;
    if items.is_empty() {
        return "none".into();
    }
    let shown: Vec<&str> = items.iter().take(CAP).map(String::as_str).collect();
    let rest =
        if items.len() > CAP { format!(" (+{} more)", items.len() - CAP) } else { String::new() };
    format!("{}{}", shown.join("; "), rest)
}

/// Decides every query over the n <= 6 corpus exactly, including Infinite
/// certification on the densest graphs (K6 has 15 edges).
fn corpus_budget() -> SearchBudget {
    SearchBudget { max_cut_size: 24, max_host_vertices: 12, max_host_edges: 24 }
}

/// Wide enough for the largest product hosts this suite queries
/// (C5 edge-corona P3: 20 vertices, 50 edges, answers at most 6).
fn product_budget() -> SearchBudget {
    SearchBudget { max_cut_size: 12, max_host_vertices: 48, max_host_edges: 96 }
}

fn kappa(g: &Graph, extra: usize, budget: &SearchBudget) -> ExtendedCount {
    g_extra_vertex_connectivity(g, extra, budget).expect("query fits the budget").0
}

fn lambda(g: &Graph, extra: usize, budget: &SearchBudget) -> ExtendedCount {
    g_extra_edge_connectivity(g, extra, budget).expect("query fits the budget").0
}

fn fin(v: usize) -> ExtendedCount {
    ExtendedCount::Finite(v)
}

/// The default sweep, run once and shared: criteria 8, 10, and 12 inspect
/// its records and its wall-clock time.
static DEFAULT_SWEEP: Lazy<(Vec<VerificationRecord>, Duration)> = Lazy::new(|| {
    let config = RunConfig::default_sweep();
    let start = Instant::now();
    let records = run_verification(&config).expect("default sweep completes");
    (records, start.elapsed())
});

#[test]
fn criterion_01_zero_extra_matches_flow_connectivity() {
    let start = Instant::now();
    let budget = corpus_budget();
    let corpus: Vec<Graph> = enumerate_connected_base_graphs(6)
        .unwrap()
        .into_iter()
        .filter(|g| !g.is_complete())
        .collect();
    let mut violations = Vec::new();
    for g in &corpus {
        let id = emit_graph6(g).unwrap();
        let flow_kappa = g.vertex_connectivity().unwrap();
        let flow_lambda = g.edge_connectivity().unwrap();
        let k0 = kappa(g, 0, &budget);
        let l0 = lambda(g, 0, &budget);
        if k0 != flow_kappa {
            violations.push(format!("kappa_0({id}) = {k0}, flow gives {flow_kappa}"));
        }
        if l0 != flow_lambda {
            violations.push(format!("lambda_0({id}) = {l0}, flow gives {flow_lambda}"));
        }
    }
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(60);
    report(
        1,
        violations.is_empty() && in_time,
        &format!(
            "kappa_0/lambda_0 vs flow on {} connected non-complete graphs (n <= 6) in {:.2?}; violations: {}",
            corpus.len(),
            elapsed,
            preview(&violations)
        ),
    );
}

#[test]
fn criterion_02_extra_connectivity_is_monotone() {
    let budget = corpus_budget();
    let corpus = enumerate_connected_base_graphs(6).unwrap();
    let mut violations = Vec::new();
    for g in &corpus {
        let id = emit_graph6(g).unwrap();
        let kappas: Vec<ExtendedCount> = (0..=2).map(|extra| kappa(g, extra, &budget)).collect();
        let lambdas: Vec<ExtendedCount> = (0..=2).map(|extra| lambda(g, extra, &budget)).collect();
        for i in 0..2 {
            if kappas[i] > kappas[i + 1] {
                violations.push(format!(
                    "kappa_{i}({id}) = {} > kappa_{}({id}) = {}",
                    kappas[i],
                    i + 1,
                    kappas[i + 1]
                ));
            }
            if lambdas[i] > lambdas[i + 1] {
                violations.push(format!(
                    "lambda_{i}({id}) = {} > lambda_{}({id}) = {}",
                    lambdas[i],
                    i + 1,
                    lambdas[i + 1]
                ));
            }
        }
    }
    report(
        2,
        violations.is_empty(),
        &format!(
            "monotonicity of kappa_g and lambda_g over {} graphs, g in 0..=2; violations: {}",
            corpus.len(),
            preview(&violations)
        ),
    );
}

#[test]
fn criterion_03_sandwich_bound_over_stated_ranges() {
    // The claim under test: kappa(G) <= kappa_g(G) <= n - 2g - 2 for every
    // g up to floor((n - kappa - 2) / 2). The upper half is false as
    // stated: it silently assumes a qualifying cut exists, and kappa_g is
    // Infinite for some corpus graphs inside the stated range (smallest
    // witness: a triangle with two pendant vertices, g = 1). This test
    // asserts the claim literally and stays red with the witness list.
    let budget = corpus_budget();
    let corpus: Vec<Graph> = enumerate_connected_base_graphs(6)
        .unwrap()
        .into_iter()
        .filter(|g| !g.is_complete())
        .collect();
    let mut checked = 0usize;
    let mut infinite_violations = 0usize;
    let mut violations = Vec::new();
    for g in &corpus {
        let id = emit_graph6(g).unwrap();
        let n = g.vertex_count();
        let k = g
            .vertex_connectivity()
            .unwrap()
            .as_finite()
            .expect("non-complete graphs have finite connectivity");
        let Some(headroom) = n.checked_sub(k + 2) else { continue };
        for extra in 0..=headroom / 2 {
            checked += 1;
            let value = kappa(g, extra, &budget);
            let upper = fin(n - 2 * extra - 2);
            if value < fin(k) || value > upper {
                if value == ExtendedCount::Infinite {
                    infinite_violations += 1;
                }
                violations.push(format!(
                    "{id} g={extra}: kappa_g = {value}, stated window [{k}, {upper}]"
                ));
            }
        }
    }
    report(
        3,
        violations.is_empty(),
        &format!(
            "{checked} in-range queries, {} violations ({infinite_violations} with kappa_g infinite, {} with a finite excess); witnesses: {}",
            violations.len(),
            violations.len() - infinite_violations,
            preview(&violations)
        ),
    );
}

#[test]
fn criterion_04_edge_corona_vertex_low_range() {
    let start = Instant::now();
    let budget = product_budget();
    let bases =
        [("P3", Graph::path(3)), ("P4", Graph::path(4)), ("C4", Graph::cycle(4)), ("C5", Graph::cycle(5))];
    let attachments = [("K1", Graph::complete(1)), ("K2", Graph::complete(2)), ("P3", Graph::path(3))];
    let mut checked = 0usize;
    let mut violations = Vec::new();
    for (base_name, base) in &bases {
        let expected = if base.vertex_connectivity().unwrap() == fin(1) { 1 } else { 2 };
        for (h_name, h) in &attachments {
            let host = edge_corona(base, h);
            for g in 0..h.vertex_count() {
                checked += 1;
                let value = kappa(&host, g, &budget);
                if value != fin(expected) {
                    violations.push(format!(
                        "kappa_{g}({base_name} edge-corona {h_name}) = {value}, expected {expected}"
                    ));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(300);
    report(
        4,
        violations.is_empty() && in_time,
        &format!(
            "{checked} instances in {elapsed:.2?}; violations: {}",
            preview(&violations)
        ),
    );
}

#[test]
fn criterion_05_edge_corona_edge_formula() {
    // The formula under test prints two overlapping cases: m + 1 when
    // lambda(G) = 1 and 2m when lambda(G) >= 1. On lambda(G) = 1 instances
    // both cases fire with different values, so those are emitted as
    // findings, never failures. On lambda(G) >= 2 instances only the 2m
    // case applies and the assertion binds; the oracle refutes it there
    // (cheaper cuts exist at small g), so this test stays red with the
    // witness list.
    let budget = product_budget();
    let bases =
        [("P3", Graph::path(3)), ("P4", Graph::path(4)), ("C4", Graph::cycle(4)), ("C5", Graph::cycle(5))];
    let attachments = [("K2", Graph::complete(2)), ("P3", Graph::path(3))];
    let mut findings = Vec::new();
    let mut violations = Vec::new();
    for (base_name, base) in &bases {
        let base_lambda = base.edge_connectivity().unwrap();
        for (h_name, h) in &attachments {
            let m = h.vertex_count();
            let host = edge_corona(base, h);
            for g in 0..m {
                let value = lambda(&host, g, &budget);
                if base_lambda == fin(1) {
                    findings.push(format!(
                        "({base_name} edge-corona {h_name}, g={g}): printed cases overlap at lambda(G)=1 and diverge (m+1={} vs 2m={}); oracle = {value}",
                        m + 1,
                        2 * m
                    ));
                } else if value != fin(2 * m) {
                    violations.push(format!(
                        "lambda_{g}({base_name} edge-corona {h_name}) = {value}, formula gives 2m = {}",
                        2 * m
                    ));
                }
            }
        }
    }
    for f in &findings {
        println!("finding: {f}");
    }
    report(
        5,
        violations.is_empty(),
        &format!(
            "{} overlap findings emitted; lambda(G) >= 2 violations: {}",
            findings.len(),
            preview(&violations)
        ),
    );
}

#[test]
fn criterion_06_neighbourhood_corona_min_degree() {
    let budget = product_budget();
    let bases = [("P3", Graph::path(3)), ("C4", Graph::cycle(4)), ("C5", Graph::cycle(5))];
    let attachments = [("K2", Graph::complete(2)), ("P3", Graph::path(3))];
    let mut checked = 0usize;
    let mut violations = Vec::new();
    for (base_name, base) in &bases {
        let delta = base.min_degree().unwrap();
        for (h_name, h) in &attachments {
            let host = neighbourhood_corona(base, h);
            for g in 1..h.vertex_count() {
                checked += 1;
                let value = kappa(&host, g, &budget);
                if value != fin(delta) {
                    violations.push(format!(
                        "kappa_{g}({base_name} nc {h_name}) = {value}, expected delta(G) = {delta}"
                    ));
                }
            }
        }
    }
    report(
        6,
        violations.is_empty(),
        &format!("{checked} instances; violations: {}", preview(&violations)),
    );
}

#[test]
fn criterion_07_subdivision_vertex_nc_low_range() {
    // The claim under test: kappa_0 = delta(G) and kappa_1 = delta(G) + 1.
    // The kappa_0 half holds, but the kappa_1 formula is false on C4:
    // removing two opposite subdivision vertices of the subdivided cycle
    // splits the 16-vertex host into two components of 7 vertices each, so
    // kappa_1(C4 sv-nc K2) = 2 = delta(G), not delta(G) + 1. The catalogue
    // value rests on the claim that kappa_g = delta(G) forces g = 0, which
    // that cut refutes. This test asserts the claim literally and stays
    // red with the witness.
    let budget = product_budget();
    let bases = [("P3", Graph::path(3)), ("C4", Graph::cycle(4))];
    let k2 = Graph::complete(2);
    let mut violations = Vec::new();
    for (base_name, base) in &bases {
        let delta = base.min_degree().unwrap();
        let host = subdivision_vertex_nc(base, &k2);
        let v0 = kappa(&host, 0, &budget);
        if v0 != fin(delta) {
            violations.push(format!(
                "kappa_0({base_name} sv-nc K2) = {v0}, expected delta(G) = {delta}"
            ));
        }
        let v1 = kappa(&host, 1, &budget);
        if v1 != fin(delta + 1) {
            violations.push(format!(
                "kappa_1({base_name} sv-nc K2) = {v1}, expected delta(G) + 1 = {}",
                delta + 1
            ));
        }
    }
    report(7, violations.is_empty(), &format!("violations: {}", preview(&violations)));
}

#[test]
fn criterion_08_subdivision_edge_nc_reading_discrepancy() {
    let records = &DEFAULT_SWEEP.0;
    let base_id = canonical_graph6(&Graph::cycle(4));
    let attach_id = canonical_graph6(&Graph::complete(2));
    let slice: Vec<&VerificationRecord> = records
        .iter()
        .filter(|r| {
            r.construction == Construction::SubdivisionEdgeNc
                && r.base_id == base_id
                && r.attach_id == attach_id
                && r.g == 1
                && r.prediction.quantity == Quantity::KappaG
        })
        .collect();
    let proof = slice.iter().find(|r| r.prediction.anchor == "Thm5(i)");
    let printed = slice.iter().find(|r| r.prediction.anchor == "Thm5(i)-printed");
    let mut problems = Vec::new();
    match proof {
        Some(r) => {
            if r.oracle != OracleOutcome::Value(fin(2)) {
                problems.push(format!("oracle is {:?}, expected 2", r.oracle));
            }
            if r.verdict != Verdict::Match {
                problems.push(format!("proof-reading verdict is {:?}, expected Match", r.verdict));
            }
        }
        None => problems.push("proof-reading record missing from the default report".into()),
    }
    match printed {
        Some(r) => {
            if r.prediction.value != Some(fin(3)) {
                problems.push(format!(
                    "printed reading predicts {:?}, expected 3",
                    r.prediction.value
                ));
            }
            if r.verdict != Verdict::Mismatch {
                problems
                    .push(format!("printed-reading verdict is {:?}, expected Mismatch", r.verdict));
            }
        }
        None => problems.push("printed-reading record missing from the default report".into()),
    }
    report(
        8,
        problems.is_empty(),
        &format!(
            "(C4 se-nc K2, g=1) dual-reading records in the default report; problems: {}",
            preview(&problems)
        ),
    );
}

#[test]
fn criterion_09_rooted_product_formulas() {
    let budget = product_budget();
    let bases = [("C4", Graph::cycle(4)), ("P3", Graph::path(3))];
    let rooted = RootedGraph::new(Graph::path(3), 0).unwrap();
    let mut violations = Vec::new();
    for (base_name, base) in &bases {
        let host = rooted_product(base, &rooted);
        let base_lambda = base.edge_connectivity().unwrap();
        let expected_lambda = if base_lambda == fin(1) {
            fin(1)
        } else {
            base_lambda.min(fin(rooted.root_degree()))
        };
        for g in 0..=1 {
            let kv = kappa(&host, g, &budget);
            if kv != fin(1) {
                violations.push(format!("kappa_{g}(P3-rooted({base_name})) = {kv}, expected 1"));
            }
            let lv = lambda(&host, g, &budget);
            if lv != expected_lambda {
                violations.push(format!(
                    "lambda_{g}(P3-rooted({base_name})) = {lv}, expected {expected_lambda}"
                ));
            }
        }
    }
    report(9, violations.is_empty(), &format!("violations: {}", preview(&violations)));
}

#[test]
fn criterion_10_generalized_corona_bounds() {
    let budget = product_budget();
    let mut problems = Vec::new();

    let spec =
        GeneralizedCoronaSpec::new(Graph::path(3), vec![Graph::complete(2); 3]).unwrap();
    let host = generalized_corona(&spec);
    let direct = kappa(&host, 1, &budget);
    if direct != fin(1) {
        problems.push(format!("kappa_1(P3 corona [K2,K2,K2]) = {direct}, expected 1"));
    }

    let records = &DEFAULT_SWEEP.0;
    let bound_records: Vec<&VerificationRecord> =
        records.iter().filter(|r| r.prediction.anchor == "Thm6(ii)").collect();
    if bound_records.is_empty() {
        problems.push("no Thm6(ii) records in the default report".into());
    }
    for r in &bound_records {
        if r.prediction.kind != PredictionKind::UpperBound {
            problems.push(format!(
                "Thm6(ii) on ({}, {}, g={}) has kind {:?}",
                r.base_id, r.attach_id, r.g, r.prediction.kind
            ));
        }
        match (r.oracle, r.verdict) {
            (OracleOutcome::Value(v), verdict) => {
                let bound = r.prediction.value.expect("upper bounds carry a value");
                if v > bound || verdict != Verdict::BoundHolds {
                    problems.push(format!(
                        "Thm6(ii) on ({}, {}, g={}): oracle {v} vs bound {bound} ({verdict:?})",
                        r.base_id, r.attach_id, r.g
                    ));
                }
            }
            (OracleOutcome::BudgetExceeded, _) => {}
            (OracleOutcome::Skipped, _) => {
                problems.push(format!(
                    "Thm6(ii) on ({}, {}, g={}) was skipped despite being applicable",
                    r.base_id, r.attach_id, r.g
                ));
            }
        }
    }
    report(
        10,
        problems.is_empty(),
        &format!(
            "direct query plus {} upper-bound records; problems: {}",
            bound_records.len(),
            preview(&problems)
        ),
    );
}

#[test]
fn criterion_11_formats_and_determinism() {
    let mut problems = Vec::new();

    let corpus = enumerate_connected_base_graphs(7).unwrap();
    for g in &corpus {
        let encoded = emit_graph6(g).unwrap();
        let decoded = parse_graph6(&encoded).unwrap();
        if &decoded != g {
            problems.push(format!("graph6 round trip changed {encoded}"));
        }
    }

    let config = |jobs: usize| RunConfig {
        constructions: Construction::ALL.to_vec(),
        bases: enumerate_connected_base_graphs(4)
            .unwrap()
            .into_iter()
            .filter(|g| !g.is_complete())
            .collect(),
        attachments: vec![Graph::complete(1), Graph::complete(2), Graph::path(3)],
        gs: GChoice::Auto,
        budget: SearchBudget::default(),
        range_reading: RangeReading::Literal,
        jobs,
    };
    let sequential = run_verification(&config(1)).unwrap();
    let parallel = run_verification(&config(3)).unwrap();
    let doc_sequential =
        serde_json::to_string_pretty(&report_json(&sequential, &config(1), "fixed")).unwrap();
    let doc_parallel =
        serde_json::to_string_pretty(&report_json(&parallel, &config(3), "fixed")).unwrap();
    if doc_sequential != doc_parallel {
        problems.push("reports differ between 1 and 3 workers".into());
    }

    report(
        11,
        problems.is_empty(),
        &format!(
            "graph6 round trip on {} graphs (n <= 7) and {}-record reports byte-identical across worker counts; problems: {}",
            corpus.len(),
            sequential.len(),
            preview(&problems)
        ),
    );
}

#[test]
fn criterion_12_performance_budgets() {
    let host = subdivision_edge_nc(&Graph::cycle(4), &Graph::complete(2));
    assert_eq!(host.vertex_count(), 16);
    let start = Instant::now();
    let value = kappa(&host, 1, &SearchBudget::default());
    let single = start.elapsed();
    let sweep = DEFAULT_SWEEP.1;
    let mut problems = Vec::new();
    if value != fin(2) {
        problems.push(format!("kappa_1(C4 se-nc K2) = {value}, expected 2"));
    }
    if single >= Duration::from_secs(10) {
        problems.push(format!("single 16-vertex query took {single:.2?}"));
    }
    if sweep >= Duration::from_secs(600) {
        problems.push(format!("default sweep took {sweep:.2?}"));
    }
    report(
        12,
        problems.is_empty(),
        &format!(
            "single query {single:.2?} (answer {value}), default sweep of {} records in {sweep:.2?}; problems: {}",
            DEFAULT_SWEEP.0.len(),
            preview(&problems)
        ),
    );
}
