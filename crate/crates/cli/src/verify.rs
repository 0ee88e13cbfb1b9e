//! The verification harness: pairs catalogue predictions with exact oracle
//! values over a configurable sweep of constructions, bases, attachments,
//! and g values, then classifies each pairing into a verdict.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use extraconn_core::{
    edge_corona, g_extra_edge_connectivity, g_extra_vertex_connectivity, generalized_corona,
    neighbourhood_corona, predict_edge_corona, predict_generalized_corona,
    predict_neighbourhood_corona, predict_rooted_product, predict_subdivision_edge_nc,
    predict_subdivision_vertex_nc, rooted_product, subdivision_edge_nc, subdivision_vertex_nc,
    EdgeCutCertificate, EvalOptions, ExtendedCount, ExtraError, GeneralizedCoronaSpec, Graph,
    Prediction, ProductError, Quantity, RangeReading, RootedGraph, SearchBudget,
    VertexCutCertificate,
};

use crate::corpus::enumerate_connected_base_graphs;
use crate::graph6::{canonical_graph6, emit_graph6};

/// The six product constructions the harness knows how to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Construction {
    EdgeCorona,
    NeighbourhoodCorona,
    SubdivisionVertexNc,
    SubdivisionEdgeNc,
    GeneralizedCorona,
    RootedProduct,
}

impl Construction {
    pub const ALL: [Construction; 6] = [
        Construction::EdgeCorona,
        Construction::NeighbourhoodCorona,
        Construction::SubdivisionVertexNc,
        Construction::SubdivisionEdgeNc,
        Construction::GeneralizedCorona,
        Construction::RootedProduct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::EdgeCorona => "edge-corona",
            Construction::NeighbourhoodCorona => "neighbourhood-corona",
            Construction::SubdivisionVertexNc => "subdivision-vertex-nc",
            Construction::SubdivisionEdgeNc => "subdivision-edge-nc",
            Construction::GeneralizedCorona => "generalized-corona",
            Construction::RootedProduct => "rooted-product",
        }
    }
}

impl std::fmt::Display for Construction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Construction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Construction::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Construction::ALL.iter().map(|c| c.name()).collect();
                format!("unknown construction {s:?}; expected one of {}", names.join(", "))
            })
    }
}

impl Serialize for Construction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Match,
    Mismatch,
    BoundHolds,
    BoundViolated,
    Inapplicable,
    BudgetExceeded,
}

/// The oracle's side of a record: a value, a budget refusal, or skipped
/// because the prediction was not applicable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleOutcome {
    Value(ExtendedCount),
    BudgetExceeded,
    Skipped,
}

impl Serialize for OracleOutcome {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            OracleOutcome::Value(v) => v.serialize(serializer),
            OracleOutcome::BudgetExceeded => serializer.serialize_str("budget_exceeded"),
            OracleOutcome::Skipped => serializer.serialize_none(),
        }
    }
}

impl std::fmt::Display for OracleOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleOutcome::Value(v) => v.fmt(f),
            OracleOutcome::BudgetExceeded => f.write_str("budget_exceeded"),
            OracleOutcome::Skipped => f.write_str("skipped"),
        }
    }
}

/// A cut certificate attached to a record; shape reveals the quantity.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum RecordCertificate {
    Vertex(VertexCutCertificate),
    Edge(EdgeCutCertificate),
}

/// One prediction checked against the oracle on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationRecord {
    pub construction: Construction,
    pub base_id: String,
    pub attach_id: String,
    pub g: usize,
    pub prediction: Prediction,
    pub oracle: OracleOutcome,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<RecordCertificate>,
}

/// What a base vertex gets attached to it in one instance.
#[derive(Debug, Clone)]
pub enum Attachment {
    /// One copy of H per base vertex or edge (the four pairwise products).
    Plain(Graph),
    /// Explicit per-vertex attachments (generalized corona).
    Generalized(GeneralizedCoronaSpec),
    /// A rooted copy per base vertex (rooted product).
    Rooted(RootedGraph),
}

/// A (construction, base, attachment) triple with its product prebuilt.
#[derive(Debug, Clone)]
pub struct Instance {
    pub construction: Construction,
    pub base: Graph,
    pub attachment: Attachment,
    pub base_id: String,
    pub attach_id: String,
    pub host: Graph,
}

impl Instance {
    pub fn new(construction: Construction, base: Graph, attachment: Attachment) -> Instance {
        let base_id = canonical_graph6(&base);
        let attach_id = match &attachment {
            Attachment::Plain(h) => canonical_graph6(h),
            Attachment::Generalized(spec) => {
                let ids: Vec<String> = spec.attachments().iter().map(canonical_graph6).collect();
                format!("[{}]", ids.join(","))
            }
            Attachment::Rooted(r) => {
                format!("{}@{}", emit_graph6(r.graph()).expect("small attachment"), r.root())
            }
        };
        let host = match &attachment {
            Attachment::Plain(h) => match construction {
                Construction::EdgeCorona => edge_corona(&base, h),
                Construction::NeighbourhoodCorona => neighbourhood_corona(&base, h),
                Construction::SubdivisionVertexNc => subdivision_vertex_nc(&base, h),
                Construction::SubdivisionEdgeNc => subdivision_edge_nc(&base, h),
                other => unreachable!("{other} takes a structured attachment"),
            },
            Attachment::Generalized(spec) => generalized_corona(spec),
            Attachment::Rooted(r) => rooted_product(&base, r),
        };
        Instance { construction, base, attachment, base_id, attach_id, host }
    }

    /// Catalogue predictions for this instance at one `g`.
    pub fn predictions(&self, g: usize, opts: &EvalOptions) -> Vec<Prediction> {
        match (&self.construction, &self.attachment) {
            (Construction::EdgeCorona, Attachment::Plain(h)) => {
                predict_edge_corona(&self.base, h, g, opts)
            }
            (Construction::NeighbourhoodCorona, Attachment::Plain(h)) => {
                predict_neighbourhood_corona(&self.base, h, g, opts)
            }
            (Construction::SubdivisionVertexNc, Attachment::Plain(h)) => {
                predict_subdivision_vertex_nc(&self.base, h, g, opts)
            }
            (Construction::SubdivisionEdgeNc, Attachment::Plain(h)) => {
                predict_subdivision_edge_nc(&self.base, h, g, opts)
            }
            (Construction::GeneralizedCorona, Attachment::Generalized(spec)) => {
                predict_generalized_corona(spec, g, opts)
            }
            (Construction::RootedProduct, Attachment::Rooted(r)) => {
                predict_rooted_product(&self.base, r, g, opts)
            }
            (c, _) => unreachable!("attachment shape does not fit {c}"),
        }
    }
}

/// How the sweep chooses g values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GChoice {
    /// Per instance: every g for which some prediction is applicable
    /// inside a stated (non-soft) range and the host fits the oracle
    /// budget for that prediction's quantity.
    Auto,
    Explicit(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub constructions: Vec<Construction>,
    pub bases: Vec<Graph>,
    pub attachments: Vec<Graph>,
    pub gs: GChoice,
    pub budget: SearchBudget,
    pub range_reading: RangeReading,
    pub jobs: usize,
}

impl RunConfig {
    /// The default sweep: all six constructions, every connected
    /// non-complete base on up to five vertices, attachments
    /// {K1, K2, P3, C3}, automatic g ranges.
    pub fn default_sweep() -> RunConfig {
        let bases = enumerate_connected_base_graphs(5)
            .expect("5 is below the corpus cap")
            .into_iter()
            .filter(|g| !g.is_complete())
            .collect();
        RunConfig {
            constructions: Construction::ALL.to_vec(),
            bases,
            attachments: default_attachments(),
            gs: GChoice::Auto,
            budget: SearchBudget::default(),
            range_reading: RangeReading::Literal,
            jobs: 1,
        }
    }

    fn validate(&self) -> Result<(), VerifyError> {
        if self.budget.max_cut_size == 0
            || self.budget.max_host_vertices == 0
            || self.budget.max_host_edges == 0
        {
            return Err(VerifyError::InvalidConfig("budget limits must be positive".into()));
        }
        if self.bases.is_empty() {
            return Err(VerifyError::InvalidConfig("base corpus is empty".into()));
        }
        if self.attachments.is_empty() {
            return Err(VerifyError::InvalidConfig("attachment corpus is empty".into()));
        }
        if self.jobs == 0 {
            return Err(VerifyError::InvalidConfig("worker count must be positive".into()));
        }
        if let GChoice::Explicit(gs) = &self.gs {
            if gs.is_empty() {
                return Err(VerifyError::InvalidConfig("explicit g list is empty".into()));
            }
        }
        Ok(())
    }

    fn options(&self) -> EvalOptions {
        EvalOptions { range_reading: self.range_reading, budget: self.budget.clone() }
    }
}

pub fn default_attachments() -> Vec<Graph> {
    vec![Graph::complete(1), Graph::complete(2), Graph::path(3), Graph::cycle(3)]
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Product(#[from] ProductError),
}

/// Expands the config into instances in deterministic order.
pub fn build_instances(config: &RunConfig) -> Result<Vec<Instance>, VerifyError> {
    let mut constructions = config.constructions.clone();
    constructions.sort();
    constructions.dedup();
    let mut instances = Vec::new();
    for &construction in &constructions {
        for base in &config.bases {
            for h in &config.attachments {
                let attachment = match construction {
                    Construction::GeneralizedCorona => Attachment::Generalized(
                        GeneralizedCoronaSpec::new(
                            base.clone(),
                            vec![h.clone(); base.vertex_count()],
                        )?,
                    ),
                    Construction::RootedProduct => {
                        Attachment::Rooted(RootedGraph::new(h.clone(), 0)?)
                    }
                    _ => Attachment::Plain(h.clone()),
                };
                instances.push(Instance::new(construction, base.clone(), attachment));
            }
        }
    }
    Ok(instances)
}

fn feasible(host: &Graph, quantity: Quantity, budget: &SearchBudget) -> bool {
    let n = host.vertex_count();
    match quantity {
        Quantity::KappaG => n <= budget.max_host_vertices && n <= 128,
        Quantity::LambdaG => n <= 128 && host.edge_count() <= budget.max_host_edges,
    }
}

/// Classifies a prediction against an oracle value.
pub fn classify(prediction: &Prediction, oracle: ExtendedCount) -> Verdict {
    let value = prediction.value.expect("classify is only called for applicable predictions");
    if prediction.soft_ceiling {
        // Beyond a soft ceiling the formula is informative, not normative:
        // agreement confirms the case extends, disagreement proves nothing.
        return if oracle == value { Verdict::BoundHolds } else { Verdict::Inapplicable };
    }
    match prediction.kind {
        extraconn_core::PredictionKind::Exact => {
            if oracle == value {
                Verdict::Match
            } else {
                Verdict::Mismatch
            }
        }
        extraconn_core::PredictionKind::UpperBound => {
            if oracle <= value {
                Verdict::BoundHolds
            } else {
                Verdict::BoundViolated
            }
        }
        extraconn_core::PredictionKind::NotApplicable => {
            unreachable!("not-applicable predictions are recorded without an oracle run")
        }
    }
}

fn run_one(instance: &Instance, g: usize, prediction: Prediction, budget: &SearchBudget) -> VerificationRecord {
    let stub = |oracle, verdict, certificate| VerificationRecord {
        construction: instance.construction,
        base_id: instance.base_id.clone(),
        attach_id: instance.attach_id.clone(),
        g,
        prediction: prediction.clone(),
        oracle,
        verdict,
        certificate,
    };
    if !prediction.is_applicable() {
        return stub(OracleOutcome::Skipped, Verdict::Inapplicable, None);
    }
    let outcome = match prediction.quantity {
        Quantity::KappaG => g_extra_vertex_connectivity(&instance.host, g, budget)
            .map(|(v, c)| (v, c.map(RecordCertificate::Vertex))),
        Quantity::LambdaG => g_extra_edge_connectivity(&instance.host, g, budget)
            .map(|(v, c)| (v, c.map(RecordCertificate::Edge))),
    };
    match outcome {
        Ok((value, certificate)) => {
            let verdict = classify(&prediction, value);
            stub(OracleOutcome::Value(value), verdict, certificate)
        }
        Err(ExtraError::BudgetExceeded(_)) => {
            stub(OracleOutcome::BudgetExceeded, Verdict::BudgetExceeded, None)
        }
        Err(e) => panic!(
            "oracle rejected a host built from validated inputs ({} on {}): {e}",
            instance.construction, instance.base_id
        ),
    }
}

/// Runs the sweep; records come back sorted by (construction, base_id,
/// attach_id, g, quantity, anchor) and are identical for any worker count.
pub fn run_verification(config: &RunConfig) -> Result<Vec<VerificationRecord>, VerifyError> {
    config.validate()?;
    let instances = build_instances(config)?;
    let opts = config.options();

    let mut jobs: Vec<(usize, usize, Prediction)> = Vec::new();
    for (idx, instance) in instances.iter().enumerate() {
        match &config.gs {
            GChoice::Explicit(gs) => {
                for &g in gs {
                    for p in instance.predictions(g, &opts) {
                        jobs.push((idx, g, p));
                    }
                }
            }
            GChoice::Auto => {
                let cap = instance.host.vertex_count() / 2;
                for g in 0..=cap {
                    for p in instance.predictions(g, &opts) {
                        if p.is_applicable()
                            && !p.soft_ceiling
                            && feasible(&instance.host, p.quantity, &config.budget)
                        {
                            jobs.push((idx, g, p));
                        }
                    }
                }
            }
        }
    }

    let run = |(idx, g, p): (usize, usize, Prediction)| run_one(&instances[idx], g, p, &config.budget);
    let mut records: Vec<VerificationRecord> = if config.jobs == 1 {
        jobs.into_iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| VerifyError::InvalidConfig(e.to_string()))?;
        pool.install(|| jobs.into_par_iter().map(run).collect())
    };

    records.sort_by(|a, b| {
        (a.construction, &a.base_id, &a.attach_id, a.g, a.prediction.quantity, &a.prediction.anchor)
            .cmp(&(
                b.construction,
                &b.base_id,
                &b.attach_id,
                b.g,
                b.prediction.quantity,
                &b.prediction.anchor,
            ))
    });
    Ok(records)
}

#[derive(Debug, Default, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    #[serde(rename = "match")]
    pub matches: usize,
    pub mismatch: usize,
    pub bound_holds: usize,
    pub bound_violated: usize,
    pub inapplicable: usize,
    pub budget_exceeded: usize,
}

impl VerdictCounts {
    fn bump(&mut self, verdict: Verdict) {
        match verdict {
            Verdict::Match => self.matches += 1,
            Verdict::Mismatch => self.mismatch += 1,
            Verdict::BoundHolds => self.bound_holds += 1,
            Verdict::BoundViolated => self.bound_violated += 1,
            Verdict::Inapplicable => self.inapplicable += 1,
            Verdict::BudgetExceeded => self.budget_exceeded += 1,
        }
    }
}

/// Per-construction verdict tallies.
pub fn summarize(records: &[VerificationRecord]) -> BTreeMap<String, VerdictCounts> {
    let mut summary: BTreeMap<String, VerdictCounts> = BTreeMap::new();
    for r in records {
        summary.entry(r.construction.name().to_string()).or_default().bump(r.verdict);
    }
    summary
}

fn config_meta(config: &RunConfig) -> serde_json::Value {
    let mut constructions: Vec<&str> =
        config.constructions.iter().map(|c| c.name()).collect();
    constructions.sort();
    constructions.dedup();
    let bases: Vec<String> = config.bases.iter().map(canonical_graph6).collect();
    let attachments: Vec<String> = config.attachments.iter().map(canonical_graph6).collect();
    let g = match &config.gs {
        GChoice::Auto => json!("auto"),
        GChoice::Explicit(gs) => json!(gs),
    };
    // Worker count and output paths are execution details, not semantics:
    // reports from different worker counts must be byte-identical.
    json!({
        "constructions": constructions,
        "bases": bases,
        "attachments": attachments,
        "g": g,
        "budget": config.budget,
        "range_reading": config.range_reading.to_string(),
    })
}

/// The full report document with an explicit timestamp (fix it for
/// byte-comparable output; [`write_report`] stamps the current time).
pub fn report_json(
    records: &[VerificationRecord],
    config: &RunConfig,
    timestamp: &str,
) -> serde_json::Value {
    json!({
        "meta": {
            "config": config_meta(config),
            "tool_version": env!("CARGO_PKG_VERSION"),
            "timestamp": timestamp,
        },
        "records": records,
        "summary": summarize(records),
    })
}

/// Writes the report as pretty-printed JSON with a trailing newline.
pub fn write_report(
    records: &[VerificationRecord],
    config: &RunConfig,
    path: &Path,
) -> std::io::Result<()> {
    let timestamp = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
    let doc = report_json(records, config, &timestamp);
    let mut file = std::fs::File::create(path)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    let body = serde_json::to_string_pretty(&doc).expect("report serializes");
    file.write_all(body.as_bytes())
        .and_then(|()| file.write_all(b"\n"))
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}
