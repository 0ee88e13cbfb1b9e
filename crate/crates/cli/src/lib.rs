//! Harness around `extraconn-core`: graph ingestion (graph6, edge lists),
//! an exhaustive small-graph corpus, the prediction-vs-oracle verification
//! sweep, and DOT/JSON emission. The `extraconn` binary exposes all of it
//! behind subcommands.

pub mod corpus;
pub mod dot;
pub mod edgelist;
pub mod graph6;
pub mod verify;

pub use corpus::{enumerate_connected_base_graphs, CorpusError, MAX_CORPUS_N};
pub use dot::{dot_string, export_dot};
pub use edgelist::{parse_edge_list, EdgeListError};
pub use graph6::{canonical_form, canonical_graph6, emit_graph6, parse_graph6, Graph6Error};
pub use verify::{
    build_instances, classify, default_attachments, report_json, run_verification, summarize,
    write_report, Attachment, Construction, GChoice, Instance, OracleOutcome, RecordCertificate,
    RunConfig, VerdictCounts, VerificationRecord, Verdict, VerifyError,
};
