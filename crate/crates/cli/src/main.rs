//! `extraconn`: build corona-type graph products, query the exact g-extra
//! connectivity oracle, evaluate the formula catalogue, and run the full
//! verification sweep.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use extraconn_cli::{
    canonical_graph6, emit_graph6, enumerate_connected_base_graphs, export_dot, parse_edge_list,
    parse_graph6, run_verification, summarize, write_report, Attachment, Construction, GChoice,
    Instance, RunConfig,
};
use extraconn_core::{
    g_extra_edge_connectivity, g_extra_vertex_connectivity, EvalOptions, GeneralizedCoronaSpec,
    Graph, RangeReading, RootedGraph, SearchBudget,
};

type AnyError = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(
    name = "extraconn",
    version,
    about = "g-extra connectivity of corona-type graph products: exact oracle, formula catalogue, verification harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a product graph and export it (graph6 to stdout, DOT via --out).
    Product(ProductArgs),
    /// Run one exact oracle query on a graph.
    Exact(ExactArgs),
    /// Evaluate the formula catalogue for one instance and g.
    Predict(PredictArgs),
    /// Sweep constructions x bases x attachments x g, pairing predictions
    /// with oracle values, and write a JSON report.
    Verify(VerifyArgs),
    /// Emit the connected-graph corpus as graph6 lines.
    Corpus(CorpusArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input graph: a file path, or `-` for stdin.
    #[arg(long)]
    input: String,
    /// Input format.
    #[arg(long, default_value = "g6", value_parser = ["g6", "edges"])]
    format: String,
}

impl InputArgs {
    fn read(&self) -> Result<Graph, AnyError> {
        let text = if self.input == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        } else {
            std::fs::read_to_string(&self.input)
                .map_err(|e| format!("{}: {e}", self.input))?
        };
        match self.format.as_str() {
            "g6" => {
                let line = text.lines().next().ok_or("input is empty")?;
                Ok(parse_graph6(line)?)
            }
            _ => {
                let (graph, warnings) = parse_edge_list(&text)?;
                for w in warnings {
                    eprintln!("warning: {w}");
                }
                Ok(graph)
            }
        }
    }
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest cut size the oracle searches before giving up.
    #[arg(long)]
    budget_cut_size: Option<usize>,
    /// Largest host (product) vertex count the vertex oracle accepts.
    #[arg(long)]
    budget_host_vertices: Option<usize>,
    /// Largest host edge count the edge oracle accepts.
    #[arg(long)]
    budget_host_edges: Option<usize>,
}

impl BudgetArgs {
    fn build(&self) -> SearchBudget {
        let mut budget = SearchBudget::default();
        if let Some(k) = self.budget_cut_size {
            budget.max_cut_size = k;
        }
        if let Some(n) = self.budget_host_vertices {
            budget.max_host_vertices = n;
        }
        if let Some(m) = self.budget_host_edges {
            budget.max_host_edges = m;
        }
        budget
    }
}

#[derive(Args)]
struct AttachArgs {
    /// Attachment graph(s) as graph6 literals; comma-separate a per-vertex
    /// list for the generalized corona.
    #[arg(long)]
    attach: String,
    /// Root vertex inside the attachment (rooted product only).
    #[arg(long, default_value_t = 0)]
    root: u32,
}

impl AttachArgs {
    fn build(&self, construction: Construction, base: &Graph) -> Result<Attachment, AnyError> {
        let graphs: Vec<Graph> = self
            .attach
            .split(',')
            .map(parse_graph6)
            .collect::<Result<_, _>>()?;
        Ok(match construction {
            Construction::GeneralizedCorona => {
                let list = if graphs.len() == 1 {
                    vec![graphs[0].clone(); base.vertex_count()]
                } else {
                    graphs
                };
                Attachment::Generalized(GeneralizedCoronaSpec::new(base.clone(), list)?)
            }
            Construction::RootedProduct => {
                if graphs.len() != 1 {
                    return Err("the rooted product takes a single attachment".into());
                }
                Attachment::Rooted(RootedGraph::new(graphs[0].clone(), self.root)?)
            }
            _ => {
                if graphs.len() != 1 {
                    return Err(format!("{construction} takes a single attachment").into());
                }
                Attachment::Plain(graphs[0].clone())
            }
        })
    }
}

#[derive(Args)]
struct ProductArgs {
    /// Which product to build.
    #[arg(long)]
    construction: Construction,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    attach: AttachArgs,
    /// DOT output path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Component floor parameter: every component must keep g+1 vertices.
    #[arg(long)]
    g: usize,
    /// Vertex cuts or edge cuts.
    #[arg(long, value_parser = ["vertex", "edge"])]
    mode: String,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PredictArgs {
    /// Which product the instance uses.
    #[arg(long)]
    construction: Construction,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    attach: AttachArgs,
    /// The g to evaluate at.
    #[arg(long)]
    g: usize,
    /// How to read the lower bounds printed as k(km+1).
    #[arg(long, default_value = "literal", value_parser = ["literal", "km+1"])]
    range_reading: String,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Constructions to sweep (repeatable); all six when omitted.
    #[arg(long)]
    construction: Vec<Construction>,
    /// Base corpus file (one graph6 per line); defaults to every connected
    /// non-complete graph on up to --max-base-n vertices.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Base corpus ceiling when --input is not given.
    #[arg(long, default_value_t = 5)]
    max_base_n: usize,
    /// Attachment graphs as graph6 literals (repeatable);
    /// defaults to K1, K2, P3, C3.
    #[arg(long)]
    attach: Vec<String>,
    /// Explicit g values (repeatable); automatic theorem ranges when omitted.
    #[arg(long)]
    g: Vec<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// How to read the lower bounds printed as k(km+1).
    #[arg(long, default_value = "literal", value_parser = ["literal", "km+1"])]
    range_reading: String,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Report path.
    #[arg(long, default_value = "report.json")]
    out: PathBuf,
}

#[derive(Args)]
struct CorpusArgs {
    /// Largest vertex count to enumerate (hard cap 7).
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn write_or_print(out: Option<&Path>, body: &str) -> Result<(), AnyError> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(())
}

fn cmd_product(args: ProductArgs) -> Result<(), AnyError> {
    let base = args.input.read()?;
    let attachment = args.attach.build(args.construction, &base)?;
    let instance = Instance::new(args.construction, base, attachment);
    println!("{}", emit_graph6(&instance.host)?);
    eprintln!(
        "{}: {} vertices, {} edges",
        args.construction,
        instance.host.vertex_count(),
        instance.host.edge_count()
    );
    if let Some(path) = args.out {
        export_dot(&instance.host, &path)?;
    }
    Ok(())
}

fn cmd_exact(args: ExactArgs) -> Result<(), AnyError> {
    let graph = args.input.read()?;
    let budget = args.budget.build();
    let doc = match args.mode.as_str() {
        "vertex" => {
            let (value, cert) = g_extra_vertex_connectivity(&graph, args.g, &budget)?;
            json!({ "quantity": "kappa_g", "g": args.g, "value": value, "certificate": cert })
        }
        _ => {
            let (value, cert) = g_extra_edge_connectivity(&graph, args.g, &budget)?;
            json!({ "quantity": "lambda_g", "g": args.g, "value": value, "certificate": cert })
        }
    };
    let body = serde_json::to_string_pretty(&doc)? + "\n";
    write_or_print(args.out.as_deref(), &body)
}

fn cmd_predict(args: PredictArgs) -> Result<(), AnyError> {
    let base = args.input.read()?;
    let attachment = args.attach.build(args.construction, &base)?;
    let instance = Instance::new(args.construction, base, attachment);
    let opts = EvalOptions {
        range_reading: args.range_reading.parse::<RangeReading>()?,
        budget: args.budget.build(),
    };
    let predictions = instance.predictions(args.g, &opts);
    println!("{}", serde_json::to_string_pretty(&predictions)?);
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), AnyError> {
    let bases: Vec<Graph> = match &args.input {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            text.lines()
                .filter(|l| !l.trim().is_empty())
                .map(parse_graph6)
                .collect::<Result<_, _>>()?
        }
        None => enumerate_connected_base_graphs(args.max_base_n)?
            .into_iter()
            .filter(|g| !g.is_complete())
            .collect(),
    };
    let attachments: Vec<Graph> = if args.attach.is_empty() {
        extraconn_cli::default_attachments()
    } else {
        args.attach.iter().map(|s| parse_graph6(s)).collect::<Result<_, _>>()?
    };
    let config = RunConfig {
        constructions: if args.construction.is_empty() {
            Construction::ALL.to_vec()
        } else {
            args.construction.clone()
        },
        bases,
        attachments,
        gs: if args.g.is_empty() { GChoice::Auto } else { GChoice::Explicit(args.g.clone()) },
        budget: args.budget.build(),
        range_reading: args.range_reading.parse::<RangeReading>()?,
        jobs: args.jobs,
    };
    let records = run_verification(&config)?;
    write_report(&records, &config, &args.out)?;
    println!("{} records -> {}", records.len(), args.out.display());
    for (construction, counts) in summarize(&records) {
        println!(
            "  {construction}: {} match, {} mismatch, {} bound-holds, {} bound-violated, {} inapplicable, {} budget-exceeded",
            counts.matches,
            counts.mismatch,
            counts.bound_holds,
            counts.bound_violated,
            counts.inapplicable,
            counts.budget_exceeded
        );
    }
    let findings: Vec<String> = records
        .iter()
        .filter(|r| matches!(r.verdict, extraconn_cli::Verdict::Mismatch | extraconn_cli::Verdict::BoundViolated))
        .map(|r| {
            format!(
                "  {} base={} attach={} g={} {}: predicted {}, oracle {}",
                r.construction,
                r.base_id,
                r.attach_id,
                r.g,
                r.prediction.anchor,
                r.prediction
                    .value
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "-".into()),
                r.oracle
            )
        })
        .collect();
    if !findings.is_empty() {
        println!("findings ({}):", findings.len());
        for f in findings {
            println!("{f}");
        }
    }
    Ok(())
}

fn cmd_corpus(args: CorpusArgs) -> Result<(), AnyError> {
    let corpus = enumerate_connected_base_graphs(args.max_n)?;
    let mut body = String::new();
    for g in &corpus {
        body.push_str(&canonical_graph6(g));
        body.push('\n');
    }
    write_or_print(args.out.as_deref(), &body)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Product(args) => cmd_product(args),
        Command::Exact(args) => cmd_exact(args),
        Command::Predict(args) => cmd_predict(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Corpus(args) => cmd_corpus(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
