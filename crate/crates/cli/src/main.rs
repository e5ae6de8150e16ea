//! `degseq`: command-line front end for the degseq library.
//!
//! Exit codes: 0 affirmative, 1 negative verdict, 2 usage or input error,
//! 3 internal inconsistency (oracle mismatch or a failed self-check).

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use degseq::constructions::family_registry;
use degseq::maximal::{maximal_elements, oracle_registry, EnumerationLimits, MaximalError};
use degseq::orders::{
    compare, decompose_into_basic_transfers, lorenz_curve, nonnormalized_lorenz_points,
    order_registry, Comparison, OrderError,
};
use degseq::realizability::{
    check_connected, graphicality_registry, realize, realize_connected, Certificate, RealizeError,
    Verdict,
};
use degseq::sequence::ParsedSequence;
use degseq::{DegreeSequence, SimpleGraph};
use serde::Serialize;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "degseq", version, about = "Degree-sequence realizability via majorization")]
struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress normal output; only the exit code and errors remain.
    #[arg(long, global = true)]
    quiet: bool,
    /// Override the vertex cap of the enumeration oracles.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(2..=16))]
    max_n: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a sequence is graphical (or c-graphical).
    Check {
        sequence: String,
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value = "eg")]
        method: String,
    },
    /// Build a realization of a sequence.
    Realize {
        sequence: String,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Compare two sequences of equal length.
    Compare {
        x: String,
        y: String,
        #[arg(long, default_value = "generalized")]
        order: String,
    },
    /// Print Δ(S_d(n)) or Δ(S'_d(n)); negative d gives the incomplete star.
    Construct {
        n: usize,
        #[arg(allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        prime: bool,
        #[arg(long, value_enum, default_value_t = Emit::Seq)]
        emit: Emit,
    },
    /// Maximal degree sequences of connected n-vertex graphs with n - 1 + d edges.
    Maximal {
        n: usize,
        #[arg(allow_negative_numbers = true)]
        d: i64,
        #[arg(long, default_value = "both")]
        oracle: String,
        /// Also print every sequence in the slice.
        #[arg(long)]
        full: bool,
    },
    /// Unit transfers carrying x up to y.
    Decompose { x: String, y: String },
    /// Lorenz curve points of a sequence.
    Lorenz {
        sequence: String,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        nonnormalized: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Seq,
    Graph,
    Both,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(e: impl Display) -> Failure {
    Failure { code: 2, message: e.to_string() }
}

fn negative(e: impl Display) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

fn internal(e: impl Display) -> Failure {
    Failure { code: 3, message: e.to_string() }
}

fn realize_failure(e: RealizeError) -> Failure {
    match e {
        RealizeError::NotGraphical(_) | RealizeError::NotCGraphical(_) => negative(e),
        RealizeError::InternalInconsistency(_) => internal(e),
        _ => usage(e),
    }
}

fn maximal_failure(e: MaximalError) -> Failure {
    match e {
        MaximalError::OracleMismatch { .. } | MaximalError::Theorem4Mismatch { .. } => internal(e),
        _ => usage(e),
    }
}

/// What a command produced: an exit code, text and a JSON rendering.
struct Output {
    code: u8,
    text: String,
    json: Value,
}

impl Output {
    fn new(code: u8, text: String, json: &impl Serialize) -> Self {
        Output {
            code,
            text,
            json: serde_json::to_value(json).expect("report types serialize"),
        }
    }
}

struct Context {
    quiet: bool,
    max_n: Option<usize>,
}

impl Context {
    fn parse_sequence(&self, literal: &str) -> Result<DegreeSequence, Failure> {
        let parsed: ParsedSequence = literal.parse().map_err(usage)?;
        if parsed.reordered && !self.quiet {
            eprintln!("note: reordered input to {}", parsed.sequence);
        }
        Ok(parsed.sequence)
    }
}

fn verdict_text(v: &Verdict, connected: bool) -> String {
    let mut out = format!("{}: ", v.sequence);
    out += match (v.graphical, v.c_graphical) {
        (false, _) => "not graphical",
        (true, Some(true)) => "c-graphical",
        (true, Some(false)) => "graphical, not c-graphical",
        (true, None) => "graphical",
    };
    if connected && v.c_graphical.is_none() {
        out += " (connectivity undecided)";
    }
    out += &format!(" [{}]\n", v.method);
    match &v.certificate {
        Some(Certificate::Trace { trace }) => out += &format!("trace: {trace}\n"),
        Some(Certificate::Dominating { certificate: c }) => {
            out += &format!("witness: Δ(S_{}({})) = {} ≺ {}\n", c.d, c.n, c.dominated, v.sequence)
        }
        Some(Certificate::Realization { graph }) => out += &format!("realization:\n{}", graph.to_edge_list()),
        None => {}
    }
    out
}

fn cmd_check(ctx: &Context, literal: &str, connected: bool, method: &str) -> Result<Output, Failure> {
    let test = graphicality_registry().get(method).map_err(usage)?;
    let x = ctx.parse_sequence(literal)?;
    let verdict = if connected { check_connected(&x) } else { test.decide(&x) };
    let affirmative = if connected {
        verdict.c_graphical == Some(true)
    } else {
        verdict.graphical
    };
    let code = if affirmative { 0 } else { 1 };
    Ok(Output::new(code, verdict_text(&verdict, connected), &verdict))
}

fn render_graph(g: &SimpleGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Edgelist => g.to_edge_list(),
        GraphFormat::Dot => g.to_dot(),
    }
}

fn cmd_realize(ctx: &Context, literal: &str, connected: bool, format: GraphFormat) -> Result<Output, Failure> {
    let x = ctx.parse_sequence(literal)?;
    let g = if connected { realize_connected(&x) } else { realize(&x) }.map_err(realize_failure)?;
    if g.degree_sequence() != x {
        return Err(internal(format!("realization has degrees {}", g.degree_sequence())));
    }
    Ok(Output::new(0, render_graph(&g, format), &g))
}

#[derive(Serialize)]
struct CompareReport {
    x: DegreeSequence,
    y: DegreeSequence,
    order: String,
    result: Comparison,
}

fn order_failure(e: OrderError) -> Failure {
    match e {
        OrderError::NotMajorized { .. } => negative(e),
        _ => usage(e),
    }
}

fn cmd_compare(ctx: &Context, x: &str, y: &str, order: &str) -> Result<Output, Failure> {
    let dominance = order_registry().get(order).map_err(usage)?;
    let (x, y) = (ctx.parse_sequence(x)?, ctx.parse_sequence(y)?);
    let result = compare(&x, &y, dominance.as_ref()).map_err(order_failure)?;
    let report = CompareReport {
        x,
        y,
        order: order.to_string(),
        result,
    };
    Ok(Output::new(0, format!("{result}\n"), &report))
}

#[derive(Serialize)]
struct ConstructReport {
    n: usize,
    d: i64,
    family: String,
    sequence: DegreeSequence,
    graph: SimpleGraph,
}

fn cmd_construct(n: usize, d: i64, prime: bool, emit: Emit) -> Result<Output, Failure> {
    let family = family_registry()
        .get(if prime { "s-prime" } else { "s" })
        .map_err(internal)?;
    let sequence = family.sequence(n, d).map_err(usage)?;
    let graph = family.build(n, d).map_err(usage)?;
    if graph.degree_sequence() != sequence {
        return Err(internal(format!(
            "built graph has degrees {}, formula gives {sequence}",
            graph.degree_sequence()
        )));
    }
    let text = match emit {
        Emit::Seq => format!("{sequence}\n"),
        Emit::Graph => graph.to_edge_list(),
        Emit::Both => format!("{sequence}\n{}", graph.to_edge_list()),
    };
    let report = ConstructReport {
        n,
        d,
        family: family.name().to_string(),
        sequence,
        graph,
    };
    Ok(Output::new(0, text, &report))
}

fn cmd_maximal(ctx: &Context, n: usize, d: i64, oracle: &str, full: bool) -> Result<Output, Failure> {
    let defaults = EnumerationLimits::default();
    let limits = EnumerationLimits {
        max_n_graphs: ctx.max_n.unwrap_or(defaults.max_n_graphs),
        max_n_partitions: ctx.max_n.unwrap_or(defaults.max_n_partitions),
    };
    let oracle = oracle_registry(limits).get(oracle).map_err(usage)?;
    let report = maximal_elements(n, d, oracle.as_ref()).map_err(maximal_failure)?;
    Ok(Output::new(0, report.to_text(full), &report))
}

fn cmd_decompose(ctx: &Context, x: &str, y: &str) -> Result<Output, Failure> {
    let (x, y) = (ctx.parse_sequence(x)?, ctx.parse_sequence(y)?);
    let chain = decompose_into_basic_transfers(&x, &y).map_err(order_failure)?;
    let text: String = chain.steps.iter().map(|t| format!("{t}\n")).collect();
    Ok(Output::new(0, text, &chain))
}

#[derive(Serialize)]
struct LorenzReport {
    sequence: DegreeSequence,
    normalized: bool,
    points: Vec<[String; 2]>,
}

fn cmd_lorenz(ctx: &Context, literal: &str, csv: bool, nonnormalized: bool) -> Result<Output, Failure> {
    let x = ctx.parse_sequence(literal)?;
    let points: Vec<[String; 2]> = if nonnormalized {
        nonnormalized_lorenz_points(&x)
            .into_iter()
            .map(|(j, s)| [j.to_string(), s.to_string()])
            .collect()
    } else {
        let curve = lorenz_curve(&x).map_err(usage)?;
        curve.points().iter().map(|p| p.as_fractions()).collect()
    };
    let text: String = if csv {
        std::iter::once("x,y\n".to_string())
            .chain(points.iter().map(|[a, b]| format!("{a},{b}\n")))
            .collect()
    } else if nonnormalized {
        points.iter().map(|[a, b]| format!("({a},{b})\n")).collect()
    } else {
        points.iter().map(|[a, b]| format!("({a}, {b})\n")).collect()
    };
    let report = LorenzReport {
        sequence: x,
        normalized: !nonnormalized,
        points,
    };
    Ok(Output::new(0, text, &report))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let ctx = Context {
        quiet: cli.quiet,
        max_n: cli.max_n.map(usize::from),
    };
    match &cli.command {
        Command::Check { sequence, connected, method } => cmd_check(&ctx, sequence, *connected, method),
        Command::Realize { sequence, connected, format } => cmd_realize(&ctx, sequence, *connected, *format),
        Command::Compare { x, y, order } => cmd_compare(&ctx, x, y, order),
        Command::Construct { n, d, prime, emit } => cmd_construct(*n, *d, *prime, *emit),
        Command::Maximal { n, d, oracle, full } => cmd_maximal(&ctx, *n, *d, oracle, *full),
        Command::Decompose { x, y } => cmd_decompose(&ctx, x, y),
        Command::Lorenz { sequence, csv, nonnormalized } => cmd_lorenz(&ctx, sequence, *csv, *nonnormalized),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if !cli.quiet {
                if cli.json {
                    println!("{}", out.json);
                } else {
                    print!("{}", out.text);
                }
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
