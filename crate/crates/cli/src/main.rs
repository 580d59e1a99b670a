//! `scoreseq`: decide and realize (mean) score sequences of tournaments.
//!
//! Exit codes: 0 feasible/success, 1 infeasible (or compare disagreement),
//! 2 usage or input error. All JSON output is canonical (sorted keys,
//! sorted set-like arrays, rationals in lowest terms) and byte-stable for
//! identical inputs and seeds.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use scoreseq_core::graph::DEFAULT_FOREST_LIMIT;
use scoreseq_core::io;
use scoreseq_core::oracle::{self, DEFAULT_ORIENTATION_LIMIT, DEFAULT_SAMPLE_DENOMINATOR};
use scoreseq_core::realization::forest_reduce;
use scoreseq_core::{
    check_complete_majorization, check_flow, check_subset, check_subset_with_limit,
    enumerate_lattice_points, enumerate_score_sequences, realize, realize_integral,
    sample_zonotope_point, sample_zonotope_point_with_denominator, Error, FeasibilityVerdict,
    Graph, RealizationResult, ScoreVector, SplitMix64,
};

/// Largest `n` for which `compare` runs the exhaustive subset decider.
const COMPARE_SUBSET_LIMIT: usize = 12;

#[derive(Parser)]
#[command(
    name = "scoreseq",
    version,
    about = "Decide whether a vector is a (mean) score sequence of a (random) tournament \
             on a graph, and construct explicit realizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check feasibility of a score vector, emitting a certifying witness when infeasible
    Check(CheckArgs),
    /// Construct a tournament realizing a score vector (fractional edges form a forest)
    Realize(RealizeArgs),
    /// Enumerate all score sequences (or feasible lattice points) of a graph
    Enumerate(EnumerateArgs),
    /// Cross-check the subset decider, the flow decider, and the brute-force oracles
    Compare(CompareArgs),
    /// Sample a feasible mean score vector from a seed
    Sample(SampleArgs),
}

/// Graph argument: a JSON file (`{"n": .., "edges": [[i,j],..]}`) or the
/// literal `K<n>` for the complete graph.
#[derive(Args)]
struct GraphArg {
    graph: String,
}

#[derive(Args)]
struct ScoresArg {
    /// Score vector as a comma-separated list, e.g. "1/2,1,3/2"
    #[arg(
        long,
        value_name = "LIST",
        conflicts_with = "scores_file",
        allow_hyphen_values = true
    )]
    scores: Option<String>,
    /// Score vector as a JSON file holding an array of rationals
    #[arg(long, value_name = "PATH")]
    scores_file: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Exhaustive subset scan (n <= limit)
    Subset,
    /// Max-flow decider
    Flow,
    /// Majorization on complete graphs, flow otherwise
    Auto,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[command(flatten)]
    scores: ScoresArg,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Override the subset decider's vertex limit
    #[arg(long)]
    limit: Option<usize>,
    /// Write the JSON result here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RealizeArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[command(flatten)]
    scores: ScoresArg,
    /// Require an integral input and emit a deterministic tournament
    #[arg(long)]
    integral: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Enumerate feasible lattice points instead of orientations
    #[arg(long)]
    lattice: bool,
    /// Override the edge limit (orientations) or candidate budget (lattice)
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of sampled (and perturbed) vectors to cross-check
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Override the oracle enumeration edge limit
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Probability denominator for the sampled cube point
    #[arg(long, default_value_t = DEFAULT_SAMPLE_DENOMINATOR)]
    denominator: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Check(args) => run_check(args),
        Command::Realize(args) => run_realize(args),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Compare(args) => run_compare(args),
        Command::Sample(args) => run_sample(args),
    }
}

fn load_graph(arg: &GraphArg) -> Result<Graph> {
    let source = arg.graph.as_str();
    if let Some(rest) = source.strip_prefix(['K', 'k']) {
        if let Ok(n) = rest.parse::<usize>() {
            return Graph::complete(n).map_err(|e| anyhow!(e));
        }
    }
    let text = fs::read_to_string(source)
        .with_context(|| format!("cannot read graph file {source:?}"))?;
    io::parse_graph(&text).with_context(|| format!("invalid graph in {source:?}"))
}

fn load_scores(arg: &ScoresArg, graph: &Graph) -> Result<ScoreVector> {
    let vector = match (&arg.scores, &arg.scores_file) {
        (Some(list), None) => ScoreVector::parse(list)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read scores file {path:?}"))?;
            io::parse_score_vector(&text)
                .with_context(|| format!("invalid scores in {path:?}"))?
        }
        _ => bail!("provide a score vector via --scores or --scores-file"),
    };
    if vector.len() != graph.vertex_count() {
        bail!(Error::DimensionMismatch {
            got: vector.len(),
            expected: graph.vertex_count(),
        });
    }
    Ok(vector)
}

fn emit(value: &Value, output: Option<&Path>) -> Result<()> {
    let text = io::to_canonical_string(value);
    match output {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write output file {path:?}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn exit_for(verdict: &FeasibilityVerdict) -> ExitCode {
    if verdict.is_feasible() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_check(args: CheckArgs) -> Result<ExitCode> {
    let graph = load_graph(&args.graph)?;
    let scores = load_scores(&args.scores, &graph)?;
    let verdict = match args.method {
        Method::Subset => match args.limit {
            Some(limit) => check_subset_with_limit(&graph, &scores, limit)?,
            None => check_subset(&graph, &scores)?,
        },
        Method::Flow => check_flow(&graph, &scores)?,
        Method::Auto => {
            if graph.is_complete() && check_complete_majorization(&scores) {
                FeasibilityVerdict::Feasible
            } else {
                // Not feasible on a complete graph, or not a complete
                // graph at all: the flow decider supplies the witness.
                check_flow(&graph, &scores)?
            }
        }
    };
    emit(&io::verdict_to_value(&verdict), args.output.as_deref())?;
    Ok(exit_for(&verdict))
}

fn run_realize(args: RealizeArgs) -> Result<ExitCode> {
    let graph = load_graph(&args.graph)?;
    let scores = load_scores(&args.scores, &graph)?;

    let realized: Result<(RealizationResult, Option<Vec<usize>>), Error> = if args.integral {
        realize_integral(&graph, &scores).map(|t| {
            let winners = (0..graph.edge_count()).map(|e| t.winning_vertex(e)).collect();
            (forest_reduce(&t.to_random()), Some(winners))
        })
    } else {
        realize(&graph, &scores).map(|r| (r, None))
    };

    match realized {
        Ok((result, winners)) => {
            let mut value = io::realization_to_value(&result);
            if let Some(winners) = winners {
                value["winners"] = json!(winners);
            }
            emit(&value, args.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::Infeasible(verdict)) => {
            emit(&io::verdict_to_value(&verdict), args.output.as_deref())?;
            Ok(ExitCode::from(1))
        }
        Err(other) => Err(other.into()),
    }
}

fn sequences_to_value<'a>(vectors: impl IntoIterator<Item = &'a Vec<u64>>) -> Value {
    Value::Array(vectors.into_iter().map(|v| json!(v)).collect())
}

fn run_enumerate(args: EnumerateArgs) -> Result<ExitCode> {
    let graph = load_graph(&args.graph)?;
    let value = if args.lattice {
        let budget = args.limit.map(|l| l as u128);
        let points = match budget {
            Some(b) => oracle::enumerate_lattice_points_with_budget(&graph, b)?,
            None => enumerate_lattice_points(&graph)?,
        };
        sequences_to_value(&points)
    } else {
        let set = match args.limit {
            Some(limit) => oracle::enumerate_score_sequences_with_limit(&graph, limit)?,
            None => enumerate_score_sequences(&graph)?,
        };
        sequences_to_value(&set.vectors)
    };
    emit(&value, args.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn run_sample(args: SampleArgs) -> Result<ExitCode> {
    if args.denominator == 0 {
        bail!("--denominator must be at least 1");
    }
    let graph = load_graph(&args.graph)?;
    let scores = sample_zonotope_point_with_denominator(&graph, args.seed, args.denominator);
    let value = json!({
        "denominator": args.denominator,
        "scores": io::score_vector_to_value(&scores),
        "seed": args.seed,
    });
    emit(&value, args.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

/// Cross-checks on one graph: oracle set identities, decider agreement on
/// sampled and perturbed vectors, witness validity, and realization
/// round-trips. Everything is driven by one seeded generator, so runs are
/// reproducible.
fn run_compare(args: CompareArgs) -> Result<ExitCode> {
    let graph = load_graph(&args.graph)?;
    let n = graph.vertex_count();
    let use_subset = n <= COMPARE_SUBSET_LIMIT;
    let complete = graph.is_complete();
    let mut agreement = true;

    let oracle_value = match compare_oracles(&graph, args.limit) {
        Ok(value) => {
            if value["sets_equal"] != json!(true) || value["realize_integral_ok"] != json!(true) {
                agreement = false;
            }
            value
        }
        Err(reason) => json!({ "skipped": reason }),
    };

    let mut rng = SplitMix64::new(args.seed);
    let mut sampled_feasible = 0usize;
    let mut realize_ok = 0usize;
    let mut perturbed_agreements = 0usize;
    let mut perturbed_infeasible = 0usize;
    let mut witnesses_valid = 0usize;

    for _ in 0..args.samples {
        let x = sample_zonotope_point(&graph, rng.next_u64());

        let flow_verdict = check_flow(&graph, &x)?;
        let mut all_feasible = flow_verdict.is_feasible();
        if use_subset {
            all_feasible &= check_subset(&graph, &x)?.is_feasible();
        }
        if complete {
            all_feasible &= check_complete_majorization(&x);
        }
        if all_feasible {
            sampled_feasible += 1;
        } else {
            agreement = false;
        }

        match realize(&graph, &x) {
            Ok(result)
                if result.tournament.mean_score_sequence() == x
                    && result.fractional_support.len() < n =>
            {
                realize_ok += 1;
            }
            _ => agreement = false,
        }

        let y = perturb(&x, &mut rng);
        let flow_verdict = check_flow(&graph, &y)?;
        let mut kinds_agree = true;
        if use_subset {
            let subset_verdict = check_subset(&graph, &y)?;
            kinds_agree &= verdict_kind(&subset_verdict) == verdict_kind(&flow_verdict);
            if !subset_verdict.is_feasible() {
                if subset_verdict.verify(&graph, &y) {
                    witnesses_valid += 1;
                } else {
                    agreement = false;
                }
            }
        }
        if complete {
            kinds_agree &= check_complete_majorization(&y) == flow_verdict.is_feasible();
        }
        if kinds_agree {
            perturbed_agreements += 1;
        } else {
            agreement = false;
        }
        if !flow_verdict.is_feasible() {
            perturbed_infeasible += 1;
            if flow_verdict.verify(&graph, &y) {
                witnesses_valid += 1;
            } else {
                agreement = false;
            }
        }
    }

    if sampled_feasible != args.samples || realize_ok != args.samples {
        agreement = false;
    }

    let value = json!({
        "agreement": agreement,
        "graph": { "m": graph.edge_count(), "n": n },
        "methods": {
            "flow": true,
            "majorization": complete,
            "subset": use_subset,
        },
        "oracle": oracle_value,
        "perturbed": {
            "agreements": perturbed_agreements,
            "count": args.samples,
            "infeasible": perturbed_infeasible,
            "witnesses_valid": witnesses_valid,
        },
        "realize": { "count": args.samples, "ok": realize_ok },
        "samples": { "count": args.samples, "feasible": sampled_feasible },
    });
    emit(&value, args.output.as_deref())?;
    Ok(if agreement {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Adds +1/7 to one coordinate and -1/7 to another, preserving the sum.
fn perturb(x: &ScoreVector, rng: &mut SplitMix64) -> ScoreVector {
    let n = x.len();
    let shift = scoreseq_core::rational::ratio(1, 7);
    let mut entries = x.entries().to_vec();
    if n >= 2 {
        let up = rng.below(n as u64) as usize;
        let down = {
            let d = rng.below(n as u64 - 1) as usize;
            if d >= up {
                d + 1
            } else {
                d
            }
        };
        entries[up] += &shift;
        entries[down] -= &shift;
    }
    ScoreVector::new(entries)
}

fn verdict_kind(verdict: &FeasibilityVerdict) -> &'static str {
    match verdict {
        FeasibilityVerdict::Feasible => "feasible",
        FeasibilityVerdict::SumMismatch { .. } => "sum",
        FeasibilityVerdict::SubsetViolation { .. } => "subset",
    }
}

/// Oracle identities: score-sequence set equals feasible lattice set, and
/// every member realizes back to itself. Returns Err with a reason when
/// the graph is over the enumeration limits.
fn compare_oracles(graph: &Graph, limit: Option<usize>) -> std::result::Result<Value, String> {
    let edge_limit = limit.unwrap_or(DEFAULT_ORIENTATION_LIMIT.min(DEFAULT_FOREST_LIMIT));
    let sequences = oracle::enumerate_score_sequences_with_limit(graph, edge_limit)
        .map_err(|e| e.to_string())?;
    let lattice = enumerate_lattice_points(graph).map_err(|e| e.to_string())?;
    let sets_equal = sequences.vectors == lattice;

    let mut realize_integral_ok = true;
    for vector in &sequences.vectors {
        let s = ScoreVector::from_integers(vector);
        match realize_integral(graph, &s) {
            Ok(t) if t.score_sequence() == s => {}
            _ => {
                realize_integral_ok = false;
                break;
            }
        }
    }

    Ok(json!({
        "lattice_points": lattice.len(),
        "realize_integral_ok": realize_integral_ok,
        "score_sequences": sequences.vectors.len(),
        "sets_equal": sets_equal,
    }))
}
