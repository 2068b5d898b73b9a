use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use plsrd::core::bounds::{cubic_lower_bound, max_two_packing, packing_upper_bound, tree_construction, EXACT_PACKING_LIMIT};
use plsrd::core::{self as core, construct, generate, labeling::validate, Algorithm, FamilyKind, FamilySpec, SolveOptions};
use plsrd::fixtures::random_tree;
use plsrd::io::{self, BoundEntry, BoundKind, BoundsJson, PackingJson, ProvenanceJson, Sidecar};
use plsrd::verify::{self, VerifyConfig};

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_UNPROVEN: u8 = 4;
const EXIT_SIZE: u8 = 5;

const EXIT_CODES: &str = "Exit codes:
  0  success
  1  labeling invalid (validate) or a verify row mismatched
  2  bad arguments, malformed input or length mismatch
  3  file could not be read or written
  4  solve stopped by a budget; the result is the best labeling found
  5  graph too large for brute force or exact 2-packing";

#[derive(Parser)]
#[command(name = "plsrd", version, about = "Perfect locating signed Roman domination toolkit", after_help = EXIT_CODES)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct FamilyArgs {
    /// path, cycle, complete, bipartite, star, wheel, ladder, prism, grid3, flowersnark or tree
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    /// Size of the first part of a complete bipartite graph.
    #[arg(long)]
    p: Option<usize>,
    /// Tree edges such as "0-1,1-2,1-3".
    #[arg(long)]
    edges: Option<String>,
    /// Seed for a random tree on `--n` vertices.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Brute,
    Bnb,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family member as canonical graph JSON.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeling against the three conditions.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the minimum weight exactly.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "bnb")]
        algo: AlgoArg,
        #[arg(long, env = plsrd::THREADS_ENV, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        node_budget: Option<u64>,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_budget: Option<f64>,
        /// Labeling file used as the starting incumbent.
        #[arg(long)]
        warm_start: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare closed forms, constructions and exact optima over a range.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        p: Option<usize>,
        /// Node budget per solve; 0 skips exact solving.
        #[arg(long, default_value_t = 100_000_000)]
        solver_budget: u64,
        #[arg(long, env = plsrd::THREADS_ENV, default_value_t = 1)]
        threads: usize,
        /// Also write the rows as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report every applicable lower and upper bound for a graph.
    Bounds {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the construction labeling for a family member.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write {"family", "n", "claimed_weight"}.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.into()))
}

/// Bad arguments; exits with the usage code.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct UsageError(String);

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<UsageError>() {
            return EXIT_USAGE;
        }
        if let Some(e) = cause.downcast_ref::<plsrd::Error>() {
            return match e {
                plsrd::Error::Io { .. } => EXIT_IO,
                plsrd::Error::Parse(_) => EXIT_USAGE,
                plsrd::Error::Core(c) => core_exit_code(c),
            };
        }
        if let Some(c) = cause.downcast_ref::<core::Error>() {
            return core_exit_code(c);
        }
    }
    EXIT_USAGE
}

fn core_exit_code(e: &core::Error) -> u8 {
    match e {
        core::Error::TooLarge { .. } | core::Error::TooLargeForExact { .. } => EXIT_SIZE,
        _ => EXIT_USAGE,
    }
}

fn emit(out: Option<&Path>, contents: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => Ok(io::write_string(path, contents)?),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn parse_tree_edges(text: &str) -> anyhow::Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(|pair| {
            let (u, v) = pair.trim().split_once('-').ok_or_else(|| usage(format!("bad edge {pair:?}, expected u-v")))?;
            match (u.trim().parse(), v.trim().parse()) {
                (Ok(u), Ok(v)) => Ok((u, v)),
                _ => Err(usage(format!("bad edge {pair:?}, expected u-v"))),
            }
        })
        .collect()
}

fn family_spec(args: &FamilyArgs) -> anyhow::Result<FamilySpec> {
    let kind = FamilyKind::from_name(&args.family).ok_or_else(|| usage(format!("unknown family {:?}", args.family)))?;
    let spec = match kind {
        FamilyKind::ExplicitTree => match (&args.edges, args.seed, args.n) {
            (Some(edges), None, _) => FamilySpec::ExplicitTree(parse_tree_edges(edges)?),
            (None, Some(seed), Some(n)) => random_tree(n, seed)?,
            _ => return Err(usage("tree needs --edges, or --seed with --n")),
        },
        _ => {
            let n = args.n.ok_or_else(|| usage(format!("{kind} needs --n")))?;
            FamilySpec::with_params(kind, n, args.p)?
        }
    };
    spec.validate()?;
    Ok(spec)
}

fn cmd_generate(family: &FamilyArgs, out: Option<&Path>) -> anyhow::Result<u8> {
    let spec = family_spec(family)?;
    let g = generate(&spec)?;
    emit(out, &io::graph_to_json(&g))?;
    Ok(0)
}

fn cmd_validate(graph: &Path, labeling: &Path, out: Option<&Path>) -> anyhow::Result<u8> {
    let g = io::read_graph(graph)?;
    let f = io::read_labeling(labeling)?;
    let report = validate(&g, &f)?;
    emit(out, &io::report_to_json(&report))?;
    if report.is_valid() {
        eprintln!("valid, weight {}", f.weight());
        Ok(0)
    } else {
        eprintln!("invalid: {} violations", report.len());
        Ok(EXIT_INVALID)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    graph: &Path,
    algo: AlgoArg,
    threads: usize,
    node_budget: Option<u64>,
    time_budget: Option<f64>,
    warm_start: Option<&Path>,
    out: Option<&Path>,
) -> anyhow::Result<u8> {
    let g = io::read_graph(graph)?;
    let time_budget = match time_budget {
        Some(secs) if !(secs > 0.0 && secs.is_finite()) => return Err(usage("--time-budget must be positive")),
        Some(secs) => Some(Duration::from_secs_f64(secs)),
        None => None,
    };
    let opts = SolveOptions {
        algorithm: match algo {
            AlgoArg::Brute => Algorithm::BruteForce,
            AlgoArg::Bnb => Algorithm::Backtracking,
        },
        workers: threads,
        node_budget,
        time_budget,
        warm_start: warm_start.map(io::read_labeling).transpose()?,
    };
    let result = plsrd::solve(&g, &opts)?;
    emit(out, &io::solve_result_to_json(&result))?;
    if result.proven_optimal {
        eprintln!("optimum {} ({} nodes)", result.optimum, result.nodes_explored);
        Ok(0)
    } else {
        eprintln!("budget exhausted; best weight found {}", result.optimum);
        Ok(EXIT_UNPROVEN)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    family: &str,
    from: usize,
    to: usize,
    p: Option<usize>,
    solver_budget: u64,
    threads: usize,
    out: Option<&Path>,
) -> anyhow::Result<u8> {
    let kind = FamilyKind::from_name(family).ok_or_else(|| usage(format!("unknown family {family:?}")))?;
    if kind == FamilyKind::ExplicitTree {
        return Err(usage("verify covers the named families; use bounds for trees"));
    }
    if from > to {
        return Err(usage(format!("empty range {from}..{to}")));
    }
    if threads == 0 {
        return Err(usage("--threads must be at least 1"));
    }
    let cfg = VerifyConfig { solver_budget: (solver_budget > 0).then_some(solver_budget), workers: threads };
    let rows = verify::verify_range(kind, from, to, p, &cfg)?;
    print!("{}", verify::format_table(&rows));
    if let Some(path) = out {
        io::write_string(path, &verify::rows_to_json(&rows))?;
    }
    Ok(if verify::all_consistent(&rows) { 0 } else { EXIT_INVALID })
}

fn cmd_bounds(graph: &Path, out: Option<&Path>) -> anyhow::Result<u8> {
    let g = io::read_graph(graph)?;
    let n = g.n() as i64;
    let mut entries = vec![BoundEntry { kind: BoundKind::Upper, value: n, source: "all-ones".into(), heuristic: false }];
    if g.is_regular(3) {
        let value = cubic_lower_bound(&g)?;
        entries.push(BoundEntry { kind: BoundKind::Lower, value, source: "cubic-lower-bound".into(), heuristic: false });
    }
    let exact = g.n() <= EXACT_PACKING_LIMIT;
    let mut packing = None;
    if g.n() >= 2 && (g.min_degree() >= 2 || g.is_tree()) {
        let s = max_two_packing(&g, exact)?;
        let (value, source) = if g.is_tree() {
            (tree_construction(&g, &s)?.claimed_weight, "tree-two-packing")
        } else {
            (packing_upper_bound(&g, &s)?.value, "two-packing")
        };
        entries.push(BoundEntry { kind: BoundKind::Upper, value, source: source.into(), heuristic: !exact });
        packing = Some(PackingJson::from(&s));
    }
    let best = |kind: BoundKind| {
        let it = entries.iter().filter(|e| e.kind == kind);
        match kind {
            BoundKind::Lower => it.max_by_key(|e| e.value),
            BoundKind::Upper => it.min_by_key(|e| e.value),
        }
    };
    let lower = best(BoundKind::Lower);
    let upper = best(BoundKind::Upper);
    let exact_value = match (lower, upper) {
        (Some(l), Some(u)) if l.value == u.value => Some(l.value),
        _ => None,
    };
    let record = BoundsJson {
        lower: lower.map(|e| e.value),
        upper: upper.map(|e| e.value),
        exact: exact_value,
        provenance: ProvenanceJson {
            lower: lower.map(|e| e.source.clone()),
            upper: upper.map(|e| e.source.clone()),
            exact: exact_value.map(|_| "lower-equals-upper".to_owned()),
        },
        bounds: entries.clone(),
        packing,
    };
    emit(out, &io::bounds_to_json(&record))?;
    Ok(0)
}

fn cmd_construct(family: &FamilyArgs, out: Option<&Path>, sidecar: Option<&Path>) -> anyhow::Result<u8> {
    let spec = family_spec(family)?;
    let c = match spec {
        FamilySpec::ExplicitTree(_) => {
            let g = generate(&spec)?;
            let exact = g.n() <= EXACT_PACKING_LIMIT;
            tree_construction(&g, &max_two_packing(&g, exact)?)?
        }
        _ => construct(&spec)?,
    };
    emit(out, &io::labeling_to_json(&c.labeling))?;
    if let Some(path) = sidecar {
        io::write_string(path, &io::sidecar_to_json(&Sidecar::from(&c)))?;
    }
    eprintln!("{spec}: weight {}", c.claimed_weight);
    Ok(0)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Generate { family, out } => cmd_generate(family, out.as_deref()),
        Command::Validate { graph, labeling, out } => cmd_validate(graph, labeling, out.as_deref()),
        Command::Solve { graph, algo, threads, node_budget, time_budget, warm_start, out } => {
            cmd_solve(graph, *algo, *threads, *node_budget, *time_budget, warm_start.as_deref(), out.as_deref())
        }
        Command::Verify { family, from, to, p, solver_budget, threads, out } => {
            cmd_verify(family, *from, *to, *p, *solver_budget, *threads, out.as_deref())
        }
        Command::Bounds { graph, out } => cmd_bounds(graph, out.as_deref()),
        Command::Construct { family, out, sidecar } => cmd_construct(family, out.as_deref(), sidecar.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
