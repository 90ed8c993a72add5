use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use specgap::bounds::compare::{remark_comparison_trees, BoundComparison};
use specgap::bounds::{bound_report, BoundKind, ReportOptions};
use specgap::constructions::{build_family, Family};
use specgap::enumeration::{audit_order, conjecture_scan, enumerate_trees, MaximalAudit, SPARSE_MAX_ORDER};
use specgap::graph::{bipartition, graph6};
use specgap::rewiring::{hill_climb, ClimbOptions, Policy};
use specgap::spectral::{dense_eigensolve, spectral_radius_with, PowerOptions, DEFAULT_MAX_ITER};
use specgap::{Error, Graph};

mod format;

use format::{fmt_f64, fmt_opt};

#[derive(Parser, Debug)]
#[command(name = "specgap", version, about = "Spectral radius experiments on irregular graphs")]
struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph.
    Construct {
        #[arg(long)]
        family: FamilyName,
        #[arg(long)]
        n: usize,
        /// Second part size for `complete-bipartite`.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Spectral radius of every graph in a graph6 file.
    Spectrum {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
        /// Use the dense eigensolver instead of power iteration.
        #[arg(long)]
        dense: bool,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Gap bounds against the true gap for every graph in a graph6 file.
    Bounds {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        /// One row per k' = 1..=κ for the connectivity bounds.
        #[arg(long)]
        all_k: bool,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Exhaustive check that B_n is the unique maximal subcubic bipartite graph.
    VerifyMaximal {
        #[arg(long, default_value_t = 6)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// All trees on n vertices, or the bound comparison over them.
    Trees {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        compare_bounds: bool,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// n²(Δ − λ₁) along the extremal family.
    Conjecture {
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        delta: usize,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Two-switch hill climb from every graph in a graph6 file.
    Hillclimb {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = PolicyName::Best)]
        policy: PolicyName,
        /// Only take switches that keep the start's bipartition.
        #[arg(long)]
        keep_bipartition: bool,
        #[arg(long, default_value_t = specgap::rewiring::DEFAULT_MAX_STEPS)]
        max_steps: usize,
        #[arg(long, default_value = "-")]
        trace: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyName {
    Bn,
    Path,
    Complete,
    CompleteMinusEdge,
    CompleteBipartite,
    Star,
    Cycle,
    /// `--n` is the dimension.
    Hypercube,
    Petersen,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PolicyName {
    Best,
    First,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
    Io(io::Error),
    Check(String),
    /// A spectral failure recorded inside an otherwise complete report.
    Spectral(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl Failure {
    fn code(&self) -> (u8, &'static str) {
        match self {
            Failure::Usage(_) => (2, "usage"),
            Failure::Lib(Error::InvalidParameter(_) | Error::TooFewVertices { .. }) => (2, "usage"),
            Failure::Lib(Error::ScaleCap { .. }) => (3, "scale_cap"),
            Failure::Lib(Error::NotConverged { .. }) => (4, "not_converged"),
            Failure::Lib(_) => (1, "input"),
            Failure::Io(_) => (1, "io"),
            Failure::Check(_) => (1, "check_failed"),
            Failure::Spectral(_) => (4, "not_converged"),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Check(m) | Failure::Spectral(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
            Failure::Io(e) => e.to_string(),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let first = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
            return fail(&Failure::Usage(first), Some(e.render().to_string()));
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            return fail(&Failure::Usage("--threads must be at least 1".into()), None);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            return fail(&Failure::Usage(e.to_string()), None);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => fail(&f, None),
    }
}

// The first stderr line is machine-readable: `error<TAB>code<TAB>kind<TAB>message`.
fn fail(f: &Failure, detail: Option<String>) -> ExitCode {
    let (code, kind) = f.code();
    let msg = f.message().replace(['\t', '\n'], " ");
    let mut err = io::stderr().lock();
    let _ = writeln!(err, "error\t{code}\t{kind}\t{msg}");
    if let Some(d) = detail {
        let _ = write!(err, "{d}");
    }
    ExitCode::from(code)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Construct { family, n, m, format, out } => construct(family, n, m, format, &out),
        Command::Spectrum { input, tol, max_iter, dense, out } => spectrum(&input, tol, max_iter, dense, &out),
        Command::Bounds { input, all_k, tol, out } => bounds(&input, all_k, tol, &out),
        Command::VerifyMaximal { n_min, n_max, out } => verify_maximal(n_min, n_max, &out),
        Command::Trees { n, compare_bounds, out } => trees(n, compare_bounds, &out),
        Command::Conjecture { n_list, delta, out } => conjecture(&n_list, delta, &out),
        Command::Hillclimb { input, seed, policy, keep_bipartition, max_steps, trace } => {
            let policy = match policy {
                PolicyName::Best => Policy::Best,
                PolicyName::First => Policy::First,
            };
            hillclimb(&input, ClimbOptions { seed, policy, keep: None, max_steps }, keep_bipartition, &trace)
        }
    }
}

fn open_out(path: &Path) -> io::Result<Box<dyn Write>> {
    if path == Path::new("-") {
        Ok(Box::new(BufWriter::new(io::stdout().lock())))
    } else {
        Ok(Box::new(BufWriter::new(File::create(path)?)))
    }
}

fn csv_out(path: &Path) -> io::Result<csv::Writer<Box<dyn Write>>> {
    Ok(csv::Writer::from_writer(open_out(path)?))
}

/// graph6 lines; blank lines and `#` comments are skipped.
fn read_graphs(path: &Path) -> std::result::Result<Vec<Graph>, Failure> {
    let reader: Box<dyn Read> = if path == Path::new("-") { Box::new(io::stdin().lock()) } else { Box::new(File::open(path)?) };
    let mut out = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = graph6::decode(line).map_err(|e| Failure::Lib(Error::Graph6(format!("line {}: {e}", i + 1))))?;
        out.push(g);
    }
    if out.is_empty() {
        return Err(Failure::Usage(format!("no graphs in {}", path.display())));
    }
    Ok(out)
}

fn check_tol(tol: f64) -> Outcome {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--tol must be positive, got {tol}")))
    }
}

fn construct(family: FamilyName, n: usize, m: Option<usize>, format: GraphFormat, out: &Path) -> Outcome {
    let fam = match family {
        FamilyName::Bn => Family::Bn(n),
        FamilyName::Path => Family::Path(n),
        FamilyName::Complete => Family::Complete(n),
        FamilyName::CompleteMinusEdge => Family::CompleteMinusEdge(n),
        FamilyName::CompleteBipartite => {
            Family::CompleteBipartite(n, m.ok_or_else(|| Failure::Usage("complete-bipartite needs --m".into()))?)
        }
        FamilyName::Star => Family::Star(n),
        FamilyName::Cycle => Family::Cycle(n),
        FamilyName::Hypercube => Family::Hypercube(n),
        FamilyName::Petersen => Family::Petersen,
    };
    let g = build_family(fam)?;
    let mut w = open_out(out)?;
    match format {
        GraphFormat::Graph6 => writeln!(w, "{}", graph6::encode(&g))?,
        GraphFormat::Edgelist => {
            writeln!(w, "{} {}", g.order(), g.size())?;
            for (u, v) in g.edges() {
                writeln!(w, "{u} {v}")?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn spectrum(input: &Path, tol: f64, max_iter: usize, dense: bool, out: &Path) -> Outcome {
    check_tol(tol)?;
    let graphs = read_graphs(input)?;
    let opts = PowerOptions { tol, max_iter };
    let results: Vec<_> =
        graphs.iter().map(|g| if dense { dense_eigensolve::<f64>(g) } else { spectral_radius_with(g, &opts) }).collect();
    let mut w = csv_out(out)?;
    w.write_record(["graph6", "n", "m", "lambda1", "iterations", "residual", "method"])?;
    let mut first_err = None;
    for (g, r) in graphs.iter().zip(results) {
        match r {
            Ok(s) => w.write_record([
                graph6::encode(g),
                g.order().to_string(),
                g.size().to_string(),
                fmt_f64(s.lambda1),
                s.iterations.to_string(),
                fmt_f64(s.residual),
                s.method.as_str().to_string(),
            ])?,
            Err(e) => {
                w.write_record([graph6::encode(g), g.order().to_string(), g.size().to_string(), "".into(), "".into(), "".into(), "".into()])?;
                first_err.get_or_insert(e);
            }
        }
    }
    w.flush()?;
    first_err.map_or(Ok(()), |e| Err(e.into()))
}

fn bounds(input: &Path, all_k: bool, tol: f64, out: &Path) -> Outcome {
    check_tol(tol)?;
    let graphs = read_graphs(input)?;
    let opts = ReportOptions { tol, all_k };
    let mut w = csv_out(out)?;
    let mut header: Vec<String> = ["graph6", "n", "m", "delta", "k", "D", "lambda1", "true_gap"].map(String::from).to_vec();
    for kind in BoundKind::IRREGULAR {
        header.push(kind.id().to_string());
        header.push(format!("{}_holds", kind.id()));
    }
    w.write_record(&header)?;
    let mut spectral_error = None;
    for g in &graphs {
        let r = bound_report::<f64>(g, &opts)?;
        if let Some(e) = &r.error {
            spectral_error.get_or_insert_with(|| format!("{}: {e}", r.graph6));
        }
        // With --all-k the k column is the connectivity the row's
        // connectivity bounds were evaluated at.
        let ks: Vec<usize> = if all_k { (1..=r.k).collect() } else { vec![r.k] };
        for k in ks {
            let mut row = vec![
                r.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.delta.to_string(),
                k.to_string(),
                r.diameter.map(|d| d.to_string()).unwrap_or_default(),
                fmt_opt(r.lambda1),
                fmt_opt(r.true_gap),
            ];
            for kind in BoundKind::IRREGULAR {
                let e = r.entries.iter().find(|e| e.kind == kind && (!kind.uses_connectivity() || e.k == Some(k)));
                row.push(fmt_opt(e.and_then(|e| e.value)));
                row.push(e.and_then(|e| e.holds).map(|h| h.to_string()).unwrap_or_default());
            }
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    spectral_error.map_or(Ok(()), |m| Err(Failure::Spectral(m)))
}

fn verify_maximal(n_min: usize, n_max: usize, out: &Path) -> Outcome {
    if n_min < 6 || n_min > n_max {
        return Err(Failure::Usage(format!("need 6 ≤ n-min ≤ n-max, got {n_min}..{n_max}")));
    }
    if n_max > SPARSE_MAX_ORDER {
        return Err(Error::ScaleCap { op: "verify-maximal", n: n_max, max: SPARSE_MAX_ORDER }.into());
    }
    let audits: Vec<MaximalAudit> = (n_min..=n_max).map(audit_order).collect::<specgap::Result<_>>()?;
    let mut w = csv_out(out)?;
    w.write_record([
        "n",
        "catalog_size",
        "graph6",
        "lambda1",
        "margin",
        "unique",
        "degree_sequence",
        "degree_pattern",
        "two_unsaturated",
        "no_degree_two_bridge",
        "bridges_separate",
        "isomorphic_to_bn",
        "cut_edges",
        "passed",
    ])?;
    for a in &audits {
        let cut: Vec<String> = a.cut_edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        w.write_record([
            a.n.to_string(),
            a.catalog_size.to_string(),
            a.graph6.clone(),
            fmt_f64(a.lambda1),
            fmt_opt(a.margin),
            a.unique.to_string(),
            a.degree_sequence.to_string(),
            a.degree_pattern.to_string(),
            a.two_unsaturated.to_string(),
            a.no_degree_two_bridge.to_string(),
            a.bridges_separate.to_string(),
            a.isomorphic_to_bn.to_string(),
            cut.join(" "),
            a.passed().to_string(),
        ])?;
    }
    w.flush()?;
    let failed: Vec<String> = audits.iter().filter(|a| !a.passed()).map(|a| a.n.to_string()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("audit failed for n = {}", failed.join(","))))
    }
}

fn trees(n: usize, compare: bool, out: &Path) -> Outcome {
    if !compare {
        let all = enumerate_trees(n)?;
        let mut w = open_out(out)?;
        for t in &all {
            writeln!(w, "{}", graph6::encode(t))?;
        }
        w.flush()?;
        return Ok(());
    }
    let cmp = remark_comparison_trees(n)?;
    let mut w = csv_out(out)?;
    w.write_record(["comparison", "graph6", "n", "m", "delta", "k", "D", "first", "second", "first_value", "second_value", "winner"])?;
    let mut write = |c: &BoundComparison| -> csv::Result<()> {
        let name = format!("{}_vs_{}", c.first.id(), c.second.id());
        for r in &c.rows {
            w.write_record([
                name.clone(),
                r.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.delta.to_string(),
                r.k.to_string(),
                r.diameter.to_string(),
                c.first.id().to_string(),
                c.second.id().to_string(),
                fmt_f64(r.first),
                fmt_f64(r.second),
                r.winner.as_str().to_string(),
            ])?;
        }
        Ok(())
    };
    write(&cmp.diameter_vs_improved)?;
    write(&cmp.improved_vs_stevanovic)?;
    w.flush()?;
    Ok(())
}

fn conjecture(n_list: &[usize], delta: usize, out: &Path) -> Outcome {
    let rows = conjecture_scan(n_list, delta)?;
    let mut w = csv_out(out)?;
    w.write_record(["n", "delta", "lambda1", "gap", "n2_gap", "ratio", "iterations", "error"])?;
    let mut first_err = None;
    for (&n, row) in n_list.iter().zip(rows) {
        match row {
            Ok(r) => w.write_record([
                r.n.to_string(),
                delta.to_string(),
                fmt_f64(r.lambda1),
                fmt_f64(r.gap),
                fmt_f64(r.n2_gap),
                fmt_f64(r.ratio),
                r.iterations.to_string(),
                String::new(),
            ])?,
            Err(e) => {
                w.write_record([n.to_string(), delta.to_string(), "".into(), "".into(), "".into(), "".into(), "".into(), e.to_string()])?;
                first_err.get_or_insert(e);
            }
        }
    }
    w.flush()?;
    first_err.map_or(Ok(()), |e| Err(e.into()))
}

fn hillclimb(input: &Path, base: ClimbOptions, keep_bipartition: bool, trace: &Path) -> Outcome {
    let graphs = read_graphs(input)?;
    let mut w = csv_out(trace)?;
    w.write_record(["input", "step", "graph6", "lambda1", "u", "u_prime", "v", "v_prime"])?;
    for (i, g) in graphs.iter().enumerate() {
        let keep = if keep_bipartition { Some(bipartition(g)?) } else { None };
        let t = hill_climb::<f64>(g, &ClimbOptions { keep, ..base.clone() })?;
        for (s, step) in t.steps.iter().enumerate() {
            let mv = |f: fn(&specgap::rewiring::SwapMove<f64>) -> usize| step.mv.as_ref().map(|m| f(m).to_string()).unwrap_or_default();
            w.write_record([
                i.to_string(),
                s.to_string(),
                graph6::encode(&step.graph),
                fmt_f64(step.lambda1),
                mv(|m| m.u),
                mv(|m| m.u_prime),
                mv(|m| m.v),
                mv(|m| m.v_prime),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
