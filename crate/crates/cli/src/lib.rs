// SPDX-License-Identifier: Apache-2.0

//! Command-line frontend. [`run`] parses arguments, executes one subcommand
//! and returns the process exit code: 0 on success, 2 on usage errors and 1
//! on runtime errors.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use motifvar_core::count::{count, count_all, orbit_degree_stats, write_counts_csv, write_orbit_csv};
use motifvar_core::experiment::{
    distribution_experiment, scaling_experiment, write_histogram_csv, write_samples_csv, DistributionConfig,
    ScalingConfig, Statistic,
};
use motifvar_core::fluct::{self_averaging_intervals, variance_breakdown, FluctuationClass};
use motifvar_core::hvmodel::{sample, write_edge_list, write_weights, ModelParams, SampleMetadata};
use motifvar_core::ingest::{graphlet_report, parse_edge_list, DEFAULT_X_MIN};
use motifvar_core::motif::{canonical_graph, display_name, enumerate_connected, parse_motif, symmetry_info, SmallGraph, ALIASES};
use motifvar_core::varprinciple::{piecewise, Mode, Tau};

type BoxError = Box<dyn std::error::Error + Send + Sync>;

/// Environment variable read when `--threads` is absent.
pub const THREADS_ENV: &str = "MOTIFVAR_THREADS";

#[derive(Parser, Debug)]
#[command(name = "motifvar", version, about = "Motif count exponents, fluctuations and censuses in power-law random graphs")]
pub struct Cli {
    /// Worker threads (defaults to MOTIFVAR_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Piecewise count exponent of a motif.
    Exponents(ExponentsArgs),
    /// Self-averaging intervals and fluctuation types.
    Classify(ClassifyArgs),
    /// Samples a hidden-variable graph as an edge list.
    Sample(SampleArgs),
    /// Counts motifs or graphlets in an edge-list graph.
    Count(CountArgs),
    /// Empirical scaling slope along a range of sizes.
    Scale(ScaleArgs),
    /// Distribution of normalized counts at one size.
    Dist(DistArgs),
    /// Graphlet census report of an edge-list network.
    DataReport(DataReportArgs),
    /// Named motifs.
    Catalog(CatalogArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Variation {
    Free,
    Typical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Stat {
    Mean,
    Median,
}

fn motif_arg(s: &str) -> Result<SmallGraph, String> {
    parse_motif(s).map_err(|e| e.to_string())
}

fn tau_arg(s: &str) -> Result<Tau, String> {
    Tau::parse(s).map_err(|e| e.to_string())
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

#[derive(Args, Debug, Serialize)]
struct ExponentsArgs {
    /// Alias (see `catalog`) or edge-list literal such as `0-1,1-2,0-2`.
    #[arg(long, value_parser = motif_arg)]
    motif: SmallGraph,
    /// Restrict to one variation; all four modes are printed otherwise.
    #[arg(long)]
    mode: Option<Variation>,
    /// With --mode, use the induced (graphlet) variant.
    #[arg(long, requires = "mode")]
    induced: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct ClassifyArgs {
    /// Motif to classify; every connected motif on 3 to 5 vertices otherwise.
    #[arg(long, value_parser = motif_arg)]
    motif: Option<SmallGraph>,
    /// Use graphlet exponents for the mean.
    #[arg(long)]
    induced: bool,
    /// Also report the variance breakdown at this τ (`p/q` or decimal).
    #[arg(long, value_parser = tau_arg)]
    tau: Option<Tau>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct SampleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = tau_arg)]
    tau: Tau,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0, value_parser = positive_f64)]
    hmin: f64,
    /// Connection scale; the analytic Pareto mean by default.
    #[arg(long, value_parser = positive_f64)]
    mu: Option<f64>,
    /// Edge list destination (stdout by default).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Sample metadata as JSON.
    #[arg(long)]
    meta: Option<PathBuf>,
    /// Vertex weights as `vertex<TAB>weight` lines.
    #[arg(long)]
    weights: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct CountArgs {
    /// Edge-list file.
    #[arg(long)]
    input: PathBuf,
    /// Count one motif.
    #[arg(long, value_parser = motif_arg, conflicts_with = "k")]
    motif: Option<SmallGraph>,
    /// Count every connected motif on `k` vertices (3 to 5).
    #[arg(long, value_parser = clap::value_parser!(u8).range(3..=5))]
    k: Option<u8>,
    #[arg(long)]
    induced: bool,
    /// Add per-orbit host degree statistics.
    #[arg(long)]
    orbits: bool,
    /// Write CSV instead of JSON.
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct ScaleArgs {
    #[arg(long, value_parser = motif_arg)]
    motif: SmallGraph,
    #[arg(long, value_parser = tau_arg)]
    tau: Tau,
    #[arg(long, default_value_t = Stat::Mean, value_enum)]
    stat: Stat,
    #[arg(long)]
    induced: bool,
    #[arg(long, default_value_t = 1_000)]
    nmin: usize,
    #[arg(long, default_value_t = 100_000)]
    nmax: usize,
    /// Log-spaced grid points between --nmin and --nmax.
    #[arg(long, default_value_t = 5)]
    npoints: usize,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0, value_parser = positive_f64)]
    hmin: f64,
    /// JSON summary destination (stdout by default).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Per-sample counts as CSV.
    #[arg(long)]
    raw: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct DistArgs {
    #[arg(long, value_parser = motif_arg)]
    motif: SmallGraph,
    #[arg(long, value_parser = tau_arg)]
    tau: Tau,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    induced: bool,
    #[arg(long, default_value_t = 1_000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    bins: usize,
    #[arg(long, default_value_t = 1.0, value_parser = positive_f64)]
    hmin: f64,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Histogram as CSV (`bin_lo,bin_hi,density`).
    #[arg(long)]
    hist: Option<PathBuf>,
    /// Per-sample counts as CSV.
    #[arg(long)]
    raw: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct DataReportArgs {
    #[arg(long)]
    input: PathBuf,
    /// Network name in the report; the file stem by default.
    #[arg(long)]
    name: Option<String>,
    /// Lower cutoff of the degree exponent fit.
    #[arg(long, default_value_t = DEFAULT_X_MIN, value_parser = positive_f64)]
    xmin: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct CatalogArgs {
    /// Also list every connected motif on this many vertices (1 to 5).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    k: Option<u8>,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code. Primary output goes to `stdout` unless an `--out` file is given.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            eprint!("{e}");
            return 2;
        }
    };
    let threads = match cli.threads.map(Ok).or_else(env_threads) {
        Some(Ok(0)) | Some(Err(_)) => {
            eprintln!("error: thread count must be a positive integer");
            return 2;
        }
        Some(Ok(t)) => Some(t),
        None => None,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    // output is buffered so the command can run inside the pool
    let result = builder.build().map_err(BoxError::from).and_then(|pool| {
        pool.install(|| {
            let mut buf = Vec::new();
            execute(&cli.command, &mut buf).map(|()| buf)
        })
    });
    match result.and_then(|buf| stdout.write_all(&buf).and_then(|()| stdout.flush()).map_err(BoxError::from)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn env_threads() -> Option<Result<usize, ()>> {
    std::env::var(THREADS_ENV).ok().map(|v| v.trim().parse::<usize>().map_err(|_| ()))
}

fn execute(cmd: &Command, stdout: &mut dyn Write) -> Result<(), BoxError> {
    match cmd {
        Command::Exponents(a) => exponents(a, stdout),
        Command::Classify(a) => classify(a, stdout),
        Command::Sample(a) => sample_cmd(a, stdout),
        Command::Count(a) => count_cmd(a, stdout),
        Command::Scale(a) => scale(a, stdout),
        Command::Dist(a) => dist(a, stdout),
        Command::DataReport(a) => data_report(a, stdout),
        Command::Catalog(a) => catalog(a, stdout),
    }
}

/// Runs `f` on the `--out` file or on stdout.
fn with_output(
    out: &Option<PathBuf>,
    stdout: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> Result<(), BoxError>,
) -> Result<(), BoxError> {
    match out {
        Some(p) => {
            let mut w = BufWriter::new(create(p)?);
            f(&mut w)?;
            w.flush()?;
            Ok(())
        }
        None => f(stdout),
    }
}

fn create(p: &Path) -> Result<File, BoxError> {
    File::create(p).map_err(|e| format!("cannot create {}: {e}", p.display()).into())
}

fn open(p: &Path) -> Result<BufReader<File>, BoxError> {
    File::open(p).map(BufReader::new).map_err(|e| format!("cannot open {}: {e}", p.display()).into())
}

/// JSON document `{command, config, result}` with a trailing newline.
fn emit<C: Serialize, R: Serialize>(
    command: &str,
    config: &C,
    result: &R,
    out: &Option<PathBuf>,
    stdout: &mut dyn Write,
) -> Result<(), BoxError> {
    let doc = json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "config": config,
        "result": result,
    });
    with_output(out, stdout, |w| {
        serde_json::to_writer_pretty(&mut *w, &doc)?;
        writeln!(w)?;
        Ok(())
    })
}

fn motif_header(h: &SmallGraph) -> Value {
    json!({ "name": display_name(h), "literal": h.to_literal(), "k": h.k(), "edges": h.edge_count() })
}

fn exponents(a: &ExponentsArgs, stdout: &mut dyn Write) -> Result<(), BoxError> {
    let modes: Vec<Mode> = match a.mode {
        Some(v) => vec![Mode::from_flags(v == Variation::Typical, a.induced)],
        None => Mode::ALL.to_vec(),
    };
    let mut rows = Vec::new();
    for m in modes {
        let pw = piecewise(&a.motif, m)?;
        rows.push(json!({ "mode": m, "breakpoints": pw.breakpoint_strings(), "pieces": pw.pieces }));
    }
    emit("exponents", a, &json!({ "motif": motif_header(&a.motif), "modes": rows }), &a.out, stdout)
}

fn class_json(c: &FluctuationClass, tau: &Option<Tau>) -> Result<Value, BoxError> {
    let mut v = json!({
        "motif": motif_header(&c.motif),
        "self_averaging": c.self_averaging_intervals.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
        "types": c.type_by_interval.iter().map(|t| json!({ "interval": t.interval.to_string(), "type": t.kind })).collect::<Vec<_>>(),
        "mean_pieces": c.mean_pieces,
        "variance_pieces": c.variance_pieces,
    });
    if let Some(t) = tau {
        let b = variance_breakdown(&c.motif, t, c.induced_mode)?;
        v["at_tau"] = json!({
            "tau": t,
            "self_averaging": c.is_self_averaging(t.value()),
            "type": c.type_at(t.value()),
            "breakdown": b,
        });
    }
    Ok(v)
}

fn classify(a: &ClassifyArgs, stdout: &mut dyn Write) -> Result<(), BoxError> {
    let motifs = match &a.motif {
        Some(h) => vec![h.clone()],
        None => {
            let mut all = Vec::new();
            for k in 3..=5 {
                all.extend(enumerate_connected(k)?);
            }
            all
        }
    };
    let rows = motifs
        .iter()
        .map(|h| class_json(&self_averaging_intervals(h, a.induced)?, &a.tau))
        .collect::<Result<Vec<_>, _>>()?;
    emit("classify", a, &rows, &a.out, stdout)
}

fn sample_cmd(a: &SampleArgs, stdout: &mut dyn Write) -> Result<(), BoxError> {
    let mut p = ModelParams::new(a.n, a.tau.clone(), a.seed);
    p.h_min = a.hmin;
    p.mu = a.mu;
    let g = sample(&p)?;
    with_output(&a.out, stdout, |w| {
        writeln!(w, "# hidden-variable sample: n={}, tau={}, h_min={}, mu={}, seed={}", a.n, a.tau, a.hmin, p.mu(), a.seed)?;
        write_edge_list(&g, w)?;
        Ok(())
    })?;
    if let Some(path) = &a.meta {
        let meta = SampleMetadata::new(&p, &g);
        let mut w = BufWriter::new(create(path)?);
        serde_json::to_writer_pretty(&mut w, &json!({ "command": "sample", "config": a, "result": meta }))?;
        writeln!(w)?;
    }
    if let Some(path) = &a.weights {
        write_weights(&g, BufWriter::new(create(path)?))?;
    }
    Ok(())
}

fn count_cmd(a: &CountArgs, stdout: &mut dyn Write) -> Result<(), BoxError> {
    let parsed = parse_edge_list(open(&a.input)?)?;
    let g = &parsed.graph;
    let motifs: Vec<SmallGraph> = match (&a.motif, a.k) {
        (Some(h), _) => vec![h.clone()],
        (None, Some(k)) => enumerate_connected(k as usize)?,
        (None, None) => return Err("one of --motif or --k is required".into()),
    };
    let results = match (&a.motif, a.k) {
        (Some(h), _) => vec![count(g, h, a.induced)?],
        _ => count_all(g, a.k.unwrap_or(4) as usize, a.induced)?,
    };
    let orbits = if a.orbits {
        motifs.iter().map(|h| orbit_degree_stats(g, h, a.induced, 100_000, 0)).collect::<Result<Vec<_>, _>>()?
    } else {
        Vec::new()
    };
    if a.csv {
        return with_output(&a.out, stdout, |w| {
            if a.orbits {
                write_orbit_csv(&orbits, w)?;
            } else {
                write_counts_csv(&results, w)?;
            }
            Ok(())
        });
    }
    let rows: Vec<Value> = results
        .iter()
        .map(|r| json!({ "motif": motif_header(&r.motif), "induced": r.induced, "copies": r.copies }))
        .collect();
    let mut result = json!({ "host": g.summary(), "counts": rows });
    if a.orbits {
        result["orbits"] = serde_json::to_value(&orbits)?;
    }
    emit("count", a, &result, &a.out, stdout)
}

/// `points` sizes spaced evenly in `log n` between `lo` and `hi`, rounded
/// and deduplicated.
pub fn log_grid(lo: usize, hi: usize, points: usize) -> Vec<usize> {
    if points < 2 || lo >= hi {
        return vec![lo];
    }
    let (a, b) = ((lo as f64).ln(), (hi as f64).ln());
    let mut g: Vec<usize> =
        (0..points).map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp().round() as usize).collect();
    g.dedup();
    g
}

fn scale(a: &ScaleArgs, stdout: &mut dyn Write) -> Result<(), BoxError> {
    let stat = match a.stat {
        Stat::Mean => Statistic::Mean,
        Stat::Median => Statistic::Median,
    };
    let mut cfg = ScalingConfig::new(a.motif.clone(), stat, a.tau.clone(), log_grid(a.nmin, a.nmax, a.npoints), a.samples, a.seed);
    cfg.induced = a.induced;
    cfg.h_min = a.hmin;
    let run = scaling_experiment(&cfg)?;
    if let Some(p) = &a.raw {
        write_samples_csv(&run.points, BufWriter::new(create(p)?))?;
    }
    let points: Vec<Value> = run
        .points
        .iter()
        .map(|p| {
            json!({
                "n": p.n, "mean": p.mean, "median": p.median, "cv": p.cv,
                "mean_minus_median_ci": p.mean_minus_median_ci, "median_below_mean": p.median_below_mean(),
            })
        })
        .collect();
    let result = json!({
        "motif": motif_header(&a.motif),
        "statistic": stat,
        "n_grid": cfg.n_grid,
        "points": points,
        "fitted_slope": run.fitted_slope,
        "theory_slope": run.theory_slope,
        "theory_exponent": run.theory_exponent,
        "log_power": run.log_power,
        "zero_sizes": run.zero_sizes,
        "mean_slope": run.slope_of(Statistic::Mean)?,
        "median_slope": run.slope_of(Statistic::Median)?,
        "mean_minus_median_slope_ci": run.slope_gap_ci()?,
    });
    emit("scale", a, &result, &a.out, stdout)
}

fn dist(a: &DistArgs, stdout: &mut dyn Write) -> Result<(), BoxError> {
    let mut cfg = DistributionConfig::new(a.motif.clone(), a.tau.clone(), a.n, a.samples, a.seed);
    cfg.induced = a.induced;
    cfg.h_min = a.hmin;
    cfg.bins = a.bins;
    let run = distribution_experiment(&cfg)?;
    if let Some(p) = &a.hist {
        write_histogram_csv(&run.histogram, BufWriter::new(create(p)?))?;
    }
    if let Some(p) = &a.raw {
        let point = motifvar_core::experiment::ScalingPoint {
            n: a.n,
            counts: run.counts.clone(),
            mean: f64::NAN,
            median: f64::NAN,
            cv: run.cv,
            mean_minus_median_ci: run.mean_minus_median_ci,
        };
        write_samples_csv(&[point], BufWriter::new(create(p)?))?;
    }
    let result = json!({
        "motif": motif_header(&a.motif),
        "cv": run.cv,
        "normalized_median": run.normalized_median,
        "mean_minus_median_ci": run.mean_minus_median_ci,
        "median_below_mean": run.median_below_mean(),
        "mode": run.mode(),
        "histogram": run.histogram,
    });
    emit("dist", a, &result, &a.out, stdout)
}

fn data_report(a: &DataReportArgs, stdout: &mut dyn Write) -> Result<(), BoxError> {
    let parsed = parse_edge_list(open(&a.input)?)?;
    let name = a
        .name
        .clone()
        .unwrap_or_else(|| a.input.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default());
    let report = graphlet_report(&parsed.graph, &name, a.xmin)?;
    emit("data-report", a, &report, &a.out, stdout)
}

#[derive(Serialize)]
struct CatalogRow {
    alias: Option<String>,
    literal: String,
    canonical: String,
    k: usize,
    edges: usize,
    automorphisms: u64,
}

fn catalog_row(alias: Option<&str>, h: &SmallGraph) -> CatalogRow {
    CatalogRow {
        alias: alias.map(str::to_string),
        literal: h.to_literal(),
        canonical: canonical_graph(h).to_literal(),
        k: h.k(),
        edges: h.edge_count(),
        automorphisms: symmetry_info(h).automorphism_count,
    }
}

fn catalog(a: &CatalogArgs, stdout: &mut dyn Write) -> Result<(), BoxError> {
    let mut rows = Vec::new();
    for (name, lit) in ALIASES {
        rows.push(catalog_row(Some(name), &SmallGraph::parse_literal(lit)?));
    }
    if let Some(k) = a.k {
        for h in enumerate_connected(k as usize)? {
            rows.push(catalog_row(motifvar_core::motif::alias_of(&h), &h));
        }
    }
    if a.csv {
        return with_output(&a.out, stdout, |w| {
            let mut c = csv::Writer::from_writer(w);
            for r in &rows {
                c.serialize(r)?;
            }
            c.flush()?;
            Ok(())
        });
    }
    emit("catalog", a, &rows, &a.out, stdout)
}
