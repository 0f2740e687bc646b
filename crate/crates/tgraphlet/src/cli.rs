//! Command-line interface.
//!
//! Exit status: 0 success, 1 failed check or computation, 2 usage error,
//! 3 I/O or malformed input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use tgraphlet_core::approx::{required_sample_size, SampleConfig};
use tgraphlet_core::dissemination::{make_task, Task, TaskConfig};
use tgraphlet_core::graphlets::enumerate_classes;
use tgraphlet_core::kernel::{loo_1nn_accuracy, GramMatrix, Normalization, SparseRows};
use tgraphlet_core::{Dataset, FeatureVector, NodeCounts, TemporalGraph, Window};

use crate::bench::{bench_dataset, BENCH_HEADER};
use crate::dataset::{load_dataset, write_dataset};
use crate::driver::{
    approx_dataset, ba_bases, count_dataset, feature_table, gram_from_features, gram_from_rows, parse_window, thread_pool,
    CountSpec, Family,
};
use crate::export::{gram_to_string, GramFormat};
use crate::features::{read_features, FeatureTable};
use crate::manifest::RunManifest;
use crate::psd::check_psd;
use crate::verify::{default_counters, verify_dataset};
use crate::{Error, Result};

/// Seeds per simulation when `--num-seeds` is not given.
pub const DEFAULT_NUM_SEEDS: usize = 3;

#[derive(Parser, Debug)]
#[command(name = "tgraphlet", version, about = "Temporal graphlet kernels for labeled temporal graphs")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Random seed for sampling and simulation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Suppress progress messages and summary lines.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value_t = Family::Wedge)]
    pub family: Family,
    /// Time window: a positive integer or `inf`.
    #[arg(long, default_value = "inf")]
    pub delta: String,
    /// Edges per graphlet (fixed by wedge/star/triangle).
    #[arg(long)]
    pub ell: Option<usize>,
    /// Node counts, e.g. `2,3` (family `all` only).
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<usize>>,
    /// Count labeled graphlets (default).
    #[arg(long, conflicts_with = "unlabeled")]
    pub labeled: bool,
    #[arg(long)]
    pub unlabeled: bool,
    /// Add two-node graphlets (family `all` only).
    #[arg(long)]
    pub include_two_node: bool,
    /// Use the brute-force reference counter.
    #[arg(long)]
    pub oracle: bool,
}

impl CountArgs {
    fn spec(&self, delta: Window) -> Result<CountSpec> {
        CountSpec::new(
            self.family,
            delta,
            self.ell,
            self.k.clone(),
            !self.unlabeled,
            self.include_two_node,
            self.oracle,
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    L1,
    Cosine,
}

impl From<Mode> for Normalization {
    fn from(m: Mode) -> Self {
        match m {
            Mode::L1 => Normalization::FeatureL1,
            Mode::Cosine => Normalization::FeatureL1PlusCosine,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the codebook: `<index> <family> <pattern> <labels>`.
    Classes {
        #[arg(long, value_delimiter = ',', default_value = "3")]
        k: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        ell: usize,
        /// Alphabet size; unlabeled classes when absent.
        #[arg(long)]
        labels: Option<usize>,
    },
    /// Exact graphlet counts per graph.
    Count {
        dataset: PathBuf,
        #[command(flatten)]
        count: CountArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sampled normalized wedge vectors per graph.
    Approx {
        dataset: PathBuf,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value = "inf")]
        delta: String,
        /// Rejection sampling for bounded windows (default).
        #[arg(long, conflicts_with = "no_rejection")]
        rejection: bool,
        /// Plain pair sampling, discarding pairs outside the window.
        #[arg(long)]
        no_rejection: bool,
        /// Weigh every draw by 1/s and report non-wedges as overflow.
        #[arg(long = "strict-paper")]
        strict: bool,
        #[arg(long)]
        unlabeled: bool,
        /// Derive the sample size from --lambda and --confidence.
        #[arg(long, requires = "lambda")]
        auto_samples: bool,
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long, default_value_t = 0.05)]
        confidence: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gram matrix from a feature file or from a dataset.
    Gram {
        /// Dataset to count on (instead of --features).
        dataset: Option<PathBuf>,
        #[arg(long, conflicts_with = "dataset")]
        features: Option<PathBuf>,
        #[command(flatten)]
        count: CountArgs,
        /// Sample this many wedges per graph instead of exact counting.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Cosine)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = GramFormat::Csv)]
        format: GramFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        psd_check: bool,
        #[arg(long, default_value_t = 1e-8)]
        psd_tol: f64,
        /// Report leave-one-out 1-NN accuracy.
        #[arg(long)]
        loo: bool,
    },
    /// Generate a classification dataset by SI simulation.
    Simulate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        task: u8,
        /// Infection probability for task 1.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0.2)]
        p1: f64,
        #[arg(long, default_value_t = 0.8)]
        p2: f64,
        /// Fraction of infections to erase (task 3).
        #[arg(long)]
        missing_fraction: Option<f64>,
        /// Task whose labels are erased in task 3.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        base_task: u8,
        /// Dataset whose graphs serve as bases.
        #[arg(long, conflicts_with = "ba")]
        bases: Option<PathBuf>,
        /// Barabási–Albert bases: `n,m,t_max,count`.
        #[arg(long)]
        ba: Option<String>,
        #[arg(long, default_value_t = DEFAULT_NUM_SEEDS)]
        num_seeds: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare every fast counter with the brute-force reference.
    Verify {
        dataset: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "1,5,inf")]
        delta: Vec<String>,
        /// Verify graphs above the brute-force size guard.
        #[arg(long)]
        force: bool,
    },
    /// Time exact wedge counting and wedge sampling.
    Bench {
        dataset: PathBuf,
        #[arg(long, default_value = "inf")]
        delta: String,
        #[arg(long, value_delimiter = ',', default_value = "100")]
        samples: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Skip exact counting.
        #[arg(long)]
        no_exact: bool,
        #[arg(long)]
        unlabeled: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dataset to features, Gram matrix, PSD report and optional 1-NN
    /// accuracy, with a run manifest.
    Pipeline {
        dataset: PathBuf,
        #[command(flatten)]
        count: CountArgs,
        /// One output set per window, e.g. `10,100,1000`.
        #[arg(long, value_delimiter = ',')]
        delta_grid: Option<Vec<String>>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Cosine)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = GramFormat::Csv)]
        format: GramFormat,
        #[arg(long, default_value_t = 1e-8)]
        psd_tol: f64,
        #[arg(long)]
        loo: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses arguments and runs; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let command_line = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, command_line) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

struct Ctx {
    seed: u64,
    quiet: bool,
    pool: rayon::ThreadPool,
}

impl Ctx {
    fn info(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("{}", msg.as_ref());
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::io(p, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::io("<stdout>", e)),
                _ => Ok(()),
            }
        }
    }
}

fn execute(cli: &Cli, command_line: Vec<String>) -> Result<i32> {
    let ctx = Ctx { seed: cli.seed, quiet: cli.quiet, pool: thread_pool(cli.threads)? };
    match &cli.command {
        Command::Classes { k, ell, labels } => classes(k, *ell, *labels),
        Command::Count { dataset, count, out } => {
            let spec = count.spec(parse_window(&count.delta)?)?;
            let ds = load_dataset(dataset)?;
            let (table, _) = exact_features(&ds, &spec, &ctx)?;
            emit(out.as_deref(), &table.to_text())?;
            Ok(0)
        }
        Command::Approx {
            dataset,
            samples,
            delta,
            no_rejection,
            strict,
            unlabeled,
            auto_samples,
            lambda,
            confidence,
            out,
            ..
        } => {
            let delta = parse_window(delta)?;
            let ds = load_dataset(dataset)?;
            let alphabet = ds.alphabet_size().unwrap_or(1);
            let labeled = !unlabeled;
            let s = match (auto_samples, samples) {
                (true, _) => {
                    let classes = wedge_codebook_size(labeled, alphabet)?;
                    let s = required_sample_size(ds.len(), classes, lambda.expect("required by clap"), *confidence)?;
                    ctx.info(format!("auto sample size: {s}"));
                    usize::try_from(s).map_err(|_| Error::Usage(format!("sample size {s} too large")))?
                }
                (false, Some(s)) => *s,
                (false, None) => return Err(Error::Usage("give --samples or --auto-samples".into())),
            };
            let cfg = SampleConfig {
                rejection: !no_rejection,
                strict: *strict,
                labeled,
                ..SampleConfig::new(s, ctx.seed).with_delta(delta)
            };
            let (table, _) = approx_features(&ds, &cfg, &ctx)?;
            emit(out.as_deref(), &table.to_text())?;
            Ok(0)
        }
        Command::Gram { dataset, features, count, samples, mode, format, out, psd_check, psd_tol, loo } => {
            let k = match (features, dataset) {
                (Some(f), _) => {
                    let rows = read_features(f)?;
                    gram_from_rows(
                        SparseRows::from_index_rows(rows.rows)?,
                        rows.ids,
                        rows.class_labels,
                        (*mode).into(),
                        &ctx.pool,
                    )?
                }
                (None, Some(d)) => {
                    let ds = load_dataset(d)?;
                    let delta = parse_window(&count.delta)?;
                    let (_, vectors) = dataset_features(&ds, count, delta, *samples, &ctx)?;
                    gram_from_features(&vectors, ids(&ds), ds.class_labels(), (*mode).into(), &ctx.pool)?
                }
                (None, None) => return Err(Error::Usage("give a dataset or --features".into())),
            };
            emit(out.as_deref(), &gram_to_string(&k, *format))?;
            let mut status = 0;
            if *psd_check {
                let r = check_psd(&k, *psd_tol)?;
                ctx.info(format!("psd min_eigenvalue={:e} {}", r.min_eigenvalue, pass(r.passed)));
                if !r.passed {
                    status = 1;
                }
            }
            if *loo {
                let acc = loo_1nn_accuracy(&k)?;
                println_summary(&ctx, &format!("loo_1nn_accuracy={acc}"));
            }
            Ok(status)
        }
        Command::Simulate {
            task,
            p,
            p1,
            p2,
            missing_fraction,
            base_task,
            bases,
            ba,
            num_seeds,
            out,
        } => simulate(
            &ctx,
            command_line,
            SimulateArgs {
                task: *task,
                p: *p,
                p1: *p1,
                p2: *p2,
                missing_fraction: *missing_fraction,
                base_task: *base_task,
                bases: bases.as_deref(),
                ba: ba.as_deref(),
                num_seeds: *num_seeds,
                out,
            },
        ),
        Command::Verify { dataset, delta, force } => {
            let deltas = delta.iter().map(|d| parse_window(d)).collect::<Result<Vec<_>>>()?;
            let ds = load_dataset(dataset)?;
            let report = verify_dataset(&ds, &deltas, &default_counters(), *force, &ctx.pool)?;
            match report.mismatch {
                Some(m) => {
                    eprintln!("mismatch: {m}");
                    Ok(1)
                }
                None => {
                    ctx.info(format!("ok: {} graphs, {} comparisons", ds.len(), report.checks));
                    Ok(0)
                }
            }
        }
        Command::Bench { dataset, delta, samples, reps, no_exact, unlabeled, out } => {
            let ds = load_dataset(dataset)?;
            let delta = parse_window(delta)?;
            let rows = bench_dataset(&ds, delta, samples, *reps, ctx.seed, !unlabeled, !no_exact, &ctx.pool)?;
            let mut text = format!("{BENCH_HEADER}\n");
            for r in rows {
                text.push_str(&r.to_csv());
                text.push('\n');
            }
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Pipeline { dataset, count, delta_grid, samples, mode, format, psd_tol, loo, out } => {
            pipeline(&ctx, command_line, dataset, count, delta_grid.as_deref(), *samples, *mode, *format, *psd_tol, *loo, out)
        }
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn println_summary(ctx: &Ctx, line: &str) {
    if !ctx.quiet {
        println!("{line}");
    }
}

fn ids(ds: &Dataset) -> Vec<String> {
    ds.graphs().iter().map(|r| r.id.clone()).collect()
}

fn classes(k: &[usize], ell: usize, labels: Option<usize>) -> Result<i32> {
    let ks = NodeCounts::from_slice(k).map_err(|e| Error::Usage(e.to_string()))?;
    let codes = enumerate_classes(ks, ell, labels).map_err(|e| Error::Usage(e.to_string()))?;
    let mut text = String::new();
    for (i, c) in codes.iter().enumerate() {
        text.push_str(&format!("{i} {} {c}\n", c.family().name()));
    }
    emit(None, &text)?;
    Ok(0)
}

fn wedge_codebook_size(labeled: bool, alphabet: usize) -> Result<usize> {
    let codes = enumerate_classes(NodeCounts::only(3), 2, labeled.then_some(alphabet))?;
    Ok(codes.len())
}

fn exact_features(ds: &Dataset, spec: &CountSpec, ctx: &Ctx) -> Result<(FeatureTable, Vec<FeatureVector>)> {
    let alphabet = ds.alphabet_size().unwrap_or(1);
    let codebook = spec.codebook(alphabet)?;
    let counts = count_dataset(ds, spec, &ctx.pool)?;
    let vectors: Vec<FeatureVector> = counts.iter().map(|c| c.to_features()).collect();
    let table = feature_table(spec.settings(alphabet), codebook, ds, &vectors)?;
    Ok((table, vectors))
}

fn approx_features(ds: &Dataset, cfg: &SampleConfig, ctx: &Ctx) -> Result<(FeatureTable, Vec<FeatureVector>)> {
    let alphabet = ds.alphabet_size().unwrap_or(1);
    let samples = approx_dataset(ds, cfg, &ctx.pool)?;
    let vectors: Vec<FeatureVector> = samples.into_iter().map(|s| s.features).collect();
    let codebook = enumerate_classes(NodeCounts::only(3), 2, cfg.labeled.then_some(alphabet))?;
    let settings = vec![
        ("family".into(), "wedge".into()),
        ("delta".into(), cfg.delta.to_string()),
        ("samples".into(), cfg.sample_size.to_string()),
        ("rejection".into(), cfg.rejection.to_string()),
        ("strict".into(), cfg.strict.to_string()),
        ("seed".into(), cfg.seed.to_string()),
        ("labeled".into(), cfg.labeled.to_string()),
        ("L".into(), alphabet.to_string()),
    ];
    let table = feature_table(settings, Some(codebook), ds, &vectors)?;
    Ok((table, vectors))
}

/// Exact counts, or sampled wedge vectors when `samples` is given (family
/// must be wedge then).
fn dataset_features(
    ds: &Dataset,
    count: &CountArgs,
    delta: Window,
    samples: Option<usize>,
    ctx: &Ctx,
) -> Result<(FeatureTable, Vec<FeatureVector>)> {
    let spec = count.spec(delta)?;
    match samples {
        None => exact_features(ds, &spec, ctx),
        Some(s) => {
            if spec.family != Family::Wedge || spec.oracle {
                return Err(Error::Usage("--samples needs --family wedge and no --oracle".into()));
            }
            let cfg = SampleConfig { labeled: spec.labeled, ..SampleConfig::new(s, ctx.seed).with_delta(delta) };
            approx_features(ds, &cfg, ctx)
        }
    }
}

struct SimulateArgs<'a> {
    task: u8,
    p: f64,
    p1: f64,
    p2: f64,
    missing_fraction: Option<f64>,
    base_task: u8,
    bases: Option<&'a Path>,
    ba: Option<&'a str>,
    num_seeds: usize,
    out: &'a Path,
}

fn parse_ba(spec: &str) -> Result<(usize, usize, u64, usize)> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let bad = || Error::Usage(format!("--ba expects `n,m,t_max,count`, got `{spec}`"));
    let [n, m, t, c] = parts[..] else {
        return Err(bad());
    };
    Ok((
        n.parse().map_err(|_| bad())?,
        m.parse().map_err(|_| bad())?,
        t.parse().map_err(|_| bad())?,
        c.parse().map_err(|_| bad())?,
    ))
}

fn simulate(ctx: &Ctx, command_line: Vec<String>, a: SimulateArgs<'_>) -> Result<i32> {
    let mut manifest = RunManifest::new(command_line, serde_json::Value::Null);
    manifest.phase("bases");
    let bases: Vec<TemporalGraph> = match (a.bases, a.ba) {
        (Some(dir), None) => {
            manifest.add_input(dir)?;
            load_dataset(dir)?.into_graphs().into_iter().map(|r| r.graph).collect()
        }
        (None, Some(spec)) => {
            let (n, m, t, c) = parse_ba(spec)?;
            ba_bases(n, m, t, c, ctx.seed).map_err(|e| Error::Usage(e.to_string()))?
        }
        _ => return Err(Error::Usage("give exactly one of --bases and --ba".into())),
    };
    let base_task = if a.task == 3 { a.base_task } else { a.task };
    let mut cfg = match base_task {
        1 => TaskConfig::task1(a.p, a.num_seeds, ctx.seed),
        _ => TaskConfig::task2(a.p1, a.p2, a.num_seeds, ctx.seed),
    };
    match (a.task, a.missing_fraction) {
        (3, Some(f)) => cfg = cfg.with_missing_fraction(f),
        (3, None) => return Err(Error::Usage("task 3 needs --missing-fraction".into())),
        (_, Some(_)) => return Err(Error::Usage("--missing-fraction applies to task 3 only".into())),
        _ => {}
    }
    manifest.phase("simulate");
    let ds = make_task(&bases, &cfg).map_err(|e| Error::Usage(e.to_string()))?;
    manifest.phase("write");
    let written = write_dataset(&ds, a.out)?;
    manifest.config = json!({
        "task": a.task,
        "base_task": match cfg.task { Task::DisseminationVsRandom => 1, Task::TwoProbabilities => 2 },
        "p": a.p, "p1": a.p1, "p2": a.p2,
        "missing_fraction": a.missing_fraction,
        "num_seeds": a.num_seeds,
        "ba": a.ba,
        "bases": a.bases.map(|p| p.display().to_string()),
    });
    manifest.seeds = vec![ctx.seed];
    manifest.outputs = written.iter().map(|p| p.display().to_string()).collect();
    manifest.write(a.out)?;
    ctx.info(format!("wrote {} graphs to {}", ds.len(), a.out.display()));
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn pipeline(
    ctx: &Ctx,
    command_line: Vec<String>,
    dataset: &Path,
    count: &CountArgs,
    delta_grid: Option<&[String]>,
    samples: Option<usize>,
    mode: Mode,
    format: GramFormat,
    psd_tol: f64,
    loo: bool,
    out: &Path,
) -> Result<i32> {
    let deltas: Vec<Window> = match delta_grid {
        Some(grid) => grid.iter().map(|d| parse_window(d)).collect::<Result<_>>()?,
        None => vec![parse_window(&count.delta)?],
    };
    // flag consistency before any work
    for &d in &deltas {
        count.spec(d)?;
    }
    if samples.is_some() && (count.family != Family::Wedge || count.oracle) {
        return Err(Error::Usage("--samples needs --family wedge and no --oracle".into()));
    }
    let mut manifest = RunManifest::new(command_line, serde_json::Value::Null);
    manifest.phase("load");
    let ds = load_dataset(dataset).map_err(|e| e.in_stage("load"))?;
    manifest.add_input(dataset)?;
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    let grid = delta_grid.is_some();
    let mut status = 0;
    let mut reports = Vec::new();
    for &delta in &deltas {
        let suffix = if grid { format!("_d{delta}") } else { String::new() };
        manifest.phase(&format!("features{suffix}"));
        let (table, vectors) =
            dataset_features(&ds, count, delta, samples, ctx).map_err(|e| e.in_stage("features"))?;
        let fpath = out.join(format!("features{suffix}.txt"));
        table.write(&fpath)?;
        manifest.phase(&format!("gram{suffix}"));
        let k: GramMatrix = gram_from_features(&vectors, ids(&ds), ds.class_labels(), mode.into(), &ctx.pool)
            .map_err(|e| e.in_stage("gram"))?;
        let gpath = out.join(format!("gram{suffix}.{}", format.extension()));
        std::fs::write(&gpath, gram_to_string(&k, format)).map_err(|e| Error::io(&gpath, e))?;
        manifest.phase(&format!("psd{suffix}"));
        let psd = check_psd(&k, psd_tol).map_err(|e| e.in_stage("psd"))?;
        if !psd.passed {
            status = 1;
        }
        let acc = if loo {
            manifest.phase(&format!("loo{suffix}"));
            Some(loo_1nn_accuracy(&k).map_err(|e| Error::from(e).in_stage("loo"))?)
        } else {
            None
        };
        let mut line = format!("delta={delta} psd_min={:e} psd={}", psd.min_eigenvalue, pass(psd.passed));
        if let Some(a) = acc {
            line.push_str(&format!(" loo_1nn_accuracy={a}"));
        }
        println_summary(ctx, &line);
        reports.push(json!({
            "delta": delta.to_string(),
            "features": fpath.display().to_string(),
            "gram": gpath.display().to_string(),
            "psd_min_eigenvalue": psd.min_eigenvalue,
            "psd_passed": psd.passed,
            "loo_1nn_accuracy": acc,
        }));
        manifest.outputs.push(fpath.display().to_string());
        manifest.outputs.push(gpath.display().to_string());
    }
    manifest.config = json!({
        "family": count.family.name(),
        "deltas": deltas.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "ell": count.ell,
        "k": count.k,
        "labeled": !count.unlabeled,
        "include_two_node": count.include_two_node,
        "oracle": count.oracle,
        "samples": samples,
        "mode": Normalization::from(mode).name(),
        "format": format.extension(),
        "psd_tol": psd_tol,
        "results": reports,
    });
    manifest.seeds = vec![ctx.seed];
    manifest.write(out)?;
    Ok(status)
}
