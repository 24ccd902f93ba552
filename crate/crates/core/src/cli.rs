//! Command-line front end of the `readk` binary.
//!
//! Every subcommand maps onto one library operation. A human-readable
//! summary goes to standard output; `--report <path>` additionally writes a
//! CSV report. Exit status: 0 on success, 2 on any error. `pit` exits with 0
//! for the zero polynomial and 1 for a nonzero one (the witness is printed);
//! `experiment` exits with 1 if some row of the report fails its bound.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abp::format::{parse_abp, write_abp};
use crate::abp::random::random_roabp;
use crate::abp::DEFAULT_EXPANSION_GUARD;
use crate::algebra::{Fe, PrimeField, DEFAULT_PRIME};
use crate::error::{Error, Result};
use crate::evaldim::{
    eval_dim_with, gap_count, k_gap_to_roabp_in_order, k_pass_to_roabp, roabp_synthesize, roabp_width_profile,
    EvalDimOptions, Roabp, DEFAULT_SEED,
};
use crate::hardpoly::{
    block_partition, eliminate_summand, experiment_pn_evaldim, experiment_qn_evaldim, gen_pn, gen_qn, BlockSearch,
};
use crate::pit::{iteration_bound_check, load_points, read_k_pit, Generator, PitOptions};
use crate::sequences::{
    concat_decompose, is_per_read_monotone, is_regularly_interleaving, per_read_monotone_subset,
    regularly_interleaving_subset, ReadSequence,
};
use crate::ObliviousAbp;

#[derive(Parser, Debug)]
#[command(name = "readk", version, about = "Read-k oblivious algebraic branching programs")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Field for generated objects; files must agree with it when given.
    #[arg(long, global = true)]
    pub field_prime: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = GeneratorKind::Grid)]
    pub generator: GeneratorKind,
    /// Point file for `--generator external`.
    #[arg(long, global = true)]
    pub points: Option<PathBuf>,
    /// Points per random hitting set; default `(m w d)^2`.
    #[arg(long, global = true)]
    pub count: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write a CSV report here.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Largest expansion box or hitting set to build.
    #[arg(long, global = true, default_value_t = DEFAULT_EXPANSION_GUARD)]
    pub guard: u128,
}

#[derive(ValueEnum, Copy, Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Grid,
    Random,
    External,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a program: read multiplicity, passes, width.
    Validate { file: PathBuf },
    /// Evaluate at a point given as comma-separated values.
    Eval {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Vec<i64>,
    },
    /// Expand into a sparse polynomial.
    Expand { file: PathBuf },
    /// Identity test using the read order.
    Pit { file: PathBuf },
    /// Evaluation dimension; variables are 1-based, `T` defaults to the rest.
    Evaldim {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        s: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        t: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        r: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Minimal-width read-once program in a given order.
    SynthRoabp {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// k-pass or k-gap program to a read-once program.
    Collapse {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = CollapseMode::KPass)]
        mode: CollapseMode,
        /// Order for `k-gap`; defaults to `1, ..., n`.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read-sequence pruning and checks.
    Sequence {
        #[command(subcommand)]
        action: SequenceAction,
    },
    /// Write a hard-family program.
    Gen {
        #[arg(value_enum)]
        family: FamilyKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Finite-size experiments.
    Experiment {
        #[command(subcommand)]
        kind: ExperimentKind,
    },
}

#[derive(ValueEnum, Copy, Clone, Debug, PartialEq, Eq)]
pub enum CollapseMode {
    KPass,
    KGap,
}

#[derive(ValueEnum, Copy, Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Pn,
    Qn,
}

#[derive(Args, Debug)]
pub struct SequenceInput {
    /// Comma-separated labels, e.g. `1,2,1,2`.
    #[arg(long, value_delimiter = ',', conflicts_with = "abp")]
    pub labels: Option<Vec<usize>>,
    /// Use the read sequence of a program.
    #[arg(long)]
    pub abp: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum SequenceAction {
    /// Per-read-monotone and regularly interleaving subsets.
    Prune(SequenceInput),
    /// Monotonicity, interleaving, gap counts and segments.
    Check(SequenceInput),
}

#[derive(Subcommand, Debug)]
pub enum ExperimentKind {
    /// `P_n` dimension for all subsets of the given sizes.
    PnEvaldim {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3,4")]
        sizes: Vec<usize>,
    },
    /// `Q_n` dimension against matching cross edges on sampled pairs.
    QnEvaldim {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Cancel the first of `c` random read-once summands.
    Eliminate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        width: usize,
        #[arg(long, default_value_t = 1)]
        degree: u32,
        #[arg(long, default_value_t = 2)]
        parts: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    /// U/V/W block partition of a program.
    Blocks {
        file: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        greedy: bool,
    },
    /// Sweep of the loop-count inequality over `n = 1..=n_max`.
    IterationBound {
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9")]
        p: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6,7,8,9")]
        r: Vec<u64>,
        #[arg(long, default_value_t = 10_000)]
        n_max: u64,
    },
}

/// Parses `args` (program name first) and runs the command, writing the
/// summary to `out`. Returns the exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.global.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::Argument(e.to_string()))?;
            let mut buf = Vec::new();
            let code = pool.install(|| dispatch(cli, &mut buf));
            out.write_all(&buf).map_err(io_err(Path::new("<stdout>")))?;
            code
        }
        None => dispatch(cli, out),
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn load(path: &Path, g: &GlobalArgs) -> Result<ObliviousAbp> {
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    let abp = parse_abp(&text)?;
    if let Some(p) = g.field_prime {
        if p != abp.field().modulus() {
            return Err(Error::FieldMismatch {
                left: p,
                right: abp.field().modulus(),
            });
        }
    }
    Ok(abp)
}

fn field(g: &GlobalArgs) -> Result<PrimeField> {
    PrimeField::new(g.field_prime.unwrap_or(DEFAULT_PRIME))
}

fn zero_based(vars: &[usize], n: usize) -> Result<Vec<usize>> {
    vars.iter()
        .map(|&v| {
            if v == 0 || v > n {
                Err(Error::Argument(format!("variable {} is not in 1..={}", v, n)))
            } else {
                Ok(v - 1)
            }
        })
        .collect()
}

fn fmt_vars(vars: &[usize]) -> String {
    let v: Vec<String> = vars.iter().map(|x| format!("x{}", x + 1)).collect();
    format!("({})", v.join(","))
}

fn fmt_point(p: &[Fe]) -> String {
    let v: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", v.join(","))
}

fn write_report<R: Serialize>(path: Option<&Path>, rows: &[R]) -> Result<()> {
    let Some(path) = path else {
        return Ok(());
    };
    let csv_err = |e: csv::Error| Error::Io {
        path: path.to_path_buf(),
        source: std::io::Error::other(e.to_string()),
    };
    let mut w = csv::Writer::from_path(path).map_err(csv_err)?;
    for r in rows {
        w.serialize(r).map_err(csv_err)?;
    }
    w.flush().map_err(io_err(path))?;
    Ok(())
}

fn emit_abp(abp: &ObliviousAbp, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let text = write_abp(abp);
    match path {
        Some(p) => std::fs::write(p, text).map_err(io_err(p)),
        None => out.write_all(text.as_bytes()).map_err(io_err(Path::new("<stdout>"))),
    }
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(io_err(Path::new("<stdout>")))?
    };
}

#[derive(Serialize)]
struct ValidateRow {
    file: String,
    k: usize,
    class: String,
    width: usize,
    layers: usize,
    degree: u32,
}

#[derive(Serialize)]
struct PitRow {
    round: usize,
    vars: String,
    point: String,
    candidates: usize,
    tried: usize,
    width: usize,
    degree: u32,
}

#[derive(Serialize)]
struct EvalDimRow {
    s: String,
    t: String,
    r: String,
    dimension: usize,
    exact: bool,
}

#[derive(Serialize)]
struct WidthRow {
    cut: usize,
    width: usize,
    minimal: usize,
}

#[derive(Serialize)]
struct EliminateRow {
    part: usize,
    width: usize,
    max_cut_width: usize,
    bound: usize,
    pass: bool,
}

#[derive(Serialize)]
struct BlocksRow {
    set: &'static str,
    vars: String,
}

#[derive(Serialize)]
struct BoundRow {
    p: f64,
    r: u64,
    n_max: u64,
    failures: u64,
    first_failure: Option<u64>,
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    let report = g.report.as_deref();
    match &cli.command {
        Command::Validate { file } => {
            let a = load(file, g)?;
            let v = a.validate()?;
            say!(out, "{}", v.class);
            say!(
                out,
                "{} variables, {} layers, width {}, layer degree {}",
                a.num_vars(),
                a.layers().len(),
                a.width(),
                a.degree()
            );
            write_report(
                report,
                &[ValidateRow {
                    file: file.display().to_string(),
                    k: v.class.k,
                    class: v.class.to_string(),
                    width: a.width(),
                    layers: a.layers().len(),
                    degree: a.degree(),
                }],
            )?;
            Ok(0)
        }
        Command::Eval { file, point } => {
            let a = load(file, g)?;
            let f = a.field();
            let p: Vec<Fe> = point.iter().map(|&x| f.elem(x)).collect();
            say!(out, "{}", a.evaluate(&p)?);
            Ok(0)
        }
        Command::Expand { file } => {
            let a = load(file, g)?;
            let p = a.expand_with_guard(g.guard)?;
            say!(out, "{}", p);
            say!(out, "{} terms, total degree {}", p.num_terms(), p.total_degree());
            Ok(0)
        }
        Command::Pit { file } => {
            let a = load(file, g)?;
            let generator = match g.generator {
                GeneratorKind::Grid => Generator::Grid,
                GeneratorKind::Random => Generator::Random {
                    seed: g.seed,
                    count: g.count,
                },
                GeneratorKind::External => {
                    let path = g
                        .points
                        .as_deref()
                        .ok_or_else(|| Error::Argument("--generator external needs --points".into()))?;
                    Generator::External {
                        points: load_points(path, a.field(), a.num_vars())?,
                    }
                }
            };
            let opts = PitOptions {
                generator,
                guard: g.guard,
                ..PitOptions::default()
            };
            let v = read_k_pit(&a, &opts)?;
            let rows: Vec<PitRow> = v
                .iterations
                .iter()
                .enumerate()
                .map(|(i, it)| PitRow {
                    round: i + 1,
                    vars: fmt_vars(&it.vars),
                    point: it.point.as_deref().map(fmt_point).unwrap_or_default(),
                    candidates: it.candidates,
                    tried: it.tried,
                    width: it.width,
                    degree: it.degree,
                })
                .collect();
            for r in &rows {
                say!(
                    out,
                    "round {}: {} <- {} ({} of {} tried)",
                    r.round,
                    r.vars,
                    if r.point.is_empty() { "none" } else { &r.point },
                    r.tried,
                    r.candidates
                );
            }
            write_report(report, &rows)?;
            match v.witness {
                Some(w) => {
                    say!(out, "nonzero ({} generator)", v.provenance);
                    say!(out, "witness {}", fmt_point(&w));
                    say!(out, "value {}", a.evaluate(&w)?);
                    Ok(1)
                }
                None => {
                    say!(out, "zero ({} generator)", v.provenance);
                    Ok(0)
                }
            }
        }
        Command::Evaldim { file, s, t, r, trials } => {
            let a = load(file, g)?;
            let n = a.num_vars();
            let s = zero_based(s, n)?;
            let r = zero_based(r, n)?;
            let t = match t {
                Some(t) => zero_based(t, n)?,
                None => (0..n).filter(|v| !s.contains(v) && !r.contains(v)).collect(),
            };
            let f = a.expand_with_guard(g.guard)?;
            let opts = EvalDimOptions {
                trials: *trials,
                seed: g.seed,
            };
            let rep = eval_dim_with(&f, &s, &t, &r, &opts)?;
            say!(
                out,
                "dimension {} ({})",
                rep.dimension,
                if rep.exact { "exact" } else { "lower bound" }
            );
            for b in &rep.basis_assignments {
                say!(out, "  {} = {}", fmt_vars(&s), fmt_point(b));
            }
            write_report(
                report,
                &[EvalDimRow {
                    s: fmt_vars(&s),
                    t: fmt_vars(&t),
                    r: fmt_vars(&r),
                    dimension: rep.dimension,
                    exact: rep.exact,
                }],
            )?;
            Ok(0)
        }
        Command::SynthRoabp { file, order, out: dest } => {
            let a = load(file, g)?;
            let n = a.num_vars();
            let order = match order {
                Some(o) => zero_based(o, n)?,
                None => (0..n).collect(),
            };
            let f = a.expand_with_guard(g.guard)?;
            let minimal = roabp_width_profile(&f, &order)?;
            let r = roabp_synthesize(&f, &order)?;
            say!(out, "order {}", fmt_vars(&order));
            say!(out, "width profile {:?}", r.width_profile());
            emit_abp(r.abp(), dest.as_deref(), out)?;
            let rows: Vec<WidthRow> = r
                .width_profile()
                .into_iter()
                .zip(minimal)
                .enumerate()
                .map(|(i, (w, m))| WidthRow {
                    cut: i + 1,
                    width: w,
                    minimal: m,
                })
                .collect();
            write_report(report, &rows)?;
            Ok(0)
        }
        Command::Collapse {
            file,
            mode,
            order,
            out: dest,
        } => {
            let a = load(file, g)?;
            let n = a.num_vars();
            let r: Roabp = match mode {
                CollapseMode::KPass => k_pass_to_roabp(&a)?,
                CollapseMode::KGap => {
                    let order = match order {
                        Some(o) => zero_based(o, n)?,
                        None => (0..n).collect(),
                    };
                    k_gap_to_roabp_in_order(&a.normalize(), &order, g.guard)?
                }
            };
            say!(out, "order {}", fmt_vars(r.order()));
            say!(out, "width {} (input width {})", r.width(), a.width());
            emit_abp(r.abp(), dest.as_deref(), out)?;
            Ok(0)
        }
        Command::Sequence { action } => sequence(action, g, out),
        Command::Gen { family, n, out: dest } => {
            let f = field(g)?;
            let inst = match family {
                FamilyKind::Pn => gen_pn(f, *n, g.guard)?,
                FamilyKind::Qn => gen_qn(f, *n, g.guard)?,
            };
            match dest {
                Some(p) => {
                    emit_abp(&inst.realization, Some(p), out)?;
                    say!(
                        out,
                        "{}_{}: {} variables, {} layers, width {}",
                        inst.family,
                        n,
                        inst.realization.num_vars(),
                        inst.realization.layers().len(),
                        inst.realization.width()
                    );
                }
                None => emit_abp(&inst.realization, None, out)?,
            }
            Ok(0)
        }
        Command::Experiment { kind } => experiment(kind, g, out),
    }
}

fn read_sequence_input(input: &SequenceInput, g: &GlobalArgs) -> Result<ReadSequence> {
    match (&input.labels, &input.abp) {
        (Some(l), None) => ReadSequence::from_labels(&zero_based(l, usize::MAX)?),
        (None, Some(p)) => load(p, g)?.normalize().read_sequence(),
        _ => Err(Error::Argument("give exactly one of --labels and --abp".into())),
    }
}

fn sequence(action: &SequenceAction, g: &GlobalArgs, out: &mut dyn Write) -> Result<i32> {
    match action {
        SequenceAction::Prune(input) => {
            let s = read_sequence_input(input, g)?;
            let mono = per_read_monotone_subset(&s);
            let sm = s.restrict(&mono);
            let reg = regularly_interleaving_subset(&sm)?;
            let sr = sm.restrict(&reg);
            let mono_v: Vec<usize> = mono.into_iter().collect();
            let reg_v: Vec<usize> = reg.into_iter().collect();
            say!(out, "sequence {}", s);
            say!(out, "per-read-monotone {} ({} of {})", fmt_vars(&mono_v), mono_v.len(), s.n());
            say!(out, "regularly interleaving {} ({} kept)", fmt_vars(&reg_v), reg_v.len());
            say!(out, "pruned {}", sr);
            Ok(0)
        }
        SequenceAction::Check(input) => {
            let s = read_sequence_input(input, g)?;
            say!(out, "sequence {}", s);
            let mono = is_per_read_monotone(&s);
            say!(out, "per-read-monotone: {}", if mono { "yes" } else { "no" });
            let reg = is_regularly_interleaving(&s);
            say!(out, "regularly interleaving: {}", if reg.is_some() { "yes" } else { "no" });
            if let Some(pairs) = reg {
                for p in pairs {
                    let blocks: Vec<String> = p.blocks.iter().map(|b| fmt_vars(b)).collect();
                    say!(out, "  reads ({},{}): {}", p.reads.0, p.reads.1, blocks.join(" "));
                }
            }
            if mono {
                if let Ok(segs) = concat_decompose(&s) {
                    say!(out, "segments: {}", segs.len());
                }
            }
            // gap counts along the first-read order
            let labels = s.label_sequence();
            let f = PrimeField::new(DEFAULT_PRIME)?;
            let n = labels.iter().max().map_or(0, |m| m + 1);
            let layers = labels
                .iter()
                .map(|&v| crate::algebra::UniMatrix::identity(f, 1, Some(v)))
                .collect();
            let a = ObliviousAbp::new(f, n, layers)?;
            let mut prefix = std::collections::BTreeSet::new();
            let mut gaps = Vec::new();
            for &v in s.labels() {
                prefix.insert(v);
                gaps.push(gap_count(&a, &prefix));
            }
            say!(out, "gaps along first read: {:?} (k = {})", gaps, s.k());
            Ok(0)
        }
    }
}

fn experiment(kind: &ExperimentKind, g: &GlobalArgs, out: &mut dyn Write) -> Result<i32> {
    let report = g.report.as_deref();
    let f = field(g)?;
    let status = |ok: bool| if ok { 0 } else { 1 };
    match kind {
        ExperimentKind::PnEvaldim { n, sizes } => {
            let rows = experiment_pn_evaldim(f, *n, sizes)?;
            for &t in sizes {
                let rs: Vec<_> = rows.iter().filter(|r| r.t == t).collect();
                let min = rs.iter().map(|r| r.dimension).min().unwrap_or(0);
                let fails = rs.iter().filter(|r| !r.pass).count();
                say!(
                    out,
                    "t = {}: {} subsets, min dimension {}, floor {}, {} below floor",
                    t,
                    rs.len(),
                    min,
                    rs.first().map_or(0, |r| r.floor),
                    fails
                );
            }
            write_report(report, &rows)?;
            Ok(status(rows.iter().all(|r| r.pass)))
        }
        ExperimentKind::QnEvaldim { n, trials } => {
            let rows = experiment_qn_evaldim(f, *n, *trials, g.seed)?;
            let fails = rows.iter().filter(|r| !r.pass).count();
            let max_m = rows.iter().map(|r| r.cross_edges).max().unwrap_or(0);
            say!(
                out,
                "{} pairs, largest cross-edge count {}, {} below 2^m",
                rows.len(),
                max_m,
                fails
            );
            write_report(report, &rows)?;
            Ok(status(fails == 0))
        }
        ExperimentKind::Eliminate {
            n,
            width,
            degree,
            parts,
            t,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
            let mut summands = Vec::with_capacity(*parts);
            for _ in 0..*parts {
                let mut order: Vec<usize> = (0..*n).collect();
                order.shuffle(&mut rng);
                let a = random_roabp(&mut rng, f, &order, *width, *degree);
                summands.push(Roabp::new(a, order)?);
            }
            let e = eliminate_summand(&summands, *t)?;
            let w = summands.iter().map(|p| p.width()).max().unwrap_or(1);
            say!(out, "S = {}", fmt_vars(&e.s));
            for (p, a) in e.points.iter().zip(&e.alpha) {
                say!(out, "  {} * [S = {}]", a, fmt_point(p));
            }
            let mut rows = Vec::new();
            for (j, res) in e.residuals.iter().enumerate() {
                let max_cut = res.width_profile().into_iter().max().unwrap_or(0);
                let bound = w * (w + 1);
                say!(out, "part {}: residual width {} (bound {})", j + 2, max_cut, bound);
                rows.push(EliminateRow {
                    part: j + 2,
                    width: res.width(),
                    max_cut_width: max_cut,
                    bound,
                    pass: max_cut <= bound,
                });
            }
            write_report(report, &rows)?;
            Ok(status(rows.iter().all(|r| r.pass)))
        }
        ExperimentKind::Blocks { file, r, greedy } => {
            let a = load(file, g)?;
            let search = if *greedy {
                BlockSearch::Greedy
            } else {
                BlockSearch::Exhaustive
            };
            let p = block_partition(&a, *r, search)?;
            let blocks: Vec<String> = p.blocks.iter().map(|b| format!("[{},{})", b.start, b.end)).collect();
            say!(out, "blocks {}", blocks.join(" "));
            say!(out, "U {}", fmt_vars(&p.u));
            say!(out, "V {}", fmt_vars(&p.v));
            say!(out, "W {} (bound {:.2})", fmt_vars(&p.w), p.w_bound());
            if p.tenth_form_vacuous() {
                say!(out, "note: fewer than 10k^2 layers, the n/10 form of the bound is vacuous");
            }
            write_report(
                report,
                &[
                    BlocksRow {
                        set: "U",
                        vars: fmt_vars(&p.u),
                    },
                    BlocksRow {
                        set: "V",
                        vars: fmt_vars(&p.v),
                    },
                    BlocksRow {
                        set: "W",
                        vars: fmt_vars(&p.w),
                    },
                ],
            )?;
            Ok(status(p.satisfies_w_bound()))
        }
        ExperimentKind::IterationBound { p, r, n_max } => {
            let mut rows = Vec::new();
            for &pv in p {
                for &rv in r {
                    let mut failures = 0;
                    let mut first = None;
                    for n in 1..=*n_max {
                        if !iteration_bound_check(n, pv, rv)? {
                            failures += 1;
                            first.get_or_insert(n);
                        }
                    }
                    rows.push(BoundRow {
                        p: pv,
                        r: rv,
                        n_max: *n_max,
                        failures,
                        first_failure: first,
                    });
                }
            }
            let total: u64 = rows.iter().map(|r| r.failures).sum();
            say!(
                out,
                "{} (p, r) pairs x {} values of n: {}",
                rows.len(),
                n_max,
                if total == 0 {
                    "all pass".to_string()
                } else {
                    format!("{} failures", total)
                }
            );
            write_report(report, &rows)?;
            Ok(status(total == 0))
        }
    }
}
