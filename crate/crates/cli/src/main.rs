//! `gq`: checks, contraction sweeps and representation experiments with CSV output.
//!
//! Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or I/O error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use gq_core::homotopy::{boson_path, path_report, segal_path, stime_path};
use gq_core::quantify::{green_function, quantified_action, quantify, relation_defects, Statistics};
use gq_core::report::{self, num, Table};
use gq_core::representations::{
    adjoint_rep, centrality_defect, conjugation_gap, correspondence_table, quadratic_casimir, rep_defect, so3_irrep,
    spectrum, QuantumConstants, RepKind, Representation,
};
use gq_core::stime::{
    commuting_set, dimension_cross_check, lambda2_check, monotone_toward_one, n_vs_lx, residuals_vs_singular,
    stime_operators, wave_operator, wave_residuals, LeadingOrder,
};
use gq_core::{catalog, linalg, parse_algebra, Error, LieAlgebra, Signature};

const MAX_TWO_L: u32 = 4096;
const MAX_STIME_K: usize = 1024;
const MAX_MODES: usize = 12;
const MAX_CUTOFF: usize = 64;
const MAX_SAMPLES: usize = 100_000;
/// Largest `Sym^k` sector materialized for the dense wave-operator check.
const DENSE_WAVE_DIM: usize = 500;

#[derive(Parser)]
#[command(name = "gq", version, about = "Lie-algebra contractions, simplified oscillators and quantification checks")]
struct Cli {
    /// Tolerance override (default depends on the command)
    #[arg(long, global = true, env = "GQ_TOL")]
    tol: Option<f64>,

    /// Seed for randomized conjugation checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// CSV destination (stdout when omitted)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathName {
    Segal,
    Stime,
    Boson,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra file and classify it
    Check {
        /// Algebra JSON file
        path: PathBuf,
    },
    /// Sample a contraction path and report invariants along it
    Contract {
        #[arg(long, value_enum)]
        path: PathName,
        #[arg(long, default_value_t = 9)]
        samples: usize,
        /// compact | 5-1 | 3-3
        #[arg(long, default_value = "compact", value_parser = parse_signature)]
        signature: Signature,
        /// Modes of the boson path
        #[arg(long, default_value_t = 2)]
        modes: usize,
    },
    /// Compare the simplified oscillator with the truncated canonical pair
    Oscillator {
        /// Comma-separated list of 2l values
        #[arg(long = "two-l", value_delimiter = ',', required = true)]
        two_l: Vec<u32>,
        /// Number of compared levels
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
    },
    /// Space-time operators: Lambda2, residuals against the singular algebra, wave operator
    Stime {
        /// Comma-separated symmetric powers
        #[arg(long, value_delimiter = ',', default_value = "8")]
        k: Vec<usize>,
        #[arg(long, default_value = "compact", value_parser = parse_signature)]
        signature: Signature,
        /// Residual table destination
        #[arg(long)]
        residuals: Option<PathBuf>,
        #[arg(long, default_value_t = 0.5)]
        mass: f64,
    },
    /// Build a many-quantum system and tabulate its Green's functions
    Quantify {
        /// + | - | 0
        #[arg(long, allow_hyphen_values = true, value_parser = parse_statistics)]
        sigma: Statistics,
        #[arg(long, default_value_t = 2)]
        modes: usize,
        #[arg(long, default_value_t = 4)]
        cutoff: usize,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
    },
    /// Quadratic Casimir of a representation
    Casimir {
        /// Algebra JSON file (so(3) when omitted)
        path: Option<PathBuf>,
        /// Use the so(3) irrep of this 2l instead of the adjoint representation
        #[arg(long = "two-l")]
        two_l: Option<u32>,
    },
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_statistics(s: &str) -> Result<Statistics, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Usage and I/O problems; everything else is reported as a pass/fail verdict.
#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

type Verdict = Result<bool, UsageError>;

fn usage<T>(msg: impl Into<String>) -> Result<T, UsageError> {
    Err(UsageError(msg.into()))
}

struct Ctx {
    tol: Option<f64>,
    seed: u64,
    out: Option<PathBuf>,
}

impl Ctx {
    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    /// Write the table once, to `--out` or stdout.
    fn emit(&self, table: &Table) -> Result<(), UsageError> {
        write_table(self.out.as_deref(), table)
    }
}

fn write_table(path: Option<&Path>, table: &Table) -> Result<(), UsageError> {
    let csv = table.to_csv()?;
    match path {
        Some(p) => std::fs::write(p, csv).map_err(|e| UsageError(format!("{}: {e}", p.display()))),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<LieAlgebra, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    parse_algebra(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn verdict_line(label: &str, ok: bool) -> String {
    format!("{label}: {}", if ok { "ok" } else { "FAILED" })
}

fn cmd_check(ctx: &Ctx, path: &Path) -> Verdict {
    let alg = load(path)?;
    let tol = ctx.tol(1e-10);
    let rep = alg.classify(gq_core::algebra::DEFAULT_RANK_TOL);
    let anti = rep.defects["antisymmetry"];
    let jac = rep.defects["jacobi"];
    println!("algebra: {} (dim {})", alg.name(), alg.dim());
    println!("antisymmetry defect: {}", num(anti));
    println!("jacobi defect: {}", num(jac));
    println!("killing rank: {}", rep.killing_rank);
    println!("derived dim: {}", rep.derived_dim);
    println!("semisimple: {}, center: {}", rep.semisimple, rep.center_dim);
    let moved = alg.random_basis(ctx.seed)?.classify(gq_core::algebra::DEFAULT_RANK_TOL);
    let stable = moved.killing_rank == rep.killing_rank
        && moved.center_dim == rep.center_dim
        && moved.derived_dim == rep.derived_dim
        && moved.semisimple == rep.semisimple;
    println!("{}", verdict_line("classification stable under seeded basis change", stable));
    let ok = anti <= tol && jac <= tol && stable;
    println!("{}", verdict_line(&format!("defects <= {tol:e}"), anti <= tol && jac <= tol));
    Ok(ok)
}

fn cmd_contract(ctx: &Ctx, name: PathName, samples: usize, signature: Signature, modes: usize) -> Verdict {
    if !(2..=MAX_SAMPLES).contains(&samples) {
        return usage(format!("--samples must be in 2..={MAX_SAMPLES}"));
    }
    let path = match name {
        PathName::Segal => segal_path(signature)?,
        PathName::Stime => stime_path(signature)?,
        PathName::Boson => {
            if !(1..=MAX_MODES).contains(&modes) {
                return usage(format!("--modes must be in 1..={MAX_MODES}"));
            }
            boson_path(modes)?
        }
    };
    let tol = ctx.tol(1e-10);
    let rep = path_report(&path, samples)?;
    let worst = rep.max_jacobi();
    println!("path: {} ({} samples)", rep.path, samples);
    println!("max jacobi defect: {}", num(worst));
    println!("{}", verdict_line(&format!("jacobi <= {tol:e}"), worst <= tol));
    ctx.emit(&report::path_table(&rep))?;
    Ok(worst <= tol)
}

fn cmd_oscillator(ctx: &Ctx, two_ls: &[u32], k: usize, hbar: f64) -> Verdict {
    let min = *two_ls.iter().min().ok_or_else(|| UsageError("--two-l is empty".into()))?;
    if two_ls.iter().any(|&t| t > MAX_TWO_L) {
        return usage(format!("--two-l values must be <= {MAX_TWO_L}"));
    }
    if k == 0 || 4 * k > min as usize {
        return usage(format!("need 1 <= k <= min(two_l)/4 (k = {k}, min two_l = {min})"));
    }
    if !(hbar.is_finite() && hbar > 0.0) {
        return usage("--hbar must be positive");
    }
    let rows = two_ls
        .iter()
        .map(|&t| correspondence_table(t, k, hbar))
        .collect::<Result<Vec<_>, _>>()?;
    for r in &rows {
        println!("l = {}: err = {}, spacing = {}", r.l, num(r.err()), num(r.spacing));
    }
    let decreasing = rows.windows(2).all(|w| w[1].err() < w[0].err());
    println!("{}", verdict_line("error decreasing in l", decreasing));
    ctx.emit(&report::correspondence_table(&rows))?;
    Ok(decreasing)
}

fn cmd_stime(ctx: &Ctx, ks: &[usize], signature: Signature, residuals: Option<&Path>, mass: f64) -> Verdict {
    if ks.is_empty() || ks.iter().any(|&k| k == 0 || k > MAX_STIME_K) {
        return usage(format!("--k values must be in 1..={MAX_STIME_K}"));
    }
    let tol = ctx.tol(1e-10);
    let mut ok = true;
    let mut lambda = Vec::new();
    let mut residual_rows = Vec::new();
    for &k in ks {
        let qc = QuantumConstants::stime(k as u32, 1.0, 1.0, 1.0);
        let ops = stime_operators(signature, RepKind::SymPower(k), &qc)?;
        let rows = residuals_vs_singular(&ops);
        let exact_ok = rows
            .iter()
            .filter(|r| r.order == LeadingOrder::Exact)
            .all(|r| r.norm <= tol);
        println!("k = {k}: exact relations {}", if exact_ok { "ok" } else { "FAILED" });
        ok &= exact_ok;
        residual_rows.extend(rows.into_iter().map(|mut r| {
            r.relation = format!("{}@k={k}", r.relation);
            r
        }));
        let nl = n_vs_lx(&ops)?;
        println!("k = {k}: N = {}, l_X = {}", num(nl.n), nl.l_x);
        if signature.is_compact() {
            let l2 = lambda2_check(&ops)?;
            println!(
                "k = {k}: lambda2 = {}, target = {}, ratio = {}, cross-term = {} (relative {})",
                num(l2.value),
                num(l2.target),
                num(l2.ratio),
                num(l2.cross_term),
                num(l2.cross_relative)
            );
            lambda.push(l2);
            let w = wave_residuals(&ops, mass);
            println!("k = {k}: wave ordering residual = {}, frozen-i residual = {}", num(w.ordering), num(w.frozen));
            if ops.sector_dim().is_some_and(|d| d <= DENSE_WAVE_DIM) {
                let a = wave_operator(&ops, mass)?;
                let anti = linalg::anti_hermitian_defect(&a) <= tol * linalg::max_abs(&a).max(f64::MIN_POSITIVE);
                println!("k = {k}: {}", verdict_line("wave operator anti-Hermitian", anti));
                ok &= anti;
                let comm = commuting_set(&ops)?;
                let commute = comm.max_commutator <= tol;
                println!("k = {k}: {}", verdict_line("{L[0,X], L[1,Y], L[2,3]} commute", commute));
                ok &= commute;
            }
        }
    }
    let dims = dimension_cross_check(4)?;
    println!(
        "simplified dimension (N_x = 4): {}, orthogonal axes: {}, consistent: {}",
        dims.simplified_dimension, dims.io_axes, dims.consistent
    );
    if lambda.len() >= 2 {
        let mono = monotone_toward_one(&lambda);
        println!("{}", verdict_line("lambda2 ratio monotone toward 1", mono));
        ok &= mono;
    }
    if let Some(p) = residuals {
        write_table(Some(p), &report::residual_table(&residual_rows))?;
    }
    if signature.is_compact() {
        ctx.emit(&report::lambda2_table(&lambda))?;
    } else {
        println!("lambda2 needs compact signature; writing residuals instead");
        ctx.emit(&report::residual_table(&residual_rows))?;
    }
    Ok(ok)
}

fn index_tuples(modes: usize, len: usize) -> Vec<Vec<usize>> {
    (0..modes.pow(len as u32))
        .map(|mut code| {
            let mut t = vec![0; len];
            for slot in t.iter_mut().rev() {
                *slot = code % modes;
                code /= modes;
            }
            t
        })
        .collect()
}

fn cmd_quantify(ctx: &Ctx, stats: Statistics, modes: usize, cutoff: usize, hbar: f64) -> Verdict {
    if !(1..=MAX_MODES).contains(&modes) {
        return usage(format!("--modes must be in 1..={MAX_MODES}"));
    }
    if !(1..=MAX_CUTOFF).contains(&cutoff) {
        return usage(format!("--cutoff must be in 1..={MAX_CUTOFF}"));
    }
    let sys = quantify(stats, modes, cutoff, hbar)?;
    let default_tol = if stats == Statistics::Fermi { 1e-13 } else { 1e-12 };
    let tol = ctx.tol(default_tol);
    let d = relation_defects(&sys);
    println!("statistics {stats}, modes {modes}, space dimension {}", sys.space_dim());
    println!(
        "relation defects: mixed {}, annihilators {}, creators {}",
        num(d.mixed),
        num(d.annihilators),
        num(d.creators)
    );
    let mut ok = d.max() <= tol;
    println!("{}", verdict_line(&format!("relations <= {tol:e}"), ok));

    if stats != Statistics::Maxwell && sys.space_dim() <= 1024 {
        // a seeded Hermitian one-quantum operator lifts to a number-conserving one
        let g = linalg::seeded_well_conditioned(modes, f64::INFINITY, ctx.seed);
        let a1 = linalg::to_complex(&(&g + g.transpose()));
        let lifted = quantified_action(&sys, &a1)?;
        let drift = linalg::max_abs(&linalg::commutator(&lifted, &sys.number_operator()));
        let conserving = drift <= 1e-10 * linalg::max_abs(&lifted).max(1.0);
        println!("{}", verdict_line("lifted operator conserves number", conserving));
        ok &= conserving;
    }

    let mut table = Table::new(&["sigma", "cutoff", "indices", "re", "im"]);
    let lens: &[usize] = if modes <= 6 { &[2, 4] } else { &[2] };
    let cut = sys.cutoff.map_or_else(|| "none".to_string(), |c| c.to_string());
    for &len in lens {
        for idx in index_tuples(modes, len) {
            let g = green_function(&sys, &idx)?;
            let label = idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
            table.push(vec![stats.to_string(), cut.clone(), label, num(g.re), num(g.im)]);
        }
    }
    ctx.emit(&table)?;
    Ok(ok)
}

fn cmd_casimir(ctx: &Ctx, path: Option<&Path>, two_l: Option<u32>) -> Verdict {
    if two_l.is_some_and(|t| t > MAX_TWO_L) {
        return usage(format!("--two-l must be <= {MAX_TWO_L}"));
    }
    let alg = match path {
        Some(p) => load(p)?,
        None => catalog::so3(),
    };
    let rep: Representation = match (path, two_l) {
        (_, Some(t)) => {
            if alg.dim() != 3 {
                return usage(format!("--two-l needs a three-dimensional algebra, got dim {}", alg.dim()));
            }
            Representation::new(Arc::new(alg.clone()), so3_irrep(t).matrices().to_vec())?
        }
        (Some(_), None) => adjoint_rep(&alg),
        (None, None) => so3_irrep(2),
    };
    let tol = ctx.tol(1e-8);
    let defect = rep_defect(&rep);
    println!("algebra: {}, representation dimension {}", alg.name(), rep.dim_rep());
    println!("representation defect: {}", num(defect));
    let mut ok = defect <= tol;
    let cas = match quadratic_casimir(&rep) {
        Ok(c) => c,
        Err(e @ Error::SingularKilling { .. }) => {
            println!("{e}");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    let central = centrality_defect(&rep, &cas);
    println!("centrality defect: {}", num(central));
    ok &= central <= tol;
    let gap = conjugation_gap(&rep, ctx.seed, 10)?;
    println!("char-poly conjugation gap (10 seeded trials): {}", num(gap));
    let eig = spectrum(&cas, false)?;
    println!("casimir eigenvalues in [{}, {}]", num(eig.min), num(eig.max));
    println!("{}", verdict_line(&format!("defects <= {tol:e}"), ok));
    let mut table = Table::new(&["index", "casimir_eigenvalue"]);
    for (i, e) in eig.eigenvalues.iter().enumerate() {
        table.push(vec![i.to_string(), num(*e)]);
    }
    ctx.emit(&table)?;
    Ok(ok)
}

fn run(cli: Cli) -> Verdict {
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t >= 0.0) {
            return usage(format!("tolerance must be a non-negative number, got {t}"));
        }
    }
    let ctx = Ctx {
        tol: cli.tol,
        seed: cli.seed,
        out: cli.out,
    };
    match cli.command {
        Command::Check { path } => cmd_check(&ctx, &path),
        Command::Contract {
            path,
            samples,
            signature,
            modes,
        } => cmd_contract(&ctx, path, samples, signature, modes),
        Command::Oscillator { two_l, k, hbar } => cmd_oscillator(&ctx, &two_l, k, hbar),
        Command::Stime {
            k,
            signature,
            residuals,
            mass,
        } => cmd_stime(&ctx, &k, signature, residuals.as_deref(), mass),
        Command::Quantify {
            sigma,
            modes,
            cutoff,
            hbar,
        } => cmd_quantify(&ctx, sigma, modes, cutoff, hbar),
        Command::Casimir { path, two_l } => cmd_casimir(&ctx, path.as_deref(), two_l),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
