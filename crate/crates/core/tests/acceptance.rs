//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use gq_core::algebra::catalog;
use gq_core::homotopy::{boson_path, path_report, segal_path, stime_path};
use gq_core::linalg::{self, c, CMatrix};
use gq_core::quantify::{green_function, quantified_action, quantify, relation_defects, simplified_boson, Statistics};
use gq_core::representations::{
    char_poly_invariants, correspondence_table, defining_rep, quadratic_casimir, rep_defect, simplified_oscillator,
    so3_irrep, sym_power_rep, QuantumConstants, RepKind, Representation,
};
use gq_core::stime::{lambda2_sweep, lie15_with, monotone_toward_one, residual_scaling};
use gq_core::{structure_distance, Signature};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SIGNATURES: [Signature; 3] = [Signature::Compact, Signature::Minkowski, Signature::Split];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn c1_dimension_law() -> Outcome {
    let mut worst = 0.0_f64;
    for two_l in 0..=80u32 {
        let rep = so3_irrep(two_l);
        if rep.dim_rep() != two_l as usize + 1 {
            return outcome(false, format!("dim {} for two_l = {two_l}", rep.dim_rep()));
        }
        worst = worst.max(rep_defect(&rep));
    }
    outcome(worst <= 1e-12, format!("dims 2l+1 for two_l 0..=80, max rep_defect {worst:.3e}"))
}

fn c2_contraction_endpoints() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for sig in [Signature::Compact, Signature::Split] {
        let path = segal_path(sig).unwrap();
        let d = structure_distance(&path.evaluate(0.0).unwrap(), &catalog::heisenberg()).unwrap();
        let rep = path_report(&path, 9).unwrap();
        let ranks: Vec<usize> = rep.rows.iter().map(|r| r.killing_rank).collect();
        let jump = ranks[0] == 0 && ranks[1..].iter().all(|&r| r == 3);
        ok &= d == 0.0 && jump;
        notes.push(format!("segal({sig}) d={d} ranks {ranks:?}"));
    }
    for sig in SIGNATURES {
        let path = stime_path(sig).unwrap();
        let end = path.evaluate(0.0).unwrap().relabel("r", "i").unwrap();
        let d = structure_distance(&end, &lie15_with(sig)).unwrap();
        let rep = path_report(&path, 5).unwrap();
        let rank_pos = rep.rows[1..].iter().all(|r| r.killing_rank == 15);
        ok &= d == 0.0 && rank_pos && rep.rows[0].killing_rank < 15;
        notes.push(format!("stime({sig}) d={d} rank(0)={} rank(s>0)=15:{rank_pos}", rep.rows[0].killing_rank));
    }
    outcome(ok, notes.join("; "))
}

fn c3_jacobi_along_paths() -> Outcome {
    let mut worst = 0.0_f64;
    let mut paths = vec![segal_path(Signature::Compact).unwrap(), segal_path(Signature::Split).unwrap()];
    paths.extend(SIGNATURES.iter().map(|&s| stime_path(s).unwrap()));
    paths.extend((1..=3).map(|n| boson_path(n).unwrap()));
    for p in &paths {
        let r = path_report(p, 33).unwrap();
        assert_eq!(r.rows.len(), 33);
        worst = worst.max(r.max_jacobi());
    }
    outcome(worst <= 1e-10, format!("{} paths × 33 samples, max Jacobi defect {worst:.3e}", paths.len()))
}

fn c4_ccr_exactness() -> Outcome {
    let mut osc = 0.0_f64;
    for two_l in 2..=40u32 {
        let qc = QuantumConstants::oscillator(two_l, 1.0);
        let o = simplified_oscillator(&qc).unwrap();
        let d = linalg::commutator(&o.q, &o.p) - &o.r * c(qc.delta_q * qc.delta_p / qc.delta_r);
        osc = osc.max(linalg::max_abs(&d));
    }
    let mut boson = 0.0_f64;
    for n in 1..=6 {
        for (kind, two_l) in [(RepKind::Defining, 2), (RepKind::SymPower(2), 4)] {
            let qc = QuantumConstants::oscillator(two_l, 1.0);
            boson = boson.max(simplified_boson(n, &qc, kind).unwrap().ccr_defect());
        }
    }
    outcome(
        osc <= 1e-12 && boson <= 1e-12,
        format!("oscillator two_l 2..=40 max {osc:.3e}; boson N<=6 defining+sym2 max {boson:.3e}"),
    )
}

fn c5_correspondence() -> Outcome {
    let errs: Vec<f64> = [16u32, 32, 64, 128]
        .iter()
        .map(|&l| correspondence_table(2 * l, 4, 1.0).unwrap().err())
        .collect();
    let decreasing = errs.windows(2).all(|w| w[1] < w[0]);
    let ratio = errs[3] / errs[2];
    outcome(
        decreasing && (0.35..=0.65).contains(&ratio),
        format!("err(l=16,32,64,128) = {errs:?}, err(128)/err(64) = {ratio:.4}"),
    )
}

fn c6_vacuum_energy() -> Outcome {
    let mut worst = 0.0_f64;
    for hbar in [1.0, 0.37] {
        for two_l in 2..=120u32 {
            let o = simplified_oscillator(&QuantumConstants::oscillator(two_l, hbar)).unwrap();
            worst = worst.max((o.energy(&o.vacuum()) - hbar).abs());
        }
    }
    outcome(worst <= 1e-12, format!("two_l 2..=120, hbar in {{1, 0.37}}: max |E - hbar| {worst:.3e}"))
}

fn random_coeffs(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-scale..=scale)).collect()
}

fn coeff_gap(a: &[Complex64], b: &[Complex64]) -> f64 {
    let scale = a.iter().map(|z| z.norm()).fold(1.0, f64::max);
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max) / scale
}

fn c7_casimir_behaviour() -> Outcome {
    // (a) scalar on irreducible blocks
    let mut scalar = 0.0_f64;
    let mut irreps: Vec<Representation> = (0..=20).map(so3_irrep).collect();
    irreps.push(defining_rep(6, 0).unwrap());
    irreps.push(defining_rep(5, 0).unwrap());
    irreps.push(defining_rep(5, 1).unwrap());
    irreps.push(defining_rep(3, 3).unwrap());
    for rep in &irreps {
        let cas = quadratic_casimir(rep).unwrap();
        let d = rep.dim_rep();
        let mean = (0..d).map(|i| cas[(i, i)]).sum::<Complex64>() / d as f64;
        scalar = scalar.max(linalg::max_abs(&(&cas - CMatrix::identity(d, d) * mean)));
    }

    // (b) invariance under 10 seeded conjugations, both by random invertible
    // matrices and by group elements exp(R(Y)) acting through Ad on coefficients
    let mut conj = 0.0_f64;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let reps = [defining_rep(6, 0).unwrap(), so3_irrep(4), defining_rep(5, 1).unwrap()];
    for rep in &reps {
        let n = rep.algebra().dim();
        let ad = rep.algebra().adjoint_matrices();
        for _ in 0..10 {
            let x = random_coeffs(&mut rng, n, 1.0);
            let base = char_poly_invariants(rep, &x).unwrap();
            let g = linalg::to_complex(&linalg::random_well_conditioned(rep.dim_rep(), 10.0, &mut rng));
            let gi = g.clone().try_inverse().unwrap();
            let l = rep.element(&x).unwrap();
            let moved = linalg::poly_from_roots(&linalg::eigenvalues(&(&g * l * gi)));
            conj = conj.max(coeff_gap(&base, &moved));
            let y = random_coeffs(&mut rng, n, 0.5);
            let ad_y = y.iter().zip(&ad).fold(DMatrix::zeros(n, n), |acc, (w, m)| acc + m * *w);
            let x2: Vec<f64> = (ad_y.exp() * nalgebra::DVector::from_vec(x.clone())).iter().copied().collect();
            conj = conj.max(coeff_gap(&base, &char_poly_invariants(rep, &x2).unwrap()));
        }
    }

    // (c) odd invariants vanish on orthogonal representations
    let mut odd = 0.0_f64;
    let so6 = defining_rep(6, 0).unwrap();
    let orth = [
        so6.clone(),
        defining_rep(5, 0).unwrap(),
        defining_rep(5, 1).unwrap(),
        defining_rep(3, 3).unwrap(),
        sym_power_rep(&so6, 2).unwrap(),
    ];
    for rep in &orth {
        let d = rep.dim_rep();
        for _ in 0..10 {
            let x = random_coeffs(&mut rng, rep.algebra().dim(), 0.5);
            let cp = char_poly_invariants(rep, &x).unwrap();
            // odd-degree invariants multiply z^(d - n), n odd
            for n in (1..=d).step_by(2) {
                odd = odd.max(cp[d - n].norm());
            }
        }
    }
    outcome(
        scalar <= 1e-8 && conj <= 1e-7 && odd <= 1e-8,
        format!("scalar defect {scalar:.3e}; conjugation gap {conj:.3e}; max odd C_n {odd:.3e}"),
    )
}

fn c8_lambda2() -> Outcome {
    let start = Instant::now();
    let (reports, fitted_c) = lambda2_sweep(&[2, 4, 8, 16], 1.0).unwrap();
    let monotone = monotone_toward_one(&reports);
    let worst_cross = reports.iter().map(|r| r.cross_relative).fold(0.0, f64::max);
    let ratios: Vec<f64> = reports.iter().map(|r| r.ratio).collect();
    let cross: Vec<f64> = reports.iter().map(|r| r.cross_term).collect();
    outcome(
        monotone && worst_cross <= 1e-9,
        format!(
            "ratios {ratios:.6?} monotone={monotone}, C={fitted_c:.4}; cross-terms {cross:?} (max relative {worst_cross:.3e}, need <= 1e-9); {:.2}s",
            start.elapsed().as_secs_f64()
        ),
    )
}

fn all_occupation_sums(eigs: &[f64], cutoff: usize, max_per_mode: usize) -> Vec<f64> {
    fn rec(eigs: &[f64], left: usize, max_per_mode: usize, acc: f64, out: &mut Vec<f64>) {
        match eigs.split_first() {
            None => out.push(acc),
            Some((&e, rest)) => {
                for n in 0..=left.min(max_per_mode) {
                    rec(rest, left - n, max_per_mode, acc + n as f64 * e, out);
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(eigs, cutoff, max_per_mode, 0.0, &mut out);
    out.sort_by(f64::total_cmp);
    out
}

fn c9_quantification() -> Outcome {
    let fermi = (1..=10)
        .map(|d| relation_defects(&quantify(Statistics::Fermi, d, 0, 1.0).unwrap()).max())
        .fold(0.0, f64::max);
    let mut bose = 0.0_f64;
    for d in 1..=3 {
        for cutoff in 1..=6 {
            bose = bose.max(relation_defects(&quantify(Statistics::Bose, d, cutoff, 1.0).unwrap()).max());
        }
    }

    let mut wick = 0.0_f64;
    for cutoff in [4, 6] {
        let sys = quantify(Statistics::Bose, 2, cutoff, 0.7).unwrap();
        let g2 = |a: usize, b: usize| green_function(&sys, &[a, b]).unwrap();
        for idx in 0..16usize {
            let (i, j, k, l) = (idx >> 3 & 1, idx >> 2 & 1, idx >> 1 & 1, idx & 1);
            let g4 = green_function(&sys, &[i, j, k, l]).unwrap();
            let pairs = g2(i, j) * g2(k, l) + g2(i, k) * g2(j, l) + g2(i, l) * g2(j, k);
            wick = wick.max((g4 - pairs).norm());
        }
    }

    let mut eig = 0.0_f64;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 1..=3 {
        let raw = CMatrix::from_fn(d, d, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        let a1 = (&raw + raw.adjoint()) * c(0.5);
        let eigs = linalg::hermitian_eigenvalues(&a1);
        for cutoff in 1..=3 {
            for (stats, per_mode) in [(Statistics::Bose, cutoff), (Statistics::Fermi, 1)] {
                let sys = quantify(stats, d, cutoff, 1.0).unwrap();
                let lifted = linalg::hermitian_eigenvalues(&quantified_action(&sys, &a1).unwrap());
                let cap = if stats == Statistics::Fermi { d } else { cutoff };
                let oracle = all_occupation_sums(&eigs, cap, per_mode);
                if oracle.len() != lifted.len() {
                    return outcome(false, format!("spectrum size {} vs oracle {}", lifted.len(), oracle.len()));
                }
                eig = lifted.iter().zip(&oracle).fold(eig, |w, (a, b)| w.max((a - b).abs()));
            }
        }
    }
    outcome(
        fermi <= 1e-13 && bose <= 1e-12 && wick <= 1e-9 && eig <= 1e-9,
        format!("fermi d<=10 {fermi:.3e}; bose below cutoff {bose:.3e}; Wick {wick:.3e}; action spectra {eig:.3e}"),
    )
}

fn c10_residual_scaling() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for sig in SIGNATURES {
        for fit in residual_scaling(sig, 8, 4, 1.0).unwrap() {
            let m = fit.matches(0.05);
            ok &= m;
            if !fit.fitted_order.is_nan() && sig == Signature::Compact {
                notes.push(format!("{} slope {:.4}", fit.relation, fit.fitted_order));
            }
            if !m {
                notes.push(format!("{sig} {} mismatch", fit.relation));
            }
        }
    }
    outcome(ok, format!("3 signatures × 9 relations; {}", notes.join(", ")))
}

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn gq(args: &[&str]) -> std::process::Output {
    let cargo = option_env!("CARGO").unwrap_or("cargo");
    Command::new(cargo)
        .current_dir(workspace_root())
        .args(["run", "--quiet", "-p", "gq-cli", "--bin", "gq", "--"])
        .args(args)
        .env_remove("GQ_TOL")
        .output()
        .expect("cargo runs")
}

fn c11_cli_contract() -> Outcome {
    let dir = std::env::temp_dir().join(format!("gq-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let mut notes = Vec::new();
    let mut ok = true;

    let runs: [(&str, Vec<&str>); 3] = [
        ("contract", vec!["contract", "--path", "segal", "--samples", "9"]),
        ("oscillator", vec!["oscillator", "--two-l", "32,64,128,256", "--k", "4"]),
        ("quantify", vec!["quantify", "--sigma", "+", "--modes", "2", "--cutoff", "4", "--seed", "3"]),
    ];
    for (name, args) in &runs {
        let (a, b) = (p(&format!("{name}-1.csv")), p(&format!("{name}-2.csv")));
        let ea = gq(&[args.as_slice(), &["--out", &a]].concat()).status.code();
        let eb = gq(&[args.as_slice(), &["--out", &b]].concat()).status.code();
        let same = std::fs::read(&a).ok().zip(std::fs::read(&b).ok()).is_some_and(|(x, y)| x == y && !x.is_empty());
        ok &= same && ea == Some(0) && eb == Some(0);
        notes.push(format!("{name}: identical={same} exits {ea:?}/{eb:?}"));
    }

    let bad = p("malformed.json");
    std::fs::write(&bad, "{ \"name\": \"x\", \"basis\": [\"a\", ").unwrap();
    let code = gq(&["check", &bad]).status.code();
    ok &= code == Some(2);
    notes.push(format!("malformed -> {code:?}"));

    // [a, b] = a, [a, c] = b violates Jacobi by one unit
    let broken = p("broken.json");
    std::fs::write(
        &broken,
        r#"{"name": "broken", "basis": ["a", "b", "c"], "brackets": [["a", "b", [["a", 1.0]]], ["a", "c", [["b", 1.0]]]]}"#,
    )
    .unwrap();
    let code = gq(&["check", &broken, "--tol", "1e-3"]).status.code();
    ok &= code == Some(1);
    notes.push(format!("violated tolerance -> {code:?}"));
    let _ = std::fs::remove_dir_all(&dir);
    outcome(ok, notes.join("; "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("dimension law", c1_dimension_law),
        ("contraction endpoints", c2_contraction_endpoints),
        ("Jacobi along paths", c3_jacobi_along_paths),
        ("simplified CCR exactness", c4_ccr_exactness),
        ("correspondence convergence", c5_correspondence),
        ("extreme-weight energy", c6_vacuum_energy),
        ("Casimir behaviour", c7_casimir_behaviour),
        ("Lambda2 identity", c8_lambda2),
        ("quantification relations", c9_quantification),
        ("residual scaling", c10_residual_scaling),
        ("CLI determinism and exit codes", c11_cli_contract),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        if !filter.is_empty() && !filter.iter().any(|x| x == &n.to_string()) {
            continue;
        }
        let o = f();
        if !o.pass {
            failed += 1;
        }
        println!("criterion {n:>2} [{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
