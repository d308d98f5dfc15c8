//! Space-time operators from the orthogonal algebra on axes `0, 1, 2, 3, X, Y`.
//!
//! Dictionary: `x^μ = δx η^μμ L[μ,X]`, `p_μ = δp L[Y,μ]`, `r = δr L[X,Y]`,
//! `î = L[X,Y] / l`. Representations are symmetric powers `Sym^k` of the
//! six-dimensional one, handled matrix-free: every operator is the lift
//! `dΓ(A)` of a one-quantum matrix `A`, applied to sparse occupation states in
//! the modes `0, 1, 2, 3, w+, w-` with `w± = (e_X ∓ i e_Y)/√2` (so `i L[X,Y]`
//! is diagonal and the vacuum is `k` quanta in `w+`).

use crate::algebra::{make_algebra, LieAlgebra};
use crate::error::{Error, Result};
use crate::fock::{self, FockVector, Occupation};
use crate::linalg::{self, c, CMatrix, I};
use crate::orthogonal::{OrthogonalFrame, Signature};
use crate::representations::{spectrum, QuantumConstants, RepKind, DEFAULT_DIM_CAP};

const X: usize = 4;
const Y: usize = 5;
const WPLUS: usize = 4;
const WMINUS: usize = 5;

/// Tolerance for rows declared exact.
pub const EXACT_TOL: f64 = 1e-12;

/// The singular space-time algebra with `[x^ν, p_μ] = δ^ν_μ i`, Lorentz action on
/// `x` and `p`, `[x, x] = [p, p] = 0` and `i` central; Minkowski metric.
pub fn lie15() -> LieAlgebra {
    lie15_with(Signature::Minkowski)
}

/// The same algebra with the metric on axes `0..3` taken from `signature`.
pub fn lie15_with(signature: Signature) -> LieAlgebra {
    let eta: Vec<f64> = signature.metric6()[..4].to_vec();
    let f4 = OrthogonalFrame::new(&["0", "1", "2", "3"], &eta).expect("valid frame");
    let lorentz = f4.algebra("lorentz");
    let xl = |m: usize| format!("x{m}");
    let pl = |m: usize| format!("p{m}");
    let ll = |a: usize, b: usize| f4.label(a, b);
    let mut basis: Vec<String> = (0..4).map(xl).collect();
    basis.extend((0..4).map(pl));
    basis.extend(f4.labels());
    basis.push("i".into());

    let mut entries: Vec<(String, String, String, f64)> = Vec::new();
    for nu in 0..4 {
        entries.push((xl(nu), pl(nu), "i".into(), 1.0));
    }
    for &(al, be) in f4.pairs() {
        for nu in 0..4 {
            // [x^ν, L_αβ] = δ^ν_α x_β - δ^ν_β x_α
            if nu == al {
                entries.push((xl(nu), ll(al, be), xl(be), eta[be]));
            }
            if nu == be {
                entries.push((xl(nu), ll(al, be), xl(al), -eta[al]));
            }
            // [p_μ, L_αβ] = η_μα p_β - η_μβ p_α
            if nu == al {
                entries.push((pl(nu), ll(al, be), pl(be), eta[al]));
            }
            if nu == be {
                entries.push((pl(nu), ll(al, be), pl(al), -eta[be]));
            }
        }
    }
    let n = lorentz.dim();
    for a in 0..n {
        for b in (a + 1)..n {
            for k in 0..n {
                let v = lorentz.c(a, b, k);
                if v != 0.0 {
                    let lb = lorentz.basis();
                    entries.push((lb[a].clone(), lb[b].clone(), lb[k].clone(), v));
                }
            }
        }
    }
    make_algebra(&format!("lie15({signature})"), &basis, &entries).expect("consistent brackets")
}

/// One-quantum matrices of the named operators in the rotated mode basis, plus
/// the quantum constants and the symmetric power `k` they act on.
#[derive(Debug, Clone)]
pub struct StimeOperators {
    pub signature: Signature,
    pub kind: RepKind,
    pub qc: QuantumConstants,
    frame: OrthogonalFrame,
    /// all 15 generators `L[a,b]`, frame order
    gens: Vec<CMatrix>,
    /// `x̂^μ`
    pub x: Vec<CMatrix>,
    /// `p̂_μ`
    pub p: Vec<CMatrix>,
    /// `L̂[μ,ν]`, `μ < ν`, lexicographic
    pub l: Vec<CMatrix>,
    pub r: CMatrix,
    pub i: CMatrix,
    pub l_xy: CMatrix,
}

pub fn stime_operators(signature: Signature, kind: RepKind, qc: &QuantumConstants) -> Result<StimeOperators> {
    let k = kind.extreme_weight();
    match qc.l_x {
        Some(lx) if lx as usize == k => {}
        Some(lx) => {
            return Err(Error::Constraint(format!(
                "constants built for l_X = {lx} but the representation has l_X = {k}"
            )))
        }
        None => return Err(Error::Constraint("space-time constants need l_X".into())),
    }
    qc.validate()?;
    let frame = OrthogonalFrame::six(signature);
    let eta = frame.metric().to_vec();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut u = CMatrix::zeros(6, 6);
    for m in 0..4 {
        u[(m, m)] = c(1.0);
    }
    u[(X, WPLUS)] = c(s);
    u[(Y, WPLUS)] = -I * s;
    u[(X, WMINUS)] = c(s);
    u[(Y, WMINUS)] = I * s;
    let ud = u.adjoint();
    let rot = |a: usize, b: usize| &ud * linalg::to_complex(&frame.defining_matrix(a, b)) * &u;
    let gens: Vec<CMatrix> = frame.pairs().iter().map(|&(a, b)| rot(a, b)).collect();
    let x = (0..4).map(|m| rot(m, X) * c(qc.delta_x * eta[m])).collect();
    let p = (0..4).map(|m| rot(Y, m) * c(qc.delta_p)).collect();
    let mut l = Vec::with_capacity(6);
    for a in 0..4 {
        for b in (a + 1)..4 {
            l.push(rot(a, b));
        }
    }
    let l_xy = rot(X, Y);
    Ok(StimeOperators {
        signature,
        kind,
        qc: *qc,
        frame,
        gens,
        x,
        p,
        l,
        r: &l_xy * c(qc.delta_r),
        i: &l_xy * c(1.0 / k as f64),
        l_xy,
    })
}

impl StimeOperators {
    pub fn k(&self) -> usize {
        self.kind.extreme_weight()
    }

    pub fn frame(&self) -> &OrthogonalFrame {
        &self.frame
    }

    /// One-quantum matrix of `L_ab` for arbitrary ordered axes.
    pub fn generator(&self, a: usize, b: usize) -> CMatrix {
        match self.frame.index(a, b) {
            Some((idx, s)) => &self.gens[idx] * c(s),
            None => CMatrix::zeros(6, 6),
        }
    }

    /// `L̂[μ,ν]` for any ordered space-time axes.
    pub fn lorentz(&self, mu: usize, nu: usize) -> CMatrix {
        self.generator(mu, nu)
    }

    pub fn apply(&self, one: &CMatrix, v: &FockVector) -> FockVector {
        fock::lift_apply(one, v)
    }

    /// `[dΓ(A), dΓ(B)] v`
    pub fn commutator_apply(&self, a: &CMatrix, b: &CMatrix, v: &FockVector) -> FockVector {
        fock::lift_apply(a, &fock::lift_apply(b, v)).sub(&fock::lift_apply(b, &fock::lift_apply(a, v)))
    }

    fn vacuum_occupation(&self) -> Occupation {
        let mut occ = vec![0u32; 6];
        occ[WPLUS] = self.k() as u32;
        occ
    }

    /// Extreme-weight vector: eigenvalue `l` of `i L[X,Y]`.
    pub fn vacuum(&self) -> FockVector {
        FockVector::basis(self.vacuum_occupation())
    }

    /// The vacuum and the states with one quantum moved out of `w+`.
    pub fn window(&self) -> Vec<FockVector> {
        let vac = self.vacuum_occupation();
        let mut out = vec![FockVector::basis(vac.clone())];
        for j in [0, 1, 2, 3, WMINUS] {
            let mut occ = vac.clone();
            occ[WPLUS] -= 1;
            occ[j] += 1;
            out.push(FockVector::basis(occ));
        }
        out
    }

    pub fn sector_dim(&self) -> Option<usize> {
        fock::sym_power_dim(6, self.k())
    }

    pub fn sector_basis(&self, cap: usize) -> Result<Vec<Occupation>> {
        fock::check_cap(self.sector_dim(), cap)?;
        Ok(fock::occupations_exact(6, self.k()))
    }

    /// Dense matrix of `dΓ(one)` on the whole `Sym^k` sector.
    pub fn dense(&self, one: &CMatrix) -> Result<CMatrix> {
        self.dense_capped(one, DEFAULT_DIM_CAP)
    }

    pub fn dense_capped(&self, one: &CMatrix, cap: usize) -> Result<CMatrix> {
        let basis = self.sector_basis(cap)?;
        Ok(fock::lift_matrix(one, &basis, &fock::index_of(&basis)))
    }

    /// Position of the vacuum in [`StimeOperators::sector_basis`].
    pub fn dense_vacuum_index(&self) -> usize {
        // occupations are enumerated with earlier modes filled first
        fock::occupations_exact(6, self.k())
            .iter()
            .position(|o| *o == self.vacuum_occupation())
            .expect("vacuum is in the sector")
    }
}

/// Declared leading behaviour of a residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LeadingOrder {
    Exact,
    DeltaX(f64),
    DeltaP(f64),
    InverseL(f64),
}

impl LeadingOrder {
    pub fn exponent(self) -> f64 {
        match self {
            LeadingOrder::Exact => 0.0,
            LeadingOrder::DeltaX(e) | LeadingOrder::DeltaP(e) | LeadingOrder::InverseL(e) => e,
        }
    }

    pub fn parameter_name(self) -> &'static str {
        match self {
            LeadingOrder::Exact => "none",
            LeadingOrder::DeltaX(_) => "delta_x",
            LeadingOrder::DeltaP(_) => "delta_p",
            LeadingOrder::InverseL(_) => "1/l",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualRow {
    pub relation: String,
    pub norm: f64,
    /// value of the small parameter of `order` (0 for exact rows)
    pub small_param: f64,
    pub order: LeadingOrder,
}

fn max_norm<F: Fn(&FockVector) -> FockVector>(window: &[FockVector], f: F) -> f64 {
    window.iter().map(|v| f(v).norm()).fold(0.0, f64::max)
}

/// Residual of each singular relation on the extreme-weight window, with `î`
/// frozen at its extreme value (`i î = 1`). The `[x, p]` row is relative to
/// the frozen right-hand side `l_X δx δp`.
pub fn residuals_vs_singular(ops: &StimeOperators) -> Vec<ResidualRow> {
    let w = ops.window();
    let eta = ops.frame.metric().to_vec();
    let qc = &ops.qc;
    let k = ops.k() as f64;
    let mut rows = Vec::new();
    let mut push = |relation: &str, norm: f64, order: LeadingOrder| {
        let small_param = match order {
            LeadingOrder::Exact => 0.0,
            LeadingOrder::DeltaX(_) => qc.delta_x,
            LeadingOrder::DeltaP(_) => qc.delta_p,
            LeadingOrder::InverseL(_) => 1.0 / k,
        };
        rows.push(ResidualRow {
            relation: relation.to_string(),
            norm,
            small_param,
            order,
        });
    };
    let pairs4: Vec<(usize, usize)> = (0..4).flat_map(|a| ((a + 1)..4).map(move |b| (a, b))).collect();

    let mut xx = 0.0_f64;
    let mut pp = 0.0_f64;
    for &(a, b) in &pairs4 {
        xx = xx.max(max_norm(&w, |v| ops.commutator_apply(&ops.x[a], &ops.x[b], v)));
        pp = pp.max(max_norm(&w, |v| ops.commutator_apply(&ops.p[a], &ops.p[b], v)));
    }
    push("[x,x]", xx, LeadingOrder::DeltaX(2.0));
    push("[p,p]", pp, LeadingOrder::DeltaP(2.0));

    // [x^ν, p_μ] = δ^ν_μ (l_X δx δp) î, î -> -i
    let scale = k * qc.delta_x * qc.delta_p;
    let mut xp = 0.0_f64;
    for nu in 0..4 {
        for mu in 0..4 {
            let frozen = if nu == mu { -I * scale } else { c(0.0) };
            xp = xp.max(max_norm(&w, |v| {
                let mut out = ops.commutator_apply(&ops.x[nu], &ops.p[mu], v);
                out.add_scaled(v, -frozen);
                out
            }));
        }
    }
    push("[x,p]", xp / scale, LeadingOrder::InverseL(1.0));

    let mut xl = 0.0_f64;
    let mut pl = 0.0_f64;
    for &(al, be) in &pairs4 {
        let lab = ops.lorentz(al, be);
        for nu in 0..4 {
            let mut rhs_x = CMatrix::zeros(6, 6);
            let mut rhs_p = CMatrix::zeros(6, 6);
            if nu == al {
                rhs_x += &ops.x[be] * c(eta[be]);
                rhs_p += &ops.p[be] * c(eta[al]);
            }
            if nu == be {
                rhs_x -= &ops.x[al] * c(eta[al]);
                rhs_p -= &ops.p[al] * c(eta[be]);
            }
            xl = xl.max(max_norm(&w, |v| {
                ops.commutator_apply(&ops.x[nu], &lab, v).sub(&ops.apply(&rhs_x, v))
            }));
            pl = pl.max(max_norm(&w, |v| {
                ops.commutator_apply(&ops.p[nu], &lab, v).sub(&ops.apply(&rhs_p, v))
            }));
        }
    }
    push("[x,L]", xl, LeadingOrder::Exact);
    push("[p,L]", pl, LeadingOrder::Exact);

    let mut ll = 0.0_f64;
    for &(a, b) in &pairs4 {
        for &(cc, d) in &pairs4 {
            let e = |i: usize, j: usize| if i == j { eta[i] } else { 0.0 };
            let rhs = ops.lorentz(a, d) * c(e(b, cc)) - ops.lorentz(b, d) * c(e(a, cc))
                - ops.lorentz(a, cc) * c(e(b, d))
                + ops.lorentz(b, cc) * c(e(a, d));
            let (lab, lcd) = (ops.lorentz(a, b), ops.lorentz(cc, d));
            ll = ll.max(max_norm(&w, |v| ops.commutator_apply(&lab, &lcd, v).sub(&ops.apply(&rhs, v))));
        }
    }
    push("[L,L]", ll, LeadingOrder::Exact);

    let mut xi = 0.0_f64;
    let mut pi = 0.0_f64;
    for m in 0..4 {
        xi = xi.max(max_norm(&w, |v| ops.commutator_apply(&ops.x[m], &ops.i, v)));
        pi = pi.max(max_norm(&w, |v| ops.commutator_apply(&ops.p[m], &ops.i, v)));
    }
    push("[x,i]", xi, LeadingOrder::DeltaX(1.0));
    push("[p,i]", pi, LeadingOrder::DeltaP(1.0));

    let li = pairs4
        .iter()
        .map(|&(a, b)| max_norm(&w, |v| ops.commutator_apply(&ops.lorentz(a, b), &ops.i, v)))
        .fold(0.0, f64::max);
    push("[L,i]", li, LeadingOrder::Exact);
    rows
}

/// Fitted scaling of one residual over a geometric sweep of its small parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualFit {
    pub relation: String,
    pub order: LeadingOrder,
    pub params: Vec<f64>,
    pub norms: Vec<f64>,
    /// log-log slope (NaN for exact rows)
    pub fitted_order: f64,
}

impl ResidualFit {
    /// Slope within `slope_tol` of the declared order, or, for exact rows, every
    /// norm below [`EXACT_TOL`].
    pub fn matches(&self, slope_tol: f64) -> bool {
        match self.order {
            LeadingOrder::Exact => self.norms.iter().all(|&n| n <= EXACT_TOL),
            o => (self.fitted_order - o.exponent()).abs() <= slope_tol,
        }
    }
}

/// Sweep each small parameter over `points` halvings (`2^-1 .. 2^-points` for
/// `δx`, `δp` at fixed `k = k_fixed`; `k = 2^0 .. 2^(points-1)` for `1/l`) and
/// fit the log-log slope of every residual against it.
pub fn residual_scaling(signature: Signature, points: usize, k_fixed: usize, hbar: f64) -> Result<Vec<ResidualFit>> {
    if points < 2 {
        return Err(Error::InvalidParameter("need at least two sweep points".into()));
    }
    let run = |k: usize, dx: f64, dp: f64| -> Result<Vec<ResidualRow>> {
        let qc = QuantumConstants::stime(k as u32, hbar, dx, dp);
        Ok(residuals_vs_singular(&stime_operators(signature, RepKind::SymPower(k), &qc)?))
    };
    let halvings: Vec<f64> = (1..=points).map(|j| 0.5_f64.powi(j as i32)).collect();
    let dx_runs = halvings.iter().map(|&d| run(k_fixed, d, 1.0)).collect::<Result<Vec<_>>>()?;
    let dp_runs = halvings.iter().map(|&d| run(k_fixed, 1.0, d)).collect::<Result<Vec<_>>>()?;
    let l_runs = (0..points)
        .map(|j| run(1 << j, 1.0, 1.0))
        .collect::<Result<Vec<_>>>()?;
    let template = &dx_runs[0];
    let mut fits = Vec::with_capacity(template.len());
    for (idx, row) in template.iter().enumerate() {
        let runs = match row.order {
            LeadingOrder::DeltaX(_) => &dx_runs,
            LeadingOrder::DeltaP(_) => &dp_runs,
            LeadingOrder::InverseL(_) => &l_runs,
            LeadingOrder::Exact => {
                let norms: Vec<f64> = dx_runs
                    .iter()
                    .chain(&dp_runs)
                    .chain(&l_runs)
                    .map(|r| r[idx].norm)
                    .collect();
                fits.push(ResidualFit {
                    relation: row.relation.clone(),
                    order: row.order,
                    params: vec![0.0; norms.len()],
                    norms,
                    fitted_order: f64::NAN,
                });
                continue;
            }
        };
        let params: Vec<f64> = runs.iter().map(|r| r[idx].small_param).collect();
        let norms: Vec<f64> = runs.iter().map(|r| r[idx].norm).collect();
        fits.push(ResidualFit {
            relation: row.relation.clone(),
            order: row.order,
            fitted_order: linalg::log_log_slope(&params, &norms),
            params,
            norms,
        });
    }
    Ok(fits)
}

/// `<Λ2>` on the vacuum, split into the `XY`, `x`, `p` and Lorentz parts.
#[derive(Debug, Clone, PartialEq)]
pub struct Lambda2Report {
    pub k: usize,
    pub value: f64,
    pub target: f64,
    pub ratio: f64,
    /// `<-L[X,Y]^2>`
    pub xy_term: f64,
    /// `-δx⁻² <x^μ x_μ>`
    pub x_term: f64,
    /// `-δp⁻² <p^μ p_μ>`
    pub p_term: f64,
    /// `Σ_{μ<ν} <L^ν_μ L^μ_ν>`
    pub lorentz_term: f64,
    /// `<L^{Xμ} L_{Xμ} + L^{Yμ} L_{Yμ}>`
    pub cross_term: f64,
    /// `|cross_term| / target`
    pub cross_relative: f64,
    /// `½ <Tr 𝕃⁴>` (reported only)
    pub lambda4: f64,
    pub lambda4_target: f64,
}

/// `<v| η_a η_b L_ab L_ba |v>` for `a != b`
fn pair_term(ops: &StimeOperators, v: &FockVector, a: usize, b: usize) -> f64 {
    let eta = ops.frame.metric();
    let g = ops.generator(a, b);
    let w = ops.apply(&g, &ops.apply(&g, v));
    -(eta[a] * eta[b]) * v.dot(&w).re
}

/// `Λ2 = ½ Tr 𝕃²` evaluated on the extreme-weight vacuum, compared with `l²`.
pub fn lambda2_check(ops: &StimeOperators) -> Result<Lambda2Report> {
    if !ops.signature.is_compact() {
        return Err(Error::NonCompact);
    }
    let v = ops.vacuum();
    let k = ops.k();
    let l2 = (k * k) as f64;
    let xy_term = pair_term(ops, &v, X, Y);
    let x_term: f64 = (0..4).map(|m| pair_term(ops, &v, m, X)).sum();
    let p_term: f64 = (0..4).map(|m| pair_term(ops, &v, m, Y)).sum();
    let mut lorentz_term = 0.0;
    for a in 0..4 {
        for b in (a + 1)..4 {
            lorentz_term += pair_term(ops, &v, a, b);
        }
    }
    let value = xy_term + x_term + p_term + lorentz_term;
    // L^{Xμ} L_{Xμ} = η^XX η^μμ L_Xμ², the negative of the corresponding pair terms
    let cross_term = -(x_term + p_term);
    let lambda4 = 0.5 * trace4(ops, &v);
    Ok(Lambda2Report {
        k,
        value,
        target: l2,
        ratio: value / l2,
        xy_term,
        x_term,
        p_term,
        lorentz_term,
        cross_term,
        cross_relative: cross_term.abs() / l2,
        lambda4,
        lambda4_target: l2 * l2,
    })
}

/// `<v| Tr 𝕃⁴ |v>` for anti-Hermitian generators: `Σ_{a,c} ‖Σ_b 𝕃^c_b 𝕃^b_a v‖²`.
fn trace4(ops: &StimeOperators, v: &FockVector) -> f64 {
    let eta = ops.frame.metric();
    let raised = |a: usize, b: usize| ops.generator(a, b) * c(eta[a]);
    let y: Vec<Vec<FockVector>> = (0..6)
        .map(|b| (0..6).map(|a| ops.apply(&raised(b, a), v)).collect())
        .collect();
    let mut total = 0.0;
    for cc in 0..6 {
        for a in 0..6 {
            let mut z = FockVector::default();
            for (b, yb) in y.iter().enumerate() {
                z.add_scaled(&ops.apply(&raised(cc, b), &yb[a]), c(1.0));
            }
            total += z.norm_sqr();
        }
    }
    total
}

/// `Λ2` reports over a list of symmetric powers with the fitted constant
/// `C = max k |ratio - 1|`.
pub fn lambda2_sweep(ks: &[usize], hbar: f64) -> Result<(Vec<Lambda2Report>, f64)> {
    let reports = ks
        .iter()
        .map(|&k| {
            let qc = QuantumConstants::stime(k as u32, hbar, 1.0, 1.0);
            lambda2_check(&stime_operators(Signature::Compact, RepKind::SymPower(k), &qc)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let fitted_c = reports
        .iter()
        .map(|r| r.k as f64 * (r.ratio - 1.0).abs())
        .fold(0.0, f64::max);
    Ok((reports, fitted_c))
}

/// True when `|ratio - 1|` strictly decreases along the sweep.
pub fn monotone_toward_one(reports: &[Lambda2Report]) -> bool {
    reports
        .windows(2)
        .all(|w| (w[1].ratio - 1.0).abs() < (w[0].ratio - 1.0).abs())
}

/// Dense `Â₁ = Σ_μ η^μμ p̂_μ î p̂_μ + m² î` on the `Sym^k` sector.
pub fn wave_operator(ops: &StimeOperators, mass: f64) -> Result<CMatrix> {
    let eta = ops.frame.metric();
    let i = ops.dense(&ops.i)?;
    let mut out = &i * c(mass * mass);
    for mu in 0..4 {
        let p = ops.dense(&ops.p[mu])?;
        out += &p * &i * &p * c(eta[mu]);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveReport {
    pub k: usize,
    /// `‖(Â₁ - î p̂^μ p̂_μ - m² î) v‖ / ‖(î p̂^μ p̂_μ + m² î) v‖`
    pub ordering: f64,
    /// `‖(Â₁ - î₀ (p̂^μ p̂_μ + m²)) v‖ / ‖î₀ (p̂^μ p̂_μ + m²) v‖` with `î₀ = -i`
    pub frozen: f64,
}

/// Ordering and frozen-`î` residuals of the wave operator on the vacuum.
pub fn wave_residuals(ops: &StimeOperators, mass: f64) -> WaveReport {
    let eta = ops.frame.metric();
    let v = ops.vacuum();
    let m2 = c(mass * mass);
    let mut ordered = ops.apply(&ops.i, &v).scaled(m2);
    let mut p2 = v.scaled(m2);
    for mu in 0..4 {
        let pv = ops.apply(&ops.p[mu], &v);
        ordered.add_scaled(&ops.apply(&ops.p[mu], &ops.apply(&ops.i, &pv)), c(eta[mu]));
        p2.add_scaled(&ops.apply(&ops.p[mu], &pv), c(eta[mu]));
    }
    // p2 = (p̂^μ p̂_μ + m²) v
    let naive = ops.apply(&ops.i, &p2);
    let frozen = p2.scaled(-I);
    WaveReport {
        k: ops.k(),
        ordering: ordered.sub(&naive).norm() / naive.norm(),
        frozen: ordered.sub(&frozen).norm() / frozen.norm(),
    }
}

/// Simplified dimension `2 N_x + 2` of the boson algebra over `N_x` modes.
pub fn simplified_dimension(n_x: usize) -> Result<usize> {
    if n_x == 0 {
        return Err(Error::NoModes);
    }
    Ok(2 * n_x + 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionCheck {
    pub n_x: usize,
    pub simplified_dimension: usize,
    /// number of axes of the orthogonal algebra carrying the simplified boson
    pub io_axes: usize,
    pub consistent: bool,
}

pub fn dimension_cross_check(n_x: usize) -> Result<DimensionCheck> {
    let d = simplified_dimension(n_x)?;
    let axes = crate::homotopy::boson_frame(n_x)?.n_axes();
    Ok(DimensionCheck {
        n_x,
        simplified_dimension: d,
        io_axes: axes,
        consistent: d == axes,
    })
}

/// `N` (largest eigenvalue of `|i r̂| / δr`) next to `l_X`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NvsLx {
    pub n: f64,
    pub l_x: u32,
}

pub fn n_vs_lx(ops: &StimeOperators) -> Result<NvsLx> {
    let one = spectrum(&ops.l_xy, true)?;
    // eigenvalues of a lift on Sym^k are k-fold sums of one-quantum eigenvalues
    let n = ops.k() as f64 * one.max.abs().max(one.min.abs());
    Ok(NvsLx {
        n,
        l_x: ops.qc.l_x.unwrap_or(0),
    })
}

/// Mutual commutation of `{L[0,X], L[1,Y], L[2,3]}` and, for compact
/// signature, their joint spectrum `(i L[0,X], i L[1,Y], i L[2,3])`.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutingReport {
    pub max_commutator: f64,
    pub joint: Vec<[f64; 3]>,
}

pub fn commuting_set(ops: &StimeOperators) -> Result<CommutingReport> {
    let ops3 = [
        ops.dense(&ops.generator(0, X))?,
        ops.dense(&ops.generator(1, Y))?,
        ops.dense(&ops.generator(2, 3))?,
    ];
    let mut worst = 0.0_f64;
    for a in 0..3 {
        for b in (a + 1)..3 {
            worst = worst.max(linalg::max_abs(&linalg::commutator(&ops3[a], &ops3[b])));
        }
    }
    let mut joint = Vec::new();
    if ops.signature.is_compact() {
        let h = (&ops3[0] + &ops3[1] * c(std::f64::consts::SQRT_2) + &ops3[2] * c(3f64.sqrt())) * I;
        let (_, vecs) = linalg::hermitian_eigen(&h);
        let herm: Vec<CMatrix> = ops3.iter().map(|m| m * I).collect();
        for j in 0..vecs.ncols() {
            let v = vecs.column(j).into_owned();
            let mut e = [0.0; 3];
            for (slot, m) in e.iter_mut().zip(&herm) {
                let x = linalg::sandwich(&v, m, &v).re;
                *slot = (x * 1e9).round() / 1e9 + 0.0;
            }
            joint.push(e);
        }
        joint.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    }
    Ok(CommutingReport {
        max_commutator: worst,
        joint,
    })
}
