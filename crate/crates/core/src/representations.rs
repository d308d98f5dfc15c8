//! Matrix representations, invariants, spectra and the oscillator correspondence.

use std::sync::Arc;

use num_complex::Complex64;

use crate::algebra::{catalog, LieAlgebra, DEFAULT_RANK_TOL};
use crate::error::{Error, Result};
use crate::fock;
use crate::linalg::{self, c, CMatrix, I};
use crate::orthogonal::OrthogonalFrame;

/// Default cap on materialized representation dimensions.
pub const DEFAULT_DIM_CAP: usize = 5000;

/// Tolerance on quantum-constant constraints (relative).
const CONSTRAINT_TOL: f64 = 1e-12;

/// Square complex matrices, one per basis element of `algebra`.
#[derive(Debug, Clone)]
pub struct Representation {
    algebra: Arc<LieAlgebra>,
    matrices: Vec<CMatrix>,
    frame: Option<OrthogonalFrame>,
}

impl Representation {
    pub fn new(algebra: Arc<LieAlgebra>, matrices: Vec<CMatrix>) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                got: matrices.len(),
            });
        }
        let d = matrices.first().map_or(0, |m| m.nrows());
        if let Some(bad) = matrices.iter().find(|m| m.nrows() != d || m.ncols() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: bad.ncols(),
            });
        }
        Ok(Representation {
            algebra,
            matrices,
            frame: None,
        })
    }

    /// Attach the orthogonal frame (axes and metric) the generators belong to.
    pub fn with_frame(mut self, frame: OrthogonalFrame) -> Result<Self> {
        if frame.n_generators() != self.matrices.len() {
            return Err(Error::DimensionMismatch {
                expected: self.matrices.len(),
                got: frame.n_generators(),
            });
        }
        self.frame = Some(frame);
        Ok(self)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> Arc<LieAlgebra> {
        Arc::clone(&self.algebra)
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, label: &str) -> Result<&CMatrix> {
        Ok(&self.matrices[self.algebra.index_of(label)?])
    }

    pub fn dim_rep(&self) -> usize {
        self.matrices.first().map_or(0, |m| m.nrows())
    }

    pub fn frame(&self) -> Option<&OrthogonalFrame> {
        self.frame.as_ref()
    }

    pub fn metric(&self) -> Option<&[f64]> {
        self.frame.as_ref().map(|f| f.metric())
    }

    /// Operator of `L_ab` for arbitrary ordered axes (zero when `a == b`).
    pub fn orthogonal_generator(&self, a: usize, b: usize) -> Result<CMatrix> {
        let frame = self.frame.as_ref().ok_or(Error::MetricMissing)?;
        Ok(match frame.index(a, b) {
            Some((i, s)) => &self.matrices[i] * c(s),
            None => CMatrix::zeros(self.dim_rep(), self.dim_rep()),
        })
    }

    /// `Σ coeffs_a R_a`
    pub fn element(&self, coeffs: &[f64]) -> Result<CMatrix> {
        if coeffs.len() != self.matrices.len() {
            return Err(Error::DimensionMismatch {
                expected: self.matrices.len(),
                got: coeffs.len(),
            });
        }
        let d = self.dim_rep();
        Ok(self
            .matrices
            .iter()
            .zip(coeffs)
            .fold(CMatrix::zeros(d, d), |acc, (m, &x)| acc + m * c(x)))
    }

    /// Max anti-Hermiticity defect over generators.
    pub fn anti_hermitian_defect(&self) -> f64 {
        self.matrices
            .iter()
            .map(linalg::anti_hermitian_defect)
            .fold(0.0, f64::max)
    }
}

/// `max_{a,b} ‖[R_a, R_b] - Σ_k c[a][b][k] R_k‖_max`
pub fn rep_defect(rep: &Representation) -> f64 {
    let alg = rep.algebra();
    let n = alg.dim();
    let mats = rep.matrices();
    let mut worst = 0.0_f64;
    for a in 0..n {
        for b in (a + 1)..n {
            let mut m = linalg::commutator(&mats[a], &mats[b]);
            for (k, mk) in mats.iter().enumerate() {
                let ck = alg.c(a, b, k);
                if ck != 0.0 {
                    m -= mk * c(ck);
                }
            }
            worst = worst.max(linalg::max_abs(&m));
        }
    }
    // brackets with a == b and the lower triangle follow from antisymmetry only
    // when the tensor is antisymmetric; check the diagonal terms explicitly
    for a in 0..n {
        let mut m = CMatrix::zeros(rep.dim_rep(), rep.dim_rep());
        for (k, mk) in mats.iter().enumerate() {
            let ck = alg.c(a, a, k);
            if ck != 0.0 {
                m -= mk * c(ck);
            }
        }
        worst = worst.max(linalg::max_abs(&m));
    }
    worst
}

pub fn adjoint_rep(alg: &LieAlgebra) -> Representation {
    let mats = alg.adjoint_matrices().iter().map(linalg::to_complex).collect();
    Representation::new(Arc::new(alg.clone()), mats).expect("adjoint matrices are square")
}

/// The `(2l+1)`-dimensional irrep of `so(3)` as anti-Hermitian `R_k = -i J_k`,
/// basis ordered `m = l, l-1, ..., -l` with Condon-Shortley phases.
pub fn so3_irrep(two_l: u32) -> Representation {
    let (jx, jy, jz) = angular_momentum(two_l);
    let mats = vec![jx * (-I), jy * (-I), jz * (-I)];
    Representation::new(Arc::new(catalog::so3()), mats).expect("square")
}

/// Hermitian `(J_x, J_y, J_z)` for spin `two_l / 2`, basis `m = l, ..., -l`.
pub fn angular_momentum(two_l: u32) -> (CMatrix, CMatrix, CMatrix) {
    let d = two_l as usize + 1;
    let l = two_l as f64 / 2.0;
    let m_of = |n: usize| l - n as f64;
    let mut jp = CMatrix::zeros(d, d);
    for n in 1..d {
        // J+ |m> = sqrt(l(l+1) - m(m+1)) |m+1>, index n -> n-1
        let m = m_of(n);
        jp[(n - 1, n)] = c((l * (l + 1.0) - m * (m + 1.0)).max(0.0).sqrt());
    }
    let jm = jp.adjoint();
    let jx = (&jp + &jm) * c(0.5);
    let jy = (&jp - &jm) * Complex64::new(0.0, -0.5);
    let jz = CMatrix::from_fn(d, d, |i, j| if i == j { c(m_of(i)) } else { c(0.0) });
    (jx, jy, jz)
}

/// Defining representation of `so(p, q)` (negative metric entries first).
pub fn defining_rep(p: usize, q: usize) -> Result<Representation> {
    if p + q < 2 {
        return Err(Error::InvalidParameter("so(p, q) needs p + q >= 2".into()));
    }
    let frame = OrthogonalFrame::pq(p, q)?;
    frame_rep(&frame, &format!("so({p},{q})"))
}

/// Defining representation on an arbitrary orthogonal frame.
pub fn frame_rep(frame: &OrthogonalFrame, name: &str) -> Result<Representation> {
    let alg = Arc::new(frame.algebra(name));
    let mats = frame.defining_matrices().iter().map(linalg::to_complex).collect();
    Representation::new(alg, mats)?.with_frame(frame.clone())
}

/// Which representation of an orthogonal algebra to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    Defining,
    SymPower(usize),
}

impl RepKind {
    /// Extreme eigenvalue of `i L` on a rotation plane.
    pub fn extreme_weight(self) -> usize {
        match self {
            RepKind::Defining => 1,
            RepKind::SymPower(k) => k,
        }
    }
}

pub fn sym_power_rep(rep: &Representation, k: usize) -> Result<Representation> {
    sym_power_rep_capped(rep, k, DEFAULT_DIM_CAP)
}

/// `k`-th symmetric power via the Leibniz action in the occupation basis.
pub fn sym_power_rep_capped(rep: &Representation, k: usize, cap: usize) -> Result<Representation> {
    if k == 0 {
        return Err(Error::InvalidParameter("symmetric power k must be positive".into()));
    }
    let d = rep.dim_rep();
    fock::check_cap(fock::sym_power_dim(d, k), cap)?;
    let basis = fock::occupations_exact(d, k);
    let index = fock::index_of(&basis);
    let mats = rep
        .matrices()
        .iter()
        .map(|m| fock::lift_matrix(m, &basis, &index))
        .collect();
    let out = Representation::new(rep.algebra_arc(), mats)?;
    match rep.frame() {
        Some(f) => out.with_frame(f.clone()),
        None => Ok(out),
    }
}

pub fn build_rep(frame: &OrthogonalFrame, name: &str, kind: RepKind, cap: usize) -> Result<Representation> {
    let base = frame_rep(frame, name)?;
    match kind {
        RepKind::Defining => Ok(base),
        RepKind::SymPower(k) => sym_power_rep_capped(&base, k, cap),
    }
}

/// Coefficients `C_0..C_d` of `det(L - z) = Σ C_n z^n`, `L = Σ coeffs_a R_a`.
pub fn char_poly_invariants(rep: &Representation, coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let l = rep.element(coeffs)?;
    Ok(linalg::poly_from_roots(&linalg::eigenvalues(&l)))
}

/// Largest relative change of the characteristic-polynomial coefficients under
/// `trials` seeded conjugations `L -> g L g⁻¹` (`g` random with condition
/// number at most 10), for seeded random elements `L`.
pub fn conjugation_gap(rep: &Representation, seed: u64, trials: usize) -> Result<f64> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = rep.algebra().dim();
    let mut worst = 0.0_f64;
    for _ in 0..trials {
        let x: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..=1.0)).collect();
        let base = char_poly_invariants(rep, &x)?;
        let g = linalg::to_complex(&linalg::random_well_conditioned(rep.dim_rep(), 10.0, &mut rng));
        let gi = g
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::InvalidParameter("singular conjugation".into()))?;
        let moved = linalg::poly_from_roots(&linalg::eigenvalues(&(&g * rep.element(&x)? * gi)));
        let scale = base.iter().map(|z| z.norm()).fold(1.0, f64::max);
        let gap = base.iter().zip(&moved).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        worst = worst.max(gap / scale);
    }
    Ok(worst)
}

/// `Σ K^{ab} R_a R_b` with `K^{ab}` the inverse Killing form.
pub fn quadratic_casimir(rep: &Representation) -> Result<CMatrix> {
    let alg = rep.algebra();
    let n = alg.dim();
    let k = alg.killing_form();
    let rank = linalg::rank(&k, DEFAULT_RANK_TOL);
    if rank < n {
        return Err(Error::SingularKilling { rank, dim: n });
    }
    let kinv = k.try_inverse().ok_or(Error::SingularKilling { rank, dim: n })?;
    let d = rep.dim_rep();
    let mats = rep.matrices();
    let mut out = CMatrix::zeros(d, d);
    for a in 0..n {
        for b in 0..n {
            let w = kinv[(a, b)];
            if w != 0.0 {
                out += &mats[a] * &mats[b] * c(w);
            }
        }
    }
    Ok(out)
}

/// `max_a ‖[C, R_a]‖_max`
pub fn centrality_defect(rep: &Representation, op: &CMatrix) -> f64 {
    rep.matrices()
        .iter()
        .map(|m| linalg::max_abs(&linalg::commutator(op, m)))
        .fold(0.0, f64::max)
}

/// `Tr 𝕃^n` over the axis indices, with `𝕃^α_β = η^αα L_αβ`; an operator on the
/// representation space.
pub fn trace_invariant(rep: &Representation, order: usize) -> Result<CMatrix> {
    if order == 0 {
        return Err(Error::InvalidParameter("trace invariant order must be >= 1".into()));
    }
    let frame = rep.frame().ok_or(Error::MetricMissing)?;
    let m = frame.n_axes();
    let eta = frame.metric();
    let d = rep.dim_rep();
    let raised: Vec<Vec<CMatrix>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| rep.orthogonal_generator(a, b).map(|g| g * c(eta[a])))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut power = raised.clone();
    for _ in 1..order {
        let next: Vec<Vec<CMatrix>> = (0..m)
            .map(|a| {
                (0..m)
                    .map(|g| {
                        (0..m).fold(CMatrix::zeros(d, d), |acc, b| acc + &power[a][b] * &raised[b][g])
                    })
                    .collect()
            })
            .collect();
        power = next;
    }
    Ok((0..m).fold(CMatrix::zeros(d, d), |acc, a| acc + &power[a][a]))
}

/// Physical constants of a simplification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumConstants {
    pub hbar: f64,
    pub delta_x: f64,
    pub delta_p: f64,
    pub delta_q: f64,
    pub delta_r: f64,
    pub two_l: Option<u32>,
    pub l_x: Option<u32>,
    pub l_f: Option<u32>,
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= CONSTRAINT_TOL * a.abs().max(b.abs()).max(1e-300)
}

impl QuantumConstants {
    /// Oscillator constants with `δq = δp = sqrt(ħ / l)` so that `l δq δp = ħ`.
    pub fn oscillator(two_l: u32, hbar: f64) -> Self {
        let l = two_l as f64 / 2.0;
        let dq = if two_l == 0 { 1.0 } else { (hbar / l).sqrt() };
        QuantumConstants {
            hbar,
            delta_x: 1.0,
            delta_p: dq,
            delta_q: dq,
            delta_r: 1.0,
            two_l: Some(two_l),
            l_x: None,
            l_f: None,
        }
    }

    /// Space-time constants with `δr` chosen so that `δx δp = l_X δr ħ`.
    pub fn stime(l_x: u32, hbar: f64, delta_x: f64, delta_p: f64) -> Self {
        QuantumConstants {
            hbar,
            delta_x,
            delta_p,
            delta_q: 1.0,
            delta_r: delta_x * delta_p / (l_x as f64 * hbar),
            two_l: None,
            l_x: Some(l_x),
            l_f: None,
        }
    }

    pub fn l(&self) -> Option<f64> {
        self.two_l.map(|t| t as f64 / 2.0)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("hbar", self.hbar),
            ("delta_x", self.delta_x),
            ("delta_p", self.delta_p),
            ("delta_q", self.delta_q),
            ("delta_r", self.delta_r),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Constraint(format!("{name} must be positive, got {v}")));
            }
        }
        if let Some(lx) = self.l_x {
            let lhs = self.delta_x * self.delta_p;
            let rhs = lx as f64 * self.delta_r * self.hbar;
            if !close(lhs, rhs) {
                return Err(Error::Constraint(format!("δx δp = {lhs} but l_X δr ħ = {rhs}")));
            }
        }
        if let Some(two_l) = self.two_l {
            if two_l > 0 {
                let lhs = two_l as f64 / 2.0 * self.delta_q * self.delta_p;
                if !close(lhs, self.hbar) {
                    return Err(Error::Constraint(format!("l δq δp = {lhs} but ħ = {}", self.hbar)));
                }
            }
        }
        Ok(())
    }
}

/// Simplified oscillator `(q̂, p̂, r̂, î)` with anti-Hermitian generators; the
/// Hermitian observables are `i q̂`, `i p̂`.
#[derive(Debug, Clone)]
pub struct SimplifiedOscillator {
    pub q: CMatrix,
    pub p: CMatrix,
    pub r: CMatrix,
    pub i: CMatrix,
    pub qc: QuantumConstants,
}

impl SimplifiedOscillator {
    /// Extreme-weight vector of `i r̂` (the `m = l` state).
    pub fn vacuum(&self) -> linalg::CVector {
        let mut v = linalg::CVector::zeros(self.q.nrows());
        v[0] = c(1.0);
        v
    }

    /// `<v| (i q̂)^2 + (i p̂)^2 |v>`
    pub fn energy(&self, v: &linalg::CVector) -> f64 {
        let h = -(&self.q * &self.q + &self.p * &self.p);
        linalg::sandwich(v, &h, v).re
    }
}

pub fn simplified_oscillator(qc: &QuantumConstants) -> Result<SimplifiedOscillator> {
    let two_l = qc
        .two_l
        .ok_or_else(|| Error::Constraint("oscillator needs two_l".into()))?;
    qc.validate()?;
    let rep = so3_irrep(two_l);
    let m = rep.matrices();
    let r = &m[2] * c(qc.delta_r);
    let i = if two_l == 0 {
        r.clone()
    } else {
        &r * c(1.0 / (two_l as f64 / 2.0 * qc.delta_r))
    };
    Ok(SimplifiedOscillator {
        q: &m[0] * c(qc.delta_q),
        p: &m[1] * c(qc.delta_p),
        r,
        i,
        qc: *qc,
    })
}

/// Truncated canonical pair on `D` levels: `a|n> = sqrt(n ħ)|n-1>`,
/// `q = (a + a†)/√2`, `p = i(a† - a)/√2`.
#[derive(Debug, Clone)]
pub struct CanonicalPair {
    pub a: CMatrix,
    pub q: CMatrix,
    pub p: CMatrix,
}

pub fn canonical_truncated(levels: usize, hbar: f64) -> Result<CanonicalPair> {
    if levels < 2 {
        return Err(Error::InvalidParameter("canonical truncation needs D >= 2".into()));
    }
    let mut a = CMatrix::zeros(levels, levels);
    for n in 1..levels {
        a[(n - 1, n)] = c((n as f64 * hbar).sqrt());
    }
    let ad = a.adjoint();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let q = (&a + &ad) * c(s);
    let p = (&ad - &a) * Complex64::new(0.0, s);
    Ok(CanonicalPair { a, q, p })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<f64>,
    pub spacing: f64,
    pub min: f64,
    pub max: f64,
    pub uniform: bool,
}

const SPECTRUM_TOL: f64 = 1e-8;

/// Sorted real spectrum (of `i op` when `hermitize`) with spacing statistics.
pub fn spectrum(op: &CMatrix, hermitize: bool) -> Result<SpectrumReport> {
    let h = if hermitize { op * I } else { op.clone() };
    let scale = linalg::max_abs(&h).max(1.0);
    let mut ev = if linalg::hermitian_defect(&h) <= SPECTRUM_TOL * scale {
        linalg::hermitian_eigenvalues(&h)
    } else {
        let ev = linalg::eigenvalues(&h);
        let worst = ev.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
        if worst > SPECTRUM_TOL {
            return Err(Error::NotHermitian(worst));
        }
        ev.iter().map(|z| z.re).collect()
    };
    ev.sort_by(|a, b| a.total_cmp(b));
    let min = ev.first().copied().unwrap_or(0.0);
    let max = ev.last().copied().unwrap_or(0.0);
    let merge = SPECTRUM_TOL * (max - min).abs().max(1.0);
    let mut levels: Vec<f64> = Vec::new();
    for &x in &ev {
        match levels.last() {
            Some(&last) if (x - last).abs() <= merge => {}
            _ => levels.push(x),
        }
    }
    let spacing = if levels.len() >= 2 { levels[1] - levels[0] } else { 0.0 };
    let uniform = levels
        .windows(2)
        .all(|w| ((w[1] - w[0]) - spacing).abs() <= SPECTRUM_TOL * spacing.abs().max(1.0));
    Ok(SpectrumReport {
        eigenvalues: ev,
        spacing,
        min,
        max,
        uniform,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrespondenceRow {
    pub l: f64,
    pub k: usize,
    pub delta_q: f64,
    pub delta_p: f64,
    pub err_q: f64,
    pub err_p: f64,
    pub spacing: f64,
    pub min: f64,
    pub max: f64,
}

impl CorrespondenceRow {
    pub fn err(&self) -> f64 {
        self.err_q.max(self.err_p)
    }
}

/// Compare the top `k×k` corner of the simplified oscillator (Hermitian forms,
/// `δq = δp = sqrt(ħ/l)`, levels counted down from the extreme weight) with the
/// truncated canonical pair on `k` levels.
pub fn correspondence_table(two_l: u32, k: usize, hbar: f64) -> Result<CorrespondenceRow> {
    if k == 0 || 4 * k > two_l as usize {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= two_l/4, got k = {k}, two_l = {two_l}"
        )));
    }
    let qc = QuantumConstants::oscillator(two_l, hbar);
    let osc = simplified_oscillator(&qc)?;
    let qh = &osc.q * I;
    let ph = &osc.p * I;
    let corner_err = |big: &CMatrix, small: &CMatrix| {
        let mut worst = 0.0_f64;
        for i in 0..k {
            for j in 0..k {
                worst = worst.max((big[(i, j)] - small[(i, j)]).norm());
            }
        }
        worst
    };
    let (err_q, err_p) = if k == 1 {
        (corner_err(&qh, &CMatrix::zeros(1, 1)), corner_err(&ph, &CMatrix::zeros(1, 1)))
    } else {
        let can = canonical_truncated(k, hbar)?;
        (corner_err(&qh, &can.q), corner_err(&ph, &can.p))
    };
    let eig = spectrum(&(&osc.q * c(1.0 / qc.delta_q)), true)?;
    Ok(CorrespondenceRow {
        l: two_l as f64 / 2.0,
        k,
        delta_q: qc.delta_q,
        delta_p: qc.delta_p,
        err_q,
        err_p,
        spacing: eig.spacing,
        min: eig.min,
        max: eig.max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so3_irrep_dimensions_and_relations() {
        assert_eq!(so3_irrep(2).dim_rep(), 3);
        let triv = so3_irrep(0);
        assert!(triv.matrices().iter().all(|m| m.nrows() == 1 && m[(0, 0)] == c(0.0)));
        for two_l in 0..12 {
            let rep = so3_irrep(two_l);
            assert!(rep_defect(&rep) <= 1e-12);
            assert!(rep.anti_hermitian_defect() <= 1e-12);
        }
        let jz = so3_irrep(4).matrices()[2].clone();
        let s = spectrum(&jz, true).unwrap();
        assert_eq!(s.eigenvalues.len(), 5);
        for (x, want) in s.eigenvalues.iter().zip([-2.0, -1.0, 0.0, 1.0, 2.0]) {
            assert!((x - want).abs() < 1e-12);
        }
        assert!(s.uniform && (s.spacing - 1.0).abs() < 1e-12);
    }

    #[test]
    fn perturbed_matrices_break_relations() {
        let rep = so3_irrep(2);
        let mut mats = rep.matrices().to_vec();
        mats[0][(0, 1)] += c(1e-3);
        let bad = Representation::new(rep.algebra_arc(), mats).unwrap();
        assert!(rep_defect(&bad) >= 1e-4);
    }

    #[test]
    fn defining_reps() {
        let so3 = defining_rep(3, 0).unwrap();
        assert!(rep_defect(&so3) <= 1e-12);
        // so(3) adjoint = -L[1,2], -L[0,2]... : compare via the relabelled basis J1 = -L[1,2],
        // J2 = L[0,2], J3 = -L[0,1]
        let ad = adjoint_rep(&catalog::so3());
        let l = so3.matrices();
        let relabelled = [-&l[2], l[1].clone(), -&l[0]];
        for (a, b) in ad.matrices().iter().zip(relabelled.iter()) {
            assert!(linalg::max_abs(&(a - b)) < 1e-15);
        }
        let so6 = defining_rep(6, 0).unwrap();
        assert_eq!(so6.matrices().len(), 15);
        assert_eq!(so6.dim_rep(), 6);
        assert!(rep_defect(&so6) <= 1e-12);
        let lor = defining_rep(5, 1).unwrap();
        assert!(rep_defect(&lor) <= 1e-12);
        // L[0,5] (a boost) is η-anti-self-adjoint but not anti-Hermitian
        let boost = lor.orthogonal_generator(0, 5).unwrap();
        let eta = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            6,
            lor.metric().unwrap().iter().map(|&x| c(x)),
        ));
        assert!(linalg::max_abs(&(boost.transpose() * &eta + &eta * &boost)) < 1e-15);
        assert!(linalg::anti_hermitian_defect(&boost) > 1.0);
        assert!(defining_rep(1, 0).is_err());
    }

    #[test]
    fn symmetric_powers() {
        let so6 = defining_rep(6, 0).unwrap();
        let s1 = sym_power_rep(&so6, 1).unwrap();
        for (a, b) in s1.matrices().iter().zip(so6.matrices()) {
            assert!(linalg::max_abs(&(a - b)) < 1e-15);
        }
        let s2 = sym_power_rep(&so6, 2).unwrap();
        assert_eq!(s2.dim_rep(), 21);
        assert!(rep_defect(&s2) <= 1e-8);
        for k in 1..=3 {
            let sk = sym_power_rep(&so6, k).unwrap();
            let lxy = sk.orthogonal_generator(4, 5).unwrap();
            let eig = spectrum(&lxy, true).unwrap();
            let kk = k as f64;
            assert!((eig.max - kk).abs() < 1e-9 && (eig.min + kk).abs() < 1e-9);
            assert!(eig.uniform && (eig.spacing - 1.0).abs() < 1e-9);
        }
        assert!(matches!(
            sym_power_rep(&so6, 16),
            Err(Error::DimensionCap { dim: 20349, cap: DEFAULT_DIM_CAP })
        ));
        assert!(sym_power_rep(&so6, 0).is_err());
    }

    #[test]
    fn char_poly_examples() {
        let so6 = defining_rep(6, 0).unwrap();
        let zero = char_poly_invariants(&so6, &[0.0; 15]).unwrap();
        // (-z)^6
        for (n, z) in zero.iter().enumerate() {
            let want = if n == 6 { 1.0 } else { 0.0 };
            assert!((z - c(want)).norm() < 1e-14);
        }
        let coeffs: Vec<f64> = (0..15).map(|i| ((i * 7 + 3) % 11) as f64 / 5.0 - 1.0).collect();
        let cp = char_poly_invariants(&so6, &coeffs).unwrap();
        for n in [1, 3, 5] {
            assert!(cp[n].norm() < 1e-8, "C_{n} = {}", cp[n]);
        }
        assert!(cp[0].norm() > 1e-3);
    }

    #[test]
    fn casimir_on_so3_irreps() {
        for two_l in [0u32, 1, 2, 5, 8] {
            let rep = so3_irrep(two_l);
            let cas = quadratic_casimir(&rep).unwrap();
            let l = two_l as f64 / 2.0;
            let want = CMatrix::identity(rep.dim_rep(), rep.dim_rep()) * c(l * (l + 1.0) / 2.0);
            assert!(linalg::max_abs(&(cas - want)) < 1e-10);
        }
        let h = adjoint_rep(&catalog::heisenberg());
        assert!(matches!(quadratic_casimir(&h), Err(Error::SingularKilling { .. })));
    }

    #[test]
    fn trace_invariants() {
        let so6 = defining_rep(6, 0).unwrap();
        let t1 = trace_invariant(&so6, 1).unwrap();
        assert!(linalg::max_abs(&t1) == 0.0);
        let t2 = trace_invariant(&so6, 2).unwrap();
        let s = t2[(0, 0)];
        assert!(linalg::max_abs(&(&t2 - CMatrix::identity(6, 6) * s)) < 1e-12);
        assert!(matches!(
            trace_invariant(&so3_irrep(2), 2),
            Err(Error::MetricMissing)
        ));
    }

    #[test]
    fn oscillator_relations() {
        for two_l in 1..=20u32 {
            let qc = QuantumConstants::oscillator(two_l, 1.0);
            let osc = simplified_oscillator(&qc).unwrap();
            let ccr = linalg::commutator(&osc.q, &osc.p) - &osc.r * c(qc.delta_q * qc.delta_p / qc.delta_r);
            assert!(linalg::max_abs(&ccr) <= 1e-12);
            let eig = spectrum(&(&osc.r * c(1.0 / qc.delta_r)), true).unwrap();
            assert!((eig.max - two_l as f64 / 2.0).abs() < 1e-12);
        }
        let zero = simplified_oscillator(&QuantumConstants::oscillator(0, 1.0)).unwrap();
        assert_eq!(zero.q.nrows(), 1);
        let mut bad = QuantumConstants::oscillator(4, 1.0);
        bad.delta_q *= 1.01;
        assert!(matches!(simplified_oscillator(&bad), Err(Error::Constraint(_))));
    }

    #[test]
    fn canonical_pair_examples() {
        let hbar = 0.7;
        let can = canonical_truncated(2, hbar).unwrap();
        let comm = linalg::commutator(&can.q, &can.p);
        let want = CMatrix::from_row_slice(2, 2, &[I * hbar, c(0.0), c(0.0), -I * hbar]);
        assert!(linalg::max_abs(&(comm - want)) < 1e-15);
        let can = canonical_truncated(6, hbar).unwrap();
        let n = &can.q * &can.q + &can.p * &can.p;
        assert!((n[(0, 0)] - c(hbar)).norm() < 1e-14);
        assert!(linalg::hermitian_defect(&can.q) == 0.0);
        assert!(canonical_truncated(1, hbar).is_err());
    }

    #[test]
    fn spectrum_edge_cases() {
        let z = spectrum(&CMatrix::zeros(3, 3), true).unwrap();
        assert_eq!(z.eigenvalues, vec![0.0; 3]);
        assert!(z.uniform);
        assert_eq!(z.spacing, 0.0);
        let nonnormal = CMatrix::from_row_slice(2, 2, &[c(1.0), c(2.0), c(0.5), c(-1.0)]);
        assert!(matches!(spectrum(&nonnormal, true), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn correspondence_small_cases() {
        let row = correspondence_table(16, 1, 1.0).unwrap();
        assert_eq!(row.err_q, 0.0);
        assert_eq!(row.err_p, 0.0);
        assert!(correspondence_table(8, 3, 1.0).is_err());
        let row = correspondence_table(32, 4, 1.0).unwrap();
        assert!((row.spacing - 1.0).abs() < 1e-9);
        assert!((row.max - 16.0).abs() < 1e-9);
    }
}
