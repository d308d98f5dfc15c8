//! Many-quantum spaces built from one-quantum modes: bosonic, fermionic and
//! "maxwellonic" (free) statistics, the simplified boson algebra, cyclic
//! vacuum subspaces, Green's functions and bilinear lifts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock;
use crate::homotopy::boson_frame;
use crate::linalg::{self, c, CMatrix, CVector};
use crate::orthogonal::OrthogonalFrame;
use crate::representations::{build_rep, QuantumConstants, RepKind, Representation, DEFAULT_DIM_CAP};

/// Largest fermionic mode count (space dimension `2^12`).
pub const MAX_FERMI_MODES: usize = 12;

/// `b† a = σ a b† + ħ <b|a>`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistics {
    Bose,
    Fermi,
    Maxwell,
}

impl Statistics {
    pub fn sigma(self) -> f64 {
        match self {
            Statistics::Bose => 1.0,
            Statistics::Fermi => -1.0,
            Statistics::Maxwell => 0.0,
        }
    }
}

impl FromStr for Statistics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "bose" => Ok(Statistics::Bose),
            "-" | "fermi" => Ok(Statistics::Fermi),
            "0" | "maxwell" => Ok(Statistics::Maxwell),
            other => Err(Error::InvalidParameter(format!("unknown statistics {other:?}"))),
        }
    }
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistics::Bose => "+",
            Statistics::Fermi => "-",
            Statistics::Maxwell => "0",
        })
    }
}

/// `W = V ⊕ V^D`: input modes `0..dim_v`, output modes `dim_v..2 dim_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IoSpace {
    pub dim_v: usize,
    pub labels: Vec<String>,
}

impl IoSpace {
    pub fn new(dim_v: usize) -> Result<Self> {
        if dim_v == 0 {
            return Err(Error::NoModes);
        }
        Ok(IoSpace {
            dim_v,
            labels: (1..=dim_v).map(|n| n.to_string()).collect(),
        })
    }

    pub fn inputs(&self) -> std::ops::Range<usize> {
        0..self.dim_v
    }

    pub fn outputs(&self) -> std::ops::Range<usize> {
        self.dim_v..2 * self.dim_v
    }

    pub fn dim_w(&self) -> usize {
        2 * self.dim_v
    }
}

/// Creators `a_n`, annihilators `c^n` and the vacuum on a (possibly truncated)
/// many-quantum space. `exact[j]` is false for basis states on the truncation
/// boundary, where the defining relations do not hold.
#[derive(Debug, Clone)]
pub struct QuantifiedSystem {
    pub statistics: Statistics,
    pub io: IoSpace,
    pub creators: Vec<LadderOp>,
    pub annihilators: Vec<LadderOp>,
    pub vacuum: CVector,
    pub cutoff: Option<usize>,
    pub exact: Vec<bool>,
    pub hbar: f64,
    /// Occupation labels of the basis (bosons and fermions only).
    pub occupations: Option<Vec<fock::Occupation>>,
}

impl QuantifiedSystem {
    pub fn space_dim(&self) -> usize {
        self.vacuum.len()
    }

    pub fn dim_v(&self) -> usize {
        self.io.dim_v
    }

    /// Projector onto the states where the relations are exact.
    pub fn exact_projector(&self) -> CMatrix {
        let d = self.space_dim();
        CMatrix::from_fn(d, d, |i, j| c(if i == j && self.exact[i] { 1.0 } else { 0.0 }))
    }

    /// `φ_n |v> = (a_n + c^n)|v> / √2`
    pub fn field_apply(&self, n: usize, v: &CVector) -> Result<CVector> {
        if n >= self.dim_v() {
            return Err(Error::ModeIndex(n));
        }
        Ok((self.creators[n].apply(v) + self.annihilators[n].apply(v)) * c(std::f64::consts::FRAC_1_SQRT_2))
    }

    /// Dense `φ_n`.
    pub fn field(&self, n: usize) -> Result<CMatrix> {
        if n >= self.dim_v() {
            return Err(Error::ModeIndex(n));
        }
        Ok((self.creators[n].to_dense() + self.annihilators[n].to_dense()) * c(std::f64::consts::FRAC_1_SQRT_2))
    }

    /// `Σ_n a_n c^n / ħ`
    pub fn number_operator(&self) -> CMatrix {
        let d = self.space_dim();
        self.creators
            .iter()
            .zip(&self.annihilators)
            .fold(CMatrix::zeros(d, d), |acc, (a, cn)| acc + a.mul(cn).to_dense() * c(1.0 / self.hbar))
    }
}

/// Sparse square matrix stored by columns; ladder operators have at most one
/// entry per column.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderOp {
    cols: Vec<Vec<(usize, Complex64)>>,
}

impl LadderOp {
    pub fn zeros(dim: usize) -> Self {
        LadderOp {
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        LadderOp {
            cols: (0..dim).map(|j| vec![(j, c(1.0))]).collect(),
        }
    }

    pub fn from_dense(m: &CMatrix) -> Self {
        let cols = (0..m.ncols())
            .map(|j| {
                (0..m.nrows())
                    .filter(|&i| m[(i, j)] != c(0.0))
                    .map(|i| (i, m[(i, j)]))
                    .collect()
            })
            .collect();
        LadderOp { cols }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Add `value` at `(row, col)`.
    pub fn insert(&mut self, row: usize, col: usize, value: Complex64) {
        match self.cols[col].iter_mut().find(|(r, _)| *r == row) {
            Some((_, v)) => *v += value,
            None => self.cols[col].push((row, value)),
        }
    }

    pub fn to_dense(&self) -> CMatrix {
        let n = self.dim();
        let mut m = CMatrix::zeros(n, n);
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                m[(i, j)] += v;
            }
        }
        m
    }

    pub fn apply(&self, v: &CVector) -> CVector {
        let mut out = CVector::zeros(self.dim());
        for (j, col) in self.cols.iter().enumerate() {
            let x = v[j];
            if x != c(0.0) {
                for &(i, a) in col {
                    out[i] += a * x;
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let mut out = LadderOp::zeros(self.dim());
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                out.insert(j, i, v.conj());
            }
        }
        out
    }

    /// `self · other`
    pub fn mul(&self, other: &LadderOp) -> Self {
        let mut out = LadderOp::zeros(self.dim());
        for (j, col) in other.cols.iter().enumerate() {
            for &(r, v) in col {
                for &(i, w) in &self.cols[r] {
                    out.insert(i, j, w * v);
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &LadderOp) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let mut out = LadderOp::zeros(n * m);
        for (j1, c1) in self.cols.iter().enumerate() {
            for &(i1, v1) in c1 {
                for (j2, c2) in other.cols.iter().enumerate() {
                    for &(i2, v2) in c2 {
                        out.cols[j1 * m + j2].push((i1 * m + i2, v1 * v2));
                    }
                }
            }
        }
        out
    }

    fn accumulate_col(&self, col: &[(usize, Complex64)], out: &mut BTreeMap<usize, Complex64>, s: Complex64) {
        for &(r, v) in col {
            for &(r2, w) in &self.cols[r] {
                *out.entry(r2).or_insert(c(0.0)) += w * v * s;
            }
        }
    }

    /// `max |(X Y - σ Y X - δ 1)_{ij}|` over the columns `j` flagged in `columns`.
    pub fn relation_defect(x: &LadderOp, y: &LadderOp, sigma: Complex64, delta: Complex64, columns: &[bool]) -> f64 {
        let mut worst = 0.0_f64;
        for (j, keep) in columns.iter().enumerate() {
            if !keep {
                continue;
            }
            let mut acc = BTreeMap::new();
            x.accumulate_col(&y.cols[j], &mut acc, c(1.0));
            y.accumulate_col(&x.cols[j], &mut acc, -sigma);
            *acc.entry(j).or_insert(c(0.0)) -= delta;
            worst = acc.values().fold(worst, |w, z| w.max(z.norm()));
        }
        worst
    }
}

pub fn quantify(statistics: Statistics, dim_v: usize, cutoff: usize, hbar: f64) -> Result<QuantifiedSystem> {
    quantify_capped(statistics, dim_v, cutoff, hbar, DEFAULT_DIM_CAP)
}

pub fn quantify_capped(
    statistics: Statistics,
    dim_v: usize,
    cutoff: usize,
    hbar: f64,
    cap: usize,
) -> Result<QuantifiedSystem> {
    let io = IoSpace::new(dim_v)?;
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::InvalidParameter(format!("hbar must be positive, got {hbar}")));
    }
    if statistics != Statistics::Fermi && cutoff == 0 {
        return Err(Error::InvalidParameter("cutoff must be >= 1".into()));
    }
    match statistics {
        Statistics::Bose => bose(io, cutoff, hbar, cap),
        Statistics::Fermi => fermi(io, hbar),
        Statistics::Maxwell => maxwell(io, cutoff, hbar, cap),
    }
}

fn bose(io: IoSpace, cutoff: usize, hbar: f64, cap: usize) -> Result<QuantifiedSystem> {
    let d = io.dim_v;
    let total = fock::sym_power_dim(d + 1, cutoff);
    let dim = fock::check_cap(total, cap)?;
    let basis = fock::occupations_upto(d, cutoff);
    debug_assert_eq!(basis.len(), dim);
    let index = fock::index_of(&basis);
    let mut creators = vec![LadderOp::zeros(dim); d];
    let mut annihilators = vec![LadderOp::zeros(dim); d];
    for (col, occ) in basis.iter().enumerate() {
        let n_tot: u32 = occ.iter().sum();
        for m in 0..d {
            if (n_tot as usize) < cutoff {
                let mut up = occ.clone();
                up[m] += 1;
                creators[m].insert(index[&up], col, c((up[m] as f64 * hbar).sqrt()));
            }
            if occ[m] > 0 {
                let mut down = occ.clone();
                down[m] -= 1;
                annihilators[m].insert(index[&down], col, c((occ[m] as f64 * hbar).sqrt()));
            }
        }
    }
    let exact = basis.iter().map(|o| (o.iter().sum::<u32>() as usize) < cutoff).collect();
    let mut vacuum = CVector::zeros(dim);
    vacuum[0] = c(1.0);
    Ok(QuantifiedSystem {
        statistics: Statistics::Bose,
        io,
        creators,
        annihilators,
        vacuum,
        cutoff: Some(cutoff),
        exact,
        hbar,
        occupations: Some(basis),
    })
}

/// Jordan-Wigner: `c^n = Z ⊗ ... ⊗ Z ⊗ s ⊗ 1 ⊗ ... ⊗ 1`, built by iterated
/// 2×2 tensor products; mode 0 is the most significant bit.
fn fermi(io: IoSpace, hbar: f64) -> Result<QuantifiedSystem> {
    let d = io.dim_v;
    if d > MAX_FERMI_MODES {
        return Err(Error::DimensionCap {
            dim: 1usize << d.min(usize::BITS as usize - 1),
            cap: 1 << MAX_FERMI_MODES,
        });
    }
    let id = LadderOp::identity(2);
    let z = LadderOp::from_dense(&CMatrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]));
    // |0> = e_0, |1> = e_1; s lowers 1 -> 0
    let s = LadderOp::from_dense(&CMatrix::from_row_slice(2, 2, &[c(0.0), c(hbar.sqrt()), c(0.0), c(0.0)]));
    let annihilators: Vec<LadderOp> = (0..d)
        .map(|n| {
            (0..d).fold(LadderOp::identity(1), |acc, j| {
                let f = match j.cmp(&n) {
                    std::cmp::Ordering::Less => &z,
                    std::cmp::Ordering::Equal => &s,
                    std::cmp::Ordering::Greater => &id,
                };
                acc.kron(f)
            })
        })
        .collect();
    let creators = annihilators.iter().map(|m| m.adjoint()).collect();
    let dim = 1usize << d;
    let occupations = (0..dim)
        .map(|i| (0..d).map(|j| ((i >> (d - 1 - j)) & 1) as u32).collect())
        .collect();
    let mut vacuum = CVector::zeros(dim);
    vacuum[0] = c(1.0);
    Ok(QuantifiedSystem {
        statistics: Statistics::Fermi,
        io,
        creators,
        annihilators,
        vacuum,
        cutoff: None,
        exact: vec![true; dim],
        hbar,
        occupations: Some(occupations),
    })
}

/// Free (tensor-algebra) statistics: words over the modes of length `<= cutoff`;
/// `a_n` prepends a letter and `c^n` removes a leading `n`.
fn maxwell(io: IoSpace, cutoff: usize, hbar: f64, cap: usize) -> Result<QuantifiedSystem> {
    let d = io.dim_v;
    let mut dim: Option<usize> = Some(0);
    let mut layer: Option<usize> = Some(1);
    for _ in 0..=cutoff {
        dim = dim.zip(layer).and_then(|(a, b)| a.checked_add(b));
        layer = layer.and_then(|l| l.checked_mul(d));
    }
    let dim = fock::check_cap(dim, cap)?;
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut start = 0;
    for _ in 0..cutoff {
        let end = words.len();
        for w in start..end {
            for n in 0..d {
                let mut next = vec![n];
                next.extend_from_slice(&words[w]);
                words.push(next);
            }
        }
        start = end;
    }
    debug_assert_eq!(words.len(), dim);
    let index: std::collections::HashMap<Vec<usize>, usize> =
        words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let amp = c(hbar.sqrt());
    let mut creators = vec![LadderOp::zeros(dim); d];
    for (col, w) in words.iter().enumerate() {
        if w.len() < cutoff {
            for (n, cr) in creators.iter_mut().enumerate() {
                let mut next = vec![n];
                next.extend_from_slice(w);
                cr.insert(index[&next], col, amp);
            }
        }
    }
    let annihilators = creators.iter().map(|m| m.adjoint()).collect();
    let exact = words.iter().map(|w| w.len() < cutoff).collect();
    let mut vacuum = CVector::zeros(dim);
    vacuum[0] = c(1.0);
    Ok(QuantifiedSystem {
        statistics: Statistics::Maxwell,
        io,
        creators,
        annihilators,
        vacuum,
        cutoff: Some(cutoff),
        exact,
        hbar,
        occupations: None,
    })
}

/// Worst violation of the defining relations, restricted to states where they
/// are meant to hold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationDefects {
    /// `c^n a_m - σ a_m c^n - ħ δ^n_m`
    pub mixed: f64,
    /// `c^n c^m - σ c^m c^n` (zero test skipped for σ = 0)
    pub annihilators: f64,
    /// `a_n a_m - σ a_m a_n` (zero test skipped for σ = 0)
    pub creators: f64,
}

impl RelationDefects {
    pub fn max(&self) -> f64 {
        self.mixed.max(self.annihilators).max(self.creators)
    }
}

pub fn relation_defects(sys: &QuantifiedSystem) -> RelationDefects {
    let sigma = c(sys.statistics.sigma());
    let d = sys.dim_v();
    let (a, cn) = (&sys.creators, &sys.annihilators);
    let all = vec![true; sys.space_dim()];
    let mut out = RelationDefects {
        mixed: 0.0,
        annihilators: 0.0,
        creators: 0.0,
    };
    for n in 0..d {
        for m in 0..d {
            let delta = if n == m { sys.hbar } else { 0.0 };
            out.mixed = out.mixed.max(LadderOp::relation_defect(&cn[n], &a[m], sigma, c(delta), &sys.exact));
            if sys.statistics != Statistics::Maxwell {
                let cc = LadderOp::relation_defect(&cn[n], &cn[m], sigma, c(0.0), &all);
                out.annihilators = out.annihilators.max(cc);
                let aa = LadderOp::relation_defect(&a[n], &a[m], sigma, c(0.0), &sys.exact);
                out.creators = out.creators.max(aa);
            }
        }
    }
    out
}

/// `<vac| φ_{i1} ... φ_{in} |vac>`
pub fn green_function(sys: &QuantifiedSystem, indices: &[usize]) -> Result<Complex64> {
    let mut v = sys.vacuum.clone();
    for &n in indices.iter().rev() {
        v = sys.field_apply(n, &v)?;
    }
    Ok(sys.vacuum.dotc(&v))
}

/// `Â = Σ_mn (A₁)_mn a_m c^n / ħ`
pub fn quantified_action(sys: &QuantifiedSystem, a1: &CMatrix) -> Result<CMatrix> {
    let d = sys.dim_v();
    if a1.nrows() != d || a1.ncols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: a1.nrows().max(a1.ncols()),
        });
    }
    if sys.statistics == Statistics::Bose {
        // number-conserving, so the truncated lift is exact
        let basis = sys.occupations.as_ref().expect("bosonic basis");
        return Ok(fock::lift_matrix(a1, basis, &fock::index_of(basis)));
    }
    let dim = sys.space_dim();
    let mut out = CMatrix::zeros(dim, dim);
    for m in 0..d {
        for n in 0..d {
            let w = a1[(m, n)];
            if w != c(0.0) {
                out += sys.creators[m].mul(&sys.annihilators[n]).to_dense() * (w / sys.hbar);
            }
        }
    }
    Ok(out)
}

/// Orthonormal basis of the span of all words of length `<= max_degree` in
/// `generators` applied to `vacuum`.
pub fn cyclic_subspace(generators: &[CMatrix], vacuum: &CVector, max_degree: usize) -> Vec<CVector> {
    cyclic_subspace_by(generators.len(), |g, v| &generators[g] * v, vacuum, max_degree)
}

/// [`cyclic_subspace`] with generators given by their action `apply(g, v)`.
pub fn cyclic_subspace_by<F>(n_gens: usize, apply: F, vacuum: &CVector, max_degree: usize) -> Vec<CVector>
where
    F: Fn(usize, &CVector) -> CVector,
{
    const TOL: f64 = 1e-10;
    let mut basis: Vec<CVector> = Vec::new();
    if let Some(v) = linalg::orthonormal_extend(&basis, vacuum, TOL) {
        basis.push(v);
    }
    let mut frontier = basis.clone();
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for v in &frontier {
            for g in 0..n_gens {
                if basis.len() == vacuum.len() {
                    return basis;
                }
                if let Some(w) = linalg::orthonormal_extend(&basis, &apply(g, v), TOL) {
                    basis.push(w.clone());
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    basis
}

pub fn system_cyclic_subspace(sys: &QuantifiedSystem, max_degree: usize) -> Vec<CVector> {
    let gens: Vec<&LadderOp> = sys.creators.iter().chain(&sys.annihilators).collect();
    cyclic_subspace_by(gens.len(), |g, v| gens[g].apply(v), &sys.vacuum, max_degree)
}

/// Simplified boson operators on the compact orthogonal algebra over axes
/// `1..N, X', Y'`: `q̂^n = δq L[n,X']`, `p̂_n = δp L[Y',n]`, `r̂ = δr L[X',Y']`,
/// `î = L[X',Y'] / l`.
#[derive(Debug, Clone)]
pub struct BosonOperators {
    pub q: Vec<CMatrix>,
    pub p: Vec<CMatrix>,
    pub r: CMatrix,
    pub i: CMatrix,
    /// `L[X',Y']`
    pub l_xy: CMatrix,
    pub qc: QuantumConstants,
    pub rep: Representation,
    pub kind: RepKind,
}

impl BosonOperators {
    pub fn modes(&self) -> usize {
        self.q.len()
    }

    pub fn frame(&self) -> &OrthogonalFrame {
        self.rep.frame().expect("boson representation has a frame")
    }

    /// `L_mn` between mode axes.
    pub fn rotation(&self, m: usize, n: usize) -> CMatrix {
        self.rep.orthogonal_generator(m, n).expect("frame present")
    }

    /// `max_{m,n} ‖[q̂^m, p̂_n] - δq δp δ^m_n L_{X'Y'}‖_max`
    pub fn ccr_defect(&self) -> f64 {
        let s = self.qc.delta_q * self.qc.delta_p;
        let mut worst = 0.0_f64;
        for m in 0..self.modes() {
            for n in 0..self.modes() {
                let mut d = linalg::commutator(&self.q[m], &self.p[n]);
                if m == n {
                    d -= &self.l_xy * c(s);
                }
                worst = worst.max(linalg::max_abs(&d));
            }
        }
        worst
    }

    /// `‖[q̂^m, q̂^n]‖_max`, which equals `δq² ‖L_mn‖_max`.
    pub fn regulator(&self, m: usize, n: usize) -> f64 {
        linalg::max_abs(&linalg::commutator(&self.q[m], &self.q[n]))
    }
}

pub fn simplified_boson(n_modes: usize, qc: &QuantumConstants, kind: RepKind) -> Result<BosonOperators> {
    simplified_boson_capped(n_modes, qc, kind, DEFAULT_DIM_CAP)
}

pub fn simplified_boson_capped(
    n_modes: usize,
    qc: &QuantumConstants,
    kind: RepKind,
    cap: usize,
) -> Result<BosonOperators> {
    let frame = boson_frame(n_modes)?;
    let l = kind.extreme_weight();
    if let Some(two_l) = qc.two_l {
        if two_l as usize != 2 * l {
            return Err(Error::Constraint(format!(
                "representation has l = {l} but constants were built for l = {}",
                two_l as f64 / 2.0
            )));
        }
    }
    qc.validate()?;
    let rep = build_rep(&frame, &format!("so({})", n_modes + 2), kind, cap)?;
    let (x, y) = (n_modes, n_modes + 1);
    let g = |a, b| rep.orthogonal_generator(a, b);
    let q = (0..n_modes)
        .map(|n| g(n, x).map(|m| m * c(qc.delta_q)))
        .collect::<Result<Vec<_>>>()?;
    let p = (0..n_modes)
        .map(|n| g(y, n).map(|m| m * c(qc.delta_p)))
        .collect::<Result<Vec<_>>>()?;
    let l_xy = g(x, y)?;
    Ok(BosonOperators {
        q,
        p,
        r: &l_xy * c(qc.delta_r),
        i: &l_xy * c(1.0 / l as f64),
        l_xy,
        qc: *qc,
        rep,
        kind,
    })
}
