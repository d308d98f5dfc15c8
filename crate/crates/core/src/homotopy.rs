//! Contraction / simplification homotopies realized as monomial diagonal scalings.
//!
//! A generator `e_a` is rescaled to `s^w_a e_a`, so the structure tensor along the
//! path is `c_s[a][b][k] = s^(w_a + w_b - w_k) c[a][b][k]`. Every `s > 0` is an
//! isomorphic copy of the simple algebra at `s = 1`; `s = 0` is the limit.

use crate::algebra::{catalog, LieAlgebra, DEFAULT_RANK_TOL};
use crate::error::{Error, Result};
use crate::linalg;
use crate::orthogonal::{OrthogonalFrame, Signature};

/// Per-generator exponents `w_a` of the weights `s^w_a`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerScaling(pub Vec<f64>);

#[derive(Debug, Clone)]
pub struct HomotopyPath {
    name: String,
    base: LieAlgebra,
    scaling: PowerScaling,
    s1: f64,
    endpoint_singular: LieAlgebra,
    endpoint_simple_family: String,
    regulator_pairs: Vec<(usize, usize)>,
}

/// Scale `alg` by `s^w` per generator. Rejects scalings whose limit diverges.
pub fn scaling_contraction(alg: &LieAlgebra, scaling: PowerScaling) -> Result<HomotopyPath> {
    let n = alg.dim();
    let w = &scaling.0;
    if w.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: w.len(),
        });
    }
    if let Some(bad) = w.iter().find(|x| !x.is_finite() || **x < 0.0) {
        return Err(Error::InvalidScaling(bad.to_string()));
    }
    let mut limit = vec![0.0; n * n * n];
    for a in 0..n {
        for b in 0..n {
            for k in 0..n {
                let v = alg.c(a, b, k);
                if v == 0.0 {
                    continue;
                }
                let e = w[a] + w[b] - w[k];
                if e < 0.0 {
                    return Err(Error::DivergentScaling {
                        a: alg.basis()[a].clone(),
                        b: alg.basis()[b].clone(),
                        k: alg.basis()[k].clone(),
                        exponent: e,
                    });
                }
                if e == 0.0 {
                    limit[a * n * n + b * n + k] = v;
                }
            }
        }
    }
    let endpoint =
        LieAlgebra::from_tensor(&format!("{} (s=0)", alg.name()), alg.basis(), limit)?;
    Ok(HomotopyPath {
        name: format!("scaling of {}", alg.name()),
        base: alg.clone(),
        scaling,
        s1: 1.0,
        endpoint_singular: endpoint,
        endpoint_simple_family: alg.name().to_string(),
        regulator_pairs: Vec::new(),
    })
}

impl HomotopyPath {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn s_range(&self) -> (f64, f64) {
        (0.0, self.s1)
    }

    pub fn endpoint_singular(&self) -> &LieAlgebra {
        &self.endpoint_singular
    }

    pub fn endpoint_simple_family(&self) -> &str {
        &self.endpoint_simple_family
    }

    pub fn scaling(&self) -> &PowerScaling {
        &self.scaling
    }

    pub fn basis(&self) -> &[String] {
        self.base.basis()
    }

    /// Pairs whose bracket is the regulator term that dies at `s = 0`.
    pub fn regulator_pairs(&self) -> &[(usize, usize)] {
        &self.regulator_pairs
    }

    /// Scaling exponent of a tensor entry.
    pub fn entry_exponent(&self, a: usize, b: usize, k: usize) -> f64 {
        let w = &self.scaling.0;
        w[a] + w[b] - w[k]
    }

    pub fn evaluate(&self, s: f64) -> Result<LieAlgebra> {
        if !(0.0..=self.s1).contains(&s) {
            return Err(Error::InvalidParameter(format!(
                "s = {s} outside [0, {}]",
                self.s1
            )));
        }
        if s == 0.0 {
            return Ok(self.endpoint_singular.clone());
        }
        let n = self.base.dim();
        let mut t = vec![0.0; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for k in 0..n {
                    let v = self.base.c(a, b, k);
                    if v != 0.0 {
                        let e = self.entry_exponent(a, b, k);
                        t[a * n * n + b * n + k] = if e == 0.0 { v } else { v * s.powf(e) };
                    }
                }
            }
        }
        LieAlgebra::from_tensor(
            &format!("{} (s={s})", self.base.name()),
            self.base.basis(),
            t,
        )
    }

    fn with_meta(mut self, name: &str, family: &str, singular_name: &str) -> Self {
        self.name = name.to_string();
        self.endpoint_simple_family = family.to_string();
        self.endpoint_singular = self.endpoint_singular.with_name(singular_name);
        self
    }
}

/// Segal's path from `dH(1)` to `so(3)` (compact) or `so(2,1)` (split) with
/// weights `(s, s, s^2)` on `(q, p, r)`.
pub fn segal_path(signature: Signature) -> Result<HomotopyPath> {
    let split = match signature {
        Signature::Compact => false,
        Signature::Split => true,
        Signature::Minkowski => {
            return Err(Error::UnknownSignature(
                "5-1 (segal path takes compact or split)".into(),
            ))
        }
    };
    let base = catalog::cyclic_qpr(split);
    let family = base.name().to_string();
    Ok(
        scaling_contraction(&base, PowerScaling(vec![1.0, 1.0, 2.0]))?
            .with_meta("segal", &family, "dH(1)"),
    )
}

/// Labels of the space-time path basis: `L[μ,ν]`, `x0..x3`, `p0..p3`, `r`.
pub fn stime_labels() -> Vec<String> {
    let frame = OrthogonalFrame::six(Signature::Compact);
    let mut labels: Vec<String> = Vec::with_capacity(15);
    for a in 0..4 {
        for b in (a + 1)..4 {
            labels.push(frame.label(a, b));
        }
    }
    labels.extend((0..4).map(|m| format!("x{m}")));
    labels.extend((0..4).map(|m| format!("p{m}")));
    labels.push("r".into());
    labels
}

/// Path from the 15-dimensional singular space-time algebra to the orthogonal
/// algebra on axes `0, 1, 2, 3, X, Y`, identifying `x^μ = η^μμ L_μX`,
/// `p_μ = L_Yμ`, `r = L_XY`, with weights `1, s, s, s^2`.
pub fn stime_path(signature: Signature) -> Result<HomotopyPath> {
    let frame = OrthogonalFrame::six(signature);
    let so = frame.algebra(&format!("so({signature})"));
    let eta = frame.metric();
    let (x, y) = (4, 5);
    let mut sources = Vec::with_capacity(15);
    for a in 0..4 {
        for b in (a + 1)..4 {
            sources.push(frame.index(a, b).expect("distinct axes"));
        }
    }
    for m in 0..4 {
        let (i, s) = frame.index(m, x).expect("distinct axes");
        sources.push((i, s * eta[m]));
    }
    for m in 0..4 {
        sources.push(frame.index(y, m).expect("distinct axes"));
    }
    sources.push(frame.index(x, y).expect("distinct axes"));
    let base = so.signed_permutation(so.name(), &stime_labels(), &sources)?;
    let mut w = vec![0.0; 6];
    w.extend([1.0; 8]);
    w.push(2.0);
    Ok(scaling_contraction(&base, PowerScaling(w))?.with_meta(
        "stime",
        &format!("so({signature})"),
        "Lie(x, p, L, r)",
    ))
}

/// Labels and signed sources of the boson path basis:
/// `q1..qN, p1..pN, r, L[m,n]` over the axes `1..N, X', Y'`.
fn boson_basis(frame: &OrthogonalFrame, n_modes: usize) -> (Vec<String>, Vec<(usize, f64)>) {
    let (x, y) = (n_modes, n_modes + 1);
    let mut labels = Vec::new();
    let mut sources = Vec::new();
    for m in 0..n_modes {
        labels.push(format!("q{}", m + 1));
        sources.push(frame.index(m, x).expect("distinct"));
    }
    for m in 0..n_modes {
        labels.push(format!("p{}", m + 1));
        sources.push(frame.index(y, m).expect("distinct"));
    }
    labels.push("r".into());
    sources.push(frame.index(x, y).expect("distinct"));
    for a in 0..n_modes {
        for b in (a + 1)..n_modes {
            labels.push(frame.label(a, b));
            sources.push(frame.index(a, b).expect("distinct"));
        }
    }
    (labels, sources)
}

/// Axes `1..N, X', Y'` with a Euclidean metric.
pub fn boson_frame(n_modes: usize) -> Result<OrthogonalFrame> {
    if n_modes < 1 {
        return Err(Error::NoModes);
    }
    let mut axes: Vec<String> = (1..=n_modes).map(|m| m.to_string()).collect();
    axes.push("X'".into());
    axes.push("Y'".into());
    OrthogonalFrame::new(&axes, &vec![1.0; n_modes + 2])
}

/// Contraction of `so(N+2)` onto `N` canonical pairs sharing one central `r`;
/// the rotations `L[m,n]` decouple at `s = 0`.
pub fn boson_path(n_modes: usize) -> Result<HomotopyPath> {
    let frame = boson_frame(n_modes)?;
    let so = frame.algebra(&format!("so({})", n_modes + 2));
    let (labels, sources) = boson_basis(&frame, n_modes);
    let base = so.signed_permutation(so.name(), &labels, &sources)?;
    let mut w = vec![1.0; 2 * n_modes];
    w.push(2.0);
    w.resize(base.dim(), 0.0);
    let mut path = scaling_contraction(&base, PowerScaling(w))?.with_meta(
        "boson",
        so.name(),
        &format!("dH({n_modes}) + rotations"),
    );
    path.regulator_pairs = (0..n_modes)
        .flat_map(|a| ((a + 1)..n_modes).map(move |b| (a, b)))
        .collect();
    Ok(path)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathRow {
    pub s: f64,
    pub jacobi_defect: f64,
    pub killing_rank: usize,
    pub center_dim: usize,
    pub distance_to_singular: f64,
    /// Max-norm of the regulator brackets, for paths that declare them.
    pub regulator: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathReport {
    pub path: String,
    pub rows: Vec<PathRow>,
}

impl PathReport {
    pub fn max_jacobi(&self) -> f64 {
        self.rows.iter().fold(0.0, |a, r| a.max(r.jacobi_defect))
    }
}

/// Sample the path at `samples` evenly spaced points including both ends.
pub fn path_report(path: &HomotopyPath, samples: usize) -> Result<PathReport> {
    if samples < 2 {
        return Err(Error::InvalidParameter("path report needs at least 2 samples".into()));
    }
    let (_, s1) = path.s_range();
    let singular = path.endpoint_singular();
    let rows = (0..samples)
        .map(|i| {
            let s = if i + 1 == samples {
                s1
            } else {
                s1 * i as f64 / (samples - 1) as f64
            };
            let alg = path.evaluate(s)?;
            let cls = alg.classify(DEFAULT_RANK_TOL);
            let regulator = if path.regulator_pairs.is_empty() {
                None
            } else {
                let n = alg.dim();
                let mut worst = 0.0_f64;
                for &(a, b) in &path.regulator_pairs {
                    for k in 0..n {
                        worst = worst.max(alg.c(a, b, k).abs());
                    }
                }
                Some(worst)
            };
            Ok(PathRow {
                s,
                jacobi_defect: cls.defects["jacobi"],
                killing_rank: cls.killing_rank,
                center_dim: cls.center_dim,
                distance_to_singular: crate::algebra::structure_distance(&alg, singular)?,
                regulator,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PathReport {
        path: path.name().to_string(),
        rows,
    })
}

pub type EntryRate = ((usize, usize, usize), f64);

/// Fitted log-log rate of every tensor entry that vanishes at `s = 0` but not
/// along the path, as `((a, b, k), slope)`.
pub fn vanishing_entry_rates(path: &HomotopyPath, s_values: &[f64]) -> Result<Vec<EntryRate>> {
    let singular = path.endpoint_singular();
    let algs = s_values
        .iter()
        .map(|&s| path.evaluate(s))
        .collect::<Result<Vec<_>>>()?;
    let n = singular.dim();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for k in 0..n {
                if singular.c(a, b, k) != 0.0 {
                    continue;
                }
                let diffs: Vec<f64> = algs.iter().map(|l| (l.c(a, b, k) - singular.c(a, b, k)).abs()).collect();
                if diffs.iter().all(|&d| d > 0.0) {
                    out.push(((a, b, k), linalg::log_log_slope(s_values, &diffs)));
                }
            }
        }
    }
    Ok(out)
}
