//! Orthogonal algebras `so(p, q)` on labelled axes with a diagonal metric.
//!
//! Generators are `L[a,b]` for `a < b`, with one-quantum matrices
//! `(L_ab)^g_d = eta_bd delta^g_a - eta_ad delta^g_b` and brackets
//! `[L_ab, L_cd] = eta_bc L_ad - eta_ac L_bd - eta_bd L_ac + eta_ad L_bc`.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};

/// Metric signature of the six-axis space (and, for the Segal path, of the
/// three-generator cyclic algebra).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Signature {
    Compact,
    /// diag(-, +, +, +, +, +), axis 0 timelike
    Minkowski,
    /// diag(-, -, -, +, +, +)
    Split,
}

impl Signature {
    /// Metric on the axes `0, 1, 2, 3, X, Y`.
    pub fn metric6(self) -> [f64; 6] {
        match self {
            Signature::Compact => [1.0; 6],
            Signature::Minkowski => [-1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
            Signature::Split => [-1.0, -1.0, -1.0, 1.0, 1.0, 1.0],
        }
    }

    pub fn is_compact(self) -> bool {
        self == Signature::Compact
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compact" => Ok(Signature::Compact),
            "5-1" | "minkowski" => Ok(Signature::Minkowski),
            "3-3" | "split" => Ok(Signature::Split),
            other => Err(Error::UnknownSignature(other.to_string())),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Signature::Compact => "compact",
            Signature::Minkowski => "5-1",
            Signature::Split => "3-3",
        })
    }
}

/// Axis labels, metric, and the ordered list of generator index pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalFrame {
    axes: Vec<String>,
    metric: Vec<f64>,
    pairs: Vec<(usize, usize)>,
}

impl OrthogonalFrame {
    pub fn new<S: AsRef<str>>(axes: &[S], metric: &[f64]) -> Result<Self> {
        if axes.len() != metric.len() {
            return Err(Error::DimensionMismatch {
                expected: axes.len(),
                got: metric.len(),
            });
        }
        if axes.len() < 2 {
            return Err(Error::InvalidParameter("need at least two axes".into()));
        }
        if metric.iter().any(|&e| e != 1.0 && e != -1.0) {
            return Err(Error::InvalidParameter("metric entries must be +1 or -1".into()));
        }
        let m = axes.len();
        let pairs = (0..m).flat_map(|a| ((a + 1)..m).map(move |b| (a, b))).collect();
        Ok(OrthogonalFrame {
            axes: axes.iter().map(|a| a.as_ref().to_string()).collect(),
            metric: metric.to_vec(),
            pairs,
        })
    }

    /// `so(p, q)` on axes `0..p+q`, negative entries first.
    pub fn pq(p: usize, q: usize) -> Result<Self> {
        let axes: Vec<String> = (0..p + q).map(|i| i.to_string()).collect();
        let metric: Vec<f64> = (0..p + q).map(|i| if i < q { -1.0 } else { 1.0 }).collect();
        Self::new(&axes, &metric)
    }

    /// The six axes `0, 1, 2, 3, X, Y` with the given signature.
    pub fn six(sig: Signature) -> Self {
        Self::new(&["0", "1", "2", "3", "X", "Y"], &sig.metric6()).expect("valid frame")
    }

    pub fn axes(&self) -> &[String] {
        &self.axes
    }

    pub fn metric(&self) -> &[f64] {
        &self.metric
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn n_axes(&self) -> usize {
        self.axes.len()
    }

    pub fn n_generators(&self) -> usize {
        self.pairs.len()
    }

    pub fn axis(&self, label: &str) -> Result<usize> {
        self.axes
            .iter()
            .position(|a| a == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn label(&self, a: usize, b: usize) -> String {
        format!("L[{},{}]", self.axes[a], self.axes[b])
    }

    pub fn labels(&self) -> Vec<String> {
        self.pairs.iter().map(|&(a, b)| self.label(a, b)).collect()
    }

    /// Generator index and sign with `L_ab = sign * L[idx]`; `None` when `a == b`.
    pub fn index(&self, a: usize, b: usize) -> Option<(usize, f64)> {
        if a == b {
            return None;
        }
        let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
        let m = self.axes.len();
        // pairs are ordered lexicographically
        let idx = lo * m - lo * (lo + 1) / 2 + (hi - lo - 1);
        Some((idx, sign))
    }

    /// Structure tensor of the orthogonal algebra from the closed-form bracket.
    pub fn algebra(&self, name: &str) -> LieAlgebra {
        let n = self.pairs.len();
        let eta = &self.metric;
        let d = |i: usize, j: usize| if i == j { eta[i] } else { 0.0 };
        let mut t = vec![0.0; n * n * n];
        for (x, &(a, b)) in self.pairs.iter().enumerate() {
            for (y, &(cc, dd)) in self.pairs.iter().enumerate() {
                let terms = [
                    (d(b, cc), a, dd),
                    (-d(a, cc), b, dd),
                    (-d(b, dd), a, cc),
                    (d(a, dd), b, cc),
                ];
                for (coef, i, j) in terms {
                    if coef == 0.0 {
                        continue;
                    }
                    if let Some((k, sign)) = self.index(i, j) {
                        t[x * n * n + y * n + k] += coef * sign;
                    }
                }
            }
        }
        LieAlgebra::from_tensor(name, &self.labels(), t).expect("labels are distinct")
    }

    /// One-quantum (defining) matrix of `L_ab` for arbitrary ordered `a != b`.
    pub fn defining_matrix(&self, a: usize, b: usize) -> DMatrix<f64> {
        let m = self.axes.len();
        let mut out = DMatrix::zeros(m, m);
        if a != b {
            out[(a, b)] += self.metric[b];
            out[(b, a)] -= self.metric[a];
        }
        out
    }

    pub fn defining_matrices(&self) -> Vec<DMatrix<f64>> {
        self.pairs
            .iter()
            .map(|&(a, b)| self.defining_matrix(a, b))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_real;

    #[test]
    fn pair_index_is_lexicographic() {
        let f = OrthogonalFrame::pq(5, 0).unwrap();
        for (i, &(a, b)) in f.pairs().iter().enumerate() {
            assert_eq!(f.index(a, b), Some((i, 1.0)));
            assert_eq!(f.index(b, a), Some((i, -1.0)));
        }
        assert_eq!(f.index(2, 2), None);
    }

    #[test]
    fn closed_form_matches_matrix_commutators() {
        for (p, q) in [(3, 0), (2, 1), (5, 1), (3, 3)] {
            let f = OrthogonalFrame::pq(p, q).unwrap();
            let alg = f.algebra("so");
            let mats = f.defining_matrices();
            let n = mats.len();
            for x in 0..n {
                for y in 0..n {
                    let mut lhs = &mats[x] * &mats[y] - &mats[y] * &mats[x];
                    for k in 0..n {
                        lhs -= &mats[k] * alg.c(x, y, k);
                    }
                    assert!(max_abs_real(&lhs) < 1e-15, "so({p},{q}) pair {x},{y}");
                }
            }
            assert_eq!(alg.jacobi_defect(), 0.0);
        }
    }

    #[test]
    fn signature_tags() {
        assert_eq!("5-1".parse::<Signature>().unwrap(), Signature::Minkowski);
        assert_eq!("split".parse::<Signature>().unwrap(), Signature::Split);
        assert!("4-2".parse::<Signature>().is_err());
    }
}
