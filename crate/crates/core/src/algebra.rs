//! Finite-dimensional Lie algebras given by dense structure tensors.
//!
//! A [`LieAlgebra`] stores `c[a][b][k]` with `[e_a, e_b] = sum_k c[a][b][k] e_k`.
//! Sparse bracket lists are accepted on input and completed antisymmetrically.

use std::collections::HashMap;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Tolerance under which two bracket entries for the same slot are considered equal.
const ENTRY_TOL: f64 = 1e-12;

/// Default relative singular-value threshold for ranks.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Behaviour of a generator under the theory's `†` involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dagger {
    Hermitian,
    AntiHermitian,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    structure: Vec<f64>,
    dagger: Option<Vec<Dagger>>,
}

/// One sparse bracket entry `[a, b] ∋ value * k`.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketEntry {
    pub a: String,
    pub b: String,
    pub k: String,
    pub value: f64,
}

impl<A: Into<String>, B: Into<String>, K: Into<String>> From<(A, B, K, f64)> for BracketEntry {
    fn from((a, b, k, value): (A, B, K, f64)) -> Self {
        BracketEntry {
            a: a.into(),
            b: b.into(),
            k: k.into(),
            value,
        }
    }
}

fn check_labels<S: AsRef<str>>(basis: &[S]) -> Result<(Vec<String>, HashMap<String, usize>)> {
    let mut index = HashMap::with_capacity(basis.len());
    let mut labels = Vec::with_capacity(basis.len());
    for (i, l) in basis.iter().enumerate() {
        let l = l.as_ref().to_string();
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l));
        }
        labels.push(l);
    }
    Ok((labels, index))
}

/// Build an algebra from sparse bracket entries, completing antisymmetrically.
pub fn make_algebra<S, E>(name: &str, basis: &[S], entries: &[E]) -> Result<LieAlgebra>
where
    S: AsRef<str>,
    E: Clone + Into<BracketEntry>,
{
    let (labels, index) = check_labels(basis)?;
    let n = labels.len();
    let lookup = |l: &str| index.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.into()));
    let mut tensor = vec![0.0; n * n * n];
    let mut set = vec![false; n * n * n];
    for e in entries {
        let e: BracketEntry = e.clone().into();
        let (a, b, k) = (lookup(&e.a)?, lookup(&e.b)?, lookup(&e.k)?);
        let contradiction = |existing: f64| Error::Contradiction {
            a: e.a.clone(),
            b: e.b.clone(),
            k: e.k.clone(),
            existing,
            new: e.value,
        };
        if a == b {
            if e.value.abs() > ENTRY_TOL {
                return Err(contradiction(0.0));
            }
            continue;
        }
        for (slot, v) in [(a * n * n + b * n + k, e.value), (b * n * n + a * n + k, -e.value)] {
            if set[slot] && (tensor[slot] - v).abs() > ENTRY_TOL {
                let existing = if slot == a * n * n + b * n + k {
                    tensor[slot]
                } else {
                    -tensor[slot]
                };
                return Err(contradiction(existing));
            }
            tensor[slot] = v;
            set[slot] = true;
        }
    }
    Ok(LieAlgebra {
        name: name.to_string(),
        basis: labels,
        structure: tensor,
        dagger: None,
    })
}

impl LieAlgebra {
    /// Wrap a dense tensor without canonicalization. Used for derived algebras
    /// (scalings, basis changes) and for deliberately malformed test tensors.
    pub fn from_tensor<S: AsRef<str>>(name: &str, basis: &[S], tensor: Vec<f64>) -> Result<Self> {
        let (labels, _) = check_labels(basis)?;
        let n = labels.len();
        if tensor.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                got: tensor.len(),
            });
        }
        Ok(LieAlgebra {
            name: name.to_string(),
            basis: labels,
            structure: tensor,
            dagger: None,
        })
    }

    pub fn with_dagger(mut self, dagger: Vec<Dagger>) -> Result<Self> {
        if dagger.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: dagger.len(),
            });
        }
        self.dagger = Some(dagger);
        Ok(self)
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn dagger(&self) -> Option<&[Dagger]> {
        self.dagger.as_deref()
    }

    pub fn tensor(&self) -> &[f64] {
        &self.structure
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    #[inline]
    pub fn c(&self, a: usize, b: usize, k: usize) -> f64 {
        let n = self.dim();
        self.structure[a * n * n + b * n + k]
    }

    /// Unit coefficient vector of the basis element `label`.
    pub fn unit(&self, label: &str) -> Result<Vec<f64>> {
        let mut v = vec![0.0; self.dim()];
        v[self.index_of(label)?] = 1.0;
        Ok(v)
    }

    /// `[u, v]` in coefficient form.
    pub fn bracket(&self, u: &[f64], v: &[f64]) -> Result<Vec<f64>> {
        let n = self.dim();
        for len in [u.len(), v.len()] {
            if len != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: len,
                });
            }
        }
        let mut out = vec![0.0; n];
        for (a, &ua) in u.iter().enumerate() {
            if ua == 0.0 {
                continue;
            }
            for (b, &vb) in v.iter().enumerate() {
                if vb == 0.0 {
                    continue;
                }
                let w = ua * vb;
                for (k, o) in out.iter_mut().enumerate() {
                    *o += w * self.c(a, b, k);
                }
            }
        }
        Ok(out)
    }

    /// Bracket of two basis elements by label.
    pub fn bracket_labels(&self, a: &str, b: &str) -> Result<Vec<f64>> {
        self.bracket(&self.unit(a)?, &self.unit(b)?)
    }

    /// Max-norm of the cyclic Jacobi sum over all basis triples.
    pub fn jacobi_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    for m in 0..n {
                        let mut s = 0.0;
                        for k in 0..n {
                            s += self.c(a, b, k) * self.c(k, d, m)
                                + self.c(b, d, k) * self.c(k, a, m)
                                + self.c(d, a, k) * self.c(k, b, m);
                        }
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    /// Max-norm of the symmetric part `(c[a][b][k] + c[b][a][k]) / 2`.
    pub fn antisymmetry_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0_f64;
        for a in 0..n {
            for b in 0..n {
                for k in 0..n {
                    worst = worst.max(0.5 * (self.c(a, b, k) + self.c(b, a, k)).abs());
                }
            }
        }
        worst
    }

    /// Real adjoint matrices, `(ad_a)[k][b] = c[a][b][k]`.
    pub fn adjoint_matrices(&self) -> Vec<DMatrix<f64>> {
        let n = self.dim();
        (0..n)
            .map(|a| DMatrix::from_fn(n, n, |k, b| self.c(a, b, k)))
            .collect()
    }

    /// `K[a][b] = tr(ad_a ad_b)`.
    pub fn killing_form(&self) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |a, b| {
            let mut s = 0.0;
            for j in 0..n {
                for k in 0..n {
                    s += self.c(a, j, k) * self.c(b, k, j);
                }
            }
            s
        })
    }

    pub fn classify(&self, tol: f64) -> ClassificationReport {
        let n = self.dim();
        // entries of tr(ad_a ad_b) are sums of n^2 products of structure constants
        let c_max = self.tensor().iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        let killing_rank = linalg::rank_with_scale(&self.killing_form(), tol, (n * n) as f64 * c_max * c_max);
        // rows (b, k), columns a: x is central iff sum_a x_a c[a][b][k] = 0 for all b, k
        let stacked = DMatrix::from_fn(n * n, n, |row, a| self.c(a, row / n, row % n));
        let center_dim = n - linalg::rank(&stacked, tol);
        let brackets = DMatrix::from_fn(n * n, n, |row, k| self.c(row / n, row % n, k));
        let derived_dim = linalg::rank(&brackets, tol);
        let mut defects = std::collections::BTreeMap::new();
        defects.insert("antisymmetry".to_string(), self.antisymmetry_defect());
        defects.insert("jacobi".to_string(), self.jacobi_defect());
        ClassificationReport {
            killing_rank,
            center_dim,
            derived_dim,
            semisimple: n > 0 && killing_rank == n,
            defects,
        }
    }

    /// The same algebra in a seeded random basis (condition number at most 10).
    pub fn random_basis(&self, seed: u64) -> Result<LieAlgebra> {
        self.change_basis(&linalg::seeded_well_conditioned(self.dim(), 10.0, seed))
    }

    /// Structure tensor in the basis `e'_i = sum_a m[a][i] e_a`.
    pub fn change_basis(&self, m: &DMatrix<f64>) -> Result<LieAlgebra> {
        let n = self.dim();
        if m.nrows() != n || m.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: m.nrows(),
            });
        }
        let inv = m
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::InvalidParameter("basis change is singular".into()))?;
        // first contract the output index, then the two inputs
        let mut out_k = vec![0.0; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for l in 0..n {
                    let mut s = 0.0;
                    for k in 0..n {
                        s += inv[(l, k)] * self.c(a, b, k);
                    }
                    out_k[a * n * n + b * n + l] = s;
                }
            }
        }
        let mut tmp = vec![0.0; n * n * n];
        for i in 0..n {
            for b in 0..n {
                for l in 0..n {
                    let mut s = 0.0;
                    for a in 0..n {
                        s += m[(a, i)] * out_k[a * n * n + b * n + l];
                    }
                    tmp[i * n * n + b * n + l] = s;
                }
            }
        }
        let mut out = vec![0.0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let mut s = 0.0;
                    for b in 0..n {
                        s += m[(b, j)] * tmp[i * n * n + b * n + l];
                    }
                    out[i * n * n + j * n + l] = s;
                }
            }
        }
        let mut alg = LieAlgebra::from_tensor(&self.name, &self.basis, out)?;
        alg.dagger = self.dagger.clone();
        Ok(alg)
    }

    /// New basis `e'_i = sign_i * e[src_i]` with the given labels.
    pub fn signed_permutation<S: AsRef<str>>(
        &self,
        name: &str,
        labels: &[S],
        sources: &[(usize, f64)],
    ) -> Result<LieAlgebra> {
        let n = self.dim();
        if labels.len() != n || sources.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: sources.len(),
            });
        }
        let mut seen = vec![false; n];
        for &(src, sign) in sources {
            if src >= n || seen[src] || (sign != 1.0 && sign != -1.0) {
                return Err(Error::InvalidParameter("not a signed permutation".into()));
            }
            seen[src] = true;
        }
        let mut out = vec![0.0; n * n * n];
        for (i, &(a, sa)) in sources.iter().enumerate() {
            for (j, &(b, sb)) in sources.iter().enumerate() {
                for (l, &(k, sk)) in sources.iter().enumerate() {
                    out[i * n * n + j * n + l] = sa * sb * sk * self.c(a, b, k);
                }
            }
        }
        LieAlgebra::from_tensor(name, labels, out)
    }

    /// Copy with one basis label renamed.
    pub fn relabel(&self, from: &str, to: &str) -> Result<LieAlgebra> {
        let i = self.index_of(from)?;
        let mut basis = self.basis.clone();
        basis[i] = to.to_string();
        check_labels(&basis)?;
        Ok(LieAlgebra {
            basis,
            ..self.clone()
        })
    }

    /// Tensor re-indexed onto the basis order `labels` (which must be a permutation).
    pub fn reordered<S: AsRef<str>>(&self, labels: &[S]) -> Result<LieAlgebra> {
        let n = self.dim();
        if labels.len() != n {
            return Err(Error::BasisMismatch(self.name.clone(), "reordering".into()));
        }
        let perm = labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .map_err(|_| Error::BasisMismatch(self.name.clone(), l.as_ref().into()))
            })
            .collect::<Result<Vec<_>>>()?;
        check_labels(labels)?;
        let mut out = vec![0.0; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for k in 0..n {
                    out[a * n * n + b * n + k] = self.c(perm[a], perm[b], perm[k]);
                }
            }
        }
        Ok(LieAlgebra {
            name: self.name.clone(),
            basis: labels.iter().map(|l| l.as_ref().to_string()).collect(),
            structure: out,
            dagger: self
                .dagger
                .as_ref()
                .map(|d| perm.iter().map(|&p| d[p]).collect()),
        })
    }
}

/// Max-norm of the tensor difference after aligning `b` onto the basis order of `a`.
pub fn structure_distance(a: &LieAlgebra, b: &LieAlgebra) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::BasisMismatch(a.name.clone(), b.name.clone()));
    }
    let aligned = b
        .reordered(a.basis())
        .map_err(|_| Error::BasisMismatch(a.name.clone(), b.name.clone()))?;
    Ok(a
        .structure
        .iter()
        .zip(&aligned.structure)
        .fold(0.0_f64, |acc, (x, y)| acc.max((x - y).abs())))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub killing_rank: usize,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub semisimple: bool,
    pub defects: std::collections::BTreeMap<String, f64>,
}

/// `[a, b, [[k, value], ...]]`: the expansion of `[a, b]`.
pub type BracketLine = (String, String, Vec<(String, f64)>);

/// On-disk algebra definition.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketLine>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dagger: Option<Vec<String>>,
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<LieAlgebra> {
        let entries: Vec<BracketEntry> = self
            .brackets
            .iter()
            .flat_map(|(a, b, terms)| {
                terms.iter().map(move |(k, v)| BracketEntry {
                    a: a.clone(),
                    b: b.clone(),
                    k: k.clone(),
                    value: *v,
                })
            })
            .collect();
        let alg = make_algebra(&self.name, &self.basis, &entries)?;
        match self.dagger {
            None => Ok(alg),
            Some(tags) => {
                let dagger = tags
                    .iter()
                    .map(|t| match t.as_str() {
                        "+" => Ok(Dagger::Hermitian),
                        "-" => Ok(Dagger::AntiHermitian),
                        other => Err(Error::Parse(format!("dagger tag `{other}`"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                alg.with_dagger(dagger)
            }
        }
    }

    pub fn from_algebra(alg: &LieAlgebra) -> Self {
        let n = alg.dim();
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                let terms: Vec<(String, f64)> = (0..n)
                    .filter(|&k| alg.c(a, b, k) != 0.0)
                    .map(|k| (alg.basis[k].clone(), alg.c(a, b, k)))
                    .collect();
                if !terms.is_empty() {
                    brackets.push((alg.basis[a].clone(), alg.basis[b].clone(), terms));
                }
            }
        }
        AlgebraFile {
            name: alg.name.clone(),
            basis: alg.basis.clone(),
            brackets,
            dagger: alg.dagger.as_ref().map(|d| {
                d.iter()
                    .map(|x| match x {
                        Dagger::Hermitian => "+".to_string(),
                        Dagger::AntiHermitian => "-".to_string(),
                    })
                    .collect()
            }),
        }
    }
}

pub fn parse_algebra(json: &str) -> Result<LieAlgebra> {
    let file: AlgebraFile = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_algebra()
}

pub fn algebra_to_json(alg: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(alg)).expect("algebra file serializes")
}

/// Frequently used algebras.
pub mod catalog {
    use super::*;

    /// `dH(1)`: `[q, p] = r`, `r` central.
    pub fn heisenberg() -> LieAlgebra {
        make_algebra("dH(1)", &["q", "p", "r"], &[("q", "p", "r", 1.0)]).expect("valid")
    }

    /// `dH(n)` on `q1..qn, p1..pn, r`.
    pub fn heisenberg_n(n: usize) -> LieAlgebra {
        let mut basis: Vec<String> = (1..=n).map(|i| format!("q{i}")).collect();
        basis.extend((1..=n).map(|i| format!("p{i}")));
        basis.push("r".into());
        let entries: Vec<BracketEntry> = (1..=n)
            .map(|i| (format!("q{i}"), format!("p{i}"), "r".to_string(), 1.0).into())
            .collect();
        make_algebra(&format!("dH({n})"), &basis, &entries).expect("valid")
    }

    /// `so(3)` with `[J1, J2] = J3` and cyclic.
    pub fn so3() -> LieAlgebra {
        make_algebra(
            "so(3)",
            &["J1", "J2", "J3"],
            &[
                ("J1", "J2", "J3", 1.0),
                ("J2", "J3", "J1", 1.0),
                ("J3", "J1", "J2", 1.0),
            ],
        )
        .expect("valid")
    }

    /// `so(3)` or `so(2,1)` on the labels `(q, p, r)`; the split form flips `[r, q]`.
    pub fn cyclic_qpr(split: bool) -> LieAlgebra {
        let (name, rq) = if split { ("so(2,1)", -1.0) } else { ("so(3)", 1.0) };
        make_algebra(
            name,
            &["q", "p", "r"],
            &[("q", "p", "r", 1.0), ("p", "r", "q", 1.0), ("r", "q", "p", rq)],
        )
        .expect("valid")
    }

    pub fn abelian(n: usize) -> LieAlgebra {
        let basis: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        make_algebra::<_, BracketEntry>(&format!("R^{n}"), &basis, &[]).expect("valid")
    }

    /// Direct sum with labels prefixed `a.` and `b.`.
    pub fn direct_sum(x: &LieAlgebra, y: &LieAlgebra) -> LieAlgebra {
        let (n, m) = (x.dim(), y.dim());
        let d = n + m;
        let mut basis: Vec<String> = x.basis().iter().map(|l| format!("a.{l}")).collect();
        basis.extend(y.basis().iter().map(|l| format!("b.{l}")));
        let mut t = vec![0.0; d * d * d];
        for a in 0..n {
            for b in 0..n {
                for k in 0..n {
                    t[a * d * d + b * d + k] = x.c(a, b, k);
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                for k in 0..m {
                    t[(a + n) * d * d + (b + n) * d + k + n] = y.c(a, b, k);
                }
            }
        }
        LieAlgebra::from_tensor(&format!("{}+{}", x.name(), y.name()), &basis, t).expect("valid")
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;

    #[test]
    fn heisenberg_bracket() {
        let h = heisenberg();
        assert_eq!(h.bracket_labels("q", "p").unwrap(), vec![0.0, 0.0, 1.0]);
        assert_eq!(h.bracket_labels("p", "q").unwrap(), vec![0.0, 0.0, -1.0]);
        assert_eq!(h.antisymmetry_defect(), 0.0);
        assert_eq!(h.jacobi_defect(), 0.0);
    }

    #[test]
    fn so3_bilinearity() {
        let l = so3();
        // [J1 + J2, J1] = [J2, J1] = -J3
        let out = l.bracket(&[1.0, 1.0, 0.0], &[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(out, vec![0.0, 0.0, -1.0]);
        let u = [0.3, -1.2, 2.0];
        assert!(l.bracket(&u, &u).unwrap().iter().all(|x| x.abs() < 1e-15));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            make_algebra("x", &["q", "q"], &[("q", "q", "q", 0.0)]),
            Err(Error::DuplicateLabel("q".into()))
        );
        assert!(matches!(
            make_algebra("x", &["q", "p"], &[("q", "z", "p", 1.0)]),
            Err(Error::UnknownLabel(_))
        ));
        assert!(matches!(
            make_algebra(
                "x",
                &["q", "p", "r"],
                &[("q", "p", "r", 1.0), ("p", "q", "r", 1.0)]
            ),
            Err(Error::Contradiction { .. })
        ));
        // consistent restatement is fine
        assert!(make_algebra(
            "x",
            &["q", "p", "r"],
            &[("q", "p", "r", 1.0), ("p", "q", "r", -1.0)]
        )
        .is_ok());
        assert!(matches!(
            heisenberg().bracket(&[1.0], &[1.0, 0.0, 0.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn jacobi_detects_broken_antisymmetric_tensor() {
        // c[1][2][3] raised to 1.1 while c[2][1][3] stays -1: the triple (J1, J2, J1)
        // gives 1.1 [J3, J1] - [J3, J1] = 0.1 J2.
        let mut t = so3().tensor().to_vec();
        t[5] = 1.1;
        let bad = LieAlgebra::from_tensor("bad", &["J1", "J2", "J3"], t).unwrap();
        assert!((bad.jacobi_defect() - 0.1).abs() < 1e-12);
        assert!((bad.antisymmetry_defect() - 0.05).abs() < 1e-12);
    }

    #[test]
    fn antisymmetry_defect_half_scale() {
        let n = 3;
        let mut t = vec![0.0; n * n * n];
        t[5] = 1.0; // c[0][1][2] = 1, c[1][0][2] = 0
        let alg = LieAlgebra::from_tensor("half", &["a", "b", "c"], t).unwrap();
        assert_eq!(alg.antisymmetry_defect(), 0.5);
    }

    #[test]
    fn killing_forms() {
        let k = so3().killing_form();
        assert!((k - DMatrix::identity(3, 3) * -2.0).abs().max() < 1e-15);
        assert_eq!(heisenberg().killing_form(), DMatrix::zeros(3, 3));
        assert_eq!(abelian(4).killing_form(), DMatrix::zeros(4, 4));
    }

    #[test]
    fn adjoint_matrices_read_off_tensor() {
        let ad = heisenberg().adjoint_matrices();
        // ad_q maps p -> r and kills everything else
        let mut expect = DMatrix::zeros(3, 3);
        expect[(2, 1)] = 1.0;
        assert_eq!(ad[0], expect);
        for m in so3().adjoint_matrices() {
            assert_eq!(m.transpose(), -m.clone());
        }
        assert!(abelian(2).adjoint_matrices().iter().all(|m| m.iter().all(|&x| x == 0.0)));
    }

    #[test]
    fn classification_examples() {
        let r = so3().classify(DEFAULT_RANK_TOL);
        assert_eq!((r.killing_rank, r.center_dim, r.derived_dim, r.semisimple), (3, 0, 3, true));
        let r = heisenberg().classify(DEFAULT_RANK_TOL);
        assert_eq!((r.killing_rank, r.center_dim, r.derived_dim, r.semisimple), (0, 1, 1, false));
        let r = direct_sum(&so3(), &so3()).classify(DEFAULT_RANK_TOL);
        assert!(r.semisimple);
        assert_eq!(r.killing_rank, 6);
        let r = cyclic_qpr(true).classify(DEFAULT_RANK_TOL);
        assert!(r.semisimple);
    }

    #[test]
    fn distance_aligns_labels() {
        let h = heisenberg();
        assert_eq!(structure_distance(&h, &h).unwrap(), 0.0);
        let shuffled = h.reordered(&["r", "q", "p"]).unwrap();
        assert_eq!(structure_distance(&h, &shuffled).unwrap(), 0.0);
        assert!(structure_distance(&h, &so3()).is_err());
        assert_eq!(structure_distance(&h, &cyclic_qpr(false)).unwrap(), 1.0);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"name": "dH(1)", "basis": ["q","p","r"], "brackets": [["q","p",[["r",1.0]]]], "dagger": ["-","-","-"]}"#;
        let alg = parse_algebra(text).unwrap();
        assert_eq!(structure_distance(&alg, &heisenberg()).unwrap(), 0.0);
        assert_eq!(alg.dagger().unwrap()[0], Dagger::AntiHermitian);
        let again = parse_algebra(&algebra_to_json(&alg)).unwrap();
        assert_eq!(again, alg);
        assert!(matches!(parse_algebra("{"), Err(Error::Parse(_))));
    }
}
