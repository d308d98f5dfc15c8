//! Occupation-number bases and second-quantized lifts of one-quantum matrices.
//!
//! `dΓ(A) = Σ_ij A_ij a_i† a_j` acting on normalized occupation states. Restricted
//! to total occupation `k` this is the Leibniz action on the symmetric power.

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{c, CMatrix};

pub type Occupation = Vec<u32>;

/// `C(n, k)` or `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Dimension of the `k`-th symmetric power of a `d`-dimensional space.
pub fn sym_power_dim(d: usize, k: usize) -> Option<usize> {
    if d == 0 {
        return Some(usize::from(k == 0));
    }
    binomial(d + k - 1, k)
}

/// All occupations of `modes` modes with total exactly `total`, the first mode
/// filled most heavily first.
pub fn occupations_exact(modes: usize, total: usize) -> Vec<Occupation> {
    fn rec(modes: usize, total: u32, prefix: &mut Occupation, out: &mut Vec<Occupation>) {
        if prefix.len() + 1 == modes {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for n in (0..=total).rev() {
            prefix.push(n);
            rec(modes, total - n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if modes == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(modes, total as u32, &mut Vec::with_capacity(modes), &mut out);
    out
}

/// All occupations with total `<= cutoff`, ordered by total then as in [`occupations_exact`].
pub fn occupations_upto(modes: usize, cutoff: usize) -> Vec<Occupation> {
    (0..=cutoff).flat_map(|t| occupations_exact(modes, t)).collect()
}

pub fn index_of(basis: &[Occupation]) -> HashMap<Occupation, usize> {
    basis.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect()
}

/// Sparse state over occupations. Ordered so that iteration is deterministic.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FockVector(pub BTreeMap<Occupation, Complex64>);

impl FockVector {
    pub fn basis(occ: Occupation) -> Self {
        let mut m = BTreeMap::new();
        m.insert(occ, c(1.0));
        FockVector(m)
    }

    /// `(Σ u_i a_i†)^k |0> / sqrt(k!)`, the symmetric product state `u^{⊗k}`.
    pub fn product_state(u: &[Complex64], k: usize) -> Self {
        let support: Vec<usize> = (0..u.len()).filter(|&i| u[i] != c(0.0)).collect();
        let mut out = BTreeMap::new();
        let ln_fact = |n: usize| (1..=n).map(|x| (x as f64).ln()).sum::<f64>();
        for occ in occupations_exact(support.len(), k) {
            let mut full = vec![0u32; u.len()];
            let mut amp = c((0.5 * (ln_fact(k) - occ.iter().map(|&n| ln_fact(n as usize)).sum::<f64>())).exp());
            for (&i, &n) in support.iter().zip(&occ) {
                full[i] = n;
                amp *= u[i].powu(n);
            }
            out.insert(full, amp);
        }
        FockVector(out)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.values().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `<self|other>`
    pub fn dot(&self, other: &FockVector) -> Complex64 {
        let (small, large, conj_small) = if self.0.len() <= other.0.len() {
            (self, other, true)
        } else {
            (other, self, false)
        };
        small
            .0
            .iter()
            .filter_map(|(k, a)| large.0.get(k).map(|b| if conj_small { a.conj() * b } else { b.conj() * a }))
            .sum()
    }

    pub fn scaled(&self, s: Complex64) -> FockVector {
        FockVector(self.0.iter().map(|(k, v)| (k.clone(), v * s)).collect())
    }

    pub fn add_scaled(&mut self, other: &FockVector, s: Complex64) {
        for (k, v) in &other.0 {
            *self.0.entry(k.clone()).or_insert(c(0.0)) += v * s;
        }
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_scaled(other, c(-1.0));
        out
    }

    /// Drop exact zeros.
    pub fn pruned(mut self) -> Self {
        self.0.retain(|_, v| *v != c(0.0));
        self
    }
}

/// `dΓ(A) |v>` without materializing the operator.
pub fn lift_apply(a: &CMatrix, v: &FockVector) -> FockVector {
    let d = a.nrows();
    let mut out: BTreeMap<Occupation, Complex64> = BTreeMap::new();
    for (occ, amp) in &v.0 {
        for j in 0..d {
            let nj = occ[j];
            if nj == 0 {
                continue;
            }
            for i in 0..d {
                let aij = a[(i, j)];
                if aij == c(0.0) {
                    continue;
                }
                let mut next = occ.clone();
                next[j] -= 1;
                let ni = next[i];
                next[i] += 1;
                let coef = ((nj as f64) * (ni as f64 + 1.0)).sqrt();
                *out.entry(next).or_insert(c(0.0)) += aij * amp * coef;
            }
        }
    }
    FockVector(out).pruned()
}

/// Dense matrix of `dΓ(A)` on a number-conserving basis.
pub fn lift_matrix(a: &CMatrix, basis: &[Occupation], index: &HashMap<Occupation, usize>) -> CMatrix {
    let dim = basis.len();
    let mut out = CMatrix::zeros(dim, dim);
    for (col, occ) in basis.iter().enumerate() {
        let image = lift_apply(a, &FockVector::basis(occ.clone()));
        for (k, v) in image.0 {
            let row = index[&k];
            out[(row, col)] += v;
        }
    }
    out
}

/// Guard for materializing a sector of the given dimension.
pub fn check_cap(dim: Option<usize>, cap: usize) -> Result<usize> {
    match dim {
        Some(d) if d <= cap => Ok(d),
        Some(d) => Err(Error::DimensionCap { dim: d, cap }),
        None => Err(Error::DimensionCap { dim: usize::MAX, cap }),
    }
}
