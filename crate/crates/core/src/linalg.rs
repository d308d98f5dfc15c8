//! Small dense helpers over `nalgebra` used throughout the crate.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

pub fn anticommutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b + b * a
}

/// Largest absolute entry.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

pub fn max_abs_real(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
}

pub fn to_complex(m: &DMatrix<f64>) -> CMatrix {
    m.map(c)
}

/// Numerical rank with a threshold relative to the largest singular value.
pub fn rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    rank_with_scale(m, rel_tol, 0.0)
}

/// Like [`rank`], but the threshold never drops below `rel_tol * scale`, so a
/// matrix that is pure roundoff at magnitude `scale` has rank 0.
pub fn rank_with_scale(m: &DMatrix<f64>, rel_tol: f64, scale: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let top = sv.iter().cloned().fold(0.0_f64, f64::max).max(scale);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * top).count()
}

pub fn hermitian_defect(m: &CMatrix) -> f64 {
    max_abs(&(m - m.adjoint()))
}

pub fn anti_hermitian_defect(m: &CMatrix) -> f64 {
    max_abs(&(m + m.adjoint()))
}

/// Eigenvalues of a general complex square matrix, read off the complex Schur form.
pub fn eigenvalues(m: &CMatrix) -> Vec<Complex64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let (_, t) = m.clone().schur().unpack();
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

/// Real eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let h = (m + m.adjoint()) * c(0.5);
    let mut ev: Vec<f64> = h.symmetric_eigenvalues().iter().cloned().collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let h = (m + m.adjoint()) * c(0.5);
    let eig = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let vals = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = CMatrix::from_columns(
        &order
            .iter()
            .map(|&i| eig.eigenvectors.column(i).into_owned())
            .collect::<Vec<_>>(),
    );
    (vals, vecs)
}

/// Coefficients `c[0..=n]` of `prod_i (x_i - z)` as a polynomial in `z`.
pub fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = vec![c(1.0)];
    for &r in roots {
        let mut next = vec![c(0.0); coeffs.len() + 1];
        for (n, &a) in coeffs.iter().enumerate() {
            next[n] += a * r;
            next[n + 1] -= a;
        }
        coeffs = next;
    }
    coeffs
}

/// `<u|M|v>`
pub fn sandwich(u: &CVector, m: &CMatrix, v: &CVector) -> Complex64 {
    u.dotc(&(m * v))
}

/// Modified Gram-Schmidt step: orthogonalize `v` against `basis` (twice) and
/// return the normalized remainder if it is not negligible.
pub fn orthonormal_extend(basis: &[CVector], v: &CVector, tol: f64) -> Option<CVector> {
    let scale = v.norm();
    if scale == 0.0 {
        return None;
    }
    let mut w = v.clone();
    for _ in 0..2 {
        for b in basis {
            let proj = b.dotc(&w);
            w -= b * proj;
        }
    }
    let n = w.norm();
    if n > tol * scale.max(1.0) {
        Some(w / c(n))
    } else {
        None
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

/// Condition number `σ_max / σ_min` (infinite when singular).
pub fn condition_number(m: &DMatrix<f64>) -> f64 {
    let sv = m.clone().svd(false, false).singular_values;
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Random real `n×n` matrix `1 + 0.5 G` (entries of `G` uniform in `[-1, 1]`),
/// redrawn until its condition number is at most `max_cond`.
pub fn random_well_conditioned<R: rand::Rng>(n: usize, max_cond: f64, rng: &mut R) -> DMatrix<f64> {
    loop {
        let g = DMatrix::from_fn(n, n, |i, j| {
            let x: f64 = rng.random_range(-1.0..=1.0);
            if i == j { 1.0 + 0.5 * x } else { 0.5 * x }
        });
        if condition_number(&g) <= max_cond {
            return g;
        }
    }
}

/// [`random_well_conditioned`] drawn from a ChaCha8 stream seeded with `seed`.
pub fn seeded_well_conditioned(n: usize, max_cond: f64, seed: u64) -> DMatrix<f64> {
    use rand::SeedableRng;
    random_well_conditioned(n, max_cond, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundoff_matrix_has_zero_rank_at_scale() {
        let noise = DMatrix::from_fn(3, 3, |i, j| if i == j { 1e-17 * (i + 1) as f64 } else { 0.0 });
        assert_eq!(rank(&noise, 1e-9), 3);
        assert_eq!(rank_with_scale(&noise, 1e-9, 1.0), 0);
        assert_eq!(rank_with_scale(&DMatrix::identity(3, 3), 1e-9, 1.0), 3);
    }

    #[test]
    fn poly_from_roots_matches_expansion() {
        // (1 - z)(2 - z) = 2 - 3z + z^2
        let p = poly_from_roots(&[c(1.0), c(2.0)]);
        assert_eq!(p, vec![c(2.0), c(-3.0), c(1.0)]);
    }

    #[test]
    fn rank_of_zero_is_zero() {
        assert_eq!(rank(&DMatrix::zeros(3, 3), 1e-9), 0);
        assert_eq!(rank(&DMatrix::identity(3, 3), 1e-9), 3);
    }

    #[test]
    fn schur_eigenvalues_of_triangular() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1.0), c(5.0), c(0.0), c(-2.0)]);
        let mut ev: Vec<f64> = eigenvalues(&m).iter().map(|z| z.re).collect();
        ev.sort_by(|a, b| a.total_cmp(b));
        assert!((ev[0] + 2.0).abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn slope_of_power_law() {
        let xs = [1.0, 2.0, 4.0, 8.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x.powi(2)).collect();
        assert!((log_log_slope(&xs, &ys) - 2.0).abs() < 1e-12);
    }
}
