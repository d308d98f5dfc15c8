use std::sync::Arc;

use approx::assert_relative_eq;
use gq_core::algebra::DEFAULT_RANK_TOL;
use gq_core::homotopy::{boson_path, segal_path, stime_path};
use gq_core::linalg::{self, to_complex};
use gq_core::representations::{char_poly_invariants, so3_irrep};
use gq_core::{catalog, LieAlgebra, Representation, Signature};
use proptest::prelude::*;

fn algebras() -> Vec<LieAlgebra> {
    vec![
        catalog::so3(),
        catalog::heisenberg(),
        catalog::heisenberg_n(2),
        catalog::cyclic_qpr(true),
        catalog::abelian(3),
        catalog::direct_sum(&catalog::so3(), &catalog::heisenberg()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classification_is_basis_independent(which in 0usize..6, seed in any::<u64>()) {
        let alg = &algebras()[which];
        let a = alg.classify(DEFAULT_RANK_TOL);
        let b = alg.random_basis(seed).unwrap().classify(DEFAULT_RANK_TOL);
        prop_assert_eq!(a.killing_rank, b.killing_rank);
        prop_assert_eq!(a.center_dim, b.center_dim);
        prop_assert_eq!(a.derived_dim, b.derived_dim);
        prop_assert_eq!(a.semisimple, b.semisimple);
    }

    #[test]
    fn killing_form_is_covariant(which in 0usize..6, seed in any::<u64>()) {
        let alg = &algebras()[which];
        let m = linalg::seeded_well_conditioned(alg.dim(), 10.0, seed);
        let moved = alg.change_basis(&m).unwrap().killing_form();
        let expected = m.transpose() * alg.killing_form() * &m;
        let scale = linalg::max_abs_real(&expected).max(1.0);
        prop_assert!(linalg::max_abs_real(&(moved - expected)) <= 1e-10 * scale);
    }

    #[test]
    fn jacobi_holds_along_paths(s in 0.0f64..=1.0, which in 0usize..5) {
        let path = match which {
            0 => segal_path(Signature::Compact),
            1 => segal_path(Signature::Split),
            2 => stime_path(Signature::Compact),
            3 => stime_path(Signature::Minkowski),
            _ => boson_path(2),
        }
        .unwrap();
        let alg = path.evaluate(s).unwrap();
        prop_assert!(alg.jacobi_defect() <= 1e-12);
        prop_assert!(alg.antisymmetry_defect() <= 1e-12);
    }

    #[test]
    fn char_poly_is_conjugation_invariant(
        two_l in 1u32..7,
        coeffs in prop::array::uniform3(-1.0f64..1.0),
        seed in any::<u64>(),
    ) {
        let rep = so3_irrep(two_l);
        let g = to_complex(&linalg::seeded_well_conditioned(rep.dim_rep(), 10.0, seed));
        let g_inv = g.clone().try_inverse().unwrap();
        let conj: Vec<_> = rep.matrices().iter().map(|x| &g * x * &g_inv).collect();
        let moved = Representation::new(Arc::new(rep.algebra().clone()), conj).unwrap();
        let a = char_poly_invariants(&rep, &coeffs).unwrap();
        let b = char_poly_invariants(&moved, &coeffs).unwrap();
        prop_assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).norm() <= 1e-8 * (1.0 + x.norm()));
        }
    }
}

#[test]
fn killing_form_of_so3_is_minus_two() {
    let k = catalog::so3().killing_form();
    for i in 0..3 {
        for j in 0..3 {
            assert_relative_eq!(k[(i, j)], if i == j { -2.0 } else { 0.0 }, epsilon = 1e-14);
        }
    }
}
