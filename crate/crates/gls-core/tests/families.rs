use std::sync::Arc;

use gls_core::algebra::Algebra;
use gls_core::catalog::by_name;
use gls_core::decomposition::{folded_decomposition, generic_field, rigid_of_rank};
use gls_core::families::{bc1_algebra, bc1_v, eta_brick_sample, lambda_grid};
use gls_core::rep::{dim_hom, ext1_dim, hom_basis, is_isomorphic, Representation};
use gls_core::roots::root_system;
use gls_core::seeds::stream;
use gls_linalg::Field;
use rand::Rng;

#[test]
fn family_isomorphism_classes_on_the_grid() {
    let alg = bc1_algebra();
    let f = Field::prime(101).unwrap();
    let grid = lambda_grid();
    for &l in &grid {
        let v = bc1_v(&alg, f, l).unwrap();
        for &m in &grid {
            let w = bc1_v(&alg, f, m).unwrap();
            let same = l.same_as(m, f) || l.same_as(-m, f);
            assert_eq!(is_isomorphic(&v, &w, 5).is_isomorphic(), same, "{l} {m}");
        }
    }
}

#[test]
fn decomposition_is_seed_independent() {
    for name in ["BC1", "C2", "A1"] {
        let e = by_name(name).unwrap();
        let mut rng = stream(11, name);
        for k in 0..30 {
            let v: Vec<i64> = loop {
                let v: Vec<i64> = (0..e.quiver.vertices).map(|_| rng.gen_range(0..=6)).collect();
                if v.iter().any(|&x| x > 0) {
                    break v;
                }
            };
            let a = folded_decomposition(&e, &v, 2 * k).unwrap();
            let b = folded_decomposition(&e, &v, 2 * k + 1).unwrap();
            assert_eq!((a.m, &a.w, &a.summands), (b.m, &b.w, &b.summands), "{name} {v:?}");
            a.check(&e.quiver).unwrap();
        }
    }
}

#[test]
fn real_schur_roots_decompose_trivially() {
    let e = by_name("BC1").unwrap();
    let q = &e.quiver;
    for v in q.positive_real_roots_below(&[5, 9]) {
        let qv = q.tits_form(&v).unwrap();
        if !q.symmetrizer.iter().any(|&c| c as i64 == qv) {
            continue;
        }
        let r = folded_decomposition(&e, &v, 3).unwrap();
        assert_eq!((r.m, &r.w), (0, &v), "{v:?}");
        assert_eq!(r.summands, vec![(v.clone(), 1)], "{v:?}");
    }
}

/// Regular τ-rigid quasi-simples are Hom- and Ext-orthogonal to η-bricks.
#[test]
fn regular_rigid_is_orthogonal_to_eta_bricks() {
    let e = by_name("C2").unwrap();
    let alg = Arc::new(Algebra::gls(&e.quiver).unwrap());
    let f = generic_field();
    let data = root_system(&e).unwrap();
    for t in &data.tubes {
        for v in &t.quasi_simples {
            let w = rigid_of_rank(&alg, f, v, 1).unwrap();
            for seed in 0..5 {
                let (b, report) = eta_brick_sample(&e, f, seed).unwrap();
                assert!(report.passed(&e.null_root));
                let b = Representation {
                    algebra: alg.clone(),
                    ..b
                };
                assert_eq!(dim_hom(&w, &b), 0);
                assert_eq!(dim_hom(&b, &w), 0);
                assert_eq!(ext1_dim(&w, &b).unwrap(), 0);
                assert_eq!(ext1_dim(&b, &w).unwrap(), 0);
            }
        }
    }
}

/// In a rank-3 tube, the rigid module on v_k + v_{k-1} maps onto the one on
/// v_{k-1} with kernel the one on v_k.
#[test]
fn truncated_tube_sequences() {
    let e = by_name("C3").unwrap();
    let alg = Arc::new(Algebra::gls(&e.quiver).unwrap());
    let f = generic_field();
    let data = root_system(&e).unwrap();
    let tube = data.tubes.iter().find(|t| t.rank == 3).expect("rank 3 tube");
    for k in 0..3 {
        let big = rigid_of_rank(&alg, f, &tube.root(k, 2), 1).unwrap();
        let top = rigid_of_rank(&alg, f, &tube.quasi_simples[(k + 2) % 3], 2).unwrap();
        let bottom = rigid_of_rank(&alg, f, &tube.quasi_simples[k], 3).unwrap();
        let surjection = hom_basis(&big, &top)
            .into_iter()
            .find(|g| g.iter().zip(&top.dims).all(|(m, &d)| m.rank() == d))
            .expect("a surjection");
        let kernel: Vec<_> = surjection.iter().map(|m| m.kernel_basis()).collect();
        let k_mod = big.restrict(&kernel).unwrap();
        assert!(is_isomorphic(&k_mod, &bottom, 4).is_isomorphic(), "k = {k}");
    }
}
