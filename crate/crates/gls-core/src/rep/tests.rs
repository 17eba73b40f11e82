use std::sync::Arc;

use gls_linalg::{Field, Matrix};

use super::*;
use crate::algebra::Algebra;
use crate::catalog::by_name;

fn bc1() -> Arc<Algebra> {
    Arc::new(Algebra::gls(&by_name("BC1").unwrap().quiver).unwrap())
}

fn f101() -> Field {
    Field::prime(101).unwrap()
}

#[test]
fn bc1_projectives_and_injectives() {
    let a = bc1();
    let q = Field::Rational;
    let p0 = projective(&a, q, 0).unwrap();
    let p1 = projective(&a, q, 1).unwrap();
    assert_eq!(p0.dims, vec![4, 0]);
    assert_eq!(p1.dims, vec![4, 1]);
    assert!(p0.is_valid() && p1.is_valid());
    assert_eq!(p1.rank_vector(), Some(vec![1, 1]));
    let i0 = injective(&a, q, 0).unwrap();
    let i1 = injective(&a, q, 1).unwrap();
    assert_eq!(i0.dims, vec![4, 4]);
    assert_eq!(i1.dims, vec![0, 1]);
    assert!(i0.is_valid() && i1.is_valid());
    assert_eq!(i0.rank_vector(), Some(vec![1, 4]));
}

#[test]
fn hom_from_projective_is_vertex_space() {
    let a = bc1();
    let q = Field::Rational;
    let i0 = injective(&a, q, 0).unwrap();
    for s in 0..2 {
        let p = projective(&a, q, s).unwrap();
        assert_eq!(dim_hom(&p, &i0), i0.dims[s]);
    }
}

#[test]
fn generalized_simple_is_free_rank_one() {
    let a = bc1();
    let e = generalized_simple(&a, Field::Rational, 0);
    assert!(e.is_valid());
    assert_eq!(e.rank_vector(), Some(vec![1, 0]));
    assert_eq!(simple(&a, Field::Rational, 0).rank_vector(), None);
}

#[test]
fn validate_reports_broken_loop() {
    let a = bc1();
    let q = Field::Rational;
    let mut e = generalized_simple(&a, q, 0);
    let l = a.loop_at(0).unwrap();
    e.maps[l] = Matrix::identity(q, 4);
    let bad = e.validate();
    assert!(matches!(bad[0], Violation::ZeroPath { vertex: 0, .. }));
}

#[test]
fn presentation_of_simple() {
    let a = bc1();
    let s1 = simple(&a, Field::Rational, 1);
    let pres = minimal_presentation(&s1).unwrap();
    assert_eq!(pres.g_vector(), vec![-1, 1]);
    assert!(presentation_is_exact(&s1, &pres));
}

#[test]
fn translate_of_projective_vanishes() {
    let a = bc1();
    for s in 0..2 {
        let p = projective(&a, Field::Rational, s).unwrap();
        assert!(ar_translate(&p).unwrap().is_zero());
        let i = injective(&a, Field::Rational, s).unwrap();
        assert!(ar_inverse(&i).unwrap().is_zero());
    }
}

#[test]
fn translate_follows_coxeter_on_ranks() {
    let a = bc1();
    let i1 = injective(&a, Field::Rational, 1).unwrap();
    let t = ar_translate(&i1).unwrap();
    assert!(Arc::ptr_eq(&t.algebra, &a) || t.algebra.as_ref() == a.as_ref());
    assert!(t.is_valid());
    assert_eq!(t.rank_vector(), Some(vec![1, 3]));
    let back = ar_inverse(&t).unwrap();
    assert!(is_isomorphic(&back, &i1, 1).is_isomorphic());
}

#[test]
fn ext_agrees_with_euler_shortcut() {
    let a = bc1();
    let f = f101();
    let mods = [
        projective(&a, f, 1).unwrap(),
        injective(&a, f, 0).unwrap(),
        generalized_simple(&a, f, 0),
        random_locally_free(&a, f, &[1, 2], 3).unwrap(),
    ];
    for v in &mods {
        for w in &mods {
            assert_eq!(Some(ext1_dim(v, w).unwrap()), ext1_dim_euler(v, w));
        }
    }
}

#[test]
fn random_locally_free_has_requested_rank() {
    let a = bc1();
    let v = random_locally_free(&a, f101(), &[2, 3], 9).unwrap();
    assert!(v.is_valid());
    assert_eq!(v.rank_vector(), Some(vec![2, 3]));
    let w = random_locally_free(&a, f101(), &[2, 3], 9).unwrap();
    assert_eq!(v.maps, w.maps);
}

#[test]
fn krull_schmidt_splits_sum() {
    let a = bc1();
    let f = f101();
    let v = projective(&a, f, 0)
        .unwrap()
        .direct_sum(&projective(&a, f, 1).unwrap())
        .direct_sum(&simple(&a, f, 1));
    let parts = krull_schmidt(&v, 5).unwrap();
    let dims: Vec<Vec<usize>> = parts.iter().map(|p| p.dims.clone()).collect();
    assert_eq!(dims, vec![vec![0, 1], vec![4, 0], vec![4, 1]]);
}

#[test]
fn random_module_is_valid() {
    let a = bc1();
    let m = random_module(&a, f101(), &[1, 1], 2, 4).unwrap();
    assert!(m.is_valid());
}

#[test]
fn json_round_trip() {
    let a = bc1();
    let v = random_locally_free(&a, Field::Rational, &[1, 1], 2).unwrap();
    let back = Representation::from_json(a.clone(), &v.to_json()).unwrap();
    assert_eq!(back.maps, v.maps);
}

#[test]
fn dual_lives_over_opposite() {
    let a = bc1();
    let p = projective(&a, Field::Rational, 1).unwrap();
    let d = p.dual();
    assert!(d.is_valid());
    assert!(Arc::ptr_eq(&d.dual().algebra, &a));
}
