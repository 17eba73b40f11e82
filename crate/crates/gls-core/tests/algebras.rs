use std::sync::Arc;

use gls_core::algebra::Algebra;
use gls_core::catalog::{by_name, representatives};
use gls_core::rep::{dim_hom, projective, random_module};
use gls_core::unfold::unfold;
use gls_linalg::Field;
use proptest::prelude::*;

#[test]
fn loop_corners_have_dimension_c() {
    for e in representatives(5) {
        let a = Algebra::gls(&e.quiver).unwrap();
        for i in 0..a.vertices {
            assert_eq!(
                a.corner(i, i).len(),
                e.quiver.symmetrizer[i] as usize,
                "{} vertex {i}",
                e.name()
            );
        }
    }
}

#[test]
fn unfolded_null_root_is_the_lift() {
    for e in representatives(6) {
        let u = unfold(&e.quiver).unwrap();
        assert_eq!(u.quiver.null_root().unwrap(), u.lift(&e.null_root), "{}", e.name());
    }
}

#[test]
fn projectives_validate_and_represent_vertices() {
    let f = Field::prime(101).unwrap();
    for name in ["BC1", "C2", "B2", "G21"] {
        let a = Arc::new(Algebra::gls(&by_name(name).unwrap().quiver).unwrap());
        let ps: Vec<_> = (0..a.vertices).map(|i| projective(&a, f, i).unwrap()).collect();
        for p in &ps {
            assert!(p.is_valid());
        }
        for seed in 0..5 {
            let tops: Vec<usize> = (0..a.vertices).map(|i| (i + seed as usize) % 2).collect();
            let v = random_module(&a, f, &tops, 1, seed).unwrap();
            for (i, p) in ps.iter().enumerate() {
                assert_eq!(dim_hom(p, &v), v.dims[i]);
            }
        }
    }
}

fn multiply(a: &Algebra, x: usize, y: usize, z: usize) -> bool {
    let xy = a.concat(&a.basis_element(x), &a.basis_element(y));
    let yz = a.concat(&a.basis_element(y), &a.basis_element(z));
    a.concat(&xy, &a.basis_element(z)) == a.concat(&a.basis_element(x), &yz)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn multiplication_is_associative(name in prop::sample::select(vec!["BC1", "C2", "G21", "BC2", "F42"]), picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let a = Algebra::gls(&by_name(name).unwrap().quiver).unwrap();
        let n = a.dim();
        prop_assert!(multiply(&a, picks[0].index(n), picks[1].index(n), picks[2].index(n)));
    }

    #[test]
    fn folding_is_an_isometry(name in prop::sample::select(vec!["BC1", "C3", "B3", "BD3", "CD4", "F41", "G23"]), xs in prop::collection::vec(-7i64..8, 12)) {
        let q = by_name(name).unwrap().quiver;
        let u = unfold(&q).unwrap();
        let n = q.vertices;
        let (v, w) = (&xs[..n], &xs[6..6 + n]);
        prop_assert_eq!(u.quiver.ringel_form(&u.lift(v), &u.lift(w)).unwrap(), q.ringel_form(v, w).unwrap());
    }
}
