use std::sync::Arc;

use gls_core::algebra::Algebra;
use gls_core::catalog::by_name;
use gls_core::decomposition::rigid_of_rank;
use gls_core::families::{bc1_root, Bc1Series};
use gls_core::rep::{
    ar_inverse, ar_translate, dim_hom, ext1_dim, is_isomorphic, krull_schmidt, projective, random_locally_free,
    random_module, Representation,
};
use gls_linalg::{jordan_nilpotent, Field, Matrix};
use proptest::prelude::*;

fn gls(name: &str) -> (gls_core::ValuedQuiver, Arc<Algebra>) {
    let q = by_name(name).unwrap().quiver;
    let a = Arc::new(Algebra::gls(&q).unwrap());
    (q, a)
}

fn f101() -> Field {
    Field::prime(101).unwrap()
}

/// hom − ext¹ (by presentation) against the rank/dimension pairing, with an
/// arbitrary second argument.
#[test]
fn euler_agreement_with_arbitrary_second_argument() {
    for name in ["BC1", "C2"] {
        let (q, a) = gls(name);
        for k in 0..25u64 {
            let r: Vec<i64> = (0..a.vertices).map(|i| ((k as usize + i) % 3) as i64).collect();
            if r.iter().all(|&x| x == 0) {
                continue;
            }
            let v = random_locally_free(&a, f101(), &r, k).unwrap();
            let tops: Vec<usize> = (0..a.vertices).map(|i| (k as usize >> i) % 2).collect();
            let u = random_module(&a, f101(), &tops, (k % 3) as usize, 1000 + k).unwrap();
            let lhs = dim_hom(&v, &u) as i64 - ext1_dim(&v, &u).unwrap() as i64;
            assert_eq!(lhs, q.euler_rank_dim(&r, &u.dim_vector()), "{name} sample {k}");
        }
    }
}

fn is_projective(x: &Representation) -> bool {
    (0..x.algebra.vertices).any(|i| {
        let p = projective(&x.algebra, x.field, i).unwrap();
        p.dims == x.dims && is_isomorphic(&p, x, 1).is_isomorphic()
    })
}

#[test]
fn inverse_translate_undoes_translate() {
    let mut checked = 0;
    for name in ["BC1", "C2"] {
        let (_, a) = gls(name);
        for k in 0..10u64 {
            let tops: Vec<usize> = (0..a.vertices)
                .map(|i| ((k as usize + i) % 2) + usize::from(i == 0))
                .collect();
            let m = random_module(&a, f101(), &tops, 2, k).unwrap();
            let r: Vec<i64> = (0..a.vertices).map(|i| ((k as usize + 2 * i) % 3) as i64).collect();
            let lf = random_locally_free(&a, f101(), &r, k).unwrap();
            for x in krull_schmidt(&m.direct_sum(&lf), k).unwrap() {
                if is_projective(&x) {
                    assert!(ar_translate(&x).unwrap().is_zero());
                    continue;
                }
                let back = ar_inverse(&ar_translate(&x).unwrap()).unwrap();
                assert!(is_isomorphic(&back, &x, k).is_isomorphic(), "{name} {:?}", x.dims);
                checked += 1;
            }
        }
    }
    assert!(checked >= 20, "only {checked} non-projective summands");
}

#[test]
fn rigid_modules_are_determined_by_rank() {
    let (_, a) = gls("BC1");
    let mut roots = Vec::new();
    for s in [Bc1Series::Preprojective, Bc1Series::Preinjective] {
        for i in 0..2 {
            for n in 0..2 {
                roots.push(bc1_root(s, i, n));
            }
        }
    }
    roots.retain(|r| r.iter().any(|&x| x > 0));
    roots.sort();
    roots.dedup();
    let (_, c2) = gls("C2");
    let mut total = 0;
    for (alg, r) in
        roots
            .iter()
            .map(|r| (&a, r.clone()))
            .chain([(&c2, vec![1, 1, 0]), (&c2, vec![0, 1, 1]), (&c2, vec![1, 2, 0])])
    {
        let x = rigid_of_rank(alg, f101(), &r, 1).unwrap();
        let y = rigid_of_rank(alg, f101(), &r, 2).unwrap();
        assert!(is_isomorphic(&x, &y, 3).is_isomorphic(), "{r:?}");
        assert_eq!(ext1_dim(&x, &x).unwrap(), 0);
        total += 1;
    }
    assert!(total >= 10);
}

/// Locally free iff rank(N^k) = d (c − k) / c for every k, for the loop of
/// BC1 at its loop vertex with c = 4.
fn rank_oracle(n: &Matrix, c: usize) -> bool {
    let d = n.rows();
    d.is_multiple_of(c) && (1..=c).all(|k| n.pow(k).rank() == d * (c - k) / c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn local_freeness_matches_kernel_ranks(parts in prop::collection::vec(1usize..=4, 1..=4), conj in prop::collection::vec(0i64..5, 256)) {
        let (_, a) = gls("BC1");
        let f = Field::prime(5).unwrap();
        let d: usize = parts.iter().sum();
        let j = jordan_nilpotent(f, &parts);
        // Conjugate by a unitriangular matrix so the blocks are hidden.
        let s = Matrix::from_fn(f, d, d, |r, c| if r == c { f.one() } else if r < c { f.from_i64(conj[r * 16 + c]) } else { f.zero() });
        let n = s.mul(&j).mul(&s.inverse().unwrap());
        let v = Representation::checked(a.clone(), f, vec![d, 0], vec![Matrix::zeros(f, d, 0), n.clone()]).unwrap();
        prop_assert_eq!(v.rank_vector().is_some(), rank_oracle(&n, 4));
    }
}
