use gls_core::catalog::by_name;
use gls_core::families::{bc1_algebra, bc1_v, bc1_v_bar_infinity, ProjectivePoint};
use gls_core::rep::{dim_hom, injective, projective, random_locally_free, Representation};
use gls_core::stability::{defect_weight, stability, stability_over_primes, submodules, Caps, Verdict, Weight};
use gls_linalg::{Field, Matrix};
use num_traits::{Signed, Zero};

fn sample_modules(p: u32) -> Vec<Representation> {
    let a = bc1_algebra();
    let f = Field::prime(p).unwrap();
    let mut out = vec![
        bc1_v_bar_infinity(&a, f).unwrap(),
        bc1_v(&a, f, ProjectivePoint::INFINITY).unwrap(),
        bc1_v(&a, f, ProjectivePoint::affine(1)).unwrap(),
        projective(&a, f, 1).unwrap(),
        injective(&a, f, 1).unwrap(),
    ];
    out.push(out[0].direct_sum(&out[2]));
    for seed in 0..3 {
        out.push(random_locally_free(&a, f, &[1, 2], seed).unwrap());
    }
    out
}

#[test]
fn witnesses_are_sound_submodules() {
    let theta = defect_weight(&by_name("BC1").unwrap().quiver).unwrap();
    for p in [3, 5] {
        for v in sample_modules(p) {
            let r = stability(&v, &theta, Caps::default()).unwrap();
            if r.stable() == Some(true) {
                assert_eq!(r.semistable(), Some(true));
            }
            let Some(w) = &r.witness else { continue };
            let sub = v.restrict(&w.subspaces).unwrap();
            assert_eq!(sub.dims, w.dims);
            let size: usize = w.dims.iter().sum();
            assert!(size > 0 && size < v.total_dim());
            let t = theta.eval(&w.dims);
            match r.verdict {
                Verdict::NotSemistable => assert!(t.is_positive()),
                Verdict::Semistable => assert!(t.is_zero()),
                other => panic!("witness with verdict {other:?}"),
            }
        }
    }
}

#[test]
fn sum_of_stables_is_strictly_semistable() {
    let a = bc1_algebra();
    let f = Field::prime(3).unwrap();
    let theta = defect_weight(&by_name("BC1").unwrap().quiver).unwrap();
    let v = bc1_v_bar_infinity(&a, f).unwrap();
    let r = stability(&v.direct_sum(&v), &theta, Caps::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Semistable);
}

#[test]
fn caps_make_the_verdict_unknown() {
    let a = bc1_algebra();
    let f = Field::prime(3).unwrap();
    let theta = defect_weight(&by_name("BC1").unwrap().quiver).unwrap();
    let v = bc1_v(&a, f, ProjectivePoint::affine(1)).unwrap();
    let tight = Caps {
        dim: 4,
        enumeration: 1000,
    };
    let r = stability(&v, &theta, tight).unwrap();
    assert_eq!(r.verdict, Verdict::Unknown);
    assert!(!submodules(&v, tight).unwrap().complete);
}

#[test]
fn rational_modules_are_checked_prime_by_prime() {
    let a = bc1_algebra();
    let theta = defect_weight(&by_name("BC1").unwrap().quiver).unwrap();
    let v = bc1_v(&a, Field::Rational, ProjectivePoint::affine(2)).unwrap();
    let r = stability_over_primes(&v, &theta, &[3, 5, 7], Caps::default()).unwrap();
    assert_eq!(r.per_prime.len(), 3);
    assert_eq!(r.semistable, Some(true));
    assert_eq!(r.label, "finite-field certified");
}

#[test]
fn zero_weight_only_simples_are_stable() {
    let a = bc1_algebra();
    let f = Field::prime(3).unwrap();
    let zero = Weight::custom(&[0, 0]);
    let s = gls_core::rep::simple(&a, f, 1);
    assert_eq!(stability(&s, &zero, Caps::default()).unwrap().verdict, Verdict::Stable);
    let p = projective(&a, f, 1).unwrap();
    assert_eq!(
        stability(&p, &zero, Caps::default()).unwrap().verdict,
        Verdict::Semistable
    );
}

/// Every brick of dimension vector (2,1) over F_3 has a loop of rank one.
#[test]
fn small_bricks_have_loop_of_maximal_rank() {
    let a = bc1_algebra();
    let f = Field::prime(3).unwrap();
    let mut bricks = 0;
    for code in 0..3i64.pow(6) {
        let d: Vec<i64> = (0..6).map(|k| code / 3i64.pow(k) % 3).collect();
        let eps = Matrix::from_i64_rows(f, &[vec![d[0], d[1]], vec![d[2], d[3]]]);
        if !eps.mul(&eps).is_zero() {
            continue;
        }
        let alpha = Matrix::from_i64_rows(f, &[vec![d[4]], vec![d[5]]]);
        let v = Representation::checked(a.clone(), f, vec![2, 1], vec![alpha, eps.clone()]).unwrap();
        if dim_hom(&v, &v) == 1 {
            bricks += 1;
            assert_eq!(eps.rank(), 1, "{code}");
        }
    }
    assert!(bricks > 0);
}
