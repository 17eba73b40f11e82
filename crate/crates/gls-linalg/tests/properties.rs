use gls_linalg::{factor_primefield, nilpotent_block_profile, Field, Matrix, Poly, Scalar};
use proptest::prelude::*;

fn matrix_strategy(p: u32) -> impl Strategy<Value = Matrix> {
    (1usize..=12, 1usize..=12).prop_flat_map(move |(r, c)| {
        prop::collection::vec(0i64..p as i64, r * c)
            .prop_map(move |v| Matrix::from_fn(Field::Prime(p), r, c, |i, j| Field::Prime(p).from_i64(v[i * c + j])))
    })
}

/// Count vectors over F_2 killed by `m`; its base-2 logarithm is the kernel
/// dimension.
fn brute_kernel_dim_f2(m: &Matrix) -> usize {
    let n = m.cols();
    let mut count = 0usize;
    for bits in 0u32..(1 << n) {
        let x: Vec<Scalar> = (0..n)
            .map(|i| Field::Prime(2).from_i64(((bits >> i) & 1) as i64))
            .collect();
        if m.mul_vec(&x).iter().all(Scalar::is_zero) {
            count += 1;
        }
    }
    count.trailing_zeros() as usize
}

fn is_irreducible_naive(f: &Poly, p: u32) -> bool {
    let d = f.degree().unwrap();
    for k in 1..=d / 2 {
        let total = (p as u64).pow(k as u32);
        for code in 0..total {
            let mut coeffs = Vec::new();
            let mut c = code;
            for _ in 0..k {
                coeffs.push((c % p as u64) as i64);
                c /= p as u64;
            }
            coeffs.push(1);
            let g = Poly::from_i64(Field::Prime(p), &coeffs);
            if f.rem(&g).is_zero() {
                return false;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rank_plus_nullity(m in matrix_strategy(7)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        for v in m.kernel_basis() {
            prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_consistent_systems(m in matrix_strategy(11), seed in any::<u64>()) {
        let f = m.field();
        let x: Vec<Scalar> = (0..m.cols()).map(|i| f.from_i64(((seed >> (i % 60)) & 0xff) as i64)).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn rational_rank_matches_reductions(v in prop::collection::vec(-9i64..10, 20)) {
        let m = Matrix::from_fn(Field::Rational, 4, 5, |i, j| Field::Rational.from_i64(v[i * 5 + j]));
        let r = m.rank();
        prop_assert_eq!(r + m.kernel_basis().len(), 5);
        // Rank can only drop modulo a prime.
        prop_assert!(m.to_field(Field::Prime(101)).unwrap().rank() <= r);
        prop_assert_eq!(m.echelon().pivots.len(), r);
    }

    #[test]
    fn block_profile_matches_brute_force(n in 1usize..=8, bits in any::<u64>()) {
        let f = Field::Prime(2);
        let mut m = Matrix::zeros(f, n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, f.from_i64(((bits >> (k % 64)) & 1) as i64));
                k += 1;
            }
        }
        let profile = nilpotent_block_profile(&m).unwrap();
        prop_assert_eq!(profile.iter().sum::<usize>(), n);
        let mut power = Matrix::identity(f, n);
        for e in 1..=n {
            power = power.mul(&m);
            let expected: usize = profile.iter().map(|&b| b.min(e)).sum();
            prop_assert_eq!(brute_kernel_dim_f2(&power), expected);
        }
    }

    #[test]
    fn factorization_remultiplies(p in prop::sample::select(vec![2u32, 3, 5, 7]), coeffs in prop::collection::vec(0i64..7, 1..=11)) {
        let field = Field::Prime(p);
        let mut c = coeffs.clone();
        let last = c.len() - 1;
        if c[last] % p as i64 == 0 {
            c[last] = 1;
        }
        let f = Poly::from_i64(field, &c);
        let factors = factor_primefield(&f).unwrap();
        let mut prod = Poly::one(field);
        for (g, m) in &factors {
            prop_assert!(g.leading().unwrap().is_one());
            prod = prod.mul(&g.pow(*m));
            let d = g.degree().unwrap();
            if (p as u64).pow((d / 2) as u32) <= 3000 {
                prop_assert!(is_irreducible_naive(g, p), "reducible factor {}", g);
            }
        }
        prop_assert_eq!(prod, f.monic());
    }
}
