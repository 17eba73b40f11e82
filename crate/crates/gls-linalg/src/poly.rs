//! Univariate polynomials, minimal polynomials and factorization over
//! prime fields.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{Matrix, Vector};
use crate::scalar::{inv_mod, Field, Scalar};
use crate::LinalgError;

/// Polynomial with coefficients listed from the constant term upwards.
/// The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: Field) -> Poly {
        Poly::new(field, vec![field.one()])
    }

    /// The monomial x.
    pub fn x(field: Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * b);
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        self.mul(other).div_rem(&self.gcd(other)).0.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut r = Poly::one(self.field);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Evaluate at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(m.field(), n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Matrix::identity(m.field(), n).scale(c));
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic polynomial of least degree annihilating `m`, assembled as the least
/// common multiple of the Krylov minimal polynomials of the standard basis
/// vectors.
pub fn minimal_polynomial(m: &Matrix) -> Result<Poly, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare);
    }
    let field = m.field();
    let n = m.rows();
    let mut result = Poly::one(field);
    let mut annihilator = Matrix::identity(field, n);
    for i in 0..n {
        // Skip basis vectors already killed by the current product.
        if annihilator.column(i).iter().all(Scalar::is_zero) {
            continue;
        }
        let mut e = vec![field.zero(); n];
        e[i] = field.one();
        result = result.lcm(&krylov_polynomial(m, &e));
        annihilator = result.eval_matrix(m);
    }
    Ok(result)
}

/// Minimal polynomial of `m` relative to the vector `v`.
fn krylov_polynomial(m: &Matrix, v: &[Scalar]) -> Poly {
    let field = m.field();
    let n = m.rows();
    let mut seq: Vec<Vector> = vec![v.to_vec()];
    loop {
        let k = seq.len();
        let next = m.mul_vec(&seq[k - 1]);
        let basis = Matrix::from_columns(field, n, &seq);
        if let Some(c) = basis.solve(&next).expect("matching length") {
            // next = sum c_j m^j v, so x^k - sum c_j x^j annihilates v.
            let mut coeffs: Vec<Scalar> = c.iter().map(|s| -s).collect();
            coeffs.push(field.one());
            return Poly::new(field, coeffs);
        }
        seq.push(next);
    }
}

/// Complete factorization over F_p into monic irreducibles with
/// multiplicities: squarefree decomposition, then distinct-degree, then
/// equal-degree splitting. Factors are sorted by degree then coefficients.
pub fn factor_primefield(f: &Poly) -> Result<Vec<(Poly, usize)>, LinalgError> {
    let Field::Prime(p) = f.field() else {
        return Err(LinalgError::NotPrimeField);
    };
    if f.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let raw: Vec<u64> = f.monic().coeffs.iter().map(|c| c.residue().unwrap() as u64).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p as u64);
    let mut out: Vec<(Vec<u64>, usize)> = Vec::new();
    for (sqf, mult) in squarefree(&raw, p) {
        for (g, d) in distinct_degree(&sqf, p) {
            for h in equal_degree(&g, d, p, &mut rng) {
                out.push((h, mult));
            }
        }
    }
    // Merge equal factors arising from different squarefree parts.
    out.sort();
    let mut merged: Vec<(Vec<u64>, usize)> = Vec::new();
    for (h, m) in out {
        match merged.last_mut() {
            Some((last, lm)) if *last == h => *lm += m,
            _ => merged.push((h, m)),
        }
    }
    merged.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    Ok(merged.into_iter().map(|(h, m)| (to_poly(&h, p), m)).collect())
}

fn to_poly(c: &[u64], p: u32) -> Poly {
    Poly::new(
        Field::Prime(p),
        c.iter()
            .map(|&v| Scalar::Mod {
                value: v as u32,
                modulus: p,
            })
            .collect(),
    )
}

// Dense polynomial helpers over F_p on u64 coefficient vectors, low degree
// first, always trimmed.

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn pdivrem(a: &[u64], b: &[u64], p: u32) -> (Vec<u64>, Vec<u64>) {
    let m = p as u64;
    let d = b.len() - 1;
    let inv = inv_mod(b[d], p) as u64;
    let mut rem = a.to_vec();
    if rem.len() <= d {
        return (vec![], trim(rem));
    }
    let mut quot = vec![0u64; rem.len() - d];
    for k in (0..quot.len()).rev() {
        let c = rem[k + d] * inv % m;
        if c == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            rem[k + j] = (rem[k + j] + m - c * y % m) % m;
        }
        quot[k] = c;
    }
    rem.truncate(d);
    (trim(quot), trim(rem))
}

fn pmonic(a: &[u64], p: u32) -> Vec<u64> {
    match a.last() {
        None => vec![],
        Some(&l) => {
            let inv = inv_mod(l, p) as u64;
            a.iter().map(|&x| x * inv % p as u64).collect()
        }
    }
}

fn pgcd(a: &[u64], b: &[u64], p: u32) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = pdivrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    pmonic(&a, p)
}

fn pderiv(a: &[u64], p: u64) -> Vec<u64> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * (i as u64 % p) % p)
            .collect(),
    )
}

/// (base^e) mod f.
fn ppowmod(base: &[u64], mut e: u128, f: &[u64], p: u32) -> Vec<u64> {
    let m = p as u64;
    let mut result = vec![1u64];
    let mut b = pdivrem(base, f, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = pdivrem(&pmul(&result, &b, m), f, p).1;
        }
        e >>= 1;
        if e > 0 {
            b = pdivrem(&pmul(&b, &b, m), f, p).1;
        }
    }
    result
}

/// Replace x^p by x: the p-th root of a polynomial whose derivative vanishes.
fn pth_root(a: &[u64], p: u32) -> Vec<u64> {
    // Coefficients are fixed by Frobenius on F_p.
    a.iter().step_by(p as usize).copied().collect()
}

/// Squarefree decomposition of a monic polynomial: pairs (g, m) with g
/// squarefree and f = prod g^m.
fn squarefree(f: &[u64], p: u32) -> Vec<(Vec<u64>, usize)> {
    let m = p as u64;
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let d = pderiv(f, m);
    if d.is_empty() {
        for (g, k) in squarefree(&pth_root(f, p), p) {
            out.push((g, k * p as usize));
        }
        return out;
    }
    let mut c = pgcd(f, &d, p);
    let mut w = pdivrem(f, &c, p).0;
    let mut i = 1;
    while w.len() > 1 {
        let y = pgcd(&w, &c, p);
        let z = pdivrem(&w, &y, p).0;
        if z.len() > 1 {
            out.push((pmonic(&z, p), i));
        }
        i += 1;
        w = y;
        c = pdivrem(&c, &w, p).0;
    }
    if c.len() > 1 {
        for (g, k) in squarefree(&pth_root(&c, p), p) {
            out.push((g, k * p as usize));
        }
    }
    out
}

/// Distinct-degree factorization of a squarefree monic polynomial.
fn distinct_degree(f: &[u64], p: u32) -> Vec<(Vec<u64>, usize)> {
    let m = p as u64;
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut d = 0;
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            out.push((pmonic(&rest, p), rest.len() - 1));
            break;
        }
        h = ppowmod(&h, p as u128, &rest, p);
        let g = pgcd(&rest, &psub(&h, &x, m), p);
        if g.len() > 1 {
            rest = pdivrem(&rest, &g, p).0;
            h = pdivrem(&h, &rest, p).1;
            out.push((g, d));
        }
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
/// degree `d`.
fn equal_degree(f: &[u64], d: usize, p: u32, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    let n = f.len() - 1;
    if n == d {
        return vec![pmonic(f, p)];
    }
    let m = p as u64;
    loop {
        let a: Vec<u64> = trim((0..n).map(|_| rng.gen_range(0..m)).collect());
        if a.len() <= 1 {
            continue;
        }
        let candidate = if p == 2 {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            let mut t = pdivrem(&a, f, p).1;
            let mut acc = t.clone();
            for _ in 1..d {
                t = pdivrem(&pmul(&t, &t, m), f, p).1;
                acc = trim(
                    (0..acc.len().max(t.len()))
                        .map(|i| (acc.get(i).copied().unwrap_or(0) + t.get(i).copied().unwrap_or(0)) % 2)
                        .collect(),
                );
            }
            acc
        } else {
            let e = ((m as u128).pow(d as u32) - 1) / 2;
            psub(&ppowmod(&a, e, f, p), &[1], m)
        };
        let g = pgcd(f, &candidate, p);
        if g.len() > 1 && g.len() < f.len() {
            let h = pdivrem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&pmonic(&h, p), d, p, rng));
            return out;
        }
    }
}

/// Whether a monic polynomial over F_p has no roots (cheap sanity helper).
pub fn has_root_mod_p(f: &Poly) -> bool {
    let Field::Prime(p) = f.field() else {
        return false;
    };
    (0..p).any(|x| {
        let mut acc = 0u64;
        for c in f.coeffs.iter().rev() {
            acc = (acc * x as u64 + c.residue().unwrap() as u64) % p as u64;
        }
        acc == 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn minimal_polynomial_examples() {
        let id = Matrix::identity(Field::Rational, 3);
        assert_eq!(
            minimal_polynomial(&id).unwrap(),
            Poly::from_i64(Field::Rational, &[-1, 1])
        );

        let mut j = Matrix::zeros(Field::Rational, 4, 4);
        for i in 0..3 {
            j.set(i + 1, i, Field::Rational.one());
        }
        assert_eq!(
            minimal_polynomial(&j).unwrap(),
            Poly::from_i64(Field::Rational, &[0, 0, 0, 0, 1])
        );

        let d = Matrix::from_i64_rows(Field::Rational, &[vec![1, 0], vec![0, 2]]);
        assert_eq!(
            minimal_polynomial(&d).unwrap(),
            Poly::from_i64(Field::Rational, &[2, -3, 1])
        );
    }

    #[test]
    fn factor_examples() {
        let f = factor_primefield(&Poly::from_i64(fp(5), &[-1, 0, 1])).unwrap();
        assert_eq!(
            f,
            vec![(Poly::from_i64(fp(5), &[1, 1]), 1), (Poly::from_i64(fp(5), &[4, 1]), 1)]
        );
        let g = Poly::from_i64(fp(3), &[1, 0, 1]);
        assert_eq!(factor_primefield(&g).unwrap(), vec![(g.clone(), 1)]);
        let x4 = Poly::from_i64(fp(7), &[0, 0, 0, 0, 1]);
        assert_eq!(factor_primefield(&x4).unwrap(), vec![(Poly::x(fp(7)), 4)]);
        assert!(factor_primefield(&Poly::zero(fp(7))).is_err());
        assert!(factor_primefield(&Poly::x(Field::Rational)).is_err());
    }

    #[test]
    fn factor_handles_pth_powers() {
        // (x^2 + 1)^3 over F_3 has vanishing derivative.
        let base = Poly::from_i64(fp(3), &[1, 0, 1]);
        let f = base.pow(3).mul(&Poly::from_i64(fp(3), &[1, 1]));
        let fac = factor_primefield(&f).unwrap();
        assert_eq!(fac, vec![(Poly::from_i64(fp(3), &[1, 1]), 1), (base, 3)]);
    }
}
