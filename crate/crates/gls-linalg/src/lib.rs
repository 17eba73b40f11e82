//! Exact linear algebra over the rationals and prime fields.
//!
//! Everything here is a pure function of its inputs: pivots are chosen
//! deterministically and the only randomness (equal-degree splitting in
//! [`factor_primefield`]) uses a fixed internal seed.

mod matrix;
mod poly;
mod scalar;

pub use matrix::{normalize_leading, Echelon, Matrix, Vector};
pub use poly::{factor_primefield, has_root_mod_p, minimal_polynomial, Poly};
pub use scalar::{is_prime, Field, Scalar};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("scalars from different fields: {0} and {1}")]
    FieldMismatch(Field, Field),
    #[error("modulus {0} is not a prime below 2^31")]
    BadModulus(u32),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("value is not invertible")]
    NotInvertible,
    #[error("operation needs a prime field")]
    NotPrimeField,
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
}

/// Jordan block sizes of a nilpotent matrix, largest first, read off from
/// the ranks of its powers.
pub fn nilpotent_block_profile(n: &Matrix) -> Result<Vec<usize>, LinalgError> {
    if !n.is_square() {
        return Err(LinalgError::NotSquare);
    }
    let dim = n.rows();
    let mut ranks = vec![dim];
    let mut power = Matrix::identity(n.field(), dim);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > dim {
            return Err(LinalgError::NotNilpotent);
        }
        power = power.mul(n);
        let r = power.rank();
        if r == *ranks.last().unwrap() {
            return Err(LinalgError::NotNilpotent);
        }
        ranks.push(r);
    }
    // Blocks of size at least k: ranks[k-1] - ranks[k].
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut profile = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        profile.extend(std::iter::repeat_n(k, exact));
    }
    Ok(profile)
}

/// Nilpotent matrix with Jordan blocks of the given sizes, each block
/// mapping its i-th basis vector to the (i+1)-th.
pub fn jordan_nilpotent(field: Field, blocks: &[usize]) -> Matrix {
    let dim: usize = blocks.iter().sum();
    let mut m = Matrix::zeros(field, dim, dim);
    let mut offset = 0;
    for &b in blocks {
        for i in 0..b.saturating_sub(1) {
            m.set(offset + i + 1, offset + i, field.one());
        }
        offset += b;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_profile_examples() {
        let z = Matrix::zeros(Field::Rational, 3, 3);
        assert_eq!(nilpotent_block_profile(&z).unwrap(), vec![1, 1, 1]);
        let j4 = jordan_nilpotent(Field::Rational, &[4]);
        assert_eq!(nilpotent_block_profile(&j4).unwrap(), vec![4]);
        let j21 = jordan_nilpotent(Field::Rational, &[2, 1]);
        assert_eq!(nilpotent_block_profile(&j21).unwrap(), vec![2, 1]);
        let id = Matrix::identity(Field::Rational, 2);
        assert_eq!(nilpotent_block_profile(&id), Err(LinalgError::NotNilpotent));
    }
}
