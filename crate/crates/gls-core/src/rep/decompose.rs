//! Krull-Schmidt splitting over prime fields via endomorphism spectra.

use gls_linalg::{factor_primefield, minimal_polynomial, Field, Matrix, Vector};

use super::hom::hom_basis;
use super::Representation;
use crate::seeds::{child_seed, Sampler};
use crate::CoreError;

/// Random endomorphisms tried before a piece is declared indecomposable.
pub const KS_ATTEMPTS: usize = 12;

/// Split `v` into indecomposable summands. An endomorphism whose minimal
/// polynomial has two coprime factors splits the module into generalized
/// eigenspaces; a piece is kept once `KS_ATTEMPTS` random endomorphisms
/// (after the Hom basis itself) fail to split it, or when its endomorphism
/// ring is one-dimensional. Prime fields only.
pub fn krull_schmidt(v: &Representation, seed: u64) -> Result<Vec<Representation>, CoreError> {
    if !v.field.is_prime() {
        return Err(CoreError::Unsupported(
            "Krull-Schmidt splitting needs a prime field".into(),
        ));
    }
    let mut stack = vec![v.clone()];
    let mut out = Vec::new();
    let mut round = 0u64;
    while let Some(w) = stack.pop() {
        round += 1;
        if w.is_zero() {
            continue;
        }
        if w.total_dim() == 1 {
            out.push(w);
            continue;
        }
        let basis = hom_basis(&w, &w);
        if basis.len() <= 1 {
            out.push(w);
            continue;
        }
        let mut sampler = Sampler::new(w.field, child_seed(seed, &format!("ks-{round}")), "ks");
        let mut split = None;
        for k in 0..basis.len() + KS_ATTEMPTS {
            let f = if k < basis.len() {
                basis[k].clone()
            } else {
                let coeffs = sampler.vector(basis.len());
                combine(w.field, &basis, &coeffs)
            };
            if let Some(parts) = try_split(&w, &f)? {
                split = Some(parts);
                break;
            }
        }
        match split {
            Some(parts) => stack.extend(parts),
            None => out.push(w),
        }
    }
    out.sort_by(|a, b| a.dims.cmp(&b.dims));
    Ok(out)
}

fn combine(field: Field, basis: &[Vec<Matrix>], coeffs: &[gls_linalg::Scalar]) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = basis[0]
        .iter()
        .map(|m| Matrix::zeros(field, m.rows(), m.cols()))
        .collect();
    for (b, c) in basis.iter().zip(coeffs) {
        for (o, m) in out.iter_mut().zip(b) {
            *o = o.add(&m.scale(c));
        }
    }
    out
}

fn block_diagonal(f: &[Matrix]) -> Matrix {
    let field = f[0].field();
    f.iter().fold(Matrix::zeros(field, 0, 0), |acc, m| acc.direct_sum(m))
}

/// Generalized eigenspace decomposition for one endomorphism, or `None`
/// when its minimal polynomial is a power of one irreducible.
fn try_split(w: &Representation, f: &[Matrix]) -> Result<Option<Vec<Representation>>, CoreError> {
    let big = block_diagonal(f);
    let mp = minimal_polynomial(&big)?;
    let factors = factor_primefield(&mp)?;
    if factors.len() < 2 {
        return Ok(None);
    }
    let mut parts = Vec::with_capacity(factors.len());
    for (g, m) in &factors {
        let gm = g.pow(*m);
        let basis: Vec<Vec<Vector>> = f.iter().map(|fi| gm.eval_matrix(fi).kernel_basis()).collect();
        parts.push(w.restrict(&basis)?);
    }
    Ok(Some(parts))
}

/// Degree `k` when End(V) is a field with `p^k` elements, i.e. V is
/// indecomposable over F_p but becomes a sum of `k` pairwise
/// non-isomorphic bricks over the algebraic closure. Detected by a random
/// endomorphism with irreducible minimal polynomial of degree `dim End`.
pub fn endomorphism_field_degree(v: &Representation, seed: u64) -> Result<Option<usize>, CoreError> {
    let basis = hom_basis(v, v);
    let k = basis.len();
    if k <= 1 {
        return Ok((k == 1).then_some(1));
    }
    if !v.field.is_prime() {
        return Err(CoreError::Unsupported("field degree test needs a prime field".into()));
    }
    let mut sampler = Sampler::new(v.field, seed, "end-field");
    for _ in 0..KS_ATTEMPTS {
        let coeffs = sampler.vector(k);
        let f = combine(v.field, &basis, &coeffs);
        let factors = factor_primefield(&minimal_polynomial(&block_diagonal(&f))?)?;
        if let [(g, 1)] = factors.as_slice() {
            if g.degree() == Some(k) {
                return Ok(Some(k));
            }
        }
    }
    Ok(None)
}
