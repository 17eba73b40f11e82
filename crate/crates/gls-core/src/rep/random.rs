//! Seeded random representations.

use std::sync::Arc;

use gls_linalg::{jordan_nilpotent, Field, Matrix};

use super::standard::projective;
use super::Representation;
use crate::algebra::Algebra;
use crate::seeds::{child_seed, Sampler};
use crate::CoreError;

/// A random locally free representation of rank vector `r`.
///
/// The loop at `i` acts by `r_i` full Jordan blocks, so basis vector
/// `t * c_i + k` stands for `eps^k e_t`. Each arrow matrix is a random
/// combination of a basis of the solutions of the commutation relations it
/// occurs in.
pub fn random_locally_free(
    alg: &Arc<Algebra>,
    field: Field,
    r: &[i64],
    seed: u64,
) -> Result<Representation, CoreError> {
    let c = alg
        .symmetrizer()
        .ok_or_else(|| CoreError::Unsupported("locally free sampling needs a symmetrizer".into()))?
        .to_vec();
    if r.len() != alg.vertices {
        return Err(CoreError::SizeMismatch {
            expected: alg.vertices,
            found: r.len(),
        });
    }
    if r.iter().any(|&x| x < 0) {
        return Err(CoreError::InvalidRepresentation("negative rank".into()));
    }
    let dims: Vec<usize> = (0..alg.vertices).map(|i| c[i] as usize * r[i] as usize).collect();
    let mut maps: Vec<Option<Matrix>> = vec![None; alg.arrows.len()];
    for (a, arrow) in alg.arrows.iter().enumerate() {
        if arrow.is_loop() {
            let blocks = vec![c[arrow.source] as usize; r[arrow.source] as usize];
            maps[a] = Some(jordan_nilpotent(field, &blocks));
        }
    }
    let mut sampler = Sampler::new(field, seed, "locally-free");
    for (a, arrow) in alg.arrows.iter().enumerate() {
        if arrow.is_loop() {
            continue;
        }
        let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
        let solutions = arrow_solutions(alg, field, &maps, a, rows, cols)?;
        let mut x = Matrix::zeros(field, rows, cols);
        for sol in &solutions {
            let s = sampler.scalar();
            x = x.add(&Matrix::from_vec(field, rows, cols, sol.clone())?.scale(&s));
        }
        maps[a] = Some(x);
    }
    let maps = maps.into_iter().map(|m| m.expect("every arrow assigned")).collect();
    Representation::checked(alg.clone(), field, dims, maps)
}

/// Kernel basis (row-major `rows x cols` matrices) of the relations that
/// contain arrow `a` once, with every other arrow a loop already fixed.
fn arrow_solutions(
    alg: &Algebra,
    field: Field,
    maps: &[Option<Matrix>],
    a: usize,
    rows: usize,
    cols: usize,
) -> Result<Vec<Vec<gls_linalg::Scalar>>, CoreError> {
    let unknowns = rows * cols;
    let mut system: Vec<Vec<gls_linalg::Scalar>> = Vec::new();
    for rel in &alg.relations {
        if !rel.iter().any(|(_, p)| p.arrows.contains(&a)) {
            continue;
        }
        let mut acc: Vec<Matrix> = Vec::new();
        // Coefficient matrix of vec(X) for this relation: sum of
        // coef * (after ⊗ before^T).
        let (mut out_rows, mut out_cols) = (0, 0);
        for (coef, p) in rel {
            let pos = p.arrows.iter().position(|&x| x == a);
            let Some(pos) = pos else {
                return Err(CoreError::Unsupported("relation term without the arrow".into()));
            };
            if p.arrows.iter().filter(|&&x| x == a).count() != 1 {
                return Err(CoreError::Unsupported("arrow repeated in a relation term".into()));
            }
            let chain = |range: &[usize], dim: usize| -> Result<Matrix, CoreError> {
                let mut m = Matrix::identity(field, dim);
                for &b in range {
                    let mb = maps[b]
                        .as_ref()
                        .ok_or_else(|| CoreError::Unsupported("relation involves two unknown arrows".into()))?;
                    m = mb.mul(&m);
                }
                Ok(m)
            };
            let before = chain(&p.arrows[..pos], cols)?;
            let after = chain(&p.arrows[pos + 1..], rows)?;
            out_rows = after.rows();
            out_cols = before.cols();
            // (after X before)[r, s] = sum after[r, k] X[k, l] before[l, s]
            let coef = field.from_i64(*coef);
            let mut m = Matrix::zeros(field, out_rows * out_cols, unknowns);
            for rr in 0..out_rows {
                for ss in 0..out_cols {
                    for k in 0..rows {
                        let x = after.get(rr, k);
                        if x.is_zero() {
                            continue;
                        }
                        for l in 0..cols {
                            let y = before.get(l, ss);
                            if y.is_zero() {
                                continue;
                            }
                            let cur = m.get(rr * out_cols + ss, k * cols + l).clone();
                            m.set(rr * out_cols + ss, k * cols + l, &cur + &(&(x * y) * &coef));
                        }
                    }
                }
            }
            acc.push(m);
        }
        let mut total = Matrix::zeros(field, out_rows * out_cols, unknowns);
        for m in acc {
            total = total.add(&m);
        }
        for i in 0..total.rows() {
            system.push(total.row(i));
        }
    }
    if system.is_empty() {
        // Unconstrained: the standard basis.
        return Ok((0..unknowns)
            .map(|i| {
                let mut v = vec![field.zero(); unknowns];
                v[i] = field.one();
                v
            })
            .collect());
    }
    let m = Matrix::from_fn(field, system.len(), unknowns, |i, j| system[i][j].clone());
    Ok(m.kernel_basis())
}

/// A random finite-dimensional module: a direct sum of indecomposable
/// projectives (`tops[s]` copies of the one at `s`) modulo the submodule
/// generated by `relations` random vectors.
pub fn random_module(
    alg: &Arc<Algebra>,
    field: Field,
    tops: &[usize],
    relations: usize,
    seed: u64,
) -> Result<Representation, CoreError> {
    let mut parts = Vec::new();
    for (s, &k) in tops.iter().enumerate() {
        for _ in 0..k {
            parts.push(projective(alg, field, s)?);
        }
    }
    let Some(p) = Representation::direct_sum_all(&parts) else {
        return Ok(Representation::zero(alg.clone(), field));
    };
    let mut sampler = Sampler::new(field, child_seed(seed, "module"), "module");
    let mut gens = Vec::with_capacity(relations);
    for _ in 0..relations {
        let nonempty: Vec<usize> = (0..alg.vertices).filter(|&i| p.dims[i] > 0).collect();
        let v = nonempty[sampler.index(nonempty.len())];
        gens.push((v, sampler.vector(p.dims[v])));
    }
    let sub = p.generated_submodule(&gens);
    p.quotient(&sub)
}
