//! Indecomposable projectives, injectives, simples and generalized simples.

use std::sync::Arc;

use gls_linalg::{Field, Matrix};

use super::Representation;
use crate::algebra::{Algebra, Path};
use crate::CoreError;

/// `P_s = A e_s`: the vertex space at `x` has the basis paths from `s` to
/// `x`, arrows act by extending paths.
pub fn projective(alg: &Arc<Algebra>, field: Field, s: usize) -> Result<Representation, CoreError> {
    let dims: Vec<usize> = (0..alg.vertices).map(|x| alg.corner(s, x).len()).collect();
    let mut maps = Vec::with_capacity(alg.arrows.len());
    for (a, arrow) in alg.arrows.iter().enumerate() {
        let (x, y) = (arrow.source, arrow.target);
        let mut m = Matrix::zeros(field, dims[y], dims[x]);
        for (col, &b) in alg.corner(s, x).iter().enumerate() {
            let mut arr = alg.basis_path(b).arrows.clone();
            arr.push(a);
            for (bb, c) in alg.normal_form(&Path { start: s, arrows: arr }) {
                let row = alg.corner_position(bb);
                let cur = m.get(row, col).clone();
                m.set(row, col, &cur + &field.from_rational(&c)?);
            }
        }
        maps.push(m);
    }
    Representation::new(alg.clone(), field, dims, maps)
}

/// `I_s = D(e_s A)`: the vertex space at `x` is dual to the paths from `x`
/// to `s`; an arrow `x -> y` sends a functional on paths from `x` to one on
/// paths from `y` by precomposing with the arrow.
pub fn injective(alg: &Arc<Algebra>, field: Field, s: usize) -> Result<Representation, CoreError> {
    let dims: Vec<usize> = (0..alg.vertices).map(|x| alg.corner(x, s).len()).collect();
    let mut maps = Vec::with_capacity(alg.arrows.len());
    for (a, arrow) in alg.arrows.iter().enumerate() {
        let (x, y) = (arrow.source, arrow.target);
        let mut m = Matrix::zeros(field, dims[y], dims[x]);
        for (row, &b) in alg.corner(y, s).iter().enumerate() {
            let mut arr = vec![a];
            arr.extend(&alg.basis_path(b).arrows);
            for (bb, c) in alg.normal_form(&Path { start: x, arrows: arr }) {
                let col = alg.corner_position(bb);
                let cur = m.get(row, col).clone();
                m.set(row, col, &cur + &field.from_rational(&c)?);
            }
        }
        maps.push(m);
    }
    Representation::new(alg.clone(), field, dims, maps)
}

/// One-dimensional simple at `s`.
pub fn simple(alg: &Arc<Algebra>, field: Field, s: usize) -> Representation {
    let mut dims = vec![0; alg.vertices];
    dims[s] = 1;
    let maps = alg
        .arrows
        .iter()
        .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
        .collect();
    Representation {
        algebra: alg.clone(),
        field,
        dims,
        maps,
    }
}

/// Generalized simple `E_s`: the truncated polynomial ring at `s`, the loop
/// acting as one full Jordan block, zero elsewhere.
pub fn generalized_simple(alg: &Arc<Algebra>, field: Field, s: usize) -> Representation {
    let c = alg.loop_order(s);
    let mut dims = vec![0; alg.vertices];
    dims[s] = c;
    let maps = alg
        .arrows
        .iter()
        .map(|a| {
            if a.is_loop() && a.source == s {
                gls_linalg::jordan_nilpotent(field, &[c])
            } else {
                Matrix::zeros(field, dims[a.target], dims[a.source])
            }
        })
        .collect();
    Representation {
        algebra: alg.clone(),
        field,
        dims,
        maps,
    }
}
