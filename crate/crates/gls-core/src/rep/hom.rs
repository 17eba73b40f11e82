//! Homomorphism spaces and isomorphism testing.

use gls_linalg::{Field, Matrix};
use serde::Serialize;

use super::Representation;
use crate::seeds::Sampler;

/// One matrix per vertex, `dims_W[i] x dims_V[i]`.
pub type Morphism = Vec<Matrix>;

fn assert_compatible(v: &Representation, w: &Representation) {
    assert!(
        v.algebra.as_ref() == w.algebra.as_ref(),
        "representations of different algebras"
    );
    assert_eq!(v.field, w.field, "representations over different fields");
}

/// Basis of Hom(V, W): solutions of `f_t V(a) = W(a) f_s` for every arrow,
/// taken from the kernel basis of the stacked linear system.
pub fn hom_basis(v: &Representation, w: &Representation) -> Vec<Morphism> {
    assert_compatible(v, w);
    let field = v.field;
    let n = v.dims.len();
    let mut offsets = Vec::with_capacity(n);
    let mut unknowns = 0;
    for i in 0..n {
        offsets.push(unknowns);
        unknowns += w.dims[i] * v.dims[i];
    }
    if unknowns == 0 {
        return vec![];
    }
    let var = |i: usize, r: usize, c: usize| offsets[i] + r * v.dims[i] + c;
    let mut rows: Vec<Vec<(usize, gls_linalg::Scalar)>> = Vec::new();
    for (a, arrow) in v.algebra.arrows.iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let (va, wa) = (&v.maps[a], &w.maps[a]);
        for r in 0..w.dims[t] {
            for c in 0..v.dims[s] {
                // sum_k f_t[r,k] V(a)[k,c] - sum_k W(a)[r,k] f_s[k,c]
                let mut row = Vec::new();
                for k in 0..v.dims[t] {
                    let x = va.get(k, c);
                    if !x.is_zero() {
                        row.push((var(t, r, k), x.clone()));
                    }
                }
                for k in 0..w.dims[s] {
                    let x = wa.get(r, k);
                    if !x.is_zero() {
                        row.push((var(s, k, c), -x));
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let mut system = Matrix::zeros(field, rows.len(), unknowns);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, x) in row {
            let cur = system.get(i, j).clone();
            system.set(i, j, &cur + &x);
        }
    }
    system
        .kernel_basis()
        .into_iter()
        .map(|sol| {
            (0..n)
                .map(|i| Matrix::from_fn(field, w.dims[i], v.dims[i], |r, c| sol[var(i, r, c)].clone()))
                .collect()
        })
        .collect()
}

pub fn dim_hom(v: &Representation, w: &Representation) -> usize {
    hom_basis(v, w).len()
}

/// Outcome of an isomorphism test.
#[derive(Clone, Debug, Serialize)]
pub enum IsoVerdict {
    /// An invertible intertwiner was found.
    Isomorphic(#[serde(skip)] Morphism),
    /// Certified by an invariant (dimension vectors or Hom dimensions).
    NonIsomorphic(String),
    /// No invertible element found among the basis and the random
    /// combinations, although the Hom dimensions agree.
    ProbablyNonIsomorphic { seed: u64 },
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }
}

pub const ISO_ATTEMPTS: usize = 20;

fn invertible(f: &Morphism) -> bool {
    f.iter().all(Matrix::is_invertible)
}

fn combine(field: Field, basis: &[Morphism], coeffs: &[gls_linalg::Scalar]) -> Morphism {
    let mut out: Morphism = basis[0]
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

/// Search Hom(V, W) for an invertible element: each basis element, then
/// seeded random combinations.
pub fn is_isomorphic(v: &Representation, w: &Representation, seed: u64) -> IsoVerdict {
    assert_compatible(v, w);
    if v.dims != w.dims {
        return IsoVerdict::NonIsomorphic("dimension vectors differ".into());
    }
    if v.is_zero() {
        return IsoVerdict::Isomorphic(vec![]);
    }
    let basis = hom_basis(v, w);
    if basis.is_empty() {
        return IsoVerdict::NonIsomorphic("Hom(V, W) = 0".into());
    }
    for f in &basis {
        if invertible(f) {
            return IsoVerdict::Isomorphic(f.clone());
        }
    }
    let mut sampler = Sampler::new(v.field, seed, "iso");
    for _ in 0..ISO_ATTEMPTS {
        let coeffs = sampler.vector(basis.len());
        let f = combine(v.field, &basis, &coeffs);
        if invertible(&f) {
            return IsoVerdict::Isomorphic(f);
        }
    }
    let (hvw, evv, eww) = (basis.len(), dim_hom(v, v), dim_hom(w, w));
    if hvw != evv || hvw != eww {
        return IsoVerdict::NonIsomorphic(format!("dim Hom(V,W) = {hvw}, dim End(V) = {evv}, dim End(W) = {eww}"));
    }
    IsoVerdict::ProbablyNonIsomorphic { seed }
}

/// Whether `f` intertwines V and W.
pub fn is_morphism(v: &Representation, w: &Representation, f: &Morphism) -> bool {
    v.algebra
        .arrows
        .iter()
        .enumerate()
        .all(|(a, arrow)| f[arrow.target].mul(&v.maps[a]) == w.maps[a].mul(&f[arrow.source]))
}
