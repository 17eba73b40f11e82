//! Minimal projective presentations, g-vectors, Ext¹ and the
//! Auslander-Reiten translate via transpose and duality.

use gls_linalg::{Field, Matrix, Vector};
use serde::Serialize;

use super::standard::projective;
use super::{complement, dim_hom, Representation};
use crate::algebra::Path;
use crate::CoreError;

/// A minimal projective presentation `P1 -> P0 -> V -> 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub field: Field,
    /// Vertex of each indecomposable summand of `P0`.
    pub p0: Vec<usize>,
    /// Vertex of each indecomposable summand of `P1`.
    pub p1: Vec<usize>,
    /// `map[u][t]` holds the coefficients, over the basis paths from
    /// `p0[t]` to `p1[u]`, of the component `P1_u -> P0_t` (right
    /// multiplication by that element).
    pub map: Vec<Vec<Vector>>,
    /// The kernel of `P0 -> V`.
    pub syzygy: Representation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationSummary {
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    pub g_vector: Vec<i64>,
}

impl Presentation {
    /// `[P0] - [P1]` in the basis of indecomposable projectives.
    pub fn g_vector(&self) -> Vec<i64> {
        let n = self.syzygy.dims.len();
        let mut g = vec![0i64; n];
        for &s in &self.p0 {
            g[s] += 1;
        }
        for &j in &self.p1 {
            g[j] -= 1;
        }
        g
    }

    pub fn summary(&self) -> PresentationSummary {
        PresentationSummary {
            p0: self.p0.clone(),
            p1: self.p1.clone(),
            g_vector: self.g_vector(),
        }
    }
}

/// Top generators: vectors completing the radical at each vertex.
fn top_generators(v: &Representation) -> Vec<(usize, Vector)> {
    let rad = v.radical();
    let mut out = Vec::new();
    for (i, r) in rad.iter().enumerate() {
        for x in complement(v.field, v.dims[i], r) {
            out.push((i, x));
        }
    }
    out
}

/// Projective cover data: the summand vertices, the direct sum of
/// projectives, and the cover map at each vertex.
fn projective_cover(v: &Representation, gens: &[(usize, Vector)]) -> Result<(Representation, Vec<Matrix>), CoreError> {
    let alg = &v.algebra;
    let field = v.field;
    let parts: Vec<Representation> = gens
        .iter()
        .map(|(s, _)| projective(alg, field, *s))
        .collect::<Result<_, _>>()?;
    let p0 = Representation::direct_sum_all(&parts).unwrap_or_else(|| Representation::zero(alg.clone(), field));
    let mut cover = Vec::with_capacity(alg.vertices);
    for x in 0..alg.vertices {
        let mut cols: Vec<Vector> = Vec::new();
        for (s, g) in gens {
            for &b in alg.corner(*s, x) {
                cols.push(v.path_matrix(alg.basis_path(b)).mul_vec(g));
            }
        }
        cover.push(if cols.is_empty() {
            Matrix::zeros(field, v.dims[x], 0)
        } else {
            Matrix::from_columns(field, v.dims[x], &cols)
        });
    }
    Ok((p0, cover))
}

pub fn minimal_presentation(v: &Representation) -> Result<Presentation, CoreError> {
    let alg = &v.algebra;
    let field = v.field;
    let gens = top_generators(v);
    let (p0, cover) = projective_cover(v, &gens)?;
    // Kernel of the cover at every vertex.
    let kernel: Vec<Vec<Vector>> = cover.iter().map(Matrix::kernel_basis).collect();
    for (x, m) in cover.iter().enumerate() {
        if m.rank() != v.dims[x] {
            return Err(CoreError::Certification("projective cover is not surjective".into()));
        }
    }
    let syzygy = p0.restrict(&kernel)?;
    // Top of the kernel, mapped back into P0.
    let kgens = top_generators(&syzygy);
    let mut map = Vec::with_capacity(kgens.len());
    let mut p1 = Vec::with_capacity(kgens.len());
    for (j, coords) in &kgens {
        let kb = Matrix::from_columns(field, p0.dims[*j], &kernel[*j]);
        let k = kb.mul_vec(coords);
        let mut row = Vec::with_capacity(gens.len());
        let mut offset = 0;
        for (s, _) in &gens {
            let len = alg.corner(*s, *j).len();
            let block: Vector = k[offset..offset + len].to_vec();
            // Minimality: no component may involve a trivial path.
            for (pos, &b) in alg.corner(*s, *j).iter().enumerate() {
                if alg.basis_path(b).is_empty() && !block[pos].is_zero() {
                    return Err(CoreError::Certification("presentation is not minimal".into()));
                }
            }
            row.push(block);
            offset += len;
        }
        map.push(row);
        p1.push(*j);
    }
    Ok(Presentation {
        field,
        p0: gens.iter().map(|(s, _)| *s).collect(),
        p1,
        map,
        syzygy,
    })
}

pub fn g_vector(v: &Representation) -> Result<Vec<i64>, CoreError> {
    Ok(minimal_presentation(v)?.g_vector())
}

/// Dimension of Ext¹(V, W) from the syzygy sequence
/// `0 -> ΩV -> P0 -> V -> 0`: hom(ΩV, W) - hom(P0, W) + hom(V, W).
pub fn ext1_dim(v: &Representation, w: &Representation) -> Result<usize, CoreError> {
    let pres = minimal_presentation(v)?;
    let hom_p0: usize = pres.p0.iter().map(|&s| w.dims[s]).sum();
    let value = dim_hom(&pres.syzygy, w) as i64 - hom_p0 as i64 + dim_hom(v, w) as i64;
    if value < 0 {
        return Err(CoreError::Certification("negative Ext dimension".into()));
    }
    Ok(value as usize)
}

/// Ext¹(V, W) for locally free `V` via the Euler form shortcut. `None`
/// when `V` is not locally free or the algebra carries no valued quiver.
pub fn ext1_dim_euler(v: &Representation, w: &Representation) -> Option<usize> {
    let q = &v.algebra.gls.as_ref()?.quiver;
    let r = v.rank_vector()?;
    let euler = q.euler_rank_dim(&r, &w.dim_vector());
    let value = dim_hom(v, w) as i64 - euler;
    (value >= 0).then_some(value as usize)
}

/// Auslander-Bridger transpose: the cokernel of the dual presentation, a
/// representation of the opposite algebra.
pub fn transpose(v: &Representation) -> Result<Representation, CoreError> {
    let alg = &v.algebra;
    let op = alg.op();
    let field = v.field;
    let pres = minimal_presentation(v)?;
    let parts: Vec<Representation> = pres
        .p1
        .iter()
        .map(|&j| projective(&op, field, j))
        .collect::<Result<_, _>>()?;
    let Some(target) = Representation::direct_sum_all(&parts) else {
        return Ok(Representation::zero(op, field));
    };
    // Offsets of each summand inside the target's vertex spaces.
    let mut offsets = vec![vec![0usize; alg.vertices]; pres.p1.len()];
    for x in 0..alg.vertices {
        let mut acc = 0;
        for (u, &j) in pres.p1.iter().enumerate() {
            offsets[u][x] = acc;
            acc += op.corner(j, x).len();
        }
    }
    // Image of the generator of each summand of the dual of P0.
    let mut gens = Vec::with_capacity(pres.p0.len());
    for (t, &s) in pres.p0.iter().enumerate() {
        let mut vec = vec![field.zero(); target.dims[s]];
        for (u, &j) in pres.p1.iter().enumerate() {
            let coeffs = &pres.map[u][t];
            for (pos, &b) in alg.corner(s, j).iter().enumerate() {
                if coeffs[pos].is_zero() {
                    continue;
                }
                let p = alg.basis_path(b);
                let reversed = Path {
                    start: j,
                    arrows: p.arrows.iter().rev().copied().collect(),
                };
                for (ob, c) in op.normal_form(&reversed) {
                    let idx = offsets[u][s] + op.corner_position(ob);
                    let add = &coeffs[pos] * &field.from_rational(&c)?;
                    vec[idx] = &vec[idx] + &add;
                }
            }
        }
        gens.push((s, vec));
    }
    let image = target.generated_submodule(&gens);
    target.quotient(&image)
}

/// τV = D Tr V.
pub fn ar_translate(v: &Representation) -> Result<Representation, CoreError> {
    Ok(transpose(v)?.dual())
}

/// τ⁻V = Tr D V.
pub fn ar_inverse(v: &Representation) -> Result<Representation, CoreError> {
    transpose(&v.dual())
}

/// Check that a presentation is exact at `P0` by rank counting:
/// dim P0 = dim V + dim image(P1).
pub fn presentation_is_exact(v: &Representation, pres: &Presentation) -> bool {
    let alg = &v.algebra;
    (0..alg.vertices).all(|x| {
        let p0_dim: usize = pres.p0.iter().map(|&s| alg.corner(s, x).len()).sum();
        p0_dim == v.dims[x] + pres.syzygy.dims[x]
    })
}
