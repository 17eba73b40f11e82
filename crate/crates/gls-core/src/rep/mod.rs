//! Representations of bound quiver algebras as tuples of exact matrices.

mod decompose;
mod hom;
mod present;
mod random;
mod standard;

pub use decompose::{endomorphism_field_degree, krull_schmidt, KS_ATTEMPTS};
pub use hom::{dim_hom, hom_basis, is_isomorphic, is_morphism, IsoVerdict, Morphism};
pub use present::{
    ar_inverse, ar_translate, ext1_dim, ext1_dim_euler, g_vector, minimal_presentation, presentation_is_exact,
    transpose, Presentation, PresentationSummary,
};
pub use random::{random_locally_free, random_module};
pub use standard::{generalized_simple, injective, projective, simple};

use std::sync::Arc;

use gls_linalg::{nilpotent_block_profile, Field, Matrix, Scalar, Vector};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Element, Path};
use crate::quiver::RankVector;
use crate::CoreError;

#[derive(Clone, Debug)]
pub struct Representation {
    pub algebra: Arc<Algebra>,
    pub field: Field,
    pub dims: Vec<usize>,
    /// One matrix per arrow (loops included), `dims[target] x dims[source]`.
    pub maps: Vec<Matrix>,
}

/// A relation that fails on a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A monomial relation (such as a loop power) acts nonzero.
    ZeroPath { vertex: usize, path: String },
    /// A commutation or other linear relation fails.
    Relation { index: usize, relation: String },
}

impl Representation {
    /// Checks shapes and fields, not relations (see [`validate`](Self::validate)).
    pub fn new(
        algebra: Arc<Algebra>,
        field: Field,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Representation, CoreError> {
        if dims.len() != algebra.vertices {
            return Err(CoreError::SizeMismatch {
                expected: algebra.vertices,
                found: dims.len(),
            });
        }
        if maps.len() != algebra.arrows.len() {
            return Err(CoreError::SizeMismatch {
                expected: algebra.arrows.len(),
                found: maps.len(),
            });
        }
        for (a, m) in algebra.arrows.iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(CoreError::InvalidRepresentation(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(CoreError::InvalidRepresentation(format!(
                    "arrow {} has entries in {}",
                    a.name,
                    m.field()
                )));
            }
        }
        Ok(Representation {
            algebra,
            field,
            dims,
            maps,
        })
    }

    /// Construct and insist that every relation holds.
    pub fn checked(
        algebra: Arc<Algebra>,
        field: Field,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Representation, CoreError> {
        let v = Representation::new(algebra, field, dims, maps)?;
        let bad = v.validate();
        if let Some(first) = bad.first() {
            return Err(CoreError::InvalidRepresentation(format!("{first:?}")));
        }
        Ok(v)
    }

    pub fn zero(algebra: Arc<Algebra>, field: Field) -> Representation {
        let dims = vec![0; algebra.vertices];
        let maps = algebra.arrows.iter().map(|_| Matrix::zeros(field, 0, 0)).collect();
        Representation {
            algebra,
            field,
            dims,
            maps,
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    /// Action of a path (identity for trivial paths).
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field, self.dims[p.start]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of an algebra element supported on paths from `s` to `t`.
    pub fn element_matrix(&self, x: &Element, s: usize, t: usize) -> Result<Matrix, CoreError> {
        let mut m = Matrix::zeros(self.field, self.dims[t], self.dims[s]);
        for (b, c) in x {
            let p = self.algebra.basis_path(*b);
            if p.start != s || self.algebra.end(p) != t {
                continue;
            }
            let coef = self.field.from_rational(c)?;
            m = m.add(&self.path_matrix(p).scale(&coef));
        }
        Ok(m)
    }

    /// Every relation that does not hold, in relation order.
    pub fn validate(&self) -> Vec<Violation> {
        let alg = &self.algebra;
        let mut out = Vec::new();
        for z in &alg.zero_paths {
            let p = Path {
                start: alg.arrows[z[0]].source,
                arrows: z.clone(),
            };
            if !self.path_matrix(&p).is_zero() {
                out.push(Violation::ZeroPath {
                    vertex: p.start,
                    path: alg.path_string(&p),
                });
            }
        }
        for (index, rel) in alg.relations.iter().enumerate() {
            let (s, t) = (rel[0].1.start, alg.end(&rel[0].1));
            let mut m = Matrix::zeros(self.field, self.dims[t], self.dims[s]);
            for (c, p) in rel {
                m = m.add(&self.path_matrix(p).scale(&self.field.from_i64(*c)));
            }
            if !m.is_zero() {
                let relation = rel
                    .iter()
                    .map(|(c, p)| format!("{c:+}*{}", alg.path_string(p)))
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push(Violation::Relation { index, relation });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Rank vector when every loop acts freely over its truncated polynomial
    /// ring (all Jordan blocks of full size), otherwise `None`. Vertices
    /// without a loop are free of rank equal to their dimension.
    pub fn rank_vector(&self) -> Option<RankVector> {
        let mut out = Vec::with_capacity(self.dims.len());
        for (i, &d) in self.dims.iter().enumerate() {
            match self.algebra.loop_at(i) {
                None => out.push(d as i64),
                Some(l) => {
                    let c = self.algebra.loop_order(i);
                    if d % c != 0 {
                        return None;
                    }
                    if d == 0 {
                        out.push(0);
                        continue;
                    }
                    let profile = nilpotent_block_profile(&self.maps[l]).ok()?;
                    if profile.iter().any(|&b| b != c) {
                        return None;
                    }
                    out.push((d / c) as i64);
                }
            }
        }
        Some(out)
    }

    pub fn is_locally_free(&self) -> (bool, Option<RankVector>) {
        let r = self.rank_vector();
        (r.is_some(), r)
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert_eq!(self.field, other.field, "direct sum over different fields");
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Representation {
            algebra: self.algebra.clone(),
            field: self.field,
            dims,
            maps,
        }
    }

    pub fn direct_sum_all(parts: &[Representation]) -> Option<Representation> {
        let mut it = parts.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, p| acc.direct_sum(p)))
    }

    /// Reduce rational entries into a prime field.
    pub fn to_field(&self, field: Field) -> Result<Representation, CoreError> {
        let maps = self
            .maps
            .iter()
            .map(|m| m.to_field(field))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Representation {
            algebra: self.algebra.clone(),
            field,
            dims: self.dims.clone(),
            maps,
        })
    }

    /// Linear dual, a representation of the opposite algebra.
    pub fn dual(&self) -> Representation {
        Representation {
            algebra: self.algebra.op(),
            field: self.field,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Restriction to a subrepresentation given by a basis (as columns) of
    /// each vertex space. The subspaces must be arrow-stable.
    pub fn restrict(&self, basis: &[Vec<Vector>]) -> Result<Representation, CoreError> {
        let mats: Vec<Matrix> = basis
            .iter()
            .zip(&self.dims)
            .map(|(b, &d)| Matrix::from_columns(self.field, d, b))
            .collect();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (a, arrow) in self.algebra.arrows.iter().enumerate() {
            let img = self.maps[a].mul(&mats[arrow.source]);
            let coords = mats[arrow.target]
                .solve_matrix(&img)?
                .ok_or_else(|| CoreError::InvalidRepresentation(format!("subspace not stable under {}", arrow.name)))?;
            maps.push(coords);
        }
        Ok(Representation {
            algebra: self.algebra.clone(),
            field: self.field,
            dims: basis.iter().map(Vec::len).collect(),
            maps,
        })
    }

    /// Quotient by an arrow-stable subspace family (bases as columns). The
    /// quotient coordinates are those of a complement spanned by standard
    /// basis vectors, chosen greedily.
    pub fn quotient(&self, basis: &[Vec<Vector>]) -> Result<Representation, CoreError> {
        let mut lifts = Vec::new();
        let mut projections = Vec::new();
        for (i, b) in basis.iter().enumerate() {
            let d = self.dims[i];
            let sub = Matrix::from_columns(self.field, d, b);
            let ext = sub.hstack(&Matrix::identity(self.field, d));
            let piv = ext.pivot_columns();
            if piv.iter().filter(|&&c| c < b.len()).count() != b.len() {
                return Err(CoreError::InvalidRepresentation(
                    "subspace basis is not independent".into(),
                ));
            }
            let comp: Vec<usize> = piv.iter().filter(|&&c| c >= b.len()).map(|&c| c - b.len()).collect();
            let lift = Matrix::from_fn(self.field, d, comp.len(), |r, c| {
                if r == comp[c] {
                    self.field.one()
                } else {
                    self.field.zero()
                }
            });
            let full = sub.hstack(&lift);
            let inv = full.inverse().expect("basis plus complement is invertible");
            let proj = inv.select(&(b.len()..d).collect::<Vec<_>>(), &(0..d).collect::<Vec<_>>());
            lifts.push(lift);
            projections.push(proj);
        }
        let maps = self
            .algebra
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| projections[arrow.target].mul(&self.maps[a]).mul(&lifts[arrow.source]))
            .collect();
        Ok(Representation {
            algebra: self.algebra.clone(),
            field: self.field,
            dims: lifts.iter().map(Matrix::cols).collect(),
            maps,
        })
    }

    /// Smallest subrepresentation containing the given vectors (each tagged
    /// with its vertex). Returns a basis of each vertex space.
    pub fn generated_submodule(&self, generators: &[(usize, Vector)]) -> Vec<Vec<Vector>> {
        let n = self.dims.len();
        let mut basis: Vec<Vec<Vector>> = vec![vec![]; n];
        let mut queue: Vec<(usize, Vector)> = generators.to_vec();
        while let Some((v, x)) = queue.pop() {
            if x.iter().all(Scalar::is_zero) {
                continue;
            }
            let mut cand = basis[v].clone();
            cand.push(x.clone());
            let m = Matrix::from_columns(self.field, self.dims[v], &cand);
            if m.rank() == basis[v].len() {
                continue;
            }
            basis[v].push(x.clone());
            for (a, arrow) in self.algebra.arrows.iter().enumerate() {
                if arrow.source == v {
                    queue.push((arrow.target, self.maps[a].mul_vec(&x)));
                }
            }
        }
        basis
    }

    /// Radical: sum of the images of all arrows at each vertex.
    pub fn radical(&self) -> Vec<Vec<Vector>> {
        let mut out = Vec::with_capacity(self.dims.len());
        for (i, &d) in self.dims.iter().enumerate() {
            let mut cols: Vec<Vector> = Vec::new();
            for (a, arrow) in self.algebra.arrows.iter().enumerate() {
                if arrow.target == i {
                    for c in 0..self.maps[a].cols() {
                        cols.push(self.maps[a].column(c));
                    }
                }
            }
            out.push(independent_subset(self.field, d, &cols));
        }
        out
    }

    /// Dimensions of the top `V / rad V`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical()
            .iter()
            .zip(&self.dims)
            .map(|(r, d)| d - r.len())
            .collect()
    }

    /// JSON form: algebra name, field, dimensions and each arrow matrix as
    /// row-major entry strings.
    pub fn to_json(&self) -> Value {
        let arrows: serde_json::Map<String, Value> = self
            .algebra
            .arrows
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| {
                let rows: Vec<Vec<String>> = (0..m.rows())
                    .map(|i| m.row(i).iter().map(|s| s.to_string()).collect())
                    .collect();
                (a.name.clone(), json!(rows))
            })
            .collect();
        json!({
            "algebra": self.algebra.name,
            "field": self.field.to_string(),
            "dims": self.dims,
            "arrows": arrows,
        })
    }

    pub fn from_json(algebra: Arc<Algebra>, value: &Value) -> Result<Representation, CoreError> {
        let bad = |m: &str| CoreError::Parse(m.to_string());
        let field = parse_field(value["field"].as_str().ok_or_else(|| bad("missing field"))?)?;
        let dims: Vec<usize> =
            serde_json::from_value(value["dims"].clone()).map_err(|e| CoreError::Parse(e.to_string()))?;
        if dims.len() != algebra.vertices {
            return Err(CoreError::SizeMismatch {
                expected: algebra.vertices,
                found: dims.len(),
            });
        }
        let mut maps = Vec::new();
        for a in &algebra.arrows {
            let rows: Vec<Vec<String>> = serde_json::from_value(value["arrows"][&a.name].clone())
                .map_err(|e| CoreError::Parse(format!("arrow {}: {e}", a.name)))?;
            let (r, c) = (dims[a.target], dims[a.source]);
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(CoreError::Parse(format!("arrow {} has the wrong shape", a.name)));
            }
            let mut data = Vec::with_capacity(r * c);
            for row in rows {
                for s in row {
                    data.push(parse_scalar(field, &s)?);
                }
            }
            maps.push(Matrix::from_vec(field, r, c, data)?);
        }
        Representation::new(algebra, field, dims, maps)
    }
}

/// Parse "Q" or "F<p>".
pub fn parse_field(s: &str) -> Result<Field, CoreError> {
    if s == "Q" {
        return Ok(Field::Rational);
    }
    let p: u32 = s
        .strip_prefix('F')
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| CoreError::Parse(format!("unknown field {s}")))?;
    Ok(Field::prime(p)?)
}

fn parse_scalar(field: Field, s: &str) -> Result<Scalar, CoreError> {
    use gls_linalg::{BigInt, BigRational};
    let bad = || CoreError::Parse(format!("bad scalar {s}"));
    let q = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(s.trim().parse().map_err(|_| bad())?),
    };
    Ok(field.from_rational(&q)?)
}

/// Greedy maximal independent subset of the given vectors.
pub fn independent_subset(field: Field, dim: usize, vectors: &[Vector]) -> Vec<Vector> {
    if vectors.is_empty() {
        return vec![];
    }
    let m = Matrix::from_columns(field, dim, vectors);
    m.pivot_columns().into_iter().map(|c| vectors[c].clone()).collect()
}

/// Standard basis vectors completing an independent family to a basis.
pub fn complement(field: Field, dim: usize, vectors: &[Vector]) -> Vec<Vector> {
    let sub = Matrix::from_columns(field, dim, vectors);
    let ext = sub.hstack(&Matrix::identity(field, dim));
    ext.pivot_columns()
        .into_iter()
        .filter(|&c| c >= vectors.len())
        .map(|c| {
            let mut v = vec![field.zero(); dim];
            v[c - vectors.len()] = field.one();
            v
        })
        .collect()
}

#[cfg(test)]
mod tests;
