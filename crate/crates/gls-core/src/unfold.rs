//! The unfolded simply-laced quiver of a valued quiver and the fiber-sum
//! map on classes.

use num_integer::Integer;
use serde::Serialize;

use crate::quiver::{RankVector, ValuedQuiver};
use crate::CoreError;

#[derive(Clone, Debug, Serialize)]
pub struct UnfoldedQuiver {
    pub base: ValuedQuiver,
    /// Simply-laced quiver on the vertices (i, k), k in Z/c_i.
    pub quiver: ValuedQuiver,
    /// `offsets[i]` is the index of (i, 0).
    pub offsets: Vec<usize>,
    /// Arrows as (source, target) pairs, with repetitions.
    pub arrows: Vec<(usize, usize)>,
}

pub fn unfold(base: &ValuedQuiver) -> Result<UnfoldedQuiver, CoreError> {
    let mut offsets = Vec::with_capacity(base.vertices);
    let mut total = 0;
    for &c in &base.symmetrizer {
        offsets.push(total);
        total += c as usize;
    }
    let mut arrows = Vec::new();
    for e in &base.edges {
        let (ci, cj) = (base.symmetrizer[e.from] as usize, base.symmetrizer[e.to] as usize);
        let d = ci.gcd(&cj);
        for k in 0..ci {
            for l in 0..cj {
                if k % d == l % d {
                    for _ in 0..e.multiplicity() {
                        arrows.push((offsets[e.from] + k, offsets[e.to] + l));
                    }
                }
            }
        }
    }
    let labels = (0..base.vertices)
        .flat_map(|i| (0..base.symmetrizer[i]).map(move |k| format!("{}.{}", base.label(i), k)))
        .collect();
    let quiver = ValuedQuiver::simply_laced(total, &arrows)?.with_labels(labels);
    Ok(UnfoldedQuiver {
        base: base.clone(),
        quiver,
        offsets,
        arrows,
    })
}

impl UnfoldedQuiver {
    pub fn vertex(&self, i: usize, k: usize) -> usize {
        self.offsets[i] + k % self.base.symmetrizer[i] as usize
    }

    pub fn size(&self) -> usize {
        self.quiver.vertices
    }

    /// Spread each coordinate over its fiber.
    pub fn lift(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.size()];
        for i in 0..self.base.vertices {
            for k in 0..self.base.symmetrizer[i] as usize {
                out[self.vertex(i, k)] = v[i];
            }
        }
        out
    }

    /// Inverse of [`lift`](Self::lift) on fiber-constant vectors.
    pub fn fold_class(&self, d: &[i64]) -> Option<RankVector> {
        if d.len() != self.size() {
            return None;
        }
        let mut out = Vec::with_capacity(self.base.vertices);
        for i in 0..self.base.vertices {
            let first = d[self.vertex(i, 0)];
            if (1..self.base.symmetrizer[i] as usize).any(|k| d[self.vertex(i, k)] != first) {
                return None;
            }
            out.push(first);
        }
        Some(out)
    }

    /// Sum over each fiber; defined on every vector.
    pub fn fiber_sums(&self, d: &[i64]) -> Vec<i64> {
        (0..self.base.vertices)
            .map(|i| {
                (0..self.base.symmetrizer[i] as usize)
                    .map(|k| d[self.vertex(i, k)])
                    .sum()
            })
            .collect()
    }

    /// The rotation (i, k) -> (i, k + 1) acting on coordinates.
    pub fn rotate(&self, d: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.size()];
        for i in 0..self.base.vertices {
            for k in 0..self.base.symmetrizer[i] as usize {
                out[self.vertex(i, k + 1)] = d[self.vertex(i, k)];
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::by_name;

    #[test]
    fn bc1_unfolds_to_a_star() {
        let u = unfold(&by_name("BC1").unwrap().quiver).unwrap();
        assert_eq!(u.size(), 5);
        assert_eq!(u.arrows.len(), 4);
        let centre = u.vertex(1, 0);
        assert!(u.arrows.iter().all(|&(s, _)| s == centre));
        assert_eq!(u.lift(&[1, 2]), vec![1, 1, 1, 1, 2]);
        assert_eq!(u.quiver.null_root().unwrap(), u.lift(&[1, 2]));
        assert_eq!(u.fold_class(&[1, 1, 1, 1, 2]), Some(vec![1, 2]));
        assert_eq!(u.fold_class(&[1, 0, 1, 1, 2]), None);
    }

    #[test]
    fn kronecker_and_simply_laced() {
        let u = unfold(&by_name("A1").unwrap().quiver).unwrap();
        assert_eq!(u.size(), 2);
        assert_eq!(u.arrows.len(), 2);
        let d = by_name("D5").unwrap().quiver;
        let u = unfold(&d).unwrap();
        let mut a = u.quiver.edges.clone();
        let mut b = d.edges.clone();
        a.sort_by_key(|e| (e.from, e.to));
        b.sort_by_key(|e| (e.from, e.to));
        assert_eq!(a, b);
    }
}
