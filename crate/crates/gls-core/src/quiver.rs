//! Valued quivers, their bilinear forms, reflections and Coxeter
//! transformations.

use std::collections::{HashMap, HashSet, VecDeque};

use gls_linalg::{Field, Matrix};
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::CoreError;

/// Integer coordinates with respect to the simple roots.
pub type RankVector = Vec<i64>;

/// An oriented valued edge `from -> to`. `v_out` is the valuation entry
/// paired with the source (it multiplies `c[from]`), `v_in` the one paired
/// with the target, so that `c[from] * v_out == c[to] * v_in`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub v_out: u32,
    pub v_in: u32,
}

impl Edge {
    /// Number of parallel arrows of the GLS quiver for this edge.
    pub fn multiplicity(&self) -> u32 {
        self.v_out.gcd(&self.v_in)
    }

    /// Exponent of the target loop in the commutation relation.
    pub fn target_exponent(&self) -> u32 {
        self.v_out / self.multiplicity()
    }

    /// Exponent of the source loop in the commutation relation.
    pub fn source_exponent(&self) -> u32 {
        self.v_in / self.multiplicity()
    }

    /// Label in the `a|b` notation used for drawings.
    pub fn label(&self) -> String {
        format!("{}|{}", self.v_in, self.v_out)
    }
}

/// A valued quiver with symmetrizer. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ValuedQuiver {
    pub vertices: usize,
    pub edges: Vec<Edge>,
    pub symmetrizer: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

impl ValuedQuiver {
    /// Checks the symmetrizer law, simplicity, absence of loops and of
    /// oriented cycles.
    pub fn new(symmetrizer: Vec<u32>, edges: Vec<Edge>) -> Result<ValuedQuiver, CoreError> {
        let n = symmetrizer.len();
        if symmetrizer.contains(&0) {
            return Err(CoreError::InvalidQuiver("symmetrizer entries must be positive".into()));
        }
        let mut seen = HashSet::new();
        for e in &edges {
            if e.from >= n || e.to >= n {
                return Err(CoreError::InvalidQuiver(format!(
                    "edge {}->{} out of range",
                    e.from, e.to
                )));
            }
            if e.from == e.to {
                return Err(CoreError::InvalidQuiver(format!("loop at vertex {}", e.from)));
            }
            if e.v_out == 0 || e.v_in == 0 {
                return Err(CoreError::InvalidQuiver("valuations must be positive".into()));
            }
            if symmetrizer[e.from] as u64 * e.v_out as u64 != symmetrizer[e.to] as u64 * e.v_in as u64 {
                return Err(CoreError::InvalidQuiver(format!(
                    "symmetrizer law fails on edge {}->{}",
                    e.from, e.to
                )));
            }
            if !seen.insert((e.from.min(e.to), e.from.max(e.to))) {
                return Err(CoreError::InvalidQuiver(format!(
                    "more than one edge between {} and {}",
                    e.from, e.to
                )));
            }
        }
        let q = ValuedQuiver {
            vertices: n,
            edges,
            symmetrizer,
            labels: Vec::new(),
        };
        if q.sink_first_order().is_none() {
            return Err(CoreError::InvalidQuiver("oriented cycle".into()));
        }
        Ok(q)
    }

    /// Simply-laced quiver from arrows (parallel arrows become one edge with
    /// valuation equal to their number).
    pub fn simply_laced(vertices: usize, arrows: &[(usize, usize)]) -> Result<ValuedQuiver, CoreError> {
        let mut count: HashMap<(usize, usize), u32> = HashMap::new();
        for &(s, t) in arrows {
            *count.entry((s, t)).or_default() += 1;
        }
        let mut keys: Vec<_> = count.keys().copied().collect();
        keys.sort();
        let edges = keys
            .into_iter()
            .map(|(s, t)| Edge {
                from: s,
                to: t,
                v_out: count[&(s, t)],
                v_in: count[&(s, t)],
            })
            .collect();
        ValuedQuiver::new(vec![1; vertices], edges)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> ValuedQuiver {
        assert_eq!(labels.len(), self.vertices);
        self.labels = labels;
        self
    }

    pub fn label(&self, i: usize) -> String {
        self.labels.get(i).cloned().unwrap_or_else(|| i.to_string())
    }

    /// `c_i * nu_ij` for the edge: the off-diagonal weight of the form.
    pub fn edge_weight(e: &Edge, c: &[u32]) -> i64 {
        c[e.from] as i64 * e.v_out as i64
    }

    pub fn c(&self, i: usize) -> i64 {
        self.symmetrizer[i] as i64
    }

    fn check_len(&self, v: &[i64]) -> Result<(), CoreError> {
        if v.len() != self.vertices {
            return Err(CoreError::SizeMismatch {
                expected: self.vertices,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// The Ringel form: sum of `c_i v_i w_i` minus, over arrows `i -> j`,
    /// the terms `c_i nu_ij v_i w_j`.
    pub fn ringel_form(&self, v: &[i64], w: &[i64]) -> Result<i64, CoreError> {
        self.check_len(v)?;
        self.check_len(w)?;
        Ok(self.ringel_unchecked(v, w))
    }

    pub(crate) fn ringel_unchecked(&self, v: &[i64], w: &[i64]) -> i64 {
        let mut s: i64 = (0..self.vertices).map(|i| self.c(i) * v[i] * w[i]).sum();
        for e in &self.edges {
            s -= Self::edge_weight(e, &self.symmetrizer) * v[e.from] * w[e.to];
        }
        s
    }

    pub fn symmetrized_form(&self, v: &[i64], w: &[i64]) -> Result<i64, CoreError> {
        Ok(self.ringel_form(v, w)? + self.ringel_form(w, v)?)
    }

    pub fn tits_form(&self, v: &[i64]) -> Result<i64, CoreError> {
        self.ringel_form(v, v)
    }

    /// The Ringel form with a dimension vector in the second slot, that is
    /// `<r, D^-1 d>`; always an integer.
    pub fn euler_rank_dim(&self, r: &[i64], d: &[i64]) -> i64 {
        let mut s: i64 = (0..self.vertices).map(|i| r[i] * d[i]).sum();
        for e in &self.edges {
            s -= e.v_in as i64 * r[e.from] * d[e.to];
        }
        s
    }

    pub fn simple_root(&self, i: usize) -> RankVector {
        let mut v = vec![0; self.vertices];
        v[i] = 1;
        v
    }

    /// Matrix of the Ringel form: entry (i, j) is the form on the simple
    /// roots i and j.
    pub fn ringel_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.vertices)
            .map(|i| {
                (0..self.vertices)
                    .map(|j| self.ringel_unchecked(&self.simple_root(i), &self.simple_root(j)))
                    .collect()
            })
            .collect()
    }

    /// Symmetrized Cartan matrix `D C`.
    pub fn symmetrized_cartan(&self) -> Vec<Vec<i64>> {
        let r = self.ringel_matrix();
        (0..self.vertices)
            .map(|i| (0..self.vertices).map(|j| r[i][j] + r[j][i]).collect())
            .collect()
    }

    /// Simple reflection at vertex i.
    pub fn reflect(&self, i: usize, w: &[i64]) -> RankVector {
        let pairing = self.ringel_unchecked(w, &self.simple_root(i)) + self.ringel_unchecked(&self.simple_root(i), w);
        let c = self.c(i);
        debug_assert_eq!(pairing % c, 0);
        let mut out = w.to_vec();
        out[i] -= pairing / c;
        out
    }

    /// Vertices ordered so that every arrow points from a later vertex to
    /// an earlier one (sinks first). Ties go to the smaller index.
    pub fn sink_first_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices;
        let mut out_deg = vec![0usize; n];
        for e in &self.edges {
            out_deg[e.from] += 1;
        }
        let mut done = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n).find(|&i| !done[i] && out_deg[i] == 0)?;
            done[next] = true;
            order.push(next);
            for e in self.edges.iter().filter(|e| e.to == next) {
                out_deg[e.from] -= 1;
            }
        }
        Some(order)
    }

    /// Whether `order` lists sinks before the vertices pointing to them.
    pub fn is_admissible(&self, order: &[usize]) -> bool {
        let mut pos = vec![usize::MAX; self.vertices];
        for (k, &i) in order.iter().enumerate() {
            if i >= self.vertices || pos[i] != usize::MAX {
                return false;
            }
            pos[i] = k;
        }
        order.len() == self.vertices && self.edges.iter().all(|e| pos[e.to] < pos[e.from])
    }

    /// Up to `limit` distinct admissible orderings, enumerated by
    /// backtracking in lexicographic order.
    pub fn admissible_orderings(&self, limit: usize) -> Vec<Vec<usize>> {
        let n = self.vertices;
        let mut out = Vec::new();
        let mut order = Vec::new();
        let mut used = vec![false; n];
        fn rec(q: &ValuedQuiver, order: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>, limit: usize) {
            if out.len() >= limit {
                return;
            }
            if order.len() == q.vertices {
                out.push(order.clone());
                return;
            }
            for i in 0..q.vertices {
                if used[i] {
                    continue;
                }
                // Every target of i must already be placed.
                if q.edges.iter().any(|e| e.from == i && !used[e.to]) {
                    continue;
                }
                used[i] = true;
                order.push(i);
                rec(q, order, used, out, limit);
                order.pop();
                used[i] = false;
            }
        }
        rec(self, &mut order, &mut used, &mut out, limit);
        out
    }

    /// Coxeter transformation for a given admissible ordering, as an integer
    /// matrix acting on column vectors. The first vertex's reflection is
    /// applied first.
    pub fn coxeter_with_order(&self, order: &[usize]) -> Result<Vec<Vec<i64>>, CoreError> {
        if !self.is_admissible(order) {
            return Err(CoreError::InvalidQuiver("ordering is not admissible".into()));
        }
        let n = self.vertices;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = self.simple_root(j);
            for &i in order {
                v = self.reflect(i, &v);
            }
            cols.push(v);
        }
        Ok((0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect())
    }

    pub fn coxeter_transformation(&self) -> Vec<Vec<i64>> {
        let order = self.sink_first_order().expect("acyclic by construction");
        self.coxeter_with_order(&order).expect("sink-first order is admissible")
    }

    /// Inverse Coxeter transformation (reflections in the reverse order).
    pub fn inverse_coxeter(&self) -> Vec<Vec<i64>> {
        let mut order = self.sink_first_order().expect("acyclic by construction");
        order.reverse();
        let n = self.vertices;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = self.simple_root(j);
            for &i in &order {
                v = self.reflect(i, &v);
            }
            cols.push(v);
        }
        (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect()
    }

    /// Primitive positive generator of the radical of the symmetrized form.
    /// Fails unless the radical has rank one and contains a strictly
    /// positive vector (which forces affine type for a connected quiver).
    pub fn null_root(&self) -> Result<RankVector, CoreError> {
        let s = self.symmetrized_cartan();
        let m = Matrix::from_i64_rows(Field::Rational, &s);
        let ker = m.kernel_basis();
        if ker.len() != 1 || !self.is_connected() {
            return Err(CoreError::NotAffine(format!("radical has rank {}", ker.len())));
        }
        let v = integer_primitive(&ker[0]);
        let v = if v.iter().any(|&x| x < 0) {
            v.iter().map(|x| -x).collect()
        } else {
            v
        };
        if v.iter().any(|&x| x <= 0) {
            return Err(CoreError::NotAffine("radical vector is not positive".into()));
        }
        Ok(v)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertices];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for e in &self.edges {
                for (a, b) in [(e.from, e.to), (e.to, e.from)] {
                    if a == i && !seen[b] {
                        seen[b] = true;
                        queue.push_back(b);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Defect `<eta, v>` for an affine quiver.
    pub fn defect(&self, v: &[i64]) -> Result<i64, CoreError> {
        let eta = self.null_root()?;
        self.ringel_form(&eta, v)
    }

    /// Reflection descent: repeatedly reflect at the first vertex whose
    /// reflection lowers the height `sum c_i v_i`. A positive real root
    /// reaches a simple root; anything else leaves the positive cone or gets
    /// stuck.
    pub fn is_positive_real_root(&self, v: &[i64]) -> Result<bool, CoreError> {
        self.check_len(v)?;
        if v.iter().any(|&x| x < 0) || v.iter().all(|&x| x == 0) {
            return Ok(false);
        }
        let mut cur = v.to_vec();
        loop {
            let support: Vec<usize> = (0..self.vertices).filter(|&i| cur[i] != 0).collect();
            if support.len() == 1 && cur[support[0]] == 1 {
                return Ok(true);
            }
            let step = (0..self.vertices).find(|&i| {
                let a = self.simple_root(i);
                self.ringel_unchecked(&cur, &a) + self.ringel_unchecked(&a, &cur) > 0
            });
            let Some(i) = step else {
                return Ok(false);
            };
            cur = self.reflect(i, &cur);
            if cur.iter().any(|&x| x < 0) {
                return Ok(false);
            }
        }
    }

    /// All positive real roots bounded coordinatewise by `bound`, generated
    /// by ascending reflections from the simple roots.
    pub fn positive_real_roots_below(&self, bound: &[i64]) -> Vec<RankVector> {
        let mut seen: HashSet<RankVector> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..self.vertices {
            let a = self.simple_root(i);
            if a.iter().zip(bound).all(|(x, b)| x <= b) && seen.insert(a.clone()) {
                queue.push_back(a);
            }
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..self.vertices {
                let a = self.simple_root(i);
                let pairing = self.ringel_unchecked(&v, &a) + self.ringel_unchecked(&a, &v);
                if pairing < 0 {
                    let w = self.reflect(i, &v);
                    if w.iter().zip(bound).all(|(x, b)| x <= b) && seen.insert(w.clone()) {
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        out
    }

    /// Same quiver with every arrow reversed.
    pub fn opposite(&self) -> ValuedQuiver {
        ValuedQuiver {
            vertices: self.vertices,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    from: e.to,
                    to: e.from,
                    v_out: e.v_in,
                    v_in: e.v_out,
                })
                .collect(),
            symmetrizer: self.symmetrizer.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Reorient: an edge is reversed exactly when its flag is set.
    pub fn reoriented(&self, flips: &[bool]) -> Result<ValuedQuiver, CoreError> {
        if flips.len() != self.edges.len() {
            return Err(CoreError::SizeMismatch {
                expected: self.edges.len(),
                found: flips.len(),
            });
        }
        let edges = self
            .edges
            .iter()
            .zip(flips)
            .map(|(e, &f)| {
                if f {
                    Edge {
                        from: e.to,
                        to: e.from,
                        v_out: e.v_in,
                        v_in: e.v_out,
                    }
                } else {
                    e.clone()
                }
            })
            .collect();
        let q = ValuedQuiver::new(self.symmetrizer.clone(), edges)?;
        Ok(q.with_labels(self.labels.clone()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<ValuedQuiver, CoreError> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: usize,
            edges: Vec<Edge>,
            symmetrizer: Vec<u32>,
            #[serde(default)]
            labels: Vec<String>,
        }
        let raw: Raw = serde_json::from_value(value.clone()).map_err(|e| CoreError::Parse(e.to_string()))?;
        if raw.symmetrizer.len() != raw.vertices {
            return Err(CoreError::SizeMismatch {
                expected: raw.vertices,
                found: raw.symmetrizer.len(),
            });
        }
        let q = ValuedQuiver::new(raw.symmetrizer, raw.edges)?;
        Ok(if raw.labels.is_empty() {
            q
        } else {
            q.with_labels(raw.labels)
        })
    }
}

/// Apply an integer matrix to a vector.
pub fn apply(m: &[Vec<i64>], v: &[i64]) -> RankVector {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Clear denominators of a rational vector and divide by the content.
fn integer_primitive(v: &[gls_linalg::Scalar]) -> RankVector {
    use gls_linalg::BigInt;
    let qs: Vec<_> = v.iter().map(|s| s.as_rational().expect("rational").clone()).collect();
    let mut l = BigInt::from(1);
    for q in &qs {
        l = l.lcm(q.denom());
    }
    let ints: Vec<BigInt> = qs.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    let mut g = BigInt::from(0);
    for x in &ints {
        g = g.gcd(x);
    }
    ints.iter()
        .map(|x| i64::try_from(x / &g).expect("small null root"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 2 -> 1 with valuation 1|4; index 0 is the vertex with c = 4.
    fn bc1() -> ValuedQuiver {
        ValuedQuiver::new(
            vec![4, 1],
            vec![Edge {
                from: 1,
                to: 0,
                v_out: 4,
                v_in: 1,
            }],
        )
        .unwrap()
    }

    #[test]
    fn bc1_forms() {
        let q = bc1();
        // 4 v1 w1 + v2 w2 - 4 v2 w1
        for (v, w) in [([1, 2], [1, 2]), ([3, 1], [2, 5]), ([0, 1], [1, 0])] {
            let expected = 4 * v[0] * w[0] + v[1] * w[1] - 4 * v[1] * w[0];
            assert_eq!(q.ringel_form(&v, &w).unwrap(), expected);
        }
        assert_eq!(q.tits_form(&[3, 5]).unwrap(), 1);
        assert_eq!(q.coxeter_transformation(), vec![vec![-1, 1], vec![-4, 3]]);
        assert_eq!(q.null_root().unwrap(), vec![1, 2]);
        assert_eq!(q.defect(&[1, 0]).unwrap(), -4);
    }

    #[test]
    fn bc1_real_roots() {
        let q = bc1();
        assert!(q.is_positive_real_root(&[2, 3]).unwrap());
        assert!(!q.is_positive_real_root(&[2, 2]).unwrap());
        assert!(q.is_positive_real_root(&[1, 0]).unwrap());
        assert!(!q.is_positive_real_root(&[1, 2]).unwrap());
    }

    #[test]
    fn rejects_bad_quivers() {
        let bad_sym = ValuedQuiver::new(
            vec![1, 1],
            vec![Edge {
                from: 0,
                to: 1,
                v_out: 1,
                v_in: 2,
            }],
        );
        assert!(bad_sym.is_err());
        let cycle = ValuedQuiver::simply_laced(2, &[(0, 1), (1, 0)]);
        assert!(cycle.is_err());
        assert!(ValuedQuiver::simply_laced(2, &[(0, 0)]).is_err());
    }

    #[test]
    fn kronecker_coxeter_has_infinite_order() {
        let q = ValuedQuiver::simply_laced(2, &[(0, 1), (0, 1)]).unwrap();
        let phi = q.coxeter_transformation();
        let eta = q.null_root().unwrap();
        assert_eq!(eta, vec![1, 1]);
        for v in [[1i64, 0], [0, 1], [2, 5], [3, -1]] {
            let w = apply(&phi, &apply(&phi, &v));
            let d: Vec<i64> = w.iter().zip(&v).map(|(a, b)| a - b).collect();
            // The difference is a multiple of eta.
            assert_eq!(d[0], d[1]);
            if v != [0, 0] && q.symmetrized_form(&v, &[1, 0]).unwrap() != 0 {
                assert_ne!(d[0], 0);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let q = bc1();
        let back = ValuedQuiver::from_json(&q.to_json()).unwrap();
        assert_eq!(q, back);
    }
}
