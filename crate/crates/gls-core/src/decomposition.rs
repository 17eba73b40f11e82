//! Generic decompositions by sampling: Kac's canonical decomposition on the
//! unfolded quiver, its fold back to rank vectors `v = m η + w`, and the
//! matching decomposition of generic locally free modules.

use std::collections::BTreeMap;
use std::sync::Arc;

use gls_linalg::Field;
use serde::Serialize;

use crate::algebra::{Algebra, Arrow};
use crate::catalog::AffineEntry;
use crate::quiver::{RankVector, ValuedQuiver};
use crate::rep::{
    dim_hom, endomorphism_field_degree, ext1_dim_euler, is_isomorphic, krull_schmidt, random_locally_free,
    Representation,
};
use crate::seeds::{child_seed, Sampler};
use crate::unfold::unfold;
use crate::CoreError;

/// Prime used for generic sampling.
pub const GENERIC_PRIME: u32 = 101;

pub fn generic_field() -> Field {
    Field::prime(GENERIC_PRIME).expect("101 is prime")
}

/// End and Ext dimensions of one summand class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandEvidence {
    pub dims: Vec<i64>,
    pub multiplicity: usize,
    pub dim_end: usize,
    pub ext1_self: usize,
}

/// Kac decomposition of a dimension vector on a simply-laced quiver.
#[derive(Clone, Debug, Serialize)]
pub struct UnfoldedDecomposition {
    pub dims: Vec<i64>,
    /// Summand dimension vectors with multiplicities, sorted.
    pub summands: Vec<(Vec<i64>, usize)>,
    /// Total multiple of the null root among the summands.
    pub m: i64,
    pub evidence: Vec<SummandEvidence>,
    pub seeds: Vec<u64>,
}

/// Random representation of a quiver without relations.
fn generic_quiver_rep(alg: &Arc<Algebra>, field: Field, dims: &[usize], seed: u64) -> Representation {
    let mut sampler = Sampler::new(field, seed, "generic-quiver");
    let maps = alg
        .arrows
        .iter()
        .map(|a| sampler.matrix(dims[a.target], dims[a.source]))
        .collect();
    Representation {
        algebra: alg.clone(),
        field,
        dims: dims.to_vec(),
        maps,
    }
}

fn path_algebra_of(q: &ValuedQuiver) -> Result<Arc<Algebra>, CoreError> {
    if q.edges.iter().any(|e| e.v_out != e.v_in) || q.symmetrizer.iter().any(|&c| c != 1) {
        return Err(CoreError::Unsupported(
            "the unfolded quiver must be simply laced".into(),
        ));
    }
    let mut arrows = Vec::new();
    for e in &q.edges {
        for copy in 0..e.multiplicity() {
            arrows.push(Arrow {
                source: e.from,
                target: e.to,
                name: format!("x{}_{}_{copy}", e.from, e.to),
            });
        }
    }
    Ok(Arc::new(Algebra::path_algebra(q.vertices, arrows)?))
}

fn is_multiple_of(d: &[i64], eta: &[i64]) -> Option<i64> {
    let (i, &e) = eta.iter().enumerate().find(|(_, &e)| e != 0)?;
    if d[i] % e != 0 {
        return None;
    }
    let k = d[i] / e;
    (k > 0 && d.iter().zip(eta).all(|(x, y)| *x == k * y)).then_some(k)
}

/// One sample: Krull-Schmidt summands, grouped by isomorphism class of
/// dimension vector, with End/Ext evidence, or the reason it is not
/// certified.
fn sample_unfolded(
    q: &ValuedQuiver,
    alg: &Arc<Algebra>,
    d: &[i64],
    seed: u64,
) -> Result<Result<UnfoldedDecomposition, String>, CoreError> {
    let field = generic_field();
    let dims: Vec<usize> = d.iter().map(|&x| x as usize).collect();
    let v = generic_quiver_rep(alg, field, &dims, child_seed(seed, "sample"));
    let parts = krull_schmidt(&v, child_seed(seed, "split"))?;
    let eta = q.null_root()?;
    let dimv: Vec<Vec<i64>> = parts.iter().map(Representation::dim_vector).collect();
    // Ext-vanishing between summands at different positions; the quiver has
    // no relations so Ext¹ = hom - Euler form.
    let ext = |a: &Representation, b: &Representation| -> i64 {
        dim_hom(a, b) as i64 - q.euler_rank_dim(&a.dim_vector(), &b.dim_vector())
    };
    for i in 0..parts.len() {
        for j in 0..parts.len() {
            if i != j && ext(&parts[i], &parts[j]) != 0 {
                return Ok(Err(format!(
                    "Ext between summands {:?} and {:?} is nonzero",
                    dimv[i], dimv[j]
                )));
            }
        }
    }
    // A summand of dimension kη whose endomorphism ring is a field of
    // degree k splits into k bricks of dimension η over the closure.
    let mut grouped: BTreeMap<Vec<i64>, (usize, usize, usize)> = BTreeMap::new();
    for (i, p) in parts.iter().enumerate() {
        let mut dv = dimv[i].clone();
        let mut copies = 1;
        let mut dim_end = dim_hom(p, p);
        let mut ext1_self = ext(p, p) as usize;
        match is_multiple_of(&dv, &eta) {
            Some(k) if k > 1 => {
                if endomorphism_field_degree(p, child_seed(seed, &format!("field-{i}")))? == Some(k as usize) {
                    dv = eta.clone();
                    copies = k as usize;
                    dim_end = 1;
                    ext1_self = 1;
                }
            }
            Some(_) => {}
            None if ext1_self != 0 => return Ok(Err(format!("summand {dv:?} is not rigid"))),
            None => {}
        }
        let entry = grouped.entry(dv).or_insert((0, dim_end, ext1_self));
        entry.0 += copies;
    }
    let m = grouped
        .iter()
        .filter_map(|(dv, (n, _, _))| is_multiple_of(dv, &eta).map(|k| k * *n as i64))
        .sum();
    let evidence = grouped
        .iter()
        .map(|(dv, &(multiplicity, dim_end, ext1_self))| SummandEvidence {
            dims: dv.clone(),
            multiplicity,
            dim_end,
            ext1_self,
        })
        .collect();
    Ok(Ok(UnfoldedDecomposition {
        dims: d.to_vec(),
        summands: grouped.into_iter().map(|(k, (n, _, _))| (k, n)).collect(),
        m,
        evidence,
        seeds: vec![seed],
    }))
}

/// Kac's canonical decomposition of `d` on a simply-laced quiver by
/// sampling over F_101, certified by Ext-vanishing between distinct
/// summands and by agreement with a second independent sample. One retry
/// with fresh seeds before failing.
pub fn kac_decomposition_unfolded(q: &ValuedQuiver, d: &[i64], seed: u64) -> Result<UnfoldedDecomposition, CoreError> {
    if d.len() != q.vertices || d.iter().any(|&x| x < 0) {
        return Err(CoreError::InvalidRepresentation(format!("bad dimension vector {d:?}")));
    }
    let alg = path_algebra_of(q)?;
    let mut reasons = Vec::new();
    for attempt in 0..2 {
        let s1 = child_seed(seed, &format!("kac-{attempt}-a"));
        let s2 = child_seed(seed, &format!("kac-{attempt}-b"));
        let first = sample_unfolded(q, &alg, d, s1)?;
        let second = sample_unfolded(q, &alg, d, s2)?;
        match (first, second) {
            (Ok(mut a), Ok(b)) if a.summands == b.summands => {
                a.seeds = vec![s1, s2];
                return Ok(a);
            }
            (Ok(a), Ok(b)) => reasons.push(format!("samples disagree: {:?} vs {:?}", a.summands, b.summands)),
            (Err(e), _) | (_, Err(e)) => reasons.push(e),
        }
    }
    Err(CoreError::Certification(format!(
        "Kac decomposition of {d:?} not certified (seed {seed}): {}",
        reasons.join("; ")
    )))
}

/// Folded canonical decomposition `v = m η + w`.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub family: String,
    pub v: RankVector,
    pub m: i64,
    pub w: RankVector,
    /// Rank vectors of the rigid summands of `w` with multiplicities.
    pub summands: Vec<(RankVector, usize)>,
    pub unfolded: UnfoldedDecomposition,
    pub rotation_invariant: bool,
    pub seeds: Vec<u64>,
}

impl DecompositionReport {
    /// The structural invariants: `v = mη + w`, regular `w` when `m > 0`,
    /// summands are real roots with `q` among the symmetrizer values and add
    /// up to `w`.
    pub fn check(&self, q: &ValuedQuiver) -> Result<(), String> {
        let eta = q.null_root().map_err(|e| e.to_string())?;
        for i in 0..q.vertices {
            if self.v[i] != self.m * eta[i] + self.w[i] {
                return Err("v != m eta + w".into());
            }
        }
        if self.m > 0 && q.defect(&self.w).map_err(|e| e.to_string())? != 0 {
            return Err("m > 0 but the rigid part has nonzero defect".into());
        }
        let mut total = vec![0; q.vertices];
        for (beta, k) in &self.summands {
            let real = q.is_positive_real_root(beta).map_err(|e| e.to_string())?;
            let qb = q.ringel_unchecked(beta, beta);
            if !real || !q.symmetrizer.iter().any(|&c| c as i64 == qb) {
                return Err(format!("summand {beta:?} is not a real Schur root class"));
            }
            for (t, b) in total.iter_mut().zip(beta) {
                *t += *k as i64 * b;
            }
        }
        if total != self.w {
            return Err("summands do not add up to w".into());
        }
        if !self.rotation_invariant {
            return Err("unfolded summands are not rotation invariant".into());
        }
        Ok(())
    }
}

pub fn folded_decomposition(entry: &AffineEntry, v: &[i64], seed: u64) -> Result<DecompositionReport, CoreError> {
    let q = &entry.quiver;
    if v.len() != q.vertices || v.iter().any(|&x| x < 0) {
        return Err(CoreError::InvalidRepresentation(format!("bad rank vector {v:?}")));
    }
    let u = unfold(q)?;
    let mut last_err = None;
    for attempt in 0..2 {
        let s = if attempt == 0 {
            seed
        } else {
            child_seed(seed, "fold-retry")
        };
        let unfolded = match kac_decomposition_unfolded(&u.quiver, &u.lift(v), s) {
            Ok(x) => x,
            Err(e) => {
                last_err = Some(e);
                continue;
            }
        };
        let multiset: BTreeMap<Vec<i64>, usize> = unfolded.summands.iter().cloned().collect();
        let rotated: BTreeMap<Vec<i64>, usize> = unfolded.summands.iter().map(|(d, k)| (u.rotate(d), *k)).collect();
        let rotation_invariant = multiset == rotated;
        // Fold each rotation orbit of non-isotropic summands.
        let eta_bar = u.quiver.null_root()?;
        let mut seen: Vec<Vec<i64>> = Vec::new();
        let mut summands = Vec::new();
        let mut fold_ok = true;
        for (d, k) in &unfolded.summands {
            if is_multiple_of(d, &eta_bar).is_some() || seen.contains(d) {
                continue;
            }
            let mut orbit = vec![d.clone()];
            let mut next = u.rotate(d);
            while next != *d {
                orbit.push(next.clone());
                next = u.rotate(&next);
            }
            let mut sum = vec![0; u.size()];
            for o in &orbit {
                for (s, x) in sum.iter_mut().zip(o) {
                    *s += x;
                }
            }
            seen.extend(orbit);
            match u.fold_class(&sum) {
                Some(beta) => summands.push((beta, *k)),
                None => fold_ok = false,
            }
        }
        if !fold_ok || !rotation_invariant {
            last_err = Some(CoreError::Certification(format!("fold failed for {v:?} (seed {s})")));
            continue;
        }
        summands.sort();
        let eta = &entry.null_root;
        let m = unfolded.m;
        let w: RankVector = v.iter().zip(eta).map(|(a, b)| a - m * b).collect();
        let seeds = unfolded.seeds.clone();
        return Ok(DecompositionReport {
            family: entry.name(),
            v: v.to_vec(),
            m,
            w,
            summands,
            unfolded,
            rotation_invariant,
            seeds,
        });
    }
    Err(last_err.expect("two attempts made"))
}

/// Attempts before `rigid_of_rank` gives up.
pub const RIGID_ATTEMPTS: usize = 5;

/// A rigid locally free module of rank `w`: the first of up to five
/// samples with Ext¹(W, W) = 0, confirmed by an isomorphic second sample.
pub fn rigid_of_rank(alg: &Arc<Algebra>, field: Field, w: &[i64], seed: u64) -> Result<Representation, CoreError> {
    let find = |tag: &str| -> Result<Option<Representation>, CoreError> {
        for attempt in 0..RIGID_ATTEMPTS {
            let s = child_seed(seed, &format!("rigid-{tag}-{attempt}"));
            let v = random_locally_free(alg, field, w, s)?;
            if ext1_dim_euler(&v, &v) == Some(0) {
                return Ok(Some(v));
            }
        }
        Ok(None)
    };
    let Some(first) = find("a")? else {
        return Err(CoreError::Certification(format!(
            "no rigid module of rank {w:?} found (seed {seed})"
        )));
    };
    let Some(second) = find("b")? else {
        return Err(CoreError::Certification(format!(
            "second rigid sample of rank {w:?} failed (seed {seed})"
        )));
    };
    if !is_isomorphic(&first, &second, child_seed(seed, "rigid-iso")).is_isomorphic() {
        return Err(CoreError::Certification(format!(
            "two rigid samples of rank {w:?} differ (seed {seed})"
        )));
    }
    Ok(first)
}

/// Decomposition of a generic locally free module of a given rank.
#[derive(Clone, Debug, Serialize)]
pub struct GenericReport {
    pub family: String,
    pub v: RankVector,
    pub m: i64,
    pub w: RankVector,
    /// Rank vector (`None` if not locally free) with End and Ext¹ dimensions
    /// of every Krull-Schmidt summand.
    pub summands: Vec<(Option<RankVector>, usize, usize)>,
    /// Rank-η bricks over the algebraic closure (a summand whose End is a
    /// field of degree k counts k times).
    pub bricks: i64,
    pub profile_ok: bool,
    pub seeds: Vec<u64>,
}

fn generic_profile(
    entry: &AffineEntry,
    alg: &Arc<Algebra>,
    expected: &DecompositionReport,
    seed: u64,
) -> Result<GenericReport, CoreError> {
    let field = generic_field();
    let v = random_locally_free(alg, field, &expected.v, child_seed(seed, "generic-lf"))?;
    let parts = krull_schmidt(&v, child_seed(seed, "generic-split"))?;
    let mut summands = Vec::new();
    let mut bricks = 0i64;
    let mut rigid_total = vec![0i64; alg.vertices];
    let mut ok = true;
    for p in &parts {
        let r = p.rank_vector();
        let end = dim_hom(p, p);
        let ext = ext1_dim_euler(p, p).unwrap_or(usize::MAX);
        match &r {
            Some(r) if *r == entry.null_root => {
                bricks += 1;
                ok &= end == 1;
            }
            Some(r) if is_multiple_of(r, &entry.null_root).is_some() => {
                // Indecomposable over F_p only: k conjugate bricks.
                let k = is_multiple_of(r, &entry.null_root).unwrap() as usize;
                let degree = endomorphism_field_degree(p, child_seed(seed, "generic-field"))?;
                ok &= degree == Some(k);
                bricks += k as i64;
            }
            Some(r) => {
                ok &= ext == 0;
                for (t, x) in rigid_total.iter_mut().zip(r) {
                    *t += x;
                }
            }
            None => ok = false,
        }
        summands.push((r, end, ext));
    }
    ok &= bricks == expected.m && rigid_total == expected.w;
    summands.sort();
    Ok(GenericReport {
        family: entry.name(),
        v: expected.v.clone(),
        m: expected.m,
        w: expected.w.clone(),
        summands,
        bricks,
        profile_ok: ok,
        seeds: vec![seed],
    })
}

/// Sample a generic locally free module of rank `v` over F_101, split it and
/// compare with the folded decomposition: `m` bricks of rank η plus rigid
/// summands adding up to `w`. Retries once.
pub fn generic_decomposition_report(entry: &AffineEntry, v: &[i64], seed: u64) -> Result<GenericReport, CoreError> {
    let expected = folded_decomposition(entry, v, seed)?;
    let alg = Arc::new(Algebra::gls(&entry.quiver)?);
    let mut report = generic_profile(entry, &alg, &expected, seed)?;
    if !report.profile_ok {
        let retry = child_seed(seed, "generic-retry");
        report = generic_profile(entry, &alg, &expected, retry)?;
        report.seeds.insert(0, seed);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::by_name;

    fn d4() -> ValuedQuiver {
        ValuedQuiver::simply_laced(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()
    }

    #[test]
    fn d4_null_root_and_double_real_root() {
        let q = d4();
        let one = kac_decomposition_unfolded(&q, &[2, 1, 1, 1, 1], 1).unwrap();
        assert_eq!(one.m, 1);
        assert_eq!(one.summands, vec![(vec![2, 1, 1, 1, 1], 1)]);
        let two = kac_decomposition_unfolded(&q, &[2, 2, 2, 2, 2], 1).unwrap();
        assert_eq!(two.m, 0);
        assert_eq!(two.summands, vec![(vec![1, 1, 1, 1, 1], 2)]);
        let real = kac_decomposition_unfolded(&q, &[1, 1, 1, 0, 0], 1).unwrap();
        assert_eq!(real.summands, vec![(vec![1, 1, 1, 0, 0], 1)]);
    }

    #[test]
    fn bc1_folded_cases() {
        let e = by_name("BC1").unwrap();
        for (v, m, w, summands) in [
            (vec![2, 4], 2, vec![0, 0], vec![]),
            (vec![3, 5], 0, vec![3, 5], vec![(vec![3, 5], 1)]),
            (vec![2, 2], 0, vec![2, 2], vec![(vec![1, 1], 2)]),
            (vec![2, 6], 0, vec![2, 6], vec![(vec![1, 3], 2)]),
        ] {
            let r = folded_decomposition(&e, &v, 7).unwrap();
            assert_eq!((r.m, r.w.clone(), r.summands.clone()), (m, w, summands), "{v:?}");
            r.check(&e.quiver).unwrap();
        }
    }

    #[test]
    fn rigid_rank_one_one_is_p2() {
        let e = by_name("BC1").unwrap();
        let alg = Arc::new(Algebra::gls(&e.quiver).unwrap());
        let f = generic_field();
        let w = rigid_of_rank(&alg, f, &[1, 1], 3).unwrap();
        let p = crate::rep::projective(&alg, f, 1).unwrap();
        assert!(is_isomorphic(&w, &p, 1).is_isomorphic());
    }

    #[test]
    fn generic_three_eta() {
        let e = by_name("BC1").unwrap();
        let r = generic_decomposition_report(&e, &[3, 6], 11).unwrap();
        assert!(r.profile_ok, "{r:?}");
        assert_eq!(r.bricks, 3);
    }
}
