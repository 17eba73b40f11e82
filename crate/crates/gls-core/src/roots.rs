//! Affine root-system data: defect, tubes of regular real roots, tier
//! numbers and the extending type.

use serde::Serialize;

use crate::catalog::{AffineEntry, Family};
use crate::quiver::{apply, Edge, RankVector, ValuedQuiver};
use crate::CoreError;

/// One Φ-orbit of quasi-simple regular real roots, listed so that entry
/// k + 1 is Φ applied to entry k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tube {
    pub quasi_simples: Vec<RankVector>,
    pub rank: usize,
    pub tier: i64,
}

impl Tube {
    /// Sum of `l` consecutive quasi-simples ending at index `k` (going
    /// backwards), i.e. the regular root at height `l` over position `k`.
    pub fn root(&self, k: usize, l: usize) -> RankVector {
        let r = self.rank;
        let n = self.quasi_simples[0].len();
        let mut out = vec![0; n];
        for j in 0..l {
            let idx = (k + r * l - j) % r;
            for (o, x) in out.iter_mut().zip(&self.quasi_simples[idx]) {
                *o += x;
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystemData {
    pub null_root: RankVector,
    /// Coefficients of the defect on rank vectors.
    pub defect: Vec<i64>,
    pub tubes: Vec<Tube>,
    /// Largest tube tier, `None` when no regular real root exists.
    pub computed_tier: Option<i64>,
    /// Tier from the catalog, when the quiver came from it.
    pub catalog_tier: Option<u32>,
}

impl RootSystemData {
    /// Whether the computed and catalog tiers disagree (or one is missing).
    pub fn tier_mismatch(&self) -> bool {
        match (self.computed_tier, self.catalog_tier) {
            (Some(a), Some(b)) => a != b as i64,
            (None, Some(_)) => true,
            _ => false,
        }
    }
}

fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Order of `v` under `phi`, capped.
fn period(phi: &[Vec<i64>], v: &[i64], cap: usize) -> Option<usize> {
    let mut w = apply(phi, v);
    for n in 1..=cap {
        if w == v {
            return Some(n);
        }
        w = apply(phi, &w);
    }
    None
}

/// Tube structure from the regular real roots below three times the null
/// root.
pub fn tubes(q: &ValuedQuiver) -> Result<RootSystemData, CoreError> {
    let eta = q.null_root()?;
    let defect: Vec<i64> = (0..q.vertices)
        .map(|i| q.ringel_unchecked(&eta, &q.simple_root(i)))
        .collect();
    let bound: Vec<i64> = eta.iter().map(|x| 3 * x).collect();
    let phi = q.coxeter_transformation();
    let regular: Vec<RankVector> = q
        .positive_real_roots_below(&bound)
        .into_iter()
        .filter(|v| v.iter().zip(&defect).map(|(a, b)| a * b).sum::<i64>() == 0)
        .collect();
    let mut big_period = 1usize;
    for v in &regular {
        let p = period(&phi, v, 1000)
            .ok_or_else(|| CoreError::NotAffine("Coxeter action is not periodic on regular roots".into()))?;
        big_period = num_integer::lcm(big_period, p);
    }
    // Orbits of every regular root over one full period.
    let orbits: Vec<Vec<RankVector>> = regular
        .iter()
        .map(|v| {
            let mut o = vec![v.clone()];
            for _ in 1..big_period {
                o.push(apply(&phi, o.last().unwrap()));
            }
            o
        })
        .collect();
    let below = |a: usize, b: usize| orbits[a].iter().zip(&orbits[b]).all(|(x, y)| leq(x, y));
    let simple: Vec<usize> = (0..regular.len())
        .filter(|&i| !(0..regular.len()).any(|j| j != i && below(j, i)))
        .collect();
    let mut used = vec![false; regular.len()];
    let mut found = Vec::new();
    for &i in &simple {
        if used[i] {
            continue;
        }
        let mut tube = vec![regular[i].clone()];
        used[i] = true;
        loop {
            let next = apply(&phi, tube.last().unwrap());
            if next == tube[0] {
                break;
            }
            let j = regular
                .iter()
                .position(|w| *w == next)
                .filter(|j| simple.contains(j))
                .ok_or_else(|| CoreError::NotAffine("Coxeter image of a quasi-simple is not quasi-simple".into()))?;
            used[j] = true;
            tube.push(next);
        }
        let tier = q.ringel_unchecked(&tube[0], &tube[0]);
        found.push(Tube {
            rank: tube.len(),
            quasi_simples: tube,
            tier,
        });
    }
    found.sort_by(|a, b| a.quasi_simples[0].cmp(&b.quasi_simples[0]));
    let computed_tier = found.iter().map(|t| t.tier).max();
    Ok(RootSystemData {
        null_root: eta,
        defect,
        tubes: found,
        computed_tier,
        catalog_tier: None,
    })
}

/// Tube data for a catalog entry, carrying the table tier alongside.
pub fn root_system(entry: &AffineEntry) -> Result<RootSystemData, CoreError> {
    let mut data = tubes(&entry.quiver)?;
    data.catalog_tier = Some(entry.tier);
    Ok(data)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendingData {
    pub extending_vertex: usize,
    pub reduced_root: RankVector,
    /// Symmetrizer of the two vertices of the extending type.
    pub c0: i64,
    pub c1: i64,
    /// Common value `c0 * v_out == c1 * v_in` on the edge 0 -> 1.
    pub weight: i64,
    pub upsilon: ValuedQuiver,
}

impl ExtendingData {
    /// Written like "4 -> 4|1 1".
    pub fn display(&self) -> String {
        let e = &self.upsilon.edges[0];
        format!("{} -> {} {}", self.c0, e.label(), self.c1)
    }
}

/// Extending type at the catalog's extending vertex. The edge weight is
/// taken as minus the symmetrized pairing of the simple root there with the
/// reduced root, which makes it independent of the orientation.
pub fn extending_data(entry: &AffineEntry) -> Result<ExtendingData, CoreError> {
    let q = &entry.quiver;
    if entry.family == Family::A {
        return Err(CoreError::Unsupported(
            "extending data is not defined for cyclic type A".into(),
        ));
    }
    let e = entry.extending_vertex;
    let eta = q.null_root()?;
    let mut reduced = eta.clone();
    reduced[e] -= 1;
    if matches!(entry.family, Family::BC1 | Family::BC) {
        if reduced.iter().any(|x| x % 2 != 0) {
            return Err(CoreError::NotAffine("reduced root is not divisible by two".into()));
        }
        reduced.iter_mut().for_each(|x| *x /= 2);
    }
    if !q.is_positive_real_root(&reduced)? {
        return Err(CoreError::NotAffine(format!(
            "reduced root {reduced:?} is not a real root"
        )));
    }
    let c0 = q.c(e);
    let c1 = q.ringel_unchecked(&reduced, &reduced);
    let weight = -q.symmetrized_form(&q.simple_root(e), &reduced)?;
    if weight <= 0 || weight % c0 != 0 || weight % c1 != 0 {
        return Err(CoreError::NotAffine(format!(
            "extending edge weight {weight} is not valid"
        )));
    }
    let upsilon = ValuedQuiver::new(
        vec![c0 as u32, c1 as u32],
        vec![Edge {
            from: 0,
            to: 1,
            v_out: (weight / c0) as u32,
            v_in: (weight / c1) as u32,
        }],
    )?;
    Ok(ExtendingData {
        extending_vertex: e,
        reduced_root: reduced,
        c0,
        c1,
        weight,
        upsilon,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::by_name;

    #[test]
    fn tiers_of_small_types() {
        for (name, tier) in [("C2", 1), ("B2", 2), ("G23", 3), ("G21", 1), ("D4", 1)] {
            let data = root_system(&by_name(name).unwrap()).unwrap();
            assert_eq!(data.computed_tier, Some(tier), "{name}: {:?}", data.tubes);
            for t in &data.tubes {
                let sum = t.root(t.rank - 1, t.rank);
                let expected: Vec<i64> = data.null_root.iter().map(|x| x * t.tier).collect();
                assert_eq!(sum, expected, "{name}");
            }
        }
    }

    #[test]
    fn bc1_has_no_regular_real_roots() {
        let data = root_system(&by_name("BC1").unwrap()).unwrap();
        assert!(data.tubes.is_empty());
        assert!(data.tier_mismatch());
        assert_eq!(data.defect, vec![-4, 2]);
    }

    #[test]
    fn extending_types() {
        let bc1 = extending_data(&by_name("BC1").unwrap()).unwrap();
        assert_eq!(bc1.display(), "4 -> 4|1 1");
        assert_eq!(extending_data(&by_name("E8").unwrap()).unwrap().display(), "1 -> 2|2 1");
        assert_eq!(
            extending_data(&by_name("G21").unwrap()).unwrap().display(),
            "3 -> 2|2 3"
        );
        assert_eq!(extending_data(&by_name("C3").unwrap()).unwrap().display(), "2 -> 2|2 2");
        assert!(extending_data(&by_name("A3").unwrap()).is_err());
        assert_eq!(extending_data(&by_name("A1").unwrap()).unwrap().display(), "1 -> 2|2 1");
    }
}
