//! King (semi)stability over prime fields by exhaustive submodule
//! enumeration.

use std::collections::HashSet;
use std::sync::Arc;

use gls_linalg::{BigRational, Field, Matrix, Vector};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::Algebra;
use crate::catalog::AffineEntry;
use crate::decomposition::rigid_of_rank;
use crate::quiver::{apply, ValuedQuiver};
use crate::rep::Representation;
use crate::seeds::child_seed;
use crate::CoreError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WeightSource {
    Defect,
    LocallyFreeClass,
    Custom,
}

/// A linear form on dimension vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Weight {
    #[serde(serialize_with = "ser_rationals")]
    pub coords: Vec<BigRational>,
    pub source: WeightSource,
}

fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

impl Weight {
    pub fn custom(coords: &[i64]) -> Weight {
        Weight {
            coords: coords.iter().map(|&x| BigRational::from_integer(x.into())).collect(),
            source: WeightSource::Custom,
        }
    }

    pub fn eval(&self, d: &[usize]) -> BigRational {
        self.coords
            .iter()
            .zip(d)
            .map(|(c, &x)| c * BigRational::from_integer((x as i64).into()))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn integer_coords(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(crate::families::rational_to_i64).collect()
    }
}

/// The weight `d -> <w, D^-1 d>` of a rank vector `w`.
pub fn weight_from_lf_class(q: &ValuedQuiver, w: &[i64]) -> Weight {
    let coords = (0..q.vertices)
        .map(|j| {
            let mut d = vec![0; q.vertices];
            d[j] = 1;
            BigRational::from_integer(q.euler_rank_dim(w, &d).into())
        })
        .collect();
    Weight {
        coords,
        source: WeightSource::LocallyFreeClass,
    }
}

/// The defect as a weight on dimension vectors.
pub fn defect_weight(q: &ValuedQuiver) -> Result<Weight, CoreError> {
    let eta = q.null_root()?;
    let mut w = weight_from_lf_class(q, &eta);
    w.source = WeightSource::Defect;
    Ok(w)
}

/// Limits for the submodule enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub dim: usize,
    pub enumeration: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            dim: 8,
            enumeration: 1_000_000,
        }
    }
}

/// A subrepresentation given by a basis of each vertex space.
pub type Subspaces = Vec<Vec<Vector>>;

#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    pub ambient: Representation,
    /// All submodules found, including 0 and the ambient module.
    pub members: Vec<Subspaces>,
    pub cyclic_generators: usize,
    pub closure_rounds: usize,
    pub complete: bool,
}

type Key = Vec<Vec<u32>>;

/// Canonical form of a subspace family: reduced echelon rows, as residues.
fn canonical(field: Field, dims: &[usize], sub: &Subspaces) -> (Key, Subspaces) {
    let mut key = Vec::new();
    let mut basis = Vec::new();
    for (i, b) in sub.iter().enumerate() {
        if b.is_empty() {
            key.push(vec![]);
            basis.push(vec![]);
            continue;
        }
        let rows = Matrix::from_columns(field, dims[i], b).transpose();
        let ech = rows.echelon();
        let r = ech.pivots.len();
        let vecs: Vec<Vector> = (0..r).map(|k| ech.reduced.row(k)).collect();
        key.push(
            vecs.iter()
                .flatten()
                .map(|s| s.residue().unwrap_or(0))
                .chain([u32::MAX])
                .collect(),
        );
        basis.push(vecs);
    }
    (key, basis)
}

fn sum(field: Field, dims: &[usize], a: &Subspaces, b: &Subspaces) -> Subspaces {
    (0..dims.len())
        .map(|i| {
            let mut all = a[i].clone();
            all.extend(b[i].iter().cloned());
            crate::rep::independent_subset(field, dims[i], &all)
        })
        .collect()
}

/// Nonzero vectors of `F_p^d` up to scalars (first nonzero coordinate 1).
fn projective_points(field: Field, d: usize) -> Vec<Vector> {
    let p = field.characteristic() as u64;
    let mut out = Vec::new();
    for lead in 0..d {
        let free = d - lead - 1;
        for code in 0..p.pow(free as u32) {
            let mut v = vec![field.zero(); d];
            v[lead] = field.one();
            let mut c = code;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = field.from_i64((c % p) as i64);
                c /= p;
            }
            out.push(v);
        }
    }
    out
}

/// Every subrepresentation of `v` over a prime field: cyclic submodules of
/// all vectors up to scalars, closed under sums.
pub fn submodules(v: &Representation, caps: Caps) -> Result<SubmoduleLattice, CoreError> {
    let field = v.field;
    if !field.is_prime() {
        return Err(CoreError::Unsupported(
            "submodule enumeration needs a prime field".into(),
        ));
    }
    let dims = v.dims.clone();
    let p = field.characteristic() as u128;
    let count: u128 = dims.iter().map(|&d| (p.pow(d as u32) - 1) / (p - 1)).sum();
    let zero: Subspaces = vec![vec![]; dims.len()];
    let mut seen: HashSet<Key> = HashSet::new();
    let mut members: Vec<Subspaces> = Vec::new();
    let (k0, b0) = canonical(field, &dims, &zero);
    seen.insert(k0);
    members.push(b0);
    if v.total_dim() > caps.dim || count > caps.enumeration as u128 {
        return Ok(SubmoduleLattice {
            ambient: v.clone(),
            members,
            cyclic_generators: 0,
            closure_rounds: 0,
            complete: false,
        });
    }
    let mut generators = 0;
    for (i, &d) in dims.iter().enumerate() {
        for x in projective_points(field, d) {
            generators += 1;
            let sub = v.generated_submodule(&[(i, x)]);
            let (k, b) = canonical(field, &dims, &sub);
            if seen.insert(k) {
                members.push(b);
            }
        }
    }
    // Close under sums until nothing new appears.
    let mut rounds = 0;
    let mut frontier: Vec<usize> = (1..members.len()).collect();
    let mut work = 0usize;
    let mut complete = true;
    while !frontier.is_empty() {
        rounds += 1;
        let mut next = Vec::new();
        for &a in &frontier {
            for b in 1..members.len() {
                work += 1;
                if work > caps.enumeration {
                    complete = false;
                    break;
                }
                let s = sum(field, &dims, &members[a], &members[b]);
                let (k, basis) = canonical(field, &dims, &s);
                if seen.insert(k) {
                    members.push(basis);
                    next.push(members.len() - 1);
                }
            }
        }
        if !complete {
            break;
        }
        frontier = next;
    }
    Ok(SubmoduleLattice {
        ambient: v.clone(),
        members,
        cyclic_generators: generators,
        closure_rounds: rounds,
        complete,
    })
}

/// A destabilizing (or equalizing) submodule.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub dims: Vec<usize>,
    pub theta: String,
    /// Basis vectors per vertex as residue strings.
    pub basis: Vec<Vec<Vec<String>>>,
    #[serde(skip)]
    pub subspaces: Subspaces,
}

fn witness(theta: &Weight, sub: &Subspaces) -> Witness {
    let dims: Vec<usize> = sub.iter().map(Vec::len).collect();
    Witness {
        theta: theta.eval(&dims).to_string(),
        basis: sub
            .iter()
            .map(|b| b.iter().map(|x| x.iter().map(|s| s.to_string()).collect()).collect())
            .collect(),
        subspaces: sub.clone(),
        dims,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Stable,
    /// Semistable but some proper nonzero submodule has θ = 0.
    Semistable,
    NotSemistable,
    /// θ(V) ≠ 0.
    NotCandidate,
    /// The submodule lattice hit a cap.
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub weight: Weight,
    pub field: String,
    pub complete: bool,
    pub theta_v: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub submodules: usize,
}

impl StabilityReport {
    pub fn semistable(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Stable | Verdict::Semistable => Some(true),
            Verdict::NotSemistable | Verdict::NotCandidate => Some(false),
            Verdict::Unknown => None,
        }
    }

    pub fn stable(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Stable => Some(true),
            Verdict::Unknown => None,
            _ => Some(false),
        }
    }
}

/// King stability of `v` (over a prime field) for the weight `theta`.
pub fn stability(v: &Representation, theta: &Weight, caps: Caps) -> Result<StabilityReport, CoreError> {
    let theta_v = theta.eval(&v.dims);
    let base = |verdict, witness, complete, submodules| StabilityReport {
        weight: theta.clone(),
        field: v.field.to_string(),
        complete,
        theta_v: theta_v.to_string(),
        verdict,
        witness,
        submodules,
    };
    if !theta_v.is_zero() {
        return Ok(base(Verdict::NotCandidate, None, true, 0));
    }
    let lattice = submodules(v, caps)?;
    if !lattice.complete {
        return Ok(base(Verdict::Unknown, None, false, lattice.members.len()));
    }
    let total = v.total_dim();
    let mut equal = None;
    for sub in &lattice.members {
        let dims: Vec<usize> = sub.iter().map(Vec::len).collect();
        let size: usize = dims.iter().sum();
        if size == 0 || size == total {
            continue;
        }
        let t = theta.eval(&dims);
        if t.is_positive() {
            return Ok(base(
                Verdict::NotSemistable,
                Some(witness(theta, sub)),
                true,
                lattice.members.len(),
            ));
        }
        if t.is_zero() && equal.is_none() {
            equal = Some(witness(theta, sub));
        }
    }
    let verdict = if equal.is_some() {
        Verdict::Semistable
    } else {
        Verdict::Stable
    };
    Ok(base(verdict, equal, true, lattice.members.len()))
}

pub fn is_semistable(
    v: &Representation,
    theta: &Weight,
    caps: Caps,
) -> Result<(Option<bool>, Option<Witness>), CoreError> {
    let r = stability(v, theta, caps)?;
    Ok((
        r.semistable(),
        r.witness.filter(|_| r.verdict == Verdict::NotSemistable),
    ))
}

pub fn is_stable(v: &Representation, theta: &Weight, caps: Caps) -> Result<(Option<bool>, Option<Witness>), CoreError> {
    let r = stability(v, theta, caps)?;
    Ok((r.stable(), r.witness))
}

/// Verdicts of a module with rational entries reduced modulo several
/// primes; the conjunction is labelled as finite-field evidence.
#[derive(Clone, Debug, Serialize)]
pub struct MultiPrimeReport {
    pub label: &'static str,
    pub per_prime: Vec<StabilityReport>,
    pub semistable: Option<bool>,
    pub stable: Option<bool>,
}

fn conjunction(values: impl Iterator<Item = Option<bool>>) -> Option<bool> {
    let mut out = Some(true);
    for v in values {
        match v {
            Some(false) => return Some(false),
            None => out = None,
            Some(true) => {}
        }
    }
    out
}

pub fn stability_over_primes(
    v: &Representation,
    theta: &Weight,
    primes: &[u32],
    caps: Caps,
) -> Result<MultiPrimeReport, CoreError> {
    let mut per_prime = Vec::new();
    for &p in primes {
        let field = Field::prime(p)?;
        let w = if v.field == field {
            v.clone()
        } else {
            v.to_field(field)?
        };
        let r = stability(&w, theta, caps)?;
        // A stable verdict always implies a semistable one.
        debug_assert!(r.stable() != Some(true) || r.semistable() == Some(true));
        per_prime.push(r);
    }
    Ok(MultiPrimeReport {
        label: "finite-field certified",
        semistable: conjunction(per_prime.iter().map(StabilityReport::semistable)),
        stable: conjunction(per_prime.iter().map(StabilityReport::stable)),
        per_prime,
    })
}

/// Report on a regular τ-rigid module of a real Schur root with zero
/// defect.
#[derive(Clone, Debug, Serialize)]
pub struct RegularRigidReport {
    pub family: String,
    pub v: Vec<i64>,
    pub semistable: Option<bool>,
    pub per_prime: Vec<StabilityReport>,
    /// Smallest `n > 0` with Φⁿ(v) = v.
    pub coxeter_period: Option<usize>,
    pub seed: u64,
}

pub fn regular_tau_rigid_check(
    entry: &AffineEntry,
    v: &[i64],
    primes: &[u32],
    caps: Caps,
    seed: u64,
) -> Result<RegularRigidReport, CoreError> {
    let q = &entry.quiver;
    if v.iter().all(|&x| x == 0) {
        return Err(CoreError::InvalidRepresentation("zero rank vector".into()));
    }
    if q.defect(v)? != 0 {
        return Err(CoreError::InvalidRepresentation(format!("{v:?} has nonzero defect")));
    }
    if !q.is_positive_real_root(v)? {
        return Err(CoreError::InvalidRepresentation(format!("{v:?} is not a real root")));
    }
    let alg = Arc::new(Algebra::gls(q)?);
    let theta = defect_weight(q)?;
    let mut per_prime = Vec::new();
    for &p in primes {
        let field = Field::prime(p)?;
        let w = rigid_of_rank(&alg, field, v, child_seed(seed, &format!("regular-{p}")))?;
        per_prime.push(stability(&w, &theta, caps)?);
    }
    let phi = q.coxeter_transformation();
    let mut x = apply(&phi, v);
    let mut coxeter_period = None;
    for n in 1..=64 {
        if x == v {
            coxeter_period = Some(n);
            break;
        }
        x = apply(&phi, &x);
    }
    Ok(RegularRigidReport {
        family: entry.name(),
        v: v.to_vec(),
        semistable: conjunction(per_prime.iter().map(StabilityReport::semistable)),
        per_prime,
        coxeter_period,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::by_name;
    use crate::families::{bc1_algebra, bc1_v, bc1_v_bar_infinity, ProjectivePoint};
    use crate::rep::{generalized_simple, projective};

    #[test]
    fn defect_weight_of_bc1() {
        let q = by_name("BC1").unwrap().quiver;
        let w = defect_weight(&q).unwrap();
        assert_eq!(w.integer_coords(), Some(vec![-1, 2]));
        assert!(w.eval(&[4, 2]).is_zero());
        assert_eq!(w.eval(&[4, 0]), BigRational::from_integer((-4).into()));
    }

    #[test]
    fn generalized_simple_lattice_is_a_chain() {
        let a = bc1_algebra();
        let f2 = Field::prime(2).unwrap();
        let e = generalized_simple(&a, f2, 0);
        let l = submodules(&e, Caps::default()).unwrap();
        assert!(l.complete);
        assert_eq!(l.members.len(), 5);
    }

    #[test]
    fn bc1_stability_examples() {
        let a = bc1_algebra();
        let f3 = Field::prime(3).unwrap();
        let theta = defect_weight(&by_name("BC1").unwrap().quiver).unwrap();
        let vb = bc1_v_bar_infinity(&a, f3).unwrap();
        assert_eq!(
            stability(&vb, &theta, Caps::default()).unwrap().verdict,
            Verdict::Stable
        );
        let v1 = bc1_v(&a, f3, ProjectivePoint::affine(1)).unwrap();
        assert_eq!(
            stability(&v1, &theta, Caps::default()).unwrap().verdict,
            Verdict::Stable
        );
        let vinf = bc1_v(&a, f3, ProjectivePoint::INFINITY).unwrap();
        let r = stability(&vinf, &theta, Caps::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Semistable);
        assert_eq!(r.witness.unwrap().dims, vec![2, 1]);
        let p = projective(&a, f3, 0).unwrap();
        assert_eq!(
            stability(&p, &theta, Caps::default()).unwrap().verdict,
            Verdict::NotCandidate
        );
    }
}
