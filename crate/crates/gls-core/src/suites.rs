//! Named verification suites. Each suite is a list of numbered criteria;
//! each criterion is a list of checks with a JSON payload.

use std::sync::Arc;

use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::catalog::{by_name, representatives, AffineEntry};
use crate::decomposition::{folded_decomposition, generic_decomposition_report, generic_field, rigid_of_rank};
use crate::families::{
    bc1_algebra, bc1_g_vector_comparison, bc1_preinjective, bc1_preprojective, bc1_rep_dimension, bc1_root, bc1_v,
    bc1_v_bar_infinity, eta_brick_sample, lambda_grid, Bc1Series, ProjectivePoint, BC1_COXETER,
};
use crate::quiver::{apply, RankVector};
use crate::rep::{
    ar_translate, dim_hom, ext1_dim, ext1_dim_euler, g_vector, is_isomorphic, projective, random_locally_free,
    random_module, Representation,
};
use crate::roots::root_system;
use crate::seeds::{child_seed, stream};
use crate::stability::{defect_weight, regular_tau_rigid_check, stability, Caps, Verdict};
use crate::unfold::unfold;
use crate::CoreError;
use gls_linalg::{Field, Matrix};

pub const SUITES: [&str; 8] = [
    "catalog",
    "bc1",
    "family",
    "stability",
    "euler",
    "decomposition",
    "tubes",
    "null-family",
];

/// Criteria run by a suite.
pub fn suite_criteria(name: &str) -> Option<&'static [u32]> {
    Some(match name {
        "catalog" => &[1],
        "bc1" => &[2, 3],
        "family" => &[4, 10],
        "stability" => &[5],
        "euler" => &[6],
        "decomposition" => &[7],
        "tubes" => &[8],
        "null-family" => &[9],
        _ => return None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub primes: Vec<u32>,
    pub caps: Caps,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            seed: 0,
            primes: vec![3, 5, 7],
            caps: Caps::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub criterion: u32,
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<SuiteReport> {
    let criteria = suite_criteria(name)?;
    let checks: Vec<Check> = criteria.iter().flat_map(|&n| run_criterion(n, cfg)).collect();
    Some(SuiteReport {
        suite: name.to_string(),
        seed: cfg.seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Run one numbered criterion. Randomness comes from a stream named after
/// the criterion, so criteria never share draws.
pub fn run_criterion(n: u32, cfg: &SuiteConfig) -> Vec<Check> {
    let seed = child_seed(cfg.seed, &format!("criterion-{n}"));
    let mut out = Vec::new();
    let mut add = |name: &str, r: Result<(bool, Value), CoreError>| {
        let (passed, detail) = r.unwrap_or_else(|e| (false, json!({ "error": e.to_string() })));
        out.push(Check {
            criterion: n,
            name: name.to_string(),
            passed,
            detail,
        });
    };
    match n {
        1 => {
            for e in representatives(8) {
                add(&format!("null-root {}", e.name()), catalog_check(&e));
            }
        }
        2 => {
            add("coxeter matrix", bc1_coxeter_matrix());
            add("root series by coxeter iteration", bc1_series_by_iteration(10));
            add("defect on dimension vectors", bc1_defect());
        }
        3 => {
            add("translate series ranks", bc1_translate_series(5));
            add("g-vector reconciliation", bc1_g_vectors());
            for fam in ["BC1", "C2"] {
                add(
                    &format!("ar g-vector formula {fam}"),
                    ar_formula(fam, 25, child_seed(seed, fam)),
                );
            }
        }
        4 => {
            add("family over the grid", bc1_family_checks(seed));
        }
        5 => {
            add("bc1 stability", bc1_stability(&cfg.primes, cfg.caps));
            add("dimension (2,1) classification over F3", dim21_classification(3, seed));
            add(
                "regular rigid quasi-simple in C2",
                c2_regular_rigid(&cfg.primes, cfg.caps, seed),
            );
        }
        6 => {
            for e in representatives(8) {
                add(
                    &format!("folding isometry {}", e.name()),
                    folding_isometry(&e, 100, child_seed(seed, &e.name())),
                );
            }
            for fam in ["BC1", "C2"] {
                add(
                    &format!("ext by presentation {fam}"),
                    ext_versus_euler(fam, 25, child_seed(seed, fam)),
                );
            }
        }
        7 => {
            add("bc1 decompositions", bc1_decompositions(seed));
            add("C2 random decompositions", c2_decompositions(30, seed));
            add("generic rank 3 eta in BC1", generic_three_eta(seed));
        }
        8 => {
            for (fam, tier) in [("C2", 1), ("B2", 2), ("G23", 3)] {
                add(&format!("tiers and tube sums {fam}"), tube_check(fam, tier));
            }
            add("quasi-simple hom law C2", quasi_simple_hom_law(seed));
        }
        9 => {
            for fam in ["C2", "B2", "G21"] {
                add(&format!("eta brick {fam}"), eta_brick(fam, child_seed(seed, fam)));
            }
        }
        10 => {
            add("dimension count", dimension_count(6));
        }
        _ => add("unknown criterion", Ok((false, json!(n)))),
    }
    out
}

type Outcome = Result<(bool, Value), CoreError>;

fn catalog_check(e: &AffineEntry) -> Outcome {
    let q = &e.quiver;
    let eta = q.null_root()?;
    let tits = q.tits_form(&eta)?;
    let phi_fixed = apply(&q.coxeter_transformation(), &eta) == eta;
    let radical = (0..q.vertices)
        .map(|i| q.symmetrized_form(&eta, &q.simple_root(i)))
        .collect::<Result<Vec<_>, _>>()?;
    let ok = eta == e.null_root && tits == 0 && phi_fixed && radical.iter().all(|&x| x == 0);
    Ok((
        ok,
        json!({ "eta": eta, "table": e.null_root, "q": tits, "phi_fixed": phi_fixed }),
    ))
}

fn bc1_coxeter_matrix() -> Outcome {
    let phi = by_name("BC1")?.quiver.coxeter_transformation();
    let expected: Vec<Vec<i64>> = BC1_COXETER.iter().map(|r| r.to_vec()).collect();
    Ok((phi == expected, json!({ "computed": phi })))
}

/// Preprojective ranks from Φ⁻¹ applied to the projectives, preinjective
/// ones from Φ applied to the injectives.
fn bc1_series_by_iteration(max_n: i64) -> Outcome {
    let q = by_name("BC1")?.quiver;
    let (phi, inv) = (q.coxeter_transformation(), q.inverse_coxeter());
    let mut bad = Vec::new();
    for i in 0..2 {
        let mut p = bc1_root(Bc1Series::Preprojective, i, 0);
        let mut inj = bc1_root(Bc1Series::Preinjective, i, 0);
        for n in 1..=max_n {
            p = apply(&inv, &p);
            inj = apply(&phi, &inj);
            if p != bc1_root(Bc1Series::Preprojective, i, n) || inj != bc1_root(Bc1Series::Preinjective, i, n) {
                bad.push(json!({ "vertex": i, "n": n }));
            }
        }
    }
    Ok((bad.is_empty(), json!({ "max_n": max_n, "mismatches": bad })))
}

fn bc1_defect() -> Outcome {
    let w = defect_weight(&by_name("BC1")?.quiver)?;
    let c = w.integer_coords();
    Ok((c == Some(vec![-1, 2]), json!({ "defect": c })))
}

fn bc1_translate_series(max_n: usize) -> Outcome {
    let alg = bc1_algebra();
    let field = generic_field();
    let mut ranks = Vec::new();
    for i in 0..2 {
        for n in 0..=max_n {
            // Both constructors fail unless the rank matches its formula.
            let p = bc1_preprojective(&alg, field, i, n)?;
            let inj = bc1_preinjective(&alg, field, i, n)?;
            ranks.push(
                json!({ "vertex": i, "n": n, "preprojective": p.rank_vector(), "preinjective": inj.rank_vector() }),
            );
        }
    }
    Ok((true, json!(ranks)))
}

fn bc1_g_vectors() -> Outcome {
    let c = bc1_g_vector_comparison(generic_field(), 5)?;
    Ok((
        c.reconciled,
        json!({ "change_of_basis": c.change_of_basis, "modules": c.rows.len() }),
    ))
}

fn nonzero_rank(rng: &mut impl Rng, n: usize, max: i64) -> RankVector {
    loop {
        let v: RankVector = (0..n).map(|_| rng.gen_range(0..=max)).collect();
        if v.iter().any(|&x| x > 0) {
            return v;
        }
    }
}

/// A random locally free module or a random module with a few relations,
/// alternating.
fn sample_module(
    alg: &Arc<Algebra>,
    field: Field,
    k: usize,
    rng: &mut impl Rng,
    seed: u64,
) -> Result<Representation, CoreError> {
    if k.is_multiple_of(2) {
        let r = nonzero_rank(rng, alg.vertices, 2);
        random_locally_free(alg, field, &r, seed)
    } else {
        let tops: Vec<usize> = nonzero_rank(rng, alg.vertices, 1).iter().map(|&x| x as usize).collect();
        random_module(alg, field, &tops, rng.gen_range(0..=2), seed)
    }
}

fn gls(fam: &str) -> Result<(AffineEntry, Arc<Algebra>), CoreError> {
    let e = by_name(fam)?;
    let alg = Arc::new(Algebra::gls(&e.quiver)?);
    Ok((e, alg))
}

/// `Σ g_i dim U_i = hom(V,U) − hom(U,τV)` on random pairs.
fn ar_formula(fam: &str, pairs: usize, seed: u64) -> Outcome {
    let (_, alg) = gls(fam)?;
    let field = generic_field();
    let mut rng = stream(seed, "ar-formula");
    let mut failures = Vec::new();
    for k in 0..pairs {
        let v = sample_module(&alg, field, k, &mut rng, child_seed(seed, &format!("v{k}")))?;
        let u = sample_module(&alg, field, k + 1, &mut rng, child_seed(seed, &format!("u{k}")))?;
        let g = g_vector(&v)?;
        let lhs: i64 = g.iter().zip(u.dim_vector()).map(|(a, b)| a * b).sum();
        let tau = ar_translate(&v)?;
        let rhs = dim_hom(&v, &u) as i64 - dim_hom(&u, &tau) as i64;
        if lhs != rhs {
            failures.push(json!({ "pair": k, "v": v.dims, "u": u.dims, "lhs": lhs, "rhs": rhs }));
        }
    }
    Ok((
        failures.is_empty(),
        json!({ "pairs": pairs, "seed": seed, "failures": failures }),
    ))
}

fn bc1_family_checks(seed: u64) -> Outcome {
    let alg = bc1_algebra();
    let q = Field::Rational;
    let grid = lambda_grid();
    let family: Vec<(ProjectivePoint, Representation)> = grid
        .iter()
        .map(|&l| bc1_v(&alg, q, l).map(|v| (l, v)))
        .collect::<Result<_, _>>()?;
    let regular = projective(&alg, q, 0)?.direct_sum(&projective(&alg, q, 1)?);
    let mut failures = Vec::new();
    for (l, v) in &family {
        let end = dim_hom(v, v);
        if (l.is_infinity() && end < 2) || (!l.is_infinity() && end != 1) {
            failures.push(format!("End dimension at {l}"));
        }
        if v.rank_vector() != Some(vec![1, 2]) {
            failures.push(format!("rank vector at {l}"));
        }
        if dim_hom(v, &regular) != 0 {
            failures.push(format!("Hom to the algebra at {l}"));
        }
        let s = child_seed(seed, &format!("{l}"));
        if !is_isomorphic(&ar_translate(v)?, v, s).is_isomorphic() {
            failures.push(format!("tau-periodicity at {l}"));
        }
        let neg = bc1_v(&alg, q, -*l)?;
        if !is_isomorphic(&neg, v, s).is_isomorphic() {
            failures.push(format!("sign symmetry at {l}"));
        }
        for (m, w) in &family {
            if !l.same_as(*m, q) && !l.same_as(-*m, q) && dim_hom(v, w) != 0 {
                failures.push(format!("Hom({l},{m}) nonzero"));
            }
        }
    }
    Ok((failures.is_empty(), json!({ "grid": grid.len(), "failures": failures })))
}

fn bc1_stability(primes: &[u32], caps: Caps) -> Outcome {
    let alg = bc1_algebra();
    let theta = defect_weight(&by_name("BC1")?.quiver)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for &p in primes.iter().filter(|&&p| p <= 5) {
        let f = Field::prime(p)?;
        let vb = stability(&bc1_v_bar_infinity(&alg, f)?, &theta, caps)?;
        let v1 = stability(&bc1_v(&alg, f, ProjectivePoint::affine(1))?, &theta, caps)?;
        let v2 = stability(&bc1_v(&alg, f, ProjectivePoint::affine(2))?, &theta, caps)?;
        let vinf = stability(&bc1_v(&alg, f, ProjectivePoint::INFINITY)?, &theta, caps)?;
        let p1 = stability(&projective(&alg, f, 1)?, &theta, caps)?;
        let witness = vinf.witness.as_ref().map(|w| (w.dims.clone(), w.theta.clone()));
        let row_ok = [&vb, &v1, &v2, &vinf].iter().all(|r| r.complete)
            && vb.verdict == Verdict::Stable
            && v1.verdict == Verdict::Stable
            && v2.verdict == Verdict::Stable
            && vinf.verdict == Verdict::Semistable
            && witness == Some((vec![2, 1], "0".to_string()))
            && p1.semistable() == Some(false);
        ok &= row_ok;
        rows.push(json!({
            "prime": p,
            "v_bar_infinity": vb.verdict,
            "v_1": v1.verdict,
            "v_2": v2.verdict,
            "v_infinity": vinf.verdict,
            "witness": witness,
            "p_1": p1.verdict,
        }));
    }
    // Semistability of V_λ at λ = 3 over every configured prime.
    for &p in primes {
        let f = Field::prime(p)?;
        let r = stability(&bc1_v(&alg, f, ProjectivePoint::affine(3))?, &theta, caps)?;
        ok &= r.semistable() == Some(true);
        rows.push(json!({ "prime": p, "v_3": r.verdict }));
    }
    ok &= primes.contains(&3) && primes.contains(&5);
    Ok((ok, json!(rows)))
}

/// Every ∂-stable module of dimension vector (2,1) over F_p is isomorphic
/// to V̄_∞. The loop is any square-zero 2x2 matrix, the arrow any 2x1 one.
fn dim21_classification(p: u32, seed: u64) -> Outcome {
    let alg = bc1_algebra();
    let f = Field::prime(p)?;
    let theta = defect_weight(&by_name("BC1")?.quiver)?;
    let target = bc1_v_bar_infinity(&alg, f)?;
    let pp = p as i64;
    let (mut stable, mut total) = (0, 0);
    let mut bad = Vec::new();
    for code in 0..pp.pow(6) {
        let digits: Vec<i64> = (0..6).map(|k| code / pp.pow(k) % pp).collect();
        let eps = Matrix::from_i64_rows(f, &[vec![digits[0], digits[1]], vec![digits[2], digits[3]]]);
        if !eps.mul(&eps).is_zero() {
            continue;
        }
        let alpha = Matrix::from_i64_rows(f, &[vec![digits[4]], vec![digits[5]]]);
        let v = Representation::checked(alg.clone(), f, vec![2, 1], vec![alpha, eps])?;
        total += 1;
        if stability(&v, &theta, Caps::default())?.verdict == Verdict::Stable {
            stable += 1;
            if !is_isomorphic(&v, &target, child_seed(seed, &code.to_string())).is_isomorphic() {
                bad.push(code);
            }
        }
    }
    Ok((
        bad.is_empty() && stable > 0,
        json!({ "modules": total, "stable": stable, "not_isomorphic": bad }),
    ))
}

fn c2_regular_rigid(primes: &[u32], caps: Caps, seed: u64) -> Outcome {
    let e = by_name("C2")?;
    let data = root_system(&e)?;
    let mut rows = Vec::new();
    let mut ok = !data.tubes.is_empty();
    for t in &data.tubes {
        let v = &t.quasi_simples[0];
        let r = regular_tau_rigid_check(&e, v, primes, caps, child_seed(seed, &format!("{v:?}")))?;
        ok &= r.semistable == Some(true) && r.coxeter_period == Some(t.rank);
        rows.push(json!({ "v": v, "semistable": r.semistable, "period": r.coxeter_period }));
    }
    Ok((ok, json!(rows)))
}

fn random_vector(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}

fn folding_isometry(e: &AffineEntry, pairs: usize, seed: u64) -> Outcome {
    let q = &e.quiver;
    let u = unfold(q)?;
    let mut rng = stream(seed, "isometry");
    let mut failures = 0;
    for _ in 0..pairs {
        let v = random_vector(&mut rng, q.vertices, -5, 5);
        let w = random_vector(&mut rng, q.vertices, -5, 5);
        if u.quiver.ringel_form(&u.lift(&v), &u.lift(&w))? != q.ringel_form(&v, &w)? {
            failures += 1;
        }
    }
    Ok((failures == 0, json!({ "pairs": pairs, "failures": failures })))
}

/// Ext¹ from the projective presentation against the Euler shortcut.
fn ext_versus_euler(fam: &str, pairs: usize, seed: u64) -> Outcome {
    let (_, alg) = gls(fam)?;
    let field = generic_field();
    let mut rng = stream(seed, "ext");
    let mut failures = Vec::new();
    for k in 0..pairs {
        let rv = nonzero_rank(&mut rng, alg.vertices, 2);
        let rw = nonzero_rank(&mut rng, alg.vertices, 2);
        let v = random_locally_free(&alg, field, &rv, child_seed(seed, &format!("v{k}")))?;
        let w = random_locally_free(&alg, field, &rw, child_seed(seed, &format!("w{k}")))?;
        let ext = ext1_dim(&v, &w)?;
        if Some(ext) != ext1_dim_euler(&v, &w) {
            failures.push(json!({ "v": rv, "w": rw, "ext": ext }));
        }
    }
    Ok((
        failures.is_empty(),
        json!({ "pairs": pairs, "seed": seed, "failures": failures }),
    ))
}

/// Rank vector, expected m, expected w and expected rigid summands.
type Bc1Case = (&'static [i64], i64, &'static [i64], &'static [(&'static [i64], usize)]);

fn bc1_decompositions(seed: u64) -> Outcome {
    let e = by_name("BC1")?;
    let cases: [Bc1Case; 4] = [
        (&[2, 4], 2, &[0, 0], &[]),
        (&[3, 5], 0, &[3, 5], &[(&[3, 5], 1)]),
        (&[2, 2], 0, &[2, 2], &[(&[1, 1], 2)]),
        (&[2, 6], 0, &[2, 6], &[(&[1, 3], 2)]),
    ];
    let mut rows = Vec::new();
    let mut ok = true;
    for (v, m, w, summands) in cases {
        let r = folded_decomposition(&e, v, child_seed(seed, &format!("{v:?}")))?;
        let expected: Vec<(RankVector, usize)> = summands.iter().map(|(b, k)| (b.to_vec(), *k)).collect();
        let good = r.m == m && r.w == w && r.summands == expected && r.check(&e.quiver).is_ok();
        ok &= good;
        rows.push(json!({ "v": v, "m": r.m, "w": r.w, "summands": r.summands, "passed": good, "seeds": r.seeds }));
    }
    Ok((ok, json!(rows)))
}

fn c2_decompositions(count: usize, seed: u64) -> Outcome {
    let e = by_name("C2")?;
    let mut rng = stream(seed, "c2-vectors");
    let mut failures = Vec::new();
    for k in 0..count {
        let v = nonzero_rank(&mut rng, e.quiver.vertices, 8);
        let a = folded_decomposition(&e, &v, child_seed(seed, &format!("a{k}")))?;
        let b = folded_decomposition(&e, &v, child_seed(seed, &format!("b{k}")))?;
        let issue = a
            .check(&e.quiver)
            .err()
            .or_else(|| ((a.m, &a.w) != (b.m, &b.w)).then(|| "seed dependence".to_string()));
        if let Some(why) = issue {
            failures.push(json!({ "v": v, "why": why, "seeds": [a.seeds, b.seeds] }));
        }
    }
    Ok((failures.is_empty(), json!({ "vectors": count, "failures": failures })))
}

fn generic_three_eta(seed: u64) -> Outcome {
    let e = by_name("BC1")?;
    let v: Vec<i64> = e.null_root.iter().map(|x| 3 * x).collect();
    let r = generic_decomposition_report(&e, &v, seed)?;
    Ok((
        r.profile_ok && r.bricks == 3,
        serde_json::to_value(&r).unwrap_or(Value::Null),
    ))
}

fn tube_check(fam: &str, tier: i64) -> Outcome {
    let e = by_name(fam)?;
    let q = &e.quiver;
    let data = root_system(&e)?;
    let phi = q.coxeter_transformation();
    let mut ok = data.computed_tier == Some(tier) && !data.tier_mismatch();
    let mut tubes = Vec::new();
    for t in &data.tubes {
        let mut total = vec![0; q.vertices];
        for v in &t.quasi_simples {
            total.iter_mut().zip(v).for_each(|(a, b)| *a += b);
            ok &= q.is_positive_real_root(v)? && q.defect(v)? == 0;
        }
        let cyclic = (0..t.rank).all(|k| apply(&phi, &t.quasi_simples[k]) == t.quasi_simples[(k + 1) % t.rank]);
        let expected: Vec<i64> = data.null_root.iter().map(|x| t.tier * x).collect();
        ok &= total == expected && cyclic;
        tubes.push(json!({ "rank": t.rank, "tier": t.tier, "sum": total, "cyclic": cyclic }));
    }
    Ok((
        ok,
        json!({ "tier": data.computed_tier, "table_tier": data.catalog_tier, "tubes": tubes }),
    ))
}

/// For rigid modules on quasi-simple roots: dim Hom(V, V') is the Ringel
/// form of the rank vectors when the roots agree and zero otherwise.
fn quasi_simple_hom_law(seed: u64) -> Outcome {
    let (e, alg) = gls("C2")?;
    let q = &e.quiver;
    let field = generic_field();
    let roots: Vec<RankVector> = root_system(&e)?
        .tubes
        .iter()
        .flat_map(|t| t.quasi_simples.clone())
        .collect();
    let modules: Vec<Representation> = roots
        .iter()
        .map(|v| rigid_of_rank(&alg, field, v, child_seed(seed, &format!("{v:?}"))))
        .collect::<Result<_, _>>()?;
    let mut failures = Vec::new();
    for (a, va) in roots.iter().zip(&modules) {
        for (b, vb) in roots.iter().zip(&modules) {
            let expected = if a == b { q.ringel_form(a, b)? } else { 0 };
            let got = dim_hom(va, vb) as i64;
            if got != expected {
                failures.push(json!({ "from": a, "to": b, "hom": got, "expected": expected }));
            }
        }
    }
    Ok((
        failures.is_empty() && !roots.is_empty(),
        json!({ "quasi_simples": roots, "failures": failures }),
    ))
}

fn eta_brick(fam: &str, seed: u64) -> Outcome {
    let e = by_name(fam)?;
    let (_, report) = eta_brick_sample(&e, generic_field(), seed)?;
    Ok((
        report.passed(&e.null_root),
        serde_json::to_value(&report).unwrap_or(Value::Null),
    ))
}

/// For BC1 with zero defect and d₂ = 2r + s (s < 2): the module
/// V̄_∞^s ⊕ V_1 ⊕ … ⊕ V_r has End of dimension r + s, and
/// dim Rep − dim orbit = r with dim GL = 5 d₂².
fn dimension_count(max_d2: i64) -> Outcome {
    let alg = bc1_algebra();
    let q = Field::Rational;
    let mut rows = Vec::new();
    let mut ok = true;
    for d2 in 1..=max_d2 {
        let (r, s) = (d2 / 2, d2 % 2);
        let mut parts = Vec::new();
        if s == 1 {
            parts.push(bc1_v_bar_infinity(&alg, q)?);
        }
        for i in 1..=r {
            parts.push(bc1_v(&alg, q, ProjectivePoint::affine(i))?);
        }
        let v = Representation::direct_sum_all(&parts).expect("d2 > 0");
        let d1 = 2 * d2;
        let end = dim_hom(&v, &v) as i64;
        let rep = bc1_rep_dimension(d1, d2);
        let gl = d1 * d1 + d2 * d2;
        let orbit = gl - end;
        let good = v.dim_vector() == vec![d1, d2] && end == r + s && rep == 5 * d2 * d2 - s && rep - orbit == r;
        ok &= good;
        rows.push(json!({ "d": [d1, d2], "r": r, "s": s, "dim_end": end, "dim_rep": rep, "dim_orbit": orbit }));
    }
    Ok((ok, json!(rows)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nosuch", &SuiteConfig::default()).is_none());
    }

    #[test]
    fn cheap_criteria_pass() {
        let cfg = SuiteConfig::default();
        for n in [1, 2, 10] {
            for c in run_criterion(n, &cfg) {
                assert!(c.passed, "{} {}", c.name, c.detail);
            }
        }
    }
}
