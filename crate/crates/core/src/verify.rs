//! Seeded verification sweeps for every identity the library implements.
//!
//! A suite runs `trials` independent trials per scalar instance. Trial `n`
//! draws from its own stream derived from `(seed, suite, instance, n)`, so
//! results do not depend on how trials are scheduled across threads.
//! Failures carry a counterexample rendered in the CLI input grammar.

use std::fmt::Display;

use rayon::prelude::*;

use crate::commoracle::{classical_cross_ratio, plucker_identity_check, plucker_ratio, plucker_sum_ratio};
use crate::crossratio::{
    all_24, chain_product, cocycle_checks, cross_ratio, cross_ratio_via_system, normalized_kappa, orbit_witness,
    permutation_relations, ConjugatorSearch, FourTuple, Permutation,
};
use crate::error::{Error, Result};
use crate::linalg::{Mat2, Mat2xN, Vec2};
use crate::qplucker::{qp_pair_check, QPIndex, QPTable};
use crate::randgen::{predicates, Gen, GenConfig, Sample};
use crate::scalars::{conjugate_by, DivisionRing, Quaternion, Rational};

/// Suite names in execution order.
pub const SUITES: &[&str] = &[
    "left-invariance",
    "column-scaling",
    "degenerate-indices",
    "cocycle-in-j",
    "skew-symmetry",
    "plucker-identity",
    "row-agreement",
    "system-oracle",
    "relative-invariance",
    "orbit",
    "cocycle",
    "chain",
    "permutations",
    "normalized-kappa",
    "commutative-shadow",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub bound: u32,
    pub trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 7,
            bound: 5,
            trials: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub instance: &'static str,
    pub trials: usize,
    pub passed: usize,
    pub resamples: u64,
    /// First failing trial, in trial order.
    pub failure: Option<String>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

type TrialResult = std::result::Result<(), String>;
type Trial = fn(&mut Gen) -> TrialResult;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> TrialResult {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn sampled<X>(r: Result<X>) -> std::result::Result<X, String> {
    r.map_err(|e| format!("sampling failed: {e}"))
}

fn defined<X>(r: Result<X>, context: impl Display) -> std::result::Result<X, String> {
    r.map_err(|e| format!("{context}: unexpectedly undefined: {e}"))
}

fn mismatch(what: impl Display, lhs: impl Display, rhs: impl Display, input: impl Display) -> String {
    format!("{what}: {lhs} != {rhs}; input {input}")
}

fn lambdas_text<S: Display>(l: &[S]) -> String {
    let parts: Vec<String> = l.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn gen_lambdas<S: Sample>(g: &mut Gen) -> std::result::Result<[S; 4], String> {
    let v: Vec<S> = (0..4)
        .map(|_| sampled(g.nonzero()))
        .collect::<std::result::Result<_, _>>()?;
    Ok(v.try_into().map_err(|_| "four lambdas").expect("length 4"))
}

fn regular_matrix<S: Sample>(g: &mut Gen) -> std::result::Result<Mat2xN<S>, String> {
    sampled(g.regular(|g| g.mat2xn::<S>(4), predicates::columns_pairwise_independent))
}

/// All `q^k_{ij}` of a matrix whose coordinates must all be defined.
fn qp_table<S: DivisionRing>(a: &Mat2xN<S>) -> std::result::Result<QPTable<S>, String> {
    let table = QPTable::new(a);
    match QPIndex::all(a.ncols()).find(|idx| table.get(idx.k, idx.i, idx.j).is_none()) {
        Some(idx) => Err(format!("{idx} on {a}: unexpectedly undefined")),
        None => Ok(table),
    }
}

fn distinct(ix: &[usize]) -> bool {
    (0..ix.len()).all(|a| (a + 1..ix.len()).all(|b| ix[a] != ix[b]))
}

fn left_invariance<S: Sample>(g: &mut Gen) -> TrialResult {
    let a = regular_matrix::<S>(g)?;
    let m: Mat2<S> = sampled(g.invertible_mat2())?;
    let ga = a.left_mul(&m);
    let moved = qp_table(&ga)?;
    let base = qp_table(&a)?;
    for idx in QPIndex::all(4) {
        let lhs = moved.get(idx.k, idx.i, idx.j).expect("defined");
        let rhs = base.get(idx.k, idx.i, idx.j).expect("defined");
        ensure(lhs == rhs, || {
            mismatch(format!("{idx}(gA) = {idx}(A) with g = {m}"), lhs, rhs, &a)
        })?;
    }
    Ok(())
}

fn column_scaling<S: Sample>(g: &mut Gen) -> TrialResult {
    let a = regular_matrix::<S>(g)?;
    let lambdas = gen_lambdas::<S>(g)?;
    let scaled = qp_table(&defined(a.col_scale(&lambdas), "col_scale")?)?;
    let base = qp_table(&a)?;
    for idx in QPIndex::all(4) {
        let lhs = scaled.get(idx.k, idx.i, idx.j).expect("defined");
        let base = base.get(idx.k, idx.i, idx.j).expect("defined");
        let rhs = defined(lambdas[idx.i].inv(), "lambda")?.mul(base).mul(&lambdas[idx.j]);
        ensure(*lhs == rhs, || {
            mismatch(
                format!(
                    "{idx}(A Lambda) = l_i^-1 {idx}(A) l_j with Lambda = {}",
                    lambdas_text(&lambdas)
                ),
                lhs,
                &rhs,
                &a,
            )
        })?;
    }
    Ok(())
}

fn degenerate_indices<S: Sample>(g: &mut Gen) -> TrialResult {
    let a = regular_matrix::<S>(g)?;
    let q = qp_table(&a)?;
    for k in 0..4 {
        for i in (0..4).filter(|&i| i != k) {
            let at_k = q.get(k, i, k).expect("defined");
            let at_i = q.get(k, i, i).expect("defined");
            ensure(at_k.is_zero(), || {
                mismatch(format!("q^{k}_{{{i}{k}}} = 0"), at_k, 0, &a)
            })?;
            ensure(at_i.is_one(), || mismatch(format!("q^{k}_{{{i}{i}}} = 1"), at_i, 1, &a))?;
        }
    }
    Ok(())
}

fn cocycle_in_j<S: Sample>(g: &mut Gen) -> TrialResult {
    let a = regular_matrix::<S>(g)?;
    let q = qp_table(&a)?;
    let get = |k: usize, i: usize, j: usize| q.get(k, i, j).expect("defined");
    for k in 0..4 {
        for i in (0..4).filter(|&i| i != k) {
            for j in (0..4).filter(|&j| j != k) {
                let inverse_pair = get(k, i, j).mul(get(k, j, i));
                ensure(inverse_pair.is_one(), || {
                    mismatch(format!("q^{k}_{{{i}{j}}} q^{k}_{{{j}{i}}} = 1"), &inverse_pair, 1, &a)
                })?;
                for l in 0..4 {
                    let lhs = get(k, i, j).mul(get(k, j, l));
                    let rhs = get(k, i, l);
                    ensure(&lhs == rhs, || {
                        mismatch(
                            format!("q^{k}_{{{i}{j}}} q^{k}_{{{j}{l}}} = q^{k}_{{{i}{l}}}"),
                            &lhs,
                            rhs,
                            &a,
                        )
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn skew_symmetry<S: Sample>(g: &mut Gen) -> TrialResult {
    let a = regular_matrix::<S>(g)?;
    let q = qp_table(&a)?;
    let get = |k: usize, i: usize, j: usize| q.get(k, i, j).expect("defined");
    let minus_one = S::one().neg();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                if !distinct(&[i, j, k]) {
                    continue;
                }
                let two = get(k, i, j).mul(get(i, j, k));
                let three = two.mul(get(j, k, i));
                ensure(three == minus_one, || {
                    mismatch(
                        format!("q^{k}_{{{i}{j}}} q^{i}_{{{j}{k}}} q^{j}_{{{k}{i}}} = -1"),
                        &three,
                        -1,
                        &a,
                    )
                })?;
                let rhs = get(j, i, k).neg();
                ensure(two == rhs, || {
                    mismatch(
                        format!("q^{k}_{{{i}{j}}} q^{i}_{{{j}{k}}} = -q^{j}_{{{i}{k}}}"),
                        &two,
                        &rhs,
                        &a,
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn plucker_identity<S: Sample>(g: &mut Gen) -> TrialResult {
    let a = regular_matrix::<S>(g)?;
    let q = qp_table(&a)?;
    let get = |k: usize, i: usize, j: usize| q.get(k, i, j).expect("defined");
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    if !distinct(&[i, j, k, l]) {
                        continue;
                    }
                    let sum = get(k, i, j).mul(get(l, j, i)).add(&get(k, i, l).mul(get(j, l, i)));
                    ensure(sum.is_one(), || {
                        mismatch(
                            format!("q^{k}_{{{i}{j}}} q^{l}_{{{j}{i}}} + q^{k}_{{{i}{l}}} q^{j}_{{{l}{i}}} = 1"),
                            &sum,
                            1,
                            &a,
                        )
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn row_agreement<S: Sample>(g: &mut Gen) -> TrialResult {
    let a = sampled(g.regular(
        |g| g.mat2xn::<S>(4),
        |a| {
            predicates::columns_pairwise_independent(a)
                && a.columns().iter().all(|c| !c.x1.is_zero() && !c.x2.is_zero())
        },
    ))?;
    let table = qp_table(&a)?;
    for idx in QPIndex::all(4) {
        let report = defined(qp_pair_check(&a, idx), idx)?;
        ensure(report.agree(), || {
            mismatch(format!("{idx} row 1 = row 2"), &report.row1, &report.row2, &a)
        })?;
        let shared = table.get(idx.k, idx.i, idx.j).expect("checked by qp_table");
        ensure(*shared == report.row1, || {
            mismatch(format!("{idx} table = direct"), shared, &report.row1, &a)
        })?;
    }
    Ok(())
}

fn system_oracle<S: Sample>(g: &mut Gen) -> TrialResult {
    let t: FourTuple<S> = sampled(g.regular_tuple(|t| predicates::system_regular(t) && predicates::kappa_defined(t)))?;
    let sol = defined(cross_ratio_via_system(&t), &t)?;
    ensure(sol.satisfies(&t), || {
        format!("system solution does not substitute back; input {t}")
    })?;
    let k = defined(cross_ratio(&t), &t)?;
    ensure(k == sol.kappa, || mismatch("kappa = system kappa", &k, &sol.kappa, &t))
}

fn relative_invariance<S: Sample>(g: &mut Gen) -> TrialResult {
    let t: FourTuple<S> = sampled(g.regular_tuple(predicates::kappa_defined))?;
    let m: Mat2<S> = sampled(g.invertible_mat2())?;
    let lambdas = gen_lambdas::<S>(g)?;
    let moved = t.act(&m, &lambdas);
    let k = defined(cross_ratio(&t), &t)?;
    let lhs = defined(cross_ratio(&moved), &moved)?;
    let l3_inv = defined(lambdas[2].inv(), "lambda3")?;
    let rhs = defined(conjugate_by(&l3_inv, &k), "conjugate")?;
    ensure(lhs == rhs, || {
        mismatch(
            format!(
                "kappa(g x l1, g y l2, g z l3, g t l4) = l3^-1 kappa l3 with g = {m}, lambdas = {}",
                lambdas_text(&lambdas)
            ),
            &lhs,
            &rhs,
            &t,
        )
    })?;
    if S::COMMUTATIVE {
        ensure(lhs == k, || mismatch("commutative kappa is invariant", &lhs, &k, &t))?;
    }
    Ok(())
}

fn orbit<S: Sample + ConjugatorSearch>(g: &mut Gen) -> TrialResult {
    let t: FourTuple<S> = sampled(g.regular_tuple(predicates::orbit_regular))?;
    let (m, lambdas, moved) = sampled(g.regular(
        |g| -> Result<_> {
            let m: Mat2<S> = g.invertible_mat2()?;
            let lambdas: [S; 4] = std::array::from_fn(|_| g.nonzero().unwrap_or_else(|_| S::one()));
            let moved = t.act(&m, &lambdas);
            Ok((m, lambdas, moved))
        },
        |r| matches!(r, Ok((_, _, moved)) if predicates::orbit_regular(moved)),
    ))
    .and_then(sampled)?;
    let context = || format!("{t} moved by g = {m}, lambdas = {}", lambdas_text(&lambdas));

    let w = orbit_witness(&t, &moved, &lambdas[2])
        .map_err(|e| format!("orbit_witness with mu = lambda3: {e}; {}", context()))?;
    w.verify(&t, &moved).map_err(|e| format!("{e}; {}", context()))?;

    let k = defined(cross_ratio(&t), &t)?;
    let k_moved = defined(cross_ratio(&moved), &moved)?;
    let mu = S::find_conjugator(&k, &k_moved).ok_or_else(|| format!("no conjugator found; {}", context()))?;
    let w = orbit_witness(&t, &moved, &mu)
        .map_err(|e| format!("orbit_witness with found mu = {mu}: {e}; {}", context()))?;
    w.verify(&t, &moved).map_err(|e| format!("{e}; {}", context()))?;

    // an unrelated tuple whose kappa has different conjugacy invariants
    let invariants = k.class_invariants();
    let other: FourTuple<S> = sampled(g.regular_tuple(|u: &FourTuple<S>| {
        predicates::orbit_regular(u)
            && cross_ratio(u)
                .map(|ku: S| ku.class_invariants() != invariants)
                .unwrap_or(false)
    }))?;
    let k_other = defined(cross_ratio(&other), &other)?;
    ensure(S::find_conjugator(&k, &k_other).is_none(), || {
        format!("conjugator found for non-conjugate {k} and {k_other}; inputs {t} and {other}")
    })?;
    match orbit_witness(&t, &other, &S::one()) {
        Err(Error::NotConjugate(_)) => Ok(()),
        other_result => Err(format!("expected NotConjugate, got {other_result:?}")),
    }
}

fn cocycle<S: Sample>(g: &mut Gen) -> TrialResult {
    let vs: [Vec2<S>; 5] = sampled(g.regular(
        |g| std::array::from_fn(|_| g.vec2::<S>()),
        |[x, y, z, t, w]| cocycle_checks(x, y, z, t, w).is_ok() && cocycle_checks(x, y, z, t, x).is_ok(),
    ))?;
    let [x, y, z, t, w] = &vs;
    let input = || format!("x = {x}, y = {y}, z = {z}, t = {t}, w = {w}");
    for (report, label) in [
        (defined(cocycle_checks(x, y, z, t, w), "cocycle")?, "w"),
        (defined(cocycle_checks(x, y, z, t, x), "cocycle")?, "w = x"),
    ] {
        if let Some(c) = report.failures().next() {
            return Err(mismatch(format!("{} ({label})", c.name), &c.lhs, &c.rhs, input()));
        }
    }
    let kxx = defined(
        cross_ratio(&FourTuple::new(x.clone(), x.clone(), z.clone(), t.clone())),
        "k(x,x,z,t)",
    )?;
    ensure(kxx.is_one(), || mismatch("k(x,x,z,t) = 1", &kxx, 1, input()))
}

fn chain<S: Sample>(g: &mut Gen) -> TrialResult {
    let n = 2 + g.index(5);
    let (points, z, t) = sampled(g.regular(
        |g| {
            let points: Vec<Vec2<S>> = (0..n).map(|_| g.vec2()).collect();
            let z = g.vec2();
            let t = g.vec2();
            (points, z, t)
        },
        |(p, z, t)| chain_product(p, z, t).is_ok() && chain_product(&vec![p[0].clone(); p.len()], z, t).is_ok(),
    ))?;
    let input = || {
        let pts: Vec<String> = points.iter().map(ToString::to_string).collect();
        format!("points {}, z = {z}, t = {t}", pts.join(" "))
    };
    let report = defined(chain_product(&points, &z, &t), "chain")?;
    if let Some(c) = report.failures().next() {
        return Err(mismatch(&c.name, &c.lhs, &c.rhs, input()));
    }
    let same = vec![points[0].clone(); n];
    let report = defined(chain_product(&same, &z, &t), "constant chain")?;
    ensure(report.all_hold() && report.checks[0].lhs.is_one(), || {
        format!("constant chain is not 1; {}", input())
    })
}

fn permutations<S: Sample>(g: &mut Gen) -> TrialResult {
    let t: FourTuple<S> = sampled(g.regular_tuple(|t| {
        predicates::columns_pairwise_independent(&t.to_matrix()) && permutation_relations(t).is_ok()
    }))?;
    let report = defined(permutation_relations(&t), &t)?;
    if let Some(c) = report.failures().next() {
        return Err(mismatch(&c.name, &c.lhs, &c.rhs, &t));
    }
    let table = all_24(&t);
    let k = defined(cross_ratio(&t), &t)?;
    let id = defined(table[&Permutation::IDENTITY].clone(), "identity entry")?;
    ensure(id == k, || mismatch("all_24 identity entry", &id, &k, &t))?;
    let swapped = defined(table[&"yxzt".parse().expect("valid")].clone(), "(y,x,z,t) entry")?;
    let k_inv = defined(k.inv(), "kappa inverse")?;
    ensure(swapped == k_inv, || {
        mismatch("all_24 (y,x,z,t) entry = k^-1", &swapped, &k_inv, &t)
    })?;
    if S::COMMUTATIVE {
        let mut values: Vec<String> = table
            .values()
            .map(|v| v.as_ref().map(ToString::to_string).map_err(|e| e.to_string()))
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| format!("undefined entry: {e}; input {t}"))?;
        values.sort();
        values.dedup();
        ensure(values.len() <= 6, || {
            format!("{} distinct commutative values; input {t}", values.len())
        })?;
    }
    Ok(())
}

fn normalized<S: Sample>(g: &mut Gen) -> TrialResult {
    let t: FourTuple<S> = sampled(g.regular_tuple(|t| normalized_kappa(t).is_ok() && predicates::kappa_defined(t)))?;
    let n = defined(normalized_kappa(&t), &t)?;
    let k = defined(cross_ratio(&t), &t)?;
    ensure(n == k, || mismatch("normalized kappa = kappa", &n, &k, &t))
}

fn commutative_shadow(g: &mut Gen) -> TrialResult {
    let a = regular_matrix::<Rational>(g)?;
    let table = qp_table(&a)?;
    for idx in QPIndex::all(4) {
        let lhs = table.get(idx.k, idx.i, idx.j).expect("defined");
        let rhs = defined(plucker_ratio(&a, idx.i, idx.j, idx.k), "plucker ratio")?;
        ensure(*lhs == rhs, || mismatch(format!("{idx} = p_jk / p_ik"), lhs, &rhs, &a))?;
    }
    for p in Permutation::all() {
        let [i, j, k, l] = p.0.map(usize::from);
        let r = defined(plucker_identity_check(&a, i, j, k, l), "plucker identity")?;
        ensure(r.holds(), || {
            mismatch(format!("plucker relation at {:?}", r.indices), &r.value, 0, &a)
        })?;
        let s = defined(plucker_sum_ratio(&a, i, j, k, l), "plucker sum")?;
        ensure(s.is_one(), || {
            mismatch("(p_jk p_il + p_kl p_ij)/(p_ik p_jl) = 1", &s, 1, &a)
        })?;
    }
    let t = defined(FourTuple::from_matrix(&a), "tuple")?;
    let k = defined(cross_ratio(&t), &t)?;
    let c = defined(classical_cross_ratio(&t.x, &t.y, &t.z, &t.t), "classical")?;
    ensure(k == c, || mismatch("kappa = classical cross-ratio", &k, &c, &t))?;

    let param: Rational = g.scalar();
    let unit = |a: i64, b: i64| Vec2::new(Rational::from(a), Rational::from(b));
    let norm = FourTuple::new(
        unit(1, 0),
        unit(0, 1),
        unit(1, 1),
        Vec2::new(param.clone(), Rational::one()),
    );
    let k = defined(cross_ratio(&norm), &norm)?;
    ensure(k == param, || {
        mismatch("kappa((1,0),(0,1),(1,1),(k,1)) = k", &k, &param, &norm)
    })
}

fn trials_for(suite: &str) -> Option<(Trial, Option<Trial>)> {
    let both = |q: Trial, r: Trial| Some((q, Some(r)));
    match suite {
        "left-invariance" => both(left_invariance::<Quaternion>, left_invariance::<Rational>),
        "column-scaling" => both(column_scaling::<Quaternion>, column_scaling::<Rational>),
        "degenerate-indices" => both(degenerate_indices::<Quaternion>, degenerate_indices::<Rational>),
        "cocycle-in-j" => both(cocycle_in_j::<Quaternion>, cocycle_in_j::<Rational>),
        "skew-symmetry" => both(skew_symmetry::<Quaternion>, skew_symmetry::<Rational>),
        "plucker-identity" => both(plucker_identity::<Quaternion>, plucker_identity::<Rational>),
        "row-agreement" => both(row_agreement::<Quaternion>, row_agreement::<Rational>),
        "system-oracle" => both(system_oracle::<Quaternion>, system_oracle::<Rational>),
        "relative-invariance" => both(relative_invariance::<Quaternion>, relative_invariance::<Rational>),
        "orbit" => both(orbit::<Quaternion>, orbit::<Rational>),
        "cocycle" => both(cocycle::<Quaternion>, cocycle::<Rational>),
        "chain" => both(chain::<Quaternion>, chain::<Rational>),
        "permutations" => both(permutations::<Quaternion>, permutations::<Rational>),
        "normalized-kappa" => both(normalized::<Quaternion>, normalized::<Rational>),
        "commutative-shadow" => Some((commutative_shadow, None)),
        _ => None,
    }
}

fn run_one(suite: &'static str, instance: &'static str, stream: u64, trial: Trial, cfg: &SuiteConfig) -> SuiteOutcome {
    let base = GenConfig::new(cfg.seed, cfg.bound).derive(stream);
    let results: Vec<(TrialResult, u64)> = (0..cfg.trials)
        .into_par_iter()
        .map(|n| {
            let mut g = Gen::new(base.derive(n as u64));
            let r = trial(&mut g);
            (r, g.resamples())
        })
        .collect();
    let passed = results.iter().filter(|(r, _)| r.is_ok()).count();
    let resamples = results.iter().map(|(_, n)| n).sum();
    let failure = results
        .into_iter()
        .enumerate()
        .find_map(|(n, (r, _))| r.err().map(|e| format!("trial {n}: {e}")));
    SuiteOutcome {
        suite,
        instance,
        trials: cfg.trials,
        passed,
        resamples,
        failure,
    }
}

/// Runs one named suite over each scalar instance it applies to.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteOutcome>> {
    let (position, &suite) = SUITES
        .iter()
        .enumerate()
        .find(|(_, s)| **s == name)
        .ok_or_else(|| Error::InvalidLiteral(format!("unknown suite {name:?}")))?;
    let (quat, rat) = trials_for(suite).expect("every listed suite has trials");
    let stream = 2 * position as u64;
    let mut out = vec![run_one(suite, "quaternion", stream, quat, cfg)];
    if let Some(rat) = rat {
        out.push(run_one(suite, "rational", stream + 1, rat, cfg));
    }
    if name == "commutative-shadow" {
        out[0].instance = "rational";
    }
    Ok(out)
}

/// `"all"` or a single suite name.
pub fn run(selection: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteOutcome>> {
    if selection == "all" {
        let mut out = Vec::new();
        for s in SUITES {
            out.extend(run_suite(s, cfg)?);
        }
        Ok(out)
    } else {
        run_suite(selection, cfg)
    }
}
