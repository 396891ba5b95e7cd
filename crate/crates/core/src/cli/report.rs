//! Per-poset verification suite and its report.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Result;
use crate::linext::{
    collect_extensions, min_maj_extension, min_stat_bruteforce, remove_top_descent,
};
use crate::newton::{verify_conjecture_for, verify_main_theorem_for, ConjectureReport, MainTheoremReport};
use crate::poly::q_factorial;
use crate::poset::{Poset, PosetJson};
use crate::qehrhart::{
    check_evaluation, check_lemma_qbinom_with, check_reciprocity_for, compute_qehrhart_with_cap,
    oracle_interpolation_with, LatticeLimits, QEhrhartJson, QEhrhartResult,
};

/// Budgets shared by every check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_extensions: u64,
    pub limits: LatticeLimits,
    /// Largest `n` for the P-partition double count.
    pub lemma_n: u32,
    /// Largest `n` for reciprocity.
    pub reciprocity_n: u32,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_extensions: crate::linext::DEFAULT_MAX_EXTENSIONS,
            limits: LatticeLimits::default(),
            lemma_n: 2,
            reciprocity_n: 2,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

/// Everything needed to replay and inspect a failure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub poset: PosetJson,
    pub result: QEhrhartJson,
    pub main_theorem: MainTheoremReport,
    pub conjecture: ConjectureReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub index: usize,
    pub command: String,
    pub poset: PosetJson,
    pub pass: bool,
    pub checks: Vec<CheckOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

impl RunReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn check(name: &str, pass: bool, detail: Option<Value>) -> CheckOutcome {
    CheckOutcome {
        name: name.to_string(),
        pass,
        detail: if pass { None } else { detail },
    }
}

/// Runs every predicate on one poset. Errors are budget or limit
/// violations, never mathematical failures.
pub fn verify_poset(index: usize, p: &Poset, opts: &VerifyOptions) -> Result<RunReport> {
    let start = Instant::now();
    let result = compute_qehrhart_with_cap(p, opts.max_extensions)?;
    let main = verify_main_theorem_for(&result)?;
    let conj = verify_conjecture_for(p, &result)?;

    let mut checks = vec![
        check("main_theorem", main.pass, Some(json!({ "newton": main.newton, "expected": main.expected }))),
        check("qrange_profile", main.profile_pass, Some(json!({ "profile": main.profile, "b": main.b }))),
        check(
            "conjecture",
            conj.pass,
            Some(json!({ "newton": conj.newton, "expected": conj.expected, "h": conj.h })),
        ),
        check(
            "numerator_linkage",
            main.pass == conj.pass && conj.a == main.b && conj.h + conj.phi_degree as usize == main.h,
            Some(json!({ "a": conj.a, "b": main.b, "h": conj.h, "deg_phi": conj.phi_degree })),
        ),
        structure_check(&result),
    ];
    checks.push(oracle_check(p, &result, opts)?);
    checks.push(extremal_check(&result.natural_dual, opts)?);
    checks.push(top_descent_check(&result.natural_dual, opts)?);
    checks.push(lemma_check(&result.natural_dual, opts)?);
    checks.push(reciprocity_check(p, &result, opts)?);

    let pass = checks.iter().all(|c| c.pass);
    let counterexample = (!pass).then(|| Counterexample {
        poset: p.to_json(),
        result: result.to_json(),
        main_theorem: main.clone(),
        conjecture: conj.clone(),
    });
    Ok(RunReport {
        index,
        command: "verify".into(),
        poset: p.to_json(),
        pass,
        checks,
        counterexample,
        elapsed_us: opts.timings.then(|| start.elapsed().as_micros() as u64),
    })
}

/// `F = N phi`, `phi | [m]_q!` with unit constant and leading terms, and
/// `E [m]_q! = F`.
fn structure_check(r: &QEhrhartResult) -> CheckOutcome {
    let fact = q_factorial(r.m as u32);
    let phi_monic = r.phi.coeff(0) == 1.into() && r.phi.leading_coeff() == 1.into();
    let factor = r.n.mul_zpoly(&r.phi) == r.f;
    let divides = fact.div_exact(&r.phi).is_ok_and(|d| d == r.d);
    let e_times_fact = r.e.scale(&fact.clone().into()).common_denominator();
    let e_ok = e_times_fact.1.is_one() && e_times_fact.0 == r.f;
    check(
        "factorization",
        phi_monic && factor && divides && e_ok,
        Some(json!({ "phi": r.phi.to_string(), "F": r.f.to_string(), "N": r.n.to_string() })),
    )
}

/// `E` against interpolation of lattice-point counts, plus out-of-sample
/// evaluation at `n = m+1, m+2` (when within the lattice budget).
fn oracle_check(p: &Poset, r: &QEhrhartResult, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let oracle = oracle_interpolation_with(p, opts.limits)?;
    let mut pass = oracle == r.e;
    let top = (r.m as u32 + 2).min(opts.limits.max_n);
    for n in (r.m as u32 + 1)..=top {
        pass &= check_evaluation(p, &r.e, n, opts.limits)?;
    }
    Ok(check(
        "oracle_interpolation",
        pass,
        Some(json!({ "E": r.e.to_string(), "oracle": oracle.to_string() })),
    ))
}

/// The minimum over `1 <= des <= k` equals `b_1 + ... + b_k` whenever that
/// sum is below `C(k+1, 2)`. Otherwise the identity attains the minimum and
/// the restricted one may be larger: on `1 < 2, 3` at `k = 1` no extension
/// descends at position 1, so it is 2 while `b_1 = 1`.
pub fn restricted_ok(restricted: i64, target: i64, k: usize) -> bool {
    let tri = (k * (k + 1) / 2) as i64;
    if target < tri {
        restricted == target
    } else {
        restricted >= target
    }
}

/// Constructed minimizer, exhaustive minimum, and `b_1 + ... + b_k` agree
/// for every `k`; for non-chains the restricted minimum obeys
/// [`restricted_ok`].
fn extremal_check(natural: &Poset, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let stats = natural.chain_stats();
    let chain = natural.is_chain();
    let mut rows = Vec::new();
    let mut pass = true;
    for k in 0..=natural.len() {
        let target = stats.b_prefix_sum(k) as i64;
        let (pi, constructed) = min_maj_extension(natural, k)?;
        let brute = min_stat_bruteforce(natural, k, false, opts.max_extensions)?;
        let restricted = if !chain && k >= 1 {
            Some(min_stat_bruteforce(natural, k, true, opts.max_extensions)?)
        } else {
            None
        };
        let ok = constructed == target
            && brute == target
            && pi.is_extension_of(natural)
            && restricted.is_none_or(|v| restricted_ok(v, target, k));
        pass &= ok;
        rows.push(json!({ "k": k, "b_sum": target, "constructed": constructed, "bruteforce": brute, "restricted": restricted }));
    }
    Ok(check("min_maj_extension", pass, Some(Value::Array(rows))))
}

/// Dropping the top descent stays inside `L(P)` and removes exactly it.
fn top_descent_check(natural: &Poset, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut bad = Vec::new();
    for pi in collect_extensions(natural, opts.max_extensions)? {
        if pi.des == 0 {
            continue;
        }
        let sigma = remove_top_descent(natural, &pi)?;
        let expected = &pi.des_set[..pi.des - 1];
        if !sigma.is_extension_of(natural) || sigma.des_set != expected {
            bad.push(json!({ "pi": pi.perm, "sigma": sigma.perm }));
        }
    }
    Ok(check("remove_top_descent", bad.is_empty(), Some(Value::Array(bad))))
}

fn lemma_check(natural: &Poset, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut failing = Vec::new();
    for n in 0..=opts.lemma_n.min(opts.limits.max_n) {
        if !check_lemma_qbinom_with(natural, n, opts.limits)? {
            failing.push(n);
        }
    }
    Ok(check("ppartition_qbinom", failing.is_empty(), Some(json!({ "failing_n": failing }))))
}

fn reciprocity_check(p: &Poset, r: &QEhrhartResult, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut failing = Vec::new();
    for n in 1..=opts.reciprocity_n.min(opts.limits.max_n) {
        if !check_reciprocity_for(p, &r.e, n, opts.limits)? {
            failing.push(n);
        }
    }
    Ok(check("reciprocity", failing.is_empty(), Some(json!({ "failing_n": failing }))))
}
