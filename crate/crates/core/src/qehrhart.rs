//! q-Ehrhart polynomials of order polytopes.
//!
//! The main route sums over linear extensions of the naturally labeled
//! dual. Two independent routes exist for checking it: direct lattice-point
//! enumeration followed by interpolation over `Q(q)`, and a
//! P-partition/q-binomial double count.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linext::{linear_extensions, DEFAULT_MAX_EXTENSIONS};
use crate::poly::{
    content_q, gcd_zpoly, interpolate_at_q_integers, q_binom, q_factorial, q_int, BivarPoly, LaurentPoly,
    RatPolyX, ZPoly,
};
use crate::poset::{Poset, Relabeling};

/// Guards for brute-force lattice-point enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeLimits {
    pub max_m: usize,
    pub max_n: u32,
}

impl Default for LatticeLimits {
    fn default() -> Self {
        Self { max_m: 8, max_n: 12 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Closed,
    Interior,
}

/// `W(n M, q)` for a dilated order polytope or its interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WSeries {
    pub n: u32,
    pub poly: ZPoly,
    pub variant: Variant,
}

impl WSeries {
    pub fn point_count(&self) -> BigInt {
        self.poly.eval_one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QEhrhartResult {
    pub m: usize,
    /// `F` of the naturally labeled dual.
    pub f: BivarPoly,
    /// q-Ehrhart polynomial of the input poset's order polytope.
    pub e: RatPolyX,
    /// Numerator `N = F / phi`.
    pub n: BivarPoly,
    /// `gcd(F, [m]_q!)`.
    pub phi: ZPoly,
    /// Denominator `[m]_q! / phi`.
    pub d: ZPoly,
    /// The naturally labeled dual that `f` was computed from.
    pub natural_dual: Poset,
    /// Sends labels of the input's dual to labels of `natural_dual`.
    pub relabeling: Relabeling,
}

/// Serialized result; polynomials in canonical text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QEhrhartJson {
    pub m: usize,
    #[serde(rename = "F")]
    pub f: String,
    #[serde(rename = "N")]
    pub n: String,
    pub phi: String,
    #[serde(rename = "D")]
    pub d: String,
    #[serde(rename = "E_numerator")]
    pub e_numerator: String,
    #[serde(rename = "E_denominator")]
    pub e_denominator: String,
}

impl QEhrhartResult {
    pub fn to_json(&self) -> QEhrhartJson {
        QEhrhartJson {
            m: self.m,
            f: self.f.to_string(),
            n: self.n.to_string(),
            phi: self.phi.to_string(),
            d: self.d.to_string(),
            e_numerator: self.n.to_string(),
            e_denominator: self.d.to_string(),
        }
    }

    /// `deg phi`, the amount `h` drops from `C(m+1, 2)` to the numerator.
    pub fn phi_degree(&self) -> u32 {
        self.phi.degree().unwrap_or(0)
    }
}

/// One factor `[i-d]_q + q^(i-d) x` of the extension product, as a pair of
/// Laurent polynomials (constant part, coefficient of `x`).
fn extension_factor(i: i64, d: i64) -> (LaurentPoly, LaurentPoly) {
    (q_int(i - d), LaurentPoly::monomial(1, i - d))
}

/// `prod_{i=1}^m ([i-d]_q + q^(i-d) x)`, slices indexed by `x`-degree.
fn extension_product(m: usize, des: usize) -> Vec<LaurentPoly> {
    let mut acc = vec![LaurentPoly::monomial(1, 0)];
    for i in 1..=m as i64 {
        let (c0, c1) = extension_factor(i, des as i64);
        let mut next = vec![LaurentPoly::zero(); acc.len() + 1];
        for (k, s) in acc.iter().enumerate() {
            next[k] = &next[k] + &(s * &c0);
            next[k + 1] = &next[k + 1] + &(s * &c1);
        }
        acc = next;
    }
    acc
}

/// `F_P(q,x) = sum over L(P) of q^maj(pi) prod_{i=1}^m ([i-des]_q + q^(i-des) x)`
/// for a naturally labeled `P`.
pub fn compute_f(p: &Poset) -> Result<BivarPoly> {
    compute_f_with_cap(p, DEFAULT_MAX_EXTENSIONS)
}

pub fn compute_f_with_cap(p: &Poset, cap: u64) -> Result<BivarPoly> {
    if let Some((x, y)) = p.relations().into_iter().find(|&(x, y)| x > y) {
        return Err(Error::NotNaturallyLabeled(x, y));
    }
    let m = p.len();
    // group extensions by descent count: sum_pi q^maj(pi) for each des
    let mut maj_by_des = vec![ZPoly::zero(); m.max(1)];
    for pi in linear_extensions(p).with_cap(cap) {
        let pi = pi?;
        maj_by_des[pi.des].add_term(pi.maj as u32, BigInt::from(1));
    }
    let mut f = BivarPoly::zero();
    for (des, gen) in maj_by_des.iter().enumerate() {
        if gen.is_zero() {
            continue;
        }
        let gen = LaurentPoly::from(gen);
        let slices: Vec<ZPoly> = extension_product(m, des)
            .iter()
            .map(|s| {
                (&gen * s)
                    .to_zpoly()
                    .expect("each extension term has only nonnegative q-powers")
            })
            .collect();
        f = &f + &BivarPoly::from_slices(slices);
    }
    Ok(f)
}

/// q-Ehrhart data of `O(p)` for an arbitrarily labeled poset.
///
/// The formula needs a naturally labeled dual, so the input is dualized and
/// relabeled first; neither changes `W(n O(P), q)`. Since `F = [m]_q! E` and
/// `[m]_q!` is free of `x`, any common factor of `F` and `[m]_q!` lies in the
/// gcd of the `x`-slices of `F`; that is how `phi` is found.
pub fn compute_qehrhart(p: &Poset) -> Result<QEhrhartResult> {
    compute_qehrhart_with_cap(p, DEFAULT_MAX_EXTENSIONS)
}

pub fn compute_qehrhart_with_cap(p: &Poset, cap: u64) -> Result<QEhrhartResult> {
    let m = p.len();
    let (natural_dual, relabeling) = p.dual().naturalize();
    let f = compute_f_with_cap(&natural_dual, cap)?;
    let fact = q_factorial(m as u32);
    let phi = gcd_zpoly(&content_q(&f)?, &fact);
    let n = f.exact_div(&phi)?;
    let d = fact.div_exact(&phi)?;
    let e = f.over(&fact)?;
    assert!(
        n.leading_term().is_some_and(|(_, _, c)| c.is_positive()),
        "numerator leading coefficient must be positive"
    );
    Ok(QEhrhartResult {
        m,
        f,
        e,
        n,
        phi,
        d,
        natural_dual,
        relabeling,
    })
}

/// `W(n O(P), q)` (closed) or `W(n O(P)°, q)` (interior) by enumerating
/// lattice points.
///
/// Closed: `0 <= x_i <= n` with `x_i <= x_j` whenever `i <_P j`. Interior:
/// `0 < x_i < n` with `x_i < x_j` whenever `i <_P j`.
pub fn count_lattice_points(p: &Poset, n: u32, variant: Variant) -> Result<WSeries> {
    count_lattice_points_with(p, n, variant, LatticeLimits::default())
}

pub fn count_lattice_points_with(
    p: &Poset,
    n: u32,
    variant: Variant,
    limits: LatticeLimits,
) -> Result<WSeries> {
    let m = p.len();
    if m > limits.max_m || n > limits.max_n {
        return Err(Error::Size(format!(
            "lattice enumeration limited to m <= {} and n <= {} (got m = {m}, n = {n})",
            limits.max_m, limits.max_n
        )));
    }
    let (lo, hi, strict) = match variant {
        Variant::Closed => (0, n as i64, 0),
        Variant::Interior => (1, n as i64 - 1, 1),
    };
    let mut counts = vec![0u64; m * n as usize + 1];
    if lo <= hi {
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&j| (0..m).filter(|&i| p.lt0(i, j)).count());
        let mut pos = vec![0; m];
        for (k, &j) in order.iter().enumerate() {
            pos[j] = k;
        }
        // predecessors of the k-th assigned element, as earlier positions
        let preds: Vec<Vec<usize>> = order
            .iter()
            .map(|&j| (0..m).filter(|&i| p.lt0(i, j)).map(|i| pos[i]).collect())
            .collect();
        let mut values = vec![0i64; m];
        let mut dfs = LatticeDfs {
            preds: &preds,
            values: &mut values,
            counts: &mut counts,
            lo,
            hi,
            strict,
        };
        dfs.run(0, 0);
    }
    let poly = ZPoly::from_terms(
        counts
            .iter()
            .enumerate()
            .map(|(e, &c)| (e as u32, BigInt::from(c))),
    );
    Ok(WSeries { n, poly, variant })
}

struct LatticeDfs<'a> {
    preds: &'a [Vec<usize>],
    values: &'a mut [i64],
    counts: &'a mut [u64],
    lo: i64,
    hi: i64,
    strict: i64,
}

impl LatticeDfs<'_> {
    fn run(&mut self, k: usize, sum: usize) {
        if k == self.values.len() {
            self.counts[sum] += 1;
            return;
        }
        let floor = self.preds[k]
            .iter()
            .map(|&i| self.values[i] + self.strict)
            .fold(self.lo, i64::max);
        for v in floor..=self.hi {
            self.values[k] = v;
            self.run(k + 1, sum + v as usize);
        }
    }
}

/// `E` rebuilt from lattice-point counts alone: interpolates
/// `([n]_q, W(n O(P), q))` for `n = 0..=m`.
pub fn oracle_interpolation(p: &Poset) -> Result<RatPolyX> {
    oracle_interpolation_with(p, LatticeLimits::default())
}

pub fn oracle_interpolation_with(p: &Poset, limits: LatticeLimits) -> Result<RatPolyX> {
    let values = (0..=p.len() as u32)
        .map(|n| Ok(count_lattice_points_with(p, n, Variant::Closed, limits)?.poly))
        .collect::<Result<Vec<_>>>()?;
    interpolate_at_q_integers(&values)
}

/// `E([n]_q) == W(n O(P), q)`, compared after clearing denominators.
pub fn check_evaluation(p: &Poset, e: &RatPolyX, n: u32, limits: LatticeLimits) -> Result<bool> {
    let w = count_lattice_points_with(p, n, Variant::Closed, limits)?;
    let (num, den) = e.common_denominator();
    let at = q_int(i64::from(n)).to_zpoly().expect("nonnegative q-integer");
    let lhs = num
        .slices()
        .iter()
        .rev()
        .fold(ZPoly::zero(), |acc, s| &(&acc * &at) + s);
    Ok(lhs == &w.poly * &den)
}

/// `E([-n]_q) == (-1)^m W(n O(P)°, 1/q)`; order polytopes are
/// full-dimensional, so `dim = m`.
pub fn check_reciprocity(p: &Poset, n: u32) -> Result<bool> {
    let result = compute_qehrhart(p)?;
    check_reciprocity_for(p, &result.e, n, LatticeLimits::default())
}

pub fn check_reciprocity_for(p: &Poset, e: &RatPolyX, n: u32, limits: LatticeLimits) -> Result<bool> {
    if n == 0 {
        return Err(Error::OutOfRange {
            value: 0,
            allowed: "n >= 1".into(),
        });
    }
    let (num, den) = e.common_denominator();
    let at = q_int(-i64::from(n));
    let lhs = num
        .slices()
        .iter()
        .rev()
        .fold(LaurentPoly::zero(), |acc, s| &(&acc * &at) + &LaurentPoly::from(s));
    let interior = count_lattice_points_with(p, n, Variant::Interior, limits)?;
    let mut rhs = interior.poly.invert_variable();
    if p.len() % 2 == 1 {
        rhs = -&rhs;
    }
    Ok(lhs == &rhs * &LaurentPoly::from(&den))
}

/// Double count of bounded P-partitions of a naturally labeled poset:
/// direct enumeration of order-reversing maps `P -> {0..n}` against
/// `sum over L(P) of q^maj(pi) [n - des(pi) + m choose m]_q`.
pub fn check_lemma_qbinom(p: &Poset, n: u32) -> Result<bool> {
    check_lemma_qbinom_with(p, n, LatticeLimits::default())
}

pub fn check_lemma_qbinom_with(p: &Poset, n: u32, limits: LatticeLimits) -> Result<bool> {
    if let Some((x, y)) = p.relations().into_iter().find(|&(x, y)| x > y) {
        return Err(Error::NotNaturallyLabeled(x, y));
    }
    // order-reversing maps on P are order-preserving maps on the dual
    let lhs = count_lattice_points_with(&p.dual(), n, Variant::Closed, limits)?.poly;
    let m = p.len() as i64;
    let mut rhs = ZPoly::zero();
    for pi in linear_extensions(p) {
        let pi = pi?;
        let top = i64::from(n) - pi.des as i64 + m;
        if top < m {
            // one factor of [top]_q ... [top-m+1]_q is [0]_q
            continue;
        }
        rhs = &rhs + &q_binom(top, m)?.shift(pi.maj as u32);
    }
    Ok(lhs == rhs)
}

/// Classical Ehrhart count `|n O(P) ∩ Z^m|` from `F` at `q = 1`:
/// `F(1, n) / m!`.
pub fn classical_count_from_f(f: &BivarPoly, m: usize, n: u32) -> BigInt {
    let n = BigInt::from(n);
    let total = f
        .eval_q_one()
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * &n + c);
    let fact: BigInt = (1..=m).map(BigInt::from).product();
    let (quo, rem) = total.div_rem(&fact);
    debug_assert!(rem.is_zero());
    quo
}
