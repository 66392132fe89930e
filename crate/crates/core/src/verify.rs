//! Declarative identity checks.
//!
//! Each [`CheckId`] compares two independent computations of the same
//! quantity over an index range and records the first index where they
//! differ. Comparison is exact: polynomial equality for symbolic λ or x,
//! rational equality otherwise. A [`Mutation`] perturbs one coefficient of
//! the identity's formula so that negative controls can show every check is
//! able to fail.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{binomial, factorial, Poly, Pretty, Rational, Ring};
use crate::classical::{
    central_diff_reduction_sides, central_factorial_poly, central_first_kind_table_with,
    central_second_kind_by_basis_table_with, central_second_kind_table, falling_factorial_poly,
    stirling1_table_with, stirling2_table_with,
};
use crate::degenerate::{
    self, central_inverse, central_map, degenerate_euler_table, euler_via_t2_from,
    stirling2_lambda_table, t2_even_convolution_from, t2_explicit_with, t2_number_table,
    t2_poly_convolution_from, t2_poly_recursive_table_with, t2_poly_table, t2_via_delta_table_with,
    LambdaMode, LambdaRing, LambdaTask, XMode,
};
use crate::error::{Error, Result};
use crate::mutation::Tweak;
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
    Thm8,
    Eq2,
    Eq12,
    Eq15,
    LimitS2,
    LimitT2,
    LimitThm5,
    InversePair,
}

impl CheckId {
    pub const ALL: [CheckId; 15] = [
        CheckId::Thm1,
        CheckId::Thm2,
        CheckId::Thm3,
        CheckId::Thm4,
        CheckId::Thm5,
        CheckId::Thm6,
        CheckId::Thm7,
        CheckId::Thm8,
        CheckId::Eq2,
        CheckId::Eq12,
        CheckId::Eq15,
        CheckId::LimitS2,
        CheckId::LimitT2,
        CheckId::LimitThm5,
        CheckId::InversePair,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Thm1 => "THM1",
            CheckId::Thm2 => "THM2",
            CheckId::Thm3 => "THM3",
            CheckId::Thm4 => "THM4",
            CheckId::Thm5 => "THM5",
            CheckId::Thm6 => "THM6",
            CheckId::Thm7 => "THM7",
            CheckId::Thm8 => "THM8",
            CheckId::Eq2 => "EQ2",
            CheckId::Eq12 => "EQ12",
            CheckId::Eq15 => "EQ15",
            CheckId::LimitS2 => "LIMIT_S2",
            CheckId::LimitT2 => "LIMIT_T2",
            CheckId::LimitThm5 => "LIMIT_THM5",
            CheckId::InversePair => "INVERSE_PAIR",
        }
    }

    /// Limit checks compare against classical tables and only make sense at λ = 0.
    pub fn is_limit(self) -> bool {
        matches!(
            self,
            CheckId::LimitS2 | CheckId::LimitT2 | CheckId::LimitThm5
        )
    }

    pub fn applies_to(self, lambda: &LambdaMode) -> bool {
        !self.is_limit() || matches!(lambda, LambdaMode::Symbolic) || lambda.is_zero()
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Seeded perturbation of one coefficient in an identity's formula.
#[derive(Clone, Debug, PartialEq)]
pub struct Mutation {
    factor: Rational,
}

impl Mutation {
    /// Scales the coefficient by `1 + δ`, with δ a small nonzero rational drawn
    /// from `seed`; the factor is never 0 or 1.
    pub fn seeded(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let num: i64 = rng.random_range(1..=9);
            let den: i64 = rng.random_range(2..=9);
            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
            let factor = Rational::new((den + sign * num).into(), den.into());
            if !Ring::is_zero(&factor) && !Ring::is_one(&factor) {
                return Mutation { factor };
            }
        }
    }

    pub fn with_factor(factor: Rational) -> Self {
        Mutation { factor }
    }

    pub fn factor(&self) -> &Rational {
        &self.factor
    }

    fn tweak(&self) -> Tweak {
        Tweak::scaling(self.factor.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Range {
    pub n_max: usize,
    pub k_max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "(n,k)=({},{k})", self.n)?,
            None => write!(f, "n={}", self.n)?,
        }
        if let Some(p) = &self.param {
            write!(f, " [{p}]")?;
        }
        write!(f, ": lhs = {}, rhs = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(Counterexample),
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub id: CheckId,
    pub range: Range,
    pub lambda: LambdaMode,
    pub x: XMode,
    pub mutation: Option<Mutation>,
    pub status: Option<Status>,
    pub elapsed: Option<Duration>,
}

impl IdentityCheck {
    /// Symbolic λ and x, no mutation, not yet run.
    pub fn new(id: CheckId, n_max: usize, k_max: usize) -> Self {
        IdentityCheck {
            id,
            range: Range { n_max, k_max },
            lambda: LambdaMode::Symbolic,
            x: XMode::Symbolic,
            mutation: None,
            status: None,
            elapsed: None,
        }
    }

    pub fn with_lambda(mut self, lambda: LambdaMode) -> Self {
        self.lambda = lambda;
        self
    }

    pub fn with_x(mut self, x: XMode) -> Self {
        self.x = x;
        self
    }

    pub fn with_mutation(mut self, mutation: Mutation) -> Self {
        self.mutation = Some(mutation);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Some(Status::Pass)
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match &self.status {
            Some(Status::Fail(c)) => Some(c),
            _ => None,
        }
    }
}

/// Runs one check and fills in its status.
pub fn run_check(mut check: IdentityCheck) -> Result<IdentityCheck> {
    if !check.id.applies_to(&check.lambda) {
        return Err(Error::NotApplicable(format!(
            "{} compares against λ = 0 and cannot run with λ = {}",
            check.id, check.lambda
        )));
    }
    let start = Instant::now();
    let tweak = check
        .mutation
        .as_ref()
        .map_or_else(Tweak::none, Mutation::tweak);
    let task = CheckTask {
        id: check.id,
        range: check.range,
        x: &check.x,
        tweak,
    };
    let failure = check.lambda.dispatch(task);
    check.elapsed = Some(start.elapsed());
    check.status = Some(match failure {
        None => Status::Pass,
        Some(c) => Status::Fail(c),
    });
    Ok(check)
}

/// Default concrete λ sample: the classical limit, integers of both signs and
/// non-integer rationals of both signs.
pub fn default_lambda_modes() -> Vec<LambdaMode> {
    let q = |p: i64, d: i64| LambdaMode::Concrete(Rational::new(p.into(), d.into()));
    vec![
        LambdaMode::Symbolic,
        q(0, 1),
        q(1, 1),
        q(-1, 1),
        q(1, 3),
        q(-2, 5),
    ]
}

/// Every registered check for every applicable λ mode, x symbolic.
pub fn run_all(n_max: usize, k_max: usize, lambda_modes: &[LambdaMode]) -> Report {
    let checks = lambda_modes
        .iter()
        .flat_map(|mode| {
            CheckId::ALL
                .into_iter()
                .filter(move |id| id.applies_to(mode))
                .map(move |id| IdentityCheck::new(id, n_max, k_max).with_lambda(mode.clone()))
        })
        .collect();
    run_checks(checks)
}

/// Runs independent checks in parallel; the report keeps input order.
pub fn run_checks(checks: Vec<IdentityCheck>) -> Report {
    let start = Instant::now();
    let checks = checks
        .into_par_iter()
        .map(|c| run_check(c).expect("inapplicable checks are filtered by the caller"))
        .collect();
    Report {
        checks,
        elapsed: start.elapsed(),
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub checks: Vec<IdentityCheck>,
    pub elapsed: Duration,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// One line per check plus a summary. Timings are left out unless asked
    /// for, so that identical inputs give identical text.
    pub fn to_text(&self, with_timings: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{verdict} {:<12} lambda={:<8} x={:<8} n<={} k<={}",
                c.id.as_str(),
                c.lambda.to_string(),
                c.x.to_string(),
                c.range.n_max,
                c.range.k_max
            ));
            if with_timings {
                if let Some(t) = c.elapsed {
                    out.push_str(&format!(" ({:.3}s)", t.as_secs_f64()));
                }
            }
            if let Some(ce) = c.counterexample() {
                out.push_str(&format!("\n     first counterexample {ce}"));
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        ));
        if with_timings {
            out.push_str(&format!(" in {:.3}s", self.elapsed.as_secs_f64()));
        }
        out.push('\n');
        out
    }

    fn doc(&self, with_timings: bool) -> ReportDoc<'_> {
        ReportDoc {
            all_passed: self.all_passed(),
            elapsed_seconds: with_timings.then_some(self.elapsed.as_secs_f64()),
            checks: self
                .checks
                .iter()
                .map(|c| CheckDoc {
                    check_id: c.id.as_str(),
                    lambda: c.lambda.to_string(),
                    x: c.x.to_string(),
                    range: c.range,
                    status: if c.passed() { "pass" } else { "fail" },
                    elapsed_seconds: c.elapsed.filter(|_| with_timings).map(|t| t.as_secs_f64()),
                    counterexample: c.counterexample(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.doc(false)).expect("report serializes")
    }

    /// Pretty-printed with fields in schema order; timings only on request.
    pub fn to_json_string(&self, with_timings: bool) -> String {
        let mut s =
            serde_json::to_string_pretty(&self.doc(with_timings)).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    all_passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_seconds: Option<f64>,
    checks: Vec<CheckDoc<'a>>,
}

#[derive(Serialize)]
struct CheckDoc<'a> {
    check_id: &'static str,
    lambda: String,
    x: String,
    range: Range,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_seconds: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<&'a Counterexample>,
}

struct CheckTask<'a> {
    id: CheckId,
    range: Range,
    x: &'a XMode,
    tweak: Tweak,
}

/// Scans candidate comparisons in order and keeps the first mismatch.
struct Scan<'v> {
    vars: &'v [&'v str],
    found: Option<Counterexample>,
}

impl<'v> Scan<'v> {
    fn new(vars: &'v [&'v str]) -> Self {
        Scan { vars, found: None }
    }

    fn done(&self) -> bool {
        self.found.is_some()
    }

    fn compare<T: PartialEq + Pretty>(
        &mut self,
        n: usize,
        k: Option<usize>,
        param: Option<&str>,
        lhs: &T,
        rhs: &T,
    ) {
        if self.found.is_none() && lhs != rhs {
            self.found = Some(Counterexample {
                n,
                k,
                param: param.map(str::to_string),
                lhs: lhs.pretty(self.vars),
                rhs: rhs.pretty(self.vars),
            });
        }
    }
}

impl LambdaTask for CheckTask<'_> {
    type Output = Option<Counterexample>;

    fn run<R: LambdaRing>(self, lambda: &R) -> Option<Counterexample> {
        let Range { n_max, k_max } = self.range;
        let tweak = &self.tweak;
        let x = self.x;
        let xvars = R::VARS;
        let lvars = &R::VARS[1..];
        match self.id {
            CheckId::Thm1 => {
                let numbers = t2_number_table(n_max, k_max, lambda);
                let egf = t2_poly_table(n_max, k_max, lambda);
                let mut scan = Scan::new(xvars);
                for n in 0..=n_max {
                    for k in 0..=k_max.min(n) {
                        let rhs = t2_poly_convolution_from(&numbers, n, k, lambda, tweak);
                        scan.compare(
                            n,
                            Some(k),
                            None,
                            &x.specialize(&egf[n][k]),
                            &x.specialize(&rhs),
                        );
                    }
                }
                scan.found
            }
            CheckId::Thm2 => {
                let egf = t2_poly_table(n_max, k_max, lambda);
                let delta = t2_via_delta_table_with(n_max, k_max, lambda, tweak);
                let mut scan = Scan::new(xvars);
                for n in 0..=n_max {
                    for k in 0..=k_max {
                        let expected = if n >= k {
                            egf[n][k].clone()
                        } else {
                            Poly::zero()
                        };
                        scan.compare(
                            n,
                            Some(k),
                            None,
                            &x.specialize(&delta[n][k]),
                            &x.specialize(&expected),
                        );
                    }
                }
                scan.found
            }
            CheckId::Thm3 => {
                let numbers = t2_number_table(n_max, k_max, lambda);
                let delta = t2_via_delta_table_with(n_max, k_max, lambda, tweak);
                let mut scan = Scan::new(lvars);
                for n in 0..=n_max {
                    for k in 0..=k_max {
                        let expected = if n >= k {
                            numbers[n][k].clone()
                        } else {
                            R::zero()
                        };
                        scan.compare(n, Some(k), None, &delta[n][k].eval(&R::zero()), &expected);
                    }
                }
                scan.found
            }
            CheckId::Thm4 => {
                let egf = t2_poly_table(n_max, k_max, lambda);
                let rec = t2_poly_recursive_table_with(n_max, k_max, lambda, tweak);
                let mut scan = Scan::new(xvars);
                for n in 0..=n_max {
                    for k in 0..=k_max {
                        scan.compare(
                            n,
                            Some(k),
                            None,
                            &x.specialize(&rec[n][k]),
                            &x.specialize(&egf[n][k]),
                        );
                    }
                }
                scan.found
            }
            CheckId::Thm5 => {
                let egf = t2_poly_table(n_max, k_max, lambda);
                let minus_half = R::from_rational(&Rational::new((-1).into(), 2.into()));
                let at_origin = |p: &Poly<R>| p.eval(&R::zero());
                let mut scan = Scan::new(lvars);
                for n in 1..n_max {
                    for k in 1..=k_max.min(n) {
                        let half_k = R::from_rational(
                            &tweak.apply(Rational::new((k as i64).into(), 2.into())),
                        );
                        let factor = half_k.sub(&lambda.scale(&Rational::from_integer(n.into())));
                        let rhs = factor
                            .mul(&at_origin(&egf[n][k]))
                            .add(&egf[n][k - 1].eval(&minus_half));
                        scan.compare(n + 1, Some(k), None, &at_origin(&egf[n + 1][k]), &rhs);
                    }
                }
                scan.found
            }
            CheckId::Thm6 => {
                let numbers = t2_number_table(n_max, k_max, lambda);
                let mut scan = Scan::new(lvars);
                for n in 0..=n_max {
                    for k in 0..=k_max {
                        let lhs = t2_explicit_with(n, k, lambda, tweak);
                        scan.compare(n, Some(k), None, &lhs, &numbers[n][k]);
                    }
                }
                scan.found
            }
            CheckId::Thm7 => {
                let q = |p: i64, d: i64| Rational::new(p.into(), d.into());
                let orders = [q(1, 1), q(2, 1), q(1, 2)];
                let t2 = t2_poly_table(n_max, n_max, lambda);
                let direct: Vec<_> = orders
                    .iter()
                    .map(|r| degenerate_euler_table(n_max, r, lambda))
                    .collect();
                let carlitz = degenerate::carlitz_euler_table(n_max, lambda);
                let mut scan = Scan::new(xvars);
                for n in 0..=n_max {
                    for (r, table) in orders.iter().zip(&direct) {
                        let rhs = euler_via_t2_from(&t2, n, r, tweak);
                        let param = format!("r={r}");
                        scan.compare(
                            n,
                            None,
                            Some(&param),
                            &x.specialize(&table[n]),
                            &x.specialize(&rhs),
                        );
                    }
                    scan.compare(
                        n,
                        None,
                        Some("r=1 carlitz"),
                        &x.specialize(&direct[0][n]),
                        &x.specialize(&carlitz[n]),
                    );
                }
                scan.found
            }
            CheckId::Thm8 => {
                let pos = stirling2_lambda_table(n_max, k_max, lambda);
                let neg = stirling2_lambda_table(n_max, k_max, &lambda.neg());
                let numbers = t2_number_table(n_max, 2 * k_max, lambda);
                let mut scan = Scan::new(lvars);
                for n in 0..=n_max {
                    for k in 0..=k_max {
                        let lhs = t2_even_convolution_from(&pos, &neg, n, k, tweak);
                        let rhs = numbers[n][2 * k].scale(&(factorial(k) * binomial(2 * k, k)));
                        scan.compare(n, Some(k), None, &lhs, &rhs);
                    }
                }
                scan.found
            }
            CheckId::Eq2 => {
                let s1 = stirling1_table_with(n_max, tweak);
                let mut scan = Scan::new(&[]);
                for (n, row) in s1.iter().enumerate() {
                    let expanded = falling_factorial_poly(n);
                    for (k, value) in row.iter().enumerate().take(k_max + 1) {
                        scan.compare(n, Some(k), None, value, &expanded.coeff(k));
                    }
                }
                scan.found
            }
            CheckId::Eq12 => {
                let table = central_second_kind_table(n_max, n_max);
                let mut scan = Scan::new(&["x"]);
                for (n, row) in table.iter().enumerate() {
                    let mut sum = Poly::zero();
                    for (k, value) in row.iter().enumerate() {
                        sum.add_assign(
                            &central_factorial_poly(k).mul_scalar(&tweak.apply(value.clone())),
                        );
                    }
                    scan.compare(
                        n,
                        None,
                        None,
                        &sum,
                        &Poly::monomial(Rational::from_integer(1.into()), n),
                    );
                }
                scan.found
            }
            CheckId::Eq15 => {
                let mut scan = Scan::new(&["x"]);
                for m in 0..=n_max {
                    for k in 1..=k_max {
                        let (lhs, rhs) = central_diff_reduction_sides(k, m, tweak);
                        scan.compare(m, Some(k), Some("m=n"), &lhs, &rhs);
                    }
                }
                scan.found
            }
            CheckId::LimitS2 => {
                let s2 = stirling2_lambda_table(n_max, k_max, lambda);
                let classical = stirling2_table_with(n_max, k_max, tweak);
                let mut scan = Scan::new(&[]);
                for n in 0..=n_max {
                    for k in 0..=k_max {
                        scan.compare(
                            n,
                            Some(k),
                            None,
                            &s2[n][k].at_lambda_zero(),
                            &classical[n][k],
                        );
                    }
                }
                scan.found
            }
            CheckId::LimitT2 => {
                let t2 = t2_number_table(n_max, k_max, lambda);
                let t1 = degenerate::t1_degenerate_table(n_max, k_max, lambda);
                let big = central_second_kind_by_basis_table_with(n_max, tweak);
                let small = central_first_kind_table_with(n_max, k_max, tweak);
                let mut scan = Scan::new(&[]);
                for n in 0..=n_max {
                    for k in 0..=k_max {
                        let big_nk = big[n]
                            .get(k)
                            .cloned()
                            .unwrap_or_else(<Rational as Ring>::zero);
                        scan.compare(n, Some(k), Some("T"), &t2[n][k].at_lambda_zero(), &big_nk);
                        scan.compare(
                            n,
                            Some(k),
                            Some("t"),
                            &t1[n][k].at_lambda_zero(),
                            &small[n][k],
                        );
                    }
                }
                scan.found
            }
            CheckId::LimitThm5 => {
                let egf = t2_poly_table(n_max, k_max, lambda);
                let classical = central_second_kind_table(n_max, k_max);
                let minus_half = R::from_rational(&Rational::new((-1).into(), 2.into()));
                let mut scan = Scan::new(&[]);
                for n in 1..n_max {
                    for k in 1..=k_max.min(n) {
                        let half_k = tweak.apply(Rational::new((k as i64).into(), 2.into()));
                        let shifted = egf[n][k - 1].eval(&minus_half).at_lambda_zero();
                        let rhs = half_k * &classical[n][k] + shifted;
                        scan.compare(n + 1, Some(k), None, &classical[n + 1][k], &rhs);
                    }
                }
                scan.found
            }
            CheckId::InversePair => {
                let order = n_max + 1;
                let g = central_map(lambda, order);
                let h = central_inverse(lambda, order).map(|c| tweak.apply_ring(c.clone()));
                let t = Series::var(order);
                let mut scan = Scan::new(lvars);
                let hg = h.compose(&g).expect("orders match and g(0) = 0");
                let gh = g.compose(&h).expect("orders match and h(0) = 0");
                for n in 0..order {
                    scan.compare(n, None, Some("h∘g"), &hg.coeff(n), &t.coeff(n));
                    scan.compare(n, None, Some("g∘h"), &gh.coeff(n), &t.coeff(n));
                }
                if scan.done() {
                    return scan.found;
                }
                let t1 = degenerate::egf_power_columns(&h, n_max, n_max);
                let t2 = t2_number_table(n_max, n_max, lambda);
                for n in 0..=n_max {
                    for k in 0..=n_max {
                        let mut entry = R::zero();
                        for j in 0..=n_max {
                            entry.add_assign(&t1[n][j].mul(&t2[j][k]));
                        }
                        let expected = if n == k { R::one() } else { R::zero() };
                        scan.compare(n, Some(k), Some("t1·T2"), &entry, &expected);
                    }
                }
                scan.found
            }
        }
    }
}
