//! Catalog of every checkable identity as a pair of series builders, with a
//! uniform runner.
//!
//! A record either asserts `lhs == rhs` up to the order, or `lhs - rhs` has
//! no negative coefficient up to the order. Records marked
//! [`Severity::Info`] are reported but never fail a run.

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::closedforms::{closed_form, help_id_1_lhs, ClosedFormId};
use crate::doubleseries::{
    double_series, family_series, tail_quotient_sum, Family, FamilyId, SeriesId,
};
use crate::error::{Error, Result};
use crate::hyperg::{
    contiguous_instance, heine_instance, lambert_theta, qbinomial_instance, HeineKind, Phi21Params,
};
use crate::partitions::{f1_partition_scan, representation_count};
use crate::qproducts::{poch_finite, poch_infinite, PochhammerSpec};
use crate::series::{int, with_precision, LaurentSeries, SeriesAccumulator};

/// Builds one side of an identity at a given order.
pub type Builder = Arc<dyn Fn(i64) -> Result<LaurentSeries> + Send + Sync>;

/// Largest order any run may request.
pub const DEFAULT_ORDER_CAP: i64 = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Severity {
    Hard,
    Info,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Coefficients agree.
    Equal,
    /// `lhs - rhs` has only nonnegative coefficients.
    Dominates,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Hard => "HARD",
            Severity::Info => "INFO",
        })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "=",
            Relation::Dominates => ">=",
        })
    }
}

#[derive(Clone)]
pub struct IdentityRecord {
    pub id: String,
    pub anchor: String,
    pub default_order: i64,
    /// Orders above this are clamped (the partition oracles are exponential).
    pub max_order: Option<i64>,
    pub severity: Severity,
    pub relation: Relation,
    lhs: Builder,
    rhs: Builder,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("default_order", &self.default_order)
            .field("severity", &self.severity)
            .field("relation", &self.relation)
            .finish_non_exhaustive()
    }
}

impl IdentityRecord {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        default_order: i64,
        relation: Relation,
        lhs: Builder,
        rhs: Builder,
    ) -> Self {
        IdentityRecord {
            id: id.into(),
            anchor: anchor.into(),
            default_order,
            max_order: None,
            severity: Severity::Hard,
            relation,
            lhs,
            rhs,
        }
    }

    fn info(mut self) -> Self {
        self.severity = Severity::Info;
        self
    }

    fn capped(mut self, max: i64) -> Self {
        self.max_order = Some(max);
        self
    }

    pub fn summary(&self) -> IdentitySummary {
        IdentitySummary {
            id: self.id.clone(),
            anchor: self.anchor.clone(),
            default_order: self.default_order,
            max_order: self.max_order,
            severity: self.severity,
            relation: self.relation,
        }
    }

    pub fn build(&self, order: i64) -> Result<(LaurentSeries, LaurentSeries)> {
        Ok(((self.lhs)(order)?, (self.rhs)(order)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySummary {
    pub id: String,
    pub anchor: String,
    pub default_order: i64,
    pub max_order: Option<i64>,
    pub severity: Severity,
    pub relation: Relation,
}

impl IdentitySummary {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "anchor": self.anchor,
            "default_order": self.default_order,
            "severity": self.severity.to_string(),
            "relation": self.relation.to_string(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub order: i64,
    pub status: Status,
    pub severity: Severity,
    pub first_mismatch: Option<i64>,
    pub lhs_coeff: Option<String>,
    pub rhs_coeff: Option<String>,
    /// Every coefficient on both sides is an integer.
    pub integral: bool,
    pub message: Option<String>,
    pub wall_time: Duration,
}

impl VerificationReport {
    fn error(
        id: &str,
        order: i64,
        severity: Severity,
        message: String,
        wall_time: Duration,
    ) -> Self {
        VerificationReport {
            id: id.to_string(),
            order,
            status: Status::Error,
            severity,
            first_mismatch: None,
            lhs_coeff: None,
            rhs_coeff: None,
            integral: false,
            message: Some(message),
            wall_time,
        }
    }

    /// A failing HARD record (or one that could not be evaluated).
    pub fn is_hard_failure(&self) -> bool {
        self.severity == Severity::Hard && self.status != Status::Pass
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "order": self.order,
            "status": self.status.to_string(),
            "severity": self.severity.to_string(),
            "first_mismatch": self.first_mismatch,
            "lhs_coeff": self.lhs_coeff,
            "rhs_coeff": self.rhs_coeff,
            "integral": self.integral,
            "message": self.message,
            "wall_ms": self.wall_time.as_millis() as u64,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<5} {:<4} {:<28} order {:>4}  {:>7.2}s",
            self.status.to_string(),
            self.severity.to_string(),
            self.id,
            self.order,
            self.wall_time.as_secs_f64()
        )?;
        if let (Some(e), Some(l), Some(r)) = (self.first_mismatch, &self.lhs_coeff, &self.rhs_coeff)
        {
            write!(f, "  first mismatch at q^{e}: {l} vs {r}")?;
        }
        if !self.integral && self.status != Status::Error {
            write!(f, "  (non-integer coefficients)")?;
        }
        if let Some(m) = &self.message {
            write!(f, "  {m}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Summary {
    pub reports: Vec<VerificationReport>,
    pub total_time: Duration,
}

impl Summary {
    pub fn passed(&self) -> usize {
        self.reports
            .iter()
            .filter(|r| r.status == Status::Pass)
            .count()
    }

    pub fn hard_failed(&self) -> usize {
        self.reports.iter().filter(|r| r.is_hard_failure()).count()
    }

    pub fn info_failed(&self) -> usize {
        self.reports
            .iter()
            .filter(|r| r.severity == Severity::Info && r.status != Status::Pass)
            .count()
    }

    pub fn hard_failure(&self) -> bool {
        self.hard_failed() > 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "reports": self.reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "summary": {
                "passed": self.passed(),
                "hard_failed": self.hard_failed(),
                "info_failed": self.info_failed(),
                "total": self.reports.len(),
                "total_ms": self.total_time.as_millis() as u64,
            }
        })
    }
}

/// Glob match supporting `*` only.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    let parts: Vec<&str> = pattern.split('*').collect();
    if parts.len() == 1 {
        return pattern == text;
    }
    let (first, last) = (parts[0], parts[parts.len() - 1]);
    if !text.starts_with(first) || text.len() < first.len() + last.len() || !text.ends_with(last) {
        return false;
    }
    let mut rest = &text[first.len()..text.len() - last.len()];
    for mid in &parts[1..parts.len() - 1] {
        match rest.find(mid) {
            Some(i) => rest = &rest[i + mid.len()..],
            None => return false,
        }
    }
    true
}

pub struct Catalog {
    records: Vec<IdentityRecord>,
    order_cap: i64,
}

impl Catalog {
    pub fn new(records: Vec<IdentityRecord>) -> Self {
        Catalog {
            records,
            order_cap: DEFAULT_ORDER_CAP,
        }
    }

    /// Every identity this crate knows how to check.
    pub fn standard() -> Self {
        Self::new(standard_records())
    }

    pub fn with_order_cap(mut self, cap: i64) -> Self {
        self.order_cap = cap;
        self
    }

    pub fn order_cap(&self) -> i64 {
        self.order_cap
    }

    pub fn records(&self) -> &[IdentityRecord] {
        &self.records
    }

    pub fn list(&self) -> Vec<IdentitySummary> {
        self.records.iter().map(|r| r.summary()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&IdentityRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// Swaps in a different right-hand side, e.g. for fault injection.
    pub fn replace_rhs(&mut self, id: &str, rhs: Builder) -> Result<()> {
        let rec = self
            .records
            .iter_mut()
            .find(|r| r.id == id)
            .ok_or_else(|| Error::UnknownId(id.to_string()))?;
        rec.rhs = rhs;
        Ok(())
    }

    pub fn verify(&self, id: &str, order: Option<i64>) -> Result<VerificationReport> {
        let rec = self
            .get(id)
            .ok_or_else(|| Error::UnknownId(id.to_string()))?;
        Ok(self.run(rec, order))
    }

    fn run(&self, rec: &IdentityRecord, order: Option<i64>) -> VerificationReport {
        let start = Instant::now();
        let mut order = order.unwrap_or(rec.default_order);
        if order > self.order_cap {
            return VerificationReport::error(
                &rec.id,
                order,
                rec.severity,
                format!("order {order} exceeds safety cap {}", self.order_cap),
                start.elapsed(),
            );
        }
        if order < 0 {
            return VerificationReport::error(
                &rec.id,
                order,
                rec.severity,
                format!("order must be nonnegative, got {order}"),
                start.elapsed(),
            );
        }
        if let Some(max) = rec.max_order {
            order = order.min(max);
        }
        let outcome = rec.build(order).and_then(|(lhs, rhs)| {
            let integral = lhs.is_integral() && rhs.is_integral();
            let mismatch = match rec.relation {
                Relation::Equal => LaurentSeries::first_mismatch(&lhs, &rhs, order)?
                    .map(|m| (m.exponent, m.lhs, m.rhs)),
                Relation::Dominates => (&lhs - &rhs)
                    .first_negative(order)?
                    .map(|(e, _)| -> Result<_> { Ok((e, lhs.coeff(e)?, rhs.coeff(e)?)) })
                    .transpose()?,
            };
            Ok((integral, mismatch))
        });
        let wall_time = start.elapsed();
        match outcome {
            Err(e) => {
                VerificationReport::error(&rec.id, order, rec.severity, e.to_string(), wall_time)
            }
            Ok((integral, mismatch)) => VerificationReport {
                id: rec.id.clone(),
                order,
                status: if mismatch.is_none() {
                    Status::Pass
                } else {
                    Status::Fail
                },
                severity: rec.severity,
                first_mismatch: mismatch.as_ref().map(|m| m.0),
                lhs_coeff: mismatch.as_ref().map(|m| m.1.to_string()),
                rhs_coeff: mismatch.as_ref().map(|m| m.2.to_string()),
                integral,
                message: None,
                wall_time,
            },
        }
    }

    /// Runs every record whose id matches `pattern` (`*` wildcards).
    /// Reports come back in catalog order regardless of `jobs`.
    pub fn verify_matching(&self, pattern: &str, order: Option<i64>, jobs: usize) -> Summary {
        let selected: Vec<&IdentityRecord> = self
            .records
            .iter()
            .filter(|r| glob_match(pattern, &r.id))
            .collect();
        self.run_many(&selected, order, jobs)
    }

    pub fn verify_all(&self, order: Option<i64>, jobs: usize) -> Summary {
        let all: Vec<&IdentityRecord> = self.records.iter().collect();
        self.run_many(&all, order, jobs)
    }

    fn run_many(&self, records: &[&IdentityRecord], order: Option<i64>, jobs: usize) -> Summary {
        let start = Instant::now();
        let reports = if jobs <= 1 {
            records.iter().map(|r| self.run(r, order)).collect()
        } else {
            match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
                Ok(pool) => {
                    pool.install(|| records.par_iter().map(|r| self.run(r, order)).collect())
                }
                Err(_) => records.iter().map(|r| self.run(r, order)).collect(),
            }
        };
        Summary {
            reports,
            total_time: start.elapsed(),
        }
    }
}

fn builder<F>(f: F) -> Builder
where
    F: Fn(i64) -> Result<LaurentSeries> + Send + Sync + 'static,
{
    Arc::new(f)
}

fn double(id: SeriesId) -> Builder {
    builder(move |order| Ok(double_series(id, order)))
}

fn closed(id: ClosedFormId) -> Builder {
    builder(move |order| closed_form(id, order))
}

fn family(f: Family, m: u32) -> Builder {
    builder(move |order| family_series(FamilyId::new(f, m)?, order))
}

fn zero() -> Builder {
    builder(|order| Ok(LaurentSeries::zero(order)))
}

/// Series whose coefficient of `q^N` is the oracle's count for `N`.
fn oracle_series(count: impl Fn(u64) -> i64 + Send + Sync + 'static) -> Builder {
    builder(move |order| {
        let coeffs = (0..=order.max(-1)).map(|t| int(count(t as u64))).collect();
        Ok(LaurentSeries::from_coeffs(0, coeffs, order))
    })
}

fn heine(kind: HeineKind, p: Phi21Params, left: bool) -> Builder {
    builder(move |order| {
        let (l, r) = heine_instance(kind, &p, order)?;
        Ok(if left { l } else { r })
    })
}

fn qbinom(a: i64, z: i64, step: i64, left: bool) -> Builder {
    builder(move |order| {
        let (l, r) = qbinomial_instance(a, z, step, order)?;
        Ok(if left { l } else { r })
    })
}

fn contiguous(p: Phi21Params, left: bool) -> Builder {
    builder(move |order| {
        let (l, r) = contiguous_instance(&p, order)?;
        Ok(if left { l } else { r })
    })
}

/// Random splitting/tail-law parameters for trial `seed`:
/// `(start, step, m, n, order)`.
pub fn basic_law_params(seed: u64) -> (i64, i64, u64, u64, i64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (
        rng.gen_range(-6..=6),
        rng.gen_range(1..=4),
        rng.gen_range(0..=8),
        rng.gen_range(0..=8),
        rng.gen_range(0..=40),
    )
}

/// Both sides of `(a;q)_(n+m) = (a;q)_m (a q^m; q)_n`.
pub fn splitting_law(
    start: i64,
    step: i64,
    m: u64,
    n: u64,
    order: i64,
) -> Result<(LaurentSeries, LaurentSeries)> {
    let whole = PochhammerSpec::finite(start, step, n + m)?;
    let head = PochhammerSpec::finite(start, step, m)?;
    let tail = PochhammerSpec::finite(start, step, n)?.shifted(m);
    let lhs = poch_finite(&whole, order)?;
    let rhs = with_precision(order, |w| {
        Ok(&poch_finite(&head, w)? * &poch_finite(&tail, w)?)
    })?;
    Ok((lhs, rhs))
}

/// Both sides of `(a;q)_inf = (a;q)_n (a q^n; q)_inf`.
pub fn tail_law(
    start: i64,
    step: i64,
    n: u64,
    order: i64,
) -> Result<(LaurentSeries, LaurentSeries)> {
    let whole = PochhammerSpec::infinite(start, step)?;
    let head = PochhammerSpec::finite(start, step, n)?;
    let tail = whole.shifted(n);
    let lhs = poch_infinite(&whole, order)?;
    let rhs = with_precision(order, |w| {
        Ok(&poch_finite(&head, w)? * &poch_infinite(&tail, w)?)
    })?;
    Ok((lhs, rhs))
}

const THETA: &str = "Θ = (q^2;q^2)_∞^2 / (q;q^2)_∞^2";

fn standard_records() -> Vec<IdentityRecord> {
    use ClosedFormId as C;
    use Relation::{Dominates, Equal};
    let mut out = Vec::new();
    let mut push = |r: IdentityRecord| out.push(r);

    // closed forms of the double series
    push(IdentityRecord::new(
        "thm-f1",
        format!("F1 = Θ/(1-q^2) - (1+q^2)/((1-q)(1-q^3)), {THETA}"),
        200,
        Equal,
        double(SeriesId::F1),
        closed(C::ThmF1),
    ));
    push(IdentityRecord::new(
        "thm-f2",
        "F2 = q(1-q^3)/((1-q)(1-q^2)) Θ - q(1+q^2)/(1-q)^2",
        200,
        Equal,
        double(SeriesId::F2),
        closed(C::ThmF2),
    ));
    push(IdentityRecord::new(
        "thm-g",
        "G = q^3/((1+q)(1-q^3)) Θ - q^2(1-q)(-1+q^3+q^4+q^5)/((1-q^3)^2(1-q^5))",
        200,
        Equal,
        double(SeriesId::G),
        closed(C::ThmG),
    ));

    // positivity
    for id in SeriesId::ALL {
        push(IdentityRecord::new(
            format!("positivity-{id}"),
            format!("{} q^n ⪰ 0", id.name().to_uppercase()),
            500,
            Dominates,
            double(id),
            zero(),
        ));
    }
    push(IdentityRecord::new(
        "bound-f1",
        "F1 ⪰ (q+q^3)/(1-q^3)",
        300,
        Dominates,
        double(SeriesId::F1),
        closed(C::BoundF1),
    ));
    // the printed F2 bound already exceeds F2 at q^1
    push(
        IdentityRecord::new(
            "bound-f2",
            "F2 ⪰ q(1+q+q^2) + q^5(1+q)/(1-q^3)",
            300,
            Dominates,
            double(SeriesId::F2),
            closed(C::BoundF2),
        )
        .info(),
    );
    push(IdentityRecord::new(
        "bound-g",
        "G ⪰ q^2/(1-q^5) + q^5(1-q^6)/((1-q^3)(1-q^5)(1-q^7))",
        300,
        Dominates,
        double(SeriesId::G),
        closed(C::BoundG),
    ));

    // family evaluations
    push(IdentityRecord::new(
        "lemma-a2",
        "Σ A(2,n) q^n = -q(1+q^2)/((1-q)^2(1-q^3))",
        100,
        Equal,
        family(Family::A, 2),
        closed(C::A2),
    ));
    for m in 2..=6 {
        push(IdentityRecord::new(
            format!("lemma-a2m[m={m}]"),
            "Σ A(2m,n) q^n = -1/(1-q)^2 Σ q^(n+1)(q^(2n+2);q^2)_(m-1)/(q^(2n+3);q^2)_(m-2)",
            100,
            Equal,
            family(Family::A, 2 * m),
            closed(C::A2m(m)),
        ));
    }
    for m in 1..=6 {
        push(IdentityRecord::new(
            format!("lemma-aprime1[m={m}]"),
            "Σ A'(2m,n) q^n = 1/(1-q^3) Σ q^(n+2m)(q^(2n+2);q^2)_(m-1)/(q^(2n+5);q^2)_(m-1)",
            100,
            Equal,
            family(Family::APrime, 2 * m),
            closed(C::APrime1(m)),
        ));
        push(IdentityRecord::new(
            format!("lemma-aprime2[m={m}]"),
            "Σ A'(2m,n) q^n = 1/(1-q) Σ q^(3n+2m)(q^(2n+2);q^2)_(m-1)/(q^(2n+3);q^2)_(m-1)",
            100,
            Equal,
            family(Family::APrime, 2 * m),
            closed(C::APrime2(m)),
        ));
        push(IdentityRecord::new(
            format!("aprime-forms[m={m}]"),
            "the two single-sum forms of Σ A'(2m,n) q^n agree",
            100,
            Equal,
            closed(C::APrime1(m)),
            closed(C::APrime2(m)),
        ));
    }
    push(IdentityRecord::new(
        "lemma-b2",
        "Σ B(2,n) q^n = -q^3(1-q^3-q^4-q^5)/((1-q^3)^2(1-q^5))",
        100,
        Equal,
        family(Family::B, 2),
        closed(C::B2),
    ));
    for m in 2..=6 {
        push(IdentityRecord::new(
            format!("lemma-b2m[m={m}]"),
            "Σ B(2m,n) q^n = 1/((1-q)(1-q^3)) Σ q^(3n+4)(q^(2n+2);q^2)_(m-1)/(q^(2n+1);q^2)_(m-2)",
            100,
            Equal,
            family(Family::B, 2 * m),
            closed(C::B2m(m)),
        ));
    }
    for m in 1..=6 {
        push(IdentityRecord::new(
            format!("lemma-bprime[m={m}]"),
            "Σ B'(2m,n) q^n = -1/(1-q) Σ q^(5n+2m+1)(q^(2n+2);q^2)_(m-1)/(q^(2n+1);q^2)_(m-1)",
            100,
            Equal,
            family(Family::BPrime, 2 * m),
            closed(C::BPrime(m)),
        ));
    }

    // contiguous telescoping
    for m in (2..=12).step_by(2) {
        push(IdentityRecord::new(
            format!("telescope-a[m={m}]"),
            "A'(m,n) = A(m,n) - A(m+2,n)",
            100,
            Equal,
            family(Family::APrime, m),
            builder(move |order| {
                Ok(family_series(FamilyId::new(Family::A, m)?, order)?
                    - family_series(FamilyId::new(Family::A, m + 2)?, order)?)
            }),
        ));
        push(IdentityRecord::new(
            format!("telescope-b[m={m}]"),
            "B'(m,n) = B(m,n) - B(m+2,n)",
            100,
            Equal,
            family(Family::BPrime, m),
            builder(move |order| {
                Ok(family_series(FamilyId::new(Family::B, m)?, order)?
                    - family_series(FamilyId::new(Family::B, m + 2)?, order)?)
            }),
        ));
    }
    for m in 1..=5u32 {
        for (fam, prime, tag) in [
            (Family::A, Family::APrime, "a"),
            (Family::B, Family::BPrime, "b"),
        ] {
            push(IdentityRecord::new(
                format!("chain-{tag}[m={m}]"),
                format!(
                    "Σ {0}(2m+2,n) q^n = Σ {0}(2,n) q^n - Σ_(k=1..m) Σ {0}'(2k,n) q^n",
                    tag.to_uppercase()
                ),
                80,
                Equal,
                family(fam, 2 * m + 2),
                builder(move |order| {
                    let mut acc = SeriesAccumulator::new(order);
                    acc.add(&family_series(FamilyId::new(fam, 2)?, order)?);
                    for k in 1..=m {
                        acc.sub(&family_series(FamilyId::new(prime, 2 * k)?, order)?);
                    }
                    Ok(acc.finish())
                }),
            ));
        }
    }

    // limit identities
    push(IdentityRecord::new(
        "help-id-1",
        "-q/(1-q)^2 Σ q^n (q^(2n+2);q^2)_∞/(q^(2n+3);q^2)_∞ = -q(1+q^2)/((1-q)^2(1-q^3)) - 1/(1-q) Σ_(n,k) q^(2k+3n+2)(q^(2n+2);q^2)_k/(q^(2n+3);q^2)_k",
        150,
        Equal,
        builder(help_id_1_lhs),
        closed(C::HelpId1),
    ));
    push(IdentityRecord::new(
        "help-2-double-1",
        "Σ q^n (q^(2n+2);q^2)_∞/(q^(2n+3);q^2)_∞ = (1-q)/(1-q^2) Θ",
        150,
        Equal,
        builder(tail_quotient_sum),
        closed(C::Help2Double1),
    ));
    push(IdentityRecord::new(
        "lambert-theta",
        "Σ_(n≥0) (q^n/(1-q^(4n+1)) - q^(3n+2)/(1-q^(4n+3))) = Θ",
        300,
        Equal,
        builder(|order| Ok(lambert_theta(order))),
        closed(C::Theta),
    ));

    // classical transformation instances
    let p = |a, b, c, z| Phi21Params::new(a, b, c, 2, z).expect("valid parameters");
    let mut heine_case = |id: String, kind: HeineKind, params: Phi21Params| {
        let anchor = match kind {
            HeineKind::First => "2φ1(a,b;c;q,z) = (b,az;q)_∞/(c,z;q)_∞ 2φ1(c/b,z;az;q,b)",
            HeineKind::Second => "2φ1(a,b;c;q,z) = (c/b,bz;q)_∞/(c,z;q)_∞ 2φ1(abz/c,b;bz;q,c/b)",
        };
        push(IdentityRecord::new(
            id,
            format!(
                "{anchor} with (a,b,c,z)=(q^{},q^{},q^{},q^{}), base q^2",
                params.a_exp, params.b_exp, params.c_exp, params.z_exp
            ),
            100,
            Equal,
            heine(kind, params, true),
            heine(kind, params, false),
        ));
    };
    heine_case("heine2[a2]".into(), HeineKind::Second, p(-1, 1, 4, 2));
    heine_case("heine2[b2]".into(), HeineKind::Second, p(-3, 3, 4, 2));
    for m in 1..=6i64 {
        if m >= 2 {
            heine_case(
                format!("heine1[a2m][m={m}]"),
                HeineKind::First,
                p(-1, 1, 4, 2 * m),
            );
            heine_case(
                format!("heine1[b2m][m={m}]"),
                HeineKind::First,
                p(-3, 3, 4, 2 * m),
            );
        }
        heine_case(
            format!("heine1[aprime1][m={m}]"),
            HeineKind::First,
            p(3, 1, 6, 2 * m),
        );
        heine_case(
            format!("heine1[aprime2][m={m}]"),
            HeineKind::First,
            p(1, 3, 6, 2 * m),
        );
        heine_case(
            format!("heine1[bprime][m={m}]"),
            HeineKind::First,
            p(-1, 5, 6, 2 * m),
        );
    }
    let mut out2 = Vec::new();
    let mut push2 = |r: IdentityRecord| out2.push(r);
    for (id, a, z) in [("qbinom[help-2-double-1]", 3, 1), ("qbinom[thm-g]", 1, 3)] {
        push2(IdentityRecord::new(
            id,
            format!("Σ (a;q)_n/(q;q)_n z^n = (az;q)_∞/(z;q)_∞ with a=q^{a}, z=q^{z}, base q^2"),
            100,
            Equal,
            qbinom(a, z, 2, true),
            qbinom(a, z, 2, false),
        ));
    }
    for m in 1..=6i64 {
        for (tag, a, b) in [("telescope-a", -1, 1), ("telescope-b", -3, 3)] {
            let params = p(a, b, 4, m);
            push2(IdentityRecord::new(
                format!("contiguous[{tag}][m={m}]"),
                format!(
                    "2φ1(a,b;c;q,z) - 2φ1(a,b;c;q,qz) = z(1-a)(1-b)/(1-c) 2φ1(qa,qb;qc;q,z) with (a,b,c,z)=(q^{a},q^{b},q^4,q^{m}), base q^2"
                ),
                100,
                Equal,
                contiguous(params, true),
                contiguous(params, false),
            ));
        }
    }

    // randomized product laws
    for trial in 0..100u64 {
        let (start, step, m, n, order) = basic_law_params(trial);
        push2(IdentityRecord::new(
            format!("basic-split[trial={trial}]"),
            format!(
                "(a;q)_(n+m) = (a;q)_m (aq^m;q)_n with a=q^{start}, base q^{step}, m={m}, n={n}"
            ),
            order,
            Equal,
            builder(move |o| Ok(splitting_law(start, step, m, n, o)?.0)),
            builder(move |o| Ok(splitting_law(start, step, m, n, o)?.1)),
        ));
        push2(IdentityRecord::new(
            format!("basic-tail[trial={trial}]"),
            format!("(a;q)_∞ = (a;q)_n (aq^n;q)_∞ with a=q^{start}, base q^{step}, n={n}"),
            order,
            Equal,
            builder(move |o| Ok(tail_law(start, step, n, o)?.0)),
            builder(move |o| Ok(tail_law(start, step, n, o)?.1)),
        ));
    }

    // partition oracles
    for id in SeriesId::ALL {
        push2(
            IdentityRecord::new(
                format!("oracle-{id}"),
                format!(
                    "signed representation count of N = coefficient of q^N in {}",
                    id.name().to_uppercase()
                ),
                40,
                Equal,
                oracle_series(move |t| representation_count(id, t).value()),
                double(id),
            )
            .capped(60),
        );
    }
    push2(
        IdentityRecord::new(
            "f1-scan",
            "weighted scan of all partitions of N = signed F1 representation count",
            40,
            Equal,
            oracle_series(|t| f1_partition_scan(t as u32).value()),
            oracle_series(|t| representation_count(SeriesId::F1, t).value()),
        )
        .capped(45),
    );
    out.extend(out2);
    out
}
