//! Truncated basic hypergeometric sums with monomial parameters, and
//! builders for both sides of the classical transformations applied to them.
//!
//! All parameters are powers of `q`: `a = q^a_exp`, base `q^step`, and so
//! on. The argument exponent must be positive so that term valuations grow
//! linearly and a finite sum is exact to any order.

use crate::error::{Error, Result};
use crate::qproducts::{poch_quotient, PochhammerSpec};
use crate::series::{with_precision, LaurentSeries, SeriesAccumulator};

/// Parameters of `2phi1(q^a, q^b; q^c; q^step, q^z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Phi21Params {
    pub a_exp: i64,
    pub b_exp: i64,
    pub c_exp: i64,
    pub step: i64,
    pub z_exp: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeineKind {
    /// `(b, az)/(c, z) * 2phi1(c/b, z; az; b)`
    First,
    /// `(c/b, bz)/(c, z) * 2phi1(abz/c, b; bz; c/b)`
    Second,
}

impl Phi21Params {
    pub fn new(a_exp: i64, b_exp: i64, c_exp: i64, step: i64, z_exp: i64) -> Result<Self> {
        let p = Phi21Params {
            a_exp,
            b_exp,
            c_exp,
            step,
            z_exp,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.step < 1 {
            return Err(Error::InvalidParameter(format!(
                "base step must be >= 1, got {}",
                self.step
            )));
        }
        if self.z_exp < 1 {
            return Err(Error::InvalidParameter(format!(
                "argument exponent must be >= 1, got {}",
                self.z_exp
            )));
        }
        if hits_zero(self.c_exp, self.step) {
            return Err(Error::InvalidParameter(format!(
                "denominator parameter q^{} vanishes a factor for base q^{}",
                self.c_exp, self.step
            )));
        }
        Ok(())
    }

    fn with_z(&self, z_exp: i64) -> Self {
        Phi21Params { z_exp, ..*self }
    }
}

/// True when `1 - q^(e + j*step)` is identically zero for some `j >= 0`.
fn hits_zero(e: i64, step: i64) -> bool {
    e <= 0 && (-e) % step == 0
}

/// Sum of the negative exponents among `e, e + step, e + 2 step, ...`.
fn negative_part(e: i64, step: i64) -> i64 {
    let mut total = 0;
    let mut x = e;
    while x < 0 {
        total += x;
        x += step;
    }
    total
}

/// `sum_n prod_i (q^num_i; q^s)_n / ((q^s; q^s)_n prod_j (q^den_j; q^s)_n) q^(z n)`
#[derive(Clone, Debug)]
struct BasicSum<'a> {
    numer: &'a [i64],
    denom: &'a [i64],
    step: i64,
    z_exp: i64,
}

impl BasicSum<'_> {
    fn term(&self, n: i64, order: i64) -> Result<LaurentSeries> {
        let len = n as u64;
        let nums = self
            .numer
            .iter()
            .map(|&e| PochhammerSpec::finite(e, self.step, len))
            .collect::<Result<Vec<_>>>()?;
        let mut dens = vec![PochhammerSpec::finite(self.step, self.step, len)?];
        for &e in self.denom {
            dens.push(PochhammerSpec::finite(e, self.step, len)?);
        }
        let shift = n * self.z_exp;
        Ok(poch_quotient(&nums, &dens, order - shift)?.shift(shift))
    }

    /// Lower bound on the valuation of term `n`.
    fn valuation_bound(&self, n: i64) -> i64 {
        let neg: i64 = self
            .numer
            .iter()
            .map(|&e| negative_part(e, self.step))
            .sum();
        n * self.z_exp + neg
    }

    fn sum(&self, order: i64, extra_terms: i64) -> Result<LaurentSeries> {
        let mut acc = SeriesAccumulator::new(order);
        let mut n = 0;
        while self.valuation_bound(n) <= order {
            acc.add(&self.term(n, order)?);
            n += 1;
        }
        if !self.term(n, order)?.is_zero() {
            return Err(Error::CutoffViolated {
                context: "basic hypergeometric sum",
                index: n,
                order,
            });
        }
        for k in n..n + extra_terms {
            acc.add(&self.term(k, order)?);
        }
        Ok(acc.finish())
    }
}

pub fn phi21_truncated(p: &Phi21Params, order: i64) -> Result<LaurentSeries> {
    phi21_with_extra_terms(p, order, 0)
}

/// Same as [`phi21_truncated`] but keeps summing `extra_terms` past the
/// cutoff.
pub fn phi21_with_extra_terms(
    p: &Phi21Params,
    order: i64,
    extra_terms: i64,
) -> Result<LaurentSeries> {
    p.validate()?;
    BasicSum {
        numer: &[p.a_exp, p.b_exp],
        denom: &[p.c_exp],
        step: p.step,
        z_exp: p.z_exp,
    }
    .sum(order, extra_terms)
}

fn infinite(exps: &[i64], step: i64) -> Result<Vec<PochhammerSpec>> {
    exps.iter()
        .map(|&e| PochhammerSpec::infinite(e, step))
        .collect()
}

/// Both sides of a Heine transformation for the given parameters.
pub fn heine_instance(
    kind: HeineKind,
    p: &Phi21Params,
    order: i64,
) -> Result<(LaurentSeries, LaurentSeries)> {
    p.validate()?;
    let Phi21Params {
        a_exp: a,
        b_exp: b,
        c_exp: c,
        step,
        z_exp: z,
    } = *p;
    let (prefix_num, transformed) = match kind {
        HeineKind::First => ([b, a + z], (c - b, z, a + z, b)),
        HeineKind::Second => ([c - b, b + z], (a + b + z - c, b, b + z, c - b)),
    };
    let (ta, tb, tc, tz) = transformed;
    let target = Phi21Params {
        a_exp: ta,
        b_exp: tb,
        c_exp: tc,
        step,
        z_exp: tz,
    };
    target
        .validate()
        .map_err(|e| Error::NotVerifiable(format!("transformed parameters {target:?}: {e}")))?;
    if hits_zero(c, step) || hits_zero(z, step) {
        return Err(Error::NotVerifiable(
            "prefactor denominator vanishes".into(),
        ));
    }

    let lhs = phi21_truncated(p, order)?;
    let num = infinite(&prefix_num, step)?;
    let den = infinite(&[c, z], step)?;
    let rhs = with_precision(order, |w| {
        let prefactor = poch_quotient(&num, &den, w)?;
        Ok(&prefactor * &phi21_truncated(&target, w)?)
    })?;
    Ok((lhs, rhs))
}

/// Both sides of `sum (a;q)_n / (q;q)_n z^n = (az;q)_inf / (z;q)_inf`.
pub fn qbinomial_instance(
    a_exp: i64,
    z_exp: i64,
    step: i64,
    order: i64,
) -> Result<(LaurentSeries, LaurentSeries)> {
    if step < 1 || z_exp < 1 {
        return Err(Error::InvalidParameter(format!(
            "q-binomial needs step >= 1 and z exponent >= 1, got step {step}, z {z_exp}"
        )));
    }
    let lhs = BasicSum {
        numer: &[a_exp],
        denom: &[],
        step,
        z_exp,
    }
    .sum(order, 0)?;
    let rhs = poch_quotient(
        &infinite(&[a_exp + z_exp], step)?,
        &infinite(&[z_exp], step)?,
        order,
    )?;
    Ok((lhs, rhs))
}

/// Both sides of the contiguous relation
/// `phi(z) - phi(q z) = z (1-a)(1-b)/(1-c) phi(qa, qb; qc; z)`,
/// where `q` stands for the base `q^step`.
pub fn contiguous_instance(p: &Phi21Params, order: i64) -> Result<(LaurentSeries, LaurentSeries)> {
    p.validate()?;
    let lifted = Phi21Params {
        a_exp: p.a_exp + p.step,
        b_exp: p.b_exp + p.step,
        c_exp: p.c_exp + p.step,
        ..*p
    };
    lifted.validate()?;
    let lhs = phi21_truncated(p, order)? - phi21_truncated(&p.with_z(p.z_exp + p.step), order)?;
    let rhs = with_precision(order, |w| {
        phi21_truncated(&lifted, w)?
            .shift(p.z_exp)
            .mul_one_minus(p.a_exp)
            .mul_one_minus(p.b_exp)
            .div_one_minus(p.c_exp)
    })?;
    Ok((lhs, rhs))
}

/// `sum_{n>=0} ( q^n / (1 - q^(4n+1)) - q^(3n+2) / (1 - q^(4n+3)) )`.
pub fn lambert_theta(order: i64) -> LaurentSeries {
    let mut acc = SeriesAccumulator::new(order);
    // term n has valuation n
    for n in 0..=order.max(-1) {
        let plus = LaurentSeries::one(order - n)
            .div_one_minus(4 * n + 1)
            .expect("positive exponent")
            .shift(n);
        let minus = LaurentSeries::one(order - 3 * n - 2)
            .div_one_minus(4 * n + 3)
            .expect("positive exponent")
            .shift(3 * n + 2);
        acc.add(&plus);
        acc.sub(&minus);
    }
    acc.finish()
}
