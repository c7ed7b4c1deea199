//! q-Pochhammer products `(q^a; q^s)_n` and `(q^a; q^s)_inf` with monomial
//! argument, expanded as truncated Laurent series.
//!
//! Start exponents may be zero or negative. A factor `1 - q^e` with `e < 0`
//! is handled by the series substrate directly.

use crate::error::{Error, Result};
use crate::series::LaurentSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Length {
    Finite(u64),
    Infinite,
}

/// `prod_{j < length} (1 - q^(start_exp + j * step))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PochhammerSpec {
    start_exp: i64,
    step: i64,
    length: Length,
}

impl PochhammerSpec {
    pub fn new(start_exp: i64, step: i64, length: Length) -> Result<Self> {
        if step < 1 {
            return Err(Error::InvalidParameter(format!(
                "Pochhammer step must be >= 1, got {step}"
            )));
        }
        Ok(PochhammerSpec {
            start_exp,
            step,
            length,
        })
    }

    pub fn finite(start_exp: i64, step: i64, n: u64) -> Result<Self> {
        Self::new(start_exp, step, Length::Finite(n))
    }

    pub fn infinite(start_exp: i64, step: i64) -> Result<Self> {
        Self::new(start_exp, step, Length::Infinite)
    }

    pub fn start_exp(&self) -> i64 {
        self.start_exp
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    pub fn length(&self) -> Length {
        self.length
    }

    /// `(a q^(k*step); q^step)` with the same length.
    pub fn shifted(&self, k: u64) -> Self {
        PochhammerSpec {
            start_exp: self.start_exp + k as i64 * self.step,
            ..*self
        }
    }

    pub fn with_length(&self, length: Length) -> Self {
        PochhammerSpec { length, ..*self }
    }

    fn factor_count_below(&self, cutoff: i64) -> u64 {
        // number of j >= 0 with start + j*step <= cutoff
        let n = if cutoff < self.start_exp {
            0
        } else {
            ((cutoff - self.start_exp) / self.step + 1) as u64
        };
        match self.length {
            Length::Finite(len) => n.min(len),
            Length::Infinite => n,
        }
    }

    /// Exponents of the factors with exponent `<= cutoff`, in order.
    pub fn exponents_up_to(&self, cutoff: i64) -> impl Iterator<Item = i64> {
        let (start, step) = (self.start_exp, self.step);
        (0..self.factor_count_below(cutoff)).map(move |j| start + j as i64 * step)
    }

    /// Exponents of all factors with exponent `<= 0`.
    fn nonpositive_exponents(&self) -> impl Iterator<Item = i64> {
        self.exponents_up_to(0)
    }

    pub fn has_zero_factor(&self) -> bool {
        self.nonpositive_exponents().any(|e| e == 0)
    }

    /// Sum of the negative factor exponents (a lower bound on valuation).
    pub fn negative_exponent_sum(&self) -> i64 {
        self.nonpositive_exponents().filter(|&e| e < 0).sum()
    }
}

pub fn poch_finite(spec: &PochhammerSpec, order: i64) -> Result<LaurentSeries> {
    if spec.length == Length::Infinite {
        return Err(Error::InvalidParameter(
            "poch_finite needs a finite length".into(),
        ));
    }
    poch_quotient(&[*spec], &[], order)
}

pub fn poch_infinite(spec: &PochhammerSpec, order: i64) -> Result<LaurentSeries> {
    if spec.length != Length::Infinite {
        return Err(Error::InvalidParameter(
            "poch_infinite needs an infinite length".into(),
        ));
    }
    poch_quotient(&[*spec], &[], order)
}

/// Product of the numerator symbols divided by the product of the
/// denominator symbols, exact up to `order`.
pub fn poch_quotient(
    numerators: &[PochhammerSpec],
    denominators: &[PochhammerSpec],
    order: i64,
) -> Result<LaurentSeries> {
    quotient_with_extra_factors(numerators, denominators, order, 0)
}

/// Factors with exponent above the working order are skipped; `extra`
/// raises that cutoff without changing the result.
pub(crate) fn quotient_with_extra_factors(
    numerators: &[PochhammerSpec],
    denominators: &[PochhammerSpec],
    order: i64,
    extra: i64,
) -> Result<LaurentSeries> {
    if denominators.iter().any(|d| d.has_zero_factor()) {
        return Err(Error::DivisionByZero);
    }
    if numerators.iter().any(|n| n.has_zero_factor()) {
        return Ok(LaurentSeries::zero(order));
    }
    // each negative numerator exponent costs that much precision
    let loss: i64 = numerators.iter().map(|n| -n.negative_exponent_sum()).sum();
    let working = order + loss;
    let cutoff = working + extra;

    let mut s = LaurentSeries::one(working);
    for spec in numerators {
        for e in spec.exponents_up_to(cutoff).filter(|&e| e > 0) {
            s = s.mul_one_minus(e);
        }
    }
    for spec in denominators {
        for e in spec.exponents_up_to(cutoff).filter(|&e| e > 0) {
            s = s.div_one_minus(e)?;
        }
    }
    for spec in denominators {
        for e in spec.nonpositive_exponents() {
            s = s.div_one_minus(e)?;
        }
    }
    for spec in numerators {
        for e in spec.nonpositive_exponents() {
            s = s.mul_one_minus(e);
        }
    }
    if s.order() < order {
        return Err(Error::Precision {
            wanted: order,
            got: s.order(),
        });
    }
    Ok(s.into_truncated(order))
}
