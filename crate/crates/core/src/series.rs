//! Truncated formal Laurent series in one variable `q` with exact rational
//! coefficients.
//!
//! A [`LaurentSeries`] stores the coefficients of `q^offset ..= q^order`
//! densely. Everything above `order` is unknown, and no operation ever
//! reports a coefficient there. Results of binary operations never claim
//! more precision than their operands support: for operands known to orders
//! `Na`, `Nb` with valuations `va`, `vb` the product is known to
//! `min(Na, Nb, Na + vb, Nb + va)`, which is `min(Na, Nb)` whenever both
//! valuations are nonnegative.

use std::cmp::{max, min};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact coefficient type.
pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    offset: i64,
    coeffs: Vec<Coeff>,
    order: i64,
}

/// First exponent at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: Coeff,
    pub rhs: Coeff,
}

impl LaurentSeries {
    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            offset: order + 1,
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(Coeff::one(), 0, order)
    }

    /// `c * q^e` truncated at `order`.
    pub fn monomial(c: Coeff, e: i64, order: i64) -> Self {
        if c.is_zero() || e > order {
            return Self::zero(order);
        }
        let mut coeffs = vec![Coeff::zero(); (order - e + 1) as usize];
        coeffs[0] = c;
        LaurentSeries {
            offset: e,
            coeffs,
            order,
        }
    }

    /// Builds a series from coefficients starting at `offset`. Entries past
    /// `order` are dropped; missing entries up to `order` are zero.
    pub fn from_coeffs(offset: i64, mut coeffs: Vec<Coeff>, order: i64) -> Self {
        if offset > order {
            return Self::zero(order);
        }
        coeffs.resize((order - offset + 1) as usize, Coeff::zero());
        LaurentSeries {
            offset,
            coeffs,
            order,
        }
        .canonical()
    }

    pub fn from_integers(offset: i64, coeffs: &[i64], order: i64) -> Self {
        Self::from_coeffs(offset, coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    /// Exact sparse polynomial `sum c * q^e`, truncated at `order`.
    pub fn polynomial(terms: &[(i64, i64)], order: i64) -> Self {
        let Some(lo) = terms.iter().filter(|t| t.1 != 0).map(|t| t.0).min() else {
            return Self::zero(order);
        };
        if lo > order {
            return Self::zero(order);
        }
        let mut coeffs = vec![Coeff::zero(); (order - lo + 1) as usize];
        for &(e, c) in terms {
            if e <= order {
                coeffs[(e - lo) as usize] += int(c);
            }
        }
        Self::from_coeffs(lo, coeffs, order)
    }

    fn canonical(mut self) -> Self {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Self::zero(self.order),
            Some(0) => self,
            Some(k) => {
                self.coeffs.drain(..k);
                self.offset += k as i64;
                self
            }
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Lowest stored exponent; `order + 1` for the zero series.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn get(&self, e: i64) -> Option<&Coeff> {
        if e < self.offset {
            return None;
        }
        self.coeffs.get((e - self.offset) as usize)
    }

    /// Coefficient of `q^e`. Asking above the truncation order is an error.
    pub fn coeff(&self, e: i64) -> Result<Coeff> {
        if e > self.order {
            return Err(Error::BeyondOrder {
                exponent: e,
                order: self.order,
            });
        }
        Ok(self.get(e).cloned().unwrap_or_else(Coeff::zero))
    }

    /// Coefficients of `q^lo ..= q^hi`.
    pub fn coeffs_between(&self, lo: i64, hi: i64) -> Result<Vec<Coeff>> {
        (lo..=hi).map(|e| self.coeff(e)).collect()
    }

    /// Same series with the order lowered to `min(self.order, order)`.
    pub fn truncate(&self, order: i64) -> Self {
        self.clone().into_truncated(order)
    }

    pub fn into_truncated(mut self, order: i64) -> Self {
        if order >= self.order {
            return self;
        }
        if order < self.offset {
            return Self::zero(order);
        }
        self.coeffs.truncate((order - self.offset + 1) as usize);
        self.order = order;
        self
    }

    /// Multiplication by the exact monomial `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        LaurentSeries {
            offset: self.offset + e,
            coeffs: self.coeffs.clone(),
            order: self.order + e,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        LaurentSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            order: self.order,
        }
    }

    /// Multiplicative inverse. With valuation `v` and order `N` the inverse
    /// is known to `N - 2v`, capped at `N`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let v = self.offset;
        let order = min(self.order, self.order - 2 * v);
        let len = order + v + 1;
        if len <= 0 {
            return Ok(Self::zero(order));
        }
        let len = len as usize;
        let u = &self.coeffs;
        let lead_inv = u[0].recip();
        let unit_lead = lead_inv.is_integer() && lead_inv.numer().abs().is_one();
        let mut out: Vec<Coeff> = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for k in 1..len {
            let mut acc = Coeff::zero();
            for j in 1..=min(k, u.len() - 1) {
                if !u[j].is_zero() {
                    acc += &u[j] * &out[k - j];
                }
            }
            let bk = if unit_lead {
                if lead_inv.is_positive() {
                    -acc
                } else {
                    acc
                }
            } else {
                -acc * &lead_inv
            };
            out.push(bk);
        }
        Ok(LaurentSeries {
            offset: -v,
            coeffs: out,
            order,
        }
        .canonical())
    }

    pub fn checked_div(&self, rhs: &LaurentSeries) -> Result<Self> {
        Ok(self * &rhs.invert()?)
    }

    /// Multiplies by the exact factor `1 - q^e`.
    pub fn mul_one_minus(self, e: i64) -> Self {
        if e == 0 {
            return Self::zero(self.order);
        }
        if self.is_zero() {
            return if e > 0 { self } else { self.shift(e) };
        }
        if e < 0 {
            // 1 - q^e = -q^e (1 - q^-e)
            return -self.shift(e).mul_one_minus(-e);
        }
        let mut s = self;
        let e = e as usize;
        for i in (e..s.coeffs.len()).rev() {
            let (lo, hi) = s.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - e];
        }
        s
    }

    /// Divides by the exact factor `1 - q^e`. The result order never
    /// exceeds the operand's.
    pub fn div_one_minus(self, e: i64) -> Result<Self> {
        if e == 0 {
            return Err(Error::DivisionByZero);
        }
        if e < 0 {
            // 1 / (1 - q^e) = -q^-e / (1 - q^-e)
            let order = self.order;
            return Ok((-self.shift(-e).div_one_minus(-e)?).into_truncated(order));
        }
        let mut s = self;
        let e = e as usize;
        for i in e..s.coeffs.len() {
            let (lo, hi) = s.coeffs.split_at_mut(i);
            hi[0] += &lo[i - e];
        }
        Ok(s)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Smallest exponent `<= order` where `a` and `b` differ, if any.
    pub fn first_mismatch(a: &Self, b: &Self, order: i64) -> Result<Option<Mismatch>> {
        let limit = min(a.order, b.order);
        if order > limit {
            return Err(Error::BeyondOrder {
                exponent: order,
                order: limit,
            });
        }
        let lo = min(a.offset, b.offset);
        for e in lo..=order {
            let x = a.get(e);
            let y = b.get(e);
            let differ = match (x, y) {
                (Some(x), Some(y)) => x != y,
                (Some(c), None) | (None, Some(c)) => !c.is_zero(),
                (None, None) => false,
            };
            if differ {
                return Ok(Some(Mismatch {
                    exponent: e,
                    lhs: a.coeff(e)?,
                    rhs: b.coeff(e)?,
                }));
            }
        }
        Ok(None)
    }

    pub fn equal_to_order(a: &Self, b: &Self, order: i64) -> Result<bool> {
        Ok(Self::first_mismatch(a, b, order)?.is_none())
    }

    /// First coefficient `<= order` that is negative.
    pub fn first_negative(&self, order: i64) -> Result<Option<(i64, Coeff)>> {
        if order > self.order {
            return Err(Error::BeyondOrder {
                exponent: order,
                order: self.order,
            });
        }
        Ok(self
            .iter()
            .take_while(|(e, _)| *e <= order)
            .find(|(_, c)| c.is_negative())
            .map(|(e, c)| (e, c.clone())))
    }

    /// `(exponent, coefficient)` pairs over the stored range.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Coeff)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    fn add_scaled(a: &Self, b: &Self, negate: bool) -> Self {
        let order = min(a.order, b.order);
        let lo = min(a.offset, b.offset);
        if lo > order {
            return Self::zero(order);
        }
        let mut coeffs = vec![Coeff::zero(); (order - lo + 1) as usize];
        for (e, c) in a.iter().take_while(|(e, _)| *e <= order) {
            coeffs[(e - lo) as usize] += c;
        }
        for (e, c) in b.iter().take_while(|(e, _)| *e <= order) {
            if negate {
                coeffs[(e - lo) as usize] -= c;
            } else {
                coeffs[(e - lo) as usize] += c;
            }
        }
        Self::from_coeffs(lo, coeffs, order)
    }

    fn mul_impl(a: &Self, b: &Self) -> Self {
        let order = min(
            min(a.order, b.order),
            min(a.order + b.offset, b.order + a.offset),
        );
        if a.is_zero() || b.is_zero() {
            return Self::zero(order);
        }
        let lo = a.offset + b.offset;
        if lo > order {
            return Self::zero(order);
        }
        let len = (order - lo + 1) as usize;
        let mut out = vec![Coeff::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate().take(len) {
            if x.is_zero() {
                continue;
            }
            let room = min(b.coeffs.len(), len - i);
            for (j, y) in b.coeffs[..room].iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        Self::from_coeffs(lo, out, order)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.iter().filter(|(_, c)| !c.is_zero()) {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match (e, show_coeff) {
                (0, _) => {}
                (1, true) => write!(f, "*q")?,
                (1, false) => write!(f, "q")?,
                (_, true) => write!(f, "*q^{e}")?,
                (_, false) => write!(f, "q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(mut self) -> LaurentSeries {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                $body(self, rhs)
            }
        }
        impl $tr<LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                $body(&self, &rhs)
            }
        }
        impl $tr<&LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                $body(&self, rhs)
            }
        }
        impl $tr<LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| LaurentSeries::add_scaled(a, b, false));
forward_binop!(Sub, sub, |a, b| LaurentSeries::add_scaled(a, b, true));
forward_binop!(Mul, mul, LaurentSeries::mul_impl);

/// Dense running sum of many series, cheaper than repeated `+`.
///
/// The accumulated order is the minimum order of everything added.
#[derive(Debug)]
pub struct SeriesAccumulator {
    lo: i64,
    order: i64,
    coeffs: Vec<Coeff>,
}

impl SeriesAccumulator {
    pub fn new(order: i64) -> Self {
        SeriesAccumulator {
            lo: order + 1,
            order,
            coeffs: Vec::new(),
        }
    }

    fn push(&mut self, s: &LaurentSeries, negate: bool) {
        if s.order < self.order {
            self.order = s.order;
            let keep = max(0, self.order - self.lo + 1) as usize;
            self.coeffs.truncate(keep);
        }
        if s.is_zero() || s.offset > self.order {
            return;
        }
        if s.offset < self.lo {
            let grow = (self.lo - s.offset) as usize;
            let mut fresh = vec![Coeff::zero(); grow];
            fresh.append(&mut self.coeffs);
            self.coeffs = fresh;
            self.lo = s.offset;
        }
        let want = (self.order - self.lo + 1) as usize;
        if self.coeffs.len() < want {
            self.coeffs.resize(want, Coeff::zero());
        }
        for (e, c) in s.iter().take_while(|(e, _)| *e <= self.order) {
            let slot = &mut self.coeffs[(e - self.lo) as usize];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
    }

    pub fn add(&mut self, s: &LaurentSeries) {
        self.push(s, false);
    }

    pub fn sub(&mut self, s: &LaurentSeries) {
        self.push(s, true);
    }

    pub fn finish(self) -> LaurentSeries {
        LaurentSeries::from_coeffs(self.lo, self.coeffs, self.order)
    }
}

/// Runs `build` at increasing working orders until the result is known to
/// at least `order`, then truncates to exactly `order`.
pub fn with_precision<F>(order: i64, mut build: F) -> Result<LaurentSeries>
where
    F: FnMut(i64) -> Result<LaurentSeries>,
{
    let mut working = order;
    let mut got = i64::MIN;
    for _ in 0..16 {
        let s = build(working)?;
        if s.order() >= order {
            return Ok(s.into_truncated(order));
        }
        got = s.order();
        working += order - got;
    }
    Err(Error::Precision { wanted: order, got })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)], order: i64) -> LaurentSeries {
        LaurentSeries::polynomial(terms, order)
    }

    #[test]
    fn monomial_examples() {
        let one = LaurentSeries::monomial(int(1), 0, 10);
        assert_eq!(one, LaurentSeries::one(10));
        assert_eq!(one.coeff(0).unwrap(), int(1));
        assert_eq!(one.valuation(), Some(0));

        let m = LaurentSeries::monomial(int(-1), -1, 5);
        assert_eq!(m.offset(), -1);
        assert_eq!(m.coeff(-1).unwrap(), int(-1));
        assert_eq!(m.coeff(0).unwrap(), int(0));

        let z = LaurentSeries::monomial(Coeff::new(3.into(), 2.into()), 7, 5);
        assert!(z.is_zero());
        assert_eq!(z.order(), 5);
        assert_eq!(z.offset(), 6);
        assert!(LaurentSeries::monomial(int(0), 1, 5).is_zero());
    }

    #[test]
    fn add_sub_examples() {
        let a = poly(&[(0, 1), (1, -1)], 10);
        let b = poly(&[(1, 1)], 10);
        assert_eq!(&a + &b, LaurentSeries::one(10));

        let s = poly(&[(-2, 3), (4, 5)], 10);
        assert_eq!(&s + &LaurentSeries::zero(10), s);

        let p = poly(&[(-1, 1)], 10);
        let n = poly(&[(-1, -1)], 10);
        let z = &p + &n;
        assert!(z.is_zero());
        assert_eq!(z.offset(), 11);
        assert_eq!(&p - &p, LaurentSeries::zero(10));
    }

    #[test]
    fn add_takes_min_order() {
        let a = LaurentSeries::one(4);
        let b = poly(&[(6, 1)], 9);
        let s = &a + &b;
        assert_eq!(s.order(), 4);
        assert_eq!(s, LaurentSeries::one(4));
    }

    #[test]
    fn mul_examples() {
        let a = poly(&[(0, 1), (1, -1)], 10);
        let b = poly(&[(0, 1), (1, 1)], 10);
        assert_eq!(&a * &b, poly(&[(0, 1), (2, -1)], 10));

        let p = poly(&[(-1, 1)], 10);
        let q = poly(&[(1, 1)], 10);
        let r = &p * &q;
        assert_eq!(r.coeff(0).unwrap(), int(1));
        // q^-1 known to 10 times q known to 10: product known only to 9
        assert_eq!(r, LaurentSeries::one(9));

        let n = 25;
        let geo = LaurentSeries::from_integers(0, &vec![1; (n + 1) as usize], n);
        assert_eq!(&a.truncate(n) * &geo, LaurentSeries::one(10));
        let a = poly(&[(0, 1), (1, -1)], n);
        assert_eq!(&a * &geo, LaurentSeries::one(n));
    }

    #[test]
    fn invert_examples() {
        let n = 12;
        let inv = poly(&[(0, 1), (1, -1)], n).invert().unwrap();
        assert_eq!(
            inv,
            LaurentSeries::from_integers(0, &vec![1; (n + 1) as usize], n)
        );

        let inv = poly(&[(0, 1), (-1, -1)], n).invert().unwrap();
        assert_eq!(inv.order(), n);
        assert_eq!(inv.coeff(0).unwrap(), int(0));
        for e in 1..=n {
            assert_eq!(inv.coeff(e).unwrap(), int(-1), "exponent {e}");
        }
        assert_eq!(
            LaurentSeries::zero(5).invert().unwrap_err().to_string(),
            "division by zero series"
        );
    }

    #[test]
    fn invert_positive_valuation_loses_order() {
        let q = poly(&[(1, 1), (2, 1)], 10);
        let inv = q.invert().unwrap();
        assert_eq!(inv.offset(), -1);
        assert_eq!(inv.order(), 8);
        assert_eq!((&q * &inv).truncate(8), LaurentSeries::one(8));
    }

    #[test]
    fn coeff_examples() {
        let s = poly(&[(0, 1), (2, -1)], 10);
        assert_eq!(s.coeff(2).unwrap(), int(-1));
        assert_eq!(s.coeff(1).unwrap(), int(0));
        assert_eq!(s.coeff(-3).unwrap(), int(0));
        assert_eq!(
            s.coeff(11),
            Err(Error::BeyondOrder {
                exponent: 11,
                order: 10
            })
        );
    }

    #[test]
    fn equal_to_order_examples() {
        let s = poly(&[(0, 2), (3, 1)], 8);
        assert!(LaurentSeries::equal_to_order(&s, &s, 8).unwrap());
        let one = LaurentSeries::one(10);
        let bumped = poly(&[(0, 1), (5, 1)], 10);
        assert!(LaurentSeries::equal_to_order(&one, &bumped, 4).unwrap());
        let mm = LaurentSeries::first_mismatch(&one, &bumped, 5)
            .unwrap()
            .unwrap();
        assert_eq!(mm.exponent, 5);
        assert_eq!((mm.lhs, mm.rhs), (int(0), int(1)));
        assert!(LaurentSeries::equal_to_order(&one, &bumped, 11).is_err());
    }

    #[test]
    fn one_minus_factors() {
        let s = LaurentSeries::one(10).mul_one_minus(2).mul_one_minus(-1);
        // (1 - q^2)(1 - q^-1) = 1 - q^-1 - q^2 + q; order drops by one
        assert_eq!(s, poly(&[(-1, -1), (0, 1), (1, 1), (2, -1)], 9));
        let back = s.div_one_minus(-1).unwrap().div_one_minus(2).unwrap();
        assert_eq!(back, LaurentSeries::one(9));
        assert!(LaurentSeries::one(3).div_one_minus(0).is_err());
        assert!(LaurentSeries::one(3).mul_one_minus(0).is_zero());
    }

    #[test]
    fn accumulator_matches_addition() {
        let a = poly(&[(-2, 1), (3, 4)], 9);
        let b = poly(&[(0, 7), (9, -1)], 7);
        let mut acc = SeriesAccumulator::new(10);
        acc.add(&a);
        acc.sub(&b);
        assert_eq!(acc.finish(), &a - &b);
    }

    #[test]
    fn with_precision_raises_working_order() {
        let s = with_precision(6, |w| Ok(poly(&[(0, 1)], w).mul_one_minus(-3))).unwrap();
        assert_eq!(s.order(), 6);
        assert_eq!(s, poly(&[(-3, -1), (0, 1)], 6));
    }

    #[test]
    fn display() {
        let s = poly(&[(-1, -1), (0, 2), (1, 1), (3, -3)], 4);
        assert_eq!(s.to_string(), "-q^-1 + 2 + q - 3*q^3 + O(q^5)");
        assert_eq!(LaurentSeries::zero(2).to_string(), "0 + O(q^3)");
    }
}
