//! The weighted-partition double series F1, F2, G and the one-parameter
//! product families A, A', B, B' that their closed forms are built from.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qproducts::{poch_quotient, PochhammerSpec};
use crate::series::{LaurentSeries, SeriesAccumulator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesId {
    F1,
    F2,
    G,
}

/// Shape of `sum_{k,n} (q^(2n+2); q^2)_k / (q^(2n+den); q^2)_k q^(2k + slope n + shift)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleShape {
    pub den: i64,
    pub slope: i64,
    pub shift: i64,
}

impl SeriesId {
    pub const ALL: [SeriesId; 3] = [SeriesId::F1, SeriesId::F2, SeriesId::G];

    pub fn shape(self) -> DoubleShape {
        let (den, slope, shift) = match self {
            SeriesId::F1 => (3, 3, 1),
            SeriesId::F2 => (5, 1, 2),
            SeriesId::G => (1, 5, 2),
        };
        DoubleShape { den, slope, shift }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeriesId::F1 => "f1",
            SeriesId::F2 => "f2",
            SeriesId::G => "g",
        }
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(SeriesId::F1),
            "f2" => Ok(SeriesId::F2),
            "g" => Ok(SeriesId::G),
            other => Err(Error::InvalidParameter(format!(
                "unknown double series `{other}`"
            ))),
        }
    }
}

/// Truncated expansion of a double series.
///
/// For fixed `n` the inner ratio is updated one factor pair at a time, so
/// each `(k, n)` term costs a single multiply/divide by `1 - q^e`. Every
/// exponent is positive, so term `(k, n)` has valuation exactly
/// `2k + slope n + shift` and the enumeration below that bound is complete.
pub fn double_series(id: SeriesId, order: i64) -> LaurentSeries {
    double_sum(id.shape(), order)
}

pub(crate) fn double_sum(shape: DoubleShape, order: i64) -> LaurentSeries {
    let DoubleShape { den, slope, shift } = shape;
    let mut acc = SeriesAccumulator::new(order);
    let mut n = 0;
    while slope * n + shift <= order {
        let base = slope * n + shift;
        let mut ratio = LaurentSeries::one(order - base);
        let mut k = 0;
        loop {
            let v = 2 * k + base;
            if v > order {
                break;
            }
            acc.add(&ratio.shift(v));
            ratio = ratio
                .into_truncated(order - v - 2)
                .mul_one_minus(2 * n + 2 + 2 * k)
                .div_one_minus(2 * n + den + 2 * k)
                .expect("positive exponent");
            k += 1;
        }
        n += 1;
    }
    acc.finish()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    APrime,
    B,
    BPrime,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::APrime, Family::B, Family::BPrime];

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::APrime => "aprime",
            Family::B => "b",
            Family::BPrime => "bprime",
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s
            .to_ascii_lowercase()
            .replace(['\'', '′', '-', '_'], "p")
            .as_str()
        {
            "a" => Ok(Family::A),
            "ap" | "aprime" | "apprime" => Ok(Family::APrime),
            "b" => Ok(Family::B),
            "bp" | "bprime" | "bpprime" => Ok(Family::BPrime),
            other => Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyId {
    family: Family,
    m: u32,
}

impl FamilyId {
    pub fn new(family: Family, m: u32) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidParameter(
                "family parameter m must be >= 1".into(),
            ));
        }
        Ok(FamilyId { family, m })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `(power of q in front, numerator starts, denominator starts)` for term n;
    /// every product has base `q^2` and infinite length.
    fn term_shape(&self, n: i64) -> (i64, [i64; 2], [i64; 2]) {
        let m = self.m as i64;
        match self.family {
            Family::A => (m * n, [2 * n + 2, 2 * n + 4], [2 * n - 1, 2 * n + 1]),
            Family::APrime => (m * (n + 1), [2 * n + 2, 2 * n + 6], [2 * n + 1, 2 * n + 3]),
            Family::B => (m * n, [2 * n + 2, 2 * n + 4], [2 * n - 3, 2 * n + 3]),
            Family::BPrime => (m * (n + 1), [2 * n + 2, 2 * n + 6], [2 * n - 1, 2 * n + 5]),
        }
    }

    fn term(&self, n: i64, order: i64) -> Result<LaurentSeries> {
        let (shift, num, den) = self.term_shape(n);
        let num = [
            PochhammerSpec::infinite(num[0], 2)?,
            PochhammerSpec::infinite(num[1], 2)?,
        ];
        let den = [
            PochhammerSpec::infinite(den[0], 2)?,
            PochhammerSpec::infinite(den[1], 2)?,
        ];
        Ok(poch_quotient(&num, &den, order - shift)?.shift(shift))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[m={}]", self.family.name(), self.m)
    }
}

/// Sum over `n` of the family's infinite-product quotient.
///
/// Numerator exponents are all positive and any negative denominator
/// exponent inverts to a factor of positive valuation, so term `n` has
/// valuation at least its leading power `m n` (or `m (n+1)`).
pub fn family_series(id: FamilyId, order: i64) -> Result<LaurentSeries> {
    let mut acc = SeriesAccumulator::new(order);
    let mut n = 0;
    while id.term_shape(n).0 <= order {
        acc.add(&id.term(n, order)?);
        n += 1;
    }
    if !id.term(n, order)?.is_zero() {
        return Err(Error::CutoffViolated {
            context: "family series",
            index: n,
            order,
        });
    }
    Ok(acc.finish())
}

/// `sum_{n>=0} q^n (q^(2n+2); q^2)_inf / (q^(2n+3); q^2)_inf`
pub fn tail_quotient_sum(order: i64) -> Result<LaurentSeries> {
    let mut acc = SeriesAccumulator::new(order);
    for n in 0..=order.max(-1) {
        let num = [PochhammerSpec::infinite(2 * n + 2, 2)?];
        let den = [PochhammerSpec::infinite(2 * n + 3, 2)?];
        acc.add(&poch_quotient(&num, &den, order - n)?.shift(n));
    }
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    fn ints(s: &LaurentSeries, hi: i64) -> Vec<i64> {
        s.coeffs_between(0, hi)
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c.to_integer()).unwrap())
            .collect()
    }

    /// Every (k, n) term expanded on its own with plain integer vectors.
    fn brute_double(id: SeriesId, order: i64) -> Vec<i64> {
        let DoubleShape { den, slope, shift } = id.shape();
        let len = order as usize + 1;
        let mut total = vec![0i64; len];
        for n in 0..=order {
            for k in 0..=order {
                let v = 2 * k + slope * n + shift;
                if v > order {
                    continue;
                }
                let mut t = vec![0i64; len];
                t[v as usize] = 1;
                for j in 0..k {
                    let e = (2 * n + 2 + 2 * j) as usize;
                    for i in (e..len).rev() {
                        t[i] -= t[i - e];
                    }
                    let d = (2 * n + den + 2 * j) as usize;
                    for i in d..len {
                        t[i] += t[i - d];
                    }
                }
                for i in 0..len {
                    total[i] += t[i];
                }
            }
        }
        total
    }

    #[test]
    fn double_series_examples() {
        assert_eq!(
            ints(&double_series(SeriesId::F1, 4), 4),
            vec![0, 1, 0, 1, 1]
        );
        assert_eq!(
            ints(&double_series(SeriesId::F2, 4), 4),
            vec![0, 0, 1, 1, 2]
        );
        assert_eq!(
            ints(&double_series(SeriesId::G, 6), 6),
            vec![0, 0, 1, 0, 1, 1, 1]
        );
    }

    #[test]
    fn double_series_matches_termwise_expansion() {
        for id in SeriesId::ALL {
            assert_eq!(
                ints(&double_series(id, 50), 50),
                brute_double(id, 50),
                "{id}"
            );
        }
    }

    #[test]
    fn aprime_has_no_constant_term() {
        let s = family_series(FamilyId::new(Family::APrime, 1).unwrap(), 0).unwrap();
        assert_eq!(s.coeff(0).unwrap(), int(0));
        assert_eq!(s.order(), 0);
    }

    #[test]
    fn family_closed_forms_low_order() {
        // A, m = 2: -q(1+q^2) / ((1-q)^2 (1-q^3))
        let a = family_series(FamilyId::new(Family::A, 2).unwrap(), 30).unwrap();
        let rhs = LaurentSeries::polynomial(&[(1, -1), (3, -1)], 30)
            .div_one_minus(1)
            .and_then(|s| s.div_one_minus(1))
            .and_then(|s| s.div_one_minus(3))
            .unwrap();
        assert_eq!(a, rhs);
        // B, m = 2: -q^3(1-q^3-q^4-q^5) / ((1-q^3)^2 (1-q^5))
        let b = family_series(FamilyId::new(Family::B, 2).unwrap(), 30).unwrap();
        let rhs = LaurentSeries::polynomial(&[(3, -1), (6, 1), (7, 1), (8, 1)], 30)
            .div_one_minus(3)
            .and_then(|s| s.div_one_minus(3))
            .and_then(|s| s.div_one_minus(5))
            .unwrap();
        assert_eq!(b, rhs);
    }

    #[test]
    fn family_requires_positive_m() {
        assert!(FamilyId::new(Family::B, 0).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("F1".parse::<SeriesId>().unwrap(), SeriesId::F1);
        assert!("h".parse::<SeriesId>().is_err());
        assert_eq!("A'".parse::<Family>().unwrap(), Family::APrime);
        assert_eq!("bprime".parse::<Family>().unwrap(), Family::BPrime);
        assert_eq!("b′".parse::<Family>().unwrap(), Family::BPrime);
    }
}
