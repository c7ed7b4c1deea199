//! Right-hand sides: rational functions of `q`, the shared theta quotient,
//! and single sums of finite Pochhammer quotients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::doubleseries::{double_series, SeriesId};
use crate::error::{Error, Result};
use crate::qproducts::{poch_quotient, PochhammerSpec};
use crate::series::{with_precision, Coeff, LaurentSeries, SeriesAccumulator};

/// Dense integer polynomial in `q` with nonnegative exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut c = vec![BigInt::zero(); deg + 1];
        for &(e, v) in terms {
            c[e] += v;
        }
        IntPoly(c)
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    /// `q^e`
    pub fn q_pow(e: usize) -> Self {
        Self::from_terms(&[(e, 1)])
    }

    /// `1 - q^e`
    pub fn one_minus(e: usize) -> Self {
        Self::from_terms(&[(0, 1), (e, -1)])
    }

    /// `1 + q^e`
    pub fn one_plus(e: usize) -> Self {
        Self::from_terms(&[(0, 1), (e, 1)])
    }

    pub fn times(&self, other: &IntPoly) -> IntPoly {
        let mut c = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            for (j, y) in other.0.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        IntPoly(c)
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| acc.times(self))
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn to_series(&self, order: i64) -> LaurentSeries {
        let coeffs = self
            .0
            .iter()
            .map(|c| Coeff::from_integer(c.clone()))
            .collect();
        LaurentSeries::from_coeffs(0, coeffs, order)
    }
}

/// `num / den`, expanded by series inversion of `den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: IntPoly,
    pub den: IntPoly,
}

impl RationalFunction {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        RationalFunction { num, den }
    }

    pub fn expand(&self, order: i64) -> Result<LaurentSeries> {
        with_precision(order, |w| {
            self.num.to_series(w).checked_div(&self.den.to_series(w))
        })
    }
}

fn prod(factors: &[IntPoly]) -> IntPoly {
    factors.iter().fold(IntPoly::one(), |acc, f| acc.times(f))
}

fn rf(num: IntPoly, den: &[IntPoly]) -> RationalFunction {
    RationalFunction::new(num, prod(den))
}

use IntPoly as P;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedFormId {
    ThmF1,
    ThmF2,
    ThmG,
    A2,
    A2m(u32),
    APrime1(u32),
    APrime2(u32),
    B2,
    B2m(u32),
    BPrime(u32),
    HelpId1,
    Help2Double1,
    Theta,
    BoundF1,
    BoundF2,
    BoundG,
}

impl ClosedFormId {
    pub const TAGS: [&'static str; 16] = [
        "thm-f1",
        "thm-f2",
        "thm-g",
        "a2",
        "a2m",
        "aprime-1",
        "aprime-2",
        "b2",
        "b2m",
        "bprime",
        "help-id-1",
        "help-2-double-1",
        "theta",
        "bound-f1",
        "bound-f2",
        "bound-g",
    ];

    pub fn tag(&self) -> &'static str {
        use ClosedFormId::*;
        match self {
            ThmF1 => "thm-f1",
            ThmF2 => "thm-f2",
            ThmG => "thm-g",
            A2 => "a2",
            A2m(_) => "a2m",
            APrime1(_) => "aprime-1",
            APrime2(_) => "aprime-2",
            B2 => "b2",
            B2m(_) => "b2m",
            BPrime(_) => "bprime",
            HelpId1 => "help-id-1",
            Help2Double1 => "help-2-double-1",
            Theta => "theta",
            BoundF1 => "bound-f1",
            BoundF2 => "bound-f2",
            BoundG => "bound-g",
        }
    }

    pub fn m(&self) -> Option<u32> {
        use ClosedFormId::*;
        match *self {
            A2m(m) | APrime1(m) | APrime2(m) | B2m(m) | BPrime(m) => Some(m),
            _ => None,
        }
    }

    /// Builds an id from a tag and optional `m`, checking that `m` is given
    /// exactly for the parameterized forms.
    pub fn parse(tag: &str, m: Option<u32>) -> Result<Self> {
        use ClosedFormId::*;
        let norm = tag.to_ascii_lowercase().replace('_', "-");
        let id = match (norm.as_str(), m) {
            ("thm-f1", None) => ThmF1,
            ("thm-f2", None) => ThmF2,
            ("thm-g", None) => ThmG,
            ("a2", None) => A2,
            ("a2m", Some(m)) => A2m(m),
            ("aprime-1", Some(m)) => APrime1(m),
            ("aprime-2", Some(m)) => APrime2(m),
            ("b2", None) => B2,
            ("b2m", Some(m)) => B2m(m),
            ("bprime", Some(m)) => BPrime(m),
            ("help-id-1", None) => HelpId1,
            ("help-2-double-1", None) => Help2Double1,
            ("theta", None) => Theta,
            ("bound-f1", None) => BoundF1,
            ("bound-f2", None) => BoundF2,
            ("bound-g", None) => BoundG,
            (t, _) if Self::TAGS.contains(&t) => {
                return Err(Error::InvalidParameter(if m.is_some() {
                    format!("closed form `{t}` takes no m")
                } else {
                    format!("closed form `{t}` needs m")
                }))
            }
            (t, _) => {
                return Err(Error::InvalidParameter(format!(
                    "unknown closed form `{t}`"
                )))
            }
        };
        id.validate()?;
        Ok(id)
    }

    pub fn validate(&self) -> Result<()> {
        use ClosedFormId::*;
        let min = match self {
            A2m(_) | B2m(_) => 2,
            APrime1(_) | APrime2(_) | BPrime(_) => 1,
            _ => return Ok(()),
        };
        let m = self.m().unwrap_or(0);
        if m < min {
            return Err(Error::InvalidParameter(format!(
                "closed form `{}` needs m >= {min}, got {m}",
                self.tag()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ClosedFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m() {
            Some(m) => write!(f, "{}[m={m}]", self.tag()),
            None => f.write_str(self.tag()),
        }
    }
}

impl FromStr for ClosedFormId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

/// `(q^2; q^2)_inf^2 / (q; q^2)_inf^2`
pub fn theta(order: i64) -> Result<LaurentSeries> {
    let even = PochhammerSpec::infinite(2, 2)?;
    let odd = PochhammerSpec::infinite(1, 2)?;
    poch_quotient(&[even, even], &[odd, odd], order)
}

/// `sum_n q^(slope n + shift) (q^(2n+num_start); q^2)_num_len / (q^(2n+den_start); q^2)_den_len`
#[derive(Clone, Copy, Debug)]
struct QuotientSum {
    slope: i64,
    shift: i64,
    num_start: i64,
    num_len: u64,
    den_start: i64,
    den_len: u64,
}

impl QuotientSum {
    fn term(&self, n: i64, order: i64) -> Result<LaurentSeries> {
        let lead = self.slope * n + self.shift;
        let num = PochhammerSpec::finite(2 * n + self.num_start, 2, self.num_len)?;
        let den = PochhammerSpec::finite(2 * n + self.den_start, 2, self.den_len)?;
        Ok(poch_quotient(&[num], &[den], order - lead)?.shift(lead))
    }

    fn expand(&self, order: i64) -> Result<LaurentSeries> {
        // all exponents positive: term n has valuation exactly slope n + shift
        let mut acc = SeriesAccumulator::new(order);
        let mut n = 0;
        while self.slope * n + self.shift <= order {
            acc.add(&self.term(n, order)?);
            n += 1;
        }
        if !self.term(n, order)?.is_zero() {
            return Err(Error::CutoffViolated {
                context: "closed-form sum",
                index: n,
                order,
            });
        }
        Ok(acc.finish())
    }
}

fn times(r: &RationalFunction, s: &LaurentSeries, order: i64) -> Result<LaurentSeries> {
    Ok(&r.expand(order)? * s)
}

pub fn closed_form(id: ClosedFormId, order: i64) -> Result<LaurentSeries> {
    use ClosedFormId::*;
    id.validate()?;
    let one_m = |e| P::one_minus(e);
    match id {
        ThmF1 => {
            let front = rf(P::one(), &[one_m(2)]);
            let tail = rf(P::one_plus(2), &[one_m(1), one_m(3)]);
            Ok(times(&front, &theta(order)?, order)? - tail.expand(order)?)
        }
        ThmF2 => {
            let front = rf(P::q_pow(1).times(&one_m(3)), &[one_m(1), one_m(2)]);
            let tail = rf(P::q_pow(1).times(&P::one_plus(2)), &[one_m(1).pow(2)]);
            Ok(times(&front, &theta(order)?, order)? - tail.expand(order)?)
        }
        ThmG => {
            let front = rf(P::q_pow(3), &[P::one_plus(1), one_m(3)]);
            let tail = rf(
                prod(&[
                    P::q_pow(2),
                    one_m(1),
                    P::from_terms(&[(0, -1), (3, 1), (4, 1), (5, 1)]),
                ]),
                &[one_m(3).pow(2), one_m(5)],
            );
            Ok(times(&front, &theta(order)?, order)? - tail.expand(order)?)
        }
        A2 => rf(
            P::from_terms(&[(1, -1), (3, -1)]),
            &[one_m(1).pow(2), one_m(3)],
        )
        .expand(order),
        A2m(m) => {
            let sum = QuotientSum {
                slope: 1,
                shift: 1,
                num_start: 2,
                num_len: m as u64 - 1,
                den_start: 3,
                den_len: m as u64 - 2,
            };
            times(
                &rf(P::one().neg(), &[one_m(1).pow(2)]),
                &sum.expand(order)?,
                order,
            )
        }
        APrime1(m) => {
            let sum = QuotientSum {
                slope: 1,
                shift: 2 * m as i64,
                num_start: 2,
                num_len: m as u64 - 1,
                den_start: 5,
                den_len: m as u64 - 1,
            };
            times(&rf(P::one(), &[one_m(3)]), &sum.expand(order)?, order)
        }
        APrime2(m) => {
            let sum = QuotientSum {
                slope: 3,
                shift: 2 * m as i64,
                num_start: 2,
                num_len: m as u64 - 1,
                den_start: 3,
                den_len: m as u64 - 1,
            };
            times(&rf(P::one(), &[one_m(1)]), &sum.expand(order)?, order)
        }
        B2 => rf(
            P::from_terms(&[(3, -1), (6, 1), (7, 1), (8, 1)]),
            &[one_m(3).pow(2), one_m(5)],
        )
        .expand(order),
        B2m(m) => {
            let sum = QuotientSum {
                slope: 3,
                shift: 4,
                num_start: 2,
                num_len: m as u64 - 1,
                den_start: 1,
                den_len: m as u64 - 2,
            };
            times(
                &rf(P::one(), &[one_m(1), one_m(3)]),
                &sum.expand(order)?,
                order,
            )
        }
        BPrime(m) => {
            let sum = QuotientSum {
                slope: 5,
                shift: 2 * m as i64 + 1,
                num_start: 2,
                num_len: m as u64 - 1,
                den_start: 1,
                den_len: m as u64 - 1,
            };
            times(&rf(P::one().neg(), &[one_m(1)]), &sum.expand(order)?, order)
        }
        HelpId1 => {
            // the inner double sum is q * F1
            let first = rf(
                P::from_terms(&[(1, -1), (3, -1)]),
                &[one_m(1).pow(2), one_m(3)],
            );
            let inner = double_series(SeriesId::F1, order - 1).shift(1);
            Ok(first.expand(order)? - times(&rf(P::one(), &[one_m(1)]), &inner, order)?)
        }
        Help2Double1 => times(&rf(one_m(1), &[one_m(2)]), &theta(order)?, order),
        Theta => theta(order),
        BoundF1 => rf(P::from_terms(&[(1, 1), (3, 1)]), &[one_m(3)]).expand(order),
        BoundF2 => {
            let head = P::from_terms(&[(1, 1), (2, 1), (3, 1)]).to_series(order);
            let tail = rf(P::from_terms(&[(5, 1), (6, 1)]), &[one_m(3)]);
            Ok(head + tail.expand(order)?)
        }
        BoundG => {
            let head = rf(P::q_pow(2), &[one_m(5)]);
            let tail = rf(
                P::q_pow(5).times(&one_m(6)),
                &[one_m(3), one_m(5), one_m(7)],
            );
            Ok(head.expand(order)? + tail.expand(order)?)
        }
    }
}

/// Left-hand side of the limit identity paired with [`ClosedFormId::HelpId1`]:
/// `-q / (1-q)^2 * sum_n q^n (q^(2n+2); q^2)_inf / (q^(2n+3); q^2)_inf`.
pub fn help_id_1_lhs(order: i64) -> Result<LaurentSeries> {
    let sum = crate::doubleseries::tail_quotient_sum(order)?;
    times(
        &rf(P::q_pow(1).neg(), &[P::one_minus(1).pow(2)]),
        &sum,
        order,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;

    fn ints(s: &LaurentSeries, lo: i64, hi: i64) -> Vec<i64> {
        s.coeffs_between(lo, hi)
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c.to_integer()).unwrap())
            .collect()
    }

    #[test]
    fn theorem_f1_low_order() {
        let s = closed_form(ClosedFormId::ThmF1, 4).unwrap();
        assert_eq!(ints(&s, 0, 4), vec![0, 1, 0, 1, 1]);
    }

    #[test]
    fn theta_low_order() {
        let s = closed_form(ClosedFormId::Theta, 4).unwrap();
        assert_eq!(ints(&s, 0, 4), vec![1, 2, 1, 2, 2]);
    }

    #[test]
    fn bound_f1_geometric() {
        // (q + q^3)(1 + q^3 + q^6 + ...)
        let s = closed_form(ClosedFormId::BoundF1, 6).unwrap();
        assert_eq!(ints(&s, 1, 6), vec![1, 0, 1, 1, 0, 1]);
    }

    #[test]
    fn a2m_leading_term() {
        let s = closed_form(ClosedFormId::A2m(2), 2).unwrap();
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.coeff(1).unwrap(), int(-1));
    }

    #[test]
    fn rational_function_expansion() {
        let r = RationalFunction::new(P::one(), P::one_minus(1).pow(2));
        let s = r.expand(5).unwrap();
        assert_eq!(ints(&s, 0, 5), vec![1, 2, 3, 4, 5, 6]);
        let r = RationalFunction::new(P::one(), P::from_terms(&[(1, 1)]));
        assert!(r.expand(5).is_ok());
        let r = RationalFunction::new(P::one(), P::from_terms(&[(0, 0)]));
        assert_eq!(r.expand(5).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(
            ClosedFormId::parse("THM_F1", None).unwrap(),
            ClosedFormId::ThmF1
        );
        assert_eq!(
            ClosedFormId::parse("a2m", Some(3)).unwrap(),
            ClosedFormId::A2m(3)
        );
        assert!(ClosedFormId::parse("a2m", Some(1)).is_err());
        assert!(ClosedFormId::parse("a2m", None).is_err());
        assert!(ClosedFormId::parse("theta", Some(2)).is_err());
        assert!(ClosedFormId::parse("nope", None).is_err());
        assert!(closed_form(ClosedFormId::BPrime(0), 5).is_err());
        for tag in ClosedFormId::TAGS {
            let m = ["a2m", "aprime-1", "aprime-2", "b2m", "bprime"]
                .contains(&tag)
                .then_some(2);
            assert_eq!(ClosedFormId::parse(tag, m).unwrap().tag(), tag);
        }
    }

    #[test]
    fn all_forms_integral() {
        for tag in ClosedFormId::TAGS {
            let m = ["a2m", "aprime-1", "aprime-2", "b2m", "bprime"]
                .contains(&tag)
                .then_some(3);
            let s = closed_form(ClosedFormId::parse(tag, m).unwrap(), 40).unwrap();
            assert!(s.is_integral(), "{tag}");
            assert_eq!(s.order(), 40);
        }
    }
}
