//! Integer Laurent polynomials in one variable with exact coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Σ coeffs[i] · v^(low + i)`. Trailing and leading zeros are trimmed so
/// that equal polynomials have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        LaurentPoly {
            low: e,
            coeffs: vec![c.into()],
        }
        .trimmed()
    }

    /// Build from `(coefficient, exponent)` pairs; repeated exponents add.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, i64)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (c, e) in terms {
            p = p + LaurentPoly::monomial(c, e);
        }
        p
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            return LaurentPoly::zero();
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Multiply by `v^k`.
    pub fn shift(mut self, k: i64) -> Self {
        if !self.is_zero() {
            self.low += k;
        }
        self
    }

    /// `v ↦ v^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0);
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (c.clone(), e * k)))
    }

    /// `v ↦ v^(1/k)`, defined when every exponent is divisible by `k`.
    pub fn root_substitute(&self, k: i64) -> Option<Self> {
        if self.terms().any(|(e, _)| e % k != 0) {
            return None;
        }
        Some(LaurentPoly::from_terms(
            self.terms().map(|(e, c)| (c.clone(), e / k)),
        ))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division. Returns `None` if `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &LaurentPoly) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let lead = rhs.coeffs.last().unwrap();
        let rtop = rhs.max_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let top = rem.max_exp().unwrap();
            if top - rem.low < rhs.coeffs.len() as i64 - 1 {
                return None;
            }
            let c = rem.coeffs.last().unwrap();
            if !(c % lead).is_zero() {
                return None;
            }
            let q = LaurentPoly::monomial(c / lead, top - rtop);
            rem = rem - &q * rhs;
            quot = quot + q;
        }
        Some(quot)
    }

    /// Multiply by `-v^2 - v^-2`, the loop value of the bracket.
    pub fn times_loop(&self) -> Self {
        -(self.clone().shift(2) + self.clone().shift(-2))
    }

    /// Text form in variable `var`, e.g. `-1*t^-4 + 1*t^-3 + 1*t^-1`.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms()
            .map(|(e, c)| format!("{c}*{var}^{e}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parse the text form written by [`LaurentPoly::to_text`] in any one
    /// variable name. Bare constants and `c*v` are also accepted.
    pub fn parse_text(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse {
            line: 0,
            msg: format!("bad polynomial `{s}`: {m}"),
        };
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut p = LaurentPoly::zero();
        for term in s.split(" + ") {
            let term = term.trim();
            let (c, e) = match term.split_once('*') {
                None => (term, 0i64),
                Some((c, v)) => {
                    let e = match v.split_once('^') {
                        None => 1,
                        Some((_, e)) => e.parse().map_err(|_| bad("exponent"))?,
                    };
                    (c, e)
                }
            };
            let c: BigInt = c.parse().map_err(|_| bad("coefficient"))?;
            p = p + LaurentPoly::monomial(c, e);
        }
        Ok(p)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("v"))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("t"))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LaurentPoly::parse_text(s)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (src, off) in [(self, self.low - low), (rhs, rhs.low - low)] {
            for (i, c) in src.coeffs.iter().enumerate() {
                coeffs[off as usize + i] += c;
            }
        }
        LaurentPoly { low, coeffs }.trimmed()
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly {
            low: self.low + rhs.low,
            coeffs,
        }
        .trimmed()
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl LaurentPoly {
    /// True if the polynomial is a single monomial `±v^e`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-6i64..6, proptest::collection::vec(-20i64..20, 0..6)).prop_map(|(low, cs)| {
            LaurentPoly::from_terms(cs.into_iter().enumerate().map(|(i, c)| (c, low + i as i64)))
        })
    }

    #[test]
    fn text_round_trip() {
        let p = LaurentPoly::from_terms([(-1, -4), (1, -3), (1, -1)]);
        assert_eq!(p.to_text("t"), "-1*t^-4 + 1*t^-3 + 1*t^-1");
        assert_eq!(p.to_text("t").parse::<LaurentPoly>().unwrap(), p);
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert_eq!(
            "3".parse::<LaurentPoly>().unwrap(),
            LaurentPoly::monomial(3, 0)
        );
    }

    #[test]
    fn loop_value_divides() {
        let d = LaurentPoly::from_terms([(-1, 2), (-1, -2)]);
        let p = LaurentPoly::from_terms([(3, 5), (-2, 0), (7, -3)]);
        assert_eq!((&p * &d).div_exact(&d), Some(p.clone()));
        assert_eq!(p.times_loop(), &p * &d);
        assert_eq!(LaurentPoly::one().div_exact(&d), None);
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((a.clone() - a.clone()).is_zero());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }

        #[test]
        fn parse_inverts_text(a in arb_poly()) {
            prop_assert_eq!(a.to_text("A").parse::<LaurentPoly>().unwrap(), a);
        }
    }
}
