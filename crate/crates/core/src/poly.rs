//! Sparse exact Laurent polynomials in `v = q^{1/2}` over the integers.
//!
//! Exponents are in units of `v`, so an integer power `q^k` is stored as
//! `v^{2k}` and half-integer powers of `q` occupy the odd `v`-exponents.
//! Coefficients are arbitrary-precision integers and zero coefficients are
//! never stored, so equality of the canonical form is exact equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact half-integer, stored as twice its value. Used for q-degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(value: i64) -> Self {
        HalfInt(2 * value)
    }

    /// Twice the value (always an integer).
    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Sparse Laurent polynomial in `v = q^{1/2}` with `BigInt` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    // exponent (in v) -> nonzero coefficient
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// `c * v^e`; the zero polynomial if `c` is zero.
    pub fn monomial(exponent: i64, coefficient: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        LaurentPoly { terms }
    }

    pub fn from_int(value: i64) -> Self {
        Self::monomial(0, BigInt::from(value))
    }

    /// `q^k` as a monomial, i.e. `v^{2k}`.
    pub fn q_power(k: i64) -> Self {
        Self::monomial(2 * k, BigInt::one())
    }

    /// The loop value delta = -q - q^{-1}.
    pub fn delta() -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(-2, BigInt::from(-1));
        p.add_term(2, BigInt::from(-1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when the polynomial is a single term `±v^k`.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of `q^k`, i.e. of `v^{2k}`.
    pub fn coeff_q(&self, k: i64) -> BigInt {
        self.coeff(2 * k)
    }

    pub fn min_v_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_v_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Minimum degree in q-units as an exact half-integer.
    pub fn min_q_degree(&self) -> Result<HalfInt> {
        self.min_v_degree()
            .map(HalfInt::from_twice)
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    /// True when only integer q-powers (even v-exponents) occur.
    pub fn has_only_integer_q_powers(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn shift(&self, exponent: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exponent, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Substitute `v -> v^{-1}` (the mirror involution `q <-> q^{-1}`).
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Greatest common divisor of all coefficients (positive), zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Leading (highest-exponent) coefficient, zero if empty.
    pub fn leading_coeff(&self) -> BigInt {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Exact division; returns None when the divisor does not divide self.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Work with v-shifted ordinary polynomials.
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let div_deg = divisor.max_v_degree().unwrap();
        let div_lead = divisor.leading_coeff();
        while !rem.is_zero() {
            let rem_deg = rem.max_v_degree().unwrap();
            if rem_deg - rem.min_v_degree().unwrap() < div_deg - divisor.min_v_degree().unwrap() {
                return None;
            }
            let lead = rem.leading_coeff();
            let (q, r) = lead.div_rem(&div_lead);
            if !r.is_zero() {
                return None;
            }
            let shift = rem_deg - div_deg;
            let term = LaurentPoly::monomial(shift, q);
            rem -= &(&term * divisor);
            quot += &term;
            if let Some(new_deg) = rem.max_v_degree() {
                if new_deg >= rem_deg {
                    return None;
                }
            }
        }
        Some(quot)
    }

    /// Polynomial GCD over Z (primitive pseudo-remainder sequence), returned
    /// with positive leading coefficient and minimum exponent zero.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        fn normalize_poly(p: &LaurentPoly) -> LaurentPoly {
            // shift to min exponent 0 and divide by content
            if p.is_zero() {
                return LaurentPoly::zero();
            }
            let shifted = p.shift(-p.min_v_degree().unwrap());
            let c = shifted.content();
            shifted.div_content(&c)
        }
        let mut a = normalize_poly(self);
        let mut b = normalize_poly(other);
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.max_v_degree().unwrap() < b.max_v_degree().unwrap() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = normalize_poly(&r);
        }
        if a.leading_coeff().is_negative() {
            a = a.scale(&BigInt::from(-1));
        }
        a
    }

    fn div_content(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k / c)).collect(),
        }
    }

    /// Render with explicit q-exponents, lowest degree first.
    pub fn pretty_q(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let power = if *e == 0 {
                String::new()
            } else if e % 2 == 0 {
                let k = e / 2;
                if k == 1 {
                    "q".to_string()
                } else {
                    format!("q^{}", k)
                }
            } else {
                format!("q^{}/2", e)
            };
            if power.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{}*{}", mag, power));
            }
        }
        out
    }

    /// Serialization form: `[v_exponent, coefficient]` pairs, exponent-ascending.
    pub fn to_pairs(&self) -> Vec<(i64, String)> {
        self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect()
    }

    pub fn from_pairs(pairs: &[(i64, String)]) -> Result<Self> {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            let coeff: BigInt = c
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient {c:?}")))?;
            p.add_term(*e, coeff);
        }
        Ok(p)
    }
}

/// Pseudo-remainder of a by b (both nonzero, deg a >= deg b, min exponent 0).
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let da = a.max_v_degree().unwrap();
    let db = b.max_v_degree().unwrap();
    let lead_b = b.leading_coeff();
    let mut rem = a.scale(&lead_b.pow((da - db + 1) as u32));
    while !rem.is_zero() {
        let dr = rem.max_v_degree().unwrap();
        if dr < db {
            break;
        }
        let factor = rem.leading_coeff().div_rem(&lead_b).0;
        // exact by construction of the pseudo-remainder scaling
        let term = LaurentPoly::monomial(dr - db, factor);
        rem -= &(&term * b);
        if let Some(d) = rem.max_v_degree() {
            if d >= dr {
                // kill the leading term explicitly in pathological cases
                rem.terms.remove(&dr);
            }
        }
    }
    rem
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        let out = &*self * rhs;
        *self = out;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty_q())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in pairs {
            out.add_term(*e, BigInt::from(*c));
        }
        out
    }

    #[test]
    fn delta_is_minus_q_minus_qinv() {
        assert_eq!(LaurentPoly::delta(), p(&[(-2, -1), (2, -1)]));
        assert_eq!(LaurentPoly::delta().pretty_q(), "-q^-1 - q");
    }

    #[test]
    fn delta_squared() {
        let d = LaurentPoly::delta();
        assert_eq!(&d * &d, p(&[(-4, 1), (0, 2), (4, 1)]));
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = p(&[(-2, 1), (0, 3), (2, 1)]);
        let b = p(&[(-1, 2), (3, 5)]);
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&a).unwrap(), b);
        assert_eq!(ab.div_exact(&b).unwrap(), a);
        assert!(p(&[(0, 1), (1, 1)]).div_exact(&p(&[(0, 2)])).is_none());
    }

    #[test]
    fn gcd_of_multiples() {
        let g = p(&[(0, 1), (2, 1)]);
        let a = &g * &p(&[(0, 1), (1, 1)]);
        let b = &g * &p(&[(0, -1), (3, 2)]);
        let got = a.gcd(&b);
        assert_eq!(got, g);
    }

    #[test]
    fn mirror_involution() {
        let a = p(&[(-3, 2), (0, 1), (5, -4)]);
        assert_eq!(a.invert_variable().invert_variable(), a);
    }

    proptest! {
        #[test]
        fn ring_axioms(xs in proptest::collection::vec((-6i64..6, -5i64..5), 0..6),
                       ys in proptest::collection::vec((-6i64..6, -5i64..5), 0..6),
                       zs in proptest::collection::vec((-6i64..6, -5i64..5), 0..6)) {
            let a = p(&xs); let b = p(&ys); let c = p(&zs);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
            prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
            prop_assert_eq!(&a - &a, LaurentPoly::zero());
        }

        #[test]
        fn serialization_roundtrip(xs in proptest::collection::vec((-9i64..9, -9i64..9), 0..8)) {
            let a = p(&xs);
            let back = LaurentPoly::from_pairs(&a.to_pairs()).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
