//! The field of fractions of Laurent polynomials in `v`.
//!
//! A `RationalFn` is kept in a unique reduced form: the denominator is an
//! ordinary polynomial with nonzero constant term, content coprime to the
//! numerator's, positive leading coefficient, and no common polynomial
//! factor with the numerator. All monomial (`v^k`) freedom lives in the
//! numerator, which stays a genuine Laurent polynomial.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RationalFn { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn inverse(&self) -> Result<RationalFn> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        Ok(RationalFn::new(self.den.clone(), self.num.clone()))
    }

    /// The underlying Laurent polynomial when the denominator is trivial.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotLaurentAfterClearing {
                denominator: self.den.pretty_q(),
            })
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        // All v^k freedom moves into the numerator.
        let dshift = self.den.min_v_degree().unwrap();
        if dshift != 0 {
            self.den = self.den.shift(-dshift);
            self.num = self.num.shift(-dshift);
        }
        // Cancel the polynomial gcd (computed on shifted copies of num).
        let g = self.num.gcd(&self.den);
        if !g.is_one() && !g.is_zero() {
            let nshift = self.num.min_v_degree().unwrap();
            let reduced_num = self
                .num
                .shift(-nshift)
                .div_exact(&g)
                .expect("gcd divides numerator");
            self.num = reduced_num.shift(nshift);
            self.den = self.den.div_exact(&g).expect("gcd divides denominator");
        }
        // Cancel integer content.
        let cn = self.num.content();
        let cd = self.den.content();
        let c = cn.gcd(&cd);
        if !c.is_one() {
            self.num = self
                .num
                .scale(&BigInt::one())
                .div_exact(&LaurentPoly::monomial(0, c.clone()))
                .expect("content divides");
            self.den = self
                .den
                .div_exact(&LaurentPoly::monomial(0, c))
                .expect("content divides");
        }
        // Positive leading coefficient for the denominator.
        if self.den.leading_coeff().is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl AddAssign<&RationalFn> for RationalFn {
    fn add_assign(&mut self, rhs: &RationalFn) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RationalFn> for RationalFn {
    fn sub_assign(&mut self, rhs: &RationalFn) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RationalFn> for RationalFn {
    fn mul_assign(&mut self, rhs: &RationalFn) {
        *self = &*self * rhs;
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.pretty_q())
        } else {
            write!(f, "({}) / ({})", self.num.pretty_q(), self.den.pretty_q())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in pairs {
            out.add_term(*e, BigInt::from(*c));
        }
        out
    }

    #[test]
    fn reduces_common_factors() {
        let g = poly(&[(0, 1), (2, 1)]);
        let a = RationalFn::new(&g * &poly(&[(0, 2)]), &g * &poly(&[(0, 4)]));
        assert_eq!(a, RationalFn::new(poly(&[(0, 1)]), poly(&[(0, 2)])));
    }

    #[test]
    fn monomial_moves_to_numerator() {
        let r = RationalFn::new(poly(&[(0, 1)]), poly(&[(3, 1)]));
        assert_eq!(r.denominator(), &LaurentPoly::one());
        assert_eq!(r.numerator(), &poly(&[(-3, 1)]));
    }

    #[test]
    fn denominator_leading_coeff_positive() {
        let r = RationalFn::new(poly(&[(0, 1)]), poly(&[(0, 1), (2, -2)]));
        assert!(!r.denominator().leading_coeff().is_negative());
    }

    #[test]
    fn to_laurent_detects_units() {
        let d = LaurentPoly::delta();
        let r = RationalFn::new(&d * &poly(&[(5, 3)]), d.clone());
        assert_eq!(r.to_laurent().unwrap(), poly(&[(5, 3)]));
        let bad = RationalFn::new(poly(&[(0, 1)]), LaurentPoly::delta());
        assert!(bad.to_laurent().is_err());
    }

    proptest! {
        #[test]
        fn field_axioms(xs in proptest::collection::vec((-4i64..4, -4i64..4), 0..4),
                        ys in proptest::collection::vec((-4i64..4, -4i64..4), 0..4),
                        ds in proptest::collection::vec((-3i64..3, -3i64..3), 1..3)) {
            let mut den = poly(&ds);
            if den.is_zero() { den = LaurentPoly::one(); }
            let a = RationalFn::new(poly(&xs), den.clone());
            let b = RationalFn::new(poly(&ys), den);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a - &a, RationalFn::zero());
            prop_assert_eq!(&a * &RationalFn::one(), a.clone());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), RationalFn::one());
            }
            // normalization is idempotent
            let renorm = RationalFn::new(a.numerator().clone(), a.denominator().clone());
            prop_assert_eq!(renorm, a);
        }
    }
}
