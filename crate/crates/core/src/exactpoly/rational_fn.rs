use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Quotient of integer polynomials. Not kept in lowest terms; equality is
/// decided by cross-multiplication.
#[derive(Clone)]
pub struct RationalFn {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFn {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DenominatorZero);
        }
        Ok(RationalFn { num, den })
    }

    pub fn poly(p: IntPoly) -> Self {
        RationalFn { num: p, den: IntPoly::one() }
    }

    /// The constant `p/q`.
    pub fn constant(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        RationalFn { num: IntPoly::constant(p), den: IntPoly::constant(q) }
    }

    pub fn x() -> Self {
        RationalFn::poly(IntPoly::x())
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &RationalFn) -> RationalFn {
        RationalFn {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        }
        .reduced()
    }

    pub fn sub(&self, rhs: &RationalFn) -> RationalFn {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &RationalFn) -> RationalFn {
        RationalFn { num: self.num.mul(&rhs.num), den: self.den.mul(&rhs.den) }.reduced()
    }

    pub fn div(&self, rhs: &RationalFn) -> Result<RationalFn> {
        if rhs.num.is_zero() {
            return Err(Error::DenominatorZero);
        }
        Ok(RationalFn { num: self.num.mul(&rhs.den), den: self.den.mul(&rhs.num) }.reduced())
    }

    pub fn mul_poly(&self, p: &IntPoly) -> RationalFn {
        self.mul(&RationalFn::poly(p.clone()))
    }

    pub fn scale(&self, p: i64, q: i64) -> RationalFn {
        self.mul(&RationalFn::constant(p, q))
    }

    /// Quotient rule on the polynomial pair.
    pub fn derivative(&self) -> RationalFn {
        RationalFn {
            num: self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative())),
            den: self.den.mul(&self.den),
        }
        .reduced()
    }

    /// Divide numerator and denominator by their gcd and normalize the sign.
    pub fn reduced(&self) -> RationalFn {
        if self.num.is_zero() {
            return RationalFn { num: IntPoly::zero(), den: IntPoly::one() };
        }
        // g is primitive, so by Gauss's lemma it divides both over the integers
        let g = self.num.gcd(&self.den);
        let n = self.num.div_exact(&g).expect("gcd divides the numerator");
        let d = self.den.div_exact(&g).expect("gcd divides the denominator");
        let cn = n.content();
        let cd = d.content();
        let c = num_integer::Integer::gcd(&cn, &cd);
        let sign = if d.leading().is_negative() { -BigInt::from(1) } else { BigInt::from(1) };
        let c = c * sign;
        RationalFn {
            num: IntPoly::new(n.coeffs().iter().map(|x| x / &c).collect()),
            den: IntPoly::new(d.coeffs().iter().map(|x| x / &c).collect()),
        }
    }

    /// Exact value at a rational point.
    pub fn eval_exact(&self, q: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(Error::DenominatorZero);
        }
        Ok(self.num.eval(q) / d)
    }

    /// Equality as rational functions, independent of representation.
    pub fn identity_equal(&self, rhs: &RationalFn) -> bool {
        self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)).is_zero()
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Exact evaluation of a polynomial or rational function.
pub fn eval_exact(f: &RationalFn, q: &BigRational) -> Result<BigRational> {
    f.eval_exact(q)
}

pub fn identity_equal(lhs: &RationalFn, rhs: &RationalFn) -> bool {
    lhs.identity_equal(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_examples() {
        let lhs = RationalFn::new(IntPoly::from_i64(&[-1, 0, 1]), IntPoly::linear(-1)).unwrap();
        assert!(lhs.identity_equal(&RationalFn::poly(IntPoly::linear(1))));
        let a = RationalFn::new(IntPoly::x(), IntPoly::linear(1)).unwrap();
        let b = RationalFn::new(IntPoly::x(), IntPoly::linear(2)).unwrap();
        assert!(!a.identity_equal(&b));
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = RationalFn::new(IntPoly::x(), IntPoly::linear(1)).unwrap();
        let b = RationalFn::new(IntPoly::linear(3), IntPoly::linear(2)).unwrap();
        let s = a.add(&b).sub(&b);
        assert!(s.identity_equal(&a));
        let p = a.mul(&b).div(&b).unwrap();
        assert!(p.identity_equal(&a));
    }

    #[test]
    fn derivative_of_reciprocal() {
        // d/da 1/(a+1) = -1/(a+1)^2
        let r = RationalFn::new(IntPoly::one(), IntPoly::linear(1)).unwrap();
        let expect = RationalFn::new(IntPoly::constant(-1), IntPoly::linear(1).pow(2)).unwrap();
        assert!(r.derivative().identity_equal(&expect));
    }

    #[test]
    fn zero_denominators() {
        assert!(RationalFn::new(IntPoly::one(), IntPoly::zero()).is_err());
        let r = RationalFn::new(IntPoly::one(), IntPoly::linear(-1)).unwrap();
        assert!(matches!(
            r.eval_exact(&BigRational::from_integer(1.into())),
            Err(Error::DenominatorZero)
        ));
    }
}
