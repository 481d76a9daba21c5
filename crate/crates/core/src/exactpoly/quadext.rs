//! Exact arithmetic in `Q(α)[S] / (S² - R(α))`: expressions `p + q·√R`
//! with rational-function coefficients, closed under differentiation in α.

use super::poly::IntPoly;
use super::rational_fn::RationalFn;
use crate::error::Result;

/// `rat + irr · √radicand`.
#[derive(Debug, Clone)]
pub struct QuadElem {
    pub rat: RationalFn,
    pub irr: RationalFn,
    radicand: IntPoly,
}

impl QuadElem {
    pub fn new(rat: RationalFn, irr: RationalFn, radicand: &IntPoly) -> Self {
        QuadElem { rat, irr, radicand: radicand.clone() }
    }

    pub fn rational(rat: RationalFn, radicand: &IntPoly) -> Self {
        QuadElem::new(rat, RationalFn::poly(IntPoly::zero()), radicand)
    }

    /// `√radicand` itself.
    pub fn sqrt(radicand: &IntPoly) -> Self {
        QuadElem::new(
            RationalFn::poly(IntPoly::zero()),
            RationalFn::poly(IntPoly::one()),
            radicand,
        )
    }

    pub fn radicand(&self) -> &IntPoly {
        &self.radicand
    }

    pub fn add(&self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(self.rat.add(&rhs.rat), self.irr.add(&rhs.irr), &self.radicand)
    }

    pub fn sub(&self, rhs: &QuadElem) -> QuadElem {
        QuadElem::new(self.rat.sub(&rhs.rat), self.irr.sub(&rhs.irr), &self.radicand)
    }

    pub fn mul(&self, rhs: &QuadElem) -> QuadElem {
        let r = RationalFn::poly(self.radicand.clone());
        let rat = self.rat.mul(&rhs.rat).add(&self.irr.mul(&rhs.irr).mul(&r));
        let irr = self.rat.mul(&rhs.irr).add(&self.irr.mul(&rhs.rat));
        QuadElem::new(rat, irr, &self.radicand)
    }

    pub fn scale(&self, f: &RationalFn) -> QuadElem {
        QuadElem::new(self.rat.mul(f), self.irr.mul(f), &self.radicand)
    }

    /// `d/dα (p + q√R) = p' + (q' + q R' / (2R)) √R`.
    pub fn derivative(&self) -> Result<QuadElem> {
        let r = RationalFn::poly(self.radicand.clone());
        let r_prime = RationalFn::poly(self.radicand.derivative());
        let log_term = r_prime.div(&r.scale(2, 1))?;
        let irr = self.irr.derivative().add(&self.irr.mul(&log_term));
        Ok(QuadElem::new(self.rat.derivative(), irr, &self.radicand))
    }

    /// Zero as an element of the extension. Valid when the radicand is not a
    /// square in `Q(α)`, so that `1, √R` are linearly independent.
    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_sqrt() {
        // d/da sqrt(a^2 + 1) = a / sqrt(a^2+1) = (a / (a^2+1)) sqrt(a^2+1)
        let r = IntPoly::from_i64(&[1, 0, 1]);
        let d = QuadElem::sqrt(&r).derivative().unwrap();
        let expect = QuadElem::new(
            RationalFn::poly(IntPoly::zero()),
            RationalFn::new(IntPoly::x(), r.clone()).unwrap(),
            &r,
        );
        assert!(d.sub(&expect).is_zero());
    }

    #[test]
    fn square_of_sqrt_is_rational() {
        let r = IntPoly::from_i64(&[2944, 1104, 25, -6, 1]);
        let s = QuadElem::sqrt(&r);
        let sq = s.mul(&s);
        assert!(sq.irr.is_zero());
        assert!(sq.rat.identity_equal(&RationalFn::poly(r)));
    }
}
