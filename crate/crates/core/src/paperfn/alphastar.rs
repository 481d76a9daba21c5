use num_bigint::BigInt;
use num_rational::BigRational;

use super::exact::quartic;
use crate::error::{Error, Result};
use crate::exactpoly::{pow10_neg, rat, refine, sturm_isolate, RootBracket};
use crate::interval::Real;

/// Two enclosures of the root α* of the quartic in [0, 2].
#[derive(Debug, Clone)]
pub struct AlphaStar<I> {
    /// The radical expression evaluated in interval arithmetic.
    pub closed_form: I,
    /// Sturm-isolated bracket refined to width at most 10⁻¹⁰.
    pub bracket: RootBracket,
}

impl<I: Real> AlphaStar<I> {
    /// Rational upper end of the bracket.
    pub fn upper(&self) -> &BigRational {
        &self.bracket.hi
    }

    pub fn bracket_interval(&self, like: &I) -> Result<I> {
        Ok(like.lift_rational(&self.bracket.lo)?.hull(&like.lift_rational(&self.bracket.hi)?))
    }
}

/// (c/2679) + 21023359/(2679 c) − 8581/2679 with
/// c = ∛(118571508548 + 120555 √328018829721).
fn closed_form<I: Real>(like: &I) -> Result<I> {
    let big = |n: i64| like.lift_rational(&BigRational::from_integer(BigInt::from(n)));
    let inner = big(328018829721)?.sqrt()?.mul(&big(120555)?)?.add(&big(118571508548)?)?;
    let c = inner.cbrt()?;
    let first = c.mul_ratio(1, 2679)?;
    let second = big(21023359)?.div(&c.mul_int(2679)?)?;
    first.add(&second)?.add(&like.lift_ratio(-8581, 2679))
}

pub(crate) fn alpha_star_bracket() -> Result<RootBracket> {
    let q = quartic();
    let found = sturm_isolate(&q, &rat(0, 1), &rat(2, 1))?;
    if found.len() != 1 {
        return Err(Error::InconsistentAlphaStar);
    }
    Ok(refine(&found[0], &pow10_neg(10)))
}

/// α* by the closed form and by exact root isolation; the two must meet.
pub fn alpha_star<I: Real>(like: &I) -> Result<AlphaStar<I>> {
    let bracket = alpha_star_bracket()?;
    let closed_form = closed_form(like)?;
    let star = AlphaStar { closed_form, bracket };
    if star.bracket_interval(like)?.intersect(&star.closed_form).is_none() {
        return Err(Error::InconsistentAlphaStar);
    }
    Ok(star)
}
