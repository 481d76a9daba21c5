//! The functions of α whose signs or agreement the claims establish.

use super::engine::AlphaMap;
use crate::error::Result;
use crate::interval::{DualInterval, Real};
use crate::paperfn::{self, AlphaDomain};
use crate::specfun;

mod forms {
    use crate::error::Result;
    use crate::paperfn::{g_n, half_plus, lambda_n, mu_n, t_cap_n, x_n, Arith, RADICAND};

    /// F′/F = ψ(α+3) + ½ψ(α/2+9/2) − ½ψ(α/2+2) − ψ(α+9/2)
    pub fn f_logderiv<N: Arith>(a: &N) -> Result<N> {
        a.add_int(3)?
            .digamma()?
            .add(&half_plus(a, 9, 2)?.digamma()?.mul_ratio(1, 2)?)?
            .sub(&half_plus(a, 2, 1)?.digamma()?.mul_ratio(1, 2)?)?
            .sub(&a.add_ratio(9, 2)?.digamma()?)
    }

    /// Φ′ = ½ψ(α/2+2) + ψ(α+9/2) − ½ψ(α/2+9/2) − ψ(α+2)
    pub fn phi_prime<N: Arith>(a: &N) -> Result<N> {
        half_plus(a, 2, 1)?
            .digamma()?
            .mul_ratio(1, 2)?
            .add(&a.add_ratio(9, 2)?.digamma()?)?
            .sub(&half_plus(a, 9, 2)?.digamma()?.mul_ratio(1, 2)?)?
            .sub(&a.add_int(2)?.digamma()?)
    }

    pub fn mu2_minus_lambda<N: Arith>(a: &N) -> Result<N> {
        mu_n(2, a)?.sub(&lambda_n(a)?)
    }

    pub fn g_at_t<N: Arith>(a: &N) -> Result<N> {
        g_n(a, &t_cap_n(a)?)
    }

    /// B = ((90+19α)(3+α)(3α−14))³ Q √Q
    pub fn curvature_denominator<N: Arith>(a: &N) -> Result<N> {
        let q = a.poly(&RADICAND)?;
        a.mul_int(19)?
            .add_int(90)?
            .mul(&a.add_int(3)?)?
            .mul(&a.mul_int(3)?.add_int(-14)?)?
            .powi(3)?
            .mul(&q)?
            .mul(&q.sqrt()?)
    }

    /// 1171994600448 x(α) − 8833393336320
    pub fn leading_pair<N: Arith>(a: &N) -> Result<N> {
        x_n(a)?.mul_int(1_171_994_600_448)?.add_int(-8_833_393_336_320)
    }
}

macro_rules! dual_map {
    ($name:ident, $f:path) => {
        pub(crate) struct $name;

        impl AlphaMap for $name {
            fn value<I: Real>(&self, a: &I) -> Result<I> {
                $f(a)
            }

            fn derivative<I: Real>(&self, a: &I) -> Option<Result<I>> {
                Some($f(&DualInterval::variable(a.clone())).map(|d| d.der))
            }
        }
    };
}

macro_rules! value_map {
    ($name:ident, |$a:ident| $body:expr) => {
        pub(crate) struct $name;

        impl AlphaMap for $name {
            fn value<I: Real>(&self, $a: &I) -> Result<I> {
                $body
            }
        }
    };
}

dual_map!(FLogDeriv, forms::f_logderiv);
dual_map!(PhiPrime, forms::phi_prime);
dual_map!(Mu2MinusLambda, forms::mu2_minus_lambda);
dual_map!(GAtT, forms::g_at_t);
dual_map!(CurvatureDenominator, forms::curvature_denominator);
dual_map!(LeadingPair, forms::leading_pair);

fn dom<I: Real>(a: &I) -> Result<AlphaDomain<I>> {
    AlphaDomain::new(a.clone())
}

value_map!(Mu2, |a| paperfn::mu(2, &dom(a)?));
value_map!(Mu2ViaGamma, |a| paperfn::mu2_via_gamma(&dom(a)?));
value_map!(In10Ratio, |a| paperfn::in10_ratio(&dom(a)?));
value_map!(In10RatioViaF, |a| paperfn::in10_ratio_via_f(&dom(a)?));
value_map!(TCap, |a| paperfn::t_cap(&dom(a)?));
value_map!(TViaF, |a| paperfn::t_via_f_cap(&dom(a)?));
value_map!(Curvature, |a| Ok(paperfn::h_curvature(&dom(a)?)?.h2));

// Λ(α)(α+3)/3, which the display below equals
value_map!(LambdaScaled, |a| paperfn::lambda_cap(&dom(a)?)?.mul(&a.add_int(3)?)?.mul_ratio(1, 3));

// (4/15)(90+19α) Γ(α/2+2) Γ(α+9/2) / ((α+9)(α+7)(α+5) Γ(α/2+3/2))
value_map!(LambdaDisplay, |a| {
    let ln = specfun::lngamma(&a.mul_ratio(1, 2)?.add_int(2)?)?
        .add(&specfun::lngamma(&a.add_ratio(9, 2)?)?)?
        .sub(&specfun::lngamma(&a.mul_ratio(1, 2)?.add_ratio(3, 2)?)?)?;
    let den = a.add_int(9)?.mul(&a.add_int(7)?)?.mul(&a.add_int(5)?)?;
    a.mul_int(19)?.add_int(90)?.mul(&ln.exp()?)?.div(&den)?.mul_ratio(4, 15)
});

// s′ − r′ with s′ = (630 ln 2 − 671) / (405 (α+2)²)
value_map!(SPrimeMinusRPrime, |a| {
    let c = a.ln2().mul_int(630)?.add_int(-671)?.mul_ratio(1, 405)?;
    let s_prime = c.div(&a.add_int(2)?.sqr()?)?;
    s_prime.sub(&paperfn::r_prime_n(a)?)
});

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;

    value_map!(Mu0, |a| paperfn::mu(0, &dom(a)?));

    #[test]
    fn derivative_forms_match_paper_functions() {
        let a = Interval::new(0.5, 0.5).unwrap();
        let d = dom(&a).unwrap();
        assert!(FLogDeriv.value(&a).unwrap().overlaps(&paperfn::f_cap_logderiv(&d).unwrap()));
        assert!(PhiPrime.value(&a).unwrap().overlaps(&paperfn::phi_prime(&d).unwrap()));
        let b = CurvatureDenominator.value(&a).unwrap();
        assert!(b.overlaps(&paperfn::h_curvature(&d).unwrap().b));
        // g(T(0)) = 0, and g(T) < 0 just right of 0
        assert!(GAtT.value(&Interval::point(0.0)).unwrap().contains(0.0));
        assert!(GAtT.value(&Interval::point(0.01)).unwrap().hi() < 0.0);
        assert!(GAtT.derivative(&Interval::point(0.5)).unwrap().is_ok());
        assert!(!Mu0.value(&a).unwrap().overlaps(&Mu2.value(&a).unwrap()));
    }
}
