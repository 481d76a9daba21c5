use super::{agree, hfun, AlphaDomain, Arith};
use crate::error::{Error, Result};
use crate::interval::{DualInterval, Real};
use crate::specfun;

/// `exp(Σ ln Γ(num) − Σ ln Γ(den))`.
fn gamma_ratio<N: Arith>(num: &[N], den: &[N]) -> Result<N> {
    let mut acc = num[0].lngamma()?;
    for x in &num[1..] {
        acc = acc.add(&x.lngamma()?)?;
    }
    for x in den {
        acc = acc.sub(&x.lngamma()?)?;
    }
    acc.exp()
}

/// `α/2 + p/q`
pub(crate) fn half_plus<N: Arith>(a: &N, p: i64, q: i64) -> Result<N> {
    a.mul_ratio(1, 2)?.add_ratio(p, q)
}

pub(crate) fn mu_n<N: Arith>(n: u32, a: &N) -> Result<N> {
    let n = n as i64;
    let two_pow = a.mul(&a.constant(a.value().ln2()))?;
    // Γ((3+α)/2 + n) with the argument read as printed
    let second = a.add_int(3)?.mul_ratio(1, 2)?.add_int(n)?;
    let fixed = a.ratio(2 * n + 3, 2);
    let mut ln = two_pow
        .add(&half_plus(a, n + 1, 1)?.lngamma()?)?
        .add(&second.lngamma()?)?
        .sub(&fixed.lngamma()?)?;
    if n >= 2 {
        // ln n! as ln Γ(n+1)
        ln = ln.sub(&a.int(n + 1).lngamma()?)?;
    }
    ln.exp()
}

/// μₙ(α) = 2^α Γ(α/2+n+1) Γ((3+α)/2+n) / (n! Γ(3/2+n)), for n ≤ 8.
pub fn mu<I: Real>(n: u32, alpha: &AlphaDomain<I>) -> Result<I> {
    if n > 8 {
        return Err(Error::Domain(format!("mu is provided for n <= 8, got {n}")));
    }
    mu_n(n, alpha.interval())
}

/// Γ(α+6)/120, the simplified form of μ₂.
pub fn mu2_via_gamma<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    let a = alpha.interval();
    specfun::gamma(&a.add_int(6)?)?.mul_ratio(1, 120)
}

pub(crate) fn lambda_n<N: Arith>(a: &N) -> Result<N> {
    let mu0 = mu_n(0, a)?;
    // Γ(5/2 + α + 2) and Γ((5+α)/2 + 3), arguments kept as printed
    let g_num = a.add_ratio(5, 2)?.add_int(2)?;
    let g_den = a.add_int(5)?.mul_ratio(1, 2)?.add_int(3)?;
    let ratio = gamma_ratio(&[half_plus(a, 2, 1)?, g_num], &[g_den, a.add_int(2)?])?;
    let lin = a.mul_int(19)?.add_int(90)?;
    mu0.mul(&ratio)?.mul(&lin)?.mul_ratio(1, 20)
}

/// Λ(α).
pub fn lambda_cap<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    lambda_n(alpha.interval())
}

/// Γ(α/2+2) Γ(α+9/2) / (Γ(α/2+11/2) Γ(α+2)), via log-Gamma differences.
pub(crate) fn f_ratio_n<N: Arith>(a: &N) -> Result<N> {
    gamma_ratio(
        &[half_plus(a, 2, 1)?, a.add_ratio(9, 2)?],
        &[half_plus(a, 11, 2)?, a.add_int(2)?],
    )
}

pub(crate) fn t_cap_n<N: Arith>(a: &N) -> Result<N> {
    a.mul_int(19)?.add_int(90)?.mul(&f_ratio_n(a)?)
}

/// T(α) = (90+19α) Γ(α/2+2) Γ(α+9/2) / (Γ(α/2+11/2) Γ(α+2)).
pub fn t_cap<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    t_cap_n(alpha.interval())
}

pub(crate) fn f_cap_n<N: Arith>(a: &N) -> Result<N> {
    gamma_ratio(
        &[a.add_int(3)?, half_plus(a, 9, 2)?],
        &[half_plus(a, 2, 1)?, a.add_ratio(9, 2)?],
    )
}

/// F(α) = Γ(α+3) Γ(α/2+9/2) / (Γ(α/2+2) Γ(α+9/2)).
pub fn f_cap<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    f_cap_n(alpha.interval())
}

/// F′/F = ψ(α+3) + ½ψ(α/2+9/2) − ½ψ(α/2+2) − ψ(α+9/2).
pub fn f_cap_logderiv<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    let a = alpha.interval();
    let p1 = specfun::digamma(&a.add_int(3)?)?;
    let p2 = specfun::digamma(&half_plus(a, 9, 2)?)?.mul_ratio(1, 2)?;
    let p3 = specfun::digamma(&half_plus(a, 2, 1)?)?.mul_ratio(1, 2)?;
    let p4 = specfun::digamma(&a.add_ratio(9, 2)?)?;
    p1.add(&p2)?.sub(&p3)?.sub(&p4)
}

/// 32 Γ(α/2+2) Γ(α+9/2) / (Γ(α+6) Γ(α/2+3/2)).
pub fn in10_ratio<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    let a = alpha.interval();
    gamma_ratio(&[half_plus(a, 2, 1)?, a.add_ratio(9, 2)?], &[a.add_int(6)?, half_plus(a, 3, 2)?])?
        .mul_int(32)
}

/// 4 (α+7)/(α+4) / F(α).
pub fn in10_ratio_via_f<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    let a = alpha.interval();
    let q = a.add_int(7)?.div(&a.add_int(4)?)?.mul_int(4)?;
    q.div(&f_cap_n(a)?)
}

/// 2 (α+2)(90+19α) / ((α+9) F(α)), the second display of T.
pub fn t_via_f_cap<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    let a = alpha.interval();
    let num = a.add_int(2)?.mul(&a.mul_int(19)?.add_int(90)?)?.mul_int(2)?;
    num.div(&a.add_int(9)?.mul(&f_cap_n(a)?)?)
}

/// Φ(α) = ln Γ(α/2+2) + ln Γ(α+9/2) − ln Γ(α/2+9/2) − ln Γ(α+2); the lower
/// bound T ≥ 2(90+19α)/(α+9) is Φ ≥ 0.
pub fn phi<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    let a = alpha.interval();
    specfun::lngamma(&half_plus(a, 2, 1)?)?
        .add(&specfun::lngamma(&a.add_ratio(9, 2)?)?)?
        .sub(&specfun::lngamma(&half_plus(a, 9, 2)?)?)?
        .sub(&specfun::lngamma(&a.add_int(2)?)?)
}

/// Φ′(α) = ½ψ(α/2+2) + ψ(α+9/2) − ½ψ(α/2+9/2) − ψ(α+2).
pub fn phi_prime<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    let a = alpha.interval();
    specfun::digamma(&half_plus(a, 2, 1)?)?
        .mul_ratio(1, 2)?
        .add(&specfun::digamma(&a.add_ratio(9, 2)?)?)?
        .sub(&specfun::digamma(&half_plus(a, 9, 2)?)?.mul_ratio(1, 2)?)?
        .sub(&specfun::digamma(&a.add_int(2)?)?)
}

/// f as a product of Gamma values, intersected with the log-Gamma form.
fn f_direct<I: Real>(a: &I) -> Result<I> {
    let num = specfun::gamma(&half_plus(a, 2, 1)?)?.mul(&specfun::gamma(&a.add_ratio(9, 2)?)?)?;
    let den = specfun::gamma(&half_plus(a, 11, 2)?)?.mul(&specfun::gamma(&a.add_int(2)?)?)?;
    agree(&num.div(&den)?, &f_ratio_n(a)?, "f")
}

/// (f(α), h(α)).
pub fn fh_pair<I: Real>(alpha: &AlphaDomain<I>) -> Result<(I, I)> {
    let a = alpha.interval();
    Ok((f_direct(a)?, hfun::h_both(a)?))
}

/// f′(0) = 671/2835 − (2/9) ln 2 in the backend of `like`.
pub fn f_prime_at_zero<I: Real>(like: &I) -> I {
    let ln2 = like.ln2().mul_ratio(2, 9).expect("finite");
    like.lift_ratio(671, 2835).sub(&ln2).expect("finite")
}

/// r, s and their derivatives.
#[derive(Debug, Clone)]
pub struct RsBundle<I> {
    pub r: I,
    pub s: I,
    pub r_prime: I,
    pub s_prime: I,
}

pub(crate) fn r_n<N: Arith>(a: &N) -> Result<N> {
    half_plus(a, 2, 1)?
        .digamma()?
        .mul_ratio(1, 2)?
        .add(&a.add_ratio(9, 2)?.digamma()?)?
        .sub(&half_plus(a, 11, 2)?.digamma()?.mul_ratio(1, 2)?)?
        .sub(&a.add_int(2)?.digamma()?)
}

pub(crate) fn r_prime_n<I: Real>(a: &I) -> Result<I> {
    specfun::trigamma(&half_plus(a, 2, 1)?)?
        .mul_ratio(1, 4)?
        .add(&specfun::trigamma(&a.add_ratio(9, 2)?)?)?
        .sub(&specfun::trigamma(&half_plus(a, 11, 2)?)?.mul_ratio(1, 4)?)?
        .sub(&specfun::trigamma(&a.add_int(2)?)?)
}

pub fn rs_bundle<I: Real>(alpha: &AlphaDomain<I>) -> Result<RsBundle<I>> {
    let a = alpha.interval();
    let fp0 = f_prime_at_zero(a);
    let s = fp0.mul(&a.add_int(9)?)?.div(&a.add_int(2)?)?;
    // (1/405)(−671 + 630 ln 2) / (α+2)²
    let c = a.ln2().mul_int(630)?.add_int(-671)?.mul_ratio(1, 405)?;
    let s_prime = c.div(&a.add_int(2)?.sqr()?)?;
    Ok(RsBundle { r: r_n(a)?, s, r_prime: r_prime_n(a)?, s_prime })
}

/// ¼ψ′(2) + ψ′(9/2) − ¼ψ′(α/2+11/2) − ψ′(α+2) at an enclosure of α*.
pub fn r_prime_constant<I: Real>(alpha_star: &I) -> Result<I> {
    let a = alpha_star;
    specfun::trigamma(&a.lift_int(2))?
        .mul_ratio(1, 4)?
        .add(&specfun::trigamma(&a.lift_ratio(9, 2))?)?
        .sub(&specfun::trigamma(&half_plus(a, 11, 2)?)?.mul_ratio(1, 4)?)?
        .sub(&specfun::trigamma(&a.add_int(2)?)?)
}

/// f′ as f·r intersected with the derivative of f by forward differentiation.
pub fn f_prime<I: Real>(alpha: &AlphaDomain<I>) -> Result<I> {
    let a = alpha.interval();
    let product = f_ratio_n(a)?.mul(&r_n(a)?)?;
    let ad = f_ratio_n(&DualInterval::variable(a.clone()))?.der;
    agree(&product, &ad, "f' product vs derivative")
}
