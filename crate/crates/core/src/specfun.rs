//! Rigorous enclosures of ln Γ, Γ, ψ (digamma) and ψ′ (trigamma) on positive
//! real intervals.
//!
//! Point values use the recurrence to push the argument above a threshold and
//! then an asymptotic series whose truncation error is bounded by the first
//! omitted term. Interval arguments are handled through monotonicity: ψ is
//! increasing and ψ′ decreasing on (0, ∞), ln Γ is increasing beyond its
//! minimum near 1.4616.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::interval::{DualInterval, PrecisionMode, Real};

/// Exact Bernoulli numbers `B_2, B_4, …, B_20` as (numerator, denominator).
pub const BERNOULLI: [(i64, i64); 10] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
];

/// Series and shift parameters for the special-function enclosures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialFunctionConfig {
    pub bernoulli: &'static [(i64, i64)],
    /// Number of Bernoulli terms kept in the asymptotic series.
    pub stirling_order: usize,
    /// Arguments are shifted by the recurrence until they reach this value.
    pub shift_threshold: f64,
    /// Leading terms of the trigamma defining series summed explicitly.
    pub trigamma_terms: usize,
    /// Target width of the trigamma tail enclosure in machine mode.
    pub trigamma_tail_width: f64,
}

impl Default for SpecialFunctionConfig {
    fn default() -> Self {
        SpecialFunctionConfig::DEFAULT
    }
}

/// Below this the recurrence is still valid but the monotone shortcut for
/// ln Γ is not; the minimum of Γ on (0, ∞) sits at 1.46163…
const LNGAMMA_MONOTONE_FROM: f64 = 1.5;

/// Lower bound for min ln Γ = ln Γ(1.4616321…) = -0.1214862905358…
const LNGAMMA_MIN_LOWER: f64 = -0.121486290536;

/// Exact `B_{2k}` for `k ≥ 1`, extended on demand by the standard recurrence
/// `Σ_{j=0}^{n} C(n+1, j) B_j = 0`.
fn bernoulli_exact(k: usize) -> BigRational {
    static CACHE: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());
    let mut even = CACHE.lock().expect("bernoulli cache");
    // even[i] = B_{2i}
    if even.is_empty() {
        even.push(BigRational::one());
    }
    while even.len() <= k {
        let n = 2 * even.len();
        // B_n = -1/(n+1) Σ_{j<n} C(n+1, j) B_j with B_1 = -1/2 the only odd term
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(n+1, j)
        for j in 0..n {
            if j == 1 {
                acc -= BigRational::new(binom.clone(), BigInt::from(2));
            } else if j % 2 == 0 {
                acc += &even[j / 2] * BigRational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
        }
        even.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    even[k].clone()
}

fn log2_abs(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().map_or(f64::INFINITY, |v| v.abs().log2());
    }
    let shift = bits - 64;
    (n >> shift as usize).to_f64().map_or(f64::INFINITY, |v| v.abs().log2()) + shift as f64
}

/// Series order and shift threshold used at one precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct SeriesParams {
    order: usize,
    threshold: usize,
}

impl SpecialFunctionConfig {
    pub const DEFAULT: SpecialFunctionConfig = SpecialFunctionConfig {
        bernoulli: &BERNOULLI,
        stirling_order: 8,
        shift_threshold: 10.0,
        trigamma_terms: 64,
        trigamma_tail_width: 1e-15,
    };

    pub fn validate(&self) -> Result<()> {
        let ok = self.stirling_order >= 2
            && self.bernoulli.len() > self.stirling_order
            && self.shift_threshold >= 2.0
            && self.trigamma_terms >= 8
            && self.bernoulli[0] == (1, 6)
            && self.bernoulli[1] == (-1, 30);
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("invalid special function config {self:?}")))
        }
    }

    /// Machine mode uses the configured order and threshold. Extended modes
    /// raise the threshold to a quarter of the bit count and take the
    /// smallest order whose first omitted term is below 2^-(bits+8).
    fn params(&self, mode: PrecisionMode) -> SeriesParams {
        let base = SeriesParams {
            order: self.stirling_order,
            threshold: self.shift_threshold.ceil() as usize,
        };
        let bits = match mode {
            PrecisionMode::Machine => return base,
            PrecisionMode::Extended { bits } => bits as usize,
        };
        let threshold = base.threshold.max(bits.div_ceil(4));
        let target = -(bits as f64) - 8.0;
        let lx = (threshold as f64).log2();
        let mut order = base.order;
        loop {
            // largest of the three remainder terms: |B_{2m+2}| / X^(2m+3)
            let b = bernoulli_exact(order + 1);
            let l = log2_abs(b.numer()) - log2_abs(b.denom()) - (2 * order + 3) as f64 * lx;
            if l < target {
                return SeriesParams { order, threshold };
            }
            order += 1;
        }
    }

    fn tail_width_for(&self, mode: PrecisionMode) -> f64 {
        match mode {
            PrecisionMode::Machine => self.trigamma_tail_width,
            PrecisionMode::Extended { bits } => 2f64.powi(-(bits as i32) + 4),
        }
    }

    /// `B_{2k}` lifted into the backend of `like`.
    fn bernoulli<I: Real>(&self, like: &I, k: usize) -> Result<I> {
        match self.bernoulli.get(k - 1) {
            Some(&(n, d)) => Ok(like.lift_ratio(n, d)),
            None => like.lift_rational(&bernoulli_exact(k)),
        }
    }

    /// Number of recurrence steps taking `x` to at least the threshold.
    fn shift_count<I: Real>(x: &I, p: SeriesParams) -> usize {
        let t = p.threshold as f64;
        let lo = x.lo_f64();
        if lo >= t {
            0
        } else {
            (t - lo).ceil() as usize
        }
    }

    fn check_domain<I: Real>(x: &I, what: &str) -> Result<()> {
        if x.gt(0.0) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{what} needs a positive argument, got {x:?}")))
        }
    }

    /// Stirling series for ln Γ(y), y ≥ threshold, with the remainder bound.
    fn stirling<I: Real>(&self, y: &I, p: SeriesParams) -> Result<I> {
        let m = p.order;
        let half_ln_2pi = y.half_ln_2pi();
        let mut acc = y.add_ratio(-1, 2)?.mul(&y.ln()?)?.sub(y)?.add(&half_ln_2pi)?;
        let inv = y.recip()?;
        let inv2 = inv.sqr()?;
        let mut pw = inv.clone(); // y^-(2k-1)
        for k in 1..=m {
            let coeff = self.bernoulli(y, k)?.mul_ratio(1, (2 * k * (2 * k - 1)) as i64)?;
            acc = acc.add(&coeff.mul(&pw)?)?;
            pw = pw.mul(&inv2)?;
        }
        // first omitted term B_{2m+2} / ((2m+2)(2m+1) y^(2m+1)); pw = y^-(2m+1)
        let k = m + 1;
        let rem = self
            .bernoulli(y, k)?
            .mul_ratio(1, (2 * k * (2 * k - 1)) as i64)?
            .mul(&pw)?;
        acc.add(&rem.symmetric_hull())
    }

    /// Interval evaluation of the shifted Stirling formula (sound for any
    /// positive interval, tight for narrow ones).
    fn lngamma_direct<I: Real>(&self, x: &I) -> Result<I> {
        let p = self.params(x.mode());
        let n = Self::shift_count(x, p);
        let mut prod = x.one();
        for k in 0..n {
            prod = prod.mul(&x.add_int(k as i64)?)?;
        }
        let y = x.add_int(n as i64)?;
        let s = self.stirling(&y, p)?;
        if n == 0 {
            Ok(s)
        } else {
            s.sub(&prod.ln()?)
        }
    }

    pub fn lngamma<I: Real>(&self, x: &I) -> Result<I> {
        Self::check_domain(x, "lngamma")?;
        if x.lo_f64() >= LNGAMMA_MONOTONE_FROM {
            let lo = self.lngamma_direct(&x.lo_point())?;
            let hi = self.lngamma_direct(&x.hi_point())?;
            return Ok(lo.hull(&hi));
        }
        let direct = self.lngamma_direct(x)?;
        // ln Γ is bounded below by its global minimum on (0, ∞)
        let floor = x.lift(LNGAMMA_MIN_LOWER).hull(&direct.hi_point());
        Ok(direct.intersect(&floor).unwrap_or(direct))
    }

    pub fn gamma<I: Real>(&self, x: &I) -> Result<I> {
        self.lngamma(x)?.exp()
    }

    /// ψ(y) for y ≥ threshold: ln y − 1/(2y) − Σ B_{2k} / (2k y^{2k}).
    fn digamma_asymptotic<I: Real>(&self, y: &I, p: SeriesParams) -> Result<I> {
        let m = p.order;
        let inv = y.recip()?;
        let inv2 = inv.sqr()?;
        let mut acc = y.ln()?.sub(&inv.mul_ratio(1, 2)?)?;
        let mut pw = inv2.clone();
        for k in 1..=m {
            let term = self.bernoulli(y, k)?.mul_ratio(1, (2 * k) as i64)?.mul(&pw)?;
            acc = acc.sub(&term)?;
            pw = pw.mul(&inv2)?;
        }
        let k = m + 1;
        let rem = self.bernoulli(y, k)?.mul_ratio(1, (2 * k) as i64)?.mul(&pw)?;
        acc.add(&rem.symmetric_hull())
    }

    fn digamma_point<I: Real>(&self, x: &I) -> Result<I> {
        let p = self.params(x.mode());
        let n = Self::shift_count(x, p);
        let mut corr = x.zero();
        for k in 0..n {
            corr = corr.add(&x.add_int(k as i64)?.recip()?)?;
        }
        let y = x.add_int(n as i64)?;
        self.digamma_asymptotic(&y, p)?.sub(&corr)
    }

    pub fn digamma<I: Real>(&self, x: &I) -> Result<I> {
        Self::check_domain(x, "digamma")?;
        let lo = self.digamma_point(&x.lo_point())?;
        let hi = self.digamma_point(&x.hi_point())?;
        Ok(lo.hull(&hi))
    }

    /// Tail Σ_{k≥0} 1/(y+k)² of the defining series, y > 1.
    ///
    /// Intersection of the integral bounds `[1/y, 1/(y-1)]` with the
    /// Euler–Maclaurin envelope `1/y + 1/(2y²) + Σ B_{2k}/y^{2k+1}` whose
    /// truncation error is bounded by the first omitted term.
    fn trigamma_tail<I: Real>(&self, y: &I, p: SeriesParams) -> Result<I> {
        let m = p.order;
        let inv = y.recip()?;
        let inv2 = inv.sqr()?;
        let mut acc = inv.add(&inv2.mul_ratio(1, 2)?)?;
        let mut pw = inv2.mul(&inv)?; // y^-(2k+1)
        for k in 1..=m {
            acc = acc.add(&self.bernoulli(y, k)?.mul(&pw)?)?;
            pw = pw.mul(&inv2)?;
        }
        let rem = self.bernoulli(y, m + 1)?.mul(&pw)?;
        let em = acc.add(&rem.symmetric_hull())?;
        let integral = inv.hull(&y.add_int(-1)?.recip()?);
        Ok(em.intersect(&integral).unwrap_or(em))
    }

    fn trigamma_point<I: Real>(&self, x: &I) -> Result<I> {
        let p = self.params(x.mode());
        let target = self.tail_width_for(x.mode());
        let mut n = self.trigamma_terms.max(p.threshold);
        let mut partial = x.zero();
        let mut summed = 0;
        loop {
            for k in summed..n {
                partial = partial.add(&x.add_int(k as i64)?.sqr()?.recip()?)?;
            }
            summed = n;
            let tail = self.trigamma_tail(&x.add_int(n as i64)?, p)?;
            if tail.width_f64() <= target || n >= 1 << 16 {
                return partial.add(&tail);
            }
            n *= 2;
        }
    }

    pub fn trigamma<I: Real>(&self, x: &I) -> Result<I> {
        Self::check_domain(x, "trigamma")?;
        // decreasing: the upper endpoint gives the lower bound
        let at_hi = self.trigamma_point(&x.hi_point())?;
        let at_lo = self.trigamma_point(&x.lo_point())?;
        Ok(at_hi.hull(&at_lo))
    }

    pub fn lngamma_dual<I: Real>(&self, x: &DualInterval<I>) -> Result<DualInterval<I>> {
        let v = self.lngamma(&x.val)?;
        x.chain(v, &self.digamma(&x.val)?)
    }

    /// Γ′ = Γ ψ.
    pub fn gamma_dual<I: Real>(&self, x: &DualInterval<I>) -> Result<DualInterval<I>> {
        let g = self.gamma(&x.val)?;
        let d = g.mul(&self.digamma(&x.val)?)?;
        x.chain(g, &d)
    }

    pub fn digamma_dual<I: Real>(&self, x: &DualInterval<I>) -> Result<DualInterval<I>> {
        let v = self.digamma(&x.val)?;
        x.chain(v, &self.trigamma(&x.val)?)
    }
}

pub fn lngamma<I: Real>(x: &I) -> Result<I> {
    SpecialFunctionConfig::DEFAULT.lngamma(x)
}

pub fn gamma<I: Real>(x: &I) -> Result<I> {
    SpecialFunctionConfig::DEFAULT.gamma(x)
}

pub fn digamma<I: Real>(x: &I) -> Result<I> {
    SpecialFunctionConfig::DEFAULT.digamma(x)
}

pub fn trigamma<I: Real>(x: &I) -> Result<I> {
    SpecialFunctionConfig::DEFAULT.trigamma(x)
}

pub fn lngamma_dual<I: Real>(x: &DualInterval<I>) -> Result<DualInterval<I>> {
    SpecialFunctionConfig::DEFAULT.lngamma_dual(x)
}

pub fn gamma_dual<I: Real>(x: &DualInterval<I>) -> Result<DualInterval<I>> {
    SpecialFunctionConfig::DEFAULT.gamma_dual(x)
}

pub fn digamma_dual<I: Real>(x: &DualInterval<I>) -> Result<DualInterval<I>> {
    SpecialFunctionConfig::DEFAULT.digamma_dual(x)
}
