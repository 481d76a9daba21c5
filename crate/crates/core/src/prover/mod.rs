//! Bisection sign checks, monotone lifting and the twenty-claim registry.

mod certificate;
mod engine;
mod maps;
mod registry;
mod run;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub use certificate::{Certificate, ClaimKind, Outcome, Status, SubCheck, Witness};
pub use engine::{
    verify_monotone_bound, verify_overlap, verify_sign, AlphaMap, Anchor, Direction, PolyMap,
    Target,
};
pub use registry::{claim_registry, Claim, Endpoint};
pub use run::{run, run_with_overrides, topological_order};

use crate::error::{Error, Result};
use crate::interval::PrecisionMode;

/// Search limits and the precision schedule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProverConfig {
    pub max_depth: u32,
    #[serde(with = "rational_string")]
    pub delta: BigRational,
    pub precision: Vec<PrecisionMode>,
    /// Box budget for a single bisection run.
    pub max_boxes: u64,
}

impl Default for ProverConfig {
    fn default() -> Self {
        ProverConfig {
            max_depth: 60,
            delta: BigRational::new(BigInt::from(1), BigInt::from(10_000)),
            precision: vec![
                PrecisionMode::Machine,
                PrecisionMode::Extended { bits: 128 },
                PrecisionMode::Extended { bits: 256 },
            ],
            max_boxes: 1_000_000,
        }
    }
}

impl ProverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_depth < 8 {
            return Err(Error::Domain(format!("max_depth must be at least 8, got {}", self.max_depth)));
        }
        if !self.delta.is_positive() || self.delta >= BigRational::from_integer(2.into()) {
            return Err(Error::Domain(format!("delta must lie in (0, 2), got {}", self.delta)));
        }
        if self.precision.is_empty() {
            return Err(Error::Domain("empty precision schedule".into()));
        }
        for m in &self.precision {
            if let PrecisionMode::Extended { bits } = m {
                PrecisionMode::extended(*bits)?;
            }
        }
        if self.max_boxes == 0 {
            return Err(Error::Domain("max_boxes must be positive".into()));
        }
        Ok(())
    }
}

/// Parses `p/q`, an integer, or a decimal with optional exponent (`1e-4`,
/// `0.0001`) into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Domain(format!("not a rational number: {s:?}"));
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = BigInt::from_str(&format!("{int_part}{frac_part}0")).map_err(|_| bad())? / 10;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut q = if scale >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        q = -q;
    }
    Ok(q)
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}

mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for ProverConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let modes: Vec<String> = self.precision.iter().map(|m| m.to_string()).collect();
        write!(
            f,
            "max_depth={} delta={} precision=[{}] max_boxes={}",
            self.max_depth,
            self.delta,
            modes.join(", "),
            self.max_boxes
        )
    }
}
