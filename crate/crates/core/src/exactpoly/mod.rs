//! Exact integer polynomial arithmetic, Sturm root isolation and rational
//! function identities. Nothing in this module rounds.

mod poly;
mod quadext;
mod rational_fn;
mod sturm;

pub use poly::IntPoly;
pub use quadext::QuadElem;
pub use rational_fn::{eval_exact, identity_equal, RationalFn};
pub use sturm::{
    count_roots, refine, sign_on_interval, sturm_isolate, sturm_sequence, RootBracket,
    SignCertificate,
};

use num_bigint::BigInt;
use num_rational::BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `10^-k`
pub fn pow10_neg(k: u32) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(10).pow(k))
}
