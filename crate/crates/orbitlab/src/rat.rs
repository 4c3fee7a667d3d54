//! Exact rational scalars used throughout the crate.
//!
//! Every numeric quantity that is not a plain integer count (inner products,
//! weighted Dynkin data, levels, central charges, q-series coefficients) is a
//! `Rat` = arbitrary-precision rational.  No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`.  Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Zero rational.
pub fn rzero() -> Rat {
    Rat::zero()
}

/// One rational.
pub fn rone() -> Rat {
    Rat::one()
}

/// Dot product of two coordinate vectors of equal length.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot: dimension mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Render a rational in `num/den` form, or just `num` when the denominator
/// is one.  This is the canonical textual form used in JSON output.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse a rational from `num`, `num/den`, or a signed variant thereof.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Exact conversion to `i64`; `None` if the value is not an integer or does
/// not fit.
pub fn rat_to_i64(r: &Rat) -> Option<i64> {
    if !r.denom().is_one() {
        return None;
    }
    i64::try_from(r.numer().clone()).ok()
}

/// True if `r` is a non-negative integer.
pub fn is_nonneg_int(r: &Rat) -> bool {
    r.denom().is_one() && !r.numer().is_negative()
}
