//! Exact rational arithmetic carrier.
//!
//! Every correctness-bearing quantity in this crate (weights, inner products,
//! Gram entries, g values) is a `Rational`. Floating point only appears in the
//! simulator and the explicit projector handed to it.

use num_bigint::BigInt;
use num_traits::Zero;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `p/q` reduced to lowest terms. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `p` as a rational.
pub fn integer(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Renders `p/q` keeping the denominator even when it is 1, as required by
/// the certificate file format.
pub fn format_frac(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_frac(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.trim().parse().ok()?;
            Some(Rational::from_integer(p))
        }
    }
}
