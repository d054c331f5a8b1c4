//! Exact rational scalars.
//!
//! Every coordinate, radius and distance in the engine is a [`Scalar`]. The
//! textual form is `"p/q"` or `"p"` (lowest terms, positive denominator),
//! which is also what `Display` produces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

/// Integer-valued scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` with optional leading minus. Anything else,
/// including decimal notation, is rejected.
pub fn parse(text: &str) -> Option<Scalar> {
    let t = text.trim();
    let valid = |s: &str, signed: bool| {
        let digits = if signed {
            s.strip_prefix('-').unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    if !valid(num, true) || !valid(den, false) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

pub fn min(a: &Scalar, b: &Scalar) -> Scalar {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn max(a: &Scalar, b: &Scalar) -> Scalar {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Smallest rational `s >= 0` found by bisection with `s * s >= value` and
/// `s - sqrt(value) <= tol`. Never returns a value below the true root.
pub fn sqrt_upper(value: &Scalar, tol: &Scalar) -> Scalar {
    assert!(!value.is_negative(), "sqrt of negative value");
    let mut lo = Scalar::zero();
    let mut hi = max(&Scalar::one(), value);
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / int(2);
        if &mid * &mid >= *value {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Rounds to `digits` decimal places with round-half-even and renders as a
/// plain decimal string, trailing zeros trimmed. Presentation only.
pub fn to_decimal(value: &Scalar, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = value * Scalar::from_integer(scale.clone());
    let floor = scaled.floor().to_integer();
    let frac = &scaled - Scalar::from_integer(floor.clone());
    let half = ratio(1, 2);
    let rounded = if frac > half || (frac == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    };
    let negative = rounded.is_negative();
    let (int_part, frac_part) = rounded.abs().div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if !frac_part.is_zero() {
        let f = format!(
            "{:0>width$}",
            frac_part.to_string(),
            width = digits as usize
        );
        out.push('.');
        out.push_str(f.trim_end_matches('0'));
    }
    out
}
