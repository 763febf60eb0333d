//! High-precision decimal evaluation on top of integer arithmetic.
//!
//! Every decimal in the crate is a fixed-point value: a `BigInt` holding
//! value * 10^wp for a working precision of wp fractional digits. wp is
//! always the requested digit count plus [`GUARD_DIGITS`] guard digits, and
//! final strings are truncated, never rounded, so output is reproducible
//! bit for bit.
//!
//! pi itself comes from Machin's formula
//! pi = 16 arctan(1/5) - 4 arctan(1/239) with the arctangent series summed
//! in integer arithmetic. The test suite pins it against a second,
//! independent arctangent identity.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::fourier::PiLaurent;
use crate::rational::Rational;

/// Upper limit on requested decimal digits.
pub const MAX_DIGITS: usize = 10_000;

/// Guard digits added to every working precision.
pub const GUARD_DIGITS: usize = 10;

/// pi truncated (not rounded) to `digits` digits after the decimal point.
///
/// `digits` must lie in 1..=[`MAX_DIGITS`].
pub fn pi_digits(digits: usize) -> Result<String, Error> {
    if digits == 0 || digits > MAX_DIGITS {
        return Err(Error::DigitsOutOfRange(digits));
    }
    let wp = digits + GUARD_DIGITS;
    Ok(fixed_to_decimal(&pi_fixed(wp), wp, digits))
}

/// pi * 10^wp, accurate to about one unit in the last place.
///
/// Summed at wp + 10 internal digits so that the truncation error of the
/// series terms (one unit each) stays far below the returned scale; the
/// final downscaling floor is the only error that survives.
pub(crate) fn pi_fixed(wp: usize) -> BigInt {
    let internal = wp + 10;
    let scale = pow10(internal);
    // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)
    let pi = 16 * arctan_unit_fraction(5, &scale) - 4 * arctan_unit_fraction(239, &scale);
    pi / pow10(10)
}

/// arctan(1/m) * scale by the alternating series
/// sum_{i>=0} (-1)^i / ((2i+1) m^{2i+1}), each term floor-divided.
pub(crate) fn arctan_unit_fraction(m: u64, scale: &BigInt) -> BigInt {
    let m_sq = BigInt::from(m) * m;
    let mut power = scale / m; // scale / m^{2i+1}
    let mut sum = BigInt::zero();
    let mut i = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * i + 1);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &m_sq;
        i += 1;
    }
    sum
}

pub(crate) fn pow10(exp: usize) -> BigInt {
    BigInt::from(10u32).pow(exp as u32)
}

/// floor(q * 10^wp) for q >= 0 (truncation toward zero in general).
pub(crate) fn fixed_from_rational(q: &Rational, wp: usize) -> BigInt {
    q.numer() * pow10(wp) / q.denom()
}

/// Fixed-point product at scale wp.
pub(crate) fn fixed_mul(a: &BigInt, b: &BigInt, wp: usize) -> BigInt {
    a * b / pow10(wp)
}

/// Fixed-point quotient at scale wp.
pub(crate) fn fixed_div(a: &BigInt, b: &BigInt, wp: usize) -> BigInt {
    a * pow10(wp) / b
}

/// Fixed-point a^exp at scale wp by repeated multiplication.
pub(crate) fn fixed_pow(a: &BigInt, exp: usize, wp: usize) -> BigInt {
    let mut out = pow10(wp);
    for _ in 0..exp {
        out = fixed_mul(&out, a, wp);
    }
    out
}

/// Renders a fixed-point value at scale wp with exactly `digits` fractional
/// digits (truncating toward zero), in plain decimal notation. `digits == 0`
/// yields the integer part alone.
pub(crate) fn fixed_to_decimal(x: &BigInt, wp: usize, digits: usize) -> String {
    assert!(
        digits <= wp,
        "cannot print more digits than the working precision"
    );
    let scaled: BigInt = x.abs() / pow10(wp - digits);
    let sign = if x.is_negative() && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    let mut body = scaled.to_string();
    if digits == 0 {
        return format!("{sign}{body}");
    }
    if body.len() <= digits {
        body = format!("{:0>width$}", body, width = digits + 1);
    }
    let split = body.len() - digits;
    format!("{sign}{}.{}", &body[..split], &body[split..])
}

/// Evaluates a Laurent expression in pi to a truncated decimal string.
/// Display-only; exact comparisons stay on the symbolic form.
pub fn pi_laurent_decimal(expr: &PiLaurent, digits: usize) -> Result<String, Error> {
    if digits > MAX_DIGITS {
        return Err(Error::DigitsOutOfRange(digits));
    }
    let wp = digits + GUARD_DIGITS;
    let pi = pi_fixed(wp);
    let mut total = BigInt::zero();
    for (&e, r) in expr.terms() {
        let coeff = fixed_from_rational(r, wp);
        let term = match e {
            0 => coeff,
            e if e > 0 => fixed_mul(&coeff, &fixed_pow(&pi, e as usize, wp), wp),
            e => fixed_div(&coeff, &fixed_pow(&pi, (-e) as usize, wp), wp),
        };
        total += term;
    }
    Ok(fixed_to_decimal(&total, wp, digits))
}
