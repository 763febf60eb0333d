//! Closed-form zeta values, Bernoulli inner products and the Parseval
//! verification harness.
//!
//! zeta(2k) = (-1)^{k-1} pi^{2k} 2^{2k-1} B_{2k} / (2k)! is held exactly as
//! a rational coefficient times a power of pi. At negative integers,
//! zeta(1-2k) = -B_{2k}/(2k) and the negative even integers are the trivial
//! zeros. The Parseval harness checks the identity
//! integral_0^1 B_k^2 = sum_n |c_n(B_k)|^2 numerically, certifying the
//! truncation with an integral-comparison tail bound.

use std::fmt;

use num_bigint::BigInt;

use crate::bernoulli::{bernoulli_number, bernoulli_polynomial};
use crate::combinatorics::factorial;
use crate::error::Error;
use crate::pi::{
    fixed_div, fixed_from_rational, fixed_pow, fixed_to_decimal, pi_fixed, GUARD_DIGITS, MAX_DIGITS,
};
use crate::rational::Rational;

/// An exact zeta value at a positive even integer: coeff * pi^pi_power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaValue {
    pub coeff: Rational,
    pub pi_power: usize,
}

impl fmt::Display for ZetaValue {
    /// Canonical text form, e.g. "pi^2/6" or "691*pi^12/638512875".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.coeff.numer();
        let den = self.coeff.denom();
        let one = BigInt::from(1u32);
        if num.magnitude() == one.magnitude() {
            if self.coeff.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "pi^{}", self.pi_power)?;
        } else {
            write!(f, "{num}*pi^{}", self.pi_power)?;
        }
        if den != &one {
            write!(f, "/{den}")?;
        }
        Ok(())
    }
}

/// zeta(2k) for k >= 1, exactly:
/// coeff = (-1)^{k-1} 2^{2k-1} B_{2k} / (2k)!, pi_power = 2k.
pub fn zeta_even(k: usize) -> ZetaValue {
    assert!(k >= 1, "zeta_even is defined for k >= 1");
    let sign = if k % 2 == 1 {
        Rational::one()
    } else {
        -Rational::one()
    };
    let two_pow = Rational::from(BigInt::from(2u32).pow(2 * k as u32 - 1));
    let coeff = sign * two_pow * bernoulli_number(2 * k) / Rational::from(factorial(2 * k));
    ZetaValue {
        coeff,
        pi_power: 2 * k,
    }
}

/// zeta(-m) for m >= 1: -B_{2k}/(2k) at odd m = 2k - 1, and the trivial
/// zeros at even m.
pub fn zeta_negative(m: usize) -> Rational {
    assert!(m >= 1, "zeta_negative computes zeta(-m) for m >= 1");
    if m % 2 == 0 {
        return Rational::zero();
    }
    let two_k = m + 1;
    -bernoulli_number(two_k) / Rational::from_integer(two_k as u64)
}

/// The closed form for integral_0^1 B_k(t) B_l(t) dt with 1 <= k <= l:
/// (-1)^{k-1} l! k! B_{l+k} / (l+k)!. Arguments in the other order are
/// swapped first; either index at zero is a domain error.
pub fn inner_product_closed(k: usize, l: usize) -> Result<Rational, Error> {
    if k == 0 || l == 0 {
        return Err(Error::InnerProductIndexZero);
    }
    let (k, l) = if k <= l { (k, l) } else { (l, k) };
    let sign = if k % 2 == 1 {
        Rational::one()
    } else {
        -Rational::one()
    };
    Ok(
        sign * Rational::from(factorial(l))
            * Rational::from(factorial(k))
            * bernoulli_number(l + k)
            / Rational::from(factorial(l + k)),
    )
}

/// The same inner product integrated directly from the polynomial
/// coefficients: an oracle for [`inner_product_closed`], and total on
/// k, l >= 0.
pub fn inner_product_exact(k: usize, l: usize) -> Rational {
    let product = bernoulli_polynomial(k) * bernoulli_polynomial(l);
    product.integral(&Rational::zero(), &Rational::one())
}

/// zeta(2k) evaluated to `digits` truncated fractional digits, with pi at
/// `digits` + 10 guard digits. `digits` may be 0 (integer part only).
pub fn zeta_even_decimal(k: usize, digits: usize) -> Result<String, Error> {
    if digits > MAX_DIGITS {
        return Err(Error::DigitsOutOfRange(digits));
    }
    let value = zeta_even(k);
    let wp = digits + GUARD_DIGITS;
    let pi_pow = fixed_pow(&pi_fixed(wp), value.pi_power, wp);
    let scaled = pi_pow * value.coeff.numer() / value.coeff.denom();
    Ok(fixed_to_decimal(&scaled, wp, digits))
}

/// Outcome of one numerical Parseval check for B_k truncated at N modes.
///
/// `lhs` is the exact value of integral_0^1 B_k^2; `partial` the truncated
/// right side sum_{0<|n|<=N} |c_n(B_k)|^2 at working precision; `residual`
/// their difference, which the dropped tail makes strictly positive; and
/// `tail_bound` the integral-comparison bound the residual must not exceed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsevalReport {
    pub k: usize,
    pub terms: u64,
    pub lhs: Rational,
    pub partial: String,
    pub residual: String,
    pub tail_bound: String,
    pub pass: bool,
}

/// Verifies Parseval's identity for B_k numerically with N = `terms` modes
/// on each side of zero, at `digits` requested fractional digits.
///
/// The truncated right side is
/// 2 (k!)^2 / (2 pi)^{2k} * sum_{n=1}^{N} n^{-2k}, and the dropped tail is
/// certified by comparison with the integral of x^{-2k}:
/// sum_{n>N} n^{-2k} <= N^{1-2k}/(2k-1). The report passes iff
/// residual <= tail_bound, compared at the full working precision.
///
/// The tail itself shrinks like N^{1-2k}, far below 10^-digits for large k
/// and N, so the working precision extends past the requested digits by the
/// tail's own magnitude; otherwise neither the positivity of the residual
/// nor the bound comparison could be resolved. Report decimals carry the
/// full working precision.
pub fn parseval_verify(k: usize, terms: u64, digits: usize) -> Result<ParsevalReport, Error> {
    assert!(k >= 1, "parseval_verify is defined for k >= 1");
    assert!(terms >= 1, "at least one mode is required");
    if digits == 0 || digits > MAX_DIGITS {
        return Err(Error::DigitsOutOfRange(digits));
    }
    let tail_digits = (2 * k - 1) * terms.to_string().len() + GUARD_DIGITS;
    let wp = digits + GUARD_DIGITS + tail_digits;

    // prefactor 2 (k!)^2 / (2 pi)^{2k} in fixed point
    let kf = Rational::from(factorial(k));
    let rational_part = Rational::from_integer(2) * &kf * &kf
        / Rational::from(BigInt::from(2u32).pow(2 * k as u32));
    let pi_pow = fixed_pow(&pi_fixed(wp), 2 * k, wp);
    let prefactor = fixed_div(&fixed_from_rational(&rational_part, wp), &pi_pow, wp);

    // partial sum over n = 1..=N; every term divides the prefactor by the
    // exact integer n^{2k}, so accumulation order cannot change the result
    let mut partial = BigInt::from(0u32);
    for n in 1..=terms {
        partial += &prefactor / BigInt::from(n).pow(2 * k as u32);
    }

    let lhs = inner_product_closed(k, k).expect("k >= 1");
    let residual = fixed_from_rational(&lhs, wp) - &partial;

    let tail_denominator =
        BigInt::from(2 * k as u64 - 1) * BigInt::from(terms).pow(2 * k as u32 - 1);
    let tail_bound = &prefactor / tail_denominator;

    let pass = residual <= tail_bound;
    Ok(ParsevalReport {
        k,
        terms,
        lhs,
        partial: fixed_to_decimal(&partial, wp, wp),
        residual: fixed_to_decimal(&residual, wp, wp),
        tail_bound: fixed_to_decimal(&tail_bound, wp, wp),
        pass,
    })
}
