//! Exact computation of Bernoulli numbers and polynomials, Faulhaber
//! power-sum polynomials, Fourier coefficients of polynomials on [0, 1],
//! and the closed-form values of the Riemann zeta function at even positive
//! and at negative integers.
//!
//! Everything is exact rational or symbolic arithmetic; floating point never
//! enters. Each closed form ships with an independent construction that the
//! test suite compares it against:
//!
//! * Bernoulli numbers: recursion vs. the generating function x/(e^x - 1);
//! * power sums: closed Bernoulli form vs. recursion vs. literal summation;
//! * Fourier coefficients: closed form vs. integration by parts;
//! * inner products: closed form vs. direct polynomial integration;
//! * zeta(2k): exact coefficients vs. a truncated Parseval sum with a
//!   rigorous tail bound, evaluated in fixed-point integer arithmetic.

pub mod bernoulli;
pub mod combinatorics;
pub mod error;
pub mod fourier;
pub mod pi;
pub mod polynomial;
pub mod rational;
pub mod series;
pub mod zeta;

pub use bernoulli::{
    bernoulli_number, bernoulli_numbers_via_gf, bernoulli_poly_gf, bernoulli_polynomial,
    power_sum_bruteforce, power_sum_polynomial, power_sum_recursive, BernoulliCache,
};
pub use combinatorics::{binomial, factorial};
pub use error::Error;
pub use fourier::{
    fourier_coeff_closed, fourier_coeff_ibp, fourier_modulus_squared, FourierCoeff, FourierExact,
    PiLaurent,
};
pub use pi::{pi_digits, pi_laurent_decimal, GUARD_DIGITS, MAX_DIGITS};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use series::{Coefficient, Series};
pub use zeta::{
    inner_product_closed, inner_product_exact, parseval_verify, zeta_even, zeta_even_decimal,
    zeta_negative, ParsevalReport, ZetaValue,
};
