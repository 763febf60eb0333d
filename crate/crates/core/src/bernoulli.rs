//! Bernoulli numbers, Bernoulli polynomials and Faulhaber power-sum
//! polynomials.
//!
//! The numbers are built by the classical recursion
//! B_j = -(1/(j+1)) sum_{l<j} C(j+1, l) B_l with B_0 = 1 and memoized in a
//! process-wide cache. A second, fully independent construction through the
//! generating function x/(e^x - 1) is provided as an oracle, as are three
//! routes to the power sums S_p(m) = sum_{n=1}^{m-1} n^p: the closed
//! Bernoulli form, the recursive construction, and literal summation.

use std::sync::Mutex;

use crate::combinatorics::{binomial, factorial};
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::series::Series;

use num_bigint::BigInt;

/// Growable table of Bernoulli numbers; index j holds B_j.
///
/// Filling is idempotent, so a cache may be shared across threads behind a
/// lock (as the crate-level one is) or recomputed independently with
/// identical results.
#[derive(Debug, Default)]
pub struct BernoulliCache {
    values: Vec<Rational>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache { values: Vec::new() }
    }

    /// B_j, computing and caching every predecessor on the way.
    pub fn get(&mut self, j: usize) -> Rational {
        if self.values.is_empty() {
            self.values.push(Rational::one());
        }
        while self.values.len() <= j {
            let m = self.values.len(); // computing B_m
            let sum: Rational = (0..m)
                .map(|l| Rational::from(binomial(m + 1, l)) * &self.values[l])
                .sum();
            let b = -sum / Rational::from_integer(m as u64 + 1);
            self.values.push(b);
        }
        self.values[j].clone()
    }
}

static CACHE: Mutex<BernoulliCache> = Mutex::new(BernoulliCache { values: Vec::new() });

/// The j-th Bernoulli number B_j, by the recursion
/// B_j = -(1/(j+1)) sum_{l=0}^{j-1} C(j+1, l) B_l, B_0 = 1.
///
/// Uses the sign convention B_1 = -1/2.
pub fn bernoulli_number(j: usize) -> Rational {
    CACHE.lock().unwrap().get(j)
}

/// [B_0, ..., B_{order-1}] read off the generating function
/// G(x) = x/(e^x - 1): B_j is j! times the x^j coefficient of the series
/// reciprocal of (e^x - 1)/x = sum_j x^j/(j+1)!.
///
/// Shares nothing with the recursion in [`bernoulli_number`], which makes it
/// an independent oracle for it.
pub fn bernoulli_numbers_via_gf(order: usize) -> Vec<Rational> {
    if order == 0 {
        return Vec::new();
    }
    let denominator = Series::from_fn(order, |j| Rational::new(1, factorial(j + 1)));
    let g = denominator
        .reciprocal()
        .expect("constant term is 1/1! = 1, always invertible");
    g.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| c * Rational::from(factorial(j)))
        .collect()
}

/// The p-th Bernoulli polynomial B_p(t) = sum_{k=0}^{p} B_k C(p, k) t^{p-k},
/// a monic polynomial of degree exactly p.
pub fn bernoulli_polynomial(p: usize) -> Polynomial {
    let mut coeffs = vec![Rational::zero(); p + 1];
    for k in 0..=p {
        coeffs[p - k] = Rational::from(binomial(p, k)) * bernoulli_number(k);
    }
    Polynomial::new(coeffs)
}

/// The power-sum polynomial S_p with S_p(m) = sum_{n=1}^{m-1} n^p for
/// integers m >= 1, in closed Bernoulli form:
/// S_p(t) = (1/(p+1)) sum_{j=0}^{p} B_j C(p+1, j) t^{p-j+1} for p >= 1,
/// and S_0(t) = t - 1.
pub fn power_sum_polynomial(p: usize) -> Polynomial {
    if p == 0 {
        // The closed formula would give t; the defining sum needs t - 1.
        return Polynomial::new(vec![-Rational::one(), Rational::one()]);
    }
    let mut coeffs = vec![Rational::zero(); p + 2];
    let scale = Rational::new(1, p as u64 + 1);
    for j in 0..=p {
        coeffs[p - j + 1] = Rational::from(binomial(p + 1, j)) * bernoulli_number(j) * &scale;
    }
    Polynomial::new(coeffs)
}

/// S_p built by the recursion
/// S_p(t) = (1/(p+1)) (t^{p+1} - 1 - sum_{k=0}^{p-1} C(p+1, k) S_k(t))
/// from S_0(t) = t - 1.
///
/// Independent of the Bernoulli-number route in [`power_sum_polynomial`].
pub fn power_sum_recursive(p: usize) -> Polynomial {
    let mut table: Vec<Polynomial> = Vec::with_capacity(p + 1);
    table.push(Polynomial::new(vec![-Rational::one(), Rational::one()]));
    for q in 1..=p {
        let mut acc = Polynomial::monomial(Rational::one(), q + 1) - Polynomial::one();
        for (k, s_k) in table.iter().enumerate() {
            acc = acc - s_k.scale(&Rational::from(binomial(q + 1, k)));
        }
        table.push(acc.scale(&Rational::new(1, q as u64 + 1)));
    }
    table.pop().expect("table holds S_0..=S_p")
}

/// Literal summation sum_{n=1}^{m-1} n^p, as an integer-valued Rational.
/// m = 1 gives the empty sum 0.
pub fn power_sum_bruteforce(p: usize, m: u64) -> Rational {
    let mut total = BigInt::from(0u32);
    for n in 1..m {
        total += BigInt::from(n).pow(p as u32);
    }
    Rational::from(total)
}

/// The generating function of the Bernoulli polynomials,
/// G(x, t) = x e^{tx}/(e^x - 1), truncated at `order`: the coefficient of
/// x^p is the polynomial B_p(t)/p!.
///
/// Built as the product of the e^{tx} series (coefficient of x^p is t^p/p!)
/// with the reciprocal series underlying [`bernoulli_numbers_via_gf`].
pub fn bernoulli_poly_gf(order: usize) -> Series<Polynomial> {
    if order == 0 {
        return Series::new(Vec::new());
    }
    let exp_tx = Series::from_fn(order, |p| {
        Polynomial::monomial(Rational::new(1, factorial(p)), p)
    });
    let denominator = Series::from_fn(order, |j| Rational::new(1, factorial(j + 1)));
    let g = denominator
        .reciprocal()
        .expect("constant term is 1, always invertible");
    let g_lifted = Series::new(
        g.coeffs()
            .iter()
            .map(|c| Polynomial::constant(c.clone()))
            .collect(),
    );
    exp_tx.mul(&g_lifted)
}
