//! The cross-oracle verification suite behind `basel verify`.
//!
//! Every closed form in the library is compared against its independent
//! construction over a fixed grid, and Parseval's identity is checked
//! numerically for each k up to the requested bound. Nothing here panics on
//! a mismatch; each check reports pass/fail so CI gets a full picture from
//! one run.

use basel_core::{
    bernoulli_number, bernoulli_numbers_via_gf, bernoulli_polynomial, fourier_coeff_closed,
    fourier_coeff_ibp, inner_product_closed, inner_product_exact, parseval_verify,
    power_sum_bruteforce, power_sum_polynomial, power_sum_recursive, ParsevalReport, Rational,
};

/// One named check and whether it held.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

/// Everything `verify` ran, in execution order.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub max_k: usize,
    pub terms: u64,
    pub checks: Vec<Check>,
    pub parseval: Vec<ParsevalReport>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.parseval.iter().all(|r| r.pass)
    }
}

/// Runs the full suite: recursion vs generating function, Faulhaber closed
/// form vs brute force and vs recursion, the Fourier closed form vs the
/// integration-by-parts oracle, the inner-product closed form vs direct
/// integration, and a Parseval report for every k <= max_k with N = terms.
pub fn verify_all(max_k: usize, terms: u64) -> VerifyReport {
    let mut checks = Vec::new();

    let gf = bernoulli_numbers_via_gf(61);
    checks.push(Check {
        name: "bernoulli recursion vs generating function for j <= 60".into(),
        pass: gf
            .iter()
            .enumerate()
            .all(|(j, b)| b == &bernoulli_number(j)),
    });

    checks.push(Check {
        name: "faulhaber closed form vs brute force for p <= 12, m in {1,2,10,100,1000}".into(),
        pass: (0..=12).all(|p| {
            let s = power_sum_polynomial(p);
            [1u64, 2, 10, 100, 1000]
                .iter()
                .all(|&m| s.eval(&Rational::from_integer(m)) == power_sum_bruteforce(p, m))
        }),
    });

    checks.push(Check {
        name: "faulhaber closed form vs recursive construction for p <= 20".into(),
        pass: (0..=20).all(|p| power_sum_polynomial(p) == power_sum_recursive(p)),
    });

    checks.push(Check {
        name: "fourier closed form vs integration by parts for k <= 10, |n| <= 20".into(),
        pass: (1..=10).all(|k| {
            let poly = bernoulli_polynomial(k);
            (-20..=20)
                .all(|n| fourier_coeff_closed(k, n).expect("k >= 1") == fourier_coeff_ibp(&poly, n))
        }),
    });

    checks.push(Check {
        name: "inner product closed form vs direct integration for k, l <= 12".into(),
        pass: (1..=12).all(|k| {
            (k..=12).all(|l| {
                inner_product_closed(k, l).expect("k, l >= 1") == inner_product_exact(k, l)
            })
        }),
    });

    let parseval = (1..=max_k)
        .map(|k| parseval_verify(k, terms, 30).expect("30 digits is in range"))
        .collect();

    VerifyReport {
        max_k,
        terms,
        checks,
        parseval,
    }
}
