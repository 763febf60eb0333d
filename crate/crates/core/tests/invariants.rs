//! Cross-cutting invariant suites: every identity the library relies on,
//! checked exactly over the ranges the closed forms are used in, plus
//! deterministic randomized property checks for the arithmetic layer.

use basel_core::*;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Small deterministic generator so the randomized checks are reproducible.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn rational(&mut self) -> Rational {
        let num = (self.next() % 19) as i64 - 9;
        let den = (self.next() % 9) as i64 + 1;
        Rational::new(num, den)
    }

    fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    fn polynomial(&mut self, max_degree: usize) -> Polynomial {
        let degree = (self.next() as usize) % (max_degree + 1);
        Polynomial::new((0..=degree).map(|_| self.rational()).collect())
    }
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn assert_canonical(r: &Rational) {
    assert!(
        r.denom() > &BigInt::zero(),
        "denominator must be positive: {r}"
    );
    assert_eq!(
        gcd(r.numer(), r.denom()),
        BigInt::from(1u32),
        "not reduced: {r}"
    );
    if r.is_zero() {
        assert_eq!(r.denom(), &BigInt::from(1u32), "zero must be 0/1");
    }
}

#[test]
fn rational_arithmetic_stays_canonical() {
    let mut rng = Lcg(7);
    for _ in 0..500 {
        let a = rng.rational();
        let b = rng.rational();
        assert_canonical(&(&a + &b));
        assert_canonical(&(&a - &b));
        assert_canonical(&(&a * &b));
        if !b.is_zero() {
            assert_canonical(&(&a / &b));
        }
        assert_canonical(&-&a);
    }
}

#[test]
fn integral_is_antisymmetric_in_the_endpoints() {
    let mut rng = Lcg(11);
    for _ in 0..100 {
        let p = rng.polynomial(6);
        let a = rng.rational();
        let b = rng.rational();
        assert_eq!(p.integral(&a, &b), -p.integral(&b, &a));
    }
}

#[test]
fn fundamental_theorem_of_calculus() {
    let mut rng = Lcg(13);
    for _ in 0..100 {
        let p = rng.polynomial(10);
        let a = rng.rational();
        let b = rng.rational();
        assert_eq!(p.derivative().integral(&a, &b), p.eval(&b) - p.eval(&a));
    }
}

#[test]
fn series_times_reciprocal_is_one() {
    let mut rng = Lcg(17);
    for _ in 0..50 {
        let order = (rng.next() as usize) % 16 + 1;
        let mut coeffs = vec![rng.nonzero_rational()];
        coeffs.extend((1..order).map(|_| rng.rational()));
        let a = Series::new(coeffs);
        let product = a.mul(&a.reciprocal().unwrap());
        assert_eq!(product, Series::one(order));
    }
}

#[test]
fn bernoulli_recursion_agrees_with_generating_function() {
    let via_gf = bernoulli_numbers_via_gf(61);
    for (j, b) in via_gf.iter().enumerate() {
        assert_eq!(b, &bernoulli_number(j), "B_{j}");
        assert_canonical(b);
    }
}

#[test]
fn odd_bernoulli_numbers_vanish() {
    for k in 1..=30 {
        assert!(bernoulli_number(2 * k + 1).is_zero(), "B_{}", 2 * k + 1);
    }
}

#[test]
fn bernoulli_polynomial_boundary_values() {
    for p in 2..=30 {
        let b = bernoulli_polynomial(p);
        let bp = bernoulli_number(p);
        assert_eq!(b.eval(&Rational::zero()), bp, "B_{p}(0)");
        assert_eq!(b.eval(&Rational::one()), bp, "B_{p}(1)");
    }
}

#[test]
fn bernoulli_derivative_ladder() {
    for p in 1..=30 {
        let expected = bernoulli_polynomial(p - 1).scale(&Rational::from_integer(p as u64));
        assert_eq!(bernoulli_polynomial(p).derivative(), expected, "B_{p}'");
    }
}

#[test]
fn power_sum_derivative_is_bernoulli_polynomial() {
    for p in 0..=20 {
        assert_eq!(
            power_sum_polynomial(p).derivative(),
            bernoulli_polynomial(p),
            "S_{p}'"
        );
    }
}

#[test]
fn faulhaber_matches_bruteforce() {
    for p in 0..=12 {
        let s = power_sum_polynomial(p);
        for m in [1u64, 2, 10, 100, 1000] {
            assert_eq!(
                s.eval(&Rational::from_integer(m)),
                power_sum_bruteforce(p, m),
                "S_{p}({m})"
            );
        }
    }
}

#[test]
fn power_sum_telescoping_form() {
    // S_p(t) = (B_{p+1}(t) - B_{p+1}) / (p + 1)
    for p in 1..=20 {
        let b_next = bernoulli_polynomial(p + 1);
        let shift = Polynomial::constant(bernoulli_number(p + 1));
        let expected = (&b_next - &shift).scale(&Rational::new(1, p as u64 + 1));
        assert_eq!(power_sum_polynomial(p), expected, "S_{p}");
    }
}

#[test]
fn power_sums_vanish_at_one() {
    for p in 1..=20 {
        assert!(
            power_sum_polynomial(p).eval(&Rational::one()).is_zero(),
            "S_{p}(1)"
        );
    }
}

#[test]
fn bernoulli_polynomials_have_mean_zero() {
    for k in 1..=20 {
        assert!(
            bernoulli_polynomial(k)
                .integral(&Rational::zero(), &Rational::one())
                .is_zero(),
            "c_0(B_{k})"
        );
    }
}

#[test]
fn fourier_closed_form_matches_ibp_oracle() {
    for k in 1..=10 {
        let poly = bernoulli_polynomial(k);
        for n in (-20..=20).filter(|&n| n != 0) {
            assert_eq!(
                fourier_coeff_ibp(&poly, n),
                fourier_coeff_closed(k, n).unwrap(),
                "c_{n}(B_{k})"
            );
        }
        assert_eq!(
            fourier_coeff_ibp(&poly, 0),
            fourier_coeff_closed(k, 0).unwrap(),
            "c_0(B_{k})"
        );
    }
}

#[test]
fn fourier_conjugate_symmetry() {
    // The coefficients of a real polynomial satisfy c_{-n} = conj(c_n).
    // In this representation every basis element flips to its conjugate
    // along with the frequency, (2 pi i (-n))^{-m} = (-1)^m (2 pi i n)^{-m}
    // = conj((2 pi i n)^{-m}) up to the real factor, so the stored rational
    // term map must be identical at n and -n.
    let mut rng = Lcg(23);
    for _ in 0..50 {
        let p = rng.polynomial(8);
        let n = (rng.next() % 30) as i64 + 1;
        let at_n = match fourier_coeff_ibp(&p, n) {
            FourierCoeff::Exact(f) => f,
            FourierCoeff::Rational(_) => unreachable!("n != 0"),
        };
        let at_minus_n = match fourier_coeff_ibp(&p, -n) {
            FourierCoeff::Exact(f) => f,
            FourierCoeff::Rational(_) => unreachable!("n != 0"),
        };
        assert_eq!(at_n.frequency(), -at_minus_n.frequency());
        assert_eq!(at_n.terms(), at_minus_n.terms());
        // Re-expressing the -n value in the n basis twists odd powers by
        // (-1)^m; doing it twice must come back.
        let reexpressed = FourierExact::new(
            n,
            at_minus_n.terms().iter().map(|(&m, q)| {
                let q = if m % 2 == 1 { -q } else { q.clone() };
                (m, q)
            }),
        );
        let back = FourierExact::new(
            -n,
            reexpressed.terms().iter().map(|(&m, q)| {
                let q = if m % 2 == 1 { -q } else { q.clone() };
                (m, q)
            }),
        );
        assert_eq!(back, at_minus_n);
    }
}

#[test]
fn modulus_squared_is_even_in_n() {
    for k in 1..=8 {
        for n in 1..=10 {
            let plus = match fourier_coeff_closed(k, n).unwrap() {
                FourierCoeff::Exact(f) => fourier_modulus_squared(&f),
                _ => unreachable!(),
            };
            let minus = match fourier_coeff_closed(k, -n).unwrap() {
                FourierCoeff::Exact(f) => fourier_modulus_squared(&f),
                _ => unreachable!(),
            };
            assert_eq!(plus, minus, "k={k} n={n}");
        }
    }
    // also for multi-term values from the IBP route
    let mut rng = Lcg(29);
    for _ in 0..30 {
        let p = rng.polynomial(7);
        let n = (rng.next() % 12) as i64 + 1;
        let at = |n: i64| match fourier_coeff_ibp(&p, n) {
            FourierCoeff::Exact(f) => fourier_modulus_squared(&f),
            _ => unreachable!(),
        };
        assert_eq!(at(n), at(-n));
    }
}

#[test]
fn fourier_coefficients_are_linear() {
    let mut rng = Lcg(31);
    for _ in 0..50 {
        let p = rng.polynomial(8);
        let q = rng.polynomial(8);
        let n = (rng.next() % 15) as i64 + 1;
        let sum = match fourier_coeff_ibp(&(&p + &q), n) {
            FourierCoeff::Exact(f) => f,
            _ => unreachable!(),
        };
        let (fp, fq) = match (fourier_coeff_ibp(&p, n), fourier_coeff_ibp(&q, n)) {
            (FourierCoeff::Exact(a), FourierCoeff::Exact(b)) => (a, b),
            _ => unreachable!(),
        };
        let termwise = FourierExact::new(
            n,
            fp.terms().iter().chain(fq.terms().iter()).fold(
                std::collections::BTreeMap::<usize, Rational>::new(),
                |mut acc, (&m, q)| {
                    let entry = acc.entry(m).or_insert_with(Rational::zero);
                    *entry = &*entry + q;
                    acc
                },
            ),
        );
        assert_eq!(sum, termwise);
    }
}

#[test]
fn fourier_recursion_ladder() {
    // c_n(B_k) = (k / (2 pi i n)) c_n(B_{k-1}): multiply the term map by k
    // and shift every power up by one.
    for k in 2..=10 {
        for n in [1i64, -1, 3, -7, 20] {
            let prev = match fourier_coeff_closed(k - 1, n).unwrap() {
                FourierCoeff::Exact(f) => f,
                _ => unreachable!(),
            };
            let expected = FourierExact::new(
                n,
                prev.terms()
                    .iter()
                    .map(|(&m, q)| (m + 1, q * Rational::from_integer(k as u64))),
            );
            let current = match fourier_coeff_closed(k, n).unwrap() {
                FourierCoeff::Exact(f) => f,
                _ => unreachable!(),
            };
            assert_eq!(current, expected, "k={k} n={n}");
        }
    }
}

#[test]
fn inner_product_closed_form_matches_integration() {
    for k in 1..=12 {
        for l in k..=12 {
            assert_eq!(
                inner_product_closed(k, l).unwrap(),
                inner_product_exact(k, l),
                "A({k},{l})"
            );
        }
    }
}

#[test]
fn parseval_prefactor_identity() {
    // The exact rational skeleton of the main theorem:
    // integral_0^1 B_k^2 = 2 (k!)^2 2^{-2k} * coeff(zeta(2k)).
    for k in 1..=15 {
        let lhs = inner_product_closed(k, k).unwrap();
        let prefactor = Rational::from_integer(2) * Rational::from(factorial(k)).pow(2)
            / Rational::from(BigInt::from(2u32).pow(2 * k as u32));
        assert_eq!(lhs, prefactor * zeta_even(k).coeff, "k={k}");
    }
}

#[test]
fn zeta_even_coefficients_are_positive() {
    for k in 1..=30 {
        assert!(zeta_even(k).coeff.is_positive(), "k={k}");
    }
}

#[test]
fn zeta_negative_matches_bernoulli() {
    for k in 1..=30 {
        assert_eq!(
            zeta_negative(2 * k - 1),
            -bernoulli_number(2 * k) / Rational::from_integer(2 * k as u64),
            "zeta({})",
            -(2 * k as i64 - 1)
        );
        assert!(zeta_negative(2 * k).is_zero(), "zeta({})", -(2 * k as i64));
    }
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Rational>();
    assert_send_sync::<Polynomial>();
    assert_send_sync::<Series<Rational>>();
    assert_send_sync::<Series<Polynomial>>();
    assert_send_sync::<FourierExact>();
    assert_send_sync::<PiLaurent>();
    assert_send_sync::<ZetaValue>();
    assert_send_sync::<ParsevalReport>();
    assert_send_sync::<BernoulliCache>();
}

#[test]
fn concurrent_cache_fills_are_identical() {
    let handles: Vec<_> = (0..8)
        .map(|_| {
            std::thread::spawn(|| {
                (0..=40)
                    .map(|j| bernoulli_number(j).to_string())
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    for r in &results[1..] {
        assert_eq!(r, &results[0]);
    }
}

#[test]
fn parseval_residuals_shrink_and_stay_bounded() {
    for k in 1..=5 {
        let mut previous: Option<Rational> = None;
        for n in [100u64, 1_000, 10_000] {
            let report = parseval_verify(k, n, 30).unwrap();
            assert!(report.pass, "tail bound failed for k={k} N={n}");
            let residual = Rational::from_decimal(&report.residual).unwrap();
            assert!(residual.is_positive(), "residual must be > 0, k={k} N={n}");
            if let Some(prev) = previous {
                assert!(residual < prev, "residual must shrink, k={k} N={n}");
            }
            previous = Some(residual);
        }
    }
}
