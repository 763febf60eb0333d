//! Exact Fourier coefficients of polynomials on [0, 1].
//!
//! For a polynomial p and a nonzero frequency n, the coefficient
//! c_n(p) = integral_0^1 p(t) e^{-2 pi i n t} dt is an exact element of the
//! ring Q[(2 pi i n)^{-1}], represented sparsely as a map from the power m
//! to the rational coefficient of (2 pi i n)^{-m}. Working symbolically
//! turns every Fourier statement into an exact equality, with no tolerances
//! anywhere.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::combinatorics::factorial;
use crate::error::Error;
use crate::pi;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// An exact value sum_m q_m (2 pi i n)^{-m} at a fixed nonzero frequency n.
///
/// Canonical sparse form: only nonzero q_m are stored, so structural
/// equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierExact {
    n: i64,
    terms: BTreeMap<usize, Rational>,
}

impl FourierExact {
    /// Builds a value at frequency n from (power, coefficient) pairs; zero
    /// coefficients are dropped. Panics if n = 0 or a power is 0.
    pub fn new(n: i64, terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        assert!(n != 0, "FourierExact frequency must be nonzero");
        let terms: BTreeMap<usize, Rational> =
            terms.into_iter().filter(|(_, q)| !q.is_zero()).collect();
        assert!(
            terms.keys().all(|&m| m >= 1),
            "powers of (2 pi i n)^{{-1}} start at 1"
        );
        FourierExact { n, terms }
    }

    /// The exact zero at frequency n.
    pub fn zero(n: i64) -> Self {
        FourierExact::new(n, [])
    }

    pub fn frequency(&self) -> i64 {
        self.n
    }

    /// The nonzero terms, as (power m, coefficient of (2 pi i n)^{-m}),
    /// in increasing m.
    pub fn terms(&self) -> &BTreeMap<usize, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// real/imaginary parts as truncated decimal strings, dividing out the
    /// powers of pi at high precision. Display-only: exact comparisons must
    /// use the term map itself.
    pub fn eval_decimal(&self, digits: usize) -> Result<(String, String), Error> {
        let (re, im) = self.split_real_imaginary();
        Ok((
            pi::pi_laurent_decimal(&re, digits)?,
            pi::pi_laurent_decimal(&im, digits)?,
        ))
    }

    /// Splits the value into real and imaginary parts, each a Laurent
    /// expression in pi: i^{-m} cycles through 1, -i, -1, i as m runs over
    /// 0, 1, 2, 3 mod 4, and (2 pi i n)^{-m} = i^{-m} (2n)^{-m} pi^{-m}.
    fn split_real_imaginary(&self) -> (PiLaurent, PiLaurent) {
        let mut re = Vec::new();
        let mut im = Vec::new();
        let two_n: BigInt = BigInt::from(self.n) * 2;
        for (&m, q) in &self.terms {
            let base = q * Rational::new(1, two_n.pow(m as u32));
            match m % 4 {
                0 => re.push((-(m as i64), base)),
                1 => im.push((-(m as i64), -base)),
                2 => re.push((-(m as i64), -base)),
                _ => im.push((-(m as i64), base)),
            }
        }
        (PiLaurent::new(re), PiLaurent::new(im))
    }
}

impl fmt::Display for FourierExact {
    /// Canonical text form: "q/(2*pi*i*n)^m" terms in increasing m, e.g.
    /// "-1/(2*pi*i*n)^1"; signs are folded into the joining operator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, q)) in self.terms.iter().enumerate() {
            if i == 0 {
                if q.is_negative() {
                    write!(f, "-")?;
                }
            } else if q.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}/(2*pi*i*n)^{}", q.abs(), m)?;
        }
        Ok(())
    }
}

/// A Laurent expression sum_e r_e pi^e with rational coefficients, sparse
/// over the exponent e. Houses squared moduli |c_n|^2, which only ever
/// carry negative even exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PiLaurent {
    terms: BTreeMap<i64, Rational>,
}

impl PiLaurent {
    /// Builds from (exponent, coefficient) pairs, dropping zeros and merging
    /// repeated exponents.
    pub fn new(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, r) in terms {
            let entry = map.entry(e).or_insert_with(Rational::zero);
            *entry = &*entry + r;
        }
        map.retain(|_, r| !r.is_zero());
        PiLaurent { terms: map }
    }

    pub fn zero() -> Self {
        PiLaurent::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms as (exponent of pi, coefficient), in increasing
    /// exponent.
    pub fn terms(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    /// Coefficient of pi^e (zero when absent).
    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        PiLaurent::new(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(&e, r)| (e, r.clone())),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut products = Vec::new();
        for (&e1, r1) in &self.terms {
            for (&e2, r2) in &rhs.terms {
                products.push((e1 + e2, r1 * r2));
            }
        }
        PiLaurent::new(products)
    }
}

impl fmt::Display for PiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, r)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{r}")?,
                1 => write!(f, "{r}*pi")?,
                _ => write!(f, "{r}*pi^{e}")?,
            }
        }
        Ok(())
    }
}

/// A Fourier coefficient of a polynomial: the n = 0 coefficient is the exact
/// rational mean of the polynomial, every other coefficient is an exact
/// element of Q[(2 pi i n)^{-1}].
#[derive(Debug, Clone, PartialEq)]
pub enum FourierCoeff {
    /// c_0 = integral_0^1 p(t) dt.
    Rational(Rational),
    /// c_n for n != 0.
    Exact(FourierExact),
}

impl FourierCoeff {
    pub fn is_zero(&self) -> bool {
        match self {
            FourierCoeff::Rational(r) => r.is_zero(),
            FourierCoeff::Exact(e) => e.is_zero(),
        }
    }
}

impl fmt::Display for FourierCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FourierCoeff::Rational(r) => write!(f, "{r}"),
            FourierCoeff::Exact(e) => write!(f, "{e}"),
        }
    }
}

/// The closed form for the Fourier coefficients of the Bernoulli
/// polynomials: c_n(B_k) = -k!/(2 pi i n)^k for n != 0, and c_0(B_k) = 0.
///
/// k = 0 is a domain error: the closed form starts at k = 1.
pub fn fourier_coeff_closed(k: usize, n: i64) -> Result<FourierCoeff, Error> {
    if k == 0 {
        return Err(Error::FourierIndexZero);
    }
    if n == 0 {
        return Ok(FourierCoeff::Rational(Rational::zero()));
    }
    let q = -Rational::from(factorial(k));
    Ok(FourierCoeff::Exact(FourierExact::new(n, [(k, q)])))
}

/// The general integration-by-parts oracle: the exact Fourier coefficient of
/// an arbitrary polynomial.
///
/// For n != 0, repeated integration by parts (using e^{-2 pi i n} = 1) gives
/// c_n(p) = sum_{j=0}^{deg p} -(p^{(j)}(1) - p^{(j)}(0)) (2 pi i n)^{-(j+1)}.
/// For n = 0 the coefficient is the exact integral of p over [0, 1].
pub fn fourier_coeff_ibp(p: &Polynomial, n: i64) -> FourierCoeff {
    if n == 0 {
        return FourierCoeff::Rational(p.integral(&Rational::zero(), &Rational::one()));
    }
    let mut terms = Vec::new();
    let mut deriv = p.clone();
    let mut j = 0;
    while !deriv.is_zero() {
        let delta = deriv.eval(&Rational::one()) - deriv.eval(&Rational::zero());
        terms.push((j + 1, -delta));
        deriv = deriv.derivative();
        j += 1;
    }
    FourierCoeff::Exact(FourierExact::new(n, terms))
}

/// Exact squared modulus |sum_m q_m (2 pi i n)^{-m}|^2 as a Laurent
/// expression in pi: the value splits into real and imaginary parts through
/// the powers of i, and the two squares are summed.
pub fn fourier_modulus_squared(f: &FourierExact) -> PiLaurent {
    let (re, im) = f.split_real_imaginary();
    re.mul(&re).add(&im.mul(&im))
}
