//! Truncated formal power series over a coefficient ring.
//!
//! A series of order N stores the coefficients of x^0 .. x^{N-1}; everything
//! from x^N on is unknown. Arithmetic on two series truncates to the smaller
//! order, which is exactly what the generating-function oracles need: only
//! the shared prefix is ever compared.

use crate::error::Error;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Ring of series coefficients. Implemented for [`Rational`] (the series
/// G(x)) and [`Polynomial`] (the bivariate series G(x, t)).
pub trait Coefficient: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, when one exists in the ring.
    fn invert(&self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn invert(&self) -> Option<Self> {
        self.recip()
    }
}

impl Coefficient for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    /// Only nonzero constants are invertible in the polynomial ring.
    fn invert(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => self.coeff(0).recip().map(Polynomial::constant),
            _ => None,
        }
    }
}

/// A formal power series truncated at `order` (exclusive).
#[derive(Debug, Clone, PartialEq)]
pub struct Series<C: Coefficient> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Series<C> {
    /// Series with the given coefficients of x^0, x^1, ...; the truncation
    /// order is the list length.
    pub fn new(coeffs: Vec<C>) -> Self {
        Series { coeffs }
    }

    /// Series whose coefficient of x^j is `f(j)`, for j < order.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series {
            coeffs: (0..order).map(f).collect(),
        }
    }

    /// The constant series 1 at the given truncation order.
    pub fn one(order: usize) -> Self {
        Series::from_fn(order, |j| if j == 0 { C::one() } else { C::zero() })
    }

    /// Truncation order (exclusive): coefficients of x^0 .. x^{order-1} are
    /// known.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of x^j. Panics if j >= order.
    pub fn coeff(&self, j: usize) -> &C {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// The same series truncated to a smaller order.
    pub fn truncated(&self, order: usize) -> Self {
        Series {
            coeffs: self.coeffs[..order.min(self.coeffs.len())].to_vec(),
        }
    }

    /// Cauchy product, truncated to the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |k| {
            let mut sum = C::zero();
            for i in 0..=k {
                let (a, b) = (&self.coeffs[i], &rhs.coeffs[k - i]);
                if !a.is_zero() && !b.is_zero() {
                    sum = sum.add(&a.mul(b));
                }
            }
            sum
        })
    }

    /// Multiplicative inverse up to the truncation order: the result B
    /// satisfies self * B = 1 + O(x^order).
    ///
    /// Fails when the constant term is not invertible (in particular for a
    /// zero constant term or an order-0 series).
    pub fn reciprocal(&self) -> Result<Self, Error> {
        let inv0 = self
            .coeffs
            .first()
            .and_then(Coefficient::invert)
            .ok_or(Error::NonInvertibleSeries)?;
        let mut out: Vec<C> = Vec::with_capacity(self.order());
        out.push(inv0.clone());
        for n in 1..self.order() {
            // b_n = -a_0^{-1} * sum_{j=1}^{n} a_j b_{n-j}
            let mut sum = C::zero();
            for j in 1..=n {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    sum = sum.add(&a.mul(&out[n - j]));
                }
            }
            out.push(inv0.mul(&sum).neg());
        }
        Ok(Series { coeffs: out })
    }
}
