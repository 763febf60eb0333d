//! Dense univariate polynomials over [`Rational`] in the variable t.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// A polynomial stored as a dense coefficient list: `coeffs[i]` is the
/// coefficient of t^i. No trailing zeros are stored; the zero polynomial is
/// the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending-power coefficients, dropping
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// c * t^power.
    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Polynomial { coeffs }
    }

    /// Ascending-power coefficients, without trailing zeros.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of t^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest power with a nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact evaluation at t by Horner's rule.
    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Exact formal derivative.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i as u64))
            .collect();
        Polynomial::new(coeffs)
    }

    /// The antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Polynomial {
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / Rational::from_integer(i as u64 + 1)),
        );
        Polynomial::new(coeffs)
    }

    /// Exact definite integral over [a, b] via the antiderivative.
    pub fn integral(&self, a: &Rational, b: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    /// The polynomial scaled by a constant.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for Polynomial {
    /// Canonical text form: descending powers, e.g. "t^2 - t + 1/6".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let unit = mag == Rational::one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}*t^{i}")?,
            }
        }
        Ok(())
    }
}
