//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::{binom, Rational};

/// Dense polynomial; `coeffs[i]` multiplies `v^i`.
///
/// The highest stored coefficient is always nonzero; the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * v^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// `(a + b v)^n`, expanded binomially.
    pub fn linear_power(a: &Rational, b: &Rational, n: usize) -> Self {
        let n_i = n as i64;
        let coeffs = (0..=n)
            .map(|i| {
                let c = Rational::from_integer(binom(n_i, i as i64));
                c * num_traits::pow(a.clone(), n - i) * num_traits::pow(b.clone(), i)
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `v^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power carrying a nonzero coefficient; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Returns the constant polynomial's value, if it is one.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by `v^power`. Returns `None` unless every dropped coefficient is zero.
    pub fn shift_down(&self, power: usize) -> Option<Self> {
        if self.coeffs.iter().take(power).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(power).cloned().collect()))
    }

    /// `p(c v)`.
    pub fn substitute_scaled(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        Self::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    /// Nonzero `(power, coefficient)` pairs in increasing power.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*v")?,
                _ => write!(f, "({c})*v^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn trailing_zeros_trimmed() {
        let p = RationalPolynomial::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(RationalPolynomial::new(vec![int(0)]).is_zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
    }

    #[test]
    fn linear_power_expands() {
        // (1 + 4v)^2 = 1 + 8v + 16v^2
        let p = RationalPolynomial::linear_power(&int(1), &int(4), 2);
        assert_eq!(p.coeffs(), &[int(1), int(8), int(16)]);
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = RationalPolynomial::new(vec![int(1), int(1)]);
        let q = RationalPolynomial::new(vec![int(-1), int(1)]);
        let pq = &p * &q;
        assert_eq!(pq.coeffs(), &[int(-1), int(0), int(1)]);
        assert_eq!(pq.eval(&rat(1, 2)), rat(-3, 4));
        assert!((&p - &p).is_zero());
        assert_eq!((&p + &q).coeffs(), &[int(0), int(2)]);
        assert_eq!(pq.valuation(), Some(0));
    }

    #[test]
    fn shift_down_requires_divisibility() {
        let p = RationalPolynomial::new(vec![int(0), int(0), int(3)]);
        assert_eq!(p.shift_down(2).unwrap().coeffs(), &[int(3)]);
        assert!(p.shift_down(3).is_none());
        assert_eq!(p.valuation(), Some(2));
    }
}
