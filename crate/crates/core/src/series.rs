//! Truncated exponential power series in `x` with polynomial-in-`y` coefficients.
//!
//! A series `F(x, y) = sum_m c_m(y) x^m / m!` is stored by its coefficients
//! `c_m(y)` for `m = 0..=order`. In this normalization a product is a binomial
//! convolution, the derivative is an index shift, and the generating functions
//! built here read off their tables directly.
//!
//! Square roots such as `sqrt(1 + 4y)` never appear as objects: `cosh(x sqrt(a)/2)`
//! and `sinh(x sqrt(a)/2) / (x sqrt(a)/2)` are both even series in `x` whose
//! coefficients are polynomials in `a`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binom, int, Rational};
use crate::poly::RationalPolynomial;

/// Which coefficients are allowed to be nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Any,
    Even,
    Odd,
}

impl Parity {
    fn allows(self, m: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => m.is_multiple_of(2),
            Parity::Odd => m % 2 == 1,
        }
    }

    fn times(self, other: Parity) -> Parity {
        match (self, other) {
            (Parity::Any, _) | (_, Parity::Any) => Parity::Any,
            (a, b) if a == b => Parity::Even,
            _ => Parity::Odd,
        }
    }

    fn flipped(self) -> Parity {
        match self {
            Parity::Any => Parity::Any,
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpSeries {
    coeffs: Vec<RationalPolynomial>,
    parity: Parity,
}

impl ExpSeries {
    /// Builds a series from its exponential coefficients `c_0..=c_order`.
    pub fn from_coeffs(coeffs: Vec<RationalPolynomial>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        Self {
            coeffs,
            parity: Parity::Any,
        }
    }

    /// Even series with `c_{2n} = term(n)`.
    fn even(order: usize, mut term: impl FnMut(usize) -> RationalPolynomial) -> Self {
        let coeffs = (0..=order)
            .map(|m| {
                if m % 2 == 0 {
                    term(m / 2)
                } else {
                    RationalPolynomial::zero()
                }
            })
            .collect();
        Self {
            coeffs,
            parity: Parity::Even,
        }
    }

    pub fn one(order: usize) -> Self {
        Self::even(order, |n| {
            if n == 0 {
                RationalPolynomial::constant(int(1))
            } else {
                RationalPolynomial::zero()
            }
        })
    }

    /// The series of `x` itself (`c_1 = 1`).
    pub fn x(order: usize) -> Self {
        let mut coeffs = vec![RationalPolynomial::zero(); order + 1];
        if order >= 1 {
            coeffs[1] = RationalPolynomial::constant(int(1));
        }
        Self {
            coeffs,
            parity: Parity::Odd,
        }
    }

    /// `cosh(x sqrt(y + shift) / 2)`: `c_{2n} = (y + shift)^n / 4^n`.
    pub fn cosh_shifted_sqrt(order: usize, shift: i64) -> Self {
        Self::cosh_sqrt_linear(order, int(shift), int(1))
    }

    /// `cosh(x sqrt(1 + 4y) / 2)`: `c_{2n} = (1 + 4y)^n / 4^n`.
    pub fn cosh_sqrt_one_plus_4y(order: usize) -> Self {
        Self::cosh_sqrt_linear(order, int(1), int(4))
    }

    /// `cosh(x / 2)`, free of `y`.
    pub fn cosh_half(order: usize) -> Self {
        Self::cosh_sqrt_linear(order, int(1), int(0))
    }

    /// `cosh(x sqrt(a + b y) / 2)`.
    fn cosh_sqrt_linear(order: usize, a: Rational, b: Rational) -> Self {
        Self::even(order, |n| {
            let quarter_n = Rational::new(BigInt::one(), BigInt::one() << (2 * n));
            RationalPolynomial::linear_power(&a, &b, n).scale(&quarter_n)
        })
    }

    /// `sinh(x/2) / (x/2)`: `c_{2n} = 1 / (4^n (2n + 1))`.
    pub fn sinh_half_reduced(order: usize) -> Self {
        Self::sinh_sqrt_linear_reduced(order, int(1), int(0))
    }

    /// `sinh(x sqrt(y) / 2) / (x sqrt(y) / 2)`: `c_{2n} = y^n / (4^n (2n + 1))`.
    pub fn sinh_sqrt_y_reduced(order: usize) -> Self {
        Self::sinh_sqrt_linear_reduced(order, int(0), int(1))
    }

    fn sinh_sqrt_linear_reduced(order: usize, a: Rational, b: Rational) -> Self {
        Self::even(order, |n| {
            let w = Rational::new(BigInt::one(), (BigInt::one() << (2 * n)) * (2 * n + 1));
            RationalPolynomial::linear_power(&a, &b, n).scale(&w)
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Exponential coefficient `c_m(y)`.
    pub fn coeff(&self, m: usize) -> &RationalPolynomial {
        &self.coeffs[m]
    }

    /// Ordinary Taylor coefficient of `x^m y^k`, i.e. `[y^k] c_m(y) / m!`.
    pub fn plain_coeff(&self, m: usize, k: usize) -> Rational {
        self.coeffs[m].coeff(k) / Rational::from_integer(crate::exact::fact(m as u64))
    }

    /// True when every coefficient forbidden by the parity flag is zero.
    pub fn respects_parity(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(m, c)| self.parity.allows(m) || c.is_zero())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let parity = if self.parity == other.parity {
            self.parity
        } else {
            Parity::Any
        };
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            parity,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
            parity: self.parity,
        }
    }

    /// Exponential-convolution product `c_m = sum_j C(m, j) a_j b_{m-j}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut coeffs = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut acc = RationalPolynomial::zero();
            for j in 0..=m {
                let (a, b) = (&self.coeffs[j], &other.coeffs[m - j]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let c = Rational::from_integer(binom(m as i64, j as i64));
                acc = &acc + &(a * b).scale(&c);
            }
            coeffs.push(acc);
        }
        Ok(Self {
            coeffs,
            parity: self.parity.times(other.parity),
        })
    }

    /// Exponential long division: `q` with `q * den = self` through the order.
    ///
    /// The divisor's constant term must be a nonzero rational constant, so that
    /// every quotient coefficient stays a polynomial in `y`.
    pub fn div(&self, den: &Self) -> Result<Self> {
        self.check_order(den)?;
        let d0 = den.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NonInvertibleConstant)?;
        let d0_inv = d0.recip();
        let order = self.order();
        let mut q: Vec<RationalPolynomial> = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut rem = self.coeffs[m].clone();
            for j in 0..m {
                let d = &den.coeffs[m - j];
                if d.is_zero() || q[j].is_zero() {
                    continue;
                }
                let c = Rational::from_integer(binom(m as i64, j as i64));
                rem = &rem - &(&q[j] * d).scale(&c);
            }
            q.push(rem.scale(&d0_inv));
        }
        // Parity of a quotient: den even keeps the numerator's parity.
        let parity = match den.parity {
            Parity::Even => self.parity,
            Parity::Odd | Parity::Any => Parity::Any,
        };
        Ok(Self { coeffs: q, parity })
    }

    /// `d/dx`: `c_m <- c_{m+1}`; the order drops by one.
    pub fn derivative(&self) -> Self {
        assert!(self.order() >= 1, "derivative of an order-0 series");
        Self {
            coeffs: self.coeffs[1..].to_vec(),
            parity: self.parity.flipped(),
        }
    }

    /// Divides by `x` a series with zero constant term: `c_m <- c_{m+1} / (m+1)`.
    pub fn div_by_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonInvertibleConstant);
        }
        if self.order() == 0 {
            return Err(Error::InsufficientOrder { have: 0, need: 1 });
        }
        Ok(Self {
            coeffs: (1..=self.order())
                .map(|m| self.coeffs[m].scale(&Rational::new(BigInt::one(), BigInt::from(m))))
                .collect(),
            parity: self.parity.flipped(),
        })
    }

    /// Divides every coefficient polynomial by `y`.
    ///
    /// Panics if some coefficient has a nonzero constant term: callers only use
    /// this where divisibility is structural.
    pub fn div_by_y(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, p)| {
                    p.shift_down(1)
                        .unwrap_or_else(|| panic!("c_{m}(y) = {p} is not divisible by y"))
                })
                .collect(),
            parity: self.parity,
        }
    }

    /// Coefficients of `x^{2n}/(2n)! y^k` for `0 <= k <= n <= n_max`.
    pub fn extract_table(&self, n_max: usize) -> Result<BTreeMap<(usize, usize), Rational>> {
        let mut out = BTreeMap::new();
        for (n, row) in self.extract_rows(n_max)?.into_iter().enumerate() {
            for (k, v) in row.into_iter().enumerate() {
                out.insert((n, k), v);
            }
        }
        Ok(out)
    }

    /// Row form of [`extract_table`](Self::extract_table): `rows[n][k]`, `k = 0..=n`.
    pub fn extract_rows(&self, n_max: usize) -> Result<Vec<Vec<Rational>>> {
        if self.order() < 2 * n_max {
            return Err(Error::InsufficientOrder {
                have: self.order(),
                need: 2 * n_max,
            });
        }
        Ok((0..=n_max)
            .map(|n| {
                let c = &self.coeffs[2 * n];
                (0..=n).map(|k| c.coeff(k)).collect()
            })
            .collect())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].as_constant().is_some_and(|c| c.is_one())
            && self.coeffs[1..].iter().all(RationalPolynomial::is_zero)
    }
}
