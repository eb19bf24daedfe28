//! Exact scalars and the integer combinatorics shared by every formula.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Its `Display` form is the canonical text encoding used
//! by every export format: `p/q`, a leading `-` on negative values, and a bare
//! `p` when the denominator is one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};

/// Exact rational scalar. Every arithmetic result is normalized eagerly.
pub type Rational = BigRational;

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn from_big(p: BigInt) -> Rational {
    Rational::from_integer(p)
}

/// Canonical `p/q` text for a rational.
pub fn to_canonical(r: &Rational) -> String {
    r.to_string()
}

/// Parses the canonical text form (also accepts non-reduced input and reduces it).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a, b),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| Error::Parse(s.to_owned()))?;
    let den: BigInt = den.parse().map_err(|_| Error::Parse(s.to_owned()))?;
    if den.is_zero() {
        return Err(Error::Parse(s.to_owned()));
    }
    Ok(Rational::new(num, den))
}

/// Binomial coefficient `C(n, k)` for `n >= 0`; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(domain("binomial", n, "upper argument >= 0"));
    }
    Ok(binom(n, k))
}

/// Infallible binomial for internal use; vanishes outside `0 <= k <= n`.
pub(crate) fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(domain("factorial", n, "n >= 0"));
    }
    Ok(fact(n as u64))
}

pub(crate) fn fact(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n!! = n (n-2) ... 1` for odd `n >= 1`.
pub fn double_factorial_odd(n: i64) -> Result<BigInt> {
    if n < 1 || n.is_even() {
        return Err(domain("double_factorial_odd", n, "odd n >= 1"));
    }
    Ok((1..=n).step_by(2).fold(BigInt::one(), |acc, i| acc * i))
}

/// `(-1)^e` as a sign multiplier.
pub(crate) fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `2^e` as an exact integer.
pub(crate) fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

/// Decimal rendering of `r` rounded half-up to `sig` significant digits.
///
/// Display only; nothing downstream reads these strings back. Moderate
/// magnitudes print in fixed notation, extreme ones in scientific notation.
pub fn approx_decimal(r: &Rational, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_owned();
    }
    let neg = r.is_negative();
    let a = r.abs();
    let ten = BigInt::from(10);

    // Find e with 10^e <= a < 10^(e+1).
    let mut e: i64 = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    let pow10 = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            Rational::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while a < pow10(e) {
        e -= 1;
    }
    while a >= pow10(e + 1) {
        e += 1;
    }

    let shift = sig as i64 - 1 - e;
    let scaled = &a * pow10(shift);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut digits = (scaled + half).floor().to_integer();
    if digits == num_traits::pow(ten.clone(), sig) {
        digits /= 10;
        e += 1;
    }
    let ds = digits.to_string();

    let body = if (-6..=15).contains(&e) {
        if e >= 0 {
            let int_len = (e + 1) as usize;
            if ds.len() <= int_len {
                format!("{}{}", ds, "0".repeat(int_len - ds.len()))
            } else {
                format!("{}.{}", &ds[..int_len], &ds[int_len..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-e - 1) as usize), ds)
        }
    } else {
        let mantissa = if ds.len() > 1 {
            format!("{}.{}", &ds[..1], &ds[1..])
        } else {
            ds
        };
        format!("{mantissa}e{e}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
