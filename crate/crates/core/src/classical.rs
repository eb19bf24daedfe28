//! Bernoulli numbers, Euler-polynomial midpoint values and reduced zeta values.
//!
//! These are the independent oracles the partition matrices are checked
//! against. Tables are memoized process-wide and only ever grow.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};
use crate::exact::{binom, fact, int, sign_pow, Rational};
use crate::series::ExpSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Bernoulli,
    Euler,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "bernoulli" => Ok(Family::Bernoulli),
            "euler" => Ok(Family::Euler),
            other => Err(format!("unknown family {other:?} (expected bernoulli or euler)")),
        }
    }
}

/// `B_m` for every `m` (odd included), computed by `sum_{k<=m} C(m+1, k) B_k = 0`.
static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
/// `E_{2n}(1/2)` indexed by `n`.
static EULER_HALF: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
/// `B_{2m}` indexed by `m`, produced only by the short recursion.
static BERNOULLI_SHORT: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

fn grow_bernoulli(upto: usize) {
    let mut t = BERNOULLI.write().unwrap();
    if t.is_empty() {
        t.push(int(1));
    }
    for m in t.len()..=upto {
        if m > 1 && m % 2 == 1 {
            t.push(Rational::zero());
            continue;
        }
        let mp1 = m as i64 + 1;
        let s = (0..m).fold(Rational::zero(), |acc, k| {
            if t[k].is_zero() {
                acc
            } else {
                acc + Rational::from_integer(binom(mp1, k as i64)) * &t[k]
            }
        });
        t.push(-s / int(mp1));
    }
}

fn check_even(op: &'static str, two_n: usize, min: usize, expected: &'static str) -> Result<usize> {
    if two_n % 2 == 1 || two_n < min {
        return Err(domain(op, two_n as i64, expected));
    }
    Ok(two_n / 2)
}

/// `B_{two_n}` (so `B_2 = 1/6`, `B_4 = -1/30`).
pub fn bernoulli(two_n: usize) -> Result<Rational> {
    check_even("bernoulli", two_n, 0, "even index >= 0")?;
    if BERNOULLI.read().unwrap().len() <= two_n {
        grow_bernoulli(two_n);
    }
    Ok(BERNOULLI.read().unwrap()[two_n].clone())
}

/// Every Bernoulli number `B_0..=B_m` including the odd ones (`B_1 = -1/2`).
pub fn bernoulli_all(m: usize) -> Vec<Rational> {
    if BERNOULLI.read().unwrap().len() <= m {
        grow_bernoulli(m);
    }
    BERNOULLI.read().unwrap()[..=m].to_vec()
}

/// `E_{two_n}(1/2)`, the `x^{two_n}/(two_n)!` coefficient of `sech(x/2)`.
pub fn euler_half(two_n: usize) -> Result<Rational> {
    let n = check_even("euler_half", two_n, 0, "even index >= 0")?;
    if EULER_HALF.read().unwrap().len() <= n {
        let target = (n + 1).max(2 * EULER_HALF.read().unwrap().len());
        let order = 2 * (target - 1);
        let sech = sech_half(order);
        let vals: Vec<Rational> = (0..target).map(|j| sech.coeff(2 * j).coeff(0)).collect();
        let mut t = EULER_HALF.write().unwrap();
        if t.len() < vals.len() {
            *t = vals;
        }
    }
    Ok(EULER_HALF.read().unwrap()[n].clone())
}

/// `sech(x/2) = 1 / cosh(x/2)` as an exponential series.
pub fn sech_half(order: usize) -> ExpSeries {
    ExpSeries::one(order)
        .div(&ExpSeries::cosh_half(order))
        .expect("cosh(x/2) has unit constant term")
}

/// `zeta(2m) / (2 pi)^{2m} = |B_{2m}| / (2 (2m)!)`.
pub fn reduced_zeta(two_m: usize) -> Result<Rational> {
    check_even("reduced_zeta", two_m, 2, "even index >= 2")?;
    let b = bernoulli(two_m)?.abs();
    Ok(b / Rational::from_integer(fact(two_m as u64) * 2))
}

/// `B_{2m}` from the short recursion over `B_{2j}`, `m - floor(m/2) <= j < m`,
/// seeded only with `B_2`.
pub fn bernoulli_new_recursion(two_m: usize) -> Result<Rational> {
    let m = check_even("bernoulli_new_recursion", two_m, 4, "even index >= 4")?;
    if BERNOULLI_SHORT.read().unwrap().len() <= m {
        let seed = bernoulli(2)?;
        let mut t = BERNOULLI_SHORT.write().unwrap();
        if t.is_empty() {
            // index 0 is unused by the recursion
            t.push(int(1));
            t.push(seed);
        }
        for mm in t.len()..=m {
            let mi = mm as i64;
            let s = (mi - mi / 2..mi).fold(Rational::zero(), |acc, j| {
                let c = binom(mi + 1, 2 * mi - 2 * j + 1) * (2 * j + 1);
                acc + Rational::from_integer(c) * &t[j as usize]
            });
            t.push(-s / int((mi + 1) * (2 * mi + 1)));
        }
    }
    Ok(BERNOULLI_SHORT.read().unwrap()[m].clone())
}

/// Signed values and their moduli for one family, indexed by `n = 0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedValueTable {
    pub family: Family,
    /// `B_{2n}` or `E_{2n}(1/2)`.
    pub values: Vec<Rational>,
    /// `(-1)^{n+1} B_{2n}` or `(-1)^n E_{2n}(1/2)`.
    pub moduli: Vec<Rational>,
}

impl SignedValueTable {
    pub fn new(family: Family, n_max: usize) -> Self {
        let values: Vec<Rational> = (0..=n_max)
            .map(|n| match family {
                Family::Bernoulli => bernoulli(2 * n),
                Family::Euler => euler_half(2 * n),
            })
            .collect::<Result<_>>()
            .expect("even indices are always valid");
        let moduli = values.iter().map(Signed::abs).collect();
        Self {
            family,
            values,
            moduli,
        }
    }

    /// Sign of the `n`-th value under the family's convention, for `n >= 1`.
    pub fn expected_sign(&self, n: usize) -> i64 {
        match self.family {
            Family::Bernoulli => sign_pow(n as i64 + 1),
            Family::Euler => sign_pow(n as i64),
        }
    }

    /// Checks that `moduli[n] = sign * values[n] > 0` for `n >= 1`.
    pub fn sign_pattern_holds(&self) -> bool {
        (1..self.values.len()).all(|n| {
            let signed = &self.values[n] * int(self.expected_sign(n));
            signed.is_positive() && signed == self.moduli[n]
        })
    }

    pub fn modulus(&self, n: usize) -> &Rational {
        &self.moduli[n]
    }
}

/// `E_{2n} = 4^n E_{2n}(1/2)`, the conventional Euler number.
pub fn euler_number(two_n: usize) -> Result<BigInt> {
    let v = euler_half(two_n)? * Rational::from_integer(BigInt::one() << two_n);
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}

/// `|B_{2m}|` as the modulus `2 (2m)! zeta-hat(2m)`; consistency helper.
pub fn bernoulli_modulus_from_zeta(two_m: usize) -> Result<Rational> {
    Ok(reduced_zeta(two_m)? * Rational::from_integer(fact(two_m as u64) * 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0).unwrap(), int(1));
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(12).unwrap(), rat(-691, 2730));
        assert!(bernoulli(3).is_err());
    }

    #[test]
    fn odd_bernoulli_vanish() {
        let all = bernoulli_all(41);
        assert_eq!(all[1], rat(-1, 2));
        for m in (3..=41).step_by(2) {
            assert!(all[m].is_zero(), "B_{m}");
        }
    }

    #[test]
    fn euler_half_examples() {
        assert_eq!(euler_half(0).unwrap(), int(1));
        assert_eq!(euler_half(2).unwrap(), rat(-1, 4));
        // (-1)^6 E_12(1/2) is the modulus, so the value itself is positive
        assert_eq!(euler_half(12).unwrap(), rat(2_702_765, 4096));
        assert!(euler_half(5).is_err());
        assert_eq!(euler_number(4).unwrap(), BigInt::from(5));
        assert_eq!(euler_number(6).unwrap(), BigInt::from(-61));
    }

    #[test]
    fn reduced_zeta_examples() {
        assert_eq!(reduced_zeta(2).unwrap(), rat(1, 24));
        assert_eq!(reduced_zeta(4).unwrap(), rat(1, 1440));
        let expect = rat(691, 2730) / Rational::from_integer(fact(12) * 2);
        assert_eq!(reduced_zeta(12).unwrap(), expect);
        assert!(reduced_zeta(0).is_err());
        assert!(reduced_zeta(3).is_err());
    }

    #[test]
    fn reduced_zeta_decreases_faster_than_sixteenfold() {
        for m in 1..=60 {
            let a = reduced_zeta(2 * m).unwrap();
            let b = reduced_zeta(2 * m + 2).unwrap();
            assert!(b < &a / int(16), "m = {m}");
            assert_eq!(bernoulli_modulus_from_zeta(2 * m).unwrap(), bernoulli(2 * m).unwrap().abs());
        }
    }

    #[test]
    fn short_recursion_examples() {
        assert_eq!(bernoulli_new_recursion(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli_new_recursion(6).unwrap(), rat(1, 42));
        assert_eq!(bernoulli_new_recursion(8).unwrap(), rat(-1, 30));
        assert!(bernoulli_new_recursion(2).is_err());
        assert!(bernoulli_new_recursion(7).is_err());
    }

    #[test]
    fn short_recursion_matches_classical() {
        for m in 2..=60 {
            assert_eq!(
                bernoulli_new_recursion(2 * m).unwrap(),
                bernoulli(2 * m).unwrap(),
                "m = {m}"
            );
        }
    }

    #[test]
    fn sign_patterns() {
        assert!(SignedValueTable::new(Family::Bernoulli, 60).sign_pattern_holds());
        assert!(SignedValueTable::new(Family::Euler, 60).sign_pattern_holds());
    }

    #[test]
    fn sech_times_cosh_is_one() {
        let order = 120;
        let prod = sech_half(order).mul(&ExpSeries::cosh_half(order)).unwrap();
        assert!(prod.is_one());
    }
}
