//! Salié and Faulhaber coefficients.
//!
//! Each family is produced from its bivariate generating function through the
//! series engine, and the Faulhaber side also from its closed form in reduced
//! zeta values. The power-sum identities tie both tables back to integers.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::classical::reduced_zeta;
use crate::exact::{fact, int, sign_pow, Rational};
use crate::series::ExpSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientKind {
    /// `s(n, k)`, `0 <= k <= n`.
    Salie,
    /// `f(n, k)`, `0 <= k <= n`.
    FaulhaberF,
    /// `A_k^{(n)}`, `0 <= k <= n - 1`.
    FaulhaberA,
    /// `epsilon(n, k) = |s(n, k)| / 4^k`, `0 <= k <= n`.
    Epsilon,
    /// `b(n, k)`, `2 <= k <= n`.
    B,
}

impl CoefficientKind {
    fn k_range(self, n: usize) -> std::ops::Range<usize> {
        match self {
            CoefficientKind::Salie | CoefficientKind::FaulhaberF | CoefficientKind::Epsilon => 0..n + 1,
            CoefficientKind::FaulhaberA => 0..n,
            CoefficientKind::B => 2.min(n + 1)..n + 1,
        }
    }
}

/// Triangular table of coefficients for `n = 0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    pub kind: CoefficientKind,
    pub n_max: usize,
    /// `rows[n]` covers `kind.k_range(n)` in increasing `k`.
    rows: Vec<Vec<Rational>>,
}

impl CoefficientTable {
    fn from_fn(kind: CoefficientKind, n_max: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let rows = (0..=n_max)
            .map(|n| kind.k_range(n).map(|k| f(n, k)).collect())
            .collect();
        Self { kind, n_max, rows }
    }

    /// Entry `(n, k)`, or `None` outside the kind's index range.
    pub fn get(&self, n: usize, k: usize) -> Option<&Rational> {
        let range = self.kind.k_range(n);
        if !range.contains(&k) {
            return None;
        }
        self.rows.get(n)?.get(k - range.start)
    }

    /// Entry `(n, k)`; panics outside the table.
    pub fn at(&self, n: usize, k: usize) -> &Rational {
        self.get(n, k)
            .unwrap_or_else(|| panic!("({n}, {k}) outside {:?} table to n = {}", self.kind, self.n_max))
    }

    /// Row `n` as `(k, value)` pairs.
    pub fn row(&self, n: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.kind.k_range(n).zip(&self.rows[n])
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        (0..=self.n_max).flat_map(move |n| self.row(n).map(move |(k, v)| (n, k, v)))
    }
}

/// `s(n, k)` from `cosh(x sqrt(1+4y)/2) / cosh(x/2)`.
pub fn salie_table(n_max: usize) -> CoefficientTable {
    let order = 2 * n_max;
    let gf = ExpSeries::cosh_sqrt_one_plus_4y(order)
        .div(&ExpSeries::cosh_half(order))
        .expect("cosh(x/2) has unit constant term");
    let rows = gf.extract_rows(n_max).expect("order is exactly 2 n_max");
    CoefficientTable {
        kind: CoefficientKind::Salie,
        n_max,
        rows,
    }
}

/// `epsilon(n, k) = |s(n, k)| / 4^k`.
pub fn epsilon_table(salie: &CoefficientTable) -> CoefficientTable {
    assert_eq!(salie.kind, CoefficientKind::Salie);
    CoefficientTable::from_fn(CoefficientKind::Epsilon, salie.n_max, |n, k| {
        salie.at(n, k).abs() / Rational::from_integer(BigInt::one() << (2 * k))
    })
}

/// `f(n, k)` from `d/dx [(cosh(x sqrt(1+4y)/2) - cosh(x/2)) / (y sinh(x/2))]`.
///
/// The numerator is divided by `y` coefficientwise, then by
/// `sinh(x/2)/(x/2)`; the leftover `x/2` is removed by one exact division by
/// `x` and a factor of two before differentiating.
pub fn faulhaber_table_gf(n_max: usize) -> CoefficientTable {
    let order = 2 * n_max + 2;
    let numer = ExpSeries::cosh_sqrt_one_plus_4y(order)
        .sub(&ExpSeries::cosh_half(order))
        .expect("same order")
        .div_by_y();
    let reduced = numer
        .div(&ExpSeries::sinh_half_reduced(order))
        .expect("sinh(x/2)/(x/2) has unit constant term");
    let gf = reduced
        .div_by_x()
        .expect("numerator vanishes at x = 0")
        .scale(&int(2))
        .derivative();
    let rows = gf.extract_rows(n_max).expect("order is 2 n_max after two shifts");
    CoefficientTable {
        kind: CoefficientKind::FaulhaberF,
        n_max,
        rows,
    }
}

/// `A_k^{(n)}` from the Knuth generating function.
///
/// The prefactor `x sqrt(y)/2` cancels against `sinh(x sqrt(y)/2)`, leaving
/// `(cosh(x sqrt(y+4)/2) - cosh(x sqrt(y)/2)) / (sinh(x sqrt(y)/2) / (x sqrt(y)/2))`,
/// in which every coefficient is a polynomial in `y`.
pub fn faulhaber_table_knuth(n_max: usize) -> CoefficientTable {
    let order = 2 * n_max;
    let gf = ExpSeries::cosh_shifted_sqrt(order, 4)
        .sub(&ExpSeries::cosh_shifted_sqrt(order, 0))
        .expect("same order")
        .div(&ExpSeries::sinh_sqrt_y_reduced(order))
        .expect("unit constant term");
    let rows = (0..=n_max)
        .map(|n| {
            let c = gf.coeff(2 * n);
            debug_assert!(c.degree().is_none_or(|d| d < n.max(1)));
            (0..n).map(|k| c.coeff(k)).collect()
        })
        .collect();
    CoefficientTable {
        kind: CoefficientKind::FaulhaberA,
        n_max,
        rows,
    }
}

fn f_int(n: i64) -> Rational {
    debug_assert!(n >= 0);
    Rational::from_integer(fact(n as u64))
}

fn zeta_hat(two_r: i64) -> Rational {
    reduced_zeta(two_r as usize).expect("even argument >= 2 by construction")
}

/// `A_{n-k}^{(n+1)}` from its closed form in factorials and reduced zeta values,
/// `n >= k >= 1`.
pub fn faulhaber_a_closed(n: usize, k: usize) -> Rational {
    assert!(n >= k && k >= 1, "faulhaber_a_closed needs n >= k >= 1, got ({n}, {k})");
    let (n, k) = (n as i64, k as i64);
    let sum = (0..=(k - 1) / 2).fold(Rational::zero(), |acc, j| {
        debug_assert!(k - 2 * j >= 1);
        let term = f_int(2 * k - 2 * j - 1) / (f_int(k - 2 * j - 1) * f_int(2 * j + 1))
            * zeta_hat(2 * n - 2 * j);
        acc + term * int(sign_pow(j))
    });
    int(2 * sign_pow(n - k)) * f_int(2 * n + 2) / f_int(k + 1) * sum
}

/// `f(n, k) = A_{n-k}^{(n+1)} / (n + 1)` by the closed form.
pub fn faulhaber_closed(n: usize, k: usize) -> Rational {
    faulhaber_a_closed(n, k) / int(n as i64 + 1)
}

/// The `j`-independent prefactor `4 (2n)! (k+1)! / (2k+2)!` of `b(n, k)`.
pub(crate) fn b_prefactor(n: i64, k: i64) -> Rational {
    int(4) * f_int(2 * n) * f_int(k + 1) / f_int(2 * k + 2)
}

/// `(-1)^j (2k-3-2j)! / ((k-2-2j)! (2j+1)!)`, for `0 <= j <= floor(k/2) - 1`.
pub(crate) fn b_inner_coeff(k: i64, j: i64) -> Rational {
    debug_assert!(k - 1 - 2 * j >= 1);
    int(sign_pow(j)) * f_int(2 * k - 3 - 2 * j) / (f_int(k - 2 - 2 * j) * f_int(2 * j + 1))
}

/// `b(n, k)` from its closed form in reduced zeta values, `n >= k >= 2`.
pub fn b_closed(n: usize, k: usize) -> Rational {
    assert!(n >= k && k >= 2, "b_closed needs n >= k >= 2, got ({n}, {k})");
    let (n, k) = (n as i64, k as i64);
    let sum = (0..k / 2).fold(Rational::zero(), |acc, j| {
        acc + b_inner_coeff(k, j) * zeta_hat(2 * n - 2 * j - 2)
    });
    b_prefactor(n, k) * sum
}

/// `b(n, k) = (-1)^{n-k} n f(n-1, k-1) (k!)^2 / (2k+1)!` over a given `f` table.
pub fn b_from_faulhaber_table(f: &CoefficientTable, n: usize, k: usize) -> Rational {
    assert_eq!(f.kind, CoefficientKind::FaulhaberF);
    assert!(n >= k && k >= 2, "b_from_faulhaber needs n >= k >= 2, got ({n}, {k})");
    let (ni, ki) = (n as i64, k as i64);
    int(sign_pow(ni - ki) * ni) * f.at(n - 1, k - 1) * f_int(ki) * f_int(ki) / f_int(2 * ki + 1)
}

/// `b(n, k)` via the memoized generating-function table of `f`.
pub fn b_from_faulhaber(n: usize, k: usize) -> Rational {
    let f = cached_faulhaber_gf(n.saturating_sub(1));
    b_from_faulhaber_table(&f, n, k)
}

/// `b(n, k)` for `2 <= k <= n <= n_max` from a given `f` table.
pub fn b_table_from_faulhaber(f: &CoefficientTable) -> CoefficientTable {
    CoefficientTable::from_fn(CoefficientKind::B, f.n_max + 1, |n, k| b_from_faulhaber_table(f, n, k))
}

static GV_CACHE: RwLock<Option<Arc<CoefficientTable>>> = RwLock::new(None);

/// The `f` table to at least `n_max`, grown by doubling and shared.
pub fn cached_faulhaber_gf(n_max: usize) -> Arc<CoefficientTable> {
    if let Some(t) = GV_CACHE.read().unwrap().as_ref() {
        if t.n_max >= n_max {
            return Arc::clone(t);
        }
    }
    let mut slot = GV_CACHE.write().unwrap();
    let have = slot.as_ref().map_or(0, |t| t.n_max);
    if have < n_max || slot.is_none() {
        let size = n_max.max(2 * have).max(8);
        *slot = Some(Arc::new(faulhaber_table_gf(size)));
    }
    Arc::clone(slot.as_ref().unwrap())
}

fn big_pow(b: i64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(b), e)
}

/// `sum_{l<=m} l^{2n+1} = (1/2) sum_k f(n, k) (m(m+1))^{k+1}` for every `1 <= m <= m_max`.
pub fn power_sum_check(n: usize, m_max: usize) -> bool {
    let f = cached_faulhaber_gf(n);
    power_sum_check_with(&f, n, m_max)
}

pub fn power_sum_check_with(f: &CoefficientTable, n: usize, m_max: usize) -> bool {
    let mut lhs = BigInt::zero();
    for m in 1..=m_max as i64 {
        lhs += big_pow(m, 2 * n + 1);
        let p = Rational::from_integer(BigInt::from(m * (m + 1)));
        let rhs = f
            .row(n)
            .fold(Rational::zero(), |acc, (k, c)| acc + c * num_traits::pow(p.clone(), k + 1))
            / int(2);
        if rhs != Rational::from_integer(lhs.clone()) {
            return false;
        }
    }
    true
}

/// `sum_{l<=m} (-1)^{m-l} l^{2n} = (1/2) sum_k s(n, k) (m(m+1))^k` for every
/// `1 <= m <= m_max`; `n >= 1`.
pub fn alt_power_sum_check(n: usize, m_max: usize) -> bool {
    alt_power_sum_check_with(&salie_table(n), n, m_max)
}

pub fn alt_power_sum_check_with(s: &CoefficientTable, n: usize, m_max: usize) -> bool {
    assert!(n >= 1, "the alternating identity needs n >= 1");
    // a_m = m^{2n} - a_{m-1}
    let mut lhs = BigInt::zero();
    for m in 1..=m_max as i64 {
        lhs = big_pow(m, 2 * n) - lhs;
        let p = Rational::from_integer(BigInt::from(m * (m + 1)));
        let rhs = s
            .row(n)
            .fold(Rational::zero(), |acc, (k, c)| acc + c * num_traits::pow(p.clone(), k))
            / int(2);
        if rhs != Rational::from_integer(lhs.clone()) {
            return false;
        }
    }
    true
}
