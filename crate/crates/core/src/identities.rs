//! Identities downstream of the partitions: the zeta recursion, the sum and
//! integral representations of `b(n, k)`, the ordering inequalities and the
//! probability-distribution view.
//!
//! Every `zeta(2r)` enters as `zeta-hat(2r) = zeta(2r) / (2 pi)^{2r}`, so all
//! checks here are exact rational identities.

use num_traits::{Signed, Zero};

use crate::classical::{reduced_zeta, Family};
use crate::coefficients::{b_closed, b_inner_coeff, b_prefactor};
use crate::exact::{double_factorial_odd, fact, int, pow2, sign_pow, Rational};
use crate::matrices::{PartitionRow, PartitionTable};
use crate::poly::RationalPolynomial;

fn zeta_hat(two_r: i64) -> Rational {
    reduced_zeta(two_r as usize).expect("even argument >= 2 by construction")
}

fn f_int(n: i64) -> Rational {
    Rational::from_integer(fact(n as u64))
}

/// Outcome of checking the zeta recursion at one `m`, divided through by `pi^{2m+2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedZetaIdentityReport {
    pub m: usize,
    /// `2^{2m+2} zeta-hat(2m+2)`.
    pub lhs: Rational,
    /// `(n, k, term)` for `1 <= n <= m`, `1 <= k <= floor((n+1)/2)`.
    pub rhs_terms: Vec<(usize, usize, Rational)>,
    pub holds: bool,
}

impl ReducedZetaIdentityReport {
    pub fn rhs(&self) -> Rational {
        self.rhs_terms.iter().fold(Rational::zero(), |acc, (_, _, t)| acc + t)
    }

    /// Sum over `k` of the terms for each `n`, in increasing `n`.
    pub fn partial_sums(&self) -> Vec<(usize, Rational)> {
        (1..=self.m)
            .map(|n| {
                let s = self
                    .rhs_terms
                    .iter()
                    .filter(|(nn, _, _)| *nn == n)
                    .fold(Rational::zero(), |acc, (_, _, t)| acc + t);
                (n, s)
            })
            .collect()
    }

    pub fn partial_sums_positive(&self) -> bool {
        self.partial_sums().iter().all(|(_, s)| s.is_positive())
    }
}

/// One term of the zeta recursion after division by `pi^{2m+2}`.
///
/// `sqrt(4 pi) / Gamma(n + 5/2)` is rationalized as `2^{n+3} / (2n+3)!!`
/// and `zeta(2r) / pi^{2r}` as `2^{2r} zeta-hat(2r)`.
fn zeta_recursion_term(m: i64, n: i64, k: i64) -> Rational {
    let dfo = double_factorial_odd(2 * n + 3).expect("2n + 3 is odd and positive");
    let r = m + 1 - k;
    let num = Rational::from_integer(pow2((n + 3) as u32) * pow2((2 * r) as u32))
        * f_int(2 * n - 2 * k + 1)
        * zeta_hat(2 * r);
    let den = Rational::from_integer(dfo * pow2((2 * (n - k + 2)) as u32))
        * f_int(2 * k - 1)
        * f_int(n + 1 - 2 * k);
    int(sign_pow(k - 1)) * num / den
}

pub fn zeta_recursion_check(m: usize) -> ReducedZetaIdentityReport {
    assert!(m >= 1, "the zeta recursion starts at m = 1");
    let mi = m as i64;
    let lhs = Rational::from_integer(pow2((2 * mi + 2) as u32)) * zeta_hat(2 * mi + 2);
    let rhs_terms: Vec<_> = (1..=mi)
        .flat_map(|n| (1..=(n + 1) / 2).map(move |k| (n, k)))
        .map(|(n, k)| (n as usize, k as usize, zeta_recursion_term(mi, n, k)))
        .collect();
    let rhs = rhs_terms.iter().fold(Rational::zero(), |acc, (_, _, t)| acc + t);
    ReducedZetaIdentityReport {
        m,
        holds: lhs == rhs,
        lhs,
        rhs_terms,
    }
}

fn check_nk(n: usize, k: usize) -> (i64, i64) {
    assert!(n >= k && k >= 2, "needs n >= k >= 2, got ({n}, {k})");
    (n as i64, k as i64)
}

/// `p1(n, k, 1/l)` as a polynomial in `w = 1 / (2 pi l)`.
///
/// The coefficient of `w^{2n-2-2j}` is
/// `4 (2n)! (k+1)! / (2k+2)! * (-1)^j (2k-3-2j)! / ((k-2-2j)! (2j+1)!)`.
/// Powers of `w` and of `1/l` coincide, so degree and valuation carry over.
pub fn p1_polynomial(n: usize, k: usize) -> RationalPolynomial {
    let (n, k) = check_nk(n, k);
    let pre = b_prefactor(n, k);
    (0..k / 2).fold(RationalPolynomial::zero(), |acc, j| {
        let c = &pre * b_inner_coeff(k, j);
        &acc + &RationalPolynomial::monomial(c, (2 * n - 2 - 2 * j) as usize)
    })
}

/// `p2(n, k, t)`: coefficient of `t^{2n-3-2j}` carries an extra `1/(2n-3-2j)!`.
pub fn p2_polynomial(n: usize, k: usize) -> RationalPolynomial {
    let (n, k) = check_nk(n, k);
    let pre = b_prefactor(n, k);
    (0..k / 2).fold(RationalPolynomial::zero(), |acc, j| {
        let c = &pre * b_inner_coeff(k, j) / f_int(2 * n - 2 * j - 3);
        &acc + &RationalPolynomial::monomial(c, (2 * n - 3 - 2 * j) as usize)
    })
}

/// Sums `p1` over `l >= 1` term by term: `w^{2r}` sums to `zeta-hat(2r)`.
pub fn p1_series_value(p1: &RationalPolynomial) -> Rational {
    p1.terms().fold(Rational::zero(), |acc, (pow, c)| {
        assert!(pow >= 2 && pow % 2 == 0, "p1 carries only even powers >= 2");
        acc + c * zeta_hat(pow as i64)
    })
}

/// Integrates `p2(t) / (e^{2 pi t} - 1)` term by term:
/// `t^{2r-1}` integrates to `(2r-1)! zeta-hat(2r)`.
pub fn p2_integral_value(p2: &RationalPolynomial) -> Rational {
    p2.terms().fold(Rational::zero(), |acc, (pow, c)| {
        assert!(pow % 2 == 1, "p2 carries only odd powers");
        acc + c * f_int(pow as i64) * zeta_hat(pow as i64 + 1)
    })
}

pub fn p1_sum_check(n: usize, k: usize) -> bool {
    p1_series_value(&p1_polynomial(n, k)) == b_closed(n, k)
}

pub fn p2_integral_check(n: usize, k: usize) -> bool {
    p2_integral_value(&p2_polynomial(n, k)) == b_closed(n, k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QFactor {
    Q1,
    Q2,
}

/// The polynomial with its stated lowest and highest powers.
fn p_with_bounds(which: QFactor, n: usize, k: usize) -> (RationalPolynomial, usize, usize) {
    match which {
        QFactor::Q1 => (p1_polynomial(n, k), 2 * n - 2 * (k / 2), 2 * n - 2),
        QFactor::Q2 => (p2_polynomial(n, k), 2 * n - 1 - 2 * (k / 2), 2 * n - 3),
    }
}

/// Splits `p = v^lowest * q`; returns `(lowest, q)`.
pub fn q_factor(which: QFactor, n: usize, k: usize) -> (usize, RationalPolynomial) {
    let (p, lowest, _) = p_with_bounds(which, n, k);
    let q = p
        .shift_down(lowest)
        .expect("p vanishes below its stated lowest power");
    (lowest, q)
}

/// The factorization `p = v^lowest q` holds with `q` of order `2 floor(k/2) - 2`
/// and both extreme coefficients of `q` nonzero.
pub fn q_factor_check(which: QFactor, n: usize, k: usize) -> bool {
    let (p, lowest, top) = p_with_bounds(which, n, k);
    let Some(q) = p.shift_down(lowest) else {
        return false;
    };
    p.degree() == Some(top)
        && p.valuation() == Some(lowest)
        && q.degree() == Some(2 * (k / 2) - 2)
        && q.valuation() == Some(0)
}

/// Valid `k` range for the inequalities at row `n`.
fn inequality_ks(family: Family, n: usize) -> std::ops::RangeInclusive<usize> {
    match family {
        Family::Bernoulli => 2..=n - 1,
        Family::Euler => 1..=n - 1,
    }
}

fn inequality_rows(table: &PartitionTable) -> impl Iterator<Item = &PartitionRow> {
    let first = match table.family {
        Family::Bernoulli => 3,
        Family::Euler => 2,
    };
    table.rows.iter().filter(move |r| r.n >= first)
}

/// First `(n, k)` where `part(n, k) > 2 part(n, k+1)` fails.
pub fn find_ordering_violation(table: &PartitionTable) -> Option<(usize, usize)> {
    for row in inequality_rows(table) {
        for k in inequality_ks(table.family, row.n) {
            let (Some(a), Some(b)) = (row.part(k), row.part(k + 1)) else {
                return Some((row.n, k));
            };
            if a <= &(b * int(2)) {
                return Some((row.n, k));
            }
        }
    }
    None
}

/// First `(n, k)` where the tail chain
/// `part(k) > T_{k+1} > T_{k+2} > ... > T_n > sum_{l>k} part(l)` breaks, with
/// `T_j = sum_{l=k+1}^{j-1} part(l) + 2 part(j)`.
pub fn find_tail_violation(table: &PartitionTable) -> Option<(usize, usize)> {
    for row in inequality_rows(table) {
        let n = row.n;
        for k in inequality_ks(table.family, n) {
            let Some(first) = row.part(k) else {
                return Some((n, k));
            };
            let mut prev = first.clone();
            let mut running = Rational::zero();
            for j in k + 1..=n {
                let Some(pj) = row.part(j) else {
                    return Some((n, k));
                };
                let t = &running + pj * int(2);
                if prev <= t {
                    return Some((n, k));
                }
                running += pj;
                prev = t;
            }
            // prev is now sum_{l>k} part(l) + part(n)
            if prev <= running {
                return Some((n, k));
            }
        }
    }
    None
}

pub fn ordering_check(family: Family, n_max: usize) -> bool {
    find_ordering_violation(&PartitionTable::new(family, n_max)).is_none()
}

pub fn tail_check(family: Family, n_max: usize) -> bool {
    find_tail_violation(&PartitionTable::new(family, n_max)).is_none()
}

/// `r(n, k) = part(n, k) / target(n)` for one row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionRow {
    pub n: usize,
    pub ratios: Vec<(usize, Rational)>,
}

impl DistributionRow {
    pub fn from_partition(row: &PartitionRow) -> Self {
        Self {
            n: row.n,
            ratios: row
                .parts
                .iter()
                .map(|(k, p)| (*k, p / &row.target))
                .collect(),
        }
    }

    pub fn total(&self) -> Rational {
        self.ratios.iter().fold(Rational::zero(), |acc, (_, r)| acc + r)
    }

    /// Each ratio is positive and exceeds the sum of all later ones.
    pub fn is_well_ordered(&self) -> bool {
        let mut tail = Rational::zero();
        for (_, r) in self.ratios.iter().rev() {
            if !r.is_positive() || (!tail.is_zero() && r <= &tail) {
                return false;
            }
            tail += r;
        }
        true
    }
}

/// Distribution for row `n`: `n >= 2` for bernoulli, `n >= 1` for euler.
pub fn distribution_row(family: Family, n: usize) -> crate::error::Result<DistributionRow> {
    let min = match family {
        Family::Bernoulli => 2,
        Family::Euler => 1,
    };
    if n < min {
        return Err(crate::error::domain(
            "distribution_row",
            n as i64,
            match family {
                Family::Bernoulli => "n >= 2 for bernoulli",
                Family::Euler => "n >= 1 for euler",
            },
        ));
    }
    let table = PartitionTable::new(family, n);
    Ok(DistributionRow::from_partition(table.row(n)))
}

/// `b(n, k)` over its `j = 0` term alone.
pub fn asymptotic_ratio(n: usize, k: usize) -> Rational {
    let (ni, ki) = check_nk(n, k);
    let leading = b_prefactor(ni, ki) * b_inner_coeff(ki, 0) * zeta_hat(2 * ni - 2);
    b_closed(n, k) / leading
}

/// Exact `|a - b|`.
pub fn abs_diff(a: &Rational, b: &Rational) -> Rational {
    (a - b).abs()
}
