//! Independent oracles for the generated tables. Nothing here goes through the
//! series engine or the matrices.

use bepart_core::coefficients::{faulhaber_table_gf, salie_table};
use bepart_core::{bernoulli, euler_half, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn r(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Solves `a x = b` exactly by Gauss-Jordan elimination.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Vec<Rational> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&i| !a[i][col].is_zero()).expect("singular system");
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip();
        for j in col..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in col..n {
                    let d = &f * &a[col][j];
                    a[i][j] -= d;
                }
                let d = &f * &b[col];
                b[i] -= d;
            }
        }
    }
    b
}

/// Fits `(1/2) sum_{k<n+1} c_k P^{k + shift} = target(m)`, `P = m(m+1)`, over `m = 1..=n+1`.
fn fit(n: usize, shift: usize, target: impl Fn(i64) -> BigInt) -> Vec<Rational> {
    let size = n + 1;
    let rows = (1..=size as i64)
        .map(|m| {
            let p = r(m * (m + 1));
            (0..size)
                .map(|k| num_traits::pow(p.clone(), k + shift) / r(2))
                .collect()
        })
        .collect();
    let rhs = (1..=size as i64).map(|m| Rational::from_integer(target(m))).collect();
    solve(rows, rhs)
}

fn odd_power_sum(n: usize, m: i64) -> BigInt {
    (1..=m).map(|l| num_traits::pow(BigInt::from(l), 2 * n + 1)).sum()
}

fn alt_even_power_sum(n: usize, m: i64) -> BigInt {
    (1..=m)
        .map(|l| {
            let v = num_traits::pow(BigInt::from(l), 2 * n);
            if (m - l) % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .sum()
}

#[test]
fn faulhaber_rows_match_fit() {
    let f = faulhaber_table_gf(10);
    for n in 0..=10 {
        let fitted = fit(n, 1, |m| odd_power_sum(n, m));
        for (k, c) in fitted.iter().enumerate() {
            assert_eq!(f.at(n, k), c, "f({n},{k})");
        }
    }
}

#[test]
fn salie_rows_match_fit() {
    let s = salie_table(10);
    for n in 1..=10 {
        let fitted = fit(n, 0, |m| alt_even_power_sum(n, m));
        for (k, c) in fitted.iter().enumerate() {
            assert_eq!(s.at(n, k), c, "s({n},{k})");
        }
    }
    // s(2, .) = (0, -1, 1)
    assert_eq!(fit(2, 0, |m| alt_even_power_sum(2, m)), vec![r(0), r(-1), r(1)]);
}

#[test]
fn bernoulli_from_naive_series_inversion() {
    // x / (e^x - 1) = 1 / sum_i x^i / (i+1)!, ordinary coefficients
    let size = 62;
    let mut fact = vec![BigInt::one()];
    for i in 1..=size + 1 {
        let next = &fact[i - 1] * i;
        fact.push(next);
    }
    let a: Vec<Rational> = (0..size)
        .map(|i| Rational::new(BigInt::one(), fact[i + 1].clone()))
        .collect();
    let mut inv: Vec<Rational> = vec![Rational::one()];
    for m in 1..size {
        let s = (1..=m).fold(Rational::zero(), |acc, i| acc + &a[i] * &inv[m - i]);
        inv.push(-s);
    }
    for two_n in (0..size).step_by(2) {
        let b = &inv[two_n] * Rational::from_integer(fact[two_n].clone());
        assert_eq!(bernoulli(two_n).unwrap(), b, "B_{two_n}");
    }
}

#[test]
fn euler_half_from_euler_number_recursion() {
    // sum_{k<=n} C(2n, 2k) E_{2k} = 0 for n >= 1, E_0 = 1; E_{2n}(1/2) = E_{2n} / 4^n
    let mut e: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=40usize {
        let s: BigInt = (0..n)
            .map(|k| bepart_core::binomial(2 * n as i64, 2 * k as i64).unwrap() * &e[k])
            .sum();
        e.push(-s);
    }
    for (n, en) in e.iter().enumerate() {
        let expect = Rational::new(en.clone(), BigInt::one() << (2 * n));
        assert_eq!(euler_half(2 * n).unwrap(), expect, "E_{}(1/2)", 2 * n);
    }
}
