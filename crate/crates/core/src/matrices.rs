//! The lower-triangular matrices `M_E`, `M_B`, their exact inverses, and the
//! partition tables read off those inverses.
//!
//! All indices are 1-based: row `m`, column `n`, `1 <= n <= m <= size`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::classical::{Family, SignedValueTable};
use crate::error::{Error, Result};
use crate::exact::{binom, fact, int, sign_pow, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerTriangularMatrix {
    /// `rows[m - 1]` holds columns `1..=m`.
    rows: Vec<Vec<Rational>>,
}

impl LowerTriangularMatrix {
    /// Builds an `size x size` matrix from `entry(m, n)` for `n <= m`.
    pub fn from_fn(size: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        let rows = (1..=size)
            .map(|m| (1..=m).map(|n| entry(m, n)).collect())
            .collect();
        Self { rows }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |m, n| if m == n { int(1) } else { int(0) })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(m, n)`; zero above the diagonal.
    pub fn get(&self, m: usize, n: usize) -> Rational {
        assert!(
            (1..=self.size()).contains(&m) && n >= 1,
            "index ({m}, {n}) outside a {0}x{0} matrix",
            self.size()
        );
        if n > m {
            Rational::zero()
        } else {
            self.rows[m - 1][n - 1].clone()
        }
    }

    pub fn entry(&self, m: usize, n: usize) -> &Rational {
        &self.rows[m - 1][n - 1]
    }

    /// Overwrites one lower-triangle entry.
    pub fn set(&mut self, m: usize, n: usize, value: Rational) {
        assert!(n <= m, "({m}, {n}) is above the diagonal");
        self.rows[m - 1][n - 1] = value;
    }

    /// Row `m` as columns `1..=m`.
    pub fn row(&self, m: usize) -> &[Rational] {
        &self.rows[m - 1]
    }

    /// Exact inverse by forward substitution, one column at a time.
    pub fn invert(&self) -> Result<Self> {
        let size = self.size();
        let diag_inv: Vec<Rational> = (1..=size)
            .map(|m| {
                let d = self.entry(m, m);
                if d.is_zero() {
                    Err(Error::ZeroDiagonal(m))
                } else {
                    Ok(d.recip())
                }
            })
            .collect::<Result<_>>()?;

        let mut inv: Vec<Vec<Rational>> = (1..=size).map(|m| vec![Rational::zero(); m]).collect();
        for k in 1..=size {
            inv[k - 1][k - 1] = diag_inv[k - 1].clone();
            for m in k + 1..=size {
                let row = &self.rows[m - 1];
                let mut acc = Rational::zero();
                for j in k..m {
                    let a = &row[j - 1];
                    let b = &inv[j - 1][k - 1];
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                inv[m - 1][k - 1] = -acc * &diag_inv[m - 1];
            }
        }
        Ok(Self { rows: inv })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size());
        Self::from_fn(self.size(), |m, n| {
            (n..=m).fold(Rational::zero(), |acc, j| acc + self.entry(m, j) * other.entry(j, n))
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.size());
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }
}

/// `(M_E)_{m,n} = (-1)^{m-n} 4^m C(m, 2(m-n))`.
pub fn build_me(size: usize) -> LowerTriangularMatrix {
    LowerTriangularMatrix::from_fn(size, |m, n| {
        let (m, n) = (m as i64, n as i64);
        let v = binom(m, 2 * (m - n)) * (BigInt::one() << (2 * m)) * sign_pow(m - n);
        Rational::from_integer(v)
    })
}

/// `(M_B)_{m,n} = 2 (-1)^{m-n} C(2n-1, m) C(2m+1, 2n)`.
pub fn build_mb(size: usize) -> LowerTriangularMatrix {
    LowerTriangularMatrix::from_fn(size, |m, n| {
        let (m, n) = (m as i64, n as i64);
        let v = binom(2 * n - 1, m) * binom(2 * m + 1, 2 * n) * 2 * sign_pow(m - n);
        Rational::from_integer(v)
    })
}

pub fn build(family: Family, size: usize) -> LowerTriangularMatrix {
    match family {
        Family::Bernoulli => build_mb(size),
        Family::Euler => build_me(size),
    }
}

pub fn invert_lower_triangular(m: &LowerTriangularMatrix) -> Result<LowerTriangularMatrix> {
    m.invert()
}

/// One row of a partition: the ordered parts and the value they sum to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionRow {
    pub n: usize,
    pub target: Rational,
    pub parts: Vec<(usize, Rational)>,
}

impl PartitionRow {
    pub fn sum(&self) -> Rational {
        self.parts.iter().fold(Rational::zero(), |acc, (_, p)| acc + p)
    }

    /// Part at column `k`, if this row carries one.
    pub fn part(&self, k: usize) -> Option<&Rational> {
        self.parts.iter().find(|(j, _)| *j == k).map(|(_, p)| p)
    }
}

/// Exact partitions of `|E_{2n}(1/2)|` or `|B_{2n}|`, `n = 1..=n_max`.
///
/// Euler rows carry `k = 1..=n`. Bernoulli rows carry `k = 2..=n` for `n >= 2`
/// (the structural zero in column 1 is dropped); row 1 is the unpartitioned
/// `|B_2| = 1/6` at `k = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTable {
    pub family: Family,
    pub rows: Vec<PartitionRow>,
}

impl PartitionTable {
    /// Builds the table from the inverse matrix, with targets from the
    /// classical oracles.
    pub fn new(family: Family, n_max: usize) -> Self {
        let inv = build(family, n_max)
            .invert()
            .expect("diagonals of M_E and M_B never vanish");
        let targets = SignedValueTable::new(family, n_max);
        Self::from_inverse(family, &inv, &targets.moduli)
    }

    /// Reads rows from a given inverse; `moduli[n]` is the target of row `n`.
    pub fn from_inverse(family: Family, inv: &LowerTriangularMatrix, moduli: &[Rational]) -> Self {
        let rows = (1..=inv.size())
            .map(|n| {
                let first = match family {
                    Family::Bernoulli if n >= 2 => 2,
                    _ => 1,
                };
                PartitionRow {
                    n,
                    target: moduli[n].clone(),
                    parts: (first..=n).map(|k| (k, inv.entry(n, k).clone())).collect(),
                }
            })
            .collect();
        Self { family, rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> &PartitionRow {
        &self.rows[n - 1]
    }

    /// Part `(n, k)`: `b(n, k)` or `epsilon(n, k)`.
    pub fn part(&self, n: usize, k: usize) -> Option<&Rational> {
        self.rows.get(n.checked_sub(1)?)?.part(k)
    }

    /// First row whose parts do not sum to its target.
    pub fn first_sum_mismatch(&self) -> Option<usize> {
        self.rows.iter().find(|r| r.sum() != r.target).map(|r| r.n)
    }

    /// First `(n, k)` whose part is not strictly positive.
    pub fn first_nonpositive_part(&self) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .flat_map(|r| r.parts.iter().map(move |(k, p)| (r.n, *k, p)))
            .find(|(_, _, p)| !p.is_positive())
            .map(|(n, k, _)| (n, k))
    }
}

pub fn partition_table(family: Family, n_max: usize) -> PartitionTable {
    PartitionTable::new(family, n_max)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Band {
    Diagonal,
    FirstSub,
    SecondSub,
}

impl Band {
    /// Distance below the diagonal.
    pub fn offset(self) -> usize {
        match self {
            Band::Diagonal => 0,
            Band::FirstSub => 1,
            Band::SecondSub => 2,
        }
    }

    pub fn min_n(self) -> usize {
        self.offset() + 1
    }
}

/// Closed form for the inverse entry `(n, n - offset)` on a band.
pub fn closed_form_band(family: Family, band: Band, n: usize) -> Result<Rational> {
    if n < band.min_n() {
        return Err(crate::error::domain(
            "closed_form_band",
            n as i64,
            match band {
                Band::Diagonal => "n >= 1",
                Band::FirstSub => "n >= 2",
                Band::SecondSub => "n >= 3",
            },
        ));
    }
    let ni = n as i64;
    let f = |k: i64| Rational::from_integer(fact(k as u64));
    let r = |p: i64, q: i64| Rational::new(BigInt::from(p), BigInt::from(q));
    let quarter_n = Rational::new(BigInt::one(), BigInt::one() << (2 * n));
    Ok(match (family, band) {
        (Family::Euler, Band::Diagonal) => quarter_n,
        (Family::Euler, Band::FirstSub) => int(2 * ni * (ni - 1)) * quarter_n,
        (Family::Euler, Band::SecondSub) => {
            r(2, 3) * int(ni * (ni - 1) * (ni - 2) * (5 * ni - 3)) * quarter_n
        }
        (Family::Bernoulli, Band::Diagonal) => f(ni) * f(ni) / f(2 * ni + 1),
        (Family::Bernoulli, Band::FirstSub) => {
            r(1, 6) * int(ni - 2) * f(ni) * f(ni - 1) / f(2 * ni - 1)
        }
        (Family::Bernoulli, Band::SecondSub) => {
            r(7, 360) * int(ni - 3) * r(7 * ni - 8, 7) * f(ni) * f(ni - 2) / f(2 * ni - 3)
        }
    })
}
