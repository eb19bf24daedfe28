//! Verification suites driven by `bepart verify`.

use std::str::FromStr;
use std::time::Instant;

use bepart_core::classical::{sech_half, Family, SignedValueTable};
use bepart_core::coefficients::{
    alt_power_sum_check_with, b_closed, b_from_faulhaber_table, epsilon_table,
    faulhaber_table_gf, faulhaber_table_knuth, power_sum_check_with, salie_table,
};
use bepart_core::exact::{int, Rational};
use bepart_core::identities::{
    find_ordering_violation, find_tail_violation, p1_sum_check, p2_integral_check,
    q_factor_check, zeta_recursion_check, DistributionRow, QFactor,
};
use bepart_core::matrices::{build, closed_form_band, Band, LowerTriangularMatrix, PartitionTable};
use bepart_core::series::ExpSeries;
use bepart_core::{bernoulli, bernoulli_new_recursion};
use num_traits::{One, Signed, Zero};

use crate::report::{Case, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Matrices,
    Partitions,
    Coefficients,
    Recursions,
    Inequalities,
    Series,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = [
        "all",
        "matrices",
        "partitions",
        "coefficients",
        "recursions",
        "inequalities",
        "series",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Matrices => "matrices",
            Suite::Partitions => "partitions",
            Suite::Coefficients => "coefficients",
            Suite::Recursions => "recursions",
            Suite::Inequalities => "inequalities",
            Suite::Series => "series",
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Inequalities => 50,
            _ => 30,
        }
    }

    pub fn min_n_max(self) -> usize {
        match self {
            Suite::All | Suite::Inequalities => 3,
            _ => 1,
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Suite::All,
            "matrices" => Suite::Matrices,
            "partitions" => Suite::Partitions,
            "coefficients" => Suite::Coefficients,
            "recursions" => Suite::Recursions,
            "inequalities" => Suite::Inequalities,
            "series" => Suite::Series,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

/// Parameters shared by every suite.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub n_max: usize,
    /// Perturbs inverse entry `(m, n)` of both families before checking.
    pub corrupt_entry: Option<(usize, usize)>,
}

impl VerifyOptions {
    fn inverse(&self, family: Family) -> LowerTriangularMatrix {
        let mut inv = build(family, self.n_max)
            .invert()
            .expect("diagonals never vanish");
        if let Some((m, n)) = self.corrupt_entry {
            if n <= m && m <= self.n_max && n >= 1 {
                let v = inv.get(m, n) + Rational::new(1.into(), 1000.into());
                inv.set(m, n, v);
            }
        }
        inv
    }

    fn partitions(&self, family: Family) -> PartitionTable {
        let targets = SignedValueTable::new(family, self.n_max);
        PartitionTable::from_inverse(family, &self.inverse(family), &targets.moduli)
    }
}

const FAMILIES: [Family; 2] = [Family::Bernoulli, Family::Euler];

fn params(family: Family, n_max: usize) -> String {
    format!("family={} n<={n_max}", family.name())
}

fn first_fail<T>(iter: impl IntoIterator<Item = T>, mut bad: impl FnMut(&T) -> Option<String>) -> Option<String> {
    iter.into_iter().find_map(|x| bad(&x))
}

fn matrices(opts: &VerifyOptions) -> Vec<Case> {
    let n_max = opts.n_max;
    let mut cases = Vec::new();
    for family in FAMILIES {
        let m = build(family, n_max);
        let inv = opts.inverse(family);
        let p = params(family, n_max);

        let prod = m.mul(&inv);
        let w = first_fail(1..=n_max, |&i| {
            first_fail(1..=i, |&j| {
                let v = prod.get(i, j);
                let ok = if i == j { v.is_one() } else { v.is_zero() };
                (!ok).then(|| format!("(M M^-1)({i},{j}) = {v}"))
            })
        });
        cases.push(Case::new("inverse_identity", p.clone(), w));

        let moduli = SignedValueTable::new(family, n_max).moduli;
        let ones = m.mul_vec(&moduli[1..]);
        let w = first_fail(ones.iter().enumerate(), |(i, v)| {
            (!v.is_one()).then(|| format!("row {} gives {v}", i + 1))
        });
        cases.push(Case::new("ones_column", p.clone(), w));

        let w = first_fail(1..=n_max, |&i| {
            first_fail(1..=i, |&j| {
                let v = inv.get(i, j);
                let structural = family == Family::Bernoulli && j == 1 && i >= 2;
                if structural && !v.is_zero() {
                    Some(format!("({i},1) = {v}, expected structural zero"))
                } else if v.is_negative() {
                    Some(format!("({i},{j}) = {v}"))
                } else {
                    None
                }
            })
        });
        cases.push(Case::new("inverse_nonnegative", p.clone(), w));

        for band in [Band::Diagonal, Band::FirstSub, Band::SecondSub] {
            let w = first_fail(band.min_n()..=n_max, |&n| {
                let closed = closed_form_band(family, band, n).expect("n in range");
                let entry = inv.get(n, n - band.offset());
                (closed != entry).then(|| format!("n={n}: closed {closed}, inverse {entry}"))
            });
            cases.push(Case::new(format!("band_{band:?}").to_lowercase(), p.clone(), w));
        }
    }
    cases
}

fn partitions(opts: &VerifyOptions) -> Vec<Case> {
    let mut cases = Vec::new();
    for family in FAMILIES {
        let t = opts.partitions(family);
        let p = params(family, opts.n_max);
        let w = t.first_sum_mismatch().map(|n| {
            let r = t.row(n);
            format!("n={n}: parts sum to {}, target {}", r.sum(), r.target)
        });
        cases.push(Case::new("partition_sum", p.clone(), w));
        let w = t.first_nonpositive_part().map(|(n, k)| format!("({n},{k})"));
        cases.push(Case::new("parts_positive", p.clone(), w));
        let signed = SignedValueTable::new(family, opts.n_max);
        let w = (!signed.sign_pattern_holds()).then(|| "sign pattern of signed values".to_owned());
        cases.push(Case::new("sign_convention", p, w));
    }
    cases
}

fn coefficients(opts: &VerifyOptions) -> Vec<Case> {
    let n_max = opts.n_max;
    let mut cases = Vec::new();
    let f = faulhaber_table_gf(n_max);
    let s = salie_table(n_max);

    let b_inv = opts.inverse(Family::Bernoulli);
    let w = first_fail(2..=n_max, |&n| {
        first_fail(2..=n, |&k| {
            let a = b_inv.get(n, k);
            let b = b_from_faulhaber_table(&f, n, k);
            let c = b_closed(n, k);
            (a != b || a != c).then(|| format!("({n},{k}): inverse {a}, faulhaber {b}, closed {c}"))
        })
    });
    cases.push(Case::new("b_three_routes", format!("n<={n_max}"), w));

    let e_inv = opts.inverse(Family::Euler);
    let eps = epsilon_table(&s);
    let w = first_fail(1..=n_max, |&n| {
        first_fail(1..=n, |&k| {
            let a = e_inv.get(n, k);
            (&a != eps.at(n, k)).then(|| format!("({n},{k}): inverse {a}, salie {}", eps.at(n, k)))
        })
    });
    cases.push(Case::new("eps_two_routes", format!("n<={n_max}"), w));

    let knuth_max = n_max.min(12);
    let a = faulhaber_table_knuth(knuth_max + 1);
    let w = first_fail(1..=knuth_max, |&n| {
        first_fail(1..=n, |&k| {
            let lhs = a.at(n + 1, n - k);
            let rhs = f.at(n, k) * int(n as i64 + 1);
            (lhs != &rhs).then(|| format!("({n},{k}): knuth {lhs}, (n+1) f {rhs}"))
        })
    });
    cases.push(Case::new("knuth_vs_gv", format!("n<={knuth_max}"), w));

    let pm = n_max.min(15);
    let w = first_fail(0..=pm, |&n| (!power_sum_check_with(&f, n, 30)).then(|| format!("n={n}")));
    cases.push(Case::new("odd_power_sums", format!("n<={pm} m<=30"), w));
    let w = first_fail(1..=pm, |&n| (!alt_power_sum_check_with(&s, n, 30)).then(|| format!("n={n}")));
    cases.push(Case::new("alt_power_sums", format!("n<={pm} m<=30"), w));

    let pq = n_max.min(30);
    let nk = || (2..=pq).flat_map(|n| (2..=n).map(move |k| (n, k)));
    let w = first_fail(nk(), |&(n, k)| (!p1_sum_check(n, k)).then(|| format!("({n},{k})")));
    cases.push(Case::new("p1_sum", format!("n<={pq}"), w));
    let w = first_fail(nk(), |&(n, k)| (!p2_integral_check(n, k)).then(|| format!("({n},{k})")));
    cases.push(Case::new("p2_integral", format!("n<={pq}"), w));
    for (id, which) in [("q1_factor", QFactor::Q1), ("q2_factor", QFactor::Q2)] {
        let w = first_fail(nk(), |&(n, k)| (!q_factor_check(which, n, k)).then(|| format!("({n},{k})")));
        cases.push(Case::new(id, format!("n<={pq}"), w));
    }
    cases
}

fn recursions(opts: &VerifyOptions) -> Vec<Case> {
    let n_max = opts.n_max;
    let mut cases = Vec::new();
    let w = first_fail(1..=n_max, |&m| {
        let rep = zeta_recursion_check(m);
        if !rep.holds {
            return Some(format!("m={m}: lhs {}, rhs {}", rep.lhs, rep.rhs()));
        }
        rep.partial_sums()
            .into_iter()
            .find(|(_, s)| !s.is_positive())
            .map(|(n, s)| format!("m={m}: n-summand {n} = {s}"))
    });
    cases.push(Case::new("zeta_recursion", format!("m<={n_max}"), w));
    let w = first_fail(2..=n_max.max(2), |&m| {
        let a = bernoulli_new_recursion(2 * m).expect("m >= 2");
        let b = bernoulli(2 * m).expect("even");
        (a != b).then(|| format!("B_{}: recursion {a}, classical {b}", 2 * m))
    });
    cases.push(Case::new("bernoulli_recursion", format!("m<={}", n_max.max(2)), w));
    cases
}

fn inequalities(opts: &VerifyOptions) -> Vec<Case> {
    let mut cases = Vec::new();
    for family in FAMILIES {
        let t = opts.partitions(family);
        let p = params(family, opts.n_max);
        let w = find_ordering_violation(&t).map(|(n, k)| format!("({n},{k})"));
        cases.push(Case::new("ordering", p.clone(), w));
        let w = find_tail_violation(&t).map(|(n, k)| format!("({n},{k})"));
        cases.push(Case::new("tail_chain", p.clone(), w));
        let first = if family == Family::Bernoulli { 2 } else { 1 };
        let w = first_fail(first..=opts.n_max, |&n| {
            let d = DistributionRow::from_partition(t.row(n));
            if !d.total().is_one() {
                Some(format!("n={n}: sum {}", d.total()))
            } else if !d.is_well_ordered() {
                Some(format!("n={n}: not well ordered"))
            } else {
                None
            }
        });
        cases.push(Case::new("distribution", p, w));
    }
    cases
}

/// Deterministic pseudo-random series for the mul/div round trip.
fn sample_series(order: usize, seed: u64, unit: bool) -> ExpSeries {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) % 19) as i64 - 9
    };
    let coeffs = (0..=order)
        .map(|m| {
            if m == 0 && unit {
                return bepart_core::RationalPolynomial::constant(int(1 + next().abs()));
            }
            bepart_core::RationalPolynomial::new(
                (0..3).map(|_| Rational::new(next().into(), (1 + next().abs()).into())).collect(),
            )
        })
        .collect();
    ExpSeries::from_coeffs(coeffs)
}

fn series(opts: &VerifyOptions) -> Vec<Case> {
    let order = 2 * opts.n_max;
    let mut cases = Vec::new();

    let w = first_fail(0..100u64, |&seed| {
        let o = (seed % 17) as usize;
        let a = sample_series(o, seed, false);
        let b = sample_series(o, seed ^ 0xabcd, true);
        let back = a.div(&b).and_then(|q| q.mul(&b)).ok();
        (back.as_ref() != Some(&a)).then(|| format!("seed={seed} order={o}"))
    });
    cases.push(Case::new("div_inverts_mul", "100 trials, order<=16", w));

    let prod = sech_half(order).mul(&ExpSeries::cosh_half(order)).expect("same order");
    let w = (!prod.is_one()).then(|| "sech(x/2) cosh(x/2) != 1".to_owned());
    cases.push(Case::new("sech_times_cosh", format!("order={order}"), w));

    let named = [
        ("cosh_sqrt_one_plus_4y", ExpSeries::cosh_sqrt_one_plus_4y(order)),
        ("cosh_half", ExpSeries::cosh_half(order)),
        ("cosh_shift4", ExpSeries::cosh_shifted_sqrt(order, 4)),
        ("sinh_half_reduced", ExpSeries::sinh_half_reduced(order)),
        ("sinh_sqrt_y_reduced", ExpSeries::sinh_sqrt_y_reduced(order)),
        ("sech_half", sech_half(order)),
    ];
    let w = first_fail(named.iter(), |(name, s)| (!s.respects_parity()).then(|| name.to_string()));
    cases.push(Case::new("parity", format!("order={order}"), w));

    let full = ExpSeries::cosh_sqrt_one_plus_4y(order);
    let half = ExpSeries::cosh_half(order);
    let w = first_fail(0..=order, |&m| {
        (full.coeff(m).coeff(0) != half.coeff(m).coeff(0)).then(|| format!("m={m}"))
    });
    cases.push(Case::new("y_zero_reduction", format!("order={order}"), w));

    let w = first_fail(0..=order, |&m| {
        let fm = Rational::from_integer(bepart_core::factorial(m as i64).expect("m >= 0"));
        first_fail(0..=m, |&k| {
            (full.plain_coeff(m, k) * &fm != full.coeff(m).coeff(k)).then(|| format!("m={m} k={k}"))
        })
    });
    cases.push(Case::new("normalization", format!("order={order}"), w));
    cases
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> VerificationReport {
    let t0 = Instant::now();
    let tag = |name: &str, cases: Vec<Case>| -> Vec<Case> {
        cases
            .into_iter()
            .map(|mut c| {
                c.id = format!("{name}/{}", c.id);
                c
            })
            .collect()
    };
    type SuiteFn = fn(&VerifyOptions) -> Vec<Case>;
    let parts: [(Suite, SuiteFn); 6] = [
        (Suite::Matrices, matrices),
        (Suite::Partitions, partitions),
        (Suite::Coefficients, coefficients),
        (Suite::Recursions, recursions),
        (Suite::Inequalities, inequalities),
        (Suite::Series, series),
    ];
    let cases = parts
        .into_iter()
        .filter(|(s, _)| suite == Suite::All || *s == suite)
        .flat_map(|(s, f)| tag(s.name(), f(opts)))
        .collect();
    VerificationReport::new(suite.name(), opts.n_max, cases, t0.elapsed())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Matrices, Suite::Partitions, Suite::Coefficients, Suite::Recursions, Suite::Series] {
            let rep = run(suite, &VerifyOptions { n_max: 6, corrupt_entry: None });
            assert!(rep.passed(), "{}", rep.to_text());
        }
    }

    #[test]
    fn corruption_is_caught() {
        let opts = VerifyOptions {
            n_max: 6,
            corrupt_entry: Some((4, 3)),
        };
        let rep = run(Suite::Matrices, &opts);
        assert!(!rep.passed());
        let failing: Vec<_> = rep.data.cases.iter().filter(|c| !c.passed).collect();
        assert!(failing.iter().any(|c| c.id == "matrices/inverse_identity"));
        assert!(run(Suite::Inequalities, &opts).data.cases.iter().any(|c| !c.passed));
    }

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
