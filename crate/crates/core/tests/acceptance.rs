//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p bepart-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bepart_core::classical::{Family, SignedValueTable};
use bepart_core::coefficients::{
    b_closed, b_from_faulhaber_table, epsilon_table, faulhaber_table_gf, salie_table,
};
use bepart_core::identities::{
    abs_diff, asymptotic_ratio, find_ordering_violation, find_tail_violation, p1_sum_check,
    p2_integral_check, q_factor_check, zeta_recursion_check, DistributionRow, QFactor,
};
use bepart_core::matrices::{build_mb, build_me, closed_form_band, Band, PartitionTable};
use bepart_core::{
    alt_power_sum_check, bernoulli, bernoulli_new_recursion, parse_rational, power_sum_check,
    LowerTriangularMatrix, Rational,
};
use num_traits::{One, Zero};

type Outcome = Result<String, String>;

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn grid(rows: &[&[&str]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()
}

fn compare(name: &str, m: &LowerTriangularMatrix, expect: &[Vec<Rational>]) -> Result<usize, String> {
    let mut count = 0;
    for (i, row) in expect.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let got = m.get(i + 1, j + 1);
            if &got != v {
                return Err(format!("{name}({}, {}) = {got}, printed {v}", i + 1, j + 1));
            }
            count += 1;
        }
    }
    Ok(count)
}

fn golden_matrices() -> Outcome {
    let t0 = Instant::now();
    let mb = grid(&[
        &["6", "0", "0", "0", "0", "0"],
        &["0", "30", "0", "0", "0", "0"],
        &["0", "-70", "140", "0", "0", "0"],
        &["0", "0", "-840", "630", "0", "0"],
        &["0", "0", "924", "-6930", "2772", "0"],
        &["0", "0", "0", "18018", "-48048", "12012"],
    ]);
    let mb_inv = grid(&[
        &["1/6", "0", "0", "0", "0", "0"],
        &["0", "1/30", "0", "0", "0", "0"],
        &["0", "1/60", "1/140", "0", "0", "0"],
        &["0", "1/45", "1/105", "1/630", "0", "0"],
        &["0", "1/20", "3/140", "1/252", "1/2772", "0"],
        &["0", "1/6", "1/14", "17/1260", "1/693", "1/12012"],
    ]);
    let me = grid(&[
        &["4", "0", "0", "0", "0", "0"],
        &["-16", "16", "0", "0", "0", "0"],
        &["0", "-192", "64", "0", "0", "0"],
        &["0", "256", "-1536", "256", "0", "0"],
        &["0", "0", "5120", "-10240", "1024", "0"],
        &["0", "0", "-4096", "61440", "-61440", "4096"],
    ]);
    let me_inv = grid(&[
        &["1/4", "0", "0", "0", "0", "0"],
        &["1/4", "1/16", "0", "0", "0", "0"],
        &["3/4", "3/16", "1/64", "0", "0", "0"],
        &["17/4", "17/16", "3/32", "1/256", "0", "0"],
        &["155/4", "155/16", "55/64", "5/128", "1/1024", "0"],
        &["2073/4", "2073/16", "23/2", "135/256", "15/1024", "1/4096"],
    ]);
    let b = build_mb(6);
    let e = build_me(6);
    let bi = b.invert().map_err(|e| e.to_string())?;
    let ei = e.invert().map_err(|e| e.to_string())?;
    let mut n = 0;
    n += compare("M_B", &b, &mb)?;
    n += compare("M_B^-1", &bi, &mb_inv)?;
    n += compare("M_E", &e, &me)?;
    n += compare("M_E^-1", &ei, &me_inv)?;
    let el = t0.elapsed();
    if el >= Duration::from_secs(1) {
        return Err(format!("took {el:?}, limit 1 s"));
    }
    Ok(format!("{n} entries exact in {el:.2?}"))
}

fn headline_partitions() -> Outcome {
    let check = |family, target: &str, parts: &[&str]| -> Result<(), String> {
        let t = PartitionTable::new(family, 6);
        let row = t.row(6);
        let got: Vec<String> = row.parts.iter().map(|(_, p)| p.to_string()).collect();
        if got != parts {
            return Err(format!("{family:?} parts {got:?}"));
        }
        if row.target != q(target) || row.sum() != row.target {
            return Err(format!("{family:?} target {} sum {}", row.target, row.sum()));
        }
        Ok(())
    };
    check(
        Family::Euler,
        "2702765/4096",
        &["2073/4", "2073/16", "23/2", "135/256", "15/1024", "1/4096"],
    )?;
    check(
        Family::Bernoulli,
        "691/2730",
        &["1/6", "1/14", "17/1260", "1/693", "1/12012"],
    )?;
    Ok("|E_12(1/2)| and |B_12| partitions exact".into())
}

fn ones_column() -> Outcome {
    let n = 60;
    for (family, m) in [(Family::Euler, build_me(n)), (Family::Bernoulli, build_mb(n))] {
        let moduli = SignedValueTable::new(family, n).moduli;
        let prod = m.mul_vec(&moduli[1..]);
        if let Some(i) = prod.iter().position(|v| !v.is_one()) {
            return Err(format!("{family:?} row {} gives {}", i + 1, prod[i]));
        }
    }
    Ok(format!("M_E |E| = M_B |B| = 1 for N = {n}"))
}

fn route_agreement() -> Outcome {
    let n_max = 40;
    let mb_inv = build_mb(n_max).invert().map_err(|e| e.to_string())?;
    let f = faulhaber_table_gf(n_max - 1);
    let mut count = 0;
    for n in 2..=n_max {
        for k in 2..=n {
            let a = mb_inv.get(n, k);
            let b = b_from_faulhaber_table(&f, n, k);
            let c = b_closed(n, k);
            if a != b || a != c {
                return Err(format!("b({n},{k}): inverse {a}, faulhaber {b}, closed {c}"));
            }
            count += 1;
        }
    }
    let me_inv = build_me(n_max).invert().map_err(|e| e.to_string())?;
    let eps = epsilon_table(&salie_table(n_max));
    for n in 1..=n_max {
        for k in 1..=n {
            let a = me_inv.get(n, k);
            if &a != eps.at(n, k) {
                return Err(format!("eps({n},{k}): inverse {a}, salie {}", eps.at(n, k)));
            }
            count += 1;
        }
    }
    Ok(format!("{count} entries agree across routes, n <= {n_max}"))
}

fn power_sums() -> Outcome {
    for n in 0..=15 {
        if !power_sum_check(n, 30) {
            return Err(format!("odd power sum fails at n = {n}"));
        }
    }
    for n in 1..=15 {
        if !alt_power_sum_check(n, 30) {
            return Err(format!("alternating power sum fails at n = {n}"));
        }
    }
    Ok("Faulhaber and Salie identities, n <= 15, m <= 30".into())
}

fn recursions() -> Outcome {
    for m in 1..=40 {
        let rep = zeta_recursion_check(m);
        if !rep.holds {
            return Err(format!("zeta recursion fails at m = {m}: {} vs {}", rep.lhs, rep.rhs()));
        }
        if let Some((n, s)) = rep.partial_sums().into_iter().find(|(_, s)| s <= &Rational::zero()) {
            return Err(format!("m = {m}: n-summand {n} is {s}"));
        }
    }
    for m in 2..=60 {
        if bernoulli_new_recursion(2 * m).unwrap() != bernoulli(2 * m).unwrap() {
            return Err(format!("B_{} recursion mismatch", 2 * m));
        }
    }
    Ok("zeta recursion m <= 40, B_2m recursion m <= 60".into())
}

fn p_representations() -> Outcome {
    for n in 2..=30 {
        for k in 2..=n {
            if !p1_sum_check(n, k) {
                return Err(format!("sum of p1 at ({n},{k})"));
            }
            if !p2_integral_check(n, k) {
                return Err(format!("integral of p2 at ({n},{k})"));
            }
            for which in [QFactor::Q1, QFactor::Q2] {
                if !q_factor_check(which, n, k) {
                    return Err(format!("{which:?} factorization at ({n},{k})"));
                }
            }
        }
    }
    Ok("p1, p2, q1, q2 for 2 <= k <= n <= 30".into())
}

fn inequalities() -> Outcome {
    let n_max = 50;
    for family in [Family::Bernoulli, Family::Euler] {
        let t = PartitionTable::new(family, n_max);
        if let Some((n, k)) = find_ordering_violation(&t) {
            return Err(format!("{family:?} ordering at ({n},{k})"));
        }
        if let Some((n, k)) = find_tail_violation(&t) {
            return Err(format!("{family:?} tail chain at ({n},{k})"));
        }
        let first = if family == Family::Bernoulli { 2 } else { 1 };
        for n in first..=n_max {
            let d = DistributionRow::from_partition(t.row(n));
            if !d.total().is_one() {
                return Err(format!("{family:?} r({n},.) sums to {}", d.total()));
            }
            if !d.is_well_ordered() {
                return Err(format!("{family:?} r({n},.) not well ordered"));
            }
        }
    }
    Ok(format!("ordering, tail chain and distributions, n <= {n_max}"))
}

fn bands() -> Outcome {
    let n_max = 60;
    let mut count = 0;
    for family in [Family::Bernoulli, Family::Euler] {
        let m = match family {
            Family::Bernoulli => build_mb(n_max),
            Family::Euler => build_me(n_max),
        };
        let inv = m.invert().map_err(|e| e.to_string())?;
        for band in [Band::Diagonal, Band::FirstSub, Band::SecondSub] {
            for n in band.min_n()..=n_max {
                let closed = closed_form_band(family, band, n).map_err(|e| e.to_string())?;
                let entry = inv.get(n, n - band.offset());
                if closed != entry {
                    return Err(format!("{family:?} {band:?} n = {n}: {closed} vs {entry}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} band entries, n <= {n_max}"))
}

fn asymptotic_sweep() -> Outcome {
    let one = Rational::one();
    let tol = Rational::new(1.into(), 1000.into());
    let mut notes = Vec::new();
    let mut failure = None;
    for k in 4..=6 {
        let devs: Vec<Rational> = (k..=40).map(|n| abs_diff(&asymptotic_ratio(n, k), &one)).collect();
        if let Some(i) = devs.windows(2).position(|w| w[1] >= w[0]) {
            failure.get_or_insert(format!("k = {k}: |ratio - 1| not decreasing at n = {}", k + i + 1));
        }
        let last = devs.last().unwrap();
        notes.push(format!("k={k}: {}", bepart_core::exact::approx_decimal(last, 6)));
        if last >= &tol {
            failure.get_or_insert(format!("k = {k}: |ratio - 1| at n = 40 is {}", bepart_core::exact::approx_decimal(last, 6)));
        }
    }
    match failure {
        Some(f) => Err(format!("{f} (n = 40 deviations: {})", notes.join(", "))),
        None => Ok(format!("n = 40 deviations: {}", notes.join(", "))),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("golden 6x6 matrices and inverses", golden_matrices),
        ("headline partitions of |E_12(1/2)| and |B_12|", headline_partitions),
        ("ones-column identity, N = 60", ones_column),
        ("three-route b(n,k), two-route eps(n,k), n <= 40", route_agreement),
        ("power-sum identities", power_sums),
        ("zeta and Bernoulli recursions", recursions),
        ("p1/p2 sum and integral forms, q1/q2 factorizations", p_representations),
        ("ordering and tail inequalities, distributions", inequalities),
        ("band closed forms, n <= 60", bands),
        ("asymptotic ratio sweep, k in 4..=6", asymptotic_sweep),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = run();
        let el = t0.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  criterion {:>2}: {name} [{detail}] ({el:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {name} [{why}] ({el:.2?})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
