//! Text, JSON and CSV renderings for `gen`, `dist` and `zeta`.

use std::fmt::Write as _;

use bepart_core::classical::Family;
use bepart_core::exact::{approx_decimal, to_canonical, Rational};
use bepart_core::identities::DistributionRow;
use bepart_core::matrices::PartitionTable;
use serde::Serialize;

pub const DECIMAL_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DistFormat {
    Text,
    Json,
    Csv,
}

#[derive(Serialize)]
struct JsonPart {
    k: usize,
    value: String,
}

#[derive(Serialize)]
struct JsonRow {
    n: usize,
    target: String,
    parts: Vec<JsonPart>,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    family: &'a str,
    rows: Vec<JsonRow>,
}

pub fn partition_json(table: &PartitionTable) -> String {
    let j = JsonTable {
        family: table.family.name(),
        rows: table
            .rows
            .iter()
            .map(|r| JsonRow {
                n: r.n,
                target: to_canonical(&r.target),
                parts: r
                    .parts
                    .iter()
                    .map(|(k, v)| JsonPart {
                        k: *k,
                        value: to_canonical(v),
                    })
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&j).expect("table serializes") + "\n"
}

pub fn partition_csv(table: &PartitionTable) -> String {
    let mut out = String::from("family,n,k,value,target\n");
    let name = table.family.name();
    for r in &table.rows {
        let target = to_canonical(&r.target);
        for (k, v) in &r.parts {
            let _ = writeln!(out, "{name},{},{k},{},{target}", r.n, to_canonical(v));
        }
    }
    out
}

pub fn partition(table: &PartitionTable, format: TableFormat) -> String {
    match format {
        TableFormat::Json => partition_json(table),
        TableFormat::Csv => partition_csv(table),
    }
}

#[derive(Serialize)]
struct JsonRatio {
    k: usize,
    ratio: String,
    approx_decimal: String,
}

#[derive(Serialize)]
struct JsonDist<'a> {
    family: &'a str,
    n: usize,
    ratios: Vec<JsonRatio>,
}

pub fn distribution(family: Family, row: &DistributionRow, format: DistFormat) -> String {
    let approx = |r: &Rational| approx_decimal(r, DECIMAL_DIGITS);
    match format {
        DistFormat::Text => {
            let mut out = String::new();
            for (k, r) in &row.ratios {
                let _ = writeln!(out, "{k:>4}  {:<40} {}", to_canonical(r), approx(r));
            }
            out
        }
        DistFormat::Json => {
            let j = JsonDist {
                family: family.name(),
                n: row.n,
                ratios: row
                    .ratios
                    .iter()
                    .map(|(k, r)| JsonRatio {
                        k: *k,
                        ratio: to_canonical(r),
                        approx_decimal: approx(r),
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&j).expect("distribution serializes") + "\n"
        }
        DistFormat::Csv => {
            let mut out = String::from("family,n,k,ratio,approx_decimal\n");
            for (k, r) in &row.ratios {
                let _ = writeln!(out, "{},{},{k},{},{}", family.name(), row.n, to_canonical(r), approx(r));
            }
            out
        }
    }
}

/// One line of the `zeta` listing; `recursion` is `None` where no check applies.
pub struct ZetaLine {
    pub m: usize,
    pub value: Rational,
    pub recursion: Option<bool>,
}

pub fn zeta_table(lines: &[ZetaLine]) -> String {
    let mut out = format!("{:>4} {:>5}  {:<40} {}\n", "m", "2m", "zeta_hat(2m)", "recursion");
    for l in lines {
        let verdict = match l.recursion {
            None => "n/a",
            Some(true) => "ok",
            Some(false) => "FAIL",
        };
        let _ = writeln!(out, "{:>4} {:>5}  {:<40} {verdict}", l.m, 2 * l.m, to_canonical(&l.value));
    }
    out
}
