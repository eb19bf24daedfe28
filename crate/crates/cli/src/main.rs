use std::io::Write as _;
use std::process::ExitCode;

use bepart_cli::render::{self, DistFormat, TableFormat, ZetaLine};
use bepart_cli::suites::{self, Suite, VerifyOptions};
use bepart_core::classical::{reduced_zeta, Family};
use bepart_core::identities::{distribution_row, zeta_recursion_check};
use bepart_core::matrices::partition_table;
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

/// Exact Bernoulli and Euler partitions.
#[derive(Parser)]
#[command(name = "bepart", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Bernoulli,
    Euler,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Bernoulli => Family::Bernoulli,
            FamilyArg::Euler => Family::Euler,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the partition table for rows 1..=N_MAX.
    Gen {
        #[arg(value_enum, conflicts_with = "family_flag")]
        family: Option<FamilyArg>,
        #[arg(conflicts_with = "n_max_flag")]
        n_max: Option<usize>,
        #[arg(value_enum, conflicts_with = "format_flag")]
        format: Option<TableFormat>,
        #[arg(long = "family", value_enum, value_name = "FAMILY")]
        family_flag: Option<FamilyArg>,
        #[arg(long = "n-max", value_name = "N_MAX")]
        n_max_flag: Option<usize>,
        #[arg(long = "format", value_enum, value_name = "FORMAT")]
        format_flag: Option<TableFormat>,
    },
    /// Run a verification suite; exits 1 if any case fails.
    Verify {
        #[arg(conflicts_with = "suite_flag", value_parser = Suite::NAMES)]
        suite: Option<String>,
        #[arg(conflicts_with = "n_max_flag")]
        n_max: Option<usize>,
        #[arg(long = "suite", value_name = "SUITE", value_parser = Suite::NAMES)]
        suite_flag: Option<String>,
        #[arg(long = "n-max", value_name = "N_MAX")]
        n_max_flag: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
        /// Perturb inverse entry M,N before checking.
        #[arg(long, hide = true, value_parser = parse_entry)]
        corrupt_entry: Option<(usize, usize)>,
    },
    /// Print the distribution of row N as exact ratios.
    Dist {
        #[arg(value_enum, conflicts_with = "family_flag")]
        family: Option<FamilyArg>,
        #[arg(conflicts_with = "n_flag")]
        n: Option<usize>,
        #[arg(value_enum, conflicts_with = "format_flag")]
        format: Option<DistFormat>,
        #[arg(long = "family", value_enum, value_name = "FAMILY")]
        family_flag: Option<FamilyArg>,
        #[arg(long = "n", value_name = "N")]
        n_flag: Option<usize>,
        #[arg(long = "format", value_enum, value_name = "FORMAT")]
        format_flag: Option<DistFormat>,
    },
    /// List reduced zeta values and check their recursion.
    Zeta {
        #[arg(default_value_t = 10)]
        m_max: usize,
    },
}

fn parse_entry(s: &str) -> Result<(usize, usize), String> {
    let (m, n) = s.split_once(',').ok_or("expected M,N")?;
    let m = m.trim().parse().map_err(|e| format!("{e}"))?;
    let n = n.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((m, n))
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

fn required<T>(value: Option<T>, name: &str) -> T {
    value.unwrap_or_else(|| usage_error(format!("missing {name}")))
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    // A closed pipe is not an error for a filter-style tool.
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen {
            family,
            n_max,
            format,
            family_flag,
            n_max_flag,
            format_flag,
        } => {
            let family: Family = required(family.or(family_flag), "FAMILY").into();
            let n_max = required(n_max.or(n_max_flag), "N_MAX");
            if n_max == 0 {
                usage_error("N_MAX must be at least 1");
            }
            let format = format.or(format_flag).unwrap_or(TableFormat::Json);
            emit(&render::partition(&partition_table(family, n_max), format));
            ExitCode::SUCCESS
        }
        Command::Verify {
            suite,
            n_max,
            suite_flag,
            n_max_flag,
            report,
            corrupt_entry,
        } => {
            let suite: Suite = suite
                .or(suite_flag)
                .map_or(Suite::All, |s| s.parse().expect("validated by clap"));
            let n_max = n_max.or(n_max_flag).unwrap_or(suite.default_n_max());
            if n_max < suite.min_n_max() {
                usage_error(format!(
                    "suite {} needs N_MAX >= {}",
                    suite.name(),
                    suite.min_n_max()
                ));
            }
            let rep = suites::run(
                suite,
                &VerifyOptions {
                    n_max,
                    corrupt_entry,
                },
            );
            emit(&match report {
                ReportFormat::Text => rep.to_text(),
                ReportFormat::Json => rep.to_json(),
            });
            if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Dist {
            family,
            n,
            format,
            family_flag,
            n_flag,
            format_flag,
        } => {
            let family: Family = required(family.or(family_flag), "FAMILY").into();
            let n = required(n.or(n_flag), "N");
            let row = distribution_row(family, n).unwrap_or_else(|e| usage_error(e));
            let format = format.or(format_flag).unwrap_or(DistFormat::Text);
            emit(&render::distribution(family, &row, format));
            ExitCode::SUCCESS
        }
        Command::Zeta { m_max } => {
            if m_max == 0 {
                usage_error("M_MAX must be at least 1");
            }
            let lines: Vec<ZetaLine> = (1..=m_max)
                .map(|m| ZetaLine {
                    m,
                    value: reduced_zeta(2 * m).expect("even argument"),
                    recursion: (m >= 2).then(|| zeta_recursion_check(m - 1).holds),
                })
                .collect();
            let ok = lines.iter().all(|l| l.recursion != Some(false));
            emit(&render::zeta_table(&lines));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
