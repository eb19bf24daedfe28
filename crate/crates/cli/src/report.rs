use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

/// One checked identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub id: String,
    pub params: String,
    pub passed: bool,
    /// Failing `(n, k)` or value, only on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Case {
    pub fn new(id: impl Into<String>, params: impl Into<String>, witness: Option<String>) -> Self {
        Self {
            id: id.into(),
            params: params.into(),
            passed: witness.is_none(),
            witness,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportData {
    pub suite: String,
    pub n_max: usize,
    pub passed: bool,
    pub cases: Vec<Case>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub data: ReportData,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    report: &'a ReportData,
    elapsed_ms: u128,
}

impl VerificationReport {
    pub fn new(suite: &str, n_max: usize, cases: Vec<Case>, elapsed: Duration) -> Self {
        Self {
            data: ReportData {
                suite: suite.to_owned(),
                n_max,
                passed: cases.iter().all(|c| c.passed),
                cases,
            },
            elapsed,
        }
    }

    pub fn passed(&self) -> bool {
        self.data.passed
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.data.cases {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status}  {:<36} {}", c.id, c.params);
            if let Some(w) = &c.witness {
                let _ = write!(out, "  witness: {w}");
            }
            out.push('\n');
        }
        let failed = self.data.cases.iter().filter(|c| !c.passed).count();
        let _ = writeln!(
            out,
            "suite {} (n_max = {}): {} of {} cases passed in {:.2?}",
            self.data.suite,
            self.data.n_max,
            self.data.cases.len() - failed,
            self.data.cases.len(),
            self.elapsed
        );
        out
    }

    /// The data section carries no timing; `elapsed_ms` sits beside it.
    pub fn to_json(&self) -> String {
        let j = JsonReport {
            report: &self.data,
            elapsed_ms: self.elapsed.as_millis(),
        };
        serde_json::to_string_pretty(&j).expect("report serializes") + "\n"
    }
}
