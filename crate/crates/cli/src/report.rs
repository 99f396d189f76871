use std::io::Write;

use serde::Serialize;

use crate::config::{OutputFormat, Suite, SweepConfig};
use crate::CliError;

/// One checked case. `expected` and `computed` are compact text renderings
/// of the two sides that were compared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub case_id: String,
    pub inputs: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CaseRecord {
    pub fn new(
        case_id: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        pass: bool,
    ) -> Self {
        Self {
            case_id: case_id.into(),
            inputs: inputs.into(),
            expected: expected.into(),
            computed: computed.into(),
            pass,
            notes: Vec::new(),
        }
    }

    /// A case whose pass flag is "no failures were found".
    pub fn from_failures(
        case_id: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        failures: Vec<String>,
    ) -> Self {
        let mut r = Self::new(case_id, inputs, expected, computed, failures.is_empty());
        r.notes = failures;
        r
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Result of one suite. Contains no timing so that identical configurations
/// produce byte-identical reports; wall-clock time goes to stderr.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub config: SweepConfig,
    pub summary: Summary,
    pub cases: Vec<CaseRecord>,
}

impl VerificationReport {
    pub fn new(suite: Suite, config: SweepConfig, cases: Vec<CaseRecord>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        let summary = Summary {
            cases: cases.len(),
            passed,
            failed: cases.len() - passed,
        };
        Self {
            suite,
            config,
            summary,
            cases,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn write<W: Write>(&self, format: OutputFormat, mut out: W) -> Result<(), CliError> {
        match format {
            OutputFormat::Json => {
                serde_json::to_writer_pretty(&mut out, self)?;
                writeln!(out)?;
            }
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["suite", "case_id", "inputs", "expected", "computed", "pass"])?;
                for c in &self.cases {
                    w.write_record([
                        self.suite.name(),
                        &c.case_id,
                        &c.inputs,
                        &c.expected,
                        &c.computed,
                        if c.pass { "true" } else { "false" },
                    ])?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}
