use std::fmt;
use std::path::PathBuf;

use clap::ValueEnum;
use serde::Serialize;

use satake_core::loop_convolution::is_prime;

use crate::CliError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    HomAgreement,
    Annihilators,
    Orbits,
    Stalks,
    CoherentSide,
    InvariantTheory,
    Koszul,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::HomAgreement => "hom-agreement",
            Suite::Annihilators => "annihilators",
            Suite::Orbits => "orbits",
            Suite::Stalks => "stalks",
            Suite::CoherentSide => "coherent-side",
            Suite::InvariantTheory => "invariant-theory",
            Suite::Koszul => "koszul",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

/// Bounds for a verification sweep. Serialized into every report so a
/// report records exactly what was checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub lam_max: i64,
    pub mu_bound: i64,
    pub max_degree: i64,
    pub k_max: usize,
    pub finite_field_primes: Vec<u64>,
    pub output_format: OutputFormat,
    #[serde(skip)]
    pub output_path: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            lam_max: 4,
            mu_bound: 4,
            max_degree: 20,
            k_max: 3,
            finite_field_primes: vec![3, 5, 7],
            output_format: OutputFormat::Json,
            output_path: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |msg: String| Err(CliError::Config(msg));
        if self.lam_max < 0 || self.mu_bound < 0 || self.max_degree < 0 {
            return bad("bounds must be non-negative".into());
        }
        if self.k_max == 0 {
            return bad("--k-max must be at least 1".into());
        }
        if self.finite_field_primes.is_empty() {
            return bad("--primes needs at least one prime".into());
        }
        for &q in &self.finite_field_primes {
            if !is_prime(q) {
                return bad(format!("{q} is not prime"));
            }
            if (self.k_max as u64) > q || q == 2 {
                return bad(format!(
                    "conductor characters of level up to {} need primes q >= max(3, k_max); got {q}",
                    self.k_max
                ));
            }
        }
        Ok(())
    }
}

/// Parses `L,M` into a pair of integers.
pub fn parse_int_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two comma-separated integers, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_pairs() {
        assert_eq!(parse_int_pair("1,-3"), Ok((1, -3)));
        assert_eq!(parse_int_pair(" 2 , 0"), Ok((2, 0)));
        assert!(parse_int_pair("2").is_err());
        assert!(parse_int_pair("a,1").is_err());
    }

    #[test]
    fn default_config_is_valid() {
        assert!(SweepConfig::default().validate().is_ok());
        let c = SweepConfig {
            finite_field_primes: vec![2],
            k_max: 1,
            ..SweepConfig::default()
        };
        assert!(c.validate().is_err());
    }
}
