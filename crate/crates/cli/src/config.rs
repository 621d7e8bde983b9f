//! Run configuration: a flat JSON object whose keys default to the reference
//! circuit, overridable from the command line.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use tlt_core::{CircuitParams, ConfigLabel, ConstantSet, GapInput, ParitySector, PotentialMode};

use crate::error::{CliError, CliResult};

pub const DEFAULT_CUTOFF: usize = 5;
pub const MIN_CUTOFF: usize = 2;
pub const MAX_CUTOFF: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl From<Parity> for ParitySector {
    fn from(p: Parity) -> Self {
        match p {
            Parity::Even => ParitySector::Even,
            Parity::Odd => ParitySector::Odd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum SweepVariable {
    #[value(name = "flux_q")]
    FluxQ,
    Cutoff,
    Delta,
}

impl SweepVariable {
    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::FluxQ => "flux_q",
            SweepVariable::Cutoff => "cutoff",
            SweepVariable::Delta => "delta_GHz",
        }
    }
}

/// Inclusive grid `start, start + step, …, ≤ end`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRange {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl SweepRange {
    pub fn samples(&self) -> Vec<f64> {
        let n = ((self.end - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..n).map(|i| round_grid(self.start + i as f64 * self.step)).collect()
    }
}

fn round_grid(x: f64) -> f64 {
    let r = (x * 1e10).round() / 1e10;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

impl FromStr for SweepRange {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || CliError::Config(format!("range '{s}' must be start:end:step"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let nums: Vec<f64> = parts.iter().map(|p| p.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        let (start, end, step) = (nums[0], nums[1], nums[2]);
        if !(start.is_finite() && end.is_finite() && step.is_finite()) {
            return Err(bad());
        }
        if start >= end {
            return Err(CliError::Config(format!("range start {start} must be below end {end}")));
        }
        if step <= 0.0 {
            return Err(CliError::Config(format!("range step {step} must be positive")));
        }
        Ok(Self { start, end, step })
    }
}

impl fmt::Display for SweepRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.end, self.step)
    }
}

pub fn parse_label(s: &str) -> Result<ConfigLabel, String> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => ConfigLabel::from_symbol(c.to_ascii_uppercase()),
        _ => None,
    }
    .ok_or_else(|| format!("unknown configuration '{s}' (expected A-F)"))
}

/// All run settings. Circuit keys use nH, fF, GHz, μeV and flux quanta.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub inductance_nh: f64,
    pub capacitance_ff: f64,
    pub qubit_capacitance_ff: f64,
    pub ej_ghz: f64,
    pub ejq_ghz: f64,
    pub junction_count: u32,
    pub gap_uev: Option<f64>,
    pub gap_ghz: Option<f64>,
    pub flux_q: f64,
    pub ng_a: f64,
    pub ng_b: f64,
    pub constants: ConstantSet,
    pub fock_cutoff: usize,
    pub potential_mode: PotentialMode,
    pub output_format: OutputFormat,
    pub table: u8,
    pub parity: Option<Parity>,
    pub label: ConfigLabel,
    pub sweep_variable: Option<SweepVariable>,
    pub range: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let p = CircuitParams::default();
        Self {
            inductance_nh: p.inductance_nh,
            capacitance_ff: p.capacitance_ff,
            qubit_capacitance_ff: p.qubit_capacitance_ff,
            ej_ghz: p.ej_ghz,
            ejq_ghz: p.ejq_ghz,
            junction_count: p.junction_count,
            gap_uev: None,
            gap_ghz: None,
            flux_q: p.flux_q,
            ng_a: p.ng_a,
            ng_b: p.ng_b,
            constants: p.constants,
            fock_cutoff: DEFAULT_CUTOFF,
            potential_mode: PotentialMode::default(),
            output_format: OutputFormat::default(),
            table: 1,
            parity: None,
            label: ConfigLabel::A,
            sweep_variable: None,
            range: None,
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn from_path(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn circuit_params(&self) -> CliResult<CircuitParams> {
        let default_gap = CircuitParams::default().gap;
        let gap = match (self.gap_uev, self.gap_ghz) {
            (Some(_), Some(_)) => return Err(CliError::Config("set only one of gap_uev and gap_ghz".into())),
            (Some(mu), None) => GapInput::MicroElectronVolt(mu),
            (None, Some(g)) => GapInput::Ghz(g),
            (None, None) => default_gap,
        };
        Ok(CircuitParams {
            inductance_nh: self.inductance_nh,
            capacitance_ff: self.capacitance_ff,
            qubit_capacitance_ff: self.qubit_capacitance_ff,
            ej_ghz: self.ej_ghz,
            ejq_ghz: self.ejq_ghz,
            junction_count: self.junction_count,
            gap,
            flux_q: self.flux_q,
            ng_a: self.ng_a,
            ng_b: self.ng_b,
            constants: self.constants,
        })
    }

    pub fn sweep_range(&self) -> CliResult<Option<SweepRange>> {
        self.range.as_deref().map(str::parse).transpose()
    }

    /// Checks every setting; no computation runs on an invalid config.
    pub fn validate(&self) -> CliResult<()> {
        self.circuit_params()?.derive_scales()?;
        validate_cutoff(self.fock_cutoff)?;
        validate_table(self.table)?;
        self.sweep_range()?;
        Ok(())
    }
}

pub fn validate_cutoff(cutoff: usize) -> CliResult<()> {
    if (MIN_CUTOFF..=MAX_CUTOFF).contains(&cutoff) {
        Ok(())
    } else {
        Err(CliError::Config(format!("fock_cutoff {cutoff} outside {MIN_CUTOFF}..={MAX_CUTOFF}")))
    }
}

pub fn validate_table(table: u8) -> CliResult<()> {
    if (1..=3).contains(&table) {
        Ok(())
    } else {
        Err(CliError::Config(format!("unknown table id {table} (expected 1, 2 or 3)")))
    }
}
