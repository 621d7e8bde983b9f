//! Circuit parameters and the energy scales derived from them.
//!
//! Units: inductance in nH, capacitance in fF, energies in GHz (energy / h),
//! gap in GHz (or μeV through [`GapInput`]), flux as a fraction of Φ₀.
//!
//! Label and prefactor conventions:
//! * `E_Cq = e²/(h·C_Σ)` with `C_Σ = 2·C_q + C`, and `E_Cr = e²/(h·C)`.
//! * `E_Lr = (Φ₀/2π)²/(2L·h)`, so that `E_Jq* = E_Jq + E_Lr`.
//! * `ω_r = √(8·E_Cr·E_Lr)`, the exact frequency of the resonator's quadratic form.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CircuitError;

/// Reconciliation notes echoed by every front end that prints energy scales.
pub const RECONCILIATION_NOTES: [&str; 3] = [
    "charging-energy labels: E_Cq = e^2/(h*C_sigma) with C_sigma = 2*C_q + C and E_Cr = e^2/(h*C); \
     tabulated reference values that list 0.1525 GHz as E_Cr and 0.3398 GHz as E_Cq carry swapped labels",
    "inductive prefactor: E_Lr = (Phi0/2pi)^2/(2L) so that E_Jq* = E_Jq + E_Lr (18.17 + 10.00 = 28.17 GHz); \
     the 1/(4L) prefactor would give half of E_Lr and is not used",
    "resonator frequency: omega_r = sqrt(8*E_Cr*E_Lr), the exact frequency of 4*E_Cr*N_r^2 + (E_Lr/2)*phi_r^2",
];

/// Values of `e` and `h` used to convert SI circuit elements to GHz.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantSet {
    /// `e = 1.602e-19 C`, exact SI `h`. Reproduces the four-figure reference
    /// scales (E_Lr = 18.17 GHz, E_Jq* = 28.17 GHz).
    #[default]
    Rounded,
    /// Exact SI 2019 values of `e` and `h`.
    Codata,
}

impl ConstantSet {
    pub fn elementary_charge(self) -> f64 {
        match self {
            ConstantSet::Rounded => 1.602e-19,
            ConstantSet::Codata => 1.602_176_634e-19,
        }
    }

    pub fn planck(self) -> f64 {
        6.626_070_15e-34
    }

    /// Magnetic flux quantum `h / 2e`.
    pub fn flux_quantum(self) -> f64 {
        self.planck() / (2.0 * self.elementary_charge())
    }

    pub fn name(self) -> &'static str {
        match self {
            ConstantSet::Rounded => "rounded",
            ConstantSet::Codata => "codata",
        }
    }

    /// `e²/(h·C)` in GHz for `C` in fF.
    pub fn charging_energy(self, capacitance_ff: f64) -> Result<f64, CircuitError> {
        positive("capacitance", capacitance_ff)?;
        let e = self.elementary_charge();
        Ok(e * e / (self.planck() * capacitance_ff * 1e-15) / 1e9)
    }

    /// `(Φ₀/2π)²/(2L·h)` in GHz for `L` in nH.
    pub fn inductive_energy(self, inductance_nh: f64) -> Result<f64, CircuitError> {
        positive("inductance", inductance_nh)?;
        let phi = self.flux_quantum() / (2.0 * PI);
        Ok(phi * phi / (2.0 * inductance_nh * 1e-9) / self.planck() / 1e9)
    }

    /// Converts an energy in μeV to GHz.
    pub fn microvolt_to_ghz(self, mu_ev: f64) -> f64 {
        mu_ev * 1e-6 * self.elementary_charge() / self.planck() / 1e9
    }
}

impl fmt::Display for ConstantSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `E_Jq · cos(π·Φ_q/Φ₀)` for a symmetric split junction.
pub fn flux_tuned_ejq(ejq_ghz: f64, flux_q: f64) -> f64 {
    ejq_ghz * (PI * flux_q).cos()
}

/// Superconducting gap, given either directly in GHz or in μeV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GapInput {
    Ghz(f64),
    MicroElectronVolt(f64),
}

impl GapInput {
    pub fn to_ghz(self, constants: ConstantSet) -> f64 {
        match self {
            GapInput::Ghz(g) => g,
            GapInput::MicroElectronVolt(mu) => constants.microvolt_to_ghz(mu),
        }
    }
}

/// Fabrication-level circuit inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircuitParams {
    pub inductance_nh: f64,
    pub capacitance_ff: f64,
    pub qubit_capacitance_ff: f64,
    pub ej_ghz: f64,
    pub ejq_ghz: f64,
    pub junction_count: u32,
    pub gap: GapInput,
    pub flux_q: f64,
    pub ng_a: f64,
    pub ng_b: f64,
    pub constants: ConstantSet,
}

impl Default for CircuitParams {
    /// L = 4.5 nH, C = 114 fF, C_q = 70 fF, E_J = E_Jq = 10 GHz, k = 1,
    /// Δ = 100 μeV, zero flux and offsets.
    fn default() -> Self {
        Self {
            inductance_nh: 4.5,
            capacitance_ff: 114.0,
            qubit_capacitance_ff: 70.0,
            ej_ghz: 10.0,
            ejq_ghz: 10.0,
            junction_count: 1,
            gap: GapInput::MicroElectronVolt(100.0),
            flux_q: 0.0,
            ng_a: 0.0,
            ng_b: 0.0,
            constants: ConstantSet::Rounded,
        }
    }
}

impl CircuitParams {
    pub fn validate(&self) -> Result<(), CircuitError> {
        positive("inductance", self.inductance_nh)?;
        positive("capacitance", self.capacitance_ff)?;
        positive("qubit capacitance", self.qubit_capacitance_ff)?;
        positive("E_J", self.ej_ghz)?;
        positive("E_Jq", self.ejq_ghz)?;
        positive("gap", self.gap.to_ghz(self.constants))?;
        if self.junction_count == 0 {
            return Err(CircuitError::JunctionCount);
        }
        for (name, v) in [("flux_q", self.flux_q), ("ng_a", self.ng_a), ("ng_b", self.ng_b)] {
            if !v.is_finite() {
                return Err(CircuitError::NonPositive { quantity: name, value: v });
            }
        }
        Ok(())
    }

    /// Total qubit capacitance `2·C_q + C` in fF.
    pub fn sigma_capacitance_ff(&self) -> f64 {
        2.0 * self.qubit_capacitance_ff + self.capacitance_ff
    }

    pub fn derive_scales(&self) -> Result<EnergyScales, CircuitError> {
        self.validate()?;
        let k = self.constants;
        let ecq = k.charging_energy(self.sigma_capacitance_ff())?;
        let ecr = k.charging_energy(self.capacitance_ff)?;
        let elr = k.inductive_energy(self.inductance_nh)?;
        let ejq_tuned = flux_tuned_ejq(self.ejq_ghz, self.flux_q);
        let ejq_star = ejq_tuned + elr;
        if ejq_star <= 0.0 {
            return Err(CircuitError::FluxBeyondValidity { ejq_star });
        }
        Ok(EnergyScales {
            ecq,
            ecr,
            elr,
            ejq: self.ejq_ghz,
            ejq_tuned,
            ejq_star,
            ej: self.ej_ghz,
            junction_count: self.junction_count,
            omega_q: (8.0 * ecq * ejq_star).sqrt(),
            omega_r: (8.0 * ecr * elr).sqrt(),
            anharmonicity: -ecq / 2.0,
            gap: self.gap.to_ghz(k),
        })
    }
}

/// Derived energy scales, all in GHz.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyScales {
    pub ecq: f64,
    pub ecr: f64,
    pub elr: f64,
    /// Untuned junction energy `E_Jq`; the quartic term of the transmon uses it.
    pub ejq: f64,
    pub ejq_tuned: f64,
    pub ejq_star: f64,
    /// Junction energy of the resonator-side junctions (longitudinal term).
    pub ej: f64,
    pub junction_count: u32,
    pub omega_q: f64,
    pub omega_r: f64,
    /// Duffing δ = −E_Cq/2; level anharmonicity is 2δ.
    pub anharmonicity: f64,
    pub gap: f64,
}

impl EnergyScales {
    /// Same scales with a different gap.
    pub fn with_gap(mut self, gap: f64) -> Self {
        self.gap = gap;
        self
    }

    pub fn zero_point(&self) -> ZeroPoint {
        zero_point_amplitudes(self)
    }
}

/// Zero-point amplitudes of the transmon and resonator quadratures.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroPoint {
    pub phi_q: f64,
    pub n_q: f64,
    pub phi_r: f64,
    pub n_r: f64,
}

/// `φ_zpf = (2E_C/E_L)^{1/4}`, `N_zpf = ½(E_L/2E_C)^{1/4}` with `E_L = E_Jq*`
/// for the transmon and `E_Lr` for the resonator.
pub fn zero_point_amplitudes(scales: &EnergyScales) -> ZeroPoint {
    let (phi_q, n_q) = mode_zpf(scales.ecq, scales.ejq_star);
    let (phi_r, n_r) = mode_zpf(scales.ecr, scales.elr);
    ZeroPoint { phi_q, n_q, phi_r, n_r }
}

fn mode_zpf(charging: f64, inductive: f64) -> (f64, f64) {
    let phi = (2.0 * charging / inductive).powf(0.25);
    let n = 0.5 * (inductive / (2.0 * charging)).powf(0.25);
    (phi, n)
}

fn positive(quantity: &'static str, value: f64) -> Result<(), CircuitError> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(CircuitError::NonPositive { quantity, value })
    }
}
