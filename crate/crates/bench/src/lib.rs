//! Benchmark fixtures shared by the criterion targets.

use tlt_core::{CircuitParams, ConfigLabel, EnergyScales, HamiltonianModel, HermitianOperator, MajoranaConfig};
use tlt_core::{PotentialMode, SubsystemLayout, TermSelection};

pub fn reference_scales() -> EnergyScales {
    CircuitParams::default().derive_scales().expect("reference circuit is valid")
}

/// Full Hamiltonian of configuration A at a uniform Fock cutoff.
pub fn full_hamiltonian(cutoff: usize) -> HermitianOperator {
    let s = reference_scales();
    let layout = SubsystemLayout::uniform(&s, cutoff);
    HamiltonianModel::new(s, layout, PotentialMode::QuarticEjq, MajoranaConfig::new(ConfigLabel::A))
        .full_h(TermSelection::all())
        .expect("reference model builds")
}

