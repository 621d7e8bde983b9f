//! Two-level projection of coupling terms and extraction of effective Pauli
//! couplings, per Majorana configuration and fermion-parity sector.
//!
//! Qubit convention for the bosonic modes: the ordered basis is
//! `(excited, ground)`, so `σz` has the ground state at −1. For the Majorana
//! factor the ordered basis is the sector basis, where `iγ₁γ₂ → +σz`.

use std::fmt;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::circuit::EnergyScales;
use crate::error::{ProjectionError, Result};
use crate::hamiltonian::{
    charge_coupling_h, fje_h, fje_h_with, quadratures, resonator_h, transmon_h, FockSpace, PotentialMode,
    ResonatorConstruction, SubsystemLayout,
};
use crate::majorana::{
    majorana_charging, sector_splitting, ConfigLabel, MajoranaAlgebra, MajoranaConfig, ParitySector,
};
use crate::numerics::{eigh, kron_all, pauli_decompose, ComplexMatrix, HermitianOperator, Pauli, PauliTerm};

/// Minimum gap between the two lowest levels for a usable qubit subspace (GHz).
pub const MIN_QUBIT_GAP: f64 = 1e-6;
/// Couplings below this magnitude (GHz) are reported as decoupled.
pub const DECOUPLED_TOL: f64 = 1e-9;
/// Residual Pauli weight above this fraction of the dominant² is flagged.
pub const RESIDUAL_WEIGHT_TOL: f64 = 1e-4;

/// The two lowest eigenvectors of a bare subsystem Hamiltonian.
#[derive(Debug, Clone)]
pub struct QubitSubspace {
    ground: Vec<C64>,
    excited: Vec<C64>,
    gap: f64,
}

/// Diagonalizes `h_bare` and keeps its two lowest levels.
pub fn qubit_subspace(h_bare: &HermitianOperator) -> Result<QubitSubspace> {
    let eig = eigh(h_bare)?;
    if eig.dim() < 2 {
        return Err(ProjectionError::NearDegenerate { gap: 0.0 }.into());
    }
    let gap = eig.eigenvalues[1] - eig.eigenvalues[0];
    if gap <= MIN_QUBIT_GAP {
        return Err(ProjectionError::NearDegenerate { gap }.into());
    }
    Ok(QubitSubspace { ground: eig.vector(0), excited: eig.vector(1), gap })
}

impl QubitSubspace {
    /// Fock states |0⟩ and |1⟩ of a `dim`-level mode.
    pub fn harmonic(dim: usize) -> Self {
        let basis = |k: usize| {
            let mut v = vec![C64::new(0.0, 0.0); dim];
            v[k] = C64::new(1.0, 0.0);
            v
        };
        Self { ground: basis(0), excited: basis(1), gap: f64::NAN }
    }

    pub fn dim(&self) -> usize {
        self.ground.len()
    }

    pub fn ground(&self) -> &[C64] {
        &self.ground
    }

    pub fn excited(&self) -> &[C64] {
        &self.excited
    }

    /// Level spacing of the bare Hamiltonian; NaN for [`QubitSubspace::harmonic`].
    pub fn gap(&self) -> f64 {
        self.gap
    }

    /// `dim x 2` isometry with columns `(excited, ground)`.
    pub fn isometry(&self) -> ComplexMatrix {
        ComplexMatrix::from_columns(&[&self.excited, &self.ground])
    }

    /// `|⟨n|ground⟩|` and `|⟨n+1|excited⟩|`-style Fock overlaps: `(|⟨0|g⟩|, |⟨1|e⟩|)`.
    pub fn fock_overlaps(&self) -> (f64, f64) {
        (self.ground[0].norm(), self.excited[1].norm())
    }

    /// Pauli operator on the full mode space: the 2x2 Pauli on the qubit block
    /// plus the identity on its orthogonal complement.
    pub fn pauli_op(&self, p: Pauli) -> HermitianOperator {
        let w = self.isometry();
        let block = &(&w * &p.matrix()) * &w.adjoint();
        let proj = &w * &w.adjoint();
        let complement = &ComplexMatrix::identity(self.dim()) - &proj;
        HermitianOperator::new(&block + &complement).expect("Pauli block is Hermitian")
    }
}

/// `transmon qubit ⊗ resonator qubit ⊗ Majorana sector`: an 8-dimensional
/// three-qubit subspace of the full layout.
#[derive(Debug, Clone)]
pub struct JointSubspace {
    pub transmon: QubitSubspace,
    pub resonator: QubitSubspace,
    pub sector: ParitySector,
}

impl JointSubspace {
    pub fn isometry(&self) -> ComplexMatrix {
        kron_all(&[self.transmon.isometry(), self.resonator.isometry(), self.sector.isometry()])
    }

    /// `W^H h W`, an 8x8 operator with Pauli order (transmon, resonator, Majorana).
    pub fn project(&self, h: &HermitianOperator) -> Result<HermitianOperator> {
        let w = self.isometry();
        let hw = h.matrix().try_matmul(&w)?;
        Ok(HermitianOperator::new(w.adjoint().try_matmul(&hw)?)?)
    }

    /// Block of `h` between this subspace and the same mode subspaces in the
    /// other parity sector; vanishes for parity-conserving `h`.
    pub fn cross_sector_block(&self, h: &HermitianOperator) -> Result<ComplexMatrix> {
        let other = JointSubspace { sector: opposite(self.sector), ..self.clone() };
        let w = self.isometry();
        let v = other.isometry();
        Ok(w.adjoint().try_matmul(&h.matrix().try_matmul(&v)?)?)
    }
}

fn opposite(s: ParitySector) -> ParitySector {
    match s {
        ParitySector::Even => ParitySector::Odd,
        ParitySector::Odd => ParitySector::Even,
    }
}

/// Dominant interaction term of a projected coupling.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericCoupling {
    /// Labels `(transmon, resonator, Majorana)`.
    pub labels: [Pauli; 3],
    /// Signed Pauli coefficient in GHz.
    pub coefficient: f64,
    /// Sum of squared coefficients of all other multi-body terms.
    pub residual_weight: f64,
    /// Single-body terms with non-negligible coefficients.
    pub local_terms: Vec<PauliTerm>,
}

impl NumericCoupling {
    pub fn magnitude(&self) -> f64 {
        self.coefficient.abs()
    }

    pub fn is_flagged(&self) -> bool {
        self.residual_weight > RESIDUAL_WEIGHT_TOL * self.coefficient * self.coefficient
    }
}

/// Projects `h_int` and returns the largest term acting non-trivially on at
/// least two subsystems. Errors with [`ProjectionError::Decoupled`] when every
/// such term is below [`DECOUPLED_TOL`].
pub fn numeric_coupling(h_int: &HermitianOperator, subspace: &JointSubspace) -> Result<NumericCoupling> {
    let projected = subspace.project(h_int)?;
    let terms = pauli_decompose(projected.matrix(), 3)?;
    let mut dominant: Option<&PauliTerm> = None;
    for t in terms.iter().filter(|t| t.weight() >= 2) {
        if dominant.is_none_or(|d| t.coefficient.abs() > d.coefficient.abs()) {
            dominant = Some(t);
        }
    }
    let dominant = dominant.expect("three-qubit expansion has multi-body terms");
    if dominant.coefficient.abs() < DECOUPLED_TOL {
        return Err(ProjectionError::Decoupled.into());
    }
    let residual_weight = terms
        .iter()
        .filter(|t| t.weight() >= 2 && t.labels != dominant.labels)
        .map(|t| t.coefficient * t.coefficient)
        .sum();
    let local_terms = terms
        .iter()
        .filter(|t| t.weight() == 1 && t.coefficient.abs() > 1e-12)
        .cloned()
        .collect();
    Ok(NumericCoupling {
        labels: [dominant.labels[0], dominant.labels[1], dominant.labels[2]],
        coefficient: dominant.coefficient,
        residual_weight,
        local_terms,
    })
}

/// Physical origin of a table row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CouplingTerm {
    /// Majorana charging energy `H_γ`.
    MajoranaCharging,
    /// `H_rγ = 8E_Cr·N_r·m_r`.
    ResonatorCharge,
    /// `H_qγ = 4E_Cq·N_q·m_q`.
    TransmonCharge,
    /// `Δ·Σα·iγγ·cos(φ_q/2)`.
    PhaseCoupling,
}

impl CouplingTerm {
    pub fn convention(self) -> Convention {
        match self {
            CouplingTerm::MajoranaCharging => Convention::Splitting,
            CouplingTerm::ResonatorCharge => Convention::HalfPauliCoefficient,
            CouplingTerm::TransmonCharge | CouplingTerm::PhaseCoupling => Convention::PauliCoefficient,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CouplingTerm::MajoranaCharging => "H_gamma",
            CouplingTerm::ResonatorCharge => "H_r_gamma",
            CouplingTerm::TransmonCharge => "H_q_gamma",
            CouplingTerm::PhaseCoupling => "H_fje",
        }
    }
}

/// How a reported number relates to the projected operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// Upper minus lower eigenvalue within the sector (twice the σz coefficient).
    Splitting,
    /// Magnitude of the dominant Pauli coefficient.
    PauliCoefficient,
    /// Half the dominant Pauli coefficient: the tabulated resonator closed form
    /// normalizes `H_rγ` like `4E_Cr·N_r·m_r`.
    HalfPauliCoefficient,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Splitting => "splitting",
            Convention::PauliCoefficient => "pauli_coefficient",
            Convention::HalfPauliCoefficient => "half_pauli_coefficient",
        }
    }

    fn scale(self) -> f64 {
        match self {
            Convention::HalfPauliCoefficient => 0.5,
            _ => 1.0,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One row of a coupling table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub config: ConfigLabel,
    pub sector: ParitySector,
    pub term: CouplingTerm,
    /// Expected labels `(transmon, resonator, Majorana)`.
    pub labels: [Pauli; 3],
}

impl TableRow {
    const fn new(config: ConfigLabel, sector: ParitySector, term: CouplingTerm, labels: [Pauli; 3]) -> Self {
        Self { config, sector, term, labels }
    }

    pub fn convention(&self) -> Convention {
        self.term.convention()
    }
}

/// Rows of coupling table 1 (configuration A), 2 (B) or 3 (C–F), in print order.
pub fn table_rows(table: u8) -> Option<Vec<TableRow>> {
    use ConfigLabel::*;
    use CouplingTerm::*;
    use Pauli::{I, X, Y, Z};
    use ParitySector::{Even, Odd};
    let rows = match table {
        1 => vec![
            TableRow::new(A, Even, MajoranaCharging, [I, I, Z]),
            TableRow::new(A, Even, ResonatorCharge, [I, Y, Z]),
            TableRow::new(A, Even, TransmonCharge, [Y, I, Z]),
        ],
        2 => vec![
            TableRow::new(B, Even, MajoranaCharging, [I, I, Z]),
            TableRow::new(B, Even, ResonatorCharge, [I, Y, Z]),
            TableRow::new(B, Odd, TransmonCharge, [Y, I, Z]),
        ],
        3 => vec![
            TableRow::new(C, Even, PhaseCoupling, [Z, I, X]),
            TableRow::new(C, Odd, PhaseCoupling, [Z, I, X]),
            TableRow::new(D, Even, PhaseCoupling, [Z, I, X]),
            TableRow::new(E, Even, PhaseCoupling, [Z, I, Y]),
            TableRow::new(E, Odd, PhaseCoupling, [Z, I, Y]),
            TableRow::new(F, Odd, PhaseCoupling, [Z, I, Y]),
        ],
        _ => return None,
    };
    Some(rows)
}

/// Closed-form coupling strength (GHz) for a term in a configuration with
/// unit overlaps:
///
/// | term | value |
/// |------|-------|
/// | `H_γ` (A) | `4(E_Cr + E_Cq)` |
/// | `H_γ` (B) | `4E_Cr` |
/// | `H_rγ` | `(E_Lr·E_Cr³/2)^{1/4}` |
/// | `H_qγ` | `(E_Jq*·E_Cq³/2)^{1/4}` |
/// | phase (C, E) | `Δ·√(E_Cq/32E_Jq*)` |
/// | phase (D, F) | `Δ·√(E_Cq/8E_Jq*)` |
pub fn analytic_coupling(term: CouplingTerm, config: &MajoranaConfig, s: &EnergyScales) -> Option<f64> {
    let label = config.label;
    match term {
        CouplingTerm::MajoranaCharging => match label {
            ConfigLabel::A => Some(4.0 * (s.ecr + s.ecq)),
            ConfigLabel::B => Some(4.0 * s.ecr),
            _ => None,
        },
        CouplingTerm::ResonatorCharge if label.is_charge_coupled() => Some((s.elr * s.ecr.powi(3) / 2.0).powf(0.25)),
        CouplingTerm::TransmonCharge if label.is_charge_coupled() => {
            Some((s.ejq_star * s.ecq.powi(3) / 2.0).powf(0.25))
        }
        CouplingTerm::PhaseCoupling if label.is_phase_coupled() => {
            // Both pairs of D and F add coherently in their coupled sector.
            let overlap: f64 = config.active_bilinears.iter().map(|b| b.overlap).sum();
            Some(overlap * s.gap * (s.ecq / (32.0 * s.ejq_star)).sqrt())
        }
        _ => None,
    }
}

/// How `cos(φ_q/2)` enters the phase couplings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CosineTreatment {
    /// Spectral cosine of the truncated `φ_q` matrix.
    #[default]
    Exact,
    /// `I − φ_q²/8`.
    SecondOrder,
}

/// Evaluated table cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CouplingReport {
    pub config: ConfigLabel,
    /// +1 (even) or −1 (odd).
    pub parity: i8,
    pub term: CouplingTerm,
    /// Labels `(transmon, resonator, Majorana)` found numerically.
    pub labels: [Pauli; 3],
    /// Closed form; `None` when decoupled or when no closed form applies.
    pub analytic_ghz: Option<f64>,
    /// Zero when decoupled.
    pub numeric_ghz: f64,
    pub ratio: Option<f64>,
    pub convention: Convention,
    /// Signed Pauli coefficient underlying `numeric_ghz`.
    pub signed_coefficient: f64,
    pub residual_weight: f64,
    pub flagged: bool,
    pub decoupled: bool,
}

impl CouplingReport {
    pub fn label_string(&self) -> String {
        self.labels.iter().map(|p| p.symbol()).collect()
    }
}

/// Numerically determined qubit subspaces plus everything needed to build
/// and project the coupling terms.
#[derive(Debug, Clone)]
pub struct CouplingEngine {
    pub scales: EnergyScales,
    pub layout: SubsystemLayout,
    pub mode: PotentialMode,
    pub transmon: QubitSubspace,
    pub resonator: QubitSubspace,
    pub cosine: CosineTreatment,
    pub ng_a: f64,
    pub ng_b: f64,
    pub algebra: MajoranaAlgebra,
}

impl CouplingEngine {
    /// Qubit subspaces from diagonalizing the bare transmon (in `mode`) and
    /// resonator at the given Fock cutoff.
    pub fn new(scales: EnergyScales, cutoff: usize, mode: PotentialMode) -> Result<Self> {
        let layout = SubsystemLayout::uniform(&scales, cutoff);
        let transmon = qubit_subspace(&transmon_h(&scales, &layout.transmon, mode)?)?;
        let resonator =
            qubit_subspace(&resonator_h(&scales, &layout.resonator, ResonatorConstruction::Quadrature))?;
        Ok(Self {
            scales,
            layout,
            mode,
            transmon,
            resonator,
            cosine: CosineTreatment::Exact,
            ng_a: 0.0,
            ng_b: 0.0,
            algebra: MajoranaAlgebra::default(),
        })
    }

    /// Fock |0⟩, |1⟩ subspaces and the second-order cosine: every coupling
    /// then equals its closed form.
    pub fn harmonic(scales: EnergyScales, cutoff: usize) -> Self {
        let layout = SubsystemLayout::uniform(&scales, cutoff);
        Self {
            scales,
            layout,
            mode: PotentialMode::QuarticEjq,
            transmon: QubitSubspace::harmonic(layout.transmon.dim()),
            resonator: QubitSubspace::harmonic(layout.resonator.dim()),
            cosine: CosineTreatment::SecondOrder,
            ng_a: 0.0,
            ng_b: 0.0,
            algebra: MajoranaAlgebra::default(),
        }
    }

    pub fn with_cosine(mut self, cosine: CosineTreatment) -> Self {
        self.cosine = cosine;
        self
    }

    pub fn with_offsets(mut self, ng_a: f64, ng_b: f64) -> Self {
        self.ng_a = ng_a;
        self.ng_b = ng_b;
        self
    }

    pub fn joint(&self, sector: ParitySector) -> JointSubspace {
        JointSubspace { transmon: self.transmon.clone(), resonator: self.resonator.clone(), sector }
    }

    /// Full-space operator for a coupling term.
    pub fn term_operator(&self, term: CouplingTerm, config: &MajoranaConfig) -> Result<HermitianOperator> {
        let (alg, s, layout) = (&self.algebra, &self.scales, &self.layout);
        match term {
            CouplingTerm::MajoranaCharging => {
                let h = majorana_charging(config, alg, s, self.ng_a, self.ng_b)?;
                Ok(layout.embed_majorana(&h))
            }
            CouplingTerm::ResonatorCharge => Ok(charge_coupling_h(config, alg, s, layout)?.resonator),
            CouplingTerm::TransmonCharge => Ok(charge_coupling_h(config, alg, s, layout)?.transmon),
            CouplingTerm::PhaseCoupling => match self.cosine {
                CosineTreatment::Exact => fje_h(config, alg, s, layout),
                CosineTreatment::SecondOrder => {
                    let factor = second_order_cos_half(&layout.transmon);
                    fje_h_with(config, alg, s, layout, &factor)
                }
            },
        }
    }

    /// Evaluates one (configuration, sector, term) cell.
    pub fn evaluate(&self, config: &MajoranaConfig, sector: ParitySector, term: CouplingTerm) -> Result<CouplingReport> {
        let convention = term.convention();
        let analytic = analytic_coupling(term, config, &self.scales);
        let mut report = CouplingReport {
            config: config.label,
            parity: sector.sign(),
            term,
            labels: [Pauli::I; 3],
            analytic_ghz: analytic,
            numeric_ghz: 0.0,
            ratio: None,
            convention,
            signed_coefficient: 0.0,
            residual_weight: 0.0,
            flagged: false,
            decoupled: true,
        };
        if term == CouplingTerm::MajoranaCharging {
            let h = majorana_charging(config, &self.algebra, &self.scales, self.ng_a, self.ng_b)?;
            let splitting = sector_splitting(&h, sector)?;
            let z = sector.project(h.matrix());
            report.signed_coefficient = (z[(0, 0)] - z[(1, 1)]).re / 2.0;
            if splitting >= DECOUPLED_TOL {
                report.labels = [Pauli::I, Pauli::I, Pauli::Z];
                report.numeric_ghz = splitting;
                report.decoupled = false;
            }
        } else {
            let h = self.term_operator(term, config)?;
            match numeric_coupling(&h, &self.joint(sector)) {
                Ok(c) => {
                    report.labels = c.labels;
                    report.signed_coefficient = c.coefficient;
                    report.numeric_ghz = c.magnitude() * convention.scale();
                    report.residual_weight = c.residual_weight;
                    report.flagged = c.is_flagged();
                    report.decoupled = false;
                }
                Err(crate::Error::Projection(ProjectionError::Decoupled)) => {}
                Err(e) => return Err(e),
            }
        }
        if report.decoupled {
            report.analytic_ghz = None;
        } else if let Some(a) = analytic.filter(|a| *a != 0.0) {
            report.ratio = Some(report.numeric_ghz / a);
        }
        Ok(report)
    }

    pub fn evaluate_row(&self, row: &TableRow) -> Result<CouplingReport> {
        self.evaluate(&MajoranaConfig::new(row.config), row.sector, row.term)
    }

    /// All rows of a table, in print order; `None` for an unknown table id.
    pub fn table(&self, table: u8) -> Option<Result<Vec<CouplingReport>>> {
        table_rows(table).map(|rows| rows.iter().map(|r| self.evaluate_row(r)).collect())
    }

    /// Every configuration in both sectors: the charge terms `H_rγ`, `H_qγ`
    /// for A and B, the phase term for C–F. Sorted by configuration, then
    /// parity (+1 first).
    pub fn parity_selection_table(&self) -> Result<Vec<CouplingReport>> {
        let mut out = Vec::new();
        for label in ConfigLabel::ALL {
            let cfg = MajoranaConfig::new(label);
            for sector in ParitySector::BOTH {
                let terms: &[CouplingTerm] = if label.is_charge_coupled() {
                    &[CouplingTerm::ResonatorCharge, CouplingTerm::TransmonCharge]
                } else {
                    &[CouplingTerm::PhaseCoupling]
                };
                for &term in terms {
                    out.push(self.evaluate(&cfg, sector, term)?);
                }
            }
        }
        Ok(out)
    }
}

/// `I − φ²/8`, the second-order expansion of `cos(φ/2)`.
pub fn second_order_cos_half(space: &FockSpace) -> HermitianOperator {
    let (phi, _) = quadratures(space);
    phi.square().scale(-1.0 / 8.0).shift(1.0)
}

/// `H_γ` splitting of configuration A at the two reference offsets.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NgParityProbe {
    /// `(parity, n_g^{(a)}, splitting in GHz)`.
    pub entries: Vec<(i8, f64, f64)>,
}

impl NgParityProbe {
    pub fn splitting(&self, sector: ParitySector, ng_a: f64) -> Option<f64> {
        self.entries
            .iter()
            .find(|(p, g, _)| *p == sector.sign() && *g == ng_a)
            .map(|e| e.2)
    }
}

/// Even and odd sector splittings of configuration A's `H_γ` at
/// `n_g^{(a)} ∈ {0, 1/2}`, `n_g^{(b)} = 0`.
pub fn ng_parity_probe(scales: &EnergyScales) -> Result<NgParityProbe> {
    let alg = MajoranaAlgebra::default();
    let cfg = MajoranaConfig::new(ConfigLabel::A);
    let mut entries = Vec::new();
    for sector in ParitySector::BOTH {
        for ng_a in [0.0, 0.5] {
            let h = majorana_charging(&cfg, &alg, scales, ng_a, 0.0)?;
            entries.push((sector.sign(), ng_a, sector_splitting(&h, sector)?));
        }
    }
    Ok(NgParityProbe { entries })
}

#[cfg(test)]
mod tests {
    use approx::assert_relative_eq;

    use super::*;
    use crate::circuit::CircuitParams;
    use crate::hamiltonian::{duffing_transmon_h, HamiltonianModel, TermSelection};

    fn scales() -> EnergyScales {
        CircuitParams::default().derive_scales().unwrap()
    }

    #[test]
    fn harmonic_oscillator_gives_fock_basis() {
        let s = scales();
        let space = FockSpace::transmon(8, &s);
        let q = qubit_subspace(&duffing_transmon_h(&s, &space, 0.0)).unwrap();
        let (g, e) = q.fock_overlaps();
        assert!((g - 1.0).abs() < 1e-12 && (e - 1.0).abs() < 1e-12);
        assert_relative_eq!(q.gap(), s.omega_q, max_relative = 1e-10);
    }

    #[test]
    fn transmon_basis_stays_close_to_fock() {
        let s = scales();
        let q = qubit_subspace(&transmon_h(&s, &FockSpace::transmon(5, &s), PotentialMode::QuarticEjq).unwrap()).unwrap();
        let (g, e) = q.fock_overlaps();
        assert!(g >= 0.99 && e >= 0.99, "{g} {e}");
    }

    #[test]
    fn pauli_ops_close_on_the_block() {
        let s = scales();
        let q = qubit_subspace(&transmon_h(&s, &FockSpace::transmon(5, &s), PotentialMode::QuarticEjq).unwrap()).unwrap();
        let w = q.isometry();
        let proj = |p| &(&w.adjoint() * q.pauli_op(p).matrix()) * &w;
        let xy = &proj(Pauli::X) * &proj(Pauli::Y);
        assert!(xy.approx_eq(&proj(Pauli::Z).scale(C64::new(0.0, 1.0)), 1e-9));
        let z = q.pauli_op(Pauli::Z);
        assert_relative_eq!(z.expectation(q.ground()), -1.0, max_relative = 1e-12);
        assert_relative_eq!(z.expectation(q.excited()), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn degenerate_ground_pair_is_rejected() {
        let h = HermitianOperator::from_diagonal(&[0.0, 1e-8, 1.0]);
        assert!(matches!(
            qubit_subspace(&h),
            Err(crate::Error::Projection(ProjectionError::NearDegenerate { .. }))
        ));
    }

    #[test]
    fn analytic_values() {
        let s = scales();
        let a = MajoranaConfig::new(ConfigLabel::A);
        let b = MajoranaConfig::new(ConfigLabel::B);
        let close = |x: Option<f64>, y: f64| (x.unwrap() - y).abs() <= 1e-3;
        assert!(close(analytic_coupling(CouplingTerm::MajoranaCharging, &a, &s), 1.969));
        assert!(close(analytic_coupling(CouplingTerm::MajoranaCharging, &b, &s), 1.359));
        assert!(close(analytic_coupling(CouplingTerm::ResonatorCharge, &a, &s), 0.7726));
        assert!(close(analytic_coupling(CouplingTerm::TransmonCharge, &a, &s), 0.4727));
        let c = MajoranaConfig::new(ConfigLabel::C);
        let d = MajoranaConfig::new(ConfigLabel::D);
        assert!(close(analytic_coupling(CouplingTerm::PhaseCoupling, &c, &s), 0.3145));
        assert!(close(analytic_coupling(CouplingTerm::PhaseCoupling, &d, &s), 0.6290));
        assert_eq!(analytic_coupling(CouplingTerm::PhaseCoupling, &a, &s), None);
        assert_eq!(analytic_coupling(CouplingTerm::MajoranaCharging, &c, &s), None);
    }

    #[test]
    fn harmonic_pipeline_reproduces_closed_forms() {
        let engine = CouplingEngine::harmonic(scales(), 5);
        for table in 1..=3 {
            for r in engine.table(table).unwrap().unwrap() {
                let ratio = r.ratio.unwrap();
                assert!((ratio - 1.0).abs() < 1e-9, "table {table} {:?}: ratio {ratio}", r);
                assert!(!r.flagged);
            }
        }
    }

    #[test]
    fn transmon_charge_labels() {
        let engine = CouplingEngine::harmonic(scales(), 4);
        let r = engine.evaluate(&MajoranaConfig::new(ConfigLabel::A), ParitySector::Even, CouplingTerm::TransmonCharge).unwrap();
        assert_eq!(r.labels, [Pauli::Y, Pauli::I, Pauli::Z]);
        let r = engine.evaluate(&MajoranaConfig::new(ConfigLabel::A), ParitySector::Odd, CouplingTerm::TransmonCharge).unwrap();
        assert!(r.decoupled);
    }

    #[test]
    fn numeric_ratios_at_cutoff_five() {
        let engine = CouplingEngine::new(scales(), 5, PotentialMode::QuarticEjq).unwrap();
        let t1 = engine.table(1).unwrap().unwrap();
        assert!((t1[0].ratio.unwrap() - 1.0).abs() <= 1e-6);
        assert!((t1[1].ratio.unwrap() - 1.0).abs() <= 1e-6);
        let r3 = t1[2].ratio.unwrap();
        assert!((0.990..=0.999).contains(&r3), "{r3}");
        for r in engine.table(3).unwrap().unwrap() {
            let ratio = r.ratio.unwrap();
            assert!((1.002..=1.008).contains(&ratio), "{r:?}");
        }
    }

    #[test]
    fn selection_rules() {
        let engine = CouplingEngine::new(scales(), 4, PotentialMode::QuarticEjq).unwrap();
        let table = engine.parity_selection_table().unwrap();
        let find = |l: ConfigLabel, p: i8, t: CouplingTerm| {
            table.iter().find(|r| r.config == l && r.parity == p && r.term == t).unwrap().clone()
        };
        use ConfigLabel::*;
        use CouplingTerm::*;
        assert!(!find(A, 1, ResonatorCharge).decoupled && !find(A, 1, TransmonCharge).decoupled);
        assert!(find(A, -1, ResonatorCharge).decoupled && find(A, -1, TransmonCharge).decoupled);
        assert!(!find(B, 1, ResonatorCharge).decoupled && find(B, 1, TransmonCharge).decoupled);
        assert!(find(B, -1, ResonatorCharge).decoupled && !find(B, -1, TransmonCharge).decoupled);
        let c = find(C, 1, PhaseCoupling).numeric_ghz;
        assert!((find(C, -1, PhaseCoupling).numeric_ghz - c).abs() <= 1e-10);
        assert!((find(D, 1, PhaseCoupling).numeric_ghz - 2.0 * c).abs() <= 1e-10);
        assert!(find(D, -1, PhaseCoupling).decoupled);
        let e = find(E, -1, PhaseCoupling).numeric_ghz;
        assert!((find(E, 1, PhaseCoupling).numeric_ghz - e).abs() <= 1e-10);
        assert!((find(F, -1, PhaseCoupling).numeric_ghz - 2.0 * e).abs() <= 1e-10);
        assert!(find(F, 1, PhaseCoupling).decoupled);
        assert!(table.windows(2).all(|w| (w[0].config, -w[0].parity) <= (w[1].config, -w[1].parity)));
    }

    #[test]
    fn projection_is_block_diagonal_in_parity() {
        let s = scales();
        let engine = CouplingEngine::new(s, 3, PotentialMode::QuarticEjq).unwrap();
        for label in ConfigLabel::ALL {
            let model = HamiltonianModel::new(s, engine.layout, engine.mode, MajoranaConfig::new(label));
            let h = model.full_h(TermSelection::all()).unwrap();
            for sector in ParitySector::BOTH {
                assert!(engine.joint(sector).cross_sector_block(&h).unwrap().max_norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn ng_probe() {
        let p = ng_parity_probe(&scales()).unwrap();
        assert!((p.splitting(ParitySector::Even, 0.0).unwrap() - 1.969).abs() < 5e-4);
        assert!(p.splitting(ParitySector::Even, 0.5).unwrap() <= 1e-10);
        assert!(p.splitting(ParitySector::Odd, 0.0).unwrap() <= 1e-10);
        assert!(p.splitting(ParitySector::Odd, 0.5).unwrap() <= 1e-10);
    }

    #[test]
    fn unknown_table() {
        assert!(table_rows(4).is_none());
        assert_eq!(table_rows(3).unwrap().len(), 6);
    }
}
