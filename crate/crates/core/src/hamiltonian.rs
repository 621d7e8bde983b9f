//! Truncated Fock-space Hamiltonians on `transmon ⊗ resonator ⊗ Majorana`.
//!
//! All energies are in GHz. Quadratures are `φ = φ_zpf(a† + a)` and
//! `N = N_zpf·i(a† − a)`, built from truncated ladder matrices; squares and
//! higher powers are products of the truncated matrices.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::circuit::EnergyScales;
use crate::error::Result;
use crate::majorana::{
    island_occupations, majorana_charging, MajoranaAlgebra, MajoranaConfig,
};
use crate::numerics::{kron_all, operator_function, ComplexMatrix, HermitianOperator};

/// Dimension of the two-fermion Majorana space.
pub const MAJORANA_DIM: usize = 4;

/// Truncated bosonic mode: occupations `0..=cutoff`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FockSpace {
    cutoff: usize,
    phi_zpf: f64,
    n_zpf: f64,
}

impl FockSpace {
    pub fn new(cutoff: usize, phi_zpf: f64, n_zpf: f64) -> Self {
        assert!(cutoff >= 2, "Fock cutoff must be at least 2, got {cutoff}");
        Self { cutoff, phi_zpf, n_zpf }
    }

    pub fn transmon(cutoff: usize, scales: &EnergyScales) -> Self {
        let z = scales.zero_point();
        Self::new(cutoff, z.phi_q, z.n_q)
    }

    pub fn resonator(cutoff: usize, scales: &EnergyScales) -> Self {
        let z = scales.zero_point();
        Self::new(cutoff, z.phi_r, z.n_r)
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.cutoff + 1
    }

    pub fn phi_zpf(&self) -> f64 {
        self.phi_zpf
    }

    pub fn n_zpf(&self) -> f64 {
        self.n_zpf
    }
}

/// Annihilation operator: `√n` on the first superdiagonal.
pub fn ladder(space: &FockSpace) -> ComplexMatrix {
    let n = space.dim();
    ComplexMatrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            C64::new((j as f64).sqrt(), 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

pub fn number_operator(space: &FockSpace) -> HermitianOperator {
    HermitianOperator::from_diagonal(&(0..space.dim()).map(|n| n as f64).collect::<Vec<_>>())
}

/// `(φ, N)` quadratures of a mode.
pub fn quadratures(space: &FockSpace) -> (HermitianOperator, HermitianOperator) {
    let a = ladder(space);
    let ad = a.adjoint();
    let phi = (&ad + &a).scale_real(space.phi_zpf);
    let n = (&ad - &a).scale(C64::new(0.0, space.n_zpf));
    (
        HermitianOperator::new(phi).expect("a + a† is Hermitian"),
        HermitianOperator::new(n).expect("i(a† − a) is Hermitian"),
    )
}

/// Junction potential used for the transmon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialMode {
    /// `(E_Jq*/2)φ² − (E_Jq/24)φ⁴`: only the junction contributes a quartic term.
    #[default]
    QuarticEjq,
    /// `(E_Jq*/2)φ² − (E_Jq*/24)φ⁴`.
    QuarticEjstar,
    /// `((E_Jq* − E_Jq)/2)φ² − E_Jq(cos φ − 1)` with the cosine taken spectrally.
    FullCosine,
}

impl PotentialMode {
    pub const ALL: [PotentialMode; 3] =
        [PotentialMode::QuarticEjq, PotentialMode::QuarticEjstar, PotentialMode::FullCosine];

    pub fn name(self) -> &'static str {
        match self {
            PotentialMode::QuarticEjq => "quartic_ejq",
            PotentialMode::QuarticEjstar => "quartic_ejstar",
            PotentialMode::FullCosine => "full_cosine",
        }
    }
}

impl fmt::Display for PotentialMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PotentialMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown potential mode '{s}' (expected quartic_ejq, quartic_ejstar or full_cosine)"))
    }
}

/// `4E_Cq·N² + (E_Jq*/2)·φ² − (quartic/24)·φ⁴`.
pub fn duffing_transmon_h(scales: &EnergyScales, space: &FockSpace, quartic: f64) -> HermitianOperator {
    let (phi, n) = quadratures(space);
    let phi2 = phi.square();
    let phi4 = phi2.square();
    n.square()
        .scale(4.0 * scales.ecq)
        .plus(&phi2.scale(scales.ejq_star / 2.0))
        .and_then(|h| h.minus(&phi4.scale(quartic / 24.0)))
        .expect("operators share the transmon space")
}

pub fn transmon_h(scales: &EnergyScales, space: &FockSpace, mode: PotentialMode) -> Result<HermitianOperator> {
    match mode {
        PotentialMode::QuarticEjq => Ok(duffing_transmon_h(scales, space, scales.ejq_tuned)),
        PotentialMode::QuarticEjstar => Ok(duffing_transmon_h(scales, space, scales.ejq_star)),
        PotentialMode::FullCosine => {
            let (phi, n) = quadratures(space);
            let ej = scales.ejq_tuned;
            let cos_phi = operator_function(&phi, f64::cos)?;
            let h = n
                .square()
                .scale(4.0 * scales.ecq)
                .plus(&phi.square().scale((scales.ejq_star - ej) / 2.0))?
                .minus(&cos_phi.scale(ej))?
                .shift(ej);
            Ok(h)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResonatorConstruction {
    /// `4E_Cr·N_r² + (E_Lr/2)·φ_r² − ω_r/2`.
    #[default]
    Quadrature,
    /// `ω_r·a†a`.
    Number,
}

/// Resonator Hamiltonian with the zero-point energy removed.
pub fn resonator_h(scales: &EnergyScales, space: &FockSpace, construction: ResonatorConstruction) -> HermitianOperator {
    match construction {
        ResonatorConstruction::Number => number_operator(space).scale(scales.omega_r),
        ResonatorConstruction::Quadrature => {
            let (phi, n) = quadratures(space);
            n.square()
                .scale(4.0 * scales.ecr)
                .plus(&phi.square().scale(scales.elr / 2.0))
                .expect("same space")
                .shift(-scales.omega_r / 2.0)
        }
    }
}

/// Ordered tensor factors `transmon ⊗ resonator ⊗ Majorana(4)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubsystemLayout {
    pub transmon: FockSpace,
    pub resonator: FockSpace,
}

impl SubsystemLayout {
    pub fn new(scales: &EnergyScales, transmon_cutoff: usize, resonator_cutoff: usize) -> Self {
        Self {
            transmon: FockSpace::transmon(transmon_cutoff, scales),
            resonator: FockSpace::resonator(resonator_cutoff, scales),
        }
    }

    /// Same cutoff for both bosonic modes.
    pub fn uniform(scales: &EnergyScales, cutoff: usize) -> Self {
        Self::new(scales, cutoff, cutoff)
    }

    pub fn dims(&self) -> [usize; 3] {
        [self.transmon.dim(), self.resonator.dim(), MAJORANA_DIM]
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().product()
    }

    /// `q ⊗ r ⊗ m`, with `None` standing for the identity on that factor.
    pub fn embed(
        &self,
        transmon: Option<&HermitianOperator>,
        resonator: Option<&HermitianOperator>,
        majorana: Option<&HermitianOperator>,
    ) -> HermitianOperator {
        let [dq, dr, dm] = self.dims();
        let pick = |op: Option<&HermitianOperator>, d: usize| {
            let m = op.map_or_else(|| ComplexMatrix::identity(d), |o| o.matrix().clone());
            assert_eq!(m.rows(), d, "factor dimension mismatch");
            m
        };
        let factors = [pick(transmon, dq), pick(resonator, dr), pick(majorana, dm)];
        HermitianOperator::new(kron_all(&factors)).expect("Kronecker product of Hermitian factors")
    }

    pub fn embed_transmon(&self, op: &HermitianOperator) -> HermitianOperator {
        self.embed(Some(op), None, None)
    }

    pub fn embed_resonator(&self, op: &HermitianOperator) -> HermitianOperator {
        self.embed(None, Some(op), None)
    }

    pub fn embed_majorana(&self, op: &HermitianOperator) -> HermitianOperator {
        self.embed(None, None, Some(op))
    }
}

/// `−(E_J/8k²)·φ_q² ⊗ φ_r ⊗ I`.
pub fn longitudinal_h(scales: &EnergyScales, layout: &SubsystemLayout) -> HermitianOperator {
    let (phi_q, _) = quadratures(&layout.transmon);
    let (phi_r, _) = quadratures(&layout.resonator);
    layout
        .embed(Some(&phi_q.square()), Some(&phi_r), None)
        .scale(longitudinal_prefactor(scales))
}

/// `−E_J/(8k²)`.
pub fn longitudinal_prefactor(scales: &EnergyScales) -> f64 {
    let k = f64::from(scales.junction_count);
    -scales.ej / (8.0 * k * k)
}

/// Charge couplings of the Majorana island charges to the two modes.
#[derive(Debug, Clone)]
pub struct ChargeCoupling {
    /// `H_rγ = 8E_Cr·N_r·m_r`
    pub resonator: HermitianOperator,
    /// `H_qγ = 4E_Cq·N_q·m_q`
    pub transmon: HermitianOperator,
}

impl ChargeCoupling {
    pub fn total(&self) -> HermitianOperator {
        self.resonator.plus(&self.transmon).expect("same layout")
    }
}

pub fn charge_coupling_h(
    cfg: &MajoranaConfig,
    alg: &MajoranaAlgebra,
    scales: &EnergyScales,
    layout: &SubsystemLayout,
) -> Result<ChargeCoupling> {
    let (m_q, m_r) = island_occupations(cfg, alg)?;
    let (_, n_q) = quadratures(&layout.transmon);
    let (_, n_r) = quadratures(&layout.resonator);
    Ok(ChargeCoupling {
        resonator: layout.embed(None, Some(&n_r), Some(&m_r)).scale(8.0 * scales.ecr),
        transmon: layout.embed(Some(&n_q), None, Some(&m_q)).scale(4.0 * scales.ecq),
    })
}

/// `cos(φ_q/2)` on the transmon factor, evaluated spectrally.
pub fn cos_half_phase(space: &FockSpace) -> Result<HermitianOperator> {
    let (phi, _) = quadratures(space);
    Ok(operator_function(&phi, |x| (x / 2.0).cos())?)
}

/// `Σ α_ij·iγ_iγ_j` over the configuration's junction-coupled pairs.
pub fn fje_majorana_factor(cfg: &MajoranaConfig, alg: &MajoranaAlgebra) -> Result<HermitianOperator> {
    cfg.require_phase()?;
    cfg.active_bilinears.iter().try_fold(HermitianOperator::zeros(MAJORANA_DIM), |acc, b| {
        Ok(acc.plus(&alg.bilinear(b.i, b.j)?.scale(b.overlap))?)
    })
}

/// `Δ·Σ α_ij·iγ_iγ_j ⊗ cos(φ_q/2)`, identity on the resonator.
pub fn fje_h(
    cfg: &MajoranaConfig,
    alg: &MajoranaAlgebra,
    scales: &EnergyScales,
    layout: &SubsystemLayout,
) -> Result<HermitianOperator> {
    fje_h_with(cfg, alg, scales, layout, &cos_half_phase(&layout.transmon)?)
}

/// [`fje_h`] with a caller-supplied transmon factor (e.g. a truncated series).
pub fn fje_h_with(
    cfg: &MajoranaConfig,
    alg: &MajoranaAlgebra,
    scales: &EnergyScales,
    layout: &SubsystemLayout,
    transmon_factor: &HermitianOperator,
) -> Result<HermitianOperator> {
    let maj = fje_majorana_factor(cfg, alg)?;
    Ok(layout.embed(Some(transmon_factor), None, Some(&maj)).scale(scales.gap))
}

/// Which terms [`HamiltonianModel::full_h`] includes. Terms that do not apply
/// to the model's configuration are skipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TermSelection {
    pub transmon: bool,
    pub resonator: bool,
    pub longitudinal: bool,
    pub majorana_charging: bool,
    pub charge_coupling: bool,
    pub fje: bool,
}

impl TermSelection {
    pub fn all() -> Self {
        Self {
            transmon: true,
            resonator: true,
            longitudinal: true,
            majorana_charging: true,
            charge_coupling: true,
            fje: true,
        }
    }

    pub fn none() -> Self {
        Self::default()
    }

    pub fn transmon_only() -> Self {
        Self { transmon: true, ..Self::default() }
    }
}

/// Everything needed to assemble the full Hamiltonian for one configuration.
#[derive(Debug, Clone)]
pub struct HamiltonianModel {
    pub scales: EnergyScales,
    pub layout: SubsystemLayout,
    pub mode: PotentialMode,
    pub config: MajoranaConfig,
    pub ng_a: f64,
    pub ng_b: f64,
    pub algebra: MajoranaAlgebra,
}

impl HamiltonianModel {
    pub fn new(scales: EnergyScales, layout: SubsystemLayout, mode: PotentialMode, config: MajoranaConfig) -> Self {
        Self { scales, layout, mode, config, ng_a: 0.0, ng_b: 0.0, algebra: MajoranaAlgebra::default() }
    }

    pub fn with_offsets(mut self, ng_a: f64, ng_b: f64) -> Self {
        self.ng_a = ng_a;
        self.ng_b = ng_b;
        self
    }

    pub fn parity_operator(&self) -> HermitianOperator {
        self.layout.embed_majorana(self.algebra.parity())
    }

    /// Sum of the selected terms, added in a fixed order.
    pub fn full_h(&self, parts: TermSelection) -> Result<HermitianOperator> {
        let layout = &self.layout;
        let mut h = HermitianOperator::zeros(layout.total_dim());
        if parts.transmon {
            h = h.plus(&layout.embed_transmon(&transmon_h(&self.scales, &layout.transmon, self.mode)?))?;
        }
        if parts.resonator {
            let hr = resonator_h(&self.scales, &layout.resonator, ResonatorConstruction::Quadrature);
            h = h.plus(&layout.embed_resonator(&hr))?;
        }
        if parts.longitudinal {
            h = h.plus(&longitudinal_h(&self.scales, layout))?;
        }
        let charge = self.config.label.is_charge_coupled();
        if parts.majorana_charging && charge {
            let hg = majorana_charging(&self.config, &self.algebra, &self.scales, self.ng_a, self.ng_b)?;
            h = h.plus(&layout.embed_majorana(&hg))?;
        }
        if parts.charge_coupling && charge {
            h = h.plus(&charge_coupling_h(&self.config, &self.algebra, &self.scales, layout)?.total())?;
        }
        if parts.fje && !charge {
            h = h.plus(&fje_h(&self.config, &self.algebra, &self.scales, layout)?)?;
        }
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use approx::assert_relative_eq;

    use super::*;
    use crate::circuit::CircuitParams;
    use crate::majorana::{ConfigLabel, ParitySector};
    use crate::numerics::{eigvalsh, Pauli};

    fn scales() -> EnergyScales {
        CircuitParams::default().derive_scales().unwrap()
    }

    #[test]
    fn ladder_entries() {
        let a = ladder(&FockSpace::new(2, 1.0, 0.5));
        assert_eq!(a[(0, 1)], C64::new(1.0, 0.0));
        assert_eq!(a[(1, 2)], C64::new(2f64.sqrt(), 0.0));
        assert_eq!(a[(1, 0)], C64::new(0.0, 0.0));
    }

    #[test]
    fn truncated_commutator() {
        let space = FockSpace::new(6, 1.0, 0.5);
        let a = ladder(&space);
        let comm = a.commutator(&a.adjoint()).unwrap();
        let n = space.dim();
        for i in 0..n {
            for j in 0..n {
                let expected = match (i == j, i == n - 1) {
                    (true, false) => 1.0,
                    (true, true) => -(space.cutoff() as f64),
                    _ => 0.0,
                };
                assert!((comm[(i, j)] - C64::new(expected, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn number_operator_spectrum() {
        let space = FockSpace::new(4, 1.0, 0.5);
        let a = ladder(&space);
        let n = HermitianOperator::new(&a.adjoint() * &a).unwrap();
        let ev = eigvalsh(&n).unwrap();
        for (k, e) in ev.iter().enumerate() {
            assert!((e - k as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn vacuum_fluctuations_and_commutator() {
        let space = FockSpace::new(8, 0.3, 1.0 / 0.6);
        let (phi, n) = quadratures(&space);
        assert_relative_eq!(phi.square()[(0, 0)].re, 0.09, max_relative = 1e-14);
        assert_relative_eq!(n.square()[(0, 0)].re, (1.0 / 0.6f64).powi(2), max_relative = 1e-14);
        let comm = phi.commutator(&n).unwrap();
        for i in 0..space.cutoff() {
            assert!((comm[(i, i)] - C64::new(0.0, 1.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn harmonic_limit_is_equally_spaced() {
        let s = scales();
        let space = FockSpace::transmon(12, &s);
        let ev = eigvalsh(&duffing_transmon_h(&s, &space, 0.0)).unwrap();
        // The truncated top level sits at cutoff·ω/2 and interleaves with the
        // ladder, so match each rung instead of taking sorted neighbours.
        for n in 0..space.cutoff() {
            let rung = (n as f64 + 0.5) * s.omega_q;
            assert!(ev.iter().any(|e| (e - rung).abs() < 1e-8), "level {n}");
        }
    }

    #[test]
    fn transmon_levels_follow_duffing_model() {
        let s = scales();
        let space = FockSpace::transmon(20, &s);
        let ev = eigvalsh(&transmon_h(&s, &space, PotentialMode::QuarticEjq).unwrap()).unwrap();
        let e01 = ev[1] - ev[0];
        let duffing = s.omega_q + 2.0 * s.anharmonicity;
        assert!((e01 - duffing).abs() / duffing < 0.03, "E01 = {e01}");
    }

    #[test]
    fn transmon_cutoff_convergence() {
        let s = scales();
        for mode in [PotentialMode::QuarticEjq, PotentialMode::FullCosine] {
            let lo = eigvalsh(&transmon_h(&s, &FockSpace::transmon(15, &s), mode).unwrap()).unwrap();
            let hi = eigvalsh(&transmon_h(&s, &FockSpace::transmon(20, &s), mode).unwrap()).unwrap();
            for k in 0..3 {
                assert!((lo[k] - hi[k]).abs() < 1e-6, "{mode} level {k}: {} vs {}", lo[k], hi[k]);
            }
        }
    }

    #[test]
    fn quartic_modes_bracket_the_cosine() {
        let s = scales();
        let space = FockSpace::transmon(20, &s);
        let levels = |m| eigvalsh(&transmon_h(&s, &space, m).unwrap()).unwrap();
        let (a, b, c) = (
            levels(PotentialMode::QuarticEjq),
            levels(PotentialMode::QuarticEjstar),
            levels(PotentialMode::FullCosine),
        );
        let e01 = |v: &[f64]| v[1] - v[0];
        assert!(e01(&b) < e01(&a) && (e01(&a) - e01(&c)).abs() < 5e-3);
    }

    #[test]
    fn resonator_spacing_and_ground() {
        let s = scales();
        let space = FockSpace::resonator(10, &s);
        let quad = resonator_h(&s, &space, ResonatorConstruction::Quadrature);
        let num = resonator_h(&s, &space, ResonatorConstruction::Number);
        let ev = eigvalsh(&quad).unwrap();
        assert!(ev[0].abs() < 1e-9);
        assert!((ev[1] - ev[0] - s.omega_r).abs() < 1e-9 * s.omega_r);
        assert!((s.omega_r - 7.027).abs() < 5e-4);
        for k in 0..space.cutoff() {
            assert!((quad[(k, k)] - num[(k, k)]).norm() < 1e-8);
        }
        assert!(quad.block(0, space.cutoff(), 0, space.cutoff()).approx_eq(&num.block(0, space.cutoff(), 0, space.cutoff()), 1e-8));
    }

    #[test]
    fn longitudinal_matrix_element() {
        let s = scales();
        let layout = SubsystemLayout::new(&s, 40, 3);
        let h = longitudinal_h(&s, &layout);
        let [_, dr, dm] = layout.dims();
        let idx = |q: usize, r: usize| (q * dr + r) * dm;
        let g = (h[(idx(1, 0), idx(1, 1))] - h[(idx(0, 0), idx(0, 1))]).re;
        let z = s.zero_point();
        let expected = -(s.ej / 8.0) * 2.0 * z.phi_q * z.phi_q * z.phi_r;
        assert_relative_eq!(g, expected, max_relative = 1e-12);
        assert!(g < 0.0 && (g + 0.1144).abs() < 5e-4);
    }

    #[test]
    fn phi_squared_has_no_odd_transitions() {
        let s = scales();
        let (phi, _) = quadratures(&FockSpace::transmon(10, &s));
        let phi2 = phi.square();
        for i in 0..11usize {
            for j in 0..11usize {
                if i.abs_diff(j) % 2 == 1 {
                    assert_eq!(phi2[(i, j)], C64::new(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn cos_half_diagonal_difference() {
        let s = scales();
        let space = FockSpace::transmon(20, &s);
        let c = cos_half_phase(&space).unwrap();
        let diff = c[(0, 0)].re - c[(1, 1)].re;
        let expected = space.phi_zpf().powi(2) / 4.0;
        assert!((diff - expected).abs() / expected < 0.02, "{diff} vs {expected}");
    }

    #[test]
    fn charge_couplings_by_sector() {
        let s = scales();
        let alg = MajoranaAlgebra::default();
        let layout = SubsystemLayout::uniform(&s, 3);
        let sector_norm = |h: &HermitianOperator, sector: ParitySector| {
            // Majorana-dependent part: difference between the two sector basis states.
            let [dq, dr, dm] = layout.dims();
            let [b0, b1] = sector.basis_indices();
            let mut m: f64 = 0.0;
            for i in 0..dq * dr {
                for j in 0..dq * dr {
                    let d = h[(i * dm + b0, j * dm + b0)] - h[(i * dm + b1, j * dm + b1)];
                    m = m.max(d.norm());
                }
            }
            m
        };
        let a = charge_coupling_h(&MajoranaConfig::new(ConfigLabel::A), &alg, &s, &layout).unwrap();
        assert!(sector_norm(&a.resonator, ParitySector::Even) > 0.1);
        assert!(sector_norm(&a.transmon, ParitySector::Even) > 0.1);
        assert!(sector_norm(&a.resonator, ParitySector::Odd) < 1e-12);
        assert!(sector_norm(&a.transmon, ParitySector::Odd) < 1e-12);
        let b = charge_coupling_h(&MajoranaConfig::new(ConfigLabel::B), &alg, &s, &layout).unwrap();
        assert!(sector_norm(&b.resonator, ParitySector::Even) > 0.1);
        assert!(sector_norm(&b.resonator, ParitySector::Odd) < 1e-12);
        assert!(sector_norm(&b.transmon, ParitySector::Odd) > 0.1);
        assert!(sector_norm(&b.transmon, ParitySector::Even) < 1e-12);
    }

    #[test]
    fn fje_majorana_factors() {
        let alg = MajoranaAlgebra::default();
        let factor = |l| fje_majorana_factor(&MajoranaConfig::new(l), &alg).unwrap();
        let even = ParitySector::Even;
        let odd = ParitySector::Odd;
        assert_eq!(even.project(&factor(ConfigLabel::C)), Pauli::X.matrix());
        assert_eq!(even.project(&factor(ConfigLabel::E)), Pauli::Y.matrix());
        assert_eq!(odd.project(&factor(ConfigLabel::D)), ComplexMatrix::zeros(2, 2));
        assert_eq!(even.project(&factor(ConfigLabel::D)), Pauli::X.matrix().scale_real(2.0));
        assert_eq!(even.project(&factor(ConfigLabel::F)), ComplexMatrix::zeros(2, 2));
        assert_eq!(odd.project(&factor(ConfigLabel::F)).max_norm(), 2.0);
        assert!(fje_majorana_factor(&MajoranaConfig::new(ConfigLabel::A), &alg).is_err());
    }

    #[test]
    fn full_h_assembly() {
        let s = scales();
        let layout = SubsystemLayout::uniform(&s, 3);
        for label in ConfigLabel::ALL {
            let model = HamiltonianModel::new(s, layout, PotentialMode::QuarticEjq, MajoranaConfig::new(label))
                .with_offsets(0.2, 0.1);
            let h = model.full_h(TermSelection::all()).unwrap();
            assert!(h.commutator(&model.parity_operator()).unwrap().max_norm() <= 1e-10, "config {label}");
        }
        let model = HamiltonianModel::new(s, layout, PotentialMode::QuarticEjq, MajoranaConfig::new(ConfigLabel::A));
        assert_eq!(model.full_h(TermSelection::none()).unwrap().max_norm(), 0.0);
        let hq = model.full_h(TermSelection::transmon_only()).unwrap();
        let bare = eigvalsh(&transmon_h(&s, &layout.transmon, model.mode).unwrap()).unwrap();
        let full = eigvalsh(&hq).unwrap();
        for (k, e) in bare.iter().enumerate() {
            for r in 0..layout.resonator.dim() * MAJORANA_DIM {
                assert!((full[k * layout.resonator.dim() * MAJORANA_DIM + r] - e).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn potential_mode_parsing() {
        assert_eq!("quartic_EJq".parse::<PotentialMode>().unwrap(), PotentialMode::QuarticEjq);
        assert_eq!("full_cosine".parse::<PotentialMode>().unwrap(), PotentialMode::FullCosine);
        assert!("quintic".parse::<PotentialMode>().is_err());
    }
}
