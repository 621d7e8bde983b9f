//! Four Majorana operators on the two-fermion Fock space, their parity
//! sectors, island charge operators and the Majorana charging energy.
//!
//! Basis order is `|00⟩, |01⟩, |10⟩, |11⟩` (index `2·n₁ + n₂`). The
//! representation is
//!
//! ```text
//! γ₁ = Y⊗I,  γ₂ = X⊗I,  γ₃ = −Z⊗Y,  γ₄ = −Z⊗X
//! ```
//!
//! which gives `iγ₁γ₂ = Z⊗I`, `iγ₃γ₄ = I⊗Z`, `P = Z⊗Z`, and after projection
//! onto either parity sector `iγ₁γ₂ → σz`, `iγ₁γ₃ → σy`, `iγ₂γ₃ → σx`.

use std::fmt;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::circuit::EnergyScales;
use crate::error::{MajoranaError, Result};
use crate::numerics::{eigvalsh, kron, ComplexMatrix, HermitianOperator, Pauli};

/// Total fermion parity sector of the four-Majorana system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParitySector {
    /// `P = +1`, span{|00⟩, |11⟩}.
    Even,
    /// `P = −1`, span{|01⟩, |10⟩}.
    Odd,
}

impl ParitySector {
    pub const BOTH: [ParitySector; 2] = [ParitySector::Even, ParitySector::Odd];

    pub fn sign(self) -> i8 {
        match self {
            ParitySector::Even => 1,
            ParitySector::Odd => -1,
        }
    }

    pub fn from_sign(sign: i8) -> Option<Self> {
        match sign {
            1 => Some(ParitySector::Even),
            -1 => Some(ParitySector::Odd),
            _ => None,
        }
    }

    /// Fock-basis indices of the two sector basis vectors, in order.
    pub fn basis_indices(self) -> [usize; 2] {
        match self {
            ParitySector::Even => [0, 3],
            ParitySector::Odd => [1, 2],
        }
    }

    /// The two sector basis vectors as 4-component columns.
    pub fn basis(self) -> [Vec<C64>; 2] {
        self.basis_indices().map(|k| {
            let mut v = vec![C64::new(0.0, 0.0); 4];
            v[k] = C64::new(1.0, 0.0);
            v
        })
    }

    /// 4x2 isometry whose columns are [`ParitySector::basis`].
    pub fn isometry(self) -> ComplexMatrix {
        let [a, b] = self.basis();
        ComplexMatrix::from_columns(&[&a, &b])
    }

    /// `⟨b_i| op |b_j⟩` for the sector basis.
    pub fn project(self, op: &ComplexMatrix) -> ComplexMatrix {
        let idx = self.basis_indices();
        ComplexMatrix::from_fn(2, 2, |i, j| op[(idx[i], idx[j])])
    }
}

impl fmt::Display for ParitySector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.sign())
    }
}

/// Matrices of γ₁..γ₄ and the total parity operator.
#[derive(Debug, Clone)]
pub struct MajoranaAlgebra {
    gammas: [HermitianOperator; 4],
    parity: HermitianOperator,
}

pub fn build_algebra() -> MajoranaAlgebra {
    let two = |a: Pauli, b: Pauli, sign: f64| {
        HermitianOperator::new(kron(&a.matrix(), &b.matrix()).scale_real(sign)).expect("Pauli strings are Hermitian")
    };
    let gammas = [
        two(Pauli::Y, Pauli::I, 1.0),
        two(Pauli::X, Pauli::I, 1.0),
        two(Pauli::Z, Pauli::Y, -1.0),
        two(Pauli::Z, Pauli::X, -1.0),
    ];
    let mut alg = MajoranaAlgebra { gammas, parity: HermitianOperator::identity(4) };
    let p12 = alg.bilinear(1, 2).expect("valid indices");
    let p34 = alg.bilinear(3, 4).expect("valid indices");
    alg.parity = p12.commuting_product(&p34).expect("disjoint bilinears commute");
    alg
}

impl Default for MajoranaAlgebra {
    fn default() -> Self {
        build_algebra()
    }
}

impl MajoranaAlgebra {
    /// γ_i for `i` in 1..=4.
    pub fn gamma(&self, i: usize) -> Result<&HermitianOperator> {
        if !(1..=4).contains(&i) {
            return Err(MajoranaError::IndexOutOfRange(i).into());
        }
        Ok(&self.gammas[i - 1])
    }

    pub fn gammas(&self) -> &[HermitianOperator; 4] {
        &self.gammas
    }

    /// `P = (iγ₁γ₂)(iγ₃γ₄)`.
    pub fn parity(&self) -> &HermitianOperator {
        &self.parity
    }

    /// `iγ_iγ_j`; Hermitian, traceless and involutory for `i ≠ j`.
    pub fn bilinear(&self, i: usize, j: usize) -> Result<HermitianOperator> {
        let (gi, gj) = (self.gamma(i)?, self.gamma(j)?);
        if i == j {
            return Err(MajoranaError::SameIndex(i).into());
        }
        let prod = (gi.matrix() * gj.matrix()).scale(C64::new(0.0, 1.0));
        Ok(HermitianOperator::new(prod)?)
    }

    /// `(1 + iγ_iγ_j)/2`, occupation of the fermion built from the pair.
    pub fn pair_occupation(&self, i: usize, j: usize) -> Result<HermitianOperator> {
        Ok(self.bilinear(i, j)?.shift(1.0).scale(0.5))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConfigLabel {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl ConfigLabel {
    pub const ALL: [ConfigLabel; 6] =
        [ConfigLabel::A, ConfigLabel::B, ConfigLabel::C, ConfigLabel::D, ConfigLabel::E, ConfigLabel::F];

    pub fn symbol(self) -> char {
        match self {
            ConfigLabel::A => 'A',
            ConfigLabel::B => 'B',
            ConfigLabel::C => 'C',
            ConfigLabel::D => 'D',
            ConfigLabel::E => 'E',
            ConfigLabel::F => 'F',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.symbol() == c.to_ascii_uppercase())
    }

    /// Configurations coupled through island charging (A, B).
    pub fn is_charge_coupled(self) -> bool {
        matches!(self, ConfigLabel::A | ConfigLabel::B)
    }

    /// Configurations coupled through the 4π-periodic junction term (C–F).
    pub fn is_phase_coupled(self) -> bool {
        !self.is_charge_coupled()
    }
}

impl fmt::Display for ConfigLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Island {
    A,
    B,
}

/// Overlap-weighted Majorana pair `α · iγ_iγ_j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ActiveBilinear {
    pub i: usize,
    pub j: usize,
    pub overlap: f64,
}

/// One of the six static Majorana arrangements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MajoranaConfig {
    pub label: ConfigLabel,
    /// Island hosting γ₁..γ₄ (A, B only).
    pub islands: Option<[Island; 4]>,
    /// Junction-coupled pairs (C–F only).
    pub active_bilinears: Vec<ActiveBilinear>,
}

impl MajoranaConfig {
    /// Configuration with unit overlaps.
    pub fn new(label: ConfigLabel) -> Self {
        let pairs: &[(usize, usize)] = match label {
            ConfigLabel::A | ConfigLabel::B => &[],
            ConfigLabel::C => &[(2, 3)],
            ConfigLabel::D => &[(2, 3), (1, 4)],
            ConfigLabel::E => &[(1, 3)],
            ConfigLabel::F => &[(1, 3), (2, 4)],
        };
        let islands = match label {
            ConfigLabel::A => Some([Island::A; 4]),
            ConfigLabel::B => Some([Island::A, Island::A, Island::B, Island::B]),
            _ => None,
        };
        Self {
            label,
            islands,
            active_bilinears: pairs.iter().map(|&(i, j)| ActiveBilinear { i, j, overlap: 1.0 }).collect(),
        }
    }

    /// Replaces the overlap factors of the active pairs, in order.
    pub fn with_overlaps(mut self, overlaps: &[f64]) -> Result<Self> {
        for (b, &a) in self.active_bilinears.iter_mut().zip(overlaps) {
            if !(0.0..=1.0).contains(&a) {
                return Err(MajoranaError::OverlapRange(a).into());
            }
            b.overlap = a;
        }
        Ok(self)
    }

    pub fn require_charge(&self) -> Result<[Island; 4]> {
        self.islands.ok_or_else(|| {
            MajoranaError::WrongConfig { expected: "A or B", got: self.label.symbol() }.into()
        })
    }

    pub fn require_phase(&self) -> Result<()> {
        if self.label.is_phase_coupled() {
            Ok(())
        } else {
            Err(MajoranaError::WrongConfig { expected: "C, D, E or F", got: self.label.symbol() }.into())
        }
    }
}

/// Differential and total island charges `(m_q, m_r)` in Cooper-pair units.
///
/// Each island counts `(1 + iγ_jγ_k)/2` for every Majorana pair it hosts;
/// pairs are (γ₁, γ₂) and (γ₃, γ₄).
pub fn island_occupations(cfg: &MajoranaConfig, alg: &MajoranaAlgebra) -> Result<(HermitianOperator, HermitianOperator)> {
    let islands = cfg.require_charge()?;
    let mut m_a = HermitianOperator::zeros(4);
    let mut m_b = HermitianOperator::zeros(4);
    for (i, j) in [(1, 2), (3, 4)] {
        let occ = alg.pair_occupation(i, j)?;
        match (islands[i - 1], islands[j - 1]) {
            (Island::A, Island::A) => m_a = m_a.plus(&occ)?,
            (Island::B, Island::B) => m_b = m_b.plus(&occ)?,
            _ => unreachable!("pairs share an island in every charge configuration"),
        }
    }
    let m_q = m_a.minus(&m_b)?.scale(0.5);
    let m_r = m_a.plus(&m_b)?.scale(0.5);
    Ok((m_q, m_r))
}

/// The two addends of the Majorana charging energy.
#[derive(Debug, Clone)]
pub struct MajoranaCharging {
    /// `4·E_Cr·(m_r − n_g^{(r)})²`
    pub resonator_term: HermitianOperator,
    /// `4·E_Cq·(m_q − n_g^{(q)})²`
    pub transmon_term: HermitianOperator,
}

impl MajoranaCharging {
    pub fn total(&self) -> HermitianOperator {
        self.resonator_term.plus(&self.transmon_term).expect("both terms are 4x4")
    }
}

/// `H_γ = 4[E_Cr(m_r − n_g^{(r)})² + E_Cq(m_q − n_g^{(q)})²]` with
/// `n_g^{(r)} = n_g^{(a)} + n_g^{(b)}`, `n_g^{(q)} = n_g^{(a)} − n_g^{(b)}`.
pub fn majorana_charging_terms(
    cfg: &MajoranaConfig,
    alg: &MajoranaAlgebra,
    scales: &EnergyScales,
    ng_a: f64,
    ng_b: f64,
) -> Result<MajoranaCharging> {
    let (m_q, m_r) = island_occupations(cfg, alg)?;
    let ng_r = ng_a + ng_b;
    let ng_q = ng_a - ng_b;
    Ok(MajoranaCharging {
        resonator_term: m_r.shift(-ng_r).square().scale(4.0 * scales.ecr),
        transmon_term: m_q.shift(-ng_q).square().scale(4.0 * scales.ecq),
    })
}

pub fn majorana_charging(
    cfg: &MajoranaConfig,
    alg: &MajoranaAlgebra,
    scales: &EnergyScales,
    ng_a: f64,
    ng_b: f64,
) -> Result<HermitianOperator> {
    Ok(majorana_charging_terms(cfg, alg, scales, ng_a, ng_b)?.total())
}

/// Max − min eigenvalue of a 4x4 Majorana operator restricted to a sector.
pub fn sector_splitting(op: &HermitianOperator, sector: ParitySector) -> Result<f64> {
    let block = HermitianOperator::new(sector.project(op.matrix()))?;
    let ev = eigvalsh(&block)?;
    Ok(ev[1] - ev[0])
}

/// Sector splitting of `H_γ` for each `n_g^{(a)}` sample at fixed `n_g^{(b)}`.
pub fn degeneracy_scan(
    cfg: &MajoranaConfig,
    alg: &MajoranaAlgebra,
    scales: &EnergyScales,
    sector: ParitySector,
    ng_b: f64,
    ng_a_samples: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if ng_a_samples.is_empty() {
        return Err(MajoranaError::EmptyRange.into());
    }
    ng_a_samples
        .iter()
        .map(|&ng_a| {
            let h = majorana_charging(cfg, alg, scales, ng_a, ng_b)?;
            Ok((ng_a, sector_splitting(&h, sector)?))
        })
        .collect()
}
