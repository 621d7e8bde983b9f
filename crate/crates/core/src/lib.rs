//! Numerics for a hybrid Majorana / longitudinally coupled transmon circuit:
//! energy scales from circuit elements, truncated Fock-space Hamiltonians,
//! and effective Pauli-basis couplings per fermion-parity sector.

pub mod circuit;
pub mod error;
pub mod hamiltonian;
pub mod majorana;
pub mod numerics;
pub mod projection;

pub use circuit::{CircuitParams, ConstantSet, EnergyScales, GapInput, ZeroPoint};
pub use error::{Error, Result};
pub use hamiltonian::{FockSpace, HamiltonianModel, PotentialMode, SubsystemLayout, TermSelection};
pub use majorana::{ConfigLabel, MajoranaAlgebra, MajoranaConfig, ParitySector};
pub use numerics::{ComplexMatrix, EigenDecomposition, HermitianOperator, Pauli};
pub use projection::{
    analytic_coupling, numeric_coupling, qubit_subspace, table_rows, CouplingEngine, CouplingReport, CouplingTerm,
    Convention, JointSubspace, QubitSubspace, TableRow,
};
