//! Dense complex linear algebra: matrices, Kronecker products, a Hermitian
//! eigensolver, spectral operator functions and Pauli decomposition.

mod eigen;
mod hermitian;
mod matrix;
mod pauli;

pub use eigen::{eigh, eigvalsh, EigenDecomposition};
pub use hermitian::{hermitian_deviation, operator_function, HermitianOperator, HERMITIAN_TOL};
pub use matrix::{kron, kron_all, ComplexMatrix};
pub use pauli::{
    pauli_coefficient, pauli_decompose, pauli_reconstruct, pauli_string, Pauli, PauliCoefficient,
    PauliTerm, IMAG_TOL,
};
