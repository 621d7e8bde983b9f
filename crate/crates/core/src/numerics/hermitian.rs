use std::ops::Deref;

use num_complex::Complex64 as C64;

use super::eigen::{eigh, EigenDecomposition};
use super::matrix::{kron, ComplexMatrix};
use crate::error::NumericsError;

/// Relative Hermiticity tolerance: `|M - M^H|_max <= HERMITIAN_TOL * max(1, |M|_max)`.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Square complex matrix known to be Hermitian.
#[derive(Clone, PartialEq)]
pub struct HermitianOperator {
    matrix: ComplexMatrix,
}

impl HermitianOperator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self, NumericsError> {
        if !matrix.is_square() {
            return Err(NumericsError::NotSquare(matrix.shape()));
        }
        let deviation = hermitian_deviation(&matrix);
        if deviation > HERMITIAN_TOL * matrix.max_norm().max(1.0) {
            return Err(NumericsError::NotHermitian { deviation });
        }
        Ok(Self { matrix })
    }

    /// Wraps `(M + M^H) / 2`. Only for callers that construct `M` Hermitian
    /// in exact arithmetic.
    pub(crate) fn symmetrized(matrix: ComplexMatrix) -> Self {
        debug_assert!(matrix.is_square());
        let adj = matrix.adjoint();
        let matrix = (&matrix + &adj).scale_real(0.5);
        Self { matrix }
    }

    pub fn zeros(dim: usize) -> Self {
        Self { matrix: ComplexMatrix::zeros(dim, dim) }
    }

    pub fn identity(dim: usize) -> Self {
        Self { matrix: ComplexMatrix::identity(dim) }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        Self { matrix: ComplexMatrix::from_diagonal(diag) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { matrix: self.matrix.scale_real(s) }
    }

    pub fn plus(&self, other: &Self) -> Result<Self, NumericsError> {
        Ok(Self { matrix: self.matrix.try_add(&other.matrix)? })
    }

    pub fn minus(&self, other: &Self) -> Result<Self, NumericsError> {
        Ok(Self { matrix: self.matrix.try_sub(&other.matrix)? })
    }

    /// `self + s * I`.
    pub fn shift(&self, s: f64) -> Self {
        let mut matrix = self.matrix.clone();
        for i in 0..self.dim() {
            matrix[(i, i)] += s;
        }
        Self { matrix }
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self { matrix: kron(&self.matrix, &other.matrix) }
    }

    /// Square of the operator; Hermitian for any Hermitian input.
    pub fn square(&self) -> Self {
        Self::symmetrized(&self.matrix * &self.matrix)
    }

    /// Symmetrized product `(AB + BA) / 2`.
    pub fn jordan_product(&self, other: &Self) -> Result<Self, NumericsError> {
        let ab = self.matrix.try_matmul(&other.matrix)?;
        let ba = other.matrix.try_matmul(&self.matrix)?;
        Ok(Self::symmetrized((&ab + &ba).scale_real(0.5)))
    }

    /// Product `AB` for commuting operands; errors if the result is not Hermitian.
    pub fn commuting_product(&self, other: &Self) -> Result<Self, NumericsError> {
        Self::new(self.matrix.try_matmul(&other.matrix)?)
    }

    pub fn eigh(&self) -> Result<EigenDecomposition, NumericsError> {
        eigh(self)
    }

    /// `V f(Λ) V^H` for a real scalar function `f`.
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64) -> Result<Self, NumericsError> {
        operator_function(self, f)
    }

    pub fn expectation(&self, v: &[C64]) -> f64 {
        let mv = self.matrix.matvec(v);
        v.iter().zip(&mv).map(|(a, b)| a.conj() * b).sum::<C64>().re
    }

    pub fn sum<'a>(dim: usize, terms: impl IntoIterator<Item = &'a Self>) -> Result<Self, NumericsError> {
        terms.into_iter().try_fold(Self::zeros(dim), |acc, t| acc.plus(t))
    }
}

impl Deref for HermitianOperator {
    type Target = ComplexMatrix;

    fn deref(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

impl std::fmt::Debug for HermitianOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hermitian{:?}", self.matrix)
    }
}

pub fn hermitian_deviation(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Applies a real scalar function through the spectral decomposition.
pub fn operator_function(
    m: &HermitianOperator,
    f: impl Fn(f64) -> f64,
) -> Result<HermitianOperator, NumericsError> {
    let eig = eigh(m)?;
    let n = m.dim();
    let fvals: Vec<f64> = eig.eigenvalues.iter().map(|&x| f(x)).collect();
    let v = &eig.eigenvectors;
    let out = ComplexMatrix::from_fn(n, n, |i, j| {
        (0..n).map(|k| v[(i, k)] * fvals[k] * v[(j, k)].conj()).sum()
    });
    Ok(HermitianOperator::symmetrized(out))
}
