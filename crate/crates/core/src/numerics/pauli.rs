use std::fmt;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::matrix::{kron_all, ComplexMatrix};
use crate::error::NumericsError;

/// Imaginary parts of Pauli coefficients above this are reported as suspicious.
pub const IMAG_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(self) -> ComplexMatrix {
        let o = C64::new(0.0, 0.0);
        let l = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        let data = match self {
            Pauli::I => vec![l, o, o, l],
            Pauli::X => vec![o, l, l, o],
            Pauli::Y => vec![o, -i, i, o],
            Pauli::Z => vec![l, o, o, -l],
        };
        ComplexMatrix::from_vec(2, 2, data).expect("2x2 Pauli")
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    pub fn is_identity(self) -> bool {
        self == Pauli::I
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// `σ_{l1} ⊗ ... ⊗ σ_{lk}` with the first label acting on the most
/// significant tensor factor.
pub fn pauli_string(labels: &[Pauli]) -> ComplexMatrix {
    let mats: Vec<ComplexMatrix> = labels.iter().map(|p| p.matrix()).collect();
    kron_all(&mats)
}

/// Coefficient of a Pauli string in the expansion of a qubit operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliCoefficient {
    pub value: f64,
    /// Imaginary part of `Tr[P h] / 2^k`; zero for Hermitian `h` up to rounding.
    pub imag: f64,
}

impl PauliCoefficient {
    pub fn is_real(&self) -> bool {
        self.imag.abs() <= IMAG_TOL
    }
}

/// `Tr[(σ_{l1} ⊗ ... ⊗ σ_{lk}) h] / 2^k`.
pub fn pauli_coefficient(h: &ComplexMatrix, labels: &[Pauli]) -> Result<PauliCoefficient, NumericsError> {
    let k = labels.len();
    let dim = 1usize << k;
    if !h.is_square() || h.rows() != dim {
        return Err(NumericsError::NotQubitOperator { dim: h.rows(), qubits: k });
    }
    let p = pauli_string(labels);
    // Tr[P h] = Σ_ij P_ij h_ji; each row of P has exactly one non-zero.
    let mut tr = C64::new(0.0, 0.0);
    for i in 0..dim {
        for j in 0..dim {
            let pij = p[(i, j)];
            if pij != C64::new(0.0, 0.0) {
                tr += pij * h[(j, i)];
            }
        }
    }
    let c = tr / dim as f64;
    Ok(PauliCoefficient { value: c.re, imag: c.im })
}

/// One term of a full Pauli expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliTerm {
    pub labels: Vec<Pauli>,
    pub coefficient: f64,
}

impl PauliTerm {
    pub fn label_string(&self) -> String {
        self.labels.iter().map(|p| p.symbol()).collect()
    }

    /// Number of non-identity factors.
    pub fn weight(&self) -> usize {
        self.labels.iter().filter(|p| !p.is_identity()).count()
    }
}

/// All `4^k` Pauli coefficients of a `2^k`-dimensional operator, in
/// lexicographic (I, X, Y, Z) label order.
pub fn pauli_decompose(h: &ComplexMatrix, qubits: usize) -> Result<Vec<PauliTerm>, NumericsError> {
    let mut out = Vec::with_capacity(1 << (2 * qubits));
    for idx in 0..(1usize << (2 * qubits)) {
        let labels: Vec<Pauli> = (0..qubits)
            .map(|q| Pauli::ALL[(idx >> (2 * (qubits - 1 - q))) & 3])
            .collect();
        let c = pauli_coefficient(h, &labels)?;
        out.push(PauliTerm { labels, coefficient: c.value });
    }
    Ok(out)
}

/// Inverse of [`pauli_decompose`].
pub fn pauli_reconstruct(terms: &[PauliTerm]) -> ComplexMatrix {
    let k = terms.first().map_or(0, |t| t.labels.len());
    let dim = 1usize << k;
    terms.iter().fold(ComplexMatrix::zeros(dim, dim), |acc, t| {
        &acc + &pauli_string(&t.labels).scale_real(t.coefficient)
    })
}
