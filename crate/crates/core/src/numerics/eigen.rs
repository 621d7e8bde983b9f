//! Cyclic Jacobi eigensolver for dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot element with a diagonal
//! unitary and then applies a real Givens rotation, so the complex problem is
//! handled with the same update formulas as the real symmetric one. Pivots are
//! visited in fixed row-major order, which makes the output a deterministic
//! function of the input.

use num_complex::Complex64 as C64;

use super::hermitian::HermitianOperator;
use super::matrix::ComplexMatrix;
use crate::error::NumericsError;

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-15;

/// Eigenvalues in ascending order and the matching orthonormal eigenvectors
/// stored as columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn vector(&self, k: usize) -> Vec<C64> {
        self.eigenvectors.column(k)
    }

    /// `max |V^H V - I|`.
    pub fn orthonormality_error(&self) -> f64 {
        let vhv = &self.eigenvectors.adjoint() * &self.eigenvectors;
        vhv.max_abs_diff(&ComplexMatrix::identity(self.dim()))
    }

    /// `max |M V - V Λ|`.
    pub fn residual(&self, m: &ComplexMatrix) -> f64 {
        let mv = m * &self.eigenvectors;
        let n = self.dim();
        let v = &self.eigenvectors;
        let vl = ComplexMatrix::from_fn(n, n, |i, j| v[(i, j)] * self.eigenvalues[j]);
        mv.max_abs_diff(&vl)
    }
}

/// Full eigendecomposition of a Hermitian operator.
///
/// Every eigenvector is phase-fixed so that its largest-magnitude component
/// (lowest index on ties) is real and positive.
pub fn eigh(m: &HermitianOperator) -> Result<EigenDecomposition, NumericsError> {
    let n = m.dim();
    if let Some(pos) = m.as_slice().iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(NumericsError::NonFinite { row: pos / n, col: pos % n });
    }
    let mut a = m.matrix().clone();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    let mut converged = n <= 1 || scale == 0.0;
    let mut off = off_diagonal_norm(&a);
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q, scale);
            }
        }
        off = off_diagonal_norm(&a);
        converged = off <= OFF_DIAGONAL_TOL * scale;
    }
    if !converged {
        return Err(NumericsError::NonConvergence { dim: n, residual: off });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    for j in 0..n {
        fix_phase(&mut eigenvectors, j);
    }
    Ok(EigenDecomposition { eigenvalues, eigenvectors })
}

/// Only the eigenvalues, ascending.
pub fn eigvalsh(m: &HermitianOperator) -> Result<Vec<f64>, NumericsError> {
    Ok(eigh(m)?.eigenvalues)
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, scale: f64) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r <= f64::MIN_POSITIVE || r <= 1e-18 * scale {
        a[(p, q)] = C64::new(0.0, 0.0);
        a[(q, p)] = C64::new(0.0, 0.0);
        return;
    }
    let phase = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let ph_conj = phase.conj();

    // A <- A J with J = [[c, s], [-s e^{-iφ}, c e^{-iφ}]] on the (p, q) plane.
    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * ph_conj * s;
        a[(k, q)] = akp * s + akq * ph_conj * c;
    }
    // A <- J^H A
    let data = a.data_mut();
    for k in 0..n {
        let apk = data[p * n + k];
        let aqk = data[q * n + k];
        data[p * n + k] = apk * c - aqk * phase * s;
        data[q * n + k] = apk * s + aqk * phase * c;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * ph_conj * s;
        v[(k, q)] = vkp * s + vkq * ph_conj * c;
    }
}

fn fix_phase(v: &mut ComplexMatrix, col: usize) {
    let n = v.rows();
    let max = (0..n).map(|i| v[(i, col)].norm()).fold(0.0, f64::max);
    if max == 0.0 {
        return;
    }
    let pivot = (0..n)
        .find(|&i| v[(i, col)].norm() >= max * (1.0 - 1e-10))
        .expect("max is attained");
    let z = v[(pivot, col)];
    let rot = z.conj() / z.norm();
    for i in 0..n {
        v[(i, col)] *= rot;
    }
    v[(pivot, col)] = C64::new(v[(pivot, col)].norm(), 0.0);
}
