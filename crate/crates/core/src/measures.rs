//! Geometric discord and l1-norm coherence.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::bloch::decompose;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, SubsystemShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MeasureKind {
    GeometricDiscord,
    L1Coherence,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureValue {
    pub kind: MeasureKind,
    pub value: f64,
}

/// Negative discord values smaller than this are round-off and clamp to zero.
pub const DISCORD_CLAMP: f64 = 1e-9;

/// Geometric discord of a `2 ⊗ d` state, measured on the qubit:
/// `(1/2d)(‖x‖² + ‖T‖² − λ_max(x xᵗ + T Tᵗ))`.
///
/// `x` is the qubit Bloch vector and `T` the correlation matrix read as
/// coefficients of the `1/(2d)`-normalised expansion, i.e. `d/2` times the raw
/// expectation values `Tr[ρ σ_i⊗O_j]`.
pub fn geometric_discord(rho: &ComplexMatrix, shape: &SubsystemShape) -> Result<MeasureValue> {
    let b = decompose(rho, shape)?;
    let d = b.d;
    let t = b.canonical_t();
    let cols = t[0].len();
    let tm = DMatrix::from_fn(3, cols, |i, j| t[i][j]);
    let xv = nalgebra::Vector3::from(b.x);
    let omega = xv * xv.transpose() + &tm * tm.transpose();
    let lambda_max = SymmetricEigen::new(omega)
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max);
    let raw = (xv.norm_squared() + tm.norm_squared() - lambda_max) / (2 * d) as f64;
    let value = if raw >= 0.0 {
        raw
    } else if raw > -DISCORD_CLAMP {
        0.0
    } else {
        return Err(Error::Numerics(format!("geometric discord evaluated to {raw:e}")));
    };
    Ok(MeasureValue {
        kind: MeasureKind::GeometricDiscord,
        value,
    })
}

/// Sum of moduli of off-diagonal entries in the computational product basis.
pub fn l1_coherence(rho: &ComplexMatrix) -> MeasureValue {
    let mut value = 0.0;
    for i in 0..rho.rows() {
        for j in 0..rho.cols() {
            if i != j {
                value += rho[(i, j)].norm();
            }
        }
    }
    MeasureValue {
        kind: MeasureKind::L1Coherence,
        value,
    }
}

/// Closed form for the coherence of Alice's local output in terms of the
/// input's qubit Bloch vector: `1/3 + (4/3)√(x₁² + x₂²)`.
pub fn alice_local_coherence_formula(x: [f64; 3]) -> f64 {
    1.0 / 3.0 + 4.0 / 3.0 * (x[0] * x[0] + x[1] * x[1]).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kron, C64};

    #[test]
    fn classical_quantum_product_has_zero_discord() {
        let a = ComplexMatrix::from_real_diagonal(&[0.7, 0.3]);
        let b =
            ComplexMatrix::from_real_rows(&[vec![0.5, 0.1, 0.0], vec![0.1, 0.3, 0.1], vec![0.0, 0.1, 0.2]]).unwrap();
        let shape = SubsystemShape::bipartite(2, 3).unwrap();
        let dg = geometric_discord(&kron(&a, &b), &shape).unwrap();
        assert!(dg.value.abs() < 1e-14);
    }

    #[test]
    fn diagonal_states_have_no_coherence() {
        let rho = ComplexMatrix::from_real_diagonal(&[0.1, 0.2, 0.3, 0.4]);
        assert_eq!(l1_coherence(&rho).value, 0.0);
    }

    #[test]
    fn bell_state_coherence_and_discord() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let z = C64::new(0.0, 0.0);
        let bell = ComplexMatrix::projector(&[C64::new(s, 0.0), z, z, C64::new(s, 0.0)]);
        assert!((l1_coherence(&bell).value - 1.0).abs() < 1e-14);
        // (1/4)(0 + 3 − 1)
        let shape = SubsystemShape::bipartite(2, 2).unwrap();
        assert!((geometric_discord(&bell, &shape).unwrap().value - 0.5).abs() < 1e-14);
    }

    #[test]
    fn formula_floor() {
        assert_eq!(alice_local_coherence_formula([0.0, 0.0, 0.7]), 1.0 / 3.0);
        assert_eq!(alice_local_coherence_formula([0.0; 3]), 1.0 / 3.0);
    }
}
