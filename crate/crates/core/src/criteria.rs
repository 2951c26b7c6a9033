//! Separability and entanglement tests.
//!
//! Necessary-and-sufficient tests may return [`Status::Separable`]; merely
//! sufficient ones only ever return `Entangled` (realignment) or `Separable`
//! (Bloch norm) and fall back to [`Status::Indeterminate`] otherwise.

use serde::{Deserialize, Serialize};

use crate::bloch::BlochRep;
use crate::error::{Error, Result};
use crate::linalg::{
    eigvals_hermitian, min_eigenvalue, partial_transpose, real_ky_fan_norm, realign, trace_norm, ComplexMatrix,
    SubsystemShape, C64,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Separable,
    Entangled,
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Criterion {
    PeresHorodecki,
    PeresHorodeckiDeterminant,
    BlochNorm,
    Realignment,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub criterion: Criterion,
    /// Minimum PT eigenvalue, norm excess over 1, or determinant, depending on `criterion`.
    pub witness: f64,
}

impl Verdict {
    pub fn is_entangled(&self) -> bool {
        self.status == Status::Entangled
    }

    pub fn is_separable(&self) -> bool {
        self.status == Status::Separable
    }
}

/// Comparators used when deciding the sign of a numerical witness.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Eigenvalues below `-eigen` count as negative.
    pub eigen: f64,
    /// Norm excesses above `norm` count as violations.
    pub norm: f64,
    /// Determinants below `-determinant` count as negative.
    pub determinant: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eigen: 1e-9,
            norm: 1e-9,
            determinant: 1e-15,
        }
    }
}

/// Minimum eigenvalue of the partial transpose on the second factor.
pub fn pt_min_eigenvalue(rho: &ComplexMatrix, shape: &SubsystemShape) -> Result<f64> {
    shape.as_bipartite()?;
    min_eigenvalue(&partial_transpose(rho, shape, 1)?)
}

/// Peres–Horodecki: negative partial transpose certifies entanglement. A
/// positive partial transpose is conclusive only for `2 ⊗ 2` and `2 ⊗ 3`.
pub fn ph_criterion(rho: &ComplexMatrix, shape: &SubsystemShape, tol: &Tolerances) -> Result<Verdict> {
    let (m, n) = shape.as_bipartite()?;
    let witness = pt_min_eigenvalue(rho, shape)?;
    let status = if witness < -tol.eigen {
        Status::Entangled
    } else if m * n <= 6 {
        Status::Separable
    } else {
        Status::Indeterminate
    };
    Ok(Verdict {
        status,
        criterion: Criterion::PeresHorodecki,
        witness,
    })
}

/// Leading principal blocks `W₂, W₃, W₄` of the two-qubit partial transpose,
/// built entry by entry from `ρ` with `ρ^T_{mμ,ην} = ρ_{mν,ημ}`.
pub fn ph_w_matrices(rho: &ComplexMatrix) -> Result<[ComplexMatrix; 3]> {
    if rho.rows() != 4 || rho.cols() != 4 {
        return Err(Error::Shape(format!(
            "W-determinant form needs a 2x2 state, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    // |mμ⟩ labels: 00 → 0, 01 → 1, 10 → 2, 11 → 3.
    let e = |a: usize, b: usize| rho[(a, b)];
    let w4 = [
        [e(0, 0), e(1, 0), e(0, 2), e(1, 2)],
        [e(0, 1), e(1, 1), e(0, 3), e(1, 3)],
        [e(2, 0), e(3, 0), e(2, 2), e(3, 2)],
        [e(2, 1), e(3, 1), e(2, 3), e(3, 3)],
    ];
    let block = |k: usize| ComplexMatrix::from_fn(k, k, |i, j| w4[i][j]);
    Ok([block(2), block(3), block(4)])
}

fn det(m: &ComplexMatrix) -> f64 {
    let d: C64 = m.as_nalgebra().clone().determinant();
    d.re
}

/// Two-qubit PH test via determinants: entangled iff `det W₃ < 0` or
/// `det W₄ < 0` while `det W₂ ≥ 0`. Witness is the smaller of the two determinants.
pub fn ph_determinant_form(rho: &ComplexMatrix, tol: &Tolerances) -> Result<Verdict> {
    let [w2, w3, w4] = ph_w_matrices(rho)?;
    let (d2, d3, d4) = (det(&w2), det(&w3), det(&w4));
    let negative = |v: f64| v < -tol.determinant;
    let status = if !negative(d2) && (negative(d3) || negative(d4)) {
        Status::Entangled
    } else {
        Status::Separable
    };
    Ok(Verdict {
        status,
        criterion: Criterion::PeresHorodeckiDeterminant,
        witness: d3.min(d4),
    })
}

/// Left-hand side of the Bloch-norm sufficient separability condition for `M ⊗ N`.
pub fn bloch_norm_lhs(b: &BlochRep, m: usize, n: usize) -> f64 {
    let (m, n) = (m as f64, n as f64);
    (2.0 * (m - 1.0) / m).sqrt() * b.x_norm()
        + (2.0 * (n - 1.0) / n).sqrt() * b.y_norm()
        + (4.0 * (m - 1.0) * (n - 1.0) / (m * n)).sqrt() * real_ky_fan_norm(&b.t_matrix())
}

/// Separable when the Bloch-norm sum is at most 1; otherwise indeterminate.
/// The witness is `lhs − 1`.
pub fn bloch_separability(b: &BlochRep, m: usize, n: usize) -> Result<Verdict> {
    if m != 2 || n != b.d {
        return Err(Error::Shape(format!(
            "Bloch data is 2 ⊗ {}, asked to test {m} ⊗ {n}",
            b.d
        )));
    }
    let lhs = bloch_norm_lhs(b, m, n);
    let status = if lhs <= 1.0 {
        Status::Separable
    } else {
        Status::Indeterminate
    };
    Ok(Verdict {
        status,
        criterion: Criterion::BlochNorm,
        witness: lhs - 1.0,
    })
}

/// Both sides of the qubit-qutrit non-broadcastability inequality
/// `(2/3) Σ_j ‖T_·j‖ ≤ (12 − 8‖X‖ − 15‖Y‖) / (10√3)` for an input state's Bloch data.
pub fn nonbroadcastable_sides(b: &BlochRep) -> (f64, f64) {
    let lhs = 2.0 / 3.0 * b.t_column_norm_sum();
    let rhs = (12.0 - 8.0 * b.x_norm() - 15.0 * b.y_norm()) / (10.0 * 3f64.sqrt());
    (lhs, rhs)
}

/// The inequality above, evaluated as written. Its constants come from the
/// `2 ⊗ 3` case; for other `d` it is evaluated the same way.
pub fn nonbroadcastable_predicate(b: &BlochRep) -> bool {
    let (lhs, rhs) = nonbroadcastable_sides(b);
    lhs <= rhs
}

/// `λ₁ ≤ λ₃ + 2√(λ₂λ₄)` with the spectrum sorted descending.
pub fn absolute_separability(rho: &ComplexMatrix, tol: &Tolerances) -> Result<bool> {
    if rho.rows() != 4 || rho.cols() != 4 {
        return Err(Error::Shape(format!(
            "absolute separability test needs a 2x2 state, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    let l = eigvals_hermitian(rho)?;
    let cross = (l[1].max(0.0) * l[3].max(0.0)).sqrt();
    Ok(l[0] <= l[2] + 2.0 * cross + tol.eigen)
}

/// `‖R(ρ)‖_tr`.
pub fn realignment_norm(rho: &ComplexMatrix, shape: &SubsystemShape) -> Result<f64> {
    Ok(trace_norm(&realign(rho, shape)?))
}

/// Entangled when the realigned trace norm exceeds 1; witness is the excess.
pub fn realignment_criterion(rho: &ComplexMatrix, shape: &SubsystemShape, tol: &Tolerances) -> Result<Verdict> {
    let witness = realignment_norm(rho, shape)? - 1.0;
    let status = if witness > tol.norm {
        Status::Entangled
    } else {
        Status::Indeterminate
    };
    Ok(Verdict {
        status,
        criterion: Criterion::Realignment,
        witness,
    })
}

/// Positive partial transpose and realignment-detected entanglement.
pub fn pptes_detect(rho: &ComplexMatrix, shape: &SubsystemShape, tol: &Tolerances) -> Result<bool> {
    let ppt = pt_min_eigenvalue(rho, shape)? >= -tol.eigen;
    Ok(ppt && realignment_criterion(rho, shape, tol)?.is_entangled())
}
