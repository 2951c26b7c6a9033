//! Symmetric Heisenberg `1 → 2` cloner and the local broadcasting protocol.
//!
//! Party labels follow the broadcasting setup: 1 = Alice's input qubit,
//! 2 = Bob's input qudit, 3/4 = the blank copies on Alice's/Bob's side and
//! 5/6 = the two cloning machines. Blank and machine start in `|00⟩`, so each
//! cloner is applied as an isometry from the input space into
//! `clone a ⊗ clone b ⊗ machine`.

use crate::bloch::{decompose, BlochRep};
use crate::error::{Error, Result};
use crate::linalg::{partial_trace, permute_subsystems, ComplexMatrix, SubsystemShape, C64};

#[derive(Clone, Debug)]
pub struct CloningIsometry {
    d: usize,
    v: ComplexMatrix,
}

impl CloningIsometry {
    pub fn dim(&self) -> usize {
        self.d
    }

    /// `d³ × d` matrix; row index is `a·d² + b·d + c` for clone a, clone b, machine c.
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.v
    }

    /// `|j⟩ ↦ V|j⟩` applied to an arbitrary ket.
    pub fn apply(&self, ket: &[C64]) -> Vec<C64> {
        assert_eq!(ket.len(), self.d, "ket dimension");
        (0..self.v.rows())
            .map(|r| (0..self.d).map(|j| self.v[(r, j)] * ket[j]).sum())
            .collect()
    }
}

pub fn heisenberg_isometry(d: usize) -> Result<CloningIsometry> {
    if d < 2 {
        return Err(Error::Domain(format!("cloner needs d >= 2, got {d}")));
    }
    let amp = (2.0 / (d + 1) as f64).sqrt();
    let idx = |a: usize, b: usize, c: usize| a * d * d + b * d + c;
    let mut entries = vec![C64::new(0.0, 0.0); d * d * d * d];
    let mut add = |row: usize, col: usize, v: f64| entries[row * d + col] += v;
    for j in 0..d {
        add(idx(j, j, j), j, amp);
        for r in 1..d {
            let k = (j + r) % d;
            add(idx(j, k, k), j, 0.5 * amp);
            add(idx(k, j, k), j, 0.5 * amp);
        }
    }
    let v = ComplexMatrix::from_row_major(d * d * d, d, entries)?;
    Ok(CloningIsometry { d, v })
}

/// `⟨ψ|ρ_a|ψ⟩` and `⟨ψ|ρ_b|ψ⟩` for the two clones of a normalized pure input.
pub fn clone_fidelities(iso: &CloningIsometry, psi: &[C64]) -> Result<(f64, f64)> {
    let d = iso.d;
    let out = iso.apply(psi);
    let state = ComplexMatrix::projector(&out);
    let shape = SubsystemShape::new(vec![d, d, d])?;
    let fid = |rho: &ComplexMatrix| {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..d {
            for j in 0..d {
                acc += psi[i].conj() * rho[(i, j)] * psi[j];
            }
        }
        acc.re
    };
    let a = partial_trace(&state, &shape, &[0])?;
    let b = partial_trace(&state, &shape, &[1])?;
    Ok((fid(&a), fid(&b)))
}

/// Optimal symmetric clone fidelity `(d+3) / (2(d+1))`.
pub fn optimal_fidelity(d: usize) -> f64 {
    (d + 3) as f64 / (2 * (d + 1)) as f64
}

/// Bloch shrinking factor of one clone: `(d+2) / (2(d+1))`.
pub fn shrinking_factor(d: usize) -> f64 {
    (d + 2) as f64 / (2 * (d + 1)) as f64
}

/// The four two-party marginals left after local cloning.
#[derive(Clone, Debug)]
pub struct BroadcastOutputs {
    pub d: usize,
    /// Alice's two clones, `2 ⊗ 2`.
    pub rho_13: ComplexMatrix,
    /// Bob's two clones, `d ⊗ d`.
    pub rho_24: ComplexMatrix,
    /// Alice clone a with Bob clone b, `2 ⊗ d`.
    pub rho_14: ComplexMatrix,
    /// Alice clone b with Bob clone a, reordered to `2 ⊗ d` (qubit first).
    pub rho_23: ComplexMatrix,
}

impl BroadcastOutputs {
    pub fn alice_shape(&self) -> SubsystemShape {
        SubsystemShape::bipartite(2, 2).expect("valid")
    }

    pub fn bob_shape(&self) -> SubsystemShape {
        SubsystemShape::bipartite(self.d, self.d).expect("valid")
    }

    pub fn nonlocal_shape(&self) -> SubsystemShape {
        SubsystemShape::bipartite(2, self.d).expect("valid")
    }
}

fn qubit_qudit_dim(shape: &SubsystemShape) -> Result<usize> {
    let (m, d) = shape.as_bipartite()?;
    if m != 2 {
        return Err(Error::Shape(format!("first factor must be a qubit, got dimension {m}")));
    }
    Ok(d)
}

/// Kraus operators of the two cloners with machines 5 and 6 traced out, mapping
/// `ρ₁₂` into parties ordered `(1, 2, 3, 4)`.
fn broadcast_kraus(d: usize) -> Result<Vec<ComplexMatrix>> {
    let va = heisenberg_isometry(2)?;
    let vb = heisenberg_isometry(d)?;
    let mut out = Vec::with_capacity(2 * d);
    for m5 in 0..2 {
        for m6 in 0..d {
            out.push(ComplexMatrix::from_fn(4 * d * d, 2 * d, |row, col| {
                let (i1, rest) = (row / (2 * d * d), row % (2 * d * d));
                let (i2, rest) = (rest / (2 * d), rest % (2 * d));
                let (i3, i4) = (rest / d, rest % d);
                let (j, k) = (col / d, col % d);
                va.v[(i1 * 4 + i3 * 2 + m5, j)] * vb.v[(i2 * d * d + i4 * d + m6, k)]
            }));
        }
    }
    Ok(out)
}

/// Four-party state `ρ̃₁₂₃₄` in party order `(1, 2, 3, 4)`, shape `[2, d, 2, d]`.
pub fn cloned_state(rho_12: &ComplexMatrix, shape: &SubsystemShape) -> Result<ComplexMatrix> {
    let d = qubit_qudit_dim(shape)?;
    shape.check(rho_12)?;
    let mut acc = ComplexMatrix::zeros(4 * d * d, 4 * d * d);
    for k in broadcast_kraus(d)? {
        acc = &acc + &(&(&k * rho_12) * &k.adjoint());
    }
    Ok(acc)
}

/// Full six-party state `(U₁⊗U₂)(ρ₁₂ ⊗ |00⟩⟨00|₃₄ ⊗ |00⟩⟨00|₅₆)(U₁⊗U₂)†`, party
/// order `(1, .., 6)`, shape `[2, d, 2, d, 2, d]`. Only practical for small `d`.
pub fn six_party_state(rho_12: &ComplexMatrix, shape: &SubsystemShape) -> Result<ComplexMatrix> {
    let d = qubit_qudit_dim(shape)?;
    shape.check(rho_12)?;
    let va = heisenberg_isometry(2)?;
    let vb = heisenberg_isometry(d)?;
    // The product of isometries acts on (1,3,5) ⊗ (2,4,6); interleave its rows
    // into the canonical party order.
    let w = ComplexMatrix::from_fn(8 * d * d * d, 2 * d, |row, col| {
        let digits = {
            let dims = [2, d, 2, d, 2, d];
            let mut rem = row;
            let mut out = [0usize; 6];
            for k in (0..6).rev() {
                out[k] = rem % dims[k];
                rem /= dims[k];
            }
            out
        };
        let [i1, i2, i3, i4, i5, i6] = digits;
        let (j, k) = (col / d, col % d);
        va.v[(i1 * 4 + i3 * 2 + i5, j)] * vb.v[(i2 * d * d + i4 * d + i6, k)]
    });
    Ok(&(&w * rho_12) * &w.adjoint())
}

pub fn broadcast(rho_12: &ComplexMatrix, shape: &SubsystemShape) -> Result<BroadcastOutputs> {
    let d = qubit_qudit_dim(shape)?;
    let four = cloned_state(rho_12, shape)?;
    let shape4 = SubsystemShape::new(vec![2, d, 2, d])?;
    let rho_23_bob_first = partial_trace(&four, &shape4, &[1, 2])?;
    Ok(BroadcastOutputs {
        d,
        rho_13: partial_trace(&four, &shape4, &[0, 2])?,
        rho_24: partial_trace(&four, &shape4, &[1, 3])?,
        rho_14: partial_trace(&four, &shape4, &[0, 3])?,
        rho_23: permute_subsystems(&rho_23_bob_first, &SubsystemShape::bipartite(d, 2)?, &[1, 0])?,
    })
}

/// Bloch data of the nonlocal output computed directly from the input's:
/// `(s_A X, s_B Y, s_A s_B T)` with `s_A = 2/3` and `s_B = (d+2)/(2(d+1))`.
pub fn nonlocal_output_fast(b: &BlochRep) -> BlochRep {
    let sa = shrinking_factor(2);
    let sb = shrinking_factor(b.d);
    b.scaled(sa, sb, sa * sb)
}

/// Shrinking factors measured through the full protocol on `probe`: least-squares
/// ratios of the nonlocal output's `X`, `Y` and `T` to the input's.
pub fn measure_shrinking(probe: &ComplexMatrix, shape: &SubsystemShape) -> Result<(f64, f64, f64)> {
    let input = decompose(probe, shape)?;
    let out = decompose(&broadcast(probe, shape)?.rho_14, shape)?;
    let ratio = |a: Vec<f64>, b: Vec<f64>| {
        let num: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        let den: f64 = a.iter().map(|x| x * x).sum();
        if den < 1e-24 {
            f64::NAN
        } else {
            num / den
        }
    };
    let flat = |t: &[Vec<f64>]| t.iter().flatten().copied().collect::<Vec<_>>();
    Ok((
        ratio(input.x.to_vec(), out.x.to_vec()),
        ratio(input.y.clone(), out.y.clone()),
        ratio(flat(&input.t), flat(&out.t)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::kron;

    #[test]
    fn isometry_columns_are_orthonormal() {
        for d in 2..=5 {
            let iso = heisenberg_isometry(d).unwrap();
            let gram = &iso.matrix().adjoint() * iso.matrix();
            assert!(gram.max_abs_diff(&ComplexMatrix::identity(d)) < 1e-12, "d = {d}");
        }
        assert!(heisenberg_isometry(1).is_err());
    }

    #[test]
    fn isometry_column_amplitudes() {
        let d = 3;
        let iso = heisenberg_isometry(d).unwrap();
        let amp = (2.0 / 4.0f64).sqrt();
        let v = iso.matrix();
        assert!((v[(0, 0)].re - amp).abs() < 1e-15); // |000⟩
        assert!((v[(4, 0)].re - 0.5 * amp).abs() < 1e-15); // |011⟩
        assert!((v[(10, 0)].re - 0.5 * amp).abs() < 1e-15); // |101⟩
        let nonzero = (0..27).filter(|&r| v[(r, 0)].norm() > 0.0).count();
        assert_eq!(nonzero, 1 + 2 * (d - 1));
    }

    #[test]
    fn basis_state_fidelity() {
        let iso = heisenberg_isometry(2).unwrap();
        let (fa, fb) = clone_fidelities(&iso, &[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]).unwrap();
        assert!((fa - 5.0 / 6.0).abs() < 1e-14 && (fb - 5.0 / 6.0).abs() < 1e-14);
    }

    #[test]
    fn maximally_mixed_input() {
        let shape = SubsystemShape::bipartite(2, 3).unwrap();
        let rho = ComplexMatrix::identity(6).scaled(1.0 / 6.0);
        let out = broadcast(&rho, &shape).unwrap();
        let b14 = decompose(&out.rho_14, &shape).unwrap();
        assert!(b14.max_abs_diff(&BlochRep::zero(3)) < 1e-14);
        let a = decompose(&out.rho_13, &out.alice_shape()).unwrap();
        assert!(a.x.iter().chain(&a.y).all(|v| v.abs() < 1e-14));
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 / 3.0 } else { 0.0 };
                assert!((a.t[i][j] - expect).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn kraus_route_matches_six_party_route() {
        let shape = SubsystemShape::bipartite(2, 3).unwrap();
        let a = ComplexMatrix::from_real_rows(&[vec![0.8, 0.3], vec![0.3, 0.2]]).unwrap();
        let b =
            ComplexMatrix::from_real_rows(&[vec![0.5, 0.1, 0.0], vec![0.1, 0.3, 0.05], vec![0.0, 0.05, 0.2]]).unwrap();
        let rho = kron(&a, &b);
        let six = six_party_state(&rho, &shape).unwrap();
        let shape6 = SubsystemShape::new(vec![2, 3, 2, 3, 2, 3]).unwrap();
        let four = partial_trace(&six, &shape6, &[0, 1, 2, 3]).unwrap();
        assert!(four.max_abs_diff(&cloned_state(&rho, &shape).unwrap()) < 1e-14);
        assert!((six.trace().re - 1.0).abs() < 1e-13);
    }

    #[test]
    fn broadcast_rejects_qudit_first() {
        let shape = SubsystemShape::bipartite(3, 2).unwrap();
        assert!(matches!(
            broadcast(&ComplexMatrix::identity(6).scaled(1.0 / 6.0), &shape),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn fast_path_zero_and_scaling() {
        assert_eq!(nonlocal_output_fast(&BlochRep::zero(3)), BlochRep::zero(3));
        let b = BlochRep::new(3, [0.3, 0.0, 0.0], vec![0.8; 8], vec![vec![1.2; 8]; 3]).unwrap();
        let f = nonlocal_output_fast(&b);
        assert!((f.x[0] - 0.2).abs() < 1e-15);
        assert!((f.y[0] - 0.5).abs() < 1e-15);
        assert!((f.t[0][0] - 0.5).abs() < 1e-15);
    }
}
