//! Input state families on `2 ⊗ 3` and Haar-induced random states.
//!
//! Product basis order is `{|00⟩, |01⟩, |02⟩, |10⟩, |11⟩, |12⟩}`; `E_k` is the
//! projector on the k-th element (1-based).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MemsBranch {
    I,
    II,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MemsParams {
    r: f64,
}

impl MemsParams {
    pub fn new(r: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::Domain(format!("MEMS parameter r = {r} outside [0, 1]")));
        }
        Ok(Self { r })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// Branch I for `r ≤ 1/2`, II above. Both agree at `r = 1/2`.
    pub fn branch(&self) -> MemsBranch {
        if self.r <= 0.5 {
            MemsBranch::I
        } else {
            MemsBranch::II
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TpcsParams {
    alpha: f64,
    gamma: f64,
}

/// Slack allowed on `β ≥ 0` for grid points that sit on the edge of the triangle.
const BETA_SLACK: f64 = 1e-12;

impl TpcsParams {
    pub fn new(alpha: f64, gamma: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&alpha) || !(0.0..=1.0).contains(&gamma) {
            return Err(Error::Domain(format!(
                "TPCS parameters (alpha = {alpha}, gamma = {gamma}) outside [0, 1/2] x [0, 1]"
            )));
        }
        let p = Self { alpha, gamma };
        if p.beta() < -BETA_SLACK {
            return Err(Error::Domain(format!(
                "TPCS needs 2 alpha + 3 beta + gamma = 1 with beta >= 0; alpha = {alpha}, gamma = {gamma} gives beta = {}",
                p.beta()
            )));
        }
        Ok(p)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn beta(&self) -> f64 {
        (1.0 - 2.0 * self.alpha - self.gamma) / 3.0
    }
}

fn basis_ket(index: usize) -> Vec<C64> {
    (0..6)
        .map(|i| C64::new(if i == index { 1.0 } else { 0.0 }, 0.0))
        .collect()
}

fn superpose(a: usize, b: usize, sign: f64) -> Vec<C64> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    (0..6)
        .map(|i| {
            C64::new(
                if i == a {
                    s
                } else if i == b {
                    sign * s
                } else {
                    0.0
                },
                0.0,
            )
        })
        .collect()
}

fn e(k: usize) -> ComplexMatrix {
    ComplexMatrix::projector(&basis_ket(k - 1))
}

fn mems_branch_i(r: f64) -> ComplexMatrix {
    let phi = ComplexMatrix::projector(&superpose(0, 5, 1.0));
    phi.scaled(r)
        + (&e(2) + &e(5)).scaled((1.0 + r / 2.0) / 5.0)
        + (&(&e(1) + &e(3)) + &e(6)).scaled((1.0 - 2.0 * r) / 5.0)
}

fn mems_branch_ii(r: f64) -> ComplexMatrix {
    let phi = ComplexMatrix::projector(&superpose(0, 5, 1.0));
    phi.scaled(r) + (&e(2) + &e(5)).scaled((1.0 - r) / 2.0)
}

/// Maximally entangled mixed state built on `(|00⟩ + |12⟩)/√2`.
pub fn mems(r: f64) -> Result<ComplexMatrix> {
    let p = MemsParams::new(r)?;
    Ok(match p.branch() {
        MemsBranch::I => mems_branch_i(r),
        MemsBranch::II => mems_branch_ii(r),
    })
}

/// Both branch formulas at the same `r`, for continuity checks at `r = 1/2`.
pub fn mems_both_branches(r: f64) -> (ComplexMatrix, ComplexMatrix) {
    (mems_branch_i(r), mems_branch_ii(r))
}

/// `α(E₃ + E₆) + β(|φ⁺⟩⟨φ⁺| + |φ⁻⟩⟨φ⁻| + |ψ⁺⟩⟨ψ⁺|) + γ|ψ⁻⟩⟨ψ⁻|` with the Bell
/// states on qutrit levels {0, 1} and `β = (1 − 2α − γ)/3`.
pub fn tpcs(alpha: f64, gamma: f64) -> Result<ComplexMatrix> {
    let p = TpcsParams::new(alpha, gamma)?;
    let beta = p.beta().max(0.0);
    let phi_p = ComplexMatrix::projector(&superpose(0, 4, 1.0));
    let phi_m = ComplexMatrix::projector(&superpose(0, 4, -1.0));
    let psi_p = ComplexMatrix::projector(&superpose(1, 3, 1.0));
    let psi_m = ComplexMatrix::projector(&superpose(1, 3, -1.0));
    Ok((&e(3) + &e(6)).scaled(alpha) + (&(&phi_p + &phi_m) + &psi_p).scaled(beta) + psi_m.scaled(gamma))
}

fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn gaussian(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Normalised `G G† / Tr(G G†)` for a `dim × env` complex Gaussian `G`: the
/// state induced on `dim` by a Haar-random pure state on `dim ⊗ env`.
pub fn haar_random_state(dim: usize, env: usize, seed: u64) -> Result<ComplexMatrix> {
    haar_random_state_indexed(dim, env, seed, 0)
}

/// As [`haar_random_state`], drawing from stream `index` of `seed`.
pub fn haar_random_state_indexed(dim: usize, env: usize, seed: u64, index: u64) -> Result<ComplexMatrix> {
    if env < 1 || dim < 1 {
        return Err(Error::Domain(format!(
            "Haar sampling needs dim, env >= 1 (got {dim}, {env})"
        )));
    }
    let mut rng = stream_rng(seed, index);
    let g = ComplexMatrix::from_fn(dim, env, |_, _| gaussian(&mut rng));
    let w = &g * &g.adjoint();
    let tr = w.trace().re;
    Ok(w.scaled(1.0 / tr))
}

/// Haar-random unit vector of dimension `dim`.
pub fn haar_random_pure(dim: usize, seed: u64, index: u64) -> Vec<C64> {
    let mut rng = stream_rng(seed, index);
    let v: Vec<C64> = (0..dim).map(|_| gaussian(&mut rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// Haar-random unitary via Gram–Schmidt on a complex Gaussian matrix.
pub fn haar_random_unitary(dim: usize, seed: u64, index: u64) -> ComplexMatrix {
    let mut rng = stream_rng(seed, index);
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v: Vec<C64> = (0..dim).map(|_| gaussian(&mut rng)).collect();
        for c in &cols {
            let overlap: C64 = c.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (vi, ci) in v.iter_mut().zip(c) {
                *vi -= overlap * ci;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    ComplexMatrix::from_fn(dim, dim, |i, j| cols[j][i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::min_eigenvalue;

    #[test]
    fn mems_endpoints() {
        let zero = mems(0.0).unwrap();
        let expect = ComplexMatrix::from_real_diagonal(&[0.2, 0.2, 0.2, 0.0, 0.2, 0.2]);
        assert!(zero.max_abs_diff(&expect) < 1e-15);

        let one = mems(1.0).unwrap();
        let phi = ComplexMatrix::projector(&superpose(0, 5, 1.0));
        assert!(one.max_abs_diff(&phi) < 1e-15);
    }

    #[test]
    fn mems_branches_meet_at_half() {
        let (a, b) = mems_both_branches(0.5);
        assert!(a.max_abs_diff(&b) < 1e-14);
        assert!(mems(-0.1).is_err() && mems(1.1).is_err());
    }

    #[test]
    fn tpcs_corners() {
        let a = tpcs(0.5, 0.0).unwrap();
        let expect = ComplexMatrix::from_real_diagonal(&[0.0, 0.0, 0.5, 0.0, 0.0, 0.5]);
        assert!(a.max_abs_diff(&expect) < 1e-15);

        let b = tpcs(0.0, 1.0).unwrap();
        let psi = ComplexMatrix::projector(&superpose(1, 3, -1.0));
        assert!(b.max_abs_diff(&psi) < 1e-15);
    }

    #[test]
    fn tpcs_rejects_negative_beta() {
        let err = tpcs(0.4, 0.5).unwrap_err();
        assert!(err.to_string().contains("beta"), "{err}");
        assert!(tpcs(0.6, 0.0).is_err());
    }

    #[test]
    fn tpcs_states_are_valid() {
        for &(a, g) in &[(0.1, 0.6), (0.0, 0.0), (0.25, 0.25), (0.3, 0.4)] {
            let rho = tpcs(a, g).unwrap();
            assert!((rho.trace().re - 1.0).abs() < 1e-14);
            assert!(min_eigenvalue(&rho).unwrap() > -1e-12);
        }
    }

    #[test]
    fn haar_rank_one_is_pure() {
        let rho = haar_random_state(6, 1, 7).unwrap();
        assert!(((&rho * &rho).trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn haar_is_reproducible() {
        assert_eq!(
            haar_random_state(6, 6, 42).unwrap(),
            haar_random_state(6, 6, 42).unwrap()
        );
        assert_ne!(
            haar_random_state_indexed(6, 6, 42, 0).unwrap(),
            haar_random_state_indexed(6, 6, 42, 1).unwrap()
        );
    }

    #[test]
    fn random_unitary_is_unitary() {
        let u = haar_random_unitary(4, 3, 0);
        assert!((&u * &u.adjoint()).max_abs_diff(&ComplexMatrix::identity(4)) < 1e-12);
    }
}
