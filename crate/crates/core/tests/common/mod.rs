#![allow(dead_code)]

use qbroadcast::bloch::standard_basis;
use qbroadcast::families::haar_random_state_indexed;
use qbroadcast::linalg::{kron, trace_product, ComplexMatrix, SubsystemShape, C64};

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn shape(a: usize, b: usize) -> SubsystemShape {
    SubsystemShape::bipartite(a, b).unwrap()
}

/// Hilbert-Schmidt random state on `a ⊗ b`, stream `i` of `seed`.
pub fn random_state(a: usize, b: usize, seed: u64, i: u64) -> ComplexMatrix {
    haar_random_state_indexed(a * b, a * b, seed, i).unwrap()
}

pub fn bell_phi_plus() -> ComplexMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::projector(&[c(s), c(0.0), c(0.0), c(s)])
}

/// Raw expectation values `Tr[ρ G_i⊗I]`, `Tr[ρ I⊗G_j]`, `Tr[ρ G_i⊗G_j]` on `d ⊗ d`.
pub fn two_qudit_expectations(rho: &ComplexMatrix, d: usize) -> (Vec<f64>, Vec<f64>, Vec<Vec<f64>>) {
    let basis = standard_basis(d).unwrap();
    let id = ComplexMatrix::identity(d);
    let ops = basis.ops();
    let x = ops.iter().map(|g| trace_product(rho, &kron(g, &id)).re).collect();
    let y = ops.iter().map(|g| trace_product(rho, &kron(&id, g)).re).collect();
    let t = ops
        .iter()
        .map(|gi| ops.iter().map(|gj| trace_product(rho, &kron(gi, gj)).re).collect())
        .collect();
    (x, y, t)
}

pub fn max_abs(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub const SQRT6: f64 = 2.449_489_742_783_178;

/// `(14 + 4√6)/25`.
pub fn mems_bob_onset() -> f64 {
    (14.0 + 4.0 * SQRT6) / 25.0
}

/// `(11 ∓ 4√6)/50`.
pub fn tpcs_band() -> (f64, f64) {
    ((11.0 - 4.0 * SQRT6) / 50.0, (11.0 + 4.0 * SQRT6) / 50.0)
}

/// The `200 × 200` admissible TPCS grid used by the region checks.
pub fn tpcs_grid(n: usize) -> Vec<(f64, f64)> {
    let mut pts = Vec::new();
    for i in 0..n {
        let a = 0.5 * i as f64 / (n - 1) as f64;
        for j in 0..n {
            let g = j as f64 / (n - 1) as f64;
            if 1.0 - 2.0 * a - g >= -1e-12 {
                pts.push((a, g));
            }
        }
    }
    pts
}
