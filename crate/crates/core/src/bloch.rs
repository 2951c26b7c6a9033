//! Canonical `(X, Y, T)` Bloch form of qubit-qudit states.
//!
//! [`decompose`] returns raw expectation values
//! `x_i = Tr[ρ σ_i⊗I]`, `y_j = Tr[ρ I⊗O_j]`, `T_ij = Tr[ρ σ_i⊗O_j]` with a
//! basis normalised to `Tr(O_i O_j) = 2 δ_ij`. The coefficients that multiply
//! the operators in `ρ = (1/2d)(I + Σ x σ⊗I + Σ y I⊗O + Σ T σ⊗O)` differ from
//! those by a factor `d/2` on `Y` and `T`; [`BlochRep::canonical_y`],
//! [`BlochRep::canonical_t`] and [`BlochRep::from_canonical`] convert between
//! the two readings. For a qubit on both sides the two coincide.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kron, trace_product, ComplexMatrix, SubsystemShape, C64};

#[derive(Clone, Debug)]
pub struct OperatorBasis {
    dim: usize,
    ops: Vec<ComplexMatrix>,
    normalization: f64,
}

impl OperatorBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ops(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    /// `c` in `Tr(O_i O_j) = c δ_ij`.
    pub fn normalization(&self) -> f64 {
        self.normalization
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }
}

fn unit(d: usize, i: usize, j: usize, v: C64) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, d, |r, c| if (r, c) == (i, j) { v } else { C64::new(0.0, 0.0) })
}

fn sym(d: usize, j: usize, k: usize) -> ComplexMatrix {
    &unit(d, j, k, C64::new(1.0, 0.0)) + &unit(d, k, j, C64::new(1.0, 0.0))
}

fn antisym(d: usize, j: usize, k: usize) -> ComplexMatrix {
    &unit(d, j, k, C64::new(0.0, -1.0)) + &unit(d, k, j, C64::new(0.0, 1.0))
}

/// `sqrt(2/(l(l+1))) diag(1,..,1,-l,0,..)` with `l` ones.
fn diag_family(d: usize, l: usize) -> ComplexMatrix {
    let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
    let diag: Vec<f64> = (0..d)
        .map(|i| match i.cmp(&l) {
            std::cmp::Ordering::Less => norm,
            std::cmp::Ordering::Equal => -(l as f64) * norm,
            std::cmp::Ordering::Greater => 0.0,
        })
        .collect();
    ComplexMatrix::from_real_diagonal(&diag)
}

/// Pauli matrices for `d = 2`, the eight Gell-Mann matrices in their usual
/// order for `d = 3`, and the generalized Gell-Mann matrices (symmetric,
/// antisymmetric, then diagonal) for `d > 3`. All normalised to `Tr(O²) = 2`.
pub fn standard_basis(d: usize) -> Result<OperatorBasis> {
    if d < 2 {
        return Err(Error::Domain(format!("operator basis needs d >= 2, got {d}")));
    }
    let ops = match d {
        2 => vec![sym(2, 0, 1), antisym(2, 0, 1), diag_family(2, 1)],
        3 => vec![
            sym(3, 0, 1),
            antisym(3, 0, 1),
            diag_family(3, 1),
            sym(3, 0, 2),
            antisym(3, 0, 2),
            sym(3, 1, 2),
            antisym(3, 1, 2),
            diag_family(3, 2),
        ],
        _ => {
            let pairs: Vec<(usize, usize)> = (0..d).flat_map(|j| (j + 1..d).map(move |k| (j, k))).collect();
            let mut ops: Vec<ComplexMatrix> = pairs.iter().map(|&(j, k)| sym(d, j, k)).collect();
            ops.extend(pairs.iter().map(|&(j, k)| antisym(d, j, k)));
            ops.extend((1..d).map(|l| diag_family(d, l)));
            ops
        }
    };
    Ok(OperatorBasis {
        dim: d,
        ops,
        normalization: 2.0,
    })
}

pub fn pauli() -> OperatorBasis {
    standard_basis(2).expect("d = 2 is valid")
}

/// Bloch data of a `2 ⊗ d` state, stored as raw expectation values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlochRep {
    pub d: usize,
    pub x: [f64; 3],
    pub y: Vec<f64>,
    /// 3 × (d²−1), row-major by Pauli index.
    pub t: Vec<Vec<f64>>,
}

impl BlochRep {
    pub fn zero(d: usize) -> Self {
        let n = d * d - 1;
        Self {
            d,
            x: [0.0; 3],
            y: vec![0.0; n],
            t: vec![vec![0.0; n]; 3],
        }
    }

    pub fn new(d: usize, x: [f64; 3], y: Vec<f64>, t: Vec<Vec<f64>>) -> Result<Self> {
        let b = Self { d, x, y, t };
        b.check()?;
        Ok(b)
    }

    /// Builds from coefficients of the `1/(2d)`-normalised operator expansion.
    pub fn from_canonical(d: usize, x: [f64; 3], y: Vec<f64>, t: Vec<Vec<f64>>) -> Result<Self> {
        let s = 2.0 / d as f64;
        let y = y.into_iter().map(|v| v * s).collect();
        let t = t
            .into_iter()
            .map(|row| row.into_iter().map(|v| v * s).collect())
            .collect();
        Self::new(d, x, y, t)
    }

    fn check(&self) -> Result<()> {
        let n = self.d * self.d - 1;
        if self.d < 2 || self.y.len() != n || self.t.len() != 3 || self.t.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!(
                "Bloch data for d = {} needs |Y| = {n} and T of 3x{n}",
                self.d
            )));
        }
        Ok(())
    }

    pub fn canonical_y(&self) -> Vec<f64> {
        let s = self.d as f64 / 2.0;
        self.y.iter().map(|v| v * s).collect()
    }

    pub fn canonical_t(&self) -> Vec<Vec<f64>> {
        let s = self.d as f64 / 2.0;
        self.t.iter().map(|row| row.iter().map(|v| v * s).collect()).collect()
    }

    pub fn t_matrix(&self) -> DMatrix<f64> {
        let n = self.d * self.d - 1;
        DMatrix::from_fn(3, n, |i, j| self.t[i][j])
    }

    pub fn x_norm(&self) -> f64 {
        self.x.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn y_norm(&self) -> f64 {
        self.y.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// `Σ_j sqrt(Σ_i t_ij²)`.
    pub fn t_column_norm_sum(&self) -> f64 {
        (0..self.y.len())
            .map(|j| self.t.iter().map(|row| row[j] * row[j]).sum::<f64>().sqrt())
            .sum()
    }

    /// `(a·X, b·Y, c·T)`.
    pub fn scaled(&self, a: f64, b: f64, c: f64) -> Self {
        Self {
            d: self.d,
            x: self.x.map(|v| v * a),
            y: self.y.iter().map(|v| v * b).collect(),
            t: self.t.iter().map(|row| row.iter().map(|v| v * c).collect()).collect(),
        }
    }

    /// Largest component-wise difference; infinite if dimensions differ.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.d != other.d {
            return f64::INFINITY;
        }
        let xs = self.x.iter().zip(&other.x).map(|(a, b)| (a - b).abs());
        let ys = self.y.iter().zip(&other.y).map(|(a, b)| (a - b).abs());
        let ts = self
            .t
            .iter()
            .zip(&other.t)
            .flat_map(|(ra, rb)| ra.iter().zip(rb).map(|(a, b)| (a - b).abs()));
        xs.chain(ys).chain(ts).fold(0.0, f64::max)
    }
}

/// Expectation values of every `σ_i⊗I`, `I⊗O_j` and `σ_i⊗O_j`.
pub fn decompose(rho: &ComplexMatrix, shape: &SubsystemShape) -> Result<BlochRep> {
    let (m, d) = shape.as_bipartite()?;
    if m != 2 {
        return Err(Error::Shape(format!("first factor must be a qubit, got dimension {m}")));
    }
    shape.check(rho)?;
    let paulis = pauli();
    let basis = standard_basis(d)?;
    let id2 = ComplexMatrix::identity(2);
    let idd = ComplexMatrix::identity(d);

    let expect = |op: &ComplexMatrix| trace_product(rho, op).re;
    let x = [0, 1, 2].map(|i| expect(&kron(&paulis.ops[i], &idd)));
    let y = basis.ops.iter().map(|o| expect(&kron(&id2, o))).collect();
    let t = paulis
        .ops
        .iter()
        .map(|s| basis.ops.iter().map(|o| expect(&kron(s, o))).collect())
        .collect();
    Ok(BlochRep { d, x, y, t })
}

/// The Hermitian, unit-trace matrix whose [`decompose`] is `b`. Positivity is not checked.
pub fn reconstruct(b: &BlochRep) -> Result<ComplexMatrix> {
    b.check()?;
    let d = b.d;
    let paulis = pauli();
    let basis = standard_basis(d)?;
    let id2 = ComplexMatrix::identity(2);
    let idd = ComplexMatrix::identity(d);
    let c = basis.normalization;

    // Orthogonal projection: Tr(σ_i²) = 2, Tr(O_j²) = c, Tr(I_d) = d.
    let mut rho = ComplexMatrix::identity(2 * d).scaled(1.0 / (2 * d) as f64);
    for (i, s) in paulis.ops.iter().enumerate() {
        rho = &rho + &kron(s, &idd).scaled(b.x[i] / (2 * d) as f64);
    }
    for (j, o) in basis.ops.iter().enumerate() {
        rho = &rho + &kron(&id2, o).scaled(b.y[j] / (2.0 * c));
    }
    for (i, s) in paulis.ops.iter().enumerate() {
        for (j, o) in basis.ops.iter().enumerate() {
            if b.t[i][j] != 0.0 {
                rho = &rho + &kron(s, o).scaled(b.t[i][j] / (2.0 * c));
            }
        }
    }
    Ok(rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trace_table(basis: &OperatorBasis) -> Vec<Vec<C64>> {
        basis
            .ops()
            .iter()
            .map(|a| basis.ops().iter().map(|b| trace_product(a, b)).collect())
            .collect()
    }

    #[test]
    fn pauli_squares_to_identity() {
        for s in pauli().ops() {
            assert!((s * s).max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);
        }
    }

    #[test]
    fn gell_mann_trace_table_is_two_delta() {
        let basis = standard_basis(3).unwrap();
        assert_eq!(basis.len(), 8);
        for (i, row) in trace_table(&basis).iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let expect = if i == j { 2.0 } else { 0.0 };
                assert!((v - C64::new(expect, 0.0)).norm() < 1e-12, "({i},{j}) = {v}");
            }
        }
    }

    #[test]
    fn basis_invariants_for_higher_dims() {
        for d in 2..=6 {
            let basis = standard_basis(d).unwrap();
            assert_eq!(basis.len(), d * d - 1);
            for op in basis.ops() {
                assert!(op.hermiticity_defect() < 1e-12);
                assert!(op.trace().norm() < 1e-12);
            }
            for (i, row) in trace_table(&basis).iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let expect = if i == j { basis.normalization() } else { 0.0 };
                    assert!((v - C64::new(expect, 0.0)).norm() < 1e-12);
                }
            }
        }
        assert!(matches!(standard_basis(1), Err(Error::Domain(_))));
    }

    #[test]
    fn maximally_mixed_has_zero_bloch_data() {
        for d in 2..=4 {
            let shape = SubsystemShape::bipartite(2, d).unwrap();
            let rho = ComplexMatrix::identity(2 * d).scaled(1.0 / (2 * d) as f64);
            let b = decompose(&rho, &shape).unwrap();
            assert!(b.max_abs_diff(&BlochRep::zero(d)) < 1e-15);
            assert!(reconstruct(&BlochRep::zero(d)).unwrap().max_abs_diff(&rho) < 1e-15);
        }
    }

    #[test]
    fn decompose_rejects_non_qubit_first_factor() {
        let shape = SubsystemShape::bipartite(3, 2).unwrap();
        assert!(matches!(
            decompose(&ComplexMatrix::identity(6), &shape),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn reconstruct_rejects_bad_sizes() {
        let mut b = BlochRep::zero(3);
        b.y.pop();
        assert!(matches!(reconstruct(&b), Err(Error::Shape(_))));
    }

    #[test]
    fn canonical_conversion_roundtrip() {
        let b = BlochRep::from_canonical(3, [0.1, 0.0, 0.2], vec![0.3; 8], vec![vec![0.15; 8]; 3]).unwrap();
        assert!((b.y[0] - 0.2).abs() < 1e-15);
        assert!((b.canonical_t()[2][7] - 0.15).abs() < 1e-15);
    }
}
