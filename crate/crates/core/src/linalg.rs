//! Dense complex matrix kernel.
//!
//! Everything here works on row-major tensor indices: for a shape `[d0, d1, ..]`
//! the first subsystem is the most significant digit of a basis index. All
//! matrices in this crate are small (at most a few hundred rows), so storage is
//! always dense.

use std::ops::{Add, Index, Mul, Sub};

use nalgebra::{DMatrix, SymmetricEigen};
pub use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Max-norm tolerance for accepting a matrix as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix(DMatrix<C64>);

impl ComplexMatrix {
    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<C64>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self(DMatrix::from_row_slice(rows, cols, &entries)))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        Self(DMatrix::from_fn(rows, cols, f))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self(DMatrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                C64::new(diag[i], 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        })
    }

    /// Real matrix given as rows.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| C64::new(v, 0.0)))
            .collect();
        Self::from_row_major(r, c, entries)
    }

    /// The projector `|v⟩⟨v|` for an (unnormalized) ket `v`.
    pub fn projector(ket: &[C64]) -> Self {
        let n = ket.len();
        Self::from_fn(n, n, |i, j| ket[i] * ket[j].conj())
    }

    pub fn from_nalgebra(m: DMatrix<C64>) -> Self {
        Self(m)
    }

    pub fn as_nalgebra(&self) -> &DMatrix<C64> {
        &self.0
    }

    pub fn into_nalgebra(self) -> DMatrix<C64> {
        self.0
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn to_row_major(&self) -> Vec<C64> {
        let mut out = Vec::with_capacity(self.rows() * self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.push(self.0[(i, j)]);
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self(self.0.map(|z| z * s))
    }

    /// Largest absolute entry-wise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.0.shape(), other.0.shape(), "max_abs_diff on different shapes");
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |m_ij - conj(m_ji)|`; zero for an exactly Hermitian matrix.
    pub fn hermiticity_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.0[(i, j)] - self.0[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// `(m + m†) / 2`.
    pub fn symmetrized(&self) -> Self {
        Self((&self.0 + self.0.adjoint()) * C64::new(0.5, 0.0))
    }

    /// Sum of squared moduli of all entries, i.e. `Tr(m† m)`.
    pub fn frobenius_sq(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, idx: (usize, usize)) -> &C64 {
        &self.0[idx]
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix(&self.0 $op &rhs.0)
            }
        }
        impl $tr<ComplexMatrix> for ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: ComplexMatrix) -> ComplexMatrix {
                ComplexMatrix(self.0 $op rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

/// Tensor factorization of a Hilbert space, e.g. `[2, 3]` or `[2, 3, 2, 3, 2, 3]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemShape {
    dims: Vec<usize>,
}

impl SubsystemShape {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Shape("empty subsystem list".into()));
        }
        if let Some(d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::Shape(format!("subsystem dimension {d} < 2 in {dims:?}")));
        }
        Ok(Self { dims })
    }

    pub fn bipartite(a: usize, b: usize) -> Result<Self> {
        Self::new(vec![a, b])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    /// Returns `(m, n)` for a two-part shape.
    pub fn as_bipartite(&self) -> Result<(usize, usize)> {
        match self.dims.as_slice() {
            [a, b] => Ok((*a, *b)),
            _ => Err(Error::Shape(format!("expected a bipartite shape, got {:?}", self.dims))),
        }
    }

    /// Ensures `m` is square with side equal to the product of the dims.
    pub fn check(&self, m: &ComplexMatrix) -> Result<()> {
        if !m.is_square() || m.rows() != self.total() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix does not match subsystem shape {:?} (dimension {})",
                m.rows(),
                m.cols(),
                self.dims,
                self.total()
            )));
        }
        Ok(())
    }

    /// Stride of subsystem `k` in a row-major basis index.
    fn stride(&self, k: usize) -> usize {
        self.dims[k + 1..].iter().product()
    }

    fn digit(&self, index: usize, k: usize) -> usize {
        (index / self.stride(k)) % self.dims[k]
    }
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix(a.0.kronecker(&b.0))
}

/// Kronecker product of a list of factors, left to right.
pub fn kron_all(factors: &[&ComplexMatrix]) -> ComplexMatrix {
    factors.iter().fold(ComplexMatrix::identity(1), |acc, f| kron(&acc, f))
}

fn validate_subset(shape: &SubsystemShape, keep: &[usize]) -> Result<Vec<usize>> {
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if keep.is_empty() {
        return Err(Error::Shape("keep set is empty".into()));
    }
    if let Some(&k) = keep.iter().find(|&&k| k >= shape.len()) {
        return Err(Error::Shape(format!(
            "subsystem index {k} out of range for shape {:?}",
            shape.dims()
        )));
    }
    Ok(keep)
}

/// Reduced state on the subsystems in `keep`, which come out in ascending order.
pub fn partial_trace(rho: &ComplexMatrix, shape: &SubsystemShape, keep: &[usize]) -> Result<ComplexMatrix> {
    shape.check(rho)?;
    let keep = validate_subset(shape, keep)?;
    let traced: Vec<usize> = (0..shape.len()).filter(|k| !keep.contains(k)).collect();
    let kept_dim: usize = keep.iter().map(|&k| shape.dims[k]).product();
    let traced_dim: usize = traced.iter().map(|&k| shape.dims[k]).product();

    let compose = |full: usize, parts: &[usize]| {
        parts
            .iter()
            .fold(0, |acc, &k| acc * shape.dims[k] + shape.digit(full, k))
    };

    // Group full basis indices by their traced-out digits; only pairs within a
    // group contribute to the reduced matrix.
    let mut groups: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(kept_dim); traced_dim];
    for full in 0..shape.total() {
        groups[compose(full, &traced)].push((compose(full, &keep), full));
    }

    let mut out = DMatrix::<C64>::zeros(kept_dim, kept_dim);
    for group in &groups {
        for &(k1, f1) in group {
            for &(k2, f2) in group {
                out[(k1, k2)] += rho.0[(f1, f2)];
            }
        }
    }
    Ok(ComplexMatrix(out))
}

/// Reorders tensor factors: subsystem `k` of the result is subsystem `order[k]` of `rho`.
pub fn permute_subsystems(rho: &ComplexMatrix, shape: &SubsystemShape, order: &[usize]) -> Result<ComplexMatrix> {
    shape.check(rho)?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..shape.len()).collect::<Vec<_>>() {
        return Err(Error::Shape(format!(
            "{order:?} is not a permutation of the {} subsystems",
            shape.len()
        )));
    }
    let n = shape.total();
    let map: Vec<usize> = (0..n)
        .map(|old| {
            order
                .iter()
                .fold(0, |acc, &k| acc * shape.dims[k] + shape.digit(old, k))
        })
        .collect();
    let mut out = DMatrix::<C64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(map[i], map[j])] = rho.0[(i, j)];
        }
    }
    Ok(ComplexMatrix(out))
}

/// Partial transpose on subsystem `which`: the `which` digits of row and column swap.
pub fn partial_transpose(rho: &ComplexMatrix, shape: &SubsystemShape, which: usize) -> Result<ComplexMatrix> {
    shape.check(rho)?;
    if which >= shape.len() {
        return Err(Error::Shape(format!(
            "subsystem index {which} out of range for shape {:?}",
            shape.dims()
        )));
    }
    let s = shape.stride(which);
    let n = shape.total();
    Ok(ComplexMatrix::from_fn(n, n, |i, j| {
        let di = shape.digit(i, which);
        let dj = shape.digit(j, which);
        rho.0[(i - di * s + dj * s, j - dj * s + di * s)]
    }))
}

#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Real eigenvalues, descending.
    pub values: Vec<f64>,
    /// Eigenvectors as columns, in the order of `values`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let lambda = ComplexMatrix::from_real_diagonal(&self.values);
        &(&self.vectors * &lambda) * &self.vectors.adjoint()
    }
}

fn require_hermitian(m: &ComplexMatrix) -> Result<()> {
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::Contract(format!(
            "matrix is not Hermitian (defect {defect:.3e} > {HERMITIAN_TOL:e})"
        )));
    }
    Ok(())
}

pub fn eig_hermitian(m: &ComplexMatrix) -> Result<HermitianEigen> {
    require_hermitian(m)?;
    let eig = SymmetricEigen::new(m.symmetrized().0);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let n = m.rows();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues only, descending.
pub fn eigvals_hermitian(m: &ComplexMatrix) -> Result<Vec<f64>> {
    require_hermitian(m)?;
    let mut values: Vec<f64> = m.symmetrized().0.symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

pub fn min_eigenvalue(m: &ComplexMatrix) -> Result<f64> {
    Ok(*eigvals_hermitian(m)?.last().expect("non-empty matrix"))
}

/// Singular values, descending.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let mut sv: Vec<f64> = m.0.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

pub fn trace_norm(m: &ComplexMatrix) -> f64 {
    singular_values(m).iter().sum()
}

/// Ky-Fan norm (sum of all singular values). Same number as [`trace_norm`].
pub fn ky_fan_norm(m: &ComplexMatrix) -> f64 {
    trace_norm(m)
}

/// Ky-Fan norm of a real matrix (used for Bloch correlation matrices).
pub fn real_ky_fan_norm(m: &DMatrix<f64>) -> f64 {
    m.singular_values().iter().sum()
}

/// Realignment `|i⟩⟨j| ⊗ |k⟩⟨l| ↦ |i⟩⟨k| ⊗ |j⟩⟨l|` of an `m ⊗ n` operator; the
/// result is `m² × n²`.
pub fn realign(rho: &ComplexMatrix, shape: &SubsystemShape) -> Result<ComplexMatrix> {
    let (m, n) = shape.as_bipartite()?;
    shape.check(rho)?;
    Ok(ComplexMatrix::from_fn(m * m, n * n, |row, col| {
        let (i, j) = (row / m, row % m);
        let (k, l) = (col / n, col % n);
        rho.0[(i * n + k, j * n + l)]
    }))
}

/// Inverse of [`realign`]: takes an `m² × n²` matrix back to an `mn × mn` one.
pub fn unrealign(r: &ComplexMatrix, m: usize, n: usize) -> Result<ComplexMatrix> {
    if r.rows() != m * m || r.cols() != n * n {
        return Err(Error::Dimension(format!(
            "{}x{} matrix is not a realigned {m}x{n} operator",
            r.rows(),
            r.cols()
        )));
    }
    Ok(ComplexMatrix::from_fn(m * n, m * n, |row, col| {
        let (i, k) = (row / n, row % n);
        let (j, l) = (col / n, col % n);
        r.0[(i * m + j, k * n + l)]
    }))
}

/// `Tr(a b)` without forming the product.
pub fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> C64 {
    assert!(
        a.rows() == b.cols() && a.cols() == b.rows(),
        "trace_product shape mismatch"
    );
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            acc += a.0[(i, j)] * b.0[(j, i)];
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn pauli_x() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()
    }

    fn pauli_z() -> ComplexMatrix {
        ComplexMatrix::from_real_diagonal(&[1.0, -1.0])
    }

    fn bell_phi_plus() -> ComplexMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        ComplexMatrix::projector(&[c(s), c(0.0), c(0.0), c(s)])
    }

    #[test]
    fn row_major_roundtrip_and_length_check() {
        let m = ComplexMatrix::from_row_major(2, 3, (0..6).map(|v| c(v as f64)).collect()).unwrap();
        assert_eq!(m[(1, 0)], c(3.0));
        assert_eq!(m.to_row_major().len(), 6);
        assert!(ComplexMatrix::from_row_major(2, 2, vec![c(1.0)]).is_err());
    }

    #[test]
    fn kron_identities() {
        let i6 = kron(&ComplexMatrix::identity(2), &ComplexMatrix::identity(3));
        assert_eq!(i6.max_abs_diff(&ComplexMatrix::identity(6)), 0.0);
        let zi = kron(&pauli_z(), &ComplexMatrix::identity(3));
        let expect = ComplexMatrix::from_real_diagonal(&[1.0, 1.0, 1.0, -1.0, -1.0, -1.0]);
        assert_eq!(zi.max_abs_diff(&expect), 0.0);
    }

    #[test]
    fn kron_pauli_x_gell_mann_element_oracle() {
        let g1 =
            ComplexMatrix::from_real_rows(&[vec![0.0, 1.0, 0.0], vec![1.0, 0.0, 0.0], vec![0.0, 0.0, 0.0]]).unwrap();
        let k = kron(&pauli_x(), &g1);
        for r in 0..6 {
            for s in 0..6 {
                let expect = pauli_x()[(r / 3, s / 3)] * g1[(r % 3, s % 3)];
                assert_eq!(k[(r, s)], expect);
            }
        }
        // G1 sits in the two off-diagonal 3x3 blocks only.
        for r in 0..3 {
            for s in 0..3 {
                assert_eq!(k[(r, s)], c(0.0));
                assert_eq!(k[(r + 3, s + 3)], c(0.0));
                assert_eq!(k[(r, s + 3)], g1[(r, s)]);
            }
        }
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let shape = SubsystemShape::bipartite(2, 2).unwrap();
        let a = partial_trace(&bell_phi_plus(), &shape, &[0]).unwrap();
        assert!(a.max_abs_diff(&ComplexMatrix::identity(2).scaled(0.5)) < 1e-15);
    }

    #[test]
    fn product_state_marginal() {
        let ra = ComplexMatrix::from_real_rows(&[vec![0.7, 0.2], vec![0.2, 0.3]]).unwrap();
        let rb = ComplexMatrix::from_real_diagonal(&[0.5, 0.25, 0.25]);
        let shape = SubsystemShape::bipartite(2, 3).unwrap();
        let rho = kron(&ra, &rb);
        assert!(partial_trace(&rho, &shape, &[0]).unwrap().max_abs_diff(&ra) < 1e-15);
        assert!(partial_trace(&rho, &shape, &[1]).unwrap().max_abs_diff(&rb) < 1e-15);
    }

    #[test]
    fn partial_trace_rejects_bad_input() {
        let shape = SubsystemShape::bipartite(2, 3).unwrap();
        assert!(matches!(
            partial_trace(&ComplexMatrix::identity(4), &shape, &[0]),
            Err(Error::Dimension(_))
        ));
        assert!(partial_trace(&ComplexMatrix::identity(6), &shape, &[]).is_err());
        assert!(partial_trace(&ComplexMatrix::identity(6), &shape, &[2]).is_err());
    }

    #[test]
    fn bell_partial_transpose_min_eigenvalue() {
        let shape = SubsystemShape::bipartite(2, 2).unwrap();
        let pt = partial_transpose(&bell_phi_plus(), &shape, 1).unwrap();
        assert!((min_eigenvalue(&pt).unwrap() + 0.5).abs() < 1e-14);
        let twice = partial_transpose(&pt, &shape, 1).unwrap();
        assert_eq!(twice, bell_phi_plus());
    }

    #[test]
    fn partial_transpose_of_product_state() {
        let ra = ComplexMatrix::from_real_diagonal(&[0.6, 0.4]);
        let rb = ComplexMatrix::from_fn(3, 3, |i, j| {
            if i == j {
                c(1.0 / 3.0)
            } else if i < j {
                C64::new(0.0, 0.1)
            } else {
                C64::new(0.0, -0.1)
            }
        });
        let shape = SubsystemShape::bipartite(2, 3).unwrap();
        let pt = partial_transpose(&kron(&ra, &rb), &shape, 1).unwrap();
        assert!(pt.max_abs_diff(&kron(&ra, &rb.transpose())) < 1e-16);
        assert!(min_eigenvalue(&pt).unwrap() > -1e-12);
    }

    #[test]
    fn eig_of_maximally_mixed() {
        let e = eig_hermitian(&ComplexMatrix::identity(4).scaled(0.25)).unwrap();
        for v in e.values {
            assert!((v - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(eig_hermitian(&m), Err(Error::Contract(_))));
    }

    #[test]
    fn eig_is_descending_and_reconstructs() {
        let m = ComplexMatrix::from_fn(5, 5, |i, j| {
            C64::new((i + 2 * j) as f64 * 0.1 + (i * j) as f64 * 0.05, i as f64 - j as f64)
        });
        let h = &m + &m.adjoint();
        let e = eig_hermitian(&h).unwrap();
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        assert!(e.reconstruct().max_abs_diff(&h) < 1e-10);
    }

    #[test]
    fn norms() {
        assert!((trace_norm(&ComplexMatrix::identity(3)) - 3.0).abs() < 1e-14);
        assert!((ky_fan_norm(&ComplexMatrix::from_real_diagonal(&[3.0, -4.0])) - 7.0).abs() < 1e-14);
        let t = ComplexMatrix::from_real_diagonal(&[1.0 / 3.0; 3]);
        assert!((ky_fan_norm(&t) - 1.0).abs() < 1e-14);
        assert!((trace_norm(&bell_phi_plus()) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn realignment_values() {
        let shape = SubsystemShape::bipartite(2, 2).unwrap();
        let r = realign(&bell_phi_plus(), &shape).unwrap();
        assert!((trace_norm(&r) - 2.0).abs() < 1e-13);
        let mixed = realign(&ComplexMatrix::identity(4).scaled(0.25), &shape).unwrap();
        assert!((trace_norm(&mixed) - 0.5).abs() < 1e-14);
        assert!(realign(
            &ComplexMatrix::identity(8),
            &SubsystemShape::new(vec![2, 2, 2]).unwrap()
        )
        .is_err());
    }

    #[test]
    fn realign_non_square_bipartition() {
        let shape = SubsystemShape::bipartite(2, 3).unwrap();
        let rho = ComplexMatrix::from_fn(6, 6, |i, j| C64::new((i * 6 + j) as f64, 0.5 * i as f64));
        let r = realign(&rho, &shape).unwrap();
        assert_eq!((r.rows(), r.cols()), (4, 9));
        assert_eq!(unrealign(&r, 2, 3).unwrap(), rho);
    }

    #[test]
    fn permute_swaps_factors() {
        let a = ComplexMatrix::from_real_diagonal(&[0.9, 0.1]);
        let b = ComplexMatrix::from_real_diagonal(&[0.5, 0.3, 0.2]);
        let shape = SubsystemShape::bipartite(2, 3).unwrap();
        let swapped = permute_subsystems(&kron(&a, &b), &shape, &[1, 0]).unwrap();
        assert!(swapped.max_abs_diff(&kron(&b, &a)) < 1e-16);
        assert!(permute_subsystems(&kron(&a, &b), &shape, &[0, 0]).is_err());
    }

    #[test]
    fn shape_validation() {
        assert!(SubsystemShape::new(vec![2, 1]).is_err());
        assert!(SubsystemShape::new(vec![]).is_err());
        assert_eq!(SubsystemShape::new(vec![2, 3, 2, 3, 2, 3]).unwrap().total(), 216);
    }
}
