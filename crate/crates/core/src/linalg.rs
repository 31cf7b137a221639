//! Dense complex linear algebra: Hermitian eigendecomposition, null-space
//! projections, and subspace comparison.
//!
//! Everything downstream (lattice operations, truth values, spectral
//! resolutions) reduces to these three primitives, so they are kept small,
//! deterministic, and exact at a declared tolerance.

use num_complex::Complex;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

pub type Complex64 = Complex<f64>;

/// Absolute floor below which an eigenvalue is treated as exactly zero,
/// regardless of the relative cutoff.
pub const RANK_CUTOFF_FLOOR: f64 = 1e-12;

const MAX_JACOBI_SWEEPS: usize = 100;

/// Numerical tolerances used by every comparison in the crate.
///
/// `eps_rank` is the *relative* eigenvalue cutoff for rank decisions
/// (scaled by the largest eigenvalue of the matrix at hand), `eps_compare`
/// bounds the Frobenius distance under which two subspaces are considered
/// equal. They must satisfy `0 < eps_rank < eps_compare < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps_rank: f64,
    pub eps_compare: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_rank: 1e-9,
            eps_compare: 1e-8,
        }
    }
}

impl Tolerance {
    pub fn new(eps_rank: f64, eps_compare: f64) -> Result<Self> {
        let t = Tolerance {
            eps_rank,
            eps_compare,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps_rank > 0.0 && self.eps_rank < self.eps_compare && self.eps_compare < 1.0) {
            return Err(Error::InvalidTolerance(format!(
                "require 0 < eps_rank < eps_compare < 1, got eps_rank={:e}, eps_compare={:e}",
                self.eps_rank, self.eps_compare
            )));
        }
        Ok(())
    }
}

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl std::fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                let z = self.get(r, c);
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Build from row-major data; length must equal `rows * cols`.
    pub fn from_data(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "matrix data length {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput(
                "matrix entries must be finite".to_string(),
            ));
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    /// Build a square matrix from real row slices (imaginary parts zero).
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n, rows.first().map_or(0, |r| r.len()));
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, Complex64::new(x, 0.0));
            }
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &x) in values.iter().enumerate() {
            m.set(i, i, Complex64::new(x, 0.0));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: Complex64) {
        self.data[r * self.cols + c] = value;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius distance `‖A − B‖_F`.
    pub fn distance(&self, other: &ComplexMatrix) -> f64 {
        debug_assert_eq!(self.rows, other.rows);
        debug_assert_eq!(self.cols, other.cols);
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `‖M − M†‖_F`, the Hermitian symmetry residual.
    pub fn hermitian_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut sum = 0.0;
        for r in 0..self.rows {
            for c in 0..self.cols {
                sum += (self.get(r, c) - self.get(c, r).conj()).norm_sqr();
            }
        }
        sum.sqrt()
    }

    /// `(M + M†)/2`; used to scrub tolerated asymmetry before eigensolving.
    pub fn hermitian_part(&self) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, (self.get(r, c) + self.get(c, r).conj()) * 0.5);
            }
        }
        out
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Apply to a vector: `M v`.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "vector length must match columns");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &ComplexMatrix) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        out.set(
                            r1 * other.rows + r2,
                            c1 * other.cols + c2,
                            a * other.get(r2, c2),
                        );
                    }
                }
            }
        }
        out
    }

    /// Embed into the top-left block of a `dim x dim` zero matrix.
    pub fn embed_top_left(&self, dim: usize) -> Self {
        assert!(dim >= self.rows && dim >= self.cols);
        let mut out = Self::zeros(dim, dim);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        out
    }

    /// Top-left `dim x dim` submatrix.
    pub fn top_left(&self, dim: usize) -> Self {
        assert!(dim <= self.rows && dim <= self.cols);
        let mut out = Self::zeros(dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                out.set(r, c, self.get(r, c));
            }
        }
        out
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for r in 0..self.rows {
            for c in 0..self.cols {
                if r != c {
                    sum += self.get(r, c).norm_sqr();
                }
            }
        }
        sum.sqrt()
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.rows, rhs.rows);
        assert_eq!(self.cols, rhs.cols);
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.rows, rhs.rows);
        assert_eq!(self.cols, rhs.cols);
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

/// A unit vector in `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    dim: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Validates `|‖ψ‖ − 1| ≤ 1e-9`.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::NotNormalized { norm });
        }
        Ok(StateVector {
            dim: amplitudes.len(),
            amplitudes,
        })
    }

    /// Normalize an arbitrary nonzero vector into a state.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-300 {
            return Err(Error::NotNormalized { norm });
        }
        Ok(StateVector {
            dim: amplitudes.len(),
            amplitudes: amplitudes.into_iter().map(|z| z / norm).collect(),
        })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim);
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        StateVector { dim, amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }
}

/// Inner product `⟨a, b⟩` (conjugate-linear in the first argument).
pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

pub fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Result of a Hermitian eigendecomposition: `M = V diag(λ) V†` with
/// eigenvalues ascending and eigenvectors as the columns of `V`.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEig {
    /// Column `k` of the eigenvector matrix.
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        (0..self.eigenvectors.rows())
            .map(|r| self.eigenvectors.get(r, k))
            .collect()
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Each rotation phase-aligns the targeted off-diagonal entry and applies
/// the classical symmetric Jacobi rotation, which preserves Hermiticity
/// exactly. Deterministic for a given input.
pub fn hermitian_eig(m: &ComplexMatrix, tol: &Tolerance) -> Result<HermitianEig> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let residual = m.hermitian_residual();
    if residual > tol.eps_compare {
        return Err(Error::NotHermitian { residual });
    }
    let d = m.rows();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(d);
    if d <= 1 {
        let eigenvalues = (0..d).map(|i| a.get(i, i).re).collect();
        return Ok(HermitianEig {
            eigenvalues,
            eigenvectors: v,
        });
    }

    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let target = 1e-14 * scale;
    let skip = target / (d * d) as f64;

    for _sweep in 0..MAX_JACOBI_SWEEPS {
        if a.off_diagonal_norm() <= target {
            break;
        }
        for p in 0..d {
            for q in (p + 1)..d {
                let apq = a.get(p, q);
                let r = apq.norm();
                if r <= skip {
                    continue;
                }
                // Phase that makes the (p,q) entry real and positive.
                let phase = apq / r;
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let cp = phase * c; // c e^{iφ}
                let sp = phase * s; // s e^{iφ}

                // A ← U† A U with U the identity outside rows/columns p,q.
                for i in 0..d {
                    let aip = a.get(i, p);
                    let aiq = a.get(i, q);
                    a.set(i, p, aip * cp - aiq * s);
                    a.set(i, q, aip * sp + aiq * c);
                }
                for i in 0..d {
                    let api = a.get(p, i);
                    let aqi = a.get(q, i);
                    a.set(p, i, api * cp.conj() - aqi * s);
                    a.set(q, i, api * sp.conj() + aqi * c);
                }
                a.set(p, q, Complex64::new(0.0, 0.0));
                a.set(q, p, Complex64::new(0.0, 0.0));
                a.set(p, p, Complex64::new(a.get(p, p).re, 0.0));
                a.set(q, q, Complex64::new(a.get(q, q).re, 0.0));

                for i in 0..d {
                    let vip = v.get(i, p);
                    let viq = v.get(i, q);
                    v.set(i, p, vip * cp - viq * s);
                    v.set(i, q, vip * sp + viq * c);
                }
            }
        }
    }

    // Sort eigenpairs ascending by eigenvalue.
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let mut vectors = ComplexMatrix::zeros(d, d);
    for (new_col, &old_col) in order.iter().enumerate() {
        for rix in 0..d {
            vectors.set(rix, new_col, v.get(rix, old_col));
        }
    }
    Ok(HermitianEig {
        eigenvalues,
        eigenvectors: vectors,
    })
}

/// Orthogonal projection onto the (numerical) null space of a Hermitian
/// positive-semidefinite matrix.
///
/// Eigenvalues at or below `eps_rank × λ_max` (with absolute floor
/// [`RANK_CUTOFF_FLOOR`]) count as zero. A matrix that is zero to within
/// the floor yields the identity.
pub fn nullspace_projection(m: &ComplexMatrix, tol: &Tolerance) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(m, tol)?;
    let d = m.rows();
    let lambda_max = eig
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, &x| acc.max(x.abs()));
    if lambda_max <= RANK_CUTOFF_FLOOR {
        return Ok(ComplexMatrix::identity(d));
    }
    let cutoff = (tol.eps_rank * lambda_max).max(RANK_CUTOFF_FLOOR);
    let mut proj = ComplexMatrix::zeros(d, d);
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        if lambda.abs() <= cutoff {
            let col = eig.eigenvector(k);
            for r in 0..d {
                for c in 0..d {
                    let v = proj.get(r, c) + col[r] * col[c].conj();
                    proj.set(r, c, v);
                }
            }
        }
    }
    Ok(proj)
}

/// Subspace equality at tolerance: `‖P − Q‖_F ≤ eps_compare`.
pub fn subspace_equal(p: &ComplexMatrix, q: &ComplexMatrix, tol: &Tolerance) -> Result<bool> {
    if p.rows() != q.rows() || p.cols() != q.cols() {
        return Err(Error::DimMismatch {
            left: p.rows(),
            right: q.rows(),
        });
    }
    Ok(p.distance(q) <= tol.eps_compare)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eig_diagonal_sorts_ascending() {
        let m = ComplexMatrix::diagonal(&[3.0, 1.0, 2.0]);
        let eig = hermitian_eig(&m, &Tolerance::default()).unwrap();
        assert_eq!(eig.eigenvalues.len(), 3);
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((eig.eigenvalues[1] - 2.0).abs() < 1e-12);
        assert!((eig.eigenvalues[2] - 3.0).abs() < 1e-12);
        // Eigenvectors of a diagonal matrix are (signed) basis vectors.
        for k in 0..3 {
            let v = eig.eigenvector(k);
            let nonzero = v.iter().filter(|z| z.norm() > 1e-9).count();
            assert_eq!(nonzero, 1);
        }
    }

    #[test]
    fn eig_identity() {
        let m = ComplexMatrix::identity(4);
        let eig = hermitian_eig(&m, &Tolerance::default()).unwrap();
        assert!(eig.eigenvalues.iter().all(|&x| (x - 1.0).abs() < 1e-12));
    }

    #[test]
    fn eig_pauli_x_vectors_satisfy_eigen_equation() {
        let mut m = ComplexMatrix::zeros(2, 2);
        m.set(0, 1, c(1.0, 0.0));
        m.set(1, 0, c(1.0, 0.0));
        let eig = hermitian_eig(&m, &Tolerance::default()).unwrap();
        assert!((eig.eigenvalues[0] + 1.0).abs() < 1e-12);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-12);
        for k in 0..2 {
            let v = eig.eigenvector(k);
            let mv = m.apply(&v);
            for i in 0..2 {
                let expect = v[i] * eig.eigenvalues[k];
                assert!((mv[i] - expect).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn eig_rejects_non_hermitian_and_non_square() {
        let mut m = ComplexMatrix::zeros(2, 2);
        m.set(0, 1, c(1.0, 0.0));
        assert!(matches!(
            hermitian_eig(&m, &Tolerance::default()),
            Err(Error::NotHermitian { .. })
        ));
        let rect = ComplexMatrix::zeros(2, 3);
        assert!(matches!(
            hermitian_eig(&rect, &Tolerance::default()),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn eig_reconstructs_complex_hermitian() {
        // Fixed complex Hermitian 3x3.
        let mut m = ComplexMatrix::zeros(3, 3);
        m.set(0, 0, c(2.0, 0.0));
        m.set(1, 1, c(-1.0, 0.0));
        m.set(2, 2, c(0.5, 0.0));
        m.set(0, 1, c(1.0, 2.0));
        m.set(1, 0, c(1.0, -2.0));
        m.set(0, 2, c(0.0, -1.0));
        m.set(2, 0, c(0.0, 1.0));
        m.set(1, 2, c(3.0, 0.25));
        m.set(2, 1, c(3.0, -0.25));
        let eig = hermitian_eig(&m, &Tolerance::default()).unwrap();
        let d = 3;
        let mut recon = ComplexMatrix::zeros(d, d);
        for k in 0..d {
            let v = eig.eigenvector(k);
            for r in 0..d {
                for cix in 0..d {
                    let val = recon.get(r, cix) + v[r] * v[cix].conj() * eig.eigenvalues[k];
                    recon.set(r, cix, val);
                }
            }
        }
        assert!(m.distance(&recon) < 1e-12);
        // V unitary.
        let v = &eig.eigenvectors;
        let vtv = &v.adjoint() * v;
        assert!(vtv.distance(&ComplexMatrix::identity(d)) < 1e-12);
    }

    #[test]
    fn nullspace_of_diagonal() {
        let m = ComplexMatrix::diagonal(&[0.0, 0.0, 5.0]);
        let p = nullspace_projection(&m, &Tolerance::default()).unwrap();
        assert!(p.distance(&ComplexMatrix::diagonal(&[1.0, 1.0, 0.0])) < 1e-12);
    }

    #[test]
    fn nullspace_of_zero_is_identity() {
        let m = ComplexMatrix::zeros(3, 3);
        let p = nullspace_projection(&m, &Tolerance::default()).unwrap();
        assert!(p.distance(&ComplexMatrix::identity(3)) < 1e-12);
    }

    #[test]
    fn nullspace_of_complement_sum() {
        // (I−P)+(I−Q) with P=Q=diag(1,0): null space is the e1 axis.
        let p = ComplexMatrix::diagonal(&[1.0, 0.0]);
        let i = ComplexMatrix::identity(2);
        let m = &(&i - &p) + &(&i - &p);
        let out = nullspace_projection(&m, &Tolerance::default()).unwrap();
        assert!(out.distance(&ComplexMatrix::diagonal(&[1.0, 0.0])) < 1e-12);
    }

    #[test]
    fn subspace_equal_basics() {
        let tol = Tolerance::default();
        let p = ComplexMatrix::diagonal(&[1.0, 0.0]);
        let q = ComplexMatrix::diagonal(&[0.0, 1.0]);
        assert!(subspace_equal(&p, &p, &tol).unwrap());
        assert!(!subspace_equal(&p, &q, &tol).unwrap());
        let r = ComplexMatrix::diagonal(&[1.0, 0.0, 0.0]);
        assert!(matches!(
            subspace_equal(&p, &r, &tol),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn state_vector_validation() {
        assert!(StateVector::new(vec![c(1.0, 0.0), c(0.0, 0.0)]).is_ok());
        assert!(matches!(
            StateVector::new(vec![c(1.0, 0.0), c(1.0, 0.0)]),
            Err(Error::NotNormalized { .. })
        ));
        let s = StateVector::normalized(vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((vec_norm(s.amplitudes()) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tolerance_ordering_enforced() {
        assert!(Tolerance::new(1e-9, 1e-8).is_ok());
        assert!(Tolerance::new(1e-8, 1e-9).is_err());
        assert!(Tolerance::new(0.0, 1e-8).is_err());
    }
}
