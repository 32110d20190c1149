//! Complex vector kernels and thin wrappers over the dense routines.
//!
//! Reductions run in index order so results are bitwise reproducible.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type DenseMatrix = DMatrix<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Conjugated inner product `Σ conj(a_i) b_i`.
pub fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    debug_assert_eq!(a.len(), b.len());
    let mut re = 0.0;
    let mut im = 0.0;
    for (x, y) in a.iter().zip(b) {
        re += x.re * y.re + x.im * y.im;
        im += x.re * y.im - x.im * y.re;
    }
    Complex64::new(re, im)
}

pub fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// `y += alpha * x`
pub fn axpy(alpha: Complex64, x: &[Complex64], y: &mut [Complex64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

pub fn zeros(n: usize) -> Vec<Complex64> {
    vec![ZERO; n]
}

/// Eigenvalues of a general complex matrix via the complex Schur form.
pub fn dense_eigenvalues(m: &DenseMatrix, cap: usize) -> Result<Vec<Complex64>> {
    if m.nrows() != m.ncols() {
        return Err(Error::SizeMismatch { expected: m.nrows(), got: m.ncols() });
    }
    if m.nrows() > cap {
        return Err(Error::DenseCapExceeded { size: m.nrows(), cap });
    }
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    let n = m.nrows();
    let budget = (40 * n).max(200);
    let schur = |a: DenseMatrix| nalgebra::linalg::Schur::try_new(a, f64::EPSILON, budget).map(|s| s.unpack().1);
    if let Some(t) = schur(m.clone()) {
        return Ok(triangular_eigenvalues(&t));
    }
    // The QR iteration occasionally cycles; a shifted copy or the transpose
    // has the same spectrum and usually converges.
    let norm = m.iter().map(|z| z.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    for angle in [0.7, 2.3] {
        let sigma = Complex64::from_polar(0.1 * norm, angle);
        let shifted = m - DenseMatrix::identity(n, n) * sigma;
        if let Some(t) = schur(shifted) {
            return Ok(triangular_eigenvalues(&t).into_iter().map(|z| z + sigma).collect());
        }
    }
    schur(m.transpose()).map(|t| triangular_eigenvalues(&t)).ok_or(Error::EigenNoConvergence)
}

/// Diagonal of a Schur factor, resolving any 2×2 block left undeflated.
fn triangular_eigenvalues(t: &DenseMatrix) -> Vec<Complex64> {
    let n = t.nrows();
    let mut out = Vec::with_capacity(n);
    let mut k = 0;
    while k < n {
        let sub = if k + 1 < n { t[(k + 1, k)] } else { ZERO };
        let scale = t[(k, k)].norm() + if k + 1 < n { t[(k + 1, k + 1)].norm() } else { 0.0 };
        if k + 1 < n && sub.norm() > f64::EPSILON * scale.max(f64::MIN_POSITIVE) {
            let (a, b, c, d) = (t[(k, k)], t[(k, k + 1)], sub, t[(k + 1, k + 1)]);
            let half_tr = (a + d) * 0.5;
            let disc = ((a - d) * 0.5 * ((a - d) * 0.5) + b * c).sqrt();
            out.push(half_tr + disc);
            out.push(half_tr - disc);
            k += 2;
        } else {
            out.push(t[(k, k)]);
            k += 1;
        }
    }
    out
}

/// Dense LU factorization with partial pivoting.
#[derive(Debug, Clone)]
pub struct DenseLu {
    lu: nalgebra::linalg::LU<Complex64, nalgebra::Dyn, nalgebra::Dyn>,
}

impl DenseLu {
    pub fn new(m: DenseMatrix) -> Result<Self> {
        let lu = m.lu();
        if !lu.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(Self { lu })
    }

    pub fn dim(&self) -> usize {
        self.lu.l().nrows()
    }

    pub fn solve(&self, b: &[Complex64]) -> Result<Vec<Complex64>> {
        let rhs = nalgebra::DVector::from_column_slice(b);
        let x = self.lu.solve(&rhs).ok_or(Error::SingularMatrix)?;
        Ok(x.iter().copied().collect())
    }

    pub fn solve_matrix(&self, b: &DenseMatrix) -> Result<DenseMatrix> {
        self.lu.solve(b).ok_or(Error::SingularMatrix)
    }
}
