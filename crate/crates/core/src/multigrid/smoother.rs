//! Damped Jacobi and red-black Jacobi relaxation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ZERO;
use crate::operators::StencilOperator;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Smoother {
    /// `u ← u + ω D⁻¹ (b − A u)` at all points simultaneously.
    Jacobi { omega: f64 },
    /// The same update on points with even `i + j`, then on odd ones.
    RbJacobi { omega: f64 },
}

impl Smoother {
    pub fn omega(&self) -> f64 {
        match *self {
            Smoother::Jacobi { omega } | Smoother::RbJacobi { omega } => omega,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Smoother::Jacobi { .. } => "ω-Jacobi",
            Smoother::RbJacobi { .. } => "ω-RB Jacobi",
        }
    }
}

/// Inverse of the operator diagonal; fails on a zero entry.
pub fn inverse_diagonal(op: &StencilOperator) -> Result<Vec<Complex64>> {
    op.diagonal()
        .iter()
        .enumerate()
        .map(|(k, d)| if *d == ZERO { Err(Error::ZeroDiagonal(k)) } else { Ok(d.inv()) })
        .collect()
}

/// Apply `sweeps` smoothing steps to `u`.
pub fn smooth(op: &StencilOperator, u: &mut [Complex64], b: &[Complex64], smoother: Smoother, sweeps: usize) -> Result<()> {
    for v in [u.len(), b.len()] {
        if v != op.len() {
            return Err(Error::SizeMismatch { expected: op.len(), got: v });
        }
    }
    if sweeps == 0 {
        return Ok(());
    }
    let inv = inverse_diagonal(op)?;
    let mut work = vec![ZERO; op.len()];
    smooth_with(op, &inv, u, b, smoother, sweeps, &mut work);
    Ok(())
}

pub(crate) fn smooth_with(
    op: &StencilOperator,
    inv_diag: &[Complex64],
    u: &mut [Complex64],
    b: &[Complex64],
    smoother: Smoother,
    sweeps: usize,
    work: &mut [Complex64],
) {
    let (nx, ny) = (op.grid().nx(), op.grid().ny());
    match smoother {
        Smoother::Jacobi { omega } => {
            for _ in 0..sweeps {
                op.residual_into(b, u, work);
                for ((ui, ri), di) in u.iter_mut().zip(work.iter()).zip(inv_diag) {
                    *ui += omega * ri * di;
                }
            }
        }
        Smoother::RbJacobi { omega } => {
            // Points of one color only couple to the other color, so the
            // in-place update within a color is a Jacobi step.
            for _ in 0..sweeps {
                for color in 0..2 {
                    for i in 0..nx {
                        let start = (color + i) % 2;
                        for j in (start..ny).step_by(2) {
                            let k = i * ny + j;
                            let r = b[k] - op.row_action(u, i, j, nx, ny);
                            u[k] += omega * r * inv_diag[k];
                        }
                    }
                }
            }
        }
    }
}
