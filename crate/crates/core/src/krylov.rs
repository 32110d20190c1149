//! Right-preconditioned Bi-CGSTAB in complex arithmetic.

use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, dot, norm, ONE, ZERO};
use crate::multigrid::{Hierarchy, MgConfig, MgStatus};
use crate::operators::StencilOperator;

pub trait LinearOperator {
    fn dim(&self) -> usize;
    fn apply_into(&self, x: &[Complex64], y: &mut [Complex64]);
}

impl LinearOperator for StencilOperator {
    fn dim(&self) -> usize {
        self.len()
    }

    fn apply_into(&self, x: &[Complex64], y: &mut [Complex64]) {
        StencilOperator::apply_into(self, x, y)
    }
}

/// Approximate inverse `z ≈ M⁻¹ r`. Must be the same linear map on every
/// call.
pub trait Preconditioner {
    fn apply_into(&self, r: &[Complex64], z: &mut [Complex64]) -> Result<()>;
}

pub struct Identity;

impl Preconditioner for Identity {
    fn apply_into(&self, r: &[Complex64], z: &mut [Complex64]) -> Result<()> {
        z.copy_from_slice(r);
        Ok(())
    }
}

/// One multigrid cycle from a zero initial guess.
pub struct MgPreconditioner<'a> {
    pub hierarchy: &'a Hierarchy,
    pub config: MgConfig,
}

impl Preconditioner for MgPreconditioner<'_> {
    fn apply_into(&self, r: &[Complex64], z: &mut [Complex64]) -> Result<()> {
        z.fill(ZERO);
        self.hierarchy.mg_cycle(r, z, &self.config)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WarmStart {
    /// Relative residual of the multigrid solve providing `x0`.
    pub inner_tol: f64,
}

fn default_tol() -> f64 {
    1e-6
}
fn default_max_iter() -> usize {
    2000
}

/// Norm the stopping test divides by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidualReference {
    /// `‖b - A x‖ / ‖b‖`
    #[default]
    Rhs,
    /// `‖b - A x‖ / ‖b - A x0‖`; differs from `Rhs` only for a nonzero `x0`.
    InitialResidual,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KrylovConfig {
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default = "default_max_iter")]
    pub max_iter: usize,
    #[serde(default)]
    pub warm_start: Option<WarmStart>,
    #[serde(default)]
    pub residual_reference: ResidualReference,
}

impl Default for KrylovConfig {
    fn default() -> Self {
        Self {
            tol: default_tol(),
            max_iter: default_max_iter(),
            warm_start: None,
            residual_reference: ResidualReference::Rhs,
        }
    }
}

impl KrylovConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::InvalidSpec("Krylov tolerance must be positive".into()));
        }
        if let Some(w) = self.warm_start {
            if !(w.inner_tol > self.tol) {
                return Err(Error::InvalidSpec("warm start tolerance must exceed the outer tolerance".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Converged,
    MaxIterations,
    Breakdown,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub iterations: usize,
    pub status: SolveStatus,
    /// `‖b - A x_i‖` for `i = 0..=iterations`.
    pub residual_history: Vec<f64>,
    /// Norms of the recurrence residual, same indexing.
    pub recursive_history: Vec<f64>,
    /// Seconds since the start of the solve at the end of each iteration.
    pub iteration_seconds: Vec<f64>,
    /// Preconditioner applications, plus warm-start cycles.
    pub mg_cycles: usize,
    pub warm_start_cycles: usize,
    pub rhs_norm: f64,
    /// Norm the tolerance is relative to (`‖b‖` or `‖r0‖`).
    pub reference_norm: f64,
    pub wall_time: f64,
    pub config: KrylovConfig,
}

impl SolveReport {
    pub fn converged(&self) -> bool {
        self.status == SolveStatus::Converged
    }

    /// Final `‖b - A x‖ / ‖b‖`.
    pub fn relative_residual(&self) -> f64 {
        let last = *self.residual_history.last().unwrap_or(&0.0);
        if self.rhs_norm == 0.0 {
            last
        } else {
            last / self.rhs_norm
        }
    }

    /// First iteration meeting `tol` under the configured stopping test.
    pub fn iterations_to(&self, tol: f64) -> Option<usize> {
        self.residual_history.iter().position(|&r| r <= tol * self.reference_norm)
    }
}

/// Solve `A x = b` by Bi-CGSTAB with right preconditioning, starting from
/// `x0` (zero if `None`). The shadow residual is the initial residual.
pub fn bicgstab<A, M>(
    a: &A,
    m: &M,
    b: &[Complex64],
    x0: Option<&[Complex64]>,
    cfg: &KrylovConfig,
) -> Result<(Vec<Complex64>, SolveReport)>
where
    A: LinearOperator + ?Sized,
    M: Preconditioner + ?Sized,
{
    cfg.validate()?;
    let n = a.dim();
    if b.len() != n {
        return Err(Error::SizeMismatch { expected: n, got: b.len() });
    }
    let start = Instant::now();
    let mut x = match x0 {
        Some(x0) if x0.len() != n => return Err(Error::SizeMismatch { expected: n, got: x0.len() }),
        Some(x0) => x0.to_vec(),
        None => vec![ZERO; n],
    };
    let bnorm = norm(b);
    let mut r = vec![ZERO; n];
    a.apply_into(&x, &mut r);
    for (ri, bi) in r.iter_mut().zip(b) {
        *ri = bi - *ri;
    }
    let r0norm = norm(&r);
    let mut report = SolveReport {
        iterations: 0,
        status: SolveStatus::MaxIterations,
        residual_history: vec![r0norm],
        recursive_history: vec![r0norm],
        iteration_seconds: vec![0.0],
        mg_cycles: 0,
        warm_start_cycles: 0,
        rhs_norm: bnorm,
        reference_norm: match cfg.residual_reference {
            ResidualReference::Rhs => bnorm,
            ResidualReference::InitialResidual => r0norm,
        },
        wall_time: 0.0,
        config: *cfg,
    };
    let target = cfg.tol * report.reference_norm;
    if r0norm <= target {
        report.status = SolveStatus::Converged;
        report.wall_time = start.elapsed().as_secs_f64();
        return Ok((x, report));
    }

    let r_hat = r.clone();
    let r_hat_norm = r0norm;
    let (mut rho_prev, mut alpha, mut omega) = (ONE, ONE, ONE);
    let mut p = vec![ZERO; n];
    let mut v = vec![ZERO; n];
    let mut y = vec![ZERO; n];
    let mut s = vec![ZERO; n];
    let mut z = vec![ZERO; n];
    let mut t = vec![ZERO; n];
    let mut true_r = vec![ZERO; n];

    while report.iterations < cfg.max_iter {
        let rho = dot(&r_hat, &r);
        if rho.norm() <= 1e-14 * r_hat_norm * norm(&r) {
            report.status = SolveStatus::Breakdown;
            break;
        }
        let beta = (rho / rho_prev) * (alpha / omega);
        for k in 0..n {
            p[k] = r[k] + beta * (p[k] - omega * v[k]);
        }
        m.apply_into(&p, &mut y)?;
        a.apply_into(&y, &mut v);
        let denom = dot(&r_hat, &v);
        if denom.norm() <= 1e-14 * r_hat_norm * norm(&v) || denom == ZERO {
            report.mg_cycles += 1;
            report.status = SolveStatus::Breakdown;
            break;
        }
        alpha = rho / denom;
        for k in 0..n {
            s[k] = r[k] - alpha * v[k];
        }
        m.apply_into(&s, &mut z)?;
        a.apply_into(&z, &mut t);
        let tt = dot(&t, &t).re;
        omega = if tt == 0.0 { ZERO } else { dot(&t, &s) / tt };
        linalg::axpy(alpha, &y, &mut x);
        linalg::axpy(omega, &z, &mut x);
        for k in 0..n {
            r[k] = s[k] - omega * t[k];
        }
        rho_prev = rho;
        report.iterations += 1;
        report.mg_cycles += 2;

        a.apply_into(&x, &mut true_r);
        for (ri, bi) in true_r.iter_mut().zip(b) {
            *ri = bi - *ri;
        }
        let res = norm(&true_r);
        report.residual_history.push(res);
        report.recursive_history.push(norm(&r));
        report.iteration_seconds.push(start.elapsed().as_secs_f64());
        if res <= target {
            report.status = SolveStatus::Converged;
            break;
        }
        if !res.is_finite() || omega.norm() <= 1e-14 {
            report.status = SolveStatus::Breakdown;
            break;
        }
    }
    report.wall_time = start.elapsed().as_secs_f64();
    Ok((x, report))
}

/// Starting guess from a standalone multigrid solve of `M x = b` to relative
/// residual `inner_tol`. Returns the guess and the cycles spent.
pub fn warm_start_guess(
    hierarchy: &Hierarchy,
    b: &[Complex64],
    inner_tol: f64,
    mg: &MgConfig,
) -> Result<(Vec<Complex64>, usize)> {
    let cfg = MgConfig { tol: inner_tol, ..*mg };
    let rep = hierarchy.standalone_solve(b, None, &cfg)?;
    if rep.status == MgStatus::Diverged {
        return Err(Error::MultigridDiverged { cycles: rep.cycles });
    }
    Ok((rep.solution, rep.cycles))
}

/// Bi-CGSTAB on `a` preconditioned by one cycle of `hierarchy` per
/// application, with the optional warm start from `cfg`.
pub fn solve_with_multigrid(
    a: &StencilOperator,
    hierarchy: &Hierarchy,
    mg: &MgConfig,
    b: &[Complex64],
    cfg: &KrylovConfig,
) -> Result<(Vec<Complex64>, SolveReport)> {
    let (x0, warm) = match cfg.warm_start {
        Some(w) => {
            let (x0, cycles) = warm_start_guess(hierarchy, b, w.inner_tol, mg)?;
            (Some(x0), cycles)
        }
        None => (None, 0),
    };
    let pre = MgPreconditioner { hierarchy, config: *mg };
    let (x, mut report) = bicgstab(a, &pre, b, x0.as_deref(), cfg)?;
    report.warm_start_cycles = warm;
    report.mg_cycles += warm;
    Ok((x, report))
}
