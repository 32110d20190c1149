//! Geometric multigrid with rediscretized coarse operators.
//!
//! One cycle at level `l` with cycle indices `(γf, γc)`:
//!
//! 1. `ν1` pre-smoothing sweeps,
//! 2. restrict the residual and approximate the coarse error by `γc`
//!    recursive cycles, the first called with `(γf, γc)` and every later one
//!    with the indices swapped to `(γc, γf)`; if the next level is the
//!    coarsest, it is solved exactly once instead,
//! 3. prolongate and add the correction,
//! 4. `ν2` post-smoothing sweeps.
//!
//! `(1, 1)` is a V-cycle, `(2, 2)` a W-cycle, `(1, 2)` an F-cycle and
//! `(1, n)` an F-cycle with `n - 1` extra V-cycle recursions per level.

mod smoother;
mod transfer;

pub use smoother::{inverse_diagonal, smooth, Smoother};
pub use transfer::{prolong_bilinear, restrict_fw};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::TensorGrid2D;
use crate::linalg::{self, DenseLu, ZERO};
use crate::operators::{discretize_on, OperatorSpec, StencilOperator, DENSE_CAP};

/// Rule for the depth of the hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coarsest {
    /// Coarsen while every cell count is even and the level has more than
    /// this many unknowns.
    Unknowns(usize),
    /// Coarsen exactly this many times.
    Level(usize),
}

impl Default for Coarsest {
    fn default() -> Self {
        Coarsest::Unknowns(1024)
    }
}

fn default_tol() -> f64 {
    1e-6
}
fn default_max_cycles() -> usize {
    100
}
fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MgConfig {
    pub nu1: usize,
    pub nu2: usize,
    pub gamma_f: usize,
    pub gamma_c: usize,
    pub smoother: Smoother,
    #[serde(default)]
    pub coarsest: Coarsest,
    /// Relative residual target of a standalone solve.
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default = "default_max_cycles")]
    pub max_cycles: usize,
    /// Swap the cycle indices on the second and later coarse recursions.
    #[serde(default = "default_true")]
    pub literal_swap: bool,
}

impl MgConfig {
    pub fn new(nu1: usize, nu2: usize, gamma_f: usize, gamma_c: usize, smoother: Smoother) -> Self {
        Self {
            nu1,
            nu2,
            gamma_f,
            gamma_c,
            smoother,
            coarsest: Coarsest::default(),
            tol: default_tol(),
            max_cycles: default_max_cycles(),
            literal_swap: true,
        }
    }

    pub fn v_cycle(smoother: Smoother) -> Self {
        Self::new(1, 1, 1, 1, smoother)
    }

    pub fn validate(&self) -> Result<()> {
        if self.gamma_f == 0 || self.gamma_c == 0 {
            return Err(Error::InvalidSpec("cycle indices must be >= 1".into()));
        }
        if !(self.smoother.omega() > 0.0) {
            return Err(Error::InvalidSpec("smoother ω must be positive".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidSpec("multigrid tolerance must be positive".into()));
        }
        Ok(())
    }

    /// Conventional cycle name, e.g. `V(1,1)` or `F_1^4(1,1)`.
    pub fn cycle_label(&self) -> String {
        let kind = match (self.gamma_f, self.gamma_c) {
            (1, 1) => "V".to_string(),
            (2, 2) => "W".to_string(),
            (f, c) => format!("F_{f}^{c}"),
        };
        format!("{kind}({},{})", self.nu1, self.nu2)
    }
}

struct Level {
    op: StencilOperator,
    inv_diag: Vec<Complex64>,
}

/// Operators on every level plus the factorized coarsest operator.
pub struct Hierarchy {
    levels: Vec<Level>,
    coarse: DenseLu,
}

impl std::fmt::Debug for Hierarchy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hierarchy")
            .field("levels", &self.levels.iter().map(|l| l.op.len()).collect::<Vec<_>>())
            .finish()
    }
}

/// Rediscretize `spec` on successively coarsened grids.
pub fn build_hierarchy(spec: &OperatorSpec, coarsest: Coarsest) -> Result<Hierarchy> {
    build_hierarchy_on(spec, spec.model.grid()?, coarsest)
}

pub fn build_hierarchy_on(spec: &OperatorSpec, fine: TensorGrid2D, coarsest: Coarsest) -> Result<Hierarchy> {
    let mut grids = vec![fine];
    loop {
        let g = grids.last().unwrap();
        let more = match coarsest {
            Coarsest::Unknowns(cap) => g.unknowns() > cap && g.can_coarsen(),
            Coarsest::Level(c) => grids.len() <= c,
        };
        if !more {
            break;
        }
        let next = g.coarsen()?;
        grids.push(next);
    }
    let coarse_grid = grids.last().unwrap();
    if coarse_grid.unknowns() > DENSE_CAP {
        return Err(Error::DenseCapExceeded { size: coarse_grid.unknowns(), cap: DENSE_CAP });
    }
    let mut levels = Vec::with_capacity(grids.len());
    for g in grids {
        let op = discretize_on(spec, g)?;
        let inv_diag = inverse_diagonal(&op)?;
        levels.push(Level { op, inv_diag });
    }
    let coarse = DenseLu::new(levels.last().unwrap().op.assemble_dense()?)?;
    Ok(Hierarchy { levels, coarse })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MgStatus {
    Converged,
    /// `max_cycles` reached without meeting the tolerance.
    Stalled,
    /// The residual grew on three consecutive cycles.
    Diverged,
}

#[derive(Debug, Clone)]
pub struct MgSolveReport {
    pub solution: Vec<Complex64>,
    /// Geometric mean of the last `min(5, cycles)` residual ratios.
    pub conv_factor: f64,
    pub cycles: usize,
    /// Residual norms, starting with the initial one.
    pub residuals: Vec<f64>,
    pub status: MgStatus,
    pub seconds: f64,
}

impl Hierarchy {
    /// Index of the coarsest level.
    pub fn coarsest_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn operator(&self, level: usize) -> &StencilOperator {
        &self.levels[level].op
    }

    pub fn grid(&self, level: usize) -> &TensorGrid2D {
        self.levels[level].op.grid()
    }

    pub fn len(&self) -> usize {
        self.levels[0].op.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Exact solve with the coarsest operator.
    pub fn coarsest_solve(&self, b: &[Complex64]) -> Result<Vec<Complex64>> {
        if b.len() != self.coarse.dim() {
            return Err(Error::SizeMismatch { expected: self.coarse.dim(), got: b.len() });
        }
        self.coarse.solve(b)
    }

    /// One cycle on the finest level, updating `u` in place.
    pub fn mg_cycle(&self, b: &[Complex64], u: &mut [Complex64], cfg: &MgConfig) -> Result<()> {
        self.check_len(b.len())?;
        self.check_len(u.len())?;
        self.cycle(0, b, u, cfg, cfg.gamma_f, cfg.gamma_c, &mut None)
    }

    /// Like [`Hierarchy::mg_cycle`], also returning the level visited at
    /// every entry, coarse-grid solve and exit.
    pub fn mg_cycle_traced(&self, b: &[Complex64], u: &mut [Complex64], cfg: &MgConfig) -> Result<Vec<usize>> {
        self.check_len(b.len())?;
        self.check_len(u.len())?;
        let mut trace = Vec::new();
        self.cycle(0, b, u, cfg, cfg.gamma_f, cfg.gamma_c, &mut Some(&mut trace))?;
        Ok(trace)
    }

    fn check_len(&self, got: usize) -> Result<()> {
        if got != self.len() {
            return Err(Error::SizeMismatch { expected: self.len(), got });
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn cycle(
        &self,
        l: usize,
        b: &[Complex64],
        u: &mut [Complex64],
        cfg: &MgConfig,
        gamma_f: usize,
        gamma_c: usize,
        trace: &mut Option<&mut Vec<usize>>,
    ) -> Result<()> {
        let coarsest = self.coarsest_level();
        if let Some(t) = trace.as_deref_mut() {
            t.push(l);
        }
        if l == coarsest {
            let x = self.coarse.solve(b)?;
            u.copy_from_slice(&x);
            return Ok(());
        }
        let level = &self.levels[l];
        let op = &level.op;
        let mut work = vec![ZERO; op.len()];
        smoother::smooth_with(op, &level.inv_diag, u, b, cfg.smoother, cfg.nu1, &mut work);

        op.residual_into(b, u, &mut work);
        let cgrid = self.levels[l + 1].op.grid();
        let (nxc, nyc) = (cgrid.nx(), cgrid.ny());
        let mut rc = vec![ZERO; nxc * nyc];
        transfer::restrict_into(&work, op.grid().ny(), &mut rc, nxc, nyc);

        let mut ec = vec![ZERO; rc.len()];
        if l + 1 == coarsest {
            if let Some(t) = trace.as_deref_mut() {
                t.push(l + 1);
            }
            ec = self.coarse.solve(&rc)?;
        } else {
            for i in 1..=gamma_c {
                let (f, c) = if i == 1 || !cfg.literal_swap { (gamma_f, gamma_c) } else { (gamma_c, gamma_f) };
                self.cycle(l + 1, &rc, &mut ec, cfg, f, c, trace)?;
            }
        }
        transfer::prolong_add_into(&ec, nxc, nyc, u, op.grid().nx(), op.grid().ny());

        smoother::smooth_with(op, &level.inv_diag, u, b, cfg.smoother, cfg.nu2, &mut work);
        if let Some(t) = trace.as_deref_mut() {
            t.push(l);
        }
        Ok(())
    }

    /// Iterate cycles from `x0` (zero if `None`) until the relative residual
    /// drops below `cfg.tol`, `cfg.max_cycles` is reached or the residual
    /// grows three cycles in a row.
    pub fn standalone_solve(&self, b: &[Complex64], x0: Option<&[Complex64]>, cfg: &MgConfig) -> Result<MgSolveReport> {
        cfg.validate()?;
        self.check_len(b.len())?;
        let start = std::time::Instant::now();
        let mut u = match x0 {
            Some(x) => {
                self.check_len(x.len())?;
                x.to_vec()
            }
            None => vec![ZERO; b.len()],
        };
        let op = self.operator(0);
        let bnorm = linalg::norm(b);
        let mut r = vec![ZERO; b.len()];
        op.residual_into(b, &u, &mut r);
        let mut residuals = vec![linalg::norm(&r)];
        if bnorm == 0.0 {
            return Ok(MgSolveReport {
                solution: vec![ZERO; b.len()],
                conv_factor: 0.0,
                cycles: 0,
                residuals: vec![0.0],
                status: MgStatus::Converged,
                seconds: start.elapsed().as_secs_f64(),
            });
        }
        let mut status = MgStatus::Stalled;
        let mut growth = 0;
        if residuals[0] <= cfg.tol * bnorm {
            status = MgStatus::Converged;
        }
        while status == MgStatus::Stalled && residuals.len() <= cfg.max_cycles {
            self.mg_cycle(b, &mut u, cfg)?;
            op.residual_into(b, &u, &mut r);
            let res = linalg::norm(&r);
            let prev = *residuals.last().unwrap();
            residuals.push(res);
            if !res.is_finite() {
                status = MgStatus::Diverged;
            } else if res <= cfg.tol * bnorm {
                status = MgStatus::Converged;
            } else if res > prev {
                growth += 1;
                if growth >= 3 {
                    status = MgStatus::Diverged;
                }
            } else {
                growth = 0;
            }
        }
        let cycles = residuals.len() - 1;
        Ok(MgSolveReport {
            solution: u,
            conv_factor: convergence_factor(&residuals),
            cycles,
            residuals,
            status,
            seconds: start.elapsed().as_secs_f64(),
        })
    }
}

/// Geometric mean of the last `min(5, cycles)` ratios of consecutive
/// residual norms.
pub fn convergence_factor(residuals: &[f64]) -> f64 {
    let cycles = residuals.len().saturating_sub(1);
    if cycles == 0 {
        return 0.0;
    }
    let take = cycles.min(5);
    let ratios = residuals.windows(2).skip(cycles - take).map(|w| if w[0] == 0.0 { 0.0 } else { w[1] / w[0] });
    let mut log_sum = 0.0;
    for r in ratios {
        if r == 0.0 {
            return 0.0;
        }
        log_sum += r.ln();
    }
    (log_sum / take as f64).exp()
}
