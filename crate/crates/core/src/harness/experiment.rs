use std::fmt::Write as _;
use std::time::Instant;

use num_complex::Complex64;
use serde::Serialize;

use super::config::{ExperimentConfig, SpectrumConfig};
use crate::error::{Error, Result};
use crate::grid::TensorGrid2D;
use crate::krylov::{self, bicgstab, Identity, KrylovConfig, ResidualReference, SolveReport, SolveStatus};
use crate::multigrid::{build_hierarchy, MgStatus, Smoother};
use crate::operators::{build_rhs, discretize, discretize_on, OperatorSpec, RhsKind, RhsSign};
use crate::preconditioners::{preconditioner_spec, PreconditionerSpec, QdScaling};
use crate::spectral::{dense_eigenvalues, find_pitchfork, Branch, EigenMethod, PitchforkParams, SpectrumReport};

/// Settings behind a row, written next to every result.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub unknowns: usize,
    pub levels: usize,
    pub coarsest_unknowns: usize,
    pub lambda0: Option<Complex64>,
    pub lambda0_source: String,
    pub rhs: String,
    pub mg_tol: f64,
    pub mg_max_cycles: usize,
    pub literal_swap: bool,
    pub krylov_tol: f64,
    pub krylov_max_iter: usize,
    pub residual_reference: ResidualReference,
    pub warm_start: Option<f64>,
}

impl Provenance {
    pub fn summary(&self) -> String {
        let mut s = format!(
            "unknowns={}; levels={}; coarsest={}; rhs={}; mg_tol={:e}; mg_max_cycles={}; literal_swap={}; tol={:e}; max_iter={}",
            self.unknowns,
            self.levels,
            self.coarsest_unknowns,
            self.rhs,
            self.mg_tol,
            self.mg_max_cycles,
            self.literal_swap,
            self.krylov_tol,
            self.krylov_max_iter
        );
        if self.residual_reference == ResidualReference::InitialResidual {
            s.push_str("; stop relative to ||r0||");
        }
        if let Some(l0) = self.lambda0 {
            let _ = write!(s, "; lambda0={}{:+}i ({})", l0.re, l0.im, self.lambda0_source);
        }
        if let Some(w) = self.warm_start {
            let _ = write!(s, "; warm_start={w:e}");
        }
        s
    }
}

/// One line of a results table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub preconditioner: String,
    pub cycle: String,
    pub smoother: String,
    /// Multigrid convergence factor of the standalone preconditioner solve.
    pub mg_conv: Option<f64>,
    pub mg_cycles: Option<usize>,
    pub mg_seconds: Option<f64>,
    pub mg_status: String,
    pub cycles_per_prec: usize,
    /// Bi-CGSTAB iterations to the configured tolerance.
    pub iterations: Option<usize>,
    pub total_seconds: f64,
    pub converged: bool,
    /// Iterations at ten times the tolerance.
    pub iterations_loose: Option<usize>,
    /// Iterations at a tenth of the tolerance.
    pub iterations_tight: Option<usize>,
    pub provenance: Provenance,
}

pub struct Experiment {
    pub row: BenchRow,
    /// Report of the Bi-CGSTAB run (to a tenth of the tolerance when the
    /// sensitivity columns are on).
    pub report: SolveReport,
    pub solution: Vec<Complex64>,
    pub grid: TensorGrid2D,
}

fn fmt_angle(theta: f64) -> String {
    let ratio = std::f64::consts::PI / theta;
    if (ratio - ratio.round()).abs() < 1e-9 {
        format!("π/{}", ratio.round())
    } else {
        format!("{theta}")
    }
}

/// Table label of a preconditioner with its parameters.
pub fn describe_preconditioner(spec: &PreconditionerSpec, lambda0: Option<Complex64>) -> String {
    match *spec {
        PreconditionerSpec::Csl { beta1, beta2, .. } => format!("CSL ({beta1}, {beta2})"),
        PreconditionerSpec::Csg { theta_alpha } => format!("CSG θα={}", fmt_angle(theta_alpha)),
        PreconditionerSpec::Qd { scaling, .. } => {
            let what = match scaling {
                QdScaling::RealPart => "Re λ0",
                QdScaling::Modulus => "|λ0|",
            };
            match lambda0 {
                Some(l) => format!("QD {what}={:.4}", l.re),
                None => "QD".to_string(),
            }
        }
        s => s.label().to_string(),
    }
}

fn lambda0_source(spec: &PreconditionerSpec) -> String {
    match spec {
        PreconditionerSpec::Qd { lambda0, .. } => match lambda0 {
            EigenMethod::Config { .. } => "config".into(),
            EigenMethod::OneDComposition => "one_d_composition".into(),
            EigenMethod::Dense2d { max_unknowns } => format!("dense_2d<= {max_unknowns}"),
        },
        _ => "none".into(),
    }
}

fn rhs_label(cfg: &ExperimentConfig) -> String {
    match cfg.model.rhs_kind() {
        RhsKind::CenteredDelta => "centered_delta".into(),
        RhsKind::Gaussian => match cfg.model.rhs_sign {
            RhsSign::Decaying => "gaussian exp(-(x^2+y^2))".into(),
            RhsSign::Growing => "gaussian exp(+(x^2+y^2))".into(),
        },
    }
}

fn smoother_label(s: &Smoother) -> String {
    format!("{}, ω={}", s.label(), s.omega())
}

/// Standalone multigrid solve of the preconditioner system followed by
/// preconditioned Bi-CGSTAB on the model problem.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Experiment> {
    cfg.validate().map_err(|e| e.in_stage("config"))?;
    let start = Instant::now();
    let model_spec = OperatorSpec::model(cfg.model.clone());
    let a = discretize(&model_spec).map_err(|e| e.in_stage("discretize"))?;
    let grid = a.grid().clone();
    let b = build_rhs(&cfg.model, &grid);
    let resolved = preconditioner_spec(&cfg.model, &cfg.preconditioner).map_err(|e| e.in_stage("preconditioner"))?;

    let outer_tol = if cfg.sensitivity { cfg.krylov.tol / 10.0 } else { cfg.krylov.tol };
    let kcfg = KrylovConfig { tol: outer_tol, ..cfg.krylov };
    let mg = cfg.multigrid;

    let mut provenance = Provenance {
        unknowns: grid.unknowns(),
        levels: 0,
        coarsest_unknowns: 0,
        lambda0: resolved.as_ref().and_then(|r| r.lambda0),
        lambda0_source: lambda0_source(&cfg.preconditioner),
        rhs: rhs_label(cfg),
        mg_tol: mg.tol,
        mg_max_cycles: mg.max_cycles,
        literal_swap: mg.literal_swap,
        krylov_tol: cfg.krylov.tol,
        krylov_max_iter: cfg.krylov.max_iter,
        residual_reference: cfg.krylov.residual_reference,
        warm_start: cfg.krylov.warm_start.map(|w| w.inner_tol),
    };

    // solve time excludes the standalone multigrid run
    let mut solve_seconds = 0.0;
    let (mg_conv, mg_cycles, mg_seconds, mg_status, solution, report) = match &resolved {
        None => {
            let (x, rep) = bicgstab(&a, &Identity, &b, None, &kcfg).map_err(|e| e.in_stage("krylov"))?;
            solve_seconds += start.elapsed().as_secs_f64();
            (None, None, None, "none".to_string(), x, rep)
        }
        Some(r) => {
            let h = build_hierarchy(&r.spec, mg.coarsest).map_err(|e| e.in_stage("hierarchy"))?;
            solve_seconds += start.elapsed().as_secs_f64();
            provenance.levels = h.depth();
            provenance.coarsest_unknowns = h.grid(h.coarsest_level()).unknowns();
            let mg_rep = h.standalone_solve(&b, None, &mg).map_err(|e| e.in_stage("multigrid"))?;
            let status = match mg_rep.status {
                MgStatus::Converged => "converged",
                MgStatus::Stalled => "max_cycles",
                MgStatus::Diverged => "diverged",
            };
            let t = Instant::now();
            let (x, rep) = krylov::solve_with_multigrid(&a, &h, &mg, &b, &kcfg).map_err(|e| e.in_stage("krylov"))?;
            solve_seconds += t.elapsed().as_secs_f64();
            (Some(mg_rep.conv_factor), Some(mg_rep.cycles), Some(mg_rep.seconds), status.to_string(), x, rep)
        }
    };

    let iterations = report.iterations_to(cfg.krylov.tol);
    // time spent past the reported iteration belongs to the sensitivity run
    let tail = match iterations {
        Some(i) => report.iteration_seconds.last().unwrap_or(&0.0) - report.iteration_seconds[i],
        None => 0.0,
    };
    let row = BenchRow {
        preconditioner: describe_preconditioner(&cfg.preconditioner, provenance.lambda0),
        cycle: if resolved.is_some() { mg.cycle_label() } else { "-".into() },
        smoother: if resolved.is_some() { smoother_label(&mg.smoother) } else { "-".into() },
        mg_conv,
        mg_cycles,
        mg_seconds,
        mg_status,
        cycles_per_prec: if resolved.is_some() { 1 } else { 0 },
        iterations,
        total_seconds: solve_seconds - tail,
        converged: iterations.is_some(),
        iterations_loose: if cfg.sensitivity { report.iterations_to(cfg.krylov.tol * 10.0) } else { None },
        iterations_tight: if cfg.sensitivity && report.status == SolveStatus::Converged {
            report.iterations_to(outer_tol)
        } else {
            None
        },
        provenance,
    };
    Ok(Experiment { row, report, solution, grid })
}

/// Eigenvalues requested by the config's spectrum section.
pub fn compute_spectrum(cfg: &ExperimentConfig) -> Result<SpectrumReport> {
    match cfg.spectrum {
        SpectrumConfig::Pitchfork { count } => {
            let g = cfg.model.x.build()?;
            if g.m_lo() != 0 || g.m_hi() == 0 {
                return Err(Error::InvalidSpec(
                    "pitchfork spectrum needs a single layer at the high end of the x axis".into(),
                ));
            }
            let gamma = g.gamma().ok_or_else(|| Error::InvalidSpec("x axis has no layer".into()))?;
            let par = PitchforkParams::new(g.n(), g.m_hi(), g.h(), gamma)?;
            find_pitchfork(&par, count.unwrap_or(par.dimension()))
        }
        SpectrumConfig::Dense2d { max_unknowns } => {
            let spec = OperatorSpec::model(cfg.model.clone());
            let mut grid = cfg.model.grid()?;
            while grid.unknowns() > max_unknowns && grid.can_coarsen() {
                grid = grid.coarsen()?;
            }
            let op = discretize_on(&spec, grid)?;
            let mut eig = dense_eigenvalues(&op.assemble_dense_capped(max_unknowns)?)?;
            eig.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
            Ok(SpectrumReport {
                branches: vec![Branch::Unlabeled; eig.len()],
                residuals: Vec::new(),
                eigenvalues: eig,
                failed_seeds: 0,
            })
        }
    }
}
