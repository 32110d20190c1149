//! Built-in experiments for the four benchmark tables, with the reference
//! values for side-by-side comparison.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use super::config::{ExperimentConfig, OutputConfig, SpectrumConfig};
use super::experiment::{run_experiment, BenchRow};
use super::export::{row_record, ROW_HEADER};
use crate::error::{Error, Result};
use crate::grid::AxisSpec;
use crate::krylov::KrylovConfig;
use crate::multigrid::{MgConfig, Smoother};
use crate::operators::{ModelKind, ModelProblem, RhsSign};
use crate::preconditioners::{PreconditionerSpec, QdScaling};
use crate::spectral::EigenMethod;

/// Reference values of one table row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub preconditioner: &'static str,
    pub cycle: &'static str,
    pub smoother: &'static str,
    pub mg_conv: f64,
    pub mg_cycles: usize,
    pub mg_time: &'static str,
    pub iterations: usize,
    pub cputime: &'static str,
}

pub const TABLE_IDS: [u8; 4] = [1, 2, 3, 4];

const ECS_ANGLE: f64 = PI / 6.0;

fn axis(n: usize, m_lo: usize, m_hi: usize, a: f64, w: f64) -> AxisSpec {
    AxisSpec { n, m_lo, m_hi, a, w, theta: ECS_ANGLE }
}

fn model(table: u8) -> ModelProblem {
    let (kind, k, nu, ax) = match table {
        1 => (ModelKind::Mp1, 160.0, 0.0, axis(256, 64, 64, 1.0, 0.25)),
        2 => (ModelKind::Mp2, 4.0, 7.0, axis(512, 0, 128, 50.0, 12.5)),
        3 => (ModelKind::Mp3, 2.0, 0.0, axis(512, 0, 128, 50.0, 12.5)),
        _ => (ModelKind::Mp3, 4.0, 0.0, axis(768, 0, 128, 75.0, 12.5)),
    };
    ModelProblem { kind, k, nu, l1: 0, l2: 0, rhs: None, rhs_sign: RhsSign::Decaying, x: ax, y: ax }
}

fn mg(gamma_c: usize, smoother: Smoother) -> MgConfig {
    let gamma_f = 1;
    MgConfig::new(1, 1, gamma_f, gamma_c, smoother)
}

fn jacobi(omega: f64) -> Smoother {
    Smoother::Jacobi { omega }
}

fn rb(omega: f64) -> Smoother {
    Smoother::RbJacobi { omega }
}

fn csl(beta2: f64) -> PreconditionerSpec {
    PreconditionerSpec::Csl { beta1: -1.0, beta2, ecs_grid: true }
}

fn qd(re: f64) -> PreconditionerSpec {
    PreconditionerSpec::Qd { lambda0: EigenMethod::Config { re, im: 0.0 }, scaling: QdScaling::RealPart }
}

#[allow(clippy::too_many_arguments)]
fn row(
    preconditioner: &'static str,
    cycle: &'static str,
    smoother: &'static str,
    mg_conv: f64,
    mg_cycles: usize,
    mg_time: &'static str,
    iterations: usize,
    cputime: &'static str,
) -> ReferenceRow {
    ReferenceRow { preconditioner, cycle, smoother, mg_conv, mg_cycles, mg_time, iterations, cputime }
}

/// Experiment configs of a table with the reference row of each.
pub fn table_configs(table: u8) -> Result<Vec<(ExperimentConfig, ReferenceRow)>> {
    let entries: Vec<(PreconditionerSpec, MgConfig, ReferenceRow)> = match table {
        1 => vec![
            (csl(-0.3), mg(4, jacobi(0.8)), row("CSL (-1, -0.3)", "F_1^4(1,1)", "ω-Jacobi, ω=0.8", 0.43, 17, "4.21s", 60, "2m 11s")),
            (
                PreconditionerSpec::Csg { theta_alpha: PI / 14.0 },
                mg(3, jacobi(0.8)),
                row("CSG θα=π/14", "F_1^3(1,1)", "ω-Jacobi, ω=0.8", 0.39, 15, "3.18s", 62, "2m 2s"),
            ),
            (qd(-2.6e4), mg(1, rb(1.0)), row("QD Re λ0=-2.6e4", "V(1,1)", "ω-RB Jacobi, ω=1.0", 0.09, 6, "1.2s", 170, "5m 39s")),
        ],
        2 => vec![
            (csl(-0.4), mg(3, jacobi(0.5)), row("CSL (-1, -0.4)", "F_1^3(1,1)", "ω-Jacobi, ω=0.5", 0.53, 22, "13.4s", 137, "7m 34s")),
            (
                PreconditionerSpec::Csg { theta_alpha: PI / 17.0 },
                mg(3, jacobi(0.5)),
                row("CSG θα=π/17", "F_1^3(1,1)", "ω-Jacobi, ω=0.5", 0.53, 22, "14.4s", 143, "7m 36s"),
            ),
            (qd(-16.88), mg(1, rb(1.0)), row("QD Re λ0=-16.88", "V(1,1)", "ω-RB Jacobi, ω=1.0", 0.15, 8, "5.2s", 357, "19m 40s")),
        ],
        3 => vec![
            (csl(-0.6), mg(2, jacobi(0.8)), row("CSL (-1, -0.6)", "F_1^2(1,1)", "ω-Jacobi, ω=0.8", 0.32, 13, "6.45s", 60, "3m 9s")),
            (
                PreconditionerSpec::Csg { theta_alpha: PI / 13.0 },
                mg(2, jacobi(0.8)),
                row("CSG θα=π/13", "F_1^2(1,1)", "ω-Jacobi, ω=0.8", 0.32, 13, "6.3s", 61, "3m 10s"),
            ),
            (qd(-4.19), mg(1, rb(1.05)), row("QD Re λ0=-4.19", "V(1,1)", "ω-RB Jacobi, ω=1.05", 0.17, 8, "1.2s", 164, "9m")),
        ],
        4 => vec![
            (csl(-0.6), mg(4, jacobi(0.8)), row("CSL (-1, -0.6)", "F_1^4(1,1)", "ω-Jacobi, ω=0.8", 0.32, 13, "15.8s", 210, "18m 20s")),
            (
                PreconditionerSpec::Csg { theta_alpha: PI / 13.0 },
                mg(3, jacobi(0.8)),
                row("CSG θα=π/13", "F_1^3(1,1)", "ω-Jacobi, ω=0.8", 0.31, 12, "14.6s", 160, "14m 14s"),
            ),
            (qd(-16.18), mg(1, rb(1.05)), row("QD Re λ0=-16.18", "V(1,1)", "ω-RB Jacobi, ω=1.05", 0.13, 7, "9.4s", 545, "46m 40s")),
        ],
        t => return Err(Error::Config(format!("unknown table {t}; expected 1-4"))),
    };
    let model = model(table);
    Ok(entries
        .into_iter()
        .map(|(preconditioner, multigrid, reference)| {
            let name = format!("table{table}_{}", preconditioner.label().to_lowercase());
            let cfg = ExperimentConfig {
                name: Some(name),
                model: model.clone(),
                preconditioner,
                multigrid,
                krylov: KrylovConfig::default(),
                sensitivity: true,
                spectrum: SpectrumConfig::default(),
                output: OutputConfig::default(),
            };
            (cfg, reference)
        })
        .collect())
}

pub struct BenchTable {
    pub id: u8,
    pub scale: f64,
    pub rows: Vec<(BenchRow, ReferenceRow)>,
}

/// Run the three experiments of a table with cell counts multiplied by
/// `scale`.
pub fn bench_table(table: u8, scale: f64) -> Result<BenchTable> {
    bench_table_with(table, scale, |_, _| {})
}

/// Like [`bench_table`], calling `progress` after each finished row.
pub fn bench_table_with(table: u8, scale: f64, mut progress: impl FnMut(usize, &BenchRow)) -> Result<BenchTable> {
    if !(scale > 0.0) {
        return Err(Error::Config(format!("scale must be positive, got {scale}")));
    }
    let mut rows = Vec::new();
    for (k, (cfg, reference)) in table_configs(table)?.into_iter().enumerate() {
        let cfg = if scale == 1.0 { cfg } else { cfg.scaled(scale) };
        let exp = run_experiment(&cfg)?;
        progress(k, &exp.row);
        rows.push((exp.row, reference));
    }
    Ok(BenchTable { id: table, scale, rows })
}

fn fmt_opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
}

impl BenchTable {
    pub fn to_markdown(&self) -> String {
        let mut s = format!("### Table {} (scale {})\n\n", self.id, self.scale);
        s.push_str(
            "| preconditioner | cycle | smoother | mg-conv | # cycles | mg time | iter | time | iter @10·tol | iter @tol/10 | ref mg-conv | ref # cycles | ref iter | Δ mg-conv | Δ iter |\n",
        );
        s.push_str("|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n");
        for (r, p) in &self.rows {
            let d_conv = r.mg_conv.map(|c| format!("{:+.3}", c - p.mg_conv));
            let d_iter = r.iterations.map(|i| format!("{:+}", i as i64 - p.iterations as i64));
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | {} | {} | {:.1}s | {} | {} | {} | {} | {} | {} | {} |",
                r.preconditioner,
                r.cycle,
                r.smoother,
                fmt_opt(r.mg_conv.map(|c| format!("{c:.3}"))),
                fmt_opt(r.mg_cycles),
                fmt_opt(r.mg_seconds.map(|t| format!("{t:.2}s"))),
                fmt_opt(r.iterations),
                r.total_seconds,
                fmt_opt(r.iterations_loose),
                fmt_opt(r.iterations_tight),
                p.mg_conv,
                p.mg_cycles,
                p.iterations,
                fmt_opt(d_conv),
                fmt_opt(d_iter),
            );
        }
        s.push('\n');
        for (r, _) in &self.rows {
            let _ = writeln!(s, "- {}: {}", r.preconditioner, r.provenance.summary());
        }
        s
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        if let Some(dir) = path.parent() {
            if !dir.as_os_str().is_empty() {
                std::fs::create_dir_all(dir)?;
            }
        }
        let mut w = csv::Writer::from_path(path)?;
        let mut header = vec!["table", "scale"];
        header.extend(ROW_HEADER);
        header.extend(["reference_mg_conv", "reference_mg_cycles", "reference_iterations", "reference_cputime", "delta_mg_conv", "delta_iterations"]);
        w.write_record(&header)?;
        for (r, p) in &self.rows {
            let mut rec = vec![self.id.to_string(), self.scale.to_string()];
            rec.extend(row_record(r));
            rec.extend([
                p.mg_conv.to_string(),
                p.mg_cycles.to_string(),
                p.iterations.to_string(),
                p.cputime.to_string(),
                r.mg_conv.map(|c| format!("{:.4}", c - p.mg_conv)).unwrap_or_default(),
                r.iterations.map(|i| (i as i64 - p.iterations as i64).to_string()).unwrap_or_default(),
            ]);
            w.write_record(&rec)?;
        }
        w.flush()?;
        Ok(())
    }
}
