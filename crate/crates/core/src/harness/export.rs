use std::path::Path;

use num_complex::Complex64;

use super::experiment::BenchRow;
use crate::error::{Error, Result};
use crate::grid::TensorGrid2D;
use crate::spectral::SpectrumReport;

fn writer(path: &Path) -> Result<csv::Writer<std::fs::File>> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    Ok(csv::Writer::from_path(path)?)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// Write `x, y, re, im, abs` for every unknown on the real part of the grid.
pub fn export_field(u: &[Complex64], grid: &TensorGrid2D, path: &Path) -> Result<usize> {
    if u.len() != grid.unknowns() {
        return Err(Error::SizeMismatch { expected: grid.unknowns(), got: u.len() });
    }
    let mut w = writer(path)?;
    w.write_record(["x", "y", "re", "im", "abs"])?;
    let mut rows = 0;
    for i in 1..=grid.nx() {
        if !grid.gx.is_real_node(i) {
            continue;
        }
        for j in 1..=grid.ny() {
            if !grid.gy.is_real_node(j) {
                continue;
            }
            let v = u[grid.index(i, j)];
            let (x, y) = (grid.gx.node(i).re, grid.gy.node(j).re);
            w.write_record([x, y, v.re, v.im, v.norm()].map(|f| f.to_string()))?;
            rows += 1;
        }
    }
    w.flush()?;
    Ok(rows)
}

/// Write `re, im, branch, residual`; the residual is blank when the report
/// has none.
pub fn export_spectrum(report: &SpectrumReport, path: &Path) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(["re", "im", "branch", "residual"])?;
    for (k, z) in report.eigenvalues.iter().enumerate() {
        let branch = report.branches.get(k).map(|b| b.as_str()).unwrap_or("unlabeled");
        w.write_record([z.re.to_string(), z.im.to_string(), branch.to_string(), opt(report.residuals.get(k))])?;
    }
    w.flush()?;
    Ok(())
}

pub const ROW_HEADER: [&str; 16] = [
    "preconditioner",
    "cycle",
    "smoother",
    "mg_conv",
    "mg_cycles",
    "mg_seconds",
    "mg_status",
    "cycles_per_prec",
    "iterations",
    "total_seconds",
    "converged",
    "iterations_at_10tol",
    "iterations_at_tol_over_10",
    "lambda0_re",
    "lambda0_im",
    "provenance",
];

pub fn row_record(row: &BenchRow) -> Vec<String> {
    vec![
        row.preconditioner.clone(),
        row.cycle.clone(),
        row.smoother.clone(),
        opt(row.mg_conv.map(|c| format!("{c:.4}"))),
        opt(row.mg_cycles),
        opt(row.mg_seconds.map(|s| format!("{s:.3}"))),
        row.mg_status.clone(),
        row.cycles_per_prec.to_string(),
        opt(row.iterations),
        format!("{:.3}", row.total_seconds),
        row.converged.to_string(),
        opt(row.iterations_loose),
        opt(row.iterations_tight),
        opt(row.provenance.lambda0.map(|l| l.re)),
        opt(row.provenance.lambda0.map(|l| l.im)),
        row.provenance.summary(),
    ]
}

pub fn write_rows(rows: &[BenchRow], path: &Path) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(ROW_HEADER)?;
    for r in rows {
        w.write_record(row_record(r))?;
    }
    w.flush()?;
    Ok(())
}
