use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use helmqd::harness::{
    bench_table_with, compute_spectrum, export_field, export_spectrum, run_experiment, write_rows, ExperimentConfig,
    OUT_DIR_ENV,
};
use helmqd::Error;

#[derive(Parser)]
#[command(name = "helmqd", version, about = "Preconditioned multigrid/Bi-CGSTAB solver for ECS Helmholtz problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment and write its report.
    Run { config: PathBuf },
    /// Reproduce one of the built-in benchmark tables.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        table: u8,
        /// Multiply all cell counts by this factor.
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Output directory (overrides the environment).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute and export the spectrum configured in a file.
    Spectrum { config: PathBuf },
    /// Solve and export the solution on the real part of the grid.
    Field { config: PathBuf },
}

const EXIT_NOT_CONVERGED: u8 = 2;
const EXIT_CONFIG: u8 = 3;
const EXIT_IO: u8 = 4;

fn exit_code(err: &Error) -> u8 {
    match err.root() {
        Error::Io(_) | Error::Csv(_) => EXIT_IO,
        Error::MultigridDiverged { .. } => EXIT_NOT_CONVERGED,
        _ => EXIT_CONFIG,
    }
}

fn out_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from)).unwrap_or_else(|| PathBuf::from("out"))
}

fn write_text(path: &Path, text: &str) -> helmqd::Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, text)?;
    Ok(())
}

fn run(cmd: Command) -> helmqd::Result<u8> {
    match cmd {
        Command::Run { config } => {
            let cfg = ExperimentConfig::load(&config)?;
            let exp = run_experiment(&cfg)?;
            let path = cfg.report_path();
            write_rows(std::slice::from_ref(&exp.row), &path)?;
            let r = &exp.row;
            println!(
                "{} {} {}: mg-conv {}, {} cycles, {} iterations, {:.2}s",
                r.preconditioner,
                r.cycle,
                r.smoother,
                r.mg_conv.map(|c| format!("{c:.3}")).unwrap_or_else(|| "-".into()),
                r.mg_cycles.map(|c| c.to_string()).unwrap_or_else(|| "-".into()),
                r.iterations.map(|c| c.to_string()).unwrap_or_else(|| "-".into()),
                r.total_seconds
            );
            println!("report: {}", path.display());
            Ok(if r.converged { 0 } else { EXIT_NOT_CONVERGED })
        }
        Command::Bench { table, scale, out } => {
            let dir = out_dir(out);
            let bench = bench_table_with(table, scale, |_, r| {
                eprintln!(
                    "  {}: iterations {}, mg-conv {:.3}",
                    r.preconditioner,
                    r.iterations.map(|c| c.to_string()).unwrap_or_else(|| "-".into()),
                    r.mg_conv.unwrap_or(f64::NAN)
                );
            })?;
            let md = bench.to_markdown();
            print!("{md}");
            write_text(&dir.join(format!("table{table}.md")), &md)?;
            bench.write_csv(&dir.join(format!("table{table}.csv")))?;
            let all_converged = bench.rows.iter().all(|(r, _)| r.converged);
            Ok(if all_converged { 0 } else { EXIT_NOT_CONVERGED })
        }
        Command::Spectrum { config } => {
            let cfg = ExperimentConfig::load(&config)?;
            let rep = compute_spectrum(&cfg)?;
            let path = cfg.spectrum_path();
            export_spectrum(&rep, &path)?;
            println!("{} eigenvalues ({} failed seeds): {}", rep.len(), rep.failed_seeds, path.display());
            Ok(0)
        }
        Command::Field { config } => {
            let cfg = ExperimentConfig::load(&config)?;
            let exp = run_experiment(&cfg)?;
            let path = cfg.field_path();
            let rows = export_field(&exp.solution, &exp.grid, &path)?;
            println!("{rows} nodes: {}", path.display());
            Ok(if exp.row.converged { 0 } else { EXIT_NOT_CONVERGED })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
