//! Config-driven experiments, benchmark tables and CSV export.

mod config;
mod experiment;
mod export;
mod tables;

pub use config::{ExperimentConfig, OutputConfig, SpectrumConfig, OUT_DIR_ENV};
pub use experiment::{compute_spectrum, describe_preconditioner, run_experiment, BenchRow, Experiment, Provenance};
pub use export::{export_field, export_spectrum, row_record, write_rows, ROW_HEADER};
pub use tables::{bench_table, bench_table_with, table_configs, BenchTable, ReferenceRow, TABLE_IDS};
