use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::krylov::KrylovConfig;
use crate::multigrid::MgConfig;
use crate::operators::ModelProblem;
use crate::preconditioners::PreconditionerSpec;

/// Environment variable overriding the output directory of every config.
pub const OUT_DIR_ENV: &str = "HELMQD_OUT_DIR";

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct OutputConfig {
    /// Directory for all outputs; defaults to `out`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dir: Option<PathBuf>,
    /// Report file name (markdown + CSV share the stem).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum SpectrumConfig {
    /// Roots of the characteristic function of the x-axis Laplacian.
    Pitchfork {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        count: Option<usize>,
    },
    /// Dense eigenvalues of the model operator on a grid coarsened to at
    /// most `max_unknowns` unknowns.
    Dense2d { max_unknowns: usize },
}

impl Default for SpectrumConfig {
    fn default() -> Self {
        SpectrumConfig::Pitchfork { count: None }
    }
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub model: ModelProblem,
    pub preconditioner: PreconditionerSpec,
    pub multigrid: MgConfig,
    #[serde(default)]
    pub krylov: KrylovConfig,
    /// Also report iteration counts at ten times and a tenth of the Krylov
    /// tolerance (the solve runs to the tighter one).
    #[serde(default = "default_true")]
    pub sensitivity: bool,
    #[serde(default)]
    pub spectrum: SpectrumConfig,
    #[serde(default)]
    pub output: OutputConfig,
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            e => e,
        })
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        self.model.validate()?;
        self.preconditioner.validate()?;
        self.multigrid.validate()?;
        self.krylov.validate()?;
        Ok(())
    }

    /// Copy with all cell counts multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self { model: self.model.scaled(factor), ..self.clone() }
    }

    /// Output directory, honoring the environment override.
    pub fn output_dir(&self) -> PathBuf {
        if let Some(dir) = std::env::var_os(OUT_DIR_ENV) {
            return PathBuf::from(dir);
        }
        self.output.dir.clone().unwrap_or_else(|| PathBuf::from("out"))
    }

    pub fn stem(&self) -> String {
        self.name.clone().unwrap_or_else(|| "experiment".to_string())
    }

    pub fn field_path(&self) -> PathBuf {
        let name = self.output.field.clone().unwrap_or_else(|| format!("{}_field.csv", self.stem()));
        self.output_dir().join(name)
    }

    pub fn spectrum_path(&self) -> PathBuf {
        let name = self.output.spectrum.clone().unwrap_or_else(|| format!("{}_spectrum.csv", self.stem()));
        self.output_dir().join(name)
    }

    pub fn report_path(&self) -> PathBuf {
        let name = self.output.report.clone().unwrap_or_else(|| format!("{}_report.csv", self.stem()));
        self.output_dir().join(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
name = "tiny"

[model]
kind = "mp1"
k = 3.0
x = { n = 8, m_lo = 2, m_hi = 2, a = 1.0, w = 0.25, theta = 0.5235987755982988 }
y = { n = 8, m_lo = 2, m_hi = 2, a = 1.0, w = 0.25, theta = 0.5235987755982988 }

[preconditioner]
kind = "qd"
lambda0 = { method = "config", re = -9.0, im = 0.0 }

[multigrid]
nu1 = 1
nu2 = 1
gamma_f = 1
gamma_c = 1
smoother = { kind = "rb_jacobi", omega = 1.0 }

[krylov]
tol = 1e-6
max_iter = 50
"#;

    #[test]
    fn parse_sample() {
        let cfg = ExperimentConfig::parse(SAMPLE).unwrap();
        assert_eq!(cfg.model.x.n, 8);
        assert!(cfg.sensitivity);
        assert_eq!(cfg.multigrid.coarsest, crate::multigrid::Coarsest::Unknowns(1024));
    }

    #[test]
    fn round_trip() {
        let cfg = ExperimentConfig::parse(SAMPLE).unwrap();
        let again = ExperimentConfig::parse(&cfg.to_toml().unwrap()).unwrap();
        assert_eq!(cfg, again);
    }

    #[test]
    fn bad_values_are_config_errors() {
        let text = SAMPLE.replace("gamma_c = 1", "gamma_c = 0");
        assert!(matches!(ExperimentConfig::parse(&text), Err(Error::InvalidSpec(_))));
        assert!(matches!(ExperimentConfig::parse("model = 3"), Err(Error::Config(_))));
    }
}
