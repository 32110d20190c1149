//! Preconditioning operators built over the same grid as the target problem.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ONE, ZERO};
use crate::operators::{discretize, ModelProblem, OperatorSpec, StencilOperator};
use crate::spectral::{smallest_real_eigenvalue, EigenMethod};

/// Which magnitude of `λ0` scales the QD operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QdScaling {
    /// `1 / |Re λ0|`
    #[default]
    RealPart,
    /// `1 / |λ0|`
    Modulus,
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PreconditionerSpec {
    None,
    /// `-Δ` on the ECS grid.
    Laplacian,
    /// `-Δ + (β1 + iβ2) k²(x, y)`.
    Csl {
        beta1: f64,
        beta2: f64,
        /// Discretize on the ECS grid (`false`: layers laid on the real axis).
        #[serde(default = "default_true")]
        ecs_grid: bool,
    },
    /// The model operator on a grid rotated by `theta_alpha`.
    Csg { theta_alpha: f64 },
    /// `(1 - i) I + Z / |Re λ0|`.
    Qd {
        lambda0: EigenMethod,
        #[serde(default)]
        scaling: QdScaling,
    },
}

impl PreconditionerSpec {
    pub fn label(&self) -> &'static str {
        match self {
            PreconditionerSpec::None => "none",
            PreconditionerSpec::Laplacian => "Laplacian",
            PreconditionerSpec::Csl { .. } => "CSL",
            PreconditionerSpec::Csg { .. } => "CSG",
            PreconditionerSpec::Qd { .. } => "QD",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            PreconditionerSpec::Csl { beta1, beta2, .. } if !beta1.is_finite() || !beta2.is_finite() => {
                Err(Error::InvalidSpec("CSL shift must be finite".into()))
            }
            PreconditionerSpec::Csg { theta_alpha }
                if !(theta_alpha > 0.0 && theta_alpha < std::f64::consts::FRAC_PI_2) =>
            {
                Err(Error::InvalidSpec(format!("CSG angle must lie in (0, π/2), got {theta_alpha}")))
            }
            _ => Ok(()),
        }
    }
}

/// A preconditioner spec turned into an operator spec, with the `λ0` it
/// used (QD only).
#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedPreconditioner {
    pub spec: OperatorSpec,
    pub lambda0: Option<Complex64>,
}

/// Operator spec of the preconditioner, or `None` for no preconditioning.
pub fn preconditioner_spec(
    model: &ModelProblem,
    spec: &PreconditionerSpec,
) -> Result<Option<ResolvedPreconditioner>> {
    spec.validate()?;
    let base = OperatorSpec::model(model.clone());
    let resolved = match *spec {
        PreconditionerSpec::None => return Ok(None),
        PreconditionerSpec::Laplacian => {
            ResolvedPreconditioner { spec: OperatorSpec { wavenumber_coeff: ZERO, ..base }, lambda0: None }
        }
        PreconditionerSpec::Csl { beta1, beta2, ecs_grid } => {
            let mut s = OperatorSpec { wavenumber_coeff: Complex64::new(beta1, beta2), ..base };
            if !ecs_grid {
                s.model.x.theta = 0.0;
                s.model.y.theta = 0.0;
            }
            ResolvedPreconditioner { spec: s, lambda0: None }
        }
        PreconditionerSpec::Csg { theta_alpha } => ResolvedPreconditioner {
            spec: OperatorSpec { mesh_scale: Complex64::from_polar(1.0, theta_alpha), ..base },
            lambda0: None,
        },
        PreconditionerSpec::Qd { lambda0, scaling } => {
            let l0 = smallest_real_eigenvalue(&base, lambda0)?;
            let magnitude = match scaling {
                QdScaling::RealPart => l0.re.abs(),
                QdScaling::Modulus => l0.norm(),
            };
            if !(magnitude > 0.0) || !magnitude.is_finite() {
                return Err(Error::InvalidSpec(format!("QD needs a nonzero λ0, got {l0}")));
            }
            ResolvedPreconditioner {
                spec: OperatorSpec {
                    zz_scale: Complex64::new(1.0 / magnitude, 0.0),
                    shift: ONE - Complex64::i(),
                    ..base
                },
                lambda0: Some(l0),
            }
        }
    };
    Ok(Some(resolved))
}

/// Discretized preconditioning operator on the model's grid.
pub fn build_preconditioner(
    model: &ModelProblem,
    spec: &PreconditionerSpec,
) -> Result<Option<StencilOperator>> {
    preconditioner_spec(model, spec)?.map(|r| discretize(&r.spec)).transpose()
}

/// `δ` with `δ² = 1 / |Re λ0|`; the QD operator then equals
/// `δ² Z + (1 - i)`.
pub fn qd_delta(lambda0: Complex64) -> f64 {
    1.0 / lambda0.re.abs().sqrt()
}
