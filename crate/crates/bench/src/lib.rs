//! Fixtures shared by the kernel benchmarks.

use std::f64::consts::PI;

use helmqd::operators::RhsSign;
use helmqd::{AxisSpec, Complex64, ModelKind, ModelProblem, OperatorSpec};

/// MP1 at `k = 160` on `n` interior cells and `n / 4` layer cells per side.
pub fn mp1(n: usize) -> ModelProblem {
    let ax = AxisSpec { n, m_lo: n / 4, m_hi: n / 4, a: 1.0, w: 0.25, theta: PI / 6.0 };
    ModelProblem { kind: ModelKind::Mp1, k: 160.0, nu: 0.0, l1: 0, l2: 0, rhs: None, rhs_sign: RhsSign::Decaying, x: ax, y: ax }
}

/// QD operator `(1 - i) I + Z / 2.6e4` for [`mp1`].
pub fn mp1_qd(n: usize) -> OperatorSpec {
    OperatorSpec {
        zz_scale: Complex64::new(1.0 / 2.6e4, 0.0),
        shift: Complex64::new(1.0, -1.0),
        ..OperatorSpec::model(mp1(n))
    }
}

/// Smooth deterministic test vector.
pub fn wave(len: usize) -> Vec<Complex64> {
    (0..len).map(|k| Complex64::from_polar(1.0, 0.37 * k as f64)).collect()
}
