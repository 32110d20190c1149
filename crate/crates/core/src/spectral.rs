//! Spectral structure of ECS discretizations.
//!
//! The one-dimensional ECS Laplacian on `[0, 1] ∪ [1, R_z]` (n real cells,
//! m layer cells, Dirichlet at both ends) has its eigenvalues at the zeros
//! of
//!
//! ```text
//! F(λ) = tan(2n p) / tan(2m q) + cos p / cos q,
//! p = ½ arccos(1 − λh²/2),   q = ½ arccos(1 − λγ²h²/2).
//! ```
//!
//! `F` has poles and 0/0 points, so roots are located on the product form
//! `G = sin(2np) cos(2mq) cos q + sin(2mq) cos(2np) cos p`, which equals
//! `cos(2np) sin(2mq) cos q · F`. Zeros of `G` where the eigenvector ansatz
//! degenerates (`sin 2p = 0` or `sin 2q = 0`) are discarded.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::TensorGrid2D;
use crate::linalg::{self, DenseMatrix, ONE, ZERO};
use crate::operators::{assemble_axis_dense, discretize_on, second_derivative_stencil, Axis, OperatorSpec, DENSE_CAP};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PitchforkParams {
    /// Real cells.
    pub n: usize,
    /// Layer cells.
    pub m: usize,
    /// Real mesh width.
    pub h: f64,
    /// Layer-to-real mesh width ratio.
    pub gamma: Complex64,
}

impl PitchforkParams {
    pub fn new(n: usize, m: usize, h: f64, gamma: Complex64) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidSpec("pitchfork needs n, m >= 1".into()));
        }
        if gamma == ZERO || !(h > 0.0) {
            return Err(Error::InvalidSpec("pitchfork needs gamma != 0 and h > 0".into()));
        }
        Ok(Self { n, m, h, gamma })
    }

    fn h_gamma(&self) -> Complex64 {
        self.gamma * self.h
    }

    /// Mesh width of the straight complex grid joining 0 and `R_z`.
    fn h_alpha(&self) -> Complex64 {
        let rz = self.h * self.n as f64 + self.h_gamma() * self.m as f64;
        rz / (self.n + self.m + 1) as f64
    }

    /// Total number of eigenvalues, `n + m - 1`.
    pub fn dimension(&self) -> usize {
        self.n + self.m - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Real,
    Contour,
    Tail,
    Unlabeled,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Real => "real",
            Branch::Contour => "contour",
            Branch::Tail => "tail",
            Branch::Unlabeled => "unlabeled",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<Complex64>,
    pub branches: Vec<Branch>,
    /// Scaled residual `|G(λ)| / scale` of each pitchfork root.
    pub residuals: Vec<f64>,
    /// Newton seeds that did not converge to a new root.
    pub failed_seeds: usize,
}

impl SpectrumReport {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

struct Angles {
    p: Complex64,
    q: Complex64,
    dp: Complex64,
    dq: Complex64,
}

fn angles(lambda: Complex64, par: &PitchforkParams) -> Angles {
    let h2 = par.h * par.h;
    let g2h2 = par.gamma * par.gamma * h2;
    let p = (ONE - lambda * h2 / 2.0).acos() / 2.0;
    let q = (ONE - lambda * g2h2 / 2.0).acos() / 2.0;
    // d/dλ ½ arccos(1 − cλ/2) = (c/4) / sin(2·angle)
    let dp = (h2 / 4.0) / (p * 2.0).sin();
    let dq = (g2h2 / 4.0) / (q * 2.0).sin();
    Angles { p, q, dp, dq }
}

/// Value of the characteristic function `F(λ)`.
///
/// For `|λ|h² < 1e-12` the first-order series about `λ = 0` is returned.
pub fn characteristic_f(lambda: Complex64, par: &PitchforkParams) -> Result<Complex64> {
    let (n, m) = (par.n as f64, par.m as f64);
    let h2 = par.h * par.h;
    if lambda.norm() * h2 < 1e-12 {
        let g = par.gamma;
        let ratio = n / (m * g);
        let t = ratio * (ONE + lambda * h2 * (n * n - m * m * g * g) / 3.0);
        let c = ONE - lambda * h2 / 8.0 + lambda * g * g * h2 / 8.0;
        return Ok(t + c);
    }
    let a = angles(lambda, par);
    let denom = (a.q * (2.0 * m)).tan();
    let cq = a.q.cos();
    if !denom.is_finite() || denom.norm() < 1e-300 || cq.norm() < 1e-300 {
        return Err(Error::Pole(format!("{lambda}")));
    }
    let val = (a.p * (2.0 * n)).tan() / denom + a.p.cos() / cq;
    if !val.is_finite() {
        return Err(Error::Pole(format!("{lambda}")));
    }
    Ok(val)
}

/// Pole-free form `G(λ)` with its derivative and a magnitude scale (the
/// product of the factor magnitudes bounding `|G|`).
pub fn characteristic_g(lambda: Complex64, par: &PitchforkParams) -> (Complex64, Complex64, f64) {
    let (n, m) = (par.n as f64, par.m as f64);
    let a = angles(lambda, par);
    let (s1, c1) = ((a.p * (2.0 * n)).sin(), (a.p * (2.0 * n)).cos());
    let (s2, c2) = ((a.q * (2.0 * m)).sin(), (a.q * (2.0 * m)).cos());
    let (sp, cp) = (a.p.sin(), a.p.cos());
    let (sq, cq) = (a.q.sin(), a.q.cos());
    let t1 = s1 * c2 * cq;
    let t2 = s2 * c1 * cp;
    let dg_dp = 2.0 * n * c1 * c2 * cq - 2.0 * n * s2 * s1 * cp - s2 * c1 * sp;
    let dg_dq = -2.0 * m * s1 * s2 * cq - s1 * c2 * sq + 2.0 * m * c2 * c1 * cp;
    let scale = (s1.norm() + c1.norm()) * (s2.norm() + c2.norm()) * (cp.norm() + cq.norm());
    (t1 + t2, dg_dp * a.dp + dg_dq * a.dq, scale)
}

/// Reject `λ` unless `α sin(2jp)` on the real segment and
/// `β sin(2(m - k)q)` in the layer combine, for some `(α, β) ≠ 0`, into a
/// vector meeting continuity and the interface row of the discrete operator.
/// Zeros of `G` that come from the half-angle branch fail this test.
fn degenerate(lambda: Complex64, par: &PitchforkParams) -> bool {
    let a = angles(lambda, par);
    if (a.p * 2.0).sin().norm() < 1e-6 || (a.q * 2.0).sin().norm() < 1e-6 {
        return true;
    }
    let (n, m) = (par.n as f64, par.m as f64);
    let s1 = (a.p * (2.0 * n)).sin();
    let s2 = (a.q * (2.0 * m)).sin();
    let vanishes = |s: Complex64, angle: Complex64| s.norm() <= 1e-8 * (s.norm() + angle.cos().norm());
    if vanishes(s1, a.p * (2.0 * n)) && vanishes(s2, a.q * (2.0 * m)) {
        // both pieces vanish at the interface and decouple
        return false;
    }
    let left = (a.p * (2.0 * (n - 1.0))).sin();
    let right = (a.q * (2.0 * (m - 1.0))).sin();
    let Ok((l, c, r)) = second_derivative_stencil(Complex64::new(par.h, 0.0), par.h_gamma()) else {
        return true;
    };
    // rows: α s1 - β s2 = 0 and -(l α left + c α s1 + r β right) = λ α s1
    let terms = [s1 * r * right, s2 * l * left, s2 * (c + lambda) * s1];
    let det = terms[0] + terms[1] + terms[2];
    let scale: f64 = terms.iter().map(|t| t.norm()).sum();
    det.norm() > INTERFACE_TOL * scale
}

const INTERFACE_TOL: f64 = 1e-8;
const NEWTON_MAX: usize = 200;
const ROOT_TOL: f64 = 1e-10;

/// Deflated Newton iteration on `G` from `seed`, avoiding `found`.
fn newton_root(seed: Complex64, par: &PitchforkParams, found: &[Complex64]) -> Option<Complex64> {
    let mut z = seed;
    let mut converged = false;
    for _ in 0..NEWTON_MAX {
        let (g, dg, _) = characteristic_g(z, par);
        let defl: Complex64 = found.iter().map(|r| (z - r).inv()).sum();
        let denom = dg - g * defl;
        if !denom.is_finite() || denom == ZERO {
            return None;
        }
        let step = g / denom;
        z -= step;
        if !z.is_finite() {
            return None;
        }
        if step.norm() <= 1e-14 * z.norm().max(1e-300) {
            converged = true;
            break;
        }
    }
    if !converged {
        return None;
    }
    // polish on the undeflated function
    for _ in 0..3 {
        let (g, dg, _) = characteristic_g(z, par);
        if dg == ZERO || !dg.is_finite() {
            break;
        }
        let step = g / dg;
        if !step.is_finite() {
            break;
        }
        z -= step;
    }
    Some(z)
}

fn label(lambda: Complex64, par: &PitchforkParams) -> Branch {
    let rays = [
        (Branch::Real, 0.0),
        (Branch::Contour, (par.h_gamma() * par.h_gamma()).inv().arg()),
        (Branch::Tail, (par.h_alpha() * par.h_alpha()).inv().arg()),
    ];
    let arg = lambda.arg();
    rays.iter()
        .min_by(|a, b| (a.1 - arg).abs().partial_cmp(&(b.1 - arg).abs()).unwrap())
        .map(|r| r.0)
        .unwrap_or(Branch::Unlabeled)
}

/// Seeds along the real branch `[0, 4/h²]`, the contour branch
/// `[0, 4/h_γ²]` and the tail `[0, 4/h_α²]`, spaced like the eigenvalues of
/// uniform Dirichlet problems on each piece.
fn seeds(par: &PitchforkParams, round: usize) -> Vec<Complex64> {
    use std::f64::consts::PI;
    let mut out = Vec::new();
    let mut segment = |end: Complex64, cells: usize| {
        let cells = cells * (round + 1);
        for j in 1..cells {
            let s = (j as f64 * PI / (2 * cells) as f64).sin();
            out.push(end * (s * s));
        }
    };
    segment(Complex64::new(4.0 / (par.h * par.h), 0.0), par.n);
    segment(4.0 * (par.h_gamma() * par.h_gamma()).inv(), par.m);
    segment(4.0 * (par.h_alpha() * par.h_alpha()).inv(), par.n + par.m + 1);
    out.sort_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap());
    out
}

/// Locate `count` distinct eigenvalues of the 1D ECS Laplacian as roots of
/// the characteristic function.
pub fn find_pitchfork(par: &PitchforkParams, count: usize) -> Result<SpectrumReport> {
    if count > par.dimension() {
        return Err(Error::InvalidSpec(format!(
            "requested {count} roots, only {} exist",
            par.dimension()
        )));
    }
    let mut roots: Vec<Complex64> = Vec::with_capacity(count);
    let mut residuals = Vec::with_capacity(count);
    let mut failed = 0;
    'rounds: for round in 0..4 {
        for seed in seeds(par, round) {
            if roots.len() == count {
                break 'rounds;
            }
            let Some(z) = newton_root(seed, par, &roots) else {
                failed += 1;
                continue;
            };
            let (g, _, scale) = characteristic_g(z, par);
            let res = if scale > 0.0 { g.norm() / scale } else { g.norm() };
            let duplicate = roots.iter().any(|r| (r - z).norm() <= 1e-8 * z.norm().max(r.norm()));
            if res > ROOT_TOL || duplicate || degenerate(z, par) {
                failed += 1;
                continue;
            }
            roots.push(z);
            residuals.push(res);
        }
    }
    let mut idx: Vec<usize> = (0..roots.len()).collect();
    idx.sort_by(|&a, &b| {
        let (x, y) = (roots[a], roots[b]);
        x.re.partial_cmp(&y.re).unwrap().then(x.im.partial_cmp(&y.im).unwrap())
    });
    let eigenvalues: Vec<Complex64> = idx.iter().map(|&i| roots[i]).collect();
    Ok(SpectrumReport {
        branches: eigenvalues.iter().map(|&z| label(z, par)).collect(),
        residuals: idx.iter().map(|&i| residuals[i]).collect(),
        eigenvalues,
        failed_seeds: failed,
    })
}

/// All eigenvalues of a general complex matrix (dimension ≤ 4096).
pub fn dense_eigenvalues(m: &DenseMatrix) -> Result<Vec<Complex64>> {
    linalg::dense_eigenvalues(m, DENSE_CAP)
}

/// How `λ0`, the eigenvalue of smallest real part, is obtained.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum EigenMethod {
    /// Dense eigensolve of the 2D operator on a grid coarsened until it has
    /// at most `max_unknowns` unknowns.
    Dense2d { max_unknowns: usize },
    /// Sum of the smallest-real-part eigenvalues of the two 1D factors;
    /// exact for the separable model problems.
    #[default]
    OneDComposition,
    /// A value supplied by the user.
    Config { re: f64, im: f64 },
}


fn min_re(values: &[Complex64]) -> Option<Complex64> {
    values.iter().copied().min_by(|a, b| a.re.partial_cmp(&b.re).unwrap())
}

/// Estimate `λ0`, the eigenvalue of the operator with the smallest real part.
pub fn smallest_real_eigenvalue(spec: &OperatorSpec, method: EigenMethod) -> Result<Complex64> {
    match method {
        EigenMethod::Config { re, im } => Ok(Complex64::new(re, im)),
        EigenMethod::Dense2d { max_unknowns } => {
            let mut grid: TensorGrid2D = spec.model.grid()?;
            while grid.unknowns() > max_unknowns && grid.can_coarsen() {
                grid = grid.coarsen()?;
            }
            if grid.unknowns() > max_unknowns {
                return Err(Error::DenseCapExceeded { size: grid.unknowns(), cap: max_unknowns });
            }
            let op = discretize_on(spec, grid)?;
            let m = op.assemble_dense_capped(max_unknowns)?;
            min_re(&dense_eigenvalues(&m)?).ok_or(Error::EigenNoConvergence)
        }
        EigenMethod::OneDComposition => {
            spec.validate()?;
            let ex = dense_eigenvalues(&assemble_axis_dense(spec, Axis::X)?)?;
            let ey = dense_eigenvalues(&assemble_axis_dense(spec, Axis::Y)?)?;
            let k2 = spec.model.k * spec.model.k;
            let constant = spec.zz_scale * spec.wavenumber_coeff * k2 + spec.shift;
            let lx = min_re(&ex).ok_or(Error::EigenNoConvergence)?;
            let ly = min_re(&ey).ok_or(Error::EigenNoConvergence)?;
            Ok(lx + ly + constant)
        }
    }
}

/// Circle enclosing the spectrum of the QD-preconditioned operator:
/// center `(1/δ²)(½ − i/(2kδ))`, radius `|center|`.
pub fn enclosing_circle(k: f64, delta: f64) -> (Complex64, f64) {
    let center = Complex64::new(0.5, -0.5 / (k * delta)) / (delta * delta);
    (center, center.norm())
}

/// Image of `λ` under `λ ↦ λ / (δ²λ + 1 − iδk)`.
pub fn preconditioned_eigenvalue(lambda: Complex64, k: f64, delta: f64) -> Complex64 {
    lambda / (delta * delta * lambda + Complex64::new(1.0, -delta * k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_6, PI};

    #[test]
    fn symmetric_reduction_when_gamma_is_one() {
        let par = PitchforkParams::new(3, 2, 0.2, ONE).unwrap();
        let lambda = Complex64::new(7.3, -0.4);
        let p = (ONE - lambda * 0.04 / 2.0).acos() / 2.0;
        let expect = (p * 6.0).tan() / (p * 4.0).tan() + ONE;
        assert!((characteristic_f(lambda, &par).unwrap() - expect).norm() < 1e-12);
    }

    #[test]
    fn series_matches_small_lambda() {
        let par = PitchforkParams::new(4, 2, 0.25, Complex64::from_polar(1.0, FRAC_PI_6)).unwrap();
        let at_zero = characteristic_f(ZERO, &par).unwrap();
        let tiny = Complex64::new(1e-8 / (par.h * par.h), 0.0);
        let direct = characteristic_f(tiny, &par).unwrap();
        assert!((at_zero - direct).norm() < 1e-6 * at_zero.norm());
        // limit value n/(mγ) + 1
        let limit = 2.0 * par.gamma.inv() + 1.0;
        assert!((at_zero - limit).norm() < 1e-15);
    }

    #[test]
    fn uniform_grid_roots_are_dirichlet_eigenvalues() {
        // n + m = 4 cells of width 1/4 on [0, 1]
        let h = 0.25;
        let par = PitchforkParams::new(2, 2, h, ONE).unwrap();
        let rep = find_pitchfork(&par, 3).unwrap();
        assert_eq!(rep.len(), 3);
        for (j, z) in rep.eigenvalues.iter().enumerate() {
            let expect = 2.0 / (h * h) * (1.0 - ((j + 1) as f64 * PI / 4.0).cos());
            assert!((z - expect).norm() < 1e-9 * expect, "{z} vs {expect}");
        }
    }

    #[test]
    fn branch_zeros_of_g_are_rejected() {
        // with n = m, G has a zero near -4.83 + 2.79i that is not an eigenvalue
        let gamma = Complex64::from_polar(1.0, PI / 6.0);
        let par = PitchforkParams::new(4, 4, 0.25, gamma).unwrap();
        let rep = find_pitchfork(&par, par.dimension()).unwrap();
        assert_eq!(rep.len(), 7);
        assert!(rep.eigenvalues.iter().all(|z| z.re > 0.0));
        assert!(degenerate(Complex64::new(-4.827603, 2.787218), &par));
    }

    #[test]
    fn roots_lie_in_lower_half_plane() {
        for theta in [PI / 6.0, PI / 4.0, PI / 3.0] {
            let par = PitchforkParams::new(8, 4, 1.0 / 8.0, Complex64::from_polar(1.0, theta)).unwrap();
            let rep = find_pitchfork(&par, par.dimension()).unwrap();
            assert_eq!(rep.len(), 11);
            assert!(rep.eigenvalues.iter().all(|z| z.im <= 1e-10));
            assert!(rep.residuals.iter().all(|r| *r <= ROOT_TOL));
        }
    }

    #[test]
    fn too_many_roots_rejected() {
        let par = PitchforkParams::new(4, 2, 0.25, ONE).unwrap();
        assert!(find_pitchfork(&par, 6).is_err());
    }

    #[test]
    fn circle_examples() {
        let (c, r) = enclosing_circle(1.0, 1.0);
        assert!((c - Complex64::new(0.5, -0.5)).norm() < 1e-15);
        assert!((r - 2f64.sqrt() / 2.0).abs() < 1e-15);
        let (c, r) = enclosing_circle(160.0, 1.0 / 160.0);
        assert!((c - Complex64::new(12800.0, -12800.0)).norm() < 1e-9);
        assert!((r - 12800.0 * 2f64.sqrt()).abs() < 1e-9);
        // λ = 0 maps to 0, which is on the circle
        let w = preconditioned_eigenvalue(ZERO, 160.0, 1.0 / 160.0);
        assert!(((w - c).norm() - r).abs() < 1e-9);
    }

    #[test]
    fn lower_half_plane_maps_into_circle() {
        let (k, delta) = (3.0, 0.2);
        let (c, r) = enclosing_circle(k, delta);
        for re in [-50.0, -3.0, 0.0, 1.0, 9.0, 400.0] {
            for im in [0.0, -0.1, -2.0, -60.0] {
                let w = preconditioned_eigenvalue(Complex64::new(re, im), k, delta);
                assert!((w - c).norm() <= r * (1.0 + 1e-12));
            }
        }
    }
}
