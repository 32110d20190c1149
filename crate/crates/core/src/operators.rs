//! Five-point finite-difference discretization of the Helmholtz model
//! problems on tensor ECS grids.
//!
//! Every operator built here has the form
//!
//! ```text
//! zz_scale * ( -∂xx - ∂yy + l1(l1+1)/x² + l2(l2+1)/y² + c·k²(x,y) ) + shift
//! ```
//!
//! where `c` is the wavenumber coefficient (`-1` for the model operator
//! itself, `β1 + iβ2` for a shifted Laplacian, `0` for the Laplacian) and the
//! derivatives use the non-uniform three-point formula on mesh widths
//! multiplied by `mesh_scale`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{AxisSpec, EcsGrid1D, TensorGrid2D};
use crate::linalg::{DenseMatrix, ONE, ZERO};

/// Default cap on the dimension of dense assemblies.
pub const DENSE_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    /// Constant wavenumber: `-Δ - k²`.
    Mp1,
    /// Gaussian wells: `-Δ - ν(e^{-x²} + e^{-y²}) - k²`.
    Mp2,
    /// Coulomb terms: `-Δ - 1/x - 1/y - k²`.
    Mp3,
    /// Constant wavenumber with user-chosen source and layers.
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RhsKind {
    CenteredDelta,
    Gaussian,
}

/// Sign of the exponent of the Gaussian source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RhsSign {
    /// `e^{-(x²+y²)}`
    #[default]
    Decaying,
    /// `e^{+(x²+y²)}`, overflows on large domains.
    Growing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelProblem {
    pub kind: ModelKind,
    /// Base wavenumber.
    pub k: f64,
    /// Well depth (MP2 only).
    #[serde(default)]
    pub nu: f64,
    #[serde(default)]
    pub l1: u32,
    #[serde(default)]
    pub l2: u32,
    /// Source term; defaults to a centered delta for MP1/custom and a
    /// Gaussian for MP2/MP3.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<RhsKind>,
    #[serde(default)]
    pub rhs_sign: RhsSign,
    pub x: AxisSpec,
    pub y: AxisSpec,
}

impl ModelProblem {
    pub fn validate(&self) -> Result<()> {
        if !(self.k >= 0.0) || !self.k.is_finite() {
            return Err(Error::InvalidSpec(format!("wavenumber must be >= 0, got {}", self.k)));
        }
        if self.kind == ModelKind::Mp2 && !(self.nu >= 0.0) {
            return Err(Error::InvalidSpec(format!("MP2 needs nu >= 0, got {}", self.nu)));
        }
        Ok(())
    }

    pub fn rhs_kind(&self) -> RhsKind {
        self.rhs.unwrap_or(match self.kind {
            ModelKind::Mp1 | ModelKind::Custom => RhsKind::CenteredDelta,
            ModelKind::Mp2 | ModelKind::Mp3 => RhsKind::Gaussian,
        })
    }

    pub fn grid(&self) -> Result<TensorGrid2D> {
        Ok(TensorGrid2D::new(self.x.build()?, self.y.build()?))
    }

    /// Position-dependent part of `k²` contributed by one coordinate.
    pub fn axis_potential(&self, z: Complex64) -> Complex64 {
        match self.kind {
            ModelKind::Mp1 | ModelKind::Custom => ZERO,
            ModelKind::Mp2 => self.nu * (-(z * z)).exp(),
            ModelKind::Mp3 => z.inv(),
        }
    }

    /// Full wavenumber symbol `k²(x, y)`.
    pub fn wavenumber_sq(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.k * self.k + self.axis_potential(x) + self.axis_potential(y)
    }

    fn angular(&self, axis: Axis) -> f64 {
        let l = match axis {
            Axis::X => self.l1,
            Axis::Y => self.l2,
        } as f64;
        l * (l + 1.0)
    }

    fn singular_at_origin(&self, axis: Axis) -> bool {
        self.kind == ModelKind::Mp3 || self.angular(axis) != 0.0
    }

    /// Cell counts of both axes scaled by `factor`.
    pub fn scaled(&self, factor: f64) -> ModelProblem {
        ModelProblem { x: self.x.scaled(factor), y: self.y.scaled(factor), ..self.clone() }
    }
}

/// A model problem together with the scaling, shift and grid rotation that
/// turn it into a concrete operator.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSpec {
    pub model: ModelProblem,
    /// Factor applied to every mesh width; potentials still see the
    /// unscaled node coordinates.
    pub mesh_scale: Complex64,
    /// Factor multiplying the whole differential operator.
    pub zz_scale: Complex64,
    /// Constant added to the diagonal.
    pub shift: Complex64,
    /// Coefficient of `k²(x, y)`; `-1` reproduces the model operator.
    pub wavenumber_coeff: Complex64,
}

impl OperatorSpec {
    /// The model operator `Z = -Δ_{l1,l2} - k²(x, y)`.
    pub fn model(model: ModelProblem) -> Self {
        Self { model, mesh_scale: ONE, zz_scale: ONE, shift: ZERO, wavenumber_coeff: -ONE }
    }

    pub fn validate(&self) -> Result<()> {
        self.model.validate()?;
        if self.mesh_scale == ZERO {
            return Err(Error::InvalidSpec("mesh_scale must be nonzero".into()));
        }
        Ok(())
    }
}

/// Three-point approximation of `d²u/dz²` at a node with left width
/// `h_left` and right width `h_right`. Returns `(left, center, right)`.
pub fn second_derivative_stencil(
    h_left: Complex64,
    h_right: Complex64,
) -> Result<(Complex64, Complex64, Complex64)> {
    if h_left == ZERO || h_right == ZERO || h_left + h_right == ZERO {
        return Err(Error::ZeroMeshWidth);
    }
    let f = 2.0 / (h_left + h_right);
    let il = h_left.inv();
    let ir = h_right.inv();
    Ok((f * il, -f * (il + ir), f * ir))
}

/// Per-axis pieces of a discretized operator: `-d²/dz²` coefficients and
/// the diagonal terms depending on that coordinate alone.
struct AxisTerms {
    lower: Vec<Complex64>,
    center: Vec<Complex64>,
    upper: Vec<Complex64>,
    diag: Vec<Complex64>,
}

fn axis_terms(spec: &OperatorSpec, grid: &EcsGrid1D, axis: Axis) -> Result<AxisTerms> {
    let model = &spec.model;
    let interior = grid.interior();
    let angular = model.angular(axis);
    let singular = model.singular_at_origin(axis);
    let mut t = AxisTerms {
        lower: Vec::with_capacity(interior),
        center: Vec::with_capacity(interior),
        upper: Vec::with_capacity(interior),
        diag: Vec::with_capacity(interior),
    };
    for node in 1..=interior {
        let hl = grid.mesh_width(node - 1)? * spec.mesh_scale;
        let hr = grid.mesh_width(node)? * spec.mesh_scale;
        let (l, c, r) = second_derivative_stencil(hl, hr)?;
        t.lower.push(-l);
        t.center.push(-c);
        t.upper.push(-r);
        let z = grid.node(node);
        if singular && z == ZERO {
            return Err(Error::SingularCoordinate(format!(
                "{axis:?} coordinate is zero at interior node {node}"
            )));
        }
        let mut d = spec.wavenumber_coeff * model.axis_potential(z);
        if angular != 0.0 {
            d += angular / (z * z);
        }
        t.diag.push(d);
    }
    Ok(t)
}

/// Complex 5-point stencil operator on a tensor ECS grid.
///
/// Coefficients for neighbors that are Dirichlet boundary nodes are stored
/// as zero.
#[derive(Debug, Clone)]
pub struct StencilOperator {
    grid: TensorGrid2D,
    center: Vec<Complex64>,
    west: Vec<Complex64>,
    east: Vec<Complex64>,
    south: Vec<Complex64>,
    north: Vec<Complex64>,
}

/// Discretize `spec` on the grid described by its model.
pub fn discretize(spec: &OperatorSpec) -> Result<StencilOperator> {
    let grid = spec.model.grid()?;
    discretize_on(spec, grid)
}

/// Discretize `spec` on an explicit grid (used for coarse levels).
pub fn discretize_on(spec: &OperatorSpec, grid: TensorGrid2D) -> Result<StencilOperator> {
    spec.validate()?;
    let tx = axis_terms(spec, &grid.gx, Axis::X)?;
    let ty = axis_terms(spec, &grid.gy, Axis::Y)?;
    let k2 = spec.model.k * spec.model.k;
    let constant = spec.wavenumber_coeff * k2;
    let zz = spec.zz_scale;
    let (nx, ny) = (grid.nx(), grid.ny());
    let n = nx * ny;
    let mut op = StencilOperator {
        grid,
        center: Vec::with_capacity(n),
        west: Vec::with_capacity(n),
        east: Vec::with_capacity(n),
        south: Vec::with_capacity(n),
        north: Vec::with_capacity(n),
    };
    for i in 0..nx {
        for j in 0..ny {
            let c = tx.center[i] + ty.center[j] + tx.diag[i] + ty.diag[j] + constant;
            op.center.push(zz * c + spec.shift);
            op.west.push(if i > 0 { zz * tx.lower[i] } else { ZERO });
            op.east.push(if i + 1 < nx { zz * tx.upper[i] } else { ZERO });
            op.south.push(if j > 0 { zz * ty.lower[j] } else { ZERO });
            op.north.push(if j + 1 < ny { zz * ty.upper[j] } else { ZERO });
        }
    }
    Ok(op)
}

/// Dense matrix of one axis factor of `spec`: `-d²/dz² + l(l+1)/z² + c·V(z)`
/// scaled by `zz_scale`, without the constant `k²` and the shift.
pub fn assemble_axis_dense(spec: &OperatorSpec, axis: Axis) -> Result<DenseMatrix> {
    let grid = match axis {
        Axis::X => spec.model.x.build()?,
        Axis::Y => spec.model.y.build()?,
    };
    let t = axis_terms(spec, &grid, axis)?;
    let n = grid.interior();
    if n > DENSE_CAP {
        return Err(Error::DenseCapExceeded { size: n, cap: DENSE_CAP });
    }
    let zz = spec.zz_scale;
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = zz * (t.center[i] + t.diag[i]);
        if i > 0 {
            m[(i, i - 1)] = zz * t.lower[i];
        }
        if i + 1 < n {
            m[(i, i + 1)] = zz * t.upper[i];
        }
    }
    Ok(m)
}

impl StencilOperator {
    pub fn grid(&self) -> &TensorGrid2D {
        &self.grid
    }

    pub fn len(&self) -> usize {
        self.center.len()
    }

    pub fn is_empty(&self) -> bool {
        self.center.is_empty()
    }

    /// Center coefficients, i.e. the diagonal of the operator.
    pub fn diagonal(&self) -> &[Complex64] {
        &self.center
    }

    /// `(center, west, east, south, north)` at unknown `k`.
    pub fn coefficients(&self, k: usize) -> [Complex64; 5] {
        [self.center[k], self.west[k], self.east[k], self.south[k], self.north[k]]
    }

    pub fn apply(&self, u: &[Complex64]) -> Result<Vec<Complex64>> {
        if u.len() != self.len() {
            return Err(Error::SizeMismatch { expected: self.len(), got: u.len() });
        }
        let mut out = vec![ZERO; u.len()];
        self.apply_into(u, &mut out);
        Ok(out)
    }

    /// `out = A u`. Panics on length mismatch.
    pub fn apply_into(&self, u: &[Complex64], out: &mut [Complex64]) {
        assert_eq!(u.len(), self.len());
        assert_eq!(out.len(), self.len());
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        for i in 0..nx {
            let row = i * ny;
            for j in 0..ny {
                out[row + j] = self.row_action(u, i, j, nx, ny);
            }
        }
    }

    /// `r = b - A u`. Panics on length mismatch.
    pub fn residual_into(&self, b: &[Complex64], u: &[Complex64], r: &mut [Complex64]) {
        assert_eq!(b.len(), self.len());
        assert_eq!(u.len(), self.len());
        assert_eq!(r.len(), self.len());
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        for i in 0..nx {
            let row = i * ny;
            for j in 0..ny {
                let k = row + j;
                r[k] = b[k] - self.row_action(u, i, j, nx, ny);
            }
        }
    }

    /// `(A u)_k` for the unknown at interior position `(i, j)` (0-based).
    #[inline(always)]
    pub(crate) fn row_action(&self, u: &[Complex64], i: usize, j: usize, nx: usize, ny: usize) -> Complex64 {
        let k = i * ny + j;
        let mut acc = self.center[k] * u[k];
        if i > 0 {
            acc += self.west[k] * u[k - ny];
        }
        if i + 1 < nx {
            acc += self.east[k] * u[k + ny];
        }
        if j > 0 {
            acc += self.south[k] * u[k - 1];
        }
        if j + 1 < ny {
            acc += self.north[k] * u[k + 1];
        }
        acc
    }

    pub fn assemble_dense(&self) -> Result<DenseMatrix> {
        self.assemble_dense_capped(DENSE_CAP)
    }

    pub fn assemble_dense_capped(&self, cap: usize) -> Result<DenseMatrix> {
        let n = self.len();
        if n > cap {
            return Err(Error::DenseCapExceeded { size: n, cap });
        }
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..nx {
            for j in 0..ny {
                let k = i * ny + j;
                m[(k, k)] = self.center[k];
                if i > 0 {
                    m[(k, k - ny)] = self.west[k];
                }
                if i + 1 < nx {
                    m[(k, k + ny)] = self.east[k];
                }
                if j > 0 {
                    m[(k, k - 1)] = self.south[k];
                }
                if j + 1 < ny {
                    m[(k, k + 1)] = self.north[k];
                }
            }
        }
        Ok(m)
    }
}

/// Right-hand side of a model problem on its (unrotated) grid.
///
/// A centered delta puts a single 1 at the unknown nearest the center of
/// the real square. A Gaussian is sampled at the real coordinates of nodes
/// on the real square and is zero inside the layers.
pub fn build_rhs(model: &ModelProblem, grid: &TensorGrid2D) -> Vec<Complex64> {
    let mut b = vec![ZERO; grid.unknowns()];
    match model.rhs_kind() {
        RhsKind::CenteredDelta => {
            let ic = center_node(&grid.gx);
            let jc = center_node(&grid.gy);
            b[grid.index(ic, jc)] = ONE;
        }
        RhsKind::Gaussian => {
            let sign = match model.rhs_sign {
                RhsSign::Decaying => -1.0,
                RhsSign::Growing => 1.0,
            };
            for i in 1..=grid.nx() {
                if !grid.gx.is_real_node(i) {
                    continue;
                }
                let x = grid.gx.node(i).re;
                for j in 1..=grid.ny() {
                    if !grid.gy.is_real_node(j) {
                        continue;
                    }
                    let y = grid.gy.node(j).re;
                    b[grid.index(i, j)] = Complex64::new((sign * (x * x + y * y)).exp(), 0.0);
                }
            }
        }
    }
    b
}

/// Interior node nearest the midpoint of the real segment.
fn center_node(g: &EcsGrid1D) -> usize {
    let mid = g.m_lo() as f64 + g.n() as f64 / 2.0;
    (mid.round() as usize).clamp(1, g.interior())
}
