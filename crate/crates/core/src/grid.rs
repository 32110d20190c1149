//! One-dimensional ECS grids and their tensor products.
//!
//! A grid is a real segment `[0, a]` of `n` cells, optionally extended on
//! either end by an absorbing layer of `m` cells laid along a complex ray
//! rotated by `theta`. The low layer runs from `-w e^{iθ}` to `0`, the high
//! layer from `a` to `a + w e^{iθ}`. The end nodes carry homogeneous
//! Dirichlet values, so unknowns live on interior nodes only.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters of one grid axis, as they appear in configuration files.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisSpec {
    /// Cells in the real segment.
    pub n: usize,
    /// Layer cells below the real segment.
    #[serde(default)]
    pub m_lo: usize,
    /// Layer cells above the real segment.
    #[serde(default)]
    pub m_hi: usize,
    /// Length of the real segment.
    pub a: f64,
    /// Real width of each layer.
    #[serde(default)]
    pub w: f64,
    /// Rotation angle of the layers in radians.
    #[serde(default)]
    pub theta: f64,
}

impl AxisSpec {
    pub fn build(&self) -> Result<EcsGrid1D> {
        EcsGrid1D::new(self.n, self.m_lo, self.m_hi, self.a, self.w, self.theta)
    }

    /// Cell counts multiplied by `factor`, rounded to the nearest integer.
    pub fn scaled(&self, factor: f64) -> AxisSpec {
        let s = |c: usize| ((c as f64) * factor).round() as usize;
        AxisSpec {
            n: s(self.n),
            m_lo: s(self.m_lo),
            m_hi: s(self.m_hi),
            ..*self
        }
    }
}

/// Which part of the grid a cell belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    LowLayer,
    Real,
    HighLayer,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EcsGrid1D {
    n: usize,
    m_lo: usize,
    m_hi: usize,
    a: f64,
    w: f64,
    theta: f64,
    h: f64,
    h_lo: Complex64,
    h_hi: Complex64,
    nodes: Vec<Complex64>,
}

impl EcsGrid1D {
    pub fn new(n: usize, m_lo: usize, m_hi: usize, a: f64, w: f64, theta: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGrid(format!("need n >= 2 real cells, got {n}")));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::InvalidGrid(format!("real length must be positive, got {a}")));
        }
        if (m_lo > 0 || m_hi > 0) && !(w > 0.0 && w.is_finite()) {
            return Err(Error::InvalidGrid(format!("layer width must be positive, got {w}")));
        }
        if !(0.0..std::f64::consts::FRAC_PI_2).contains(&theta) {
            return Err(Error::InvalidGrid(format!("ECS angle must lie in [0, π/2), got {theta}")));
        }
        let h = a / n as f64;
        let ray = Complex64::from_polar(1.0, theta);
        let layer_width = |m: usize| {
            if m == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                ray * (w / m as f64)
            }
        };
        let h_lo = layer_width(m_lo);
        let h_hi = layer_width(m_hi);

        let mut nodes = Vec::with_capacity(m_lo + n + m_hi + 1);
        for j in 0..m_lo {
            nodes.push(-(h_lo * (m_lo - j) as f64));
        }
        for j in 0..=n {
            nodes.push(Complex64::new(h * j as f64, 0.0));
        }
        for j in 1..=m_hi {
            nodes.push(a + h_hi * j as f64);
        }
        Ok(Self { n, m_lo, m_hi, a, w, theta, h, h_lo, h_hi, nodes })
    }

    pub fn spec(&self) -> AxisSpec {
        AxisSpec { n: self.n, m_lo: self.m_lo, m_hi: self.m_hi, a: self.a, w: self.w, theta: self.theta }
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn m_lo(&self) -> usize {
        self.m_lo
    }
    pub fn m_hi(&self) -> usize {
        self.m_hi
    }
    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn w(&self) -> f64 {
        self.w
    }
    pub fn theta(&self) -> f64 {
        self.theta
    }
    /// Real mesh width `a / n`.
    pub fn h(&self) -> f64 {
        self.h
    }
    /// Complex mesh width of the high layer (zero when absent).
    pub fn h_gamma_hi(&self) -> Complex64 {
        self.h_hi
    }
    /// Complex mesh width of the low layer (zero when absent).
    pub fn h_gamma_lo(&self) -> Complex64 {
        self.h_lo
    }

    /// Ratio of layer to real mesh width. Uses the high layer when present.
    pub fn gamma(&self) -> Option<Complex64> {
        if self.m_hi > 0 {
            Some(self.h_hi / self.h)
        } else if self.m_lo > 0 {
            Some(self.h_lo / self.h)
        } else {
            None
        }
    }

    /// Total cell count `N`; nodes are indexed `0..=N`.
    pub fn cells(&self) -> usize {
        self.m_lo + self.n + self.m_hi
    }

    /// Number of interior (unknown-carrying) nodes.
    pub fn interior(&self) -> usize {
        self.cells() - 1
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn node(&self, j: usize) -> Complex64 {
        self.nodes[j]
    }

    /// Far end of the high layer, `a + w e^{iθ}`.
    pub fn end(&self) -> Complex64 {
        self.nodes[self.cells()]
    }

    pub fn segment_of_cell(&self, j: usize) -> Segment {
        if j < self.m_lo {
            Segment::LowLayer
        } else if j < self.m_lo + self.n {
            Segment::Real
        } else {
            Segment::HighLayer
        }
    }

    /// True when node `j` lies on the real segment `[0, a]`.
    pub fn is_real_node(&self, j: usize) -> bool {
        j >= self.m_lo && j <= self.m_lo + self.n
    }

    /// Width of cell `j`, i.e. `z_{j+1} - z_j`, taken from its segment so that
    /// widths within a segment are bitwise constant.
    pub fn mesh_width(&self, j: usize) -> Result<Complex64> {
        if j >= self.cells() {
            return Err(Error::IndexOutOfRange { index: j, len: self.cells() });
        }
        Ok(match self.segment_of_cell(j) {
            Segment::LowLayer => self.h_lo,
            Segment::Real => Complex64::new(self.h, 0.0),
            Segment::HighLayer => self.h_hi,
        })
    }

    pub fn can_coarsen(&self) -> bool {
        self.n.is_multiple_of(2) && self.m_lo.is_multiple_of(2) && self.m_hi.is_multiple_of(2) && self.n >= 4
    }

    /// Halve every cell count. Coarse nodes are the even-indexed fine nodes.
    pub fn coarsen(&self) -> Result<Self> {
        for (what, count) in [("n", self.n), ("m_lo", self.m_lo), ("m_hi", self.m_hi)] {
            if count % 2 != 0 {
                return Err(Error::OddCellCount { what, count });
            }
        }
        if self.n < 4 {
            return Err(Error::InvalidGrid("coarse grid would have fewer than 2 real cells".into()));
        }
        Ok(Self {
            n: self.n / 2,
            m_lo: self.m_lo / 2,
            m_hi: self.m_hi / 2,
            a: self.a,
            w: self.w,
            theta: self.theta,
            h: self.h * 2.0,
            h_lo: self.h_lo * 2.0,
            h_hi: self.h_hi * 2.0,
            nodes: self.nodes.iter().step_by(2).copied().collect(),
        })
    }
}

/// Tensor product of two ECS grids. Unknowns are the interior node pairs,
/// laid out row-major with the x index varying slowest.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorGrid2D {
    pub gx: EcsGrid1D,
    pub gy: EcsGrid1D,
}

impl TensorGrid2D {
    pub fn new(gx: EcsGrid1D, gy: EcsGrid1D) -> Self {
        Self { gx, gy }
    }

    pub fn nx(&self) -> usize {
        self.gx.interior()
    }

    pub fn ny(&self) -> usize {
        self.gy.interior()
    }

    pub fn unknowns(&self) -> usize {
        self.nx() * self.ny()
    }

    /// Unknown index of interior node `(i, j)`, both 1-based node indices.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.nx() && j >= 1 && j <= self.ny());
        (i - 1) * self.ny() + (j - 1)
    }

    /// Inverse of [`TensorGrid2D::index`].
    pub fn node_of(&self, idx: usize) -> (usize, usize) {
        (idx / self.ny() + 1, idx % self.ny() + 1)
    }

    pub fn can_coarsen(&self) -> bool {
        self.gx.can_coarsen() && self.gy.can_coarsen()
    }

    pub fn coarsen(&self) -> Result<Self> {
        Ok(Self { gx: self.gx.coarsen()?, gy: self.gy.coarsen()? })
    }
}
