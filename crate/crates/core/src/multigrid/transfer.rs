//! Index-based grid transfers between a tensor grid and its coarsening.
//!
//! Coarse interior node `(I, J)` coincides with fine node `(2I, 2J)`.
//! Restriction is 9-point full weighting and prolongation is bilinear
//! interpolation, so that `R = Pᵀ / 4`. Mesh widths play no role.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::TensorGrid2D;
use crate::linalg::ZERO;

fn check_pair(fine: &TensorGrid2D, coarse: &TensorGrid2D) -> Result<()> {
    let ok = fine.gx.cells() == 2 * coarse.gx.cells() && fine.gy.cells() == 2 * coarse.gy.cells();
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidGrid(format!(
            "grids {}x{} and {}x{} cells are not a coarsening pair",
            fine.gx.cells(),
            fine.gy.cells(),
            coarse.gx.cells(),
            coarse.gy.cells()
        )))
    }
}

/// Full-weighting restriction of a fine-grid vector.
pub fn restrict_fw(fine: &[Complex64], fine_grid: &TensorGrid2D, coarse_grid: &TensorGrid2D) -> Result<Vec<Complex64>> {
    check_pair(fine_grid, coarse_grid)?;
    if fine.len() != fine_grid.unknowns() {
        return Err(Error::SizeMismatch { expected: fine_grid.unknowns(), got: fine.len() });
    }
    let mut out = vec![ZERO; coarse_grid.unknowns()];
    restrict_into(fine, fine_grid.ny(), &mut out, coarse_grid.nx(), coarse_grid.ny());
    Ok(out)
}

/// Bilinear prolongation of a coarse-grid vector.
pub fn prolong_bilinear(coarse: &[Complex64], coarse_grid: &TensorGrid2D, fine_grid: &TensorGrid2D) -> Result<Vec<Complex64>> {
    check_pair(fine_grid, coarse_grid)?;
    if coarse.len() != coarse_grid.unknowns() {
        return Err(Error::SizeMismatch { expected: coarse_grid.unknowns(), got: coarse.len() });
    }
    let mut out = vec![ZERO; fine_grid.unknowns()];
    prolong_add_into(coarse, coarse_grid.nx(), coarse_grid.ny(), &mut out, fine_grid.nx(), fine_grid.ny());
    Ok(out)
}

/// `out = R fine`. Interior sizes: fine `(2nxc+1) × (2nyc+1)`.
pub(crate) fn restrict_into(fine: &[Complex64], nyf: usize, out: &mut [Complex64], nxc: usize, nyc: usize) {
    // 0-based fine interior index of fine node (2I, 2J) is (2I-1, 2J-1).
    for ic in 0..nxc {
        let fi = 2 * ic + 1;
        for jc in 0..nyc {
            let fj = 2 * jc + 1;
            let row = |i: usize| {
                let base = i * nyf + fj;
                fine[base - 1] + fine[base] * 2.0 + fine[base + 1]
            };
            out[ic * nyc + jc] = (row(fi - 1) + row(fi) * 2.0 + row(fi + 1)) / 16.0;
        }
    }
}

/// `fine += P coarse`.
pub(crate) fn prolong_add_into(
    coarse: &[Complex64],
    nxc: usize,
    nyc: usize,
    fine: &mut [Complex64],
    nxf: usize,
    nyf: usize,
) {
    // Coarse value at 1-based coarse node (I, J), zero on the boundary.
    let at = |ci: usize, cj: usize| -> Complex64 {
        if ci == 0 || cj == 0 || ci > nxc || cj > nyc {
            ZERO
        } else {
            coarse[(ci - 1) * nyc + (cj - 1)]
        }
    };
    for i in 1..=nxf {
        for j in 1..=nyf {
            let v = match (i % 2 == 0, j % 2 == 0) {
                (true, true) => at(i / 2, j / 2),
                (true, false) => (at(i / 2, j / 2) + at(i / 2, j / 2 + 1)) * 0.5,
                (false, true) => (at(i / 2, j / 2) + at(i / 2 + 1, j / 2)) * 0.5,
                (false, false) => {
                    (at(i / 2, j / 2) + at(i / 2 + 1, j / 2) + at(i / 2, j / 2 + 1) + at(i / 2 + 1, j / 2 + 1)) * 0.25
                }
            };
            fine[(i - 1) * nyf + (j - 1)] += v;
        }
    }
}
