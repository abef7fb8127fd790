use num_complex::Complex64;

use crate::error::{Error, Result};

/// Rectangular node grid, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
}

impl Grid2D {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64, nx: usize, ny: usize) -> Result<Self> {
        if !(x_max > x_min && y_max > y_min) {
            return Err(Error::InvalidParameter {
                name: "grid extent",
                value: (x_max - x_min).min(y_max - y_min),
                reason: "must be positive",
            });
        }
        if nx < 5 || ny < 5 {
            return Err(Error::InvalidParameter {
                name: "grid nodes",
                value: nx.min(ny) as f64,
                reason: "need at least 5 nodes per axis",
            });
        }
        Ok(Self {
            x_min,
            x_max,
            y_min,
            y_max,
            nx,
            ny,
        })
    }

    /// Grid centred on `(cx, cy)` with half-extents `hx`, `hy` and the given
    /// spacing (rounded down so that it divides the extent).
    pub fn centered(cx: f64, cy: f64, hx: f64, hy: f64, spacing: f64) -> Result<Self> {
        let nx = (2.0 * hx / spacing).ceil() as usize + 1;
        let ny = (2.0 * hy / spacing).ceil() as usize + 1;
        let hx = 0.5 * spacing * (nx - 1) as f64;
        let hy = 0.5 * spacing * (ny - 1) as f64;
        Self::new(cx - hx, cx + hx, cy - hy, cy + hy, nx, ny)
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / (self.nx - 1) as f64
    }

    pub fn dy(&self) -> f64 {
        (self.y_max - self.y_min) / (self.ny - 1) as f64
    }

    pub fn x(&self, ix: usize) -> f64 {
        self.x_min + ix as f64 * self.dx()
    }

    pub fn y(&self, iy: usize) -> f64 {
        self.y_min + iy as f64 * self.dy()
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, ix: usize, iy: usize) -> usize {
        iy * self.nx + ix
    }

    /// Node coordinates in storage order (rows of constant y).
    pub fn nodes(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        (0..self.ny).flat_map(move |iy| (0..self.nx).map(move |ix| (self.x(ix), self.y(iy))))
    }
}

/// Complex amplitude on a [`Grid2D`], stored row-major (x fastest).
#[derive(Debug, Clone, PartialEq)]
pub struct GridField2D {
    pub grid: Grid2D,
    pub values: Vec<Complex64>,
}

impl GridField2D {
    pub fn from_fn<F: Fn(f64, f64) -> Complex64>(grid: Grid2D, f: F) -> Self {
        let values = grid.nodes().map(|(x, y)| f(x, y)).collect();
        Self { grid, values }
    }

    /// Normalized Gaussian `exp(-|r - r0|^2 / 2 w^2)`.
    pub fn gaussian(grid: Grid2D, x0: f64, y0: f64, width: f64) -> Self {
        let mut g = Self::from_fn(grid, |x, y| {
            let r2 = (x - x0).powi(2) + (y - y0).powi(2);
            Complex64::new((-r2 / (2.0 * width * width)).exp(), 0.0)
        });
        g.normalize();
        g
    }

    pub fn at(&self, ix: usize, iy: usize) -> Complex64 {
        self.values[self.grid.index(ix, iy)]
    }

    /// Discrete L2 norm `sqrt(Σ |psi|^2 dx dy)`, summed in storage order.
    pub fn norm(&self) -> f64 {
        let area = self.grid.dx() * self.grid.dy();
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * area).sqrt()
    }

    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            let inv = n.recip();
            self.values.iter_mut().for_each(|v| *v *= inv);
        }
    }

    pub fn density(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }

    /// `<self|other> = Σ conj(self) other dx dy`; both fields must share a grid.
    pub fn inner(&self, other: &GridField2D) -> Complex64 {
        assert_eq!(self.grid, other.grid, "inner product needs a common grid");
        let area = self.grid.dx() * self.grid.dy();
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            * area
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn centered_grid_spacing() {
        let g = Grid2D::centered(1.0, -2.0, 3.0, 2.0, 0.125).unwrap();
        assert_relative_eq!(g.dx(), 0.125, epsilon = 1e-15);
        assert_relative_eq!(g.dy(), 0.125, epsilon = 1e-15);
        assert_eq!(g.nx, 49);
        assert_eq!(g.ny, 33);
        assert_relative_eq!(g.x(24), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn rejects_degenerate_grid() {
        assert!(Grid2D::new(0.0, 0.0, 0.0, 1.0, 10, 10).is_err());
        assert!(Grid2D::new(0.0, 1.0, 0.0, 1.0, 3, 10).is_err());
    }

    #[test]
    fn gaussian_is_normalized_with_exact_norm() {
        let g = Grid2D::centered(0.0, 0.0, 8.0, 8.0, 0.125).unwrap();
        let f = GridField2D::gaussian(g, 0.5, -0.25, 1.0);
        assert!((f.norm() - 1.0).abs() < 1e-12);
        assert!((f.inner(&f).re - 1.0).abs() < 1e-12);
    }
}
