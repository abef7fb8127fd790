use std::collections::BTreeMap;
use std::f64::consts::PI;

use log::warn;
use num_complex::Complex64;

use super::{hermite, Grid2D, GridField2D, LandauSpec};
use crate::error::{Error, Result};

/// `P(z, z*) exp(-z* z)` with `P = Σ c_ij z^i z*^j`, the closed form of the
/// ladder operators applied to the Gaussian.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderPolynomial {
    coeffs: BTreeMap<(u32, u32), f64>,
}

impl LadderPolynomial {
    /// `(z - d/dz*)^l (z* - d/dz)^n exp(-z* z)`.
    pub fn new(n: u32, l: u32) -> Self {
        let mut p = Self {
            coeffs: BTreeMap::from([((0, 0), 1.0)]),
        };
        for _ in 0..n {
            p = p.raise_level();
        }
        for _ in 0..l {
            p = p.raise_angular();
        }
        p
    }

    // (z* - d/dz)(P e) = (2 z* P - dP/dz) e
    fn raise_level(&self) -> Self {
        let mut out = BTreeMap::new();
        for (&(i, j), &c) in &self.coeffs {
            *out.entry((i, j + 1)).or_insert(0.0) += 2.0 * c;
            if i > 0 {
                *out.entry((i - 1, j)).or_insert(0.0) -= i as f64 * c;
            }
        }
        Self { coeffs: prune(out) }
    }

    // (z - d/dz*)(P e) = (2 z P - dP/dz*) e
    fn raise_angular(&self) -> Self {
        let mut out = BTreeMap::new();
        for (&(i, j), &c) in &self.coeffs {
            *out.entry((i + 1, j)).or_insert(0.0) += 2.0 * c;
            if j > 0 {
                *out.entry((i, j - 1)).or_insert(0.0) -= j as f64 * c;
            }
        }
        Self { coeffs: prune(out) }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), f64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn polynomial(&self, z: Complex64) -> Complex64 {
        let zc = z.conj();
        self.coeffs.iter().map(|(&(i, j), &c)| z.powu(i) * zc.powu(j) * c).sum()
    }

    /// Polynomial times the Gaussian.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.polynomial(z) * (-z.norm_sqr()).exp()
    }
}

fn prune(map: BTreeMap<(u32, u32), f64>) -> BTreeMap<(u32, u32), f64> {
    map.into_iter().filter(|(_, c)| *c != 0.0).collect()
}

fn check_index(name: &'static str, v: i32) -> Result<u32> {
    if v < 0 {
        return Err(Error::InvalidParameter {
            name,
            value: v as f64,
            reason: "must be non-negative",
        });
    }
    Ok(v as u32)
}

/// Complex coordinate `z = (x + i s y) / 2l`, `s` the charge sign.
pub(crate) fn complex_coordinate(spec: &LandauSpec, x: f64, y: f64) -> Complex64 {
    let two_l = 2.0 * spec.magnetic_length();
    Complex64::new(x / two_l, spec.chirality() * y / two_l)
}

/// Landau-gauge state `exp(i p_x x / hbar) exp(-(y - y_p)^2 / 2l^2) H_n((y - y_p) / l)`,
/// normalized on the grid.
pub fn landau_gauge_state(spec: &LandauSpec, grid: Grid2D, n: i32, p_x: f64) -> Result<GridField2D> {
    let n = check_index("n", n)? as i32;
    let l = spec.magnetic_length();
    let y_p = spec.guiding_center(p_x);
    if !(0.0..=spec.ly()).contains(&y_p) {
        warn!(
            "guiding centre y_p = {y_p:.6} lies outside the sample [0, {}]",
            spec.ly()
        );
    }
    let k = p_x / spec.hbar();
    let mut field = GridField2D::from_fn(grid, |x, y| {
        let u = (y - y_p) / l;
        let amp = (-0.5 * u * u).exp() * hermite(n, u).expect("n checked");
        Complex64::from_polar(amp, k * x)
    });
    field.normalize();
    Ok(field)
}

/// Symmetric-gauge state `(z - d/dz*)^L (z* - d/dz)^n exp(-z* z)`, normalized on the grid.
pub fn symmetric_gauge_state(spec: &LandauSpec, grid: Grid2D, n: i32, l: i32) -> Result<GridField2D> {
    let n = check_index("n", n)?;
    let l = check_index("L", l)?;
    let poly = LadderPolynomial::new(n, l);
    let mut field = GridField2D::from_fn(grid, |x, y| poly.eval(complex_coordinate(spec, x, y)));
    field.normalize();
    Ok(field)
}

/// Unit-modulus prefactor `exp(z z_i* - z* z_i)`.
pub fn vortex_phase(z: Complex64, z_i: Complex64) -> Complex64 {
    (z * z_i.conj() - z.conj() * z_i).exp()
}

/// Lowest-level state `exp(z z_i* - z* z_i) exp(-|z - z_i|^2)` centred on the
/// physical point `center = x_c + i y_c`, normalized on the grid.
pub fn vortex_state(spec: &LandauSpec, grid: Grid2D, center: Complex64) -> GridField2D {
    let z_i = complex_coordinate(spec, center.re, center.im);
    let mut field = GridField2D::from_fn(grid, |x, y| {
        let z = complex_coordinate(spec, x, y);
        vortex_phase(z, z_i) * (-(z - z_i).norm_sqr()).exp()
    });
    field.normalize();
    field
}

/// Centres of a square lattice with one flux quantum per cell
/// (lattice constant `sqrt(2 pi) l`) inside `[0, Lx) x [0, Ly)`.
pub fn vortex_lattice(spec: &LandauSpec) -> Vec<Complex64> {
    let step = (2.0 * PI).sqrt() * spec.magnetic_length();
    let nx = (spec.lx() / step).floor() as usize;
    let ny = (spec.ly() / step).floor() as usize;
    (0..ny)
        .flat_map(|j| (0..nx).map(move |i| Complex64::new((i as f64 + 0.5) * step, (j as f64 + 0.5) * step)))
        .collect()
}
