//! Level degeneracy from three independent counts, and the Hall current.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{Grid2D, GridField2D, LadderPolynomial, LandauSpec};
use crate::error::{require_positive, Error, Result};

/// Flux ratio `Phi / phi_0` and its floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Degeneracy {
    pub ratio: f64,
    pub count: u64,
}

pub fn degeneracy(spec: &LandauSpec) -> Degeneracy {
    let ratio = spec.flux() / spec.flux_quantum();
    // absorb rounding when the ratio is an integer up to a few ulps
    let count = (ratio * (1.0 + 4.0 * f64::EPSILON)).floor() as u64;
    Degeneracy { ratio, count }
}

/// Number of momenta `p_x = 2 pi hbar k / Lx` whose guiding centre lies in `[0, Ly]`.
pub fn guiding_center_count(spec: &LandauSpec) -> u64 {
    let dp = 2.0 * PI * spec.hbar() / spec.lx();
    // every admissible k satisfies |k| <= Ly / |dy_p/dk|
    let dy = spec.guiding_center(dp).abs();
    let bound = (spec.ly() / dy).ceil() as i64 + 1;
    (-bound..=bound)
        .filter(|&k| {
            let y_p = spec.guiding_center(dp * k as f64);
            (0.0..=spec.ly()).contains(&y_p)
        })
        .count() as u64
}

/// `ln |P(z, z*)|` evaluated term by term relative to the largest term, so
/// high powers do not overflow.
fn log_abs_polynomial(poly: &LadderPolynomial, z: Complex64) -> f64 {
    let (r, theta) = z.to_polar();
    if r == 0.0 {
        return poly
            .terms()
            .find(|&((i, j), _)| i == 0 && j == 0)
            .map_or(f64::NEG_INFINITY, |(_, c)| c.abs().ln());
    }
    let ln_r = r.ln();
    let logs: Vec<(f64, f64, f64)> = poly
        .terms()
        .map(|((i, j), c)| {
            let lm = c.abs().ln() + (i + j) as f64 * ln_r;
            (lm, c.signum(), (i as f64 - j as f64) * theta)
        })
        .collect();
    let top = logs.iter().map(|t| t.0).fold(f64::NEG_INFINITY, f64::max);
    let sum: Complex64 = logs
        .iter()
        .map(|&(lm, s, phase)| Complex64::from_polar(s * (lm - top).exp(), phase))
        .sum();
    top + sum.norm().ln()
}

/// Radius of the density maximum of the symmetric-gauge state `(n, l)`, from
/// the closed-form polynomial: coarse scan then golden-section refinement.
pub fn ring_radius(spec: &LandauSpec, n: u32, l: u32) -> f64 {
    let poly = LadderPolynomial::new(n, l);
    let two_l = 2.0 * spec.magnetic_length();
    // log density along the ray theta = 0, as a function of r / 2l
    let log_density = |u: f64| 2.0 * log_abs_polynomial(&poly, Complex64::new(u, 0.0)) - 2.0 * u * u;

    let u_max = (2.0 * (n + l) as f64 + 4.0).sqrt() + 2.0;
    let steps = 4000;
    let h = u_max / steps as f64;
    let best = (0..=steps)
        .map(|i| i as f64 * h)
        .max_by(|a, b| log_density(*a).total_cmp(&log_density(*b)))
        .unwrap_or(0.0);

    let (mut lo, mut hi) = ((best - h).max(0.0), best + h);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..100 {
        let m1 = hi - g * (hi - lo);
        let m2 = lo + g * (hi - lo);
        if log_density(m1) < log_density(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    0.5 * (lo + hi) * two_l
}

/// Number of lowest-level rings `L = 0, 1, ...` whose circle encloses an area
/// no larger than the sample area `Lx Ly`.
pub fn ring_count(spec: &LandauSpec) -> u64 {
    let area = spec.lx() * spec.ly();
    let mut l = 0u32;
    while PI * ring_radius(spec, 0, l).powi(2) <= area {
        l += 1;
    }
    l as u64
}

/// Hall currents along x for a potential drop `V` across the sample width Ly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HallCurrent {
    /// `q c V / Phi`.
    pub per_electron: f64,
    /// `(Phi / phi_0) q c V / Phi`.
    pub per_level: f64,
    pub degeneracy_ratio: f64,
    /// `|per_level / V|` computed through the flux ratio, so `Phi` cancels.
    pub conductance: f64,
}

pub fn hall_current(spec: &LandauSpec, voltage: f64) -> HallCurrent {
    let q = spec.charge();
    let c = spec.light_speed();
    let flux = spec.flux();
    let ratio = flux / spec.flux_quantum();
    let per_electron = q * c * voltage / flux;
    HallCurrent {
        per_electron,
        per_level: ratio * per_electron,
        degeneracy_ratio: ratio,
        conductance: (ratio * q * c / flux).abs(),
    }
}

/// Per-electron current from a sampled lowest-level state with canonical
/// momentum `p_x` whose guiding centre carries the drift shift
/// `y_p = (c / q B)(m c V / (B Ly) - p_x)`: `I = (q / m) <pi_x> / Lx` with
/// `pi_x = p_x - (q / c) A_x` evaluated by fourth-order differences.
pub fn hall_current_numeric(spec: &LandauSpec, voltage: f64, p_x: f64, spacing: f64) -> Result<f64> {
    let spacing = require_positive("spacing", spacing)?;
    if !voltage.is_finite() {
        return Err(Error::InvalidParameter {
            name: "voltage",
            value: voltage,
            reason: "must be finite",
        });
    }
    let (q, b, c, m) = (spec.charge(), spec.field(), spec.light_speed(), spec.mass());
    let l = spec.magnetic_length();
    let drift = m * c * voltage / (b * spec.ly());
    let y_p = c / (q * b) * (drift - p_x);

    let grid = Grid2D::centered(0.0, y_p, 2.0 * l, 8.0 * l, spacing)?;
    let k = p_x / spec.hbar();
    let mut state = GridField2D::from_fn(grid, |x, y| {
        let u = (y - y_p) / l;
        Complex64::from_polar((-0.5 * u * u).exp(), k * x)
    });
    state.normalize();

    let i = Complex64::i();
    let hbar = spec.hbar();
    let h = grid.dx();
    let mut num = Complex64::new(0.0, 0.0);
    let mut den = 0.0;
    for iy in 0..grid.ny {
        let y = grid.y(iy);
        for ix in 2..grid.nx - 2 {
            let f = |dx: isize| state.values[grid.index((ix as isize + dx) as usize, iy)];
            let dpsi = (f(-2) - f(2) + (f(1) - f(-1)) * 8.0) / (12.0 * h);
            let psi = f(0);
            // A_x = -B y in the Landau gauge
            let pi_psi = -i * hbar * dpsi + psi * (q / c * b * y);
            num += psi.conj() * pi_psi;
            den += psi.norm_sqr();
        }
    }
    Ok(q / m * (num.re / den) / spec.lx())
}
