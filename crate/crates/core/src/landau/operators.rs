//! Finite-difference operator checks with fourth-order central stencils.

use num_complex::Complex64;

use super::{GaugeField, GridField2D, LandauSpec};
use crate::error::{Error, Result};

/// Largest allowed grid spacing in units of the magnetic length.
pub const MAX_SPACING: f64 = 1.0 / 8.0;

fn check_resolution(spec: &LandauSpec, field: &GridField2D) -> Result<()> {
    let limit = MAX_SPACING * spec.magnetic_length();
    let spacing = field.grid.dx().max(field.grid.dy());
    if spacing > limit * (1.0 + 1e-12) {
        return Err(Error::Resolution { spacing, limit });
    }
    Ok(())
}

// (-f2 + 8 f1 - 8 f-1 + f-2) / 12h
fn d1(m2: Complex64, m1: Complex64, p1: Complex64, p2: Complex64, h: f64) -> Complex64 {
    (m2 - p2 + (p1 - m1) * 8.0) / (12.0 * h)
}

// (-f2 + 16 f1 - 30 f0 + 16 f-1 - f-2) / 12h^2
fn d2(m2: Complex64, m1: Complex64, c: Complex64, p1: Complex64, p2: Complex64, h: f64) -> Complex64 {
    (-(m2 + p2) + (m1 + p1) * 16.0 - c * 30.0) / (12.0 * h * h)
}

/// Dense 2-D array view used by the stencil helpers.
struct Plane<'a> {
    nx: usize,
    values: &'a [Complex64],
}

impl Plane<'_> {
    fn at(&self, ix: usize, iy: usize) -> Complex64 {
        self.values[iy * self.nx + ix]
    }

    fn dx(&self, ix: usize, iy: usize, h: f64) -> Complex64 {
        d1(
            self.at(ix - 2, iy),
            self.at(ix - 1, iy),
            self.at(ix + 1, iy),
            self.at(ix + 2, iy),
            h,
        )
    }

    fn dy(&self, ix: usize, iy: usize, h: f64) -> Complex64 {
        d1(
            self.at(ix, iy - 2),
            self.at(ix, iy - 1),
            self.at(ix, iy + 1),
            self.at(ix, iy + 2),
            h,
        )
    }
}

/// Relative residual `‖H psi - E psi‖ / ‖psi‖` over interior nodes, with
/// `H = (p - q A / c)^2 / 2m` expanded as
/// `(-hbar^2 ∇^2 + 2 i hbar (q/c) A·∇ + (q/c)^2 |A|^2) / 2m` (both gauges are divergence free).
pub fn hamiltonian_residual(spec: &LandauSpec, gauge: &GaugeField, state: &GridField2D, energy: f64) -> Result<f64> {
    check_resolution(spec, state)?;
    let g = state.grid;
    let (hx, hy) = (g.dx(), g.dy());
    let plane = Plane {
        nx: g.nx,
        values: &state.values,
    };
    let hbar = spec.hbar();
    let qc = spec.coupling();
    let inv2m = 0.5 / spec.mass();
    let i = Complex64::i();

    let mut num = 0.0;
    let mut den = 0.0;
    for iy in 2..g.ny - 2 {
        let y = g.y(iy);
        for ix in 2..g.nx - 2 {
            let x = g.x(ix);
            let psi = plane.at(ix, iy);
            let lap = d2(
                plane.at(ix - 2, iy),
                plane.at(ix - 1, iy),
                psi,
                plane.at(ix + 1, iy),
                plane.at(ix + 2, iy),
                hx,
            ) + d2(
                plane.at(ix, iy - 2),
                plane.at(ix, iy - 1),
                psi,
                plane.at(ix, iy + 1),
                plane.at(ix, iy + 2),
                hy,
            );
            let (ax, ay) = gauge.potential(x, y);
            let a_grad = plane.dx(ix, iy, hx) * ax + plane.dy(ix, iy, hy) * ay;
            let h_psi =
                (-lap * hbar * hbar + i * a_grad * (2.0 * hbar * qc) + psi * (qc * qc * (ax * ax + ay * ay))) * inv2m;
            num += (h_psi - psi * energy).norm_sqr();
            den += psi.norm_sqr();
        }
    }
    Ok((num / den).sqrt())
}

/// Relative residual `‖[pi_x, pi_y] psi - i hbar (q/c) B psi‖ / ‖psi‖`, the
/// commutator applied by composing first-derivative stencils.
pub fn commutator_check(spec: &LandauSpec, gauge: &GaugeField, state: &GridField2D) -> Result<f64> {
    check_resolution(spec, state)?;
    let g = state.grid;
    let (hx, hy) = (g.dx(), g.dy());
    let hbar = spec.hbar();
    let qc = spec.coupling();
    let i = Complex64::i();
    let plane = Plane {
        nx: g.nx,
        values: &state.values,
    };

    // pi_x psi and pi_y psi on nodes at least 2 from the edge, zero elsewhere
    let mut pix = vec![Complex64::new(0.0, 0.0); g.len()];
    let mut piy = pix.clone();
    for iy in 2..g.ny - 2 {
        for ix in 2..g.nx - 2 {
            let (ax, ay) = gauge.potential(g.x(ix), g.y(iy));
            let psi = plane.at(ix, iy);
            let k = g.index(ix, iy);
            pix[k] = -i * hbar * plane.dx(ix, iy, hx) - psi * (qc * ax);
            piy[k] = -i * hbar * plane.dy(ix, iy, hy) - psi * (qc * ay);
        }
    }
    let pix = Plane { nx: g.nx, values: &pix };
    let piy = Plane { nx: g.nx, values: &piy };

    let expected = i * hbar * qc * gauge.field;
    let mut num = 0.0;
    let mut den = 0.0;
    for iy in 4..g.ny - 4 {
        for ix in 4..g.nx - 4 {
            let (ax, ay) = gauge.potential(g.x(ix), g.y(iy));
            let psi = plane.at(ix, iy);
            // pi_x (pi_y psi) - pi_y (pi_x psi)
            let xy = -i * hbar * piy.dx(ix, iy, hx) - piy.at(ix, iy) * (qc * ax);
            let yx = -i * hbar * pix.dy(ix, iy, hy) - pix.at(ix, iy) * (qc * ay);
            num += (xy - yx - psi * expected).norm_sqr();
            den += psi.norm_sqr();
        }
    }
    Ok((num / den).sqrt())
}

/// Radius of maximum density about `(cx, cy)`: a least-squares parabola in `r`
/// through the nodes within two grid steps (radially) of the densest node.
pub fn radial_peak(field: &GridField2D, cx: f64, cy: f64) -> f64 {
    let g = field.grid;
    let density = field.density();
    let radii: Vec<f64> = g
        .nodes()
        .map(|(x, y)| ((x - cx).powi(2) + (y - cy).powi(2)).sqrt())
        .collect();
    let imax = (0..density.len())
        .max_by(|&a, &b| density[a].total_cmp(&density[b]))
        .unwrap_or(0);
    let r0 = radii[imax];
    let window = 2.0 * g.dx().max(g.dy());
    // normal equations for d = c0 + c1 (r - r0) + c2 (r - r0)^2
    let mut s = [0.0f64; 5];
    let mut t = [0.0f64; 3];
    for (r, d) in radii.iter().zip(&density) {
        let u = r - r0;
        if u.abs() <= window {
            let mut p = 1.0;
            for k in 0..5 {
                s[k] += p;
                if k < 3 {
                    t[k] += p * d;
                }
                p *= u;
            }
        }
    }
    let m = [[s[0], s[1], s[2]], [s[1], s[2], s[3]], [s[2], s[3], s[4]]];
    match solve3(m, t) {
        Some([_, c1, c2]) if c2 < 0.0 => (r0 - c1 / (2.0 * c2)).max(0.0),
        _ => r0,
    }
}

fn solve3(m: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let det = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(&m);
    if d.abs() < 1e-300 {
        return None;
    }
    let mut out = [0.0; 3];
    for (col, o) in out.iter_mut().enumerate() {
        let mut mc = m;
        for row in 0..3 {
            mc[row][col] = b[row];
        }
        *o = det(&mc) / d;
    }
    Some(out)
}
