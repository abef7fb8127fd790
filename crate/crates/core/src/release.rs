//! Free expansion after the walls are removed.
//!
//! The eigenstate is sampled on a periodic box, transformed with an FFT,
//! multiplied by the free propagator `exp(-i hbar k^2 t / 2m)` and transformed
//! back. There is no time-stepping error; the only approximations are the
//! sampling of the initial state and wrap-around at the box edges, which is
//! checked after every evolution.
//!
//! For large `t` the position density rescaled by `p = m x / t` approaches the
//! momentum density of the initial state.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::continuous;
use crate::error::{Error, Result};
use crate::quadrature::Quadrature;
use crate::well::{self, EigenstateIndex, WellSpec};

/// Largest density tolerated in the outer band of the box.
pub const EDGE_DENSITY_LIMIT: f64 = 1e-10;

/// Fraction of samples at each end of the box checked against [`EDGE_DENSITY_LIMIT`].
pub const EDGE_FRACTION: f64 = 0.01;

/// Samples per well half-width used by [`ReleaseBox::auto`] unless overridden.
pub const DEFAULT_RESOLUTION: usize = 64;

/// Probability captured below the momentum used for box sizing.
pub const BOX_QUANTILE: f64 = 0.9999;

/// Box length in multiples of the distance travelled at the quantile momentum.
pub const BOX_SAFETY: f64 = 6.0;

const MAX_AUTO_SAMPLES: usize = 1 << 25;

/// Periodic simulation box `[-L/2, L/2)` with a power-of-two sample count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReleaseBox {
    length: f64,
    samples: usize,
}

impl ReleaseBox {
    pub fn new(length: f64, samples: usize) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "box length",
                value: length,
                reason: "must be positive and finite",
            });
        }
        if samples < 2 || !samples.is_power_of_two() {
            return Err(Error::InvalidParameter {
                name: "box samples",
                value: samples as f64,
                reason: "must be a power of two",
            });
        }
        Ok(Self { length, samples })
    }

    /// Box for eigenstate `n` at time `t` with `resolution` samples per half-width.
    ///
    /// The length starts at `2a + 6 p_q t / m` (`p_q` the 99.99% momentum
    /// quantile), is rounded so that the walls `±a` are sample points, and the
    /// spacing is `a / resolution`.
    pub fn auto(spec: &WellSpec, n: EigenstateIndex, t: f64, resolution: usize) -> Result<Self> {
        let resolution = resolution.max(4);
        let a = spec.half_width();
        let p_q = momentum_quantile(spec, n, BOX_QUANTILE)?;
        let wanted = (2.0 * a + BOX_SAFETY * p_q * t.abs() / spec.mass()).max(4.0 * a);
        let dx = a / resolution as f64;
        let samples = ((wanted / dx).ceil() as usize).next_power_of_two();
        Self::new(samples as f64 * dx, samples)
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn spacing(&self) -> f64 {
        self.length / self.samples as f64
    }

    /// Sample positions; index `N/2` is the origin.
    pub fn positions(&self) -> Vec<f64> {
        let dx = self.spacing();
        let half = (self.samples / 2) as f64;
        (0..self.samples).map(|j| (j as f64 - half) * dx).collect()
    }

    fn doubled(&self) -> Self {
        Self {
            length: 2.0 * self.length,
            samples: 2 * self.samples,
        }
    }
}

/// Wavefunction on the box at time `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionSnapshot {
    pub t: f64,
    pub x: Vec<f64>,
    pub psi: Vec<Complex64>,
    pub density: Vec<f64>,
    pub dx: f64,
}

impl EvolutionSnapshot {
    pub fn norm(&self) -> f64 {
        self.density.iter().sum::<f64>() * self.dx
    }

    /// Largest density among the outer [`EDGE_FRACTION`] of samples on either side.
    pub fn edge_density(&self) -> f64 {
        let n = self.density.len();
        let band = ((n as f64 * EDGE_FRACTION) as usize).max(1).min(n);
        self.density[..band]
            .iter()
            .chain(&self.density[n - band..])
            .fold(0.0, |m, &d| m.max(d))
    }

    /// Position spread `sqrt(<x^2> - <x>^2)`.
    pub fn spread(&self) -> f64 {
        let norm = self.norm();
        let mean = self.x.iter().zip(&self.density).map(|(x, d)| x * d).sum::<f64>() * self.dx / norm;
        let second = self.x.iter().zip(&self.density).map(|(x, d)| x * x * d).sum::<f64>() * self.dx / norm;
        (second - mean * mean).max(0.0).sqrt()
    }

    /// `<p^2>/2m` with the nearest-neighbour difference operator on the
    /// periodic grid. That operator is diagonal in the FFT basis, so the value
    /// is conserved exactly by the evolution; it differs from the continuum
    /// value by the lattice dispersion `O((k dx)^2 / 12)`.
    pub fn kinetic_energy(&self, spec: &WellSpec) -> f64 {
        let n = self.psi.len();
        let grad2: f64 = (0..n)
            .map(|j| (self.psi[(j + 1) % n] - self.psi[j]).norm_sqr())
            .sum::<f64>()
            / self.dx;
        spec.hbar() * spec.hbar() * grad2 / (2.0 * spec.mass() * self.norm())
    }
}

/// Smallest `P` with `∫_{|p|<P} P_n(p) dp >= quantile`.
pub fn momentum_quantile(spec: &WellSpec, n: EigenstateIndex, quantile: f64) -> Result<f64> {
    if !(quantile > 0.0 && quantile < 1.0) {
        return Err(Error::InvalidParameter {
            name: "quantile",
            value: quantile,
            reason: "must lie in (0, 1)",
        });
    }
    let quad = Quadrature::default();
    let outer = Quadrature::new(32)?;
    let panel = 0.25 * PI * spec.hbar() / spec.half_width();
    let mut mass = 0.0;
    let mut lo = 0.0;
    // the density is even in p for every eigenstate
    loop {
        let hi = lo + panel;
        let piece = 2.0
            * outer.integrate(lo, hi, |p| {
                continuous::amplitude_transform(spec, n, p, &quad).norm_sqr()
            });
        if mass + piece >= quantile {
            // linear interpolation inside the last panel
            let frac = (quantile - mass) / piece;
            return Ok(lo + frac * panel);
        }
        mass += piece;
        lo = hi;
        if lo > 1e6 * panel {
            return Err(Error::InvalidParameter {
                name: "quantile",
                value: quantile,
                reason: "not reached",
            });
        }
    }
}

fn initial_samples(spec: &WellSpec, n: EigenstateIndex, x: &[f64]) -> Vec<Complex64> {
    x.iter()
        .map(|&x| Complex64::new(well::eigenfunction(spec, n, x), 0.0))
        .collect()
}

fn propagate(spec: &WellSpec, psi: &mut [Complex64], dx: f64, t: f64) {
    let n = psi.len();
    if t == 0.0 {
        return;
    }
    let mut planner = FftPlanner::<f64>::new();
    planner.plan_fft_forward(n).process(psi);
    let dk = 2.0 * PI / (n as f64 * dx);
    let coeff = spec.hbar() * t / (2.0 * spec.mass());
    let scale = 1.0 / n as f64;
    for (j, c) in psi.iter_mut().enumerate() {
        let freq = if j < n / 2 { j as f64 } else { j as f64 - n as f64 };
        let k = freq * dk;
        *c *= Complex64::from_polar(scale, -coeff * k * k);
    }
    planner.plan_fft_inverse(n).process(psi);
}

/// Evolves eigenstate `n` freely for time `t` on the given box.
///
/// Fails with [`Error::Aliasing`] when the density near the box edges exceeds
/// [`EDGE_DENSITY_LIMIT`].
pub fn evolve_free(spec: &WellSpec, n: EigenstateIndex, t: f64, bx: ReleaseBox) -> Result<EvolutionSnapshot> {
    if !t.is_finite() {
        return Err(Error::InvalidParameter {
            name: "t",
            value: t,
            reason: "must be finite",
        });
    }
    let x = bx.positions();
    let dx = bx.spacing();
    let mut psi = initial_samples(spec, n, &x);
    propagate(spec, &mut psi, dx, t);
    let density = psi.iter().map(|c| c.norm_sqr()).collect();
    let snapshot = EvolutionSnapshot { t, x, psi, density, dx };
    let edge_density = snapshot.edge_density();
    if edge_density > EDGE_DENSITY_LIMIT {
        return Err(Error::Aliasing {
            edge_density,
            threshold: EDGE_DENSITY_LIMIT,
        });
    }
    Ok(snapshot)
}

/// [`evolve_free`] on [`ReleaseBox::auto`], doubling the box until the edge
/// check passes.
pub fn evolve_free_auto(spec: &WellSpec, n: EigenstateIndex, t: f64, resolution: usize) -> Result<EvolutionSnapshot> {
    let mut bx = ReleaseBox::auto(spec, n, t, resolution)?;
    loop {
        match evolve_free(spec, n, t, bx) {
            Err(Error::Aliasing { .. }) if bx.samples < MAX_AUTO_SAMPLES => bx = bx.doubled(),
            other => return other,
        }
    }
}

/// Position density mapped onto momentum, `p = m x / t`, `P(p) = (t / m) |psi(x, t)|^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct FarField {
    pub t: f64,
    pub momenta: Vec<f64>,
    pub density: Vec<f64>,
}

impl FarField {
    /// `max |P_far(p) - reference(p)|` over `|p| <= p_limit`.
    pub fn sup_distance<F: Fn(f64) -> f64>(&self, reference: F, p_limit: f64) -> f64 {
        self.momenta
            .iter()
            .zip(&self.density)
            .filter(|(p, _)| p.abs() <= p_limit)
            .map(|(&p, &d)| (d - reference(p)).abs())
            .fold(0.0, f64::max)
    }
}

pub fn farfield_map(snapshot: &EvolutionSnapshot, spec: &WellSpec) -> Result<FarField> {
    let t = snapshot.t;
    if t == 0.0 {
        return Err(Error::ZeroTime);
    }
    let m = spec.mass();
    let scale = t.abs() / m;
    Ok(FarField {
        t,
        momenta: snapshot.x.iter().map(|x| m * x / t).collect(),
        density: snapshot.density.iter().map(|d| scale * d).collect(),
    })
}
