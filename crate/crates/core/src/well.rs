//! Energy eigenstates of the infinite square well on `(-a, a)`.
//!
//! Odd quantum numbers give even (cosine) states, even quantum numbers odd
//! (sine) states:
//!
//! ```text
//! psi_n(x) = a^{-1/2} cos(n pi x / 2a)   n odd
//! psi_n(x) = a^{-1/2} sin(n pi x / 2a)   n even
//! E_n      = n^2 pi^2 hbar^2 / (8 m a^2)
//! ```
//!
//! Outside the well the wavefunction is exactly zero.

use std::f64::consts::PI;

use crate::error::{require_positive, Error, Result};
use crate::quadrature::Quadrature;

/// Physical parameters of the well: half-width, mass and the action constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellSpec {
    half_width: f64,
    mass: f64,
    hbar: f64,
}

impl WellSpec {
    pub fn new(half_width: f64, mass: f64, hbar: f64) -> Result<Self> {
        Ok(Self {
            half_width: require_positive("half_width", half_width)?,
            mass: require_positive("mass", mass)?,
            hbar: require_positive("hbar", hbar)?,
        })
    }

    /// `a = m = hbar = 1`.
    pub fn natural() -> Self {
        Self {
            half_width: 1.0,
            mass: 1.0,
            hbar: 1.0,
        }
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// The momentum unit `pi hbar / 2a`; state `n` is built from `±n` times it.
    pub fn momentum_quantum(&self) -> f64 {
        PI * self.hbar / (2.0 * self.half_width)
    }

    /// Wave number `n pi / 2a` of eigenstate `n`.
    pub fn wave_number(&self, n: EigenstateIndex) -> f64 {
        n.get() as f64 * PI / (2.0 * self.half_width)
    }
}

impl Default for WellSpec {
    fn default() -> Self {
        Self::natural()
    }
}

/// Quantum number `n >= 1` of a well eigenstate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EigenstateIndex(u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// cosine states, odd `n`
    Even,
    /// sine states, even `n`
    Odd,
}

impl EigenstateIndex {
    pub fn new(n: i64) -> Result<Self> {
        if n < 1 || n > u32::MAX as i64 {
            return Err(Error::QuantumNumber { got: n, min: 1 });
        }
        Ok(Self(n as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn parity(self) -> Parity {
        if self.0 % 2 == 1 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl TryFrom<i64> for EigenstateIndex {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        Self::new(n)
    }
}

pub fn energy(spec: &WellSpec, n: EigenstateIndex) -> f64 {
    let n = n.get() as f64;
    let a = spec.half_width;
    n * n * PI * PI * spec.hbar * spec.hbar / (8.0 * spec.mass * a * a)
}

/// Energy from a raw integer quantum number, rejecting `n <= 0`.
pub fn energy_of(spec: &WellSpec, n: i64) -> Result<f64> {
    Ok(energy(spec, EigenstateIndex::new(n)?))
}

pub fn eigenfunction(spec: &WellSpec, n: EigenstateIndex, x: f64) -> f64 {
    let a = spec.half_width;
    if x.abs() >= a {
        return 0.0;
    }
    let arg = spec.wave_number(n) * x;
    let amp = a.sqrt().recip();
    match n.parity() {
        Parity::Even => amp * arg.cos(),
        Parity::Odd => amp * arg.sin(),
    }
}

/// `|∫ psi_n^2 dx - 1|` over the well by Gauss-Legendre quadrature.
pub fn norm_check(spec: &WellSpec, n: EigenstateIndex, quad: &Quadrature) -> f64 {
    let a = spec.half_width;
    let norm = quad.integrate(-a, a, |x| eigenfunction(spec, n, x).powi(2));
    (norm - 1.0).abs()
}

/// `<psi_n|psi_m>` over the well.
pub fn overlap(spec: &WellSpec, n: EigenstateIndex, m: EigenstateIndex, quad: &Quadrature) -> f64 {
    let a = spec.half_width;
    quad.integrate(-a, a, |x| eigenfunction(spec, n, x) * eigenfunction(spec, m, x))
}

/// Position moments `(<x>, <x^2>)` of eigenstate `n`.
pub fn position_moments(spec: &WellSpec, n: EigenstateIndex, quad: &Quadrature) -> (f64, f64) {
    let a = spec.half_width;
    let mean = quad.integrate(-a, a, |x| x * eigenfunction(spec, n, x).powi(2));
    let second = quad.integrate(-a, a, |x| x * x * eigenfunction(spec, n, x).powi(2));
    (mean, second)
}
