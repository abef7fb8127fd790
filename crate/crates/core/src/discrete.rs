//! Discrete momentum spectrum on the well interval.
//!
//! `-i hbar d/dx` restricted to `(-a, a)` becomes self-adjoint once a boundary
//! condition `psi(a) = e^{i theta} psi(-a)` is fixed. Each `theta` gives an
//! orthonormal plane-wave basis
//!
//! ```text
//! u_k(x) = (2a)^{-1/2} exp(i p'_k x / hbar),   p'_k = (k + theta / 2 pi) pi hbar / a
//! ```
//!
//! `theta = pi` yields the odd multiples of `pi hbar / 2a` and `theta = 0` the
//! even ones. The ground state is then exactly two spikes at `±pi hbar / 2a`,
//! each with weight 1/2.
//!
//! The choice of extension is a reconstruction: the two-spike result only
//! fixes which momenta appear for the well eigenstates, not a basis
//! convention for arbitrary states.

use std::f64::consts::{PI, TAU};
use std::ops::RangeInclusive;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::continuous;
use crate::error::{Error, Result};
use crate::quadrature::Quadrature;
use crate::well::{self, EigenstateIndex, Parity, WellSpec};

pub const DEFAULT_K_MAX: i64 = 64;

/// Input states must have `|‖psi‖^2 - 1|` at most this.
pub const NORM_TOLERANCE: f64 = 1e-6;

/// Boundary phase `theta ∈ [0, 2π)` of the extension `psi(a) = e^{iθ} psi(-a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtensionPhase(f64);

impl ExtensionPhase {
    /// Wraps any finite angle into `[0, 2π)`.
    pub fn new(theta: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "theta",
                value: theta,
                reason: "must be finite",
            });
        }
        let mut t = theta.rem_euclid(TAU);
        if t >= TAU {
            t = 0.0;
        }
        Ok(Self(t))
    }

    pub fn periodic() -> Self {
        Self(0.0)
    }

    pub fn antiperiodic() -> Self {
        Self(PI)
    }

    /// The extension under which eigenstate `n` is a two-term plane-wave sum.
    pub fn matching(n: EigenstateIndex) -> Self {
        match n.parity() {
            Parity::Even => Self::antiperiodic(),
            Parity::Odd => Self::periodic(),
        }
    }

    pub fn theta(self) -> f64 {
        self.0
    }

    pub fn momentum(self, spec: &WellSpec, k: i64) -> f64 {
        (k as f64 + self.0 / TAU) * PI * spec.hbar() / spec.half_width()
    }

    /// Basis function `u_k(x)` on the interval (zero outside).
    pub fn basis(self, spec: &WellSpec, k: i64, x: f64) -> Complex64 {
        let a = spec.half_width();
        if x.abs() > a {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar((2.0 * a).sqrt().recip(), self.momentum(spec, k) * x / spec.hbar())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub k: i64,
    pub momentum: f64,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMomentumSpectrum {
    pub phase: ExtensionPhase,
    /// Sorted by `k`, hence by momentum.
    pub entries: Vec<SpectrumEntry>,
    pub k_max: i64,
}

impl DiscreteMomentumSpectrum {
    pub fn total_weight(&self) -> f64 {
        self.entries.iter().map(|e| e.weight).sum()
    }

    /// `1 - Σ |c_k|^2`, the probability lost to truncation.
    pub fn parseval_defect(&self) -> f64 {
        1.0 - self.total_weight()
    }

    pub fn weight_at(&self, k: i64) -> Option<f64> {
        self.entries.iter().find(|e| e.k == k).map(|e| e.weight)
    }

    /// Entries with weight above `threshold`.
    pub fn spikes(&self, threshold: f64) -> impl Iterator<Item = &SpectrumEntry> {
        self.entries.iter().filter(move |e| e.weight > threshold)
    }
}

pub fn allowed_momenta(spec: &WellSpec, phase: ExtensionPhase, ks: RangeInclusive<i64>) -> Vec<f64> {
    ks.map(|k| phase.momentum(spec, k)).collect()
}

/// Expands a normalized state on `(-a, a)` in the plane-wave basis of `phase`
/// for `|k| <= k_max`.
pub fn expand<F>(
    spec: &WellSpec,
    state: F,
    phase: ExtensionPhase,
    k_max: i64,
    quad: &Quadrature,
) -> Result<DiscreteMomentumSpectrum>
where
    F: Fn(f64) -> Complex64 + Sync,
{
    if k_max < 0 {
        return Err(Error::InvalidParameter {
            name: "k_max",
            value: k_max as f64,
            reason: "must be non-negative",
        });
    }
    let a = spec.half_width();
    let samples: Vec<(f64, f64, Complex64)> = quad.mapped(-a, a).map(|(x, w)| (x, w, state(x))).collect();
    let norm: f64 = samples.iter().map(|(_, w, s)| w * s.norm_sqr()).sum();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::NotNormalized { norm });
    }

    let entries = (-k_max..=k_max)
        .into_par_iter()
        .map(|k| {
            let c: Complex64 = samples
                .iter()
                .map(|&(x, w, s)| phase.basis(spec, k, x).conj() * s * w)
                .sum();
            SpectrumEntry {
                k,
                momentum: phase.momentum(spec, k),
                weight: c.norm_sqr(),
            }
        })
        .collect();
    Ok(DiscreteMomentumSpectrum { phase, entries, k_max })
}

/// Expansion of a well eigenstate with an explicit extension phase.
pub fn expand_eigenstate(
    spec: &WellSpec,
    n: EigenstateIndex,
    phase: ExtensionPhase,
    k_max: i64,
    quad: &Quadrature,
) -> Result<DiscreteMomentumSpectrum> {
    expand(
        spec,
        |x| Complex64::new(well::eigenfunction(spec, n, x), 0.0),
        phase,
        k_max,
        quad,
    )
}

/// The exact two-spike spectrum of eigenstate `n` under its matching extension.
pub fn eigenstate_spectrum(spec: &WellSpec, n: EigenstateIndex) -> DiscreteMomentumSpectrum {
    let phase = ExtensionPhase::matching(n);
    let n = n.get() as i64;
    // p'_k = ±n pi hbar / 2a
    let (k_minus, k_plus) = match phase.theta() == 0.0 {
        true => (-n / 2, n / 2),
        false => (-(n + 1) / 2, (n - 1) / 2),
    };
    let entries = [k_minus, k_plus]
        .into_iter()
        .map(|k| SpectrumEntry {
            k,
            momentum: phase.momentum(spec, k),
            weight: 0.5,
        })
        .collect();
    DiscreteMomentumSpectrum {
        phase,
        entries,
        k_max: k_plus.abs().max(k_minus.abs()),
    }
}

/// How much continuous probability sits near the two discrete spikes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceReport {
    pub mass_in_window: f64,
    pub spike_weight: f64,
    pub defect: f64,
}

/// Integrates the continuous density of eigenstate `n` over the windows
/// `|p ∓ n pi hbar / 2a| < window_half_width`. Overlapping windows are merged.
pub fn convergence_report(
    spec: &WellSpec,
    n: EigenstateIndex,
    window_half_width: f64,
    quad: &Quadrature,
) -> Result<ConvergenceReport> {
    if !(window_half_width > 0.0 && window_half_width.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "window_half_width",
            value: window_half_width,
            reason: "must be positive and finite",
        });
    }
    let spike = n.get() as f64 * spec.momentum_quantum();
    let mut windows = vec![(-spike - window_half_width, -spike + window_half_width)];
    let upper = (spike - window_half_width, spike + window_half_width);
    if upper.0 <= windows[0].1 {
        windows[0].1 = upper.1;
    } else {
        windows.push(upper);
    }

    // panels no wider than a quarter oscillation of cos^2(pa/hbar)
    let panel = 0.25 * PI * spec.hbar() / spec.half_width();
    let outer = Quadrature::new(32)?;
    let mass: f64 = windows
        .iter()
        .map(|&(lo, hi)| {
            let panels = ((hi - lo) / panel).ceil().max(1.0) as usize;
            let width = (hi - lo) / panels as f64;
            (0..panels)
                .into_par_iter()
                .map(|j| {
                    let p0 = lo + j as f64 * width;
                    outer.integrate(p0, p0 + width, |p| {
                        continuous::amplitude_transform(spec, n, p, quad).norm_sqr()
                    })
                })
                .collect::<Vec<f64>>()
                .into_iter()
                .sum::<f64>()
        })
        .sum();
    Ok(ConvergenceReport {
        mass_in_window: mass,
        spike_weight: 1.0,
        defect: 1.0 - mass,
    })
}
