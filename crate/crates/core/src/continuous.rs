//! Momentum amplitude and density on the full line.
//!
//! The well eigenstate is continued by zero outside `(-a, a)` and Fourier
//! transformed with the kernel `exp(-i p x / hbar)`. For the ground state the
//! density has the closed form
//!
//! ```text
//! P_1(p) = (pi hbar^3 / 2a^3) cos^2(pa/hbar) / (p^2 - p0^2)^2,   p0 = pi hbar / 2a
//! ```
//!
//! with removable singularities at `p = ±p0`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quadrature::Quadrature;
use crate::well::{self, EigenstateIndex, WellSpec};

/// Distance from `±p0`, in units of `hbar / a`, inside which the ground-state
/// density switches to its series form.
pub const SINGULARITY_SWITCH: f64 = 1e-4;

pub const DEFAULT_GRID_COUNT: usize = 4001;

/// Default cutoff is this many multiples of the state's own peak momentum.
pub const DEFAULT_CUTOFF_FACTOR: f64 = 20.0;

/// Uniform, symmetric momentum grid with an odd number of samples.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumGrid {
    p_max: f64,
    count: usize,
}

impl MomentumGrid {
    pub fn new(p_max: f64, count: usize) -> Result<Self> {
        if !(p_max > 0.0 && p_max.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "p_max",
                value: p_max,
                reason: "must be positive and finite",
            });
        }
        if count < 3 || count.is_multiple_of(2) {
            return Err(Error::InvalidParameter {
                name: "count",
                value: count as f64,
                reason: "must be odd and at least 3",
            });
        }
        Ok(Self { p_max, count })
    }

    /// `p_max = 20 n pi hbar / 2a`, 4001 samples.
    pub fn default_for(spec: &WellSpec, n: EigenstateIndex) -> Self {
        let p_max = DEFAULT_CUTOFF_FACTOR * n.get() as f64 * spec.momentum_quantum();
        Self {
            p_max,
            count: DEFAULT_GRID_COUNT,
        }
    }

    pub fn p_max(&self) -> f64 {
        self.p_max
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn step(&self) -> f64 {
        2.0 * self.p_max / (self.count - 1) as f64
    }

    /// Sample `i`; samples `i` and `count - 1 - i` are exact negatives.
    pub fn sample(&self, i: usize) -> f64 {
        let centre = (self.count - 1) / 2;
        let offset = i as f64 - centre as f64;
        offset * self.step()
    }

    pub fn samples(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.sample(i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContinuousMomentumSpectrum {
    pub grid: MomentumGrid,
    pub momenta: Vec<f64>,
    pub amplitude: Vec<Complex64>,
    pub density: Vec<f64>,
}

impl ContinuousMomentumSpectrum {
    /// Trapezoid integral of the density over the grid.
    pub fn total_probability(&self) -> f64 {
        trapezoid(&self.density, self.grid.step())
    }

    /// `<p^2>` by trapezoid over the grid. Converges slowly (tails fall as `p^-4`),
    /// kept only as a cross-check of the energy route.
    pub fn second_moment(&self) -> f64 {
        let weighted: Vec<f64> = self.momenta.iter().zip(&self.density).map(|(p, d)| p * p * d).collect();
        trapezoid(&weighted, self.grid.step())
    }
}

pub(crate) fn trapezoid(values: &[f64], step: f64) -> f64 {
    match values {
        [] | [_] => 0.0,
        [first, inner @ .., last] => step * (0.5 * (first + last) + inner.iter().sum::<f64>()),
    }
}

/// `phi_n(p) = (2 pi hbar)^{-1/2} ∫ psi_n(x) exp(-i p x / hbar) dx` by quadrature.
pub fn amplitude_transform(spec: &WellSpec, n: EigenstateIndex, p: f64, quad: &Quadrature) -> Complex64 {
    let a = spec.half_width();
    let hbar = spec.hbar();
    let k = p / hbar;
    let integral = quad.integrate_complex(-a, a, |x| {
        let psi = well::eigenfunction(spec, n, x);
        Complex64::from_polar(psi, -k * x)
    });
    integral / (2.0 * PI * hbar).sqrt()
}

/// Closed-form ground-state momentum density.
pub fn analytic_density_ground(spec: &WellSpec, p: f64) -> f64 {
    let a = spec.half_width();
    let hbar = spec.hbar();
    // dimensionless s = p a / hbar; P = (pi a / 2 hbar) * g(s)^2, g = cos s / (s^2 - s0^2)
    let s = (p * a / hbar).abs();
    let s0 = 0.5 * PI;
    let t = s - s0;
    let g = if t.abs() < SINGULARITY_SWITCH {
        // cos(s0 + t) = -sin t and s^2 - s0^2 = t (2 s0 + t)
        let t2 = t * t;
        let sinc = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
        -sinc / (2.0 * s0 + t)
    } else {
        s.cos() / ((s - s0) * (s + s0))
    };
    0.5 * PI * a / hbar * g * g
}

/// Amplitude and density of eigenstate `n` over a momentum grid.
pub fn spectrum(
    spec: &WellSpec,
    n: EigenstateIndex,
    grid: &MomentumGrid,
    quad: &Quadrature,
) -> ContinuousMomentumSpectrum {
    let momenta = grid.samples();
    let amplitude: Vec<Complex64> = momenta
        .par_iter()
        .map(|&p| amplitude_transform(spec, n, p, quad))
        .collect();
    let density = amplitude.iter().map(|c| c.norm_sqr()).collect();
    ContinuousMomentumSpectrum {
        grid: grid.clone(),
        momenta,
        amplitude,
        density,
    }
}

/// Position spread, momentum spread and their product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Uncertainty {
    pub delta_x: f64,
    pub delta_p: f64,
    pub product: f64,
}

/// `Δx` from position integrals of `psi_n`, `Δp = sqrt(2 m E_n)`.
pub fn uncertainty_product(spec: &WellSpec, n: EigenstateIndex, quad: &Quadrature) -> Uncertainty {
    let (mean, second) = well::position_moments(spec, n, quad);
    let delta_x = (second - mean * mean).max(0.0).sqrt();
    // <p> = 0 and <p^2> = 2 m E_n inside the well
    let delta_p = (2.0 * spec.mass() * well::energy(spec, n)).sqrt();
    Uncertainty {
        delta_x,
        delta_p,
        product: delta_x * delta_p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn idx(n: i64) -> EigenstateIndex {
        EigenstateIndex::new(n).unwrap()
    }

    // ∫_{-a}^{a} psi_n(x) e^{-ipx} dx in closed form (hbar = 1)
    fn closed_form_amplitude(a: f64, n: u32, p: f64) -> Complex64 {
        let k = n as f64 * PI / (2.0 * a);
        let sinc_int = |q: f64| if q.abs() < 1e-12 { a } else { (q * a).sin() / q };
        let norm = 1.0 / (a.sqrt() * (2.0 * PI).sqrt());
        if n % 2 == 1 {
            // ∫ cos(kx) cos(px) dx
            Complex64::new(norm * (sinc_int(k - p) + sinc_int(k + p)), 0.0)
        } else {
            // -i ∫ sin(kx) sin(px) dx
            Complex64::new(0.0, -norm * (sinc_int(k - p) - sinc_int(k + p)))
        }
    }

    #[test]
    fn grid_validation() {
        assert!(MomentumGrid::new(1.0, 4).is_err());
        assert!(MomentumGrid::new(1.0, 1).is_err());
        assert!(MomentumGrid::new(-1.0, 5).is_err());
        let g = MomentumGrid::new(2.0, 5).unwrap();
        assert_eq!(g.samples(), vec![-2.0, -1.0, 0.0, 1.0, 2.0]);
    }

    #[test]
    fn amplitude_at_zero_momentum() {
        let spec = WellSpec::natural();
        let q = Quadrature::default();
        let phi = amplitude_transform(&spec, idx(1), 0.0, &q);
        assert_relative_eq!(phi.re, 4.0 / (PI * (2.0 * PI).sqrt()), epsilon = 1e-14);
        assert_relative_eq!(phi.re, 0.507_949_1, epsilon = 1e-7);
        assert!(phi.im.abs() < 1e-13);
        assert!(amplitude_transform(&spec, idx(2), 0.0, &q).norm() < 1e-13);
    }

    #[test]
    fn amplitude_matches_closed_form_and_phase_rule() {
        let q = Quadrature::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &a in &[0.5, 1.0, 2.5] {
            let spec = WellSpec::new(a, 1.0, 1.0).unwrap();
            for n in 1..=10u32 {
                for _ in 0..50 {
                    let p: f64 = rng.gen_range(-60.0..60.0);
                    let phi = amplitude_transform(&spec, idx(n as i64), p, &q);
                    let oracle = closed_form_amplitude(a, n, p);
                    assert!((phi - oracle).norm() < 1e-12, "a={a} n={n} p={p}");
                    if n % 2 == 1 {
                        assert!(phi.im.abs() < 1e-13);
                    } else {
                        assert!(phi.re.abs() < 1e-13);
                    }
                }
            }
        }
    }

    #[test]
    fn analytic_density_values() {
        let spec = WellSpec::natural();
        assert_relative_eq!(analytic_density_ground(&spec, 0.0), 8.0 / PI.powi(3), epsilon = 1e-15);
        assert_relative_eq!(analytic_density_ground(&spec, 0.0), 0.258_012, epsilon = 1e-6);
        assert_relative_eq!(
            analytic_density_ground(&spec, PI / 2.0),
            1.0 / (2.0 * PI),
            epsilon = 1e-15
        );
        assert_relative_eq!(
            analytic_density_ground(&spec, -PI / 2.0),
            1.0 / (2.0 * PI),
            epsilon = 1e-15
        );
        assert!(analytic_density_ground(&spec, 1.5 * PI) < 1e-30);
    }

    #[test]
    fn ground_density_continuous_across_singularity() {
        let spec = WellSpec::natural();
        let limit = 1.0 / (2.0 * PI);
        for p in [
            PI / 2.0 - 1e-6,
            PI / 2.0 + 1e-6,
            -PI / 2.0 + 1e-6,
            PI / 2.0 + 0.99e-4,
            PI / 2.0 + 1.01e-4,
        ] {
            let v = analytic_density_ground(&spec, p);
            let oracle = closed_form_amplitude(1.0, 1, p).norm_sqr();
            assert!((v - oracle).abs() / oracle < 1e-9, "p={p}");
            // the density has slope -(2/π)·limit at p0, so a 1e-6 offset moves it by ~6.4e-7
            if (p.abs() - PI / 2.0).abs() <= 1e-6 * 1.01 {
                assert!((v - limit).abs() / limit < 1e-6);
            }
        }
    }

    #[test]
    fn density_at_ten_matches_closed_form() {
        let spec = WellSpec::natural();
        let q = Quadrature::default();
        let phi = amplitude_transform(&spec, idx(1), 10.0, &q);
        let p = analytic_density_ground(&spec, 10.0);
        assert_relative_eq!(phi.norm_sqr(), p, max_relative = 1e-10);
    }

    #[test]
    fn dimensional_ground_density() {
        let spec = WellSpec::new(2.0, 1.0, 0.7).unwrap();
        let q = Quadrature::default();
        for p in [0.0, 0.3, spec.momentum_quantum(), 2.2, -5.0] {
            let num = amplitude_transform(&spec, idx(1), p, &q).norm_sqr();
            assert!((num - analytic_density_ground(&spec, p)).abs() < 1e-12);
        }
    }

    #[test]
    fn spectrum_mass_and_parity() {
        let spec = WellSpec::natural();
        let q = Quadrature::default();
        let grid = MomentumGrid::new(40.0, 4001).unwrap();
        let s = spectrum(&spec, idx(1), &grid, &q);
        let total = s.total_probability();
        assert!((0.999..=1.0 + 1e-9).contains(&total), "{total}");
        for i in 0..grid.count() {
            assert_eq!(s.density[i], s.density[grid.count() - 1 - i]);
            assert!(s.density[i] >= 0.0);
            let a = analytic_density_ground(&spec, s.momenta[i]);
            assert!((s.density[i] - a).abs() <= 1e-10 * a + 1e-18, "p={}", s.momenta[i]);
        }
    }

    #[test]
    fn second_excited_peak_matches_brute_force_scan() {
        // The interference of the two lobes pulls the n=3 peak below 3π/2.
        // Oracle: fine scan of the closed form on [4, 5].
        let mut best = (0.0, f64::MIN);
        let steps = 200_000;
        for i in 0..=steps {
            let p = 4.0 + i as f64 / steps as f64;
            let d = closed_form_amplitude(1.0, 3, p).norm_sqr();
            if d > best.1 {
                best = (p, d);
            }
        }
        assert!((best.0 - 4.384_987).abs() < 1e-5);

        let spec = WellSpec::natural();
        let grid = MomentumGrid::new(60.0, DEFAULT_GRID_COUNT).unwrap();
        let s = spectrum(&spec, idx(3), &grid, &Quadrature::default());
        let half = grid.count() / 2;
        let i_max = (half..grid.count())
            .max_by(|&i, &j| s.density[i].total_cmp(&s.density[j]))
            .unwrap();
        assert!((s.momenta[i_max] - best.0).abs() <= grid.step());
        assert!((s.momenta[i_max] - 1.5 * PI).abs() < 0.35);
    }

    #[test]
    fn uncertainty_ground_state() {
        let spec = WellSpec::natural();
        let u = uncertainty_product(&spec, idx(1), &Quadrature::default());
        let dx_oracle = (1.0 / 3.0 - 2.0 / (PI * PI)).sqrt();
        assert_relative_eq!(u.delta_x, dx_oracle, epsilon = 1e-13);
        assert_relative_eq!(u.delta_x, 0.361_51, epsilon = 1e-5);
        assert_relative_eq!(u.delta_p, PI / 2.0, epsilon = 1e-14);
        assert_relative_eq!(u.product, 0.567_862, epsilon = 1e-6);
        assert!(u.product > 0.5);
    }

    #[test]
    fn uncertainty_grows_and_respects_bound() {
        let q = Quadrature::default();
        let spec = WellSpec::new(1.3, 0.8, 0.6).unwrap();
        let mut products = Vec::new();
        for n in 1..=50 {
            let u = uncertainty_product(&spec, idx(n), &q);
            assert!(u.product >= spec.hbar() / 2.0);
            // ⟨x²⟩ = a²(1/3 − 2/(nπ)²)
            let nn = n as f64 * PI;
            let dx = spec.half_width() * (1.0 / 3.0 - 2.0 / (nn * nn)).sqrt();
            assert_relative_eq!(u.delta_x, dx, max_relative = 1e-11);
            products.push(u.product);
        }
        assert!(products[9] > products[0]);
        assert!(products.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn grid_second_moment_cross_checks_energy_route() {
        let spec = WellSpec::natural();
        let n = idx(1);
        let s = spectrum(&spec, n, &MomentumGrid::default_for(&spec, n), &Quadrature::default());
        let exact = 2.0 * well::energy(&spec, n);
        // tail beyond p_max carries ~ 1/p_max of <p^2>
        assert!((s.second_moment() - exact).abs() / exact < 0.05);
    }
}
