//! Charged particle in a uniform magnetic field along z.
//!
//! Gaussian units: `omega_c = |q| B / (m c)`, magnetic length
//! `l = sqrt(hbar / (m omega_c)) = sqrt(hbar c / (|q| B))`, flux quantum
//! `phi_0 = 2 pi hbar c / |q|`. Levels are `E_n = (n + 1/2) hbar omega_c`.
//!
//! Two gauges give the same field `B = dA_y/dx - dA_x/dy`:
//!
//! * Landau: `A = (-B y, 0)`
//! * symmetric: `A = (-B y / 2, B x / 2)`
//!
//! The symmetric-gauge states use `z = (x + i s y) / 2l` with `s = sign(q)`.
//! For an electron (`s = -1`) the lowest level is built on `x - i y`; for a
//! positive charge on `x + i y`.

mod counting;
mod grid;
mod hermite;
mod operators;
mod states;

use crate::error::{require_positive, Error, Result};

pub use counting::{
    degeneracy, guiding_center_count, hall_current, hall_current_numeric, ring_count, ring_radius, Degeneracy,
    HallCurrent,
};
pub use grid::{Grid2D, GridField2D};
pub use hermite::hermite;
pub use operators::{commutator_check, hamiltonian_residual, radial_peak};
pub use states::{
    landau_gauge_state, symmetric_gauge_state, vortex_lattice, vortex_phase, vortex_state, LadderPolynomial,
};

/// Field, particle and sample parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandauSpec {
    field: f64,
    charge: f64,
    mass: f64,
    light_speed: f64,
    hbar: f64,
    lx: f64,
    ly: f64,
}

impl LandauSpec {
    pub fn new(field: f64, charge: f64, mass: f64, light_speed: f64, hbar: f64, lx: f64, ly: f64) -> Result<Self> {
        if charge == 0.0 || !charge.is_finite() {
            return Err(Error::InvalidParameter {
                name: "charge",
                value: charge,
                reason: "must be non-zero and finite",
            });
        }
        Ok(Self {
            field: require_positive("field", field)?,
            charge,
            mass: require_positive("mass", mass)?,
            light_speed: require_positive("light_speed", light_speed)?,
            hbar: require_positive("hbar", hbar)?,
            lx: require_positive("lx", lx)?,
            ly: require_positive("ly", ly)?,
        })
    }

    /// Electron with `e = c = hbar = m = 1`, so `phi_0 = 2 pi`.
    pub fn natural(field: f64, lx: f64, ly: f64) -> Result<Self> {
        Self::new(field, -1.0, 1.0, 1.0, 1.0, lx, ly)
    }

    pub fn field(&self) -> f64 {
        self.field
    }

    pub fn charge(&self) -> f64 {
        self.charge
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn light_speed(&self) -> f64 {
        self.light_speed
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn lx(&self) -> f64 {
        self.lx
    }

    pub fn ly(&self) -> f64 {
        self.ly
    }

    pub fn cyclotron_frequency(&self) -> f64 {
        self.charge.abs() * self.field / (self.mass * self.light_speed)
    }

    pub fn magnetic_length(&self) -> f64 {
        (self.hbar / (self.mass * self.cyclotron_frequency())).sqrt()
    }

    pub fn flux(&self) -> f64 {
        self.field * self.lx * self.ly
    }

    pub fn flux_quantum(&self) -> f64 {
        2.0 * std::f64::consts::PI * self.hbar * self.light_speed / self.charge.abs()
    }

    pub fn level_energy(&self, n: u32) -> f64 {
        (n as f64 + 0.5) * self.hbar * self.cyclotron_frequency()
    }

    /// `+1` for positive charge, `-1` for negative.
    pub fn chirality(&self) -> f64 {
        self.charge.signum()
    }

    /// Guiding centre `y_p = -c p_x / (q B)` of the Landau-gauge state with momentum `p_x`.
    pub fn guiding_center(&self, p_x: f64) -> f64 {
        -self.light_speed * p_x / (self.charge * self.field)
    }

    /// Inverse of [`guiding_center`](Self::guiding_center).
    pub fn momentum_for_center(&self, y_p: f64) -> f64 {
        -self.charge * self.field * y_p / self.light_speed
    }

    /// Coupling `q / c` in the kinematic momentum `p - (q/c) A`.
    pub(crate) fn coupling(&self) -> f64 {
        self.charge / self.light_speed
    }

    /// Same parameters, different field.
    pub fn with_field(&self, field: f64) -> Result<Self> {
        Self::new(
            field,
            self.charge,
            self.mass,
            self.light_speed,
            self.hbar,
            self.lx,
            self.ly,
        )
    }

    pub fn with_sample(&self, lx: f64, ly: f64) -> Result<Self> {
        Self::new(self.field, self.charge, self.mass, self.light_speed, self.hbar, lx, ly)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gauge {
    Landau,
    Symmetric,
}

/// Vector potential of a uniform field `field` along z in the chosen gauge.
/// The field may be zero here, unlike in [`LandauSpec`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaugeField {
    pub gauge: Gauge,
    pub field: f64,
}

impl GaugeField {
    pub fn new(gauge: Gauge, field: f64) -> Self {
        Self { gauge, field }
    }

    pub fn for_spec(gauge: Gauge, spec: &LandauSpec) -> Self {
        Self::new(gauge, spec.field())
    }

    pub fn potential(&self, x: f64, y: f64) -> (f64, f64) {
        let b = self.field;
        match self.gauge {
            Gauge::Landau => (-b * y, 0.0),
            Gauge::Symmetric => (-0.5 * b * y, 0.5 * b * x),
        }
    }

    /// `dA_y/dx - dA_x/dy` by central differences with step `h`.
    pub fn curl(&self, x: f64, y: f64, h: f64) -> f64 {
        let day_dx = (self.potential(x + h, y).1 - self.potential(x - h, y).1) / (2.0 * h);
        let dax_dy = (self.potential(x, y + h).0 - self.potential(x, y - h).0) / (2.0 * h);
        day_dx - dax_dy
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn natural_units_derived_quantities() {
        let spec = LandauSpec::natural(1.0, 10.0, 10.0).unwrap();
        assert_eq!(spec.cyclotron_frequency(), 1.0);
        assert_eq!(spec.magnetic_length(), 1.0);
        assert_relative_eq!(spec.flux_quantum(), 2.0 * PI);
        assert_eq!(spec.flux(), 100.0);
        assert_eq!(spec.level_energy(0), 0.5);
        assert_eq!(spec.chirality(), -1.0);
        assert_eq!(spec.guiding_center(2.0), 2.0);
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(LandauSpec::natural(0.0, 1.0, 1.0).is_err());
        assert!(LandauSpec::natural(1.0, -1.0, 1.0).is_err());
        assert!(LandauSpec::new(1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(LandauSpec::new(1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn magnetic_length_identity(b in 0.01f64..50.0, q in 0.1f64..5.0, m in 0.1f64..5.0, c in 0.5f64..200.0, hbar in 0.1f64..3.0) {
            let spec = LandauSpec::new(b, -q, m, c, hbar, 1.0, 1.0).unwrap();
            let l2 = spec.magnetic_length().powi(2);
            prop_assert!((l2 - hbar * c / (q * b)).abs() <= 1e-12 * l2);
            prop_assert!((spec.momentum_for_center(spec.guiding_center(0.7)) - 0.7).abs() < 1e-12);
        }

        #[test]
        fn both_gauges_have_curl_b(b in -5.0f64..5.0, x in -10.0f64..10.0, y in -10.0f64..10.0) {
            for gauge in [Gauge::Landau, Gauge::Symmetric] {
                let g = GaugeField::new(gauge, b);
                prop_assert!((g.curl(x, y, 1e-3) - b).abs() < 1e-9);
            }
        }
    }
}
