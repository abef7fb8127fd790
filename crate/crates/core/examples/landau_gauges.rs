//! Landau- and symmetric-gauge states, their energy residuals, ring radii,
//! lattice coherent states and the kinematic commutator.

use boxmode::landau::{self, Gauge, GaugeField, Grid2D, GridField2D, LandauSpec};
use boxmode::Result;
use num_complex::Complex64;

fn main() -> Result<()> {
    let spec = LandauSpec::natural(1.0, 10.0, 10.0)?;
    let ell = spec.magnetic_length();
    let h = ell / 8.0;
    let landau_gauge = GaugeField::for_spec(Gauge::Landau, &spec);
    let symmetric = GaugeField::for_spec(Gauge::Symmetric, &spec);

    println!("Landau gauge, guiding centre y_p = -c p_x / (q B):");
    for (n, p_x) in [(0, 0.0), (0, 2.5), (1, -1.0), (2, 1.0)] {
        let grid = Grid2D::centered(0.0, spec.guiding_center(p_x), 2.0 * ell, 8.0 * ell, h)?;
        let state = landau::landau_gauge_state(&spec, grid, n, p_x)?;
        let r = landau::hamiltonian_residual(&spec, &landau_gauge, &state, spec.level_energy(n as u32))?;
        println!(
            "  n = {n}, p_x = {p_x:+.1}: y_p = {:+.2}, residual {r:.2e}",
            spec.guiding_center(p_x)
        );
    }

    println!("symmetric gauge, lowest level:");
    let disk = Grid2D::centered(0.0, 0.0, 7.0 * ell, 7.0 * ell, h)?;
    for l in 0..=5 {
        let state = landau::symmetric_gauge_state(&spec, disk, 0, l)?;
        let r = landau::hamiltonian_residual(&spec, &symmetric, &state, spec.level_energy(0))?;
        let radius = landau::radial_peak(&state, 0.0, 0.0);
        println!(
            "  L = {l}: ring radius {radius:.4} (closed form {:.4}), residual {r:.2e}",
            landau::ring_radius(&spec, 0, l as u32)
        );
    }

    let grid = Grid2D::centered(0.0, 0.0, 7.0 * ell, 7.0 * ell, h)?;
    let lattice = landau::vortex_lattice(&spec);
    println!(
        "square lattice, {} sites, spacing {:.4}",
        lattice.len(),
        (lattice[1] - lattice[0]).norm()
    );
    let a = landau::vortex_state(&spec, grid, Complex64::new(0.0, 0.0));
    for sep in [0.5, 1.0, 2.0, (2.0 * std::f64::consts::PI).sqrt()] {
        let b = landau::vortex_state(&spec, grid, Complex64::new(sep, 0.0));
        let expected = (-sep * sep / (4.0 * ell * ell)).exp();
        println!(
            "  overlap at separation {sep:.4}: {:.9} (exp(-d^2/4l^2) = {expected:.9})",
            a.inner(&b).norm()
        );
    }

    let probe = GridField2D::gaussian(Grid2D::centered(0.0, 0.0, 6.0 * ell, 6.0 * ell, h)?, 0.0, 0.0, ell);
    println!(
        "commutator residual: Landau {:.2e}, symmetric {:.2e}",
        landau::commutator_check(&spec, &landau_gauge, &probe)?,
        landau::commutator_check(&spec, &symmetric, &probe)?
    );
    Ok(())
}
