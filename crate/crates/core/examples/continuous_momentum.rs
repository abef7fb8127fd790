//! Fourier momentum density of the ground state and the uncertainty product.

use std::f64::consts::PI;

use boxmode::continuous::{self, MomentumGrid};
use boxmode::well::{EigenstateIndex, WellSpec};
use boxmode::{Quadrature, Result};

fn main() -> Result<()> {
    let spec = WellSpec::natural();
    let quad = Quadrature::default();
    let ground = EigenstateIndex::new(1)?;

    println!("{:>10} {:>14} {:>14}", "p", "|phi(p)|^2", "closed form");
    for p in [0.0, 0.5 * PI, PI, 1.5 * PI, 3.0 * PI, 10.0] {
        let numeric = continuous::amplitude_transform(&spec, ground, p, &quad).norm_sqr();
        println!(
            "{p:>10.5} {numeric:>14.10} {:>14.10}",
            continuous::analytic_density_ground(&spec, p)
        );
    }

    for n in [1, 2, 3] {
        let idx = EigenstateIndex::new(n)?;
        let s = continuous::spectrum(&spec, idx, &MomentumGrid::default_for(&spec, idx), &quad);
        let peak = s
            .momenta
            .iter()
            .zip(&s.density)
            .max_by(|a, b| a.1.total_cmp(b.1))
            .map(|(p, _)| p.abs())
            .unwrap_or(0.0);
        let u = continuous::uncertainty_product(&spec, idx, &quad);
        println!(
            "n = {n}: total probability {:.6}, density peak at |p| = {peak:.4}, dx dp = {:.6}",
            s.total_probability(),
            u.product
        );
    }
    Ok(())
}
