//! Release the ground state and watch the position density approach the
//! momentum density under p = m x / t.

use std::f64::consts::PI;

use boxmode::continuous;
use boxmode::release::{self, DEFAULT_RESOLUTION};
use boxmode::well::{EigenstateIndex, WellSpec};
use boxmode::Result;

fn main() -> Result<()> {
    let spec = WellSpec::natural();
    let ground = EigenstateIndex::new(1)?;
    for t in [1.0, 10.0, 50.0, 100.0, 200.0] {
        let snap = release::evolve_free_auto(&spec, ground, t, DEFAULT_RESOLUTION)?;
        let far = release::farfield_map(&snap, &spec)?;
        let dist = far.sup_distance(|p| continuous::analytic_density_ground(&spec, p), 3.0 * PI);
        println!(
            "t = {t:>5}: box {:>9.1} ({} samples), spread {:>9.4}, norm {:.12}, sup |P_far - P_1| = {dist:.3e}",
            snap.dx * snap.x.len() as f64,
            snap.x.len(),
            snap.spread(),
            snap.norm()
        );
    }
    Ok(())
}
