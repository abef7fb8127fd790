//! Plane-wave spectra on the interval: two spikes under the matching boundary
//! phase, a spread of weights under any other.

use boxmode::discrete::{self, ExtensionPhase, DEFAULT_K_MAX};
use boxmode::well::{EigenstateIndex, WellSpec};
use boxmode::{Quadrature, Result};

fn main() -> Result<()> {
    let spec = WellSpec::natural();
    let quad = Quadrature::default();

    for n in 1..=4 {
        let idx = EigenstateIndex::new(n)?;
        let s = discrete::expand_eigenstate(&spec, idx, ExtensionPhase::matching(idx), DEFAULT_K_MAX, &quad)?;
        let spikes: Vec<String> = s
            .spikes(1e-6)
            .map(|e| format!("p = {:+.6} weight {:.12}", e.momentum, e.weight))
            .collect();
        println!("n = {n}, theta = {:.4}: {}", s.phase.theta(), spikes.join(", "));
    }

    let ground = EigenstateIndex::new(1)?;
    let periodic = discrete::expand_eigenstate(&spec, ground, ExtensionPhase::periodic(), DEFAULT_K_MAX, &quad)?;
    println!("\nground state under the periodic phase:");
    for k in -3..=3 {
        println!("  k = {k:+}: weight {:.6e}", periodic.weight_at(k).unwrap_or(0.0));
    }
    println!(
        "  Parseval defect at k_max = {DEFAULT_K_MAX}: {:.3e}",
        periodic.parseval_defect()
    );
    Ok(())
}
