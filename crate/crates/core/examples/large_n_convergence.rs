//! How much of the continuous density sits near the two discrete spikes as n grows.

use boxmode::discrete;
use boxmode::well::{EigenstateIndex, WellSpec};
use boxmode::{Quadrature, Result};

fn main() -> Result<()> {
    let spec = WellSpec::natural();
    let quad = Quadrature::default();
    let quantum = spec.momentum_quantum();

    println!("{:>4} {:>18} {:>18}", "n", "defect, fixed", "defect, p_n / 2");
    for n in [1, 2, 4, 8, 16, 32] {
        let idx = EigenstateIndex::new(n)?;
        let fixed = discrete::convergence_report(&spec, idx, quantum, &quad)?;
        let scaled = discrete::convergence_report(&spec, idx, 0.5 * n as f64 * quantum, &quad)?;
        println!("{n:>4} {:>18.12} {:>18.12}", fixed.defect, scaled.defect);
    }
    println!("\nfixed window half-width pi hbar / 2a; scaled window half-width n pi hbar / 4a");
    Ok(())
}
