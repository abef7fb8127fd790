//! Energies and normalization of the first well eigenstates.

use boxmode::well::{self, EigenstateIndex, WellSpec};
use boxmode::{Quadrature, Result};

fn main() -> Result<()> {
    let spec = WellSpec::natural();
    let quad = Quadrature::default();
    println!("{:>3} {:>14} {:>10} {:>12}", "n", "E_n", "E_n/E_1", "|norm - 1|");
    let e1 = well::energy_of(&spec, 1)?;
    for n in 1..=8 {
        let idx = EigenstateIndex::new(n)?;
        let e = well::energy(&spec, idx);
        println!(
            "{n:>3} {e:>14.9} {:>10.4} {:>12.2e}",
            e / e1,
            well::norm_check(&spec, idx, &quad)
        );
    }

    // a wider well with heavier particle: E scales as hbar^2 / (m a^2)
    let wide = WellSpec::new(2.0, 3.0, 1.0)?;
    println!(
        "\na = 2, m = 3: E_1 = {:.9} (natural E_1 / 12 = {:.9})",
        well::energy_of(&wide, 1)?,
        e1 / 12.0
    );
    Ok(())
}
