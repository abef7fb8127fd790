//! Level degeneracy counted three ways, and the quantized Hall conductance.

use std::f64::consts::PI;

use boxmode::landau::{self, LandauSpec};
use boxmode::Result;

fn main() -> Result<()> {
    println!(
        "{:>8} {:>6} {:>6} {:>10} {:>6} {:>8} {:>6}",
        "B", "Lx", "Ly", "Phi/phi0", "floor", "centres", "rings"
    );
    for (b, lx, ly) in [
        (2.0 * PI, 1.0, 1.0),
        (1.0, 10.0, 10.0),
        (0.5, 30.0, 20.0),
        (2.0 * PI, 10.0, 20.0),
    ] {
        let spec = LandauSpec::natural(b, lx, ly)?;
        let d = landau::degeneracy(&spec);
        println!(
            "{b:>8.4} {lx:>6} {ly:>6} {:>10.4} {:>6} {:>8} {:>6}",
            d.ratio,
            d.count,
            landau::guiding_center_count(&spec),
            landau::ring_count(&spec)
        );
    }

    let spec = LandauSpec::natural(1.0, 10.0, 10.0)?;
    println!(
        "\nHall current, natural units (e^2/h = 1/2pi = {:.9}):",
        1.0 / (2.0 * PI)
    );
    for v in [0.0, 1.0, -2.5] {
        let h = landau::hall_current(&spec, v);
        let numeric = landau::hall_current_numeric(&spec, v, 0.0, spec.magnetic_length() / 8.0)?;
        println!(
            "  V = {v:+.1}: per electron {:+.6e} (sampled {numeric:+.6e}), per level {:+.6e}, conductance {:.12}",
            h.per_electron, h.per_level, h.conductance
        );
    }
    Ok(())
}
