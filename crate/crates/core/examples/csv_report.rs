//! Tables and run reports as written by the command line, built by hand.

use boxmode::config::RunConfig;
use boxmode::report::{write_csv, Check, RunReport, Table, Value};
use boxmode::well::{self, EigenstateIndex};
use boxmode::{Quadrature, Result};

fn main() -> Result<()> {
    let config =
        RunConfig::parse("[units]\npreset = custom\nhbar = 1.0\nmass = 1.0\nhalf_width = 0.5\n[output]\ndigits = 6\n")?;
    let spec = config.well()?;
    let quad = Quadrature::default();

    let mut table = Table::new(&["n", "energy"]);
    let mut worst = 0.0f64;
    for n in 1..=5 {
        let idx = EigenstateIndex::new(n)?;
        table.push([Value::from(n), Value::from(well::energy(&spec, idx))]);
        worst = worst.max(well::norm_check(&spec, idx, &quad));
    }
    let mut report = RunReport::new("example", config.to_string());
    report.check(Check::at_most("eigenstate_normalization", worst, 1e-12));

    let dir = std::env::temp_dir().join("boxmode-example");
    std::fs::create_dir_all(&dir).map_err(|source| boxmode::Error::Io {
        path: dir.clone(),
        source,
    })?;
    write_csv(&table, &dir.join("energies.csv"), config.digits)?;
    report.write(&dir.join("energies_report.txt"), config.digits)?;

    print!("{}", String::from_utf8_lossy(&table.to_csv(config.digits)?));
    print!("{}", report.render(config.digits));
    println!("written to {}", dir.display());
    Ok(())
}
