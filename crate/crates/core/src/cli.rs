//! The `boxmode` command line: `boxmode <group> <command> [--flag value]...`.
//!
//! Every command computes everything first, then writes `<group>_<command>.csv`
//! and `<group>_<command>_report.txt` into the output directory. Exit codes:
//! 0 when every check passes, 1 when a check fails or a file cannot be
//! written, 2 for invalid arguments (nothing is written).

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::config::{RunConfig, Units};
use crate::continuous::{self, MomentumGrid};
use crate::discrete::{self, ExtensionPhase, DEFAULT_K_MAX};
use crate::error::{Error, Result};
use crate::landau::{self, Gauge, GaugeField, Grid2D, GridField2D, LandauSpec};
use crate::release::{self, ReleaseBox, DEFAULT_RESOLUTION};
use crate::report::{write_csv, Check, RunReport, Table, Value};
use crate::well::{self, EigenstateIndex, WellSpec};
use crate::Quadrature;

#[derive(Debug, Parser)]
#[command(
    name = "boxmode",
    version,
    about = "Momentum spectra of a particle in a box, and Landau levels"
)]
struct Cli {
    /// Configuration file (flat sections of key = value).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Output directory, created if missing.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Fractional digits of real numbers in CSV output.
    #[arg(long, global = true, value_name = "N")]
    digits: Option<usize>,
    #[arg(long, global = true, value_enum)]
    units: Option<UnitsArg>,
    #[command(subcommand)]
    group: Group,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum UnitsArg {
    Natural,
    Custom,
}

#[derive(Debug, Subcommand)]
enum Group {
    /// Well eigenstates.
    Well {
        #[command(subcommand)]
        command: WellCommand,
    },
    /// Continuous and discrete momentum spectra.
    Momentum {
        #[command(subcommand)]
        command: MomentumCommand,
    },
    /// Free expansion after the walls vanish.
    Release {
        #[command(subcommand)]
        command: ReleaseCommand,
    },
    /// Charged particle in a uniform magnetic field.
    Landau {
        #[command(subcommand)]
        command: LandauCommand,
    },
}

#[derive(Debug, Subcommand)]
enum WellCommand {
    /// Energies of the first levels.
    Energies {
        #[arg(long, default_value_t = 10)]
        n_max: i64,
    },
    /// Eigenfunction sampled across and beyond the well.
    Eigenfunction {
        #[arg(long, default_value_t = 1)]
        n: i64,
        #[arg(long, default_value_t = 401)]
        points: usize,
    },
}

#[derive(Debug, Subcommand)]
enum MomentumCommand {
    /// Fourier momentum amplitude and density on a uniform grid.
    Continuous {
        #[arg(long, default_value_t = 1)]
        n: i64,
        /// Grid half-range; defaults to a cutoff scaled with n.
        #[arg(long)]
        p_max: Option<f64>,
        /// Odd number of grid points.
        #[arg(long)]
        points: Option<usize>,
    },
    /// Plane-wave weights under a boundary phase.
    Discrete {
        #[arg(long, default_value_t = 1)]
        n: i64,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        k_max: i64,
        /// Boundary phase theta; defaults to the one matching n.
        #[arg(long)]
        theta: Option<f64>,
    },
    /// Continuous density plus the discrete spikes in a sidecar table.
    Compare {
        #[arg(long, default_value_t = 1)]
        n: i64,
    },
}

#[derive(Debug, Subcommand)]
enum ReleaseCommand {
    /// Position density at time t.
    Evolve {
        #[arg(long, default_value_t = 1)]
        n: i64,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        /// Grid points per half-width.
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
    },
    /// Density at time t mapped onto momentum and compared with the Fourier density.
    Farfield {
        #[arg(long, default_value_t = 1)]
        n: i64,
        #[arg(long, default_value_t = 200.0)]
        t: f64,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        /// Momentum range in units of pi hbar / a.
        #[arg(long, default_value_t = 3.0)]
        p_range: f64,
        #[arg(long, default_value_t = 0.01)]
        tolerance: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StateKind {
    Landau,
    Symmetric,
    Vortex,
}

#[derive(Debug, Args)]
struct Sample {
    /// Field strength, overriding the configuration.
    #[arg(long)]
    field: Option<f64>,
    #[arg(long)]
    lx: Option<f64>,
    #[arg(long)]
    ly: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum LandauCommand {
    /// A sampled state and its energy residual.
    State {
        #[arg(long, value_enum, default_value = "symmetric")]
        gauge: StateKind,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i32,
        /// Angular ladder index (symmetric gauge).
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        l: i32,
        /// Canonical momentum (Landau gauge).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        p_x: f64,
        /// Vortex centre.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        center_x: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        center_y: f64,
        /// Grid spacing in magnetic lengths.
        #[arg(long, default_value_t = 0.125)]
        spacing: f64,
        /// Grid half-width in magnetic lengths.
        #[arg(long, default_value_t = 6.0)]
        extent: f64,
        #[command(flatten)]
        sample: Sample,
    },
    /// Flux ratio against guiding-centre and ring counts.
    Degeneracy {
        #[command(flatten)]
        sample: Sample,
    },
    /// Hall current for a potential drop across the sample.
    Hall {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        voltage: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        p_x: f64,
        #[command(flatten)]
        sample: Sample,
    },
    /// Energy residuals, commutator and ring areas in both gauges.
    Checks {
        #[command(flatten)]
        sample: Sample,
    },
}

/// A command's tables (file stem, table) and report, before anything is written.
struct Output {
    tables: Vec<(String, Table)>,
    report: RunReport,
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let config = match build_config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("boxmode: {e}");
            return 2;
        }
    };
    let output = match execute(&cli.group, &config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("boxmode: {e}");
            return if is_argument_error(&e) { 2 } else { 1 };
        }
    };
    match emit(&output, &config) {
        Ok(paths) => {
            for p in paths {
                log::info!("wrote {}", p.display());
            }
        }
        Err(e) => {
            eprintln!("boxmode: {e}");
            return 1;
        }
    }
    for c in output.report.checks.iter().filter(|c| !c.passed) {
        eprintln!(
            "boxmode: check {} failed (residual {:e}, tolerance {:e})",
            c.name, c.residual, c.tolerance
        );
    }
    if output.report.all_passed() {
        0
    } else {
        1
    }
}

fn is_argument_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidParameter { .. }
            | Error::QuantumNumber { .. }
            | Error::Resolution { .. }
            | Error::ZeroTime
            | Error::Config { .. }
    )
}

fn build_config(cli: &Cli) -> Result<RunConfig> {
    let mut c = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(units) = cli.units {
        c.set_units(match units {
            UnitsArg::Natural => Units::Natural,
            UnitsArg::Custom => Units::Custom,
        });
    }
    if let Some(out) = &cli.out {
        c.out_dir = out.clone();
    }
    if let Some(d) = cli.digits {
        c.digits = d;
    }
    let sample = match &cli.group {
        Group::Landau { command } => match command {
            LandauCommand::State { sample, .. }
            | LandauCommand::Degeneracy { sample }
            | LandauCommand::Hall { sample, .. }
            | LandauCommand::Checks { sample } => Some(sample),
        },
        _ => None,
    };
    if let Some(s) = sample {
        c.field = s.field.unwrap_or(c.field);
        c.lx = s.lx.unwrap_or(c.lx);
        c.ly = s.ly.unwrap_or(c.ly);
    }
    c.validate()?;
    Ok(c)
}

fn emit(output: &Output, config: &RunConfig) -> Result<Vec<PathBuf>> {
    let dir = &config.out_dir;
    fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.clone(),
        source,
    })?;
    let mut written = Vec::new();
    for (stem, table) in &output.tables {
        let path = dir.join(format!("{stem}.csv"));
        write_csv(table, &path, config.digits)?;
        written.push(path);
    }
    let stem = &output.tables[0].0;
    let path = dir.join(format!("{stem}_report.txt"));
    output.report.write(&path, config.digits)?;
    written.push(path);
    Ok(written)
}

fn execute(group: &Group, config: &RunConfig) -> Result<Output> {
    let rendered = config.to_string();
    match group {
        Group::Well { command } => {
            let spec = config.well()?;
            match command {
                WellCommand::Energies { n_max } => well_energies(&spec, *n_max, &rendered),
                WellCommand::Eigenfunction { n, points } => well_eigenfunction(&spec, *n, *points, &rendered),
            }
        }
        Group::Momentum { command } => {
            let spec = config.well()?;
            match command {
                MomentumCommand::Continuous { n, p_max, points } => {
                    momentum_continuous(&spec, *n, *p_max, *points, &rendered)
                }
                MomentumCommand::Discrete { n, k_max, theta } => {
                    momentum_discrete(&spec, *n, *k_max, *theta, &rendered)
                }
                MomentumCommand::Compare { n } => momentum_compare(&spec, *n, &rendered),
            }
        }
        Group::Release { command } => {
            let spec = config.well()?;
            match command {
                ReleaseCommand::Evolve { n, t, resolution } => release_evolve(&spec, *n, *t, *resolution, &rendered),
                ReleaseCommand::Farfield {
                    n,
                    t,
                    resolution,
                    p_range,
                    tolerance,
                } => release_farfield(&spec, *n, *t, *resolution, *p_range, *tolerance, &rendered),
            }
        }
        Group::Landau { command } => {
            let spec = config.landau()?;
            match command {
                LandauCommand::State {
                    gauge,
                    n,
                    l,
                    p_x,
                    center_x,
                    center_y,
                    spacing,
                    extent,
                    ..
                } => landau_state(
                    &spec,
                    StateRequest {
                        kind: *gauge,
                        n: *n,
                        l: *l,
                        p_x: *p_x,
                        center: Complex64::new(*center_x, *center_y),
                        spacing: *spacing,
                        extent: *extent,
                    },
                    &rendered,
                ),
                LandauCommand::Degeneracy { .. } => landau_degeneracy(&spec, &rendered),
                LandauCommand::Hall { voltage, p_x, .. } => landau_hall(&spec, *voltage, *p_x, &rendered),
                LandauCommand::Checks { .. } => landau_checks(&spec, &rendered),
            }
        }
    }
}

fn single(stem: &str, table: Table, report: RunReport) -> Output {
    Output {
        tables: vec![(stem.to_owned(), table)],
        report,
    }
}

fn continuous_normalization(total: f64) -> Check {
    Check {
        name: "continuous_normalization".into(),
        residual: 1.0 - total,
        tolerance: 1e-3,
        passed: (0.999..=1.0 + 1e-9).contains(&total),
    }
}

fn well_energies(spec: &WellSpec, n_max: i64, config: &str) -> Result<Output> {
    EigenstateIndex::new(n_max)?;
    let quad = Quadrature::default();
    let mut report = RunReport::new("well energies", config);
    report.parameter("n_max", n_max);
    let mut table = Table::new(&["n", "energy"]);
    let e1 = well::energy_of(spec, 1)?;
    let (mut ratio_err, mut norm_err) = (0.0f64, 0.0f64);
    for n in 1..=n_max {
        let idx = EigenstateIndex::new(n)?;
        let e = well::energy(spec, idx);
        ratio_err = ratio_err.max((e / (e1 * (n * n) as f64) - 1.0).abs());
        norm_err = norm_err.max(well::norm_check(spec, idx, &quad));
        table.push([Value::from(n), Value::from(e)]);
    }
    report.check(Check::at_most("energy_scales_as_n_squared", ratio_err, 1e-14));
    report.check(Check::at_most("eigenstate_normalization", norm_err, 1e-12));
    Ok(single("well_energies", table, report))
}

fn well_eigenfunction(spec: &WellSpec, n: i64, points: usize, config: &str) -> Result<Output> {
    let idx = EigenstateIndex::new(n)?;
    if points < 2 {
        return Err(Error::InvalidParameter {
            name: "points",
            value: points as f64,
            reason: "need at least 2",
        });
    }
    let a = spec.half_width();
    let mut report = RunReport::new("well eigenfunction", config);
    report.parameter("n", n);
    report.parameter("points", points);
    let mut table = Table::new(&["x", "psi", "density"]);
    let span = 1.25 * a;
    for i in 0..points {
        let x = -span + 2.0 * span * i as f64 / (points - 1) as f64;
        let psi = well::eigenfunction(spec, idx, x);
        table.push([Value::from(x), Value::from(psi), Value::from(psi * psi)]);
    }
    let quad = Quadrature::default();
    report.check(Check::at_most(
        "normalization",
        well::norm_check(spec, idx, &quad),
        1e-12,
    ));
    // the interior formula at the walls must already vanish
    let amp = a.sqrt().recip();
    let k = spec.wave_number(idx) * a;
    let wall = match idx.parity() {
        well::Parity::Even => amp * k.cos(),
        well::Parity::Odd => amp * k.sin(),
    };
    report.check(Check::at_most("vanishes_at_walls", wall.abs(), 1e-12 * amp));
    Ok(single("well_eigenfunction", table, report))
}

fn momentum_continuous(
    spec: &WellSpec,
    n: i64,
    p_max: Option<f64>,
    points: Option<usize>,
    config: &str,
) -> Result<Output> {
    let idx = EigenstateIndex::new(n)?;
    let default = MomentumGrid::default_for(spec, idx);
    let grid = MomentumGrid::new(p_max.unwrap_or(default.p_max()), points.unwrap_or(default.count()))?;
    let quad = Quadrature::default();
    let s = continuous::spectrum(spec, idx, &grid, &quad);
    let mut report = RunReport::new("momentum continuous", config);
    report.parameter("n", n);
    report.parameter("p_max", format!("{:?}", grid.p_max()));
    report.parameter("points", grid.count());
    let mut table = Table::new(&["p", "amplitude_re", "amplitude_im", "probability_density"]);
    for ((p, amp), d) in s.momenta.iter().zip(&s.amplitude).zip(&s.density) {
        table.push([
            Value::from(*p),
            Value::from(amp.re),
            Value::from(amp.im),
            Value::from(*d),
        ]);
    }
    report.check(continuous_normalization(s.total_probability()));
    if n == 1 {
        let dev = s
            .momenta
            .iter()
            .zip(&s.density)
            .map(|(&p, &d)| (d - continuous::analytic_density_ground(spec, p)).abs())
            .fold(0.0, f64::max);
        report.check(Check::at_most(
            "ground_density_closed_form",
            dev,
            1e-8 * spec.half_width() / spec.hbar(),
        ));
    }
    Ok(single("momentum_continuous", table, report))
}

fn momentum_discrete(spec: &WellSpec, n: i64, k_max: i64, theta: Option<f64>, config: &str) -> Result<Output> {
    let idx = EigenstateIndex::new(n)?;
    let phase = match theta {
        Some(t) => ExtensionPhase::new(t)?,
        None => ExtensionPhase::matching(idx),
    };
    let quad = Quadrature::default();
    let s = discrete::expand_eigenstate(spec, idx, phase, k_max, &quad)?;
    let mut report = RunReport::new("momentum discrete", config);
    report.parameter("n", n);
    report.parameter("k_max", k_max);
    report.parameter("theta", format!("{:?}", phase.theta()));
    let mut table = Table::new(&["k", "momentum", "weight"]);
    for e in &s.entries {
        table.push([Value::from(e.k), Value::from(e.momentum), Value::from(e.weight)]);
    }
    if phase != ExtensionPhase::matching(idx) {
        // the state does not obey this boundary condition: weights fall only
        // as 1/k^4, so check the tail shrinks at least 4x when k_max doubles
        let wide = discrete::expand_eigenstate(spec, idx, phase, 2 * k_max.max(1), &quad)?;
        let (d1, d2) = (s.parseval_defect(), wide.parseval_defect());
        let ratio = if d1 <= 1e-12 { 0.0 } else { d2 / d1 };
        report.parameter("parseval_defect", format!("{d1:?}"));
        report.check(Check::at_most("parseval_tail_decay", ratio, 0.25));
    } else {
        report.check(Check::at_most("parseval_defect", s.parseval_defect(), 1e-8));
        let exact = discrete::eigenstate_spectrum(spec, idx);
        let dev = s
            .entries
            .iter()
            .map(|e| (e.weight - exact.weight_at(e.k).unwrap_or(0.0)).abs())
            .fold(0.0, f64::max);
        report.check(Check::at_most("two_spike_weights", dev, 1e-12));
    }
    Ok(single("momentum_discrete", table, report))
}

fn momentum_compare(spec: &WellSpec, n: i64, config: &str) -> Result<Output> {
    let idx = EigenstateIndex::new(n)?;
    let quad = Quadrature::default();
    let s = continuous::spectrum(spec, idx, &MomentumGrid::default_for(spec, idx), &quad);
    let spikes = discrete::eigenstate_spectrum(spec, idx);
    let window = 2.0 * spec.momentum_quantum();
    let conv = discrete::convergence_report(spec, idx, window, &quad)?;

    let mut report = RunReport::new("momentum compare", config);
    report.parameter("n", n);
    report.parameter("window_half_width", format!("{window:?}"));
    report.parameter("mass_in_window", format!("{:?}", conv.mass_in_window));
    let mut density = Table::new(&["p", "continuous_density"]);
    for (p, d) in s.momenta.iter().zip(&s.density) {
        density.push([Value::from(*p), Value::from(*d)]);
    }
    let mut sidecar = Table::new(&["momentum", "weight"]);
    for e in spikes.entries.iter().rev() {
        sidecar.push([Value::from(e.momentum), Value::from(e.weight)]);
    }
    report.check(continuous_normalization(s.total_probability()));
    report.check(Check::at_most(
        "spike_total_weight",
        (spikes.total_weight() - 1.0).abs(),
        1e-12,
    ));
    Ok(Output {
        tables: vec![
            ("momentum_compare".into(), density),
            ("momentum_compare_spikes".into(), sidecar),
        ],
        report,
    })
}

fn release_evolve(spec: &WellSpec, n: i64, t: f64, resolution: usize, config: &str) -> Result<Output> {
    let idx = EigenstateIndex::new(n)?;
    let snap = release::evolve_free_auto(spec, idx, t, resolution)?;
    let bx = ReleaseBox::new(snap.dx * snap.x.len() as f64, snap.x.len())?;
    let start = release::evolve_free(spec, idx, 0.0, bx)?;
    let (k0, k1) = (start.kinetic_energy(spec), snap.kinetic_energy(spec));

    let mut report = RunReport::new("release evolve", config);
    report.parameter("n", n);
    report.parameter("t", format!("{t:?}"));
    report.parameter("box_length", format!("{:?}", bx.length()));
    report.parameter("samples", bx.samples());
    report.parameter("spread", format!("{:?}", snap.spread()));
    let mut table = Table::new(&["x", "psi_re", "psi_im", "density"]);
    for ((x, psi), d) in snap.x.iter().zip(&snap.psi).zip(&snap.density) {
        table.push([
            Value::from(*x),
            Value::from(psi.re),
            Value::from(psi.im),
            Value::from(*d),
        ]);
    }
    report.check(Check::at_most("norm_conserved", (snap.norm() - 1.0).abs(), 1e-9));
    report.check(Check::at_most(
        "edge_density",
        snap.edge_density(),
        release::EDGE_DENSITY_LIMIT,
    ));
    report.check(Check::at_most("kinetic_energy_conserved", (k1 - k0).abs() / k0, 1e-9));
    Ok(single("release_evolve", table, report))
}

fn release_farfield(
    spec: &WellSpec,
    n: i64,
    t: f64,
    resolution: usize,
    p_range: f64,
    tolerance: f64,
    config: &str,
) -> Result<Output> {
    let idx = EigenstateIndex::new(n)?;
    if t == 0.0 {
        return Err(Error::ZeroTime);
    }
    let p_limit = crate::error::require_positive("p_range", p_range)? * 2.0 * spec.momentum_quantum();
    let snap = release::evolve_free_auto(spec, idx, t, resolution)?;
    let far = release::farfield_map(&snap, spec)?;
    let quad = Quadrature::default();
    let reference = |p: f64| continuous::amplitude_transform(spec, idx, p, &quad).norm_sqr();

    let mut report = RunReport::new("release farfield", config);
    report.parameter("n", n);
    report.parameter("t", format!("{t:?}"));
    report.parameter("p_limit", format!("{p_limit:?}"));
    let mut table = Table::new(&["p", "farfield_density", "fourier_density"]);
    let mut sup = 0.0f64;
    for (&p, &d) in far.momenta.iter().zip(&far.density) {
        if p.abs() <= p_limit {
            let r = reference(p);
            sup = sup.max((d - r).abs());
            table.push([Value::from(p), Value::from(d), Value::from(r)]);
        }
    }
    report.check(Check::at_most("farfield_sup_distance", sup, tolerance));
    Ok(single("release_farfield", table, report))
}

struct StateRequest {
    kind: StateKind,
    n: i32,
    l: i32,
    p_x: f64,
    center: Complex64,
    spacing: f64,
    extent: f64,
}

fn landau_state(spec: &LandauSpec, req: StateRequest, config: &str) -> Result<Output> {
    let ell = spec.magnetic_length();
    let h = crate::error::require_positive("spacing", req.spacing)? * ell;
    let half = crate::error::require_positive("extent", req.extent)? * ell;
    let (state, gauge, n) = match req.kind {
        StateKind::Landau => {
            let grid = Grid2D::centered(0.0, spec.guiding_center(req.p_x), half, half, h)?;
            (
                landau::landau_gauge_state(spec, grid, req.n, req.p_x)?,
                Gauge::Landau,
                req.n,
            )
        }
        StateKind::Symmetric => {
            let grid = Grid2D::centered(0.0, 0.0, half, half, h)?;
            (
                landau::symmetric_gauge_state(spec, grid, req.n, req.l)?,
                Gauge::Symmetric,
                req.n,
            )
        }
        StateKind::Vortex => {
            let grid = Grid2D::centered(req.center.re, req.center.im, half, half, h)?;
            (landau::vortex_state(spec, grid, req.center), Gauge::Symmetric, 0)
        }
    };
    let energy = spec.level_energy(n as u32);
    let residual = landau::hamiltonian_residual(spec, &GaugeField::for_spec(gauge, spec), &state, energy)?;

    let mut report = RunReport::new("landau state", config);
    report.parameter("kind", format!("{:?}", req.kind).to_lowercase());
    report.parameter("n", req.n);
    report.parameter("l", req.l);
    report.parameter("p_x", format!("{:?}", req.p_x));
    report.parameter("energy", format!("{energy:?}"));
    report.parameter("spacing", format!("{h:?}"));
    let mut table = Table::new(&["x", "y", "psi_re", "psi_im", "density"]);
    for ((x, y), psi) in state.grid.nodes().zip(&state.values) {
        table.push([
            Value::from(x),
            Value::from(y),
            Value::from(psi.re),
            Value::from(psi.im),
            Value::from(psi.norm_sqr()),
        ]);
    }
    report.check(Check::at_most("normalization", (state.norm() - 1.0).abs(), 1e-10));
    report.check(Check::at_most("hamiltonian_residual", residual, 1e-3));
    Ok(single("landau_state", table, report))
}

fn landau_degeneracy(spec: &LandauSpec, config: &str) -> Result<Output> {
    let d = landau::degeneracy(spec);
    let centres = landau::guiding_center_count(spec);
    let rings = landau::ring_count(spec);
    let mut report = RunReport::new("landau degeneracy", config);
    report.parameter("flux", format!("{:?}", spec.flux()));
    report.parameter("flux_quantum", format!("{:?}", spec.flux_quantum()));
    let mut table = Table::new(&[
        "field",
        "lx",
        "ly",
        "flux_ratio",
        "flux_count",
        "guiding_centers",
        "rings",
    ]);
    table.push([
        Value::from(spec.field()),
        Value::from(spec.lx()),
        Value::from(spec.ly()),
        Value::from(d.ratio),
        Value::from(d.count),
        Value::from(centres),
        Value::from(rings),
    ]);
    let gap = |c: u64| (c as f64 - d.count as f64).abs();
    report.check(Check::at_most("guiding_center_count", gap(centres), 1.0));
    report.check(Check::at_most("ring_count", gap(rings), 1.0));
    Ok(single("landau_degeneracy", table, report))
}

fn landau_hall(spec: &LandauSpec, voltage: f64, p_x: f64, config: &str) -> Result<Output> {
    if !voltage.is_finite() {
        return Err(Error::InvalidParameter {
            name: "voltage",
            value: voltage,
            reason: "must be finite",
        });
    }
    let hall = landau::hall_current(spec, voltage);
    let numeric = landau::hall_current_numeric(spec, voltage, p_x, spec.magnetic_length() / 8.0)?;
    let quantum = spec.charge().powi(2) / (2.0 * std::f64::consts::PI * spec.hbar());

    let mut report = RunReport::new("landau hall", config);
    report.parameter("voltage", format!("{voltage:?}"));
    report.parameter("p_x", format!("{p_x:?}"));
    let mut table = Table::new(&[
        "voltage",
        "per_electron",
        "per_level",
        "degeneracy_ratio",
        "conductance",
        "numeric_per_electron",
    ]);
    table.push([
        Value::from(voltage),
        Value::from(hall.per_electron),
        Value::from(hall.per_level),
        Value::from(hall.degeneracy_ratio),
        Value::from(hall.conductance),
        Value::from(numeric),
    ]);
    report.check(Check::at_most(
        "conductance_quantum",
        (hall.conductance / quantum - 1.0).abs(),
        1e-12,
    ));
    let scale = hall.per_electron.abs().max(f64::MIN_POSITIVE);
    report.check(Check::at_most(
        "numeric_current",
        (numeric - hall.per_electron).abs() / scale,
        1e-4,
    ));
    Ok(single("landau_hall", table, report))
}

fn landau_checks(spec: &LandauSpec, config: &str) -> Result<Output> {
    let ell = spec.magnetic_length();
    let h = ell / 8.0;
    let landau_gauge = GaugeField::for_spec(Gauge::Landau, spec);
    let symmetric = GaugeField::for_spec(Gauge::Symmetric, spec);
    let mut checks = Vec::new();

    let p_unit = spec.hbar() / ell;
    for n in 0..2 {
        for k in [-1.0, 0.0, 1.0] {
            let p_x = k * p_unit;
            let grid = Grid2D::centered(0.0, spec.guiding_center(p_x), 2.0 * ell, 7.0 * ell, h)?;
            let state = landau::landau_gauge_state(spec, grid, n, p_x)?;
            let r = landau::hamiltonian_residual(spec, &landau_gauge, &state, spec.level_energy(n as u32))?;
            checks.push(Check::at_most(format!("landau_gauge_n{n}_px{k:+}"), r, 1e-3));
        }
    }

    let disk = Grid2D::centered(0.0, 0.0, 7.0 * ell, 7.0 * ell, h)?;
    let mut radii = Vec::new();
    for l in 0..=6 {
        let state = landau::symmetric_gauge_state(spec, disk, 0, l)?;
        radii.push(landau::radial_peak(&state, 0.0, 0.0));
        if l <= 5 {
            let r = landau::hamiltonian_residual(spec, &symmetric, &state, spec.level_energy(0))?;
            checks.push(Check::at_most(format!("symmetric_gauge_n0_l{l}"), r, 1e-3));
        }
    }
    let target = 2.0 * std::f64::consts::PI * ell * ell;
    let area_dev = radii
        .windows(2)
        .map(|w| (std::f64::consts::PI * (w[1] * w[1] - w[0] * w[0]) / target - 1.0).abs())
        .fold(0.0, f64::max);
    checks.push(Check::at_most("equal_area_rings", area_dev, 0.05));

    let coarse = landau::landau_gauge_state(spec, Grid2D::centered(0.0, 0.0, 2.0 * ell, 7.0 * ell, h)?, 1, 0.0)?;
    let fine = landau::landau_gauge_state(spec, Grid2D::centered(0.0, 0.0, 2.0 * ell, 7.0 * ell, h / 2.0)?, 1, 0.0)?;
    let e1 = spec.level_energy(1);
    let ratio = landau::hamiltonian_residual(spec, &landau_gauge, &coarse, e1)?
        / landau::hamiltonian_residual(spec, &landau_gauge, &fine, e1)?;
    checks.push(Check::at_least("refinement_gain", ratio, 4.0));

    let probe = GridField2D::gaussian(
        Grid2D::centered(0.0, 0.0, 6.0 * ell, 6.0 * ell, h)?,
        0.2 * ell,
        -0.1 * ell,
        ell,
    );
    let cl = landau::commutator_check(spec, &landau_gauge, &probe)?;
    let cs = landau::commutator_check(spec, &symmetric, &probe)?;
    checks.push(Check::at_most("commutator_landau", cl, 1e-3));
    checks.push(Check::at_most("commutator_symmetric", cs, 1e-3));
    checks.push(Check::at_most("commutator_gauge_ratio", (cl / cs).max(cs / cl), 10.0));
    let free = landau::commutator_check(spec, &GaugeField::new(Gauge::Symmetric, 0.0), &probe)?;
    checks.push(Check::at_most("commutator_zero_field", free, 1e-10));

    let z_i = Complex64::new(0.7, -0.4);
    let phase_dev = probe
        .grid
        .nodes()
        .map(|(x, y)| (landau::vortex_phase(Complex64::new(x, y) / (2.0 * ell), z_i).norm() - 1.0).abs())
        .fold(0.0, f64::max);
    checks.push(Check::at_most("vortex_phase_unit_modulus", phase_dev, 1e-12));

    let mut report = RunReport::new("landau checks", config);
    report.parameter("spacing", format!("{h:?}"));
    let mut table = Table::new(&["check", "residual", "tolerance", "passed"]);
    for c in &checks {
        table.push([
            Value::from(c.name.as_str()),
            Value::from(c.residual),
            Value::from(c.tolerance),
            Value::from(c.passed as i64),
        ]);
    }
    for c in checks {
        report.check(c);
    }
    Ok(single("landau_checks", table, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::Path;

    fn run_in(dir: &Path, args: &[&str]) -> i32 {
        let mut argv = vec!["boxmode", "--out", dir.to_str().unwrap()];
        argv.extend_from_slice(args);
        run(argv)
    }

    #[test]
    fn energies_table() {
        let dir = tempfile::tempdir().unwrap();
        assert_eq!(run_in(dir.path(), &["well", "energies", "--n-max", "3"]), 0);
        let text = fs::read_to_string(dir.path().join("well_energies.csv")).unwrap();
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows[0], "n,energy");
        assert!(rows[1].starts_with("1,1.233700550136e0"), "{}", rows[1]);
        assert!(rows[2].starts_with("2,4.934802200545e0"), "{}", rows[2]);
        assert!(rows[3].starts_with("3,1.110330495123e1"), "{}", rows[3]);
        let report = fs::read_to_string(dir.path().join("well_energies_report.txt")).unwrap();
        assert!(report.contains("CHECK energy_scales_as_n_squared: PASS"));
    }

    #[test]
    fn invalid_flag_writes_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("out");
        assert_eq!(
            run([
                "boxmode",
                "--out",
                out.to_str().unwrap(),
                "well",
                "energies",
                "--bogus",
                "1"
            ]),
            2
        );
        assert_eq!(
            run([
                "boxmode",
                "--out",
                out.to_str().unwrap(),
                "well",
                "energies",
                "--n-max",
                "0"
            ]),
            2
        );
        assert_eq!(
            run([
                "boxmode",
                "--out",
                out.to_str().unwrap(),
                "--digits",
                "0",
                "well",
                "energies"
            ]),
            2
        );
        assert!(!out.exists());
    }

    #[test]
    fn compare_writes_spike_sidecar() {
        let dir = tempfile::tempdir().unwrap();
        assert_eq!(run_in(dir.path(), &["momentum", "compare", "--n", "1"]), 0);
        let main = fs::read_to_string(dir.path().join("momentum_compare.csv")).unwrap();
        assert!(main.starts_with("p,continuous_density\n"));
        let spikes = fs::read_to_string(dir.path().join("momentum_compare_spikes.csv")).unwrap();
        assert_eq!(
            spikes,
            "momentum,weight\n1.570796326795e0,5.000000000000e-1\n-1.570796326795e0,5.000000000000e-1\n"
        );
    }

    #[test]
    fn failing_check_exits_one() {
        let dir = tempfile::tempdir().unwrap();
        let code = run_in(dir.path(), &["release", "farfield", "--t", "5", "--tolerance", "1e-9"]);
        assert_eq!(code, 1);
        let report = fs::read_to_string(dir.path().join("release_farfield_report.txt")).unwrap();
        assert!(report.contains("CHECK farfield_sup_distance: FAIL"));
    }
}
