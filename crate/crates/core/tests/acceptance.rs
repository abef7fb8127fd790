//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.
//!
//! Tolerances are fixed here and not tuned per run.

use std::f64::consts::PI;
use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use boxmode::continuous::{self, MomentumGrid};
use boxmode::discrete::{self, ExtensionPhase, DEFAULT_K_MAX};
use boxmode::landau::{self, Gauge, GaugeField, Grid2D, GridField2D, LandauSpec};
use boxmode::release;
use boxmode::well::{EigenstateIndex, WellSpec};
use boxmode::{cli, Quadrature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn idx(n: i64) -> EigenstateIndex {
    EigenstateIndex::new(n).expect("positive quantum number")
}

fn ground_density_closed_form() -> Outcome {
    let spec = WellSpec::natural();
    let quad = Quadrature::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut momenta: Vec<f64> = (0..10_000).map(|_| rng.gen_range(-10.0 * PI..=10.0 * PI)).collect();
    for centre in [-PI / 2.0, PI / 2.0] {
        momenta.extend((0..200).map(|_| centre + rng.gen_range(-1e-6..=1e-6)));
        momenta.push(centre);
    }
    let worst = momenta
        .iter()
        .map(|&p| {
            (continuous::amplitude_transform(&spec, idx(1), p, &quad).norm_sqr()
                - continuous::analytic_density_ground(&spec, p))
            .abs()
        })
        .fold(0.0, f64::max);
    outcome(
        worst <= 1e-8,
        format!("max |diff| = {worst:.3e} over {} momenta (tol 1e-8)", momenta.len()),
    )
}

fn two_spike_spectra() -> Outcome {
    let spec = WellSpec::natural();
    let quad = Quadrature::default();
    let exact = discrete::eigenstate_spectrum(&spec, idx(1));
    let mut spikes: Vec<(f64, f64)> = exact.entries.iter().map(|e| (e.momentum, e.weight)).collect();
    spikes.sort_by(|a, b| a.0.total_cmp(&b.0));
    let shape_ok = spikes.len() == 2
        && (spikes[0].0 + PI / 2.0).abs() < 1e-15
        && (spikes[1].0 - PI / 2.0).abs() < 1e-15
        && spikes.iter().all(|s| s.1 == 0.5);

    let (mut spike_dev, mut off_spike) = (0.0f64, 0.0f64);
    for n in 1..=10 {
        let n = idx(n);
        let exact = discrete::eigenstate_spectrum(&spec, n);
        let s = discrete::expand_eigenstate(&spec, n, ExtensionPhase::matching(n), DEFAULT_K_MAX, &quad)
            .expect("normalized");
        for e in &s.entries {
            match exact.weight_at(e.k) {
                Some(w) => spike_dev = spike_dev.max((e.weight - w).abs()),
                None => off_spike = off_spike.max(e.weight),
            }
        }
    }
    outcome(
        shape_ok && spike_dev < 1e-12 && off_spike < 1e-12,
        format!("n=1 spikes at ±π/2 weight 1/2: {shape_ok}; n<=10 spike dev {spike_dev:.2e}, off-spike max {off_spike:.2e} (tol 1e-12)"),
    )
}

fn normalization_duo() -> Outcome {
    let spec = WellSpec::natural();
    let quad = Quadrature::default();
    let (mut lo, mut hi, mut defect) = (f64::INFINITY, f64::NEG_INFINITY, 0.0f64);
    for n in 1..=10 {
        let n = idx(n);
        let total = continuous::spectrum(&spec, n, &MomentumGrid::default_for(&spec, n), &quad).total_probability();
        lo = lo.min(total);
        hi = hi.max(total);
        let s = discrete::expand_eigenstate(&spec, n, ExtensionPhase::matching(n), DEFAULT_K_MAX, &quad)
            .expect("normalized");
        defect = defect.max(s.parseval_defect());
    }
    outcome(
        lo >= 0.999 && hi <= 1.0 + 1e-9 && defect < 1e-8,
        format!("continuous integral in [{lo:.9}, {hi:.12}] (need [0.999, 1+1e-9]); Parseval defect max {defect:.2e} (tol 1e-8)"),
    )
}

fn uncertainty() -> Outcome {
    let spec = WellSpec::natural();
    let quad = Quadrature::default();
    let oracle = ((1.0 / 3.0 - 2.0 / (PI * PI)) * PI * PI / 4.0).sqrt();
    let u1 = continuous::uncertainty_product(&spec, idx(1), &quad).product;
    let min = (1..=50)
        .map(|n| continuous::uncertainty_product(&spec, idx(n), &quad).product)
        .fold(f64::INFINITY, f64::min);
    outcome(
        (u1 - 0.567862).abs() <= 1e-5 && (u1 - oracle).abs() <= 1e-12 && min > 0.5,
        format!("n=1 product {u1:.9} (target 0.567862 ± 1e-5, oracle {oracle:.9}); min over n<=50 {min:.6} > 0.5"),
    )
}

// Frozen baseline: 1 - mass of P_n inside |p ∓ nπ/2| < π/2, natural units.
const WINDOW_DEFECT: [(i64, f64); 6] = [
    (1, 0.029_905_947_229_965_5),
    (2, 0.186_056_004_083_742_6),
    (4, 0.216_671_575_252_992),
    (8, 0.223_921_958_005_644_9),
    (16, 0.225_710_792_912_757_8),
    (32, 0.226_156_538_018_457_6),
];

fn large_n_convergence() -> Outcome {
    let spec = WellSpec::natural();
    let quad = Quadrature::default();
    let window = spec.momentum_quantum();
    let mut defects = Vec::new();
    let mut fixture_dev = 0.0f64;
    for (n, frozen) in WINDOW_DEFECT {
        let d = discrete::convergence_report(&spec, idx(n), window, &quad)
            .expect("valid window")
            .defect;
        fixture_dev = fixture_dev.max((d - frozen).abs());
        defects.push(d);
    }
    let decreasing = defects.windows(2).all(|w| w[1] < w[0]);
    let listing: Vec<String> = defects.iter().map(|d| format!("{d:.4}")).collect();
    let mut detail = format!(
        "defects n=1,2,4,8,16,32: [{}]; fixture dev {fixture_dev:.1e}; strictly decreasing: {decreasing}",
        listing.join(", ")
    );
    if !decreasing {
        detail.push_str(
            "; with a fixed window the spikes' neighbourhoods hold a fixed fraction of the \
             density as n grows, so the defect rises to a limit near 0.226 instead of falling",
        );
    }
    outcome(decreasing && fixture_dev < 1e-10, detail)
}

fn far_field() -> Outcome {
    let spec = WellSpec::natural();
    let p_limit = 3.0 * PI;
    let mut distances = Vec::new();
    for t in [50.0, 100.0, 200.0] {
        let snap = match release::evolve_free_auto(&spec, idx(1), t, release::DEFAULT_RESOLUTION) {
            Ok(s) => s,
            Err(e) => return outcome(false, format!("t={t}: {e}")),
        };
        let far = release::farfield_map(&snap, &spec).expect("t > 0");
        distances.push(far.sup_distance(|p| continuous::analytic_density_ground(&spec, p), p_limit));
    }
    let monotone = distances.windows(2).all(|w| w[1] < w[0]);
    outcome(
        monotone && distances[2] < 0.01,
        format!(
            "sup distance t=50,100,200: {:.3e}, {:.3e}, {:.3e}; decreasing: {monotone}; final < 0.01",
            distances[0], distances[1], distances[2]
        ),
    )
}

fn eigen_residuals() -> Outcome {
    let spec = LandauSpec::natural(1.0, 10.0, 10.0).expect("valid");
    let ell = spec.magnetic_length();
    let mut worst = 0.0f64;
    let mut worst_gain = f64::INFINITY;
    let mut record = |state: &dyn Fn(f64) -> GridField2D, gauge: Gauge, n: u32| {
        let field = GaugeField::for_spec(gauge, &spec);
        let e = spec.level_energy(n);
        let coarse = landau::hamiltonian_residual(&spec, &field, &state(ell / 8.0), e).expect("resolved");
        let fine = landau::hamiltonian_residual(&spec, &field, &state(ell / 16.0), e).expect("resolved");
        worst = worst.max(coarse);
        worst_gain = worst_gain.min(coarse / fine);
    };
    for n in 0..2 {
        for p_x in [-1.0, 0.0, 1.0] {
            let y_p = spec.guiding_center(p_x);
            record(
                &|h| {
                    let grid = Grid2D::centered(0.0, y_p, 2.0 * ell, 7.0 * ell, h).expect("grid");
                    landau::landau_gauge_state(&spec, grid, n, p_x).expect("n >= 0")
                },
                Gauge::Landau,
                n as u32,
            );
        }
    }
    for l in 0..=3 {
        record(
            &|h| {
                let grid = Grid2D::centered(0.0, 0.0, 7.0 * ell, 7.0 * ell, h).expect("grid");
                landau::symmetric_gauge_state(&spec, grid, 0, l).expect("indices >= 0")
            },
            Gauge::Symmetric,
            0,
        );
    }
    outcome(
        worst < 1e-3 && worst_gain >= 4.0,
        format!("max residual at l/8 {worst:.3e} (tol 1e-3); min gain on halving {worst_gain:.2} (need >= 4)"),
    )
}

fn commutator() -> Outcome {
    let spec = LandauSpec::natural(1.0, 10.0, 10.0).expect("valid");
    let grid = Grid2D::centered(0.0, 0.0, 6.0, 6.0, 0.125).expect("grid");
    let probe = GridField2D::gaussian(grid, 0.2, -0.1, 1.0);
    let r_landau =
        landau::commutator_check(&spec, &GaugeField::for_spec(Gauge::Landau, &spec), &probe).expect("resolved");
    let r_sym =
        landau::commutator_check(&spec, &GaugeField::for_spec(Gauge::Symmetric, &spec), &probe).expect("resolved");
    let r_free = [Gauge::Landau, Gauge::Symmetric]
        .iter()
        .map(|&g| landau::commutator_check(&spec, &GaugeField::new(g, 0.0), &probe).expect("resolved"))
        .fold(0.0, f64::max);
    outcome(
        r_landau < 1e-3 && r_sym < 1e-3 && r_free < 1e-10,
        format!("Landau {r_landau:.3e}, symmetric {r_sym:.3e} (tol 1e-3); zero field {r_free:.1e} (tol 1e-10)"),
    )
}

fn degeneracy_triple() -> Outcome {
    let sets = [
        (2.0 * PI, 1.0, 1.0),
        (1.0, 10.0, 10.0),
        (1.0, 20.0, 20.0),
        (2.0, 20.0, 25.0),
        (2.0 * PI, 10.0, 20.0),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (b, lx, ly) in sets {
        let spec = LandauSpec::natural(b, lx, ly).expect("valid");
        let d = landau::degeneracy(&spec);
        let centres = landau::guiding_center_count(&spec);
        let rings = landau::ring_count(&spec);
        ok &= d.count.abs_diff(centres) <= 1 && d.count.abs_diff(rings) <= 1;
        parts.push(format!("G={:.2}: {}/{}/{}", d.ratio, d.count, centres, rings));
    }
    outcome(ok, format!("flux/centres/rings {}", parts.join("; ")))
}

fn hall_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let b = 10f64.powf(rng.gen_range(-3.0..3.0));
        let lx = 10f64.powf(rng.gen_range(-2.0..4.0));
        let ly = 10f64.powf(rng.gen_range(-2.0..4.0));
        let v = rng.gen_range(-1e3..1e3);
        let q = 10f64.powf(rng.gen_range(-1.0..1.0));
        let hbar = 10f64.powf(rng.gen_range(-1.0..1.0));
        let c = 10f64.powf(rng.gen_range(0.0..3.0));
        let spec = LandauSpec::new(b, -q, 1.0, c, hbar, lx, ly).expect("valid");
        let h = landau::hall_current(&spec, v);
        let quantum = q * q / (2.0 * PI * hbar);
        worst = worst.max((h.conductance / quantum - 1.0).abs());
        if v != 0.0 {
            worst = worst.max((h.per_level / (-quantum * v) - 1.0).abs());
        }
    }
    outcome(
        worst <= 1e-12,
        format!("max relative deviation from q^2/h over 10^4 draws {worst:.2e} (tol 1e-12)"),
    )
}

const COMMANDS: [&[&str]; 11] = [
    &["well", "energies"],
    &["well", "eigenfunction"],
    &["momentum", "continuous"],
    &["momentum", "discrete"],
    &["momentum", "compare"],
    &["release", "evolve"],
    &["release", "farfield"],
    &["landau", "state"],
    &["landau", "degeneracy"],
    &["landau", "hall"],
    &["landau", "checks"],
];

fn csv_files(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(dir)
        .map(|it| {
            it.filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| p.extension().is_some_and(|x| x == "csv"))
                .map(|p| {
                    (
                        p.file_name().unwrap().to_string_lossy().into_owned(),
                        fs::read(&p).unwrap_or_default(),
                    )
                })
                .collect()
        })
        .unwrap_or_default();
    files.sort();
    files
}

fn determinism() -> Outcome {
    let root = match tempfile::tempdir() {
        Ok(d) => d,
        Err(e) => return outcome(false, format!("tempdir: {e}")),
    };
    let mut mismatched = Vec::new();
    let mut compared = 0;
    for cmd in COMMANDS {
        let stem = cmd.join("_");
        let runs: Vec<Vec<(String, Vec<u8>)>> = ["a", "b"]
            .iter()
            .map(|tag| {
                let dir = root.path().join(tag).join(&stem);
                let mut argv = vec!["boxmode", "--out", dir.to_str().expect("utf-8 path")];
                argv.extend_from_slice(cmd);
                cli::run(argv);
                csv_files(&dir)
            })
            .collect();
        compared += runs[0].len();
        if runs[0].is_empty() || runs[0] != runs[1] {
            mismatched.push(stem);
        }
    }
    outcome(
        mismatched.is_empty(),
        format!(
            "{} subcommands, {compared} CSV files compared; mismatched: {:?}",
            COMMANDS.len(),
            mismatched
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("ground-state density closed form", ground_density_closed_form),
        ("two-spike discrete spectra", two_spike_spectra),
        ("normalization duo", normalization_duo),
        ("uncertainty product", uncertainty),
        ("large-n convergence, fixed window", large_n_convergence),
        ("far-field release", far_field),
        ("Landau eigen-residuals", eigen_residuals),
        ("kinematic commutator", commutator),
        ("degeneracy triple agreement", degeneracy_triple),
        ("Hall conductance identity", hall_identity),
        ("CLI determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        failures += usize::from(!o.passed);
        println!(
            "[{verdict}] AC{:<2} {name}: {} ({:.2} s)",
            i + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
