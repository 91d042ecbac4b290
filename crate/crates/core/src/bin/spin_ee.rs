//! Command-line front-end: spectrum tables, effective temperatures,
//! entropy and fluctuation reports, parameter scans, and the exact
//! oracle check suite. Emits CSV or JSON to stdout or a file.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage error, 3 numerical
//! failure.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use spin_ee::amplitudes::spectrum_grid;
use spin_ee::dos::DosModel;
use spin_ee::gap::GapProfile;
use spin_ee::grid;
use spin_ee::io::{parse_dos_table, parse_grid_spec, Table};
use spin_ee::observables;
use spin_ee::oracle;
use spin_ee::quadrature::QuadOptions;
use spin_ee::thermal;
use spin_ee::{Error, ModelParams};

/// Output-directory override for relative `--output` paths.
const OUTPUT_DIR_ENV: &str = "SPIN_EE_OUTPUT_DIR";

#[derive(Parser)]
#[command(name = "spin-ee", version, about = "BCS spin-entanglement numerics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DosKind {
    Constant,
    Power3d,
    Table,
}

#[derive(Args)]
struct CommonOpts {
    /// Pairing energy
    #[arg(long, default_value_t = 1.0)]
    delta: f64,
    /// Debye energy (half-width of the pairing shell)
    #[arg(long, default_value_t = 10.0)]
    debye: f64,
    /// Fermi energy
    #[arg(long, default_value_t = 100.0)]
    mu: f64,
    /// Density-of-states model
    #[arg(long, value_enum, default_value_t = DosKind::Constant)]
    dos: DosKind,
    /// g(0) for the constant DOS
    #[arg(long, default_value_t = 1.0)]
    g0: f64,
    /// Scale prefactor for the 3D power-law DOS
    #[arg(long, default_value_t = 1.0)]
    dos_scale: f64,
    /// Two-column CSV (xi, g) for the tabulated DOS
    #[arg(long)]
    dos_file: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file (default: stdout). Relative paths honor SPIN_EE_OUTPUT_DIR.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Absolute quadrature tolerance
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
}

#[derive(Args)]
struct GridOpts {
    /// Grid spec min:max:points
    #[arg(long, default_value = "-5:5:101", allow_hyphen_values = true)]
    grid: String,
    /// Sign-symmetric log-spaced grid (requires min = -max); magnitudes
    /// span max * 1e-6 .. max
    #[arg(long)]
    log_symmetric: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Entanglement spectrum table over a grid of orbital energies
    Spectrum {
        #[command(flatten)]
        common: CommonOpts,
        #[command(flatten)]
        grid: GridOpts,
    },
    /// Mode-dependent effective temperature and the canonical/critical pair
    BetaEff {
        #[command(flatten)]
        common: CommonOpts,
        #[command(flatten)]
        grid: GridOpts,
    },
    /// Integrated spin entanglement entropy vs the closed-form area law
    Entropy {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Number-fluctuation variances, entropy ratio, and MEP
    Fluctuations {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Long-format report table over a (delta, debye) parameter grid
    Scan {
        #[command(flatten)]
        common: CommonOpts,
        /// Comma-separated pairing energies
        #[arg(long, required = true)]
        deltas: String,
        /// Comma-separated Debye energies
        #[arg(long, required = true)]
        debyes: String,
    },
    /// Run the exact dense partial-trace oracle against the analytic sums
    OracleCheck {
        #[command(flatten)]
        common: CommonOpts,
        /// RNG seed for the random orbital-energy draws
        #[arg(long, default_value_t = 12345)]
        seed: u64,
        /// Largest mode count to exercise
        #[arg(long, default_value_t = 6)]
        max_modes: usize,
        /// Random configurations per mode count
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Equivalence tolerance for oracle-vs-analytic comparisons
        #[arg(long, default_value_t = 1e-12)]
        equivalence_tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Spectrum { common, grid } => cmd_spectrum(&common, &grid),
        Command::BetaEff { common, grid } => cmd_beta_eff(&common, &grid),
        Command::Entropy { common } => cmd_entropy(&common),
        Command::Fluctuations { common } => cmd_fluctuations(&common),
        Command::Scan {
            common,
            deltas,
            debyes,
        } => cmd_scan(&common, &deltas, &debyes),
        Command::OracleCheck {
            common,
            seed,
            max_modes,
            trials,
            equivalence_tol,
        } => cmd_oracle_check(&common, seed, max_modes, trials, equivalence_tol),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("spin-ee: {err}");
            match err {
                Error::Numerical { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn build_params(c: &CommonOpts) -> Result<ModelParams, Error> {
    ModelParams::new(c.delta, c.debye, c.mu)
}

fn build_dos(c: &CommonOpts) -> Result<DosModel, Error> {
    match c.dos {
        DosKind::Constant => DosModel::constant(c.g0),
        DosKind::Power3d => DosModel::power_law_3d_scaled(c.mu, c.dos_scale),
        DosKind::Table => {
            let path = c.dos_file.as_ref().ok_or_else(|| {
                Error::InvalidInput("--dos table requires --dos-file".into())
            })?;
            DosModel::tabulated(parse_dos_table(&std::fs::read_to_string(path)?)?)
        }
    }
}

fn build_grid(g: &GridOpts) -> Result<Vec<f64>, Error> {
    let spec = parse_grid_spec(&g.grid)?;
    if g.log_symmetric {
        if spec.min != -spec.max || spec.max.is_nan() || spec.max <= 0.0 {
            return Err(Error::InvalidInput(
                "--log-symmetric requires a grid of the form -M:M:points".into(),
            ));
        }
        grid::log_symmetric(spec.max * 1e-6, spec.max, spec.points)
    } else {
        grid::linear(spec.min, spec.max, spec.points)
    }
}

fn quad_options(c: &CommonOpts) -> Result<QuadOptions, Error> {
    if c.tolerance.is_nan() || c.tolerance <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "tolerance must be > 0, got {}",
            c.tolerance
        )));
    }
    Ok(QuadOptions {
        abs_tol: c.tolerance,
        ..QuadOptions::default()
    })
}

fn config_echo(c: &CommonOpts, extra: Value) -> Value {
    let mut config = json!({
        "delta": c.delta,
        "debye": c.debye,
        "mu": c.mu,
        "dos": match c.dos {
            DosKind::Constant => "constant",
            DosKind::Power3d => "power_law_3d",
            DosKind::Table => "tabulated",
        },
        "g0": c.g0,
        "tolerance": c.tolerance,
    });
    if let (Some(obj), Some(add)) = (config.as_object_mut(), extra.as_object()) {
        for (k, v) in add {
            obj.insert(k.clone(), v.clone());
        }
    }
    config
}

fn emit(table: &Table, c: &CommonOpts, config: &Value) -> Result<(), Error> {
    let mut sink: Box<dyn Write> = match &c.output {
        Some(path) => {
            let path = match std::env::var_os(OUTPUT_DIR_ENV) {
                Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
                _ => path.clone(),
            };
            Box::new(File::create(path)?)
        }
        None => Box::new(std::io::stdout().lock()),
    };
    match c.format {
        Format::Csv => table.write_csv(&mut sink),
        Format::Json => table.write_json(&mut sink, config),
    }
}

fn cmd_spectrum(c: &CommonOpts, g: &GridOpts) -> Result<ExitCode, Error> {
    let params = build_params(c)?;
    let dos = build_dos(c)?;
    let grid = build_grid(g)?;
    let points = spectrum_grid(&grid, &params)?;
    // canonical overlay column is undefined in the normal-metal limit
    let beta0 = if c.delta > 0.0 {
        Some(thermal::canonical_temperatures(c.delta)?.beta_eff_0)
    } else {
        None
    };

    let mut table = Table::new(&[
        "xi",
        "u2",
        "v2",
        "entropy",
        "beta_eff",
        "fermi_canonical",
        "residual_canonical",
        "weighted_entropy",
    ]);
    for pt in &points {
        let (fermi, residual) = match beta0 {
            Some(b0) => {
                let f = thermal::fermi_occupation(pt.xi, b0)?;
                (f, pt.v2 - f)
            }
            None => (f64::NAN, f64::NAN),
        };
        table.push(vec![
            pt.xi,
            pt.u2,
            pt.v2,
            pt.entropy,
            pt.beta_eff,
            fermi,
            residual,
            pt.entropy * dos.evaluate(pt.xi)?,
        ]);
    }
    emit(&table, c, &config_echo(c, json!({"command": "spectrum", "grid": g.grid})))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_beta_eff(c: &CommonOpts, g: &GridOpts) -> Result<ExitCode, Error> {
    let params = build_params(c)?;
    let temps = thermal::canonical_temperatures(c.delta)?;
    let grid = build_grid(g)?;

    let mut table = Table::new(&[
        "xi",
        "beta_eff",
        "beta_eff_delta",
        "beta_eff_0",
        "beta_c",
        "relative_gap",
    ]);
    for &xi in &grid {
        let b = if params.in_shell(xi) {
            thermal::beta_eff(xi, c.delta)?
        } else {
            f64::INFINITY
        };
        table.push(vec![
            xi,
            b,
            b * c.delta,
            temps.beta_eff_0,
            temps.beta_c,
            temps.relative_gap,
        ]);
    }
    emit(&table, c, &config_echo(c, json!({"command": "beta-eff", "grid": g.grid})))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_entropy(c: &CommonOpts) -> Result<ExitCode, Error> {
    let params = build_params(c)?;
    let dos = build_dos(c)?;
    let gap = GapProfile::constant(c.delta)?;
    let opts = quad_options(c)?;

    let s = observables::entropy_integral(&dos, &params, &gap, &opts)?;
    let law = observables::entropy_area_law(dos.evaluate(0.0)?, c.delta);
    let mut table = Table::new(&[
        "s_integral",
        "s_area_law",
        "relative_gap",
        "error_estimate",
    ]);
    table.push(vec![
        s.value,
        law,
        (s.value - law).abs() / law,
        s.error_estimate,
    ]);
    emit(&table, c, &config_echo(c, json!({"command": "entropy"})))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_fluctuations(c: &CommonOpts) -> Result<ExitCode, Error> {
    let params = build_params(c)?;
    let dos = build_dos(c)?;
    let gap = GapProfile::constant(c.delta)?;
    let opts = quad_options(c)?;

    let v = observables::variance_integral(&dos, &params, &gap, &opts)?;
    let s = observables::entropy_integral(&dos, &params, &gap, &opts)?;
    let mut table = Table::new(&[
        "sigma_up_sq",
        "sigma_total_sq",
        "entropy_ratio",
        "mep",
        "error_estimate",
    ]);
    table.push(vec![
        v.variance_up,
        v.variance_total,
        s.value / v.variance_total,
        observables::mep_from_entropy(s.value)?,
        v.quadrature_error_estimate.max(s.error_estimate),
    ]);
    emit(&table, c, &config_echo(c, json!({"command": "fluctuations"})))?;
    Ok(ExitCode::SUCCESS)
}

fn parse_list(name: &str, list: &str) -> Result<Vec<f64>, Error> {
    let values: Result<Vec<f64>, _> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad value '{s}' in --{name}")))
        })
        .collect();
    let values = values?;
    if values.is_empty() {
        return Err(Error::InvalidInput(format!("--{name} list is empty")));
    }
    Ok(values)
}

fn cmd_scan(c: &CommonOpts, deltas: &str, debyes: &str) -> Result<ExitCode, Error> {
    let deltas = parse_list("deltas", deltas)?;
    let debyes = parse_list("debyes", debyes)?;
    let dos = build_dos(c)?;
    let opts = quad_options(c)?;

    let mut table = Table::new(&[
        "delta",
        "debye",
        "mu",
        "s_integral",
        "s_area_law",
        "area_law_relative_gap",
        "sigma_up_sq",
        "sigma_total_sq",
        "entropy_ratio",
        "mep",
        "error_estimate",
    ]);
    // deterministic row order: deltas outer, debyes inner
    for &delta in &deltas {
        for &debye in &debyes {
            let params = ModelParams::new(delta, debye, c.mu)?;
            let gap = GapProfile::constant(delta)?;
            let rep = observables::report(&dos, &params, &gap, &opts)?;
            table.push(vec![
                delta,
                debye,
                c.mu,
                rep.entropy_total,
                rep.entropy_area_law,
                (rep.entropy_total - rep.entropy_area_law).abs() / rep.entropy_area_law,
                rep.variance_up,
                rep.variance_total,
                rep.entropy_total / rep.variance_total,
                rep.mep,
                rep.quadrature_error_estimate,
            ]);
        }
    }
    emit(&table, c, &config_echo(c, json!({"command": "scan"})))?;
    Ok(ExitCode::SUCCESS)
}

struct CheckAccumulator {
    name: &'static str,
    tolerance: f64,
    max_error: f64,
}

impl CheckAccumulator {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            tolerance,
            max_error: 0.0,
        }
    }
    fn record(&mut self, err: f64) {
        self.max_error = self.max_error.max(err);
    }
    fn pass(&self) -> bool {
        self.max_error < self.tolerance
    }
}

fn cmd_oracle_check(
    c: &CommonOpts,
    seed: u64,
    max_modes: usize,
    trials: usize,
    equivalence_tol: f64,
) -> Result<ExitCode, Error> {
    if !(1..=oracle::MAX_MODES).contains(&max_modes) {
        return Err(Error::Capacity(format!(
            "--max-modes must be 1..={}, got {max_modes}",
            oracle::MAX_MODES
        )));
    }
    let params = build_params(c)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut norm = CheckAccumulator::new("state_norm", equivalence_tol);
    let mut entropy = CheckAccumulator::new("entropy_vs_discrete_sum", equivalence_tol);
    let mut variance = CheckAccumulator::new("variance_vs_discrete_sum", equivalence_tol);
    let mut offdiag = CheckAccumulator::new("rho_up_off_diagonal", 1e-14);
    let mut spectrum = CheckAccumulator::new("eigenvalue_multiset", equivalence_tol);

    for n in 1..=max_modes {
        for _ in 0..trials {
            let xis: Vec<f64> = (0..n)
                .map(|_| rng.gen_range(-params.debye..params.debye))
                .collect();
            let state = oracle::build_state(&xis, &params)?;

            norm.record((oracle::state_norm(&state) - 1.0).abs());
            entropy.record(
                (oracle::oracle_entropy(&state)?
                    - observables::entropy_discrete(&xis, &params)?)
                .abs(),
            );
            variance.record(
                (oracle::oracle_variance(&state)
                    - observables::variance_discrete(&xis, &params)?)
                .abs(),
            );
            offdiag.record(oracle::max_off_diagonal(&state));

            let mut got = oracle::eigenvalues(&state)?;
            let mut expect = oracle::product_spectrum(&xis, &params)?;
            got.sort_by(|a, b| a.partial_cmp(b).unwrap());
            expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let worst = got
                .iter()
                .zip(&expect)
                .map(|(g, e)| (g - e).abs())
                .fold(0.0, f64::max);
            spectrum.record(worst);
        }
    }

    let checks = [norm, entropy, variance, offdiag, spectrum];
    let all_pass = checks.iter().all(CheckAccumulator::pass);
    let verdict = json!({
        "config": {
            "seed": seed,
            "max_modes": max_modes,
            "trials": trials,
            "delta": c.delta,
            "debye": c.debye,
            "mu": c.mu,
            "equivalence_tol": equivalence_tol,
        },
        "checks": checks.iter().map(|ch| json!({
            "name": ch.name,
            "max_error": ch.max_error,
            "tolerance": ch.tolerance,
            "pass": ch.pass(),
        })).collect::<Vec<_>>(),
        "pass": all_pass,
    });

    let text = serde_json::to_string_pretty(&verdict)
        .map_err(|e| Error::Parse(format!("JSON serialization failed: {e}")))?;
    match &c.output {
        Some(path) => {
            let path = match std::env::var_os(OUTPUT_DIR_ENV) {
                Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
                _ => path.clone(),
            };
            std::fs::write(path, format!("{text}\n"))?;
        }
        None => println!("{text}"),
    }

    if all_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
