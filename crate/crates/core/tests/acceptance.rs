//! Acceptance suite: one test per release criterion, each printing a
//! pass line (run with `cargo test --test acceptance -- --nocapture`
//! to see them).

use std::f64::consts::PI;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spin_ee::dos::DosModel;
use spin_ee::gap::GapProfile;
use spin_ee::grid;
use spin_ee::observables;
use spin_ee::oracle;
use spin_ee::quadrature::QuadOptions;
use spin_ee::thermal;
use spin_ee::ModelParams;

const BIN: &str = env!("CARGO_BIN_EXE_spin-ee");

fn report(criterion: &str) {
    println!("acceptance: {criterion}: PASS");
}

#[test]
fn criterion_01_canonical_effective_temperature() {
    let t = thermal::canonical_temperatures(1.0).unwrap();
    assert!(
        (t.beta_eff_0 - 1.7627).abs() <= 1e-4,
        "beta_eff_0 = {}",
        t.beta_eff_0
    );
    report("01 canonical effective temperature beta_eff_0 = 1.7627 (+-1e-4)");
}

#[test]
fn criterion_02_critical_temperature_and_gap() {
    let t = thermal::canonical_temperatures(1.0).unwrap();
    assert!((t.beta_c - 1.7639).abs() <= 1e-4, "beta_c = {}", t.beta_c);
    assert!(
        (t.beta_c - PI * (-thermal::EULER_GAMMA).exp()).abs() < 1e-15,
        "beta_c deviates from pi e^-gamma"
    );
    assert!(t.relative_gap < 1e-3, "relative gap = {}", t.relative_gap);
    report("02 critical temperature beta_c = 1.7639 (+-1e-4), gap < 1e-3");
}

#[test]
fn criterion_03_area_law_convergence() {
    let dos = DosModel::constant(1.0).unwrap();
    let gap = GapProfile::constant(1.0).unwrap();
    let opts = QuadOptions::default();
    let mut deviations = Vec::new();
    for debye in [1e2, 1e3, 1e4] {
        let params = ModelParams::new(1.0, debye, debye * 100.0).unwrap();
        let s = observables::entropy_integral(&dos, &params, &gap, &opts).unwrap();
        deviations.push((s.value - PI).abs() / PI);
    }
    assert!(
        deviations[2] < 0.0015,
        "relative deviation at debye=1e4: {}",
        deviations[2]
    );
    assert!(
        deviations[0] > deviations[1] && deviations[1] > deviations[2],
        "deviations not monotone: {deviations:?}"
    );
    // the tail bound (delta^2/2)(3 + 2 ln(2 debye/delta))/debye caps
    // each finite-shell deficit
    for (&dev, debye) in deviations.iter().zip([1e2f64, 1e3, 1e4]) {
        let bound = 0.5 * (3.0 + 2.0 * (2.0 * debye).ln()) / debye / PI;
        assert!(dev <= bound * 1.05, "deviation {dev} above tail bound {bound}");
    }
    report("03 area law: S = pi within 0.15% at debye=1e4, deficit monotone in debye");
}

#[test]
fn criterion_04_linearity_in_delta() {
    let dos = DosModel::constant(1.0).unwrap();
    let opts = QuadOptions::default();
    let mut ratios = Vec::new();
    for delta in [0.5, 1.0, 2.0] {
        let debye = 1e4 * delta;
        let params = ModelParams::new(delta, debye, debye * 100.0).unwrap();
        let gap = GapProfile::constant(delta).unwrap();
        let s = observables::entropy_integral(&dos, &params, &gap, &opts).unwrap();
        ratios.push(s.value / delta);
    }
    let mean: f64 = ratios.iter().sum::<f64>() / ratios.len() as f64;
    for r in &ratios {
        assert!(
            (r - mean).abs() / mean < 0.002,
            "S/delta spread too wide: {ratios:?}"
        );
    }
    report("04 linearity: S/delta constant within 0.2% across delta = 0.5, 1, 2");
}

#[test]
fn criterion_05_fluctuation_identity() {
    let dos = DosModel::constant(1.0).unwrap();
    let params = ModelParams::new(1.0, 1e4, 1e6).unwrap();
    let gap = GapProfile::constant(1.0).unwrap();
    let opts = QuadOptions::default();
    let v = observables::variance_integral(&dos, &params, &gap, &opts).unwrap();
    assert!(
        (v.variance_up - PI / 4.0).abs() / (PI / 4.0) < 0.002,
        "sigma_up^2 = {}",
        v.variance_up
    );
    let ratio = observables::entropy_fluctuation_ratio(&dos, &params, &opts).unwrap();
    assert!((ratio - 1.0).abs() < 0.002, "entropy ratio = {ratio}");
    report("05 fluctuation identity: sigma_up^2 = pi/4 and S/(4 sigma_up^2) = 1, both 0.2%");
}

#[test]
fn criterion_06_closed_form_variance() {
    let opts = QuadOptions {
        abs_tol: 1e-12,
        ..QuadOptions::default()
    };
    for (g0, delta, debye) in [
        (1.0, 1.0, 1.0),
        (1.0, 1.0, 10.0),
        (2.5, 1.0, 1e3),
        (1.0, 2.0, 50.0),
    ] {
        let dos = DosModel::constant(g0).unwrap();
        let params = ModelParams::new(delta, debye, debye * 100.0).unwrap();
        let gap = GapProfile::constant(delta).unwrap();
        let v = observables::variance_integral(&dos, &params, &gap, &opts).unwrap();
        let closed = g0 * delta / 2.0 * (debye / delta).atan();
        assert!(
            (v.variance_up - closed).abs() < 1e-9,
            "variance {} vs closed form {closed}",
            v.variance_up
        );
    }
    report("06 closed-form variance: (g0 delta/2) atan(debye/delta) to 1e-9");
}

#[test]
fn criterion_07_gge_defining_identity() {
    let params = ModelParams::new(1.0, 1e3, 1e5).unwrap();
    let xs = grid::log_symmetric(1e-6, 1e3, 100_001).unwrap();
    let mut max_err = 0.0f64;
    for &xi in &xs {
        if xi == 0.0 {
            continue;
        }
        let v2 = spin_ee::amplitudes::occupation_probability(xi, &params).unwrap();
        let beta = thermal::beta_eff(xi, params.delta).unwrap();
        let f = thermal::fermi_occupation(xi, beta).unwrap();
        max_err = max_err.max((f - v2).abs());
    }
    assert!(max_err < 1e-12, "max GGE identity error {max_err}");
    report("07 GGE identity: max |fermi(xi, beta_eff(xi)) - v^2(xi)| < 1e-12 on 1e5 points");
}

#[test]
fn criterion_08_exact_oracle_equivalence() {
    let params = ModelParams::new(1.0, 10.0, 100.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20260826);
    for n in 1..=6usize {
        for _ in 0..20 {
            let xis: Vec<f64> = (0..n)
                .map(|_| rng.gen_range(-params.debye..params.debye))
                .collect();
            let state = oracle::build_state(&xis, &params).unwrap();

            let s_oracle = oracle::oracle_entropy(&state).unwrap();
            let s_analytic = observables::entropy_discrete(&xis, &params).unwrap();
            assert!(
                (s_oracle - s_analytic).abs() < 1e-12,
                "entropy mismatch at n={n}: {s_oracle} vs {s_analytic}"
            );

            let v_oracle = oracle::oracle_variance(&state);
            let v_analytic = observables::variance_discrete(&xis, &params).unwrap();
            assert!(
                (v_oracle - v_analytic).abs() < 1e-12,
                "variance mismatch at n={n}"
            );

            assert!(
                oracle::max_off_diagonal(&state) < 1e-14,
                "rho_up not diagonal at n={n}"
            );

            let mut got = oracle::eigenvalues(&state).unwrap();
            let mut expect = oracle::product_spectrum(&xis, &params).unwrap();
            got.sort_by(|a, b| a.partial_cmp(b).unwrap());
            expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (g, e) in got.iter().zip(&expect) {
                assert!((g - e).abs() < 1e-12, "spectrum mismatch at n={n}");
            }
        }
    }
    report("08 exact oracle: entropy/variance/spectrum match analytic for N=1..6, 20 seeds each");
}

#[test]
fn criterion_09_figure_data_properties() {
    // spectrum table over a grid that contains 0, +-delta, and +-debye
    let output = Command::new(BIN)
        .args([
            "spectrum", "--delta", "1", "--debye", "4", "--mu", "100", "--grid", "-5:5:101",
        ])
        .output()
        .expect("spectrum run");
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for line in text.lines().skip(1) {
        rows.push(
            line.split(',')
                .map(|f| f.parse::<f64>().unwrap_or(f64::INFINITY))
                .collect(),
        );
    }
    assert_eq!(rows.len(), 101);
    let col = |name: &str| -> usize {
        text.lines()
            .next()
            .unwrap()
            .split(',')
            .position(|c| c == name)
            .unwrap()
    };
    let (xi_c, v2_c, res_c) = (col("xi"), col("v2"), col("residual_canonical"));

    let at = |x: f64| rows.iter().find(|r| r[xi_c] == x).unwrap();
    assert_eq!(at(0.0)[v2_c], 0.5);
    // monotone nonincreasing occupancy
    for w in rows.windows(2) {
        assert!(w[1][v2_c] <= w[0][v2_c] + 1e-15);
    }
    // raw discontinuities exactly at +-debye: interior value on the
    // boundary node, exterior constant just past it
    let interior_edge = at(4.0)[v2_c];
    assert!(interior_edge > 0.0 && interior_edge < 0.05);
    assert_eq!(at(4.1)[v2_c], 0.0);
    assert_eq!(at(-4.1)[v2_c], 1.0);
    // canonical overlay residual vanishes at xi in {0, +-delta}
    for x in [-1.0, 0.0, 1.0] {
        assert!(at(x)[res_c].abs() < 1e-14, "residual at {x}");
    }

    // DOS-weighted entropy profile peaks at the Fermi surface
    let dos = DosModel::power_law_3d(100.0).unwrap();
    let params = ModelParams::new(1.0, 10.0, 100.0).unwrap();
    let xs = grid::linear(-5.0, 5.0, 101).unwrap();
    let profile = observables::weighted_entropy_profile(&dos, &params, &xs).unwrap();
    let peak = profile
        .iter()
        .max_by(|a, b| a.weighted_entropy.partial_cmp(&b.weighted_entropy).unwrap())
        .unwrap();
    assert_eq!(peak.xi, 0.0);
    assert!((peak.weighted_entropy - 10.0 * std::f64::consts::LN_2).abs() < 1e-12);
    report("09 figure data: spectrum shape, canonical overlay pins, weighted-entropy peak");
}

#[test]
fn criterion_10_scan_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| -> Vec<u8> {
        let path = dir.path().join(name);
        let status = Command::new(BIN)
            .args([
                "scan", "--deltas", "0.5,1,2", "--debyes", "50,100", "--mu", "1000",
                "--format", "json", "--output",
            ])
            .arg(&path)
            .status()
            .expect("scan run");
        assert!(status.success());
        std::fs::read(path).unwrap()
    };
    let a = run("a.json");
    let b = run("b.json");
    assert!(!a.is_empty());
    assert_eq!(a, b, "scan output not byte-identical");
    report("10 determinism: repeated scans byte-identical");
}
