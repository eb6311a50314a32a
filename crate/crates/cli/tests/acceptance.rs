//! Acceptance suite. Every criterion runs at its fixed tolerance and prints a
//! single `[PASS]` or `[FAIL]` line; the test fails if any criterion fails.
//!
//! ```text
//! cargo test -p igf-cli --test acceptance -- --nocapture
//! ```

use std::f64::consts::{LN_2, PI};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use igf_cli::curve::{sample_curve, CurveRequest, Measure};
use igf_core::{
    beta_power_entropy, beta_power_igf, geometric_entropy, geometric_igf, golomb_igf, make_scheme,
    realize_family, uniform_entropy, verify_scaling_identity, weighted_entropy, weighted_igf,
    weighted_igf_derivative, weighted_self_information_moment, zeta, DistributionKind, LogBase,
    ParametricFamily, ProbabilityDistribution, TDomain, UtilityDistribution,
    UtilityInformationScheme,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

const SEED: u64 = 20_240_601;
const SCHEMES: usize = 1000;
const STD: TDomain = TDomain::Standard;

struct Outcome {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
}

/// Largest observed error against a limit.
#[derive(Default)]
struct MaxErr(f64);

impl MaxErr {
    fn record(&mut self, err: f64) {
        // NaN must not slip through `max`
        self.0 = if err.is_nan() {
            f64::INFINITY
        } else {
            self.0.max(err)
        };
    }

    fn within(&self, limit: f64) -> bool {
        self.0 <= limit
    }
}

/// Uniform draw from the simplex, every component at least `floor`.
fn simplex(rng: &mut ChaCha8Rng, n: usize, floor: f64) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = raw.iter().sum();
    let scale = 1.0 - n as f64 * floor;
    raw.iter().map(|x| floor + scale * x / total).collect()
}

fn random_schemes(rng: &mut ChaCha8Rng, count: usize) -> Vec<UtilityInformationScheme> {
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=64);
            let p = simplex(rng, n, 0.0);
            let u: Vec<f64> = (0..n).map(|_| rng.random_range(0.1..=10.0)).collect();
            make_scheme(&p, &u, DistributionKind::Complete).expect("valid random scheme")
        })
        .collect()
}

fn unit_utility(scheme: &UtilityInformationScheme) -> UtilityInformationScheme {
    UtilityInformationScheme::unweighted(scheme.dist().clone())
}

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

const FIXTURES: [&str; 4] = [
    "uniform_constant",
    "uniform_increasing",
    "nonuniform_constant",
    "nonuniform_varying",
];

fn normalization(schemes: &[UtilityInformationScheme]) -> Outcome {
    let start = Instant::now();
    let mut err = MaxErr::default();
    for s in schemes {
        err.record((weighted_igf(s, 1.0, STD).unwrap() - 1.0).abs());
    }
    let elapsed = start.elapsed();
    Outcome {
        id: "AC01",
        title: "weighted IGF equals 1 at t = 1",
        pass: err.within(1e-12) && elapsed < Duration::from_secs(1),
        detail: format!(
            "max |I-1| = {:.2e} (<= 1e-12), {elapsed:.2?} (< 1 s)",
            err.0
        ),
    }
}

fn reduction(schemes: &[UtilityInformationScheme]) -> Outcome {
    let mut err = MaxErr::default();
    for s in schemes {
        let unit = unit_utility(s);
        for t in [1.0, 1.5, 2.0, 3.0] {
            let w = weighted_igf(&unit, t, STD).unwrap();
            let g = golomb_igf(unit.dist(), t, STD).unwrap();
            err.record((w - g).abs());
        }
    }
    Outcome {
        id: "AC02",
        title: "unit utilities reduce to the Golomb function",
        pass: err.within(1e-12),
        detail: format!("max diff = {:.2e} (<= 1e-12)", err.0),
    }
}

fn entropy_link(schemes: &[UtilityInformationScheme]) -> Outcome {
    let mut slope = MaxErr::default();
    let mut fd = MaxErr::default();
    for s in schemes {
        let d = weighted_igf_derivative(s, 1.0, 1, STD).unwrap();
        slope.record((-d - weighted_entropy(s, LogBase::Natural)).abs());
        for t in [1.0 + 1e-4, 2.0, 3.0] {
            let exact = weighted_igf_derivative(s, t, 1, STD).unwrap();
            let approx =
                igf_core::finite_difference_derivative(s, t, 1, 1e-5, TDomain::Extended).unwrap();
            fd.record((approx - exact).abs() / exact.abs());
        }
    }
    Outcome {
        id: "AC03",
        title: "negative slope at t = 1 is the weighted entropy",
        pass: slope.within(1e-12) && fd.within(1e-6),
        detail: format!(
            "max |-I'(1) - H| = {:.2e} (<= 1e-12), finite-difference rel err = {:.2e} (<= 1e-6)",
            slope.0, fd.0
        ),
    }
}

fn moment_link(schemes: &[UtilityInformationScheme]) -> Outcome {
    let mut err = MaxErr::default();
    for s in schemes {
        for r in 1..=4u32 {
            let d = weighted_igf_derivative(s, 1.0, r, STD).unwrap();
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            err.record((sign * d - weighted_self_information_moment(s, r)).abs());
        }
    }
    Outcome {
        id: "AC04",
        title: "signed derivatives at t = 1 are the self-information moments",
        pass: err.within(1e-10),
        detail: format!("max diff over r = 1..4 = {:.2e} (<= 1e-10)", err.0),
    }
}

fn uniform_case() -> Outcome {
    let mut err = MaxErr::default();
    for n in [2usize, 4, 10, 1000] {
        let dist = realize_family(ParametricFamily::Uniform { n }, None).unwrap();
        for u in [0.5, 1.0, 2.0] {
            let util = UtilityDistribution::constant(u, n).unwrap();
            let scheme = UtilityInformationScheme::new(dist.clone(), util, None).unwrap();
            let closed = uniform_entropy(n, u).unwrap();
            err.record((closed - weighted_entropy(&scheme, LogBase::Natural)).abs());
            err.record((closed - u * (n as f64).ln()).abs());
        }
    }
    Outcome {
        id: "AC05",
        title: "uniform family entropy is u ln n",
        pass: err.within(1e-12),
        detail: format!("max diff = {:.2e} (<= 1e-12)", err.0),
    }
}

/// `Σ_{i<T} (q p^i)^s` with `T` grown until the geometric tail is below 1e-13.
fn geometric_direct(p: f64, u: f64, t: f64) -> f64 {
    let q = 1.0 - p;
    let s = 1.0 - u * (1.0 - t);
    let ratio = p.powf(s);
    let mut terms = 1usize;
    while q.powf(s) * ratio.powi(terms as i32) / (1.0 - ratio) >= 1e-13 {
        terms += 1;
    }
    (0..terms)
        .rev()
        .map(|i| (q * p.powi(i as i32)).powf(s))
        .sum()
}

fn geometric_case() -> Outcome {
    let mut err = MaxErr::default();
    for p in [0.1, 0.5, 0.9] {
        for u in [0.5, 1.0, 2.0] {
            for t in [1.0, 1.5, 2.0, 3.0] {
                err.record((geometric_igf(p, u, t).unwrap() - geometric_direct(p, u, t)).abs());
            }
        }
    }
    let h = geometric_entropy(0.5, 1.0).unwrap();
    let h_err = (h - 2.0 * LN_2).abs();
    Outcome {
        id: "AC06",
        title: "geometric closed form against truncated sums",
        pass: err.within(1e-12) && h_err <= 1e-12,
        detail: format!(
            "max IGF diff = {:.2e} (<= 1e-12), |H(0.5, 1) - 2 ln 2| = {h_err:.2e} (<= 1e-12)",
            err.0
        ),
    }
}

fn zeta_case() -> Outcome {
    let start = Instant::now();
    let z2_err = (zeta(2.0).unwrap() - PI * PI / 6.0).abs();
    let z4_err = (zeta(4.0).unwrap() - PI.powi(4) / 90.0).abs();

    const TERMS: u32 = 1_000_000;
    let z2 = PI * PI / 6.0;
    let probs: Vec<f64> = (1..=TERMS)
        .map(|i| 1.0 / (f64::from(i).powi(2) * z2))
        .collect();
    let direct_igf: f64 = probs.iter().rev().map(|p| p * p).sum();
    let direct_h: f64 = -probs.iter().rev().map(|p| p * p.ln()).sum::<f64>();
    let igf_err = (beta_power_igf(2.0, 1.0, 2.0).unwrap() - direct_igf).abs();
    let h_err = (beta_power_entropy(2.0, 1.0).unwrap() - direct_h).abs();
    let elapsed = start.elapsed();
    Outcome {
        id: "AC07",
        title: "zeta values and the beta-power family",
        pass: z2_err <= 1e-12
            && z4_err <= 1e-12
            && igf_err <= 1e-10
            && h_err <= 1e-4
            && elapsed < Duration::from_secs(10),
        detail: format!(
            "zeta(2) {z2_err:.2e}, zeta(4) {z4_err:.2e} (<= 1e-12); IGF {igf_err:.2e} (<= 1e-10); \
             entropy {h_err:.2e} (<= 1e-4); {elapsed:.2?} (< 10 s)"
        ),
    }
}

fn scaling_identity(rng: &mut ChaCha8Rng) -> Outcome {
    let mut failures = 0;
    let mut worst = MaxErr::default();
    for _ in 0..SCHEMES {
        let n = rng.random_range(2..=64);
        let dist = ProbabilityDistribution::complete(simplex(rng, n, 1e-6)).unwrap();
        let beta = rng.random_range(0.3..=5.0);
        let u = rng.random_range(0.3..=4.0);
        let t = rng.random_range(1.0..=3.0);
        let report = verify_scaling_identity(&dist, u, beta, t, STD).unwrap();
        worst.record(report.abs_diff / report.lhs.abs().max(1.0));
        if !report.pass {
            failures += 1;
        }
    }
    Outcome {
        id: "AC08",
        title: "escort scaling identity",
        pass: failures == 0,
        detail: format!(
            "{failures} of {SCHEMES} draws failed, worst relative diff = {:.2e} (<= 1e-10)",
            worst.0
        ),
    }
}

fn shape(schemes: &[UtilityInformationScheme]) -> Outcome {
    let request = CurveRequest {
        t_min: 1.0,
        t_max: 3.0,
        steps: 101,
        measures: vec![Measure::Weighted],
    };
    let fixtures = FIXTURES.iter().map(|name| {
        let path = fixture_dir().join(format!("{name}.json"));
        igf_cli::document::load(&path, igf_cli::document::InputFormat::Json).unwrap()
    });
    let mut tested = 0;
    let mut bad = Vec::new();
    for (k, s) in schemes.iter().cloned().chain(fixtures).enumerate() {
        tested += 1;
        let rows = sample_curve(&s, &request, STD).unwrap();
        let increasing = rows.windows(2).any(|w| w[1].values[0] > w[0].values[0]);
        let concave = rows
            .iter()
            .any(|r| weighted_igf_derivative(&s, r.t, 2, STD).unwrap() < 0.0);
        if increasing || concave {
            bad.push(k);
        }
    }
    Outcome {
        id: "AC09",
        title: "curves are non-increasing and convex on [1, 3]",
        pass: bad.is_empty(),
        detail: format!("{} of {tested} schemes violate the shape", bad.len()),
    }
}

fn run_igf(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_igf"))
        .args(args)
        .output()
        .expect("spawn igf")
}

fn cli_contract() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut problems = Vec::new();
    for name in FIXTURES {
        let input = fixture_dir().join(format!("{name}.json"));
        let out_path = dir.path().join(format!("{name}.csv"));
        let out = run_igf(&[
            "curve",
            "--input",
            input.to_str().unwrap(),
            "--t-min",
            "1",
            "--t-max",
            "3",
            "--steps",
            "101",
            "--measures",
            "weighted,golomb,hooda_bhaker",
            "--out",
            out_path.to_str().unwrap(),
        ]);
        let golden = Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(format!("{name}.csv"));
        let same =
            out.status.success() && std::fs::read(&out_path).ok() == std::fs::read(&golden).ok();
        if !same {
            problems.push(format!("golden {name}"));
        }
    }

    let write = |file: &str, body: &str| {
        let p = dir.path().join(file);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    };
    let good = write(
        "good.json",
        r#"{"probabilities":[0.5,0.5],"utilities":[1,2]}"#,
    );
    let short = write("short.json", r#"{"probabilities":[0.5,0.4]}"#);
    let tiny = write(
        "tiny.json",
        r#"{"probabilities":[1e-62,0.5],"kind":"generalized"}"#,
    );
    let scripts: [(&[&str], i32); 6] = [
        (&["eval", "--input", &good, "--t", "2"], 0),
        (&["eval", "--input", &short, "--t", "2"], 2),
        (
            &["closed-form", "beta-power", "--beta", "0.9", "--t", "2"],
            2,
        ),
        (&["eval", "--input", &good, "--t", "0.5"], 3),
        (&["closed-form", "geometric", "--p", "0.5", "--t", "0.5"], 3),
        (
            &[
                "escort",
                "--input",
                &tiny,
                "--beta",
                "5",
                "--u",
                "1",
                "--t",
                "-1",
                "--extended-t",
                "--verify-identity",
            ],
            4,
        ),
    ];
    for (args, code) in scripts {
        let got = run_igf(args).status.code();
        if got != Some(code) {
            problems.push(format!(
                "`igf {}` exited {got:?}, expected {code}",
                args.join(" ")
            ));
        }
    }
    Outcome {
        id: "AC10",
        title: "CLI goldens and exit codes",
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            "4 goldens byte-identical, exit codes 0/2/3/4 as scripted".to_string()
        } else {
            problems.join("; ")
        },
    }
}

#[test]
fn acceptance() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let schemes = random_schemes(&mut rng, SCHEMES);
    let outcomes = [
        normalization(&schemes),
        reduction(&schemes),
        entropy_link(&schemes),
        moment_link(&schemes),
        uniform_case(),
        geometric_case(),
        zeta_case(),
        scaling_identity(&mut rng),
        shape(&schemes),
        cli_contract(),
    ];
    for o in &outcomes {
        let mark = if o.pass { "PASS" } else { "FAIL" };
        println!("[{mark}] {} {}: {}", o.id, o.title, o.detail);
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
