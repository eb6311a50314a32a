//! Argument definitions and command dispatch for the `igf` executable.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use igf_core::{
    escort_transform, family_entropy, family_igf, generalized_igf, realize_family, shannon_entropy,
    verify_scaling_identity, weighted_entropy, weighted_igf, weighted_self_information_moment,
    LogBase, ParametricFamily, TDomain, UtilityDistribution, UtilityInformationScheme,
};

use crate::curve::{sample_curve, write_csv, CurveRequest, Measure};
use crate::document::{self, InputFormat};
use crate::error::{CliError, CliResult};
use crate::render::{format_value, DEFAULT_DIGITS, MAX_DIGITS};

/// Largest moment order accepted by `moments`.
pub const MAX_MOMENT_ORDER: u32 = 8;

/// Terms summed for the β-power direct check.
const BETA_POWER_CHECK_TERMS: usize = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "igf",
    version,
    about = "Weighted information generating functions and entropies of discrete distributions"
)]
pub struct Cli {
    /// Scheme file (JSON, or CSV with `--format csv`).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Json)]
    pub format: InputFormat,

    /// Logarithm base for entropies.
    #[arg(long, global = true, value_enum, default_value_t = Base::E)]
    pub base: Base,

    /// Allow t < 1 wherever every term is defined.
    #[arg(long, global = true)]
    pub extended_t: bool,

    /// Digits printed for each value.
    #[arg(
        long,
        global = true,
        default_value_t = DEFAULT_DIGITS as u8,
        value_parser = clap::value_parser!(u8).range(1..=MAX_DIGITS as i64)
    )]
    pub digits: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Base {
    #[value(name = "e")]
    E,
    #[value(name = "2")]
    Two,
}

impl From<Base> for LogBase {
    fn from(b: Base) -> Self {
        match b {
            Base::E => LogBase::Natural,
            Base::Two => LogBase::Two,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a generating function at t.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, value_enum, default_value_t = Measure::Weighted)]
        measure: Measure,
    },
    /// Weighted entropy −Σ u_i p_i log p_i.
    Entropy {
        /// Ignore utilities (Shannon entropy).
        #[arg(long)]
        unweighted: bool,
    },
    /// Moments Σ p_i (−u_i ln p_i)^r for r = 0..=r-max.
    Moments {
        #[arg(long, default_value_t = 4)]
        r_max: u32,
    },
    /// Sample generating functions over an equally spaced t grid as CSV.
    Curve(CurveArgs),
    /// Closed forms for the uniform, geometric and beta-power families.
    ClosedForm {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Escort (power) distribution, its generating function and the
    /// constant-utility scaling identity.
    Escort {
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        /// Constant utility; defaults to the scheme's utilities.
        #[arg(long, allow_negative_numbers = true)]
        u: Option<f64>,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        t: f64,
        #[arg(long)]
        verify_identity: bool,
    },
    /// Validate a scheme and print it as canonical JSON.
    Normalize {
        /// Divide probabilities by their sum first.
        #[arg(long)]
        rescale: bool,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub t_min: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    pub t_max: f64,
    #[arg(long, default_value_t = 101)]
    pub steps: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "weighted")]
    pub measures: Vec<Measure>,
    /// Use a named family instead of `--input`.
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    /// Terms kept for infinite-support families.
    #[arg(long)]
    pub truncation: Option<usize>,
    /// Constant utility for `--family`.
    #[arg(long, default_value_t = 1.0)]
    pub u: f64,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Uniform,
    Geometric,
    BetaPower,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    Uniform {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        query: ClosedFormQuery,
    },
    Geometric {
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[command(flatten)]
        query: ClosedFormQuery,
    },
    BetaPower {
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[command(flatten)]
        query: ClosedFormQuery,
    },
}

#[derive(Debug, Args)]
pub struct ClosedFormQuery {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub u: f64,
    /// Evaluate the generating function at t.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "entropy")]
    pub t: Option<f64>,
    /// Print the weighted entropy instead.
    #[arg(long)]
    pub entropy: bool,
    /// Also print the direct-summation value and the difference.
    #[arg(long)]
    pub check: bool,
}

struct Settings {
    domain: TDomain,
    base: LogBase,
    digits: usize,
}

impl Settings {
    fn fmt(&self, v: f64) -> String {
        format_value(v, self.digits)
    }
}

fn io_error(e: std::io::Error) -> CliError {
    CliError::validation(format!("output error: {e}"))
}

/// Runs a parsed command, writing results to `out`.
pub fn run<W: Write>(cli: &Cli, out: &mut W) -> CliResult<()> {
    let settings = Settings {
        domain: if cli.extended_t {
            TDomain::Extended
        } else {
            TDomain::Standard
        },
        base: cli.base.into(),
        digits: usize::from(cli.digits),
    };
    let load = || -> CliResult<UtilityInformationScheme> {
        let path = cli
            .input
            .as_ref()
            .ok_or_else(|| CliError::validation("--input is required for this command"))?;
        document::load(path, cli.format)
    };

    match &cli.command {
        Command::Eval { t, measure } => {
            let scheme = load()?;
            let v = measure.evaluate(&scheme, *t, settings.domain)?;
            writeln!(out, "{}", settings.fmt(v)).map_err(io_error)
        }
        Command::Entropy { unweighted } => {
            let scheme = load()?;
            let v = if *unweighted {
                shannon_entropy(scheme.dist(), settings.base)
            } else {
                weighted_entropy(&scheme, settings.base)
            };
            writeln!(out, "{}", settings.fmt(v)).map_err(io_error)
        }
        Command::Moments { r_max } => {
            if *r_max > MAX_MOMENT_ORDER {
                return Err(CliError::validation(format!(
                    "--r-max must be at most {MAX_MOMENT_ORDER}, got {r_max}"
                )));
            }
            let scheme = load()?;
            for r in 0..=*r_max {
                let m = weighted_self_information_moment(&scheme, r);
                writeln!(out, "{r}\t{}", settings.fmt(m)).map_err(io_error)?;
            }
            Ok(())
        }
        Command::Curve(args) => run_curve(args, &settings, load, out),
        Command::ClosedForm { family } => run_closed_form(family, &settings, out),
        Command::Escort {
            beta,
            u,
            t,
            verify_identity,
        } => {
            let scheme = load()?;
            run_escort(&scheme, *beta, *u, *t, *verify_identity, &settings, out)
        }
        Command::Normalize { rescale, out: path } => {
            let mut scheme = load()?;
            if *rescale {
                scheme = rescaled(&scheme)?;
            }
            let text = document::to_canonical_json(&scheme);
            match path {
                Some(path) => std::fs::write(path, text).map_err(|e| {
                    CliError::validation(format!("cannot write {}: {e}", path.display()))
                }),
                None => out.write_all(text.as_bytes()).map_err(io_error),
            }
        }
    }
}

fn rescaled(scheme: &UtilityInformationScheme) -> CliResult<UtilityInformationScheme> {
    let total = scheme.dist().total();
    if total <= 0.0 {
        return Err(igf_core::Error::AllZeroProbabilities.into());
    }
    let probs: Vec<f64> = scheme.dist().probs().iter().map(|p| p / total).collect();
    let dist = igf_core::ProbabilityDistribution::complete(probs)?;
    Ok(UtilityInformationScheme::new(
        dist,
        scheme.util().clone(),
        scheme.labels().map(<[String]>::to_vec),
    )?)
}

fn family_from_args(
    name: FamilyName,
    n: Option<usize>,
    p: Option<f64>,
    beta: Option<f64>,
) -> CliResult<ParametricFamily> {
    let missing = |flag: &str| CliError::validation(format!("--family needs {flag}"));
    Ok(match name {
        FamilyName::Uniform => ParametricFamily::Uniform {
            n: n.ok_or_else(|| missing("--n"))?,
        },
        FamilyName::Geometric => ParametricFamily::Geometric {
            p: p.ok_or_else(|| missing("--p"))?,
        },
        FamilyName::BetaPower => ParametricFamily::BetaPower {
            beta: beta.ok_or_else(|| missing("--beta"))?,
        },
    })
}

fn run_curve<W: Write>(
    args: &CurveArgs,
    settings: &Settings,
    load: impl FnOnce() -> CliResult<UtilityInformationScheme>,
    out: &mut W,
) -> CliResult<()> {
    let scheme = match args.family {
        Some(name) => {
            let family = family_from_args(name, args.n, args.p, args.beta)?;
            let dist = realize_family(family, args.truncation)?;
            let util = UtilityDistribution::constant(args.u, dist.len())?;
            UtilityInformationScheme::new(dist, util, None)?
        }
        None => load()?,
    };
    let request = CurveRequest {
        t_min: args.t_min,
        t_max: args.t_max,
        steps: args.steps,
        measures: args.measures.clone(),
    };
    let samples = sample_curve(&scheme, &request, settings.domain)?;
    match &args.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| {
                CliError::validation(format!("cannot write {}: {e}", path.display()))
            })?;
            write_csv(
                BufWriter::new(file),
                &request.measures,
                &samples,
                settings.digits,
            )
            .map_err(io_error)
        }
        None => write_csv(out, &request.measures, &samples, settings.digits).map_err(io_error),
    }
}

/// Number of geometric terms after which `p^T` is below `1e-17`.
fn geometric_check_terms(p: f64) -> usize {
    ((1e-17f64).ln() / p.ln()).ceil().clamp(1.0, 1e7) as usize
}

fn run_closed_form<W: Write>(
    command: &FamilyCommand,
    settings: &Settings,
    out: &mut W,
) -> CliResult<()> {
    let (family, query) = match command {
        FamilyCommand::Uniform { n, query } => (ParametricFamily::Uniform { n: *n }, query),
        FamilyCommand::Geometric { p, query } => (ParametricFamily::Geometric { p: *p }, query),
        FamilyCommand::BetaPower { beta, query } => {
            (ParametricFamily::BetaPower { beta: *beta }, query)
        }
    };
    family.validate()?;
    let value = match (query.entropy, query.t) {
        (true, _) => settings.base.from_nats(family_entropy(family, query.u)?),
        (false, Some(t)) => {
            settings.domain.check(t)?;
            family_igf(family, query.u, t)?
        }
        (false, None) => {
            return Err(CliError::validation("pass either --t or --entropy"));
        }
    };
    if !query.check {
        return writeln!(out, "{}", settings.fmt(value)).map_err(io_error);
    }

    let terms = match family {
        ParametricFamily::Uniform { n } => n,
        ParametricFamily::Geometric { p } => geometric_check_terms(p),
        ParametricFamily::BetaPower { .. } => BETA_POWER_CHECK_TERMS,
    };
    let dist = realize_family(family, Some(terms))?;
    let util = UtilityDistribution::constant(query.u, dist.len())?;
    let scheme = UtilityInformationScheme::new(dist, util, None)?;
    let direct = match query.t {
        Some(t) if !query.entropy => weighted_igf(&scheme, t, settings.domain)?,
        _ => weighted_entropy(&scheme, settings.base),
    };
    writeln!(out, "closed_form\t{}", settings.fmt(value)).map_err(io_error)?;
    writeln!(out, "direct\t{}", settings.fmt(direct)).map_err(io_error)?;
    writeln!(out, "difference\t{}", settings.fmt(value - direct)).map_err(io_error)?;
    writeln!(out, "terms\t{terms}").map_err(io_error)
}

fn run_escort<W: Write>(
    scheme: &UtilityInformationScheme,
    beta: f64,
    u: Option<f64>,
    t: f64,
    verify: bool,
    settings: &Settings,
    out: &mut W,
) -> CliResult<()> {
    let dist = scheme.dist();
    let util = match u {
        Some(u) => UtilityDistribution::constant(u, dist.len())?,
        None => scheme.util().clone(),
    };
    let escort = escort_transform(dist, beta)?;
    let igf = generalized_igf(dist, &util, beta, t, settings.domain)?;

    let normalized: Vec<String> = escort
        .normalized()
        .probs()
        .iter()
        .map(|&p| settings.fmt(p))
        .collect();
    writeln!(out, "normalized\t{}", normalized.join("\t")).map_err(io_error)?;
    writeln!(out, "mass\t{}", settings.fmt(escort.mass())).map_err(io_error)?;
    writeln!(out, "generalized_igf\t{}", settings.fmt(igf)).map_err(io_error)?;
    if !verify {
        return Ok(());
    }

    let constant = util.constant_value().ok_or_else(|| {
        CliError::validation("--verify-identity needs a constant utility; pass --u")
    })?;
    let report = verify_scaling_identity(dist, constant, beta, t, settings.domain)?;
    writeln!(out, "lhs\t{}", settings.fmt(report.lhs)).map_err(io_error)?;
    writeln!(out, "rhs\t{}", settings.fmt(report.rhs)).map_err(io_error)?;
    writeln!(out, "abs_diff\t{}", settings.fmt(report.abs_diff)).map_err(io_error)?;
    let verdict = if report.pass { "PASS" } else { "FAIL" };
    writeln!(out, "identity\t{verdict}").map_err(io_error)?;
    if report.pass {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}
