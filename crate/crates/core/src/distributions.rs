//! Probability and utility distributions, utility information schemes and
//! the three parametric families with closed-form generating functions.

use crate::error::{Error, Result};
use crate::sum::compensated_sum;
use crate::zeta::zeta;

/// Tolerance on the total mass used when validating distributions.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Whether a distribution is complete (sums to one) or generalized
/// (an incomplete distribution summing to at most one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistributionKind {
    Complete,
    Generalized,
}

impl DistributionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DistributionKind::Complete => "complete",
            DistributionKind::Generalized => "generalized",
        }
    }
}

/// A finite, validated vector of probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    probs: Vec<f64>,
    kind: DistributionKind,
}

impl ProbabilityDistribution {
    /// Builds a complete distribution: entries in `[0, 1]` and
    /// `|Σ p_i − 1| ≤ 1e-9`.
    pub fn complete(probs: Vec<f64>) -> Result<Self> {
        Self::new(probs, DistributionKind::Complete)
    }

    /// Builds a generalized distribution: entries in `[0, 1]` and
    /// `Σ p_i ≤ 1 + 1e-9`.
    pub fn generalized(probs: Vec<f64>) -> Result<Self> {
        Self::new(probs, DistributionKind::Generalized)
    }

    pub fn new(probs: Vec<f64>, kind: DistributionKind) -> Result<Self> {
        validate_probs(&probs, kind)?;
        Ok(Self { probs, kind })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn kind(&self) -> DistributionKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    /// Always false: distributions are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Total mass `Σ p_i`.
    pub fn total(&self) -> f64 {
        compensated_sum(self.probs.iter().copied())
    }

    /// Re-runs the construction checks.
    pub fn validate(&self) -> Result<()> {
        validate_probs(&self.probs, self.kind)
    }

    pub fn into_probs(self) -> Vec<f64> {
        self.probs
    }
}

fn validate_probs(probs: &[f64], kind: DistributionKind) -> Result<()> {
    if probs.is_empty() {
        return Err(Error::EmptyInput);
    }
    for (index, &value) in probs.iter().enumerate() {
        if !value.is_finite() {
            return Err(Error::NonFiniteProbability { index, value });
        }
        if value < 0.0 {
            return Err(Error::NegativeProbability { index, value });
        }
        if value > 1.0 {
            return Err(Error::ProbabilityAboveOne { index, value });
        }
    }
    let sum = compensated_sum(probs.iter().copied());
    match kind {
        DistributionKind::Complete if (sum - 1.0).abs() > SUM_TOLERANCE => {
            Err(Error::SumNotOne { sum })
        }
        DistributionKind::Generalized if sum > 1.0 + SUM_TOLERANCE => {
            Err(Error::SumExceedsOne { sum })
        }
        _ => Ok(()),
    }
}

/// Builds a complete distribution.
pub fn make_complete(probs: &[f64]) -> Result<ProbabilityDistribution> {
    ProbabilityDistribution::complete(probs.to_vec())
}

/// Builds a generalized (incomplete) distribution.
pub fn make_generalized(probs: &[f64]) -> Result<ProbabilityDistribution> {
    ProbabilityDistribution::generalized(probs.to_vec())
}

/// Strictly positive utilities attached to the events of a scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilityDistribution {
    utils: Vec<f64>,
}

impl UtilityDistribution {
    pub fn new(utils: Vec<f64>) -> Result<Self> {
        if utils.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (index, &value) in utils.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::NonPositiveUtility { index, value });
            }
        }
        Ok(Self { utils })
    }

    /// `n` copies of the same utility `u`.
    pub fn constant(u: f64, n: usize) -> Result<Self> {
        Self::new(vec![u; n])
    }

    /// All utilities equal to one.
    pub fn unit(n: usize) -> Self {
        Self {
            utils: vec![1.0; n.max(1)],
        }
    }

    pub fn utils(&self) -> &[f64] {
        &self.utils
    }

    pub fn len(&self) -> usize {
        self.utils.len()
    }

    pub fn is_empty(&self) -> bool {
        self.utils.is_empty()
    }

    /// The shared value when every utility is identical.
    pub fn constant_value(&self) -> Option<f64> {
        let first = self.utils[0];
        self.utils.iter().all(|&u| u == first).then_some(first)
    }
}

/// Events with probabilities and utilities, paired index by index.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilityInformationScheme {
    dist: ProbabilityDistribution,
    util: UtilityDistribution,
    labels: Option<Vec<String>>,
}

impl UtilityInformationScheme {
    pub fn new(
        dist: ProbabilityDistribution,
        util: UtilityDistribution,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if dist.len() != util.len() {
            return Err(Error::LengthMismatch {
                left: dist.len(),
                right: util.len(),
            });
        }
        if let Some(labels) = &labels {
            if labels.len() != dist.len() {
                return Err(Error::LengthMismatch {
                    left: dist.len(),
                    right: labels.len(),
                });
            }
        }
        Ok(Self { dist, util, labels })
    }

    /// Scheme with every utility equal to one.
    pub fn unweighted(dist: ProbabilityDistribution) -> Self {
        let util = UtilityDistribution::unit(dist.len());
        Self {
            dist,
            util,
            labels: None,
        }
    }

    pub fn dist(&self) -> &ProbabilityDistribution {
        &self.dist
    }

    pub fn util(&self) -> &UtilityDistribution {
        &self.util
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// `(p_i, u_i)` pairs.
    pub fn pairs(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.dist
            .probs()
            .iter()
            .copied()
            .zip(self.util.utils().iter().copied())
    }
}

/// Builds a scheme from raw vectors. Lengths are checked first.
pub fn make_scheme(
    probs: &[f64],
    utils: &[f64],
    kind: DistributionKind,
) -> Result<UtilityInformationScheme> {
    if probs.len() != utils.len() {
        return Err(Error::LengthMismatch {
            left: probs.len(),
            right: utils.len(),
        });
    }
    let dist = ProbabilityDistribution::new(probs.to_vec(), kind)?;
    let util = UtilityDistribution::new(utils.to_vec())?;
    UtilityInformationScheme::new(dist, util, None)
}

/// The named families with closed-form generating functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParametricFamily {
    /// `p_i = 1/n`, `i = 1..n`.
    Uniform { n: usize },
    /// `p_i = q p^i`, `i = 0, 1, ...`, with `q = 1 − p`.
    Geometric { p: f64 },
    /// `p_i = i^{−β} / ζ(β)`, `i = 1, 2, ...`.
    BetaPower { beta: f64 },
}

impl ParametricFamily {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ParametricFamily::Uniform { n: 0 } => Err(Error::InvalidParameter(
                "uniform family needs n >= 1".into(),
            )),
            ParametricFamily::Geometric { p } if !(p > 0.0 && p < 1.0) => Err(
                Error::InvalidParameter(format!("geometric family needs 0 < p < 1, got {p}")),
            ),
            ParametricFamily::BetaPower { beta } if !(beta > 1.0 && beta.is_finite()) => Err(
                Error::InvalidParameter(format!("beta-power family needs beta > 1, got {beta}")),
            ),
            _ => Ok(()),
        }
    }

    pub fn has_infinite_support(&self) -> bool {
        !matches!(self, ParametricFamily::Uniform { .. })
    }
}

/// Materializes a family as a finite distribution.
///
/// Uniform families are complete and ignore `truncation`. Geometric and
/// β-power families keep the first `truncation` terms and are returned as
/// generalized distributions.
pub fn realize_family(
    family: ParametricFamily,
    truncation: Option<usize>,
) -> Result<ProbabilityDistribution> {
    family.validate()?;
    let terms = match (family.has_infinite_support(), truncation) {
        (false, _) => 0,
        (true, None) => return Err(Error::TruncationRequired),
        (true, Some(0)) => {
            return Err(Error::InvalidParameter(
                "truncation must be at least 1".into(),
            ))
        }
        (true, Some(t)) => t,
    };
    match family {
        ParametricFamily::Uniform { n } => {
            ProbabilityDistribution::complete(vec![1.0 / n as f64; n])
        }
        ParametricFamily::Geometric { p } => {
            let q = 1.0 - p;
            let probs = (0..terms).map(|i| q * p.powf(i as f64)).collect();
            ProbabilityDistribution::generalized(probs)
        }
        ParametricFamily::BetaPower { beta } => {
            let z = zeta(beta)?;
            let probs = (1..=terms).map(|i| (i as f64).powf(-beta) / z).collect();
            ProbabilityDistribution::generalized(probs)
        }
    }
}
