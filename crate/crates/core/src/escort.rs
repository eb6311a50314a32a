//! Power (escort) distributions `p_i^β / Σ p_j^β` over generalized
//! distributions, their generating function, and the constant-utility
//! factorization
//!
//! ```text
//! Σ (p_i^β)^s = Σ (p_i^β / Σ p_j^β)^s · (Σ p_j^β)^s,   s = 1 − u(1 − t).
//! ```

use crate::closed_forms::ConstantUtility;
use crate::distributions::{
    ProbabilityDistribution, UtilityDistribution, UtilityInformationScheme,
};
use crate::error::{Error, Result};
use crate::generating_functions::{power_term, weighted_exponent, weighted_igf, TDomain};
use crate::sum::{compensated_sum, try_compensated_sum};

/// Relative tolerance of [`verify_scaling_identity`].
pub const SCALING_IDENTITY_TOLERANCE: f64 = 1e-10;

/// The normalized escort distribution together with its normalizer.
#[derive(Debug, Clone, PartialEq)]
pub struct EscortPair {
    normalized: ProbabilityDistribution,
    mass: f64,
    beta: f64,
}

impl EscortPair {
    /// The complete distribution `p_i^β / Σ p_j^β`.
    pub fn normalized(&self) -> &ProbabilityDistribution {
        &self.normalized
    }

    /// `Σ p_i^β`.
    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "escort exponent must be finite and > 0, got {beta}"
        )))
    }
}

/// Escort transform of order `beta > 0`.
///
/// Powers are taken relative to the largest probability so that the
/// normalized weights do not underflow when `Σ p_j^β` does.
pub fn escort_transform(dist: &ProbabilityDistribution, beta: f64) -> Result<EscortPair> {
    check_beta(beta)?;
    let max = dist.probs().iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return Err(Error::AllZeroProbabilities);
    }
    let scaled: Vec<f64> = dist
        .probs()
        .iter()
        .map(|&p| if p == 0.0 { 0.0 } else { (p / max).powf(beta) })
        .collect();
    let scaled_total = compensated_sum(scaled.iter().copied());
    let normalized: Vec<f64> = scaled.iter().map(|&w| w / scaled_total).collect();
    let mass = max.powf(beta) * scaled_total;
    Ok(EscortPair {
        normalized: ProbabilityDistribution::complete(normalized)?,
        mass,
        beta,
    })
}

/// Weighted generating function of the escort distribution:
/// `Σ (p_i^β / Σ p_j^β)^{1 − u_i(1 − t)}`.
pub fn generalized_igf(
    dist: &ProbabilityDistribution,
    util: &UtilityDistribution,
    beta: f64,
    t: f64,
    domain: TDomain,
) -> Result<f64> {
    let escort = escort_transform(dist, beta)?;
    let scheme = UtilityInformationScheme::new(escort.normalized, util.clone(), None)?;
    weighted_igf(&scheme, t, domain)
}

/// `Σ p_i^{β(1 − u(1 − t))}`: the weighted IGF of the unnormalized powers
/// `p_i^β` under constant utility `u`.
pub fn unnormalized_power_igf(
    dist: &ProbabilityDistribution,
    u: f64,
    beta: f64,
    t: f64,
    domain: TDomain,
) -> Result<f64> {
    let u = ConstantUtility::new(u)?.get();
    check_beta(beta)?;
    domain.check(t)?;
    let e = beta * weighted_exponent(u, t);
    try_compensated_sum(dist.probs().iter().map(|&p| power_term(p, e)))
}

/// Both sides of the factorization identity and whether they agree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingReport {
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    pub pass: bool,
}

/// Evaluates `Σ (p_i^β)^s` directly and as
/// `generalized_igf · (Σ p_i^β)^s`, passing when
/// `|lhs − rhs| ≤ 1e-10 · max(1, |lhs|)`. Non-finite values never pass.
pub fn verify_scaling_identity(
    dist: &ProbabilityDistribution,
    u: f64,
    beta: f64,
    t: f64,
    domain: TDomain,
) -> Result<ScalingReport> {
    let u = ConstantUtility::new(u)?.get();
    let lhs = unnormalized_power_igf(dist, u, beta, t, domain)?;
    let util = UtilityDistribution::constant(u, dist.len())?;
    let escort = escort_transform(dist, beta)?;
    let normalized = generalized_igf(dist, &util, beta, t, domain)?;
    let rhs = normalized * escort.mass.powf(weighted_exponent(u, t));
    let abs_diff = (lhs - rhs).abs();
    let pass = abs_diff <= SCALING_IDENTITY_TOLERANCE * lhs.abs().max(1.0);
    Ok(ScalingReport {
        lhs,
        rhs,
        abs_diff,
        pass,
    })
}
