//! Information generating functions, entropies and self-information moments.
//!
//! Three generating functions are provided for a scheme `(P, U)`:
//!
//! | function | definition |
//! |---|---|
//! | [`golomb_igf`] | `Σ p_i^t` |
//! | [`hooda_bhaker_igf`] | `Σ u_i p_i^t` |
//! | [`weighted_igf`] | `Σ p_i^{1 − u_i(1 − t)}` |
//!
//! The weighted function equals 1 at `t = 1` for complete distributions, and
//! its `r`-th derivative at `t = 1` is `Σ p_i (u_i ln p_i)^r`. In particular
//! `−I′(1) = −Σ u_i p_i ln p_i`, the weighted entropy.
//!
//! Terms with `p_i = 0` contribute nothing to any sum (`0 · ln 0 = 0`,
//! `0^e = 0` for `e > 0`). All sums are compensated.

use crate::distributions::{ProbabilityDistribution, UtilityInformationScheme};
use crate::error::{Error, Result};
use crate::numdiff;
use crate::sum::{compensated_sum, try_compensated_sum};

/// Admissible values of the generating-function argument `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TDomain {
    /// `t ≥ 1`.
    #[default]
    Standard,
    /// Any finite `t` for which every term is defined: exponents must be
    /// strictly positive wherever `p_i = 0`.
    Extended,
}

impl TDomain {
    pub fn check(self, t: f64) -> Result<()> {
        if !t.is_finite() {
            return Err(Error::Domain(format!("t must be finite, got {t}")));
        }
        if self == TDomain::Standard && t < 1.0 {
            return Err(Error::Domain(format!(
                "t = {t} is below 1; enable the extended domain to evaluate it"
            )));
        }
        Ok(())
    }
}

/// Output base for entropies. Computation is always in nats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LogBase {
    #[default]
    Natural,
    Two,
}

impl LogBase {
    /// Converts a value in nats to this base.
    pub fn from_nats(self, nats: f64) -> f64 {
        match self {
            LogBase::Natural => nats,
            LogBase::Two => nats / std::f64::consts::LN_2,
        }
    }
}

/// Exponent `1 − u(1 − t)` of the weighted generating function.
#[inline]
pub fn weighted_exponent(u: f64, t: f64) -> f64 {
    1.0 - u * (1.0 - t)
}

/// `p^e` with the zero-probability convention. Errors when `p = 0` and
/// `e ≤ 0`.
#[inline]
pub(crate) fn power_term(p: f64, e: f64) -> Result<f64> {
    if p == 0.0 {
        if e > 0.0 {
            Ok(0.0)
        } else {
            Err(Error::Domain(format!(
                "zero probability raised to non-positive exponent {e}"
            )))
        }
    } else {
        Ok(p.powf(e))
    }
}

/// Golomb's generating function `Σ p_i^t`.
pub fn golomb_igf(dist: &ProbabilityDistribution, t: f64, domain: TDomain) -> Result<f64> {
    domain.check(t)?;
    try_compensated_sum(dist.probs().iter().map(|&p| power_term(p, t)))
}

/// The weighted generating function `Σ p_i^{1 − u_i(1 − t)}`.
pub fn weighted_igf(scheme: &UtilityInformationScheme, t: f64, domain: TDomain) -> Result<f64> {
    domain.check(t)?;
    try_compensated_sum(
        scheme
            .pairs()
            .map(|(p, u)| power_term(p, weighted_exponent(u, t))),
    )
}

/// Hooda and Bhaker's generating function `Σ u_i p_i^t`.
pub fn hooda_bhaker_igf(scheme: &UtilityInformationScheme, t: f64, domain: TDomain) -> Result<f64> {
    domain.check(t)?;
    try_compensated_sum(scheme.pairs().map(|(p, u)| Ok(u * power_term(p, t)?)))
}

/// Shannon entropy `−Σ p_i ln p_i`, converted to `base`.
pub fn shannon_entropy(dist: &ProbabilityDistribution, base: LogBase) -> f64 {
    let nats = compensated_sum(
        dist.probs()
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| -p * p.ln()),
    );
    base.from_nats(nats)
}

/// Weighted entropy `−Σ u_i p_i ln p_i`, converted to `base`.
pub fn weighted_entropy(scheme: &UtilityInformationScheme, base: LogBase) -> f64 {
    let nats = compensated_sum(
        scheme
            .pairs()
            .filter(|&(p, _)| p > 0.0)
            .map(|(p, u)| -u * p * p.ln()),
    );
    base.from_nats(nats)
}

/// `Σ p_i (−ln p_i)^r`, the `r`-th moment of self-information.
///
/// This is the non-negative form; it equals `(−1)^r Σ p_i (ln p_i)^r`.
pub fn self_information_moment(dist: &ProbabilityDistribution, r: u32) -> f64 {
    compensated_sum(
        dist.probs()
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| p * ipow(-p.ln(), r)),
    )
}

/// `Σ p_i (−u_i ln p_i)^r`, the `r`-th moment of weighted self-information.
pub fn weighted_self_information_moment(scheme: &UtilityInformationScheme, r: u32) -> f64 {
    compensated_sum(
        scheme
            .pairs()
            .filter(|&(p, _)| p > 0.0)
            .map(|(p, u)| p * ipow(-u * p.ln(), r)),
    )
}

/// Analytic `r`-th derivative of [`weighted_igf`] in `t`:
/// `Σ (u_i ln p_i)^r · p_i^{1 − u_i(1 − t)}`.
///
/// `r = 0` returns the function itself.
pub fn weighted_igf_derivative(
    scheme: &UtilityInformationScheme,
    t: f64,
    r: u32,
    domain: TDomain,
) -> Result<f64> {
    domain.check(t)?;
    try_compensated_sum(scheme.pairs().map(|(p, u)| {
        let e = weighted_exponent(u, t);
        let term = power_term(p, e)?;
        if p == 0.0 {
            return Ok(0.0);
        }
        Ok(ipow(u * p.ln(), r) * term)
    }))
}

/// Central finite-difference approximation of the `r`-th derivative of
/// [`weighted_igf`], `r ∈ 1..=4`, step `h`.
///
/// Every stencil point is checked against `domain`; near `t = 1` this means
/// evaluating at `t ≥ 1 + 2h` or using [`TDomain::Extended`].
pub fn finite_difference_derivative(
    scheme: &UtilityInformationScheme,
    t: f64,
    r: u32,
    h: f64,
    domain: TDomain,
) -> Result<f64> {
    numdiff::central_difference(|x| weighted_igf(scheme, x, domain), t, r, h)
}

/// As [`finite_difference_derivative`] with one Richardson extrapolation step
/// (steps `h` and `h/2`), raising the truncation order to `h⁴`.
pub fn finite_difference_derivative_richardson(
    scheme: &UtilityInformationScheme,
    t: f64,
    r: u32,
    h: f64,
    domain: TDomain,
) -> Result<f64> {
    numdiff::richardson(|x| weighted_igf(scheme, x, domain), t, r, h)
}

/// `x^r` for a non-negative integer power.
#[inline]
fn ipow(x: f64, r: u32) -> f64 {
    match i32::try_from(r) {
        Ok(r) => x.powi(r),
        Err(_) => x.powf(r as f64),
    }
}
