//! Closed forms of the weighted generating function and weighted entropy for
//! the uniform, geometric and β-power families under a constant utility `u`.
//!
//! With `s = 1 − u(1 − t)`:
//!
//! - uniform over `n` points: `I = n^{u(1−t)}`, `H = u ln n`
//! - geometric `p_i = q p^i`, `i ≥ 0`: `I = q^s / (1 − p^s)`,
//!   `H = −u (p ln p + q ln q) / q`
//! - β-power `p_i = i^{−β}/ζ(β)`, `i ≥ 1`: `I = ζ(βs) / ζ(β)^s`,
//!   `H = u (ln ζ(β) − β ζ′(β)/ζ(β))`
//!
//! The IGFs accept any `t` for which the series converges, which includes
//! values slightly below 1; this lets finite differences straddle `t = 1`.

use crate::distributions::ParametricFamily;
use crate::error::{Error, Result};
use crate::generating_functions::weighted_exponent;
use crate::zeta::{zeta, zeta_derivative};

/// A strictly positive utility shared by every event.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ConstantUtility(f64);

impl ConstantUtility {
    pub fn new(u: f64) -> Result<Self> {
        if u > 0.0 && u.is_finite() {
            Ok(Self(u))
        } else {
            Err(Error::InvalidParameter(format!(
                "utility must be finite and > 0, got {u}"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

fn check_t(t: f64) -> Result<()> {
    if t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("t must be finite, got {t}")))
    }
}

pub fn uniform_igf(n: usize, u: f64, t: f64) -> Result<f64> {
    ParametricFamily::Uniform { n }.validate()?;
    let u = ConstantUtility::new(u)?.get();
    check_t(t)?;
    Ok((n as f64).powf(u * (1.0 - t)))
}

pub fn uniform_entropy(n: usize, u: f64) -> Result<f64> {
    ParametricFamily::Uniform { n }.validate()?;
    let u = ConstantUtility::new(u)?.get();
    Ok(u * (n as f64).ln())
}

pub fn geometric_igf(p: f64, u: f64, t: f64) -> Result<f64> {
    ParametricFamily::Geometric { p }.validate()?;
    let u = ConstantUtility::new(u)?.get();
    check_t(t)?;
    let s = weighted_exponent(u, t);
    if s <= 0.0 {
        return Err(Error::Domain(format!(
            "geometric series diverges for exponent {s} <= 0"
        )));
    }
    let q = 1.0 - p;
    // 1 − p^s without cancellation
    let denom = -(s * p.ln()).exp_m1();
    Ok(q.powf(s) / denom)
}

pub fn geometric_entropy(p: f64, u: f64) -> Result<f64> {
    ParametricFamily::Geometric { p }.validate()?;
    let u = ConstantUtility::new(u)?.get();
    let q = 1.0 - p;
    let base = -(p * p.ln() + q * (-p).ln_1p()) / q;
    Ok(u * base)
}

/// `ζ(βs) / ζ(β)^s`, the closed form of `Σ (i^{−β}/ζ(β))^s`.
pub fn beta_power_igf(beta: f64, u: f64, t: f64) -> Result<f64> {
    ParametricFamily::BetaPower { beta }.validate()?;
    let u = ConstantUtility::new(u)?.get();
    check_t(t)?;
    let s = weighted_exponent(u, t);
    if beta * s <= 1.0 {
        return Err(Error::Domain(format!(
            "beta-power series diverges: beta * s = {} <= 1",
            beta * s
        )));
    }
    let z = zeta(beta)?;
    Ok(zeta(beta * s)? / z.powf(s))
}

pub fn beta_power_entropy(beta: f64, u: f64) -> Result<f64> {
    ParametricFamily::BetaPower { beta }.validate()?;
    let u = ConstantUtility::new(u)?.get();
    let z = zeta(beta)?;
    let dz = zeta_derivative(beta)?;
    Ok(u * (z.ln() - beta * dz / z))
}

/// Closed-form weighted IGF of `family` with constant utility `u`.
pub fn family_igf(family: ParametricFamily, u: f64, t: f64) -> Result<f64> {
    match family {
        ParametricFamily::Uniform { n } => uniform_igf(n, u, t),
        ParametricFamily::Geometric { p } => geometric_igf(p, u, t),
        ParametricFamily::BetaPower { beta } => beta_power_igf(beta, u, t),
    }
}

/// Closed-form weighted entropy (nats) of `family` with constant utility `u`.
pub fn family_entropy(family: ParametricFamily, u: f64) -> Result<f64> {
    match family {
        ParametricFamily::Uniform { n } => uniform_entropy(n, u),
        ParametricFamily::Geometric { p } => geometric_entropy(p, u),
        ParametricFamily::BetaPower { beta } => beta_power_entropy(beta, u),
    }
}
