//! Information generating functions for discrete probability distributions.
//!
//! The central object is the weighted generating function of a utility
//! information scheme `(P, U)`,
//!
//! ```text
//! I(P, U, t) = Σ p_i^{1 − u_i(1 − t)},   t ≥ 1,
//! ```
//!
//! whose derivatives at `t = 1` give the weighted entropy `−Σ u_i p_i ln p_i`
//! and the moments of weighted self-information `−u_i ln p_i`. Golomb's and
//! Hooda–Bhaker's generating functions, closed forms for three parametric
//! families and the escort (power) transform are provided alongside.
//!
//! ```
//! use igf_core::{make_scheme, weighted_entropy, weighted_igf, DistributionKind, LogBase, TDomain};
//!
//! let scheme = make_scheme(&[0.5, 0.5], &[1.0, 2.0], DistributionKind::Complete).unwrap();
//! assert_eq!(weighted_igf(&scheme, 2.0, TDomain::Standard).unwrap(), 0.375);
//! let h = weighted_entropy(&scheme, LogBase::Natural);
//! assert!((h - 1.5 * std::f64::consts::LN_2).abs() < 1e-15);
//! ```

#![forbid(unsafe_code)]

pub mod closed_forms;
pub mod distributions;
pub mod error;
pub mod escort;
pub mod generating_functions;
pub mod numdiff;
pub mod sum;
pub mod zeta;

pub use closed_forms::{
    beta_power_entropy, beta_power_igf, family_entropy, family_igf, geometric_entropy,
    geometric_igf, uniform_entropy, uniform_igf, ConstantUtility,
};
pub use distributions::{
    make_complete, make_generalized, make_scheme, realize_family, DistributionKind,
    ParametricFamily, ProbabilityDistribution, UtilityDistribution, UtilityInformationScheme,
};
pub use error::{Error, Result};
pub use escort::{
    escort_transform, generalized_igf, unnormalized_power_igf, verify_scaling_identity, EscortPair,
    ScalingReport,
};
pub use generating_functions::{
    finite_difference_derivative, finite_difference_derivative_richardson, golomb_igf,
    hooda_bhaker_igf, self_information_moment, shannon_entropy, weighted_entropy, weighted_igf,
    weighted_igf_derivative, weighted_self_information_moment, LogBase, TDomain,
};
pub use zeta::{zeta, zeta_derivative};
