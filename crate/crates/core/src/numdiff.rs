//! Central finite differences of order `h²`, used as a numerical oracle for
//! analytic derivatives.

use crate::error::{Error, Result};

/// Default step for derivative order `r`: `1e-5` for `r = 1`, `1e-3` for
/// `r ∈ {2, 3, 4}`.
pub fn default_step(r: u32) -> f64 {
    if r <= 1 {
        1e-5
    } else {
        1e-3
    }
}

/// Stencil `(offset multiple of h, weight)` and the power of `h` dividing
/// the weighted sum.
type Stencil = (&'static [(f64, f64)], i32, f64);

fn stencil(r: u32) -> Result<Stencil> {
    const D1: [(f64, f64); 2] = [(-1.0, -1.0), (1.0, 1.0)];
    const D2: [(f64, f64); 3] = [(-1.0, 1.0), (0.0, -2.0), (1.0, 1.0)];
    const D3: [(f64, f64); 4] = [(-2.0, -1.0), (-1.0, 2.0), (1.0, -2.0), (2.0, 1.0)];
    const D4: [(f64, f64); 5] = [
        (-2.0, 1.0),
        (-1.0, -4.0),
        (0.0, 6.0),
        (1.0, -4.0),
        (2.0, 1.0),
    ];
    match r {
        1 => Ok((&D1, 1, 2.0)),
        2 => Ok((&D2, 2, 1.0)),
        3 => Ok((&D3, 3, 2.0)),
        4 => Ok((&D4, 4, 1.0)),
        _ => Err(Error::InvalidParameter(format!(
            "finite-difference order must be in 1..=4, got {r}"
        ))),
    }
}

/// Central-difference estimate of `f^{(r)}(t)` for `r ∈ 1..=4`.
pub fn central_difference<F>(f: F, t: f64, r: u32, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "step must be > 0, got {h}"
        )));
    }
    let (points, power, denom) = stencil(r)?;
    let mut acc = 0.0;
    for &(offset, weight) in points {
        if weight != 0.0 {
            acc += weight * f(t + offset * h)?;
        }
    }
    Ok(acc / (denom * h.powi(power)))
}

/// One Richardson step on [`central_difference`]: `(4 D(h/2) − D(h)) / 3`.
pub fn richardson<F>(f: F, t: f64, r: u32, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let coarse = central_difference(&f, t, r, h)?;
    let fine = central_difference(&f, t, r, 0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}
