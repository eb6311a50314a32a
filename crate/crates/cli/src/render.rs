//! Number formatting for command output.

/// Default number of digits printed for scalar results.
pub const DEFAULT_DIGITS: usize = 12;
pub const MAX_DIGITS: usize = 17;

/// Renders `value` with `digits` digits: fixed-point with `digits` decimals
/// for `1e-3 ≤ |x| < 1e6` (and zero), scientific with `digits` significant
/// digits otherwise.
pub fn format_value(value: f64, digits: usize) -> String {
    let digits = digits.clamp(1, MAX_DIGITS);
    let magnitude = value.abs();
    if !value.is_finite() {
        value.to_string()
    } else if value == 0.0 || (1e-3..1e6).contains(&magnitude) {
        format!("{value:.digits$}")
    } else {
        format!("{value:.prec$e}", prec = digits - 1)
    }
}

/// 17 significant digits, which always reparses to the same `f64`.
pub fn format_roundtrip(value: f64) -> String {
    format!("{value:.16e}")
}
