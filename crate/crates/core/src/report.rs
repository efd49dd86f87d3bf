//! Number formatting shared by the JSON and text reports.

use serde::Serializer;

pub const SIG_DIGITS: usize = 12;

/// `x` rounded to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIG_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Fixed notation with 12 significant digits.
pub fn fmt_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.*}", SIG_DIGITS - 1, 0.0);
    }
    let x = round_sig(x);
    let exp = x.abs().log10().floor() as i64;
    let decimals = (SIG_DIGITS as i64 - 1 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Serializes an `f64` rounded to 12 significant digits.
pub fn ser_sig<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig(*x))
}
