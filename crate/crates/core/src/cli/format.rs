use crate::algebra::ExactRational;

/// Rounds to 12 significant digits, trailing zeros dropped. Very large or
/// small magnitudes switch to scientific notation.
pub fn decimal12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&exp) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `p/q (decimal)`
pub fn exact_with_decimal(x: &ExactRational) -> String {
    format!("{x} ({})", decimal12(x.to_f64()))
}
