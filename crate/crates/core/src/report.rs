//! Number formatting for reports.

/// Formats `x` with 12 significant digits. Very large or very small
/// magnitudes switch to scientific notation.
pub fn sig(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // The exponent after rounding, so 0.99999999999999 counts as 1.
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let exp: i32 = sci[sci.find('e').expect("scientific form") + 1..]
        .parse()
        .expect("integer exponent");
    if !(-5..DIGITS).contains(&exp) {
        return sci;
    }
    let decimals = (DIGITS - 1 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}
