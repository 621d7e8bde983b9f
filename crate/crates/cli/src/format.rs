//! Fixed-precision number formatting and CSV assembly.

use csv::{Terminator, WriterBuilder};

/// `x` to `sig` significant figures: fixed notation for `1e-3 ≤ |x| < 1e5`,
/// scientific otherwise, `0` for zero.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if (-3..5).contains(&mag) {
        let decimals = (sig as i32 - 1 - mag).max(0) as usize;
        let s = format!("{x:.decimals$}");
        // Rounding can carry into the next decade (9.9996 -> 10.000).
        let rounded: f64 = s.parse().expect("formatted float");
        let new_mag = rounded.abs().log10().floor() as i32;
        if new_mag > mag && decimals > 0 {
            let decimals = decimals - 1;
            return format!("{x:.decimals$}");
        }
        s
    } else {
        format!("{x:.prec$e}", prec = sig - 1)
    }
}

/// GHz columns: four significant figures.
pub fn fmt_ghz(x: f64) -> String {
    fmt_sig(x, 4)
}

/// Ratio columns: five significant figures.
pub fn fmt_ratio(x: f64) -> String {
    fmt_sig(x, 5)
}

pub fn fmt_parity(sign: i8) -> &'static str {
    if sign >= 0 {
        "+1"
    } else {
        "-1"
    }
}

/// Comma-separated, LF-terminated, header first.
pub fn csv_string(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = WriterBuilder::new().terminator(Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_figures() {
        assert_eq!(fmt_ghz(1.96924), "1.969");
        assert_eq!(fmt_ghz(0.772_63), "0.7726");
        assert_eq!(fmt_ghz(28.1689), "28.17");
        assert_eq!(fmt_ghz(-0.076_25), "-0.07625");
        assert_eq!(fmt_ghz(9.99996), "10.00");
        assert_eq!(fmt_ghz(0.0), "0");
        assert_eq!(fmt_ghz(2.2e-16), "2.200e-16");
        assert_eq!(fmt_ghz(123456.0), "1.235e5");
        assert_eq!(fmt_ratio(0.995_247), "0.99525");
    }

    #[test]
    fn csv_uses_lf() {
        let s = csv_string(&["a", "b"], &[vec!["1".into(), "x,y".into()]]);
        assert_eq!(s, "a,b\n1,\"x,y\"\n");
    }
}
