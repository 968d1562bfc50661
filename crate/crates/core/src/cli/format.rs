//! Text output formats.
//!
//! Floats are written in shortest round-trip form, so a dump parses back to
//! the exact same bits.

use std::fmt::Write as _;

use crate::numerics::{CMatrix, CScalar, CVector};
use crate::verify::Check;

pub fn float(x: f64) -> String {
    format!("{x:?}")
}

/// `(<re>,<im>)`.
pub fn entry(z: CScalar) -> String {
    format!("({},{})", float(z.re), float(z.im))
}

/// `(<re>, ±<|im|>i)`.
pub fn eigenvalue(z: CScalar) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("({}, {}{}i)", float(z.re), sign, float(z.im.abs()))
}

pub fn matrix(name: &str, m: &CMatrix) -> String {
    let mut out = format!("MATRIX {name} {} {}\n", m.nrows(), m.ncols());
    for row in m.rows() {
        let line: Vec<String> = row.iter().map(|&z| entry(z)).collect();
        out.push_str(&line.join("\t"));
        out.push('\n');
    }
    out
}

pub fn vector_entries(v: &CVector) -> String {
    v.entries()
        .iter()
        .map(|&z| entry(z))
        .collect::<Vec<_>>()
        .join("\t")
}

/// C-style `%.3e`: three decimals, signed exponent of at least two digits.
pub fn sci3(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let s = format!("{x:.3e}");
    let (mantissa, exp) = s.split_once('e').expect("LowerExp always has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

pub fn check_line(check: &Check) -> String {
    let mut out = String::new();
    write!(
        out,
        "CHECK {} residual={} tol={} {}",
        check.name,
        sci3(check.residual),
        sci3(check.tol),
        if check.passed() { "PASS" } else { "FAIL" }
    )
    .expect("writing to a String");
    out
}

/// Parses a `MATRIX` dump written by [`matrix`]; returns the name and matrix.
pub fn parse_matrix(text: &str) -> Option<(String, CMatrix)> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next()?.split_whitespace().collect();
    if header.len() != 4 || header[0] != "MATRIX" {
        return None;
    }
    let nrows: usize = header[2].parse().ok()?;
    let ncols: usize = header[3].parse().ok()?;
    let mut entries = Vec::with_capacity(nrows * ncols);
    for line in lines.take(nrows) {
        for cell in line.split('\t') {
            let inner = cell.strip_prefix('(')?.strip_suffix(')')?;
            let (re, im) = inner.split_once(',')?;
            entries.push(CScalar::new(re.parse().ok()?, im.parse().ok()?));
        }
    }
    Some((
        header[1].to_string(),
        CMatrix::new(nrows, ncols, entries).ok()?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sci3_matches_printf() {
        assert_eq!(sci3(1.0e-12), "1.000e-12");
        assert_eq!(sci3(0.0), "0.000e+00");
        assert_eq!(sci3(123456.0), "1.235e+05");
        assert_eq!(sci3(3.3e-100), "3.300e-100");
        assert_eq!(sci3(f64::INFINITY), "inf");
    }

    #[test]
    fn eigenvalue_format() {
        assert_eq!(eigenvalue(CScalar::new(0.0, -1.5)), "(0.0, -1.5i)");
        assert_eq!(eigenvalue(CScalar::new(2.0, 0.0)), "(2.0, +0.0i)");
    }

    #[test]
    fn check_line_grammar() {
        let c = Check {
            name: "cpt",
            residual: 2.5e-16,
            tol: 1e-12,
        };
        assert_eq!(
            check_line(&c),
            "CHECK cpt residual=2.500e-16 tol=1.000e-12 PASS"
        );
        let c = Check {
            name: "cpt",
            residual: 2.5e-10,
            tol: 1e-12,
        };
        assert!(check_line(&c).ends_with(" FAIL"));
    }

    proptest! {
        #[test]
        fn matrix_dump_round_trips_bitwise(
            raw in proptest::collection::vec((-1e6f64..1e6, -1e-9f64..1e9), 6)
        ) {
            let m = CMatrix::new(2, 3, raw.iter().map(|&(a, b)| CScalar::new(a, b)).collect()).unwrap();
            let (name, back) = parse_matrix(&matrix("M", &m)).unwrap();
            prop_assert_eq!(name, "M");
            for (a, b) in m.entries().iter().zip(back.entries()) {
                prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
                prop_assert_eq!(a.im.to_bits(), b.im.to_bits());
            }
        }
    }
}
