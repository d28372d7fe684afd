//! Text forms of complex numbers and angles.

use std::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} at byte {position}: {message}")]
pub struct ParseError {
    pub input: String,
    pub position: usize,
    pub message: &'static str,
}

fn err(input: &str, position: usize, message: &'static str) -> ParseError {
    ParseError {
        input: input.to_string(),
        position,
        message,
    }
}

/// Length of the longest prefix of `s` that is a finite decimal literal
/// with optional sign and exponent.
fn real_prefix(s: &[u8]) -> usize {
    let mut i = 0;
    if i < s.len() && (s[i] == b'+' || s[i] == b'-') {
        i += 1;
    }
    let mut digits = 0;
    while i < s.len() && s[i].is_ascii_digit() {
        i += 1;
        digits += 1;
    }
    if i < s.len() && s[i] == b'.' {
        i += 1;
        while i < s.len() && s[i].is_ascii_digit() {
            i += 1;
            digits += 1;
        }
    }
    if digits == 0 {
        return 0;
    }
    if i < s.len() && (s[i] == b'e' || s[i] == b'E') {
        let mut j = i + 1;
        if j < s.len() && (s[j] == b'+' || s[j] == b'-') {
            j += 1;
        }
        let start = j;
        while j < s.len() && s[j].is_ascii_digit() {
            j += 1;
        }
        if j > start {
            i = j;
        }
    }
    i
}

fn parse_real(input: &str, offset: usize, s: &str) -> Result<f64, ParseError> {
    let v: f64 = s
        .parse()
        .map_err(|_| err(input, offset, "malformed number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(err(input, offset, "number out of range"))
    }
}

/// Parse `<real>`, `<real>i` or `<real>(+|-)<real>i`. NaN and infinity
/// literals are rejected.
pub fn parse_complex(text: &str) -> Result<Complex64, ParseError> {
    let s = text.trim();
    let lead = text.len() - text.trim_start().len();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(err(text, lead, "empty input"));
    }
    let n1 = real_prefix(bytes);
    if n1 == 0 {
        return Err(err(text, lead, "expected a number"));
    }
    let first = parse_real(text, lead, &s[..n1])?;
    let rest = &bytes[n1..];
    if rest.is_empty() {
        return Ok(Complex64::new(first, 0.0));
    }
    if rest == b"i" {
        return Ok(Complex64::new(0.0, first));
    }
    if rest[0] != b'+' && rest[0] != b'-' {
        return Err(err(text, lead + n1, "expected '+', '-' or 'i'"));
    }
    let n2 = real_prefix(rest);
    if n2 <= 1 {
        // "a+i" and "a-i"
        if &rest[1..] == b"i" {
            let sign = if rest[0] == b'-' { -1.0 } else { 1.0 };
            return Ok(Complex64::new(first, sign));
        }
        return Err(err(text, lead + n1 + 1, "expected a number"));
    }
    let second = parse_real(text, lead + n1, &s[n1..n1 + n2])?;
    match &rest[n2..] {
        b"i" => Ok(Complex64::new(first, second)),
        [] => Err(err(
            text,
            lead + n1 + n2,
            "missing 'i' on the imaginary part",
        )),
        _ => Err(err(text, lead + n1 + n2, "trailing characters")),
    }
}

/// Shortest text that [`parse_complex`] maps back to `z` exactly.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 && !z.im.is_sign_negative() {
        format!("{:e}", z.re)
    } else {
        let sign = if z.im.is_sign_negative() { '-' } else { '+' };
        format!("{:e}{sign}{:e}i", z.re, z.im.abs())
    }
}

/// Fixed-width rendering with 17 significant digits.
pub fn format_real17(x: f64) -> String {
    format!("{x:.16e}")
}

/// An angle in radians, or a multiple of π written with a `pi` suffix
/// (`0.5pi`, `pi`, `-1/3pi` is not accepted). A plain complex value is
/// taken as radians.
pub fn parse_angle(text: &str) -> Result<Complex64, ParseError> {
    let s = text.trim();
    if let Some(head) = s.strip_suffix("pi") {
        let lead = text.len() - text.trim_start().len();
        let factor = if head.is_empty() {
            1.0
        } else {
            let n = real_prefix(head.as_bytes());
            if n != head.len() {
                return Err(err(text, lead + n, "expected a real multiple of pi"));
            }
            parse_real(text, lead, head)?
        };
        return Ok(Complex64::new(factor * PI, 0.0));
    }
    parse_complex(text)
}
