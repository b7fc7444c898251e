//! Exact rational time arithmetic and rendering helpers.
//!
//! All time coordinates and measures in this crate are `BigRational` values.
//! Floats only appear at I/O boundaries (parsing decimal literals, rendering
//! reports).

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

/// The exact number type used for every time coordinate and measure.
pub type Rat = BigRational;

/// Shorthand constructor from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Integer shorthand.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses a rational literal: `p/q`, an integer, or a decimal such as `4.5`.
pub fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).ok()?;
        let d = BigInt::from_str(den.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.trim_start().starts_with('-');
        let int = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(int_part).ok()?
        };
        let frac = BigInt::from_str(frac_part).ok()?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mag = int.abs() * &scale + frac;
        let mag = if negative { -mag } else { mag };
        return Some(Rat::new(mag, scale));
    }
    BigInt::from_str(s).ok().map(Rat::from_integer)
}

/// Renders a rational exactly: `p/q`, or just `p` when the denominator is 1.
pub fn format_rational(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rounds a rational to 12 significant decimal digits (round half to even)
/// and returns the resulting f64. Deterministic: the same rational always
/// yields the same float.
pub fn to_f64_12(r: &Rat) -> f64 {
    const DIGITS: i64 = 12;
    if r.is_zero() {
        return 0.0;
    }
    let negative = r.is_negative();
    let abs = r.abs();
    // decimal exponent e with 10^e <= abs < 10^(e+1)
    let mut e: i64 = 0;
    let ten = Rat::from_integer(BigInt::from(10));
    let one = Rat::one();
    let mut scaled = abs.clone();
    if scaled >= one {
        while scaled >= ten {
            scaled /= &ten;
            e += 1;
        }
    } else {
        while scaled < one {
            scaled *= &ten;
            e -= 1;
        }
    }
    // mantissa = round_half_even(abs * 10^(DIGITS-1-e)), a DIGITS-digit integer
    let shift = DIGITS - 1 - e;
    let scale = pow10(shift);
    let mantissa = round_half_even(&(abs * scale));
    let mut text = String::new();
    if negative {
        text.push('-');
    }
    text.push_str(&mantissa.to_string());
    text.push('e');
    text.push_str(&(e - (DIGITS - 1)).to_string());
    f64::from_str(&text).unwrap_or(f64::NAN)
}

fn pow10(exp: i64) -> Rat {
    let p = BigInt::from(10u32).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        Rat::from_integer(p)
    } else {
        Rat::new(BigInt::one(), p)
    }
}

/// Nearest integer, ties to even.
fn round_half_even(r: &Rat) -> BigInt {
    let (floor, frac) = {
        let f = r.floor();
        (f.to_integer(), r - f)
    };
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    if frac < half {
        floor
    } else if frac > half {
        floor + 1
    } else if floor.is_even() {
        floor
    } else {
        floor + 1
    }
}

/// Best-effort f64 conversion (used only for display of irrational values).
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
