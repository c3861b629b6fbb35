//! Exact decimal literals and their outward-rounded conversion to intervals.

use super::Interval;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A finite decimal `mant * 10^exp`, normalized so `mant` has no trailing zeros.
///
/// Arithmetic is exact; operations return `None` when the mantissa would
/// leave the `i128` range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dec {
    mant: i128,
    exp: i32,
}

impl Dec {
    pub const ZERO: Dec = Dec { mant: 0, exp: 0 };

    pub fn new(mant: i128, exp: i32) -> Dec {
        let mut d = Dec { mant, exp };
        d.normalize();
        d
    }

    pub fn from_i64(n: i64) -> Dec {
        Dec::new(n as i128, 0)
    }

    fn normalize(&mut self) {
        if self.mant == 0 {
            self.exp = 0;
            return;
        }
        while self.mant % 10 == 0 {
            self.mant /= 10;
            self.exp += 1;
        }
    }

    pub fn mantissa(&self) -> i128 {
        self.mant
    }

    pub fn exponent(&self) -> i32 {
        self.exp
    }

    /// Parses `[+-]digits[.digits][(e|E)[+-]digits]`.
    pub fn parse(text: &str) -> Option<Dec> {
        let c = Canonical::parse(text)?;
        let mut mant: i128 = 0;
        for &d in &c.digits {
            mant = mant.checked_mul(10)?.checked_add(d as i128)?;
        }
        if c.neg {
            mant = -mant;
        }
        let exp = c.point.checked_sub(c.digits.len() as i64)?;
        Some(Dec::new(mant, i32::try_from(exp).ok()?))
    }

    /// Rescales both operands to the smaller exponent.
    fn align(a: Dec, b: Dec) -> Option<(i128, i128, i32)> {
        let e = a.exp.min(b.exp);
        let sa = pow10(u32::try_from(a.exp - e).ok()?)?;
        let sb = pow10(u32::try_from(b.exp - e).ok()?)?;
        Some((a.mant.checked_mul(sa)?, b.mant.checked_mul(sb)?, e))
    }

    pub fn checked_add(self, o: Dec) -> Option<Dec> {
        if self.mant == 0 {
            return Some(o);
        }
        if o.mant == 0 {
            return Some(self);
        }
        let (a, b, e) = Dec::align(self, o)?;
        Some(Dec::new(a.checked_add(b)?, e))
    }

    pub fn checked_sub(self, o: Dec) -> Option<Dec> {
        self.checked_add(Dec {
            mant: o.mant.checked_neg()?,
            exp: o.exp,
        })
    }

    pub fn checked_mul(self, o: Dec) -> Option<Dec> {
        Some(Dec::new(
            self.mant.checked_mul(o.mant)?,
            self.exp.checked_add(o.exp)?,
        ))
    }

    pub fn signum(&self) -> i32 {
        self.mant.signum() as i32
    }

    /// Exact comparison; `None` only if alignment overflows.
    pub fn checked_cmp(&self, o: &Dec) -> Option<Ordering> {
        if self.mant.signum() != o.mant.signum() {
            return Some(self.mant.signum().cmp(&o.mant.signum()));
        }
        let (a, b, _) = Dec::align(*self, *o)?;
        Some(a.cmp(&b))
    }

    /// Tightest outward enclosure of the exact value.
    pub fn to_interval(&self) -> Interval {
        from_decimal(&self.to_string()).expect("Dec always formats as a valid decimal")
    }
}

fn pow10(k: u32) -> Option<i128> {
    10i128.checked_pow(k)
}

impl fmt::Display for Dec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&layout(self.mant, self.exp))
    }
}

impl std::str::FromStr for Dec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Dec> {
        Dec::parse(s).ok_or_else(|| Error::Parse {
            what: "decimal",
            text: s.to_string(),
        })
    }
}

/// Positional layout for moderate exponents, scientific otherwise.
fn layout(mant: i128, exp: i32) -> String {
    let neg = mant < 0;
    let ds = mant.unsigned_abs().to_string();
    let e10 = exp as i64 + ds.len() as i64 - 1;
    let body = if mant == 0 {
        "0".to_string()
    } else if (-6..16).contains(&e10) {
        if exp >= 0 {
            format!("{ds}{}", "0".repeat(exp as usize))
        } else {
            let idx = ds.len() as i64 + exp as i64;
            if idx <= 0 {
                format!("0.{}{ds}", "0".repeat((-idx) as usize))
            } else {
                let (a, b) = ds.split_at(idx as usize);
                format!("{a}.{b}")
            }
        }
    } else if ds.len() == 1 {
        format!("{ds}e{e10}")
    } else {
        format!("{}.{}e{e10}", &ds[..1], &ds[1..])
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Decimal value `0.d1d2d3... * 10^point`, digits without leading or trailing zeros.
#[derive(Debug, PartialEq, Eq)]
struct Canonical {
    neg: bool,
    digits: Vec<u8>,
    point: i64,
}

impl Canonical {
    fn parse(text: &str) -> Option<Canonical> {
        let s = text.trim();
        let (neg, s) = match s.as_bytes().first()? {
            b'-' => (true, &s[1..]),
            b'+' => (false, &s[1..]),
            _ => (false, s),
        };
        let (mant, exp) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
            None => (s, 0),
        };
        let (int, frac) = match mant.find('.') {
            Some(i) => (&mant[..i], &mant[i + 1..]),
            None => (mant, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return None;
        }
        if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
            return None;
        }
        let mut digits: Vec<u8> = int.bytes().chain(frac.bytes()).map(|b| b - b'0').collect();
        let mut point = int.len() as i64 + exp;
        let lead = digits.iter().take_while(|&&d| d == 0).count();
        digits.drain(..lead);
        point -= lead as i64;
        while digits.last() == Some(&0) {
            digits.pop();
        }
        if digits.is_empty() {
            return Some(Canonical {
                neg: false,
                digits,
                point: 0,
            });
        }
        Some(Canonical { neg, digits, point })
    }

    /// Exact decimal expansion of a finite double.
    fn of_f64(x: f64) -> Canonical {
        Canonical::parse(&format!("{x:.1100e}")).expect("std formats finite doubles as decimals")
    }

    fn cmp_magnitude(&self, o: &Canonical) -> Ordering {
        match (self.digits.is_empty(), o.digits.is_empty()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        self.point
            .cmp(&o.point)
            .then_with(|| self.digits.cmp(&o.digits))
    }

    fn cmp_value(&self, o: &Canonical) -> Ordering {
        let sa = if self.digits.is_empty() { 0 } else if self.neg { -1 } else { 1 };
        let sb = if o.digits.is_empty() { 0 } else if o.neg { -1 } else { 1 };
        if sa != sb {
            return sa.cmp(&sb);
        }
        let m = self.cmp_magnitude(o);
        if sa < 0 {
            m.reverse()
        } else {
            m
        }
    }
}

/// Tightest interval containing the decimal number written in `text`.
///
/// Exactly representable literals give a point interval, others the two
/// doubles adjacent to the correctly rounded value.
pub fn from_decimal(text: &str) -> Result<Interval> {
    let bad = || Error::Parse {
        what: "decimal number",
        text: text.to_string(),
    };
    let canon = Canonical::parse(text).ok_or_else(bad)?;
    let x: f64 = text.trim().parse().map_err(|_| bad())?;
    if x == f64::INFINITY {
        return Interval::new(f64::MAX, f64::INFINITY);
    }
    if x == f64::NEG_INFINITY {
        return Interval::new(f64::NEG_INFINITY, f64::MIN);
    }
    match canon.cmp_value(&Canonical::of_f64(x)) {
        Ordering::Equal => Ok(Interval::point(x)),
        Ordering::Less => Interval::new(x.next_down(), x),
        Ordering::Greater => Interval::new(x, x.next_up()),
    }
}

impl Interval {
    /// See [`from_decimal`].
    pub fn from_decimal(text: &str) -> Result<Interval> {
        from_decimal(text)
    }
}

/// `x` with `digits` significant digits, rounded toward `+inf` if `up`, else toward `-inf`.
pub(crate) fn format_directed(x: f64, digits: usize, up: bool) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let digits = digits.clamp(1, 30);
    let s = format!("{:.*e}", digits - 1, x);
    let (m, e) = s.split_once('e').expect("scientific format");
    let exp: i32 = e.parse().expect("integer exponent");
    let frac = m.split_once('.').map_or(0, |(_, f)| f.len()) as i32;
    let mut mant: i128 = m.replace('.', "").parse().expect("digit mantissa");
    let mut exp = exp - frac;
    let ord = Canonical::parse(&s)
        .expect("formatted number parses")
        .cmp_value(&Canonical::of_f64(x));
    if up && ord == Ordering::Less {
        mant += 1;
    } else if !up && ord == Ordering::Greater {
        mant -= 1;
    }
    let limit = pow10(digits as u32).expect("digits <= 30");
    if mant.abs() == limit {
        mant /= 10;
        exp += 1;
    }
    if mant == 0 {
        return "0".into();
    }
    layout(mant, exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_literals_are_points() {
        assert_eq!(from_decimal("0.5").unwrap(), Interval::point(0.5));
        assert_eq!(from_decimal("128").unwrap(), Interval::point(128.0));
        assert_eq!(from_decimal("-2.25e1").unwrap(), Interval::point(-22.5));
    }

    #[test]
    fn inexact_literals_are_widened() {
        let t = from_decimal("0.1").unwrap();
        assert!(t.lo() < t.hi());
        assert!(t.contains(0.1));
        assert_eq!(t.hi(), t.lo().next_up());
        let t = from_decimal("0.0735").unwrap();
        assert!(t.lo() < t.hi());
    }

    #[test]
    fn rejects_non_numbers() {
        for s in ["", "abc", "inf", "NaN", "1.2.3", "--1", "1e"] {
            assert!(from_decimal(s).is_err(), "{s}");
        }
    }

    #[test]
    fn dec_arithmetic_is_exact() {
        let a: Dec = "0.0996".parse().unwrap();
        let b: Dec = "0.352".parse().unwrap();
        let l: Dec = "0.05".parse().unwrap();
        let m = a.checked_sub(b.checked_mul(l).unwrap()).unwrap();
        assert_eq!(m.to_string(), "0.082");
        assert_eq!(m, Dec::new(82, -3));
        assert_eq!(
            m.checked_cmp(&"0.082".parse().unwrap()),
            Some(Ordering::Equal)
        );
    }

    #[test]
    fn dec_display() {
        assert_eq!(Dec::new(5, -1).to_string(), "0.5");
        assert_eq!(Dec::new(-273, -8).to_string(), "-0.00000273");
        assert_eq!(Dec::new(273, -10).to_string(), "2.73e-8");
        assert_eq!(Dec::new(12, 3).to_string(), "12000");
        assert_eq!(Dec::new(0, 5).to_string(), "0");
    }

    #[test]
    fn dec_overflow_is_none() {
        let big = Dec::new(i128::MAX / 2, 0);
        assert!(big.checked_mul(big).is_none());
        assert!(Dec::new(1, 0).checked_add(Dec::new(1, -60)).is_none());
    }

    #[test]
    fn directed_formatting() {
        assert_eq!(format_directed(1.0 / 3.0, 3, false), "0.333");
        assert_eq!(format_directed(1.0 / 3.0, 3, true), "0.334");
        assert_eq!(format_directed(-1.0 / 3.0, 3, false), "-0.334");
        assert_eq!(format_directed(0.1, 1, true), "0.2");
        assert_eq!(format_directed(0.1, 1, false), "0.1");
        assert_eq!(format_directed(9.99, 2, true), "10");
        assert_eq!(format_directed(2.0, 3, true), "2.00");
    }
}
