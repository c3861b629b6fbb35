//! Closed intervals of `f64` with outward rounding.
//!
//! Every operation returns an enclosure of the exact image of its
//! arguments. Endpoints may be infinite but never NaN, `lo` is never
//! `+inf` and `hi` is never `-inf`.

mod decimal;
mod elem;
mod prover;
mod root;
pub(crate) mod round;

pub use decimal::{from_decimal, Dec};
pub use elem::{elem, Elem, LIBM_ULPS, TRIG_ARG_MAX};
pub use prover::{prove_nonneg, IntervalBox, ProofResult, ProofStatus, ProveOptions};
pub use root::{bracket_root_monotone, Monotonicity};
pub(crate) use root::bracket_root_with_guess;

use crate::error::{Error, Result};
use round::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A closed interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

/// Enclosure of pi one ulp wide.
pub const PI_IV: Interval = Interval {
    lo: std::f64::consts::PI,
    hi: const_next_up(std::f64::consts::PI),
};

/// Binary operations accepted by [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };
    pub const ENTIRE: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    /// Builds `[lo, hi]`; fails on NaN, `lo > hi` or an empty infinite interval.
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi || lo == f64::INFINITY || hi == f64::NEG_INFINITY
        {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// Degenerate interval `[x, x]`. Panics if `x` is NaN or infinite.
    pub fn point(x: f64) -> Self {
        assert!(x.is_finite(), "Interval::point needs a finite value, got {x}");
        Interval { lo: x, hi: x }
    }

    /// Constructor for constants known to be ordered and finite.
    pub(crate) const fn raw(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    /// Lower endpoint.
    pub fn lo(&self) -> f64 {
        self.lo
    }

    /// Upper endpoint.
    pub fn hi(&self) -> f64 {
        self.hi
    }

    /// Midpoint, finite whenever both endpoints are.
    pub fn mid(&self) -> f64 {
        if self.lo == f64::NEG_INFINITY && self.hi == f64::INFINITY {
            0.0
        } else if self.lo == f64::NEG_INFINITY {
            f64::MIN
        } else if self.hi == f64::INFINITY {
            f64::MAX
        } else {
            let m = self.lo * 0.5 + self.hi * 0.5;
            m.clamp(self.lo, self.hi)
        }
    }

    /// Width rounded upward.
    pub fn width(&self) -> f64 {
        sub_up(self.hi, self.lo)
    }

    /// Largest absolute value of a member.
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value of a member.
    pub fn mig(&self) -> f64 {
        if self.contains(0.0) {
            0.0
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// Every member of `self` is below every member of `other`.
    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_gt(&self, other: &Interval) -> bool {
        other.certainly_lt(self)
    }

    pub fn certainly_ge(&self, other: &Interval) -> bool {
        other.certainly_le(self)
    }

    /// Splits at the midpoint.
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.mid();
        (
            Interval { lo: self.lo, hi: m },
            Interval { lo: m, hi: self.hi },
        )
    }

    /// Pointwise minimum of two interval quantities.
    pub fn min(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    /// Pointwise maximum of two interval quantities.
    pub fn max(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn abs(&self) -> Interval {
        Interval {
            lo: self.mig(),
            hi: self.mag(),
        }
    }

    /// Restricts the enclosure to `[lo, hi]`, keeping it nonempty.
    pub(crate) fn clamp_to(self, lo: f64, hi: f64) -> Interval {
        let a = self.lo.max(lo).min(hi);
        let b = self.hi.min(hi).max(lo);
        Interval {
            lo: a.min(b),
            hi: b.max(a),
        }
    }

    /// Square, always a subset of `[0, inf)`.
    pub fn sqr(&self) -> Interval {
        self.pow_int(2)
    }

    /// Quotient, failing when `0` lies in the divisor.
    pub fn div(&self, other: &Interval) -> Result<Interval> {
        if other.contains(0.0) {
            return Err(Error::DivisionByZeroInterval {
                lo: other.lo,
                hi: other.hi,
            });
        }
        let cands_lo = [
            div_dn(self.lo, other.lo),
            div_dn(self.lo, other.hi),
            div_dn(self.hi, other.lo),
            div_dn(self.hi, other.hi),
        ];
        let cands_hi = [
            div_up(self.lo, other.lo),
            div_up(self.lo, other.hi),
            div_up(self.hi, other.lo),
            div_up(self.hi, other.hi),
        ];
        if cands_lo.iter().chain(cands_hi.iter()).any(|v| v.is_nan()) {
            return Ok(Interval::ENTIRE);
        }
        let lo = cands_lo.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = cands_hi.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Ok(Interval { lo, hi })
    }

    /// Reciprocal, failing when `0` lies in the interval.
    pub fn recip(&self) -> Result<Interval> {
        Interval::ONE.div(self)
    }

    /// Integer power by binary exponentiation; even powers are nonnegative.
    pub fn pow_int(&self, n: i32) -> Interval {
        if n == 0 {
            return Interval::ONE;
        }
        if n < 0 {
            return match self.pow_int(-n).recip() {
                Ok(v) => v,
                Err(_) => Interval::ENTIRE,
            };
        }
        let n = n as u32;
        let pl = point_pow(self.lo, n);
        let ph = point_pow(self.hi, n);
        if n % 2 == 1 {
            return Interval {
                lo: pl.lo,
                hi: ph.hi,
            };
        }
        if self.lo >= 0.0 {
            Interval {
                lo: pl.lo.max(0.0),
                hi: ph.hi,
            }
        } else if self.hi <= 0.0 {
            Interval {
                lo: ph.lo.max(0.0),
                hi: pl.hi,
            }
        } else {
            Interval {
                lo: 0.0,
                hi: pl.hi.max(ph.hi),
            }
        }
    }

    /// Formats both endpoints with `digits` significant digits, rounded outward.
    pub fn to_string_digits(&self, digits: usize) -> String {
        format!(
            "[{}, {}]",
            decimal::format_directed(self.lo, digits, false),
            decimal::format_directed(self.hi, digits, true)
        )
    }
}

/// `x^n` for a finite or infinite point, as an enclosure.
fn point_pow(x: f64, n: u32) -> Interval {
    if x.is_infinite() {
        let v = if x > 0.0 || n % 2 == 0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        };
        return if v > 0.0 {
            Interval { lo: f64::MAX, hi: v }
        } else {
            Interval { lo: v, hi: f64::MIN }
        };
    }
    let mut base = Interval::point(x);
    let mut acc = Interval::ONE;
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base;
        }
        k >>= 1;
        if k > 0 {
            base = base * base;
        }
    }
    acc
}

/// Binary arithmetic dispatched on [`Op`].
pub fn arith(a: Interval, b: Interval, op: Op) -> Result<Interval> {
    match op {
        Op::Add => Ok(a + b),
        Op::Sub => Ok(a - b),
        Op::Mul => Ok(a * b),
        Op::Div => a.div(&b),
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval {
            lo: add_dn(self.lo, o.lo),
            hi: add_up(self.hi, o.hi),
        }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval {
            lo: sub_dn(self.lo, o.hi),
            hi: sub_up(self.hi, o.lo),
        }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let lo = mul_dn(self.lo, o.lo)
            .min(mul_dn(self.lo, o.hi))
            .min(mul_dn(self.hi, o.lo))
            .min(mul_dn(self.hi, o.hi));
        let hi = mul_up(self.lo, o.lo)
            .max(mul_up(self.lo, o.hi))
            .max(mul_up(self.hi, o.lo))
            .max(mul_up(self.hi, o.hi));
        Interval { lo, hi }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

macro_rules! scalar_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<f64> for Interval {
            type Output = Interval;
            fn $f(self, o: f64) -> Interval {
                self.$f(Interval::point(o))
            }
        }
        impl $tr<Interval> for f64 {
            type Output = Interval;
            fn $f(self, o: Interval) -> Interval {
                Interval::point(self).$f(o)
            }
        }
    )*};
}
scalar_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?}]", self.lo, self.hi)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Endpoint {
    Num(f64),
    Text(String),
}

impl Endpoint {
    fn from_f64(x: f64) -> Self {
        if x.is_finite() {
            Endpoint::Num(x)
        } else if x > 0.0 {
            Endpoint::Text("inf".into())
        } else {
            Endpoint::Text("-inf".into())
        }
    }

    fn to_f64(&self) -> std::result::Result<f64, String> {
        match self {
            Endpoint::Num(x) => Ok(*x),
            Endpoint::Text(s) => match s.as_str() {
                "inf" | "+inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                other => Err(format!("bad interval endpoint {other:?}")),
            },
        }
    }
}

/// Serialized as `[lo, hi]`; infinite endpoints become `"inf"` / `"-inf"`.
impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (Endpoint::from_f64(self.lo), Endpoint::from_f64(self.hi)).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (a, b) = <(Endpoint, Endpoint)>::deserialize(d)?;
        let lo = a.to_f64().map_err(serde::de::Error::custom)?;
        let hi = b.to_f64().map_err(serde::de::Error::custom)?;
        Interval::new(lo, hi).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn rejects_bad_endpoints() {
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
        assert!(Interval::new(f64::INFINITY, f64::INFINITY).is_err());
        assert!(Interval::new(f64::NEG_INFINITY, f64::INFINITY).is_ok());
    }

    #[test]
    fn sum_of_exact_endpoints_is_exact() {
        let s = iv(1.0, 2.0) + iv(3.0, 4.0);
        assert_eq!(s, iv(4.0, 6.0));
    }

    #[test]
    fn square_of_symmetric_interval() {
        assert_eq!(iv(-1.0, 1.0).pow_int(2), iv(0.0, 1.0));
        assert_eq!(iv(-3.0, -2.0).pow_int(2), iv(4.0, 9.0));
        assert_eq!(iv(-2.0, 1.0).pow_int(3), iv(-8.0, 1.0));
    }

    #[test]
    fn one_third_has_positive_width() {
        let t = Interval::ONE.div(&Interval::point(3.0)).unwrap();
        assert!(t.width() > 0.0);
        assert!((t * 3.0).contains(1.0));
        assert!(t.hi() > t.lo() && t.hi() == t.lo().next_up());
    }

    #[test]
    fn division_by_zero_interval() {
        let e = Interval::ONE.div(&iv(-1.0, 1.0)).unwrap_err();
        assert!(matches!(e, Error::DivisionByZeroInterval { .. }));
        assert!(arith(Interval::ONE, iv(0.0, 1.0), Op::Div).is_err());
    }

    #[test]
    fn multiplication_signs() {
        assert_eq!(iv(-2.0, 3.0) * iv(-1.0, 4.0), iv(-8.0, 12.0));
        assert_eq!(iv(0.0, 0.0) * Interval::ENTIRE, Interval::ZERO);
    }

    #[test]
    fn negative_power_is_reciprocal() {
        let r = iv(2.0, 4.0).pow_int(-2);
        assert!(r.contains(0.25) && r.contains(1.0 / 16.0));
    }

    #[test]
    fn pi_enclosure() {
        assert!(PI_IV.lo() < PI_IV.hi());
        assert_eq!(PI_IV.lo(), std::f64::consts::PI);
    }

    #[test]
    fn serde_round_trip_with_infinities() {
        for x in [iv(0.1, 0.30000000000000004), iv(f64::NEG_INFINITY, 2.0), Interval::ENTIRE] {
            let s = serde_json::to_string(&x).unwrap();
            let y: Interval = serde_json::from_str(&s).unwrap();
            assert_eq!(x, y);
        }
        assert_eq!(serde_json::to_string(&iv(1.0, f64::INFINITY)).unwrap(), "[1.0,\"inf\"]");
        assert!(serde_json::from_str::<Interval>("[2.0, 1.0]").is_err());
    }

    #[test]
    fn digits_display_is_outward() {
        let t = Interval::ONE.div(&Interval::point(3.0)).unwrap();
        assert_eq!(t.to_string_digits(4), "[0.3333, 0.3334]");
        assert_eq!(iv(1.0, 2.0).to_string_digits(3), "[1.00, 2.00]");
    }
}
