//! Gate inputs: an interval enclosure that remembers its exact decimal value
//! when it has one, so boundary cases of linear hypotheses decide exactly.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::constants::NamedConstant;
use crate::error::{Error, Result};
use crate::interval::{Dec, Interval};

/// An enclosure with an optional exact decimal value.
///
/// Invariant: when `exact` is set, `iv` is its tightest outward enclosure.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Real {
    iv: Interval,
    exact: Option<Dec>,
}

impl Real {
    /// Parses a decimal literal such as `0.0735` or `2.73e-8`.
    pub fn parse(text: &str) -> Result<Real> {
        let d = Dec::parse(text.trim()).ok_or_else(|| Error::Parse {
            what: "decimal",
            text: text.to_string(),
        })?;
        Ok(Real::exact(d))
    }

    pub fn exact(d: Dec) -> Real {
        Real { iv: d.to_interval(), exact: Some(d) }
    }

    pub fn interval(iv: Interval) -> Real {
        Real { iv, exact: None }
    }

    pub fn constant(c: &NamedConstant) -> Real {
        Real::exact(c.dec())
    }

    pub fn int(n: i64) -> Real {
        Real::exact(Dec::from_i64(n))
    }

    pub fn iv(&self) -> Interval {
        self.iv
    }

    pub fn dec(&self) -> Option<Dec> {
        self.exact
    }

    fn combine(
        self,
        o: Real,
        exact: impl Fn(Dec, Dec) -> Option<Dec>,
        iv: impl Fn(Interval, Interval) -> Interval,
    ) -> Real {
        match (self.exact, o.exact) {
            (Some(a), Some(b)) => match exact(a, b) {
                Some(d) => Real::exact(d),
                None => Real::interval(iv(self.iv, o.iv)),
            },
            _ => Real::interval(iv(self.iv, o.iv)),
        }
    }

    pub fn add(self, o: Real) -> Real {
        self.combine(o, Dec::checked_add, |a, b| a + b)
    }

    pub fn sub(self, o: Real) -> Real {
        self.combine(o, Dec::checked_sub, |a, b| a - b)
    }

    pub fn mul(self, o: Real) -> Real {
        self.combine(o, Dec::checked_mul, |a, b| a * b)
    }

    pub fn sqr(self) -> Real {
        self.mul(self)
    }

    /// Exact comparison when both values are exact, otherwise by enclosure.
    pub fn cmp_le(&self, o: &Real) -> Verdict {
        if let (Some(a), Some(b)) = (self.exact, o.exact) {
            if let Some(ord) = a.checked_cmp(&b) {
                return Verdict::from_bool(ord != Ordering::Greater);
            }
        }
        Verdict::le(self.iv, o.iv)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some(d) => write!(f, "{d}"),
            None => write!(f, "{}", self.iv),
        }
    }
}

impl From<Interval> for Real {
    fn from(iv: Interval) -> Real {
        Real::interval(iv)
    }
}

impl std::str::FromStr for Real {
    type Err = Error;
    fn from_str(s: &str) -> Result<Real> {
        Real::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RealRepr {
    Text(String),
    Num(serde_json::Number),
    Iv(Interval),
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.exact {
            Some(d) => RealRepr::Text(d.to_string()).serialize(s),
            None => RealRepr::Iv(self.iv).serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Real, D::Error> {
        match RealRepr::deserialize(d)? {
            RealRepr::Text(t) => Real::parse(&t).map_err(serde::de::Error::custom),
            RealRepr::Num(n) => Real::parse(&n.to_string()).map_err(serde::de::Error::custom),
            RealRepr::Iv(iv) => Ok(Real::interval(iv)),
        }
    }
}

/// Outcome of one hypothesis inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    /// `a <= b` decided by enclosures.
    pub fn le(a: Interval, b: Interval) -> Verdict {
        if a.hi() <= b.lo() {
            Verdict::Holds
        } else if a.lo() > b.hi() {
            Verdict::Fails
        } else {
            Verdict::Unknown
        }
    }

    /// `a < b` decided by enclosures.
    pub fn lt(a: Interval, b: Interval) -> Verdict {
        if a.hi() < b.lo() {
            Verdict::Holds
        } else if a.lo() >= b.hi() {
            Verdict::Fails
        } else {
            Verdict::Unknown
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_boundary_decides() {
        let a = Real::parse("0.0996").unwrap();
        let b = Real::parse("0.352").unwrap().mul(Real::parse("0.05").unwrap());
        let m = Real::parse("0.0996").unwrap().sub(b);
        assert_eq!(m.cmp_le(&Real::parse("0.0820").unwrap()), Verdict::Holds);
        assert_eq!(a.cmp_le(&a), Verdict::Holds);
        assert_eq!(Real::interval(a.iv()).cmp_le(&a), Verdict::Unknown);
    }

    #[test]
    fn serde_round_trip() {
        for r in [Real::parse("2.73e-8").unwrap(), Real::interval(Interval::new(0.1, 0.2).unwrap())] {
            let s = serde_json::to_string(&r).unwrap();
            assert_eq!(serde_json::from_str::<Real>(&s).unwrap(), r);
        }
    }

    #[test]
    fn accepts_json_numbers() {
        let r: Real = serde_json::from_str("0.0735").unwrap();
        assert_eq!(r, Real::parse("0.0735").unwrap());
    }

    #[test]
    fn rejects_garbage() {
        assert!(Real::parse("abc").is_err());
    }
}
