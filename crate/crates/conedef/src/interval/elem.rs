//! Elementary functions on intervals.
//!
//! Monotone functions are evaluated at the endpoints and widened by
//! [`LIBM_ULPS`] ulps in each direction; sin and cos additionally detect
//! interior extrema. A few exact values (exp 0, ln 1, odd functions at 0)
//! are returned unwidened.

use super::round::{sqrt_dn, sqrt_up};
use super::{Interval, PI_IV};
use crate::error::{Error, Result};

/// Outward widening, in ulps, applied to each libm result.
///
/// The libm calls used here are documented to err by at most 2 ulps; one
/// extra ulp absorbs the change of ulp size across a binade boundary.
pub const LIBM_ULPS: u32 = 3;

/// Largest argument magnitude accepted by sin and cos.
pub const TRIG_ARG_MAX: f64 = 1024.0;

fn dn(x: f64) -> f64 {
    let mut v = x;
    for _ in 0..LIBM_ULPS {
        v = v.next_down();
    }
    v
}

fn up(x: f64) -> f64 {
    let mut v = x;
    for _ in 0..LIBM_ULPS {
        v = v.next_up();
    }
    v
}

/// Enclosure of an increasing function from its rounded endpoint values.
fn increasing(x: &Interval, f: fn(f64) -> f64, exact: impl Fn(f64) -> Option<f64>) -> Interval {
    let lo = exact(x.lo).unwrap_or_else(|| dn(f(x.lo)));
    let hi = exact(x.hi).unwrap_or_else(|| up(f(x.hi)));
    Interval::raw(lo, hi.max(lo))
}

fn zero_at_zero(x: f64) -> Option<f64> {
    (x == 0.0).then_some(0.0)
}

// The std inverse hyperbolic functions are not libm calls and carry no ulp
// bound, so they are rebuilt from `ln_1p`, `ln` and `sqrt` on intervals.

/// Above this, `t^2` may overflow and the `ln 2t` asymptotics are used.
const HUGE: f64 = 1e150;

/// Bounds `1/(2t^2)` for `t > HUGE`.
const HUGE_TAIL: f64 = 1e-300;

/// Enclosure of an odd function at `t` from its restriction to `t >= 0`.
fn odd(f: fn(f64) -> Interval, t: f64) -> Interval {
    if t < 0.0 {
        -f(-t)
    } else {
        f(t)
    }
}

fn ln_2t(t: f64) -> Interval {
    let x = Interval::point(t).ln().expect("t > 0");
    x + Interval::point(2.0).ln().expect("2 > 0")
}

/// `asinh t = ln_1p(t + t^2 / (1 + sqrt(1 + t^2)))`; for huge `t` it lies in
/// `[ln 2t, ln 2t + 1/(4t^2)]`.
fn asinh_nonneg(t: f64) -> Interval {
    if t == 0.0 {
        return Interval::ZERO;
    }
    if t > HUGE {
        return ln_2t(t) + Interval::raw(0.0, HUGE_TAIL);
    }
    let x = Interval::point(t);
    let x2 = x.sqr();
    let s = (x2 + 1.0).sqrt().expect("positive") + 1.0;
    (x + x2.div(&s).expect("s >= 2")).ln_1p().expect("argument >= 0")
}

/// `acosh t = ln_1p(d + sqrt(d (t + 1)))` with `d = t - 1`; for huge `t` it
/// lies in `[ln 2t - 1/(2t^2), ln 2t]`.
fn acosh_point(t: f64) -> Interval {
    if t == 1.0 {
        return Interval::ZERO;
    }
    if t > HUGE {
        return ln_2t(t) + Interval::raw(-HUGE_TAIL, 0.0);
    }
    let x = Interval::point(t);
    let d = (x - 1.0).clamp_to(0.0, f64::INFINITY);
    (d + (d * (x + 1.0)).sqrt().expect("d >= 0")).ln_1p().expect("argument >= 0")
}

/// `atanh t = ln_1p(2t / (1 - t)) / 2` for `0 <= t < 1`.
fn atanh_nonneg(t: f64) -> Interval {
    if t == 0.0 {
        return Interval::ZERO;
    }
    let x = Interval::point(t);
    let q = (x * 2.0).div(&(1.0 - x)).expect("t < 1");
    q.ln_1p().expect("argument > 0") * 0.5
}

/// Names accepted by [`elem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elem {
    Exp,
    Log,
    Sqrt,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Tanh,
    Asinh,
    Acosh,
    Atanh,
    Acos,
    Atan,
}

/// Applies the named elementary function.
pub fn elem(x: Interval, f: Elem) -> Result<Interval> {
    match f {
        Elem::Exp => Ok(x.exp()),
        Elem::Log => x.ln(),
        Elem::Sqrt => x.sqrt(),
        Elem::Sin => x.sin(),
        Elem::Cos => x.cos(),
        Elem::Sinh => Ok(x.sinh()),
        Elem::Cosh => Ok(x.cosh()),
        Elem::Tanh => Ok(x.tanh()),
        Elem::Asinh => Ok(x.asinh()),
        Elem::Acosh => x.acosh(),
        Elem::Atanh => x.atanh(),
        Elem::Acos => x.acos(),
        Elem::Atan => Ok(x.atan()),
    }
}

impl Interval {
    pub fn exp(&self) -> Interval {
        increasing(self, f64::exp, |t| (t == 0.0).then_some(1.0)).clamp_to(0.0, f64::INFINITY)
    }

    /// `exp(x) - 1` without cancellation near zero.
    pub fn expm1(&self) -> Interval {
        increasing(self, f64::exp_m1, zero_at_zero).clamp_to(-1.0, f64::INFINITY)
    }

    /// Natural logarithm; needs `lo > 0`.
    pub fn ln(&self) -> Result<Interval> {
        if self.lo <= 0.0 {
            return Err(Error::domain("log", self.lo, self.hi, "needs lo > 0"));
        }
        Ok(increasing(self, f64::ln, |t| (t == 1.0).then_some(0.0)))
    }

    /// `ln(1 + x)`; needs `lo > -1`.
    pub fn ln_1p(&self) -> Result<Interval> {
        if self.lo <= -1.0 {
            return Err(Error::domain("ln_1p", self.lo, self.hi, "needs lo > -1"));
        }
        Ok(increasing(self, f64::ln_1p, zero_at_zero))
    }

    /// Square root; needs `lo >= 0`.
    pub fn sqrt(&self) -> Result<Interval> {
        if self.lo < 0.0 {
            return Err(Error::domain("sqrt", self.lo, self.hi, "needs lo >= 0"));
        }
        Ok(Interval::raw(sqrt_dn(self.lo), sqrt_up(self.hi)))
    }

    pub fn sinh(&self) -> Interval {
        increasing(self, f64::sinh, zero_at_zero)
    }

    pub fn cosh(&self) -> Interval {
        let a = self.abs();
        increasing(&a, f64::cosh, |t| (t == 0.0).then_some(1.0)).clamp_to(1.0, f64::INFINITY)
    }

    pub fn tanh(&self) -> Interval {
        increasing(self, f64::tanh, zero_at_zero).clamp_to(-1.0, 1.0)
    }

    pub fn asinh(&self) -> Interval {
        Interval::raw(odd(asinh_nonneg, self.lo).lo, odd(asinh_nonneg, self.hi).hi)
    }

    /// Inverse hyperbolic cosine; needs `lo >= 1`.
    pub fn acosh(&self) -> Result<Interval> {
        if self.lo < 1.0 {
            return Err(Error::domain("acosh", self.lo, self.hi, "needs lo >= 1"));
        }
        Ok(Interval::raw(acosh_point(self.lo).lo, acosh_point(self.hi).hi).clamp_to(0.0, f64::INFINITY))
    }

    /// Inverse hyperbolic tangent; needs the interval inside `(-1, 1)`.
    pub fn atanh(&self) -> Result<Interval> {
        if self.lo <= -1.0 || self.hi >= 1.0 {
            return Err(Error::domain("atanh", self.lo, self.hi, "needs -1 < x < 1"));
        }
        Ok(Interval::raw(odd(atanh_nonneg, self.lo).lo, odd(atanh_nonneg, self.hi).hi))
    }

    pub fn atan(&self) -> Interval {
        let half_pi = PI_IV.hi() * 0.5;
        increasing(self, f64::atan, zero_at_zero).clamp_to(-half_pi, half_pi)
    }

    /// Inverse cosine; needs the interval inside `[-1, 1]`.
    pub fn acos(&self) -> Result<Interval> {
        if self.lo < -1.0 || self.hi > 1.0 {
            return Err(Error::domain("acos", self.lo, self.hi, "needs -1 <= x <= 1"));
        }
        let lo = if self.hi == 1.0 { 0.0 } else { dn(self.hi.acos()) };
        let hi = up(self.lo.acos());
        Ok(Interval::raw(lo, hi).clamp_to(0.0, PI_IV.hi()))
    }

    fn check_trig(&self, func: &'static str) -> Result<()> {
        if self.mag() > TRIG_ARG_MAX {
            return Err(Error::domain(func, self.lo, self.hi, "needs |x| <= 1024"));
        }
        Ok(())
    }

    /// Cosine for `|x| <= 1024`.
    pub fn cos(&self) -> Result<Interval> {
        self.check_trig("cos")?;
        if self.width() >= 2.0 * PI_IV.lo() {
            return Ok(Interval::raw(-1.0, 1.0));
        }
        let (a, b) = (self.lo.cos(), self.hi.cos());
        let mut lo = dn(a.min(b));
        let mut hi = up(a.max(b));
        if self.lo == 0.0 && self.hi == 0.0 {
            return Ok(Interval::ONE);
        }
        // Extrema sit at k*pi: maxima for even k, minima for odd k.
        let k0 = (self.lo / PI_IV.hi()).floor() as i64 - 1;
        let k1 = (self.hi / PI_IV.lo()).ceil() as i64 + 1;
        for k in k0..=k1 {
            let c = PI_IV * k as f64;
            if c.hi() >= self.lo && c.lo() <= self.hi {
                if k.rem_euclid(2) == 0 {
                    hi = 1.0;
                } else {
                    lo = -1.0;
                }
            }
        }
        Ok(Interval::raw(lo, hi).clamp_to(-1.0, 1.0))
    }

    /// Sine for `|x| <= 1024`.
    pub fn sin(&self) -> Result<Interval> {
        self.check_trig("sin")?;
        if self.lo == 0.0 && self.hi == 0.0 {
            return Ok(Interval::ZERO);
        }
        if self.width() >= 2.0 * PI_IV.lo() {
            return Ok(Interval::raw(-1.0, 1.0));
        }
        let (a, b) = (self.lo.sin(), self.hi.sin());
        let mut lo = dn(a.min(b));
        let mut hi = up(a.max(b));
        // Extrema sit at (k + 1/2)*pi: maxima for even k, minima for odd k.
        let k0 = (self.lo / PI_IV.hi()).floor() as i64 - 1;
        let k1 = (self.hi / PI_IV.lo()).ceil() as i64 + 1;
        for k in k0..=k1 {
            let c = PI_IV * (k as f64 + 0.5);
            if c.hi() >= self.lo && c.lo() <= self.hi {
                if k.rem_euclid(2) == 0 {
                    hi = 1.0;
                } else {
                    lo = -1.0;
                }
            }
        }
        Ok(Interval::raw(lo, hi).clamp_to(-1.0, 1.0))
    }

    /// `self^e` for `self >= 0` and `e > 0`, by corner evaluation.
    pub fn pow_nonneg(&self, e: &Interval) -> Result<Interval> {
        if self.lo < 0.0 {
            return Err(Error::domain("pow", self.lo, self.hi, "base needs lo >= 0"));
        }
        if e.lo <= 0.0 {
            return Err(Error::domain("pow", e.lo, e.hi, "exponent needs lo > 0"));
        }
        let corner = |x: f64, y: f64| -> (f64, f64) {
            if x == 0.0 {
                (0.0, 0.0)
            } else if x == 1.0 {
                (1.0, 1.0)
            } else {
                let v = x.powf(y);
                (dn(v).max(0.0), up(v))
            }
        };
        let cs = [
            corner(self.lo, e.lo),
            corner(self.lo, e.hi),
            corner(self.hi, e.lo),
            corner(self.hi, e.hi),
        ];
        let lo = cs.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
        let hi = cs.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
        Ok(Interval::raw(lo, hi))
    }

    /// `self^e` for a point exponent `e > 0`.
    pub fn powf(&self, e: f64) -> Result<Interval> {
        self.pow_nonneg(&Interval::point(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn exact_special_values() {
        assert_eq!(Interval::ZERO.exp(), Interval::ONE);
        assert_eq!(Interval::ONE.ln().unwrap(), Interval::ZERO);
        assert_eq!(Interval::ZERO.sinh(), Interval::ZERO);
        assert_eq!(Interval::ZERO.sin().unwrap(), Interval::ZERO);
        assert_eq!(Interval::ZERO.cosh(), Interval::ONE);
        assert_eq!(Interval::ZERO.cos().unwrap(), Interval::ONE);
    }

    #[test]
    fn domain_errors_name_the_function() {
        let cases: [(Elem, Interval, &str); 6] = [
            (Elem::Log, iv(0.0, 1.0), "log"),
            (Elem::Sqrt, iv(-1.0, 1.0), "sqrt"),
            (Elem::Acosh, iv(0.5, 2.0), "acosh"),
            (Elem::Atanh, iv(0.0, 1.0), "atanh"),
            (Elem::Acos, iv(0.0, 1.5), "acos"),
            (Elem::Sin, iv(0.0, 2000.0), "sin"),
        ];
        for (f, x, name) in cases {
            match elem(x, f) {
                Err(Error::Domain { func, .. }) => assert_eq!(func, name),
                other => panic!("{name}: {other:?}"),
            }
        }
    }

    #[test]
    fn cos_interior_extrema() {
        let c = iv(3.0, 3.3).cos().unwrap();
        assert_eq!(c.lo(), -1.0);
        let c = iv(-0.1, 0.2).cos().unwrap();
        assert_eq!(c.hi(), 1.0);
        assert!(c.lo() < 0.2f64.cos());
        assert_eq!(iv(0.0, 7.0).cos().unwrap(), iv(-1.0, 1.0));
    }

    #[test]
    fn sin_interior_extrema() {
        let s = iv(1.5, 1.7).sin().unwrap();
        assert_eq!(s.hi(), 1.0);
        let s = iv(4.6, 4.8).sin().unwrap();
        assert_eq!(s.lo(), -1.0);
        let s = iv(0.1, 0.2).sin().unwrap();
        assert!(s.hi() < 0.2 && s.lo() > 0.09);
    }

    #[test]
    fn cosh_of_zero_is_tight() {
        let c = Interval::ZERO.cosh();
        assert!(c.contains(1.0) && c.width() <= 2.0 * f64::EPSILON);
    }

    #[test]
    fn tanh_atanh_round_trip() {
        let x = Interval::point(0.5);
        assert!(x.atanh().unwrap().tanh().contains(0.5));
    }

    #[test]
    fn pow_corner_cases() {
        let p = iv(0.25, 4.0).pow_nonneg(&iv(0.5, 2.0)).unwrap();
        assert!(p.contains(1.0 / 16.0) && p.contains(16.0));
        let p = iv(0.0, 1.0).powf(2.5).unwrap();
        assert_eq!(p, iv(0.0, 1.0));
        assert!(iv(-1.0, 1.0).powf(2.0).is_err());
    }

    #[test]
    fn acos_range() {
        let a = iv(-1.0, 1.0).acos().unwrap();
        assert_eq!(a.lo(), 0.0);
        assert!(a.contains(std::f64::consts::PI));
    }

    #[test]
    fn inverse_hyperbolics_are_tight_and_safe() {
        // std atanh is off by more than 3 ulps here.
        let a = Interval::point(-0.9613243898727255).atanh().unwrap();
        assert!(a.contains(-1.9630830305331415) && a.width() < 1e-14);
        let big = Interval::point(1e200);
        let ln2x = 2f64.ln() + 200.0 * 10f64.ln();
        assert!((big.asinh().mid() - ln2x).abs() < 1e-12);
        assert!((big.acosh().unwrap().mid() - ln2x).abs() < 1e-12);
        assert!((-big).asinh().contains(-big.asinh().mid()));
        assert_eq!(Interval::ONE.acosh().unwrap(), Interval::ZERO);
        let t = Interval::point(0.5).tanh().atanh().unwrap();
        assert!(t.contains(0.5));
        assert!(Interval::point(1.0 - 1e-16).atanh().unwrap().hi().is_finite());
    }
}
