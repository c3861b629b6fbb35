//! The mean-value multiplier `3 sqrt(2 pi (sinh 2r - 2r)) / (4 pi f(r))` with
//! `f(r) = cosh r sin(sqrt 2 r) - sqrt 2 sinh r cos(sqrt 2 r)`.
//!
//! Both `f` and `sinh 2r - 2r` vanish to third order at `r = 0`, so near zero
//! they are evaluated divided by `r^3` from truncated Taylor series with
//! explicit remainder bounds.

use super::{div, require_pos, sqrt2, sqrt3};
use crate::error::{Error, Result};
use crate::interval::{Interval, PI_IV};

/// Last Taylor order kept; odd.
const SERIES_ORDER: usize = 25;

/// Radii up to this use the series forms.
const SERIES_MAX_R: f64 = 1.0;

/// `(Q_k - P_k)` for odd `k <= SERIES_ORDER`, where `(1 + i sqrt 2)^k = P_k + Q_k sqrt 2 i`.
fn f_integer_coeffs() -> Vec<(usize, i64)> {
    let (mut p, mut q) = (1i64, 0i64);
    let mut out = Vec::new();
    for k in 1..=SERIES_ORDER {
        (p, q) = (p - 2 * q, p + q);
        if k % 2 == 1 && k >= 3 {
            out.push((k, q - p));
        }
    }
    out
}

fn factorial(k: usize) -> Interval {
    (1..=k).fold(Interval::ONE, |acc, i| acc * i as f64)
}

fn check_series(func: &'static str, r: Interval) -> Result<()> {
    if r.lo() < 0.0 || r.hi() > SERIES_MAX_R {
        return Err(Error::domain(func, r.lo(), r.hi(), "series needs 0 <= r <= 1"));
    }
    Ok(())
}

/// `f(r) / r^3` for `0 <= r <= 1`, equal to `sqrt 2` at `r = 0`.
pub fn f_over_r3(r: Interval) -> Result<Interval> {
    check_series("f_over_r3", r)?;
    let mut sum = Interval::ZERO;
    for (k, c) in f_integer_coeffs() {
        let term = div("f_over_r3", Interval::point(c as f64), factorial(k))? * r.pow_int(k as i32 - 3);
        sum = sum + term;
    }
    let n = SERIES_ORDER as i32;
    let x = sqrt3() * r;
    let ratio = Interval::ONE - div("f_over_r3", x, Interval::point((n + 2) as f64))?;
    let bound = (Interval::ONE + sqrt2()) * sqrt3().pow_int(3) * x.pow_int(n - 2);
    let tail = div("f_over_r3", bound, factorial(SERIES_ORDER + 1) * ratio)?;
    let t = tail.hi();
    Ok(sqrt2() * sum + Interval::new(-t, t)?)
}

/// `(sinh 2r - 2r) / r^3` for `0 <= r <= 1`, equal to `4/3` at `r = 0`.
pub fn sinh_excess_over_r3(r: Interval) -> Result<Interval> {
    check_series("sinh_excess_over_r3", r)?;
    let mut sum = Interval::ZERO;
    for k in (3..=SERIES_ORDER).step_by(2) {
        let c = div("sinh_excess_over_r3", Interval::point(2.0).pow_int(k as i32), factorial(k))?;
        sum = sum + c * r.pow_int(k as i32 - 3);
    }
    let n = SERIES_ORDER as i32;
    let ratio = Interval::ONE - div("sinh_excess_over_r3", r * 2.0, Interval::point((n + 2) as f64))?;
    let bound = Interval::point(2.0).pow_int(n + 1) * r.pow_int(n - 2);
    let tail = div("sinh_excess_over_r3", bound, factorial(SERIES_ORDER + 1) * ratio)?;
    Ok(sum + Interval::new(0.0, tail.hi())?)
}

/// `f(r) = cosh r sin(sqrt 2 r) - sqrt 2 sinh r cos(sqrt 2 r)`, direct form.
pub fn f_mean_value(r: Interval) -> Result<Interval> {
    let s = sqrt2() * r;
    Ok(r.cosh() * s.sin()? - sqrt2() * r.sinh() * s.cos()?)
}

/// `Phi(r) / r^6 = 2 C^2 (f/r^3)^2 - 3 (sinh 2r - 2r)/r^3`.
pub fn phi_over_r6(r: Interval, c: Interval) -> Result<Interval> {
    let b = f_over_r3(r)?;
    let a = sinh_excess_over_r3(r)?;
    Ok(c.sqr() * b.sqr() * 2.0 - a * 3.0)
}

/// `Phi(r) = 2 f(r)^2 C^2 - 3 r^3 (sinh 2r - 2r)`, direct form.
pub fn puiseux_phi(r: Interval, c: Interval) -> Result<Interval> {
    let excess = (r * 2.0).sinh() - r * 2.0;
    Ok(f_mean_value(r)?.sqr() * c.sqr() * 2.0 - r.pow_int(3) * excess * 3.0)
}

/// The multiplier `3 sqrt(2 pi (sinh 2r - 2r)) / (4 pi f(r))` for `0 < r < pi/sqrt 2`.
pub fn mean_value_multiplier(r: Interval) -> Result<Interval> {
    require_pos("mean_value_multiplier", r)?;
    let rmax = div("mean_value_multiplier", PI_IV, sqrt2())?;
    if !r.certainly_lt(&rmax) {
        return Err(Error::domain("mean_value_multiplier", r.lo(), r.hi(), "needs r < pi/sqrt 2"));
    }
    let two_pi = PI_IV * 2.0;
    let four_pi = PI_IV * 4.0;
    if r.hi() <= SERIES_MAX_R {
        let a = sinh_excess_over_r3(r)?;
        let b = f_over_r3(r)?;
        let num = (two_pi * a).sqrt()? * 3.0;
        div("mean_value_multiplier", num, four_pi * b * r.powf(1.5)?)
    } else {
        let excess = (r * 2.0).sinh() - r * 2.0;
        let num = (two_pi * excess).sqrt()? * 3.0;
        div("mean_value_multiplier", num, four_pi * f_mean_value(r)?)
    }
}
