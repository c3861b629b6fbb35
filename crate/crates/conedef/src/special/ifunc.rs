//! The upward cone-deformation threshold
//! `I(z) = (2 pi)^2 / (c (1 - z)) exp(int_z^1 p(w) dw)` with
//! `p(w) = (1 + 4w + 6w^2 + w^4) / ((1 + w)(1 + w^2)^2)`.
//!
//! `p` has antiderivative `ln(1 + w) - 2/(1 + w^2)`, which collapses `I` to
//! `8 pi^2 exp(2/(1 + z^2) - 1) / (c (1 - z^2))`. In `u = z^2` its log
//! derivative has the sign of `u^2 + 4u - 1`, so `I` decreases up to
//! `z = sqrt(sqrt 5 - 2)` and increases after.

use super::{div, four_pi_sq, haze_peak, Dir};
use crate::constants::H_SCALE;
use crate::error::{Error, Result};
use crate::interval::Interval;

/// Largest accepted upper end of `z`.
pub const I_Z_MAX: f64 = 1.0 - 1e-12;

/// `int_z^1 p(w) dw = ln 2 - 1 - ln(1 + z) + 2/(1 + z^2)`, decreasing in `z`.
pub fn i_integral(z: Interval) -> Result<Interval> {
    check(z)?;
    super::monotone(z, Dir::Down, |t| {
        let ln2 = Interval::point(2.0).ln()?;
        Ok(ln2 - 1.0 - (Interval::ONE + t).ln()? + div("I", Interval::point(2.0), Interval::ONE + t.sqr())?)
    })
}

fn check(z: Interval) -> Result<()> {
    if !(z.lo() > 0.0) || z.hi() > I_Z_MAX {
        return Err(Error::domain("I", z.lo(), z.hi(), "needs 0 < z <= 1 - 1e-12"));
    }
    Ok(())
}

fn i_point(t: Interval) -> Result<Interval> {
    let u = t.sqr();
    let e = div("I", Interval::point(2.0), Interval::ONE + u)? - 1.0;
    div("I", four_pi_sq() * 2.0 * e.exp(), H_SCALE * (Interval::ONE - u))
}

/// `I(z)` for `0 < z <= 1 - 1e-12`.
pub fn i_func(z: Interval) -> Result<Interval> {
    check(z)?;
    let zc = haze_peak();
    if z.hi() <= zc.lo() {
        super::monotone(z, Dir::Down, i_point)
    } else if z.lo() >= zc.hi() {
        super::monotone(z, Dir::Up, i_point)
    } else {
        let a = i_point(Interval::point(z.lo()))?;
        let b = i_point(Interval::point(z.hi()))?;
        let m = i_point(zc)?;
        Interval::new(m.lo(), a.hi().max(b.hi()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64) -> Interval {
        Interval::point(x)
    }

    #[test]
    fn minimum_value() {
        let v = i_func(haze_peak()).unwrap();
        assert!(v.lo() > 56.469 && v.hi() < 56.470, "{v}");
    }

    #[test]
    fn at_inverse_sqrt3() {
        let z = pt(3.0).sqrt().unwrap().recip().unwrap();
        assert!(i_func(z).unwrap().lo() > 57.504);
    }

    #[test]
    fn at_0_9006() {
        let v = i_func(pt(0.9006)).unwrap();
        assert!((v.mid() - 136.7).abs() < 0.1, "{v}");
    }

    #[test]
    fn domain() {
        assert!(i_func(pt(0.0)).is_err());
        assert!(i_func(pt(1.0)).is_err());
        assert!(i_func(pt(1.0 - 1e-13)).is_err());
        assert!(i_func(pt(0.999)).is_ok());
    }

    #[test]
    fn straddle_contains_minimum() {
        let v = i_func(Interval::new(0.3, 0.7).unwrap()).unwrap();
        assert!(v.contains_interval(&i_func(haze_peak()).unwrap()) || v.lo() <= 56.4695);
    }
}
