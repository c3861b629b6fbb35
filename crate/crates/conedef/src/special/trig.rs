//! Conversions between a radius `r` and `z = tanh r`, and the growth and
//! difference inequalities for `sinh` and `cosh`.

use serde::{Deserialize, Serialize};

use super::{div, require_pos};
use crate::error::{Error, Result};
use crate::interval::Interval;

fn check_z(func: &'static str, z: Interval) -> Result<()> {
    if z.lo() < 0.0 || !(z.hi() < 1.0) {
        return Err(Error::domain(func, z.lo(), z.hi(), "needs 0 <= z < 1"));
    }
    Ok(())
}

/// `z = tanh r`.
pub fn tanh_from_r(r: Interval) -> Interval {
    r.tanh()
}

/// `r = arctanh z` for `0 <= z < 1`.
pub fn r_from_tanh(z: Interval) -> Result<Interval> {
    check_z("r_from_tanh", z)?;
    z.atanh()
}

/// `sinh r = z / sqrt(1 - z^2)`, increasing in `z`.
pub fn sinh_from_tanh(z: Interval) -> Result<Interval> {
    check_z("sinh_from_tanh", z)?;
    super::monotone(z, super::Dir::Up, |t| div("sinh_from_tanh", t, (Interval::ONE - t.sqr()).sqrt()?))
}

/// `cosh r = 1 / sqrt(1 - z^2)`, increasing in `z`.
pub fn cosh_from_tanh(z: Interval) -> Result<Interval> {
    check_z("cosh_from_tanh", z)?;
    super::monotone(z, super::Dir::Up, |t| div("cosh_from_tanh", Interval::ONE, (Interval::ONE - t.sqr()).sqrt()?))
}

/// The three quantities in `cosh s / cosh r < e^(s-r) < sinh s / sinh r`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthRatios {
    pub cosh_ratio: Interval,
    pub exp_gap: Interval,
    pub sinh_ratio: Interval,
}

/// Growth ratios for `0 < r < s`.
pub fn growth_ratios(r: Interval, s: Interval) -> Result<GrowthRatios> {
    require_pos("growth_ratios", r)?;
    if !r.certainly_lt(&s) {
        return Err(Error::domain("growth_ratios", s.lo(), s.hi(), "needs r < s"));
    }
    Ok(GrowthRatios {
        cosh_ratio: div("growth_ratios", s.cosh(), r.cosh())?,
        exp_gap: (s - r).exp(),
        sinh_ratio: div("growth_ratios", s.sinh(), r.sinh())?,
    })
}

/// `cosh s - sinh s / z`, the factor in `sinh(r - s) >= sinh r (cosh s - sinh s / z)`
/// with `z = tanh r`. Nonnegative exactly when `z >= tanh s`.
pub fn sinh_diff(s: Interval, z: Interval) -> Result<Interval> {
    require_pos("sinh_diff", z)?;
    Ok(s.cosh() - div("sinh_diff", s.sinh(), z)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64) -> Interval {
        Interval::point(x)
    }

    #[test]
    fn round_trip() {
        let r = r_from_tanh(tanh_from_r(pt(0.7))).unwrap();
        assert!(r.contains(0.7) && r.width() < 1e-12);
    }

    #[test]
    fn hyperbolic_from_tanh() {
        let z = tanh_from_r(pt(0.9));
        assert!(sinh_from_tanh(z).unwrap().overlaps(&pt(0.9).sinh()));
        assert!(cosh_from_tanh(z).unwrap().overlaps(&pt(0.9).cosh()));
        assert!(r_from_tanh(pt(1.0)).is_err());
    }

    #[test]
    fn growth_separation() {
        let g = growth_ratios(pt(0.5), pt(1.0)).unwrap();
        assert!(g.cosh_ratio.certainly_lt(&g.exp_gap));
        assert!(g.exp_gap.certainly_lt(&g.sinh_ratio));
        assert!(growth_ratios(pt(1.0), pt(0.5)).is_err());
    }

    #[test]
    fn sinh_diff_sign_boundary() {
        let s = pt(0.8);
        let z = s.tanh().mid();
        assert!(sinh_diff(s, pt(z + 0.01)).unwrap().lo() > 0.0);
        assert!(sinh_diff(s, pt(z - 0.01)).unwrap().hi() < 0.0);
        assert!(sinh_diff(s, s.tanh()).unwrap().contains(0.0));
    }
}
