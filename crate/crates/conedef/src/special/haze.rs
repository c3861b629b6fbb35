//! The tube-profile function `h(r) = c tanh r / cosh 2r`, written in `z = tanh r`
//! as `haze(z) = c z (1 - z^2) / (1 + z^2)`, and its inverses on the decreasing branch.

use super::{require_pos, Dir};
use crate::constants::H_SCALE;
use crate::error::{Error, Result};
use crate::interval::{bracket_root_with_guess, Interval};

/// Target width of the bracketing used by [`haze_inv`].
const INV_TOL: f64 = 1e-15;

/// `haze` at a point enclosure, without monotonicity reasoning.
fn haze_naive(z: Interval) -> Interval {
    let z2 = z.sqr();
    let num = H_SCALE * z * (Interval::ONE - z2);
    num.div(&(Interval::ONE + z2)).expect("1 + z^2 > 0")
}

/// Enclosure of the critical point `sqrt(sqrt 5 - 2)` where `haze` peaks.
pub fn haze_peak() -> Interval {
    let s5 = Interval::point(5.0).sqrt().expect("positive");
    (s5 - 2.0).sqrt().expect("sqrt 5 > 2")
}

/// Enclosure of the maximum of `haze`, attained at [`haze_peak`].
pub fn haze_max() -> Interval {
    haze_naive(haze_peak())
}

/// `haze(z)` for `z` inside `[0, 1]`.
pub fn haze(z: Interval) -> Result<Interval> {
    if z.lo() < 0.0 || z.hi() > 1.0 {
        return Err(Error::domain("haze", z.lo(), z.hi(), "needs 0 <= z <= 1"));
    }
    let zc = haze_peak();
    if z.hi() <= zc.lo() {
        super::monotone(z, Dir::Up, |t| Ok(haze_naive(t)))
    } else if z.lo() >= zc.hi() {
        super::monotone(z, Dir::Down, |t| Ok(haze_naive(t)))
    } else {
        let a = haze_naive(Interval::point(z.lo()));
        let b = haze_naive(Interval::point(z.hi()));
        Interval::new(a.lo().min(b.lo()), haze_max().hi())
    }
}

/// `h(r) = haze(tanh r)` for `r >= 0`.
pub fn h(r: Interval) -> Result<Interval> {
    if r.lo() < 0.0 {
        return Err(Error::domain("h", r.lo(), r.hi(), "needs r >= 0"));
    }
    haze(r.tanh())
}

/// Point inverse of `haze` on the decreasing branch by the trigonometric
/// cubic formula. Not rigorous; used as a starting guess and cross-check.
pub fn haze_inv_closed_form(y: f64) -> f64 {
    let x = y / 3.3957;
    let x2 = x * x;
    let disc = (-3.0 * x2 * x2 - 33.0 * x2 + 3.0).max(0.0);
    let ang = (-3.0 * disc.sqrt() / (x2 * x + 18.0 * x)).atan();
    2.0 * (x2 + 3.0).sqrt() / 3.0 * (std::f64::consts::FRAC_PI_3 + ang / 3.0).cos() - x / 3.0
}

/// Root of `haze(z) = t` on the decreasing branch, for `0 < t <= haze_max`.
fn branch_root(t: f64, zc: Interval) -> Result<Interval> {
    let top = haze_naive(Interval::point(zc.hi()));
    let dom = Interval::new(zc.hi(), 1.0)?;
    let guess = Some(haze_inv_closed_form(t));
    match bracket_root_with_guess(|z| Ok(haze_naive(z)), dom, t, INV_TOL, guess) {
        Ok(r) => {
            // The bracket's left end is certified only when the root is right of zc.hi.
            let lo = if top.lo() > t { r.lo() } else { zc.lo() };
            Interval::new(lo, r.hi())
        }
        Err(Error::NoStraddle { .. }) => Ok(zc),
        Err(e) => Err(e),
    }
}

/// Inverse of `haze` on the decreasing branch `[sqrt(sqrt 5 - 2), 1)`.
///
/// Needs `0 <= y <= haze_max` with `y.hi > 0`; `y.lo = 0` gives upper end 1.
pub fn haze_inv(y: Interval) -> Result<Interval> {
    let hmax = haze_max();
    if !(y.hi() > 0.0) || y.lo() < 0.0 {
        return Err(Error::domain("haze_inv", y.lo(), y.hi(), "needs 0 < y"));
    }
    if y.hi() > hmax.hi() {
        return Err(Error::domain(
            "haze_inv",
            y.lo(),
            y.hi(),
            format!("needs y <= haze max {}", hmax.hi()),
        ));
    }
    let zc = haze_peak();
    let lo = branch_root(y.hi(), zc)?.lo();
    let hi = if y.lo() == 0.0 {
        1.0
    } else {
        branch_root(y.lo(), zc)?.hi()
    };
    Interval::new(lo.max(zc.lo()), hi.min(1.0))
}

/// Inverse of `h` on `[arctanh sqrt(sqrt 5 - 2), inf)`.
pub fn h_inv(y: Interval) -> Result<Interval> {
    require_pos("h_inv", Interval::point(y.hi()))?;
    let z = haze_inv(y)?;
    let lo = Interval::point(z.lo()).atanh()?.lo();
    let hi = if z.hi() >= 1.0 {
        f64::INFINITY
    } else {
        Interval::point(z.hi()).atanh()?.hi()
    };
    Interval::new(lo, hi)
}
