//! Bounds on maximal tubes: ellipse axes, area, injectivity radius, radii
//! of embedded tubes and distances between thin and thick parts.

use super::{div, monotone, require_le, require_pos, sqrt2, sqrt3, Dir};
use crate::constants::{
    DIST_COEFF, INJ_COEFF, INJ_LIN_OFFSET, INJ_LIN_SLOPE, THICK_LOG3_SHIFT, THICK_SMALL_EPS,
    THICK_SMALL_SHIFT,
};
use crate::error::{Error, Result};
use crate::interval::Interval;

/// Beyond this radius `S(r) - 1` is below `e^{-600}`.
const S_FAR: f64 = 300.0;

/// `x / arcsinh(x)` for `x > 0`.
fn x_over_asinh(x: Interval) -> Result<Interval> {
    div("S", x, x.asinh())
}

/// `S` on its constant branch, `(sqrt 2/4) / arcsinh(sqrt 2/4)`.
fn s_zero() -> Interval {
    x_over_asinh(sqrt2() * 0.25).expect("positive")
}

fn s_point(t: f64) -> Result<Interval> {
    if t > S_FAR {
        return Interval::new(1.0, 1f64.next_up());
    }
    let r = Interval::point(t);
    let split = sqrt2().recip()?;
    let sh = r.sinh();
    let tail = || -> Result<Interval> {
        let u = div("S", sh, (r * 2.0).cosh())?;
        x_over_asinh(u)
    };
    let v = if sh.hi() <= split.lo() {
        s_zero()
    } else if sh.lo() >= split.hi() {
        tail()?
    } else {
        s_zero().hull(&tail()?)
    };
    Ok(v.clamp_to(1.0, s_zero().hi()))
}

/// The sinh-ratio bound `S(r)`: constant `1.02013...` while `sinh r <= 1/sqrt 2`,
/// then `u / arcsinh u` with `u = sinh r / cosh 2r`. Nonincreasing in `r >= 0`.
pub fn s_func(r: Interval) -> Result<Interval> {
    if r.lo() < 0.0 {
        return Err(Error::domain("S", r.lo(), r.hi(), "needs r >= 0"));
    }
    monotone(r, Dir::Down, |t| s_point(t.lo()))
}

/// Semi-axes `(a, b)` of the ellipse cut on a tube of radius `Ri` by a tube of radius `Rj <= Ri`.
pub fn ellipse_axes(ri: Interval, rj: Interval) -> Result<(Interval, Interval)> {
    require_pos("ellipse_axes", rj)?;
    if ri.certainly_lt(&rj) {
        return Err(Error::Ordering {
            ri_lo: ri.lo(),
            ri_hi: ri.hi(),
            rj_lo: rj.lo(),
            rj_hi: rj.hi(),
        });
    }
    let sum = ri + rj;
    let a = div("ellipse_axes", ri.cosh() * rj.sinh(), s_func(rj)? * sum.cosh())?;
    let b = div("ellipse_axes", ri.sinh() * rj.sinh(), sum.sinh())?;
    Ok((a, b))
}

/// `sinh^2 t / cosh 2t = (1 - sech 2t) / 2`, increasing in `t >= 0`.
fn sinh2_over_cosh2(t: Interval) -> Result<Interval> {
    let c = (t * 2.0).cosh();
    let sech = c.recip()?;
    Ok((Interval::ONE - sech) * 0.5)
}

/// Lower bound `sqrt 3 sinh^2 R / (S(R) cosh 2R)` on the area of a maximal tube boundary.
pub fn max_tube_area_lb(r: Interval) -> Result<Interval> {
    require_pos("max_tube_area_lb", r)?;
    monotone(r, Dir::Up, |t| {
        div("max_tube_area_lb", sqrt3() * sinh2_over_cosh2(t)?, s_func(t)?)
    })
}

/// `sin(x) / x` for `x >= 0`.
fn sinc(x: Interval) -> Result<Interval> {
    if x.hi() < 1e-4 {
        let lo = Interval::ONE - x.sqr() * (1.0 / 6.0);
        return Interval::new(lo.lo().min(1.0), 1.0);
    }
    div("sinc", x.sin()?, x)
}

/// Lower bound `1.361 sqrt(1 - cos(sech R)) sinh R / S(R)` on twice the injectivity
/// radius at a maximal tube boundary. Increasing in `R`.
pub fn max_tube_injrad_lb(r: Interval) -> Result<Interval> {
    if r.lo() < 0.0 {
        return Err(Error::domain("max_tube_injrad_lb", r.lo(), r.hi(), "needs R >= 0"));
    }
    monotone(r, Dir::Up, |t| {
        // sqrt(1 - cos A) sinh R = sqrt 2 sin(A/2) sinh R = tanh R sinc(A/2) / sqrt 2, A = sech R.
        let a = t.cosh().recip()?;
        let v = INJ_COEFF * t.tanh() * sinc(a * 0.5)?;
        div("max_tube_injrad_lb", v, sqrt2() * s_func(t)?)
    })
}

/// Linear lower bound `1.1227 tanh R - 0.1604`.
pub fn max_tube_injrad_linear(r: Interval) -> Interval {
    INJ_LIN_SLOPE * r.tanh() - INJ_LIN_OFFSET
}

/// `k = min over m in 1..=8 of (cosh(m l) - cos(m tau))`.
pub fn meyerhoff_k(ell: Interval, tau: Interval) -> Result<Interval> {
    let mut k: Option<Interval> = None;
    for m in 1..=8 {
        let mf = m as f64;
        let v = (ell * mf).cosh() - (tau * mf).cos()?;
        k = Some(match k {
            None => v,
            Some(prev) => prev.min(&v),
        });
    }
    Ok(k.expect("eight terms"))
}

/// `asinh sqrt(sqrt(1 - 2k)/(2k) - 1/2)`, decreasing in `k` on `(0, sqrt 2 - 1]`.
fn radius_from_k(k: f64) -> Result<Interval> {
    let k = Interval::point(k);
    let s = div("meyerhoff_tube", (Interval::ONE - k * 2.0).sqrt()?, k * 2.0)? - 0.5;
    Ok(s.clamp_to(0.0, f64::INFINITY).sqrt()?.asinh())
}

/// Radius of an embedded tube about a geodesic of complex length `l + i tau`.
pub fn meyerhoff_tube(ell: Interval, tau: Interval) -> Result<Interval> {
    require_pos("meyerhoff_tube", ell)?;
    let k = meyerhoff_k(ell, tau)?;
    let kmax = sqrt2() - 1.0;
    if k.lo() >= kmax.hi() {
        return Err(Error::KTooLarge { k_lo: k.lo() });
    }
    let lo = if k.hi() < kmax.lo() {
        radius_from_k(k.hi())?.lo()
    } else {
        0.0
    };
    let hi = if k.lo() > 0.0 {
        radius_from_k(k.lo())?.hi()
    } else {
        f64::INFINITY
    };
    Interval::new(lo, hi)
}

/// Which additive constant the thin-part distance bound uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceRegime {
    /// `eps <= log 3`, shift `0.1475`.
    Log3,
    /// `eps <= 0.3`, shift `0.0424`.
    Small,
}

/// Bounds `(lower, upper)` on the distance between the `delta`-thin and `eps`-thick parts.
///
/// `lower` is the larger of `(eps - delta)/2` and `arccosh(eps / sqrt(7.256 delta)) - shift`,
/// where an undefined arccosh does not count. `upper` is
/// `arccosh sqrt((cosh eps - 1)/(cosh delta - 1))`.
pub fn tube_distance_bounds(
    delta: Interval,
    eps: Interval,
    regime: DistanceRegime,
) -> Result<(Interval, Interval)> {
    require_pos("tube_distance_bounds", delta)?;
    if !delta.certainly_lt(&eps) {
        return Err(Error::domain(
            "tube_distance_bounds",
            delta.lo(),
            delta.hi(),
            "needs delta < eps",
        ));
    }
    let (shift, eps_max) = match regime {
        DistanceRegime::Log3 => (THICK_LOG3_SHIFT, super::ln3()),
        DistanceRegime::Small => (THICK_SMALL_SHIFT, THICK_SMALL_EPS),
    };
    require_le("tube_distance_bounds", eps, eps_max, "eps within the regime range")?;

    // cosh x - 1 = 2 sinh^2(x/2)
    let ratio = div("tube_distance_bounds", (eps * 0.5).sinh(), (delta * 0.5).sinh())?;
    let upper = ratio.clamp_to(1.0, f64::INFINITY).acosh()?;

    let half_gap = (eps - delta) * 0.5;
    let arg = div("tube_distance_bounds", eps, (DIST_COEFF * delta).sqrt()?)?;
    let lower = if arg.hi() < 1.0 {
        half_gap
    } else {
        let b = arg.clamp_to(1.0, f64::INFINITY).acosh()? - shift;
        let b_lo = if arg.lo() >= 1.0 { b.lo() } else { f64::NEG_INFINITY };
        Interval::new(half_gap.lo().max(b_lo), half_gap.hi().max(b.hi()))?
    };
    Ok((lower, upper))
}

/// `r = arcsinh(sqrt 3 eps^2 / A) / 2`, a lower bound on the radius of a
/// singular tube of visual area `A`.
pub fn singular_tube_radius_lb(eps: Interval, visual_area: Interval) -> Result<Interval> {
    require_pos("singular_tube_radius_lb", eps)?;
    require_pos("singular_tube_radius_lb", visual_area)?;
    let arg = div("singular_tube_radius_lb", sqrt3() * eps.sqr(), visual_area)?;
    Ok(arg.asinh() * 0.5)
}
