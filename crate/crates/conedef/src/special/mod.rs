//! Closed-form functions of tube geometry, cone deformation and filling bounds.
//!
//! Every function takes and returns [`Interval`]s; point queries use
//! degenerate intervals. Monotone functions are evaluated at endpoints.

mod haze;
mod ifunc;
mod lengths;
mod meanvalue;
pub mod quadrature;
mod registry;
mod trig;
mod tube;

pub use haze::{h, h_inv, haze, haze_inv, haze_inv_closed_form, haze_max, haze_peak};
pub use ifunc::{i_func, i_integral};
pub use lengths::{
    dhyp, ell_max, f_drift, g_thick, g_tilde, g_upper, kenprop_bounds, q_func, sysmin,
    ComplexLength, ThickVariant, TubeSpec,
};
pub use meanvalue::{
    f_mean_value, f_over_r3, mean_value_multiplier, phi_over_r6, puiseux_phi, sinh_excess_over_r3,
};
pub use registry::{eval, lookup_function, FunctionEntry, FUNCTIONS};
pub use trig::{
    cosh_from_tanh, growth_ratios, r_from_tanh, sinh_diff, sinh_from_tanh, tanh_from_r,
    GrowthRatios,
};
pub use tube::{
    ellipse_axes, max_tube_area_lb, max_tube_injrad_lb, max_tube_injrad_linear, meyerhoff_k,
    meyerhoff_tube, s_func, singular_tube_radius_lb, tube_distance_bounds, DistanceRegime,
};

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Direction of a monotone function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Dir {
    Up,
    Down,
}

/// Range of a monotone function from enclosures at the two endpoints.
pub(crate) fn monotone<F>(x: Interval, dir: Dir, f: F) -> Result<Interval>
where
    F: Fn(Interval) -> Result<Interval>,
{
    let a = f(Interval::point(x.lo()))?;
    if x.is_point() {
        return Ok(a);
    }
    let b = f(Interval::point(x.hi()))?;
    let (lo, hi) = match dir {
        Dir::Up => (a.lo(), b.hi()),
        Dir::Down => (b.lo(), a.hi()),
    };
    Interval::new(lo.min(hi), hi.max(lo))
}

/// Fails unless `x >= bound` is possible for the whole interval, i.e. `x.lo >= bound.lo`.
pub(crate) fn require_ge(func: &'static str, x: Interval, bound: Interval, what: &str) -> Result<()> {
    if x.lo() < bound.lo() {
        return Err(Error::domain(func, x.lo(), x.hi(), format!("needs {what}")));
    }
    Ok(())
}

/// Fails unless `x.hi <= bound.hi`.
pub(crate) fn require_le(func: &'static str, x: Interval, bound: Interval, what: &str) -> Result<()> {
    if x.hi() > bound.hi() {
        return Err(Error::domain(func, x.lo(), x.hi(), format!("needs {what}")));
    }
    Ok(())
}

/// Fails unless `x.lo > 0`.
pub(crate) fn require_pos(func: &'static str, x: Interval) -> Result<()> {
    if !(x.lo() > 0.0) {
        return Err(Error::domain(func, x.lo(), x.hi(), "needs a positive argument"));
    }
    Ok(())
}

pub(crate) fn two_pi() -> Interval {
    crate::interval::PI_IV * 2.0
}

pub(crate) fn four_pi_sq() -> Interval {
    two_pi().sqr()
}

pub(crate) fn sqrt2() -> Interval {
    Interval::point(2.0).sqrt().expect("positive")
}

pub(crate) fn sqrt3() -> Interval {
    Interval::point(3.0).sqrt().expect("positive")
}

pub(crate) fn ln3() -> Interval {
    Interval::point(3.0).ln().expect("positive")
}

/// `x / y` with a domain error naming `func` when `0` lies in `y`.
pub(crate) fn div(func: &'static str, x: Interval, y: Interval) -> Result<Interval> {
    x.div(&y)
        .map_err(|_| Error::domain(func, y.lo(), y.hi(), "denominator encloses zero"))
}
