//! Length and drift functions: the tube-area coefficients `G`, `G~`, `q`,
//! the complex-length drift `F`, the thick-part threshold `g`, the systole
//! threshold and the hyperbolic distance between complex lengths.

use serde::{Deserialize, Serialize};

use super::{div, four_pi_sq, haze_inv, require_ge, require_le, require_pos, two_pi, Dir};
use crate::constants::{
    COSMETIC_L, F_DEN, F_NUM, G_SCALE, SYS_SHIFT, THICK_LOG3_C, THICK_LOG3_SHIFT, THICK_SMALL_C,
    THICK_SMALL_EPS, THICK_SMALL_SHIFT,
};
use crate::error::{Error, Result};
use crate::interval::Interval;

/// Model solid torus data: cone angle, core length, twist and radius.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TubeSpec {
    alpha: Interval,
    lambda: Interval,
    tau: Interval,
    radius: Interval,
}

impl TubeSpec {
    /// Needs `0 < alpha <= 2 pi`, `lambda > 0` and `radius >= 0`.
    pub fn new(alpha: Interval, lambda: Interval, tau: Interval, radius: Interval) -> Result<TubeSpec> {
        require_pos("TubeSpec", alpha)?;
        require_le("TubeSpec", alpha, two_pi(), "cone angle <= 2 pi")?;
        require_pos("TubeSpec", lambda)?;
        require_ge("TubeSpec", radius, Interval::ZERO, "radius >= 0")?;
        Ok(TubeSpec { alpha, lambda, tau, radius })
    }

    pub fn alpha(&self) -> Interval {
        self.alpha
    }

    pub fn lambda(&self) -> Interval {
        self.lambda
    }

    pub fn tau(&self) -> Interval {
        self.tau
    }

    pub fn radius(&self) -> Interval {
        self.radius
    }

    /// `tanh` of the radius.
    pub fn z(&self) -> Interval {
        self.radius.tanh()
    }

    /// Visual area `alpha * lambda`.
    pub fn visual_area(&self) -> Interval {
        self.alpha * self.lambda
    }
}

/// Complex length `len + i twist` of a closed geodesic.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexLength {
    len: Interval,
    twist: Interval,
}

impl ComplexLength {
    pub fn new(len: Interval, twist: Interval) -> Result<ComplexLength> {
        require_pos("ComplexLength", len)?;
        Ok(ComplexLength { len, twist })
    }

    pub fn len(&self) -> Interval {
        self.len
    }

    pub fn twist(&self) -> Interval {
        self.twist
    }
}

fn check_unit(func: &'static str, z: Interval) -> Result<()> {
    if !(z.lo() > 0.0) || !(z.hi() < 1.0) {
        return Err(Error::domain(func, z.lo(), z.hi(), "needs 0 < z < 1"));
    }
    Ok(())
}

/// `G(z) = (1 + z^2) / (6.7914 z^3)`, decreasing.
pub fn g_upper(z: Interval) -> Result<Interval> {
    check_unit("G", z)?;
    super::monotone(z, Dir::Down, |t| div("G", Interval::ONE + t.sqr(), G_SCALE * t.pow_int(3)))
}

/// `G~(z) = (1 + z^2)^2 / (6.7914 z^3 (3 - z^2))`, decreasing.
pub fn g_tilde(z: Interval) -> Result<Interval> {
    check_unit("Gtilde", z)?;
    super::monotone(z, Dir::Down, |t| {
        let u = t.sqr();
        div("Gtilde", (Interval::ONE + u).sqr(), G_SCALE * t.pow_int(3) * (Interval::point(3.0) - u))
    })
}

/// `q(z) = (3z^2 - 1) / (z^2 (3 - z^2)) + 1`, increasing.
pub fn q_func(z: Interval) -> Result<Interval> {
    check_unit("q", z)?;
    super::monotone(z, Dir::Up, |t| {
        let u = t.sqr();
        Ok(div("q", u * 3.0 - 1.0, u * (Interval::point(3.0) - u))? + 1.0)
    })
}

fn f_point(z: Interval, ell: Interval) -> Result<Interval> {
    let u = z.sqr();
    let shape = div("F", Interval::ONE + u, z.pow_int(3) * (Interval::point(3.0) - u))?;
    Ok(shape * div("F", ell, F_NUM - F_DEN * ell)?)
}

/// `F(z, l) = (1 + z^2)/(z^3 (3 - z^2)) * l / (10.667 - 20.977 l)`,
/// decreasing in `z` and increasing in `l` on `0 <= l < 10.667/20.977`.
pub fn f_drift(z: Interval, ell: Interval) -> Result<Interval> {
    check_unit("F", z)?;
    require_ge("F", ell, Interval::ZERO, "l >= 0")?;
    if !(F_DEN * ell).certainly_lt(&F_NUM) {
        return Err(Error::domain("F", ell.lo(), ell.hi(), "denominator 10.667 - 20.977 l must be positive"));
    }
    let lo = f_point(Interval::point(z.hi()), Interval::point(ell.lo()))?;
    let hi = f_point(Interval::point(z.lo()), Interval::point(ell.hi()))?;
    Interval::new(lo.lo(), hi.hi())
}

/// Which form of the thick-part threshold applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThickVariant {
    /// `eps <= 0.3`: constants `471.5` and `0.0424`.
    SmallEps,
    /// `eps <= log 3`: constants `496.1` and `0.1475`.
    Log3,
}

fn g_point(eps: Interval, j: Interval, c: Interval, shift: Interval) -> Result<Interval> {
    let num = eps.pow_int(5) * j.ln()?;
    let den = c * j.pow_int(5) * (j * eps * 0.5 + shift).cosh().pow_int(5);
    div("g", num, den)
}

/// `g(eps, J) = eps^5 log J / (C J^5 cosh^5(J eps / 2 + s))`, increasing in `eps`.
///
/// Needs `1 <= J <= e^(1/5)` and `0 < eps` up to `0.3` or `log 3` per variant.
pub fn g_thick(eps: Interval, j: Interval, variant: ThickVariant) -> Result<Interval> {
    require_pos("g", eps)?;
    let (c, shift, eps_max) = match variant {
        ThickVariant::SmallEps => (THICK_SMALL_C, THICK_SMALL_SHIFT, THICK_SMALL_EPS),
        ThickVariant::Log3 => (THICK_LOG3_C, THICK_LOG3_SHIFT, super::ln3()),
    };
    require_le("g", eps, eps_max, "eps within the variant's range")?;
    require_ge("g", j, Interval::ONE, "J >= 1")?;
    require_le("g", j, Interval::point(0.2).exp(), "J <= e^(1/5)")?;
    super::monotone(eps, Dir::Up, |e| g_point(e, j, c, shift))
}

/// `l_max(L) = 2 pi / (L^2 - 16.03)` for `L >= 10.1`.
pub fn ell_max(l: Interval) -> Result<Interval> {
    require_ge("ell_max", l, COSMETIC_L, "L >= 10.1")?;
    super::monotone(l, Dir::Down, |t| div("ell_max", two_pi(), t.sqr() - SYS_SHIFT))
}

fn sysmin_point(l: Interval) -> Result<Interval> {
    let lm = div("sysmin", two_pi(), l.sqr() - SYS_SHIFT)?;
    let slack = two_pi() * Interval::from_decimal("0.00001")?;
    let z = haze_inv(two_pi() * 2.0 * lm + slack)?;
    Ok(lm * (four_pi_sq() * f_drift(z, lm)?).exp())
}

/// `sysmin(L) = l_max exp(4 pi^2 F(haze^-1(4 pi l_max + 2 pi 10^-5), l_max))`,
/// decreasing, for `L >= 10.1`.
pub fn sysmin(l: Interval) -> Result<Interval> {
    require_ge("sysmin", l, COSMETIC_L, "L >= 10.1")?;
    super::monotone(l, Dir::Down, sysmin_point)
}

/// Distance in the hyperbolic plane between `i L1` and `i L2`:
/// `2 asinh(|L1 - L2| / (2 sqrt(len1 len2)))`.
pub fn dhyp(a: ComplexLength, b: ComplexLength) -> Result<Interval> {
    let gap = ((a.len - b.len).sqr() + (a.twist - b.twist).sqr()).sqrt()?;
    let half = div("dhyp", gap, (a.len * b.len).sqrt()? * 2.0)?;
    Ok((half.asinh() * 2.0).clamp_to(0.0, f64::INFINITY))
}

/// Length-ratio enclosure `[e^-K, e^K]` and twist bound `sinh(K) len_ref`.
pub fn kenprop_bounds(k: Interval, len_ref: Interval) -> Result<(Interval, Interval)> {
    require_ge("kenprop_bounds", k, Interval::ZERO, "K >= 0")?;
    require_ge("kenprop_bounds", len_ref, Interval::ZERO, "len >= 0")?;
    let ratio = Interval::new((-k).exp().lo(), k.exp().hi())?;
    Ok((ratio, k.sinh() * len_ref))
}
