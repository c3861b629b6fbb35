//! Expressions and domains of the certification tasks.
//!
//! Every task is stated as `expr >= 0` on a box, plus a stronger variant
//! that must not verify.

use crate::constants::*;
use crate::error::Result;
use crate::interval::{prove_nonneg, Interval, IntervalBox, ProofResult, ProofStatus, ProveOptions, PI_IV};
use crate::special::{
    f_drift, g_thick, haze, haze_inv, max_tube_injrad_lb, max_tube_injrad_linear, phi_over_r6,
    puiseux_phi, q_func, ThickVariant,
};

/// Which claim a task checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// The published inequality.
    Stated,
    /// A strictly stronger inequality that is false.
    Negated,
}

fn two_pi() -> Interval {
    PI_IV * 2.0
}

fn four_pi_sq() -> Interval {
    PI_IV.sqr() * 4.0
}

fn dec(text: &str) -> Interval {
    Interval::from_decimal(text).expect("decimal literal")
}

fn iv(lo: f64, hi: f64) -> Interval {
    Interval::new(lo, hi).expect("ordered bounds")
}

fn boxed(dims: Vec<Interval>) -> IntervalBox {
    IntervalBox::new(dims).expect("nonempty box")
}

/// Runs the pieces in order and merges them: counts add up, and the first
/// piece that is not verified decides the status.
fn chain(parts: Vec<Box<dyn FnOnce() -> Result<ProofResult> + '_>>) -> Result<ProofResult> {
    let mut total = ProofResult { status: ProofStatus::Verified, boxes_examined: 0, max_depth_used: 0 };
    for part in parts {
        let r = part()?;
        total.boxes_examined += r.boxes_examined;
        total.max_depth_used = total.max_depth_used.max(r.max_depth_used);
        if !r.is_verified() {
            total.status = r.status;
            return Ok(total);
        }
    }
    Ok(total)
}

/// A single certified comparison reported as a one-box proof.
fn point_check(holds: bool, fails: bool, at: IntervalBox) -> ProofResult {
    let status = if holds {
        ProofStatus::Verified
    } else if fails {
        ProofStatus::Counterexample(at)
    } else {
        ProofStatus::DepthExceeded(at)
    };
    ProofResult { status, boxes_examined: 1, max_depth_used: 0 }
}

/// The general injectivity bound dominates `1.1227 Z - 0.1604` on `[0, 1)`.
pub fn injec_linear_dominates(claim: Claim, opts: &ProveOptions) -> Result<ProofResult> {
    let gap = match claim {
        Claim::Stated => Interval::ZERO,
        Claim::Negated => dec("0.001"),
    };
    let split = dec("0.99995");
    let body = move |x: &[Interval]| -> Result<Interval> {
        let r = x[0].atanh()?;
        Ok(max_tube_injrad_lb(r)? - max_tube_injrad_linear(r) - gap)
    };
    let domain = boxed(vec![iv(0.0, split.lo())]);
    chain(vec![
        Box::new(move || prove_nonneg(body, &domain, opts)),
        // On [0.99995, 1) the increasing bound is at least 0.9623 = 1.1227 - 0.1604,
        // the supremum of the linear one.
        Box::new(move || {
            let lb = max_tube_injrad_lb(Interval::point(split.lo()).atanh()?)?;
            let cap = INJ_LIN_SLOPE - INJ_LIN_OFFSET + gap;
            Ok(point_check(lb.lo() >= cap.hi(), lb.hi() < cap.lo(), boxed(vec![iv(split.lo(), 1.0)])))
        }),
    ])
}

/// For every `tau` some `m <= 8` has `cosh(0.0996 m) - cos(m tau) <= 0.34932`.
pub fn meyerhoff_m8(claim: Claim, opts: &ProveOptions) -> Result<ProofResult> {
    let bound = match claim {
        Claim::Stated => MEYERHOFF_K,
        Claim::Negated => dec("0.3488"),
    };
    let domain = boxed(vec![iv(0.0, PI_IV.hi())]);
    // Per box the best `m` wins: the interval minimum has upper end `min_m sup`.
    prove_nonneg(
        |x| {
            let mut best: Option<Interval> = None;
            for m in 1..=8 {
                let mf = m as f64;
                let v = (CONE_COMPONENT * mf).cosh() - (x[0] * mf).cos()?;
                best = Some(best.map_or(v, |b| b.min(&v)));
            }
            Ok(bound - best.expect("eight terms"))
        },
        &domain,
        opts,
    )
}

/// `q(Z)` when `Z` may reach 1, using `q <= q(1) = 2`.
fn q_enclosure(z: Interval) -> Result<Interval> {
    if z.hi() < 1.0 {
        return q_func(z);
    }
    let lo = q_func(Interval::point(z.lo()))?;
    Interval::new(lo.lo(), 2.0)
}

/// `x^q` for `x` in `[0, 1]` and `q >= 1`.
fn pow_unit(x: Interval, q: Interval) -> Result<Interval> {
    let x = x.clamp_to(0.0, 1.0);
    let at = |b: f64, e: f64| -> Result<Interval> {
        if b == 0.0 {
            Ok(Interval::ZERO)
        } else {
            Ok((Interval::point(b).ln()? * e).exp())
        }
    };
    let lo = at(x.lo(), q.hi())?;
    let hi = at(x.hi(), q.lo())?;
    Interval::new(lo.lo().max(0.0), hi.hi().min(1.0))
}

/// `(1 + z^2)/(z^3 (3 - z^2))`, decreasing on `(0, 1)`.
fn drift_shape(z: Interval) -> Result<Interval> {
    let at = |v: f64| -> Result<Interval> {
        let v = Interval::point(v);
        let u = v.sqr();
        (Interval::ONE + u).div(&(v.pow_int(3) * (Interval::point(3.0) - u)))
    };
    Interval::new(at(z.hi())?.lo(), at(z.lo())?.hi())
}

/// `(e^y - 1)/y` for `y >= 0`, increasing.
fn expm1_ratio(y: Interval) -> Result<Interval> {
    let y = y.clamp_to(0.0, f64::INFINITY);
    if y.hi() == 0.0 {
        return Ok(Interval::ONE);
    }
    let top = Interval::point(y.hi()).expm1().div(&Interval::point(y.hi()))?;
    Interval::new(1.0, top.hi().max(1.0))
}

/// `f(4 pi^2) - f(t) + slack` for the capped visual-area bound
/// `f(t) = 2 pi l (sqrt t / 2 pi)^q(Z0) + k m exp((4 pi^2 - t) F(Zmin, l))`,
/// with `k = 2 pi * weight`.
///
/// `F` is `l` times a factor `a`, so `1 - e^(a l) = -a l (e^(a l) - 1)/(a l)`;
/// pulling out `l` keeps the two terms from cancelling only in enclosure.
fn capped_gap(ell: Interval, m: Interval, t: Interval, weight: f64, zmin_arg: Interval, slack: Interval) -> Result<Interval> {
    let z0 = haze_inv(two_pi() * ell)?;
    let zmin = haze_inv(two_pi() * zmin_arg)?;
    let x = t.clamp_to(0.0, f64::INFINITY).sqrt()?.div(&two_pi())?;
    let a = (four_pi_sq() - t).clamp_to(0.0, f64::INFINITY) * drift_shape(zmin)?.div(&(F_NUM - F_DEN * ell))?;
    let first = two_pi() * (Interval::ONE - pow_unit(x, q_enclosure(z0)?)?);
    let second = two_pi() * weight * m * a * expm1_ratio(a * ell)?;
    Ok(ell * (first - second) + slack)
}

fn area_slack(claim: Claim) -> Interval {
    let s = two_pi() * SHORT_SLACK;
    match claim {
        Claim::Stated => s,
        Claim::Negated => -s,
    }
}

/// `f(t) < f(4 pi^2) + 2 pi 10^-5` with `m = 0.0996 - 0.352 l` on
/// `(l, t)` in `[0, 0.0735] x [0, 4 pi^2]`.
pub fn area_bound_capped(claim: Claim, opts: &ProveOptions) -> Result<ProofResult> {
    let slack = area_slack(claim);
    let domain = boxed(vec![iv(0.0, SHORT_ELL.hi()), iv(0.0, four_pi_sq().hi())]);
    prove_nonneg(
        |x| {
            let (ell, t) = (x[0], x[1]);
            let m = CONE_COMPONENT - SHORT_M_SLOPE * ell;
            // l + m = 0.0996 + 0.648 l, written without the cancellation.
            let total = CONE_COMPONENT + (Interval::ONE - SHORT_M_SLOPE) * ell;
            capped_gap(ell, m, t, 1.0, total + SHORT_SLACK, slack)
        },
        &domain,
        opts,
    )
}

/// The two-component variant: weight `4 pi m`, `m = (0.14 - l)/2`, on
/// `(l, t)` in `[0, 0.14] x [0, 4 pi^2]`.
pub fn hold_geodesics_fhat(claim: Claim, opts: &ProveOptions) -> Result<ProofResult> {
    let slack = area_slack(claim);
    let domain = boxed(vec![iv(0.0, HOLD_TOTAL.hi()), iv(0.0, four_pi_sq().hi())]);
    prove_nonneg(
        |x| {
            let (ell, t) = (x[0], x[1]);
            let m = ((HOLD_TOTAL - ell) * 0.5).clamp_to(0.0, f64::INFINITY);
            // l + 2m = 0.14 identically.
            capped_gap(ell, m, t, 2.0, HOLD_TOTAL + SHORT_SLACK, slack)
        },
        &domain,
        opts,
    )
}

const PUISEUX_SPLIT: f64 = 0.05;

fn puiseux(c: Interval, r_max: f64, claim: Claim, opts: &ProveOptions) -> Result<ProofResult> {
    // The envelope fails near 0 as soon as C < 1, since Phi/r^6 -> 4C^2 - 4.
    let c = match claim {
        Claim::Stated => c,
        Claim::Negated => dec("0.999"),
    };
    let near = boxed(vec![iv(0.0, PUISEUX_SPLIT.min(r_max))]);
    let mut parts: Vec<Box<dyn FnOnce() -> Result<ProofResult> + '_>> =
        vec![Box::new(move || prove_nonneg(|x| phi_over_r6(x[0], c), &near, opts))];
    if r_max > PUISEUX_SPLIT {
        let far = boxed(vec![iv(PUISEUX_SPLIT, r_max)]);
        parts.push(Box::new(move || prove_nonneg(|x| puiseux_phi(x[0], c), &far, opts)));
    }
    chain(parts)
}

/// `Phi(r) >= 0` on `[0, 0.469]` with `C = 1.046`.
pub fn puiseux_938(claim: Claim, opts: &ProveOptions) -> Result<ProofResult> {
    puiseux(PUISEUX_C_938, 0.469, claim, opts)
}

/// `Phi(r) >= 0` on `[0, 0.053]` with `C = 1.001`.
pub fn puiseux_106(claim: Claim, opts: &ProveOptions) -> Result<ProofResult> {
    puiseux(PUISEUX_C_106, 0.053, claim, opts)
}

/// `4 pi^2 F(haze^-1(4 pi l_max + 2 pi 10^-5), l_max)/l_max
///  < log((L^2 - 16.03)/(L^2 - 58)) (L^2 - 16.03)/(2 pi)` on `L` in `[10.1, 11]`.
pub fn sysmin_supper(claim: Claim, opts: &ProveOptions) -> Result<ProofResult> {
    let gap = match claim {
        Claim::Stated => Interval::ZERO,
        Claim::Negated => dec("0.1"),
    };
    let domain = boxed(vec![iv(COSMETIC_L.lo(), 11.0)]);
    prove_nonneg(
        |x| {
            let l2 = x[0].sqr();
            let a = l2 - SYS_SHIFT;
            let lmax = two_pi().div(&a)?;
            let z = haze_inv(two_pi() * 2.0 * lmax + two_pi() * SHORT_SLACK)?;
            let lhs = four_pi_sq() * f_drift(z, lmax)?.div(&lmax)?;
            let rhs = a.div(&(l2 - SYS_UPPER_SHIFT))?.ln()? * a.div(&two_pi())?;
            Ok(rhs - lhs - gap)
        },
        &domain,
        opts,
    )
}

/// `g(log 3, J) < 5.610e-5` for `J` in `[1, e^(1/5)]`.
pub fn gj_max(claim: Claim, opts: &ProveOptions) -> Result<ProofResult> {
    let cap = match claim {
        Claim::Stated => GJ_MAX,
        Claim::Negated => GJ_MAX_TIGHT,
    };
    let ln3 = Interval::point(3.0).ln()?;
    let domain = boxed(vec![iv(1.0, Interval::point(0.2).exp().hi())]);
    prove_nonneg(|x| Ok(cap - g_thick(ln3, x[0], ThickVariant::Log3)?), &domain, opts)
}

/// `(2/5 - 2 log J) cosh u - eps J log J sinh u > 0`, `u = J eps/2 + 0.1475`,
/// on `(eps, J)` in `[0, log 3] x [1, log 3]`.
pub fn gj_dj_positive(claim: Claim, opts: &ProveOptions) -> Result<ProofResult> {
    let ln3 = Interval::point(3.0).ln()?;
    // The derivative changes sign before e^(1/5), where 2/5 - 2 log J = 0.
    let j_hi = match claim {
        Claim::Stated => ln3.lo(),
        Claim::Negated => Interval::point(0.2).exp().hi(),
    };
    let domain = boxed(vec![iv(0.0, ln3.hi()), iv(1.0, j_hi)]);
    prove_nonneg(
        |x| {
            let (eps, j) = (x[0], x[1]);
            let lj = j.ln()?;
            let u = j * eps * 0.5 + THICK_LOG3_SHIFT;
            Ok((dec("0.4") - lj * 2.0) * u.cosh() - eps * j * lj * u.sinh())
        },
        &domain,
        opts,
    )
}

/// `0.261 d - haze((d + 0.1604)/1.1227)/(2 pi)`, increasing past the haze peak.
fn delta_cut_phi(d: Interval) -> Result<Interval> {
    let z = (d + INJ_LIN_OFFSET).div(&INJ_LIN_SLOPE)?;
    Ok(DELTA_CUT_SLOPE * d - haze(z)?.div(&two_pi())?)
}

/// The crossing `0.261 d = haze((d + 0.1604)/1.1227)/(2 pi)` lies in
/// `[0.556369, 0.556370]`: the difference changes sign across the bracket
/// and is increasing on `[0.5, 0.6]`, so the crossing there is unique.
pub fn delta_cut_bracket(claim: Claim, _opts: &ProveOptions) -> Result<ProofResult> {
    let (lo, hi) = match claim {
        Claim::Stated => (DELTA_CUT_LO, DELTA_CUT_HI),
        Claim::Negated => (DELTA_CUT_HI, dec("0.556371")),
    };
    let peak_ok = || -> Result<bool> {
        let z = (Interval::point(0.5) + INJ_LIN_OFFSET).div(&INJ_LIN_SLOPE)?;
        Ok(z.lo() > crate::special::haze_peak().hi())
    };
    chain(vec![
        Box::new(move || {
            let a = delta_cut_phi(lo)?;
            Ok(point_check(a.hi() < 0.0, a.lo() >= 0.0, boxed(vec![lo])))
        }),
        Box::new(move || {
            let b = delta_cut_phi(hi)?;
            Ok(point_check(b.lo() > 0.0, b.hi() <= 0.0, boxed(vec![hi])))
        }),
        Box::new(move || Ok(point_check(peak_ok()?, false, boxed(vec![iv(0.5, 0.6)])))),
    ])
}
