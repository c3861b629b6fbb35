//! Verified bisection for roots of monotone functions.

use super::Interval;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
}

struct Side<'a, F> {
    f: &'a F,
    target: f64,
    dir: Monotonicity,
}

impl<F: Fn(Interval) -> Result<Interval>> Side<'_, F> {
    /// `x` lies certainly left of the root.
    fn left_of_root(&self, x: f64) -> Result<bool> {
        let v = (self.f)(Interval::point(x))?;
        Ok(match self.dir {
            Monotonicity::Increasing => v.hi() < self.target,
            Monotonicity::Decreasing => v.lo() > self.target,
        })
    }

    /// `x` lies certainly right of the root.
    fn right_of_root(&self, x: f64) -> Result<bool> {
        let v = (self.f)(Interval::point(x))?;
        Ok(match self.dir {
            Monotonicity::Increasing => v.lo() > self.target,
            Monotonicity::Decreasing => v.hi() < self.target,
        })
    }
}

/// Encloses the root of `f(x) = target` on `domain`, for monotone `f`.
///
/// Monotonicity direction is read from the endpoint values, which must be
/// strictly separated. Every discarded subinterval is certified by interval
/// evaluation at a point, so the result contains the root whenever `f` is
/// monotone. The width is at most `tol` unless `f`'s enclosures are too wide
/// to separate the root that finely.
pub fn bracket_root_monotone<F>(f: F, domain: Interval, target: f64, tol: f64) -> Result<Interval>
where
    F: Fn(Interval) -> Result<Interval>,
{
    bracket_root_with_guess(f, domain, target, tol, None)
}

/// As [`bracket_root_monotone`], first trying a bracket of width `tol`
/// around a floating-point `guess`.
pub(crate) fn bracket_root_with_guess<F>(
    f: F,
    domain: Interval,
    target: f64,
    tol: f64,
    guess: Option<f64>,
) -> Result<Interval>
where
    F: Fn(Interval) -> Result<Interval>,
{
    let (lo, hi) = (domain.lo(), domain.hi());
    let fa = f(Interval::point(lo))?;
    let fb = f(Interval::point(hi))?;
    let dir = if fa.certainly_lt(&fb) {
        Monotonicity::Increasing
    } else if fa.certainly_gt(&fb) {
        Monotonicity::Decreasing
    } else {
        return Err(Error::NotMonotone);
    };
    let (vmin, vmax) = match dir {
        Monotonicity::Increasing => (fa.lo(), fb.hi()),
        Monotonicity::Decreasing => (fb.lo(), fa.hi()),
    };
    if target < vmin || target > vmax {
        return Err(Error::NoStraddle {
            target,
            f_lo: fa.mid(),
            f_hi: fb.mid(),
        });
    }
    let side = Side {
        f: &f,
        target,
        dir,
    };

    if let Some(g) = guess.filter(|g| g.is_finite() && *g > lo && *g < hi) {
        let w = (tol * 0.25).max(4.0 * (g.next_up() - g));
        let (a, b) = ((g - w).max(lo), (g + w).min(hi));
        if side.left_of_root(a)? && side.right_of_root(b)? {
            return Interval::new(a, b);
        }
    }

    let half = tol * 0.5;
    // Largest certified left bound.
    let (mut a, mut b) = (lo, hi);
    while b - a > half {
        let m = a * 0.5 + b * 0.5;
        if m <= a || m >= b {
            break;
        }
        if side.left_of_root(m)? {
            a = m;
        } else {
            b = m;
        }
    }
    let left = a;
    // Smallest certified right bound.
    let (mut a, mut b) = (left, hi);
    while b - a > half {
        let m = a * 0.5 + b * 0.5;
        if m <= a || m >= b {
            break;
        }
        if side.right_of_root(m)? {
            b = m;
        } else {
            a = m;
        }
    }
    Interval::new(left, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn square_root_of_two() {
        let r = bracket_root_monotone(|x| Ok(x.sqr()), iv(0.0, 2.0), 2.0, 1e-12).unwrap();
        assert!(r.contains(std::f64::consts::SQRT_2));
        assert!(r.width() <= 1e-12);
    }

    #[test]
    fn decreasing_function() {
        let r = bracket_root_monotone(|x| Ok(-x), iv(0.0, 1.0), -0.25, 1e-14).unwrap();
        assert!(r.contains(0.25) && r.width() <= 1e-14);
    }

    #[test]
    fn target_outside_range() {
        let e = bracket_root_monotone(Ok, iv(0.0, 1.0), 2.0, 1e-12).unwrap_err();
        assert!(matches!(e, Error::NoStraddle { .. }));
    }

    #[test]
    fn flat_function_is_rejected() {
        let e = bracket_root_monotone(|_| Ok(Interval::ONE), iv(0.0, 1.0), 1.0, 1e-12).unwrap_err();
        assert_eq!(e, Error::NotMonotone);
    }

    #[test]
    fn guess_fast_path_matches() {
        let f = |x: Interval| Ok(x.exp());
        let slow = bracket_root_monotone(f, iv(0.0, 2.0), 3.0, 1e-13).unwrap();
        let fast = bracket_root_with_guess(f, iv(0.0, 2.0), 3.0, 1e-13, Some(3f64.ln())).unwrap();
        assert!(slow.contains(3f64.ln()) && fast.contains(3f64.ln()));
        assert!(fast.width() <= 1e-13);
    }
}
