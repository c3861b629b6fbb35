//! Directed rounding of single floating-point operations.
//!
//! Sums, products, quotients and square roots are rounded with error-free
//! transforms: the exact residual of the nearest-rounded result decides
//! whether the endpoint must move by one ulp. Exact results stay exact.

/// Below this magnitude FMA residuals may themselves be inexact.
const TINY: f64 = 1.0e-290;

#[inline]
fn overflow_dn(r: f64, finite_inputs: bool) -> f64 {
    if finite_inputs && r == f64::INFINITY {
        f64::MAX
    } else {
        r
    }
}

#[inline]
fn overflow_up(r: f64, finite_inputs: bool) -> f64 {
    if finite_inputs && r == f64::NEG_INFINITY {
        f64::MIN
    } else {
        r
    }
}

#[inline]
fn two_sum_err(a: f64, b: f64, s: f64) -> f64 {
    let bp = s - a;
    let ap = s - bp;
    (a - ap) + (b - bp)
}

pub(crate) fn add_dn(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return overflow_dn(s, a.is_finite() && b.is_finite());
    }
    if two_sum_err(a, b, s) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

pub(crate) fn add_up(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return overflow_up(s, a.is_finite() && b.is_finite());
    }
    if two_sum_err(a, b, s) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

pub(crate) fn sub_dn(a: f64, b: f64) -> f64 {
    add_dn(a, -b)
}

pub(crate) fn sub_up(a: f64, b: f64) -> f64 {
    add_up(a, -b)
}

/// Product with 0 * inf read as 0 (closed-interval convention).
#[inline]
fn raw_mul(a: f64, b: f64) -> f64 {
    if a == 0.0 || b == 0.0 {
        0.0
    } else {
        a * b
    }
}

pub(crate) fn mul_dn(a: f64, b: f64) -> f64 {
    let p = raw_mul(a, b);
    if a == 0.0 || b == 0.0 {
        return 0.0;
    }
    if !p.is_finite() {
        return overflow_dn(p, a.is_finite() && b.is_finite());
    }
    if p.abs() < TINY {
        return p.next_down();
    }
    if a.mul_add(b, -p) < 0.0 {
        p.next_down()
    } else {
        p
    }
}

pub(crate) fn mul_up(a: f64, b: f64) -> f64 {
    let p = raw_mul(a, b);
    if a == 0.0 || b == 0.0 {
        return 0.0;
    }
    if !p.is_finite() {
        return overflow_up(p, a.is_finite() && b.is_finite());
    }
    if p.abs() < TINY {
        return p.next_up();
    }
    if a.mul_add(b, -p) > 0.0 {
        p.next_up()
    } else {
        p
    }
}

/// Sign of (true quotient - q) for q = a / b, when b is finite and nonzero.
#[inline]
fn div_residual_sign(a: f64, b: f64, q: f64) -> f64 {
    let r = (-q).mul_add(b, a);
    if b > 0.0 {
        r
    } else {
        -r
    }
}

pub(crate) fn div_dn(a: f64, b: f64) -> f64 {
    let q = a / b;
    if a == 0.0 {
        return 0.0;
    }
    if !q.is_finite() {
        return overflow_dn(q, a.is_finite());
    }
    if b.is_infinite() || q.abs() < TINY {
        return q.next_down();
    }
    if div_residual_sign(a, b, q) < 0.0 {
        q.next_down()
    } else {
        q
    }
}

pub(crate) fn div_up(a: f64, b: f64) -> f64 {
    let q = a / b;
    if a == 0.0 {
        return 0.0;
    }
    if !q.is_finite() {
        return overflow_up(q, a.is_finite());
    }
    if b.is_infinite() || q.abs() < TINY {
        return q.next_up();
    }
    if div_residual_sign(a, b, q) > 0.0 {
        q.next_up()
    } else {
        q
    }
}

pub(crate) fn sqrt_dn(x: f64) -> f64 {
    let s = x.sqrt();
    if x == 0.0 || !s.is_finite() {
        return s;
    }
    if x < TINY {
        return s.next_down().max(0.0);
    }
    if (-s).mul_add(s, x) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

pub(crate) fn sqrt_up(x: f64) -> f64 {
    let s = x.sqrt();
    if x == 0.0 || !s.is_finite() {
        return s;
    }
    if x < TINY {
        return s.next_up();
    }
    if (-s).mul_add(s, x) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

/// Next float above a positive finite value, usable in constant context.
pub(crate) const fn const_next_up(x: f64) -> f64 {
    f64::from_bits(x.to_bits() + 1)
}

/// Next float below a positive finite value, usable in constant context.
pub(crate) const fn const_next_down(x: f64) -> f64 {
    f64::from_bits(x.to_bits() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_sums_stay_exact() {
        assert_eq!(add_dn(1.0, 3.0), 4.0);
        assert_eq!(add_up(1.0, 3.0), 4.0);
    }

    #[test]
    fn inexact_sum_brackets_true_value() {
        let lo = add_dn(0.1, 0.2);
        let hi = add_up(0.1, 0.2);
        assert!(lo < hi);
        assert_eq!(hi, lo.next_up());
    }

    #[test]
    fn third_is_bracketed() {
        let lo = div_dn(1.0, 3.0);
        let hi = div_up(1.0, 3.0);
        assert_eq!(hi, lo.next_up());
        assert!(mul_dn(lo, 3.0) < 1.0 || mul_dn(lo, 3.0) == 1.0);
    }

    #[test]
    fn sqrt_of_two_is_bracketed() {
        let lo = sqrt_dn(2.0);
        let hi = sqrt_up(2.0);
        assert_eq!(hi, lo.next_up());
        assert!(mul_dn(lo, lo) <= 2.0);
        assert!(mul_up(hi, hi) >= 2.0);
        assert_eq!(sqrt_dn(4.0), 2.0);
        assert_eq!(sqrt_up(4.0), 2.0);
    }

    #[test]
    fn overflow_keeps_finite_lower_bound() {
        assert_eq!(add_dn(f64::MAX, f64::MAX), f64::MAX);
        assert_eq!(add_up(f64::MAX, f64::MAX), f64::INFINITY);
        assert_eq!(mul_dn(f64::MAX, 2.0), f64::MAX);
    }

    #[test]
    fn const_neighbours() {
        assert_eq!(const_next_up(1.0), 1.0f64.next_up());
        assert_eq!(const_next_down(1.0), 1.0f64.next_down());
    }
}
