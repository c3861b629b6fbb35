//! Independent evaluation of the threshold integral by composite Simpson
//! quadrature with a rigorous remainder.
//!
//! The remainder `-(b - a) h^4 p''''(xi) / 180` is enclosed by evaluating
//! `p''''` with order-4 Taylor jets over subintervals of `[a, b]`.

use super::{div, four_pi_sq};
use crate::constants::H_SCALE;
use crate::error::{Error, Result};
use crate::interval::Interval;

/// Truncated Taylor series `c0 + c1 t + ... + c4 t^4` with interval coefficients.
#[derive(Clone, Copy, Debug)]
pub struct Jet(pub [Interval; 5]);

impl Jet {
    pub fn constant(c: f64) -> Jet {
        let mut v = [Interval::ZERO; 5];
        v[0] = Interval::point(c);
        Jet(v)
    }

    /// The independent variable expanded at `x`.
    pub fn var(x: Interval) -> Jet {
        let mut v = [Interval::ZERO; 5];
        v[0] = x;
        v[1] = Interval::ONE;
        Jet(v)
    }

    pub fn add(&self, o: &Jet) -> Jet {
        Jet(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    pub fn scale(&self, c: f64) -> Jet {
        Jet(std::array::from_fn(|i| self.0[i] * c))
    }

    pub fn mul(&self, o: &Jet) -> Jet {
        Jet(std::array::from_fn(|k| {
            (0..=k).fold(Interval::ZERO, |acc, j| acc + self.0[j] * o.0[k - j])
        }))
    }

    pub fn recip(&self) -> Result<Jet> {
        let inv0 = self.0[0].recip()?;
        let mut h = [Interval::ZERO; 5];
        h[0] = inv0;
        for k in 1..5 {
            let s = (1..=k).fold(Interval::ZERO, |acc, j| acc + self.0[j] * h[k - j]);
            h[k] = -(inv0 * s);
        }
        Ok(Jet(h))
    }

    pub fn div(&self, o: &Jet) -> Result<Jet> {
        Ok(self.mul(&o.recip()?))
    }

    /// `k`-th derivative at the expansion point: `k! c_k`.
    pub fn derivative(&self, k: usize) -> Interval {
        let fact: f64 = (1..=k).map(|i| i as f64).product();
        self.0[k] * fact
    }
}

/// The integrand `p(w) = (1 + 4w + 6w^2 + w^4) / ((1 + w)(1 + w^2)^2)` as a jet.
pub fn integrand_jet(x: Interval) -> Result<Jet> {
    let w = Jet::var(x);
    let one = Jet::constant(1.0);
    let w2 = w.mul(&w);
    let num = one.add(&w.scale(4.0)).add(&w2.scale(6.0)).add(&w2.mul(&w2));
    let q = one.add(&w2);
    let den = one.add(&w).mul(&q).mul(&q);
    num.div(&den)
}

fn integrand(x: Interval) -> Result<Interval> {
    let x2 = x.sqr();
    let num = Interval::ONE + x * 4.0 + x2 * 6.0 + x2.sqr();
    let den = (Interval::ONE + x) * (Interval::ONE + x2).sqr();
    div("integrand", num, den)
}

/// Enclosure of `int_z^1 p(w) dw` by composite Simpson with `n` (even) panels.
pub fn simpson_integral(z: f64, n: usize) -> Result<Interval> {
    if !(0.0..1.0).contains(&z) || n < 2 || n % 2 == 1 {
        return Err(Error::domain("simpson_integral", z, z, "needs 0 <= z < 1 and even n >= 2"));
    }
    let a = Interval::point(z);
    let h = div("simpson_integral", Interval::ONE - a, Interval::point(n as f64))?;
    let mut sum = Interval::ZERO;
    for i in 0..=n {
        let x = if i == n { Interval::ONE } else { a + h * i as f64 };
        let w = if i == 0 || i == n {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        sum = sum + integrand(x)? * w;
    }
    let simpson = h * sum * (1.0 / 3.0);
    let third = div("simpson_integral", Interval::ONE, Interval::point(3.0))?;
    let simpson = simpson.hull(&(h * sum * third));

    // Fourth derivative over [z, 1], hulled over the panels.
    let mut d4: Option<Interval> = None;
    for i in 0..n {
        let lo = (a + h * i as f64).lo();
        let hi = if i + 1 == n { 1.0 } else { (a + h * (i + 1) as f64).hi() };
        let d = integrand_jet(Interval::new(lo, hi)?)?.derivative(4);
        d4 = Some(d4.map_or(d, |acc| acc.hull(&d)));
    }
    let d4 = d4.expect("n >= 2");
    let rem = -((Interval::ONE - a) * h.pow_int(4) * d4 * (1.0 / 180.0));
    let rem = rem.hull(&-(div("simpson_integral", (Interval::ONE - a) * h.pow_int(4) * d4, Interval::point(180.0))?));
    Ok(simpson + rem)
}

/// `I(z)` computed from [`simpson_integral`] instead of the antiderivative.
pub fn i_func_quadrature(z: f64, n: usize) -> Result<Interval> {
    let a = Interval::point(z);
    let integral = simpson_integral(z, n)?;
    div("I", four_pi_sq() * integral.exp(), H_SCALE * (Interval::ONE - a))
}
