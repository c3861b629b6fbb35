//! Oracle sweeps shared by the property tests and the acceptance target.
//! Each returns a one-line summary on success and the first violation on failure.
#![allow(dead_code)]

use std::f64::consts::PI;

use conedef::gates::{
    boundary_term_bound, gate_bilip, gate_bilip_bis, gate_bilip_endpoints, gate_cone_def_exists,
    gate_hold_short_geodesics, gate_margulis, gate_short_geodesic, gate_thick_stays_thick, gate_unique_shortest,
    gate_upward, magid_bounds, BoundaryPreset, GateReport, GateStatus, LengthInput, LinkLengths, MargulisInput,
    Real, ShortParams,
};
use conedef::slopes::{enumerate_short_slopes, normalized_length, CuspShape, Slope};
use conedef::special::{
    cosh_from_tanh, growth_ratios, haze, haze_inv, haze_inv_closed_form, haze_max, haze_peak, i_func,
    r_from_tanh, sinh_diff, sinh_from_tanh, sysmin, tanh_from_r,
};
use conedef::special::quadrature::i_func_quadrature;
use conedef::{bracket_root_monotone, elem, Elem, Interval};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<String, String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pt(x: f64) -> Interval {
    Interval::point(x)
}

pub fn real(x: f64) -> Real {
    Real::interval(pt(x))
}

fn iv(a: f64, b: f64) -> Interval {
    Interval::new(a.min(b), a.max(b)).unwrap()
}

fn log_uniform(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (r.gen_range(lo.ln()..hi.ln())).exp()
}

// ---------------------------------------------------------------------------
// Interval containment

/// Random interval inside `[lo, hi]` and a point inside it.
fn sample(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> (Interval, f64) {
    let a = r.gen_range(lo..=hi);
    let b = if r.gen_bool(0.2) { a } else { r.gen_range(lo..=hi) };
    let x = iv(a, b);
    let t = if x.is_point() { x.lo() } else { r.gen_range(x.lo()..=x.hi()) };
    (x, t)
}

/// A signed value spread over many binades.
fn wide(r: &mut ChaCha8Rng) -> f64 {
    let m: f64 = r.gen_range(1.0..2.0);
    let e = r.gen_range(-30..30);
    let s = if r.gen_bool(0.5) { -1.0 } else { 1.0 };
    s * m * 2f64.powi(e)
}

/// Elementary functions whose f64 versions are libm calls with a 2-ulp bound.
const LIBM: &[(Elem, fn(f64) -> f64, f64, f64)] = &[
    (Elem::Exp, f64::exp, -700.0, 700.0),
    (Elem::Log, f64::ln, 1e-300, 1e300),
    (Elem::Sqrt, f64::sqrt, 0.0, 1e300),
    (Elem::Sin, f64::sin, -1000.0, 1000.0),
    (Elem::Cos, f64::cos, -1000.0, 1000.0),
    (Elem::Sinh, f64::sinh, -700.0, 700.0),
    (Elem::Cosh, f64::cosh, -700.0, 700.0),
    (Elem::Tanh, f64::tanh, -20.0, 20.0),
    (Elem::Atan, f64::atan, -1e6, 1e6),
    (Elem::Acos, f64::acos, -1.0, 1.0),
];

/// Functions computed from other interval operations rather than libm.
const DERIVED: &[(Elem, f64, f64)] = &[
    (Elem::Asinh, -1e6, 1e6),
    (Elem::Acosh, 1.0, 1e6),
    (Elem::Atanh, -0.999999, 0.999999),
];

/// For every trial `f(x) in F(X)` with `x in X`. Arithmetic uses the rounded
/// f64 result, which lies between the directed-rounded endpoints; libm
/// functions use the libm value; the derived functions check `F([x]) ⊆ F(X)`
/// against the mpmath-checked point enclosure.
pub fn containment_fuzz(trials: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let n_kinds = 5 + LIBM.len() + DERIVED.len();
    for k in 0..trials {
        let kind = r.gen_range(0..n_kinds);
        let fail = |what: &str, x: &dyn std::fmt::Debug, got: Interval, v: f64| {
            Err(format!("trial {k}: {what} at {x:?}: {v} not in {got}"))
        };
        if kind < 5 {
            let (a, b) = (wide(&mut r), wide(&mut r));
            let x = iv(a, a + a.abs() * r.gen_range(0.0..0.5));
            let y = iv(b, b + b.abs() * r.gen_range(0.0..0.5));
            let (s, t) = (r.gen_range(x.lo()..=x.hi()), r.gen_range(y.lo()..=y.hi()));
            if kind == 4 {
                // s^3 has no single rounded f64; it lies in the product enclosure.
                let (got, at) = (x.pow_int(3), pt(s) * pt(s) * pt(s));
                if !got.overlaps(&at) {
                    return Err(format!("trial {k}: cube({x}) = {got} misses {s}^3 in {at}"));
                }
                continue;
            }
            let (got, v, what) = match kind {
                0 => (x + y, s + t, "add"),
                1 => (x - y, s - t, "sub"),
                2 => (x * y, s * t, "mul"),
                _ => (x.div(&y).unwrap(), s / t, "div"),
            };
            if !got.contains(v) {
                return fail(what, &(x, y), got, v);
            }
        } else if kind < 5 + LIBM.len() {
            let (f, g, lo, hi) = LIBM[kind - 5];
            let (x, t) = sample(&mut r, lo, hi);
            let got = elem(x, f).map_err(|e| format!("{f:?} {x}: {e}"))?;
            if !got.contains(g(t)) {
                return fail(&format!("{f:?}"), &x, got, g(t));
            }
        } else {
            let (f, lo, hi) = DERIVED[kind - 5 - LIBM.len()];
            let (x, t) = sample(&mut r, lo, hi);
            let got = elem(x, f).map_err(|e| format!("{f:?} {x}: {e}"))?;
            let at = elem(pt(t), f).unwrap();
            if !got.contains_interval(&at) {
                return Err(format!("trial {k}: {f:?}({t}) = {at} not inside {f:?}({x}) = {got}"));
            }
        }
    }
    Ok(format!("{trials} trials, 0 violations"))
}

/// `X ⊆ Y ⇒ F(X) ⊆ F(Y)` on nested random pairs.
pub fn inclusion_monotone(trials: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let all: Vec<(Elem, f64, f64)> =
        LIBM.iter().map(|&(f, _, lo, hi)| (f, lo, hi)).chain(DERIVED.iter().copied()).collect();
    for k in 0..trials {
        let (f, lo, hi) = all[r.gen_range(0..all.len())];
        let (outer, _) = sample(&mut r, lo, hi);
        let a = r.gen_range(outer.lo()..=outer.hi());
        let b = r.gen_range(outer.lo()..=outer.hi());
        let inner = iv(a, b);
        let (fi, fo) = (elem(inner, f).unwrap(), elem(outer, f).unwrap());
        if !fo.contains_interval(&fi) {
            return Err(format!("trial {k}: {f:?}({inner}) = {fi} not in {f:?}({outer}) = {fo}"));
        }
    }
    Ok(format!("{trials} nested pairs"))
}

// ---------------------------------------------------------------------------
// Special functions

/// `2 pi / L^2 < sysmin(L) < 2 pi / (L^2 - 58)` on a grid over `[10.1, 50]`.
pub fn sysmin_sandwich(n: usize) -> Check {
    let two_pi = conedef::PI_IV * 2.0;
    for k in 0..n {
        let l = 10.1 + (50.0 - 10.1) * k as f64 / (n - 1) as f64;
        let li = pt(l);
        let s = sysmin(li).map_err(|e| format!("sysmin({l}): {e}"))?;
        let below = two_pi.div(&li.sqr()).unwrap();
        let above = two_pi.div(&(li.sqr() - 58.0)).unwrap();
        if !(below.certainly_lt(&s) && s.certainly_lt(&above)) {
            return Err(format!("L = {l}: {below} < {s} < {above} not certified"));
        }
    }
    Ok(format!("{n} grid points on [10.1, 50]"))
}

/// Bracketed `haze_inv` against an independent bracketing run and the
/// closed-form cubic root.
pub fn haze_inv_oracle(n: usize) -> Check {
    let top = haze_max().lo();
    let mut widest: f64 = 0.0;
    for k in 0..n {
        let y = top * (k as f64 + 0.5) / n as f64;
        let a = haze_inv(pt(y)).map_err(|e| format!("haze_inv({y}): {e}"))?;
        let b = bracket_root_monotone(haze, iv(haze_peak().hi(), 1.0), y, 1e-12)
            .map_err(|e| format!("bracket({y}): {e}"))?;
        let c = haze_inv_closed_form(y);
        widest = widest.max(a.width()).max(b.width());
        if !a.overlaps(&b) || a.width() > 1e-9 || b.width() > 1e-9 {
            return Err(format!("y = {y}: haze_inv {a} vs bracketing {b}"));
        }
        if (c - a.mid()).abs() > 1e-9 {
            return Err(format!("y = {y}: closed form {c} far from {a}"));
        }
    }
    Ok(format!("{n} points, widest enclosure {widest:.1e}"))
}

/// Antiderivative form of `I` against composite Simpson with a rigorous remainder.
pub fn i_quadrature_oracle(n: usize) -> Check {
    let mut widest: f64 = 0.0;
    for k in 0..n {
        let z = 0.05 + 0.9 * k as f64 / (n - 1) as f64;
        let a = i_func(pt(z)).map_err(|e| format!("I({z}): {e}"))?;
        let q = i_func_quadrature(z, 256).map_err(|e| format!("quadrature({z}): {e}"))?;
        widest = widest.max(q.width() / q.mid());
        if !a.overlaps(&q) {
            return Err(format!("z = {z}: antiderivative {a} vs quadrature {q}"));
        }
    }
    Ok(format!("{n} points, quadrature relative width <= {widest:.1e}"))
}

/// `I` increasing on `[tanh 0.531, 0.99]`, checked on consecutive grid pairs.
pub fn i_monotone(n: usize) -> Check {
    let z0 = pt(0.531).tanh().hi();
    let grid: Vec<f64> = (0..n).map(|k| z0 + (0.99 - z0) * (k as f64 + 1.0) / n as f64).collect();
    for w in grid.windows(2) {
        let (a, b) = (i_func(pt(w[0])).unwrap(), i_func(pt(w[1])).unwrap());
        if !a.certainly_lt(&b) {
            return Err(format!("I({}) = {a} not below I({}) = {b}", w[0], w[1]));
        }
    }
    Ok(format!("{} ordered pairs", n - 1))
}

/// The tanh/sinh/cosh conversions, the growth inequalities and the
/// `sinh(r - s)` factorization on random radii.
pub fn appendix_identities(trials: usize, seed: u64) -> Check {
    let mut rg = rng(seed);
    for k in 0..trials {
        let r: f64 = rg.gen_range(0.01..5.0);
        let s: f64 = rg.gen_range(0.001..r);
        let (ri, si) = (pt(r), pt(s));
        let z = tanh_from_r(ri);
        let err = |what: &str| Err(format!("trial {k}: r = {r}, s = {s}: {what}"));
        if !r_from_tanh(z).unwrap().contains(r) {
            return err("arctanh(tanh r) misses r");
        }
        if !sinh_from_tanh(z).unwrap().overlaps(&ri.sinh()) {
            return err("z/sqrt(1 - z^2) misses sinh r");
        }
        if !cosh_from_tanh(z).unwrap().overlaps(&ri.cosh()) {
            return err("1/sqrt(1 - z^2) misses cosh r");
        }
        // cosh r / cosh s < e^(r - s) < sinh r / sinh s with s < r.
        let g = growth_ratios(si, ri).unwrap();
        let strict = r - s > 1e-3;
        let ordered = if strict {
            g.cosh_ratio.certainly_lt(&g.exp_gap) && g.exp_gap.certainly_lt(&g.sinh_ratio)
        } else {
            g.cosh_ratio.lo() <= g.exp_gap.hi() && g.exp_gap.lo() <= g.sinh_ratio.hi()
        };
        if !ordered {
            return err("growth ratios out of order");
        }
        // sinh(r - s) = sinh r (cosh s - sinh s / tanh r) exactly.
        let lhs = (ri - si).sinh();
        let rhs = ri.sinh() * sinh_diff(si, z).unwrap();
        if !lhs.overlaps(&rhs) {
            return err("sinh(r - s) factorization");
        }
    }
    Ok(format!("{trials} random (r, s) pairs"))
}

// ---------------------------------------------------------------------------
// Gates

type Family = (&'static str, f64, f64, bool, fn(f64) -> conedef::Result<GateReport>);

/// Gates as functions of one size parameter. The flag is true when larger
/// values are harder (a geodesic length), false when smaller values are (a
/// slope length).
pub const GATE_FAMILIES: &[Family] = &[
    ("cone-def", 0.01, 0.2, true, |x| gate_cone_def_exists(&LinkLengths::new(vec![real(x)])?)),
    ("bilip ell", 0.001, 0.03, true, |x| gate_bilip(real(0.5), LengthInput::Ell(real(x)))),
    ("bilip L", 5.0, 40.0, false, |x| gate_bilip(real(0.5), LengthInput::L(real(x)))),
    ("bilip-bis", 1e-7, 1e-4, true, |x| gate_bilip_bis(real(0.05), real(x), real(1.1))),
    ("bilip-endpoints ell", 1e-9, 1e-5, true, |x| gate_bilip_endpoints(real(0.2), LengthInput::Ell(real(x)))),
    ("bilip-endpoints L", 2000.0, 80000.0, false, |x| gate_bilip_endpoints(real(0.2), LengthInput::L(real(x)))),
    ("boundary-term", 0.001, 0.1, true, |x| {
        let (dmax, b) = BoundaryPreset::Standard.params();
        boundary_term_bound(real(0.5), real(x), dmax, b)
    }),
    ("magid ell", 0.01, 0.2, true, |x| magid_bounds(LengthInput::Ell(real(x)), real(0.8))),
    ("magid L", 5.0, 20.0, false, |x| magid_bounds(LengthInput::L(real(x)), real(0.8))),
    ("upward", 5.0, 15.0, false, |x| gate_upward(LengthInput::L(real(x)), real(0.7))),
    ("unique-shortest", 10.1, 12.0, false, |x| gate_unique_shortest(LengthInput::L(real(x)), real(0.1))),
    ("short-geodesic drill", 0.02, 0.2, true, |x| gate_short_geodesic(ShortParams::Drill { ell: real(x), m: real(0.02) })),
    ("short-geodesic fill", 8.0, 16.0, false, |x| {
        gate_short_geodesic(ShortParams::Fill { size: LengthInput::L(real(x)), m: real(0.05) })
    }),
    ("hold-short-geodesics", 0.02, 0.4, true, |x| gate_hold_short_geodesics(real(x), real(0.02))),
    ("thick-stays-thick", 1e-9, 1e-6, true, |x| gate_thick_stays_thick(real(0.2), real(1.1), Some(real(x)))),
    ("margulis fill", 1e3, 1e6, false, |x| {
        gate_margulis(MargulisInput::Fill { eps: real(0.2), j: real(1.1), size: LengthInput::L(real(x)) })
    }),
    ("margulis drill sys", 1e-9, 1e-6, true, |x| gate_margulis(MargulisInput::DrillSystole { sys: real(x) })),
    ("margulis drill total", 1e-5, 1e-3, true, |x| gate_margulis(MargulisInput::DrillTotal { total: real(x) })),
];

/// A harder input never turns Refuted into Certified. Every family must see
/// both outcomes, so the ranges straddle each threshold.
pub fn gate_monotonicity(pairs_per_family: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let mut total = 0;
    for &(name, lo, hi, larger_is_harder, gate) in GATE_FAMILIES {
        let mut seen = (false, false);
        for _ in 0..pairs_per_family {
            let (a, b) = (log_uniform(&mut r, lo, hi), log_uniform(&mut r, lo, hi));
            let (small, large) = (a.min(b), a.max(b));
            let (easy, hard) = if larger_is_harder { (small, large) } else { (large, small) };
            let se = gate(easy).map_err(|e| format!("{name}({easy}): {e}"))?.status;
            let sh = gate(hard).map_err(|e| format!("{name}({hard}): {e}"))?.status;
            if se == GateStatus::Refuted && sh == GateStatus::Certified {
                return Err(format!("{name}: {easy} refuted but harder {hard} certified"));
            }
            if sh == GateStatus::Certified && se != GateStatus::Certified {
                return Err(format!("{name}: {hard} certified but easier {easy} is {se:?}"));
            }
            seen.0 |= se == GateStatus::Certified || sh == GateStatus::Certified;
            seen.1 |= se == GateStatus::Refuted || sh == GateStatus::Refuted;
            total += 1;
        }
        if !(seen.0 && seen.1) {
            return Err(format!("{name}: range [{lo}, {hi}] does not straddle the threshold"));
        }
    }
    Ok(format!("{total} ordered pairs over {} gate families", GATE_FAMILIES.len()))
}

// ---------------------------------------------------------------------------
// Slopes

/// A random cusp: shape in the modular fundamental domain, random scale and
/// rotation, then a random unimodular change of basis.
pub fn random_cusp(r: &mut ChaCha8Rng, max_im: f64) -> CuspShape {
    let x: f64 = r.gen_range(-0.5..=0.5);
    let y: f64 = r.gen_range((1.0 - x * x).sqrt()..max_im);
    let scale = log_uniform(r, 0.05, 20.0);
    let th: f64 = r.gen_range(0.0..2.0 * PI);
    let mu = (scale * th.cos(), scale * th.sin());
    let la = (scale * (x * th.cos() - y * th.sin()), scale * (x * th.sin() + y * th.cos()));
    // Products of T^k and S keep the determinant 1.
    let (mut a, mut b, mut c, mut d) = (1i64, 0i64, 0i64, 1i64);
    for _ in 0..r.gen_range(0..3) {
        let k = r.gen_range(-2..=2);
        (a, b, c, d) = (a + k * c, b + k * d, c, d);
        (a, b, c, d) = (c, d, -a, -b);
    }
    let comb = |p: i64, q: i64| (p as f64 * mu.0 + q as f64 * la.0, p as f64 * mu.1 + q as f64 * la.1);
    let (m2, l2) = (comb(a, b), comb(c, d));
    let (m2, l2) = if m2.0 * l2.1 - m2.1 * l2.0 < 0.0 { (l2, m2) } else { (m2, l2) };
    CuspShape::new([real(m2.0), real(m2.1)], [real(l2.0), real(l2.1)]).unwrap()
}

fn f64_pair(c: [Real; 2]) -> (f64, f64) {
    (c[0].iv().mid(), c[1].iv().mid())
}

/// Brute force: all primitive slopes with `|p|, |q|` up to a bound derived
/// from `|v| >= area |p| / |lambda|`, classified in f64 with a relative guard band.
fn brute_force(cusp: &CuspShape, cutoff: f64) -> (Vec<Slope>, Vec<Slope>) {
    let (m, l) = (f64_pair(cusp.meridian()), f64_pair(cusp.longitude()));
    let area = (m.0 * l.1 - m.1 * l.0).abs();
    let radius = cutoff * area.sqrt();
    let pmax = (radius * l.0.hypot(l.1) / area * 1.01) as i64 + 2;
    let qmax = (radius * m.0.hypot(m.1) / area * 1.01) as i64 + 2;
    let (mut sure, mut near) = (Vec::new(), Vec::new());
    for p in 0..=pmax {
        for q in -qmax..=qmax {
            let Ok(s) = Slope::new(p, q) else { continue };
            if s.p() != p || s.q() != q {
                continue;
            }
            let v = (p as f64 * m.0 + q as f64 * l.0, p as f64 * m.1 + q as f64 * l.1);
            let l2 = (v.0 * v.0 + v.1 * v.1) / area;
            let c2 = cutoff * cutoff;
            if l2 < c2 * (1.0 - 1e-9) {
                sure.push(s);
            } else if l2 <= c2 * (1.0 + 1e-9) {
                near.push(s);
            }
        }
    }
    (sure, near)
}

/// Enumeration against brute force on random lattices: every certain slope
/// is found, and nothing outside the guard band is reported.
pub fn slope_brute_force(lattices: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let mut compared = 0;
    for k in 0..lattices {
        let cusp = random_cusp(&mut r, 12.0);
        let cutoff: f64 = r.gen_range(1.5..12.0);
        let got = enumerate_short_slopes(&cusp, pt(cutoff)).map_err(|e| format!("lattice {k}: {e}"))?;
        let (sure, near) = brute_force(&cusp, cutoff);
        let all = got.all();
        for s in &sure {
            if !all.contains(s) {
                return Err(format!("lattice {k}, cutoff {cutoff}: missed {s}"));
            }
        }
        for s in &all {
            if !sure.contains(s) && !near.contains(s) {
                return Err(format!("lattice {k}, cutoff {cutoff}: spurious {s}"));
            }
        }
        for s in &got.inside {
            if near.contains(s) && !normalized_length(&cusp, *s).certainly_lt(&pt(cutoff)) {
                return Err(format!("lattice {k}: {s} certified inside without separation"));
            }
        }
        compared += sure.len();
    }
    Ok(format!("{lattices} lattices, {compared} slopes matched"))
}

/// At most 104 slopes of normalized length below 10.1, boundary cases included.
pub fn agol_cap(lattices: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let mut most = 0;
    for k in 0..lattices {
        let cusp = random_cusp(&mut r, 30.0);
        let s = enumerate_short_slopes(&cusp, pt(10.1)).map_err(|e| format!("lattice {k}: {e}"))?;
        let n = s.inside.len() + s.boundary.len();
        if n > 104 {
            return Err(format!("lattice {k}: {n} slopes shorter than 10.1"));
        }
        most = most.max(n);
    }
    Ok(format!("{lattices} lattices, largest count {most}"))
}

/// Normalized lengths agree to 2 ulps after scaling the lattice.
pub fn scale_invariance(lattices: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let ulps2 = |x: f64| 2.0 * (x.next_up() - x);
    for k in 0..lattices {
        let cusp = random_cusp(&mut r, 6.0);
        let slopes = enumerate_short_slopes(&cusp, pt(6.0)).unwrap().all();
        for c in [0.1, 3.0, 100.0] {
            let scaled = cusp.scaled(Real::parse(&c.to_string()).unwrap()).unwrap();
            for s in &slopes {
                let (a, b) = (normalized_length(&cusp, *s), normalized_length(&scaled, *s));
                if a.lo() > b.hi() + ulps2(b.hi()) || b.lo() > a.hi() + ulps2(a.hi()) {
                    return Err(format!("lattice {k}, c = {c}, {s}: {a} vs {b}"));
                }
            }
        }
    }
    Ok(format!("{lattices} lattices x c in {{0.1, 3, 100}}"))
}
