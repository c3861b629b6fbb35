//! Existence of the cone deformation, its filling form, the two-sided
//! length estimate, and the systole conditions for cosmetic surgery.

use super::{Gate, GateReport, LengthInput, LinkLengths, Real, Verdict};
use crate::constants::{
    text, CONE_COMPONENT, CONE_TOTAL, COSMETIC_L, MAGID_Z, SYS_UPPER_SHIFT,
};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::special::{
    g_tilde, g_upper, h_inv, haze, haze_inv, i_func, sysmin,
};

fn two_pi() -> Interval {
    crate::interval::PI_IV * 2.0
}

fn inv_sqrt3() -> Interval {
    Interval::point(3.0).sqrt().expect("positive").recip().expect("nonzero")
}

fn c(text: &str) -> Real {
    Real::parse(text).expect("constant text is a decimal")
}

/// Cone deformation from the drilled to the filled manifold exists when every
/// component has length at most `0.0996` and the total is at most `0.15601`.
pub fn gate_cone_def_exists(lengths: &LinkLengths) -> Result<GateReport> {
    let mut g = Gate::new("cone-def", "cone-deformation-exists");
    g.input("lengths", lengths.components());
    let cap = c(text::CONE_COMPONENT);
    for (j, l) in lengths.components().iter().enumerate() {
        g.check(&format!("ell_{j} <= 0.0996"), l.cmp_le(&cap));
    }
    let total = lengths.total();
    g.check("ell <= 0.15601", total.cmp_le(&c(text::CONE_TOTAL)));
    debug_assert!(CONE_COMPONENT.hi() < CONE_TOTAL.lo());
    g.finish(|q| {
        let area = two_pi() * total.iv();
        let r_min = h_inv(area)?;
        q.set("ell", total.iv());
        q.set("R_min", r_min);
        q.set("Z_min", haze_inv(area)?);
        if r_min.lo() < inv_sqrt3().atanh()?.lo() {
            return Err(Error::domain("cone-def", r_min.lo(), r_min.hi(), "R_min below arctanh(1/sqrt 3)"));
        }
        Ok(())
    })
}

/// Filling form: the deformation keeps a tube of radius `arctanh Z` when `L^2 >= I(Z)`.
pub fn gate_upward(size: LengthInput, target_z: Real) -> Result<GateReport> {
    let l2 = size.l2().ok_or_else(|| Error::Parse { what: "upward", text: "needs L or L2".into() })?;
    let z = target_z.iv();
    if z.lo() < inv_sqrt3().lo() {
        return Err(Error::domain("upward", z.lo(), z.hi(), "needs Z >= 1/sqrt 3"));
    }
    let mut g = Gate::new("upward", "upward-threshold");
    size.record(&mut g);
    g.input("Z", &target_z);
    let i = i_func(z)?;
    g.check("L^2 >= I(Z)", Verdict::le(i, l2.iv()));
    g.finish(|q| {
        q.set("I", i);
        q.set("L2", l2.iv());
        q.set("R", z.atanh()?);
        Ok(())
    })
}

/// Two-sided estimate `2 pi/(L^2 + (2 pi)^2 G~(Z)) < l < 2 pi/(L^2 - (2 pi)^2 G(Z))`,
/// or its inversion for `L^2` when `l` is given.
pub fn magid_bounds(size: LengthInput, z_min: Real) -> Result<GateReport> {
    let z = z_min.iv();
    if z.lo() < MAGID_Z.lo() || !(z.hi() < 1.0) {
        return Err(Error::domain("magid", z.lo(), z.hi(), "needs 0.6622 <= Z_min < 1"));
    }
    let mut g = Gate::new("magid", "length-two-sided");
    size.record(&mut g);
    g.input("Z_min", &z_min);
    let s = two_pi().sqr();
    let a = Interval::point((s * g_tilde(z)?).hi());
    let b = Interval::point((s * g_upper(z)?).hi());
    match size {
        LengthInput::Ell(ell) => {
            let cap = haze(z)?.div(&two_pi())?;
            g.check("ell <= haze(Z_min)/(2 pi)", Verdict::le(ell.iv(), cap));
            g.finish(|q| {
                let base = two_pi().div(&ell.iv())?;
                let lo = base - a;
                let hi = base + b;
                q.set("L2_lower", lo);
                q.set("L2_upper", hi);
                q.set("L2", Interval::new(lo.lo(), hi.hi())?);
                Ok(())
            })
        }
        _ => {
            let l2 = size.l2().expect("filling form").iv();
            let i = i_func(z)?;
            g.check("L^2 >= I(Z_min)", Verdict::le(i, l2));
            g.finish(|q| {
                let lo = two_pi().div(&(l2 + a))?;
                let hi = two_pi().div(&(l2 - b))?;
                q.set("ell_lower", lo);
                q.set("ell_upper", hi);
                q.set("ell", Interval::new(lo.lo(), hi.hi())?);
                q.set("I", i);
                Ok(())
            })
        }
    }
}

/// The link is the unique set of shortest geodesics when `sys >= sysmin(L)`.
pub fn gate_unique_shortest(size: LengthInput, sys: Real) -> Result<GateReport> {
    let l = size.l().ok_or_else(|| Error::Parse { what: "unique-shortest", text: "needs L or L2".into() })??;
    if l.lo() < COSMETIC_L.lo() {
        return Err(Error::domain("unique-shortest", l.lo(), l.hi(), "needs L >= 10.1"));
    }
    let mut g = Gate::new("unique-shortest", "unique-shortest");
    size.record(&mut g);
    g.input("sys", &sys);
    let s = sysmin(l)?;
    g.check("sys >= sysmin(L)", Verdict::le(s, sys.iv()));
    g.finish(|q| {
        q.set("sysmin", s);
        q.set("cosmetic_cutoff", cosmetic_cutoff(sys.iv())?);
        Ok(())
    })
}

/// `max{10.1, sqrt(2 pi/sys + 58)}`.
pub fn cosmetic_cutoff(sys: Interval) -> Result<Interval> {
    if !(sys.lo() > 0.0) {
        return Err(Error::domain("cosmetic_cutoff", sys.lo(), sys.hi(), "needs sys > 0"));
    }
    let branch = (two_pi().div(&sys)? + SYS_UPPER_SHIFT).sqrt()?;
    Ok(COSMETIC_L.max(&branch))
}
