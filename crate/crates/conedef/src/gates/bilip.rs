//! Bilipschitz constants of the deformation, the boundary-term coefficient and
//! the pointwise norm bound built from it.

use serde::{Deserialize, Serialize};

use super::{require_range, Direction, Gate, GateReport, LengthInput, Real, Verdict};
use crate::constants::{
    text, BILIPBIS_DELTA_MAX, BILIP_DELTA_MAX, BOUNDARY_C_MED, BOUNDARY_C_STD, BOUNDARY_C_TINY,
    ENDPOINT_C, ENDPOINT_EPS_SCALE, ENDPOINT_J, MARGULIS_SHIFT, PUISEUX_C_106, PUISEUX_C_938,
    THICK_LOG3_SHIFT,
};
use crate::error::{Error, Result};
use crate::interval::{Interval, PI_IV};
use crate::special::{g_tilde, haze_inv, mean_value_multiplier};

fn c(text: &str) -> Real {
    Real::parse(text).expect("constant text is a decimal")
}

fn ln3() -> Interval {
    Interval::point(3.0).ln().expect("positive")
}

fn j_max() -> Interval {
    Interval::point(0.2).exp()
}

/// `delta^(5/2)`.
fn d52(delta: Interval) -> Result<Interval> {
    delta.powf(2.5)
}

fn fill_only(size: LengthInput, what: &'static str) -> Result<Real> {
    size.l2().ok_or_else(|| Error::Parse { what, text: "needs L or L2".into() })
}

/// `J = exp(7.193 l / delta^(5/2))` when `l <= delta^2/17.11`, or when
/// `L^2 >= 107.6/delta^2 + 14.41` which forces `l <= 2 pi/(L^2 - 14.41)`.
pub fn gate_bilip(delta: Real, size: LengthInput) -> Result<GateReport> {
    require_range("bilip", delta.iv(), 0.0, BILIP_DELTA_MAX, "0 < delta <= 0.938")?;
    let mut g = Gate::new("bilip", "bilipschitz");
    g.input("delta", &delta);
    size.record(&mut g);
    let d2 = delta.sqr();
    let ell = match size {
        LengthInput::Ell(ell) => {
            g.check("17.11 ell <= delta^2", ell.mul(c(text::BILIP_ELL)).cmp_le(&d2));
            ell.iv()
        }
        _ => {
            let l2 = fill_only(size, "bilip")?;
            let lhs = l2.sub(c(text::BILIP_L_SHIFT)).mul(d2);
            g.check("(L^2 - 14.41) delta^2 >= 107.6", c(text::BILIP_L_NUM).cmp_le(&lhs));
            let den = l2.iv() - crate::constants::BILIP_L_SHIFT;
            if !(den.lo() > 0.0) {
                Interval::ZERO
            } else {
                let up = (PI_IV * 2.0).div(&den)?;
                Interval::new(0.0, up.hi())?
            }
        }
    };
    g.finish(|q| {
        let j = (crate::constants::BILIP_J * ell.div(&d52(delta.iv())?)?).exp();
        q.set("J", j);
        q.set("ell", ell);
        Ok(())
    })
}

/// Small-`delta` form: `l <= delta^(5/2) log J / 3.324` for `delta <= 0.012`,
/// `/ 3.498` for `0.012 < delta <= 0.106`.
pub fn gate_bilip_bis(delta: Real, ell: Real, j: Real) -> Result<GateReport> {
    require_range("bilip-bis", delta.iv(), 0.0, BILIPBIS_DELTA_MAX, "0 < delta <= 0.106")?;
    require_range("bilip-bis", j.iv(), 1.0, j_max(), "1 < J <= e^(1/5)")?;
    let mut g = Gate::new("bilip-bis", "bilipschitz-small-delta");
    g.input("delta", &delta);
    g.input("ell", &ell);
    g.input("J", &j);
    let (constant, regime) = match delta.cmp_le(&c(text::BILIPBIS_SPLIT)) {
        Verdict::Holds => (crate::constants::BILIPBIS_TINY, "tiny"),
        Verdict::Fails => (crate::constants::BILIPBIS_MED, "medium"),
        Verdict::Unknown => {
            g.note("delta straddles 0.012; used the medium constant, valid on both sides");
            (crate::constants::BILIPBIS_MED, "medium")
        }
    };
    g.note(format!("regime: {regime}"));
    let threshold = (d52(delta.iv())? * j.iv().ln()?).div(&constant)?;
    g.check("ell <= delta^(5/2) log J / c", Verdict::le(ell.iv(), threshold));
    g.finish(|q| {
        q.set("threshold", threshold);
        q.set("constant", constant);
        q.set("J", j.iv());
        Ok(())
    })
}

/// Drilling threshold `min{delta^2/17.11, delta^(5/2) log J / 7.193}` on `l`, or
/// filling threshold `max{107.6/delta^2, 45.20/(delta^(5/2) log J)} + 14.41` on `L^2`.
pub fn effective_bb_threshold(delta: Interval, j: Interval, dir: Direction) -> Result<Interval> {
    Ok(effective_bb_branches(delta, j, dir)?.2)
}

fn effective_bb_branches(delta: Interval, j: Interval, dir: Direction) -> Result<(Interval, Interval, Interval)> {
    use crate::constants::{BILIP_ELL, BILIP_FILL_J, BILIP_J, BILIP_L_NUM, BILIP_L_SHIFT};
    require_range("effective-bb", delta, 0.0, BILIP_DELTA_MAX, "0 < delta <= 0.938")?;
    if !(j.lo() > 1.0) {
        return Err(Error::domain("effective-bb", j.lo(), j.hi(), "needs J > 1"));
    }
    let d52 = d52(delta)?;
    let lj = j.ln()?;
    Ok(match dir {
        Direction::Drill => {
            let a = delta.sqr().div(&BILIP_ELL)?;
            let b = (d52 * lj).div(&BILIP_J)?;
            (a, b, a.min(&b))
        }
        Direction::Fill => {
            let a = BILIP_L_NUM.div(&delta.sqr())? + BILIP_L_SHIFT;
            let b = BILIP_FILL_J.div(&(d52 * lj))? + BILIP_L_SHIFT;
            (a, b, a.max(&b))
        }
    })
}

/// Report form of [`effective_bb_threshold`], naming the dominant branch when it is certain.
pub fn gate_effective_bb(delta: Real, j: Real, dir: Direction) -> Result<GateReport> {
    let (a, b, t) = effective_bb_branches(delta.iv(), j.iv(), dir)?;
    let mut g = Gate::new("effective-bb", "bilipschitz-effective");
    g.input("delta", &delta);
    g.input("J", &j);
    g.input("direction", &dir);
    let first_wins = match dir {
        Direction::Drill => Verdict::lt(a, b),
        Direction::Fill => Verdict::lt(b, a),
    };
    g.note(match first_wins {
        Verdict::Holds => "dominant branch: delta-only",
        Verdict::Fails => "dominant branch: log J",
        Verdict::Unknown => "dominant branch: undecided",
    });
    g.finish(|q| {
        let name = match dir {
            Direction::Drill => "ell_threshold",
            Direction::Fill => "L2_threshold",
        };
        q.set(name, t);
        q.set("delta_branch", a);
        q.set("log_j_branch", b);
        Ok(())
    })
}

fn endpoint_ell_threshold(eps: Interval) -> Result<Interval> {
    let ch = (ENDPOINT_EPS_SCALE * eps + THICK_LOG3_SHIFT).cosh();
    eps.pow_int(5).div(&(ENDPOINT_C * ch.pow_int(5)))
}

/// Endpoint bilipschitz bound: `l <= eps^5/(6771 cosh^5(0.6 eps + 0.1475))` gives
/// `J = exp(11.35 l / eps^(5/2))`; the filling form needs
/// `L^2 >= 2 pi 6771 cosh^5(0.6 eps + 0.1475)/eps^5 + 11.7`.
pub fn gate_bilip_endpoints(eps: Real, size: LengthInput) -> Result<GateReport> {
    require_range("bilip-endpoints", eps.iv(), 0.0, ln3(), "0 < eps <= log 3")?;
    let mut g = Gate::new("bilip-endpoints", "bilipschitz-endpoints");
    g.input("eps", &eps);
    size.record(&mut g);
    let t = endpoint_ell_threshold(eps.iv())?;
    let l2_threshold = (PI_IV * 2.0).div(&t)? + MARGULIS_SHIFT;
    let ell = match size {
        LengthInput::Ell(ell) => {
            g.check("ell <= eps^5/(6771 cosh^5(0.6 eps + 0.1475))", Verdict::le(ell.iv(), t));
            ell.iv()
        }
        _ => {
            let l2 = fill_only(size, "bilip-endpoints")?.iv();
            g.check("L^2 >= threshold", Verdict::le(l2_threshold, l2));
            let den = l2 - MARGULIS_SHIFT;
            if den.lo() > 0.0 {
                Interval::new(0.0, (PI_IV * 2.0).div(&den)?.hi())?
            } else {
                Interval::ZERO
            }
        }
    };
    g.finish(|q| {
        let j = (ENDPOINT_J * ell.div(&d52(eps.iv())?)?).exp();
        q.set("J", j);
        q.set("ell", ell);
        q.set("ell_threshold", t);
        q.set("L2_threshold", l2_threshold);
        q.set("thick_ratio", Interval::from_decimal("1.2")?);
        Ok(())
    })
}

/// The bound `B` in the hypothesis `l <= delta^2 B(delta)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BFunction {
    /// `B(delta) = 1/denom`.
    Constant { denom: Real },
    /// `B(delta) = sqrt(delta)/denom`.
    SqrtOver { denom: Real },
}

impl BFunction {
    pub fn eval(&self, delta: Interval) -> Result<Interval> {
        match self {
            BFunction::Constant { denom } => denom.iv().recip(),
            BFunction::SqrtOver { denom } => delta.sqrt()?.div(&denom.iv()),
        }
    }
}

/// The three published `(delta_max, B)` choices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryPreset {
    /// `delta_max = 0.938`, `B = 1/17.11`; published coefficient `7.935`.
    Standard,
    /// `delta_max = 0.106`, `B = sqrt(delta)/17.49`; published `15.616`.
    Medium,
    /// `delta_max = 0.012`, `B = sqrt(delta)/16.62`; published `16.432`.
    Tiny,
}

impl BoundaryPreset {
    pub fn params(self) -> (Real, BFunction) {
        match self {
            BoundaryPreset::Standard => {
                (c(text::BILIP_DELTA_MAX), BFunction::Constant { denom: c(text::BILIP_ELL) })
            }
            BoundaryPreset::Medium => {
                (c(text::BILIPBIS_DELTA_MAX), BFunction::SqrtOver { denom: c(text::BOUNDARY_B_MED) })
            }
            BoundaryPreset::Tiny => {
                (c(text::BILIPBIS_SPLIT), BFunction::SqrtOver { denom: c(text::BOUNDARY_B_TINY) })
            }
        }
    }

    pub fn published(self) -> Interval {
        match self {
            BoundaryPreset::Standard => BOUNDARY_C_STD,
            BoundaryPreset::Medium => BOUNDARY_C_MED,
            BoundaryPreset::Tiny => BOUNDARY_C_TINY,
        }
    }
}

/// Coefficient `c` with `b <= (l/(c delta))^2`:
/// `c = 2 D sqrt(A z (3 - z^2))` where
/// `A = (sqrt 3/2)(cosh dm - sinh dm sqrt(3 + 4 pi^2 B^2)/sqrt 3)`,
/// `z = tanh(asinh(sqrt 3/(2 pi B))/2 - dm/2)`,
/// `D = 2 pi - 4 pi^2 G~(Z) dm^2 B` and `Z = haze^-1(2 pi dm^2 B)`, all at `B = B(dm)`.
pub fn boundary_coefficient(delta_max: Interval, b: BFunction) -> Result<Interval> {
    require_range("boundary-term", delta_max, 0.0, BILIP_DELTA_MAX, "0 < delta_max <= 0.938")?;
    let bm = b.eval(delta_max)?;
    let cap = crate::constants::BILIP_ELL.recip()?;
    if bm.hi() > cap.hi() || !(bm.lo() > 0.0) {
        return Err(Error::domain("boundary-term", bm.lo(), bm.hi(), "needs 0 < B(delta_max) <= 1/17.11"));
    }
    let two_pi = PI_IV * 2.0;
    let s3 = Interval::point(3.0).sqrt()?;
    let root = (Interval::point(3.0) + (two_pi * bm).sqr()).sqrt()?;
    let area = s3 * 0.5 * (delta_max.cosh() - delta_max.sinh() * root.div(&s3)?);
    if !(area.lo() > 0.0) {
        return Err(Error::domain("boundary-term", area.lo(), area.hi(), "area coefficient must be positive"));
    }
    let z = ((s3.div(&(two_pi * bm))?).asinh() * 0.5 - delta_max * 0.5).tanh();
    if z.lo() < s3.recip()?.lo() {
        return Err(Error::domain("boundary-term", z.lo(), z.hi(), "needs z_Bd >= 1/sqrt 3"));
    }
    let load = delta_max.sqr() * bm;
    let zmin = haze_inv(two_pi * load)?;
    let d = two_pi - two_pi.sqr() * g_tilde(zmin)? * load;
    if !(d.lo() > 0.0) {
        return Err(Error::domain("boundary-term", d.lo(), d.hi(), "denominator must be positive"));
    }
    Ok(d * 2.0 * (area * z * (Interval::point(3.0) - z.sqr())).sqrt()?)
}

/// Boundary-term bound `b <= (l/(c delta))^2` under `delta <= delta_max` and `l <= delta^2 B(delta)`.
pub fn boundary_term_bound(delta: Real, ell: Real, delta_max: Real, b: BFunction) -> Result<GateReport> {
    require_range("boundary-term", delta.iv(), 0.0, delta_max.iv(), "0 < delta <= delta_max")?;
    let coeff = boundary_coefficient(delta_max.iv(), b)?;
    let mut g = Gate::new("boundary-term", "boundary-term");
    g.input("delta", &delta);
    g.input("ell", &ell);
    g.input("delta_max", &delta_max);
    g.input("B", &b);
    let cap = delta.iv().sqr() * b.eval(delta.iv())?;
    let verdict = match (b, ell.dec(), delta.dec()) {
        (BFunction::Constant { denom }, Some(_), Some(_)) => ell.mul(denom).cmp_le(&delta.sqr()),
        _ => Verdict::le(ell.iv(), cap),
    };
    g.check("ell <= delta^2 B(delta)", verdict);
    g.finish(|q| {
        q.set("c", coeff);
        q.set("b_bound", ell.iv().div(&(coeff * delta.iv()))?.sqr());
        Ok(())
    })
}

/// Which boundary coefficient and mean-value envelope the pointwise bound uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointwiseRegime {
    /// `delta <= 0.938`, coefficients `7.935` and `1.046`.
    Standard,
    /// `delta <= 0.106`, coefficients `15.616` and `1.001`.
    Tight106,
    /// `delta <= 0.012`, coefficients `16.432` and `1.001`.
    Tight012,
}

impl PointwiseRegime {
    fn params(self) -> (Interval, Interval, Interval) {
        match self {
            PointwiseRegime::Standard => (BILIP_DELTA_MAX, BOUNDARY_C_STD, PUISEUX_C_938),
            PointwiseRegime::Tight106 => (BILIPBIS_DELTA_MAX, BOUNDARY_C_MED, PUISEUX_C_106),
            PointwiseRegime::Tight012 => (crate::constants::BILIPBIS_SPLIT, BOUNDARY_C_TINY, PUISEUX_C_106),
        }
    }
}

/// `mean_value_multiplier(delta/2) * l/(c delta)`, the pointwise bound on the deformation.
pub fn pointwise_norm_bound(delta: Interval, ell: Interval, regime: PointwiseRegime) -> Result<Interval> {
    let (dmax, coeff, _) = regime.params();
    require_range("pointwise-norm", delta, 0.0, dmax, "delta within the regime range")?;
    if ell.lo() < 0.0 {
        return Err(Error::domain("pointwise-norm", ell.lo(), ell.hi(), "needs ell >= 0"));
    }
    Ok(mean_value_multiplier(delta * 0.5)? * ell.div(&(coeff * delta))?)
}

/// Envelope coefficient `C sqrt 2 sqrt(3/pi)/c`, so the bound is at most this times `l/delta^(5/2)`.
pub fn pointwise_coefficient(regime: PointwiseRegime) -> Result<Interval> {
    let (_, coeff, puiseux) = regime.params();
    let s = Interval::point(2.0).sqrt()? * Interval::point(3.0).div(&PI_IV)?.sqrt()?;
    (puiseux * s).div(&coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{POINTWISE_STD, POINTWISE_TIGHT};
    use crate::gates::GateStatus;

    fn r(s: &str) -> Real {
        Real::parse(s).unwrap()
    }

    #[test]
    fn bilip_examples() {
        let d = r("0.938");
        let cap = d.iv().sqr().div(&crate::constants::BILIP_ELL).unwrap();
        let rep = gate_bilip(d, LengthInput::Ell(Real::interval(Interval::point(cap.lo())))).unwrap();
        assert!(rep.is_certified());
        let rep = gate_bilip(r("0.5"), LengthInput::Ell(r("1e-15"))).unwrap();
        let j = rep.quantity("J").unwrap();
        assert!(j.lo() >= 1.0 && j.hi() <= 1.0 + 1e-12);
        let rep = gate_bilip(r("0.5"), LengthInput::L(r("30"))).unwrap();
        assert!(rep.is_certified());
        let ell = rep.quantity("ell").unwrap();
        assert!(ell.contains((2.0 * std::f64::consts::PI) / (900.0 - 14.41)) || ell.hi() >= 0.0071);
        let rep = gate_bilip(r("0.5"), LengthInput::Ell(r("0.02"))).unwrap();
        assert_eq!(rep.status, GateStatus::Refuted);
        assert!(gate_bilip(r("0.95"), LengthInput::Ell(r("0.01"))).is_err());
    }

    #[test]
    fn bilip_exact_boundary() {
        // 17.11 * 0.02 = 0.3422 exactly; delta^2 with delta = 0.5849... not decimal-exact, so use L form.
        let rep = gate_bilip(r("0.5"), LengthInput::L2(r("444.81"))).unwrap();
        assert!(rep.is_certified(), "{rep:?}");
        let rep = gate_bilip(r("0.5"), LengthInput::L2(r("444.8099"))).unwrap();
        assert_eq!(rep.status, GateStatus::Refuted);
    }

    #[test]
    fn bilip_bis_examples() {
        let d = r("0.01");
        let j = r("1.1");
        let t = (d.iv().powf(2.5).unwrap() * j.iv().ln().unwrap()).div(&Interval::point(3.324)).unwrap() * 0.9;
        let rep = gate_bilip_bis(d, Real::interval(t), j).unwrap();
        assert!(rep.is_certified());
        let rep = gate_bilip_bis(r("0.05"), r("1e-6"), j).unwrap();
        assert!(rep.quantity("constant").unwrap().contains(3.498));
        assert!(gate_bilip_bis(r("0.2"), r("1e-6"), j).is_err());
    }

    #[test]
    fn effective_bb_examples() {
        let e = Interval::point(1.0).exp();
        let t = effective_bb_threshold(Interval::point(0.938), e, Direction::Drill).unwrap();
        assert!(t.hi() <= 0.938f64.powi(2) / 17.11 * (1.0 + 1e-12));
        let rep = gate_effective_bb(r("0.5"), r("1.01"), Direction::Fill).unwrap();
        assert!(rep.notes.iter().any(|n| n.contains("log J")));
        let t = effective_bb_threshold(Interval::point(0.5), Interval::point(1.0 + 1e-12), Direction::Drill).unwrap();
        assert!(t.hi() < 1e-11);
    }

    #[test]
    fn endpoint_examples() {
        let ln3 = Real::interval(ln3());
        let rep = gate_bilip_endpoints(ln3, LengthInput::L2(r("200000"))).unwrap();
        assert!(rep.is_certified());
        assert!(rep.quantity("L2_threshold").unwrap().lo() > 116000.0);
        let rep = gate_bilip_endpoints(r("0.3"), LengthInput::Ell(r("0"))).unwrap();
        assert!(rep.quantity("J").unwrap().contains(1.0));
    }

    #[test]
    fn boundary_presets() {
        for p in [BoundaryPreset::Standard, BoundaryPreset::Medium, BoundaryPreset::Tiny] {
            let (dm, b) = p.params();
            let coeff = boundary_coefficient(dm.iv(), b).unwrap();
            assert!(coeff.lo() >= p.published().hi(), "{p:?}: {coeff}");
        }
    }

    #[test]
    fn boundary_gate() {
        let (dm, b) = BoundaryPreset::Standard.params();
        let rep = boundary_term_bound(r("0.5"), r("0.01"), dm, b).unwrap();
        assert!(rep.is_certified());
        let rep = boundary_term_bound(r("0.5"), r("0.02"), dm, b).unwrap();
        assert_eq!(rep.status, GateStatus::Refuted);
        assert!(boundary_term_bound(r("0.95"), r("0.01"), dm, b).is_err());
    }

    #[test]
    fn pointwise_coefficients() {
        assert!(pointwise_coefficient(PointwiseRegime::Standard).unwrap().hi() <= POINTWISE_STD.hi());
        assert!(pointwise_coefficient(PointwiseRegime::Tight012).unwrap().hi() <= POINTWISE_TIGHT.hi());
        for (d, regime, cap) in [
            (0.5, PointwiseRegime::Standard, POINTWISE_STD),
            (0.01, PointwiseRegime::Tight012, POINTWISE_TIGHT),
        ] {
            let di = Interval::point(d);
            let b = pointwise_norm_bound(di, Interval::point(1e-3), regime).unwrap();
            let coeff = b * di.powf(2.5).unwrap() * 1e3;
            assert!(coeff.hi() <= cap.hi(), "{coeff}");
        }
        let a = pointwise_norm_bound(Interval::point(0.5), Interval::point(0.02), PointwiseRegime::Standard).unwrap();
        let b = pointwise_norm_bound(Interval::point(0.5), Interval::point(0.01), PointwiseRegime::Standard).unwrap();
        assert!((a * 0.5).overlaps(&b));
    }
}
