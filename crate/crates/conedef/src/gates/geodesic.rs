//! Short geodesics stay short through the deformation.

use serde::{Deserialize, Serialize};

use super::{Gate, GateReport, LengthInput, Real, Verdict};
use crate::constants::{text, SHORT_FILL_M_COEFF, SHORT_FILL_SHIFT};
use crate::error::{Error, Result};
use crate::interval::{Interval, PI_IV};
use crate::special::{f_drift, h_inv, haze_inv, kenprop_bounds};

fn c(text: &str) -> Real {
    Real::parse(text).expect("constant text is a decimal")
}

fn two_pi() -> Interval {
    PI_IV * 2.0
}

/// Inputs for [`gate_short_geodesic`]: the link length `l` (drilling) or its
/// filling slope length (filling), and the length `m` of the other geodesic.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "direction")]
pub enum ShortParams {
    Drill { ell: Real, m: Real },
    Fill { size: LengthInput, m: Real },
}

fn slack() -> Result<Interval> {
    Interval::from_decimal(text::SHORT_SLACK)
}

fn drift_quantities(q: &mut super::Quantities, area: Interval, ell: Interval, m: Interval) -> Result<()> {
    let z = haze_inv(area)?;
    let k = two_pi().sqr() * f_drift(z, ell)?;
    let (ratio, twist) = kenprop_bounds(k, m)?;
    q.set("R_min", h_inv(area)?);
    q.set("Z_min", z);
    q.set("K", k);
    q.set("length_ratio", ratio);
    q.set("twist_delta", twist);
    Ok(())
}

/// A geodesic of length `m` keeps its complex length within
/// `d_hyp <= 4 pi^2 F(Z_min, l)` of its value in the complete structure.
///
/// Drilling needs `l <= 0.0735` and `m <= 0.0996 - 0.352 l`;
/// filling needs `L^2 >= 128` and `m <= 0.056`.
pub fn gate_short_geodesic(params: ShortParams) -> Result<GateReport> {
    match params {
        ShortParams::Drill { ell, m } => {
            let mut g = Gate::new("short-geodesic", "short-geodesic-drill");
            g.input("direction", "drill");
            g.input("ell", &ell);
            g.input("m", &m);
            g.check("ell <= 0.0735", ell.cmp_le(&c(text::SHORT_ELL)));
            let lhs = m.add(c(text::SHORT_M_SLOPE).mul(ell));
            g.check("m <= 0.0996 - 0.352 ell", lhs.cmp_le(&c(text::CONE_COMPONENT)));
            g.finish(|q| {
                let area = two_pi() * (ell.iv() + m.iv() + slack()?);
                drift_quantities(q, area, ell.iv(), m.iv())
            })
        }
        ShortParams::Fill { size, m } => {
            let l2 = size.l2().ok_or_else(|| Error::Parse {
                what: "short-geodesic",
                text: "filling needs L or L2".into(),
            })?;
            let mut g = Gate::new("short-geodesic", "short-geodesic-fill");
            g.input("direction", "fill");
            size.record(&mut g);
            g.input("m", &m);
            g.check("L^2 >= 128", c(text::SHORT_FILL_L2).cmp_le(&l2));
            g.check("m <= 0.056", m.cmp_le(&c(text::SHORT_FILL_M)));
            g.finish(|q| {
                let ell_eff = two_pi().div(&(l2.iv() - SHORT_FILL_SHIFT))?;
                let area = two_pi() * (ell_eff + SHORT_FILL_M_COEFF * m.iv());
                q.set("ell_effective", ell_eff);
                drift_quantities(q, area, ell_eff, m.iv())
            })
        }
    }
}

/// Holding the other short geodesics: `l <= 0.735` (as published) and `l + 2m <= 0.14`.
pub fn gate_hold_short_geodesics(ell: Real, m: Real) -> Result<GateReport> {
    let mut g = Gate::new("hold-short-geodesics", "hold-short-geodesics");
    g.input("ell", &ell);
    g.input("m", &m);
    g.check("ell <= 0.735", ell.cmp_le(&c(text::HOLD_ELL)));
    g.check("ell + 2m <= 0.14", ell.add(m.mul(Real::int(2))).cmp_le(&c(text::HOLD_TOTAL)));
    if ell.cmp_le(&c(text::SHORT_ELL)) != Verdict::Holds {
        g.note("ell may exceed 0.0735; the published bound 0.735 is applied literally");
    }
    g.finish(|q| {
        let area = two_pi() * (ell.iv() + m.iv() * 2.0 + slack()?);
        let z = haze_inv(area)?;
        q.set("R_hat_min", h_inv(area)?);
        q.set("Z_hat_min", z);
        q.set("dhyp_bound", two_pi().sqr() * f_drift(z, ell.iv())?);
        Ok(())
    })
}
