//! Thick parts stay thick, and the resulting Margulis numbers.

use serde::{Deserialize, Serialize};

use super::{require_range, Gate, GateReport, LengthInput, Real, Verdict};
use crate::constants::{text, MARGULIS_A, MARGULIS_B, MARGULIS_C, MARGULIS_CAP, MARGULIS_SHIFT};
use crate::error::{Error, Result};
use crate::interval::{Interval, PI_IV};
use crate::special::{g_thick, ThickVariant};

fn c(text: &str) -> Real {
    Real::parse(text).expect("constant text is a decimal")
}

fn check_eps_j(func: &'static str, eps: &Real, j: &Real) -> Result<()> {
    require_range(func, eps.iv(), 0.0, Interval::point(3.0).ln()?, "0 < eps <= log 3")?;
    require_range(func, j.iv(), 1.0, Interval::point(0.2).exp(), "1 < J <= e^(1/5)")
}

/// Length threshold under which the `eps`-thick part of every cone-manifold
/// contains the `eps/J`-thick part's preimage; with `ell` given, also checks it.
pub fn gate_thick_stays_thick(eps: Real, j: Real, ell: Option<Real>) -> Result<GateReport> {
    check_eps_j("thick-stays-thick", &eps, &j)?;
    let variant = match eps.cmp_le(&c(text::THICK_SMALL_EPS)) {
        Verdict::Holds => ThickVariant::SmallEps,
        _ => ThickVariant::Log3,
    };
    let key = match variant {
        ThickVariant::SmallEps => "thick-stays-thick-small",
        ThickVariant::Log3 => "thick-stays-thick-log3",
    };
    let mut g = Gate::new("thick-stays-thick", key);
    g.input("eps", &eps);
    g.input("J", &j);
    let threshold = g_thick(eps.iv(), j.iv(), variant)?;
    if let Some(ell) = ell {
        g.input("ell", &ell);
        g.check("ell <= g(eps, J)", Verdict::le(ell.iv(), threshold));
    }
    g.note(format!("variant: {}", serde_json::to_value(variant).expect("enum")));
    g.note("conclusion: M_a^{>=eps} lies in M_t^{>eps/J} for all a, t");
    g.finish(|q| {
        q.set("threshold", threshold);
        q.set("eps_over_J", eps.iv().div(&j.iv())?);
        Ok(())
    })
}

/// Inputs for [`gate_margulis`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "direction")]
pub enum MargulisInput {
    /// Filling slope of normalized length `L` with thick-part data `(eps, J)`.
    Fill { eps: Real, j: Real, size: LengthInput },
    /// Drilling the shortest geodesic of length `sys`.
    DrillSystole { sys: Real },
    /// Drilling the shortest geodesics of total length `total`.
    DrillTotal { total: Real },
}

/// Margulis numbers through the deformation.
///
/// Filling: `L^2 >= 2 pi/g(eps, J) + 11.7` gives Margulis number `min{eps/J, 0.962}`.
/// Drilling: `sys <= 2.73e-8` gives more than `0.29`, `sys <= 2.93e-7` more than
/// `0.2408`, and a total of at most `5.56e-5` more than `0.9536`.
pub fn gate_margulis(input: MargulisInput) -> Result<GateReport> {
    match input {
        MargulisInput::Fill { eps, j, size } => {
            check_eps_j("margulis", &eps, &j)?;
            let l2 = size.l2().ok_or_else(|| Error::Parse {
                what: "margulis",
                text: "filling needs L or L2".into(),
            })?;
            let mut g = Gate::new("margulis", "margulis-filling");
            g.input("direction", "fill");
            g.input("eps", &eps);
            g.input("J", &j);
            size.record(&mut g);
            let gt = g_thick(eps.iv(), j.iv(), ThickVariant::Log3)?;
            let threshold = (PI_IV * 2.0).div(&gt)? + MARGULIS_SHIFT;
            g.check("L^2 >= 2 pi/g(eps, J) + 11.7", Verdict::le(threshold, l2.iv()));
            g.finish(|q| {
                q.set("L2_threshold", threshold);
                q.set("margulis", eps.iv().div(&j.iv())?.min(&MARGULIS_CAP));
                Ok(())
            })
        }
        MargulisInput::DrillSystole { sys } => {
            let mut g = Gate::new("margulis", "margulis-drilling");
            g.input("direction", "drill");
            g.input("sys", &sys);
            let strong = sys.cmp_le(&c(text::MARGULIS_SYS_A));
            let lower = if strong == Verdict::Holds {
                MARGULIS_A
            } else {
                g.check("sys <= 2.93e-7", sys.cmp_le(&c(text::MARGULIS_SYS_B)));
                if strong == Verdict::Unknown {
                    g.note("sys <= 2.73e-8 undecided; reporting the weaker bound");
                }
                MARGULIS_B
            };
            g.finish(|q| {
                q.set("margulis_lower", lower);
                Ok(())
            })
        }
        MargulisInput::DrillTotal { total } => {
            let mut g = Gate::new("margulis", "margulis-drilling-three");
            g.input("direction", "drill");
            g.input("total", &total);
            g.check("total <= 5.56e-5", total.cmp_le(&c(text::MARGULIS_TOTAL_C)));
            g.finish(|q| {
                q.set("margulis_lower", MARGULIS_C);
                Ok(())
            })
        }
    }
}
