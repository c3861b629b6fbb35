//! Hypothesis checks for the effective theorems.
//!
//! Each gate takes user data, decides every numeric hypothesis with
//! interval rigor, and on success reports the certified conclusions.

mod bilip;
mod cone;
mod geodesic;
mod margulis;
mod real;

pub use bilip::{
    boundary_coefficient, boundary_term_bound, effective_bb_threshold, gate_bilip,
    gate_bilip_bis, gate_bilip_endpoints, gate_effective_bb, pointwise_coefficient,
    pointwise_norm_bound, BFunction, BoundaryPreset, PointwiseRegime,
};
pub use cone::{cosmetic_cutoff, gate_cone_def_exists, gate_unique_shortest, gate_upward, magid_bounds};
pub use geodesic::{gate_hold_short_geodesics, gate_short_geodesic, ShortParams};
pub use margulis::{gate_margulis, gate_thick_stays_thick, MargulisInput};
pub use real::{Real, Verdict};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Tri-state hypothesis outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GateStatus {
    Certified,
    Refuted,
    Inconclusive,
}

/// Result of a gate. `quantities` is nonempty exactly when `status` is `Certified`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GateReport {
    pub gate_id: String,
    pub status: GateStatus,
    pub quantities: BTreeMap<String, Interval>,
    pub inputs: BTreeMap<String, serde_json::Value>,
    pub citation: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl GateReport {
    pub fn is_certified(&self) -> bool {
        self.status == GateStatus::Certified
    }

    pub fn quantity(&self, name: &str) -> Option<Interval> {
        self.quantities.get(name).copied()
    }
}

/// Drilling direction (geodesic length given) or filling direction (slope length given).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Drill,
    Fill,
}

/// A size hypothesis given either as a geodesic length or as a normalized
/// slope length (or its square).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthInput {
    Ell(Real),
    L(Real),
    L2(Real),
}

impl LengthInput {
    /// `L^2` for the filling forms.
    pub fn l2(&self) -> Option<Real> {
        match *self {
            LengthInput::Ell(_) => None,
            LengthInput::L(l) => Some(l.sqr()),
            LengthInput::L2(l2) => Some(l2),
        }
    }

    /// `L` for the filling forms.
    pub fn l(&self) -> Option<Result<Interval>> {
        match *self {
            LengthInput::Ell(_) => None,
            LengthInput::L(l) => Some(Ok(l.iv())),
            LengthInput::L2(l2) => Some(l2.iv().sqrt()),
        }
    }

    fn record(&self, gate: &mut Gate) {
        match self {
            LengthInput::Ell(x) => gate.input("ell", x),
            LengthInput::L(x) => gate.input("L", x),
            LengthInput::L2(x) => gate.input("L2", x),
        }
    }
}

/// Component lengths of a geodesic link.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinkLengths {
    components: Vec<Real>,
}

impl LinkLengths {
    /// Needs at least one component, each certainly positive.
    pub fn new(components: Vec<Real>) -> Result<LinkLengths> {
        if components.is_empty() {
            return Err(Error::Parse { what: "lengths", text: "empty list".into() });
        }
        for c in &components {
            if !(c.iv().lo() > 0.0) {
                return Err(Error::domain("LinkLengths", c.iv().lo(), c.iv().hi(), "lengths must be positive"));
            }
        }
        Ok(LinkLengths { components })
    }

    /// Parses a comma-separated list of decimals.
    pub fn parse(text: &str) -> Result<LinkLengths> {
        LinkLengths::new(text.split(',').map(Real::parse).collect::<Result<_>>()?)
    }

    pub fn components(&self) -> &[Real] {
        &self.components
    }

    pub fn total(&self) -> Real {
        self.components.iter().skip(1).fold(self.components[0], |acc, c| acc.add(*c))
    }
}

/// Accumulates inputs and hypothesis verdicts for one report.
pub(crate) struct Gate {
    id: &'static str,
    citation: &'static str,
    inputs: BTreeMap<String, serde_json::Value>,
    failed: Vec<String>,
    stuck: Vec<String>,
    notes: Vec<String>,
}

impl Gate {
    pub(crate) fn new(id: &'static str, citation: &'static str) -> Gate {
        Gate {
            id,
            citation,
            inputs: BTreeMap::new(),
            failed: Vec::new(),
            stuck: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn input<T: Serialize + ?Sized>(&mut self, name: &str, value: &T) {
        let v = serde_json::to_value(value).expect("inputs serialize");
        self.inputs.insert(name.to_string(), v);
    }

    pub(crate) fn check(&mut self, name: &str, v: Verdict) {
        match v {
            Verdict::Holds => {}
            Verdict::Fails => self.failed.push(name.to_string()),
            Verdict::Unknown => self.stuck.push(name.to_string()),
        }
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Builds the report, computing quantities only if every check held.
    pub(crate) fn finish<F>(mut self, quantities: F) -> Result<GateReport>
    where
        F: FnOnce(&mut Quantities) -> Result<()>,
    {
        let mut q = Quantities(BTreeMap::new());
        let status = if !self.failed.is_empty() {
            for f in &self.failed {
                self.notes.push(format!("fails: {f}"));
            }
            GateStatus::Refuted
        } else if !self.stuck.is_empty() {
            for s in &self.stuck {
                self.notes.push(format!("undecided: {s}"));
            }
            GateStatus::Inconclusive
        } else {
            quantities(&mut q)?;
            GateStatus::Certified
        };
        Ok(GateReport {
            gate_id: self.id.to_string(),
            status,
            quantities: q.0,
            inputs: self.inputs,
            citation: self.citation.to_string(),
            notes: self.notes,
        })
    }
}

/// Named output intervals of a certified gate.
pub(crate) struct Quantities(BTreeMap<String, Interval>);

impl Quantities {
    pub(crate) fn set(&mut self, name: &str, v: Interval) {
        self.0.insert(name.to_string(), v);
    }
}

/// `lo <= x <= hi` by enclosure; error naming `func` otherwise.
pub(crate) fn require_range(func: &'static str, x: Interval, lo_excl: f64, hi: Interval, what: &str) -> Result<()> {
    if !(x.lo() > lo_excl) || x.hi() > hi.hi() {
        return Err(Error::domain(func, x.lo(), x.hi(), format!("needs {what}")));
    }
    Ok(())
}
