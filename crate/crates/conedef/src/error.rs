//! Error type shared by every layer of the library.

use thiserror::Error;

/// Failures raised by interval construction, elementary functions, solvers and gates.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("division by an interval containing zero: [{lo}, {hi}]")]
    DivisionByZeroInterval { lo: f64, hi: f64 },

    #[error("{func}: argument [{lo}, {hi}] outside the domain: {reason}")]
    Domain {
        func: &'static str,
        lo: f64,
        hi: f64,
        reason: String,
    },

    #[error("root bracketing: values [{f_lo}, {f_hi}] at the domain endpoints do not straddle target {target}")]
    NoStraddle { target: f64, f_lo: f64, f_hi: f64 },

    #[error("root bracketing: endpoint values do not certify monotonicity")]
    NotMonotone,

    #[error("ellipse axes need Ri >= Rj, got Ri = [{ri_lo}, {ri_hi}], Rj = [{rj_lo}, {rj_hi}]")]
    Ordering {
        ri_lo: f64,
        ri_hi: f64,
        rj_lo: f64,
        rj_hi: f64,
    },

    #[error("tube radius undefined: k >= sqrt(2) - 1 (k lower bound {k_lo})")]
    KTooLarge { k_lo: f64 },

    #[error("degenerate cusp lattice: area enclosure [{lo}, {hi}] contains zero")]
    DegenerateLattice { lo: f64, hi: f64 },

    #[error("volume ordering violated: need V < vol, got V = [{v_lo}, {v_hi}], vol = [{vol_lo}, {vol_hi}]")]
    VolumeOrder {
        v_lo: f64,
        v_hi: f64,
        vol_lo: f64,
        vol_hi: f64,
    },

    #[error("cannot parse {what}: {text:?}")]
    Parse { what: &'static str, text: String },

    #[error("invalid slope ({p}, {q}): {reason}")]
    InvalidSlope { p: i64, q: i64, reason: &'static str },

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },
}

impl Error {
    pub(crate) fn domain(func: &'static str, lo: f64, hi: f64, reason: impl Into<String>) -> Self {
        Error::Domain {
            func,
            lo,
            hi,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
