//! `gate` subcommand: one flat set of flags, checked per gate.

use clap::{Args, ValueEnum};
use conedef::gates::{
    boundary_term_bound, gate_bilip, gate_bilip_bis, gate_bilip_endpoints, gate_cone_def_exists,
    gate_effective_bb, gate_hold_short_geodesics, gate_margulis, gate_short_geodesic,
    gate_thick_stays_thick, gate_unique_shortest, gate_upward, magid_bounds, BoundaryPreset,
    Direction, GateReport, GateStatus, LengthInput, LinkLengths, MargulisInput, Real, ShortParams,
};

use crate::output::Output;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GateId {
    ConeDef,
    Upward,
    Magid,
    UniqueShortest,
    Bilip,
    BilipBis,
    EffectiveBb,
    BilipEndpoints,
    BoundaryTerm,
    ShortGeodesic,
    HoldShortGeodesics,
    ThickStaysThick,
    Margulis,
}

impl GateId {
    /// Required flags, shown when a parameter is missing.
    fn usage(self) -> &'static str {
        use GateId::*;
        match self {
            ConeDef => "gate cone-def --lengths l1,l2,...",
            Upward => "gate upward (--L X | --L2 X) --z Z",
            Magid => "gate magid (--ell X | --L X | --L2 X) --z-min Z",
            UniqueShortest => "gate unique-shortest (--L X | --L2 X) --sys S",
            Bilip => "gate bilip --delta D (--ell X | --L X | --L2 X)",
            BilipBis => "gate bilip-bis --delta D --ell X --j J",
            EffectiveBb => "gate effective-bb --delta D --j J --direction drill|fill",
            BilipEndpoints => "gate bilip-endpoints --eps E (--ell X | --L X | --L2 X)",
            BoundaryTerm => "gate boundary-term --delta D --ell X [--preset standard|medium|tiny]",
            ShortGeodesic => "gate short-geodesic --m M (--direction drill --ell X | --direction fill (--L X | --L2 X))",
            HoldShortGeodesics => "gate hold-short-geodesics --ell X --m M",
            ThickStaysThick => "gate thick-stays-thick --eps E --j J [--ell X]",
            Margulis => "gate margulis (--direction fill --eps E --j J (--L X | --L2 X) | --direction drill (--sys S | --total T))",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DirArg {
    Drill,
    Fill,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PresetArg {
    Standard,
    Medium,
    Tiny,
}

#[derive(Args, Debug)]
pub struct GateArgs {
    pub gate: GateId,
    /// Comma-separated geodesic lengths.
    #[arg(long)]
    lengths: Option<String>,
    /// Geodesic length in the complete metric.
    #[arg(long)]
    ell: Option<String>,
    /// Normalized slope length.
    #[arg(long = "L")]
    l: Option<String>,
    /// Squared normalized slope length.
    #[arg(long = "L2")]
    l2: Option<String>,
    #[arg(long)]
    delta: Option<String>,
    #[arg(long)]
    eps: Option<String>,
    #[arg(long)]
    j: Option<String>,
    /// Length of the extra geodesic.
    #[arg(long)]
    m: Option<String>,
    /// Target tube depth `tanh R`.
    #[arg(long)]
    z: Option<String>,
    #[arg(long)]
    z_min: Option<String>,
    #[arg(long)]
    sys: Option<String>,
    /// Total length of the drilled geodesics.
    #[arg(long)]
    total: Option<String>,
    #[arg(long, value_enum)]
    direction: Option<DirArg>,
    /// Boundary-term parameter set.
    #[arg(long, value_enum, default_value_t = PresetArg::Standard)]
    preset: PresetArg,
}

fn real(flag: &str, v: &Option<String>) -> Result<Real, String> {
    let t = v.as_deref().ok_or_else(|| format!("missing --{flag}"))?;
    Real::parse(t).map_err(|e| format!("--{flag}: {e}"))
}

fn opt_real(flag: &str, v: &Option<String>) -> Result<Option<Real>, String> {
    v.as_ref().map(|_| real(flag, v)).transpose()
}

impl GateArgs {
    /// Exactly one of `--ell`, `--L`, `--L2`, restricted to those allowed.
    fn size(&self, allow_ell: bool) -> Result<LengthInput, String> {
        let given = [self.ell.is_some() && allow_ell, self.l.is_some(), self.l2.is_some()];
        let wanted = if allow_ell { "one of --ell, --L, --L2" } else { "one of --L, --L2" };
        if given.iter().filter(|g| **g).count() != 1 {
            return Err(format!("give exactly {wanted}"));
        }
        Ok(if given[0] {
            LengthInput::Ell(real("ell", &self.ell)?)
        } else if given[1] {
            LengthInput::L(real("L", &self.l)?)
        } else {
            LengthInput::L2(real("L2", &self.l2)?)
        })
    }

    fn direction(&self) -> Result<Direction, String> {
        match self.direction {
            Some(DirArg::Drill) => Ok(Direction::Drill),
            Some(DirArg::Fill) => Ok(Direction::Fill),
            None => Err("missing --direction".into()),
        }
    }

    fn report(&self) -> Result<GateReport, String> {
        use GateId::*;
        let r = match self.gate {
            ConeDef => {
                let t = self.lengths.as_deref().ok_or("missing --lengths")?;
                gate_cone_def_exists(&LinkLengths::parse(t).map_err(|e| e.to_string())?)
            }
            Upward => gate_upward(self.size(false)?, real("z", &self.z)?),
            Magid => magid_bounds(self.size(true)?, real("z-min", &self.z_min)?),
            UniqueShortest => gate_unique_shortest(self.size(false)?, real("sys", &self.sys)?),
            Bilip => gate_bilip(real("delta", &self.delta)?, self.size(true)?),
            BilipBis => gate_bilip_bis(real("delta", &self.delta)?, real("ell", &self.ell)?, real("j", &self.j)?),
            EffectiveBb => gate_effective_bb(real("delta", &self.delta)?, real("j", &self.j)?, self.direction()?),
            BilipEndpoints => gate_bilip_endpoints(real("eps", &self.eps)?, self.size(true)?),
            BoundaryTerm => {
                let preset = match self.preset {
                    PresetArg::Standard => BoundaryPreset::Standard,
                    PresetArg::Medium => BoundaryPreset::Medium,
                    PresetArg::Tiny => BoundaryPreset::Tiny,
                };
                let (dmax, b) = preset.params();
                boundary_term_bound(real("delta", &self.delta)?, real("ell", &self.ell)?, dmax, b)
            }
            ShortGeodesic => {
                let m = real("m", &self.m)?;
                let p = match self.direction()? {
                    Direction::Drill => ShortParams::Drill { ell: real("ell", &self.ell)?, m },
                    Direction::Fill => ShortParams::Fill { size: self.size(false)?, m },
                };
                gate_short_geodesic(p)
            }
            HoldShortGeodesics => gate_hold_short_geodesics(real("ell", &self.ell)?, real("m", &self.m)?),
            ThickStaysThick => {
                gate_thick_stays_thick(real("eps", &self.eps)?, real("j", &self.j)?, opt_real("ell", &self.ell)?)
            }
            Margulis => {
                let input = match self.direction()? {
                    Direction::Fill => MargulisInput::Fill {
                        eps: real("eps", &self.eps)?,
                        j: real("j", &self.j)?,
                        size: self.size(false)?,
                    },
                    Direction::Drill => match (&self.sys, &self.total) {
                        (Some(_), None) => MargulisInput::DrillSystole { sys: real("sys", &self.sys)? },
                        (None, Some(_)) => MargulisInput::DrillTotal { total: real("total", &self.total)? },
                        _ => return Err("drilling needs exactly one of --sys, --total".into()),
                    },
                };
                gate_margulis(input)
            }
        };
        r.map_err(|e| e.to_string())
    }
}

/// Exit code: 0 certified, 1 refuted, 2 inconclusive.
pub fn run(out: &Output, args: &GateArgs) -> Result<u8, String> {
    let report = args
        .report()
        .map_err(|e| format!("{e}\nusage: conedef {}", args.gate.usage()))?;
    out.gate(&report);
    Ok(match report.status {
        GateStatus::Certified => 0,
        GateStatus::Refuted => 1,
        GateStatus::Inconclusive => 2,
    })
}
