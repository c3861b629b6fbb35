//! Name-based dispatch over the special functions, used by the command line.

use super::*;
use crate::error::{Error, Result};
use crate::interval::Interval;

type EvalFn = fn(&[Interval]) -> Result<Vec<Interval>>;

/// One callable function: its name, argument names, output names and a
/// descriptive key for the result it belongs to.
pub struct FunctionEntry {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub outputs: &'static [&'static str],
    pub key: &'static str,
    pub eval: EvalFn,
}

impl FunctionEntry {
    pub fn arity(&self) -> usize {
        self.args.len()
    }
}

macro_rules! entry {
    ($name:literal, [$($arg:literal),*], [$($out:literal),*], $key:literal, $f:expr) => {
        FunctionEntry { name: $name, args: &[$($arg),*], outputs: &[$($out),*], key: $key, eval: $f }
    };
}

fn one(x: Result<Interval>) -> Result<Vec<Interval>> {
    x.map(|v| vec![v])
}

fn two(x: Result<(Interval, Interval)>) -> Result<Vec<Interval>> {
    x.map(|(a, b)| vec![a, b])
}

/// All registered functions.
pub static FUNCTIONS: &[FunctionEntry] = &[
    entry!("h", ["r"], ["h"], "tube-profile", |a| one(h(a[0]))),
    entry!("haze", ["z"], ["haze"], "tube-profile", |a| one(haze(a[0]))),
    entry!("haze_inv", ["y"], ["z"], "tube-profile-inverse", |a| one(haze_inv(a[0]))),
    entry!("h_inv", ["y"], ["r"], "tube-profile-inverse", |a| one(h_inv(a[0]))),
    entry!("S", ["r"], ["S"], "packing-scale", |a| one(s_func(a[0]))),
    entry!("ellipse_axes", ["Ri", "Rj"], ["a", "b"], "ellipse-axes", |a| two(ellipse_axes(a[0], a[1]))),
    entry!("max_tube_area_lb", ["R"], ["area"], "max-tube-area", |a| one(max_tube_area_lb(a[0]))),
    entry!("max_tube_injrad_lb", ["R"], ["injrad"], "max-tube-injectivity", |a| one(max_tube_injrad_lb(a[0]))),
    entry!("max_tube_injrad_linear", ["R"], ["injrad"], "max-tube-injectivity", |a| Ok(vec![max_tube_injrad_linear(a[0])])),
    entry!("I", ["z"], ["I"], "upward-threshold", |a| one(i_func(a[0]))),
    entry!("G", ["z"], ["G"], "area-coefficient", |a| one(g_upper(a[0]))),
    entry!("Gtilde", ["z"], ["Gtilde"], "area-coefficient", |a| one(g_tilde(a[0]))),
    entry!("q", ["z"], ["q"], "visual-area-ratio", |a| one(q_func(a[0]))),
    entry!("F", ["z", "ell"], ["F"], "length-drift", |a| one(f_drift(a[0], a[1]))),
    entry!("g_small", ["eps", "J"], ["g"], "thick-threshold", |a| one(g_thick(a[0], a[1], ThickVariant::SmallEps))),
    entry!("g_log3", ["eps", "J"], ["g"], "thick-threshold", |a| one(g_thick(a[0], a[1], ThickVariant::Log3))),
    entry!("ell_max", ["L"], ["ell_max"], "systole-threshold", |a| one(ell_max(a[0]))),
    entry!("sysmin", ["L"], ["sysmin"], "systole-threshold", |a| one(sysmin(a[0]))),
    entry!("meyerhoff_k", ["ell", "tau"], ["k"], "tube-radius-from-length", |a| one(meyerhoff_k(a[0], a[1]))),
    entry!("meyerhoff_tube", ["ell", "tau"], ["r"], "tube-radius-from-length", |a| one(meyerhoff_tube(a[0], a[1]))),
    entry!("tube_distance_log3", ["delta", "eps"], ["lower", "upper"], "thin-part-distance", |a| {
        two(tube_distance_bounds(a[0], a[1], DistanceRegime::Log3))
    }),
    entry!("tube_distance_small", ["delta", "eps"], ["lower", "upper"], "thin-part-distance", |a| {
        two(tube_distance_bounds(a[0], a[1], DistanceRegime::Small))
    }),
    entry!("singular_tube_radius_lb", ["eps", "area"], ["r"], "singular-tube-radius", |a| {
        one(singular_tube_radius_lb(a[0], a[1]))
    }),
    entry!("dhyp", ["len1", "twist1", "len2", "twist2"], ["d"], "complex-length-distance", |a| {
        one(dhyp(ComplexLength::new(a[0], a[1])?, ComplexLength::new(a[2], a[3])?))
    }),
    entry!("kenprop_bounds", ["K", "len"], ["ratio", "twist_delta"], "complex-length-drift", |a| {
        two(kenprop_bounds(a[0], a[1]))
    }),
    entry!("mean_value_multiplier", ["r"], ["multiplier"], "mean-value", |a| one(mean_value_multiplier(a[0]))),
    entry!("f_mean", ["r"], ["f"], "mean-value", |a| one(f_mean_value(a[0]))),
    entry!("puiseux_phi", ["r", "C"], ["phi"], "mean-value-envelope", |a| one(puiseux_phi(a[0], a[1]))),
    entry!("tanh_from_r", ["r"], ["z"], "tanh-identities", |a| Ok(vec![tanh_from_r(a[0])])),
    entry!("r_from_tanh", ["z"], ["r"], "tanh-identities", |a| one(r_from_tanh(a[0]))),
    entry!("sinh_from_tanh", ["z"], ["sinh"], "tanh-identities", |a| one(sinh_from_tanh(a[0]))),
    entry!("cosh_from_tanh", ["z"], ["cosh"], "tanh-identities", |a| one(cosh_from_tanh(a[0]))),
    entry!("sinh_diff", ["s", "z"], ["f"], "sinh-difference", |a| one(sinh_diff(a[0], a[1]))),
];

/// Entry by exact name.
pub fn lookup_function(name: &str) -> Result<&'static FunctionEntry> {
    FUNCTIONS
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Unknown { kind: "function", name: name.to_string() })
}

/// Evaluates `name` on `args`, checking the arity.
pub fn eval(name: &str, args: &[Interval]) -> Result<Vec<Interval>> {
    let e = lookup_function(name)?;
    if args.len() != e.arity() {
        return Err(Error::Parse {
            what: "arguments",
            text: format!("{} takes {} argument(s) ({}), got {}", e.name, e.arity(), e.args.join(", "), args.len()),
        });
    }
    (e.eval)(args)
}
