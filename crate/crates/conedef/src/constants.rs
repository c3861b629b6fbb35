//! Every published numeric constant, as an outward enclosure of its decimal value.
//!
//! Each constant is available three ways: as an [`Interval`] (two ulps
//! wide around the nearest double), as its exact decimal text in
//! [`text`], and as a row of [`TABLE`] with a descriptive key.

use crate::interval::round::{const_next_down, const_next_up};
use crate::interval::{Dec, Interval};

/// One row of the constants table.
#[derive(Clone, Copy, Debug)]
pub struct NamedConstant {
    pub name: &'static str,
    /// Exact decimal value as published.
    pub text: &'static str,
    pub value: Interval,
    /// Which bound or formula the constant belongs to.
    pub key: &'static str,
}

impl NamedConstant {
    pub fn dec(&self) -> Dec {
        Dec::parse(self.text).expect("table entries are decimal literals")
    }
}

macro_rules! constants {
    ($($(#[$m:meta])* $name:ident = $lit:literal, $key:literal;)*) => {
        $(
            $(#[$m])*
            pub const $name: Interval =
                Interval::raw(const_next_down($lit), const_next_up($lit));
        )*

        /// Exact decimal spellings.
        pub mod text {
            $(pub const $name: &str = stringify!($lit);)*
        }

        pub const TABLE: &[NamedConstant] = &[
            $(NamedConstant {
                name: stringify!($name),
                text: stringify!($lit),
                value: $name,
                key: $key,
            },)*
        ];
    };
}

constants! {
    /// Scale of the tube-profile function `h(r) = c tanh r / cosh 2r`.
    H_SCALE = 3.3957, "tube-profile";
    /// Twice [`H_SCALE`], denominator of `G` and `G~`.
    G_SCALE = 6.7914, "length-derivative-bounds";
    DIST_COEFF = 7.256, "thin-part-distance";
    F_NUM = 10.667, "complex-length-drift";
    F_DEN = 20.977, "complex-length-drift";
    F_ELL_MAX = 0.5085, "complex-length-drift";
    INJ_COEFF = 1.361, "tube-injectivity";
    INJ_LIN_SLOPE = 1.1227, "tube-injectivity-linear";
    INJ_LIN_OFFSET = 0.1604, "tube-injectivity-linear";
    INJ_LIMIT = 0.96237, "tube-injectivity-limit";
    AREA_COEFF = 1.69785, "tube-area";
    S_ZERO = 1.02013, "ellipse-sinh-ratio";
    R_HMAX = 0.531, "tube-profile-peak";
    H_MAX = 1.01967, "tube-profile-peak";
    R_CRIT = 0.5306375, "tube-profile-peak";
    THICK_SMALL_C = 471.5, "thick-stays-thick-small";
    THICK_SMALL_SHIFT = 0.0424, "thick-stays-thick-small";
    THICK_SMALL_EPS = 0.3, "thick-stays-thick-small";
    THICK_LOG3_C = 496.1, "thick-stays-thick-log3";
    THICK_LOG3_SHIFT = 0.1475, "thick-stays-thick-log3";
    GJ_MAX = 5.610e-5, "thick-threshold-maximum";
    GJ_MAX_ATTAINED = 5.609e-5, "thick-threshold-maximum";
    GJ_MAX_TIGHT = 5.608e-5, "thick-threshold-maximum";
    GJ_J_ARGMAX = 1.15203, "thick-threshold-maximum";
    ENDPOINT_C = 6771.0, "bilipschitz-endpoints";
    ENDPOINT_EPS_SCALE = 0.6, "bilipschitz-endpoints";
    ENDPOINT_J = 11.35, "bilipschitz-endpoints";
    ENDPOINT_J_MAX = 1.0005, "bilipschitz-endpoints";
    ENDPOINT_L2_MIN = 116321.0, "bilipschitz-endpoints";
    MARGULIS_SHIFT = 11.7, "margulis-filling";
    MARGULIS_CAP = 0.962, "margulis-filling";
    MARGULIS_SYS_A = 2.73e-8, "margulis-drilling";
    MARGULIS_A = 0.29, "margulis-drilling";
    MARGULIS_SYS_B = 2.93e-7, "margulis-drilling";
    MARGULIS_B = 0.2408, "margulis-drilling";
    MARGULIS_TOTAL_C = 5.56e-5, "margulis-drilling-three";
    MARGULIS_C = 0.9536, "margulis-drilling-three";
    BILIP_J = 7.193, "bilipschitz";
    BILIP_ELL = 17.11, "bilipschitz";
    BILIP_L_NUM = 107.6, "bilipschitz-filling";
    BILIP_L_SHIFT = 14.41, "bilipschitz-filling";
    BILIP_FILL_J = 45.20, "bilipschitz-filling";
    BILIP_DELTA_MAX = 0.938, "bilipschitz";
    BILIPBIS_TINY = 3.324, "bilipschitz-small-delta";
    BILIPBIS_MED = 3.498, "bilipschitz-small-delta";
    BILIPBIS_SPLIT = 0.012, "bilipschitz-small-delta";
    BILIPBIS_DELTA_MAX = 0.106, "bilipschitz-small-delta";
    CONE_COMPONENT = 0.0996, "cone-deformation-exists";
    CONE_TOTAL = 0.15601, "cone-deformation-exists";
    MAGID_Z = 0.6622, "length-two-sided";
    SHORT_ELL = 0.0735, "short-geodesic-drill";
    SHORT_M_SLOPE = 0.352, "short-geodesic-drill";
    SHORT_SLACK = 1e-5, "short-geodesic-slack";
    SHORT_FILL_L2 = 128.0, "short-geodesic-fill";
    SHORT_FILL_M = 0.056, "short-geodesic-fill";
    SHORT_FILL_SHIFT = 14.7, "short-geodesic-fill";
    SHORT_FILL_M_COEFF = 1.656, "short-geodesic-fill";
    HOLD_ELL = 0.735, "hold-short-geodesics";
    HOLD_TOTAL = 0.14, "hold-short-geodesics";
    MEYERHOFF_K = 0.34932, "embedded-tube-radius";
    SYS_SHIFT = 16.03, "systole-threshold";
    SYS_UPPER_SHIFT = 58.0, "systole-threshold";
    COSMETIC_L = 10.1, "cosmetic-cutoff";
    COSMETIC_SYS = 0.1428, "cosmetic-cutoff";
    BOUNDARY_C_STD = 7.935, "boundary-term";
    BOUNDARY_C_MED = 15.616, "boundary-term-medium";
    BOUNDARY_C_TINY = 16.432, "boundary-term-tiny";
    BOUNDARY_B_MED = 17.49, "boundary-term-medium";
    BOUNDARY_B_TINY = 16.62, "boundary-term-tiny";
    POINTWISE_STD = 0.1822, "pointwise-norm";
    POINTWISE_TIGHT = 0.08419, "pointwise-norm-small-delta";
    PUISEUX_C_938 = 1.046, "mean-value-envelope";
    PUISEUX_C_106 = 1.001, "mean-value-envelope";
    DELTA_CUT_SLOPE = 0.261, "tube-embedding-cut";
    DELTA_CUT_LO = 0.556369, "tube-embedding-cut";
    DELTA_CUT_HI = 0.556370, "tube-embedding-cut";
    I_MIN = 56.469, "upward-threshold";
    I_INV_SQRT3 = 57.504, "upward-threshold";
}

/// Looks up a constant by name.
pub fn lookup(name: &str) -> Option<&'static NamedConstant> {
    TABLE.iter().find(|c| c.name == name)
}
