mod common;

use common::*;
use conedef::gates::{gate_bilip, GateReport, LengthInput};
use conedef::slopes::{normalized_length, total_normalized_length, CuspShape, Slope, SlopeTuple};
use conedef::special::{haze, haze_inv, haze_peak, sysmin};
use conedef::Interval;
use proptest::prelude::*;

fn ok(c: Check) {
    match c {
        Ok(summary) => println!("{summary}"),
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn containment_fuzz_1e5() {
    ok(containment_fuzz(100_000, 1));
}

#[test]
fn inclusion_monotone_nested() {
    ok(inclusion_monotone(20_000, 2));
}

#[test]
fn sysmin_sandwich_100() {
    ok(sysmin_sandwich(100));
}

#[test]
fn haze_inv_matches_bracketing_and_closed_form() {
    ok(haze_inv_oracle(200));
}

#[test]
fn i_matches_quadrature() {
    ok(i_quadrature_oracle(50));
}

#[test]
fn i_increasing_past_peak() {
    ok(i_monotone(100));
}

#[test]
fn appendix_identities_1e3() {
    ok(appendix_identities(1000, 3));
}

#[test]
fn gates_monotone_in_size() {
    ok(gate_monotonicity(8, 4));
}

#[test]
fn slopes_match_brute_force() {
    ok(slope_brute_force(100, 5));
}

#[test]
fn agol_cap_on_random_lattices() {
    ok(agol_cap(1000, 6));
}

#[test]
fn lengths_scale_invariant() {
    ok(scale_invariance(20, 7));
}

fn cusp_strategy() -> impl Strategy<Value = CuspShape> {
    any::<u64>().prop_map(|seed| random_cusp(&mut rng(seed), 8.0))
}

fn slope_strategy() -> impl Strategy<Value = Slope> {
    (-30i64..=30, -30i64..=30)
        .prop_filter_map("primitive", |(p, q)| Slope::new(p, q).ok())
}

proptest! {
    #[test]
    fn canonicalization_idempotent(p in -1000i64..=1000, q in -1000i64..=1000) {
        if let Ok(s) = Slope::new(p, q) {
            prop_assert_eq!(Slope::new(s.p(), s.q()).unwrap(), s);
            prop_assert_eq!(Slope::new(-p, -q).unwrap(), s);
            prop_assert!(s.p() > 0 || (s.p() == 0 && s.q() == 1));
        }
    }

    #[test]
    fn total_length_at_most_each_component(
        cusps in prop::collection::vec(cusp_strategy(), 1..5),
        slopes in prop::collection::vec(slope_strategy(), 4),
        mask in 1u8..16,
    ) {
        let n = cusps.len();
        let picked: Vec<Option<Slope>> =
            (0..n).map(|j| (mask >> j & 1 == 1).then_some(slopes[j])).collect();
        prop_assume!(picked.iter().any(Option::is_some));
        let tuple = SlopeTuple::new(picked.clone()).unwrap();
        let total = total_normalized_length(&tuple, &cusps).unwrap();
        for (j, s) in picked.iter().enumerate() {
            if let Some(s) = s {
                prop_assert!(total.lo() <= normalized_length(&cusps[j], *s).hi());
            }
        }
        if picked.iter().filter(|s| s.is_some()).count() == 1 {
            let (j, s) = picked.iter().enumerate().find_map(|(j, s)| s.map(|s| (j, s))).unwrap();
            prop_assert!(total.overlaps(&normalized_length(&cusps[j], s)));
        }
    }

    #[test]
    fn gate_report_round_trips(delta in 0.01f64..0.938, ell in 1e-6f64..0.1) {
        let r = gate_bilip(real(delta), LengthInput::Ell(real(ell))).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: GateReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn haze_inv_inverts_haze(z in 0.4859f64..0.999999) {
        prop_assume!(z > haze_peak().hi());
        let y = haze(Interval::point(z)).unwrap();
        let back = haze_inv(y).unwrap();
        prop_assert!(back.contains(z));
    }

    #[test]
    fn sysmin_decreasing(a in 10.1f64..60.0, gap in 0.05f64..10.0) {
        let (lo, hi) = (sysmin(Interval::point(a)).unwrap(), sysmin(Interval::point(a + gap)).unwrap());
        prop_assert!(hi.certainly_lt(&lo));
    }

    #[test]
    fn decimal_inputs_enclose_their_double(x in -1e6f64..1e6) {
        let text = format!("{x}");
        let r = conedef::gates::Real::parse(&text).unwrap();
        prop_assert!(r.iv().contains(text.parse::<f64>().unwrap()));
        prop_assert!(r.iv().width() <= 2.0 * (x.abs().next_up() - x.abs()));
    }
}
