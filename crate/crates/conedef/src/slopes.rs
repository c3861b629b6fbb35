//! Cusp lattices, normalized slope lengths, and the finite slope sets that a
//! cosmetic-surgery search has to examine.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gates::{cosmetic_cutoff, Real, Verdict};
use crate::interval::{Interval, PI_IV};

/// Euclidean translations of a cusp torus, each a complex number `[re, im]`.
///
/// Invariant: the lattice is nondegenerate (certified positive area).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CuspRepr", into = "CuspRepr")]
pub struct CuspShape {
    meridian: [Real; 2],
    longitude: [Real; 2],
    area: Interval,
}

#[derive(Serialize, Deserialize)]
struct CuspRepr {
    meridian: [Real; 2],
    longitude: [Real; 2],
}

impl TryFrom<CuspRepr> for CuspShape {
    type Error = Error;
    fn try_from(r: CuspRepr) -> Result<CuspShape> {
        CuspShape::new(r.meridian, r.longitude)
    }
}

impl From<CuspShape> for CuspRepr {
    fn from(c: CuspShape) -> CuspRepr {
        CuspRepr { meridian: c.meridian, longitude: c.longitude }
    }
}

impl CuspShape {
    pub fn new(meridian: [Real; 2], longitude: [Real; 2]) -> Result<CuspShape> {
        let cross = meridian[0].mul(longitude[1]).sub(meridian[1].mul(longitude[0]));
        let area = cross.iv().abs();
        if !(area.lo() > 0.0) {
            return Err(Error::DegenerateLattice { lo: area.lo(), hi: area.hi() });
        }
        Ok(CuspShape { meridian, longitude, area })
    }

    /// Parses decimal strings `(mu_re, mu_im, lambda_re, lambda_im)`.
    pub fn parse(mu_re: &str, mu_im: &str, la_re: &str, la_im: &str) -> Result<CuspShape> {
        CuspShape::new(
            [Real::parse(mu_re)?, Real::parse(mu_im)?],
            [Real::parse(la_re)?, Real::parse(la_im)?],
        )
    }

    pub fn meridian(&self) -> [Real; 2] {
        self.meridian
    }

    pub fn longitude(&self) -> [Real; 2] {
        self.longitude
    }

    /// `|Im(conj(mu) lambda)|`.
    pub fn area(&self) -> Interval {
        self.area
    }

    /// Both translations multiplied by `c > 0`.
    pub fn scaled(&self, c: Real) -> Result<CuspShape> {
        let s = |z: [Real; 2]| [z[0].mul(c), z[1].mul(c)];
        CuspShape::new(s(self.meridian), s(self.longitude))
    }

    /// Euclidean length `|p mu + q lambda|`.
    pub fn length(&self, s: Slope) -> Interval {
        let (p, q) = (Interval::point(s.p as f64), Interval::point(s.q as f64));
        let x = p * self.meridian[0].iv() + q * self.longitude[0].iv();
        let y = p * self.meridian[1].iv() + q * self.longitude[1].iv();
        (x.sqr() + y.sqr()).sqrt().expect("sum of squares is nonnegative")
    }

    fn abs_sq(z: [Real; 2]) -> Interval {
        z[0].iv().sqr() + z[1].iv().sqr()
    }

    /// Certified bounds on `|p|` and `|q|` for vectors of length at most `radius`.
    ///
    /// The component of `p mu + q lambda` orthogonal to `mu` has length
    /// `|q| area/|mu|`, and symmetrically for `p`.
    fn coefficient_bounds(&self, radius: f64) -> (i64, i64) {
        let r = Interval::point(radius);
        let bound = |other: [Real; 2]| {
            let b = (r * Self::abs_sq(other).sqrt().expect("nonnegative"))
                .div(&self.area)
                .expect("area is positive");
            b.hi().floor() as i64 + 1
        };
        (bound(self.longitude), bound(self.meridian))
    }
}

/// An unoriented slope `p mu + q lambda` in canonical form.
///
/// Invariant: `gcd(p, q) = 1` and either `p > 0` or `(p, q) = (0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(i64, i64)", into = "(i64, i64)")]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    /// Canonicalizes `(p, q) ~ (-p, -q)`; rejects non-primitive pairs.
    pub fn new(p: i64, q: i64) -> Result<Slope> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidSlope { p, q, reason: "zero vector" });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidSlope { p, q, reason: "not primitive" });
        }
        Ok(Slope::canonical_unchecked(p, q))
    }

    fn canonical_unchecked(p: i64, q: i64) -> Slope {
        if p < 0 || (p == 0 && q < 0) {
            Slope { p: -p, q: -q }
        } else {
            Slope { p, q }
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Ordering key `(|p|, p, q)`.
    fn key(&self) -> (i64, i64, i64) {
        (self.p.abs(), self.p, self.q)
    }

    /// The partner `(p, -q)` when `p >= 1` divides `q^2 + 1`.
    pub fn niwu_partner(&self) -> Option<Slope> {
        let p = self.p as i128;
        let q = self.q as i128;
        (p >= 1 && (q * q + 1) % p == 0).then(|| Slope::canonical_unchecked(self.p, -self.q))
    }
}

impl Ord for Slope {
    fn cmp(&self, o: &Slope) -> Ordering {
        self.key().cmp(&o.key())
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, o: &Slope) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl TryFrom<(i64, i64)> for Slope {
    type Error = Error;
    fn try_from((p, q): (i64, i64)) -> Result<Slope> {
        Slope::new(p, q)
    }
}

impl From<Slope> for (i64, i64) {
    fn from(s: Slope) -> (i64, i64) {
        (s.p, s.q)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// One optional slope per cusp; at least one cusp is filled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeTuple {
    slopes: Vec<Option<Slope>>,
}

impl SlopeTuple {
    pub fn new(slopes: Vec<Option<Slope>>) -> Result<SlopeTuple> {
        if slopes.iter().all(Option::is_none) {
            return Err(Error::Parse { what: "slope tuple", text: "no filled cusp".into() });
        }
        Ok(SlopeTuple { slopes })
    }

    pub fn slopes(&self) -> &[Option<Slope>] {
        &self.slopes
    }
}

/// `|p mu + q lambda| / sqrt(area)`.
pub fn normalized_length(cusp: &CuspShape, s: Slope) -> Interval {
    cusp.length(s)
        .div(&cusp.area.sqrt().expect("positive area"))
        .expect("positive area")
}

/// `L` with `1/L^2 = sum_j 1/L_j^2` over the filled cusps.
pub fn total_normalized_length(tuple: &SlopeTuple, cusps: &[CuspShape]) -> Result<Interval> {
    if tuple.slopes.len() != cusps.len() {
        return Err(Error::Parse {
            what: "slope tuple",
            text: format!("{} slopes for {} cusps", tuple.slopes.len(), cusps.len()),
        });
    }
    let mut inv = Interval::ZERO;
    for (s, c) in tuple.slopes.iter().zip(cusps) {
        if let Some(s) = s {
            inv = inv + normalized_length(c, *s).sqr().recip()?;
        }
    }
    inv.sqrt()?.recip()
}

/// Slopes certified inside a cutoff, and those the enclosures cannot separate from it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShortSlopes {
    pub cutoff: Interval,
    pub inside: Vec<Slope>,
    pub boundary: Vec<Slope>,
}

impl ShortSlopes {
    /// Inside and boundary slopes together, in canonical order.
    pub fn all(&self) -> Vec<Slope> {
        let mut v: Vec<Slope> = self.inside.iter().chain(&self.boundary).copied().collect();
        v.sort();
        v
    }
}

/// Enumerates every slope with `measure(s)` compared to `cutoff` by `decide`.
///
/// `radius` is an upper bound on the Euclidean length of any slope that
/// `decide` might not reject.
fn enumerate<M, D>(cusp: &CuspShape, cutoff: Interval, radius: f64, measure: M, decide: D) -> ShortSlopes
where
    M: Fn(Slope) -> Interval + Sync,
    D: Fn(Interval, Interval) -> Verdict + Sync,
{
    let (pmax, qmax) = cusp.coefficient_bounds(radius);
    let (measure, decide) = (&measure, &decide);
    let hits: Vec<(Slope, bool)> = (0..=pmax)
        .into_par_iter()
        .flat_map_iter(move |p| {
            let qs = if p == 0 { 1..=1 } else { -qmax..=qmax };
            qs.filter(move |q| p.gcd(q) == 1).filter_map(move |q| {
                let s = Slope { p, q };
                match decide(measure(s), cutoff) {
                    Verdict::Holds => Some((s, true)),
                    Verdict::Unknown => Some((s, false)),
                    Verdict::Fails => None,
                }
            })
        })
        .collect();
    let mut inside: Vec<Slope> = hits.iter().filter(|h| h.1).map(|h| h.0).collect();
    let mut boundary: Vec<Slope> = hits.iter().filter(|h| !h.1).map(|h| h.0).collect();
    inside.sort();
    boundary.sort();
    ShortSlopes { cutoff, inside, boundary }
}

fn positive_cutoff(func: &'static str, cutoff: Interval) -> Result<()> {
    if !(cutoff.lo() > 0.0) || !cutoff.hi().is_finite() {
        return Err(Error::domain(func, cutoff.lo(), cutoff.hi(), "needs a finite positive cutoff"));
    }
    Ok(())
}

/// Slopes with normalized length below `cutoff`, complete by construction.
pub fn enumerate_short_slopes(cusp: &CuspShape, cutoff: Interval) -> Result<ShortSlopes> {
    positive_cutoff("enumerate_short_slopes", cutoff)?;
    let radius = (Interval::point(cutoff.hi()) * cusp.area.sqrt()?).hi();
    Ok(enumerate(cusp, cutoff, radius, |s| normalized_length(cusp, s), Verdict::lt))
}

/// `S_1`: normalized length below `max{10.1, sqrt(2 pi/sys + 58)}`.
pub fn s1_set(cusp: &CuspShape, sys: Interval) -> Result<ShortSlopes> {
    enumerate_short_slopes(cusp, cosmetic_cutoff(sys)?)
}

/// `2 pi (1 - (V/vol)^(2/3))^(-1/2)`.
pub fn s2_cutoff(vol: Interval, v: Interval) -> Result<Interval> {
    if v.lo() < 0.0 || !(vol.lo() > 0.0) {
        return Err(Error::domain("s2_cutoff", v.lo(), v.hi(), "needs 0 <= V and vol > 0"));
    }
    if !v.certainly_lt(&vol) {
        return Err(Error::VolumeOrder { v_lo: v.lo(), v_hi: v.hi(), vol_lo: vol.lo(), vol_hi: vol.hi() });
    }
    let ratio = v.div(&vol)?;
    let two_thirds = Interval::point(2.0).div(&Interval::point(3.0))?;
    let pow = |x: f64| -> Result<Interval> {
        if x == 0.0 {
            Ok(Interval::ZERO)
        } else {
            Ok((Interval::point(x).ln()? * two_thirds).exp())
        }
    };
    let t = pow(ratio.lo())?.hull(&pow(ratio.hi())?);
    let t = Interval::new(t.lo().max(0.0), t.hi())?;
    (PI_IV * 2.0).div(&(Interval::ONE - t).sqrt()?)
}

/// `S_2`: Euclidean length at most the volume-ratio cutoff on the maximal cusp.
pub fn s2_set(cusp: &CuspShape, vol: Interval, v: Interval) -> Result<ShortSlopes> {
    let cutoff = s2_cutoff(vol, v)?;
    positive_cutoff("s2_set", cutoff)?;
    Ok(enumerate(cusp, cutoff, cutoff.hi(), |s| cusp.length(s), Verdict::le))
}

/// Slopes `(p, q)` with `p | q^2 + 1`, each paired with `(p, -q)`.
///
/// `(1, 0)` is its own partner and yields no pair.
pub fn niwu_pairs(slopes: &[Slope]) -> Vec<(Slope, Slope)> {
    slopes
        .iter()
        .filter_map(|s| s.niwu_partner().filter(|t| t != s).map(|t| (*s, t)))
        .collect()
}

/// One pair of the cosmetic search with both normalized lengths.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidatePair {
    pub s1: Slope,
    pub s2: Slope,
    pub length1: Interval,
    pub length2: Interval,
    /// Both slopes are certified members rather than boundary cases.
    pub certain: bool,
}

/// The finite search `S_1 x S_2` minus the diagonal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CosmeticCandidates {
    pub s1: ShortSlopes,
    pub s2: ShortSlopes,
    pub pairs: Vec<CandidatePair>,
}

impl CosmeticCandidates {
    /// Pairs of the form `((p, q), (p, -q))` with `p | q^2 + 1`.
    pub fn knot_filtered(&self) -> Vec<CandidatePair> {
        self.pairs
            .iter()
            .filter(|c| c.s1.niwu_partner() == Some(c.s2))
            .copied()
            .collect()
    }
}

/// Boundary slopes of either set are kept, so the search is a superset of the exact one.
pub fn cosmetic_candidates(cusp: &CuspShape, sys: Interval, vol: Interval, v: Interval) -> Result<CosmeticCandidates> {
    let s1 = s1_set(cusp, sys)?;
    let s2 = s2_set(cusp, vol, v)?;
    let mut pairs = Vec::new();
    for (a, a_in) in s1.inside.iter().map(|s| (s, true)).chain(s1.boundary.iter().map(|s| (s, false))) {
        for (b, b_in) in s2.inside.iter().map(|s| (s, true)).chain(s2.boundary.iter().map(|s| (s, false))) {
            if a != b {
                pairs.push(CandidatePair {
                    s1: *a,
                    s2: *b,
                    length1: normalized_length(cusp, *a),
                    length2: normalized_length(cusp, *b),
                    certain: a_in && b_in,
                });
            }
        }
    }
    pairs.sort_by(|x, y| (x.s1, x.s2).cmp(&(y.s1, y.s2)));
    Ok(CosmeticCandidates { s1, s2, pairs })
}

/// Input file for the cosmetic search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CuspFile {
    pub cusps: Vec<CuspShape>,
    pub sys: Real,
    pub vol: Real,
    #[serde(rename = "V")]
    pub v: Real,
}

impl CuspFile {
    pub fn from_json(text: &str) -> Result<CuspFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse { what: "cusp file", text: e.to_string() })
    }
}
