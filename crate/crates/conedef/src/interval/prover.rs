//! Branch-and-bound certification of `f >= -margin` over a box.
//!
//! Boxes are processed breadth-first, one depth layer at a time. Within a
//! layer boxes may be evaluated in parallel, but outcomes are collected in
//! layer order and every selection (first error, smallest failing box,
//! smallest stuck box) is made on that ordered list, so the result does not
//! depend on the schedule.

use super::Interval;
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Product of intervals, one per free variable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalBox(pub Vec<Interval>);

impl IntervalBox {
    pub fn new(dims: Vec<Interval>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidInterval {
                lo: f64::NAN,
                hi: f64::NAN,
            });
        }
        Ok(IntervalBox(dims))
    }

    pub fn dims(&self) -> &[Interval] {
        &self.0
    }

    /// Lexicographic order on `(lo, hi)` of each coordinate.
    pub fn lex_cmp(&self, other: &IntervalBox) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            let o = a.lo().total_cmp(&b.lo()).then(a.hi().total_cmp(&b.hi()));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.0.len().cmp(&other.0.len())
    }

    /// Widest coordinate relative to `root`, ties to the lowest index.
    fn split_axis(&self, root: &IntervalBox) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for (i, (x, r)) in self.0.iter().zip(&root.0).enumerate() {
            let rw = r.width();
            if x.is_point() || rw == 0.0 {
                continue;
            }
            let rel = if rw.is_finite() { x.width() / rw } else { x.width() };
            if best.is_none_or(|(_, b)| rel > b) {
                best = Some((i, rel));
            }
        }
        best.map(|(i, _)| i)
    }

    /// Bisects along `axis`; `None` when the midpoint is not interior.
    fn split(&self, axis: usize) -> Option<(IntervalBox, IntervalBox)> {
        let x = self.0[axis];
        let (a, b) = x.bisect();
        if a.hi() <= x.lo() || a.hi() >= x.hi() {
            return None;
        }
        let mut left = self.0.clone();
        let mut right = self.0.clone();
        left[axis] = a;
        right[axis] = b;
        Some((IntervalBox(left), IntervalBox(right)))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum ProofStatus {
    /// `f >= -margin` on the whole domain.
    Verified,
    /// `sup f < -margin` on the returned box.
    Counterexample(IntervalBox),
    /// Undecided; the returned box could not be refined further.
    DepthExceeded(IntervalBox),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProofResult {
    pub status: ProofStatus,
    pub boxes_examined: u64,
    pub max_depth_used: u32,
}

impl ProofResult {
    pub fn is_verified(&self) -> bool {
        self.status == ProofStatus::Verified
    }
}

#[derive(Clone, Debug)]
pub struct ProveOptions {
    /// Allowed slack below zero.
    pub margin: f64,
    /// Maximum number of bisections along any branch.
    pub max_depth: u32,
    /// Threads used per layer; 1 evaluates sequentially.
    pub workers: usize,
    /// Budget on the total number of boxes examined.
    pub max_boxes: u64,
    /// Treat an evaluation error on a box as "undecided, split further"
    /// instead of aborting. Errors at the depth limit still abort.
    pub split_on_error: bool,
}

impl Default for ProveOptions {
    fn default() -> Self {
        ProveOptions {
            margin: 0.0,
            max_depth: 60,
            workers: 1,
            max_boxes: 20_000_000,
            split_on_error: false,
        }
    }
}

enum Outcome {
    Pass,
    Fail,
    Undecided,
    Error(Error),
}

fn classify<F>(f: &F, b: &IntervalBox, margin: f64) -> Outcome
where
    F: Fn(&[Interval]) -> Result<Interval>,
{
    match f(&b.0) {
        Ok(v) if v.lo() >= -margin => Outcome::Pass,
        Ok(v) if v.hi() < -margin => Outcome::Fail,
        Ok(_) => Outcome::Undecided,
        Err(e) => Outcome::Error(e),
    }
}

fn smallest(boxes: impl Iterator<Item = IntervalBox>) -> Option<IntervalBox> {
    boxes.min_by(|a, b| a.lex_cmp(b))
}

/// Certifies `f(x) >= -margin` for all `x` in `domain`.
pub fn prove_nonneg<F>(f: F, domain: &IntervalBox, opts: &ProveOptions) -> Result<ProofResult>
where
    F: Fn(&[Interval]) -> Result<Interval> + Sync,
{
    let pool = if opts.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .expect("thread pool"),
        )
    } else {
        None
    };
    let margin = opts.margin.max(0.0);
    let mut layer = vec![domain.clone()];
    let mut depth = 0u32;
    let mut examined = 0u64;
    loop {
        let outcomes: Vec<Outcome> = match &pool {
            Some(p) => p.install(|| layer.par_iter().map(|b| classify(&f, b, margin)).collect()),
            None => layer.iter().map(|b| classify(&f, b, margin)).collect(),
        };
        examined += layer.len() as u64;
        let done = |status| ProofResult {
            status,
            boxes_examined: examined,
            max_depth_used: depth,
        };

        let mut fails = Vec::new();
        let mut undecided = Vec::new();
        for (b, o) in layer.into_iter().zip(outcomes) {
            match o {
                Outcome::Pass => {}
                Outcome::Fail => fails.push(b),
                Outcome::Undecided => undecided.push(b),
                Outcome::Error(_) if opts.split_on_error && depth < opts.max_depth => {
                    undecided.push(b)
                }
                Outcome::Error(e) => return Err(e),
            }
        }
        if let Some(b) = smallest(fails.into_iter()) {
            return Ok(done(ProofStatus::Counterexample(b)));
        }
        if undecided.is_empty() {
            return Ok(done(ProofStatus::Verified));
        }

        let mut next = Vec::with_capacity(undecided.len() * 2);
        let mut stuck = Vec::new();
        for b in undecided {
            let parts = if depth < opts.max_depth {
                b.split_axis(domain).and_then(|ax| b.split(ax))
            } else {
                None
            };
            match parts {
                Some((l, r)) => {
                    next.push(l);
                    next.push(r);
                }
                None => stuck.push(b),
            }
        }
        if let Some(b) = smallest(stuck.into_iter()) {
            return Ok(done(ProofStatus::DepthExceeded(b)));
        }
        if examined + next.len() as u64 > opts.max_boxes {
            let b = smallest(next.into_iter()).expect("nonempty layer");
            return Ok(done(ProofStatus::DepthExceeded(b)));
        }
        layer = next;
        depth += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(a: f64, b: f64) -> IntervalBox {
        IntervalBox::new(vec![Interval::new(a, b).unwrap()]).unwrap()
    }

    #[test]
    fn square_is_nonnegative() {
        let r = prove_nonneg(|x| Ok(x[0].sqr()), &dom(-1.0, 1.0), &ProveOptions::default()).unwrap();
        assert!(r.is_verified());
        assert_eq!(r.boxes_examined, 1);
    }

    #[test]
    fn cube_has_counterexample_at_minus_one() {
        let r = prove_nonneg(|x| Ok(x[0].pow_int(3)), &dom(-1.0, 1.0), &ProveOptions::default())
            .unwrap();
        match r.status {
            ProofStatus::Counterexample(b) => assert!(b.0[0].contains(-1.0)),
            other => panic!("{other:?}"),
        }
    }

    /// `t - sin t` at a point; a series with alternating remainder near 0.
    fn x_minus_sin_point(t: f64) -> Interval {
        let x = Interval::point(t);
        if t < 0.5 {
            let t3 = x.pow_int(3);
            let series = t3 * (1.0 / 6.0) - x.pow_int(5).div(&Interval::point(120.0)).unwrap();
            let rem = x.pow_int(7).div(&Interval::point(5040.0)).unwrap();
            series + Interval::new(0.0, rem.hi()).unwrap()
        } else {
            x - x.sin().unwrap()
        }
    }

    #[test]
    fn x_minus_sin_x() {
        // Increasing because 1 - cos x >= 0, so endpoint values bound the range.
        let f = |x: &[Interval]| {
            let d = Interval::ONE - x[0].cos()?;
            assert!(d.lo() >= 0.0 || x[0].lo() <= 0.0);
            Ok(x_minus_sin_point(x[0].lo()).hull(&x_minus_sin_point(x[0].hi())))
        };
        let r = prove_nonneg(f, &dom(0.0, 1.0), &ProveOptions::default()).unwrap();
        assert!(r.is_verified());
    }

    #[test]
    fn errors_propagate() {
        let r = prove_nonneg(|x| x[0].ln(), &dom(-1.0, 1.0), &ProveOptions::default());
        assert!(matches!(r, Err(Error::Domain { .. })));
    }

    #[test]
    fn depth_limit_reports_stuck_box() {
        let opts = ProveOptions {
            max_depth: 5,
            ..Default::default()
        };
        let r = prove_nonneg(|x| Ok(x[0] - x[0]), &dom(0.0, 1.0), &opts).unwrap();
        assert!(matches!(r.status, ProofStatus::DepthExceeded(_)));
        assert_eq!(r.max_depth_used, 5);
    }

    #[test]
    fn schedule_independent() {
        let f = |x: &[Interval]| Ok(x[0].sin()? * x[1].cos()? + Interval::point(0.3));
        let d = IntervalBox::new(vec![
            Interval::new(0.0, 3.0).unwrap(),
            Interval::new(0.0, 3.0).unwrap(),
        ])
        .unwrap();
        let run = |w| {
            prove_nonneg(
                f,
                &d,
                &ProveOptions {
                    workers: w,
                    ..Default::default()
                },
            )
            .unwrap()
        };
        let a = run(1);
        assert_eq!(a, run(4));
        assert_eq!(a, run(16));
        assert!(matches!(a.status, ProofStatus::Counterexample(_)));
    }
}
