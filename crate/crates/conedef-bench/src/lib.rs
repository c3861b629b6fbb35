//! Shared inputs for the criterion benches in `benches/`.

use conedef::Interval;

/// `n` evenly spaced point intervals in `[lo, hi]`, endpoints included.
pub fn grid(lo: f64, hi: f64, n: usize) -> Vec<Interval> {
    assert!(n >= 2 && lo < hi);
    (0..n)
        .map(|k| Interval::point(lo + (hi - lo) * k as f64 / (n - 1) as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_hits_endpoints() {
        let g = grid(0.1, 0.9, 5);
        assert_eq!(g.len(), 5);
        assert_eq!(g[0].lo(), 0.1);
        assert_eq!(g[4].hi(), 0.9);
    }
}
