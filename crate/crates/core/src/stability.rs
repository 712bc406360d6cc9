//! Finite-horizon stability of a coloring: how often `y ↦ f(x, y)` changes and where it ends.

use serde::Serialize;

use crate::coloring::{Color, PairColoring};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityProfile {
    /// `flips[x] = |{ y : x < y < N-1, f(x,y) != f(x,y+1) }|`.
    pub flips: Vec<usize>,
    /// `f(x, N-1)`; the last element has no partner and counts as 0.
    pub limit_color: Vec<Color>,
    /// Elements whose limit color is 0, ascending.
    pub limit_zero_set: Vec<usize>,
}

impl StabilityProfile {
    pub fn max_flips(&self) -> usize {
        self.flips.iter().copied().max().unwrap_or(0)
    }
}

pub fn stability_profile(f: &PairColoring) -> StabilityProfile {
    let n = f.universe_size();
    let mut flips = vec![0; n];
    let mut limit_color = vec![0; n];
    for x in 0..n {
        for y in x + 1..n.saturating_sub(1) {
            if f.color(x, y) != f.color(x, y + 1) {
                flips[x] += 1;
            }
        }
        if x + 1 < n {
            limit_color[x] = f.color(x, n - 1);
        }
    }
    let limit_zero_set = (0..n).filter(|&x| limit_color[x] == 0).collect();
    StabilityProfile { flips, limit_color, limit_zero_set }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_zero() {
        let p = stability_profile(&PairColoring::new(5));
        assert_eq!(p.flips, vec![0; 5]);
        assert_eq!(p.limit_zero_set, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn single_late_switch() {
        let f = PairColoring::from_fn(6, |x, y| (x == 0 && y >= 2) as Color);
        let p = stability_profile(&f);
        assert_eq!(p.flips[0], 1);
        assert_eq!(p.limit_color[0], 1);
        assert_eq!(p.limit_zero_set, vec![1, 2, 3, 4, 5]);
        assert_eq!(p.max_flips(), 1);
    }

    #[test]
    fn limit_zero_set_matches_final_suffix() {
        let f = PairColoring::from_fn(7, |x, y| ((x + y) % 3 == 0) as Color);
        let p = stability_profile(&f);
        for x in 0..7 {
            // The last run of y > x on which f(x, .) is constant has the limit color.
            let last = (x + 1..7).last().map(|y| f.color(x, y)).unwrap_or(0);
            assert_eq!(p.limit_zero_set.contains(&x), last == 0);
        }
    }
}
