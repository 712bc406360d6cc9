//! Seeded instance generators. All randomness comes from ChaCha8 seeded with
//! `seed_from_u64`, so a seed fixes the instance on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adversary::ApproximationSchedule;
use crate::bits::BitSet;
use crate::coloring::{hirst_reduction, PairColoring};
use crate::error::{Error, Result};
use crate::poset::PosetView;
use crate::stream::{StreamEvent, StreamFamily};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::input(format!("probability {p} outside [0, 1]")))
    }
}

/// Each pair colored 1 independently with probability `p`.
pub fn random_coloring(n: usize, p: f64, seed: u64) -> Result<PairColoring> {
    check_probability(p)?;
    let mut r = rng(seed);
    Ok(PairColoring::from_fn(n, |_, _| r.gen_bool(p) as u8))
}

/// `f(x, y) = 1` iff `x` and `y` lie in the same block of width `w`.
pub fn blocks(n: usize, w: usize) -> Result<PairColoring> {
    if w == 0 {
        return Err(Error::input("block width must be positive"));
    }
    Ok(PairColoring::from_fn(n, |x, y| (x / w == y / w) as u8))
}

/// Hirst reduction of a `k`-coloring of points: `x mod k` when balanced, uniform otherwise.
pub fn pigeonhole(n: usize, k: usize, balanced: bool, seed: u64) -> Result<PairColoring> {
    if k == 0 {
        return Err(Error::input("pigeonhole needs at least one class"));
    }
    let mut r = rng(seed);
    let g: Vec<usize> = (0..n).map(|x| if balanced { x % k } else { r.gen_range(0..k) }).collect();
    Ok(hirst_reduction(&g))
}

/// A pigeonhole coloring with each 1-pair kept with probability `keep`.
///
/// Recoloring 1-pairs to 0 cannot create a 1-homogeneous set, so there is
/// none of size `k + 1`.
pub fn thinned_pigeonhole(n: usize, k: usize, keep: f64, seed: u64) -> Result<PairColoring> {
    check_probability(keep)?;
    let base = pigeonhole(n, k, false, seed)?;
    let mut r = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    Ok(PairColoring::from_fn(n, |x, y| (base.color(x, y) == 1 && r.gen_bool(keep)) as u8))
}

/// Down-sets of an order on `[0, n)` in which `x < y` whenever `x` is below `y`.
///
/// With `lanes = Some(w)` each element joins a random lane and sits above the
/// previous member of its lane, so the lanes are chains and the width is at most `w`.
/// With `max_height = Some(h)` no chain has more than `h` elements.
fn random_downsets(n: usize, lanes: Option<usize>, max_height: Option<usize>, p: f64, r: &mut ChaCha8Rng) -> Vec<BitSet> {
    let mut down: Vec<BitSet> = Vec::with_capacity(n);
    let mut rank = vec![0usize; n];
    let mut lane_top: Vec<Option<usize>> = vec![None; lanes.unwrap_or(0)];
    for y in 0..n {
        let mut preds: Vec<usize> = (0..y)
            .filter(|&x| max_height.is_none_or(|h| rank[x] + 1 < h) && r.gen_bool(p))
            .collect();
        if let Some(w) = lanes {
            let lane = r.gen_range(0..w);
            if let Some(top) = lane_top[lane] {
                preds.push(top);
            }
            lane_top[lane] = Some(y);
        }
        let mut d = BitSet::new(n);
        for &x in &preds {
            d.insert(x);
            for z in down[x].iter() {
                d.insert(z);
            }
            rank[y] = rank[y].max(rank[x] + 1);
        }
        down.push(d);
    }
    down
}

/// An up-growing order of width at most `width`, as a coloring transitive for
/// 0: `f(x, y) = 0` iff `x` is below `y`. No 1-homogeneous set exceeds `width`.
pub fn up_growing(n: usize, width: usize, p: f64, seed: u64) -> Result<PairColoring> {
    check_probability(p)?;
    if width == 0 && n > 0 {
        return Err(Error::input("width must be positive"));
    }
    let down = random_downsets(n, Some(width.max(1)), None, p, &mut rng(seed));
    Ok(PairColoring::from_fn(n, |x, y| (!down[y].contains(x)) as u8))
}

/// An up-growing order with no chain longer than `height`, colored 1 on
/// comparable pairs, so it is transitive for 1 with no 1-homogeneous set of size `height + 1`.
pub fn height_bounded(n: usize, height: usize, p: f64, seed: u64) -> Result<PairColoring> {
    check_probability(p)?;
    if height == 0 && n > 0 {
        return Err(Error::input("height must be positive"));
    }
    let down = random_downsets(n, None, Some(height.max(1)), p, &mut rng(seed));
    Ok(PairColoring::from_fn(n, |x, y| down[y].contains(x) as u8))
}

/// A random order with elements shuffled, so the labels need not follow the order.
pub fn random_poset(n: usize, p: f64, seed: u64) -> Result<PosetView> {
    check_probability(p)?;
    let mut r = rng(seed);
    let down = random_downsets(n, None, None, p, &mut r);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    let mut above = vec![BitSet::new(n); n];
    for (y, d) in down.iter().enumerate() {
        for x in d.iter() {
            above[perm[x]].insert(perm[y]);
        }
    }
    PosetView::new(above)
}

/// `streams` streams over `[0, horizon)`; stream `e` lists each element with
/// probability `density`, at a stage no earlier than the element itself.
pub fn stream_family(streams: usize, horizon: usize, density: f64, seed: u64) -> Result<StreamFamily> {
    check_probability(density)?;
    let mut r = rng(seed);
    let mut events = Vec::new();
    for e in 0..streams {
        for x in 0..horizon {
            if r.gen_bool(density) {
                let stage = (x + r.gen_range(0..4)).min(horizon - 1);
                events.push(StreamEvent { stream: e, element: x, stage });
            }
        }
    }
    StreamFamily::new(streams, horizon, events)
}

/// A schedule with `k` components that occasionally raises a suffix of the
/// components to a larger value, never reaching `max_value + 1`.
pub fn schedule(k: usize, horizon: usize, max_value: usize, change_rate: f64, seed: u64) -> Result<ApproximationSchedule> {
    check_probability(change_rate)?;
    let mut r = rng(seed);
    let mut table = vec![vec![0; k]; horizon];
    for s in 1..horizon {
        table[s] = table[s - 1].clone();
        if k > 0 && r.gen_bool(change_rate) {
            let i = r.gen_range(0..k);
            let cap = max_value.min(s - 1);
            if table[s][i] < cap {
                let v = r.gen_range(table[s][i] + 1..=cap);
                for cell in &mut table[s][i..] {
                    *cell = (*cell).max(v);
                }
            }
        }
    }
    ApproximationSchedule::new(k, table)
}
