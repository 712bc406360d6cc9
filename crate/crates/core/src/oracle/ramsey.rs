//! Exhaustive certification of finite Ramsey statements `N -> (m)^2_k`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyCertificate {
    pub colors: usize,
    pub set_size: usize,
    pub universe_size: usize,
    /// True iff every coloring of `[N]^2` with `colors` colors has a monochromatic set of `set_size`.
    pub holds: bool,
    pub colorings_checked: u128,
    /// First coloring (pair colors in `(x, y)` lexicographic order) with no monochromatic set.
    pub counterexample: Option<Vec<u8>>,
}

fn pair_index(n: usize, x: usize, y: usize) -> usize {
    // Position of (x, y), x < y, in lexicographic order.
    x * (2 * n - x - 1) / 2 + (y - x - 1)
}

fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < m - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, m, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn certify(colors: usize, m: usize, n: usize, budget: u128) -> Result<RamseyCertificate> {
    let pairs = n * n.saturating_sub(1) / 2;
    let total = u32::try_from(pairs)
        .ok()
        .and_then(|p| (colors as u128).checked_pow(p))
        .unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::ResourceLimit { what: "colorings to enumerate".into(), requested: total, limit: budget });
    }
    let mut cert = RamseyCertificate {
        colors,
        set_size: m,
        universe_size: n,
        holds: true,
        colorings_checked: 0,
        counterexample: None,
    };
    if m > n {
        // No set of that size exists; only an empty family of colorings satisfies the claim vacuously.
        cert.holds = total == 0;
        if total > 0 {
            cert.colorings_checked = 1;
            cert.counterexample = Some(vec![0; pairs]);
        }
        return Ok(cert);
    }
    if total == 0 {
        return Ok(cert);
    }
    // Each candidate set as the list of its pair indices.
    let candidates: Vec<Vec<usize>> = subsets(n, m)
        .into_iter()
        .map(|s| {
            let mut idx = Vec::new();
            for (i, &x) in s.iter().enumerate() {
                for &y in &s[i + 1..] {
                    idx.push(pair_index(n, x, y));
                }
            }
            idx
        })
        .collect();

    let mut coloring = vec![0u8; pairs];
    loop {
        cert.colorings_checked += 1;
        let has_mono = candidates.iter().any(|idx| match idx.first() {
            None => true,
            Some(&first) => idx.iter().all(|&p| coloring[p] == coloring[first]),
        });
        if !has_mono {
            cert.holds = false;
            cert.counterexample = Some(coloring);
            return Ok(cert);
        }
        // Mixed-radix increment.
        let mut pos = 0;
        loop {
            if pos == pairs {
                return Ok(cert);
            }
            coloring[pos] += 1;
            if (coloring[pos] as usize) < colors {
                break;
            }
            coloring[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_lexicographic() {
        let n = 5;
        let mut k = 0;
        for x in 0..n {
            for y in x + 1..n {
                assert_eq!(pair_index(n, x, y), k);
                k += 1;
            }
        }
    }

    #[test]
    fn degenerate_cases() {
        assert!(certify(1, 3, 3, 1 << 20).unwrap().holds);
        assert!(!certify(1, 3, 2, 1 << 20).unwrap().holds);
        assert!(certify(2, 1, 1, 1 << 20).unwrap().holds);
        assert!(certify(3, 0, 0, 1 << 20).unwrap().holds);
        assert!(matches!(certify(2, 3, 12, 1 << 20), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn pentagon_counterexample_for_five() {
        let c = certify(2, 3, 5, 1 << 20).unwrap();
        assert!(!c.holds);
        let ce = c.counterexample.unwrap();
        // No monochromatic triangle in the reported coloring.
        for s in subsets(5, 3) {
            let cols = [pair_index(5, s[0], s[1]), pair_index(5, s[0], s[2]), pair_index(5, s[1], s[2])]
                .map(|p| ce[p]);
            assert!(!(cols[0] == cols[1] && cols[1] == cols[2]));
        }
    }
}
