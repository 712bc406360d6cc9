//! Brute-force ground truth used to certify every other module.
//!
//! Everything here is exact and exponential (except the matching-based chain
//! cover); sizes are capped by [`OracleConfig`] and exceeding a cap is an
//! explicit [`Error::ResourceLimit`], never a truncated answer.

mod clique;
mod matching;
mod ramsey;
mod transitive;

use serde::Serialize;

use crate::bits::BitSet;
use crate::coloring::{Color, PairColoring};
use crate::error::{Error, Result};
use crate::partition::ColorPartition;
use crate::poset::PosetView;

pub use clique::max_clique;
pub use ramsey::RamseyCertificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleConfig {
    /// Largest universe for clique-based searches (homogeneous sets, width, height).
    pub exhaustive_limit: usize,
    /// Largest universe for the transitive-subsequence search.
    pub transitive_limit: usize,
    /// Largest universe for the matching-based chain cover.
    pub matching_limit: usize,
    /// Most colorings `ramsey_certify` may enumerate.
    pub ramsey_budget: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { exhaustive_limit: 64, transitive_limit: 16, matching_limit: 4096, ramsey_budget: 1 << 24 }
    }
}

impl OracleConfig {
    /// Defaults with a different clique-search limit.
    pub fn with_exhaustive_limit(limit: usize) -> Self {
        OracleConfig { exhaustive_limit: limit, ..Self::default() }
    }
}

/// A maximum size together with a set attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessedMax {
    pub size: usize,
    pub witness: Vec<usize>,
}

impl WitnessedMax {
    fn from_witness(witness: Vec<usize>) -> Self {
        WitnessedMax { size: witness.len(), witness }
    }
}

fn check_limit(what: &str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::ResourceLimit { what: what.into(), requested: n as u128, limit: limit as u128 });
    }
    Ok(())
}

/// Largest `S` with every pair of `S` colored `c`.
pub fn max_homog(f: &PairColoring, c: Color, cfg: &OracleConfig) -> Result<WitnessedMax> {
    let n = f.universe_size();
    check_limit("universe size", n, cfg.exhaustive_limit)?;
    let adj: Vec<BitSet> = (0..n).map(|x| f.neighbours(x, c)).collect();
    Ok(WitnessedMax::from_witness(max_clique(&adj)))
}

/// Size of the largest chain.
pub fn height(p: &PosetView, cfg: &OracleConfig) -> Result<WitnessedMax> {
    let n = p.universe_size();
    check_limit("universe size", n, cfg.exhaustive_limit)?;
    let adj: Vec<BitSet> = (0..n).map(|x| p.comparable_row(x)).collect();
    Ok(WitnessedMax::from_witness(max_clique(&adj)))
}

/// Size of the largest antichain.
pub fn width(p: &PosetView, cfg: &OracleConfig) -> Result<WitnessedMax> {
    let n = p.universe_size();
    check_limit("universe size", n, cfg.exhaustive_limit)?;
    let adj: Vec<BitSet> = (0..n)
        .map(|x| {
            let mut row = p.comparable_row(x).complement();
            row.remove(x);
            row
        })
        .collect();
    Ok(WitnessedMax::from_witness(max_clique(&adj)))
}

/// An optimal chain partition; classes are numbered by their least element.
///
/// The class count is checked against an antichain of equal size obtained
/// from the same matching, so a returned cover is always optimal.
pub fn min_chain_cover(p: &PosetView, cfg: &OracleConfig) -> Result<ColorPartition> {
    check_limit("universe size", p.universe_size(), cfg.matching_limit)?;
    let cover = matching::chain_cover(p);
    let antichain_ok = cover.antichain.iter().enumerate().all(|(i, &a)| {
        cover.antichain[i + 1..].iter().all(|&b| !p.comparable(a, b))
    });
    if !antichain_ok || cover.antichain.len() != cover.chains {
        return Err(Error::Internal(format!(
            "chain cover of size {} not matched by an antichain (found {})",
            cover.chains,
            cover.antichain.len()
        )));
    }
    ColorPartition::new(cover.chain_of, cover.chains)
}

/// Whether every `colors`-coloring of `[n]^2` has a monochromatic set of size `m`.
pub fn ramsey_certify(colors: usize, m: usize, n: usize, cfg: &OracleConfig) -> Result<RamseyCertificate> {
    ramsey::certify(colors, m, n, cfg.ramsey_budget)
}

/// Longest subsequence whose reindexed coloring is transitive for both colors.
pub fn max_transitive_subseq(f: &PairColoring, cfg: &OracleConfig) -> Result<WitnessedMax> {
    check_limit("universe size", f.universe_size(), cfg.transitive_limit)?;
    Ok(WitnessedMax::from_witness(transitive::longest_transitive(f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::hirst_reduction;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn max_homog_examples() {
        let f = PairColoring::new(5);
        assert_eq!(max_homog(&f, 1, &cfg()).unwrap().size, 1);
        assert_eq!(max_homog(&f, 0, &cfg()).unwrap().size, 5);

        let parity = PairColoring::from_fn(6, |x, y| (x % 2 == y % 2) as Color);
        let m = max_homog(&parity, 1, &cfg()).unwrap();
        assert_eq!(m, WitnessedMax { size: 3, witness: vec![0, 2, 4] });

        let balanced: Vec<usize> = (0..9).map(|x| x % 3).collect();
        assert_eq!(max_homog(&hirst_reduction(&balanced), 1, &cfg()).unwrap().size, 3);

        assert_eq!(max_homog(&PairColoring::new(0), 0, &cfg()).unwrap().size, 0);
        assert!(matches!(
            max_homog(&PairColoring::new(65), 0, &cfg()),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn width_height_examples() {
        for n in 1..6 {
            assert_eq!(height(&PosetView::chain(n), &cfg()).unwrap().size, n);
            assert_eq!(width(&PosetView::chain(n), &cfg()).unwrap().size, 1);
            assert_eq!(height(&PosetView::antichain(n), &cfg()).unwrap().size, 1);
            assert_eq!(width(&PosetView::antichain(n), &cfg()).unwrap().size, n);
        }
        let p = PosetView::from_relations(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(height(&p, &cfg()).unwrap().size, 2);
        assert_eq!(width(&p, &cfg()).unwrap().size, 2);
    }

    #[test]
    fn chain_cover_examples() {
        assert_eq!(min_chain_cover(&PosetView::chain(4), &cfg()).unwrap().used_classes(), 1);
        assert_eq!(min_chain_cover(&PosetView::antichain(4), &cfg()).unwrap().used_classes(), 4);
        let parity = PairColoring::from_fn(6, |x, y| (x % 2 == y % 2) as Color);
        let two_chains = crate::poset::poset_from_coloring(&parity, 1).unwrap();
        let g = min_chain_cover(&two_chains, &cfg()).unwrap();
        assert_eq!(g.labels(), &[0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn ramsey_examples() {
        assert!(ramsey_certify(2, 3, 6, &cfg()).unwrap().holds);
        let five = ramsey_certify(2, 3, 5, &cfg()).unwrap();
        assert!(!five.holds);
        assert!(ramsey_certify(1, 3, 3, &cfg()).unwrap().holds);
    }

    #[test]
    fn transitive_examples() {
        let zero = PairColoring::new(9);
        assert_eq!(max_transitive_subseq(&zero, &cfg()).unwrap().size, 9);
        let f = PairColoring::from_one_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(max_transitive_subseq(&f, &cfg()).unwrap().size, 4);
        assert!(max_transitive_subseq(&PairColoring::new(17), &cfg()).is_err());
    }
}
