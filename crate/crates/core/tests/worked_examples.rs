//! Small hand-checked instances, one test each.

mod common;

use bounded_ramsey::adversary::{build_composite, build_fnb, check_fnb, ApproximationSchedule, Verdict};
use bounded_ramsey::extractor::{solve_brt, PlacementTree};
use bounded_ramsey::felsner::{self, color_bound};
use bounded_ramsey::oracle::{self, OracleConfig};
use bounded_ramsey::pipelines::{greedy_min_homogeneous, pipeline_em, pipeline_hem, reindex};
use bounded_ramsey::{
    coloring_from_poset, generate, hirst_reduction, mirsky, poset_from_coloring, stability_profile,
    validate_partition, ColorPartition, PairColoring, PartitionMode, PosetView, StreamEvent, StreamFamily, Subject,
};
use common::all_pairs;

fn parity(n: usize) -> PairColoring {
    PairColoring::from_fn(n, |x, y| u8::from(x % 2 != y % 2))
}

fn golden() -> PairColoring {
    PairColoring::from_one_edges(4, &[(0, 1), (2, 3)]).unwrap()
}

fn delayed_identity(horizon: usize) -> StreamFamily {
    let events = (0..horizon - 1).map(|x| StreamEvent { stream: 0, element: x, stage: x + 1 }).collect();
    StreamFamily::new(1, horizon, events).unwrap()
}

#[test]
fn homogeneity_of_small_sets() {
    let f = parity(6);
    assert!(f.is_homogeneous(&[5], 1).unwrap());
    assert!(PairColoring::new(4).is_homogeneous(&[0, 1, 2, 3], 0).unwrap());
}

#[test]
fn golden_coloring_is_transitive_for_both_colors() {
    let f = golden();
    assert!(f.is_transitive(0) && f.is_transitive(1));
    assert!(PairColoring::new(5).is_transitive(1));
}

#[test]
fn posets_from_constant_colorings() {
    let chain = poset_from_coloring(&PairColoring::new(4), 0).unwrap();
    assert!((0..4).all(|x| (x + 1..4).all(|y| chain.less(x, y))));
    let empty = poset_from_coloring(&PairColoring::from_fn(4, |_, _| 1), 0).unwrap();
    assert!(empty.relations().is_empty());
    assert_eq!(coloring_from_poset(&PosetView::chain(3)), PairColoring::new(3));
    assert_eq!(coloring_from_poset(&PosetView::antichain(3)), PairColoring::from_fn(3, |_, _| 1));
}

#[test]
fn hirst_reduction_of_parity() {
    assert_eq!(hirst_reduction(&[4; 5]), PairColoring::new(5));
    let f = hirst_reduction(&[0, 1, 0, 1, 0, 1]);
    assert_eq!(f, parity(6));
    assert_eq!(oracle::max_homog(&f, 1, &OracleConfig::default()).unwrap().size, 2);
}

#[test]
fn stability_of_a_single_late_flip() {
    let f = PairColoring::from_fn(6, |x, y| u8::from(x == 0 && y >= 2));
    let prof = stability_profile(&f);
    assert_eq!(prof.flips[0], 1);
    assert_eq!(prof.limit_color[0], 1);
    assert_eq!(prof.limit_zero_set, vec![1, 2, 3, 4, 5]);
    let zero = stability_profile(&PairColoring::new(6));
    assert!(zero.flips.iter().all(|&c| c == 0));
    assert_eq!(zero.limit_zero_set, (0..6).collect::<Vec<_>>());
}

#[test]
fn partitions_validate() {
    let f = golden();
    let singletons = ColorPartition::new((0..4).collect(), 4).unwrap();
    assert!(validate_partition(Subject::Coloring(&f), &singletons, PartitionMode::ZeroHomog).unwrap().is_valid());
    let run = felsner::run(&f, 3).unwrap();
    let report = validate_partition(Subject::Coloring(&f), &run.partition, PartitionMode::ZeroHomog).unwrap();
    assert!(report.is_valid());
    assert_eq!(run.partition.used_classes(), 2);
}

#[test]
fn oracle_values() {
    let cfg = OracleConfig::default();
    assert_eq!(oracle::max_homog(&PairColoring::new(5), 1, &cfg).unwrap().size, 1);
    let m = oracle::max_homog(&parity(6), 1, &cfg).unwrap();
    assert_eq!(m.size, 2);
    let m = oracle::max_homog(&parity(6), 0, &cfg).unwrap();
    assert_eq!((m.size, m.witness), (3, vec![0, 2, 4]));
    let chain = PosetView::chain(7);
    assert_eq!(oracle::height(&chain, &cfg).unwrap().size, 7);
    assert_eq!(oracle::width(&chain, &cfg).unwrap().size, 1);
    let anti = PosetView::antichain(7);
    assert_eq!(oracle::height(&anti, &cfg).unwrap().size, 1);
    assert_eq!(oracle::width(&anti, &cfg).unwrap().size, 7);
    assert_eq!(oracle::min_chain_cover(&chain, &cfg).unwrap().used_classes(), 1);
    assert_eq!(oracle::min_chain_cover(&anti, &cfg).unwrap().used_classes(), 7);
    assert_eq!(oracle::max_transitive_subseq(&PairColoring::new(9), &cfg).unwrap().size, 9);
    assert_eq!(oracle::max_transitive_subseq(&golden(), &cfg).unwrap().size, 4);
}

#[test]
fn three_three_ramsey_number() {
    let cfg = OracleConfig::default();
    assert!(oracle::ramsey_certify(2, 3, 6, &cfg).unwrap().holds);
    let five = oracle::ramsey_certify(2, 3, 5, &cfg).unwrap();
    assert!(!five.holds);
    assert_eq!(five.counterexample.unwrap().len(), 10);
}

#[test]
fn first_felsner_stage_opens_a_chain() {
    let mut lib = felsner::ChainLibrary::new(3).unwrap();
    let rec = lib.step(&parity(3)).unwrap();
    assert_eq!((rec.level, rec.case), (1, felsner::StepCase::Open));
    assert_eq!(lib.snapshot(), vec![vec![vec![0]], vec![]]);
}

#[test]
fn felsner_on_constant_zero_uses_one_chain() {
    for k in 2..6 {
        assert_eq!(felsner::run(&PairColoring::new(20), k).unwrap().partition.used_classes(), 1);
    }
    assert_eq!((color_bound(1), color_bound(3), color_bound(5)), (1, 6, 15));
}

#[test]
fn mirsky_functions() {
    let chain = PosetView::chain(3);
    assert_eq!(mirsky::g0(&chain), vec![0, 1, 2]);
    assert_eq!(mirsky::g1(&chain), vec![0, 0, 0]);
    let anti = PosetView::antichain(4);
    assert_eq!(mirsky::g0(&anti), vec![0; 4]);
    assert_eq!(mirsky::g1(&anti), vec![0; 4]);
    assert_eq!(mirsky::run_weak(&anti).used_classes(), 1);
    let v = PosetView::from_relations(3, &[(0, 2), (1, 2)]).unwrap();
    let classes: Vec<Vec<usize>> = mirsky::run_weak(&v).classes().into_iter().filter(|c| !c.is_empty()).collect();
    assert_eq!(classes, vec![vec![0, 1], vec![2]]);
    assert_eq!(mirsky::run_exact(&chain).unwrap().used_classes(), 3);
    assert_eq!(mirsky::run_exact(&anti).unwrap().used_classes(), 1);
}

#[test]
fn placement_tree_on_blocks() {
    let f = generate::blocks(6, 2).unwrap();
    let mut tree = PlacementTree::new();
    for x in 0..6 {
        tree.insert(x, &f).unwrap();
    }
    assert_eq!(tree.children_of(None), vec![0, 2, 4]);
    assert_eq!(tree.children_of(Some(0)), vec![1]);
    assert_eq!(tree.children_of(Some(2)), vec![3]);
    assert_eq!(tree.children_of(Some(4)), vec![5]);
}

#[test]
fn extraction_examples() {
    assert_eq!(solve_brt(&PairColoring::new(10), 2).unwrap().set, (0..10).collect::<Vec<_>>());
    let ex = solve_brt(&generate::blocks(6, 2).unwrap(), 3).unwrap();
    assert_eq!(ex.set, vec![0, 2, 4]);
    assert!(ex.set.len() >= ex.stats.guaranteed_size && ex.stats.guaranteed_size >= 1);
}

#[test]
fn single_block_machine() {
    assert_eq!(build_fnb(&delayed_identity(6), 0, 0, 6).unwrap().coloring(), PairColoring::new(6));
    let w = delayed_identity(6);
    let run = build_fnb(&w, 1, 0, 6).unwrap();
    assert_eq!(run.activation_stage, vec![Some(2)]);
    let f = run.coloring();
    let ones: Vec<(usize, usize)> = (2..6).map(|y| (0, y)).collect();
    assert_eq!(f.one_edges(), ones);
    assert_eq!(check_fnb(&run, &w).streams[0].verdict, Verdict::Caught { x: 0, y: 2 });
}

#[test]
fn small_stream_is_not_yet_caught() {
    let w = StreamFamily::new(1, 6, vec![StreamEvent { stream: 0, element: 3, stage: 4 }]).unwrap();
    let run = build_fnb(&w, 1, 0, 6).unwrap();
    assert!(matches!(check_fnb(&run, &w).streams[0].verdict, Verdict::NotYetCaught { .. }));
}

#[test]
fn composite_follows_the_schedule() {
    let w = delayed_identity(8);
    let table: Vec<Vec<usize>> = (0..8).map(|s| vec![usize::from(s >= 3)]).collect();
    let g = ApproximationSchedule::new(1, table).unwrap();
    let c = build_composite(&w, &g).unwrap();
    assert_eq!(c.coloring, c.components[0]);
    let machine = c.machine(1, 3).expect("machine f_1^3");
    for y in 0..8 {
        for x in 0..y {
            let want = if y < 3 { 0 } else { machine.color(x, y) };
            assert_eq!(c.coloring.color(x, y), want, "pair ({x}, {y})");
        }
    }
    assert!(c.block_starts[0][3..].iter().all(|&b| b == 3));

    let steady: Vec<Vec<usize>> = (0..8).map(|s| vec![usize::from(s >= 2); 2]).collect();
    let g = ApproximationSchedule::new(2, steady).unwrap();
    let c = build_composite(&w, &g).unwrap();
    for i in 0..2 {
        assert!(c.block_starts[i][2..].iter().all(|&b| b == c.block_starts[i][2]));
    }
}

#[test]
fn greedy_subsequences() {
    assert_eq!(greedy_min_homogeneous(&PairColoring::new(8)), (0..8).collect::<Vec<_>>());
    let f = parity(8);
    let xs = greedy_min_homogeneous(&f);
    assert!(xs.len() >= 4);
    let h = reindex(&f, &xs).unwrap();
    assert!(h.is_transitive(0) && h.is_transitive(1));
    assert_eq!(reindex(&f, &(0..8).collect::<Vec<_>>()).unwrap(), f);
    assert_eq!(reindex(&f, &[0, 2, 4]).unwrap(), PairColoring::new(3));
    assert_eq!(reindex(&f, &[0, 1, 2]).unwrap(), PairColoring::from_fn(3, |x, y| u8::from(x % 2 != y % 2)));
}

#[test]
fn pipeline_examples() {
    assert_eq!(pipeline_em(&PairColoring::new(8), 2).unwrap().set, (0..8).collect::<Vec<_>>());
    let f = parity(8);
    let out = pipeline_em(&f, 3).unwrap();
    assert!(!out.set.is_empty() && all_pairs(&f, &out.set, 0));
    assert_eq!(pipeline_hem(&PairColoring::new(8), 2, 0).unwrap().set, (0..8).collect::<Vec<_>>());
    let b = generate::blocks(6, 2).unwrap();
    let out = pipeline_hem(&b, 3, 1).unwrap();
    assert_eq!(out.set, vec![0, 2, 4]);
}

#[test]
fn generator_examples() {
    let b = generate::blocks(6, 2).unwrap();
    assert_eq!(b.one_edges(), vec![(0, 1), (2, 3), (4, 5)]);
    let p = generate::pigeonhole(9, 3, true, 1).unwrap();
    assert_eq!(oracle::max_homog(&p, 1, &OracleConfig::default()).unwrap().size, 3);
}
