mod common;

use bounded_ramsey::adversary::{build_fnb, ApproximationSchedule};
use bounded_ramsey::extractor::{solve_brt, PlacementTree};
use bounded_ramsey::felsner::{self, ChainLibrary};
use bounded_ramsey::format;
use bounded_ramsey::pipelines::{greedy_min_homogeneous, reindex};
use bounded_ramsey::{
    generate, hirst_reduction, mirsky, validate_partition, ColorPartition, PairColoring, PartitionMode, Subject,
};
use common::{all_pairs, coloring_from_mask, no_one_triangle, strictly_increasing};
use proptest::prelude::*;

fn coloring(max_n: usize) -> impl Strategy<Value = PairColoring> {
    (0..=max_n, any::<u64>()).prop_map(|(n, mask)| coloring_from_mask(n, mask))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn validator_agrees_with_pairwise_check(f in coloring(10), labels in prop::collection::vec(0usize..4, 10)) {
        let n = f.universe_size();
        let g = ColorPartition::new(labels[..n].to_vec(), 4).unwrap();
        let report = validate_partition(Subject::Coloring(&f), &g, PartitionMode::ZeroHomog).unwrap();
        let direct = g.classes().iter().all(|c| all_pairs(&f, c, 0));
        prop_assert_eq!(report.is_valid(), direct);
    }

    #[test]
    fn felsner_replay_reproduces_the_library(n in 0usize..120, w in 1usize..4, p in 0.0f64..0.3, seed in any::<u64>()) {
        let f = generate::up_growing(n, w, p, seed).unwrap();
        let k = w + 1;
        let run = felsner::run(&f, k).unwrap();
        let replayed = ChainLibrary::replay(k, &run.trace).unwrap();
        prop_assert_eq!(&replayed, &run.library);
        prop_assert!(run.library.check_invariants(&f).is_ok());
        for class in run.partition.classes() {
            prop_assert!(all_pairs(&f, &class, 0));
        }
        prop_assert!(run.partition.used_classes() <= k * (k + 1) / 2);
    }

    #[test]
    fn felsner_errors_carry_true_witnesses(n in 0usize..40, p in 0.0f64..1.0, k in 2usize..5, seed in any::<u64>()) {
        // Color 0 exactly on the pairs ordered by the poset.
        let poset = generate::random_poset(n, p, seed).unwrap();
        let f = PairColoring::from_fn(n, |x, y| u8::from(!(poset.less(x, y))));
        if !f.is_transitive(0) {
            return Ok(());
        }
        match felsner::run(&f, k) {
            Ok(run) => prop_assert!(run.partition.classes().iter().all(|c| all_pairs(&f, c, 0))),
            Err(bounded_ramsey::Error::HypothesisViolated { witness }) => {
                prop_assert_eq!(witness.len(), k);
                prop_assert!(strictly_increasing(&witness) && all_pairs(&f, &witness, 1));
            }
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn weak_mirsky_classes_are_antichains(n in 0usize..60, p in 0.0f64..0.4, seed in any::<u64>()) {
        let poset = generate::random_poset(n, p, seed).unwrap();
        let g = mirsky::run_weak(&poset);
        for class in g.classes() {
            for (i, &a) in class.iter().enumerate() {
                for &b in &class[i + 1..] {
                    prop_assert!(!poset.less(a, b) && !poset.less(b, a));
                }
            }
        }
    }

    #[test]
    fn reindexing_pulls_back(f in coloring(11)) {
        let xs = greedy_min_homogeneous(&f);
        prop_assert!(strictly_increasing(&xs));
        let h = reindex(&f, &xs).unwrap();
        prop_assert_eq!(h.universe_size(), xs.len());
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                prop_assert_eq!(h.color(i, j), f.color(xs[i], xs[j]));
                // Min-homogeneity: the color depends only on the smaller end.
                prop_assert_eq!(h.color(i, j), h.color(i, xs.len() - 1));
            }
        }
    }

    #[test]
    fn placement_tree_paths_and_siblings(f in coloring(11)) {
        let mut tree = PlacementTree::new();
        for x in 0..f.universe_size() {
            tree.insert(x, &f).unwrap();
        }
        prop_assert!(tree.check_invariants(&f).is_ok());
        for x in 0..f.universe_size() {
            prop_assert!(all_pairs(&f, &tree.path_to(x), 1));
        }
        let mut parents: Vec<Option<usize>> = vec![None];
        parents.extend((0..f.universe_size()).map(Some));
        for p in parents {
            prop_assert!(all_pairs(&f, &tree.children_of(p), 0));
        }
        prop_assert_eq!(tree.level_sizes().iter().sum::<usize>(), f.universe_size() + 1);
    }

    #[test]
    fn extraction_output_is_zero_homogeneous(f in coloring(11), l in 2usize..5) {
        match solve_brt(&f, l) {
            Ok(ex) => prop_assert!(strictly_increasing(&ex.set) && all_pairs(&f, &ex.set, 0)),
            Err(bounded_ramsey::Error::HypothesisViolated { witness }) => {
                prop_assert!(witness.len() == l && all_pairs(&f, &witness, 1));
            }
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn hirst_reduction_is_transitive_for_zero(g in prop::collection::vec(0usize..5, 0..30)) {
        let f = hirst_reduction(&g);
        prop_assert!(f.is_transitive(0));
    }

    #[test]
    fn single_machine_is_triangle_free(streams in 1usize..4, horizon in 5usize..120, density in 0.0f64..0.5, seed in any::<u64>()) {
        let w = generate::stream_family(streams, horizon, density, seed).unwrap();
        for n in 1..=streams {
            let run = build_fnb(&w, n, 0, horizon).unwrap();
            prop_assert!(no_one_triangle(&run.coloring()));
        }
    }

    #[test]
    fn coloring_round_trips(f in coloring(11)) {
        let back = format::parse_coloring(&format::write_coloring(&f)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn streams_round_trip(streams in 1usize..5, horizon in 1usize..80, density in 0.0f64..1.0, seed in any::<u64>()) {
        let w = generate::stream_family(streams, horizon, density, seed).unwrap();
        let back = format::parse_streams(&format::write_streams(&w)).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn schedule_round_trips(k in 1usize..4, horizon in 1usize..60, rate in 0.0f64..0.3, seed in any::<u64>()) {
        let g = generate::schedule(k, horizon, 5, rate, seed).unwrap();
        let text = format::write_schedule(&g);
        let back = format::parse_schedule(&text).unwrap();
        prop_assert_eq!(&back, &g);
        let rebuilt = ApproximationSchedule::from_cells(k, horizon, &g.cells()).unwrap();
        prop_assert_eq!(rebuilt, g);
    }

    #[test]
    fn poset_and_partition_round_trip(n in 0usize..30, p in 0.0f64..0.5, seed in any::<u64>()) {
        let poset = generate::random_poset(n, p, seed).unwrap();
        let back = format::parse_poset(&format::write_poset(&poset)).unwrap();
        prop_assert_eq!(&back, &poset);
        let g = mirsky::run_weak(&poset);
        prop_assert_eq!(format::parse_partition(&format::write_partition(&g)).unwrap(), g);
    }
}
