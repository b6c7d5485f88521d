use std::collections::BTreeSet;

use lichor_core::audit::Audit;
use lichor_core::structure::{decompose_blocks, full_order};
use lichor_core::verify::{
    brute_force_chi, gen_line_perfect, has_long_odd_cycle, random_lists, verify_coloring, GenParams,
};
use lichor_core::{
    analyze, chromatic_index, emit_instance, emit_report, parse_instance, parse_report,
    solve_with_root, Instance, Multigraph,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(seed: u64, blocks: usize, mult: usize, centers: usize) -> Multigraph {
    gen_line_perfect(&GenParams::new(seed, blocks, mult, centers)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generated_graphs_are_line_perfect(seed in any::<u64>(), blocks in 1usize..6, mult in 1usize..4, centers in 1usize..5) {
        let g = graph(seed, blocks, mult, centers);
        prop_assert!(analyze(&g).is_ok());
        prop_assert!(!has_long_odd_cycle(&g));
        prop_assert_eq!(decompose_blocks(&g).len(), blocks);
    }

    #[test]
    fn blocks_partition_the_edges(seed in any::<u64>(), blocks in 1usize..6) {
        let g = graph(seed, blocks, 3, 3);
        let dec = decompose_blocks(&g);
        let mut seen = BTreeSet::new();
        for b in &dec.blocks {
            for e in b {
                prop_assert!(seen.insert(e), "edge {} in two blocks", e);
            }
        }
        prop_assert_eq!(seen.len(), g.edge_count());
        let order = full_order(&dec, 0).unwrap();
        prop_assert_eq!(order.len(), dec.len());
        prop_assert!(order[0].entry_vertex.is_none());
        prop_assert!(order[1..].iter().all(|t| t.entry_vertex.is_some()));
    }

    #[test]
    fn chromatic_index_matches_oracle_on_small_graphs(seed in any::<u64>(), blocks in 1usize..3) {
        let g = graph(seed, blocks, 2, 2);
        prop_assume!(g.edge_count() <= 9);
        prop_assert_eq!(chromatic_index(&g).unwrap(), brute_force_chi(&g, 14).unwrap());
    }

    #[test]
    fn solver_colors_every_root(seed in any::<u64>(), blocks in 1usize..5, list_seed in any::<u64>(), spare in 0usize..3) {
        let g = graph(seed, blocks, 3, 4);
        let chi = chromatic_index(&g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(list_seed);
        let lists = random_lists(&mut rng, g.edge_count(), chi + spare, 2 * chi as u32 + 1);
        let inst = Instance { graph: g.clone(), lists };
        for root in 0..blocks {
            let r = solve_with_root(&inst, root, &mut Audit::new()).unwrap();
            prop_assert!(r.conforming, "{:?}", r.diagnostics);
            prop_assert!(verify_coloring(&g, &g.all_edges(), &inst.lists, &r.coloring()).is_ok());
            prop_assert_eq!(r.trace.len(), blocks);
        }
    }

    #[test]
    fn formats_round_trip(seed in any::<u64>(), blocks in 1usize..4, list_seed in any::<u64>()) {
        let g = graph(seed, blocks, 3, 3);
        let chi = chromatic_index(&g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(list_seed);
        let lists = random_lists(&mut rng, g.edge_count(), chi, 3 * chi as u32);
        let inst = Instance { graph: g, lists };
        let text = emit_instance(&inst);
        prop_assert_eq!(&parse_instance(&text).unwrap(), &inst);
        let r = solve_with_root(&inst, 0, &mut Audit::new()).unwrap();
        let report = emit_report(&r);
        prop_assert_eq!(parse_report(&report).unwrap(), r);
    }
}
