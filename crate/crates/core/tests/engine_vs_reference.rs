mod common;

use cobox_core::cover::{min_cointerval_cover, min_threshold_cover, verify_cover, CoverKind};
use cobox_core::generate::{free_trees, random_block_graph, BlockGraphParams};
use cobox_core::graph::build_graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{reference_cover, replay};

fn check(g: &cobox_core::Graph) {
    for kind in [CoverKind::Cointerval, CoverKind::Threshold] {
        let (cover, traces) = match kind {
            CoverKind::Cointerval => min_cointerval_cover(g).unwrap(),
            CoverKind::Threshold => min_threshold_cover(g).unwrap(),
        };
        if let Err(msg) = replay(g, &cover, &traces) {
            panic!(
                "{kind:?} replay failed on {:?}: {msg}",
                g.edges().collect::<Vec<_>>()
            );
        }
        assert!(verify_cover(g, &cover).is_valid());
        let reference = reference_cover(g, kind);
        assert_eq!(
            cover.len(),
            reference.len(),
            "{kind:?} size differs from the literal loop on {:?}",
            g.edges().collect::<Vec<_>>()
        );
    }
}

#[test]
fn trees_up_to_nine_vertices() {
    for n in 1..=9 {
        for t in free_trees(n) {
            check(&t);
        }
    }
}

#[test]
fn random_block_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..300 {
        let params = BlockGraphParams {
            shuffle: i % 2 == 1,
            ..BlockGraphParams::with_vertices(2 + i % 40)
        };
        check(&random_block_graph(&mut rng, &params));
    }
}

#[test]
fn disconnected_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..60 {
        let a = random_block_graph(&mut rng, &BlockGraphParams::with_vertices(1 + i % 9));
        let b = random_block_graph(&mut rng, &BlockGraphParams::with_vertices(1 + i % 13));
        check(&a.disjoint_union(&b));
    }
}

#[test]
fn spider_and_hand_picked_cases() {
    // triangle with a pendant edge at every corner
    let spider = build_graph(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
    check(&spider);
    // a block with four cut-vertices each carrying two leaves
    let mut es = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    for c in 0..4u32 {
        es.push((c, 4 + 2 * c));
        es.push((c, 5 + 2 * c));
    }
    check(&build_graph(12, &es).unwrap());
}
