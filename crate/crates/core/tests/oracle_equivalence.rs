use cobox_core::cover::{coboxicity, cothdim, min_cointerval_cover, verify_cover, CoverKind};
use cobox_core::generate::{free_trees, path, random_block_graph, BlockGraphParams};
use cobox_core::graph::build_graph;
use cobox_core::oracle::{
    brute_coboxicity, brute_cointerval_cover, brute_cothdim, brute_threshold_cover, DEFAULT_BOUND,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn trees_match_oracle() {
    for n in 1..=9 {
        for t in free_trees(n) {
            let b = brute_coboxicity(&t).unwrap();
            let th = brute_cothdim(&t).unwrap();
            assert_eq!(
                coboxicity(&t).unwrap(),
                b,
                "{:?}",
                t.edges().collect::<Vec<_>>()
            );
            assert_eq!(
                cothdim(&t).unwrap(),
                th,
                "{:?}",
                t.edges().collect::<Vec<_>>()
            );
            assert!(b <= th);
        }
    }
}

#[test]
fn random_block_graphs_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let n = rng.random_range(1..=12);
        let g = random_block_graph(
            &mut rng,
            &BlockGraphParams {
                shuffle: true,
                ..BlockGraphParams::with_vertices(n)
            },
        );
        assert_eq!(coboxicity(&g).unwrap(), brute_coboxicity(&g).unwrap());
        assert_eq!(cothdim(&g).unwrap(), brute_cothdim(&g).unwrap());
    }
}

#[test]
fn paths_match_oracle() {
    for n in 1..=12 {
        let p = path(n);
        assert_eq!(cothdim(&p).unwrap(), brute_cothdim(&p).unwrap(), "P{n}");
        assert_eq!(
            coboxicity(&p).unwrap(),
            brute_coboxicity(&p).unwrap(),
            "P{n}"
        );
    }
}

#[test]
fn spider() {
    let spider = build_graph(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
    let (cover, _) = min_cointerval_cover(&spider).unwrap();
    assert_eq!(cover.len(), brute_coboxicity(&spider).unwrap());
}

#[test]
fn witnesses_verify() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..50 {
        let n = rng.random_range(1..=10);
        let g = random_block_graph(&mut rng, &BlockGraphParams::with_vertices(n));
        let c = brute_cointerval_cover(&g, DEFAULT_BOUND).unwrap();
        assert_eq!(c.kind, CoverKind::Cointerval);
        assert!(verify_cover(&g, &c).is_valid());
        let t = brute_threshold_cover(&g, DEFAULT_BOUND).unwrap();
        assert!(verify_cover(&g, &t).is_valid());
    }
}
