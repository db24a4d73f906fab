mod common;

use std::collections::BTreeSet;

use cobox_core::blocks::{block_decomposition, classify_blocks, core, is_block_graph, BlockKind};
use cobox_core::cointerval::{
    is_cointerval, is_threshold, maximal_cointerval_subgraphs, satisfies_prefix_property,
    sigma_subgraph, BigAnt, VertexOrder,
};
use cobox_core::cover::{
    check_big_ant_structure, coboxicity, cothdim, cover_to_box_representation,
    min_cointerval_cover, min_threshold_cover, verify_cover,
};
use cobox_core::generate::{random_block_graph, random_graph, random_ordering, BlockGraphParams};
use cobox_core::graph::{build_graph, Graph, Vertex, VertexSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn block_graph(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_block_graph(
        &mut rng,
        &BlockGraphParams {
            shuffle: true,
            ..BlockGraphParams::with_vertices(n)
        },
    )
}

fn general_graph(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rng.random_range(0.1..0.9);
    random_graph(&mut rng, n, p)
}

/// All permutations of `items`, by Heap's algorithm.
fn permutations(items: &[Vertex]) -> Vec<Vec<Vertex>> {
    fn go(k: usize, a: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            go(k - 1, a, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    go(items.len(), &mut items.to_vec(), &mut out);
    out
}

/// No induced P4, C4 or 2K2, checked over all 4-subsets.
fn forbidden_free(g: &Graph) -> bool {
    let vs: Vec<Vertex> = g.vertices().collect();
    let n = vs.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [vs[a], vs[b], vs[c], vs[d]];
                    let mut degs = [0; 4];
                    let mut m = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if g.has_edge(q[i], q[j]) {
                                degs[i] += 1;
                                degs[j] += 1;
                                m += 1;
                            }
                        }
                    }
                    degs.sort();
                    // P4: 1,1,2,2; C4: 2,2,2,2; 2K2: 1,1,1,1
                    if degs == [1, 1, 2, 2] && m == 3
                        || degs == [2, 2, 2, 2]
                        || degs == [1, 1, 1, 1]
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn removing_vertices_drops_exactly_their_edges(seed: u64, n in 0usize..=10, mask: u16) {
        let g = general_graph(seed, n);
        let s: VertexSet = g.vertices().filter(|v| mask >> v & 1 == 1).collect();
        let h = g.remove_vertices(&s).unwrap();
        let expected: Vec<_> = g.edges().filter(|(a, b)| !s.contains(a) && !s.contains(b)).collect();
        prop_assert_eq!(h.edges().collect::<Vec<_>>(), expected);
        prop_assert!(h.vertices().all(|v| !s.contains(&v) && g.contains(v)));
        prop_assert_eq!(h.vertex_count(), g.vertex_count() - s.len());
    }

    #[test]
    fn components_partition_the_vertices(seed: u64, n in 0usize..=12) {
        let g = general_graph(seed, n);
        let comps = g.connected_components();
        let mut seen = BTreeSet::new();
        for c in &comps {
            for &v in c {
                prop_assert!(seen.insert(v));
            }
        }
        prop_assert!(seen.into_iter().eq(g.vertices()));
        let mins: Vec<_> = comps.iter().map(|c| *c.iter().next().unwrap()).collect();
        prop_assert!(mins.windows(2).all(|w| w[0] < w[1]));
        for (a, b) in g.edges() {
            prop_assert!(comps.iter().any(|c| c.contains(&a) && c.contains(&b)));
        }
    }

    #[test]
    fn blocks_partition_edges_and_detect_block_graphs(seed: u64, n in 0usize..=10) {
        let g = general_graph(seed, n);
        let bd = block_decomposition(&g);
        let mut owner = BTreeSet::new();
        for b in bd.blocks() {
            for (i, &a) in b.iter().enumerate() {
                for &c in &b[i + 1..] {
                    if g.has_edge(a, c) {
                        prop_assert!(owner.insert((a, c)), "edge in two blocks");
                    }
                }
            }
        }
        prop_assert!(owner.into_iter().eq(g.edges()));
        prop_assert_eq!(is_block_graph(&g), bd.blocks().iter().all(|b| g.is_clique(b)));
    }

    #[test]
    fn core_keeps_exactly_the_internal_blocks(seed: u64, n in 1usize..=30) {
        let g = block_graph(seed, n);
        let bd = block_decomposition(&g);
        let internal: Vec<Vec<Vertex>> = bd
            .blocks()
            .iter()
            .zip(classify_blocks(&bd))
            .filter(|(_, c)| c.kind == BlockKind::Internal)
            .map(|(b, _)| b.clone())
            .collect();
        let r = core(&g);
        let core_blocks: Vec<Vec<Vertex>> =
            block_decomposition(&r).blocks().iter().filter(|b| b.len() >= 2).cloned().collect();
        prop_assert_eq!(core_blocks, internal);
    }

    #[test]
    fn sigma_subgraphs_are_cointerval(seed: u64, n in 1usize..=12) {
        let g = general_graph(seed, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
        let sigma = VertexOrder::new(random_ordering(&mut rng, &g));
        let s = sigma_subgraph(&g, &sigma).unwrap();
        prop_assert!(s.is_subgraph_of(&g));
        let h = s.to_graph().unwrap();
        prop_assert!(is_cointerval(&h).is_some());
        prop_assert!(satisfies_prefix_property(&h, &sigma.restricted_to(&s.vertices)));
    }

    #[test]
    fn cointerval_recognition_matches_ordering_search(seed: u64, n in 0usize..=6) {
        let g = general_graph(seed, n);
        let vs: Vec<Vertex> = g.vertices().collect();
        let exists = permutations(&vs)
            .into_iter()
            .any(|p| satisfies_prefix_property(&g, &VertexOrder::new(p)));
        let found = is_cointerval(&g);
        prop_assert_eq!(found.is_some(), exists);
        if let Some(order) = found {
            prop_assert!(order.is_permutation_of(&g));
            prop_assert!(satisfies_prefix_property(&g, &order));
        }
    }

    #[test]
    fn threshold_recognition_matches_forbidden_subgraphs(seed: u64, n in 0usize..=8) {
        let g = general_graph(seed, n);
        prop_assert_eq!(is_threshold(&g), forbidden_free(&g));
    }

    #[test]
    fn big_ants_are_cointerval_and_single_apex_ants_threshold(seed: u64, n in 2usize..=25, pick: u64) {
        let g = block_graph(seed, n);
        let bd = block_decomposition(&g);
        let blocks: Vec<&Vec<Vertex>> = bd.blocks().iter().filter(|b| b.len() >= 2).collect();
        let q = blocks[(pick % blocks.len() as u64) as usize];
        let u = q[(pick / 7 % q.len() as u64) as usize];
        let v = q[(pick / 131 % q.len() as u64) as usize];
        let ant = BigAnt::new(&g, q, u, v).unwrap();
        let h = ant.subgraph(&g).to_graph().unwrap();
        prop_assert!(is_cointerval(&h).is_some());
        prop_assert!(ant.representation(&g).realizes(&h));
        let single = BigAnt::new(&g, q, u, u).unwrap();
        let t = single.subgraph(&g).to_graph().unwrap();
        prop_assert!(is_threshold(&t));
        prop_assert!(single.representation(&g).realizes(&t));
    }

    #[test]
    fn maximal_ants_are_pairwise_incomparable(seed: u64, n in 1usize..=15) {
        let g = block_graph(seed, n);
        let sets: Vec<_> = maximal_cointerval_subgraphs(&g).unwrap().iter().map(|a| a.edges(&g)).collect();
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                prop_assert!(i == j || !a.is_subset(b));
            }
        }
    }

    #[test]
    fn covers_are_valid_ants_and_replay(seed: u64, n in 0usize..=60) {
        let g = block_graph(seed, n);
        for (cover, traces) in [min_cointerval_cover(&g).unwrap(), min_threshold_cover(&g).unwrap()] {
            prop_assert!(verify_cover(&g, &cover).is_valid());
            prop_assert!(check_big_ant_structure(&g, &cover).is_empty());
            if let Err(msg) = common::replay(&g, &cover, &traces) {
                return Err(TestCaseError::fail(msg));
            }
        }
    }

    #[test]
    fn threshold_dimension_is_sandwiched(seed: u64, n in 0usize..=120) {
        let g = block_graph(seed, n);
        let c = coboxicity(&g).unwrap();
        let t = cothdim(&g).unwrap();
        prop_assert!(c <= t && t <= 2 * c);
    }

    #[test]
    fn coboxicity_adds_over_disjoint_unions(seed: u64, n1 in 0usize..=30, n2 in 0usize..=30) {
        let a = block_graph(seed, n1);
        let b = block_graph(seed.wrapping_add(1), n2);
        let u = a.disjoint_union(&b);
        prop_assert_eq!(coboxicity(&u).unwrap(), coboxicity(&a).unwrap() + coboxicity(&b).unwrap());
        prop_assert_eq!(cothdim(&u).unwrap(), cothdim(&a).unwrap() + cothdim(&b).unwrap());
    }

    #[test]
    fn boxes_realize_the_complement(seed: u64, n in 0usize..=20) {
        let g = block_graph(seed, n);
        let (cover, _) = min_cointerval_cover(&g).unwrap();
        let boxes = cover_to_box_representation(&g, &cover).unwrap();
        prop_assert_eq!(boxes.dimension, cover.len().max(1));
        prop_assert!(boxes.realizes(&g));
        let bound = 4 * g.vertex_count().max(1) as u32;
        prop_assert!(boxes.boxes.values().flatten().all(|i| i.hi <= bound));
    }

    #[test]
    fn build_graph_round_trips(seed: u64, n in 0usize..=12) {
        let g = general_graph(seed, n);
        let edges: Vec<_> = g.edges().collect();
        prop_assert_eq!(build_graph(n, &edges).unwrap(), g);
    }
}
