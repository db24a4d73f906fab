//! The acceptance criteria as runnable checks.
//!
//! Every criterion builds its own seeded corpus, so each can run alone and
//! every run sees the same instances.

use std::fmt;
use std::time::{Duration, Instant};

use cobox_core::blocks::block_decomposition;
use cobox_core::cointerval::{
    cointerval_representation, is_cointerval, is_threshold, satisfies_prefix_property,
    sigma_subgraph, BigAnt, VertexOrder,
};
use cobox_core::cover::{
    check_big_ant_structure, coboxicity, cothdim, cover_to_box_representation, min_cover_with,
    path_coboxicity, verify_cover, CoverOptions,
};
use cobox_core::generate::{
    free_trees, path, random_block_graph, random_graph, random_ordering, BlockGraphParams,
};
use cobox_core::oracle::{brute_coboxicity, brute_cothdim};
use cobox_core::{CoverKind, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "path formula"),
    (2, "oracle equivalence, co-boxicity"),
    (3, "oracle equivalence, threshold co-dimension"),
    (4, "threshold dimension bounds"),
    (5, "cover validity"),
    (6, "sigma-subgraphs are co-interval"),
    (7, "big ants are co-interval / threshold"),
    (8, "additivity over disjoint unions"),
    (9, "box representation contract"),
    (10, "performance at 100k vertices"),
];

pub const PATH_RANGE: std::ops::RangeInclusive<usize> = 2..=60;
pub const PATH_TIME_LIMIT: Duration = Duration::from_secs(1);
pub const ORACLE_TIME_LIMIT: Duration = Duration::from_secs(300);
pub const ORACLE_RANDOM_GRAPHS: usize = 500;
pub const ORACLE_MAX_VERTICES: usize = 12;
pub const TREE_MAX_VERTICES: usize = 9;
pub const BOUNDS_GRAPHS: usize = 1000;
pub const BOUNDS_MAX_VERTICES: usize = 300;
pub const SIGMA_SAMPLES: usize = 1000;
pub const SIGMA_MAX_VERTICES: usize = 12;
pub const ANT_SAMPLES: usize = 1000;
pub const UNION_PAIRS: usize = 200;
pub const LARGE_VERTICES: usize = 100_000;
pub const LARGE_TIME_LIMIT: Duration = Duration::from_secs(60);

const SEED_ORACLE: u64 = 0x0c0b_0001;
const SEED_BOUNDS: u64 = 0x0c0b_0004;
const SEED_SIGMA: u64 = 0x0c0b_0006;
const SEED_ANTS: u64 = 0x0c0b_0007;
const SEED_UNIONS: u64 = 0x0c0b_0008;
const SEED_LARGE: u64 = 0x0c0b_0010;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub number: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {} {}: {} ({:.2}s)",
            self.number,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().map(|&(n, _)| run_criterion(n)).collect()
}

pub fn run_criterion(number: u8) -> CriterionResult {
    let title = CRITERIA
        .iter()
        .find(|(n, _)| *n == number)
        .map(|(_, t)| *t)
        .unwrap_or("unknown criterion");
    let start = Instant::now();
    let outcome = match number {
        1 => path_formula(),
        2 => oracle_equivalence(CoverKind::Cointerval),
        3 => oracle_equivalence(CoverKind::Threshold),
        4 => threshold_bounds(),
        5 => cover_validity(),
        6 => sigma_subgraphs(),
        7 => big_ants(),
        8 => additivity(),
        9 => box_contract(),
        10 => performance(),
        _ => Err(format!("no criterion {number}")),
    };
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    CriterionResult {
        number,
        title,
        passed,
        detail,
        elapsed,
    }
}

type Outcome = Result<String, String>;

fn edges_of(g: &Graph) -> Vec<(u32, u32)> {
    g.edges().collect()
}

/// Free trees up to nine vertices followed by seeded random block graphs on
/// at most twelve.
pub fn oracle_corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=TREE_MAX_VERTICES).flat_map(free_trees).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_ORACLE);
    for _ in 0..ORACLE_RANDOM_GRAPHS {
        let n = rng.random_range(1..=ORACLE_MAX_VERTICES);
        let params = BlockGraphParams {
            shuffle: true,
            ..BlockGraphParams::with_vertices(n)
        };
        out.push(random_block_graph(&mut rng, &params));
    }
    out
}

pub fn bounds_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_BOUNDS);
    (0..BOUNDS_GRAPHS)
        .map(|_| {
            let n = rng.random_range(1..=BOUNDS_MAX_VERTICES);
            let params = BlockGraphParams {
                shuffle: true,
                ..BlockGraphParams::with_vertices(n)
            };
            random_block_graph(&mut rng, &params)
        })
        .collect()
}

fn path_formula() -> Outcome {
    let start = Instant::now();
    let mut wrong = Vec::new();
    for n in PATH_RANGE {
        let got = coboxicity(&path(n)).map_err(|e| e.to_string())?;
        if got != path_coboxicity(n).map_err(|e| e.to_string())? {
            wrong.push((n, got));
        }
    }
    let spent = start.elapsed();
    if !wrong.is_empty() {
        return Err(format!("wrong values (n, got): {wrong:?}"));
    }
    if spent >= PATH_TIME_LIMIT {
        return Err(format!("took {:.3}s, limit 1s", spent.as_secs_f64()));
    }
    Ok(format!(
        "n = {}..={} exact, {:.3}s",
        PATH_RANGE.start(),
        PATH_RANGE.end(),
        spent.as_secs_f64()
    ))
}

fn oracle_equivalence(kind: CoverKind) -> Outcome {
    let start = Instant::now();
    let corpus = oracle_corpus();
    let mut mismatches = Vec::new();
    for g in &corpus {
        let (fast, slow) = match kind {
            CoverKind::Cointerval => (coboxicity(g), brute_coboxicity(g)),
            CoverKind::Threshold => (cothdim(g), brute_cothdim(g)),
        };
        let (fast, slow) = (
            fast.map_err(|e| e.to_string())?,
            slow.map_err(|e| e.to_string())?,
        );
        if fast != slow {
            mismatches.push((edges_of(g), fast, slow));
        }
    }
    let spent = start.elapsed();
    if let Some((edges, fast, slow)) = mismatches.first() {
        return Err(format!(
            "{} mismatches; first: algorithm {fast}, oracle {slow} on {edges:?}",
            mismatches.len()
        ));
    }
    if spent >= ORACLE_TIME_LIMIT {
        return Err(format!("took {:.1}s, limit 300s", spent.as_secs_f64()));
    }
    Ok(format!("{} graphs, 0 mismatches", corpus.len()))
}

fn threshold_bounds() -> Outcome {
    let corpus = bounds_corpus();
    for g in &corpus {
        let c = coboxicity(g).map_err(|e| e.to_string())?;
        let t = cothdim(g).map_err(|e| e.to_string())?;
        if !(c <= t && t <= 2 * c) {
            return Err(format!("coboxicity {c}, cothdim {t} on {:?}", edges_of(g)));
        }
    }
    Ok(format!(
        "{} graphs up to {BOUNDS_MAX_VERTICES} vertices",
        corpus.len()
    ))
}

fn cover_validity() -> Outcome {
    let mut graphs: Vec<Graph> = PATH_RANGE.map(path).collect();
    graphs.extend(oracle_corpus());
    graphs.extend(bounds_corpus());
    let mut covers = 0;
    for g in &graphs {
        for kind in [CoverKind::Cointerval, CoverKind::Threshold] {
            let (cover, _) =
                min_cover_with(g, kind, &CoverOptions::default()).map_err(|e| e.to_string())?;
            let report = verify_cover(g, &cover);
            if !report.is_valid() {
                return Err(format!("{} on {:?}", report.summary(), edges_of(g)));
            }
            let bad = check_big_ant_structure(g, &cover);
            if !bad.is_empty() {
                return Err(format!(
                    "elements {bad:?} are not big ants on {:?}",
                    edges_of(g)
                ));
            }
            covers += 1;
        }
    }
    Ok(format!("{covers} covers verified"))
}

fn sigma_subgraphs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_SIGMA);
    for _ in 0..SIGMA_SAMPLES {
        let n = rng.random_range(1..=SIGMA_MAX_VERTICES);
        let p = rng.random_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let sigma = VertexOrder::new(random_ordering(&mut rng, &g));
        let s = sigma_subgraph(&g, &sigma).map_err(|e| e.to_string())?;
        let h = s.to_graph().map_err(|e| e.to_string())?;
        if !s.is_subgraph_of(&g) || is_cointerval(&h).is_none() {
            return Err(format!(
                "ordering {:?} of {:?}",
                sigma.as_slice(),
                edges_of(&g)
            ));
        }
        if !satisfies_prefix_property(&h, &sigma.restricted_to(&s.vertices)) {
            return Err(format!(
                "prefix property fails for {:?} on {:?}",
                sigma.as_slice(),
                edges_of(&g)
            ));
        }
    }
    Ok(format!("{SIGMA_SAMPLES} orderings"))
}

fn big_ants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_ANTS);
    for _ in 0..ANT_SAMPLES {
        let n = rng.random_range(2..=30);
        let g = random_block_graph(
            &mut rng,
            &BlockGraphParams {
                shuffle: true,
                ..BlockGraphParams::with_vertices(n)
            },
        );
        let bd = block_decomposition(&g);
        let blocks: Vec<&Vec<u32>> = bd.blocks().iter().filter(|b| b.len() >= 2).collect();
        let q = blocks[rng.random_range(0..blocks.len())];
        let u = q[rng.random_range(0..q.len())];
        let v = q[rng.random_range(0..q.len())];
        for (a, b, threshold) in [(u, v, false), (u, u, true)] {
            let ant = BigAnt::new(&g, q, a, b).map_err(|e| e.to_string())?;
            let h = ant.subgraph(&g).to_graph().map_err(|e| e.to_string())?;
            let recognized = if threshold {
                is_threshold(&h)
            } else {
                is_cointerval(&h).is_some()
            };
            let generic = cointerval_representation(&h).map_err(|e| format!("{e} for {ant:?}"))?;
            if !recognized || !ant.representation(&g).realizes(&h) || !generic.realizes(&h) {
                return Err(format!("{ant:?} on {:?}", edges_of(&g)));
            }
        }
    }
    Ok(format!("{ANT_SAMPLES} ants, two apexes and one"))
}

fn additivity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_UNIONS);
    for _ in 0..UNION_PAIRS {
        let (n1, n2) = (rng.random_range(1..=40), rng.random_range(1..=40));
        let a = random_block_graph(&mut rng, &BlockGraphParams::with_vertices(n1));
        let b = random_block_graph(
            &mut rng,
            &BlockGraphParams {
                shuffle: true,
                ..BlockGraphParams::with_vertices(n2)
            },
        );
        let parts = coboxicity(&a).map_err(|e| e.to_string())?
            + coboxicity(&b).map_err(|e| e.to_string())?;
        let whole = coboxicity(&a.disjoint_union(&b)).map_err(|e| e.to_string())?;
        if whole != parts {
            return Err(format!(
                "union {whole} vs parts {parts} for {:?} + {:?}",
                edges_of(&a),
                edges_of(&b)
            ));
        }
    }
    Ok(format!("{UNION_PAIRS} pairs"))
}

fn box_contract() -> Outcome {
    let corpus = oracle_corpus();
    for g in &corpus {
        let (cover, _) = min_cover_with(g, CoverKind::Cointerval, &CoverOptions::default())
            .map_err(|e| e.to_string())?;
        let boxes = cover_to_box_representation(g, &cover).map_err(|e| e.to_string())?;
        if !boxes.realizes(g) {
            return Err(format!("boxes do not realize {:?}", edges_of(g)));
        }
    }
    Ok(format!("{} graphs, all vertex pairs", corpus.len()))
}

fn performance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_LARGE);
    let params = BlockGraphParams {
        shuffle: true,
        ..BlockGraphParams::with_vertices(LARGE_VERTICES)
    };
    let g = random_block_graph(&mut rng, &params);
    let mut parts = Vec::new();
    for kind in [CoverKind::Cointerval, CoverKind::Threshold] {
        let start = Instant::now();
        let (cover, traces) =
            min_cover_with(&g, kind, &CoverOptions::default()).map_err(|e| e.to_string())?;
        let spent = start.elapsed();
        if let Some(i) = traces.iter().position(|t| t.removed.is_empty()) {
            return Err(format!("{} iteration {i} removed nothing", kind.as_str()));
        }
        if spent >= LARGE_TIME_LIMIT {
            return Err(format!(
                "{} cover took {:.1}s, limit 60s",
                kind.as_str(),
                spent.as_secs_f64()
            ));
        }
        let report = verify_cover(&g, &cover);
        if !report.is_valid() {
            return Err(format!(
                "{} cover invalid: {}",
                kind.as_str(),
                report.summary()
            ));
        }
        parts.push(format!(
            "{} size {} in {:.2}s",
            kind.as_str(),
            cover.len(),
            spent.as_secs_f64()
        ));
    }
    Ok(format!(
        "{} vertices, {} edges; {}",
        g.vertex_count(),
        g.edge_count(),
        parts.join(", ")
    ))
}
