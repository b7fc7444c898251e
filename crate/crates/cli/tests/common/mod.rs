//! Shared infrastructure for the integration suites: bundled fixtures,
//! seeded random stream generators (quarter-aligned endpoints), the full
//! selector catalog per stream kind, and undefined-aware comparison.

#![allow(dead_code)]

use num::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use streamgraph::oracle::{evaluate, oracle_metric, Selector};
use streamgraph::rational::{rat, rint, Rat};
use streamgraph::static_graph::{DirectedVariant, StaticGraph};
use streamgraph::stream::{Kind, Side, StreamBuilder, StreamGraph};
use streamgraph::value::MetricValue;
use streamgraph::weight::StepWeight;
use streamgraph::weighted::{DensityVariant, ValueFn};
use streamgraph::{format, IntervalSet, Result};

pub const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

pub fn fixture_path(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> StreamGraph {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    format::parse(&text).unwrap()
}

/// Interval set from quarter units.
pub fn iset_q(pairs: &[(i64, i64)]) -> IntervalSet {
    IntervalSet::normalize(pairs.iter().map(|&(b, e)| (rat(b, 4), rat(e, 4))).collect()).unwrap()
}

fn to_q(r: &Rat) -> i64 {
    (r * rint(4)).to_integer().to_i64().unwrap()
}

fn random_iset(rng: &mut StdRng, maxq: i64, allow_points: bool) -> IntervalSet {
    let mut pairs = Vec::new();
    for _ in 0..rng.gen_range(1..=2) {
        let b = rng.gen_range(0..maxq);
        let min_len = if allow_points { 0 } else { 1 };
        let e = (b + rng.gen_range(min_len..=maxq / 2)).min(maxq);
        pairs.push((b, e));
    }
    iset_q(&pairs)
}

const WEIGHT_POOL: [(i64, i64); 5] = [(1, 2), (1, 1), (3, 2), (2, 1), (3, 1)];

fn random_weight(rng: &mut StdRng, support: &IntervalSet) -> StepWeight {
    let mut raw = Vec::new();
    let pick = |rng: &mut StdRng| {
        let (n, d) = WEIGHT_POOL[rng.gen_range(0..WEIGHT_POOL.len())];
        rat(n, d)
    };
    for (b, e) in support.iter_pairs() {
        let (bq, eq) = (to_q(&b), to_q(&e));
        if eq - bq >= 2 && rng.gen_bool(0.5) {
            let m = rng.gen_range(bq + 1..eq);
            raw.push(((rat(bq, 4), rat(m, 4)), pick(rng)));
            raw.push(((rat(m, 4), rat(eq, 4)), pick(rng)));
        } else {
            raw.push(((b, e), pick(rng)));
        }
    }
    StepWeight::new(raw).unwrap()
}

fn random_sides(rng: &mut StdRng, n: usize) -> Vec<Side> {
    (0..n)
        .map(|i| {
            // keep both sides populated for small n
            if i == 0 {
                Side::Top
            } else if i == 1 {
                Side::Bottom
            } else if rng.gen_bool(0.5) {
                Side::Top
            } else {
                Side::Bottom
            }
        })
        .collect()
}

/// A random quarter-aligned stream: |T| ≤ 10, n ≤ 6 nodes. Link presence is
/// drawn inside the endpoints' co-presence; weights are random step
/// functions with breakpoints on the grid.
pub fn random_stream(kind: Kind, weighted: bool, rng: &mut StdRng) -> StreamGraph {
    let maxq = rng.gen_range(8..=40);
    let n = rng.gen_range(2..=6);
    let mut b = StreamBuilder::new(kind, rint(0), rat(maxq, 4));
    let sides = random_sides(rng, n);
    let mut presence = Vec::new();
    let mut links = 0usize;
    for i in 0..n {
        let p = random_iset(rng, maxq, true);
        b.node(NAMES[i], p.clone());
        if kind == Kind::Bipartite {
            b.side(NAMES[i], sides[i]);
        }
        presence.push(p);
    }
    for i in 0..n {
        for j in 0..n {
            let ok = match kind {
                Kind::Directed => i != j || rng.gen_bool(0.3),
                Kind::Bipartite => i < j && sides[i] != sides[j],
                Kind::Undirected => i < j,
            };
            if !ok || !rng.gen_bool(0.6) {
                continue;
            }
            let co = presence[i].intersect(&presence[j]);
            // positive-measure pieces only: the grid oracle cannot see
            // measure-zero features such as a weight on a point interval
            let p = IntervalSet::normalize(
                random_iset(rng, maxq, false)
                    .intersect(&co)
                    .iter_pairs()
                    .filter(|(x, y)| x != y)
                    .collect(),
            )
            .unwrap();
            if p.is_empty() {
                continue;
            }
            b.link(NAMES[i], NAMES[j], p.clone());
            links += 1;
            if weighted {
                b.link_weight(NAMES[i], NAMES[j], random_weight(rng, &p));
            }
        }
    }
    if weighted && links == 0 {
        // no links survived; pin weightedness down through a node weight
        b.node_weight(NAMES[0], StepWeight::constant(rint(1), &presence[0]));
    }
    if weighted && rng.gen_bool(0.3) {
        let i = rng.gen_range(0..n);
        if !presence[i].is_empty() {
            b.node_weight(NAMES[i], random_weight(rng, &presence[i]));
        }
    }
    b.build().unwrap()
}

/// A random stream with no dynamics: every presence set is the full horizon
/// and weights are constant, so every snapshot equals the induced graph.
pub fn graph_equivalent_stream(kind: Kind, weighted: bool, rng: &mut StdRng) -> StreamGraph {
    let maxq = rng.gen_range(4..=40);
    let n = rng.gen_range(2..=6);
    let full = iset_q(&[(0, maxq)]);
    let mut b = StreamBuilder::new(kind, rint(0), rat(maxq, 4));
    let sides = random_sides(rng, n);
    for i in 0..n {
        b.node(NAMES[i], full.clone());
        if kind == Kind::Bipartite {
            b.side(NAMES[i], sides[i]);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ok = match kind {
                Kind::Directed => i != j || rng.gen_bool(0.3),
                Kind::Bipartite => i < j && sides[i] != sides[j],
                Kind::Undirected => i < j,
            };
            if !ok || !rng.gen_bool(0.5) {
                continue;
            }
            b.link(NAMES[i], NAMES[j], full.clone());
            if weighted {
                let (wn, wd) = WEIGHT_POOL[rng.gen_range(0..WEIGHT_POOL.len())];
                b.link_weight(NAMES[i], NAMES[j], StepWeight::constant(rat(wn, wd), &full));
            }
        }
    }
    b.build().unwrap()
}

/// Every selector applicable to the given stream.
pub fn selectors_for(s: &StreamGraph) -> Vec<Selector> {
    use Selector::*;
    let nodes: Vec<String> = s.nodes().keys().cloned().collect();
    let mut sels = vec![NodeCount, LinkCount];
    match s.kind() {
        Kind::Undirected | Kind::Bipartite => {
            sels.extend([AverageDegree, Density, Transitivity]);
            for n in &nodes {
                sels.push(Degree(n.clone()));
                sels.push(Clustering(n.clone()));
            }
        }
        Kind::Directed => {
            sels.extend([
                DirectedDensity,
                SymmetricFraction,
                LoopFraction,
                DirectedTransitivity(DirectedVariant::Cyclic),
                DirectedTransitivity(DirectedVariant::Transitive),
            ]);
            for n in &nodes {
                sels.push(OutDegree(n.clone()));
                sels.push(InDegree(n.clone()));
                for v in [
                    DirectedVariant::Cyclic,
                    DirectedVariant::Transitive,
                    DirectedVariant::In,
                    DirectedVariant::Out,
                ] {
                    sels.push(DirectedClustering(n.clone(), v));
                }
            }
        }
    }
    if s.kind() == Kind::Bipartite {
        sels.extend([
            TopCount,
            BottomCount,
            SideAverageDegree(Side::Top),
            SideAverageDegree(Side::Bottom),
            BipartiteDensity,
            BipartiteTransitivity { quint: false },
            BipartiteTransitivity { quint: true },
        ]);
        let sides = s.sides().unwrap();
        for n in &nodes {
            sels.push(JaccardClustering(n.clone()));
            sels.push(Redundancy(n.clone()));
            sels.push(CcStar(n.clone()));
        }
        for u in &nodes {
            for v in &nodes {
                if u < v && sides[u] == sides[v] {
                    sels.push(Jaccard(u.clone(), v.clone()));
                }
            }
        }
    }
    if s.is_weighted() {
        sels.push(WeightedDensity(DensityVariant::PresentMax));
        sels.push(WeightedDensity(DensityVariant::AllMax));
        for n in &nodes {
            sels.push(Strength(n.clone()));
        }
        if s.kind() != Kind::Directed {
            for f in [
                ValueFn::ArithMean,
                ValueFn::GeoMean,
                ValueFn::Min,
                ValueFn::Max,
                ValueFn::Product,
            ] {
                sels.push(WeightedTransitivity(f));
                for n in &nodes {
                    sels.push(GeneralClustering(n.clone(), f));
                }
            }
            for n in &nodes {
                sels.push(BarratClustering(n.clone()));
            }
        }
    }
    sels
}

/// The classical counterpart of a selector, evaluated on a static graph.
pub fn static_value(g: &StaticGraph, sel: &Selector) -> Result<MetricValue> {
    use Selector::*;
    let r = |x: Result<Rat>| x.map(MetricValue::rational);
    match sel {
        NodeCount => Ok(MetricValue::rational(g.node_count())),
        LinkCount => Ok(MetricValue::rational(g.edge_count())),
        Degree(v) => r(g.degree(v)),
        AverageDegree => r(g.average_degree()),
        Density => r(g.density()),
        Clustering(v) => r(g.clustering(v)),
        Transitivity => r(g.transitivity()),
        Strength(v) => r(g.strength(v)),
        WeightedDensity(variant) => r(g.weighted_density(*variant)),
        BarratClustering(v) => r(g.barrat_clustering(v)),
        GeneralClustering(v, f) => g.general_clustering(v, *f),
        WeightedTransitivity(f) => g.weighted_transitivity(*f),
        TopCount => r(g.side_count(Side::Top)),
        BottomCount => r(g.side_count(Side::Bottom)),
        SideAverageDegree(side) => r(g.side_average_degree(*side)),
        BipartiteDensity => r(g.bipartite_density()),
        Jaccard(u, v) => r(g.jaccard(u, v)),
        JaccardClustering(v) => r(g.jaccard_clustering(v)),
        Redundancy(v) => r(g.redundancy(v)),
        CcStar(v) => r(g.cc_star(v)),
        BipartiteTransitivity { quint } => r(g.bipartite_transitivity(*quint)),
        OutDegree(v) => r(g.out_degree(v)),
        InDegree(v) => r(g.in_degree(v)),
        DirectedDensity => r(g.directed_density()),
        SymmetricFraction => r(g.symmetric_fraction()),
        LoopFraction => r(g.loop_fraction()),
        DirectedClustering(v, variant) => r(g.directed_clustering(v, *variant)),
        DirectedTransitivity(variant) => r(g.directed_transitivity(*variant)),
    }
}

/// Both defined with equal values, or both undefined.
pub fn assert_agree(label: &str, a: Result<MetricValue>, b: Result<MetricValue>) {
    match (a, b) {
        (Ok(x), Ok(y)) => assert!(x.eq_exact(&y), "{label}: {x:?} != {y:?}"),
        (Err(x), Err(y)) => assert!(
            x.is_undefined() && y.is_undefined(),
            "{label}: errors disagree: {x:?} vs {y:?}"
        ),
        (x, y) => panic!("{label}: one side defined, one not: {x:?} vs {y:?}"),
    }
}

/// Criterion-4 engine: every metric on graph-equivalent streams equals the
/// classical value on the induced graph.
pub fn run_graph_equivalence(kind: Kind, weighted: bool, count: usize, seed: u64) {
    let mut rng = StdRng::seed_from_u64(seed);
    for i in 0..count {
        let s = graph_equivalent_stream(kind, weighted, &mut rng);
        assert!(s.is_graph_equivalent());
        let g = streamgraph::static_graph::induced_graph(&s).unwrap();
        for sel in selectors_for(&s) {
            assert_agree(
                &format!("{:?} stream {i}, {sel:?}", kind.name()),
                evaluate(&s, &sel),
                static_value(&g, &sel),
            );
        }
    }
}

/// Criterion-5 engine: closed forms equal the grid oracle (step 1/4) on
/// random quarter-aligned streams; undefined outcomes coincide.
pub fn run_oracle_suite(count: usize, seed: u64) {
    let mut rng = StdRng::seed_from_u64(seed);
    let shapes = [
        (Kind::Undirected, false),
        (Kind::Undirected, true),
        (Kind::Bipartite, false),
        (Kind::Bipartite, true),
        (Kind::Directed, false),
    ];
    let step = rat(1, 4);
    for i in 0..count {
        let (kind, weighted) = shapes[i % shapes.len()];
        let s = random_stream(kind, weighted, &mut rng);
        for sel in selectors_for(&s) {
            assert_agree(
                &format!("{} stream {i}, {sel:?}", kind.name()),
                evaluate(&s, &sel),
                oracle_metric(&s, &sel, &step),
            );
        }
    }
}

/// Criterion-7 engine: canonical serialization round trips exactly.
pub fn run_roundtrip_suite(count: usize, seed: u64) {
    let mut rng = StdRng::seed_from_u64(seed);
    let shapes = [
        (Kind::Undirected, false),
        (Kind::Undirected, true),
        (Kind::Bipartite, false),
        (Kind::Bipartite, true),
        (Kind::Directed, false),
        (Kind::Directed, true),
    ];
    for i in 0..count {
        let (kind, weighted) = shapes[i % shapes.len()];
        let s = random_stream(kind, weighted, &mut rng);
        let text = format::serialize(&s);
        let back = format::parse(&text).unwrap_or_else(|e| panic!("stream {i}: {e}\n{text}"));
        assert_eq!(back, s, "stream {i} round trip");
        assert_eq!(format::serialize(&back), text, "stream {i} reserialization");
    }
}
