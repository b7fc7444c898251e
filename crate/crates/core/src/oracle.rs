//! Brute-force discrete evaluator: every metric recomputed as an aggregation
//! of per-snapshot combinatorial counts over a uniform grid.
//!
//! Snapshots are sampled at cell midpoints. Because every presence set is a
//! finite union of closed intervals, snapshot membership is constant on each
//! open cell whenever all endpoints lie on the grid, so the aggregation is
//! exact there; off-grid endpoints make it an O(step) approximation.

use crate::bipartite;
use crate::directed;
use crate::error::{Error, Result};
use crate::metrics;
use crate::radical::RadicalSum;
use crate::rational::{rint, Rat};
use crate::static_graph::{snapshot, DirectedVariant, StaticGraph};
use crate::stream::{Kind, NodeId, Side, StreamGraph};
use crate::value::MetricValue;
use crate::weighted::{self, closed_value, open_value, DensityVariant, ValueFn};
use num::{One, Signed, Zero};

/// One selector per metric in the stream catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    NodeCount,
    LinkCount,
    Degree(NodeId),
    AverageDegree,
    Density,
    Clustering(NodeId),
    Transitivity,
    Strength(NodeId),
    WeightedDensity(DensityVariant),
    BarratClustering(NodeId),
    GeneralClustering(NodeId, ValueFn),
    WeightedTransitivity(ValueFn),
    TopCount,
    BottomCount,
    SideAverageDegree(Side),
    BipartiteDensity,
    Jaccard(NodeId, NodeId),
    JaccardClustering(NodeId),
    Redundancy(NodeId),
    CcStar(NodeId),
    BipartiteTransitivity { quint: bool },
    OutDegree(NodeId),
    InDegree(NodeId),
    DirectedDensity,
    SymmetricFraction,
    LoopFraction,
    DirectedClustering(NodeId, DirectedVariant),
    DirectedTransitivity(DirectedVariant),
}

/// Closed-form dispatch: evaluates a selector through the interval-algebra
/// implementations.
pub fn evaluate(s: &StreamGraph, sel: &Selector) -> Result<MetricValue> {
    use Selector::*;
    let r = |v: Rat| MetricValue::rational(v);
    Ok(match sel {
        NodeCount => r(metrics::node_count(s)?),
        LinkCount => r(metrics::link_count(s)?),
        Degree(v) => r(metrics::degree(s, v)?),
        AverageDegree => r(metrics::average_degree(s)?),
        Density => r(metrics::density(s)?),
        Clustering(v) => r(metrics::clustering(s, v)?),
        Transitivity => r(metrics::transitivity(s)?),
        Strength(v) => r(weighted::strength(s, v)?),
        WeightedDensity(variant) => r(weighted::weighted_density(s, *variant)?),
        BarratClustering(v) => r(weighted::weighted_clustering_barrat(s, v)?),
        GeneralClustering(v, f) => weighted::weighted_clustering_general(s, v, *f)?,
        WeightedTransitivity(f) => weighted::weighted_transitivity(s, *f)?,
        TopCount => r(bipartite::side_counts(s)?.0),
        BottomCount => r(bipartite::side_counts(s)?.1),
        SideAverageDegree(side) => r(bipartite::side_average_degree(s, *side)?),
        BipartiteDensity => r(bipartite::bipartite_density(s)?),
        Jaccard(u, v) => r(bipartite::jaccard(s, u, v, None)?),
        JaccardClustering(v) => r(bipartite::jaccard_clustering(s, v)?),
        Redundancy(v) => r(bipartite::redundancy(s, v)?),
        CcStar(v) => r(bipartite::cc_star(s, v)?),
        BipartiteTransitivity { quint } => r(bipartite::bipartite_transitivity(s, *quint)?),
        OutDegree(v) => r(directed::out_degree(s, v)?),
        InDegree(v) => r(directed::in_degree(s, v)?),
        DirectedDensity => r(directed::directed_density(s)?),
        SymmetricFraction => r(directed::symmetry_stats(s)?.0),
        LoopFraction => r(loop_fraction_closed(s)?),
        DirectedClustering(v, variant) => r(directed::directed_clustering(s, v, *variant)?),
        DirectedTransitivity(variant) => r(directed::directed_transitivity(s, *variant)?),
    })
}

/// Loop fraction without the arc-presence precondition of the combined
/// symmetry statistics.
fn loop_fraction_closed(s: &StreamGraph) -> Result<Rat> {
    s.require_kind(Kind::Directed)?;
    let w = s.node_presence_total();
    if w.is_zero() {
        return Err(Error::Undefined("no node is ever present".into()));
    }
    let loops = s
        .links()
        .iter()
        .filter(|((u, v), _)| u == v)
        .fold(Rat::zero(), |acc, (_, p)| acc + p.measure());
    Ok(loops / w)
}

fn grid_cells(s: &StreamGraph, step: &Rat) -> Result<Vec<(Rat, Rat)>> {
    if !step.is_positive() {
        return Err(Error::InvalidArgument("grid step must be positive".into()));
    }
    s.require_nonempty_horizon()?;
    let (x, y) = s.horizon();
    let two = rint(2);
    let mut cells = Vec::new();
    let mut lo = x.clone();
    while &lo < y {
        let hi = (&lo + step).min(y.clone());
        cells.push((&hi - &lo, (&lo + &hi) / &two));
        lo = hi;
    }
    Ok(cells)
}

fn validate(s: &StreamGraph, sel: &Selector) -> Result<()> {
    use Selector::*;
    match sel {
        Degree(_) | AverageDegree | Density | Clustering(_) | Transitivity
        | BarratClustering(_) | GeneralClustering(..) | WeightedTransitivity(_) => {
            if s.kind() == Kind::Directed {
                return Err(Error::KindMismatch {
                    expected: "undirected or bipartite",
                    actual: "directed",
                });
            }
        }
        TopCount | BottomCount | SideAverageDegree(_) | BipartiteDensity | Jaccard(..)
        | JaccardClustering(_) | Redundancy(_) | CcStar(_) | BipartiteTransitivity { .. } => {
            s.require_kind(Kind::Bipartite)?;
        }
        OutDegree(_) | InDegree(_) | DirectedDensity | SymmetricFraction | LoopFraction
        | DirectedClustering(..) | DirectedTransitivity(_) => {
            s.require_kind(Kind::Directed)?;
        }
        _ => {}
    }
    match sel {
        Degree(v) | Clustering(v) | Strength(v) | BarratClustering(v)
        | GeneralClustering(v, _) | JaccardClustering(v) | Redundancy(v) | CcStar(v)
        | OutDegree(v) | InDegree(v) | DirectedClustering(v, _) => {
            s.node_presence(v)?;
        }
        Jaccard(u, v) => {
            s.node_presence(u)?;
            s.node_presence(v)?;
            if u == v || s.side_of(u)? != s.side_of(v)? {
                return Err(Error::InvalidArgument(
                    "the Jaccard coefficient needs two distinct same-side nodes".into(),
                ));
            }
        }
        _ => {}
    }
    if matches!(
        sel,
        Strength(_) | WeightedDensity(_) | BarratClustering(_) | GeneralClustering(..)
            | WeightedTransitivity(_)
    ) && s.link_weights().is_none()
    {
        return Err(Error::Unweighted);
    }
    if matches!(sel, DirectedTransitivity(v) if !matches!(v, DirectedVariant::Cyclic | DirectedVariant::Transitive))
    {
        return Err(Error::InvalidArgument(
            "transitivity supports cyclic/transitive variants only".into(),
        ));
    }
    Ok(())
}

fn snapshot_strength(g: &StaticGraph, v: &str) -> Rat {
    let Some(weights) = &g.edge_weights else {
        return Rat::zero();
    };
    let mut total = Rat::zero();
    for ((a, b), w) in weights {
        if a == v || b == v {
            total += w;
        }
    }
    total
}

fn ratio(num: Rat, den: Rat, what: &str) -> Result<MetricValue> {
    if den.is_zero() {
        return Err(Error::Undefined(what.to_string()));
    }
    Ok(MetricValue::rational(num / den))
}

/// Evaluates a selector by midpoint-sampled snapshots on a uniform grid of
/// the given step.
pub fn oracle_metric(s: &StreamGraph, sel: &Selector, step: &Rat) -> Result<MetricValue> {
    use Selector::*;
    validate(s, sel)?;
    let t = s.require_nonempty_horizon()?;
    let snaps: Vec<(Rat, StaticGraph)> = grid_cells(s, step)?
        .into_iter()
        .map(|(len, mid)| snapshot(s, &mid).map(|g| (len, g)))
        .collect::<Result<_>>()?;

    match sel {
        NodeCount => {
            let sum = snaps.iter().fold(Rat::zero(), |acc, (len, g)| acc + len * rint(g.nodes.len() as i64));
            Ok(MetricValue::rational(sum / t))
        }
        LinkCount => {
            let sum = snaps.iter().fold(Rat::zero(), |acc, (len, g)| acc + len * rint(g.edges.len() as i64));
            Ok(MetricValue::rational(sum / t))
        }
        Degree(v) => {
            let sum = snaps
                .iter()
                .fold(Rat::zero(), |acc, (len, g)| acc + len * rint(g.neighbors(v).len() as i64));
            Ok(MetricValue::rational(sum / t))
        }
        AverageDegree => {
            let mut num = Rat::zero();
            let mut w = Rat::zero();
            for v in s.nodes().keys() {
                let mut pres = Rat::zero();
                let mut degint = Rat::zero();
                for (len, g) in &snaps {
                    if g.nodes.contains(v) {
                        pres += len;
                        degint += len * rint(g.neighbors(v).len() as i64);
                    }
                }
                num += &pres * &degint;
                w += pres;
            }
            ratio(num, w * t, "average degree of an empty node set")
        }
        Density => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                let n = g.nodes.len() as i64;
                num += len * rint(g.edges.len() as i64);
                den += len * rint(n * (n - 1) / 2);
            }
            ratio(num, den, "no two nodes are ever co-present")
        }
        Clustering(v) => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                if !g.nodes.contains(v.as_str()) {
                    continue;
                }
                let (c, o) = g.triplet_counts(v)?;
                num += len * rint(c);
                den += len * rint(o);
            }
            ratio(num, den, "never two simultaneous neighbors")
        }
        Transitivity => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                for v in g.nodes.clone() {
                    let (c, o) = g.triplet_counts(&v)?;
                    num += len * rint(c);
                    den += len * rint(o);
                }
            }
            ratio(num, den, "no open 4-uplet exists")
        }
        Strength(v) => {
            let sum = snaps
                .iter()
                .fold(Rat::zero(), |acc, (len, g)| acc + len * snapshot_strength(g, v));
            Ok(MetricValue::rational(sum / t))
        }
        WeightedDensity(variant) => {
            let mut num = Rat::zero();
            let mut present = Rat::zero();
            let mut wmax = Rat::zero();
            let mut wmin = Rat::zero();
            for (len, g) in &snaps {
                present += len * rint(g.edges.len() as i64);
                if let Some(weights) = &g.edge_weights {
                    for w in weights.values() {
                        num += len * w;
                        wmax = wmax.max(w.clone());
                        wmin = wmin.min(w.clone());
                    }
                }
            }
            let n = s.nodes().len() as i64;
            let pairs = rint(n * (n - 1) / 2);
            let den = match variant {
                DensityVariant::PresentMax => wmax * present,
                DensityVariant::AllMax => wmax * pairs * t,
                DensityVariant::UnitInterval => {
                    if wmin < Rat::zero() || wmax > Rat::one() {
                        return Err(Error::InvalidArgument(
                            "unit-interval density requires weights in [0,1]".into(),
                        ));
                    }
                    pairs * t
                }
            };
            ratio(num, den, "weighted density denominator is zero")
        }
        BarratClustering(v) => {
            let mut d = Rat::zero();
            let mut st = Rat::zero();
            let mut num = Rat::zero();
            let two = rint(2);
            for (len, g) in &snaps {
                d += len * rint(g.neighbors(v).len() as i64);
                st += len * snapshot_strength(g, v);
                let nbrs: Vec<&str> = g.neighbors(v).into_iter().collect();
                for i in 0..nbrs.len() {
                    for j in (i + 1)..nbrs.len() {
                        if g.has_edge(nbrs[i], nbrs[j]) {
                            num += len * (g.edge_weight(v, nbrs[i]) + g.edge_weight(v, nbrs[j])) / &two;
                        }
                    }
                }
            }
            d /= &t;
            st /= &t;
            if d <= Rat::one() {
                return Err(Error::Undefined(format!("degree of `{v}` is not above one")));
            }
            if st.is_zero() {
                return Err(Error::Undefined(format!("strength of `{v}` is zero")));
            }
            Ok(MetricValue::rational(num / (st * (d - Rat::one()) * t)))
        }
        GeneralClustering(v, f) => {
            let mut num = RadicalSum::zero();
            let mut den = RadicalSum::zero();
            for (len, g) in &snaps {
                triplet_values(g, v, *f, len, &mut num, &mut den);
            }
            if den.is_zero() {
                return Err(Error::Undefined(format!("no open triplet centered at `{v}`")));
            }
            Ok(MetricValue::from_ratio(num, den))
        }
        WeightedTransitivity(f) => {
            let mut num = RadicalSum::zero();
            let mut den = RadicalSum::zero();
            for (len, g) in &snaps {
                for v in g.nodes.clone() {
                    triplet_values(g, &v, *f, len, &mut num, &mut den);
                }
            }
            if den.is_zero() {
                return Err(Error::Undefined("no open triplet exists".into()));
            }
            Ok(MetricValue::from_ratio(num, den))
        }
        TopCount | BottomCount => {
            let side = if matches!(sel, TopCount) { Side::Top } else { Side::Bottom };
            let sides = s.sides().expect("validated bipartite");
            let mut sum = Rat::zero();
            for (len, g) in &snaps {
                let present = g.nodes.iter().filter(|v| sides.get(*v) == Some(&side)).count() as i64;
                sum += len * rint(present);
            }
            Ok(MetricValue::rational(sum / t))
        }
        SideAverageDegree(side) => {
            let sides = s.sides().expect("validated bipartite");
            let mut num = Rat::zero();
            let mut w = Rat::zero();
            for (v, tag) in sides {
                if tag != side {
                    continue;
                }
                let mut pres = Rat::zero();
                let mut degint = Rat::zero();
                for (len, g) in &snaps {
                    if g.nodes.contains(v) {
                        pres += len;
                        degint += len * rint(g.neighbors(v).len() as i64);
                    }
                }
                num += &pres * &degint;
                w += pres;
            }
            ratio(num, w * t, "no node of that side is ever present")
        }
        BipartiteDensity => {
            let sides = s.sides().expect("validated bipartite");
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                let top = g.nodes.iter().filter(|v| sides.get(*v) == Some(&Side::Top)).count() as i64;
                let bottom = g.nodes.len() as i64 - top;
                num += len * rint(g.edges.len() as i64);
                den += len * rint(top * bottom);
            }
            ratio(num, den, "no cross-side co-presence")
        }
        Jaccard(u, v) => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                let nu = g.neighbors(u);
                let nv = g.neighbors(v);
                num += len * rint(nu.intersection(&nv).count() as i64);
                den += len * rint(nu.union(&nv).count() as i64);
            }
            ratio(num, den, "the two nodes have no neighbors")
        }
        JaccardClustering(v) => {
            let my_side = s.side_of(v)?;
            let sides = s.sides().expect("validated bipartite");
            let mut co_size = Rat::zero();
            let mut total = Rat::zero();
            for (x, tag) in sides {
                if x == v || *tag != my_side {
                    continue;
                }
                let mut conum = Rat::zero();
                let mut jn = Rat::zero();
                let mut jd = Rat::zero();
                let mut cop = Rat::zero();
                for (len, g) in &snaps {
                    let nx = g.neighbors(x);
                    let nv = g.neighbors(v);
                    let inter = nx.intersection(&nv).count() as i64;
                    if inter > 0 {
                        conum += len;
                    }
                    jn += len * rint(inter);
                    jd += len * rint(nx.union(&nv).count() as i64);
                    if g.nodes.contains(x) && g.nodes.contains(v.as_str()) {
                        cop += len;
                    }
                }
                if conum.is_zero() {
                    continue;
                }
                co_size += conum / &t;
                total += cop / &t * (jn / jd);
            }
            ratio(total, co_size, "no neighbors of neighbors")
        }
        Redundancy(v) => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                if !g.nodes.contains(v.as_str()) {
                    continue;
                }
                let (c, o) = g.redundancy_counts(v)?;
                num += len * rint(c);
                den += len * rint(o);
            }
            ratio(num, den, "never two simultaneous neighbors")
        }
        CcStar(v) => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                if !g.nodes.contains(v.as_str()) {
                    continue;
                }
                let (c, o) = g.cc_star_counts(v)?;
                num += len * rint(c);
                den += len * rint(o);
            }
            ratio(num, den, "no open five-node path")
        }
        BipartiteTransitivity { quint } => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                let (c, o) = g.bipartite_path_counts(*quint)?;
                num += len * rint(c);
                den += len * rint(o);
            }
            ratio(num, den, "no open path exists")
        }
        OutDegree(v) => {
            let sum = snaps.iter().fold(Rat::zero(), |acc, (len, g)| {
                acc + len * rint(g.edges.iter().filter(|(a, _)| a == v).count() as i64)
            });
            Ok(MetricValue::rational(sum / t))
        }
        InDegree(v) => {
            let sum = snaps.iter().fold(Rat::zero(), |acc, (len, g)| {
                acc + len * rint(g.edges.iter().filter(|(_, b)| b == v).count() as i64)
            });
            Ok(MetricValue::rational(sum / t))
        }
        DirectedDensity => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                let n = g.nodes.len() as i64;
                num += len * rint(g.edges.len() as i64);
                den += len * rint(n * n);
            }
            ratio(num, den, "no two nodes are ever co-present")
        }
        SymmetricFraction => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                let sym = g
                    .edges
                    .iter()
                    .filter(|(a, b)| g.edges.contains(&(b.clone(), a.clone())))
                    .count() as i64;
                num += len * rint(sym);
                den += len * rint(g.edges.len() as i64);
            }
            ratio(num, den, "no arc is ever present")
        }
        LoopFraction => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                num += len * rint(g.edges.iter().filter(|(a, b)| a == b).count() as i64);
                den += len * rint(g.nodes.len() as i64);
            }
            ratio(num, den, "no node is ever present")
        }
        DirectedClustering(v, variant) => match variant {
            DirectedVariant::Cyclic | DirectedVariant::Transitive => {
                let mut num = Rat::zero();
                let mut den = Rat::zero();
                for (len, g) in &snaps {
                    if !g.nodes.contains(v.as_str()) {
                        continue;
                    }
                    let (c, o) = g.directed_path_counts(v, *variant)?;
                    num += len * rint(c);
                    den += len * rint(o);
                }
                ratio(num, den, "no open path through the node")
            }
            DirectedVariant::In | DirectedVariant::Out => {
                let mut num = Rat::zero();
                let mut den = Rat::zero();
                for (len, g) in &snaps {
                    let members = if *variant == DirectedVariant::In {
                        g.in_neighbors(v)
                    } else {
                        g.out_neighbors(v)
                    };
                    let n = members.len() as i64;
                    den += len * rint(n * n);
                    let arcs = g
                        .edges
                        .iter()
                        .filter(|(a, b)| members.contains(a.as_str()) && members.contains(b.as_str()))
                        .count() as i64;
                    num += len * rint(arcs);
                }
                ratio(num, den, "empty neighborhood")
            }
        },
        DirectedTransitivity(variant) => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            for (len, g) in &snaps {
                for v in g.nodes.clone() {
                    let (c, o) = g.directed_path_counts(&v, *variant)?;
                    num += len * rint(c);
                    den += len * rint(o);
                }
            }
            ratio(num, den, "no open directed path exists")
        }
    }
}

/// Per-snapshot open/closed triplet value sums centered at `v`, scaled by the
/// cell length.
fn triplet_values(
    g: &StaticGraph,
    v: &str,
    f: ValueFn,
    len: &Rat,
    num: &mut RadicalSum,
    den: &mut RadicalSum,
) {
    if !g.nodes.contains(v) {
        return;
    }
    let nbrs: Vec<&str> = g.neighbors(v).into_iter().collect();
    for i in 0..nbrs.len() {
        for j in (i + 1)..nbrs.len() {
            let wi = g.edge_weight(v, nbrs[i]);
            let wj = g.edge_weight(v, nbrs[j]);
            *den = den.add(&open_value(f, &wi, &wj).scale(len));
            if g.has_edge(nbrs[i], nbrs[j]) {
                let wij = g.edge_weight(nbrs[i], nbrs[j]);
                *num = num.add(&closed_value(f, &wi, &wj, &wij).scale(len));
            }
        }
    }
}
