//! Weighted-stream machinery: weight statistics, strength, weighted
//! densities, weighted clustering and transitivity, thresholding, and
//! sliding-window (Δ) analysis.

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::metrics;
use crate::radical::RadicalSum;
use crate::rational::{rat_to_f64, rint, Rat};
use crate::static_graph::StaticGraph;
use crate::stream::{NodeId, StreamBuilder, StreamGraph};
use crate::value::MetricValue;
use crate::weight::{constant_segments, StepWeight};
use num::{One, Signed, Zero};

/// Per-triplet value functions for the weighted clustering family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueFn {
    ArithMean,
    GeoMean,
    Min,
    Max,
    Product,
}

/// Denominator conventions for the weighted density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityVariant {
    /// ω_max · (total link presence): all present links at maximal weight.
    PresentMax,
    /// ω_max · (all pairs over all of T): all possible links at maximal weight.
    AllMax,
    /// All pairs over all of T, weights constrained to [0,1].
    UnitInterval,
}

/// Value of an open triplet with center-adjacent weights `w1`, `w2`.
pub fn open_value(value_fn: ValueFn, w1: &Rat, w2: &Rat) -> RadicalSum {
    match value_fn {
        ValueFn::ArithMean => RadicalSum::from_rat((w1 + w2) / rint(2)),
        ValueFn::GeoMean => RadicalSum::sqrt_of_rat(&(w1 * w2)),
        ValueFn::Min => RadicalSum::from_rat(w1.min(w2).clone()),
        ValueFn::Max => RadicalSum::from_rat(w1.max(w2).clone()),
        ValueFn::Product => RadicalSum::from_rat(w1 * w2),
    }
}

/// Value of a closed triplet. Only the product variant uses the closing
/// link's weight; the others count the open-triplet value.
pub fn closed_value(value_fn: ValueFn, w1: &Rat, w2: &Rat, w12: &Rat) -> RadicalSum {
    match value_fn {
        ValueFn::Product => RadicalSum::from_rat(w1 * w2 * w12),
        _ => open_value(value_fn, w1, w2),
    }
}

fn require_link_weights(s: &StreamGraph) -> Result<()> {
    if s.link_weights().is_none() {
        return Err(Error::Unweighted);
    }
    Ok(())
}

/// Global link-weight statistics: extrema over pieces, time-weighted mean.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightStats {
    pub min: Rat,
    pub max: Rat,
    pub mean: Rat,
}

pub fn weight_stats(s: &StreamGraph) -> Result<WeightStats> {
    let weights = s.link_weights().ok_or(Error::Unweighted)?;
    let mut min: Option<Rat> = None;
    let mut max: Option<Rat> = None;
    let mut integral = Rat::zero();
    let mut carrier = Rat::zero();
    for w in weights.values() {
        for (iv, v) in w.pieces() {
            min = Some(min.map_or(v.clone(), |m| m.min(v.clone())));
            max = Some(max.map_or(v.clone(), |m| m.max(v.clone())));
            integral += v * iv.length();
            carrier += iv.length();
        }
    }
    let (Some(min), Some(max)) = (min, max) else {
        return Err(Error::Undefined("no link is ever present".into()));
    };
    if carrier.is_zero() {
        return Err(Error::Undefined("total link presence has measure zero".into()));
    }
    Ok(WeightStats { min, max, mean: integral / carrier })
}

/// `s(v) = Σ_u ∫ ω(t,uv) dt / |T|`.
pub fn strength(s: &StreamGraph, v: &str) -> Result<Rat> {
    require_link_weights(s)?;
    s.node_presence(v)?;
    let t = s.require_nonempty_horizon()?;
    let mut total = Rat::zero();
    for ((a, b), _) in s.links() {
        if a == v || b == v {
            let w = s.link_weight(a, b)?;
            total += w.integrate(&w.support());
        }
    }
    Ok(total / t)
}

/// `d(v)·(s(v)/d(v))^α`, evaluated in floating point since `α` may be
/// fractional.
pub fn degree_strength_combo(s: &StreamGraph, v: &str, alpha: &Rat) -> Result<f64> {
    let d = metrics::degree(s, v)?;
    if d.is_zero() {
        return Err(Error::Undefined(format!("degree of `{v}` is zero")));
    }
    let st = strength(s, v)?;
    let ratio = rat_to_f64(&(st / &d));
    Ok(rat_to_f64(&d) * ratio.powf(rat_to_f64(alpha)))
}

/// Total link weight against a maximal-weight reference volume.
pub fn weighted_density(s: &StreamGraph, variant: DensityVariant) -> Result<Rat> {
    let weights = s.link_weights().ok_or(Error::Unweighted)?;
    let t = s.require_nonempty_horizon()?;
    let mut num = Rat::zero();
    let mut presence_total = Rat::zero();
    let mut wmax = Rat::zero();
    let mut wmin = Rat::zero();
    for w in weights.values() {
        num += w.integrate(&w.support());
        presence_total += w.support().measure();
        if let (Some(lo), Some(hi)) = (w.min_value(), w.max_value()) {
            wmin = wmin.min(lo);
            wmax = wmax.max(hi);
        }
    }
    let n = s.nodes().len() as i64;
    let pairs = rint(n * (n - 1) / 2);
    let den = match variant {
        DensityVariant::PresentMax => wmax * presence_total,
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
    if den.is_zero() {
        return Err(Error::Undefined("weighted density denominator is zero".into()));
    }
    Ok(num / den)
}

/// Barrat-style weighted clustering, normalized by `|T|` so that streams
/// without dynamics reproduce the classical value.
pub fn weighted_clustering_barrat(s: &StreamGraph, v: &str) -> Result<Rat> {
    require_link_weights(s)?;
    let t = s.require_nonempty_horizon()?;
    let d = metrics::degree(s, v)?;
    if d <= Rat::one() {
        return Err(Error::Undefined(format!("degree of `{v}` is not above one")));
    }
    let st = strength(s, v)?;
    if st.is_zero() {
        return Err(Error::Undefined(format!("strength of `{v}` is zero")));
    }
    let nbrs = metrics::neighborhood(s, v)?;
    let ids: Vec<&NodeId> = nbrs.keys().collect();
    let two = rint(2);
    let mut sum = Rat::zero();
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            let dom = nbrs[ids[i]]
                .intersect(&nbrs[ids[j]])
                .intersect(&s.link_presence(ids[i], ids[j]));
            if dom.is_empty() {
                continue;
            }
            let wi = s.link_weight(v, ids[i])?;
            let wj = s.link_weight(v, ids[j])?;
            for seg in constant_segments(&[&wi, &wj], &dom) {
                sum += (&seg.values[0] + &seg.values[1]) / &two * seg.length;
            }
        }
    }
    Ok(sum / (st * (d - Rat::one()) * t))
}

/// Accumulates open/closed triplet values centered at `v`.
fn triplet_sums(
    s: &StreamGraph,
    v: &str,
    value_fn: ValueFn,
    num: &mut RadicalSum,
    den: &mut RadicalSum,
) -> Result<()> {
    let nbrs = metrics::neighborhood(s, v)?;
    let ids: Vec<&NodeId> = nbrs.keys().collect();
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            let open_dom = nbrs[ids[i]].intersect(&nbrs[ids[j]]);
            if open_dom.is_empty() {
                continue;
            }
            let wi = s.link_weight(v, ids[i])?;
            let wj = s.link_weight(v, ids[j])?;
            for seg in constant_segments(&[&wi, &wj], &open_dom) {
                *den = den.add(&open_value(value_fn, &seg.values[0], &seg.values[1]).scale(&seg.length));
            }
            let closed_dom = open_dom.intersect(&s.link_presence(ids[i], ids[j]));
            if closed_dom.is_empty() {
                continue;
            }
            let wij = s.link_weight(ids[i], ids[j])?;
            for seg in constant_segments(&[&wi, &wj, &wij], &closed_dom) {
                *num = num.add(
                    &closed_value(value_fn, &seg.values[0], &seg.values[1], &seg.values[2])
                        .scale(&seg.length),
                );
            }
        }
    }
    Ok(())
}

/// Triplet-value weighted clustering of `v` (Opsahl-style; `product` is the
/// fully multiplicative form).
pub fn weighted_clustering_general(s: &StreamGraph, v: &str, value_fn: ValueFn) -> Result<MetricValue> {
    require_link_weights(s)?;
    let mut num = RadicalSum::zero();
    let mut den = RadicalSum::zero();
    triplet_sums(s, v, value_fn, &mut num, &mut den)?;
    if den.is_zero() {
        return Err(Error::Undefined(format!("no open triplet centered at `{v}`")));
    }
    Ok(MetricValue::from_ratio(num, den))
}

pub fn weighted_transitivity(s: &StreamGraph, value_fn: ValueFn) -> Result<MetricValue> {
    require_link_weights(s)?;
    let mut num = RadicalSum::zero();
    let mut den = RadicalSum::zero();
    for v in s.nodes().keys() {
        triplet_sums(s, v, value_fn, &mut num, &mut den)?;
    }
    if den.is_zero() {
        return Err(Error::Undefined("no open triplet exists".into()));
    }
    Ok(MetricValue::from_ratio(num, den))
}

/// `S_τ`: the unweighted stream keeping the times where weights are ≥ τ.
/// Node presence only shrinks when the stream carries node weights; link
/// presence is additionally clipped to the surviving node presences.
pub fn threshold(s: &StreamGraph, tau: &Rat) -> Result<StreamGraph> {
    if !s.is_weighted() {
        return Err(Error::Unweighted);
    }
    let (begin, end) = s.horizon();
    let mut b = StreamBuilder::new(s.kind(), begin.clone(), end.clone());
    let mut kept: std::collections::BTreeMap<NodeId, IntervalSet> = Default::default();
    for (id, presence) in s.nodes() {
        let p = match s.node_weights().and_then(|m| m.get(id)) {
            Some(w) => w.threshold_support(tau),
            None => presence.clone(),
        };
        b.node(id, p.clone());
        if let Some(sides) = s.sides() {
            b.side(id, sides[id]);
        }
        kept.insert(id.clone(), p);
    }
    for ((u, v), presence) in s.links() {
        let p = match s.link_weights().and_then(|m| m.get(&(u.clone(), v.clone()))) {
            Some(w) => w.threshold_support(tau),
            None => presence.clone(),
        };
        b.link(u, v, p.intersect(&kept[u]).intersect(&kept[v]));
    }
    b.build()
}

/// Measure of the length-Δ window centered on each cell midpoint, emitted as
/// a step weight over the dilated presence set.
fn window_weight(
    original: &IntervalSet,
    dilated: &IntervalSet,
    begin: &Rat,
    end: &Rat,
    resolution: &Rat,
    half: &Rat,
) -> Result<StepWeight> {
    let two = rint(2);
    let mut raw = Vec::new();
    let mut lo = begin.clone();
    while &lo < end {
        let hi = (&lo + resolution).min(end.clone());
        let mid = (&lo + &hi) / &two;
        let window = IntervalSet::interval(&mid - half, &mid + half)?;
        let value = window.intersect(original).measure();
        let cell = IntervalSet::interval(lo, hi.clone())?;
        for (pb, pe) in cell.intersect(dilated).iter_pairs() {
            raw.push(((pb, pe), value.clone()));
        }
        lo = hi;
    }
    StepWeight::new(raw)
}

/// `S_Δ`: presence sets dilated by Δ/2 inside the shrunk horizon, weighted by
/// how much of each length-Δ window the original presence covers. The exact
/// weight is piecewise linear; it is sampled at cell midpoints on a grid of
/// the given resolution, aligned to the new horizon's start.
pub fn delta_analysis(s: &StreamGraph, delta: &Rat, resolution: &Rat) -> Result<StreamGraph> {
    if s.is_weighted() {
        return Err(Error::InvalidArgument("sliding-window analysis expects an unweighted stream".into()));
    }
    if !delta.is_positive() || !resolution.is_positive() {
        return Err(Error::InvalidArgument("window and resolution must be positive".into()));
    }
    let dur = s.require_nonempty_horizon()?;
    if delta >= &dur {
        return Err(Error::InvalidArgument("window does not fit inside the horizon".into()));
    }
    let two = rint(2);
    let half = delta / &two;
    let (x, y) = s.horizon();
    let begin = x + &half;
    let end = y - &half;
    let clip = IntervalSet::interval(begin.clone(), end.clone())?;
    let mut b = StreamBuilder::new(s.kind(), begin.clone(), end.clone());
    for (id, presence) in s.nodes() {
        let dilated = presence.dilate(&half, &clip)?;
        b.node(id, dilated.clone());
        if let Some(sides) = s.sides() {
            b.side(id, sides[id]);
        }
        b.node_weight(id, window_weight(presence, &dilated, &begin, &end, resolution, &half)?);
    }
    for ((u, v), presence) in s.links() {
        let dilated = presence.dilate(&half, &clip)?;
        b.link(u, v, dilated.clone());
        b.link_weight(u, v, window_weight(presence, &dilated, &begin, &end, resolution, &half)?);
    }
    b.build()
}

/// Snapshot at `t` with weights evaluated at `t`.
pub fn weighted_snapshot(s: &StreamGraph, t: &Rat) -> Result<StaticGraph> {
    crate::static_graph::snapshot(s, t)
}

/// `G(S)` with time-averaged (and min/max) weights.
pub fn weighted_induced_graph(s: &StreamGraph) -> Result<StaticGraph> {
    crate::static_graph::induced_graph(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::stream::Kind;
    use crate::testutil::{example_stream, iset};

    /// T=[0,2]: a–b with a two-step weight, a–c with unit weight.
    fn two_link_stream() -> StreamGraph {
        let mut b = StreamBuilder::new(Kind::Undirected, rint(0), rint(2));
        b.node("a", iset(&[(0, 2)]));
        b.node("b", iset(&[(0, 2)]));
        b.node("c", iset(&[(0, 2)]));
        b.link("a", "b", iset(&[(0, 2)]));
        b.link("a", "c", iset(&[(0, 2)]));
        b.link_weight(
            "a",
            "b",
            StepWeight::new(vec![((rint(0), rint(1)), rint(2)), ((rint(1), rint(2)), rint(3))]).unwrap(),
        );
        b.build().unwrap()
    }

    /// Weighted triangle without dynamics: v–i (2), v–j (3), i–j (4).
    fn triangle_stream() -> StreamGraph {
        let full = iset(&[(0, 10)]);
        let mut b = StreamBuilder::new(Kind::Undirected, rint(0), rint(10));
        for id in ["v", "i", "j"] {
            b.node(id, full.clone());
        }
        b.link("v", "i", full.clone());
        b.link("v", "j", full.clone());
        b.link("i", "j", full.clone());
        b.link_weight("v", "i", StepWeight::constant(rint(2), &full));
        b.link_weight("v", "j", StepWeight::constant(rint(3), &full));
        b.link_weight("i", "j", StepWeight::constant(rint(4), &full));
        b.build().unwrap()
    }

    #[test]
    fn stats() {
        let s = two_link_stream();
        let st = weight_stats(&s).unwrap();
        assert_eq!(st.min, rint(1));
        assert_eq!(st.max, rint(3));
        assert_eq!(st.mean, rat(7, 4)); // (2+3+2)/4
        assert!(matches!(weight_stats(&example_stream()), Err(Error::Unweighted)));
        let unit = weight_stats(&example_stream().with_unit_weights()).unwrap();
        assert_eq!((unit.min, unit.max, unit.mean), (rint(1), rint(1), rint(1)));
    }

    #[test]
    fn strength_values() {
        let s = two_link_stream();
        assert_eq!(strength(&s, "a").unwrap(), rat(7, 2));
        assert_eq!(strength(&s, "b").unwrap(), rat(5, 2));
        // unit weights reduce strength to degree
        let u = example_stream().with_unit_weights();
        assert_eq!(strength(&u, "a").unwrap(), metrics::degree(&u, "a").unwrap());
        // isolated node
        let mut b = StreamBuilder::new(Kind::Undirected, rint(0), rint(2));
        b.node("z", iset(&[(0, 2)]));
        b.node("a", iset(&[(0, 2)]));
        b.link("a", "z", IntervalSet::empty());
        b.link_weight("a", "z", StepWeight::new(vec![]).unwrap());
        let s = b.build().unwrap();
        assert_eq!(strength(&s, "z").unwrap(), rint(0));
    }

    #[test]
    fn combo_limits() {
        let s = two_link_stream();
        let d = rat_to_f64(&metrics::degree(&s, "a").unwrap());
        let st = rat_to_f64(&strength(&s, "a").unwrap());
        assert_eq!(degree_strength_combo(&s, "a", &rint(0)).unwrap(), d);
        assert!((degree_strength_combo(&s, "a", &rint(1)).unwrap() - st).abs() < 1e-12);
        // α=2: d·(s/d)² = s²/d
        let got = degree_strength_combo(&s, "a", &rint(2)).unwrap();
        assert!((got - st * st / d).abs() < 1e-12);
        assert!(degree_strength_combo(&s, "c", &rint(2)).is_ok());
        let mut b = StreamBuilder::new(Kind::Undirected, rint(0), rint(2));
        b.node("z", iset(&[(0, 2)]));
        b.node("a", iset(&[(0, 2)]));
        b.link("a", "z", IntervalSet::empty());
        b.link_weight("a", "z", StepWeight::new(vec![]).unwrap());
        let s = b.build().unwrap();
        assert!(degree_strength_combo(&s, "z", &rint(2)).unwrap_err().is_undefined());
    }

    #[test]
    fn density_variants() {
        // T=[0,1], single pair, ω=1/2 on all of it
        let full = iset(&[(0, 1)]);
        let mut b = StreamBuilder::new(Kind::Undirected, rint(0), rint(1));
        b.node("a", full.clone());
        b.node("b", full.clone());
        b.link("a", "b", full.clone());
        b.link_weight("a", "b", StepWeight::constant(rat(1, 2), &full));
        let s = b.build().unwrap();
        assert_eq!(weighted_density(&s, DensityVariant::UnitInterval).unwrap(), rat(1, 2));
        // everything at ω_max
        assert_eq!(weighted_density(&s, DensityVariant::PresentMax).unwrap(), rint(1));
        assert_eq!(weighted_density(&s, DensityVariant::AllMax).unwrap(), rint(1));

        let tri = triangle_stream();
        assert!(matches!(
            weighted_density(&tri, DensityVariant::UnitInterval),
            Err(Error::InvalidArgument(_))
        ));
        // links cover every pair all the time, so present_max = all_max
        assert_eq!(
            weighted_density(&tri, DensityVariant::PresentMax).unwrap(),
            weighted_density(&tri, DensityVariant::AllMax).unwrap()
        );
        assert_eq!(weighted_density(&tri, DensityVariant::PresentMax).unwrap(), rat(9, 12));
    }

    #[test]
    fn barrat_matches_static_triangle() {
        let s = triangle_stream();
        // graph value: ((2+3)/2) / (s(v)·(d(v)−1)) with s=5, d=2
        assert_eq!(weighted_clustering_barrat(&s, "v").unwrap(), rat(1, 2));
        let g = weighted_induced_graph(&s).unwrap();
        assert_eq!(g.barrat_clustering("v").unwrap(), rat(1, 2));
        // dynamic stream: degrees stay below one, so undefined
        let u = example_stream().with_unit_weights();
        assert!(weighted_clustering_barrat(&u, "b").unwrap_err().is_undefined());
    }

    #[test]
    fn general_clustering_reduces_to_plain() {
        let u = example_stream().with_unit_weights();
        for f in [ValueFn::ArithMean, ValueFn::GeoMean, ValueFn::Min, ValueFn::Max, ValueFn::Product] {
            let got = weighted_clustering_general(&u, "b", f).unwrap();
            assert_eq!(got.as_rational(), Some(&rat(1, 4)));
        }
    }

    #[test]
    fn product_clustering_on_triangle() {
        let s = triangle_stream();
        // all pairs closed: product gives ω_ij, the others give 1
        let got = weighted_clustering_general(&s, "v", ValueFn::Product).unwrap();
        assert_eq!(got.as_rational(), Some(&rint(4)));
        for f in [ValueFn::ArithMean, ValueFn::GeoMean, ValueFn::Min, ValueFn::Max] {
            let got = weighted_clustering_general(&s, "v", f).unwrap();
            assert_eq!(got.as_rational(), Some(&rint(1)));
        }
    }

    #[test]
    fn geo_mean_can_stay_irrational() {
        // open star: v–i (2), v–j (3), neighbors never linked
        let full = iset(&[(0, 10)]);
        let mut b = StreamBuilder::new(Kind::Undirected, rint(0), rint(10));
        for id in ["v", "i", "j", "k"] {
            b.node(id, full.clone());
        }
        b.link("v", "i", full.clone());
        b.link("v", "j", full.clone());
        b.link("v", "k", full.clone());
        b.link("i", "j", full.clone());
        b.link_weight("v", "i", StepWeight::constant(rint(2), &full));
        b.link_weight("v", "j", StepWeight::constant(rint(3), &full));
        b.link_weight("v", "k", StepWeight::constant(rint(5), &full));
        b.link_weight("i", "j", StepWeight::constant(rint(1), &full));
        let s = b.build().unwrap();
        let got = weighted_clustering_general(&s, "v", ValueFn::GeoMean).unwrap();
        // √6 / (√6+√10+√15)
        assert!(got.as_rational().is_none());
        let g = weighted_induced_graph(&s).unwrap();
        assert!(got.eq_exact(&g.general_clustering("v", ValueFn::GeoMean).unwrap()));
    }

    #[test]
    fn transitivity_reduces_and_matches_static() {
        let u = example_stream().with_unit_weights();
        for f in [ValueFn::ArithMean, ValueFn::GeoMean, ValueFn::Min, ValueFn::Max, ValueFn::Product] {
            let got = weighted_transitivity(&u, f).unwrap();
            assert_eq!(got.as_rational(), Some(&rat(3, 8)));
        }
        let s = triangle_stream();
        let g = weighted_induced_graph(&s).unwrap();
        for f in [ValueFn::ArithMean, ValueFn::GeoMean, ValueFn::Min, ValueFn::Max, ValueFn::Product] {
            let got = weighted_transitivity(&s, f).unwrap();
            assert!(got.eq_exact(&g.weighted_transitivity(f).unwrap()));
        }
    }

    #[test]
    fn threshold_filters_pieces() {
        let s = two_link_stream();
        let low = threshold(&s, &rint(1)).unwrap();
        assert!(!low.is_weighted());
        assert_eq!(low.links(), s.links());
        assert_eq!(low.nodes(), s.nodes());

        let mid = threshold(&s, &rat(5, 2)).unwrap();
        assert_eq!(mid.link_presence("a", "b"), iset(&[(1, 2)]));
        assert!(mid.link_presence("a", "c").is_empty());

        let high = threshold(&s, &rint(4)).unwrap();
        assert!(high.links().values().all(|p| p.is_empty()));
        assert_eq!(high.nodes(), s.nodes());

        assert!(matches!(threshold(&example_stream(), &rint(1)), Err(Error::Unweighted)));
    }

    #[test]
    fn threshold_monotone() {
        let s = two_link_stream();
        let a = threshold(&s, &rint(2)).unwrap();
        let b = threshold(&s, &rint(3)).unwrap();
        for (key, p) in b.links() {
            assert!(p.is_subset_of(&a.links()[key]));
        }
    }

    #[test]
    fn threshold_with_node_weights() {
        let full = iset(&[(0, 4)]);
        let mut b = StreamBuilder::new(Kind::Undirected, rint(0), rint(4));
        b.node("a", full.clone());
        b.node("b", full.clone());
        b.link("a", "b", full.clone());
        b.node_weight(
            "a",
            StepWeight::new(vec![((rint(0), rint(2)), rint(5)), ((rint(2), rint(4)), rint(1))]).unwrap(),
        );
        let s = b.build().unwrap();
        let cut = threshold(&s, &rint(2)).unwrap();
        assert_eq!(cut.node_presence("a").unwrap(), &iset(&[(0, 2)]));
        // `b` got the completed constant weight 1, which is below τ
        assert!(cut.node_presence("b").unwrap().is_empty());
        assert!(cut.link_presence("a", "b").is_empty());
        // at τ = 1 every completed weight survives; only `a` shrinks nothing
        let cut = threshold(&s, &rint(1)).unwrap();
        assert_eq!(cut.node_presence("a").unwrap(), &full);
        assert_eq!(cut.link_presence("a", "b"), full);
    }

    #[test]
    fn window_analysis_example() {
        let mut b = StreamBuilder::new(Kind::Undirected, rint(0), rint(10));
        b.node("v", iset(&[(2, 3)]));
        let s = b.build().unwrap();
        let out = delta_analysis(&s, &rint(2), &rint(1)).unwrap();
        assert_eq!(out.horizon(), (&rint(1), &rint(9)));
        assert_eq!(out.node_presence("v").unwrap(), &iset(&[(1, 4)]));
        let w = &out.node_weights().unwrap()["v"];
        assert_eq!(w.value_at(&rat(3, 2)), rat(1, 2));
        assert_eq!(w.value_at(&rat(5, 2)), rint(1));
        assert_eq!(w.value_at(&rat(7, 2)), rat(1, 2));
        assert_eq!(w.integrate(&w.support()), rint(2));
        // a finer grid leaves the integral unchanged here
        let fine = delta_analysis(&s, &rint(2), &rat(1, 4)).unwrap();
        let wf = &fine.node_weights().unwrap()["v"];
        assert_eq!(wf.integrate(&wf.support()), rint(2));
    }

    #[test]
    fn window_analysis_full_presence() {
        let mut b = StreamBuilder::new(Kind::Undirected, rint(0), rint(10));
        b.node("v", iset(&[(0, 10)]));
        let s = b.build().unwrap();
        let out = delta_analysis(&s, &rint(2), &rint(1)).unwrap();
        assert_eq!(out.node_presence("v").unwrap(), &iset(&[(1, 9)]));
        let w = &out.node_weights().unwrap()["v"];
        assert_eq!(w.pieces().len(), 1);
        assert_eq!(w.value_at(&rint(5)), rint(2));
    }

    #[test]
    fn window_analysis_guards() {
        let s = example_stream();
        assert!(delta_analysis(&s, &rint(0), &rint(1)).is_err());
        assert!(delta_analysis(&s, &rint(10), &rint(1)).is_err());
        assert!(delta_analysis(&s, &rint(2), &rint(0)).is_err());
        assert!(delta_analysis(&s.with_unit_weights(), &rint(2), &rint(1)).is_err());
        // links are dilated and weighted too
        let out = delta_analysis(&s, &rint(1), &rat(1, 2)).unwrap();
        assert_eq!(
            out.link_presence("b", "d"),
            iset_pairs(&[(rat(3, 2), rat(7, 2))])
        );
        assert!(out.link_weights().is_some());
    }

    fn iset_pairs(pairs: &[(Rat, Rat)]) -> IntervalSet {
        IntervalSet::normalize(pairs.to_vec()).unwrap()
    }
}
