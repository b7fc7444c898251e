//! Bipartite-stream machinery: one-mode projections, per-side statistics,
//! bipartite density and cliques, Jaccard clustering, redundancy, and the
//! path-based clustering/transitivity family.

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::metrics;
use crate::rational::Rat;
use crate::stream::{Kind, NodeId, Side, StreamBuilder, StreamGraph};
use crate::weight::StepWeight;
use num::Zero;
use std::collections::BTreeMap;

fn require_bipartite(s: &StreamGraph) -> Result<&BTreeMap<NodeId, Side>> {
    s.require_kind(Kind::Bipartite)?;
    s.sides()
        .ok_or_else(|| Error::InvalidStream("bipartite stream without side tags".into()))
}

fn side_members<'a>(s: &'a StreamGraph, side: Side) -> Result<Vec<&'a NodeId>> {
    let sides = require_bipartite(s)?;
    Ok(s.nodes()
        .keys()
        .filter(|id| sides.get(*id) == Some(&side))
        .collect())
}

/// Piecewise count of how many of the given sets cover each instant of `dom`.
fn coverage_count(sets: &[IntervalSet], dom: &IntervalSet) -> StepWeight {
    let two = crate::rational::rint(2);
    let mut raw = Vec::new();
    for dom_iv in dom.intervals() {
        if dom_iv.begin == dom_iv.end {
            let hits = sets.iter().filter(|s| s.contains(&dom_iv.begin)).count() as i64;
            raw.push(((dom_iv.begin.clone(), dom_iv.end.clone()), crate::rational::rint(hits)));
            continue;
        }
        let mut cuts: Vec<Rat> = vec![dom_iv.begin.clone(), dom_iv.end.clone()];
        for set in sets {
            for iv in set.intervals() {
                for p in [&iv.begin, &iv.end] {
                    if p > &dom_iv.begin && p < &dom_iv.end {
                        cuts.push(p.clone());
                    }
                }
            }
        }
        cuts.sort();
        cuts.dedup();
        for pair in cuts.windows(2) {
            let mid = (&pair[0] + &pair[1]) / &two;
            let hits = sets.iter().filter(|s| s.contains(&mid)).count() as i64;
            raw.push(((pair[0].clone(), pair[1].clone()), crate::rational::rint(hits)));
        }
    }
    StepWeight::new(raw).expect("segments are disjoint")
}

/// One-mode projection: two same-side nodes are linked whenever they share an
/// opposite-side neighbor; the weighted form counts those shared neighbors.
pub fn project(s: &StreamGraph, side: Side, weighted: bool) -> Result<StreamGraph> {
    require_bipartite(s)?;
    if s.is_weighted() {
        return Err(Error::InvalidArgument(
            "projection is only defined for unweighted streams".into(),
        ));
    }
    let members = side_members(s, side)?;
    let others = side_members(s, side.opposite())?;
    let (begin, end) = s.horizon();
    let mut b = StreamBuilder::new(Kind::Undirected, begin.clone(), end.clone());
    for m in &members {
        b.node(m, s.node_presence(m)?.clone());
    }
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            let overlaps: Vec<IntervalSet> = others
                .iter()
                .map(|x| s.link_presence(members[i], x).intersect(&s.link_presence(members[j], x)))
                .filter(|o| !o.is_empty())
                .collect();
            if overlaps.is_empty() {
                continue;
            }
            let dom = overlaps.iter().fold(IntervalSet::empty(), |acc, o| acc.union(o));
            b.link(members[i], members[j], dom.clone());
            if weighted {
                b.link_weight(members[i], members[j], coverage_count(&overlaps, &dom));
            }
        }
    }
    b.build()
}

/// `(n_⊤, n_⊥)`.
pub fn side_counts(s: &StreamGraph) -> Result<(Rat, Rat)> {
    require_bipartite(s)?;
    let t = s.require_nonempty_horizon()?;
    let mut counts = [Rat::zero(), Rat::zero()];
    for (side, slot) in [(Side::Top, 0), (Side::Bottom, 1)] {
        for id in side_members(s, side)? {
            counts[slot] += s.node_presence(id)?.measure();
        }
        counts[slot] /= &t;
    }
    let [top, bottom] = counts;
    Ok((top, bottom))
}

/// Average degree of one side, weighted by presence within that side.
pub fn side_average_degree(s: &StreamGraph, side: Side) -> Result<Rat> {
    let members = side_members(s, side)?;
    s.require_nonempty_horizon()?;
    let w_side: Rat = members
        .iter()
        .map(|id| s.node_presence(id).map(|p| p.measure()))
        .sum::<Result<Rat>>()?;
    if w_side.is_zero() {
        return Err(Error::Undefined(format!("no {} node is ever present", side.name())));
    }
    let mut total = Rat::zero();
    for id in &members {
        total += s.node_presence(id)?.measure() * metrics::degree(s, id)?;
    }
    Ok(total / w_side)
}

/// `m / Σ_{u∈⊤,v∈⊥} |T_u∩T_v|`.
pub fn bipartite_density(s: &StreamGraph) -> Result<Rat> {
    let top = side_members(s, Side::Top)?;
    let bottom = side_members(s, Side::Bottom)?;
    let mut den = Rat::zero();
    for u in &top {
        for v in &bottom {
            den += s.node_presence(u)?.intersect(s.node_presence(v)?).measure();
        }
    }
    if den.is_zero() {
        return Err(Error::Undefined("no cross-side co-presence".into()));
    }
    let num = s.links().values().fold(Rat::zero(), |acc, p| acc + p.measure());
    Ok(num / den)
}

/// True iff every cross-side pair of `C` is linked whenever both are covered.
pub fn is_bipartite_clique(
    s: &StreamGraph,
    c_top: &BTreeMap<NodeId, IntervalSet>,
    c_bottom: &BTreeMap<NodeId, IntervalSet>,
) -> Result<bool> {
    let sides = require_bipartite(s)?;
    for (cluster, want) in [(c_top, Side::Top), (c_bottom, Side::Bottom)] {
        for (id, c) in cluster {
            if sides.get(id) != Some(&want) {
                return Err(Error::InvalidArgument(format!(
                    "node `{id}` is not a {} node",
                    want.name()
                )));
            }
            if !c.is_subset_of(s.node_presence(id)?) {
                return Err(Error::InvalidArgument(format!(
                    "cluster of node `{id}` is not a subset of its presence"
                )));
            }
        }
    }
    for (u, cu) in c_top {
        for (v, cv) in c_bottom {
            if !cu.intersect(cv).is_subset_of(&s.link_presence(u, v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Temporal Jaccard coefficient of two same-side nodes; instantaneous at a
/// given instant, time-integrated otherwise.
pub fn jaccard(s: &StreamGraph, u: &str, v: &str, at: Option<&Rat>) -> Result<Rat> {
    let sides = require_bipartite(s)?;
    s.node_presence(u)?;
    s.node_presence(v)?;
    if u == v || sides.get(u) != sides.get(v) {
        return Err(Error::InvalidArgument(
            "the Jaccard coefficient needs two distinct same-side nodes".into(),
        ));
    }
    let others = side_members(s, sides[u].opposite())?;
    if let Some(t) = at {
        if !s.horizon_set().contains(t) {
            return Err(Error::InvalidArgument("instant outside the horizon".into()));
        }
        let mut inter = 0i64;
        let mut union = 0i64;
        for w in others {
            let in_u = s.link_presence(u, w).contains(t);
            let in_v = s.link_presence(v, w).contains(t);
            inter += (in_u && in_v) as i64;
            union += (in_u || in_v) as i64;
        }
        if union == 0 {
            return Err(Error::Undefined(format!("`{u}` and `{v}` have no neighbor at that instant")));
        }
        return Ok(crate::rational::rint(inter) / crate::rational::rint(union));
    }
    let mut num = Rat::zero();
    let mut den = Rat::zero();
    for w in others {
        let pu = s.link_presence(u, w);
        let pv = s.link_presence(v, w);
        num += pu.intersect(&pv).measure();
        den += pu.union(&pv).measure();
    }
    if den.is_zero() {
        return Err(Error::Undefined(format!("`{u}` and `{v}` have no neighbors")));
    }
    Ok(num / den)
}

/// Times at which `x` is a neighbor of a neighbor of `v`.
fn co_neighbor_time(s: &StreamGraph, x: &str, v: &str) -> IntervalSet {
    let mut out = IntervalSet::empty();
    for ((a, b), _) in s.links() {
        let w = if a == x {
            b
        } else if b == x {
            a
        } else {
            continue;
        };
        out = out.union(&s.link_presence(x, w).intersect(&s.link_presence(w, v)));
    }
    out
}

/// Jaccard coefficients with every neighbor of a neighbor, averaged with
/// co-presence weights.
pub fn jaccard_clustering(s: &StreamGraph, v: &str) -> Result<Rat> {
    let sides = require_bipartite(s)?;
    let t = s.require_nonempty_horizon()?;
    let pv = s.node_presence(v)?;
    let mut co_size = Rat::zero();
    let mut total = Rat::zero();
    for x in side_members(s, sides[v])? {
        if x == v {
            continue;
        }
        let co = co_neighbor_time(s, x, v);
        if co.is_empty() {
            continue;
        }
        co_size += co.measure() / &t;
        total += s.node_presence(x)?.intersect(pv).measure() / &t * jaccard(s, x, v, None)?;
    }
    if co_size.is_zero() {
        return Err(Error::Undefined(format!("`{v}` has no neighbors of neighbors")));
    }
    Ok(total / co_size)
}

/// Fraction of time-pair tuples `(t,u,v,w)` with `u,w` simultaneous neighbors
/// of `v` that some other node covers.
pub fn redundancy(s: &StreamGraph, v: &str) -> Result<Rat> {
    require_bipartite(s)?;
    let nbrs = metrics::neighborhood(s, v)?;
    let ids: Vec<&NodeId> = nbrs.keys().collect();
    let mut num = Rat::zero();
    let mut den = Rat::zero();
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            let both = nbrs[ids[i]].intersect(&nbrs[ids[j]]);
            if both.is_empty() {
                continue;
            }
            den += both.measure();
            let mut covered = IntervalSet::empty();
            for x in s.nodes().keys() {
                if x == v {
                    continue;
                }
                covered = covered
                    .union(&s.link_presence(ids[i], x).intersect(&s.link_presence(ids[j], x)));
            }
            num += both.intersect(&covered).measure();
        }
    }
    if den.is_zero() {
        return Err(Error::Undefined(format!(
            "node `{v}` never has two simultaneous neighbors"
        )));
    }
    Ok(num / den)
}

/// Five-node-path clustering centered at `v`: sextuplets `(t,a,b,v,c,d)`
/// closed when a sixth node is simultaneously adjacent to both ends.
pub fn cc_star(s: &StreamGraph, v: &str) -> Result<Rat> {
    require_bipartite(s)?;
    let nbrs = metrics::neighborhood(s, v)?;
    let node_ids: Vec<&NodeId> = s.nodes().keys().collect();
    let mut num = Rat::zero();
    let mut den = Rat::zero();
    for (b, t_vb) in &nbrs {
        for (c, t_vc) in &nbrs {
            if b == c {
                continue;
            }
            let center = t_vb.intersect(t_vc);
            if center.is_empty() {
                continue;
            }
            for &a in &node_ids {
                if *a == v || a == c {
                    continue;
                }
                let t_ab = s.link_presence(a, b);
                if t_ab.is_empty() {
                    continue;
                }
                for &d in &node_ids {
                    if *d == v || d == a || d == b {
                        continue;
                    }
                    let t_cd = s.link_presence(c, d);
                    if t_cd.is_empty() {
                        continue;
                    }
                    let open = center.intersect(&t_ab).intersect(&t_cd);
                    if open.is_empty() {
                        continue;
                    }
                    den += open.measure();
                    let mut closing = IntervalSet::empty();
                    for &x in &node_ids {
                        if *x == v || x == a || x == b || x == c || x == d {
                            continue;
                        }
                        closing =
                            closing.union(&s.link_presence(a, x).intersect(&s.link_presence(d, x)));
                    }
                    num += open.intersect(&closing).measure();
                }
            }
        }
    }
    if den.is_zero() {
        return Err(Error::Undefined(format!("no open five-node path through `{v}`")));
    }
    Ok(num / den)
}

/// Fraction of simultaneous three-edge paths `a–b–c–d` closed by the chord
/// `a–d` (`quint = false`), or of four-edge paths `a–b–c–d–e` closed by a
/// sixth node adjacent to both ends (`quint = true`).
pub fn bipartite_transitivity(s: &StreamGraph, quint: bool) -> Result<Rat> {
    require_bipartite(s)?;
    let node_ids: Vec<&NodeId> = s.nodes().keys().collect();
    let mut num = Rat::zero();
    let mut den = Rat::zero();
    for ((b, c), t_bc) in s.links() {
        if t_bc.is_empty() {
            continue;
        }
        // both orientations of the middle edge
        for (b, c) in [(b, c), (c, b)] {
            for &a in &node_ids {
                if a == c {
                    continue;
                }
                let t_ab = s.link_presence(a, b);
                if t_ab.is_empty() {
                    continue;
                }
                for &d in &node_ids {
                    if d == b || (quint && d == a) {
                        continue;
                    }
                    let t_cd = s.link_presence(c, d);
                    if t_cd.is_empty() {
                        continue;
                    }
                    let path = t_ab.intersect(t_bc).intersect(&t_cd);
                    if path.is_empty() {
                        continue;
                    }
                    if !quint {
                        den += path.measure();
                        num += path.intersect(&s.link_presence(a, d)).measure();
                        continue;
                    }
                    for &e in &node_ids {
                        if e == c || e == a {
                            continue;
                        }
                        let t_de = s.link_presence(d, e);
                        if t_de.is_empty() {
                            continue;
                        }
                        let open = path.intersect(&t_de);
                        if open.is_empty() {
                            continue;
                        }
                        den += open.measure();
                        let mut closing = IntervalSet::empty();
                        for &f in &node_ids {
                            if f == b || f == c || f == d {
                                continue;
                            }
                            closing = closing
                                .union(&s.link_presence(a, f).intersect(&s.link_presence(e, f)));
                        }
                        num += open.intersect(&closing).measure();
                    }
                }
            }
        }
    }
    if den.is_zero() {
        return Err(Error::Undefined("no open path exists".into()));
    }
    Ok(num / den)
}
