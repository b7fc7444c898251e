//! Classical graph counterparts: snapshots `G_t`, induced graphs `G(S)`, and
//! the graph-side metric catalog.
//!
//! Graph metrics here are computed by direct counting over node and edge
//! sets, with no interval algebra, so that stream/graph consistency tests
//! compare two genuinely independent code paths.

use crate::error::{Error, Result};
use crate::radical::RadicalSum;
use crate::rational::{rint, Rat};
use crate::stream::{link_key, Kind, LinkKey, NodeId, Side, StreamGraph};
use crate::value::MetricValue;
use crate::weighted::{closed_value, open_value, DensityVariant, ValueFn};
use num::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// A classical graph, optionally weighted / bipartite / directed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticGraph {
    pub kind: Kind,
    pub nodes: BTreeSet<NodeId>,
    pub edges: BTreeSet<LinkKey>,
    pub edge_weights: Option<BTreeMap<LinkKey, Rat>>,
    /// (min, max) weight annotations, carried by induced graphs
    pub edge_weight_bounds: Option<BTreeMap<LinkKey, (Rat, Rat)>>,
    pub node_weights: Option<BTreeMap<NodeId, Rat>>,
    pub sides: Option<BTreeMap<NodeId, Side>>,
}

impl StaticGraph {
    pub fn new(kind: Kind) -> Self {
        StaticGraph {
            kind,
            nodes: BTreeSet::new(),
            edges: BTreeSet::new(),
            edge_weights: None,
            edge_weight_bounds: None,
            node_weights: None,
            sides: None,
        }
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        self.edges.contains(&link_key(self.kind, u, v))
    }

    pub fn edge_weight(&self, u: &str, v: &str) -> Rat {
        self.edge_weights
            .as_ref()
            .and_then(|m| m.get(&link_key(self.kind, u, v)))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn check_node(&self, v: &str) -> Result<()> {
        if self.nodes.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownNode(v.to_string()))
        }
    }

    /// Neighbors in the undirected sense (undirected/bipartite kinds).
    pub fn neighbors(&self, v: &str) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        for (a, b) in &self.edges {
            if a == v {
                out.insert(b.as_str());
            } else if b == v {
                out.insert(a.as_str());
            }
        }
        out
    }

    pub fn out_neighbors(&self, v: &str) -> BTreeSet<&str> {
        self.edges
            .iter()
            .filter(|(a, _)| a == v)
            .map(|(_, b)| b.as_str())
            .collect()
    }

    pub fn in_neighbors(&self, v: &str) -> BTreeSet<&str> {
        self.edges
            .iter()
            .filter(|(_, b)| b == v)
            .map(|(a, _)| a.as_str())
            .collect()
    }

    // ---- basic undirected metrics -------------------------------------

    pub fn node_count(&self) -> Rat {
        rint(self.nodes.len() as i64)
    }

    pub fn edge_count(&self) -> Rat {
        rint(self.edges.len() as i64)
    }

    pub fn degree(&self, v: &str) -> Result<Rat> {
        self.check_node(v)?;
        Ok(rint(self.neighbors(v).len() as i64))
    }

    pub fn average_degree(&self) -> Result<Rat> {
        if self.nodes.is_empty() {
            return Err(Error::Undefined("average degree of an empty graph".into()));
        }
        let mut total = Rat::zero();
        for v in &self.nodes {
            total += self.degree(v)?;
        }
        Ok(total / rint(self.nodes.len() as i64))
    }

    /// `m / |V⊗V|`.
    pub fn density(&self) -> Result<Rat> {
        let n = self.nodes.len() as i64;
        let pairs = n * (n - 1) / 2;
        if pairs == 0 {
            return Err(Error::Undefined("density needs at least two nodes".into()));
        }
        Ok(self.edge_count() / rint(pairs))
    }

    /// (closed, open) neighbor-pair counts around `v`.
    pub fn triplet_counts(&self, v: &str) -> Result<(i64, i64)> {
        self.check_node(v)?;
        let nbrs: Vec<&str> = self.neighbors(v).into_iter().collect();
        let mut open = 0i64;
        let mut closed = 0i64;
        for i in 0..nbrs.len() {
            for j in (i + 1)..nbrs.len() {
                open += 1;
                if self.has_edge(nbrs[i], nbrs[j]) {
                    closed += 1;
                }
            }
        }
        Ok((closed, open))
    }

    /// Density of the neighborhood of `v`.
    pub fn clustering(&self, v: &str) -> Result<Rat> {
        let (closed, open) = self.triplet_counts(v)?;
        if open == 0 {
            return Err(Error::Undefined(format!("node `{v}` has fewer than two neighbors")));
        }
        Ok(rint(closed) / rint(open))
    }

    pub fn transitivity(&self) -> Result<Rat> {
        let mut open = 0i64;
        let mut closed = 0i64;
        for v in &self.nodes {
            let (c, o) = self.triplet_counts(v)?;
            closed += c;
            open += o;
        }
        if open == 0 {
            return Err(Error::Undefined("no open triplet exists".into()));
        }
        Ok(rint(closed) / rint(open))
    }

    // ---- weighted metrics ---------------------------------------------

    fn require_weights(&self) -> Result<&BTreeMap<LinkKey, Rat>> {
        self.edge_weights.as_ref().ok_or(Error::Unweighted)
    }

    pub fn strength(&self, v: &str) -> Result<Rat> {
        self.check_node(v)?;
        self.require_weights()?;
        let mut s = Rat::zero();
        for u in self.neighbors(v) {
            s += self.edge_weight(v, u);
        }
        Ok(s)
    }

    pub fn weighted_density(&self, variant: DensityVariant) -> Result<Rat> {
        let weights = self.require_weights()?;
        let total: Rat = weights.values().fold(Rat::zero(), |a, w| a + w);
        let wmax = weights.values().max().cloned().unwrap_or_else(Rat::zero);
        let n = self.nodes.len() as i64;
        let pairs = rint(n * (n - 1) / 2);
        let den = match variant {
            DensityVariant::PresentMax => wmax * self.edge_count(),
            DensityVariant::AllMax => wmax * pairs,
            DensityVariant::UnitInterval => {
                if weights.values().any(|w| w < &Rat::zero() || w > &Rat::one()) {
                    return Err(Error::InvalidArgument(
                        "unit-interval density requires weights in [0,1]".into(),
                    ));
                }
                pairs
            }
        };
        if den.is_zero() {
            return Err(Error::Undefined("weighted density denominator is zero".into()));
        }
        Ok(total / den)
    }

    /// Barrat-style weighted clustering coefficient.
    pub fn barrat_clustering(&self, v: &str) -> Result<Rat> {
        self.check_node(v)?;
        self.require_weights()?;
        let d = self.degree(v)?;
        let s = self.strength(v)?;
        if d <= Rat::one() || s.is_zero() {
            return Err(Error::Undefined(format!("Barrat clustering of `{v}` needs degree > 1")));
        }
        let nbrs: Vec<&str> = self.neighbors(v).into_iter().collect();
        let mut sum = Rat::zero();
        for i in 0..nbrs.len() {
            for j in (i + 1)..nbrs.len() {
                if self.has_edge(nbrs[i], nbrs[j]) {
                    sum += (self.edge_weight(v, nbrs[i]) + self.edge_weight(v, nbrs[j])) / rint(2);
                }
            }
        }
        Ok(sum / (s * (d - Rat::one())))
    }

    /// Triplet-value weighted clustering (arith/geo/min/max/product).
    pub fn general_clustering(&self, v: &str, value_fn: ValueFn) -> Result<MetricValue> {
        self.check_node(v)?;
        self.require_weights()?;
        let nbrs: Vec<&str> = self.neighbors(v).into_iter().collect();
        let mut num = RadicalSum::zero();
        let mut den = RadicalSum::zero();
        let mut any_open = false;
        for i in 0..nbrs.len() {
            for j in (i + 1)..nbrs.len() {
                any_open = true;
                let wi = self.edge_weight(v, nbrs[i]);
                let wj = self.edge_weight(v, nbrs[j]);
                den = den.add(&open_value(value_fn, &wi, &wj));
                if self.has_edge(nbrs[i], nbrs[j]) {
                    let wij = self.edge_weight(nbrs[i], nbrs[j]);
                    num = num.add(&closed_value(value_fn, &wi, &wj, &wij));
                }
            }
        }
        if !any_open || den.is_zero() {
            return Err(Error::Undefined(format!("no open triplet centered at `{v}`")));
        }
        Ok(MetricValue::from_ratio(num, den))
    }

    pub fn weighted_transitivity(&self, value_fn: ValueFn) -> Result<MetricValue> {
        self.require_weights()?;
        let mut num = RadicalSum::zero();
        let mut den = RadicalSum::zero();
        let mut any_open = false;
        for v in &self.nodes {
            let nbrs: Vec<&str> = self.neighbors(v).into_iter().collect();
            for i in 0..nbrs.len() {
                for j in (i + 1)..nbrs.len() {
                    any_open = true;
                    let wi = self.edge_weight(v, nbrs[i]);
                    let wj = self.edge_weight(v, nbrs[j]);
                    den = den.add(&open_value(value_fn, &wi, &wj));
                    if self.has_edge(nbrs[i], nbrs[j]) {
                        let wij = self.edge_weight(nbrs[i], nbrs[j]);
                        num = num.add(&closed_value(value_fn, &wi, &wj, &wij));
                    }
                }
            }
        }
        if !any_open || den.is_zero() {
            return Err(Error::Undefined("no open triplet exists".into()));
        }
        Ok(MetricValue::from_ratio(num, den))
    }

    // ---- bipartite metrics --------------------------------------------

    fn require_bipartite(&self) -> Result<&BTreeMap<NodeId, Side>> {
        self.require_kind(Kind::Bipartite)?;
        self.sides
            .as_ref()
            .ok_or_else(|| Error::InvalidStream("bipartite graph without side tags".into()))
    }

    pub fn require_kind(&self, expected: Kind) -> Result<()> {
        if self.kind != expected {
            return Err(Error::KindMismatch {
                expected: expected.name(),
                actual: self.kind.name(),
            });
        }
        Ok(())
    }

    pub fn side_nodes(&self, side: Side) -> Result<Vec<&str>> {
        let sides = self.require_bipartite()?;
        Ok(self
            .nodes
            .iter()
            .filter(|v| sides.get(*v) == Some(&side))
            .map(|v| v.as_str())
            .collect())
    }

    pub fn side_count(&self, side: Side) -> Result<Rat> {
        Ok(rint(self.side_nodes(side)?.len() as i64))
    }

    pub fn side_average_degree(&self, side: Side) -> Result<Rat> {
        let members = self.side_nodes(side)?;
        if members.is_empty() {
            return Err(Error::Undefined(format!("no {} nodes", side.name())));
        }
        let mut total = Rat::zero();
        for v in &members {
            total += self.degree(v)?;
        }
        Ok(total / rint(members.len() as i64))
    }

    /// `m / (n_top · n_bottom)`.
    pub fn bipartite_density(&self) -> Result<Rat> {
        let den = self.side_count(Side::Top)? * self.side_count(Side::Bottom)?;
        if den.is_zero() {
            return Err(Error::Undefined("one side of the bipartite graph is empty".into()));
        }
        Ok(self.edge_count() / den)
    }

    pub fn jaccard(&self, u: &str, v: &str) -> Result<Rat> {
        let sides = self.require_bipartite()?;
        self.check_node(u)?;
        self.check_node(v)?;
        if sides.get(u) != sides.get(v) {
            return Err(Error::InvalidArgument(
                "Jaccard coefficient needs two same-side nodes".into(),
            ));
        }
        let nu = self.neighbors(u);
        let nv = self.neighbors(v);
        let union = nu.union(&nv).count() as i64;
        if union == 0 {
            return Err(Error::Undefined(format!("`{u}` and `{v}` have no neighbors")));
        }
        let inter = nu.intersection(&nv).count() as i64;
        Ok(rint(inter) / rint(union))
    }

    /// Averaged Jaccard coefficient over co-neighbors (distance-2 nodes).
    pub fn jaccard_clustering(&self, v: &str) -> Result<Rat> {
        self.require_bipartite()?;
        self.check_node(v)?;
        let nv = self.neighbors(v);
        let mut co: BTreeSet<&str> = BTreeSet::new();
        for u in &nv {
            for x in self.neighbors(u) {
                if x != v {
                    co.insert(x);
                }
            }
        }
        if co.is_empty() {
            return Err(Error::Undefined(format!("`{v}` has no neighbors of neighbors")));
        }
        let mut total = Rat::zero();
        for u in &co {
            total += self.jaccard(u, v)?;
        }
        Ok(total / rint(co.len() as i64))
    }

    /// (closed, open) ordered neighbor-pair counts for redundancy.
    pub fn redundancy_counts(&self, v: &str) -> Result<(i64, i64)> {
        self.require_bipartite()?;
        self.check_node(v)?;
        let nbrs: Vec<&str> = self.neighbors(v).into_iter().collect();
        let mut open = 0i64;
        let mut closed = 0i64;
        for u in &nbrs {
            for w in &nbrs {
                if u == w {
                    continue;
                }
                open += 1;
                let covered = self
                    .neighbors(u)
                    .intersection(&self.neighbors(w))
                    .any(|x| *x != v);
                if covered {
                    closed += 1;
                }
            }
        }
        Ok((closed, open))
    }

    pub fn redundancy(&self, v: &str) -> Result<Rat> {
        let (closed, open) = self.redundancy_counts(v)?;
        if open == 0 {
            return Err(Error::Undefined(format!("node `{v}` has fewer than two neighbors")));
        }
        Ok(rint(closed) / rint(open))
    }

    /// (closed, open) five-node-path counts centered at `v`: quintuplets
    /// (a,b,v,c,d), closed by a sixth node adjacent to both path ends.
    pub fn cc_star_counts(&self, v: &str) -> Result<(i64, i64)> {
        self.require_bipartite()?;
        self.check_node(v)?;
        let nbrs: Vec<&str> = self.neighbors(v).into_iter().collect();
        let mut open = 0i64;
        let mut closed = 0i64;
        for &b in &nbrs {
            for &c in &nbrs {
                if b == c {
                    continue;
                }
                for a in self.neighbors(b) {
                    if a == v || a == c {
                        continue;
                    }
                    for d in self.neighbors(c) {
                        if d == v || d == a || d == b {
                            continue;
                        }
                        open += 1;
                        let ok = self
                            .neighbors(a)
                            .intersection(&self.neighbors(d))
                            .any(|&x| x != b && x != c && x != v);
                        if ok {
                            closed += 1;
                        }
                    }
                }
            }
        }
        Ok((closed, open))
    }

    pub fn cc_star(&self, v: &str) -> Result<Rat> {
        let (closed, open) = self.cc_star_counts(v)?;
        if open == 0 {
            return Err(Error::Undefined(format!("no open quintuplet centered at `{v}`")));
        }
        Ok(rint(closed) / rint(open))
    }

    /// (closed, open) path counts for bipartite transitivity; `quint = true`
    /// uses four-edge paths closed by a common neighbor of both ends.
    pub fn bipartite_path_counts(&self, quint: bool) -> Result<(i64, i64)> {
        self.require_bipartite()?;
        let mut open = 0i64;
        let mut closed = 0i64;
        if !quint {
            for (b, c) in self.edge_iter_both() {
                for a in self.neighbors(&b) {
                    if a == c {
                        continue;
                    }
                    for d in self.neighbors(&c) {
                        if d == b {
                            continue;
                        }
                        open += 1;
                        if self.has_edge(a, d) {
                            closed += 1;
                        }
                    }
                }
            }
        } else {
            for (b, c) in self.edge_iter_both() {
                for a in self.neighbors(&b) {
                    if a == c {
                        continue;
                    }
                    for d in self.neighbors(&c) {
                        if d == b || d == a {
                            continue;
                        }
                        for e in self.neighbors(d) {
                            if e == c || e == a {
                                continue;
                            }
                            open += 1;
                            let ok = self
                                .neighbors(a)
                                .intersection(&self.neighbors(e))
                                .any(|&f| f != b && f != c && f != d);
                            if ok {
                                closed += 1;
                            }
                        }
                    }
                }
            }
        }
        Ok((closed, open))
    }

    pub fn bipartite_transitivity(&self, quint: bool) -> Result<Rat> {
        let (closed, open) = self.bipartite_path_counts(quint)?;
        if open == 0 {
            return Err(Error::Undefined("no open path exists".into()));
        }
        Ok(rint(closed) / rint(open))
    }

    /// Every edge in both orientations (for path enumeration).
    fn edge_iter_both(&self) -> Vec<(NodeId, NodeId)> {
        let mut out = Vec::with_capacity(self.edges.len() * 2);
        for (a, b) in &self.edges {
            out.push((a.clone(), b.clone()));
            if a != b {
                out.push((b.clone(), a.clone()));
            }
        }
        out
    }

    /// One-mode projection of a bipartite graph onto `side`.
    pub fn project(&self, side: Side, weighted: bool) -> Result<StaticGraph> {
        self.require_bipartite()?;
        let members: Vec<&str> = self.side_nodes(side)?;
        let mut g = StaticGraph::new(Kind::Undirected);
        for v in &members {
            g.nodes.insert(v.to_string());
        }
        let mut weights = BTreeMap::new();
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                let common = self
                    .neighbors(members[i])
                    .intersection(&self.neighbors(members[j]))
                    .count() as i64;
                if common > 0 {
                    let key = link_key(Kind::Undirected, members[i], members[j]);
                    g.edges.insert(key.clone());
                    weights.insert(key, rint(common));
                }
            }
        }
        if weighted {
            g.edge_weights = Some(weights);
        }
        Ok(g)
    }

    // ---- directed metrics ---------------------------------------------

    pub fn out_degree(&self, v: &str) -> Result<Rat> {
        self.require_kind(Kind::Directed)?;
        self.check_node(v)?;
        Ok(rint(self.edges.iter().filter(|(a, _)| a == v).count() as i64))
    }

    pub fn in_degree(&self, v: &str) -> Result<Rat> {
        self.require_kind(Kind::Directed)?;
        self.check_node(v)?;
        Ok(rint(self.edges.iter().filter(|(_, b)| b == v).count() as i64))
    }

    /// `m / n²` (loops included in the possible-link count).
    pub fn directed_density(&self) -> Result<Rat> {
        self.require_kind(Kind::Directed)?;
        let n = self.nodes.len() as i64;
        if n == 0 {
            return Err(Error::Undefined("directed density of an empty graph".into()));
        }
        Ok(self.edge_count() / rint(n * n))
    }

    pub fn symmetric_fraction(&self) -> Result<Rat> {
        self.require_kind(Kind::Directed)?;
        if self.edges.is_empty() {
            return Err(Error::Undefined("no arcs".into()));
        }
        let sym = self
            .edges
            .iter()
            .filter(|(a, b)| self.edges.contains(&(b.clone(), a.clone())))
            .count() as i64;
        Ok(rint(sym) / self.edge_count())
    }

    pub fn loop_fraction(&self) -> Result<Rat> {
        self.require_kind(Kind::Directed)?;
        if self.nodes.is_empty() {
            return Err(Error::Undefined("loop fraction of an empty graph".into()));
        }
        let loops = self.edges.iter().filter(|(a, b)| a == b).count() as i64;
        Ok(rint(loops) / self.node_count())
    }

    /// (closed, open) two-path counts through `v` (cyclic/transitive only).
    pub fn directed_path_counts(&self, v: &str, variant: DirectedVariant) -> Result<(i64, i64)> {
        self.require_kind(Kind::Directed)?;
        self.check_node(v)?;
        let ins = self.in_neighbors(v);
        let outs = self.out_neighbors(v);
        let mut open = 0i64;
        let mut closed = 0i64;
        for u in &ins {
            for w in &outs {
                if u == w || *u == v || *w == v {
                    continue;
                }
                open += 1;
                let ok = match variant {
                    DirectedVariant::Cyclic => self.has_edge(w, u),
                    DirectedVariant::Transitive => self.has_edge(u, w),
                    _ => {
                        return Err(Error::InvalidArgument(
                            "path counts support cyclic/transitive variants only".into(),
                        ))
                    }
                };
                if ok {
                    closed += 1;
                }
            }
        }
        Ok((closed, open))
    }

    /// Directed clustering: `cyclic` closes u→v→w with w→u, `transitive`
    /// with u→w; `in`/`out` are the directed density of the in-/out-
    /// neighborhood subgraph.
    pub fn directed_clustering(&self, v: &str, variant: DirectedVariant) -> Result<Rat> {
        self.require_kind(Kind::Directed)?;
        self.check_node(v)?;
        match variant {
            DirectedVariant::Cyclic | DirectedVariant::Transitive => {
                let (closed, open) = self.directed_path_counts(v, variant)?;
                if open == 0 {
                    return Err(Error::Undefined(format!("no open path through `{v}`")));
                }
                Ok(rint(closed) / rint(open))
            }
            DirectedVariant::In | DirectedVariant::Out => {
                let members = if variant == DirectedVariant::In {
                    self.in_neighbors(v)
                } else {
                    self.out_neighbors(v)
                };
                let n = members.len() as i64;
                if n == 0 {
                    return Err(Error::Undefined(format!("`{v}` has an empty neighborhood")));
                }
                let arcs = self
                    .edges
                    .iter()
                    .filter(|(a, b)| members.contains(a.as_str()) && members.contains(b.as_str()))
                    .count() as i64;
                Ok(rint(arcs) / rint(n * n))
            }
        }
    }

    pub fn directed_transitivity(&self, variant: DirectedVariant) -> Result<Rat> {
        self.require_kind(Kind::Directed)?;
        let mut open = 0i64;
        let mut closed = 0i64;
        for v in &self.nodes {
            let (c, o) = self.directed_path_counts(v, variant)?;
            closed += c;
            open += o;
        }
        if open == 0 {
            return Err(Error::Undefined("no open directed path exists".into()));
        }
        Ok(rint(closed) / rint(open))
    }

    /// Forgets arc directions; loops are dropped.
    pub fn undirect(&self) -> Result<StaticGraph> {
        self.require_kind(Kind::Directed)?;
        let mut g = StaticGraph::new(Kind::Undirected);
        g.nodes = self.nodes.clone();
        for (a, b) in &self.edges {
            if a != b {
                g.edges.insert(link_key(Kind::Undirected, a, b));
            }
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirectedVariant {
    Cyclic,
    Transitive,
    In,
    Out,
}

/// `G_t`: nodes and links present at instant `t`, with weights evaluated at
/// `t` when the stream is weighted.
pub fn snapshot(stream: &StreamGraph, t: &Rat) -> Result<StaticGraph> {
    if !stream.horizon_set().contains(t) {
        return Err(Error::InvalidArgument(format!(
            "t={} is outside the stream horizon",
            crate::rational::format_rational(t)
        )));
    }
    let mut g = StaticGraph::new(stream.kind());
    for (id, presence) in stream.nodes() {
        if presence.contains(t) {
            g.nodes.insert(id.clone());
        }
    }
    for (key, presence) in stream.links() {
        if presence.contains(t) {
            g.edges.insert(key.clone());
        }
    }
    if let Some(weights) = stream.link_weights() {
        let mut ew = BTreeMap::new();
        for key in &g.edges {
            if let Some(w) = weights.get(key) {
                ew.insert(key.clone(), w.value_at(t));
            }
        }
        g.edge_weights = Some(ew);
    }
    if let Some(weights) = stream.node_weights() {
        let mut nw = BTreeMap::new();
        for id in &g.nodes {
            if let Some(w) = weights.get(id) {
                nw.insert(id.clone(), w.value_at(t));
            }
        }
        g.node_weights = Some(nw);
    }
    if let Some(sides) = stream.sides() {
        g.sides = Some(
            sides
                .iter()
                .filter(|(id, _)| g.nodes.contains(*id))
                .map(|(id, s)| (id.clone(), *s))
                .collect(),
        );
    }
    Ok(g)
}

/// `G(S)`: nodes and links that exist at some time. For weighted streams the
/// induced weights are the time-averaged weights (over `|T|`), with min/max
/// annotations.
pub fn induced_graph(stream: &StreamGraph) -> Result<StaticGraph> {
    let mut g = StaticGraph::new(stream.kind());
    for (id, presence) in stream.nodes() {
        if !presence.is_empty() {
            g.nodes.insert(id.clone());
        }
    }
    for (key, presence) in stream.links() {
        if !presence.is_empty() {
            g.edges.insert(key.clone());
        }
    }
    if stream.is_weighted() {
        let t = stream.require_nonempty_horizon()?;
        if let Some(weights) = stream.link_weights() {
            let mut ew = BTreeMap::new();
            let mut bounds = BTreeMap::new();
            for key in &g.edges {
                if let Some(w) = weights.get(key) {
                    ew.insert(key.clone(), w.integrate(&w.support()) / &t);
                    if let (Some(lo), Some(hi)) = (w.min_value(), w.max_value()) {
                        bounds.insert(key.clone(), (lo, hi));
                    }
                }
            }
            g.edge_weights = Some(ew);
            g.edge_weight_bounds = Some(bounds);
        }
        if let Some(weights) = stream.node_weights() {
            let mut nw = BTreeMap::new();
            for id in &g.nodes {
                if let Some(w) = weights.get(id) {
                    nw.insert(id.clone(), w.integrate(&w.support()) / &t);
                }
            }
            g.node_weights = Some(nw);
        }
    }
    if let Some(sides) = stream.sides() {
        g.sides = Some(
            sides
                .iter()
                .filter(|(id, _)| g.nodes.contains(*id))
                .map(|(id, s)| (id.clone(), *s))
                .collect(),
        );
    }
    Ok(g)
}
