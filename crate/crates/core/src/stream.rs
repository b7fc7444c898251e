//! The stream graph data model: a time horizon, temporal node presence, and
//! temporal link presence, with optional weights and bipartite sides.

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::rational::Rat;
use crate::weight::StepWeight;
use num::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Undirected,
    Bipartite,
    Directed,
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Undirected => "undirected",
            Kind::Bipartite => "bipartite",
            Kind::Directed => "directed",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Top,
    Bottom,
}

impl Side {
    pub fn name(&self) -> &'static str {
        match self {
            Side::Top => "top",
            Side::Bottom => "bottom",
        }
    }
    pub fn opposite(&self) -> Side {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }
}

pub type NodeId = String;

/// Link key: for undirected/bipartite streams the pair is stored sorted; for
/// directed streams it is the ordered pair (from, to).
pub type LinkKey = (NodeId, NodeId);

/// Normalizes a link key for the given kind.
pub fn link_key(kind: Kind, u: &str, v: &str) -> LinkKey {
    match kind {
        Kind::Directed => (u.to_string(), v.to_string()),
        _ => {
            if u <= v {
                (u.to_string(), v.to_string())
            } else {
                (v.to_string(), u.to_string())
            }
        }
    }
}

/// Mutable accumulator for building a validated [`StreamGraph`].
#[derive(Debug, Clone)]
pub struct StreamBuilder {
    kind: Kind,
    horizon: (Rat, Rat),
    nodes: BTreeMap<NodeId, IntervalSet>,
    links: BTreeMap<LinkKey, IntervalSet>,
    link_weights: BTreeMap<LinkKey, StepWeight>,
    node_weights: BTreeMap<NodeId, StepWeight>,
    sides: BTreeMap<NodeId, Side>,
    weighted: bool,
}

impl StreamBuilder {
    pub fn new(kind: Kind, begin: Rat, end: Rat) -> Self {
        StreamBuilder {
            kind,
            horizon: (begin, end),
            nodes: BTreeMap::new(),
            links: BTreeMap::new(),
            link_weights: BTreeMap::new(),
            node_weights: BTreeMap::new(),
            sides: BTreeMap::new(),
            weighted: false,
        }
    }

    /// Declares a node (possibly with empty presence). Repeated declarations
    /// union their presence sets.
    pub fn node(&mut self, id: &str, presence: IntervalSet) -> &mut Self {
        let entry = self.nodes.entry(id.to_string()).or_insert_with(IntervalSet::empty);
        *entry = entry.union(&presence);
        self
    }

    pub fn side(&mut self, id: &str, side: Side) -> &mut Self {
        self.sides.insert(id.to_string(), side);
        self
    }

    pub fn link(&mut self, u: &str, v: &str, presence: IntervalSet) -> &mut Self {
        let key = link_key(self.kind, u, v);
        let entry = self.links.entry(key).or_insert_with(IntervalSet::empty);
        *entry = entry.union(&presence);
        self
    }

    /// Attaches weight pieces to a link; marks the stream as weighted.
    pub fn link_weight(&mut self, u: &str, v: &str, weight: StepWeight) -> &mut Self {
        self.weighted = true;
        let key = link_key(self.kind, u, v);
        self.link_weights.insert(key, weight);
        self
    }

    pub fn node_weight(&mut self, id: &str, weight: StepWeight) -> &mut Self {
        self.weighted = true;
        self.node_weights.insert(id.to_string(), weight);
        self
    }

    /// Validates every structural invariant and produces the immutable graph.
    pub fn build(self) -> Result<StreamGraph> {
        let (begin, end) = self.horizon.clone();
        if begin > end {
            return Err(Error::ReversedInterval {
                begin: crate::rational::format_rational(&begin),
                end: crate::rational::format_rational(&end),
            });
        }
        let horizon = IntervalSet::interval(begin, end)?;

        for (id, presence) in &self.nodes {
            if !presence.is_subset_of(&horizon) {
                return Err(Error::InvalidStream(format!(
                    "presence of node `{id}` leaves the horizon"
                )));
            }
        }

        match self.kind {
            Kind::Bipartite => {
                for id in self.nodes.keys() {
                    if !self.sides.contains_key(id) {
                        return Err(Error::InvalidStream(format!("node `{id}` has no side tag")));
                    }
                }
            }
            _ => {
                if !self.sides.is_empty() {
                    return Err(Error::InvalidStream(
                        "side tags are only allowed on bipartite streams".into(),
                    ));
                }
            }
        }

        for ((u, v), presence) in &self.links {
            let tu = self.nodes.get(u).ok_or_else(|| {
                Error::InvalidStream(format!("link endpoint `{u}` is not a declared node"))
            })?;
            let tv = self.nodes.get(v).ok_or_else(|| {
                Error::InvalidStream(format!("link endpoint `{v}` is not a declared node"))
            })?;
            if u == v && self.kind != Kind::Directed {
                return Err(Error::InvalidStream(format!(
                    "self-link on `{u}` is only allowed in directed streams"
                )));
            }
            if self.kind == Kind::Bipartite && self.sides.get(u) == self.sides.get(v) {
                return Err(Error::InvalidStream(format!(
                    "bipartite link `{u}`-`{v}` joins two {} nodes",
                    self.sides.get(u).map(|s| s.name()).unwrap_or("?")
                )));
            }
            if !presence.is_subset_of(&tu.intersect(tv)) {
                return Err(Error::InvalidStream(format!(
                    "link `{u}`-`{v}` is present outside the co-presence of its endpoints"
                )));
            }
        }

        let (link_weights, node_weights) = if self.weighted {
            // complete the weight maps: carriers without explicit weights
            // default to the constant 1
            let mut lw = self.link_weights;
            for (key, presence) in &self.links {
                lw.entry(key.clone())
                    .or_insert_with(|| StepWeight::constant(Rat::one(), presence));
            }
            for (key, w) in &lw {
                let presence = self.links.get(key).ok_or_else(|| {
                    Error::InvalidStream(format!(
                        "weight attached to undeclared link `{}`-`{}`",
                        key.0, key.1
                    ))
                })?;
                if &w.support() != presence {
                    return Err(Error::InvalidStream(format!(
                        "weight support of link `{}`-`{}` differs from its presence set",
                        key.0, key.1
                    )));
                }
            }
            let nw = if self.node_weights.is_empty() {
                None
            } else {
                let mut nw = self.node_weights;
                for (id, presence) in &self.nodes {
                    nw.entry(id.clone())
                        .or_insert_with(|| StepWeight::constant(Rat::one(), presence));
                }
                for (id, w) in &nw {
                    let presence = self.nodes.get(id).ok_or_else(|| {
                        Error::InvalidStream(format!("weight attached to undeclared node `{id}`"))
                    })?;
                    if &w.support() != presence {
                        return Err(Error::InvalidStream(format!(
                            "weight support of node `{id}` differs from its presence set"
                        )));
                    }
                }
                Some(nw)
            };
            (Some(lw), nw)
        } else {
            (None, None)
        };

        Ok(StreamGraph {
            kind: self.kind,
            horizon_begin: self.horizon.0,
            horizon_end: self.horizon.1,
            horizon,
            nodes: self.nodes,
            links: self.links,
            link_weights,
            node_weights,
            sides: if self.kind == Kind::Bipartite { Some(self.sides) } else { None },
        })
    }
}

/// An immutable, validated stream graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamGraph {
    kind: Kind,
    horizon_begin: Rat,
    horizon_end: Rat,
    horizon: IntervalSet,
    nodes: BTreeMap<NodeId, IntervalSet>,
    links: BTreeMap<LinkKey, IntervalSet>,
    link_weights: Option<BTreeMap<LinkKey, StepWeight>>,
    node_weights: Option<BTreeMap<NodeId, StepWeight>>,
    sides: Option<BTreeMap<NodeId, Side>>,
}

impl StreamGraph {
    pub fn builder(kind: Kind, begin: Rat, end: Rat) -> StreamBuilder {
        StreamBuilder::new(kind, begin, end)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn horizon(&self) -> (&Rat, &Rat) {
        (&self.horizon_begin, &self.horizon_end)
    }

    /// The horizon as a one-interval set.
    pub fn horizon_set(&self) -> &IntervalSet {
        &self.horizon
    }

    /// `|T|`.
    pub fn duration(&self) -> Rat {
        &self.horizon_end - &self.horizon_begin
    }

    pub fn require_nonempty_horizon(&self) -> Result<Rat> {
        let d = self.duration();
        if d.is_zero() {
            Err(Error::EmptyHorizon)
        } else {
            Ok(d)
        }
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

    pub fn nodes(&self) -> &BTreeMap<NodeId, IntervalSet> {
        &self.nodes
    }

    pub fn links(&self) -> &BTreeMap<LinkKey, IntervalSet> {
        &self.links
    }

    pub fn node_presence(&self, id: &str) -> Result<&IntervalSet> {
        self.nodes.get(id).ok_or_else(|| Error::UnknownNode(id.to_string()))
    }

    /// Presence set of a link; the empty set for undeclared keys.
    pub fn link_presence(&self, u: &str, v: &str) -> IntervalSet {
        self.links
            .get(&link_key(self.kind, u, v))
            .cloned()
            .unwrap_or_else(IntervalSet::empty)
    }

    pub fn is_weighted(&self) -> bool {
        self.link_weights.is_some() || self.node_weights.is_some()
    }

    pub fn link_weights(&self) -> Option<&BTreeMap<LinkKey, StepWeight>> {
        self.link_weights.as_ref()
    }

    pub fn node_weights(&self) -> Option<&BTreeMap<NodeId, StepWeight>> {
        self.node_weights.as_ref()
    }

    /// Weight function of a link; errors when links carry no weights.
    pub fn link_weight(&self, u: &str, v: &str) -> Result<StepWeight> {
        let weights = self.link_weights.as_ref().ok_or(Error::Unweighted)?;
        Ok(weights
            .get(&link_key(self.kind, u, v))
            .cloned()
            .unwrap_or_else(|| StepWeight::constant(Rat::one(), &IntervalSet::empty())))
    }

    pub fn sides(&self) -> Option<&BTreeMap<NodeId, Side>> {
        self.sides.as_ref()
    }

    pub fn side_of(&self, id: &str) -> Result<Side> {
        self.require_kind(Kind::Bipartite)?;
        self.sides
            .as_ref()
            .and_then(|m| m.get(id).copied())
            .ok_or_else(|| Error::UnknownNode(id.to_string()))
    }

    /// `|W| = Σ_v |T_v|` (un-normalized).
    pub fn node_presence_total(&self) -> Rat {
        self.nodes.values().fold(Rat::zero(), |acc, p| acc + p.measure())
    }

    /// True iff the stream has no dynamics: every node present over all of T
    /// and every link presence set equal to T or empty.
    pub fn is_graph_equivalent(&self) -> bool {
        self.nodes.values().all(|p| p == &self.horizon)
            && self
                .links
                .values()
                .all(|p| p.is_empty() || p == &self.horizon)
    }

    /// Same stream with all weights dropped.
    pub fn strip_weights(&self) -> StreamGraph {
        let mut s = self.clone();
        s.link_weights = None;
        s.node_weights = None;
        s
    }

    /// Same stream with constant-1 link weights attached (no node weights).
    pub fn with_unit_weights(&self) -> StreamGraph {
        let mut s = self.strip_weights();
        s.link_weights = Some(
            self.links
                .iter()
                .map(|(k, p)| (k.clone(), StepWeight::constant(Rat::one(), p)))
                .collect(),
        );
        s
    }

    /// Substream induced by a cluster map `C ⊆ W`: node presences become the
    /// cluster sets and link presences are clipped to the endpoints' cluster
    /// co-presence. Errors when `C` is not a subset of `W`.
    pub fn induce(&self, clusters: &BTreeMap<NodeId, IntervalSet>) -> Result<StreamGraph> {
        for (id, c) in clusters {
            let presence = self.node_presence(id)?;
            if !c.is_subset_of(presence) {
                return Err(Error::InvalidArgument(format!(
                    "cluster of node `{id}` is not a subset of its presence"
                )));
            }
        }
        let mut b = StreamBuilder::new(self.kind, self.horizon_begin.clone(), self.horizon_end.clone());
        for (id, c) in clusters {
            b.node(id, c.clone());
            if let Some(sides) = &self.sides {
                b.side(id, sides[id]);
            }
        }
        for ((u, v), presence) in &self.links {
            let (Some(cu), Some(cv)) = (clusters.get(u), clusters.get(v)) else {
                continue;
            };
            b.link(u, v, presence.intersect(&cu.intersect(cv)));
        }
        b.build()
    }
}
