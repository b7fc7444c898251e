//! The undirected, unweighted stream metric catalog: counts, degrees,
//! density, cliques, clustering, and transitivity.

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::rational::Rat;
use crate::stream::{Kind, NodeId, StreamGraph};
use num::Zero;
use std::collections::BTreeMap;

fn require_undirected_semantics(s: &StreamGraph) -> Result<()> {
    if s.kind() == Kind::Directed {
        return Err(Error::KindMismatch {
            expected: "undirected or bipartite",
            actual: "directed",
        });
    }
    Ok(())
}

/// `n = Σ_v |T_v| / |T|`.
pub fn node_count(s: &StreamGraph) -> Result<Rat> {
    let t = s.require_nonempty_horizon()?;
    Ok(s.node_presence_total() / t)
}

/// `m = Σ_uv |T_uv| / |T|`.
pub fn link_count(s: &StreamGraph) -> Result<Rat> {
    let t = s.require_nonempty_horizon()?;
    let total = s.links().values().fold(Rat::zero(), |acc, p| acc + p.measure());
    Ok(total / t)
}

/// `N(v)`: for each node `u` ever linked to `v`, the presence set of the
/// link. Undirected semantics; directed streams use their own neighborhoods.
pub fn neighborhood(s: &StreamGraph, v: &str) -> Result<BTreeMap<NodeId, IntervalSet>> {
    require_undirected_semantics(s)?;
    s.node_presence(v)?;
    let mut out = BTreeMap::new();
    for ((a, b), presence) in s.links() {
        if presence.is_empty() {
            continue;
        }
        if a == v {
            out.insert(b.clone(), presence.clone());
        } else if b == v {
            out.insert(a.clone(), presence.clone());
        }
    }
    Ok(out)
}

/// `d(v) = Σ_u |T_uv| / |T|`.
pub fn degree(s: &StreamGraph, v: &str) -> Result<Rat> {
    let t = s.require_nonempty_horizon()?;
    let total = neighborhood(s, v)?
        .values()
        .fold(Rat::zero(), |acc, p| acc + p.measure());
    Ok(total / t)
}

/// Average degree weighted by presence time: `Σ_v (|T_v|/|W|)·d(v)`.
pub fn average_degree(s: &StreamGraph) -> Result<Rat> {
    require_undirected_semantics(s)?;
    s.require_nonempty_horizon()?;
    let w = s.node_presence_total();
    if w.is_zero() {
        return Err(Error::Undefined("average degree of an empty node set".into()));
    }
    let mut total = Rat::zero();
    for (id, presence) in s.nodes() {
        total += presence.measure() * degree(s, id)?;
    }
    Ok(total / w)
}

/// `δ(S) = Σ|T_uv| / Σ_{uv∈V⊗V}|T_u∩T_v|`.
pub fn density(s: &StreamGraph) -> Result<Rat> {
    require_undirected_semantics(s)?;
    let ids: Vec<&NodeId> = s.nodes().keys().collect();
    let mut den = Rat::zero();
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            den += s.nodes()[ids[i]].intersect(&s.nodes()[ids[j]]).measure();
        }
    }
    if den.is_zero() {
        return Err(Error::Undefined("no two nodes are ever co-present".into()));
    }
    let num = s.links().values().fold(Rat::zero(), |acc, p| acc + p.measure());
    Ok(num / den)
}

/// True iff `C ⊆ W` induces a substream of density 1: every pair of cluster
/// nodes is linked whenever both are covered by `C`.
pub fn is_clique(s: &StreamGraph, clusters: &BTreeMap<NodeId, IntervalSet>) -> Result<bool> {
    require_undirected_semantics(s)?;
    for (id, c) in clusters {
        let presence = s.node_presence(id)?;
        if !c.is_subset_of(presence) {
            return Err(Error::InvalidArgument(format!(
                "cluster of node `{id}` is not a subset of its presence"
            )));
        }
    }
    let ids: Vec<&NodeId> = clusters.keys().collect();
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            let overlap = clusters[ids[i]].intersect(&clusters[ids[j]]);
            if !overlap.is_subset_of(&s.link_presence(ids[i], ids[j])) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `cc(v)`: the density of the neighborhood of `v` (ratio of sums).
pub fn clustering(s: &StreamGraph, v: &str) -> Result<Rat> {
    let nbrs = neighborhood(s, v)?;
    let ids: Vec<&NodeId> = nbrs.keys().collect();
    let mut den = Rat::zero();
    let mut num = Rat::zero();
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            let both = nbrs[ids[i]].intersect(&nbrs[ids[j]]);
            den += both.measure();
            num += both.intersect(&s.link_presence(ids[i], ids[j])).measure();
        }
    }
    if den.is_zero() {
        return Err(Error::Undefined(format!(
            "node `{v}` never has two simultaneous neighbors"
        )));
    }
    Ok(num / den)
}

/// Global fraction of closed 4-uplets `(t,u,v,w)`.
pub fn transitivity(s: &StreamGraph) -> Result<Rat> {
    require_undirected_semantics(s)?;
    let mut den = Rat::zero();
    let mut num = Rat::zero();
    for v in s.nodes().keys() {
        let nbrs = neighborhood(s, v)?;
        let ids: Vec<&NodeId> = nbrs.keys().collect();
        for i in 0..ids.len() {
            for j in (i + 1)..ids.len() {
                let both = nbrs[ids[i]].intersect(&nbrs[ids[j]]);
                den += both.measure();
                num += both.intersect(&s.link_presence(ids[i], ids[j])).measure();
            }
        }
    }
    if den.is_zero() {
        return Err(Error::Undefined("no open 4-uplet exists".into()));
    }
    Ok(num / den)
}
