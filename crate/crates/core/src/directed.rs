//! Directed-stream machinery: directional neighborhoods and degrees,
//! directed density and cliques, symmetry and loop statistics, and the
//! cyclic/transitive clustering family.

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::rational::Rat;
use crate::stream::{Kind, NodeId, StreamBuilder, StreamGraph};
use num::Zero;
use std::collections::BTreeMap;

pub use crate::static_graph::DirectedVariant;

/// `N⁺(v)`: u → T_{v,u}.
pub fn out_neighborhood(s: &StreamGraph, v: &str) -> Result<BTreeMap<NodeId, IntervalSet>> {
    s.require_kind(Kind::Directed)?;
    s.node_presence(v)?;
    Ok(s.links()
        .iter()
        .filter(|((a, _), p)| a == v && !p.is_empty())
        .map(|((_, b), p)| (b.clone(), p.clone()))
        .collect())
}

/// `N⁻(v)`: u → T_{u,v}.
pub fn in_neighborhood(s: &StreamGraph, v: &str) -> Result<BTreeMap<NodeId, IntervalSet>> {
    s.require_kind(Kind::Directed)?;
    s.node_presence(v)?;
    Ok(s.links()
        .iter()
        .filter(|((_, b), p)| b == v && !p.is_empty())
        .map(|((a, _), p)| (a.clone(), p.clone()))
        .collect())
}

/// `d⁺(v) = Σ_u |T_{v,u}| / |T|`.
pub fn out_degree(s: &StreamGraph, v: &str) -> Result<Rat> {
    let t = s.require_nonempty_horizon()?;
    let total = out_neighborhood(s, v)?
        .values()
        .fold(Rat::zero(), |acc, p| acc + p.measure());
    Ok(total / t)
}

/// `d⁻(v) = Σ_u |T_{u,v}| / |T|`.
pub fn in_degree(s: &StreamGraph, v: &str) -> Result<Rat> {
    let t = s.require_nonempty_horizon()?;
    let total = in_neighborhood(s, v)?
        .values()
        .fold(Rat::zero(), |acc, p| acc + p.measure());
    Ok(total / t)
}

/// `m / Σ_{(u,v)∈V×V} |T_u∩T_v|`; the denominator runs over ordered pairs
/// including loops, mirroring the `m/n²` graph convention.
pub fn directed_density(s: &StreamGraph) -> Result<Rat> {
    s.require_kind(Kind::Directed)?;
    let mut den = Rat::zero();
    for pu in s.nodes().values() {
        for pv in s.nodes().values() {
            den += pu.intersect(pv).measure();
        }
    }
    if den.is_zero() {
        return Err(Error::Undefined("no two nodes are ever co-present".into()));
    }
    let num = s.links().values().fold(Rat::zero(), |acc, p| acc + p.measure());
    Ok(num / den)
}

/// True iff both arcs of every cluster pair are present whenever the two
/// nodes are covered by `C`.
pub fn is_directed_clique(s: &StreamGraph, clusters: &BTreeMap<NodeId, IntervalSet>) -> Result<bool> {
    s.require_kind(Kind::Directed)?;
    for (id, c) in clusters {
        if !c.is_subset_of(s.node_presence(id)?) {
            return Err(Error::InvalidArgument(format!(
                "cluster of node `{id}` is not a subset of its presence"
            )));
        }
    }
    let ids: Vec<&NodeId> = clusters.keys().collect();
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            let overlap = clusters[ids[i]].intersect(&clusters[ids[j]]);
            if !overlap.is_subset_of(&s.link_presence(ids[i], ids[j]))
                || !overlap.is_subset_of(&s.link_presence(ids[j], ids[i]))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(symmetric_fraction, loop_fraction)`: arc measure whose reverse arc
/// co-exists over total arc measure, and loop measure over node presence.
pub fn symmetry_stats(s: &StreamGraph) -> Result<(Rat, Rat)> {
    s.require_kind(Kind::Directed)?;
    let m_total = s.links().values().fold(Rat::zero(), |acc, p| acc + p.measure());
    if m_total.is_zero() {
        return Err(Error::Undefined("no arc is ever present".into()));
    }
    let w_total = s.node_presence_total();
    if w_total.is_zero() {
        return Err(Error::Undefined("no node is ever present".into()));
    }
    let mut sym = Rat::zero();
    let mut loops = Rat::zero();
    for ((u, v), p) in s.links() {
        if u == v {
            loops += p.measure();
            sym += p.measure();
        } else {
            sym += p.intersect(&s.link_presence(v, u)).measure();
        }
    }
    Ok((sym / m_total, loops / w_total))
}

/// Open/closed quadruplet measures through center `v`.
fn path_sums(
    s: &StreamGraph,
    v: &str,
    variant: DirectedVariant,
    num: &mut Rat,
    den: &mut Rat,
) -> Result<()> {
    let ins = in_neighborhood(s, v)?;
    let outs = out_neighborhood(s, v)?;
    for (u, t_uv) in &ins {
        if *u == v {
            continue;
        }
        for (w, t_vw) in &outs {
            if *w == v || w == u {
                continue;
            }
            let open = t_uv.intersect(t_vw);
            if open.is_empty() {
                continue;
            }
            *den += open.measure();
            let closing = match variant {
                DirectedVariant::Cyclic => s.link_presence(w, u),
                DirectedVariant::Transitive => s.link_presence(u, w),
                _ => unreachable!("path sums only serve cyclic/transitive"),
            };
            *num += open.intersect(&closing).measure();
        }
    }
    Ok(())
}

/// Cyclic/transitive clustering closes paths u→v→w; the in/out variants are
/// the directed density of the substream induced on the in-/out-neighborhood.
pub fn directed_clustering(s: &StreamGraph, v: &str, variant: DirectedVariant) -> Result<Rat> {
    s.require_kind(Kind::Directed)?;
    match variant {
        DirectedVariant::Cyclic | DirectedVariant::Transitive => {
            let mut num = Rat::zero();
            let mut den = Rat::zero();
            path_sums(s, v, variant, &mut num, &mut den)?;
            if den.is_zero() {
                return Err(Error::Undefined(format!("no open path through `{v}`")));
            }
            Ok(num / den)
        }
        DirectedVariant::In | DirectedVariant::Out => {
            let clusters = if variant == DirectedVariant::In {
                in_neighborhood(s, v)?
            } else {
                out_neighborhood(s, v)?
            };
            if clusters.is_empty() {
                return Err(Error::Undefined(format!("`{v}` has an empty neighborhood")));
            }
            directed_density(&s.strip_weights().induce(&clusters)?)
        }
    }
}

/// Global version of the cyclic/transitive clustering ratio.
pub fn directed_transitivity(s: &StreamGraph, variant: DirectedVariant) -> Result<Rat> {
    s.require_kind(Kind::Directed)?;
    if !matches!(variant, DirectedVariant::Cyclic | DirectedVariant::Transitive) {
        return Err(Error::InvalidArgument(
            "transitivity supports cyclic/transitive variants only".into(),
        ));
    }
    let mut num = Rat::zero();
    let mut den = Rat::zero();
    for v in s.nodes().keys() {
        path_sums(s, v, variant, &mut num, &mut den)?;
    }
    if den.is_zero() {
        return Err(Error::Undefined("no open directed path exists".into()));
    }
    Ok(num / den)
}

/// Forgets arc directions: per-pair union of arc presence sets, loops
/// dropped, weights stripped.
pub fn undirect(s: &StreamGraph) -> Result<StreamGraph> {
    s.require_kind(Kind::Directed)?;
    let (begin, end) = s.horizon();
    let mut b = StreamBuilder::new(Kind::Undirected, begin.clone(), end.clone());
    for (id, presence) in s.nodes() {
        b.node(id, presence.clone());
    }
    for ((u, v), presence) in s.links() {
        if u != v {
            b.link(u, v, presence.clone());
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};
    use crate::testutil::{directed_stream, example_stream, iset, iset_r};

    /// Always-on arcs over three always-present nodes.
    fn arc_stream(arcs: &[(&str, &str)]) -> StreamGraph {
        let full = iset(&[(0, 10)]);
        let mut b = StreamBuilder::new(Kind::Directed, rint(0), rint(10));
        for id in ["a", "b", "c"] {
            b.node(id, full.clone());
        }
        for (u, v) in arcs {
            b.link(u, v, full.clone());
        }
        b.build().unwrap()
    }

    #[test]
    fn neighborhoods() {
        let s = directed_stream();
        let out = out_neighborhood(&s, "a").unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out["b"], iset(&[(1, 3)]));
        let inn = in_neighborhood(&s, "a").unwrap();
        assert_eq!(inn["b"], iset_r(&[((5, 2), (7, 2))]));
        assert_eq!(inn["c"], iset_r(&[((9, 2), (15, 2))]));
        assert!(out_neighborhood(&example_stream(), "a").is_err());
    }

    #[test]
    fn degrees_sum_to_link_count() {
        let s = directed_stream();
        assert_eq!(out_degree(&s, "a").unwrap(), rat(1, 5));
        assert_eq!(in_degree(&s, "a").unwrap(), rat(2, 5));
        let mut out_sum = Rat::zero();
        let mut in_sum = Rat::zero();
        for v in s.nodes().keys() {
            out_sum += out_degree(&s, v).unwrap();
            in_sum += in_degree(&s, v).unwrap();
        }
        assert_eq!(out_sum, rint(1));
        assert_eq!(in_sum, rint(1));
    }

    #[test]
    fn density_value() {
        let s = directed_stream();
        assert_eq!(directed_density(&s).unwrap(), rat(1, 7));
        // complete with loops
        let full = iset(&[(0, 10)]);
        let mut b = StreamBuilder::new(Kind::Directed, rint(0), rint(10));
        for u in ["a", "b"] {
            b.node(u, full.clone());
        }
        for u in ["a", "b"] {
            for v in ["a", "b"] {
                b.link(u, v, full.clone());
            }
        }
        assert_eq!(directed_density(&b.build().unwrap()).unwrap(), rint(1));
    }

    #[test]
    fn clique_checks() {
        let s = directed_stream();
        let sym: BTreeMap<NodeId, IntervalSet> = [
            ("a".to_string(), iset_r(&[((5, 2), (3, 1))])),
            ("b".to_string(), iset_r(&[((5, 2), (3, 1))])),
        ]
        .into();
        assert!(is_directed_clique(&s, &sym).unwrap());
        let asym: BTreeMap<NodeId, IntervalSet> = [
            ("a".to_string(), iset(&[(1, 2)])),
            ("b".to_string(), iset(&[(1, 2)])),
        ]
        .into();
        assert!(!is_directed_clique(&s, &asym).unwrap());
        let single: BTreeMap<NodeId, IntervalSet> = [("a".to_string(), iset(&[(0, 10)]))].into();
        assert!(is_directed_clique(&s, &single).unwrap());
    }

    #[test]
    fn symmetry_values() {
        let s = directed_stream();
        let (sym, loops) = symmetry_stats(&s).unwrap();
        assert_eq!(sym, rat(1, 10));
        assert_eq!(loops, rint(0));
        // loops count as symmetric
        let full = iset(&[(0, 10)]);
        let mut b = StreamBuilder::new(Kind::Directed, rint(0), rint(10));
        b.node("a", full.clone());
        b.link("a", "a", iset(&[(0, 5)]));
        let (sym, loops) = symmetry_stats(&b.build().unwrap()).unwrap();
        assert_eq!(sym, rint(1));
        assert_eq!(loops, rat(1, 2));
    }

    #[test]
    fn cyclic_and_transitive_clustering() {
        let cycle = arc_stream(&[("a", "b"), ("b", "c"), ("c", "a")]);
        assert_eq!(directed_clustering(&cycle, "b", DirectedVariant::Cyclic).unwrap(), rint(1));
        assert_eq!(directed_clustering(&cycle, "b", DirectedVariant::Transitive).unwrap(), rint(0));

        let tri = arc_stream(&[("a", "b"), ("b", "c"), ("a", "c")]);
        assert_eq!(directed_clustering(&tri, "b", DirectedVariant::Transitive).unwrap(), rint(1));
        assert!(directed_clustering(&tri, "a", DirectedVariant::Cyclic).unwrap_err().is_undefined());
    }

    #[test]
    fn in_out_clustering_matches_static() {
        let tri = arc_stream(&[("a", "b"), ("b", "c"), ("a", "c")]);
        assert_eq!(directed_clustering(&tri, "a", DirectedVariant::Out).unwrap(), rat(1, 4));
        assert_eq!(directed_clustering(&tri, "c", DirectedVariant::In).unwrap(), rat(1, 4));
        let g = crate::static_graph::induced_graph(&tri).unwrap();
        assert_eq!(
            g.directed_clustering("a", DirectedVariant::Out).unwrap(),
            rat(1, 4)
        );
        assert!(directed_clustering(&tri, "a", DirectedVariant::In).unwrap_err().is_undefined());
    }

    #[test]
    fn transitivity_values() {
        let cycle = arc_stream(&[("a", "b"), ("b", "c"), ("c", "a")]);
        assert_eq!(directed_transitivity(&cycle, DirectedVariant::Cyclic).unwrap(), rint(1));
        assert_eq!(directed_transitivity(&cycle, DirectedVariant::Transitive).unwrap(), rint(0));
        let tri = arc_stream(&[("a", "b"), ("b", "c"), ("a", "c")]);
        assert_eq!(directed_transitivity(&tri, DirectedVariant::Transitive).unwrap(), rint(1));
        assert!(directed_transitivity(&tri, DirectedVariant::In).is_err());
        assert!(directed_transitivity(&arc_stream(&[]), DirectedVariant::Cyclic)
            .unwrap_err()
            .is_undefined());
    }

    #[test]
    fn undirect_unions_arcs() {
        let s = directed_stream();
        let u = undirect(&s).unwrap();
        assert_eq!(u.kind(), Kind::Undirected);
        assert_eq!(u.link_presence("a", "b"), iset_r(&[((1, 1), (7, 2))]));
        assert_eq!(u.link_presence("b", "c"), iset(&[(6, 9)]));
        // loops dropped
        let full = iset(&[(0, 10)]);
        let mut b = StreamBuilder::new(Kind::Directed, rint(0), rint(10));
        b.node("a", full.clone());
        b.link("a", "a", full.clone());
        let u = undirect(&b.build().unwrap()).unwrap();
        assert!(u.links().is_empty());
    }
}
