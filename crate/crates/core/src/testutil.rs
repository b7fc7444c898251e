//! Shared fixtures for unit tests.

use crate::interval::IntervalSet;
use crate::rational::{rat, rint};
use crate::stream::{Kind, Side, StreamBuilder, StreamGraph};

pub fn iset(pairs: &[(i64, i64)]) -> IntervalSet {
    IntervalSet::normalize(pairs.iter().map(|&(b, e)| (rint(b), rint(e))).collect()).unwrap()
}

pub fn iset_r(pairs: &[((i64, i64), (i64, i64))]) -> IntervalSet {
    IntervalSet::normalize(
        pairs
            .iter()
            .map(|&((bn, bd), (en, ed))| (rat(bn, bd), rat(en, ed)))
            .collect(),
    )
    .unwrap()
}

/// The four-node undirected running example used throughout the crate.
pub fn example_stream() -> StreamGraph {
    let mut b = StreamBuilder::new(Kind::Undirected, rint(0), rint(10));
    b.node("a", iset(&[(0, 10)]));
    b.node("b", iset(&[(0, 4), (5, 10)]));
    b.node("c", iset(&[(4, 9)]));
    b.node("d", iset(&[(1, 3)]));
    b.link("a", "b", iset(&[(1, 3), (7, 8)]));
    b.link("a", "c", iset_r(&[((9, 2), (15, 2))]));
    b.link("b", "c", iset(&[(6, 9)]));
    b.link("b", "d", iset(&[(2, 3)]));
    b.build().unwrap()
}

/// The two-top/three-bottom bipartite running example.
pub fn bipartite_stream() -> StreamGraph {
    let mut b = StreamBuilder::new(Kind::Bipartite, rint(0), rint(10));
    for id in ["u", "v"] {
        b.node(id, iset(&[(0, 10)]));
        b.side(id, Side::Top);
    }
    for id in ["a", "b", "c"] {
        b.node(id, iset(&[(0, 10)]));
        b.side(id, Side::Bottom);
    }
    b.link("u", "a", iset(&[(0, 2), (3, 9)]));
    b.link("u", "b", iset(&[(4, 5), (8, 10)]));
    b.link("u", "c", iset(&[(1, 5)]));
    b.link("v", "b", iset(&[(2, 7)]));
    b.link("v", "c", iset(&[(0, 8)]));
    b.build().unwrap()
}

/// The directed running example: node presences of [`example_stream`] with
/// ordered link presences.
pub fn directed_stream() -> StreamGraph {
    let mut b = StreamBuilder::new(Kind::Directed, rint(0), rint(10));
    b.node("a", iset(&[(0, 10)]));
    b.node("b", iset(&[(0, 4), (5, 10)]));
    b.node("c", iset(&[(4, 9)]));
    b.node("d", iset(&[(1, 3)]));
    b.link("a", "b", iset(&[(1, 3)]));
    b.link("b", "a", iset_r(&[((5, 2), (7, 2))]));
    b.link("c", "a", iset_r(&[((9, 2), (15, 2))]));
    b.link("b", "c", iset(&[(6, 9)]));
    b.link("d", "b", iset(&[(2, 3)]));
    b.build().unwrap()
}
