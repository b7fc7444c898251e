//! Deterministic synthetic streams for the benchmarks.

use streamgraph::rational::{rat, rint};
use streamgraph::stream::{Kind, StreamBuilder, StreamGraph};
use streamgraph::IntervalSet;

/// A quarter-aligned undirected stream with `n` nodes over [0, 100].
/// Presences and links follow a fixed arithmetic pattern, so every run
/// benchmarks the same input.
pub fn synthetic_stream(n: usize) -> StreamGraph {
    let maxq = 400i64;
    let mut b = StreamBuilder::new(Kind::Undirected, rint(0), rat(maxq, 4));
    let name = |i: usize| format!("n{i}");
    let presence = |i: usize| {
        let i = i as i64;
        let start = (i * 7) % 50;
        IntervalSet::normalize(vec![
            (rat(start, 4), rat(start + 120, 4)),
            (rat(start + 160 + (i % 5) * 8, 4), rat(start + 300, 4)),
        ])
        .unwrap()
    };
    for i in 0..n {
        b.node(&name(i), presence(i));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (i + j) % 3 != 0 {
                continue;
            }
            let co = presence(i).intersect(&presence(j));
            let window =
                IntervalSet::normalize(vec![(rat(((i * j) % 40) as i64, 4), rat(200, 4))]).unwrap();
            let p = co.intersect(&window);
            if !p.is_empty() {
                b.link(&name(i), &name(j), p);
            }
        }
    }
    b.build().unwrap()
}
