//! Exact interval-based metrics for stream graphs: the undirected catalog
//! plus weighted, bipartite, and directed extensions, a classical-graph
//! counterpart for every metric, and a discrete-grid brute-force oracle.
//!
//! All arithmetic on time coordinates and measures is exact (big rationals);
//! floats only appear when rendering reports.

pub mod bipartite;
pub mod directed;
pub mod error;
pub mod format;
pub mod interval;
pub mod metrics;
pub mod oracle;
pub mod radical;
pub mod rational;
pub mod report;
pub mod static_graph;
pub mod stream;
pub mod value;
pub mod weight;
pub mod weighted;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use interval::{Interval, IntervalSet};
pub use rational::Rat;
pub use stream::{Kind, NodeId, Side, StreamBuilder, StreamGraph};
pub use value::MetricValue;
pub use weight::StepWeight;
