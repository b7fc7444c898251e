//! Command-line surface: parses a stream file, evaluates the requested
//! metric(s), and prints JSON reports (or stream files for the transforms).
//!
//! Exit codes: 0 success, 1 requested metric is undefined, 2 input error.

use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use streamgraph::error::Error;
use streamgraph::oracle::{self, Selector};
use streamgraph::rational::{format_rational, parse_rational, Rat};
use streamgraph::report::MetricReport;
use streamgraph::static_graph::{self, DirectedVariant, StaticGraph};
use streamgraph::stream::{Kind, Side, StreamGraph};
use streamgraph::value::MetricValue;
use streamgraph::weighted::{DensityVariant, ValueFn};
use streamgraph::{bipartite, directed, format, metrics, weighted};

#[derive(Parser)]
#[command(name = "sg", about = "Exact metrics for interval-based stream graphs", disable_help_flag = false)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Global statistics appropriate to the stream kind
    Stats { file: PathBuf },
    /// Time-averaged degree (out- and in-degree for directed streams)
    Degree {
        file: PathBuf,
        #[arg(long)]
        node: Option<String>,
    },
    /// Density of the stream (bipartite / directed variant per kind)
    Density { file: PathBuf },
    /// Clustering coefficient
    Cc {
        file: PathBuf,
        #[arg(long)]
        node: Option<String>,
        #[arg(long, default_value = "plain")]
        variant: String,
    },
    /// Transitivity ratio
    Transitivity {
        file: PathBuf,
        #[arg(long, default_value = "plain")]
        variant: String,
    },
    /// Node strength (time-averaged weighted degree)
    Strength {
        file: PathBuf,
        #[arg(long)]
        node: Option<String>,
    },
    /// Weighted density
    Wdensity {
        file: PathBuf,
        #[arg(long, default_value = "presentmax")]
        variant: String,
    },
    /// Keep only the times where weights reach τ; emits a stream file
    Threshold {
        file: PathBuf,
        #[arg(long)]
        tau: String,
    },
    /// Δ-analysis smoothing; emits a weighted stream file
    Delta {
        file: PathBuf,
        #[arg(long)]
        delta: String,
        #[arg(long)]
        resolution: String,
    },
    /// One-mode projection of a bipartite stream; emits a stream file
    Project {
        file: PathBuf,
        #[arg(long)]
        side: String,
        #[arg(long)]
        weighted: bool,
    },
    /// Snapshot G_t as JSON
    Snapshot {
        file: PathBuf,
        #[arg(long)]
        t: String,
    },
    /// Induced graph G(S) as JSON
    Induced { file: PathBuf },
    /// Grid-oracle evaluation of a metric
    Oracle {
        file: PathBuf,
        #[arg(long)]
        metric: String,
        #[arg(long)]
        step: String,
        #[arg(long)]
        node: Option<String>,
        #[arg(long)]
        variant: Option<String>,
    },
    /// Parse and audit a stream file
    Validate { file: PathBuf },
}

/// Everything a command can produce, before rendering.
enum Output {
    Reports(Vec<MetricReport>),
    Stream(StreamGraph),
    Json(serde_json::Value),
}

fn parse_file(path: &PathBuf) -> Result<StreamGraph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    format::parse(&text)
}

fn number(s: &str, what: &str) -> Result<Rat, Error> {
    parse_rational(s).ok_or_else(|| Error::InvalidArgument(format!("bad {what} `{s}`")))
}

fn value_fn(name: &str) -> Option<ValueFn> {
    Some(match name {
        "arith" => ValueFn::ArithMean,
        "geo" => ValueFn::GeoMean,
        "min" => ValueFn::Min,
        "max" => ValueFn::Max,
        "product" => ValueFn::Product,
        _ => return None,
    })
}

fn side(name: &str) -> Result<Side, Error> {
    match name {
        "top" => Ok(Side::Top),
        "bottom" => Ok(Side::Bottom),
        other => Err(Error::InvalidArgument(format!("unknown side `{other}`"))),
    }
}

/// Builds the clustering selector for `cc --variant`.
fn cc_selector(variant: &str, node: &str) -> Result<Selector, Error> {
    let v = node.to_string();
    Ok(match variant {
        "plain" => Selector::Clustering(v),
        "barrat" => Selector::BarratClustering(v),
        "jaccard" => Selector::JaccardClustering(v),
        "redundancy" => Selector::Redundancy(v),
        "ccstar" => Selector::CcStar(v),
        "cyclic" => Selector::DirectedClustering(v, DirectedVariant::Cyclic),
        "transitive" => Selector::DirectedClustering(v, DirectedVariant::Transitive),
        "in" => Selector::DirectedClustering(v, DirectedVariant::In),
        "out" => Selector::DirectedClustering(v, DirectedVariant::Out),
        other => match value_fn(other) {
            Some(f) => Selector::GeneralClustering(v, f),
            None => {
                return Err(Error::InvalidArgument(format!("unknown cc variant `{other}`")))
            }
        },
    })
}

fn transitivity_selector(variant: &str) -> Result<Selector, Error> {
    Ok(match variant {
        "plain" => Selector::Transitivity,
        "quad" => Selector::BipartiteTransitivity { quint: false },
        "quint" => Selector::BipartiteTransitivity { quint: true },
        "cyclic" => Selector::DirectedTransitivity(DirectedVariant::Cyclic),
        "transitive" => Selector::DirectedTransitivity(DirectedVariant::Transitive),
        other => match value_fn(other) {
            Some(f) => Selector::WeightedTransitivity(f),
            None => {
                return Err(Error::InvalidArgument(format!(
                    "unknown transitivity variant `{other}`"
                )))
            }
        },
    })
}

fn density_variant(name: &str) -> Result<DensityVariant, Error> {
    match name {
        "presentmax" => Ok(DensityVariant::PresentMax),
        "allmax" => Ok(DensityVariant::AllMax),
        "unit" => Ok(DensityVariant::UnitInterval),
        other => Err(Error::InvalidArgument(format!("unknown density variant `{other}`"))),
    }
}

fn metric_name(base: &str, variant: &str) -> String {
    if variant == "plain" {
        base.to_string()
    } else {
        format!("{base}:{variant}")
    }
}

/// One report per node (or the single named node) for a node-scoped metric.
fn per_node(
    s: &StreamGraph,
    node: Option<&String>,
    metric: &str,
    f: impl Fn(&str) -> Result<MetricValue, Error>,
) -> Result<Vec<MetricReport>, Error> {
    let nodes: Vec<String> = match node {
        Some(n) => {
            s.node_presence(n)?;
            vec![n.clone()]
        }
        None => s.nodes().keys().cloned().collect(),
    };
    nodes
        .iter()
        .map(|n| MetricReport::from_result(metric, Some(n), f(n)))
        .collect()
}

fn stats(s: &StreamGraph) -> Result<Vec<MetricReport>, Error> {
    let mut out = Vec::new();
    let mut push = |metric: &str, res: Result<Rat, Error>| -> Result<(), Error> {
        out.push(MetricReport::from_result(metric, None, res.map(MetricValue::rational))?);
        Ok(())
    };
    push("nodes", metrics::node_count(s))?;
    push("links", metrics::link_count(s))?;
    match s.kind() {
        Kind::Undirected => {
            push("density", metrics::density(s))?;
            push("avgdegree", metrics::average_degree(s))?;
        }
        Kind::Bipartite => {
            push("top", bipartite::side_counts(s).map(|c| c.0))?;
            push("bottom", bipartite::side_counts(s).map(|c| c.1))?;
            push("density", bipartite::bipartite_density(s))?;
            push("avgdegree", metrics::average_degree(s))?;
            push("topdegree", bipartite::side_average_degree(s, Side::Top))?;
            push("bottomdegree", bipartite::side_average_degree(s, Side::Bottom))?;
        }
        Kind::Directed => {
            push("density", directed::directed_density(s))?;
            push("symmetric", directed::symmetry_stats(s).map(|r| r.0))?;
            push("loops", directed::symmetry_stats(s).map(|r| r.1))?;
        }
    }
    if s.is_weighted() {
        let ws = weighted::weight_stats(s)?;
        push("wmin", Ok(ws.min))?;
        push("wmax", Ok(ws.max))?;
        push("wmean", Ok(ws.mean))?;
    }
    Ok(out)
}

/// Selector for `oracle --metric`, reusing the cc/transitivity variant names.
fn oracle_selector(
    metric: &str,
    node: Option<&String>,
    variant: Option<&String>,
) -> Result<Selector, Error> {
    let need_node = || {
        node.cloned()
            .ok_or_else(|| Error::InvalidArgument(format!("metric `{metric}` needs --node")))
    };
    let plain = "plain".to_string();
    let variant = variant.unwrap_or(&plain);
    Ok(match metric {
        "nodes" => Selector::NodeCount,
        "links" => Selector::LinkCount,
        "degree" => Selector::Degree(need_node()?),
        "avgdegree" => Selector::AverageDegree,
        "density" => Selector::Density,
        "cc" => cc_selector(variant, &need_node()?)?,
        "transitivity" => transitivity_selector(variant)?,
        "strength" => Selector::Strength(need_node()?),
        "wdensity" => Selector::WeightedDensity(density_variant(if variant == "plain" {
            "presentmax"
        } else {
            variant
        })?),
        "top" => Selector::TopCount,
        "bottom" => Selector::BottomCount,
        "bdensity" => Selector::BipartiteDensity,
        "ddensity" => Selector::DirectedDensity,
        "symmetric" => Selector::SymmetricFraction,
        "loops" => Selector::LoopFraction,
        "outdegree" => Selector::OutDegree(need_node()?),
        "indegree" => Selector::InDegree(need_node()?),
        other => return Err(Error::InvalidArgument(format!("unknown metric `{other}`"))),
    })
}

fn graph_json(g: &StaticGraph) -> serde_json::Value {
    use serde_json::json;
    let mut obj = serde_json::Map::new();
    obj.insert("kind".into(), json!(g.kind.name()));
    obj.insert("nodes".into(), json!(g.nodes.iter().collect::<Vec<_>>()));
    obj.insert(
        "edges".into(),
        json!(g.edges.iter().map(|(u, v)| vec![u, v]).collect::<Vec<_>>()),
    );
    if let Some(w) = &g.edge_weights {
        obj.insert(
            "edge_weights".into(),
            json!(w
                .iter()
                .map(|((u, v), x)| json!([u, v, format_rational(x)]))
                .collect::<Vec<_>>()),
        );
    }
    if let Some(w) = &g.node_weights {
        obj.insert(
            "node_weights".into(),
            json!(w.iter().map(|(n, x)| json!([n, format_rational(x)])).collect::<Vec<_>>()),
        );
    }
    if let Some(sides) = &g.sides {
        obj.insert(
            "sides".into(),
            json!(sides.iter().map(|(n, s)| json!([n, s.name()])).collect::<Vec<_>>()),
        );
    }
    serde_json::Value::Object(obj)
}

fn execute(cmd: &Cmd) -> Result<Output, Error> {
    Ok(match cmd {
        Cmd::Stats { file } => Output::Reports(stats(&parse_file(file)?)?),
        Cmd::Degree { file, node } => {
            let s = parse_file(file)?;
            if s.kind() == Kind::Directed {
                let mut out = per_node(&s, node.as_ref(), "outdegree", |n| {
                    directed::out_degree(&s, n).map(MetricValue::rational)
                })?;
                out.extend(per_node(&s, node.as_ref(), "indegree", |n| {
                    directed::in_degree(&s, n).map(MetricValue::rational)
                })?);
                Output::Reports(out)
            } else {
                Output::Reports(per_node(&s, node.as_ref(), "degree", |n| {
                    metrics::degree(&s, n).map(MetricValue::rational)
                })?)
            }
        }
        Cmd::Density { file } => {
            let s = parse_file(file)?;
            let res = match s.kind() {
                Kind::Undirected => metrics::density(&s),
                Kind::Bipartite => bipartite::bipartite_density(&s),
                Kind::Directed => directed::directed_density(&s),
            };
            Output::Reports(vec![MetricReport::from_result(
                "density",
                None,
                res.map(MetricValue::rational),
            )?])
        }
        Cmd::Cc { file, node, variant } => {
            let s = parse_file(file)?;
            let name = metric_name("cc", variant);
            Output::Reports(per_node(&s, node.as_ref(), &name, |n| {
                oracle::evaluate(&s, &cc_selector(variant, n)?)
            })?)
        }
        Cmd::Transitivity { file, variant } => {
            let s = parse_file(file)?;
            let sel = transitivity_selector(variant)?;
            Output::Reports(vec![MetricReport::from_result(
                &metric_name("transitivity", variant),
                None,
                oracle::evaluate(&s, &sel),
            )?])
        }
        Cmd::Strength { file, node } => {
            let s = parse_file(file)?;
            Output::Reports(per_node(&s, node.as_ref(), "strength", |n| {
                weighted::strength(&s, n).map(MetricValue::rational)
            })?)
        }
        Cmd::Wdensity { file, variant } => {
            let s = parse_file(file)?;
            let res = weighted::weighted_density(&s, density_variant(variant)?);
            Output::Reports(vec![MetricReport::from_result(
                &format!("wdensity:{variant}"),
                None,
                res.map(MetricValue::rational),
            )?])
        }
        Cmd::Threshold { file, tau } => {
            let s = parse_file(file)?;
            Output::Stream(weighted::threshold(&s, &number(tau, "tau")?)?)
        }
        Cmd::Delta { file, delta, resolution } => {
            let s = parse_file(file)?;
            Output::Stream(weighted::delta_analysis(
                &s,
                &number(delta, "delta")?,
                &number(resolution, "resolution")?,
            )?)
        }
        Cmd::Project { file, side: side_name, weighted: keep_weights } => {
            let s = parse_file(file)?;
            Output::Stream(bipartite::project(&s, side(side_name)?, *keep_weights)?)
        }
        Cmd::Snapshot { file, t } => {
            let s = parse_file(file)?;
            Output::Json(graph_json(&static_graph::snapshot(&s, &number(t, "t")?)?))
        }
        Cmd::Induced { file } => {
            let s = parse_file(file)?;
            Output::Json(graph_json(&static_graph::induced_graph(&s)?))
        }
        Cmd::Oracle { file, metric, step, node, variant } => {
            let s = parse_file(file)?;
            let sel = oracle_selector(metric, node.as_ref(), variant.as_ref())?;
            let res = oracle::oracle_metric(&s, &sel, &number(step, "step")?);
            Output::Reports(vec![MetricReport::from_result(
                &format!("oracle:{metric}"),
                node.as_deref(),
                res,
            )?])
        }
        Cmd::Validate { file } => {
            let s = parse_file(file)?;
            Output::Json(serde_json::json!({
                "valid": true,
                "kind": s.kind().name(),
                "weighted": s.is_weighted(),
                "nodes": s.nodes().len(),
                "links": s.links().len(),
            }))
        }
    })
}

/// Runs the CLI on the given arguments, writing to the supplied streams, and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match execute(&cli.cmd) {
        Ok(Output::Reports(reports)) => {
            let mut any_undefined = false;
            for r in &reports {
                any_undefined |= r.undefined.is_some();
                let _ = writeln!(out, "{}", r.to_json());
            }
            if any_undefined {
                1
            } else {
                0
            }
        }
        Ok(Output::Stream(s)) => {
            let _ = write!(out, "{}", format::serialize(&s));
            0
        }
        Ok(Output::Json(v)) => {
            let _ = writeln!(out, "{v}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_undefined() {
                1
            } else {
                2
            }
        }
    }
}
