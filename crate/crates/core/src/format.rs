//! The line-oriented stream file format.
//!
//! ```text
//! stream undirected            # or bipartite / directed
//! T 0 10                       # horizon; numbers are integers, decimals or p/q
//! side u top                   # bipartite only, before the node's first use
//! N a 0 4                      # node presence (repeatable, union)
//! L a b 1 3 2                  # link presence, optional weight (A for arcs)
//! NW a 0 4 1/2                 # optional node weight
//! ```
//!
//! Omitted weights default to 1; a single weighted line makes the whole
//! stream weighted. Serialization is canonical, so `parse(serialize(s)) == s`
//! byte-for-byte round trips hold for every constructible stream.

use crate::error::{Error, ParseCode, Result};
use crate::interval::IntervalSet;
use crate::rational::{format_rational, parse_rational, Rat};
use crate::stream::{link_key, Kind, LinkKey, Side, StreamBuilder, StreamGraph};
use crate::weight::StepWeight;
use num::One;
use std::collections::{BTreeMap, BTreeSet};

fn perr(line: usize, code: ParseCode, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        code,
        message: message.into(),
    }
}

fn number(tok: &str, line: usize) -> Result<Rat> {
    parse_rational(tok).ok_or_else(|| perr(line, ParseCode::Syntax, format!("bad number `{tok}`")))
}

struct LinkLine {
    begin: Rat,
    end: Rat,
    weight: Option<Rat>,
    line: usize,
}

#[derive(Default)]
struct Parser {
    kind: Option<Kind>,
    horizon: Option<(Rat, Rat)>,
    sides: BTreeMap<String, Side>,
    used: BTreeSet<String>,
    nodes: BTreeMap<String, Vec<(Rat, Rat)>>,
    links: BTreeMap<LinkKey, Vec<LinkLine>>,
    node_weights: BTreeMap<String, Vec<((Rat, Rat), Rat, usize)>>,
    any_weight: bool,
}

impl Parser {
    fn header(&self, line: usize) -> Result<(Kind, &(Rat, Rat))> {
        let kind = self
            .kind
            .ok_or_else(|| perr(line, ParseCode::Syntax, "`stream <kind>` header missing"))?;
        let horizon = self
            .horizon
            .as_ref()
            .ok_or_else(|| perr(line, ParseCode::Syntax, "`T <begin> <end>` line missing"))?;
        Ok((kind, horizon))
    }

    /// Parses `<begin> <end>`, checking orientation and horizon containment.
    fn span(&self, b: &str, e: &str, line: usize) -> Result<(Rat, Rat)> {
        let begin = number(b, line)?;
        let end = number(e, line)?;
        if begin > end {
            return Err(perr(
                line,
                ParseCode::Syntax,
                format!("reversed interval [{b},{e}]"),
            ));
        }
        let (x, y) = self.horizon.as_ref().expect("checked by header()");
        if &begin < x || &end > y {
            return Err(perr(
                line,
                ParseCode::Horizon,
                format!("interval [{b},{e}] leaves the horizon"),
            ));
        }
        Ok((begin, end))
    }

    fn touch(&mut self, node: &str, line: usize) -> Result<()> {
        if self.kind == Some(Kind::Bipartite) && !self.sides.contains_key(node) {
            return Err(perr(
                line,
                ParseCode::SideViolation,
                format!("node `{node}` is used before its side tag"),
            ));
        }
        self.used.insert(node.to_string());
        Ok(())
    }

    fn line(&mut self, no: usize, tokens: &[&str]) -> Result<()> {
        let syntax = |msg: String| perr(no, ParseCode::Syntax, msg);
        match (tokens[0], &tokens[1..]) {
            ("stream", [k]) => {
                if self.kind.is_some() {
                    return Err(syntax("duplicate `stream` header".into()));
                }
                self.kind = Some(match *k {
                    "undirected" => Kind::Undirected,
                    "bipartite" => Kind::Bipartite,
                    "directed" => Kind::Directed,
                    other => return Err(syntax(format!("unknown stream kind `{other}`"))),
                });
            }
            ("T", [b, e]) => {
                if self.kind.is_none() {
                    return Err(syntax("`T` before the `stream` header".into()));
                }
                if self.horizon.is_some() {
                    return Err(syntax("duplicate `T` line".into()));
                }
                let begin = number(b, no)?;
                let end = number(e, no)?;
                if begin > end {
                    return Err(perr(
                        no,
                        ParseCode::Horizon,
                        format!("reversed horizon [{b},{e}]"),
                    ));
                }
                self.horizon = Some((begin, end));
            }
            ("side", [node, tag]) => {
                let (kind, _) = self.header(no)?;
                if kind != Kind::Bipartite {
                    return Err(perr(
                        no,
                        ParseCode::SideViolation,
                        "side tags are only allowed in bipartite streams",
                    ));
                }
                let side = match *tag {
                    "top" => Side::Top,
                    "bottom" => Side::Bottom,
                    other => return Err(syntax(format!("unknown side `{other}`"))),
                };
                if self.used.contains(*node) {
                    return Err(perr(
                        no,
                        ParseCode::SideViolation,
                        format!("side tag for `{node}` after its first use"),
                    ));
                }
                if let Some(prev) = self.sides.insert(node.to_string(), side) {
                    if prev != side {
                        return Err(perr(
                            no,
                            ParseCode::SideViolation,
                            format!("conflicting side tags for `{node}`"),
                        ));
                    }
                }
            }
            // bare `N <node>` declares a node that is never present
            ("N", [node]) => {
                self.header(no)?;
                self.touch(node, no)?;
                self.nodes.entry(node.to_string()).or_default();
            }
            ("N", [node, b, e]) => {
                self.header(no)?;
                let span = self.span(b, e, no)?;
                self.touch(node, no)?;
                self.nodes.entry(node.to_string()).or_default().push(span);
            }
            (dir @ ("L" | "A"), rest @ ([_, _] | [_, _, _, _] | [_, _, _, _, _])) => {
                let (kind, _) = self.header(no)?;
                match (dir, kind) {
                    ("L", Kind::Directed) => {
                        return Err(syntax("directed streams use `A` lines, not `L`".into()))
                    }
                    ("A", Kind::Undirected | Kind::Bipartite) => {
                        return Err(syntax("`A` lines are only allowed in directed streams".into()))
                    }
                    _ => {}
                }
                let (u, v) = (rest[0], rest[1]);
                if u == v && kind != Kind::Directed {
                    return Err(syntax(format!("self-link on `{u}`")));
                }
                if kind == Kind::Bipartite {
                    self.touch(u, no)?;
                    self.touch(v, no)?;
                    if self.sides.get(u) == self.sides.get(v) {
                        return Err(perr(
                            no,
                            ParseCode::SideViolation,
                            format!("link `{u}`-`{v}` joins two same-side nodes"),
                        ));
                    }
                } else {
                    self.touch(u, no)?;
                    self.touch(v, no)?;
                }
                if rest.len() == 2 {
                    // bare `L <u> <v>`: a declared link that is never present
                    self.links.entry(link_key(kind, u, v)).or_default();
                    return Ok(());
                }
                let (begin, end) = self.span(rest[2], rest[3], no)?;
                let weight = match rest.get(4) {
                    Some(w) => {
                        self.any_weight = true;
                        Some(number(w, no)?)
                    }
                    None => None,
                };
                self.links.entry(link_key(kind, u, v)).or_default().push(LinkLine {
                    begin,
                    end,
                    weight,
                    line: no,
                });
            }
            ("NW", [node, b, e, w]) => {
                self.header(no)?;
                let span = self.span(b, e, no)?;
                let weight = number(w, no)?;
                self.touch(node, no)?;
                self.any_weight = true;
                self.node_weights
                    .entry(node.to_string())
                    .or_default()
                    .push((span, weight, no));
            }
            (directive, _) => {
                return Err(syntax(format!(
                    "malformed `{directive}` line ({} fields)",
                    tokens.len()
                )))
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<StreamGraph> {
        let kind = self
            .kind
            .ok_or_else(|| perr(1, ParseCode::Syntax, "`stream <kind>` header missing"))?;
        let (begin, end) = self
            .horizon
            .ok_or_else(|| perr(1, ParseCode::Syntax, "`T <begin> <end>` line missing"))?;

        let mut presences: BTreeMap<String, IntervalSet> = BTreeMap::new();
        for (node, raw) in &self.nodes {
            presences.insert(node.clone(), IntervalSet::normalize(raw.clone())?);
        }

        // containment: every link interval inside the co-presence of its endpoints
        for ((u, v), lines) in &self.links {
            for side in [u, v] {
                if !presences.contains_key(side) {
                    return Err(perr(
                        lines.first().map(|l| l.line).unwrap_or(0),
                        ParseCode::Containment,
                        format!("link endpoint `{side}` has no `N` line"),
                    ));
                }
            }
            let co = presences[u].intersect(&presences[v]);
            for l in lines {
                let iv = IntervalSet::interval(l.begin.clone(), l.end.clone())?;
                if !iv.is_subset_of(&co) {
                    return Err(perr(
                        l.line,
                        ParseCode::Containment,
                        format!("link `{u}`-`{v}` is present outside the co-presence of its endpoints"),
                    ));
                }
            }
        }

        let mut b = StreamBuilder::new(kind, begin, end);
        for (node, side) in &self.sides {
            b.side(node, *side);
        }
        for (node, presence) in &presences {
            b.node(node, presence.clone());
        }
        for ((u, v), lines) in &self.links {
            let presence =
                IntervalSet::normalize(lines.iter().map(|l| (l.begin.clone(), l.end.clone())).collect())?;
            b.link(u, v, presence);
            if self.any_weight && !lines.is_empty() {
                let last_line = lines.last().expect("non-empty").line;
                let raw = lines
                    .iter()
                    .map(|l| {
                        (
                            (l.begin.clone(), l.end.clone()),
                            l.weight.clone().unwrap_or_else(Rat::one),
                        )
                    })
                    .collect();
                let weight = StepWeight::new(raw).map_err(|e| {
                    perr(last_line, ParseCode::WeightMismatch, format!("link `{u}`-`{v}`: {e}"))
                })?;
                b.link_weight(u, v, weight);
            }
        }
        for (node, pieces) in &self.node_weights {
            let presence = presences.get(node).ok_or_else(|| {
                perr(
                    pieces[0].2,
                    ParseCode::WeightMismatch,
                    format!("node weight for `{node}` without an `N` line"),
                )
            })?;
            let last_line = pieces.last().expect("non-empty").2;
            for ((pb, pe), _, line) in pieces {
                let iv = IntervalSet::interval(pb.clone(), pe.clone())?;
                if !iv.is_subset_of(presence) {
                    return Err(perr(
                        *line,
                        ParseCode::WeightMismatch,
                        format!("node weight for `{node}` outside its presence"),
                    ));
                }
            }
            let explicit = StepWeight::new(pieces.iter().map(|(s, w, _)| (s.clone(), w.clone())).collect())
                .map_err(|e| perr(last_line, ParseCode::WeightMismatch, format!("node `{node}`: {e}")))?;
            // presence not covered by NW lines keeps the default weight 1
            let rest = presence.difference(&explicit.support());
            let mut raw: Vec<((Rat, Rat), Rat)> =
                pieces.iter().map(|(s, w, _)| (s.clone(), w.clone())).collect();
            raw.extend(rest.iter_pairs().map(|p| (p, Rat::one())));
            let weight = StepWeight::new(raw)
                .map_err(|e| perr(last_line, ParseCode::WeightMismatch, format!("node `{node}`: {e}")))?;
            b.node_weight(node, weight);
        }
        b.build()
    }
}

/// Parses a stream file. Errors carry 1-based line numbers and a
/// [`ParseCode`] naming the failure class.
pub fn parse(text: &str) -> Result<StreamGraph> {
    let mut p = Parser::default();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        p.line(idx + 1, &tokens)?;
    }
    p.finish()
}

/// Serializes a stream into canonical form: header, horizon, sorted side
/// tags, node presence per interval, node weights per piece, then links
/// (weighted streams get one line per weight piece).
pub fn serialize(s: &StreamGraph) -> String {
    let mut out = String::new();
    let push = |out: &mut String, parts: &[&str]| {
        out.push_str(&parts.join(" "));
        out.push('\n');
    };
    push(&mut out, &["stream", s.kind().name()]);
    let (x, y) = s.horizon();
    push(&mut out, &["T", &format_rational(x), &format_rational(y)]);
    if let Some(sides) = s.sides() {
        for (node, side) in sides {
            push(&mut out, &["side", node, side.name()]);
        }
    }
    for (node, presence) in s.nodes() {
        if presence.is_empty() {
            push(&mut out, &["N", node]);
        }
        for (b, e) in presence.iter_pairs() {
            push(&mut out, &["N", node, &format_rational(&b), &format_rational(&e)]);
        }
    }
    if let Some(weights) = s.node_weights() {
        for (node, w) in weights {
            for (iv, value) in w.pieces() {
                push(
                    &mut out,
                    &[
                        "NW",
                        node,
                        &format_rational(&iv.begin),
                        &format_rational(&iv.end),
                        &format_rational(value),
                    ],
                );
            }
        }
    }
    let tag = if s.kind() == Kind::Directed { "A" } else { "L" };
    for ((u, v), presence) in s.links() {
        if presence.is_empty() {
            push(&mut out, &[tag, u, v]);
            continue;
        }
        match s.link_weights().map(|m| &m[&(u.clone(), v.clone())]) {
            Some(w) => {
                for (iv, value) in w.pieces() {
                    push(
                        &mut out,
                        &[
                            tag,
                            u,
                            v,
                            &format_rational(&iv.begin),
                            &format_rational(&iv.end),
                            &format_rational(value),
                        ],
                    );
                }
            }
            None => {
                for (b, e) in presence.iter_pairs() {
                    push(&mut out, &[tag, u, v, &format_rational(&b), &format_rational(&e)]);
                }
            }
        }
    }
    out
}
