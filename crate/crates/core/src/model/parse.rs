//! Line-oriented parsers for the three edge-list formats.
//!
//! Shared grammar: one edge per line, fields separated by runs of blanks or
//! tabs, `#` starts a comment, blank lines are skipped, and both `\n` and
//! `\r\n` endings work. Vertex ids are assigned in first-appearance order.

use super::{LabelMap, MultilayerGraph, SignedGraph, TemporalGraph, VertexId};
use crate::error::ParseError;

/// Widest timestamp range the contiguous-domain materialization accepts.
pub const MAX_TIME_RANGE: u64 = 1 << 20;

/// Yields (1-based line number, the 3 fields) for every content line.
fn content_lines(input: &str) -> impl Iterator<Item = (usize, Result<[&str; 3], usize>)> {
    input.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let mut fields = line.split_whitespace();
        let a = fields.next()?;
        let found = [Some(a), fields.next(), fields.next()];
        let extra = fields.count();
        let lineno = i + 1;
        match found {
            [Some(a), Some(b), Some(c)] if extra == 0 => Some((lineno, Ok([a, b, c]))),
            _ => {
                let n = found.iter().flatten().count() + extra;
                Some((lineno, Err(n)))
            }
        }
    })
}

fn check_loop(lineno: usize, u: &str, v: &str) -> Result<(), ParseError> {
    if u == v {
        return Err(ParseError::SelfLoop {
            line: lineno,
            vertex: u.to_owned(),
        });
    }
    Ok(())
}

/// Parses `u v layer` lines into a [`MultilayerGraph`]. Layers are ordered by
/// first appearance; duplicate edges collapse silently.
pub fn parse_multilayer(input: &str) -> Result<MultilayerGraph, ParseError> {
    let mut labels = LabelMap::default();
    let mut layer_labels: Vec<String> = Vec::new();
    let mut layer_index: std::collections::HashMap<String, usize> = Default::default();
    let mut edges: Vec<Vec<(VertexId, VertexId)>> = Vec::new();
    for (lineno, fields) in content_lines(input) {
        let [u, v, layer] = fields.map_err(|found| ParseError::FieldCount {
            line: lineno,
            found,
        })?;
        check_loop(lineno, u, v)?;
        let l = *layer_index.entry(layer.to_owned()).or_insert_with(|| {
            layer_labels.push(layer.to_owned());
            edges.push(Vec::new());
            layer_labels.len() - 1
        });
        let (a, b) = (labels.intern(u), labels.intern(v));
        edges[l].push((a, b));
    }
    Ok(MultilayerGraph::build(labels, layer_labels, edges))
}

/// Parses `u v t` lines into a [`TemporalGraph`]. The timestamp domain is
/// materialized contiguously from the smallest to the largest value seen, so
/// gaps become empty snapshots.
pub fn parse_temporal(input: &str) -> Result<TemporalGraph, ParseError> {
    let mut labels = LabelMap::default();
    let mut raw: Vec<(VertexId, VertexId, u64)> = Vec::new();
    for (lineno, fields) in content_lines(input) {
        let [u, v, t] = fields.map_err(|found| ParseError::FieldCount {
            line: lineno,
            found,
        })?;
        check_loop(lineno, u, v)?;
        let t: u64 = t.parse().map_err(|_| ParseError::BadTimestamp {
            line: lineno,
            token: t.to_owned(),
        })?;
        let (a, b) = (labels.intern(u), labels.intern(v));
        raw.push((a, b, t));
    }
    let t_min = raw.iter().map(|e| e.2).min().unwrap_or(0);
    let t_max = raw.iter().map(|e| e.2).max().unwrap_or(0);
    let span = t_max - t_min + 1;
    if span > MAX_TIME_RANGE {
        return Err(ParseError::TimeRangeTooWide {
            span,
            limit: MAX_TIME_RANGE,
        });
    }
    let mut per_t = vec![Vec::new(); span as usize];
    for (u, v, t) in raw {
        per_t[(t - t_min) as usize].push((u, v));
    }
    Ok(TemporalGraph::build(labels, t_min, per_t))
}

/// Parses `u v sign` lines into a [`SignedGraph`]. Signs are `+1`, `-1`, `+`
/// or `-`; the same pair appearing with both signs is an error.
pub fn parse_signed(input: &str) -> Result<SignedGraph, ParseError> {
    let mut labels = LabelMap::default();
    let mut edges: Vec<(VertexId, VertexId, i8)> = Vec::new();
    for (lineno, fields) in content_lines(input) {
        let [u, v, s] = fields.map_err(|found| ParseError::FieldCount {
            line: lineno,
            found,
        })?;
        check_loop(lineno, u, v)?;
        let sign = match s {
            "+1" | "+" => 1i8,
            "-1" | "-" => -1i8,
            _ => {
                return Err(ParseError::BadSign {
                    line: lineno,
                    token: s.to_owned(),
                })
            }
        };
        let (a, b) = (labels.intern(u), labels.intern(v));
        edges.push((a, b, sign));
    }
    SignedGraph::build(labels, edges).map_err(|(u, v)| ParseError::SignConflict { u, v })
}
