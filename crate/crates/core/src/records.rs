//! Line-delimited output records. One serialized record per line keeps
//! every command's output diffable and re-parseable; builders translate
//! internal ids back to input labels.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::apps::{CommunityResult, DensestResult};
use crate::model::{LabelMap, VertexSet};
use crate::multilayer::MultilayerCore;
use crate::signed::PolarizedPartition;
use crate::temporal::{SpanCore, SpanStats};

fn label_list(labels: &LabelMap, members: &VertexSet) -> Vec<String> {
    members.iter().map(|&u| labels.label(u).to_owned()).collect()
}

#[derive(Debug, Serialize)]
pub struct CoreRecord {
    pub vector: Vec<u32>,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
}

pub fn core_record(labels: &LabelMap, core: &MultilayerCore, with_vertices: bool) -> CoreRecord {
    CoreRecord {
        vector: core.vector.as_slice().to_vec(),
        size: core.members.len(),
        vertices: with_vertices.then(|| label_list(labels, &core.members)),
    }
}

#[derive(Debug, Serialize)]
pub struct SpanRecord {
    pub k: u32,
    pub span: (u64, u64),
    pub size: usize,
    pub vertices: Vec<String>,
}

pub fn span_record(labels: &LabelMap, core: &SpanCore) -> SpanRecord {
    SpanRecord {
        k: core.k,
        span: (core.span.ts, core.span.te),
        size: core.members.len(),
        vertices: label_list(labels, &core.members),
    }
}

#[derive(Debug, Serialize)]
pub struct SpanStatsRecord {
    pub maximal_count: usize,
    /// span length -> number of maximal span-cores with that length
    pub histogram: BTreeMap<u64, usize>,
    /// order k -> longest span any k-order maximal span-core achieves
    pub max_span_per_k: BTreeMap<u32, u64>,
}

pub fn span_stats_record(maximal_count: usize, stats: &SpanStats) -> SpanStatsRecord {
    SpanStatsRecord {
        maximal_count,
        histogram: stats.histogram.clone(),
        max_span_per_k: stats.max_span_per_k.clone(),
    }
}

#[derive(Debug, Serialize)]
pub struct DensestRecord {
    pub delta: f64,
    pub beta: f64,
    pub support_layers: Vec<String>,
    pub vertices: Vec<String>,
    pub guarantee: f64,
}

pub fn densest_record(
    labels: &LabelMap,
    layer_labels: &[String],
    result: &DensestResult,
    beta: f64,
) -> DensestRecord {
    DensestRecord {
        delta: result.delta,
        beta,
        support_layers: result
            .support_layers
            .iter()
            .map(|&l| layer_labels[l].clone())
            .collect(),
        vertices: label_list(labels, &result.vertices),
        guarantee: result.guarantee,
    }
}

#[derive(Debug, Serialize)]
pub struct CommunityRecord {
    pub mu: f64,
    pub beta: f64,
    pub support_layers: Vec<String>,
    pub size: usize,
    pub vertices: Vec<String>,
}

pub fn community_record(
    labels: &LabelMap,
    layer_labels: &[String],
    result: &CommunityResult,
    beta: f64,
) -> CommunityRecord {
    CommunityRecord {
        mu: result.mu,
        beta,
        support_layers: result
            .support_layers
            .iter()
            .map(|&l| layer_labels[l].clone())
            .collect(),
        size: result.vertices.len(),
        vertices: label_list(labels, &result.vertices),
    }
}

/// Bare vertex-set record, used for quasi-clique candidates and matches.
#[derive(Debug, Serialize)]
pub struct SetRecord {
    pub size: usize,
    pub vertices: Vec<String>,
}

pub fn set_record(labels: &LabelMap, set: &VertexSet) -> SetRecord {
    SetRecord {
        size: set.len(),
        vertices: label_list(labels, set),
    }
}

#[derive(Debug, Serialize)]
pub struct PolarityRecord {
    pub algorithm: &'static str,
    pub polarity: f64,
    /// Absent (null) when no spectral step ran, i.e. brute force.
    pub lambda1: Option<f64>,
    pub community_pos: Vec<String>,
    pub community_neg: Vec<String>,
    pub neutral_count: usize,
    /// Absent (null) for the deterministic algorithms.
    pub seed: Option<u64>,
}

pub fn polarity_record(
    labels: &LabelMap,
    part: &PolarizedPartition,
    lambda1: Option<f64>,
    seed: Option<u64>,
) -> PolarityRecord {
    let pos = part.assignment.members(1);
    let neg = part.assignment.members(-1);
    PolarityRecord {
        algorithm: part.algorithm.tag(),
        polarity: part.polarity,
        lambda1,
        community_pos: pos.iter().map(|&u| labels.label(u).to_owned()).collect(),
        community_neg: neg.iter().map(|&u| labels.label(u).to_owned()).collect(),
        neutral_count: part.assignment.len() - part.assignment.nonzero_count(),
        seed,
    }
}

/// One record, one line.
pub fn to_line<T: Serialize>(record: &T) -> String {
    serde_json::to_string(record).expect("records serialize infallibly")
}
