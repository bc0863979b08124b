//! Core mining over multilayer, temporal, and signed graphs.
//!
//! Three graph models share one peeling engine:
//!
//! * multilayer graphs — the full lattice of per-layer-threshold cores, its
//!   maximal elements, and the applications built on them (densest subgraph
//!   across layers, frequent quasi-clique pruning, community search);
//! * temporal graphs — cores of edge intersections over time intervals
//!   (span-cores), their maximal elements, and summary statistics;
//! * signed graphs — spectral polarity: the most polarized two-sided
//!   substructure by eigenvector rounding.
//!
//! Every exhaustive routine has a deliberately plain counterpart
//! (`*_naive`, `filter_*`, brute force) that recomputes the same answer
//! from scratch; the optimized and plain routes must agree bit for bit,
//! and the test suite holds them to that.
//!
//! With the default `parallel` feature, independent subproblems run on a
//! rayon pool; outputs are collected in a fixed order, so results and
//! serialized records are identical however many threads run.

mod error;
mod exec;
mod model;
mod peel;

pub mod apps;
pub mod multilayer;
pub mod records;
pub mod signed;
pub mod synth;
pub mod temporal;

pub use error::{Error, ParseError};
pub use model::{
    induced_degree, parse_multilayer, parse_signed, parse_temporal, GraphView,
    IntersectionGraph, LabelMap, LayerView, MultilayerGraph, SignedGraph, SnapshotView,
    TemporalGraph, VertexId, VertexSet, MAX_TIME_RANGE,
};
pub use peel::{core_decomposition, peel_interval, peel_to_vector, CoreIndexing};
