//! Seeded random instances for benchmarks, harnesses, and the CLI
//! generators. Every generator walks vertex pairs in a fixed order with a
//! counter-based generator, so a (shape, seed) pair names one graph
//! forever.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model::{MultilayerGraph, SignedGraph, TemporalGraph, VertexId};

/// Erdős–Rényi layers: every pair flips an independent coin per layer.
pub fn random_multilayer(n: usize, layers: usize, p: f64, seed: u64) -> MultilayerGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for l in 0..layers {
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen::<f64>() < p {
                    edges.push((u as VertexId, v as VertexId, l));
                }
            }
        }
    }
    MultilayerGraph::from_indexed(n, layers, &edges)
}

/// One Erdős–Rényi snapshot per timestamp 0..timestamps.
pub fn random_temporal(n: usize, timestamps: usize, p: f64, seed: u64) -> TemporalGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for t in 0..timestamps {
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen::<f64>() < p {
                    edges.push((u as VertexId, v as VertexId, t as u64));
                }
            }
        }
    }
    TemporalGraph::from_indexed(n, timestamps, &edges)
}

/// Erdős–Rényi with a fair ±1 sign on each edge that appears.
pub fn random_signed(n: usize, p: f64, seed: u64) -> SignedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                let sign = if rng.gen::<bool>() { 1i8 } else { -1i8 };
                edges.push((u as VertexId, v as VertexId, sign));
            }
        }
    }
    SignedGraph::from_indexed(n, &edges)
}
