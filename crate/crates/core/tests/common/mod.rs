//! Shared helpers for the integration tests.
#![allow(dead_code)]

use gsep_core::graph::{Field, WeightedGraph};
use gsep_core::matrix::HermitianMatrix;
use gsep_core::{DensityMatrix, Tolerances, C64};

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn tols() -> Tolerances {
    Tolerances::default()
}

/// SplitMix64, for deterministic pseudo-random test inputs.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [-1, 1).
    pub fn next_signed(&mut self) -> f64 {
        self.next_f64() * 2.0 - 1.0
    }
}

pub fn random_hermitian(rng: &mut SplitMix64, dim: usize) -> HermitianMatrix {
    HermitianMatrix::from_upper(dim, |i, j| {
        if i == j {
            c(rng.next_signed(), 0.0)
        } else {
            c(rng.next_signed(), rng.next_signed())
        }
    })
}

/// Random density operator built as a normalised random PSD matrix.
pub fn random_density(rng: &mut SplitMix64, dim: usize) -> DensityMatrix {
    // Gram matrix of random vectors is PSD
    let cols: Vec<Vec<C64>> = (0..dim)
        .map(|_| {
            (0..dim)
                .map(|_| c(rng.next_signed(), rng.next_signed()))
                .collect()
        })
        .collect();
    let gram = HermitianMatrix::from_upper(dim, |i, j| {
        cols[i]
            .iter()
            .zip(cols[j].iter())
            .map(|(a, b)| a * b.conj())
            .sum()
    });
    let trace = gram.trace();
    DensityMatrix::new(gram.scaled(1.0 / trace), &tols()).expect("gram state is valid")
}

/// Random simple graph with edge probability `p`; may be empty.
pub fn random_simple_graph(rng: &mut SplitMix64, n_qubits: u32, p: f64) -> WeightedGraph {
    let mut g = WeightedGraph::new(n_qubits, Field::Real).unwrap();
    let d = g.vertex_count();
    for u in 1..=d {
        for v in (u + 1)..=d {
            if rng.next_f64() < p {
                g.add_edge(u, v, c(1.0, 0.0)).unwrap();
            }
        }
    }
    g
}

/// Random complex-weighted graph with unit-modulus weights and no loops;
/// always defines a valid state unless empty.
pub fn random_complex_graph(rng: &mut SplitMix64, n_qubits: u32, p: f64) -> WeightedGraph {
    let mut g = WeightedGraph::new(n_qubits, Field::Complex).unwrap();
    let d = g.vertex_count();
    for u in 1..=d {
        for v in (u + 1)..=d {
            if rng.next_f64() < p {
                let phase = rng.next_f64() * core::f64::consts::TAU;
                g.add_edge(u, v, C64::from_polar(1.0, phase)).unwrap();
            }
        }
    }
    g
}
