//! Seeded random graph ensembles.
//!
//! Reproducibility contract: all randomness comes from one SplitMix64 stream
//! seeded with the [`EnsembleSpec`] 64-bit seed, consumed in a fixed order,
//! so an [`EnsembleSpec`] identifies its ensemble bit-for-bit.

use anyhow::{bail, Result};
use gsep_core::eig::hermitian_eig;
use gsep_core::graph::{Field, WeightedGraph};
use gsep_core::{Tolerances, C64};
use serde::{Deserialize, Serialize};

/// SplitMix64 (Steele, Lea, Flood 2014): `state += 0x9E3779B97F4A7C15`,
/// output mixed with xor-shift-multiply constants `0xBF58476D1CE4E5B9` and
/// `0x94D049BB133111EB`.
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

    /// Uniform in [0, 1): the top 53 bits scaled by 2⁻⁵³.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Edge weight modes for generated graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightMode {
    /// Unit weights, no loops.
    Simple,
    /// Weights uniform in [−3, 3]; a uniform loop shift `max(0, −λ_min(L))`
    /// is added to every vertex so the state is always well defined.
    Real,
    /// Unit-modulus random-phase weights, no loops (diagonally dominant).
    Complex,
}

impl WeightMode {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "simple" => WeightMode::Simple,
            "real" => WeightMode::Real,
            "complex" => WeightMode::Complex,
            other => bail!("unknown weight mode '{other}'"),
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            WeightMode::Simple => "simple",
            WeightMode::Real => "real",
            WeightMode::Complex => "complex",
        }
    }
}

/// Deterministic description of a graph ensemble.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub qubits: u32,
    pub count: usize,
    pub seed: u64,
    pub weights: WeightMode,
    pub p: f64,
    pub cuts: Vec<u32>,
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<()> {
        if self.qubits == 0 || self.qubits > 10 {
            bail!("qubits must be in 1..=10");
        }
        if !(self.p > 0.0 && self.p < 1.0) {
            bail!("edge probability must lie strictly inside (0, 1)");
        }
        if self.cuts.is_empty() {
            bail!("at least one cut is required");
        }
        for &m in &self.cuts {
            if m == 0 || m >= self.qubits {
                bail!("cut {m} is not in 1..{}", self.qubits);
            }
        }
        Ok(())
    }
}

/// Generates the ensemble.
///
/// Draw order, per graph: pairs `(u, v)` with `u < v` ascend
/// lexicographically; one uniform decides presence, and for the weighted
/// modes one further uniform immediately after decides the weight
/// (`−3 + 6f`, or phase `2πf`).
pub fn generate_ensemble(spec: &EnsembleSpec, tol: &Tolerances) -> Result<Vec<WeightedGraph>> {
    spec.validate()?;
    let mut rng = SplitMix64::new(spec.seed);
    let d = 1usize << spec.qubits;
    let field = match spec.weights {
        WeightMode::Complex => Field::Complex,
        _ => Field::Real,
    };
    let mut out = Vec::with_capacity(spec.count);
    for _ in 0..spec.count {
        let mut g = WeightedGraph::new(spec.qubits, field)?;
        for u in 1..=d {
            for v in (u + 1)..=d {
                if rng.next_f64() >= spec.p {
                    continue;
                }
                let w = match spec.weights {
                    WeightMode::Simple => C64::new(1.0, 0.0),
                    WeightMode::Real => C64::new(-3.0 + 6.0 * rng.next_f64(), 0.0),
                    WeightMode::Complex => {
                        C64::from_polar(1.0, core::f64::consts::TAU * rng.next_f64())
                    }
                };
                if w != C64::new(0.0, 0.0) {
                    g.add_edge(u, v, w)?;
                }
            }
        }
        if spec.weights == WeightMode::Real && g.edge_count() > 0 {
            let lambda_min = hermitian_eig(&g.laplacian(), tol)
                .map_err(|e| anyhow::anyhow!("{e}"))?
                .values[0];
            let shift = (-lambda_min).max(0.0);
            if shift > 0.0 {
                for v in 1..=d {
                    g.add_loop(v, C64::new(shift, 0.0))?;
                }
            }
        }
        out.push(g);
    }
    Ok(out)
}
