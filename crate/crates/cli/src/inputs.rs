//! Input resolution: graph files, fixture ids, and appendix state parameters.

use anyhow::{anyhow, bail, Context, Result};
use gsep_core::fixtures::{appendix_state, example_graph, GraphFixture, StateFixture};
use gsep_core::graph::WeightedGraph;
use gsep_core::{Cut, DensityMatrix, Tolerances};
use sha2::{Digest, Sha256};
use std::path::Path;

use crate::jsongraph::{canonical_text, load_graph_str};

/// Optional parameters for the state families.
#[derive(Debug, Clone, Copy, Default)]
pub struct StateParams {
    pub theta: Option<f64>,
    pub phi: Option<f64>,
    pub a: Option<f64>,
    pub delta: Option<f64>,
    pub nparam: Option<u64>,
}

impl StateParams {
    fn theta(&self) -> f64 {
        self.theta.unwrap_or(std::f64::consts::FRAC_PI_4)
    }

    fn phi(&self) -> f64 {
        self.phi.unwrap_or(0.0)
    }
}

/// Resolves an appendix state id with its parameters.
pub fn resolve_state(id: &str, params: &StateParams) -> Result<StateFixture> {
    Ok(match id {
        "ket00" => StateFixture::Ket00,
        "ket000" => StateFixture::Ket000,
        "cos_sin_2q" => StateFixture::CosSin2q {
            theta: params.theta(),
        },
        "uniform_2q" => StateFixture::Uniform2q,
        "one_exc_3q" => StateFixture::OneExc3q {
            theta: params.theta(),
            phi: params.phi(),
        },
        "two_exc_3q" => StateFixture::TwoExc3q {
            theta: params.theta(),
            phi: params.phi(),
        },
        "werner_like" => StateFixture::WernerLike {
            a: params.a.unwrap_or(0.5),
        },
        "mems" => StateFixture::Mems {
            delta: params.delta.unwrap_or(0.5),
        },
        "ghz" => StateFixture::Ghz {
            theta: params.theta(),
            phi: params.phi(),
        },
        "w3" => StateFixture::W3,
        "w_type" => StateFixture::WType {
            n: params.nparam.unwrap_or(1),
            delta: params.delta.unwrap_or(0.0),
        },
        other => bail!("unknown state id '{other}'"),
    })
}

/// Descriptor string for a state fixture, parameters included.
pub fn state_descriptor(state: &StateFixture) -> String {
    match state {
        StateFixture::CosSin2q { theta } => format!("cos_sin_2q(theta={theta})"),
        StateFixture::OneExc3q { theta, phi } => {
            format!("one_exc_3q(theta={theta},phi={phi})")
        }
        StateFixture::TwoExc3q { theta, phi } => {
            format!("two_exc_3q(theta={theta},phi={phi})")
        }
        StateFixture::WernerLike { a } => format!("werner_like(a={a})"),
        StateFixture::Mems { delta } => format!("mems(delta={delta})"),
        StateFixture::Ghz { theta, phi } => format!("ghz(theta={theta},phi={phi})"),
        StateFixture::WType { n, delta } => format!("w_type(n={n},delta={delta})"),
        other => other.id_str().to_string(),
    }
}

/// Loads a graph from a path, accepting the text format or its JSON mirror,
/// and returns it with its content-hash descriptor. A bare fixture id (`g1`,
/// `k4_complete`, ...) is accepted in place of a path.
pub fn load_graph_file(path: &Path) -> Result<(WeightedGraph, String)> {
    if !path.exists() {
        if let Some(id) = path.to_str().and_then(GraphFixture::parse) {
            return Ok((example_graph(id), id.as_str().to_string()));
        }
    }
    let content =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let graph =
        load_graph_str(&content).with_context(|| format!("cannot parse {}", path.display()))?;
    let descriptor = format!("file:sha256:{}", content_hash(&canonical_text(&graph)));
    Ok((graph, descriptor))
}

pub fn content_hash(content: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(content.as_bytes());
    let digest = hasher.finalize();
    let mut hex = String::with_capacity(16);
    for byte in digest.iter().take(8) {
        hex.push_str(&format!("{byte:02x}"));
    }
    hex
}

/// Fixture graph by id.
pub fn resolve_graph_fixture(id: &str) -> Result<(WeightedGraph, Cut)> {
    let fixture = GraphFixture::parse(id).ok_or_else(|| anyhow!("unknown graph id '{id}'"))?;
    Ok((example_graph(fixture), fixture.canonical_cut()))
}

/// Constructs the density operator of a state fixture.
pub fn build_state(state: &StateFixture, tol: &Tolerances) -> Result<DensityMatrix> {
    appendix_state(*state, tol).map_err(|e| anyhow!("{e}"))
}
