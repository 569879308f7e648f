//! Separability criteria catalog.
//!
//! Criteria only ever answer `Separable` (with a witness where one exists) or
//! `Inconclusive`; claiming entanglement is the oracle's job. Everything here
//! is a pure function, so callers may evaluate criteria in parallel as long
//! as results are emitted in catalog order.

mod relations;
mod spectral;
mod structural;
mod th1;

pub use relations::{
    commuting_relation, commuting_relation_equivalence, relation_properties, FiniteRelation,
    RelationProperties,
};
pub use spectral::spectral_neighbourhood_check;
pub use structural::{
    blockrow_cardinality_equivalence, density_partial_gate_invariance, edge_parity_check,
    graph_partial_gate_invariance, last_qubit_sigma_x_invariance,
    neighbourhood_cardinality_equivalence, neighbourhood_parity_shift_check,
    neighbourhood_swap_check, paired_edge_parity_check, same_block_edges_check, ShiftMode,
};
pub use th1::{
    c1_check, th1_check, th1_expand_witness, th3_commuting_blocks, PairCertificate,
    SeparableDecomposition, Th1Witness,
};

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cut::Cut;
use crate::density::DensityMatrix;
use crate::graph::WeightedGraph;
use crate::tol::Tolerances;

/// Stable identifiers for every criterion, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CriterionId {
    Th1,
    C1,
    Th3,
    EdgeParity,
    SameBlock,
    GraphPgateInv,
    DensityPgateInv,
    LastQubitSx,
    PairedEdge,
    NbhdSwap,
    NbhdShiftOffdiag,
    NbhdShiftAll,
    NbhdCardEquiv,
    BlockrowCardEquiv,
    CommuteEquiv,
    SpectralNbhd,
}

impl CriterionId {
    pub const ALL: [CriterionId; 16] = [
        CriterionId::Th1,
        CriterionId::C1,
        CriterionId::Th3,
        CriterionId::EdgeParity,
        CriterionId::SameBlock,
        CriterionId::GraphPgateInv,
        CriterionId::DensityPgateInv,
        CriterionId::LastQubitSx,
        CriterionId::PairedEdge,
        CriterionId::NbhdSwap,
        CriterionId::NbhdShiftOffdiag,
        CriterionId::NbhdShiftAll,
        CriterionId::NbhdCardEquiv,
        CriterionId::BlockrowCardEquiv,
        CriterionId::CommuteEquiv,
        CriterionId::SpectralNbhd,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CriterionId::Th1 => "th1",
            CriterionId::C1 => "c1",
            CriterionId::Th3 => "th3",
            CriterionId::EdgeParity => "edge-parity",
            CriterionId::SameBlock => "same-block",
            CriterionId::GraphPgateInv => "graph-pgate-inv",
            CriterionId::DensityPgateInv => "density-pgate-inv",
            CriterionId::LastQubitSx => "last-qubit-sx",
            CriterionId::PairedEdge => "paired-edge",
            CriterionId::NbhdSwap => "nbhd-swap",
            CriterionId::NbhdShiftOffdiag => "nbhd-shift-offdiag",
            CriterionId::NbhdShiftAll => "nbhd-shift-all",
            CriterionId::NbhdCardEquiv => "nbhd-card-equiv",
            CriterionId::BlockrowCardEquiv => "blockrow-card-equiv",
            CriterionId::CommuteEquiv => "commute-equiv",
            CriterionId::SpectralNbhd => "spectral-nbhd",
        }
    }

    pub fn parse(s: &str) -> Option<CriterionId> {
        CriterionId::ALL.iter().copied().find(|c| c.as_str() == s)
    }

    /// Criteria that need the graph itself, not just its density operator.
    pub fn needs_graph(&self) -> bool {
        matches!(
            self,
            CriterionId::EdgeParity
                | CriterionId::SameBlock
                | CriterionId::GraphPgateInv
                | CriterionId::PairedEdge
                | CriterionId::NbhdSwap
                | CriterionId::NbhdShiftOffdiag
                | CriterionId::NbhdShiftAll
                | CriterionId::NbhdCardEquiv
                | CriterionId::BlockrowCardEquiv
                | CriterionId::SpectralNbhd
        )
    }
}

/// Outcome of a criterion. `Separable` carries the witness when the criterion
/// is constructive (TH1 and C1).
#[derive(Debug, Clone)]
pub enum Verdict {
    Separable {
        criterion: CriterionId,
        witness: Option<Box<Th1Witness>>,
    },
    Inconclusive {
        diagnostic: String,
    },
}

impl Verdict {
    pub fn separable(criterion: CriterionId) -> Self {
        Verdict::Separable {
            criterion,
            witness: None,
        }
    }

    pub fn is_separable(&self) -> bool {
        matches!(self, Verdict::Separable { .. })
    }

    pub fn witness(&self) -> Option<&Th1Witness> {
        match self {
            Verdict::Separable { witness, .. } => witness.as_deref(),
            Verdict::Inconclusive { .. } => None,
        }
    }

    pub fn diagnostic(&self) -> Option<&str> {
        match self {
            Verdict::Inconclusive { diagnostic } => Some(diagnostic),
            Verdict::Separable { .. } => None,
        }
    }
}

/// What a criterion is evaluated against.
#[derive(Clone, Copy)]
pub enum AnalysisInput<'a> {
    /// Graph plus its density operator: the full catalog applies.
    Graph(&'a WeightedGraph, &'a DensityMatrix),
    /// Density operator only: graph-structural criteria are skipped.
    Density(&'a DensityMatrix),
}

impl<'a> AnalysisInput<'a> {
    pub fn density(&self) -> &'a DensityMatrix {
        match self {
            AnalysisInput::Graph(_, rho) => rho,
            AnalysisInput::Density(rho) => rho,
        }
    }

    pub fn graph(&self) -> Option<&'a WeightedGraph> {
        match self {
            AnalysisInput::Graph(g, _) => Some(g),
            AnalysisInput::Density(_) => None,
        }
    }
}

/// Runs one criterion; `None` when it does not apply to the input kind.
pub fn evaluate_criterion(
    id: CriterionId,
    input: AnalysisInput<'_>,
    cut: Cut,
    tol: &Tolerances,
) -> Option<Verdict> {
    let rho = input.density();
    if id.needs_graph() {
        let g = input.graph()?;
        Some(match id {
            CriterionId::EdgeParity => edge_parity_check(g, cut),
            CriterionId::SameBlock => same_block_edges_check(g, cut),
            CriterionId::GraphPgateInv => graph_partial_gate_invariance(g, cut),
            CriterionId::PairedEdge => paired_edge_parity_check(g, cut),
            CriterionId::NbhdSwap => neighbourhood_swap_check(g, cut),
            CriterionId::NbhdShiftOffdiag => {
                neighbourhood_parity_shift_check(g, cut, ShiftMode::OffDiagonalOnly)
            }
            CriterionId::NbhdShiftAll => {
                neighbourhood_parity_shift_check(g, cut, ShiftMode::AllPairs)
            }
            CriterionId::NbhdCardEquiv => neighbourhood_cardinality_equivalence(g, cut),
            CriterionId::BlockrowCardEquiv => blockrow_cardinality_equivalence(g, cut),
            CriterionId::SpectralNbhd => spectral_neighbourhood_check(g, tol),
            _ => unreachable!(),
        })
    } else {
        Some(match id {
            CriterionId::Th1 => th1_check(rho, cut, tol),
            CriterionId::C1 => c1_check(rho, cut, tol),
            CriterionId::Th3 => th3_commuting_blocks(rho, cut, tol),
            CriterionId::DensityPgateInv => density_partial_gate_invariance(rho, cut, tol),
            CriterionId::LastQubitSx => last_qubit_sigma_x_invariance(rho, tol),
            CriterionId::CommuteEquiv => commuting_relation_equivalence(rho, cut, tol),
            _ => unreachable!(),
        })
    }
}

/// Evaluates the whole catalog in order, skipping criteria that do not apply.
pub fn run_all(
    input: AnalysisInput<'_>,
    cut: Cut,
    tol: &Tolerances,
) -> Vec<(CriterionId, Verdict)> {
    CriterionId::ALL
        .iter()
        .filter_map(|&id| evaluate_criterion(id, input, cut, tol).map(|v| (id, v)))
        .collect()
}
