//! Error types for graph construction, parsing, and the matrix kernel.

use alloc::string::String;
use core::fmt;

/// Errors from building or transforming a weighted graph.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphError {
    /// Vertex index outside `1..=2^n`.
    RangeError { vertex: usize, max: usize },
    /// Edge endpoints coincide.
    SelfPair { vertex: usize },
    /// Zero-weight edges are not stored.
    ZeroWeight { u: usize, v: usize },
    /// Imaginary weight in a real-field graph.
    FieldMismatch { context: &'static str },
    /// The unordered pair already carries a weight.
    DuplicateEdge { u: usize, v: usize },
    /// Two distinct edges map onto the same pair with different weights.
    EdgeCollision {
        source_a: (usize, usize),
        source_b: (usize, usize),
        target: (usize, usize),
    },
    /// More qubits than the supported cap (10).
    TooManyQubits { n_qubits: u32 },
    /// Qubit count must be at least one.
    NoQubits,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::RangeError { vertex, max } => {
                write!(f, "vertex {vertex} out of range 1..={max}")
            }
            GraphError::SelfPair { vertex } => write!(f, "edge from vertex {vertex} to itself"),
            GraphError::ZeroWeight { u, v } => write!(f, "zero-weight edge ({u},{v})"),
            GraphError::FieldMismatch { context } => {
                write!(f, "imaginary weight in a real-field graph ({context})")
            }
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u},{v})"),
            GraphError::EdgeCollision {
                source_a,
                source_b,
                target,
            } => write!(
                f,
                "edges {source_a:?} and {source_b:?} collide on {target:?} with conflicting weights"
            ),
            GraphError::TooManyQubits { n_qubits } => {
                write!(f, "{n_qubits} qubits exceeds the supported cap of 10")
            }
            GraphError::NoQubits => write!(f, "graph needs at least one qubit"),
        }
    }
}

/// Errors from the text graph format.
#[derive(Debug, Clone, PartialEq)]
pub enum ParseError {
    SyntaxError {
        line: usize,
        column: usize,
        detail: String,
    },
    RangeError {
        line: usize,
        detail: String,
    },
    FieldMismatch {
        line: usize,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::SyntaxError {
                line,
                column,
                detail,
            } => {
                write!(f, "syntax error at line {line}, column {column}: {detail}")
            }
            ParseError::RangeError { line, detail } => {
                write!(f, "range error at line {line}: {detail}")
            }
            ParseError::FieldMismatch { line } => {
                write!(f, "imaginary weight in a real-field graph at line {line}")
            }
        }
    }
}

/// Errors from the dense matrix kernel.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixError {
    DimensionMismatch { expected: usize, got: usize },
    NotHermitian { max_asymmetry: f64 },
    NotPowerOfTwo { dim: usize },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            MatrixError::NotHermitian { max_asymmetry } => {
                write!(
                    f,
                    "matrix is not Hermitian (max asymmetry {max_asymmetry:e})"
                )
            }
            MatrixError::NotPowerOfTwo { dim } => {
                write!(f, "dimension {dim} is not a power of two")
            }
        }
    }
}

/// Eigensolver failure after the sweep cap.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceFailure {
    pub sweeps: usize,
    pub off_diagonal: f64,
}

impl fmt::Display for ConvergenceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "eigensolver did not converge in {} sweeps (off-diagonal norm {:e})",
            self.sweeps, self.off_diagonal
        )
    }
}

/// A graph whose Laplacian does not define a quantum state.
#[derive(Debug, Clone, PartialEq)]
pub enum DensityError {
    ZeroOrNegativeTrace { trace: f64 },
    NotPositiveSemidefinite { min_eigenvalue: f64 },
    TraceNotUnit { trace: f64 },
    Eig(ConvergenceFailure),
}

impl fmt::Display for DensityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityError::ZeroOrNegativeTrace { trace } => {
                write!(f, "Laplacian trace {trace:e} is not positive")
            }
            DensityError::NotPositiveSemidefinite { min_eigenvalue } => {
                write!(
                    f,
                    "not positive semidefinite (eigenvalue {min_eigenvalue:e})"
                )
            }
            DensityError::TraceNotUnit { trace } => write!(f, "trace {trace} is not 1"),
            DensityError::Eig(e) => write!(f, "{e}"),
        }
    }
}

impl From<ConvergenceFailure> for DensityError {
    fn from(e: ConvergenceFailure) -> Self {
        DensityError::Eig(e)
    }
}

/// A witness whose certificates fail their semidefinite invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct InfeasibleWitness {
    pub detail: String,
}

impl fmt::Display for InfeasibleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "infeasible witness: {}", self.detail)
    }
}

/// Invalid fixture parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct FixtureError {
    pub detail: String,
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid fixture parameter: {}", self.detail)
    }
}

impl core::error::Error for GraphError {}
impl core::error::Error for ParseError {}
impl core::error::Error for MatrixError {}
impl core::error::Error for ConvergenceFailure {}
impl core::error::Error for DensityError {}
impl core::error::Error for InfeasibleWitness {}
impl core::error::Error for FixtureError {}
