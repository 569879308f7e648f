//! Bipartition cuts, block-grid views, and the partial gate / partial
//! transpose maps on density operators.
//!
//! A cut splits `n` qubits into the outer first `m` and the inner last
//! `n − m`. Flat vertex index `(outer − 1)·2^{n−m} + inner` (1-based), so a
//! `2^n` matrix becomes a `2^m × 2^m` grid of `2^{n−m} × 2^{n−m}` blocks.

use alloc::vec::Vec;

use crate::error::MatrixError;
use crate::matrix::{CMatrix, HermitianMatrix};

/// Bipartition of `n` qubits after the first `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cut {
    n_qubits: u32,
    m: u32,
}

impl Cut {
    /// Requires `1 ≤ m < n` and `n ≤ 10`.
    pub fn new(n_qubits: u32, m: u32) -> Result<Self, MatrixError> {
        if n_qubits > 10 {
            return Err(MatrixError::DimensionMismatch {
                expected: 10,
                got: n_qubits as usize,
            });
        }
        if m == 0 || m >= n_qubits {
            return Err(MatrixError::DimensionMismatch {
                expected: n_qubits as usize - 1,
                got: m as usize,
            });
        }
        Ok(Self { n_qubits, m })
    }

    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn d_out(&self) -> usize {
        1 << self.m
    }

    pub fn d_in(&self) -> usize {
        1 << (self.n_qubits - self.m)
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    /// 1-based flat index of a coordinate.
    pub fn flat(&self, coord: VertexCoord) -> usize {
        (coord.outer - 1) * self.d_in() + coord.inner
    }

    /// Coordinate of a 1-based flat index.
    pub fn coord(&self, flat: usize) -> VertexCoord {
        let din = self.d_in();
        VertexCoord {
            outer: (flat - 1) / din + 1,
            inner: (flat - 1) % din + 1,
        }
    }
}

/// Vertex label `(i, j)`: outer index in `1..=2^m`, inner in `1..=2^{n−m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexCoord {
    pub outer: usize,
    pub inner: usize,
}

/// Which tensor factor an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Inner,
    Outer,
}

/// Block view of a square matrix under a cut.
#[derive(Debug, Clone)]
pub struct BlockGrid {
    cut: Cut,
    blocks: Vec<CMatrix>, // row-major d_out × d_out
}

impl BlockGrid {
    pub fn cut(&self) -> Cut {
        self.cut
    }

    /// Block `A^{xy}`, 1-based.
    pub fn block(&self, x: usize, y: usize) -> &CMatrix {
        &self.blocks[(x - 1) * self.cut.d_out() + (y - 1)]
    }

    pub fn blocks(&self) -> &[CMatrix] {
        &self.blocks
    }
}

/// Cuts a matrix into its block grid.
pub fn block_grid(rho: &CMatrix, cut: Cut) -> Result<BlockGrid, MatrixError> {
    if rho.dim() != cut.dim() {
        return Err(MatrixError::DimensionMismatch {
            expected: cut.dim(),
            got: rho.dim(),
        });
    }
    let (dout, din) = (cut.d_out(), cut.d_in());
    let mut blocks = Vec::with_capacity(dout * dout);
    for x in 0..dout {
        for y in 0..dout {
            blocks.push(CMatrix::from_fn(din, |i, j| {
                rho.get(x * din + i, y * din + j)
            }));
        }
    }
    Ok(BlockGrid { cut, blocks })
}

/// Exact inverse of [`block_grid`].
pub fn reassemble(grid: &BlockGrid) -> CMatrix {
    let (dout, din) = (grid.cut.d_out(), grid.cut.d_in());
    CMatrix::from_fn(dout * din, |i, j| {
        grid.blocks[(i / din) * dout + (j / din)].get(i % din, j % din)
    })
}

/// Partial quantum gate on a density operator.
///
/// Per entry, the gate is the identity on the outer qubits and flips exactly
/// the inner qubit labels where row and column differ; the net effect moves
/// the entry at `(outer_r:inner_r, outer_c:inner_c)` to
/// `(outer_r:inner_c, outer_c:inner_r)` — the partial transpose of the inner
/// factor, as an exact entry permutation.
pub fn partial_gate_density(rho: &CMatrix, cut: Cut) -> Result<CMatrix, MatrixError> {
    partial_transpose(rho, cut, Side::Inner)
}

/// Partial gate followed by entrywise conjugation; for a Hermitian input
/// this equals the outer partial transpose.
pub fn conj_partial_gate_density(rho: &CMatrix, cut: Cut) -> Result<CMatrix, MatrixError> {
    Ok(partial_transpose(rho, cut, Side::Inner)?.conj())
}

/// Transposes the designated tensor factor.
pub fn partial_transpose(rho: &CMatrix, cut: Cut, side: Side) -> Result<CMatrix, MatrixError> {
    if rho.dim() != cut.dim() {
        return Err(MatrixError::DimensionMismatch {
            expected: cut.dim(),
            got: rho.dim(),
        });
    }
    let din = cut.d_in();
    Ok(CMatrix::from_fn(rho.dim(), |i, j| {
        let (or, ir) = (i / din, i % din);
        let (oc, ic) = (j / din, j % din);
        match side {
            Side::Inner => rho.get(or * din + ic, oc * din + ir),
            Side::Outer => rho.get(oc * din + ir, or * din + ic),
        }
    }))
}

/// Hermitian-preserving partial transpose.
pub fn partial_transpose_hermitian(
    rho: &HermitianMatrix,
    cut: Cut,
    side: Side,
) -> Result<HermitianMatrix, MatrixError> {
    let m = partial_transpose(rho.matrix(), cut, side)?;
    // permutation of an exactly Hermitian matrix stays exactly Hermitian
    HermitianMatrix::new(m)
}

/// Frobenius norm of `AB − BA`.
pub fn commutator_norm(a: &CMatrix, b: &CMatrix) -> Result<f64, MatrixError> {
    if a.dim() != b.dim() {
        return Err(MatrixError::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    Ok(a.matmul(b).sub(&b.matmul(a)).frobenius_norm())
}
