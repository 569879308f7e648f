//! Weighted graphs on `2^n` vertices and the Laplacian states they define.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::cut::Cut;
use crate::density::DensityMatrix;
use crate::error::{DensityError, GraphError};
use crate::matrix::HermitianMatrix;
use crate::tol::Tolerances;
use crate::C64;

/// Weight field of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

/// Weighted graph on `2^n` vertices, 1-based indices.
///
/// Edge weights are stored once per unordered pair `(min, max)`; in the
/// complex field the reverse direction is implied conjugate. Loop weights are
/// real in both fields.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n_qubits: u32,
    field: Field,
    edges: BTreeMap<(usize, usize), C64>,
    loops: BTreeMap<usize, C64>,
}

impl WeightedGraph {
    pub fn new(n_qubits: u32, field: Field) -> Result<Self, GraphError> {
        if n_qubits == 0 {
            return Err(GraphError::NoQubits);
        }
        if n_qubits > 10 {
            return Err(GraphError::TooManyQubits { n_qubits });
        }
        Ok(Self {
            n_qubits,
            field,
            edges: BTreeMap::new(),
            loops: BTreeMap::new(),
        })
    }

    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.n_qubits
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.vertex_count() {
            Err(GraphError::RangeError {
                vertex: v,
                max: self.vertex_count(),
            })
        } else {
            Ok(())
        }
    }

    /// Adds the edge `{u, v}` with weight `a_uv`. Storage is canonical on the
    /// ordered pair `(min, max)`, so for `u > v` the conjugate is kept.
    pub fn add_edge(&mut self, u: usize, v: usize, w: C64) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfPair { vertex: u });
        }
        if w == C64::new(0.0, 0.0) {
            return Err(GraphError::ZeroWeight { u, v });
        }
        if self.field == Field::Real && w.im != 0.0 {
            return Err(GraphError::FieldMismatch {
                context: "edge weight",
            });
        }
        let (key, kw) = if u < v {
            ((u, v), w)
        } else {
            ((v, u), w.conj())
        };
        if self.edges.contains_key(&key) {
            return Err(GraphError::DuplicateEdge { u: key.0, v: key.1 });
        }
        self.edges.insert(key, kw);
        Ok(())
    }

    /// Sets the loop weight on a vertex (real-valued in both fields).
    pub fn add_loop(&mut self, v: usize, w: C64) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        if w.im != 0.0 {
            return Err(GraphError::FieldMismatch {
                context: "loop weight",
            });
        }
        self.loops.insert(v, w);
        Ok(())
    }

    pub fn edges(&self) -> &BTreeMap<(usize, usize), C64> {
        &self.edges
    }

    pub fn loops(&self) -> &BTreeMap<usize, C64> {
        &self.loops
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All weights one and no loops.
    pub fn is_simple(&self) -> bool {
        self.loops.is_empty() && self.edges.values().all(|w| *w == C64::new(1.0, 0.0))
    }

    /// Open neighbourhood: adjacent vertices, excluding `v` itself.
    pub fn open_neighbourhood(&self, v: usize) -> BTreeSet<usize> {
        self.edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Closed neighbourhood: open neighbourhood plus `v`; an isolated vertex
    /// has only itself.
    pub fn closed_neighbourhood(&self, v: usize) -> BTreeSet<usize> {
        let mut n = self.open_neighbourhood(v);
        n.insert(v);
        n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.open_neighbourhood(v).len()
    }

    /// Graph Laplacian under the field-specific convention.
    ///
    /// Real: `L_ii = Σ a_il + loop_i`, `L_ij = −a_ij`.
    /// Complex: `L_ii = Σ |a_ij| + loop_i`, `L_ij = +a_ij`, `L_ji = conj`.
    /// Hermitian by construction in both cases.
    pub fn laplacian(&self) -> HermitianMatrix {
        let d = self.vertex_count();
        let mut diag = alloc::vec![0.0f64; d];
        let mut off: BTreeMap<(usize, usize), C64> = BTreeMap::new();
        for (&(u, v), &w) in &self.edges {
            match self.field {
                Field::Real => {
                    diag[u - 1] += w.re;
                    diag[v - 1] += w.re;
                    off.insert((u - 1, v - 1), C64::new(-w.re, 0.0));
                }
                Field::Complex => {
                    diag[u - 1] += w.norm();
                    diag[v - 1] += w.norm();
                    off.insert((u - 1, v - 1), w);
                }
            }
        }
        for (&v, &w) in &self.loops {
            diag[v - 1] += w.re;
        }
        HermitianMatrix::from_upper(d, |i, j| {
            if i == j {
                C64::new(diag[i], 0.0)
            } else {
                off.get(&(i, j)).copied().unwrap_or(C64::new(0.0, 0.0))
            }
        })
    }

    /// Density operator `ρ_G = L / Tr L`.
    pub fn density(&self, tol: &Tolerances) -> Result<DensityMatrix, DensityError> {
        let lap = self.laplacian();
        let trace = lap.trace();
        if trace <= tol.structural * lap.scale().max(1.0) {
            return Err(DensityError::ZeroOrNegativeTrace { trace });
        }
        DensityMatrix::new(lap.scaled(1.0 / trace), tol)
    }

    /// Partial quantum gate on the graph: per edge, the identity on the outer
    /// labels and a bit-flip on every inner qubit where the endpoints differ,
    /// which swaps the endpoints' inner indices. Loops are unchanged.
    ///
    /// The map is an involution on unordered pairs, so distinct edges cannot
    /// collide on a valid graph; the error is kept for defence in depth.
    pub fn partial_gate(&self, cut: Cut) -> Result<WeightedGraph, GraphError> {
        debug_assert_eq!(cut.dim(), self.vertex_count());
        let mut out = WeightedGraph::new(self.n_qubits, self.field)?;
        out.loops = self.loops.clone();
        let mut origin: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
        for (&(u, v), &w) in &self.edges {
            let cu = cut.coord(u);
            let cv = cut.coord(v);
            let nu = cut.flat(crate::cut::VertexCoord {
                outer: cu.outer,
                inner: cv.inner,
            });
            let nv = cut.flat(crate::cut::VertexCoord {
                outer: cv.outer,
                inner: cu.inner,
            });
            // weight follows the ordered image (nu, nv); storage is (min, max)
            let (key, kw) = if nu <= nv {
                ((nu, nv), w)
            } else {
                ((nv, nu), w.conj())
            };
            origin.entry(key).or_insert((u, v));
            if let Some(&existing) = out.edges.get(&key) {
                if existing != kw {
                    return Err(GraphError::EdgeCollision {
                        source_a: origin[&key],
                        source_b: (u, v),
                        target: key,
                    });
                }
            } else {
                out.edges.insert(key, kw);
            }
        }
        Ok(out)
    }

    /// Degree sequence sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (1..=self.vertex_count()).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        seq
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn single_edge_laplacian() {
        let mut g = WeightedGraph::new(1, Field::Real).unwrap();
        g.add_edge(1, 2, c(1.0, 0.0)).unwrap();
        let l = g.laplacian();
        assert_eq!(l.get(0, 0), c(1.0, 0.0));
        assert_eq!(l.get(0, 1), c(-1.0, 0.0));
        assert_eq!(l.get(1, 0), c(-1.0, 0.0));
        assert_eq!(l.get(1, 1), c(1.0, 0.0));
    }

    #[test]
    fn real_field_rejects_imaginary_weight() {
        let mut g = WeightedGraph::new(1, Field::Real).unwrap();
        assert!(matches!(
            g.add_edge(1, 2, c(1.0, 0.5)),
            Err(GraphError::FieldMismatch { .. })
        ));
    }

    #[test]
    fn range_and_self_pair_checks() {
        let mut g = WeightedGraph::new(2, Field::Real).unwrap();
        assert!(matches!(
            g.add_edge(1, 5, c(1.0, 0.0)),
            Err(GraphError::RangeError { vertex: 5, max: 4 })
        ));
        assert!(matches!(
            g.add_edge(2, 2, c(1.0, 0.0)),
            Err(GraphError::SelfPair { vertex: 2 })
        ));
    }

    #[test]
    fn neighbourhoods() {
        let mut g = WeightedGraph::new(2, Field::Real).unwrap();
        g.add_edge(1, 2, c(1.0, 0.0)).unwrap();
        g.add_edge(1, 3, c(1.0, 0.0)).unwrap();
        assert_eq!(g.open_neighbourhood(1), BTreeSet::from([2, 3]));
        assert_eq!(g.closed_neighbourhood(4), BTreeSet::from([4]));
        assert_eq!(g.open_neighbourhood(4), BTreeSet::new());
    }

    #[test]
    fn negative_loop_breaks_psd() {
        // loop -1 on an isolated vertex plus one unit edge elsewhere
        let mut g = WeightedGraph::new(2, Field::Real).unwrap();
        g.add_loop(1, c(-1.0, 0.0)).unwrap();
        g.add_edge(3, 4, c(1.0, 0.0)).unwrap();
        match g.density(&Tolerances::default()) {
            Err(DensityError::NotPositiveSemidefinite { min_eigenvalue }) => {
                assert!(min_eigenvalue < -0.5)
            }
            other => panic!("expected PSD failure, got {other:?}"),
        }
    }

    #[test]
    fn partial_gate_moves_antidiagonal_edge() {
        // {|00>, |11>} -> {|01>, |10>} at m=1
        let cut = Cut::new(2, 1).unwrap();
        let mut g = WeightedGraph::new(2, Field::Real).unwrap();
        g.add_edge(1, 4, c(1.0, 0.0)).unwrap();
        let out = g.partial_gate(cut).unwrap();
        assert_eq!(out.edges().keys().copied().collect::<Vec<_>>(), [(2, 3)]);
        // and a same-outer edge maps to itself
        let mut h = WeightedGraph::new(2, Field::Real).unwrap();
        h.add_edge(1, 2, c(1.0, 0.0)).unwrap();
        assert_eq!(h.partial_gate(cut).unwrap(), h);
    }
}
