//! Exact constructors for the worked example graphs and the appendix state
//! families, each deterministic and addressable by a stable id string.
//!
//! Loop weights are chosen so every density operator comes out exactly as
//! intended: `g1` uses loops `(1−√5, 2−2√5, 2−2√5, 1−√5)` for an all-equal
//! diagonal, and `g_th3_b` uses `−2√10` to cancel the off-diagonal mass
//! `4 + 2√10` down to 4.

use alloc::format;
use alloc::vec::Vec;
// resolves float intrinsics under no_std; shadowed by inherent methods in tests
#[allow(unused_imports)]
use num_traits::Float;

use crate::cut::Cut;
use crate::density::DensityMatrix;
use crate::error::FixtureError;
use crate::graph::{Field, WeightedGraph};
use crate::matrix::HermitianMatrix;
use crate::tol::Tolerances;
use crate::C64;

/// Worked example graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFixture {
    G1,
    G2,
    G3,
    GRealK4,
    GTh3A,
    GTh3B,
    GParity,
    GSameBlock,
    GPgate3q,
    GNbhdWeighted,
    GSwap,
    GShift,
    K4Complete,
}

impl GraphFixture {
    pub const ALL: [GraphFixture; 13] = [
        GraphFixture::G1,
        GraphFixture::G2,
        GraphFixture::G3,
        GraphFixture::GRealK4,
        GraphFixture::GTh3A,
        GraphFixture::GTh3B,
        GraphFixture::GParity,
        GraphFixture::GSameBlock,
        GraphFixture::GPgate3q,
        GraphFixture::GNbhdWeighted,
        GraphFixture::GSwap,
        GraphFixture::GShift,
        GraphFixture::K4Complete,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            GraphFixture::G1 => "g1",
            GraphFixture::G2 => "g2",
            GraphFixture::G3 => "g3",
            GraphFixture::GRealK4 => "g_real_k4",
            GraphFixture::GTh3A => "g_th3_a",
            GraphFixture::GTh3B => "g_th3_b",
            GraphFixture::GParity => "g_parity",
            GraphFixture::GSameBlock => "g_sameblock",
            GraphFixture::GPgate3q => "g_pgate_3q",
            GraphFixture::GNbhdWeighted => "g_nbhd_weighted",
            GraphFixture::GSwap => "g_swap",
            GraphFixture::GShift => "g_shift",
            GraphFixture::K4Complete => "k4_complete",
        }
    }

    pub fn parse(s: &str) -> Option<GraphFixture> {
        GraphFixture::ALL.iter().copied().find(|f| f.as_str() == s)
    }

    /// Cut the example is worked at.
    pub fn canonical_cut(&self) -> Cut {
        let (n, m) = match self {
            GraphFixture::G3 => (3, 2),
            GraphFixture::GParity
            | GraphFixture::GSameBlock
            | GraphFixture::GPgate3q
            | GraphFixture::GNbhdWeighted
            | GraphFixture::GSwap
            | GraphFixture::GShift => (3, 1),
            _ => (2, 1),
        };
        Cut::new(n, m).expect("fixture cuts are valid")
    }

    /// The criterion the example is built to illustrate.
    pub fn illustrates(&self) -> &'static str {
        match self {
            GraphFixture::G1 | GraphFixture::G2 | GraphFixture::G3 => "th1",
            GraphFixture::GRealK4 => "c1",
            GraphFixture::GTh3A | GraphFixture::GTh3B => "th3",
            GraphFixture::GParity => "edge-parity",
            GraphFixture::GSameBlock | GraphFixture::GNbhdWeighted => "same-block",
            GraphFixture::GPgate3q => "graph-pgate-inv",
            GraphFixture::GSwap => "nbhd-swap",
            GraphFixture::GShift => "nbhd-shift-offdiag",
            GraphFixture::K4Complete => "nbhd-card-equiv",
        }
    }
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn build(
    n: u32,
    field: Field,
    edges: &[(usize, usize, C64)],
    loops: &[(usize, f64)],
) -> WeightedGraph {
    let mut g = WeightedGraph::new(n, field).expect("fixture sizes are valid");
    for &(u, v, w) in edges {
        g.add_edge(u, v, w).expect("fixture edges are valid");
    }
    for &(v, w) in loops {
        g.add_loop(v, c(w, 0.0)).expect("fixture loops are valid");
    }
    g
}

fn simple(n: u32, edges: &[(usize, usize)]) -> WeightedGraph {
    let mut g = WeightedGraph::new(n, Field::Real).expect("fixture sizes are valid");
    for &(u, v) in edges {
        g.add_edge(u, v, c(1.0, 0.0))
            .expect("fixture edges are valid");
    }
    g
}

/// Constructs a worked example graph.
pub fn example_graph(id: GraphFixture) -> WeightedGraph {
    let s5 = 5.0f64.sqrt();
    match id {
        GraphFixture::G1 => build(
            2,
            Field::Complex,
            &[
                (1, 2, c(-2.0, -1.0)),
                (1, 3, c(1.0, 0.0)),
                (1, 4, c(0.0, 1.0)),
                (2, 3, c(-2.0, 1.0)),
                (2, 4, c(1.0, 0.0)),
                (3, 4, c(-2.0, -1.0)),
            ],
            &[
                (1, 1.0 - s5),
                (2, 2.0 - 2.0 * s5),
                (3, 2.0 - 2.0 * s5),
                (4, 1.0 - s5),
            ],
        ),
        GraphFixture::G2 => build(
            2,
            Field::Complex,
            &[
                (1, 2, c(1.0, 0.0)),
                (1, 3, c(0.0, 1.0)),
                (1, 4, c(0.0, 1.0)),
                (2, 3, c(0.0, 1.0)),
                (2, 4, c(0.0, 1.0)),
                (3, 4, c(1.0, 0.0)),
            ],
            &[(1, -2.0), (2, -2.0), (3, -2.0), (4, -2.0)],
        ),
        GraphFixture::G3 => build(
            3,
            Field::Real,
            &[
                (3, 4, c(-1.0, 0.0)),
                (3, 5, c(1.0, 0.0)),
                (3, 6, c(1.0, 0.0)),
                (4, 5, c(1.0, 0.0)),
                (4, 6, c(1.0, 0.0)),
                (5, 6, c(-1.0, 0.0)),
            ],
            &[],
        ),
        GraphFixture::GRealK4 => build(
            2,
            Field::Real,
            &[
                (1, 2, c(-4.0, 0.0)),
                (1, 3, c(4.0, 0.0)),
                (1, 4, c(6.0, 0.0)),
                (2, 3, c(6.0, 0.0)),
                (2, 4, c(4.0, 0.0)),
                (3, 4, c(-4.0, 0.0)),
            ],
            &[],
        ),
        GraphFixture::GTh3A => {
            let l = -2.0 * 2.0f64.sqrt();
            build(
                2,
                Field::Complex,
                &[
                    (1, 2, c(1.0, 1.0)),
                    (1, 3, c(2.0, 0.0)),
                    (1, 4, c(1.0, 1.0)),
                    (2, 3, c(1.0, -1.0)),
                    (2, 4, c(2.0, 0.0)),
                    (3, 4, c(1.0, 1.0)),
                ],
                &[(1, l), (2, l), (3, l), (4, l)],
            )
        }
        GraphFixture::GTh3B => {
            let l = -2.0 * 10.0f64.sqrt();
            build(
                2,
                Field::Complex,
                &[
                    (1, 2, c(4.0, 0.0)),
                    (1, 3, c(1.0, 3.0)),
                    (1, 4, c(1.0, 3.0)),
                    (2, 3, c(1.0, 3.0)),
                    (2, 4, c(1.0, 3.0)),
                    (3, 4, c(4.0, 0.0)),
                ],
                &[(1, l), (2, l), (3, l), (4, l)],
            )
        }
        // v_ij labels with flat = (i-1)·4 + j
        GraphFixture::GParity => simple(3, &[(1, 7), (2, 8), (3, 5), (3, 7)]),
        GraphFixture::GSameBlock => simple(
            3,
            &[
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
                (5, 6),
                (5, 7),
                (5, 8),
                (6, 7),
                (6, 8),
                (7, 8),
            ],
        ),
        GraphFixture::GPgate3q => simple(3, &[(1, 5), (1, 8), (2, 6), (3, 7), (4, 5), (4, 8)]),
        GraphFixture::GNbhdWeighted => build(
            3,
            Field::Complex,
            &[
                (1, 2, c(0.0, -1.0)),
                (1, 4, c(-1.0, 0.0)),
                (1, 3, c(0.0, -1.0)),
                (2, 3, c(1.0, 0.0)),
                (2, 4, c(0.0, -1.0)),
                (5, 6, c(0.0, 1.0)),
                (5, 7, c(0.0, 1.0)),
                (5, 8, c(-1.0, 0.0)),
                (6, 7, c(1.0, 0.0)),
                (6, 8, c(0.0, 1.0)),
                (3, 4, c(0.0, -1.0)),
                (7, 8, c(0.0, 1.0)),
            ],
            &[
                (1, -2.0),
                (2, -2.0),
                (3, -2.0),
                (4, -2.0),
                (5, -2.0),
                (6, -2.0),
                (7, -2.0),
                (8, -2.0),
            ],
        ),
        GraphFixture::GSwap => simple(
            3,
            &[
                (1, 2),
                (1, 4),
                (1, 7),
                (1, 8),
                (5, 6),
                (3, 5),
                (4, 5),
                (3, 4),
                (7, 8),
            ],
        ),
        GraphFixture::GShift => simple(
            3,
            &[
                (1, 5),
                (1, 7),
                (2, 6),
                (2, 8),
                (3, 5),
                (3, 7),
                (4, 6),
                (4, 8),
            ],
        ),
        GraphFixture::K4Complete => simple(2, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    }
}

/// Appendix state families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateFixture {
    Ket00,
    Ket000,
    CosSin2q { theta: f64 },
    Uniform2q,
    OneExc3q { theta: f64, phi: f64 },
    TwoExc3q { theta: f64, phi: f64 },
    WernerLike { a: f64 },
    Mems { delta: f64 },
    Ghz { theta: f64, phi: f64 },
    W3,
    WType { n: u64, delta: f64 },
}

impl StateFixture {
    pub fn id_str(&self) -> &'static str {
        match self {
            StateFixture::Ket00 => "ket00",
            StateFixture::Ket000 => "ket000",
            StateFixture::CosSin2q { .. } => "cos_sin_2q",
            StateFixture::Uniform2q => "uniform_2q",
            StateFixture::OneExc3q { .. } => "one_exc_3q",
            StateFixture::TwoExc3q { .. } => "two_exc_3q",
            StateFixture::WernerLike { .. } => "werner_like",
            StateFixture::Mems { .. } => "mems",
            StateFixture::Ghz { .. } => "ghz",
            StateFixture::W3 => "w3",
            StateFixture::WType { .. } => "w_type",
        }
    }

    pub fn n_qubits(&self) -> u32 {
        match self {
            StateFixture::Ket00
            | StateFixture::CosSin2q { .. }
            | StateFixture::Uniform2q
            | StateFixture::WernerLike { .. }
            | StateFixture::Mems { .. } => 2,
            _ => 3,
        }
    }

    /// Cut matching the block display the state is printed with.
    pub fn canonical_cut(&self) -> Cut {
        let m = match self {
            StateFixture::TwoExc3q { .. } | StateFixture::W3 | StateFixture::WType { .. } => 2,
            _ => 1,
        };
        Cut::new(self.n_qubits(), m).expect("fixture cuts are valid")
    }

    /// Whether the appendix lists the family as separable or entangled.
    pub fn claimed_separable(&self) -> bool {
        matches!(
            self,
            StateFixture::Ket00
                | StateFixture::Ket000
                | StateFixture::CosSin2q { .. }
                | StateFixture::Uniform2q
                | StateFixture::OneExc3q { .. }
                | StateFixture::TwoExc3q { .. }
        )
    }
}

/// Instantiates an appendix density matrix, exactly as printed.
pub fn appendix_state(id: StateFixture, tol: &Tolerances) -> Result<DensityMatrix, FixtureError> {
    let dim = 1usize << id.n_qubits();
    let build = |entries: &[(usize, usize, C64)]| -> Result<DensityMatrix, FixtureError> {
        let m = HermitianMatrix::from_upper(dim, |i, j| {
            entries
                .iter()
                .find(|&&(a, b, _)| (a - 1, b - 1) == (i, j))
                .map(|&(_, _, w)| w)
                .unwrap_or(c(0.0, 0.0))
        });
        DensityMatrix::new(m, tol).map_err(|e| FixtureError {
            detail: format!("{}: {e}", id.id_str()),
        })
    };
    match id {
        StateFixture::Ket00 | StateFixture::Ket000 => build(&[(1, 1, c(1.0, 0.0))]),
        StateFixture::CosSin2q { theta } => {
            let (s, co) = theta.sin_cos();
            build(&[
                (1, 1, c(co * co, 0.0)),
                (1, 2, c(co * s, 0.0)),
                (2, 2, c(s * s, 0.0)),
            ])
        }
        StateFixture::Uniform2q => {
            let mut entries = Vec::new();
            for i in 1..=4 {
                for j in i..=4 {
                    entries.push((i, j, c(0.25, 0.0)));
                }
            }
            build(&entries)
        }
        StateFixture::OneExc3q { theta, phi } => build(&coherent_pair(1, 5, theta, phi)),
        StateFixture::TwoExc3q { theta, phi } => build(&coherent_pair(1, 7, theta, phi)),
        StateFixture::Ghz { theta, phi } => build(&coherent_pair(1, 8, theta, phi)),
        StateFixture::WernerLike { a } => {
            if !(0.0..=1.0).contains(&a) {
                return Err(FixtureError {
                    detail: format!("werner_like needs a in [0,1], got {a}"),
                });
            }
            build(&[
                (1, 1, c(1.0 - a, 0.0)),
                (2, 2, c(a / 2.0, 0.0)),
                (2, 3, c(a / 2.0, 0.0)),
                (3, 3, c(a / 2.0, 0.0)),
            ])
        }
        StateFixture::Mems { delta } => {
            if !(0.0..=1.0).contains(&delta) {
                return Err(FixtureError {
                    detail: format!("mems needs delta in [0,1], got {delta}"),
                });
            }
            // printed diagonal 2δ breaks unit trace; z(δ) itself restores it
            let z = if delta < 2.0 / 3.0 {
                1.0 / 3.0
            } else {
                delta / 2.0
            };
            build(&[
                (1, 1, c(z, 0.0)),
                (1, 4, c(delta / 2.0, 0.0)),
                (2, 2, c(1.0 - 2.0 * z, 0.0)),
                (4, 4, c(z, 0.0)),
            ])
        }
        StateFixture::W3 => {
            let third = 1.0 / 3.0;
            let mut entries = Vec::new();
            for &i in &[2usize, 3, 5] {
                for &j in &[2usize, 3, 5] {
                    if i <= j {
                        entries.push((i, j, c(third, 0.0)));
                    }
                }
            }
            build(&entries)
        }
        StateFixture::WType { n, delta } => {
            let nf = n as f64;
            let f = 1.0 / (2.0 * (nf + 1.0));
            let e = C64::from_polar(1.0, delta);
            build(&[
                (2, 2, c((nf + 1.0) * f, 0.0)),
                (2, 3, c((nf * (nf + 1.0)).sqrt() * f, 0.0)),
                (2, 5, e * ((nf + 1.0).sqrt() * f)),
                (3, 3, c(nf * f, 0.0)),
                (3, 5, e * (nf.sqrt() * f)),
                (5, 5, c(f, 0.0)),
            ])
        }
    }
}

/// Common `cosθ|a⟩ + e^{iφ} sinθ|b⟩` projector pattern, upper entries only,
/// with the phase convention of the printed matrices.
fn coherent_pair(a: usize, b: usize, theta: f64, phi: f64) -> [(usize, usize, C64); 3] {
    let (s, co) = theta.sin_cos();
    [
        (a, a, c(co * co, 0.0)),
        (a, b, C64::from_polar(co * s, phi)),
        (b, b, c(s * s, 0.0)),
    ]
}
