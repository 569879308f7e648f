//! Central tolerance policy.
//!
//! The fixture values are exact rationals and surds, so verdicts stay
//! reproducible only if every threshold is pinned in one place and threaded
//! through the operations instead of being chosen ad hoc at call sites.

/// Numerical thresholds shared by every operation in the crate.
///
/// Relative tolerances are applied against the `scale` of the matrix at hand
/// (its largest absolute entry), absolute ones as written.
#[derive(Debug, Clone)]
pub struct Tolerances {
    /// PSD verdicts: eigenvalues above `-psd * scale` count as non-negative.
    pub psd: f64,
    /// Structural equality of matrices and traces.
    pub structural: f64,
    /// Eigensolver residual bound, relative to `max(scale, 1)`.
    pub eig_residual: f64,
    /// Feasibility gap at which the block-decomposition solver accepts.
    pub feasibility: f64,
    /// Frobenius error allowed when a witness is expanded and reassembled.
    pub reconstruction: f64,
    /// Top eigenvalue above `1 - pure_top` marks a state as pure.
    pub pure_top: f64,
    /// Singular values above this count towards the Schmidt rank.
    pub schmidt: f64,
    /// Match tolerance for the spectral neighbourhood test.
    pub spectral: f64,
    /// Iteration cap for the feasibility solver.
    pub solver_cap: usize,
    /// Sweep cap for the Jacobi eigensolver.
    pub jacobi_sweeps: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            psd: 1e-9,
            structural: 1e-12,
            eig_residual: 1e-10,
            feasibility: 1e-10,
            reconstruction: 1e-10,
            pure_top: 1e-9,
            schmidt: 1e-9,
            spectral: 1e-9,
            solver_cap: 5000,
            jacobi_sweeps: 100,
        }
    }
}

impl Tolerances {
    /// PSD cutoff for a matrix of the given scale.
    pub fn psd_floor(&self, scale: f64) -> f64 {
        -self.psd * scale.max(f64::MIN_POSITIVE)
    }
}
