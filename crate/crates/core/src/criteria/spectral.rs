//! Spectral neighbourhood test: the largest density eigenvalue against the
//! smallest degree over the edge count.

use alloc::format;
use alloc::string::ToString;

use super::{CriterionId, Verdict};
use crate::eig::hermitian_eig;
use crate::graph::WeightedGraph;
use crate::tol::Tolerances;

/// Fires when `λ_max(ρ_G) = N₁ / |E|`, where `N₁` is the smallest open
/// degree. Simple graphs with at least one edge only.
pub fn spectral_neighbourhood_check(g: &WeightedGraph, tol: &Tolerances) -> Verdict {
    if !g.is_simple() {
        return Verdict::Inconclusive {
            diagnostic: "spectral-nbhd applies to simple graphs only".to_string(),
        };
    }
    if g.edge_count() == 0 {
        return Verdict::Inconclusive {
            diagnostic: "spectral-nbhd needs at least one edge".to_string(),
        };
    }
    let rho = match g.density(tol) {
        Ok(rho) => rho,
        Err(e) => {
            return Verdict::Inconclusive {
                diagnostic: format!("graph does not define a state: {e}"),
            }
        }
    };
    let eig = match hermitian_eig(rho.matrix(), tol) {
        Ok(eig) => eig,
        Err(e) => {
            return Verdict::Inconclusive {
                diagnostic: format!("{e}"),
            }
        }
    };
    let lambda_max = eig.values[eig.values.len() - 1];
    let n1 = g.degree_sequence()[0] as f64;
    let target = n1 / g.edge_count() as f64;
    if (lambda_max - target).abs() <= tol.spectral {
        Verdict::separable(CriterionId::SpectralNbhd)
    } else {
        Verdict::Inconclusive {
            diagnostic: format!("λ_max = {lambda_max:.12} but N₁/|E| = {target:.12}"),
        }
    }
}
