//! Criterion-independent ground truth: PPT test, pure-state detection,
//! Schmidt rank, and the conclusiveness rules combining them.

use alloc::vec::Vec;
// resolves float intrinsics under no_std; shadowed by inherent methods in tests
#[allow(unused_imports)]
use num_traits::Float;

use crate::cut::{partial_transpose_hermitian, Cut, Side};
use crate::density::DensityMatrix;
use crate::eig::hermitian_eig;
use crate::error::ConvergenceFailure;
use crate::matrix::HermitianMatrix;
use crate::tol::Tolerances;
use crate::C64;

/// Ground-truth verdict on a state across a cut.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleVerdict {
    Separable(SeparableReason),
    Entangled(EntangledReason),
    Unknown(UnknownReason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparableReason {
    /// PPT in 2⊗2, where the test is necessary and sufficient.
    PptConclusive2x2,
    /// Pure state of Schmidt rank one.
    ProductPureState,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EntangledReason {
    /// Negative partial transpose.
    Npt { min_eigenvalue: f64 },
    /// Pure state with Schmidt rank at least two.
    PureSchmidtRank { rank: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnknownReason {
    /// PPT, but the cut is larger than 2⊗2 so PPT is not conclusive.
    PptButInconclusiveDims,
}

/// Outcome of the partial transpose test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptReport {
    pub is_ppt: bool,
    pub min_eigenvalue: f64,
}

/// Minimum eigenvalue of the inner partial transpose.
pub fn ppt_check(
    rho: &DensityMatrix,
    cut: Cut,
    tol: &Tolerances,
) -> Result<PptReport, ConvergenceFailure> {
    let pt = partial_transpose_hermitian(rho.matrix(), cut, Side::Inner)
        .expect("density matrix dimensions match its cut");
    let min_eigenvalue = hermitian_eig(&pt, tol)?.values[0];
    Ok(PptReport {
        is_ppt: min_eigenvalue >= tol.psd_floor(rho.scale()),
        min_eigenvalue,
    })
}

/// Top eigenvector when the state is pure (top eigenvalue ≥ 1 − pure_top).
pub fn pure_component(
    rho: &DensityMatrix,
    tol: &Tolerances,
) -> Result<Option<Vec<C64>>, ConvergenceFailure> {
    let eig = hermitian_eig(rho.matrix(), tol)?;
    let top = eig.values[eig.values.len() - 1];
    if top >= 1.0 - tol.pure_top {
        Ok(Some(eig.vector(eig.values.len() - 1)))
    } else {
        Ok(None)
    }
}

/// Number of singular values above `eps` of the `d_out × d_in` reshaping of a
/// unit vector; rank one means product across the cut.
pub fn schmidt_rank(psi: &[C64], cut: Cut, eps: f64, tol: &Tolerances) -> usize {
    debug_assert_eq!(psi.len(), cut.dim());
    let norm = Float::sqrt(psi.iter().map(|z| z.norm_sqr()).sum::<f64>());
    let (dout, din) = (cut.d_out(), cut.d_in());
    // Gram matrix of the rows of the reshaped vector; singular values are the
    // square roots of its eigenvalues.
    let gram = HermitianMatrix::from_upper(dout, |a, b| {
        let mut s = C64::new(0.0, 0.0);
        for c in 0..din {
            s += psi[a * din + c] * psi[b * din + c].conj() / (norm * norm);
        }
        s
    });
    let eig = hermitian_eig(&gram, tol).expect("gram matrices are tiny and well conditioned");
    eig.values
        .iter()
        .filter(|&&l| Float::sqrt(l.max(0.0)) > eps)
        .count()
}

/// Decision procedure: pure states by Schmidt rank; mixed states by PPT,
/// conclusive only in 2⊗2.
pub fn oracle_verdict(
    rho: &DensityMatrix,
    cut: Cut,
    tol: &Tolerances,
) -> Result<OracleVerdict, ConvergenceFailure> {
    if let Some(psi) = pure_component(rho, tol)? {
        let rank = schmidt_rank(&psi, cut, tol.schmidt, tol);
        return Ok(if rank <= 1 {
            OracleVerdict::Separable(SeparableReason::ProductPureState)
        } else {
            OracleVerdict::Entangled(EntangledReason::PureSchmidtRank { rank })
        });
    }
    let ppt = ppt_check(rho, cut, tol)?;
    if !ppt.is_ppt {
        return Ok(OracleVerdict::Entangled(EntangledReason::Npt {
            min_eigenvalue: ppt.min_eigenvalue,
        }));
    }
    if cut.d_out() == 2 && cut.d_in() == 2 {
        Ok(OracleVerdict::Separable(SeparableReason::PptConclusive2x2))
    } else {
        Ok(OracleVerdict::Unknown(
            UnknownReason::PptButInconclusiveDims,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::CMatrix;

    fn tols() -> Tolerances {
        Tolerances::default()
    }

    fn bell_phi_plus() -> DensityMatrix {
        let v = [
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
        ];
        DensityMatrix::from_pure(&v)
    }

    #[test]
    fn bell_state_is_npt_with_minus_half() {
        let cut = Cut::new(2, 1).unwrap();
        let ppt = ppt_check(&bell_phi_plus(), cut, &tols()).unwrap();
        assert!(!ppt.is_ppt);
        assert!((ppt.min_eigenvalue + 0.5).abs() < 1e-12);
    }

    #[test]
    fn product_state_is_ppt() {
        let a = DensityMatrix::from_pure(&[C64::new(1.0, 0.0), C64::new(1.0, 0.0)]);
        let b = DensityMatrix::from_pure(&[C64::new(1.0, 0.0), C64::new(0.0, 1.0)]);
        let rho = a.product(&b, &tols()).unwrap();
        let ppt = ppt_check(&rho, Cut::new(2, 1).unwrap(), &tols()).unwrap();
        assert!(ppt.is_ppt);
    }

    #[test]
    fn double_partial_transpose_is_identity() {
        let rho = bell_phi_plus();
        let cut = Cut::new(2, 1).unwrap();
        let once = partial_transpose_hermitian(rho.matrix(), cut, Side::Inner).unwrap();
        let twice = partial_transpose_hermitian(&once, cut, Side::Inner).unwrap();
        assert_eq!(twice.matrix(), rho.entries());
    }

    #[test]
    fn maximally_mixed_is_not_pure() {
        let m = HermitianMatrix::symmetrize(&CMatrix::identity(4).scaled(C64::new(0.25, 0.0)));
        let rho = DensityMatrix::new(m, &tols()).unwrap();
        assert!(pure_component(&rho, &tols()).unwrap().is_none());
    }

    #[test]
    fn schmidt_ranks() {
        let cut = Cut::new(2, 1).unwrap();
        let ket00 = [
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ];
        assert_eq!(schmidt_rank(&ket00, cut, 1e-9, &tols()), 1);
        let bell = [
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
        ];
        assert_eq!(schmidt_rank(&bell, cut, 1e-9, &tols()), 2);
    }

    #[test]
    fn oracle_on_bell_and_products() {
        let cut = Cut::new(2, 1).unwrap();
        assert!(matches!(
            oracle_verdict(&bell_phi_plus(), cut, &tols()).unwrap(),
            OracleVerdict::Entangled(EntangledReason::PureSchmidtRank { rank: 2 })
        ));
        let prod = DensityMatrix::from_pure(&[
            C64::new(0.5, 0.0),
            C64::new(0.5, 0.0),
            C64::new(0.5, 0.0),
            C64::new(0.5, 0.0),
        ]);
        assert!(matches!(
            oracle_verdict(&prod, cut, &tols()).unwrap(),
            OracleVerdict::Separable(SeparableReason::ProductPureState)
        ));
    }
}
