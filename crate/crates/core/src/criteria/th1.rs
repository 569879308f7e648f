//! Block-decomposition feasibility: the constructive separability check and
//! its expansion into an explicit convex product decomposition.
//!
//! For a density operator viewed as a block grid `[A^{xy}]`, separability in
//! the block sense asks for PSD matrices `B, C, D, E` per off-diagonal block
//! with `A^{xy} = B − C + iD − iE` and non-negative diagonal residuals
//! `A^{xx} − Σ_{y≠x}(B + C + D + E)`. Substituting `S = B + C`, `T = D + E`
//! turns this into a linear matrix inequality system
//!
//! ```text
//!   S^{xy} ⪰ ±H^{xy},   T^{xy} ⪰ ±K^{xy},
//!   A^{xx} − Σ_{y≠x}(S^{xy} + T^{xy}) ⪰ 0,
//! ```
//!
//! where `(H, K)` is the Hermitian split of `A^{xy}`. Every constraint set is
//! a shifted PSD cone or an affine preimage of one, so Dykstra alternating
//! projections solve the feasibility problem with closed-form steps. The
//! minimal-trace fast path `S = |H|`, `T = |K|` is accepted immediately when
//! feasible.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{CriterionId, Verdict};
use crate::cut::{block_grid, commutator_norm, conj_partial_gate_density, Cut};
use crate::density::DensityMatrix;
use crate::eig::{hermitian_eig, matrix_abs, positive_part, psd_terms};
use crate::error::{ConvergenceFailure, InfeasibleWitness};
use crate::matrix::{hermitian_split, CMatrix, HermitianMatrix};
use crate::tol::Tolerances;
use crate::C64;

/// Feasible certificates `(S, T)` for one unordered block pair `x < y`.
#[derive(Debug, Clone)]
pub struct PairCertificate {
    /// 1-based outer indices, `x < y`.
    pub x: usize,
    pub y: usize,
    pub s: HermitianMatrix,
    pub t: HermitianMatrix,
}

/// Certificate of block-decomposition feasibility.
#[derive(Debug, Clone)]
pub struct Th1Witness {
    pub cut: Cut,
    pub pairs: Vec<PairCertificate>,
    /// Diagonal residuals `R^x = A^{xx} − Σ_{y≠x}(S + T)`.
    pub residuals: Vec<HermitianMatrix>,
    /// Most negative constraint eigenvalue at acceptance.
    pub gap: f64,
    /// Most negative constraint eigenvalue of the `S=|H|, T=|K|` fast path;
    /// negative values certify that the minimal-trace point is infeasible.
    pub fast_path_gap: f64,
    /// Projection rounds used (zero when the fast path was feasible).
    pub iterations: usize,
    /// True when solved with `K ≡ 0` (all blocks Hermitian, `T` dropped).
    pub hermitian_only: bool,
}

struct Problem {
    pairs: Vec<(usize, usize)>, // 0-based x < y
    h: Vec<HermitianMatrix>,
    k: Vec<HermitianMatrix>,
    diag: Vec<HermitianMatrix>, // A^{xx}
    d_out: usize,
    use_t: bool,
    scale: f64,
}

impl Problem {
    fn build(rho: &DensityMatrix, cut: Cut, use_t: bool) -> Self {
        let grid = block_grid(rho.entries(), cut).expect("density matches its cut");
        let d_out = cut.d_out();
        let mut pairs = Vec::new();
        let mut h = Vec::new();
        let mut k = Vec::new();
        for x in 1..=d_out {
            for y in (x + 1)..=d_out {
                let (hx, kx) = hermitian_split(grid.block(x, y));
                pairs.push((x - 1, y - 1));
                h.push(hx);
                k.push(kx);
            }
        }
        let diag = (1..=d_out)
            .map(|x| HermitianMatrix::symmetrize(grid.block(x, x)))
            .collect();
        Self {
            pairs,
            h,
            k,
            diag,
            d_out,
            use_t,
            scale: rho.scale(),
        }
    }

    /// Most negative constraint eigenvalue at `(s, t)`; zero when feasible.
    fn gap(
        &self,
        s: &[HermitianMatrix],
        t: &[HermitianMatrix],
        tol: &Tolerances,
    ) -> Result<f64, ConvergenceFailure> {
        let mut gap = 0.0f64;
        for (i, _) in self.pairs.iter().enumerate() {
            gap = gap.min(hermitian_eig(&s[i].sub(&self.h[i]), tol)?.values[0]);
            gap = gap.min(hermitian_eig(&s[i].add(&self.h[i]), tol)?.values[0]);
            if self.use_t {
                gap = gap.min(hermitian_eig(&t[i].sub(&self.k[i]), tol)?.values[0]);
                gap = gap.min(hermitian_eig(&t[i].add(&self.k[i]), tol)?.values[0]);
            }
        }
        for x in 0..self.d_out {
            gap = gap.min(hermitian_eig(&self.residual(x, s, t), tol)?.values[0]);
        }
        Ok(gap)
    }

    fn residual(&self, x: usize, s: &[HermitianMatrix], t: &[HermitianMatrix]) -> HermitianMatrix {
        let mut r = self.diag[x].clone();
        for (i, &(px, py)) in self.pairs.iter().enumerate() {
            if px == x || py == x {
                r = r.sub(&s[i]);
                if self.use_t {
                    r = r.sub(&t[i]);
                }
            }
        }
        r
    }
}

enum SolveResult {
    Feasible(Box<Th1Witness>),
    Capped { gap: f64, fast_path_gap: f64 },
}

/// Projection onto `{X ⪰ L}`: shift, clip the negative part, shift back.
fn project_above(
    x: &HermitianMatrix,
    l: &HermitianMatrix,
    tol: &Tolerances,
) -> Result<HermitianMatrix, ConvergenceFailure> {
    Ok(l.add(&positive_part(&x.sub(l), tol)?))
}

fn solve(
    rho: &DensityMatrix,
    cut: Cut,
    tol: &Tolerances,
    use_t: bool,
) -> Result<SolveResult, ConvergenceFailure> {
    let prob = Problem::build(rho, cut, use_t);
    let ftol = tol.feasibility * prob.scale.max(f64::MIN_POSITIVE);
    let np = prob.pairs.len();
    let din = cut.d_in();

    // minimal-trace fast path
    let mut s: Vec<HermitianMatrix> = prob
        .h
        .iter()
        .map(|h| matrix_abs(h, tol))
        .collect::<Result<_, _>>()?;
    let mut t: Vec<HermitianMatrix> = if use_t {
        prob.k
            .iter()
            .map(|k| matrix_abs(k, tol))
            .collect::<Result<_, _>>()?
    } else {
        vec![HermitianMatrix::zeros(din); np]
    };

    let fast_path_gap = prob.gap(&s, &t, tol)?;
    let witness = |s: &[HermitianMatrix], t: &[HermitianMatrix], gap, iterations| {
        Box::new(Th1Witness {
            cut,
            pairs: prob
                .pairs
                .iter()
                .enumerate()
                .map(|(i, &(x, y))| PairCertificate {
                    x: x + 1,
                    y: y + 1,
                    s: s[i].clone(),
                    t: t[i].clone(),
                })
                .collect(),
            residuals: (0..prob.d_out).map(|x| prob.residual(x, s, t)).collect(),
            gap,
            fast_path_gap,
            iterations,
            hermitian_only: !use_t,
        })
    };
    if fast_path_gap >= -ftol {
        return Ok(SolveResult::Feasible(witness(&s, &t, fast_path_gap, 0)));
    }

    // Dykstra increments: one per cone constraint, one shared matrix per row
    // constraint (its correction is identical on every touched variable).
    let zero = HermitianMatrix::zeros(din);
    let mut inc_s_plus = vec![zero.clone(); np];
    let mut inc_s_minus = vec![zero.clone(); np];
    let mut inc_t_plus = vec![zero.clone(); np];
    let mut inc_t_minus = vec![zero.clone(); np];
    let mut inc_row = vec![zero.clone(); prob.d_out];
    let minus_h: Vec<HermitianMatrix> = prob.h.iter().map(|h| h.scaled(-1.0)).collect();
    let minus_k: Vec<HermitianMatrix> = prob.k.iter().map(|k| k.scaled(-1.0)).collect();

    let mut best_gap = fast_path_gap;
    for iteration in 1..=tol.solver_cap {
        for i in 0..np {
            let y = s[i].add(&inc_s_plus[i]);
            let nw = project_above(&y, &prob.h[i], tol)?;
            inc_s_plus[i] = y.sub(&nw);
            s[i] = nw;

            let y = s[i].add(&inc_s_minus[i]);
            let nw = project_above(&y, &minus_h[i], tol)?;
            inc_s_minus[i] = y.sub(&nw);
            s[i] = nw;

            if use_t {
                let y = t[i].add(&inc_t_plus[i]);
                let nw = project_above(&y, &prob.k[i], tol)?;
                inc_t_plus[i] = y.sub(&nw);
                t[i] = nw;

                let y = t[i].add(&inc_t_minus[i]);
                let nw = project_above(&y, &minus_k[i], tol)?;
                inc_t_minus[i] = y.sub(&nw);
                t[i] = nw;
            }
        }
        for x in 0..prob.d_out {
            let touched: Vec<usize> = prob
                .pairs
                .iter()
                .enumerate()
                .filter_map(|(i, &(px, py))| (px == x || py == x).then_some(i))
                .collect();
            if touched.is_empty() {
                continue;
            }
            let nv = touched.len() * if use_t { 2 } else { 1 };
            let mut total = HermitianMatrix::zeros(din);
            for &i in &touched {
                total = total.add(&s[i]).add(&inc_row[x]);
                if use_t {
                    total = total.add(&t[i]).add(&inc_row[x]);
                }
            }
            // clip the violation of the affine image, spread it equally
            let violation = positive_part(&total.sub(&prob.diag[x]), tol)?;
            let share = violation.scaled(1.0 / nv as f64);
            let prev = inc_row[x].clone();
            for &i in &touched {
                s[i] = s[i].add(&prev).sub(&share);
                if use_t {
                    t[i] = t[i].add(&prev).sub(&share);
                }
            }
            inc_row[x] = share;
        }
        let gap = prob.gap(&s, &t, tol)?;
        best_gap = best_gap.max(gap);
        if gap >= -ftol {
            return Ok(SolveResult::Feasible(witness(&s, &t, gap, iteration)));
        }
    }
    Ok(SolveResult::Capped {
        gap: best_gap,
        fast_path_gap,
    })
}

/// Block-decomposition feasibility check. `Separable` comes with a witness;
/// reaching the iteration cap is `Inconclusive`, never a claim of
/// entanglement.
pub fn th1_check(rho: &DensityMatrix, cut: Cut, tol: &Tolerances) -> Verdict {
    check_with_mode(rho, cut, tol, true, CriterionId::Th1)
}

fn check_with_mode(
    rho: &DensityMatrix,
    cut: Cut,
    tol: &Tolerances,
    use_t: bool,
    criterion: CriterionId,
) -> Verdict {
    match solve(rho, cut, tol, use_t) {
        Ok(SolveResult::Feasible(witness)) => Verdict::Separable {
            criterion,
            witness: Some(witness),
        },
        Ok(SolveResult::Capped { gap, fast_path_gap }) => Verdict::Inconclusive {
            diagnostic: format!(
                "no feasible block decomposition found (best gap {gap:e} at the iteration cap, fast path gap {fast_path_gap:e})"
            ),
        },
        Err(e) => Verdict::Inconclusive {
            diagnostic: format!("{e}"),
        },
    }
}

/// Hermitian-block variant: fires only when the conjugated partial gate
/// leaves the state invariant (all blocks Hermitian), then solves with the
/// `T` variables dropped.
pub fn c1_check(rho: &DensityMatrix, cut: Cut, tol: &Tolerances) -> Verdict {
    let gated = conj_partial_gate_density(rho.entries(), cut).expect("density matches its cut");
    let deviation = gated.max_abs_diff(rho.entries());
    if deviation > tol.structural {
        return Verdict::Inconclusive {
            diagnostic: format!(
                "state is not invariant under the conjugated partial gate (deviation {deviation:e})"
            ),
        };
    }
    check_with_mode(rho, cut, tol, false, CriterionId::C1)
}

/// Commuting-blocks check: fires when every ordered pair of blocks of the
/// grid (diagonal blocks and conjugate partners included) commutes.
pub fn th3_commuting_blocks(rho: &DensityMatrix, cut: Cut, tol: &Tolerances) -> Verdict {
    let grid = block_grid(rho.entries(), cut).expect("density matches its cut");
    let bound = tol.psd * rho.scale();
    let blocks = grid.blocks();
    let mut worst = 0.0f64;
    let mut worst_pair = (0usize, 0usize);
    for i in 0..blocks.len() {
        for j in (i + 1)..blocks.len() {
            let norm = commutator_norm(&blocks[i], &blocks[j]).expect("uniform block dims");
            if norm > worst {
                worst = norm;
                worst_pair = (i, j);
            }
        }
    }
    if worst <= bound {
        Verdict::separable(CriterionId::Th3)
    } else {
        let d = grid.cut().d_out();
        Verdict::Inconclusive {
            diagnostic: format!(
                "blocks A^{{{},{}}} and A^{{{},{}}} do not commute (norm {:e})",
                worst_pair.0 / d + 1,
                worst_pair.0 % d + 1,
                worst_pair.1 / d + 1,
                worst_pair.1 % d + 1,
                worst
            ),
        }
    }
}

/// One product term `weight · ρ_out ⊗ ρ_in` of a separable decomposition.
#[derive(Debug, Clone)]
pub struct DecompositionTerm {
    pub weight: f64,
    pub outer: DensityMatrix,
    pub inner: DensityMatrix,
}

/// Convex combination of pure product states reproducing the input.
#[derive(Debug, Clone)]
pub struct SeparableDecomposition {
    pub cut: Cut,
    pub terms: Vec<DecompositionTerm>,
}

impl SeparableDecomposition {
    pub fn total_weight(&self) -> f64 {
        self.terms.iter().map(|t| t.weight).sum()
    }

    pub fn reconstruct(&self) -> CMatrix {
        let mut acc = CMatrix::zeros(self.cut.dim());
        for term in &self.terms {
            let prod = term.outer.entries().kron(term.inner.entries());
            acc = acc.add(&prod.scaled(C64::new(term.weight, 0.0)));
        }
        acc
    }

    pub fn reconstruction_error(&self, rho: &DensityMatrix) -> f64 {
        self.reconstruct().sub(rho.entries()).frobenius_norm()
    }
}

/// Expands a feasible witness into explicit product terms.
///
/// Each off-diagonal pair contributes `F_B⊗B + F_C⊗C + F_D⊗D + F_E⊗E` with
/// rank-one outer factors built on `e_x ± e_y` and `e_x ∓ i e_y`; diagonal
/// residuals contribute `e_x e_x† ⊗ R^x`. Eigendecomposing every PSD factor
/// yields weighted pure product states whose sum reassembles the input.
pub fn th1_expand_witness(
    witness: &Th1Witness,
    rho: &DensityMatrix,
    tol: &Tolerances,
) -> Result<SeparableDecomposition, InfeasibleWitness> {
    let cut = witness.cut;
    let grid = block_grid(rho.entries(), cut).map_err(|e| InfeasibleWitness {
        detail: format!("{e}"),
    })?;
    let scale = rho.scale();
    let floor = tol.psd_floor(scale);
    let cutoff = 1e-14 * scale.max(1.0);
    let eig_err = |e: ConvergenceFailure| InfeasibleWitness {
        detail: format!("{e}"),
    };
    let check_psd = |m: &HermitianMatrix, what: &str| -> Result<(), InfeasibleWitness> {
        let low = hermitian_eig(m, tol).map_err(eig_err)?.values[0];
        if low < floor {
            return Err(InfeasibleWitness {
                detail: format!("{what} has eigenvalue {low:e}"),
            });
        }
        Ok(())
    };

    let d_out = cut.d_out();
    let mut terms = Vec::new();
    let mut emit =
        |outer_vec: Vec<C64>, factor: &HermitianMatrix| -> Result<(), InfeasibleWitness> {
            let outer_norm_sqr: f64 = outer_vec.iter().map(|z| z.norm_sqr()).sum();
            for (lambda, v) in psd_terms(factor, cutoff, tol).map_err(eig_err)? {
                terms.push(DecompositionTerm {
                    weight: lambda * outer_norm_sqr,
                    outer: DensityMatrix::from_pure(&outer_vec),
                    inner: DensityMatrix::from_pure(&v),
                });
            }
            Ok(())
        };

    let basis = |x: usize, phase: C64, y: usize| -> Vec<C64> {
        let mut v = vec![C64::new(0.0, 0.0); d_out];
        v[x] = C64::new(1.0, 0.0);
        v[y] = phase;
        v
    };

    for cert in &witness.pairs {
        let (x, y) = (cert.x - 1, cert.y - 1);
        let (h, k) = hermitian_split(grid.block(cert.x, cert.y));
        let b = cert.s.add(&h).scaled(0.5);
        let c = cert.s.sub(&h).scaled(0.5);
        let d = cert.t.add(&k).scaled(0.5);
        let e = cert.t.sub(&k).scaled(0.5);
        check_psd(&b, "B")?;
        check_psd(&c, "C")?;
        check_psd(&d, "D")?;
        check_psd(&e, "E")?;
        emit(basis(x, C64::new(1.0, 0.0), y), &b)?;
        emit(basis(x, C64::new(-1.0, 0.0), y), &c)?;
        emit(basis(x, C64::new(0.0, -1.0), y), &d)?;
        emit(basis(x, C64::new(0.0, 1.0), y), &e)?;
    }
    for (x, residual) in witness.residuals.iter().enumerate() {
        check_psd(residual, "diagonal residual")?;
        let mut v = vec![C64::new(0.0, 0.0); d_out];
        v[x] = C64::new(1.0, 0.0);
        emit(v, residual)?;
    }

    Ok(SeparableDecomposition { cut, terms })
}
