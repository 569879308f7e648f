//! Finite relations, their equivalence properties, and the commuting-blocks
//! relation criterion.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{CriterionId, Verdict};
use crate::cut::{block_grid, commutator_norm, Cut};
use crate::density::DensityMatrix;
use crate::tol::Tolerances;

/// Relation on a finite carrier, stored as a boolean matrix.
#[derive(Debug, Clone)]
pub struct FiniteRelation {
    labels: Vec<String>,
    related: Vec<bool>,
}

impl FiniteRelation {
    pub fn new(labels: Vec<String>, mut predicate: impl FnMut(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let mut related = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                related[i * n + j] = predicate(i, j);
            }
        }
        Self { labels, related }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.related[i * self.len() + j]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// Exact relation properties, with equivalence classes when they exist.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationProperties {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub is_equivalence: bool,
    pub classes: Option<Vec<Vec<usize>>>,
}

pub fn relation_properties(rel: &FiniteRelation) -> RelationProperties {
    let n = rel.len();
    let reflexive = (0..n).all(|i| rel.related(i, i));
    let symmetric = (0..n).all(|i| (0..n).all(|j| rel.related(i, j) == rel.related(j, i)));
    let mut transitive = true;
    'outer: for i in 0..n {
        for j in 0..n {
            if !rel.related(i, j) {
                continue;
            }
            for k in 0..n {
                if rel.related(j, k) && !rel.related(i, k) {
                    transitive = false;
                    break 'outer;
                }
            }
        }
    }
    let is_equivalence = reflexive && symmetric && transitive;
    let classes = is_equivalence.then(|| {
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let class: Vec<usize> = (0..n).filter(|&j| rel.related(i, j)).collect();
            for &j in &class {
                seen[j] = true;
            }
            classes.push(class);
        }
        classes
    });
    RelationProperties {
        reflexive,
        symmetric,
        transitive,
        is_equivalence,
        classes,
    }
}

/// Builds the commuting relation over all blocks of the grid.
pub fn commuting_relation(rho: &DensityMatrix, cut: Cut, tol: &Tolerances) -> FiniteRelation {
    let grid = block_grid(rho.entries(), cut).expect("density matches its cut");
    let d = cut.d_out();
    let bound = tol.psd * rho.scale();
    let labels: Vec<String> = (0..d * d)
        .map(|i| format!("A^{{{},{}}}", i / d + 1, i % d + 1))
        .collect();
    let blocks = grid.blocks().to_vec();
    FiniteRelation::new(labels, |i, j| {
        commutator_norm(&blocks[i], &blocks[j]).expect("uniform block dims") <= bound
    })
}

/// Fires only when the commuting relation is an equivalence with a single
/// class, i.e. every pair of blocks commutes. A multi-class equivalence or a
/// failure of transitivity is reported, not silently accepted.
pub fn commuting_relation_equivalence(rho: &DensityMatrix, cut: Cut, tol: &Tolerances) -> Verdict {
    let rel = commuting_relation(rho, cut, tol);
    let props = relation_properties(&rel);
    match &props.classes {
        Some(classes) if classes.len() == 1 => Verdict::separable(CriterionId::CommuteEquiv),
        Some(classes) => Verdict::Inconclusive {
            diagnostic: format!(
                "commuting relation is an equivalence with {} classes, not one",
                classes.len()
            ),
        },
        None => Verdict::Inconclusive {
            diagnostic: format!(
                "commuting relation is not an equivalence (reflexive={}, symmetric={}, transitive={})",
                props.reflexive, props.symmetric, props.transitive
            ),
        },
    }
}
