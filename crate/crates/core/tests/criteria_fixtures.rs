//! Criteria behaviour on the worked example graphs and appendix states,
//! frozen against independently computed expectations.

mod common;

use common::*;
use gsep_core::criteria::{
    blockrow_cardinality_equivalence, c1_check, commuting_relation_equivalence,
    density_partial_gate_invariance, edge_parity_check, graph_partial_gate_invariance,
    last_qubit_sigma_x_invariance, neighbourhood_cardinality_equivalence,
    neighbourhood_parity_shift_check, neighbourhood_swap_check, paired_edge_parity_check,
    relation_properties, run_all, same_block_edges_check, spectral_neighbourhood_check, th1_check,
    th1_expand_witness, th3_commuting_blocks, AnalysisInput, CriterionId, FiniteRelation,
    ShiftMode, Verdict,
};
use gsep_core::cut::{block_grid, commutator_norm, Cut};
use gsep_core::fixtures::{appendix_state, example_graph, GraphFixture, StateFixture};
use gsep_core::graph::{Field, WeightedGraph};
use gsep_core::matrix::HermitianMatrix;
use gsep_core::oracle::{oracle_verdict, ppt_check, OracleVerdict};
use gsep_core::{DensityMatrix, C64};

fn density_of(id: GraphFixture) -> DensityMatrix {
    example_graph(id).density(&tols()).unwrap()
}

fn cut2() -> Cut {
    Cut::new(2, 1).unwrap()
}

#[test]
fn th1_on_g1_needs_the_solver_and_finds_the_hand_decomposition() {
    let rho = density_of(GraphFixture::G1);
    let verdict = th1_check(&rho, cut2(), &tols());
    let witness = verdict.witness().expect("g1 is feasible");
    assert!(witness.iterations > 0, "fast path must be infeasible");
    // fast-path residual eigenvalue is (2 − 2√2)/12 in density units
    let expected = (2.0 - 2.0 * 2.0f64.sqrt()) / 12.0;
    assert!(
        (witness.fast_path_gap - expected).abs() <= 1e-9,
        "fast path gap {} vs {}",
        witness.fast_path_gap,
        expected
    );
    // the feasible point is the known hand certificate, scaled by 1/12
    let cert = &witness.pairs[0];
    let s_expect =
        HermitianMatrix::from_upper(2, |i, j| c(if i == j { 1.0 } else { -1.0 } / 12.0, 0.0));
    let t_expect = HermitianMatrix::from_upper(2, |i, j| {
        if i == j {
            c(2.0 / 12.0, 0.0)
        } else {
            c(-1.0 / 12.0, -1.0 / 12.0)
        }
    });
    assert!(cert.s.matrix().max_abs_diff(s_expect.matrix()) < 1e-5);
    assert!(cert.t.matrix().max_abs_diff(t_expect.matrix()) < 1e-5);
    let decomposition = th1_expand_witness(witness, &rho, &tols()).unwrap();
    assert!(decomposition.reconstruction_error(&rho) <= 1e-10);
    assert!((decomposition.total_weight() - 1.0).abs() <= 1e-10);
    // feasibility implies PPT, and the oracle is conclusive in 2x2
    assert!(ppt_check(&rho, cut2(), &tols()).unwrap().is_ppt);
}

#[test]
fn th1_on_g2_takes_the_fast_path_to_the_printed_product() {
    let rho = density_of(GraphFixture::G2);
    let verdict = th1_check(&rho, cut2(), &tols());
    let witness = verdict.witness().expect("g2 is feasible");
    assert_eq!(witness.iterations, 0, "fast path is feasible");
    let decomposition = th1_expand_witness(witness, &rho, &tols()).unwrap();
    assert!(decomposition.reconstruction_error(&rho) <= 1e-10);
    // single product term (1/2)[[1,i],[-i,1]] ⊗ (1/2)[[1,1],[1,1]]
    assert_eq!(decomposition.terms.len(), 1);
    let term = &decomposition.terms[0];
    assert!((term.weight - 1.0).abs() <= 1e-12);
    let outer_expect =
        HermitianMatrix::from_upper(2, |i, j| if i == j { c(0.5, 0.0) } else { c(0.0, 0.5) });
    let inner_expect = HermitianMatrix::from_upper(2, |_, _| c(0.5, 0.0));
    assert!(term.outer.entries().max_abs_diff(outer_expect.matrix()) <= 1e-12);
    assert!(term.inner.entries().max_abs_diff(inner_expect.matrix()) <= 1e-12);
}

#[test]
fn block_grids_of_the_printed_examples() {
    // ρ_G3 at m=2: A^{23} = -(1/4)[[1,1],[1,1]]
    let g3 = density_of(GraphFixture::G3);
    let grid = block_grid(g3.entries(), Cut::new(3, 2).unwrap()).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(grid.block(2, 3).get(i, j), c(-0.25, 0.0));
        }
    }
    // ρ_G1 at m=1: off-diagonal block (1/12)[[1, i], [-2+i, 1]]
    let g1 = density_of(GraphFixture::G1);
    let grid = block_grid(g1.entries(), cut2()).unwrap();
    let b = grid.block(1, 2);
    assert!((b.get(0, 0) - c(1.0 / 12.0, 0.0)).norm() < 1e-15);
    assert!((b.get(0, 1) - c(0.0, 1.0 / 12.0)).norm() < 1e-15);
    assert!((b.get(1, 0) - c(-2.0 / 12.0, 1.0 / 12.0)).norm() < 1e-15);
}

#[test]
fn diagonal_state_expands_from_residuals_only() {
    let diag = DensityMatrix::new(
        HermitianMatrix::from_upper(4, |i, j| {
            if i == j {
                c(0.1 * (i + 1) as f64, 0.0)
            } else {
                c(0.0, 0.0)
            }
        }),
        &tols(),
    )
    .unwrap();
    let verdict = th1_check(&diag, cut2(), &tols());
    let witness = verdict.witness().expect("diagonal states are feasible");
    assert_eq!(witness.iterations, 0);
    for cert in &witness.pairs {
        assert_eq!(cert.s.scale(), 0.0);
        assert_eq!(cert.t.scale(), 0.0);
    }
    let d = th1_expand_witness(witness, &diag, &tols()).unwrap();
    assert!(d.reconstruction_error(&diag) <= 1e-12);
}

#[test]
fn swap_check_fires_on_same_block_graphs() {
    // within-row edges are their own swap partners
    let g = example_graph(GraphFixture::GSameBlock);
    assert!(neighbourhood_swap_check(&g, Cut::new(3, 1).unwrap()).is_separable());
}

#[test]
fn th1_on_g3_fires_with_zero_residuals_on_middle_blocks() {
    let rho = density_of(GraphFixture::G3);
    let cut = Cut::new(3, 2).unwrap();
    let verdict = th1_check(&rho, cut, &tols());
    let witness = verdict.witness().expect("g3 is feasible");
    assert_eq!(witness.iterations, 0);
    assert!(witness.residuals[1].scale() <= 1e-12);
    assert!(witness.residuals[2].scale() <= 1e-12);
    let decomposition = th1_expand_witness(witness, &rho, &tols()).unwrap();
    assert!(decomposition.reconstruction_error(&rho) <= 1e-10);
}

#[test]
fn th1_and_c1_on_the_real_k4_example() {
    let rho = density_of(GraphFixture::GRealK4);
    let th1 = th1_check(&rho, cut2(), &tols());
    assert!(th1.is_separable());
    assert_eq!(th1.witness().unwrap().iterations, 0);

    let c1 = c1_check(&rho, cut2(), &tols());
    let witness = c1.witness().expect("blocks are symmetric real");
    assert!(witness.hermitian_only);
    // S aggregates B + C = [[6,4],[4,6]] (in L units; 1/24 here)
    let s_expect =
        HermitianMatrix::from_upper(2, |i, j| c(if i == j { 6.0 } else { 4.0 } / 24.0, 0.0));
    assert!(witness.pairs[0].s.matrix().max_abs_diff(s_expect.matrix()) < 1e-9);
    let decomposition = th1_expand_witness(witness, &rho, &tols()).unwrap();
    assert!(decomposition.reconstruction_error(&rho) <= 1e-10);
}

#[test]
fn c1_is_inconclusive_on_g1_and_fires_on_diagonal_states() {
    let rho = density_of(GraphFixture::G1);
    assert!(!c1_check(&rho, cut2(), &tols()).is_separable());

    let diag = DensityMatrix::new(
        HermitianMatrix::from_upper(4, |i, j| if i == j { c(0.25, 0.0) } else { c(0.0, 0.0) }),
        &tols(),
    )
    .unwrap();
    assert!(c1_check(&diag, cut2(), &tols()).is_separable());
}

#[test]
fn th3_fires_on_its_examples_and_nowhere_it_should_not() {
    for id in [GraphFixture::GTh3A, GraphFixture::GTh3B] {
        let rho = density_of(id);
        assert!(
            th3_commuting_blocks(&rho, cut2(), &tols()).is_separable(),
            "{id:?}"
        );
        // the example blocks commute to machine precision
        let grid = block_grid(rho.entries(), cut2()).unwrap();
        for a in grid.blocks() {
            for b in grid.blocks() {
                assert!(commutator_norm(a, b).unwrap() <= 1e-12 * rho.scale());
            }
        }
    }
    // TH1's g1 has non-commuting off-diagonal partners
    let rho = density_of(GraphFixture::G1);
    assert!(!th3_commuting_blocks(&rho, cut2(), &tols()).is_separable());
    // GHZ at m=2: [A^{14}, A^{41}] ≠ 0
    let ghz = appendix_state(
        StateFixture::Ghz {
            theta: core::f64::consts::FRAC_PI_4,
            phi: 0.0,
        },
        &tols(),
    )
    .unwrap();
    assert!(!th3_commuting_blocks(&ghz, Cut::new(3, 2).unwrap(), &tols()).is_separable());
}

#[test]
fn structural_criteria_fire_on_their_own_fixtures() {
    let m1 = Cut::new(3, 1).unwrap();
    assert!(edge_parity_check(&example_graph(GraphFixture::GParity), m1).is_separable());
    assert!(same_block_edges_check(&example_graph(GraphFixture::GSameBlock), m1).is_separable());
    assert!(same_block_edges_check(&example_graph(GraphFixture::GNbhdWeighted), m1).is_separable());
    assert!(
        graph_partial_gate_invariance(&example_graph(GraphFixture::GPgate3q), m1).is_separable()
    );
    assert!(neighbourhood_swap_check(&example_graph(GraphFixture::GSwap), m1).is_separable());
    let shift = example_graph(GraphFixture::GShift);
    assert!(
        neighbourhood_parity_shift_check(&shift, m1, ShiftMode::OffDiagonalOnly).is_separable()
    );
    assert!(neighbourhood_parity_shift_check(&shift, m1, ShiftMode::AllPairs).is_separable());
    assert!(paired_edge_parity_check(&shift, m1).is_separable());
    assert!(neighbourhood_cardinality_equivalence(
        &example_graph(GraphFixture::K4Complete),
        cut2()
    )
    .is_separable());
}

#[test]
fn structural_criteria_reject_their_counterexamples() {
    let m1 = cut2();
    // inner indices 1 and 2 differ in parity
    let mut g = WeightedGraph::new(2, Field::Real).unwrap();
    g.add_edge(1, 2, c(1.0, 0.0)).unwrap();
    assert!(!edge_parity_check(&g, m1).is_separable());

    // v11-v21 crosses blocks
    let mut g = WeightedGraph::new(2, Field::Real).unwrap();
    g.add_edge(1, 3, c(1.0, 0.0)).unwrap();
    assert!(!same_block_edges_check(&g, m1).is_separable());

    // lone antidiagonal edge: image edge is absent
    let mut g = WeightedGraph::new(2, Field::Real).unwrap();
    g.add_edge(1, 4, c(1.0, 0.0)).unwrap();
    assert!(!graph_partial_gate_invariance(&g, m1).is_separable());
    // and the paired-edge partner (v12, v21) is missing
    assert!(!paired_edge_parity_check(&g, m1).is_separable());
    assert!(!neighbourhood_swap_check(&g, m1).is_separable());
    assert!(!neighbourhood_parity_shift_check(&g, m1, ShiftMode::AllPairs).is_separable());

    // empty graphs pass vacuously
    let empty = WeightedGraph::new(2, Field::Real).unwrap();
    assert!(edge_parity_check(&empty, m1).is_separable());
    assert!(paired_edge_parity_check(&empty, m1).is_separable());
    assert!(graph_partial_gate_invariance(&empty, m1).is_separable());

    // removing (v21, v13) from the swap fixture breaks (v11, v23)'s partner
    let swap = example_graph(GraphFixture::GSwap);
    let mut broken = WeightedGraph::new(3, Field::Real).unwrap();
    for &(u, v) in swap.edges().keys() {
        if (u, v) != (3, 5) {
            broken.add_edge(u, v, c(1.0, 0.0)).unwrap();
        }
    }
    assert!(!neighbourhood_swap_check(&broken, Cut::new(3, 1).unwrap()).is_separable());
}

#[test]
fn partial_gate_leaves_the_gate_invariant_fixture_unchanged() {
    let g = example_graph(GraphFixture::GPgate3q);
    let gated = g.partial_gate(Cut::new(3, 1).unwrap()).unwrap();
    assert_eq!(gated.edges(), g.edges());
}

#[test]
fn swap_fixture_neighbourhoods_match_the_expected_sets() {
    let g = example_graph(GraphFixture::GSwap);
    // N(v11) = {v12, v14, v23, v24} in flat indices
    let n11: Vec<usize> = g.open_neighbourhood(1).into_iter().collect();
    assert_eq!(n11, [2, 4, 7, 8]);
    let n13: Vec<usize> = g.open_neighbourhood(3).into_iter().collect();
    assert_eq!(n13, [4, 5]);
}

#[test]
fn density_invariance_criteria() {
    let g3 = density_of(GraphFixture::G3);
    assert!(density_partial_gate_invariance(&g3, Cut::new(3, 2).unwrap(), &tols()).is_separable());
    let g1 = density_of(GraphFixture::G1);
    assert!(!density_partial_gate_invariance(&g1, cut2(), &tols()).is_separable());

    let uniform = appendix_state(StateFixture::Uniform2q, &tols()).unwrap();
    assert!(last_qubit_sigma_x_invariance(&uniform, &tols()).is_separable());
    let ghz = appendix_state(
        StateFixture::Ghz {
            theta: core::f64::consts::FRAC_PI_4,
            phi: 0.0,
        },
        &tols(),
    )
    .unwrap();
    assert!(!last_qubit_sigma_x_invariance(&ghz, &tols()).is_separable());
}

#[test]
fn cardinality_criteria() {
    // 2-qubit path graph has degrees (1, 2, 2, 1)
    let mut path = WeightedGraph::new(2, Field::Real).unwrap();
    path.add_edge(1, 2, c(1.0, 0.0)).unwrap();
    path.add_edge(2, 3, c(1.0, 0.0)).unwrap();
    path.add_edge(3, 4, c(1.0, 0.0)).unwrap();
    assert!(!neighbourhood_cardinality_equivalence(&path, cut2()).is_separable());

    let mut matching = WeightedGraph::new(2, Field::Real).unwrap();
    matching.add_edge(1, 2, c(1.0, 0.0)).unwrap();
    matching.add_edge(3, 4, c(1.0, 0.0)).unwrap();
    assert!(neighbourhood_cardinality_equivalence(&matching, cut2()).is_separable());

    // two disjoint K4s: rows uniform at degree 3
    let m1 = Cut::new(3, 1).unwrap();
    assert!(
        blockrow_cardinality_equivalence(&example_graph(GraphFixture::GSameBlock), m1)
            .is_separable()
    );
    // K4 on row 1, perfect matching on row 2: rows uniform at 3 and 1
    let mut mixed = WeightedGraph::new(3, Field::Real).unwrap();
    for (u, v) in [
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 3),
        (2, 4),
        (3, 4),
        (5, 6),
        (7, 8),
    ] {
        mixed.add_edge(u, v, c(1.0, 0.0)).unwrap();
    }
    assert!(blockrow_cardinality_equivalence(&mixed, m1).is_separable());
    // mixed degrees inside one row
    let mut bad = WeightedGraph::new(2, Field::Real).unwrap();
    bad.add_edge(1, 2, c(1.0, 0.0)).unwrap();
    bad.add_edge(1, 3, c(1.0, 0.0)).unwrap();
    assert!(!blockrow_cardinality_equivalence(&bad, cut2()).is_separable());
}

#[test]
fn commuting_relation_on_ghz_blocks_is_not_transitive() {
    let ghz = appendix_state(
        StateFixture::Ghz {
            theta: core::f64::consts::FRAC_PI_4,
            phi: 0.0,
        },
        &tols(),
    )
    .unwrap();
    let cut = Cut::new(3, 2).unwrap();
    let rel = gsep_core::criteria::commuting_relation(&ghz, cut, &tols());
    let props = relation_properties(&rel);
    assert!(props.reflexive);
    assert!(props.symmetric);
    assert!(!props.transitive);
    match commuting_relation_equivalence(&ghz, cut, &tols()) {
        Verdict::Inconclusive { diagnostic } => {
            assert!(diagnostic.contains("not an equivalence"), "{diagnostic}")
        }
        v => panic!("expected inconclusive, got {v:?}"),
    }
}

#[test]
fn commuting_relation_fires_on_th3_example_and_diagonal_blocks() {
    let rho = density_of(GraphFixture::GTh3A);
    assert!(commuting_relation_equivalence(&rho, cut2(), &tols()).is_separable());
    let g3 = density_of(GraphFixture::G3);
    // block-diagonal at m=2 with equal middle blocks: single class
    assert!(commuting_relation_equivalence(&g3, Cut::new(3, 2).unwrap(), &tols()).is_separable());
}

#[test]
fn same_cardinality_relation_is_always_an_equivalence() {
    let mut rng = SplitMix64::new(21);
    for _ in 0..30 {
        let g = random_simple_graph(&mut rng, 2, 0.5);
        let labels: Vec<String> = (1..=4).map(|v| format!("v{v}")).collect();
        let degs: Vec<usize> = (1..=4).map(|v| g.degree(v)).collect();
        let rel = FiniteRelation::new(labels, |i, j| degs[i] == degs[j]);
        assert!(relation_properties(&rel).is_equivalence);
    }
}

#[test]
fn spectral_criterion_closed_form_cases() {
    // perfect matching: λ_max = 2/4 = N1/|E| = 1/2
    let mut matching = WeightedGraph::new(2, Field::Real).unwrap();
    matching.add_edge(1, 2, c(1.0, 0.0)).unwrap();
    matching.add_edge(3, 4, c(1.0, 0.0)).unwrap();
    assert!(spectral_neighbourhood_check(&matching, &tols()).is_separable());

    // star on 4 vertices: λ_max = 4/6 = 2/3 ≠ 1/3
    let mut star = WeightedGraph::new(2, Field::Real).unwrap();
    for v in 2..=4 {
        star.add_edge(1, v, c(1.0, 0.0)).unwrap();
    }
    assert!(!spectral_neighbourhood_check(&star, &tols()).is_separable());

    // K4: λ_max = 4/12 = 1/3 ≠ 3/6
    assert!(
        !spectral_neighbourhood_check(&example_graph(GraphFixture::K4Complete), &tols())
            .is_separable()
    );
}

#[test]
fn run_all_on_g1_matches_the_computed_truth() {
    let g = example_graph(GraphFixture::G1);
    let rho = g.density(&tols()).unwrap();
    let results = run_all(AnalysisInput::Graph(&g, &rho), cut2(), &tols());
    assert_eq!(results.len(), CriterionId::ALL.len());
    let verdict = |id: CriterionId| {
        results
            .iter()
            .find(|(i, _)| *i == id)
            .map(|(_, v)| v.is_separable())
            .unwrap()
    };
    assert!(verdict(CriterionId::Th1));
    assert!(!verdict(CriterionId::C1));
    assert!(!verdict(CriterionId::Th3));
    // catalog order is preserved
    let ids: Vec<CriterionId> = results.iter().map(|(i, _)| *i).collect();
    assert_eq!(ids, CriterionId::ALL.to_vec());
}

#[test]
fn run_all_on_density_only_skips_graph_criteria() {
    let rho = appendix_state(StateFixture::W3, &tols()).unwrap();
    for m in [1u32, 2] {
        let cut = Cut::new(3, m).unwrap();
        let results = run_all(AnalysisInput::Density(&rho), cut, &tols());
        assert_eq!(results.len(), 6);
        for (id, verdict) in &results {
            assert!(!id.needs_graph());
            assert!(!verdict.is_separable(), "{id:?} fired on W3 at m={m}");
        }
    }
}

#[test]
fn th1_verdict_survives_inner_phase_relabeling() {
    // conjugate g1 by I ⊗ diag(1, e^{iφ}): verdict must not change
    let rho = density_of(GraphFixture::G1);
    let phases = [0.9f64, 2.3];
    let u = |k: usize| C64::from_polar(1.0, phases[k]);
    let conjugated =
        HermitianMatrix::symmetrize(&gsep_core::matrix::CMatrix::from_fn(4, |i, j| {
            rho.entries().get(i, j) * u(i % 2) * u(j % 2).conj()
        }));
    let rho2 = DensityMatrix::new(conjugated, &tols()).unwrap();
    let v1 = th1_check(&rho, cut2(), &tols());
    let v2 = th1_check(&rho2, cut2(), &tols());
    assert_eq!(v1.is_separable(), v2.is_separable());
    let w2 = v2.witness().unwrap();
    let d2 = th1_expand_witness(w2, &rho2, &tols()).unwrap();
    assert!(d2.reconstruction_error(&rho2) <= 1e-10);
}

#[test]
fn same_block_implies_th1_and_parity_implies_th3_at_the_fine_cut() {
    let mut rng = SplitMix64::new(22);
    let mut seen_same_block = 0;
    let mut seen_parity = 0;
    for _ in 0..300 {
        let n = 2 + (rng.next_u64() % 2) as u32; // 2 or 3 qubits
        let cut = Cut::new(n, 1).unwrap();
        let g = random_simple_graph(&mut rng, n, 0.4);
        let rho = match g.density(&tols()) {
            Ok(rho) => rho,
            Err(_) => continue, // empty graph
        };
        if same_block_edges_check(&g, cut).is_separable() {
            seen_same_block += 1;
            assert!(
                th1_check(&rho, cut, &tols()).is_separable(),
                "block-diagonal state must be feasible"
            );
            if n == 2 {
                // 2-qubit rows are at most one edge, so diagonal blocks commute
                assert!(th3_commuting_blocks(&rho, cut, &tols()).is_separable());
            }
        }
        if edge_parity_check(&g, cut).is_separable() {
            seen_parity += 1;
            // parity makes every 2x2 cell diagonal: commuting at m = n-1
            let fine = Cut::new(n, n - 1).unwrap();
            assert!(th3_commuting_blocks(&rho, fine, &tols()).is_separable());
        }
    }
    assert!(
        seen_same_block > 5,
        "sampler never produced same-block graphs"
    );
    assert!(seen_parity > 5, "sampler never produced parity graphs");
}

#[test]
fn same_block_does_not_force_th3_at_coarse_cuts() {
    // rows carry different path Laplacians; diagonal blocks do not commute
    let mut g = WeightedGraph::new(3, Field::Real).unwrap();
    g.add_edge(1, 2, c(1.0, 0.0)).unwrap();
    g.add_edge(6, 7, c(1.0, 0.0)).unwrap();
    let cut = Cut::new(3, 1).unwrap();
    assert!(same_block_edges_check(&g, cut).is_separable());
    let rho = g.density(&tols()).unwrap();
    assert!(!th3_commuting_blocks(&rho, cut, &tols()).is_separable());
    // the parity fixture shows the same at m=1: blocks are not even diagonal
    let parity = example_graph(GraphFixture::GParity);
    let rho = parity.density(&tols()).unwrap();
    assert!(edge_parity_check(&parity, cut).is_separable());
    assert!(!th3_commuting_blocks(&rho, cut, &tols()).is_separable());
    assert!(th3_commuting_blocks(&rho, Cut::new(3, 2).unwrap(), &tols()).is_separable());
}

#[test]
fn appendix_separable_states_fire_th1_where_feasible() {
    let tol = tols();
    let pi = core::f64::consts::PI;
    // balanced or degenerate superpositions admit the block decomposition
    for theta in [0.0, pi / 4.0] {
        for phi in [0.0, pi / 2.0] {
            for (state, m) in [
                (StateFixture::OneExc3q { theta, phi }, 1u32),
                (StateFixture::TwoExc3q { theta, phi }, 2u32),
            ] {
                let rho = appendix_state(state, &tol).unwrap();
                let cut = Cut::new(3, m).unwrap();
                let verdict = th1_check(&rho, cut, &tol);
                let witness = verdict.witness().unwrap_or_else(|| {
                    panic!("{state:?} at theta={theta} phi={phi} must be feasible")
                });
                let d = th1_expand_witness(witness, &rho, &tol).unwrap();
                assert!(d.reconstruction_error(&rho) <= 1e-10);
            }
        }
    }
    // the coherent factor sits on the outer side: dominance needs
    // min(cos², sin²) ≥ cosθ·sinθ·(|cosφ|+|sinφ|), violated off balance
    let rho = appendix_state(
        StateFixture::OneExc3q {
            theta: pi / 3.0,
            phi: 0.0,
        },
        &tol,
    )
    .unwrap();
    assert!(!th1_check(&rho, Cut::new(3, 1).unwrap(), &tol).is_separable());
}

#[test]
fn appendix_entangled_states_are_npt_and_fire_nothing() {
    let tol = tols();
    let pi4 = core::f64::consts::FRAC_PI_4;
    let cases: Vec<(DensityMatrix, Vec<u32>)> = vec![
        (
            appendix_state(
                StateFixture::Ghz {
                    theta: pi4,
                    phi: 0.0,
                },
                &tol,
            )
            .unwrap(),
            vec![1, 2],
        ),
        (appendix_state(StateFixture::W3, &tol).unwrap(), vec![1, 2]),
        (
            appendix_state(StateFixture::WType { n: 1, delta: 0.0 }, &tol).unwrap(),
            vec![1, 2],
        ),
        (
            appendix_state(StateFixture::Mems { delta: 0.5 }, &tol).unwrap(),
            vec![1],
        ),
        (
            appendix_state(StateFixture::Mems { delta: 0.8 }, &tol).unwrap(),
            vec![1],
        ),
        (
            appendix_state(StateFixture::WernerLike { a: 0.5 }, &tol).unwrap(),
            vec![1],
        ),
    ];
    for (rho, cuts) in &cases {
        for &m in cuts {
            let cut = Cut::new(rho.n_qubits(), m).unwrap();
            let ppt = ppt_check(rho, cut, &tol).unwrap();
            assert!(
                ppt.min_eigenvalue < -1e-9,
                "min pt eig {}",
                ppt.min_eigenvalue
            );
            assert!(matches!(
                oracle_verdict(rho, cut, &tol).unwrap(),
                OracleVerdict::Entangled(_)
            ));
            for (id, verdict) in run_all(AnalysisInput::Density(rho), cut, &tol) {
                assert!(!verdict.is_separable(), "{id:?} fired at m={m}");
            }
        }
    }
}

#[test]
fn spectral_criterion_is_unsound_on_k4_minus_an_antidiagonal_edge() {
    // K4 without (v12, v21) has degrees (3,2,2,3), so λ_max = 2/5 = N₁/|E|
    // and the criterion fires; the state is nevertheless NPT across m=1 with
    // minimum partial-transpose eigenvalue (2−√5)/10. The audit harness
    // surfaces this as a disagreement rather than suppressing it.
    let tol = tols();
    for missing in [(2usize, 3usize), (1, 4)] {
        let mut g = WeightedGraph::new(2, Field::Real).unwrap();
        for (u, v) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            if (u, v) != missing {
                g.add_edge(u, v, c(1.0, 0.0)).unwrap();
            }
        }
        assert!(spectral_neighbourhood_check(&g, &tol).is_separable());
        let rho = g.density(&tol).unwrap();
        let ppt = ppt_check(&rho, cut2(), &tol).unwrap();
        let expected = (2.0 - 5.0f64.sqrt()) / 10.0;
        assert!(
            (ppt.min_eigenvalue - expected).abs() < 1e-12,
            "missing {missing:?}: {} vs {}",
            ppt.min_eigenvalue,
            expected
        );
        assert!(matches!(
            oracle_verdict(&rho, cut2(), &tol).unwrap(),
            OracleVerdict::Entangled(_)
        ));
    }
}

#[test]
fn edge_parity_fixture_is_entangled_across_the_coarse_cut() {
    // the parity fixture's claim lives at the last-qubit cut: across m=1 the
    // state is NPT with minimum partial-transpose eigenvalue -1/8
    let tol = tols();
    let rho = example_graph(GraphFixture::GParity).density(&tol).unwrap();
    let ppt1 = ppt_check(&rho, Cut::new(3, 1).unwrap(), &tol).unwrap();
    assert!((ppt1.min_eigenvalue + 0.125).abs() < 1e-12);
    let ppt2 = ppt_check(&rho, Cut::new(3, 2).unwrap(), &tol).unwrap();
    assert!(ppt2.is_ppt);
}

#[test]
fn werner_pt_minimum_matches_the_closed_form() {
    let tol = tols();
    let a = 0.5f64;
    let rho = appendix_state(StateFixture::WernerLike { a }, &tol).unwrap();
    let ppt = ppt_check(&rho, cut2(), &tol).unwrap();
    // min eig of the PT corner block [[1-a, a/2], [a/2, 0]]
    let expected = 0.5 * ((1.0 - a) - ((1.0 - a).powi(2) + a * a).sqrt());
    assert!(
        (ppt.min_eigenvalue - expected).abs() < 1e-12,
        "{} vs {}",
        ppt.min_eigenvalue,
        expected
    );
}
