//! Property tests for the graph model and the text format.

mod common;

use common::*;
use gsep_core::format::{parse_graph, serialize_graph};
use gsep_core::graph::{Field, WeightedGraph};
use gsep_core::Cut;
use proptest::prelude::*;

fn arb_weight(field: Field) -> BoxedStrategy<(f64, f64)> {
    match field {
        Field::Real => ((-4.0..4.0f64).prop_filter("nonzero", |w| w.abs() > 1e-6))
            .prop_map(|re| (re, 0.0))
            .boxed(),
        Field::Complex => (-4.0..4.0f64, -4.0..4.0f64)
            .prop_filter("nonzero", |(re, im)| re.abs() + im.abs() > 1e-6)
            .boxed(),
    }
}

fn arb_graph() -> impl Strategy<Value = WeightedGraph> {
    (1u32..=3, proptest::bool::ANY).prop_flat_map(|(n, complex)| {
        let field = if complex { Field::Complex } else { Field::Real };
        let d = 1usize << n;
        let pairs: Vec<(usize, usize)> = (1..=d)
            .flat_map(|u| ((u + 1)..=d).map(move |v| (u, v)))
            .collect();
        let edges =
            proptest::collection::vec((proptest::sample::select(pairs), arb_weight(field)), 0..=6);
        let loops = proptest::collection::vec((1..=d, -2.0..3.0f64), 0..=3);
        (Just((n, field)), edges, loops).prop_map(|((n, field), edges, loops)| {
            let mut g = WeightedGraph::new(n, field).unwrap();
            for ((u, v), (re, im)) in edges {
                let _ = g.add_edge(u, v, c(re, im)); // duplicates skipped
            }
            for (v, w) in loops {
                let _ = g.add_loop(v, c(w, 0.0));
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn laplacian_is_exactly_hermitian(g in arb_graph()) {
        let l = g.laplacian();
        prop_assert_eq!(l.matrix().max_hermitian_asymmetry(), 0.0);
    }

    #[test]
    fn parse_serialize_round_trips(g in arb_graph()) {
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        // serialize ∘ parse is canonical (idempotent)
        prop_assert_eq!(serialize_graph(&back), text);
    }

    #[test]
    fn partial_gate_is_an_involution(g in arb_graph()) {
        let n = g.n_qubits();
        if n < 2 {
            return Ok(());
        }
        for m in 1..n {
            let cut = Cut::new(n, m).unwrap();
            let once = g.partial_gate(cut).unwrap();
            prop_assert_eq!(once.partial_gate(cut).unwrap(), g.clone());
        }
    }

    #[test]
    fn complex_graphs_with_nonnegative_loops_define_states(
        seed in proptest::num::u64::ANY,
        n in 1u32..=3,
        p in 0.1..0.9f64,
    ) {
        let mut rng = SplitMix64::new(seed);
        let mut g = random_complex_graph(&mut rng, n, p);
        for v in 1..=g.vertex_count() {
            let _ = g.add_loop(v, c(rng.next_f64(), 0.0));
        }
        if g.edge_count() == 0 {
            return Ok(());
        }
        // diagonally dominant by construction, never rejected
        prop_assert!(g.density(&tols()).is_ok());
    }
}

#[test]
fn simple_graph_trace_is_twice_the_edge_count() {
    let mut rng = SplitMix64::new(41);
    for _ in 0..40 {
        let g = random_simple_graph(&mut rng, 3, 0.4);
        let l = g.laplacian();
        assert_eq!(l.trace(), 2.0 * g.edge_count() as f64);
        for v in 1..=g.vertex_count() {
            assert_eq!(l.get(v - 1, v - 1).re, g.degree(v) as f64);
        }
    }
}

#[test]
fn thm7_neighbourhood_example_values() {
    // open and closed neighbourhoods on the swap fixture
    let g = gsep_core::fixtures::example_graph(gsep_core::fixtures::GraphFixture::GSwap);
    let open: Vec<usize> = g.open_neighbourhood(1).into_iter().collect();
    assert_eq!(open, [2, 4, 7, 8]);
    let mut closed: Vec<usize> = g.closed_neighbourhood(1).into_iter().collect();
    closed.sort_unstable();
    assert_eq!(closed, [1, 2, 4, 7, 8]);
}
