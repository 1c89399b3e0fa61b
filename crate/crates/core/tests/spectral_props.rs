use proptest::prelude::*;

use multitwist::classify::{closed_form_mu, family_of};
use multitwist::config::ConfigurationGraph;
use multitwist::fixtures;
use multitwist::numthy::IntPolynomial;
use multitwist::spectral::{char_poly_exact, graph_mu, mu_squared_exact, DEFAULT_TOL};

fn graph_strategy() -> impl Strategy<Value = ConfigurationGraph> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(a, b)| proptest::collection::vec(proptest::collection::vec(0u32..=2, b), a))
        .prop_filter_map("connected", |m| {
            ConfigurationGraph::from_matrix(m).ok().filter(|g| g.is_connected())
        })
}

fn max_mu(g: &ConfigurationGraph) -> f64 {
    g.components()
        .iter()
        .map(|c| graph_mu(c, DEFAULT_TOL).unwrap())
        .fold(0.0, f64::max)
}

proptest! {
    #[test]
    fn removing_an_edge_never_raises_mu(g in graph_strategy(), pick in any::<prop::sample::Index>()) {
        let mu = graph_mu(&g, DEFAULT_TOL).unwrap();
        let edges: Vec<(usize, usize)> = (0..g.n_a())
            .flat_map(|i| (0..g.n_b()).map(move |j| (i, j)))
            .filter(|&(i, j)| g.mult(i, j) > 0)
            .collect();
        let (i, j) = edges[pick.index(edges.len())];
        if let Some(h) = g.with_edge_removed(i, j) {
            if h.edge_count() > 0 {
                prop_assert!(max_mu(&h) <= mu + 1e-9);
            }
        }
    }

    #[test]
    fn adjacency_and_gram_char_polys_agree(g in graph_strategy()) {
        // x^nA det(xI - Ad) = x^nB det(x^2 I - N Nᵗ)
        let x = IntPolynomial::x();
        let lhs = &x.pow(g.n_a() as u32) * &char_poly_exact(&g.adjacency_matrix());
        let rhs = &x.pow(g.n_b() as u32)
            * &char_poly_exact(&g.intersection_matrix().n_nt()).compose_square();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mu_squared_is_the_largest_root(g in graph_strategy()) {
        let mu = graph_mu(&g, DEFAULT_TOL).unwrap();
        let mut t = mu_squared_exact(&g).unwrap();
        prop_assert!(t.is_root_of(&char_poly_exact(&g.intersection_matrix().n_nt())));
        prop_assert!((t.approximate(1e-14) - mu * mu).abs() <= 1e-9 * mu.max(1.0).powi(2));
    }

    #[test]
    fn swapping_sides_keeps_mu(g in graph_strategy()) {
        let a = graph_mu(&g, DEFAULT_TOL).unwrap();
        let b = graph_mu(&g.swapped(), DEFAULT_TOL).unwrap();
        prop_assert!((a - b).abs() <= 1e-9);
    }
}

#[test]
fn closed_forms_match_numeric_mu() {
    let mut graphs: Vec<ConfigurationGraph> = (2..=50).map(fixtures::path).collect();
    graphs.extend((4..=50).map(fixtures::d_graph));
    graphs.extend((2..=25).map(|k| fixtures::cycle(2 * k)));
    graphs.extend((6..=50).map(fixtures::q_tree));
    graphs.push(fixtures::p2());
    graphs.push(fixtures::star(4));
    for name in ["e6", "e7", "e8", "r7"] {
        graphs.push(fixtures::named(name).unwrap().graph);
    }
    for g in &graphs {
        let label = family_of(g).unwrap();
        let closed = closed_form_mu(&label).unwrap().value();
        let mu = graph_mu(g, DEFAULT_TOL).unwrap();
        assert!((closed - mu).abs() <= 1e-9, "{}: {closed} vs {mu}", label.family);
    }
    assert!(closed_form_mu(&family_of(&fixtures::eh10()).unwrap()).is_err());
}
