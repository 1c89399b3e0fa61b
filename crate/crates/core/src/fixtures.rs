//! Standard configurations: the shipped JSON fixtures and generators for the
//! path, cycle and tree families.

use std::collections::VecDeque;

use crate::config::{parse_document, ConfigurationGraph, EmbeddedConfiguration, ParsedConfig};

/// Fixture names shipped with the crate, with their JSON text.
pub const NAMED: &[(&str, &str)] = &[
    ("torus", include_str!("../fixtures/torus.json")),
    ("a3", include_str!("../fixtures/a3.json")),
    ("d4", include_str!("../fixtures/d4.json")),
    ("p2", include_str!("../fixtures/p2.json")),
    ("p6", include_str!("../fixtures/p6.json")),
    ("e6", include_str!("../fixtures/e6.json")),
    ("e7", include_str!("../fixtures/e7.json")),
    ("e8", include_str!("../fixtures/e8.json")),
    ("q5", include_str!("../fixtures/q5.json")),
    ("r7", include_str!("../fixtures/r7.json")),
    ("eh10", include_str!("../fixtures/eh10.json")),
];

pub fn named(name: &str) -> Option<ParsedConfig> {
    NAMED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| parse_document(text).expect("shipped fixture is valid"))
}

fn named_embedding(name: &str) -> EmbeddedConfiguration {
    named(name)
        .and_then(|p| p.embedding)
        .expect("fixture carries an embedding")
}

/// One `a` and one `b` meeting once.
pub fn torus() -> EmbeddedConfiguration {
    named_embedding("torus")
}

/// `a_1` meeting `b_1` and `b_2` once each.
pub fn a3_embedded() -> EmbeddedConfiguration {
    named_embedding("a3")
}

/// The Eh10 tree with the embedding whose closed-up surface has genus 5.
pub fn lehmer() -> EmbeddedConfiguration {
    named_embedding("eh10")
}

/// Two-colours a connected simple graph on `0..k` with vertex 0 in `A`;
/// within each colour class vertices keep their relative order.
pub fn bicolored(k: usize, edges: &[(usize, usize)]) -> ConfigurationGraph {
    let mut adj = vec![Vec::new(); k];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut colour = vec![None; k];
    colour[0] = Some(0u8);
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if colour[v].is_none() {
                colour[v] = Some(1 - colour[u].unwrap());
                queue.push_back(v);
            }
        }
    }
    let colour: Vec<u8> = colour
        .into_iter()
        .map(|c| c.expect("graph is connected"))
        .collect();
    let mut rank = vec![0; k];
    let (mut n_a, mut n_b) = (0, 0);
    for v in 0..k {
        if colour[v] == 0 {
            rank[v] = n_a;
            n_a += 1;
        } else {
            rank[v] = n_b;
            n_b += 1;
        }
    }
    let mut mult = vec![vec![0u32; n_b]; n_a];
    for &(u, v) in edges {
        assert_ne!(colour[u], colour[v], "graph is not bipartite");
        let (a, b) = if colour[u] == 0 { (u, v) } else { (v, u) };
        mult[rank[a]][rank[b]] += 1;
    }
    ConfigurationGraph::from_matrix(mult).expect("bicoloured graph is valid")
}

/// The path `A_n` (`n >= 2`); for odd `n` the end vertices lie in `B`.
pub fn path(n: usize) -> ConfigurationGraph {
    let edges: Vec<(usize, usize)> = (1..n).map(|k| (k - 1, k)).collect();
    bicolored(n, &edges).swapped()
}

/// The cycle on `n` vertices (`n` even, `n >= 4`).
pub fn cycle(n: usize) -> ConfigurationGraph {
    let edges: Vec<(usize, usize)> = (0..n).map(|k| (k, (k + 1) % n)).collect();
    bicolored(n, &edges)
}

/// Two curves meeting twice.
pub fn p2() -> ConfigurationGraph {
    ConfigurationGraph::from_matrix(vec![vec![2]]).unwrap()
}

/// One centre joined to `k` leaves.
pub fn star(k: usize) -> ConfigurationGraph {
    let edges: Vec<(usize, usize)> = (1..=k).map(|v| (0, v)).collect();
    bicolored(k + 1, &edges)
}

/// A branch vertex carrying three legs with the given numbers of vertices.
pub fn t_shape(l1: usize, l2: usize, l3: usize) -> ConfigurationGraph {
    let mut edges = Vec::new();
    let mut next = 1;
    for len in [l1, l2, l3] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    bicolored(next, &edges)
}

/// `D_c`: legs of lengths 1, 1, c - 3.
pub fn d_graph(c: usize) -> ConfigurationGraph {
    t_shape(1, 1, c - 3)
}

/// The affine `D` tree on `n >= 6` vertices: a path of `n - 4` vertices with
/// two extra leaves on each end.
pub fn q_tree(n: usize) -> ConfigurationGraph {
    let s = n - 4;
    let mut edges: Vec<(usize, usize)> = (1..s).map(|k| (k - 1, k)).collect();
    edges.extend([(0, s), (0, s + 1), (s - 1, s + 2), (s - 1, s + 3)]);
    bicolored(n, &edges)
}

/// The Eh10 tree: legs 1, 2, 6 from the branch vertex.
pub fn eh10() -> ConfigurationGraph {
    t_shape(1, 2, 6)
}

/// Every curve visits its intersection points in increasing index order of
/// the other family, all crossings positive.
pub fn standard_embedding(g: &ConfigurationGraph) -> EmbeddedConfiguration {
    let a_orders: Vec<Vec<usize>> = (0..g.n_a())
        .map(|i| {
            (0..g.n_b())
                .flat_map(|j| std::iter::repeat_n(j, g.mult(i, j) as usize))
                .collect()
        })
        .collect();
    let b_orders: Vec<Vec<(usize, usize)>> = (0..g.n_b())
        .map(|j| {
            (0..g.n_a())
                .flat_map(|i| (0..g.mult(i, j) as usize).map(move |occ| (i, occ)))
                .collect()
        })
        .collect();
    let signs: Vec<Vec<i8>> = a_orders.iter().map(|o| vec![1; o.len()]).collect();
    EmbeddedConfiguration::from_orders(g.clone(), &a_orders, &b_orders, &signs)
        .expect("standard embedding is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_fixtures_parse() {
        for (name, _) in NAMED {
            assert!(named(name).is_some(), "{name}");
        }
    }

    #[test]
    fn shipped_fixtures_match_generators() {
        let g = |n: &str| named(n).unwrap().graph;
        assert_eq!(g("eh10"), eh10());
        assert_eq!(g("a3"), path(3));
        assert_eq!(g("d4"), star(3));
        assert_eq!(g("p2"), p2());
        assert_eq!(g("p6"), cycle(6));
        assert_eq!(g("e6"), t_shape(1, 2, 2));
        assert_eq!(g("e7"), t_shape(1, 2, 3));
        assert_eq!(g("e8"), t_shape(1, 2, 4));
        assert_eq!(g("q5"), star(4));
        assert_eq!(g("r7"), t_shape(2, 2, 2));
        assert_eq!(lehmer(), standard_embedding(&eh10()));
    }

    #[test]
    fn eh10_matrix() {
        let n = eh10().intersection_matrix().to_i64();
        assert_eq!(
            n,
            vec![
                vec![1, 1, 1, 0, 0],
                vec![0, 1, 0, 0, 0],
                vec![0, 0, 1, 1, 0],
                vec![0, 0, 0, 1, 1],
                vec![0, 0, 0, 0, 1],
            ]
        );
    }
}
