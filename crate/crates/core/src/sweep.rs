//! Exhaustive enumeration of small configuration graphs and the property
//! suites run over them.
//!
//! Multigraphs are generated as intersection matrices with rows and columns
//! in non-increasing lexicographic order. Every matrix can be permuted into
//! that form, so every isomorphism class occurs at least once (some occur
//! more than once). Swapping `A` and `B` gives an isomorphic graph, so only
//! `nA <= nB` is generated.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{family_of, GraphClass, CRITICAL_TOL};
use crate::config::ConfigurationGraph;
use crate::coxeter::{
    bicolored_coxeter_spectral_radius, coxeter_form, form_signature, howlett_element, main7_report,
    mat_mul, preserves_form, reflection_matrices, to_rational, CoxeterSystem, FormClass,
};
use crate::error::Result;
use crate::fixtures::bicolored;
use crate::spectral::graph_mu;

struct Enumerator {
    rows: usize,
    cols: usize,
    max_total: u32,
    out: Vec<Vec<Vec<u32>>>,
}

impl Enumerator {
    /// Fills cell `(i, j)`. `row_eq`: row `i` equals row `i-1` on the columns
    /// filled so far. `col_eq[j]`: columns `j-1` and `j` agree on the rows
    /// filled so far.
    fn fill(&mut self, m: &mut Vec<Vec<u32>>, i: usize, j: usize, budget: u32, row_eq: bool, col_eq: &mut Vec<bool>) {
        if j == self.cols {
            if m[i].iter().all(|&x| x == 0) {
                return;
            }
            if i + 1 == self.rows {
                self.finish(m);
                return;
            }
            let mut next = col_eq.clone();
            self.fill(m, i + 1, 0, budget, true, &mut next);
            return;
        }
        // every later row needs at least one edge
        let reserve = (self.rows - i - 1) as u32;
        if budget < reserve {
            return;
        }
        let mut hi = budget - reserve;
        if i > 0 && row_eq {
            hi = hi.min(m[i - 1][j]);
        }
        if j > 0 && col_eq[j] {
            hi = hi.min(m[i][j - 1]);
        }
        for v in (0..=hi).rev() {
            m[i][j] = v;
            let saved = col_eq[j];
            if j > 0 {
                col_eq[j] = saved && v == m[i][j - 1];
            }
            let req = i > 0 && row_eq && v == m[i - 1][j];
            self.fill(m, i, j + 1, budget - v, req, col_eq);
            col_eq[j] = saved;
        }
        m[i][j] = 0;
    }

    fn finish(&mut self, m: &[Vec<u32>]) {
        let total: u32 = m.iter().flatten().sum();
        if (total as usize) + 1 < self.rows + self.cols {
            return;
        }
        if (0..self.cols).any(|j| m.iter().all(|r| r[j] == 0)) {
            return;
        }
        if !connected(m) {
            return;
        }
        self.out.push(m.to_vec());
    }
}

fn connected(m: &[Vec<u32>]) -> bool {
    let (r, c) = (m.len(), m[0].len());
    let mut seen_a = vec![false; r];
    let mut seen_b = vec![false; c];
    let mut stack = vec![(true, 0usize)];
    seen_a[0] = true;
    while let Some((is_a, v)) = stack.pop() {
        if is_a {
            for j in 0..c {
                if m[v][j] > 0 && !seen_b[j] {
                    seen_b[j] = true;
                    stack.push((false, j));
                }
            }
        } else {
            for i in 0..r {
                if m[i][v] > 0 && !seen_a[i] {
                    seen_a[i] = true;
                    stack.push((true, i));
                }
            }
        }
    }
    seen_a.iter().chain(&seen_b).all(|&s| s)
}

/// Connected bipartite multigraphs with at most `max_vertices` vertices and
/// total multiplicity at most `max_total`.
pub fn bipartite_multigraphs(max_vertices: usize, max_total: u32) -> Vec<ConfigurationGraph> {
    let mut shapes = Vec::new();
    for rows in 1..=max_vertices / 2 {
        for cols in rows..=max_vertices - rows {
            if rows + cols <= max_total as usize + 1 {
                shapes.push((rows, cols));
            }
        }
    }
    shapes
        .into_par_iter()
        .flat_map_iter(|(rows, cols)| {
            let mut e = Enumerator {
                rows,
                cols,
                max_total,
                out: Vec::new(),
            };
            let mut m = vec![vec![0; cols]; rows];
            let mut col_eq = vec![true; cols];
            e.fill(&mut m, 0, 0, e.max_total, false, &mut col_eq);
            e.out
                .into_iter()
                .map(|m| ConfigurationGraph::from_matrix(m).expect("enumerated graph is valid"))
        })
        .collect()
}

/// AHU encoding of the tree rooted at `root`.
fn rooted_code(adj: &[Vec<usize>], root: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[root]
        .iter()
        .filter(|&&v| v != parent)
        .map(|&v| rooted_code(adj, v, root))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // peel leaves to find the centre(s)
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(&adj, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

/// Unlabelled trees on `2..=max_vertices` vertices, one per isomorphism
/// class, as edge lists on `0..n`.
pub fn tree_edge_lists(max_vertices: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut all = Vec::new();
    if max_vertices < 2 {
        return all;
    }
    let mut level = vec![(2usize, vec![(0usize, 1usize)])];
    all.extend(level.iter().cloned());
    for n in 3..=max_vertices {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (_, edges) in &level {
            for v in 0..n - 1 {
                let mut e = edges.clone();
                e.push((v, n - 1));
                if seen.insert(tree_code(n, &e)) {
                    next.push((n, e));
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

pub fn trees(max_vertices: usize) -> Vec<ConfigurationGraph> {
    tree_edge_lists(max_vertices)
        .into_iter()
        .map(|(n, e)| bicolored(n, &e))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SmithReport {
    pub graphs: usize,
    pub recessive: usize,
    pub critical: usize,
    pub dominant: usize,
    pub mismatches: Vec<String>,
}

/// Structural label against the numeric trichotomy of `mu`.
pub fn smith_sweep(graphs: &[ConfigurationGraph], tol: f64) -> SmithReport {
    let results: Vec<std::result::Result<GraphClass, String>> = graphs
        .par_iter()
        .map(|g| {
            let label = family_of(g).map_err(|e| e.to_string())?;
            let mu = graph_mu(g, tol).map_err(|e| e.to_string())?;
            let numeric = if (mu - 2.0).abs() <= CRITICAL_TOL {
                GraphClass::Critical
            } else if mu < 2.0 {
                GraphClass::Recessive
            } else {
                GraphClass::Dominant
            };
            if numeric == label.class() {
                Ok(numeric)
            } else {
                Err(format!(
                    "{:?}: label {} but mu = {mu}",
                    g.intersection_matrix().entries(),
                    label.family
                ))
            }
        })
        .collect();
    let count = |c: GraphClass| results.iter().filter(|r| r.as_ref().ok() == Some(&c)).count();
    SmithReport {
        graphs: graphs.len(),
        recessive: count(GraphClass::Recessive),
        critical: count(GraphClass::Critical),
        dominant: count(GraphClass::Dominant),
        mismatches: results.into_iter().filter_map(|r| r.err()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimalityReport {
    pub dominant_graphs: usize,
    pub min_mu: f64,
    /// Graphs whose `mu` is within `1e-6` of the minimum.
    pub at_min: usize,
    pub at_min_all_eh10: bool,
    /// Smallest `mu` of a dominant graph with a multiple edge.
    pub min_multi_edge_mu: Option<f64>,
}

/// Smallest spectral radius above 2, and who attains it.
pub fn minimality_sweep(graphs: &[ConfigurationGraph], tol: f64) -> Result<MinimalityReport> {
    let data: Vec<(f64, bool, bool)> = graphs
        .par_iter()
        .map(|g| {
            let mu = graph_mu(g, tol)?;
            let label = family_of(g)?;
            Ok((mu, label.is_eh10, !g.is_small_type()))
        })
        .collect::<Result<Vec<_>>>()?;
    let dominant: Vec<&(f64, bool, bool)> = data.iter().filter(|d| d.0 > 2.0 + CRITICAL_TOL).collect();
    let min_mu = dominant.iter().map(|d| d.0).fold(f64::INFINITY, f64::min);
    let at_min: Vec<_> = dominant.iter().filter(|d| d.0 - min_mu <= 1e-6).collect();
    Ok(MinimalityReport {
        dominant_graphs: dominant.len(),
        min_mu,
        at_min: at_min.len(),
        at_min_all_eh10: !at_min.is_empty() && at_min.iter().all(|d| d.1),
        min_multi_edge_mu: dominant
            .iter()
            .filter(|d| d.2)
            .map(|d| d.0)
            .reduce(f64::min),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoxeterReport {
    pub graphs: usize,
    pub orderings_checked: usize,
    pub failures: Vec<String>,
}

fn expected_class(c: GraphClass) -> &'static [FormClass] {
    match c {
        GraphClass::Recessive => &[FormClass::Spherical],
        GraphClass::Critical => &[FormClass::Affine],
        GraphClass::Dominant => &[FormClass::Hyperbolic, FormClass::HigherRank],
    }
}

fn product_of(reflections: &[Vec<Vec<i64>>], ordering: &[usize]) -> Result<Vec<Vec<i64>>> {
    let k = reflections[0].len();
    let mut m = crate::coxeter::identity(k);
    for &i in ordering {
        m = mat_mul(&m, &reflections[i])?;
    }
    Ok(m)
}

fn coxeter_checks(g: &ConfigurationGraph, orderings: usize, seed: u64, tol: f64) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let name = format!("{:?}", g.intersection_matrix().entries());
    let cs = CoxeterSystem::new(g)?;
    let refl = reflection_matrices(&cs);
    let k = cs.rank();
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut ords: Vec<Vec<usize>> = vec![(0..k).collect()];
    for _ in 0..orderings {
        let mut o: Vec<usize> = (0..k).collect();
        o.shuffle(&mut rng);
        ords.push(o);
    }
    for o in ords {
        let cs = CoxeterSystem::with_ordering(g, o.clone())?;
        let c = howlett_element(&cs)?;
        if c != product_of(&refl, &o)? {
            fails.push(format!("{name}: Howlett differs from product for {o:?}"));
        }
        if !preserves_form(&c, cs.form())? {
            fails.push(format!("{name}: c does not preserve the form for {o:?}"));
        }
    }
    let sig = form_signature(&to_rational(&coxeter_form(g)?))?;
    let class = family_of(g)?.class();
    if !expected_class(class).contains(&sig.class) {
        fails.push(format!("{name}: {class} graph has form class {:?}", sig.class));
    }
    if let Err(e) = bicolored_coxeter_spectral_radius(g, tol) {
        fails.push(format!("{name}: {e}"));
    }
    if !main7_report(g)?.holds {
        fails.push(format!("{name}: homology identity fails"));
    }
    Ok(fails)
}

/// Howlett's formula, form preservation, form class, bicoloured spectral
/// radius and the homology identity on every small-type graph.
pub fn coxeter_sweep(graphs: &[ConfigurationGraph], orderings: usize, seed: u64, tol: f64) -> CoxeterReport {
    let small: Vec<&ConfigurationGraph> = graphs.iter().filter(|g| g.is_small_type()).collect();
    let failures: Vec<String> = small
        .par_iter()
        .enumerate()
        .flat_map_iter(|(n, g)| match coxeter_checks(g, orderings, seed ^ n as u64, tol) {
            Ok(f) => f,
            Err(e) => vec![format!("{:?}: {e}", g.intersection_matrix().entries())],
        })
        .collect();
    CoxeterReport {
        graphs: small.len(),
        orderings_checked: small.len() * (orderings + 1),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        // unlabelled trees on n vertices: 1, 1, 2, 3, 6, 11, 23, 47, 106
        let counts: Vec<usize> = (2..=10)
            .map(|n| tree_edge_lists(10).iter().filter(|(k, _)| *k == n).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn small_enumeration() {
        // two vertices: multiplicities 1..=3
        let g = bipartite_multigraphs(2, 3);
        assert_eq!(g.len(), 3);
        // every connected bipartite simple graph on 4 vertices: P4, star K13, C4
        let g: Vec<_> = bipartite_multigraphs(4, 4)
            .into_iter()
            .filter(|g| g.is_small_type() && g.vertex_count() == 4)
            .collect();
        assert_eq!(g.len(), 3);
    }

    #[test]
    fn enumeration_is_canonical() {
        for g in bipartite_multigraphs(6, 6) {
            let m = g.intersection_matrix().entries().to_vec();
            assert!(m.windows(2).all(|w| w[0] >= w[1]));
            let cols: Vec<Vec<u32>> = (0..g.n_b()).map(|j| m.iter().map(|r| r[j]).collect()).collect();
            assert!(cols.windows(2).all(|w| w[0] >= w[1]));
            assert!(g.is_connected());
        }
    }
}
