//! Configuration graphs of two multi-curves and their embedded refinements.
//!
//! A configuration is given by the intersection numbers `i(a_i, b_j)` between
//! the components of `A` and of `B`. Vertices are ordered canonically: the
//! A-block first, then the B-block, each in input order. Every matrix built
//! downstream uses this ordering.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex of the configuration graph, in the canonical (A-block, B-block) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Curve {
    A(usize),
    B(usize),
}

/// Bipartite multigraph whose vertices are curve components of `A` and `B`
/// and whose edges are intersection points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConfigurationGraph {
    n_a: usize,
    n_b: usize,
    mult: Vec<Vec<u32>>,
}

/// The `nA x nB` matrix of intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    entries: Vec<Vec<u32>>,
}

impl IntersectionMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn to_i64(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect()
    }

    /// `N Nᵗ` as an integer matrix.
    pub fn n_nt(&self) -> Vec<Vec<i64>> {
        let n = self.to_i64();
        let (r, c) = (self.rows(), self.cols());
        let mut out = vec![vec![0i64; r]; r];
        for i in 0..r {
            for k in 0..r {
                out[i][k] = (0..c).map(|j| n[i][j] * n[k][j]).sum();
            }
        }
        out
    }

    /// `Nᵗ N` as an integer matrix.
    pub fn nt_n(&self) -> Vec<Vec<i64>> {
        self.transpose().n_nt()
    }

    pub fn transpose(&self) -> IntersectionMatrix {
        let (r, c) = (self.rows(), self.cols());
        IntersectionMatrix {
            entries: (0..c)
                .map(|j| (0..r).map(|i| self.entries[i][j]).collect())
                .collect(),
        }
    }
}

impl ConfigurationGraph {
    /// Builds a graph from a dense multiplicity matrix (rows = A-curves).
    pub fn from_matrix(mult: Vec<Vec<u32>>) -> Result<Self> {
        let n_a = mult.len();
        if n_a == 0 {
            return Err(Error::Validation("need at least one A-curve".into()));
        }
        let n_b = mult[0].len();
        if n_b == 0 {
            return Err(Error::Validation("need at least one B-curve".into()));
        }
        if mult.iter().any(|r| r.len() != n_b) {
            return Err(Error::Validation("ragged multiplicity matrix".into()));
        }
        let g = ConfigurationGraph { n_a, n_b, mult };
        g.check_degrees()?;
        Ok(g)
    }

    /// Builds a graph from 1-based `(i, j, mult)` triples; duplicates are summed.
    pub fn from_edges(n_a: usize, n_b: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        if n_a == 0 || n_b == 0 {
            return Err(Error::Validation(
                "need at least one A-curve and one B-curve".into(),
            ));
        }
        let mut mult = vec![vec![0i64; n_b]; n_a];
        for &(i, j, m) in edges {
            if i == 0 || i > n_a || j == 0 || j > n_b {
                return Err(Error::Validation(format!(
                    "edge ({i},{j}) out of range for a={n_a}, b={n_b}"
                )));
            }
            if m < 0 {
                return Err(Error::Validation(format!(
                    "negative multiplicity {m} on edge ({i},{j})"
                )));
            }
            mult[i - 1][j - 1] += m;
        }
        let mult = mult
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|m| {
                        u32::try_from(m)
                            .map_err(|_| Error::Validation(format!("multiplicity {m} too large")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_matrix(mult)
    }

    fn check_degrees(&self) -> Result<()> {
        for i in 0..self.n_a {
            if self.degree(Curve::A(i)) == 0 {
                return Err(Error::Validation(format!("curve a{} meets no b-curve", i + 1)));
            }
        }
        for j in 0..self.n_b {
            if self.degree(Curve::B(j)) == 0 {
                return Err(Error::Validation(format!("curve b{} meets no a-curve", j + 1)));
            }
        }
        Ok(())
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }

    pub fn vertex_count(&self) -> usize {
        self.n_a + self.n_b
    }

    pub fn mult(&self, i: usize, j: usize) -> u32 {
        self.mult[i][j]
    }

    /// Total number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.mult.iter().flatten().map(|&m| m as u64).sum()
    }

    pub fn degree(&self, v: Curve) -> u64 {
        match v {
            Curve::A(i) => self.mult[i].iter().map(|&m| m as u64).sum(),
            Curve::B(j) => self.mult.iter().map(|r| r[j] as u64).sum(),
        }
    }

    /// Canonical index of a vertex: A-block first.
    pub fn index_of(&self, v: Curve) -> usize {
        match v {
            Curve::A(i) => i,
            Curve::B(j) => self.n_a + j,
        }
    }

    pub fn curve_at(&self, idx: usize) -> Curve {
        if idx < self.n_a {
            Curve::A(idx)
        } else {
            Curve::B(idx - self.n_a)
        }
    }

    /// Neighbours of a canonical vertex index, with multiplicities.
    pub fn neighbours(&self, idx: usize) -> Vec<(usize, u32)> {
        match self.curve_at(idx) {
            Curve::A(i) => (0..self.n_b)
                .filter(|&j| self.mult[i][j] > 0)
                .map(|j| (self.n_a + j, self.mult[i][j]))
                .collect(),
            Curve::B(j) => (0..self.n_a)
                .filter(|&i| self.mult[i][j] > 0)
                .map(|i| (i, self.mult[i][j]))
                .collect(),
        }
    }

    pub fn intersection_matrix(&self) -> IntersectionMatrix {
        IntersectionMatrix {
            entries: self.mult.clone(),
        }
    }

    /// Adjacency matrix `[[0, N], [Nᵗ, 0]]` in canonical vertex order.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let k = self.vertex_count();
        let mut ad = vec![vec![0i64; k]; k];
        for i in 0..self.n_a {
            for j in 0..self.n_b {
                let m = self.mult[i][j] as i64;
                ad[i][self.n_a + j] = m;
                ad[self.n_a + j][i] = m;
            }
        }
        ad
    }

    /// True when no pair of curves meets more than once.
    pub fn is_small_type(&self) -> bool {
        self.mult.iter().flatten().all(|&m| m <= 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_vertex_sets().len() == 1
    }

    /// Connected components as sets of canonical vertex indices, sorted by
    /// their smallest vertex.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let k = self.vertex_count();
        let mut comp = vec![usize::MAX; k];
        let mut out = Vec::new();
        for start in 0..k {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for (w, _) in self.neighbours(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Splits the graph into connected components, each re-indexed with the
    /// original relative order of its A- and B-curves preserved.
    pub fn components(&self) -> Vec<ConfigurationGraph> {
        self.component_vertex_sets()
            .into_iter()
            .map(|set| {
                let a: Vec<usize> = set.iter().copied().filter(|&v| v < self.n_a).collect();
                let b: Vec<usize> = set
                    .iter()
                    .copied()
                    .filter(|&v| v >= self.n_a)
                    .map(|v| v - self.n_a)
                    .collect();
                let mult = a
                    .iter()
                    .map(|&i| b.iter().map(|&j| self.mult[i][j]).collect())
                    .collect();
                ConfigurationGraph {
                    n_a: a.len(),
                    n_b: b.len(),
                    mult,
                }
            })
            .collect()
    }

    /// Exchanges the roles of `A` and `B`.
    pub fn swapped(&self) -> ConfigurationGraph {
        ConfigurationGraph {
            n_a: self.n_b,
            n_b: self.n_a,
            mult: self.intersection_matrix().transpose().entries,
        }
    }

    /// Removes one unit of multiplicity from edge `(i, j)`. Returns `None`
    /// when the result would contain an isolated vertex.
    pub fn with_edge_removed(&self, i: usize, j: usize) -> Option<ConfigurationGraph> {
        if self.mult[i][j] == 0 {
            return None;
        }
        let mut mult = self.mult.clone();
        mult[i][j] -= 1;
        ConfigurationGraph::from_matrix(mult).ok()
    }

    /// Removes a vertex and its incident edges. Returns `None` when a side
    /// becomes empty or an isolated vertex appears.
    pub fn with_vertex_removed(&self, v: Curve) -> Option<ConfigurationGraph> {
        let mult: Vec<Vec<u32>> = match v {
            Curve::A(i) => self
                .mult
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, row)| row.clone())
                .collect(),
            Curve::B(j) => self
                .mult
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &m)| m)
                        .collect()
                })
                .collect(),
        };
        ConfigurationGraph::from_matrix(mult).ok()
    }

    pub fn to_doc(&self) -> ConfigDoc {
        let mut edges = Vec::new();
        for i in 0..self.n_a {
            for j in 0..self.n_b {
                if self.mult[i][j] > 0 {
                    edges.push([i as i64 + 1, j as i64 + 1, self.mult[i][j] as i64]);
                }
            }
        }
        ConfigDoc {
            a: self.n_a as i64,
            b: self.n_b as i64,
            edges,
            embedding: None,
        }
    }
}

/// One transverse intersection between `a_curve` and `b_curve` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionPoint {
    pub id: i64,
    pub a_curve: usize,
    pub b_curve: usize,
    pub pos_a: usize,
    pub pos_b: usize,
    /// `+1` when (tangent of a, tangent of b) is a positive frame.
    pub sign: i8,
}

/// A configuration together with the cyclic order of intersection points
/// along every curve and the sign of every crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedConfiguration {
    graph: ConfigurationGraph,
    points: Vec<IntersectionPoint>,
    a_cycles: Vec<Vec<usize>>,
    b_cycles: Vec<Vec<usize>>,
}

impl EmbeddedConfiguration {
    pub fn new(graph: ConfigurationGraph, points: Vec<IntersectionPoint>) -> Result<Self> {
        let (n_a, n_b) = (graph.n_a(), graph.n_b());
        let mut per_pair: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        let mut a_slots: Vec<Vec<Option<usize>>> =
            (0..n_a).map(|i| vec![None; graph.degree(Curve::A(i)) as usize]).collect();
        let mut b_slots: Vec<Vec<Option<usize>>> =
            (0..n_b).map(|j| vec![None; graph.degree(Curve::B(j)) as usize]).collect();
        let mut ids = std::collections::HashSet::new();
        for (k, p) in points.iter().enumerate() {
            if !ids.insert(p.id) {
                return Err(Error::Validation(format!("duplicate point id {}", p.id)));
            }
            if p.a_curve >= n_a || p.b_curve >= n_b {
                return Err(Error::Validation(format!("point {} names a missing curve", p.id)));
            }
            if p.sign != 1 && p.sign != -1 {
                return Err(Error::Validation(format!("point {} has sign {}", p.id, p.sign)));
            }
            *per_pair.entry((p.a_curve, p.b_curve)).or_default() += 1;
            let slot = a_slots[p.a_curve].get_mut(p.pos_a).ok_or_else(|| {
                Error::Validation(format!("point {}: pos_a {} out of range", p.id, p.pos_a))
            })?;
            if slot.replace(k).is_some() {
                return Err(Error::Validation(format!(
                    "two points at position {} on a{}",
                    p.pos_a,
                    p.a_curve + 1
                )));
            }
            let slot = b_slots[p.b_curve].get_mut(p.pos_b).ok_or_else(|| {
                Error::Validation(format!("point {}: pos_b {} out of range", p.id, p.pos_b))
            })?;
            if slot.replace(k).is_some() {
                return Err(Error::Validation(format!(
                    "two points at position {} on b{}",
                    p.pos_b,
                    p.b_curve + 1
                )));
            }
        }
        for i in 0..n_a {
            for j in 0..n_b {
                let have = per_pair.get(&(i, j)).copied().unwrap_or(0);
                if have != graph.mult(i, j) {
                    return Err(Error::Validation(format!(
                        "pair (a{}, b{}) has {} points, multiplicity {}",
                        i + 1,
                        j + 1,
                        have,
                        graph.mult(i, j)
                    )));
                }
            }
        }
        let complete = |slots: Vec<Vec<Option<usize>>>| -> Option<Vec<Vec<usize>>> {
            slots
                .into_iter()
                .map(|s| s.into_iter().collect::<Option<Vec<usize>>>())
                .collect()
        };
        let a_cycles = complete(a_slots)
            .ok_or_else(|| Error::Validation("incomplete cyclic order on an a-curve".into()))?;
        let b_cycles = complete(b_slots)
            .ok_or_else(|| Error::Validation("incomplete cyclic order on a b-curve".into()))?;
        Ok(EmbeddedConfiguration {
            graph,
            points,
            a_cycles,
            b_cycles,
        })
    }

    /// Builds an embedding from explicit cyclic orders. `a_orders[i]` lists the
    /// b-curve met at each successive point of `a_i`; `b_orders[j]` lists, for
    /// each successive point of `b_j`, the a-curve together with the
    /// occurrence index of the pair `(a, b_j)` along `a`. Signs are per point
    /// in `a`-major order.
    pub fn from_orders(
        graph: ConfigurationGraph,
        a_orders: &[Vec<usize>],
        b_orders: &[Vec<(usize, usize)>],
        signs: &[Vec<i8>],
    ) -> Result<Self> {
        // key (a, b, occurrence along a) -> point index
        let mut points = Vec::new();
        let mut key_to_point = BTreeMap::new();
        for (i, order) in a_orders.iter().enumerate() {
            let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
            for (pos, &j) in order.iter().enumerate() {
                let occ = seen.entry(j).or_insert(0);
                key_to_point.insert((i, j, *occ), points.len());
                *occ += 1;
                let sign = signs
                    .get(i)
                    .and_then(|s| s.get(pos))
                    .copied()
                    .ok_or_else(|| Error::Validation("missing sign".into()))?;
                points.push(IntersectionPoint {
                    id: points.len() as i64 + 1,
                    a_curve: i,
                    b_curve: j,
                    pos_a: pos,
                    pos_b: usize::MAX,
                    sign,
                });
            }
        }
        for (j, order) in b_orders.iter().enumerate() {
            for (pos, &(i, occ)) in order.iter().enumerate() {
                let k = *key_to_point.get(&(i, j, occ)).ok_or_else(|| {
                    Error::Validation(format!("b{} order names a missing point", j + 1))
                })?;
                points[k].pos_b = pos;
            }
        }
        Self::new(graph, points)
    }

    pub fn graph(&self) -> &ConfigurationGraph {
        &self.graph
    }

    pub fn points(&self) -> &[IntersectionPoint] {
        &self.points
    }

    /// Point indices along `a_i` in cyclic order.
    pub fn a_cycle(&self, i: usize) -> &[usize] {
        &self.a_cycles[i]
    }

    /// Point indices along `b_j` in cyclic order.
    pub fn b_cycle(&self, j: usize) -> &[usize] {
        &self.b_cycles[j]
    }

    pub fn cycle(&self, c: Curve) -> &[usize] {
        match c {
            Curve::A(i) => self.a_cycle(i),
            Curve::B(j) => self.b_cycle(j),
        }
    }

    /// The same curves with every curve orientation reversed.
    pub fn reversed(&self) -> EmbeddedConfiguration {
        let mut points = self.points.clone();
        for p in &mut points {
            let da = self.a_cycles[p.a_curve].len();
            let db = self.b_cycles[p.b_curve].len();
            p.pos_a = (da - p.pos_a) % da;
            p.pos_b = (db - p.pos_b) % db;
        }
        EmbeddedConfiguration::new(self.graph.clone(), points)
            .expect("reversal preserves validity")
    }

    /// The mirror image: all crossing signs flipped.
    pub fn mirrored(&self) -> EmbeddedConfiguration {
        let mut points = self.points.clone();
        for p in &mut points {
            p.sign = -p.sign;
        }
        EmbeddedConfiguration::new(self.graph.clone(), points)
            .expect("mirroring preserves validity")
    }

    pub fn to_doc(&self) -> ConfigDoc {
        let mut doc = self.graph.to_doc();
        doc.embedding = Some(EmbeddingDoc {
            points: self
                .points
                .iter()
                .map(|p| PointDoc {
                    id: p.id,
                    a: p.a_curve as i64 + 1,
                    b: p.b_curve as i64 + 1,
                    pos_a: p.pos_a as i64,
                    pos_b: p.pos_b as i64,
                    sign: p.sign as i64,
                })
                .collect(),
        });
        doc
    }
}

/// On-disk JSON layout of a configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDoc {
    pub a: i64,
    pub b: i64,
    pub edges: Vec<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<EmbeddingDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingDoc {
    pub points: Vec<PointDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDoc {
    pub id: i64,
    pub a: i64,
    pub b: i64,
    pub pos_a: i64,
    pub pos_b: i64,
    pub sign: i64,
}

/// A parsed document: the graph, and the embedding when one was supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedConfig {
    pub graph: ConfigurationGraph,
    pub embedding: Option<EmbeddedConfiguration>,
}

fn to_usize(v: i64, what: &str) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Validation(format!("{what} must be non-negative, got {v}")))
}

impl ConfigDoc {
    pub fn into_parsed(self) -> Result<ParsedConfig> {
        let n_a = to_usize(self.a, "a")?;
        let n_b = to_usize(self.b, "b")?;
        let edges = self
            .edges
            .iter()
            .map(|&[i, j, m]| Ok((to_usize(i, "edge index")?, to_usize(j, "edge index")?, m)))
            .collect::<Result<Vec<_>>>()?;
        let graph = ConfigurationGraph::from_edges(n_a, n_b, &edges)?;
        let embedding = match self.embedding {
            None => None,
            Some(doc) => {
                let points = doc
                    .points
                    .iter()
                    .map(|p| {
                        let a = to_usize(p.a, "point a")?;
                        let b = to_usize(p.b, "point b")?;
                        if a == 0 || b == 0 {
                            return Err(Error::Validation(format!(
                                "point {}: curve indices are 1-based",
                                p.id
                            )));
                        }
                        let sign = match p.sign {
                            1 => 1,
                            -1 => -1,
                            s => {
                                return Err(Error::Validation(format!(
                                    "point {}: sign must be +1 or -1, got {s}",
                                    p.id
                                )))
                            }
                        };
                        Ok(IntersectionPoint {
                            id: p.id,
                            a_curve: a - 1,
                            b_curve: b - 1,
                            pos_a: to_usize(p.pos_a, "pos_a")?,
                            pos_b: to_usize(p.pos_b, "pos_b")?,
                            sign,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Some(EmbeddedConfiguration::new(graph.clone(), points)?)
            }
        };
        Ok(ParsedConfig { graph, embedding })
    }
}

/// Parses a configuration document (graph plus optional embedding).
pub fn parse_document(text: &str) -> Result<ParsedConfig> {
    let doc: ConfigDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    doc.into_parsed()
}

/// Parses a configuration document and returns its graph.
pub fn parse_config(text: &str) -> Result<ConfigurationGraph> {
    parse_document(text).map(|p| p.graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_input() {
        let g = parse_config(r#"{"a":1,"b":1,"edges":[[1,1,1]]}"#).unwrap();
        assert_eq!(g.intersection_matrix().entries(), &[vec![1]]);
        assert_eq!(g.adjacency_matrix(), vec![vec![0, 1], vec![1, 0]]);
        assert!(g.is_small_type());
    }

    #[test]
    fn a3_path() {
        let g = parse_config(r#"{"a":1,"b":2,"edges":[[1,1,1],[1,2,1]]}"#).unwrap();
        assert_eq!(g.intersection_matrix().entries(), &[vec![1, 1]]);
        assert_eq!(
            g.adjacency_matrix(),
            vec![vec![0, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]
        );
        assert_eq!(g.components().len(), 1);
    }

    #[test]
    fn triple_edge() {
        let g = parse_config(r#"{"a":1,"b":1,"edges":[[1,1,3]]}"#).unwrap();
        assert_eq!(g.intersection_matrix().entries(), &[vec![3]]);
        assert_eq!(g.adjacency_matrix(), vec![vec![0, 3], vec![3, 0]]);
        assert!(!g.is_small_type());
    }

    #[test]
    fn duplicate_edges_are_summed() {
        let g = parse_config(r#"{"a":1,"b":1,"edges":[[1,1,1],[1,1,2]]}"#).unwrap();
        assert_eq!(g.mult(0, 0), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_config("{"), Err(Error::Schema(_))));
        assert!(matches!(
            parse_config(r#"{"a":1,"b":1,"edges":[[1,1,1]],"extra":1}"#),
            Err(Error::Schema(_))
        ));
        assert!(matches!(
            parse_config(r#"{"a":1,"b":2,"edges":[[1,1,1]]}"#),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            parse_config(r#"{"a":1,"b":1,"edges":[[1,1,-1]]}"#),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            parse_config(r#"{"a":1,"b":1,"edges":[[1,2,1]]}"#),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            parse_config(r#"{"a":0,"b":1,"edges":[]}"#),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn components_of_disjoint_union() {
        // A_3 on (a1; b1, b2) and a 4-cycle on (a2, a3; b3, b4).
        let g = ConfigurationGraph::from_matrix(vec![
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 1],
            vec![0, 0, 1, 1],
        ])
        .unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].intersection_matrix().entries(), &[vec![1, 1]]);
        assert_eq!(
            comps[1].intersection_matrix().entries(),
            &[vec![1, 1], vec![1, 1]]
        );
        let v: usize = comps.iter().map(|c| c.vertex_count()).sum();
        let e: u64 = comps.iter().map(|c| c.edge_count()).sum();
        assert_eq!((v, e), (g.vertex_count(), g.edge_count()));
    }

    #[test]
    fn embedding_validation() {
        let good = r#"{"a":1,"b":1,"edges":[[1,1,1]],
            "embedding":{"points":[{"id":1,"a":1,"b":1,"pos_a":0,"pos_b":0,"sign":1}]}}"#;
        let p = parse_document(good).unwrap();
        assert_eq!(p.embedding.unwrap().points().len(), 1);

        let bad_sign = good.replace("\"sign\":1", "\"sign\":0");
        assert!(matches!(parse_document(&bad_sign), Err(Error::Validation(_))));

        let bad_pos = good.replace("\"pos_a\":0", "\"pos_a\":1");
        assert!(matches!(parse_document(&bad_pos), Err(Error::Validation(_))));

        let missing = r#"{"a":1,"b":1,"edges":[[1,1,2]],
            "embedding":{"points":[{"id":1,"a":1,"b":1,"pos_a":0,"pos_b":0,"sign":1}]}}"#;
        assert!(matches!(parse_document(missing), Err(Error::Validation(_))));
    }

    #[test]
    fn doc_round_trip() {
        let g = ConfigurationGraph::from_matrix(vec![vec![1, 2], vec![0, 1]]).unwrap();
        let text = serde_json::to_string(&g.to_doc()).unwrap();
        assert_eq!(parse_config(&text).unwrap(), g);
    }
}
