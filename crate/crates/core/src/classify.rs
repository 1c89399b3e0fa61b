//! Structural recognition of the recessive and critical families, dominance,
//! the Eh10 tree, and the freeness decision.
//!
//! Recognition is exact: paths, cycles, and trees with at most two branch
//! vertices are matched by their leg lengths. The numeric spectral radius is
//! only used as a cross-check in [`classify_verified`].

use std::fmt;

use serde::Serialize;

use crate::config::ConfigurationGraph;
use crate::error::{Error, Result};
use crate::spectral::graph_mu;

/// Family names; the subscript is the number of vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    P(usize),
    Q(usize),
    R7,
    R8,
    R9,
    Dominant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GraphClass {
    Recessive,
    Critical,
    Dominant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyLabel {
    pub family: Family,
    pub is_eh10: bool,
}

impl Family {
    pub fn class(self) -> GraphClass {
        match self {
            Family::A(_) | Family::D(_) | Family::E6 | Family::E7 | Family::E8 => {
                GraphClass::Recessive
            }
            Family::P(_) | Family::Q(_) | Family::R7 | Family::R8 | Family::R9 => {
                GraphClass::Critical
            }
            Family::Dominant => GraphClass::Dominant,
        }
    }
}

impl FamilyLabel {
    pub fn class(&self) -> GraphClass {
        self.family.class()
    }

    pub fn is_recessive(&self) -> bool {
        self.class() == GraphClass::Recessive
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(c) => write!(f, "A_{c}"),
            Family::D(c) => write!(f, "D_{c}"),
            Family::E6 => write!(f, "E_6"),
            Family::E7 => write!(f, "E_7"),
            Family::E8 => write!(f, "E_8"),
            Family::P(c) => write!(f, "P_{c}"),
            Family::Q(c) => write!(f, "Q_{c}"),
            Family::R7 => write!(f, "R_7"),
            Family::R8 => write!(f, "R_8"),
            Family::R9 => write!(f, "R_9"),
            Family::Dominant => write!(f, "Dominant"),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GraphClass::Recessive => "recessive",
            GraphClass::Critical => "critical",
            GraphClass::Dominant => "dominant",
        };
        f.write_str(s)
    }
}

struct Shape {
    adj: Vec<Vec<usize>>,
}

impl Shape {
    fn of(g: &ConfigurationGraph) -> Self {
        let k = g.vertex_count();
        Shape {
            adj: (0..k)
                .map(|v| g.neighbours(v).into_iter().map(|(w, _)| w).collect())
                .collect(),
        }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Walks from `start` away from `from` until a vertex of degree != 2 is
    /// reached. Returns the number of vertices visited and the last one.
    fn walk(&self, from: usize, start: usize) -> (usize, usize) {
        let (mut prev, mut cur, mut len) = (from, start, 1);
        while self.degree(cur) == 2 {
            let next = if self.adj[cur][0] == prev {
                self.adj[cur][1]
            } else {
                self.adj[cur][0]
            };
            prev = cur;
            cur = next;
            len += 1;
        }
        (len, cur)
    }
}

/// Leg lengths (in vertices) hanging off a branch vertex, sorted ascending.
fn legs(shape: &Shape, branch: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = shape.adj[branch]
        .iter()
        .map(|&w| shape.walk(branch, w))
        .collect();
    out.sort_unstable();
    out
}

/// Exact family of a connected configuration graph.
pub fn family_of(g: &ConfigurationGraph) -> Result<FamilyLabel> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let k = g.vertex_count();
    let dominant = FamilyLabel {
        family: Family::Dominant,
        is_eh10: false,
    };
    let label = |family| FamilyLabel {
        family,
        is_eh10: false,
    };
    if !g.is_small_type() {
        // the double edge on two vertices is the only non-simple critical graph
        if k == 2 && g.mult(0, 0) == 2 {
            return Ok(label(Family::P(2)));
        }
        return Ok(dominant);
    }
    let shape = Shape::of(g);
    let edges = g.edge_count() as usize;
    if edges >= k {
        let is_cycle = (0..k).all(|v| shape.degree(v) == 2);
        return Ok(if is_cycle {
            label(Family::P(k))
        } else {
            dominant
        });
    }
    let branches: Vec<usize> = (0..k).filter(|&v| shape.degree(v) >= 3).collect();
    match branches.as_slice() {
        [] => Ok(label(Family::A(k))),
        [b] => {
            let lens: Vec<usize> = legs(&shape, *b).into_iter().map(|(l, _)| l).collect();
            let family = match lens.as_slice() {
                [1, 1, c] => Family::D(c + 3),
                [1, 2, 2] => Family::E6,
                [1, 2, 3] => Family::E7,
                [1, 2, 4] => Family::E8,
                [2, 2, 2] => Family::R7,
                [1, 3, 3] => Family::R8,
                [1, 2, 5] => Family::R9,
                [1, 1, 1, 1] => Family::Q(5),
                _ => Family::Dominant,
            };
            Ok(FamilyLabel {
                family,
                is_eh10: lens == [1, 2, 6],
            })
        }
        [b1, b2] => {
            let ok = [(*b1, *b2), (*b2, *b1)].iter().all(|&(b, other)| {
                if shape.degree(b) != 3 {
                    return false;
                }
                let free: Vec<usize> = legs(&shape, b)
                    .into_iter()
                    .filter(|&(_, end)| end != other)
                    .map(|(l, _)| l)
                    .collect();
                free == [1, 1]
            });
            Ok(if ok { label(Family::Q(k)) } else { dominant })
        }
        _ => Ok(dominant),
    }
}

/// `<T_A, T_B>` is free exactly when some component is dominant.
pub fn is_free(g: &ConfigurationGraph) -> bool {
    g.components().iter().any(|c| {
        family_of(c)
            .map(|l| l.class() == GraphClass::Dominant)
            .unwrap_or(false)
    })
}

/// Dominant bipartite graphs have `mu >= 2.0065936...`, so a dominant label
/// with `mu` below `2 + DOMINANT_GAP` signals a classifier bug.
pub const DOMINANT_GAP: f64 = 1e-3;
/// Distance from 2 within which `mu` counts as exactly 2.
pub const CRITICAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentReport {
    pub label: FamilyLabel,
    pub mu: f64,
}

/// Structural label and numeric `mu` for every component, with the two
/// checked against each other.
pub fn classify_verified(g: &ConfigurationGraph, tol: f64) -> Result<Vec<ComponentReport>> {
    g.components()
        .into_iter()
        .map(|c| {
            let label = family_of(&c)?;
            let mu = graph_mu(&c, tol)?;
            let consistent = match label.class() {
                GraphClass::Recessive => mu < 2.0 - CRITICAL_TOL,
                GraphClass::Critical => (mu - 2.0).abs() <= CRITICAL_TOL,
                GraphClass::Dominant => mu > 2.0 + DOMINANT_GAP,
            };
            if !consistent {
                return Err(Error::InternalInconsistency(format!(
                    "label {} disagrees with mu = {mu}",
                    label.family
                )));
            }
            Ok(ComponentReport { label, mu })
        })
        .collect()
}

/// Closed form of the spectral radius of a recessive or critical family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClosedFormMu {
    /// `2 cos(pi / h)`
    TwoCosPiOver(u64),
    /// exactly 2
    Two,
}

impl ClosedFormMu {
    pub fn value(self) -> f64 {
        match self {
            ClosedFormMu::TwoCosPiOver(h) => 2.0 * (std::f64::consts::PI / h as f64).cos(),
            ClosedFormMu::Two => 2.0,
        }
    }
}

pub fn closed_form_mu(label: &FamilyLabel) -> Result<ClosedFormMu> {
    use ClosedFormMu::*;
    Ok(match label.family {
        Family::A(c) => TwoCosPiOver(c as u64 + 1),
        Family::D(c) => TwoCosPiOver(2 * (c as u64 - 1)),
        Family::E6 => TwoCosPiOver(12),
        Family::E7 => TwoCosPiOver(18),
        Family::E8 => TwoCosPiOver(30),
        Family::P(_) | Family::Q(_) | Family::R7 | Family::R8 | Family::R9 => Two,
        Family::Dominant => return Err(Error::DominantHasNoClosedForm),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn path(n: usize) -> ConfigurationGraph {
        fixtures::path(n)
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(family_of(&path(5)).unwrap().family, Family::A(5));
        assert_eq!(family_of(&path(2)).unwrap().family, Family::A(2));
        assert_eq!(family_of(&fixtures::cycle(6)).unwrap().family, Family::P(6));
        assert_eq!(family_of(&fixtures::cycle(4)).unwrap().family, Family::P(4));
        assert_eq!(family_of(&fixtures::p2()).unwrap().family, Family::P(2));
    }

    #[test]
    fn exceptional_trees() {
        assert_eq!(family_of(&fixtures::star(3)).unwrap().family, Family::D(4));
        assert_eq!(family_of(&fixtures::star(4)).unwrap().family, Family::Q(5));
        assert_eq!(family_of(&fixtures::t_shape(1, 2, 2)).unwrap().family, Family::E6);
        assert_eq!(family_of(&fixtures::t_shape(1, 2, 3)).unwrap().family, Family::E7);
        assert_eq!(family_of(&fixtures::t_shape(1, 2, 4)).unwrap().family, Family::E8);
        assert_eq!(family_of(&fixtures::t_shape(2, 2, 2)).unwrap().family, Family::R7);
        assert_eq!(family_of(&fixtures::t_shape(1, 3, 3)).unwrap().family, Family::R8);
        assert_eq!(family_of(&fixtures::t_shape(1, 2, 5)).unwrap().family, Family::R9);
        assert_eq!(family_of(&fixtures::t_shape(1, 1, 7)).unwrap().family, Family::D(10));
        assert_eq!(family_of(&fixtures::q_tree(7)).unwrap().family, Family::Q(7));
        let eh = family_of(&fixtures::eh10()).unwrap();
        assert_eq!(eh.family, Family::Dominant);
        assert!(eh.is_eh10);
    }

    #[test]
    fn freeness() {
        assert!(is_free(&fixtures::eh10()));
        assert!(!is_free(&path(3)));
        // A_3 disjoint from a pair of curves meeting three times
        let g = ConfigurationGraph::from_matrix(vec![vec![1, 1, 0], vec![0, 0, 3]]).unwrap();
        assert_eq!(g.components().len(), 2);
        assert!(is_free(&g));
    }

    #[test]
    fn verified_examples() {
        let r = classify_verified(&fixtures::star(3), 1e-12).unwrap();
        assert_eq!(r[0].label.family, Family::D(4));
        assert!((r[0].mu - 3f64.sqrt()).abs() < 1e-10);
        let r = classify_verified(&fixtures::p2(), 1e-12).unwrap();
        assert!((r[0].mu - 2.0).abs() < 1e-10);
        let r = classify_verified(&fixtures::eh10(), 1e-12).unwrap();
        assert!((r[0].mu - 2.006_593_6).abs() < 1e-6);
    }

    #[test]
    fn closed_forms() {
        let a2 = family_of(&path(2)).unwrap();
        assert_eq!(closed_form_mu(&a2).unwrap(), ClosedFormMu::TwoCosPiOver(3));
        assert!((closed_form_mu(&a2).unwrap().value() - 1.0).abs() < 1e-15);
        let e8 = family_of(&fixtures::t_shape(1, 2, 4)).unwrap();
        assert_eq!(closed_form_mu(&e8).unwrap(), ClosedFormMu::TwoCosPiOver(30));
        let p6 = family_of(&fixtures::cycle(6)).unwrap();
        assert_eq!(closed_form_mu(&p6).unwrap(), ClosedFormMu::Two);
        let eh = family_of(&fixtures::eh10()).unwrap();
        assert_eq!(closed_form_mu(&eh), Err(Error::DominantHasNoClosedForm));
    }
}
