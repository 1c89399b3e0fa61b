//! The Coxeter group of a small-type configuration graph: the form
//! `2I - Ad`, its inertia, the geometric reflection representation, Howlett's
//! closed form for Coxeter elements, and the comparison of the bicoloured
//! Coxeter element with the action of `T_A T_B` on homology.
//!
//! Matrices are indexed in the canonical vertex order (A-block first).
//! Everything except spectral radii is computed in exact arithmetic.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::config::{ConfigurationGraph, IntersectionMatrix};
use crate::error::{Error, Result};
use crate::fuchsian::min_dilatation;
use crate::numthy::complex_roots;
use crate::spectral::{char_poly_exact, graph_mu};

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterSystem {
    graph: ConfigurationGraph,
    form: IntMatrix,
    ordering: Vec<usize>,
}

impl CoxeterSystem {
    /// Bicoloured ordering: all A vertices, then all B vertices.
    pub fn new(g: &ConfigurationGraph) -> Result<Self> {
        let form = coxeter_form(g)?;
        let k = form.len();
        Ok(CoxeterSystem {
            graph: g.clone(),
            form,
            ordering: (0..k).collect(),
        })
    }

    /// `ordering[p]` is the vertex placed at position `p`.
    pub fn with_ordering(g: &ConfigurationGraph, ordering: Vec<usize>) -> Result<Self> {
        let mut cs = Self::new(g)?;
        let k = cs.form.len();
        let mut seen = vec![false; k];
        if ordering.len() != k || ordering.iter().any(|&v| v >= k || std::mem::replace(&mut seen[v], true)) {
            return Err(Error::Validation("ordering is not a permutation".into()));
        }
        cs.ordering = ordering;
        Ok(cs)
    }

    pub fn graph(&self) -> &ConfigurationGraph {
        &self.graph
    }

    pub fn form(&self) -> &IntMatrix {
        &self.form
    }

    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    pub fn rank(&self) -> usize {
        self.form.len()
    }
}

/// `2I - Ad(g)`.
pub fn coxeter_form(g: &ConfigurationGraph) -> Result<IntMatrix> {
    if !g.is_small_type() {
        return Err(Error::NotSmallType);
    }
    let ad = g.adjacency_matrix();
    Ok(ad
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &x)| if i == j { 2 - x } else { -x })
                .collect()
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FormClass {
    Spherical,
    Affine,
    Hyperbolic,
    HigherRank,
    /// Positive semi-definite with a kernel of dimension at least 2; only
    /// occurs for disconnected graphs.
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormSignature {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
    pub class: FormClass,
}

/// Inertia of a symmetric rational matrix by congruence diagonalisation.
pub fn form_signature(pi: &[Vec<BigRational>]) -> Result<FormSignature> {
    let k = pi.len();
    if pi.iter().any(|r| r.len() != k) {
        return Err(Error::Validation("form must be square".into()));
    }
    for i in 0..k {
        for j in 0..i {
            if pi[i][j] != pi[j][i] {
                return Err(Error::Validation("form must be symmetric".into()));
            }
        }
    }
    let mut a: Vec<Vec<BigRational>> = pi.to_vec();
    let mut active: Vec<usize> = (0..k).collect();
    let (mut n_plus, mut n_minus) = (0, 0);
    while !active.is_empty() {
        let pivot = match active.iter().position(|&i| !a[i][i].is_zero()) {
            Some(p) => active[p],
            None => {
                // all diagonal entries vanish: add a row/column with a nonzero
                // off-diagonal entry to make one (congruence by I + E_ij)
                let pair = active.iter().find_map(|&i| {
                    active
                        .iter()
                        .find(|&&j| j != i && !a[i][j].is_zero())
                        .map(|&j| (i, j))
                });
                let Some((i, j)) = pair else { break };
                for r in 0..k {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
                for c in 0..k {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                i
            }
        };
        let d = a[pivot][pivot].clone();
        if d.is_positive() {
            n_plus += 1;
        } else {
            n_minus += 1;
        }
        active.retain(|&x| x != pivot);
        for &i in &active {
            let f = &a[i][pivot] / &d;
            if f.is_zero() {
                continue;
            }
            for &j in &active {
                let v = &f * &a[pivot][j];
                a[i][j] -= v;
            }
        }
        for &i in &active {
            a[i][pivot] = BigRational::zero();
            a[pivot][i] = BigRational::zero();
        }
    }
    let n_zero = k - n_plus - n_minus;
    let class = if n_minus >= 2 {
        FormClass::HigherRank
    } else if n_minus == 1 {
        FormClass::Hyperbolic
    } else if n_zero == 0 {
        FormClass::Spherical
    } else if n_zero == 1 {
        FormClass::Affine
    } else {
        FormClass::Degenerate
    };
    Ok(FormSignature {
        n_plus,
        n_minus,
        n_zero,
        class,
    })
}

pub fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect()
}

/// `Theta(s_i)`: `e_j -> e_j - Pi_ij e_i`, i.e. the identity with row `i`
/// replaced by `e_i - Pi_i`.
pub fn reflection_matrices(cs: &CoxeterSystem) -> Vec<IntMatrix> {
    let k = cs.rank();
    (0..k)
        .map(|i| {
            let mut m = identity(k);
            for j in 0..k {
                m[i][j] -= cs.form[i][j];
            }
            m
        })
        .collect()
}

pub fn identity(k: usize) -> IntMatrix {
    (0..k)
        .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn overflow() -> Error {
    Error::Validation("integer overflow in Coxeter matrix arithmetic".into())
}

pub fn mat_mul(x: &[Vec<i64>], y: &[Vec<i64>]) -> Result<IntMatrix> {
    let n = y.first().map_or(0, |r| r.len());
    x.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter().zip(y).try_fold(0i64, |acc, (&a, yr)| {
                        a.checked_mul(yr[j])
                            .and_then(|p| acc.checked_add(p))
                            .ok_or_else(overflow)
                    })
                })
                .collect()
        })
        .collect()
}

pub fn transpose(m: &[Vec<i64>]) -> IntMatrix {
    let n = m.first().map_or(0, |r| r.len());
    (0..n).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

/// `Theta(s_{o(1)}) ... Theta(s_{o(K)})` for the system's ordering `o`.
pub fn reflection_product(cs: &CoxeterSystem) -> Result<IntMatrix> {
    let k = cs.rank();
    let mut m = identity(k);
    // right multiplication by I - e_i Pi_i: M -> M - (M e_i) Pi_i
    for &i in &cs.ordering {
        let col: Vec<i64> = m.iter().map(|r| r[i]).collect();
        for (r, &c) in m.iter_mut().zip(&col) {
            if c == 0 {
                continue;
            }
            for (x, &p) in r.iter_mut().zip(&cs.form[i]) {
                *x = c
                    .checked_mul(p)
                    .and_then(|q| x.checked_sub(q))
                    .ok_or_else(overflow)?;
            }
        }
    }
    Ok(m)
}

/// Howlett's formula `c = -(I - Ad+)^{-1} (I - Ad+)ᵗ`, where `Ad+` keeps the
/// entries `(i, j)` of `Ad` with `i` before `j` in the ordering.
///
/// `I - Ad+` is unitriangular after reordering, so its inverse is integral
/// and is found by substitution.
pub fn howlett_element(cs: &CoxeterSystem) -> Result<IntMatrix> {
    let k = cs.rank();
    let mut pos = vec![0; k];
    for (p, &v) in cs.ordering.iter().enumerate() {
        pos[v] = p;
    }
    // U = I - Ad+ ; entry (i, j) = form[i][j] for pos i < pos j
    let u: IntMatrix = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        1
                    } else if pos[i] < pos[j] {
                        cs.form[i][j]
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    // solve U X = Uᵗ by back substitution in the ordering
    let ut = transpose(&u);
    let mut x = vec![vec![0i64; k]; k];
    for &i in cs.ordering.iter().rev() {
        for col in 0..k {
            let mut s = ut[i][col];
            for &j in &cs.ordering[pos[i] + 1..] {
                if u[i][j] != 0 {
                    s = u[i][j]
                        .checked_mul(x[j][col])
                        .and_then(|p| s.checked_sub(p))
                        .ok_or_else(overflow)?;
                }
            }
            x[i][col] = s;
        }
    }
    Ok(x.into_iter()
        .map(|r| r.into_iter().map(|v| -v).collect())
        .collect())
}

/// Largest modulus of an eigenvalue of an integer matrix.
pub fn spectral_radius(m: &[Vec<i64>]) -> f64 {
    let p = char_poly_exact(m).squarefree_part();
    complex_roots(&p)
        .iter()
        .map(|r| r.z.norm())
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoxeterRadius {
    pub radius: f64,
    /// `max(1, larger root of x^2 + x(2 - mu^2) + 1)`
    pub expected: f64,
    pub mu: f64,
}

/// Spectral radius of the bicoloured Coxeter element, checked against the
/// value predicted from `mu`.
pub fn bicolored_coxeter_spectral_radius(g: &ConfigurationGraph, tol: f64) -> Result<CoxeterRadius> {
    let cs = CoxeterSystem::new(g)?;
    let mu = graph_mu(g, 1e-13)?;
    let radius = spectral_radius(&howlett_element(&cs)?);
    let expected = if mu > 2.0 { min_dilatation(mu)? } else { 1.0 };
    if (radius - expected).abs() > tol {
        return Err(Error::InternalInconsistency(format!(
            "Coxeter spectral radius {radius} differs from {expected}"
        )));
    }
    Ok(CoxeterRadius {
        radius,
        expected,
        mu,
    })
}

/// Actions of `T_A` and `T_B` on the span of the curves:
/// `[[I, N], [0, I]]` and `[[I, 0], [-Nᵗ, I]]`.
pub fn homology_matrices(n: &IntersectionMatrix) -> (IntMatrix, IntMatrix) {
    let (ra, cb) = (n.rows(), n.cols());
    let k = ra + cb;
    let mut ta = identity(k);
    let mut tb = identity(k);
    for i in 0..ra {
        for j in 0..cb {
            let x = n.get(i, j) as i64;
            ta[i][ra + j] = x;
            tb[ra + j][i] = -x;
        }
    }
    (ta, tb)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Main7Report {
    pub exact_equal: bool,
    pub coxeter_radius: f64,
    pub homology_radius: f64,
    pub holds: bool,
}

/// Compares the bicoloured Coxeter element with `-(T_A)_* (T_B)_*`.
pub fn main7_report(g: &ConfigurationGraph) -> Result<Main7Report> {
    let cs = CoxeterSystem::new(g)?;
    let c = howlett_element(&cs)?;
    let (ta, tb) = homology_matrices(&g.intersection_matrix());
    let prod = mat_mul(&ta, &tb)?;
    let neg: IntMatrix = prod.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
    let exact_equal = c == neg;
    let coxeter_radius = spectral_radius(&c);
    let homology_radius = spectral_radius(&prod);
    let holds = exact_equal && (coxeter_radius - homology_radius).abs() <= 1e-9;
    Ok(Main7Report {
        exact_equal,
        coxeter_radius,
        homology_radius,
        holds,
    })
}

pub fn main7_identity_check(g: &ConfigurationGraph) -> Result<bool> {
    main7_report(g).map(|r| r.holds)
}

/// `cᵗ Pi c == Pi`.
pub fn preserves_form(c: &[Vec<i64>], pi: &[Vec<i64>]) -> Result<bool> {
    Ok(mat_mul(&mat_mul(&transpose(c), pi)?, c)? == pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn a2_form_and_reflections() {
        let g = fixtures::path(2);
        assert_eq!(coxeter_form(&g).unwrap(), vec![vec![2, -1], vec![-1, 2]]);
        let cs = CoxeterSystem::new(&g).unwrap();
        let r = reflection_matrices(&cs);
        // vertex 0 of path(2) is the A vertex
        assert_eq!(r[0], vec![vec![-1, 1], vec![0, 1]]);
        for t in &r {
            assert_eq!(mat_mul(t, t).unwrap(), identity(2));
            assert!(preserves_form(t, cs.form()).unwrap());
        }
    }

    #[test]
    fn a2_howlett() {
        let cs = CoxeterSystem::new(&fixtures::path(2)).unwrap();
        let c = howlett_element(&cs).unwrap();
        assert_eq!(c, vec![vec![0, -1], vec![1, -1]]);
        assert_eq!(c, reflection_product(&cs).unwrap());
        let c3 = mat_mul(&mat_mul(&c, &c).unwrap(), &c).unwrap();
        assert_eq!(c3, identity(2));
        assert!(preserves_form(&c, cs.form()).unwrap());
    }

    #[test]
    fn signatures() {
        let sig = |g: &ConfigurationGraph| {
            form_signature(&to_rational(&coxeter_form(g).unwrap())).unwrap()
        };
        let s = sig(&fixtures::path(2));
        assert_eq!((s.n_plus, s.n_minus, s.n_zero, s.class), (2, 0, 0, FormClass::Spherical));
        let s = sig(&fixtures::cycle(6));
        assert_eq!((s.n_plus, s.n_minus, s.n_zero, s.class), (5, 0, 1, FormClass::Affine));
        let s = sig(&fixtures::eh10());
        assert_eq!((s.n_plus, s.n_minus, s.n_zero, s.class), (9, 1, 0, FormClass::Hyperbolic));
        // all-zero diagonal needs the off-diagonal step
        let z = to_rational(&[vec![0, 1], vec![1, 0]]);
        let s = form_signature(&z).unwrap();
        assert_eq!((s.n_plus, s.n_minus, s.n_zero), (1, 1, 0));
    }

    #[test]
    fn rank_one() {
        // a single vertex is not a configuration graph; build the system by hand
        let cs = CoxeterSystem {
            graph: fixtures::path(2),
            form: vec![vec![2]],
            ordering: vec![0],
        };
        assert_eq!(howlett_element(&cs).unwrap(), vec![vec![-1]]);
    }

    #[test]
    fn radii() {
        let r = bicolored_coxeter_spectral_radius(&fixtures::path(2), 1e-9).unwrap();
        assert!((r.radius - 1.0).abs() < 1e-9);
        let r = bicolored_coxeter_spectral_radius(&fixtures::eh10(), 1e-9).unwrap();
        assert!((r.radius - 1.176_280_818_26).abs() < 1e-9);
        let triple = ConfigurationGraph::from_matrix(vec![vec![3]]).unwrap();
        assert_eq!(
            bicolored_coxeter_spectral_radius(&triple, 1e-9).unwrap_err(),
            Error::NotSmallType
        );
    }

    #[test]
    fn homology_blocks() {
        let one = ConfigurationGraph::from_matrix(vec![vec![1]]).unwrap();
        let (ta, tb) = homology_matrices(&one.intersection_matrix());
        assert_eq!(ta, vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(tb, vec![vec![1, 0], vec![-1, 1]]);
        assert!(main7_identity_check(&one).unwrap());
        assert!(main7_identity_check(&fixtures::path(3)).unwrap());
        let r = main7_report(&fixtures::eh10()).unwrap();
        assert!(r.holds);
        assert!((r.coxeter_radius - 1.176_280_818_26).abs() < 1e-9);
    }
}
