//! The flat structure on the surface: annulus heights from the PF
//! eigenvectors of `N Nᵗ` and `Nᵗ N`, one rectangle per intersection point,
//! and the affine derivatives of the two multi-twists. Also the genus of the
//! closed-up surface from an embedded configuration.

use serde::Serialize;

use crate::config::{ConfigurationGraph, EmbeddedConfiguration};
use crate::error::{Error, Result};
use crate::fuchsian::Matrix2;
use crate::spectral::{pf_eigen, to_f64_matrix};

/// The rectangle at one intersection point of `a_i` and `b_j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rectangle {
    pub a: usize,
    pub b: usize,
    pub copy: u32,
    pub width: f64,
    pub height: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlatStructure {
    pub mu: f64,
    pub v: Vec<f64>,
    pub vp: Vec<f64>,
    pub rectangles: Vec<Rectangle>,
    pub a_girths: Vec<f64>,
    pub b_girths: Vec<f64>,
    /// `max |N Vp - mu V|`
    pub residual_a: f64,
    /// `max |Nᵗ V - mu Vp|`
    pub residual_b: f64,
}

impl FlatStructure {
    pub fn total_area(&self) -> f64 {
        self.rectangles.iter().map(|r| r.width * r.height).sum()
    }
}

fn mat_vec(m: &[Vec<i64>], v: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(&x, y)| x as f64 * y).sum())
        .collect()
}

fn max_diff(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
}

/// `V` is the PF eigenvector of `N Nᵗ` (max entry 1), `mu^2` its eigenvalue,
/// and `Vp = Nᵗ V / mu`, so that `N Vp = mu V` and `Nᵗ V = mu Vp`.
pub fn flat_data(g: &ConfigurationGraph, tol: f64) -> Result<FlatStructure> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.intersection_matrix();
    let n_i = n.to_i64();
    let nt_i = n.transpose().to_i64();
    let pf = pf_eigen(&to_f64_matrix(&n.n_nt()), tol)?;
    let mu = pf.mu.sqrt();
    let v = pf.vector;
    let vp: Vec<f64> = mat_vec(&nt_i, &v).into_iter().map(|x| x / mu).collect();
    let a_girths = mat_vec(&n_i, &vp);
    let b_girths = mat_vec(&nt_i, &v);
    let mu_v: Vec<f64> = v.iter().map(|x| mu * x).collect();
    let mu_vp: Vec<f64> = vp.iter().map(|x| mu * x).collect();
    let mut rectangles = Vec::new();
    for i in 0..g.n_a() {
        for j in 0..g.n_b() {
            for copy in 0..g.mult(i, j) {
                rectangles.push(Rectangle {
                    a: i,
                    b: j,
                    copy,
                    width: v[i],
                    height: vp[j],
                });
            }
        }
    }
    Ok(FlatStructure {
        mu,
        residual_a: max_diff(&a_girths, &mu_v),
        residual_b: max_diff(&b_girths, &mu_vp),
        v,
        vp,
        rectangles,
        a_girths,
        b_girths,
    })
}

/// Derivatives of the affine twists: `[[1, mu], [0, 1]]` and `[[1, 0], [-mu, 1]]`.
pub fn daf_generators(mu: f64) -> (Matrix2, Matrix2) {
    (
        Matrix2::new(1.0, mu, 0.0, 1.0),
        Matrix2::new(1.0, 0.0, -mu, 1.0),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub chi: i64,
    pub genus: i64,
}

// half-edge slots at a point
const A_OUT: usize = 0;
const A_IN: usize = 1;
const B_OUT: usize = 2;
const B_IN: usize = 3;

/// Euler characteristic of the closed surface obtained by capping every
/// complementary region of `A ∪ B` with a disk.
///
/// The cell structure has the intersection points as vertices and the arcs
/// between consecutive points as edges. At a point of sign `+1` the
/// counter-clockwise order of half-edges is `a_out, b_out, a_in, b_in`; at
/// sign `-1` it is `a_out, b_in, a_in, b_out`. Faces are orbits of
/// "cross the edge, then turn to the next half-edge".
pub fn euler_genus(e: &EmbeddedConfiguration) -> Result<GenusReport> {
    let g = e.graph();
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let pts = e.points();
    let v = pts.len();
    let h = |p: usize, slot: usize| 4 * p + slot;
    // edge involution
    let mut alpha = vec![usize::MAX; 4 * v];
    let mut link = |cycle: &[usize], out: usize, inn: usize| {
        for k in 0..cycle.len() {
            let (p, q) = (cycle[k], cycle[(k + 1) % cycle.len()]);
            alpha[h(p, out)] = h(q, inn);
            alpha[h(q, inn)] = h(p, out);
        }
    };
    for i in 0..g.n_a() {
        link(e.a_cycle(i), A_OUT, A_IN);
    }
    for j in 0..g.n_b() {
        link(e.b_cycle(j), B_OUT, B_IN);
    }
    if alpha.contains(&usize::MAX) {
        return Err(Error::NonOrientableOrInconsistent(
            "unpaired half-edge".into(),
        ));
    }
    // rotation
    let mut sigma = vec![0; 4 * v];
    for (p, pt) in pts.iter().enumerate() {
        let order = if pt.sign > 0 {
            [A_OUT, B_OUT, A_IN, B_IN]
        } else {
            [A_OUT, B_IN, A_IN, B_OUT]
        };
        for k in 0..4 {
            sigma[h(p, order[k])] = h(p, order[(k + 1) % 4]);
        }
    }
    let mut seen = vec![false; 4 * v];
    let mut faces = 0;
    for start in 0..4 * v {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut x = start;
        let mut steps = 0;
        while !seen[x] {
            seen[x] = true;
            x = sigma[alpha[x]];
            steps += 1;
            if steps > 4 * v {
                return Err(Error::NonOrientableOrInconsistent(
                    "face walk does not close".into(),
                ));
            }
        }
        if x != start {
            return Err(Error::NonOrientableOrInconsistent(
                "face walk does not return to its start".into(),
            ));
        }
    }
    let edges = 2 * v;
    let chi = v as i64 - edges as i64 + faces as i64;
    if chi % 2 != 0 {
        return Err(Error::NonOrientableOrInconsistent(format!(
            "odd Euler characteristic {chi}"
        )));
    }
    Ok(GenusReport {
        vertices: v,
        edges,
        faces,
        chi,
        genus: (2 - chi) / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_edge() {
        let g = ConfigurationGraph::from_matrix(vec![vec![1]]).unwrap();
        let f = flat_data(&g, 1e-12).unwrap();
        assert!((f.mu - 1.0).abs() < 1e-12);
        assert_eq!(f.v, vec![1.0]);
        assert!((f.vp[0] - 1.0).abs() < 1e-12);
        assert_eq!(f.rectangles.len(), 1);
        assert!((f.a_girths[0] - 1.0).abs() < 1e-12);
        assert!((f.b_girths[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn a3_heights() {
        let f = flat_data(&fixtures::path(3), 1e-12).unwrap();
        let s = 2f64.sqrt();
        assert!((f.mu - s).abs() < 1e-12);
        assert_eq!(f.v, vec![1.0]);
        for x in &f.vp {
            assert!((x - 1.0 / s).abs() < 1e-12);
        }
        assert!((f.a_girths[0] - s).abs() < 1e-12);
    }

    #[test]
    fn eh10_residuals() {
        let f = flat_data(&fixtures::eh10(), 1e-12).unwrap();
        assert!(f.residual_a <= 1e-10 && f.residual_b <= 1e-10);
        assert!((f.mu - 2.006_593_6).abs() < 1e-6);
        assert!(f.v.iter().chain(&f.vp).all(|&x| x > 0.0));
    }

    #[test]
    fn daf() {
        let (ta, tb) = daf_generators(3.0);
        assert_eq!(ta, Matrix2::new(1.0, 3.0, 0.0, 1.0));
        assert_eq!(tb, Matrix2::new(1.0, 0.0, -3.0, 1.0));
        assert_eq!(ta.det(), 1.0);
        assert_eq!(tb.trace(), 2.0);
        let mu = 1.234;
        let (ta, tb) = daf_generators(mu);
        assert!(((ta * tb).trace() - (2.0 - mu * mu)).abs() < 1e-12);
    }

    #[test]
    fn genus_examples() {
        let t = euler_genus(&fixtures::torus()).unwrap();
        assert_eq!((t.vertices, t.edges, t.faces, t.chi, t.genus), (1, 2, 1, 0, 1));
        assert_eq!(euler_genus(&fixtures::a3_embedded()).unwrap().genus, 1);
        assert_eq!(euler_genus(&fixtures::lehmer()).unwrap().genus, 5);
        let l = fixtures::lehmer();
        assert_eq!(euler_genus(&l.reversed()).unwrap(), euler_genus(&l).unwrap());
        assert_eq!(euler_genus(&l.mirrored()).unwrap(), euler_genus(&l).unwrap());
    }
}
