//! Spectral data of configuration graphs: PF eigenpairs, exact
//! characteristic polynomials, and certified real roots.

mod charpoly;
mod pf;
mod sturm;

pub use charpoly::{char_poly_big, char_poly_exact};
pub use pf::{is_irreducible, pf_eigen, PFData, DEFAULT_TOL};
pub use sturm::{
    compare_with_rational, dyadic_at_most, largest_real_root, root_bound, CertifiedRoot,
    RealAlgebraic, SturmSequence,
};

use crate::config::ConfigurationGraph;
use crate::error::{Error, Result};

pub fn to_f64_matrix(m: &[Vec<i64>]) -> Vec<Vec<f64>> {
    m.iter()
        .map(|r| r.iter().map(|&x| x as f64).collect())
        .collect()
}

/// `sqrt` of the PF eigenvalue of `N Nᵗ`, which equals the spectral radius
/// of the configuration graph.
pub fn graph_mu(g: &ConfigurationGraph, tol: f64) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let nnt = to_f64_matrix(&g.intersection_matrix().n_nt());
    // the eigenvalue of N Nᵗ is mu^2; tighten so mu itself is within tol
    let rho = pf_eigen(&nnt, tol)?;
    Ok(rho.mu.sqrt())
}

/// `mu^2` as an exact algebraic number: the largest root of `det(xI - N Nᵗ)`.
pub fn mu_squared_exact(g: &ConfigurationGraph) -> Result<RealAlgebraic> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    RealAlgebraic::largest_root(&char_poly_exact(&g.intersection_matrix().n_nt()))
}

/// PF data of the adjacency matrix itself.
pub fn adjacency_pf(g: &ConfigurationGraph, tol: f64) -> Result<PFData> {
    pf_eigen(&to_f64_matrix(&g.adjacency_matrix()), tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graph_mus() {
        let single = ConfigurationGraph::from_matrix(vec![vec![1]]).unwrap();
        assert!((graph_mu(&single, 1e-12).unwrap() - 1.0).abs() < 1e-12);
        let a3 = ConfigurationGraph::from_matrix(vec![vec![1, 1]]).unwrap();
        assert!((graph_mu(&a3, 1e-12).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        let d4 = ConfigurationGraph::from_matrix(vec![vec![1, 1, 1]]).unwrap();
        assert!((graph_mu(&d4, 1e-12).unwrap() - 3f64.sqrt()).abs() < 1e-12);
        let nnt = a3.intersection_matrix().n_nt();
        assert_eq!(nnt, vec![vec![2]]);
        let d = pf_eigen(&to_f64_matrix(&nnt), 1e-12).unwrap();
        assert_eq!((d.mu, d.vector), (2.0, vec![1.0]));
    }

    #[test]
    fn disconnected_rejected() {
        let g = ConfigurationGraph::from_matrix(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(graph_mu(&g, 1e-12), Err(Error::NotConnected));
    }
}
