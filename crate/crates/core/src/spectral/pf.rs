//! Perron–Frobenius eigenpairs of non-negative irreducible matrices.

use crate::error::{Error, Result};

/// PF eigenvalue and positive eigenvector, normalised to max entry 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PFData {
    pub mu: f64,
    pub vector: Vec<f64>,
    /// `max_i |(Mv)_i - mu v_i|` for the returned pair.
    pub residual: f64,
    /// Collatz–Wielandt bounds `min (Mv)_i/v_i <= mu <= max (Mv)_i/v_i`.
    pub lower: f64,
    pub upper: f64,
}

pub const DEFAULT_TOL: f64 = 1e-12;
const MAX_ITERATIONS: usize = 200_000;

/// True when the support digraph of `m` is strongly connected.
pub fn is_irreducible(m: &[Vec<f64>]) -> bool {
    let n = m.len();
    if n == 0 {
        return false;
    }
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let w = if forward { m[i][j] } else { m[j][i] };
                if w != 0.0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    reach(true) && reach(false)
}

fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Power iteration on `M + I` (primitive whenever `M` is irreducible) with
/// sup-norm normalisation. Stops when the Collatz–Wielandt bounds of `M` on
/// the current vector are within `tol` of each other.
pub fn pf_eigen(m: &[Vec<f64>], tol: f64) -> Result<PFData> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Validation("matrix must be square".into()));
    }
    if m.iter().flatten().any(|&x| !(x >= 0.0) || !x.is_finite()) {
        return Err(Error::Validation("matrix must be non-negative".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Validation("tolerance must be positive".into()));
    }
    if !is_irreducible(m) {
        return Err(Error::NotIrreducible);
    }
    if n == 1 {
        return Ok(PFData {
            mu: m[0][0],
            vector: vec![1.0],
            residual: 0.0,
            lower: m[0][0],
            upper: m[0][0],
        });
    }
    let mut v = vec![1.0; n];
    let mut gap = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let mv = mat_vec(m, &v);
        let (lower, upper) = collatz_wielandt(&mv, &v);
        gap = upper - lower;
        if gap <= tol {
            let mu = 0.5 * (lower + upper);
            let residual = mv
                .iter()
                .zip(&v)
                .map(|(a, b)| (a - mu * b).abs())
                .fold(0.0, f64::max);
            return Ok(PFData {
                mu,
                vector: v,
                residual,
                lower,
                upper,
            });
        }
        // shifted step: (M + I) v
        let mut next: Vec<f64> = mv.iter().zip(&v).map(|(a, b)| a + b).collect();
        let norm = next.iter().cloned().fold(0.0, f64::max);
        next.iter_mut().for_each(|x| *x /= norm);
        v = next;
    }
    Err(Error::NoConvergence {
        iterations: MAX_ITERATIONS,
        gap,
    })
}

fn collatz_wielandt(mv: &[f64], v: &[f64]) -> (f64, f64) {
    mv.iter().zip(v).fold((f64::INFINITY, 0.0f64), |(lo, hi), (a, b)| {
        let r = a / b;
        (lo.min(r), hi.max(r))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        let d = pf_eigen(&[vec![1.0]], 1e-12).unwrap();
        assert_eq!(d.mu, 1.0);
        assert_eq!(d.vector, vec![1.0]);
    }

    #[test]
    fn bipartite_matrix_converges() {
        // periodic: eigenvalues +-1; the shift makes it primitive
        let d = pf_eigen(&[vec![0.0, 1.0], vec![1.0, 0.0]], 1e-12).unwrap();
        assert!((d.mu - 1.0).abs() < 1e-12);
        assert!(d.lower <= d.mu && d.mu <= d.upper);
    }

    #[test]
    fn rejects_reducible_and_negative() {
        assert!(matches!(
            pf_eigen(&[vec![1.0, 1.0], vec![0.0, 1.0]], 1e-12),
            Err(Error::NotIrreducible)
        ));
        assert!(matches!(
            pf_eigen(&[vec![-1.0]], 1e-12),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn golden_ratio() {
        let d = pf_eigen(&[vec![1.0, 1.0], vec![1.0, 0.0]], 1e-13).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((d.mu - phi).abs() < 1e-12);
        assert!((d.vector[1] - 1.0 / phi).abs() < 1e-12);
    }
}
