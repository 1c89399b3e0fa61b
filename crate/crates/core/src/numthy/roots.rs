//! Simultaneous complex root finding (Aberth–Ehrlich) with a posteriori
//! inclusion disks.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::IntPolynomial;

/// An approximate root and a radius such that the disk around `z` contains
/// a true root (valid when the disks are pairwise disjoint).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexRoot {
    pub z: Complex64,
    pub radius: f64,
}

const MAX_ITER: usize = 1000;

/// Roots of a squarefree polynomial. Multiple roots are not separated well
/// by floating-point iteration; callers pass squarefree factors.
pub fn complex_roots(p: &IntPolynomial) -> Vec<ComplexRoot> {
    let n = match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(n) => n,
    };
    let c: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|x| x.to_f64().unwrap_or(f64::NAN))
        .collect();
    let lc = c[n];
    // Fujiwara-style radius for the initial circle.
    let radius = (0..n)
        .map(|k| (c[k] / lc).abs().powf(1.0 / (n - k) as f64))
        .fold(0.0, f64::max)
        * 2.0;
    let radius = radius.max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let deriv: Vec<f64> = (1..=n).map(|k| c[k] * k as f64).collect();
    let eval = |coef: &[f64], x: Complex64| {
        coef.iter()
            .rev()
            .fold(Complex64::zero(), |acc, &a| acc * x + a)
    };
    for _ in 0..MAX_ITER {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let pz = eval(&c, z[i]);
            if pz.norm() == 0.0 {
                continue;
            }
            let dz = eval(&deriv, z[i]);
            let ratio = pz / dz;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-16 {
            break;
        }
    }
    // inclusion radii from Weierstrass corrections
    let abs_coef: Vec<f64> = c.iter().map(|x| x.abs()).collect();
    (0..n)
        .map(|i| {
            let pz = eval(&c, z[i]);
            let rounding = 4.0 * (n as f64 + 1.0) * f64::EPSILON
                * abs_coef
                    .iter()
                    .rev()
                    .fold(0.0, |acc, &a| acc * z[i].norm() + a);
            let prod: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| z[i] - z[j])
                .fold(Complex64::new(lc, 0.0), |acc, d| acc * d);
            let w = (pz.norm() + rounding) / prod.norm();
            ComplexRoot {
                z: z[i],
                radius: n as f64 * w,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_roots() {
        let roots = complex_roots(&IntPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!((r.z.norm() - 1.0).abs() < 1e-14);
            assert!(r.z.re.abs() < 1e-14);
            assert!(r.radius < 1e-12);
        }
    }

    #[test]
    fn real_roots_recovered() {
        // (x-1)(x-2)(x-3)(x+5)
        let p = IntPolynomial::from_i64(&[-30, 49, -19, -1, 1]);
        let mut re: Vec<f64> = complex_roots(&p).iter().map(|r| r.z.re).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in re.iter().zip([-5.0, 1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }
}
