//! Integer-polynomial number theory: Lehmer's polynomial, Mahler measures,
//! Salem detection, and resultants.

mod poly;
mod resultant;
mod roots;

pub use poly::IntPolynomial;
pub use resultant::{resultant, BivariatePolynomial};
pub use roots::{complex_roots, ComplexRoot};

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

use crate::spectral::SturmSequence;

/// Default unit-circle tolerance for Salem detection.
pub const SALEM_TOL: f64 = 1e-8;

/// `x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1`.
pub fn lehmer_polynomial() -> IntPolynomial {
    IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

/// `x^5 - 9x^4 + 27x^3 - 31x^2 + 12x - 1`, whose largest root is the square
/// of the spectral radius of the Eh10 tree.
pub fn mu_quintic() -> IntPolynomial {
    IntPolynomial::from_i64(&[-1, 12, -31, 27, -9, 1])
}

/// Mahler measure with an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MahlerMeasure {
    pub value: f64,
    pub error: f64,
}

/// `|lc| * prod max(1, |root|)` over all complex roots with multiplicity.
///
/// Roots come from squarefree factors so the inclusion disks stay tight.
/// Fails when the propagated inclusion radii exceed `tol`.
pub fn mahler_measure(p: &IntPolynomial, tol: f64) -> Result<MahlerMeasure> {
    if p.is_zero() {
        return Err(Error::Validation("Mahler measure of the zero polynomial".into()));
    }
    let content = p.content().to_f64().unwrap_or(f64::NAN);
    let mut log_m = content.ln();
    let mut rel_err = 0.0;
    for (f, k) in p.squarefree_decomposition() {
        let lc = f.leading().abs().to_f64().unwrap_or(f64::NAN);
        let mut log_f = lc.ln();
        for r in complex_roots(&f) {
            let m = r.z.norm();
            if m > 1.0 {
                log_f += m.ln();
                rel_err += r.radius / m * k as f64;
            } else if m + r.radius > 1.0 {
                rel_err += (m + r.radius - 1.0) * k as f64;
            }
        }
        log_m += log_f * k as f64;
    }
    let value = log_m.exp();
    let error = value * rel_err;
    if error > tol {
        return Err(Error::PrecisionExhausted(error));
    }
    Ok(MahlerMeasure { value, error })
}

/// Root-modulus census used by the Salem test.
#[derive(Debug, Clone, PartialEq)]
pub struct SalemReport {
    pub reciprocal: bool,
    pub real_roots_above_one: usize,
    pub inside: usize,
    pub on_circle: usize,
    pub outside: usize,
    pub is_salem: bool,
}

/// Salem test: reciprocal, exactly one real root above 1 (Sturm-certified,
/// counted with multiplicity), exactly one root of modulus `< 1 - tol`, and
/// at least one further root with every remaining root within `tol` of the
/// unit circle.
pub fn salem_report(p: &IntPolynomial, tol: f64) -> SalemReport {
    let reciprocal = p.is_reciprocal();
    let one = BigRational::one();
    let mut real_roots_above_one = 0;
    let (mut inside, mut on_circle, mut outside) = (0, 0, 0);
    for (f, k) in p.squarefree_decomposition() {
        real_roots_above_one += SturmSequence::new(&f).count_above(&one) * k;
        for r in complex_roots(&f) {
            let m = r.z.norm();
            if m < 1.0 - tol {
                inside += k;
            } else if m > 1.0 + tol {
                outside += k;
            } else {
                on_circle += k;
            }
        }
    }
    let is_salem = reciprocal
        && p.degree().unwrap_or(0) >= 2
        && real_roots_above_one == 1
        && outside == 1
        && inside == 1
        && on_circle >= 1;
    SalemReport {
        reciprocal,
        real_roots_above_one,
        inside,
        on_circle,
        outside,
        is_salem,
    }
}

pub fn is_salem(p: &IntPolynomial, tol: f64) -> bool {
    salem_report(p, tol).is_salem
}
