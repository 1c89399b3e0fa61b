//! Words in the two parabolic generators `[[1, mu], [0, 1]]` and
//! `[[1, 0], [-mu, 1]]`, their element types, dilatations and the triangle
//! group signatures of the recessive families.
//!
//! Words act left to right: `"A B"` is the matrix product `gamma1 * gamma2`.
//!
//! Besides floating-point evaluation, every word has a symbolic matrix
//! `[[a, mu b], [mu c, d]]` with `a, b, c, d` integer polynomials in
//! `t = mu^2`. When `mu^2` is the largest root of `char(N N^t)` the trace
//! can then be compared with `+-2` exactly.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::classify::{family_of, GraphClass};
use crate::config::ConfigurationGraph;
use crate::error::{Error, Result};
use crate::numthy::IntPolynomial;
use crate::spectral::{mu_squared_exact, RealAlgebraic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Generator {
    A,
    B,
}

/// A word in the generators, e.g. `A B^-2 A^3`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct MultiTwistWord {
    letters: Vec<(Generator, i64)>,
}

impl MultiTwistWord {
    pub fn new(letters: Vec<(Generator, i64)>) -> Result<Self> {
        if letters.iter().any(|&(_, e)| e == 0) {
            return Err(Error::Parse("exponents must be nonzero".into()));
        }
        Ok(MultiTwistWord { letters })
    }

    pub fn letters(&self) -> &[(Generator, i64)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        MultiTwistWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        MultiTwistWord { letters }
    }
}

impl FromStr for MultiTwistWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (head, exp) = match tok.split_once('^') {
                Some((h, e)) => {
                    let e = e.trim_start_matches('{').trim_end_matches('}');
                    let e: i64 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
                    (h, e)
                }
                None => (tok, 1),
            };
            let g = match head {
                "A" | "a" => Generator::A,
                "B" | "b" => Generator::B,
                _ => return Err(Error::Parse(format!("unknown generator {head:?}"))),
            };
            letters.push((g, exp));
        }
        MultiTwistWord::new(letters)
    }
}

impl fmt::Display for MultiTwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| {
                let name = if g == Generator::A { "A" } else { "B" };
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Real 2x2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Matrix2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Matrix2 {
    pub const IDENTITY: Matrix2 = Matrix2 {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse(&self) -> Self {
        Matrix2::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn max_abs(&self) -> f64 {
        [self.a, self.b, self.c, self.d]
            .iter()
            .fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn approx_eq(&self, other: &Matrix2, tol: f64) -> bool {
        (self.a - other.a).abs() <= tol
            && (self.b - other.b).abs() <= tol
            && (self.c - other.c).abs() <= tol
            && (self.d - other.d).abs() <= tol
    }

    pub fn to_rows(&self) -> [[f64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;

    fn mul(self, o: Matrix2) -> Matrix2 {
        Matrix2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

/// `gamma1^k = [[1, k mu], [0, 1]]`, `gamma2^k = [[1, 0], [-k mu, 1]]`.
pub fn generator_power(g: Generator, k: i64, mu: f64) -> Matrix2 {
    let s = k as f64 * mu;
    match g {
        Generator::A => Matrix2::new(1.0, s, 0.0, 1.0),
        Generator::B => Matrix2::new(1.0, 0.0, -s, 1.0),
    }
}

pub fn eval_word(w: &MultiTwistWord, mu: f64) -> Matrix2 {
    w.letters
        .iter()
        .fold(Matrix2::IDENTITY, |m, &(g, k)| m * generator_power(g, k, mu))
}

/// Word matrix as `[[a, mu b], [mu c, d]]` over `Z[t]`, `t = mu^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    pub a: IntPolynomial,
    pub b: IntPolynomial,
    pub c: IntPolynomial,
    pub d: IntPolynomial,
}

impl SymbolicMatrix {
    pub fn identity() -> Self {
        SymbolicMatrix {
            a: IntPolynomial::one(),
            b: IntPolynomial::zero(),
            c: IntPolynomial::zero(),
            d: IntPolynomial::one(),
        }
    }

    fn generator_power(g: Generator, k: i64) -> Self {
        let k = IntPolynomial::constant(BigInt::from(k));
        let mut m = Self::identity();
        match g {
            Generator::A => m.b = k,
            Generator::B => m.c = -&k,
        }
        m
    }

    pub fn mul(&self, o: &Self) -> Self {
        let t = IntPolynomial::x();
        SymbolicMatrix {
            a: &(&self.a * &o.a) + &(&t * &(&self.b * &o.c)),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&t * &(&self.c * &o.b)) + &(&self.d * &o.d),
        }
    }

    pub fn trace(&self) -> IntPolynomial {
        &self.a + &self.d
    }
}

pub fn eval_word_symbolic(w: &MultiTwistWord) -> SymbolicMatrix {
    w.letters.iter().fold(SymbolicMatrix::identity(), |m, &(g, k)| {
        m.mul(&SymbolicMatrix::generator_power(g, k))
    })
}

/// Type of an element, decided without its numeric data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TraceClass {
    Identity,
    Parabolic,
    Elliptic,
    Hyperbolic,
}

/// Exact type of `w` at `mu = sqrt(t)` for an algebraic `t > 0`.
pub fn classify_exact(w: &MultiTwistWord, t: &mut RealAlgebraic) -> TraceClass {
    let m = eval_word_symbolic(w);
    let tr = m.trace();
    let two = IntPolynomial::from_i64(&[2]);
    let above = t.sign_of(&(&tr - &two));
    let below = t.sign_of(&(&tr + &two));
    if above > 0 || below < 0 {
        return TraceClass::Hyperbolic;
    }
    if above < 0 && below > 0 {
        return TraceClass::Elliptic;
    }
    let one = IntPolynomial::one();
    let plus_i = [&m.a - &one, m.b.clone(), m.c.clone(), &m.d - &one];
    let minus_i = [&m.a + &one, m.b.clone(), m.c.clone(), &m.d + &one];
    let scalar = |entries: &[IntPolynomial; 4], t: &RealAlgebraic| {
        entries.iter().all(|e| e.is_zero() || t.is_root_of(e))
    };
    if scalar(&plus_i, t) || scalar(&minus_i, t) {
        TraceClass::Identity
    } else {
        TraceClass::Parabolic
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EllipticOrder {
    Finite(u64),
    NotResolved,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum ElementType {
    Identity,
    Parabolic,
    Elliptic { order: EllipticOrder },
    Hyperbolic { translation_length: f64, dilatation: f64 },
}

impl ElementType {
    pub fn dilatation(&self) -> Option<f64> {
        match self {
            ElementType::Hyperbolic { dilatation, .. } => Some(*dilatation),
            _ => None,
        }
    }
}

/// Denominator bound for rational reconstruction of angles.
pub const MAX_DENOMINATOR: u64 = 1_000_000;
/// Tolerance for rational reconstruction of angles.
pub const ANGLE_TOL: f64 = 1e-9;

/// Continued-fraction reconstruction of `x` as `s / q` with `q <= max_den`.
pub fn rational_reconstruct(x: f64, max_den: u64, tol: f64) -> Option<(u64, u64)> {
    if !x.is_finite() || x < 0.0 {
        return None;
    }
    let (mut h0, mut h1) = (0u64, 1u64);
    let (mut k0, mut k1) = (1u64, 0u64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a > u64::MAX as f64 / 2.0 {
            return None;
        }
        let a = a as u64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            return None;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() <= tol {
            return Some((h1, k1));
        }
        let frac = r - a as f64;
        if frac <= 0.0 {
            return None;
        }
        r = 1.0 / frac;
    }
    None
}

/// Projective order of an elliptic element with `|trace| = 2 cos(pi s / q)`.
pub fn elliptic_order(trace: f64) -> EllipticOrder {
    let alpha = (trace.abs() / 2.0).clamp(-1.0, 1.0).acos() / std::f64::consts::PI;
    match rational_reconstruct(alpha, MAX_DENOMINATOR, ANGLE_TOL) {
        Some((_, q)) if q >= 2 => EllipticOrder::Finite(q),
        _ => EllipticOrder::NotResolved,
    }
}

/// Spectral radius of a hyperbolic element with trace `tr`.
pub fn dilatation_from_trace(tr: f64) -> f64 {
    let t = tr.abs() / 2.0;
    t + (t * t - 1.0).max(0.0).sqrt()
}

fn hyperbolic(tr: f64) -> ElementType {
    let dilatation = dilatation_from_trace(tr);
    ElementType::Hyperbolic {
        translation_length: 2.0 * dilatation.ln(),
        dilatation,
    }
}

/// Numeric type of a determinant-one matrix.
///
/// `||tr| - 2| <= tol` is parabolic (identity when `m = +-I` within `tol`).
/// Beyond `tol` but within `tol * max(1, |m|^2)` the rounding error of the
/// trace could flip the answer, so [`Error::ToleranceAmbiguous`] is returned.
pub fn element_type(m: &Matrix2, tol: f64) -> Result<ElementType> {
    let scale = m.max_abs().max(1.0).powi(2);
    if (m.det() - 1.0).abs() > tol * scale {
        return Err(Error::Validation(format!(
            "determinant {} is not 1",
            m.det()
        )));
    }
    let tr = m.trace();
    let gap = tr.abs() - 2.0;
    if gap.abs() <= tol {
        let id = Matrix2::IDENTITY;
        let neg = Matrix2::new(-1.0, 0.0, 0.0, -1.0);
        return Ok(if m.approx_eq(&id, tol) || m.approx_eq(&neg, tol) {
            ElementType::Identity
        } else {
            ElementType::Parabolic
        });
    }
    if gap.abs() <= tol * scale {
        return Err(Error::ToleranceAmbiguous { trace: tr });
    }
    Ok(if gap > 0.0 {
        hyperbolic(tr)
    } else {
        ElementType::Elliptic {
            order: elliptic_order(tr),
        }
    })
}

/// Element type with the discrete decision taken exactly and the numeric
/// data read off the floating-point matrix.
pub fn element_type_exact(w: &MultiTwistWord, t: &mut RealAlgebraic) -> ElementType {
    let mu = t.approximate(1e-15).sqrt();
    let tr = eval_word(w, mu).trace();
    match classify_exact(w, t) {
        TraceClass::Identity => ElementType::Identity,
        TraceClass::Parabolic => ElementType::Parabolic,
        TraceClass::Elliptic => ElementType::Elliptic {
            order: elliptic_order(tr),
        },
        TraceClass::Hyperbolic => hyperbolic(tr),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum AutomorphismClass {
    PseudoAnosov { dilatation: f64 },
    MultiTwistRelated,
    FiniteOrder,
}

/// Nielsen-Thurston type of the automorphism given by `w`, read off its
/// image at `mu(g)`. The trace comparison is exact, so words that are
/// parabolic at `mu = 2` are recognised without a tolerance.
pub fn automorphism_class(w: &MultiTwistWord, g: &ConfigurationGraph) -> Result<AutomorphismClass> {
    let mut t = mu_squared_exact(g)?;
    Ok(match element_type_exact(w, &mut t) {
        ElementType::Hyperbolic { dilatation, .. } => AutomorphismClass::PseudoAnosov { dilatation },
        ElementType::Parabolic => AutomorphismClass::MultiTwistRelated,
        ElementType::Elliptic { .. } | ElementType::Identity => AutomorphismClass::FiniteOrder,
    })
}

/// Larger root of `x^2 + x (2 - mu^2) + 1`: the smallest dilatation of a
/// hyperbolic word when `mu > 2`, attained by `(AB)^{+-1}`.
pub fn min_dilatation(mu: f64) -> Result<f64> {
    if mu.is_nan() || mu <= 2.0 {
        return Err(Error::MuNotAboveTwo(mu));
    }
    let s = mu * mu - 2.0;
    Ok((s + (s * s - 4.0).max(0.0).sqrt()) / 2.0)
}

/// `exp(asinh(sqrt(cos(3 pi / 7))))`, about 1.5774.
pub fn triangle_floor() -> f64 {
    (3.0 * std::f64::consts::PI / 7.0).cos().sqrt().asinh().exp()
}

/// Lower bound for the dilatation of any pseudo-Anosov element.
pub fn dilatation_floor(mu: f64) -> f64 {
    if mu <= 2.0 {
        triangle_floor()
    } else {
        min_dilatation(mu).expect("mu > 2")
    }
}

/// Signature `(p, q, r)` of a triangle orbifold; `None` is a cusp.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleSignature(pub [Option<u64>; 3]);

impl TriangleSignature {
    fn sorted(mut e: [Option<u64>; 3]) -> Self {
        e.sort_by_key(|x| x.unwrap_or(u64::MAX));
        TriangleSignature(e)
    }

    pub fn largest_finite(&self) -> Option<u64> {
        self.0.iter().flatten().copied().max()
    }
}

impl fmt::Display for TriangleSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|x| x.map_or("inf".to_string(), |v| v.to_string()))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for TriangleSignature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignatureReport {
    pub signature: TriangleSignature,
    /// Projective order of `gamma1 gamma2`.
    pub product_order: u64,
    pub mu: f64,
}

/// Signature of the triangle group `Gamma_mu` for `0 < mu < 2` of the form
/// `2 cos(pi s / q)`.
pub fn signature_from_mu(mu: f64) -> Result<SignatureReport> {
    if !(mu > 0.0 && mu < 2.0) {
        return Err(Error::Validation(format!("mu = {mu} is not in (0, 2)")));
    }
    let theta = 2.0 * (mu / 2.0).acos() / std::f64::consts::PI;
    let (s, q) = rational_reconstruct(theta, MAX_DENOMINATOR, ANGLE_TOL)
        .ok_or(Error::RationalReconstructionFailed(theta))?;
    let signature = match s {
        1 => TriangleSignature::sorted([Some(q), None, None]),
        2 if q % 2 == 1 => TriangleSignature::sorted([Some(2), Some(q), None]),
        _ => return Err(Error::RationalReconstructionFailed(theta)),
    };
    let product_order = match elliptic_order(2.0 - mu * mu) {
        EllipticOrder::Finite(q) => q,
        EllipticOrder::NotResolved => {
            return Err(Error::RationalReconstructionFailed(2.0 - mu * mu))
        }
    };
    Ok(SignatureReport {
        signature,
        product_order,
        mu,
    })
}

pub fn triangle_signature(g: &ConfigurationGraph) -> Result<SignatureReport> {
    if family_of(g)?.class() != GraphClass::Recessive {
        return Err(Error::NotRecessive);
    }
    let mu = mu_squared_exact(g)?.approximate(1e-15).sqrt();
    signature_from_mu(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn word(s: &str) -> MultiTwistWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        let w = word("A B^-2 A^3");
        assert_eq!(
            w.letters(),
            &[(Generator::A, 1), (Generator::B, -2), (Generator::A, 3)]
        );
        assert_eq!(w.to_string(), "A B^-2 A^3");
        assert_eq!(word("B^{-1}"), word("B^-1"));
        assert!("A^0".parse::<MultiTwistWord>().is_err());
        assert!("C".parse::<MultiTwistWord>().is_err());
        assert!(word("").is_empty());
    }

    #[test]
    fn evaluation_examples() {
        let m = eval_word(&word("A"), 2.5);
        assert_eq!(m, Matrix2::new(1.0, 2.5, 0.0, 1.0));
        let mu = 1.7;
        assert!((eval_word(&word("A B"), mu).trace() - (2.0 - mu * mu)).abs() < 1e-12);
        let m = eval_word(&word("A B^-1"), 1.0);
        assert_eq!(m, Matrix2::new(2.0, 1.0, 1.0, 1.0));
    }

    #[test]
    fn element_types() {
        assert_eq!(
            element_type(&eval_word(&word("A"), 1.0), 1e-12).unwrap(),
            ElementType::Parabolic
        );
        assert_eq!(
            element_type(&eval_word(&word("A B"), 1.0), 1e-12).unwrap(),
            ElementType::Elliptic {
                order: EllipticOrder::Finite(3)
            }
        );
        let mu_l = 2.006_593_557_4;
        let d = element_type(&eval_word(&word("A B"), mu_l), 1e-12)
            .unwrap()
            .dilatation()
            .unwrap();
        assert!((d - 1.176_280_8).abs() < 1e-6);
        assert_eq!(
            element_type(&Matrix2::IDENTITY, 1e-12).unwrap(),
            ElementType::Identity
        );
        // trace 2 + 1e-10, far inside the rounding band of a large matrix
        let m = Matrix2::new(1.0 + 1e-10, 1e6, 1e-16, 1.0);
        assert!(matches!(
            element_type(&m, 1e-12),
            Err(Error::ToleranceAmbiguous { .. })
        ));
    }

    #[test]
    fn symbolic_matches_numeric() {
        let w = word("A B^-2 A^3 B A^-1");
        let s = eval_word_symbolic(&w);
        for mu in [0.7, 1.3, 2.2] {
            let t = mu * mu;
            let m = eval_word(&w, mu);
            assert!((s.a.eval_f64(t) - m.a).abs() < 1e-9);
            assert!((mu * s.b.eval_f64(t) - m.b).abs() < 1e-9);
            assert!((mu * s.c.eval_f64(t) - m.c).abs() < 1e-9);
            assert!((s.d.eval_f64(t) - m.d).abs() < 1e-9);
        }
    }

    #[test]
    fn automorphism_classes() {
        let eh = fixtures::eh10();
        assert_eq!(
            automorphism_class(&word("A^5"), &eh).unwrap(),
            AutomorphismClass::MultiTwistRelated
        );
        match automorphism_class(&word("A B"), &eh).unwrap() {
            AutomorphismClass::PseudoAnosov { dilatation } => {
                assert!((dilatation - 1.176_280_8).abs() < 1e-6)
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            automorphism_class(&word("A B"), &fixtures::p2()).unwrap(),
            AutomorphismClass::MultiTwistRelated
        );
        assert_eq!(
            automorphism_class(&word("A B A B A B"), &fixtures::path(2)).unwrap(),
            AutomorphismClass::FiniteOrder
        );
    }

    #[test]
    fn min_dilatation_values() {
        assert!((min_dilatation(3.0).unwrap() - (7.0 + 3.0 * 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((min_dilatation(2.0 + 1e-15).unwrap() - 1.0).abs() < 1e-6);
        assert_eq!(min_dilatation(2.0), Err(Error::MuNotAboveTwo(2.0)));
        assert!((dilatation_floor(1.0) - 1.577_39).abs() < 1e-5);
        assert!(dilatation_floor(2.0) > 1.47);
    }

    #[test]
    fn signatures() {
        let s = triangle_signature(&fixtures::path(2)).unwrap();
        assert_eq!(s.signature.to_string(), "(2,3,inf)");
        assert_eq!(s.product_order, 3);
        let s = triangle_signature(&fixtures::star(3)).unwrap();
        assert_eq!(s.signature.to_string(), "(3,inf,inf)");
        let s = triangle_signature(&fixtures::t_shape(1, 2, 4)).unwrap();
        assert_eq!(s.signature.to_string(), "(15,inf,inf)");
        assert_eq!(s.product_order, 15);
        assert_eq!(
            triangle_signature(&fixtures::eh10()).unwrap_err(),
            Error::NotRecessive
        );
    }

    #[test]
    fn reconstruction() {
        assert_eq!(rational_reconstruct(2.0 / 101.0, MAX_DENOMINATOR, 1e-12), Some((2, 101)));
        assert_eq!(rational_reconstruct(0.5, MAX_DENOMINATOR, 1e-12), Some((1, 2)));
        assert_eq!(rational_reconstruct(std::f64::consts::PI - 3.0, 100, 1e-12), None);
    }
}
