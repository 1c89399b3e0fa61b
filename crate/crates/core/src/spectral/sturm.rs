//! Sturm sequences over the integers and certified real-root isolation.
//!
//! Intervals are half-open `(lo, hi]` with rational endpoints; bisection
//! points are dyadic. Every polynomial is reduced to its squarefree part
//! before a sequence is built, so counts are of distinct roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::numthy::IntPolynomial;

#[derive(Debug, Clone)]
pub struct SturmSequence {
    seq: Vec<IntPolynomial>,
}

impl SturmSequence {
    /// Builds the sequence for the squarefree part of `p`.
    pub fn new(p: &IntPolynomial) -> Self {
        let p0 = p.squarefree_part();
        let mut seq = vec![p0.clone()];
        if p0.degree().unwrap_or(0) == 0 {
            return SturmSequence { seq };
        }
        seq.push(p0.derivative().primitive());
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            let delta = a.degree().unwrap() - b.degree().unwrap() + 1;
            let prem = a.pseudo_rem(b);
            if prem.is_zero() {
                break;
            }
            // prem = lc(b)^delta * rem; we need -rem up to a positive factor.
            let lc_neg_odd = b.leading().is_negative() && delta % 2 == 1;
            let next = if lc_neg_odd { prem } else { -&prem };
            let c = next.content();
            seq.push(IntPolynomial::new(next.coeffs().iter().map(|x| x / &c).collect()));
        }
        SturmSequence { seq }
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.seq[0]
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| sign(&p.leading())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let s = sign(&p.leading());
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots in `(a, +inf)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_at(a)
            .saturating_sub(self.variations_at_pos_inf())
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_neg_inf()
            .saturating_sub(self.variations_at_pos_inf())
    }
}

fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// An integer strictly larger than the modulus of every root of `p`
/// (Cauchy's bound).
pub fn root_bound(p: &IntPolynomial) -> BigRational {
    let lc = p.leading().abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len().saturating_sub(1))
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    // 1 + ceil(max / lc)
    let q = (&max + &lc - BigInt::one()) / &lc;
    BigRational::from_integer(q + BigInt::one())
}

fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// Converts a tolerance to a dyadic rational `2^-k <= tol`.
pub fn dyadic_at_most(tol: f64) -> BigRational {
    let k = if tol >= 1.0 {
        0
    } else {
        (-tol.log2()).ceil().max(0.0) as u32
    };
    BigRational::new(BigInt::one(), BigInt::one() << k)
}

/// A real root of an integer polynomial, held as a certified isolating
/// interval `(lo, hi]`.
#[derive(Debug, Clone)]
pub struct RealAlgebraic {
    sturm: SturmSequence,
    lo: BigRational,
    hi: BigRational,
}

impl RealAlgebraic {
    /// Wraps an interval already known to isolate one root of `sturm`.
    fn from_parts(sturm: SturmSequence, lo: BigRational, hi: BigRational) -> Self {
        RealAlgebraic { sturm, lo, hi }
    }

    /// The largest real root of `p`.
    pub fn largest_root(p: &IntPolynomial) -> Result<Self> {
        if p.degree().unwrap_or(0) == 0 {
            return Err(Error::NoRealRoot);
        }
        let sturm = SturmSequence::new(p);
        if sturm.count_real() == 0 {
            return Err(Error::NoRealRoot);
        }
        let bound = root_bound(sturm.polynomial());
        let mut lo = -bound.clone();
        let mut hi = bound;
        // invariant: the largest root lies in (lo, hi]
        while sturm.count_in(&lo, &hi) > 1 {
            let mid = midpoint(&lo, &hi);
            if sturm.count_in(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(Self::from_parts(sturm, lo, hi))
    }

    /// All real roots of `p`, ascending.
    pub fn all_roots(p: &IntPolynomial) -> Vec<Self> {
        if p.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sturm = SturmSequence::new(p);
        let bound = root_bound(sturm.polynomial());
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            match sturm.count_in(&lo, &hi) {
                0 => {}
                1 => out.push(Self::from_parts(sturm.clone(), lo, hi)),
                _ => {
                    let mid = midpoint(&lo, &hi);
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        out
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        self.sturm.polynomial()
    }

    pub fn lower(&self) -> &BigRational {
        &self.lo
    }

    pub fn upper(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Halves the isolating interval once.
    pub fn bisect(&mut self) {
        let mid = midpoint(&self.lo, &self.hi);
        if self.sturm.count_in(&self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Bisects until the interval is no wider than `width`.
    pub fn refine_to(&mut self, width: &BigRational) {
        while &self.width() > width {
            self.bisect();
        }
    }

    /// Midpoint approximation. The error is at most half the interval width.
    pub fn to_f64(&self) -> f64 {
        midpoint(&self.lo, &self.hi).to_f64().unwrap_or(f64::NAN)
    }

    /// Refines to `tol` and returns the midpoint.
    pub fn approximate(&mut self, tol: f64) -> f64 {
        self.refine_to(&dyadic_at_most(tol));
        self.to_f64()
    }

    /// Exact sign of `q` evaluated at this root.
    pub fn sign_of(&mut self, q: &IntPolynomial) -> i8 {
        if q.is_zero() {
            return 0;
        }
        if q.degree() == Some(0) {
            return sign(&q.leading());
        }
        let g = q.gcd(self.polynomial());
        if g.degree().unwrap_or(0) > 0 && SturmSequence::new(&g).count_in(&self.lo, &self.hi) == 1 {
            return 0;
        }
        let qs = SturmSequence::new(q);
        while qs.count_in(&self.lo, &self.hi) > 0 {
            self.bisect();
        }
        q.sign_at(&self.hi)
    }

    /// True when `q` vanishes at this root.
    pub fn is_root_of(&self, q: &IntPolynomial) -> bool {
        if q.is_zero() {
            return true;
        }
        let g = q.gcd(self.polynomial());
        g.degree().unwrap_or(0) > 0 && SturmSequence::new(&g).count_in(&self.lo, &self.hi) == 1
    }
}

/// Largest real root with a certified isolating interval no wider than `tol`.
#[derive(Debug, Clone)]
pub struct CertifiedRoot {
    pub value: f64,
    pub lower: BigRational,
    pub upper: BigRational,
}

/// Largest real root of `p`, to within `tol`.
pub fn largest_real_root(p: &IntPolynomial, tol: f64) -> Result<CertifiedRoot> {
    let mut r = RealAlgebraic::largest_root(p)?;
    let value = r.approximate(tol);
    Ok(CertifiedRoot {
        value,
        lower: r.lo.clone(),
        upper: r.hi.clone(),
    })
}

/// Sign of `x - y` for a rational `y`; zero only if `x == y` exactly.
pub fn compare_with_rational(x: &mut RealAlgebraic, y: &BigRational) -> i8 {
    let q = IntPolynomial::new(vec![-y.numer().clone(), y.denom().clone()]);
    x.sign_of(&q)
}

impl RealAlgebraic {
    /// Builds the root of `p` closest to `approx`, provided it is isolated
    /// within `radius`.
    pub fn near(p: &IntPolynomial, approx: f64, radius: f64) -> Option<Self> {
        let sturm = SturmSequence::new(p);
        let lo = BigRational::from_float(approx - radius)?;
        let hi = BigRational::from_float(approx + radius)?;
        if sturm.count_in(&lo, &hi) == 1 {
            Some(Self::from_parts(sturm, lo, hi))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn linear_root() {
        let r = largest_real_root(&p(&[-2, 1]), 1e-12).unwrap();
        assert!((r.value - 2.0).abs() <= 1e-12);
        assert!(r.lower < BigRational::from_integer(2.into()));
        assert!(r.upper >= BigRational::from_integer(2.into()));
    }

    #[test]
    fn no_real_root() {
        assert!(matches!(largest_real_root(&p(&[1, 0, 1]), 1e-9), Err(Error::NoRealRoot)));
        assert!(matches!(largest_real_root(&p(&[5]), 1e-9), Err(Error::NoRealRoot)));
    }

    #[test]
    fn counts_roots() {
        // (x-1)(x-2)(x+3) with a repeated factor (x-1)^2
        let f = &(&(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[-2, 1])) * &p(&[3, 1]);
        let s = SturmSequence::new(&f);
        assert_eq!(s.count_real(), 3);
        let r = |n: i64| BigRational::from_integer(n.into());
        assert_eq!(s.count_in(&r(0), &r(1)), 1);
        assert_eq!(s.count_in(&r(1), &r(2)), 1);
        assert_eq!(s.count_above(&r(2)), 0);
        let roots = RealAlgebraic::all_roots(&f);
        let vals: Vec<f64> = roots.into_iter().map(|mut x| x.approximate(1e-12)).collect();
        assert_eq!(vals.len(), 3);
        assert!((vals[0] + 3.0).abs() < 1e-11);
        assert!((vals[2] - 2.0).abs() < 1e-11);
    }

    #[test]
    fn exact_signs_at_algebraic_points() {
        // sqrt(2) as root of x^2 - 2
        let mut s2 = RealAlgebraic::largest_root(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(s2.sign_of(&p(&[-2, 0, 1])), 0);
        assert_eq!(s2.sign_of(&p(&[-141, 100])), 1); // x - 1.41
        assert_eq!(s2.sign_of(&p(&[-142, 100])), -1);
        // x^3 - 2x = x (x^2 - 2) vanishes
        assert_eq!(s2.sign_of(&p(&[0, -2, 0, 1])), 0);
        let mut four = RealAlgebraic::largest_root(&p(&[-4, 1])).unwrap();
        assert_eq!(compare_with_rational(&mut four, &BigRational::from_integer(4.into())), 0);
        assert_eq!(four.sign_of(&p(&[-3, 1])), 1);
    }
}
