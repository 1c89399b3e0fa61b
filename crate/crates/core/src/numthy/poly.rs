//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, constant term first. The zero polynomial has no
/// coefficients; every other value has a nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Coefficients as `i64`, when they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::zero(), |acc, c| {
            acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0)
        })
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Sign of `p(x)` for rational `x`, computed without fractions.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let n = match self.degree() {
            None => return 0,
            Some(n) => n,
        };
        let (num, den) = (x.numer(), x.denom());
        // den^n * p(num/den) = sum c_i num^i den^(n-i), and den > 0.
        let mut dens = vec![BigInt::one(); n + 1];
        for i in 1..=n {
            dens[i] = &dens[i - 1] * den;
        }
        let mut acc = BigInt::zero();
        let mut num_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &num_pow * &dens[n - i];
            num_pow *= num;
        }
        sign_of(&acc)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Greatest common divisor of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lc = d.leading();
        let mut r = self.clone();
        let mut steps = match self.degree() {
            Some(n) if n >= dd => n - dd + 1,
            _ => return r,
        };
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.leading();
            let shift = rd - dd;
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc).collect();
            for (i, c) in d.coeffs.iter().enumerate() {
                coeffs[i + shift] -= &lr * c;
            }
            r = Self::new(coeffs);
            steps -= 1;
        }
        let k = num_traits::pow(lc, steps);
        r.scale(&k)
    }

    /// Exact division; `None` if `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_rational(d);
        if !r.iter().all(Zero::is_zero) {
            return None;
        }
        q.into_iter()
            .map(|c| if c.is_integer() { Some(c.to_integer()) } else { None })
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Quotient and remainder over the rationals.
    pub fn div_rem_rational(&self, d: &Self) -> (Vec<BigRational>, Vec<BigRational>) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lc = BigRational::from_integer(d.leading());
        let mut r: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let n = r.len();
        if n <= dd {
            return (Vec::new(), r);
        }
        let mut q = vec![BigRational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let t = &r[k + dd] / &lc;
            if !t.is_zero() {
                for (i, c) in d.coeffs.iter().enumerate() {
                    r[k + i] -= &t * BigRational::from_integer(c.clone());
                }
            }
            q[k] = t;
        }
        r.truncate(dd);
        (q, r)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// The product of the distinct irreducible factors (primitive form).
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive().div_exact(&g).expect("gcd divides").primitive()
    }

    /// Yun's square-free decomposition: pairs `(f_k, k)` with
    /// `primitive(self) = prod f_k^k` up to sign and the `f_k` squarefree and
    /// pairwise coprime. Constant factors are dropped.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let p = self.primitive();
        if p.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        // Every divisor below is primitive, so each quotient is integral.
        let mut out = Vec::new();
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        let mut b = p.div_exact(&a0).expect("gcd divides");
        let mut c = dp.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            k += 1;
        }
        out
    }

    /// `p(x^2)`.
    pub fn compose_square(&self) -> Self {
        let mut coeffs = vec![BigInt::zero(); 2 * self.coeffs.len().max(1) - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `p(-x)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// True when the coefficient list is a palindrome up to a global sign.
    pub fn is_reciprocal(&self) -> bool {
        if self.is_zero() || self.coeffs[0].is_zero() {
            return false;
        }
        let rev: Vec<&BigInt> = self.coeffs.iter().rev().collect();
        let same = self.coeffs.iter().zip(&rev).all(|(a, b)| a == *b);
        let anti = self.coeffs.iter().zip(&rev).all(|(a, b)| *a == -(*b).clone());
        same || anti
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// Parses `x^10 + x^9 - 3*x^2 + 2x - 1` style text (variable `x`; `*` optional).
impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = text.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&text[start..i]);
                start = i;
            }
        }
        terms.push(&text[start..]);
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let (coef_txt, power) = match body.find('x') {
                None => (body, 0usize),
                Some(pos) => {
                    let coef = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else if let Some(e) = rest.strip_prefix('^') {
                        e.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?
                    } else {
                        return Err(Error::Parse(format!("unexpected text in {term:?}")));
                    };
                    (coef, power)
                }
            };
            let coef = if coef_txt.is_empty() {
                BigInt::one()
            } else {
                coef_txt
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += coef * sign;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn parse_and_display() {
        let l: IntPolynomial = "x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1".parse().unwrap();
        assert_eq!(l, p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]));
        assert_eq!(l.to_string().parse::<IntPolynomial>().unwrap(), l);
        assert_eq!("x-2".parse::<IntPolynomial>().unwrap(), p(&[-2, 1]));
        assert_eq!("-3*x^2+2x".parse::<IntPolynomial>().unwrap(), p(&[0, 2, -3]));
        assert_eq!("7".parse::<IntPolynomial>().unwrap(), p(&[7]));
        assert!("x^".parse::<IntPolynomial>().is_err());
        assert!("".parse::<IntPolynomial>().is_err());
        assert!("2y".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(p(&[-1, 0, 1]).div_exact(&a), Some(b.clone()));
        assert_eq!(p(&[1, 0, 1]).div_exact(&a), None);
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[1, 1]);
        let b = p(&[-2, 1]);
        let f = &(&a * &a) * &b; // (x+1)^2 (x-2)
        assert_eq!(f.gcd(&f.derivative()), a);
        assert_eq!(f.squarefree_part(), &a * &b);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(b.clone(), 1), (a.clone(), 2)]);
        let g = &(&f.scale(&BigInt::from(6)) * &b.pow(2)) * &p(&[3, 1]).pow(4);
        let dec = g.squarefree_decomposition();
        let rebuilt = dec
            .iter()
            .fold(IntPolynomial::one(), |acc, (f, k)| &acc * &f.pow(*k as u32));
        assert_eq!(rebuilt.primitive(), g.primitive());
    }

    #[test]
    fn signs_at_rationals() {
        let f = p(&[-2, 0, 1]); // x^2 - 2
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(f.sign_at(&r(1, 1)), -1);
        assert_eq!(f.sign_at(&r(3, 2)), 1);
        assert_eq!(f.sign_at(&r(-3, 2)), 1);
        assert_eq!(p(&[-1, 2]).sign_at(&r(1, 2)), 0);
    }

    #[test]
    fn reciprocal_check() {
        assert!(p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]).is_reciprocal());
        assert!(p(&[1, 0, -1]).is_reciprocal());
        assert!(!p(&[-2, 1]).is_reciprocal());
        assert!(p(&[1, -3, 1]).is_reciprocal());
    }
}
