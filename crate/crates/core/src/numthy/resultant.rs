//! Resultants of bivariate integer polynomials via Sylvester matrices and
//! fraction-free (Bareiss) determinants over `Z[x]`.

use super::IntPolynomial;

/// Polynomial in `y` whose coefficients are integer polynomials in `x`;
/// `coeffs[k]` multiplies `y^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePolynomial {
    coeffs: Vec<IntPolynomial>,
}

impl BivariatePolynomial {
    pub fn new(mut coeffs: Vec<IntPolynomial>) -> Self {
        while coeffs.last().is_some_and(IntPolynomial::is_zero) {
            coeffs.pop();
        }
        BivariatePolynomial { coeffs }
    }

    /// Lifts a polynomial in `y` with constant coefficients.
    pub fn from_y(p: &IntPolynomial) -> Self {
        Self::new(p.coeffs().iter().map(|c| IntPolynomial::constant(c.clone())).collect())
    }

    /// Lifts a polynomial in `x` (degree 0 in `y`).
    pub fn from_x(p: &IntPolynomial) -> Self {
        Self::new(vec![p.clone()])
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[IntPolynomial] {
        &self.coeffs
    }

    /// The polynomial in `x` obtained by substituting an integer for `y`.
    pub fn eval_y(&self, y: i64) -> IntPolynomial {
        let yb = IntPolynomial::constant(y.into());
        self.coeffs
            .iter()
            .rev()
            .fold(IntPolynomial::zero(), |acc, c| &(&acc * &yb) + c)
    }
}

/// `Res_y(p, q)` as a polynomial in `x`: the determinant of the Sylvester
/// matrix of `p` and `q` viewed as polynomials in `y`.
pub fn resultant(p: &BivariatePolynomial, q: &BivariatePolynomial) -> IntPolynomial {
    let (m, n) = match (p.degree_y(), q.degree_y()) {
        (Some(m), Some(n)) => (m, n),
        _ => return IntPolynomial::zero(),
    };
    if m == 0 && n == 0 {
        return IntPolynomial::one();
    }
    let size = m + n;
    let mut mat = vec![vec![IntPolynomial::zero(); size]; size];
    // n shifted copies of p, then m shifted copies of q; highest power first
    for r in 0..n {
        for k in 0..=m {
            mat[r][r + m - k] = p.coeffs[k].clone();
        }
    }
    for r in 0..m {
        for k in 0..=n {
            mat[n + r][r + n - k] = q.coeffs[k].clone();
        }
    }
    bareiss_det(mat)
}

/// Determinant over `Z[x]` by Bareiss elimination; every division is exact.
pub fn bareiss_det(mut a: Vec<Vec<IntPolynomial>>) -> IntPolynomial {
    let n = a.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut negate = false;
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return IntPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn substitution_resultant() {
        // Res_y(x - y, y - 3) = lc(f) * g(x) = -(x - 3): x - 3 up to the
        // Sylvester sign convention
        let f = BivariatePolynomial::new(vec![p(&[0, 1]), p(&[-1])]);
        let g = BivariatePolynomial::from_y(&p(&[-3, 1]));
        assert_eq!(resultant(&f, &g), p(&[3, -1]));
        // swapping the arguments multiplies by (-1)^(deg f * deg g)
        assert_eq!(resultant(&g, &f), p(&[-3, 1]));
    }

    #[test]
    fn constant_determinants() {
        let m = vec![
            vec![p(&[2]), p(&[1]), p(&[0])],
            vec![p(&[0]), p(&[0]), p(&[3])],
            vec![p(&[1]), p(&[4]), p(&[5])],
        ];
        // 2*(0*5 - 3*4) - 1*(0*5 - 3*1) + 0 = -24 + 3 = -21
        assert_eq!(bareiss_det(m), p(&[-21]));
    }
}
