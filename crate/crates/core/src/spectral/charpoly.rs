//! Exact characteristic polynomials of integer matrices.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::numthy::IntPolynomial;

/// `det(xI - m)` by the Faddeev–LeVerrier recurrence over big integers.
///
/// Every division in the recurrence is exact, so no rationals are needed.
pub fn char_poly_exact(m: &[Vec<i64>]) -> IntPolynomial {
    let big: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    char_poly_big(&big)
}

pub fn char_poly_big(a: &[Vec<BigInt>]) -> IntPolynomial {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "matrix must be square");
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    // m holds M_k; start from M_0 = 0 so that M_1 = I.
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = mat_mul(a, &m);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -trace / BigInt::from(k);
    }
    IntPolynomial::new(coeffs)
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let p = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![BigInt::zero(); p]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..p {
                out[i][j] += aik * &b[k][j];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(
            char_poly_exact(&[vec![0, 1], vec![1, 0]]),
            IntPolynomial::from_i64(&[-1, 0, 1])
        );
        assert_eq!(char_poly_exact(&[vec![2]]), IntPolynomial::from_i64(&[-2, 1]));
        // D_4 star: x^4 - 3x^2
        let star = vec![
            vec![0, 1, 1, 1],
            vec![1, 0, 0, 0],
            vec![1, 0, 0, 0],
            vec![1, 0, 0, 0],
        ];
        assert_eq!(char_poly_exact(&star), IntPolynomial::from_i64(&[0, 0, -3, 0, 1]));
    }

    #[test]
    fn matches_cofactor_expansion() {
        // det(xI - A) at integer points vs a permutation-expansion oracle
        let a = vec![vec![1, -2, 3], vec![0, 4, -1], vec![5, 2, -3]];
        let cp = char_poly_exact(&a);
        for x in -3i64..=3 {
            let m: Vec<Vec<i64>> = (0..3)
                .map(|i| (0..3).map(|j| if i == j { x - a[i][j] } else { -a[i][j] }).collect())
                .collect();
            let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            assert_eq!(cp.eval_int(&x.into()), det.into());
        }
    }
}
