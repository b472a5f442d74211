//! Exact elimination: fraction-free determinants and Gauss–Jordan inverses.

use num::{BigInt, Integer, One, Signed, Zero};

use super::matrix::Matrix;
use super::rational::Rational;
use crate::{Error, Result};

/// Exact determinant.
///
/// Each row is scaled by the lcm of its denominators so the elimination runs
/// over `BigInt` with Bareiss' fraction-free update; every division in the
/// update is exact.
pub fn det(a: &Matrix) -> Rational {
    let n = a.order();
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = a
        .rows()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            scale *= &l;
            row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
        })
        .collect();

    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = if sign < 0 { -&m[n - 1][n - 1] } else { m[n - 1][n - 1].clone() };
    Rational::new(d, scale)
}

/// Exact inverse by Gauss–Jordan elimination on `[A | I]`.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.order();
    let mut left: Vec<Vec<Rational>> = a.rows().map(<[Rational]>::to_vec).collect();
    let mut right: Vec<Vec<Rational>> = Matrix::identity(n).rows().map(<[Rational]>::to_vec).collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !left[r][col].is_zero()).ok_or(Error::Singular)?;
        left.swap(col, pivot);
        right.swap(col, pivot);

        let p = left[col][col].clone();
        for v in left[col].iter_mut().chain(right[col].iter_mut()) {
            *v /= &p;
        }
        for r in 0..n {
            if r == col || left[r][col].is_zero() {
                continue;
            }
            let f = left[r][col].clone();
            for c in 0..n {
                let l = &left[col][c] * &f;
                left[r][c] -= l;
                let rr = &right[col][c] * &f;
                right[r][c] -= rr;
            }
        }
    }
    Matrix::from_rows(right)
}

/// True when `det(a) == 0`.
pub fn is_singular(a: &Matrix) -> bool {
    det(a).is_zero()
}

/// Sign of the determinant: -1, 0 or 1.
pub fn det_sign(a: &Matrix) -> i32 {
    let d = det(a);
    if d.is_positive() {
        1
    } else if d.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{int, rat};

    #[test]
    fn identity_det() {
        assert_eq!(det(&Matrix::identity(4)), int(1));
    }

    #[test]
    fn golden_determinants() {
        let a = Matrix::from_ints(&[[1, -1, -1], [-2, 1, 1], [2, -2, -1]]);
        assert_eq!(det(&a), int(-1));
        let e1 =
            Matrix::from_ints(&[[4, 4, 8, 4, 4], [1, 2, 4, 2, 2], [1, 1, 4, 2, 2], [2, 2, 4, 4, 4], [2, 2, 4, 2, 4]]);
        assert_eq!(det(&e1), int(32));
    }

    #[test]
    fn rational_entries_and_pivoting() {
        let a = Matrix::from_rows(vec![vec![int(0), rat(1, 2)], vec![rat(2, 3), int(5)]]).unwrap();
        assert_eq!(det(&a), rat(-1, 3));
        assert_eq!(det(&Matrix::from_ints(&[[1, 2], [2, 4]])), int(0));
    }

    #[test]
    fn golden_inverses() {
        let a = Matrix::from_ints(&[[1, -1, -1], [-2, 1, 1], [2, -2, -1]]);
        assert_eq!(inverse(&a).unwrap(), Matrix::from_ints(&[[-1, -1, 0], [0, -1, -1], [-2, 0, 1]]));
        let c = Matrix::from_ints(&[[1, -1, -1], [-2, 1, 1], [2, 2, -1]]);
        let expect = Matrix::from_ints(&[[-3, -3, 0], [0, 1, 1], [-6, -4, -1]]).scale(&rat(1, 3));
        assert_eq!(inverse(&c).unwrap(), expect);
        assert!(inverse(&Matrix::identity(3)).unwrap().is_identity());
    }

    #[test]
    fn singular_inverse_errors() {
        assert_eq!(inverse(&Matrix::from_ints(&[[1, 2], [2, 4]])), Err(Error::Singular));
        assert_eq!(inverse(&Matrix::zeros(3)), Err(Error::Singular));
    }
}
