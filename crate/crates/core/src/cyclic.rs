//! Inverse cyclic matrices and bi-diagonal south-west (bdsw) matrices.
//!
//! A matrix with nonzero diagonal is *inverse cyclic* when each entry is fixed
//! by the diagonal, the super-diagonal and the `(n, 1)` corner through the
//! relations checked in [`is_inverse_cyclic`]. A *bdsw* matrix has nonzero
//! diagonal, super-diagonal and corner and zeros elsewhere. A nonsingular
//! matrix is full and inverse cyclic exactly when its inverse is bdsw.

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::matcore::{det, inverse, pow, Matrix, Rational};
use crate::zclass::Classifier;
use crate::{Error, Result};

/// Diagonal product `d` and cyclic product `c = a_12 a_23 ... a_(n-1)n a_n1`.
///
/// For `n = 1` there is no off-diagonal cycle and `c` is taken to be 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicProducts {
    pub d: Rational,
    pub c: Rational,
}

impl CyclicProducts {
    pub fn d_minus_c(&self) -> Rational {
        &self.d - &self.c
    }
}

/// Outcome of the sign/parity test for an inverse Z-matrix with bdsw inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    /// `A^{-1}` is a bdsw nonsingular M-matrix.
    InverseM,
    /// `A^{-1}` is a bdsw N-matrix.
    InverseN,
    Neither,
}

/// Index of the successor of `k` on the cycle `1 -> 2 -> ... -> n -> 1` (0-based).
fn next(k: usize, n: usize) -> usize {
    (k + 1) % n
}

/// No zero entries.
pub fn is_full(a: &Matrix) -> bool {
    a.iter().all(|v| !v.is_zero())
}

/// Nonzero diagonal, super-diagonal and `(n, 1)` corner; zeros elsewhere.
/// Requires `n >= 2`; for `n = 2` the pattern is all four entries nonzero.
pub fn is_bdsw(a: &Matrix) -> bool {
    let n = a.order();
    if n < 2 {
        return false;
    }
    (0..n).all(|i| {
        (0..n).all(|j| {
            let on_pattern = i == j || j == i + 1 || (i == n - 1 && j == 0);
            on_pattern != a[(i, j)].is_zero()
        })
    })
}

/// Checks the three relation families directly, dividing only by diagonal
/// entries:
///
/// * `a_ij = a_ik a_kj / a_kk` for `i < k < j`,
/// * `a_ij = a_in a_nj / a_nn` for `j < i != n`,
/// * `a_nj = a_n1 a_1j / a_11` for `j < n`.
pub fn is_inverse_cyclic(a: &Matrix) -> bool {
    let n = a.order();
    if a.diagonal().any(Zero::is_zero) {
        return false;
    }
    let last = n - 1;
    for i in 0..n {
        for j in 0..n {
            let ok = if i < j {
                (i + 1..j).all(|k| a[(i, j)] == &a[(i, k)] * &a[(k, j)] / &a[(k, k)])
            } else if j < i && i != last {
                a[(i, j)] == &a[(i, last)] * &a[(last, j)] / &a[(last, last)]
            } else if j < i {
                a[(last, j)] == &a[(last, 0)] * &a[(0, j)] / &a[(0, 0)]
            } else {
                true
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Value of entry `(i, j)` (0-based, `i != j`) predicted by walking the cycle
/// from `i` to `j`: product of the cycle edges traversed over the product of
/// the interior diagonal entries.
pub(crate) fn cycle_walk_value(diag: &[Rational], edge: impl Fn(usize) -> Rational, i: usize, j: usize) -> Rational {
    let n = diag.len();
    let mut num = Rational::one();
    let mut den = Rational::one();
    let mut k = i;
    loop {
        num *= edge(k);
        k = next(k, n);
        if k == j {
            break;
        }
        den *= &diag[k];
    }
    num / den
}

/// The product form: every off-diagonal entry equals its cycle-walk value.
/// Agrees with [`is_inverse_cyclic`].
pub fn is_inverse_cyclic_product_form(a: &Matrix) -> bool {
    let n = a.order();
    let diag: Vec<Rational> = a.diagonal().cloned().collect();
    if diag.iter().any(Zero::is_zero) {
        return false;
    }
    let edge = |k: usize| a[(k, next(k, n))].clone();
    a.off_diagonal().all(|((i, j), v)| *v == cycle_walk_value(&diag, edge, i, j))
}

pub fn cyclic_products(a: &Matrix) -> CyclicProducts {
    let n = a.order();
    let d = a.diagonal().product();
    let c = if n == 1 { Rational::zero() } else { (0..n).map(|k| a[(k, next(k, n))].clone()).product() };
    CyclicProducts { d, c }
}

/// `det A = (d - c)^(n-1) / d^(n-2)` for inverse cyclic `A`.
pub fn cyclic_det(a: &Matrix) -> Result<Rational> {
    if !is_inverse_cyclic(a) {
        return Err(Error::NotInverseCyclic);
    }
    let n = a.order() as i64;
    let p = cyclic_products(a);
    Ok(pow(&p.d_minus_c(), n - 1)? / pow(&p.d, n - 2)?)
}

/// Closed-form inverse of a nonsingular inverse cyclic matrix. The result is
/// bdsw-shaped (zero wherever a super-diagonal or corner parameter of `A`
/// is zero) and `A * B = I` is verified before returning.
pub fn cyclic_inverse(a: &Matrix) -> Result<Matrix> {
    if !is_inverse_cyclic(a) {
        return Err(Error::NotInverseCyclic);
    }
    let n = a.order();
    let p = cyclic_products(a);
    let dc = p.d_minus_c();
    if dc.is_zero() {
        return Err(Error::Singular);
    }
    let diag_product_except =
        |skip: &[usize]| -> Rational { (0..n).filter(|k| !skip.contains(k)).map(|k| a[(k, k)].clone()).product() };
    let b = Matrix::from_fn(n, |i, j| {
        if i == j {
            diag_product_except(&[i]) / &dc
        } else if n >= 2 && j == i + 1 {
            -&a[(i, j)] * diag_product_except(&[i, j]) / &dc
        } else if n >= 2 && i == n - 1 && j == 0 {
            -&a[(i, j)] * diag_product_except(&[0, n - 1]) / &dc
        } else {
            Rational::zero()
        }
    });
    if !(a * &b).is_identity() {
        return Err(Error::Internal("closed-form inverse failed A * B = I".into()));
    }
    Ok(b)
}

/// `[is_full(A) && is_inverse_cyclic(A)] == is_bdsw(A^{-1})`; must hold for
/// every nonsingular `A`.
pub fn roundtrip_check(a: &Matrix) -> Result<bool> {
    let b = inverse(a)?;
    Ok((is_full(a) && is_inverse_cyclic(a)) == is_bdsw(&b))
}

/// Sign/parity classification:
///
/// * `InverseM` iff `A > 0`, inverse cyclic and `d - c > 0`;
/// * `InverseN` iff `A < 0`, inverse cyclic and `d - c < 0` (even `n`) or
///   `d - c > 0` (odd `n`);
/// * `Neither` otherwise, including every `1 x 1` input.
pub fn bdsw_sign_classify(a: &Matrix) -> Verdict {
    let n = a.order();
    if n < 2 || !is_inverse_cyclic(a) {
        return Verdict::Neither;
    }
    let dc = cyclic_products(a).d_minus_c();
    if a.is_positive() && dc.is_positive() {
        Verdict::InverseM
    } else if a.is_negative() && ((n.is_multiple_of(2) && dc.is_negative()) || (n % 2 == 1 && dc.is_positive())) {
        Verdict::InverseN
    } else {
        Verdict::Neither
    }
}

/// Recomputes the verdict from first principles: inverts `A` and asks the
/// Z-class predicates whether `A^{-1}` is a bdsw M- or N-matrix.
pub fn verdict_from_inverse(a: &Matrix, classifier: &Classifier) -> Result<Verdict> {
    if det(a).is_zero() {
        return Ok(Verdict::Neither);
    }
    let b = inverse(a)?;
    if !is_bdsw(&b) {
        return Ok(Verdict::Neither);
    }
    if classifier.is_nonsingular_m(&b)? {
        Ok(Verdict::InverseM)
    } else if classifier.is_n(&b)? {
        Ok(Verdict::InverseN)
    } else {
        Ok(Verdict::Neither)
    }
}

/// Column reduction `c^k = a^k - (a_(k-1)k / a_(k-1)(k-1)) a^(k-1)`,
/// `k = 2..n`, applied with the original columns of `A` (test-only probe).
#[cfg(test)]
pub(crate) fn reduce_columns(a: &Matrix) -> Matrix {
    let n = a.order();
    Matrix::from_fn(n, |i, k| {
        if k == 0 {
            a[(i, 0)].clone()
        } else {
            &a[(i, k)] - &a[(k - 1, k)] / &a[(k - 1, k - 1)] * &a[(i, k - 1)]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{int, rat};

    pub(crate) fn ex3() -> Matrix {
        Matrix::from_ints(&[[1, -1, -1], [-2, 1, 1], [2, -2, -1]])
    }

    fn ex_c() -> Matrix {
        Matrix::from_ints(&[[1, -1, -1], [-2, 1, 1], [2, 2, -1]])
    }

    fn ex4() -> Matrix {
        Matrix::from_ints(&[[2, -2, -4, 0], [0, 1, 2, 0], [0, 0, -2, 0], [2, -2, -4, 1]])
    }

    fn ex5_pos() -> Matrix {
        Matrix::from_ints(&[[4, 4, 8, 4, 4], [1, 2, 4, 2, 2], [1, 1, 4, 2, 2], [2, 2, 4, 4, 4], [2, 2, 4, 2, 4]])
    }

    #[test]
    fn fullness() {
        assert!(is_full(&Matrix::from_ints(&[[1, 1, 1], [1, 1, 1], [1, 1, 1]])));
        assert!(!is_full(&Matrix::identity(3)));
        assert!(!is_full(&ex4()));
    }

    #[test]
    fn bdsw_pattern() {
        assert!(is_bdsw(&Matrix::from_ints(&[[-1, -1, 0], [0, -1, -1], [-2, 0, 1]])));
        let c_inv = Matrix::from_ints(&[[-3, -3, 0], [0, 1, 1], [-6, -4, -1]]).scale(&rat(1, 3));
        assert!(!is_bdsw(&c_inv));
        assert!(!is_bdsw(&Matrix::identity(3)));
        assert!(is_bdsw(&Matrix::from_ints(&[[1, 1], [1, 1]])));
        assert!(!is_bdsw(&Matrix::from_ints(&[[1, 1], [0, 1]])));
        assert!(!is_bdsw(&Matrix::from_ints(&[[3]])));
    }

    #[test]
    fn inverse_cyclic_property() {
        assert!(is_inverse_cyclic(&ex4()));
        assert!(is_inverse_cyclic(&ex3()));
        assert!(!is_inverse_cyclic(&ex_c()));
        assert!(is_inverse_cyclic(&Matrix::identity(4)));
        assert!(!is_inverse_cyclic(&Matrix::zeros(2)));
        for m in [ex3(), ex_c(), ex4(), ex5_pos(), Matrix::identity(3)] {
            assert_eq!(is_inverse_cyclic(&m), is_inverse_cyclic_product_form(&m));
        }
    }

    #[test]
    fn products() {
        assert_eq!(cyclic_products(&ex3()), CyclicProducts { d: int(-1), c: int(-2) });
        assert_eq!(cyclic_products(&ex5_pos()), CyclicProducts { d: int(512), c: int(256) });
        assert_eq!(cyclic_products(&Matrix::identity(3)), CyclicProducts { d: int(1), c: int(0) });
    }

    #[test]
    fn determinant_formula() {
        assert_eq!(cyclic_det(&ex3()).unwrap(), int(-1));
        assert_eq!(cyclic_det(&ex4()).unwrap(), int(-4));
        assert_eq!(cyclic_det(&ex5_pos()).unwrap(), int(32));
        assert_eq!(cyclic_det(&ex_c()), Err(Error::NotInverseCyclic));
        assert_eq!(cyclic_det(&Matrix::from_ints(&[[7]])).unwrap(), int(7));
    }

    #[test]
    fn closed_form_inverse() {
        assert_eq!(cyclic_inverse(&ex3()).unwrap(), Matrix::from_ints(&[[-1, -1, 0], [0, -1, -1], [-2, 0, 1]]));
        let m5 = Matrix::from_ints(&[
            [2, -4, 0, 0, 0],
            [0, 4, -4, 0, 0],
            [0, 0, 2, -1, 0],
            [0, 0, 0, 2, -2],
            [-1, 0, 0, 0, 2],
        ])
        .scale(&rat(1, 4));
        assert_eq!(cyclic_inverse(&ex5_pos()).unwrap(), m5);
        let expect4 = Matrix::from_rows(vec![
            vec![rat(1, 2), int(1), int(0), int(0)],
            vec![int(0), int(1), int(1), int(0)],
            vec![int(0), int(0), rat(-1, 2), int(0)],
            vec![int(-1), int(0), int(0), int(1)],
        ])
        .unwrap();
        assert_eq!(cyclic_inverse(&ex4()).unwrap(), expect4);
        assert_eq!(cyclic_inverse(&Matrix::from_ints(&[[1, 1], [1, 1]])), Err(Error::Singular));
        assert_eq!(cyclic_inverse(&ex_c()), Err(Error::NotInverseCyclic));
    }

    #[test]
    fn roundtrip() {
        assert!(roundtrip_check(&ex3()).unwrap());
        assert!(roundtrip_check(&ex_c()).unwrap());
        assert!(roundtrip_check(&ex4()).unwrap());
        assert_eq!(roundtrip_check(&Matrix::zeros(2)), Err(Error::Singular));
    }

    #[test]
    fn sign_classification() {
        assert_eq!(bdsw_sign_classify(&ex5_pos()), Verdict::InverseM);
        let neg4 = Matrix::from_ints(&[[-2, -2, -4, -8], [-4, -1, -2, -4], [-2, -2, -1, -2], [-2, -2, -4, -2]]);
        assert_eq!(bdsw_sign_classify(&neg4), Verdict::InverseN);
        let parity4 = Matrix::from_ints(&[[-2, -2, -2, -2], [-1, -2, -2, -2], [-1, -1, -2, -2], [-1, -1, -1, -2]]);
        assert_eq!(bdsw_sign_classify(&parity4), Verdict::Neither);
        assert_eq!(bdsw_sign_classify(&Matrix::from_ints(&[[5]])), Verdict::Neither);
        let c = Classifier::default();
        for m in [ex5_pos(), neg4, parity4, ex3()] {
            assert_eq!(bdsw_sign_classify(&m), verdict_from_inverse(&m, &c).unwrap());
        }
    }

    #[test]
    fn column_reduction_is_lower_triangular() {
        for a in [ex3(), ex4(), ex5_pos()] {
            let n = a.order();
            let cm = reduce_columns(&a);
            let p = cyclic_products(&a);
            let ratio = p.d_minus_c() / &p.d;
            for i in 0..n {
                for j in i + 1..n {
                    assert!(cm[(i, j)].is_zero(), "C[{},{}] nonzero", i + 1, j + 1);
                }
            }
            assert_eq!(cm[(0, 0)], a[(0, 0)]);
            for i in 1..n {
                assert_eq!(cm[(i, i)], &ratio * &a[(i, i)]);
            }
        }
    }
}
