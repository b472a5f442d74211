//! Z-matrix taxonomy: M, N, N0, F0 and the `L_s` index.
//!
//! Every predicate is decided from exact principal minors. A Z-matrix
//! `tI - B'` (with `B'` a principal submatrix of `B >= 0`) is a possibly
//! singular M-matrix iff all of its principal minors are `>= 0`, which is the
//! same as `t >= rho(B')`. Hence `rho_s(B) <= t` iff every principal minor of
//! order `<= s` is nonnegative, and the `L_s` index is one less than the
//! smallest order carrying a negative principal minor. None of this depends
//! on the chosen `t`.

use num::{One, Signed, Zero};

use crate::graph::{digraph_of, is_irreducible};
use crate::matcore::{det, int, IndexSet, Matrix, Rational};
use crate::{Error, Result};

/// Default bound on the order for exhaustive minor enumeration.
pub const DEFAULT_ORDER_CAP: usize = 12;

/// Full taxonomy verdict for one matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub order: usize,
    pub is_z: bool,
    pub is_nonsingular: bool,
    pub determinant: Rational,
    pub irreducible: bool,
    pub is_m: bool,
    pub is_nonsingular_m: bool,
    pub is_n: bool,
    pub is_n0: bool,
    pub is_f0: bool,
    /// `s` with `A in L_s`; `None` for matrices that are not Z-matrices.
    pub l_index: Option<usize>,
}

/// `A = tI - B` with `B >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZRepresentation {
    pub t: Rational,
    pub b: Matrix,
}

impl ZRepresentation {
    pub fn reconstruct(&self) -> Matrix {
        &Matrix::identity(self.b.order()).scale(&self.t) - &self.b
    }
}

/// Approximate `rho_r(B)` together with the bracket of the maximizing submatrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerronEstimate {
    /// Midpoint of the final bracket; within `tol / 2` of the true value.
    pub value: Rational,
    /// `rho(B') > lower` unless `lower == upper == 0`.
    pub lower: Rational,
    /// `rho(B') <= upper`.
    pub upper: Rational,
    /// The principal submatrix `B'` attaining the maximum.
    pub argmax: IndexSet,
}

/// Off-diagonal entries all `<= 0`.
pub fn is_z(a: &Matrix) -> bool {
    a.off_diagonal().all(|(_, v)| !v.is_positive())
}

/// Splits a Z-matrix as `tI - B`.
pub fn z_decompose(a: &Matrix, t: &Rational) -> Result<ZRepresentation> {
    if !is_z(a) {
        return Err(Error::NotZMatrix);
    }
    if let Some(i) = a.diagonal().position(|d| d > t) {
        return Err(Error::TTooSmall { index: i + 1 });
    }
    let b = &Matrix::identity(a.order()).scale(t) - a;
    Ok(ZRepresentation { t: t.clone(), b })
}

/// All principal minors of a matrix, indexed by subset bitmask. Slot 0 is the
/// empty minor (1).
#[derive(Debug, Clone)]
pub(crate) struct PrincipalMinors {
    n: usize,
    by_mask: Vec<Rational>,
}

impl PrincipalMinors {
    pub(crate) fn compute(a: &Matrix) -> Self {
        let n = a.order();
        let mut by_mask = Vec::with_capacity(1 << n);
        by_mask.push(Rational::one());
        for mask in 1u64..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
            by_mask.push(det(&a.select(&idx, &idx)));
        }
        Self { n, by_mask }
    }

    fn iter_order(&self, max_order: usize) -> impl Iterator<Item = (u32, &Rational)> {
        self.by_mask
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, v)| ((m as u64).count_ones(), v))
            .filter(move |(k, _)| *k as usize <= max_order)
    }

    fn all_positive_up_to(&self, k: usize) -> bool {
        self.iter_order(k).all(|(_, v)| v.is_positive())
    }

    fn all_nonneg_up_to(&self, k: usize) -> bool {
        self.iter_order(k).all(|(_, v)| !v.is_negative())
    }

    fn some_negative_of_order(&self, k: usize) -> bool {
        self.iter_order(k).any(|(o, v)| o as usize == k && v.is_negative())
    }

    fn det(&self) -> &Rational {
        &self.by_mask[(1 << self.n) - 1]
    }

    fn min_negative_order(&self) -> Option<usize> {
        self.iter_order(self.n).filter(|(_, v)| v.is_negative()).map(|(o, _)| o as usize).min()
    }
}

fn all_principal_minors_nonneg(a: &Matrix) -> bool {
    let n = a.order();
    (1u64..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
        !det(&a.select(&idx, &idx)).is_negative()
    })
}

/// Minor-enumeration front end with a configurable order cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classifier {
    cap: usize,
}

impl Default for Classifier {
    fn default() -> Self {
        Self { cap: DEFAULT_ORDER_CAP }
    }
}

impl Classifier {
    /// The cap is clamped to 30 so subset masks stay addressable.
    pub fn with_cap(cap: usize) -> Self {
        Self { cap: cap.min(30) }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::OrderCapExceeded { n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    fn minors(&self, a: &Matrix) -> Result<PrincipalMinors> {
        self.check(a.order())?;
        Ok(PrincipalMinors::compute(a))
    }

    /// Z-matrix whose principal minors are all positive.
    pub fn is_nonsingular_m(&self, a: &Matrix) -> Result<bool> {
        self.check(a.order())?;
        Ok(is_z(a) && self.minors(a)?.all_positive_up_to(a.order()))
    }

    /// Possibly singular M-matrix: Z with all principal minors `>= 0`.
    pub fn is_m(&self, a: &Matrix) -> Result<bool> {
        self.check(a.order())?;
        Ok(is_z(a) && self.minors(a)?.all_nonneg_up_to(a.order()))
    }

    /// N-matrix: Z, `n >= 2`, proper principal minors positive, `det < 0`.
    pub fn is_n(&self, a: &Matrix) -> Result<bool> {
        self.check(a.order())?;
        if a.order() < 2 || !is_z(a) {
            return Ok(false);
        }
        let m = self.minors(a)?;
        Ok(m.all_positive_up_to(a.order() - 1) && m.det().is_negative())
    }

    /// N0-matrix: Z, proper principal minors `>= 0`, `det < 0`.
    pub fn is_n0(&self, a: &Matrix) -> Result<bool> {
        self.check(a.order())?;
        if !is_z(a) {
            return Ok(false);
        }
        let m = self.minors(a)?;
        Ok(m.all_nonneg_up_to(a.order() - 1) && m.det().is_negative())
    }

    /// F0-matrix: `n >= 3`, Z, principal submatrices of order `<= n - 2` are
    /// M-matrices and some order `n - 1` principal submatrix is N0.
    pub fn is_f0(&self, a: &Matrix) -> Result<bool> {
        let n = a.order();
        if n < 3 {
            return Err(Error::OrderTooSmall { n, min: 3 });
        }
        self.check(n)?;
        if !is_z(a) {
            return Ok(false);
        }
        let m = self.minors(a)?;
        Ok(Self::f0_from(&m))
    }

    fn f0_from(m: &PrincipalMinors) -> bool {
        m.n >= 3 && m.all_nonneg_up_to(m.n - 2) && m.some_negative_of_order(m.n - 1)
    }

    /// `s` such that `A in L_s`.
    pub fn l_index(&self, a: &Matrix) -> Result<usize> {
        if !is_z(a) {
            return Err(Error::NotZMatrix);
        }
        let m = self.minors(a)?;
        Ok(m.min_negative_order().map_or(a.order(), |k| k - 1))
    }

    /// `rho_r(B)` for `B >= 0`, by bisection on `t` over every order-`r`
    /// principal submatrix `B'` with the test "`tI - B'` has no negative
    /// principal minor".
    pub fn perron_r(&self, b: &Matrix, r: usize, tol: &Rational) -> Result<PerronEstimate> {
        let n = b.order();
        if !b.is_nonnegative() {
            return Err(Error::NotNonnegative);
        }
        if r == 0 || r > n {
            return Err(Error::InvalidArgument(format!("r = {r} outside 1..={n}")));
        }
        if !tol.is_positive() {
            return Err(Error::InvalidArgument("tolerance must be positive".into()));
        }
        self.check(n)?;

        let mut best: Option<PerronEstimate> = None;
        for mask in 1u64..(1 << n) {
            if mask.count_ones() as usize != r {
                continue;
            }
            let set = IndexSet::from_mask(n, mask).expect("nonempty mask");
            let sub = b.select(&set.zero_based(), &set.zero_based());
            let (lower, upper) = spectral_bracket(&sub, tol);
            let value = (&lower + &upper) / int(2);
            if best.as_ref().is_none_or(|e| value > e.value) {
                best = Some(PerronEstimate { value, lower, upper, argmax: set });
            }
        }
        Ok(best.expect("at least one submatrix of order r"))
    }

    /// Fills every field of a [`ClassReport`]. Non-Z input gets its
    /// determinant and irreducibility; the taxonomy flags stay false.
    pub fn classify(&self, a: &Matrix) -> Result<ClassReport> {
        let n = a.order();
        let determinant = det(a);
        let mut report = ClassReport {
            order: n,
            is_z: is_z(a),
            is_nonsingular: !determinant.is_zero(),
            determinant,
            irreducible: is_irreducible(&digraph_of(a)),
            is_m: false,
            is_nonsingular_m: false,
            is_n: false,
            is_n0: false,
            is_f0: false,
            l_index: None,
        };
        if !report.is_z {
            return Ok(report);
        }
        let m = self.minors(a)?;
        report.is_m = m.all_nonneg_up_to(n);
        report.is_nonsingular_m = m.all_positive_up_to(n);
        report.is_n = n >= 2 && m.all_positive_up_to(n - 1) && m.det().is_negative();
        report.is_n0 = m.all_nonneg_up_to(n - 1) && m.det().is_negative();
        report.is_f0 = Self::f0_from(&m);
        report.l_index = Some(m.min_negative_order().map_or(n, |k| k - 1));
        Ok(report)
    }
}

/// Returns `(lower, upper)` with `rho(B')` in `(lower, upper]` and
/// `upper - lower < tol`, or `(0, 0)` when `rho(B') = 0`.
fn spectral_bracket(sub: &Matrix, tol: &Rational) -> (Rational, Rational) {
    let k = sub.order();
    let eye = Matrix::identity(k);
    let dominated = |t: &Rational| all_principal_minors_nonneg(&(&eye.scale(t) - sub));

    let zero = Rational::zero();
    if dominated(&zero) {
        return (zero.clone(), zero);
    }
    let mut lo = zero;
    let mut hi = sub.rows().map(|row| row.iter().sum::<Rational>()).max().expect("k >= 1");
    while &hi - &lo >= *tol {
        let mid = (&lo + &hi) / int(2);
        if dominated(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

pub fn is_nonsingular_m(a: &Matrix) -> Result<bool> {
    Classifier::default().is_nonsingular_m(a)
}

pub fn is_m(a: &Matrix) -> Result<bool> {
    Classifier::default().is_m(a)
}

pub fn is_n(a: &Matrix) -> Result<bool> {
    Classifier::default().is_n(a)
}

pub fn is_n0(a: &Matrix) -> Result<bool> {
    Classifier::default().is_n0(a)
}

pub fn is_f0(a: &Matrix) -> Result<bool> {
    Classifier::default().is_f0(a)
}

pub fn l_index(a: &Matrix) -> Result<usize> {
    Classifier::default().l_index(a)
}

/// Midpoint estimate of `rho_r(B)`; see [`Classifier::perron_r`].
pub fn perron_r(b: &Matrix, r: usize, tol: &Rational) -> Result<Rational> {
    Ok(Classifier::default().perron_r(b, r, tol)?.value)
}

pub fn classify(a: &Matrix) -> Result<ClassReport> {
    Classifier::default().classify(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{inverse, rat};

    fn scaled(rows: &[[i64; 4]], s: Rational) -> Matrix {
        Matrix::from_ints(rows).scale(&s)
    }

    fn bdsw_n4() -> Matrix {
        scaled(&[[1, -2, 0, 0], [0, 2, -4, 0], [0, 0, 2, -2], [-1, 0, 0, 1]], rat(1, 6))
    }

    fn type_d(a: &[i64]) -> Matrix {
        Matrix::from_fn(a.len(), |i, j| int(a[i.min(j)]))
    }

    #[test]
    fn z_predicate() {
        assert!(is_z(&Matrix::identity(3)));
        assert!(is_z(&Matrix::from_ints(&[[1, -1], [-2, 3]])));
        assert!(!is_z(&Matrix::from_ints(&[[1, -1, -1], [-2, 1, 1], [2, 2, -1]])));
    }

    #[test]
    fn decomposition() {
        let r = z_decompose(&Matrix::identity(2), &int(1)).unwrap();
        assert_eq!(r.b, Matrix::zeros(2));
        let a = Matrix::from_ints(&[[1, -1], [-2, 3]]);
        let r = z_decompose(&a, &int(3)).unwrap();
        assert_eq!(r.b, Matrix::from_ints(&[[2, 1], [2, 0]]));
        assert_eq!(r.reconstruct(), a);
        assert_eq!(z_decompose(&a, &int(0)), Err(Error::TTooSmall { index: 1 }));
        let c = Matrix::from_ints(&[[1, 1], [0, 1]]);
        assert_eq!(z_decompose(&c, &int(5)), Err(Error::NotZMatrix));
    }

    #[test]
    fn nonsingular_m_examples() {
        assert!(is_nonsingular_m(&Matrix::identity(4)).unwrap());
        let m5 = Matrix::from_ints(&[
            [2, -4, 0, 0, 0],
            [0, 4, -4, 0, 0],
            [0, 0, 2, -1, 0],
            [0, 0, 0, 2, -2],
            [-1, 0, 0, 0, 2],
        ])
        .scale(&rat(1, 4));
        assert!(is_nonsingular_m(&m5).unwrap());
        assert!(!is_nonsingular_m(&bdsw_n4()).unwrap());
    }

    #[test]
    fn m_examples() {
        assert!(is_m(&Matrix::zeros(3)).unwrap());
        assert!(is_m(&Matrix::from_ints(&[[1, -1], [-1, 1]])).unwrap());
        assert!(!is_m(&Matrix::from_ints(&[[0, -1], [-1, 0]])).unwrap());
        assert!(is_m(&Matrix::from_ints(&[[0]])).unwrap());
        assert!(!is_m(&Matrix::from_ints(&[[-1]])).unwrap());
    }

    #[test]
    fn n_examples() {
        assert!(is_n(&bdsw_n4()).unwrap());
        assert!(!is_n(&Matrix::identity(3)).unwrap());
        let not_n = scaled(&[[-2, 2, 0, 0], [0, -2, 2, 0], [0, 0, -2, 2], [1, 0, 0, -2]], rat(1, 2));
        assert!(!is_n(&not_n).unwrap());
        assert!(!is_n(&Matrix::from_ints(&[[-1]])).unwrap());
    }

    #[test]
    fn n0_examples() {
        assert!(is_n0(&bdsw_n4()).unwrap());
        assert!(!is_n0(&Matrix::identity(3)).unwrap());
        let inv = inverse(&type_d(&[-3, -2, -1, 0])).unwrap();
        assert!(is_n0(&inv).unwrap());
        assert!(!is_n(&inv).unwrap());
    }

    #[test]
    fn f0_examples() {
        let inv = inverse(&type_d(&[-2, -1, 0, 1])).unwrap();
        assert!(is_f0(&inv).unwrap());
        assert_eq!(l_index(&inv).unwrap(), 2);
        assert!(!is_f0(&Matrix::identity(3)).unwrap());
        assert!(!is_f0(&bdsw_n4()).unwrap());
        assert_eq!(is_f0(&Matrix::identity(2)), Err(Error::OrderTooSmall { n: 2, min: 3 }));
    }

    #[test]
    fn l_index_examples() {
        assert_eq!(l_index(&Matrix::identity(5)).unwrap(), 5);
        assert_eq!(l_index(&bdsw_n4()).unwrap(), 3);
        assert_eq!(l_index(&Matrix::from_ints(&[[1, 1], [1, 1]])), Err(Error::NotZMatrix));
    }

    #[test]
    fn order_cap() {
        let big = Matrix::identity(13);
        assert_eq!(is_m(&big), Err(Error::OrderCapExceeded { n: 13, cap: 12 }));
        assert!(Classifier::with_cap(3).is_m(&Matrix::identity(4)).is_err());
    }

    #[test]
    fn perron_examples() {
        let tol = rat(1, 1_000_000_000);
        let v = perron_r(&Matrix::from_ints(&[[0, 1], [1, 0]]), 2, &tol).unwrap();
        assert!((&v - int(1)).abs() < tol);
        let ones = Matrix::from_ints(&[[1, 1, 1], [1, 1, 1], [1, 1, 1]]);
        let v = perron_r(&ones, 3, &tol).unwrap();
        assert!((&v - int(3)).abs() < tol);
        let v = perron_r(&Matrix::from_ints(&[[2]]), 1, &tol).unwrap();
        assert!((&v - int(2)).abs() < tol);
        assert_eq!(perron_r(&Matrix::zeros(2), 1, &tol).unwrap(), int(0));
        assert!(perron_r(&Matrix::from_ints(&[[-1]]), 1, &tol).is_err());
        assert!(perron_r(&ones, 4, &tol).is_err());
    }

    #[test]
    fn classify_examples() {
        let r = classify(&Matrix::identity(3)).unwrap();
        assert!(r.is_z && r.is_nonsingular_m && r.is_m && !r.irreducible);
        assert_eq!(r.l_index, Some(3));
        let r = classify(&bdsw_n4()).unwrap();
        assert!(r.is_n && r.is_n0 && !r.is_f0 && r.irreducible);
        assert_eq!(r.l_index, Some(3));
        let not_z = Matrix::from_ints(&[
            [-2, 2, 0, 0, 0],
            [0, -2, 2, 0, 0],
            [0, 0, -2, 2, 0],
            [0, 0, 0, -2, 2],
            [1, 0, 0, 0, -2],
        ])
        .scale(&rat(1, 2));
        let r = classify(&not_z).unwrap();
        assert!(!r.is_z && !r.is_m && !r.is_n && r.l_index.is_none());
        assert!(r.is_nonsingular && r.irreducible);
    }
}
