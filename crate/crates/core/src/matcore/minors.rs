//! Index sets, submatrices and minors.

use num::{One, Zero};

use super::elim::{det, inverse};
use super::matrix::Matrix;
use super::rational::Rational;
use crate::{Error, Result};

/// Strictly ascending nonempty subset of `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    base: usize,
    members: Vec<usize>,
}

impl IndexSet {
    /// Validates 1-based `members` against order `base`.
    pub fn new(base: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: Vec<usize> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::InvalidIndexSet("index set must be nonempty".into()));
        }
        if let Some(&m) = members.iter().find(|&&m| m == 0 || m > base) {
            return Err(Error::InvalidIndexSet(format!("index {m} outside 1..={base}")));
        }
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet("members must be strictly ascending".into()));
        }
        Ok(Self { base, members })
    }

    /// `{1, ..., n}`.
    pub fn all(n: usize) -> Self {
        Self { base: n, members: (1..=n).collect() }
    }

    /// Set whose bit `k` (0-based) selects index `k + 1`. `None` for an empty mask.
    pub fn from_mask(n: usize, mask: u64) -> Option<Self> {
        let members: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
        (!members.is_empty()).then_some(Self { base: n, members })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sorted complement in `{1, ..., n}`; `None` when the set is everything.
    pub fn complement(&self) -> Option<Self> {
        let rest: Vec<usize> = (1..=self.base).filter(|i| !self.members.contains(i)).collect();
        (!rest.is_empty()).then_some(Self { base: self.base, members: rest })
    }

    pub(crate) fn zero_based(&self) -> Vec<usize> {
        self.members.iter().map(|m| m - 1).collect()
    }
}

fn check_base(a: &Matrix, s: &IndexSet) -> Result<()> {
    if s.base != a.order() {
        return Err(Error::DimensionMismatch(format!("index set over {} does not match order {}", s.base, a.order())));
    }
    Ok(())
}

/// `A[rows | cols]`.
pub fn submatrix(a: &Matrix, rows: &IndexSet, cols: &IndexSet) -> Result<Matrix> {
    check_base(a, rows)?;
    check_base(a, cols)?;
    if rows.len() != cols.len() {
        return Err(Error::DimensionMismatch("row and column sets differ in size".into()));
    }
    Ok(a.select(&rows.zero_based(), &cols.zero_based()))
}

/// Principal submatrix `A[S]`.
pub fn principal_submatrix(a: &Matrix, s: &IndexSet) -> Result<Matrix> {
    submatrix(a, s, s)
}

/// `det A[S]`.
pub fn principal_minor(a: &Matrix, s: &IndexSet) -> Result<Rational> {
    Ok(det(&principal_submatrix(a, s)?))
}

/// Determinant over 0-based row/column selections; the empty minor is 1.
pub(crate) fn minor_of(a: &Matrix, rows: &[usize], cols: &[usize]) -> Rational {
    if rows.is_empty() {
        Rational::one()
    } else {
        det(&a.select(rows, cols))
    }
}

/// Checks the complementary-minor identity between `A` and `B = A^{-1}`:
/// `det B[alpha | beta] = gamma / det A * det A[beta' | alpha']` with
/// `gamma = (-1)^(sum alpha + sum beta)`.
pub fn complementary_minor_check(a: &Matrix, alpha: &IndexSet, beta: &IndexSet) -> Result<bool> {
    check_base(a, alpha)?;
    check_base(a, beta)?;
    if alpha.len() != beta.len() {
        return Err(Error::DimensionMismatch("|alpha| must equal |beta|".into()));
    }
    let det_a = det(a);
    if det_a.is_zero() {
        return Err(Error::Singular);
    }
    let b = inverse(a)?;
    let lhs = det(&submatrix(&b, alpha, beta)?);

    let exponent: usize = alpha.members().iter().chain(beta.members()).sum();
    let gamma = if exponent.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let comp = |s: &IndexSet| s.complement().map(|c| c.zero_based()).unwrap_or_default();
    let rhs = gamma / det_a * minor_of(a, &comp(beta), &comp(alpha));
    Ok(lhs == rhs)
}
