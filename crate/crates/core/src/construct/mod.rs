//! Generators for the constructive families: type-D matrices, parametric
//! inverse cyclic matrices, bdsw matrices and circulants `p(Z)`.

pub mod random;

use num::{Signed, Zero};

use crate::cyclic::{cycle_walk_value, is_bdsw};
use crate::matcore::{inverse, pow, Matrix, Rational};
use crate::zclass::{is_z, Classifier};
use crate::{Error, Result};

/// Strictly increasing `a_1 < a_2 < ... < a_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDParams {
    a: Vec<Rational>,
}

impl TypeDParams {
    pub fn new(a: Vec<Rational>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidArgument("type-D needs at least one parameter".into()));
        }
        if let Some(k) = a.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing { index: k + 2 });
        }
        Ok(Self { a })
    }

    pub fn values(&self) -> &[Rational] {
        &self.a
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Number of parameters `<= 0`.
    pub fn nonpositive_count(&self) -> usize {
        self.a.iter().filter(|v| !v.is_positive()).count()
    }

    /// The `L_s` index predicted for the inverse: `s - 1`, with `s = 0`
    /// mapping to `n`.
    pub fn expected_l_index(&self) -> usize {
        match self.nonpositive_count() {
            0 => self.len(),
            s => s - 1,
        }
    }
}

/// Free parameters of an inverse cyclic matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicParams {
    pub diag: Vec<Rational>,
    pub sup: Vec<Rational>,
    pub corner: Rational,
}

impl CyclicParams {
    pub fn new(diag: Vec<Rational>, sup: Vec<Rational>, corner: Rational) -> Result<Self> {
        if diag.is_empty() || sup.len() + 1 != diag.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} diagonal and {} super-diagonal parameters",
                diag.len(),
                sup.len()
            )));
        }
        if let Some(k) = diag.iter().position(Zero::is_zero) {
            return Err(Error::ZeroDiagonal { index: k + 1 });
        }
        if diag.len() == 1 && !corner.is_zero() {
            return Err(Error::InvalidArgument("a 1x1 matrix has no corner entry; pass 0".into()));
        }
        Ok(Self { diag, sup, corner })
    }

    /// Reads the diagonal, super-diagonal and `(n, 1)` entry of `a`.
    pub fn from_matrix(a: &Matrix) -> Result<Self> {
        let n = a.order();
        let diag = a.diagonal().cloned().collect();
        let sup = (0..n.saturating_sub(1)).map(|k| a[(k, k + 1)].clone()).collect();
        let corner = if n == 1 { Rational::zero() } else { a[(n - 1, 0)].clone() };
        Self::new(diag, sup, corner)
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    fn edge(&self, k: usize) -> Rational {
        if k + 1 < self.diag.len() {
            self.sup[k].clone()
        } else {
            self.corner.clone()
        }
    }
}

/// Coefficients `alpha_1..alpha_n` of `p(Z) = alpha_1 I + alpha_2 Z + ... + alpha_n Z^(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantParams {
    alpha: Vec<Rational>,
}

impl CirculantParams {
    pub fn new(alpha: Vec<Rational>) -> Result<Self> {
        if alpha.len() < 2 {
            return Err(Error::OrderTooSmall { n: alpha.len(), min: 2 });
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn order(&self) -> usize {
        self.alpha.len()
    }
}

/// Sign regime for [`circulant_conditions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignMode {
    Nonneg,
    Nonpos,
}

/// `a_ij = a_min(i, j)`.
pub fn type_d(p: &TypeDParams) -> Matrix {
    Matrix::from_fn(p.len(), |i, j| p.a[i.min(j)].clone())
}

/// Structure of the inverse of a type-D matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDReport {
    pub inverse: Matrix,
    pub tridiagonal: bool,
    pub z: bool,
    /// `L_s` index of the inverse, when it is a Z-matrix.
    pub l_index_of_inverse: Option<usize>,
    /// Count of nonpositive parameters.
    pub nonpositive_count: usize,
}

impl TypeDReport {
    /// Tridiagonal Z inverse whose index matches the parameter count.
    pub fn conforms(&self, p: &TypeDParams) -> bool {
        self.tridiagonal && self.z && self.l_index_of_inverse == Some(p.expected_l_index())
    }
}

pub fn type_d_verify(p: &TypeDParams, classifier: &Classifier) -> Result<TypeDReport> {
    if p.a[0].is_zero() {
        return Err(Error::ZeroA1);
    }
    let inv = inverse(&type_d(p))?;
    let z = is_z(&inv);
    let l_index_of_inverse = if z { Some(classifier.l_index(&inv)?) } else { None };
    Ok(TypeDReport {
        tridiagonal: is_tridiagonal(&inv),
        z,
        l_index_of_inverse,
        nonpositive_count: p.nonpositive_count(),
        inverse: inv,
    })
}

/// Fills every entry from the cycle parameters: the product of the cycle
/// edges from `i` to `j` over the interior diagonal entries.
pub fn from_cyclic_params(p: &CyclicParams) -> Matrix {
    let n = p.order();
    Matrix::from_fn(n, |i, j| if i == j { p.diag[i].clone() } else { cycle_walk_value(&p.diag, |k| p.edge(k), i, j) })
}

/// Bdsw matrix from nonzero diagonal, super-diagonal and corner.
pub fn bdsw_matrix(diag: &[Rational], sup: &[Rational], corner: &Rational) -> Result<Matrix> {
    let n = diag.len();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    if sup.len() + 1 != n {
        return Err(Error::DimensionMismatch(format!("{n} diagonal and {} super-diagonal parameters", sup.len())));
    }
    if let Some(k) = diag.iter().position(Zero::is_zero) {
        return Err(Error::ZeroParameter(format!("diag[{}]", k + 1)));
    }
    if let Some(k) = sup.iter().position(Zero::is_zero) {
        return Err(Error::ZeroParameter(format!("super[{}]", k + 1)));
    }
    if corner.is_zero() {
        return Err(Error::ZeroParameter("corner".into()));
    }
    let m = Matrix::from_fn(n, |i, j| {
        if i == j {
            diag[i].clone()
        } else if j == i + 1 {
            sup[i].clone()
        } else if i == n - 1 && j == 0 {
            corner.clone()
        } else {
            Rational::zero()
        }
    });
    debug_assert!(is_bdsw(&m));
    Ok(m)
}

/// `Z = (e^n, e^1, ..., e^(n-1))`: column 1 is `e^n`, column `k` is `e^(k-1)`.
pub fn shift_matrix(n: usize) -> Matrix {
    let mut cols: Vec<usize> = vec![n - 1];
    cols.extend(0..n - 1);
    Matrix::from_fn(n, |i, j| if cols[j] == i { Rational::from_integer(1.into()) } else { Rational::zero() })
}

/// `p(Z)` evaluated by accumulating powers of the shift matrix.
pub fn circulant_pz(p: &CirculantParams) -> Matrix {
    let n = p.order();
    let z = shift_matrix(n);
    let mut power = Matrix::identity(n);
    let mut acc = Matrix::zeros(n);
    for alpha in &p.alpha {
        acc = &acc + &power.scale(alpha);
        power = &power * &z;
    }
    acc
}

/// Checks the circulant conditions for the given sign regime:
/// `alpha_1 > alpha_2 > 0` (nonneg) or `alpha_2 < alpha_1 < 0` (nonpos), and
/// `alpha_r = alpha_2^(r-1) / alpha_1^(r-2)` for `r = 3..n`.
pub fn circulant_conditions(p: &CirculantParams, mode: SignMode) -> Result<bool> {
    let (bad, name): (fn(&Rational) -> bool, _) = match mode {
        SignMode::Nonneg => (Signed::is_negative, "nonnegative"),
        SignMode::Nonpos => (Signed::is_positive, "nonpositive"),
    };
    if let Some(k) = p.alpha.iter().position(bad) {
        return Err(Error::SignViolation { index: k + 1, mode: name });
    }
    let (a1, a2) = (&p.alpha[0], &p.alpha[1]);
    let ordered = match mode {
        SignMode::Nonneg => a1 > a2 && a2.is_positive(),
        SignMode::Nonpos => a2 < a1 && a1.is_negative(),
    };
    if !ordered {
        return Ok(false);
    }
    for (k, ar) in p.alpha.iter().enumerate().skip(2) {
        let r = k as i64 + 1;
        if *ar != pow(a2, r - 1)? / pow(a1, r - 2)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `a_ij = 0` whenever `|i - j| > 1`.
pub fn is_tridiagonal(a: &Matrix) -> bool {
    let n = a.order();
    (0..n).all(|i| (0..n).all(|j| i.abs_diff(j) <= 1 || a[(i, j)].is_zero()))
}
