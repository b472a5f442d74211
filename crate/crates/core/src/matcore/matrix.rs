use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num::{Signed, Zero};

use super::rational::{int, Rational};
use crate::{Error, Result};

/// Square dense matrix of exact rationals.
///
/// `m[(i, j)]` indexes from zero. Everything user-facing (index sets, path
/// vertices, [`Matrix::entry`], file formats, error messages) is 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<Rational>,
}

impl Matrix {
    /// Builds a matrix from rows. Fails on an empty grid or ragged rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("matrix order must be at least 1".into()));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            data.extend(row);
        }
        Ok(Self { n, data })
    }

    /// Convenience constructor from integer rows. Panics on ragged or empty input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows.iter().map(|r| r.as_ref().iter().map(|&v| int(v)).collect()).collect();
        Self::from_rows(rows).expect("integer rows must form a nonempty square grid")
    }

    /// Builds an `n x n` matrix from a 0-based index function.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(n >= 1, "matrix order must be at least 1");
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { int(1) } else { int(0) })
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| int(0))
    }

    /// Order `n` of the matrix.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry `a_ij` with 1-based `i`, `j`.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "index ({i},{j}) out of range");
        &self[(i - 1, j - 1)]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.data.chunks(self.n)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.data.iter()
    }

    /// Off-diagonal entries with their 0-based positions.
    pub fn off_diagonal(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        let n = self.n;
        self.data.iter().enumerate().map(move |(k, v)| ((k / n, k % n), v)).filter(|((i, j), _)| i != j)
    }

    pub fn diagonal(&self) -> impl Iterator<Item = &Rational> {
        (0..self.n).map(move |i| &self[(i, i)])
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { n: self.n, data: self.data.iter().map(|v| v * s).collect() }
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Every entry `> 0`.
    pub fn is_positive(&self) -> bool {
        self.data.iter().all(Signed::is_positive)
    }

    /// Every entry `< 0`.
    pub fn is_negative(&self) -> bool {
        self.data.iter().all(Signed::is_negative)
    }

    /// Every entry `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|v| !v.is_negative())
    }

    /// Every entry `<= 0`.
    pub fn is_nonpositive(&self) -> bool {
        self.data.iter().all(|v| !v.is_positive())
    }

    /// Submatrix on the given 0-based rows and columns. Empty selections are rejected.
    pub(crate) fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        assert!(!rows.is_empty() && rows.len() == cols.len());
        let k = rows.len();
        let mut data = Vec::with_capacity(k * k);
        for &r in rows {
            for &c in cols {
                data.push(self[(r, c)].clone());
            }
        }
        Self { n: k, data }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.n, other.n, "order mismatch");
        Self { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect() }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.n && j < self.n, "index ({i},{j}) out of range for order {}", self.n);
        &self.data[i * self.n + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "order mismatch");
        let n = self.n;
        Matrix::from_fn(n, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..n {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    acc += a * &rhs[(k, j)];
                }
            }
            acc
        })
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|v| -v)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.chunks(self.n).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})\n{}", self.n, self.n, self)
    }
}
