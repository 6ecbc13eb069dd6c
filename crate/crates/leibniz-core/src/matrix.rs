//! Dense matrices over the rationals with exact elimination-based kernels.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Row-major dense matrix with `BigRational` entries.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must equal rows * cols");
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer-entry convenience used heavily by tests and fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| Rational::from(BigInt::from(n))).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rational> {
        self.row(i).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Matrix-vector product `self * v`.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn pow(&self, mut exponent: usize) -> Self {
        assert!(self.is_square(), "pow requires a square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = &acc * &base;
            }
            exponent >>= 1;
            if exponent > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref_with_pivots(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let pivot = m.at(r, c).clone();
            for j in c..m.cols {
                let v = m.at(r, j) / &pivot;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let factor = m.at(i, c).clone();
                    for j in c..m.cols {
                        let v = m.at(i, j) - &factor * m.at(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> Self {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of the null space `{v : self v = 0}`, one vector per row.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.at(row, f).clone();
                }
                v
            })
            .collect()
    }

    /// Exact determinant by fraction-exact Gaussian elimination.
    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "det requires a square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.at(c, c).clone();
            det = det * &pivot;
            for i in (c + 1)..n {
                if !m.at(i, c).is_zero() {
                    let factor = m.at(i, c) / &pivot;
                    for j in c..n {
                        let v = m.at(i, j) - &factor * m.at(c, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).fold(Rational::zero(), |acc, i| acc + self.at(i, i))
    }

    /// Monic characteristic polynomial, coefficients in descending degree
    /// order (`coeffs[0]` multiplies the highest power).  Uses the
    /// trace-recursion form of the Faddeev-LeVerrier scheme, so every
    /// intermediate stays rational and the result is exact.
    pub fn char_poly(&self) -> Vec<Rational> {
        assert!(self.is_square(), "char_poly requires a square matrix");
        let n = self.rows;
        let mut coeffs = vec![Rational::one()];
        let mut m = Self::identity(n);
        for k in 1..=n {
            m = self * &m;
            let c = -(m.trace() / Rational::from(BigInt::from(k as i64)));
            for i in 0..n {
                let v = m.at(i, i) + &c;
                m.set(i, i, v);
            }
            coeffs.push(c);
        }
        coeffs
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square(), "inverse requires a square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (r, pivots) = aug.rref_with_pivots();
        if pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }

    /// Unique solution of `self x = rhs` when `self` is square and
    /// invertible; `None` otherwise.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert!(self.is_square(), "solve requires a square matrix");
        assert_eq!(rhs.len(), self.rows, "right-hand side length must equal rows");
        Some(self.inverse()?.apply(rhs))
    }

    /// Rows of `other` appended below the rows of `self`.
    pub fn stack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "stack requires equal column counts");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: Self) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: Self) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: Self) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(i, j) + a * b;
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

/// Evaluate a polynomial given in descending-degree coefficient order.
pub fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Divide a polynomial (descending coefficients) by `(t - root)`.
/// Returns the quotient when the division is exact, `None` otherwise.
pub fn deflate_poly(coeffs: &[Rational], root: &Rational) -> Option<Vec<Rational>> {
    if coeffs.len() < 2 {
        return None;
    }
    let mut quotient = Vec::with_capacity(coeffs.len() - 1);
    let mut carry = Rational::zero();
    for c in &coeffs[..coeffs.len() - 1] {
        carry = carry * root + c;
        quotient.push(carry.clone());
    }
    let remainder = carry * root + coeffs.last().unwrap();
    remainder.is_zero().then_some(quotient)
}
