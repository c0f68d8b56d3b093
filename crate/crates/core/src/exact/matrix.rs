//! Dense matrices over [`ExactScalar`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{common_denominator, ExactScalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<ExactScalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension("matrix with a zero dimension".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = ExactScalar::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &ExactScalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    /// Matrix unit `e_{ij}` of size `n` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.entries[i * n + j] = ExactScalar::one();
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(
            r,
            c,
            rows.iter()
                .flatten()
                .map(|&v| ExactScalar::from(v))
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

    pub fn entries(&self) -> &[ExactScalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExactScalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExactScalar::is_zero)
    }

    /// `Some(c)` when the matrix equals `c * I`.
    pub fn as_scalar(&self) -> Option<ExactScalar> {
        if !self.is_square() {
            return None;
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if (i == j && *e != c) || (i != j && !e.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&ExactScalar, &ExactScalar) -> ExactScalar) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Result<ExactScalar> {
        if !self.is_square() {
            return Err(Error::Dimension("trace of a non-square matrix".into()));
        }
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    /// Kronecker product; row index of `a ⊗ b` is `i_a * rows(b) + i_b`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.entries[(i * other.rows + k) * cols + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Row-major flattening into a single row.
    pub fn vectorize(&self) -> Vec<ExactScalar> {
        self.entries.clone()
    }

    /// Rows scaled to integers, together with the per-row scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut rows = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = &self.entries[i * self.cols..(i + 1) * self.cols];
            let l = common_denominator(row.iter());
            rows.push(
                row.iter()
                    .map(|e| e.numer() * (&l / e.denom()))
                    .collect::<Vec<_>>(),
            );
            scales.push(l);
        }
        (rows, scales)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<ExactScalar> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let (mut a, scales) = self.integer_rows();
        let n = self.rows;
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(ExactScalar::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let denom = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
        ExactScalar::new(sign * &a[n - 1][n - 1], denom)
    }

    /// Exact row rank (fraction-free elimination).
    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        let (m, n) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        for c in 0..n {
            if rank == m {
                break;
            }
            let Some(p) = (rank..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            for i in rank + 1..m {
                for j in c + 1..n {
                    let v = &a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j];
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[rank][c].clone();
            rank += 1;
        }
        rank
    }

    /// Solves `self * X = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("solve with a non-square system".into()));
        }
        if rhs.rows != self.rows {
            return Err(Error::Dimension("solve: right-hand side height".into()));
        }
        let n = self.rows;
        let w = n + rhs.cols;
        let mut a: Vec<Vec<ExactScalar>> = (0..n)
            .map(|i| {
                let mut row = self.entries[i * n..(i + 1) * n].to_vec();
                row.extend_from_slice(&rhs.entries[i * rhs.cols..(i + 1) * rhs.cols]);
                row
            })
            .collect();
        for k in 0..n {
            let p = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::Singular)?;
            a.swap(p, k);
            let inv = a[k][k].recip()?;
            for j in k..w {
                a[k][j] = &a[k][j] * &inv;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in k..w {
                    let t = &f * &a[k][j];
                    a[i][j] -= &t;
                }
            }
        }
        let entries = a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
        ExactMatrix::new(n, rhs.cols, entries)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.solve(&Self::identity(self.rows))
    }

    /// Classical adjoint: transpose of the cofactor matrix.
    pub fn adjugate(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("adjugate of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j);
                let c = minor.det()?;
                let c = if (i + j) % 2 == 0 { c } else { -c };
                out.set(j, i, c);
            }
        }
        Ok(out)
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> Self {
        let entries = (0..self.rows)
            .filter(|&i| i != skip_r)
            .flat_map(|i| {
                (0..self.cols)
                    .filter(move |&j| j != skip_c)
                    .map(move |j| self.get(i, j).clone())
            })
            .collect();
        ExactMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    pub fn max_abs_entry(&self) -> ExactScalar {
        self.entries
            .iter()
            .map(ExactScalar::abs)
            .max()
            .unwrap_or_else(ExactScalar::zero)
    }

    /// Integer matrix `l * self` where `l` is the lcm of the entry denominators.
    pub fn clear_denominators(&self) -> (Vec<BigInt>, BigInt) {
        let l = common_denominator(self.entries.iter());
        let ints = self
            .entries
            .iter()
            .map(|e| e.numer() * (&l / e.denom()))
            .collect();
        (ints, l)
    }

    pub fn from_integers(rows: usize, cols: usize, ints: &[BigInt]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            ints.iter().map(|v| ExactScalar::from(v.clone())).collect(),
        )
    }

    /// The gcd of all numerators; zero for the zero matrix.
    pub fn content_gcd(&self) -> BigInt {
        self.entries
            .iter()
            .fold(BigInt::zero(), |g, e| g.gcd(&e.numer().abs()))
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms panic on shape mismatch; use the `try_*` methods when
// shapes are not known to agree.
impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_add(rhs).expect("matrix shapes agree")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_sub(rhs).expect("matrix shapes agree")
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).expect("matrix shapes agree")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn identity_and_units() {
        let i2 = ExactMatrix::identity(2);
        assert_eq!(&i2 * &i2, i2);
        let e12 = ExactMatrix::unit(2, 0, 1);
        let e21 = ExactMatrix::unit(2, 1, 0);
        assert_eq!(&e12 * &e21, ExactMatrix::unit(2, 0, 0));
    }

    #[test]
    fn commutator_of_nilpotents() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let b = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(&(&a * &b) - &(&b * &a), m(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn shape_errors() {
        let a = ExactMatrix::zeros(2, 3);
        assert!(matches!(a.try_mul(&a), Err(Error::Dimension(_))));
        assert!(matches!(a.det(), Err(Error::Dimension(_))));
        assert!(matches!(a.trace(), Err(Error::Dimension(_))));
        assert!(ExactMatrix::new(2, 2, vec![ExactScalar::one()]).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(ExactMatrix::identity(4).det().unwrap(), ExactScalar::one());
        let d = m(&[&[2, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 1]]);
        assert_eq!(d.det().unwrap(), ExactScalar::from(-1));
        let r = ExactMatrix::new(
            2,
            2,
            vec![
                ExactScalar::ratio(1, 2),
                ExactScalar::ratio(1, 3),
                ExactScalar::ratio(1, 4),
                ExactScalar::ratio(1, 5),
            ],
        )
        .unwrap();
        assert_eq!(r.det().unwrap(), ExactScalar::ratio(1, 10) - ExactScalar::ratio(1, 12));
    }

    #[test]
    fn ranks() {
        assert_eq!(m(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).rank(), 1);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]]).rank(), 2);
    }

    #[test]
    fn solve_and_singular() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = a.solve(&ExactMatrix::identity(2)).unwrap();
        assert_eq!(&a * &x, ExactMatrix::identity(2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn adjugate_matches_inverse() {
        let a = m(&[&[2, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 1]]);
        let adj = a.adjugate().unwrap();
        assert_eq!(adj, a.inverse().unwrap().scale(&a.det().unwrap()));
        let s = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(&s * &s.adjugate().unwrap(), ExactMatrix::zeros(2, 2));
    }

    #[test]
    fn kron_index_convention() {
        let k = ExactMatrix::unit(2, 0, 0).kron(&ExactMatrix::unit(2, 1, 1));
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == 1 && j == 1 { 1 } else { 0 };
                assert_eq!(k.get(i, j), &ExactScalar::from(want));
            }
        }
    }
}

/// Serialized as a list of rows.
impl serde::Serialize for ExactMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            seq.serialize_element(&self.entries[r * self.cols..(r + 1) * self.cols])?;
        }
        seq.end()
    }
}
