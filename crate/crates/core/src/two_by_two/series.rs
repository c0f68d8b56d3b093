//! Truncated bivariate power series `Σ c_{ij} tⁱ sʲ`, exact.

use crate::error::Result;
use crate::exact::ExactScalar;

/// Coefficients for `i + j <= maxdeg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    maxdeg: usize,
    c: Vec<Vec<ExactScalar>>,
}

impl BiSeries {
    pub fn zero(maxdeg: usize) -> Self {
        let c = (0..=maxdeg)
            .map(|i| vec![ExactScalar::zero(); maxdeg + 1 - i])
            .collect();
        BiSeries { maxdeg, c }
    }

    /// A polynomial given as `(i, j, coefficient)` triples; higher terms dropped.
    pub fn poly(maxdeg: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut out = Self::zero(maxdeg);
        for &(i, j, k) in terms {
            if i + j <= maxdeg {
                out.c[i][j] += ExactScalar::from(k);
            }
        }
        out
    }

    pub fn one(maxdeg: usize) -> Self {
        Self::poly(maxdeg, &[(0, 0, 1)])
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    /// Coefficient of `tⁱ sʲ`.
    pub fn coeff(&self, i: usize, j: usize) -> ExactScalar {
        if i + j > self.maxdeg {
            return ExactScalar::zero();
        }
        self.c[i][j].clone()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..=self.maxdeg {
            for j in 0..=self.maxdeg - i {
                out.c[i][j] += other.coeff(i, j);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..=self.maxdeg {
            for j in 0..=self.maxdeg - i {
                out.c[i][j] -= &other.coeff(i, j);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.maxdeg;
        let mut out = Self::zero(n);
        for i in 0..=n {
            for j in 0..=n - i {
                if self.c[i][j].is_zero() {
                    continue;
                }
                for k in 0..=n - i - j {
                    for l in 0..=n - i - j - k {
                        let v = other.coeff(k, l);
                        if !v.is_zero() {
                            out.c[i + k][j + l] += &self.c[i][j] * &v;
                        }
                    }
                }
            }
        }
        out
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.maxdeg;
        let c0 = self.c[0][0].recip()?;
        let mut out = Self::zero(n);
        // Fill by total degree: out_{ij} = −c0⁻¹ Σ_{(k,l)≠0} self_{kl} out_{i−k, j−l}.
        for deg in 0..=n {
            for i in 0..=deg {
                let j = deg - i;
                if deg == 0 {
                    out.c[0][0] = c0.clone();
                    continue;
                }
                let mut acc = ExactScalar::zero();
                for k in 0..=i {
                    for l in 0..=j {
                        if k + l == 0 {
                            continue;
                        }
                        let a = &self.c[k][l];
                        if !a.is_zero() {
                            acc += a * &out.c[i - k][j - l];
                        }
                    }
                }
                out.c[i][j] = -(acc * &c0);
            }
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_and_binomial() {
        let n = 6;
        let free = BiSeries::one(n)
            .div(&BiSeries::poly(n, &[(0, 0, 1), (1, 0, -1), (0, 1, -1)]))
            .unwrap();
        assert_eq!(free.coeff(2, 3), ExactScalar::from(10));
        assert_eq!(free.coeff(3, 3), ExactScalar::from(20));
        let g = BiSeries::poly(n, &[(0, 0, 1), (1, 1, -1)]);
        let inv = g.inverse().unwrap();
        assert_eq!(inv.coeff(3, 3), ExactScalar::one());
        assert_eq!(inv.coeff(2, 3), ExactScalar::zero());
        assert_eq!(g.mul(&inv), BiSeries::one(n));
        assert!(BiSeries::zero(n).inverse().is_err());
    }
}
