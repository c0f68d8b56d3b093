//! Bigraded dimensions of the algebra generated by two generic 2×2 matrices,
//! measured by evaluation rank and compared with the Poincaré series.

use rayon::prelude::*;
use serde::Serialize;

use super::series::BiSeries;
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar};
use crate::ncpoly::{random_matrix, seeded_rng};

pub const DEFAULT_MAXDEG: usize = 7;
pub const DEFAULT_POINTS: usize = 6;
/// Largest `maxdeg` accepted.
pub const MAXDEG_BUDGET: usize = 12;

fn geometric(n: usize, i: usize, j: usize) -> BiSeries {
    // 1 − tⁱsʲ
    BiSeries::poly(n, &[(0, 0, 1), (i, j, -1)])
}

fn product_inverse(n: usize, factors: &[(usize, usize)]) -> BiSeries {
    let mut den = BiSeries::one(n);
    for &(i, j) in factors {
        den = den.mul(&geometric(n, i, j));
    }
    den.inverse().expect("constant term 1")
}

/// `P(T) = 1/((1−t)(1−s)(1−t²)(1−s²)(1−ts))`.
pub fn series_t(n: usize) -> BiSeries {
    product_inverse(n, &[(1, 0), (0, 1), (2, 0), (0, 2), (1, 1)])
}

/// `P(S) = (1+t)(1+s)P(T)`.
pub fn series_s(n: usize) -> BiSeries {
    BiSeries::poly(n, &[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]).mul(&series_t(n))
}

/// `P(R) = 1/((1−t)(1−s)) + ts·P(S)`.
pub fn series_r(n: usize) -> BiSeries {
    product_inverse(n, &[(1, 0), (0, 1)]).add(&BiSeries::poly(n, &[(1, 1, 1)]).mul(&series_s(n)))
}

/// `P(Z) = 1 + s²t²P(T)`.
pub fn series_center(n: usize) -> BiSeries {
    BiSeries::one(n).add(&BiSeries::poly(n, &[(2, 2, 1)]).mul(&series_t(n)))
}

/// `s²t²(s+t−st) / ((1−s)²(1−t)²(1−st)(1−s−t))`.
pub fn series_identities(n: usize) -> BiSeries {
    let num = BiSeries::poly(n, &[(3, 2, 1), (2, 3, 1), (3, 3, -1)]);
    let den = product_inverse(n, &[(1, 0), (1, 0), (0, 1), (0, 1), (1, 1)]);
    let free_part = BiSeries::poly(n, &[(0, 0, 1), (1, 0, -1), (0, 1, -1)])
        .inverse()
        .expect("constant term 1");
    num.mul(&den).mul(&free_part)
}

fn words(i: usize, j: usize) -> Vec<Vec<bool>> {
    // true = x
    let n = i + j;
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize == i {
            out.push((0..n).map(|k| mask >> (n - 1 - k) & 1 == 1).collect());
        }
    }
    out
}

fn eval_bool_word(w: &[bool], x: &ExactMatrix, y: &ExactMatrix) -> ExactMatrix {
    w.iter().fold(ExactMatrix::identity(2), |acc, &isx| {
        &acc * if isx { x } else { y }
    })
}

fn rank_at(ws: &[Vec<bool>], pts: &[(ExactMatrix, ExactMatrix)]) -> usize {
    let cols = 4 * pts.len();
    let mut entries = Vec::with_capacity(ws.len() * cols);
    for w in ws {
        for (x, y) in pts {
            entries.extend(eval_bool_word(w, x, y).entries().iter().cloned());
        }
    }
    ExactMatrix::new(ws.len(), cols, entries)
        .expect("nonempty")
        .rank()
}

#[derive(Clone, Debug, Serialize)]
pub struct BidegreeRow {
    pub i: usize,
    pub j: usize,
    pub words: usize,
    pub rank: usize,
    pub points: usize,
    pub series_dim: ExactScalar,
    pub codim: usize,
    pub series_codim: ExactScalar,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PoincareReport {
    pub maxdeg: usize,
    pub rows: Vec<BidegreeRow>,
    pub all_ok: bool,
}

/// Rank of the words of bidegree `(i, j)`, adding points until the rank stops
/// growing.
pub fn rank_oracle(i: usize, j: usize, seed: u64) -> (usize, usize) {
    let ws = words(i, j);
    let mut rng = seeded_rng(seed ^ ((i as u64) << 32 | j as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut pts: Vec<(ExactMatrix, ExactMatrix)> = (0..DEFAULT_POINTS)
        .map(|_| (random_matrix(&mut rng, 2), random_matrix(&mut rng, 2)))
        .collect();
    let mut rank = rank_at(&ws, &pts);
    loop {
        if rank == ws.len() {
            return (rank, pts.len());
        }
        pts.push((random_matrix(&mut rng, 2), random_matrix(&mut rng, 2)));
        let next = rank_at(&ws, &pts);
        if next == rank {
            return (rank, pts.len() - 1);
        }
        rank = next;
    }
}

pub fn poincare_check(maxdeg: usize, seed: u64) -> Result<PoincareReport> {
    if maxdeg > MAXDEG_BUDGET {
        return Err(Error::Budget {
            estimated: 1u128 << maxdeg,
            budget: 1u128 << MAXDEG_BUDGET,
        });
    }
    let r = series_r(maxdeg);
    let ids = series_identities(maxdeg);
    let cells: Vec<(usize, usize)> = (0..=maxdeg)
        .flat_map(|i| (0..=maxdeg - i).map(move |j| (i, j)))
        .collect();
    let rows: Vec<BidegreeRow> = cells
        .par_iter()
        .map(|&(i, j)| {
            let (rank, points) = rank_oracle(i, j, seed);
            let nwords = words(i, j).len();
            let series_dim = r.coeff(i, j);
            let series_codim = ids.coeff(i, j);
            let codim = nwords - rank;
            let ok = series_dim == ExactScalar::from(rank as u64)
                && series_codim == ExactScalar::from(codim as u64);
            BidegreeRow {
                i,
                j,
                words: nwords,
                rank,
                points,
                series_dim,
                codim,
                series_codim,
                ok,
            }
        })
        .collect();
    let all_ok = rows.iter().all(|r| r.ok);
    Ok(PoincareReport { maxdeg, rows, all_ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bidegrees() {
        assert_eq!(rank_oracle(1, 1, 3).0, 2);
        for k in 0..5 {
            assert_eq!(rank_oracle(0, k, 3).0, 1);
        }
        let ids = series_identities(6);
        for (i, j) in [(0, 0), (1, 1), (2, 2), (1, 4), (4, 1)] {
            assert!(ids.coeff(i, j).is_zero());
        }
        assert_eq!(ids.coeff(2, 3), ExactScalar::one());
        assert_eq!(ids.coeff(3, 2), ExactScalar::one());
        assert_eq!(series_r(5).coeff(2, 3), ExactScalar::from(9));
    }

    #[test]
    fn check_to_degree_six() {
        let rep = poincare_check(6, 7).unwrap();
        assert!(rep.all_ok, "{:?}", rep.rows.iter().filter(|r| !r.ok).collect::<Vec<_>>());
    }
}
