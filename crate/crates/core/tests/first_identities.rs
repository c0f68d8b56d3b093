//! Dimensions of the bigraded pieces of the algebra generated by two generic
//! 2×2 matrices, by rank of word evaluations over GF(p).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use swappoly::two_by_two::poincare_check;

const P: u64 = 2_147_483_647;

type M = [u64; 4];

fn mul(a: &M, b: &M) -> M {
    let f = |x: u64, y: u64, z: u64, w: u64| (x * y % P + z * w % P) % P;
    [
        f(a[0], b[0], a[1], b[2]),
        f(a[0], b[1], a[1], b[3]),
        f(a[2], b[0], a[3], b[2]),
        f(a[2], b[1], a[3], b[3]),
    ]
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = pow_mod(rows[r][c], P - 2);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c] * inv % P;
                for k in c..cols {
                    rows[i][k] = (rows[i][k] + P - f * rows[r][k] % P) % P;
                }
            }
        }
        r += 1;
    }
    r
}

/// Words in x, y with i copies of x and j of y.
fn words(i: usize, j: usize) -> Vec<Vec<bool>> {
    (0u32..1 << (i + j))
        .filter(|m| m.count_ones() as usize == j)
        .map(|m| (0..i + j).map(|k| m >> k & 1 == 1).collect())
        .collect()
}

fn dim(i: usize, j: usize, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let ws = words(i, j);
    let pts: Vec<(M, M)> = (0..12)
        .map(|_| {
            let mut m = || [0; 4].map(|_: u64| rng.gen_range(0..P));
            (m(), m())
        })
        .collect();
    // One column per word, one row per (point, entry).
    let mut rows = vec![vec![0u64; ws.len()]; pts.len() * 4];
    for (c, w) in ws.iter().enumerate() {
        for (k, (x, y)) in pts.iter().enumerate() {
            let v = w.iter().fold([1, 0, 0, 1], |acc, &is_y| mul(&acc, if is_y { y } else { x }));
            for e in 0..4 {
                rows[4 * k + e][c] = v[e];
            }
        }
    }
    (ws.len(), rank(rows))
}

#[test]
fn first_identities_are_2_3_and_3_2() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut first = vec![];
    'deg: for n in 0..=6 {
        for i in 0..=n {
            let (w, r) = dim(i, n - i, &mut rng);
            if r < w {
                first.push((i, n - i));
            }
        }
        if !first.is_empty() {
            break 'deg;
        }
    }
    assert_eq!(first, vec![(2, 3), (3, 2)]);
}

#[test]
fn library_ranks_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let report = poincare_check(5, 7).unwrap();
    for row in &report.rows {
        let (w, r) = dim(row.i, row.j, &mut rng);
        assert_eq!((row.words, row.rank), (w, r), "bidegree ({}, {})", row.i, row.j);
    }
}
