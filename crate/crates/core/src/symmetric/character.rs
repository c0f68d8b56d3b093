//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::partition::{partitions, Partition};
use crate::error::{Error, Result};
use crate::exact::ExactScalar;

type Memo = RwLock<HashMap<(Vec<usize>, Vec<usize>), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ_λ(μ)`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<ExactScalar> {
    if lambda.n() != mu.n() {
        return Err(Error::Dimension(format!(
            "character of {lambda} at class {mu}: sizes differ"
        )));
    }
    Ok(ExactScalar::from(mn(lambda.parts(), mu.parts())))
}

/// Integer-valued form of [`character`]; sizes must agree.
pub(crate) fn character_i64(lambda: &Partition, mu: &Partition) -> i64 {
    debug_assert_eq!(lambda.n(), mu.n());
    mn(lambda.parts(), mu.parts())
}

fn mn(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo().read().expect("character memo").get(&key) {
        return v;
    }
    let r = mu[0];
    let rest = &mu[1..];
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut total = 0i64;
    for (k, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut nb = beta.clone();
        nb[k] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let m = nb.len();
        let shape: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (m - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let v = mn(&shape, rest);
        total += if crossed % 2 == 0 { v } else { -v };
    }
    memo().write().expect("character memo").insert(key, total);
    total
}

/// Rows indexed by `λ`, columns by `μ`, both in canonical order.
pub fn character_table(n: usize) -> Vec<Vec<ExactScalar>> {
    let ps = partitions(n);
    ps.iter()
        .map(|l| {
            ps.iter()
                .map(|m| ExactScalar::from(character_i64(l, m)))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn trivial_and_sign() {
        for n in 1..=6 {
            let triv = Partition::new(vec![n]);
            let sgn = Partition::new(vec![1; n]);
            for mu in partitions(n) {
                assert_eq!(character(&triv, &mu).unwrap(), ExactScalar::one());
                assert_eq!(character(&sgn, &mu).unwrap(), ExactScalar::from(mu.sign()));
            }
        }
    }

    #[test]
    fn orthogonality() {
        for n in 1..=6 {
            let ps = partitions(n);
            for a in &ps {
                for b in &ps {
                    let s: BigInt = ps
                        .iter()
                        .map(|mu| {
                            mu.class_size() * character_i64(a, mu) * character_i64(b, mu)
                        })
                        .sum();
                    let want = if a == b {
                        ExactScalar::factorial(n as u32).numer().clone()
                    } else {
                        BigInt::from(0)
                    };
                    assert_eq!(s, want, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn degrees_match_hook_formula() {
        for n in 1..=8 {
            let id = Partition::new(vec![1; n]);
            for l in partitions(n) {
                assert_eq!(BigInt::from(character_i64(&l, &id)), l.dimension());
            }
        }
    }

    #[test]
    fn size_mismatch() {
        assert!(character(&Partition::new(vec![2]), &Partition::new(vec![3])).is_err());
    }
}
