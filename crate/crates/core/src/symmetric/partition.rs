use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::ExactScalar;

/// An integer partition with parts in weakly decreasing order.
///
/// Ordering is reverse-lexicographic, so `(3) < (2,1) < (1,1,1)` and sorted
/// containers list partitions in the canonical table order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..width)
                .map(|j| self.parts.iter().filter(|&&p| p > j).count())
                .collect(),
        }
    }

    /// Sign of any permutation with this cycle type.
    pub fn sign(&self) -> i32 {
        if (self.n() - self.height()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `z_μ = Π i^{m_i} m_i!`, the centralizer order.
    pub fn centralizer(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut m = 0u32;
            while i < self.parts.len() && self.parts[i] == p {
                m += 1;
                i += 1;
                z *= p;
                z *= m;
            }
        }
        z
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> BigInt {
        ExactScalar::factorial(self.n() as u32).numer() / self.centralizer()
    }

    fn hooks(&self) -> Vec<(usize, usize, usize)> {
        let conj = self.conjugate();
        let mut out = Vec::new();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j) + (conj.parts[j] - i) - 1;
                out.push((i, j, hook));
            }
        }
        out
    }

    /// Dimension of the Specht module (hook length formula).
    pub fn dimension(&self) -> BigInt {
        let prod = self
            .hooks()
            .iter()
            .fold(BigInt::one(), |acc, &(_, _, h)| acc * h);
        ExactScalar::factorial(self.n() as u32).numer() / prod
    }

    /// Text form like `3,1,1`; the empty partition prints as `0`.
    pub fn label(&self) -> String {
        if self.parts.is_empty() {
            return "0".into();
        }
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        s.join(",")
    }

    /// Exponent form like `3,1^2`.
    pub fn compact_label(&self) -> String {
        if self.parts.is_empty() {
            return "0".into();
        }
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&q| q == p).count();
            out.push(if m == 1 {
                p.to_string()
            } else {
                format!("{p}^{m}")
            });
            i += m;
        }
        out.join(",")
    }
}

/// Dimension of the GL(d) irreducible indexed by `lambda` (hook-content formula).
pub fn gl_dimension(lambda: &Partition, d: usize) -> ExactScalar {
    if lambda.height() > d {
        return ExactScalar::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j, h) in lambda.hooks() {
        num *= d + j - i;
        den *= h;
    }
    ExactScalar::from(num / den)
}

/// All partitions of `n` in canonical (reverse-lexicographic) order.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `2,1,1`, `(2,1,1)`, `2,1^2` or `0`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("not a partition: {s:?}"),
        };
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t == "0" || t.is_empty() {
            return Ok(Partition::new(Vec::new()));
        }
        let mut parts = Vec::new();
        for piece in t.split(',') {
            let piece = piece.trim();
            let (p, m) = match piece.split_once('^') {
                Some((p, m)) => (p, m.parse::<usize>().map_err(|_| bad())?),
                None => (piece, 1),
            };
            let p = p.parse::<usize>().map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat(p).take(m));
        }
        Ok(Partition::new(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let mut sorted = partitions(6);
        sorted.sort();
        assert_eq!(sorted, partitions(6));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=7 {
            let total: BigInt = partitions(n).iter().map(Partition::class_size).sum();
            assert_eq!(total, ExactScalar::factorial(n as u32).numer().clone());
        }
    }

    #[test]
    fn dims() {
        assert_eq!(p(&[2, 1]).dimension(), BigInt::from(2));
        assert_eq!(p(&[3, 2]).dimension(), BigInt::from(5));
        assert_eq!(gl_dimension(&p(&[1]), 7), ExactScalar::from(7));
        assert_eq!(gl_dimension(&p(&[1, 1, 1]), 2), ExactScalar::zero());
        assert_eq!(gl_dimension(&p(&[2, 2]), 2), ExactScalar::one());
        assert_eq!(gl_dimension(&p(&[2]), 3), ExactScalar::from(6));
    }

    #[test]
    fn parse_labels() {
        assert_eq!("1^4".parse::<Partition>().unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!(p(&[3, 1, 1]).compact_label(), "3,1^2");
        assert!("a".parse::<Partition>().is_err());
    }
}
