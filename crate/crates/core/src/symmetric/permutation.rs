use std::fmt;

use super::partition::Partition;
use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}`; printed and parsed one-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From zero-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// From one-based images, as in `σ = [2, 1, 3]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Precondition("one-based images contain 0".into()));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// Product of one-based cycles, composed right to left.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Self::identity(n);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..n).collect();
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::Precondition(format!(
                        "cycle entry outside 1..={n}"
                    )));
                }
                images[a - 1] = b - 1;
            }
            acc = Self::from_images(images)?.compose(&acc);
        }
        Ok(acc)
    }

    /// The transposition of zero-based points `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Cycles (zero-based), each starting at its smallest point, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.images[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn sign(&self) -> i32 {
        if (self.n() - self.cycle_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All of `S_n` in lexicographic order of image sequences.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

/// Advances to the next permutation in lexicographic order; false at the last one.
pub fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_order() {
        // (1 2 3) ∘ (1 2) sends 1 -> 2 -> 3.
        let c = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(c.compose(&t).image(0), 2);
        assert_eq!(
            Permutation::from_cycles(3, &[&[1, 2, 3], &[1, 2]]).unwrap(),
            c.compose(&t)
        );
    }

    #[test]
    fn signs_and_types() {
        let c = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(c.sign(), 1);
        let p = Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.cycle_type(), Partition::new(vec![2, 2]));
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn enumeration() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for p in &all {
            assert!(p.compose(&p.inverse()).is_identity());
        }
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }
}
