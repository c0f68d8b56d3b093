//! Streaming evaluation of `Alt_{V_1} ⋯ Alt_{V_r} (w_1 ⊗ ⋯ ⊗ w_n)`.
//!
//! Positions are filled left to right. The signed sum over all ways to fill
//! positions `k..` depends only on which variables of each set are already
//! used, so those suffix sums are computed once per (position, used-set) and
//! shared by every prefix that reaches them. Work is polynomial in the
//! number of used-sets rather than factorial in the set sizes.

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::poly::Assignment;
use super::tensor::TensorPoly2;
use super::word::{Letter, Word};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar, TensorOperator};

/// Default work budget, in scalar multiply-adds.
pub const DEFAULT_WORK_BUDGET: u128 = 2_000_000_000;

/// Words in tensor slots, with disjoint alternation sets whose members each
/// occur exactly once in the whole pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPattern {
    slots: Vec<Word>,
    sets: Vec<Vec<Letter>>,
}

impl MonomialPattern {
    pub fn new(slots: Vec<Word>, sets: Vec<Vec<Letter>>) -> Result<Self> {
        if slots.is_empty() {
            return Err(Error::Dimension("pattern without slots".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for set in &sets {
            if set.len() > 32 {
                return Err(Error::Precondition("alternation set larger than 32".into()));
            }
            for &v in set {
                if !seen.insert(v) {
                    return Err(Error::Precondition(format!("{v} in two alternation sets")));
                }
                let k: usize = slots.iter().map(|w| w.count(v)).sum();
                if k != 1 {
                    return Err(Error::NotMultilinear(format!(
                        "{v} occurs {k} times in the pattern"
                    )));
                }
            }
        }
        Ok(MonomialPattern { slots, sets })
    }

    pub fn slots(&self) -> &[Word] {
        &self.slots
    }

    pub fn sets(&self) -> &[Vec<Letter>] {
        &self.sets
    }

    /// Number of terms of the symbolic expansion, `Π |V_i|!`.
    pub fn naive_terms(&self) -> u128 {
        self.sets
            .iter()
            .map(|s| (1..=s.len() as u128).product::<u128>())
            .fold(1u128, |a, b| a.saturating_mul(b))
    }

    /// The unexpanded 2-slot pattern as a tensor polynomial.
    pub fn as_tensor_poly(&self) -> Result<TensorPoly2> {
        if self.slots.len() != 2 {
            return Err(Error::Dimension("pattern does not have two slots".into()));
        }
        Ok(TensorPoly2::from_terms([(
            self.slots[0].clone(),
            self.slots[1].clone(),
            ExactScalar::one(),
        )]))
    }
}

#[derive(Clone, Copy, Debug)]
enum Token {
    Fixed(Letter),
    Alt { set: usize },
    Break,
}

struct Plan {
    tokens: Vec<Token>,
    /// Operator order of the suffix object at each token index (and the end).
    orders: Vec<usize>,
    /// Used counts per set before each token index (and at the end).
    counts: Vec<Vec<u32>>,
    base_sign: i32,
}

fn plan(p: &MonomialPattern) -> Plan {
    let n = p.slots.len();
    let set_of: HashMap<Letter, (usize, usize)> = p
        .sets
        .iter()
        .enumerate()
        .flat_map(|(s, set)| set.iter().enumerate().map(move |(i, &v)| (v, (s, i))))
        .collect();
    let mut tokens = Vec::new();
    let mut orders = Vec::new();
    let mut appearance: Vec<Vec<usize>> = vec![Vec::new(); p.sets.len()];
    for (s, w) in p.slots.iter().enumerate() {
        if s > 0 {
            tokens.push(Token::Break);
            orders.push(n - s + 1);
        }
        for &l in w.letters() {
            match set_of.get(&l) {
                Some(&(set, i)) => {
                    appearance[set].push(i);
                    tokens.push(Token::Alt { set });
                }
                None => tokens.push(Token::Fixed(l)),
            }
            orders.push(n - s);
        }
    }
    orders.push(1);
    let mut counts = Vec::with_capacity(tokens.len() + 1);
    let mut cur = vec![0u32; p.sets.len()];
    for t in &tokens {
        counts.push(cur.clone());
        if let Token::Alt { set } = t {
            cur[*set] += 1;
        }
    }
    counts.push(cur);
    // Sign of the original order of appearance within each set.
    let base_sign = appearance.iter().fold(1, |acc, seq| {
        let inv = (0..seq.len())
            .flat_map(|i| (i + 1..seq.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| seq[i] > seq[j])
            .count();
        if inv % 2 == 0 {
            acc
        } else {
            -acc
        }
    });
    Plan {
        tokens,
        orders,
        counts,
        base_sign,
    }
}

fn binom(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let mut r = 1u128;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Estimated multiply-adds for [`alt_eval_stream`] at local dimension `d`.
pub fn estimate_work(p: &MonomialPattern, d: usize) -> u128 {
    let pl = plan(p);
    let mut total = 0u128;
    for (k, t) in pl.tokens.iter().enumerate() {
        let states = pl
            .counts
            .get(k)
            .expect("count per token")
            .iter()
            .zip(&p.sets)
            .map(|(&c, set)| binom(set.len() as u32, c))
            .fold(1u128, |a, b| a.saturating_mul(b));
        let r = (d as u128).saturating_pow(pl.orders[k] as u32);
        let per = r.saturating_mul(r);
        let choices = match t {
            Token::Alt { set } => (p.sets[*set].len() as u32 - pl.counts[k][*set]) as u128,
            _ => 1,
        };
        total = total.saturating_add(
            states
                .saturating_mul(choices)
                .saturating_mul(per)
                .saturating_mul(d as u128),
        );
    }
    total
}

trait Ring: Clone + Send + Sync + Zero + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {
    fn from_big(v: &BigInt) -> Self;
    fn to_big(&self) -> BigInt;
    fn add_mul(&mut self, a: &Self, b: &Self);
}

impl Ring for i128 {
    fn from_big(v: &BigInt) -> Self {
        v.to_i128().expect("bounded entry")
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl Ring for BigInt {
    fn from_big(v: &BigInt) -> Self {
        v.clone()
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

/// Row-major square block of side `d^order`.
#[derive(Clone)]
struct Dense<T> {
    side: usize,
    data: Vec<T>,
}

impl<T: Ring> Dense<T> {
    fn zeros(side: usize) -> Self {
        Dense {
            side,
            data: vec![T::zero(); side * side],
        }
    }

    fn identity(side: usize, one: &T) -> Self {
        let mut m = Self::zeros(side);
        for i in 0..side {
            m.data[i * side + i] = one.clone();
        }
        m
    }

    /// `out += (a ⊗ I) · s`, with `a` a d×d matrix.
    fn add_left_mul(out: &mut Self, a: &[T], d: usize, s: &Self) {
        let side = s.side;
        let block = side / d;
        for i in 0..d {
            for j in 0..d {
                let c = &a[i * d + j];
                if c.is_zero() {
                    continue;
                }
                for r in 0..block {
                    let dst = (i * block + r) * side;
                    let src = (j * block + r) * side;
                    for col in 0..side {
                        let v = &s.data[src + col];
                        if !v.is_zero() {
                            out.data[dst + col].add_mul(c, v);
                        }
                    }
                }
            }
        }
    }

    /// `I_d ⊗ s`.
    fn kron_identity(d: usize, s: &Self) -> Self {
        let side = d * s.side;
        let mut out = Self::zeros(side);
        for i in 0..d {
            for r in 0..s.side {
                let dst = (i * s.side + r) * side + i * s.side;
                let src = r * s.side;
                out.data[dst..dst + s.side].clone_from_slice(&s.data[src..src + s.side]);
            }
        }
        out
    }
}

/// Subsets of `{0..n}` with `k` elements, ascending.
fn subsets(n: u32, k: u32) -> Vec<u32> {
    if k == 0 {
        return vec![0];
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut m: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while m < limit {
        out.push(m as u32);
        // Gosper's hack.
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

fn cartesian(lists: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for &m in list {
                let mut v = prefix.clone();
                v.push(m);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

struct Scaled {
    /// Integer matrices per letter.
    ints: HashMap<Letter, Vec<BigInt>>,
    /// Product of the scale factors over all pattern positions.
    denom: BigInt,
    /// Rough bit bound on any accumulated entry.
    bits: f64,
}

fn scale_assignment(p: &MonomialPattern, asg: &Assignment) -> Result<Scaled> {
    let d = asg.d();
    let mut ints = HashMap::new();
    let mut denom = BigInt::from(1);
    let mut bits = (p.naive_terms() as f64).log2() + (d as f64).log2() + 2.0;
    for w in &p.slots {
        for &l in w.letters() {
            let m = asg.get(l)?;
            let (v, c) = m.clear_denominators();
            let max = v.iter().map(|e| e.bits()).max().unwrap_or(0) as f64;
            bits += max.max(1.0) + (d as f64).log2();
            denom *= &c;
            ints.insert(l, v);
        }
    }
    Ok(Scaled { ints, denom, bits })
}

/// Exact `Alt_{V_1}⋯Alt_{V_r}(w_1 ⊗ ⋯ ⊗ w_n)` as an order-n operator.
pub fn alt_eval_stream(p: &MonomialPattern, asg: &Assignment) -> Result<TensorOperator> {
    alt_eval_stream_with_budget(p, asg, DEFAULT_WORK_BUDGET)
}

pub fn alt_eval_stream_with_budget(
    p: &MonomialPattern,
    asg: &Assignment,
    budget: u128,
) -> Result<TensorOperator> {
    let d = asg.d();
    let estimated = estimate_work(p, d);
    if estimated > budget {
        return Err(Error::Budget { estimated, budget });
    }
    let sc = scale_assignment(p, asg)?;
    let ints = if sc.bits < 124.0 {
        run::<i128>(p, d, &sc)
    } else {
        run::<BigInt>(p, d, &sc)
    };
    let n = p.slots.len();
    let side = d.pow(n as u32);
    let entries = ints
        .into_iter()
        .map(|v| ExactScalar::new(v, sc.denom.clone()))
        .collect::<Result<Vec<_>>>()?;
    TensorOperator::new(d, n, ExactMatrix::new(side, side, entries)?)
}

/// One-slot convenience: the alternated word as a d×d matrix.
pub fn alt_eval_matrix(p: &MonomialPattern, asg: &Assignment) -> Result<ExactMatrix> {
    if p.slots.len() != 1 {
        return Err(Error::Dimension("pattern has more than one slot".into()));
    }
    Ok(alt_eval_stream(p, asg)?.into_matrix())
}

fn run<T: Ring>(p: &MonomialPattern, d: usize, sc: &Scaled) -> Vec<BigInt> {
    let pl = plan(p);
    let one = T::from_big(&BigInt::from(1));
    let mats: HashMap<Letter, Vec<T>> = sc
        .ints
        .iter()
        .map(|(l, v)| (*l, v.iter().map(T::from_big).collect()))
        .collect();
    let negs: HashMap<Letter, Vec<T>> = mats
        .iter()
        .map(|(l, v)| (*l, v.iter().map(|e| -e.clone()).collect()))
        .collect();
    let set_sizes: Vec<u32> = p.sets.iter().map(|s| s.len() as u32).collect();

    let states_at = |k: usize| -> Vec<Vec<u32>> {
        let lists: Vec<Vec<u32>> = pl.counts[k]
            .iter()
            .zip(&set_sizes)
            .map(|(&c, &n)| subsets(n, c))
            .collect();
        cartesian(&lists)
    };

    let end = pl.tokens.len();
    let mut next: HashMap<Vec<u32>, Dense<T>> = states_at(end)
        .into_iter()
        .map(|m| (m, Dense::identity(d, &one)))
        .collect();
    for k in (0..end).rev() {
        let side = d.pow(pl.orders[k] as u32);
        let states = states_at(k);
        let token = pl.tokens[k];
        let computed: Vec<(Vec<u32>, Dense<T>)> = states
            .into_par_iter()
            .map(|mask| {
                let value = match token {
                    Token::Break => Dense::kron_identity(d, &next[&mask]),
                    Token::Fixed(l) => {
                        let mut out = Dense::zeros(side);
                        Dense::add_left_mul(&mut out, &mats[&l], d, &next[&mask]);
                        out
                    }
                    Token::Alt { set } => {
                        let mut out = Dense::zeros(side);
                        let used = mask[set];
                        for v in 0..set_sizes[set] {
                            if used & (1 << v) != 0 {
                                continue;
                            }
                            let below = (!used) & ((1u32 << v) - 1);
                            let letter = p.sets[set][v as usize];
                            let m = if below.count_ones() % 2 == 0 {
                                &mats[&letter]
                            } else {
                                &negs[&letter]
                            };
                            let mut key = mask.clone();
                            key[set] |= 1 << v;
                            Dense::add_left_mul(&mut out, m, d, &next[&key]);
                        }
                        out
                    }
                };
                (mask, value)
            })
            .collect();
        next = computed.into_iter().collect();
    }
    let root = next
        .remove(&vec![0u32; p.sets.len()])
        .expect("root state");
    root.data
        .iter()
        .map(|v| {
            let b = v.to_big();
            if pl.base_sign < 0 {
                -b
            } else {
                b
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::alternate::{alternate, alternate_tensor, DEFAULT_TERM_CAP};
    use crate::ncpoly::poly::NcPoly;
    use crate::ncpoly::word::Family;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn sample() -> Assignment {
        let mut a = Assignment::new(2);
        let ms = [
            m(&[&[1, 2], &[3, -1]]),
            m(&[&[0, 1], &[5, 2]]),
            m(&[&[2, -3], &[1, 1]]),
            m(&[&[-1, 4], &[2, 0]]),
        ];
        for (i, x) in ms.iter().enumerate() {
            a.insert(Letter::x(i as u32 + 1), x.clone()).unwrap();
            a.insert(Letter::y(i as u32 + 1), x.transpose().scale(&ExactScalar::ratio(1, 2)))
                .unwrap();
        }
        a
    }

    #[test]
    fn subsets_enumerate() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![0]);
        assert_eq!(subsets(5, 5), vec![31]);
    }

    #[test]
    fn one_slot_matches_symbolic() {
        let xs: Vec<Letter> = (1..=4).map(Letter::x).collect();
        let ys: Vec<Letter> = (1..=2).map(Letter::y).collect();
        let w: Word = "x3.y2.x1.x4.y1.x2".parse().unwrap();
        let pat = MonomialPattern::new(vec![w.clone()], vec![xs.clone(), ys.clone()]).unwrap();
        let asg = sample();
        let sym = alternate(
            &alternate(&NcPoly::word(w), &xs, DEFAULT_TERM_CAP).unwrap(),
            &ys,
            DEFAULT_TERM_CAP,
        )
        .unwrap();
        assert_eq!(alt_eval_matrix(&pat, &asg).unwrap(), sym.eval(&asg).unwrap());
    }

    #[test]
    fn two_slots_match_symbolic() {
        let xs: Vec<Letter> = (1..=4).map(Letter::x).collect();
        let a: Word = "x2.y1.x4".parse().unwrap();
        let b: Word = "y3.x1.x3".parse().unwrap();
        let pat = MonomialPattern::new(vec![a.clone(), b.clone()], vec![xs.clone()]).unwrap();
        let asg = sample();
        let sym = alternate_tensor(&pat.as_tensor_poly().unwrap(), &xs, DEFAULT_TERM_CAP).unwrap();
        assert_eq!(
            alt_eval_stream(&pat, &asg).unwrap(),
            sym.eval_tensor(&asg).unwrap()
        );
    }

    #[test]
    fn repeated_matrix_vanishes() {
        let mut asg = sample();
        let x1 = asg.get(Letter::x(1)).unwrap().clone();
        asg.insert(Letter::x(2), x1).unwrap();
        let xs: Vec<Letter> = (1..=2).map(Letter::x).collect();
        let pat = MonomialPattern::new(vec![Word::letter(Letter::x(1)), Word::letter(Letter::x(2))], vec![xs])
            .unwrap();
        assert!(alt_eval_stream(&pat, &asg).unwrap().is_zero());
    }

    #[test]
    fn validation_and_budget() {
        let xs: Vec<Letter> = (1..=2).map(Letter::x).collect();
        let w = Word::run(Family::X, 1, 1);
        assert!(matches!(
            MonomialPattern::new(vec![w], vec![xs.clone()]),
            Err(Error::NotMultilinear(_))
        ));
        let pat = MonomialPattern::new(vec![Word::run(Family::X, 1, 2)], vec![xs]).unwrap();
        assert!(matches!(
            alt_eval_stream_with_budget(&pat, &sample(), 1),
            Err(Error::Budget { .. })
        ));
    }
}
