//! Class functions and the group algebra `F[S_n]` acting on `(F^d)^{⊗n}`.

use std::collections::BTreeMap;

use super::partition::{partitions, Partition};
use super::permutation::Permutation;
use crate::error::{Error, Result};
use crate::exact::tensor::{checked_pow, perm_target, unflatten};
use crate::exact::{ExactMatrix, ExactScalar, TensorOperator};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, ExactScalar>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> ExactScalar) -> Self {
        let values = partitions(n).into_iter().map(|p| {
            let v = f(&p);
            (p, v)
        });
        ClassFunction {
            n,
            values: values.collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, mu: &Partition) -> Result<&ExactScalar> {
        self.values
            .get(mu)
            .ok_or_else(|| Error::Dimension(format!("class {mu} is not a partition of {}", self.n)))
    }

    /// Value at the class of `sigma`.
    pub fn at(&self, sigma: &Permutation) -> &ExactScalar {
        &self.values[&sigma.cycle_type()]
    }

    /// Entries in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &ExactScalar)> {
        self.values.iter()
    }

    pub fn scaled(&self, c: &ExactScalar) -> Self {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }
}

/// A finitely supported element `Σ c_σ σ` of `F[S_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    coeffs: BTreeMap<Permutation, ExactScalar>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(sigma: Permutation, c: ExactScalar) -> Self {
        let mut g = Self::zero(sigma.n());
        g.add_term(sigma, c);
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, sigma: Permutation, c: ExactScalar) {
        assert_eq!(sigma.n(), self.n, "permutation degree");
        if c.is_zero() {
            return;
        }
        let slot = self
            .coeffs
            .entry(sigma.clone())
            .or_insert_with(ExactScalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&sigma);
        }
    }

    pub fn coeff(&self, sigma: &Permutation) -> ExactScalar {
        self.coeffs.get(sigma).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &ExactScalar)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        let mut out = Self::zero(self.n);
        for (s, v) in &self.coeffs {
            out.add_term(s.clone(), v * c);
        }
        out
    }

    /// Convolution `Σ g_σ h_τ (στ)`; matches operator composition.
    pub fn convolve(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "group algebra degree");
        let mut acc: BTreeMap<Permutation, ExactScalar> = BTreeMap::new();
        for (s, a) in &self.coeffs {
            for (t, b) in &other.coeffs {
                *acc.entry(s.compose(t)).or_insert_with(ExactScalar::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        GroupAlgebraElement {
            n: self.n,
            coeffs: acc,
        }
    }
}

/// Expands `Σ_μ c(μ) C_μ`, with `C_μ` the class sum.
pub fn class_to_algebra(c: &ClassFunction) -> GroupAlgebraElement {
    let mut g = GroupAlgebraElement::zero(c.n());
    for sigma in Permutation::all(c.n()) {
        let v = c.at(&sigma).clone();
        g.add_term(sigma, v);
    }
    g
}

/// `Σ_σ g_σ P(σ)` as a dense operator.
pub fn algebra_to_operator(g: &GroupAlgebraElement, d: usize) -> Result<TensorOperator> {
    let n = g.n();
    let size = checked_pow(d, n)?;
    let mut mat = ExactMatrix::zeros(size, size);
    for src in 0..size {
        let digits = unflatten(src, d, n);
        for (sigma, c) in g.iter() {
            let dst = perm_target(sigma, &digits, d);
            let v = mat.get(dst, src) + c;
            mat.set(dst, src, v);
        }
    }
    TensorOperator::new(d, n, mat)
}

/// Whether `Σ_σ g_σ P(σ)` equals `c·Id` on `(F^d)^{⊗n}`, checked column by
/// column without building the operator.
pub fn acts_as_scalar(g: &GroupAlgebraElement, d: usize, c: &ExactScalar) -> Result<bool> {
    let n = g.n();
    let size = checked_pow(d, n)?;
    let terms: Vec<_> = g.iter().collect();
    let mut col: BTreeMap<usize, ExactScalar> = BTreeMap::new();
    for src in 0..size {
        col.clear();
        let digits = unflatten(src, d, n);
        for (sigma, v) in &terms {
            *col.entry(perm_target(sigma, &digits, d))
                .or_insert_with(ExactScalar::zero) += *v;
        }
        for (dst, v) in &col {
            let want = if *dst == src { c.clone() } else { ExactScalar::zero() };
            if *v != want {
                return Ok(false);
            }
        }
        if !col.contains_key(&src) && !c.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Φ(A) = Σ_σ tr(P(σ)∘A) σ⁻¹`.
pub fn phi_transform(a: &TensorOperator) -> Result<GroupAlgebraElement> {
    let mut g = GroupAlgebraElement::zero(a.n());
    for sigma in Permutation::all(a.n()) {
        let t = a.trace_with_perm(&sigma)?;
        g.add_term(sigma.inverse(), t);
    }
    Ok(g)
}

/// `Φ(1) = Σ_σ d^{#cycles(σ)} σ⁻¹` without touching tensor space.
pub fn phi_of_identity(n: usize, d: usize) -> GroupAlgebraElement {
    let mut g = GroupAlgebraElement::zero(n);
    for sigma in Permutation::all(n) {
        let c = ExactScalar::from(d).pow(sigma.cycle_count() as u32);
        g.add_term(sigma.inverse(), c);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::swap_operator;

    #[test]
    fn phi_of_small_operators() {
        let t = Permutation::transposition(2, 0, 1);
        let e = Permutation::identity(2);
        let g = phi_transform(&TensorOperator::identity(3, 2).unwrap()).unwrap();
        assert_eq!(g.coeff(&e), ExactScalar::from(9));
        assert_eq!(g.coeff(&t), ExactScalar::from(3));
        assert_eq!(g, phi_of_identity(2, 3));
        let g = phi_transform(&swap_operator(2).unwrap()).unwrap();
        assert_eq!(g.coeff(&e), ExactScalar::from(2));
        assert_eq!(g.coeff(&t), ExactScalar::from(4));
    }

    #[test]
    fn antisymmetrizer_collapses_when_n_exceeds_d() {
        let mut g = GroupAlgebraElement::zero(3);
        for s in Permutation::all(3) {
            let c = ExactScalar::from(s.sign());
            g.add_term(s, c);
        }
        assert!(algebra_to_operator(&g, 2).unwrap().is_zero());
        assert!(acts_as_scalar(&g, 2, &ExactScalar::zero()).unwrap());
        assert!(!algebra_to_operator(&g, 3).unwrap().is_zero());
    }

    #[test]
    fn support_stays_exact() {
        let s = Permutation::transposition(2, 0, 1);
        let mut g = GroupAlgebraElement::basis(s.clone(), ExactScalar::one());
        g.add_term(s, -ExactScalar::one());
        assert!(g.is_zero());
    }
}
