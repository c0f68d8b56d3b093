//! Symbolic alternation `Alt_V p = Σ_σ ε_σ p(v_{σ(1)}, …)`.

use std::collections::HashMap;

use super::poly::NcPoly;
use super::tensor::TensorPoly2;
use super::word::{Family, Letter, Word};
use crate::error::{Error, Result};
use crate::exact::ExactScalar;
use crate::symmetric::Permutation;

pub const DEFAULT_TERM_CAP: u128 = 10_000_000;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).try_fold(1u128, |a, k| a.checked_mul(k)).unwrap_or(u128::MAX)
}

fn check_multilinear<'a>(
    words: impl Iterator<Item = Vec<&'a Word>>,
    vars: &[Letter],
) -> Result<()> {
    for ws in words {
        for &v in vars {
            let k: usize = ws.iter().map(|w| w.count(v)).sum();
            if k != 1 {
                return Err(Error::NotMultilinear(format!(
                    "{v} occurs {k} times in a term"
                )));
            }
        }
    }
    Ok(())
}

fn check_cap(terms: usize, vars: &[Letter], cap: u128) -> Result<()> {
    let estimated = (terms as u128).saturating_mul(factorial(vars.len()));
    if estimated > cap {
        return Err(Error::TermCap { estimated, cap });
    }
    Ok(())
}

/// Substitutions `v_i ↦ v_{σ(i)}` with signs, for all σ.
fn substitutions(vars: &[Letter]) -> Vec<(HashMap<Letter, Letter>, i32)> {
    Permutation::all(vars.len())
        .into_iter()
        .map(|s| {
            let map = vars
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, vars[s.image(i)]))
                .collect();
            (map, s.sign())
        })
        .collect()
}

fn apply(map: &HashMap<Letter, Letter>, w: &Word) -> Word {
    w.substitute(|l| *map.get(&l).unwrap_or(&l))
}

pub fn alternate(p: &NcPoly, vars: &[Letter], cap: u128) -> Result<NcPoly> {
    check_multilinear(p.terms().map(|(w, _)| vec![w]), vars)?;
    check_cap(p.len(), vars, cap)?;
    let mut out = NcPoly::zero();
    for (map, sign) in substitutions(vars) {
        let s = ExactScalar::from(sign);
        for (w, c) in p.terms() {
            out.add_term(apply(&map, w), c * &s);
        }
    }
    Ok(out)
}

pub fn alternate_tensor(t: &TensorPoly2, vars: &[Letter], cap: u128) -> Result<TensorPoly2> {
    check_multilinear(t.terms().map(|(a, b, _)| vec![a, b]), vars)?;
    check_cap(t.len(), vars, cap)?;
    let mut out = TensorPoly2::zero();
    for (map, sign) in substitutions(vars) {
        let s = ExactScalar::from(sign);
        for (a, b, c) in t.terms() {
            out.add_term(apply(&map, a), apply(&map, b), c * &s);
        }
    }
    Ok(out)
}

/// Letters `family_1 … family_k`.
pub fn family_vars(family: Family, k: usize) -> Vec<Letter> {
    (1..=k as u32).map(|i| Letter::new(family, i)).collect()
}

/// `St_k(x_1, …, x_k)`.
pub fn standard_poly(k: usize) -> Result<NcPoly> {
    let vars = family_vars(Family::X, k);
    alternate(&NcPoly::word(Word::new(vars.clone())), &vars, DEFAULT_TERM_CAP)
}

/// `C_m = Σ_σ ε_σ x_{σ(1)} y_1 x_{σ(2)} y_2 ⋯ y_{m-1} x_{σ(m)}`.
pub fn capelli_poly(m: usize) -> Result<NcPoly> {
    let xs = family_vars(Family::X, m);
    let mut letters = Vec::with_capacity(2 * m);
    for (i, &x) in xs.iter().enumerate() {
        letters.push(x);
        if i + 1 < m {
            letters.push(Letter::y(i as u32 + 1));
        }
    }
    alternate(&NcPoly::word(Word::new(letters)), &xs, DEFAULT_TERM_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let st2 = standard_poly(2).unwrap();
        let x1 = NcPoly::var(Letter::x(1));
        let x2 = NcPoly::var(Letter::x(2));
        assert_eq!(st2, NcPoly::commutator(&x1, &x2));
        assert_eq!(standard_poly(4).unwrap().len(), 24);
        let c2 = capelli_poly(2).unwrap();
        assert_eq!(c2.to_string(), "1*x1.y1.x2 + -1*x2.y1.x1");
        let c4 = capelli_poly(4).unwrap();
        assert_eq!(c4.len(), 24);
        assert_eq!(c4.homogeneous_degree(), Some(7));
    }

    #[test]
    fn double_alternation_scales() {
        for k in 1..=4 {
            let vars = family_vars(Family::X, k);
            let st = standard_poly(k).unwrap();
            let twice = alternate(&st, &vars, DEFAULT_TERM_CAP).unwrap();
            assert_eq!(twice, st.scale(&ExactScalar::from(factorial(k) as u64)));
        }
    }

    #[test]
    fn guards() {
        let p = NcPoly::word("x1.x1".parse().unwrap());
        assert!(matches!(
            alternate(&p, &[Letter::x(1)], DEFAULT_TERM_CAP),
            Err(Error::NotMultilinear(_))
        ));
        let vars = family_vars(Family::X, 6);
        let p = NcPoly::word(Word::new(vars.clone()));
        assert!(matches!(alternate(&p, &vars, 100), Err(Error::TermCap { estimated: 720, cap: 100 })));
    }
}
