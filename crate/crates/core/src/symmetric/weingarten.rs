//! The Weingarten class function `Wg(n, d)`.

use num_bigint::BigInt;

use super::algebra::ClassFunction;
use super::character::character_i64;
use super::partition::{gl_dimension, partitions, Partition};
use crate::exact::ExactScalar;

/// `a_μ = (n!)⁻² Σ_{λ⊢n, ht(λ)≤d} (f^λ)² χ_λ(μ) / s_{λ,d}(1)`.
///
/// With this normalization `Φ(1) ⋆ Wg` acts as the identity on
/// `(F^d)^{⊗n}`. For `n > d` the inverse is only determined modulo the
/// isotypic components of height `> d`; this is the representative with
/// those components set to zero.
pub fn weingarten(n: usize, d: usize) -> ClassFunction {
    assert!(n >= 1 && d >= 1, "weingarten needs n, d >= 1");
    let lambdas: Vec<(Partition, BigInt, ExactScalar)> = partitions(n)
        .into_iter()
        .filter(|l| l.height() <= d)
        .map(|l| {
            let f = l.dimension();
            let s = gl_dimension(&l, d);
            (l, f, s)
        })
        .collect();
    let nf = ExactScalar::factorial(n as u32);
    let norm = &nf * &nf;
    ClassFunction::from_fn(n, |mu| {
        let mut acc = ExactScalar::zero();
        for (l, f, s) in &lambdas {
            let num = ExactScalar::from(f * f * character_i64(l, mu));
            acc += num / s;
        }
        acc / &norm
    })
}

/// `Wg(n, d)` multiplied by `(n!)²`, the scaling used in printed tables.
pub fn weingarten_scaled(n: usize, d: usize) -> ClassFunction {
    let nf = ExactScalar::factorial(n as u32);
    weingarten(n, d).scaled(&(&nf * &nf))
}

/// Closed form of the full-cycle value of `Wg(d, d)`:
/// `(-1)^{d-1} d / ((d!)² (2d-1))`.
pub fn full_cycle_closed_form(d: usize) -> ExactScalar {
    let df = ExactScalar::factorial(d as u32);
    let v = ExactScalar::from(d) / (&df * &df * ExactScalar::from(2 * d - 1));
    if d % 2 == 1 {
        v
    } else {
        -v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn n2_d2() {
        let w = weingarten(2, 2);
        assert_eq!(w.get(&p(&[1, 1])).unwrap(), &ExactScalar::ratio(1, 3));
        assert_eq!(w.get(&p(&[2])).unwrap(), &ExactScalar::ratio(-1, 6));
    }

    #[test]
    fn full_cycle() {
        for d in 2..=6 {
            let w = weingarten(d, d);
            assert_eq!(w.get(&p(&[d])).unwrap(), &full_cycle_closed_form(d));
        }
    }

    #[test]
    fn n3_d2_scaled() {
        let w = weingarten_scaled(3, 2);
        let got: Vec<String> = w.iter().map(|(_, v)| v.to_string()).collect();
        assert_eq!(got, vec!["-7/4", "1/4", "17/4"]);
    }
}
