//! Swap and centrality verifiers for 2-slot tensor polynomials.

use super::report::{q, CheckReport, Provenance};
use crate::error::{Error, Result};
use crate::exact::{decompose_sigma2, swap_operator, ExactMatrix, ExactScalar, TensorOperator};
use crate::ncpoly::{
    random_assignment, random_matrix, random_traceless, seeded_rng, Assignment, Family, Letter,
    TensorPoly2,
};

/// Expected swap scalar at a point, when known.
pub type ScalarFn<'a> = &'a dyn Fn(&Assignment) -> Result<ExactScalar>;

/// Redraws a point when `expected` vanishes there, at most this many times.
const RESAMPLE: usize = 8;

fn draw(
    rng: &mut rand_chacha::ChaCha8Rng,
    d: usize,
    letters: &[Letter],
    expected: Option<ScalarFn>,
    notes: &mut Vec<String>,
) -> Result<Assignment> {
    for k in 0..RESAMPLE {
        let asg = random_assignment(rng, d, letters);
        match expected {
            Some(f) if f(&asg)?.is_zero() => {
                notes.push(format!("degenerate draw {k} resampled"));
            }
            _ => return Ok(asg),
        }
    }
    Err(Error::Degenerate("expected scalar vanished at every draw".into()))
}

fn check_trials(trials: usize) -> Result<()> {
    if trials < 3 {
        return Err(Error::Precondition(format!("trials = {trials}; need at least 3")));
    }
    Ok(())
}

/// `a = 0`, zero residual and some `b ≠ 0` in `t = a·Id + b·swap` at every point.
pub fn verify_swap(
    id: &str,
    anchor: &str,
    t: &TensorPoly2,
    d: usize,
    trials: usize,
    seed: u64,
    expected: Option<ScalarFn>,
) -> CheckReport {
    let mut r = CheckReport::new(id, anchor, seed).with_points(trials);
    if let Err(e) = verify_swap_into(&mut r, t, d, trials, seed, expected) {
        r.record_error(&e);
    }
    r
}

fn verify_swap_into(
    r: &mut CheckReport,
    t: &TensorPoly2,
    d: usize,
    trials: usize,
    seed: u64,
    expected: Option<ScalarFn>,
) -> Result<()> {
    check_trials(trials)?;
    let letters: Vec<Letter> = t.letters().into_iter().collect();
    let mut rng = seeded_rng(seed);
    let mut any_nonzero = false;
    let mut bs = vec![];
    for k in 0..trials {
        let asg = draw(&mut rng, d, &letters, expected, &mut r.notes)?;
        let dec = decompose_sigma2(&t.eval_tensor(&asg)?)?;
        r.require(dec.residual_zero, format!("point {k}: not in span of Id and swap"));
        r.require(dec.a.is_zero(), format!("point {k}: identity component {}", dec.a));
        any_nonzero |= !dec.b.is_zero();
        if let Some(f) = expected {
            let want = f(&asg)?;
            r.require(want == dec.b, format!("point {k}: scalar {} vs {}", dec.b, want));
        }
        bs.push(q(&dec.b));
    }
    r.require(any_nonzero, "swap scalar is zero at every point");
    r.measure("swap_scalars", bs);
    r.expect("identity_component", "0", Provenance::Paper);
    Ok(())
}

/// A `ζ` letter not used by `t`.
pub fn fresh_zeta(t: &TensorPoly2) -> Letter {
    let top = t
        .letters()
        .into_iter()
        .filter(|l| l.family() == Family::Zeta)
        .map(|l| l.index())
        .max()
        .unwrap_or(0);
    Letter::zeta(top + 1)
}

/// `Σ a_i ζ b_i` is `tr(ζ)·α` with `α` independent of `ζ`, and vanishes on
/// traceless `ζ`.
pub fn verify_central(
    id: &str,
    anchor: &str,
    t: &TensorPoly2,
    d: usize,
    trials: usize,
    seed: u64,
    expected: Option<ScalarFn>,
) -> CheckReport {
    let mut r = CheckReport::new(id, anchor, seed).with_points(trials);
    if let Err(e) = verify_central_into(&mut r, t, d, trials, seed, expected) {
        r.record_error(&e);
    }
    r
}

fn verify_central_into(
    r: &mut CheckReport,
    t: &TensorPoly2,
    d: usize,
    trials: usize,
    seed: u64,
    expected: Option<ScalarFn>,
) -> Result<()> {
    check_trials(trials)?;
    let zeta = fresh_zeta(t);
    let c = t.sandwich(zeta);
    let letters: Vec<Letter> = t.letters().into_iter().collect();
    let mut rng = seeded_rng(seed);
    let mut alphas = vec![];
    let mut any_nonzero = false;
    for k in 0..trials {
        let mut asg = draw(&mut rng, d, &letters, expected, &mut r.notes)?;
        let mut alpha: Option<ExactScalar> = None;
        for _ in 0..2 {
            let z = loop {
                let z = random_matrix(&mut rng, d);
                if !z.trace()?.is_zero() {
                    break z;
                }
            };
            let tz = z.trace()?;
            asg.insert(zeta, z)?;
            let v = c.eval(&asg)?;
            let Some(beta) = v.as_scalar() else {
                r.require(false, format!("point {k}: value is not a scalar matrix"));
                return Ok(());
            };
            let a = &beta / &tz;
            if let Some(prev) = &alpha {
                r.require(prev == &a, format!("point {k}: α depends on ζ"));
            }
            alpha = Some(a);
        }
        let alpha = alpha.expect("two draws");
        any_nonzero |= !alpha.is_zero();
        if let Some(f) = expected {
            let want = f(&asg)?;
            r.require(want == alpha, format!("point {k}: α {} vs {}", alpha, want));
        }
        for j in 0..10 {
            asg.insert(zeta, random_traceless(&mut rng, d))?;
            r.require(
                c.eval(&asg)?.is_zero(),
                format!("point {k}: nonzero at traceless ζ #{j}"),
            );
        }
        alphas.push(q(&alpha));
    }
    r.require(any_nonzero, "central value is zero at every point");
    r.measure("alpha", alphas);
    r.expect("traceless_value", "0", Provenance::Paper);
    Ok(())
}

fn conjugation_holds(s: &TensorOperator, a: &ExactMatrix, b: &ExactMatrix) -> Result<bool> {
    let d = a.rows();
    let ab = TensorOperator::new(d, 2, a.kron(b))?;
    let ba = TensorOperator::new(d, 2, b.kron(a))?;
    // s is its own inverse whenever s² = 1.
    Ok(s.compose(&ab)?.compose(s)? == ba)
}

/// `t² = 1`, `t(a⊗b)t⁻¹ = b⊗a`, `tr t = d`, and the same properties for `−t`.
pub fn goldman_properties(d: usize, seed: u64) -> CheckReport {
    let mut r = CheckReport::new(format!("identities.goldman.d{d}"), "eq:Gol1 rem:nou", seed)
        .with_points(3);
    let run = |r: &mut CheckReport| -> Result<()> {
        let s = swap_operator(d)?;
        let id = TensorOperator::identity(d, 2)?;
        let neg = s.scale(&ExactScalar::from(-1));
        r.require(s.compose(&s)? == id, "swap² = 1");
        r.require(neg.compose(&neg)? == id, "(−swap)² = 1");
        let mut rng = seeded_rng(seed);
        for k in 0..3 {
            let a = random_matrix(&mut rng, d);
            let b = random_matrix(&mut rng, d);
            r.require(conjugation_holds(&s, &a, &b)?, format!("point {k}: conjugation"));
            r.require(conjugation_holds(&neg, &a, &b)?, format!("point {k}: −swap conjugation"));
        }
        r.require(s.trace() == ExactScalar::from(d), "tr(swap) = d");
        r.measure("trace", q(&s.trace()));
        r.expect("trace", d, Provenance::Trivial);
        r.measure("minus_swap_satisfies", true);
        r.expect("minus_swap_satisfies", true, Provenance::Paper);
        Ok(())
    };
    if let Err(e) = run(&mut r) {
        r.record_error(&e);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::NcPoly;
    use crate::verify::report::Status;

    #[test]
    fn negative_control() {
        let x = NcPoly::var(Letter::x(1));
        let t = TensorPoly2::tensor(&x, &x);
        assert_eq!(verify_swap("n", "", &t, 2, 3, 1, None).status, Status::Fail);
        assert_eq!(verify_central("n", "", &t, 2, 3, 1, None).status, Status::Fail);
        assert_eq!(verify_swap("n", "", &t, 2, 2, 1, None).status, Status::Fail);
    }

    #[test]
    fn goldman() {
        for d in 2..=4 {
            assert_eq!(goldman_properties(d, 3).status, Status::Pass);
        }
    }
}
