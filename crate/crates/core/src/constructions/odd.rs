//! Odd `d`. `G_1 = Alt_X Alt_Y A⊗B` has trace zero; for `d = 3` a second
//! polynomial `G_2` with `tr((1,2)G_2) = 0` is built from the split monomials
//! `M_1`, `M_2`, and for general odd `d` only the coefficient of `tr(G_2)` is
//! computed, on the class-function level.

use serde::Serialize;

use super::certificate::{constant_normalized, PointSample, SwapCertificate};
use super::regev::{family_mats, random_xy, RegevPattern};
use super::tcal::{letters, t_cal};
use crate::error::{Error, Result};
use crate::exact::{ExactScalar, TensorOperator};
use crate::ncpoly::{
    alt_eval_stream, seeded_rng, split_alt_eval, Assignment, Contraction, Family, MonomialPattern,
    Operand, Word,
};
use crate::symmetric::{
    algebra_to_operator, class_to_algebra, weingarten, GroupAlgebraElement, Partition, Permutation,
};

/// `A = m_1(X)m_2(Y)⋯m_{d−1}(Y)m_d(X)`, `B = m_d(Y)m_{d−1}(X)⋯m_2(X)m_1(Y)`.
pub fn g1_contraction(d: usize) -> Contraction {
    let fam = |i: usize, odd: Operand, even: Operand| if i % 2 == 1 { odd } else { even };
    let a = (1..=d).map(|i| (fam(i, Operand::X, Operand::Y), i - 1)).collect();
    let b = (1..=d).rev().map(|i| (fam(i, Operand::Y, Operand::X), i - 1)).collect();
    Contraction::new(vec![a, b])
}

pub fn eval_g1(d: usize, asg: &Assignment) -> Result<TensorOperator> {
    if d % 2 == 0 {
        return Err(Error::Precondition(format!("d = {d} is even; use the even pair")));
    }
    let p = RegevPattern::new(d);
    split_alt_eval(&p.x_pattern(), &p.y_pattern(), &g1_contraction(d), asg)
}

/// `a_d = Wg(d,d)` at the full cycle and the solution
/// `(a, b) = (a_d/(d(1−d²)), −a_d/(1−d²))` of `tr G_1 = 0`, `tr((1,2)G_1) = a_d`.
pub fn odd_g1_components(d: usize) -> (ExactScalar, ExactScalar, ExactScalar) {
    let a_d = weingarten(d, d)
        .get(&Partition::new(vec![d]))
        .expect("class exists")
        .clone();
    let dd = ExactScalar::from(d);
    let one_m = ExactScalar::one() - &(&dd * &dd);
    let a = &a_d / &(&dd * &one_m);
    let b = -(&a_d / &one_m);
    (a_d, a, b)
}

fn w(s: &str) -> Word {
    s.parse().expect("literal word")
}

/// `M_1 = x_1 ⊗ x_3x_4 ⊗ m_3(X) ⊗ x_2`.
pub fn m1_pattern() -> MonomialPattern {
    MonomialPattern::new(
        vec![w("x1"), w("x3.x4"), Word::run(Family::X, 5, 9), w("x2")],
        vec![letters(Family::X, 9)],
    )
    .expect("valid pattern")
}

/// `M_2 = y_1 ⊗ m_3(Y) ⊗ y_2 ⊗ y_3y_4`.
pub fn m2_pattern() -> MonomialPattern {
    MonomialPattern::new(
        vec![w("y1"), Word::run(Family::Y, 5, 9), w("y2"), w("y3.y4")],
        vec![letters(Family::Y, 9)],
    )
    .expect("valid pattern")
}

/// `A = x_1y_1x_3x_4m_3(Y)`, `B = y_2x_2y_3y_4m_3(X)` in terms of the factors
/// of `M_1` and `M_2`.
pub fn g2_contraction() -> Contraction {
    use Operand::{X, Y};
    Contraction::new(vec![
        vec![(X, 0), (Y, 0), (X, 1), (Y, 1)],
        vec![(Y, 2), (X, 3), (Y, 3), (X, 2)],
    ])
}

pub fn eval_g2_d3(asg: &Assignment) -> Result<TensorOperator> {
    if asg.d() != 3 {
        return Err(Error::Dimension("G2 is built for d = 3".into()));
    }
    split_alt_eval(&m1_pattern(), &m2_pattern(), &g2_contraction(), asg)
}

fn transposition(n: usize, i: usize, j: usize) -> Permutation {
    Permutation::transposition(n, i - 1, j - 1)
}

/// `[ρ1 − ρ2]` in `F[S_4]`.
fn difference(n: usize, plus: (usize, usize), minus: (usize, usize)) -> GroupAlgebraElement {
    let mut g = GroupAlgebraElement::basis(transposition(n, plus.0, plus.1), ExactScalar::one());
    g.add_term(transposition(n, minus.0, minus.1), -ExactScalar::one());
    g
}

/// `[(3,4) − (1,4)]·Wg(4,3)` and `[(2,4) − (1,2)]·Wg(4,3)`, as operators.
pub fn almu_operators() -> Result<(TensorOperator, TensorOperator)> {
    let wg = class_to_algebra(&weingarten(4, 3));
    let y = difference(4, (3, 4), (1, 4)).convolve(&wg);
    let x = difference(4, (2, 4), (1, 2)).convolve(&wg);
    Ok((algebra_to_operator(&y, 3)?, algebra_to_operator(&x, 3)?))
}

/// Which `σ ∈ S_4` give a nonzero `Alt tr(σ⁻¹ M)`, as multiples of `𝒯_3`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SemCase {
    pub sigma: String,
    pub multiple: ExactScalar,
}

fn sem_cases(op: &TensorOperator, t: &ExactScalar) -> Result<Vec<SemCase>> {
    let inv = t.recip()?;
    let mut out = Vec::new();
    for sigma in Permutation::all(4) {
        let v = op.trace_with_perm(&sigma.inverse())?;
        if !v.is_zero() {
            out.push(SemCase {
                sigma: sigma.to_string(),
                multiple: v * &inv,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct OddReport {
    pub d: usize,
    pub a_d: ExactScalar,
    /// Solved `(a, b)` for `G_1`.
    pub g1_solved: (ExactScalar, ExactScalar),
    /// Measured `(a, b)/𝒯𝒯` for `G_1`, `G_2` when constant across points.
    pub g1_measured: Option<(ExactScalar, ExactScalar)>,
    pub g1_trace_zero: bool,
    pub g2_measured: Option<(ExactScalar, ExactScalar)>,
    pub g2_swap_trace_zero: bool,
    /// `tr(G_2)/𝒯𝒯` measured, and `−b_{1⁴} + b_{3,1}` from `Wg(4,3)`.
    pub g2_trace: Option<ExactScalar>,
    pub g2_trace_predicted: ExactScalar,
    pub sem_m1: Vec<SemCase>,
    pub sem_m2: Vec<SemCase>,
    pub almu0: bool,
    pub almu: bool,
    pub certificate: SwapCertificate,
}

fn constant_ratio(v: &[(ExactScalar, ExactScalar)]) -> Option<ExactScalar> {
    let first = &v.first()?.0 / &v.first()?.1;
    v.iter().all(|(a, b)| a / b == first).then_some(first)
}

/// Everything for `d = 3` at `points` random points.
pub fn odd_d3_report(points: usize, seed: u64) -> Result<OddReport> {
    let d = 3;
    let (a_d, ga, gb) = odd_g1_components(d);
    let wg = weingarten(4, 3);
    let predicted = wg.get(&Partition::new(vec![3, 1]))? - wg.get(&Partition::new(vec![1, 1, 1, 1]))?;
    let (op_y, op_x) = almu_operators()?;
    let mut rng = seeded_rng(seed);
    let (mut s1, mut s2, mut sc) = (vec![], vec![], vec![]);
    let mut traces = vec![];
    let (mut t1_zero, mut t2_zero, mut almu0, mut almu) = (true, true, true, true);
    let mut sem_m1 = vec![];
    let mut sem_m2 = vec![];
    // Coefficients killing the identity component, from the solved values.
    let (g2a, _) = g2_components(&predicted);
    let (p, q, _) = super::even::primitive_pair(&-(&g2a), &ga);
    let swap = Permutation::transposition(2, 0, 1);
    for k in 0..points {
        let asg = random_xy(&mut rng, d);
        let tx = t_cal(&family_mats(&asg, Family::X)?)?;
        let ty = t_cal(&family_mats(&asg, Family::Y)?)?;
        let tt = &tx * &ty;
        let g1 = eval_g1(d, &asg)?;
        let ax = alt_eval_stream(&m1_pattern(), &asg)?;
        let ay = alt_eval_stream(&m2_pattern(), &asg)?;
        let g2 = crate::ncpoly::contract(&ax, &ay, &g2_contraction())?;
        t1_zero &= g1.trace().is_zero();
        t2_zero &= g2.trace_with_perm(&swap)?.is_zero();
        traces.push((g2.trace(), tt.clone()));
        almu0 &= ay == op_y.scale(&ty);
        almu &= ax == op_x.scale(&tx);
        if k == 0 {
            sem_m1 = sem_cases(&ax, &tx)?;
            sem_m2 = sem_cases(&ay, &ty)?;
        }
        let comb = g1.scale(&p).try_add(&g2.scale(&q))?;
        s1.push(PointSample::measure(&g1, tt.clone())?);
        s2.push(PointSample::measure(&g2, tt.clone())?);
        sc.push(PointSample::measure(&comb, tt)?);
    }
    let coeffs = vec![("G1".to_string(), p), ("G2".to_string(), q)];
    Ok(OddReport {
        d,
        a_d,
        g1_solved: (ga, gb),
        g1_measured: constant_normalized(&s1),
        g1_trace_zero: t1_zero,
        g2_measured: constant_normalized(&s2),
        g2_swap_trace_zero: t2_zero,
        g2_trace: constant_ratio(&traces),
        g2_trace_predicted: predicted,
        sem_m1,
        sem_m2,
        almu0,
        almu,
        certificate: SwapCertificate::assemble("odd-d3", coeffs, sc),
    })
}

/// `(a, b)` of `G_2` from `tr G_2 = t`, `tr((1,2)G_2) = 0` at `d = 3`.
pub fn g2_components(t: &ExactScalar) -> (ExactScalar, ExactScalar) {
    // 9a + 3b = t, 3a + 9b = 0
    let b = -(t / &ExactScalar::from(24));
    let a = -(&b * &ExactScalar::from(3));
    (a, b)
}

/// The four `σ` contributing to `tr(G_2)` for `d = 2h−1`, with signs.
pub fn odd_sigmas(h: usize) -> Result<Vec<(Permutation, i32)>> {
    if h < 2 {
        return Err(Error::Precondition(format!("h = {h}; need h >= 2")));
    }
    let n = 2 * h;
    let first: Vec<usize> = (1..=h).collect();
    let second: Vec<usize> = (h + 1..=n).collect();
    let tau = Permutation::from_cycles(n, &[&first, &second])?;
    let t = |i, j| transposition(n, i, j);
    let cases = [
        ((3, 4), (1, 2), -1),
        ((3, 4), (2, 4), 1),
        ((1, 4), (1, 2), 1),
        ((1, 4), (2, 4), -1),
    ];
    Ok(cases
        .iter()
        .map(|&(r, p, s)| (t(r.0, r.1).compose(&t(p.0, p.1)).compose(&tau), s))
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct OddCoefficient {
    pub h: usize,
    pub d: usize,
    /// `−b_{1²,h−2,h} + 2b_{h,h} − b_{1,2,h−3,h}` on `Wg(d+1, d)`; for `h = 2`
    /// the classes degenerate and the four `σ` are summed directly.
    pub value: ExactScalar,
    /// `value · ((d+1)!)²`, the scaling of the printed tables.
    pub scaled_n: ExactScalar,
    /// `value · (d!)²`.
    pub scaled_d: ExactScalar,
    /// Cycle types of the four `σ = ρπτ_h` with the literal
    /// `τ_h = (1,…,h)(h+1,…,2h)`, and the signed sum of their `Wg` values.
    pub literal_terms: Vec<(String, i32)>,
    pub literal_value: ExactScalar,
    pub literal_agrees: bool,
    pub nonzero: bool,
}

fn class_formula(h: usize, wg: &crate::symmetric::ClassFunction) -> Result<ExactScalar> {
    let part = |v: Vec<usize>| Partition::new(v.into_iter().filter(|&k| k > 0).collect());
    let b1 = wg.get(&part(vec![1, 1, h - 2, h]))?;
    let b2 = wg.get(&part(vec![h, h]))?;
    let b3 = wg.get(&part(vec![1, 2, h - 3, h]))?;
    Ok(-b1 + &(b2 * &ExactScalar::from(2)) - b3)
}

pub fn odd_coefficient(h: usize) -> Result<OddCoefficient> {
    let sig = odd_sigmas(h)?;
    let d = 2 * h - 1;
    let wg = weingarten(d + 1, d);
    let mut literal_value = ExactScalar::zero();
    let mut literal_terms = vec![];
    for (s, c) in &sig {
        literal_value += &(wg.at(s) * &ExactScalar::from(*c as i64));
        literal_terms.push((s.cycle_type().label(), *c));
    }
    let value = if h == 2 {
        literal_value.clone()
    } else {
        class_formula(h, &wg)?
    };
    let fnp = ExactScalar::factorial(d as u32 + 1);
    let fd = ExactScalar::factorial(d as u32);
    Ok(OddCoefficient {
        h,
        d,
        scaled_n: &value * &(&fnp * &fnp),
        scaled_d: &value * &(&fd * &fd),
        literal_agrees: literal_value == value,
        literal_terms,
        literal_value,
        nonzero: !value.is_zero(),
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g1_solution_d3() {
        let (a_d, a, b) = odd_g1_components(3);
        assert_eq!(a_d, ExactScalar::ratio(1, 60));
        assert_eq!((a, b), (ExactScalar::ratio(-1, 1440), ExactScalar::ratio(1, 480)));
    }

    #[test]
    fn coefficient_h2_matches_g2_trace() {
        let c = odd_coefficient(2).unwrap();
        let wg = weingarten(4, 3);
        let expect = wg.get(&Partition::new(vec![3, 1])).unwrap()
            - wg.get(&Partition::new(vec![1, 1, 1, 1])).unwrap();
        assert_eq!(c.value, expect);
        assert_eq!(c.scaled_n, ExactScalar::ratio(-64, 5));
    }

    #[test]
    fn coefficient_h3_and_up() {
        let c = odd_coefficient(3).unwrap();
        assert_eq!(c.scaled_n, ExactScalar::ratio(-1867, 105));
        assert!(!c.literal_agrees);
        for h in 4..=5 {
            let c = odd_coefficient(h).unwrap();
            assert!(c.literal_agrees && c.nonzero, "{c:?}");
        }
    }

    #[test]
    fn d3_report() {
        let r = odd_d3_report(2, 9).unwrap();
        assert!(r.g1_trace_zero && r.g2_swap_trace_zero && r.almu0 && r.almu);
        assert_eq!(r.g1_measured, Some(r.g1_solved.clone()));
        assert_eq!(r.g2_trace, Some(r.g2_trace_predicted.clone()));
        assert_eq!(r.g2_measured, Some(g2_components(&r.g2_trace_predicted)));
        let sem = |v: &[SemCase]| {
            let mut v: Vec<(String, ExactScalar)> =
                v.iter().map(|c| (c.sigma.clone(), c.multiple.clone())).collect();
            v.sort();
            v
        };
        let one = ExactScalar::one;
        assert_eq!(sem(&r.sem_m1), vec![("(1 2)".into(), -one()), ("(2 4)".into(), one())]);
        assert_eq!(sem(&r.sem_m2), vec![("(1 4)".into(), -one()), ("(3 4)".into(), one())]);
        assert!(r.certificate.valid);
        assert_eq!(r.certificate.multiplier, Some(ExactScalar::ratio(1, 135)));
    }
}
