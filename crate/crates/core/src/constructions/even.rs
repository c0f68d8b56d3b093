//! Even `d`: `G_1 = Alt_X Alt_Y A⊗B`, `G_2 = Alt_X Alt_Y A⊗C` and the swap
//! combination that kills the identity component.

use serde::Serialize;

use super::certificate::{constant_normalized, PointSample, SwapCertificate};
use super::regev::{family_mats, random_xy, RegevPattern};
use super::tcal::{t_cal, vec_det};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar, TensorOperator};
use crate::ncpoly::{seeded_rng, split_alt_eval, Assignment, Contraction, Family, MonomialPattern, Operand, Word};
use crate::symmetric::{weingarten, Partition};

type Chain = Vec<(Operand, usize)>;

/// `A = m_1(X)m_2(Y)m_3(X)⋯m_{d−1}(X)m_d(Y)`.
fn chain_a(d: usize) -> Chain {
    (1..=d)
        .map(|i| (if i % 2 == 1 { Operand::X } else { Operand::Y }, i - 1))
        .collect()
}

/// `B = m_d(X)m_{d−1}(Y)⋯m_2(X)m_1(Y)`.
fn chain_b(d: usize) -> Chain {
    (1..=d)
        .rev()
        .map(|i| (if i % 2 == 0 { Operand::X } else { Operand::Y }, i - 1))
        .collect()
}

/// `C = m_1(Y)m_d(X)m_{d−1}(Y)⋯m_2(X)`.
fn chain_c(d: usize) -> Chain {
    let mut c = vec![(Operand::Y, 0)];
    c.extend(
        (2..=d)
            .rev()
            .map(|i| (if i % 2 == 0 { Operand::X } else { Operand::Y }, i - 1)),
    );
    c
}

#[derive(Clone, Debug)]
pub struct EvenSwapPair {
    pub d: usize,
    pub regev: RegevPattern,
    pub a: Word,
    pub b: Word,
    pub c: Word,
    /// `A⊗B` and `A⊗C`, alternated in `X` and in `Y`.
    pub g1: MonomialPattern,
    pub g2: MonomialPattern,
}

fn chain_word(r: &RegevPattern, chain: &Chain) -> Word {
    chain.iter().fold(Word::one(), |w, &(op, i)| match op {
        Operand::X => w.concat(&r.mx[i]),
        Operand::Y => w.concat(&r.my[i]),
    })
}

impl EvenSwapPair {
    pub fn contraction_g1(&self) -> Contraction {
        Contraction::new(vec![chain_a(self.d), chain_b(self.d)])
    }

    pub fn contraction_g2(&self) -> Contraction {
        Contraction::new(vec![chain_a(self.d), chain_c(self.d)])
    }

    fn eval_with(&self, c: &Contraction, asg: &Assignment) -> Result<TensorOperator> {
        split_alt_eval(&self.regev.x_pattern(), &self.regev.y_pattern(), c, asg)
    }

    pub fn eval_g1(&self, asg: &Assignment) -> Result<TensorOperator> {
        self.eval_with(&self.contraction_g1(), asg)
    }

    pub fn eval_g2(&self, asg: &Assignment) -> Result<TensorOperator> {
        self.eval_with(&self.contraction_g2(), asg)
    }

    /// `Alt_X Alt_Y(A·B)` as a single matrix.
    pub fn eval_ab(&self, asg: &Assignment) -> Result<ExactMatrix> {
        let mut ch = chain_a(self.d);
        ch.extend(chain_b(self.d));
        Ok(self.eval_with(&Contraction::new(vec![ch]), asg)?.into_matrix())
    }

    pub fn eval_ac(&self, asg: &Assignment) -> Result<ExactMatrix> {
        let mut ch = chain_a(self.d);
        ch.extend(chain_c(self.d));
        Ok(self.eval_with(&Contraction::new(vec![ch]), asg)?.into_matrix())
    }
}

pub fn even_swap_pair(d: usize) -> Result<EvenSwapPair> {
    if d == 0 || d % 2 == 1 {
        return Err(Error::Precondition(format!(
            "d = {d} is odd; the G1/G2 pair needs even d"
        )));
    }
    let regev = RegevPattern::new(d);
    let a = chain_word(&regev, &chain_a(d));
    let b = chain_word(&regev, &chain_b(d));
    let c = chain_word(&regev, &chain_c(d));
    let xs = regev.x_letters();
    let ys = regev.y_letters();
    let g1 = MonomialPattern::new(vec![a.clone(), b.clone()], vec![xs.clone(), ys.clone()])?;
    let g2 = MonomialPattern::new(vec![a.clone(), c.clone()], vec![xs, ys])?;
    let p = EvenSwapPair { d, regev, a, b, c, g1, g2 };
    Ok(p)
}

/// Coefficients solved from `tr G_i = 𝒯𝒯·a_{h,h}`, `tr((1,2)G_1) = 𝒯𝒯·a_d`,
/// `tr((1,2)G_2) = 0`, all per unit `𝒯_d(X)𝒯_d(Y)`.
#[derive(Clone, Debug, Serialize)]
pub struct EvenAnalysis {
    pub d: usize,
    pub a_hh: ExactScalar,
    pub a_d: ExactScalar,
    pub a1: ExactScalar,
    pub b1: ExactScalar,
    pub a2: ExactScalar,
    pub b2: ExactScalar,
    /// `−a_2G_1 + a_1G_2` and its value.
    pub combination: (ExactScalar, ExactScalar),
    pub combination_value: ExactScalar,
    /// Smallest integer multiple with positive `G_1` coefficient.
    pub primitive: (ExactScalar, ExactScalar),
    pub primitive_value: ExactScalar,
    /// `d·a_{h,h}G_1 + (a_d − d·a_{h,h})G_2` and its true value.
    pub closed_form: (ExactScalar, ExactScalar),
    pub closed_form_value: ExactScalar,
    /// The printed right side `a_{h,h}(d a_d − a_{h,h}) / ((1−d)(1−d²)d!²)`.
    pub printed_closed_form_value: ExactScalar,
}

fn solve2(d: &ExactScalar, t: &ExactScalar, ts: &ExactScalar) -> Result<(ExactScalar, ExactScalar)> {
    // a d² + b d = t, a d + b d² = ts
    let m = ExactMatrix::new(2, 2, vec![d * d, d.clone(), d.clone(), d * d])?;
    let rhs = ExactMatrix::new(2, 1, vec![t.clone(), ts.clone()])?;
    let x = &m.inverse()? * &rhs;
    Ok((x.get(0, 0).clone(), x.get(1, 0).clone()))
}

pub(crate) fn primitive_pair(p: &ExactScalar, q: &ExactScalar) -> (ExactScalar, ExactScalar, ExactScalar) {
    use num_integer::Integer;
    use num_traits::{Signed, Zero};
    let l = p.denom().lcm(q.denom());
    let (ip, iq) = (p.numer() * (&l / p.denom()), q.numer() * (&l / q.denom()));
    let mut g = ip.gcd(&iq);
    if ip.is_negative() || (ip.is_zero() && iq.is_negative()) {
        g = -g;
    }
    let k = ExactScalar::from(l) / ExactScalar::from(g);
    (p * &k, q * &k, k)
}

pub fn even_analysis(d: usize) -> Result<EvenAnalysis> {
    if d == 0 || d % 2 == 1 {
        return Err(Error::Precondition(format!("d = {d} is not even")));
    }
    let h = d / 2;
    let wg = weingarten(d, d);
    let a_hh = wg.get(&Partition::new(vec![h, h]))?.clone();
    let a_d = wg.get(&Partition::new(vec![d]))?.clone();
    let dd = ExactScalar::from(d);
    let (a1, b1) = solve2(&dd, &a_hh, &a_d)?;
    let (a2, b2) = solve2(&dd, &a_hh, &ExactScalar::zero())?;
    let value = |p: &ExactScalar, q: &ExactScalar| p * &b1 + q * &b2;
    let combination = (-a2.clone(), a1.clone());
    if (&combination.0 * &a1 + &combination.1 * &a2) != ExactScalar::zero() {
        return Err(Error::Degenerate("identity components do not cancel".into()));
    }
    let combination_value = value(&combination.0, &combination.1);
    if combination_value.is_zero() {
        return Err(Error::Degenerate(format!(
            "G1 and G2 are proportional at d = {d}"
        )));
    }
    let (pp, pq, _) = primitive_pair(&combination.0, &combination.1);
    let primitive_value = value(&pp, &pq);
    let closed_form = (&dd * &a_hh, &a_d - &(&dd * &a_hh));
    let closed_form_value = value(&closed_form.0, &closed_form.1);
    let one = ExactScalar::one();
    let fact = ExactScalar::factorial(d as u32);
    let printed_closed_form_value = &a_hh * &(&(&dd * &a_d) - &a_hh)
        / ((&one - &dd) * (&one - &(&dd * &dd)) * &fact * &fact);
    Ok(EvenAnalysis {
        d,
        a_hh,
        a_d,
        a1,
        b1,
        a2,
        b2,
        combination,
        combination_value,
        primitive: (pp, pq),
        primitive_value,
        closed_form,
        closed_form_value,
        printed_closed_form_value,
    })
}

/// A printed `p·G_1 + q·G_2 = v·𝒯_d(X)𝒯_d(Y)(1,2)` line.
#[derive(Clone, Debug, Serialize)]
pub struct PrintedLine {
    pub text: &'static str,
    pub coefficients: (ExactScalar, ExactScalar),
    pub printed_value: ExactScalar,
    /// Whether the printed pair kills the identity component.
    pub is_swap_combination: bool,
    pub computed_value: ExactScalar,
    pub matches: bool,
}

/// Reference lines for `d = 2, 4, 6`, with `D(X)D(Y) = 𝒯_2(X)𝒯_2(Y)/36`.
pub fn printed_lines(d: usize) -> Vec<(&'static str, (i64, i64, i64, i64), (i64, i64))> {
    // (text, (p_num, p_den, q_num, q_den), value per 𝒯𝒯)
    match d {
        2 => vec![
            ("8/3 G1 - 10/3 G2 = -8/9 T2(X)T2(Y)(1,2)", (8, 3, -10, 3), (-8, 9)),
            ("8/3 G1 - 10/3 G2 = -32 D(X)D(Y)(1,2)", (8, 3, -10, 3), (-32, 36)),
            ("4 G1 - 5 G2 = -48 D(X)D(Y)(1,2)", (4, 1, -5, 1), (-48, 36)),
        ],
        4 => vec![(
            "27 G2 - 22 G1 = 11/(3*5*2^5) T4(X)T4(Y)(1,2)",
            (-22, 1, 27, 1),
            (11, 480),
        )],
        6 => vec![(
            "800 G1 - 2094 G2 = -43/3395700 T6(X)T6(Y)(1,2)",
            (800, 1, -2094, 1),
            (-43, 3395700),
        )],
        _ => vec![],
    }
}

pub fn compare_printed(an: &EvenAnalysis) -> Vec<PrintedLine> {
    printed_lines(an.d)
        .into_iter()
        .map(|(text, (pn, pd, qn, qd), (vn, vd))| {
            let p = ExactScalar::ratio(pn, pd);
            let q = ExactScalar::ratio(qn, qd);
            let is_swap = (&p * &an.a1 + &q * &an.a2).is_zero();
            let computed_value = &p * &an.b1 + &q * &an.b2;
            let printed_value = ExactScalar::ratio(vn, vd);
            let matches = is_swap && computed_value == printed_value;
            PrintedLine {
                text,
                coefficients: (p, q),
                printed_value,
                is_swap_combination: is_swap,
                computed_value,
                matches,
            }
        })
        .collect()
}

/// Measured evaluation of `G_1`, `G_2` and the primitive combination.
#[derive(Clone, Debug, Serialize)]
pub struct EvenMeasurement {
    /// `(a, b)/𝒯𝒯` for `G_1` and `G_2`, when constant across points.
    pub g1: Option<(ExactScalar, ExactScalar)>,
    pub g2: Option<(ExactScalar, ExactScalar)>,
    /// Normalized by `𝒯_d(X)𝒯_d(Y)`.
    pub certificate: SwapCertificate,
    /// Same samples normalized by the vectorization determinants.
    pub det_certificate: SwapCertificate,
    pub ab_central_nonzero: bool,
    pub ac_zero: bool,
}

pub fn even_measure(d: usize, points: usize, seed: u64) -> Result<EvenMeasurement> {
    if d != 2 {
        return Err(Error::Budget {
            estimated: (1..=(d * d) as u128).product::<u128>().saturating_mul(2),
            budget: 2 * 24,
        });
    }
    let an = even_analysis(d)?;
    let pair = even_swap_pair(d)?;
    let mut rng = seeded_rng(seed);
    let (mut s1, mut s2, mut sc, mut sd) = (vec![], vec![], vec![], vec![]);
    let mut ab_ok = true;
    let mut ac_ok = true;
    for _ in 0..points {
        let asg = random_xy(&mut rng, d);
        let xs = family_mats(&asg, Family::X)?;
        let ys = family_mats(&asg, Family::Y)?;
        let tt = t_cal(&xs)? * t_cal(&ys)?;
        let dd = vec_det(&xs)? * vec_det(&ys)?;
        let g1 = pair.eval_g1(&asg)?;
        let g2 = pair.eval_g2(&asg)?;
        let comb = g1
            .scale(&an.primitive.0)
            .try_add(&g2.scale(&an.primitive.1))?;
        s1.push(PointSample::measure(&g1, tt.clone())?);
        s2.push(PointSample::measure(&g2, tt.clone())?);
        sc.push(PointSample::measure(&comb, tt)?);
        sd.push(PointSample::measure(&comb, dd)?);
        let ab = pair.eval_ab(&asg)?;
        ab_ok &= ab.as_scalar().is_some_and(|v| !v.is_zero());
        ac_ok &= pair.eval_ac(&asg)?.is_zero();
    }
    let coeffs = vec![
        ("G1".to_string(), an.primitive.0.clone()),
        ("G2".to_string(), an.primitive.1.clone()),
    ];
    Ok(EvenMeasurement {
        g1: constant_normalized(&s1),
        g2: constant_normalized(&s2),
        certificate: SwapCertificate::assemble(format!("even-d{d}"), coeffs.clone(), sc),
        det_certificate: SwapCertificate::assemble(format!("even-d{d}-det"), coeffs, sd),
        ab_central_nonzero: ab_ok,
        ac_zero: ac_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_shape_d2() {
        let p = even_swap_pair(2).unwrap();
        assert_eq!(p.a.to_string(), "x1.y2.y3.y4");
        assert_eq!(p.b.to_string(), "x2.x3.x4.y1");
        assert_eq!(p.c.to_string(), "y1.x2.x3.x4");
        assert!(even_swap_pair(3).is_err());
    }

    #[test]
    fn analysis_d2() {
        let an = even_analysis(2).unwrap();
        assert_eq!(an.a_hh, ExactScalar::ratio(1, 3));
        assert_eq!(an.a_d, ExactScalar::ratio(-1, 6));
        assert_eq!(
            (an.a1.clone(), an.b1.clone(), an.a2.clone(), an.b2.clone()),
            (
                ExactScalar::ratio(5, 36),
                ExactScalar::ratio(-1, 9),
                ExactScalar::ratio(1, 9),
                ExactScalar::ratio(-1, 18)
            )
        );
        assert_eq!(an.primitive, (ExactScalar::from(4), ExactScalar::from(-5)));
        assert_eq!(an.primitive_value, ExactScalar::ratio(-1, 6));
        assert_eq!(an.combination_value, ExactScalar::ratio(1, 216));
    }

    #[test]
    fn measured_d2() {
        let m = even_measure(2, 4, 5).unwrap();
        assert_eq!(m.g1, Some((ExactScalar::ratio(5, 36), ExactScalar::ratio(-1, 9))));
        assert_eq!(m.g2, Some((ExactScalar::ratio(1, 9), ExactScalar::ratio(-1, 18))));
        assert!(m.certificate.valid && m.det_certificate.valid);
        assert_eq!(m.certificate.multiplier, Some(ExactScalar::ratio(-1, 6)));
        assert_eq!(m.det_certificate.multiplier, Some(ExactScalar::from(-6)));
        assert!(m.ab_central_nonzero && m.ac_zero);
    }

    #[test]
    fn higher_even_analytic() {
        let an = even_analysis(4).unwrap();
        assert_eq!(an.primitive, (ExactScalar::from(22), ExactScalar::from(-27)));
        assert_eq!(an.primitive_value, ExactScalar::ratio(-11, 8064));
        let an = even_analysis(6).unwrap();
        assert_eq!(an.primitive, (ExactScalar::from(300), ExactScalar::from(-349)));
        let lines = compare_printed(&an);
        assert!(!lines[0].is_swap_combination);
        for d in [2, 4, 6] {
            let an = even_analysis(d).unwrap();
            let expect = &an.a_hh * &an.a_d / ExactScalar::from(d);
            assert_eq!(an.closed_form_value, expect);
        }
    }
}
