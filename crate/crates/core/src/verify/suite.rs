//! The check registry and its parallel runner.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::identities;
use super::report::{q, CheckReport, Provenance};
use super::swap::{goldman_properties, verify_central, verify_swap};
use super::tables;
use crate::constructions::{
    capelli_check, capelli_swap, compare_printed, even_analysis, even_measure, odd_coefficient,
    odd_d3_report, profile_check, regev_f_symbolic, regev_f_value, regev_multiplier, t_cal,
    vec_det, weingarten_cross,
};
use crate::constructions::profiles::{default_bad_profiles, default_good_profiles};
use crate::constructions::regev::{family_mats, left_multiply, random_xy};
use crate::error::Result;
use crate::exact::{ExactMatrix, ExactScalar};
use crate::ncpoly::{is_tpi, random_matrix, seeded_rng, Assignment, Family, Letter, NcPoly, TensorPoly2};
use crate::symmetric::{weingarten, Partition};
use crate::two_by_two::{
    balanced_q_prime, bracket_square, esss_family, esss_invariant, literal_teo_split, p_xy,
    poincare_check, q_xy, trace_gram, Generator,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Weingarten,
    Invariant,
    TwoByTwo,
    Construction,
    Swap,
    Central,
    Identities,
    Goldman,
}

impl Group {
    pub fn label(self) -> &'static str {
        match self {
            Group::Weingarten => "weingarten",
            Group::Invariant => "invariant",
            Group::TwoByTwo => "two-by-two",
            Group::Construction => "construction",
            Group::Swap => "swap",
            Group::Central => "central",
            Group::Identities => "identities",
            Group::Goldman => "goldman",
        }
    }
}

/// A registered check.
#[derive(Clone, Copy)]
pub struct CheckDef {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Matrix sizes the check exercises.
    pub dims: &'static [usize],
    pub group: Group,
    /// Acceptance criterion it backs, if any.
    pub criterion: Option<u8>,
    pub run: fn(u64) -> CheckReport,
}

impl CheckDef {
    pub fn covers(&self, d: usize) -> bool {
        self.dims.contains(&d)
    }
}

/// Points for the d = 2 swap checks.
const POINTS_D2: usize = 10;
/// Points for the factorial-scale d = 3 checks.
const POINTS_D3: usize = 3;

fn xy(asg: &Assignment) -> Result<(ExactMatrix, ExactMatrix)> {
    Ok((asg.get(Letter::x(1))?.clone(), asg.get(Letter::y(1))?.clone()))
}

fn bracket_scalar(asg: &Assignment) -> Result<ExactScalar> {
    let (x, y) = xy(asg)?;
    Ok(bracket_square().eval(&x, &y))
}

fn q_scalar(asg: &Assignment) -> Result<ExactScalar> {
    let (x, y) = xy(asg)?;
    let s = bracket_square().eval(&x, &y);
    Ok(y.trace()?.pow(2) * s.pow(2))
}

/// Runs `f`, turning an error into a failed report.
fn guarded(id: &str, anchor: &str, seed: u64, f: impl FnOnce(&mut CheckReport) -> Result<()>) -> CheckReport {
    let mut r = CheckReport::new(id, anchor, seed);
    if let Err(e) = f(&mut r) {
        r.record_error(&e);
    }
    r
}

fn p_swap(seed: u64) -> CheckReport {
    verify_swap("two-by-two.p", "eq:unsw", &p_xy(), 2, POINTS_D2, seed, Some(&bracket_scalar))
}

fn p_central(seed: u64) -> CheckReport {
    verify_central("two-by-two.p.central", "thm:cca", &p_xy(), 2, POINTS_D2, seed, Some(&bracket_scalar))
}

fn q_swap(seed: u64) -> CheckReport {
    let t = q_xy();
    let mut r = verify_swap("two-by-two.q", "eq:val", &t, 2, POINTS_D2, seed, Some(&q_scalar));
    r.require(t.len() == 40, "40 terms");
    r.measure("terms", t.len());
    r.expect("terms", 40, Provenance::Paper);
    r
}

fn q_central(seed: u64) -> CheckReport {
    verify_central("two-by-two.q.central", "thm:cca", &q_xy(), 2, POINTS_D2, seed, Some(&q_scalar))
}

fn q_prime(seed: u64) -> CheckReport {
    let qp = balanced_q_prime();
    let mut r = verify_swap("two-by-two.q-prime", "thm:teo", &qp, 2, POINTS_D2, seed, Some(&q_scalar));
    r.require(qp.is_balanced(), "balanced");
    r.require(qp.slot_degree() == Some(5), "degree 5 in each slot");
    r.measure("terms", qp.len());
    r.measure("slot_degree", qp.slot_degree());
    r.expect("slot_degree", 5, Provenance::Paper);
    match is_tpi(&qp.sub(&q_xy()), 2, POINTS_D2, seed) {
        Ok(v) => {
            r.measure("q_prime_minus_q", v.label());
            r.note(format!("Q' - Q: {}", v.label()));
        }
        Err(e) => r.require(false, format!("TPI test: {e}")),
    }
    let c = verify_central("", "", &qp, 2, POINTS_D2, seed, Some(&q_scalar));
    r.require(c.status == super::Status::Pass, "central counterpart");
    r
}

fn literal_split(seed: u64) -> CheckReport {
    guarded("two-by-two.literal-split", "thm:teo", seed, |r| {
        r.set_points(5);
        let lit = literal_teo_split();
        let swap = crate::exact::swap_operator(2)?.into_matrix();
        let mut rng = seeded_rng(seed);
        let mut agrees = true;
        for _ in 0..5 {
            let x = random_matrix(&mut rng, 2);
            let y = random_matrix(&mut rng, 2);
            let s = bracket_square().eval(&x, &y);
            let want = swap.scale(&(y.trace()?.pow(2) * s.pow(2)));
            agrees &= lit.eval(&x, &y) == want;
        }
        r.measure("literal_split_is_swap_value", agrees);
        r.expect("literal_split_is_swap_value", true, Provenance::Paper);
        r.compare(agrees, "displayed split does not evaluate to tr(y)^2 det([x,y])^2 swap");
        Ok(())
    })
}

fn esss(seed: u64) -> CheckReport {
    use Generator::*;
    let cases: [(&[Generator], &[Generator]); 4] = [
        (&[TrX, TrY], &[DetX, TrXY]),
        (&[TrY, TrY, TrX, TrX], &[DetY]),
        (&[TrX, TrX, TrY, TrY], &[]),
        (&[TrX, TrY, TrY, TrY], &[DetY]),
    ];
    guarded("two-by-two.esss", "thm:esss", seed, |r| {
        r.set_points(5);
        let s = bracket_square();
        let s2 = s.mul(&s);
        for (d1, d2) in cases {
            let t = esss_family(d1, d2)?;
            let inv = esss_invariant(d1, d2).mul(&s2);
            let f = move |a: &Assignment| -> Result<ExactScalar> {
                let (x, y) = xy(a)?;
                Ok(inv.eval(&x, &y))
            };
            let name: Vec<&str> = d1.iter().chain(d2).map(|g| g.name()).collect();
            let v = verify_swap("", "", &t, 2, 5, seed, Some(&f));
            r.require(t.is_balanced(), format!("{} balanced", name.join("")));
            r.require(v.status == super::Status::Pass, format!("{}: {:?}", name.join(""), v.notes));
            r.measure(&name.join(""), json!({"terms": t.len(), "slot_degree": t.slot_degree()}));
        }
        r.expect("members", "balanced swap", Provenance::Paper);
        Ok(())
    })
}

fn gram(seed: u64) -> CheckReport {
    guarded("two-by-two.gram", "prop:Pdb", seed, |r| {
        r.set_points(5);
        let mut rng = seeded_rng(seed);
        let mut mism = std::collections::BTreeSet::new();
        let mut printed_dual = true;
        let mut k = 0;
        while k < 5 {
            let x = random_matrix(&mut rng, 2);
            let y = random_matrix(&mut rng, 2);
            let g = match trace_gram(&x, &y) {
                Err(crate::Error::Degenerate(_)) => {
                    r.note(format!("degenerate draw at point {k} resampled"));
                    continue;
                }
                other => other?,
            };
            r.require(g.det_matches, format!("point {k}: det D = −det([x,y])²"));
            r.require(g.dual_matches_p, format!("point {k}: dual basis sum = P"));
            mism.extend(g.lambda_mismatches.iter().copied());
            printed_dual &= g.dual_matches_printed.iter().all(|&b| b);
            k += 1;
        }
        let mism: Vec<_> = mism.into_iter().collect();
        r.measure("lambda_mismatches", json!(mism));
        r.measure("dual_matches_printed", printed_dual);
        r.expect("lambda_mismatches", json!([]), Provenance::Paper);
        r.compare(mism.is_empty(), format!("printed Λ entries {mism:?}"));
        r.compare(printed_dual, "printed dual basis");
        Ok(())
    })
}

/// Series against the rank oracle up to total degree `maxdeg`.
pub fn poincare_report(maxdeg: usize, seed: u64) -> CheckReport {
    guarded("two-by-two.poincare", "eq:poin", seed, |r| {
        let rep = poincare_check(maxdeg, seed)?;
        r.require(rep.all_ok, "series against rank oracle");
        for row in rep.rows.iter().filter(|row| !row.ok) {
            r.note(format!("({},{}): rank {} codim {}", row.i, row.j, row.rank, row.codim));
        }
        let r11 = rep.rows.iter().find(|row| (row.i, row.j) == (1, 1)).map(|row| row.rank);
        if maxdeg >= 2 {
            r.require(r11 == Some(2), "dim R(1,1) = 2");
        }
        let with_ids: Vec<(usize, usize)> =
            rep.rows.iter().filter(|row| row.codim > 0).map(|row| (row.i, row.j)).collect();
        let low = with_ids.iter().map(|(i, j)| i + j).min();
        let mut first: Vec<_> = with_ids.iter().filter(|(i, j)| Some(i + j) == low).copied().collect();
        first.sort();
        if maxdeg >= 5 {
            r.require(first == vec![(2, 3), (3, 2)], format!("first identities at {first:?}"));
        }
        r.measure("dim_r11", r11);
        r.measure("first_identities", json!(first));
        r.measure("cells", rep.rows.len());
        r.expect("dim_r11", 2, Provenance::Trivial);
        r.expect("first_identities", json!([[2, 3], [3, 2]]), Provenance::Derived);
        Ok(())
    })
}

fn units(d: usize) -> Vec<ExactMatrix> {
    (0..d * d).map(|k| ExactMatrix::unit(d, k / d, k % d)).collect()
}

fn tcal(d: usize, seed: u64) -> CheckReport {
    guarded(&format!("tcal.d{d}"), "eq:costdis", seed, |r| {
        r.set_points(5);
        let at_units = t_cal(&units(d))? / vec_det(&units(d))?;
        let mut rng = seeded_rng(seed);
        let mut ratios = vec![];
        for k in 0..5 {
            let m: Vec<ExactMatrix> = (0..d * d).map(|_| random_matrix(&mut rng, d)).collect();
            let det = vec_det(&m)?;
            if det.is_zero() {
                r.note(format!("singular draw at point {k}"));
                continue;
            }
            ratios.push(t_cal(&m)? / det);
        }
        r.require(ratios.len() >= 3, "enough nonsingular points");
        r.require(ratios.iter().all(|c| *c == at_units), "constant sign and magnitude");
        let c = crate::constructions::c_d(d);
        r.require(at_units.abs() == c, format!("|C_{d}| = {c}"));
        r.measure("ratio", q(&at_units));
        r.measure("ratios", ratios.iter().map(q).collect::<Vec<_>>());
        r.expect("abs_ratio", q(&c), Provenance::Paper);
        r.expect("sign", at_units.signum(), Provenance::Derived);
        Ok(())
    })
}

fn tt_of(asg: &Assignment) -> Result<ExactScalar> {
    Ok(t_cal(&family_mats(asg, Family::X)?)? * t_cal(&family_mats(asg, Family::Y)?)?)
}

fn regev(d: usize, points: usize, seed: u64) -> CheckReport {
    guarded(&format!("regev.d{d}"), "eq:RFaFF", seed, |r| {
        r.set_points(points);
        let m = regev_multiplier(d);
        let sym: Option<NcPoly> = if d == 2 { Some(regev_f_symbolic(2)?) } else { None };
        let mut rng = seeded_rng(seed);
        for k in 0..points {
            let asg = random_xy(&mut rng, d);
            let f = regev_f_value(d, &asg)?;
            let tt = tt_of(&asg)?;
            r.require(tt != ExactScalar::zero() || k > 0, "nonzero invariant at first point");
            r.require(f == ExactMatrix::scalar(d, &(&tt * &m)), format!("point {k}: F = c·𝒯𝒯"));
            if let Some(s) = &sym {
                r.require(s.eval(&asg)? == f, format!("point {k}: split = naive"));
                let z = random_matrix(&mut rng, d);
                let dz = z.det()?.pow(d as u32);
                for fam in [Family::X, Family::Y] {
                    let g = regev_f_value(d, &left_multiply(&asg, fam, &z)?)?;
                    r.require(g == f.scale(&dz), format!("point {k}: conductor in {fam:?}"));
                }
            }
        }
        if let Some(s) = &sym {
            r.measure("naive_terms", s.len());
        }
        r.measure("multiplier", q(&m));
        r.expect("multiplier", q(&m), Provenance::Paper);
        Ok(())
    })
}

fn alt_weingarten(d: usize, points: u64, seed: u64) -> CheckReport {
    guarded(&format!("alt-weingarten.d{d}"), "eq:forgz1", seed, |r| {
        for k in 0..points {
            let c = weingarten_cross(d, seed.wrapping_add(k))?;
            r.require(c.equal, format!("point {k}"));
        }
        r.points = (0..points).map(|k| json!(format!("{}#0", seed.wrapping_add(k)))).collect();
        r.measure("equal", true);
        r.expect("operator", "T_d(Y) op(Wg(d,d))", Provenance::Paper);
        Ok(())
    })
}

fn profiles(d: usize, seed: u64) -> CheckReport {
    guarded(&format!("profiles.d{d}"), "prop:mmu", seed, |r| {
        r.set_points(1);
        let bad = profile_check(d, &default_bad_profiles(d), seed)?;
        let good = profile_check(d, &default_good_profiles(d), seed)?;
        for row in &bad {
            r.require(!row.admissible && row.zero, format!("{:?} should vanish", row.profile));
        }
        for row in &good {
            r.require(row.admissible && !row.zero, format!("{:?} should not vanish", row.profile));
        }
        r.measure("vanishing", json!(bad.iter().map(|x| &x.profile).collect::<Vec<_>>()));
        r.measure("nonvanishing", json!(good.iter().map(|x| &x.profile).collect::<Vec<_>>()));
        r.expect("vanishing", "inadmissible profiles", Provenance::Paper);
        Ok(())
    })
}

fn even_d2(seed: u64) -> CheckReport {
    guarded("even.d2", "eq:ilcon", seed, |r| {
        r.set_points(POINTS_D2);
        let an = even_analysis(2)?;
        r.require(an.a_hh == ExactScalar::ratio(1, 3), "a_{1,1} = 1/3");
        r.require(an.a_d == ExactScalar::ratio(-1, 6), "a_2 = −1/6");
        let m = even_measure(2, POINTS_D2, seed)?;
        r.require(m.g1 == Some((an.a1.clone(), an.b1.clone())), "G1 components");
        r.require(m.g2 == Some((an.a2.clone(), an.b2.clone())), "G2 components");
        r.require(m.certificate.valid, "combination is a swap");
        r.require(m.det_certificate.multiplier.is_some(), "constant ratio to det(X)det(Y)");
        r.require(m.ab_central_nonzero, "AB central and nonzero");
        r.require(m.ac_zero, "AC = 0");
        r.measure("a_11", q(&an.a_hh));
        r.measure("a_2", q(&an.a_d));
        r.measure("combination", json!([q(&an.primitive.0), q(&an.primitive.1)]));
        r.measure("value_per_TT", m.certificate.multiplier.as_ref().map(q));
        r.measure("value_per_DD", m.det_certificate.multiplier.as_ref().map(q));
        r.expect("a_11", "1/3", Provenance::Paper);
        r.expect("a_2", "-1/6", Provenance::Paper);
        r.expect("identity_component", "0", Provenance::Paper);
        Ok(())
    })
}

/// Comparison of the printed even-d lines and closed form with exact values.
pub fn printed_lines_report(id: &str, anchor: &str, ds: &[usize], seed: u64) -> CheckReport {
    guarded(id, anchor, seed, |r| {
        for &d in ds {
            let an = even_analysis(d)?;
            r.require(!an.primitive_value.is_zero(), format!("d = {d}: nonzero swap combination"));
            r.measure(
                &format!("d{d}"),
                json!({
                    "primitive": [q(&an.primitive.0), q(&an.primitive.1)],
                    "value_per_TT": q(&an.primitive_value),
                    "closed_form_value": q(&an.closed_form_value),
                }),
            );
            r.expect(&format!("d{d}.closed_form"), q(&an.printed_closed_form_value), Provenance::Paper);
            r.compare(
                an.printed_closed_form_value == an.closed_form_value,
                format!("d = {d}: closed form {} vs printed {}", an.closed_form_value, an.printed_closed_form_value),
            );
            for line in compare_printed(&an) {
                r.expect(line.text, q(&line.printed_value), Provenance::Paper);
                r.compare(
                    line.matches,
                    format!(
                        "{}: swap combination {}, value {}",
                        line.text, line.is_swap_combination, line.computed_value
                    ),
                );
            }
        }
        Ok(())
    })
}

fn even_d2_printed(seed: u64) -> CheckReport {
    printed_lines_report("even.d2.printed", "thm:swaa", &[2], seed)
}

fn even_higher(seed: u64) -> CheckReport {
    printed_lines_report("even.higher", "rem:manc", &[4, 6], seed)
}

fn odd_d3(seed: u64) -> CheckReport {
    guarded("odd.d3", "lemma:sem", seed, |r| {
        r.set_points(POINTS_D3);
        let rep = odd_d3_report(POINTS_D3, seed)?;
        r.require(rep.g1_trace_zero, "tr(G1) = 0");
        let swap_trace = rep
            .g1_measured
            .as_ref()
            .map(|(a, b)| a * &ExactScalar::from(3) + b * &ExactScalar::from(9));
        r.require(swap_trace == Some(ExactScalar::ratio(1, 60)), "tr((1,2)G1) = 𝒯𝒯/60");
        let sem = |v: &[crate::constructions::odd::SemCase]| {
            let mut out: Vec<(String, ExactScalar)> =
                v.iter().map(|c| (c.sigma.clone(), c.multiple.clone())).collect();
            out.sort();
            out
        };
        let one = ExactScalar::one;
        let want_m1 = vec![("(1 2)".to_string(), -one()), ("(2 4)".to_string(), one())];
        let want_m2 = vec![("(1 4)".to_string(), -one()), ("(3 4)".to_string(), one())];
        r.require(sem(&rep.sem_m1) == want_m1, "nonvanishing σ for the first monomial");
        r.require(sem(&rep.sem_m2) == want_m2, "nonvanishing σ for the second monomial");
        r.require(rep.almu0, "Alt_Y identity");
        r.require(rep.almu, "Alt_X identity");
        let scale = ExactScalar::factorial(4).pow(2);
        let scaled = rep.g2_trace.as_ref().map(|t| t * &scale);
        r.require(scaled == Some(ExactScalar::ratio(-64, 5)), "scaled tr(G2) = −64/5");
        r.require(rep.certificate.valid, "G1/G2 combination is a swap");
        let sigmas = |v: &[crate::constructions::odd::SemCase]| {
            v.iter().map(|c| json!([c.sigma, q(&c.multiple)])).collect::<Vec<_>>()
        };
        r.measure("sem_m1", sigmas(&rep.sem_m1));
        r.measure("sem_m2", sigmas(&rep.sem_m2));
        r.measure("swap_trace_g1_per_TT", swap_trace.as_ref().map(q));
        r.measure("scaled_trace_g2", scaled.as_ref().map(q));
        r.measure(
            "combination",
            json!(rep.certificate.coefficients.iter().map(|(k, v)| json!([k, q(v)])).collect::<Vec<_>>()),
        );
        r.measure("value_per_TT", rep.certificate.multiplier.as_ref().map(q));
        r.expect("trace_g1", "0", Provenance::Paper);
        r.expect("swap_trace_g1_per_TT", "1/60", Provenance::Paper);
        r.expect("scaled_trace_g2", "-64/5", Provenance::Paper);
        r.expect("nonvanishing_sigmas", 4, Provenance::Paper);
        Ok(())
    })
}

fn odd_d3_labels(seed: u64) -> CheckReport {
    guarded("odd.d3.labels", "lemma:sem", seed, |r| {
        let wg = weingarten(4, 3);
        let b = |v: &[usize]| wg.get(&Partition::new(v.to_vec())).cloned();
        let scale = ExactScalar::factorial(4).pow(2);
        let first = (b(&[3, 1])? - b(&[1, 1, 1, 1])?) * &scale;
        let second = (b(&[2, 2])? - b(&[3, 1])?) * &scale;
        let target = ExactScalar::ratio(-64, 5);
        r.measure("-b_1111+b_31", q(&first));
        r.measure("b_22-b_31", q(&second));
        r.expect("-b_1111+b_31", "-64/5", Provenance::Paper);
        r.expect("b_22-b_31", "-64/5", Provenance::Paper);
        r.require(first == target, "−b_{1⁴}+b_{3,1} label");
        r.compare(second == target, format!("b_(2,2)−b_(3,1) label gives {second}"));
        Ok(())
    })
}

fn odd_coeff(seed: u64) -> CheckReport {
    guarded("odd.coefficient", "eq:nzc", seed, |r| {
        for h in 2..=6 {
            let c = odd_coefficient(h)?;
            r.require(c.nonzero, format!("h = {h} nonzero"));
            r.measure(&format!("h{h}"), json!({"value": q(&c.value), "scaled": q(&c.scaled_n)}));
            if h == 3 {
                r.require(c.scaled_n == ExactScalar::ratio(-1867, 105), "h = 3 scaled value");
                r.expect("h3.scaled", "-1867/105", Provenance::Paper);
            }
        }
        r.expect("nonzero", "h = 2..6", Provenance::Derived);
        Ok(())
    })
}

fn odd_coeff_scaling(seed: u64) -> CheckReport {
    guarded("odd.coefficient.scaling", "eq:nzc", seed, |r| {
        let c = odd_coefficient(3)?;
        let five = ExactScalar::factorial(5).pow(2);
        let by_five = &c.value * &five;
        let target = ExactScalar::ratio(-1867, 105);
        r.measure("value_times_6!^2", q(&c.scaled_n));
        r.measure("value_times_5!^2", q(&by_five));
        r.measure("literal_tau_value_times_6!^2", q(&(&c.literal_value * &ExactScalar::factorial(6).pow(2))));
        r.measure("literal_cycle_types", json!(c.literal_terms));
        r.expect("value_times_5!^2", "-1867/105", Provenance::Paper);
        r.compare(by_five == target, format!("(5!)² scaling gives {by_five}"));
        r.compare(c.literal_agrees, "literal τ_3 classes disagree with the class formula");
        for h in 4..=6 {
            let c = odd_coefficient(h)?;
            r.require(c.literal_agrees, format!("h = {h}: literal σ agree with the class formula"));
        }
        Ok(())
    })
}

fn capelli_grid(seed: u64) -> CheckReport {
    guarded("capelli.d2", "eq:adua0", seed, |r| {
        r.set_points(5);
        let c = capelli_swap(2)?;
        let rep = capelli_check(&c, 5, seed)?;
        r.require(rep.trace_pairing, "tr(x_i f_i) = tr(C_4)");
        r.require(rep.off_diagonal_zero, "tr(x_j f_i) = 0 for i ≠ j");
        r.require(rep.swap_value, "H = tr(C_4)·swap");
        r.require(rep.central, "h = tr(y0)tr(C_4)");
        r.require(rep.vanishes_on_traceless, "h vanishes on traceless y0");
        r.require(rep.nondegenerate, "tr(C_4) ≠ 0 somewhere");
        r.measure("capelli_terms", c.f.len());
        r.measure("swap_terms", c.h_swap.len());
        r.expect("pairing", "delta_ij tr(C_4)", Provenance::Paper);
        Ok(())
    })
}

fn capelli_verify(central: bool, seed: u64) -> CheckReport {
    let c = match capelli_swap(2) {
        Ok(c) => c,
        Err(e) => return CheckReport::error("capelli.d2.swap", "eq:adua", seed, &e),
    };
    let f = c.f.clone();
    let scalar = move |a: &Assignment| -> Result<ExactScalar> { f.eval(a)?.trace() };
    if central {
        verify_central("capelli.d2.central", "eq:adua0", &c.h_swap, 2, 5, seed, Some(&scalar))
    } else {
        verify_swap("capelli.d2.swap", "eq:adua", &c.h_swap, 2, 5, seed, Some(&scalar))
    }
}

fn negative_control(seed: u64) -> CheckReport {
    let x = NcPoly::var(Letter::x(1));
    let t = TensorPoly2::tensor(&x, &x);
    let s = verify_swap("", "", &t, 2, 5, seed, None);
    let c = verify_central("", "", &t, 2, 5, seed, None);
    let mut r = CheckReport::new("verify.negative-control", "def:swa", seed).with_points(5);
    r.require(s.status == super::Status::Fail, "x1⊗x1 rejected by the swap verifier");
    r.require(c.status == super::Status::Fail, "x1⊗x1 rejected by the central verifier");
    r.measure("swap_witness", s.notes.first().cloned());
    r.measure("central_witness", c.notes.first().cloned());
    r.expect("verdict", "fail", Provenance::Trivial);
    r
}

macro_rules! def {
    ($id:expr, $anchor:expr, $dims:expr, $group:ident, $crit:expr, $run:expr) => {
        CheckDef {
            id: $id,
            anchor: $anchor,
            dims: $dims,
            group: Group::$group,
            criterion: $crit,
            run: $run,
        }
    };
}

/// Every registered check, sorted by id.
pub fn checks() -> Vec<CheckDef> {
    let mut v = vec![
        def!("alt-weingarten.d2", "eq:forgz1", &[2], Construction, Some(8), |s| alt_weingarten(2, 5, s)),
        def!("alt-weingarten.d3", "eq:forgz1", &[3], Construction, Some(8), |s| alt_weingarten(3, 2, s)),
        def!("capelli.d2", "eq:adua0", &[2], Construction, Some(11), capelli_grid),
        def!("capelli.d2.central", "eq:adua0", &[2], Central, Some(11), |s| capelli_verify(true, s)),
        def!("capelli.d2.swap", "eq:adua", &[2], Swap, Some(11), |s| capelli_verify(false, s)),
        def!("even.d2", "eq:ilcon", &[2], Construction, Some(9), even_d2),
        def!("even.d2.printed", "thm:swaa", &[2], Construction, Some(9), even_d2_printed),
        def!("even.higher", "rem:manc", &[4, 6], Construction, None, even_higher),
        def!("identities.assotr", "eq:assotr", &[2], Identities, Some(13), identities::assotr),
        def!("identities.assotr0", "eq:assotr0", &[2], Identities, Some(13), identities::assotr0),
        def!("identities.dual-basis.d2", "rem:gecon0", &[2], Identities, Some(13), |s| identities::dual_basis(2, s)),
        def!("identities.dual-basis.d3", "rem:gecon0", &[3], Identities, Some(13), |s| identities::dual_basis(3, s)),
        def!("identities.goldman.d2", "eq:Gol1 rem:nou", &[2], Goldman, Some(13), |s| goldman_properties(2, s)),
        def!("identities.goldman.d3", "eq:Gol1 rem:nou", &[3], Goldman, Some(13), |s| goldman_properties(3, s)),
        def!("identities.goldman.d4", "eq:Gol1 rem:nou", &[4], Goldman, Some(13), |s| goldman_properties(4, s)),
        def!("identities.ii", "eq:ii", &[2], Identities, Some(13), identities::ii),
        def!("identities.polCH", "eq:polCH", &[2], Identities, Some(13), identities::pol_ch),
        def!("identities.qzer", "rem:qzer", &[2, 3, 4], Identities, None, identities::qzer),
        def!("odd.coefficient", "eq:nzc", &[3, 5, 7, 9, 11], Construction, Some(14), odd_coeff),
        def!("odd.coefficient.scaling", "eq:nzc", &[5], Construction, Some(14), odd_coeff_scaling),
        def!("odd.d3", "lemma:sem", &[3], Construction, Some(10), odd_d3),
        def!("odd.d3.labels", "lemma:sem", &[3], Construction, Some(10), odd_d3_labels),
        def!("profiles.d2", "prop:mmu", &[2], Construction, None, |s| profiles(2, s)),
        def!("profiles.d3", "prop:mmu", &[3], Construction, None, |s| profiles(3, s)),
        def!("regev.d2", "eq:RFaFF", &[2], Construction, Some(7), |s| regev(2, 5, s)),
        def!("regev.d3", "eq:RFaFF", &[3], Construction, Some(7), |s| regev(3, POINTS_D3, s)),
        def!("tcal.d2", "eq:costdis", &[2], Invariant, Some(4), |s| tcal(2, s)),
        def!("tcal.d3", "eq:costdis", &[3], Invariant, Some(4), |s| tcal(3, s)),
        def!("two-by-two.esss", "thm:esss", &[2], Swap, None, esss),
        def!("two-by-two.gram", "prop:Pdb", &[2], TwoByTwo, None, gram),
        def!("two-by-two.literal-split", "thm:teo", &[2], TwoByTwo, Some(6), literal_split),
        def!("two-by-two.p", "eq:unsw", &[2], Swap, Some(5), p_swap),
        def!("two-by-two.p.central", "thm:cca", &[2], Central, Some(5), p_central),
        def!("two-by-two.poincare", "eq:poin", &[2], TwoByTwo, Some(12), |s| poincare_report(7, s)),
        def!("two-by-two.q", "eq:val", &[2], Swap, Some(5), q_swap),
        def!("two-by-two.q-prime", "thm:teo", &[2], Swap, Some(6), q_prime),
        def!("two-by-two.q.central", "thm:cca", &[2], Central, Some(5), q_central),
        def!("verify.negative-control", "def:swa", &[2], Swap, None, negative_control),
        def!("weingarten.even-scaled", "sec:even-numerics", &[2, 4, 6], Weingarten, Some(2), tables::even_scaled),
        def!("weingarten.full-cycle", "thm:teF", &[2, 3, 4, 5, 6, 7, 8], Weingarten, Some(2), tables::full_cycle),
        def!("weingarten.inverse", "eq:wein", &[1, 2, 3, 4, 5], Weingarten, Some(3), tables::inverse),
        def!("weingarten.novak-sign", "fact:novak", &[1, 2, 3, 4, 5], Weingarten, Some(3), tables::novak_sign),
        def!("weingarten.table.d2", "tab:blambda", &[2], Weingarten, Some(1), |s| tables::weingarten_table(2, s)),
        def!("weingarten.table.d3", "tab:blambda", &[3], Weingarten, Some(1), |s| tables::weingarten_table(3, s)),
        def!("weingarten.table.d4", "tab:blambda", &[4], Weingarten, Some(1), |s| tables::weingarten_table(4, s)),
        def!("weingarten.table.d5", "tab:blambda", &[5], Weingarten, Some(1), |s| tables::weingarten_table(5, s)),
    ];
    v.sort_by_key(|c| c.id);
    v
}

/// Runs the given checks in parallel; the output is sorted by id and does
/// not depend on the thread count.
pub fn run_checks(defs: &[CheckDef], seed: u64) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = defs
        .par_iter()
        .map(|c| {
            let mut r = (c.run)(seed);
            r.check = c.id.to_string();
            r.anchor = c.anchor.to_string();
            r
        })
        .collect();
    out.sort_by(|a, b| a.check.cmp(&b.check));
    out
}

/// Checks matching `group` (all when `None`) and covering `d` (all when `None`).
pub fn run_suite(group: Option<Group>, d: Option<usize>, seed: u64) -> Vec<CheckReport> {
    let defs: Vec<CheckDef> = checks()
        .into_iter()
        .filter(|c| group.map_or(true, |g| c.group == g))
        .filter(|c| d.map_or(true, |d| c.covers(d)))
        .collect();
    run_checks(&defs, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Status;
    use std::collections::BTreeSet;

    #[test]
    fn registry_is_unique_and_anchored() {
        let c = checks();
        let ids: BTreeSet<&str> = c.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), c.len());
        assert!(c.iter().all(|c| !c.anchor.is_empty() && !c.dims.is_empty()));
    }

    #[test]
    fn cheap_d2_checks() {
        let defs: Vec<CheckDef> = checks()
            .into_iter()
            .filter(|c| {
                c.group == Group::Identities || c.id.starts_with("verify.") || c.id == "two-by-two.p"
            })
            .collect();
        for r in run_checks(&defs, 7) {
            assert_ne!(r.status, Status::Fail, "{r:?}");
        }
    }
}
