use num_bigint::BigInt;
use proptest::prelude::*;

use swappoly::exact::{decompose_sigma2, swap_operator, ExactMatrix, ExactScalar, TensorOperator};
use swappoly::ncpoly::text::{format_poly, format_tensor, parse, ParsedPoly};
use swappoly::ncpoly::{NcPoly, TensorPoly2, Word};

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| ExactScalar::new(n, d).unwrap())
}

fn small_scalar() -> impl Strategy<Value = ExactScalar> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| ExactScalar::ratio(n, d))
}

fn word() -> impl Strategy<Value = Word> {
    let letter = prop_oneof![
        (1u32..4).prop_map(|i| format!("x{i}")),
        (1u32..4).prop_map(|i| format!("y{i}")),
        (1u32..3).prop_map(|i| format!("z{i}")),
        (1u32..3).prop_map(|i| format!("zeta{i}")),
    ];
    prop::collection::vec(letter, 0..5).prop_map(|ls| {
        let s = if ls.is_empty() { "1".to_string() } else { ls.join(".") };
        s.parse().unwrap()
    })
}

proptest! {
    #[test]
    fn scalar_display_parse(c in scalar()) {
        let back: ExactScalar = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn scalar_big_roundtrip(n in any::<i128>(), d in 1u64..) {
        let c = ExactScalar::new(BigInt::from(n), BigInt::from(d)).unwrap();
        prop_assert_eq!(c.to_string().parse::<ExactScalar>().unwrap(), c);
    }

    #[test]
    fn sigma2_recovers_coefficients(a in small_scalar(), b in small_scalar(), d in 2usize..5) {
        let id = TensorOperator::identity(d, 2).unwrap();
        let t = id.scale(&a).try_add(&swap_operator(d).unwrap().scale(&b)).unwrap();
        let s = decompose_sigma2(&t).unwrap();
        prop_assert!(s.residual_zero);
        prop_assert_eq!(s.a, a);
        prop_assert_eq!(s.b, b);
    }

    #[test]
    fn sigma2_detects_residual(a in small_scalar(), b in small_scalar(), e in small_scalar(), d in 2usize..4) {
        prop_assume!(e != ExactScalar::zero());
        let n = d * d;
        // Entry (00, 01) is zero on both Id and swap.
        let mut entries = vec![ExactScalar::zero(); n * n];
        entries[1] = e;
        let bump = TensorOperator::new(d, 2, ExactMatrix::new(n, n, entries).unwrap()).unwrap();
        let id = TensorOperator::identity(d, 2).unwrap();
        let t = id.scale(&a).try_add(&swap_operator(d).unwrap().scale(&b)).unwrap().try_add(&bump).unwrap();
        prop_assert!(!decompose_sigma2(&t).unwrap().residual_zero);
    }

    #[test]
    fn tensor_text_roundtrip(terms in prop::collection::vec((word(), word(), small_scalar()), 1..8)) {
        let t = TensorPoly2::from_terms(terms);
        prop_assume!(!t.is_zero());
        prop_assert_eq!(parse(&format_tensor(&t)).unwrap(), ParsedPoly::Tensor(t));
    }

    #[test]
    fn plain_text_roundtrip(terms in prop::collection::vec((word(), small_scalar()), 1..8)) {
        let p = NcPoly::from_terms(terms);
        prop_assume!(!p.is_zero());
        prop_assert_eq!(parse(&format_poly(&p)).unwrap(), ParsedPoly::Plain(p));
    }
}
