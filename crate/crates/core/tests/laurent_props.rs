use assocgr::{fit_h_polynomial, HilbertSeries, LaurentPoly, DEFAULT_WINDOW};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly(start: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(-20i64..20, 1..8).prop_map(move |cs| LaurentPoly::from_coeffs(start, cs))
}

proptest! {
    #[test]
    fn fit_inverts_expand(h in poly(0), d in 0u32..=3, extra in 0usize..4) {
        let deg = h.max_degree().unwrap_or(0) as usize;
        let n = deg + DEFAULT_WINDOW + extra;
        let series = HilbertSeries::new(h.clone(), d);
        let values = series.expand(n);
        prop_assert_eq!(fit_h_polynomial(&values, d, DEFAULT_WINDOW).unwrap(), h);
    }

    #[test]
    fn expand_and_fit_are_additive(a in poly(0), b in poly(0), d in 0u32..=3) {
        let n = 16;
        let sa = HilbertSeries::new(a.clone(), d).expand(n);
        let sb = HilbertSeries::new(b.clone(), d).expand(n);
        let sum = HilbertSeries::new(&a + &b, d).expand(n);
        let added: Vec<BigInt> = sa.iter().zip(&sb).map(|(x, y)| x + y).collect();
        prop_assert_eq!(&sum, &added);
        prop_assert_eq!(fit_h_polynomial(&added, d, DEFAULT_WINDOW).unwrap(), &a + &b);
    }

    #[test]
    fn symmetry_is_reversal_fixed_point(h in poly(-3)) {
        if let (Some(lo), Some(hi)) = (h.min_degree(), h.max_degree()) {
            prop_assert_eq!(h.is_symmetric(), h.reverse(lo + hi) == h);
            let palindrome = &h + &h.reverse(lo + hi);
            if !palindrome.is_zero() {
                prop_assert!(palindrome.is_symmetric());
            }
        }
    }

    #[test]
    fn zeroth_coefficient_is_multiplicity(h in poly(0)) {
        prop_assert_eq!(h.hilbert_coefficient(0).unwrap(), h.multiplicity());
    }

    #[test]
    fn reverse_is_an_involution(h in poly(-2), r in -5i64..5) {
        prop_assert_eq!(h.reverse(r).reverse(r), h);
    }

    #[test]
    fn json_round_trip(h in poly(-4)) {
        let s = serde_json::to_string(&h).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), h);
    }
}
