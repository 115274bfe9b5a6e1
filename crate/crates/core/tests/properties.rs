use num_traits::Signed;
use orthohaar::{
    canonicalize, classify, evaluate, parse_monomial, vanishes_by_invariance, Classification,
    Factor, Monomial,
};
use proptest::prelude::*;

fn monomial_strategy(max_index: usize, max_power: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1..=max_index, 1..=max_index, 0..=max_power), 0..7)
        .prop_map(|fs| Monomial::new(fs.into_iter().map(|(r, c, p)| Factor::new(r, c, p))))
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn canonical_form_ignores_relabeling(
        m in monomial_strategy(4, 3),
        rows in permutation(6),
        cols in permutation(6),
    ) {
        let relabeled = m.relabel(|i| rows[i - 1], |j| cols[j - 1]);
        prop_assert_eq!(canonicalize(&m), canonicalize(&relabeled));
    }

    #[test]
    fn canonical_form_ignores_transposition(m in monomial_strategy(4, 3)) {
        prop_assert_eq!(canonicalize(&m), canonicalize(&m.transpose()));
    }

    #[test]
    fn canonicalization_is_idempotent(m in monomial_strategy(4, 3)) {
        let d = canonicalize(&m);
        prop_assert_eq!(canonicalize(&d.to_monomial()), d.clone());
        prop_assert_eq!(d.order(), m.order());
    }

    #[test]
    fn vanishing_is_stable_under_canonicalization(m in monomial_strategy(4, 3)) {
        let d = canonicalize(&m);
        let odd_row = (1..=4).any(|r| m.factors().iter().filter(|f| f.row == r).map(|f| f.power).sum::<u32>() % 2 == 1);
        let odd_col = (1..=4).any(|c| m.factors().iter().filter(|f| f.col == c).map(|f| f.power).sum::<u32>() % 2 == 1);
        prop_assert_eq!(vanishes_by_invariance(&d), odd_row || odd_col);
        prop_assert_eq!(vanishes_by_invariance(&canonicalize(&d.to_monomial())), vanishes_by_invariance(&d));
    }

    #[test]
    fn evaluation_is_invariant(
        m in monomial_strategy(3, 3),
        rows in permutation(6),
        cols in permutation(6),
        transpose in any::<bool>(),
    ) {
        let mut other = m.relabel(|i| rows[i - 1], |j| cols[j - 1]);
        if transpose {
            other = other.transpose();
        }
        prop_assert_eq!(evaluate(&m, 6), evaluate(&other, 6));
    }

    #[test]
    fn text_round_trip(m in monomial_strategy(9, 5)) {
        prop_assert_eq!(parse_monomial(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn direct_integrals_are_positive(
        lines in prop::collection::vec(1u32..=4, 1..=3),
        z in (0u32..=3, 0u32..=3, 1u32..=3),
        n in 3usize..=9,
    ) {
        let fan = Monomial::new(lines.iter().enumerate().map(|(k, &h)| Factor::new(1, k + 1, 2 * h)));
        let fan_value = evaluate(&fan, n).unwrap().value.unwrap();
        prop_assert!(fan_value.is_positive());
        let zm = Monomial::from_triples(&[(1, 1, 2 * z.0), (1, 2, 2 * z.1), (2, 2, 2 * z.2)]);
        let r = evaluate(&zm, n).unwrap();
        prop_assert!(r.value.unwrap().is_positive());
    }
}

#[test]
fn exchange_base_is_negative() {
    let m = parse_monomial("O(1,1) O(2,1) O(2,2) O(1,2)").unwrap();
    for n in 3..30 {
        let r = evaluate(&m, n).unwrap();
        assert_eq!(r.classification, Classification::Exchange);
        assert!(r.value.unwrap().is_negative());
    }
}

#[test]
fn classification_is_total() {
    // every small monomial gets some classification without panicking
    for a in 0..3u32 {
        for b in 0..3u32 {
            for c in 0..3u32 {
                for d in 0..3u32 {
                    let m = Monomial::from_triples(&[(1, 1, a), (1, 2, b), (2, 1, c), (3, 3, d)]);
                    let _ = classify(&canonicalize(&m));
                }
            }
        }
    }
}
