mod common;

use common::{commutator, word};
use proptest::prelude::*;
use quadword::detect::{
    genus_minus_free, genus_plus_free, is_commutator_free, is_commutator_oracle, is_square_oracle,
    is_two_squares_free, search_genus, verify_certificate, Budget, Search,
};
use quadword::oracle::FreeGroup;
use quadword::words::{free_reduce, is_conjugate_free};
use quadword::{HalfInt, Letter, Symbol, Word};

fn short() -> impl Strategy<Value = Word> {
    word(2, 4).prop_map(|w| free_reduce(&w))
}

fn conj(g: &Word, w: &Word) -> Word {
    free_reduce(&g.concat(w).concat(&g.inverse()))
}

/// Every cyclically reduced word of length at most `n` over `a, b`.
fn all_cyclically_reduced(n: usize) -> Vec<Word> {
    let letters: Vec<Letter> = (0..2).flat_map(|i| [Symbol::nth(i).pos(), Symbol::nth(i).neg()]).collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| letters.iter().map(move |&l| w.concat(&Word::from(l))))
            .filter(|w| w.is_reduced())
            .collect();
        out.extend(layer.iter().filter(|w| w.is_cyclically_reduced()).cloned());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn commutator_witnesses_are_sound(u in short(), v in short(), g in short()) {
        let h = conj(&g, &commutator(&u, &v));
        let (a, b) = is_commutator_free(&h).expect("a commutator");
        prop_assert_eq!(free_reduce(&commutator(&a, &b)), h.clone());
        let f = FreeGroup::of_rank(2);
        match is_commutator_oracle(&h, &f, &Budget::default()) {
            Search::Found(w) => prop_assert!(w.verify(&h, &f)),
            other => prop_assert!(false, "{h}: {other:?}"),
        }
    }

    #[test]
    fn oracle_agrees_with_free_off_commutators(u in short(), v in short(), x in word(2, 3)) {
        let h = free_reduce(&commutator(&u, &v).concat(&x));
        let f = FreeGroup::of_rank(2);
        let free = is_commutator_free(&h).is_some();
        prop_assert_eq!(is_commutator_oracle(&h, &f, &Budget::default()).verdict().is_true(), free);
    }

    #[test]
    fn two_square_witnesses_are_sound(u in short(), v in short(), g in short()) {
        let h = conj(&g, &u.pow(2).concat(&v.pow(2)));
        let (a, b) = is_two_squares_free(&h).expect("a product of two squares");
        prop_assert_eq!(free_reduce(&a.pow(2).concat(&b.pow(2))), h.clone());
        let f = FreeGroup::of_rank(2);
        let sq = conj(&g, &u.pow(2));
        match is_square_oracle(&sq, &f, &Budget::default()) {
            Search::Found(w) => prop_assert!(w.verify(&sq, &f)),
            other => prop_assert!(false, "{sq}: {other:?}"),
        }
    }

    #[test]
    fn genus_is_conjugation_invariant_and_monotone(u in short(), v in short(), x in word(2, 3), g in short()) {
        let w = free_reduce(&commutator(&u, &v).concat(&x));
        let c = conj(&g, &w);
        let plus = genus_plus_free(&w, 1);
        prop_assert_eq!(genus_plus_free(&c, 1), plus);
        if let Some(k) = plus {
            prop_assert_eq!(genus_plus_free(&w, 2), Some(k));
        }
        let minus = genus_minus_free(&w, HalfInt::ONE);
        prop_assert_eq!(genus_minus_free(&c, HalfInt::ONE), minus);
        if let Some(k) = minus {
            prop_assert_eq!(genus_minus_free(&w, HalfInt::from_twice(3)), Some(k));
        }
        prop_assert_eq!(is_commutator_free(&c).is_some(), is_commutator_free(&w).is_some());
        prop_assert_eq!(is_two_squares_free(&c).is_some(), is_two_squares_free(&w).is_some());
    }

    #[test]
    fn certificates_found_are_valid(u in short(), v in short(), g in short()) {
        let h = conj(&g, &commutator(&u, &v));
        prop_assume!(!h.is_empty());
        let f = FreeGroup::of_rank(2);
        let cert = search_genus(&h, HalfInt::ONE, true, &f, &Budget::default()).found().expect("certificate");
        let report = verify_certificate(&h, &cert, &f);
        prop_assert!(report.holds(), "{:?}", report);
        // the same certificate does not certify a different element
        let other = free_reduce(&h.concat(&Symbol::nth(0).pos().into()));
        prop_assert!(!verify_certificate(&other, &cert, &f).holds());
    }
}

#[test]
fn square_filter_is_exact() {
    for w in all_cyclically_reduced(8) {
        let even = w.exponent_sums().values().all(|e| e % 2 == 0);
        assert_eq!(genus_minus_free(&w, HalfInt::from_int(2)).is_some(), even, "{w}");
    }
}

#[test]
fn conjugate_results_agree_on_small_words() {
    let words = all_cyclically_reduced(4);
    for w in &words {
        for g in &words[..5] {
            let c = conj(g, w);
            assert!(is_conjugate_free(&c, w));
            assert_eq!(genus_plus_free(&c, 2), genus_plus_free(w, 2), "{w} by {g}");
        }
    }
}
