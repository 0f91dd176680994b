mod common;

use common::{naive_conjugate, word};
use proptest::prelude::*;
use quadword::oracle::{FiniteGroup, FreeGroup, GroupOracle};
use quadword::words::is_conjugate_free;
use quadword::{Symbol, Word};

fn s3() -> FiniteGroup {
    let g = [(Symbol::nth(0), "(1,2)".to_string()), (Symbol::nth(1), "(1,2,3)".to_string())];
    FiniteGroup::from_permutations("s3", &g).unwrap()
}

fn d4() -> FiniteGroup {
    let g = [(Symbol::nth(0), "(1,3)".to_string()), (Symbol::nth(1), "(1,2,3,4)".to_string())];
    FiniteGroup::from_permutations("d4", &g).unwrap()
}

fn backends() -> Vec<Box<dyn GroupOracle>> {
    vec![Box::new(FreeGroup::of_rank(2)), Box::new(s3()), Box::new(d4())]
}

proptest! {
    #[test]
    fn triangle_inequality(u in word(2, 12), v in word(2, 12)) {
        for o in backends() {
            let uv = u.concat(&v);
            prop_assert!(o.minimal_length(&uv) <= o.minimal_length(&u) + o.minimal_length(&v));
            prop_assert!(o.are_equal(&o.minimal_word(&uv), &uv));
            prop_assert!(o.minimal_length(&u) <= u.len());
        }
    }

    #[test]
    fn conjugacy_witnesses_verify(u in word(2, 8), v in word(2, 8), g in word(2, 5)) {
        for o in backends() {
            for v in [v.clone(), g.concat(&u).concat(&g.inverse())] {
                if let Some(w) = o.are_conjugate(&u, &v) {
                    prop_assert!(o.are_equal(&u, &w.concat(&v).concat(&w.inverse())));
                }
            }
        }
    }

    #[test]
    fn free_conjugacy_agrees_with_words(u in word(2, 10), v in word(2, 10), g in word(2, 5), flip in any::<bool>()) {
        let f = FreeGroup::of_rank(2);
        let v = if flip { g.concat(&u).concat(&g.inverse()) } else { v };
        let want = naive_conjugate(&u, &v);
        prop_assert_eq!(f.are_conjugate(&u, &v).is_some(), want);
        prop_assert_eq!(is_conjugate_free(&u, &v), want);
    }

    #[test]
    fn finite_equality_matches_permutation_product(u in word(2, 14), v in word(2, 14)) {
        let g = s3();
        prop_assert_eq!(g.are_equal(&u, &v), g.eval(&u) == g.eval(&v));
        prop_assert_eq!(g.eval(&g.minimal_word(&u)), g.eval(&u));
    }
}

#[test]
fn balls_are_nested() {
    for o in backends() {
        assert_eq!(o.ball(0), vec![Word::empty()]);
        for k in 0..5 {
            let (a, b) = (o.ball(k), o.ball(k + 1));
            assert!(a.iter().all(|w| b.contains(w)), "{} radius {k}", o.name());
            assert_eq!(a.len(), o.ball_size(k));
        }
    }
    assert_eq!(FreeGroup::of_rank(2).ball_size(3), 1 + 4 + 12 + 36);
}

#[test]
fn finite_conjugacy_is_exhaustive() {
    // exhaustive check of every pair of elements of D4
    let g = d4();
    let n = g.order();
    for x in 0..n {
        for y in 0..n {
            let want = (0..n).any(|c| g.conjugate(c, y) == x);
            let got = g.are_conjugate(g.word_of(x), g.word_of(y)).is_some();
            assert_eq!(got, want, "{x} {y}");
        }
    }
}

#[test]
fn unknown_generator_rejected() {
    let f = FreeGroup::of_rank(2);
    assert!(f.check_word(&"abc".parse().unwrap()).is_err());
    assert!(f.check_word(&"abAB".parse().unwrap()).is_ok());
}
