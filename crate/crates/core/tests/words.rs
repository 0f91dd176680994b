mod common;

use common::{naive_conjugate, naive_core, naive_reduce, word};
use proptest::prelude::*;
use quadword::words::{conjugator_free, cyclic_normal_form, cyclic_reduce, free_reduce, is_conjugate_free};

proptest! {
    #[test]
    fn reduction_matches_naive_rewriting(w in word(3, 24)) {
        prop_assert_eq!(free_reduce(&w), naive_reduce(&w));
    }

    #[test]
    fn reduction_is_idempotent_and_shortens(w in word(3, 24)) {
        let r = free_reduce(&w);
        prop_assert_eq!(free_reduce(&r), r.clone());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.len() % 2, w.len() % 2);
        prop_assert!(r.is_reduced());
    }

    #[test]
    fn reduction_is_a_homomorphism(u in word(3, 16), v in word(3, 16)) {
        prop_assert_eq!(free_reduce(&u.concat(&v)), free_reduce(&free_reduce(&u).concat(&free_reduce(&v))));
    }

    #[test]
    fn cyclic_reduce_contract(w in word(3, 24)) {
        let (c, core) = cyclic_reduce(&w);
        prop_assert!(core.is_cyclically_reduced());
        prop_assert_eq!(core.clone(), naive_core(&w));
        prop_assert_eq!(free_reduce(&c.concat(&core).concat(&c.inverse())), free_reduce(&w));
        let r = free_reduce(&w);
        prop_assert_eq!(r.slice(0, c.len()), c);
    }

    #[test]
    fn normal_form_invariant_under_rotation_and_conjugation(w in word(3, 16), g in word(3, 8), k in 0usize..16) {
        let n = cyclic_normal_form(&w);
        let core = naive_core(&w);
        if !core.is_empty() {
            prop_assert_eq!(cyclic_normal_form(&core.rotate(k % core.len())), n.clone());
        }
        prop_assert_eq!(cyclic_normal_form(&g.concat(&w).concat(&g.inverse())), n.clone());
        prop_assert!(n.word().is_cyclically_reduced());
    }

    #[test]
    fn conjugacy_matches_rotation_search(u in word(2, 10), g in word(2, 6), flip in any::<bool>()) {
        // half the time v is a genuine conjugate of u
        let v = if flip { g.concat(&u).concat(&g.inverse()) } else { g.clone() };
        let want = naive_conjugate(&u, &v);
        prop_assert_eq!(is_conjugate_free(&u, &v), want);
        prop_assert_eq!(cyclic_normal_form(&u) == cyclic_normal_form(&v), want);
        match conjugator_free(&u, &v) {
            Some(c) => prop_assert_eq!(free_reduce(&c.concat(&v).concat(&c.inverse())), free_reduce(&u)),
            None => prop_assert!(!want),
        }
    }
}

#[test]
fn empty_word_is_reduced() {
    let e = quadword::Word::empty();
    assert!(e.is_reduced() && e.is_cyclically_reduced());
    assert!(cyclic_normal_form(&e).is_empty());
}
