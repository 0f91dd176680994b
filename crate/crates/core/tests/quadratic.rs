mod common;

use std::collections::BTreeSet;

use common::quadratic;
use proptest::prelude::*;
use quadword::quadratic::{delete_symbols, is_orientable, is_quadratic, signature, specialisations};
use quadword::{QuadraticTuple, QuadraticWord, Word};

proptest! {
    #[test]
    fn signature_is_total(q in quadratic(6)) {
        let sig = signature(&q);
        prop_assert_eq!(sig.len(), q.symbols().len());
        let mut non_alternating = 0;
        for s in q.symbols() {
            let (i, j) = q.occurrences(s).unwrap();
            let (e, d) = sig.get(s).unwrap();
            prop_assert_eq!((e, d), (q.letters()[i].exponent(), q.letters()[j].exponent()));
            let o = sig.orientation(s).unwrap();
            prop_assert!(o == 1 || o == -1);
            prop_assert_eq!(o, -e * d);
            non_alternating += usize::from(o == -1);
        }
        prop_assert_eq!(is_orientable(&q), non_alternating == 0);
    }

    #[test]
    fn specialisations_are_quadratic_and_contain_self(q in quadratic(4)) {
        let specs = specialisations(&q);
        prop_assert!(specs.iter().any(|s| s.len() == q.len()));
        for s in &specs {
            prop_assert!(!s.is_empty());
            prop_assert!(is_quadratic(&[s.word().clone()]));
        }
        let one = *q.symbols().first().unwrap();
        let d = delete_symbols(&q, &BTreeSet::from([one]));
        prop_assert_eq!(d.len(), q.len() - 2);
    }

    #[test]
    fn tuples_concatenate(q in quadratic(5), cut in 0usize..10) {
        let cut = cut.min(q.len());
        let w = q.word();
        let t = QuadraticTuple::new(vec![w.slice(0, cut), w.slice(cut, w.len())]).unwrap();
        prop_assert_eq!(t.concatenation(), q);
    }
}

#[test]
fn non_quadratic_rejected() {
    for s in ["a", "aab", "aaa", "abAc"] {
        assert!(QuadraticWord::new(s.parse::<Word>().unwrap()).is_err(), "{s}");
    }
}
