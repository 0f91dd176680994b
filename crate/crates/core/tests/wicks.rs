use std::collections::BTreeSet;

use proptest::prelude::*;
use quadword::wicks::{canonicalize, enumerate_wicks, is_wicks_form, wicks_forms, WicksForm};
use quadword::{HalfInt, Letter, QuadraticWord, Symbol, Word};

fn forms() -> Vec<WicksForm> {
    let mut out = enumerate_wicks(HalfInt::ONE, true).unwrap();
    out.extend(enumerate_wicks(HalfInt::ONE, false).unwrap());
    out.extend(enumerate_wicks(HalfInt::from_twice(3), false).unwrap());
    out
}

/// Applies a rotation, optional word inversion, inversion of a subset of
/// symbols and a renaming onto fresh letters.
fn scramble(w: &Word, k: usize, invert: bool, flips: u32, perm: &[usize]) -> Word {
    let syms: Vec<Symbol> = w.support().into_iter().collect();
    let idx = |s: Symbol| syms.iter().position(|&t| t == s).unwrap();
    let mut v = w.rotate(k % w.len());
    if invert {
        v = v.inverse();
    }
    v.letters()
        .iter()
        .map(|l| {
            let i = idx(l.symbol());
            let e = if flips >> i & 1 == 1 { -l.exponent() } else { l.exponent() };
            Letter::new(Symbol::nth(perm[i] + 10), e)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_is_orbit_invariant(
        i in any::<prop::sample::Index>(),
        k in 0usize..24,
        invert in any::<bool>(),
        flips in any::<u32>(),
        perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let all = forms();
        let f = &all[i.index(all.len())];
        let w = scramble(f.word.word(), k, invert, flips, &perm);
        let q = QuadraticWord::new(w.clone()).unwrap();
        prop_assert_eq!(canonicalize(&q), canonicalize(&f.word));
        prop_assert!(is_wicks_form(&w, f.genus));
    }
}

#[test]
fn enumerated_forms_satisfy_invariants() {
    for (n, orientable) in [(1, true), (1, false), (2, false), (3, false)] {
        let n = HalfInt::from_twice(if orientable { 2 * n } else { n });
        let fs = enumerate_wicks(n, orientable).unwrap();
        let canon: BTreeSet<_> = fs.iter().map(|f| canonicalize(&f.word)).collect();
        assert_eq!(canon.len(), fs.len(), "duplicate classes at genus {n}");
        for f in &fs {
            assert!(is_wicks_form(f.word.word(), n));
            assert_eq!(f.word.len() % 2, 0);
            if orientable {
                let k = n.to_int().unwrap() as usize;
                assert!(4 * k <= f.word.len() && f.word.len() <= 12 * k - 6, "{}", f.word);
            }
        }
    }
}

#[test]
fn standard_orientable_forms_present() {
    for (n, std) in [(2, "abABcdCD"), (3, "abABcdCDefEF")] {
        let std = canonicalize(&QuadraticWord::lit(std));
        let fs = wicks_forms(HalfInt::from_int(n), true, 4 * n as usize).unwrap();
        assert!(fs.iter().any(|f| canonicalize(&f.word) == std), "genus {n}");
    }
}
