#![allow(dead_code)]

use proptest::prelude::*;
use quadword::{Letter, QuadraticWord, Symbol, Word};

/// Words of length `< max` over the first `k` generators, not necessarily reduced.
pub fn word(k: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..k, any::<bool>()), 0..max)
        .prop_map(|v| v.into_iter().map(|(s, p)| Letter::new(Symbol::nth(s), if p { 1 } else { -1 })).collect())
}

/// Quadratic words on `1..=k` symbols: a shuffle of two copies of each
/// symbol with independent signs.
pub fn quadratic(k: usize) -> impl Strategy<Value = QuadraticWord> {
    (1..=k)
        .prop_flat_map(|n| {
            let slots: Vec<usize> = (0..n).flat_map(|s| [s, s]).collect();
            (Just(slots).prop_shuffle(), prop::collection::vec(any::<bool>(), 2 * n))
        })
        .prop_map(|(slots, signs)| {
            let w: Word = slots
                .into_iter()
                .zip(signs)
                .map(|(s, p)| Letter::new(Symbol::nth(s), if p { 1 } else { -1 }))
                .collect();
            QuadraticWord::new(w).unwrap()
        })
}

/// Reduction by repeated deletion of the leftmost cancelling pair.
pub fn naive_reduce(w: &Word) -> Word {
    let mut v = w.letters().to_vec();
    while let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i].is_inverse_of(v[i + 1])) {
        v.drain(i..i + 2);
    }
    Word::new(v)
}

/// Strips matching inverse letters from both ends of a reduced word.
pub fn naive_core(w: &Word) -> Word {
    let mut v = naive_reduce(w).letters().to_vec();
    while v.len() >= 2 && v[0].is_inverse_of(v[v.len() - 1]) {
        v.pop();
        v.remove(0);
    }
    Word::new(v)
}

/// Free conjugacy by searching the rotations of the cyclic cores.
pub fn naive_conjugate(u: &Word, v: &Word) -> bool {
    let (a, b) = (naive_core(u), naive_core(v));
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|k| a.rotate(k) == b))
}

pub fn commutator(a: &Word, b: &Word) -> Word {
    a.concat(b).concat(&a.inverse()).concat(&b.inverse())
}
