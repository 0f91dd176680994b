use num_rational::Rational64;

use super::GroupOracle;
use crate::words::{conjugator_free, cyclic_normal_form, Symbol, Word};

/// The free group on a finite set of symbols; `δ = 0`.
#[derive(Clone, Debug)]
pub struct FreeGroup {
    gens: Vec<Symbol>,
}

impl FreeGroup {
    pub fn new(mut gens: Vec<Symbol>) -> FreeGroup {
        gens.sort();
        gens.dedup();
        FreeGroup { gens }
    }

    /// Free group on `a, b, …` with `rank` generators.
    pub fn of_rank(rank: usize) -> FreeGroup {
        FreeGroup::new((0..rank).map(Symbol::nth).collect())
    }
}

impl GroupOracle for FreeGroup {
    fn name(&self) -> String {
        let g: Vec<String> = self.gens.iter().map(|s| s.to_string()).collect();
        format!("free:{}", g.join(","))
    }

    fn generators(&self) -> &[Symbol] {
        &self.gens
    }

    fn minimal_word(&self, w: &Word) -> Word {
        w.free_reduce()
    }

    fn ball(&self, k: usize) -> Vec<Word> {
        let mut letters: Vec<_> = self.gens.iter().flat_map(|g| [g.pos(), g.neg()]).collect();
        letters.sort();
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..k {
            let mut next = Vec::new();
            for w in &layer {
                for &l in &letters {
                    if w.letters().last().is_some_and(|p| p.is_inverse_of(l)) {
                        continue;
                    }
                    let mut v = w.letters().to_vec();
                    v.push(l);
                    next.push(Word::new(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    fn ball_size(&self, k: usize) -> usize {
        let r = self.gens.len();
        if r == 0 {
            return 1;
        }
        let mut total = 1usize;
        let mut layer = 2 * r;
        for i in 0..k {
            if i > 0 {
                layer = layer.saturating_mul(2 * r - 1);
            }
            total = total.saturating_add(layer);
        }
        total
    }

    fn are_conjugate(&self, u: &Word, v: &Word) -> Option<Word> {
        conjugator_free(u, v)
    }

    fn conjugacy_key(&self, w: &Word) -> Option<Word> {
        Some(cyclic_normal_form(w).into_word())
    }

    fn delta(&self) -> Rational64 {
        Rational64::from_integer(0)
    }

    fn is_free(&self) -> bool {
        true
    }
}
