//! Brute-force solution of the standard quadratic equations, and the genus
//! of tuples.
//!
//! `brute_force_genus(w, n, +, L)` asks whether `v w⁻¹ v⁻¹ Π_{i≤n}[x_i, y_i]`
//! vanishes for some `x_i, y_i ∈ B(L)` and arbitrary `v`; the non-orientable
//! version uses `2n` squares `x_i²`. Eliminating `v` leaves a conjugacy test
//! of `w` against each product.

use std::collections::HashSet;

use super::matching::{genus_minus_free, genus_plus_free};
use super::{Budget, Meter, Verdict};
use crate::halfint::HalfInt;
use crate::oracle::GroupOracle;
use crate::words::Word;

/// Step cap for single brute-force calls.
const BRUTE_STEPS: u64 = 400_000_000;

fn factor_count(n: HalfInt, orientable: bool) -> Option<usize> {
    if n < HalfInt::ZERO {
        return None;
    }
    if orientable {
        n.to_int().map(|k| k as usize)
    } else {
        Some(n.twice() as usize)
    }
}

/// Distinct values of `[x, y]` (or `x²`) for `x, y ∈ B(L)`, in a fixed
/// order, identity first.
fn factors(o: &dyn GroupOracle, orientable: bool, l: usize) -> Vec<Word> {
    let ball = o.ball(l);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |w: Word| {
        if seen.insert(w.clone()) {
            out.push(w);
        }
    };
    push(Word::empty());
    if orientable {
        for x in &ball {
            for y in &ball {
                let c: Word = [x, y, &x.inverse(), &y.inverse()]
                    .iter()
                    .flat_map(|p| p.letters().iter().copied())
                    .collect();
                push(o.minimal_word(&c));
            }
        }
    } else {
        for x in &ball {
            push(o.minimal_word(&x.concat(x)));
        }
    }
    out
}

/// Distinct products of `k − 1` factors.
fn prefixes(o: &dyn GroupOracle, fac: &[Word], k: usize, meter: &mut Meter) -> Option<Vec<Word>> {
    let mut cur = vec![Word::empty()];
    for _ in 1..k {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for p in &cur {
            for f in fac {
                if !meter.tick() {
                    return None;
                }
                let q = o.minimal_word(&p.concat(f));
                if seen.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        cur = next;
    }
    Some(cur)
}

fn class_key(o: &dyn GroupOracle, w: &Word, max_len: usize) -> Option<Word> {
    if o.is_free() {
        // cheap length test before the rotation search
        let core = w.cyclic_reduce().1;
        if core.len() > max_len {
            return None;
        }
        return o.conjugacy_key(&core);
    }
    o.conjugacy_key(w).filter(|k| k.len() <= max_len)
}

/// Whether `w` is conjugate to a product of `n` commutators (`2n` squares)
/// of elements of `B(L)`.
pub fn brute_force_genus(w: &Word, n: HalfInt, orientable: bool, l: usize, o: &dyn GroupOracle) -> Verdict {
    let Some(k) = factor_count(n, orientable) else {
        return Verdict::False;
    };
    if o.is_trivial(w) {
        return Verdict::True;
    }
    if k == 0 {
        return Verdict::False;
    }
    let mut meter = Meter::new(&Budget { max_steps: BRUTE_STEPS, ..Budget::default() });
    let fac = factors(o, orientable, l);
    let Some(pre) = prefixes(o, &fac, k, &mut meter) else {
        return Verdict::Indeterminate;
    };
    let target = o.conjugacy_key(w);
    let target_len = target.as_ref().map_or(usize::MAX, Word::len);
    for p in &pre {
        for f in &fac {
            if !meter.tick() {
                return Verdict::Indeterminate;
            }
            let q = o.minimal_word(&p.concat(f));
            let hit = match &target {
                Some(t) => class_key(o, &q, target_len).as_ref() == Some(t),
                None => o.are_conjugate(w, &q).is_some(),
            };
            if hit {
                return Verdict::True;
            }
        }
    }
    Verdict::False
}

/// Precomputed conjugacy classes of all products for one `(n, orientability,
/// L)`, restricted to keys of length at most `max_key_len`. Answers many
/// [`brute_force_genus`] queries at once.
pub struct BruteForce {
    keys: HashSet<Word>,
    max_key_len: usize,
    complete: bool,
}

impl BruteForce {
    /// `None` if the backend has no conjugacy keys.
    pub fn build(
        o: &dyn GroupOracle,
        n: HalfInt,
        orientable: bool,
        l: usize,
        max_key_len: usize,
        max_steps: u64,
    ) -> Option<BruteForce> {
        o.conjugacy_key(&Word::empty())?;
        let mut keys = HashSet::new();
        keys.insert(o.conjugacy_key(&Word::empty())?);
        let Some(k) = factor_count(n, orientable) else {
            return Some(BruteForce { keys: HashSet::new(), max_key_len, complete: true });
        };
        if k == 0 {
            return Some(BruteForce { keys, max_key_len, complete: true });
        }
        let mut meter = Meter::new(&Budget { max_steps, ..Budget::default() });
        let fac = factors(o, orientable, l);
        let Some(pre) = prefixes(o, &fac, k, &mut meter) else {
            return Some(BruteForce { keys, max_key_len, complete: false });
        };
        // the last factor can be cycled to the front, so unordered pairs
        // suffice when there are exactly two factors
        let two = k == 2;
        let mut complete = true;
        'outer: for (i, p) in pre.iter().enumerate() {
            // with two factors `pre` is `fac` itself
            let start = if two { i } else { 0 };
            for f in &fac[start..] {
                if !meter.tick() {
                    complete = false;
                    break 'outer;
                }
                let q = o.minimal_word(&p.concat(f));
                if let Some(key) = class_key(o, &q, max_key_len) {
                    keys.insert(key);
                }
            }
        }
        Some(BruteForce { keys, max_key_len, complete })
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// The [`brute_force_genus`] answer for `w`.
    pub fn admits(&self, o: &dyn GroupOracle, w: &Word) -> Verdict {
        match class_key(o, &o.minimal_word(w), self.max_key_len) {
            Some(k) if self.keys.contains(&k) => Verdict::True,
            Some(_) if self.complete => Verdict::False,
            _ => Verdict::Indeterminate,
        }
    }
}

fn diameter(o: &dyn GroupOracle) -> Option<usize> {
    let order = o.order()?;
    (0..).find(|&k| o.ball_size(k) >= order)
}

/// `genus(p) ≤ n` for a single element.
fn element_genus_le(p: &Word, n: HalfInt, orientable: bool, o: &dyn GroupOracle) -> Verdict {
    if n < HalfInt::ZERO {
        return Verdict::False;
    }
    if o.is_free() {
        return Verdict::from_bool(if orientable {
            n.to_int().is_some_and(|k| genus_plus_free(p, k as usize).is_some())
        } else {
            genus_minus_free(p, n).is_some()
        });
    }
    match diameter(o) {
        Some(d) => brute_force_genus(p, n, orientable, d, o),
        None => Verdict::Indeterminate,
    }
}

/// Whether `genus_H(c₁, …, c_t) ≤ n`: some product `Π r_i c_i r_i⁻¹` of
/// genus at most `n`. Conjugators range over `B(max_ball)` (the whole group
/// for finite backends) with `r₁ = 1`.
pub fn genus_tuple(c: &[Word], n: HalfInt, orientable: bool, o: &dyn GroupOracle, budget: &Budget) -> Verdict {
    if n < HalfInt::ZERO || (orientable && !n.is_integer()) {
        return Verdict::False;
    }
    let t = c.len();
    if t == 0 {
        return Verdict::True;
    }
    if o.is_free() {
        let total = c.iter().fold(Word::empty(), |a, w| a.concat(w)).exponent_sums();
        let bad = if orientable {
            total.values().any(|&e| e != 0)
        } else {
            total.values().any(|&e| e % 2 != 0)
        };
        if bad {
            return Verdict::False;
        }
    }
    if t == 1 {
        return element_genus_le(&c[0], n, orientable, o);
    }
    if n == HalfInt::ZERO && t == 2 {
        let inv = c[1].inverse();
        let same = match (o.conjugacy_key(&c[0]), o.conjugacy_key(&inv)) {
            (Some(a), Some(b)) => a == b,
            _ => o.are_conjugate(&c[0], &inv).is_some(),
        };
        return Verdict::from_bool(same);
    }
    let (rad, exhaustive) = match diameter(o) {
        Some(d) => (d, true),
        None => (budget.max_ball, false),
    };
    let ball = o.ball(rad);
    let mut meter = Meter::new(budget);
    let mut unsure = false;
    let mut idx = vec![0usize; t - 1];
    loop {
        if !meter.tick() {
            return Verdict::Indeterminate;
        }
        let mut p = c[0].clone();
        for (j, &i) in idx.iter().enumerate() {
            let r = &ball[i];
            p = o.minimal_word(&p.concat(r).concat(&c[j + 1]).concat(&r.inverse()));
        }
        match element_genus_le(&p, n, orientable, o) {
            Verdict::True => return Verdict::True,
            Verdict::Indeterminate => unsure = true,
            Verdict::False => {}
        }
        // odometer over conjugator tuples
        let mut j = 0;
        loop {
            if j == idx.len() {
                return if exhaustive && !unsure { Verdict::False } else { Verdict::Indeterminate };
            }
            idx[j] += 1;
            if idx[j] < ball.len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}
