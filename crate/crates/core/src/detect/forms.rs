//! Commutator and square forms over a group oracle.
//!
//! Form 1 of each list is searched by enumerating ball elements. The other
//! forms are searched over minimal words `F` of conjugates of `h`, split
//! into pieces, with the `ξ`/`ρ` correction words drawn from a ball.
//!
//! Over a free group the searches are complete: the cyclic core of a
//! commutator (square) matches one of the genus-1 (genus-1/2) Wicks forms
//! literally under a cancellation-free labelling, which form 1 finds when the pieces are short and the other
//! forms find with trivial corrections otherwise. Over a finite group the
//! balls saturate and form 1 alone is complete.

use serde::Serialize;

use super::{Budget, Meter, Search};
use crate::halfint::HalfInt;
use crate::oracle::GroupOracle;
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum CommutatorWitness {
    /// `h = R·XYZX⁻¹Y⁻¹Z⁻¹·R⁻¹`.
    Form1 { x: Word, y: Word, z: Word, r: Word },
    /// `F = A₁A₂⁻¹`, `A₁ = ξ₁⁻¹A₂ξ₂`, `ξ₁ ~ ξ₂`.
    Form2 { a1: Word, a2: Word, xi: [Word; 2], r: Word },
    /// `F = A₁B₁A₂⁻¹B₂⁻¹`, `A₁ = ξ₁A₂ξ₃`, `B₁ = ξ₄B₂ξ₂`, `ξ₁ξ₂ξ₃ξ₄ = 1`.
    Form3 { a1: Word, b1: Word, a2: Word, b2: Word, xi: [Word; 4], r: Word },
    /// `F = A₁B₁C₁A₂⁻¹B₂⁻¹C₂⁻¹`, `A₁ = ξ₁A₂ρ₁`, `B₁ = ρ₂B₂ξ₂`,
    /// `C₁ = ξ₃C₂ρ₃`, `ξ₁ξ₂ξ₃ = ρ₁ρ₂ρ₃ = 1`.
    Form4 { a1: Word, b1: Word, c1: Word, a2: Word, b2: Word, c2: Word, xi: [Word; 3], rho: [Word; 3], r: Word },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum SquareWitness {
    /// `h = R·X²·R⁻¹`.
    Form1 { x: Word, r: Word },
    /// `F = A₁A₂` with `A₁ = ξA₂ξ`.
    Form2 { a1: Word, a2: Word, xi: Word, r: Word },
}

fn mul(o: &dyn GroupOracle, parts: &[&Word]) -> Word {
    let w: Word = parts.iter().flat_map(|p| p.letters().iter().copied()).collect();
    o.minimal_word(&w)
}

/// Shortest `r` with `|r| ≤ bound` and `h = r f r⁻¹`.
pub(crate) fn bounded_conjugator(o: &dyn GroupOracle, h: &Word, f: &Word, bound: usize) -> Option<Word> {
    if o.order().is_some() {
        return o
            .ball(bound)
            .into_iter()
            .find(|r| o.are_equal(h, &mul(o, &[r, f, &r.inverse()])));
    }
    o.are_conjugate(h, f).filter(|r| r.len() <= bound)
}

/// Conjugacy-class test, through keys when the backend has them.
struct ClassTest<'a> {
    o: &'a dyn GroupOracle,
    h: Word,
    key: Option<Word>,
}

impl<'a> ClassTest<'a> {
    fn new(o: &'a dyn GroupOracle, h: &Word) -> ClassTest<'a> {
        ClassTest { o, h: h.clone(), key: o.conjugacy_key(h) }
    }

    fn conjugator(&self, f: &Word, bound: usize) -> Option<Word> {
        if let Some(k) = &self.key {
            if self.o.conjugacy_key(f).as_ref() != Some(k) {
                return None;
            }
        }
        bounded_conjugator(self.o, &self.h, f, bound)
    }
}

/// Effective radius: the full `bound` for finite groups, capped by the
/// budget otherwise. The flag says whether the cap bit.
fn radius(o: &dyn GroupOracle, bound: usize, cap: usize) -> (usize, bool) {
    if o.order().is_some() || bound <= cap {
        (bound, false)
    } else {
        (cap, true)
    }
}

/// Minimal words of conjugates `r⁻¹hr`, with `r`, for the split-based forms.
fn conjugate_targets(o: &dyn GroupOracle, h: &Word, bound: usize, budget: &Budget) -> (Vec<(Word, Word)>, bool) {
    if o.is_free() {
        let (g, core) = h.free_reduce().cyclic_reduce();
        let n = core.len();
        let out = (0..n.max(1))
            .map(|k| {
                let f = core.rotate(k);
                let r = &g * &core.slice(0, k);
                (f, r)
            })
            .filter(|(_, r)| r.len() <= bound)
            .collect();
        return (out, false);
    }
    let (rad, capped) = radius(o, bound, budget.max_len);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for r in o.ball(rad) {
        let f = mul(o, &[&r.inverse(), h, &r]);
        if seen.insert(f.clone()) {
            out.push((f, r));
        }
    }
    (out, capped)
}

/// Splits of `f` into `k` consecutive, possibly empty, pieces.
fn splits(f: &Word, k: usize) -> Vec<Vec<Word>> {
    fn go(f: &Word, k: usize, cuts: &mut Vec<usize>, out: &mut Vec<Vec<Word>>) {
        if cuts.len() == k {
            cuts.push(f.len());
            out.push(cuts.windows(2).map(|w| f.slice(w[0], w[1])).collect());
            cuts.pop();
            return;
        }
        let from = *cuts.last().unwrap();
        for c in from..=f.len() {
            cuts.push(c);
            go(f, k, cuts, out);
            cuts.pop();
        }
    }
    let mut out = Vec::new();
    go(f, k, &mut vec![0], &mut out);
    out
}

/// Triples `(X, Y, Z)` ordered by total length.
fn form1_triples(ball: &[Word], max_total: usize) -> impl Iterator<Item = (&Word, &Word, &Word)> {
    (0..=max_total).flat_map(move |total| {
        ball.iter().flat_map(move |x| {
            ball.iter().flat_map(move |y| {
                ball.iter()
                    .filter(move |z| x.len() + y.len() + z.len() == total)
                    .map(move |z| (x, y, z))
            })
        })
    })
}

/// Decides whether `h` is a commutator by the four forms.
pub fn is_commutator_oracle(h: &Word, o: &dyn GroupOracle, budget: &Budget) -> Search<CommutatorWitness> {
    let c = o.constants(HalfInt::ONE);
    let h_len = h.len();
    if o.is_free() && h.exponent_sums().values().any(|&e| e != 0) {
        return Search::NotFound;
    }
    let mut meter = Meter::new(budget);
    let test = ClassTest::new(o, h);
    let core_half = h.free_reduce().cyclic_reduce().1.len() / 2;

    // form 1
    let (rad, mut capped) = if o.is_free() {
        (c.form_bound().min(core_half), false)
    } else {
        radius(o, c.form_bound(), budget.max_ball)
    };
    let ball = o.ball(rad);
    let max_total = if o.is_free() { core_half } else { 3 * rad };
    let r_bound = c.conjugator_bound_form1(h_len);
    let (r_rad, r_capped) = if o.is_free() { (r_bound, false) } else { radius(o, r_bound, budget.max_len) };
    capped |= r_capped;
    for (x, y, z) in form1_triples(&ball, max_total) {
        if !meter.tick() {
            return Search::Indeterminate;
        }
        let f = mul(o, &[x, y, z, &x.inverse(), &y.inverse(), &z.inverse()]);
        if let Some(r) = test.conjugator(&f, r_rad) {
            return Search::Found(CommutatorWitness::Form1 { x: x.clone(), y: y.clone(), z: z.clone(), r });
        }
    }
    if o.order().is_some() && !capped {
        return Search::NotFound;
    }

    // forms 2–4
    let total = c.xi_total_bound();
    let xi_rad = if o.is_free() { 0 } else { radius(o, total, budget.max_ball).0 };
    capped |= !o.is_free() && total > budget.max_ball;
    let xis = o.ball(xi_rad);
    let (targets, t_capped) = conjugate_targets(o, h, c.conjugator_bound_short(h_len), budget);
    capped |= t_capped;
    let len = |w: &Word| o.minimal_length(w);
    for (f, r) in &targets {
        for p in splits(f, 2) {
            let (a1, a2) = (&p[0], &p[1].inverse());
            for x1 in &xis {
                if !meter.tick() {
                    return Search::Indeterminate;
                }
                let x2 = mul(o, &[&a2.inverse(), x1, a1]);
                if len(x1) + len(&x2) <= total && o.are_conjugate(x1, &x2).is_some() {
                    return Search::Found(CommutatorWitness::Form2 {
                        a1: a1.clone(), a2: a2.clone(), xi: [x1.clone(), x2], r: r.clone(),
                    });
                }
            }
        }
        for p in splits(f, 4) {
            let (a1, b1, a2, b2) = (&p[0], &p[1], &p[2].inverse(), &p[3].inverse());
            for x1 in &xis {
                let x3 = mul(o, &[&a2.inverse(), &x1.inverse(), a1]);
                for x2 in &xis {
                    if !meter.tick() {
                        return Search::Indeterminate;
                    }
                    let x4 = mul(o, &[b1, &x2.inverse(), &b2.inverse()]);
                    if len(x1) + len(x2) + len(&x3) + len(&x4) <= total
                        && o.is_trivial(&mul(o, &[x1, x2, &x3, &x4]))
                    {
                        return Search::Found(CommutatorWitness::Form3 {
                            a1: a1.clone(), b1: b1.clone(), a2: a2.clone(), b2: b2.clone(),
                            xi: [x1.clone(), x2.clone(), x3, x4], r: r.clone(),
                        });
                    }
                }
            }
        }
        for p in splits(f, 6) {
            let (a1, b1, c1) = (&p[0], &p[1], &p[2]);
            let (a2, b2, c2) = (&p[3].inverse(), &p[4].inverse(), &p[5].inverse());
            for x1 in &xis {
                let r1 = mul(o, &[&a2.inverse(), &x1.inverse(), a1]);
                for r2 in &xis {
                    if !meter.tick() {
                        return Search::Indeterminate;
                    }
                    let x2 = mul(o, &[&b2.inverse(), &r2.inverse(), b1]);
                    let r3 = mul(o, &[&r1, r2]).inverse();
                    let x3 = mul(o, &[c1, &r3.inverse(), &c2.inverse()]);
                    let sum = len(x1) + len(&x2) + len(&x3) + len(&r1) + len(r2) + len(&r3);
                    if sum <= total && o.is_trivial(&mul(o, &[x1, &x2, &x3])) {
                        return Search::Found(CommutatorWitness::Form4 {
                            a1: a1.clone(), b1: b1.clone(), c1: c1.clone(),
                            a2: a2.clone(), b2: b2.clone(), c2: c2.clone(),
                            xi: [x1.clone(), x2, x3], rho: [r1, r2.clone(), r3], r: r.clone(),
                        });
                    }
                }
            }
        }
    }
    if capped || o.order().is_none() && !o.is_free() {
        Search::Indeterminate
    } else {
        Search::NotFound
    }
}

/// Decides whether `h` is a square by the two forms.
pub fn is_square_oracle(h: &Word, o: &dyn GroupOracle, budget: &Budget) -> Search<SquareWitness> {
    let c = o.constants(HalfInt::HALF);
    let h_len = h.len();
    if o.is_free() && h.exponent_sums().values().any(|&e| e % 2 != 0) {
        return Search::NotFound;
    }
    let mut meter = Meter::new(budget);
    let test = ClassTest::new(o, h);
    let core_half = h.free_reduce().cyclic_reduce().1.len() / 2;

    let (rad, mut capped) = if o.is_free() {
        (c.form_bound().min(core_half), false)
    } else {
        radius(o, c.form_bound(), budget.max_ball)
    };
    let r_bound = c.conjugator_bound_square(h_len);
    let (r_rad, r_capped) = if o.is_free() { (r_bound, false) } else { radius(o, r_bound, budget.max_len) };
    capped |= r_capped;
    for x in o.ball(rad) {
        if !meter.tick() {
            return Search::Indeterminate;
        }
        let f = mul(o, &[&x, &x]);
        if let Some(r) = test.conjugator(&f, r_rad) {
            return Search::Found(SquareWitness::Form1 { x, r });
        }
    }
    if o.order().is_some() && !capped {
        return Search::NotFound;
    }

    let xi_bound = c.square_xi_bound();
    let xi_rad = if o.is_free() { 0 } else { radius(o, xi_bound, budget.max_ball).0 };
    capped |= !o.is_free() && xi_bound > budget.max_ball;
    let xis = o.ball(xi_rad);
    let (targets, t_capped) = conjugate_targets(o, h, c.conjugator_bound_short(h_len), budget);
    capped |= t_capped;
    for (f, r) in &targets {
        for p in splits(f, 2) {
            let (a1, a2) = (&p[0], &p[1]);
            for xi in &xis {
                if !meter.tick() {
                    return Search::Indeterminate;
                }
                if o.are_equal(a1, &mul(o, &[xi, a2, xi])) {
                    return Search::Found(SquareWitness::Form2 {
                        a1: a1.clone(), a2: a2.clone(), xi: xi.clone(), r: r.clone(),
                    });
                }
            }
        }
    }
    if capped || o.order().is_none() && !o.is_free() {
        Search::Indeterminate
    } else {
        Search::NotFound
    }
}

impl CommutatorWitness {
    /// Re-checks the witness from scratch: `h = R·F·R⁻¹` and the form's
    /// relations.
    pub fn verify(&self, h: &Word, o: &dyn GroupOracle) -> bool {
        let inv = |w: &Word| w.inverse();
        match self {
            CommutatorWitness::Form1 { x, y, z, r } => {
                let f = mul(o, &[x, y, z, &inv(x), &inv(y), &inv(z)]);
                o.are_equal(h, &mul(o, &[r, &f, &inv(r)]))
            }
            CommutatorWitness::Form2 { a1, a2, xi, r } => {
                o.are_equal(a1, &mul(o, &[&inv(&xi[0]), a2, &xi[1]]))
                    && o.are_conjugate(&xi[0], &xi[1]).is_some()
                    && o.are_equal(h, &mul(o, &[r, a1, &inv(a2), &inv(r)]))
            }
            CommutatorWitness::Form3 { a1, b1, a2, b2, xi, r } => {
                o.are_equal(a1, &mul(o, &[&xi[0], a2, &xi[2]]))
                    && o.are_equal(b1, &mul(o, &[&xi[3], b2, &xi[1]]))
                    && o.is_trivial(&mul(o, &[&xi[0], &xi[1], &xi[2], &xi[3]]))
                    && o.are_equal(h, &mul(o, &[r, a1, b1, &inv(a2), &inv(b2), &inv(r)]))
            }
            CommutatorWitness::Form4 { a1, b1, c1, a2, b2, c2, xi, rho, r } => {
                o.are_equal(a1, &mul(o, &[&xi[0], a2, &rho[0]]))
                    && o.are_equal(b1, &mul(o, &[&rho[1], b2, &xi[1]]))
                    && o.are_equal(c1, &mul(o, &[&xi[2], c2, &rho[2]]))
                    && o.is_trivial(&mul(o, &[&xi[0], &xi[1], &xi[2]]))
                    && o.is_trivial(&mul(o, &[&rho[0], &rho[1], &rho[2]]))
                    && o.are_equal(h, &mul(o, &[r, a1, b1, c1, &inv(a2), &inv(b2), &inv(c2), &inv(r)]))
            }
        }
    }
}

impl SquareWitness {
    pub fn verify(&self, h: &Word, o: &dyn GroupOracle) -> bool {
        match self {
            SquareWitness::Form1 { x, r } => o.are_equal(h, &mul(o, &[r, x, x, &r.inverse()])),
            SquareWitness::Form2 { a1, a2, xi, r } => {
                o.are_equal(a1, &mul(o, &[xi, a2, xi]))
                    && o.are_equal(h, &mul(o, &[r, a1, a2, &r.inverse()]))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{FiniteGroup, FreeGroup};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn free_commutators() {
        let f = FreeGroup::of_rank(2);
        let b = Budget::default();
        match is_commutator_oracle(&w("abAB"), &f, &b) {
            Search::Found(wit @ CommutatorWitness::Form1 { .. }) => assert!(wit.verify(&w("abAB"), &f)),
            other => panic!("{other:?}"),
        }
        assert_eq!(is_commutator_oracle(&w("aa"), &f, &b), Search::NotFound);
        assert_eq!(is_commutator_oracle(&w("abABabAB"), &f, &b), Search::NotFound);
        // pieces longer than the form-1 bound go through the split forms
        let long = w("aaaaaabAAAAAAB");
        let wit = is_commutator_oracle(&long, &f, &b).found().unwrap();
        assert!(wit.verify(&long, &f));
    }

    #[test]
    fn free_squares() {
        let f = FreeGroup::of_rank(2);
        let b = Budget::default();
        assert_eq!(
            is_square_oracle(&w("aa"), &f, &b),
            Search::Found(SquareWitness::Form1 { x: w("a"), r: w("") })
        );
        assert_eq!(is_square_oracle(&w("ab"), &f, &b), Search::NotFound);
        let long = w("abbbbbbabbbbbb");
        assert!(is_square_oracle(&long, &f, &b).found().unwrap().verify(&long, &f));
    }

    #[test]
    fn split_forms_with_trivial_corrections() {
        assert_eq!(splits(&w("ab"), 2).len(), 3);
        assert_eq!(splits(&w("abc"), 3).len(), 10);
    }

    #[test]
    fn finite_commutators() {
        let s3 = FiniteGroup::from_permutations("S3", &[(Symbol::new('a', None), "(1,2)".into()), (Symbol::new('b', None), "(2,3)".into())]).unwrap();
        let b = Budget::default();
        // (1,2)(2,3) is a 3-cycle, hence a commutator; a transposition is not
        assert!(is_commutator_oracle(&w("ab"), &s3, &b).is_found());
        assert_eq!(is_commutator_oracle(&w("a"), &s3, &b), Search::NotFound);
    }
    use crate::words::Symbol;
}
