//! Cancellation-free matching of Wicks forms in free groups.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::halfint::HalfInt;
use crate::wicks::wicks_forms;
use crate::words::{Letter, Symbol, Word};

/// `θ: supp(W) → F(X)` with non-empty images such that `θ(W)` is
/// cyclically reduced as written.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CancellationFreeLabelling(pub BTreeMap<Symbol, Word>);

impl CancellationFreeLabelling {
    pub fn get(&self, s: Symbol) -> Option<&Word> {
        self.0.get(&s)
    }

    /// Literal substitution into `w`, without reduction.
    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(|s| self.0.get(&s).cloned().unwrap_or_default())
    }

    /// Checks the defining property against `form`.
    pub fn is_cancellation_free_on(&self, form: &Word) -> bool {
        let support = form.support();
        support.len() == self.0.len()
            && support.iter().all(|s| self.0.get(s).is_some_and(|w| !w.is_empty() && w.is_reduced()))
            && self.apply(form).is_cyclically_reduced()
    }

    pub fn max_len(&self) -> usize {
        self.0.values().map(Word::len).max().unwrap_or(0)
    }
}

/// A match `w = c · θ(W) · c⁻¹` (freely).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WicksMatch {
    pub theta: CancellationFreeLabelling,
    pub conjugator: Word,
    /// `θ(W)`, a rotation of the cyclic core of `w`.
    pub image: Word,
}

struct Matcher<'a> {
    target: &'a [Letter],
    pattern: &'a [Letter],
    slot: Vec<usize>,
    theta: Vec<Option<Vec<Letter>>>,
}

impl Matcher<'_> {
    fn run(&mut self, i: usize, pos: usize) -> bool {
        let n = self.target.len();
        if i == self.pattern.len() {
            return pos == n;
        }
        let p = self.pattern[i];
        let k = self.slot[i];
        let rest = self.pattern.len() - i - 1;
        if let Some(img) = &self.theta[k] {
            let len = img.len();
            if pos + len + rest > n {
                return false;
            }
            let seg = &self.target[pos..pos + len];
            let ok = if p.exponent() == 1 {
                seg == &img[..]
            } else {
                seg.iter().zip(img.iter().rev()).all(|(a, b)| *a == b.inverse())
            };
            return ok && self.run(i + 1, pos + len);
        }
        if pos + 1 + rest > n {
            return false;
        }
        for len in 1..=(n - pos - rest) {
            let seg = &self.target[pos..pos + len];
            let img: Vec<Letter> = if p.exponent() == 1 {
                seg.to_vec()
            } else {
                seg.iter().rev().map(|l| l.inverse()).collect()
            };
            self.theta[k] = Some(img);
            if self.run(i + 1, pos + len) {
                return true;
            }
        }
        self.theta[k] = None;
        false
    }
}

/// Matches `form` literally against `target`, which must be cyclically
/// reduced, for a fixed alignment.
fn match_literal(target: &[Letter], form: &Word) -> Option<CancellationFreeLabelling> {
    let syms: Vec<Symbol> = form.support().into_iter().collect();
    let slot: Vec<usize> = form
        .letters()
        .iter()
        .map(|l| syms.binary_search(&l.symbol()).unwrap())
        .collect();
    let mut m = Matcher {
        target,
        pattern: form.letters(),
        slot,
        theta: vec![None; syms.len()],
    };
    if !m.run(0, 0) {
        return None;
    }
    Some(CancellationFreeLabelling(
        syms.into_iter()
            .zip(m.theta)
            .map(|(s, img)| (s, Word::new(img.unwrap())))
            .collect(),
    ))
}

/// Searches all rotations of the cyclic core of `w` for a cancellation-free
/// match of `form`.
pub fn match_wicks_full(w: &Word, form: &Word) -> Option<WicksMatch> {
    let (g, core) = w.cyclic_reduce();
    let n = core.len();
    if n == 0 || form.is_empty() || n < form.len() || n % 2 == 1 {
        return None;
    }
    let letters = core.letters();
    for k in 0..n {
        let rotated: Vec<Letter> = letters[k..].iter().chain(&letters[..k]).copied().collect();
        if let Some(theta) = match_literal(&rotated, form) {
            // core = p · rotated · p⁻¹ with p = core[..k]
            let conjugator = &g * &core.slice(0, k);
            return Some(WicksMatch {
                theta,
                conjugator,
                image: Word::new(rotated),
            });
        }
    }
    None
}

pub fn match_wicks(w: &Word, form: &Word) -> Option<CancellationFreeLabelling> {
    match_wicks_full(w, form).map(|m| m.theta)
}

fn first_match(w: &Word, n: HalfInt, orientable: bool) -> bool {
    let len = w.cyclic_reduce().1.len();
    match wicks_forms(n, orientable, len) {
        Ok(forms) => forms.iter().any(|f| match_wicks_full(w, f.word.word()).is_some()),
        Err(_) => false,
    }
}

/// Least orientable genus `≤ max_n`, or `None` if larger or infinite.
pub fn genus_plus_free(w: &Word, max_n: usize) -> Option<usize> {
    let core = w.cyclic_reduce().1;
    if core.is_empty() {
        return Some(0);
    }
    if core.exponent_sums().values().any(|&e| e != 0) {
        return None;
    }
    (1..=max_n).find(|&n| first_match(&core, HalfInt::from_int(n as i64), true))
}

/// Least non-orientable genus `≤ max_n` (a product of `2n` squares), or
/// `None` if larger or infinite.
pub fn genus_minus_free(w: &Word, max_n: HalfInt) -> Option<HalfInt> {
    let core = w.cyclic_reduce().1;
    if core.is_empty() {
        return Some(HalfInt::ZERO);
    }
    if core.exponent_sums().values().any(|&e| e % 2 != 0) {
        return None;
    }
    (1..=max_n.twice()).map(HalfInt::from_twice).find(|&n| {
        if first_match(&core, n, false) {
            return true;
        }
        // a product of g commutators is a product of 2g + 1 squares
        let g = n - HalfInt::HALF;
        g.is_integer() && g >= HalfInt::ONE && first_match(&core, g, true)
    })
}

type Extract = fn(&CancellationFreeLabelling) -> (Word, Word);

fn th(t: &CancellationFreeLabelling, s: char) -> Word {
    t.get(Symbol::new(s, None)).cloned().unwrap_or_default()
}

/// Genus-one orientable forms and how to read `[a, b]` off a match.
pub fn commutator_forms() -> Vec<(Word, Extract)> {
    vec![
        ("abAB".parse().unwrap(), |t| (th(t, 'a'), th(t, 'b'))),
        ("abcABC".parse().unwrap(), |t| {
            // (XY)(ZX⁻¹)(XY)⁻¹(ZX⁻¹)⁻¹ = XYZX⁻¹Y⁻¹Z⁻¹
            let (x, y, z) = (th(t, 'a'), th(t, 'b'), th(t, 'c'));
            (&x * &y, &z * &x.inverse())
        }),
    ]
}

/// Non-orientable forms of genus at most one and how to read `a²b²` off a
/// match.
pub fn two_square_forms() -> Vec<(Word, Extract)> {
    vec![
        ("aa".parse().unwrap(), |t| (th(t, 'a'), Word::empty())),
        ("aabb".parse().unwrap(), |t| (th(t, 'a'), th(t, 'b'))),
        ("abaB".parse().unwrap(), |t| {
            // (AB)²(B⁻¹)² = ABAB⁻¹
            let (a, b) = (th(t, 'a'), th(t, 'b'));
            (&a * &b, b.inverse())
        }),
        ("aabccB".parse().unwrap(), |t| {
            // A²(BCB⁻¹)² = A²BC²B⁻¹
            let (a, b, c) = (th(t, 'a'), th(t, 'b'), th(t, 'c'));
            (a, &(&b * &c) * &b.inverse())
        }),
        ("abacBc".parse().unwrap(), |t| {
            // (AB)²(B⁻¹C)² = ABACB⁻¹C
            let (a, b, c) = (th(t, 'a'), th(t, 'b'), th(t, 'c'));
            (&a * &b, &b.inverse() * &c)
        }),
    ]
}

fn conj(c: &Word, x: &Word) -> Word {
    &(c * x) * &c.inverse()
}

fn extract(w: &Word, forms: Vec<(Word, Extract)>) -> Option<(Word, Word)> {
    if w.free_reduce().is_empty() {
        return Some((Word::empty(), Word::empty()));
    }
    for (form, f) in forms {
        if let Some(m) = match_wicks_full(w, &form) {
            let (a, b) = f(&m.theta);
            return Some((conj(&m.conjugator, &a), conj(&m.conjugator, &b)));
        }
    }
    None
}

/// `(a, b)` with `[a, b] = aba⁻¹b⁻¹` freely equal to `w`.
pub fn is_commutator_free(w: &Word) -> Option<(Word, Word)> {
    if w.exponent_sums().values().any(|&e| e != 0) {
        return None;
    }
    extract(w, commutator_forms())
}

/// `(a, b)` with `a²b²` freely equal to `w`.
pub fn is_two_squares_free(w: &Word) -> Option<(Word, Word)> {
    if w.exponent_sums().values().any(|&e| e % 2 != 0) {
        return None;
    }
    extract(w, two_square_forms())
}
