//! Wicks forms: canonical representatives and exhaustive enumeration.
//!
//! A Wicks form is a cyclically reduced, irredundant quadratic word. Its
//! genus is the genus of its surface graph. The enumeration searches every
//! length up to `K(n)` (`12n − 6` for `n ≥ 1`, `2` for `n = 1/2`).

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::halfint::HalfInt;
use crate::quadratic::{is_orientable, is_redundant_words, QuadraticWord};
use crate::surface::build_graph;
use crate::words::{Letter, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WicksError {
    #[error("genus must be positive, got {0}")]
    NonPositive(HalfInt),
    #[error("orientable genus must be an integer, got {0}")]
    HalfOrientable(HalfInt),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct WicksForm {
    pub word: QuadraticWord,
    pub genus: HalfInt,
    pub orientable: bool,
}

/// `K(n)`: `12n − 6` for `n ≥ 1`, `2` for `n = 1/2`, `0` for `n = 0`.
pub fn max_length(n: HalfInt) -> usize {
    match n.twice() {
        t if t <= 0 => 0,
        1 => 2,
        t => (6 * t - 6) as usize,
    }
}

/// Relabels so that symbols appear as `a, b, c, …` in order and every first
/// occurrence has exponent `+1`.
fn relabel(letters: impl Iterator<Item = Letter>) -> Vec<Letter> {
    let mut map: HashMap<Symbol, (Symbol, bool)> = HashMap::new();
    letters
        .map(|l| {
            let next = map.len();
            let &mut (s, flip) = map
                .entry(l.symbol())
                .or_insert((Symbol::nth(next), l.exponent() == -1));
            let e = if flip { -l.exponent() } else { l.exponent() };
            Letter::new(s, e)
        })
        .collect()
}

/// Least representative over rotations, word inversion, per-letter
/// inversion and renaming of support symbols.
pub fn canonicalize(w: &QuadraticWord) -> QuadraticWord {
    let ls = w.letters();
    let n = ls.len();
    if n == 0 {
        return w.clone();
    }
    let inv: Vec<Letter> = ls.iter().rev().map(|l| l.inverse()).collect();
    let mut best: Option<Vec<Letter>> = None;
    for src in [ls, &inv[..]] {
        for k in 0..n {
            let cand = relabel(src[k..].iter().chain(&src[..k]).copied());
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    QuadraticWord::new(Word::new(best.unwrap())).expect("relabelling preserves quadraticity")
}

/// Quadratic, cyclically reduced, irredundant, of genus `n`.
pub fn is_wicks_form(w: &Word, n: HalfInt) -> bool {
    classify(w).is_some_and(|f| f.genus == n)
}

/// Genus and orientability of `w` if it is a Wicks form.
pub fn classify(w: &Word) -> Option<WicksForm> {
    let q = QuadraticWord::new(w.clone()).ok()?;
    if q.is_empty() || !w.is_cyclically_reduced() || is_redundant_words(std::slice::from_ref(w)) {
        return None;
    }
    let genus = build_graph(&q).ok()?.genus();
    Some(WicksForm {
        orientable: is_orientable(&q),
        word: q,
        genus,
    })
}

/// All Wicks forms of genus exactly `n` and the given orientability, one
/// per canonical class, sorted.
pub fn enumerate_wicks(n: HalfInt, orientable: bool) -> Result<Vec<WicksForm>, WicksError> {
    Ok(wicks_forms(n, orientable, max_length(n))?.as_ref().clone())
}

type Cache = Mutex<HashMap<(HalfInt, bool, usize), Arc<Vec<WicksForm>>>>;

/// Wicks forms of genus `n` and length at most `max_len`, cached.
pub fn wicks_forms(
    n: HalfInt,
    orientable: bool,
    max_len: usize,
) -> Result<Arc<Vec<WicksForm>>, WicksError> {
    if n.twice() <= 0 {
        return Err(WicksError::NonPositive(n));
    }
    if orientable && !n.is_integer() {
        return Err(WicksError::HalfOrientable(n));
    }
    let max_len = max_len.min(max_length(n));
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(n, orientable, max_len)) {
        return Ok(v.clone());
    }
    let mut all = BTreeSet::new();
    for len in (2..=max_len).step_by(2) {
        let e = (len / 2) as i64;
        let v = 1 + e - n.twice();
        if v < 1 || (n != HalfInt::HALF && 3 * v > 2 * e) {
            continue;
        }
        all.extend(enumerate_length(len, n, orientable));
    }
    let out = Arc::new(all.into_iter().collect::<Vec<_>>());
    cache
        .lock()
        .unwrap()
        .insert((n, orientable, max_len), out.clone());
    Ok(out)
}

#[derive(Clone)]
struct Dfs {
    len: usize,
    orientable: bool,
    /// Depth at which the search hands branches off for parallel runs.
    split_at: usize,
    word: Vec<Letter>,
    /// First-occurrence letter of each opened symbol, `None` once closed.
    open: Vec<Option<Letter>>,
    open_count: usize,
    out: Vec<Vec<Letter>>,
    branches: Vec<Dfs>,
}

impl Dfs {
    fn new(len: usize, orientable: bool, split_at: usize) -> Dfs {
        Dfs {
            len,
            orientable,
            split_at,
            word: Vec::with_capacity(len),
            open: Vec::new(),
            open_count: 0,
            out: Vec::new(),
            branches: Vec::new(),
        }
    }

    fn push_ok(&self, l: Letter) -> bool {
        let pos = self.word.len();
        let Some(&prev) = self.word.last() else {
            return true;
        };
        if prev.is_inverse_of(l) {
            return false;
        }
        // the new pair (pos-1, pos) against earlier pairs disjoint from it
        for k in 0..pos.saturating_sub(2) {
            let (x, y) = (self.word[k], self.word[k + 1]);
            if (x == prev && y == l) || (x == l.inverse() && y == prev.inverse()) {
                return false;
            }
        }
        true
    }

    fn leaf(&mut self) {
        let n = self.word.len();
        if n > 1 && self.word[0].is_inverse_of(self.word[n - 1]) {
            return;
        }
        if is_redundant_words(&[Word::new(self.word.clone())]) {
            return;
        }
        self.out.push(self.word.clone());
    }

    fn run(&mut self) {
        let pos = self.word.len();
        if pos == self.len {
            self.leaf();
            return;
        }
        if pos == self.split_at {
            let mut b = self.clone();
            b.split_at = usize::MAX;
            b.out.clear();
            b.branches.clear();
            self.branches.push(b);
            return;
        }
        let remaining = self.len - pos;
        for i in 0..self.open.len() {
            let Some(f) = self.open[i] else { continue };
            let both = [f.inverse(), f];
            let choices = if self.orientable { &both[..1] } else { &both[..] };
            for &l in choices {
                if self.push_ok(l) {
                    self.open[i] = None;
                    self.open_count -= 1;
                    self.word.push(l);
                    self.run();
                    self.word.pop();
                    self.open_count += 1;
                    self.open[i] = Some(f);
                }
            }
        }
        if self.open.len() < self.len / 2 && self.open_count + 2 <= remaining {
            let l = Symbol::nth(self.open.len()).pos();
            if self.push_ok(l) {
                self.open.push(Some(l));
                self.open_count += 1;
                self.word.push(l);
                self.run();
                self.word.pop();
                self.open_count -= 1;
                self.open.pop();
            }
        }
    }
}

/// Normalised cyclically reduced irredundant quadratic words of length
/// `len`: symbols first appear in order `a, b, …` with exponent `+1`.
fn raw_words(len: usize, orientable: bool) -> Vec<Vec<Letter>> {
    let mut root = Dfs::new(len, orientable, len.min(6));
    root.run();
    let mut out = std::mem::take(&mut root.out);
    let rest: Vec<Vec<Letter>> = root
        .branches
        .into_par_iter()
        .flat_map_iter(|mut b| {
            b.run();
            b.out
        })
        .collect();
    out.extend(rest);
    out
}

fn enumerate_length(len: usize, n: HalfInt, orientable: bool) -> BTreeSet<WicksForm> {
    raw_words(len, orientable)
        .into_par_iter()
        .filter_map(|ls| {
            let f = classify(&Word::new(ls))?;
            (f.genus == n && f.orientable == orientable).then(|| WicksForm {
                word: canonicalize(&f.word),
                ..f
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn canon(s: &str) -> String {
        canonicalize(&QuadraticWord::lit(s)).to_string()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canon("bABa"), canon("abAB"));
        assert_eq!(canon("cdCD"), canon("abAB"));
        assert_eq!(canon("BAba"), canon("abAB"));
        assert_eq!(canon("aA"), "aA");
        assert_ne!(canon("abAB"), canon("abAb"));
    }

    #[test]
    fn wicks_predicate() {
        assert!(is_wicks_form(&w("abcABC"), HalfInt::ONE));
        assert!(!is_wicks_form(&w("abab"), HalfInt::ONE));
        assert!(!is_wicks_form(&w("aAbB"), HalfInt::ONE));
        assert!(!is_wicks_form(&w("aAbB"), HalfInt::ZERO));
        assert!(is_wicks_form(&w("aa"), HalfInt::HALF));
    }

    #[test]
    fn small_enumerations() {
        let half = enumerate_wicks(HalfInt::HALF, false).unwrap();
        assert_eq!(half.iter().map(|f| f.word.to_string()).collect::<Vec<_>>(), ["aa"]);
        let one = enumerate_wicks(HalfInt::ONE, true).unwrap();
        let got: Vec<String> = one.iter().map(|f| f.word.to_string()).collect();
        assert_eq!(got, ["abAB", "abcABC"]);
        assert!(enumerate_wicks(HalfInt::HALF, true).is_err());
        assert!(enumerate_wicks(HalfInt::ZERO, false).is_err());
    }

    #[test]
    fn constants_k() {
        assert_eq!(max_length(HalfInt::HALF), 2);
        assert_eq!(max_length(HalfInt::ONE), 6);
        assert_eq!(max_length(HalfInt::from_int(2)), 18);
        assert_eq!(max_length(HalfInt::ZERO), 0);
    }
}
