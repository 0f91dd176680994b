//! Quadratic words and tuples: signature, orientability, redundancy and
//! specialisations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::wicks::canonicalize;
use crate::words::{Letter, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadraticError {
    #[error("symbol {symbol} occurs {count} times; a quadratic word needs exactly two")]
    NotQuadratic { symbol: Symbol, count: usize },
    #[error("empty quadratic word")]
    Empty,
}

/// True iff every symbol of the concatenation occurs exactly twice.
pub fn is_quadratic(t: &[Word]) -> bool {
    first_violation(t).is_none()
}

fn first_violation(t: &[Word]) -> Option<(Symbol, usize)> {
    let mut counts: BTreeMap<Symbol, usize> = BTreeMap::new();
    for w in t {
        for l in w.letters() {
            *counts.entry(l.symbol()).or_insert(0) += 1;
        }
    }
    counts.into_iter().find(|&(_, c)| c != 2)
}

/// A word in which every support symbol occurs exactly twice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Word", into = "Word")]
pub struct QuadraticWord(Word);

impl QuadraticWord {
    pub fn new(w: Word) -> Result<QuadraticWord, QuadraticError> {
        if let Some((symbol, count)) = first_violation(std::slice::from_ref(&w)) {
            return Err(QuadraticError::NotQuadratic { symbol, count });
        }
        Ok(QuadraticWord(w))
    }

    /// Parses and checks a word in the text format.
    ///
    /// # Panics
    /// On malformed or non-quadratic input; meant for literals.
    pub fn lit(s: &str) -> QuadraticWord {
        QuadraticWord::new(s.parse().expect("bad word literal")).expect("not quadratic")
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Support symbols in order of first appearance.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut seen = BTreeSet::new();
        self.letters()
            .iter()
            .map(|l| l.symbol())
            .filter(|s| seen.insert(*s))
            .collect()
    }

    /// Positions of the two occurrences of `s`, in reading order.
    pub fn occurrences(&self, s: Symbol) -> Option<(usize, usize)> {
        let mut it = self
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, l)| l.symbol() == s)
            .map(|(i, _)| i);
        Some((it.next()?, it.next()?))
    }
}

impl TryFrom<Word> for QuadraticWord {
    type Error = QuadraticError;
    fn try_from(w: Word) -> Result<QuadraticWord, QuadraticError> {
        QuadraticWord::new(w)
    }
}

impl From<QuadraticWord> for Word {
    fn from(q: QuadraticWord) -> Word {
        q.0
    }
}

impl fmt::Display for QuadraticWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for QuadraticWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

/// A tuple of words whose concatenation is quadratic.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QuadraticTuple(Vec<Word>);

impl QuadraticTuple {
    pub fn new(words: Vec<Word>) -> Result<QuadraticTuple, QuadraticError> {
        if let Some((symbol, count)) = first_violation(&words) {
            return Err(QuadraticError::NotQuadratic { symbol, count });
        }
        Ok(QuadraticTuple(words))
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn concatenation(&self) -> QuadraticWord {
        let mut v = Vec::new();
        for w in &self.0 {
            v.extend_from_slice(w.letters());
        }
        QuadraticWord(Word::new(v))
    }
}

impl From<QuadraticWord> for QuadraticTuple {
    fn from(q: QuadraticWord) -> QuadraticTuple {
        QuadraticTuple(vec![q.0])
    }
}

/// Exponents of the first and second occurrence of each support symbol.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signature(BTreeMap<Symbol, (i8, i8)>);

impl Signature {
    pub fn get(&self, s: Symbol) -> Option<(i8, i8)> {
        self.0.get(&s).copied()
    }

    /// `o(x) = −εδ`; `1` for alternating symbols.
    pub fn orientation(&self, s: Symbol) -> Option<i8> {
        self.get(s).map(|(e, d)| -e * d)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, (i8, i8))> + '_ {
        self.0.iter().map(|(&s, &p)| (s, p))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn signature(w: &QuadraticWord) -> Signature {
    let mut first: BTreeMap<Symbol, i8> = BTreeMap::new();
    let mut sig = BTreeMap::new();
    for l in w.letters() {
        match first.get(&l.symbol()) {
            None => {
                first.insert(l.symbol(), l.exponent());
            }
            Some(&e) => {
                sig.insert(l.symbol(), (e, l.exponent()));
            }
        }
    }
    Signature(sig)
}

pub fn is_orientable(w: &QuadraticWord) -> bool {
    signature(w).iter().all(|(_, (e, d))| -e * d == 1)
}

/// Cyclic length-2 subwords of each component, as (component, start, pair).
fn cyclic_pairs(t: &[Word]) -> Vec<(usize, usize, Letter, Letter)> {
    let mut out = Vec::new();
    for (i, w) in t.iter().enumerate() {
        let ls = w.letters();
        let n = ls.len();
        if n < 2 {
            continue;
        }
        for k in 0..n {
            out.push((i, k, ls[k], ls[(k + 1) % n]));
        }
    }
    out
}

fn overlap(len: usize, k1: usize, k2: usize) -> bool {
    let a = [k1, (k1 + 1) % len];
    let b = [k2, (k2 + 1) % len];
    a.iter().any(|p| b.contains(p))
}

/// True iff two disjoint cyclic subwords `xy` and `(xy)^{±1}` exist.
pub fn is_redundant(t: &QuadraticTuple) -> bool {
    is_redundant_words(t.words())
}

pub(crate) fn is_redundant_words(t: &[Word]) -> bool {
    let pairs = cyclic_pairs(t);
    for (a, &(i, k, x, y)) in pairs.iter().enumerate() {
        for &(j, m, u, v) in &pairs[a + 1..] {
            if i == j && overlap(t[i].len(), k, m) {
                continue;
            }
            let same = u == x && v == y;
            let inv = u == y.inverse() && v == x.inverse();
            if same || inv {
                return true;
            }
        }
    }
    false
}

/// Deletes every occurrence of the symbols in `d`, without reduction.
pub fn delete_symbols(w: &QuadraticWord, d: &BTreeSet<Symbol>) -> QuadraticWord {
    QuadraticWord(
        w.letters()
            .iter()
            .copied()
            .filter(|l| !d.contains(&l.symbol()))
            .collect(),
    )
}

/// Words obtained by deleting a proper subset of the support, one
/// canonical representative per class.
pub fn specialisations(w: &QuadraticWord) -> BTreeSet<QuadraticWord> {
    let syms = w.symbols();
    let n = syms.len();
    assert!(n < 32, "support too large for subset enumeration");
    let mut out = BTreeSet::new();
    let full = (1u32 << n) - 1;
    for mask in 0..=full {
        if mask == full && n > 0 {
            continue;
        }
        let d: BTreeSet<Symbol> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| syms[i]).collect();
        out.insert(canonicalize(&delete_symbols(w, &d)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadraticWord {
        QuadraticWord::lit(s)
    }

    fn sym(c: char) -> Symbol {
        Symbol::new(c, None)
    }

    #[test]
    fn quadratic_check() {
        assert!(is_quadratic(&["abAB".parse().unwrap()]));
        assert!(is_quadratic(&["ab".parse().unwrap(), "cABC".parse().unwrap()]));
        assert!(!is_quadratic(&["aab".parse().unwrap()]));
        assert!(QuadraticWord::new("aab".parse().unwrap()).is_err());
    }

    #[test]
    fn signatures() {
        let s = signature(&q("abAb"));
        assert_eq!(s.get(sym('a')), Some((1, -1)));
        assert_eq!(s.get(sym('b')), Some((1, 1)));
        assert_eq!(s.orientation(sym('a')), Some(1));
        assert_eq!(s.orientation(sym('b')), Some(-1));
        assert_eq!(signature(&q("aa")).orientation(sym('a')), Some(-1));
        assert!(is_orientable(&q("abAB")));
        assert!(is_orientable(&q("abcABC")));
        assert!(!is_orientable(&q("aa")));
        assert!(!is_orientable(&q("abAb")));
    }

    #[test]
    fn redundancy() {
        let t = |s: &str| QuadraticTuple::from(q(s));
        assert!(is_redundant(&t("abab")));
        assert!(!is_redundant(&t("abAB")));
        assert!(!is_redundant(&t("abcABC")));
        assert!(is_redundant(&t("abcBAC")));
        // "ab" straddles the wrap-around position
        assert!(is_redundant(&t("bcabCa")));
        assert!(!is_redundant(&t("aA")));
        let tup = QuadraticTuple::new(vec!["ab".parse().unwrap(), "ab".parse().unwrap()]).unwrap();
        assert!(is_redundant(&tup));
    }

    #[test]
    fn specialisation_sets() {
        let got: Vec<String> = specialisations(&q("abAB")).iter().map(|w| w.to_string()).collect();
        assert_eq!(got, vec!["aA", "abAB"]);
        let got: Vec<String> = specialisations(&q("abcABC")).iter().map(|w| w.to_string()).collect();
        assert_eq!(got, vec!["aA", "abAB", "abcABC"]);
        let got: Vec<String> = specialisations(&q("aa")).iter().map(|w| w.to_string()).collect();
        assert_eq!(got, vec!["aa"]);
    }
}
