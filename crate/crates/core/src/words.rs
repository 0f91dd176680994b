//! Free-group words over a finite symbol alphabet.
//!
//! A [`Symbol`] is a lowercase letter with an optional numeric subscript
//! (`a`, `b2`, `x17`). A [`Letter`] is a symbol with an exponent of `+1` or
//! `-1`. Words are plain letter sequences; being reduced or cyclically
//! reduced is a predicate, not a constructor constraint.
//!
//! Text format: a generator is written as its symbol, its inverse with the
//! first character uppercased. `"abAB"` is `a b a⁻¹ b⁻¹`, `"a1B2"` is
//! `a1 b2⁻¹`. Whitespace between tokens is ignored and `"1"` or the empty
//! string denote the empty word.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

const SUB_BITS: u32 = 27;
const SUB_MASK: u32 = (1 << SUB_BITS) - 1;

/// A generator name: a lowercase letter plus an optional subscript.
///
/// Symbols are totally ordered by letter, then subscript, with the bare
/// letter first: `a < a0 < a1 < a2 < b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u32);

impl Symbol {
    /// Largest subscript a symbol can carry.
    pub const MAX_SUBSCRIPT: u32 = SUB_MASK - 1;

    /// Builds a symbol from a lowercase ASCII letter and optional subscript.
    ///
    /// # Panics
    /// If `letter` is not in `a..=z` or the subscript exceeds
    /// [`Symbol::MAX_SUBSCRIPT`].
    pub fn new(letter: char, subscript: Option<u32>) -> Symbol {
        assert!(letter.is_ascii_lowercase(), "symbol letter must be a..z");
        let sub = match subscript {
            None => 0,
            Some(s) => {
                assert!(s <= Self::MAX_SUBSCRIPT, "subscript too large");
                s + 1
            }
        };
        Symbol(((letter as u32 - 'a' as u32) << SUB_BITS) | sub)
    }

    /// The `k`-th symbol of the canonical alphabet `a, b, …, z, z0, z1, …`.
    pub fn nth(k: usize) -> Symbol {
        if k < 26 {
            Symbol::new((b'a' + k as u8) as char, None)
        } else {
            Symbol::new('z', Some((k - 26) as u32))
        }
    }

    pub fn letter(self) -> char {
        (b'a' + (self.0 >> SUB_BITS) as u8) as char
    }

    pub fn subscript(self) -> Option<u32> {
        match self.0 & SUB_MASK {
            0 => None,
            s => Some(s - 1),
        }
    }

    pub fn pos(self) -> Letter {
        Letter::new(self, 1)
    }

    pub fn neg(self) -> Letter {
        Letter::new(self, -1)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())?;
        if let Some(s) = self.subscript() {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Symbol {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Symbol, WordParseError> {
        let w: Word = s.parse()?;
        match w.letters() {
            [l] if l.exponent() == 1 => Ok(l.symbol()),
            _ => Err(WordParseError::NotASymbol(s.to_string())),
        }
    }
}

/// A symbol raised to the power `+1` or `-1`.
///
/// Ordered by symbol, then exponent with `+1 < -1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    sym: Symbol,
    inv: bool,
}

impl Letter {
    /// # Panics
    /// If `exponent` is not `1` or `-1`.
    pub fn new(sym: Symbol, exponent: i8) -> Letter {
        assert!(exponent == 1 || exponent == -1, "exponent must be ±1");
        Letter {
            sym,
            inv: exponent == -1,
        }
    }

    pub fn symbol(self) -> Symbol {
        self.sym
    }

    pub fn exponent(self) -> i8 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            sym: self.sym,
            inv: !self.inv,
        }
    }

    /// `self` raised to `e ∈ {±1}`.
    pub fn pow(self, e: i8) -> Letter {
        if e == 1 {
            self
        } else {
            self.inverse()
        }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.sym == other.sym && self.inv != other.inv
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.sym.letter();
        let c = if self.inv { c.to_ascii_uppercase() } else { c };
        write!(f, "{c}")?;
        if let Some(s) = self.sym.subscript() {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordParseError {
    #[error("unexpected character {ch:?} at byte {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("subscript out of range at byte {pos}")]
    SubscriptOverflow { pos: usize },
    #[error("{0:?} is not a single generator")]
    NotASymbol(String),
}

/// A finite sequence of letters.
///
/// Words are ordered by length, then lexicographically by letter.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Concatenation without reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reduced product `self · other`, assuming both factors are reduced.
    pub fn mul_reduced(&self, other: &Word) -> Word {
        let a = &self.0;
        let b = &other.0;
        let mut k = 0;
        while k < a.len() && k < b.len() && a[a.len() - 1 - k].is_inverse_of(b[k]) {
            k += 1;
        }
        let mut v = Vec::with_capacity(a.len() + b.len() - 2 * k);
        v.extend_from_slice(&a[..a.len() - k]);
        v.extend_from_slice(&b[k..]);
        Word(v)
    }

    /// `self^e` for an integer exponent, freely reduced.
    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let base = base.free_reduce();
        let mut out = Word::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.mul_reduced(&base);
        }
        out
    }

    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.0 {
            match stack.last() {
                Some(&top) if top.is_inverse_of(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word(stack)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| !p[0].is_inverse_of(p[1]))
    }

    /// Reduced, and the last letter is not the inverse of the first.
    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.0.first(), self.0.last()) {
                (Some(&f), Some(&l)) => self.len() == 1 || !l.is_inverse_of(f),
                _ => true,
            }
    }

    /// Returns `(g, c)` with `c` cyclically reduced and
    /// `free_reduce(self) = g c g⁻¹`, where `g` is a prefix of
    /// `free_reduce(self)`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let r = self.free_reduce();
        let n = r.len();
        let mut k = 0;
        while 2 * k + 1 < n && r.0[k].is_inverse_of(r.0[n - 1 - k]) {
            k += 1;
        }
        (Word(r.0[..k].to_vec()), Word(r.0[k..n - k].to_vec()))
    }

    /// The cyclic shift `w[k..] w[..k]`.
    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let k = k % self.len();
        let mut v = Vec::with_capacity(self.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// Index of the lexicographically least rotation.
    pub fn least_rotation(&self) -> usize {
        least_rotation(&self.0)
    }

    pub fn support(&self) -> BTreeSet<Symbol> {
        self.0.iter().map(|l| l.symbol()).collect()
    }

    /// Exponent sum of each symbol occurring in the word.
    pub fn exponent_sums(&self) -> BTreeMap<Symbol, i64> {
        let mut m = BTreeMap::new();
        for l in &self.0 {
            *m.entry(l.symbol()).or_insert(0) += l.exponent() as i64;
        }
        m
    }

    /// Number of occurrences of `s`, with either exponent.
    pub fn count(&self, s: Symbol) -> usize {
        self.0.iter().filter(|l| l.symbol() == s).count()
    }

    /// Replaces every letter `x^ε` by `f(x)^ε`, without reduction.
    pub fn substitute<F: FnMut(Symbol) -> Word>(&self, mut f: F) -> Word {
        let mut v = Vec::new();
        for &l in &self.0 {
            let img = f(l.symbol());
            if l.exponent() == 1 {
                v.extend_from_slice(&img.0);
            } else {
                v.extend(img.0.iter().rev().map(|x| x.inverse()));
            }
        }
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }
}

fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        match a.cmp(&b) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i <= j {
                    i = j + 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if j <= i {
                    j = i + 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Word {
    type Output = Word;

    /// Freely reduced product.
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs).free_reduce()
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Word {
        Word(vec![l])
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Word, WordParseError> {
        if s.trim() == "1" {
            return Ok(Word::empty());
        }
        let bytes = s.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() {
                i += 1;
                continue;
            }
            if !c.is_ascii_alphabetic() {
                let ch = s[i..].chars().next().unwrap_or('?');
                return Err(WordParseError::UnexpectedChar { ch, pos: i });
            }
            let start = i;
            i += 1;
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let sub = if i > digits_start {
                let v: u32 = s[digits_start..i]
                    .parse()
                    .map_err(|_| WordParseError::SubscriptOverflow { pos: start })?;
                if v > Symbol::MAX_SUBSCRIPT {
                    return Err(WordParseError::SubscriptOverflow { pos: start });
                }
                Some(v)
            } else {
                None
            };
            let sym = Symbol::new(c.to_ascii_lowercase() as char, sub);
            out.push(Letter::new(sym, if c.is_ascii_uppercase() { -1 } else { 1 }));
        }
        Ok(Word(out))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Symbol, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Letter, D::Error> {
        let s = String::deserialize(d)?;
        let w: Word = s.parse().map_err(serde::de::Error::custom)?;
        match w.letters() {
            [l] => Ok(*l),
            _ => Err(serde::de::Error::custom(format!("{s:?} is not a single letter"))),
        }
    }
}

/// A conjugacy class of the free group, represented by the least rotation
/// of its cyclically reduced core.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CyclicWord(Word);

impl CyclicWord {
    pub fn new(w: &Word) -> CyclicWord {
        cyclic_normal_form(w)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}

/// See [`Word::cyclic_reduce`].
pub fn cyclic_reduce(w: &Word) -> (Word, Word) {
    w.cyclic_reduce()
}

pub fn cyclic_normal_form(w: &Word) -> CyclicWord {
    let (_, core) = w.cyclic_reduce();
    let k = core.least_rotation();
    CyclicWord(core.rotate(k))
}

/// Conjugacy in the free group on the symbols of `u` and `v`.
pub fn is_conjugate_free(u: &Word, v: &Word) -> bool {
    cyclic_normal_form(u) == cyclic_normal_form(v)
}

/// A shortest `w` with `free_reduce(u) = free_reduce(w v w⁻¹)`, if `u` and
/// `v` are conjugate in the free group.
pub fn conjugator_free(u: &Word, v: &Word) -> Option<Word> {
    let (g1, c1) = u.cyclic_reduce();
    let (g2, c2) = v.cyclic_reduce();
    if c1.len() != c2.len() {
        return None;
    }
    if c1.is_empty() {
        return Some(Word::empty());
    }
    let n = c2.len();
    let g2i = g2.inverse();
    let mut best: Option<Word> = None;
    for k in 0..n {
        if c2.letters()[k..]
            .iter()
            .chain(&c2.letters()[..k])
            .eq(c1.letters().iter())
        {
            // c1 = s⁻¹ c2 s with s = c2[..k]
            let s = c2.slice(0, k);
            let w = &(&g1 * &s.inverse()) * &g2i;
            if best.as_ref().is_none_or(|b| w < *b) {
                best = Some(w);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("abAB").to_string(), "abAB");
        assert_eq!(w("a1B2").letters(), &[
            Symbol::new('a', Some(1)).pos(),
            Symbol::new('b', Some(2)).neg()
        ]);
        assert_eq!(w(" a b  A "), w("abA"));
        assert!(w("1").is_empty());
        assert!(w("").is_empty());
        assert!("ab-".parse::<Word>().is_err());
        assert_eq!(Word::empty().to_string(), "1");
    }

    #[test]
    fn letter_order() {
        let a = Symbol::new('a', None);
        let a1 = Symbol::new('a', Some(1));
        let b = Symbol::new('b', None);
        assert!(a < Symbol::new('a', Some(0)));
        assert!(a1 < b);
        assert!(a.pos() < a.neg());
        assert!(a.neg() < b.pos());
        assert_eq!(Symbol::nth(27).to_string(), "z1");
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w("aA b").free_reduce(), w("b"));
        assert_eq!(w("abAB").free_reduce(), w("abAB"));
        assert_eq!(w("abA").cyclic_reduce(), (w("a"), w("b")));
        assert_eq!(w("abAB").cyclic_reduce(), (Word::empty(), w("abAB")));
        assert_eq!(w("aBbA").cyclic_reduce(), (Word::empty(), Word::empty()));
        assert_eq!(w("a").cyclic_reduce(), (Word::empty(), w("a")));
    }

    #[test]
    fn normal_forms_and_conjugacy() {
        assert_eq!(cyclic_normal_form(&w("ab")), cyclic_normal_form(&w("ba")));
        assert_eq!(cyclic_normal_form(&w("abAB")), cyclic_normal_form(&w("bABa")));
        assert_ne!(cyclic_normal_form(&w("ab")), cyclic_normal_form(&w("AB")));
        assert!(is_conjugate_free(&w("abA"), &w("b")));
        // BAba is a rotation of baBA = (abAB)⁻¹, not of abAB
        assert!(!is_conjugate_free(&w("abAB"), &w("BAba")));
        assert!(is_conjugate_free(&w("baBA"), &w("BAba")));
        assert!(!is_conjugate_free(&w("a"), &w("b")));
        assert_eq!(conjugator_free(&w("abA"), &w("b")), Some(w("a")));
        assert_eq!(conjugator_free(&w("a"), &w("b")), None);
    }

    #[test]
    fn least_rotation_matches_naive() {
        for s in ["abab", "baba", "aaab", "bAbAa", "AbAbAb", "cba"] {
            let x = w(s);
            let naive = (0..x.len()).map(|k| x.rotate(k)).min().unwrap();
            assert_eq!(x.rotate(x.least_rotation()), naive, "{s}");
        }
    }
}
