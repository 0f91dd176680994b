use std::collections::{BTreeMap, HashMap, VecDeque};

use num_rational::Rational64;
use thiserror::Error;

use super::GroupOracle;
use crate::words::{Letter, Symbol, Word};

/// Groups larger than this are refused.
pub const MAX_ORDER: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteGroupError {
    #[error("bad cycle notation {0:?}")]
    BadCycle(String),
    #[error("point {0} appears twice in one permutation")]
    RepeatedPoint(usize),
    #[error("group has more than {MAX_ORDER} elements")]
    TooLarge,
    #[error("multiplication table is not square")]
    NotSquare,
    #[error("table entry {0} out of range")]
    OutOfRange(usize),
    #[error("no identity element in table")]
    NoIdentity,
    #[error("table is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("generators do not generate the table's group ({reached} of {total} elements)")]
    NotGenerated { reached: usize, total: usize },
    #[error("no generators given")]
    NoGenerators,
}

/// A finite group with a precomputed multiplication table.
///
/// Element `0` is the identity; elements are numbered in shortlex order of
/// their least geodesic word, generators ordered `a < A < b < B < …`.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    gens: Vec<Symbol>,
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    /// Element of each letter, keyed by letter.
    letter_elem: BTreeMap<Letter, u32>,
    words: Vec<Word>,
    dist: Vec<u32>,
    delta: u32,
}

impl FiniteGroup {
    /// Builds the group generated by permutations in cycle notation, e.g.
    /// `[("a", "(1,2)"), ("b", "(1,2,3)")]`. Points are positive integers.
    pub fn from_permutations(
        name: &str,
        gens: &[(Symbol, String)],
    ) -> Result<FiniteGroup, FiniteGroupError> {
        if gens.is_empty() {
            return Err(FiniteGroupError::NoGenerators);
        }
        let mut cycles = Vec::new();
        let mut degree = 0;
        for (_, s) in gens {
            let c = parse_cycles(s)?;
            degree = degree.max(c.iter().flatten().copied().max().unwrap_or(0));
            cycles.push(c);
        }
        let perms: Vec<Vec<u16>> = cycles.iter().map(|c| to_perm(c, degree)).collect();
        let ident: Vec<u16> = (0..degree as u16).collect();
        // right action: (p·q)(i) = q(p(i))
        let compose = |p: &[u16], q: &[u16]| -> Vec<u16> { p.iter().map(|&i| q[i as usize]).collect() };
        let mut index: HashMap<Vec<u16>, usize> = HashMap::new();
        let mut elems = vec![ident.clone()];
        index.insert(ident, 0);
        let mut queue = VecDeque::from([0usize]);
        let mut gen_perms = perms.clone();
        for p in &perms {
            let mut inv = vec![0u16; degree];
            for (i, &j) in p.iter().enumerate() {
                inv[j as usize] = i as u16;
            }
            gen_perms.push(inv);
        }
        while let Some(e) = queue.pop_front() {
            for g in &gen_perms {
                let p = compose(&elems[e], g);
                if !index.contains_key(&p) {
                    if elems.len() >= MAX_ORDER {
                        return Err(FiniteGroupError::TooLarge);
                    }
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = index[&compose(&elems[i], &elems[j])] as u32;
            }
        }
        let gen_elems: Vec<(Symbol, usize)> = gens
            .iter()
            .zip(&perms)
            .map(|((s, _), p)| (*s, index[p]))
            .collect();
        Ok(FiniteGroup::build(name, n, table, 0, &gen_elems))
    }

    /// Builds a group from a multiplication table `table[i][j] = i·j` and
    /// generator elements.
    pub fn from_table(
        name: &str,
        table: &[Vec<usize>],
        gens: &[(Symbol, usize)],
    ) -> Result<FiniteGroup, FiniteGroupError> {
        let n = table.len();
        if n > MAX_ORDER {
            return Err(FiniteGroupError::TooLarge);
        }
        if gens.is_empty() {
            return Err(FiniteGroupError::NoGenerators);
        }
        if table.iter().any(|r| r.len() != n) {
            return Err(FiniteGroupError::NotSquare);
        }
        for &x in table.iter().flatten().chain(gens.iter().map(|(_, g)| g)) {
            if x >= n {
                return Err(FiniteGroupError::OutOfRange(x));
            }
        }
        let m = |i: usize, j: usize| table[i][j];
        let e = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or(FiniteGroupError::NoIdentity)?;
        for x in 0..n {
            if !(0..n).any(|y| m(x, y) == e) {
                return Err(FiniteGroupError::NoInverse(x));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(FiniteGroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let flat: Vec<u32> = table.iter().flatten().map(|&x| x as u32).collect();
        let g = FiniteGroup::build(name, n, flat, e, gens);
        if g.n != n {
            return Err(FiniteGroupError::NotGenerated { reached: g.n, total: n });
        }
        Ok(g)
    }

    /// Renumbers the subgroup generated by `gens` in shortlex order and
    /// precomputes geodesics and `δ`.
    fn build(name: &str, n0: usize, table: Vec<u32>, e: usize, gens: &[(Symbol, usize)]) -> FiniteGroup {
        let m0 = |i: usize, j: usize| table[i * n0 + j] as usize;
        let inv0 = |x: usize| (0..n0).find(|&y| m0(x, y) == e).unwrap();
        let mut letters: Vec<(Letter, usize)> = gens
            .iter()
            .flat_map(|&(s, g)| [(s.pos(), g), (s.neg(), inv0(g))])
            .collect();
        letters.sort();
        // BFS from the identity: discovery order is shortlex order
        let mut new_id = vec![usize::MAX; n0];
        let mut old = vec![e];
        let mut words = vec![Word::empty()];
        new_id[e] = 0;
        let mut head = 0;
        while head < old.len() {
            let x = old[head];
            for &(l, g) in &letters {
                let y = m0(x, g);
                if new_id[y] == usize::MAX {
                    new_id[y] = old.len();
                    old.push(y);
                    let mut w = words[head].letters().to_vec();
                    w.push(l);
                    words.push(Word::new(w));
                }
            }
            head += 1;
        }
        let n = old.len();
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = new_id[m0(old[i], old[j])] as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            inv[i] = (0..n).find(|&j| mul[i * n + j] == 0).unwrap() as u32;
        }
        let letter_elem = letters.iter().map(|&(l, g)| (l, new_id[g] as u32)).collect();
        let dist = words.iter().map(|w| w.len() as u32).collect();
        let mut sgens: Vec<Symbol> = gens.iter().map(|(s, _)| *s).collect();
        sgens.sort();
        sgens.dedup();
        let mut g = FiniteGroup {
            name: name.to_string(),
            gens: sgens,
            n,
            mul,
            inv,
            letter_elem,
            words,
            dist,
            delta: 0,
        };
        g.delta = g.compute_delta();
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y] as usize
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// `x y x⁻¹ y⁻¹`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    /// Element represented by `w`.
    ///
    /// # Panics
    /// If `w` uses a symbol that is not a generator.
    pub fn eval(&self, w: &Word) -> usize {
        w.letters().iter().fold(0, |acc, l| {
            let g = *self
                .letter_elem
                .get(l)
                .unwrap_or_else(|| panic!("{} is not a generator of {}", l.symbol(), self.name));
            self.mul(acc, g as usize)
        })
    }

    /// Shortlex-least geodesic word of element `x`.
    pub fn word_of(&self, x: usize) -> &Word {
        &self.words[x]
    }

    /// Word length of element `x`.
    pub fn norm(&self, x: usize) -> usize {
        self.dist[x] as usize
    }

    pub fn distance(&self, x: usize, y: usize) -> usize {
        self.norm(self.mul(self.inv(x), y))
    }

    /// `w·x·w⁻¹`.
    pub fn conjugate(&self, w: usize, x: usize) -> usize {
        self.mul(self.mul(w, x), self.inv(w))
    }

    /// Least `δ` such that every geodesic triangle is `δ`-thin, measured at
    /// vertices of the Cayley graph.
    ///
    /// For a triangle with a corner at `1` and the other corners at `a` and
    /// `c`, two vertices `p` on a geodesic `[1,a]` and `q` on a geodesic
    /// `[1,c]` at the same distance `t ≤ (a|c)_1` from `1` must satisfy
    /// `d(p,q) ≤ δ`. Every geodesic through `p` is covered by taking all `p`
    /// with `|p| = t` and `d(p,a) = |a| − t`. Left translation moves any
    /// triangle corner to `1`.
    fn compute_delta(&self) -> u32 {
        let n = self.n;
        let diam = self.dist.iter().copied().max().unwrap_or(0) as usize;
        // interval[a][t]: elements p with |p| = t on a geodesic from 1 to a
        let mut by_len: Vec<Vec<usize>> = vec![Vec::new(); diam + 1];
        for x in 0..n {
            by_len[self.norm(x)].push(x);
        }
        let interval: Vec<Vec<Vec<usize>>> = (0..n)
            .map(|a| {
                let la = self.norm(a);
                (0..=la)
                    .map(|t| {
                        by_len[t]
                            .iter()
                            .copied()
                            .filter(|&p| self.distance(p, a) == la - t)
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut best = 0usize;
        for a in 0..n {
            for c in 0..n {
                let gp2 = self.norm(a) + self.norm(c) - self.distance(a, c);
                for t in 0..=gp2 / 2 {
                    for &p in &interval[a][t] {
                        for &q in &interval[c][t] {
                            best = best.max(self.distance(p, q));
                        }
                    }
                }
            }
        }
        best as u32
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>, FiniteGroupError> {
    let bad = || FiniteGroupError::BadCycle(s.to_string());
    let t = s.trim();
    if t.is_empty() || t == "()" || t == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        let rest_t = rest.trim_start();
        let Some(inner) = rest_t.strip_prefix('(') else {
            return Err(bad());
        };
        let close = inner.find(')').ok_or_else(bad)?;
        let body = &inner[..close];
        let pts: Result<Vec<usize>, _> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>())
            .collect();
        let pts = pts.map_err(|_| bad())?;
        if pts.contains(&0) {
            return Err(bad());
        }
        out.push(pts);
        rest = inner[close + 1..].trim_start();
    }
    let mut seen = std::collections::BTreeSet::new();
    for c in &out {
        for &p in c {
            if !seen.insert(p) {
                return Err(FiniteGroupError::RepeatedPoint(p));
            }
        }
    }
    Ok(out)
}

fn to_perm(cycles: &[Vec<usize>], degree: usize) -> Vec<u16> {
    let mut p: Vec<u16> = (0..degree as u16).collect();
    for c in cycles {
        for i in 0..c.len() {
            p[c[i] - 1] = (c[(i + 1) % c.len()] - 1) as u16;
        }
    }
    p
}

impl GroupOracle for FiniteGroup {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn generators(&self) -> &[Symbol] {
        &self.gens
    }

    fn minimal_word(&self, w: &Word) -> Word {
        self.words[self.eval(w)].clone()
    }

    fn minimal_length(&self, w: &Word) -> usize {
        self.norm(self.eval(w))
    }

    fn are_equal(&self, u: &Word, v: &Word) -> bool {
        self.eval(u) == self.eval(v)
    }

    fn is_trivial(&self, w: &Word) -> bool {
        self.eval(w) == 0
    }

    fn ball(&self, k: usize) -> Vec<Word> {
        self.words.iter().filter(|w| w.len() <= k).cloned().collect()
    }

    fn ball_size(&self, k: usize) -> usize {
        self.dist.iter().filter(|&&d| d as usize <= k).count()
    }

    fn are_conjugate(&self, u: &Word, v: &Word) -> Option<Word> {
        let c = self.constants(crate::HalfInt::ZERO);
        let bound = c.conjugacy_witness_bound(u.len(), v.len());
        let (x, y) = (self.eval(u), self.eval(v));
        (0..self.n)
            .filter(|&w| self.norm(w) <= bound)
            .find(|&w| self.conjugate(w, y) == x)
            .map(|w| self.words[w].clone())
    }

    fn conjugacy_key(&self, w: &Word) -> Option<Word> {
        let x = self.eval(w);
        let least = (0..self.n).map(|g| self.conjugate(g, x)).min().unwrap_or(x);
        Some(self.words[least].clone())
    }

    fn delta(&self) -> Rational64 {
        Rational64::from_integer(self.delta as i64)
    }

    fn order(&self) -> Option<usize> {
        Some(self.n)
    }

    fn as_finite(&self) -> Option<&FiniteGroup> {
        Some(self)
    }
}
