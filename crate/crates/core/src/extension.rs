//! The extension construction: edge doubling, vertex-cycle insertion and
//! labelling validation.
//!
//! Each edge `x` of the surface graph of `U` is doubled into `x1`, `x2`
//! (both directed like `x`), giving the Hamiltonian word `U′`. Every vertex
//! `v` of degree `d` is then replaced by a directed cycle `c_1 ⋯ c_d`, and a
//! labelling `ψ` assigns group words to all doubled and cycle symbols.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::detect::{genus_tuple, Budget, Verdict};
use crate::halfint::HalfInt;
use crate::oracle::GroupOracle;
use crate::quadratic::{QuadraticError, QuadraticWord};
use crate::surface::{build_graph, incidence_data, vertex_link, IncidenceData, SurfaceError, SurfaceGraph, VertexLink};
use crate::words::{Letter, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Quadratic(#[from] QuadraticError),
    #[error("edge symbol {0} already has a subscript; doubling needs plain letters")]
    SubscriptedEdge(Symbol),
    #[error("vertex {vertex} has degree {expected} but its cycle has {got} symbols")]
    WrongCycleLength { vertex: usize, expected: usize, got: usize },
    #[error("symbol {0} is used twice or clashes with an edge symbol")]
    SymbolClash(Symbol),
    #[error("no vertex {0}")]
    UnknownVertex(usize),
    #[error("labelling has no image for {0}")]
    MissingLabel(Symbol),
    #[error("partition is invalid: {0}")]
    BadPartition(String),
    #[error("cycle lengths missing for vertex {0}")]
    MissingCycle(usize),
}

/// Step 1: the surface graph with every edge doubled.
#[derive(Clone, Debug)]
pub struct DoubledGraph {
    base: SurfaceGraph,
    links: Vec<VertexLink>,
    data: Vec<IncidenceData>,
    pairs: BTreeMap<Symbol, (Symbol, Symbol)>,
    hamiltonian: Word,
}

fn doubled_pair(x: Symbol) -> Result<(Symbol, Symbol), ExtensionError> {
    if x.subscript().is_some() {
        return Err(ExtensionError::SubscriptedEdge(x));
    }
    Ok((Symbol::new(x.letter(), Some(1)), Symbol::new(x.letter(), Some(2))))
}

/// Doubles every edge, reading links from their default start.
pub fn double_edges(u: &QuadraticWord) -> Result<DoubledGraph, ExtensionError> {
    let g = build_graph(u)?;
    let links = g.links();
    double_edges_with_links(g, links)
}

/// Doubles every edge, with caller-chosen links (one per vertex, in vertex
/// order).
pub fn double_edges_with_links(
    g: SurfaceGraph,
    links: Vec<VertexLink>,
) -> Result<DoubledGraph, ExtensionError> {
    let mut pairs = BTreeMap::new();
    for &x in g.edges() {
        pairs.insert(x, doubled_pair(x)?);
    }
    let sig = g.signature();
    let mut seen = BTreeSet::new();
    let letters: Vec<Letter> = g
        .word()
        .letters()
        .iter()
        .map(|&l| {
            let x = l.symbol();
            let (x1, x2) = pairs[&x];
            if sig.orientation(x) == Some(1) {
                if l.exponent() == 1 {
                    x1.pos()
                } else {
                    x2.neg()
                }
            } else if seen.insert(x) {
                Letter::new(x1, l.exponent())
            } else {
                Letter::new(x2, l.exponent())
            }
        })
        .collect();
    let data = links.iter().map(|l| incidence_data(&g, l)).collect();
    Ok(DoubledGraph {
        base: g,
        links,
        data,
        pairs,
        hamiltonian: Word::new(letters),
    })
}

impl DoubledGraph {
    pub fn base(&self) -> &SurfaceGraph {
        &self.base
    }

    pub fn links(&self) -> &[VertexLink] {
        &self.links
    }

    pub fn incidence(&self) -> &[IncidenceData] {
        &self.data
    }

    /// `x ↦ (x1, x2)`.
    pub fn pair(&self, x: Symbol) -> (Symbol, Symbol) {
        self.pairs[&x]
    }

    /// `U′`.
    pub fn hamiltonian(&self) -> &Word {
        &self.hamiltonian
    }

    fn doubled(&self, x: Symbol, which: u8) -> Symbol {
        let (a, b) = self.pairs[&x];
        if which == 1 {
            a
        } else {
            b
        }
    }

    /// Link positions `(vertex, q)` where `U′` fails to contain
    /// `(e_{q,r_q}^{ε_q} e_{q+1,l_{q+1}}^{−ε_{q+1}})^{O_q}` at the corner
    /// `c_q` joining `e_q` and `e_{q+1}`.
    pub fn subword_violations(&self) -> Vec<(usize, usize)> {
        let n = self.hamiltonian.len();
        let w = self.hamiltonian.letters();
        let mut bad = Vec::new();
        for (v, (link, data)) in self.links.iter().zip(&self.data).enumerate() {
            let d = link.degree();
            for q in 0..d {
                let p = (q + 1) % d;
                let (eq, ep) = (link.ends[q], link.ends[p]);
                let a = Letter::new(self.doubled(eq.symbol(), data.r[q]), eq.exponent());
                let b = Letter::new(self.doubled(ep.symbol(), data.l[p]), -ep.exponent());
                let c = link.corners[q];
                let (x, y) = (w[(c + n - 1) % n], w[c]);
                let ok = if data.big_o[q] == 1 {
                    x == a && y == b
                } else {
                    x == b.inverse() && y == a.inverse()
                };
                if !ok {
                    bad.push((v, q));
                }
            }
        }
        bad
    }
}

/// A vertex of an inserted cycle: `(vertex of Γ_U, index on its cycle)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct CycleVertex {
    pub vertex: usize,
    pub index: usize,
}

/// Step 2: the doubled graph with a directed cycle replacing each vertex.
#[derive(Clone, Debug)]
pub struct ExtendedGraph {
    doubled: DoubledGraph,
    cycles: Vec<Vec<Symbol>>,
    /// Tail and head of every doubled symbol.
    ends: BTreeMap<Symbol, (CycleVertex, CycleVertex)>,
    /// For each edge `x`: the cycle paths `x` and `y` with
    /// `x1 = x · x2 · y` around the doubled pair.
    paths: BTreeMap<Symbol, (Word, Word)>,
}

/// Picks unused letters, from `z` downwards, one per vertex.
fn default_cycle_symbols(
    d: &DoubledGraph,
    taken: &BTreeSet<Symbol>,
) -> Vec<Vec<Symbol>> {
    let used_letters: BTreeSet<char> = taken.iter().map(|s| s.letter()).collect();
    let mut free: Vec<char> = ('a'..='z').rev().filter(|c| !used_letters.contains(c)).collect();
    let spare = free.pop().unwrap_or('z');
    let mut out = Vec::new();
    for v in 0..d.base.num_vertices() {
        let deg = d.base.degree(v);
        let syms = if let Some(c) = (!free.is_empty()).then(|| free.remove(0)) {
            if deg == 1 {
                vec![Symbol::new(c, None)]
            } else {
                (1..=deg).map(|i| Symbol::new(c, Some(i as u32))).collect()
            }
        } else {
            (0..deg)
                .map(|i| Symbol::new(spare, Some((1000 * (v + 1) + i) as u32)))
                .collect()
        };
        out.push(syms);
    }
    out
}

/// Inserts cycles with automatically chosen symbols; `cycle_lengths[v]`
/// must equal the degree of `v`.
pub fn insert_cycles(d: DoubledGraph, cycle_lengths: &[usize]) -> Result<ExtendedGraph, ExtensionError> {
    for v in 0..d.base.num_vertices() {
        let got = *cycle_lengths.get(v).ok_or(ExtensionError::MissingCycle(v))?;
        if got != d.base.degree(v) {
            return Err(ExtensionError::WrongCycleLength { vertex: v, expected: d.base.degree(v), got });
        }
    }
    let taken = taken_symbols(&d);
    let names = default_cycle_symbols(&d, &taken);
    insert_named_cycles(d, names)
}

fn taken_symbols(d: &DoubledGraph) -> BTreeSet<Symbol> {
    let mut taken: BTreeSet<Symbol> = d.base.edges().iter().copied().collect();
    for &(a, b) in d.pairs.values() {
        taken.insert(a);
        taken.insert(b);
    }
    taken
}

/// Inserts cycles with the given symbols `c_1, …, c_d` per vertex.
pub fn insert_named_cycles(d: DoubledGraph, names: Vec<Vec<Symbol>>) -> Result<ExtendedGraph, ExtensionError> {
    let nv = d.base.num_vertices();
    if names.len() != nv {
        return Err(ExtensionError::MissingCycle(names.len().min(nv)));
    }
    let mut taken = taken_symbols(&d);
    for (v, cyc) in names.iter().enumerate() {
        if cyc.len() != d.base.degree(v) {
            return Err(ExtensionError::WrongCycleLength { vertex: v, expected: d.base.degree(v), got: cyc.len() });
        }
        for &s in cyc {
            if !taken.insert(s) {
                return Err(ExtensionError::SymbolClash(s));
            }
        }
    }
    let mut tails: BTreeMap<Symbol, CycleVertex> = BTreeMap::new();
    let mut heads: BTreeMap<Symbol, CycleVertex> = BTreeMap::new();
    let mut tail_path: BTreeMap<Symbol, Word> = BTreeMap::new();
    let mut head_path: BTreeMap<Symbol, Word> = BTreeMap::new();
    for (v, (link, data)) in d.links.iter().zip(&d.data).enumerate() {
        let deg = link.degree();
        for q in 0..deg {
            let end = link.ends[q];
            let x = end.symbol();
            let xl = d.doubled(x, data.l[q]);
            let xr = d.doubled(x, data.r[q]);
            let at_l = CycleVertex { vertex: v, index: q };
            let at_r = CycleVertex { vertex: v, index: (q + 1) % deg };
            let (map, paths) = if end.exponent() == 1 {
                (&mut heads, &mut head_path)
            } else {
                (&mut tails, &mut tail_path)
            };
            map.insert(xl, at_l);
            map.insert(xr, at_r);
            // c_q runs from the x_l attachment to the x_r attachment
            let c = names[v][q].pos();
            let path = if end.exponent() == -1 {
                // from tail(x1) to tail(x2)
                if data.l[q] == 1 { c } else { c.inverse() }
            } else if data.l[q] == 2 {
                // from head(x2) to head(x1)
                c
            } else {
                c.inverse()
            };
            paths.insert(x, Word::from(path));
        }
    }
    let ends = tails
        .iter()
        .map(|(s, &t)| (*s, (t, heads[s])))
        .collect();
    let paths = d
        .base
        .edges()
        .iter()
        .map(|&x| (x, (tail_path[&x].clone(), head_path[&x].clone())))
        .collect();
    Ok(ExtendedGraph {
        doubled: d,
        cycles: names,
        ends,
        paths,
    })
}

impl ExtendedGraph {
    pub fn doubled(&self) -> &DoubledGraph {
        &self.doubled
    }

    pub fn base(&self) -> &SurfaceGraph {
        &self.doubled.base
    }

    /// `C_v` as a word `c_1 ⋯ c_d`.
    pub fn cycle(&self, v: usize) -> Word {
        self.cycles[v].iter().map(|s| s.pos()).collect()
    }

    pub fn cycle_symbols(&self, v: usize) -> &[Symbol] {
        &self.cycles[v]
    }

    pub fn num_vertices(&self) -> usize {
        self.cycles.len()
    }

    /// `(ι, τ)` of a doubled symbol.
    pub fn attachment(&self, s: Symbol) -> Option<(CycleVertex, CycleVertex)> {
        self.ends.get(&s).copied()
    }

    /// Cycle paths `(x, y)` with `ψ(e1) = ψ(x)ψ(e2)ψ(y)` for edge `e`.
    pub fn relation_paths(&self, e: Symbol) -> Option<&(Word, Word)> {
        self.paths.get(&e)
    }

    /// Every symbol needing a label: doubled symbols, then cycle symbols.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = self.doubled.pairs.values().flat_map(|&(a, b)| [a, b]).collect();
        out.extend(self.cycles.iter().flatten().copied());
        out
    }

    fn tau(&self, l: Letter) -> CycleVertex {
        let (t, h) = self.ends[&l.symbol()];
        if l.exponent() == 1 {
            h
        } else {
            t
        }
    }

    /// True iff `U′` is a closed walk that visits every cycle vertex once.
    pub fn is_hamiltonian(&self) -> bool {
        let w = self.doubled.hamiltonian.letters();
        let n = w.len();
        let mut visited = BTreeSet::new();
        for i in 0..n {
            let here = self.tau(w[i]);
            if here != self.tau(w[(i + 1) % n].inverse()) || !visited.insert(here) {
                return false;
            }
        }
        let total: usize = self.cycles.iter().map(|c| c.len()).sum();
        visited.len() == total
    }
}

/// Images of symbols; inverses are mapped to inverse images.
pub type Labelling = BTreeMap<Symbol, Word>;

fn apply(psi: &Labelling, w: &Word) -> Result<Word, ExtensionError> {
    for l in w.letters() {
        if !psi.contains_key(&l.symbol()) {
            return Err(ExtensionError::MissingLabel(l.symbol()));
        }
    }
    Ok(w.substitute(|s| psi[&s].clone()))
}

/// Outcome of the three labelling conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabellingReport {
    /// Symbols whose image is not a geodesic.
    pub not_minimal: Vec<Symbol>,
    /// Edges whose doubled pair breaks `ψ(x1) = ψ(x)ψ(x2)ψ(y)`.
    pub broken_relations: Vec<Symbol>,
    /// `ψ(U′)` as written is cyclically reduced.
    pub cyclically_reduced: bool,
}

impl LabellingReport {
    pub fn is_valid(&self) -> bool {
        self.not_minimal.is_empty() && self.broken_relations.is_empty() && self.cyclically_reduced
    }
}

pub fn validate_labelling(
    e: &ExtendedGraph,
    psi: &Labelling,
    oracle: &dyn GroupOracle,
) -> Result<LabellingReport, ExtensionError> {
    let mut not_minimal = Vec::new();
    for s in e.symbols() {
        let img = psi.get(&s).ok_or(ExtensionError::MissingLabel(s))?;
        if oracle.minimal_length(img) != img.len() || !img.is_reduced() {
            not_minimal.push(s);
        }
    }
    let mut broken = Vec::new();
    for &x in e.base().edges() {
        let (x1, x2) = e.doubled.pair(x);
        let (p, q) = &e.paths[&x];
        let rhs = apply(psi, &Word::new(
            p.letters().iter().copied().chain([x2.pos()]).chain(q.letters().iter().copied()).collect(),
        ))?;
        if !oracle.are_equal(&psi[&x1], &rhs) {
            broken.push(x);
        }
    }
    let f = apply(psi, &e.doubled.hamiltonian)?;
    Ok(LabellingReport {
        not_minimal,
        broken_relations: broken,
        cyclically_reduced: f.is_cyclically_reduced(),
    })
}

/// A set of vertices extended jointly, with its declared genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClass {
    pub vertices: Vec<usize>,
    pub genus: HalfInt,
    pub orientable: bool,
}

#[derive(Clone, Debug)]
pub struct Extension {
    pub graph: ExtendedGraph,
    pub labelling: Labelling,
    pub partition: Vec<VertexClass>,
}

/// Which link to use at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkChoice {
    pub start: Letter,
    pub orientation: i8,
}

/// Serialised form of an [`Extension`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtensionSpec {
    pub base_word: Word,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub links: BTreeMap<usize, LinkChoice>,
    #[serde(default)]
    pub cycles: BTreeMap<usize, Vec<Symbol>>,
    pub labelling: BTreeMap<Symbol, Word>,
    pub partition: Vec<VertexClass>,
}

impl Extension {
    pub fn from_spec(spec: &ExtensionSpec) -> Result<Extension, ExtensionError> {
        let u = QuadraticWord::new(spec.base_word.clone())?;
        let g = build_graph(&u)?;
        let mut links = g.links();
        for (&v, choice) in &spec.links {
            if v >= links.len() {
                return Err(ExtensionError::UnknownVertex(v));
            }
            links[v] = vertex_link(&g, v, choice.orientation, choice.start)?;
        }
        let d = double_edges_with_links(g, links)?;
        let taken = taken_symbols(&d);
        let defaults = default_cycle_symbols(&d, &taken.iter().copied().chain(spec.cycles.values().flatten().copied()).collect());
        for &v in spec.cycles.keys() {
            if v >= defaults.len() {
                return Err(ExtensionError::UnknownVertex(v));
            }
        }
        let names = (0..defaults.len())
            .map(|v| spec.cycles.get(&v).cloned().unwrap_or_else(|| defaults[v].clone()))
            .collect();
        let graph = insert_named_cycles(d, names)?;
        let ext = Extension {
            graph,
            labelling: spec.labelling.clone(),
            partition: spec.partition.clone(),
        };
        ext.check_partition()?;
        Ok(ext)
    }

    pub fn to_spec(&self) -> ExtensionSpec {
        let g = self.graph.base();
        let links = self
            .graph
            .doubled
            .links
            .iter()
            .enumerate()
            .filter(|(v, l)| **l != g.default_link(*v))
            .map(|(v, l)| (v, LinkChoice { start: l.start, orientation: l.orientation }))
            .collect();
        ExtensionSpec {
            base_word: g.word().word().clone(),
            links,
            cycles: self.graph.cycles.iter().cloned().enumerate().collect(),
            labelling: self.labelling.clone(),
            partition: self.partition.clone(),
        }
    }

    /// Every vertex in exactly one class.
    pub fn check_partition(&self) -> Result<(), ExtensionError> {
        let nv = self.graph.num_vertices();
        let mut seen = vec![false; nv];
        for c in &self.partition {
            if c.vertices.is_empty() {
                return Err(ExtensionError::BadPartition("empty class".into()));
            }
            for &v in &c.vertices {
                if v >= nv {
                    return Err(ExtensionError::UnknownVertex(v));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(ExtensionError::BadPartition(format!("vertex {v} in two classes")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(ExtensionError::BadPartition(format!("vertex {v} in no class")));
        }
        Ok(())
    }

    /// `Σ g_i` over the partition.
    pub fn genus(&self) -> HalfInt {
        self.partition.iter().fold(HalfInt::ZERO, |a, c| a + c.genus)
    }

    /// Orientable base word and every class orientable.
    pub fn is_orientable(&self) -> bool {
        crate::quadratic::is_orientable(self.graph.base().word()) && self.partition.iter().all(|c| c.orientable)
    }

    /// `ψ(C_v)`, freely reduced.
    pub fn cycle_label(&self, v: usize) -> Result<Word, ExtensionError> {
        Ok(apply(&self.labelling, &self.graph.cycle(v))?.free_reduce())
    }

    pub fn validate(&self, oracle: &dyn GroupOracle) -> Result<LabellingReport, ExtensionError> {
        validate_labelling(&self.graph, &self.labelling, oracle)
    }
}

/// `Σ_v |ψ(C_v)|`, each label freely reduced.
pub fn extension_length(ext: &Extension) -> Result<usize, ExtensionError> {
    (0..ext.graph.num_vertices())
        .map(|v| ext.cycle_label(v).map(|w| w.len()))
        .sum()
}

/// `ψ(U′)`, freely reduced.
pub fn hamiltonian_label(ext: &Extension) -> Result<Word, ExtensionError> {
    Ok(apply(&ext.labelling, ext.graph.doubled.hamiltonian())?.free_reduce())
}

/// Checks that `class` is a joint extension of its declared genus `g`:
/// `genus_H(w_1, …, w_t) = g − t + 1` exactly, and the low-degree clause
/// when `t = 1`.
pub fn check_joint_extension(
    ext: &Extension,
    class: &[usize],
    oracle: &dyn GroupOracle,
    budget: &Budget,
) -> Result<Verdict, ExtensionError> {
    let mut want: Vec<usize> = class.to_vec();
    want.sort_unstable();
    let decl = ext
        .partition
        .iter()
        .find(|c| {
            let mut v = c.vertices.clone();
            v.sort_unstable();
            v == want
        })
        .ok_or_else(|| ExtensionError::BadPartition(format!("{class:?} is not a class of the partition")))?;
    let t = class.len() as i64;
    let words: Vec<Word> = class.iter().map(|&v| ext.cycle_label(v)).collect::<Result<_, _>>()?;
    let g = decl.genus;
    let m = g - HalfInt::from_int(t - 1);
    if m < HalfInt::ZERO || (decl.orientable && !m.is_integer()) {
        return Ok(Verdict::False);
    }
    if t == 1 {
        let deg = ext.graph.base().degree(class[0]);
        let u = ext.graph.base().word().letters();
        let is_square = u.len() == 2 && u[0] == u[1];
        if deg <= 2 && g < HalfInt::HALF && !is_square {
            return Ok(Verdict::False);
        }
    }
    let upper = genus_tuple(&words, m, decl.orientable, oracle, budget);
    if upper != Verdict::True {
        return Ok(upper);
    }
    if m == HalfInt::ZERO {
        return Ok(Verdict::True);
    }
    let step = if decl.orientable { HalfInt::ONE } else { HalfInt::HALF };
    let lower = m - step;
    Ok(match genus_tuple(&words, lower, decl.orientable, oracle, budget) {
        Verdict::True => Verdict::False,
        Verdict::False => Verdict::True,
        Verdict::Indeterminate => Verdict::Indeterminate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::FreeGroup;

    fn q(s: &str) -> QuadraticWord {
        QuadraticWord::lit(s)
    }

    #[test]
    fn doubling_examples() {
        assert_eq!(double_edges(&q("abAb")).unwrap().hamiltonian().to_string(), "a1b1A2b2");
        assert_eq!(double_edges(&q("abcABC")).unwrap().hamiltonian().to_string(), "a1b1c1A2B2C2");
        assert_eq!(double_edges(&q("aA")).unwrap().hamiltonian().to_string(), "a1A2");
        for w in ["abAb", "abcABC", "aA", "aa", "abAB", "abcCBA"] {
            assert!(double_edges(&q(w)).unwrap().subword_violations().is_empty(), "{w}");
        }
    }

    #[test]
    fn cycles_make_u_prime_hamiltonian() {
        for w in ["abAb", "abcABC", "aA", "aa", "abcCBA", "aabb"] {
            let d = double_edges(&q(w)).unwrap();
            let lens: Vec<usize> = (0..d.base().num_vertices()).map(|v| d.base().degree(v)).collect();
            let e = insert_cycles(d, &lens).unwrap();
            assert!(e.is_hamiltonian(), "{w}");
        }
    }

    #[test]
    fn wrong_cycle_length_rejected() {
        let d = double_edges(&q("abcABC")).unwrap();
        assert!(matches!(insert_cycles(d, &[3, 2]), Err(ExtensionError::WrongCycleLength { .. })));
    }

    #[test]
    fn trivial_cycle_labels() {
        let d = double_edges(&q("abcABC")).unwrap();
        let e = insert_cycles(d, &[3, 3]).unwrap();
        let f = FreeGroup::of_rank(2);
        let mut psi = Labelling::new();
        for s in e.symbols() {
            psi.insert(s, Word::empty());
        }
        let sym = |s: &str| s.parse::<Symbol>().unwrap();
        for (x, img) in [("a", "a"), ("b", "b"), ("c", "b")] {
            psi.insert(sym(&format!("{x}1")), img.parse().unwrap());
            psi.insert(sym(&format!("{x}2")), img.parse().unwrap());
        }
        // a b b A B B is cyclically reduced as written
        assert!(validate_labelling(&e, &psi, &f).unwrap().is_valid());
        psi.insert(sym("c1"), "abb".parse().unwrap());
        let r = validate_labelling(&e, &psi, &f).unwrap();
        assert_eq!(r.broken_relations, vec![sym("c")]);
    }
}
