//! The graph of a quadratic word on its glued surface: vertices, links,
//! incidence sequences and the bookkeeping functions.
//!
//! Conventions. For `U = s[0] s[1] ⋯ s[n-1]` the boundary of the disk has
//! segment `i` labelled `s[i]` and corner `c` sitting between segments
//! `c-1` and `c` (indices mod `n`). An edge-end is written as a [`Letter`]:
//! `x` is the head of edge `x` and `x⁻¹` its tail. Corner `c` then touches
//! the end `s[c-1]` (where segment `c-1` arrives) and the end `s[c]⁻¹`
//! (where segment `c` departs). Joining these two ends at every corner gives
//! a 2-regular graph on the `2e` edge-ends whose cycles are the vertex links.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::halfint::HalfInt;
use crate::quadratic::{signature, QuadraticError, QuadraticWord, Signature};
use crate::words::{Letter, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error(transparent)]
    Quadratic(#[from] QuadraticError),
    #[error("edge-end {end} is not incident to vertex {vertex}")]
    NotIncident { end: Letter, vertex: usize },
    #[error("no vertex {0}")]
    NoVertex(usize),
    #[error("orientation must be 1 or -1, got {0}")]
    BadOrientation(i8),
}

/// How an edge-end meets a corner.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Role {
    /// The end `s[c-1]`, where the previous segment arrives.
    Arrive,
    /// The end `s[c]⁻¹`, where the next segment departs.
    Depart,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Incidence {
    corner: usize,
    role: Role,
}

#[derive(Clone, Debug)]
pub struct SurfaceGraph {
    word: QuadraticWord,
    sig: Signature,
    edges: Vec<Symbol>,
    corner_vertex: Vec<usize>,
    vertex_corners: Vec<Vec<usize>>,
    incidences: BTreeMap<Letter, [Incidence; 2]>,
}

/// A vertex link read from a chosen start with a chosen orientation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VertexLink {
    pub vertex: usize,
    /// `e_1^{ε_1}, …, e_d^{ε_d}`.
    pub ends: Vec<Letter>,
    /// `corners[q]` joins `ends[q]` and `ends[q+1]` (cyclically).
    pub corners: Vec<usize>,
    /// Role of `ends[q]` at `corners[q]`.
    pub roles: Vec<Role>,
    pub start: Letter,
    pub orientation: i8,
}

impl VertexLink {
    pub fn degree(&self) -> usize {
        self.ends.len()
    }
}

/// Incidence sequence and bookkeeping values along a link.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IncidenceData {
    /// `o(e_q)`.
    pub o: Vec<i8>,
    /// `O_q`.
    pub big_o: Vec<i8>,
    pub mu: Vec<u8>,
    pub nu: Vec<u8>,
    pub l: Vec<u8>,
    pub r: Vec<u8>,
}

impl SurfaceGraph {
    pub fn word(&self) -> &QuadraticWord {
        &self.word
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    /// Edge symbols in order of first appearance.
    pub fn edges(&self) -> &[Symbol] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_corners.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// The letter at position `i` of the word.
    pub fn occurrence(&self, i: usize) -> Letter {
        self.word.letters()[i]
    }

    /// Vertex at corner `c`.
    pub fn corner_vertex(&self, c: usize) -> usize {
        self.corner_vertex[c]
    }

    /// Corners of vertex `v`, ascending.
    pub fn vertex_corners(&self, v: usize) -> &[usize] {
        &self.vertex_corners[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertex_corners[v].len()
    }

    /// Vertex carrying an edge-end.
    pub fn end_vertex(&self, end: Letter) -> Option<usize> {
        self.incidences
            .get(&end)
            .map(|inc| self.corner_vertex[inc[0].corner])
    }

    /// The end arriving at corner `c`.
    pub fn arrive(&self, c: usize) -> Letter {
        let n = self.word.len();
        self.word.letters()[(c + n - 1) % n]
    }

    /// The end departing from corner `c`.
    pub fn depart(&self, c: usize) -> Letter {
        self.word.letters()[c].inverse()
    }

    pub fn genus(&self) -> HalfInt {
        HalfInt::from_twice(1 - self.num_vertices() as i64 + self.num_edges() as i64)
    }

    /// Link of `v` from its default start: the departing end at the
    /// vertex's lowest corner, read with orientation `1`.
    pub fn default_link(&self, v: usize) -> VertexLink {
        let c = self.vertex_corners[v][0];
        self.walk(v, self.depart(c), 1)
    }

    pub fn links(&self) -> Vec<VertexLink> {
        (0..self.num_vertices()).map(|v| self.default_link(v)).collect()
    }

    fn walk(&self, v: usize, start: Letter, orientation: i8) -> VertexLink {
        let inc = self.incidences[&start];
        let first = {
            let arrive: Vec<&Incidence> = inc.iter().filter(|i| i.role == Role::Arrive).collect();
            let plus = match arrive.len() {
                0 | 2 => if inc[0].corner <= inc[1].corner { 0 } else { 1 },
                _ => if inc[0].role == Role::Arrive { 0 } else { 1 },
            };
            if orientation == 1 {
                inc[plus]
            } else {
                inc[1 - plus]
            }
        };
        let mut ends = Vec::new();
        let mut corners = Vec::new();
        let mut roles = Vec::new();
        let mut cur = start;
        let mut leave = first;
        loop {
            ends.push(cur);
            corners.push(leave.corner);
            roles.push(leave.role);
            let (next, arrived) = match leave.role {
                Role::Arrive => (self.depart(leave.corner), Incidence { corner: leave.corner, role: Role::Depart }),
                Role::Depart => (self.arrive(leave.corner), Incidence { corner: leave.corner, role: Role::Arrive }),
            };
            if next == start {
                break;
            }
            let ni = self.incidences[&next];
            leave = if ni[0] == arrived { ni[1] } else { ni[0] };
            cur = next;
        }
        VertexLink {
            vertex: v,
            ends,
            corners,
            roles,
            start,
            orientation,
        }
    }
}

/// Builds the surface graph of a non-empty quadratic word.
pub fn build_graph(u: &QuadraticWord) -> Result<SurfaceGraph, SurfaceError> {
    if u.is_empty() {
        return Err(QuadraticError::Empty.into());
    }
    let n = u.len();
    let s = u.letters();
    let mut incidences: BTreeMap<Letter, Vec<Incidence>> = BTreeMap::new();
    for c in 0..n {
        incidences
            .entry(s[(c + n - 1) % n])
            .or_default()
            .push(Incidence { corner: c, role: Role::Arrive });
        incidences
            .entry(s[c].inverse())
            .or_default()
            .push(Incidence { corner: c, role: Role::Depart });
    }
    let incidences: BTreeMap<Letter, [Incidence; 2]> = incidences
        .into_iter()
        .map(|(k, v)| (k, [v[0], v[1]]))
        .collect();
    let mut g = SurfaceGraph {
        word: u.clone(),
        sig: signature(u),
        edges: u.symbols(),
        corner_vertex: vec![usize::MAX; n],
        vertex_corners: Vec::new(),
        incidences,
    };
    for c in 0..n {
        if g.corner_vertex[c] != usize::MAX {
            continue;
        }
        let v = g.vertex_corners.len();
        let link = g.walk(v, g.depart(c), 1);
        let mut cs = link.corners.clone();
        cs.sort_unstable();
        for &k in &cs {
            g.corner_vertex[k] = v;
        }
        g.vertex_corners.push(cs);
    }
    Ok(g)
}

/// `(1 − v + e)/2`.
pub fn graph_genus(u: &QuadraticWord) -> Result<HalfInt, SurfaceError> {
    Ok(build_graph(u)?.genus())
}

/// Link of `v` beginning at `start`, read with `orientation`.
pub fn vertex_link(
    g: &SurfaceGraph,
    v: usize,
    orientation: i8,
    start: Letter,
) -> Result<VertexLink, SurfaceError> {
    if v >= g.num_vertices() {
        return Err(SurfaceError::NoVertex(v));
    }
    if orientation != 1 && orientation != -1 {
        return Err(SurfaceError::BadOrientation(orientation));
    }
    if g.end_vertex(start) != Some(v) {
        return Err(SurfaceError::NotIncident { end: start, vertex: v });
    }
    Ok(g.walk(v, start, orientation))
}

/// `O_1` from the role of `e_1` at the first corner, then
/// `O_{q+1} = O_q · o(e_{q+1})`.
pub fn incidence_sequence(g: &SurfaceGraph, link: &VertexLink) -> Vec<i8> {
    let d = link.degree();
    let mut out = Vec::with_capacity(d);
    out.push(if link.roles[0] == Role::Arrive { 1 } else { -1 });
    for q in 1..d {
        let o = g.sig.orientation(link.ends[q].symbol()).unwrap();
        out.push(out[q - 1] * o);
    }
    out
}

pub fn mu(x: i8) -> u8 {
    if x == 1 {
        1
    } else {
        2
    }
}

pub fn nu(x: i8) -> u8 {
    if x == 1 {
        2
    } else {
        1
    }
}

pub fn l_fn(x: i8, y: i8) -> u8 {
    nu(x * y)
}

pub fn r_fn(x: i8, y: i8) -> u8 {
    mu(x * y)
}

/// Bookkeeping values `μ, ν, l, r` for a link with incidence sequence `big_o`.
pub fn bookkeeping(g: &SurfaceGraph, link: &VertexLink, big_o: &[i8]) -> IncidenceData {
    let d = link.degree();
    let n = g.word.len();
    let mut data = IncidenceData {
        o: Vec::with_capacity(d),
        big_o: big_o.to_vec(),
        mu: Vec::with_capacity(d),
        nu: Vec::with_capacity(d),
        l: Vec::with_capacity(d),
        r: Vec::with_capacity(d),
    };
    for q in 0..d {
        let end = link.ends[q];
        let x = end.symbol();
        let eps = end.exponent();
        let o = g.sig.orientation(x).unwrap();
        data.o.push(o);
        let oq = big_o[q];
        // a degree-one vertex always sits on an alternating edge
        let (m, v, l, r) = if o == 1 {
            (mu(eps), nu(eps), l_fn(oq, eps), r_fn(oq, eps))
        } else {
            let prev = (q + d - 1) % d;
            let c = link.corners[prev];
            let pos = if big_o[prev] == 1 { c } else { (c + n - 1) % n };
            let first = g.word.occurrences(x).unwrap().0;
            let (l, r) = if pos == first { (1, 2) } else { (2, 1) };
            if oq == 1 { (r, l, l, r) } else { (l, r, l, r) }
        };
        data.mu.push(m);
        data.nu.push(v);
        data.l.push(l);
        data.r.push(r);
    }
    data
}

/// Incidence sequence and bookkeeping for a link in one call.
pub fn incidence_data(g: &SurfaceGraph, link: &VertexLink) -> IncidenceData {
    let big_o = incidence_sequence(g, link);
    bookkeeping(g, link, &big_o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadraticWord {
        QuadraticWord::lit(s)
    }

    #[test]
    fn vertex_and_edge_counts() {
        let g = build_graph(&q("abcABC")).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (2, 3));
        assert!(g.links().iter().all(|l| l.degree() == 3));
        let g = build_graph(&q("abAb")).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (1, 2));
        let g = build_graph(&q("aA")).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (2, 1));
        assert!(g.links().iter().all(|l| l.degree() == 1));
    }

    #[test]
    fn genus_values() {
        let h = |s: &str| graph_genus(&q(s)).unwrap();
        assert_eq!(h("abcABC"), HalfInt::ONE);
        assert_eq!(h("abAB"), HalfInt::ONE);
        assert_eq!(h("abAb"), HalfInt::ONE);
        assert_eq!(h("aa"), HalfInt::HALF);
        assert_eq!(h("aA"), HalfInt::ZERO);
        assert!(build_graph(&QuadraticWord::new(Default::default()).unwrap()).is_err());
    }

    #[test]
    fn klein_bottle_table() {
        let g = build_graph(&q("abAb")).unwrap();
        let link = g.default_link(0);
        let shown: Vec<String> = link.ends.iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["A", "B", "a", "b"]);
        let d = incidence_data(&g, &link);
        assert_eq!(d.o, [1, -1, 1, -1]);
        assert_eq!(d.big_o, [1, -1, -1, 1]);
        assert_eq!(d.mu, [2, 2, 1, 2]);
        assert_eq!(d.nu, [1, 1, 2, 1]);
        assert_eq!(d.l, [1, 2, 1, 1]);
        assert_eq!(d.r, [2, 1, 2, 2]);
    }

    #[test]
    fn alternating_edge_positive() {
        assert_eq!((mu(1), nu(1), l_fn(1, 1), r_fn(1, 1)), (1, 2, 2, 1));
    }

    #[test]
    fn start_must_be_incident() {
        let g = build_graph(&q("aA")).unwrap();
        let a = Symbol::new('a', None);
        let v = g.end_vertex(a.pos()).unwrap();
        assert!(vertex_link(&g, v, 1, a.pos()).is_ok());
        assert!(vertex_link(&g, v, 1, a.neg()).is_err());
        let l = vertex_link(&g, v, -1, a.pos()).unwrap();
        assert_eq!(incidence_sequence(&g, &l), [-1]);
    }

    #[test]
    fn orientable_links_have_constant_o() {
        for w in ["abAB", "abcABC", "abcdABCD", "abAcBC"] {
            let g = build_graph(&q(w)).unwrap();
            for link in g.links() {
                assert!(incidence_sequence(&g, &link).iter().all(|&o| o == 1), "{w}");
            }
        }
    }
}
