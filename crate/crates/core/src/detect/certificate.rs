//! Genus certificates: a Wicks form with a short cancellation-free
//! labelling, or an extension of one of its specialisations.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::forms::bounded_conjugator;
use super::matching::{match_wicks_full, CancellationFreeLabelling};
use super::{Budget, Meter, Search, Verdict};
use crate::extension::{
    check_joint_extension, extension_length, hamiltonian_label, Extension, ExtensionSpec, Labelling, VertexClass,
};
use crate::halfint::HalfInt;
use crate::oracle::GroupOracle;
use crate::quadratic::{delete_symbols, QuadraticWord};
use crate::surface::graph_genus;
use crate::wicks::{classify, wicks_forms};
use crate::words::{conjugator_free, Symbol, Word};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum GenusCertificate {
    /// `h = R·θ(W)·R⁻¹` with `θ` cancellation-free and short.
    Labelled {
        genus: HalfInt,
        orientable: bool,
        wicks_form: Word,
        theta: BTreeMap<Symbol, Word>,
        conjugator: Word,
    },
    /// `h = R·F·R⁻¹` with `F = ψ(U′)` for an extension of the
    /// specialisation of `W` that deletes `deleted`.
    Extended {
        genus: HalfInt,
        orientable: bool,
        wicks_form: Word,
        deleted: Vec<Symbol>,
        extension: ExtensionSpec,
        conjugator: Word,
    },
}

impl GenusCertificate {
    pub fn genus(&self) -> HalfInt {
        match self {
            GenusCertificate::Labelled { genus, .. } | GenusCertificate::Extended { genus, .. } => *genus,
        }
    }

    pub fn orientable(&self) -> bool {
        match self {
            GenusCertificate::Labelled { orientable, .. } | GenusCertificate::Extended { orientable, .. } => {
                *orientable
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// One entry per condition of the certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub checks: Vec<Check>,
}

impl CertificateReport {
    fn push(&mut self, name: &'static str, verdict: Verdict, detail: impl Into<String>) {
        self.checks.push(Check {
            name,
            verdict,
            detail: detail.into(),
        });
    }

    fn ok(&mut self, name: &'static str, b: bool, detail: impl Into<String>) {
        self.push(name, Verdict::from_bool(b), detail);
    }

    pub fn verdict(&self) -> Verdict {
        self.checks.iter().fold(Verdict::True, |a, c| a.and(c.verdict))
    }

    pub fn holds(&self) -> bool {
        self.verdict().is_true()
    }

    pub fn get(&self, name: &str) -> Option<Verdict> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.verdict)
    }
}

fn check_form(r: &mut CertificateReport, w: &Word, genus: HalfInt, orientable: bool) {
    let got = classify(w);
    let detail = match &got {
        Some(f) => format!("genus {} {}", f.genus, if f.orientable { "orientable" } else { "non-orientable" }),
        None => "not a Wicks form".into(),
    };
    r.ok("wicks_form", got.is_some_and(|f| f.genus == genus && f.orientable == orientable), detail);
}

fn conj(r: &Word, f: &Word) -> Word {
    r.concat(f).concat(&r.inverse())
}

/// Checks every condition of `cert` for `h`, reporting each separately.
pub fn verify_certificate(h: &Word, cert: &GenusCertificate, o: &dyn GroupOracle) -> CertificateReport {
    let mut rep = CertificateReport { checks: Vec::new() };
    let c = o.constants(cert.genus());
    match cert {
        GenusCertificate::Labelled { genus, orientable, wicks_form, theta, conjugator } => {
            check_form(&mut rep, wicks_form, *genus, *orientable);
            let th = CancellationFreeLabelling(theta.clone());
            let support: BTreeSet<Symbol> = wicks_form.support();
            let keys: BTreeSet<Symbol> = theta.keys().copied().collect();
            rep.ok("labelling_support", keys == support, "");
            rep.ok("cancellation_free", th.is_cancellation_free_on(wicks_form), "");
            let bound = c.form_bound();
            rep.ok("label_bound", th.max_len() <= bound, format!("max {} ≤ {bound}", th.max_len()));
            let f = th.apply(wicks_form);
            rep.ok("conjugate", o.are_equal(h, &conj(conjugator, &f)), "");
            let rb = c.conjugator_bound_form1(h.len());
            rep.ok("conjugator_bound", conjugator.len() <= rb, format!("{} ≤ {rb}", conjugator.len()));
        }
        GenusCertificate::Extended { genus, orientable, wicks_form, deleted, extension, conjugator } => {
            check_form(&mut rep, wicks_form, *genus, *orientable);
            let support = wicks_form.support();
            let del: BTreeSet<Symbol> = deleted.iter().copied().collect();
            let proper = del.is_subset(&support) && del.len() < support.len();
            let spec_ok = QuadraticWord::new(wicks_form.clone())
                .map(|q| delete_symbols(&q, &del).word() == &extension.base_word)
                .unwrap_or(false);
            rep.ok("specialisation", proper && spec_ok, "");
            let ext = match Extension::from_spec(extension) {
                Ok(e) => {
                    rep.ok("extension_structure", true, "");
                    e
                }
                Err(e) => {
                    rep.ok("extension_structure", false, e.to_string());
                    return rep;
                }
            };
            let k = graph_genus(ext.graph.base().word()).unwrap_or(HalfInt::ZERO);
            let g = ext.genus();
            rep.ok("genus_sum", g + k == *genus, format!("g = {g}, k = {k}"));
            if *orientable {
                rep.ok("orientability", ext.is_orientable(), "");
            }
            match ext.validate(o) {
                Ok(v) => rep.ok("labelling", v.is_valid(), format!("{v:?}")),
                Err(e) => {
                    rep.ok("labelling", false, e.to_string());
                    return rep;
                }
            }
            let budget = Budget::default();
            let mut joint = Verdict::True;
            for class in &ext.partition {
                let v = check_joint_extension(&ext, &class.vertices, o, &budget).unwrap_or(Verdict::False);
                joint = joint.and(v);
            }
            rep.push("joint_extensions", joint, "");
            let len = extension_length(&ext).unwrap_or(usize::MAX);
            let lb = c.extension_length_bound();
            rep.ok("extension_length", len <= lb, format!("{len} ≤ {lb}"));
            let f = match hamiltonian_label(&ext) {
                Ok(f) => f,
                Err(e) => {
                    rep.ok("minimal", false, e.to_string());
                    return rep;
                }
            };
            rep.ok("minimal", o.minimal_length(&f) == f.len(), "");
            rep.ok("conjugate", o.are_equal(h, &conj(conjugator, &f)), "");
            let rb = c.conjugator_bound_short(h.len());
            rep.ok("conjugator_bound", conjugator.len() <= rb, format!("{} ≤ {rb}", conjugator.len()));
        }
    }
    rep
}

/// The extension of `W` itself with empty vertex cycles and
/// `ψ(x₁) = ψ(x₂) = θ(x)`.
fn trivial_extension(form: &Word, theta: &CancellationFreeLabelling) -> Option<ExtensionSpec> {
    let q = QuadraticWord::new(form.clone()).ok()?;
    let nv = crate::surface::build_graph(&q).ok()?.num_vertices();
    let partition = (0..nv)
        .map(|v| VertexClass { vertices: vec![v], genus: HalfInt::ZERO, orientable: true })
        .collect();
    let mut ext = Extension::from_spec(&ExtensionSpec {
        base_word: form.clone(),
        links: BTreeMap::new(),
        cycles: BTreeMap::new(),
        labelling: BTreeMap::new(),
        partition,
    })
    .ok()?;
    let mut psi: Labelling = ext.graph.symbols().into_iter().map(|s| (s, Word::empty())).collect();
    for &x in ext.graph.base().edges() {
        let (x1, x2) = ext.graph.doubled().pair(x);
        let img = theta.get(x)?.clone();
        psi.insert(x1, img.clone());
        psi.insert(x2, img);
    }
    ext.labelling = psi;
    Some(ext.to_spec())
}

/// Searches for a certificate that `h` has genus at most `n` through a
/// Wicks form of genus exactly `n`.
pub fn search_genus(
    h: &Word,
    n: HalfInt,
    orientable: bool,
    o: &dyn GroupOracle,
    budget: &Budget,
) -> Search<GenusCertificate> {
    if n <= HalfInt::ZERO || (orientable && !n.is_integer()) {
        return Search::NotFound;
    }
    let c = o.constants(n);
    if o.is_free() {
        let core_len = h.free_reduce().cyclic_reduce().1.len();
        let Ok(forms) = wicks_forms(n, orientable, core_len) else {
            return Search::NotFound;
        };
        for form in forms.iter() {
            let w = form.word.word();
            let Some(m) = match_wicks_full(h, w) else {
                continue;
            };
            let r = conjugator_free(h, &m.image).unwrap_or(m.conjugator);
            let cert = if m.theta.max_len() <= c.form_bound() {
                GenusCertificate::Labelled {
                    genus: n,
                    orientable,
                    wicks_form: w.clone(),
                    theta: m.theta.0.clone(),
                    conjugator: r,
                }
            } else {
                let Some(spec) = trivial_extension(w, &m.theta) else {
                    continue;
                };
                GenusCertificate::Extended {
                    genus: n,
                    orientable,
                    wicks_form: w.clone(),
                    deleted: Vec::new(),
                    extension: spec,
                    conjugator: r,
                }
            };
            if verify_certificate(h, &cert, o).holds() {
                return Search::Found(cert);
            }
        }
        return Search::NotFound;
    }

    // labelled certificates only, by enumeration
    let Ok(forms) = wicks_forms(n, orientable, c.k) else {
        return Search::NotFound;
    };
    let rad = if o.order().is_some() { c.form_bound() } else { c.form_bound().min(budget.max_ball) };
    let images: Vec<Word> = o.ball(rad).into_iter().filter(|w| !w.is_empty()).collect();
    if images.is_empty() {
        return Search::Indeterminate;
    }
    let rb = c.conjugator_bound_form1(h.len());
    let rb = if o.order().is_some() { rb } else { rb.min(budget.max_len) };
    let mut meter = Meter::new(budget);
    for form in forms.iter() {
        let w = form.word.word();
        let syms: Vec<Symbol> = w.support().into_iter().collect();
        let mut idx = vec![0usize; syms.len()];
        loop {
            if !meter.tick() {
                return Search::Indeterminate;
            }
            let theta = CancellationFreeLabelling(
                syms.iter().zip(&idx).map(|(&s, &i)| (s, images[i].clone())).collect(),
            );
            let f = theta.apply(w);
            if f.is_cyclically_reduced() {
                if let Some(r) = bounded_conjugator(o, h, &f, rb) {
                    let cert = GenusCertificate::Labelled {
                        genus: n,
                        orientable,
                        wicks_form: w.clone(),
                        theta: theta.0,
                        conjugator: r,
                    };
                    if verify_certificate(h, &cert, o).holds() {
                        return Search::Found(cert);
                    }
                }
            }
            let mut j = 0;
            while j < idx.len() {
                idx[j] += 1;
                if idx[j] < images.len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j == idx.len() {
                break;
            }
        }
    }
    Search::Indeterminate
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::FreeGroup;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn sym(c: char) -> Symbol {
        Symbol::new(c, None)
    }

    #[test]
    fn labelled_certificate_for_commutator() {
        let f = FreeGroup::of_rank(2);
        let mut theta = BTreeMap::new();
        theta.insert(sym('a'), w("a"));
        theta.insert(sym('b'), w("b"));
        let cert = GenusCertificate::Labelled {
            genus: HalfInt::ONE,
            orientable: true,
            wicks_form: w("abAB"),
            theta: theta.clone(),
            conjugator: Word::empty(),
        };
        assert!(verify_certificate(&w("abAB"), &cert, &f).holds());
        theta.insert(sym('a'), w("aaaaaa"));
        let cert = GenusCertificate::Labelled {
            genus: HalfInt::ONE,
            orientable: true,
            wicks_form: w("abAB"),
            theta,
            conjugator: Word::empty(),
        };
        let rep = verify_certificate(&w("aaaaaabAAAAAAB"), &cert, &f);
        assert_eq!(rep.get("label_bound"), Some(Verdict::False));
        assert_eq!(rep.get("conjugate"), Some(Verdict::True));
    }

    #[test]
    fn search_examples() {
        let f = FreeGroup::of_rank(2);
        let b = Budget::default();
        assert!(search_genus(&w("abAB"), HalfInt::ONE, true, &f, &b).is_found());
        assert!(search_genus(&w("aa"), HalfInt::HALF, false, &f, &b).is_found());
        assert_eq!(search_genus(&w("aa"), HalfInt::ONE, true, &f, &b), Search::NotFound);
        let long = w("aaaaaabAAAAAAB");
        match search_genus(&long, HalfInt::ONE, true, &f, &b) {
            Search::Found(c @ GenusCertificate::Extended { .. }) => assert!(verify_certificate(&long, &c, &f).holds()),
            other => panic!("{other:?}"),
        }
    }
}
