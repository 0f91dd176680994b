//! `quadword`: command-line front end.
//!
//! Exit status: 0 when the question was answered, 2 when a search budget
//! ran out before an answer was found, 1 on usage or input errors.

mod group;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quadword::detect::{
    brute_force_genus, genus_minus_free, genus_plus_free, is_commutator_free, is_commutator_oracle,
    is_square_oracle, is_two_squares_free, search_genus, verify_certificate, Budget, GenusCertificate, Search,
    Verdict,
};
use quadword::extension::{
    check_joint_extension, extension_length, hamiltonian_label, Extension, ExtensionSpec,
};
use quadword::oracle::GroupOracle;
use quadword::quadratic::{is_orientable, signature, specialisations};
use quadword::surface::{build_graph, incidence_data, vertex_link};
use quadword::wicks::{max_length, wicks_forms};
use quadword::words::{cyclic_normal_form, Letter};
use quadword::{HalfInt, QuadraticWord, Word};

#[derive(Parser)]
#[command(name = "quadword", version, about = "Quadratic words, Wicks forms and genus over free and finite groups")]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Group backend: `free:a,b` or `file:PATH` (JSON permutations or table).
    /// Defaults to the free group on the letters of the input.
    #[arg(long, global = true, value_name = "SPEC")]
    group: Option<String>,
    /// Largest ball radius enumerated for free variables.
    #[arg(long, global = true, default_value_t = 3)]
    max_ball: usize,
    /// Largest conjugator length tried.
    #[arg(long, global = true, default_value_t = 12)]
    max_len: usize,
    /// Total number of candidates evaluated by a search.
    #[arg(long, global = true, default_value_t = 20_000_000)]
    max_steps: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Free and cyclic reduction of a word.
    Reduce { word: Word },
    /// Conjugacy of two words in the group.
    Conjugate { u: Word, v: Word },
    /// Signature, orientability, genus and vertex link tables of a quadratic word.
    Info {
        word: Word,
        /// Vertex whose link is read from `--start`.
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        /// Edge-end to start the link at, e.g. `A`.
        #[arg(long, value_parser = parse_letter)]
        start: Option<Letter>,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        orientation: i8,
    },
    /// Wicks forms of a given genus, one canonical word per line.
    Wicks {
        #[arg(long)]
        genus: HalfInt,
        #[arg(long, conflicts_with = "non_orientable")]
        orientable: bool,
        #[arg(long)]
        non_orientable: bool,
        /// Only forms up to this length.
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Specialisations of a quadratic word (proper deletions of its letters).
    Specialise { word: Word },
    /// Builds an extension from a JSON spec.
    Extend {
        #[arg(long)]
        spec: PathBuf,
        /// Validate the labelling and the joint extensions.
        #[arg(long)]
        check: bool,
    },
    /// Decides whether a word is a commutator, a square or a product of two squares.
    Detect { kind: Kind, word: Word },
    /// Least genus of a word, up to `--max`.
    Genus {
        word: Word,
        #[arg(long)]
        max: HalfInt,
        #[arg(long)]
        orientable: bool,
        /// Also print a certificate for the genus found.
        #[arg(long)]
        emit_cert: bool,
    },
    /// Checks a genus certificate for a word.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        word: Word,
    },
    /// Constants of the group backend and a cross-check of the commutator
    /// and square searches against exhaustive answers.
    OracleTest {
        /// Genus at which constants are reported.
        #[arg(long, default_value = "1")]
        genus: HalfInt,
        /// Length of the words checked on free backends.
        #[arg(long, default_value_t = 6)]
        words: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Commutator,
    Square,
    TwoSquares,
}

struct Output {
    text: String,
    json: Value,
    indeterminate: bool,
}

impl Output {
    fn answered(text: String, json: Value) -> Output {
        Output { text, json, indeterminate: false }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap reports usage errors with status 2, which here means "indeterminate"
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serialisable output"));
            } else {
                print!("{}", out.text);
            }
            if out.indeterminate {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let budget = Budget {
        max_ball: cli.max_ball,
        max_len: cli.max_len,
        max_steps: cli.max_steps,
    };
    let oracle = |words: &[&Word]| group::load(cli.group.as_deref(), words);
    match &cli.cmd {
        Cmd::Reduce { word } => reduce(word, cli.group.is_some().then(|| oracle(&[word])).transpose()?),
        Cmd::Conjugate { u, v } => conjugate(u, v, oracle(&[u, v])?.as_ref()),
        Cmd::Info { word, vertex, start, orientation } => info(word, *vertex, *start, *orientation),
        Cmd::Wicks { genus, orientable, non_orientable: _, max_length } => wicks(*genus, *orientable, *max_length),
        Cmd::Specialise { word } => specialise(word),
        Cmd::Extend { spec, check } => extend(spec, *check, cli.group.as_deref(), &budget),
        Cmd::Detect { kind, word } => detect(*kind, word, cli.group.is_some(), oracle(&[word])?.as_ref(), &budget),
        Cmd::Genus { word, max, orientable, emit_cert } => {
            genus(word, *max, *orientable, *emit_cert, oracle(&[word])?.as_ref(), &budget)
        }
        Cmd::Verify { cert, word } => verify(cert, word, oracle(&[word])?.as_ref()),
        Cmd::OracleTest { genus, words } => oracle_test(*genus, *words, oracle(&[])?.as_ref(), &budget),
    }
}

fn reduce(w: &Word, o: Option<Box<dyn GroupOracle>>) -> Result<Output> {
    let r = w.free_reduce();
    let (conj, core) = r.cyclic_reduce();
    let cnf = cyclic_normal_form(w);
    let mut text = format!("reduced: {r}\ncore: {core}\nconjugator: {conj}\ncyclic normal form: {cnf}\n");
    let mut json = json!({ "reduced": r, "core": core, "conjugator": conj, "cyclic_normal_form": cnf.word() });
    if let Some(o) = o {
        let m = o.minimal_word(w);
        writeln!(text, "minimal in {}: {m}", o.name())?;
        json["minimal"] = json!(m);
    }
    Ok(Output::answered(text, json))
}

fn conjugate(u: &Word, v: &Word, o: &dyn GroupOracle) -> Result<Output> {
    Ok(match o.are_conjugate(u, v) {
        Some(w) => Output::answered(
            format!("conjugate: yes\nconjugator: {w}\n"),
            json!({ "conjugate": true, "conjugator": w }),
        ),
        None => Output::answered("conjugate: no\n".into(), json!({ "conjugate": false })),
    })
}

fn quadratic(w: &Word) -> Result<QuadraticWord> {
    QuadraticWord::new(w.clone()).with_context(|| format!("{w} is not quadratic"))
}

fn info(w: &Word, vertex: usize, start: Option<Letter>, orientation: i8) -> Result<Output> {
    let q = quadratic(w)?;
    let g = build_graph(&q)?;
    let sig = signature(&q);
    let mut text = format!("word: {w}\n");
    let mut sig_json = serde_json::Map::new();
    for (s, (e1, e2)) in sig.iter() {
        let o = sig.orientation(s).unwrap();
        writeln!(text, "sigma({s}) = ({e1}, {e2}), o({s}) = {o}")?;
        sig_json.insert(s.to_string(), json!({ "signature": [e1, e2], "orientation": o }));
    }
    let orientable = is_orientable(&q);
    writeln!(
        text,
        "orientable: {orientable}\nvertices: {}\nedges: {}\ngenus: {}",
        g.num_vertices(),
        g.num_edges(),
        g.genus()
    )?;
    let mut links = g.links();
    if start.is_some() || orientation != 1 {
        if vertex >= links.len() {
            bail!("no vertex {vertex}");
        }
        let s = start.unwrap_or(links[vertex].start);
        links[vertex] = vertex_link(&g, vertex, orientation, s)?;
    }
    let mut links_json = Vec::new();
    for link in &links {
        let d = incidence_data(&g, link);
        let q: Vec<String> = (1..=link.degree()).map(|i| i.to_string()).collect();
        let e: Vec<String> = link.ends.iter().map(|l| l.symbol().to_string()).collect();
        let eps: Vec<String> = link.ends.iter().map(|l| l.exponent().to_string()).collect();
        let rows: [(&str, Vec<String>); 9] = [
            ("q", q),
            ("e_q", e),
            ("eps_q", eps),
            ("o(e_q)", strs(&d.o)),
            ("O_q", strs(&d.big_o)),
            ("mu_q", strs(&d.mu)),
            ("nu_q", strs(&d.nu)),
            ("l_q", strs(&d.l)),
            ("r_q", strs(&d.r)),
        ];
        let ends: Vec<String> = link.ends.iter().map(|l| l.to_string()).collect();
        writeln!(
            text,
            "\nvertex {} (degree {}, start {}, orientation {}): {}",
            link.vertex,
            link.degree(),
            link.start,
            link.orientation,
            ends.join(" ")
        )?;
        let width = rows.iter().flat_map(|(_, r)| r.iter().map(|c| c.len())).max().unwrap_or(1) + 1;
        for (name, row) in &rows {
            write!(text, "{name:>7} |")?;
            for c in row {
                write!(text, "{c:>width$}")?;
            }
            text.push('\n');
        }
        links_json.push(json!({
            "vertex": link.vertex,
            "start": link.start,
            "orientation": link.orientation,
            "ends": link.ends,
            "e": link.ends.iter().map(|l| l.symbol()).collect::<Vec<_>>(),
            "eps": link.ends.iter().map(|l| l.exponent()).collect::<Vec<_>>(),
            "o": d.o,
            "O": d.big_o,
            "mu": d.mu,
            "nu": d.nu,
            "l": d.l,
            "r": d.r,
        }));
    }
    let json = json!({
        "word": w,
        "signature": sig_json,
        "orientable": orientable,
        "vertices": g.num_vertices(),
        "edges": g.num_edges(),
        "genus": g.genus(),
        "links": links_json,
    });
    Ok(Output::answered(text, json))
}

fn parse_letter(s: &str) -> Result<Letter> {
    let w: Word = s.parse()?;
    match w.letters() {
        [l] => Ok(*l),
        _ => bail!("expected a single edge-end, got {s:?}"),
    }
}

fn strs<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn orient_name(orientable: bool) -> &'static str {
    if orientable {
        "orientable"
    } else {
        "non-orientable"
    }
}

fn wicks(n: HalfInt, orientable: bool, max_len: Option<usize>) -> Result<Output> {
    let forms = wicks_forms(n, orientable, max_len.unwrap_or_else(|| max_length(n)))?;
    let mut text = String::new();
    for f in forms.iter() {
        writeln!(text, "{}", f.word)?;
    }
    eprintln!("{} Wicks form(s) of genus {n}, {}", forms.len(), orient_name(orientable));
    let words: Vec<&Word> = forms.iter().map(|f| f.word.word()).collect();
    let json = json!({ "genus": n, "orientable": orientable, "count": forms.len(), "forms": words });
    Ok(Output::answered(text, json))
}

fn specialise(w: &Word) -> Result<Output> {
    let q = quadratic(w)?;
    if q.symbols().len() > 20 {
        bail!("support of {w} too large to enumerate specialisations");
    }
    let specs = specialisations(&q);
    let mut text = String::new();
    for s in &specs {
        writeln!(text, "{s}")?;
    }
    let words: Vec<&Word> = specs.iter().map(|s| s.word()).collect();
    Ok(Output::answered(text, json!({ "word": w, "count": specs.len(), "specialisations": words })))
}

fn extend(path: &PathBuf, check: bool, group: Option<&str>, budget: &Budget) -> Result<Output> {
    let raw = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let spec: ExtensionSpec = serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))?;
    let ext = Extension::from_spec(&spec)?;
    let u2 = ext.graph.doubled().hamiltonian().clone();
    let h = hamiltonian_label(&ext)?;
    let len = extension_length(&ext)?;
    let mut text = format!(
        "base word: {}\ndoubled word: {u2}\ngenus: {}\norientable: {}\nextension length: {len}\nlabel: {h}\n",
        spec.base_word,
        ext.genus(),
        ext.is_orientable()
    );
    let mut cycles = serde_json::Map::new();
    for v in 0..ext.graph.num_vertices() {
        let c = ext.graph.cycle(v);
        writeln!(text, "cycle {v}: {c}")?;
        cycles.insert(v.to_string(), json!(c));
    }
    let mut json = json!({
        "base_word": spec.base_word,
        "doubled_word": u2,
        "genus": ext.genus(),
        "orientable": ext.is_orientable(),
        "extension_length": len,
        "label": h,
        "cycles": cycles,
    });
    let mut indeterminate = false;
    if check {
        let mut words: Vec<&Word> = spec.labelling.values().collect();
        words.push(&h);
        let o = group::load(group, &words)?;
        let report = ext.validate(o.as_ref())?;
        writeln!(text, "labelling valid: {}", report.is_valid())?;
        for s in &report.not_minimal {
            writeln!(text, "  label of {s} is not minimal")?;
        }
        for s in &report.broken_relations {
            writeln!(text, "  relation for {s} fails")?;
        }
        if !report.cyclically_reduced {
            writeln!(text, "  doubled word label is not cyclically reduced")?;
        }
        let mut overall = Verdict::from_bool(report.is_valid());
        let mut joints = Vec::new();
        for class in &ext.partition {
            let v = check_joint_extension(&ext, &class.vertices, o.as_ref(), budget)?;
            overall = overall.and(v);
            writeln!(
                text,
                "joint extension {:?} genus {} {}: {}",
                class.vertices,
                class.genus,
                orient_name(class.orientable),
                verdict_str(v)
            )?;
            joints.push(json!({ "vertices": class.vertices, "genus": class.genus, "verdict": v }));
        }
        writeln!(text, "verdict: {}", verdict_str(overall))?;
        indeterminate = overall == Verdict::Indeterminate;
        json["labelling"] = serde_json::to_value(&report)?;
        json["joint_extensions"] = json!(joints);
        json["verdict"] = json!(overall);
    }
    Ok(Output { text, json, indeterminate })
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "true",
        Verdict::False => "false",
        Verdict::Indeterminate => "indeterminate",
    }
}

fn search_output<T: serde::Serialize>(what: &str, s: Search<T>) -> Result<Output> {
    Ok(match s {
        Search::Found(w) => {
            let v = serde_json::to_value(&w)?;
            let mut text = format!("{what}: yes\n");
            if let Value::Object(m) = &v {
                for (k, x) in m {
                    writeln!(text, "{k} = {}", x.as_str().map(str::to_string).unwrap_or_else(|| x.to_string()))?;
                }
            }
            Output::answered(text, json!({ "answer": true, "witness": v }))
        }
        Search::NotFound => Output::answered(format!("{what}: no\n"), json!({ "answer": false })),
        Search::Indeterminate => Output {
            text: format!("{what}: indeterminate (budget exhausted)\n"),
            json: json!({ "answer": null }),
            indeterminate: true,
        },
    })
}

fn pair_output(what: &str, w: Option<(Word, Word)>) -> Output {
    match w {
        Some((a, b)) => Output::answered(
            format!("{what}: yes\na = {a}\nb = {b}\n"),
            json!({ "answer": true, "witness": { "a": a, "b": b } }),
        ),
        None => Output::answered(format!("{what}: no\n"), json!({ "answer": false })),
    }
}

fn detect(kind: Kind, w: &Word, explicit_group: bool, o: &dyn GroupOracle, budget: &Budget) -> Result<Output> {
    let h = o.minimal_word(w);
    match kind {
        Kind::Commutator if o.is_free() && !explicit_group => Ok(pair_output("commutator", is_commutator_free(&h))),
        Kind::Commutator => search_output("commutator", is_commutator_oracle(&h, o, budget)),
        Kind::Square => search_output("square", is_square_oracle(&h, o, budget)),
        Kind::TwoSquares if o.is_free() => Ok(pair_output("product of two squares", is_two_squares_free(&h))),
        Kind::TwoSquares => {
            let v = brute_force_genus(&h, HalfInt::ONE, false, diameter(o)?, o);
            Ok(Output {
                text: format!("product of two squares: {}\n", verdict_str(v)),
                json: json!({ "answer": v }),
                indeterminate: v == Verdict::Indeterminate,
            })
        }
    }
}

fn diameter(o: &dyn GroupOracle) -> Result<usize> {
    let Some(order) = o.order() else {
        bail!("{} is neither free nor finite", o.name());
    };
    Ok((0..).find(|&k| o.ball_size(k) >= order).unwrap())
}

fn genus(
    w: &Word,
    max: HalfInt,
    orientable: bool,
    emit_cert: bool,
    o: &dyn GroupOracle,
    budget: &Budget,
) -> Result<Output> {
    if orientable && !max.is_integer() {
        bail!("orientable genus bound must be an integer");
    }
    if max < HalfInt::ZERO {
        bail!("genus bound must be non-negative");
    }
    let h = o.minimal_word(w);
    let mut indeterminate = false;
    let found = if o.is_free() {
        if orientable {
            genus_plus_free(&h, max.to_int().unwrap() as usize).map(|k| HalfInt::from_int(k as i64))
        } else {
            genus_minus_free(&h, max)
        }
    } else {
        let l = diameter(o)?;
        let step = if orientable { 2 } else { 1 };
        let mut found = None;
        for t in (0..=max.twice()).step_by(step) {
            let n = HalfInt::from_twice(t);
            match brute_force_genus(&h, n, orientable, l, o) {
                Verdict::True => {
                    found = Some(n);
                    break;
                }
                Verdict::False => {}
                Verdict::Indeterminate => {
                    indeterminate = true;
                    break;
                }
            }
        }
        found
    };
    let kind = orient_name(orientable);
    let mut text = match (found, indeterminate) {
        (Some(n), _) => format!("{kind} genus: {n}\n"),
        (None, true) => format!("{kind} genus: indeterminate\n"),
        (None, false) => format!("{kind} genus: greater than {max}\n"),
    };
    let mut json = json!({ "word": w, "orientable": orientable, "max": max, "genus": found });
    if emit_cert {
        if let Some(n) = found.filter(|n| *n > HalfInt::ZERO) {
            match search_genus(&h, n, orientable, o, budget) {
                Search::Found(c) => {
                    writeln!(text, "{}", serde_json::to_string_pretty(&c)?)?;
                    json["certificate"] = serde_json::to_value(&c)?;
                }
                Search::NotFound => writeln!(text, "no certificate found")?,
                Search::Indeterminate => writeln!(text, "certificate search exhausted its budget")?,
            }
        }
    }
    Ok(Output { text, json, indeterminate })
}

fn verify(path: &PathBuf, w: &Word, o: &dyn GroupOracle) -> Result<Output> {
    let raw = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let cert: GenusCertificate = serde_json::from_str(&raw).with_context(|| format!("parsing {}", path.display()))?;
    let report = verify_certificate(w, &cert, o);
    let mut text = String::new();
    for c in &report.checks {
        write!(text, "{}: {}", c.name, verdict_str(c.verdict))?;
        if !c.detail.is_empty() {
            write!(text, " ({})", c.detail)?;
        }
        text.push('\n');
    }
    let v = report.verdict();
    writeln!(text, "verdict: {}", verdict_str(v))?;
    Ok(Output {
        text,
        json: json!({ "verdict": v, "checks": report.checks }),
        indeterminate: v == Verdict::Indeterminate,
    })
}

fn oracle_test(n: HalfInt, len: usize, o: &dyn GroupOracle, budget: &Budget) -> Result<Output> {
    let c = o.constants(n);
    let mut text = format!(
        "group: {}\norder: {}\ndelta: {}\nM: {}\nK({n}): {}\nl({n}): {}\nform bound: {}\n",
        o.name(),
        o.order().map_or("infinite".into(), |k| k.to_string()),
        c.delta,
        c.m,
        c.k,
        c.l,
        c.form_bound()
    );
    let (mut checked, mut disagree, mut undecided) = (0usize, Vec::new(), 0usize);
    if let Some(g) = o.as_finite() {
        let order = g.order();
        for x in 0..order {
            let h = g.word_of(x).clone();
            let comm = (0..order).any(|y| (0..order).any(|z| g.commutator(y, z) == x));
            let sq = (0..order).any(|y| g.mul(y, y) == x);
            for (got, want, what) in [
                (is_commutator_oracle(&h, o, budget).verdict(), comm, "commutator"),
                (is_square_oracle(&h, o, budget).verdict(), sq, "square"),
            ] {
                checked += 1;
                match got {
                    Verdict::Indeterminate => undecided += 1,
                    v if v.is_true() != want => disagree.push(format!("{what} {h}")),
                    _ => {}
                }
            }
        }
    } else if o.is_free() {
        for h in cyclically_reduced_words(o, len) {
            checked += 1;
            match is_commutator_oracle(&h, o, budget).verdict() {
                Verdict::Indeterminate => undecided += 1,
                v if v.is_true() != is_commutator_free(&h).is_some() => disagree.push(format!("commutator {h}")),
                _ => {}
            }
        }
    }
    writeln!(text, "checked: {checked}\nindeterminate: {undecided}\ndisagreements: {}", disagree.len())?;
    for d in &disagree {
        writeln!(text, "  {d}")?;
    }
    let json = json!({
        "group": o.name(),
        "order": o.order(),
        "constants": c,
        "form_bound": c.form_bound(),
        "checked": checked,
        "indeterminate": undecided,
        "disagreements": disagree,
    });
    Ok(Output { text, json, indeterminate: undecided > 0 })
}

fn cyclically_reduced_words(o: &dyn GroupOracle, max_len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = o.generators().iter().flat_map(|g| [g.pos(), g.neg()]).collect();
    let mut out = Vec::new();
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.last().is_some_and(|p| p.is_inverse_of(l)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| Word::new(v.clone())).filter(|w| w.is_cyclically_reduced()));
        layer = next;
    }
    out
}
