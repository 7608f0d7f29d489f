//! The subcommands, each turning parsed input into a [`Report`].

use nilquandle::group_model::{build, emit_presentation, GroupData, PresentationData};
use nilquandle::lie_trace::{non_tame_witness, trace as lie_trace};
use nilquandle::magnus::{embed_word_with, free_2nilp_check, qd, quandle_elt_with, Limits};
use nilquandle::nilpotency::{analyze as analyze_rack, AnalyzeOptions};
use nilquandle::two_nilpotent::{
    build_quandle, canonical_parameters, enveloping_extension, extract_data, injectivity_witness,
    CentralExtensionData, LMParameters,
};
use nilquandle::welded::{format_letters, gamma_c_acts_trivially, BasisConjAuto, Mode};
use nilquandle::{FiniteRack, TwoNilpotentData, Word};
use num_bigint::BigInt;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::report::{Report, Value};
use crate::{CliError, CliResult};

/// Every field of the nilpotency report, plus a witness when `Q` is not
/// reduced.
pub fn analyze(name: &str, q: &FiniteRack, cap: usize) -> CliResult<Report> {
    let r = analyze_rack(
        q,
        AnalyzeOptions {
            cap,
            ..AnalyzeOptions::default()
        },
    )?;
    let mut rep = Report::new(format!("analyze {name}"));
    rep.field("axioms", "axioms", Value::text(if r.is_quandle { "quandle" } else { "rack" }))
        .field("size", "elements", Value::text(r.size))
        .field("is_quandle", "quandle", Value::Bool(r.is_quandle))
        .field("orbit_sizes", "orbit sizes", Value::list(&r.orbit_sizes))
        .field("inn_order", "|Inn|", Value::text(r.inn_order))
        .field("inn_class", "Inn class", Value::opt(r.inn_class))
        .field("quandle_class", "nilpotency class", Value::opt(r.quandle_class))
        .field("reductive_class", "reductive class", Value::opt(r.reductive_class))
        .field("weak_class", "weak class", Value::opt(r.weak_class))
        .field("residually_nilpotent", "residually nilpotent", Value::Bool(r.residually_nilpotent))
        .field("is_reduced", "reduced", Value::Bool(r.is_reduced))
        .field(
            "reduced_witness",
            "reduced witness",
            Value::opt(q.reduced_witness().map(|(y, x)| format!("{y} {x}"))),
        )
        .field("covering_chain_lengths", "covering chain", Value::list(&r.covering_chain_lengths));
    Ok(rep)
}

/// A constructed table, comments describing it and a summary report.
pub struct Constructed {
    pub rack: FiniteRack,
    pub comments: Vec<String>,
    pub report: Report,
}

fn orbit_comments(labels: &[usize]) -> Vec<String> {
    let k = labels.iter().max().map_or(0, |m| m + 1);
    (0..k)
        .map(|o| {
            let elems: Vec<String> = (0..labels.len())
                .filter(|&x| labels[x] == o)
                .map(|x| x.to_string())
                .collect();
            format!("orbit {o}: {}", elems.join(" "))
        })
        .collect()
}

fn constructed(command: String, rack: FiniteRack, labels: &[usize], extra: Vec<String>) -> Constructed {
    let mut comments = vec![command.clone()];
    comments.extend(orbit_comments(labels));
    comments.extend(extra);
    let mut report = Report::new(command);
    report
        .field("size", "elements", Value::text(rack.len()))
        .field("is_quandle", "quandle", Value::Bool(rack.is_quandle()))
        .field("orbit_of", "orbit of each element", Value::list(labels));
    Constructed {
        rack,
        comments,
        report,
    }
}

pub fn construct_qmn(m: u64, n: u64, cap: usize) -> CliResult<Constructed> {
    if m == 0 || n == 0 {
        return Err(CliError::Usage("Q_{m,n} needs m, n >= 1".into()));
    }
    let b = build_quandle(&TwoNilpotentData::q_mn(m, n), cap)?;
    Ok(constructed(format!("construct qmn {m} {n}"), b.rack, &b.orbit_of, vec![]))
}

fn parameter_lines(p: &LMParameters) -> Vec<String> {
    p.orbits
        .iter()
        .enumerate()
        .map(|(i, o)| {
            let m: Vec<String> = o.m.iter().map(ToString::to_string).collect();
            let mkl: Vec<String> = o
                .m_kl
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, row)| {
                    let r: Vec<String> = row.iter().map(ToString::to_string).collect();
                    format!("k={}: {}", k + 1, r.join(" "))
                })
                .collect();
            let tail = if mkl.is_empty() { String::new() } else { format!("; m_kl {}", mkl.join(", ")) };
            format!("orbit {i}: m = {}{tail}", m.join(" "))
        })
        .collect()
}

pub fn construct_two_nilpotent(name: &str, d: &TwoNilpotentData, cap: usize) -> CliResult<Constructed> {
    let b = build_quandle(d, cap)?;
    let params = parameter_lines(&canonical_parameters(d));
    let comments = params.iter().map(|l| format!("parameters {l}")).collect();
    let mut c = constructed(format!("construct two-nilp {name}"), b.rack, &b.orbit_of, comments);
    c.report.field("parameters", "parameters", Value::Text(params.join("\n")));
    Ok(c)
}

pub fn construct_coset(name: &str, d: &GroupData, rack_mode: bool) -> CliResult<Constructed> {
    let r = build(d, rack_mode)?;
    let labels: Vec<usize> = r.cosets.iter().map(|&(i, _)| i).collect();
    let cosets: Vec<String> = r.cosets.iter().map(|&(i, x)| format!("{x}H{}", i + 1)).collect();
    let mut c = constructed(
        format!("construct coset {name}"),
        r.rack,
        &labels,
        vec![format!("cosets: {}", cosets.join(" "))],
    );
    c.report.field("cosets", "cosets", Value::list(cosets));
    Ok(c)
}

fn extension_fields(rep: &mut Report, e: &CentralExtensionData) {
    rep.field("free_rank", "quotient rank", Value::text(e.free_rank))
        .field("kernel_rank", "kernel free rank", Value::text(e.kernel_rank))
        .field("torsion", "kernel torsion", Value::list(&e.torsion))
        .field("abelian", "abelian", Value::Bool(e.is_abelian()));
}

fn injectivity_fields(rep: &mut Report, d: &TwoNilpotentData, cap: usize) -> CliResult<()> {
    match injectivity_witness(d, cap) {
        Ok(w) => {
            rep.field("injective", "injective", Value::Bool(w.is_none())).field(
                "injectivity_witness",
                "collapsed coset",
                Value::opt(w.map(|(i, g)| {
                    let g: Vec<String> = g.iter().map(ToString::to_string).collect();
                    format!("orbit {i} shift {}", g.join(" "))
                })),
            );
        }
        Err(nilquandle::Error::InfiniteOrbit { .. }) => {
            rep.field("injective", "injective", Value::Absent);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

/// Enveloping group of a quandle: the presentation, its abelianization and,
/// for two-nilpotent quandles, the central extension.
pub fn envelope_quandle(name: &str, q: &FiniteRack, cap: usize) -> CliResult<(Report, Option<PresentationData>)> {
    let mut rep = Report::new(format!("envelope {name}"));
    rep.field("size", "elements", Value::text(q.len()))
        .field("orbit_sizes", "orbit sizes", Value::list(q.orbits().class_sizes()));
    let presentation = match emit_presentation(q) {
        Ok(p) => {
            let (rank, torsion) = p.abelianization();
            rep.field("presentation_generators", "generators (elements)", Value::list(&p.generators))
                .field("presentation_relators", "relators", Value::text(p.relators.len()))
                .field("abelianization_rank", "abelianization rank", Value::text(rank))
                .field("abelianization_torsion", "abelianization torsion", Value::list(&torsion));
            Some(p)
        }
        Err(nilquandle::Error::NotGeneratedByTransversal) => {
            rep.field("presentation_generators", "generators (elements)", Value::Absent)
                .note("orbit representatives do not generate the quandle; no presentation emitted");
            None
        }
        Err(e) => return Err(e.into()),
    };
    match extract_data(q) {
        Ok(d) => {
            rep.field("two_nilpotent", "2-nilpotent", Value::Bool(true));
            extension_fields(&mut rep, &enveloping_extension(&d));
            injectivity_fields(&mut rep, &d, cap)?;
        }
        Err(nilquandle::Error::NotTwoNilpotent(..)) => {
            rep.field("two_nilpotent", "2-nilpotent", Value::Bool(false));
        }
        Err(e) => return Err(e.into()),
    }
    Ok((rep, presentation))
}

/// Enveloping central extension of two-nilpotent lattice data.
pub fn envelope_data(name: &str, d: &TwoNilpotentData, cap: usize) -> CliResult<Report> {
    let mut rep = Report::new(format!("envelope {name}"));
    rep.field(
        "orbit_sizes",
        "orbit sizes",
        Value::list(d.orbit_sizes().iter().map(|s| s.as_ref().map_or("inf".into(), ToString::to_string))),
    );
    extension_fields(&mut rep, &enveloping_extension(d));
    injectivity_fields(&mut rep, d, cap)?;
    rep.field(
        "parameters",
        "parameters",
        Value::Text(parameter_lines(&canonical_parameters(d)).join("\n")),
    );
    Ok(rep)
}

fn tuple_text(t: &[usize]) -> String {
    t.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Action of a braid word on a colouring. The strand count is the tuple length.
pub fn braid(name: &str, q: &FiniteRack, word: &str, tuple: &[usize]) -> CliResult<Report> {
    let beta = BasisConjAuto::parse(tuple.len(), word)?;
    let image = beta.act(q, tuple)?;
    let mut rep = Report::new(format!("braid {name} {word:?}"));
    rep.field("strands", "strands", Value::text(tuple.len()))
        .field("automorphism", "automorphism", Value::text(&beta))
        .field("tuple", "colouring", Value::text(tuple_text(tuple)))
        .field("image", "image", Value::text(tuple_text(&image)));
    Ok(rep)
}

/// Whether `Γ_c` of the pure welded braid group acts trivially on colourings.
pub fn gamma(
    name: &str,
    q: &FiniteRack,
    strands: usize,
    c: usize,
    mode: Mode,
    budget: u64,
    seed: u64,
) -> CliResult<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = gamma_c_acts_trivially(q, strands, c, mode, budget, &mut rng)?;
    let mut rep = Report::new(format!("gamma {name} c={c} n={strands}"));
    rep.field("mode", "mode", Value::text(if mode == Mode::Exhaustive { "exhaustive" } else { "sample" }))
        .field("trivial", "acts trivially", Value::Bool(r.trivial))
        .field("patterns_checked", "patterns checked", Value::text(r.patterns_checked))
        .field("tuples_checked", "tuples checked", Value::text(r.tuples_checked));
    match r.witness {
        Some(w) => {
            rep.field("witness_pattern", "witness commutator", Value::text(format_letters(&w.pattern)))
                .field("witness_tuple", "witness colouring", Value::text(tuple_text(&w.tuple)))
                .field("witness_image", "witness image", Value::text(tuple_text(&w.image)));
        }
        None => {
            rep.field("witness_pattern", "witness commutator", Value::Absent);
        }
    }
    Ok(rep)
}

/// The rotation of a single-necklace trace that ends with the first letter,
/// written as a plain word.
fn trace_word(t: &nilquandle::lie_trace::CyclicWord) -> Option<String> {
    if t.terms().len() != 1 {
        return None;
    }
    let (w, c) = t.terms().iter().next()?;
    if *c != BigInt::from(1) {
        return None;
    }
    let mut r = w[1..].to_vec();
    r.push(w[0]);
    Some(r.iter().map(|&l| char::from(b'A' + l)).collect())
}

/// A derivation with nonzero trace, certifying a non-tame automorphism of
/// the free `c`-nilpotent quandle on `n` generators.
pub fn trace(n: usize, c: usize) -> CliResult<Report> {
    if n > 26 {
        return Err(CliError::Usage("at most 26 generators".into()));
    }
    let (d, t) = non_tame_witness(n, c)?;
    debug_assert_eq!(lie_trace(&d), t);
    let mut rep = Report::new(format!("trace --n {n} --c {c}"));
    let images: Vec<String> = (0..n).map(|i| format!("X{} -> {}", i + 1, d.image(i))).collect();
    rep.field("derivation_degree", "derivation degree", Value::text(d.degree()))
        .field("derivation", "derivation", Value::Text(images.join("\n")))
        .field("trace", "trace", Value::text(&t))
        .field("trace_word", "trace as a word", Value::opt(trace_word(&t)))
        .field("nonzero", "nonzero", Value::Bool(!t.is_zero()));
    if t.is_zero() {
        rep.note("trace = 0");
    } else {
        let shown = trace_word(&t).map_or(t.to_string(), |w| format!("[{w}]"));
        rep.note(format!(
            "trace = {shown}, nonzero: non-tame automorphisms exist (canonical necklace {t})"
        ));
    }
    Ok(rep)
}

/// Options for [`freenilp`].
pub struct FreeNilpRequest<'a> {
    pub n: usize,
    pub c: usize,
    pub word: &'a str,
    /// 1-based.
    pub gen: usize,
    pub other: Option<(&'a str, usize)>,
    pub q00_depth: Option<usize>,
    pub allow_large: bool,
}

fn parse_word(s: &str) -> CliResult<Word> {
    s.parse::<Word>().map_err(|e| CliError::Usage(e.to_string()))
}

/// Magnus expansion of a word and checks on the quandle element `w x_gen w⁻¹`.
pub fn freenilp(req: &FreeNilpRequest<'_>) -> CliResult<Report> {
    let limits = if req.allow_large { Limits::unbounded() } else { Limits::default() };
    let (n, c) = (req.n, req.c);
    if req.gen == 0 {
        return Err(CliError::Usage("generators are numbered from 1".into()));
    }
    let w = parse_word(req.word)?;
    let expansion = embed_word_with(&w, n, c, limits)?;
    let a = quandle_elt_with(&w, req.gen - 1, n, c, limits)?;
    let mut rep = Report::new(format!("freenilp n={n} c={c}"));
    rep.field("word", "word", Value::text(&w))
        .field("expansion", "expansion", Value::text(&expansion))
        .field("gamma_weight", "lower central weight", Value::text(expansion.gamma_weight()))
        .field("element", "element", Value::text(&a))
        .field("element_expansion", "element expansion", Value::text(a.element_poly()))
        .field("idempotent", "a ▷ a = a", Value::Bool(qd(&a, &a)? == a))
        .field("leading_term", "leading term is the generator", Value::Bool(a.has_generator_leading_term()));
    if let Some((ow, og)) = req.other {
        if og == 0 {
            return Err(CliError::Usage("generators are numbered from 1".into()));
        }
        let b = quandle_elt_with(&parse_word(ow)?, og - 1, n, c, limits)?;
        let ab = qd(&a, &b)?;
        rep.field("other", "other element", Value::text(&b))
            .field("equal", "equal", Value::Bool(a == b))
            .field("product", "a ▷ b", Value::text(&ab))
            .field("product_expansion", "a ▷ b expansion", Value::text(ab.element_poly()));
    }
    if let Some(depth) = req.q00_depth {
        let chk = free_2nilp_check(depth);
        rep.field("q00_holds", "free 2-nilpotent = Q_{0,0}", Value::Bool(chk.holds))
            .field("q00_coordinates_x1", "coordinates of x1 conjugates", Value::list(&chk.coordinates[0]))
            .field("q00_coordinates_x2", "coordinates of x2 conjugates", Value::list(&chk.coordinates[1]));
    }
    Ok(rep)
}
