//! Acceptance criteria, one line each. All comparisons are exact.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dcat_core::adjunction::*;
use dcat_core::doublecat::*;
use dcat_core::freeggd::*;
use dcat_core::presentations::corpus::*;
use dcat_core::presentations::*;
use dcat_core::projection::*;

const SEED: u64 = 0;

type Criterion = (&'static str, fn() -> Outcome, Duration);

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn group_pair(g: usize, a: usize, which: usize) -> ProjectionContext {
    ProjectionContext::new(&group_case(g, a), &group_internalization(g, a, which).unwrap()).unwrap()
}

fn contexts() -> Vec<(&'static str, ProjectionContext)> {
    pairs().into_iter().map(|p| (p.name, ProjectionContext::new(&p.base, &p.target).unwrap())).collect()
}

fn axiom_suites() -> Outcome {
    let corpus = presentations();
    let invalid: Vec<&str> = corpus.iter().filter(|(_, p)| !p.validate().is_valid()).map(|(n, _)| n.as_str()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut tried, mut caught, mut i) = (0, 0, 0);
    let mut missed = Vec::new();
    while tried < 50 {
        let (name, p) = &corpus[i % corpus.len()];
        i += 1;
        let Some((m, what)) = mutation::mutate(p, &mut rng) else { continue };
        tried += 1;
        if m.validate().is_valid() {
            missed.push(format!("{name}: {} {} {}->{}", what.table, what.key, what.from, what.to));
        } else {
            caught += 1;
        }
    }
    ok(
        invalid.is_empty() && caught == 50,
        format!(
            "{} presentations valid, {} invalid {invalid:?}; mutations caught {caught}/{tried} {missed:?}",
            corpus.len() - invalid.len(),
            invalid.len()
        ),
    )
}

fn canonical_projection() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for (name, ctx) in contexts() {
        let (tr, u) = free_truncation(&ctx.sig, Bounds::default()).unwrap();
        let s = audit_strictness(&ctx, &u, &tr);
        let r = h_star_restriction_check(&ctx);
        let sj = audit_surjectivity(&ctx, &u, 2);
        let exact = sj.surjective_up_to >= 2 && sj.levels.iter().all(|l| l.missing.is_empty() && l.extra.is_empty());
        let un = audit_uniqueness(&ctx, &u, &ReverseFold::agreeing_with(&ctx)).unwrap();
        let equal = matches!(un, Uniqueness::Equal { .. });
        pass &= s.strict && r.holds && exact && equal;
        lines.push(format!(
            "{name} strict={} restriction={} surjective_up_to={} uniqueness={}",
            s.strict, r.holds, sj.surjective_up_to, equal
        ));
    }
    ok(pass && lines.len() >= 3, lines.join("; "))
}

fn normalize_compatibility() -> Outcome {
    let ctx = group_pair(2, 3, 0);
    let u = build_layers(&ctx.sig, Bounds::default()).unwrap();
    let r = audit_normalization(&ctx, &u);
    ok(r.mismatches.is_empty() && r.checked >= 1000, format!("{} terms, {} mismatches", r.checked, r.mismatches.len()))
}

fn length_results() -> Outcome {
    let cs = length(&commuting_squares(&arrow_category()), 8).value();
    let sig = Signature::new(&group_case(2, 3)).unwrap();
    let u6 = build_layers(&sig, Bounds { word: 6, mode: EnumerationMode::Canonical, ..Default::default() }).unwrap();
    let ev = free_length_evidence(&sig, &u6);
    let mut pass = cs == Some(1) && ev.consistent_with_length == 1 && ev.counterexample.is_none();
    let mut bounded = Vec::new();
    for p in pairs() {
        let s = Signature::new(&p.base).unwrap();
        let e = free_length_evidence(&s, &build_layers(&s, Bounds::default()).unwrap()).consistent_with_length;
        let l = length(&p.target, 8).value();
        pass &= l.is_some_and(|l| l <= e);
        bounded.push(format!("{} {l:?}<={e}", p.name));
    }
    ok(
        pass,
        format!(
            "length(cs(arrow))={cs:?}; evidence at word 6 = {} over {} terms; {}",
            ev.consistent_with_length,
            u6.len(),
            bounded.join(", ")
        ),
    )
}

/// Reduced words of Z2 ∗ Z3 as letter sequences, by direct recursion.
fn reduced_words(len: usize) -> BTreeSet<Vec<String>> {
    let g = ["g1"];
    let a = ["a1", "a2"];
    let mut all = BTreeSet::from([vec![]]);
    let mut frontier: Vec<Vec<String>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            let last_is_g = w.last().map(|x| x.starts_with('g'));
            let letters: Vec<&str> = match last_is_g {
                Some(true) => a.to_vec(),
                Some(false) => g.to_vec(),
                None => g.iter().chain(a.iter()).copied().collect(),
            };
            for l in letters {
                let mut v = w.clone();
                v.push(l.to_string());
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

fn free_product() -> Outcome {
    let sig = Signature::new(&group_case(2, 3)).unwrap();
    let (tr, _) = free_truncation(&sig, Bounds::default()).unwrap();
    let spell = |t: &SquareTerm| -> Option<Vec<String>> {
        let leaves: Vec<&SquareTerm> = match t {
            SquareTerm::V(xs) => xs.iter().collect(),
            x => vec![x],
        };
        let mut w = Vec::new();
        for l in leaves {
            match l {
                SquareTerm::Gen(Generator::Glob(p)) if sig.is_id2(*p) => {}
                SquareTerm::Gen(Generator::Glob(p)) => w.push(sig.cells2[*p as usize].clone()),
                SquareTerm::Gen(Generator::HId(f)) => w.push(sig.dmor[*f as usize].clone()),
                _ => return None,
            }
        }
        Some(w)
    };
    let reps: Vec<&Representative> = tr.reps_up_to(4).collect();
    let spelled: Vec<Option<Vec<String>>> = reps.iter().map(|r| spell(&r.term)).collect();
    let set: BTreeSet<Vec<String>> = spelled.iter().flatten().cloned().collect();
    let oracle = reduced_words(4);
    let pass = spelled.iter().all(Option::is_some) && set.len() == reps.len() && set == oracle;
    ok(pass, format!("{} representatives, {} distinct words, oracle {} reduced words", reps.len(), set.len(), oracle.len()))
}

fn double_groupoid() -> Outcome {
    let rs = RewriteSystem::default();
    let mut lines = Vec::new();
    let mut pass = true;
    for (g, a) in [(2, 3), (3, 2)] {
        let ctx = group_pair(g, a, 0);
        let s = &ctx.sig;
        let u = build_layers(s, Bounds::default()).unwrap();
        let (mut good, mut by_decision) = (0, 0);
        for t in u.terms() {
            let b = s.boundary(t).unwrap();
            let (vi, hi) = (s.vertical_inverse(t), s.horizontal_inverse(t));
            let mut cases = Vec::new();
            if let (Some(vi), Some(hi)) = (vi, hi) {
                cases.push((SquareTerm::V(vec![t.clone(), vi]), s.vertical_identity(b.top)));
                cases.push((SquareTerm::h(t.clone(), hi), s.hid_normal(b.left)));
            }
            let mut all = cases.len() == 2;
            for (x, id) in &cases {
                if s.canonical(x) != s.canonical(id) {
                    by_decision += 1;
                    all &= decide_eq_auto(s, x, id, &rs) == Decision::Equal;
                }
            }
            good += usize::from(all);
        }
        let gc = is_double_groupoid(&ctx.target).is_double_groupoid;
        pass &= good == u.len() && gc;
        lines.push(format!("(Z{g},Z{a}) {good}/{} squares invert ({by_decision} via decide_eq), gamma C groupoid={gc}", u.len()));
    }
    ok(pass, lines.join("; "))
}

fn adjunction() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for (name, ctx) in contexts() {
        let u = build_layers(&ctx.sig, Bounds::default()).unwrap();
        let r = triangle_identities(&ctx, &u);
        let functors = enumerate_double_functors(&ctx.target, &ctx.target, 1000);
        let natural = functors.iter().filter(|t| naturality_witness(t, &ctx.target, &ctx, &ctx, &u).unwrap().is_none()).count();
        pass &= r.triangle1 == "pass" && r.triangle2 == "pass" && natural == functors.len();
        lines.push(format!("{name} triangles {}/{} naturality {natural}/{}", r.triangle1, r.triangle2, functors.len()));
    }
    // Functoriality on (ΩZ4, 2ΩZ3) with the quotient to Z2 followed by each
    // endofunctor of the Z2 internalization.
    let (x4, x2) = (group_pair(4, 3, 0), group_pair(2, 3, 0));
    let u4 = build_layers(&x4.sig, Bounds::default()).unwrap();
    let free = |f: &DoubleFunctor, a: &ProjectionContext, b: &ProjectionContext| {
        FreeDoubleFunctor::new(&f.h_star(&a.target), &a.base, &b.base, &a.sig, &b.sig).unwrap()
    };
    let id = free(&DoubleFunctor::identity(&x4.target), &x4, &x4);
    let mut composites = 0;
    let mut functorial = u4.terms().all(|t| &id.apply(t) == t);
    for t in enumerate_double_functors(&x4.target, &x2.target, 1000) {
        for s in enumerate_double_functors(&x2.target, &x2.target, 1000) {
            let st = DoubleFunctor::compose(&s, &t).unwrap();
            functorial &= functoriality_witness(&free(&st, &x4, &x2), &free(&t, &x4, &x2), &free(&s, &x2, &x2), &u4).is_none();
            composites += 1;
        }
    }
    pass &= functorial && composites > 0;
    lines.push(format!("functoriality over {} terms, {composites} composites: {functorial}", u4.len()));
    ok(pass, lines.join("; "))
}

fn faithfulness() -> Outcome {
    let targets = [
        ("gamma(cs(arrow))", gamma(&commuting_squares(&arrow_category()))),
        ("Z2 x Z3 trivial", group_internalization(2, 3, 0).unwrap()),
        ("Z2 x Z3 inversion", group_internalization(2, 3, 1).unwrap()),
    ];
    let mut lines = Vec::new();
    let mut pass = true;
    for (name, c) in &targets {
        let r = faithfulness_probe(c, c, FAITHFULNESS_THRESHOLD, 10_000, SEED);
        pass &= r.exhaustive && r.globularly_generated && c.squares.len() <= 10 && r.counterexamples.is_empty();
        lines.push(format!("{name}: {} squares, {} functors, {} counterexamples", c.squares.len(), r.functors, r.counterexamples.len()));
    }
    ok(pass, lines.join("; "))
}

fn reports_once() -> String {
    let mut out = String::new();
    for (name, ctx) in contexts() {
        let (tr, u) = free_truncation(&ctx.sig, Bounds { word: 3, ..Default::default() }).unwrap();
        let reps: Vec<String> = tr.reps.iter().map(|r| r.term.render(&ctx.sig)).collect();
        out += &serde_json::to_string(&(name, reps, &tr.layers, &u.layers)).unwrap();
        out += &serde_json::to_string(&audit_strictness(&ctx, &u, &tr)).unwrap();
        out += &serde_json::to_string(&audit_surjectivity(&ctx, &u, 2)).unwrap();
        out += &serde_json::to_string(&tr.check_compositions(&u, 200, SEED)).unwrap();
        out += &serde_json::to_string(&triangle_identities(&ctx, &u)).unwrap();
        out += &serde_json::to_string(&faithfulness_probe(&ctx.target, &ctx.target, 0, 50, SEED)).unwrap();
    }
    for (name, p) in presentations() {
        out += &render(&name, &p);
    }
    out
}

fn determinism() -> Outcome {
    let (a, b) = (reports_once(), reports_once());
    ok(a == b, format!("{} bytes, identical={}", a.len(), a == b))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 axiom suites", axiom_suites, Duration::from_secs(10)),
        ("2 canonical projection", canonical_projection, Duration::from_secs(60)),
        ("3 normalize compatibility", normalize_compatibility, Duration::from_secs(60)),
        ("4 length", length_results, Duration::from_secs(60)),
        ("5 free product", free_product, Duration::MAX),
        ("6 double groupoid", double_groupoid, Duration::MAX),
        ("7 adjunction", adjunction, Duration::MAX),
        ("8 faithfulness", faithfulness, Duration::from_secs(120)),
        ("9 determinism", determinism, Duration::MAX),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let t0 = Instant::now();
        let o = f();
        let dt = t0.elapsed();
        let pass = o.pass && dt <= limit;
        failed += usize::from(!pass);
        let budget = if limit == Duration::MAX { String::new() } else { format!(" / {}s", limit.as_secs()) };
        println!("criterion {name}: {} ({:.2}s{budget}) {}", if pass { "PASS" } else { "FAIL" }, dt.as_secs_f64(), o.detail);
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
