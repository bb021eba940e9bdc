//! Properties of normalization, canonical forms and the equality decision.

use std::sync::OnceLock;

use dcat_core::freeggd::*;
use dcat_core::presentations::corpus::group_case;
use proptest::prelude::*;

struct Fixture {
    sig: Signature,
    terms: Vec<SquareTerm>,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let sig = Signature::new(&group_case(2, 3)).unwrap();
        let u = build_layers(&sig, Bounds { word: 3, ..Default::default() }).unwrap();
        let terms = u.terms().cloned().collect();
        Fixture { sig, terms }
    })
}

/// Every subterm position of `t`, as paths of child indices.
fn positions(t: &SquareTerm) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let children: Vec<&SquareTerm> = match t {
        SquareTerm::Gen(_) => vec![],
        SquareTerm::H(a, b) => vec![a, b],
        SquareTerm::V(xs) => xs.iter().collect(),
    };
    for (i, c) in children.into_iter().enumerate() {
        for mut p in positions(c) {
            p.insert(0, i);
            out.push(p);
        }
    }
    out
}

fn replace_at(t: &SquareTerm, path: &[usize], f: &dyn Fn(&SquareTerm) -> SquareTerm) -> SquareTerm {
    let Some((&i, rest)) = path.split_first() else { return f(t) };
    match t {
        SquareTerm::Gen(_) => t.clone(),
        SquareTerm::H(a, b) if i == 0 => SquareTerm::h(replace_at(a, rest, f), (**b).clone()),
        SquareTerm::H(a, b) => SquareTerm::h((**a).clone(), replace_at(b, rest, f)),
        SquareTerm::V(xs) => {
            let mut ys = xs.clone();
            ys[i] = replace_at(&xs[i], rest, f);
            SquareTerm::V(ys)
        }
    }
}

/// Number of alternating words of length at most `len` over g - 1 and a - 1
/// non-identity letters, counted by last letter.
fn reduced_words(g: usize, a: usize, len: usize) -> usize {
    let (mut ends_g, mut ends_a, mut total) = (0usize, 0usize, 1usize);
    for n in 1..=len {
        let (ng, na) = if n == 1 { (g - 1, a - 1) } else { (ends_a * (g - 1), ends_g * (a - 1)) };
        ends_g = ng;
        ends_a = na;
        total += ng + na;
    }
    total
}

#[test]
fn reduced_word_oracle_small_cases() {
    assert_eq!(reduced_words(2, 3, 4), 22);
    assert_eq!(reduced_words(1, 1, 4), 1);
    assert_eq!(reduced_words(2, 2, 3), 7);
}

#[test]
fn normalize_is_idempotent_and_preserves_boundaries_on_the_universe() {
    let f = fixture();
    for t in &f.terms {
        let n = f.sig.normalize(t);
        assert_eq!(f.sig.boundary(&n), f.sig.boundary(t), "{}", t.render(&f.sig));
        assert_eq!(f.sig.normalize(&n), n, "{}", t.render(&f.sig));
    }
}

/// In the group case with orders at most 4, canonical forms do not depend on
/// which subterm is normalized first, and the representatives are exactly the
/// alternating paths spelling the reduced words of the free product.
#[test]
fn group_case_normal_forms_are_reduced_words_and_join() {
    for g in 1..=4 {
        for a in 1..=4 {
            let sig = Signature::new(&group_case(g, a)).unwrap();
            let bounds = Bounds { word: 3, ..Default::default() };
            let (tr, u) = free_truncation(&sig, bounds).unwrap();
            for t in u.terms() {
                let c = sig.canonical(t);
                for p in positions(t) {
                    let t2 = replace_at(t, &p, &|s| sig.normalize(s));
                    assert_eq!(sig.canonical(&t2), c, "Z{g} Z{a} {} at {p:?}", t.render(&sig));
                }
            }
            let mut words = 0;
            for r in tr.reps_up_to(3) {
                let leaves: Vec<&SquareTerm> = match &r.term {
                    SquareTerm::V(xs) => xs.iter().collect(),
                    t => vec![t],
                };
                let kinds: Vec<Option<bool>> = leaves
                    .iter()
                    .map(|l| match l {
                        SquareTerm::Gen(Generator::Glob(p)) if !sig.is_id2(*p) => Some(true),
                        SquareTerm::Gen(Generator::HId(f)) if !sig.is_did(*f) => Some(false),
                        _ => None,
                    })
                    .collect();
                let empty = leaves.len() == 1 && kinds[0].is_none() && matches!(leaves[0], SquareTerm::Gen(Generator::Glob(_)));
                let alternating = kinds.iter().all(Option::is_some) && kinds.windows(2).all(|w| w[0] != w[1]);
                assert!(empty || alternating, "Z{g} Z{a} {}", r.term.render(&sig));
                words += 1;
            }
            assert_eq!(words, reduced_words(g, a, 3), "Z{g} Z{a}");
            assert_eq!(tr.len(), reduced_words(g, a, 3), "Z{g} Z{a}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn normalize_idempotent(i in any::<prop::sample::Index>()) {
        let f = fixture();
        let t = i.get(&f.terms);
        let n = f.sig.normalize(t);
        prop_assert_eq!(f.sig.normalize(&n), n.clone());
        prop_assert_eq!(f.sig.boundary(&n), f.sig.boundary(t));
    }

    #[test]
    fn decide_eq_is_a_congruence(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let f = fixture();
        let sig = &f.sig;
        let rs = RewriteSystem::default();
        let t = i.get(&f.terms);
        let equal: Vec<&SquareTerm> = f.terms.iter().filter(|x| sig.canonical(x) == sig.canonical(t)).collect();
        let t2 = *j.get(&equal);
        prop_assert_eq!(decide_eq_auto(sig, t, t2, &rs), Decision::Equal);
        let c = k.get(&f.terms);
        let bt = sig.boundary(t).unwrap();
        let bc = sig.boundary(c).unwrap();
        if bc.bottom == bt.top {
            let (x, y) = (SquareTerm::V(vec![c.clone(), t.clone()]), SquareTerm::V(vec![c.clone(), t2.clone()]));
            prop_assert_eq!(decide_eq_auto(sig, &x, &y, &rs), Decision::Equal);
        }
        if bc.right == bt.left {
            let (x, y) = (SquareTerm::h(c.clone(), t.clone()), SquareTerm::h(c.clone(), t2.clone()));
            prop_assert_eq!(decide_eq_auto(sig, &x, &y, &rs), Decision::Equal);
        }
    }
}
