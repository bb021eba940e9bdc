//! The bundled example corpus: small categories, strict 2-categories,
//! decorated bicategories, double categories, and the pairs (B, C) with
//! H*C = B used by the audits.

use super::builders::{commuting_squares, delooping, double_delooping, quintets, semidirect_double, trivial_action};
use super::category::{Arrow, FiniteCategory};
use super::double::DoubleCategory;
use super::dsl::Presentation;
use super::group::FiniteGroup;
use super::two_category::{DecoratedBicategory, Strict2Category};
use crate::doublecat::{gamma, h_star};

/// A category from objects, non-identity morphisms and their composites;
/// identities are named `id_x` and their laws filled in.
pub fn category(objects: &[&str], morphisms: &[(&str, &str, &str)], composites: &[(&str, &str, &str)]) -> FiniteCategory {
    let mut c = FiniteCategory::new();
    for x in objects {
        c.add_object(*x);
        c.add_identity(x, format!("id_{x}"));
    }
    for (m, d, e) in morphisms {
        c.add_morphism(*m, *d, *e);
    }
    let all: Vec<(String, Arrow)> = c.morphisms.iter().map(|(n, a)| (n.clone(), a.clone())).collect();
    for (m, a) in &all {
        let (i, j) = (format!("id_{}", a.dom), format!("id_{}", a.cod));
        c.set_composite(m, &i, m);
        c.set_composite(&j, m, m);
    }
    for (g, f, h) in composites {
        c.set_composite(g, f, h);
    }
    c
}

/// a → b.
pub fn arrow_category() -> FiniteCategory {
    category(&["a", "b"], &[("u", "a", "b")], &[])
}

pub fn discrete_category(n: usize) -> FiniteCategory {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    category(&refs, &[], &[])
}

/// x → y → z with its composite.
pub fn composable_pair() -> FiniteCategory {
    category(&["x", "y", "z"], &[("f", "x", "y"), ("g", "y", "z"), ("gf", "x", "z")], &[("g", "f", "gf")])
}

/// Objects a, b; 1-cells u, v: a → b; one non-identity 2-cell α: u ⇒ v.
pub fn walking_two_cell() -> Strict2Category {
    let mut s = Strict2Category::default();
    for x in ["a", "b"] {
        let i = format!("1{x}");
        s.cells0.insert(x.into());
        s.cells1.insert(i.clone(), Arrow::new(x, x));
        s.identity1.insert(x.into(), i.clone());
        s.hcompose1.insert((i.clone(), i.clone()), i.clone());
    }
    for m in ["u", "v"] {
        s.cells1.insert(m.into(), Arrow::new("a", "b"));
        s.hcompose1.insert((m.into(), "1a".into()), m.into());
        s.hcompose1.insert(("1b".into(), m.into()), m.into());
    }
    for a in ["1a", "1b", "u", "v"] {
        let i = format!("i_{a}");
        s.cells2.insert(i.clone(), Arrow::new(a, a));
        s.identity2.insert(a.into(), i.clone());
        s.vcompose2.insert((i.clone(), i.clone()), i.clone());
    }
    s.cells2.insert("alpha".into(), Arrow::new("u", "v"));
    s.vcompose2.insert(("alpha".into(), "i_u".into()), "alpha".into());
    s.vcompose2.insert(("i_v".into(), "alpha".into()), "alpha".into());
    // Whiskering by identity 1-cells.
    for (x, y) in [("i_1a", "i_1a"), ("i_1b", "i_1b")] {
        s.hcompose2.insert((x.into(), y.into()), x.into());
    }
    for c in ["i_u", "i_v", "alpha"] {
        s.hcompose2.insert((c.into(), "i_1a".into()), c.into());
        s.hcompose2.insert(("i_1b".into(), c.into()), c.into());
    }
    s
}

/// The decoration `x → y → z`, `x → w → z` with both composites equal to
/// `d`, over a bicategory with only identity 1-cells and a Z2 of 2-cells on
/// each of them. Horizontal composites of vertical paths through `y` and
/// through `w` do not flatten, so the free length exceeds 1.
pub fn square_decoration() -> DecoratedBicategory {
    let d = category(
        &["w", "x", "y", "z"],
        &[("f", "x", "y"), ("g", "y", "z"), ("h", "x", "w"), ("k", "w", "z"), ("d", "x", "z")],
        &[("g", "f", "d"), ("k", "h", "d")],
    );
    let mut s = Strict2Category::default();
    for x in ["w", "x", "y", "z"] {
        let one = format!("e{x}");
        s.cells0.insert(x.into());
        s.cells1.insert(one.clone(), Arrow::new(x, x));
        s.identity1.insert(x.into(), one.clone());
        s.hcompose1.insert((one.clone(), one.clone()), one.clone());
        let (u, t) = (format!("u{x}"), format!("t{x}"));
        for c in [&u, &t] {
            s.cells2.insert(c.clone(), Arrow::new(one.clone(), one.clone()));
        }
        s.identity2.insert(one.clone(), u.clone());
        for (p, q, r) in [(&u, &u, &u), (&u, &t, &t), (&t, &u, &t), (&t, &t, &u)] {
            s.vcompose2.insert((p.clone(), q.clone()), r.clone());
            s.hcompose2.insert((p.clone(), q.clone()), r.clone());
        }
    }
    DecoratedBicategory::new(d, s)
}

pub fn group_case(g: usize, a: usize) -> DecoratedBicategory {
    DecoratedBicategory::new(
        delooping(&FiniteGroup::cyclic_named(g, "g")),
        double_delooping(&FiniteGroup::cyclic_named(a, "a")).expect("cyclic groups are abelian"),
    )
}

/// The internalization of (ΩZg, 2ΩZa) for the `which`-th action.
pub fn group_internalization(g: usize, a: usize, which: usize) -> Option<DoubleCategory> {
    let (gg, aa) = (FiniteGroup::cyclic_named(g, "g"), FiniteGroup::cyclic_named(a, "a"));
    let mut actions = gg.actions_on(&aa);
    let trivial = trivial_action(&gg, &aa);
    actions.sort_by_key(|act| *act != trivial);
    semidirect_double(&gg, &aa, actions.get(which)?).ok()
}

/// A corpus pair (B, C) with H*C = B.
#[derive(Clone, Debug)]
pub struct CorpusPair {
    pub name: &'static str,
    pub base: DecoratedBicategory,
    pub target: DoubleCategory,
}

pub fn pairs() -> Vec<CorpusPair> {
    let cs = commuting_squares(&arrow_category());
    let q = quintets(&walking_two_cell());
    let mut out = vec![
        CorpusPair {
            name: "omega_z2_2omega_z3__trivial",
            base: group_case(2, 3),
            target: group_internalization(2, 3, 0).expect("trivial action"),
        },
        CorpusPair {
            name: "omega_z2_2omega_z3__inversion",
            base: group_case(2, 3),
            target: group_internalization(2, 3, 1).expect("inversion action"),
        },
        CorpusPair {
            name: "omega_z3_2omega_z2__trivial",
            base: group_case(3, 2),
            target: group_internalization(3, 2, 0).expect("trivial action"),
        },
        CorpusPair { name: "arrow_commuting_squares", base: h_star(&cs), target: gamma(&cs) },
        CorpusPair { name: "walking_two_cell_quintets", base: h_star(&q), target: q },
    ];
    out.sort_by_key(|p| p.name);
    out
}

/// Every named value of the corpus, sorted by name.
pub fn presentations() -> Vec<(String, Presentation)> {
    let mut out: Vec<(String, Presentation)> = Vec::new();
    let mut add = |n: &str, p: Presentation| out.push((n.to_string(), p));
    for n in [1, 2, 3, 4] {
        add(&format!("omega_z{n}"), Presentation::Category(delooping(&FiniteGroup::cyclic(n))));
    }
    add("omega_s3", Presentation::Category(delooping(&FiniteGroup::symmetric3())));
    add("arrow", Presentation::Category(arrow_category()));
    add("discrete2", Presentation::Category(discrete_category(2)));
    add("composable_pair", Presentation::Category(composable_pair()));
    for n in [2, 3] {
        let s = double_delooping(&FiniteGroup::cyclic(n)).expect("abelian");
        add(&format!("2omega_z{n}"), Presentation::TwoCategory(s.clone()));
        add(&format!("quintets_2omega_z{n}"), Presentation::Double(quintets(&s)));
    }
    add("walking_two_cell", Presentation::TwoCategory(walking_two_cell()));
    add("quintets_walking_two_cell", Presentation::Double(quintets(&walking_two_cell())));
    add("commuting_squares_arrow", Presentation::Double(commuting_squares(&arrow_category())));
    add("commuting_squares_omega_z2", Presentation::Double(commuting_squares(&delooping(&FiniteGroup::cyclic(2)))));
    add("commuting_squares_discrete2", Presentation::Double(commuting_squares(&discrete_category(2))));
    add("commuting_squares_composable_pair", Presentation::Double(commuting_squares(&composable_pair())));
    add("trivial", Presentation::Decorated(group_case(1, 1)));
    add("omega_z2_2omega_z3", Presentation::Decorated(group_case(2, 3)));
    add("omega_z3_2omega_z2", Presentation::Decorated(group_case(3, 2)));
    add("omega_z4_2omega_z3", Presentation::Decorated(group_case(4, 3)));
    add("square_decoration", Presentation::Decorated(square_decoration()));
    for p in pairs() {
        add(&format!("{}__base", p.name), Presentation::Decorated(p.base));
        add(&format!("{}__target", p.name), Presentation::Double(p.target));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_validates() {
        for (name, p) in presentations() {
            assert!(p.validate().is_valid(), "{name}: {:?}", p.validate());
        }
    }

    #[test]
    fn pairs_satisfy_the_hypothesis() {
        for p in pairs() {
            assert_eq!(h_star(&p.target), p.base, "{}", p.name);
            assert!(p.base.validate().is_valid(), "{}", p.name);
        }
    }

    #[test]
    fn inversion_action_is_nontrivial() {
        let t = group_internalization(2, 3, 0).unwrap();
        let i = group_internalization(2, 3, 1).unwrap();
        assert_ne!(t.vcomp, i.vcomp);
        assert!(group_internalization(2, 3, 2).is_none());
    }
}
