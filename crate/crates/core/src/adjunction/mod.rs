//! Free double functors Q_G, the unit j and counit π• of the free
//! construction, and executable forms of the triangle identities,
//! naturality, functoriality and faithfulness.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::doublecat::{enumerate_double_functors, is_globularly_generated, DoubleFunctor};
use crate::freeggd::{decide_eq_auto, Bounds, Decision, Generator, RewriteSystem, Signature, SquareTerm, Universe};
use crate::presentations::{DecoratedBicategory, DecoratedPseudofunctor, DoubleCategory};
use crate::projection::{ProjectionContext, ProjectionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdjunctionError {
    #[error("pseudofunctor does not preserve boundaries at {0}")]
    Boundary(String),
    #[error("pseudofunctor is invalid: {0}")]
    Invalid(String),
    #[error(transparent)]
    Projection(#[from] ProjectionError),
}

/// Q_G on terms: each generator is replaced by its image under G.
#[derive(Clone, Debug)]
pub struct FreeDoubleFunctor {
    glob: Vec<u32>,
    hid: Vec<u32>,
}

impl FreeDoubleFunctor {
    /// Checks G and that every generator's boundary is carried to the
    /// boundary of its image.
    pub fn new(
        g: &DecoratedPseudofunctor,
        src_b: &DecoratedBicategory,
        tgt_b: &DecoratedBicategory,
        src: &Signature,
        tgt: &Signature,
    ) -> Result<Self, AdjunctionError> {
        let report = g.validate(src_b, tgt_b);
        if let Some(v) = report.violations.first() {
            return Err(AdjunctionError::Invalid(format!("{} {:?}", v.law, v.witness)));
        }
        let cell = |name: &str| g.on_cells2.get(name).and_then(|x| tgt.cell2_index(x));
        let dmor = |name: &str| g.on_decoration.get(name).and_then(|x| tgt.dmor_index(x));
        let glob: Vec<u32> =
            src.cells2.iter().map(|n| cell(n).ok_or_else(|| AdjunctionError::Boundary(n.clone()))).collect::<Result<_, _>>()?;
        let hid: Vec<u32> =
            src.dmor.iter().map(|n| dmor(n).ok_or_else(|| AdjunctionError::Boundary(n.clone()))).collect::<Result<_, _>>()?;
        let q = FreeDoubleFunctor { glob, hid };
        let on1 = |a: u32| g.on_cells1.get(&src.cells1[a as usize]);
        let ond = |f: u32| g.on_decoration.get(&src.dmor[f as usize]);
        for gen in crate::freeggd::generators(src) {
            let b = src.generator_boundary(gen);
            let SquareTerm::Gen(img) = q.generator(gen) else { unreachable!("generators map to generators") };
            let c = tgt.generator_boundary(img);
            let ok = on1(b.top) == Some(&tgt.cells1[c.top as usize])
                && on1(b.bottom) == Some(&tgt.cells1[c.bottom as usize])
                && ond(b.left) == Some(&tgt.dmor[c.left as usize])
                && ond(b.right) == Some(&tgt.dmor[c.right as usize]);
            if !ok {
                return Err(AdjunctionError::Boundary(SquareTerm::Gen(gen).render(src)));
            }
        }
        Ok(q)
    }

    fn generator(&self, g: Generator) -> SquareTerm {
        match g {
            Generator::Glob(p) => SquareTerm::glob(self.glob[p as usize]),
            Generator::HId(f) => SquareTerm::hid(self.hid[f as usize]),
        }
    }

    pub fn apply(&self, t: &SquareTerm) -> SquareTerm {
        t.map_generators(&mut |g| self.generator(g))
    }

    /// Terms t with Q_G(normalize t) and normalize(Q_G t) not shown equal.
    pub fn normalization_witnesses(&self, src: &Signature, tgt: &Signature, u: &Universe) -> Vec<String> {
        let rs = RewriteSystem::default();
        u.terms()
            .filter(|t| {
                let (a, b) = (self.apply(&src.normalize(t)), tgt.normalize(&self.apply(t)));
                tgt.canonical(&a) != tgt.canonical(&b) && decide_eq_auto(tgt, &a, &b, &rs) != Decision::Equal
            })
            .map(|t| t.render(src))
            .collect()
    }
}

/// First term where Q_{G'∘G} and Q_{G'}∘Q_G differ, if any.
pub fn functoriality_witness(
    composite: &FreeDoubleFunctor,
    first: &FreeDoubleFunctor,
    second: &FreeDoubleFunctor,
    u: &Universe,
) -> Option<SquareTerm> {
    u.terms().find(|t| composite.apply(t) != second.apply(&first.apply(t))).cloned()
}

/// j^B: B → H*Q_B, sending each 2-cell to the representative of its
/// globular square and each decoration morphism to itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit {
    pub cells2: Vec<SquareTerm>,
    pub decoration: Vec<u32>,
}

pub fn unit(sig: &Signature) -> Unit {
    Unit {
        cells2: (0..sig.cells2.len() as u32).map(|p| sig.canonical(&SquareTerm::glob(p))).collect(),
        decoration: (0..sig.dmor.len() as u32).collect(),
    }
}

impl Unit {
    /// Is j injective on 2-cells?
    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<&SquareTerm> = self.cells2.iter().collect();
        seen.sort();
        seen.dedup();
        seen.len() == self.cells2.len()
    }

    /// The unit with the images of two 2-cells exchanged.
    pub fn swapped(&self, p: u32, q: u32) -> Unit {
        let mut out = self.clone();
        out.cells2.swap(p as usize, q as usize);
        out
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Triangle {
    pub pass: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

impl Triangle {
    fn verdict(&self) -> &'static str {
        if self.pass {
            "pass"
        } else {
            "fail"
        }
    }
}

/// (H*π^C) ∘ j_{H*C} = id_{H*C}, on 2-cells and decoration morphisms.
pub fn triangle_one(ctx: &ProjectionContext, j: &Unit) -> Triangle {
    let sig = &ctx.sig;
    let mut checked = 0;
    for (p, name) in sig.cells2.iter().enumerate() {
        checked += 1;
        if ctx.project(&j.cells2[p]).ok().as_ref() != Some(name) {
            return Triangle { pass: false, checked, witness: Some(name.clone()) };
        }
    }
    for (f, name) in sig.dmor.iter().enumerate() {
        checked += 1;
        let image = ctx.project(&SquareTerm::hid(j.decoration[f])).ok();
        let side = image.as_deref().and_then(|s| ctx.target.frame(s)).map(|fr| fr.left.as_str());
        if side != Some(name.as_str()) {
            return Triangle { pass: false, checked, witness: Some(name.clone()) };
        }
    }
    Triangle { pass: true, checked, witness: None }
}

/// π^{Q_B} ∘ Q_{j_B} = id on every enumerated term. The 2-cells of H*Q_B
/// that j reaches are numbered by their position in a table of
/// representatives; Q_j renames generators into that table and π^{Q_B}
/// substitutes the representatives back and composes in Q_B.
pub fn triangle_two(sig: &Signature, j: &Unit, u: &Universe) -> Triangle {
    let mut table: Vec<SquareTerm> = j.cells2.clone();
    table.sort();
    table.dedup();
    let pos: BTreeMap<&SquareTerm, u32> = table.iter().enumerate().map(|(i, t)| (t, i as u32)).collect();
    let q_j = |t: &SquareTerm| {
        t.map_generators(&mut |g| match g {
            Generator::Glob(p) => SquareTerm::glob(pos[&j.cells2[p as usize]]),
            Generator::HId(f) => SquareTerm::hid(j.decoration[f as usize]),
        })
    };
    let pi = |t: &SquareTerm| {
        sig.canonical(&t.map_generators(&mut |g| match g {
            Generator::Glob(i) => table[i as usize].clone(),
            Generator::HId(f) => SquareTerm::hid(f),
        }))
    };
    let mut checked = 0;
    for t in u.terms() {
        checked += 1;
        if pi(&q_j(t)) != sig.canonical(t) {
            return Triangle { pass: false, checked, witness: Some(t.render(sig)) };
        }
    }
    Triangle { pass: true, checked, witness: None }
}

#[derive(Clone, Debug, Serialize)]
pub struct AdjunctionReport {
    pub triangle1: &'static str,
    pub triangle2: &'static str,
    pub triangle1_detail: Triangle,
    pub triangle2_detail: Triangle,
    pub unit_injective: bool,
    pub bounds: Bounds,
}

/// Both triangle identities for B = H*C.
pub fn triangle_identities(ctx: &ProjectionContext, u: &Universe) -> AdjunctionReport {
    let j = unit(&ctx.sig);
    let (t1, t2) = (triangle_one(ctx, &j), triangle_two(&ctx.sig, &j, u));
    AdjunctionReport {
        triangle1: t1.verdict(),
        triangle2: t2.verdict(),
        triangle1_detail: t1,
        triangle2_detail: t2,
        unit_injective: j.is_injective(),
        bounds: u.bounds,
    }
}

/// π^C as the component of the counit at C.
pub fn counit(c: &DoubleCategory) -> Result<ProjectionContext, ProjectionError> {
    ProjectionContext::new(&crate::doublecat::h_star(c), c)
}

/// T ∘ π^C = π^{C'} ∘ Q_{H*T} on every enumerated term over H*C; returns
/// the first term where the two sides differ.
pub fn naturality_witness(
    t: &DoubleFunctor,
    c: &DoubleCategory,
    ctx: &ProjectionContext,
    ctx2: &ProjectionContext,
    u: &Universe,
) -> Result<Option<String>, AdjunctionError> {
    let q = FreeDoubleFunctor::new(&t.h_star(c), &ctx.base, &ctx2.base, &ctx.sig, &ctx2.sig)?;
    for x in u.terms() {
        let lhs = ctx.project(x).ok().and_then(|s| t.on_squares.get(&s).cloned());
        let rhs = ctx2.project(&q.apply(x)).ok();
        if lhs.is_none() || lhs != rhs {
            return Ok(Some(x.render(&ctx.sig)));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum FaithfulnessVerdict {
    Pass,
    Fail,
    /// Distinct functors with equal H* out of a source that is not
    /// globularly generated.
    OutOfHypothesis,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaithfulnessReport {
    pub functors: usize,
    pub classes: usize,
    pub exhaustive: bool,
    pub globularly_generated: bool,
    /// Pairs (by index in enumeration order) with equal H* but different
    /// square maps.
    pub counterexamples: Vec<(usize, usize)>,
    pub verdict: FaithfulnessVerdict,
}

/// Squares threshold for exhaustive enumeration.
pub const FAITHFULNESS_THRESHOLD: usize = 10;

/// Groups double functors C → C' by H* and reports classes with more than
/// one member. Exhaustive when C has at most `threshold` squares; otherwise
/// up to `limit` functors are enumerated and `limit` seeded pairs compared.
pub fn faithfulness_probe(c: &DoubleCategory, c2: &DoubleCategory, threshold: usize, limit: usize, seed: u64) -> FaithfulnessReport {
    let exhaustive = c.squares.len() <= threshold;
    let functors = enumerate_double_functors(c, c2, if exhaustive { usize::MAX } else { limit });
    let keys: Vec<DecoratedPseudofunctor> = functors.iter().map(|f| f.h_star(c)).collect();
    let mut counterexamples = Vec::new();
    let mut classes: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.iter().enumerate() {
        classes.entry(serde_json::to_string(k).expect("serializable")).or_default().push(i);
    }
    if exhaustive {
        for members in classes.values() {
            for (a, &i) in members.iter().enumerate() {
                for &j in &members[a + 1..] {
                    if functors[i] != functors[j] {
                        counterexamples.push((i, j));
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let idx: Vec<usize> = (0..functors.len()).collect();
        for _ in 0..limit {
            let (Some(&i), Some(&j)) = (idx.choose(&mut rng), idx.choose(&mut rng)) else { break };
            if i < j && keys[i] == keys[j] && functors[i] != functors[j] {
                counterexamples.push((i, j));
            }
        }
    }
    let globularly_generated = is_globularly_generated(c);
    let verdict = match (counterexamples.is_empty(), globularly_generated) {
        (true, _) => FaithfulnessVerdict::Pass,
        (false, true) => FaithfulnessVerdict::Fail,
        (false, false) => FaithfulnessVerdict::OutOfHypothesis,
    };
    FaithfulnessReport { functors: functors.len(), classes: classes.len(), exhaustive, globularly_generated, counterexamples, verdict }
}

/// Checks given pairs: equal H* must imply equal functors.
pub fn faithful_on_pairs(c: &DoubleCategory, pairs: &[(DoubleFunctor, DoubleFunctor)]) -> Option<usize> {
    pairs.iter().position(|(g, h)| g.h_star(c) == h.h_star(c) && g != h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeggd::{build_layers, parse_term};
    use crate::presentations::corpus::*;
    use crate::presentations::*;

    fn ctx() -> ProjectionContext {
        ProjectionContext::new(&group_case(2, 3), &group_internalization(2, 3, 0).unwrap()).unwrap()
    }

    #[test]
    fn identity_pseudofunctor_gives_identity() {
        let x = ctx();
        let id = DecoratedPseudofunctor::identity(&x.base);
        let q = FreeDoubleFunctor::new(&id, &x.base, &x.base, &x.sig, &x.sig).unwrap();
        let t = parse_term(&x.sig, "(v (id g1) (h (g a1) (g a2)))").unwrap();
        assert_eq!(q.apply(&t), t);
    }

    #[test]
    fn triangles_pass_and_perturbed_unit_fails() {
        let x = ctx();
        let u = build_layers(&x.sig, Bounds { word: 3, ..Default::default() }).unwrap();
        let r = triangle_identities(&x, &u);
        assert_eq!((r.triangle1, r.triangle2), ("pass", "pass"));
        assert!(r.unit_injective);
        let bad = unit(&x.sig).swapped(1, 2);
        let t1 = triangle_one(&x, &bad);
        assert_eq!(t1.witness.as_deref(), Some("a1"));
        assert!(!triangle_two(&x.sig, &bad, &u).pass);
    }

    #[test]
    fn non_homomorphism_is_rejected() {
        let x = ctx();
        let mut g = DecoratedPseudofunctor::identity(&x.base);
        g.on_cells2.insert("a1".into(), "a0".into());
        assert!(FreeDoubleFunctor::new(&g, &x.base, &x.base, &x.sig, &x.sig).is_err());
    }

    #[test]
    fn faithfulness_on_arrow() {
        let g = crate::doublecat::gamma(&commuting_squares(&arrow_category()));
        let r = faithfulness_probe(&g, &g, FAITHFULNESS_THRESHOLD, 1000, 0);
        assert!(r.exhaustive && r.globularly_generated);
        assert_eq!(r.verdict, FaithfulnessVerdict::Pass);
        assert!(r.functors >= 1);
    }

    fn quotient() -> (ProjectionContext, ProjectionContext, DoubleFunctor) {
        let (c4, c2) = (group_internalization(4, 3, 0).unwrap(), group_internalization(2, 3, 0).unwrap());
        let t =
            enumerate_double_functors(&c4, &c2, 100).into_iter().find(|f| f.on_vmor["g1"] == "g1" && f.on_squares["a1"] == "a1").unwrap();
        (counit(&c4).unwrap(), counit(&c2).unwrap(), t)
    }

    #[test]
    fn quotient_acts_on_generators() {
        let (x4, x2, t) = quotient();
        let q = FreeDoubleFunctor::new(&t.h_star(&x4.target), &x4.base, &x2.base, &x4.sig, &x2.sig).unwrap();
        let w = parse_term(&x4.sig, "(h (v (id g3) (g a1)) (id g3))").unwrap();
        assert_eq!(q.apply(&w).render(&x2.sig), "(h (v (id g1) (g a1)) (id g1))");
        let u = build_layers(&x4.sig, Bounds { word: 3, ..Default::default() }).unwrap();
        assert!(q.normalization_witnesses(&x4.sig, &x2.sig, &u).is_empty());
    }

    #[test]
    fn free_functors_compose() {
        let (x4, x2, t) = quotient();
        let autos = enumerate_double_functors(&x2.target, &x2.target, 100);
        let s = autos.iter().find(|f| f.on_squares["a1"] == "a2").unwrap();
        let st = DoubleFunctor::compose(s, &t).unwrap();
        let free = |f: &DoubleFunctor, a: &ProjectionContext, b: &ProjectionContext| {
            FreeDoubleFunctor::new(&f.h_star(&a.target), &a.base, &b.base, &a.sig, &b.sig).unwrap()
        };
        let u = build_layers(&x4.sig, Bounds { word: 3, ..Default::default() }).unwrap();
        let (qt, qs, qst) = (free(&t, &x4, &x2), free(s, &x2, &x2), free(&st, &x4, &x2));
        assert_eq!(functoriality_witness(&qst, &qt, &qs, &u), None);
        assert!(functoriality_witness(&qt, &qt, &qs, &u).is_some());
    }

    #[test]
    fn naturality_holds_and_mutation_breaks_it() {
        let (x4, x2, t) = quotient();
        let u = build_layers(&x4.sig, Bounds { word: 3, ..Default::default() }).unwrap();
        assert_eq!(naturality_witness(&t, &x4.target, &x4, &x2, &u).unwrap(), None);
        let mut bad = t.clone();
        let sq = x4.target.hid_of("g1").unwrap().to_string();
        let other = x2.target.hid_of("g0").unwrap().to_string();
        bad.on_squares.insert(sq, other);
        assert!(naturality_witness(&bad, &x4.target, &x4, &x2, &u).unwrap().is_some());
    }

    /// Objects a, b with only identity horizontal morphisms, a vertical
    /// arrow u: a → b, and two squares i_u, s on u with s ∗ s = s. s is not
    /// generated.
    fn hidden_square() -> DoubleCategory {
        let mut c = DoubleCategory { horizontal: category(&["a", "b"], &[], &[]), vertical: arrow_category(), ..Default::default() };
        for x in ["a", "b"] {
            let (one, e) = (format!("id_{x}"), format!("e_{x}"));
            c.squares.insert(e.clone(), Frame::new(&one, &one, &one, &one));
            c.square_identity.insert(one.clone(), e.clone());
            c.hid.insert(one, e.clone());
            c.vcomp.insert((e.clone(), e.clone()), e.clone());
            c.hcomp.insert((e.clone(), e.clone()), e);
        }
        for n in ["i", "s"] {
            c.squares.insert(n.into(), Frame::new("id_a", "id_b", "u", "u"));
            c.vcomp.insert(("e_b".into(), n.into()), n.into());
            c.vcomp.insert((n.into(), "e_a".into()), n.into());
        }
        c.hid.insert("u".into(), "i".into());
        for (x, y, z) in [("i", "i", "i"), ("i", "s", "s"), ("s", "i", "s"), ("s", "s", "s")] {
            c.hcomp.insert((x.into(), y.into()), z.into());
        }
        c
    }

    #[test]
    fn ungenerated_squares_are_out_of_hypothesis() {
        let c = hidden_square();
        assert!(c.validate().is_valid(), "{:?}", c.validate());
        let r = faithfulness_probe(&c, &c, FAITHFULNESS_THRESHOLD, 100, 0);
        assert!(!r.globularly_generated);
        assert_eq!(r.verdict, FaithfulnessVerdict::OutOfHypothesis);
        let g = crate::doublecat::gamma(&c);
        assert_eq!(faithfulness_probe(&g, &g, FAITHFULNESS_THRESHOLD, 100, 0).verdict, FaithfulnessVerdict::Pass);
    }
}
