//! Audits of π^C on a truncated universe.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{ProjectionContext, ProjectionError};
use crate::doublecat::vertical_filtration;
use crate::freeggd::{generators, FreeTruncation, Generator, SquareTerm, Universe};
use crate::presentations::DoubleCategory;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AuditViolation {
    pub kind: String,
    pub terms: Vec<String>,
    pub detail: String,
}

impl AuditViolation {
    fn new(kind: &str, terms: Vec<String>, detail: impl Into<String>) -> Self {
        AuditViolation { kind: kind.into(), terms, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StrictnessReport {
    pub strict: bool,
    pub checked_terms: usize,
    pub checked_pairs: usize,
    pub violations: Vec<AuditViolation>,
}

/// Checks on every enumerated term that π^C is defined, intertwines the
/// boundaries and is constant on R-classes (π(t) = π(canonical t)); on every
/// composable pair of representatives that π^C preserves both compositions;
/// and that identity squares go to identity squares.
pub fn audit_strictness(ctx: &ProjectionContext, u: &Universe, trunc: &FreeTruncation) -> StrictnessReport {
    let sig = &ctx.sig;
    let c = &ctx.target;
    let mut violations = Vec::new();
    for e in &u.entries {
        let t = e.term();
        let p = match ctx.project(t) {
            Ok(p) => p,
            Err(err) => {
                violations.push(AuditViolation::new("undefined", vec![t.render(sig)], err.to_string()));
                continue;
            }
        };
        let b = e.typed.boundary;
        let f = c.frame(&p).expect("projected squares exist");
        let expected =
            (&sig.cells1[b.top as usize], &sig.cells1[b.bottom as usize], &sig.dmor[b.left as usize], &sig.dmor[b.right as usize]);
        if (&f.top, &f.bottom, &f.left, &f.right) != expected {
            violations.push(AuditViolation::new("boundary", vec![t.render(sig)], format!("image {p}")));
        }
        let canon = sig.canonical(t);
        match ctx.project(&canon) {
            Ok(q) if q == p => {}
            other => violations.push(AuditViolation::new(
                "relation",
                vec![t.render(sig), canon.render(sig)],
                format!("{p} vs {}", other.unwrap_or_else(|e| e.to_string())),
            )),
        }
    }
    let mut pairs = 0;
    let images: Vec<Option<String>> = trunc.reps.iter().map(|r| ctx.project(&r.term).ok()).collect();
    for (i, a) in trunc.reps.iter().enumerate() {
        for (j, b) in trunc.reps.iter().enumerate() {
            let (Some(pa), Some(pb)) = (&images[i], &images[j]) else { continue };
            if let Some(ab) = trunc.vcomp(&a.term, &b.term) {
                pairs += 1;
                let lhs = ctx.project(&ab).ok();
                let rhs = c.vcomp_of(pb, pa).map(str::to_string);
                if lhs != rhs {
                    violations.push(AuditViolation::new(
                        "vcomp",
                        vec![a.term.render(sig), b.term.render(sig)],
                        format!("{lhs:?} vs {rhs:?}"),
                    ));
                }
            }
            if let Some(ab) = trunc.hcomp(&a.term, &b.term) {
                pairs += 1;
                let lhs = ctx.project(&ab).ok();
                let rhs = c.hcomp_of(pb, pa).map(str::to_string);
                if lhs != rhs {
                    violations.push(AuditViolation::new(
                        "hcomp",
                        vec![a.term.render(sig), b.term.render(sig)],
                        format!("{lhs:?} vs {rhs:?}"),
                    ));
                }
            }
        }
    }
    for a in 0..sig.cells1.len() as u32 {
        let t = sig.vertical_identity(a);
        let lhs = ctx.project(&t).ok();
        let rhs = c.vid(&sig.cells1[a as usize]).map(str::to_string);
        if lhs != rhs {
            violations.push(AuditViolation::new("vertical identity", vec![t.render(sig)], format!("{lhs:?} vs {rhs:?}")));
        }
    }
    for f in 0..sig.dmor.len() as u32 {
        let t = sig.hid_normal(f);
        let lhs = ctx.project(&t).ok();
        let rhs = c.hid_of(&sig.dmor[f as usize]).map(str::to_string);
        if lhs != rhs {
            violations.push(AuditViolation::new("horizontal identity", vec![t.render(sig)], format!("{lhs:?} vs {rhs:?}")));
        }
    }
    StrictnessReport { strict: violations.is_empty(), checked_terms: u.len(), checked_pairs: pairs, violations }
}

#[derive(Clone, Debug, Serialize)]
pub struct CompatibilityReport {
    pub checked: usize,
    pub mismatches: Vec<AuditViolation>,
}

/// π(t) = π(normalize t) on every enumerated term.
pub fn audit_normalization(ctx: &ProjectionContext, u: &Universe) -> CompatibilityReport {
    let sig = &ctx.sig;
    let mut mismatches = Vec::new();
    for t in u.terms() {
        let n = sig.normalize(t);
        let (a, b) = (ctx.project(t), ctx.project(&n));
        if a.is_err() || a != b {
            mismatches.push(AuditViolation::new("normalize", vec![t.render(sig), n.render(sig)], format!("{a:?} vs {b:?}")));
        }
    }
    CompatibilityReport { checked: u.len(), mismatches }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SurjectivityLevel {
    pub k: usize,
    pub h_image: usize,
    pub h_expected: usize,
    pub v_image: usize,
    pub v_expected: usize,
    /// Squares of the filtration layer not reached by the free layer.
    pub missing: Vec<String>,
    /// Images outside the filtration layer.
    pub extra: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurjectivityReport {
    /// Largest k such that every level up to k matches exactly.
    pub surjective_up_to: usize,
    pub levels: Vec<SurjectivityLevel>,
}

/// Compares, for k ≤ depth, the images of the free H_k and V_k with the
/// filtration layers H^k and V^k of γC.
pub fn audit_surjectivity(ctx: &ProjectionContext, u: &Universe, depth: usize) -> SurjectivityReport {
    let filtration = vertical_filtration(&ctx.target, depth.max(1));
    let mut h_img: Vec<BTreeSet<String>> = vec![BTreeSet::new(); depth + 1];
    let mut v_img: Vec<BTreeSet<String>> = vec![BTreeSet::new(); depth + 1];
    for e in &u.entries {
        let Ok(p) = ctx.project(e.term()) else { continue };
        let h = e.e_layer.unwrap_or(e.v_layer + 1);
        for k in 1..=depth {
            if h <= k {
                h_img[k].insert(p.clone());
            }
            if e.v_layer <= k {
                v_img[k].insert(p.clone());
            }
        }
    }
    let mut levels = Vec::new();
    let mut surjective_up_to = 0;
    for k in 1..=depth {
        let (he, ve) = (filtration.h_set(k), filtration.v_set(k));
        let mut missing: Vec<String> = he.difference(&h_img[k]).map(|s| format!("H{k}:{s}")).collect();
        missing.extend(ve.difference(&v_img[k]).map(|s| format!("V{k}:{s}")));
        let mut extra: Vec<String> = h_img[k].difference(&he).map(|s| format!("H{k}:{s}")).collect();
        extra.extend(v_img[k].difference(&ve).map(|s| format!("V{k}:{s}")));
        if missing.is_empty() && extra.is_empty() && surjective_up_to == k - 1 {
            surjective_up_to = k;
        }
        levels.push(SurjectivityLevel {
            k,
            h_image: h_img[k].len(),
            h_expected: he.len(),
            v_image: v_img[k].len(),
            v_expected: ve.len(),
            missing,
            extra,
        });
    }
    SurjectivityReport { surjective_up_to, levels }
}

/// A double functor out of the truncation, given on free terms.
pub trait TermFunctor {
    fn on_generator(&self, g: Generator) -> Option<String>;
    fn apply(&self, t: &SquareTerm) -> Option<String>;
}

impl TermFunctor for ProjectionContext {
    fn on_generator(&self, g: Generator) -> Option<String> {
        Some(self.anchor(g).to_string())
    }

    fn apply(&self, t: &SquareTerm) -> Option<String> {
        self.project(t).ok()
    }
}

/// Evaluation with the opposite recursion order: paths are folded from the
/// bottom, words from the right with their bracketing forgotten.
pub struct ReverseFold<'a> {
    pub target: &'a DoubleCategory,
    pub values: BTreeMap<Generator, String>,
}

impl<'a> ReverseFold<'a> {
    /// The functor with the same generator values as π^C.
    pub fn agreeing_with(ctx: &'a ProjectionContext) -> Self {
        let values = generators(&ctx.sig).into_iter().map(|g| (g, ctx.anchor(g).to_string())).collect();
        ReverseFold { target: &ctx.target, values }
    }

    fn leaves<'t>(t: &'t SquareTerm, out: &mut Vec<&'t SquareTerm>) {
        match t {
            SquareTerm::H(a, b) => {
                Self::leaves(a, out);
                Self::leaves(b, out);
            }
            x => out.push(x),
        }
    }
}

impl TermFunctor for ReverseFold<'_> {
    fn on_generator(&self, g: Generator) -> Option<String> {
        self.values.get(&g).cloned()
    }

    fn apply(&self, t: &SquareTerm) -> Option<String> {
        match t {
            SquareTerm::Gen(g) => self.on_generator(*g),
            SquareTerm::H(..) => {
                let mut leaves = Vec::new();
                Self::leaves(t, &mut leaves);
                let mut acc = self.apply(leaves.pop()?)?;
                while let Some(l) = leaves.pop() {
                    let x = self.apply(l)?;
                    acc = self.target.hcomp_of(&acc, &x)?.to_string();
                }
                Some(acc)
            }
            SquareTerm::V(xs) => {
                let mut it = xs.iter().rev();
                let mut acc = self.apply(it.next()?)?;
                for x in it {
                    let top = self.apply(x)?;
                    acc = self.target.vcomp_of(&acc, &top)?.to_string();
                }
                Some(acc)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Uniqueness {
    /// Agreement on every enumerated term; certified on the truncation only.
    Equal {
        checked: usize,
    },
    Differs {
        witness: String,
        projection: String,
        other: Option<String>,
    },
    /// The functor is undefined somewhere or not constant on R-classes.
    NotStrict {
        witness: String,
    },
}

/// Compares `t` with π^C: first on generators, then on every enumerated term.
pub fn audit_uniqueness(ctx: &ProjectionContext, u: &Universe, t: &dyn TermFunctor) -> Result<Uniqueness, ProjectionError> {
    let sig = &ctx.sig;
    for g in generators(sig) {
        let p = ctx.anchor(g).to_string();
        let other = t.on_generator(g);
        if other.as_ref() != Some(&p) {
            return Ok(Uniqueness::Differs { witness: SquareTerm::Gen(g).render(sig), projection: p, other });
        }
    }
    for x in u.terms() {
        let (Some(a), Some(b)) = (t.apply(x), t.apply(&sig.canonical(x))) else {
            return Ok(Uniqueness::NotStrict { witness: x.render(sig) });
        };
        if a != b {
            return Ok(Uniqueness::NotStrict { witness: x.render(sig) });
        }
    }
    for x in u.terms() {
        let p = ctx.project(x)?;
        let other = t.apply(x);
        if other.as_ref() != Some(&p) {
            return Ok(Uniqueness::Differs { witness: x.render(sig), projection: p, other });
        }
    }
    Ok(Uniqueness::Equal { checked: u.len() })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RestrictionCheck {
    pub holds: bool,
    pub witness: Option<String>,
}

/// H*π^C restricted to B is the identity: each 2-cell goes to the globular
/// square of the same name and each decoration morphism f to i_f.
pub fn h_star_restriction_check(ctx: &ProjectionContext) -> RestrictionCheck {
    let sig = &ctx.sig;
    let c = &ctx.target;
    let fail = |w: String| RestrictionCheck { holds: false, witness: Some(w) };
    for (p, name) in sig.cells2.iter().enumerate() {
        match ctx.project(&SquareTerm::glob(p as u32)) {
            Ok(s) if &s == name && c.is_globular(&s) => {}
            _ => return fail(name.clone()),
        }
    }
    for (f, name) in sig.dmor.iter().enumerate() {
        let image = ctx.project(&SquareTerm::hid(f as u32)).ok();
        if image.as_deref() != c.hid_of(name) {
            return fail(name.clone());
        }
    }
    RestrictionCheck { holds: true, witness: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeggd::{build_layers, Bounds, FreeTruncation};
    use crate::presentations::*;

    fn ctx() -> ProjectionContext {
        let (g, a) = (FiniteGroup::cyclic_named(2, "g"), FiniteGroup::cyclic_named(3, "a"));
        let b = DecoratedBicategory::new(delooping(&g), double_delooping(&a).unwrap());
        let c = semidirect_double(&g, &a, &trivial_action(&g, &a)).unwrap();
        ProjectionContext::new(&b, &c).unwrap()
    }

    #[test]
    fn canonical_context_passes_all_audits() {
        let x = ctx();
        let u = build_layers(&x.sig, Bounds { word: 3, ..Default::default() }).unwrap();
        let tr = FreeTruncation::from_universe(&x.sig, &u);
        let s = audit_strictness(&x, &u, &tr);
        assert!(s.strict, "{:?}", &s.violations[..s.violations.len().min(3)]);
        assert!(audit_normalization(&x, &u).mismatches.is_empty());
        assert_eq!(audit_surjectivity(&x, &u, 2).surjective_up_to, 2);
        assert_eq!(audit_uniqueness(&x, &u, &ReverseFold::agreeing_with(&x)).unwrap(), Uniqueness::Equal { checked: u.len() });
        assert!(h_star_restriction_check(&x).holds);
    }

    #[test]
    fn swapped_generators_are_caught() {
        let x = ctx();
        let a = |n: &str| Generator::Glob(x.sig.cell2_index(n).unwrap());
        let u = build_layers(&x.sig, Bounds { word: 3, ..Default::default() }).unwrap();
        let tr = FreeTruncation::from_universe(&x.sig, &u);
        let bad = x.with_swapped(a("a0"), a("a1"));
        assert!(!audit_strictness(&bad, &u, &tr).strict);
        let auto = x.with_swapped(a("a1"), a("a2"));
        assert!(audit_strictness(&auto, &u, &tr).strict);
        assert_eq!(h_star_restriction_check(&auto).witness.as_deref(), Some("a1"));
        let mut perturbed = ReverseFold::agreeing_with(&x);
        perturbed.values.insert(a("a2"), "a1".into());
        assert!(matches!(audit_uniqueness(&x, &u, &perturbed).unwrap(), Uniqueness::Differs { witness, .. } if witness == "(g a2)"));
    }
}
