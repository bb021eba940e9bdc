//! The canonical double projection π^C: Q_B → γC, evaluated on free terms by
//! structural recursion, together with audits of its defining properties.

mod audit;

use thiserror::Error;

pub use audit::*;

use crate::doublecat::{gamma, h_star};
use crate::freeggd::{Generator, Sided, Signature, SignatureError, SquareTerm, TermModel, Word};
use crate::presentations::{DecoratedBicategory, DoubleCategory};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProjectionError {
    #[error("H*C differs from B: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("no anchor for generator {0}")]
    MissingAnchor(String),
    #[error("squares {0} and {1} are not composable in C")]
    NotComposable(String, String),
    #[error("unknown square {0}")]
    UnknownSquare(String),
}

/// A square of C seen with its vertical sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CSquare {
    pub name: String,
    pub left: String,
    pub right: String,
}

impl CSquare {
    pub fn of(c: &DoubleCategory, name: &str) -> Result<Self, ProjectionError> {
        let f = c.frame(name).ok_or_else(|| ProjectionError::UnknownSquare(name.into()))?;
        Ok(CSquare { name: name.into(), left: f.left.clone(), right: f.right.clone() })
    }
}

impl Sided for CSquare {
    type Side = String;
    fn source(&self) -> String {
        self.left.clone()
    }
    fn target(&self) -> String {
        self.right.clone()
    }
}

/// q^C: the horizontal composite of a word of squares of C, following its
/// bracketing.
pub fn q_eval(c: &DoubleCategory, w: &Word<CSquare>) -> Result<String, ProjectionError> {
    w.fold(&mut |x: &CSquare| Ok(x.name.clone()), &mut |l: String, r: String| hcomp_pair(c, &l, &r))
}

/// `l` to the left of `r`.
fn hcomp_pair(c: &DoubleCategory, l: &str, r: &str) -> Result<String, ProjectionError> {
    c.hcomp_of(r, l).map(str::to_string).ok_or_else(|| ProjectionError::NotComposable(l.into(), r.into()))
}

/// `t` on top of `b`.
fn vcomp_pair(c: &DoubleCategory, t: &str, b: &str) -> Result<String, ProjectionError> {
    c.vcomp_of(b, t).map(str::to_string).ok_or_else(|| ProjectionError::NotComposable(t.into(), b.into()))
}

/// The horizontal word of a term: `H` nodes become word nodes.
pub fn term_word(t: &SquareTerm) -> Word<&SquareTerm> {
    match t {
        SquareTerm::H(a, b) => Word::Node(Box::new(term_word(a)), Box::new(term_word(b))),
        x => Word::Leaf(x),
    }
}

/// B, the target γC with H*γC = B, and the identification of the generators
/// with globular and horizontal identity squares of γC.
#[derive(Clone, Debug)]
pub struct ProjectionContext {
    pub base: DecoratedBicategory,
    pub target: DoubleCategory,
    pub sig: Signature,
    /// Square of C for each 2-cell of B, by 2-cell index.
    pub glob_anchor: Vec<String>,
    /// Square of C for each decoration morphism, by morphism index.
    pub hid_anchor: Vec<String>,
    /// Whether C had squares outside γC, which were dropped.
    pub gamma_substituted: bool,
}

impl ProjectionContext {
    /// Requires H*C = B; replaces C by γC and anchors every 2-cell φ at the
    /// globular square φ and every decoration morphism f at i_f.
    pub fn new(base: &DecoratedBicategory, c: &DoubleCategory) -> Result<Self, ProjectionError> {
        let hs = h_star(c);
        if &hs != base {
            return Err(ProjectionError::Hypothesis(describe_difference(base, &hs)));
        }
        let target = gamma(c);
        let gamma_substituted = target != *c;
        let sig = Signature::new(base)?;
        let glob_anchor = sig.cells2.clone();
        let hid_anchor = sig
            .dmor
            .iter()
            .map(|f| target.hid_of(f).map(str::to_string).ok_or_else(|| ProjectionError::MissingAnchor(f.clone())))
            .collect::<Result<_, _>>()?;
        Ok(ProjectionContext { base: base.clone(), target, sig, glob_anchor, hid_anchor, gamma_substituted })
    }

    /// The same context with the anchors of two generators exchanged.
    pub fn with_swapped(&self, a: Generator, b: Generator) -> Self {
        let mut out = self.clone();
        let va = out.anchor(a).to_string();
        let vb = out.anchor(b).to_string();
        *out.anchor_mut(a) = vb;
        *out.anchor_mut(b) = va;
        out
    }

    pub fn anchor(&self, g: Generator) -> &str {
        match g {
            Generator::Glob(p) => &self.glob_anchor[p as usize],
            Generator::HId(f) => &self.hid_anchor[f as usize],
        }
    }

    fn anchor_mut(&mut self, g: Generator) -> &mut String {
        match g {
            Generator::Glob(p) => &mut self.glob_anchor[p as usize],
            Generator::HId(f) => &mut self.hid_anchor[f as usize],
        }
    }

    /// π^C(t): generators go to their anchors, words to q^C of the projected
    /// leaves, paths to vertical composites in C.
    pub fn project(&self, t: &SquareTerm) -> Result<String, ProjectionError> {
        match t {
            SquareTerm::Gen(g) => Ok(self.anchor(*g).to_string()),
            SquareTerm::H(..) => {
                let mut err = None;
                let w = term_word(t).map(&mut |leaf: &&SquareTerm| match self.project(leaf).and_then(|s| CSquare::of(&self.target, &s)) {
                    Ok(s) => s,
                    Err(e) => {
                        err.get_or_insert(e);
                        CSquare { name: String::new(), left: String::new(), right: String::new() }
                    }
                });
                match err {
                    Some(e) => Err(e),
                    None => q_eval(&self.target, &w),
                }
            }
            SquareTerm::V(xs) => {
                let mut acc: Option<String> = None;
                for x in xs {
                    let s = self.project(x)?;
                    acc = Some(match acc {
                        None => s,
                        Some(a) => vcomp_pair(&self.target, &a, &s)?,
                    });
                }
                acc.ok_or_else(|| ProjectionError::UnknownSquare("empty path".into()))
            }
        }
    }
}

impl TermModel for ProjectionContext {
    fn name(&self) -> String {
        "projection into C".into()
    }

    fn eval(&self, t: &SquareTerm) -> Option<String> {
        self.project(t).ok()
    }
}

fn describe_difference(b: &DecoratedBicategory, hs: &DecoratedBicategory) -> String {
    if b.decoration != hs.decoration {
        return "decorations differ".into();
    }
    let (x, y) = (&b.bicat, &hs.bicat);
    let parts: [(&str, bool); 8] = [
        ("0-cells", x.cells0 == y.cells0),
        ("1-cells", x.cells1 == y.cells1),
        ("1-cell identities", x.identity1 == y.identity1),
        ("1-cell composition", x.hcompose1 == y.hcompose1),
        ("2-cells", x.cells2 == y.cells2),
        ("2-cell identities", x.identity2 == y.identity2),
        ("vertical 2-cell composition", x.vcompose2 == y.vcompose2),
        ("horizontal 2-cell composition", x.hcompose2 == y.hcompose2),
    ];
    let diff: Vec<&str> = parts.iter().filter(|(_, same)| !same).map(|(n, _)| *n).collect();
    format!("{} differ", diff.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeggd::parse_term;
    use crate::presentations::*;

    fn ctx() -> ProjectionContext {
        let (g, a) = (FiniteGroup::cyclic_named(2, "g"), FiniteGroup::cyclic_named(3, "a"));
        let b = DecoratedBicategory::new(delooping(&g), double_delooping(&a).unwrap());
        let c = semidirect_double(&g, &a, &trivial_action(&g, &a)).unwrap();
        ProjectionContext::new(&b, &c).unwrap()
    }

    #[test]
    fn generators_and_composites() {
        let x = ctx();
        let p = |s: &str| x.project(&parse_term(&x.sig, s).unwrap()).unwrap();
        assert_eq!(p("(g a1)"), "a1");
        assert_eq!(p("(v (g a1) (g a1))"), "a2");
        assert_eq!(p("(h (g a1) (g a1))"), "a2");
        assert_eq!(p("(id g1)"), x.target.hid_of("g1").unwrap());
        assert_eq!(p("(v (id g1) (id g1))"), x.target.hid_of("g0").unwrap());
    }

    #[test]
    fn q_eval_ignores_bracketing() {
        let x = ctx();
        let sq = |n: &str| Word::Leaf(CSquare::of(&x.target, n).unwrap());
        let l = Word::Node(Box::new(Word::Node(Box::new(sq("a1")), Box::new(sq("a2")))), Box::new(sq("a1")));
        let r = Word::Node(Box::new(sq("a1")), Box::new(Word::Node(Box::new(sq("a2")), Box::new(sq("a1")))));
        assert_eq!(q_eval(&x.target, &l).unwrap(), q_eval(&x.target, &r).unwrap());
        assert_eq!(q_eval(&x.target, &sq("a2")).unwrap(), "a2");
    }

    #[test]
    fn wrong_base_is_rejected() {
        let (g, a) = (FiniteGroup::cyclic_named(2, "g"), FiniteGroup::cyclic_named(3, "a"));
        let b = DecoratedBicategory::new(delooping(&g), double_delooping(&FiniteGroup::cyclic_named(2, "a")).unwrap());
        let c = semidirect_double(&g, &a, &trivial_action(&g, &a)).unwrap();
        assert!(matches!(ProjectionContext::new(&b, &c), Err(ProjectionError::Hypothesis(_))));
    }
}
