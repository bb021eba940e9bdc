//! The oriented relations R1–R5 and normal forms.
//!
//! * R1: nested vertical paths flatten; vertical identity squares drop out of paths.
//! * R2: adjacent `Glob`s in a path fuse by •, adjacent `HId`s by composition in B*.
//! * R3: adjacent `Glob` leaves of a horizontal word fuse by ∗.
//! * R4: horizontal words are rebracketed to right combs.
//! * R5: horizontal identities `i_f` (and identity 2-cells on identity 1-cells)
//!   are dropped from horizontal words; `i_{1_x}` becomes the identity 2-cell.
//!
//! Every rule removes a node or moves a bracket to the right, so rewriting
//! terminates; normalization is computed bottom-up in a single pass.

use super::signature::Signature;
use super::term::{Boundary, Generator, SquareTerm};

/// The rule set together with the bounds used by [`super::decide::decide_eq`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    /// Maximal term size explored by the bounded congruence search.
    pub size_bound: usize,
    /// Maximal number of search states.
    pub depth_bound: usize,
}

impl Default for RewriteSystem {
    fn default() -> Self {
        RewriteSystem { size_bound: 12, depth_bound: 2000 }
    }
}

impl RewriteSystem {
    pub const RULES: [&'static str; 5] = [
        "R1 path flattening and unit removal",
        "R2 vertical globular and horizontal-identity fusion",
        "R3 horizontal globular fusion",
        "R4 right-comb rebracketing",
        "R5 horizontal unit removal",
    ];
}

impl Signature {
    fn is_vertical_unit(&self, t: &SquareTerm) -> bool {
        match t {
            SquareTerm::Gen(Generator::Glob(p)) => self.is_id2(*p),
            SquareTerm::Gen(Generator::HId(f)) => self.is_did(*f),
            _ => false,
        }
    }

    fn is_horizontal_unit(&self, t: &SquareTerm) -> bool {
        match t {
            SquareTerm::Gen(Generator::HId(_)) => true,
            SquareTerm::Gen(Generator::Glob(p)) => self.is_id2(*p) && self.is_id1(self.c2dom[*p as usize]),
            _ => false,
        }
    }

    /// The normal form of `i_f`.
    pub fn hid_normal(&self, f: u32) -> SquareTerm {
        if self.is_did(f) {
            SquareTerm::glob(self.id2[self.id1[self.ddom[f as usize] as usize] as usize])
        } else {
            SquareTerm::hid(f)
        }
    }

    /// R2 on two vertically adjacent generators, `a` on top.
    fn fuse_vertical(&self, a: &SquareTerm, b: &SquareTerm) -> Option<SquareTerm> {
        match (a, b) {
            (SquareTerm::Gen(Generator::Glob(p)), SquareTerm::Gen(Generator::Glob(q))) => self.v2(*q, *p).map(SquareTerm::glob),
            (SquareTerm::Gen(Generator::HId(f)), SquareTerm::Gen(Generator::HId(g))) => self.dcomp(*g, *f).map(|h| self.hid_normal(h)),
            _ => None,
        }
    }

    fn normalize_path(&self, items: Vec<SquareTerm>, b: Boundary) -> SquareTerm {
        let mut out: Vec<SquareTerm> = Vec::with_capacity(items.len());
        let mut flat = Vec::with_capacity(items.len());
        for x in items {
            match x {
                SquareTerm::V(ys) => flat.extend(ys),
                y => flat.push(y),
            }
        }
        // Adjacent elements of `out` never fuse, so one pass suffices.
        for x in flat {
            if self.is_vertical_unit(&x) {
                continue;
            }
            match out.last().and_then(|last| self.fuse_vertical(last, &x)) {
                Some(y) => {
                    out.pop();
                    if !self.is_vertical_unit(&y) {
                        out.push(y);
                    }
                }
                None => out.push(x),
            }
        }
        match out.len() {
            0 => self.vertical_identity(b.top),
            1 => out.pop().expect("one element"),
            _ => SquareTerm::V(out),
        }
    }

    fn normalize_word(&self, leaves: Vec<SquareTerm>, b: Boundary) -> SquareTerm {
        let mut out: Vec<SquareTerm> = Vec::with_capacity(leaves.len());
        for x in leaves {
            if self.is_horizontal_unit(&x) {
                continue;
            }
            if let (Some(SquareTerm::Gen(Generator::Glob(p))), SquareTerm::Gen(Generator::Glob(q))) = (out.last(), &x) {
                if let Some(r) = self.h2(*q, *p) {
                    out.pop();
                    let y = SquareTerm::glob(r);
                    if !self.is_horizontal_unit(&y) {
                        out.push(y);
                    }
                    continue;
                }
            }
            out.push(x);
        }
        if out.is_empty() {
            return self.hid_normal(b.left);
        }
        SquareTerm::h_comb(out)
    }

    /// Normal form under R1–R5. Requires a boundary-valid term.
    pub fn normalize(&self, t: &SquareTerm) -> SquareTerm {
        match t {
            SquareTerm::Gen(Generator::HId(f)) => self.hid_normal(*f),
            SquareTerm::Gen(_) => t.clone(),
            SquareTerm::V(xs) => {
                let b = self.boundary(t).expect("boundary-valid term");
                self.normalize_path(xs.iter().map(|x| self.normalize(x)).collect(), b)
            }
            SquareTerm::H(..) => {
                let b = self.boundary(t).expect("boundary-valid term");
                let mut leaves = Vec::new();
                for l in t.h_leaves() {
                    match self.normalize(l) {
                        n @ SquareTerm::H(..) => leaves.extend(n.h_leaves().into_iter().cloned()),
                        n => leaves.push(n),
                    }
                }
                self.normalize_word(leaves, b)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeggd::term::parse_term;
    use crate::presentations::*;

    fn sig() -> Signature {
        let b = DecoratedBicategory::new(
            delooping(&FiniteGroup::cyclic_named(2, "g")),
            double_delooping(&FiniteGroup::cyclic_named(3, "a")).unwrap(),
        );
        Signature::new(&b).unwrap()
    }

    fn norm(s: &Signature, text: &str) -> String {
        s.normalize(&parse_term(s, text).unwrap()).render(s)
    }

    #[test]
    fn globular_fusion() {
        let s = sig();
        assert_eq!(norm(&s, "(v (g a1) (g a1))"), "(g a2)");
        assert_eq!(norm(&s, "(h (g a1) (g a1))"), "(g a2)");
        assert_eq!(norm(&s, "(v (g a1) (g a2))"), "(g a0)");
    }

    #[test]
    fn horizontal_identity_fusion_and_units() {
        let s = sig();
        assert_eq!(norm(&s, "(v (id g1) (id g1))"), "(g a0)");
        assert_eq!(norm(&s, "(id g0)"), "(g a0)");
        assert_eq!(norm(&s, "(h (id g1) (id g1))"), "(id g1)");
        assert_eq!(norm(&s, "(v (id g1) (g a0) (g a1) (g a2) (id g1) (g a1))"), "(g a1)");
        assert_eq!(norm(&s, "(v (id g1) (v (g a1) (id g1)))"), "(v (id g1) (g a1) (id g1))");
    }

    #[test]
    fn words_become_right_combs() {
        let s = sig();
        let t = "(h (h (v (id g1) (g a1) (id g1)) (g a1)) (g a1))";
        assert_eq!(norm(&s, t), "(h (v (id g1) (g a1) (id g1)) (g a2))");
    }
}
