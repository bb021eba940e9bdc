//! Vertical and horizontal inverses of free squares over a decorated
//! 2-groupoid, built generator by generator.

use super::signature::Signature;
use super::term::{Generator, SquareTerm};

impl Signature {
    /// `t⁻¹` for vertical composition: generators are inverted in B and B*,
    /// paths are reversed, horizontal words keep their order.
    pub fn vertical_inverse(&self, t: &SquareTerm) -> Option<SquareTerm> {
        match t {
            SquareTerm::Gen(Generator::Glob(p)) => self.v2inv(*p).map(SquareTerm::glob),
            SquareTerm::Gen(Generator::HId(f)) => self.dinv(*f).map(SquareTerm::hid),
            SquareTerm::H(a, b) => Some(SquareTerm::h(self.vertical_inverse(a)?, self.vertical_inverse(b)?)),
            SquareTerm::V(xs) => Some(SquareTerm::V(xs.iter().rev().map(|x| self.vertical_inverse(x)).collect::<Option<_>>()?)),
        }
    }

    /// `t⁻¹` for horizontal composition: `i_f` is its own inverse, 2-cells
    /// are inverted for ∗, words are reversed, paths keep their order.
    pub fn horizontal_inverse(&self, t: &SquareTerm) -> Option<SquareTerm> {
        match t {
            SquareTerm::Gen(Generator::Glob(p)) => self.h2inv(*p).map(SquareTerm::glob),
            SquareTerm::Gen(Generator::HId(_)) => Some(t.clone()),
            SquareTerm::H(a, b) => Some(SquareTerm::h(self.horizontal_inverse(b)?, self.horizontal_inverse(a)?)),
            SquareTerm::V(xs) => Some(SquareTerm::V(xs.iter().map(|x| self.horizontal_inverse(x)).collect::<Option<_>>()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::freeggd::term::parse_term;
    use crate::freeggd::Signature;
    use crate::freeggd::SquareTerm;
    use crate::presentations::*;

    #[test]
    fn inverses_cancel() {
        let b = DecoratedBicategory::new(
            delooping(&FiniteGroup::cyclic_named(2, "g")),
            double_delooping(&FiniteGroup::cyclic_named(3, "a")).unwrap(),
        );
        let s = Signature::new(&b).unwrap();
        let t = parse_term(&s, "(v (id g1) (g a1) (h (id g1) (id g1)) (g a1))").unwrap();
        let vi = s.vertical_inverse(&t).unwrap();
        assert_eq!(vi.render(&s), "(v (g a2) (h (id g1) (id g1)) (g a2) (id g1))");
        let top = s.boundary(&t).unwrap().top;
        assert_eq!(s.canonical(&SquareTerm::V(vec![t.clone(), vi])), s.canonical(&s.vertical_identity(top)));
        let hi = s.horizontal_inverse(&t).unwrap();
        let left = s.boundary(&t).unwrap().left;
        assert_eq!(s.canonical(&SquareTerm::h(t, hi)), s.canonical(&s.hid_normal(left)));
    }
}
