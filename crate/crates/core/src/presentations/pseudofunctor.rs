//! Morphisms of decorated bicategories (strict, so pseudofunctors are 2-functors).

use std::collections::BTreeMap;

use serde::Serialize;

use super::report::ValidationReport;
use super::two_category::DecoratedBicategory;

/// A decorated pseudofunctor G: (B*, B) → (B'*, B').
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DecoratedPseudofunctor {
    pub on_objects: BTreeMap<String, String>,
    pub on_decoration: BTreeMap<String, String>,
    pub on_cells1: BTreeMap<String, String>,
    pub on_cells2: BTreeMap<String, String>,
}

fn image<'a>(m: &'a BTreeMap<String, String>, x: &str) -> Option<&'a str> {
    m.get(x).map(String::as_str)
}

impl DecoratedPseudofunctor {
    pub fn identity(b: &DecoratedBicategory) -> Self {
        let diag = |it: &mut dyn Iterator<Item = &String>| it.map(|x| (x.clone(), x.clone())).collect();
        DecoratedPseudofunctor {
            on_objects: diag(&mut b.decoration.objects.iter()),
            on_decoration: diag(&mut b.decoration.morphisms.keys()),
            on_cells1: diag(&mut b.bicat.cells1.keys()),
            on_cells2: diag(&mut b.bicat.cells2.keys()),
        }
    }

    /// `second ∘ self`.
    pub fn then(&self, second: &DecoratedPseudofunctor) -> Self {
        let comp = |a: &BTreeMap<String, String>, b: &BTreeMap<String, String>| {
            a.iter().filter_map(|(k, v)| b.get(v).map(|w| (k.clone(), w.clone()))).collect()
        };
        DecoratedPseudofunctor {
            on_objects: comp(&self.on_objects, &second.on_objects),
            on_decoration: comp(&self.on_decoration, &second.on_decoration),
            on_cells1: comp(&self.on_cells1, &second.on_cells1),
            on_cells2: comp(&self.on_cells2, &second.on_cells2),
        }
    }

    pub fn validate(&self, src: &DecoratedBicategory, tgt: &DecoratedBicategory) -> ValidationReport {
        let mut r = ValidationReport::default();
        let (d, d2) = (&src.decoration, &tgt.decoration);
        let (s, s2) = (&src.bicat, &tgt.bicat);
        let ob = |x: &str| image(&self.on_objects, x);
        for x in &d.objects {
            match ob(x) {
                Some(y) if d2.objects.contains(y) => {}
                _ => r.push("object map", [x.as_str()]),
            }
            if ob(x).is_some() && d.identity_of(x).and_then(|i| image(&self.on_decoration, i)) != ob(x).and_then(|y| d2.identity_of(y)) {
                r.push("decoration identity", [x.as_str()]);
            }
            if ob(x).is_some() && s.id1(x).and_then(|i| image(&self.on_cells1, i)) != ob(x).and_then(|y| s2.id1(y)) {
                r.push("1-cell identity", [x.as_str()]);
            }
        }
        for (f, a) in &d.morphisms {
            let ok = image(&self.on_decoration, f)
                .and_then(|g| d2.morphisms.get(g))
                .is_some_and(|b| Some(b.dom.as_str()) == ob(&a.dom) && Some(b.cod.as_str()) == ob(&a.cod));
            if !ok {
                r.push("decoration boundary", [f.as_str()]);
            }
        }
        for ((g, f), h) in &d.compose {
            let lhs = image(&self.on_decoration, h);
            let rhs = match (image(&self.on_decoration, g), image(&self.on_decoration, f)) {
                (Some(x), Some(y)) => d2.composite(x, y),
                _ => None,
            };
            if lhs.is_none() || lhs != rhs {
                r.push("decoration composition", [g.as_str(), f.as_str()]);
            }
        }
        for (a, aa) in &s.cells1 {
            let ok = image(&self.on_cells1, a)
                .and_then(|b| s2.cells1.get(b))
                .is_some_and(|bb| Some(bb.dom.as_str()) == ob(&aa.dom) && Some(bb.cod.as_str()) == ob(&aa.cod));
            if !ok {
                r.push("1-cell boundary", [a.as_str()]);
            }
        }
        for ((b, a), ba) in &s.hcompose1 {
            let lhs = image(&self.on_cells1, ba);
            let rhs = match (image(&self.on_cells1, b), image(&self.on_cells1, a)) {
                (Some(x), Some(y)) => s2.hcomp1(x, y),
                _ => None,
            };
            if lhs.is_none() || lhs != rhs {
                r.push("1-cell composition", [b.as_str(), a.as_str()]);
            }
        }
        for (phi, pa) in &s.cells2 {
            let ok = image(&self.on_cells2, phi).and_then(|p| s2.cells2.get(p)).is_some_and(|qa| {
                Some(qa.dom.as_str()) == image(&self.on_cells1, &pa.dom) && Some(qa.cod.as_str()) == image(&self.on_cells1, &pa.cod)
            });
            if !ok {
                r.push("2-cell boundary", [phi.as_str()]);
            }
        }
        for (a, i) in &s.identity2 {
            if image(&self.on_cells2, i) != image(&self.on_cells1, a).and_then(|b| s2.id2(b)) {
                r.push("2-cell identity", [a.as_str()]);
            }
        }
        for (table, table2, law) in
            [(&s.vcompose2, &s2.vcompose2, "vertical 2-cell composition"), (&s.hcompose2, &s2.hcompose2, "horizontal 2-cell composition")]
        {
            for ((psi, phi), c) in table {
                let lhs = image(&self.on_cells2, c);
                let rhs = match (image(&self.on_cells2, psi), image(&self.on_cells2, phi)) {
                    (Some(x), Some(y)) => table2.get(&(x.to_string(), y.to_string())).map(String::as_str),
                    _ => None,
                };
                if lhs.is_none() || lhs != rhs {
                    r.push(law, [psi.as_str(), phi.as_str()]);
                }
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::builders::{delooping, double_delooping};
    use crate::presentations::group::FiniteGroup;

    fn omega(g: usize, a: usize) -> DecoratedBicategory {
        DecoratedBicategory::new(delooping(&FiniteGroup::cyclic(g)), double_delooping(&FiniteGroup::cyclic(a)).unwrap())
    }

    #[test]
    fn identity_validates_and_quotient_map_validates() {
        let b4 = omega(4, 3);
        let b2 = omega(2, 3);
        assert!(DecoratedPseudofunctor::identity(&b4).validate(&b4, &b4).is_valid());
        let mut q = DecoratedPseudofunctor::identity(&b4);
        for k in 0..4 {
            q.on_decoration.insert(k.to_string(), (k % 2).to_string());
        }
        assert!(q.validate(&b4, &b2).is_valid());
        // Z4 → Z2 sending 1 to 1 but 2 to 1 is not a homomorphism.
        q.on_decoration.insert("2".into(), "1".into());
        assert!(q.validate(&b4, &b2).mentions("decoration composition"));
    }
}
