//! Finite categories given by explicit composition tables.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::report::ValidationReport;

/// Domain and codomain of a morphism (or source and target of a 1-cell).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Arrow {
    pub dom: String,
    pub cod: String,
}

impl Arrow {
    pub fn new(dom: impl Into<String>, cod: impl Into<String>) -> Self {
        Arrow { dom: dom.into(), cod: cod.into() }
    }
}

/// A finite category. `compose[(g, f)]` is `g ∘ f`.
///
/// `inverse` is an optional declaration: when an entry `f ↦ h` is present,
/// validation checks that `h` is a two-sided inverse of `f`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FiniteCategory {
    pub objects: BTreeSet<String>,
    pub morphisms: BTreeMap<String, Arrow>,
    pub identity: BTreeMap<String, String>,
    pub compose: BTreeMap<(String, String), String>,
    pub inverse: BTreeMap<String, String>,
}

impl FiniteCategory {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, x: impl Into<String>) {
        self.objects.insert(x.into());
    }

    pub fn add_morphism(&mut self, name: impl Into<String>, dom: impl Into<String>, cod: impl Into<String>) {
        self.morphisms.insert(name.into(), Arrow::new(dom, cod));
    }

    /// Adds an identity morphism `name` on `x` and records it.
    pub fn add_identity(&mut self, x: &str, name: impl Into<String>) {
        let name = name.into();
        self.add_morphism(name.clone(), x, x);
        self.identity.insert(x.to_string(), name);
    }

    pub fn set_composite(&mut self, g: &str, f: &str, h: &str) {
        self.compose.insert((g.to_string(), f.to_string()), h.to_string());
    }

    pub fn dom(&self, f: &str) -> Option<&str> {
        self.morphisms.get(f).map(|a| a.dom.as_str())
    }

    pub fn cod(&self, f: &str) -> Option<&str> {
        self.morphisms.get(f).map(|a| a.cod.as_str())
    }

    pub fn identity_of(&self, x: &str) -> Option<&str> {
        self.identity.get(x).map(String::as_str)
    }

    pub fn is_identity(&self, f: &str) -> bool {
        match self.morphisms.get(f) {
            Some(a) => self.identity.get(&a.dom).map(String::as_str) == Some(f),
            None => false,
        }
    }

    /// `g ∘ f`, if tabulated.
    pub fn composite(&self, g: &str, f: &str) -> Option<&str> {
        self.compose.get(&(g.to_string(), f.to_string())).map(String::as_str)
    }

    pub fn composable(&self, g: &str, f: &str) -> bool {
        match (self.morphisms.get(g), self.morphisms.get(f)) {
            (Some(a), Some(b)) => a.dom == b.cod,
            _ => false,
        }
    }

    /// Morphisms `x → y` in name order.
    pub fn hom<'a>(&'a self, x: &'a str, y: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.morphisms.iter().filter(move |(_, a)| a.dom == x && a.cod == y).map(|(n, _)| n.as_str())
    }

    /// A two-sided inverse of `f`, searched in the table.
    pub fn find_inverse(&self, f: &str) -> Option<&str> {
        let a = self.morphisms.get(f)?;
        let id_dom = self.identity_of(&a.dom)?;
        let id_cod = self.identity_of(&a.cod)?;
        self.hom(&a.cod, &a.dom).find(|h| self.composite(h, f) == Some(id_dom) && self.composite(f, h) == Some(id_cod))
    }

    pub fn is_groupoid(&self) -> bool {
        self.morphisms.keys().all(|f| self.find_inverse(f).is_some())
    }

    /// Every law violation, each with a witness tuple.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        for (f, a) in &self.morphisms {
            for end in [&a.dom, &a.cod] {
                if !self.objects.contains(end) {
                    r.push("morphism boundary", [f.as_str(), end.as_str()]);
                }
            }
        }
        for x in &self.objects {
            match self.identity.get(x) {
                None => r.push("missing identity", [x.as_str()]),
                Some(i) => match self.morphisms.get(i) {
                    Some(a) if &a.dom == x && &a.cod == x => {}
                    _ => r.push("identity boundary", [x.as_str(), i.as_str()]),
                },
            }
        }
        for x in self.identity.keys() {
            if !self.objects.contains(x) {
                r.push("identity on unknown object", [x.as_str()]);
            }
        }
        for ((g, f), h) in &self.compose {
            if !self.composable(g, f) {
                r.push("non-composable pair", [g.as_str(), f.as_str()]);
                continue;
            }
            match self.morphisms.get(h) {
                Some(c) if Some(c.dom.as_str()) == self.dom(f) && Some(c.cod.as_str()) == self.cod(g) => {}
                _ => r.push("composite boundary", [g.as_str(), f.as_str(), h.as_str()]),
            }
        }
        for (g, ga) in &self.morphisms {
            for (f, fa) in &self.morphisms {
                if ga.dom == fa.cod && self.composite(g, f).is_none() {
                    r.push("missing composite", [g.as_str(), f.as_str()]);
                }
            }
        }
        for (f, a) in &self.morphisms {
            if let Some(i) = self.identity.get(&a.dom) {
                if self.composite(f, i) != Some(f.as_str()) {
                    r.push("right identity law", [f.as_str(), i.as_str()]);
                }
            }
            if let Some(i) = self.identity.get(&a.cod) {
                if self.composite(i, f) != Some(f.as_str()) {
                    r.push("left identity law", [i.as_str(), f.as_str()]);
                }
            }
        }
        for ((g, f), gf) in &self.compose {
            if !self.composable(g, f) {
                continue;
            }
            for h in self.morphisms.keys() {
                if !self.composable(h, g) {
                    continue;
                }
                let left = self.composite(h, gf);
                let right = self.composite(h, g).and_then(|hg| self.composite(hg, f));
                if left.is_none() || left != right {
                    r.push("associativity", [h.as_str(), g.as_str(), f.as_str()]);
                }
            }
        }
        for (f, h) in &self.inverse {
            let (Some(a), Some(b)) = (self.morphisms.get(f), self.morphisms.get(h)) else {
                r.push("identity/inverse law", [f.as_str(), h.as_str()]);
                continue;
            };
            if a.dom != b.cod || a.cod != b.dom {
                r.push("identity/inverse law", [f.as_str(), h.as_str()]);
                continue;
            }
            if self.composite(h, f) != self.identity_of(&a.dom) {
                r.push("identity/inverse law", [h.as_str(), f.as_str()]);
            }
            if self.composite(f, h) != self.identity_of(&a.cod) {
                r.push("identity/inverse law", [f.as_str(), h.as_str()]);
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow() -> FiniteCategory {
        let mut c = FiniteCategory::new();
        c.add_object("a");
        c.add_object("b");
        c.add_identity("a", "id_a");
        c.add_identity("b", "id_b");
        c.add_morphism("u", "a", "b");
        for (g, f, h) in [("id_a", "id_a", "id_a"), ("id_b", "id_b", "id_b"), ("u", "id_a", "u"), ("id_b", "u", "u")] {
            c.set_composite(g, f, h);
        }
        c
    }

    #[test]
    fn arrow_category_is_valid() {
        let c = arrow();
        assert!(c.validate().is_valid(), "{:?}", c.validate());
        assert!(!c.is_groupoid());
        assert_eq!(c.find_inverse("id_a"), Some("id_a"));
    }

    #[test]
    fn missing_composite_is_reported() {
        let mut c = arrow();
        c.compose.remove(&("u".to_string(), "id_a".to_string()));
        let r = c.validate();
        assert!(r.mentions("missing composite"));
    }

    #[test]
    fn hom_lists_parallel_morphisms() {
        let c = arrow();
        assert_eq!(c.hom("a", "b").collect::<Vec<_>>(), vec!["u"]);
        assert_eq!(c.hom("b", "a").count(), 0);
    }
}
