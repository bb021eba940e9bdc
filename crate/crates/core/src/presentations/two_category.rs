//! Strict 2-categories and decorated bicategories.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::category::{Arrow, FiniteCategory};
use super::report::ValidationReport;

/// A finite strict 2-category.
///
/// `hcompose1[(b, a)] = b ∘ a`, `vcompose2[(ψ, φ)] = ψ • φ` (φ first) and
/// `hcompose2[(ψ, φ)] = ψ ∗ φ` with φ on the left.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Strict2Category {
    pub cells0: BTreeSet<String>,
    pub cells1: BTreeMap<String, Arrow>,
    pub identity1: BTreeMap<String, String>,
    pub hcompose1: BTreeMap<(String, String), String>,
    pub cells2: BTreeMap<String, Arrow>,
    pub identity2: BTreeMap<String, String>,
    pub vcompose2: BTreeMap<(String, String), String>,
    pub hcompose2: BTreeMap<(String, String), String>,
}

fn get<'a>(m: &'a BTreeMap<(String, String), String>, a: &str, b: &str) -> Option<&'a str> {
    m.get(&(a.to_string(), b.to_string())).map(String::as_str)
}

impl Strict2Category {
    /// The underlying category of 0- and 1-cells.
    pub fn one_category(&self) -> FiniteCategory {
        FiniteCategory {
            objects: self.cells0.clone(),
            morphisms: self.cells1.clone(),
            identity: self.identity1.clone(),
            compose: self.hcompose1.clone(),
            inverse: BTreeMap::new(),
        }
    }

    pub fn hcomp1(&self, b: &str, a: &str) -> Option<&str> {
        get(&self.hcompose1, b, a)
    }

    pub fn vcomp2(&self, psi: &str, phi: &str) -> Option<&str> {
        get(&self.vcompose2, psi, phi)
    }

    pub fn hcomp2(&self, psi: &str, phi: &str) -> Option<&str> {
        get(&self.hcompose2, psi, phi)
    }

    pub fn id1(&self, x: &str) -> Option<&str> {
        self.identity1.get(x).map(String::as_str)
    }

    pub fn id2(&self, a: &str) -> Option<&str> {
        self.identity2.get(a).map(String::as_str)
    }

    fn src_of_2cell(&self, phi: &str) -> Option<&Arrow> {
        let a = self.cells2.get(phi)?;
        self.cells1.get(&a.dom)
    }

    fn v_composable(&self, psi: &str, phi: &str) -> bool {
        match (self.cells2.get(psi), self.cells2.get(phi)) {
            (Some(p), Some(q)) => q.cod == p.dom,
            _ => false,
        }
    }

    fn h_composable(&self, psi: &str, phi: &str) -> bool {
        match (self.src_of_2cell(psi), self.src_of_2cell(phi)) {
            (Some(p), Some(q)) => q.cod == p.dom,
            _ => false,
        }
    }

    /// Is `phi` invertible for both • and ∗?
    pub fn two_cell_invertible(&self, phi: &str) -> bool {
        let Some(a) = self.cells2.get(phi) else { return false };
        let v = self.cells2.iter().any(|(psi, b)| {
            b.dom == a.cod && b.cod == a.dom && self.vcomp2(psi, phi) == self.id2(&a.dom) && self.vcomp2(phi, psi) == self.id2(&a.cod)
        });
        let Some(one) = self.cells1.get(&a.dom) else { return false };
        let h = self.cells2.keys().any(|psi| {
            self.src_of_2cell(psi).is_some_and(|s| s.dom == one.cod && s.cod == one.dom)
                && self.hcomp2(psi, phi).is_some_and(|c| self.is_identity2_of_identity(c))
                && self.hcomp2(phi, psi).is_some_and(|c| self.is_identity2_of_identity(c))
        });
        v && h
    }

    fn is_identity2_of_identity(&self, c: &str) -> bool {
        self.cells2.get(c).is_some_and(|a| {
            a.dom == a.cod
                && self.id2(&a.dom) == Some(c)
                && self.cells1.get(&a.dom).is_some_and(|one| self.id1(&one.dom) == Some(a.dom.as_str()))
        })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        r.absorb("1-cells", self.one_category().validate());
        for (phi, a) in &self.cells2 {
            match (self.cells1.get(&a.dom), self.cells1.get(&a.cod)) {
                (Some(x), Some(y)) if x.dom == y.dom && x.cod == y.cod => {}
                _ => r.push("2-cell boundary not parallel", [phi.as_str(), a.dom.as_str(), a.cod.as_str()]),
            }
        }
        for a in self.cells1.keys() {
            match self.identity2.get(a) {
                None => r.push("missing identity 2-cell", [a.as_str()]),
                Some(i) => match self.cells2.get(i) {
                    Some(b) if &b.dom == a && &b.cod == a => {}
                    _ => r.push("identity 2-cell boundary", [a.as_str(), i.as_str()]),
                },
            }
        }
        self.validate_vertical(&mut r);
        self.validate_horizontal(&mut r);
        self.validate_interchange(&mut r);
        r
    }

    fn validate_vertical(&self, r: &mut ValidationReport) {
        for ((psi, phi), chi) in &self.vcompose2 {
            if !self.v_composable(psi, phi) {
                r.push("non-composable pair (vertical 2-cells)", [psi.as_str(), phi.as_str()]);
                continue;
            }
            let ok = self.cells2.get(chi).is_some_and(|c| {
                Some(&c.dom) == self.cells2.get(phi).map(|a| &a.dom) && Some(&c.cod) == self.cells2.get(psi).map(|a| &a.cod)
            });
            if !ok {
                r.push("vertical composite boundary", [psi.as_str(), phi.as_str(), chi.as_str()]);
            }
        }
        for psi in self.cells2.keys() {
            for phi in self.cells2.keys() {
                if self.v_composable(psi, phi) && self.vcomp2(psi, phi).is_none() {
                    r.push("missing vertical composite", [psi.as_str(), phi.as_str()]);
                }
            }
        }
        for (phi, a) in &self.cells2 {
            if let Some(i) = self.id2(&a.dom) {
                if self.vcomp2(phi, i) != Some(phi.as_str()) {
                    r.push("vertical identity law", [phi.as_str(), i]);
                }
            }
            if let Some(i) = self.id2(&a.cod) {
                if self.vcomp2(i, phi) != Some(phi.as_str()) {
                    r.push("vertical identity law", [i, phi.as_str()]);
                }
            }
        }
        for ((psi, phi), c) in &self.vcompose2 {
            for chi in self.cells2.keys() {
                if !self.v_composable(chi, psi) || !self.v_composable(psi, phi) {
                    continue;
                }
                let left = self.vcomp2(chi, c);
                let right = self.vcomp2(chi, psi).and_then(|d| self.vcomp2(d, phi));
                if left.is_none() || left != right {
                    r.push("vertical associativity", [chi.as_str(), psi.as_str(), phi.as_str()]);
                }
            }
        }
    }

    fn validate_horizontal(&self, r: &mut ValidationReport) {
        for ((psi, phi), chi) in &self.hcompose2 {
            if !self.h_composable(psi, phi) {
                r.push("non-composable pair (horizontal 2-cells)", [psi.as_str(), phi.as_str()]);
                continue;
            }
            let (p, q) = (&self.cells2[psi], &self.cells2[phi]);
            let ok = self.cells2.get(chi).is_some_and(|c| {
                Some(c.dom.as_str()) == self.hcomp1(&p.dom, &q.dom) && Some(c.cod.as_str()) == self.hcomp1(&p.cod, &q.cod)
            });
            if !ok {
                r.push("horizontal composite boundary", [psi.as_str(), phi.as_str(), chi.as_str()]);
            }
        }
        for psi in self.cells2.keys() {
            for phi in self.cells2.keys() {
                if self.h_composable(psi, phi) && self.hcomp2(psi, phi).is_none() {
                    r.push("missing horizontal composite", [psi.as_str(), phi.as_str()]);
                }
            }
        }
        for phi in self.cells2.keys() {
            let Some(one) = self.src_of_2cell(phi) else { continue };
            if let Some(i) = self.id1(&one.cod).and_then(|u| self.id2(u)) {
                if self.hcomp2(i, phi) != Some(phi.as_str()) {
                    r.push("horizontal identity law", [i, phi.as_str()]);
                }
            }
            if let Some(i) = self.id1(&one.dom).and_then(|u| self.id2(u)) {
                if self.hcomp2(phi, i) != Some(phi.as_str()) {
                    r.push("horizontal identity law", [phi.as_str(), i]);
                }
            }
        }
        for ((psi, phi), c) in &self.hcompose2 {
            if !self.h_composable(psi, phi) {
                continue;
            }
            for chi in self.cells2.keys() {
                if !self.h_composable(chi, psi) {
                    continue;
                }
                let left = self.hcomp2(chi, c);
                let right = self.hcomp2(chi, psi).and_then(|d| self.hcomp2(d, phi));
                if left.is_none() || left != right {
                    r.push("horizontal associativity", [chi.as_str(), psi.as_str(), phi.as_str()]);
                }
            }
        }
        for ((b, a), ba) in &self.hcompose1 {
            let (Some(ib), Some(ia)) = (self.id2(b), self.id2(a)) else { continue };
            if self.hcomp2(ib, ia) != self.id2(ba) {
                r.push("horizontal composite of identities", [b.as_str(), a.as_str()]);
            }
        }
    }

    fn validate_interchange(&self, r: &mut ValidationReport) {
        let vpairs: Vec<(&str, &str, &str)> = self
            .vcompose2
            .iter()
            .filter(|((p, q), _)| self.v_composable(p, q))
            .map(|((p, q), c)| (p.as_str(), q.as_str(), c.as_str()))
            .collect();
        for &(phi2, phi1, phi21) in &vpairs {
            for &(psi2, psi1, psi21) in &vpairs {
                if !self.h_composable(psi1, phi1) {
                    continue;
                }
                let left = self.hcomp2(psi21, phi21);
                let right = match (self.hcomp2(psi2, phi2), self.hcomp2(psi1, phi1)) {
                    (Some(top), Some(bottom)) => self.vcomp2(top, bottom),
                    _ => None,
                };
                if left.is_none() || left != right {
                    r.push("interchange", [psi2, psi1, phi2, phi1]);
                }
            }
        }
    }
}

/// A decorated bicategory (B*, B): a decoration category whose objects are
/// the 0-cells of a strict 2-category.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecoratedBicategory {
    pub decoration: FiniteCategory,
    pub bicat: Strict2Category,
}

impl DecoratedBicategory {
    pub fn new(decoration: FiniteCategory, bicat: Strict2Category) -> Self {
        DecoratedBicategory { decoration, bicat }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        if self.decoration.objects != self.bicat.cells0 {
            let diff: Vec<&str> = self.decoration.objects.symmetric_difference(&self.bicat.cells0).map(String::as_str).collect();
            r.push("decoration objects differ from 0-cells", diff);
        }
        r.absorb("decoration", self.decoration.validate());
        r.absorb("bicategory", self.bicat.validate());
        r
    }

    /// Decoration is a groupoid and every 2-cell is invertible for both
    /// compositions.
    pub fn is_decorated_2groupoid(&self) -> bool {
        self.decoration.is_groupoid()
            && self.bicat.one_category().is_groupoid()
            && self.bicat.cells2.keys().all(|phi| self.bicat.two_cell_invertible(phi))
    }
}
