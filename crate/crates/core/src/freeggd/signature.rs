//! Index-based view of a decorated bicategory used by the free construction.

use std::collections::HashMap;

use thiserror::Error;

use crate::presentations::DecoratedBicategory;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignatureError {
    #[error("decorated bicategory is invalid: {0}")]
    Invalid(String),
}

/// Dense tables for B* (decoration morphisms `d*`) and B (1-cells `c1*`,
/// 2-cells `c2*`). All compositions follow the `(second, first)` convention.
#[derive(Clone, Debug)]
pub struct Signature {
    pub objects: Vec<String>,
    pub dmor: Vec<String>,
    pub ddom: Vec<u32>,
    pub dcod: Vec<u32>,
    pub did: Vec<u32>,
    dcomp: Vec<Option<u32>>,
    pub cells1: Vec<String>,
    pub c1src: Vec<u32>,
    pub c1tgt: Vec<u32>,
    pub id1: Vec<u32>,
    h1: Vec<Option<u32>>,
    pub cells2: Vec<String>,
    pub c2dom: Vec<u32>,
    pub c2cod: Vec<u32>,
    pub id2: Vec<u32>,
    v2: Vec<Option<u32>>,
    h2: Vec<Option<u32>>,
    /// Non-trivial factorizations `f = f2 ∘ f1` of each decoration morphism.
    factorizations: Vec<Vec<(u32, u32)>>,
    dpos: HashMap<String, u32>,
    c2pos: HashMap<String, u32>,
}

fn positions(names: &[String]) -> HashMap<String, u32> {
    names.iter().enumerate().map(|(i, n)| (n.clone(), i as u32)).collect()
}

fn table(names: &HashMap<String, u32>, n: usize, entries: &std::collections::BTreeMap<(String, String), String>) -> Vec<Option<u32>> {
    let mut t = vec![None; n * n];
    for ((a, b), c) in entries {
        t[names[a] as usize * n + names[b] as usize] = Some(names[c]);
    }
    t
}

impl Signature {
    pub fn new(b: &DecoratedBicategory) -> Result<Self, SignatureError> {
        let report = b.validate();
        if !report.is_valid() {
            let first = &report.violations[0];
            return Err(SignatureError::Invalid(format!("{} {:?}", first.law, first.witness)));
        }
        let objects: Vec<String> = b.decoration.objects.iter().cloned().collect();
        let opos = positions(&objects);
        let dmor: Vec<String> = b.decoration.morphisms.keys().cloned().collect();
        let dpos = positions(&dmor);
        let cells1: Vec<String> = b.bicat.cells1.keys().cloned().collect();
        let c1pos = positions(&cells1);
        let cells2: Vec<String> = b.bicat.cells2.keys().cloned().collect();
        let c2pos = positions(&cells2);
        let d = &b.decoration;
        let s = &b.bicat;
        let ddom = dmor.iter().map(|f| opos[&d.morphisms[f].dom]).collect();
        let dcod = dmor.iter().map(|f| opos[&d.morphisms[f].cod]).collect();
        let did = objects.iter().map(|x| dpos[&d.identity[x]]).collect();
        let c1src = cells1.iter().map(|a| opos[&s.cells1[a].dom]).collect();
        let c1tgt = cells1.iter().map(|a| opos[&s.cells1[a].cod]).collect();
        let id1 = objects.iter().map(|x| c1pos[&s.identity1[x]]).collect();
        let c2dom = cells2.iter().map(|p| c1pos[&s.cells2[p].dom]).collect();
        let c2cod = cells2.iter().map(|p| c1pos[&s.cells2[p].cod]).collect();
        let id2 = cells1.iter().map(|a| c2pos[&s.identity2[a]]).collect();
        let mut sig = Signature {
            dcomp: table(&dpos, dmor.len(), &d.compose),
            h1: table(&c1pos, cells1.len(), &s.hcompose1),
            v2: table(&c2pos, cells2.len(), &s.vcompose2),
            h2: table(&c2pos, cells2.len(), &s.hcompose2),
            factorizations: Vec::new(),
            objects,
            dmor,
            ddom,
            dcod,
            did,
            cells1,
            c1src,
            c1tgt,
            id1,
            cells2,
            c2dom,
            c2cod,
            id2,
            dpos,
            c2pos,
        };
        sig.factorizations = (0..sig.dmor.len() as u32)
            .map(|f| {
                let mut out = Vec::new();
                for f1 in 0..sig.dmor.len() as u32 {
                    for f2 in 0..sig.dmor.len() as u32 {
                        if !sig.is_did(f1) && !sig.is_did(f2) && sig.dcomp(f2, f1) == Some(f) {
                            out.push((f1, f2));
                        }
                    }
                }
                out
            })
            .collect();
        Ok(sig)
    }

    pub fn dcomp(&self, g: u32, f: u32) -> Option<u32> {
        self.dcomp[g as usize * self.dmor.len() + f as usize]
    }

    pub fn h1(&self, b: u32, a: u32) -> Option<u32> {
        self.h1[b as usize * self.cells1.len() + a as usize]
    }

    pub fn v2(&self, psi: u32, phi: u32) -> Option<u32> {
        self.v2[psi as usize * self.cells2.len() + phi as usize]
    }

    pub fn h2(&self, psi: u32, phi: u32) -> Option<u32> {
        self.h2[psi as usize * self.cells2.len() + phi as usize]
    }

    pub fn is_did(&self, f: u32) -> bool {
        self.did[self.ddom[f as usize] as usize] == f
    }

    pub fn is_id1(&self, a: u32) -> bool {
        self.id1[self.c1src[a as usize] as usize] == a
    }

    pub fn is_id2(&self, phi: u32) -> bool {
        self.c2dom[phi as usize] == self.c2cod[phi as usize] && self.id2[self.c2dom[phi as usize] as usize] == phi
    }

    pub fn factorizations(&self, f: u32) -> &[(u32, u32)] {
        &self.factorizations[f as usize]
    }

    pub fn dmor_index(&self, name: &str) -> Option<u32> {
        self.dpos.get(name).copied()
    }

    pub fn cell2_index(&self, name: &str) -> Option<u32> {
        self.c2pos.get(name).copied()
    }

    /// Inverse of `f` in B*, if any.
    pub fn dinv(&self, f: u32) -> Option<u32> {
        let (x, y) = (self.ddom[f as usize], self.dcod[f as usize]);
        (0..self.dmor.len() as u32)
            .find(|&g| self.dcomp(g, f) == Some(self.did[x as usize]) && self.dcomp(f, g) == Some(self.did[y as usize]))
    }

    /// Inverse of `φ` under •.
    pub fn v2inv(&self, phi: u32) -> Option<u32> {
        let (a, b) = (self.c2dom[phi as usize], self.c2cod[phi as usize]);
        (0..self.cells2.len() as u32)
            .find(|&psi| self.v2(psi, phi) == Some(self.id2[a as usize]) && self.v2(phi, psi) == Some(self.id2[b as usize]))
    }

    /// Inverse of `φ` under ∗: a 2-cell ψ with ψ ∗ φ and φ ∗ ψ identities on identity 1-cells.
    pub fn h2inv(&self, phi: u32) -> Option<u32> {
        let a = self.c2dom[phi as usize];
        let (x, y) = (self.c1src[a as usize], self.c1tgt[a as usize]);
        let unit = |o: u32| self.id2[self.id1[o as usize] as usize];
        (0..self.cells2.len() as u32).find(|&psi| self.h2(psi, phi) == Some(unit(x)) && self.h2(phi, psi) == Some(unit(y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::*;

    #[test]
    fn group_case_tables() {
        let b = DecoratedBicategory::new(delooping(&FiniteGroup::cyclic(2)), double_delooping(&FiniteGroup::cyclic(3)).unwrap());
        let sig = Signature::new(&b).unwrap();
        assert_eq!(sig.dmor.len(), 2);
        assert_eq!(sig.cells2.len(), 3);
        let one = sig.cell2_index("1").unwrap();
        let two = sig.cell2_index("2").unwrap();
        assert_eq!(sig.v2(one, one), Some(two));
        assert_eq!(sig.h2(one, two), sig.cell2_index("0"));
        assert_eq!(sig.v2inv(one), Some(two));
        assert_eq!(sig.h2inv(one), Some(two));
        assert!(sig.factorizations(sig.dmor_index("0").unwrap()).iter().all(|&(a, b)| a == b));
    }
}
