//! Finite truncations of Q_B: canonical representatives of the enumerated
//! universe with the induced compositions.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::interchange::{Flattener, DEFAULT_EFFORT};
use super::signature::Signature;
use super::term::{Boundary, Generator, SquareTerm};
use super::universe::{build_layers, Bounds, Universe, UniverseError};

/// A square of the truncation with the least free layers reaching it.
#[derive(Clone, Debug)]
pub struct Representative {
    pub term: SquareTerm,
    pub boundary: Boundary,
    /// Least k with a preimage in the free H_k; a path of layer k counts as
    /// a one-leaf word of layer k + 1.
    pub h_layer: usize,
    /// Least k with a preimage in the free V_k.
    pub v_layer: usize,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct TruncationLayer {
    pub k: usize,
    pub h: usize,
    pub v: usize,
}

/// A failed check on the induced compositions.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CompositionWitness {
    pub op: &'static str,
    pub left: String,
    pub right: String,
    pub via_terms: String,
    pub via_reps: String,
}

pub struct FreeTruncation<'a> {
    pub sig: &'a Signature,
    pub bounds: Bounds,
    /// Sorted by term.
    pub reps: Vec<Representative>,
    pub index: BTreeMap<SquareTerm, usize>,
    pub layers: Vec<TruncationLayer>,
    /// Number of universe terms whose flattening was not complete.
    pub incomplete: usize,
}

/// Builds the universe at `bounds` and collects its canonical representatives.
pub fn free_truncation(sig: &Signature, bounds: Bounds) -> Result<(FreeTruncation<'_>, Universe), UniverseError> {
    let u = build_layers(sig, bounds)?;
    Ok((FreeTruncation::from_universe(sig, &u), u))
}

impl<'a> FreeTruncation<'a> {
    pub fn from_universe(sig: &'a Signature, u: &Universe) -> Self {
        let mut found: BTreeMap<SquareTerm, (Boundary, usize, usize)> = BTreeMap::new();
        let mut incomplete = 0;
        for e in &u.entries {
            let (c, complete) = Flattener::new(sig, DEFAULT_EFFORT).flatten(e.term());
            if !complete {
                incomplete += 1;
            }
            let slot = found.entry(c).or_insert((e.typed.boundary, usize::MAX, usize::MAX));
            slot.1 = slot.1.min(e.e_layer.unwrap_or(e.v_layer + 1));
            slot.2 = slot.2.min(e.v_layer);
        }
        let reps: Vec<Representative> =
            found.into_iter().map(|(term, (boundary, h_layer, v_layer))| Representative { term, boundary, h_layer, v_layer }).collect();
        let index = reps.iter().enumerate().map(|(i, r)| (r.term.clone(), i)).collect();
        let layers = (1..=u.bounds.depth)
            .map(|k| TruncationLayer {
                k,
                h: reps.iter().filter(|r| r.h_layer <= k).count(),
                v: reps.iter().filter(|r| r.v_layer <= k).count(),
            })
            .collect();
        FreeTruncation { sig, bounds: u.bounds, reps, index, layers, incomplete }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// The representative of `t`, if `t` lands in the truncation.
    pub fn class_of(&self, t: &SquareTerm) -> Option<usize> {
        self.index.get(&self.sig.canonical(t)).copied()
    }

    /// Vertical composite, `a` on top.
    pub fn vcomp(&self, a: &SquareTerm, b: &SquareTerm) -> Option<SquareTerm> {
        let t = SquareTerm::V(vec![a.clone(), b.clone()]);
        self.sig.boundary(&t).map(|_| self.sig.canonical(&t))
    }

    /// Horizontal composite, `a` on the left.
    pub fn hcomp(&self, a: &SquareTerm, b: &SquareTerm) -> Option<SquareTerm> {
        let t = SquareTerm::h(a.clone(), b.clone());
        self.sig.boundary(&t).map(|_| self.sig.canonical(&t))
    }

    /// Checks on `samples` seeded random composable pairs of universe terms
    /// that composing terms and composing their representatives agree.
    pub fn check_compositions(&self, u: &Universe, samples: usize, seed: u64) -> Vec<CompositionWitness> {
        let sig = self.sig;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let terms: Vec<&SquareTerm> = u.terms().collect();
        let mut out = Vec::new();
        if terms.is_empty() {
            return out;
        }
        let mut by_top: BTreeMap<u32, Vec<&SquareTerm>> = BTreeMap::new();
        let mut by_left: BTreeMap<u32, Vec<&SquareTerm>> = BTreeMap::new();
        for e in &u.entries {
            by_top.entry(e.typed.boundary.top).or_default().push(e.term());
            by_left.entry(e.typed.boundary.left).or_default().push(e.term());
        }
        for _ in 0..samples {
            let a = *terms.choose(&mut rng).expect("nonempty");
            let ba = sig.boundary(a).expect("typed");
            if let Some(b) = by_top.get(&ba.bottom).and_then(|v| v.choose(&mut rng)) {
                let via_terms = self.vcomp(a, b).expect("composable");
                let via_reps = self.vcomp(&sig.canonical(a), &sig.canonical(b)).expect("composable");
                if via_terms != via_reps {
                    out.push(witness("vcomp", sig, a, b, &via_terms, &via_reps));
                }
            }
            if let Some(b) = by_left.get(&ba.right).and_then(|v| v.choose(&mut rng)) {
                let via_terms = self.hcomp(a, b).expect("composable");
                let via_reps = self.hcomp(&sig.canonical(a), &sig.canonical(b)).expect("composable");
                if via_terms != via_reps {
                    out.push(witness("hcomp", sig, a, b, &via_terms, &via_reps));
                }
            }
        }
        out
    }

    /// Checks that the globular squares and horizontal identities of the
    /// truncation contain B: each 2-cell and each decoration morphism has its
    /// own representative with the expected boundary.
    pub fn contains_base(&self) -> Result<(), String> {
        let sig = self.sig;
        let mut seen = BTreeMap::new();
        for p in 0..sig.cells2.len() as u32 {
            let t = SquareTerm::glob(p);
            let c = sig.canonical(&t);
            let b = sig.generator_boundary(Generator::Glob(p));
            if !self.index.contains_key(&c) || c != t {
                return Err(format!("2-cell {} has no representative", sig.cells2[p as usize]));
            }
            if !sig.is_did(b.left) || !sig.is_did(b.right) {
                return Err(format!("2-cell {} is not globular", sig.cells2[p as usize]));
            }
            if let Some(q) = seen.insert(c, p) {
                return Err(format!("2-cells {} and {} collapse", sig.cells2[q as usize], sig.cells2[p as usize]));
            }
        }
        for f in 0..sig.dmor.len() as u32 {
            let c = sig.canonical(&SquareTerm::hid(f));
            if !self.index.contains_key(&c) || c != sig.hid_normal(f) {
                return Err(format!("decoration morphism {} has no horizontal identity", sig.dmor[f as usize]));
            }
        }
        Ok(())
    }

    /// Representatives built from at most `letters` generators.
    pub fn reps_up_to(&self, letters: usize) -> impl Iterator<Item = &Representative> {
        self.reps.iter().filter(move |r| r.term.size() <= letters)
    }

    /// Are H_k ⊆ V_k ⊆ H_{k+1} on representatives?
    pub fn filtration_nested(&self) -> bool {
        self.reps.iter().all(|r| r.v_layer <= r.h_layer && r.h_layer <= r.v_layer + 1)
    }
}

fn witness(op: &'static str, sig: &Signature, a: &SquareTerm, b: &SquareTerm, x: &SquareTerm, y: &SquareTerm) -> CompositionWitness {
    CompositionWitness { op, left: a.render(sig), right: b.render(sig), via_terms: x.render(sig), via_reps: y.render(sig) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::*;

    fn sig(g: usize, a: usize) -> Signature {
        let b = DecoratedBicategory::new(
            delooping(&FiniteGroup::cyclic_named(g, "g")),
            double_delooping(&FiniteGroup::cyclic_named(a, "a")).unwrap(),
        );
        Signature::new(&b).unwrap()
    }

    #[test]
    fn trivial_base_has_one_square_per_layer() {
        let s = sig(1, 1);
        for depth in 1..=3 {
            let (t, _) = free_truncation(&s, Bounds { depth, ..Default::default() }).unwrap();
            assert_eq!(t.len(), 1);
            assert!(t.layers.iter().all(|l| l.h == 1 && l.v == 1));
        }
    }

    #[test]
    fn base_is_contained_and_compositions_are_well_defined() {
        let s = sig(2, 3);
        let (t, u) = free_truncation(&s, Bounds { word: 3, ..Default::default() }).unwrap();
        assert_eq!(t.contains_base(), Ok(()));
        assert_eq!(t.check_compositions(&u, 300, 7), vec![]);
        assert_eq!(t.incomplete, 0);
        assert!(t.filtration_nested());
    }
}
