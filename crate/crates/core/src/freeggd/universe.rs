//! Bounded enumeration of the layered term universe E_1, F_1, …, E_k, F_k.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use super::signature::Signature;
use super::term::{Generator, SquareTerm};
use super::words::{compatible_sequences, parenthesizations, Sided, Typed, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UniverseError {
    #[error("term universe exceeds {max_terms} terms at layer {layer}")]
    BoundExceeded { max_terms: usize, layer: usize },
    #[error("depth and word bound must be positive")]
    ZeroBound,
}

/// How words over previous layers are formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationMode {
    /// Every compatible sequence in every bracketing; lower layers enter as
    /// raw terms.
    Raw,
    /// Right combs only; lower layers enter as distinct canonical
    /// representatives.
    Canonical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub depth: usize,
    /// Maximal number of generator occurrences in a term.
    pub word: usize,
    pub max_terms: usize,
    pub mode: EnumerationMode,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { depth: 2, word: 4, max_terms: 2_000_000, mode: EnumerationMode::Raw }
    }
}

/// A term of the universe with its layers.
#[derive(Clone, Debug)]
pub struct Entry {
    pub typed: Typed,
    /// Least k with the term in E_k, for words; `None` for proper paths.
    pub e_layer: Option<usize>,
    /// Least k with the term in F_k.
    pub v_layer: usize,
}

impl Entry {
    pub fn term(&self) -> &SquareTerm {
        &self.typed.term
    }

    /// Is the term in the free H_k?
    pub fn in_h(&self, k: usize) -> bool {
        self.e_layer.is_some_and(|e| e <= k)
    }

    /// Is the term in the free V_k?
    pub fn in_v(&self, k: usize) -> bool {
        self.v_layer <= k
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LayerCount {
    pub k: usize,
    pub e_new: usize,
    pub f_new: usize,
}

/// The enumerated universe, in generation order.
pub struct Universe {
    pub bounds: Bounds,
    pub entries: Vec<Entry>,
    pub layers: Vec<LayerCount>,
}

impl Universe {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &SquareTerm> {
        self.entries.iter().map(Entry::term)
    }
}

pub fn generators(sig: &Signature) -> Vec<Generator> {
    let globs = (0..sig.cells2.len() as u32).map(Generator::Glob);
    let hids = (0..sig.dmor.len() as u32).map(Generator::HId);
    globs.chain(hids).collect()
}

/// Vertical compatibility view of a typed term.
#[derive(Clone)]
struct Vert(Typed);

impl Sided for Vert {
    type Side = u32;
    fn source(&self) -> u32 {
        self.0.boundary.top
    }
    fn target(&self) -> u32 {
        self.0.boundary.bottom
    }
}

struct Builder<'a> {
    sig: &'a Signature,
    bounds: Bounds,
    entries: Vec<Entry>,
    seen: HashSet<SquareTerm>,
    carried: HashSet<SquareTerm>,
}

impl Builder<'_> {
    fn push(&mut self, term: SquareTerm, layer: usize) -> Result<bool, UniverseError> {
        if self.seen.contains(&term) {
            return Ok(false);
        }
        let e_layer = (!matches!(term, SquareTerm::V(_))).then(|| term.e_layer());
        let v_layer = term.v_layer();
        let typed = Typed::new(self.sig, term).expect("enumerated terms are compatible");
        self.seen.insert(typed.term.clone());
        self.entries.push(Entry { typed, e_layer, v_layer });
        if self.entries.len() > self.bounds.max_terms {
            return Err(UniverseError::BoundExceeded { max_terms: self.bounds.max_terms, layer });
        }
        Ok(true)
    }

    fn bracketings(&self, seq: &[Typed]) -> Vec<SquareTerm> {
        match self.bounds.mode {
            EnumerationMode::Raw => parenthesizations(seq).iter().map(Word::to_term).collect(),
            EnumerationMode::Canonical => vec![SquareTerm::h_comb(seq.iter().map(|t| t.term.clone()).collect())],
        }
    }

    /// The inputs handed to the next layer.
    fn carry(&mut self, terms: Vec<Typed>) -> Vec<Typed> {
        match self.bounds.mode {
            EnumerationMode::Raw => terms,
            EnumerationMode::Canonical => {
                let mut out = Vec::new();
                for t in terms {
                    let c = self.sig.canonical(&t.term);
                    if self.carried.insert(c.clone()) {
                        out.push(Typed { term: c, boundary: t.boundary });
                    }
                }
                out
            }
        }
    }
}

/// Enumerates E_1 = words over the generators, F_k = paths of at least two
/// E_k words, and E_{k+1} = words of at least two atoms (generators or
/// paths of F_k) involving a path of layer k. Terms have at most
/// `bounds.word` generator occurrences. Paths are flat: an element of a
/// path is never itself a path.
pub fn build_layers(sig: &Signature, bounds: Bounds) -> Result<Universe, UniverseError> {
    if bounds.depth == 0 || bounds.word == 0 {
        return Err(UniverseError::ZeroBound);
    }
    let mut b = Builder { sig, bounds, entries: Vec::new(), seen: HashSet::new(), carried: HashSet::new() };
    let gens: Vec<Typed> = generators(sig).into_iter().map(|g| Typed::new(sig, SquareTerm::Gen(g)).expect("generator")).collect();
    let mut layers = Vec::new();
    // Words available as path elements, and paths available as word atoms.
    let mut elements: Vec<(Typed, usize)> = Vec::new();
    let mut paths: Vec<(Typed, usize)> = Vec::new();
    for k in 1..=bounds.depth {
        let mut count = LayerCount { k, ..Default::default() };
        let mut new_words = Vec::new();
        if k == 1 {
            for seq in compatible_sequences(&gens, bounds.word, |_| 1) {
                for t in b.bracketings(&seq) {
                    if b.push(t.clone(), k)? {
                        count.e_new += 1;
                        new_words.push(Typed::new(sig, t).expect("compatible"));
                    }
                }
            }
        } else {
            let mut atoms: Vec<(Typed, usize)> = gens.iter().map(|g| (g.clone(), 0)).collect();
            atoms.extend(paths.iter().cloned());
            let items: Vec<AtomRef> = atoms.iter().map(|(t, layer)| AtomRef { typed: t.clone(), layer: *layer }).collect();
            for seq in compatible_sequences(&items, bounds.word, |a| a.typed.term.size()) {
                if seq.len() < 2 || !seq.iter().any(|a| a.layer == k - 1) {
                    continue;
                }
                let typed: Vec<Typed> = seq.iter().map(|a| a.typed.clone()).collect();
                for t in b.bracketings(&typed) {
                    if b.push(t.clone(), k)? {
                        count.e_new += 1;
                        new_words.push(Typed::new(sig, t).expect("compatible"));
                    }
                }
            }
        }
        let carried = b.carry(new_words);
        elements.extend(carried.into_iter().filter(|t| !matches!(t.term, SquareTerm::V(_))).map(|t| {
            let layer = t.term.e_layer();
            (t, layer)
        }));
        let items: Vec<ElemRef> = elements.iter().map(|(t, layer)| ElemRef { vert: Vert(t.clone()), layer: *layer }).collect();
        let mut new_paths = Vec::new();
        for seq in compatible_sequences(&items, bounds.word, |e| e.vert.0.term.size()) {
            if seq.len() < 2 || !seq.iter().any(|e| e.layer == k) {
                continue;
            }
            let t = SquareTerm::V(seq.iter().map(|e| e.vert.0.term.clone()).collect());
            if b.push(t.clone(), k)? {
                count.f_new += 1;
                new_paths.push(Typed::new(sig, t).expect("compatible"));
            }
        }
        let carried = b.carry(new_paths);
        paths.extend(carried.into_iter().filter(|t| matches!(t.term, SquareTerm::V(_))).map(|t| {
            let layer = t.term.v_layer();
            (t, layer)
        }));
        layers.push(count);
    }
    Ok(Universe { bounds, entries: b.entries, layers })
}

#[derive(Clone)]
struct AtomRef {
    typed: Typed,
    layer: usize,
}

impl Sided for AtomRef {
    type Side = u32;
    fn source(&self) -> u32 {
        self.typed.boundary.left
    }
    fn target(&self) -> u32 {
        self.typed.boundary.right
    }
}

#[derive(Clone)]
struct ElemRef {
    vert: Vert,
    layer: usize,
}

impl Sided for ElemRef {
    type Side = u32;
    fn source(&self) -> u32 {
        self.vert.source()
    }
    fn target(&self) -> u32 {
        self.vert.target()
    }
}
