use std::collections::{BTreeMap, BTreeSet};

use serde::{Serialize, Serializer};

use super::index::SquareIndex;
use crate::presentations::{Arrow, DecoratedBicategory, DoubleCategory, Strict2Category};

/// The decorated horizontalization H*C: decoration C_0, bicategory of
/// horizontal morphisms and globular squares.
pub fn h_star(c: &DoubleCategory) -> DecoratedBicategory {
    let glob: BTreeSet<&str> = c.squares.keys().filter(|s| c.is_globular(s)).map(String::as_str).collect();
    let restrict = |m: &BTreeMap<(String, String), String>| {
        m.iter().filter(|((t, s), _)| glob.contains(t.as_str()) && glob.contains(s.as_str())).map(|(k, v)| (k.clone(), v.clone())).collect()
    };
    let bicat = Strict2Category {
        cells0: c.horizontal.objects.clone(),
        cells1: c.horizontal.morphisms.clone(),
        identity1: c.horizontal.identity.clone(),
        hcompose1: c.horizontal.compose.clone(),
        cells2: glob.iter().map(|s| (s.to_string(), Arrow::new(&c.squares[*s].top, &c.squares[*s].bottom))).collect(),
        identity2: c.square_identity.clone(),
        vcompose2: restrict(&c.vcomp),
        hcompose2: restrict(&c.hcomp),
    };
    DecoratedBicategory { decoration: c.vertical.clone(), bicat }
}

/// Globular squares together with the horizontal identities.
pub fn generator_squares(c: &DoubleCategory) -> BTreeSet<String> {
    c.squares.keys().filter(|s| c.is_globular(s)).cloned().chain(c.hid.values().cloned()).collect()
}

/// The sub-double category on `keep`, with every table restricted to it.
pub fn restrict(c: &DoubleCategory, keep: &BTreeSet<String>) -> DoubleCategory {
    let inside = |s: &String| keep.contains(s);
    let table = |m: &BTreeMap<(String, String), String>| {
        m.iter().filter(|((t, s), u)| inside(t) && inside(s) && inside(u)).map(|(k, v)| (k.clone(), v.clone())).collect()
    };
    DoubleCategory {
        horizontal: c.horizontal.clone(),
        vertical: c.vertical.clone(),
        squares: c.squares.iter().filter(|(s, _)| inside(s)).map(|(k, v)| (k.clone(), v.clone())).collect(),
        square_identity: c.square_identity.iter().filter(|(_, s)| inside(s)).map(|(k, v)| (k.clone(), v.clone())).collect(),
        vcomp: table(&c.vcomp),
        hcomp: table(&c.hcomp),
        hid: c.hid.iter().filter(|(_, s)| inside(s)).map(|(k, v)| (k.clone(), v.clone())).collect(),
    }
}

/// The globularly generated piece γC.
pub fn gamma(c: &DoubleCategory) -> DoubleCategory {
    let idx = SquareIndex::new(c);
    let gens = generator_squares(c);
    let closed = idx.double_closure(&idx.set_of(gens.iter().map(String::as_str)));
    restrict(c, &idx.names_of(&closed).into_iter().collect())
}

pub fn is_globularly_generated(c: &DoubleCategory) -> bool {
    gamma(c).squares.len() == c.squares.len()
}

/// Where a filtration stabilizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stabilization {
    At(usize),
    NotWithinBound,
}

impl Stabilization {
    pub fn value(self) -> Option<usize> {
        match self {
            Stabilization::At(k) => Some(k),
            Stabilization::NotWithinBound => None,
        }
    }
}

impl Serialize for Stabilization {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Stabilization::At(k) => s.serialize_u64(*k as u64),
            Stabilization::NotWithinBound => s.serialize_str("not within bound"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationLayer {
    pub k: usize,
    #[serde(rename = "H")]
    pub h: Vec<String>,
    #[serde(rename = "V")]
    pub v: Vec<String>,
}

/// Layers `H_k ⊆ V_k ⊆ H_{k+1}` of square names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Filtration {
    pub layers: Vec<FiltrationLayer>,
    pub stabilized_at: Stabilization,
}

impl Filtration {
    pub fn layer(&self, k: usize) -> Option<&FiltrationLayer> {
        self.layers.iter().find(|l| l.k == k)
    }

    /// `H_k`, or the last recorded layer's `V` once stabilized.
    pub fn h_set(&self, k: usize) -> BTreeSet<String> {
        match self.layer(k) {
            Some(l) => l.h.iter().cloned().collect(),
            None => self.layers.last().map(|l| l.v.iter().cloned().collect()).unwrap_or_default(),
        }
    }

    pub fn v_set(&self, k: usize) -> BTreeSet<String> {
        match self.layer(k) {
            Some(l) => l.v.iter().cloned().collect(),
            None => self.layers.last().map(|l| l.v.iter().cloned().collect()).unwrap_or_default(),
        }
    }
}

/// `H_1` is the horizontal closure of the globular and horizontal identity
/// squares, `V_k` the vertical closure of `H_k`, `H_{k+1}` the horizontal
/// closure of `V_k`. Layers are recorded up to stabilization or `kmax`.
pub fn vertical_filtration(c: &DoubleCategory, kmax: usize) -> Filtration {
    let idx = SquareIndex::new(c);
    let gens = generator_squares(c);
    let target = idx.double_closure(&idx.set_of(gens.iter().map(String::as_str)));
    let mut h = idx.closure(&idx.set_of(gens.iter().map(String::as_str)), false);
    let mut layers = Vec::new();
    let mut stabilized_at = Stabilization::NotWithinBound;
    for k in 1..=kmax.max(1) {
        let v = idx.closure(&h, true);
        layers.push(FiltrationLayer { k, h: idx.names_of(&h), v: idx.names_of(&v) });
        if v == target {
            stabilized_at = Stabilization::At(k);
            break;
        }
        h = idx.closure(&v, false);
    }
    Filtration { layers, stabilized_at }
}

/// ℓC, computed on γC.
pub fn length(c: &DoubleCategory, kmax: usize) -> Stabilization {
    vertical_filtration(&gamma(c), kmax).stabilized_at
}

/// Outcome of the double groupoid check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupoidCheck {
    pub is_double_groupoid: bool,
    pub witness: Option<String>,
    pub reason: Option<String>,
}

pub fn vertical_inverse<'a>(c: &'a DoubleCategory, s: &str) -> Option<&'a str> {
    let f = c.frame(s)?;
    let (id_top, id_bottom) = (c.vid(&f.top)?, c.vid(&f.bottom)?);
    c.squares.iter().find_map(|(t, g)| {
        (g.top == f.bottom && g.bottom == f.top && c.vcomp_of(t, s) == Some(id_top) && c.vcomp_of(s, t) == Some(id_bottom))
            .then_some(t.as_str())
    })
}

pub fn horizontal_inverse<'a>(c: &'a DoubleCategory, s: &str) -> Option<&'a str> {
    let f = c.frame(s)?;
    let (id_left, id_right) = (c.hid_of(&f.left)?, c.hid_of(&f.right)?);
    c.squares.iter().find_map(|(t, g)| {
        (g.left == f.right && g.right == f.left && c.hcomp_of(t, s) == Some(id_left) && c.hcomp_of(s, t) == Some(id_right))
            .then_some(t.as_str())
    })
}

/// Every square has vertical and horizontal inverses and both morphism
/// categories are groupoids.
pub fn is_double_groupoid(c: &DoubleCategory) -> GroupoidCheck {
    let fail =
        |w: &str, why: &str| GroupoidCheck { is_double_groupoid: false, witness: Some(w.to_string()), reason: Some(why.to_string()) };
    for s in c.squares.keys() {
        if vertical_inverse(c, s).is_none() {
            return fail(s, "square has no vertical inverse");
        }
        if horizontal_inverse(c, s).is_none() {
            return fail(s, "square has no horizontal inverse");
        }
    }
    for f in c.vertical.morphisms.keys() {
        if c.vertical.find_inverse(f).is_none() {
            return fail(f, "vertical morphism is not invertible");
        }
    }
    for a in c.horizontal.morphisms.keys() {
        if c.horizontal.find_inverse(a).is_none() {
            return fail(a, "horizontal morphism is not invertible");
        }
    }
    GroupoidCheck { is_double_groupoid: true, witness: None, reason: None }
}

/// Result of the exhaustive search for proper sub-double categories of γC
/// with the same decorated horizontalization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Minimality {
    Minimal { subsets_checked: usize },
    NotMinimal { witness: Vec<String> },
    NotAttempted { squares: usize, threshold: usize },
}

/// Default size threshold for [`gamma_minimality`].
pub const MINIMALITY_THRESHOLD: usize = 12;

/// Searches every proper subset of the squares of γC for a sub-double
/// category D with H*D = H*C. Skipped above `threshold` squares.
pub fn gamma_minimality(c: &DoubleCategory, threshold: usize) -> Minimality {
    let g = gamma(c);
    let n = g.squares.len();
    if n > threshold {
        return Minimality::NotAttempted { squares: n, threshold };
    }
    let target = h_star(c);
    let idx = SquareIndex::new(&g);
    let required: BTreeSet<usize> = idx.set_of(g.square_identity.values().chain(g.hid.values()).map(String::as_str));
    let mut checked = 0;
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize == n {
            continue;
        }
        let set: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if !required.is_subset(&set) {
            continue;
        }
        checked += 1;
        let closed = idx.vpairs.iter().chain(idx.hpairs.iter()).all(|(t, s, u)| !(set.contains(t) && set.contains(s)) || set.contains(u));
        if !closed {
            continue;
        }
        let sub = restrict(&g, &idx.names_of(&set).into_iter().collect());
        if h_star(&sub) == target {
            return Minimality::NotMinimal { witness: idx.names_of(&set) };
        }
    }
    Minimality::Minimal { subsets_checked: checked }
}
