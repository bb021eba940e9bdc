//! Interchange flattening: rewriting horizontal composites of vertical paths
//! as vertical paths of horizontal composites.
//!
//! Two columns `X` and `Y` placed side by side are cut at matching heights.
//! Between consecutive cuts the blocks must have equal inner sides; an empty
//! block stands for the vertical identity on the 1-cell at the cut, and a
//! horizontal identity `i_f` may be split once as `i_{f2} • i_{f1}`.

use std::cell::Cell;
use std::collections::HashMap;

use super::signature::Signature;
use super::term::{Boundary, Generator, SquareTerm};

/// Default number of cut transitions one flattening may explore.
pub const DEFAULT_EFFORT: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct CutPoint {
    idx: usize,
    split: Option<(u32, u32)>,
}

struct Column<'a> {
    letters: &'a [SquareTerm],
    bounds: Vec<Boundary>,
    cuts: Vec<CutPoint>,
    top: u32,
}

impl<'a> Column<'a> {
    fn new(sig: &Signature, letters: &'a [SquareTerm]) -> Option<Self> {
        let bounds: Vec<Boundary> = letters.iter().map(|l| sig.boundary(l)).collect::<Option<_>>()?;
        let mut cuts = Vec::new();
        for i in 0..=letters.len() {
            cuts.push(CutPoint { idx: i, split: None });
            if let Some(SquareTerm::Gen(Generator::HId(f))) = letters.get(i) {
                for &s in sig.factorizations(*f) {
                    cuts.push(CutPoint { idx: i, split: Some(s) });
                }
            }
        }
        let top = bounds.first()?.top;
        Some(Column { letters, bounds, cuts, top })
    }

    fn hmor_at(&self, sig: &Signature, c: CutPoint) -> u32 {
        match c.split {
            Some((f1, _)) => sig.id1[sig.dcod[f1 as usize] as usize],
            None if c.idx == 0 => self.top,
            None => self.bounds[c.idx - 1].bottom,
        }
    }

    /// Letters strictly between two cuts, or `None` if the cuts overlap.
    fn block(&self, a: CutPoint, b: CutPoint) -> Option<Vec<SquareTerm>> {
        if a == b {
            return Some(Vec::new());
        }
        if a.idx == b.idx && a.split.is_some() && b.split.is_some() {
            return None;
        }
        let mut out = Vec::new();
        let mut start = a.idx;
        if let Some((_, f2)) = a.split {
            if b.idx == a.idx {
                return None;
            }
            out.push(SquareTerm::hid(f2));
            start += 1;
        }
        out.extend(self.letters[start..b.idx].iter().cloned());
        if let Some((g1, _)) = b.split {
            out.push(SquareTerm::hid(g1));
        }
        Some(out)
    }
}

/// Merges and flattens terms within an effort budget.
pub struct Flattener<'a> {
    sig: &'a Signature,
    budget: Cell<usize>,
}

fn column_of(t: SquareTerm) -> Vec<SquareTerm> {
    match t {
        SquareTerm::V(xs) => xs,
        x => vec![x],
    }
}

impl<'a> Flattener<'a> {
    pub fn new(sig: &'a Signature, effort: usize) -> Self {
        Flattener { sig, budget: Cell::new(effort) }
    }

    fn spend(&self) -> bool {
        let b = self.budget.get();
        if b == 0 {
            return false;
        }
        self.budget.set(b - 1);
        true
    }

    fn side(&self, letters: &[SquareTerm], right: bool, empty_obj: u32) -> Option<u32> {
        let sig = self.sig;
        let mut acc = sig.did[empty_obj as usize];
        for l in letters {
            let b = sig.boundary(l)?;
            acc = sig.dcomp(if right { b.right } else { b.left }, acc)?;
        }
        Some(acc)
    }

    /// Rows for an empty block beside `block`, the empty side sitting on `hmor`.
    fn beside_empty(&self, hmor: u32, block: Vec<SquareTerm>, empty_left: bool) -> Option<Vec<SquareTerm>> {
        let sig = self.sig;
        if sig.is_id1(hmor) {
            return Some(block);
        }
        let unit = sig.vertical_identity(hmor);
        block
            .into_iter()
            .map(|y| {
                let row = if empty_left { SquareTerm::h(unit.clone(), y) } else { SquareTerm::h(y, unit.clone()) };
                sig.boundary(&row).map(|_| sig.normalize(&row))
            })
            .collect()
    }

    /// Rewrites `H(V[x], V[y])` as a vertical path of rows, if possible.
    pub fn merge(&self, x: &[SquareTerm], y: &[SquareTerm]) -> Option<Vec<SquareTerm>> {
        if x.len() == 1 && y.len() == 1 {
            let row = SquareTerm::h(x[0].clone(), y[0].clone());
            self.sig.boundary(&row)?;
            return Some(vec![self.sig.normalize(&row)]);
        }
        let cx = Column::new(self.sig, x)?;
        let cy = Column::new(self.sig, y)?;
        let mut memo = HashMap::new();
        self.rows(&cx, &cy, 0, 0, true, &mut memo)
    }

    fn rows(
        &self,
        cx: &Column,
        cy: &Column,
        i: usize,
        j: usize,
        first: bool,
        memo: &mut HashMap<(usize, usize), Option<Vec<SquareTerm>>>,
    ) -> Option<Vec<SquareTerm>> {
        let (ex, ey) = (cx.cuts.len() - 1, cy.cuts.len() - 1);
        if i == ex && j == ey {
            return Some(Vec::new());
        }
        if let Some(r) = memo.get(&(i, j)) {
            return r.clone();
        }
        let sig = self.sig;
        let (a, b) = (cx.cuts[i], cy.cuts[j]);
        let (hx, hy) = (cx.hmor_at(sig, a), cy.hmor_at(sig, b));
        let mut result = None;
        // Rows pairing letters of both columns come first, shortest first.
        let mut next: Vec<(usize, usize)> = (i..=ex)
            .flat_map(|i2| (j..=ey).map(move |j2| (i2, j2)))
            .filter(|&(i2, j2)| (i2, j2) != (i, j) && !(first && i2 == ex && j2 == ey))
            .collect();
        next.sort_by_key(|&(i2, j2)| (i2 == i || j2 == j, i2 - i + j2 - j, i2));
        for (i2, j2) in next {
            if !self.spend() {
                break;
            }
            let (Some(bx), Some(by)) = (cx.block(a, cx.cuts[i2]), cy.block(b, cy.cuts[j2])) else { continue };
            let sx = self.side(&bx, true, sig.c1tgt[hx as usize]);
            let sy = self.side(&by, false, sig.c1src[hy as usize]);
            if sx.is_none() || sx != sy {
                continue;
            }
            let row = if bx.is_empty() {
                self.beside_empty(hx, by, true)
            } else if by.is_empty() {
                self.beside_empty(hy, bx, false)
            } else if bx.len() + by.len() < cx.letters.len() + cy.letters.len() {
                // Splitting i_f keeps the letter count, so sub-blocks must
                // shrink for the recursion to terminate.
                self.merge(&bx, &by)
            } else {
                None
            };
            let Some(row) = row else { continue };
            if let Some(rest) = self.rows(cx, cy, i2, j2, false, memo) {
                let mut out = row;
                out.extend(rest);
                result = Some(out);
                break;
            }
        }
        memo.insert((i, j), result.clone());
        result
    }

    fn fold_columns(&self, cols: Vec<Vec<SquareTerm>>) -> (Vec<SquareTerm>, bool) {
        let mut it = cols.into_iter();
        let mut acc = it.next().unwrap_or_default();
        let mut complete = true;
        for col in it {
            match self.merge(&acc, &col) {
                Some(rows) => acc = rows,
                None => {
                    complete = false;
                    let stuck = SquareTerm::h(self.path(acc), self.path(col));
                    acc = vec![self.sig.normalize(&stuck)];
                }
            }
        }
        (acc, complete)
    }

    fn path(&self, mut xs: Vec<SquareTerm>) -> SquareTerm {
        if xs.len() == 1 {
            xs.pop().expect("one element")
        } else {
            SquareTerm::V(xs)
        }
    }

    /// One level of flattening: the letters of the leaf columns are opaque.
    /// Returns the rewritten term and whether every merge succeeded.
    pub fn flatten_top(&self, t: &SquareTerm) -> (SquareTerm, bool) {
        let n = self.sig.normalize(t);
        match &n {
            SquareTerm::H(..) => {
                let cols = n.h_leaves().into_iter().map(|l| column_of(l.clone())).collect();
                let (acc, complete) = self.fold_columns(cols);
                (self.sig.normalize(&self.path(acc)), complete)
            }
            _ => (n, true),
        }
    }

    /// Full bottom-up flattening towards a vertical path of horizontal
    /// words of generators.
    pub fn flatten(&self, t: &SquareTerm) -> (SquareTerm, bool) {
        let n = self.sig.normalize(t);
        self.flatten_normal(&n)
    }

    fn flatten_normal(&self, n: &SquareTerm) -> (SquareTerm, bool) {
        match n {
            SquareTerm::Gen(_) => (n.clone(), true),
            SquareTerm::V(xs) => {
                let mut complete = true;
                let ys: Vec<SquareTerm> = xs
                    .iter()
                    .map(|x| {
                        let (y, c) = self.flatten_normal(x);
                        complete &= c;
                        y
                    })
                    .collect();
                (self.sig.normalize(&SquareTerm::V(ys)), complete)
            }
            SquareTerm::H(..) => {
                let mut complete = true;
                let cols = n
                    .h_leaves()
                    .into_iter()
                    .map(|l| {
                        let (y, c) = self.flatten_normal(l);
                        complete &= c;
                        column_of(y)
                    })
                    .collect();
                let (acc, c) = self.fold_columns(cols);
                (self.sig.normalize(&self.path(acc)), complete && c)
            }
        }
    }
}

impl Signature {
    /// The canonical representative: normal form of the flattened normal form.
    pub fn canonical(&self, t: &SquareTerm) -> SquareTerm {
        Flattener::new(self, DEFAULT_EFFORT).flatten(t).0
    }

    /// Is the term a vertical path of horizontal words of generators?
    pub fn is_flat(&self, t: &SquareTerm) -> bool {
        t.v_layer() == 1
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

    fn canon(s: &Signature, text: &str) -> String {
        let t = parse_term(s, text).unwrap();
        let c = s.canonical(&t);
        assert_eq!(s.boundary(&c), s.boundary(&t));
        c.render(s)
    }

    #[test]
    fn interchange_of_two_paths() {
        let s = sig();
        assert_eq!(canon(&s, "(h (v (id g1) (g a1)) (v (id g1) (g a2)))"), "(id g1)");
        assert_eq!(canon(&s, "(h (v (g a1) (id g1)) (id g1))"), "(v (g a1) (id g1))");
        assert_eq!(canon(&s, "(h (id g1) (v (g a1) (id g1)))"), "(v (g a1) (id g1))");
        assert_eq!(canon(&s, "(h (v (g a1) (id g1) (g a1)) (v (id g1) (g a2)))"), "(v (g a1) (id g1))");
    }

    #[test]
    fn canonical_is_idempotent_on_samples() {
        let s = sig();
        for text in [
            "(h (v (id g1) (g a1)) (v (id g1) (g a2)))",
            "(v (h (v (g a1) (id g1)) (id g1)) (g a2) (id g1))",
            "(h (v (id g1) (g a1) (id g1)) (g a2))",
        ] {
            let c = s.canonical(&parse_term(&s, text).unwrap());
            assert_eq!(s.canonical(&c), c);
            assert!(s.is_flat(&c));
        }
    }

    #[test]
    fn mismatched_cuts_stay_horizontal() {
        // Commuting square f;g = h;k in the decoration with Z2 2-cells at the
        // middle objects: the two columns share no inner cut.
        let mut d = FiniteCategory::new();
        for x in ["x", "y", "w", "z"] {
            d.add_object(x);
            d.add_identity(x, format!("1{x}"));
        }
        d.add_morphism("f", "x", "y");
        d.add_morphism("g", "y", "z");
        d.add_morphism("h", "x", "w");
        d.add_morphism("k", "w", "z");
        d.add_morphism("d", "x", "z");
        for (a, b) in [("x", "y"), ("y", "z"), ("x", "w"), ("w", "z"), ("x", "z")] {
            let m = d.hom(a, b).next().unwrap().to_string();
            d.set_composite(&format!("1{b}"), &m, &m);
            d.set_composite(&m, &format!("1{a}"), &m);
        }
        for x in ["x", "y", "w", "z"] {
            let i = format!("1{x}");
            d.set_composite(&i, &i, &i);
        }
        d.set_composite("g", "f", "d");
        d.set_composite("k", "h", "d");
        let mut s2 = Strict2Category::default();
        for x in ["x", "y", "w", "z"] {
            let one = format!("e{x}");
            s2.cells0.insert(x.into());
            s2.cells1.insert(one.clone(), Arrow::new(x, x));
            s2.identity1.insert(x.into(), one.clone());
            s2.hcompose1.insert((one.clone(), one.clone()), one.clone());
            let (u, t) = (format!("u{x}"), format!("t{x}"));
            for c in [&u, &t] {
                s2.cells2.insert(c.clone(), Arrow::new(one.clone(), one.clone()));
            }
            s2.identity2.insert(one.clone(), u.clone());
            for (p, q, r) in [(&u, &u, &u), (&u, &t, &t), (&t, &u, &t), (&t, &t, &u)] {
                s2.vcompose2.insert((p.clone(), q.clone()), r.clone());
                s2.hcompose2.insert((p.clone(), q.clone()), r.clone());
            }
        }
        let b = DecoratedBicategory::new(d, s2);
        assert!(b.validate().is_valid(), "{:?}", b.validate());
        let s = Signature::new(&b).unwrap();
        let t = parse_term(&s, "(h (v (id f) (g ty) (id g)) (v (id h) (g tw) (id k)))").unwrap();
        let (flat, complete) = Flattener::new(&s, DEFAULT_EFFORT).flatten(&t);
        assert!(!complete);
        assert_eq!(flat.v_layer(), 2);
    }
}
