//! Double functors between finite double categories.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::presentations::{DecoratedPseudofunctor, DoubleCategory, ValidationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FunctorError {
    #[error("boundary mismatch: `{0}` has no image under the second functor")]
    BoundaryMismatch(String),
}

/// Componentwise maps of a double functor.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DoubleFunctor {
    pub on_objects: BTreeMap<String, String>,
    pub on_hmor: BTreeMap<String, String>,
    pub on_vmor: BTreeMap<String, String>,
    pub on_squares: BTreeMap<String, String>,
}

fn img<'a>(m: &'a BTreeMap<String, String>, x: &str) -> Option<&'a str> {
    m.get(x).map(String::as_str)
}

fn diag<'a>(it: impl Iterator<Item = &'a String>) -> BTreeMap<String, String> {
    it.map(|x| (x.clone(), x.clone())).collect()
}

fn compose_maps(first: &BTreeMap<String, String>, second: &BTreeMap<String, String>) -> Result<BTreeMap<String, String>, FunctorError> {
    first
        .iter()
        .map(|(k, v)| second.get(v).map(|w| (k.clone(), w.clone())).ok_or_else(|| FunctorError::BoundaryMismatch(v.clone())))
        .collect()
}

impl DoubleFunctor {
    pub fn identity(c: &DoubleCategory) -> Self {
        DoubleFunctor {
            on_objects: diag(c.horizontal.objects.iter()),
            on_hmor: diag(c.horizontal.morphisms.keys()),
            on_vmor: diag(c.vertical.morphisms.keys()),
            on_squares: diag(c.squares.keys()),
        }
    }

    /// `second ∘ first`.
    pub fn compose(second: &DoubleFunctor, first: &DoubleFunctor) -> Result<DoubleFunctor, FunctorError> {
        Ok(DoubleFunctor {
            on_objects: compose_maps(&first.on_objects, &second.on_objects)?,
            on_hmor: compose_maps(&first.on_hmor, &second.on_hmor)?,
            on_vmor: compose_maps(&first.on_vmor, &second.on_vmor)?,
            on_squares: compose_maps(&first.on_squares, &second.on_squares)?,
        })
    }

    /// The induced decorated pseudofunctor H*T (globular squares only).
    pub fn h_star(&self, src: &DoubleCategory) -> DecoratedPseudofunctor {
        DecoratedPseudofunctor {
            on_objects: self.on_objects.clone(),
            on_decoration: self.on_vmor.clone(),
            on_cells1: self.on_hmor.clone(),
            on_cells2: self.on_squares.iter().filter(|(s, _)| src.is_globular(s)).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    pub fn validate(&self, src: &DoubleCategory, tgt: &DoubleCategory) -> ValidationReport {
        let mut r = ValidationReport::default();
        let ob = |x: &str| img(&self.on_objects, x);
        for x in &src.horizontal.objects {
            if !ob(x).is_some_and(|y| tgt.horizontal.objects.contains(y)) {
                r.push("object map", [x.as_str()]);
            }
        }
        for (cat, tcat, map, label) in
            [(&src.horizontal, &tgt.horizontal, &self.on_hmor, "horizontal"), (&src.vertical, &tgt.vertical, &self.on_vmor, "vertical")]
        {
            for (f, a) in &cat.morphisms {
                let ok = img(map, f)
                    .and_then(|g| tcat.morphisms.get(g))
                    .is_some_and(|b| Some(b.dom.as_str()) == ob(&a.dom) && Some(b.cod.as_str()) == ob(&a.cod));
                if !ok {
                    r.push(&format!("{label} morphism boundary"), [f.as_str()]);
                }
            }
            for (x, i) in &cat.identity {
                if img(map, i) != ob(x).and_then(|y| tcat.identity_of(y)) {
                    r.push(&format!("{label} identity"), [x.as_str()]);
                }
            }
            for ((g, f), h) in &cat.compose {
                let rhs = match (img(map, g), img(map, f)) {
                    (Some(a), Some(b)) => tcat.composite(a, b),
                    _ => None,
                };
                if img(map, h).is_none() || img(map, h) != rhs {
                    r.push(&format!("{label} composition"), [g.as_str(), f.as_str()]);
                }
            }
        }
        for (s, f) in &src.squares {
            let ok = img(&self.on_squares, s).and_then(|t| tgt.squares.get(t)).is_some_and(|g| {
                Some(g.top.as_str()) == img(&self.on_hmor, &f.top)
                    && Some(g.bottom.as_str()) == img(&self.on_hmor, &f.bottom)
                    && Some(g.left.as_str()) == img(&self.on_vmor, &f.left)
                    && Some(g.right.as_str()) == img(&self.on_vmor, &f.right)
            });
            if !ok {
                r.push("square boundary", [s.as_str()]);
            }
        }
        for (table, ttable, law) in [(&src.vcomp, &tgt.vcomp, "vertical composition"), (&src.hcomp, &tgt.hcomp, "horizontal composition")] {
            for ((t, s), u) in table {
                let rhs = match (img(&self.on_squares, t), img(&self.on_squares, s)) {
                    (Some(a), Some(b)) => ttable.get(&(a.to_string(), b.to_string())).map(String::as_str),
                    _ => None,
                };
                if img(&self.on_squares, u).is_none() || img(&self.on_squares, u) != rhs {
                    r.push(law, [t.as_str(), s.as_str()]);
                }
            }
        }
        for (f, s) in &src.hid {
            if img(&self.on_squares, s) != img(&self.on_vmor, f).and_then(|g| tgt.hid_of(g)) {
                r.push("horizontal identity", [f.as_str()]);
            }
        }
        for (a, s) in &src.square_identity {
            if img(&self.on_squares, s) != img(&self.on_hmor, a).and_then(|b| tgt.vid(b)) {
                r.push("square identity", [a.as_str()]);
            }
        }
        r
    }
}

/// Compact numbering of one double category for the functor search.
struct Shape {
    objects: Vec<String>,
    hmor: Vec<(String, usize, usize)>,
    vmor: Vec<(String, usize, usize)>,
    squares: Vec<(String, [usize; 4])>,
    hcomp1: Vec<(usize, usize, usize)>,
    vcomp1: Vec<(usize, usize, usize)>,
    hident: Vec<(usize, usize)>,
    vident: Vec<(usize, usize)>,
    vcomp: Vec<(usize, usize, usize)>,
    hcomp: Vec<(usize, usize, usize)>,
    hid: Vec<(usize, usize)>,
    sq_ident: Vec<(usize, usize)>,
}

impl Shape {
    fn new(c: &DoubleCategory) -> Self {
        let objects: Vec<String> = c.horizontal.objects.iter().cloned().collect();
        let opos: HashMap<&str, usize> = objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
        let mors = |m: &BTreeMap<String, crate::presentations::Arrow>| {
            m.iter().map(|(n, a)| (n.clone(), opos[a.dom.as_str()], opos[a.cod.as_str()])).collect::<Vec<_>>()
        };
        let hmor = mors(&c.horizontal.morphisms);
        let vmor = mors(&c.vertical.morphisms);
        let hpos: HashMap<&str, usize> = hmor.iter().enumerate().map(|(i, m)| (m.0.as_str(), i)).collect();
        let vpos: HashMap<&str, usize> = vmor.iter().enumerate().map(|(i, m)| (m.0.as_str(), i)).collect();
        let squares: Vec<(String, [usize; 4])> = c
            .squares
            .iter()
            .map(|(n, f)| (n.clone(), [hpos[f.top.as_str()], hpos[f.bottom.as_str()], vpos[f.left.as_str()], vpos[f.right.as_str()]]))
            .collect();
        let spos: HashMap<&str, usize> = squares.iter().enumerate().map(|(i, s)| (s.0.as_str(), i)).collect();
        let triples = |m: &BTreeMap<(String, String), String>, p: &HashMap<&str, usize>| {
            m.iter().map(|((a, b), u)| (p[a.as_str()], p[b.as_str()], p[u.as_str()])).collect::<Vec<_>>()
        };
        let pairs = |m: &BTreeMap<String, String>, pk: &HashMap<&str, usize>, pv: &HashMap<&str, usize>| {
            m.iter().map(|(a, b)| (pk[a.as_str()], pv[b.as_str()])).collect::<Vec<_>>()
        };
        Shape {
            hcomp1: triples(&c.horizontal.compose, &hpos),
            vcomp1: triples(&c.vertical.compose, &vpos),
            hident: pairs(&c.horizontal.identity, &opos, &hpos),
            vident: pairs(&c.vertical.identity, &opos, &vpos),
            vcomp: triples(&c.vcomp, &spos),
            hcomp: triples(&c.hcomp, &spos),
            hid: pairs(&c.hid, &vpos, &spos),
            sq_ident: pairs(&c.square_identity, &hpos, &spos),
            objects,
            hmor,
            vmor,
            squares,
        }
    }
}

struct Search<'a> {
    s: &'a Shape,
    t: &'a Shape,
    tvcomp1: HashMap<(usize, usize), usize>,
    thcomp1: HashMap<(usize, usize), usize>,
    tvcomp: HashMap<(usize, usize), usize>,
    thcomp: HashMap<(usize, usize), usize>,
    thident: HashMap<usize, usize>,
    tvident: HashMap<usize, usize>,
    thid: HashMap<usize, usize>,
    tsq_ident: HashMap<usize, usize>,
    ob: Vec<usize>,
    hm: Vec<usize>,
    vm: Vec<usize>,
    sq: Vec<usize>,
    out: Vec<DoubleFunctor>,
    limit: usize,
}

const UNSET: usize = usize::MAX;

fn check3(table: &[(usize, usize, usize)], map: &[usize], tmap: &HashMap<(usize, usize), usize>) -> bool {
    table.iter().all(|&(a, b, c)| {
        if map[a] == UNSET || map[b] == UNSET || map[c] == UNSET {
            return true;
        }
        tmap.get(&(map[a], map[b])) == Some(&map[c])
    })
}

fn check2(table: &[(usize, usize)], kmap: &[usize], vmap: &[usize], tmap: &HashMap<usize, usize>) -> bool {
    table.iter().all(|&(k, v)| kmap[k] == UNSET || vmap[v] == UNSET || tmap.get(&kmap[k]) == Some(&vmap[v]))
}

impl<'a> Search<'a> {
    fn emit(&mut self) {
        let name = |v: &[(String, usize, usize)], i: usize| v[i].0.clone();
        let f = DoubleFunctor {
            on_objects: (0..self.s.objects.len()).map(|i| (self.s.objects[i].clone(), self.t.objects[self.ob[i]].clone())).collect(),
            on_hmor: (0..self.s.hmor.len()).map(|i| (name(&self.s.hmor, i), name(&self.t.hmor, self.hm[i]))).collect(),
            on_vmor: (0..self.s.vmor.len()).map(|i| (name(&self.s.vmor, i), name(&self.t.vmor, self.vm[i]))).collect(),
            on_squares: (0..self.s.squares.len()).map(|i| (self.s.squares[i].0.clone(), self.t.squares[self.sq[i]].0.clone())).collect(),
        };
        self.out.push(f);
    }

    fn objects(&mut self, i: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        if i == self.s.objects.len() {
            return self.hmors(0);
        }
        for y in 0..self.t.objects.len() {
            self.ob[i] = y;
            self.objects(i + 1);
        }
        self.ob[i] = UNSET;
    }

    fn hmors(&mut self, i: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        if i == self.s.hmor.len() {
            return self.vmors(0);
        }
        let (_, d, c) = self.s.hmor[i];
        for j in 0..self.t.hmor.len() {
            let (_, td, tc) = self.t.hmor[j];
            if td != self.ob[d] || tc != self.ob[c] {
                continue;
            }
            self.hm[i] = j;
            if check3(&self.s.hcomp1, &self.hm, &self.thcomp1) && check2(&self.s.hident, &self.ob, &self.hm, &self.thident) {
                self.hmors(i + 1);
            }
        }
        self.hm[i] = UNSET;
    }

    fn vmors(&mut self, i: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        if i == self.s.vmor.len() {
            return self.squares(0);
        }
        let (_, d, c) = self.s.vmor[i];
        for j in 0..self.t.vmor.len() {
            let (_, td, tc) = self.t.vmor[j];
            if td != self.ob[d] || tc != self.ob[c] {
                continue;
            }
            self.vm[i] = j;
            if check3(&self.s.vcomp1, &self.vm, &self.tvcomp1) && check2(&self.s.vident, &self.ob, &self.vm, &self.tvident) {
                self.vmors(i + 1);
            }
        }
        self.vm[i] = UNSET;
    }

    fn squares(&mut self, i: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        if i == self.s.squares.len() {
            return self.emit();
        }
        let [t, b, l, r] = self.s.squares[i].1;
        let want = [self.hm[t], self.hm[b], self.vm[l], self.vm[r]];
        for j in 0..self.t.squares.len() {
            if self.t.squares[j].1 != want {
                continue;
            }
            self.sq[i] = j;
            if check3(&self.s.vcomp, &self.sq, &self.tvcomp)
                && check3(&self.s.hcomp, &self.sq, &self.thcomp)
                && check2(&self.s.hid, &self.vm, &self.sq, &self.thid)
                && check2(&self.s.sq_ident, &self.hm, &self.sq, &self.tsq_ident)
            {
                self.squares(i + 1);
            }
        }
        self.sq[i] = UNSET;
    }
}

/// Every double functor `src → tgt`, in a deterministic order, stopping
/// after `limit` functors.
pub fn enumerate_double_functors(src: &DoubleCategory, tgt: &DoubleCategory, limit: usize) -> Vec<DoubleFunctor> {
    let (s, t) = (Shape::new(src), Shape::new(tgt));
    let map3 = |v: &[(usize, usize, usize)]| v.iter().map(|&(a, b, c)| ((a, b), c)).collect::<HashMap<_, _>>();
    let map2 = |v: &[(usize, usize)]| v.iter().copied().collect::<HashMap<_, _>>();
    let mut search = Search {
        tvcomp1: map3(&t.vcomp1),
        thcomp1: map3(&t.hcomp1),
        tvcomp: map3(&t.vcomp),
        thcomp: map3(&t.hcomp),
        thident: map2(&t.hident),
        tvident: map2(&t.vident),
        thid: map2(&t.hid),
        tsq_ident: map2(&t.sq_ident),
        ob: vec![UNSET; s.objects.len()],
        hm: vec![UNSET; s.hmor.len()],
        vm: vec![UNSET; s.vmor.len()],
        sq: vec![UNSET; s.squares.len()],
        out: Vec::new(),
        limit,
        s: &s,
        t: &t,
    };
    search.objects(0);
    search.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::*;

    fn models() -> (DoubleCategory, DoubleCategory) {
        let (g, a) = (FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
        let acts = g.actions_on(&a);
        (semidirect_double(&g, &a, &acts[0]).unwrap(), semidirect_double(&g, &a, &acts[1]).unwrap())
    }

    #[test]
    fn identity_is_neutral_for_composition() {
        let (c, d) = models();
        let found = enumerate_double_functors(&c, &d, usize::MAX);
        assert!(!found.is_empty());
        for t in &found {
            assert!(t.validate(&c, &d).is_valid());
            assert_eq!(&DoubleFunctor::compose(&DoubleFunctor::identity(&d), t).unwrap(), t);
            assert_eq!(&DoubleFunctor::compose(t, &DoubleFunctor::identity(&c)).unwrap(), t);
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // Endofunctors of Z2 ⋊ Z2: brute force over all square and vertical maps.
        let z2 = FiniteGroup::cyclic(2);
        let d = semidirect_double(&z2, &z2, &trivial_action(&z2, &z2)).unwrap();
        let found = enumerate_double_functors(&d, &d, usize::MAX);
        let names: Vec<&String> = d.squares.keys().collect();
        let mut brute = 0;
        let n = names.len();
        for code in 0..n.pow(n as u32) {
            let mut c = code;
            let mut f = DoubleFunctor::identity(&d);
            for s in &names {
                f.on_squares.insert((*s).clone(), names[c % n].clone());
                c /= n;
            }
            for g in ["0", "1"] {
                for h in ["0", "1"] {
                    let mut f2 = f.clone();
                    f2.on_vmor.insert("0".into(), g.into());
                    f2.on_vmor.insert("1".into(), h.into());
                    if f2.validate(&d, &d).is_valid() {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(found.len(), brute);
    }

    #[test]
    fn mismatched_composition_is_rejected() {
        let (c, _) = models();
        let mut f = DoubleFunctor::identity(&c);
        f.on_squares.remove("0");
        assert!(matches!(DoubleFunctor::compose(&f, &DoubleFunctor::identity(&c)), Err(FunctorError::BoundaryMismatch(_))));
    }
}
