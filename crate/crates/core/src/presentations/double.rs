//! Finite strict double categories.

use std::collections::BTreeMap;

use serde::Serialize;

use super::category::FiniteCategory;
use super::report::ValidationReport;

/// Boundary of a square: horizontal `top`/`bottom`, vertical `left`/`right`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Frame {
    pub top: String,
    pub bottom: String,
    pub left: String,
    pub right: String,
}

impl Frame {
    pub fn new(top: &str, bottom: &str, left: &str, right: &str) -> Self {
        Frame { top: top.into(), bottom: bottom.into(), left: left.into(), right: right.into() }
    }
}

/// A finite strict double category.
///
/// `horizontal` holds the objects and horizontal morphisms, `vertical` is C_0.
/// `vcomp[(t, s)]` stacks `s` on top of `t`; `hcomp[(t, s)]` places `s` to the
/// left of `t`. `square_identity` gives the identity of C_1 on each horizontal
/// morphism and `hid` is the horizontal identity functor i: C_0 → C_1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DoubleCategory {
    pub horizontal: FiniteCategory,
    pub vertical: FiniteCategory,
    pub squares: BTreeMap<String, Frame>,
    pub square_identity: BTreeMap<String, String>,
    pub vcomp: BTreeMap<(String, String), String>,
    pub hcomp: BTreeMap<(String, String), String>,
    pub hid: BTreeMap<String, String>,
}

fn get<'a>(m: &'a BTreeMap<(String, String), String>, a: &str, b: &str) -> Option<&'a str> {
    m.get(&(a.to_string(), b.to_string())).map(String::as_str)
}

impl DoubleCategory {
    pub fn frame(&self, s: &str) -> Option<&Frame> {
        self.squares.get(s)
    }

    /// `s` on top of `t`.
    pub fn vcomp_of(&self, t: &str, s: &str) -> Option<&str> {
        get(&self.vcomp, t, s)
    }

    /// `s` to the left of `t`.
    pub fn hcomp_of(&self, t: &str, s: &str) -> Option<&str> {
        get(&self.hcomp, t, s)
    }

    pub fn vid(&self, hmor: &str) -> Option<&str> {
        self.square_identity.get(hmor).map(String::as_str)
    }

    pub fn hid_of(&self, vmor: &str) -> Option<&str> {
        self.hid.get(vmor).map(String::as_str)
    }

    pub fn v_composable(&self, t: &str, s: &str) -> bool {
        match (self.squares.get(t), self.squares.get(s)) {
            (Some(a), Some(b)) => b.bottom == a.top,
            _ => false,
        }
    }

    pub fn h_composable(&self, t: &str, s: &str) -> bool {
        match (self.squares.get(t), self.squares.get(s)) {
            (Some(a), Some(b)) => b.right == a.left,
            _ => false,
        }
    }

    /// Left and right sides are identities.
    pub fn is_globular(&self, s: &str) -> bool {
        self.squares.get(s).is_some_and(|f| self.vertical.is_identity(&f.left) && self.vertical.is_identity(&f.right))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        r.absorb("horizontal", self.horizontal.validate());
        r.absorb("vertical", self.vertical.validate());
        if self.horizontal.objects != self.vertical.objects {
            r.push("horizontal and vertical objects differ", []);
        }
        let (h, v) = (&self.horizontal, &self.vertical);
        for (s, f) in &self.squares {
            let corners = (
                h.dom(&f.top),
                h.cod(&f.top),
                h.dom(&f.bottom),
                h.cod(&f.bottom),
                v.dom(&f.left),
                v.cod(&f.left),
                v.dom(&f.right),
                v.cod(&f.right),
            );
            let ok = match corners {
                (Some(tl), Some(tr), Some(bl), Some(br), Some(ll0), Some(ll1), Some(rr0), Some(rr1)) => {
                    tl == ll0 && bl == ll1 && tr == rr0 && br == rr1
                }
                _ => false,
            };
            if !ok {
                r.push("square corners", [s.as_str()]);
            }
        }
        for a in h.morphisms.keys() {
            match self.vid(a) {
                None => r.push("missing square identity", [a.as_str()]),
                Some(i) => {
                    let ok = self
                        .squares
                        .get(i)
                        .is_some_and(|f| &f.top == a && &f.bottom == a && v.is_identity(&f.left) && v.is_identity(&f.right));
                    if !ok {
                        r.push("square identity boundary", [a.as_str(), i]);
                    }
                }
            }
        }
        for f in v.morphisms.keys() {
            match self.hid_of(f) {
                None => r.push("missing horizontal identity", [f.as_str()]),
                Some(i) => {
                    let ok = self.squares.get(i).is_some_and(|fr| {
                        &fr.left == f
                            && &fr.right == f
                            && Some(fr.top.as_str()) == v.dom(f).and_then(|x| h.identity_of(x))
                            && Some(fr.bottom.as_str()) == v.cod(f).and_then(|y| h.identity_of(y))
                    });
                    if !ok {
                        r.push("horizontal identity boundary", [f.as_str(), i]);
                    }
                }
            }
        }
        self.validate_vertical(&mut r);
        self.validate_horizontal(&mut r);
        self.validate_hid(&mut r);
        self.validate_interchange(&mut r);
        r
    }

    fn validate_vertical(&self, r: &mut ValidationReport) {
        let v = &self.vertical;
        for ((t, s), c) in &self.vcomp {
            if !self.v_composable(t, s) {
                r.push("non-composable pair (vertical)", [t.as_str(), s.as_str()]);
                continue;
            }
            let (ft, fs) = (&self.squares[t], &self.squares[s]);
            let ok = self.squares.get(c).is_some_and(|fc| {
                fc.top == fs.top
                    && fc.bottom == ft.bottom
                    && Some(fc.left.as_str()) == v.composite(&ft.left, &fs.left)
                    && Some(fc.right.as_str()) == v.composite(&ft.right, &fs.right)
            });
            if !ok {
                r.push("vertical composite boundary", [t.as_str(), s.as_str(), c.as_str()]);
            }
        }
        for t in self.squares.keys() {
            for s in self.squares.keys() {
                if self.v_composable(t, s) && self.vcomp_of(t, s).is_none() {
                    r.push("missing vertical composite", [t.as_str(), s.as_str()]);
                }
            }
        }
        for (s, f) in &self.squares {
            if let Some(i) = self.vid(&f.top) {
                if self.vcomp_of(s, i) != Some(s.as_str()) {
                    r.push("vertical identity law", [s.as_str(), i]);
                }
            }
            if let Some(i) = self.vid(&f.bottom) {
                if self.vcomp_of(i, s) != Some(s.as_str()) {
                    r.push("vertical identity law", [i, s.as_str()]);
                }
            }
        }
        for ((t, s), ts) in &self.vcomp {
            if !self.v_composable(t, s) {
                continue;
            }
            for u in self.squares.keys() {
                if !self.v_composable(u, t) {
                    continue;
                }
                let left = self.vcomp_of(u, ts);
                let right = self.vcomp_of(u, t).and_then(|ut| self.vcomp_of(ut, s));
                if left.is_none() || left != right {
                    r.push("vertical associativity", [u.as_str(), t.as_str(), s.as_str()]);
                }
            }
        }
    }

    fn validate_horizontal(&self, r: &mut ValidationReport) {
        let h = &self.horizontal;
        for ((t, s), c) in &self.hcomp {
            if !self.h_composable(t, s) {
                r.push("non-composable pair (horizontal)", [t.as_str(), s.as_str()]);
                continue;
            }
            let (ft, fs) = (&self.squares[t], &self.squares[s]);
            let ok = self.squares.get(c).is_some_and(|fc| {
                fc.left == fs.left
                    && fc.right == ft.right
                    && Some(fc.top.as_str()) == h.composite(&ft.top, &fs.top)
                    && Some(fc.bottom.as_str()) == h.composite(&ft.bottom, &fs.bottom)
            });
            if !ok {
                r.push("horizontal composite boundary", [t.as_str(), s.as_str(), c.as_str()]);
            }
        }
        for t in self.squares.keys() {
            for s in self.squares.keys() {
                if self.h_composable(t, s) && self.hcomp_of(t, s).is_none() {
                    r.push("missing horizontal composite", [t.as_str(), s.as_str()]);
                }
            }
        }
        for (s, f) in &self.squares {
            if let Some(i) = self.hid_of(&f.left) {
                if self.hcomp_of(s, i) != Some(s.as_str()) {
                    r.push("horizontal identity law", [s.as_str(), i]);
                }
            }
            if let Some(i) = self.hid_of(&f.right) {
                if self.hcomp_of(i, s) != Some(s.as_str()) {
                    r.push("horizontal identity law", [i, s.as_str()]);
                }
            }
        }
        for ((t, s), ts) in &self.hcomp {
            if !self.h_composable(t, s) {
                continue;
            }
            for u in self.squares.keys() {
                if !self.h_composable(u, t) {
                    continue;
                }
                let left = self.hcomp_of(u, ts);
                let right = self.hcomp_of(u, t).and_then(|ut| self.hcomp_of(ut, s));
                if left.is_none() || left != right {
                    r.push("horizontal associativity", [u.as_str(), t.as_str(), s.as_str()]);
                }
            }
        }
        for ((b, a), ba) in &h.compose {
            let (Some(ib), Some(ia)) = (self.vid(b), self.vid(a)) else { continue };
            if self.hcomp_of(ib, ia) != self.vid(ba) {
                r.push("horizontal composite of square identities", [b.as_str(), a.as_str()]);
            }
        }
    }

    fn validate_hid(&self, r: &mut ValidationReport) {
        let (h, v) = (&self.horizontal, &self.vertical);
        for x in &v.objects {
            let (Some(ix), Some(one)) = (v.identity_of(x), h.identity_of(x)) else { continue };
            if self.hid_of(ix) != self.vid(one) {
                r.push("horizontal identity functor on identities", [x.as_str()]);
            }
        }
        for ((g, f), gf) in &v.compose {
            let (Some(ig), Some(i_f)) = (self.hid_of(g), self.hid_of(f)) else { continue };
            if self.vcomp_of(ig, i_f) != self.hid_of(gf) {
                r.push("horizontal identity functor on composites", [g.as_str(), f.as_str()]);
            }
        }
    }

    fn validate_interchange(&self, r: &mut ValidationReport) {
        let vpairs: Vec<(&str, &str, &str)> = self
            .vcomp
            .iter()
            .filter(|((t, s), _)| self.v_composable(t, s))
            .map(|((t, s), c)| (t.as_str(), s.as_str(), c.as_str()))
            .collect();
        for &(lower_l, upper_l, col_l) in &vpairs {
            for &(lower_r, upper_r, col_r) in &vpairs {
                if !self.h_composable(upper_r, upper_l) || !self.h_composable(lower_r, lower_l) {
                    continue;
                }
                let left = self.hcomp_of(col_r, col_l);
                let right = match (self.hcomp_of(upper_r, upper_l), self.hcomp_of(lower_r, lower_l)) {
                    (Some(up), Some(down)) => self.vcomp_of(down, up),
                    _ => None,
                };
                if left.is_none() || left != right {
                    r.push("interchange", [upper_l, upper_r, lower_l, lower_r]);
                }
            }
        }
    }
}
