//! Standard constructions: deloopings, quintets, commuting squares and
//! semidirect internalizations of (ΩG, 2ΩA).

use std::collections::BTreeMap;

use super::category::{Arrow, FiniteCategory};
use super::double::{DoubleCategory, Frame};
use super::group::{validate_action, FiniteGroup, GroupError};
use super::two_category::Strict2Category;

/// The single object of one-object constructions.
pub const POINT: &str = "pt";
/// The single (identity) 1-cell of a double delooping.
pub const POINT_ONE_CELL: &str = "1_pt";

/// ΩG: one object, one morphism per group element.
pub fn delooping(g: &FiniteGroup) -> FiniteCategory {
    let mut c = FiniteCategory::new();
    c.add_object(POINT);
    for e in &g.elements {
        c.add_morphism(e.clone(), POINT, POINT);
    }
    c.identity.insert(POINT.into(), g.name(g.identity()).into());
    for a in 0..g.order() {
        for b in 0..g.order() {
            c.set_composite(g.name(a), g.name(b), g.name(g.mul(a, b)));
        }
        c.inverse.insert(g.name(a).into(), g.name(g.inv(a)).into());
    }
    c
}

/// 2ΩA: one 0-cell, one 1-cell, 2-cells the elements of the abelian group A.
pub fn double_delooping(a: &FiniteGroup) -> Result<Strict2Category, GroupError> {
    a.check_abelian()?;
    let mut s = Strict2Category::default();
    s.cells0.insert(POINT.into());
    s.cells1.insert(POINT_ONE_CELL.into(), Arrow::new(POINT, POINT));
    s.identity1.insert(POINT.into(), POINT_ONE_CELL.into());
    s.hcompose1.insert((POINT_ONE_CELL.into(), POINT_ONE_CELL.into()), POINT_ONE_CELL.into());
    for e in &a.elements {
        s.cells2.insert(e.clone(), Arrow::new(POINT_ONE_CELL, POINT_ONE_CELL));
    }
    s.identity2.insert(POINT_ONE_CELL.into(), a.name(a.identity()).into());
    for x in 0..a.order() {
        for y in 0..a.order() {
            let key = (a.name(x).to_string(), a.name(y).to_string());
            let val = a.name(a.mul(x, y)).to_string();
            s.vcompose2.insert(key.clone(), val.clone());
            s.hcompose2.insert(key, val);
        }
    }
    Ok(s)
}

fn commuting_square_name(t: &str, b: &str, l: &str, r: &str) -> String {
    format!("sq({t},{b},{l},{r})")
}

/// The double category of commuting squares of `d`: hmor = vmor = morphisms
/// of `d`, a square (t, b, l, r) exists iff `b ∘ l = r ∘ t`.
pub fn commuting_squares(d: &FiniteCategory) -> DoubleCategory {
    let mut c = DoubleCategory { horizontal: d.clone(), vertical: d.clone(), ..Default::default() };
    c.horizontal.inverse.clear();
    c.vertical.inverse.clear();
    let mut index: BTreeMap<Frame, String> = BTreeMap::new();
    for (t, ta) in &d.morphisms {
        for (l, la) in &d.morphisms {
            if la.dom != ta.dom {
                continue;
            }
            for (b, ba) in &d.morphisms {
                if ba.dom != la.cod {
                    continue;
                }
                for (r, ra) in &d.morphisms {
                    if ra.dom != ta.cod || ra.cod != ba.cod {
                        continue;
                    }
                    if d.composite(b, l).is_some() && d.composite(b, l) == d.composite(r, t) {
                        let frame = Frame::new(t, b, l, r);
                        let name = commuting_square_name(t, b, l, r);
                        c.squares.insert(name.clone(), frame.clone());
                        index.insert(frame, name);
                    }
                }
            }
        }
    }
    let lookup = |f: Frame| index.get(&f).cloned();
    for (s, fs) in &c.squares {
        for (t, ft) in &c.squares {
            if fs.bottom == ft.top {
                let frame = Frame::new(
                    &fs.top,
                    &ft.bottom,
                    d.composite(&ft.left, &fs.left).unwrap_or_default(),
                    d.composite(&ft.right, &fs.right).unwrap_or_default(),
                );
                if let Some(n) = lookup(frame) {
                    c.vcomp.insert((t.clone(), s.clone()), n);
                }
            }
            if fs.right == ft.left {
                let frame = Frame::new(
                    d.composite(&ft.top, &fs.top).unwrap_or_default(),
                    d.composite(&ft.bottom, &fs.bottom).unwrap_or_default(),
                    &fs.left,
                    &ft.right,
                );
                if let Some(n) = lookup(frame) {
                    c.hcomp.insert((t.clone(), s.clone()), n);
                }
            }
        }
    }
    for (f, fa) in &d.morphisms {
        let (Some(ix), Some(iy)) = (d.identity_of(&fa.dom), d.identity_of(&fa.cod)) else { continue };
        if let Some(n) = lookup(Frame::new(ix, iy, f, f)) {
            c.hid.insert(f.clone(), n);
        }
        if let Some(n) = lookup(Frame::new(f, f, ix, iy)) {
            c.square_identity.insert(f.clone(), n);
        }
    }
    c
}

/// The Ehresmann double category of quintets of `sigma`.
///
/// A square with top `a`, bottom `b`, left `f`, right `g` is a 2-cell
/// `α: g∘a ⇒ b∘f`. Globular squares are named after their 2-cell; the
/// others are named `α|a|b|f|g`.
pub fn quintets(sigma: &Strict2Category) -> DoubleCategory {
    let one = sigma.one_category();
    let mut c = DoubleCategory { horizontal: one.clone(), vertical: one.clone(), ..Default::default() };
    // (frame, 2-cell) ↦ square name
    let mut index: BTreeMap<(Frame, String), String> = BTreeMap::new();
    let mut cell_of: BTreeMap<String, String> = BTreeMap::new();
    for (a, aa) in &sigma.cells1 {
        for (f, fa) in &sigma.cells1 {
            if fa.dom != aa.dom {
                continue;
            }
            for (b, ba) in &sigma.cells1 {
                if ba.dom != fa.cod {
                    continue;
                }
                for (g, ga) in &sigma.cells1 {
                    if ga.dom != aa.cod || ga.cod != ba.cod {
                        continue;
                    }
                    let (Some(ga_), Some(bf)) = (sigma.hcomp1(g, a), sigma.hcomp1(b, f)) else { continue };
                    for (alpha, al) in &sigma.cells2 {
                        if al.dom != ga_ || al.cod != bf {
                            continue;
                        }
                        let globular = one.is_identity(f) && one.is_identity(g);
                        let name = if globular { alpha.clone() } else { format!("{alpha}|{a}|{b}|{f}|{g}") };
                        let frame = Frame::new(a, b, f, g);
                        c.squares.insert(name.clone(), frame.clone());
                        cell_of.insert(name.clone(), alpha.clone());
                        index.insert((frame, alpha.clone()), name);
                    }
                }
            }
        }
    }
    let find = |frame: Frame, cell: Option<&str>| cell.and_then(|x| index.get(&(frame, x.to_string())).cloned());
    let id2 = |x: &str| sigma.id2(x).unwrap_or_default().to_string();
    for (s, fs) in &c.squares {
        let alpha = &cell_of[s];
        for (t, ft) in &c.squares {
            let beta = &cell_of[t];
            if fs.bottom == ft.top {
                // α over β: (β ∗ id_f) • (id_g' ∗ α)
                let upper = sigma.hcomp2(&id2(&ft.right), alpha);
                let lower = sigma.hcomp2(beta, &id2(&fs.left));
                let cell = match (lower, upper) {
                    (Some(lo), Some(up)) => sigma.vcomp2(lo, up),
                    _ => None,
                };
                let frame = Frame::new(
                    &fs.top,
                    &ft.bottom,
                    one.composite(&ft.left, &fs.left).unwrap_or_default(),
                    one.composite(&ft.right, &fs.right).unwrap_or_default(),
                );
                if let Some(n) = find(frame, cell) {
                    c.vcomp.insert((t.clone(), s.clone()), n);
                }
            }
            if fs.right == ft.left {
                // α left of β: (id_b' ∗ α) • (β ∗ id_a)
                let first = sigma.hcomp2(beta, &id2(&fs.top));
                let second = sigma.hcomp2(&id2(&ft.bottom), alpha);
                let cell = match (second, first) {
                    (Some(x), Some(y)) => sigma.vcomp2(x, y),
                    _ => None,
                };
                let frame = Frame::new(
                    one.composite(&ft.top, &fs.top).unwrap_or_default(),
                    one.composite(&ft.bottom, &fs.bottom).unwrap_or_default(),
                    &fs.left,
                    &ft.right,
                );
                if let Some(n) = find(frame, cell) {
                    c.hcomp.insert((t.clone(), s.clone()), n);
                }
            }
        }
    }
    for (a, aa) in &sigma.cells1 {
        let (Some(ix), Some(iy)) = (one.identity_of(&aa.dom), one.identity_of(&aa.cod)) else { continue };
        if let Some(n) = find(Frame::new(a, a, ix, iy), sigma.id2(a)) {
            c.square_identity.insert(a.clone(), n);
        }
        if let Some(n) = find(Frame::new(ix, iy, a, a), sigma.id2(a)) {
            c.hid.insert(a.clone(), n);
        }
    }
    c
}

/// Name of the square `(a, g)` of a semidirect internalization.
pub fn semidirect_square_name(g: &FiniteGroup, a: &FiniteGroup, x: usize, v: usize) -> String {
    if v == g.identity() {
        a.name(x).to_string()
    } else {
        format!("{}@{}", a.name(x), g.name(v))
    }
}

/// The internalization of (ΩG, 2ΩA) whose squares form `A ⋊ G` for the
/// action `act[g][x] = g·x`.
///
/// Squares are pairs `(x, v)` with both vertical sides `v`; vertical
/// composition is the semidirect product, horizontal composition of
/// `(x, v)` and `(y, v)` is `(x + y, v)`, and `i_v = (0, v)`. With the
/// trivial action this is quintets(2ΩA) redecorated by ΩG.
pub fn semidirect_double(g: &FiniteGroup, a: &FiniteGroup, act: &[Vec<usize>]) -> Result<DoubleCategory, GroupError> {
    a.check_abelian()?;
    validate_action(g, a, act)?;
    let mut horizontal = FiniteCategory::new();
    horizontal.add_object(POINT);
    horizontal.add_identity(POINT, POINT_ONE_CELL);
    horizontal.set_composite(POINT_ONE_CELL, POINT_ONE_CELL, POINT_ONE_CELL);
    let mut c = DoubleCategory { horizontal, vertical: delooping(g), ..Default::default() };
    let name = |x: usize, v: usize| semidirect_square_name(g, a, x, v);
    let pairs: Vec<(usize, usize)> = (0..g.order()).flat_map(|v| (0..a.order()).map(move |x| (x, v))).collect();
    for &(x, v) in &pairs {
        c.squares.insert(name(x, v), Frame::new(POINT_ONE_CELL, POINT_ONE_CELL, g.name(v), g.name(v)));
    }
    for &(x1, v1) in &pairs {
        for &(x2, v2) in &pairs {
            // (x2, v2) below (x1, v1)
            let prod = name(a.mul(x2, act[v2][x1]), g.mul(v2, v1));
            c.vcomp.insert((name(x2, v2), name(x1, v1)), prod);
            if v1 == v2 {
                c.hcomp.insert((name(x2, v2), name(x1, v1)), name(a.mul(x1, x2), v1));
            }
        }
    }
    c.square_identity.insert(POINT_ONE_CELL.into(), name(a.identity(), g.identity()));
    for v in 0..g.order() {
        c.hid.insert(g.name(v).into(), name(a.identity(), v));
    }
    Ok(c)
}

/// The trivial action of `g` on `a`.
pub fn trivial_action(g: &FiniteGroup, a: &FiniteGroup) -> Vec<Vec<usize>> {
    vec![(0..a.order()).collect(); g.order()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delooping_z3_composes_by_addition() {
        let c = delooping(&FiniteGroup::cyclic(3));
        assert_eq!(c.objects.len(), 1);
        assert_eq!(c.morphisms.len(), 3);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(c.composite(&a.to_string(), &b.to_string()), Some(((a + b) % 3).to_string().as_str()));
            }
        }
        assert!(c.validate().is_valid());
    }

    #[test]
    fn delooping_trivial_group() {
        let c = delooping(&FiniteGroup::trivial());
        assert_eq!(c.morphisms.len(), 1);
        assert!(c.is_identity("0"));
    }

    #[test]
    fn double_delooping_rejects_s3() {
        assert!(matches!(double_delooping(&FiniteGroup::symmetric3()), Err(GroupError::NonAbelian(_, _))));
        let t = double_delooping(&FiniteGroup::trivial()).unwrap();
        assert_eq!(t.cells2.len(), 1);
        assert!(t.validate().is_valid());
    }

    #[test]
    fn quintets_of_double_delooping_has_group_squares() {
        let q = quintets(&double_delooping(&FiniteGroup::cyclic(3)).unwrap());
        assert_eq!(q.squares.len(), 3);
        assert_eq!(q.horizontal.morphisms.len(), 1);
        assert!(q.validate().is_valid(), "{:?}", q.validate());
    }

    #[test]
    fn semidirect_doubles_validate() {
        let (g, a) = (FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
        for act in g.actions_on(&a) {
            let c = semidirect_double(&g, &a, &act).unwrap();
            assert_eq!(c.squares.len(), 6);
            assert!(c.validate().is_valid(), "{:?}", c.validate());
        }
    }
}
