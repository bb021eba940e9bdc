//! Ternary equality in Q_B.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::rewrite::RewriteSystem;
use super::signature::Signature;
use super::term::SquareTerm;
use crate::presentations::{FiniteGroup, POINT_ONE_CELL};

/// A double functor out of Q_B, seen through its values on terms.
pub trait TermModel {
    fn name(&self) -> String;
    /// The value of `t`, or `None` when `t` is outside the model's domain.
    fn eval(&self, t: &SquareTerm) -> Option<String>;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Decision {
    Equal,
    Distinct { reason: String },
    Unknown,
}

/// Is the square an endomorphism of an identity 1-cell with identity sides?
fn is_central(sig: &Signature, t: &SquareTerm) -> bool {
    sig.boundary(t).is_some_and(|b| {
        b.top == b.bottom && sig.is_id1(b.top) && b.left == b.right && sig.is_did(b.left) && {
            let x = sig.c1src[b.top as usize];
            sig.did[x as usize] == b.left
        }
    })
}

/// Terms reachable by swapping two adjacent segments of the top-level path
/// that are both central squares (Eckmann–Hilton).
fn swaps(sig: &Signature, t: &SquareTerm) -> Vec<SquareTerm> {
    let SquareTerm::V(xs) = t else { return Vec::new() };
    let n = xs.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let left = SquareTerm::V(xs[i..j].to_vec());
            if !is_central(sig, &left) {
                continue;
            }
            for k in j + 1..=n {
                let right = SquareTerm::V(xs[j..k].to_vec());
                if !is_central(sig, &right) {
                    continue;
                }
                let mut ys = xs[..i].to_vec();
                ys.extend_from_slice(&xs[j..k]);
                ys.extend_from_slice(&xs[i..j]);
                ys.extend_from_slice(&xs[k..]);
                out.push(sig.canonical(&SquareTerm::V(ys)));
            }
        }
    }
    out
}

/// Equal if the canonical forms agree or are joined by Eckmann–Hilton swaps
/// within the search bound; Distinct if the boundaries differ or a model
/// separates the terms; Unknown otherwise.
pub fn decide_eq(sig: &Signature, t1: &SquareTerm, t2: &SquareTerm, rs: &RewriteSystem, models: &[&dyn TermModel]) -> Decision {
    let (b1, b2) = (sig.boundary(t1), sig.boundary(t2));
    if b1.is_none() || b2.is_none() {
        return Decision::Distinct { reason: "ill-formed term".into() };
    }
    if b1 != b2 {
        return Decision::Distinct { reason: "boundaries differ".into() };
    }
    let (c1, c2) = (sig.canonical(t1), sig.canonical(t2));
    if c1 == c2 {
        return Decision::Equal;
    }
    for m in models {
        if let (Some(v1), Some(v2)) = (m.eval(t1), m.eval(t2)) {
            if v1 != v2 {
                return Decision::Distinct { reason: format!("separated by {}: {v1} vs {v2}", m.name()) };
            }
        }
    }
    let mut seen: HashSet<SquareTerm> = HashSet::from([c1.clone()]);
    let mut queue = VecDeque::from([c1]);
    while let Some(t) = queue.pop_front() {
        if seen.len() > rs.depth_bound {
            break;
        }
        for u in swaps(sig, &t) {
            if u == c2 {
                return Decision::Equal;
            }
            if u.size() <= rs.size_bound.max(c2.size()) && seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    Decision::Unknown
}

/// The group data of a decorated bicategory of the form (ΩG, 2ΩA).
pub struct GroupCase {
    pub g: FiniteGroup,
    pub a: FiniteGroup,
    /// Decoration morphism index to element of G.
    pub dmor_elem: Vec<usize>,
    /// 2-cell index to element of A.
    pub cell_elem: Vec<usize>,
}

impl GroupCase {
    /// Recognizes (ΩG, 2ΩA): one object, one 1-cell, invertible decoration.
    pub fn detect(sig: &Signature) -> Option<Self> {
        if sig.objects.len() != 1 || sig.cells1.len() != 1 {
            return None;
        }
        let nd = sig.dmor.len() as u32;
        let table: Vec<Vec<usize>> =
            (0..nd).map(|x| (0..nd).map(|y| sig.dcomp(x, y).map(|z| z as usize)).collect::<Option<_>>()).collect::<Option<_>>()?;
        let g = FiniteGroup::from_table(sig.dmor.clone(), table).ok()?;
        let nc = sig.cells2.len() as u32;
        let table: Vec<Vec<usize>> =
            (0..nc).map(|x| (0..nc).map(|y| sig.v2(x, y).map(|z| z as usize)).collect::<Option<_>>()).collect::<Option<_>>()?;
        let a = FiniteGroup::from_table(sig.cells2.clone(), table).ok()?;
        a.check_abelian().ok()?;
        Some(GroupCase { dmor_elem: (0..nd as usize).collect(), cell_elem: (0..nc as usize).collect(), g, a })
    }

    /// One semidirect model `A ⋊ G` per action of G on A.
    pub fn models(&self) -> Vec<SemidirectModel<'_>> {
        self.g.actions_on(&self.a).into_iter().enumerate().map(|(i, act)| SemidirectModel { case: self, act, index: i }).collect()
    }
}

/// Evaluation of terms in `A ⋊ G` for a fixed action.
pub struct SemidirectModel<'a> {
    case: &'a GroupCase,
    act: Vec<Vec<usize>>,
    index: usize,
}

impl SemidirectModel<'_> {
    fn value(&self, t: &SquareTerm) -> Option<(usize, usize)> {
        let (g, a) = (&self.case.g, &self.case.a);
        match t {
            SquareTerm::Gen(super::term::Generator::Glob(p)) => Some((self.case.cell_elem[*p as usize], g.identity())),
            SquareTerm::Gen(super::term::Generator::HId(f)) => Some((a.identity(), self.case.dmor_elem[*f as usize])),
            SquareTerm::H(l, r) => {
                let (x1, v1) = self.value(l)?;
                let (x2, v2) = self.value(r)?;
                (v1 == v2).then(|| (a.mul(x1, x2), v1))
            }
            SquareTerm::V(xs) => {
                let mut acc = (a.identity(), g.identity());
                for x in xs {
                    let (x2, v2) = self.value(x)?;
                    acc = (a.mul(x2, self.act[v2][acc.0]), g.mul(v2, acc.1));
                }
                Some(acc)
            }
        }
    }
}

impl TermModel for SemidirectModel<'_> {
    fn name(&self) -> String {
        format!("semidirect model #{} over {POINT_ONE_CELL}", self.index)
    }

    fn eval(&self, t: &SquareTerm) -> Option<String> {
        self.value(t).map(|(x, v)| format!("({},{})", self.case.a.name(x), self.case.g.name(v)))
    }
}

/// [`decide_eq`] with the semidirect models added automatically when B is
/// of the form (ΩG, 2ΩA).
pub fn decide_eq_auto(sig: &Signature, t1: &SquareTerm, t2: &SquareTerm, rs: &RewriteSystem) -> Decision {
    match GroupCase::detect(sig) {
        Some(case) => {
            let models = case.models();
            let refs: Vec<&dyn TermModel> = models.iter().map(|m| m as &dyn TermModel).collect();
            decide_eq(sig, t1, t2, rs, &refs)
        }
        None => decide_eq(sig, t1, t2, rs, &[]),
    }
}
