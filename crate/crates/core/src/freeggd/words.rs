//! Parenthesized compatible words and leafwise evaluation.

use thiserror::Error;

use super::signature::Signature;
use super::term::{Boundary, SquareTerm};

/// Something with a horizontal source and target side.
pub trait Sided {
    type Side: PartialEq + Clone + std::fmt::Debug;
    fn source(&self) -> Self::Side;
    fn target(&self) -> Self::Side;
}

/// A parenthesized word; `Node(a, b)` is `a` followed by `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Word<T> {
    Leaf(T),
    Node(Box<Word<T>>, Box<Word<T>>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("leaves are not compatible: {0}")]
    Incompatible(String),
    #[error("leaf map does not intertwine sides: {0}")]
    Intertwining(String),
}

impl<T> Word<T> {
    pub fn leaves(&self) -> Vec<&T> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a T>) {
        match self {
            Word::Leaf(x) => out.push(x),
            Word::Node(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Word::Leaf(_) => 1,
            Word::Node(a, b) => a.len() + b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The bracketing with leaves forgotten.
    pub fn shape(&self) -> Word<()> {
        match self {
            Word::Leaf(_) => Word::Leaf(()),
            Word::Node(a, b) => Word::Node(Box::new(a.shape()), Box::new(b.shape())),
        }
    }

    pub fn map<U>(&self, f: &mut impl FnMut(&T) -> U) -> Word<U> {
        match self {
            Word::Leaf(x) => Word::Leaf(f(x)),
            Word::Node(a, b) => Word::Node(Box::new(a.map(f)), Box::new(b.map(f))),
        }
    }

    /// Evaluates the word with a binary operation following its bracketing.
    pub fn fold<U, E>(&self, leaf: &mut impl FnMut(&T) -> Result<U, E>, node: &mut impl FnMut(U, U) -> Result<U, E>) -> Result<U, E> {
        match self {
            Word::Leaf(x) => leaf(x),
            Word::Node(a, b) => {
                let l = a.fold(leaf, node)?;
                let r = b.fold(leaf, node)?;
                node(l, r)
            }
        }
    }
}

impl<T: Sided> Word<T> {
    /// s̃: source of the leftmost leaf.
    pub fn source(&self) -> T::Side {
        match self {
            Word::Leaf(x) => x.source(),
            Word::Node(a, _) => a.source(),
        }
    }

    /// t̃: target of the rightmost leaf.
    pub fn target(&self) -> T::Side {
        match self {
            Word::Leaf(x) => x.target(),
            Word::Node(_, b) => b.target(),
        }
    }

    pub fn is_compatible(&self) -> bool {
        self.leaves().windows(2).all(|w| w[0].target() == w[1].source())
    }

    /// The concatenation `a ∗ b`.
    pub fn concat(a: Word<T>, b: Word<T>) -> Result<Word<T>, WordError> {
        if a.target() != b.source() {
            return Err(WordError::Incompatible(format!("{:?} vs {:?}", a.target(), b.source())));
        }
        Ok(Word::Node(Box::new(a), Box::new(b)))
    }
}

/// Every bracketing of `leaves` (Catalan many), in a fixed order.
pub fn parenthesizations<T: Clone>(leaves: &[T]) -> Vec<Word<T>> {
    if leaves.len() == 1 {
        return vec![Word::Leaf(leaves[0].clone())];
    }
    let mut out = Vec::new();
    for k in 1..leaves.len() {
        let lefts = parenthesizations(&leaves[..k]);
        let rights = parenthesizations(&leaves[k..]);
        for l in &lefts {
            for r in &rights {
                out.push(Word::Node(Box::new(l.clone()), Box::new(r.clone())));
            }
        }
    }
    out
}

/// All compatible sequences over `items` with total weight in `1..=bound`.
pub fn compatible_sequences<T: Sided + Clone>(items: &[T], bound: usize, weight: impl Fn(&T) -> usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn go<T: Sided + Clone>(items: &[T], left: usize, weight: &impl Fn(&T) -> usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<T>>) {
        for (i, x) in items.iter().enumerate() {
            let w = weight(x);
            if w > left {
                continue;
            }
            if let Some(&last) = cur.last() {
                if items[last].target() != x.source() {
                    continue;
                }
            }
            cur.push(i);
            out.push(cur.iter().map(|&j| items[j].clone()).collect());
            go(items, left - w, weight, cur, out);
            cur.pop();
        }
    }
    go(items, bound, &weight, &mut cur, &mut out);
    out
}

/// All compatible words with at most `bound` leaves, all parenthesizations.
pub fn enumerate_words<T: Sided + Clone>(items: &[T], bound: usize) -> Vec<Word<T>> {
    compatible_sequences(items, bound, |_| 1).iter().flat_map(|s| parenthesizations(s)).collect()
}

/// μ_{ψ,φ}: leafwise evaluation, checking that ψ intertwines the sides via φ.
pub fn mu<T: Sided, U: Sided>(psi: &impl Fn(&T) -> U, phi: &impl Fn(&T::Side) -> U::Side, w: &Word<T>) -> Result<Word<U>, WordError> {
    let mut err = None;
    let out = w.map(&mut |x| {
        let y = psi(x);
        if err.is_none() && (y.source() != phi(&x.source()) || y.target() != phi(&x.target())) {
            err = Some(format!("{:?} -> {:?}", x.source(), y.source()));
        }
        y
    });
    match err {
        Some(e) => Err(WordError::Intertwining(e)),
        None => Ok(out),
    }
}

/// A term together with its boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Typed {
    pub term: SquareTerm,
    pub boundary: Boundary,
}

impl Typed {
    pub fn new(sig: &Signature, term: SquareTerm) -> Option<Self> {
        let boundary = sig.boundary(&term)?;
        Some(Typed { term, boundary })
    }
}

impl Sided for Typed {
    type Side = u32;
    fn source(&self) -> u32 {
        self.boundary.left
    }
    fn target(&self) -> u32 {
        self.boundary.right
    }
}

impl Word<Typed> {
    /// The horizontal term with the same bracketing.
    pub fn to_term(&self) -> SquareTerm {
        match self {
            Word::Leaf(x) => x.term.clone(),
            Word::Node(a, b) => SquareTerm::h(a.to_term(), b.to_term()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug, PartialEq)]
    struct Arr(u8, u8);

    impl Sided for Arr {
        type Side = u8;
        fn source(&self) -> u8 {
            self.0
        }
        fn target(&self) -> u8 {
            self.1
        }
    }

    #[test]
    fn catalan_counts() {
        let catalan = [1, 1, 2, 5, 14, 42];
        for n in 1..=6 {
            assert_eq!(parenthesizations(&vec![0; n]).len(), catalan[n - 1]);
        }
    }

    #[test]
    fn single_leaf_and_three_leaves() {
        assert_eq!(enumerate_words(&[Arr(0, 0)], 1).len(), 1);
        let chain = [Arr(0, 1), Arr(1, 2), Arr(2, 3)];
        let three: Vec<_> = enumerate_words(&chain, 3).into_iter().filter(|w| w.len() == 3).collect();
        assert_eq!(three.len(), 2);
    }

    #[test]
    fn pair_count_matches_brute_force() {
        let items = [Arr(0, 0), Arr(0, 1), Arr(1, 0), Arr(1, 1), Arr(0, 0)];
        let pairs = enumerate_words(&items, 2).into_iter().filter(|w| w.len() == 2).count();
        let mut brute = 0;
        for a in &items {
            for b in &items {
                if a.1 == b.0 {
                    brute += 1;
                }
            }
        }
        assert_eq!(pairs, brute);
    }

    #[test]
    fn mu_preserves_shape_and_concatenation() {
        let items = [Arr(0, 1), Arr(1, 0), Arr(0, 0)];
        let psi = |a: &Arr| Arr(a.0 + 5, a.1 + 5);
        let phi = |s: &u8| s + 5;
        let words = enumerate_words(&items, 3);
        for w in &words {
            let m = mu(&psi, &phi, w).unwrap();
            assert_eq!(m.shape(), w.shape());
        }
        for a in &words {
            for b in &words {
                if let Ok(ab) = Word::concat(a.clone(), b.clone()) {
                    let lhs = mu(&psi, &phi, &ab).unwrap();
                    let rhs = Word::concat(mu(&psi, &phi, a).unwrap(), mu(&psi, &phi, b).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        let bad = |a: &Arr| Arr(a.1, a.0);
        assert!(mu(&bad, &|s: &u8| *s, &Word::Leaf(Arr(0, 1))).is_err());
    }
}
