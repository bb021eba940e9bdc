//! Bounded evidence for the length of Q_B.

use serde::Serialize;

use super::interchange::{Flattener, DEFAULT_EFFORT};
use super::signature::Signature;
use super::universe::{Bounds, Universe};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LengthEvidence {
    /// Least k such that every enumerated term of the free H_{k+1} rewrites
    /// into the free V_k. Equals the depth when no smaller k is consistent,
    /// since H_{k+1} is not enumerated beyond the depth.
    pub consistent_with_length: usize,
    /// A term of H_{k+1} left outside V_k for k one below the reported value.
    pub counterexample: Option<String>,
    /// Number of terms checked for each k.
    pub checked: Vec<usize>,
    pub bounds: Bounds,
}

/// For k = 1, 2, …, checks every enumerated word of layer k + 1 (the terms
/// of H_{k+1} outside H_k; H_k ⊆ V_k holds already) by interchange
/// flattening.
pub fn free_length_evidence(sig: &Signature, u: &Universe) -> LengthEvidence {
    let depth = u.bounds.depth;
    let mut checked = Vec::new();
    let mut counterexample = None;
    for k in 1..depth {
        let mut n = 0;
        let mut failure = None;
        for e in u.entries.iter().filter(|e| e.e_layer == Some(k + 1)) {
            n += 1;
            let (t, _) = Flattener::new(sig, DEFAULT_EFFORT).flatten(e.term());
            if t.v_layer() > k {
                failure = Some(e.term().render(sig));
                break;
            }
        }
        checked.push(n);
        match failure {
            None => return LengthEvidence { consistent_with_length: k, counterexample, checked, bounds: u.bounds },
            Some(f) => counterexample = Some(f),
        }
    }
    LengthEvidence { consistent_with_length: depth, counterexample, checked, bounds: u.bounds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeggd::universe::build_layers;
    use crate::presentations::*;

    #[test]
    fn group_case_has_length_one() {
        let b = DecoratedBicategory::new(
            delooping(&FiniteGroup::cyclic_named(2, "g")),
            double_delooping(&FiniteGroup::cyclic_named(3, "a")).unwrap(),
        );
        let s = Signature::new(&b).unwrap();
        let u = build_layers(&s, Bounds::default()).unwrap();
        let ev = free_length_evidence(&s, &u);
        assert_eq!(ev.consistent_with_length, 1);
        assert_eq!(ev.counterexample, None);
        assert!(ev.checked[0] > 0);
    }

    #[test]
    fn trivial_base_has_length_one() {
        let b = DecoratedBicategory::new(delooping(&FiniteGroup::cyclic(1)), double_delooping(&FiniteGroup::cyclic(1)).unwrap());
        let s = Signature::new(&b).unwrap();
        let u = build_layers(&s, Bounds::default()).unwrap();
        assert_eq!(free_length_evidence(&s, &u).consistent_with_length, 1);
    }
}
