//! Finite groups given by multiplication tables.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("table shape does not match {0} elements")]
    Shape(usize),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("table has no identity element")]
    NoIdentity,
    #[error("non-associative table: ({0}{1}){2} differs from {0}({1}{2})")]
    NonAssociative(String, String, String),
    #[error("element `{0}` has no inverse")]
    NonInvertible(String),
    #[error("non-abelian: {0} and {1} do not commute")]
    NonAbelian(String, String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
}

/// A finite group; `table[a][b]` is the index of `a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    pub fn from_table(elements: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = elements.len();
        if n == 0 || table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n)) {
            return Err(GroupError::Shape(n));
        }
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(GroupError::DuplicateName(e.clone()));
            }
        }
        let identity = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)).ok_or(GroupError::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NonAssociative(elements[a].clone(), elements[b].clone(), elements[c].clone()));
                    }
                }
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
                return Err(GroupError::NonInvertible(elements[a].clone()));
            }
        }
        Ok(FiniteGroup { elements, table, identity })
    }

    /// Z/n with elements named `0..n-1`.
    pub fn cyclic(n: usize) -> Self {
        let elements = (0..n).map(|k| k.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(elements, table).expect("cyclic group table")
    }

    /// Z/n with elements named `{prefix}0..{prefix}{n-1}`.
    pub fn cyclic_named(n: usize, prefix: &str) -> Self {
        let mut g = Self::cyclic(n);
        g.elements = (0..n).map(|k| format!("{prefix}{k}")).collect();
        g
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// The symmetric group on three letters, elements named by one-line notation.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let elements = perms.iter().map(|p| format!("s{}{}{}", p[0], p[1], p[2])).collect();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let table = perms.iter().map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
        Self::from_table(elements, table).expect("S3 table")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).expect("group inverse")
    }

    pub fn name(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn check_abelian(&self) -> Result<(), GroupError> {
        for a in 0..self.order() {
            for b in 0..a {
                if self.table[a][b] != self.table[b][a] {
                    return Err(GroupError::NonAbelian(self.elements[b].clone(), self.elements[a].clone()));
                }
            }
        }
        Ok(())
    }

    /// All automorphisms, as permutations of element indices, in lexicographic order.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_automorphism(0, &mut perm, &mut used, &mut out);
        out
    }

    fn extend_automorphism(&self, i: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = self.order();
        if i == n {
            let hom = (0..n).all(|a| (0..n).all(|b| perm[self.mul(a, b)] == self.mul(perm[a], perm[b])));
            if hom {
                out.push(perm.clone());
            }
            return;
        }
        for img in 0..n {
            if !used[img] {
                used[img] = true;
                perm[i] = img;
                self.extend_automorphism(i + 1, perm, used, out);
                used[img] = false;
            }
        }
        perm[i] = usize::MAX;
    }

    /// Every homomorphism `self → Aut(a)`, each as a table `act[g][x]`.
    pub fn actions_on(&self, a: &FiniteGroup) -> Vec<Vec<Vec<usize>>> {
        let auts = a.automorphisms();
        let n = self.order();
        let mut out = Vec::new();
        let mut choice = vec![0usize; n];
        loop {
            let act: Vec<Vec<usize>> = choice.iter().map(|&k| auts[k].clone()).collect();
            if validate_action(self, a, &act).is_ok() {
                out.push(act);
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                choice[i] += 1;
                if choice[i] < auts.len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}

/// Checks that `act[g]` is an automorphism of `a` for each `g` and that
/// `g ↦ act[g]` is a homomorphism.
pub fn validate_action(g: &FiniteGroup, a: &FiniteGroup, act: &[Vec<usize>]) -> Result<(), GroupError> {
    let (n, m) = (g.order(), a.order());
    if act.len() != n || act.iter().any(|row| row.len() != m) {
        return Err(GroupError::InvalidAction("table shape".into()));
    }
    for (k, row) in act.iter().enumerate() {
        let mut seen = vec![false; m];
        for &x in row {
            if x >= m || seen[x] {
                return Err(GroupError::InvalidAction(format!("{} is not a bijection", g.name(k))));
            }
            seen[x] = true;
        }
        for x in 0..m {
            for y in 0..m {
                if row[a.mul(x, y)] != a.mul(row[x], row[y]) {
                    return Err(GroupError::InvalidAction(format!("{} is not a homomorphism", g.name(k))));
                }
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            for x in 0..m {
                if act[g.mul(p, q)][x] != act[p][act[q][x]] {
                    return Err(GroupError::InvalidAction(format!("action of {}{} differs from the composite", g.name(p), g.name(q))));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_non_abelian_of_order_six() {
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(matches!(s3.check_abelian(), Err(GroupError::NonAbelian(_, _))));
    }

    #[test]
    fn broken_tables_are_rejected() {
        let names = vec!["e".to_string(), "g".to_string()];
        let err = FiniteGroup::from_table(names.clone(), vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NonInvertible("g".into()));
        let err = FiniteGroup::from_table(names, vec![vec![1, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NoIdentity);
    }

    #[test]
    fn automorphism_and_action_counts() {
        assert_eq!(FiniteGroup::cyclic(3).automorphisms().len(), 2);
        assert_eq!(FiniteGroup::cyclic(4).automorphisms().len(), 2);
        assert_eq!(FiniteGroup::cyclic(2).automorphisms().len(), 1);
        // Z2 → Aut(Z3) = Z2: trivial and inversion.
        assert_eq!(FiniteGroup::cyclic(2).actions_on(&FiniteGroup::cyclic(3)).len(), 2);
        // Z3 → Aut(Z2) = 1.
        assert_eq!(FiniteGroup::cyclic(3).actions_on(&FiniteGroup::cyclic(2)).len(), 1);
    }
}
