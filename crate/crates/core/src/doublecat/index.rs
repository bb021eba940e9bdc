use std::collections::{BTreeSet, HashMap};

use crate::presentations::DoubleCategory;

/// Squares of a double category numbered in name order, with both
/// composition tables as lists of `(t, s, result)` triples.
pub struct SquareIndex<'a> {
    pub names: Vec<&'a str>,
    pub pos: HashMap<&'a str, usize>,
    pub vpairs: Vec<(usize, usize, usize)>,
    pub hpairs: Vec<(usize, usize, usize)>,
}

impl<'a> SquareIndex<'a> {
    pub fn new(c: &'a DoubleCategory) -> Self {
        let names: Vec<&str> = c.squares.keys().map(String::as_str).collect();
        let pos: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        let triples = |m: &'a std::collections::BTreeMap<(String, String), String>| {
            m.iter()
                .filter_map(|((t, s), u)| Some((*pos.get(t.as_str())?, *pos.get(s.as_str())?, *pos.get(u.as_str())?)))
                .collect::<Vec<_>>()
        };
        let vpairs = triples(&c.vcomp);
        let hpairs = triples(&c.hcomp);
        SquareIndex { names, pos, vpairs, hpairs }
    }

    pub fn set_of<'b>(&self, names: impl IntoIterator<Item = &'b str>) -> BTreeSet<usize> {
        names.into_iter().filter_map(|n| self.pos.get(n).copied()).collect()
    }

    pub fn names_of(&self, set: &BTreeSet<usize>) -> Vec<String> {
        set.iter().map(|&i| self.names[i].to_string()).collect()
    }

    /// Closure of `seed` under vertical (`vertical = true`) or horizontal composition.
    pub fn closure(&self, seed: &BTreeSet<usize>, vertical: bool) -> BTreeSet<usize> {
        let pairs = if vertical { &self.vpairs } else { &self.hpairs };
        let mut set = seed.clone();
        loop {
            let mut grew = false;
            for &(t, s, u) in pairs {
                if set.contains(&t) && set.contains(&s) && set.insert(u) {
                    grew = true;
                }
            }
            if !grew {
                return set;
            }
        }
    }

    /// Closure under both compositions.
    pub fn double_closure(&self, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut set = seed.clone();
        loop {
            let next = self.closure(&self.closure(&set, true), false);
            if next == set {
                return set;
            }
            set = next;
        }
    }
}
