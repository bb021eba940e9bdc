//! Single-entry table corruptions, used as mutation controls for validation.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::dsl::Presentation;

/// A description of one corrupted entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mutation {
    pub table: &'static str,
    pub key: String,
    pub from: String,
    pub to: String,
}

enum Table<'a> {
    Unary(&'a mut BTreeMap<String, String>),
    Binary(&'a mut BTreeMap<(String, String), String>),
}

fn tables(p: &mut Presentation) -> Vec<(&'static str, Table<'_>, Vec<String>)> {
    match p {
        Presentation::Category(c) => {
            let pool: Vec<String> = c.morphisms.keys().cloned().collect();
            vec![("identity", Table::Unary(&mut c.identity), pool.clone()), ("compose", Table::Binary(&mut c.compose), pool)]
        }
        Presentation::TwoCategory(s) => {
            let ones: Vec<String> = s.cells1.keys().cloned().collect();
            let twos: Vec<String> = s.cells2.keys().cloned().collect();
            vec![
                ("identity", Table::Unary(&mut s.identity1), ones.clone()),
                ("hcompose1", Table::Binary(&mut s.hcompose1), ones),
                ("identity2", Table::Unary(&mut s.identity2), twos.clone()),
                ("vcompose2", Table::Binary(&mut s.vcompose2), twos.clone()),
                ("hcompose2", Table::Binary(&mut s.hcompose2), twos),
            ]
        }
        Presentation::Decorated(d) => {
            let pool: Vec<String> = d.decoration.morphisms.keys().cloned().collect();
            let twos: Vec<String> = d.bicat.cells2.keys().cloned().collect();
            vec![
                ("compose", Table::Binary(&mut d.decoration.compose), pool),
                ("vcompose2", Table::Binary(&mut d.bicat.vcompose2), twos.clone()),
                ("hcompose2", Table::Binary(&mut d.bicat.hcompose2), twos),
            ]
        }
        Presentation::Double(c) => {
            let sq: Vec<String> = c.squares.keys().cloned().collect();
            let vm: Vec<String> = c.vertical.morphisms.keys().cloned().collect();
            vec![
                ("vcompose", Table::Binary(&mut c.vertical.compose), vm),
                ("square_identity", Table::Unary(&mut c.square_identity), sq.clone()),
                ("vcomp", Table::Binary(&mut c.vcomp), sq.clone()),
                ("hcomp", Table::Binary(&mut c.hcomp), sq.clone()),
                ("hid", Table::Unary(&mut c.hid), sq),
            ]
        }
    }
}

/// Replaces one randomly chosen table entry by a different name of the same
/// kind. Returns `None` when no table admits a change.
pub fn mutate<R: Rng>(p: &Presentation, rng: &mut R) -> Option<(Presentation, Mutation)> {
    let mut out = p.clone();
    let mut candidates: Vec<_> = tables(&mut out)
        .into_iter()
        .filter(|(_, t, pool)| {
            pool.len() > 1
                && match t {
                    Table::Unary(m) => !m.is_empty(),
                    Table::Binary(m) => !m.is_empty(),
                }
        })
        .collect();
    if candidates.is_empty() {
        return None;
    }
    let k = rng.gen_range(0..candidates.len());
    let (table, t, pool) = candidates.swap_remove(k);
    let (key, from, slot) = match t {
        Table::Unary(m) => {
            let i = rng.gen_range(0..m.len());
            let (k, v) = m.iter_mut().nth(i)?;
            (k.clone(), v.clone(), v)
        }
        Table::Binary(m) => {
            let i = rng.gen_range(0..m.len());
            let ((a, b), v) = m.iter_mut().nth(i)?;
            (format!("({a}, {b})"), v.clone(), v)
        }
    };
    let others: Vec<&String> = pool.iter().filter(|x| **x != from).collect();
    let to = (*others.choose(rng)?).clone();
    *slot = to.clone();
    Some((out, Mutation { table, key, from, to }))
}
