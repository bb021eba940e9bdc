//! Free square terms, their boundaries, layers and s-expression syntax.

use std::fmt::Write as _;

use thiserror::Error;

use super::signature::Signature;
use crate::presentations::dsl::quote_name;

/// A generator square: a 2-cell of B read as a globular square, or the
/// horizontal identity `i_f` on a decoration morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Glob(u32),
    HId(u32),
}

/// `H(a, b)` places `a` to the left of `b`; `V(xs)` stacks `xs[0]` on top.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SquareTerm {
    Gen(Generator),
    H(Box<SquareTerm>, Box<SquareTerm>),
    V(Vec<SquareTerm>),
}

/// Horizontal 1-cells `top`/`bottom` and decoration morphisms `left`/`right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Boundary {
    pub top: u32,
    pub bottom: u32,
    pub left: u32,
    pub right: u32,
}

impl SquareTerm {
    pub fn glob(phi: u32) -> Self {
        SquareTerm::Gen(Generator::Glob(phi))
    }

    pub fn hid(f: u32) -> Self {
        SquareTerm::Gen(Generator::HId(f))
    }

    pub fn h(a: SquareTerm, b: SquareTerm) -> Self {
        SquareTerm::H(Box::new(a), Box::new(b))
    }

    /// Right comb over `leaves` (at least one).
    pub fn h_comb(mut leaves: Vec<SquareTerm>) -> Self {
        let mut acc = leaves.pop().expect("non-empty word");
        while let Some(l) = leaves.pop() {
            acc = SquareTerm::h(l, acc);
        }
        acc
    }

    /// Leaves of the maximal horizontal tree rooted here, left to right.
    pub fn h_leaves(&self) -> Vec<&SquareTerm> {
        let mut out = Vec::new();
        fn go<'a>(t: &'a SquareTerm, out: &mut Vec<&'a SquareTerm>) {
            match t {
                SquareTerm::H(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                _ => out.push(t),
            }
        }
        go(self, &mut out);
        out
    }

    /// Number of generator occurrences.
    pub fn size(&self) -> usize {
        match self {
            SquareTerm::Gen(_) => 1,
            SquareTerm::H(a, b) => a.size() + b.size(),
            SquareTerm::V(xs) => xs.iter().map(SquareTerm::size).sum(),
        }
    }

    /// Horizontal layer: the least k with the term in E_k (so in H_k).
    pub fn e_layer(&self) -> usize {
        match self {
            SquareTerm::Gen(_) => 1,
            SquareTerm::H(..) => self
                .h_leaves()
                .into_iter()
                .map(|l| match l {
                    SquareTerm::V(_) => l.v_layer() + 1,
                    _ => l.e_layer(),
                })
                .max()
                .unwrap_or(1),
            SquareTerm::V(_) => self.v_layer() + 1,
        }
    }

    /// Vertical layer: the least k with the term in F_k (so in V_k).
    pub fn v_layer(&self) -> usize {
        match self {
            SquareTerm::V(xs) => xs.iter().map(SquareTerm::v_layer).max().unwrap_or(1),
            _ => self.e_layer(),
        }
    }

    /// Applies `f` to every generator.
    pub fn map_generators(&self, f: &mut impl FnMut(Generator) -> SquareTerm) -> SquareTerm {
        match self {
            SquareTerm::Gen(g) => f(*g),
            SquareTerm::H(a, b) => SquareTerm::h(a.map_generators(f), b.map_generators(f)),
            SquareTerm::V(xs) => SquareTerm::V(xs.iter().map(|x| x.map_generators(f)).collect()),
        }
    }

    pub fn render(&self, sig: &Signature) -> String {
        let mut s = String::new();
        self.render_into(sig, &mut s);
        s
    }

    fn render_into(&self, sig: &Signature, s: &mut String) {
        match self {
            SquareTerm::Gen(Generator::Glob(p)) => {
                let _ = write!(s, "(g {})", quote_name(&sig.cells2[*p as usize]));
            }
            SquareTerm::Gen(Generator::HId(f)) => {
                let _ = write!(s, "(id {})", quote_name(&sig.dmor[*f as usize]));
            }
            SquareTerm::H(a, b) => {
                s.push_str("(h ");
                a.render_into(sig, s);
                s.push(' ');
                b.render_into(sig, s);
                s.push(')');
            }
            SquareTerm::V(xs) => {
                s.push_str("(v");
                for x in xs {
                    s.push(' ');
                    x.render_into(sig, s);
                }
                s.push(')');
            }
        }
    }
}

impl Signature {
    pub fn generator_boundary(&self, g: Generator) -> Boundary {
        match g {
            Generator::Glob(p) => {
                let (a, b) = (self.c2dom[p as usize], self.c2cod[p as usize]);
                Boundary {
                    top: a,
                    bottom: b,
                    left: self.did[self.c1src[a as usize] as usize],
                    right: self.did[self.c1tgt[a as usize] as usize],
                }
            }
            Generator::HId(f) => Boundary {
                top: self.id1[self.ddom[f as usize] as usize],
                bottom: self.id1[self.dcod[f as usize] as usize],
                left: f,
                right: f,
            },
        }
    }

    /// Horizontal composite boundary, `a` on the left.
    pub fn h_boundary(&self, a: Boundary, b: Boundary) -> Option<Boundary> {
        if a.right != b.left {
            return None;
        }
        Some(Boundary { top: self.h1(b.top, a.top)?, bottom: self.h1(b.bottom, a.bottom)?, left: a.left, right: b.right })
    }

    /// Vertical composite boundary, `a` on top.
    pub fn v_boundary(&self, a: Boundary, b: Boundary) -> Option<Boundary> {
        if a.bottom != b.top {
            return None;
        }
        Some(Boundary { top: a.top, bottom: b.bottom, left: self.dcomp(b.left, a.left)?, right: self.dcomp(b.right, a.right)? })
    }

    /// Boundary by structural recursion; `None` if the term is ill-formed.
    pub fn boundary(&self, t: &SquareTerm) -> Option<Boundary> {
        match t {
            SquareTerm::Gen(g) => Some(self.generator_boundary(*g)),
            SquareTerm::H(a, b) => self.h_boundary(self.boundary(a)?, self.boundary(b)?),
            SquareTerm::V(xs) => {
                let mut it = xs.iter();
                let mut acc = self.boundary(it.next()?)?;
                for x in it {
                    acc = self.v_boundary(acc, self.boundary(x)?)?;
                }
                Some(acc)
            }
        }
    }

    /// The identity square on a horizontal 1-cell.
    pub fn vertical_identity(&self, a: u32) -> SquareTerm {
        SquareTerm::glob(self.id2[a as usize])
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermParseError {
    #[error("term syntax error at byte {0}: {1}")]
    Syntax(usize, String),
    #[error("unknown 2-cell `{0}`")]
    UnknownCell(String),
    #[error("unknown decoration morphism `{0}`")]
    UnknownMorphism(String),
    #[error("term is not boundary-compatible")]
    Incompatible,
}

#[derive(Debug, PartialEq)]
enum Tok {
    Open(usize),
    Close(usize),
    Atom(usize, String),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, TermParseError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        match c {
            '(' => {
                out.push(Tok::Open(i));
                it.next();
            }
            ')' => {
                out.push(Tok::Close(i));
                it.next();
            }
            c if c.is_whitespace() => {
                it.next();
            }
            '"' => {
                it.next();
                let mut s = String::new();
                loop {
                    match it.next() {
                        Some((_, '"')) => break,
                        Some((_, '\\')) => match it.next() {
                            Some((_, e)) => s.push(e),
                            None => return Err(TermParseError::Syntax(i, "unterminated string".into())),
                        },
                        Some((_, e)) => s.push(e),
                        None => return Err(TermParseError::Syntax(i, "unterminated string".into())),
                    }
                }
                out.push(Tok::Atom(i, s));
            }
            _ => {
                let mut s = String::new();
                while let Some(&(_, e)) = it.peek() {
                    if e.is_whitespace() || e == '(' || e == ')' || e == '"' {
                        break;
                    }
                    s.push(e);
                    it.next();
                }
                out.push(Tok::Atom(i, s));
            }
        }
    }
    Ok(out)
}

struct TermParser<'a> {
    sig: &'a Signature,
    toks: Vec<Tok>,
    pos: usize,
    len: usize,
}

impl TermParser<'_> {
    fn err(&self, msg: &str) -> TermParseError {
        let at = match self.toks.get(self.pos) {
            Some(Tok::Open(i) | Tok::Close(i) | Tok::Atom(i, _)) => *i,
            None => self.len,
        };
        TermParseError::Syntax(at, msg.into())
    }

    fn atom(&mut self) -> Result<String, TermParseError> {
        match self.toks.get(self.pos) {
            Some(Tok::Atom(_, s)) => {
                self.pos += 1;
                Ok(s.clone())
            }
            _ => Err(self.err("expected a name")),
        }
    }

    fn close(&mut self) -> Result<(), TermParseError> {
        match self.toks.get(self.pos) {
            Some(Tok::Close(_)) => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err("expected `)`")),
        }
    }

    fn term(&mut self) -> Result<SquareTerm, TermParseError> {
        match self.toks.get(self.pos) {
            Some(Tok::Open(_)) => self.pos += 1,
            _ => return Err(self.err("expected `(`")),
        }
        let head = self.atom()?;
        let t = match head.as_str() {
            "g" => {
                let n = self.atom()?;
                SquareTerm::glob(self.sig.cell2_index(&n).ok_or(TermParseError::UnknownCell(n))?)
            }
            "id" => {
                let n = self.atom()?;
                SquareTerm::hid(self.sig.dmor_index(&n).ok_or(TermParseError::UnknownMorphism(n))?)
            }
            "h" | "v" => {
                let mut items = Vec::new();
                while !matches!(self.toks.get(self.pos), Some(Tok::Close(_)) | None) {
                    items.push(self.term()?);
                }
                if items.is_empty() || (head == "h" && items.len() < 2) {
                    return Err(self.err("too few arguments"));
                }
                if head == "h" {
                    SquareTerm::h_comb(items)
                } else {
                    SquareTerm::V(items)
                }
            }
            _ => {
                self.pos -= 1;
                return Err(self.err("expected `g`, `id`, `h` or `v`"));
            }
        };
        self.close()?;
        Ok(t)
    }
}

/// Parses the s-expression syntax; `(h a b c)` is read as `(h a (h b c))`.
pub fn parse_term(sig: &Signature, text: &str) -> Result<SquareTerm, TermParseError> {
    let mut p = TermParser { sig, toks: tokenize(text)?, pos: 0, len: text.len() };
    let t = p.term()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    sig.boundary(&t).ok_or(TermParseError::Incompatible)?;
    Ok(t)
}
