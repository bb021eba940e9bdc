//! Text format for presentations.
//!
//! ```text
//! category Omega_Z2 {
//!   objects: [pt];
//!   morphisms: [e: pt -> pt, g: pt -> pt];
//!   identity: {pt: e};
//!   compose: {(e, e): e, (e, g): g, (g, e): g, (g, g): e};
//! }
//! ```
//!
//! `two_category` blocks use `objects`, `morphisms`, `identity`, `hcompose1`,
//! `cells2` (`phi: a => b`), `identity2`, `vcompose2`, `hcompose2`.
//! `decorated` blocks reference earlier blocks by name. `double` blocks use
//! `objects`, `hmor`, `hidentity`, `hcompose`, `vmor`, `videntity`,
//! `vcompose`, `vinverse`, `squares` (`s: top | bottom | left | right`),
//! `square_identity`, `vcomp`, `hcomp`, `hid`. Names that are not bare
//! identifiers are written in double quotes. `#` starts a comment.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use super::category::{Arrow, FiniteCategory};
use super::double::{DoubleCategory, Frame};
use super::two_category::{DecoratedBicategory, Strict2Category};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DslError {
    #[error("line {line}, column {col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: unresolved name `{name}`")]
    Unresolved { line: usize, col: usize, name: String },
    #[error("line {line}, column {col}: duplicate name `{name}`")]
    Duplicate { line: usize, col: usize, name: String },
    #[error("line {line}, column {col}: non-composable pair ({first}, {second})")]
    NonComposable { line: usize, col: usize, first: String, second: String },
    #[error("line {line}, column {col}: {msg}")]
    Structure { line: usize, col: usize, msg: String },
    #[error("empty document")]
    Empty,
}

impl DslError {
    pub fn line(&self) -> Option<usize> {
        match self {
            DslError::Syntax { line, .. }
            | DslError::Unresolved { line, .. }
            | DslError::Duplicate { line, .. }
            | DslError::NonComposable { line, .. }
            | DslError::Structure { line, .. } => Some(*line),
            DslError::Empty => None,
        }
    }
}

/// Any value the format can describe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Category(FiniteCategory),
    TwoCategory(Strict2Category),
    Decorated(DecoratedBicategory),
    Double(DoubleCategory),
}

/// The named blocks of a document, in source order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub blocks: Vec<(String, Presentation)>,
}

impl Document {
    pub fn get(&self, name: &str) -> Option<&Presentation> {
        self.blocks.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn last(&self) -> Option<&(String, Presentation)> {
        self.blocks.last()
    }

    /// The last decorated bicategory in the document.
    pub fn last_decorated(&self) -> Option<&DecoratedBicategory> {
        self.blocks.iter().rev().find_map(|(_, p)| match p {
            Presentation::Decorated(d) => Some(d),
            _ => None,
        })
    }

    /// The last double category in the document.
    pub fn last_double(&self) -> Option<&DoubleCategory> {
        self.blocks.iter().rev().find_map(|(_, p)| match p {
            Presentation::Double(d) => Some(d),
            _ => None,
        })
    }
}

// ---------------------------------------------------------------- lexing

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Name(String),
    Sym(&'static str),
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    kind: Kind,
    line: usize,
    col: usize,
}

fn is_bare_char(c: char) -> bool {
    c.is_alphanumeric() || "_.'*~^@!$%&?+/".contains(c)
}

/// Quotes `name` unless it is a bare identifier.
pub fn quote_name(name: &str) -> String {
    if !name.is_empty() && name.chars().all(is_bare_char) {
        name.to_string()
    } else {
        let mut s = String::with_capacity(name.len() + 2);
        s.push('"');
        for c in name.chars() {
            if c == '"' || c == '\\' {
                s.push('\\');
            }
            s.push(c);
        }
        s.push('"');
        s
    }
}

fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            advance(1, &mut i, &mut col);
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push(Token { kind: Kind::Sym("->"), line: tl, col: tc });
            advance(2, &mut i, &mut col);
        } else if c == '=' && chars.get(i + 1) == Some(&'>') {
            out.push(Token { kind: Kind::Sym("=>"), line: tl, col: tc });
            advance(2, &mut i, &mut col);
        } else if let Some(sym) = ["{", "}", "[", "]", "(", ")", ":", ";", ",", "|"].into_iter().find(|s| s.starts_with(c)) {
            out.push(Token { kind: Kind::Sym(sym), line: tl, col: tc });
            advance(1, &mut i, &mut col);
        } else if c == '"' {
            let mut s = String::new();
            advance(1, &mut i, &mut col);
            loop {
                match chars.get(i) {
                    None | Some('\n') => return Err(DslError::Syntax { line: tl, col: tc, msg: "unterminated string".into() }),
                    Some('"') => {
                        advance(1, &mut i, &mut col);
                        break;
                    }
                    Some('\\') => {
                        let Some(&e) = chars.get(i + 1) else {
                            return Err(DslError::Syntax { line: tl, col: tc, msg: "unterminated string".into() });
                        };
                        s.push(e);
                        advance(2, &mut i, &mut col);
                    }
                    Some(&ch) => {
                        s.push(ch);
                        advance(1, &mut i, &mut col);
                    }
                }
            }
            out.push(Token { kind: Kind::Name(s), line: tl, col: tc });
        } else if is_bare_char(c) {
            let start = i;
            while i < chars.len() && is_bare_char(chars[i]) {
                i += 1;
            }
            col += i - start;
            out.push(Token { kind: Kind::Name(chars[start..i].iter().collect()), line: tl, col: tc });
        } else {
            return Err(DslError::Syntax { line: tl, col: tc, msg: format!("unexpected character `{c}`") });
        }
    }
    out.push(Token { kind: Kind::Eof, line, col });
    Ok(out)
}

// ---------------------------------------------------------------- syntax tree

#[derive(Clone, Debug)]
struct Name {
    text: String,
    line: usize,
    col: usize,
}

#[derive(Clone, Debug)]
enum Sig {
    None,
    Arrow(Name, Name),
    Cell(Name, Name),
    Frame(Name, Name, Name, Name),
}

#[derive(Clone, Debug)]
enum Key {
    One(Name),
    Pair(Name, Name),
}

#[derive(Clone, Debug)]
enum Value {
    List(Vec<(Name, Sig)>),
    Map(Vec<(Key, Name)>),
    Ref(Name),
}

#[derive(Clone, Debug)]
struct Field {
    name: Name,
    value: Value,
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, DslError> {
        let t = self.peek();
        Err(DslError::Syntax { line: t.line, col: t.col, msg: msg.into() })
    }

    fn at(&self, s: &'static str) -> bool {
        self.peek().kind == Kind::Sym(s)
    }

    fn expect(&mut self, s: &'static str) -> Result<(), DslError> {
        if self.at(s) {
            self.next();
            Ok(())
        } else {
            self.err(format!("expected `{s}`"))
        }
    }

    fn name(&mut self) -> Result<Name, DslError> {
        let t = self.peek().clone();
        match t.kind {
            Kind::Name(text) => {
                self.next();
                Ok(Name { text, line: t.line, col: t.col })
            }
            _ => self.err("expected a name"),
        }
    }

    fn block(&mut self) -> Result<(Name, Name, Vec<Field>), DslError> {
        let kind = self.name()?;
        let name = self.name()?;
        self.expect("{")?;
        let mut fields = Vec::new();
        while !self.at("}") {
            let fname = self.name()?;
            self.expect(":")?;
            let value = self.value()?;
            fields.push(Field { name: fname, value });
            if self.at(";") {
                self.next();
            } else if !self.at("}") {
                return self.err("expected `;` or `}`");
            }
        }
        self.expect("}")?;
        Ok((kind, name, fields))
    }

    fn value(&mut self) -> Result<Value, DslError> {
        if self.at("[") {
            self.next();
            let mut items = Vec::new();
            while !self.at("]") {
                let n = self.name()?;
                let sig = if self.at(":") {
                    self.next();
                    let a = self.name()?;
                    if self.at("->") {
                        self.next();
                        Sig::Arrow(a, self.name()?)
                    } else if self.at("=>") {
                        self.next();
                        Sig::Cell(a, self.name()?)
                    } else if self.at("|") {
                        self.next();
                        let b = self.name()?;
                        self.expect("|")?;
                        let l = self.name()?;
                        self.expect("|")?;
                        let r = self.name()?;
                        Sig::Frame(a, b, l, r)
                    } else {
                        return self.err("expected `->`, `=>` or `|`");
                    }
                } else {
                    Sig::None
                };
                items.push((n, sig));
                if self.at(",") {
                    self.next();
                } else if !self.at("]") {
                    return self.err("expected `,` or `]`");
                }
            }
            self.next();
            Ok(Value::List(items))
        } else if self.at("{") {
            self.next();
            let mut entries = Vec::new();
            while !self.at("}") {
                let key = if self.at("(") {
                    self.next();
                    let a = self.name()?;
                    self.expect(",")?;
                    let b = self.name()?;
                    self.expect(")")?;
                    Key::Pair(a, b)
                } else {
                    Key::One(self.name()?)
                };
                self.expect(":")?;
                let v = self.name()?;
                entries.push((key, v));
                if self.at(",") {
                    self.next();
                } else if !self.at("}") {
                    return self.err("expected `,` or `}`");
                }
            }
            self.next();
            Ok(Value::Map(entries))
        } else {
            Ok(Value::Ref(self.name()?))
        }
    }
}

// ---------------------------------------------------------------- building

fn unresolved<T>(n: &Name) -> Result<T, DslError> {
    Err(DslError::Unresolved { line: n.line, col: n.col, name: n.text.clone() })
}

struct Fields<'a> {
    block: &'a Name,
    fields: BTreeMap<String, &'a Field>,
}

impl<'a> Fields<'a> {
    fn new(block: &'a Name, fields: &'a [Field], allowed: &[&str]) -> Result<Self, DslError> {
        let mut map = BTreeMap::new();
        for f in fields {
            if !allowed.contains(&f.name.text.as_str()) {
                return Err(DslError::Structure { line: f.name.line, col: f.name.col, msg: format!("unknown field `{}`", f.name.text) });
            }
            if map.insert(f.name.text.clone(), f).is_some() {
                return Err(DslError::Duplicate { line: f.name.line, col: f.name.col, name: f.name.text.clone() });
            }
        }
        Ok(Fields { block, fields: map })
    }

    fn missing<T>(&self, field: &str) -> Result<T, DslError> {
        Err(DslError::Structure {
            line: self.block.line,
            col: self.block.col,
            msg: format!("block `{}` is missing field `{field}`", self.block.text),
        })
    }

    fn list(&self, field: &str, optional: bool) -> Result<Vec<(Name, Sig)>, DslError> {
        match self.fields.get(field) {
            None if optional => Ok(Vec::new()),
            None => self.missing(field),
            Some(f) => match &f.value {
                Value::List(items) => Ok(items.clone()),
                _ => Err(DslError::Syntax { line: f.name.line, col: f.name.col, msg: format!("`{field}` expects a list") }),
            },
        }
    }

    fn map(&self, field: &str, optional: bool) -> Result<Vec<(Key, Name)>, DslError> {
        match self.fields.get(field) {
            None if optional => Ok(Vec::new()),
            None => self.missing(field),
            Some(f) => match &f.value {
                Value::Map(entries) => Ok(entries.clone()),
                _ => Err(DslError::Syntax { line: f.name.line, col: f.name.col, msg: format!("`{field}` expects a map") }),
            },
        }
    }

    fn reference(&self, field: &str) -> Result<Name, DslError> {
        match self.fields.get(field) {
            None => self.missing(field),
            Some(f) => match &f.value {
                Value::Ref(n) => Ok(n.clone()),
                _ => Err(DslError::Syntax { line: f.name.line, col: f.name.col, msg: format!("`{field}` expects a name") }),
            },
        }
    }
}

fn objects(items: Vec<(Name, Sig)>) -> Result<BTreeSet<String>, DslError> {
    let mut out = BTreeSet::new();
    for (n, sig) in items {
        if !matches!(sig, Sig::None) {
            return Err(DslError::Syntax { line: n.line, col: n.col, msg: "objects carry no signature".into() });
        }
        if !out.insert(n.text.clone()) {
            return Err(DslError::Duplicate { line: n.line, col: n.col, name: n.text });
        }
    }
    Ok(out)
}

fn arrows(
    items: Vec<(Name, Sig)>,
    ends: &BTreeMap<String, Arrow>,
    objs: Option<&BTreeSet<String>>,
    cell: bool,
) -> Result<BTreeMap<String, Arrow>, DslError> {
    let mut out = BTreeMap::new();
    for (n, sig) in items {
        let (a, b) = match (sig, cell) {
            (Sig::Arrow(a, b), false) | (Sig::Cell(a, b), true) => (a, b),
            _ => {
                let want = if cell { "`a => b`" } else { "`x -> y`" };
                return Err(DslError::Syntax { line: n.line, col: n.col, msg: format!("expected signature {want}") });
            }
        };
        for end in [&a, &b] {
            let known = match objs {
                Some(o) => o.contains(&end.text),
                None => ends.contains_key(&end.text),
            };
            if !known {
                return unresolved(end);
            }
        }
        if out.insert(n.text.clone(), Arrow::new(a.text, b.text)).is_some() {
            return Err(DslError::Duplicate { line: n.line, col: n.col, name: n.text });
        }
    }
    Ok(out)
}

fn unary_map(
    entries: Vec<(Key, Name)>,
    keys: &dyn Fn(&str) -> bool,
    values: &dyn Fn(&str) -> bool,
) -> Result<BTreeMap<String, String>, DslError> {
    let mut out = BTreeMap::new();
    for (k, v) in entries {
        let Key::One(k) = k else {
            return Err(DslError::Syntax { line: v.line, col: v.col, msg: "expected a single key".into() });
        };
        if !keys(&k.text) {
            return unresolved(&k);
        }
        if !values(&v.text) {
            return unresolved(&v);
        }
        if out.insert(k.text.clone(), v.text).is_some() {
            return Err(DslError::Duplicate { line: k.line, col: k.col, name: k.text });
        }
    }
    Ok(out)
}

fn pair_map(
    entries: Vec<(Key, Name)>,
    known: &dyn Fn(&str) -> bool,
    composable: &dyn Fn(&str, &str) -> bool,
) -> Result<BTreeMap<(String, String), String>, DslError> {
    let mut out = BTreeMap::new();
    for (k, v) in entries {
        let Key::Pair(a, b) = k else {
            return Err(DslError::Syntax { line: v.line, col: v.col, msg: "expected a pair key `(g, f)`".into() });
        };
        for n in [&a, &b, &v] {
            if !known(&n.text) {
                return unresolved(n);
            }
        }
        if !composable(&a.text, &b.text) {
            return Err(DslError::NonComposable { line: a.line, col: a.col, first: a.text, second: b.text });
        }
        if out.insert((a.text.clone(), b.text.clone()), v.text).is_some() {
            return Err(DslError::Duplicate { line: a.line, col: a.col, name: format!("({}, {})", a.text, b.text) });
        }
    }
    Ok(out)
}

fn category_from(
    f: &Fields,
    objs: BTreeSet<String>,
    mor: &str,
    ident: &str,
    comp: &str,
    inv: Option<&str>,
) -> Result<FiniteCategory, DslError> {
    let morphisms = arrows(f.list(mor, false)?, &BTreeMap::new(), Some(&objs), false)?;
    let identity = unary_map(f.map(ident, false)?, &|x| objs.contains(x), &|m| morphisms.contains_key(m))?;
    let compose = pair_map(f.map(comp, false)?, &|m| morphisms.contains_key(m), &|g, h| morphisms[g].dom == morphisms[h].cod)?;
    let inverse = match inv {
        Some(field) => unary_map(f.map(field, true)?, &|m| morphisms.contains_key(m), &|m| morphisms.contains_key(m))?,
        None => BTreeMap::new(),
    };
    Ok(FiniteCategory { objects: objs, morphisms, identity, compose, inverse })
}

fn build_category(f: &Fields) -> Result<FiniteCategory, DslError> {
    let objs = objects(f.list("objects", false)?)?;
    category_from(f, objs, "morphisms", "identity", "compose", Some("inverse"))
}

fn build_two_category(f: &Fields) -> Result<Strict2Category, DslError> {
    let objs = objects(f.list("objects", false)?)?;
    let one = category_from(f, objs, "morphisms", "identity", "hcompose1", None)?;
    let cells2 = arrows(f.list("cells2", false)?, &one.morphisms, None, true)?;
    let identity2 = unary_map(f.map("identity2", false)?, &|a| one.morphisms.contains_key(a), &|c| cells2.contains_key(c))?;
    let vcompose2 = pair_map(f.map("vcompose2", false)?, &|c| cells2.contains_key(c), &|p, q| cells2[q].cod == cells2[p].dom)?;
    let hcompose2 = pair_map(f.map("hcompose2", false)?, &|c| cells2.contains_key(c), &|p, q| {
        one.morphisms[&cells2[q].dom].cod == one.morphisms[&cells2[p].dom].dom
    })?;
    Ok(Strict2Category {
        cells0: one.objects,
        cells1: one.morphisms,
        identity1: one.identity,
        hcompose1: one.compose,
        cells2,
        identity2,
        vcompose2,
        hcompose2,
    })
}

fn build_double(f: &Fields) -> Result<DoubleCategory, DslError> {
    let objs = objects(f.list("objects", false)?)?;
    let horizontal = category_from(f, objs.clone(), "hmor", "hidentity", "hcompose", None)?;
    let vertical = category_from(f, objs, "vmor", "videntity", "vcompose", Some("vinverse"))?;
    let mut squares = BTreeMap::new();
    for (n, sig) in f.list("squares", false)? {
        let Sig::Frame(t, b, l, r) = sig else {
            return Err(DslError::Syntax { line: n.line, col: n.col, msg: "expected `top | bottom | left | right`".into() });
        };
        for h in [&t, &b] {
            if !horizontal.morphisms.contains_key(&h.text) {
                return unresolved(h);
            }
        }
        for v in [&l, &r] {
            if !vertical.morphisms.contains_key(&v.text) {
                return unresolved(v);
            }
        }
        if squares.insert(n.text.clone(), Frame::new(&t.text, &b.text, &l.text, &r.text)).is_some() {
            return Err(DslError::Duplicate { line: n.line, col: n.col, name: n.text });
        }
    }
    let square_identity =
        unary_map(f.map("square_identity", false)?, &|a| horizontal.morphisms.contains_key(a), &|s| squares.contains_key(s))?;
    let hid = unary_map(f.map("hid", false)?, &|v| vertical.morphisms.contains_key(v), &|s| squares.contains_key(s))?;
    let vcomp = pair_map(f.map("vcomp", false)?, &|s| squares.contains_key(s), &|t, s| squares[s].bottom == squares[t].top)?;
    let hcomp = pair_map(f.map("hcomp", false)?, &|s| squares.contains_key(s), &|t, s| squares[s].right == squares[t].left)?;
    Ok(DoubleCategory { horizontal, vertical, squares, square_identity, vcomp, hcomp, hid })
}

/// Parses every block of a document.
pub fn parse_document(text: &str) -> Result<Document, DslError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let mut doc = Document::default();
    while p.peek().kind != Kind::Eof {
        let (kind, name, fields) = p.block()?;
        if doc.get(&name.text).is_some() {
            return Err(DslError::Duplicate { line: name.line, col: name.col, name: name.text });
        }
        let value = match kind.text.as_str() {
            "category" => {
                let f = Fields::new(&name, &fields, &["objects", "morphisms", "identity", "compose", "inverse"])?;
                Presentation::Category(build_category(&f)?)
            }
            "two_category" => {
                let f = Fields::new(
                    &name,
                    &fields,
                    &["objects", "morphisms", "identity", "hcompose1", "cells2", "identity2", "vcompose2", "hcompose2"],
                )?;
                Presentation::TwoCategory(build_two_category(&f)?)
            }
            "decorated" => {
                let f = Fields::new(&name, &fields, &["decoration", "bicat"])?;
                let (dn, bn) = (f.reference("decoration")?, f.reference("bicat")?);
                let decoration = match doc.get(&dn.text) {
                    Some(Presentation::Category(c)) => c.clone(),
                    _ => return unresolved(&dn),
                };
                let bicat = match doc.get(&bn.text) {
                    Some(Presentation::TwoCategory(c)) => c.clone(),
                    _ => return unresolved(&bn),
                };
                Presentation::Decorated(DecoratedBicategory { decoration, bicat })
            }
            "double" => {
                let f = Fields::new(
                    &name,
                    &fields,
                    &[
                        "objects",
                        "hmor",
                        "hidentity",
                        "hcompose",
                        "vmor",
                        "videntity",
                        "vcompose",
                        "vinverse",
                        "squares",
                        "square_identity",
                        "vcomp",
                        "hcomp",
                        "hid",
                    ],
                )?;
                Presentation::Double(build_double(&f)?)
            }
            other => return Err(DslError::Syntax { line: kind.line, col: kind.col, msg: format!("unknown block kind `{other}`") }),
        };
        doc.blocks.push((name.text, value));
    }
    Ok(doc)
}

/// Parses a document and returns its last block.
pub fn parse_presentation(text: &str) -> Result<Presentation, DslError> {
    parse_document(text)?.blocks.pop().map(|(_, p)| p).ok_or(DslError::Empty)
}

// ---------------------------------------------------------------- rendering

fn render_list(out: &mut String, field: &str, items: Vec<String>) {
    if items.is_empty() {
        let _ = writeln!(out, "  {field}: [];");
        return;
    }
    let _ = writeln!(out, "  {field}: [");
    let n = items.len();
    for (i, it) in items.into_iter().enumerate() {
        let _ = writeln!(out, "    {it}{}", if i + 1 < n { "," } else { "" });
    }
    let _ = writeln!(out, "  ];");
}

fn render_map(out: &mut String, field: &str, items: Vec<String>) {
    if items.is_empty() {
        let _ = writeln!(out, "  {field}: {{}};");
        return;
    }
    let _ = writeln!(out, "  {field}: {{");
    let n = items.len();
    for (i, it) in items.into_iter().enumerate() {
        let _ = writeln!(out, "    {it}{}", if i + 1 < n { "," } else { "" });
    }
    let _ = writeln!(out, "  }};");
}

fn q(s: &str) -> String {
    quote_name(s)
}

fn arrow_items(m: &BTreeMap<String, Arrow>, sep: &str) -> Vec<String> {
    m.iter().map(|(n, a)| format!("{}: {} {sep} {}", q(n), q(&a.dom), q(&a.cod))).collect()
}

fn unary_items(m: &BTreeMap<String, String>) -> Vec<String> {
    m.iter().map(|(k, v)| format!("{}: {}", q(k), q(v))).collect()
}

fn pair_items(m: &BTreeMap<(String, String), String>) -> Vec<String> {
    m.iter().map(|((a, b), v)| format!("({}, {}): {}", q(a), q(b), q(v))).collect()
}

fn render_block(out: &mut String, name: &str, p: &Presentation) {
    match p {
        Presentation::Category(c) => {
            let _ = writeln!(out, "category {} {{", q(name));
            render_list(out, "objects", c.objects.iter().map(|o| q(o)).collect());
            render_list(out, "morphisms", arrow_items(&c.morphisms, "->"));
            render_map(out, "identity", unary_items(&c.identity));
            render_map(out, "compose", pair_items(&c.compose));
            if !c.inverse.is_empty() {
                render_map(out, "inverse", unary_items(&c.inverse));
            }
            out.push_str("}\n");
        }
        Presentation::TwoCategory(s) => {
            let _ = writeln!(out, "two_category {} {{", q(name));
            render_list(out, "objects", s.cells0.iter().map(|o| q(o)).collect());
            render_list(out, "morphisms", arrow_items(&s.cells1, "->"));
            render_map(out, "identity", unary_items(&s.identity1));
            render_map(out, "hcompose1", pair_items(&s.hcompose1));
            render_list(out, "cells2", arrow_items(&s.cells2, "=>"));
            render_map(out, "identity2", unary_items(&s.identity2));
            render_map(out, "vcompose2", pair_items(&s.vcompose2));
            render_map(out, "hcompose2", pair_items(&s.hcompose2));
            out.push_str("}\n");
        }
        Presentation::Decorated(d) => {
            let (dn, bn) = (format!("{name}_decoration"), format!("{name}_bicat"));
            render_block(out, &dn, &Presentation::Category(d.decoration.clone()));
            out.push('\n');
            render_block(out, &bn, &Presentation::TwoCategory(d.bicat.clone()));
            out.push('\n');
            let _ = writeln!(out, "decorated {} {{", q(name));
            let _ = writeln!(out, "  decoration: {};", q(&dn));
            let _ = writeln!(out, "  bicat: {};", q(&bn));
            out.push_str("}\n");
        }
        Presentation::Double(c) => {
            let _ = writeln!(out, "double {} {{", q(name));
            render_list(out, "objects", c.horizontal.objects.iter().map(|o| q(o)).collect());
            render_list(out, "hmor", arrow_items(&c.horizontal.morphisms, "->"));
            render_map(out, "hidentity", unary_items(&c.horizontal.identity));
            render_map(out, "hcompose", pair_items(&c.horizontal.compose));
            render_list(out, "vmor", arrow_items(&c.vertical.morphisms, "->"));
            render_map(out, "videntity", unary_items(&c.vertical.identity));
            render_map(out, "vcompose", pair_items(&c.vertical.compose));
            if !c.vertical.inverse.is_empty() {
                render_map(out, "vinverse", unary_items(&c.vertical.inverse));
            }
            render_list(
                out,
                "squares",
                c.squares
                    .iter()
                    .map(|(n, f)| format!("{}: {} | {} | {} | {}", q(n), q(&f.top), q(&f.bottom), q(&f.left), q(&f.right)))
                    .collect(),
            );
            render_map(out, "square_identity", unary_items(&c.square_identity));
            render_map(out, "vcomp", pair_items(&c.vcomp));
            render_map(out, "hcomp", pair_items(&c.hcomp));
            render_map(out, "hid", unary_items(&c.hid));
            out.push_str("}\n");
        }
    }
}

/// Canonical text of a named presentation: sorted keys, one entry per line.
/// A decorated bicategory is preceded by its two component blocks.
pub fn render(name: &str, p: &Presentation) -> String {
    let mut out = String::new();
    render_block(&mut out, name, p);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::builders::{commuting_squares, delooping, double_delooping, quintets};
    use crate::presentations::group::FiniteGroup;

    const OMEGA_Z2: &str = "
        # the delooping of Z2
        category Omega_Z2 {
          objects: [x];
          morphisms: [e: x -> x, g: x -> x];
          identity: {x: e};
          compose: {(e, e): e, (e, g): g, (g, e): g, (g, g): e};
        }";

    #[test]
    fn parses_omega_z2() {
        let Presentation::Category(c) = parse_presentation(OMEGA_Z2).unwrap() else { panic!() };
        assert_eq!(c.objects.len(), 1);
        assert_eq!(c.morphisms.len(), 2);
        assert!(c.validate().is_valid());
    }

    #[test]
    fn non_composable_entry_is_an_error() {
        let src = "category A { objects: [x, y]; morphisms: [e: x -> x, g: y -> y];
                   identity: {x: e, y: g}; compose: {(g, e): g}; }";
        match parse_presentation(src) {
            Err(DslError::NonComposable { line, first, second, .. }) => {
                assert_eq!((line, first.as_str(), second.as_str()), (2, "g", "e"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn diagnostics_carry_positions() {
        let err = parse_presentation("category A {\n  objects: [x];\n  morphisms: [f: x -> z];\n}").unwrap_err();
        assert_eq!(err, DslError::Unresolved { line: 3, col: 23, name: "z".into() });
        let err = parse_presentation("category A {\n  objects: [x, x];\n}").unwrap_err();
        assert!(matches!(err, DslError::Duplicate { line: 2, .. }));
        let err = parse_presentation("category A {\n  objects: [x]\n  morphisms: []; }").unwrap_err();
        assert!(matches!(err, DslError::Syntax { line: 3, .. }));
    }

    #[test]
    fn round_trips_constructions() {
        let z3 = double_delooping(&FiniteGroup::cyclic(3)).unwrap();
        let values = vec![
            Presentation::Category(delooping(&FiniteGroup::cyclic(4))),
            Presentation::TwoCategory(z3.clone()),
            Presentation::Double(quintets(&z3)),
            Presentation::Double(commuting_squares(&delooping(&FiniteGroup::cyclic(2)))),
            Presentation::Decorated(DecoratedBicategory::new(delooping(&FiniteGroup::cyclic(2)), z3)),
        ];
        for v in values {
            let text = render("x", &v);
            assert_eq!(parse_presentation(&text).unwrap(), v, "{text}");
        }
    }

    #[test]
    fn quoting_escapes_special_names() {
        assert_eq!(quote_name("sq(a,b)"), "\"sq(a,b)\"");
        assert_eq!(quote_name("a\"b"), "\"a\\\"b\"");
        assert_eq!(quote_name("phi_1"), "phi_1");
    }
}
