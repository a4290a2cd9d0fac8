//! The plain-text input format.
//!
//! ```text
//! # a bound quiver algebra
//! algebra over Q              # or F32003
//! cap: 24                     # optional resolution cap
//! path_cap: 24                # optional path-length cap for completion
//! vertices: 1, 2, 3, 4
//! arrows: a: 1 -> 2, b: 2 -> 3, g: 3 -> 4, d: 4 -> 1
//! relations: d*g, a*d
//! e_set: 1, 3
//! module M {
//!   dims: 1, 0, 0, 1
//!   d: [[1]]
//! }
//! tau: 1 -> 2, 2 -> 1, 3 -> 3     # translation data, optional
//! distinguished: 1, 2
//! ```
//!
//! Words compose right to left: `d*g` applies `g` first. A relation is a
//! signed sum of terms `coeff*word` with optional rational coefficients.
//! The matrix for an arrow `x: s -> t` has `dims[t]` rows and `dims[s]`
//! columns: it maps the component at the arrow's target to the component at
//! its source, matching right action conventions.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::BasicAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar, DEFAULT_PRIME};
use crate::groebner::{groebner, GroebnerData};
use crate::matrix::Matrix;
use crate::module::ModuleRep;
use crate::quiver::{Path, Quiver, Relation, RelationIdeal};

/// Environment variable naming the default coefficient field (`Q`, `Fp` or
/// `F<prime>`), used by the CLI when a file omits the header field.
pub const FIELD_ENV_VAR: &str = "CORNERDIM_FIELD";

#[derive(Clone, Debug)]
pub struct ModuleLiteral {
    pub name: String,
    pub dims: Vec<usize>,
    /// arrow label -> rows of rational entries
    pub actions: Vec<(String, Vec<Vec<(i64, i64)>>)>,
}

#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub cap: Option<usize>,
    pub path_cap: Option<usize>,
    pub quiver: Quiver,
    pub ideal: RelationIdeal,
    pub modules: Vec<ModuleLiteral>,
    pub e_set: Option<Vec<usize>>,
    pub tau: Option<Vec<usize>>,
    pub distinguished: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Colon,
    Comma,
    Star,
    Plus,
    Minus,
    Slash,
    Arrow,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
}

struct Lexer<'a> {
    file: &'a str,
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn lex(file: &str, text: &str) -> Result<Vec<(Tok, usize, usize)>> {
    let mut toks = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let bump = |ch: char, line: &mut usize, col: &mut usize| {
            if ch == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        match c {
            '#' => {
                while let Some(&ch) = chars.peek() {
                    chars.next();
                    bump(ch, &mut line, &mut col);
                    if ch == '\n' {
                        break;
                    }
                }
            }
            c if c.is_whitespace() => {
                chars.next();
                bump(c, &mut line, &mut col);
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_ascii_digit() {
                        s.push(ch);
                        chars.next();
                        bump(ch, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                let v: i64 = s.parse().map_err(|_| Error::Parse {
                    file: file.into(),
                    line: tl,
                    col: tc,
                    msg: format!("integer `{s}` out of range"),
                })?;
                toks.push((Tok::Int(v), tl, tc));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_alphanumeric() || ch == '_' {
                        s.push(ch);
                        chars.next();
                        bump(ch, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Ident(s), tl, tc));
            }
            '-' => {
                chars.next();
                bump('-', &mut line, &mut col);
                if chars.peek() == Some(&'>') {
                    chars.next();
                    bump('>', &mut line, &mut col);
                    toks.push((Tok::Arrow, tl, tc));
                } else {
                    toks.push((Tok::Minus, tl, tc));
                }
            }
            ':' | ',' | '*' | '+' | '/' | '{' | '}' | '[' | ']' => {
                chars.next();
                bump(c, &mut line, &mut col);
                let t = match c {
                    ':' => Tok::Colon,
                    ',' => Tok::Comma,
                    '*' => Tok::Star,
                    '+' => Tok::Plus,
                    '/' => Tok::Slash,
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    _ => unreachable!(),
                };
                toks.push((t, tl, tc));
            }
            other => {
                return Err(Error::Parse {
                    file: file.into(),
                    line: tl,
                    col: tc,
                    msg: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    Ok(toks)
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn loc(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or((1, 1))
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.loc();
        Error::Parse {
            file: self.file.into(),
            line,
            col,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.next();
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    /// A label: identifier or bare integer.
    fn label(&mut self) -> Result<String> {
        match self.next() {
            Some(Tok::Ident(s)) => Ok(s),
            Some(Tok::Int(v)) => Ok(v.to_string()),
            _ => Err(self.err("expected a name")),
        }
    }

    fn int(&mut self) -> Result<i64> {
        match self.next() {
            Some(Tok::Int(v)) => Ok(v),
            _ => Err(self.err("expected an integer")),
        }
    }

    fn at_section_keyword(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Ident(s)) if matches!(
                s.as_str(),
                "vertices" | "arrows" | "relations" | "module" | "e_set" | "tau"
                    | "distinguished" | "cap" | "path_cap"
            )
        )
    }
}

pub fn parse(file_name: &str, text: &str) -> Result<AlgebraFile> {
    let toks = lex(file_name, text)?;
    let mut lx = Lexer {
        file: file_name,
        toks,
        pos: 0,
    };

    // header: algebra over Q | Fp
    match lx.next() {
        Some(Tok::Ident(s)) if s == "algebra" => {}
        _ => return Err(lx.err("file must start with `algebra over <field>`")),
    }
    match lx.next() {
        Some(Tok::Ident(s)) if s == "over" => {}
        _ => return Err(lx.err("expected `over`")),
    }
    let field = match lx.next() {
        Some(Tok::Ident(s)) if s == "Q" => FieldSpec::Rationals,
        Some(Tok::Ident(s)) if s == "Fp" => FieldSpec::prime(DEFAULT_PRIME)?,
        Some(Tok::Ident(s)) if s.starts_with('F') && s[1..].chars().all(|c| c.is_ascii_digit()) => {
            let p: u64 = s[1..].parse().map_err(|_| lx.err("prime out of range"))?;
            FieldSpec::prime(p)?
        }
        _ => return Err(lx.err("expected a field: `Q`, `Fp` or `F<prime>`")),
    };

    let mut cap = None;
    let mut path_cap = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relations_raw: Vec<(usize, usize, Vec<(i64, i64, Vec<String>)>)> = Vec::new();
    let mut modules = Vec::new();
    let mut e_set_labels: Option<Vec<String>> = None;
    let mut tau_pairs: Option<Vec<(String, String)>> = None;
    let mut distinguished_labels: Option<Vec<String>> = None;

    while let Some(tok) = lx.peek().cloned() {
        let Tok::Ident(section) = tok else {
            return Err(lx.err("expected a section keyword"));
        };
        lx.next();
        match section.as_str() {
            "cap" => {
                lx.expect(Tok::Colon, "`:`")?;
                cap = Some(lx.int()? as usize);
            }
            "path_cap" => {
                lx.expect(Tok::Colon, "`:`")?;
                path_cap = Some(lx.int()? as usize);
            }
            "vertices" => {
                lx.expect(Tok::Colon, "`:`")?;
                let mut vs = vec![lx.label()?];
                while lx.peek() == Some(&Tok::Comma) {
                    lx.next();
                    vs.push(lx.label()?);
                }
                vertices = Some(vs);
            }
            "arrows" => {
                lx.expect(Tok::Colon, "`:`")?;
                loop {
                    let name = match lx.next() {
                        Some(Tok::Ident(s)) => s,
                        _ => return Err(lx.err("arrow names must be identifiers")),
                    };
                    lx.expect(Tok::Colon, "`:` after the arrow name")?;
                    let src = lx.label()?;
                    lx.expect(Tok::Arrow, "`->`")?;
                    let tgt = lx.label()?;
                    arrows.push((name, src, tgt));
                    if lx.peek() == Some(&Tok::Comma) {
                        lx.next();
                    } else {
                        break;
                    }
                }
            }
            "relations" => {
                lx.expect(Tok::Colon, "`:`")?;
                loop {
                    let (line, col) = lx.loc();
                    let mut terms = Vec::new();
                    let mut sign = 1i64;
                    if lx.peek() == Some(&Tok::Minus) {
                        lx.next();
                        sign = -1;
                    }
                    loop {
                        let (mut num, mut den) = (sign, 1i64);
                        if let Some(Tok::Int(v)) = lx.peek() {
                            num = sign * *v;
                            lx.next();
                            if lx.peek() == Some(&Tok::Slash) {
                                lx.next();
                                den = lx.int()?;
                            }
                            lx.expect(Tok::Star, "`*` between coefficient and word")?;
                        }
                        let mut word = Vec::new();
                        loop {
                            match lx.next() {
                                Some(Tok::Ident(s)) => word.push(s),
                                _ => return Err(lx.err("expected an arrow name")),
                            }
                            if lx.peek() == Some(&Tok::Star) {
                                lx.next();
                            } else {
                                break;
                            }
                        }
                        terms.push((num, den, word));
                        match lx.peek() {
                            Some(Tok::Plus) => {
                                lx.next();
                                sign = 1;
                            }
                            Some(Tok::Minus) => {
                                lx.next();
                                sign = -1;
                            }
                            _ => break,
                        }
                    }
                    relations_raw.push((line, col, terms));
                    if lx.peek() == Some(&Tok::Comma) {
                        lx.next();
                    } else {
                        break;
                    }
                }
            }
            "module" => {
                let name = lx.label()?;
                lx.expect(Tok::LBrace, "`{`")?;
                let mut dims: Option<Vec<usize>> = None;
                let mut actions = Vec::new();
                loop {
                    match lx.next() {
                        Some(Tok::RBrace) => break,
                        Some(Tok::Ident(s)) if s == "dims" => {
                            lx.expect(Tok::Colon, "`:`")?;
                            let mut ds = vec![lx.int()? as usize];
                            while lx.peek() == Some(&Tok::Comma) {
                                lx.next();
                                ds.push(lx.int()? as usize);
                            }
                            dims = Some(ds);
                        }
                        Some(Tok::Ident(arrow)) => {
                            lx.expect(Tok::Colon, "`:`")?;
                            actions.push((arrow, parse_matrix(&mut lx)?));
                        }
                        _ => return Err(lx.err("expected `dims`, an arrow action or `}`")),
                    }
                }
                let dims = dims.ok_or_else(|| lx.err("module block needs a `dims` line"))?;
                modules.push(ModuleLiteral {
                    name,
                    dims,
                    actions,
                });
            }
            "e_set" => {
                lx.expect(Tok::Colon, "`:`")?;
                let mut vs = vec![lx.label()?];
                while lx.peek() == Some(&Tok::Comma) {
                    lx.next();
                    vs.push(lx.label()?);
                }
                e_set_labels = Some(vs);
            }
            "tau" => {
                lx.expect(Tok::Colon, "`:`")?;
                let mut pairs = Vec::new();
                loop {
                    let from = lx.label()?;
                    lx.expect(Tok::Arrow, "`->`")?;
                    let to = lx.label()?;
                    pairs.push((from, to));
                    if lx.peek() == Some(&Tok::Comma) {
                        lx.next();
                    } else {
                        break;
                    }
                }
                tau_pairs = Some(pairs);
            }
            "distinguished" => {
                lx.expect(Tok::Colon, "`:`")?;
                let mut vs = vec![lx.label()?];
                while lx.peek() == Some(&Tok::Comma) {
                    lx.next();
                    vs.push(lx.label()?);
                }
                distinguished_labels = Some(vs);
            }
            other => return Err(lx.err(format!("unknown section `{other}`"))),
        }
        if !lx.at_section_keyword() && lx.peek().is_some() {
            return Err(lx.err("expected a section keyword"));
        }
    }

    let vertices = vertices.ok_or_else(|| Error::Parse {
        file: file_name.into(),
        line: 1,
        col: 1,
        msg: "missing `vertices` section".into(),
    })?;
    if vertices.is_empty() {
        return Err(Error::Parse {
            file: file_name.into(),
            line: 1,
            col: 1,
            msg: "the vertex list is empty".into(),
        });
    }
    let quiver = Quiver::new(vertices, arrows).map_err(|e| Error::Parse {
        file: file_name.into(),
        line: 1,
        col: 1,
        msg: e.to_string(),
    })?;

    let mut generators = Vec::new();
    for (line, col, terms) in relations_raw {
        let locate = |e: Error| Error::Parse {
            file: file_name.into(),
            line,
            col,
            msg: e.to_string(),
        };
        let mut rel_terms = Vec::new();
        for (num, den, word) in terms {
            let idxs = word
                .iter()
                .map(|w| quiver.arrow_index(w))
                .collect::<Result<Vec<_>>>()
                .map_err(locate)?;
            // written right-to-left: the last name applies first
            let app_order: Vec<usize> = idxs.into_iter().rev().collect();
            let path = Path::from_word(&quiver, app_order).map_err(locate)?;
            let coeff = field.from_fraction(num, den).map_err(locate)?;
            rel_terms.push((coeff, path));
        }
        let rel = Relation { terms: rel_terms };
        RelationIdeal::new(field, vec![rel.clone()]).map_err(locate)?;
        generators.push(rel);
    }
    let ideal = RelationIdeal::new(field, generators)?;

    let resolve_vertices = |labels: Option<Vec<String>>| -> Result<Option<Vec<usize>>> {
        labels
            .map(|ls| {
                ls.iter()
                    .map(|l| {
                        quiver
                            .vertices
                            .iter()
                            .position(|v| v == l)
                            .ok_or_else(|| Error::UnknownVertex(l.clone()))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .transpose()
    };
    let e_set = resolve_vertices(e_set_labels)?;
    let distinguished = resolve_vertices(distinguished_labels)?;
    let tau = tau_pairs
        .map(|pairs| {
            let n = quiver.vertex_count();
            let mut tau = vec![usize::MAX; n];
            for (from, to) in pairs {
                let f = quiver
                    .vertices
                    .iter()
                    .position(|v| *v == from)
                    .ok_or_else(|| Error::UnknownVertex(from.clone()))?;
                let t = quiver
                    .vertices
                    .iter()
                    .position(|v| *v == to)
                    .ok_or_else(|| Error::UnknownVertex(to.clone()))?;
                tau[f] = t;
            }
            if tau.iter().any(|&t| t == usize::MAX) {
                return Err(Error::BadTranslationData(
                    "tau must be defined on every vertex".into(),
                ));
            }
            Ok(tau)
        })
        .transpose()?;

    Ok(AlgebraFile {
        field,
        cap,
        path_cap,
        quiver,
        ideal,
        modules,
        e_set,
        tau,
        distinguished,
    })
}

fn parse_matrix(lx: &mut Lexer) -> Result<Vec<Vec<(i64, i64)>>> {
    lx.expect(Tok::LBracket, "`[`")?;
    let mut rows = Vec::new();
    if lx.peek() == Some(&Tok::RBracket) {
        lx.next();
        return Ok(rows);
    }
    loop {
        lx.expect(Tok::LBracket, "`[`")?;
        let mut row = Vec::new();
        if lx.peek() != Some(&Tok::RBracket) {
            loop {
                let mut sign = 1i64;
                if lx.peek() == Some(&Tok::Minus) {
                    lx.next();
                    sign = -1;
                }
                let num = sign * lx.int()?;
                let den = if lx.peek() == Some(&Tok::Slash) {
                    lx.next();
                    lx.int()?
                } else {
                    1
                };
                row.push((num, den));
                if lx.peek() == Some(&Tok::Comma) {
                    lx.next();
                } else {
                    break;
                }
            }
        }
        lx.expect(Tok::RBracket, "`]`")?;
        rows.push(row);
        if lx.peek() == Some(&Tok::Comma) {
            lx.next();
        } else {
            break;
        }
    }
    lx.expect(Tok::RBracket, "`]` closing the matrix")?;
    Ok(rows)
}

/// Default path-length cap for completion when the file does not set one.
pub fn default_path_cap(file: &AlgebraFile) -> usize {
    let rel = file.ideal.max_generator_length();
    file.path_cap.unwrap_or_else(|| 24usize.max(2 * rel + 2))
}

/// Complete the presentation and construct the algebra.
pub fn build_algebra(file: &AlgebraFile) -> Result<(GroebnerData, Arc<BasicAlgebra>)> {
    let g = groebner(&file.quiver, &file.ideal, default_path_cap(file))?;
    let a = crate::algebra::from_presentation(&g)?;
    Ok((g, a))
}

/// Instantiate a module literal over a path-backed algebra.
pub fn instantiate_module(
    lit: &ModuleLiteral,
    quiver: &Quiver,
    algebra: &Arc<BasicAlgebra>,
) -> Result<ModuleRep> {
    if lit.dims.len() != algebra.n {
        return Err(Error::DimMismatch(format!(
            "module `{}` needs {} component dims",
            lit.name, algebra.n
        )));
    }
    let field = algebra.field;
    let mut actions = BTreeMap::new();
    for (label, rows) in &lit.actions {
        let ai = quiver.arrow_index(label)?;
        let arrow = &quiver.arrows[ai];
        let elem = algebra
            .elems
            .iter()
            .position(|e| e.degree == 1 && e.label == *label)
            .ok_or_else(|| Error::UnknownArrow(label.clone()))?;
        let (r, c) = (lit.dims[arrow.target], lit.dims[arrow.source]);
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimMismatch(format!(
                "matrix for `{label}` in module `{}` must be {r}x{c}",
                lit.name
            )));
        }
        let data = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&(n, d)| field.from_fraction(n, d))
                    .collect::<Result<Vec<Scalar>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut m = Matrix::zero(field, r, c);
        for (i, row) in data.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        actions.insert(elem, m);
    }
    ModuleRep::new(Arc::clone(algebra), lit.dims.clone(), actions)
}

/// Render a file back to text; `parse(emit(f))` reproduces the same data.
pub fn emit(file: &AlgebraFile) -> String {
    let mut out = String::new();
    match file.field {
        FieldSpec::Rationals => out.push_str("algebra over Q\n"),
        FieldSpec::Prime(p) => out.push_str(&format!("algebra over F{p}\n")),
    }
    if let Some(c) = file.cap {
        out.push_str(&format!("cap: {c}\n"));
    }
    if let Some(c) = file.path_cap {
        out.push_str(&format!("path_cap: {c}\n"));
    }
    out.push_str(&format!("vertices: {}\n", file.quiver.vertices.join(", ")));
    if !file.quiver.arrows.is_empty() {
        let arrows: Vec<String> = file
            .quiver
            .arrows
            .iter()
            .map(|a| {
                format!(
                    "{}: {} -> {}",
                    a.label,
                    file.quiver.vertices[a.source],
                    file.quiver.vertices[a.target]
                )
            })
            .collect();
        out.push_str(&format!("arrows: {}\n", arrows.join(", ")));
    }
    if !file.ideal.generators.is_empty() {
        let field = file.field;
        let rels: Vec<String> = file
            .ideal
            .generators
            .iter()
            .map(|rel| {
                let mut s = String::new();
                for (i, (c, p)) in rel.terms.iter().enumerate() {
                    let word = p.display(&file.quiver);
                    let neg = field.is_display_negative(c);
                    let abs = if neg {
                        field.neg(c)
                    } else {
                        c.clone()
                    };
                    let coeff = field.render(&abs);
                    if i == 0 {
                        if neg {
                            s.push('-');
                        }
                    } else {
                        s.push_str(if neg { " - " } else { " + " });
                    }
                    if coeff != "1" {
                        s.push_str(&coeff);
                        s.push('*');
                    }
                    s.push_str(&word);
                }
                s
            })
            .collect();
        out.push_str(&format!("relations: {}\n", rels.join(", ")));
    }
    if let Some(es) = &file.e_set {
        let labels: Vec<&str> = es
            .iter()
            .map(|&v| file.quiver.vertices[v].as_str())
            .collect();
        out.push_str(&format!("e_set: {}\n", labels.join(", ")));
    }
    for m in &file.modules {
        out.push_str(&format!("module {} {{\n", m.name));
        let dims: Vec<String> = m.dims.iter().map(|d| d.to_string()).collect();
        out.push_str(&format!("  dims: {}\n", dims.join(", ")));
        for (label, rows) in &m.actions {
            let body: Vec<String> = rows
                .iter()
                .map(|row| {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|&(n, d)| if d == 1 { n.to_string() } else { format!("{n}/{d}") })
                        .collect();
                    format!("[{}]", cells.join(", "))
                })
                .collect();
            out.push_str(&format!("  {}: [{}]\n", label, body.join(", ")));
        }
        out.push_str("}\n");
    }
    if let Some(tau) = &file.tau {
        let pairs: Vec<String> = tau
            .iter()
            .enumerate()
            .map(|(f, &t)| {
                format!(
                    "{} -> {}",
                    file.quiver.vertices[f], file.quiver.vertices[t]
                )
            })
            .collect();
        out.push_str(&format!("tau: {}\n", pairs.join(", ")));
    }
    if let Some(d) = &file.distinguished {
        let labels: Vec<&str> = d
            .iter()
            .map(|&v| file.quiver.vertices[v].as_str())
            .collect();
        out.push_str(&format!("distinguished: {}\n", labels.join(", ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const FOUR_CYCLE: &str = "\
# the running fixture
algebra over Q
vertices: 1, 2, 3, 4
arrows: a: 1 -> 2, b: 2 -> 3, g: 3 -> 4, d: 4 -> 1
relations: d*g, a*d
e_set: 1, 3
";

    #[test]
    fn parses_the_running_fixture() {
        let f = parse("fixture", FOUR_CYCLE).unwrap();
        assert_eq!(f.quiver.vertex_count(), 4);
        assert_eq!(f.quiver.arrows.len(), 4);
        assert_eq!(f.ideal.generators.len(), 2);
        assert_eq!(f.e_set, Some(vec![0, 2]));
        let (g, a) = build_algebra(&f).unwrap();
        assert!(g.finite);
        assert_eq!(a.dim(), 11);
    }

    #[test]
    fn empty_vertices_is_an_error() {
        let r = parse("t", "algebra over Q\narrows: a: 1 -> 2\n");
        assert!(matches!(r, Err(Error::Parse { .. })));
    }

    #[test]
    fn unknown_vertex_in_arrow() {
        let r = parse("t", "algebra over Q\nvertices: 1\narrows: a: 1 -> 9\n");
        let msg = format!("{}", r.unwrap_err());
        assert!(msg.contains("unknown vertex"), "{msg}");
    }

    #[test]
    fn degree_one_relation_is_rejected_with_location() {
        let r = parse(
            "t",
            "algebra over Q\nvertices: 1, 2\narrows: a: 1 -> 2\nrelations: a\n",
        );
        let msg = format!("{}", r.unwrap_err());
        assert!(msg.contains("length"), "{msg}");
        assert!(msg.contains("t:4"), "location missing in {msg}");
    }

    #[test]
    fn non_parallel_relation_is_rejected() {
        let r = parse(
            "t",
            "algebra over Q\nvertices: 1, 2, 3\narrows: a: 1 -> 2, b: 2 -> 3, c: 1 -> 3, x: 3 -> 1\nrelations: b*a - x*c\n",
        );
        let msg = format!("{}", r.unwrap_err());
        assert!(msg.contains("parallel"), "{msg}");
    }

    #[test]
    fn syntax_error_locations() {
        let r = parse("t", "algebra over Q\nvertices 1\n");
        let msg = format!("{}", r.unwrap_err());
        assert!(msg.starts_with("t:2:"), "{msg}");
    }

    #[test]
    fn module_blocks_and_coefficients() {
        // b*a = 2*b*c forces the action of c to be half that of a when b
        // acts invertibly
        let text = "\
algebra over Q
vertices: 1, 2, 3
arrows: a: 1 -> 2, c: 1 -> 2, b: 2 -> 3
relations: b*a - 2*b*c
module M {
  dims: 1, 1, 1
  a: [[1]]
  b: [[1]]
  c: [[1/2]]
}
";
        let f = parse("t", text).unwrap();
        assert_eq!(f.modules.len(), 1);
        let (g, alg) = build_algebra(&f).unwrap();
        assert!(g.finite);
        let m = instantiate_module(&f.modules[0], &f.quiver, &alg).unwrap();
        assert_eq!(m.dim(), 3);
        // an inconsistent action fails the construction-time check
        let mut bad = f.modules[0].clone();
        bad.actions[2].1 = vec![vec![(5, 1)]];
        assert!(instantiate_module(&bad, &f.quiver, &alg).is_err());
    }

    #[test]
    fn round_trip_through_emit() {
        let f = parse("fixture", FOUR_CYCLE).unwrap();
        let text = emit(&f);
        let f2 = parse("fixture", &text).unwrap();
        assert_eq!(f.quiver, f2.quiver);
        assert_eq!(f.ideal, f2.ideal);
        assert_eq!(f.e_set, f2.e_set);
        assert_eq!(emit(&f2), text);
    }

    #[test]
    fn tau_and_distinguished_sections() {
        let text = "\
algebra over Q
vertices: 0, 1, 2
arrows: u0: 0 -> 1, v0: 0 -> 1, u1: 1 -> 2, v1: 1 -> 2, u2: 2 -> 0, v2: 2 -> 0
tau: 0 -> 2, 1 -> 0, 2 -> 1
distinguished: 0, 1, 2
";
        let f = parse("t", text).unwrap();
        assert_eq!(f.tau, Some(vec![2, 0, 1]));
        assert_eq!(f.distinguished, Some(vec![0, 1, 2]));
        let text2 = emit(&f);
        let f2 = parse("t", &text2).unwrap();
        assert_eq!(f.tau, f2.tau);
    }

    #[test]
    fn prime_field_header() {
        let f = parse("t", "algebra over F7\nvertices: 1\n").unwrap();
        assert_eq!(f.field, FieldSpec::prime(7).unwrap());
        let bad = parse("t", "algebra over F6\nvertices: 1\n");
        assert!(bad.is_err());
        let fp = parse("t", "algebra over Fp\nvertices: 1\n").unwrap();
        assert_eq!(fp.field, FieldSpec::prime(DEFAULT_PRIME).unwrap());
    }
}
