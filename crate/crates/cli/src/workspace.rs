//! The workspace file format: line-oriented `[section]` blocks of
//! `key = value` pairs. A key with an empty value takes the bracketed matrix
//! rows that follow it, one row per line. `#` starts a comment.
//!
//! ```text
//! [field]
//! kind = prime
//! p = 2
//!
//! [algebra]
//! presentation = quiver
//! vertices = 1
//! arrow x = 1 -> 1
//! relation = x x
//! nilpotency_cap = 2
//!
//! [module S]
//! dim = 1
//! action e1 =
//! [1]
//! action x =
//! [0]
//!
//! [morphism iota]
//! source = S
//! target = A
//! matrix =
//! [0 1]
//!
//! [catalogue]
//! members = S A
//! ```

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};

use raddeg_core::algebra::{Arrow, QuiverPresentation, Relation};
use raddeg_core::{Algebra, Catalogue, ExactMatrix, Field, FieldKind, FieldSpec, Module, Morphism, Scalar};

#[derive(Debug)]
pub enum WorkspaceError {
    Io(PathBuf, std::io::Error),
    Syntax { line: usize, column: usize, message: String },
    Semantic { line: usize, error: raddeg_core::Error },
}

impl fmt::Display for WorkspaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WorkspaceError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            WorkspaceError::Syntax { line, column, message } => write!(f, "line {line}, column {column}: {message}"),
            WorkspaceError::Semantic { line, error } => write!(f, "line {line}: {error}"),
        }
    }
}

impl std::error::Error for WorkspaceError {}

type Result<T> = std::result::Result<T, WorkspaceError>;

fn syntax<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(WorkspaceError::Syntax { line, column, message: message.into() })
}

fn semantic(line: usize) -> impl Fn(raddeg_core::Error) -> WorkspaceError {
    move |error| WorkspaceError::Semantic { line, error }
}

#[derive(Clone, Debug)]
pub struct NamedMorphism {
    pub name: String,
    pub source: String,
    pub target: String,
    pub morphism: Morphism,
}

#[derive(Clone, Debug)]
pub enum CatalogueSpec {
    Inline,
    File(String),
}

#[derive(Clone, Debug)]
pub struct Workspace {
    pub field: Field,
    pub algebra: Algebra,
    pub modules: Vec<(String, Module)>,
    pub morphisms: Vec<NamedMorphism>,
    pub catalogue: Option<(CatalogueSpec, Catalogue)>,
}

impl Workspace {
    /// A module block, or else a member of the catalogue, by name.
    pub fn module(&self, name: &str) -> Option<&Module> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m).or_else(|| {
            let c = self.catalogue()?;
            c.index_of(name).map(|i| c.member(i))
        })
    }

    pub fn morphism(&self, name: &str) -> Option<&NamedMorphism> {
        self.morphisms.iter().find(|m| m.name == name)
    }

    pub fn catalogue(&self) -> Option<&Catalogue> {
        self.catalogue.as_ref().map(|(_, c)| c)
    }
}

// ---------------------------------------------------------------- lexing

#[derive(Clone, Debug)]
struct Entry {
    key: String,
    value: String,
    line: usize,
    /// 1-based column where the value starts.
    column: usize,
    rows: Vec<(usize, String)>,
}

#[derive(Clone, Debug)]
struct Block {
    kind: String,
    name: Option<String>,
    line: usize,
    entries: Vec<Entry>,
}

impl Block {
    fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.key == key)
    }

    fn require(&self, key: &str) -> Result<&Entry> {
        self.get(key).map_or_else(
            || syntax(self.line, 1, format!("[{}] block needs '{key}'", self.title())),
            Ok,
        )
    }

    /// Entries whose key is `prefix NAME`, with the name split off.
    fn named<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = (&'a str, &'a Entry)> + 'a {
        self.entries.iter().filter_map(move |e| {
            let rest = e.key.strip_prefix(prefix)?.strip_prefix(' ')?;
            Some((rest.trim(), e))
        })
    }

    fn title(&self) -> String {
        match &self.name {
            Some(n) => format!("{} {n}", self.kind),
            None => self.kind.clone(),
        }
    }
}

const SECTIONS: [&str; 5] = ["field", "algebra", "module", "morphism", "catalogue"];

fn section_header(text: &str) -> Option<(String, Option<String>)> {
    let inner = text.strip_prefix('[')?.strip_suffix(']')?.trim();
    let mut it = inner.splitn(2, char::is_whitespace);
    let kind = it.next()?;
    if !SECTIONS.contains(&kind) {
        return None;
    }
    Some((kind.to_string(), it.next().map(|s| s.trim().to_string())))
}

fn lex(src: &str) -> Result<Vec<Block>> {
    let mut blocks: Vec<Block> = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("");
        let indent = text.len() - text.trim_start().len();
        let text = text.trim();
        if text.is_empty() {
            continue;
        }
        if let Some((kind, name)) = section_header(text) {
            let needs_name = kind == "module" || kind == "morphism";
            if needs_name != name.is_some() {
                return syntax(line, indent + 1, format!("malformed section header '{text}'"));
            }
            blocks.push(Block { kind, name, line, entries: Vec::new() });
            continue;
        }
        let Some(block) = blocks.last_mut() else {
            return syntax(line, indent + 1, "content before the first section header");
        };
        if text.starts_with('[') {
            match block.entries.last_mut() {
                Some(e) if e.value.is_empty() => e.rows.push((line, text.to_string())),
                _ => return syntax(line, indent + 1, "matrix row without a preceding 'key =' line"),
            }
            continue;
        }
        let Some(eq) = text.find('=') else {
            return syntax(line, indent + 1, format!("expected 'key = value', found '{text}'"));
        };
        let key = text[..eq].split_whitespace().collect::<Vec<_>>().join(" ");
        if key.is_empty() {
            return syntax(line, indent + 1, "empty key");
        }
        let after = &text[eq + 1..];
        let value = after.trim().to_string();
        let column = indent + eq + 2 + (after.len() - after.trim_start().len());
        block.entries.push(Entry { key, value, line, column, rows: Vec::new() });
    }
    Ok(blocks)
}

// --------------------------------------------------------------- parsing

fn parse_usize(e: &Entry) -> Result<usize> {
    e.value.parse().or_else(|_| syntax(e.line, e.column, format!("'{}' is not a nonnegative integer", e.value)))
}

fn tokens(e: &Entry) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in e.value.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((e.column + s, &e.value[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((e.column + s, &e.value[s..]));
    }
    out
}

fn parse_scalar(field: &Field, tok: &str, line: usize, column: usize) -> Result<Scalar> {
    field.parse(tok).or_else(|_| syntax(line, column, format!("cannot read '{tok}' as an element of {field}")))
}

fn parse_vector(field: &Field, e: &Entry, len: usize) -> Result<Vec<Scalar>> {
    let toks = tokens(e);
    if toks.len() != len {
        return syntax(e.line, e.column, format!("expected {len} entries, found {}", toks.len()));
    }
    toks.iter().map(|&(c, t)| parse_scalar(field, t, e.line, c)).collect()
}

fn parse_matrix(field: &Field, e: &Entry, rows: usize, cols: usize) -> Result<ExactMatrix> {
    if !e.value.is_empty() {
        return syntax(e.line, e.column, "matrix rows go on the following lines");
    }
    if e.rows.len() != rows {
        return syntax(e.line, 1, format!("'{}' needs {rows} rows, found {}", e.key, e.rows.len()));
    }
    let mut out = Vec::with_capacity(rows);
    for (line, text) in &e.rows {
        let Some(inner) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) else {
            return syntax(*line, 1, "matrix rows are written as '[a b c]'");
        };
        let mut row = Vec::with_capacity(cols);
        let mut offset = 2;
        for piece in inner.split(' ') {
            if !piece.is_empty() {
                row.push(parse_scalar(field, piece, *line, offset)?);
            }
            offset += piece.len() + 1;
        }
        if row.len() != cols {
            return syntax(*line, 1, format!("expected {cols} entries in the row, found {}", row.len()));
        }
        out.push(row);
    }
    ExactMatrix::from_rows(field, cols, out).map_err(semantic(e.line))
}

fn parse_field(b: &Block) -> Result<Field> {
    let kind = b.require("kind")?;
    let spec = match kind.value.as_str() {
        "rationals" => FieldSpec::rationals(),
        "prime" => FieldSpec::prime(parse_usize(b.require("p")?)? as u64).map_err(semantic(b.line))?,
        "prime-power" => {
            let p = parse_usize(b.require("p")?)? as u64;
            match b.get("modulus") {
                Some(m) => {
                    let coeffs = tokens(m)
                        .into_iter()
                        .map(|(c, t)| t.parse::<u64>().or_else(|_| syntax(m.line, c, format!("bad coefficient '{t}'"))))
                        .collect::<Result<Vec<_>>>()?;
                    FieldSpec::with_modulus(p, coeffs).map_err(semantic(m.line))?
                }
                None => {
                    let k = parse_usize(b.require("k")?)? as u32;
                    FieldSpec::prime_power(p, k).map_err(semantic(b.line))?
                }
            }
        }
        other => return syntax(kind.line, kind.column, format!("unknown field kind '{other}'")),
    };
    Ok(Field::new(spec))
}

fn parse_algebra(field: &Field, b: &Block) -> Result<Algebra> {
    let pres = b.require("presentation")?;
    match pres.value.as_str() {
        "quiver" => parse_quiver(field, b),
        "structure-constants" => parse_structure_constants(field, b),
        other => syntax(pres.line, pres.column, format!("unknown presentation '{other}'")),
    }
}

fn parse_quiver(field: &Field, b: &Block) -> Result<Algebra> {
    let vertices: Vec<String> = tokens(b.require("vertices")?).into_iter().map(|(_, t)| t.to_string()).collect();
    let mut arrows = Vec::new();
    for (name, e) in b.named("arrow") {
        if !name.starts_with(|c: char| c.is_alphabetic()) {
            return syntax(e.line, 1, format!("arrow name '{name}' must start with a letter"));
        }
        let Some((s, t)) = e.value.split_once("->") else {
            return syntax(e.line, e.column, "arrows are written 'arrow NAME = SOURCE -> TARGET'");
        };
        let find = |v: &str| vertices.iter().position(|x| x == v.trim());
        let (Some(source), Some(target)) = (find(s), find(t)) else {
            return syntax(e.line, e.column, format!("unknown vertex in '{}'", e.value));
        };
        arrows.push(Arrow { name: name.to_string(), source, target });
    }
    let mut pres = QuiverPresentation { vertices, arrows, relations: Vec::new(), nilpotency_cap: 0 };
    let mut lines = Vec::new();
    for e in b.entries.iter().filter(|e| e.key == "relation") {
        let mut rel: Relation = Vec::new();
        let mut offset = 0;
        for term in e.value.split(" + ") {
            let mut coeff = None;
            let mut path = Vec::new();
            let mut col = e.column + offset;
            for tok in term.split(' ') {
                if !tok.is_empty() {
                    match pres.arrow_index(tok) {
                        Some(a) => path.push(a),
                        None if path.is_empty() && coeff.is_none() && !tok.starts_with(char::is_alphabetic) => {
                            coeff = Some(parse_scalar(field, tok, e.line, col)?);
                        }
                        None => return syntax(e.line, col, format!("unknown arrow '{tok}'")),
                    }
                }
                col += tok.len() + 1;
            }
            let coeff = coeff.unwrap_or_else(|| field.one());
            if path.len() < 2 {
                return Err(WorkspaceError::Semantic {
                    line: e.line,
                    error: raddeg_core::Error::NotAdmissible(format!("relation term '{}' is not a path of length at least 2", term.trim())),
                });
            }
            pres.path(&path).map_err(semantic(e.line))?;
            rel.push((coeff, path));
            offset += term.len() + 3;
        }
        pres.relations.push(rel);
        lines.push(e.line);
    }
    pres.nilpotency_cap = parse_usize(b.require("nilpotency_cap")?)?;
    Algebra::from_path_algebra(field, &pres).map_err(|error| {
        let line = match &error {
            raddeg_core::Error::NotAdmissible(msg) => msg
                .strip_prefix("relation ")
                .and_then(|r| r.split(':').next())
                .and_then(|k| k.parse::<usize>().ok())
                .and_then(|k| lines.get(k.wrapping_sub(1)).copied())
                .unwrap_or(b.line),
            _ => b.line,
        };
        WorkspaceError::Semantic { line, error }
    })
}

fn parse_structure_constants(field: &Field, b: &Block) -> Result<Algebra> {
    let labels: Vec<String> = tokens(b.require("basis")?).into_iter().map(|(_, t)| t.to_string()).collect();
    let n = labels.len();
    let index = |l: &str, e: &Entry| -> Result<usize> {
        labels.iter().position(|x| x == l).map_or_else(|| syntax(e.line, 1, format!("unknown basis element '{l}'")), Ok)
    };
    let unit = parse_vector(field, b.require("unit")?, n)?;
    let mut mult = vec![vec![vec![field.zero(); n]; n]; n];
    for (pair, e) in b.named("product") {
        let ij: Vec<&str> = pair.split_whitespace().collect();
        if ij.len() != 2 {
            return syntax(e.line, 1, "products are written 'product X Y = coordinates'");
        }
        mult[index(ij[0], e)?][index(ij[1], e)?] = parse_vector(field, e, n)?;
    }
    let idempotents: Vec<Vec<Scalar>> = b
        .entries
        .iter()
        .filter(|e| e.key == "idempotent")
        .map(|e| parse_vector(field, e, n))
        .collect::<Result<_>>()?;
    let idempotents = (!idempotents.is_empty()).then_some(idempotents);
    Algebra::from_structure_constants_with(field, mult, unit, labels, idempotents).map_err(semantic(b.line))
}

fn parse_module(alg: &Algebra, b: &Block) -> Result<Module> {
    let field = alg.field();
    if let Some(e) = b.get("vertex_dims") {
        let Some(pres) = alg.presentation() else {
            return syntax(e.line, 1, "vertex_dims needs a quiver presentation");
        };
        let dims: Vec<usize> = tokens(e)
            .into_iter()
            .map(|(c, t)| t.parse().or_else(|_| syntax(e.line, c, format!("bad dimension '{t}'"))))
            .collect::<Result<_>>()?;
        if dims.len() != pres.vertices.len() {
            return syntax(e.line, e.column, format!("expected {} dimensions", pres.vertices.len()));
        }
        let mut maps: Vec<ExactMatrix> =
            pres.arrows.iter().map(|a| ExactMatrix::zeros(field, dims[a.source], dims[a.target])).collect();
        for (name, e) in b.named("arrow") {
            let Some(k) = pres.arrow_index(name) else {
                return syntax(e.line, 1, format!("unknown arrow '{name}'"));
            };
            let a = &pres.arrows[k];
            maps[k] = parse_matrix(field, e, dims[a.source], dims[a.target])?;
        }
        return Module::from_representation(alg, &dims, &maps).map_err(semantic(b.line));
    }
    let dim = parse_usize(b.require("dim")?)?;
    let mut action: Vec<Option<ExactMatrix>> = vec![None; alg.dim()];
    for (label, e) in b.named("action") {
        let Some(k) = alg.labels().iter().position(|l| l == label) else {
            return syntax(e.line, 1, format!("unknown basis element '{label}'"));
        };
        action[k] = Some(parse_matrix(field, e, dim, dim)?);
    }
    let action = action
        .into_iter()
        .enumerate()
        .map(|(k, m)| match m {
            Some(m) => Ok(m),
            None if dim == 0 => Ok(ExactMatrix::zeros(field, 0, 0)),
            None => syntax(b.line, 1, format!("module {} lacks 'action {}'", b.title(), alg.labels()[k])),
        })
        .collect::<Result<Vec<_>>>()?;
    Module::new(alg, action).map_err(semantic(b.line))
}

fn parse_morphism(ws: &Workspace, b: &Block) -> Result<NamedMorphism> {
    let lookup = |key: &str| -> Result<(String, &Module)> {
        let e = b.require(key)?;
        ws.module(&e.value)
            .map(|m| (e.value.clone(), m))
            .map_or_else(|| syntax(e.line, e.column, format!("unknown module '{}'", e.value)), Ok)
    };
    let (sname, s) = lookup("source")?;
    let (tname, t) = lookup("target")?;
    let e = b.require("matrix")?;
    let matrix = parse_matrix(&ws.field, e, s.dim(), t.dim())?;
    let morphism = Morphism::new(s, t, matrix).map_err(semantic(e.line))?;
    Ok(NamedMorphism { name: b.name.clone().expect("named block"), source: sname, target: tname, morphism })
}

fn parse_members(ws: &Workspace, b: &Block) -> Result<Catalogue> {
    let e = b.require("members")?;
    let mut members = Vec::new();
    let mut labels = Vec::new();
    for (c, t) in tokens(e) {
        let Some(m) = ws.module(t) else {
            return syntax(e.line, c, format!("unknown module '{t}'"));
        };
        members.push(m.clone());
        labels.push(t.to_string());
    }
    Catalogue::validated(&ws.algebra, members, labels).map_err(semantic(e.line))
}

fn check_unique<'a>(blocks: impl Iterator<Item = &'a Block>) -> Result<()> {
    let mut seen = BTreeMap::new();
    for b in blocks {
        let key = b.title();
        if let Some(first) = seen.insert(key.clone(), b.line) {
            return syntax(b.line, 1, format!("[{key}] already defined on line {first}"));
        }
    }
    Ok(())
}

/// Parses workspace text. `base` resolves catalogue file references.
pub fn parse_str(src: &str, base: Option<&Path>) -> Result<Workspace> {
    let blocks = lex(src)?;
    check_unique(blocks.iter())?;
    let find = |kind: &str| blocks.iter().find(|b| b.kind == kind);
    let Some(fb) = find("field") else {
        return syntax(1, 1, "missing field block");
    };
    let field = parse_field(fb)?;
    let Some(ab) = find("algebra") else {
        return syntax(1, 1, "missing algebra block");
    };
    let algebra = parse_algebra(&field, ab)?;
    let mut ws = Workspace { field, algebra, modules: Vec::new(), morphisms: Vec::new(), catalogue: None };
    for b in blocks.iter().filter(|b| b.kind == "module") {
        let m = parse_module(&ws.algebra, b)?;
        ws.modules.push((b.name.clone().expect("named block"), m));
    }
    if let Some(cb) = find("catalogue") {
        let cat = match cb.get("file") {
            Some(e) => {
                let path = base.map_or_else(|| PathBuf::from(&e.value), |b| b.join(&e.value));
                let text = std::fs::read_to_string(&path).map_err(|err| WorkspaceError::Io(path.clone(), err))?;
                let frag = parse_fragment(&ws, &text).map_err(|err| match err {
                    WorkspaceError::Syntax { line, column, message } => WorkspaceError::Syntax {
                        line,
                        column,
                        message: format!("{}: {message}", path.display()),
                    },
                    other => other,
                })?;
                (CatalogueSpec::File(e.value.clone()), frag)
            }
            None => (CatalogueSpec::Inline, parse_members(&ws, cb)?),
        };
        ws.catalogue = Some(cat);
    }
    for b in blocks.iter().filter(|b| b.kind == "morphism") {
        let m = parse_morphism(&ws, b)?;
        ws.morphisms.push(m);
    }
    Ok(ws)
}

/// A catalogue file: module blocks and a `[catalogue]` members list over the
/// algebra of `ws`.
fn parse_fragment(ws: &Workspace, src: &str) -> Result<Catalogue> {
    let blocks = lex(src)?;
    check_unique(blocks.iter())?;
    let mut scratch = Workspace {
        field: ws.field.clone(),
        algebra: ws.algebra.clone(),
        modules: Vec::new(),
        morphisms: Vec::new(),
        catalogue: None,
    };
    for b in &blocks {
        match b.kind.as_str() {
            "module" => {
                let m = parse_module(&ws.algebra, b)?;
                scratch.modules.push((b.name.clone().expect("named block"), m));
            }
            "catalogue" => {}
            _ => return syntax(b.line, 1, format!("[{}] is not allowed in a catalogue file", b.kind)),
        }
    }
    let Some(cb) = blocks.iter().find(|b| b.kind == "catalogue") else {
        return syntax(1, 1, "catalogue file lacks a [catalogue] block");
    };
    parse_members(&scratch, cb)
}

pub fn parse_file(path: &Path) -> Result<Workspace> {
    let text = std::fs::read_to_string(path).map_err(|e| WorkspaceError::Io(path.to_path_buf(), e))?;
    parse_str(&text, path.parent())
}

// -------------------------------------------------------------- emitting

fn row_text(field: &Field, row: &[Scalar]) -> String {
    row.iter().map(|x| field.format(x)).collect::<Vec<_>>().join(" ")
}

fn write_matrix(out: &mut String, key: &str, field: &Field, m: &ExactMatrix) {
    writeln!(out, "{key} =").unwrap();
    for r in m.row_iter() {
        writeln!(out, "[{}]", row_text(field, r)).unwrap();
    }
}

fn emit_field(out: &mut String, field: &Field) {
    let spec = field.spec();
    out.push_str("[field]\n");
    match spec.kind {
        FieldKind::Rationals => out.push_str("kind = rationals\n"),
        FieldKind::Prime => writeln!(out, "kind = prime\np = {}", spec.p).unwrap(),
        FieldKind::PrimePower => {
            let m: Vec<String> = spec.modulus.iter().map(u64::to_string).collect();
            writeln!(out, "kind = prime-power\np = {}\nk = {}\nmodulus = {}", spec.p, spec.k, m.join(" ")).unwrap();
        }
    }
}

fn emit_algebra(out: &mut String, alg: &Algebra) -> raddeg_core::Result<()> {
    let field = alg.field();
    out.push_str("\n[algebra]\n");
    if let Some(pres) = alg.presentation() {
        out.push_str("presentation = quiver\n");
        writeln!(out, "vertices = {}", pres.vertices.join(" ")).unwrap();
        for a in &pres.arrows {
            writeln!(out, "arrow {} = {} -> {}", a.name, pres.vertices[a.source], pres.vertices[a.target]).unwrap();
        }
        for rel in &pres.relations {
            let terms: Vec<String> = rel
                .iter()
                .map(|(c, p)| {
                    let names: Vec<&str> = p.iter().map(|&a| pres.arrows[a].name.as_str()).collect();
                    if field.is_one(c) {
                        names.join(" ")
                    } else {
                        format!("{} {}", field.format(c), names.join(" "))
                    }
                })
                .collect();
            writeln!(out, "relation = {}", terms.join(" + ")).unwrap();
        }
        writeln!(out, "nilpotency_cap = {}", pres.nilpotency_cap).unwrap();
        return Ok(());
    }
    out.push_str("presentation = structure-constants\n");
    writeln!(out, "basis = {}", alg.labels().join(" ")).unwrap();
    writeln!(out, "unit = {}", row_text(field, alg.unit())).unwrap();
    for e in alg.primitive_idempotents()? {
        writeln!(out, "idempotent = {}", row_text(field, e)).unwrap();
    }
    let labels = alg.labels();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let p = alg.mult(i, j);
            if p.iter().any(|x| !field.is_zero(x)) {
                writeln!(out, "product {} {} = {}", labels[i], labels[j], row_text(field, p)).unwrap();
            }
        }
    }
    Ok(())
}

fn emit_module(out: &mut String, name: &str, m: &Module) {
    let alg = m.algebra();
    writeln!(out, "\n[module {name}]\ndim = {}", m.dim()).unwrap();
    if m.dim() == 0 {
        return;
    }
    for (label, a) in alg.labels().iter().zip(m.actions()) {
        write_matrix(out, &format!("action {label}"), alg.field(), a);
    }
}

/// Canonical text of a workspace. A referenced catalogue file is kept as a
/// reference; its modules are not inlined.
pub fn emit(ws: &Workspace) -> raddeg_core::Result<String> {
    let mut out = String::new();
    emit_field(&mut out, &ws.field);
    emit_algebra(&mut out, &ws.algebra)?;
    for (name, m) in &ws.modules {
        emit_module(&mut out, name, m);
    }
    for m in &ws.morphisms {
        writeln!(out, "\n[morphism {}]\nsource = {}\ntarget = {}", m.name, m.source, m.target).unwrap();
        write_matrix(&mut out, "matrix", &ws.field, &m.morphism.matrix);
    }
    match &ws.catalogue {
        Some((CatalogueSpec::Inline, c)) => writeln!(out, "\n[catalogue]\nmembers = {}", c.labels().join(" ")).unwrap(),
        Some((CatalogueSpec::File(p), _)) => writeln!(out, "\n[catalogue]\nfile = {p}").unwrap(),
        None => {}
    }
    Ok(out)
}

/// A workspace holding a catalogue, its members as modules, and the
/// irr-space basis maps between members as morphisms named
/// `SOURCE_to_TARGET` (suffixed `_K` when the irr space has dimension > 1).
pub fn from_catalogue(c: &Catalogue, t: &raddeg_core::radical::RadicalTable) -> Workspace {
    let modules: Vec<(String, Module)> =
        c.labels().iter().cloned().zip(c.members().iter().cloned()).collect();
    let mut morphisms = Vec::new();
    let safe = |l: &str| l.replace(['/', '+', ' '], "_");
    for i in 0..c.len() {
        for j in 0..c.len() {
            let irr = t.irr(i, j);
            for (k, g) in irr.basis.iter().enumerate() {
                let mut name = format!("{}_to_{}", safe(c.label(i)), safe(c.label(j)));
                if irr.basis.len() > 1 {
                    write!(name, "_{}", k + 1).unwrap();
                }
                morphisms.push(NamedMorphism {
                    name,
                    source: c.label(i).to_string(),
                    target: c.label(j).to_string(),
                    morphism: g.clone(),
                });
            }
        }
    }
    Workspace {
        field: c.algebra().field().clone(),
        algebra: c.algebra().clone(),
        modules,
        morphisms,
        catalogue: Some((CatalogueSpec::Inline, c.clone())),
    }
}
