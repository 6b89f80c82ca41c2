//! Session files: declarations, name resolution and canonical printing.
//!
//! A session is a sequence of `;`-terminated statements:
//!
//! ```text
//! ring R vars x1 x2;
//! module M in R^2 gens [(x1, x2), (0, x1^2)];
//! module N in R^2 gens [(1, 0), (0, 1)];
//! hom f : M -> N matrix [[x1, 0], [0, x2]];
//! germ phi : R -> S sends [t^2, t^3];
//! hom g : M -> P over phi images [(t), (t^2)];
//! complex C modules [M1, M0] diffs [d] low 0;
//! chainmap a : C -> D maps [a1, 0];
//! degree1 mu : C -> D maps [0, m0];
//! include "other.dk";
//! run member M (x1, x2);
//! ```
//!
//! A reference `X_D` that is not declared resolves to the double of `X`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use doublekit::complex::{
    double_chain_map, double_degree_one, ChainComplex, ChainMap, DegreeOneMap,
};
use doublekit::double::{
    double_matrix_hom, double_module, relative_double_hom, DoubleContext, GeneratorImageHom,
    RelativeMap,
};
use doublekit::module::{parse_element, Matrix};
use doublekit::poly::syntax::{describe, Cursor, TokenKind};
use doublekit::{
    Error as CoreError, MatrixHom, ModuleElement, PolyRing, Polynomial, RingMorphism, Submodule,
};

use crate::command::Command;
use crate::error::{CliError, CliResult};
use crate::statement::{split, Statement};

pub const DOUBLE_SUFFIX: &str = "_D";

const MAX_INCLUDE_DEPTH: usize = 32;

#[derive(Debug, Clone, PartialEq)]
pub enum HomBody {
    Matrix(Matrix),
    Over {
        germ: String,
        images: Vec<ModuleElement>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Chain,
    DegreeOne,
}

impl MapKind {
    pub fn keyword(self) -> &'static str {
        match self {
            MapKind::Chain => "chainmap",
            MapKind::DegreeOne => "degree1",
        }
    }

    fn shift(self) -> i64 {
        match self {
            MapKind::Chain => 0,
            MapKind::DegreeOne => 1,
        }
    }
}

/// One parsed statement. Included files are inlined, so a session never holds an `include`.
#[derive(Debug, Clone, PartialEq)]
pub enum Decl {
    Ring {
        name: String,
        vars: Vec<String>,
    },
    Module {
        name: String,
        ring: String,
        rank: usize,
        gens: Vec<ModuleElement>,
    },
    Hom {
        name: String,
        domain: String,
        codomain: String,
        body: HomBody,
    },
    Germ {
        name: String,
        source: String,
        target: String,
        images: Vec<Polynomial>,
    },
    /// Modules and differentials listed from the top degree down.
    Complex {
        name: String,
        modules: Vec<String>,
        diffs: Vec<String>,
        low: i64,
    },
    /// One entry per source degree from the top down; `None` is a zero map.
    Map {
        kind: MapKind,
        name: String,
        source: String,
        target: String,
        maps: Vec<Option<String>>,
    },
    Run(Command),
}

impl Decl {
    pub fn name(&self) -> Option<&str> {
        match self {
            Decl::Ring { name, .. }
            | Decl::Module { name, .. }
            | Decl::Hom { name, .. }
            | Decl::Germ { name, .. }
            | Decl::Complex { name, .. }
            | Decl::Map { name, .. } => Some(name),
            Decl::Run(_) => None,
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decl::Ring { name, vars } => {
                write!(f, "ring {name} vars")?;
                for v in vars {
                    write!(f, " {v}")?;
                }
                f.write_str(";")
            }
            Decl::Module {
                name,
                ring,
                rank,
                gens,
            } => write!(f, "module {name} in {ring}^{rank} gens [{}];", join(gens)),
            Decl::Hom {
                name,
                domain,
                codomain,
                body: HomBody::Matrix(a),
            } => write!(f, "hom {name} : {domain} -> {codomain} matrix {a};"),
            Decl::Hom {
                name,
                domain,
                codomain,
                body: HomBody::Over { germ, images },
            } => write!(
                f,
                "hom {name} : {domain} -> {codomain} over {germ} images [{}];",
                join(images)
            ),
            Decl::Germ {
                name,
                source,
                target,
                images,
            } => write!(f, "germ {name} : {source} -> {target} sends [{}];", join(images)),
            Decl::Complex {
                name,
                modules,
                diffs,
                low,
            } => write!(
                f,
                "complex {name} modules [{}] diffs [{}] low {low};",
                modules.join(", "),
                diffs.join(", ")
            ),
            Decl::Map {
                kind,
                name,
                source,
                target,
                maps,
            } => write!(
                f,
                "{} {name} : {source} -> {target} maps [{}];",
                kind.keyword(),
                join(maps.iter().map(|m| m.as_deref().unwrap_or("0")))
            ),
            Decl::Run(cmd) => write!(f, "run {cmd};"),
        }
    }
}

/// A resolved binding. Names of the objects a value was built from are kept so that
/// results can be printed back in session syntax.
#[derive(Debug, Clone)]
pub enum Value {
    Ring(Arc<PolyRing>),
    Module {
        module: Submodule,
        ring: String,
    },
    Hom {
        hom: MatrixHom,
        domain: String,
        codomain: String,
    },
    RelativeHom {
        hom: GeneratorImageHom,
        germ: String,
        domain: String,
        codomain: String,
    },
    Germ {
        germ: RingMorphism,
        source: String,
        target: String,
    },
    /// Module and differential names from the top degree down.
    Complex {
        complex: ChainComplex,
        modules: Vec<String>,
        diffs: Vec<String>,
    },
    ChainMap {
        map: ChainMap,
        source: String,
        target: String,
    },
    DegreeOne {
        map: DegreeOneMap,
        source: String,
        target: String,
    },
}

fn dname(s: &str) -> String {
    format!("{s}{DOUBLE_SUFFIX}")
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Ring(_) => "ring",
            Value::Module { .. } => "module",
            Value::Hom { .. } | Value::RelativeHom { .. } => "hom",
            Value::Germ { .. } => "germ",
            Value::Complex { .. } => "complex",
            Value::ChainMap { .. } => "chain map",
            Value::DegreeOne { .. } => "degree-one map",
        }
    }

    /// The double of this value; every name it refers to gets the `_D` suffix.
    pub fn double(&self) -> Result<Value, CoreError> {
        Ok(match self {
            Value::Ring(r) => Value::Ring(DoubleContext::new(r)?.doubled().clone()),
            Value::Module { module, ring } => {
                let ctx = DoubleContext::new(module.ring())?;
                Value::Module {
                    module: double_module(&ctx, module)?.into_value(),
                    ring: dname(ring),
                }
            }
            Value::Hom {
                hom,
                domain,
                codomain,
            } => {
                let ctx = DoubleContext::new(hom.domain().ring())?;
                Value::Hom {
                    hom: double_matrix_hom(&ctx, hom)?.into_hom(),
                    domain: dname(domain),
                    codomain: dname(codomain),
                }
            }
            Value::RelativeHom {
                hom,
                germ,
                domain,
                codomain,
            } => {
                let d = relative_double_hom(hom)?;
                let rel = RelativeMap::new(d.relative().tensor().clone())?;
                Value::RelativeHom {
                    hom: GeneratorImageHom::new(
                        rel,
                        d.domain().value().clone(),
                        d.codomain().clone(),
                        d.assignments().to_vec(),
                    )?,
                    germ: dname(germ),
                    domain: dname(domain),
                    codomain: dname(codomain),
                }
            }
            Value::Germ {
                germ,
                source,
                target,
            } => Value::Germ {
                germ: RelativeMap::new(germ.clone())?.tensor().clone(),
                source: dname(source),
                target: dname(target),
            },
            Value::Complex {
                complex,
                modules,
                diffs,
            } => Value::Complex {
                complex: complex.double(&DoubleContext::new(complex.ring())?)?,
                modules: modules.iter().map(|m| dname(m)).collect(),
                diffs: diffs.iter().map(|m| dname(m)).collect(),
            },
            Value::ChainMap {
                map,
                source,
                target,
            } => Value::ChainMap {
                map: double_chain_map(&DoubleContext::new(map.source().ring())?, map)?,
                source: dname(source),
                target: dname(target),
            },
            Value::DegreeOne {
                map,
                source,
                target,
            } => Value::DegreeOne {
                map: double_degree_one(&DoubleContext::new(map.source().ring())?, map)?,
                source: dname(source),
                target: dname(target),
            },
        })
    }
}

/// Declarations in order plus the bindings they define. Two sessions are equal when their
/// declarations are.
#[derive(Debug, Clone, Default)]
pub struct Session {
    decls: Vec<Decl>,
    env: BTreeMap<String, Value>,
    declared_at: BTreeMap<String, (String, usize, usize)>,
}

impl PartialEq for Session {
    fn eq(&self, other: &Self) -> bool {
        self.decls == other.decls
    }
}

/// Canonical text: one declaration per line.
impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.decls {
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Parses session text; `include` paths are taken relative to the working directory.
pub fn parse_session(text: &str) -> CliResult<Session> {
    Session::parse(text)
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> CliResult<Session> {
        let mut s = Session::new();
        s.extend(text, "<input>", Path::new("."))?;
        Ok(s)
    }

    pub fn load(path: &Path) -> CliResult<Session> {
        let mut s = Session::new();
        s.include(path, &mut Vec::new())?;
        Ok(s)
    }

    /// Appends the statements of `text`. `origin` labels error positions and `base` anchors
    /// relative `include` paths.
    pub fn extend(&mut self, text: &str, origin: &str, base: &Path) -> CliResult<()> {
        self.extend_inner(text, origin, base, &mut Vec::new())
    }

    pub fn decls(&self) -> &[Decl] {
        &self.decls
    }

    /// Number of named bindings.
    pub fn len(&self) -> usize {
        self.env.len()
    }

    pub fn is_empty(&self) -> bool {
        self.env.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.env.get(name)
    }

    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Run(c) => Some(c),
            _ => None,
        })
    }

    /// Looks `name` up, doubling the base binding for every trailing `_D` that is not
    /// itself declared. `Ok(None)` means the name is unknown.
    pub fn resolve(&self, name: &str) -> Result<Option<Value>, CoreError> {
        if let Some(v) = self.env.get(name) {
            return Ok(Some(v.clone()));
        }
        match name.strip_suffix(DOUBLE_SUFFIX) {
            Some(base) if !base.is_empty() => match self.resolve(base)? {
                Some(v) => Ok(Some(v.double()?)),
                None => Ok(None),
            },
            _ => Ok(None),
        }
    }

    /// The declared binding behind `name` and how many `_D` suffixes lead to it, without
    /// computing any double.
    pub fn base_of(&self, name: &str) -> Option<(&Value, usize)> {
        let mut n = name;
        let mut depth = 0;
        loop {
            if let Some(v) = self.env.get(n) {
                return Some((v, depth));
            }
            n = n.strip_suffix(DOUBLE_SUFFIX).filter(|b| !b.is_empty())?;
            depth += 1;
        }
    }

    fn include(&mut self, path: &Path, stack: &mut Vec<PathBuf>) -> CliResult<()> {
        let shown = path.display().to_string();
        let io = |msg: String| CliError::Io {
            path: shown.clone(),
            msg,
        };
        let canonical = path.canonicalize().map_err(|e| io(e.to_string()))?;
        if stack.contains(&canonical) {
            return Err(io("include cycle".into()));
        }
        if stack.len() >= MAX_INCLUDE_DEPTH {
            return Err(io("includes nested too deeply".into()));
        }
        let text = std::fs::read_to_string(path).map_err(|e| io(e.to_string()))?;
        let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
        stack.push(canonical);
        let r = self.extend_inner(&text, &shown, &base, stack);
        stack.pop();
        r
    }

    fn extend_inner(
        &mut self,
        text: &str,
        origin: &str,
        base: &Path,
        stack: &mut Vec<PathBuf>,
    ) -> CliResult<()> {
        let stmts = split(text).map_err(|(line, col, msg)| CliError::Parse {
            origin: origin.to_string(),
            line,
            col,
            msg,
        })?;
        for stmt in &stmts {
            if stmt.keyword() == "run" {
                let (rest, rl, rc) = stmt.rest();
                let cmd = Command::parse(self, rest).map_err(|(offset, msg)| {
                    let (line, col) = rebase((rl, rc), locate(rest, offset));
                    CliError::Parse {
                        origin: origin.to_string(),
                        line,
                        col,
                        msg,
                    }
                })?;
                self.decls.push(Decl::Run(cmd));
                continue;
            }
            let mut p = StmtParser::new(self, stmt, origin)?;
            if p.cur.at_keyword("include") {
                p.cur.next();
                let file = p.cur.expect_str().map_err(|e| p.core(e))?;
                p.end()?;
                let path = base.join(file);
                self.include(&path, stack)?;
                continue;
            }
            let (decl, value) = p.statement()?;
            if let Some(name) = decl.name() {
                self.declared_at.insert(
                    name.to_string(),
                    (origin.to_string(), stmt.line, stmt.col),
                );
                self.env.insert(name.to_string(), value);
            }
            self.decls.push(decl);
        }
        Ok(())
    }
}

/// Converts a byte offset of `text` into a 1-based line and column.
pub(crate) fn locate(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = match before.rfind('\n') {
        Some(i) => before[i + 1..].chars().count() + 1,
        None => before.chars().count() + 1,
    };
    (line, col)
}

/// Position `rel` of a text that starts at file position `base`.
pub(crate) fn rebase(base: (usize, usize), rel: (usize, usize)) -> (usize, usize) {
    if rel.0 <= 1 {
        (base.0, base.1 + rel.1 - 1)
    } else {
        (base.0 + rel.0 - 1, rel.1)
    }
}

struct StmtParser<'a> {
    session: &'a Session,
    stmt: &'a Statement,
    origin: &'a str,
    cur: Cursor,
}

impl<'a> StmtParser<'a> {
    fn new(session: &'a Session, stmt: &'a Statement, origin: &'a str) -> CliResult<Self> {
        let mut p = StmtParser {
            session,
            stmt,
            origin,
            cur: Cursor::new("").expect("empty text tokenizes"),
        };
        p.cur = Cursor::new(&stmt.text).map_err(|e| p.core(e))?;
        Ok(p)
    }

    fn at(&self, line: usize, col: usize, msg: impl Into<String>) -> CliError {
        let (line, col) = self.stmt.absolute(line, col);
        CliError::Parse {
            origin: self.origin.to_string(),
            line,
            col,
            msg: msg.into(),
        }
    }

    fn pos(&self) -> (usize, usize) {
        let t = self.cur.peek();
        (t.line, t.col)
    }

    fn here(&self, msg: impl Into<String>) -> CliError {
        let (l, c) = self.pos();
        self.at(l, c, msg)
    }

    /// Syntax errors keep their position; anything else is reported at the statement.
    fn core(&self, e: CoreError) -> CliError {
        match e {
            CoreError::Syntax { line, col, msg } => self.at(line, col, msg),
            other => self.at(1, 1, other.to_string()),
        }
    }

    /// A core failure while building the binding `name`.
    fn build(&self, name: &str, e: CoreError) -> CliError {
        match e {
            CoreError::Syntax { .. } => self.core(e),
            other => self.at(1, 1, format!("{name}: {other}")),
        }
    }

    fn end(&self) -> CliResult<()> {
        if self.cur.at_eof() {
            Ok(())
        } else {
            Err(self.here(format!(
                "unexpected {} at the end of the statement",
                describe(self.cur.peek_kind())
            )))
        }
    }

    fn ident(&mut self) -> CliResult<(String, usize, usize)> {
        self.cur.expect_ident().map_err(|e| self.core(e))
    }

    fn keyword(&mut self, kw: &str) -> CliResult<()> {
        self.cur.expect_keyword(kw).map_err(|e| self.core(e))
    }

    fn punct(&mut self, c: char) -> CliResult<()> {
        self.cur.expect_punct(c).map_err(|e| self.core(e))
    }

    fn new_name(&mut self) -> CliResult<String> {
        let (name, l, c) = self.ident()?;
        if name.ends_with(DOUBLE_SUFFIX) {
            return Err(self.at(
                l,
                c,
                format!("`{name}`: names ending in `{DOUBLE_SUFFIX}` are reserved for doubles"),
            ));
        }
        if let Some((origin, dl, dc)) = self.session.declared_at.get(&name) {
            return Err(self.at(
                l,
                c,
                format!("duplicate name `{name}`, already declared at {origin}:{dl}:{dc}"),
            ));
        }
        Ok(name)
    }

    fn lookup(&mut self, want: &str) -> CliResult<(String, Value)> {
        let (name, l, c) = self.ident()?;
        match self.session.resolve(&name) {
            Ok(Some(v)) => Ok((name, v)),
            Ok(None) => Err(self.at(l, c, format!("unresolved name `{name}` (expected a {want})"))),
            Err(e) => Err(self.at(l, c, format!("{name}: {e}"))),
        }
    }

    fn wrong_kind(&self, name: &str, v: &Value, want: &str) -> CliError {
        self.here(format!("`{name}` is a {}, not a {want}", v.kind()))
    }

    fn ring(&mut self) -> CliResult<(String, Arc<PolyRing>)> {
        let (name, v) = self.lookup("ring")?;
        match v {
            Value::Ring(r) => Ok((name, r)),
            other => Err(self.wrong_kind(&name, &other, "ring")),
        }
    }

    fn module(&mut self) -> CliResult<(String, Submodule, String)> {
        let (name, v) = self.lookup("module")?;
        match v {
            Value::Module { module, ring } => Ok((name, module, ring)),
            other => Err(self.wrong_kind(&name, &other, "module")),
        }
    }

    fn complex(&mut self) -> CliResult<(String, ChainComplex, Vec<String>)> {
        let (name, v) = self.lookup("complex")?;
        match v {
            Value::Complex {
                complex, modules, ..
            } => Ok((name, complex, modules)),
            other => Err(self.wrong_kind(&name, &other, "complex")),
        }
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> CliResult<T>) -> CliResult<Vec<T>> {
        self.punct('[')?;
        let mut out = Vec::new();
        if self.cur.eat_punct(']') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if !self.cur.eat_punct(',') {
                self.punct(']')?;
                return Ok(out);
            }
        }
    }

    fn element(&mut self, ring: &Arc<PolyRing>, rank: usize) -> CliResult<ModuleElement> {
        let (l, c) = self.pos();
        let e = parse_element(&mut self.cur, ring).map_err(|e| self.core(e))?;
        if e.rank() != rank {
            return Err(self.at(
                l,
                c,
                format!("element {e} has rank {}, expected rank {rank}", e.rank()),
            ));
        }
        Ok(e)
    }

    fn polynomial(&mut self, ring: &Arc<PolyRing>) -> CliResult<Polynomial> {
        self.cur.parse_polynomial(ring).map_err(|e| self.core(e))
    }

    fn statement(mut self) -> CliResult<(Decl, Value)> {
        let (kw, l, c) = self.ident()?;
        let out = match kw.as_str() {
            "ring" => self.ring_decl()?,
            "module" => self.module_decl()?,
            "hom" => self.hom_decl()?,
            "germ" => self.germ_decl()?,
            "complex" => self.complex_decl()?,
            "chainmap" => self.map_decl(MapKind::Chain)?,
            "degree1" => self.map_decl(MapKind::DegreeOne)?,
            _ => {
                return Err(self.at(
                    l,
                    c,
                    format!(
                        "unknown statement `{kw}` (expected ring, module, hom, germ, complex, \
                         chainmap, degree1, include or run)"
                    ),
                ))
            }
        };
        self.end()?;
        Ok(out)
    }

    fn ring_decl(&mut self) -> CliResult<(Decl, Value)> {
        let name = self.new_name()?;
        self.keyword("vars")?;
        let mut vars = Vec::new();
        while !self.cur.at_eof() {
            vars.push(self.ident()?.0);
        }
        let ring = PolyRing::new(vars.clone()).map_err(|e| self.build(&name, e))?;
        Ok((Decl::Ring { name, vars }, Value::Ring(ring)))
    }

    fn module_decl(&mut self) -> CliResult<(Decl, Value)> {
        let name = self.new_name()?;
        self.keyword("in")?;
        let (ring_name, ring) = self.ring()?;
        self.punct('^')?;
        let rank = self.cur.expect_usize().map_err(|e| self.core(e))?;
        self.keyword("gens")?;
        let gens = self.list(|p| p.element(&ring, rank))?;
        let module =
            Submodule::new(&ring, rank, gens.clone()).map_err(|e| self.build(&name, e))?;
        Ok((
            Decl::Module {
                name,
                ring: ring_name.clone(),
                rank,
                gens,
            },
            Value::Module {
                module,
                ring: ring_name,
            },
        ))
    }

    fn matrix(&mut self, ring: &Arc<PolyRing>, rows: usize, cols: usize) -> CliResult<Matrix> {
        let (l, c) = self.pos();
        let entries = self.list(|p| {
            let (rl, rc) = p.pos();
            let row = p.list(|q| q.polynomial(ring))?;
            if row.len() != cols {
                return Err(p.at(
                    rl,
                    rc,
                    format!("row has {} entries, the domain has rank {cols}", row.len()),
                ));
            }
            Ok(row)
        })?;
        if entries.len() != rows {
            return Err(self.at(
                l,
                c,
                format!(
                    "matrix has {} rows, the codomain has rank {rows}",
                    entries.len()
                ),
            ));
        }
        Matrix::from_rows(ring, rows, cols, entries).map_err(|e| self.core(e))
    }

    fn hom_decl(&mut self) -> CliResult<(Decl, Value)> {
        let name = self.new_name()?;
        self.punct(':')?;
        let (dom_name, dom, _) = self.module()?;
        self.cur.expect_arrow().map_err(|e| self.core(e))?;
        let (cod_name, cod, _) = self.module()?;
        if self.cur.at_keyword("over") {
            self.cur.next();
            let (germ_name, v) = self.lookup("germ")?;
            let germ = match v {
                Value::Germ { germ, .. } => germ,
                other => return Err(self.wrong_kind(&germ_name, &other, "germ")),
            };
            self.keyword("images")?;
            let (l, c) = self.pos();
            let images = self.list(|p| p.element(cod.ring(), cod.rank()))?;
            if images.len() != dom.generators().len() {
                return Err(self.at(
                    l,
                    c,
                    format!(
                        "{} images for {} domain generators",
                        images.len(),
                        dom.generators().len()
                    ),
                ));
            }
            let hom = RelativeMap::new(germ)
                .and_then(|rel| GeneratorImageHom::new(rel, dom, cod, images.clone()))
                .map_err(|e| self.build(&name, e))?;
            return Ok((
                Decl::Hom {
                    name,
                    domain: dom_name.clone(),
                    codomain: cod_name.clone(),
                    body: HomBody::Over {
                        germ: germ_name.clone(),
                        images,
                    },
                },
                Value::RelativeHom {
                    hom,
                    germ: germ_name,
                    domain: dom_name,
                    codomain: cod_name,
                },
            ));
        }
        self.keyword("matrix")?;
        if dom.ring() != cod.ring() {
            return Err(self.here(format!(
                "`{dom_name}` and `{cod_name}` live over different rings; use `over <germ> images [...]`"
            )));
        }
        let a = self.matrix(dom.ring(), cod.rank(), dom.rank())?;
        let hom = MatrixHom::new(dom, cod, a.clone()).map_err(|e| self.build(&name, e))?;
        Ok((
            Decl::Hom {
                name,
                domain: dom_name.clone(),
                codomain: cod_name.clone(),
                body: HomBody::Matrix(a),
            },
            Value::Hom {
                hom,
                domain: dom_name,
                codomain: cod_name,
            },
        ))
    }

    fn germ_decl(&mut self) -> CliResult<(Decl, Value)> {
        let name = self.new_name()?;
        self.punct(':')?;
        let (src_name, src) = self.ring()?;
        self.cur.expect_arrow().map_err(|e| self.core(e))?;
        let (tgt_name, tgt) = self.ring()?;
        self.keyword("sends")?;
        let (l, c) = self.pos();
        let images = self.list(|p| p.polynomial(&tgt))?;
        if images.len() != src.nvars() {
            return Err(self.at(
                l,
                c,
                format!(
                    "{} images for the {} variables of `{src_name}`",
                    images.len(),
                    src.nvars()
                ),
            ));
        }
        let germ =
            RingMorphism::new(&src, &tgt, images.clone()).map_err(|e| self.build(&name, e))?;
        Ok((
            Decl::Germ {
                name,
                source: src_name.clone(),
                target: tgt_name.clone(),
                images,
            },
            Value::Germ {
                germ,
                source: src_name,
                target: tgt_name,
            },
        ))
    }

    fn complex_decl(&mut self) -> CliResult<(Decl, Value)> {
        let name = self.new_name()?;
        self.keyword("modules")?;
        let (ml, mc) = self.pos();
        let modules = self.list(|p| p.module())?;
        self.keyword("diffs")?;
        let (dl, dc) = self.pos();
        let diffs = self.list(|p| {
            let (n, v) = p.lookup("hom")?;
            match v {
                Value::Hom {
                    hom,
                    domain,
                    codomain,
                } => Ok((n, hom, domain, codomain)),
                other => Err(p.wrong_kind(&n, &other, "matrix hom")),
            }
        })?;
        let low = if self.cur.at_keyword("low") {
            self.cur.next();
            self.cur.expect_i64().map_err(|e| self.core(e))?
        } else {
            0
        };
        let Some(first) = modules.first() else {
            return Err(self.at(ml, mc, "a complex needs at least one module"));
        };
        let ring = first.1.ring().clone();
        if diffs.len() + 1 != modules.len() {
            return Err(self.at(
                dl,
                dc,
                format!(
                    "{} modules need {} differentials, found {}",
                    modules.len(),
                    modules.len() - 1,
                    diffs.len()
                ),
            ));
        }
        for (k, (d, _, dom, cod)) in diffs.iter().enumerate() {
            let (upper, lower) = (&modules[k].0, &modules[k + 1].0);
            if dom != upper || cod != lower {
                return Err(self.at(
                    dl,
                    dc,
                    format!("`{d}` goes {dom} -> {cod}, but the complex needs {upper} -> {lower}"),
                ));
            }
        }
        let bottom_up: Vec<Submodule> = modules.iter().rev().map(|m| m.1.clone()).collect();
        let homs: Vec<MatrixHom> = diffs.iter().rev().map(|d| d.1.clone()).collect();
        let complex = ChainComplex::from_homs(&ring, low, bottom_up, &homs)
            .map_err(|e| self.build(&name, e))?;
        if !complex.is_complex() {
            return Err(self.at(
                dl,
                dc,
                format!("{name}: consecutive differentials do not compose to zero"),
            ));
        }
        let module_names: Vec<String> = modules.into_iter().map(|m| m.0).collect();
        let diff_names: Vec<String> = diffs.into_iter().map(|d| d.0).collect();
        Ok((
            Decl::Complex {
                name,
                modules: module_names.clone(),
                diffs: diff_names.clone(),
                low,
            },
            Value::Complex {
                complex,
                modules: module_names,
                diffs: diff_names,
            },
        ))
    }

    fn map_decl(&mut self, kind: MapKind) -> CliResult<(Decl, Value)> {
        let name = self.new_name()?;
        self.punct(':')?;
        let (src_name, src, src_mods) = self.complex()?;
        self.cur.expect_arrow().map_err(|e| self.core(e))?;
        let (tgt_name, tgt, tgt_mods) = self.complex()?;
        self.keyword("maps")?;
        let (l, c) = self.pos();
        let entries = self.list(|p| {
            if let TokenKind::Int(n) = p.cur.peek_kind() {
                if n.to_string() == "0" {
                    p.cur.next();
                    return Ok(None);
                }
            }
            let (n, v) = p.lookup("hom")?;
            match v {
                Value::Hom {
                    hom,
                    domain,
                    codomain,
                } => Ok(Some((n, hom, domain, codomain))),
                other => Err(p.wrong_kind(&n, &other, "matrix hom")),
            }
        })?;
        if entries.len() != src_mods.len() {
            return Err(self.at(
                l,
                c,
                format!(
                    "`{src_name}` has {} degrees, found {} maps",
                    src_mods.len(),
                    entries.len()
                ),
            ));
        }
        let shift = kind.shift();
        let ring = src.ring().clone();
        let module_name = |mods: &[String], cx: &ChainComplex, i: i64| -> Option<String> {
            (i >= cx.low() && i <= cx.high()).then(|| mods[(cx.high() - i) as usize].clone())
        };
        let mut matrices = Vec::with_capacity(entries.len());
        for (k, entry) in entries.iter().enumerate().rev() {
            let i = src.high() - k as i64;
            let j = i + shift;
            match entry {
                None => matrices.push(Matrix::zero(
                    &ring,
                    tgt.module(j).rank(),
                    src.module(i).rank(),
                )),
                Some((n, hom, dom, cod)) => {
                    let want_dom = module_name(&src_mods, &src, i);
                    let want_cod = module_name(&tgt_mods, &tgt, j);
                    if want_dom.as_ref() != Some(dom) || want_cod.as_ref() != Some(cod) {
                        return Err(self.at(
                            l,
                            c,
                            format!(
                                "`{n}` goes {dom} -> {cod}, but degree {i} needs {} -> {}",
                                want_dom.as_deref().unwrap_or("0"),
                                want_cod.as_deref().unwrap_or("0")
                            ),
                        ));
                    }
                    matrices.push(hom.matrix().clone());
                }
            }
        }
        let maps: Vec<Option<String>> = entries.into_iter().map(|e| e.map(|e| e.0)).collect();
        let decl = Decl::Map {
            kind,
            name: name.clone(),
            source: src_name.clone(),
            target: tgt_name.clone(),
            maps,
        };
        let value = match kind {
            MapKind::Chain => Value::ChainMap {
                map: ChainMap::new(&src, &tgt, src.low(), matrices)
                    .map_err(|e| self.build(&name, e))?,
                source: src_name,
                target: tgt_name,
            },
            MapKind::DegreeOne => Value::DegreeOne {
                map: DegreeOneMap::new(&src, &tgt, src.low(), matrices)
                    .map_err(|e| self.build(&name, e))?,
                source: src_name,
                target: tgt_name,
            },
        };
        Ok((decl, value))
    }
}
