//! Commands run against a session and their canonical text output.

use std::fmt;
use std::path::PathBuf;
use std::sync::Arc;

use doublekit::complex::ChainComplex;
use doublekit::double::{
    double_module, relative_double_hom, DoubleContext, GeneratorImageHom,
};
use doublekit::module::{parse_element, Matrix};
use doublekit::poly::syntax::Cursor;
use doublekit::verify::{find, run_property, InstanceSpec};
use doublekit::{
    colength, generic_rank, Error as CoreError, ModuleElement, PolyRing, RingMorphism, Submodule,
};

use crate::error::{CliError, CliResult};
use crate::session::{Session, Value};

pub const DEFAULT_TRIALS: usize = 100;
pub const DEFAULT_REPLAY_DIR: &str = "doublekit-replays";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyArgs {
    pub id: String,
    pub trials: usize,
    pub seed: u64,
    pub replay_dir: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Double(String),
    Member {
        module: String,
        element: ModuleElement,
    },
    Eq(String, String),
    Kernel(String),
    Image(String),
    Colength(String, String),
    Rank(String),
    Exact(String),
    Homotopy {
        alpha: String,
        beta: String,
        mu: String,
    },
    RelativeDouble {
        germ: String,
        hom: String,
    },
    Verify(VerifyArgs),
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Double(x) => write!(f, "double {x}"),
            Command::Member { module, element } => write!(f, "member {module} {element}"),
            Command::Eq(a, b) => write!(f, "eq {a} {b}"),
            Command::Kernel(x) => write!(f, "kernel {x}"),
            Command::Image(x) => write!(f, "image {x}"),
            Command::Colength(a, b) => write!(f, "colength {a} {b}"),
            Command::Rank(x) => write!(f, "rank {x}"),
            Command::Exact(x) => write!(f, "exact {x}"),
            Command::Homotopy { alpha, beta, mu } => write!(f, "homotopy {alpha} {beta} {mu}"),
            Command::RelativeDouble { germ, hom } => write!(f, "relative-double {germ} {hom}"),
            Command::Verify(v) => {
                write!(f, "verify {} --trials {} --seed {}", v.id, v.trials, v.seed)?;
                if let Some(d) = &v.replay_dir {
                    write!(f, " --replay-dir {d}")?;
                }
                Ok(())
            }
        }
    }
}

/// Whitespace-separated words with their byte offsets.
fn words(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

/// Byte offset of a 1-based line and column in `text`.
fn offset_of(text: &str, line: usize, col: usize) -> usize {
    let mut l = 1;
    let mut c = 1;
    for (i, ch) in text.char_indices() {
        if l == line && c == col {
            return i;
        }
        if ch == '\n' {
            l += 1;
            c = 1;
        } else {
            c += 1;
        }
    }
    text.len()
}

type ParseResult<T> = std::result::Result<T, (usize, String)>;

impl Command {
    /// Parses command text such as `member M (x, y)`. Errors carry a byte offset into `text`.
    pub fn parse(session: &Session, text: &str) -> ParseResult<Command> {
        let ws = words(text);
        let Some(&(_, verb)) = ws.first() else {
            return Err((0, "empty command".into()));
        };
        let arity = |n: usize, usage: &str| -> ParseResult<()> {
            if ws.len() == n + 1 {
                Ok(())
            } else {
                let at = ws.get(n + 1).map_or(text.len(), |w| w.0);
                Err((at, format!("usage: {usage}")))
            }
        };
        let name = |k: usize, kinds: &[&str]| -> ParseResult<String> {
            let (at, n) = ws[k];
            match session.base_of(n) {
                None => Err((at, format!("unresolved name `{n}`"))),
                Some((v, _)) if !kinds.is_empty() && !kinds.contains(&v.kind()) => Err((
                    at,
                    format!("`{n}` is a {}, expected {}", v.kind(), kinds.join(" or ")),
                )),
                Some(_) => Ok(n.to_string()),
            }
        };
        const MODULE: &[&str] = &["module"];
        const HOM: &[&str] = &["hom"];
        Ok(match verb {
            "double" => {
                arity(1, "double <name>")?;
                Command::Double(name(1, &[])?)
            }
            "member" => {
                if ws.len() < 3 {
                    return Err((text.len(), "usage: member <module> <element>".into()));
                }
                let module = name(1, MODULE)?;
                let (ring, rank) = module_shape(session, &module);
                let start = ws[2].0;
                let elem_text = &text[start..];
                let mut cur = Cursor::new(elem_text).map_err(|e| syntax(elem_text, start, e))?;
                let element =
                    parse_element(&mut cur, &ring).map_err(|e| syntax(elem_text, start, e))?;
                if !cur.at_eof() {
                    let t = cur.peek();
                    let at = start + offset_of(elem_text, t.line, t.col);
                    return Err((at, "unexpected text after the element".into()));
                }
                if element.rank() != rank {
                    return Err((
                        start,
                        format!(
                            "element {element} has rank {}, `{module}` lives in rank {rank}",
                            element.rank()
                        ),
                    ));
                }
                Command::Member { module, element }
            }
            "eq" => {
                arity(2, "eq <module> <module>")?;
                Command::Eq(name(1, MODULE)?, name(2, MODULE)?)
            }
            "kernel" => {
                arity(1, "kernel <hom>")?;
                Command::Kernel(name(1, HOM)?)
            }
            "image" => {
                arity(1, "image <hom>")?;
                Command::Image(name(1, HOM)?)
            }
            "colength" => {
                arity(2, "colength <submodule> <module>")?;
                Command::Colength(name(1, MODULE)?, name(2, MODULE)?)
            }
            "rank" => {
                arity(1, "rank <module>")?;
                Command::Rank(name(1, MODULE)?)
            }
            "exact" => {
                arity(1, "exact <complex>")?;
                Command::Exact(name(1, &["complex"])?)
            }
            "homotopy" => {
                arity(3, "homotopy <chain map> <chain map> <degree-one map>")?;
                Command::Homotopy {
                    alpha: name(1, &["chain map"])?,
                    beta: name(2, &["chain map"])?,
                    mu: name(3, &["degree-one map"])?,
                }
            }
            "relative-double" => {
                arity(2, "relative-double <germ> <hom>")?;
                Command::RelativeDouble {
                    germ: name(1, &["germ"])?,
                    hom: name(2, HOM)?,
                }
            }
            "verify" => Command::Verify(parse_verify(&ws, text.len())?),
            other => {
                return Err((
                    ws[0].0,
                    format!(
                        "unknown command `{other}` (expected double, member, eq, kernel, image, \
                         colength, rank, exact, homotopy, relative-double or verify)"
                    ),
                ))
            }
        })
    }
}

fn syntax(text: &str, start: usize, e: CoreError) -> (usize, String) {
    match e {
        CoreError::Syntax { line, col, msg } => (start + offset_of(text, line, col), msg),
        other => (start, other.to_string()),
    }
}

/// Ring and rank of a module binding, doubling the ring once per `_D`.
fn module_shape(session: &Session, name: &str) -> (Arc<PolyRing>, usize) {
    let Some((Value::Module { module, .. }, depth)) = session.base_of(name) else {
        unreachable!("checked to be a module");
    };
    let mut ring = module.ring().clone();
    for _ in 0..depth {
        ring = DoubleContext::new(&ring)
            .expect("doubled names are fresh")
            .doubled()
            .clone();
    }
    (ring, module.rank() << depth)
}

fn parse_verify(ws: &[(usize, &str)], end: usize) -> ParseResult<VerifyArgs> {
    let usage = "usage: verify <property> [--trials N] [--seed S] [--format text] [--replay-dir DIR]";
    let Some(&(at, id)) = ws.get(1) else {
        return Err((end, usage.into()));
    };
    if find(id).is_none() {
        return Err((at, format!("unknown property id `{id}`")));
    }
    let mut args = VerifyArgs {
        id: id.to_string(),
        trials: DEFAULT_TRIALS,
        seed: 0,
        replay_dir: None,
    };
    let mut k = 2;
    while k < ws.len() {
        let (at, flag) = ws[k];
        let Some(&(vat, value)) = ws.get(k + 1) else {
            return Err((end, format!("`{flag}` needs a value")));
        };
        let bad = |what: &str| (vat, format!("`{flag}` expects {what}, found `{value}`"));
        match flag {
            "--trials" => args.trials = value.parse().map_err(|_| bad("a count"))?,
            "--seed" => args.seed = value.parse().map_err(|_| bad("an unsigned integer"))?,
            "--format" if value == "text" => {}
            "--format" => return Err(bad("`text`")),
            "--replay-dir" => args.replay_dir = Some(value.to_string()),
            _ => return Err((at, format!("unknown option `{flag}`; {usage}"))),
        }
        k += 2;
    }
    Ok(args)
}

/// Text produced by a command. `ok` is false when a property suite reported failures;
/// `notes` go to standard error.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub ok: bool,
    pub notes: Vec<String>,
}

impl Output {
    fn text(text: impl Into<String>) -> Self {
        Output {
            text: text.into(),
            ok: true,
            notes: Vec::new(),
        }
    }
}

fn get(session: &Session, name: &str) -> CliResult<Value> {
    match session.resolve(name) {
        Ok(Some(v)) => Ok(v),
        Ok(None) => Err(CliError::Usage(format!("unresolved name `{name}`"))),
        Err(e) => Err(CliError::binding(name, e)),
    }
}

fn module(session: &Session, name: &str) -> CliResult<(Submodule, String)> {
    match get(session, name)? {
        Value::Module { module, ring } => Ok((module, ring)),
        other => Err(CliError::Usage(format!(
            "`{name}` is a {}, not a module",
            other.kind()
        ))),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn ring_line(name: &str, ring: &PolyRing) -> String {
    let mut s = format!("ring {name} vars");
    for v in ring.var_names() {
        s.push(' ');
        s.push_str(v);
    }
    s.push(';');
    s
}

fn module_line(name: &str, ring: &str, rank: usize, gens: &[String]) -> String {
    format!("module {name} in {ring}^{rank} gens [{}];", gens.join(", "))
}

fn hom_line(name: &str, domain: &str, codomain: &str, a: &Matrix) -> String {
    format!("hom {name} : {domain} -> {codomain} matrix {a};")
}

fn bool_text(b: bool) -> String {
    b.to_string()
}

/// `module X_D ...` with the generators written in structured form.
fn doubled_module_line(name: &str, m: &Submodule, ring: &str) -> CliResult<String> {
    let ctx = DoubleContext::new(m.ring()).map_err(|e| CliError::binding(name, e))?;
    let d = double_module(&ctx, m).map_err(|e| CliError::binding(name, e))?;
    Ok(module_line(
        &format!("{name}_D"),
        &format!("{ring}_D"),
        2 * m.rank(),
        &d.structured_generators(),
    ))
}

fn degree_suffix(i: i64) -> String {
    if i < 0 {
        format!("m{}", -i)
    } else {
        i.to_string()
    }
}

fn complex_ring_name(session: &Session, modules: &[String]) -> CliResult<String> {
    match modules.first() {
        Some(m) => Ok(module(session, m)?.1),
        None => Err(CliError::Usage("empty complex".into())),
    }
}

fn double_text(session: &Session, name: &str) -> CliResult<String> {
    let value = get(session, name)?;
    let dn = format!("{name}_D");
    let doubled = || value.double().map_err(|e| CliError::binding(name, e));
    let mut lines = Vec::new();
    match &value {
        Value::Ring(_) => {
            let Value::Ring(r) = doubled()? else { unreachable!() };
            lines.push(ring_line(&dn, &r));
        }
        Value::Module { module, ring } => {
            let ctx = DoubleContext::new(module.ring()).map_err(|e| CliError::binding(name, e))?;
            lines.push(ring_line(&format!("{ring}_D"), ctx.doubled()));
            lines.push(doubled_module_line(name, module, ring)?);
        }
        Value::Hom { .. } => {
            let Value::Hom {
                hom,
                domain,
                codomain,
            } = doubled()?
            else {
                unreachable!()
            };
            lines.push(hom_line(&dn, &domain, &codomain, hom.matrix()));
        }
        Value::RelativeHom { .. } => {
            let Value::RelativeHom {
                hom,
                germ,
                domain,
                codomain,
            } = doubled()?
            else {
                unreachable!()
            };
            lines.push(relative_line(&dn, &germ, &domain, &codomain, hom.images()));
        }
        Value::Germ { .. } => {
            let Value::Germ {
                germ,
                source,
                target,
            } = doubled()?
            else {
                unreachable!()
            };
            lines.push(germ_line(&dn, &source, &target, &germ));
        }
        Value::Complex {
            complex,
            modules,
            diffs,
        } => {
            let ring = complex_ring_name(session, modules)?;
            let ctx = DoubleContext::new(complex.ring()).map_err(|e| CliError::binding(name, e))?;
            lines.push(ring_line(&format!("{ring}_D"), ctx.doubled()));
            let mut seen: Vec<&String> = Vec::new();
            for m in modules {
                if !seen.contains(&m) {
                    seen.push(m);
                    let (sub, r) = module(session, m)?;
                    lines.push(doubled_module_line(m, &sub, &r)?);
                }
            }
            let Value::Complex {
                complex: cd,
                modules: md,
                diffs: dd,
            } = doubled()?
            else {
                unreachable!()
            };
            for (k, d) in dd.iter().enumerate() {
                let i = cd.high() - k as i64;
                if !diffs[..k].contains(&diffs[k]) {
                    lines.push(hom_line(d, &md[k], &md[k + 1], cd.differential(i).matrix()));
                }
            }
            lines.push(format!(
                "complex {dn} modules [{}] diffs [{}] low {};",
                md.join(", "),
                dd.join(", "),
                cd.low()
            ));
        }
        Value::ChainMap { source, target, .. } | Value::DegreeOne { source, target, .. } => {
            let (shift, keyword) = match value {
                Value::ChainMap { .. } => (0, "chainmap"),
                _ => (1, "degree1"),
            };
            let src_mods = complex_names(session, source)?;
            let tgt_mods = complex_names(session, target)?;
            let (src, tgt, at): (ChainComplex, ChainComplex, Box<dyn Fn(i64) -> Matrix>) =
                match doubled()? {
                    Value::ChainMap { map, .. } => (
                        map.source().clone(),
                        map.target().clone(),
                        Box::new(move |i| map.at(i).matrix().clone()),
                    ),
                    Value::DegreeOne { map, .. } => (
                        map.source().clone(),
                        map.target().clone(),
                        Box::new(move |i| map.at(i).matrix().clone()),
                    ),
                    _ => unreachable!(),
                };
            let mut entries = Vec::new();
            for i in src.degrees().rev() {
                let a = at(i);
                if a.is_zero() {
                    entries.push("0".to_string());
                    continue;
                }
                let j = i + shift;
                let dom = &src_mods[(src.high() - i) as usize];
                let cod = &tgt_mods[(tgt.high() - j) as usize];
                let hn = format!("{dn}_{}", degree_suffix(i));
                lines.push(hom_line(&hn, &format!("{dom}_D"), &format!("{cod}_D"), &a));
                entries.push(hn);
            }
            lines.push(format!(
                "{keyword} {dn} : {source}_D -> {target}_D maps [{}];",
                entries.join(", ")
            ));
        }
    }
    Ok(lines.join("\n"))
}

fn complex_names(session: &Session, name: &str) -> CliResult<Vec<String>> {
    match get(session, name)? {
        Value::Complex { modules, .. } => Ok(modules),
        other => Err(CliError::Usage(format!(
            "`{name}` is a {}, not a complex",
            other.kind()
        ))),
    }
}

fn relative_line(
    name: &str,
    germ: &str,
    domain: &str,
    codomain: &str,
    images: &[ModuleElement],
) -> String {
    format!(
        "hom {name} : {domain} -> {codomain} over {germ} images [{}];",
        join(images)
    )
}

fn germ_line(name: &str, source: &str, target: &str, germ: &RingMorphism) -> String {
    format!(
        "germ {name} : {source} -> {target} sends [{}];",
        join(germ.images())
    )
}

fn kernel_or_image(session: &Session, name: &str, kernel: bool) -> CliResult<String> {
    let (hom, side) = match get(session, name)? {
        Value::Hom {
            hom,
            domain,
            codomain,
        } => (hom, if kernel { domain } else { codomain }),
        other => {
            return Err(CliError::Usage(format!(
                "`{name}` is a {}; kernels and images need a matrix hom",
                other.kind()
            )))
        }
    };
    let ring = module(session, &side)?.1;
    let (label, m) = if kernel {
        ("ker", hom.kernel())
    } else {
        ("im", hom.image())
    };
    let gens: Vec<String> = m.generators().iter().map(|g| g.to_string()).collect();
    Ok(module_line(
        &format!("{label}_{name}"),
        &ring,
        m.rank(),
        &gens,
    ))
}

fn chain_map(session: &Session, name: &str) -> CliResult<doublekit::complex::ChainMap> {
    match get(session, name)? {
        Value::ChainMap { map, .. } => Ok(map),
        other => Err(CliError::Usage(format!(
            "`{name}` is a {}, not a chain map",
            other.kind()
        ))),
    }
}

fn relative_double_text(session: &Session, germ_name: &str, hom_name: &str) -> CliResult<String> {
    let germ = match get(session, germ_name)? {
        Value::Germ { germ, .. } => germ,
        other => {
            return Err(CliError::Usage(format!(
                "`{germ_name}` is a {}, not a germ",
                other.kind()
            )))
        }
    };
    let (phi, domain, codomain) = match get(session, hom_name)? {
        Value::RelativeHom {
            hom,
            germ: g,
            domain,
            codomain,
        } => {
            if g != germ_name {
                return Err(CliError::Usage(format!(
                    "`{hom_name}` is defined over `{g}`, not over `{germ_name}`"
                )));
            }
            (hom, domain, codomain)
        }
        Value::Hom {
            hom,
            domain,
            codomain,
        } => {
            if germ != RingMorphism::identity(hom.domain().ring()) {
                return Err(CliError::Usage(format!(
                    "`{hom_name}` is a matrix hom; it can only be doubled relative to an identity germ"
                )));
            }
            let phi = GeneratorImageHom::from_matrix_hom(&hom)
                .map_err(|e| CliError::binding(hom_name, e))?;
            (phi, domain, codomain)
        }
        other => {
            return Err(CliError::Usage(format!(
                "`{hom_name}` is a {}, not a hom",
                other.kind()
            )))
        }
    };
    let d = relative_double_hom(&phi).map_err(|e| CliError::binding(hom_name, e))?;
    Ok(format!(
        "{}\nwell-defined: {}",
        relative_line(
            &format!("{hom_name}_D"),
            &format!("{germ_name}_D"),
            &format!("{domain}_D"),
            &format!("{codomain}_D"),
            d.assignments(),
        ),
        d.is_well_defined()
    ))
}

fn verify(args: &VerifyArgs) -> CliResult<Output> {
    let spec = InstanceSpec::with_seed(args.seed);
    let report =
        run_property(&args.id, &spec, args.trials).map_err(|e| CliError::binding(&args.id, e))?;
    let mut out = Output::text(report.to_string());
    out.ok = report.passed();
    if !report.failures.is_empty() {
        let dir = PathBuf::from(args.replay_dir.as_deref().unwrap_or(DEFAULT_REPLAY_DIR));
        std::fs::create_dir_all(&dir).map_err(|e| CliError::Io {
            path: dir.display().to_string(),
            msg: e.to_string(),
        })?;
        for f in &report.failures {
            let path = dir.join(format!("{}-seed{}.dk", args.id, f.seed));
            let text = format!("# {} seed {}: {}\n{}", args.id, f.seed, f.detail, f.replay);
            std::fs::write(&path, text).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                msg: e.to_string(),
            })?;
            out.notes.push(format!("replay written to {}", path.display()));
        }
    }
    Ok(out)
}

/// Runs one command. Failures of the underlying operation name the binding involved.
pub fn exec_command(session: &Session, cmd: &Command) -> CliResult<Output> {
    let text = match cmd {
        Command::Double(x) => double_text(session, x)?,
        Command::Member { module: m, element } => {
            let (sub, _) = module(session, m)?;
            bool_text(sub.contains(element).map_err(|e| CliError::binding(m, e))?)
        }
        Command::Eq(a, b) => {
            let (ma, _) = module(session, a)?;
            let (mb, _) = module(session, b)?;
            bool_text(
                ma.module_eq(&mb)
                    .map_err(|e| CliError::binding(format!("{a}, {b}"), e))?,
            )
        }
        Command::Kernel(f) => kernel_or_image(session, f, true)?,
        Command::Image(f) => kernel_or_image(session, f, false)?,
        Command::Colength(m, n) => {
            let (mm, _) = module(session, m)?;
            let (nn, _) = module(session, n)?;
            colength(&mm, &nn)
                .map_err(|e| CliError::binding(format!("{m}, {n}"), e))?
                .to_string()
        }
        Command::Rank(m) => generic_rank(&module(session, m)?.0).to_string(),
        Command::Exact(c) => {
            let complex = match get(session, c)? {
                Value::Complex { complex, .. } => complex,
                other => {
                    return Err(CliError::Usage(format!(
                        "`{c}` is a {}, not a complex",
                        other.kind()
                    )))
                }
            };
            let mut lines = Vec::new();
            let mut all = true;
            for i in complex.degrees().rev() {
                let e = complex
                    .is_exact_at(i)
                    .map_err(|e| CliError::binding(c, e))?;
                all &= e;
                lines.push(format!("exact at {i}: {e}"));
            }
            lines.push(format!("exact: {all}"));
            lines.join("\n")
        }
        Command::Homotopy { alpha, beta, mu } => {
            let a = chain_map(session, alpha)?;
            let b = chain_map(session, beta)?;
            let m = match get(session, mu)? {
                Value::DegreeOne { map, .. } => map,
                other => {
                    return Err(CliError::Usage(format!(
                        "`{mu}` is a {}, not a degree-one map",
                        other.kind()
                    )))
                }
            };
            bool_text(
                doublekit::complex::is_homotopy(&a, &b, &m)
                    .map_err(|e| CliError::binding(format!("{alpha}, {beta}, {mu}"), e))?,
            )
        }
        Command::RelativeDouble { germ, hom } => relative_double_text(session, germ, hom)?,
        Command::Verify(args) => return verify(args),
    };
    Ok(Output::text(text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn session() -> Session {
        Session::parse("ring R vars x;\nmodule M in R^1 gens [(x)];\n").unwrap()
    }

    fn run(s: &Session, text: &str) -> String {
        let cmd = Command::parse(s, text).unwrap();
        exec_command(s, &cmd).unwrap().text
    }

    #[test]
    fn worked_example() {
        let s = session();
        assert_eq!(
            run(&s, "double M"),
            "ring R_D vars x y;\nmodule M_D in R_D^2 gens [(x, y), (0, (y - x)*y)];"
        );
        assert_eq!(run(&s, "member M_D (x^2, y^2)"), "true");
        assert_eq!(run(&s, "member M_D (x, x)"), "false");
        assert_eq!(run(&s, "rank M_D"), "2");
        assert_eq!(run(&s, "eq M M"), "true");
    }

    #[test]
    fn parse_errors_point_at_words() {
        let s = session();
        let e = Command::parse(&s, "member Q (x)").unwrap_err();
        assert_eq!(e.0, 7);
        let e = Command::parse(&s, "member M (x, 1)").unwrap_err();
        assert!(e.1.contains("rank 2"), "{}", e.1);
        let e = Command::parse(&s, "member M (x +)").unwrap_err();
        assert!(e.0 >= 9, "{e:?}");
        assert!(Command::parse(&s, "rank R").unwrap_err().1.contains("is a ring"));
        assert!(Command::parse(&s, "verify NOPE").is_err());
        assert!(Command::parse(&s, "verify P3.4-a --format json").is_err());
        assert!(Command::parse(&s, "frob M").is_err());
        assert!(Command::parse(&s, "double M extra").is_err());
    }

    #[test]
    fn display_reparses() {
        let s = session();
        for text in [
            "double M_D",
            "member M_D (x^2, y^2)",
            "verify P3.4-a --trials 3 --seed 9",
            "colength M M",
        ] {
            let c = Command::parse(&s, text).unwrap();
            assert_eq!(Command::parse(&s, &c.to_string()).unwrap(), c);
        }
    }
}
