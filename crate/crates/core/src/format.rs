//! The line-oriented text format for algebras, modules, quadruples in
//! involution and graded modules.
//!
//! Every file starts with a field header (`field rational` or
//! `field prime 7`) followed by one section keyword. Structure maps are
//! written as sparse tensors:
//!
//! ```text
//! map mult 4 4 -> 4
//! 0 0 0 1
//! 0 1 1 1
//! ...
//! end
//! ```
//!
//! The header gives the factor dimensions of the domain and the codomain;
//! each entry lists the domain indices, then the codomain indices, then the
//! coefficient (`n` or `n/d`). Flat indices put the last factor fastest.
//! `#` starts a comment. Names and labels must not contain whitespace or
//! `#`; the writer replaces those with `_`.
//!
//! Hopf algebra:
//!
//! ```text
//! field rational
//! hopf sweedler
//! labels 1 g x gx
//! map mult 4 4 -> 4 ... end
//! map unit -> 4 ... end
//! map comult 4 -> 4 4 ... end
//! map counit 4 -> ... end
//! map antipode 4 -> 4 ... end
//! ```
//!
//! Module: `module <dim>`, then `algebra h1 <name>` with a Hopf body closed
//! by `end algebra` (or `algebra h2 = h1`), the component maps `alpha`,
//! `beta`, `gamma`, `delta`, and the structure maps `left_action`
//! (`n1 d -> d`), `right_action` (`d n2 -> d`), `left_coaction`
//! (`d -> n1 d`) and `right_coaction` (`d -> d n2`).
//!
//! Quadruple in involution: `quadruple`, the two algebras, then `f1`, `f2`
//! as functionals (`n ->`) and `g1`, `g2` as elements (`-> n`).
//!
//! Graded module: `graded`, the groups (`group g1 S3`, `group g1 C4`,
//! `group g1 trivial`, or `group g1 table <n>` followed by a `labels` line
//! and `n` rows of indices), the component as `perm alpha ...` lines,
//! `component <g> <h> <count>` runs giving the degree of each basis vector
//! in order, and `block left|right <element> <g> <h>` blocks of local
//! `row col value` entries. Omitted blocks are zero.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::autgroup::AutQuadruple;
use crate::error::{Error, Result};
use crate::exactlin::{FieldCtx, LinMap, Matrix, Scalar};
use crate::grpalg::{grading_shift, Blocks, Degree, GradedBimodule, GradedSetting, GroupQuadruple, GroupTable};
use crate::hopf::{same_algebra, HopfAlgebra, HopfAutomorphism, HopfData};
use crate::ydl::{InvolutionQuadruple, YdlModule};

/// Any object the format can hold. Short-lived, so the variants are not boxed.
#[derive(Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Document {
    Hopf(HopfAlgebra),
    Module(YdlModule),
    Quadruple(InvolutionQuadruple),
    Graded(GradedBimodule),
}

impl std::fmt::Debug for Document {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Document::{}", self.kind())
    }
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Hopf(_) => "hopf",
            Document::Module(_) => "module",
            Document::Quadruple(_) => "quadruple",
            Document::Graded(_) => "graded",
        }
    }
}

pub fn write(doc: &Document) -> String {
    match doc {
        Document::Hopf(h) => write_hopf(h),
        Document::Module(m) => write_module(m),
        Document::Quadruple(q) => write_quadruple(q),
        Document::Graded(g) => write_graded(g),
    }
}

pub fn parse(text: &str) -> Result<Document> {
    let mut r = Reader::new(text);
    let field = r.header()?;
    let (line, toks) = r.peek_required("a section keyword")?;
    match toks[0].as_str() {
        "hopf" => Ok(Document::Hopf(hopf_section(&mut r, field)?)),
        "module" => Ok(Document::Module(module_section(&mut r, field)?)),
        "quadruple" => Ok(Document::Quadruple(quadruple_section(&mut r, field)?)),
        "graded" => Ok(Document::Graded(graded_section(&mut r, field)?)),
        other => Err(parse_err(line, format!("unknown section `{other}`"))),
    }
}

pub fn parse_hopf(text: &str) -> Result<HopfAlgebra> {
    match parse(text)? {
        Document::Hopf(h) => Ok(h),
        d => Err(wrong_kind("hopf", &d)),
    }
}

pub fn parse_module(text: &str) -> Result<YdlModule> {
    match parse(text)? {
        Document::Module(m) => Ok(m),
        d => Err(wrong_kind("module", &d)),
    }
}

pub fn parse_quadruple(text: &str) -> Result<InvolutionQuadruple> {
    match parse(text)? {
        Document::Quadruple(q) => Ok(q),
        d => Err(wrong_kind("quadruple", &d)),
    }
}

pub fn parse_graded(text: &str) -> Result<GradedBimodule> {
    match parse(text)? {
        Document::Graded(g) => Ok(g),
        d => Err(wrong_kind("graded", &d)),
    }
}

fn wrong_kind(expected: &str, got: &Document) -> Error {
    parse_err(1, format!("expected a {expected} file, found a {} file", got.kind()))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Attaches a line number to a constructor failure.
fn at<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } | Error::At { .. } => e,
        e => Error::At {
            line,
            source: Box::new(e),
        },
    })
}

// ---------------------------------------------------------------- writing

fn field_header(out: &mut String, f: FieldCtx) {
    match f {
        FieldCtx::Rational => out.push_str("field rational\n"),
        FieldCtx::Prime(p) => writeln!(out, "field prime {p}").unwrap(),
    }
}

fn word(s: &str) -> String {
    let w: String = s
        .chars()
        .map(|c| if c.is_whitespace() || c == '#' { '_' } else { c })
        .collect();
    if w.is_empty() {
        "_".into()
    } else {
        w
    }
}

fn unflatten(mut k: usize, dims: &[usize], out: &mut Vec<usize>) {
    let start = out.len();
    for &d in dims.iter().rev() {
        out.push(k % d);
        k /= d;
    }
    out[start..].reverse();
}

fn write_map(out: &mut String, name: &str, domain: &[usize], codomain: &[usize], m: &Matrix) {
    let dims = |d: &[usize]| d.iter().map(|x| format!(" {x}")).collect::<String>();
    writeln!(out, "map {name}{} ->{}", dims(domain), dims(codomain)).unwrap();
    let mut entries: Vec<(usize, usize, &Scalar)> = m.nonzeros().collect();
    entries.sort_by_key(|&(r, c, _)| (c, r));
    let mut idx = Vec::new();
    for (r, c, v) in entries {
        idx.clear();
        unflatten(c, domain, &mut idx);
        unflatten(r, codomain, &mut idx);
        for i in &idx {
            write!(out, "{i} ").unwrap();
        }
        writeln!(out, "{v}").unwrap();
    }
    out.push_str("end\n");
}

fn write_hopf_body(out: &mut String, h: &HopfAlgebra) {
    let n = h.dim();
    let labels: Vec<String> = h.labels().iter().map(|l| word(l)).collect();
    writeln!(out, "labels {}", labels.join(" ")).unwrap();
    write_map(out, "mult", &[n, n], &[n], h.mult().matrix());
    write_map(out, "unit", &[], &[n], h.unit().matrix());
    write_map(out, "comult", &[n], &[n, n], h.comult().matrix());
    write_map(out, "counit", &[n], &[], h.counit().matrix());
    write_map(out, "antipode", &[n], &[n], h.antipode().matrix());
}

pub fn write_hopf(h: &HopfAlgebra) -> String {
    let mut out = String::new();
    field_header(&mut out, h.field());
    writeln!(out, "hopf {}", word(h.name())).unwrap();
    write_hopf_body(&mut out, h);
    out
}

fn write_algebras(out: &mut String, h1: &Arc<HopfAlgebra>, h2: &Arc<HopfAlgebra>) {
    writeln!(out, "algebra h1 {}", word(h1.name())).unwrap();
    write_hopf_body(out, h1);
    out.push_str("end algebra\n");
    if same_algebra(h1, h2) {
        out.push_str("algebra h2 = h1\n");
    } else {
        writeln!(out, "algebra h2 {}", word(h2.name())).unwrap();
        write_hopf_body(out, h2);
        out.push_str("end algebra\n");
    }
}

pub fn write_module(m: &YdlModule) -> String {
    let mut out = String::new();
    let (h1, h2) = (m.h1(), m.h2());
    let (n1, n2, d) = (h1.dim(), h2.dim(), m.dim());
    field_header(&mut out, m.field());
    writeln!(out, "module {d}").unwrap();
    write_algebras(&mut out, h1, h2);
    let x = m.component();
    write_map(&mut out, "alpha", &[n1], &[n1], x.alpha().map().matrix());
    write_map(&mut out, "beta", &[n1], &[n1], x.beta().map().matrix());
    write_map(&mut out, "gamma", &[n2], &[n2], x.gamma().map().matrix());
    write_map(&mut out, "delta", &[n2], &[n2], x.delta().map().matrix());
    write_map(&mut out, "left_action", &[n1, d], &[d], m.left_action().matrix());
    write_map(&mut out, "right_action", &[d, n2], &[d], m.right_action().matrix());
    write_map(&mut out, "left_coaction", &[d], &[n1, d], m.left_coaction().matrix());
    write_map(&mut out, "right_coaction", &[d], &[d, n2], m.right_coaction().matrix());
    out
}

fn row_matrix(f: FieldCtx, v: &[Scalar]) -> Matrix {
    Matrix::from_fn(f, 1, v.len(), |_, c| v[c].clone())
}

fn column_matrix(f: FieldCtx, v: &[Scalar]) -> Matrix {
    Matrix::from_fn(f, v.len(), 1, |r, _| v[r].clone())
}

pub fn write_quadruple(q: &InvolutionQuadruple) -> String {
    let mut out = String::new();
    let (h1, h2) = (q.h1(), q.h2());
    let f = h1.field();
    field_header(&mut out, f);
    out.push_str("quadruple\n");
    write_algebras(&mut out, h1, h2);
    write_map(&mut out, "f1", &[h1.dim()], &[], &row_matrix(f, &q.f1));
    write_map(&mut out, "g1", &[], &[h1.dim()], &column_matrix(f, &q.g1));
    write_map(&mut out, "f2", &[h2.dim()], &[], &row_matrix(f, &q.f2));
    write_map(&mut out, "g2", &[], &[h2.dim()], &column_matrix(f, &q.g2));
    out
}

fn write_group(out: &mut String, name: &str, g: &GroupTable) {
    writeln!(out, "group {name} table {}", g.order()).unwrap();
    let labels: Vec<String> = g.labels().iter().map(|l| word(l)).collect();
    writeln!(out, "labels {}", labels.join(" ")).unwrap();
    for row in g.table() {
        let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
}

fn write_perm(out: &mut String, name: &str, p: &[usize]) {
    let p: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    writeln!(out, "perm {name} {}", p.join(" ")).unwrap();
}

pub fn write_graded(m: &GradedBimodule) -> String {
    let mut out = String::new();
    let s = m.setting();
    field_header(&mut out, m.field());
    out.push_str("graded\n");
    write_group(&mut out, "g1", s.g1());
    write_group(&mut out, "g2", s.g2());
    let x = m.component();
    write_perm(&mut out, "alpha", &x.alpha);
    write_perm(&mut out, "beta", &x.beta);
    write_perm(&mut out, "gamma", &x.gamma);
    write_perm(&mut out, "delta", &x.delta);
    let mut i = 0;
    let degrees = m.degrees();
    while i < degrees.len() {
        let run = degrees[i..].iter().take_while(|&&d| d == degrees[i]).count();
        writeln!(out, "component {} {} {run}", degrees[i].0, degrees[i].1).unwrap();
        i += run;
    }
    for (side, blocks) in [("left", m.left_blocks()), ("right", m.right_blocks())] {
        for (el, fam) in blocks.iter().enumerate() {
            for (src, block) in fam {
                if block.is_zero() {
                    continue;
                }
                writeln!(out, "block {side} {el} {} {}", src.0, src.1).unwrap();
                for (r, c, v) in block.nonzeros() {
                    writeln!(out, "{r} {c} {v}").unwrap();
                }
                out.push_str("end\n");
            }
        }
    }
    out
}

// ---------------------------------------------------------------- reading

struct Reader {
    lines: Vec<(usize, Vec<String>)>,
    pos: usize,
    last_line: usize,
}

impl Reader {
    fn new(text: &str) -> Self {
        let lines: Vec<(usize, Vec<String>)> = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let l = l.split('#').next().unwrap_or("");
                let toks: Vec<String> = l.split_whitespace().map(str::to_string).collect();
                (!toks.is_empty()).then_some((i + 1, toks))
            })
            .collect();
        let last_line = text.lines().count().max(1);
        Reader {
            lines,
            pos: 0,
            last_line,
        }
    }

    fn peek(&self) -> Option<(usize, &[String])> {
        self.lines.get(self.pos).map(|(l, t)| (*l, t.as_slice()))
    }

    fn peek_required(&self, what: &str) -> Result<(usize, &[String])> {
        self.peek()
            .ok_or_else(|| parse_err(self.last_line, format!("unexpected end of file, expected {what}")))
    }

    fn next_required(&mut self, what: &str) -> Result<(usize, Vec<String>)> {
        let (l, t) = self.peek_required(what)?;
        let item = (l, t.to_vec());
        self.pos += 1;
        Ok(item)
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some((_, t)) if t[0] == kw)
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(usize, Vec<String>)> {
        let (l, t) = self.next_required(&format!("`{kw}`"))?;
        if t[0] != kw {
            return Err(parse_err(l, format!("expected `{kw}`, found `{}`", t[0])));
        }
        Ok((l, t))
    }

    fn header(&mut self) -> Result<FieldCtx> {
        let (l, t) = self.expect_keyword("field")?;
        match t.get(1).map(String::as_str) {
            Some("rational") if t.len() == 2 => Ok(FieldCtx::Rational),
            Some("prime") if t.len() == 3 => {
                let p: u64 = num(l, &t[2])?;
                at(l, FieldCtx::prime(p))
            }
            _ => Err(parse_err(l, "expected `field rational` or `field prime <p>`")),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some((l, t)) => Err(parse_err(l, format!("unexpected `{}`", t[0]))),
        }
    }
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a number, found `{tok}`")))
}

fn scalar(line: usize, f: FieldCtx, tok: &str) -> Result<Scalar> {
    f.parse_scalar(tok)
        .map_err(|_| parse_err(line, format!("malformed scalar `{tok}`")))
}

/// A parsed `map` block: its header line, declared dimensions and matrix.
struct MapBlock {
    line: usize,
    domain: Vec<usize>,
    codomain: Vec<usize>,
    matrix: Matrix,
}

impl MapBlock {
    /// Checks the declared dimensions against the expected ones.
    fn expect(self, name: &str, domain: &[usize], codomain: &[usize]) -> Result<Matrix> {
        if self.domain != domain || self.codomain != codomain {
            return Err(Error::At {
                line: self.line,
                source: Box::new(Error::Dimension(format!(
                    "map {name} is declared {:?} -> {:?}, expected {:?} -> {:?}",
                    self.domain, self.codomain, domain, codomain
                ))),
            });
        }
        Ok(self.matrix)
    }
}

fn read_map(r: &mut Reader, f: FieldCtx, name: &str) -> Result<MapBlock> {
    let (line, t) = r.expect_keyword("map")?;
    match t.get(1) {
        Some(n) if n == name => {}
        Some(n) => return Err(parse_err(line, format!("expected map `{name}`, found `{n}`"))),
        None => return Err(parse_err(line, "map without a name")),
    }
    let arrow = t
        .iter()
        .position(|s| s == "->")
        .ok_or_else(|| parse_err(line, "map header needs `->`"))?;
    let dims = |toks: &[String]| -> Result<Vec<usize>> {
        toks.iter()
            .map(|s| {
                let d: usize = num(line, s)?;
                if d == 0 {
                    return Err(parse_err(line, "dimensions must be positive"));
                }
                Ok(d)
            })
            .collect()
    };
    let domain = dims(&t[2..arrow])?;
    let codomain = dims(&t[arrow + 1..])?;
    let (cols, rows) = (domain.iter().product::<usize>(), codomain.iter().product::<usize>());
    let arity = domain.len() + codomain.len();
    let mut matrix = Matrix::zeros(f, rows, cols);
    let mut seen = BTreeSet::new();
    loop {
        let (l, e) = r.next_required("an entry or `end`")?;
        if e[0] == "end" {
            if e.len() != 1 {
                return Err(parse_err(l, "`end` takes no arguments here"));
            }
            break;
        }
        if e.len() != arity + 1 {
            return Err(parse_err(l, format!("expected {} indices and a value", arity)));
        }
        let flat = |ds: &[usize], toks: &[String]| -> Result<usize> {
            let mut k = 0;
            for (d, tok) in ds.iter().zip(toks) {
                let i: usize = num(l, tok)?;
                if i >= *d {
                    return Err(parse_err(l, format!("index {i} out of range for dimension {d}")));
                }
                k = k * d + i;
            }
            Ok(k)
        };
        let c = flat(&domain, &e[..domain.len()])?;
        let rr = flat(&codomain, &e[domain.len()..arity])?;
        if !seen.insert((rr, c)) {
            return Err(parse_err(l, "duplicate entry"));
        }
        matrix.set(rr, c, scalar(l, f, &e[arity])?);
    }
    Ok(MapBlock {
        line,
        domain,
        codomain,
        matrix,
    })
}

fn hopf_body(r: &mut Reader, f: FieldCtx, line: usize, name: String) -> Result<HopfAlgebra> {
    let (ll, labels) = r.expect_keyword("labels")?;
    let labels: Vec<String> = labels[1..].to_vec();
    let n = labels.len();
    if n == 0 {
        return Err(parse_err(ll, "an algebra needs at least one basis label"));
    }
    let mult = read_map(r, f, "mult")?.expect("mult", &[n, n], &[n])?;
    let unit = read_map(r, f, "unit")?.expect("unit", &[], &[n])?;
    let comult = read_map(r, f, "comult")?.expect("comult", &[n], &[n, n])?;
    let counit = read_map(r, f, "counit")?.expect("counit", &[n], &[])?;
    let antipode = read_map(r, f, "antipode")?.expect("antipode", &[n], &[n])?;
    at(
        line,
        HopfAlgebra::new(HopfData {
            name,
            labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
        }),
    )
}

fn hopf_section(r: &mut Reader, f: FieldCtx) -> Result<HopfAlgebra> {
    let (l, t) = r.expect_keyword("hopf")?;
    if t.len() != 2 {
        return Err(parse_err(l, "expected `hopf <name>`"));
    }
    let h = hopf_body(r, f, l, t[1].clone())?;
    r.finish()?;
    Ok(h)
}

fn algebras(r: &mut Reader, f: FieldCtx) -> Result<(Arc<HopfAlgebra>, Arc<HopfAlgebra>)> {
    let mut read_one = |which: &str, first: Option<&Arc<HopfAlgebra>>| -> Result<Arc<HopfAlgebra>> {
        let (l, t) = r.expect_keyword("algebra")?;
        if t.get(1).map(String::as_str) != Some(which) {
            return Err(parse_err(l, format!("expected `algebra {which} ...`")));
        }
        if let (Some(h1), 4) = (first, t.len()) {
            if t[2] == "=" && t[3] == "h1" {
                return Ok(h1.clone());
            }
        }
        if t.len() != 3 {
            return Err(parse_err(l, format!("expected `algebra {which} <name>`")));
        }
        let h = hopf_body(r, f, l, t[2].clone())?;
        let (le, e) = r.expect_keyword("end")?;
        if e.get(1).map(String::as_str) != Some("algebra") || e.len() != 2 {
            return Err(parse_err(le, "expected `end algebra`"));
        }
        Ok(Arc::new(h))
    };
    let h1 = read_one("h1", None)?;
    let h2 = read_one("h2", Some(&h1))?;
    Ok((h1, h2))
}

fn automorphism(r: &mut Reader, f: FieldCtx, name: &str, h: &Arc<HopfAlgebra>) -> Result<HopfAutomorphism> {
    let block = read_map(r, f, name)?;
    let line = block.line;
    let m = block.expect(name, &[h.dim()], &[h.dim()])?;
    at(line, HopfAutomorphism::new(h.clone(), LinMap::new(m)))
}

fn module_section(r: &mut Reader, f: FieldCtx) -> Result<YdlModule> {
    let (l, t) = r.expect_keyword("module")?;
    if t.len() != 2 {
        return Err(parse_err(l, "expected `module <dim>`"));
    }
    let d: usize = num(l, &t[1])?;
    let (h1, h2) = algebras(r, f)?;
    let (n1, n2) = (h1.dim(), h2.dim());
    let alpha = automorphism(r, f, "alpha", &h1)?;
    let beta = automorphism(r, f, "beta", &h1)?;
    let gamma = automorphism(r, f, "gamma", &h2)?;
    let delta = automorphism(r, f, "delta", &h2)?;
    let component = at(l, AutQuadruple::from_maps(alpha, beta, gamma, delta))?;
    let la = read_map(r, f, "left_action")?.expect("left_action", &[n1, d], &[d])?;
    let ra = read_map(r, f, "right_action")?.expect("right_action", &[d, n2], &[d])?;
    let lc = read_map(r, f, "left_coaction")?.expect("left_coaction", &[d], &[n1, d])?;
    let rc = read_map(r, f, "right_coaction")?.expect("right_coaction", &[d], &[d, n2])?;
    r.finish()?;
    at(l, YdlModule::new(component, la.into(), ra.into(), lc.into(), rc.into()))
}

fn quadruple_section(r: &mut Reader, f: FieldCtx) -> Result<InvolutionQuadruple> {
    let (l, t) = r.expect_keyword("quadruple")?;
    if t.len() != 1 {
        return Err(parse_err(l, "`quadruple` takes no arguments"));
    }
    let (h1, h2) = algebras(r, f)?;
    let (n1, n2) = (h1.dim(), h2.dim());
    let f1 = read_map(r, f, "f1")?.expect("f1", &[n1], &[])?.row(0).to_vec();
    let g1 = read_map(r, f, "g1")?.expect("g1", &[], &[n1])?;
    let f2 = read_map(r, f, "f2")?.expect("f2", &[n2], &[])?.row(0).to_vec();
    let g2 = read_map(r, f, "g2")?.expect("g2", &[], &[n2])?;
    r.finish()?;
    let col = |m: &Matrix| (0..m.shape().0).map(|i| m.get(i, 0).clone()).collect::<Vec<_>>();
    at(l, InvolutionQuadruple::new(h1, h2, f1, col(&g1), f2, col(&g2)))
}

fn group(r: &mut Reader, which: &str) -> Result<GroupTable> {
    let (l, t) = r.expect_keyword("group")?;
    if t.get(1).map(String::as_str) != Some(which) || t.len() < 3 {
        return Err(parse_err(l, format!("expected `group {which} <name>`")));
    }
    match (t[2].as_str(), t.len()) {
        ("S3", 3) => Ok(GroupTable::symmetric3()),
        ("trivial", 3) => Ok(GroupTable::trivial()),
        ("table", 4) => {
            let n: usize = num(l, &t[3])?;
            let (ll, labels) = r.expect_keyword("labels")?;
            if labels.len() != n + 1 {
                return Err(parse_err(ll, format!("expected {n} labels")));
            }
            let mut rows = Vec::with_capacity(n);
            for _ in 0..n {
                let (lr, row) = r.next_required("a table row")?;
                if row.len() != n {
                    return Err(parse_err(lr, format!("expected {n} entries")));
                }
                rows.push(row.iter().map(|s| num(lr, s)).collect::<Result<Vec<usize>>>()?);
            }
            at(l, GroupTable::new(labels[1..].to_vec(), rows))
        }
        (name, 3) if name.starts_with('C') => match name[1..].parse::<usize>() {
            Ok(n) if n > 0 => Ok(GroupTable::cyclic(n)),
            _ => Err(parse_err(l, format!("unknown group `{name}`"))),
        },
        _ => Err(parse_err(l, format!("unknown group `{}`", t[2..].join(" ")))),
    }
}

fn perm(r: &mut Reader, name: &str, g: &GroupTable) -> Result<(usize, Vec<usize>)> {
    let (l, t) = r.expect_keyword("perm")?;
    if t.get(1).map(String::as_str) != Some(name) {
        return Err(parse_err(l, format!("expected `perm {name} ...`")));
    }
    let p = t[2..].iter().map(|s| num(l, s)).collect::<Result<Vec<usize>>>()?;
    if p.len() != g.order() {
        return Err(Error::At {
            line: l,
            source: Box::new(Error::Dimension(format!(
                "perm {name} has {} entries for a group of order {}",
                p.len(),
                g.order()
            ))),
        });
    }
    Ok((l, p))
}

fn graded_section(r: &mut Reader, f: FieldCtx) -> Result<GradedBimodule> {
    let (l, t) = r.expect_keyword("graded")?;
    if t.len() != 1 {
        return Err(parse_err(l, "`graded` takes no arguments"));
    }
    let g1 = group(r, "g1")?;
    let g2 = group(r, "g2")?;
    let setting = GradedSetting::new(g1, g2, f);
    let (lp, alpha) = perm(r, "alpha", setting.g1())?;
    let (_, beta) = perm(r, "beta", setting.g1())?;
    let (_, gamma) = perm(r, "gamma", setting.g2())?;
    let (_, delta) = perm(r, "delta", setting.g2())?;
    let x = at(lp, GroupQuadruple::new(&setting, alpha, beta, gamma, delta))?;

    let mut degrees: Vec<Degree> = Vec::new();
    while r.at_keyword("component") {
        let (lc, c) = r.next_required("a component")?;
        if c.len() != 4 {
            return Err(parse_err(lc, "expected `component <g> <h> <count>`"));
        }
        let (g, h, k): (usize, usize, usize) = (num(lc, &c[1])?, num(lc, &c[2])?, num(lc, &c[3])?);
        if g >= setting.g1().order() || h >= setting.g2().order() {
            return Err(Error::At {
                line: lc,
                source: Box::new(Error::Grading(format!("degree ({g}, {h}) out of range"))),
            });
        }
        degrees.extend(std::iter::repeat_n((g, h), k));
    }
    let mut sizes: BTreeMap<Degree, usize> = BTreeMap::new();
    for d in &degrees {
        *sizes.entry(*d).or_default() += 1;
    }
    let shape = |left: bool, el: usize, d: Degree| -> (usize, usize) {
        let t = if left {
            (
                grading_shift(&setting, &x, el, d.0, setting.g2().identity(), d.1).0,
                d.1,
            )
        } else {
            (
                d.0,
                grading_shift(&setting, &x, setting.g1().identity(), d.0, el, d.1).1,
            )
        };
        (sizes.get(&t).copied().unwrap_or(0), sizes[&d])
    };
    let zeros = |left: bool, n: usize| -> Blocks {
        (0..n)
            .map(|el| {
                sizes
                    .keys()
                    .map(|&d| {
                        let (rows, cols) = shape(left, el, d);
                        (d, Matrix::zeros(f, rows, cols))
                    })
                    .collect()
            })
            .collect()
    };
    let mut left = zeros(true, setting.g1().order());
    let mut right = zeros(false, setting.g2().order());
    let mut seen = BTreeSet::new();
    while r.at_keyword("block") {
        let (lb, b) = r.next_required("a block")?;
        if b.len() != 5 || (b[1] != "left" && b[1] != "right") {
            return Err(parse_err(lb, "expected `block left|right <element> <g> <h>`"));
        }
        let is_left = b[1] == "left";
        let (el, g, h): (usize, usize, usize) = (num(lb, &b[2])?, num(lb, &b[3])?, num(lb, &b[4])?);
        let fam = if is_left { &mut left } else { &mut right };
        let Some(block) = fam.get_mut(el).and_then(|m| m.get_mut(&(g, h))) else {
            return Err(Error::At {
                line: lb,
                source: Box::new(Error::Grading(format!(
                    "no {} block for element {el} at ({g}, {h})",
                    b[1]
                ))),
            });
        };
        if !seen.insert((is_left, el, g, h)) {
            return Err(parse_err(lb, "duplicate block"));
        }
        loop {
            let (le, e) = r.next_required("an entry or `end`")?;
            if e[0] == "end" && e.len() == 1 {
                break;
            }
            if e.len() != 3 {
                return Err(parse_err(le, "expected `row col value`"));
            }
            let (row, col): (usize, usize) = (num(le, &e[0])?, num(le, &e[1])?);
            let (rows, cols) = block.shape();
            if row >= rows || col >= cols {
                return Err(Error::At {
                    line: le,
                    source: Box::new(Error::Grading(format!(
                        "entry ({row}, {col}) outside the {rows}×{cols} block"
                    ))),
                });
            }
            block.set(row, col, scalar(le, f, &e[2])?);
        }
    }
    r.finish()?;
    at(l, GradedBimodule::new(setting, x, degrees, left, right))
}
