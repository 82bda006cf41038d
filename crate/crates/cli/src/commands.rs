use std::path::Path;

use ydlong_core::exactlin::LinMap;
use ydlong_core::format::{self, Document};
use ydlong_core::grpalg::{check_graded, closed_form_index_report, graded_braiding, oracle_report, GradedBimodule};
use ydlong_core::hopf::validate_hopf;
use ydlong_core::involution::check_iso_pair;
use ydlong_core::report::{CheckResult, ValidationReport};
use ydlong_core::tcat::{braiding, check_hexagons, check_phi_compat, left_dual, right_dual, Side};
use ydlong_core::ydl::{full_report, YdlModule};
use ydlong_core::{Error, Result};

pub fn load(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path)?;
    format::parse(&text)
}

/// A module, with its graded form when the file held one.
pub struct Loaded {
    pub module: YdlModule,
    pub graded: Option<GradedBimodule>,
}

pub fn load_module(path: &Path) -> Result<Loaded> {
    match load(path)? {
        Document::Module(module) => Ok(Loaded { module, graded: None }),
        Document::Graded(g) => Ok(Loaded {
            module: g.to_generic()?,
            graded: Some(g),
        }),
        d => Err(Error::Parse {
            line: 1,
            message: format!("expected a module or graded file, found a {} file", d.kind()),
        }),
    }
}

pub fn check_hopf(path: &Path) -> Result<(String, Vec<ValidationReport>)> {
    match load(path)? {
        Document::Hopf(h) => Ok((h.field().to_string(), vec![validate_hopf(&h)])),
        d => Err(wrong_kind("hopf", &d)),
    }
}

pub fn check_module(path: &Path) -> Result<(String, Vec<ValidationReport>)> {
    match load(path)? {
        Document::Module(m) => Ok((m.field().to_string(), vec![full_report(&m)])),
        d => Err(wrong_kind("module", &d)),
    }
}

pub fn check_graded_file(path: &Path) -> Result<(String, Vec<ValidationReport>)> {
    match load(path)? {
        Document::Graded(g) => {
            let generic = g.to_generic()?;
            Ok((
                g.field().to_string(),
                vec![
                    check_graded(&g),
                    full_report(&generic),
                    oracle_report(&g, &g)?,
                    closed_form_index_report(&g, &g)?,
                ],
            ))
        }
        d => Err(wrong_kind("graded", &d)),
    }
}

fn wrong_kind(expected: &str, got: &Document) -> Error {
    Error::Parse {
        line: 1,
        message: format!("expected a {expected} file, found a {} file", got.kind()),
    }
}

pub struct BraidRequest<'a> {
    pub m: &'a Path,
    pub n: &'a Path,
    pub hexagons: Option<&'a Path>,
    pub phi: Option<&'a Path>,
    pub inverse: bool,
}

pub fn braid(req: &BraidRequest) -> Result<(String, Vec<ValidationReport>)> {
    let m = load_module(req.m)?;
    let n = load_module(req.n)?;
    let c = braiding(&m.module, &n.module)?;
    let mut sections = vec![c.check(&m.module, &n.module)?];

    let mut shape = ValidationReport::new("braiding shape");
    let flip = LinMap::flip(m.module.field(), m.module.dim(), n.module.dim());
    shape.push(CheckResult::from_bool("braiding is a permutation matrix", is_permutation(&c.map), "").informational());
    shape.push(CheckResult::from_bool("braiding is the flip", c.map == flip, "").informational());
    sections.push(shape);

    if req.inverse {
        let mut inv = ValidationReport::new("explicit inverse");
        inv.push(CheckResult::matrices_equal(
            "explicit inverse equals the matrix inverse",
            c.inverse.matrix(),
            c.map.inverse()?.matrix(),
        ));
        sections.push(inv);
    }
    if let Some(p) = req.hexagons {
        let p = load_module(p)?;
        sections.push(check_hexagons(&m.module, &n.module, &p.module)?);
    }
    if let Some(p) = req.phi {
        let p = load_module(p)?;
        let mut r = ValidationReport::new("conjugation invariance");
        r.push(check_phi_compat(&p.module, &m.module, &n.module)?);
        sections.push(r);
    }
    if let (Some(gm), Some(gn)) = (&m.graded, &n.graded) {
        let mut r = oracle_report(gm, gn)?;
        r.subject = "graded fast path".into();
        let gb = graded_braiding(gm, gn)?;
        r.push(CheckResult::from_bool(
            "braiding maps components to components",
            gb.component_targets(gm, gn).is_ok(),
            "a pair of components is spread over several targets",
        ));
        sections.push(r);
    }
    Ok((m.module.field().to_string(), sections))
}

fn is_permutation(map: &LinMap) -> bool {
    let m = map.matrix();
    let (rows, cols) = m.shape();
    let mut row_hits = vec![0usize; rows];
    let mut col_hits = vec![0usize; cols];
    for (r, c, v) in m.nonzeros() {
        if !v.is_one() {
            return false;
        }
        row_hits[r] += 1;
        col_hits[c] += 1;
    }
    rows == cols && row_hits.iter().chain(&col_hits).all(|&h| h == 1)
}

pub fn dual(path: &Path, side: Side) -> Result<(String, Vec<ValidationReport>)> {
    let m = load_module(path)?.module;
    let d = match side {
        Side::Left => left_dual(&m)?,
        Side::Right => right_dual(&m)?,
    };
    let mut r = d.check(&m)?;
    r.push(CheckResult::from_bool("dual equals the module", d.dual == m, "").informational());
    Ok((m.field().to_string(), vec![r]))
}

pub fn iso(path: &Path, quadruple: &Path) -> Result<(String, Vec<ValidationReport>)> {
    let m = load_module(path)?.module;
    let q = match load(quadruple)? {
        Document::Quadruple(q) => q,
        d => return Err(wrong_kind("quadruple", &d)),
    };
    Ok((m.field().to_string(), vec![check_iso_pair(&m, &q)?]))
}
