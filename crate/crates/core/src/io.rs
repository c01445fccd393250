//! JSON file formats.
//!
//! Every `parse_*` function reports malformed input with the line and column
//! where parsing or validation stopped. Every `render_*` output parses back
//! to an equal value.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cochain::{Cochain, CoordKey, Part};
use crate::cohom::DeformationGenerator;
use crate::compat::{CompatRepresentation, CompatibleLy};
use crate::exact::{Matrix, Rational};
use crate::lya::{default_basis_names, BilinearMap, LinearMap, LyAlgebra, TrilinearMap};
use crate::rb::{CompatPreLy, PreLy};
use crate::rep::Representation;

/// Malformed input with its location (1-based line and column).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    line: usize,
    column: usize,
    message: String,
}

impl FormatError {
    pub fn line(&self) -> usize {
        self.line
    }

    pub fn column(&self) -> usize {
        self.column
    }

    pub fn message(&self) -> &str {
        &self.message
    }
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at line {} column {}", self.message, self.line, self.column)
    }
}

impl std::error::Error for FormatError {}

/// Position of the last non-whitespace character, for errors found only
/// after the whole document was read.
fn end_position(text: &str) -> (usize, usize) {
    let trimmed = text.trim_end();
    let line = trimmed.lines().count().max(1);
    let column = trimmed.lines().last().map_or(0, |l| l.chars().count()).max(1);
    (line, column)
}

fn located(text: &str, e: serde_json::Error) -> FormatError {
    let (line, column) = if e.line() == 0 { end_position(text) } else { (e.line(), e.column()) };
    let full = e.to_string();
    let message = match full.rfind(" at line ") {
        Some(i) if e.line() != 0 => full[..i].to_string(),
        _ => full,
    };
    FormatError { line, column, message }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|e| located(text, e))
}

fn render<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn no_duplicates<K: Ord + fmt::Debug>(what: &str, keys: impl IntoIterator<Item = K>) -> Result<(), String> {
    let mut seen = BTreeSet::new();
    for k in keys {
        if let Some(k) = seen.replace(k) {
            return Err(format!("duplicate {what} entry {k:?}"));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, try_from = "RawBilinearEntry")]
pub struct BilinearEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub v: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, try_from = "RawTrilinearEntry")]
pub struct TrilinearEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub v: Rational,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBilinearEntry {
    i: usize,
    j: usize,
    k: usize,
    v: Rational,
}

impl TryFrom<RawBilinearEntry> for BilinearEntry {
    type Error = String;
    fn try_from(e: RawBilinearEntry) -> Result<Self, String> {
        if e.i >= e.j {
            return Err(format!("bracket entry ({}, {}) must satisfy i < j", e.i, e.j));
        }
        Ok(BilinearEntry { i: e.i, j: e.j, k: e.k, v: e.v })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTrilinearEntry {
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    v: Rational,
}

impl TryFrom<RawTrilinearEntry> for TrilinearEntry {
    type Error = String;
    fn try_from(e: RawTrilinearEntry) -> Result<Self, String> {
        if e.i >= e.j {
            return Err(format!("bracket entry ({}, {}) must satisfy i < j", e.i, e.j));
        }
        Ok(TrilinearEntry { i: e.i, j: e.j, k: e.k, l: e.l, v: e.v })
    }
}

fn build_bilinear(dim: usize, entries: &[BilinearEntry]) -> Result<BilinearMap, String> {
    no_duplicates("bilinear", entries.iter().map(|e| (e.i, e.j, e.k)))?;
    BilinearMap::from_entries(dim, entries.iter().map(|e| (e.i, e.j, e.k, e.v.clone()))).map_err(|e| e.to_string())
}

fn build_trilinear(dim: usize, entries: &[TrilinearEntry]) -> Result<TrilinearMap, String> {
    no_duplicates("trilinear", entries.iter().map(|e| (e.i, e.j, e.k, e.l)))?;
    TrilinearMap::from_entries(dim, entries.iter().map(|e| (e.i, e.j, e.k, e.l, e.v.clone()))).map_err(|e| e.to_string())
}

fn bilinear_entries(b: &BilinearMap) -> Vec<BilinearEntry> {
    b.upper_entries().into_iter().map(|(i, j, k, v)| BilinearEntry { i, j, k, v }).collect()
}

fn trilinear_entries(t: &TrilinearMap) -> Vec<TrilinearEntry> {
    t.upper_entries().into_iter().map(|(i, j, k, l, v)| TrilinearEntry { i, j, k, l, v }).collect()
}

fn names_or_default(dim: usize, basis: Option<Vec<String>>) -> Result<Vec<String>, String> {
    match basis {
        None => Ok(default_basis_names(dim)),
        Some(b) if b.len() == dim => {
            no_duplicates("basis name", b.iter())?;
            Ok(b)
        }
        Some(b) => Err(format!("basis lists {} names for dimension {dim}", b.len())),
    }
}

fn rendered_names(names: &[String]) -> Option<Vec<String>> {
    (names != default_basis_names(names.len()).as_slice()).then(|| names.to_vec())
}

// ---------------------------------------------------------------- algebra

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    #[serde(default)]
    pub bilinear: Vec<BilinearEntry>,
    #[serde(default)]
    pub trilinear: Vec<TrilinearEntry>,
}

impl StructureDoc {
    fn build(&self, names: Vec<String>) -> Result<LyAlgebra, String> {
        let dim = names.len();
        let pi = build_bilinear(dim, &self.bilinear)?;
        let omega = build_trilinear(dim, &self.trilinear)?;
        LyAlgebra::with_names(names, pi, omega).map_err(|e| e.to_string())
    }

    fn of(a: &LyAlgebra) -> Self {
        StructureDoc { bilinear: bilinear_entries(a.pi()), trilinear: trilinear_entries(a.omega()) }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraRaw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    #[serde(default)]
    bilinear: Vec<BilinearEntry>,
    #[serde(default)]
    trilinear: Vec<TrilinearEntry>,
}

#[derive(Deserialize)]
#[serde(try_from = "AlgebraRaw")]
struct AlgebraDoc(LyAlgebra);

impl TryFrom<AlgebraRaw> for AlgebraDoc {
    type Error = String;
    fn try_from(r: AlgebraRaw) -> Result<Self, String> {
        let names = names_or_default(r.dim, r.basis)?;
        StructureDoc { bilinear: r.bilinear, trilinear: r.trilinear }.build(names).map(AlgebraDoc)
    }
}

fn algebra_raw(a: &LyAlgebra) -> AlgebraRaw {
    let s = StructureDoc::of(a);
    AlgebraRaw {
        description: None,
        dim: a.dim(),
        basis: rendered_names(a.basis_names()),
        bilinear: s.bilinear,
        trilinear: s.trilinear,
    }
}

pub fn parse_algebra(text: &str) -> Result<LyAlgebra, FormatError> {
    Ok(parse::<AlgebraDoc>(text)?.0)
}

pub fn render_algebra(a: &LyAlgebra) -> String {
    render(&algebra_raw(a))
}

// ------------------------------------------------------------- compatible

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CompatibleRaw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    /// Free-form record of how the pair was built; not interpreted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generated_from: Option<serde_json::Value>,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    structure1: StructureDoc,
    structure2: StructureDoc,
}

#[derive(Deserialize)]
#[serde(try_from = "CompatibleRaw")]
struct CompatibleDoc(CompatibleLy);

impl TryFrom<CompatibleRaw> for CompatibleDoc {
    type Error = String;
    fn try_from(r: CompatibleRaw) -> Result<Self, String> {
        let names = names_or_default(r.dim, r.basis)?;
        let a = r.structure1.build(names.clone())?;
        let b = r.structure2.build(names)?;
        CompatibleLy::new(a, b).map(CompatibleDoc).map_err(|e| e.to_string())
    }
}

fn compatible_raw(c: &CompatibleLy) -> CompatibleRaw {
    CompatibleRaw {
        description: None,
        generated_from: None,
        dim: c.dim(),
        basis: rendered_names(c.first().basis_names()),
        structure1: StructureDoc::of(c.first()),
        structure2: StructureDoc::of(c.second()),
    }
}

pub fn parse_compatible(text: &str) -> Result<CompatibleLy, FormatError> {
    Ok(parse::<CompatibleDoc>(text)?.0)
}

pub fn render_compatible(c: &CompatibleLy) -> String {
    render(&compatible_raw(c))
}

/// Whether a document carries two structures (`structure1`/`structure2`).
pub fn is_compatible_document(text: &str) -> bool {
    serde_json::from_str::<serde_json::Value>(text)
        .map(|v| v.get("structure1").is_some())
        .unwrap_or(false)
}

// ----------------------------------------------------------------- matrix

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixRaw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Rational>>,
}

#[derive(Deserialize)]
#[serde(try_from = "MatrixRaw")]
struct MatrixDoc(Matrix);

fn matrix_from_rows(rows: usize, cols: usize, entries: Vec<Vec<Rational>>) -> Result<Matrix, String> {
    if entries.len() != rows {
        return Err(format!("matrix has {} rows, header says {rows}", entries.len()));
    }
    if let Some((i, r)) = entries.iter().enumerate().find(|(_, r)| r.len() != cols) {
        return Err(format!("matrix row {i} has {} entries, header says {cols}", r.len()));
    }
    Matrix::new(rows, cols, entries.into_iter().flatten().collect()).map_err(|e| e.to_string())
}

fn square_matrix(n: usize, entries: Vec<Vec<Rational>>) -> Result<Matrix, String> {
    matrix_from_rows(n, n, entries)
}

impl TryFrom<MatrixRaw> for MatrixDoc {
    type Error = String;
    fn try_from(r: MatrixRaw) -> Result<Self, String> {
        matrix_from_rows(r.rows, r.cols, r.entries).map(MatrixDoc)
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix, FormatError> {
    Ok(parse::<MatrixDoc>(text)?.0)
}

pub fn render_matrix(m: &Matrix) -> String {
    render(&MatrixRaw { description: None, rows: m.rows(), cols: m.cols(), entries: m.to_rows() })
}

pub fn parse_linear_map(text: &str) -> Result<LinearMap, FormatError> {
    parse_matrix(text).map(LinearMap::new)
}

// --------------------------------------------------------- representation

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RhoEntry {
    pub i: usize,
    pub matrix: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuEntry {
    pub i: usize,
    pub j: usize,
    pub matrix: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    #[serde(default)]
    pub rho: Vec<RhoEntry>,
    #[serde(default)]
    pub mu: Vec<MuEntry>,
}

impl ActionDoc {
    fn build(&self, alg_dim: usize, v_dim: usize) -> Result<Representation, String> {
        no_duplicates("rho", self.rho.iter().map(|e| e.i))?;
        no_duplicates("mu", self.mu.iter().map(|e| (e.i, e.j)))?;
        let mut rep = Representation::zero(alg_dim, v_dim);
        for e in &self.rho {
            if e.i >= alg_dim {
                return Err(format!("rho index {} out of range for dimension {alg_dim}", e.i));
            }
            rep.set_rho(e.i, square_matrix(v_dim, e.matrix.clone())?);
        }
        for e in &self.mu {
            if e.i >= alg_dim || e.j >= alg_dim {
                return Err(format!("mu index ({}, {}) out of range for dimension {alg_dim}", e.i, e.j));
            }
            rep.set_mu(e.i, e.j, square_matrix(v_dim, e.matrix.clone())?);
        }
        Ok(rep)
    }

    fn of(rep: &Representation) -> Self {
        let n = rep.alg_dim();
        let rho = (0..n)
            .filter(|&i| !rep.rho(i).is_zero())
            .map(|i| RhoEntry { i, matrix: rep.rho(i).to_rows() })
            .collect();
        let mut mu = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !rep.mu(i, j).is_zero() {
                    mu.push(MuEntry { i, j, matrix: rep.mu(i, j).to_rows() });
                }
            }
        }
        ActionDoc { rho, mu }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationRaw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    #[serde(default)]
    bilinear: Vec<BilinearEntry>,
    #[serde(default)]
    trilinear: Vec<TrilinearEntry>,
    v_dim: usize,
    #[serde(default)]
    rho: Vec<RhoEntry>,
    #[serde(default)]
    mu: Vec<MuEntry>,
}

#[derive(Deserialize)]
#[serde(try_from = "RepresentationRaw")]
struct RepresentationDoc(LyAlgebra, Representation);

impl TryFrom<RepresentationRaw> for RepresentationDoc {
    type Error = String;
    fn try_from(r: RepresentationRaw) -> Result<Self, String> {
        let names = names_or_default(r.dim, r.basis)?;
        let a = StructureDoc { bilinear: r.bilinear, trilinear: r.trilinear }.build(names)?;
        let rep = ActionDoc { rho: r.rho, mu: r.mu }.build(r.dim, r.v_dim)?;
        Ok(RepresentationDoc(a, rep))
    }
}

/// An algebra together with a representation of it.
pub fn parse_representation(text: &str) -> Result<(LyAlgebra, Representation), FormatError> {
    let d = parse::<RepresentationDoc>(text)?;
    Ok((d.0, d.1))
}

pub fn render_representation(a: &LyAlgebra, rep: &Representation) -> String {
    let s = StructureDoc::of(a);
    let act = ActionDoc::of(rep);
    render(&RepresentationRaw {
        description: None,
        dim: a.dim(),
        basis: rendered_names(a.basis_names()),
        bilinear: s.bilinear,
        trilinear: s.trilinear,
        v_dim: rep.v_dim(),
        rho: act.rho,
        mu: act.mu,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CompatRepresentationRaw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    structure1: StructureDoc,
    structure2: StructureDoc,
    v_dim: usize,
    rep1: ActionDoc,
    rep2: ActionDoc,
}

#[derive(Deserialize)]
#[serde(try_from = "CompatRepresentationRaw")]
struct CompatRepresentationDoc(CompatibleLy, CompatRepresentation);

impl TryFrom<CompatRepresentationRaw> for CompatRepresentationDoc {
    type Error = String;
    fn try_from(r: CompatRepresentationRaw) -> Result<Self, String> {
        let names = names_or_default(r.dim, r.basis)?;
        let c = CompatibleLy::new(r.structure1.build(names.clone())?, r.structure2.build(names)?)
            .map_err(|e| e.to_string())?;
        let rep = CompatRepresentation::new(r.rep1.build(r.dim, r.v_dim)?, r.rep2.build(r.dim, r.v_dim)?)
            .map_err(|e| e.to_string())?;
        Ok(CompatRepresentationDoc(c, rep))
    }
}

/// A compatible pair with one representation per structure (`rep1`, `rep2`).
pub fn parse_compat_representation(text: &str) -> Result<(CompatibleLy, CompatRepresentation), FormatError> {
    let d = parse::<CompatRepresentationDoc>(text)?;
    Ok((d.0, d.1))
}

pub fn render_compat_representation(c: &CompatibleLy, r: &CompatRepresentation) -> String {
    render(&CompatRepresentationRaw {
        description: None,
        dim: c.dim(),
        basis: rendered_names(c.first().basis_names()),
        structure1: StructureDoc::of(c.first()),
        structure2: StructureDoc::of(c.second()),
        v_dim: r.v_dim(),
        rep1: ActionDoc::of(&r.first),
        rep2: ActionDoc::of(&r.second),
    })
}

// ---------------------------------------------------------------- cochain

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FEntry {
    pub pairs: Vec<(usize, usize)>,
    pub k: usize,
    pub v: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GEntry {
    pub pairs: Vec<(usize, usize)>,
    pub z: usize,
    pub k: usize,
    pub v: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CochainRaw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    value_dim: Option<usize>,
    degree: usize,
    #[serde(default)]
    f: Vec<FEntry>,
    #[serde(default)]
    g: Vec<GEntry>,
}

impl CochainRaw {
    fn build(&self, dim: usize, value_dim: usize) -> Result<Cochain, String> {
        if let Some(d) = self.dim {
            if d != dim {
                return Err(format!("cochain dim {d} does not match {dim}"));
            }
        }
        let vd = self.value_dim.unwrap_or(value_dim);
        let mut c = Cochain::zero(dim, self.degree, vd);
        let mut seen = BTreeSet::new();
        let keys = self
            .f
            .iter()
            .map(|e| (CoordKey { part: Part::F, pairs: e.pairs.clone(), z: None, k: e.k }, &e.v))
            .chain(self.g.iter().map(|e| (CoordKey { part: Part::G, pairs: e.pairs.clone(), z: Some(e.z), k: e.k }, &e.v)));
        for (key, v) in keys {
            let coord = c.coord_of(&key).ok_or_else(|| format!("cochain entry {key:?} out of shape"))?;
            if !seen.insert(coord) {
                return Err(format!("duplicate cochain entry {key:?}"));
            }
            c.set(coord, v.clone());
        }
        Ok(c)
    }
}

/// Parses a cochain; `dim` and `value_dim` are used when the file omits them.
pub fn parse_cochain(text: &str, dim: usize, value_dim: usize) -> Result<Cochain, FormatError> {
    #[derive(Deserialize)]
    #[serde(transparent)]
    struct Doc(CochainRaw);
    let raw = parse::<Doc>(text)?.0;
    let d = raw.dim.unwrap_or(dim);
    raw.build(d, value_dim).map_err(|message| {
        let (line, column) = end_position(text);
        FormatError { line, column, message }
    })
}

pub fn render_cochain(c: &Cochain) -> String {
    let mut f = Vec::new();
    let mut g = Vec::new();
    for (key, v) in c.nonzero_entries() {
        match key.part {
            Part::F => f.push(FEntry { pairs: key.pairs, k: key.k, v }),
            Part::G => g.push(GEntry { pairs: key.pairs, z: key.z.expect("g entries carry z"), k: key.k, v }),
        }
    }
    render(&CochainRaw {
        description: None,
        dim: Some(c.dim()),
        value_dim: Some(c.value_dim()),
        degree: c.degree(),
        f,
        g,
    })
}

// ---------------------------------------------------------------- pre-LYA

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StarEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub v: Rational,
}

/// Entry of an unconstrained four-index table.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub v: Rational,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreStructureDoc {
    #[serde(default)]
    pub star: Vec<StarEntry>,
    #[serde(default)]
    pub triple: Vec<TripleEntry>,
}

impl PreStructureDoc {
    fn build(&self, dim: usize) -> Result<PreLy, String> {
        no_duplicates("star", self.star.iter().map(|e| (e.i, e.j, e.k)))?;
        no_duplicates("triple", self.triple.iter().map(|e| (e.i, e.j, e.k, e.l)))?;
        let mut star = vec![Rational::zero(); dim.pow(3)];
        for e in &self.star {
            if [e.i, e.j, e.k].iter().any(|&x| x >= dim) {
                return Err(format!("star entry ({}, {}, {}) out of range for dimension {dim}", e.i, e.j, e.k));
            }
            star[(e.i * dim + e.j) * dim + e.k] = e.v.clone();
        }
        let mut triple = vec![Rational::zero(); dim.pow(4)];
        for e in &self.triple {
            if [e.i, e.j, e.k, e.l].iter().any(|&x| x >= dim) {
                return Err(format!(
                    "triple entry ({}, {}, {}, {}) out of range for dimension {dim}",
                    e.i, e.j, e.k, e.l
                ));
            }
            triple[((e.i * dim + e.j) * dim + e.k) * dim + e.l] = e.v.clone();
        }
        PreLy::new(dim, star, triple).map_err(|e| e.to_string())
    }

    fn of(p: &PreLy) -> Self {
        let d = p.dim();
        let mut star = Vec::new();
        let mut triple = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = p.star_get(i, j, k);
                    if !v.is_zero() {
                        star.push(StarEntry { i, j, k, v: v.clone() });
                    }
                    for l in 0..d {
                        let v = p.triple_get(i, j, k, l);
                        if !v.is_zero() {
                            triple.push(TripleEntry { i, j, k, l, v: v.clone() });
                        }
                    }
                }
            }
        }
        PreStructureDoc { star, triple }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PreRaw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    dim: usize,
    #[serde(default)]
    star: Vec<StarEntry>,
    #[serde(default)]
    triple: Vec<TripleEntry>,
}

#[derive(Deserialize)]
#[serde(try_from = "PreRaw")]
struct PreDoc(PreLy);

impl TryFrom<PreRaw> for PreDoc {
    type Error = String;
    fn try_from(r: PreRaw) -> Result<Self, String> {
        PreStructureDoc { star: r.star, triple: r.triple }.build(r.dim).map(PreDoc)
    }
}

pub fn parse_pre_lya(text: &str) -> Result<PreLy, FormatError> {
    Ok(parse::<PreDoc>(text)?.0)
}

pub fn render_pre_lya(p: &PreLy) -> String {
    let s = PreStructureDoc::of(p);
    render(&PreRaw { description: None, dim: p.dim(), star: s.star, triple: s.triple })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CompatPreRaw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    dim: usize,
    structure1: PreStructureDoc,
    structure2: PreStructureDoc,
}

#[derive(Deserialize)]
#[serde(try_from = "CompatPreRaw")]
struct CompatPreDoc(CompatPreLy);

impl TryFrom<CompatPreRaw> for CompatPreDoc {
    type Error = String;
    fn try_from(r: CompatPreRaw) -> Result<Self, String> {
        CompatPreLy::new(r.structure1.build(r.dim)?, r.structure2.build(r.dim)?)
            .map(CompatPreDoc)
            .map_err(|e| e.to_string())
    }
}

pub fn parse_compat_pre_lya(text: &str) -> Result<CompatPreLy, FormatError> {
    Ok(parse::<CompatPreDoc>(text)?.0)
}

pub fn render_compat_pre_lya(cp: &CompatPreLy) -> String {
    render(&CompatPreRaw {
        description: None,
        dim: cp.dim(),
        structure1: PreStructureDoc::of(&cp.first),
        structure2: PreStructureDoc::of(&cp.second),
    })
}

// -------------------------------------------------------------- generator

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorRaw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    description: Option<String>,
    dim: usize,
    #[serde(default)]
    mu1: Vec<BilinearEntry>,
    #[serde(default)]
    lambda1: Vec<TrilinearEntry>,
    #[serde(default)]
    mu2: Vec<BilinearEntry>,
    #[serde(default)]
    lambda2: Vec<TrilinearEntry>,
}

#[derive(Deserialize)]
#[serde(try_from = "GeneratorRaw")]
struct GeneratorDoc(DeformationGenerator);

impl TryFrom<GeneratorRaw> for GeneratorDoc {
    type Error = String;
    fn try_from(r: GeneratorRaw) -> Result<Self, String> {
        Ok(GeneratorDoc(DeformationGenerator {
            mu1: build_bilinear(r.dim, &r.mu1)?,
            lambda1: build_trilinear(r.dim, &r.lambda1)?,
            mu2: build_bilinear(r.dim, &r.mu2)?,
            lambda2: build_trilinear(r.dim, &r.lambda2)?,
        }))
    }
}

pub fn parse_generator(text: &str) -> Result<DeformationGenerator, FormatError> {
    Ok(parse::<GeneratorDoc>(text)?.0)
}

pub fn render_generator(g: &DeformationGenerator) -> String {
    render(&GeneratorRaw {
        description: None,
        dim: g.dim(),
        mu1: bilinear_entries(&g.mu1),
        lambda1: trilinear_entries(&g.lambda1),
        mu2: bilinear_entries(&g.mu2),
        lambda2: trilinear_entries(&g.lambda2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    const ALG: &str = r#"{
        "dim": 2,
        "bilinear": [{"i": 0, "j": 1, "k": 0, "v": "1"}],
        "trilinear": [{"i": 0, "j": 1, "k": 1, "l": 0, "v": "2/4"}]
    }"#;

    #[test]
    fn algebra_round_trip() {
        let a = parse_algebra(ALG).unwrap();
        assert_eq!(a.omega().get(0, 1, 1, 0), &crate::exact::qr(1, 2));
        assert_eq!(parse_algebra(&render_algebra(&a)).unwrap(), a);
    }

    #[test]
    fn lower_entry_rejected_with_location() {
        let bad = "{\n \"dim\": 2,\n \"bilinear\": [{\"i\": 1, \"j\": 0, \"k\": 0, \"v\": \"1\"}]\n}";
        let err = parse_algebra(bad).unwrap_err();
        assert!(err.line() >= 1 && err.column() >= 1);
        assert!(err.to_string().contains("i < j"), "{err}");
    }

    #[test]
    fn syntax_error_location() {
        let err = parse_algebra("{\n  \"dim\": 2,\n  \"bilinear\": [\n}").unwrap_err();
        assert_eq!(err.line(), 4);
    }

    #[test]
    fn duplicates_and_unknown_fields_rejected() {
        let dup = r#"{"dim": 2, "bilinear": [{"i":0,"j":1,"k":0,"v":"1"},{"i":0,"j":1,"k":0,"v":"2"}]}"#;
        assert!(parse_algebra(dup).is_err());
        assert!(parse_algebra(r#"{"dim": 1, "extra": 0}"#).is_err());
    }

    #[test]
    fn matrix_shape_checked() {
        assert!(parse_matrix(r#"{"rows":2,"cols":2,"entries":[["1","0"]]}"#).is_err());
        let m = parse_matrix(r#"{"rows":1,"cols":2,"entries":[["1","-3/6"]]}"#).unwrap();
        assert_eq!(m.get(0, 1), &crate::exact::qr(-1, 2));
        assert_eq!(parse_matrix(&render_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn cochain_round_trip() {
        let mut c = Cochain::zero(3, 2, 3);
        c.set(5, q(2));
        let last = c.len() - 1;
        c.set(last, q(-1));
        assert_eq!(parse_cochain(&render_cochain(&c), 0, 0).unwrap(), c);
        let bad = r#"{"degree": 1, "f": [{"pairs": [[1,0]], "k": 0, "v": "1"}]}"#;
        assert!(parse_cochain(bad, 3, 3).is_err());
    }

    #[test]
    fn pre_round_trip() {
        let p = PreLy::from_fns(2, |i, j| vec![q((i + j) as i64), q(0)], |i, j, k| vec![q(0), q((i * j * k) as i64)]);
        assert_eq!(parse_pre_lya(&render_pre_lya(&p)).unwrap(), p);
        let cp = CompatPreLy::new(p.clone(), PreLy::zero(2)).unwrap();
        assert_eq!(parse_compat_pre_lya(&render_compat_pre_lya(&cp)).unwrap(), cp);
    }
}
