//! JSON and CSV interchange formats used by the `closurelab` command-line
//! tool.
//!
//! A polyhedron file carries an H-description, a V-description, or both:
//!
//! ```json
//! {
//!   "dim": 2,
//!   "hrep": [ {"a": [1, 0], "alpha": "1"}, {"a": [-1, 0], "alpha": "0"} ],
//!   "vrep": {"vertices": [["0", "0"]], "rays": [[0, 1]], "lines": []}
//! }
//! ```
//!
//! Offsets and vertex coordinates are exact rationals written as `"p/q"`
//! strings (plain integers are also accepted); normals, rays, and lines are
//! integer vectors. When both sections are present they are cross-validated
//! against each other. Cut families wrap a member list plus optional
//! `{"k", "l", "m"}` bounds, splits are `{"u": [...], "i": n}`, and lattice
//! symmetries are `{"U": [[...], ...], "shift": [...]}`.
//!
//! Sizes are guarded at parse time: dimension at most 6 and at most 64
//! constraints by default, overridable through the `CLOSURELAB_MAX_DIM` and
//! `CLOSURELAB_MAX_CONSTRAINTS` environment variables.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::closure::{CutBounds, CutFamily, IterationTrace};
use crate::error::{Error, Result};
use crate::lattice::{Split, UnimodularMap};
use crate::linalg::{primitive_vector, QMatrix, QVector};
use crate::polyhedron::Polyhedron;
use crate::rational::{ExtendedRational, Rational};

/// Default and environment-variable-controlled size guards.
fn env_limit(var: &str, default: usize) -> usize {
    std::env::var(var)
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(default)
}

pub fn max_dim() -> usize {
    env_limit("CLOSURELAB_MAX_DIM", 6)
}

pub fn max_constraints() -> usize {
    env_limit("CLOSURELAB_MAX_CONSTRAINTS", 64)
}

/// One problem found while validating a file, with the JSON path it
/// occurred at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationIssue {
    pub path: String,
    pub message: String,
}

/// Outcome of validating a file: every error and warning found, not just
/// the first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<ValidationIssue>,
    pub warnings: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }

    fn error(&mut self, path: impl Into<String>, message: impl fmt::Display) {
        self.errors.push(ValidationIssue {
            path: path.into(),
            message: message.to_string(),
        });
    }

    fn warn(&mut self, path: impl Into<String>, message: impl fmt::Display) {
        self.warnings.push(ValidationIssue {
            path: path.into(),
            message: message.to_string(),
        });
    }

    fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        let rebase = |issue: ValidationIssue| ValidationIssue {
            path: if issue.path.is_empty() {
                prefix.to_string()
            } else {
                format!("{prefix}.{}", issue.path)
            },
            message: issue.message,
        };
        self.errors.extend(other.errors.into_iter().map(rebase));
        self.warnings.extend(other.warnings.into_iter().map(rebase));
    }

    /// The first error as a typed failure, for single-error parse entry
    /// points.
    fn into_error(self, what: &str) -> Error {
        match self.errors.into_iter().next() {
            Some(issue) if issue.path.is_empty() => {
                Error::InvalidPolyhedron(format!("{what}: {}", issue.message))
            }
            Some(issue) => {
                Error::InvalidPolyhedron(format!("{what} at {}: {}", issue.path, issue.message))
            }
            None => Error::InvalidPolyhedron(format!("{what}: unknown validation failure")),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for issue in &self.errors {
            if issue.path.is_empty() {
                writeln!(f, "error: {}", issue.message)?;
            } else {
                writeln!(f, "error at {}: {}", issue.path, issue.message)?;
            }
        }
        for issue in &self.warnings {
            if issue.path.is_empty() {
                writeln!(f, "warning: {}", issue.message)?;
            } else {
                writeln!(f, "warning at {}: {}", issue.path, issue.message)?;
            }
        }
        if self.errors.is_empty() {
            writeln!(f, "ok ({} warning(s))", self.warnings.len())?;
        }
        Ok(())
    }
}

/// A JSON scalar that is either a plain integer or a `"p/q"` string.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum JsonScalar {
    Int(i64),
    Text(String),
}

impl JsonScalar {
    fn to_rational(&self) -> std::result::Result<Rational, String> {
        match self {
            JsonScalar::Int(n) => Ok(Rational::from_int(*n)),
            JsonScalar::Text(s) => {
                Rational::from_str(s).map_err(|_| format!("not a rational: {s:?}"))
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ConstraintFile {
    a: Vec<JsonScalar>,
    alpha: JsonScalar,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct VRepFile {
    #[serde(default)]
    vertices: Vec<Vec<JsonScalar>>,
    #[serde(default)]
    rays: Vec<Vec<JsonScalar>>,
    #[serde(default)]
    lines: Vec<Vec<JsonScalar>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct PolyhedronFile {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hrep: Option<Vec<ConstraintFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vrep: Option<VRepFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct BoundsFile {
    k: u32,
    l: u32,
    m: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FamilyFile {
    members: Vec<PolyhedronFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundsFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SplitFile {
    u: Vec<i64>,
    i: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct UnimodularFile {
    #[serde(rename = "U")]
    u: Vec<Vec<i64>>,
    shift: Vec<i64>,
}

fn parse_vector(
    entries: &[JsonScalar],
    dim: usize,
    path: &str,
    report: &mut ValidationReport,
) -> Option<QVector> {
    if entries.len() != dim {
        report.error(path, format!("expected {dim} coordinates, got {}", entries.len()));
        return None;
    }
    let mut coords = Vec::with_capacity(dim);
    for (j, e) in entries.iter().enumerate() {
        match e.to_rational() {
            Ok(r) => coords.push(r),
            Err(msg) => {
                report.error(format!("{path}[{j}]"), msg);
                return None;
            }
        }
    }
    Some(QVector::new(coords))
}

/// Core checker: parses the already-deserialized file into a polyhedron
/// while accumulating every validation issue.
fn check_polyhedron(file: &PolyhedronFile) -> (Option<Polyhedron>, ValidationReport) {
    let mut report = ValidationReport::default();
    let dim = file.dim;
    if dim == 0 {
        report.error("dim", "dimension must be positive");
        return (None, report);
    }
    if dim > max_dim() {
        report.error(
            "dim",
            format!("dimension {dim} exceeds the guard of {} (set CLOSURELAB_MAX_DIM to raise)", max_dim()),
        );
        return (None, report);
    }
    if file.hrep.is_none() && file.vrep.is_none() {
        report.error("", "at least one of \"hrep\" and \"vrep\" is required");
        return (None, report);
    }

    let mut from_h: Option<Polyhedron> = None;
    if let Some(rows) = &file.hrep {
        if rows.len() > max_constraints() {
            report.error(
                "hrep",
                format!(
                    "{} constraints exceed the guard of {} (set CLOSURELAB_MAX_CONSTRAINTS to raise)",
                    rows.len(),
                    max_constraints()
                ),
            );
            return (None, report);
        }
        let mut raw = Vec::with_capacity(rows.len());
        let mut good = true;
        for (i, row) in rows.iter().enumerate() {
            let path = format!("hrep[{i}].a");
            let Some(normal) = parse_vector(&row.a, dim, &path, &mut report) else {
                good = false;
                continue;
            };
            if !normal.is_zero()
                && (!normal.is_integer()
                    || primitive_vector(&normal).map(|p| p != normal).unwrap_or(true))
            {
                report.warn(&path, "normal is not primitive integer; normalized");
            }
            match row.alpha.to_rational() {
                Ok(alpha) => raw.push((normal, alpha)),
                Err(msg) => {
                    report.error(format!("hrep[{i}].alpha"), msg);
                    good = false;
                }
            }
        }
        if good {
            match Polyhedron::from_constraints(dim, raw) {
                Ok(p) => from_h = Some(p),
                Err(e) => report.error("hrep", e),
            }
        }
    }

    let mut from_v: Option<Polyhedron> = None;
    if let Some(vrep) = &file.vrep {
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        let mut lines = Vec::new();
        let mut good = true;
        for (kind, rows, out) in [
            ("vertices", &vrep.vertices, &mut vertices),
            ("rays", &vrep.rays, &mut rays),
            ("lines", &vrep.lines, &mut lines),
        ] {
            for (i, row) in rows.iter().enumerate() {
                let path = format!("vrep.{kind}[{i}]");
                match parse_vector(row, dim, &path, &mut report) {
                    Some(v) => {
                        if kind != "vertices" {
                            if v.is_zero() {
                                report.error(&path, "generator direction must be nonzero");
                                good = false;
                                continue;
                            }
                            if !v.is_integer()
                                || primitive_vector(&v).map(|p| p != v).unwrap_or(true)
                            {
                                report.warn(&path, "direction is not primitive integer; normalized");
                            }
                        }
                        out.push(v);
                    }
                    None => good = false,
                }
            }
        }
        if good {
            match Polyhedron::from_generators(dim, vertices, rays, lines) {
                Ok(p) => from_v = Some(p),
                Err(e) => report.error("vrep", e),
            }
        }
    }

    // Cross-validate when both descriptions parsed.
    if let (Some(ph), Some(pv), Some(vrep)) = (&from_h, &from_v, &file.vrep) {
        let mut consistent = true;
        for (i, row) in vrep.vertices.iter().enumerate() {
            let Some(v) = parse_vector(row, dim, "", &mut ValidationReport::default()) else {
                continue;
            };
            if !ph.contains(&v) {
                report.error(
                    format!("vrep.vertices[{i}]"),
                    "vertex violates the hrep constraints",
                );
                consistent = false;
            }
        }
        for (i, c) in ph.constraints().iter().enumerate() {
            for (j, r) in pv.rays().iter().enumerate() {
                if c.normal.dot(r).is_positive() {
                    report.error(
                        format!("vrep.rays[{j}]"),
                        format!("ray escapes hrep constraint {i}"),
                    );
                    consistent = false;
                }
            }
            for (j, l) in pv.lines().iter().enumerate() {
                if !c.normal.dot(l).is_zero() {
                    report.error(
                        format!("vrep.lines[{j}]"),
                        format!("line escapes hrep constraint {i}"),
                    );
                    consistent = false;
                }
            }
        }
        if consistent && ph != pv {
            report.error("", "hrep and vrep describe different polyhedra");
        }
    }

    let poly = from_h.or(from_v);
    if report.is_ok() {
        (poly, report)
    } else {
        (None, report)
    }
}

fn deserialize<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| Error::InvalidPolyhedron(format!("{what}: malformed JSON: {e}")))
}

/// Parses a polyhedron file, failing on the first validation error. The
/// dimension and constraint-count guards return their dedicated errors.
pub fn parse_polyhedron(text: &str) -> Result<Polyhedron> {
    let file: PolyhedronFile = deserialize(text, "polyhedron")?;
    if file.dim > max_dim() {
        return Err(Error::DimensionGuard {
            dim: file.dim,
            max: max_dim(),
        });
    }
    if let Some(rows) = &file.hrep {
        if rows.len() > max_constraints() {
            return Err(Error::ConstraintGuard {
                count: rows.len(),
                max: max_constraints(),
            });
        }
    }
    let (poly, report) = check_polyhedron(&file);
    match poly {
        Some(p) => Ok(p),
        None => Err(report.into_error("polyhedron")),
    }
}

/// Validates a polyhedron file and reports every issue found.
pub fn validate_polyhedron(text: &str) -> ValidationReport {
    match serde_json::from_str::<PolyhedronFile>(text) {
        Ok(file) => check_polyhedron(&file).1,
        Err(e) => {
            let mut report = ValidationReport::default();
            report.error("", format!("malformed JSON: {e}"));
            report
        }
    }
}

fn check_family(file: &FamilyFile) -> (Option<CutFamily>, ValidationReport) {
    let mut report = ValidationReport::default();
    let mut members = Vec::with_capacity(file.members.len());
    for (i, member) in file.members.iter().enumerate() {
        let (poly, sub) = check_polyhedron(member);
        report.absorb(&format!("members[{i}]"), sub);
        if let Some(p) = poly {
            members.push(p);
        }
    }
    if !report.is_ok() {
        return (None, report);
    }
    let bounds = file.bounds.as_ref().map(|b| CutBounds {
        k: b.k,
        l: b.l,
        m: b.m,
    });
    match CutFamily::new(members, bounds) {
        Ok(family) => (Some(family), report),
        Err(e) => {
            report.error("members", e);
            (None, report)
        }
    }
}

/// Parses a cut-family file, failing on the first validation error.
pub fn parse_family(text: &str) -> Result<CutFamily> {
    let file: FamilyFile = deserialize(text, "cut family")?;
    let (family, report) = check_family(&file);
    family.ok_or_else(|| report.into_error("cut family"))
}

/// Validates a cut-family file and reports every issue found.
pub fn validate_family(text: &str) -> ValidationReport {
    match serde_json::from_str::<FamilyFile>(text) {
        Ok(file) => check_family(&file).1,
        Err(e) => {
            let mut report = ValidationReport::default();
            report.error("", format!("malformed JSON: {e}"));
            report
        }
    }
}

/// Parses a split file `{"u": [...], "i": n}`.
pub fn parse_split(text: &str) -> Result<Split> {
    let file: SplitFile = deserialize(text, "split")?;
    if file.u.len() > max_dim() {
        return Err(Error::DimensionGuard {
            dim: file.u.len(),
            max: max_dim(),
        });
    }
    Split::new(QVector::from_ints(&file.u), file.i)
}

/// Validates a split file.
pub fn validate_split(text: &str) -> ValidationReport {
    let mut report = ValidationReport::default();
    match serde_json::from_str::<SplitFile>(text) {
        Ok(file) => {
            if let Err(e) = Split::new(QVector::from_ints(&file.u), file.i) {
                report.error("u", e);
            }
        }
        Err(e) => report.error("", format!("malformed JSON: {e}")),
    }
    report
}

/// Parses a lattice-symmetry file `{"U": [[...], ...], "shift": [...]}`.
pub fn parse_unimodular(text: &str) -> Result<UnimodularMap> {
    let file: UnimodularFile = deserialize(text, "unimodular map")?;
    let dim = file.u.len();
    if dim > max_dim() {
        return Err(Error::DimensionGuard {
            dim,
            max: max_dim(),
        });
    }
    if dim == 0 || file.u.iter().any(|row| row.len() != dim) {
        return Err(Error::ShapeMismatch);
    }
    let rows: Vec<QVector> = file.u.iter().map(|row| QVector::from_ints(row)).collect();
    UnimodularMap::new(QMatrix::from_rows(&rows), QVector::from_ints(&file.shift))
}

/// Validates a lattice-symmetry file.
pub fn validate_unimodular(text: &str) -> ValidationReport {
    let mut report = ValidationReport::default();
    match parse_unimodular(text) {
        Ok(_) => {}
        Err(e) => report.error("", e),
    }
    report
}

fn bigint_value(b: &BigInt) -> Value {
    match i64::try_from(b.clone()) {
        Ok(n) => json!(n),
        Err(_) => json!(b.to_string()),
    }
}

/// Serializes an integer vector as a JSON array of numbers.
pub fn integer_vector_to_json(v: &QVector) -> Value {
    Value::Array(
        v.to_bigints()
            .expect("canonical integer vector")
            .iter()
            .map(bigint_value)
            .collect(),
    )
}

/// Serializes a rational vector as a JSON array of `"p/q"` strings.
pub fn rational_vector_to_json(v: &QVector) -> Value {
    Value::Array(v.iter().map(|c| json!(c.to_string())).collect())
}

/// Serializes a polyhedron with both its canonical irredundant
/// H-description and its canonical V-description.
pub fn polyhedron_to_json(p: &Polyhedron) -> Value {
    json!({
        "dim": p.dim(),
        "hrep": p
            .constraints()
            .iter()
            .map(|c| json!({
                "a": integer_vector_to_json(&c.normal),
                "alpha": c.offset.to_string(),
            }))
            .collect::<Vec<_>>(),
        "vrep": {
            "vertices": p.vertices().iter().map(rational_vector_to_json).collect::<Vec<_>>(),
            "rays": p.rays().iter().map(integer_vector_to_json).collect::<Vec<_>>(),
            "lines": p.lines().iter().map(integer_vector_to_json).collect::<Vec<_>>(),
        },
    })
}

/// Serializes a cut family.
pub fn family_to_json(family: &CutFamily) -> Value {
    let members: Vec<Value> = family.members().iter().map(polyhedron_to_json).collect();
    match family.bounds() {
        Some(b) => json!({
            "members": members,
            "bounds": {"k": b.k, "l": b.l, "m": b.m},
        }),
        None => json!({ "members": members }),
    }
}

/// Serializes a split.
pub fn split_to_json(split: &Split) -> Value {
    json!({
        "u": integer_vector_to_json(split.u()),
        "i": bigint_value(split.i()),
    })
}

/// Renders an iteration trace as CSV with one row per iterate. The distance
/// column is empty when no reference body was supplied and `inf` when the
/// distance is infinite.
pub fn trace_to_csv(trace: &IterationTrace) -> String {
    let mut out = String::from("iteration,num_vertices,num_constraints,hausdorff_linf\n");
    for (i, p) in trace.iterates.iter().enumerate() {
        let distance = match &trace.distances {
            None => String::new(),
            Some(ds) => match &ds[i] {
                ExtendedRational::Finite(r) => r.to_string(),
                ExtendedRational::PosInfinity => "inf".to_string(),
            },
        };
        out.push_str(&format!(
            "{i},{},{},{distance}\n",
            p.vertices().len(),
            p.constraints().len()
        ));
    }
    out
}
