use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, PathWord, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::io::parse::{ParseError, ParseErrorKind};
use crate::linalg::Matrix;
use crate::rep::Representation;

/// Default bound on path length when a document does not set `max-length`.
pub const DEFAULT_MAX_LENGTH: usize = 64;

/// Source position (1-based line and column). Positions are diagnostics
/// only and never take part in structural equality.
#[derive(Debug, Clone, Copy, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

/// An exact scalar as written in a document: `num/den` in lowest terms with
/// `den > 0`. Interpreted in the document's field on conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scalar {
    pub num: i64,
    pub den: i64,
}

impl Scalar {
    pub fn new(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Some(Scalar { num: n, den: d })
    }

    pub fn integer(v: i64) -> Self {
        Scalar { num: v, den: 1 }
    }

    pub fn to_field<F: Field>(&self, f: &F) -> Option<F::Elem> {
        f.from_ratio(self.num, self.den)
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArrowDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TermDecl {
    pub coeff: Scalar,
    pub path: Vec<String>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationDecl {
    pub terms: Vec<TermDecl>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MapDecl {
    pub arrow: String,
    pub rows: Vec<Vec<Scalar>>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModuleDecl {
    pub name: String,
    pub dims: Vec<(String, usize)>,
    pub maps: Vec<MapDecl>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub name: Option<String>,
    pub field: FieldSpec,
    pub max_length: Option<usize>,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    pub relations: Vec<RelationDecl>,
    pub modules: Vec<ModuleDecl>,
}

impl Document {
    pub fn quiver(&self) -> Result<Quiver> {
        let arrows: Vec<(&str, &str, &str)> = self
            .arrows
            .iter()
            .map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str()))
            .collect();
        let vertices: Vec<&str> = self.vertices.iter().map(|v| v.as_str()).collect();
        Quiver::new(&vertices, &arrows)
    }

    /// Builds the algebra over `field`, which must match the declaration.
    pub fn build_algebra<F: Field>(&self, field: F) -> Result<Arc<BoundQuiverAlgebra<F>>> {
        if field.spec() != self.field {
            return Err(ParseError::new(
                ParseErrorKind::FieldMismatch,
                Pos::default(),
                format!(
                    "document declares {}, requested {}",
                    self.field,
                    field.spec()
                ),
            )
            .into());
        }
        let q = self.quiver()?;
        let mut rels = Vec::new();
        for r in &self.relations {
            let mut terms = Vec::new();
            for t in &r.terms {
                let c = t.coeff.to_field(&field).ok_or_else(|| {
                    ParseError::new(ParseErrorKind::FieldMismatch, t.pos, "denominator vanishes")
                })?;
                let arrows = t
                    .path
                    .iter()
                    .map(|n| q.arrow_index(n))
                    .collect::<Result<Vec<_>>>()?;
                terms.push((c, PathWord::from_arrows(&q, arrows)?));
            }
            rels.push(Relation::new(terms));
        }
        BoundQuiverAlgebra::build(
            q,
            rels,
            field,
            self.max_length.unwrap_or(DEFAULT_MAX_LENGTH),
        )
    }

    pub fn module_names(&self) -> Vec<&str> {
        self.modules.iter().map(|m| m.name.as_str()).collect()
    }

    /// Instantiates the named module block over `alg`.
    pub fn module<F: Field>(
        &self,
        alg: &Arc<BoundQuiverAlgebra<F>>,
        name: &str,
    ) -> Result<Representation<F>> {
        let decl = self
            .modules
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| Error::InvalidRepresentation(format!("no module named {name}")))?;
        decl.instantiate(alg)
    }

    /// Canonical text form; `parse_document(doc.to_text())` equals `doc`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(n) = &self.name {
            let _ = writeln!(s, "name {n}");
        }
        match self.field {
            FieldSpec::Prime(p) => {
                let _ = writeln!(s, "field F {p}");
            }
            FieldSpec::Rationals => {
                let _ = writeln!(s, "field Q");
            }
        }
        if let Some(m) = self.max_length {
            let _ = writeln!(s, "max-length {m}");
        }
        s.push_str("quiver\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  vertex {v}");
        }
        for a in &self.arrows {
            let _ = writeln!(s, "  arrow {} {} {}", a.name, a.source, a.target);
        }
        s.push_str("relations\n");
        for r in &self.relations {
            let mut line = String::new();
            for (i, t) in r.terms.iter().enumerate() {
                let (sign, mag) = if t.coeff.num < 0 {
                    (
                        "-",
                        Scalar {
                            num: -t.coeff.num,
                            den: t.coeff.den,
                        },
                    )
                } else {
                    ("+", t.coeff)
                };
                if i == 0 {
                    if sign == "-" {
                        line.push('-');
                    }
                } else {
                    let _ = write!(line, " {sign} ");
                }
                let _ = write!(line, "{}*{}", mag, t.path.join("."));
            }
            let _ = writeln!(s, "  {line}");
        }
        for m in &self.modules {
            let _ = writeln!(s, "module {}", m.name);
            let dims: Vec<String> = m.dims.iter().map(|(v, d)| format!("{v}={d}")).collect();
            let _ = writeln!(s, "  dim {}", dims.join(" "));
            for map in &m.maps {
                let rows: Vec<String> = map
                    .rows
                    .iter()
                    .map(|r| {
                        format!(
                            "[{}]",
                            r.iter()
                                .map(|x| x.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                    })
                    .collect();
                let _ = writeln!(s, "  map {} [{}]", map.arrow, rows.join(","));
            }
        }
        s
    }
}

impl ModuleDecl {
    pub fn instantiate<F: Field>(
        &self,
        alg: &Arc<BoundQuiverAlgebra<F>>,
    ) -> Result<Representation<F>> {
        let q = alg.quiver();
        let f = alg.field();
        let mut dims = vec![0usize; q.num_vertices()];
        for (v, d) in &self.dims {
            dims[q.vertex_index(v)?] = *d;
        }
        let mut maps: Vec<Matrix<F>> = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        for m in &self.maps {
            let ai = q.arrow_index(&m.arrow)?;
            let a = &q.arrows()[ai];
            let (r, c) = (dims[a.target], dims[a.source]);
            if m.rows.len() != r || m.rows.iter().any(|row| row.len() != c) {
                return Err(ParseError::new(
                    ParseErrorKind::BadMatrixShape,
                    m.pos,
                    format!("map {} must be {r}x{c}", m.arrow),
                )
                .into());
            }
            let mut mat = Matrix::zeros(f, r, c);
            for (i, row) in m.rows.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    let e = x.to_field(f).ok_or_else(|| {
                        ParseError::new(
                            ParseErrorKind::FieldMismatch,
                            m.pos,
                            "denominator vanishes",
                        )
                    })?;
                    mat.set(i, j, e);
                }
            }
            maps[ai] = mat;
        }
        Representation::new(alg.clone(), dims, maps)
    }

    /// Module block describing `rep`, with integer entries.
    pub fn from_representation<F: Field>(name: &str, rep: &Representation<F>) -> Option<Self> {
        let q = rep.algebra().quiver();
        let f = rep.algebra().field();
        let dims = q
            .vertices()
            .iter()
            .cloned()
            .zip(rep.dims().iter().copied())
            .collect();
        let mut maps = Vec::new();
        for (ai, a) in q.arrows().iter().enumerate() {
            let m = rep.map(ai);
            if m.is_zero() {
                continue;
            }
            let mut rows = Vec::new();
            for r in 0..m.rows() {
                let mut row = Vec::new();
                for c in 0..m.cols() {
                    row.push(scalar_of(f, m.get(r, c))?);
                }
                rows.push(row);
            }
            maps.push(MapDecl {
                arrow: a.name.clone(),
                rows,
                pos: Pos::default(),
            });
        }
        Some(ModuleDecl {
            name: name.to_string(),
            dims,
            maps,
            pos: Pos::default(),
        })
    }
}

fn scalar_of<F: Field>(f: &F, e: &F::Elem) -> Option<Scalar> {
    let s = f.format(e);
    match s.split_once('/') {
        Some((n, d)) => Scalar::new(n.parse().ok()?, d.parse().ok()?),
        None => Some(Scalar::integer(s.parse().ok()?)),
    }
}
