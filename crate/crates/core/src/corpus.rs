//! Built-in algebras with expected invariant values, and the verification
//! runner that recomputes and compares them.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bracket::ExtdimCaps;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, PrimeField};
use crate::invariants::{compute_invariants, InvariantOptions};
use crate::io::{parse_document, InvariantReport, ReportValue};
use crate::syzygy::ScanConfig;
use crate::torsion::SimpleSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::Paper => "[PAPER]",
            Provenance::Trivial => "[TRIVIAL]",
            Provenance::Derived => "[DERIVED]",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expected {
    Int(i64),
    Bool(bool),
    /// Exceeds every cutoff.
    Infinite,
    AtMost(i64),
    OneOf(Vec<i64>),
}

impl std::fmt::Display for Expected {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expected::Int(v) => write!(f, "{v}"),
            Expected::Bool(b) => write!(f, "{b}"),
            Expected::Infinite => write!(f, "infinite"),
            Expected::AtMost(v) => write!(f, "<={v}"),
            Expected::OneOf(vs) => {
                let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "one of {{{}}}", parts.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    /// Dot-separated path into the invariant report.
    pub path: &'static str,
    pub expected: Expected,
    pub provenance: Provenance,
    pub citation: &'static str,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub document: String,
    /// Vertex names forming `V`.
    pub simples: Vec<String>,
    pub scan: bool,
    pub injective_dimensions: bool,
    pub extdim: bool,
    pub expectations: Vec<Expectation>,
}

impl CorpusEntry {
    pub fn field(&self) -> Result<PrimeField> {
        match parse_document(&self.document)?.field {
            FieldSpec::Prime(p) => PrimeField::new(p),
            FieldSpec::Rationals => Err(Error::BadField("corpus entries use prime fields".into())),
        }
    }

    pub fn algebra(&self) -> Result<crate::rep::Algebra<PrimeField>> {
        parse_document(&self.document)?.build_algebra(self.field()?)
    }

    pub fn options(&self, cutoff: usize, seed: u64) -> Result<InvariantOptions> {
        let alg = self.algebra()?;
        let q = alg.quiver();
        let v = self
            .simples
            .iter()
            .map(|s| q.vertex_index(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(InvariantOptions {
            cutoff,
            seed,
            v: Some(SimpleSet::new(v)),
            scan: self.scan.then(ScanConfig::default),
            injective_dimensions: self.injective_dimensions,
            extdim: self.extdim.then(ExtdimCaps::default),
        })
    }
}

fn exp(
    path: &'static str,
    expected: Expected,
    provenance: Provenance,
    citation: &'static str,
) -> Expectation {
    Expectation {
        path,
        expected,
        provenance,
        citation,
    }
}

fn document(
    name: &str,
    p: u32,
    vertices: &[&str],
    arrows: &[&str],
    relations: &[String],
) -> String {
    let mut s = format!("name {name}\nfield F {p}\nquiver\n");
    for v in vertices {
        let _ = writeln!(s, "  vertex {v}");
    }
    for a in arrows {
        let _ = writeln!(s, "  arrow {a}");
    }
    s.push_str("relations\n");
    for r in relations {
        let _ = writeln!(s, "  {r}");
    }
    s
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// The quiver with a loop `al` at 1, `be: 1 -> 2`, `g1, g2: 2 -> 3`,
/// `de: 3 -> 4`, a chain `r1..rn` from 4 to `n + 4` and `mu1, mu2` back to 1.
pub fn final_example_document(m: usize, n: usize) -> String {
    let top = n + 4;
    let names: Vec<String> = (1..=top).map(|i| i.to_string()).collect();
    let vertices: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut arrows = vec![
        "al 1 1".to_string(),
        "be 1 2".into(),
        "g1 2 3".into(),
        "g2 2 3".into(),
        "de 3 4".into(),
    ];
    for i in 1..=n {
        arrows.push(format!("r{i} {} {}", i + 3, i + 4));
    }
    arrows.push(format!("mu1 {top} 1"));
    arrows.push(format!("mu2 {top} 1"));
    let arrow_refs: Vec<&str> = arrows.iter().map(|s| s.as_str()).collect();
    let relations = vec![
        vec!["al"; m].join("."),
        "al.be".into(),
        "g1.de - g2.de".into(),
        format!("r{n}.mu1.al"),
        format!("r{n}.mu2.al"),
        "mu1.be".into(),
        "mu2.be".into(),
    ];
    document("final-example", 2, &vertices, &arrow_refs, &relations)
}

pub fn corpus() -> Vec<CorpusEntry> {
    use Expected::*;
    use Provenance::*;
    let mut out = vec![
        CorpusEntry {
            name: "semisimple",
            document: document("semisimple", 2, &["1", "2"], &[], &[]),
            simples: strs(&["1", "2"]),
            scan: true,
            injective_dimensions: false,
            extdim: true,
            expectations: vec![
                exp("dimension", Int(2), Trivial, "k x k has dimension 2"),
                exp(
                    "loewy_length",
                    Int(1),
                    Trivial,
                    "semisimple algebras have Loewy length 1",
                ),
                exp(
                    "gldim",
                    Int(0),
                    Trivial,
                    "semisimple algebras have global dimension 0",
                ),
                exp(
                    "selfinjective",
                    Bool(true),
                    Trivial,
                    "semisimple algebras are selfinjective",
                ),
                exp(
                    "ll_tV",
                    Int(0),
                    Trivial,
                    "t_V kills every module when V is all simples",
                ),
                exp("bounds.best", Int(0), Trivial, "derived dimension 0"),
                exp(
                    "syzygy_scan.stabilization",
                    Int(0),
                    Trivial,
                    "no non-projective modules",
                ),
                exp(
                    "extdim.upper",
                    Int(0),
                    Paper,
                    "representation finite iff extdim = 0",
                ),
            ],
        },
        CorpusEntry {
            name: "a2",
            document: document("a2", 2, &["1", "2"], &["a 1 2"], &[]),
            simples: strs(&["2"]),
            scan: true,
            injective_dimensions: true,
            extdim: true,
            expectations: vec![
                exp(
                    "dimension",
                    Int(3),
                    Trivial,
                    "A_2 path algebra has three paths",
                ),
                exp("loewy_length", Int(2), Trivial, "longest path has length 1"),
                exp("gldim", Int(1), Trivial, "path algebras are hereditary"),
                exp(
                    "selfinjective",
                    Bool(false),
                    Trivial,
                    "P(2) is not injective",
                ),
                exp("pd_V", Int(0), Trivial, "S(2) is projective"),
                exp(
                    "ll_tV",
                    Int(1),
                    Derived,
                    "t_V(P(1)) = P(1), then rad P(1) = S(2) is V-filtered",
                ),
                exp("itdim_upper", Int(0), Derived, "max{ll - 2, 0}"),
                exp("bounds.best", Int(1), Derived, "LL - 1 = gldim = 1"),
                exp(
                    "left_id",
                    Int(1),
                    Trivial,
                    "hereditary and not selfinjective",
                ),
                exp(
                    "right_id",
                    Int(1),
                    Trivial,
                    "hereditary and not selfinjective",
                ),
                exp(
                    "extdim.lower",
                    Int(0),
                    Paper,
                    "representation finite iff extdim = 0",
                ),
                exp(
                    "extdim.upper",
                    Int(0),
                    Paper,
                    "representation finite iff extdim = 0",
                ),
            ],
        },
        CorpusEntry {
            name: "a5",
            document: document(
                "a5",
                2,
                &["1", "2", "3", "4", "5"],
                &["a1 1 2", "a2 2 3", "a3 3 4", "a4 4 5"],
                &[],
            ),
            simples: strs(&["5"]),
            scan: true,
            injective_dimensions: false,
            extdim: false,
            expectations: vec![
                exp("dimension", Int(15), Trivial, "linear A_5 has 15 paths"),
                exp("loewy_length", Int(5), Trivial, "longest path has length 4"),
                exp("gldim", Int(1), Trivial, "path algebras are hereditary"),
                exp(
                    "syzygy_scan.stabilization",
                    Int(1),
                    Derived,
                    "syzygies of simples are projective",
                ),
            ],
        },
        CorpusEntry {
            name: "kronecker",
            document: document("kronecker", 2, &["1", "2"], &["a 1 2", "b 1 2"], &[]),
            simples: strs(&["2"]),
            scan: true,
            injective_dimensions: false,
            extdim: true,
            expectations: vec![
                exp("dimension", Int(4), Trivial, "two vertices and two arrows"),
                exp("loewy_length", Int(2), Trivial, "radical square zero"),
                exp("gldim", Int(1), Trivial, "path algebras are hereditary"),
                exp(
                    "syzygy_scan.stabilization",
                    Int(1),
                    Paper,
                    "radical square zero algebras are syzygy-finite",
                ),
                exp(
                    "extdim.lower",
                    Int(1),
                    Derived,
                    "indecomposables reach every dimension cap",
                ),
                exp(
                    "extdim.upper",
                    Int(1),
                    Derived,
                    "0 -> rad M -> M -> top M -> 0 with semisimple ends",
                ),
            ],
        },
        CorpusEntry {
            name: "loop-x4",
            document: document("loop-x4", 2, &["1"], &["x 1 1"], &["x.x.x.x".to_string()]),
            simples: vec![],
            scan: true,
            injective_dimensions: false,
            extdim: false,
            expectations: vec![
                exp("dimension", Int(4), Trivial, "k[x]/(x^4)"),
                exp(
                    "loewy_length",
                    Int(4),
                    Trivial,
                    "k[x]/(x^4) is uniserial of length 4",
                ),
                exp(
                    "selfinjective",
                    Bool(true),
                    Trivial,
                    "truncated polynomial rings are selfinjective",
                ),
                exp(
                    "gldim",
                    Infinite,
                    Trivial,
                    "the simple has periodic syzygies",
                ),
                exp(
                    "syzygy_scan.stabilization",
                    Int(0),
                    Derived,
                    "Omega swaps k[x]/(x) and k[x]/(x^3)",
                ),
                exp(
                    "itdim_upper",
                    Int(2),
                    Derived,
                    "max{LL - 2, 0} with V empty",
                ),
            ],
        },
        CorpusEntry {
            name: "exterior-2",
            document: document(
                "exterior-2",
                3,
                &["1"],
                &["x 1 1", "y 1 1"],
                &strs(&["x.x", "y.y", "x.y + y.x"]),
            ),
            simples: vec![],
            scan: false,
            injective_dimensions: false,
            extdim: false,
            expectations: vec![
                exp(
                    "dimension",
                    Int(4),
                    Trivial,
                    "exterior algebra in 2 variables has dimension 2^2",
                ),
                exp(
                    "loewy_length",
                    Int(3),
                    Trivial,
                    "exterior algebra in n variables has Loewy length n + 1",
                ),
                exp(
                    "selfinjective",
                    Bool(true),
                    Trivial,
                    "exterior algebras are selfinjective",
                ),
                exp(
                    "gldim",
                    Infinite,
                    Trivial,
                    "selfinjective and not semisimple",
                ),
                exp(
                    "itdim_upper",
                    Int(1),
                    Paper,
                    "ITdim of the exterior algebra in n variables is n - 1, n = 2",
                ),
            ],
        },
        CorpusEntry {
            name: "exterior-3",
            document: document(
                "exterior-3",
                3,
                &["1"],
                &["x 1 1", "y 1 1", "z 1 1"],
                &strs(&["x.x", "y.y", "z.z", "x.y + y.x", "x.z + z.x", "y.z + z.y"]),
            ),
            simples: vec![],
            scan: false,
            injective_dimensions: false,
            extdim: false,
            expectations: vec![
                exp(
                    "dimension",
                    Int(8),
                    Trivial,
                    "exterior algebra in 3 variables has dimension 2^3",
                ),
                exp(
                    "loewy_length",
                    Int(4),
                    Trivial,
                    "exterior algebra in n variables has Loewy length n + 1",
                ),
                exp(
                    "selfinjective",
                    Bool(true),
                    Trivial,
                    "exterior algebras are selfinjective",
                ),
                exp(
                    "itdim_upper",
                    Int(2),
                    Paper,
                    "ITdim of the exterior algebra in n variables is n - 1, n = 3",
                ),
            ],
        },
        CorpusEntry {
            name: "beilinson-2",
            document: document(
                "beilinson-2",
                2,
                &["1", "2", "3"],
                &["x0 1 2", "x1 1 2", "y0 2 3", "y1 2 3"],
                &strs(&["x0.y1 - x1.y0"]),
            ),
            simples: strs(&["3"]),
            scan: false,
            injective_dimensions: false,
            extdim: false,
            expectations: vec![
                exp(
                    "dimension",
                    Int(10),
                    Trivial,
                    "3 vertices, 4 arrows, 3 independent paths of length 2",
                ),
                exp("loewy_length", Int(3), Trivial, "longest path has length 2"),
                exp(
                    "gldim",
                    Int(2),
                    Paper,
                    "the Beilinson algebra of P^n has global dimension n",
                ),
            ],
        },
        CorpusEntry {
            name: "monomial-a3",
            document: document(
                "monomial-a3",
                2,
                &["1", "2", "3"],
                &["a 1 2", "b 2 3"],
                &strs(&["a.b"]),
            ),
            simples: strs(&["3"]),
            scan: true,
            injective_dimensions: false,
            extdim: false,
            expectations: vec![
                exp("dimension", Int(5), Trivial, "five paths survive a.b = 0"),
                exp("loewy_length", Int(2), Trivial, "radical square zero"),
                exp("gldim", Int(2), Trivial, "pd S(1) = 2 through S(2)"),
                exp(
                    "syzygy_scan.stabilization",
                    AtMost(2),
                    Paper,
                    "monomial algebras are 2-syzygy-finite",
                ),
            ],
        },
        CorpusEntry {
            name: "rad-square-zero",
            document: document(
                "rad-square-zero",
                2,
                &["1", "2"],
                &["a 1 2", "b 2 1"],
                &strs(&["a.b", "b.a"]),
            ),
            simples: vec![],
            scan: true,
            injective_dimensions: false,
            extdim: false,
            expectations: vec![
                exp("dimension", Int(4), Trivial, "two vertices and two arrows"),
                exp("loewy_length", Int(2), Trivial, "radical square zero"),
                exp(
                    "selfinjective",
                    Bool(true),
                    Trivial,
                    "cyclic Nakayama algebra with equal Loewy lengths",
                ),
                exp("gldim", Infinite, Trivial, "Omega swaps the two simples"),
                exp(
                    "syzygy_scan.stabilization",
                    Int(0),
                    Paper,
                    "radical square zero algebras are syzygy-finite",
                ),
            ],
        },
        CorpusEntry {
            name: "t2-loop-x4",
            document: document(
                "t2-loop-x4",
                3,
                &["1", "2"],
                &["x1 1 1", "x2 2 2", "b 1 2"],
                &strs(&["x1.x1.x1.x1", "x2.x2.x2.x2", "x1.b - b.x2"]),
            ),
            simples: vec![],
            scan: false,
            injective_dimensions: true,
            extdim: false,
            expectations: vec![
                exp(
                    "dimension",
                    Int(12),
                    Trivial,
                    "T_2(A) has dimension 3 dim A",
                ),
                exp(
                    "selfinjective",
                    Bool(false),
                    Trivial,
                    "P(2) is not injective",
                ),
                exp(
                    "left_id",
                    Int(1),
                    Paper,
                    "T_2(k[x]/(x^n)) is CM-finite 1-Gorenstein",
                ),
                exp(
                    "right_id",
                    Int(1),
                    Paper,
                    "T_2(k[x]/(x^n)) is CM-finite 1-Gorenstein",
                ),
            ],
        },
        CorpusEntry {
            name: "final-example",
            document: final_example_document(5, 12),
            simples: (3..=14).map(|i| i.to_string()).collect(),
            scan: false,
            injective_dimensions: false,
            extdim: false,
            expectations: vec![
                exp("loewy_length", Int(17), Paper, "LL = n + 5"),
                exp("pd_V", Int(1), Paper, "pd V = 1"),
                exp(
                    "ll_tV",
                    OneOf(vec![5, 6]),
                    Paper,
                    "ll^{t_V} = m, with the m + 1 reading as fallback",
                ),
                exp(
                    "bounds.layer_it.value",
                    OneOf(vec![9, 11]),
                    Derived,
                    "2 max{ll - 2, 0} + pd V + 2",
                ),
                exp(
                    "bounds.recomputes",
                    Bool(true),
                    Derived,
                    "every bound entry recomputes from its inputs",
                ),
            ],
        },
    ];
    out.sort_by_key(|e| e.name);
    out
}

pub fn lookup(name: &str) -> Result<CorpusEntry> {
    corpus()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The value exceeded the cutoff, so the expectation could not be tested.
    Skipped,
}

impl CheckStatus {
    fn label(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "n/a-skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub expectation: Expectation,
    pub actual: Option<ReportValue>,
    pub status: CheckStatus,
}

#[derive(Debug, Clone)]
pub struct EntryResult {
    pub name: String,
    pub report: Option<InvariantReport>,
    pub error: Option<String>,
    pub checks: Vec<CheckResult>,
}

impl EntryResult {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub cutoff: usize,
    pub seed: u64,
    pub entries: Vec<EntryResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(EntryResult::passed)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.entries
            .iter()
            .flat_map(|e| &e.checks)
            .filter(|c| c.status == status)
            .count()
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let checks: Vec<Value> = e
                    .checks
                    .iter()
                    .map(|c| {
                        json!({
                            "path": c.expectation.path,
                            "expected": c.expectation.expected.to_string(),
                            "actual": c.actual.as_ref().map_or(Value::Null, |a| a.to_json()),
                            "status": c.status.label(),
                            "provenance": c.expectation.provenance.to_string(),
                            "citation": c.expectation.citation,
                        })
                    })
                    .collect();
                json!({
                    "name": e.name,
                    "passed": e.passed(),
                    "error": e.error,
                    "report": e.report.as_ref().map_or(Value::Null, |r| r.to_json()),
                    "checks": checks,
                })
            })
            .collect();
        json!({
            "cutoff": self.cutoff,
            "seed": self.seed,
            "passed": self.passed(),
            "summary": {
                "pass": self.count(CheckStatus::Pass),
                "fail": self.count(CheckStatus::Fail),
                "skipped": self.count(CheckStatus::Skipped),
            },
            "entries": entries,
        })
    }

    /// Canonical JSON text with a trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report is valid JSON");
        s.push('\n');
        s
    }
}

/// Value at a dot-separated path of nested records.
pub fn report_path<'a>(report: &'a InvariantReport, path: &str) -> Option<&'a ReportValue> {
    let mut parts = path.split('.');
    let mut cur = report.get(parts.next()?)?;
    for p in parts {
        match cur {
            ReportValue::Record(fields) => {
                cur = fields.iter().find(|(k, _)| k == p).map(|(_, v)| v)?
            }
            _ => return None,
        }
    }
    Some(cur)
}

pub fn compare(expected: &Expected, actual: &ReportValue) -> CheckStatus {
    let ok = |b: bool| {
        if b {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    };
    match (expected, actual) {
        (Expected::Infinite, ReportValue::Exceeds(_)) => CheckStatus::Pass,
        (Expected::Int(v), ReportValue::Exceeds(c))
        | (Expected::AtMost(v), ReportValue::Exceeds(c)) => {
            if *v > *c as i64 {
                CheckStatus::Skipped
            } else {
                CheckStatus::Fail
            }
        }
        (Expected::OneOf(vs), ReportValue::Exceeds(c)) => {
            if vs.iter().all(|v| *v > *c as i64) {
                CheckStatus::Skipped
            } else {
                CheckStatus::Fail
            }
        }
        (Expected::Int(v), ReportValue::Int(a)) => ok(v == a),
        (Expected::AtMost(v), ReportValue::Int(a)) => ok(a <= v),
        (Expected::OneOf(vs), ReportValue::Int(a)) => ok(vs.contains(a)),
        (Expected::Bool(b), ReportValue::Bool(a)) => ok(a == b),
        _ => CheckStatus::Fail,
    }
}

pub fn verify_entry(entry: &CorpusEntry, cutoff: usize, seed: u64) -> EntryResult {
    let computed = entry.algebra().and_then(|alg| {
        let opts = entry.options(cutoff, seed)?;
        Ok(compute_invariants(&alg, entry.name, &opts))
    });
    match computed {
        Ok(report) => {
            let checks = entry
                .expectations
                .iter()
                .map(|e| {
                    let actual = report_path(&report, e.path).cloned();
                    let status = actual
                        .as_ref()
                        .map_or(CheckStatus::Fail, |a| compare(&e.expected, a));
                    CheckResult {
                        expectation: e.clone(),
                        actual,
                        status,
                    }
                })
                .collect();
            EntryResult {
                name: entry.name.to_string(),
                report: Some(report),
                error: None,
                checks,
            }
        }
        Err(e) => EntryResult {
            name: entry.name.to_string(),
            report: None,
            error: Some(e.to_string()),
            checks: vec![],
        },
    }
}

/// Verifies the named entries (all when `names` is empty), concurrently,
/// reporting in name order.
pub fn run_verification(names: &[String], cutoff: usize, seed: u64) -> Result<VerificationReport> {
    let entries: Vec<CorpusEntry> = if names.is_empty() {
        corpus()
    } else {
        let mut v = names
            .iter()
            .map(|n| lookup(n))
            .collect::<Result<Vec<_>>>()?;
        v.sort_by_key(|e| e.name);
        v.dedup_by_key(|e| e.name);
        v
    };
    let mut results: Vec<EntryResult> = entries
        .par_iter()
        .map(|e| verify_entry(e, cutoff, seed))
        .collect();
    results.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(VerificationReport {
        cutoff,
        seed,
        entries: results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_documents_build() {
        for e in corpus() {
            let alg = e
                .algebra()
                .unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert!(alg.dimension() > 0);
            e.options(32, 0).unwrap();
            assert!(!e.expectations.is_empty());
        }
    }

    #[test]
    fn lookups() {
        let e = lookup("exterior-2").unwrap();
        assert!(e
            .expectations
            .iter()
            .any(|x| x.path == "itdim_upper" && x.expected == Expected::Int(1)));
        let b = lookup("beilinson-2").unwrap();
        assert!(b
            .expectations
            .iter()
            .any(|x| x.path == "gldim" && x.expected == Expected::Int(2)));
        assert_eq!(
            lookup("nonexistent").unwrap_err(),
            Error::UnknownEntry("nonexistent".into())
        );
    }

    #[test]
    fn a2_passes() {
        let r = run_verification(&["a2".to_string()], 32, 0).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn low_cutoff_skips() {
        let r = run_verification(&["beilinson-2".to_string()], 1, 0).unwrap();
        let e = &r.entries[0];
        let g = e
            .checks
            .iter()
            .find(|c| c.expectation.path == "gldim")
            .unwrap();
        assert_eq!(g.status, CheckStatus::Skipped);
        assert_eq!(g.actual, Some(ReportValue::Exceeds(1)));
        assert!(r.passed());
    }

    #[test]
    fn comparisons() {
        assert_eq!(
            compare(&Expected::Int(2), &ReportValue::Int(2)),
            CheckStatus::Pass
        );
        assert_eq!(
            compare(&Expected::Int(2), &ReportValue::Exceeds(5)),
            CheckStatus::Fail
        );
        assert_eq!(
            compare(&Expected::OneOf(vec![5, 6]), &ReportValue::Int(6)),
            CheckStatus::Pass
        );
        assert_eq!(
            compare(&Expected::Infinite, &ReportValue::Int(3)),
            CheckStatus::Fail
        );
        assert_eq!(
            compare(&Expected::AtMost(2), &ReportValue::Int(1)),
            CheckStatus::Pass
        );
    }
}
