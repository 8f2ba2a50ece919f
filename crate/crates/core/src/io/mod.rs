//! Text interchange format for algebras and modules, and the canonical JSON
//! invariant report.
//!
//! ```text
//! # A_2 with one module
//! name a2
//! field F 2
//! quiver
//!   vertex 1
//!   vertex 2
//!   arrow a 1 2
//! relations
//! module P1
//!   dim 1=1 2=1
//!   map a [[1]]
//! ```
//!
//! The full grammar is documented in `docs/format.md`.

mod document;
mod parse;
mod report;

pub use document::{ArrowDecl, Document, MapDecl, ModuleDecl, Pos, RelationDecl, Scalar, TermDecl};
pub use parse::{parse_document, ParseError, ParseErrorKind};
pub use report::{emit_report, AlgebraIdentity, InvariantReport, ReportValue};
