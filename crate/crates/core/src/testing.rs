//! Small algebras shared by unit tests.

use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::field::{FieldSpec, PrimeField};
use crate::io::parse_document;

pub type Alg = Arc<BoundQuiverAlgebra<PrimeField>>;

/// Builds an algebra from `field F p` plus quiver and relation lines.
pub fn alg(p: u32, vertices: &[&str], arrows: &[&str], relations: &[&str]) -> Alg {
    let mut text = format!("field F {p}\nquiver\n");
    for v in vertices {
        text.push_str(&format!("  vertex {v}\n"));
    }
    for a in arrows {
        text.push_str(&format!("  arrow {a}\n"));
    }
    text.push_str("relations\n");
    for r in relations {
        text.push_str(&format!("  {r}\n"));
    }
    let doc = parse_document(&text).unwrap();
    assert_eq!(doc.field, FieldSpec::Prime(p));
    doc.build_algebra(PrimeField::new(p).unwrap()).unwrap()
}

pub fn a2(p: u32) -> Alg {
    alg(p, &["1", "2"], &["a 1 2"], &[])
}

pub fn a3_linear(p: u32) -> Alg {
    alg(p, &["1", "2", "3"], &["a 1 2", "b 2 3"], &[])
}

pub fn kronecker(p: u32) -> Alg {
    alg(p, &["1", "2"], &["a 1 2", "b 1 2"], &[])
}

pub fn truncated(p: u32, n: usize) -> Alg {
    let rel = vec!["x"; n].join(".");
    alg(p, &["1"], &["x 1 1"], &[&rel])
}

pub fn exterior2(p: u32) -> Alg {
    alg(p, &["1"], &["x 1 1", "y 1 1"], &["x.x", "y.y", "x.y + y.x"])
}

pub fn monomial_a3(p: u32) -> Alg {
    alg(p, &["1", "2", "3"], &["a 1 2", "b 2 3"], &["a.b"])
}
