//! Bound quiver algebras `kQ/I` with a path basis computed by degreewise
//! elimination.
//!
//! Paths compose left to right: `p·q` means "traverse `p`, then `q`" and is
//! defined when `target(p) = source(q)`. With this convention a covariant
//! representation of `Q` (arrow `a: i -> j` acting `M_i -> M_j`) is exactly a
//! right `kQ/I`-module, and the indecomposable projective at `i` is `e_i Λ`,
//! spanned by the basis paths starting at `i`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::linalg::Matrix;

/// Sparse vector over the path basis: `(basis index, coefficient)` pairs with
/// strictly increasing indices and nonzero coefficients.
pub type SparseVec<E> = Vec<(usize, E)>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex ids and `(name, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        for (name, s, t) in arrows {
            let name = name.as_ref().to_string();
            if q.arrows.iter().any(|a| a.name == name) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {name}")));
            }
            let source = q.vertex_index(s.as_ref())?;
            let target = q.vertex_index(t.as_ref())?;
            q.arrows.push(Arrow {
                name,
                source,
                target,
            });
        }
        Ok(q)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Parses a dotted word `a.b.c` of arrow names into a path.
    pub fn path(&self, word: &str) -> Result<PathWord> {
        let arrows = word
            .split('.')
            .map(|n| self.arrow_index(n.trim()))
            .collect::<Result<Vec<_>>>()?;
        PathWord::from_arrows(self, arrows)
    }
}

/// A path in the quiver: a trivial path at a vertex or a composable arrow
/// sequence read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PathWord {
    Trivial(usize),
    Arrows(Vec<usize>),
}

impl PathWord {
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        if arrows.is_empty() {
            return Err(Error::InvalidQuiver("empty arrow word".into()));
        }
        for w in arrows.windows(2) {
            let (a, b) = (&q.arrows[w[0]], &q.arrows[w[1]]);
            if a.target != b.source {
                return Err(Error::InvalidQuiver(format!(
                    "path {}.{} is not composable",
                    a.name, b.name
                )));
            }
        }
        Ok(PathWord::Arrows(arrows))
    }

    pub fn len(&self) -> usize {
        match self {
            PathWord::Trivial(_) => 0,
            PathWord::Arrows(a) => a.len(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, PathWord::Trivial(_))
    }

    pub fn source(&self, q: &Quiver) -> usize {
        match self {
            PathWord::Trivial(v) => *v,
            PathWord::Arrows(a) => q.arrows[a[0]].source,
        }
    }

    pub fn target(&self, q: &Quiver) -> usize {
        match self {
            PathWord::Trivial(v) => *v,
            PathWord::Arrows(a) => q.arrows[*a.last().unwrap()].target,
        }
    }

    pub fn arrows(&self) -> &[usize] {
        match self {
            PathWord::Trivial(_) => &[],
            PathWord::Arrows(a) => a,
        }
    }

    pub fn reversed(&self) -> PathWord {
        match self {
            PathWord::Trivial(v) => PathWord::Trivial(*v),
            PathWord::Arrows(a) => PathWord::Arrows(a.iter().rev().copied().collect()),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        match self {
            PathWord::Trivial(v) => format!("e_{}", q.vertices[*v]),
            PathWord::Arrows(a) => a
                .iter()
                .map(|&i| q.arrows[i].name.as_str())
                .collect::<Vec<_>>()
                .join("."),
        }
    }

    /// Length-lex order: shorter first, then arrow indices lexicographically
    /// (arrow index = declaration order), trivial paths by vertex.
    pub fn cmp_length_lex(&self, other: &Self) -> Ordering {
        match (self, other) {
            (PathWord::Trivial(a), PathWord::Trivial(b)) => a.cmp(b),
            (PathWord::Trivial(_), PathWord::Arrows(_)) => Ordering::Less,
            (PathWord::Arrows(_), PathWord::Trivial(_)) => Ordering::Greater,
            (PathWord::Arrows(a), PathWord::Arrows(b)) => a.len().cmp(&b.len()).then(a.cmp(b)),
        }
    }
}

/// A linear combination of parallel paths of equal length at least 2.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation<F: Field> {
    pub terms: Vec<(F::Elem, PathWord)>,
}

impl<F: Field> Relation<F> {
    pub fn new(terms: Vec<(F::Elem, PathWord)>) -> Self {
        Relation { terms }
    }

    pub fn monomial(field: &F, path: PathWord) -> Self {
        Relation {
            terms: vec![(field.one(), path)],
        }
    }

    pub fn reversed(&self) -> Self {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.reversed()))
                .collect(),
        }
    }

    pub fn display(&self, field: &F, q: &Quiver) -> String {
        self.terms
            .iter()
            .map(|(c, p)| format!("{}*{}", field.format(c), p.display(q)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub struct BoundQuiverAlgebra<F: Field> {
    field: F,
    quiver: Quiver,
    relations: Vec<Relation<F>>,
    max_length: usize,
    basis: Vec<PathWord>,
    index: HashMap<PathWord, usize>,
    /// `degree_start[d]..degree_start[d + 1]` are the basis paths of length `d`.
    degree_start: Vec<usize>,
    nilpotency: usize,
    /// `right_action[a][b]` = normal form of `basis[b] · a` (empty when zero).
    right_action: Vec<Vec<SparseVec<F::Elem>>>,
    opposite: OnceLock<Arc<BoundQuiverAlgebra<F>>>,
    selfinjective: OnceLock<bool>,
}

impl<F: Field> std::fmt::Debug for BoundQuiverAlgebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("field", &self.field.spec())
            .field("vertices", &self.quiver.vertices)
            .field("dimension", &self.basis.len())
            .field("loewy_length", &self.nilpotency)
            .finish()
    }
}

impl<F: Field> BoundQuiverAlgebra<F> {
    /// Builds `kQ/I`, reducing paths degree by degree modulo the span of
    /// `p·r·q`. Fails with `NotAdmissible` when some path of length
    /// `max_length` survives.
    pub fn build(
        quiver: Quiver,
        relations: Vec<Relation<F>>,
        field: F,
        max_length: usize,
    ) -> Result<Arc<Self>> {
        field.spec().validate()?;
        if quiver.num_vertices() == 0 {
            return Err(Error::InvalidQuiver("quiver has no vertices".into()));
        }
        if max_length < 2 {
            return Err(Error::NotAdmissible(max_length));
        }
        let relations = normalize_relations(&field, &quiver, relations)?;

        let mut alg = BoundQuiverAlgebra {
            field,
            quiver,
            relations,
            max_length,
            basis: Vec::new(),
            index: HashMap::new(),
            degree_start: vec![0],
            nilpotency: 0,
            right_action: Vec::new(),
            opposite: OnceLock::new(),
            selfinjective: OnceLock::new(),
        };
        alg.compute_basis()?;
        Ok(Arc::new(alg))
    }

    fn compute_basis(&mut self) -> Result<()> {
        let f = self.field.clone();
        let nv = self.quiver.num_vertices();
        let na = self.quiver.num_arrows();
        self.right_action = vec![Vec::new(); na];

        for v in 0..nv {
            self.push_basis(PathWord::Trivial(v));
        }
        self.degree_start.push(self.basis.len());

        let mut degree = 1;
        loop {
            let prev = self.degree_start[degree - 1]..self.degree_start[degree];
            // Candidates b·a for b a basis path of the previous degree.
            let mut candidates: Vec<(usize, usize, PathWord)> = Vec::new();
            for b in prev.clone() {
                let t = self.basis[b].target(&self.quiver);
                for (a, arrow) in self.quiver.arrows.iter().enumerate() {
                    if arrow.source != t {
                        continue;
                    }
                    let mut word = self.basis[b].arrows().to_vec();
                    word.push(a);
                    candidates.push((b, a, PathWord::Arrows(word)));
                }
            }
            candidates.sort_by(|x, y| x.2.cmp_length_lex(&y.2));
            let ncand = candidates.len();
            let cand_pos: HashMap<(usize, usize), usize> = candidates
                .iter()
                .enumerate()
                .map(|(i, (b, a, _))| ((*b, *a), i))
                .collect();

            // Relations landing in this degree, in candidate coordinates.
            let mut rows: Vec<Vec<F::Elem>> = Vec::new();
            for rel in &self.relations {
                let len = rel.terms[0].1.len();
                if len > degree {
                    continue;
                }
                let src = rel.terms[0].1.source(&self.quiver);
                let pre = self.degree_start[degree - len]..self.degree_start[degree - len + 1];
                for p in pre {
                    if self.basis[p].target(&self.quiver) != src {
                        continue;
                    }
                    let mut row = vec![f.zero(); ncand];
                    for (coef, word) in &rel.terms {
                        let arrows = word.arrows();
                        let (last, init) = arrows.split_last().unwrap();
                        let mut vec: SparseVec<F::Elem> = vec![(p, f.one())];
                        for &a in init {
                            vec = self.act_sparse(&vec, a);
                        }
                        for (b, c) in vec {
                            let pos = cand_pos[&(b, *last)];
                            row[pos] = f.add(&row[pos], &f.mul(coef, &c));
                        }
                    }
                    if row.iter().any(|e| !f.is_zero(e)) {
                        rows.push(row);
                    }
                }
            }

            // Eliminate with the largest candidates as pivots: reverse the
            // column order so echelon picks them first.
            let reversed: Vec<Vec<F::Elem>> = rows
                .iter()
                .map(|r| r.iter().rev().cloned().collect())
                .collect();
            let mut is_pivot = vec![false; ncand];
            let mut pivot_rows: Vec<(usize, usize)> = Vec::new();
            let ech = if reversed.is_empty() {
                None
            } else {
                let m = Matrix::from_row_vecs(&f, ncand, &reversed);
                let e = m.echelon();
                for (r, &pc) in e.pivots.iter().enumerate() {
                    let cand = ncand - 1 - pc;
                    is_pivot[cand] = true;
                    pivot_rows.push((cand, r));
                }
                Some(e.rref)
            };

            let start = self.basis.len();
            let mut new_index = vec![usize::MAX; ncand];
            for (i, (_, _, word)) in candidates.iter().enumerate() {
                if !is_pivot[i] {
                    new_index[i] = self.basis.len();
                    self.push_basis(word.clone());
                }
            }
            self.degree_start.push(self.basis.len());

            // Right action of arrows on the previous degree.
            for (i, (b, a, _)) in candidates.iter().enumerate() {
                let nf = if !is_pivot[i] {
                    vec![(new_index[i], f.one())]
                } else {
                    let rref = ech.as_ref().unwrap();
                    let r = pivot_rows.iter().find(|(c, _)| *c == i).unwrap().1;
                    // pivot + sum_{j non-pivot} rref[r][rev(j)] * cand_j = 0
                    let mut out = Vec::new();
                    for j in 0..ncand {
                        if is_pivot[j] {
                            continue;
                        }
                        let c = rref.get(r, ncand - 1 - j);
                        if !f.is_zero(c) {
                            out.push((new_index[j], f.neg(c)));
                        }
                    }
                    out.sort_by_key(|x| x.0);
                    out
                };
                self.set_action(*a, *b, nf);
            }

            if self.basis.len() == start {
                self.nilpotency = degree;
                break;
            }
            degree += 1;
            if degree > self.max_length {
                return Err(Error::NotAdmissible(self.max_length));
            }
        }
        // Arrows acting on the top degree give zero; pad the tables.
        let n = self.basis.len();
        for table in &mut self.right_action {
            table.resize(n, Vec::new());
        }
        Ok(())
    }

    fn push_basis(&mut self, w: PathWord) {
        self.index.insert(w.clone(), self.basis.len());
        self.basis.push(w);
    }

    fn set_action(&mut self, arrow: usize, b: usize, nf: SparseVec<F::Elem>) {
        let table = &mut self.right_action[arrow];
        if table.len() <= b {
            table.resize(b + 1, Vec::new());
        }
        table[b] = nf;
    }

    fn act_sparse(&self, v: &SparseVec<F::Elem>, arrow: usize) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut acc: std::collections::BTreeMap<usize, F::Elem> = Default::default();
        for (b, c) in v {
            let Some(img) = self.right_action[arrow].get(*b) else {
                continue;
            };
            for (t, d) in img {
                let e = acc.entry(*t).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(c, d));
            }
        }
        acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn field_spec(&self) -> FieldSpec {
        self.field.spec()
    }
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }
    pub fn max_length(&self) -> usize {
        self.max_length
    }
    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[PathWord] {
        &self.basis
    }
    pub fn basis_index(&self, w: &PathWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Least `n` with `rad^n = 0`.
    pub fn loewy_length(&self) -> usize {
        self.nilpotency
    }

    /// Path length of a basis element.
    pub fn degree_of(&self, b: usize) -> usize {
        self.degree_start.iter().rposition(|&s| s <= b).unwrap()
    }

    /// Basis indices of `rad^d Λ` (paths of length at least `d`).
    pub fn radical_power_basis(&self, d: usize) -> std::ops::Range<usize> {
        let start = self
            .degree_start
            .get(d)
            .copied()
            .unwrap_or(self.basis.len());
        start.min(self.basis.len())..self.basis.len()
    }

    /// Normal form of `basis[b] · arrow`.
    pub fn right_action(&self, arrow: usize, b: usize) -> &SparseVec<F::Elem> {
        &self.right_action[arrow][b]
    }

    /// Normal form of an arbitrary path.
    pub fn evaluate_path(&self, w: &PathWord) -> SparseVec<F::Elem> {
        let start = w.source(&self.quiver);
        let mut v: SparseVec<F::Elem> = vec![(start, self.field.one())];
        for &a in w.arrows() {
            v = self.act_sparse(&v, a);
        }
        v
    }

    /// Normal form of a relation; zero for every generator of the ideal.
    pub fn evaluate_relation(&self, r: &Relation<F>) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut acc: std::collections::BTreeMap<usize, F::Elem> = Default::default();
        for (c, w) in &r.terms {
            for (b, d) in self.evaluate_path(w) {
                let e = acc.entry(b).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(c, &d));
            }
        }
        acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
    }

    /// `basis[i] · basis[j]` in the path basis.
    pub fn multiply(&self, i: usize, j: usize) -> SparseVec<F::Elem> {
        match &self.basis[j] {
            PathWord::Trivial(v) => {
                if self.basis[i].target(&self.quiver) == *v {
                    vec![(i, self.field.one())]
                } else {
                    Vec::new()
                }
            }
            PathWord::Arrows(arrows) => {
                let mut v: SparseVec<F::Elem> = vec![(i, self.field.one())];
                for &a in arrows {
                    v = self.act_sparse(&v, a);
                    if v.is_empty() {
                        break;
                    }
                }
                v
            }
        }
    }

    /// Product of two elements given in the path basis.
    pub fn multiply_elements(
        &self,
        x: &SparseVec<F::Elem>,
        y: &SparseVec<F::Elem>,
    ) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut acc: std::collections::BTreeMap<usize, F::Elem> = Default::default();
        for (i, a) in x {
            for (j, b) in y {
                let ab = f.mul(a, b);
                for (k, c) in self.multiply(*i, *j) {
                    let e = acc.entry(k).or_insert_with(|| f.zero());
                    *e = f.add(e, &f.mul(&ab, &c));
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect()
    }

    /// The full table of structure constants, `table[i][j] = basis[i]·basis[j]`.
    pub fn multiplication_table(&self) -> Vec<Vec<SparseVec<F::Elem>>> {
        (0..self.dimension())
            .map(|i| (0..self.dimension()).map(|j| self.multiply(i, j)).collect())
            .collect()
    }

    /// `Λ^op`: arrows reversed, relation words reversed. Cached.
    pub fn opposite(&self) -> Arc<BoundQuiverAlgebra<F>> {
        self.opposite
            .get_or_init(|| {
                let q = self.quiver.opposite();
                let rels = self.relations.iter().map(|r| r.reversed()).collect();
                BoundQuiverAlgebra::build(q, rels, self.field.clone(), self.max_length)
                    .expect("opposite of an admissible algebra is admissible")
            })
            .clone()
    }

    /// True when `other` has the reversed quiver of `self`.
    pub fn is_opposite_of(&self, other: &Self) -> bool {
        self.quiver.opposite() == other.quiver && self.field == other.field
    }

    /// Structural identity: same field, quiver and relations.
    pub fn same_presentation(&self, other: &Self) -> bool {
        self.field == other.field
            && self.quiver == other.quiver
            && self.relations == other.relations
    }

    pub(crate) fn selfinjective_cache(&self) -> &OnceLock<bool> {
        &self.selfinjective
    }
}

fn normalize_relations<F: Field>(
    f: &F,
    q: &Quiver,
    relations: Vec<Relation<F>>,
) -> Result<Vec<Relation<F>>> {
    let mut out = Vec::new();
    for rel in relations {
        let shown = rel.display(f, q);
        let mut merged: Vec<(F::Elem, PathWord)> = Vec::new();
        for (c, w) in rel.terms {
            if w.len() < 2 {
                return Err(Error::RelationDegreeTooLow(shown));
            }
            if let Some(slot) = merged.iter_mut().find(|(_, p)| *p == w) {
                slot.0 = f.add(&slot.0, &c);
            } else {
                merged.push((c, w));
            }
        }
        merged.retain(|(c, _)| !f.is_zero(c));
        let Some((_, first)) = merged.first() else {
            continue;
        };
        let (s, t, len) = (first.source(q), first.target(q), first.len());
        for (_, w) in &merged {
            if w.source(q) != s || w.target(q) != t {
                return Err(Error::NonParallelRelation(shown));
            }
            if w.len() != len {
                return Err(Error::InhomogeneousRelation(shown));
            }
        }
        out.push(Relation { terms: merged });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn loop_algebra(p: u32, n: usize) -> Arc<BoundQuiverAlgebra<PrimeField>> {
        let f = PrimeField::new(p).unwrap();
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let rel = Relation::monomial(&f, PathWord::Arrows(vec![0; n]));
        BoundQuiverAlgebra::build(q, vec![rel], f, 16).unwrap()
    }

    #[test]
    fn a2_has_three_paths() {
        let f = PrimeField::new(2).unwrap();
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let alg = BoundQuiverAlgebra::build(q, vec![], f, 8).unwrap();
        assert_eq!(alg.dimension(), 3);
        assert_eq!(alg.loewy_length(), 2);
        let shown: Vec<_> = alg
            .basis()
            .iter()
            .map(|w| w.display(alg.quiver()))
            .collect();
        assert_eq!(shown, ["e_1", "e_2", "a"]);
    }

    #[test]
    fn truncated_polynomial() {
        let alg = loop_algebra(3, 4);
        assert_eq!(alg.dimension(), 4);
        assert_eq!(alg.loewy_length(), 4);
        let shown: Vec<_> = alg
            .basis()
            .iter()
            .map(|w| w.display(alg.quiver()))
            .collect();
        assert_eq!(shown, ["e_1", "x", "x.x", "x.x.x"]);
    }

    #[test]
    fn exterior_algebra_on_two_generators() {
        let f = PrimeField::new(3).unwrap();
        let q = Quiver::new(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let rels = vec![
            Relation::monomial(&f, q.path("x.x").unwrap()),
            Relation::monomial(&f, q.path("y.y").unwrap()),
            Relation::new(vec![
                (1, q.path("x.y").unwrap()),
                (1, q.path("y.x").unwrap()),
            ]),
        ];
        let alg = BoundQuiverAlgebra::build(q, rels, f, 8).unwrap();
        assert_eq!(alg.dimension(), 4);
        assert_eq!(alg.loewy_length(), 3);
        let shown: Vec<_> = alg
            .basis()
            .iter()
            .map(|w| w.display(alg.quiver()))
            .collect();
        assert_eq!(shown, ["e_1", "x", "y", "x.y"]);
        // y·x = -x·y
        let yx = alg.evaluate_path(&alg.quiver().path("y.x").unwrap());
        assert_eq!(yx, vec![(3, 2)]);
    }

    #[test]
    fn semisimple_has_loewy_length_one() {
        let f = PrimeField::new(2).unwrap();
        let q = Quiver::new::<&str>(&["1", "2"], &[]).unwrap();
        let alg = BoundQuiverAlgebra::build(q, vec![], f, 4).unwrap();
        assert_eq!(alg.loewy_length(), 1);
        assert_eq!(alg.dimension(), 2);
    }

    #[test]
    fn free_loop_is_not_admissible() {
        let f = PrimeField::new(2).unwrap();
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let err = BoundQuiverAlgebra::build(q, vec![], f, 6).unwrap_err();
        assert_eq!(err, Error::NotAdmissible(6));
    }

    #[test]
    fn relation_validation() {
        let f = PrimeField::new(2).unwrap();
        let q = Quiver::new(
            &["1", "2"],
            &[("a", "1", "2"), ("b", "2", "2"), ("c", "1", "2")],
        )
        .unwrap();
        let short = Relation::monomial(&f, q.path("a").unwrap());
        assert!(matches!(
            BoundQuiverAlgebra::build(q.clone(), vec![short], f, 6),
            Err(Error::RelationDegreeTooLow(_))
        ));
        let mixed = Relation::new(vec![
            (1, q.path("a.b").unwrap()),
            (1, q.path("c.b.b").unwrap()),
        ]);
        assert!(matches!(
            BoundQuiverAlgebra::build(q.clone(), vec![mixed], f, 6),
            Err(Error::InhomogeneousRelation(_))
        ));
        let q2 = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let nonpar = Relation::new(vec![
            (1, q2.path("a.b").unwrap()),
            (1, q2.path("b.a").unwrap()),
        ]);
        assert!(matches!(
            BoundQuiverAlgebra::build(q2, vec![nonpar], f, 6),
            Err(Error::NonParallelRelation(_))
        ));
        assert!(matches!(q.path("b.a"), Err(Error::InvalidQuiver(_))));
    }

    #[test]
    fn opposite_is_involutive() {
        let f = PrimeField::new(2).unwrap();
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let alg = BoundQuiverAlgebra::build(q, vec![], f, 8).unwrap();
        let op = alg.opposite();
        assert_eq!(op.dimension(), 3);
        assert_eq!(op.quiver().arrows()[0].source, 1);
        let opop = op.opposite();
        assert_eq!(opop.basis(), alg.basis());
        let l = loop_algebra(3, 4);
        assert_eq!(l.opposite().basis(), l.basis());
    }

    #[test]
    fn radical_powers() {
        let alg = loop_algebra(3, 4);
        assert_eq!(alg.radical_power_basis(1).len(), 3);
        assert_eq!(alg.radical_power_basis(3).len(), 1);
        assert_eq!(alg.radical_power_basis(4).len(), 0);
        assert_eq!(alg.degree_of(2), 2);
    }
}
