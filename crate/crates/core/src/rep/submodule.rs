use crate::field::Field;
use crate::linalg::{self, Matrix};

use super::{Morphism, Representation};

/// A submodule of an ambient representation, stored as a column basis of a
/// subspace at every vertex. Bases are kept in column-echelon-free form; use
/// [`Submodule::dims`] rather than comparing bases directly.
#[derive(Clone, Debug)]
pub struct Submodule<F: Field> {
    bases: Vec<Matrix<F>>,
}

impl<F: Field> PartialEq for Submodule<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dims() == other.dims()
            && self
                .bases
                .iter()
                .zip(&other.bases)
                .all(|(a, b)| linalg::contains(a, b))
    }
}

impl<F: Field> Submodule<F> {
    /// Wraps per-vertex bases without checking closure under the arrows.
    pub fn from_bases_unchecked(bases: Vec<Matrix<F>>) -> Self {
        Submodule { bases }
    }

    pub fn zero(m: &Representation<F>) -> Self {
        Submodule {
            bases: m
                .dims()
                .iter()
                .map(|&d| Matrix::zeros(m.field(), d, 0))
                .collect(),
        }
    }

    pub fn full(m: &Representation<F>) -> Self {
        Submodule {
            bases: m
                .dims()
                .iter()
                .map(|&d| Matrix::identity(m.field(), d))
                .collect(),
        }
    }

    /// Smallest submodule containing the given per-vertex vectors.
    pub fn generated_by(m: &Representation<F>, gens: &[Matrix<F>]) -> Self {
        let q = m.algebra().quiver();
        let mut bases: Vec<Matrix<F>> = gens.iter().map(|g| g.column_space()).collect();
        let mut frontier: Vec<Matrix<F>> = bases.clone();
        loop {
            let mut next: Vec<Matrix<F>> = m
                .dims()
                .iter()
                .map(|&d| Matrix::zeros(m.field(), d, 0))
                .collect();
            let mut grew = false;
            for (ai, a) in q.arrows().iter().enumerate() {
                if frontier[a.source].cols() == 0 {
                    continue;
                }
                let img = m.map(ai).mul(&frontier[a.source]);
                for c in 0..img.cols() {
                    let col = img.select_columns(&[c]);
                    if col.is_zero() || linalg::contains(&bases[a.target], &col) {
                        continue;
                    }
                    bases[a.target] = bases[a.target].hstack(&col);
                    next[a.target] = next[a.target].hstack(&col);
                    grew = true;
                }
            }
            if !grew {
                return Submodule { bases };
            }
            frontier = next;
        }
    }

    pub fn basis(&self, v: usize) -> &Matrix<F> {
        &self.bases[v]
    }
    pub fn bases(&self) -> &[Matrix<F>] {
        &self.bases
    }
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.cols()).collect()
    }
    pub fn total_dim(&self) -> usize {
        self.bases.iter().map(|b| b.cols()).sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn is_submodule_of(&self, m: &Representation<F>) -> bool {
        let q = m.algebra().quiver();
        q.arrows().iter().enumerate().all(|(ai, a)| {
            linalg::contains(&self.bases[a.target], &m.map(ai).mul(&self.bases[a.source]))
        })
    }

    pub fn contains(&self, other: &Submodule<F>) -> bool {
        self.bases
            .iter()
            .zip(&other.bases)
            .all(|(a, b)| linalg::contains(a, b))
    }

    pub fn sum(&self, other: &Submodule<F>) -> Submodule<F> {
        Submodule {
            bases: self
                .bases
                .iter()
                .zip(&other.bases)
                .map(|(a, b)| linalg::span_sum(a, b))
                .collect(),
        }
    }

    pub fn intersect(&self, other: &Submodule<F>) -> Submodule<F> {
        Submodule {
            bases: self
                .bases
                .iter()
                .zip(&other.bases)
                .map(|(a, b)| linalg::intersect(a, b))
                .collect(),
        }
    }

    /// The submodule as a representation with its inclusion into `m`.
    pub fn to_module(&self, m: &Representation<F>) -> (Representation<F>, Morphism<F>) {
        let q = m.algebra().quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let img = m.map(ai).mul(&self.bases[a.source]);
                linalg::coordinates(&self.bases[a.target], &img).expect("submodule is closed")
            })
            .collect();
        let sub = Representation::from_parts(m.algebra().clone(), self.dims(), maps);
        let incl = Morphism::from_parts(sub.clone(), m.clone(), self.bases.clone());
        (sub, incl)
    }

    /// `m / self` with the canonical projection.
    pub fn quotient(&self, m: &Representation<F>) -> (Representation<F>, Morphism<F>) {
        self.quotient_with_section(m).0
    }

    /// Quotient, projection, and per-vertex linear sections of the projection.
    pub(crate) fn quotient_with_section(
        &self,
        m: &Representation<F>,
    ) -> ((Representation<F>, Morphism<F>), Vec<Matrix<F>>) {
        let q = m.algebra().quiver();
        let qs: Vec<(Matrix<F>, Matrix<F>)> =
            self.bases.iter().map(linalg::quotient_maps).collect();
        let dims: Vec<usize> = qs.iter().map(|(p, _)| p.rows()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| qs[a.target].0.mul(m.map(ai)).mul(&qs[a.source].1))
            .collect();
        let quo = Representation::from_parts(m.algebra().clone(), dims, maps);
        let proj = Morphism::from_parts(
            m.clone(),
            quo.clone(),
            qs.iter().map(|(p, _)| p.clone()).collect(),
        );
        ((quo, proj), qs.into_iter().map(|(_, s)| s).collect())
    }

    /// Image of this submodule of `f.source()` under `f`.
    pub fn image_under(&self, f: &Morphism<F>) -> Submodule<F> {
        Submodule {
            bases: self
                .bases
                .iter()
                .enumerate()
                .map(|(v, b)| f.map(v).mul(b).column_space())
                .collect(),
        }
    }

    /// Preimage under `f` of this submodule of `f.target()`.
    pub fn preimage_under(&self, f: &Morphism<F>) -> Submodule<F> {
        Submodule {
            bases: self
                .bases
                .iter()
                .enumerate()
                .map(|(v, b)| {
                    let fv = f.map(v);
                    // x with f x in span(b): null space of [f | -b] projected.
                    let field = fv.field();
                    let stacked = fv.hstack(&b.scale(&field.neg(&field.one())));
                    let null = stacked.nullspace();
                    null.sub_matrix(0..fv.cols(), 0..null.cols()).column_space()
                })
                .collect(),
        }
    }
}
