use crate::field::Field;
use crate::linalg::{self, Matrix};

use super::{Morphism, Representation, Submodule};

/// `rad N` for a submodule `N` of `m`: the span of arrow images of `N`.
pub(crate) fn radical_of<F: Field>(m: &Representation<F>, n: &Submodule<F>) -> Submodule<F> {
    let q = m.algebra().quiver();
    let mut bases: Vec<Matrix<F>> = m
        .dims()
        .iter()
        .map(|&d| Matrix::zeros(m.field(), d, 0))
        .collect();
    for (ai, a) in q.arrows().iter().enumerate() {
        let img = m.map(ai).mul(n.basis(a.source));
        if !img.is_zero() {
            bases[a.target] = bases[a.target].hstack(&img);
        }
    }
    Submodule::from_bases_unchecked(bases.into_iter().map(|b| b.column_space()).collect())
}

/// `rad M = M·J` as a submodule of `m`.
pub fn radical<F: Field>(m: &Representation<F>) -> Submodule<F> {
    radical_of(m, &Submodule::full(m))
}

/// `soc M`: vectors killed by every arrow.
pub fn socle<F: Field>(m: &Representation<F>) -> Submodule<F> {
    let q = m.algebra().quiver();
    let bases = (0..m.dims().len())
        .map(|v| {
            let outgoing: Vec<usize> = q
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.source == v)
                .map(|(i, _)| i)
                .collect();
            if outgoing.is_empty() {
                return Matrix::identity(m.field(), m.dim(v));
            }
            let stacked = outgoing
                .iter()
                .map(|&ai| m.map(ai).clone())
                .reduce(|a, b| a.vstack(&b))
                .unwrap();
            stacked.nullspace()
        })
        .collect();
    Submodule::from_bases_unchecked(bases)
}

/// `M / rad M` with its projection.
pub fn top<F: Field>(m: &Representation<F>) -> (Representation<F>, Morphism<F>) {
    radical(m).quotient(m)
}

/// The chain `M = rad^0 M ⊇ rad M ⊇ ... ⊇ rad^L M = 0`.
#[derive(Clone, Debug)]
pub struct RadicalSeries<F: Field> {
    pub terms: Vec<Submodule<F>>,
}

impl<F: Field> RadicalSeries<F> {
    pub fn loewy_length(&self) -> usize {
        self.terms.len() - 1
    }

    /// Dimension vectors of the layers `rad^k M / rad^{k+1} M`.
    pub fn layer_dims(&self) -> Vec<Vec<usize>> {
        self.terms
            .windows(2)
            .map(|w| {
                w[0].dims()
                    .iter()
                    .zip(w[1].dims())
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect()
    }
}

pub fn radical_series<F: Field>(m: &Representation<F>) -> RadicalSeries<F> {
    let mut terms = vec![Submodule::full(m)];
    while !terms.last().unwrap().is_zero() {
        let next = radical_of(m, terms.last().unwrap());
        terms.push(next);
    }
    RadicalSeries { terms }
}

/// Dimension vectors of the socle series layers, bottom first.
pub fn socle_layer_dims<F: Field>(m: &Representation<F>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Submodule::zero(m);
    let q = m.algebra().quiver();
    loop {
        // Next term: vectors mapped into `current` by every arrow.
        let bases: Vec<Matrix<F>> = (0..m.dims().len())
            .map(|v| {
                let mut basis = Matrix::identity(m.field(), m.dim(v));
                for (ai, a) in q.arrows().iter().enumerate() {
                    if a.source != v {
                        continue;
                    }
                    let target_sub = current.basis(a.target);
                    let fa = m.map(ai).mul(&basis);
                    let field = m.field();
                    let stacked = fa.hstack(&target_sub.scale(&field.neg(&field.one())));
                    let null = stacked.nullspace();
                    basis = basis
                        .mul(&null.sub_matrix(0..fa.cols(), 0..null.cols()))
                        .column_space();
                }
                basis
            })
            .collect();
        let next = Submodule::from_bases_unchecked(bases);
        if next.total_dim() == current.total_dim() {
            return out;
        }
        out.push(
            next.dims()
                .iter()
                .zip(current.dims())
                .map(|(a, b)| a - b)
                .collect(),
        );
        current = next;
    }
}

/// True when `n` (a submodule of `m`) lies in `rad m`.
pub fn in_radical<F: Field>(m: &Representation<F>, n: &Submodule<F>) -> bool {
    let r = radical(m);
    r.bases()
        .iter()
        .zip(n.bases())
        .all(|(a, b)| linalg::contains(a, b))
}
