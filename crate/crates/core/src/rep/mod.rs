//! Right modules over a bound quiver algebra, as covariant quiver
//! representations: a vector space per vertex and a matrix per arrow.

mod decompose;
mod factor;
mod hom;
pub mod lattice;
mod random;
mod series;
mod standard;
mod submodule;

use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, PathWord};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

pub use decompose::{
    add_membership, decompose, is_isomorphic, is_isomorphic_indecomposable, Certificate,
    DecomposeConfig, DecompositionResult, IsoClass, Summand,
};
pub use factor::{factor, Factorization};
pub use hom::{hom_basis, hom_basis_by_equations, hom_dimension};
pub use random::random_module;
pub(crate) use series::radical_of;
pub use series::{
    in_radical, radical, radical_series, socle, socle_layer_dims, top, RadicalSeries,
};
pub use standard::{
    free_module, injective, projective, projective_cover, regular_module, simple, standard_module,
    FreeLayout, ModuleKind, ProjectiveCover,
};
pub use submodule::Submodule;

pub type Algebra<F> = Arc<BoundQuiverAlgebra<F>>;

#[derive(Clone)]
pub struct Representation<F: Field> {
    alg: Algebra<F>,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> std::fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Representation{:?}", self.dims)?;
        for (a, m) in self.alg.quiver().arrows().iter().zip(&self.maps) {
            if !m.is_zero() {
                write!(f, " {}={:?}", a.name, m)?;
            }
        }
        Ok(())
    }
}

impl<F: Field> Representation<F> {
    /// Validated constructor: shapes match endpoints and every relation acts
    /// as zero.
    pub fn new(alg: Algebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.num_arrows() {
            return Err(Error::InvalidRepresentation(
                "wrong number of vertices or arrows".into(),
            ));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidRepresentation(format!(
                    "map {} has shape {:?}, expected {:?}",
                    a.name,
                    m.shape(),
                    (dims[a.target], dims[a.source])
                )));
            }
        }
        let rep = Representation {
            alg: alg.clone(),
            dims,
            maps,
        };
        let q = alg.quiver();
        for r in rep.alg.relations() {
            let (s, t) = (r.terms[0].1.source(q), r.terms[0].1.target(q));
            let mut acc = Matrix::zeros(rep.alg.field(), rep.dims[t], rep.dims[s]);
            for (c, w) in &r.terms {
                acc = acc.add(&rep.path_matrix(w).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidRepresentation(format!(
                    "relation {} does not vanish",
                    r.display(rep.alg.field(), q)
                )));
            }
        }
        Ok(rep)
    }

    /// Constructor for internally derived modules whose relations hold by
    /// construction.
    pub(crate) fn from_parts(alg: Algebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        debug_assert!(Self::new(alg.clone(), dims.clone(), maps.clone()).is_ok());
        Representation { alg, dims, maps }
    }

    pub fn zero(alg: &Algebra<F>) -> Self {
        let dims = vec![0; alg.num_vertices()];
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(alg.field(), 0, 0))
            .collect();
        Representation {
            alg: alg.clone(),
            dims,
            maps,
        }
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }
    pub fn field(&self) -> &F {
        self.alg.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn map(&self, arrow: usize) -> &Matrix<F> {
        &self.maps[arrow]
    }
    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || self.alg.same_presentation(&other.alg)
    }

    pub(crate) fn check_same_algebra(&self, other: &Self) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Matrix of the action of a path, `M_{source} -> M_{target}`.
    pub fn path_matrix(&self, w: &PathWord) -> Matrix<F> {
        let q = self.alg.quiver();
        let s = w.source(q);
        let mut acc = Matrix::identity(self.field(), self.dims[s]);
        for &a in w.arrows() {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// Matrices of every algebra basis path acting on this module, indexed
    /// like the algebra basis. Prefix-closed basis lets each be one product.
    pub fn basis_path_matrices(&self) -> Vec<Matrix<F>> {
        let alg = &self.alg;
        let q = alg.quiver();
        let mut out: Vec<Matrix<F>> = Vec::with_capacity(alg.dimension());
        for (b, w) in alg.basis().iter().enumerate() {
            let m = match w {
                PathWord::Trivial(v) => Matrix::identity(self.field(), self.dims[*v]),
                PathWord::Arrows(arrows) if arrows.len() == 1 => self.maps[arrows[0]].clone(),
                PathWord::Arrows(arrows) => {
                    let (last, init) = arrows.split_last().unwrap();
                    let prefix = PathWord::Arrows(init.to_vec());
                    match alg.basis_index(&prefix) {
                        Some(pi) if pi < b => self.maps[*last].mul(&out[pi]),
                        _ => self.path_matrix(w),
                    }
                }
            };
            debug_assert_eq!(m.shape(), (self.dims[w.target(q)], self.dims[w.source(q)]));
            out.push(m);
        }
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        assert!(self.same_algebra(other));
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Representation {
            alg: self.alg.clone(),
            dims,
            maps,
        }
    }

    pub fn direct_sum_all(alg: &Algebra<F>, parts: &[Self]) -> Self {
        parts
            .iter()
            .fold(Self::zero(alg), |acc, p| acc.direct_sum(p))
    }

    /// `M^n`.
    pub fn power(&self, n: usize) -> Self {
        (0..n).fold(Self::zero(&self.alg), |acc, _| acc.direct_sum(self))
    }

    /// The `k`-dual `D M = Hom_k(M, k)`, a module over the opposite algebra.
    pub fn dual(&self) -> Self {
        self.dual_into(&self.alg.opposite())
    }

    /// The dual as a module over `target`, which must be the opposite
    /// algebra of this module's algebra.
    pub fn dual_into(&self, target: &Algebra<F>) -> Self {
        assert!(
            self.alg.is_opposite_of(target),
            "dual needs the opposite algebra"
        );
        let maps = self.maps.iter().map(|m| m.transpose()).collect();
        Representation {
            alg: target.clone(),
            dims: self.dims.clone(),
            maps,
        }
    }

    /// Structural equality of the data (same basis, same matrices).
    pub fn equals(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.dims == other.dims && self.maps == other.maps
    }

    /// Applies a change of basis `g_v: M_v -> k^{d_v}` at every vertex.
    pub fn transport(&self, g: &[Matrix<F>]) -> Self {
        let q = self.alg.quiver();
        let maps = q
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| {
                let ginv = g[a.source]
                    .inverse()
                    .expect("change of basis is invertible");
                g[a.target].mul(m).mul(&ginv)
            })
            .collect();
        Representation {
            alg: self.alg.clone(),
            dims: self.dims.clone(),
            maps,
        }
    }
}

/// A module homomorphism given by one matrix per vertex.
#[derive(Clone)]
pub struct Morphism<F: Field> {
    source: Representation<F>,
    target: Representation<F>,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> std::fmt::Debug for Morphism<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Morphism{:?}->{:?} {:?}",
            self.source.dims, self.target.dims, self.maps
        )
    }
}

impl<F: Field> Morphism<F> {
    /// Validated constructor: every arrow square commutes.
    pub fn new(
        source: Representation<F>,
        target: Representation<F>,
        maps: Vec<Matrix<F>>,
    ) -> Result<Self> {
        source.check_same_algebra(&target)?;
        let n = source.alg.num_vertices();
        if maps.len() != n {
            return Err(Error::InvalidMorphism("wrong number of vertex maps".into()));
        }
        for v in 0..n {
            if maps[v].shape() != (target.dims[v], source.dims[v]) {
                return Err(Error::InvalidMorphism(format!(
                    "vertex {v} map has wrong shape"
                )));
            }
        }
        let m = Morphism {
            source,
            target,
            maps,
        };
        if !m.commutes() {
            return Err(Error::InvalidMorphism(
                "arrow squares do not commute".into(),
            ));
        }
        Ok(m)
    }

    pub(crate) fn from_parts(
        source: Representation<F>,
        target: Representation<F>,
        maps: Vec<Matrix<F>>,
    ) -> Self {
        let m = Morphism {
            source,
            target,
            maps,
        };
        debug_assert!(m.commutes(), "constructed morphism must commute");
        m
    }

    pub fn commutes(&self) -> bool {
        let q = self.source.alg.quiver();
        q.arrows().iter().enumerate().all(|(ai, a)| {
            let lhs = self.target.maps[ai].mul(&self.maps[a.source]);
            let rhs = self.maps[a.target].mul(&self.source.maps[ai]);
            lhs == rhs
        })
    }

    pub fn identity(m: &Representation<F>) -> Self {
        let maps = m
            .dims
            .iter()
            .map(|&d| Matrix::identity(m.field(), d))
            .collect();
        Morphism {
            source: m.clone(),
            target: m.clone(),
            maps,
        }
    }

    pub fn zero(source: &Representation<F>, target: &Representation<F>) -> Self {
        let maps = (0..source.dims.len())
            .map(|v| Matrix::zeros(source.field(), target.dims[v], source.dims[v]))
            .collect();
        Morphism {
            source: source.clone(),
            target: target.clone(),
            maps,
        }
    }

    pub fn source(&self) -> &Representation<F> {
        &self.source
    }
    pub fn target(&self) -> &Representation<F> {
        &self.target
    }
    pub fn map(&self, v: usize) -> &Matrix<F> {
        &self.maps[v]
    }
    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism<F>) -> Morphism<F> {
        assert_eq!(self.target.dims, other.source.dims);
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(f, g)| g.mul(f))
            .collect();
        Morphism {
            source: self.source.clone(),
            target: other.target.clone(),
            maps,
        }
    }

    pub fn add(&self, other: &Morphism<F>) -> Morphism<F> {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(f, g)| f.add(g))
            .collect();
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            maps,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Morphism<F> {
        let maps = self.maps.iter().map(|f| f.scale(c)).collect();
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            maps,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(|m| m.is_invertible())
    }

    pub fn inverse(&self) -> Option<Morphism<F>> {
        let maps = self
            .maps
            .iter()
            .map(|m| m.inverse())
            .collect::<Option<Vec<_>>>()?;
        Some(Morphism {
            source: self.target.clone(),
            target: self.source.clone(),
            maps,
        })
    }

    /// Total rank, summed over vertices.
    pub fn rank(&self) -> usize {
        self.maps.iter().map(|m| m.rank()).sum()
    }

    /// `f ⊕ g : A ⊕ C -> B ⊕ D`.
    pub fn direct_sum(&self, other: &Morphism<F>) -> Morphism<F> {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(f, g)| f.block_diag(g))
            .collect();
        Morphism {
            source: self.source.direct_sum(&other.source),
            target: self.target.direct_sum(&other.target),
            maps,
        }
    }

    /// `(f, g) : A ⊕ C -> B` from `f: A -> B` and `g: C -> B`.
    pub fn copair(&self, other: &Morphism<F>) -> Morphism<F> {
        assert_eq!(self.target.dims, other.target.dims);
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(f, g)| f.hstack(g))
            .collect();
        Morphism::from_parts(
            self.source.direct_sum(&other.source),
            self.target.clone(),
            maps,
        )
    }

    /// `(f; g) : A -> B ⊕ C` from `f: A -> B` and `g: A -> C`.
    pub fn pair(&self, other: &Morphism<F>) -> Morphism<F> {
        assert_eq!(self.source.dims, other.source.dims);
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(f, g)| f.vstack(g))
            .collect();
        Morphism::from_parts(
            self.source.clone(),
            self.target.direct_sum(&other.target),
            maps,
        )
    }

    /// Dual morphism `D N -> D M` over the opposite algebra.
    pub fn dual_into(&self, target_alg: &Algebra<F>) -> Morphism<F> {
        let maps = self.maps.iter().map(|m| m.transpose()).collect();
        Morphism {
            source: self.target.dual_into(target_alg),
            target: self.source.dual_into(target_alg),
            maps,
        }
    }

    /// Replaces source and target by structurally equal modules (used to
    /// re-anchor morphisms after basis-preserving rebuilds).
    pub fn with_ends(&self, source: Representation<F>, target: Representation<F>) -> Morphism<F> {
        assert_eq!(source.dims, self.source.dims);
        assert_eq!(target.dims, self.target.dims);
        Morphism::from_parts(source, target, self.maps.clone())
    }
}

#[cfg(test)]
mod tests;
