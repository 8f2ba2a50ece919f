use std::collections::HashMap;

use crate::field::Field;
use crate::linalg::{self, Matrix};

use super::series::radical;
use super::{Algebra, Morphism, Representation};

/// Layout of a free module `⊕_g e_{v_g} Λ`: which generator and basis path
/// sits at each coordinate of each vertex space.
#[derive(Clone, Debug)]
pub struct FreeLayout {
    pub gens: Vec<usize>,
    /// `entries[j]` lists `(generator, basis path)` for the coordinates of vertex `j`.
    pub entries: Vec<Vec<(usize, usize)>>,
    position: HashMap<(usize, usize), usize>,
}

impl FreeLayout {
    /// Coordinate of `(generator, basis path)` within its vertex space.
    pub fn position(&self, gen: usize, path: usize) -> Option<usize> {
        self.position.get(&(gen, path)).copied()
    }

    /// Vertex and coordinate of the generator itself (its trivial path).
    pub fn generator_position<F: Field>(&self, alg: &Algebra<F>, gen: usize) -> (usize, usize) {
        let v = self.gens[gen];
        let e = alg
            .basis_index(&crate::algebra::PathWord::Trivial(v))
            .expect("trivial path");
        (v, self.position(gen, e).expect("generator is present"))
    }
}

/// `⊕_g e_{v_g} Λ` for the generator vertices `gens`.
pub fn free_module<F: Field>(alg: &Algebra<F>, gens: &[usize]) -> (Representation<F>, FreeLayout) {
    let q = alg.quiver();
    let n = q.num_vertices();
    let mut entries: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut position = HashMap::new();
    for (g, &v) in gens.iter().enumerate() {
        for (b, w) in alg.basis().iter().enumerate() {
            if w.source(q) == v {
                let t = w.target(q);
                position.insert((g, b), entries[t].len());
                entries[t].push((g, b));
            }
        }
    }
    let dims: Vec<usize> = entries.iter().map(|e| e.len()).collect();
    let f = alg.field();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
            for (col, &(g, b)) in entries[a.source].iter().enumerate() {
                for (b2, c) in alg.right_action(ai, b) {
                    let row = position[&(g, *b2)];
                    m.set(row, col, c.clone());
                }
            }
            m
        })
        .collect();
    let layout = FreeLayout {
        gens: gens.to_vec(),
        entries,
        position,
    };
    (Representation::from_parts(alg.clone(), dims, maps), layout)
}

impl FreeLayout {
    /// The morphism from the free module sending generator `g` to
    /// `images[g] ∈ M_{v_g}`. `paths` are the basis path matrices of `m`.
    pub fn map_to<F: Field>(
        &self,
        free: &Representation<F>,
        m: &Representation<F>,
        paths: &[Matrix<F>],
        images: &[Vec<F::Elem>],
    ) -> Morphism<F> {
        let maps = self
            .entries
            .iter()
            .enumerate()
            .map(|(j, ents)| {
                let cols: Vec<Vec<F::Elem>> = ents
                    .iter()
                    .map(|&(g, b)| paths[b].mul_vec(&images[g]))
                    .collect();
                Matrix::from_columns(m.field(), m.dim(j), &cols)
            })
            .collect();
        Morphism::from_parts(free.clone(), m.clone(), maps)
    }
}

pub fn projective<F: Field>(alg: &Algebra<F>, v: usize) -> Representation<F> {
    free_module(alg, &[v]).0
}

/// `Λ_Λ = ⊕_i e_i Λ`.
pub fn regular_module<F: Field>(alg: &Algebra<F>) -> Representation<F> {
    let gens: Vec<usize> = (0..alg.num_vertices()).collect();
    free_module(alg, &gens).0
}

pub fn simple<F: Field>(alg: &Algebra<F>, v: usize) -> Representation<F> {
    let mut dims = vec![0; alg.num_vertices()];
    dims[v] = 1;
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(alg.field(), dims[a.target], dims[a.source]))
        .collect();
    Representation::from_parts(alg.clone(), dims, maps)
}

/// `D(Λ e_v)`, the injective envelope of the simple at `v`.
pub fn injective<F: Field>(alg: &Algebra<F>, v: usize) -> Representation<F> {
    projective(&alg.opposite(), v).dual_into(alg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleKind {
    Simple,
    Projective,
    Injective,
}

pub fn standard_module<F: Field>(
    alg: &Algebra<F>,
    kind: ModuleKind,
    v: usize,
) -> Representation<F> {
    match kind {
        ModuleKind::Simple => simple(alg, v),
        ModuleKind::Projective => projective(alg, v),
        ModuleKind::Injective => injective(alg, v),
    }
}

/// A projective cover `P -> M` built from a basis of a complement of
/// `rad M` at every vertex.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F: Field> {
    pub module: Representation<F>,
    pub layout: FreeLayout,
    pub epi: Morphism<F>,
    /// `(vertex, vector in M_vertex)` for each generator.
    pub generators: Vec<(usize, Vec<F::Elem>)>,
}

pub fn projective_cover<F: Field>(m: &Representation<F>) -> ProjectiveCover<F> {
    let rad = radical(m);
    let mut generators = Vec::new();
    for v in 0..m.dims().len() {
        let comp = linalg::complement(rad.basis(v));
        for c in 0..comp.cols() {
            generators.push((v, comp.column(c)));
        }
    }
    let gens: Vec<usize> = generators.iter().map(|(v, _)| *v).collect();
    let (module, layout) = free_module(m.algebra(), &gens);
    let paths = m.basis_path_matrices();
    let images: Vec<Vec<F::Elem>> = generators.iter().map(|(_, x)| x.clone()).collect();
    let epi = layout.map_to(&module, m, &paths, &images);
    debug_assert!(epi.is_surjective());
    ProjectiveCover {
        module,
        layout,
        epi,
        generators,
    }
}
