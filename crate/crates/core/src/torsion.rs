//! The Serre class `𝔉(V)` of modules filtered by a set `V` of simples, its
//! torsion radical `t_V`, and the layer length `ℓℓ^{t_V}`.

use std::collections::BTreeSet;

use crate::field::Field;
use crate::io::ReportValue;
use crate::linalg::Matrix;
use crate::rep::{self, radical_of, radical_series, Algebra, Morphism, Representation, Submodule};
use crate::syzygy::{proj_dimension, HomDim, HomologyConfig};

/// A set of simples, identified by vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SimpleSet {
    vertices: BTreeSet<usize>,
}

impl SimpleSet {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        SimpleSet {
            vertices: vertices.into_iter().collect(),
        }
    }
    pub fn empty() -> Self {
        Self::default()
    }
    pub fn all(n: usize) -> Self {
        Self::new(0..n)
    }
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
    pub fn len(&self) -> usize {
        self.vertices.len()
    }
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }
    /// `V′`, the simples not in `V`.
    pub fn complement(&self, n: usize) -> SimpleSet {
        Self::new((0..n).filter(|v| !self.contains(*v)))
    }
}

/// Multiplicity of each simple as a composition factor, read off the
/// radical layers.
pub fn composition_factors<F: Field>(m: &Representation<F>) -> Vec<usize> {
    let mut out = vec![0; m.dims().len()];
    for layer in radical_series(m).layer_dims() {
        for (o, d) in out.iter_mut().zip(layer) {
            *o += d;
        }
    }
    out
}

/// `M ∈ 𝔉(V)`: every composition factor lies in `V`.
pub fn in_filtration_class<F: Field>(m: &Representation<F>, v: &SimpleSet) -> bool {
    composition_factors(m)
        .iter()
        .enumerate()
        .all(|(i, &c)| c == 0 || v.contains(i))
}

/// `t_V(N)` for a submodule `N` of `m`, as a submodule of `m`.
fn torsion_of<F: Field>(m: &Representation<F>, n: &Submodule<F>, v: &SimpleSet) -> Submodule<F> {
    let mut cur = n.clone();
    loop {
        // Keep rad N plus the V′-part of top N.
        let rad = radical_of(m, &cur);
        let bases: Vec<Matrix<F>> = (0..m.dims().len())
            .map(|i| {
                if v.contains(i) {
                    rad.basis(i).clone()
                } else {
                    cur.basis(i).clone()
                }
            })
            .collect();
        let next = Submodule::from_bases_unchecked(bases);
        if next.total_dim() == cur.total_dim() {
            return cur;
        }
        cur = next;
    }
}

/// The smallest submodule `t_V(M)` with `M / t_V(M) ∈ 𝔉(V)`, with its
/// inclusion.
pub fn torsion_radical<F: Field>(
    m: &Representation<F>,
    v: &SimpleSet,
) -> (Submodule<F>, Representation<F>, Morphism<F>) {
    let t = torsion_of(m, &Submodule::full(m), v);
    let (module, incl) = t.to_module(m);
    (t, module, incl)
}

/// The sequence `M_0 = M, M_{i+1} = rad t_V(M_i)` with dimension vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerTrace {
    /// `(dim M_i, dim t_V(M_i))` for each step; the last torsion part is zero.
    pub steps: Vec<(Vec<usize>, Vec<usize>)>,
    pub value: usize,
}

impl LayerTrace {
    pub fn to_report(&self) -> ReportValue {
        let vec = |d: &Vec<usize>| ReportValue::Vector(d.iter().map(|&x| x as i64).collect());
        ReportValue::record(vec![
            ("value", ReportValue::Int(self.value as i64)),
            (
                "steps",
                ReportValue::List(
                    self.steps
                        .iter()
                        .map(|(m, t)| {
                            ReportValue::record(vec![("module", vec(m)), ("torsion", vec(t))])
                        })
                        .collect(),
                ),
            ),
        ])
    }
}

/// `ℓℓ^{t_V}(M) = min { i : t_V F^i(M) = 0 }` with `F = rad ∘ t_V`.
pub fn t_layer_length<F: Field>(m: &Representation<F>, v: &SimpleSet) -> LayerTrace {
    let mut steps = Vec::new();
    let mut cur = Submodule::full(m);
    loop {
        let t = torsion_of(m, &cur, v);
        steps.push((cur.dims(), t.dims()));
        if t.is_zero() {
            return LayerTrace {
                value: steps.len() - 1,
                steps,
            };
        }
        cur = radical_of(m, &t);
    }
}

/// `ℓℓ^{t_V}(Λ_Λ)`, the maximum over the indecomposable projectives.
pub fn algebra_layer_length<F: Field>(alg: &Algebra<F>, v: &SimpleSet) -> usize {
    (0..alg.num_vertices())
        .map(|i| t_layer_length(&rep::projective(alg, i), v).value)
        .max()
        .unwrap_or(0)
}

/// Projective dimension of a set of simples: `-1` for the empty set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetPd {
    Value(i64),
    Unbounded(HomDim),
}

impl SetPd {
    pub fn value(&self) -> Option<i64> {
        match self {
            SetPd::Value(n) => Some(*n),
            SetPd::Unbounded(_) => None,
        }
    }

    pub fn to_report(&self, cutoff: usize) -> ReportValue {
        match self {
            SetPd::Value(n) => ReportValue::Int(*n),
            SetPd::Unbounded(_) => ReportValue::Exceeds(cutoff),
        }
    }
}

pub fn pd_of_set<F: Field>(alg: &Algebra<F>, v: &SimpleSet, cfg: &HomologyConfig) -> SetPd {
    let mut acc = HomDim::Finite(0);
    if v.is_empty() {
        return SetPd::Value(-1);
    }
    for i in v.iter() {
        acc = acc.max(proj_dimension(&rep::simple(alg, i), cfg));
    }
    match acc {
        HomDim::Finite(n) => SetPd::Value(n as i64),
        other => SetPd::Unbounded(other),
    }
}
