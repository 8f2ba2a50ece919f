use crate::field::Field;
use crate::linalg::Matrix;

use super::standard::projective_cover;
use super::{Morphism, Representation};

/// A basis of `Hom_Λ(M, N)`.
///
/// A homomorphism is determined by the images of the top generators of `M`;
/// those images must kill the kernel of the projective cover. The linear
/// system therefore has `Σ_g dim N_{v_g}` unknowns.
pub fn hom_basis<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Vec<Morphism<F>> {
    assert!(
        m.same_algebra(n),
        "hom between modules over different algebras"
    );
    let f = m.field();
    let cover = projective_cover(m);
    let gens = &cover.layout.gens;
    if gens.is_empty() || n.is_zero() {
        return Vec::new();
    }
    let mut offset = Vec::with_capacity(gens.len() + 1);
    offset.push(0);
    for &v in gens {
        offset.push(offset.last().unwrap() + n.dim(v));
    }
    let unknowns = *offset.last().unwrap();
    if unknowns == 0 {
        return Vec::new();
    }
    let npaths = n.basis_path_matrices();

    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (w, ents) in cover.layout.entries.iter().enumerate() {
        if ents.is_empty() || n.dim(w) == 0 {
            continue;
        }
        let ker = cover.epi.map(w).nullspace();
        for k in 0..ker.cols() {
            let mut block = vec![vec![f.zero(); unknowns]; n.dim(w)];
            for (pos, &(g, b)) in ents.iter().enumerate() {
                let z = ker.get(pos, k);
                if f.is_zero(z) {
                    continue;
                }
                let nb = &npaths[b];
                for r in 0..nb.rows() {
                    for c in 0..nb.cols() {
                        let e = nb.get(r, c);
                        if !f.is_zero(e) {
                            let slot = &mut block[r][offset[g] + c];
                            *slot = f.add(slot, &f.mul(z, e));
                        }
                    }
                }
            }
            rows.extend(
                block
                    .into_iter()
                    .filter(|r| r.iter().any(|x| !f.is_zero(x))),
            );
        }
    }
    let system = Matrix::from_row_vecs(f, unknowns, &rows);
    let solutions = system.nullspace();

    let sections: Vec<Matrix<F>> = (0..m.dims().len())
        .map(|j| {
            cover
                .epi
                .map(j)
                .solve(&Matrix::identity(f, m.dim(j)))
                .expect("cover is surjective")
        })
        .collect();

    (0..solutions.cols())
        .map(|s| {
            let sol = solutions.column(s);
            let maps = cover
                .layout
                .entries
                .iter()
                .enumerate()
                .map(|(j, ents)| {
                    let cols: Vec<Vec<F::Elem>> = ents
                        .iter()
                        .map(|&(g, b)| npaths[b].mul_vec(&sol[offset[g]..offset[g + 1]]))
                        .collect();
                    Matrix::from_columns(f, n.dim(j), &cols).mul(&sections[j])
                })
                .collect();
            Morphism::from_parts(m.clone(), n.clone(), maps)
        })
        .collect()
}

pub fn hom_dimension<F: Field>(m: &Representation<F>, n: &Representation<F>) -> usize {
    hom_basis(m, n).len()
}

/// A basis of `Hom_Λ(M, N)` from the full commutativity system
/// `N_a X_i = X_j M_a`. Slower; kept as an independent check.
pub fn hom_basis_by_equations<F: Field>(
    m: &Representation<F>,
    n: &Representation<F>,
) -> Vec<Morphism<F>> {
    let f = m.field();
    let q = m.algebra().quiver();
    let nv = m.dims().len();
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    // X_v is n.dim(v) x m.dim(v), row-major at offset[v].
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dim(v) + c;
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let na = n.map(ai);
        let ma = m.map(ai);
        for r in 0..n.dim(j) {
            for c in 0..m.dim(i) {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..n.dim(i) {
                    let x = na.get(r, k);
                    if !f.is_zero(x) {
                        let slot = &mut row[var(i, k, c)];
                        *slot = f.add(slot, x);
                    }
                }
                for k in 0..m.dim(j) {
                    let x = ma.get(k, c);
                    if !f.is_zero(x) {
                        let slot = &mut row[var(j, r, k)];
                        *slot = f.sub(slot, x);
                    }
                }
                rows.push(row);
            }
        }
    }
    let sols = Matrix::from_row_vecs(f, unknowns, &rows).nullspace();
    (0..sols.cols())
        .map(|s| {
            let col = sols.column(s);
            let maps = (0..nv)
                .map(|v| {
                    Matrix::from_rows(
                        f,
                        n.dim(v),
                        m.dim(v),
                        col[offset[v]..offset[v + 1]].to_vec(),
                    )
                })
                .collect();
            Morphism::from_parts(m.clone(), n.clone(), maps)
        })
        .collect()
}
