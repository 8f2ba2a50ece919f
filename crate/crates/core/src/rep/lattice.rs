//! Brute-force enumeration over finite fields: vectors, subspaces and the
//! full submodule lattice of small modules.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

use super::{Representation, Submodule};

/// All vectors of `F_q^d` in a fixed order (`None` for infinite fields or
/// when there are more than `cap`).
pub fn all_vectors<F: Field>(f: &F, d: usize, cap: u64) -> Option<Vec<Vec<F::Elem>>> {
    let q = f.order()?;
    let total = q.checked_pow(d as u32)?;
    if total > cap {
        return None;
    }
    Some(
        (0..total)
            .map(|mut idx| {
                (0..d)
                    .map(|_| {
                        let e = f.element(idx % q);
                        idx /= q;
                        e
                    })
                    .collect()
            })
            .collect(),
    )
}

/// Canonical key of a submodule: reduced row echelon form of each basis.
pub fn submodule_key<F: Field>(s: &Submodule<F>) -> Vec<Vec<F::Elem>> {
    s.bases()
        .iter()
        .map(|b| {
            let t = b.transpose();
            let ech = t.echelon();
            let r = ech.pivots.len();
            let mut flat = vec![ech.rref.field().from_i64(r as i64)];
            for i in 0..r {
                flat.extend_from_slice(ech.rref.row(i));
            }
            flat
        })
        .collect()
}

/// Element sets of subspaces of `F_q^d`, as bitsets over the base-`q`
/// codes of the vectors.
#[derive(Debug, Clone)]
pub struct VectorCoder<F: Field> {
    field: F,
    q: u64,
    index: HashMap<F::Elem, u64>,
}

pub type VectorSet = Vec<Vec<u64>>;

impl<F: Field> VectorCoder<F> {
    pub fn new(field: &F) -> Result<Self> {
        let q = field.order().ok_or(Error::RationalFieldUnsupported)?;
        let index = (0..q).map(|i| (field.element(i), i)).collect();
        Ok(VectorCoder {
            field: field.clone(),
            q,
            index,
        })
    }

    fn words(&self, d: usize) -> usize {
        (self.q.pow(d as u32) as usize).div_ceil(64)
    }

    fn encode(&self, v: &[F::Elem]) -> u64 {
        v.iter()
            .rev()
            .fold(0, |acc, e| acc * self.q + self.index[e])
    }

    fn add(&self, mut a: u64, mut b: u64) -> u64 {
        if self.q == 2 {
            return a ^ b;
        }
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.q + b % self.q) % self.q) * place;
            a /= self.q;
            b /= self.q;
            place *= self.q;
        }
        out
    }

    /// Every vector in the column span of `basis`.
    pub fn span(&self, basis: &Matrix<F>) -> Vec<u64> {
        let (d, r) = basis.shape();
        let mut bits = vec![0u64; self.words(d)];
        for mut c in 0..self.q.pow(r as u32) {
            let coeffs: Vec<F::Elem> = (0..r)
                .map(|_| {
                    let e = self.field.element(c % self.q);
                    c /= self.q;
                    e
                })
                .collect();
            let code = self.encode(&basis.mul_vec(&coeffs));
            bits[(code / 64) as usize] |= 1 << (code % 64);
        }
        bits
    }

    pub fn submodule(&self, s: &Submodule<F>) -> VectorSet {
        s.bases().iter().map(|b| self.span(b)).collect()
    }

    /// The element set of `U + C` from those of `U` and `C`.
    fn sum(&self, u: &VectorSet, c: &VectorSet) -> VectorSet {
        u.iter()
            .zip(c)
            .map(|(a, b)| {
                let xs = members(a);
                let ys = members(b);
                let mut out = vec![0u64; a.len()];
                for &x in &xs {
                    for &y in &ys {
                        let z = self.add(x, y);
                        out[(z / 64) as usize] |= 1 << (z % 64);
                    }
                }
                out
            })
            .collect()
    }
}

fn members(bits: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for (w, &word) in bits.iter().enumerate() {
        let mut x = word;
        while x != 0 {
            let t = x.trailing_zeros() as u64;
            out.push(w as u64 * 64 + t);
            x &= x - 1;
        }
    }
    out
}

/// `u ⊆ w` for element sets.
pub fn set_contains(w: &VectorSet, u: &VectorSet) -> bool {
    w.iter()
        .zip(u)
        .all(|(a, b)| a.iter().zip(b).all(|(x, y)| y & !x == 0))
}

/// Every submodule of `m` (at most `cap` of them) with its element set,
/// sorted by total dimension.
pub fn submodule_lattice<F: Field>(
    m: &Representation<F>,
    cap: usize,
) -> Result<Vec<(Submodule<F>, VectorSet)>> {
    let f = m.field();
    let coder = VectorCoder::new(f)?;
    let vec_cap = 1 << 16;
    let mut cyclic: Vec<(Submodule<F>, VectorSet)> = Vec::new();
    let mut seen = HashSet::new();
    for v in 0..m.dims().len() {
        let vecs = all_vectors(f, m.dim(v), vec_cap)
            .ok_or_else(|| Error::CapExceeded(format!("too many vectors at vertex {v}")))?;
        for x in vecs {
            if x.iter().all(|e| f.is_zero(e)) {
                continue;
            }
            let mut gens: Vec<Matrix<F>> =
                m.dims().iter().map(|&d| Matrix::zeros(f, d, 0)).collect();
            gens[v] = Matrix::from_columns(f, m.dim(v), &[x]);
            let s = Submodule::generated_by(m, &gens);
            let set = coder.submodule(&s);
            if seen.insert(set.clone()) {
                cyclic.push((s, set));
            }
        }
    }
    let zero = Submodule::zero(m);
    let zero_set = coder.submodule(&zero);
    let mut keys = HashSet::from([zero_set.clone()]);
    let mut all = vec![(zero, zero_set)];
    let mut start = 0;
    while start < all.len() {
        let end = all.len();
        for i in start..end {
            for (c, cset) in &cyclic {
                if set_contains(&all[i].1, cset) {
                    continue;
                }
                let set = coder.sum(&all[i].1, cset);
                if keys.contains(&set) {
                    continue;
                }
                if all.len() >= cap {
                    return Err(Error::CapExceeded(format!("more than {cap} submodules")));
                }
                keys.insert(set.clone());
                let s = all[i].0.sum(c);
                all.push((s, set));
            }
        }
        start = end;
    }
    all.sort_by_key(|(s, _)| s.total_dim());
    Ok(all)
}

/// Every submodule of `m`, at most `cap` of them, sorted by total dimension.
pub fn enumerate_submodules<F: Field>(
    m: &Representation<F>,
    cap: usize,
) -> Result<Vec<Submodule<F>>> {
    Ok(submodule_lattice(m, cap)?
        .into_iter()
        .map(|(s, _)| s)
        .collect())
}
