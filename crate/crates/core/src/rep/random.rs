use rand::Rng;

use crate::field::Field;
use crate::linalg::Matrix;
use crate::rep::{free_module, Algebra, Representation, Submodule};

fn random_elem<F: Field, R: Rng>(f: &F, rng: &mut R) -> F::Elem {
    match f.order() {
        Some(q) => f.element(rng.gen_range(0..q)),
        None => f.from_i64(rng.gen_range(-3..=3)),
    }
}

/// A random quotient of a free module on at most `max_gens` generators,
/// cut down by random relations until its dimension is at most `max_dim`.
pub fn random_module<F: Field, R: Rng>(
    alg: &Algebra<F>,
    rng: &mut R,
    max_gens: usize,
    max_dim: usize,
) -> Representation<F> {
    let n = alg.num_vertices();
    let k = rng.gen_range(1..=max_gens.max(1));
    let gens: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
    let (free, _) = free_module(alg, &gens);
    let f = alg.field();
    let mut rels: Vec<Matrix<F>> = free
        .dims()
        .iter()
        .map(|&d| Matrix::zeros(f, d, 0))
        .collect();
    let extra = rng.gen_range(0..=k);
    let mut added = 0;
    loop {
        let sub = Submodule::generated_by(&free, &rels);
        let (q, _) = sub.quotient(&free);
        if (q.total_dim() <= max_dim && added >= extra) || q.is_zero() {
            return q;
        }
        let live: Vec<usize> = (0..n).filter(|&v| free.dim(v) > 0).collect();
        let v = live[rng.gen_range(0..live.len())];
        let col: Vec<F::Elem> = (0..free.dim(v)).map(|_| random_elem(f, rng)).collect();
        rels[v] = rels[v].hstack(&Matrix::from_columns(f, free.dim(v), &[col]));
        added += 1;
    }
}
