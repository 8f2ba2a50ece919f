use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

use super::hom::hom_basis;
use super::series::{radical, radical_series, socle};
use super::{Morphism, Representation, Submodule};

/// Search parameters for splitting modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecomposeConfig {
    pub seed: u64,
    /// Largest number of elements of `End(M)/rad`-images enumerated when
    /// certifying locality exhaustively.
    pub exhaustive_budget: u64,
    pub random_tries: usize,
}

impl Default for DecomposeConfig {
    fn default() -> Self {
        DecomposeConfig {
            seed: 0,
            exhaustive_budget: 1 << 14,
            random_tries: 24,
        }
    }
}

/// Why a summand is known to be indecomposable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    SimpleTop,
    SimpleSocle,
    /// The endomorphisms induce only scalars on the top.
    ScalarTop,
    /// Every element of the top image of `End` was checked to be invertible
    /// or nilpotent.
    Exhaustive {
        elements: u64,
    },
}

#[derive(Debug, Clone)]
pub struct Summand<F: Field> {
    pub module: Representation<F>,
    /// Split inclusion of the summand into the decomposed module.
    pub inclusion: Morphism<F>,
    pub certificate: Certificate,
}

/// Summands grouped by isomorphism; `members[0]` is the representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    pub members: Vec<usize>,
}

impl IsoClass {
    pub fn representative(&self) -> usize {
        self.members[0]
    }
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug, Clone)]
pub struct DecompositionResult<F: Field> {
    pub module: Representation<F>,
    pub summands: Vec<Summand<F>>,
    pub classes: Vec<IsoClass>,
}

impl<F: Field> DecompositionResult<F> {
    /// The isomorphism `⊕ summands -> M` assembled from the inclusions.
    pub fn witness(&self) -> Morphism<F> {
        let mut it = self.summands.iter().map(|s| s.inclusion.clone());
        match it.next() {
            None => Morphism::zero(&Representation::zero(self.module.algebra()), &self.module),
            Some(first) => it.fold(first, |acc, g| acc.copair(&g)),
        }
    }

    pub fn is_indecomposable(&self) -> bool {
        self.summands.len() == 1
    }

    /// One module per isomorphism class.
    pub fn representatives(&self) -> Vec<&Representation<F>> {
        self.classes
            .iter()
            .map(|c| &self.summands[c.representative()].module)
            .collect()
    }
}

/// Krull-Schmidt decomposition of `m` with locality certificates.
///
/// Splits come from Fitting decompositions `M = ker φ^N ⊕ im φ^N` of
/// endomorphisms that are neither nilpotent nor invertible. Such an element
/// exists exactly when `M` is decomposable, and it is visible on the image of
/// `End(M)` in `End(top M)`, which is searched deterministically (basis
/// elements, seeded random combinations, then exhaustively within budget).
pub fn decompose<F: Field>(
    m: &Representation<F>,
    cfg: &DecomposeConfig,
) -> Result<DecompositionResult<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut summands = Vec::new();
    split_into(m, &Morphism::identity(m), cfg, &mut rng, &mut summands)?;
    summands.sort_by(|a: &Summand<F>, b: &Summand<F>| {
        (a.module.total_dim(), a.module.dims()).cmp(&(b.module.total_dim(), b.module.dims()))
    });
    let mut classes: Vec<IsoClass> = Vec::new();
    for (i, s) in summands.iter().enumerate() {
        let found = classes.iter_mut().find(|c| {
            is_isomorphic_indecomposable(&summands[c.representative()].module, &s.module)
        });
        match found {
            Some(c) => c.members.push(i),
            None => classes.push(IsoClass { members: vec![i] }),
        }
    }
    Ok(DecompositionResult {
        module: m.clone(),
        summands,
        classes,
    })
}

fn split_into<F: Field>(
    m: &Representation<F>,
    incl: &Morphism<F>,
    cfg: &DecomposeConfig,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Summand<F>>,
) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    match find_split(m, cfg, rng)? {
        Split::Local(certificate) => {
            out.push(Summand {
                module: m.clone(),
                inclusion: incl.clone(),
                certificate,
            });
        }
        Split::Parts(a, b) => {
            for part in [a, b] {
                let (sub, sub_incl) = part.to_module(m);
                split_into(&sub, &sub_incl.then(incl), cfg, rng, out)?;
            }
        }
    }
    Ok(())
}

enum Split<F: Field> {
    Local(Certificate),
    Parts(Submodule<F>, Submodule<F>),
}

fn find_split<F: Field>(
    m: &Representation<F>,
    cfg: &DecomposeConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Split<F>> {
    let f = m.field();
    let rad = radical(m);
    if m.total_dim() - rad.total_dim() == 1 {
        return Ok(Split::Local(Certificate::SimpleTop));
    }
    if socle(m).total_dim() == 1 {
        return Ok(Split::Local(Certificate::SimpleSocle));
    }
    let ends = hom_basis(m, m);

    // Image of End(M) in End(top M), flattened per vertex.
    let ((_, proj), sections) = rad.quotient_with_section(m);
    let top_of = |phi: &Morphism<F>| -> Vec<Matrix<F>> {
        (0..m.dims().len())
            .map(|v| proj.map(v).mul(phi.map(v)).mul(&sections[v]))
            .collect()
    };
    let flat: Vec<Vec<F::Elem>> = ends
        .iter()
        .map(|phi| {
            top_of(phi)
                .iter()
                .flat_map(|t| (0..t.rows()).flat_map(move |r| t.row(r).to_vec()))
                .collect()
        })
        .collect();
    let len = flat.first().map_or(0, |v| v.len());
    let pivots = Matrix::from_columns(f, len, &flat).echelon().pivots;
    let lifts: Vec<&Morphism<F>> = pivots.iter().map(|&p| &ends[p]).collect();
    if lifts.len() <= 1 {
        return Ok(Split::Local(Certificate::ScalarTop));
    }

    for phi in &ends {
        if let Some((a, b)) = fitting_split(m, phi) {
            return Ok(Split::Parts(a, b));
        }
    }
    for _ in 0..cfg.random_tries {
        let phi = random_combination(f, &ends, rng);
        if let Some((a, b)) = fitting_split(m, &phi) {
            return Ok(Split::Parts(a, b));
        }
    }

    let Some(q) = f.order() else {
        return Err(Error::RationalFieldUnsupported);
    };
    let k = lifts.len() as u32;
    let total = match q.checked_pow(k) {
        Some(t) if t <= cfg.exhaustive_budget => t,
        _ => return Err(Error::Undecided(cfg.exhaustive_budget)),
    };
    let tops: Vec<Vec<Matrix<F>>> = lifts.iter().map(|phi| top_of(phi)).collect();
    for idx in 1..total {
        let coeffs = digits(idx, q, k as usize);
        let mut bar: Vec<Matrix<F>> = tops[0]
            .iter()
            .map(|t| Matrix::zeros(f, t.rows(), t.cols()))
            .collect();
        for (c, t) in coeffs.iter().zip(&tops) {
            if *c == 0 {
                continue;
            }
            let e = f.element(*c);
            for (b, tv) in bar.iter_mut().zip(t) {
                *b = b.add(&tv.scale(&e));
            }
        }
        if is_invertible_or_nilpotent(&bar) {
            continue;
        }
        let mut phi = Morphism::zero(m, m);
        for (c, l) in coeffs.iter().zip(&lifts) {
            if *c != 0 {
                phi = phi.add(&l.scale(&f.element(*c)));
            }
        }
        let (a, b) =
            fitting_split(m, &phi).expect("non-nilpotent non-invertible endomorphism splits");
        return Ok(Split::Parts(a, b));
    }
    Ok(Split::Local(Certificate::Exhaustive { elements: total }))
}

fn digits(mut idx: u64, base: u64, k: usize) -> Vec<u64> {
    let mut out = vec![0; k];
    for d in out.iter_mut() {
        *d = idx % base;
        idx /= base;
    }
    out
}

fn random_combination<F: Field>(f: &F, basis: &[Morphism<F>], rng: &mut ChaCha8Rng) -> Morphism<F> {
    let mut acc = Morphism::zero(basis[0].source(), basis[0].target());
    for phi in basis {
        let c = match f.order() {
            Some(q) => f.element(rng.gen_range(0..q)),
            None => f.from_i64(rng.gen_range(-3..=3)),
        };
        if !f.is_zero(&c) {
            acc = acc.add(&phi.scale(&c));
        }
    }
    acc
}

/// Block-diagonal endomorphism given by per-vertex blocks.
fn is_invertible_or_nilpotent<F: Field>(blocks: &[Matrix<F>]) -> bool {
    if blocks.iter().all(|b| b.is_invertible()) {
        return true;
    }
    blocks.iter().all(|b| b.pow(b.rows()).is_zero())
}

/// `(ker φ^N, im φ^N)` when both are nonzero.
fn fitting_split<F: Field>(
    m: &Representation<F>,
    phi: &Morphism<F>,
) -> Option<(Submodule<F>, Submodule<F>)> {
    let powers: Vec<Matrix<F>> = phi.maps().iter().map(|p| p.pow(p.rows())).collect();
    let ker = Submodule::from_bases_unchecked(powers.iter().map(|p| p.nullspace()).collect());
    let im = Submodule::from_bases_unchecked(powers.iter().map(|p| p.column_space()).collect());
    if ker.is_zero() || im.is_zero() {
        return None;
    }
    debug_assert!(ker.is_submodule_of(m) && im.is_submodule_of(m));
    Some((ker, im))
}

/// Isomorphism test for modules already known to be indecomposable: some
/// basis element of `Hom(X, Y)` is invertible iff `X ≅ Y`, since the
/// non-isomorphisms between isomorphic indecomposables form a subspace.
pub fn is_isomorphic_indecomposable<F: Field>(
    x: &Representation<F>,
    y: &Representation<F>,
) -> bool {
    if x.dims() != y.dims() {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    hom_basis(x, y).iter().any(|h| h.is_isomorphism())
}

/// General isomorphism test: invariants, then a search for an invertible
/// homomorphism, then comparison of decompositions.
pub fn is_isomorphic<F: Field>(
    x: &Representation<F>,
    y: &Representation<F>,
    cfg: &DecomposeConfig,
) -> Result<bool> {
    x.check_same_algebra(y)?;
    if x.dims() != y.dims() {
        return Ok(false);
    }
    if x.is_zero() {
        return Ok(true);
    }
    if radical_series(x).layer_dims() != radical_series(y).layer_dims() {
        return Ok(false);
    }
    let h = hom_basis(x, y);
    if h.is_empty() {
        return Ok(false);
    }
    if h.iter().any(|g| g.is_isomorphism()) {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_tries {
        if random_combination(x.field(), &h, &mut rng).is_isomorphism() {
            return Ok(true);
        }
    }
    let dx = decompose(x, cfg)?;
    let dy = decompose(y, cfg)?;
    Ok(same_multisets(&dx, &dy))
}

fn same_multisets<F: Field>(a: &DecompositionResult<F>, b: &DecompositionResult<F>) -> bool {
    if a.classes.len() != b.classes.len() {
        return false;
    }
    let mut used = vec![false; b.classes.len()];
    for ca in &a.classes {
        let ra = &a.summands[ca.representative()].module;
        let hit = b.classes.iter().enumerate().find(|(j, cb)| {
            !used[*j]
                && cb.multiplicity() == ca.multiplicity()
                && is_isomorphic_indecomposable(ra, &b.summands[cb.representative()].module)
        });
        match hit {
            Some((j, _)) => used[j] = true,
            None => return false,
        }
    }
    true
}

/// `M ∈ add T`: every indecomposable summand of `M` is a summand of `T`.
pub fn add_membership<F: Field>(
    m: &Representation<F>,
    t: &Representation<F>,
    cfg: &DecomposeConfig,
) -> Result<bool> {
    m.check_same_algebra(t)?;
    if m.is_zero() {
        return Ok(true);
    }
    let dm = decompose(m, cfg)?;
    let dt = decompose(t, cfg)?;
    let reps_t = dt.representatives();
    Ok(dm
        .representatives()
        .iter()
        .all(|x| reps_t.iter().any(|y| is_isomorphic_indecomposable(x, y))))
}
