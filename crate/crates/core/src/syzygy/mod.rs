//! Projective covers, syzygies, resolutions and homological dimensions.

mod exact;
mod scan;

use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::Result;
use crate::field::Field;
use crate::io::ReportValue;
use crate::rep::{
    self, decompose, is_isomorphic_indecomposable, projective_cover, radical, socle, Algebra,
    DecomposeConfig, Morphism, Representation, Submodule,
};

pub use exact::{
    horseshoe, strip_projective, ExactSequence, ProjectiveSplitting, ShortExactSequence,
};
pub use scan::{syzygy_scan, ScanConfig, SyzygyCatalog};

/// Default cutoff for projective, injective and global dimensions.
pub const DEFAULT_CUTOFF: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomologyConfig {
    pub cutoff: usize,
    /// Syzygies larger than this stop the computation with `Exceeds`.
    pub dim_cap: usize,
    pub decompose: DecomposeConfig,
}

impl Default for HomologyConfig {
    fn default() -> Self {
        HomologyConfig {
            cutoff: DEFAULT_CUTOFF,
            dim_cap: 2048,
            decompose: DecomposeConfig::default(),
        }
    }
}

impl HomologyConfig {
    pub fn with_cutoff(cutoff: usize) -> Self {
        HomologyConfig {
            cutoff,
            ..Default::default()
        }
    }
}

/// Evidence that a dimension is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfiniteCertificate {
    /// An indecomposable summand `X` of some syzygy reappears as a summand of
    /// `Ω^period(X)`.
    SummandCycle { period: usize },
    /// Over a selfinjective algebra every non-projective module has
    /// infinite projective dimension.
    SelfinjectiveNonProjective,
}

impl std::fmt::Display for InfiniteCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InfiniteCertificate::SummandCycle { period } => {
                write!(f, "periodic summand, period {period}")
            }
            InfiniteCertificate::SelfinjectiveNonProjective => {
                write!(f, "non-projective over a selfinjective algebra")
            }
        }
    }
}

/// A projective, injective or global dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomDim {
    Finite(usize),
    Infinite(InfiniteCertificate),
    /// Not decided within the cutoff.
    Exceeds(usize),
}

impl HomDim {
    pub fn finite(&self) -> Option<usize> {
        match self {
            HomDim::Finite(n) => Some(*n),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, HomDim::Finite(_))
    }

    /// Supremum of two dimensions.
    pub fn max(self, other: HomDim) -> HomDim {
        match (self, other) {
            (HomDim::Infinite(c), _) | (_, HomDim::Infinite(c)) => HomDim::Infinite(c),
            (HomDim::Exceeds(c), _) | (_, HomDim::Exceeds(c)) => HomDim::Exceeds(c),
            (HomDim::Finite(a), HomDim::Finite(b)) => HomDim::Finite(a.max(b)),
        }
    }

    /// Integers for finite values; `">C"` otherwise.
    pub fn to_report(&self, cutoff: usize) -> ReportValue {
        match self {
            HomDim::Finite(n) => ReportValue::Int(*n as i64),
            _ => ReportValue::Exceeds(cutoff),
        }
    }

    pub fn certificate(&self) -> Option<InfiniteCertificate> {
        match self {
            HomDim::Infinite(c) => Some(*c),
            _ => None,
        }
    }
}

impl std::fmt::Display for HomDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomDim::Finite(n) => write!(f, "{n}"),
            HomDim::Infinite(c) => write!(f, "infinite ({c})"),
            HomDim::Exceeds(c) => write!(f, ">{c}"),
        }
    }
}

/// Dimensions of the indecomposable projectives `e_i Λ`.
pub fn projective_dims<F: Field>(alg: &BoundQuiverAlgebra<F>) -> Vec<usize> {
    let q = alg.quiver();
    let mut out = vec![0; q.num_vertices()];
    for w in alg.basis() {
        out[w.source(q)] += 1;
    }
    out
}

/// Multiplicities of the simples in `top M`.
pub fn top_multiplicities<F: Field>(m: &Representation<F>) -> Vec<usize> {
    let r = radical(m);
    m.dims().iter().zip(r.dims()).map(|(a, b)| a - b).collect()
}

/// `M` is projective iff its projective cover has the same dimension.
pub fn is_projective<F: Field>(m: &Representation<F>) -> bool {
    let pdims = projective_dims(m.algebra());
    let cover: usize = top_multiplicities(m)
        .iter()
        .zip(&pdims)
        .map(|(t, p)| t * p)
        .sum();
    cover == m.total_dim()
}

pub fn is_injective<F: Field>(m: &Representation<F>) -> bool {
    is_projective(&m.dual())
}

/// `Ω¹(M)` with its inclusion into the projective cover, and the cover.
pub fn syzygy_step<F: Field>(
    m: &Representation<F>,
) -> (Representation<F>, Morphism<F>, rep::ProjectiveCover<F>) {
    let cover = projective_cover(m);
    let n = m.dims().len();
    let ker =
        Submodule::from_bases_unchecked((0..n).map(|v| cover.epi.map(v).nullspace()).collect());
    let (k, incl) = ker.to_module(&cover.module);
    (k, incl, cover)
}

/// `Ω^n(M)`.
pub fn syzygy<F: Field>(m: &Representation<F>, n: usize) -> Representation<F> {
    let mut cur = m.clone();
    for _ in 0..n {
        if cur.is_zero() {
            break;
        }
        cur = syzygy_step(&cur).0;
    }
    cur
}

/// `Ω^{-n}(M) = D Ω^n_{Λ^op}(D M)`.
pub fn cosyzygy<F: Field>(m: &Representation<F>, n: usize) -> Representation<F> {
    syzygy(&m.dual(), n).dual_into(m.algebra())
}

/// A projective resolution `… -> P_1 -> P_0 -> M -> 0`.
#[derive(Debug, Clone)]
pub struct Resolution<F: Field> {
    pub module: Representation<F>,
    pub terms: Vec<Representation<F>>,
    /// `multiplicities[i][v]` copies of `P(v)` in term `i`.
    pub multiplicities: Vec<Vec<usize>>,
    /// `differentials[0]: P_0 -> M`, `differentials[i]: P_i -> P_{i-1}`.
    pub differentials: Vec<Morphism<F>>,
    /// True when the resolution continues past the computed terms.
    pub truncated: bool,
}

pub type MinimalResolution<F> = Resolution<F>;

impl<F: Field> Resolution<F> {
    pub fn length(&self) -> usize {
        self.terms.len()
    }

    /// Exact at `M` and at every computed term; the last term is only
    /// checked for injectivity when the resolution is complete.
    pub fn is_exact(&self) -> bool {
        let d = &self.differentials;
        if d.is_empty() {
            return self.module.is_zero();
        }
        if !d[0].is_surjective() {
            return false;
        }
        for i in 1..d.len() {
            if !d[i].then(&d[i - 1]).is_zero() {
                return false;
            }
            let ker_dim: usize = d[i - 1].source().total_dim() - d[i - 1].rank();
            if ker_dim != d[i].rank() {
                return false;
            }
        }
        self.truncated || d.last().unwrap().is_injective()
    }

    /// Every differential `P_i -> P_{i-1}` lands in `rad P_{i-1}`.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().skip(1).all(|d| {
            let r = radical(d.target());
            let img = Submodule::full(d.source()).image_under(d);
            r.contains(&img)
        })
    }
}

/// Minimal projective resolution with at most `max_terms` terms.
pub fn minimal_resolution<F: Field>(
    m: &Representation<F>,
    max_terms: usize,
) -> MinimalResolution<F> {
    let mut terms = Vec::new();
    let mut multiplicities = Vec::new();
    let mut differentials: Vec<Morphism<F>> = Vec::new();
    let mut cur = m.clone();
    let mut prev_incl: Option<Morphism<F>> = None;
    let nv = m.dims().len();
    while !cur.is_zero() && terms.len() < max_terms {
        let (k, incl, cover) = syzygy_step(&cur);
        let d = match &prev_incl {
            None => cover.epi.clone(),
            Some(i) => cover.epi.then(i),
        };
        let mut mult = vec![0; nv];
        for &g in &cover.layout.gens {
            mult[g] += 1;
        }
        terms.push(cover.module.clone());
        multiplicities.push(mult);
        differentials.push(d);
        prev_incl = Some(incl);
        cur = k;
    }
    MinimalResolution {
        module: m.clone(),
        terms,
        multiplicities,
        differentials,
        truncated: !cur.is_zero(),
    }
}

/// `pd M`, deciding infinity by cycles among indecomposable summands of
/// syzygies where decomposition is available.
pub fn proj_dimension<F: Field>(m: &Representation<F>, cfg: &HomologyConfig) -> HomDim {
    if is_projective(m) {
        return HomDim::Finite(0);
    }
    let alg = m.algebra();
    if is_selfinjective(alg) {
        let probe = HomologyConfig {
            cutoff: cfg.cutoff.min(4),
            ..*cfg
        };
        return match SummandGraph::new(&probe).pd(m) {
            Some(HomDim::Infinite(c)) => HomDim::Infinite(c),
            _ => HomDim::Infinite(InfiniteCertificate::SelfinjectiveNonProjective),
        };
    }
    if let Some(d) = SummandGraph::new(cfg).pd(m) {
        return d;
    }
    iterate_pd(m, cfg)
}

/// Plain iteration of `Ω` without isomorphism tests.
fn iterate_pd<F: Field>(m: &Representation<F>, cfg: &HomologyConfig) -> HomDim {
    let mut cur = m.clone();
    for k in 0..=cfg.cutoff {
        if is_projective(&cur) {
            return HomDim::Finite(k);
        }
        if cur.total_dim() > cfg.dim_cap {
            break;
        }
        cur = syzygy_step(&cur).0;
    }
    HomDim::Exceeds(cfg.cutoff)
}

/// Graph on isomorphism classes of non-projective indecomposables with an
/// edge `X -> Y` when `Y` is a summand of `Ω X`; `pd X = 1 + max pd Y`.
struct SummandGraph<'a, F: Field> {
    cfg: &'a HomologyConfig,
    classes: Vec<Representation<F>>,
    succ: Vec<Option<Vec<usize>>>,
    memo: Vec<Option<HomDim>>,
}

enum Visit {
    Done(HomDim),
    Cycle(usize),
}

impl<'a, F: Field> SummandGraph<'a, F> {
    fn new(cfg: &'a HomologyConfig) -> Self {
        SummandGraph {
            cfg,
            classes: Vec::new(),
            succ: Vec::new(),
            memo: Vec::new(),
        }
    }

    /// `None` when decomposition is unavailable (infinite field or undecided).
    fn pd(&mut self, m: &Representation<F>) -> Option<HomDim> {
        let roots = self.summand_classes(m)?;
        let mut best = HomDim::Finite(0);
        let mut stack = Vec::new();
        for r in roots {
            match self.visit(r, 0, &mut stack)? {
                Visit::Done(d) => best = best.max(d),
                Visit::Cycle(_) => unreachable!("stack empty at root"),
            }
        }
        Some(best)
    }

    fn class_of(&mut self, x: &Representation<F>) -> usize {
        for (i, c) in self.classes.iter().enumerate() {
            if c.dims() == x.dims() && is_isomorphic_indecomposable(c, x) {
                return i;
            }
        }
        self.classes.push(x.clone());
        self.succ.push(None);
        self.memo.push(None);
        self.classes.len() - 1
    }

    fn summand_classes(&mut self, m: &Representation<F>) -> Option<Vec<usize>> {
        m.field().order()?;
        let d = decompose(m, &self.cfg.decompose).ok()?;
        let mut out = Vec::new();
        for c in &d.classes {
            let x = &d.summands[c.representative()].module;
            if !is_projective(x) {
                let id = self.class_of(x);
                if !out.contains(&id) {
                    out.push(id);
                }
            }
        }
        Some(out)
    }

    fn visit(&mut self, x: usize, depth: usize, stack: &mut Vec<usize>) -> Option<Visit> {
        if let Some(pos) = stack.iter().position(|&s| s == x) {
            return Some(Visit::Cycle(stack.len() - pos));
        }
        if let Some(d) = self.memo[x] {
            return Some(Visit::Done(d));
        }
        if depth >= self.cfg.cutoff || self.classes[x].total_dim() > self.cfg.dim_cap {
            return Some(Visit::Done(HomDim::Exceeds(self.cfg.cutoff)));
        }
        if self.succ[x].is_none() {
            let omega = syzygy_step(&self.classes[x].clone()).0;
            let s = self.summand_classes(&omega)?;
            self.succ[x] = Some(s);
        }
        stack.push(x);
        let mut result = HomDim::Finite(1);
        for y in self.succ[x].clone().unwrap() {
            match self.visit(y, depth + 1, stack)? {
                Visit::Cycle(period) => {
                    result = HomDim::Infinite(InfiniteCertificate::SummandCycle { period });
                    break;
                }
                Visit::Done(HomDim::Finite(n)) => result = result.max(HomDim::Finite(n + 1)),
                Visit::Done(other) => result = result.max(other),
            }
        }
        stack.pop();
        // Exceeds depends on the depth at which it was reached; only cache
        // depth-independent answers.
        if !matches!(result, HomDim::Exceeds(_)) {
            self.memo[x] = Some(result);
        }
        Some(Visit::Done(result))
    }
}

/// Projective dimensions of all simples, by vertex.
pub fn simple_pds<F: Field>(alg: &Algebra<F>, cfg: &HomologyConfig) -> Vec<HomDim> {
    (0..alg.num_vertices())
        .map(|v| proj_dimension(&rep::simple(alg, v), cfg))
        .collect()
}

/// `gldim Λ`, the supremum of the projective dimensions of the simples.
pub fn global_dimension<F: Field>(alg: &Algebra<F>, cfg: &HomologyConfig) -> HomDim {
    simple_pds(alg, cfg)
        .into_iter()
        .fold(HomDim::Finite(0), HomDim::max)
}

/// `id M = pd_{Λ^op}(D M)`.
pub fn inj_dimension<F: Field>(m: &Representation<F>, cfg: &HomologyConfig) -> HomDim {
    proj_dimension(&m.dual(), cfg)
}

/// Every indecomposable projective has a simple socle `S(j)` and the
/// dimension of `I(j)`.
pub fn is_selfinjective<F: Field>(alg: &Arc<BoundQuiverAlgebra<F>>) -> bool {
    *alg.selfinjective_cache().get_or_init(|| {
        let op = alg.opposite();
        let inj_dims = projective_dims(&op);
        (0..alg.num_vertices()).all(|i| {
            let p = rep::projective(alg, i);
            let soc = socle(&p).dims();
            if soc.iter().sum::<usize>() != 1 {
                return false;
            }
            let j = soc.iter().position(|&d| d == 1).unwrap();
            p.total_dim() == inj_dims[j]
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GorensteinReport {
    pub selfinjective: bool,
    /// Injective dimension of `Λ` as a left module.
    pub left_id: HomDim,
    /// Injective dimension of `Λ_Λ`.
    pub right_id: HomDim,
}

impl GorensteinReport {
    /// `Some(n)` when both self-injective dimensions equal `n`.
    pub fn gorenstein_dimension(&self) -> Option<usize> {
        match (self.left_id, self.right_id) {
            (HomDim::Finite(a), HomDim::Finite(b)) if a == b => Some(a),
            _ => None,
        }
    }
}

pub fn self_injectivity_and_gorenstein<F: Field>(
    alg: &Algebra<F>,
    cfg: &HomologyConfig,
) -> GorensteinReport {
    let op = alg.opposite();
    let n = alg.num_vertices();
    // id Λ_Λ = max pd_{Λ^op} D(e_i Λ); id _ΛΛ = max pd_Λ D(Λ^op e_i) = max pd I(i).
    let right_id = (0..n)
        .map(|i| proj_dimension(&rep::projective(alg, i).dual_into(&op), cfg))
        .fold(HomDim::Finite(0), HomDim::max);
    let left_id = (0..n)
        .map(|i| proj_dimension(&rep::injective(alg, i), cfg))
        .fold(HomDim::Finite(0), HomDim::max);
    GorensteinReport {
        selfinjective: is_selfinjective(alg),
        left_id,
        right_id,
    }
}

/// The part of `M` without projective summands, as a direct sum of the
/// non-projective indecomposable summands.
pub fn remove_projective_summands<F: Field>(
    m: &Representation<F>,
    cfg: &DecomposeConfig,
) -> Result<Representation<F>> {
    let d = decompose(m, cfg)?;
    let parts: Vec<Representation<F>> = d
        .summands
        .into_iter()
        .map(|s| s.module)
        .filter(|x| !is_projective(x))
        .collect();
    Ok(Representation::direct_sum_all(m.algebra(), &parts))
}

#[cfg(test)]
mod tests;
