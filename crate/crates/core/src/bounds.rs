//! Upper bounds for the derived dimension and the Igusa-Todorov dimension
//! computed from `LL`, `gldim`, `pd V` and `ℓℓ^{t_V}`, plus certificate
//! checks for (m, n)-Igusa-Todorov modules.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::io::ReportValue;
use crate::rep::{
    add_membership, hom_basis, Algebra, DecomposeConfig, Morphism, Representation, Submodule,
};
use crate::syzygy::{simple_pds, syzygy, ExactSequence, HomDim, HomologyConfig};
use crate::torsion::{algebra_layer_length, SetPd, SimpleSet};

/// Inputs shared by all bound formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundInputs {
    /// `ℓℓ^{t_V}(Λ_Λ)`.
    pub ll: usize,
    pub pd_v: SetPd,
    pub loewy_length: usize,
    pub gldim: HomDim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Value(i64),
    NotApplicable(String),
}

impl BoundValue {
    pub fn value(&self) -> Option<i64> {
        match self {
            BoundValue::Value(v) => Some(*v),
            BoundValue::NotApplicable(_) => None,
        }
    }

    pub fn to_report(&self) -> ReportValue {
        match self {
            BoundValue::Value(v) => ReportValue::Int(*v),
            BoundValue::NotApplicable(r) => ReportValue::Text(format!("n/a({r})")),
        }
    }
}

/// The bound formulas, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Loewy,
    GlobalDimension,
    LayerProduct,
    LayerSum,
    LayerMax,
    LayerIt,
}

impl BoundKind {
    pub const ALL: [BoundKind; 6] = [
        BoundKind::Loewy,
        BoundKind::GlobalDimension,
        BoundKind::LayerProduct,
        BoundKind::LayerSum,
        BoundKind::LayerMax,
        BoundKind::LayerIt,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::Loewy => "loewy",
            BoundKind::GlobalDimension => "gldim",
            BoundKind::LayerProduct => "layer_product",
            BoundKind::LayerSum => "layer_sum",
            BoundKind::LayerMax => "layer_max",
            BoundKind::LayerIt => "layer_it",
        }
    }

    pub fn formula(&self) -> &'static str {
        match self {
            BoundKind::Loewy => "LL - 1",
            BoundKind::GlobalDimension => "gldim",
            BoundKind::LayerProduct => "(pd V + 2)(ll + 1) - 2",
            BoundKind::LayerSum => "2(pd V + ll) + 1",
            BoundKind::LayerMax => "max{2 ll + pd V - 1, pd V + 3}",
            BoundKind::LayerIt => "2 max{ll - 2, 0} + pd V + 2",
        }
    }

    /// Evaluates the formula exactly; `pd ∅ = -1` is used as is.
    pub fn evaluate(&self, inp: &BoundInputs) -> BoundValue {
        let ll = inp.ll as i64;
        let pd = match (self, inp.pd_v) {
            (BoundKind::Loewy | BoundKind::GlobalDimension, _) => 0,
            (_, SetPd::Value(p)) => p,
            (_, SetPd::Unbounded(HomDim::Exceeds(_))) => {
                return BoundValue::NotApplicable("pd V exceeds cutoff".into())
            }
            (_, SetPd::Unbounded(_)) => return BoundValue::NotApplicable("infinite pd V".into()),
        };
        let v = match self {
            BoundKind::Loewy => inp.loewy_length as i64 - 1,
            BoundKind::GlobalDimension => match inp.gldim {
                HomDim::Finite(g) => g as i64,
                HomDim::Exceeds(_) => {
                    return BoundValue::NotApplicable("gldim exceeds cutoff".into())
                }
                HomDim::Infinite(_) => return BoundValue::NotApplicable("infinite gldim".into()),
            },
            BoundKind::LayerProduct => (pd + 2) * (ll + 1) - 2,
            BoundKind::LayerSum => 2 * (pd + ll) + 1,
            BoundKind::LayerMax => (2 * ll + pd - 1).max(pd + 3),
            BoundKind::LayerIt => 2 * (ll - 2).max(0) + pd + 2,
        };
        BoundValue::Value(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub kind: BoundKind,
    pub value: BoundValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub v: SimpleSet,
    pub inputs: BoundInputs,
    pub entries: Vec<BoundEntry>,
    pub best: Option<i64>,
}

impl BoundReport {
    pub fn from_inputs(v: SimpleSet, inputs: BoundInputs) -> Self {
        let entries: Vec<BoundEntry> = BoundKind::ALL
            .iter()
            .map(|&kind| BoundEntry {
                kind,
                value: kind.evaluate(&inputs),
            })
            .collect();
        let best = entries.iter().filter_map(|e| e.value.value()).min();
        BoundReport {
            v,
            inputs,
            entries,
            best,
        }
    }

    pub fn entry(&self, kind: BoundKind) -> &BoundValue {
        &self
            .entries
            .iter()
            .find(|e| e.kind == kind)
            .expect("all kinds present")
            .value
    }

    /// Re-evaluates every entry from the recorded inputs.
    pub fn recomputes(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.kind.evaluate(&self.inputs) == e.value)
            && self.best == self.entries.iter().filter_map(|e| e.value.value()).min()
    }

    pub fn to_report(&self, cutoff: usize) -> ReportValue {
        let inputs = ReportValue::record(vec![
            ("ll_tV", ReportValue::Int(self.inputs.ll as i64)),
            ("pd_V", self.inputs.pd_v.to_report(cutoff)),
            ("LL", ReportValue::Int(self.inputs.loewy_length as i64)),
            ("gldim", self.inputs.gldim.to_report(cutoff)),
        ]);
        let mut fields = vec![("inputs".to_string(), inputs)];
        for e in &self.entries {
            fields.push((
                e.kind.name().to_string(),
                ReportValue::record(vec![
                    ("formula", ReportValue::Text(e.kind.formula().into())),
                    ("value", e.value.to_report()),
                ]),
            ));
        }
        fields.push((
            "best".to_string(),
            self.best
                .map_or(ReportValue::Text("n/a".into()), ReportValue::Int),
        ));
        fields.push((
            "recomputes".to_string(),
            ReportValue::Bool(self.recomputes()),
        ));
        ReportValue::record(fields)
    }
}

/// Per-algebra data reused across choices of `V`.
pub struct BoundContext<F: Field> {
    pub alg: Algebra<F>,
    pub cfg: HomologyConfig,
    pub simple_pds: Vec<HomDim>,
    pub gldim: HomDim,
}

impl<F: Field> BoundContext<F> {
    pub fn new(alg: &Algebra<F>, cfg: &HomologyConfig) -> Self {
        let simple_pds = simple_pds(alg, cfg);
        let gldim = simple_pds
            .iter()
            .copied()
            .fold(HomDim::Finite(0), HomDim::max);
        BoundContext {
            alg: alg.clone(),
            cfg: *cfg,
            simple_pds,
            gldim,
        }
    }

    pub fn pd_of_set(&self, v: &SimpleSet) -> SetPd {
        if v.is_empty() {
            return SetPd::Value(-1);
        }
        match v
            .iter()
            .map(|i| self.simple_pds[i])
            .fold(HomDim::Finite(0), HomDim::max)
        {
            HomDim::Finite(n) => SetPd::Value(n as i64),
            other => SetPd::Unbounded(other),
        }
    }

    /// Vertices whose simple has finite projective dimension.
    pub fn finite_pd_vertices(&self) -> Vec<usize> {
        (0..self.simple_pds.len())
            .filter(|&i| self.simple_pds[i].is_finite())
            .collect()
    }

    pub fn report(&self, v: &SimpleSet) -> BoundReport {
        let inputs = BoundInputs {
            ll: algebra_layer_length(&self.alg, v),
            pd_v: self.pd_of_set(v),
            loewy_length: self.alg.loewy_length(),
            gldim: self.gldim,
        };
        BoundReport::from_inputs(v.clone(), inputs)
    }
}

pub fn derived_dim_bounds<F: Field>(
    alg: &Algebra<F>,
    v: &SimpleSet,
    cfg: &HomologyConfig,
) -> BoundReport {
    BoundContext::new(alg, cfg).report(v)
}

/// `max{ℓℓ^{t_V}(Λ) - 2, 0}`.
pub fn itdim_upper<F: Field>(alg: &Algebra<F>, v: &SimpleSet) -> usize {
    itdim_upper_from_ll(algebra_layer_length(alg, v))
}

pub fn itdim_upper_from_ll(ll: usize) -> usize {
    ll.saturating_sub(2)
}

/// `2m + max{1, n}`.
pub fn mn_it_bound(m: u64, n: u64) -> u64 {
    2 * m + n.max(1)
}

/// Largest number of subsets searched exhaustively.
pub const EXHAUSTIVE_SUBSETS: u64 = 1 << 20;

/// The `V` among simples of finite projective dimension minimizing the best
/// bound, ties broken towards the lexicographically least vertex list.
pub fn best_v_search<F: Field>(alg: &Algebra<F>, cfg: &HomologyConfig) -> (SimpleSet, BoundReport) {
    best_v_search_in(&BoundContext::new(alg, cfg))
}

pub fn best_v_search_in<F: Field>(ctx: &BoundContext<F>) -> (SimpleSet, BoundReport) {
    let finite = ctx.finite_pd_vertices();
    let key = |r: &BoundReport| (r.best.unwrap_or(i64::MAX), r.v.iter().collect::<Vec<_>>());
    if (1u64 << finite.len().min(63)) <= EXHAUSTIVE_SUBSETS {
        let reports: Vec<BoundReport> = (0..1u64 << finite.len())
            .into_par_iter()
            .map(|mask| {
                let v = SimpleSet::new(
                    finite
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &x)| x),
                );
                ctx.report(&v)
            })
            .collect();
        let best = reports
            .into_iter()
            .min_by_key(key)
            .expect("at least the empty set");
        return (best.v.clone(), best);
    }
    // Greedy: start from all finite-pd simples and drop single vertices
    // while that improves the bound.
    let mut current = ctx.report(&SimpleSet::new(finite.iter().copied()));
    loop {
        let candidates: Vec<BoundReport> = current
            .v
            .iter()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&drop| ctx.report(&SimpleSet::new(current.v.iter().filter(|&x| x != drop))))
            .collect();
        match candidates.into_iter().min_by_key(key) {
            Some(c) if key(&c) < key(&current) => current = c,
            _ => return (current.v.clone(), current),
        }
    }
}

/// `(m, n)` together with the candidate module `V`.
#[derive(Debug, Clone)]
pub struct ItCertificate<F: Field> {
    pub m: usize,
    pub n: usize,
    pub module: Representation<F>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleVerdict {
    Verified,
    Refuted(String),
    Undecided(String),
}

#[derive(Debug, Clone)]
pub struct SampleResult<F: Field> {
    pub verdict: SampleVerdict,
    /// `0 -> V_m -> … -> V_0 -> Ω^n(M) -> 0` when verified.
    pub witness: Option<ExactSequence<F>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ItVerdict {
    VerifiedOnSamples,
    Refuted,
    Undecided,
}

#[derive(Debug, Clone)]
pub struct ItCheck<F: Field> {
    pub verdict: ItVerdict,
    pub samples: Vec<SampleResult<F>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ItCaps {
    /// Largest multiplicity of `V` in a single approximation term.
    pub multiplicity: usize,
    pub decompose: DecomposeConfig,
}

impl Default for ItCaps {
    fn default() -> Self {
        ItCaps {
            multiplicity: 64,
            decompose: DecomposeConfig::default(),
        }
    }
}

/// Checks the certificate on each sample by building right
/// `add V`-approximations of `Ω^n(M)` and of the successive kernels.
///
/// `m = 0` reduces to add-membership and is decided. For `m ≥ 1` a
/// missing epimorphism from `add V` refutes; a final kernel outside
/// `add V` leaves the sample undecided, since other epimorphisms might
/// succeed.
pub fn check_it_certificate<F: Field>(
    cert: &ItCertificate<F>,
    samples: &[Representation<F>],
    caps: &ItCaps,
) -> Result<ItCheck<F>> {
    if cert.module.field().order().is_none() {
        return Err(Error::RationalFieldUnsupported);
    }
    let mut results = Vec::new();
    for s in samples {
        s.check_same_algebra(&cert.module)?;
        let x = syzygy(s, cert.n);
        results.push(check_sample(&x, cert, caps));
    }
    let verdict = if results
        .iter()
        .any(|r| matches!(r.verdict, SampleVerdict::Refuted(_)))
    {
        ItVerdict::Refuted
    } else if results.iter().all(|r| r.verdict == SampleVerdict::Verified) {
        ItVerdict::VerifiedOnSamples
    } else {
        ItVerdict::Undecided
    };
    Ok(ItCheck {
        verdict,
        samples: results,
    })
}

fn check_sample<F: Field>(
    x: &Representation<F>,
    cert: &ItCertificate<F>,
    caps: &ItCaps,
) -> SampleResult<F> {
    let undecided = |e: Error| SampleResult {
        verdict: SampleVerdict::Undecided(e.to_string()),
        witness: None,
    };
    let v = &cert.module;
    // maps[i]: V_i -> V_{i-1} (or -> X for i = 0), built from the right end.
    let mut maps: Vec<Morphism<F>> = Vec::new();
    let mut kernel = x.clone();
    let mut kernel_incl: Option<Morphism<F>> = None;
    for step in 0..=cert.m {
        let last = step == cert.m;
        if last {
            match add_membership(&kernel, v, &caps.decompose) {
                Ok(true) => {}
                Ok(false) if cert.m == 0 => {
                    return SampleResult {
                        verdict: SampleVerdict::Refuted("syzygy is not in add V".into()),
                        witness: None,
                    }
                }
                Ok(false) => {
                    return SampleResult {
                        verdict: SampleVerdict::Undecided(format!(
                            "kernel after {} approximations is not in add V",
                            cert.m
                        )),
                        witness: None,
                    }
                }
                Err(e) => return undecided(e),
            }
            let to_prev = match &kernel_incl {
                None => Morphism::identity(&kernel),
                Some(i) => i.clone(),
            };
            maps.push(to_prev);
            break;
        }
        let homs = hom_basis(v, &kernel);
        if homs.len() > caps.multiplicity {
            return undecided(Error::CapExceeded(format!(
                "{} copies of V needed",
                homs.len()
            )));
        }
        let approx = match homs.iter().cloned().reduce(|a, b| a.copair(&b)) {
            Some(a) => a,
            None => Morphism::zero(&Representation::zero(kernel.algebra()), &kernel),
        };
        if !approx.is_surjective() {
            return SampleResult {
                verdict: SampleVerdict::Refuted(format!(
                    "no epimorphism from add V at step {step}"
                )),
                witness: None,
            };
        }
        maps.push(match &kernel_incl {
            None => approx.clone(),
            Some(i) => approx.then(i),
        });
        let nv = kernel.dims().len();
        let ker =
            Submodule::from_bases_unchecked((0..nv).map(|i| approx.map(i).nullspace()).collect());
        let (k, incl) = ker.to_module(approx.source());
        kernel = k;
        kernel_incl = Some(incl);
    }
    maps.reverse();
    // Drop a leading zero term so the sequence starts injectively.
    while maps.len() > 1 && maps[0].source().is_zero() {
        maps.remove(0);
    }
    let witness = if x.is_zero() {
        None
    } else {
        ExactSequence::new(maps).ok()
    };
    SampleResult {
        verdict: SampleVerdict::Verified,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{projective, simple};
    use crate::testing::*;

    fn cfg() -> HomologyConfig {
        HomologyConfig::default()
    }

    #[test]
    fn semisimple_bounds() {
        let a = alg(2, &["1", "2"], &[], &[]);
        let r = derived_dim_bounds(&a, &SimpleSet::all(2), &cfg());
        assert_eq!(r.entry(BoundKind::Loewy), &BoundValue::Value(0));
        assert_eq!(r.best, Some(0));
        let (v, best) = best_v_search(&a, &cfg());
        assert!(v.is_empty());
        assert_eq!(best.best, Some(0));
        assert_eq!(itdim_upper(&a, &SimpleSet::empty()), 0);
    }

    #[test]
    fn a2_bounds() {
        let a = a2(2);
        let r = derived_dim_bounds(&a, &SimpleSet::new([1]), &cfg());
        assert_eq!(r.entry(BoundKind::Loewy), &BoundValue::Value(1));
        assert_eq!(r.entry(BoundKind::GlobalDimension), &BoundValue::Value(1));
        assert_eq!(r.inputs.ll, 1);
        assert_eq!(r.entry(BoundKind::LayerIt), &BoundValue::Value(2));
        assert_eq!(r.best, Some(1));
        assert!(r.recomputes());
        let (_, best) = best_v_search(&a, &cfg());
        assert_eq!(best.best, Some(1));
    }

    #[test]
    fn exterior_bounds() {
        let e = exterior2(3);
        let r = derived_dim_bounds(&e, &SimpleSet::empty(), &cfg());
        assert_eq!(r.entry(BoundKind::Loewy), &BoundValue::Value(2));
        assert!(matches!(
            r.entry(BoundKind::GlobalDimension),
            BoundValue::NotApplicable(_)
        ));
        assert_eq!(r.entry(BoundKind::LayerIt), &BoundValue::Value(3));
        assert_eq!(itdim_upper(&e, &SimpleSet::empty()), 1);
        let (v, best) = best_v_search(&e, &cfg());
        assert!(v.is_empty());
        assert_eq!(best.best, Some(2));
    }

    #[test]
    fn mn_bound_arithmetic() {
        assert_eq!(mn_it_bound(1, 5), 7);
        assert_eq!(mn_it_bound(0, 0), 1);
        assert_eq!(mn_it_bound(2, 3), 7);
        for m in 0..5 {
            for n in 0..5 {
                assert!(mn_it_bound(m + 1, n) >= mn_it_bound(m, n));
                assert!(mn_it_bound(m, n + 1) >= mn_it_bound(m, n));
            }
        }
    }

    #[test]
    fn it_certificates() {
        let caps = ItCaps::default();
        let a = a2(2);
        let v = simple(&a, 0)
            .direct_sum(&simple(&a, 1))
            .direct_sum(&projective(&a, 0));
        let samples = vec![simple(&a, 0), simple(&a, 1), projective(&a, 0)];
        let c = check_it_certificate(
            &ItCertificate {
                m: 0,
                n: 0,
                module: v,
            },
            &samples,
            &caps,
        )
        .unwrap();
        assert_eq!(c.verdict, ItVerdict::VerifiedOnSamples);

        let k = kronecker(2);
        let samples = vec![simple(&k, 0), simple(&k, 1)];
        let cert = ItCertificate {
            m: 0,
            n: 1,
            module: simple(&k, 1),
        };
        assert_eq!(
            check_it_certificate(&cert, &samples, &caps)
                .unwrap()
                .verdict,
            ItVerdict::VerifiedOnSamples
        );

        let t = truncated(2, 2);
        let cert = ItCertificate {
            m: 0,
            n: 1,
            module: Representation::zero(&t),
        };
        assert_eq!(
            check_it_certificate(&cert, &[simple(&t, 0)], &caps)
                .unwrap()
                .verdict,
            ItVerdict::Refuted
        );

        // Every module over k[x]/x^2 has an add(S ⊕ Λ)-resolution of length 1.
        let v = simple(&t, 0).direct_sum(&projective(&t, 0));
        let cert = ItCertificate {
            m: 1,
            n: 0,
            module: v,
        };
        let c = check_it_certificate(&cert, &[simple(&t, 0), projective(&t, 0)], &caps).unwrap();
        assert_eq!(c.verdict, ItVerdict::VerifiedOnSamples);
        assert!(c
            .samples
            .iter()
            .all(|s| s.witness.as_ref().is_some_and(|w| w.check().is_ok())));
    }
}
