use super::*;
use crate::rep::{injective, projective, regular_module, simple, DecomposeConfig};
use crate::testing::*;

fn cfg() -> HomologyConfig {
    HomologyConfig::default()
}

#[test]
fn syzygies_of_small_modules() {
    let a = a2(2);
    assert_eq!(syzygy(&simple(&a, 0), 1).dims(), [0, 1]);
    assert!(syzygy(&projective(&a, 0), 1).is_zero());
    let k = kronecker(2);
    let om = syzygy(&simple(&k, 0), 1);
    assert_eq!(om.dims(), [0, 2]);
    assert!(om.maps().iter().all(|m| m.is_zero()));
    let t = truncated(3, 4);
    for j in 1..4 {
        let quotient = truncated_quotient(&t, j);
        assert_eq!(syzygy(&quotient, 1).dims(), [4 - j]);
        assert_eq!(cosyzygy(&quotient, 1).dims(), [4 - j]);
    }
}

/// `k[x]/x^j` as a module over `k[x]/x^4`.
fn truncated_quotient(
    t: &crate::rep::Algebra<crate::field::PrimeField>,
    j: usize,
) -> Representation<crate::field::PrimeField> {
    let p = projective(t, 0);
    let r = crate::rep::radical_series(&p);
    r.terms[j].quotient(&p).0
}

#[test]
fn cosyzygies() {
    let a = a2(2);
    assert_eq!(cosyzygy(&simple(&a, 1), 1).dims(), [1, 0]);
    for v in 0..2 {
        assert!(cosyzygy(&injective(&a, v), 1).is_zero());
    }
}

#[test]
fn projective_dimensions() {
    let a = a2(2);
    assert_eq!(proj_dimension(&simple(&a, 0), &cfg()), HomDim::Finite(1));
    assert_eq!(
        proj_dimension(&projective(&a, 0), &cfg()),
        HomDim::Finite(0)
    );
    let t = truncated(3, 4);
    assert_eq!(
        proj_dimension(&simple(&t, 0), &cfg()),
        HomDim::Infinite(InfiniteCertificate::SummandCycle { period: 2 })
    );
    let m = monomial_a3(2);
    assert_eq!(proj_dimension(&simple(&m, 0), &cfg()), HomDim::Finite(2));
    assert_eq!(global_dimension(&m, &cfg()), HomDim::Finite(2));
}

#[test]
fn exterior_simple_has_infinite_pd() {
    let e = exterior2(3);
    let d = proj_dimension(&simple(&e, 0), &cfg());
    assert!(matches!(d, HomDim::Infinite(_)));
    assert_eq!(d.to_report(32), crate::io::ReportValue::Exceeds(32));
}

#[test]
fn global_dimension_cutoff() {
    let m = monomial_a3(2);
    assert_eq!(
        global_dimension(&m, &HomologyConfig::with_cutoff(1)),
        HomDim::Exceeds(1)
    );
    assert_eq!(global_dimension(&a3_linear(2), &cfg()), HomDim::Finite(1));
    assert_eq!(
        global_dimension(&alg(2, &["1", "2"], &[], &[]), &cfg()),
        HomDim::Finite(0)
    );
}

#[test]
fn resolutions_are_minimal_and_exact() {
    for a in [kronecker(3), exterior2(3), monomial_a3(2), truncated(2, 3)] {
        let m = regular_module(&a).direct_sum(&simple(&a, 0));
        let r = minimal_resolution(&m, 4);
        assert!(r.is_exact(), "{a:?}");
        assert!(r.is_minimal(), "{a:?}");
        for (i, t) in r.terms.iter().enumerate() {
            assert!(is_projective(t));
            let expected = if i == 0 {
                m.total_dim() + syzygy(&m, 1).total_dim()
            } else {
                t.total_dim()
            };
            assert_eq!(t.total_dim(), expected);
        }
    }
}

#[test]
fn selfinjectivity() {
    assert!(is_selfinjective(&truncated(3, 4)));
    assert!(is_selfinjective(&exterior2(3)));
    assert!(!is_selfinjective(&a2(2)));
    let g = self_injectivity_and_gorenstein(&truncated(3, 4), &cfg());
    assert_eq!(
        (g.left_id, g.right_id),
        (HomDim::Finite(0), HomDim::Finite(0))
    );
    let g = self_injectivity_and_gorenstein(&a2(2), &cfg());
    assert!(!g.selfinjective);
    assert_eq!(g.gorenstein_dimension(), Some(1));
}

#[test]
fn horseshoe_of_a2_sequence() {
    let a = a2(2);
    let p1 = projective(&a, 0);
    let s2 = simple(&a, 1);
    let (sub, incl) = crate::rep::radical(&p1).to_module(&p1);
    assert_eq!(sub.dims(), s2.dims());
    let (s1, proj) = crate::rep::radical(&p1).quotient(&p1);
    let ses = ShortExactSequence::new(incl, proj).unwrap();
    let r = horseshoe(&ses, 4).unwrap();
    assert_eq!(r.multiplicities[0], vec![1, 1]);
    assert!(r.is_exact());
    let ra = minimal_resolution(&sub, 4);
    let rc = minimal_resolution(&s1, 4);
    for i in 0..r.length() {
        let get = |x: &Resolution<_>| x.multiplicities.get(i).cloned().unwrap_or(vec![0, 0]);
        let sum: Vec<usize> = get(&ra).iter().zip(get(&rc)).map(|(a, b)| a + b).collect();
        assert_eq!(r.multiplicities[i], sum);
    }
}

#[test]
fn horseshoe_rejects_non_exact() {
    let a = a2(2);
    let p1 = projective(&a, 0);
    let z = Morphism::zero(&simple(&a, 1), &p1);
    let (_, proj) = crate::rep::radical(&p1).quotient(&p1);
    assert!(matches!(
        ShortExactSequence::new(z, proj),
        Err(crate::Error::NotExact(_))
    ));
}

#[test]
fn strip_projective_relocates_summand() {
    let a = a2(2);
    let p1 = projective(&a, 0);
    let p2 = projective(&a, 1);
    let (s2, incl) = crate::rep::radical(&p1).to_module(&p1);
    let (s1, proj) = crate::rep::radical(&p1).quotient(&p1);
    // 0 -> S2 -> P1 ⊕ P2 -> S1 ⊕ P2 -> 0
    let first = incl.pair(&Morphism::zero(&s2, &p2));
    let second = proj.direct_sum(&Morphism::identity(&p2));
    let seq = ExactSequence::new(vec![first, second]).unwrap();
    let split = ProjectiveSplitting::direct_sum(&s1, &p2);
    let out = strip_projective(&seq, &split).unwrap();
    let dims: Vec<Vec<usize>> = out.terms().iter().map(|t| t.dims().to_vec()).collect();
    assert_eq!(dims, vec![vec![0, 2], vec![1, 2], vec![1, 0]]);

    // P = 0 leaves the terms unchanged.
    let zero = Representation::zero(&a);
    let seq = ExactSequence::new(vec![incl.clone(), proj.clone()]).unwrap();
    let out = strip_projective(&seq, &ProjectiveSplitting::direct_sum(&s1, &zero)).unwrap();
    let dims: Vec<Vec<usize>> = out.terms().iter().map(|t| t.dims().to_vec()).collect();
    assert_eq!(dims, vec![vec![0, 1], vec![1, 1], vec![1, 0]]);
}

#[test]
fn strip_projective_requires_projective_summand() {
    let a = a2(2);
    let p1 = projective(&a, 0);
    let (s1, proj) = crate::rep::radical(&p1).quotient(&p1);
    let (_, incl) = crate::rep::radical(&p1).to_module(&p1);
    let seq = ExactSequence::new(vec![incl, proj]).unwrap();
    let zero = Representation::zero(&a);
    let bad = ProjectiveSplitting::direct_sum(&zero, &s1);
    assert!(matches!(
        strip_projective(&seq, &bad),
        Err(crate::Error::NotSplitSummand(_))
    ));
}

#[test]
fn scans() {
    let sc = ScanConfig::default();
    let semi = alg(2, &["1", "2"], &[], &[]);
    let c = syzygy_scan(&semi, &[], &sc).unwrap();
    assert_eq!(c.stabilization, Some(0));
    assert!(c.stable_catalog().is_empty());

    let k = kronecker(2);
    let c = syzygy_scan(&k, &[], &sc).unwrap();
    assert_eq!(c.stabilization, Some(1));
    assert!(c
        .stable_catalog()
        .iter()
        .all(|&i| c.classes[i].dims() == [0, 1]));

    let m = monomial_a3(2);
    let c = syzygy_scan(&m, &[], &sc).unwrap();
    assert!(c.stabilization.unwrap() <= 2);

    let t = truncated(3, 4);
    let c = syzygy_scan(&t, &[], &sc).unwrap();
    assert_eq!(c.stabilization, Some(0));
}

#[test]
fn selfinjective_syzygy_law_on_truncated() {
    let t = truncated(3, 4);
    let dc = DecomposeConfig::default();
    for j in 1..4 {
        let m = truncated_quotient(&t, j);
        for k in 0..=4 {
            let back = cosyzygy(&syzygy(&m, k), k);
            let a = remove_projective_summands(&m, &dc).unwrap();
            let b = remove_projective_summands(&back, &dc).unwrap();
            assert!(crate::rep::is_isomorphic(&a, &b, &dc).unwrap());
        }
    }
}
