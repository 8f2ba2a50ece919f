use super::*;
use crate::field::PrimeField;
use crate::testing::*;

fn m2(f: &PrimeField, d: [u32; 4]) -> Matrix<PrimeField> {
    Matrix::from_rows(f, 2, 2, d.to_vec())
}

fn kronecker_22(p: u32, b: [u32; 4]) -> Representation<PrimeField> {
    let alg = kronecker(p);
    let f = *alg.field();
    Representation::new(alg, vec![2, 2], vec![m2(&f, [1, 0, 0, 1]), m2(&f, b)]).unwrap()
}

#[test]
fn standard_modules_of_a2() {
    let alg = a2(2);
    assert_eq!(projective(&alg, 0).dims(), [1, 1]);
    assert_eq!(projective(&alg, 1).dims(), [0, 1]);
    assert_eq!(injective(&alg, 0).dims(), [1, 0]);
    assert_eq!(injective(&alg, 1).dims(), [1, 1]);
    assert_eq!(regular_module(&alg).total_dim(), alg.dimension());
}

#[test]
fn relations_are_checked() {
    let alg = truncated(2, 2);
    let f = *alg.field();
    let bad = Representation::new(alg.clone(), vec![2], vec![m2(&f, [1, 0, 0, 1])]);
    assert!(matches!(bad, Err(Error::InvalidRepresentation(_))));
    let good = Representation::new(alg, vec![2], vec![m2(&f, [0, 1, 0, 0])]);
    assert!(good.is_ok());
}

#[test]
fn hom_dimensions_agree_with_direct_system() {
    for alg in [kronecker(3), exterior2(3), truncated(2, 3), monomial_a3(2)] {
        let n = alg.num_vertices();
        let mut mods = Vec::new();
        for v in 0..n {
            for kind in [
                ModuleKind::Simple,
                ModuleKind::Projective,
                ModuleKind::Injective,
            ] {
                mods.push(standard_module(&alg, kind, v));
            }
        }
        mods.push(regular_module(&alg));
        for x in &mods {
            for y in &mods {
                let fast = hom_basis(x, y);
                let slow = hom_basis_by_equations(x, y);
                assert_eq!(fast.len(), slow.len(), "{x:?} -> {y:?}");
                assert!(fast.iter().all(|h| h.commutes()));
            }
        }
    }
}

#[test]
fn hom_from_projective_is_vertex_space() {
    let alg = exterior2(3);
    let m = regular_module(&alg).direct_sum(&simple(&alg, 0));
    assert_eq!(hom_dimension(&projective(&alg, 0), &m), m.dim(0));
}

#[test]
fn decompose_regular_module() {
    let alg = a3_linear(2);
    let d = decompose(&regular_module(&alg), &DecomposeConfig::default()).unwrap();
    assert_eq!(d.summands.len(), 3);
    assert_eq!(d.classes.len(), 3);
    assert!(d.witness().is_isomorphism());
}

#[test]
fn decompose_repeated_simple() {
    let alg = exterior2(2);
    let s = simple(&alg, 0);
    let d = decompose(&s.power(3), &DecomposeConfig::default()).unwrap();
    assert_eq!(d.summands.len(), 3);
    assert_eq!(d.classes.len(), 1);
    assert_eq!(d.classes[0].multiplicity(), 3);
}

#[test]
fn kronecker_regular_modules() {
    let split = kronecker_22(2, [0, 0, 0, 1]);
    let d = decompose(&split, &DecomposeConfig::default()).unwrap();
    assert_eq!(d.summands.len(), 2);
    assert_eq!(d.classes.len(), 2);

    let jordan = kronecker_22(2, [0, 1, 0, 0]);
    let d = decompose(&jordan, &DecomposeConfig::default()).unwrap();
    assert!(d.is_indecomposable());
    assert!(matches!(
        d.summands[0].certificate,
        Certificate::Exhaustive { .. } | Certificate::ScalarTop
    ));
}

#[test]
fn isomorphism_tests() {
    let cfg = DecomposeConfig::default();
    let a = kronecker_22(3, [0, 0, 0, 1]);
    let b = kronecker_22(3, [1, 0, 0, 0]);
    let c = kronecker_22(3, [0, 1, 0, 0]);
    assert!(is_isomorphic(&a, &b, &cfg).unwrap());
    assert!(!is_isomorphic(&a, &c, &cfg).unwrap());
    let alg = exterior2(3);
    assert!(is_isomorphic(&regular_module(&alg), &injective(&alg, 0), &cfg).unwrap());
}

#[test]
fn add_membership_of_summands() {
    let cfg = DecomposeConfig::default();
    let alg = a3_linear(2);
    let t = projective(&alg, 0).direct_sum(&simple(&alg, 1));
    assert!(add_membership(&simple(&alg, 1).power(2), &t, &cfg).unwrap());
    assert!(!add_membership(&simple(&alg, 2), &t, &cfg).unwrap());
    assert!(add_membership(&Representation::zero(&alg), &t, &cfg).unwrap());
}

#[test]
fn radical_and_socle() {
    let alg = truncated(3, 4);
    let p = projective(&alg, 0);
    let rs = radical_series(&p);
    assert_eq!(rs.loewy_length(), 4);
    assert_eq!(rs.layer_dims(), vec![vec![1]; 4]);
    assert_eq!(socle(&p).dims(), [1]);
    assert_eq!(socle_layer_dims(&p).len(), 4);
    let (t, proj) = top(&p);
    assert_eq!(t.dims(), [1]);
    assert!(proj.is_surjective());
}

#[test]
fn factorization_of_cover() {
    let alg = kronecker(2);
    let m = kronecker_22(2, [0, 1, 0, 0]);
    let cover = projective_cover(&m);
    assert_eq!(cover.module.dims(), [2, 4]);
    let fac = factor(&cover.epi);
    assert!(fac.cokernel.is_zero());
    assert_eq!(fac.kernel.dims(), [0, 2]);
    assert!(fac.kernel_inclusion.is_injective());
    assert!(fac.kernel_inclusion.then(&cover.epi).is_zero());
    let _ = alg;
}

#[test]
fn dual_of_projective_is_injective() {
    let alg = monomial_a3(2);
    for v in 0..3 {
        let i = injective(&alg, v);
        assert_eq!(socle(&i).dims().iter().sum::<usize>(), 1);
        assert_eq!(i.dual().dual_into(&alg).maps(), i.maps());
    }
}

#[test]
fn submodule_lattices() {
    let alg = a2(2);
    assert_eq!(
        lattice::enumerate_submodules(&projective(&alg, 0), 100)
            .unwrap()
            .len(),
        3
    );
    let e = exterior2(2);
    let s2 = simple(&e, 0).power(2);
    assert_eq!(lattice::enumerate_submodules(&s2, 100).unwrap().len(), 5);
    let reg = regular_module(&e);
    let subs = lattice::enumerate_submodules(&reg, 1000).unwrap();
    assert!(subs.iter().all(|s| s.is_submodule_of(&reg)));
    assert!(matches!(
        lattice::enumerate_submodules(&s2, 3),
        Err(Error::CapExceeded(_))
    ));
}

#[test]
fn quotient_and_inclusion_compose_to_zero() {
    let alg = exterior2(3);
    let p = regular_module(&alg);
    let r = radical(&p);
    let (sub, incl) = r.to_module(&p);
    let (quo, proj) = r.quotient(&p);
    assert_eq!(sub.total_dim() + quo.total_dim(), p.total_dim());
    assert!(incl.then(&proj).is_zero());
}
