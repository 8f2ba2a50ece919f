mod common;

use common::*;
use homolog::rep::random_module;
use homolog::torsion::SimpleSet;
use proptest::prelude::*;

#[test]
fn corpus_algebras_pass_structural_checks() {
    let n = structural_suite(20, 1).unwrap();
    assert_eq!(n, 20 * corpus_algebras().len());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kronecker_modules(seed in any::<u64>(), mask in 0usize..4) {
        let alg = kronecker(3);
        let mut r = rng(seed);
        let m = random_module(&alg, &mut r, 3, 10);
        let other = random_module(&alg, &mut r, 2, 6);
        let v = SimpleSet::new((0..2).filter(|i| mask >> i & 1 == 1));
        prop_assert_eq!(check_module(&m, &other, &v, &mut r), Ok(()));
    }

    #[test]
    fn exterior_modules(seed in any::<u64>(), full in any::<bool>()) {
        let alg = exterior2(3);
        let mut r = rng(seed);
        let m = random_module(&alg, &mut r, 2, 8);
        let other = random_module(&alg, &mut r, 1, 4);
        let v = if full { SimpleSet::all(1) } else { SimpleSet::empty() };
        prop_assert_eq!(check_module(&m, &other, &v, &mut r), Ok(()));
    }

    #[test]
    fn monomial_modules_over_f5(seed in any::<u64>(), mask in 0usize..8) {
        let alg = build(5, &["1", "2", "3"], &["a 1 2", "b 2 3", "c 1 3"], &["a.b"]);
        let mut r = rng(seed);
        let m = random_module(&alg, &mut r, 3, 12);
        let other = random_module(&alg, &mut r, 2, 6);
        let v = SimpleSet::new((0..3).filter(|i| mask >> i & 1 == 1));
        prop_assert_eq!(check_module(&m, &other, &v, &mut r), Ok(()));
    }
}
