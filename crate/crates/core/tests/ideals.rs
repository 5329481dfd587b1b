mod common;

use gorbetti_core::polyring::{hilbert_function, Field, IdealBasis};
use gorbetti_core::resolution::{koszul_betti_auto, structural_checks};

fn check_all<F: Field>(ideals: Vec<(&str, IdealBasis<F>, bool)>) {
    for (name, ideal, gorenstein) in ideals {
        let t = koszul_betti_auto(&ideal, 20).unwrap_or_else(|e| panic!("{name}: {e}"));
        let top = t.sigma().unwrap() + 1;
        let from_betti = t.hilbert_function(top + 2);
        let direct: Vec<i64> = hilbert_function(&ideal, top + 2).into_iter().map(|h| h as i64).collect();
        assert_eq!(from_betti, direct, "{name}");
        let report = structural_checks(&t, gorenstein);
        assert!(report.passed(), "{name}: {:?}", report.failures);
    }
}

#[test]
fn betti_tables_reproduce_hilbert_functions_over_rationals() {
    check_all(common::rational_test_ideals());
}

#[test]
fn betti_tables_reproduce_hilbert_functions_over_prime_field() {
    check_all(common::prime_test_ideals());
}

#[test]
fn generic_duals_have_compressed_hilbert_functions() {
    let hf = |i: &IdealBasis<_>, d| hilbert_function(i, d);
    let (_, sextic, _) = common::prime_test_ideals().remove(2);
    assert_eq!(hf(&sextic, 7), vec![1, 3, 6, 10, 6, 3, 1, 0]);
    let (_, quartic4, _) = common::prime_test_ideals().remove(3);
    assert_eq!(hf(&quartic4, 5), vec![1, 4, 10, 4, 1, 0]);
}

#[test]
fn annihilator_of_fermat_form() {
    let q = gorbetti_core::polyring::Rationals;
    let i = common::annihilator(&common::fermat_form(&q, 3, 3));
    assert_eq!(hilbert_function(&i, 4), vec![1, 3, 3, 1, 0]);
    let t = koszul_betti_auto(&i, 10).unwrap();
    assert_eq!(t.totals(), vec![1, 5, 5, 1]);
}
