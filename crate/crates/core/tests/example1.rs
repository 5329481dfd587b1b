use std::collections::BTreeMap;

use gorbetti_core::polyring::{
    colon_degreewise, degree_basis, hilbert_function, minimal_generators_by_degree, parse_ideal_file,
    parse_polynomial, Field, PrimeField, Rationals,
};
use gorbetti_core::reference::{
    EXAMPLE1_COMPLETE_INTERSECTION, EXAMPLE1_DIAGRAM, EXAMPLE1_DIVISOR, EXAMPLE1_IDEAL,
};
use gorbetti_core::resolution::{koszul_betti, structural_checks};

const H: [u64; 8] = [1, 4, 9, 13, 13, 9, 4, 1];

fn check<F: Field>(field: F) {
    let ideal = parse_ideal_file(EXAMPLE1_IDEAL).unwrap().ideal(&field).unwrap();
    let mut hf = hilbert_function(&ideal, 9);
    assert_eq!(hf.split_off(8), vec![0, 0]);
    assert_eq!(hf, H);
    let mingens = minimal_generators_by_degree(&ideal, 8);
    assert_eq!(mingens, BTreeMap::from([(2, 1), (3, 3), (4, 4), (5, 1), (6, 1)]));
    let t = koszul_betti(&ideal, 11).unwrap();
    assert_eq!(t.totals(), vec![1, 10, 18, 10, 1]);
    assert_eq!(t.render_diagram(), EXAMPLE1_DIAGRAM);
    assert_eq!(t.get(4, 11), 1);
    assert!(structural_checks(&t, true).passed());
}

#[test]
fn example1_over_rationals() {
    check(Rationals);
}

#[test]
fn example1_over_prime_field() {
    check(PrimeField::default());
}

#[test]
fn example1_is_the_colon_ideal() {
    let ci = parse_ideal_file(EXAMPLE1_COMPLETE_INTERSECTION).unwrap().ideal(&Rationals).unwrap();
    let f = parse_polynomial(EXAMPLE1_DIVISOR, 4).unwrap().to_field(&Rationals);
    let ideal = parse_ideal_file(EXAMPLE1_IDEAL).unwrap().ideal(&Rationals).unwrap();
    for d in 0..=8 {
        let colon = colon_degreewise(&ci, &f, d).unwrap();
        let direct = degree_basis(&ideal, d);
        assert_eq!(colon.echelon, direct.echelon, "degree {d}");
    }
}
