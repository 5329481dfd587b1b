#![allow(dead_code)]

use gorbetti_core::polyring::ideal::from_coordinates;
use gorbetti_core::polyring::{
    parse_ideal_file, parse_polynomial, Echelon, Field, IdealBasis, Monomial, MonomialBasis, Polynomial,
    PrimeField, Rationals,
};
use gorbetti_core::reference::{EXAMPLE1_COMPLETE_INTERSECTION, EXAMPLE1_IDEAL};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn ideal<F: Field>(field: &F, n: usize, gens: &[&str]) -> IdealBasis<F> {
    let gens = gens
        .iter()
        .map(|s| parse_polynomial(s, n).unwrap().to_field(field))
        .collect();
    IdealBasis::new(field.clone(), n, gens).unwrap()
}

/// `Ann(F)` under contraction `x^a . y^b = y^(b-a)`, generated by its pieces
/// in degrees `1..=deg F + 1`. The quotient is Gorenstein with socle degree
/// `deg F`.
pub fn annihilator<F: Field>(form: &Polynomial<F>) -> IdealBasis<F> {
    let field = form.field().clone();
    let n = form.nvars();
    let sigma = form.homogeneous_degree().expect("homogeneous dual form");
    let mut gens = Vec::new();
    for d in 1..=sigma + 1 {
        let source = MonomialBasis::new(n, d);
        let target = MonomialBasis::new(n, sigma.saturating_sub(d));
        let mut rows = vec![vec![field.zero(); source.len()]; target.len()];
        if d <= sigma {
            for (c, m) in source.monomials().iter().enumerate() {
                for (b, coef) in form.terms() {
                    if b.divisible_by(m) {
                        let q: Vec<u32> = b.exponents().iter().zip(m.exponents()).map(|(x, y)| x - y).collect();
                        let r = target.index_of(&Monomial::new(q)).unwrap();
                        rows[r][c] = field.add(&rows[r][c], coef);
                    }
                }
            }
        }
        let kernel = Echelon::from_rows(field.clone(), source.len(), rows).kernel();
        gens.extend(kernel.rows().iter().map(|v| from_coordinates(&field, n, &source, v)));
    }
    IdealBasis::new(field, n, gens).unwrap()
}

/// Random form of degree `d` over `F_32003`.
pub fn random_form(n: usize, d: u32, seed: u64) -> Polynomial<PrimeField> {
    let field = PrimeField::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = MonomialBasis::new(n, d);
    Polynomial::from_terms(
        field,
        n,
        basis.monomials().iter().map(|m| (m.clone(), field.random(&mut rng))),
    )
}

/// Sum of `d`-th powers of the variables.
pub fn fermat_form<F: Field>(field: &F, n: usize, d: u32) -> Polynomial<F> {
    let terms = (0..n).map(|i| {
        let mut e = vec![0; n];
        e[i] = d;
        (Monomial::new(e), field.one())
    });
    Polynomial::from_terms(field.clone(), n, terms)
}

/// Named artinian test ideals over the rationals with whether they are
/// Gorenstein.
pub fn rational_test_ideals() -> Vec<(&'static str, IdealBasis<Rationals>, bool)> {
    let q = &Rationals;
    vec![
        ("example1", parse_ideal_file(EXAMPLE1_IDEAL).unwrap().ideal(q).unwrap(), true),
        (
            "complete intersection 2,4,3,4",
            parse_ideal_file(EXAMPLE1_COMPLETE_INTERSECTION).unwrap().ideal(q).unwrap(),
            true,
        ),
        ("two quadrics", ideal(q, 2, &["x1^2", "x2^2"]), true),
        ("square of maximal ideal", ideal(q, 3, &["x1^2", "x1x2", "x1x3", "x2^2", "x2x3", "x3^2"]), false),
        ("monomial, not gorenstein", ideal(q, 3, &["x1^2", "x2^3", "x3^2", "x1x2"]), false),
        ("fermat cubic dual, 3 vars", annihilator(&fermat_form(q, 3, 3)), true),
        ("fermat quartic dual, 4 vars", annihilator(&fermat_form(q, 4, 4)), true),
    ]
}

pub fn prime_test_ideals() -> Vec<(&'static str, IdealBasis<PrimeField>, bool)> {
    vec![
        ("generic quartic dual, 3 vars", annihilator(&random_form(3, 4, 11)), true),
        ("generic cubic dual, 4 vars", annihilator(&random_form(4, 3, 12)), true),
        ("generic sextic dual, 3 vars", annihilator(&random_form(3, 6, 13)), true),
        ("generic quartic dual, 4 vars", annihilator(&random_form(4, 4, 14)), true),
        ("generic quadric dual, 5 vars", annihilator(&random_form(5, 2, 15)), true),
    ]
}
