use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::field::Field;
use super::linalg::Echelon;
use super::poly::{Monomial, MonomialBasis, Polynomial};
use crate::error::{Error, Result};

/// A homogeneous ideal given by a finite list of generators.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealBasis<F: Field> {
    field: F,
    nvars: usize,
    generators: Vec<Polynomial<F>>,
}

impl<F: Field> IdealBasis<F> {
    /// Zero generators are dropped; anything inhomogeneous is rejected.
    pub fn new(field: F, nvars: usize, generators: Vec<Polynomial<F>>) -> Result<Self> {
        let mut kept = Vec::with_capacity(generators.len());
        for g in generators {
            if g.nvars() != nvars || *g.field() != field {
                return Err(Error::RingMismatch(format!(
                    "generator {g} does not live in the ideal's ring"
                )));
            }
            if g.is_zero() {
                continue;
            }
            if g.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
            kept.push(g);
        }
        Ok(IdealBasis {
            field,
            nvars,
            generators: kept,
        })
    }

    pub fn zero(field: F, nvars: usize) -> Self {
        IdealBasis {
            field,
            nvars,
            generators: Vec::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(Polynomial::homogeneous_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.generators
            .iter()
            .filter_map(Polynomial::homogeneous_degree)
            .min()
    }
}

/// Coordinates of `p` (homogeneous of the basis degree) in `basis`.
pub fn coordinates<F: Field>(p: &Polynomial<F>, basis: &MonomialBasis) -> Vec<F::Elem> {
    let f = p.field();
    let mut v = vec![f.zero(); basis.len()];
    for (m, c) in p.terms() {
        let idx = basis.index_of(m).expect("term of the basis degree");
        v[idx] = c.clone();
    }
    v
}

/// Polynomial with the given coordinates.
pub fn from_coordinates<F: Field>(field: &F, nvars: usize, basis: &MonomialBasis, v: &[F::Elem]) -> Polynomial<F> {
    Polynomial::from_terms(
        field.clone(),
        nvars,
        basis
            .monomials()
            .iter()
            .zip(v)
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

/// The degree-`d` component `I_d` as a reduced row basis over the monomials
/// of degree `d` (largest first).
#[derive(Debug, Clone)]
pub struct DegreePiece<F: Field> {
    pub degree: u32,
    pub basis: Arc<MonomialBasis>,
    pub echelon: Echelon<F>,
}

impl<F: Field> DegreePiece<F> {
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// `dim R_d - dim I_d`
    pub fn quotient_dim(&self) -> usize {
        self.basis.len() - self.echelon.rank()
    }

    /// Monomials outside the leading terms of `I_d`; a basis of `(R/I)_d`.
    pub fn standard_monomials(&self) -> Vec<usize> {
        self.echelon.free_columns()
    }

    pub fn polynomials(&self, nvars: usize) -> Vec<Polynomial<F>> {
        self.echelon
            .rows()
            .iter()
            .map(|r| from_coordinates(self.echelon.field(), nvars, &self.basis, r))
            .collect()
    }
}

pub fn degree_basis<F: Field>(ideal: &IdealBasis<F>, d: u32) -> DegreePiece<F> {
    let basis = Arc::new(MonomialBasis::new(ideal.nvars, d));
    let mut rows = Vec::new();
    for g in &ideal.generators {
        let e = g.homogeneous_degree().expect("validated homogeneous");
        if e > d {
            continue;
        }
        for m in MonomialBasis::new(ideal.nvars, d - e).monomials() {
            rows.push(coordinates(&g.mul_monomial(m), &basis));
        }
    }
    let echelon = Echelon::from_rows(ideal.field.clone(), basis.len(), rows);
    DegreePiece {
        degree: d,
        basis,
        echelon,
    }
}

/// `dim (R/I)_d` for `d = 0..=d_max`. Degrees are computed independently and
/// assembled in order.
pub fn hilbert_function<F: Field>(ideal: &IdealBasis<F>, d_max: u32) -> Vec<u64> {
    (0..=d_max)
        .into_par_iter()
        .map(|d| degree_basis(ideal, d).quotient_dim() as u64)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Artinian {
    /// the quotient vanishes from degree `socle_degree + 1` on
    Yes { socle_degree: u32 },
    /// still nonzero at the cap; no conclusion
    Inconclusive,
}

/// Walks degrees until the quotient vanishes or `d_cap` is passed. Once
/// `(R/I)_d = 0` every later degree is zero too.
pub fn artinian_check<F: Field>(ideal: &IdealBasis<F>, d_cap: u32) -> Artinian {
    for d in 0..=d_cap {
        if degree_basis(ideal, d).quotient_dim() == 0 {
            return if d == 0 {
                // unit ideal; treat as socle degree 0 of the zero ring
                Artinian::Yes { socle_degree: 0 }
            } else {
                Artinian::Yes { socle_degree: d - 1 }
            };
        }
    }
    Artinian::Inconclusive
}

/// `(J : f)_d` as a reduced basis over the monomials of degree `d`.
pub fn colon_degreewise<F: Field>(
    ideal: &IdealBasis<F>,
    f: &Polynomial<F>,
    d: u32,
) -> Result<DegreePiece<F>> {
    if f.nvars() != ideal.nvars || f.field() != &ideal.field {
        return Err(Error::RingMismatch("divisor outside the ideal's ring".into()));
    }
    let e = f
        .homogeneous_degree()
        .ok_or_else(|| Error::NotHomogeneous(f.to_string()))?;
    let field = &ideal.field;
    let source = Arc::new(MonomialBasis::new(ideal.nvars, d));
    let target = degree_basis(ideal, d + e);
    // column c of the map is the normal form of (m_c * f) modulo J_{d+e}
    let mut columns: Vec<Vec<F::Elem>> = Vec::with_capacity(source.len());
    for m in source.monomials() {
        let mut v = coordinates(&f.mul_monomial(m), &target.basis);
        target.echelon.reduce(&mut v);
        columns.push(v);
    }
    let nrows = target.basis.len();
    let rows: Vec<Vec<F::Elem>> = (0..nrows)
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    let kernel = Echelon::from_rows(field.clone(), source.len(), rows).kernel();
    Ok(DegreePiece {
        degree: d,
        basis: source,
        echelon: kernel,
    })
}

/// `dim (R_1 I_{d-1})`, the part of `I_d` generated from lower degrees.
fn dim_generated_from_below<F: Field>(ideal: &IdealBasis<F>, below: &DegreePiece<F>) -> usize {
    let d = below.degree + 1;
    let basis = MonomialBasis::new(ideal.nvars, d);
    let mut rows = Vec::new();
    for p in below.polynomials(ideal.nvars) {
        for i in 0..ideal.nvars {
            let x = Monomial::variable(ideal.nvars, i);
            rows.push(coordinates(&p.mul_monomial(&x), &basis));
        }
    }
    Echelon::from_rows(ideal.field.clone(), basis.len(), rows).rank()
}

/// Number of minimal generators in each degree `<= d_max`, zeros omitted.
pub fn minimal_generators_by_degree<F: Field>(ideal: &IdealBasis<F>, d_max: u32) -> BTreeMap<u32, u64> {
    let Some(start) = ideal.min_degree() else {
        return BTreeMap::new();
    };
    let counts: Vec<(u32, u64)> = (start..=d_max)
        .into_par_iter()
        .map(|d| {
            let here = degree_basis(ideal, d).dim();
            let below = if d == start || d == 0 {
                0
            } else {
                dim_generated_from_below(ideal, &degree_basis(ideal, d - 1))
            };
            (d, (here - below) as u64)
        })
        .collect();
    counts.into_iter().filter(|&(_, c)| c > 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binom;
    use crate::polyring::field::{PrimeField, Rationals};
    use crate::polyring::parse::parse_polynomial;
    use num_traits::ToPrimitive;

    fn ideal(n: usize, gens: &[&str]) -> IdealBasis<Rationals> {
        let gens = gens
            .iter()
            .map(|s| parse_polynomial(s, n).unwrap().to_field(&Rationals))
            .collect();
        IdealBasis::new(Rationals, n, gens).unwrap()
    }

    fn c(n: u64, k: u64) -> u64 {
        binom(n, k).to_u64().unwrap()
    }

    #[test]
    fn zero_ideal() {
        let z = IdealBasis::zero(Rationals, 4);
        assert_eq!(degree_basis(&z, 5).dim(), 0);
        let hf = hilbert_function(&z, 6);
        for (d, h) in hf.iter().enumerate() {
            assert_eq!(*h, c(d as u64 + 3, 3));
        }
        assert!(minimal_generators_by_degree(&z, 4).is_empty());
    }

    #[test]
    fn maximal_ideal() {
        let m = ideal(4, &["x1", "x2", "x3", "x4"]);
        assert_eq!(degree_basis(&m, 3).dim(), 20);
        assert_eq!(artinian_check(&m, 2), Artinian::Yes { socle_degree: 0 });
        assert_eq!(minimal_generators_by_degree(&m, 1), BTreeMap::from([(1, 4)]));
    }

    #[test]
    fn non_artinian_is_inconclusive() {
        let i = ideal(4, &["x1"]);
        assert_eq!(artinian_check(&i, 10), Artinian::Inconclusive);
    }

    #[test]
    fn complete_intersection_hilbert_function() {
        // oracle: coefficients of (1+t)(1+t+t^2)(1+t+t^2+t^3)^2
        let factors: [&[u64]; 4] = [&[1, 1], &[1, 1, 1], &[1, 1, 1, 1], &[1, 1, 1, 1]];
        let mut series = vec![1u64];
        for fac in factors {
            let mut next = vec![0u64; series.len() + fac.len() - 1];
            for (i, a) in series.iter().enumerate() {
                for (j, b) in fac.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            series = next;
        }
        series.resize(11, 0);
        let ci = ideal(4, &["x1^2", "x2^4", "x3^3", "x4^4"]);
        let hf = hilbert_function(&ci, 10);
        assert_eq!(hf, series);
        assert_eq!(hf.iter().sum::<u64>(), 96);
        assert_eq!(
            minimal_generators_by_degree(&ci, 4),
            BTreeMap::from([(2, 1), (3, 1), (4, 2)])
        );
    }

    #[test]
    fn redundant_generator_dropped() {
        let i = ideal(2, &["x1^2", "x1^3"]);
        assert_eq!(minimal_generators_by_degree(&i, 3), BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn colon_by_unit_and_by_generator() {
        let j = ideal(4, &["x1^2", "x2^4", "x3^3", "x4^4"]);
        let one = Polynomial::constant(Rationals, 4, Rationals.from_i64(1));
        for d in 0..6 {
            assert_eq!(colon_degreewise(&j, &one, d).unwrap().echelon, degree_basis(&j, d).echelon);
        }
        let x1 = ideal(4, &["x1"]);
        let f = parse_polynomial("x1", 4).unwrap().to_field(&Rationals);
        assert_eq!(colon_degreewise(&x1, &f, 1).unwrap().dim(), 4);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let g = parse_polynomial("x1^2 + x2", 2).unwrap().to_field(&Rationals);
        assert!(matches!(IdealBasis::new(Rationals, 2, vec![g]), Err(Error::NotHomogeneous(_))));
        let wrong_vars = parse_polynomial("x1", 2).unwrap().to_field(&Rationals);
        assert!(matches!(IdealBasis::new(Rationals, 3, vec![wrong_vars]), Err(Error::RingMismatch(_))));
        let wrong_field = parse_polynomial("x1", 2).unwrap().to_field(&PrimeField::default());
        assert!(matches!(IdealBasis::new(Rationals, 2, vec![]).and_then(|_| {
            IdealBasis::new(PrimeField::new(7).unwrap(), 2, vec![wrong_field])
        }), Err(Error::RingMismatch(_))));
    }
}
