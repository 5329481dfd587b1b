//! Graded polynomial rings over exact fields and degreewise linear algebra
//! on homogeneous ideals. Every question is answered one graded piece at a
//! time, which suffices for artinian quotients.

pub mod field;
pub mod ideal;
pub mod linalg;
pub mod parse;
pub mod poly;

pub use field::{Field, PrimeField, Rationals, DEFAULT_MODULUS};
pub use ideal::{
    artinian_check, colon_degreewise, degree_basis, hilbert_function, minimal_generators_by_degree,
    Artinian, DegreePiece, IdealBasis,
};
pub use linalg::Echelon;
pub use parse::{parse_ideal_file, parse_polynomial, IdealFile, IntPoly};
pub use poly::{Monomial, MonomialBasis, Polynomial};
