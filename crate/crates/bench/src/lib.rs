//! Fixed inputs shared by the benchmarks.

use gorbetti_core::polyring::{parse_ideal_file, Field, IdealBasis};
use gorbetti_core::reference::EXAMPLE1_IDEAL;
use num_bigint::BigUint;

pub fn example1<F: Field>(field: &F) -> IdealBasis<F> {
    parse_ideal_file(EXAMPLE1_IDEAL)
        .expect("packaged ideal parses")
        .ideal(field)
        .expect("packaged ideal is homogeneous")
}

/// `(h, j)` pairs spread over small and very large values.
pub fn bound_inputs() -> Vec<(BigUint, u32)> {
    let mut out: Vec<(BigUint, u32)> = (1..=200u64).map(|h| (BigUint::from(h * 37), 6)).collect();
    out.push((BigUint::from(10u32).pow(40), 12));
    out.push((BigUint::from(10u32).pow(12), 40));
    out
}
