use std::collections::BTreeSet;

use gorbetti_core::binomial::{grouped_rep, macaulay_bound, macaulay_rep};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn c(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Greedy expansion with a linear search for each top.
fn naive_rep(mut h: u128, j: u32) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut l = j;
    while h > 0 && l >= 1 {
        let mut a = u64::from(l);
        while c(a + 1, l.into()) <= h {
            a += 1;
        }
        out.push((a, l));
        h -= c(a, l.into());
        l -= 1;
    }
    out
}

/// Monomials of degree `d` in `n` variables, lex with `x1 > x2 > ...`.
fn lex_monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == n {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=d).rev() {
            cur.push(e);
            go(n, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// Quotient dimension in degree `j + 1` of the lex-segment ideal whose
/// quotient has dimension `h` in degree `j`.
fn lex_growth(n: usize, h: usize, j: u32) -> usize {
    let mons = lex_monomials(n, j);
    let segment = &mons[..mons.len() - h];
    let mut up = BTreeSet::new();
    for m in segment {
        for v in 0..n {
            let mut e = m.clone();
            e[v] += 1;
            up.insert(e);
        }
    }
    lex_monomials(n, j + 1).len() - up.len()
}

proptest! {
    #[test]
    fn representation_matches_naive_greedy(h in 1u64..=10_000, j in 1u32..=30) {
        let rep = macaulay_rep(&BigUint::from(h), j);
        prop_assert!(rep.is_valid());
        let terms: Vec<(u64, u32)> = rep.terms.iter().map(|t| (t.top.to_u64().unwrap(), t.index)).collect();
        prop_assert_eq!(terms, naive_rep(h.into(), j));
    }

    #[test]
    fn bound_is_monotone_in_h(h in 1u64..=10_000, j in 1u32..=30) {
        let a = macaulay_bound(&BigUint::from(h), j);
        let b = macaulay_bound(&BigUint::from(h + 1), j);
        prop_assert!(a <= b);
    }

    #[test]
    fn grouping_round_trips(h in 1u64..=1_000_000, j in 1u32..=40) {
        let rep = macaulay_rep(&BigUint::from(h), j);
        let grouped = grouped_rep(&rep);
        prop_assert!(grouped.is_valid());
        prop_assert_eq!(grouped.expand(), rep.terms.clone());
        prop_assert_eq!(grouped.telescoped_value(), BigUint::from(h));
    }
}

#[test]
fn bound_equals_lex_segment_growth() {
    let n = 5;
    for j in 1..=5u32 {
        let dim = lex_monomials(n, j).len();
        for h in 1..=dim.min(60) {
            let bound = macaulay_bound(&BigUint::from(h), j).to_usize().unwrap();
            assert_eq!(bound, lex_growth(n, h, j), "h = {h}, j = {j}");
        }
    }
}
