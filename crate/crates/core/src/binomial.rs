//! Binomial coefficients, Macaulay representations and the Macaulay growth
//! bound.
//!
//! Every positive integer `h` has a unique expansion in degree `j`
//!
//! ```text
//! h = C(a_j, j) + C(a_{j-1}, j-1) + ... + C(a_i, i),   a_j > a_{j-1} > ... > a_i >= i >= 1
//! ```
//!
//! and the largest value a Hilbert function may take in degree `j + 1` after
//! taking the value `h` in degree `j` is obtained by shifting every top and
//! bottom up by one. All values here are arbitrary precision.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Exact `C(n, k)`; zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigUint {
    binom_big(&BigUint::from(n), k)
}

/// `C(n, k)` for an arbitrary precision top.
pub fn binom_big(n: &BigUint, k: u64) -> BigUint {
    let kb = BigUint::from(k);
    if kb > *n {
        return BigUint::zero();
    }
    // use the smaller of k and n - k when it fits
    let k = match (n - &kb).to_u64() {
        Some(rest) if rest < k => rest,
        _ => k,
    };
    let mut acc = BigUint::one();
    let mut top = n.clone();
    for i in 1..=k {
        acc *= &top;
        acc /= BigUint::from(i);
        top -= 1u32;
    }
    acc
}

/// One summand `C(top, index)` of a Macaulay representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayTerm {
    pub top: BigUint,
    pub index: u32,
}

impl MacaulayTerm {
    /// `top - index`, the quantity the grouped form collects terms by.
    pub fn offset(&self) -> BigUint {
        &self.top - BigUint::from(self.index)
    }

    pub fn value(&self) -> BigUint {
        binom_big(&self.top, self.index.into())
    }
}

/// The degree-`j` binomial expansion of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    pub value: BigUint,
    pub degree: u32,
    /// Terms for indices `degree, degree - 1, ..., i`, consecutive.
    pub terms: Vec<MacaulayTerm>,
}

impl MacaulayRep {
    /// Smallest index `i` appearing in the expansion.
    pub fn min_index(&self) -> u32 {
        self.terms.last().map(|t| t.index).unwrap_or(self.degree)
    }

    /// Checks the ordering and sum invariants.
    pub fn is_valid(&self) -> bool {
        if self.terms.is_empty() || self.terms[0].index != self.degree {
            return false;
        }
        for w in self.terms.windows(2) {
            if w[1].index + 1 != w[0].index || w[1].top >= w[0].top {
                return false;
            }
        }
        let last = self.terms.last().unwrap();
        if last.index < 1 || last.top < BigUint::from(last.index) {
            return false;
        }
        self.terms.iter().map(MacaulayTerm::value).sum::<BigUint>() == self.value
    }

    /// The value `sum C(a_l + 1, l + 1)`.
    pub fn shifted_sum(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| binom_big(&(&t.top + 1u32), u64::from(t.index) + 1))
            .sum()
    }
}

impl std::fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} =", self.value)?;
        for (n, t) in self.terms.iter().enumerate() {
            let sep = if n == 0 { " " } else { " + " };
            write!(f, "{sep}C({},{})", t.top, t.index)?;
        }
        Ok(())
    }
}

/// Largest `a >= index` with `C(a, index) <= r`, for `r >= 1`.
fn largest_top(r: &BigUint, index: u32) -> BigUint {
    if index == 1 {
        return r.clone();
    }
    let k = u64::from(index);
    let lo_start = BigUint::from(index);
    // exponential search for an upper end with C(hi, k) > r
    let mut step = BigUint::one();
    let mut lo = lo_start.clone();
    let mut hi = &lo_start + &step;
    while binom_big(&hi, k) <= *r {
        lo = hi.clone();
        step <<= 1;
        hi = &lo_start + &step;
    }
    // invariant: C(lo, k) <= r < C(hi, k)
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1;
        if binom_big(&mid, k) <= *r {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy Macaulay expansion of `h >= 1` in degree `j >= 1`.
///
/// # Panics
/// If `h == 0` or `j == 0`.
pub fn macaulay_rep(h: &BigUint, j: u32) -> MacaulayRep {
    assert!(!h.is_zero(), "macaulay_rep requires h >= 1");
    assert!(j >= 1, "macaulay_rep requires j >= 1");
    let mut terms = Vec::new();
    let mut rest = h.clone();
    let mut index = j;
    while !rest.is_zero() {
        // the remainder after the index-1 step is always zero
        debug_assert!(index >= 1);
        let top = largest_top(&rest, index);
        rest -= binom_big(&top, index.into());
        terms.push(MacaulayTerm { top, index });
        index -= 1;
    }
    MacaulayRep {
        value: h.clone(),
        degree: j,
        terms,
    }
}

/// Maximal admissible value in degree `j + 1` after `h` in degree `j`.
pub fn macaulay_bound(h: &BigUint, j: u32) -> BigUint {
    assert!(j >= 1, "macaulay_bound requires j >= 1");
    if h.is_zero() {
        return BigUint::zero();
    }
    macaulay_rep(h, j).shifted_sum()
}

/// One run of consecutive terms sharing the same offset `top - index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    /// common offset `a_l - l`
    pub k: BigUint,
    /// index of the first term in the run
    pub j: u32,
    /// run length minus one
    pub i: u32,
}

impl Group {
    /// `C(j + k + 1, j)`
    pub fn head(&self) -> BigUint {
        binom_big(&(&self.k + self.j + 1u32), self.j.into())
    }

    /// `C(j - i + k, j - i - 1)`
    pub fn tail(&self) -> BigUint {
        let low = self.j - self.i;
        binom_big(&(&self.k + low), u64::from(low) - 1)
    }
}

/// A Macaulay representation with its terms collected by offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupedRep {
    pub groups: Vec<Group>,
    pub source: MacaulayRep,
}

impl GroupedRep {
    /// Expands groups back into individual terms.
    pub fn expand(&self) -> Vec<MacaulayTerm> {
        let mut out = Vec::new();
        for g in &self.groups {
            for l in (g.j - g.i..=g.j).rev() {
                out.push(MacaulayTerm {
                    top: &g.k + l,
                    index: l,
                });
            }
        }
        out
    }

    /// `sum_n [ C(j_n + k_n + 1, j_n) - C(j_n - i_n + k_n, j_n - i_n - 1) ]`
    pub fn telescoped_value(&self) -> BigUint {
        self.groups.iter().map(|g| g.head() - g.tail()).sum()
    }

    pub fn is_valid(&self) -> bool {
        let gs = &self.groups;
        if gs.is_empty() || gs[0].j != self.source.degree {
            return false;
        }
        for w in gs.windows(2) {
            if w[1].k >= w[0].k || w[1].j + w[0].i + 1 != w[0].j {
                return false;
            }
        }
        let last = gs.last().unwrap();
        last.j - last.i == self.source.min_index()
            && self.telescoped_value() == self.source.value
            && self.expand() == self.source.terms
    }
}

pub fn grouped_rep(rep: &MacaulayRep) -> GroupedRep {
    let mut groups: Vec<Group> = Vec::new();
    for t in &rep.terms {
        let k = t.offset();
        match groups.last_mut() {
            Some(g) if g.k == k => g.i += 1,
            _ => groups.push(Group { k, j: t.index, i: 0 }),
        }
    }
    GroupedRep {
        groups,
        source: rep.clone(),
    }
}

/// Macaulay's criterion: `h_0 = 1` and `h_{j+1} <= macaulay_bound(h_j, j)`
/// for every `j >= 1`. `h_1` is unconstrained.
pub fn is_o_sequence(h: &[BigUint]) -> bool {
    first_o_sequence_violation(h).is_none() && !h.is_empty()
}

/// Index `d` of the first entry that breaks the O-sequence conditions.
pub fn first_o_sequence_violation(h: &[BigUint]) -> Option<usize> {
    if h.is_empty() || !h[0].is_one() {
        return Some(0);
    }
    for j in 1..h.len().saturating_sub(1) {
        if h[j + 1] > macaulay_bound(&h[j], j as u32) {
            return Some(j + 1);
        }
    }
    None
}
