//! Gorenstein h-vectors: extremal invariants, profiles, the local growth
//! obstruction on the number of degree-`p` generators, and exhaustive
//! verification over symmetric O-sequences.

mod certificate;
mod enumerate;

pub use certificate::{certificate, Certificate};
pub use enumerate::{enumerate_symmetric_osequences, EnumerationLimits};

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::binomial::{binom, first_o_sequence_violation, macaulay_bound};
use crate::error::{Error, Result};

/// Hilbert function of an artinian graded algebra, `h_0 = 1` through the
/// socle degree. Trailing zeros are dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HVector {
    entries: Vec<BigUint>,
}

impl HVector {
    pub fn new(mut entries: Vec<BigUint>) -> Result<Self> {
        while entries.last().is_some_and(Zero::is_zero) {
            entries.pop();
        }
        if entries.first().is_none_or(|h| !h.is_one()) {
            return Err(Error::InvalidHVector("h_0 must be 1".into()));
        }
        if let Some(d) = entries.iter().position(Zero::is_zero) {
            return Err(Error::InvalidHVector(format!(
                "zero entry in degree {d} before the socle degree"
            )));
        }
        Ok(HVector { entries })
    }

    pub fn from_u64(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&h| BigUint::from(h)).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// Entry in degree `d`, zero past the socle degree.
    pub fn get(&self, d: usize) -> BigUint {
        self.entries.get(d).cloned().unwrap_or_default()
    }

    pub fn socle_degree(&self) -> u32 {
        (self.entries.len() - 1) as u32
    }

    /// Length of the algebra, i.e. the multiplicity.
    pub fn multiplicity(&self) -> BigUint {
        self.entries.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().eq(self.entries.iter().rev())
    }

    /// No strict descent is ever followed by a strict ascent.
    pub fn is_unimodal(&self) -> bool {
        let mut descended = false;
        for w in self.entries.windows(2) {
            if w[1] < w[0] {
                descended = true;
            } else if w[1] > w[0] && descended {
                return false;
            }
        }
        true
    }
}

impl std::fmt::Display for HVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Numerical invariants read off an h-vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    /// codimension, `h_1`
    pub g: u32,
    /// initial degree of the ideal
    pub p: u32,
    pub sigma: u32,
    /// number of degree-`p` minimal generators
    pub nu_p: BigUint,
    pub symmetric: bool,
    pub unimodal: bool,
}

/// `dim R_d` for a polynomial ring in `g` variables.
fn full(g: u32, d: u32) -> BigUint {
    binom(u64::from(g) + u64::from(d) - 1, d.into())
}

pub fn profile(h: &HVector) -> Result<Profile> {
    if h.entries.len() < 2 {
        return Err(Error::InvalidHVector(
            "codimension undefined for a length-one h-vector".into(),
        ));
    }
    if let Some(d) = first_o_sequence_violation(&h.entries) {
        return Err(Error::InvalidHVector(format!(
            "not an O-sequence: growth into degree {d} exceeds the Macaulay bound"
        )));
    }
    let g = h.entries[1]
        .to_u32()
        .ok_or_else(|| Error::InvalidHVector("codimension too large".into()))?;
    // h_{sigma+1} = 0 is always short of full, so the search terminates
    let p = (1..)
        .find(|&d| h.get(d as usize) < full(g, d))
        .expect("initial degree exists");
    let nu_p = full(g, p) - h.get(p as usize);
    Ok(Profile {
        g,
        p,
        sigma: h.socle_degree(),
        nu_p,
        symmetric: h.is_symmetric(),
        unimodal: h.is_unimodal(),
    })
}

fn check_hypotheses(g: u32, p: u32) -> Result<()> {
    if g < 3 {
        return Err(Error::Hypothesis(format!("codimension g = {g} < 3")));
    }
    if p < 2 {
        return Err(Error::Hypothesis(format!("initial degree p = {p} < 2")));
    }
    Ok(())
}

/// Number of minimal generators of the extremal Gorenstein ideal of
/// codimension `g` and initial degree `p`:
/// `C(p+g-1, g-1) - C(p+g-3, g-1)`.
pub fn nu0(g: u32, p: u32) -> Result<BigUint> {
    check_hypotheses(g, p)?;
    let (g, p) = (u64::from(g), u64::from(p));
    Ok(binom(p + g - 1, g - 1) - binom(p + g - 3, g - 1))
}

/// Minimal multiplicity `C(g+p-1, g) + C(g+p-2, g)`.
pub fn extremal_multiplicity(g: u32, p: u32) -> Result<BigUint> {
    check_hypotheses(g, p)?;
    let (g, p) = (u64::from(g), u64::from(p));
    Ok(binom(g + p - 1, g) + binom(g + p - 2, g))
}

/// The h-vector of the extremal algebra: full up to degree `p - 1`, then
/// mirrored, socle degree `2p - 2`.
pub fn extremal_hvector(g: u32, p: u32) -> Result<HVector> {
    check_hypotheses(g, p)?;
    let sigma = 2 * p - 2;
    let entries = (0..=sigma).map(|d| full(g, d.min(sigma - d))).collect();
    HVector::new(entries)
}

/// Ranks of a pure resolution with shifts `0 = d_0 < d_1 < ... < d_c`:
/// `beta_i = prod_{j >= 1, j != i} d_j / |d_j - d_i|`.
pub fn pure_resolution_betti(degrees: &[u64]) -> Result<Vec<BigUint>> {
    if degrees.len() < 2 || degrees[0] != 0 {
        return Err(Error::InvalidDegreeSequence(
            "need at least two shifts starting at 0".into(),
        ));
    }
    if degrees.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidDegreeSequence(
            "shifts must be strictly increasing".into(),
        ));
    }
    let mut out = vec![BigUint::one()];
    for (i, &di) in degrees.iter().enumerate().skip(1) {
        let mut beta = BigRational::one();
        for (j, &dj) in degrees.iter().enumerate().skip(1) {
            if j == i {
                continue;
            }
            let num = BigInt::from(dj);
            let den = (BigInt::from(dj) - BigInt::from(di)).abs();
            beta *= BigRational::new(num, den);
        }
        if !beta.is_integer() {
            return Err(Error::NonIntegralBetti);
        }
        out.push(beta.to_integer().to_biguint().expect("positive"));
    }
    Ok(out)
}

/// Outcome of the one-step growth obstruction for every candidate value of
/// the number of degree-`p` generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenNu {
    /// values that no symmetric O-sequence can realise
    pub forbidden: BTreeSet<BigUint>,
    /// admissible values below the extremal one whose h-vector must dip
    /// below `h_{p-1}` and later climb back, i.e. fail unimodality
    pub nonunimodal_required: BTreeSet<BigUint>,
}

/// Whether `h` can grow to `target` in a single step from some degree `j >= p`.
///
/// The scan stops at the first degree where the bound no longer exceeds `h`,
/// or at the hard cap `cap`.
fn can_reach(h: &BigUint, target: &BigUint, p: u32, cap: u64) -> bool {
    let mut j = p;
    while u64::from(j) <= cap {
        let bound = macaulay_bound(h, j);
        if bound >= *target {
            return true;
        }
        if bound <= *h {
            return false;
        }
        j += 1;
    }
    false
}

pub fn forbidden_nu(g: u32, p: u32) -> Result<ForbiddenNu> {
    let extremal = nu0(g, p)?;
    let full_p = full(g, p);
    let target = full(g, p - 1);
    let cap = (BigUint::from(p) + full_p.clone() * 2u32)
        .to_u64()
        .unwrap_or(u64::MAX);
    let mut forbidden = BTreeSet::new();
    let mut nonunimodal_required = BTreeSet::new();
    let mut nu = BigUint::one();
    while nu < extremal {
        let h = &full_p - &nu;
        if !can_reach(&h, &target, p, cap) {
            forbidden.insert(nu.clone());
        } else if h < target {
            nonunimodal_required.insert(nu.clone());
        }
        nu += 1u32;
    }
    Ok(ForbiddenNu {
        forbidden,
        nonunimodal_required,
    })
}

/// First `(h, j)` with `macaulay_bound(h, j + 1) > macaulay_bound(h, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityViolation {
    pub h: u64,
    pub j: u32,
    pub bound_j: BigUint,
    pub bound_next: BigUint,
}

/// Checks `j -> macaulay_bound(h, j)` is non-increasing for
/// `1 <= h <= h_max` and `j_min <= j < j_max`. Scans `h` in the outer loop.
pub fn growth_monotonic_scan(
    h_max: u64,
    j_min: u32,
    j_max: u32,
) -> Option<MonotonicityViolation> {
    for h in 1..=h_max {
        let hb = BigUint::from(h);
        let mut prev = None;
        for j in j_min.max(1)..=j_max {
            let bound = macaulay_bound(&hb, j);
            if let Some(bound_j) = prev.take() {
                if bound > bound_j {
                    return Some(MonotonicityViolation {
                        h,
                        j: j - 1,
                        bound_j,
                        bound_next: bound,
                    });
                }
            }
            prev = Some(bound);
        }
    }
    None
}
