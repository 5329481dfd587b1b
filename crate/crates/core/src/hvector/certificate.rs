use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::binomial::{binom, grouped_rep, macaulay_bound, macaulay_rep, GroupedRep};
use crate::error::{Error, Result};

/// Exact-rational witness that a small value `h_j` in degree `j >= p` cannot
/// grow to `h_{p-1} = C(g+p-2, g-1)` in degree `j + 1`.
///
/// Writing `c_s = (k_s+1)/(j_s+1)` over the grouped expansion of `h_j`,
///
/// ```text
/// F_s = sum_{n>=s} (c_s - c_n) C(j_n+k_n+1, j_n)
///     + sum_{n>=s} ((k_n+1)/(j_n-i_n) - c_s) C(j_n-i_n+k_n, j_n-i_n-1)
/// ```
///
/// Growth to the target would force `F_0 < 0`; the certificate shows the
/// strict chain `F_0 > F_1 > ... > F_r > 0` instead.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub g: u32,
    pub p: u32,
    pub j: u32,
    pub h: BigUint,
    /// `h <= j`: the expansion is all `C(l, l)` and the bound equals `h`
    pub trivial: bool,
    pub grouped: Option<GroupedRep>,
    /// `k_0 <= g - 2`
    pub offset_within_bound: bool,
    /// `(g-1)/(p-1) > (k_0+1)/(j+1)`
    pub ratio_exceeds: bool,
    pub f_values: Vec<BigRational>,
    /// `(A_s, B_s)` for `0 <= s < r`
    pub a_b_values: Vec<(BigRational, BigRational)>,
    /// `macaulay_bound(h, j)`, computed independently of the chain
    pub growth_bound: BigUint,
    /// `C(g+p-2, g-1)`
    pub target: BigUint,
    /// `h <= C(p+g-3, g-1)`, the range in which the chain rules out growth
    pub in_certified_range: bool,
    /// the chain (or trivial branch) holds
    pub verdict: bool,
}

impl Certificate {
    /// Independent check: the growth bound alone falls short of the target.
    pub fn unreachable(&self) -> bool {
        self.growth_bound < self.target
    }

    /// The chain certifies that `h` cannot grow to the target. Above the
    /// certified range the chain may still hold while growth is possible.
    pub fn certifies_unreachable(&self) -> bool {
        self.verdict && self.in_certified_range
    }
}

fn rat(n: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn frac(num: &BigUint, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den))
}

pub fn certificate(g: u32, p: u32, j: u32, h: &BigUint) -> Result<Certificate> {
    if g < 3 || p < 2 {
        return Err(Error::Hypothesis(format!("need g >= 3 and p >= 2, got g = {g}, p = {p}")));
    }
    if j < p {
        return Err(Error::Hypothesis(format!("need j >= p, got j = {j} < {p}")));
    }
    let (g64, p64) = (u64::from(g), u64::from(p));
    let ceiling = binom(p64 + g64 - 3, g64 - 1);
    let target = binom(g64 + p64 - 2, g64 - 1);
    if h.is_zero() || *h >= target {
        return Err(Error::Hypothesis(format!(
            "need 1 <= h_j < C(g+p-2, g-1) = {target}, got {h}"
        )));
    }
    let growth_bound = macaulay_bound(h, j);
    let mut cert = Certificate {
        g,
        p,
        j,
        h: h.clone(),
        trivial: false,
        grouped: None,
        offset_within_bound: true,
        ratio_exceeds: true,
        f_values: Vec::new(),
        a_b_values: Vec::new(),
        growth_bound,
        target,
        in_certified_range: *h <= ceiling,
        verdict: false,
    };
    if *h <= BigUint::from(j) {
        cert.trivial = true;
        cert.verdict = true;
        return Ok(cert);
    }

    let grouped = grouped_rep(&macaulay_rep(h, j));
    let gs = &grouped.groups;
    let k = &gs[0].k;
    cert.offset_within_bound = *k <= BigUint::from(g64 - 2);
    cert.ratio_exceeds = frac(&BigUint::from(g64 - 1), p64 - 1)
        > frac(&(k + 1u32), u64::from(j) + 1);

    // per-group rationals and binomials
    let c: Vec<BigRational> = gs
        .iter()
        .map(|grp| frac(&(&grp.k + 1u32), u64::from(grp.j) + 1))
        .collect();
    let d: Vec<BigRational> = gs
        .iter()
        .map(|grp| frac(&(&grp.k + 1u32), u64::from(grp.j - grp.i)))
        .collect();
    let head: Vec<BigRational> = gs.iter().map(|grp| rat(grp.head())).collect();
    let tail: Vec<BigRational> = gs.iter().map(|grp| rat(grp.tail())).collect();

    let r = gs.len() - 1;
    for s in 0..=r {
        let mut f = BigRational::zero();
        for n in s..=r {
            f += (&c[s] - &c[n]) * &head[n];
            f += (&d[n] - &c[s]) * &tail[n];
        }
        cert.f_values.push(f);
    }
    for s in 0..r {
        let a: BigRational = head[s + 1..].iter().sum();
        let b: BigRational = tail[s + 1..].iter().sum();
        cert.a_b_values.push((a, b));
    }

    // closed form of the last link
    let last = &gs[r];
    let low = last.j - last.i;
    let a_i = &last.k + low;
    let closed = (&d[r] - &c[r])
        * rat(crate::binomial::binom_big(&a_i, u64::from(low) - 1));
    let closed_ok = cert.f_values[r] == closed;

    let chain = cert.f_values.windows(2).all(|w| w[0] > w[1])
        && cert.f_values[r] > BigRational::zero();
    let ab_ok = cert.a_b_values.iter().all(|(a, b)| a > b);
    cert.verdict =
        cert.offset_within_bound && cert.ratio_exceeds && chain && ab_ok && closed_ok;
    cert.grouped = Some(grouped);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn g4_p4_h13() {
        let c = certificate(4, 4, 4, &b(13)).unwrap();
        assert!(!c.trivial);
        assert!(c.verdict);
        assert!(!c.in_certified_range);
        assert!(c.unreachable());
        assert_eq!(c.growth_bound, b(16));
        assert_eq!(c.target, b(20));
        // groups (k=1, j=4, i=2), (k=0, j=1, i=0)
        // c = [2/5, 1/2], d = [1, 1], head = [15, 2], tail = [3, 1]
        // F_0 = (2/5-1/2)*2 + (1-2/5)*3 + (1-2/5)*1 = 11/5
        // F_1 = (1-1/2)*1 = 1/2
        assert_eq!(c.f_values, vec![q(11, 5), q(1, 2)]);
        assert_eq!(c.a_b_values, vec![(q(2, 1), q(1, 1))]);
    }

    #[test]
    fn trivial_branch() {
        let c = certificate(4, 4, 5, &b(3)).unwrap();
        assert!(c.trivial && c.verdict && c.certifies_unreachable());
        assert_eq!(c.growth_bound, b(3));
    }

    #[test]
    fn chain_above_range_does_not_certify() {
        // 15 = C(6, 4) grows to 21 >= 20
        let c = certificate(4, 4, 4, &b(15)).unwrap();
        assert!(c.verdict);
        assert!(!c.in_certified_range);
        assert!(!c.certifies_unreachable());
        assert!(!c.unreachable());
    }

    #[test]
    fn g5_p3_h5() {
        let c = certificate(5, 3, 3, &b(5)).unwrap();
        assert!(c.verdict && c.certifies_unreachable());
        assert!(c.growth_bound < b(15));
        assert_eq!(c.target, b(15));
    }

    #[test]
    fn precondition_errors() {
        assert!(matches!(certificate(2, 3, 3, &b(2)), Err(Error::Hypothesis(_))));
        assert!(matches!(certificate(4, 4, 3, &b(2)), Err(Error::Hypothesis(_))));
        assert!(matches!(certificate(4, 4, 4, &b(0)), Err(Error::Hypothesis(_))));
        // C(5, 3) = 10 is the theorem ceiling, C(6, 3) = 20 the target
        assert!(certificate(4, 4, 4, &b(10)).unwrap().in_certified_range);
        assert!(!certificate(4, 4, 4, &b(11)).unwrap().in_certified_range);
        assert!(matches!(certificate(4, 4, 4, &b(20)), Err(Error::Hypothesis(_))));
    }
}
