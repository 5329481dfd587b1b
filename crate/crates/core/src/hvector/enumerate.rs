use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{full, profile, HVector};
use crate::binomial::{is_o_sequence, macaulay_bound};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// maximum number of partial assignments visited
    pub node_limit: u64,
    /// largest admissible entry value
    pub value_limit: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            node_limit: 50_000_000,
            value_limit: 1_000_000,
        }
    }
}

struct Search<'a> {
    g: u32,
    p: u32,
    sigma: u32,
    limits: EnumerationLimits,
    nodes: &'a AtomicU64,
}

impl Search<'_> {
    fn bound(&self, h: u64, j: u32) -> u64 {
        macaulay_bound(&BigUint::from(h), j)
            .to_u64()
            .unwrap_or(u64::MAX)
    }

    fn tick(&self) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.limits.node_limit {
            return Err(Error::NodeLimit {
                limit: self.limits.node_limit,
            });
        }
        Ok(())
    }

    /// The mirrored descent from degree `sigma - d` to `sigma - d + 1` must be
    /// admissible: `h_{d-1} <= bound(h_d, sigma - d)`.
    fn mirror_ok(&self, half: &[u64], d: usize, value: u64) -> bool {
        d == 0 || half[d - 1] <= self.bound(value, self.sigma - d as u32)
    }

    fn extend(&self, half: &mut Vec<u64>, out: &mut Vec<HVector>) -> Result<()> {
        let d = half.len();
        let middle = (self.sigma / 2) as usize;
        if d > middle {
            return self.emit(half, out);
        }
        let candidates: Box<dyn Iterator<Item = u64>> = if d < self.p as usize {
            Box::new(std::iter::once(self.fixed(d)?))
        } else {
            let cap = self.bound(half[d - 1], d as u32 - 1);
            let cap = if d == self.p as usize {
                cap.min(self.fixed(d)? - 1)
            } else {
                cap
            };
            if cap > self.limits.value_limit {
                return Err(Error::NodeLimit {
                    limit: self.limits.node_limit,
                });
            }
            Box::new(1..=cap)
        };
        for value in candidates {
            self.tick()?;
            if !self.mirror_ok(half, d, value) {
                continue;
            }
            half.push(value);
            self.extend(half, out)?;
            half.pop();
        }
        Ok(())
    }

    fn fixed(&self, d: usize) -> Result<u64> {
        full(self.g, d as u32)
            .to_u64()
            .filter(|&v| v <= self.limits.value_limit)
            .ok_or(Error::NodeLimit {
                limit: self.limits.node_limit,
            })
    }

    fn emit(&self, half: &[u64], out: &mut Vec<HVector>) -> Result<()> {
        let sigma = self.sigma as usize;
        let entries: Vec<BigUint> = (0..=sigma)
            .map(|d| BigUint::from(half[d.min(sigma - d)]))
            .collect();
        if !is_o_sequence(&entries) {
            return Ok(());
        }
        let h = HVector::new(entries)?;
        if profile(&h)?.p == self.p {
            out.push(h);
        }
        Ok(())
    }
}

/// Every symmetric O-sequence with `h_1 = g`, initial degree exactly `p` and
/// socle degree at most `sigma_max`, sorted by socle degree then entries.
///
/// Halves are generated up to the middle degree and mirrored; each entry is
/// pruned against both the ascending bound and the mirrored descent. Work is
/// split across threads by socle degree and the value in degree `p`.
pub fn enumerate_symmetric_osequences(
    g: u32,
    p: u32,
    sigma_max: u32,
    limits: EnumerationLimits,
) -> Result<Vec<HVector>> {
    if g < 1 || p < 2 {
        return Err(Error::Hypothesis(format!(
            "need g >= 1 and p >= 2, got g = {g}, p = {p}"
        )));
    }
    let nodes = AtomicU64::new(0);
    let mut tasks: Vec<(u32, Option<u64>)> = Vec::new();
    for sigma in 2..=sigma_max {
        if p <= sigma / 2 {
            let top = full(g, p)
                .to_u64()
                .filter(|&v| v <= limits.value_limit)
                .ok_or(Error::NodeLimit {
                    limit: limits.node_limit,
                })?;
            tasks.extend((1..top).map(|hp| (sigma, Some(hp))));
        } else {
            tasks.push((sigma, None));
        }
    }
    let chunks: Vec<Result<Vec<HVector>>> = tasks
        .par_iter()
        .map(|&(sigma, hp)| {
            let search = Search {
                g,
                p,
                sigma,
                limits,
                nodes: &nodes,
            };
            let mut half: Vec<u64> = Vec::new();
            for d in 0..(p as usize).min(sigma as usize / 2 + 1) {
                let v = search.fixed(d)?;
                if !search.mirror_ok(&half, d, v) {
                    return Ok(Vec::new());
                }
                half.push(v);
            }
            let mut out = Vec::new();
            match hp {
                Some(v) => {
                    let d = p as usize;
                    if v <= search.bound(half[d - 1], p - 1) && search.mirror_ok(&half, d, v) {
                        half.push(v);
                        search.extend(&mut half, &mut out)?;
                    }
                }
                None => search.extend(&mut half, &mut out)?,
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for chunk in chunks {
        all.extend(chunk?);
    }
    all.sort_by(|a, b| {
        a.socle_degree()
            .cmp(&b.socle_degree())
            .then_with(|| a.entries().cmp(b.entries()))
    });
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hvector::nu0;

    fn hv(xs: &[u64]) -> HVector {
        HVector::from_u64(xs).unwrap()
    }

    #[test]
    fn g3_p2_small() {
        let all = enumerate_symmetric_osequences(3, 2, 4, EnumerationLimits::default()).unwrap();
        for want in [&[1, 3, 1][..], &[1, 3, 3, 1], &[1, 3, 4, 3, 1], &[1, 3, 5, 3, 1]] {
            assert!(all.contains(&hv(want)), "missing {want:?}");
        }
        let bound = nu0(3, 2).unwrap();
        for h in &all {
            let pr = profile(h).unwrap();
            assert!(pr.nu_p <= bound);
            assert!(pr.symmetric);
            assert_eq!((pr.g, pr.p), (3, 2));
        }
    }

    #[test]
    fn socle_two_forces_extremal() {
        let all = enumerate_symmetric_osequences(4, 2, 2, EnumerationLimits::default()).unwrap();
        assert_eq!(all, vec![hv(&[1, 4, 1])]);
    }

    #[test]
    fn node_limit_is_enforced() {
        let limits = EnumerationLimits {
            node_limit: 10,
            ..Default::default()
        };
        assert!(matches!(
            enumerate_symmetric_osequences(4, 2, 8, limits),
            Err(Error::NodeLimit { limit: 10 })
        ));
    }

    /// Unpruned oracle: every sequence of the right shape with entries up to
    /// the full dimension, filtered by symmetry, growth and initial degree.
    fn brute(g: u32, p: u32, sigma_max: u32) -> Vec<HVector> {
        let mut out = Vec::new();
        for sigma in 2..=sigma_max {
            let half_len = sigma as usize / 2 + 1;
            let caps: Vec<u64> = (0..half_len)
                .map(|d| full(g, d as u32).to_u64().unwrap())
                .collect();
            let mut cur = vec![1u64; half_len];
            loop {
                let entries: Vec<BigUint> = (0..=sigma as usize)
                    .map(|d| BigUint::from(cur[d.min(sigma as usize - d)]))
                    .collect();
                if is_o_sequence(&entries) {
                    let h = HVector::new(entries).unwrap();
                    if h.get(1) == BigUint::from(g) && profile(&h).unwrap().p == p {
                        out.push(h);
                    }
                }
                // odometer
                let mut i = 0;
                loop {
                    if i == half_len {
                        break;
                    }
                    if cur[i] < caps[i] {
                        cur[i] += 1;
                        break;
                    }
                    cur[i] = 1;
                    i += 1;
                }
                if i == half_len {
                    break;
                }
            }
        }
        out.sort_by(|a, b| {
            a.socle_degree()
                .cmp(&b.socle_degree())
                .then_with(|| a.entries().cmp(b.entries()))
        });
        out
    }

    #[test]
    fn matches_unpruned_oracle() {
        for (g, p, s) in [(3, 2, 6), (3, 3, 6), (4, 2, 5), (3, 2, 7)] {
            let fast = enumerate_symmetric_osequences(g, p, s, EnumerationLimits::default()).unwrap();
            assert_eq!(fast, brute(g, p, s), "g={g} p={p} sigma_max={s}");
        }
    }
}
