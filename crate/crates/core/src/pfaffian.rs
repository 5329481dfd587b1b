//! Alternating matrices, pfaffians, and random codimension-3 Gorenstein
//! ideals generated by maximal pfaffians.
//!
//! Degree bookkeeping: a profile lists the generator degrees
//! `m_1 <= ... <= m_nu` of the pfaffian ideal. With `s = sigma + 3` the
//! resolution is
//!
//! ```text
//! 0 -> R(-s) -> sum R(-n_j) --Y--> sum R(-m_i) -> R
//! ```
//!
//! where `n_j = s - m_j`, so `deg y_ij = n_j - m_i = s - m_i - m_j` and the
//! entry is zero when that is not positive. Summing `deg f_t` over `t` gives
//! `s = 2 * sum(m) / (nu - 1)`.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::field::{Field, PrimeField};
use crate::polyring::ideal::{artinian_check, minimal_generators_by_degree, Artinian, IdealBasis};
use crate::polyring::poly::{MonomialBasis, Polynomial};
use crate::resolution::koszul_betti;

/// Number of variables used by the codimension-3 experiments.
pub const NVARS: usize = 3;

/// Square alternating matrix of polynomials: `y_ji = -y_ij`, zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct AlternatingMatrix<F: Field> {
    field: F,
    nvars: usize,
    entries: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> AlternatingMatrix<F> {
    pub fn new(field: F, nvars: usize, entries: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        let size = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {size}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, y) in row.iter().enumerate() {
                if y.nvars() != nvars || y.field() != &field {
                    return Err(Error::RingMismatch(format!("entry ({}, {})", i + 1, j + 1)));
                }
                if i == j && !y.is_zero() {
                    return Err(Error::InvalidMatrix(format!("nonzero diagonal entry at {}", i + 1)));
                }
                if j > i && entries[j][i] != y.neg() {
                    return Err(Error::InvalidMatrix(format!(
                        "entries ({}, {}) and ({}, {}) are not negatives",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(AlternatingMatrix {
            field,
            nvars,
            entries,
        })
    }

    /// Builds the matrix from its strict upper triangle, given row by row:
    /// `upper[i][k]` is `y_{i, i+k+1}`.
    pub fn from_upper(field: F, nvars: usize, upper: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        let size = upper.len() + 1;
        let zero = Polynomial::zero(field.clone(), nvars);
        let mut entries = vec![vec![zero; size]; size];
        for (i, row) in upper.into_iter().enumerate() {
            if row.len() != size - i - 1 {
                return Err(Error::InvalidMatrix(format!("upper row {} has wrong length", i + 1)));
            }
            for (k, y) in row.into_iter().enumerate() {
                let j = i + k + 1;
                entries[j][i] = y.neg();
                entries[i][j] = y;
            }
        }
        Self::new(field, nvars, entries)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i][j]
    }

    /// Deletes row and column `t`.
    pub fn minor(&self, t: usize) -> Self {
        let keep = |k: &usize| *k != t;
        let entries = (0..self.size())
            .filter(keep)
            .map(|i| (0..self.size()).filter(keep).map(|j| self.entries[i][j].clone()).collect())
            .collect();
        AlternatingMatrix {
            field: self.field.clone(),
            nvars: self.nvars,
            entries,
        }
    }

    /// Checks that every nonzero entry is homogeneous of the degree the
    /// profile prescribes and that entries of nonpositive degree vanish.
    pub fn check_profile(&self, profile: &DegreeProfile) -> Result<()> {
        if profile.len() != self.size() {
            return Err(Error::InvalidProfile(format!(
                "profile has {} degrees for a {}x{} matrix",
                profile.len(),
                self.size(),
                self.size()
            )));
        }
        for i in 0..self.size() {
            for j in 0..self.size() {
                let y = &self.entries[i][j];
                if y.is_zero() {
                    continue;
                }
                let d = profile.entry_degree(i, j);
                if d <= 0 || y.homogeneous_degree() != Some(d as u32) {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({}, {}) is {y}, expected degree {d}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Pfaffian of an even alternating matrix by expansion along the first row.
pub fn pfaffian<F: Field>(m: &AlternatingMatrix<F>) -> Result<Polynomial<F>> {
    if m.size() % 2 == 1 {
        return Err(Error::InvalidMatrix(format!("pfaffian of odd size {}", m.size())));
    }
    if m.size() > 32 {
        return Err(Error::InvalidMatrix("size above 32".into()));
    }
    let all = if m.size() == 32 { u32::MAX } else { (1u32 << m.size()) - 1 };
    Ok(pf_subset(m, all, &mut HashMap::new()))
}

fn pf_subset<F: Field>(m: &AlternatingMatrix<F>, set: u32, memo: &mut HashMap<u32, Polynomial<F>>) -> Polynomial<F> {
    if set == 0 {
        return Polynomial::constant(m.field.clone(), m.nvars, m.field.one());
    }
    if let Some(p) = memo.get(&set) {
        return p.clone();
    }
    let first = set.trailing_zeros() as usize;
    let rest = set & !(1 << first);
    let mut acc = Polynomial::zero(m.field.clone(), m.nvars);
    let mut position = 0;
    let mut bits = rest;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let y = &m.entries[first][k];
        if !y.is_zero() {
            let sub = pf_subset(m, rest & !(1 << k), memo);
            let term = y.mul(&sub).expect("same ring");
            acc = if position % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            }
            .expect("same ring");
        }
        position += 1;
    }
    memo.insert(set, acc.clone());
    acc
}

/// `f_t = (-1)^t Pf(M with row and column t deleted)`, `t` counted from 0.
pub fn maximal_pfaffians<F: Field>(m: &AlternatingMatrix<F>) -> Result<Vec<Polynomial<F>>> {
    if m.size().is_multiple_of(2) || m.size() < 3 {
        return Err(Error::InvalidMatrix(format!(
            "maximal pfaffians need odd size at least 3, got {}",
            m.size()
        )));
    }
    (0..m.size())
        .map(|t| {
            let f = pfaffian(&m.minor(t))?;
            Ok(if t % 2 == 0 { f } else { f.neg() })
        })
        .collect()
}

/// Generator degrees of a pfaffian ideal, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DegreeProfile(Vec<u32>);

impl DegreeProfile {
    pub fn new(mut degrees: Vec<u32>) -> Result<Self> {
        degrees.sort_unstable();
        let nu = degrees.len();
        if nu < 3 || nu.is_multiple_of(2) {
            return Err(Error::InvalidProfile(format!("need an odd number >= 3 of degrees, got {nu}")));
        }
        if degrees[0] == 0 {
            return Err(Error::InvalidProfile("generator degrees must be positive".into()));
        }
        let total: u32 = degrees.iter().sum();
        if !(2 * total).is_multiple_of(nu as u32 - 1) {
            return Err(Error::InvalidProfile(format!(
                "2 * {total} is not divisible by {}, so no socle degree fits",
                nu - 1
            )));
        }
        let p = DegreeProfile(degrees);
        if p.0[nu - 1] >= p.s() {
            return Err(Error::InvalidProfile(format!(
                "largest degree {} is not below sigma + 3 = {}",
                p.0[nu - 1],
                p.s()
            )));
        }
        Ok(p)
    }

    /// `nu` generators whose pfaffian matrix has linear entries.
    pub fn linear(nu: usize) -> Result<Self> {
        if nu < 3 || nu.is_multiple_of(2) {
            return Err(Error::InvalidProfile(format!("need odd nu >= 3, got {nu}")));
        }
        Self::new(vec![(nu as u32 - 1) / 2; nu])
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Initial degree `p = m_1`.
    pub fn p(&self) -> u32 {
        self.0[0]
    }

    /// `sigma + 3`, the shift of the last free module.
    pub fn s(&self) -> u32 {
        2 * self.0.iter().sum::<u32>() / (self.0.len() as u32 - 1)
    }

    pub fn socle_degree(&self) -> i64 {
        i64::from(self.s()) - 3
    }

    /// Syzygy shifts `n_j = s - m_j`.
    pub fn syzygy_degrees(&self) -> Vec<u32> {
        self.0.iter().map(|&m| self.s() - m).collect()
    }

    pub fn entry_degree(&self, i: usize, j: usize) -> i64 {
        i64::from(self.s()) - i64::from(self.0[i]) - i64::from(self.0[j])
    }
}

/// Uniformly random homogeneous polynomial of degree `d`.
fn random_form<R: rand::Rng>(field: &PrimeField, nvars: usize, d: u32, rng: &mut R) -> Polynomial<PrimeField> {
    let basis = MonomialBasis::new(nvars, d);
    Polynomial::from_terms(
        *field,
        nvars,
        basis.monomials().iter().map(|m| (m.clone(), field.random(rng))),
    )
}

/// Random alternating matrix in three variables whose entries have the
/// degrees the profile prescribes.
pub fn random_alternating(field: &PrimeField, profile: &DegreeProfile, seed: u64) -> AlternatingMatrix<PrimeField> {
    random_alternating_with(field, profile, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn random_alternating_with<R: rand::Rng>(
    field: &PrimeField,
    profile: &DegreeProfile,
    rng: &mut R,
) -> AlternatingMatrix<PrimeField> {
    let nu = profile.len();
    let upper = (0..nu - 1)
        .map(|i| {
            (i + 1..nu)
                .map(|j| match profile.entry_degree(i, j) {
                    d if d > 0 => random_form(field, NVARS, d as u32, rng),
                    _ => Polynomial::zero(*field, NVARS),
                })
                .collect()
        })
        .collect();
    AlternatingMatrix::from_upper(*field, NVARS, upper).expect("alternating by construction")
}

/// Profiles sampled by default: every one has `nu <= 9` and degrees `<= 6`.
pub fn default_profiles() -> Vec<DegreeProfile> {
    [
        vec![1, 1, 1],
        vec![2, 2, 2],
        vec![1, 2, 2],
        vec![3, 3, 3],
        vec![2, 2, 2, 2, 2],
        vec![2, 2, 2, 3, 3],
        vec![3, 3, 3, 3, 4],
        vec![4, 4, 4, 4, 4],
        vec![3, 3, 3, 3, 3, 3, 3],
        vec![3, 3, 3, 3, 4, 4, 4],
        vec![4, 4, 4, 4, 4, 4, 4, 4, 4],
    ]
    .into_iter()
    .map(|d| DegreeProfile::new(d).expect("valid default profile"))
    .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TrialStatus {
    Ok,
    Skipped,
    Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub index: u64,
    pub profile: DegreeProfile,
    pub p: Option<u32>,
    pub nu: Option<u64>,
    pub betti_totals: Option<Vec<u64>>,
    /// `beta_1 = beta_2` and `beta_3 = 1`
    pub structure_ok: Option<bool>,
    pub status: TrialStatus,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentSummary {
    pub trials: u64,
    pub completed: u64,
    pub skipped: u64,
    pub violations: u64,
    /// completed trials with `nu = 2p + 1`
    pub extremal: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub seed: u64,
    pub modulus: u64,
    pub trials: Vec<TrialRecord>,
    pub summary: ExperimentSummary,
}

/// Runs one trial: the pfaffian ideal of a random matrix for `profile`,
/// drawn from stream `index` of the seeded generator.
pub fn run_trial(field: &PrimeField, profile: &DegreeProfile, seed: u64, index: u64) -> TrialRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let matrix = random_alternating_with(field, profile, &mut rng);
    let mut record = TrialRecord {
        index,
        profile: profile.clone(),
        p: None,
        nu: None,
        betti_totals: None,
        structure_ok: None,
        status: TrialStatus::Skipped,
        detail: None,
    };
    let gens = maximal_pfaffians(&matrix).expect("odd size");
    let ideal = match IdealBasis::new(*field, NVARS, gens) {
        Ok(i) => i,
        Err(e) => {
            record.detail = Some(format!("pfaffians not homogeneous: {e}"));
            return record;
        }
    };
    let cap = profile.s();
    let sigma = match artinian_check(&ideal, cap) {
        Artinian::Yes { socle_degree } => socle_degree,
        Artinian::Inconclusive => {
            record.detail = Some(format!("quotient nonzero in degree {cap}; height below 3"));
            return record;
        }
    };
    let table = koszul_betti(&ideal, sigma + NVARS as u32).expect("artinian with sufficient cap");
    let mingens = minimal_generators_by_degree(&ideal, sigma + 1);
    let p = *mingens.keys().next().expect("proper ideal has generators");
    let nu: u64 = mingens.values().sum();
    let totals = table.totals();
    record.p = Some(p);
    record.nu = Some(nu);
    record.structure_ok = Some(totals[1] == totals[2] && totals[3] == 1 && totals[1] == nu);
    let bound = 2 * u64::from(p) + 1;
    let mut problems = Vec::new();
    if nu > bound {
        problems.push(format!("nu = {nu} > 2p + 1 = {bound}"));
    }
    if totals[2] > bound {
        problems.push(format!("beta_2 = {} > 2p + 1 = {bound}", totals[2]));
    }
    if totals[3] != 1 {
        problems.push(format!("beta_3 = {} != 1", totals[3]));
    }
    record.betti_totals = Some(totals);
    if problems.is_empty() {
        record.status = TrialStatus::Ok;
    } else {
        record.status = TrialStatus::Violation;
        record.detail = Some(problems.join("; "));
    }
    record
}

/// Runs `trials` independent trials, cycling through `profiles`. Trial `t`
/// depends only on `(seed, t)`, so the report is reproducible and does not
/// depend on scheduling.
pub fn codim3_experiment(
    field: &PrimeField,
    trials: u64,
    profiles: &[DegreeProfile],
    seed: u64,
) -> Result<ExperimentReport> {
    if profiles.is_empty() {
        return Err(Error::InvalidProfile("no profiles given".into()));
    }
    for p in profiles {
        if p.len() > 9 || p.degrees().iter().any(|&d| d > 6) {
            return Err(Error::InvalidProfile(format!(
                "profile {:?} exceeds nu <= 9, degree <= 6",
                p.degrees()
            )));
        }
    }
    let records: Vec<TrialRecord> = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(field, &profiles[(t % profiles.len() as u64) as usize], seed, t))
        .collect();
    let count = |s: TrialStatus| records.iter().filter(|r| r.status == s).count() as u64;
    let extremal = records
        .iter()
        .filter(|r| r.status == TrialStatus::Ok && r.nu == r.p.map(|p| 2 * u64::from(p) + 1))
        .count() as u64;
    let summary = ExperimentSummary {
        trials,
        completed: trials - count(TrialStatus::Skipped),
        skipped: count(TrialStatus::Skipped),
        violations: count(TrialStatus::Violation),
        extremal,
    };
    Ok(ExperimentReport {
        seed,
        modulus: field.modulus(),
        trials: records,
        summary,
    })
}
