//! Graded Betti numbers of artinian quotients from Koszul homology.
//!
//! `beta_{i,j}(R/I) = dim_k H_i(x_1..x_n; R/I)_j`, and the Koszul complex in
//! internal degree `j` has terms `wedge^i k^n (x) (R/I)_{j-i}`, so every rank
//! is a finite-dimensional computation once the quotient is artinian.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::binomial::binom;
use crate::error::{Error, Result};
use crate::polyring::field::Field;
use crate::polyring::ideal::{artinian_check, degree_basis, Artinian, IdealBasis};
use crate::polyring::linalg::Echelon;

/// Graded Betti numbers `beta_{i,j}` indexed by homological degree `i` and
/// internal degree `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    sigma: Option<u32>,
    /// `entries[i][j]`
    entries: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub beta: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiJson {
    pub n: usize,
    pub sigma: Option<u32>,
    pub entries: Vec<BettiEntry>,
    pub totals: Vec<u64>,
}

impl BettiTable {
    pub fn from_entries(n: usize, sigma: Option<u32>, entries: impl IntoIterator<Item = (usize, u32, u64)>) -> Self {
        let mut grid = vec![Vec::new(); n + 1];
        for (i, j, beta) in entries {
            assert!(i <= n, "homological degree {i} beyond {n}");
            let row: &mut Vec<u64> = &mut grid[i];
            if row.len() <= j as usize {
                row.resize(j as usize + 1, 0);
            }
            row[j as usize] += beta;
        }
        BettiTable {
            n,
            sigma,
            entries: grid,
        }
    }

    /// Table of a pure resolution with the given shifts and ranks.
    pub fn pure(n: usize, shifts: &[u32], ranks: &[u64]) -> Self {
        let sigma = shifts.last().map(|&d| d.saturating_sub(n as u32));
        Self::from_entries(
            n,
            sigma,
            shifts.iter().zip(ranks).enumerate().map(|(i, (&j, &b))| (i, j, b)),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> Option<u32> {
        self.sigma
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries
            .get(i)
            .and_then(|row| row.get(j as usize))
            .copied()
            .unwrap_or(0)
    }

    /// Entry at diagram position `(row, col)`: the rank of `R(-row-col)` in
    /// homological position `col`.
    pub fn diagram_entry(&self, row: u32, col: usize) -> u64 {
        self.get(col, row + col as u32)
    }

    /// Nonzero `(i, j, beta)` sorted by `(i, j)`.
    pub fn nonzero(&self) -> Vec<(usize, u32, u64)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if b != 0 {
                    out.push((i, j as u32, b));
                }
            }
        }
        out
    }

    pub fn totals(&self) -> Vec<u64> {
        self.entries.iter().map(|row| row.iter().sum()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.totals()
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// `H(d) = sum_{i,j} (-1)^i beta_{i,j} C(n-1+d-j, n-1)`.
    pub fn hilbert_function(&self, d_max: u32) -> Vec<i64> {
        let n = self.n as u64;
        (0..=d_max)
            .map(|d| {
                let mut acc: i64 = 0;
                for (i, j, b) in self.nonzero() {
                    if j > d {
                        continue;
                    }
                    let free = i64::try_from(binom(n - 1 + u64::from(d - j), n - 1)).expect("fits");
                    let term = b as i64 * free;
                    acc += if i % 2 == 0 { term } else { -term };
                }
                acc
            })
            .collect()
    }

    /// Text diagram: row `r`, column `c` holds the rank of `R(-r-c)` in
    /// homological position `c`; zeros print as `-`. Cells are right-aligned
    /// to a common width and separated by two spaces.
    pub fn render_diagram(&self) -> String {
        let nz = self.nonzero();
        let last_row = nz.iter().map(|&(i, j, _)| j - i as u32).max().unwrap_or(0);
        let cell = |r: u32, c: usize| match self.diagram_entry(r, c) {
            0 => "-".to_string(),
            b => b.to_string(),
        };
        let width = (0..=last_row)
            .flat_map(|r| (0..=self.n).map(move |c| (r, c)))
            .map(|(r, c)| cell(r, c).len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for r in 0..=last_row {
            let line: Vec<String> = (0..=self.n).map(|c| format!("{:>width$}", cell(r, c))).collect();
            out.push_str(&line.join("  "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            n: self.n,
            sigma: self.sigma,
            entries: self
                .nonzero()
                .into_iter()
                .map(|(i, j, beta)| BettiEntry { i, j, beta })
                .collect(),
            totals: self.totals(),
        }
    }
}

/// Exterior basis of size `i` subsets of `0..n`, lexicographic.
fn subsets(n: usize, i: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            go(s + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, i, &mut Vec::new(), &mut out);
    out
}

/// Multiplication by each variable between consecutive graded pieces of the
/// quotient, in standard-monomial coordinates.
struct QuotientAlgebra<F: Field> {
    field: F,
    n: usize,
    /// `dims[d] = dim (R/I)_d`
    dims: Vec<usize>,
    /// `mult[d][s][a]` = image of the `a`-th basis element of degree `d` under
    /// `x_s`, as coordinates in degree `d + 1`
    mult: Vec<Vec<Vec<Vec<F::Elem>>>>,
}

impl<F: Field> QuotientAlgebra<F> {
    fn new(ideal: &IdealBasis<F>, top: u32) -> Self {
        let n = ideal.nvars();
        let field = ideal.field().clone();
        let pieces: Vec<_> = (0..=top + 1).into_par_iter().map(|d| degree_basis(ideal, d)).collect();
        let std: Vec<Vec<usize>> = pieces.iter().map(|p| p.standard_monomials()).collect();
        let mut mult = Vec::with_capacity(top as usize + 1);
        for d in 0..=top as usize {
            let next = &pieces[d + 1];
            // position of each free column among the standard monomials
            let mut pos = vec![usize::MAX; next.basis.len()];
            for (k, &c) in std[d + 1].iter().enumerate() {
                pos[c] = k;
            }
            let mut per_var = Vec::with_capacity(n);
            for s in 0..n {
                let mut images = Vec::with_capacity(std[d].len());
                for &c in &std[d] {
                    let m = pieces[d].basis.monomials()[c].times_variable(s);
                    let col = next.basis.index_of(&m).expect("degree d+1 monomial");
                    let mut v = vec![field.zero(); std[d + 1].len()];
                    match next.echelon.pivot_row_of(col) {
                        None => v[pos[col]] = field.one(),
                        Some(r) => {
                            // m = -(rest of its pivot row) modulo I
                            for (k, &fc) in std[d + 1].iter().enumerate() {
                                let a = &next.echelon.rows()[r][fc];
                                if !field.is_zero(a) {
                                    v[k] = field.neg(a);
                                }
                            }
                        }
                    }
                    images.push(v);
                }
                per_var.push(images);
            }
            mult.push(per_var);
        }
        QuotientAlgebra {
            field,
            n,
            dims: std.iter().map(Vec::len).collect(),
            mult,
        }
    }

    fn dim(&self, d: i64) -> usize {
        if d < 0 {
            0
        } else {
            self.dims.get(d as usize).copied().unwrap_or(0)
        }
    }

    /// Rank of the Koszul differential `K_{i,j} -> K_{i-1,j}`.
    fn differential_rank(&self, i: usize, j: u32) -> usize {
        if i == 0 || i > self.n {
            return 0;
        }
        let d = j as i64 - i as i64;
        let src_dim = self.dim(d);
        let tgt_dim = self.dim(d + 1);
        if src_dim == 0 || tgt_dim == 0 {
            return 0;
        }
        let src_sets = subsets(self.n, i);
        let tgt_sets = subsets(self.n, i - 1);
        let tgt_index: BTreeMap<&[usize], usize> = tgt_sets
            .iter()
            .enumerate()
            .map(|(k, s)| (s.as_slice(), k))
            .collect();
        let f = &self.field;
        let mut rows = Vec::with_capacity(src_sets.len() * src_dim);
        for set in &src_sets {
            for a in 0..src_dim {
                let mut row = vec![f.zero(); tgt_sets.len() * tgt_dim];
                for (k, &s) in set.iter().enumerate() {
                    let mut rest = set.clone();
                    rest.remove(k);
                    let block = tgt_index[rest.as_slice()] * tgt_dim;
                    let image = &self.mult[d as usize][s][a];
                    for (t, x) in image.iter().enumerate() {
                        if f.is_zero(x) {
                            continue;
                        }
                        let signed = if k % 2 == 0 { x.clone() } else { f.neg(x) };
                        row[block + t] = f.add(&row[block + t], &signed);
                    }
                }
                rows.push(row);
            }
        }
        Echelon::from_rows(f.clone(), tgt_sets.len() * tgt_dim, rows).rank()
    }

    fn koszul_dim(&self, i: usize, j: u32) -> usize {
        subsets(self.n, i).len() * self.dim(j as i64 - i as i64)
    }
}

/// Betti table of `R/I` for an artinian ideal, internal degrees `0..=j_max`.
/// Requires `j_max >= sigma + n` so the last syzygy is captured.
pub fn koszul_betti<F: Field>(ideal: &IdealBasis<F>, j_max: u32) -> Result<BettiTable> {
    let sigma = match artinian_check(ideal, j_max) {
        Artinian::Yes { socle_degree } => socle_degree,
        Artinian::Inconclusive => return Err(Error::NotArtinian(j_max)),
    };
    let n = ideal.nvars();
    let needed = sigma + n as u32;
    if j_max < needed {
        return Err(Error::DegreeCapTooSmall {
            given: j_max,
            needed,
        });
    }
    let algebra = QuotientAlgebra::new(ideal, sigma);
    let ranks: BTreeMap<(usize, u32), usize> = (1..=n)
        .flat_map(|i| (0..=j_max).map(move |j| (i, j)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(i, j)| ((i, j), algebra.differential_rank(i, j)))
        .collect();
    let rank = |i: usize, j: u32| ranks.get(&(i, j)).copied().unwrap_or(0);
    let mut entries = Vec::new();
    for i in 0..=n {
        for j in 0..=j_max {
            let dim = algebra.koszul_dim(i, j);
            if dim == 0 {
                continue;
            }
            let beta = dim - rank(i, j) - rank(i + 1, j);
            if beta > 0 {
                entries.push((i, j, beta as u64));
            }
        }
    }
    Ok(BettiTable::from_entries(n, Some(sigma), entries))
}

/// Runs [`artinian_check`] up to `d_cap` and then [`koszul_betti`] with the
/// smallest admissible bound `sigma + n`.
pub fn koszul_betti_auto<F: Field>(ideal: &IdealBasis<F>, d_cap: u32) -> Result<BettiTable> {
    match artinian_check(ideal, d_cap) {
        Artinian::Yes { socle_degree } => koszul_betti(ideal, socle_degree + ideal.nvars() as u32),
        Artinian::Inconclusive => Err(Error::NotArtinian(d_cap)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub euler_characteristic: i64,
    pub euler_zero: bool,
    /// present when Gorenstein checks were requested
    pub last_betti_one: Option<bool>,
    pub dual_symmetric: Option<bool>,
    pub failures: Vec<String>,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Euler characteristic and, when `expect_gorenstein`, `beta_n = 1` and the
/// duality `beta_{i,j} = beta_{n-i, sigma+n-j}`.
pub fn structural_checks(t: &BettiTable, expect_gorenstein: bool) -> StructuralReport {
    let mut failures = Vec::new();
    let euler = t.euler_characteristic();
    if euler != 0 {
        failures.push(format!("alternating sum of Betti numbers is {euler}, expected 0"));
    }
    let (mut last_one, mut dual) = (None, None);
    if expect_gorenstein {
        let n = t.n;
        let last = t.totals()[n];
        last_one = Some(last == 1);
        if last != 1 {
            failures.push(format!("beta_{n} = {last}, expected 1"));
        }
        let sigma = t.sigma.or_else(|| {
            t.nonzero()
                .iter()
                .filter(|e| e.0 == n)
                .map(|e| e.1)
                .max()
                .map(|j| j.saturating_sub(n as u32))
        });
        let symmetric = match sigma {
            Some(s) => {
                let top = s + n as u32;
                t.nonzero()
                    .iter()
                    .all(|&(i, j, b)| j <= top && t.get(n - i, top - j) == b)
            }
            None => false,
        };
        dual = Some(symmetric);
        if !symmetric {
            failures.push("table is not invariant under (i, j) -> (n - i, sigma + n - j)".into());
        }
    }
    StructuralReport {
        euler_characteristic: euler,
        euler_zero: euler == 0,
        last_betti_one: last_one,
        dual_symmetric: dual,
        failures,
    }
}

/// One homological degree of the comparison against an extremal algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiComparison {
    pub i: usize,
    pub beta: u64,
    pub extremal: u64,
    pub at_most: bool,
}

/// Compares total Betti numbers with those of the extremal algebra of the
/// same codimension `n` and initial degree `p`. This is reported, never
/// enforced: the inequality fails in general.
pub fn compare_with_extremal(t: &BettiTable, p: u32) -> Result<Vec<BettiComparison>> {
    let g = t.n as u64;
    let p = u64::from(p);
    let mut shifts = vec![0];
    shifts.extend((0..g - 1).map(|k| p + k));
    shifts.push(2 * p + g - 2);
    let extremal = crate::hvector::pure_resolution_betti(&shifts)?;
    Ok(t
        .totals()
        .into_iter()
        .zip(extremal)
        .enumerate()
        .map(|(i, (beta, e))| {
            let e = u64::try_from(e).unwrap_or(u64::MAX);
            BettiComparison {
                i,
                beta,
                extremal: e,
                at_most: beta <= e,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::field::Rationals;
    use crate::polyring::parse::parse_polynomial;

    fn ideal(n: usize, gens: &[&str]) -> IdealBasis<Rationals> {
        let gens = gens
            .iter()
            .map(|s| parse_polynomial(s, n).unwrap().to_field(&Rationals))
            .collect();
        IdealBasis::new(Rationals, n, gens).unwrap()
    }

    #[test]
    fn regular_sequence_of_two_quadrics() {
        let t = koszul_betti(&ideal(2, &["x1^2", "x2^2"]), 4).unwrap();
        assert_eq!(t.totals(), vec![1, 2, 1]);
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.render_diagram(), "1  -  -\n-  2  -\n-  -  1\n");
        assert!(structural_checks(&t, true).passed());
    }

    #[test]
    fn refuses_bad_bounds() {
        let i = ideal(2, &["x1^2", "x2^2"]);
        assert_eq!(koszul_betti(&i, 3), Err(Error::DegreeCapTooSmall { given: 3, needed: 4 }));
        assert_eq!(koszul_betti(&ideal(3, &["x1"]), 8), Err(Error::NotArtinian(8)));
    }

    #[test]
    fn trivial_table_renders_single_row() {
        let t = BettiTable::from_entries(3, None, [(0, 0, 1)]);
        assert_eq!(t.render_diagram(), "1  -  -  -\n");
    }

    #[test]
    fn extremal_pure_table_checks() {
        let t = BettiTable::pure(4, &[0, 2, 3, 4, 6], &[1, 9, 16, 9, 1]);
        let r = structural_checks(&t, true);
        assert!(r.passed(), "{r:?}");
        let corrupted = BettiTable::pure(4, &[0, 2, 3, 4, 6], &[1, 9, 16, 9, 2]);
        let r = structural_checks(&corrupted, true);
        assert_eq!(r.last_betti_one, Some(false));
        assert!(!r.passed());
    }

    #[test]
    fn betti_hilbert_function_matches_for_maximal_ideal_power() {
        let i = ideal(3, &["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]);
        let t = koszul_betti_auto(&i, 5).unwrap();
        assert_eq!(t.totals(), vec![1, 6, 8, 3]);
        let hf: Vec<i64> = crate::polyring::hilbert_function(&i, 6).into_iter().map(|h| h as i64).collect();
        assert_eq!(t.hilbert_function(6), hf);
        let r = structural_checks(&t, true);
        assert!(r.euler_zero);
        assert_eq!(r.last_betti_one, Some(false));
    }
}
