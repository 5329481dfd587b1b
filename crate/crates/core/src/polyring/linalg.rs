//! Dense exact Gauss-Jordan elimination.

use super::field::Field;

/// Reduced row echelon form of a row space. Rows are sorted by pivot column
/// and every pivot column is zero outside its own row.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    /// column -> row holding its pivot
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> PartialEq for Echelon<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ncols == other.ncols && self.rows == other.rows
    }
}

impl<F: Field> Echelon<F> {
    pub fn from_rows(field: F, ncols: usize, mut rows: Vec<Vec<F::Elem>>) -> Self {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..ncols {
            if rank == rows.len() {
                break;
            }
            let Some(found) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
                continue;
            };
            rows.swap(rank, found);
            let inv = field.inv(&rows[rank][col]);
            for x in rows[rank][col..].iter_mut() {
                *x = field.mul(x, &inv);
            }
            let (before, rest) = rows.split_at_mut(rank);
            let (pivot, after) = rest.split_first_mut().expect("pivot row");
            for row in before.iter_mut().chain(after.iter_mut()) {
                let factor = row[col].clone();
                if field.is_zero(&factor) {
                    continue;
                }
                for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    if !field.is_zero(p) {
                        *x = field.sub(x, &field.mul(&factor, p));
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        let mut pivot_row = vec![None; ncols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_row[c] = Some(r);
        }
        Echelon {
            field,
            ncols,
            rows,
            pivots,
            pivot_row,
        }
    }

    pub fn empty(field: F, ncols: usize) -> Self {
        Self::from_rows(field, ncols, Vec::new())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn pivot_row_of(&self, col: usize) -> Option<usize> {
        self.pivot_row[col]
    }

    /// Columns without a pivot, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    /// Reduces `v` modulo the row space; afterwards every pivot coordinate is zero.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (r, &c) in self.pivots.iter().enumerate() {
            let factor = v[c].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for (x, p) in v[c..].iter_mut().zip(&self.rows[r][c..]) {
                if !f.is_zero(p) {
                    *x = f.sub(x, &f.mul(&factor, p));
                }
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Basis of `{x : A x = 0}` where `A` has these rows, one vector per free
    /// column, itself in reduced echelon form.
    pub fn kernel(&self) -> Echelon<F> {
        let f = &self.field;
        let free = self.free_columns();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![f.zero(); self.ncols];
            v[fc] = f.one();
            for (r, &pc) in self.pivots.iter().enumerate() {
                v[pc] = f.neg(&self.rows[r][fc]);
            }
            basis.push(v);
        }
        Echelon::from_rows(f.clone(), self.ncols, basis)
    }
}

/// Rank of the matrix with the given rows.
pub fn rank<F: Field>(field: &F, ncols: usize, rows: Vec<Vec<F::Elem>>) -> usize {
    Echelon::from_rows(field.clone(), ncols, rows).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect()
    }

    #[test]
    fn rref_and_rank() {
        let e = Echelon::from_rows(Rationals, 3, q(&[&[2, 4, 6], &[1, 2, 4], &[3, 6, 10]]));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots(), &[0, 2]);
        assert_eq!(e.rows(), q(&[&[1, 2, 0], &[0, 0, 1]]).as_slice());
        assert!(e.contains(&q(&[&[5, 10, 7]])[0]));
        assert!(!e.contains(&q(&[&[0, 1, 0]])[0]));
    }

    #[test]
    fn kernel_is_annihilated() {
        let rows = q(&[&[1, 1, 0, 2], &[0, 1, 1, 1]]);
        let e = Echelon::from_rows(Rationals, 4, rows.clone());
        let k = e.kernel();
        assert_eq!(k.rank(), 2);
        for v in k.rows() {
            for r in &rows {
                let dot: BigRational = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert_eq!(dot, BigRational::from_integer(0.into()));
            }
        }
    }

    #[test]
    fn prime_field_rank_drop() {
        // singular mod 5 but not over Q
        let f = PrimeField::new(5).unwrap();
        let rows = vec![vec![1, 2], vec![3, 1]];
        assert_eq!(rank(&f, 2, rows), 1);
        assert_eq!(rank(&Rationals, 2, q(&[&[1, 2], &[3, 1]])), 2);
    }

    #[test]
    fn empty_and_zero() {
        let e = Echelon::<Rationals>::empty(Rationals, 3);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.kernel().rank(), 3);
        let z = Echelon::from_rows(Rationals, 2, q(&[&[0, 0]]));
        assert_eq!(z.rank(), 0);
    }
}
