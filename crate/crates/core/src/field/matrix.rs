use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

use super::{Cyclotomic, CyclotomicField, Subspace};

/// Dense row-major matrix over a cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: Arc<CyclotomicField>,
    rows: usize,
    cols: usize,
    entries: Vec<Cyclotomic>,
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(field: &Arc<CyclotomicField>, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field: field.clone(),
            rows,
            cols,
            entries: vec![Cyclotomic::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &Arc<CyclotomicField>, dim: usize) -> Self {
        let mut m = Self::zeros(field, dim, dim);
        for i in 0..dim {
            m.set(i, i, Cyclotomic::one(field));
        }
        m
    }

    pub fn scalar(field: &Arc<CyclotomicField>, dim: usize, value: &Cyclotomic) -> Self {
        let mut m = Self::zeros(field, dim, dim);
        for i in 0..dim {
            m.set(i, i, value.clone());
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(
        field: &Arc<CyclotomicField>,
        cols: usize,
        rows: Vec<Vec<Cyclotomic>>,
    ) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            entries.extend(row);
        }
        ExactMatrix {
            field: field.clone(),
            rows: n,
            cols,
            entries,
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Cyclotomic) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Cyclotomic] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Cyclotomic::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scaled(&self, factor: &Cyclotomic) -> Self {
        ExactMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn add(&self, other: &ExactMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ExactMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn matmul(&self, other: &ExactMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * other.cols + c] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Cyclotomic::zero(&self.field);
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, exponent: usize) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(&self.field, self.rows);
        for _ in 0..exponent {
            acc = acc.matmul(self);
        }
        acc
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(&self.field);
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    /// Reduced row-echelon form (unique for the row space).
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for c in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(p) = (pivot_row..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, p);
            let inv = m.get(pivot_row, c).inv().expect("pivot is nonzero");
            for k in c..m.cols {
                let v = m.get(pivot_row, k) * &inv;
                m.set(pivot_row, k, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, c).is_zero() {
                    continue;
                }
                let f = m.get(r, c).clone();
                for k in c..m.cols {
                    let pv = m.get(pivot_row, k);
                    if pv.is_zero() {
                        continue;
                    }
                    let sub = &f * pv;
                    m.entries[r * m.cols + k] -= &sub;
                }
            }
            pivots.push(c);
            pivot_row += 1;
        }
        Rref {
            rank: pivots.len(),
            matrix: m,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// `{v : self * v = 0}` as a subspace of the column space.
    pub fn nullspace(&self) -> Subspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = vec![Cyclotomic::zero(&self.field); self.cols];
                v[f] = Cyclotomic::one(&self.field);
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(r, f);
                }
                v
            })
            .collect();
        Subspace::from_spanning(&self.field, self.cols, vectors)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.matmul(rhs)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat_matrix(rows: &[&[i64]]) -> ExactMatrix {
        let f = CyclotomicField::get(1);
        let cols = rows.first().map_or(0, |r| r.len());
        ExactMatrix::from_rows(
            &f,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Cyclotomic::from_integer(&f, x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_small_cases() {
        let zero = rat_matrix(&[&[0, 0], &[0, 0]]);
        let r = zero.rref();
        assert_eq!(r.rank, 0);
        assert!(r.matrix.is_zero());

        let id = ExactMatrix::identity(&CyclotomicField::get(1), 3);
        let r = id.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.matrix, id);

        let ones = rat_matrix(&[&[1, 1], &[1, 1]]);
        let r = ones.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, rat_matrix(&[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn nullspace_small_cases() {
        let f = CyclotomicField::get(1);
        assert_eq!(ExactMatrix::identity(&f, 3).nullspace().dim(), 0);
        assert_eq!(
            rat_matrix(&[&[0, 0], &[0, 0]]).nullspace(),
            Subspace::full(&f, 2)
        );
        let ns = rat_matrix(&[&[1, 1]]).nullspace();
        let expected = Subspace::from_spanning(
            &f,
            2,
            vec![vec![
                Cyclotomic::from_integer(&f, 1),
                Cyclotomic::from_integer(&f, -1),
            ]],
        );
        assert_eq!(ns, expected);
    }

    #[test]
    fn rank_nullity_over_cyclotomics() {
        let f = CyclotomicField::get(3);
        let w = Cyclotomic::root_of_unity(3, 1);
        let one = Cyclotomic::one(&f);
        let m = ExactMatrix::from_rows(
            &f,
            3,
            vec![
                vec![one.clone(), w.clone(), &w * &w],
                vec![w.clone(), &w * &w, one.clone()],
                vec![one.clone(), one.clone(), one.clone()],
            ],
        );
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.rank + m.nullspace().dim(), 3);
        assert_eq!(r.matrix.rref().matrix, r.matrix);
    }
}
