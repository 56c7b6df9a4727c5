use std::sync::Arc;

use super::{Cyclotomic, CyclotomicField, ExactMatrix, FieldError};

/// A linear subspace of `K^n`, stored by its reduced row-echelon basis.
///
/// The basis is canonical, so derived equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: ExactMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Arc<CyclotomicField>, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: ExactMatrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Arc<CyclotomicField>, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: ExactMatrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn from_spanning(
        field: &Arc<CyclotomicField>,
        ambient_dim: usize,
        vectors: Vec<Vec<Cyclotomic>>,
    ) -> Self {
        let mut builder = EchelonBuilder::new(field, ambient_dim);
        for v in vectors {
            builder.insert(v);
        }
        builder.finish()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        self.basis.field()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Cyclotomic>> {
        self.basis.row_vectors()
    }

    /// `v` minus its projection along the basis onto pivot coordinates: zero
    /// exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (dst, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *dst -= &(&f * b);
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Cyclotomic]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        self.reduce(v).iter().all(Cyclotomic::is_zero)
    }

    fn check_dims(&self, other: &Subspace) -> Result<(), FieldError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(FieldError::DimensionMismatch(
                self.ambient_dim,
                other.ambient_dim,
            ));
        }
        Ok(())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, FieldError> {
        self.check_dims(other)?;
        Ok((0..other.dim()).all(|r| self.contains_vector(other.basis.row(r))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, FieldError> {
        self.check_dims(other)?;
        let mut builder = EchelonBuilder::from_subspace(self);
        for v in other.basis_vectors() {
            builder.insert(v);
        }
        Ok(builder.finish())
    }

    /// Intersection computed as `(U^perp + W^perp)^perp` for the standard
    /// bilinear pairing.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, FieldError> {
        self.check_dims(other)?;
        let u_perp = self.basis.nullspace();
        let w_perp = other.basis.nullspace();
        let both = u_perp.sum(&w_perp)?;
        Ok(both.basis.nullspace())
    }

    /// Vectors spanning the annihilator under the standard pairing.
    pub fn orthogonal_complement(&self) -> Subspace {
        self.basis.nullspace()
    }
}

/// Incrementally maintained reduced echelon basis.
pub struct EchelonBuilder {
    field: Arc<CyclotomicField>,
    ambient_dim: usize,
    rows: Vec<Vec<Cyclotomic>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(field: &Arc<CyclotomicField>, ambient_dim: usize) -> Self {
        EchelonBuilder {
            field: field.clone(),
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(space: &Subspace) -> Self {
        EchelonBuilder {
            field: space.field().clone(),
            ambient_dim: space.ambient_dim,
            rows: space.basis_vectors(),
            pivots: space.pivots.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Add `v` to the span. Returns the new normalized basis vector, or
    /// `None` when `v` was already in the span.
    pub fn insert(&mut self, v: Vec<Cyclotomic>) -> Option<Vec<Cyclotomic>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let mut v = v;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (dst, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *dst -= &(&f * b);
                }
            }
        }
        let pivot = v.iter().position(|x| !x.is_zero())?;
        let inv = v[pivot].inv().expect("pivot is nonzero");
        for x in v.iter_mut().skip(pivot) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let f = row[pivot].clone();
            for (dst, b) in row.iter_mut().zip(&v).skip(pivot) {
                if !b.is_zero() {
                    *dst -= &(&f * b);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v.clone());
        Some(v)
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (dst, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *dst -= &(&f * b);
                }
            }
        }
        v.iter().all(Cyclotomic::is_zero)
    }

    pub fn finish(self) -> Subspace {
        let basis = ExactMatrix::from_rows(&self.field, self.ambient_dim, self.rows);
        Subspace {
            ambient_dim: self.ambient_dim,
            basis,
            pivots: self.pivots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(f: &Arc<CyclotomicField>, rows: &[&[i64]]) -> Vec<Vec<Cyclotomic>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Cyclotomic::from_integer(f, x)).collect())
            .collect()
    }

    #[test]
    fn lattice_identities() {
        let f = CyclotomicField::get(1);
        let v = Subspace::from_spanning(&f, 3, vecs(&f, &[&[1, 2, 0], &[0, 1, 1]]));
        let zero = Subspace::zero(&f, 3);
        let full = Subspace::full(&f, 3);
        assert_eq!(v.sum(&zero).unwrap(), v);
        assert_eq!(v.intersect(&v).unwrap(), v);
        assert!(full.contains(&v).unwrap());
        assert!(!v.contains(&full).unwrap());
        assert_eq!(v.intersect(&zero).unwrap(), zero);
    }

    #[test]
    fn canonical_from_different_spanning_sets() {
        let f = CyclotomicField::get(1);
        let a = Subspace::from_spanning(&f, 3, vecs(&f, &[&[1, 2, 0], &[0, 1, 1]]));
        let b = Subspace::from_spanning(&f, 3, vecs(&f, &[&[1, 3, 1], &[2, 5, 1], &[1, 2, 0]]));
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_of_planes() {
        let f = CyclotomicField::get(1);
        let a = Subspace::from_spanning(&f, 3, vecs(&f, &[&[1, 0, 0], &[0, 1, 0]]));
        let b = Subspace::from_spanning(&f, 3, vecs(&f, &[&[0, 1, 0], &[0, 0, 1]]));
        let line = Subspace::from_spanning(&f, 3, vecs(&f, &[&[0, 5, 0]]));
        assert_eq!(a.intersect(&b).unwrap(), line);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let f = CyclotomicField::get(1);
        let a = Subspace::zero(&f, 2);
        let b = Subspace::zero(&f, 3);
        assert_eq!(a.sum(&b), Err(FieldError::DimensionMismatch(2, 3)));
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&b).is_err());
    }
}
