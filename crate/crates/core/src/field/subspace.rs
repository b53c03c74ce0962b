use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::{vector, Field, Matrix};
use crate::error::{Error, Result};

/// A subspace of `F^n` stored by its reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// stored bases coincide. Ordering is by dimension, then lexicographic on
/// the echelon rows under the field's element order.
#[derive(Debug, Clone)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            rows: (0..ambient).map(|i| vector::unit(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(field: &F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Result<Self> {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Wraps rows that already form a reduced row-echelon basis.
    /// Used by enumeration, which generates canonical forms directly.
    pub(crate) fn from_rref_unchecked(
        field: &F,
        ambient: usize,
        rows: Vec<Vec<F::Elem>>,
        pivots: Vec<usize>,
    ) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            rows,
            pivots,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot coordinates; they index a basis of the quotient `F^n / U`.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Remainder of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&w[p]) {
                let c = f.neg(&w[p]);
                vector::axpy(f, &c, row, &mut w);
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&w[p]) {
                let c = f.neg(&w[p]);
                vector::axpy(f, &c, row, &mut w);
            }
        }
        vector::is_zero(f, &w)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates in the echelon basis.
    pub fn lift(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        vector::combine(&self.field, self.ambient, coords, &self.rows)
    }

    /// Adds `v` to the spanning set, keeping the basis reduced.
    /// Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let f = self.field.clone();
        let w = self.reduce(v);
        let Some(lead) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let w = vector::scale(&f, &f.inv(&w[lead]).expect("nonzero"), &w);
        for row in self.rows.iter_mut() {
            if !f.is_zero(&row[lead]) {
                let c = f.neg(&row[lead]);
                vector::axpy(&f, &c, &w, row);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.rows.insert(pos, w);
        self.pivots.insert(pos, lead);
        true
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v);
        }
        Ok(s)
    }

    /// Intersection via the kernel of the block matrix `[U^T | -V^T]`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f, self.ambient));
        }
        let mut cols: Vec<Vec<F::Elem>> = self.rows.clone();
        cols.extend(other.rows.iter().map(|v| vector::scale(f, &f.neg(&f.one()), v)));
        let block = Matrix::from_columns(f, self.ambient, &cols)?;
        let ker = block.kernel();
        let a = self.dim();
        let vectors: Vec<Vec<F::Elem>> = ker
            .basis()
            .iter()
            .map(|x| vector::combine(f, self.ambient, &x[..a], &self.rows))
            .collect();
        Self::span(f, self.ambient, &vectors)
    }

    /// Whether `other` is a subspace of `self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.dim() <= self.dim() && other.rows.iter().all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    /// Matrix of the projection `F^n -> F^n / U` in the coordinates given
    /// by [`complement_indices`](Self::complement_indices).
    pub fn quotient_map(&self) -> Matrix<F> {
        let f = &self.field;
        let comp = self.complement_indices();
        let columns: Vec<Vec<F::Elem>> = (0..self.ambient)
            .map(|j| {
                let w = self.reduce(&vector::unit(f, self.ambient, j));
                comp.iter().map(|&c| w[c].clone()).collect()
            })
            .collect();
        Matrix::from_columns(f, comp.len(), &columns).expect("consistent shape")
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn map(&self, m: &Matrix<F>) -> Result<Self> {
        if m.cols() != self.ambient {
            return Err(Error::ShapeMismatch(format!(
                "map with {} columns applied to subspace of F^{}",
                m.cols(),
                self.ambient
            )));
        }
        let images: Vec<Vec<F::Elem>> = self
            .rows
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<_>>()?;
        Self::span(&self.field, m.rows(), &images)
    }
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }
}

impl<F: Field> Eq for Subspace<F> {}

impl<F: Field> Hash for Subspace<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.rows.hash(state);
    }
}

impl<F: Field> PartialOrd for Subspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for Subspace<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.rows.len().cmp(&other.rows.len()))
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf, Rationals};
    use proptest::prelude::*;

    fn e(i: usize) -> Vec<num_rational::BigRational> {
        vector::unit(&Rationals, 3, i)
    }

    #[test]
    fn intersection_of_coordinate_planes() {
        let f = Rationals;
        let u = Subspace::span(&f, 3, &[e(0), e(1)]).unwrap();
        let v = Subspace::span(&f, 3, &[e(1), e(2)]).unwrap();
        assert_eq!(u.intersect(&v).unwrap(), Subspace::span(&f, 3, &[e(1)]).unwrap());
    }

    #[test]
    fn sum_and_containment() {
        let f = Rationals;
        let u = Subspace::span(&f, 3, &[e(0)]).unwrap();
        let v = Subspace::span(&f, 3, &[e(1)]).unwrap();
        assert_eq!(u.sum(&v).unwrap(), Subspace::span(&f, 3, &[e(0), e(1)]).unwrap());
        let full = Subspace::full(&f, 3);
        assert!(full.contains(&u).unwrap());
        assert!(!u.contains(&full).unwrap());
        let other = Subspace::zero(&f, 2);
        assert_eq!(u.sum(&other), Err(Error::AmbientMismatch(3, 2)));
    }

    #[test]
    fn quotient_map_kills_subspace() {
        let f = Rationals;
        let v = vector::add(&f, &e(0), &e(2));
        let u = Subspace::span(&f, 3, &[v.clone()]).unwrap();
        let q = u.quotient_map();
        assert_eq!(q.rows(), 2);
        assert!(vector::is_zero(&f, &q.mul_vec(&v).unwrap()));
        assert_eq!(q.rank(), 2);
    }

    fn gf_space(p: u64, n: usize, vecs: &[Vec<u32>]) -> Subspace<Gf> {
        let f = Gf::prime(p).unwrap();
        Subspace::span(&f, n, vecs).unwrap()
    }

    proptest! {
        #[test]
        fn canonical_form_is_basis_independent(
            a in proptest::collection::vec(proptest::collection::vec(0u32..3, 4), 0..4),
            mix in proptest::collection::vec(0u32..3, 16),
        ) {
            let f = Gf::prime(3).unwrap();
            let u = gf_space(3, 4, &a);
            // random combinations of the same generators span a subspace of u
            let combos: Vec<Vec<u32>> = (0..a.len()).map(|i| {
                let coeffs: Vec<u32> = (0..a.len()).map(|j| mix[(i * 4 + j) % 16]).collect();
                vector::combine(&f, 4, &coeffs, &a)
            }).collect();
            let w = gf_space(3, 4, &combos);
            prop_assert!(u.contains(&w).unwrap());
            prop_assert_eq!(u.equals(&w).unwrap(), w.dim() == u.dim());
            prop_assert_eq!(u == w, u.basis() == w.basis());
        }

        #[test]
        fn intersection_dimension_formula(
            a in proptest::collection::vec(proptest::collection::vec(0u32..2, 5), 0..5),
            b in proptest::collection::vec(proptest::collection::vec(0u32..2, 5), 0..5),
        ) {
            let u = gf_space(2, 5, &a);
            let v = gf_space(2, 5, &b);
            let s = u.sum(&v).unwrap();
            let i = u.intersect(&v).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
            prop_assert!(u.contains(&i).unwrap() && v.contains(&i).unwrap());
        }
    }
}
