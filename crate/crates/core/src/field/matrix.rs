use super::{vector, Field, Subspace};
use crate::error::{Error, Result};

/// Dense row-major matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, cols: usize, rows: &[Vec<F::Elem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::ShapeMismatch(format!(
                    "column of length {} in a matrix with {rows} rows",
                    c.len()
                )));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.field, &self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                vector::axpy(f, self.get(i, k), other.row(k), dst);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} for a matrix with {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !f.is_zero(a) && !f.is_zero(b))
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(&self.field, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r && !f.is_zero(m.get(i, c)) {
                    let factor = f.neg(m.get(i, c));
                    let dst = &mut m.data[i * m.cols..(i + 1) * m.cols];
                    vector::axpy(f, &factor, &pivot_row, dst);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `{v : M v = 0}` as a canonical subspace of `F^cols`.
    pub fn kernel(&self) -> Subspace<F> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis: Vec<Vec<F::Elem>> = free
            .iter()
            .map(|&fc| {
                let mut v = vector::unit(f, self.cols, fc);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(row, fc));
                }
                v
            })
            .collect();
        Subspace::span(f, self.cols, &basis).expect("kernel vectors have ambient length")
    }

    /// Column space as a canonical subspace of `F^rows`.
    pub fn image(&self) -> Subspace<F> {
        let cols: Vec<Vec<F::Elem>> = (0..self.cols).map(|j| self.column(j)).collect();
        Subspace::span(&self.field, self.rows, &cols).expect("columns have ambient length")
    }

    /// Kernel of `M^power`.
    pub fn generalized_kernel(&self, power: usize) -> Result<Subspace<F>> {
        if power == 0 {
            return Err(Error::ShapeMismatch("generalized kernel needs power >= 1".into()));
        }
        Ok(self.pow(power)?.kernel())
    }

    /// One solution of `M x = rhs`.
    pub fn solve(&self, rhs: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if rhs.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "right-hand side of length {} for {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let mut aug = Self::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vector::zero(f, self.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Ok(x)
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf, Rationals};
    use proptest::prelude::*;

    fn q_matrix(rows: &[&[i64]]) -> Matrix<Rationals> {
        let f = Rationals;
        let cols = rows[0].len();
        let rows: Vec<Vec<_>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(&f, cols, &rows).unwrap()
    }

    #[test]
    fn kernel_of_lower_shift() {
        let m = q_matrix(&[&[0, 0], &[1, 0]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], vec![Rationals.zero(), Rationals.one()]);
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(&Rationals, 3);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1, 2]);
    }

    #[test]
    fn generalized_kernel_of_nilpotent() {
        let m = q_matrix(&[&[0, 1], &[0, 0]]);
        assert_eq!(m.generalized_kernel(2).unwrap().dim(), 2);
        assert_eq!(m.generalized_kernel(1).unwrap().dim(), 1);
        assert!(m.generalized_kernel(0).is_err());
    }

    #[test]
    fn solve_and_no_solution() {
        let m = q_matrix(&[&[1, 2], &[2, 4]]);
        let f = Rationals;
        let x = m.solve(&[f.from_i64(3), f.from_i64(6)]).unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![f.from_i64(3), f.from_i64(6)]);
        assert_eq!(m.solve(&[f.from_i64(1), f.from_i64(1)]), Err(Error::NoSolution));
        assert!(matches!(m.solve(&[f.one()]), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn shape_errors() {
        let a = q_matrix(&[&[1, 2, 3]]);
        assert!(a.mul(&a).is_err());
        assert!(a.pow(2).is_err());
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(0u32..3, 1..=30), cols in 1usize..=6) {
            let f = Gf::prime(3).unwrap();
            let rows = entries.len() / cols;
            prop_assume!(rows > 0);
            let data: Vec<Vec<u32>> = entries.chunks(cols).take(rows).map(|c| c.to_vec()).collect();
            let m = Matrix::from_rows(&f, cols, &data).unwrap();
            prop_assert_eq!(m.kernel().dim() + m.image().dim(), cols);
            prop_assert_eq!(m.image().dim(), m.rank());
        }
    }
}
