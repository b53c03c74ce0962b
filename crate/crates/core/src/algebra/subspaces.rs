use std::ops::Deref;

use serde::{Deserialize, Serialize};

use super::LeibnizAlgebra;
use crate::field::{vector, Field, Matrix, Subspace};

/// Which multiplication operator: `Right` is `R_x(y) = [y, x]`, `Left` is
/// `L_x(y) = [x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubFlags {
    pub is_subalgebra: bool,
    pub is_left_ideal: bool,
    pub is_right_ideal: bool,
    pub is_ideal: bool,
}

/// A subspace of an algebra together with its closure properties.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubHandle<F: Field> {
    carrier: Subspace<F>,
    flags: SubFlags,
}

impl<F: Field> SubHandle<F> {
    pub fn carrier(&self) -> &Subspace<F> {
        &self.carrier
    }

    pub fn into_carrier(self) -> Subspace<F> {
        self.carrier
    }

    pub fn flags(&self) -> SubFlags {
        self.flags
    }
}

impl<F: Field> Deref for SubHandle<F> {
    type Target = Subspace<F>;

    fn deref(&self) -> &Subspace<F> {
        &self.carrier
    }
}

impl<F: Field> LeibnizAlgebra<F> {
    /// Wraps a subspace, computing its flags.
    pub fn handle(&self, s: Subspace<F>) -> SubHandle<F> {
        let is_subalgebra = self.is_subalgebra(&s);
        let is_left_ideal = self.is_left_ideal(&s);
        let is_right_ideal = self.is_right_ideal(&s);
        SubHandle {
            carrier: s,
            flags: SubFlags {
                is_subalgebra,
                is_left_ideal,
                is_right_ideal,
                is_ideal: is_left_ideal && is_right_ideal,
            },
        }
    }

    /// `Leib(L)`, the span of all squares.
    pub fn leib_kernel(&self) -> SubHandle<F> {
        let f = self.field();
        let n = self.dim();
        let mut s = self.zero_space();
        for i in 0..n {
            s.insert(self.product(i, i));
            for j in i + 1..n {
                s.insert(&vector::add(f, self.product(i, j), self.product(j, i)));
            }
        }
        self.handle(s)
    }

    /// Kernel of the stacked operators `x -> [x, b_i]` and `x -> [b_i, x]`
    /// for the given vectors `b_i`.
    fn annihilator(&self, vectors: &[Vec<F::Elem>]) -> Subspace<F> {
        let n = self.dim();
        if vectors.is_empty() {
            return self.full();
        }
        let mut stacked = Matrix::zeros(self.field(), 0, n);
        for v in vectors {
            stacked = stacked.vstack(&self.op(v, super::Side::Right)).expect("shape");
            stacked = stacked.vstack(&self.op(v, super::Side::Left)).expect("shape");
        }
        stacked.kernel()
    }

    /// `Z(L) = {z : [z, x] = [x, z] = 0 for all x}`.
    pub fn centre(&self) -> SubHandle<F> {
        let basis: Vec<_> = (0..self.dim()).map(|i| self.basis_vector(i)).collect();
        self.handle(self.annihilator(&basis))
    }

    /// `C_L(U) = {x : [x, U] = [U, x] = 0}`.
    pub fn centralizer(&self, u: &Subspace<F>) -> SubHandle<F> {
        self.handle(self.annihilator(u.basis()))
    }

    /// `{x : [x, U] ⊆ U and [U, x] ⊆ U}`.
    pub fn normalizer(&self, u: &Subspace<F>) -> SubHandle<F> {
        let n = self.dim();
        let q = u.quotient_map();
        let mut stacked = Matrix::zeros(self.field(), 0, n);
        for v in u.basis() {
            for side in [Side::Right, Side::Left] {
                let m = q.mul(&self.op(v, side)).expect("shape");
                stacked = stacked.vstack(&m).expect("shape");
            }
        }
        self.handle(stacked.kernel())
    }

    pub fn subalgebra_closure_handle(&self, gens: &[Vec<F::Elem>]) -> crate::Result<SubHandle<F>> {
        Ok(self.handle(self.subalgebra_closure(gens)?))
    }

    pub fn ideal_closure_handle(&self, gens: &[Vec<F::Elem>]) -> crate::Result<SubHandle<F>> {
        Ok(self.handle(self.ideal_closure(gens)?))
    }
}
