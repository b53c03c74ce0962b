//! Leibniz algebras given by structure constants.
//!
//! The convention throughout is the right Leibniz identity
//! `[x,[y,z]] = [[x,y],z] - [[x,z],y]`, so right multiplications are
//! derivations and `[L, Leib(L)] = 0`.

mod enumerate;
mod subspaces;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{vector, Field, Matrix, ScalarLit, Subspace};

pub use enumerate::{
    frattini_ideal, gaussian_binomial, socle_analysis, subspace_count, EnumKind, Enumerator,
    SocleAnalysis, DEFAULT_BUDGET,
};
pub use subspaces::{Side, SubFlags, SubHandle};

/// First failure of the Leibniz identity on basis vectors `(b_i, b_j, b_k)`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `[b_i,[b_j,b_k]]`
    pub lhs: Vec<ScalarLit>,
    /// `[[b_i,b_j],b_k] - [[b_i,b_k],b_j]`
    pub rhs: Vec<ScalarLit>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[ScalarLit]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "triple ({}, {}, {}): lhs ({}) != rhs ({})",
            self.i,
            self.j,
            self.k,
            show(&self.lhs),
            show(&self.rhs)
        )
    }
}

/// A finite-dimensional algebra over `F` with `[b_i, b_j] = sum_k c[i][j][k] b_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra<F: Field> {
    field: F,
    names: Vec<String>,
    table: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> LeibnizAlgebra<F> {
    /// Builds an algebra and checks the Leibniz identity on all basis triples.
    pub fn new(field: &F, names: Vec<String>, table: Vec<Vec<Vec<F::Elem>>>) -> Result<Self> {
        let alg = Self::new_unchecked(field, names, table)?;
        match alg.verify_leibniz() {
            Ok(()) => Ok(alg),
            Err(v) => Err(Error::NotLeibniz(Box::new(v))),
        }
    }

    /// Builds a table without checking the Leibniz identity; only shapes
    /// and field membership are validated.
    pub fn new_unchecked(
        field: &F,
        names: Vec<String>,
        table: Vec<Vec<Vec<F::Elem>>>,
    ) -> Result<Self> {
        let n = names.len();
        if table.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: table.len(),
            });
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for v in row {
                if v.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: v.len(),
                    });
                }
                if v.iter().any(|x| !field.contains(x)) {
                    return Err(Error::FieldMismatch);
                }
            }
        }
        Ok(LeibnizAlgebra {
            field: field.clone(),
            names,
            table,
        })
    }

    pub fn abelian(field: &F, n: usize) -> Self {
        let names = (1..=n).map(|i| format!("e{i}")).collect();
        let table = vec![vec![vector::zero(field, n); n]; n];
        LeibnizAlgebra {
            field: field.clone(),
            names,
            table,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<Vec<F::Elem>>] {
        &self.table
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn product(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.table[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        vector::unit(&self.field, self.dim(), i)
    }

    fn check_len(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `[u, v]`, the bilinear extension of the table.
    pub fn multiply(&self, u: &[F::Elem], v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.mul(u, v))
    }

    /// Unchecked product for internal use; lengths must equal `dim`.
    pub(crate) fn mul(&self, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim();
        let mut out = vector::zero(f, n);
        for (i, ui) in u.iter().enumerate() {
            if f.is_zero(ui) {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if f.is_zero(vj) {
                    continue;
                }
                vector::axpy(f, &f.mul(ui, vj), &self.table[i][j], &mut out);
            }
        }
        out
    }

    /// Checks the identity on every basis triple in lexicographic order.
    pub fn verify_leibniz(&self) -> std::result::Result<(), Violation> {
        let f = &self.field;
        let n = self.dim();
        for i in 0..n {
            let bi = self.basis_vector(i);
            for j in 0..n {
                let bij = &self.table[i][j];
                for k in 0..n {
                    let lhs = self.mul(&bi, &self.table[j][k]);
                    let bk = self.basis_vector(k);
                    let bj = self.basis_vector(j);
                    let rhs = vector::sub(
                        f,
                        &self.mul(bij, &bk),
                        &self.mul(&self.table[i][k], &bj),
                    );
                    if lhs != rhs {
                        return Err(Violation {
                            i,
                            j,
                            k,
                            lhs: lhs.iter().map(|x| f.to_literal(x)).collect(),
                            rhs: rhs.iter().map(|x| f.to_literal(x)).collect(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `R_x: y -> [y, x]` or `L_x: y -> [x, y]` in the algebra basis.
    pub fn mult_operator(&self, x: &[F::Elem], side: Side) -> Result<Matrix<F>> {
        self.check_len(x)?;
        Ok(self.op(x, side))
    }

    pub(crate) fn op(&self, x: &[F::Elem], side: Side) -> Matrix<F> {
        let n = self.dim();
        let columns: Vec<Vec<F::Elem>> = (0..n)
            .map(|j| {
                let bj = self.basis_vector(j);
                match side {
                    Side::Right => self.mul(&bj, x),
                    Side::Left => self.mul(x, &bj),
                }
            })
            .collect();
        Matrix::from_columns(&self.field, n, &columns).expect("square")
    }

    /// `span{[u, v] : u in U, v in V}`.
    pub fn product_space(&self, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
        let mut out = Subspace::zero(&self.field, self.dim());
        for a in u.basis() {
            for b in v.basis() {
                out.insert(&self.mul(a, b));
            }
        }
        out
    }

    pub fn full(&self) -> Subspace<F> {
        Subspace::full(&self.field, self.dim())
    }

    pub fn zero_space(&self) -> Subspace<F> {
        Subspace::zero(&self.field, self.dim())
    }

    /// `L^2 = [L, L]`.
    pub fn derived(&self) -> Subspace<F> {
        let mut out = self.zero_space();
        for row in &self.table {
            for v in row {
                out.insert(v);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table
            .iter()
            .all(|row| row.iter().all(|v| vector::is_zero(&self.field, v)))
    }

    /// Antisymmetry on the basis: `[b_i, b_i] = 0` and `[b_i, b_j] = -[b_j, b_i]`.
    pub fn is_lie(&self) -> bool {
        let f = &self.field;
        let n = self.dim();
        (0..n).all(|i| {
            (i..n).all(|j| {
                vector::is_zero(f, &vector::add(f, &self.table[i][j], &self.table[j][i]))
                    && (i != j || vector::is_zero(f, &self.table[i][i]))
            })
        })
    }

    /// The same table over another field. Rational scalars are reduced
    /// into the target; other scalars must be valid literals there.
    pub fn reinterpret<G: Field>(&self, target: &G) -> Result<LeibnizAlgebra<G>> {
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .map(|x| match self.field.to_literal(x) {
                                ScalarLit::Text(t) => target.from_rational(&crate::field::Rationals::parse(&t)?),
                                lit => target.from_literal(&lit),
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        LeibnizAlgebra::new(target, self.names.clone(), table)
    }

    /// Block-diagonal sum; basis names of the second summand are primed when
    /// they clash with the first.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let mut names = self.names.clone();
        for name in &other.names {
            let mut candidate = name.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let mut table = vec![vec![vector::zero(f, n); n]; n];
        for i in 0..n1 {
            for j in 0..n1 {
                table[i][j][..n1].clone_from_slice(&self.table[i][j]);
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                table[n1 + i][n1 + j][n1..].clone_from_slice(&other.table[i][j]);
            }
        }
        Ok(LeibnizAlgebra {
            field: f.clone(),
            names,
            table,
        })
    }

    /// `L / I` on the basis of non-pivot coordinates of `I`, with the
    /// projection matrix `L -> L / I`.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<(Self, Matrix<F>)> {
        if ideal.ambient() != self.dim() {
            return Err(Error::AmbientMismatch(self.dim(), ideal.ambient()));
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let proj = ideal.quotient_map();
        let comp = ideal.complement_indices();
        let names = comp.iter().map(|&c| self.names[c].clone()).collect();
        let table = comp
            .iter()
            .map(|&a| {
                comp.iter()
                    .map(|&b| proj.mul_vec(&self.table[a][b]).expect("shape"))
                    .collect()
            })
            .collect();
        Ok((
            LeibnizAlgebra {
                field: self.field.clone(),
                names,
                table,
            },
            proj,
        ))
    }

    /// A subalgebra as an algebra in its own right, on the echelon basis of `s`.
    pub fn restrict(&self, s: &Subspace<F>) -> Result<Self> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        let names = (1..=s.dim()).map(|i| format!("u{i}")).collect();
        let table = s
            .basis()
            .iter()
            .map(|u| {
                s.basis()
                    .iter()
                    .map(|v| s.coordinates(&self.mul(u, v)).expect("closed"))
                    .collect()
            })
            .collect();
        Ok(LeibnizAlgebra {
            field: self.field.clone(),
            names,
            table,
        })
    }

    pub fn is_subalgebra(&self, s: &Subspace<F>) -> bool {
        s.basis()
            .iter()
            .all(|u| s.basis().iter().all(|v| s.contains_vector(&self.mul(u, v))))
    }

    /// `[L, U] ⊆ U`
    pub fn is_left_ideal(&self, s: &Subspace<F>) -> bool {
        s.basis()
            .iter()
            .all(|u| (0..self.dim()).all(|i| s.contains_vector(&self.mul(&self.basis_vector(i), u))))
    }

    /// `[U, L] ⊆ U`
    pub fn is_right_ideal(&self, s: &Subspace<F>) -> bool {
        s.basis()
            .iter()
            .all(|u| (0..self.dim()).all(|i| s.contains_vector(&self.mul(u, &self.basis_vector(i)))))
    }

    pub fn is_ideal(&self, s: &Subspace<F>) -> bool {
        self.is_right_ideal(s) && self.is_left_ideal(s)
    }

    /// Nilpotency of the subalgebra `s`: its lower central series reaches zero.
    pub fn is_nilpotent_sub(&self, s: &Subspace<F>) -> bool {
        self.sub_nilpotency_class(s).is_some()
    }

    /// Nilpotency class of the subalgebra `s` (`0` for the zero subspace).
    pub fn sub_nilpotency_class(&self, s: &Subspace<F>) -> Option<usize> {
        let mut term = s.clone();
        let mut class = 0;
        while !term.is_zero() {
            let next = self.product_space(&term, s);
            if next.dim() == term.dim() {
                return None;
            }
            term = next;
            class += 1;
        }
        Some(class)
    }

    pub fn is_abelian_sub(&self, s: &Subspace<F>) -> bool {
        self.product_space(s, s).is_zero()
    }

    /// Smallest subalgebra containing the generators.
    pub fn subalgebra_closure(&self, gens: &[Vec<F::Elem>]) -> Result<Subspace<F>> {
        let mut s = Subspace::span(&self.field, self.dim(), gens)?;
        loop {
            let basis = s.basis().to_vec();
            let mut grew = false;
            for u in &basis {
                for v in &basis {
                    grew |= s.insert(&self.mul(u, v));
                }
            }
            if !grew {
                return Ok(s);
            }
        }
    }

    /// Smallest two-sided ideal containing the generators.
    pub fn ideal_closure(&self, gens: &[Vec<F::Elem>]) -> Result<Subspace<F>> {
        let mut s = Subspace::span(&self.field, self.dim(), gens)?;
        self.grow_to_ideal(&mut s);
        Ok(s)
    }

    pub(crate) fn grow_to_ideal(&self, s: &mut Subspace<F>) {
        let n = self.dim();
        let mut frontier: Vec<Vec<F::Elem>> = s.basis().to_vec();
        while let Some(u) = frontier.pop() {
            for i in 0..n {
                let b = self.basis_vector(i);
                for w in [self.mul(&u, &b), self.mul(&b, &u)] {
                    if s.insert(&w) {
                        frontier.push(w);
                    }
                }
            }
        }
    }
}
