//! Exact scalar fields, polynomials and linear algebra.
//!
//! Everything downstream is generic over [`Field`]. Two implementations are
//! provided: [`Rationals`] (arbitrary precision) and [`Gf`] (prime fields
//! and their extensions, elements packed as base-`p` digit indices).

mod galois;
mod matrix;
mod poly;
mod rational;
mod subspace;
pub mod vector;

use std::fmt;
use std::hash::Hash;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use galois::Gf;
pub use matrix::Matrix;
pub use poly::{companion_matrix, poly_factor, poly_gcd, Factorization, Poly};
pub use rational::Rationals;
pub use subspace::Subspace;

/// Serializable description of a ground field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldDescriptor {
    Rationals,
    PrimeField {
        p: u64,
    },
    /// `modulus` lists coefficients from the constant term up; it is monic of degree `k`.
    ExtensionField {
        p: u64,
        k: u32,
        modulus: Vec<u64>,
    },
}

impl FieldDescriptor {
    /// Short tag used in file names and CLI flags (`q`, `gf5`, `gf9`).
    pub fn tag(&self) -> String {
        match self {
            FieldDescriptor::Rationals => "q".to_string(),
            FieldDescriptor::PrimeField { p } => format!("gf{p}"),
            FieldDescriptor::ExtensionField { p, k, .. } => format!("gf{}", p.pow(*k)),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField { p } => write!(f, "GF({p})"),
            FieldDescriptor::ExtensionField { p, k, .. } => write!(f, "GF({p}^{k})"),
        }
    }
}

/// A scalar as it appears in files: rationals as `"a/b"` strings, finite
/// field elements as coefficient arrays. Bare integers are accepted on input.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarLit {
    Int(i64),
    Text(String),
    Coeffs(Vec<u64>),
}

impl fmt::Display for ScalarLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarLit::Int(v) => write!(f, "{v}"),
            ScalarLit::Text(s) => write!(f, "{s}"),
            ScalarLit::Coeffs(c) if c.len() == 1 => write!(f, "{}", c[0]),
            ScalarLit::Coeffs(c) => {
                let parts: Vec<String> = c.iter().map(u64::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

/// An exact commutative field.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Image of an integer under the canonical map `Z -> F`.
    fn from_i64(&self, v: i64) -> Self::Elem;

    /// Image of a rational; fails when the denominator vanishes in `F`.
    fn from_rational(&self, r: &BigRational) -> Result<Self::Elem>;

    /// Whether `a` is a valid representative of an element of this field.
    fn contains(&self, a: &Self::Elem) -> bool;

    /// Number of elements, `None` for infinite fields.
    fn order(&self) -> Option<u64>;

    fn characteristic(&self) -> u64;

    /// The element with the given index in the canonical ordering of a
    /// finite field (`0` is zero, `1` is one). `None` when out of range or
    /// the field is infinite.
    fn element(&self, index: u64) -> Option<Self::Elem>;

    fn to_literal(&self, a: &Self::Elem) -> ScalarLit;
    fn from_literal(&self, lit: &ScalarLit) -> Result<Self::Elem>;

    fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Human-readable rendering of a scalar.
    fn format(&self, a: &Self::Elem) -> String {
        self.to_literal(a).to_string()
    }
}

/// Operations accepted by [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithValue<E> {
    Elem(E),
    Bool(bool),
}

/// Checked scalar arithmetic: validates that operands belong to `field`
/// before applying `op`. Binary operations require `b`.
pub fn arith<F: Field>(
    field: &F,
    op: ArithOp,
    a: &F::Elem,
    b: Option<&F::Elem>,
) -> Result<ArithValue<F::Elem>> {
    if !field.contains(a) || b.is_some_and(|b| !field.contains(b)) {
        return Err(Error::FieldMismatch);
    }
    let rhs = || b.ok_or_else(|| Error::ShapeMismatch(format!("{op:?} needs two operands")));
    Ok(match op {
        ArithOp::Add => ArithValue::Elem(field.add(a, rhs()?)),
        ArithOp::Sub => ArithValue::Elem(field.sub(a, rhs()?)),
        ArithOp::Mul => ArithValue::Elem(field.mul(a, rhs()?)),
        ArithOp::Div => ArithValue::Elem(field.div(a, rhs()?)?),
        ArithOp::Neg => ArithValue::Elem(field.neg(a)),
        ArithOp::Inv => ArithValue::Elem(field.inv(a)?),
        ArithOp::Eq => ArithValue::Bool(a == rhs()?),
    })
}

/// Either supported field, chosen at run time from a descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyField {
    Rational(Rationals),
    Finite(Gf),
}

impl AnyField {
    pub fn from_descriptor(desc: &FieldDescriptor) -> Result<Self> {
        Ok(match desc {
            FieldDescriptor::Rationals => AnyField::Rational(Rationals),
            FieldDescriptor::PrimeField { p } => AnyField::Finite(Gf::prime(*p)?),
            FieldDescriptor::ExtensionField { p, k, modulus } => {
                AnyField::Finite(Gf::extension(*p, *k, modulus)?)
            }
        })
    }

    /// Parses `q`/`rationals`, `gf<q>` or `gf<p>^<k>`.
    pub fn parse_tag(tag: &str) -> Result<Self> {
        let t = tag.trim().to_ascii_lowercase();
        if t == "q" || t == "rationals" || t == "rational" {
            return Ok(AnyField::Rational(Rationals));
        }
        let body = t
            .strip_prefix("gf")
            .ok_or_else(|| Error::InvalidField(format!("unknown field tag '{tag}'")))?;
        let body = body.trim_start_matches('(').trim_end_matches(')');
        let order = if let Some((p, k)) = body.split_once('^') {
            let p: u64 = p.parse().map_err(|_| Error::InvalidField(tag.to_string()))?;
            let k: u32 = k.parse().map_err(|_| Error::InvalidField(tag.to_string()))?;
            p.checked_pow(k)
                .ok_or_else(|| Error::InvalidField(tag.to_string()))?
        } else {
            body.parse()
                .map_err(|_| Error::InvalidField(format!("unknown field tag '{tag}'")))?
        };
        Ok(AnyField::Finite(Gf::with_order(order)?))
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            AnyField::Rational(f) => f.descriptor(),
            AnyField::Finite(f) => f.descriptor(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn inverse_of_two_mod_five() {
        let f = Gf::prime(5).unwrap();
        let r = arith(&f, ArithOp::Inv, &2, None).unwrap();
        assert_eq!(r, ArithValue::Elem(3));
    }

    #[test]
    fn rational_sum() {
        let r = arith(&Rationals, ArithOp::Add, &q(1, 2), Some(&q(1, 3))).unwrap();
        assert_eq!(r, ArithValue::Elem(q(5, 6)));
    }

    #[test]
    fn gf4_x_squared_is_x_plus_one() {
        // modulus x^2 + x + 1, element x has digits (0,1) -> index 2
        let f = Gf::extension(2, 2, &[1, 1, 1]).unwrap();
        let x = f.from_literal(&ScalarLit::Coeffs(vec![0, 1])).unwrap();
        let ArithValue::Elem(sq) = arith(&f, ArithOp::Mul, &x, Some(&x)).unwrap() else {
            panic!("expected element")
        };
        assert_eq!(f.to_literal(&sq), ScalarLit::Coeffs(vec![1, 1]));
    }

    #[test]
    fn arith_errors() {
        let f = Gf::prime(5).unwrap();
        assert_eq!(arith(&f, ArithOp::Inv, &0, None), Err(Error::DivisionByZero));
        assert_eq!(arith(&f, ArithOp::Div, &1, Some(&0)), Err(Error::DivisionByZero));
        assert_eq!(arith(&f, ArithOp::Add, &7, Some(&1)), Err(Error::FieldMismatch));
        assert_eq!(
            arith(&Rationals, ArithOp::Eq, &q(2, 4), Some(&q(1, 2))).unwrap(),
            ArithValue::Bool(true)
        );
    }

    #[test]
    fn field_tags() {
        assert_eq!(AnyField::parse_tag("q").unwrap().descriptor(), FieldDescriptor::Rationals);
        assert_eq!(
            AnyField::parse_tag("gf5").unwrap().descriptor(),
            FieldDescriptor::PrimeField { p: 5 }
        );
        assert_eq!(AnyField::parse_tag("gf9").unwrap().descriptor().tag(), "gf9");
        assert_eq!(AnyField::parse_tag("GF(2^2)").unwrap().descriptor().tag(), "gf4");
        assert!(AnyField::parse_tag("gf6").is_err());
        assert!(AnyField::parse_tag("reals").is_err());
    }
}
