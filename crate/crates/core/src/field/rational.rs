use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, FieldDescriptor, ScalarLit};
use crate::error::{Error, Result};

/// The field of rational numbers with arbitrary-precision numerators and
/// denominators. Values are kept in lowest terms with positive denominator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Rationals {
    pub fn parse(text: &str) -> Result<BigRational> {
        let t = text.trim();
        let bad = || Error::FieldParseError(format!("'{text}' is not a rational literal"));
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<BigInt>().map_err(|_| bad())?,
                d.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (t.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::FieldParseError(format!("'{text}' has zero denominator")));
        }
        Ok(BigRational::new(num, den))
    }

    pub fn render(r: &BigRational) -> String {
        if r.denom().is_one() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(&self, r: &BigRational) -> Result<BigRational> {
        Ok(r.clone())
    }

    fn contains(&self, a: &BigRational) -> bool {
        // BigRational normalizes on construction; only reject raw values.
        a.denom().is_positive()
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn element(&self, _index: u64) -> Option<BigRational> {
        None
    }

    fn to_literal(&self, a: &BigRational) -> ScalarLit {
        ScalarLit::Text(Self::render(a))
    }

    fn from_literal(&self, lit: &ScalarLit) -> Result<BigRational> {
        match lit {
            ScalarLit::Int(v) => Ok(self.from_i64(*v)),
            ScalarLit::Text(s) => Self::parse(s),
            ScalarLit::Coeffs(_) => Err(Error::FieldParseError(
                "coefficient arrays are not rational literals".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let r = Rationals::parse("6/-4").unwrap();
        assert_eq!(Rationals::render(&r), "-3/2");
        assert_eq!(Rationals::render(&Rationals::parse("  7 ").unwrap()), "7");
        assert!(matches!(Rationals::parse("5/0"), Err(Error::FieldParseError(_))));
        assert!(Rationals::parse("x").is_err());
    }

    #[test]
    fn huge_values_do_not_overflow() {
        let f = Rationals;
        let mut acc = f.from_i64(i64::MAX);
        for _ in 0..4 {
            acc = f.mul(&acc, &acc);
        }
        let back = f.div(&acc, &acc).unwrap();
        assert!(f.is_one(&back));
    }
}
