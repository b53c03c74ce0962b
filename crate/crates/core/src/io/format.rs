//! JSON algebra files.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "field": {"kind": "prime-field", "p": 2},
//!   "dim": 2,
//!   "basis_names": ["a", "a^2"],
//!   "table": [
//!     [[[0], [1]], [[0], [0]]],
//!     [[[0], [1]], [[0], [0]]]
//!   ]
//! }
//! ```
//!
//! `table[i][j]` holds the coordinates of `[b_i, b_j]`.

use serde::{Deserialize, Serialize};

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::{AnyField, Field, FieldDescriptor, Gf, Rationals, ScalarLit};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: u32,
    pub field: FieldDescriptor,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub table: Vec<Vec<Vec<ScalarLit>>>,
}

/// An algebra over a field chosen at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyAlgebra {
    Rational(LeibnizAlgebra<Rationals>),
    Finite(LeibnizAlgebra<Gf>),
}

/// Runs a generic expression on the algebra inside an [`AnyAlgebra`].
#[macro_export]
macro_rules! with_algebra {
    ($any:expr, $l:ident => $body:expr) => {
        match $any {
            $crate::io::format::AnyAlgebra::Rational($l) => $body,
            $crate::io::format::AnyAlgebra::Finite($l) => $body,
        }
    };
}

impl AnyAlgebra {
    pub fn dim(&self) -> usize {
        with_algebra!(self, l => l.dim())
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        with_algebra!(self, l => l.field().descriptor())
    }

    pub fn to_file(&self) -> AlgebraFile {
        with_algebra!(self, l => AlgebraFile::from_algebra(l))
    }
}

impl From<LeibnizAlgebra<Rationals>> for AnyAlgebra {
    fn from(l: LeibnizAlgebra<Rationals>) -> Self {
        AnyAlgebra::Rational(l)
    }
}

impl From<LeibnizAlgebra<Gf>> for AnyAlgebra {
    fn from(l: LeibnizAlgebra<Gf>) -> Self {
        AnyAlgebra::Finite(l)
    }
}

impl AlgebraFile {
    pub fn from_algebra<F: Field>(l: &LeibnizAlgebra<F>) -> Self {
        let f = l.field();
        AlgebraFile {
            format_version: FORMAT_VERSION,
            field: f.descriptor(),
            dim: l.dim(),
            basis_names: l.names().to_vec(),
            table: l
                .table()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| v.iter().map(|x| f.to_literal(x)).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::ParseError {
            line: e.line(),
            column: e.column(),
            reason: e.to_string(),
        })?;
        if file.format_version != FORMAT_VERSION {
            return Err(Error::ParseError {
                line: 0,
                column: 0,
                reason: format!("unsupported format_version {}", file.format_version),
            });
        }
        Ok(file)
    }

    /// Deterministic rendering: one line per product `[b_i, b_j]`.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"format_version\": {},\n", self.format_version));
        out.push_str(&format!("  \"field\": {},\n", js(&self.field)));
        out.push_str(&format!("  \"dim\": {},\n", self.dim));
        out.push_str(&format!("  \"basis_names\": {},\n", js(&self.basis_names)));
        out.push_str("  \"table\": [");
        for (i, row) in self.table.iter().enumerate() {
            out.push_str(if i == 0 { "\n    [" } else { ",\n    [" });
            for (j, entry) in row.iter().enumerate() {
                out.push_str(if j == 0 { "\n      " } else { ",\n      " });
                out.push_str(&js(entry));
            }
            out.push_str(if row.is_empty() { "]" } else { "\n    ]" });
        }
        out.push_str(if self.table.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
        out
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.dim;
        if self.basis_names.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "{} basis names for dimension {n}",
                self.basis_names.len()
            )));
        }
        if self.table.len() != n
            || self.table.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n))
        {
            return Err(Error::ShapeMismatch(format!("table must be {n} x {n} x {n}")));
        }
        Ok(())
    }

    fn typed<F: Field>(&self, f: &F, verify: bool) -> Result<LeibnizAlgebra<F>> {
        self.check_shape()?;
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|x| f.from_literal(x)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if verify {
            LeibnizAlgebra::new(f, self.basis_names.clone(), table)
        } else {
            LeibnizAlgebra::new_unchecked(f, self.basis_names.clone(), table)
        }
    }

    fn build_with(&self, verify: bool) -> Result<AnyAlgebra> {
        Ok(match AnyField::from_descriptor(&self.field)? {
            AnyField::Rational(f) => AnyAlgebra::Rational(self.typed(&f, verify)?),
            AnyField::Finite(f) => AnyAlgebra::Finite(self.typed(&f, verify)?),
        })
    }

    /// Builds the algebra, checking the Leibniz identity.
    pub fn build(&self) -> Result<AnyAlgebra> {
        self.build_with(true)
    }

    /// Builds the algebra checking only shapes and scalars.
    pub fn build_unchecked(&self) -> Result<AnyAlgebra> {
        self.build_with(false)
    }
}

fn js<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Parses and verifies an algebra file.
pub fn parse_algebra(text: &str) -> Result<AnyAlgebra> {
    AlgebraFile::parse(text)?.build()
}

pub fn serialize_algebra<F: Field>(l: &LeibnizAlgebra<F>) -> String {
    AlgebraFile::from_algebra(l).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::fixtures;

    #[test]
    fn c2_round_trip() {
        let f = Gf::prime(2).unwrap();
        let text = serialize_algebra(&fixtures::c2(&f));
        let AnyAlgebra::Finite(l) = parse_algebra(&text).unwrap() else {
            panic!("field changed");
        };
        assert_eq!(l, fixtures::c2(&f));
        assert_eq!(l.product(0, 0), &[0, 1]);
        assert_eq!(l.product(1, 0), &[0, 1]);
    }

    #[test]
    fn normalized_output_is_stable() {
        let q = Rationals;
        let h3 = fixtures::h3(&q);
        let text = serialize_algebra(&h3);
        let again = parse_algebra(&text).unwrap().to_file().to_json();
        assert_eq!(text, again);
        assert!(text.contains("\"-1\""));
        // integers are accepted on input and normalized to strings
        let loose = text.replace("\"-1\"", "-1").replace("\"1\"", "1");
        assert_eq!(parse_algebra(&loose).unwrap().to_file().to_json(), text);
    }

    #[test]
    fn rejects_bad_input() {
        let q = Rationals;
        let text = serialize_algebra(&fixtures::c2(&q)).replacen("\"1\"", "\"5/0\"", 1);
        assert!(matches!(parse_algebra(&text), Err(Error::FieldParseError(_))));
        assert!(matches!(parse_algebra("{"), Err(Error::ParseError { .. })));
        let text = serialize_algebra(&fixtures::c2(&q)).replace("\"format_version\": 1", "\"format_version\": 9");
        assert!(matches!(parse_algebra(&text), Err(Error::ParseError { .. })));
        let text = serialize_algebra(&fixtures::c2(&q)).replace("\"dim\": 2", "\"dim\": 3");
        assert!(matches!(parse_algebra(&text), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn perturbed_table_is_not_leibniz() {
        let q = Rationals;
        let mut file = AlgebraFile::from_algebra(&fixtures::h3(&q));
        file.table[2][0][2] = ScalarLit::Int(1);
        assert!(matches!(file.build(), Err(Error::NotLeibniz(_))));
        assert!(file.build_unchecked().is_ok());
    }

    #[test]
    fn extension_field_round_trip() {
        let f = Gf::with_order(9).unwrap();
        let l = fixtures::sl2(&f);
        let text = serialize_algebra(&l);
        assert_eq!(parse_algebra(&text).unwrap(), AnyAlgebra::Finite(l));
    }
}
