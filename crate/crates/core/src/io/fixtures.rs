//! The named test algebras, built over any field from integer constants.

use crate::algebra::LeibnizAlgebra;
use crate::cyclic::CyclicSpec;
use crate::field::{vector, Field};

/// Names of the fixtures in the order returned by [`all`].
pub const NAMES: [&str; 7] = ["a2", "r2", "h3", "sl2", "c2", "c3a", "c3b"];

/// Builds a table from integer entries `(i, j, k, c)` meaning
/// `[b_i, b_j]` has coefficient `c` on `b_k`.
fn from_entries<F: Field>(field: &F, names: &[&str], entries: &[(usize, usize, usize, i64)]) -> LeibnizAlgebra<F> {
    let n = names.len();
    let mut table = vec![vec![vector::zero(field, n); n]; n];
    for &(i, j, k, c) in entries {
        table[i][j][k] = field.add(&table[i][j][k], &field.from_i64(c));
    }
    LeibnizAlgebra::new(field, names.iter().map(|s| s.to_string()).collect(), table)
        .expect("fixture satisfies the Leibniz identity")
}

/// Two-dimensional abelian algebra.
pub fn a2<F: Field>(field: &F) -> LeibnizAlgebra<F> {
    LeibnizAlgebra::abelian(field, 2)
}

/// Two-dimensional non-abelian Lie algebra: `[e1, e2] = e1`.
pub fn r2<F: Field>(field: &F) -> LeibnizAlgebra<F> {
    from_entries(field, &["e1", "e2"], &[(0, 1, 0, 1), (1, 0, 0, -1)])
}

/// Heisenberg algebra: `[x, y] = z`.
pub fn h3<F: Field>(field: &F) -> LeibnizAlgebra<F> {
    from_entries(field, &["x", "y", "z"], &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// `sl(2)` on `e, f, h` with `[e, f] = h`, `[h, e] = 2e`, `[h, f] = -2f`.
pub fn sl2<F: Field>(field: &F) -> LeibnizAlgebra<F> {
    from_entries(
        field,
        &["e", "f", "h"],
        &[
            (0, 1, 2, 1),
            (1, 0, 2, -1),
            (2, 0, 0, 2),
            (0, 2, 0, -2),
            (2, 1, 1, -2),
            (1, 2, 1, 2),
        ],
    )
}

fn cyclic<F: Field>(field: &F, alphas: &[i64]) -> LeibnizAlgebra<F> {
    let spec = CyclicSpec::new(field, alphas.iter().map(|&a| field.from_i64(a)).collect())
        .expect("valid cyclic spec");
    spec.build()
}

/// Cyclic algebra with `[a^2, a] = a^2`.
pub fn c2<F: Field>(field: &F) -> LeibnizAlgebra<F> {
    cyclic(field, &[1])
}

/// Cyclic algebra with `[a^3, a] = a^3`.
pub fn c3a<F: Field>(field: &F) -> LeibnizAlgebra<F> {
    cyclic(field, &[0, 1])
}

/// Cyclic algebra with `[a^3, a] = a^2`.
pub fn c3b<F: Field>(field: &F) -> LeibnizAlgebra<F> {
    cyclic(field, &[1, 0])
}

pub fn by_name<F: Field>(field: &F, name: &str) -> Option<LeibnizAlgebra<F>> {
    Some(match name {
        "a2" => a2(field),
        "r2" => r2(field),
        "h3" => h3(field),
        "sl2" => sl2(field),
        "c2" => c2(field),
        "c3a" => c3a(field),
        "c3b" => c3b(field),
        _ => return None,
    })
}

/// All fixtures in [`NAMES`] order.
pub fn all<F: Field>(field: &F) -> Vec<LeibnizAlgebra<F>> {
    NAMES.iter().map(|n| by_name(field, n).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf, Rationals};

    #[test]
    fn fixtures_are_leibniz_everywhere() {
        for l in all(&Rationals) {
            assert!(l.verify_leibniz().is_ok());
        }
        for q in [2, 3, 4, 5, 9] {
            let f = Gf::with_order(q).unwrap();
            for l in all(&f) {
                assert!(l.verify_leibniz().is_ok());
            }
        }
    }

    #[test]
    fn heisenberg_centre_is_a_line() {
        assert_eq!(h3(&Rationals).centre().dim(), 1);
    }
}
