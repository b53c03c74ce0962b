//! Derived, lower central and lower nilpotent series; nilradical and radical.

use serde::{Deserialize, Serialize};

use crate::algebra::{Enumerator, LeibnizAlgebra, Side, SubHandle};
use crate::error::{Error, Result};
use crate::field::{Field, Matrix, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    LowerNilpotent,
}

/// A strictly descending chain of subspaces, ending at its stable term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport<F: Field> {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace<F>>,
}

impl<F: Field> SeriesReport<F> {
    /// Number of strict descents.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn last(&self) -> &Subspace<F> {
        self.terms.last().expect("series has a first term")
    }

    pub fn reaches_zero(&self) -> bool {
        self.last().is_zero()
    }
}

/// Iterates `next` from `start` until the dimension stops dropping.
fn chain<F: Field>(start: Subspace<F>, mut next: impl FnMut(&Subspace<F>) -> Subspace<F>) -> Vec<Subspace<F>> {
    let mut terms = vec![start];
    loop {
        let last = terms.last().unwrap();
        let t = next(last);
        if t.dim() == last.dim() {
            return terms;
        }
        terms.push(t);
    }
}

/// Lower central series of the subalgebra `s`: `s, [s, s], [[s, s], s], ...`.
fn lower_central_of<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>) -> Vec<Subspace<F>> {
    chain(s.clone(), |t| l.product_space(t, s))
}

/// Derived series of the subalgebra `s`.
fn derived_of<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>) -> Vec<Subspace<F>> {
    chain(s.clone(), |t| l.product_space(t, t))
}

pub fn series<F: Field>(l: &LeibnizAlgebra<F>, kind: SeriesKind) -> SeriesReport<F> {
    let terms = match kind {
        SeriesKind::Derived => derived_of(l, &l.full()),
        SeriesKind::LowerCentral => lower_central_of(l, &l.full()),
        // N_{i+1} = nilpotent residual of N_i, each N_i taken as an algebra
        SeriesKind::LowerNilpotent => chain(l.full(), |t| lower_central_of(l, t).pop().unwrap()),
    };
    SeriesReport { kind, terms }
}

/// Upper central series `0 = Z_0 ⊆ Z_1 = Z(L) ⊆ ...` up to its stable term.
pub fn upper_central_series<F: Field>(l: &LeibnizAlgebra<F>) -> Vec<Subspace<F>> {
    let n = l.dim();
    let mut terms = vec![l.zero_space()];
    loop {
        let z = terms.last().unwrap();
        let q = z.quotient_map();
        let mut stacked = Matrix::zeros(l.field(), 0, n);
        for i in 0..n {
            let b = l.basis_vector(i);
            for side in [Side::Right, Side::Left] {
                stacked = stacked.vstack(&q.mul(&l.op(&b, side)).expect("shape")).expect("shape");
            }
        }
        let next = stacked.kernel();
        if next.dim() == z.dim() {
            return terms;
        }
        terms.push(next);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub is_nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub is_solvable: bool,
    pub derived_length: Option<usize>,
    /// `L^2` is nilpotent.
    pub is_completely_solvable: bool,
    pub is_metabelian: bool,
    pub is_abelian: bool,
}

pub fn predicates<F: Field>(l: &LeibnizAlgebra<F>) -> Predicates {
    let lc = series(l, SeriesKind::LowerCentral);
    let der = series(l, SeriesKind::Derived);
    let is_nilpotent = lc.reaches_zero();
    let is_solvable = der.reaches_zero();
    let derived_length = is_solvable.then(|| der.length());
    Predicates {
        is_nilpotent,
        nilpotency_class: is_nilpotent.then(|| lc.length()),
        is_solvable,
        derived_length,
        is_completely_solvable: l.is_nilpotent_sub(&l.derived()),
        is_metabelian: derived_length.is_some_and(|d| d <= 2),
        is_abelian: l.is_abelian(),
    }
}

pub fn is_solvable_sub<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>) -> bool {
    derived_of(l, s).last().unwrap().is_zero()
}

/// `γ∞(L)`, the stable term of the lower central series.
pub fn nilpotent_residual<F: Field>(l: &LeibnizAlgebra<F>) -> SubHandle<F> {
    let g = series(l, SeriesKind::LowerCentral).last().clone();
    l.handle(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadicalStatus {
    Exact,
    /// A nilpotent ideal known to lie inside the nilradical.
    LowerBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Radical<F: Field> {
    pub subspace: SubHandle<F>,
    pub status: RadicalStatus,
}

/// Largest nilpotent ideal. Exact over finite fields by enumeration and for
/// nilpotent algebras; otherwise a certified lower bound.
pub fn nilradical<F: Field>(l: &LeibnizAlgebra<F>, budget: u64) -> Result<Radical<F>> {
    if l.is_nilpotent_sub(&l.full()) {
        return Ok(Radical {
            subspace: l.handle(l.full()),
            status: RadicalStatus::Exact,
        });
    }
    if l.field().is_finite() {
        let en = Enumerator::new(l, budget)?;
        let mut sum = l.zero_space();
        for i in en.ideals() {
            if l.is_nilpotent_sub(&i) {
                sum = sum.sum(&i)?;
            }
        }
        assert!(l.is_nilpotent_sub(&sum), "a sum of nilpotent ideals is nilpotent");
        return Ok(Radical {
            subspace: l.handle(sum),
            status: RadicalStatus::Exact,
        });
    }
    let mut candidates = vec![l.leib_kernel().into_carrier()];
    candidates.extend(upper_central_series(l));
    candidates.extend(series(l, SeriesKind::Derived).terms);
    let mut sum = l.zero_space();
    for c in candidates {
        if l.is_ideal(&c) && l.is_nilpotent_sub(&c) {
            let grown = sum.sum(&c)?;
            if l.is_nilpotent_sub(&grown) {
                sum = grown;
            }
        }
    }
    Ok(Radical {
        subspace: l.handle(sum),
        status: RadicalStatus::LowerBound,
    })
}

/// Largest solvable ideal.
pub fn radical<F: Field>(l: &LeibnizAlgebra<F>, budget: u64) -> Result<Radical<F>> {
    if is_solvable_sub(l, &l.full()) {
        return Ok(Radical {
            subspace: l.handle(l.full()),
            status: RadicalStatus::Exact,
        });
    }
    if !l.field().is_finite() {
        return Err(Error::InfiniteFieldUnsupported);
    }
    let en = Enumerator::new(l, budget)?;
    let mut sum = l.zero_space();
    for i in en.ideals() {
        if is_solvable_sub(l, &i) {
            sum = sum.sum(&i)?;
        }
    }
    assert!(is_solvable_sub(l, &sum), "a sum of solvable ideals is solvable");
    Ok(Radical {
        subspace: l.handle(sum),
        status: RadicalStatus::Exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_BUDGET;
    use crate::field::{Gf, Rationals};
    use crate::io::fixtures;

    fn dims<F: Field>(r: &SeriesReport<F>) -> Vec<usize> {
        r.terms.iter().map(Subspace::dim).collect()
    }

    #[test]
    fn series_examples() {
        let q = Rationals;
        let c2 = fixtures::c2(&q);
        let d = series(&c2, SeriesKind::Derived);
        assert_eq!(dims(&d), vec![2, 1, 0]);
        assert_eq!(d.terms[1], c2.derived());
        let h3 = fixtures::h3(&q);
        let lc = series(&h3, SeriesKind::LowerCentral);
        assert_eq!(lc.terms[1], *h3.centre());
        assert_eq!(dims(&lc), vec![3, 1, 0]);
        assert_eq!(dims(&series(&c2, SeriesKind::LowerNilpotent)), vec![2, 1, 0]);
    }

    #[test]
    fn predicate_examples() {
        let q = Rationals;
        let p = predicates(&fixtures::h3(&q));
        assert_eq!(p.nilpotency_class, Some(2));
        assert_eq!(p.derived_length, Some(2));
        assert!(p.is_completely_solvable && p.is_metabelian && !p.is_abelian);
        let p = predicates(&fixtures::c2(&q));
        assert!(!p.is_nilpotent && p.derived_length == Some(2) && p.is_completely_solvable);
        assert!(!predicates(&fixtures::sl2(&q)).is_solvable);
        assert_eq!(predicates(&fixtures::a2(&q)).nilpotency_class, Some(1));
    }

    #[test]
    fn residuals() {
        let q = Rationals;
        let c2 = fixtures::c2(&q);
        assert_eq!(*nilpotent_residual(&c2), c2.derived());
        assert!(nilpotent_residual(&fixtures::h3(&q)).is_zero());
        let c3a = fixtures::c3a(&q);
        let g = nilpotent_residual(&c3a);
        assert_eq!(*g, Subspace::span(&q, 3, &[c3a.basis_vector(2)]).unwrap());
    }

    #[test]
    fn nilradicals() {
        let f3 = Gf::prime(3).unwrap();
        let c2 = fixtures::c2(&f3);
        let n = nilradical(&c2, DEFAULT_BUDGET).unwrap();
        assert_eq!((n.subspace.carrier().clone(), n.status), (c2.derived(), RadicalStatus::Exact));
        let h3 = fixtures::h3(&Rationals);
        assert!(nilradical(&h3, DEFAULT_BUDGET).unwrap().subspace.is_full());
        let f2 = Gf::prime(2).unwrap();
        let c3b = fixtures::c3b(&f2);
        assert_eq!(*nilradical(&c3b, DEFAULT_BUDGET).unwrap().subspace, c3b.derived());
        let c2q = fixtures::c2(&Rationals);
        let n = nilradical(&c2q, DEFAULT_BUDGET).unwrap();
        assert_eq!(n.status, RadicalStatus::LowerBound);
        assert_eq!(*n.subspace, c2q.derived());
    }

    #[test]
    fn radicals() {
        let q = Rationals;
        assert!(radical(&fixtures::c2(&q), DEFAULT_BUDGET).unwrap().subspace.is_full());
        assert_eq!(radical(&fixtures::sl2(&q), DEFAULT_BUDGET), Err(Error::InfiniteFieldUnsupported));
        let f5 = Gf::prime(5).unwrap();
        assert!(radical(&fixtures::sl2(&f5), DEFAULT_BUDGET).unwrap().subspace.is_zero());
        let s = fixtures::sl2(&f5).direct_sum(&fixtures::a2(&f5)).unwrap();
        let r = radical(&s, DEFAULT_BUDGET).unwrap();
        let a2_part = Subspace::span(&f5, 5, &[s.basis_vector(3), s.basis_vector(4)]).unwrap();
        assert_eq!(*r.subspace, a2_part);
    }

    #[test]
    fn derived_terms_are_ideals() {
        let f = Gf::prime(3).unwrap();
        for l in fixtures::all(&f) {
            let d = series(&l, SeriesKind::Derived);
            for w in d.terms.windows(2) {
                assert!(w[0].contains(&w[1]).unwrap());
                assert!(l.is_ideal(&w[1]));
            }
            for t in series(&l, SeriesKind::LowerCentral).terms {
                assert!(l.is_ideal(&t));
            }
        }
    }

    #[test]
    fn upper_central_of_heisenberg() {
        let h3 = fixtures::h3(&Rationals);
        let u = upper_central_series(&h3);
        assert_eq!(u.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![0, 1, 3]);
    }
}
