//! Exhaustive enumeration of subspaces, subalgebras and ideals over finite
//! fields, in canonical order: by dimension, then lexicographically on the
//! reduced echelon rows.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{LeibnizAlgebra, SubHandle};
use crate::error::{Error, Result};
use crate::field::{vector, Field, Subspace};

/// Default cap on the number of subspaces of `F^n` an enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnumKind {
    Subspaces,
    Subalgebras,
    Ideals,
}

/// Number of `k`-dimensional subspaces of `F_q^n`, saturating.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        let a = q.saturating_pow((n - i) as u32).saturating_sub(1);
        let b = q.saturating_pow((i + 1) as u32).saturating_sub(1);
        num = num.saturating_mul(a);
        den = den.saturating_mul(b);
        if num == u128::MAX {
            return u128::MAX;
        }
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Total number of subspaces of `F_q^n`.
pub fn subspace_count(n: usize, q: u64) -> u128 {
    (0..=n).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(n, k, q)))
}

/// Budgeted enumeration over one algebra.
pub struct Enumerator<'a, F: Field> {
    alg: &'a LeibnizAlgebra<F>,
    q: u64,
}

impl<'a, F: Field> Enumerator<'a, F> {
    /// Fails unless the field is finite and the subspace count of `F^n`
    /// is within `budget`.
    pub fn new(alg: &'a LeibnizAlgebra<F>, budget: u64) -> Result<Self> {
        let q = alg.field().order().ok_or(Error::InfiniteFieldUnsupported)?;
        let needed = subspace_count(alg.dim(), q);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        Ok(Enumerator { alg, q })
    }

    pub fn algebra(&self) -> &'a LeibnizAlgebra<F> {
        self.alg
    }

    /// All `d`-dimensional subspaces passing `keep`, in canonical order.
    pub fn subspaces_of_dim(&self, d: usize, keep: impl Fn(&Subspace<F>) -> bool) -> Vec<Subspace<F>> {
        let f = self.alg.field();
        let n = self.alg.dim();
        let mut out = Vec::new();
        for pivots in combinations(n, d) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &p)| (p + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let count = self.q.pow(free.len() as u32);
            for idx in 0..count {
                let mut rows: Vec<Vec<F::Elem>> =
                    pivots.iter().map(|&p| vector::unit(f, n, p)).collect();
                let mut x = idx;
                for &(r, c) in free.iter().rev() {
                    rows[r][c] = f.element(x % self.q).expect("in range");
                    x /= self.q;
                }
                let s = Subspace::from_rref_unchecked(f, n, rows, pivots.clone());
                if keep(&s) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }

    pub fn subspaces(&self) -> Vec<Subspace<F>> {
        (0..=self.alg.dim())
            .flat_map(|d| self.subspaces_of_dim(d, |_| true))
            .collect()
    }

    pub fn subalgebras(&self) -> Vec<Subspace<F>> {
        (0..=self.alg.dim())
            .flat_map(|d| self.subspaces_of_dim(d, |s| self.alg.is_subalgebra(s)))
            .collect()
    }

    /// Distinct principal ideals `<v>` for nonzero `v`, canonical order.
    pub fn principal_ideals(&self) -> Vec<Subspace<F>> {
        let f = self.alg.field();
        let set: BTreeSet<Subspace<F>> = vector::projective_points(f, self.alg.dim())
            .into_iter()
            .map(|v| self.alg.ideal_closure(&[v]).expect("length"))
            .collect();
        set.into_iter().collect()
    }

    /// Every ideal is a sum of principal ideals, so the ideals are the
    /// join-closure of the principal ones together with zero.
    pub fn ideals(&self) -> Vec<Subspace<F>> {
        let principal = self.principal_ideals();
        let mut seen: BTreeSet<Subspace<F>> = BTreeSet::new();
        let zero = self.alg.zero_space();
        seen.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(i) = frontier.pop() {
            for p in &principal {
                if i.contains(p).expect("same ambient") {
                    continue;
                }
                let j = i.sum(p).expect("same ambient");
                if seen.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn enumerate(&self, kind: EnumKind) -> Vec<SubHandle<F>> {
        let list = match kind {
            EnumKind::Subspaces => self.subspaces(),
            EnumKind::Subalgebras => self.subalgebras(),
            EnumKind::Ideals => self.ideals(),
        };
        list.into_iter().map(|s| self.alg.handle(s)).collect()
    }

    /// Nonzero ideals containing no smaller nonzero ideal. Each is generated
    /// by any of its nonzero elements, so only principal ideals qualify.
    pub fn minimal_ideals(&self) -> Vec<Subspace<F>> {
        let principal = self.principal_ideals();
        principal
            .iter()
            .filter(|p| {
                !principal
                    .iter()
                    .any(|o| o.dim() < p.dim() && p.contains(o).expect("same ambient"))
            })
            .cloned()
            .collect()
    }

    /// Proper subalgebras maximal under inclusion, canonical order.
    pub fn maximal_subalgebras(&self) -> Vec<Subspace<F>> {
        let n = self.alg.dim();
        let candidates: Vec<Subspace<F>> =
            self.subalgebras().into_iter().filter(|s| s.dim() < n).collect();
        maximal_elements(candidates)
    }

    /// Subalgebras that are nilpotent, canonical order.
    pub fn nilpotent_subalgebras(&self) -> Vec<Subspace<F>> {
        (0..=self.alg.dim())
            .flat_map(|d| {
                self.subspaces_of_dim(d, |s| self.alg.is_subalgebra(s) && self.alg.is_nilpotent_sub(s))
            })
            .collect()
    }

    /// Nilpotent subalgebras not contained in a larger nilpotent subalgebra.
    pub fn maximal_nilpotent_subalgebras(&self) -> Vec<Subspace<F>> {
        maximal_elements(self.nilpotent_subalgebras())
    }
}

/// Members of `list` not strictly contained in another member. Anything
/// properly contained in some member is contained in a maximal one, so it
/// suffices to test against the maximal members found so far.
fn maximal_elements<F: Field>(mut list: Vec<Subspace<F>>) -> Vec<Subspace<F>> {
    list.sort_by(|a, b| b.dim().cmp(&a.dim()));
    let mut maximal: Vec<Subspace<F>> = Vec::new();
    for s in list {
        if !maximal
            .iter()
            .any(|m| m.dim() > s.dim() && m.contains(&s).expect("same ambient"))
        {
            maximal.push(s);
        }
    }
    maximal.sort();
    maximal
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Minimal ideals, the abelian socle and the monolith if there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleAnalysis<F: Field> {
    pub minimal_ideals: Vec<Subspace<F>>,
    /// Sum of the abelian minimal ideals.
    pub asoc: Subspace<F>,
    pub monolithic: bool,
    pub monolith: Option<Subspace<F>>,
}

pub fn socle_analysis<F: Field>(alg: &LeibnizAlgebra<F>, budget: u64) -> Result<SocleAnalysis<F>> {
    let en = Enumerator::new(alg, budget)?;
    let minimal_ideals = en.minimal_ideals();
    let mut asoc = alg.zero_space();
    for m in &minimal_ideals {
        if alg.is_abelian_sub(m) {
            asoc = asoc.sum(m)?;
        }
    }
    let monolithic = minimal_ideals.len() == 1;
    let monolith = monolithic.then(|| minimal_ideals[0].clone());
    Ok(SocleAnalysis {
        minimal_ideals,
        asoc,
        monolithic,
        monolith,
    })
}

/// Largest ideal contained in every maximal subalgebra.
pub fn frattini_ideal<F: Field>(alg: &LeibnizAlgebra<F>, budget: u64) -> Result<SubHandle<F>> {
    let en = Enumerator::new(alg, budget)?;
    let mut meet = alg.full();
    for m in en.maximal_subalgebras() {
        meet = meet.intersect(&m)?;
    }
    if alg.is_ideal(&meet) {
        return Ok(alg.handle(meet));
    }
    // the sum of the ideals inside the meet is the largest such ideal
    let mut largest = alg.zero_space();
    for i in en.ideals() {
        if meet.contains(&i)? {
            largest = largest.sum(&i)?;
        }
    }
    Ok(alg.handle(largest))
}
