//! Fitting decompositions, Cartan subalgebras, the triangular decomposition
//! of solvable algebras along the derived series, and the structure checks
//! built on them.

use std::cell::OnceCell;
use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Enumerator, LeibnizAlgebra, Side, SubHandle};
use crate::error::{Error, Result};
use crate::field::{vector, Field, Matrix, Subspace};
use crate::report::{Report, Status, SubspaceRecord};
use crate::series::{self, nilradical, Predicates, Radical, RadicalStatus, SeriesKind};

/// `L = null_part ∔ one_part` relative to an operator or a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingPair<F: Field> {
    pub null_part: Subspace<F>,
    pub one_part: Subspace<F>,
}

/// Fitting decomposition of a single operator: `ker T^n` and `im T^n`.
pub fn fitting<F: Field>(l: &LeibnizAlgebra<F>, op: &Matrix<F>) -> Result<FittingPair<F>> {
    let n = l.dim();
    if op.rows() != n || op.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "operator is {}x{} on an algebra of dimension {n}",
            op.rows(),
            op.cols()
        )));
    }
    let p = op.pow(n)?;
    Ok(FittingPair {
        null_part: p.kernel(),
        one_part: p.image(),
    })
}

/// Whether `pair` is a valid Fitting decomposition for `op`: both parts
/// invariant, complementary, `op` nilpotent on the first and invertible on
/// the second.
pub fn is_fitting_pair<F: Field>(op: &Matrix<F>, pair: &FittingPair<F>) -> bool {
    let (z, o) = (&pair.null_part, &pair.one_part);
    let n = op.rows();
    if z.dim() + o.dim() != n || !z.intersect(o).expect("same ambient").is_zero() {
        return false;
    }
    let tz = z.map(op).expect("shape");
    let to = o.map(op).expect("shape");
    if !z.contains(&tz).expect("same ambient") || !o.contains(&to).expect("same ambient") {
        return false;
    }
    let pn = op.pow(n.max(1)).expect("square");
    z.map(&pn).expect("shape").is_zero() && to.dim() == o.dim()
}

/// Fitting decomposition of `L` relative to the right multiplications by a
/// subalgebra `C`. The one part is the stable term of `W_{k+1} = [W_k, C]`;
/// the null part is the set of vectors sent to zero by every long enough
/// word in the `R_c`.
pub fn fitting_family<F: Field>(l: &LeibnizAlgebra<F>, c: &Subspace<F>) -> Result<FittingPair<F>> {
    if !l.is_subalgebra(c) {
        return Err(Error::NotASubalgebra);
    }
    let mut one = l.full();
    loop {
        let next = l.product_space(&one, c);
        if next.dim() == one.dim() {
            break;
        }
        one = next;
    }
    let mut null = l.zero_space();
    loop {
        let next = preimage_under_family(l, &null, c);
        if next.dim() == null.dim() {
            break;
        }
        null = next;
    }
    if null.dim() + one.dim() != l.dim() || !null.intersect(&one)?.is_zero() {
        return Err(Error::NotDecomposing);
    }
    Ok(FittingPair {
        null_part: null,
        one_part: one,
    })
}

/// `{x : [x, c] ∈ target for all c ∈ C}`.
fn preimage_under_family<F: Field>(l: &LeibnizAlgebra<F>, target: &Subspace<F>, c: &Subspace<F>) -> Subspace<F> {
    let q = target.quotient_map();
    let mut stacked = Matrix::zeros(l.field(), 0, l.dim());
    for v in c.basis() {
        let m = q.mul(&l.op(v, Side::Right)).expect("shape");
        stacked = stacked.vstack(&m).expect("shape");
    }
    stacked.kernel()
}

/// Subspace of `L` spanned by the images of `s` under the embedding whose
/// columns are the basis of `within`.
fn lift<F: Field>(within: &Subspace<F>, s: &Subspace<F>) -> Subspace<F> {
    let vectors: Vec<_> = s.basis().iter().map(|c| within.lift(c)).collect();
    Subspace::span(within.field(), within.ambient(), &vectors).expect("ambient length")
}

/// Coordinates of `s ⊆ within` in the echelon basis of `within`.
fn coords_in<F: Field>(within: &Subspace<F>, s: &Subspace<F>) -> Subspace<F> {
    let vectors: Vec<_> = s
        .basis()
        .iter()
        .map(|v| within.coordinates(v).expect("contained"))
        .collect();
    Subspace::span(within.field(), within.dim(), &vectors).expect("length")
}

/// Random vector with small entries (integers in `-3..=3` over infinite fields).
fn random_vector<F: Field>(f: &F, n: usize, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    (0..n)
        .map(|_| match f.order() {
            Some(q) => f.element(rng.gen_range(0..q)).expect("in range"),
            None => f.from_i64(rng.gen_range(-3..=3)),
        })
        .collect()
}

const RANDOM_CANDIDATES: usize = 64;

/// Picks `x` with `R_x` not nilpotent, minimizing the dimension of its
/// Fitting null part. Candidates are tried in phases (basis vectors, sums of
/// two basis vectors, seeded random vectors, and on finite fields every
/// vector); the first phase yielding any candidate decides.
fn best_element<F: Field>(
    k: &LeibnizAlgebra<F>,
    rng: &mut ChaCha8Rng,
    budget: u64,
) -> Option<Vec<F::Elem>> {
    let f = k.field();
    let n = k.dim();
    let score = |x: &Vec<F::Elem>| -> Option<usize> {
        if vector::is_zero(f, x) {
            return None;
        }
        let r = k.op(x, Side::Right);
        let p = r.pow(n).expect("square");
        (!p.is_zero()).then(|| p.kernel().dim())
    };
    let pick = |cands: Vec<Vec<F::Elem>>| -> Option<Vec<F::Elem>> {
        let mut best: Option<(usize, Vec<F::Elem>)> = None;
        for c in cands {
            if let Some(s) = score(&c) {
                if best.as_ref().is_none_or(|(b, _)| s < *b) {
                    best = Some((s, c));
                }
            }
        }
        best.map(|(_, c)| c)
    };
    let basis: Vec<_> = (0..n).map(|i| k.basis_vector(i)).collect();
    if let Some(x) = pick(basis.clone()) {
        return Some(x);
    }
    let pairs: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| vector::add(f, &basis[i], &basis[j]))
        .collect();
    if let Some(x) = pick(pairs) {
        return Some(x);
    }
    let random: Vec<_> = (0..RANDOM_CANDIDATES).map(|_| random_vector(f, n, rng)).collect();
    if let Some(x) = pick(random) {
        return Some(x);
    }
    let q = f.order()?;
    if (q as u128).saturating_pow(n as u32) > budget as u128 {
        return None;
    }
    pick(vector::all_vectors(f, n).collect())
}

/// A nilpotent self-normalizing subalgebra of a solvable algebra.
pub fn cartan_subalgebra<F: Field>(l: &LeibnizAlgebra<F>, seed: u64, budget: u64) -> Result<SubHandle<F>> {
    if !series::predicates(l).is_solvable {
        return Err(Error::NotSolvable);
    }
    Ok(l.handle(cartan_search(l, seed, budget)?))
}

fn is_cartan<F: Field>(l: &LeibnizAlgebra<F>, k: &Subspace<F>) -> bool {
    l.is_subalgebra(k) && l.is_nilpotent_sub(k) && *l.normalizer(k) == *k
}

fn cartan_search<F: Field>(l: &LeibnizAlgebra<F>, seed: u64, budget: u64) -> Result<Subspace<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut k = l.full();
    while !l.is_nilpotent_sub(&k) {
        let sub = l.restrict(&k)?;
        let Some(x) = best_element(&sub, &mut rng, budget) else {
            return Err(Error::CartanSearchFailed(
                "no element with non-nilpotent right multiplication found".into(),
            ));
        };
        let null = fitting(&sub, &sub.op(&x, Side::Right))?.null_part;
        k = lift(&k, &null);
    }
    if is_cartan(l, &k) {
        return Ok(k);
    }
    if !l.field().is_finite() {
        return Err(Error::CartanSearchFailed(
            "Fitting null part is not self-normalizing".into(),
        ));
    }
    let en = Enumerator::new(l, budget)?;
    (0..=l.dim())
        .flat_map(|d| en.subspaces_of_dim(d, |s| is_cartan(l, s)))
        .next()
        .ok_or_else(|| Error::CartanSearchFailed("no nilpotent self-normalizing subalgebra".into()))
}

/// `L = A_n ∔ ... ∔ A_0` with abelian subalgebras `A_i` and
/// `L^(i) = A_n ∔ ... ∔ A_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularDecomposition<F: Field> {
    /// `[A_n, ..., A_0]`
    pub components: Vec<Subspace<F>>,
    /// `[L^(0), ..., L^(n)]`
    pub derived_markers: Vec<Subspace<F>>,
}

impl<F: Field> TriangularDecomposition<F> {
    pub fn n(&self) -> usize {
        self.components.len() - 1
    }

    /// `A_i`
    pub fn a(&self, i: usize) -> &Subspace<F> {
        &self.components[self.n() - i]
    }

    /// Checks every claimed invariant, describing the first failure.
    pub fn verify(&self, l: &LeibnizAlgebra<F>) -> std::result::Result<(), String> {
        let total: usize = self.components.iter().map(Subspace::dim).sum();
        if total != l.dim() {
            return Err(format!("component dimensions sum to {total}, not {}", l.dim()));
        }
        for i in 0..=self.n() {
            let a = self.a(i);
            if !l.is_subalgebra(a) {
                return Err(format!("A_{i} is not a subalgebra"));
            }
            if !l.is_abelian_sub(a) {
                return Err(format!("A_{i} is not abelian"));
            }
        }
        for i in 0..=self.n() {
            let mut sum = l.zero_space();
            let mut dims = 0;
            for j in i..=self.n() {
                sum = sum.sum(self.a(j)).expect("same ambient");
                dims += self.a(j).dim();
            }
            if dims != sum.dim() {
                return Err(format!("A_n + ... + A_{i} is not direct"));
            }
            if sum != self.derived_markers[i] {
                return Err(format!("L^({i}) differs from A_n + ... + A_{i}"));
            }
        }
        Ok(())
    }
}

/// Splits a solvable algebra along its derived series: `A_n = L^(n)`, a
/// complement `B` is the Fitting null part relative to a Cartan subalgebra
/// of `L^(n-1)`, and the construction recurses into `B`. The result is
/// verified before it is returned.
pub fn triangular_decomposition<F: Field>(
    l: &LeibnizAlgebra<F>,
    seed: u64,
    budget: u64,
) -> Result<TriangularDecomposition<F>> {
    let der = series::series(l, SeriesKind::Derived);
    if !der.reaches_zero() {
        return Err(Error::NotSolvable);
    }
    // derived length n + 1 (for the zero algebra, a single zero component)
    let n = der.length().saturating_sub(1);
    let components = split(l, n, seed, budget)?;
    let mut derived_markers = der.terms.clone();
    derived_markers.truncate(n + 1);
    while derived_markers.len() < n + 1 {
        derived_markers.push(l.zero_space());
    }
    let d = TriangularDecomposition {
        components,
        derived_markers,
    };
    d.verify(l).map_err(Error::DecompositionFailed)?;
    Ok(d)
}

/// Components `[S^(k), ..., ]` for an algebra with `S^(k+1) = 0`, in its own
/// coordinates.
fn split<F: Field>(s: &LeibnizAlgebra<F>, k: usize, seed: u64, budget: u64) -> Result<Vec<Subspace<F>>> {
    if k == 0 {
        return Ok(vec![s.full()]);
    }
    let der = series::series(s, SeriesKind::Derived);
    let term = |i: usize| der.terms.get(i).cloned().unwrap_or_else(|| s.zero_space());
    let top = term(k);
    let b = if top.is_zero() {
        s.full()
    } else {
        let below = term(k - 1);
        let inner = s.restrict(&below)?;
        let c = lift(&below, &cartan_search(&inner, seed, budget)?);
        let pair = fitting_family(s, &c).map_err(|e| Error::DecompositionFailed(e.to_string()))?;
        let b = pair.null_part;
        if b.dim() + top.dim() != s.dim() || !b.intersect(&top)?.is_zero() {
            return Err(Error::DecompositionFailed(format!(
                "Fitting null part does not complement the derived term {k}"
            )));
        }
        b
    };
    let sub = s
        .restrict(&b)
        .map_err(|_| Error::DecompositionFailed("complement is not a subalgebra".into()))?;
    let mut out = vec![top];
    for comp in split(&sub, k - 1, seed, budget)? {
        out.push(lift(&b, &comp));
    }
    Ok(out)
}

/// `[K ∩ A_n, ..., K ∩ A_0]` for an ideal `K`, checked to be a direct
/// decomposition of `K`.
pub fn ideal_decomposition<F: Field>(
    l: &LeibnizAlgebra<F>,
    k: &Subspace<F>,
    d: &TriangularDecomposition<F>,
) -> Result<Vec<Subspace<F>>> {
    if !l.is_ideal(k) {
        return Err(Error::NotAnIdeal);
    }
    let parts = d
        .components
        .iter()
        .map(|a| k.intersect(a))
        .collect::<Result<Vec<_>>>()?;
    let dims: usize = parts.iter().map(Subspace::dim).sum();
    if dims != k.dim() {
        return Err(Error::DecompositionFailed(format!(
            "intersections have total dimension {dims}, ideal has dimension {}",
            k.dim()
        )));
    }
    Ok(parts)
}

/// `Z(S) = C_L(S) ∩ S` for a subalgebra `S`.
pub fn centre_of<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>) -> Subspace<F> {
    l.centralizer(s).intersect(s).expect("same ambient")
}

/// Largest ideal of `L` inside the subspace `s`.
pub fn ideal_core<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>) -> Subspace<F> {
    let n = l.dim();
    let mut cur = s.clone();
    loop {
        let q = cur.quotient_map();
        let mut stacked = q.clone();
        for i in 0..n {
            let b = l.basis_vector(i);
            for side in [Side::Right, Side::Left] {
                stacked = stacked.vstack(&q.mul(&l.op(&b, side)).expect("shape")).expect("shape");
            }
        }
        let next = stacked.kernel();
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

/// Exact nilradical of a solvable algebra over a field of characteristic
/// zero. The right multiplications form a solvable linear Lie algebra, so
/// they are simultaneously triangularizable over the algebraic closure; `R_x`
/// is then nilpotent exactly when `tr(R_x W) = 0` for every `W` in the
/// associative algebra they generate. The largest ideal inside that subspace
/// consists of elements acting nilpotently, hence is nilpotent by Engel's
/// theorem, and it contains every nilpotent ideal.
pub fn nilradical_char0<F: Field>(l: &LeibnizAlgebra<F>) -> Option<Subspace<F>> {
    let f = l.field();
    if f.characteristic() != 0 || !series::predicates(l).is_solvable {
        return None;
    }
    let n = l.dim();
    let ops: Vec<Matrix<F>> = (0..n).map(|i| l.op(&l.basis_vector(i), Side::Right)).collect();
    // basis of the associative algebra generated by the R_{b_i} and 1
    let flatten = |m: &Matrix<F>| -> Vec<F::Elem> { m.row_vectors().concat() };
    let mut words = vec![Matrix::identity(f, n)];
    let mut span = Subspace::span(f, n * n, &[flatten(&words[0])]).expect("length");
    let mut frontier = words.clone();
    while let Some(w) = frontier.pop() {
        for r in &ops {
            let next = w.mul(r).expect("square");
            if span.insert(&flatten(&next)) {
                words.push(next.clone());
                frontier.push(next);
            }
        }
    }
    // linear forms x -> tr(R_x W)
    let rows: Vec<Vec<F::Elem>> = words
        .iter()
        .map(|w| {
            ops.iter()
                .map(|r| {
                    let p = r.mul(w).expect("square");
                    (0..n).fold(f.zero(), |acc, i| f.add(&acc, p.get(i, i)))
                })
                .collect()
        })
        .collect();
    let t = Matrix::from_rows(f, n, &rows).expect("shape").kernel();
    let core = ideal_core(l, &t);
    l.is_nilpotent_sub(&core).then_some(core)
}

/// Nilradical with the characteristic-zero refinement for solvable algebras.
pub fn best_nilradical<F: Field>(l: &LeibnizAlgebra<F>, budget: u64) -> Result<Radical<F>> {
    let r = nilradical(l, budget)?;
    if r.status == RadicalStatus::Exact {
        return Ok(r);
    }
    match nilradical_char0(l) {
        Some(n) => {
            assert!(n.contains(&r.subspace)?, "exact nilradical contains the lower bound");
            Ok(Radical {
                subspace: l.handle(n),
                status: RadicalStatus::Exact,
            })
        }
        None => Ok(r),
    }
}

/// For an abelian ideal `A` and `x` with `x^2 ∈ A`,
/// `L_x^m(A) ⊆ R_x^{m-1}(A)` for `1 <= m <= max_m`.
pub fn left_ideal_property<F: Field>(
    l: &LeibnizAlgebra<F>,
    a: &Subspace<F>,
    x: &[F::Elem],
    max_m: usize,
) -> bool {
    let lx = l.op(x, Side::Left);
    let rx = l.op(x, Side::Right);
    let mut left = a.clone();
    let mut right_prev = a.clone();
    for m in 1..=max_m {
        left = left.map(&lx).expect("shape");
        if m > 1 {
            right_prev = right_prev.map(&rx).expect("shape");
        }
        if !right_prev.contains(&left).expect("same ambient") {
            return false;
        }
    }
    true
}

/// Cached facts about one algebra, shared by the structure checks.
pub struct Analysis<'a, F: Field> {
    pub alg: &'a LeibnizAlgebra<F>,
    pub budget: u64,
    pub seed: u64,
    preds: OnceCell<Predicates>,
    derived: OnceCell<Vec<Subspace<F>>>,
    decomposition: OnceCell<Result<TriangularDecomposition<F>>>,
    nilradical: OnceCell<Result<Radical<F>>>,
    ideals: OnceCell<Result<Vec<Subspace<F>>>>,
    minimal: OnceCell<Result<Vec<Subspace<F>>>>,
    frattini: OnceCell<Result<Subspace<F>>>,
    subalgebras: OnceCell<Result<Vec<Subspace<F>>>>,
    max_nilpotent: OnceCell<Result<Vec<Subspace<F>>>>,
    cartans: OnceCell<Result<Vec<Subspace<F>>>>,
}

fn cached<T: Clone>(cell: &OnceCell<Result<T>>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

impl<'a, F: Field> Analysis<'a, F> {
    pub fn new(alg: &'a LeibnizAlgebra<F>, budget: u64, seed: u64) -> Self {
        Analysis {
            alg,
            budget,
            seed,
            preds: OnceCell::new(),
            derived: OnceCell::new(),
            decomposition: OnceCell::new(),
            nilradical: OnceCell::new(),
            ideals: OnceCell::new(),
            minimal: OnceCell::new(),
            frattini: OnceCell::new(),
            subalgebras: OnceCell::new(),
            max_nilpotent: OnceCell::new(),
            cartans: OnceCell::new(),
        }
    }

    pub fn predicates(&self) -> &Predicates {
        self.preds.get_or_init(|| series::predicates(self.alg))
    }

    /// `[L^(0), L^(1), ...]` down to the stable term.
    pub fn derived(&self) -> &[Subspace<F>] {
        self.derived
            .get_or_init(|| series::series(self.alg, SeriesKind::Derived).terms)
    }

    /// `L^(i)`, zero past the end of the series.
    pub fn derived_term(&self, i: usize) -> Subspace<F> {
        self.derived()
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.alg.zero_space())
    }

    pub fn l2(&self) -> Subspace<F> {
        self.derived_term(1)
    }

    pub fn decomposition(&self) -> Result<&TriangularDecomposition<F>> {
        cached(&self.decomposition, || {
            triangular_decomposition(self.alg, self.seed, self.budget)
        })
    }

    pub fn nilradical(&self) -> Result<&Radical<F>> {
        cached(&self.nilradical, || best_nilradical(self.alg, self.budget))
    }

    /// The nilradical when it is known exactly.
    pub fn exact_nilradical(&self) -> Option<&Subspace<F>> {
        match self.nilradical() {
            Ok(r) if r.status == RadicalStatus::Exact => Some(r.subspace.carrier()),
            _ => None,
        }
    }

    fn enumerator(&self) -> Result<Enumerator<'a, F>> {
        Enumerator::new(self.alg, self.budget)
    }

    pub fn ideals(&self) -> Result<&Vec<Subspace<F>>> {
        cached(&self.ideals, || Ok(self.enumerator()?.ideals()))
    }

    pub fn minimal_ideals(&self) -> Result<&Vec<Subspace<F>>> {
        cached(&self.minimal, || Ok(self.enumerator()?.minimal_ideals()))
    }

    pub fn subalgebras(&self) -> Result<&Vec<Subspace<F>>> {
        cached(&self.subalgebras, || Ok(self.enumerator()?.subalgebras()))
    }

    pub fn frattini(&self) -> Result<&Subspace<F>> {
        cached(&self.frattini, || {
            Ok(crate::algebra::frattini_ideal(self.alg, self.budget)?.into_carrier())
        })
    }

    pub fn max_nilpotent(&self) -> Result<&Vec<Subspace<F>>> {
        cached(&self.max_nilpotent, || {
            let subs = self.subalgebras()?;
            let nil: Vec<_> = subs
                .iter()
                .filter(|s| self.alg.is_nilpotent_sub(s))
                .cloned()
                .collect();
            Ok(maximal_elements(nil))
        })
    }

    /// All nilpotent self-normalizing subalgebras.
    pub fn cartans(&self) -> Result<&Vec<Subspace<F>>> {
        cached(&self.cartans, || {
            let subs = self.subalgebras()?;
            Ok(subs.iter().filter(|s| is_cartan(self.alg, s)).cloned().collect())
        })
    }

    pub fn monolith(&self) -> Result<Option<Subspace<F>>> {
        let m = self.minimal_ideals()?;
        Ok((m.len() == 1).then(|| m[0].clone()))
    }

    pub fn asoc(&self) -> Result<Subspace<F>> {
        let mut s = self.alg.zero_space();
        for m in self.minimal_ideals()? {
            if self.alg.is_abelian_sub(m) {
                s = s.sum(m)?;
            }
        }
        Ok(s)
    }
}

fn maximal_elements<F: Field>(list: Vec<Subspace<F>>) -> Vec<Subspace<F>> {
    let mut out: Vec<Subspace<F>> = Vec::new();
    let mut sorted = list;
    sorted.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.cmp(b)));
    for s in sorted {
        if !out.iter().any(|m| m.dim() > s.dim() && m.contains(&s).expect("same ambient")) {
            out.push(s);
        }
    }
    out.sort();
    out
}

fn rec<F: Field>(s: &Subspace<F>) -> SubspaceRecord {
    SubspaceRecord::new(s)
}

fn sum_of<F: Field>(l: &LeibnizAlgebra<F>, parts: &[Subspace<F>]) -> Subspace<F> {
    parts
        .iter()
        .fold(l.zero_space(), |acc, p| acc.sum(p).expect("same ambient"))
}

fn is_direct<F: Field>(parts: &[Subspace<F>], total: &Subspace<F>) -> bool {
    parts.iter().map(Subspace::dim).sum::<usize>() == total.dim()
}

fn sub<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> bool {
    b.contains(a).expect("same ambient")
}

/// Reason an enumeration-backed clause cannot run.
fn unavailable(e: &Error) -> String {
    match e {
        Error::InfiniteFieldUnsupported => "requires a finite field".into(),
        other => other.to_string(),
    }
}

/// Structure statements for a solvable algebra: ideals against the
/// triangular decomposition, the nilradical, minimal ideals, the Frattini
/// ideal and monoliths. Clauses whose hypotheses fail are marked
/// not applicable. The caller is responsible for the A-algebra hypothesis.
pub fn structure_report<F: Field>(a: &Analysis<'_, F>) -> Report {
    let mut r = Report::new("structure");
    let l = a.alg;
    let p = *a.predicates();
    if !p.is_solvable {
        r.skip("structure", "L solvable", "algebra is not solvable");
        return r;
    }
    let d = match a.decomposition() {
        Ok(d) => {
            r.check("decomp", "L^(i) = A_n ∔ ... ∔ A_i, A_i abelian", true, "", vec![]);
            Some(d)
        }
        Err(e) => {
            r.check("decomp", "L^(i) = A_n ∔ ... ∔ A_i, A_i abelian", false, e.to_string(), vec![]);
            None
        }
    };
    let nil = a.exact_nilradical().cloned();
    let centre = l.centre().into_carrier();
    let l2 = a.l2();

    // ideals split along the decomposition
    match (d, a.ideals()) {
        (Some(d), Ok(ideals)) => {
            let bad: Vec<_> = ideals
                .iter()
                .filter(|k| ideal_decomposition(l, k, d).is_err())
                .collect();
            r.check(
                "nz-ideals",
                "K = (K ∩ A_n) ∔ ... ∔ (K ∩ A_0) for every ideal K",
                bad.is_empty(),
                format!("{} ideals checked", ideals.len()),
                bad.into_iter().map(rec).collect(),
            );
        }
        (None, _) => r.skip("nz-ideals", "K = ∔ (K ∩ A_i)", "no decomposition"),
        (_, Err(e)) => r.skip("nz-ideals", "K = ∔ (K ∩ A_i)", unavailable(&e)),
    }

    match (d, &nil) {
        (Some(d), Some(n)) => {
            let parts: Vec<_> = (0..=d.n())
                .map(|i| n.intersect(d.a(i)).expect("same ambient"))
                .collect();
            let ok = *d.a(d.n()) == parts[d.n()]
                && sum_of(l, &parts) == *n
                && is_direct(&parts, n);
            r.check(
                "nz-nilradical",
                "N = A_n ⊕ (N ∩ A_{n-1}) ⊕ ... ⊕ (N ∩ A_0)",
                ok,
                "",
                vec![rec(n)],
            );
            let mut bad = Vec::new();
            for i in 0..=d.n() {
                let z = centre_of(l, &d.derived_markers[i]);
                if z != parts[i] {
                    bad.push(rec(&z));
                    bad.push(rec(&parts[i]));
                }
            }
            r.check("nz-centres", "Z(L^(i)) = N ∩ A_i", bad.is_empty(), "", bad);
            match a.minimal_ideals() {
                Ok(mins) => {
                    let bad: Vec<_> = mins
                        .iter()
                        .filter(|m| !parts.iter().any(|part| sub(m, part)))
                        .map(rec)
                        .collect();
                    r.check(
                        "nz-minimal",
                        "every minimal ideal lies in some N ∩ A_i",
                        bad.is_empty(),
                        format!("{} minimal ideals", mins.len()),
                        bad,
                    );
                }
                Err(e) => r.skip("nz-minimal", "A ⊆ N ∩ A_i", unavailable(&e)),
            }
            r.check(
                "nilrad",
                "C_L(N) ⊆ N",
                sub(l.centralizer(n).carrier(), n),
                "",
                vec![rec(l.centralizer(n).carrier())],
            );
        }
        (None, _) => r.skip("nz-nilradical", "N = A_n ⊕ ...", "no decomposition"),
        (_, None) => r.skip("nz-nilradical", "N = A_n ⊕ ...", "nilradical known only as a lower bound"),
    }

    if p.is_completely_solvable {
        completely_solvable_clauses(a, &mut r, d, nil.as_ref(), &centre, &l2);
    } else {
        r.skip("ss", "N = L^2 ⊕ Z(L)", "L^2 is not nilpotent");
    }

    monolithic_clauses(a, &mut r, d, nil.as_ref(), &centre);
    r
}

fn completely_solvable_clauses<F: Field>(
    a: &Analysis<'_, F>,
    r: &mut Report,
    d: Option<&TriangularDecomposition<F>>,
    nil: Option<&Subspace<F>>,
    centre: &Subspace<F>,
    l2: &Subspace<F>,
) {
    let l = a.alg;
    match nil {
        Some(n) => {
            let sum = l2.sum(centre).expect("same ambient");
            let ok = l2.intersect(centre).expect("same ambient").is_zero() && sum == *n;
            r.check("ss", "N = L^2 ⊕ Z(L)", ok, "", vec![rec(n), rec(&sum)]);
        }
        None => r.skip("ss", "N = L^2 ⊕ Z(L)", "nilradical known only as a lower bound"),
    }
    let Some(d) = d else {
        r.skip("min", "minimal ideals lie in L^2 or B", "no decomposition");
        return;
    };
    // metabelian, so L = A_1 ∔ A_0 with A_1 = L^2 (or L = A_0 when abelian)
    let b = d.a(0).clone();
    r.check(
        "ss-split",
        "L = L^2 ∔ B with L^2 and B abelian",
        d.n() <= 1 && l.is_abelian_sub(l2) && l.is_abelian_sub(&b),
        "",
        vec![],
    );
    match a.minimal_ideals() {
        Ok(mins) => {
            let mut bad = Vec::new();
            for m in mins {
                let in_l2 = sub(m, l2);
                let in_b = sub(m, &b);
                let in_z = sub(m, centre);
                let left_full = l.product_space(m, &l.full()) == *m;
                let ok = (in_l2 || in_b) && (in_b == in_z) && (!in_b || m.dim() == 1) && (in_l2 == left_full);
                if !ok {
                    bad.push(rec(m));
                }
            }
            r.check(
                "min",
                "A ⊆ L^2 or A ⊆ B; A ⊆ B iff A ⊆ Z(L); A ⊆ L^2 iff [A,L] = A",
                bad.is_empty(),
                format!("{} minimal ideals", mins.len()),
                bad,
            );
            match (a.frattini(), a.asoc()) {
                (Ok(phi), Ok(asoc)) => {
                    let ok = phi.is_zero() == sub(l2, &asoc);
                    r.check(
                        "phi",
                        "φ(L) = 0 iff L^2 ⊆ Asoc L",
                        ok,
                        format!("dim φ = {}, dim Asoc = {}", phi.dim(), asoc.dim()),
                        vec![rec(phi), rec(&asoc)],
                    );
                }
                (Err(e), _) | (_, Err(e)) => r.skip("phi", "φ(L) = 0 iff L^2 ⊆ Asoc L", unavailable(&e)),
            }
        }
        Err(e) => {
            r.skip("min", "minimal ideals lie in L^2 or B", unavailable(&e));
            r.skip("phi", "φ(L) = 0 iff L^2 ⊆ Asoc L", unavailable(&e));
        }
    }
}

fn monolithic_clauses<F: Field>(
    a: &Analysis<'_, F>,
    r: &mut Report,
    d: Option<&TriangularDecomposition<F>>,
    nil: Option<&Subspace<F>>,
    centre: &Subspace<F>,
) {
    let l = a.alg;
    let anchor = "monolith W: abelian; Z(L) = 0; N = A_n = L^(n) = C_L(W); φ(L) = 0 iff W = N";
    let w = match a.monolith() {
        Ok(Some(w)) => w,
        Ok(None) => return r.skip("mon", anchor, "not monolithic"),
        Err(e) => return r.skip("mon", anchor, unavailable(&e)),
    };
    let (Some(d), Some(n)) = (d, nil) else {
        return r.skip("mon", anchor, "decomposition or nilradical unavailable");
    };
    let full = l.full();
    let mut failed = Vec::new();
    if !l.is_abelian_sub(&w) {
        failed.push("W not abelian");
    }
    if !centre.is_zero() {
        failed.push("Z(L) != 0");
    }
    if l.product_space(&full, &w) != w && l.product_space(&w, &full) != w {
        failed.push("neither [L,W] = W nor [W,L] = W");
    }
    let top = d.a(d.n());
    if n != top || *top != d.derived_markers[d.n()] {
        failed.push("N != A_n = L^(n)");
    }
    if *l.centralizer(&w) != *n {
        failed.push("N != C_L(W)");
    }
    match a.frattini() {
        Ok(phi) => {
            if phi.is_zero() != (w == *n) {
                failed.push("φ(L) = 0 does not match W = N");
            }
        }
        Err(e) => {
            r.skip("mon-phi", "φ(L) = 0 iff W = N", unavailable(&e));
        }
    }
    let ok = failed.is_empty();
    r.check("mon", anchor, ok, failed.join("; "), vec![rec(&w), rec(n)]);
}

/// Maximal nilpotent subalgebras against `L^2` and the Cartan subalgebras.
pub fn max_nilpotent_analysis<F: Field>(a: &Analysis<'_, F>) -> Report {
    let mut r = Report::new("maximal nilpotent subalgebras");
    let l = a.alg;
    let p = *a.predicates();
    let maxn = match a.max_nilpotent() {
        Ok(m) => m,
        Err(e) => {
            r.skip("maxn", "maximal nilpotent subalgebras", unavailable(&e));
            return r;
        }
    };
    if p.is_nilpotent {
        r.check(
            "maxn-nilpotent",
            "a nilpotent L is its own unique maximal nilpotent subalgebra",
            maxn.len() == 1 && maxn[0].is_full(),
            "",
            maxn.iter().map(rec).collect(),
        );
    }
    let l2 = a.l2();
    if p.is_metabelian {
        let mut bad = Vec::new();
        for u in maxn {
            let ul2 = u.intersect(&l2).expect("same ambient");
            let ok = match fitting_family(l, u) {
                Ok(pair) => {
                    let k = pair.one_part;
                    l.is_abelian_sub(&ul2)
                        && l.is_ideal(&ul2)
                        && l.is_ideal(&k)
                        && ul2.intersect(&k).expect("same ambient").is_zero()
                        && ul2.sum(&k).expect("same ambient") == l2
                        && l.product_space(&k, u) == k
                }
                Err(_) => false,
            };
            if !ok {
                bad.push(rec(u));
            }
        }
        r.check(
            "maxn-lemma",
            "L^2 = (U ∩ L^2) ⊕ K, K ideal, [K,U] = K",
            bad.is_empty(),
            format!("{} maximal nilpotent subalgebras", maxn.len()),
            bad,
        );
    } else {
        r.skip("maxn-lemma", "L^2 = (U ∩ L^2) ⊕ K", "not metabelian");
    }
    if !(p.is_solvable && p.is_completely_solvable) {
        r.skip("maxn", "U = (U ∩ L^2) ⊕ (U ∩ C)", "not completely solvable");
        return r;
    }
    let cartans = match a.cartans() {
        Ok(c) => c,
        Err(e) => {
            r.skip("maxn", "U = (U ∩ L^2) ⊕ (U ∩ C)", unavailable(&e));
            return r;
        }
    };
    let mut bad = Vec::new();
    for u in maxn {
        let ul2 = u.intersect(&l2).expect("same ambient");
        let found = cartans.iter().any(|c| {
            let uc = u.intersect(c).expect("same ambient");
            ul2.intersect(&uc).expect("same ambient").is_zero()
                && ul2.sum(&uc).expect("same ambient") == *u
        });
        if !found {
            bad.push(rec(u));
        }
    }
    r.check(
        "maxn",
        "U = (U ∩ L^2) ⊕ (U ∩ C) for some Cartan subalgebra C",
        bad.is_empty(),
        format!("{} Cartan subalgebras", cartans.len()),
        bad,
    );
    match a.monolith() {
        Ok(Some(_)) => {
            let mut expected: BTreeSet<Subspace<F>> = cartans.iter().cloned().collect();
            expected.insert(l2.clone());
            let got: BTreeSet<Subspace<F>> = maxn.iter().cloned().collect();
            let complements: BTreeSet<Subspace<F>> = a
                .subalgebras()
                .map(|s| {
                    s.iter()
                        .filter(|s| s.dim() + l2.dim() == l.dim() && s.intersect(&l2).expect("same").is_zero())
                        .cloned()
                        .collect()
                })
                .unwrap_or_default();
            let cartan_set: BTreeSet<Subspace<F>> = cartans.iter().cloned().collect();
            if l2.is_zero() {
                // one-dimensional: L^2 = 0 lies inside the only Cartan subalgebra L
                let ok = got == cartan_set && cartan_set == complements;
                let status = if ok { Status::Finding } else { Status::Fail };
                r.push(
                    "ssmon",
                    "maximal nilpotent subalgebras = {L^2} ∪ {Cartan subalgebras}",
                    status,
                    "L^2 = 0 is not maximal; the only maximal nilpotent subalgebra is L",
                    got.iter().map(rec).collect(),
                );
                return r;
            }
            r.check(
                "ssmon",
                "maximal nilpotent subalgebras = {L^2} ∪ {Cartan subalgebras} = {L^2} ∪ {complements of L^2}",
                got == expected && cartan_set == complements,
                format!("{} maximal nilpotent, {} Cartan", got.len(), cartan_set.len()),
                got.symmetric_difference(&expected).map(rec).collect(),
            );
        }
        Ok(None) => r.skip("ssmon", "maximal nilpotent = {L^2} ∪ Cartans", "not monolithic"),
        Err(e) => r.skip("ssmon", "maximal nilpotent = {L^2} ∪ Cartans", unavailable(&e)),
    }
    r
}

/// In each `L^(i)/L^(i+2)`, the Cartan subalgebras are exactly the
/// subalgebra complements of `L^(i+1)/L^(i+2)`.
pub fn split_cartan_report<F: Field>(a: &Analysis<'_, F>) -> Report {
    let mut r = Report::new("Cartan subalgebras of derived quotients");
    let anchor = "Cartan subalgebras of L^(i)/L^(i+2) = complements of L^(i+1)/L^(i+2)";
    let l = a.alg;
    if !a.predicates().is_solvable {
        r.skip("split-cartan", anchor, "not solvable");
        return r;
    }
    if !l.field().is_finite() {
        r.skip("split-cartan", anchor, "requires a finite field");
        return r;
    }
    let mut bad = Vec::new();
    let mut detail = Vec::new();
    for i in 0..a.derived().len() {
        let top = a.derived_term(i);
        if top.is_zero() {
            break;
        }
        let mid = a.derived_term(i + 1);
        let low = a.derived_term(i + 2);
        let inner = l.restrict(&top).expect("derived terms are subalgebras");
        let (q, proj) = inner.quotient(&coords_in(&top, &low)).expect("ideal");
        let image = coords_in(&top, &mid).map(&proj).expect("shape");
        let en = match Enumerator::new(&q, a.budget) {
            Ok(en) => en,
            Err(e) => {
                r.skip("split-cartan", anchor, unavailable(&e));
                return r;
            }
        };
        let subs = en.subalgebras();
        let cartans: Vec<_> = subs.iter().filter(|s| is_cartan(&q, s)).collect();
        let complements: Vec<_> = subs
            .iter()
            .filter(|s| s.dim() + image.dim() == q.dim() && s.intersect(&image).expect("same").is_zero())
            .collect();
        detail.push(format!("i={i}: {} Cartan, {} complements", cartans.len(), complements.len()));
        if cartans != complements {
            bad.push(rec(&top));
        }
    }
    r.check("split-cartan", anchor, bad.is_empty(), detail.join("; "), bad);
    r
}

/// Clause statuses for quick assertions.
pub fn statuses(r: &Report) -> Vec<(String, Status)> {
    r.clauses.iter().map(|c| (c.id.clone(), c.status)).collect()
}
