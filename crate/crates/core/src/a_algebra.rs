//! Deciding whether every nilpotent subalgebra is abelian, and the battery of
//! structure statements that hold for such algebras.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Enumerator, LeibnizAlgebra, Side, SubHandle};
use crate::decomp::{
    self, centre_of, max_nilpotent_analysis, split_cartan_report, structure_report, Analysis,
};
use crate::error::{Error, Result};
use crate::field::{vector, Field, Matrix, Subspace};
use crate::report::{Report, Status, SubspaceRecord};
use crate::series::{self, SeriesKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AMethod {
    Exhaustive,
    LemmaAa,
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AVerdict<F: Field> {
    True { method: AMethod },
    /// Carries a nilpotent non-abelian subalgebra.
    False { witness: SubHandle<F>, reason: String },
    Unknown { checks: Vec<String> },
}

impl<F: Field> AVerdict<F> {
    /// Builds a `False` verdict after re-verifying the witness.
    pub fn refuted(l: &LeibnizAlgebra<F>, witness: Subspace<F>, reason: impl Into<String>) -> Option<Self> {
        is_witness(l, &witness).then(|| AVerdict::False {
            witness: l.handle(witness),
            reason: reason.into(),
        })
    }

    pub fn value(&self) -> Option<bool> {
        match self {
            AVerdict::True { .. } => Some(true),
            AVerdict::False { .. } => Some(false),
            AVerdict::Unknown { .. } => None,
        }
    }

    pub fn is_true(&self) -> bool {
        self.value() == Some(true)
    }

    pub fn is_false(&self) -> bool {
        self.value() == Some(false)
    }

    pub fn witness(&self) -> Option<&Subspace<F>> {
        match self {
            AVerdict::False { witness, .. } => Some(witness.carrier()),
            _ => None,
        }
    }

    pub fn record(&self) -> VerdictRecord {
        match self {
            AVerdict::True { method } => VerdictRecord {
                value: "true".into(),
                method: Some(*method),
                witness: None,
                reasons: vec![],
            },
            AVerdict::False { witness, reason } => VerdictRecord {
                value: "false".into(),
                method: None,
                witness: Some(SubspaceRecord::new(witness)),
                reasons: vec![reason.clone()],
            },
            AVerdict::Unknown { checks } => VerdictRecord {
                value: "unknown".into(),
                method: None,
                witness: None,
                reasons: checks.clone(),
            },
        }
    }
}

/// Serializable form of a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<AMethod>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<SubspaceRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reasons: Vec<String>,
}

/// A subalgebra that is nilpotent and not abelian.
pub fn is_witness<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>) -> bool {
    l.is_subalgebra(s) && l.is_nilpotent_sub(s) && !l.is_abelian_sub(s)
}

/// Decides the property exhaustively over a finite field, otherwise runs the
/// battery of necessary and sufficient conditions.
pub fn is_a_algebra<F: Field>(l: &LeibnizAlgebra<F>, budget: u64, seed: u64) -> AVerdict<F> {
    if l.dim() <= 1 {
        return AVerdict::True { method: AMethod::Trivial };
    }
    let mut notes = Vec::new();
    if l.field().is_finite() {
        match exhaustive_verdict(l, budget) {
            Ok(v) => return v,
            Err(e) => notes.push(format!("exhaustive check unavailable: {e}")),
        }
    }
    match battery_verdict(l, budget, seed) {
        AVerdict::Unknown { checks } => {
            notes.extend(checks);
            AVerdict::Unknown { checks: notes }
        }
        v => v,
    }
}

/// Every nilpotent non-abelian subalgebra contains one generated by two
/// elements, so it suffices to look at closures of subspaces of dimension
/// at most two. The witness is the least such closure in canonical order,
/// which is also the least nilpotent non-abelian subalgebra.
pub fn exhaustive_verdict<F: Field>(l: &LeibnizAlgebra<F>, budget: u64) -> Result<AVerdict<F>> {
    if l.dim() <= 1 {
        return Ok(AVerdict::True { method: AMethod::Trivial });
    }
    let en = Enumerator::new(l, budget)?;
    let mut best: Option<Subspace<F>> = None;
    for d in 1..=2 {
        for s in en.subspaces_of_dim(d, |_| true) {
            let c = l.subalgebra_closure(s.basis())?;
            if l.is_abelian_sub(&c) || !l.is_nilpotent_sub(&c) {
                continue;
            }
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    Ok(match best {
        Some(w) => AVerdict::refuted(l, w, "nilpotent non-abelian subalgebra").expect("verified witness"),
        None => AVerdict::True { method: AMethod::Exhaustive },
    })
}

/// Verdict from necessary conditions, the witness search and the complement
/// certificate, without enumeration of subalgebras.
pub fn battery_verdict<F: Field>(l: &LeibnizAlgebra<F>, budget: u64, seed: u64) -> AVerdict<F> {
    if l.dim() <= 1 {
        return AVerdict::True { method: AMethod::Trivial };
    }
    let p = series::predicates(l);
    if p.is_nilpotent && !p.is_abelian {
        return AVerdict::refuted(l, l.full(), "nilpotent and non-abelian").expect("verified");
    }
    let mut failed = Vec::new();
    if !series_agree(l) {
        failed.push("derived series differs from lower nilpotent series".to_string());
    }
    if p.is_solvable {
        let z = l.centre();
        if !z.intersect(&l.derived()).expect("same ambient").is_zero() {
            failed.push("Z(L) ∩ L^2 != 0".to_string());
        }
    }
    if let Some(w) = witness_search(l, budget, seed) {
        let reason = if failed.is_empty() {
            "witness search".to_string()
        } else {
            failed.join("; ")
        };
        return AVerdict::refuted(l, w.into_carrier(), reason).expect("verified");
    }
    if !failed.is_empty() {
        failed.push("no witness found".into());
        return AVerdict::Unknown { checks: failed };
    }
    let cert = lemma_aa_certificate(l, budget, seed);
    if cert.certified {
        return AVerdict::True { method: AMethod::LemmaAa };
    }
    AVerdict::Unknown {
        checks: vec![
            "necessary conditions hold".into(),
            "no witness found".into(),
            format!("complement certificate: {}", cert.detail),
        ],
    }
}

/// Derived series equals the lower nilpotent series term by term.
pub fn series_agree<F: Field>(l: &LeibnizAlgebra<F>) -> bool {
    series::series(l, SeriesKind::Derived).terms == series::series(l, SeriesKind::LowerNilpotent).terms
}

const SAMPLES: usize = 32;

/// Looks for a nilpotent non-abelian subalgebra: Fitting null parts of
/// `R_x` and closures of `x` for sampled `x`, the terms of the standard
/// series, then closures of random generators. A hit is shrunk to a
/// subalgebra generated by at most two of its basis vectors.
pub fn witness_search<F: Field>(l: &LeibnizAlgebra<F>, budget: u64, seed: u64) -> Option<SubHandle<F>> {
    if l.is_abelian() {
        return None;
    }
    let f = l.field();
    let n = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = (SAMPLES as u64).min(budget) as usize;
    let mut xs: Vec<Vec<F::Elem>> = (0..n).map(|i| l.basis_vector(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            xs.push(vector::add(f, &xs[i], &xs[j]));
        }
    }
    xs.extend((0..samples).map(|_| random_element(f, n, &mut rng)));

    let found = xs
        .iter()
        .filter(|x| !vector::is_zero(f, x))
        .find_map(|x| {
            let null = decomp::fitting(l, &l.op(x, Side::Right)).ok()?.null_part;
            if is_witness(l, &null) {
                return Some(null);
            }
            let c = l.subalgebra_closure(std::slice::from_ref(x)).ok()?;
            is_witness(l, &c).then_some(c)
        })
        .or_else(|| {
            [SeriesKind::Derived, SeriesKind::LowerCentral, SeriesKind::LowerNilpotent]
                .into_iter()
                .flat_map(|k| series::series(l, k).terms)
                .chain(series::upper_central_series(l))
                .find(|s| is_witness(l, s))
        })
        .or_else(|| {
            (0..samples).find_map(|_| {
                let k = rng.gen_range(2..=3);
                let gens: Vec<_> = (0..k).map(|_| random_element(f, n, &mut rng)).collect();
                let c = l.subalgebra_closure(&gens).ok()?;
                is_witness(l, &c).then_some(c)
            })
        })?;
    let small = shrink(l, found);
    debug_assert!(is_witness(l, &small));
    Some(l.handle(small))
}

fn random_element<F: Field>(f: &F, n: usize, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    (0..n)
        .map(|_| match f.order() {
            Some(q) => f.element(rng.gen_range(0..q)).expect("in range"),
            None => f.from_i64(rng.gen_range(-3..=3)),
        })
        .collect()
}

/// Smallest non-abelian closure of one or two basis vectors of a witness.
fn shrink<F: Field>(l: &LeibnizAlgebra<F>, w: Subspace<F>) -> Subspace<F> {
    let b = w.basis();
    let mut best = w.clone();
    for i in 0..b.len() {
        for j in i..b.len() {
            let gens = if i == j { vec![b[i].clone()] } else { vec![b[i].clone(), b[j].clone()] };
            if let Ok(c) = l.subalgebra_closure(&gens) {
                if !l.is_abelian_sub(&c) && (c.dim(), &c) < (best.dim(), &best) {
                    best = c;
                }
            }
        }
    }
    best
}

/// Outcome of the complement criterion: `L = L^2 ∔ B` metabelian with `B` a
/// subalgebra and `R_b` invertible on `L^2` for every nonzero `b ∈ B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaAaCertificate<F: Field> {
    pub certified: bool,
    pub detail: String,
    pub complement: Option<Subspace<F>>,
}

impl<F: Field> LemmaAaCertificate<F> {
    fn no(detail: impl Into<String>, complement: Option<Subspace<F>>) -> Self {
        LemmaAaCertificate {
            certified: false,
            detail: detail.into(),
            complement,
        }
    }
}

/// Matrix of `R_b` restricted to the invariant subspace `s`, in the echelon
/// basis of `s`.
fn restricted_right<F: Field>(l: &LeibnizAlgebra<F>, s: &Subspace<F>, b: &[F::Elem]) -> Matrix<F> {
    let cols: Vec<Vec<F::Elem>> = s
        .basis()
        .iter()
        .map(|y| s.coordinates(&l.mul(y, b)).expect("invariant subspace"))
        .collect();
    Matrix::from_columns(l.field(), s.dim(), &cols).expect("shape")
}

pub fn lemma_aa_certificate<F: Field>(l: &LeibnizAlgebra<F>, budget: u64, seed: u64) -> LemmaAaCertificate<F> {
    let p = series::predicates(l);
    if !p.is_metabelian {
        return LemmaAaCertificate::no("not metabelian", None);
    }
    let l2 = l.derived();
    if l2.is_zero() {
        return LemmaAaCertificate {
            certified: true,
            detail: "abelian".into(),
            complement: Some(l.full()),
        };
    }
    let is_complement = |b: &Subspace<F>| {
        l.is_subalgebra(b) && b.dim() + l2.dim() == l.dim() && b.intersect(&l2).expect("same").is_zero()
    };
    let b = decomp::triangular_decomposition(l, seed, budget)
        .ok()
        .map(|d| d.a(0).clone())
        .filter(|b| is_complement(b))
        .or_else(|| {
            decomp::cartan_subalgebra(l, seed, budget)
                .ok()
                .map(SubHandle::into_carrier)
                .filter(|c| is_complement(c))
        });
    let Some(b) = b else {
        return LemmaAaCertificate::no("no subalgebra complement to L^2 found", None);
    };
    let f = l.field();
    let invertible = |coords: &[F::Elem]| restricted_right(l, &l2, &b.lift(coords)).rank() == l2.dim();
    let k = b.dim();
    let decided = if k == 1 {
        Some(invertible(&[f.one()]))
    } else if let Some(q) = f.order() {
        if (q as u128).saturating_pow(k as u32) <= budget as u128 {
            Some(vector::projective_points(f, k).iter().all(|c| invertible(c)))
        } else {
            None
        }
    } else {
        None
    };
    match decided {
        Some(true) => LemmaAaCertificate {
            certified: true,
            detail: format!("R_b invertible on L^2 for every nonzero b in a {k}-dimensional complement"),
            complement: Some(b),
        },
        Some(false) => LemmaAaCertificate::no("some nonzero b has R_b singular on L^2", Some(b)),
        None => LemmaAaCertificate::no("undecidable-at-budget", Some(b)),
    }
}

/// Verdict plus the clause report.
#[derive(Debug, Clone)]
pub struct Battery<F: Field> {
    pub verdict: AVerdict<F>,
    pub report: Report,
}

fn rec<F: Field>(s: &Subspace<F>) -> SubspaceRecord {
    SubspaceRecord::new(s)
}

fn unavailable(e: &Error) -> String {
    match e {
        Error::InfiniteFieldUnsupported => "requires a finite field".into(),
        other => other.to_string(),
    }
}

/// Runs every applicable structure statement for an algebra certified to
/// have only abelian nilpotent subalgebras.
pub fn theorem_battery<F: Field>(l: &LeibnizAlgebra<F>, budget: u64, seed: u64) -> Battery<F> {
    let verdict = is_a_algebra(l, budget, seed);
    let mut r = Report::new("battery");
    let anchor = "all nilpotent subalgebras are abelian";
    match &verdict {
        AVerdict::True { method } => r.push(
            "a-verdict",
            anchor,
            Status::Pass,
            format!("true ({})", serde_json::to_value(method).expect("enum").as_str().unwrap_or("")),
            vec![],
        ),
        AVerdict::False { witness, reason } => {
            r.push("a-verdict", anchor, Status::Pass, format!("false: {reason}"), vec![rec(witness)]);
            r.skip("battery", "clauses for A-algebras", "not an A-algebra");
            return Battery { verdict, report: r };
        }
        AVerdict::Unknown { checks } => {
            r.push("a-verdict", anchor, Status::NotApplicable, format!("unknown: {}", checks.join("; ")), vec![]);
            r.skip("battery", "clauses for A-algebras", "A-property not certified");
            return Battery { verdict, report: r };
        }
    }
    let a = Analysis::new(l, budget, seed);
    let p = *a.predicates();

    r.check(
        "series",
        "derived series = lower nilpotent series",
        series_agree(l),
        "",
        vec![],
    );
    let l2 = a.l2();
    let centre = l.centre().into_carrier();
    if p.is_solvable {
        let zl2 = centre.intersect(&l2).expect("same ambient");
        r.check("int", "Z(L) ∩ L^2 = 0", zl2.is_zero(), "", vec![rec(&zl2)]);
    } else {
        r.skip("int", "Z(L) ∩ L^2 = 0", "not solvable");
    }
    if p.is_solvable && l.field().characteristic() == 0 {
        r.check("char0-metabelian", "solvable over characteristic zero implies metabelian", p.is_metabelian, "", vec![]);
    }
    if p.is_solvable {
        let l3 = a.derived_term(3);
        let status = if l3.is_zero() { Status::Pass } else { Status::Finding };
        r.push(
            "dren",
            "derived length at most 3",
            status,
            format!("derived length {}", derived_length(&a)),
            if l3.is_zero() { vec![] } else { vec![rec(&l3)] },
        );
    }
    nilradical_clause(&a, &mut r);
    ideal_clauses(&a, &mut r);
    subalgebra_clause(&a, &mut r);
    r.extend(structure_report(&a));
    r.extend(split_cartan_report(&a));
    r.extend(max_nilpotent_analysis(&a));
    mona_clause(&a, &mut r);
    Battery { verdict, report: r }
}

/// Number of nonzero terms in the derived series.
pub fn derived_length<F: Field>(a: &Analysis<'_, F>) -> usize {
    a.derived().iter().take_while(|t| !t.is_zero()).count()
}

fn nilradical_clause<F: Field>(a: &Analysis<'_, F>, r: &mut Report) {
    let l = a.alg;
    let anchor = "N abelian and the unique maximal abelian ideal";
    let Some(n) = a.exact_nilradical() else {
        return r.skip("nilrad-abelian", anchor, "nilradical known only as a lower bound");
    };
    let mut ok = l.is_abelian_sub(n);
    let mut detail = String::new();
    match a.ideals() {
        Ok(ideals) => {
            let stray: Vec<_> = ideals
                .iter()
                .filter(|i| l.is_abelian_sub(i) && !n.contains(i).expect("same"))
                .collect();
            ok &= stray.is_empty();
            detail = format!("{} ideals", ideals.len());
        }
        Err(e) => detail.push_str(&unavailable(&e)),
    }
    r.check("nilrad-abelian", anchor, ok, detail, vec![rec(n)]);
}

fn ideal_clauses<F: Field>(a: &Analysis<'_, F>, r: &mut Report) {
    let l = a.alg;
    let ideals = match a.ideals() {
        Ok(i) => i,
        Err(e) => {
            for (id, anchor) in [
                ("fac", "L/B is an A-algebra for every ideal B"),
                ("lemm2", "L/B, L/C A-algebras imply L/(B ∩ C) is"),
                ("cent", "B ⊆ C_L(D) iff B ∩ D ⊆ Z(B) ∩ Z(D)"),
            ] {
                r.skip(id, anchor, unavailable(&e));
            }
            return;
        }
    };
    let mut verdicts: BTreeMap<&Subspace<F>, Option<bool>> = BTreeMap::new();
    let mut bad = Vec::new();
    let mut unknown = 0;
    for b in ideals {
        let v = l
            .quotient(b)
            .ok()
            .and_then(|(q, _)| exhaustive_verdict(&q, a.budget).ok())
            .and_then(|v| v.value());
        match v {
            Some(false) => bad.push(rec(b)),
            None => unknown += 1,
            Some(true) => {}
        }
        verdicts.insert(b, v);
    }
    r.check(
        "fac",
        "L/B is an A-algebra for every ideal B",
        bad.is_empty(),
        format!("{} ideals, {unknown} undecided", ideals.len()),
        bad,
    );
    let mut bad = Vec::new();
    for (i, b) in ideals.iter().enumerate() {
        for c in &ideals[i..] {
            if verdicts[b] == Some(true) && verdicts[c] == Some(true) {
                let bc = b.intersect(c).expect("same ambient");
                if verdicts.get(&bc).copied().flatten() != Some(true) {
                    bad.push(rec(&bc));
                }
            }
        }
    }
    r.check(
        "lemm2",
        "L/B, L/C A-algebras imply L/(B ∩ C) is",
        bad.is_empty(),
        "",
        bad,
    );
    let mut bad = Vec::new();
    for b in ideals {
        for d in ideals {
            let lhs = l.centralizer(d).contains(b).expect("same");
            let zb_zd = centre_of(l, b).intersect(&centre_of(l, d)).expect("same");
            let rhs = zb_zd.contains(&b.intersect(d).expect("same")).expect("same");
            if lhs != rhs {
                bad.push(rec(b));
                bad.push(rec(d));
            }
        }
    }
    r.check("cent", "B ⊆ C_L(D) iff B ∩ D ⊆ Z(B) ∩ Z(D)", bad.is_empty(), "", bad);
}

fn subalgebra_clause<F: Field>(a: &Analysis<'_, F>, r: &mut Report) {
    let anchor = "subalgebras of dimension at most 3 are A-algebras";
    let subs = match a.subalgebras() {
        Ok(s) => s,
        Err(e) => return r.skip("subalgebras", anchor, unavailable(&e)),
    };
    let bad: Vec<_> = subs
        .iter()
        .filter(|s| s.dim() <= 3)
        .filter(|s| {
            let sub = a.alg.restrict(s).expect("subalgebra");
            exhaustive_verdict(&sub, a.budget).map(|v| v.is_false()).unwrap_or(false)
        })
        .map(rec)
        .collect();
    r.check("subalgebras", anchor, bad.is_empty(), "", bad);
}

fn mona_clause<F: Field>(a: &Analysis<'_, F>, r: &mut Report) {
    let anchor = "monolithic completely solvable: L = L^2 ∔ B metabelian with R_b invertible on L^2";
    if !a.predicates().is_completely_solvable {
        return r.skip("mona", anchor, "not completely solvable");
    }
    match a.monolith() {
        Ok(Some(_)) => {
            let cert = lemma_aa_certificate(a.alg, a.budget, a.seed);
            r.check("mona", anchor, cert.certified, cert.detail, vec![]);
        }
        Ok(None) => r.skip("mona", anchor, "not monolithic"),
        Err(e) => r.skip("mona", anchor, unavailable(&e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_BUDGET;
    use crate::field::{Gf, Rationals};
    use crate::io::fixtures;

    fn gf(q: u64) -> Gf {
        Gf::with_order(q).unwrap()
    }

    #[test]
    fn h3_is_refuted_by_itself() {
        let f = gf(2);
        let h3 = fixtures::h3(&f);
        let v = is_a_algebra(&h3, DEFAULT_BUDGET, 0);
        assert!(v.witness().unwrap().is_full());
        let v = is_a_algebra(&fixtures::h3(&Rationals), DEFAULT_BUDGET, 0);
        assert!(v.witness().unwrap().is_full());
    }

    #[test]
    fn exhaustive_verdicts() {
        let f = gf(3);
        assert_eq!(
            is_a_algebra(&fixtures::c2(&f), DEFAULT_BUDGET, 0),
            AVerdict::True { method: AMethod::Exhaustive }
        );
        let f = gf(2);
        let c3a = fixtures::c3a(&f);
        let w = is_a_algebra(&c3a, DEFAULT_BUDGET, 0).witness().unwrap().clone();
        let expected = Subspace::span(&f, 3, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(w, expected);
        assert!(is_a_algebra(&fixtures::sl2(&gf(5)), DEFAULT_BUDGET, 0).is_true());
    }

    #[test]
    fn rational_verdicts() {
        let q = Rationals;
        let c3a = fixtures::c3a(&q);
        let w = witness_search(&c3a, DEFAULT_BUDGET, 0).unwrap();
        let expected = Subspace::span(&q, 3, &[vec![1, -1, 0], vec![0, 1, -1]].iter().map(|v| v.iter().map(|&x| q.from_i64(x)).collect()).collect::<Vec<_>>()).unwrap();
        assert_eq!(*w, expected);
        assert!(witness_search(&fixtures::c2(&q), DEFAULT_BUDGET, 0).is_none());
        assert!(witness_search(&fixtures::a2(&q), DEFAULT_BUDGET, 0).is_none());
        assert_eq!(
            is_a_algebra(&fixtures::c2(&q), DEFAULT_BUDGET, 0),
            AVerdict::True { method: AMethod::LemmaAa }
        );
        assert!(is_a_algebra(&fixtures::c3b(&q), DEFAULT_BUDGET, 0).is_true());
        assert!(is_a_algebra(&fixtures::r2(&q), DEFAULT_BUDGET, 0).is_true());
        // not solvable: no complement certificate applies
        assert!(is_a_algebra(&fixtures::sl2(&q), DEFAULT_BUDGET, 0).value().is_none());
    }

    #[test]
    fn complement_certificates() {
        let q = Rationals;
        let c3b = fixtures::c3b(&q);
        let cert = lemma_aa_certificate(&c3b, DEFAULT_BUDGET, 0);
        assert!(cert.certified, "{}", cert.detail);
        let b = cert.complement.unwrap();
        let minus_one = q.from_i64(-1);
        let expected = Subspace::span(&q, 3, &[vec![minus_one, q.zero(), q.one()]]).unwrap();
        assert_eq!(b, expected);
        let m = restricted_right(&c3b, &c3b.derived(), &b.basis()[0]);
        // [a^2, b] = -a^3 and [a^3, b] = -a^2, up to the sign of the basis vector
        assert!(Rationals.is_zero(m.get(0, 0)) && Rationals.is_zero(m.get(1, 1)));
        assert!(lemma_aa_certificate(&fixtures::c2(&q), DEFAULT_BUDGET, 0).certified);
        assert!(lemma_aa_certificate(&fixtures::a2(&q), DEFAULT_BUDGET, 0).certified);
        let h3 = fixtures::h3(&q);
        assert!(!lemma_aa_certificate(&h3, DEFAULT_BUDGET, 0).certified);
        assert_eq!(lemma_aa_certificate(&fixtures::c3a(&q), DEFAULT_BUDGET, 0).detail, "no subalgebra complement to L^2 found");
        assert_eq!(lemma_aa_certificate(&fixtures::sl2(&q), DEFAULT_BUDGET, 0).detail, "not metabelian");
    }

    #[test]
    fn battery_on_c2_over_gf3() {
        let f = gf(3);
        let b = theorem_battery(&fixtures::c2(&f), DEFAULT_BUDGET, 0);
        assert!(b.verdict.is_true());
        assert!(b.report.all_passed(), "{:#?}", b.report);
        for id in ["int", "ss", "mon", "maxn", "fac", "lemm2", "cent", "mona"] {
            assert_eq!(b.report.clause(id).unwrap().status, Status::Pass, "{id}");
        }
    }

    #[test]
    fn battery_on_direct_sum_over_gf3() {
        let f = gf(3);
        let l = fixtures::r2(&f).direct_sum(&fixtures::c2(&f)).unwrap();
        let b = theorem_battery(&l, DEFAULT_BUDGET, 0);
        assert!(b.verdict.is_true());
        assert!(b.report.all_passed(), "{:#?}", b.report);
        assert_eq!(b.report.clause("lemm2").unwrap().status, Status::Pass);
        assert_eq!(b.report.clause("nz-ideals").unwrap().status, Status::Pass);
    }

    #[test]
    fn battery_skips_non_a_algebras() {
        let b = theorem_battery(&fixtures::h3(&gf(2)), DEFAULT_BUDGET, 0);
        assert!(b.verdict.is_false());
        assert_eq!(b.report.clause("battery").unwrap().status, Status::NotApplicable);
        assert_eq!(b.report.clauses.len(), 2);
    }

    #[test]
    fn battery_over_rationals() {
        let q = Rationals;
        for name in ["a2", "r2", "c2", "c3b"] {
            let l = fixtures::by_name(&q, name).unwrap();
            let b = theorem_battery(&l, DEFAULT_BUDGET, 0);
            assert!(b.verdict.is_true(), "{name}");
            assert!(b.report.all_passed(), "{name}: {:#?}", b.report);
            assert_eq!(b.report.clause("ss").unwrap().status, Status::Pass, "{name}");
        }
    }

    #[test]
    fn verdict_records_serialize() {
        let f = gf(2);
        let v = is_a_algebra(&fixtures::h3(&f), DEFAULT_BUDGET, 0);
        let json = serde_json::to_string(&v.record()).unwrap();
        assert!(json.contains("\"false\""));
        let v: AVerdict<Gf> = AVerdict::True { method: AMethod::LemmaAa };
        assert!(serde_json::to_string(&v.record()).unwrap().contains("lemma-aa"));
    }
}
