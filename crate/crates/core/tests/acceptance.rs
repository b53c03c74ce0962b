//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use leibniz::a_algebra::{battery_verdict, derived_length, exhaustive_verdict, is_a_algebra, series_agree};
use leibniz::algebra::{frattini_ideal, socle_analysis, Enumerator, DEFAULT_BUDGET};
use leibniz::cyclic::{sweep, CyclicSpec};
use leibniz::decomp::{
    fitting, is_fitting_pair, left_ideal_property, max_nilpotent_analysis, structure_report, Analysis,
};
use leibniz::field::{poly_factor, vector};
use leibniz::io::corpus::{generate, CorpusEntry, CorpusLimits};
use leibniz::report::Status;
use leibniz::{with_algebra, Field, Gf, LeibnizAlgebra, Side};

const SEED: u64 = 0;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Per-algebra results for the corpus-wide criteria.
#[derive(Default)]
struct Tally {
    certified: usize,
    series_bad: Vec<String>,
    int_checked: usize,
    int_bad: Vec<String>,
    split_checked: usize,
    split_bad: Vec<String>,
    ss_checked: usize,
    ss_bad: Vec<String>,
    maxn_checked: usize,
    maxn_bad: Vec<String>,
    maxn_findings: Vec<String>,
    oracle_checked: usize,
    contradictions: Vec<String>,
    dren_checked: usize,
    dren_findings: Vec<String>,
    dren_char0_bad: Vec<String>,
    left_triples: usize,
    left_bad: Vec<String>,
}

const STRUCTURE_IDS: [&str; 5] = ["decomp", "nz-ideals", "nz-nilradical", "nz-centres", "nz-minimal"];
const DREN_TAGS: [&str; 5] = ["gf2", "gf3", "gf4", "gf9", "q"];
const LEFT_LIMIT: usize = 500;

fn field_tag(name: &str) -> &str {
    name.split('.')
        .find(|p| *p == "q" || p.starts_with("gf"))
        .unwrap_or("")
}

fn passes(r: &leibniz::report::Report, id: &str) -> bool {
    r.clause(id).map(|c| c.status == Status::Pass).unwrap_or(false)
}

fn analyse<F: Field>(l: &LeibnizAlgebra<F>, name: &str, t: &mut Tally) {
    let finite = l.field().is_finite();
    if finite {
        if let Ok(ex) = exhaustive_verdict(l, DEFAULT_BUDGET) {
            let shortcut = battery_verdict(l, DEFAULT_BUDGET, SEED);
            t.oracle_checked += 1;
            if let (Some(a), Some(b)) = (ex.value(), shortcut.value()) {
                if a != b {
                    t.contradictions.push(name.to_string());
                }
            }
        }
        left_ideal_triples(l, name, t);
    }
    let verdict = is_a_algebra(l, DEFAULT_BUDGET, SEED);
    if !verdict.is_true() {
        return;
    }
    t.certified += 1;
    let a = Analysis::new(l, DEFAULT_BUDGET, SEED);
    let p = *a.predicates();
    if !series_agree(l) {
        t.series_bad.push(name.into());
    }
    if !p.is_solvable {
        return;
    }
    t.int_checked += 1;
    let centre = l.centre();
    if !centre.intersect(&a.l2()).unwrap().is_zero() {
        t.int_bad.push(name.into());
    }
    if DREN_TAGS.contains(&field_tag(name)) {
        t.dren_checked += 1;
        let len = derived_length(&a);
        if len > 3 {
            t.dren_findings.push(format!("{name} (derived length {len})"));
        }
        if l.field().characteristic() == 0 && !p.is_metabelian {
            t.dren_char0_bad.push(name.into());
        }
    }
    let structure = structure_report(&a);
    if finite {
        t.split_checked += 1;
        if !STRUCTURE_IDS.iter().all(|id| passes(&structure, id)) {
            t.split_bad.push(name.into());
        }
    }
    if !p.is_completely_solvable {
        return;
    }
    t.ss_checked += 1;
    if !passes(&structure, "ss") {
        t.ss_bad.push(name.into());
    }
    if finite {
        t.maxn_checked += 1;
        let m = max_nilpotent_analysis(&a);
        let monolithic = matches!(a.monolith(), Ok(Some(_)));
        let ssmon = m.clause("ssmon").map(|c| c.status);
        if ssmon == Some(Status::Finding) {
            t.maxn_findings.push(name.into());
        }
        if !passes(&m, "maxn") || (monolithic && !matches!(ssmon, Some(Status::Pass | Status::Finding))) {
            t.maxn_bad.push(name.into());
        }
    }
}

/// Abelian ideals `A`, elements `x` that are basis vectors or sums of two,
/// with `x^2 ∈ A`.
fn left_ideal_triples<F: Field>(l: &LeibnizAlgebra<F>, name: &str, t: &mut Tally) {
    if t.left_triples >= LEFT_LIMIT {
        return;
    }
    let Ok(en) = Enumerator::new(l, DEFAULT_BUDGET) else { return };
    let f = l.field();
    let n = l.dim();
    let mut xs: Vec<_> = (0..n).map(|i| l.basis_vector(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            xs.push(vector::add(f, &xs[i], &xs[j]));
        }
    }
    for a in en.ideals().iter().filter(|a| l.is_abelian_sub(a)) {
        for x in &xs {
            if t.left_triples >= LEFT_LIMIT {
                return;
            }
            if !a.contains_vector(&l.multiply(x, x).unwrap()) {
                continue;
            }
            t.left_triples += 1;
            if !left_ideal_property(l, a, x, n) {
                t.left_bad.push(name.into());
            }
        }
    }
}

fn list(v: &[String]) -> String {
    let head: Vec<_> = v.iter().take(5).cloned().collect();
    head.join(", ")
}

fn zero_tolerance(checked: usize, bad: &[String], what: &str) -> Outcome {
    outcome(
        bad.is_empty() && checked > 0,
        if bad.is_empty() {
            format!("{checked} {what}, 0 failures")
        } else {
            format!("{checked} {what}, {} failures: {}", bad.len(), list(bad))
        },
    )
}

fn cyclic_specs(max_n: usize) -> Vec<CyclicSpec<Gf>> {
    let mut out = Vec::new();
    for q in [2, 3] {
        let f = Gf::with_order(q).unwrap();
        for n in 2..=max_n {
            out.extend(sweep(&f, n));
        }
    }
    out
}

fn criterion_1(corpus: &[CorpusEntry], took: Duration) -> Outcome {
    let start = Instant::now();
    let bad: Vec<String> = corpus
        .iter()
        .filter(|e| with_algebra!(&e.algebra, l => l.verify_leibniz().is_err()))
        .map(|e| e.name.clone())
        .collect();
    let total = took + start.elapsed();
    outcome(
        bad.is_empty() && total < Duration::from_secs(10),
        format!("{} algebras, {} violations, {:.2}s", corpus.len(), bad.len(), total.as_secs_f64()),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let specs = cyclic_specs(4);
    let bad: Vec<String> = specs
        .iter()
        .filter(|s| {
            let v = exhaustive_verdict(&s.build(), DEFAULT_BUDGET).unwrap();
            v.value() != Some(!s.field().is_zero(s.alpha2()))
        })
        .map(|s| format!("{:?}", s.alphas()))
        .collect();
    let took = start.elapsed();
    outcome(
        bad.is_empty() && took < Duration::from_secs(60),
        format!("{} specs, {} mismatches, {:.2}s", specs.len(), bad.len(), took.as_secs_f64()),
    )
}

fn criteria_3_4() -> (Outcome, Outcome) {
    let specs: Vec<_> = cyclic_specs(4)
        .into_iter()
        .filter(|s| !s.field().is_zero(s.alpha2()))
        .collect();
    let (mut mono_bad, mut phi_bad) = (Vec::new(), Vec::new());
    for s in &specs {
        let l = s.build();
        let fac = poly_factor(&s.polynomial()).unwrap();
        let soc = socle_analysis(&l, DEFAULT_BUDGET).unwrap();
        let phi = frattini_ideal(&l, DEFAULT_BUDGET).unwrap();
        let tag = format!("{}:{:?}", s.field().descriptor().tag(), s.alphas());
        if soc.monolithic != (fac.distinct_count() == 2) {
            mono_bad.push(tag.clone());
        }
        let claim = fac.factors.len() == 2 && fac.factors.iter().all(|(_, m)| *m == 1);
        if (soc.monolithic && phi.is_zero()) != claim {
            phi_bad.push(tag);
        }
    }
    (
        zero_tolerance(specs.len(), &mono_bad, "specs"),
        zero_tolerance(specs.len(), &phi_bad, "specs"),
    )
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let fields: Vec<Gf> = [2, 3, 4, 5, 9].iter().map(|&q| Gf::with_order(q).unwrap()).collect();
    let mut bad = 0;
    let mut rational_bad = 0;
    for k in 0..200 {
        let n = rng.gen_range(2..=5);
        let alphas_len = n - 1;
        if k % 4 == 0 {
            let q = leibniz::Rationals;
            let alphas = (0..alphas_len).map(|_| q.from_i64(rng.gen_range(-3..=3))).collect();
            let l = CyclicSpec::new(&q, alphas).unwrap().build();
            let x: Vec<_> = (0..n).map(|_| q.from_i64(rng.gen_range(-3..=3))).collect();
            let op = l.mult_operator(&x, Side::Right).unwrap();
            if !is_fitting_pair(&op, &fitting(&l, &op).unwrap()) {
                rational_bad += 1;
            }
            continue;
        }
        let f = &fields[rng.gen_range(0..fields.len())];
        let q = f.order().unwrap();
        let alphas = (0..alphas_len).map(|_| f.element(rng.gen_range(0..q)).unwrap()).collect();
        let base = CyclicSpec::new(f, alphas).unwrap().build();
        // mix in a direct sum with a fixture to leave the cyclic family
        let l = if k % 3 == 0 {
            base.direct_sum(&leibniz::io::fixtures::r2(f)).unwrap()
        } else {
            base
        };
        let side = if k % 2 == 0 { Side::Right } else { Side::Left };
        let x: Vec<_> = (0..l.dim()).map(|_| f.element(rng.gen_range(0..q)).unwrap()).collect();
        let op = l.mult_operator(&x, side).unwrap();
        if !is_fitting_pair(&op, &fitting(&l, &op).unwrap()) {
            bad += 1;
        }
    }
    outcome(bad + rational_bad == 0, format!("200 pairs, {} invalid", bad + rational_bad))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = generate(&CorpusLimits::default()).expect("corpus");
    let gen_time = start.elapsed();

    let mut t = Tally::default();
    for e in &corpus {
        with_algebra!(&e.algebra, l => analyse(l, &e.name, &mut t));
    }
    let (c3, c4) = criteria_3_4();
    let mut dren_detail = format!("{} solvable A-algebras, {} findings", t.dren_checked, t.dren_findings.len());
    for f in &t.dren_findings {
        dren_detail.push_str(&format!("; finding: {f}"));
    }
    let results = vec![
        ("Leibniz validity of the corpus", criterion_1(&corpus, gen_time)),
        ("cyclic: A-algebra iff alpha_2 != 0", criterion_2()),
        ("cyclic: monolithic iff two irreducible factors", c3),
        ("cyclic: phi-free monolithic iff p = x p_2", c4),
        (
            "derived series = lower nilpotent series",
            zero_tolerance(t.certified, &t.series_bad, "A-algebras"),
        ),
        ("Z(L) ∩ L^2 = 0", zero_tolerance(t.int_checked, &t.int_bad, "solvable A-algebras")),
        (
            "triangular decomposition and ideal splitting",
            zero_tolerance(t.split_checked, &t.split_bad, "finite-field solvable A-algebras"),
        ),
        (
            "N = L^2 ⊕ Z(L)",
            zero_tolerance(t.ss_checked, &t.ss_bad, "completely solvable A-algebras"),
        ),
        ("maximal nilpotent subalgebras", {
            let mut o = zero_tolerance(t.maxn_checked, &t.maxn_bad, "finite-field completely solvable A-algebras");
            if !t.maxn_findings.is_empty() {
                o.detail.push_str(&format!(
                    "; {} one-dimensional cases where L^2 = 0 is not maximal: {}",
                    t.maxn_findings.len(),
                    list(&t.maxn_findings)
                ));
            }
            o
        }),
        (
            "battery shortcuts agree with enumeration",
            zero_tolerance(t.oracle_checked, &t.contradictions, "finite-field algebras"),
        ),
        ("Fitting decompositions", criterion_11()),
        (
            "L_x^n(A) ⊆ R_x^{n-1}(A)",
            zero_tolerance(t.left_triples, &t.left_bad, "triples"),
        ),
        (
            "derived length at most 3",
            outcome(t.dren_char0_bad.is_empty() && t.dren_checked > 0, dren_detail),
        ),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        if !o.ok {
            failed += 1;
        }
        println!("{tag} {:>2} {name}: {}", i + 1, o.detail);
    }
    println!("total {:.1}s", start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
