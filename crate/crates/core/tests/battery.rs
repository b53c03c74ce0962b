use leibniz::a_algebra::{exhaustive_verdict, is_a_algebra, theorem_battery};
use leibniz::algebra::{Enumerator, DEFAULT_BUDGET};
use leibniz::io::corpus::{generate, CorpusLimits, Origin};
use leibniz::report::Status;
use leibniz::{with_algebra, Field, LeibnizAlgebra};

fn small_corpus() -> Vec<leibniz::io::corpus::CorpusEntry> {
    let limits = CorpusLimits {
        max_cyclic_n: 4,
        ..CorpusLimits::default()
    };
    generate(&limits).unwrap()
}

fn run<F: Field>(l: &LeibnizAlgebra<F>, name: &str) -> (bool, usize) {
    let b = theorem_battery(l, DEFAULT_BUDGET, 0);
    let fails: Vec<_> = b.report.failures().map(|c| c.id.clone()).collect();
    assert!(fails.is_empty(), "{name}: {fails:?}\n{:#?}", b.report);
    let findings = b.report.findings().filter(|c| c.id == "dren").count();
    (b.verdict.is_true(), findings)
}

#[test]
fn battery_has_no_hard_failures_on_the_corpus() {
    let corpus = small_corpus();
    let mut certified = 0;
    for e in corpus.iter().filter(|e| e.origin != Origin::Quotient) {
        let (ok, dren) = with_algebra!(&e.algebra, l => run(l, &e.name));
        certified += ok as usize;
        assert_eq!(dren, 0, "{}", e.name);
    }
    assert!(certified > 50);
}

fn quotients_stay_a<F: Field>(l: &LeibnizAlgebra<F>, name: &str) {
    if !exhaustive_verdict(l, DEFAULT_BUDGET).unwrap().is_true() {
        return;
    }
    let en = Enumerator::new(l, DEFAULT_BUDGET).unwrap();
    for i in en.ideals() {
        let (q, _) = l.quotient(&i).unwrap();
        assert!(exhaustive_verdict(&q, DEFAULT_BUDGET).unwrap().is_true(), "{name}");
    }
    for s in en.subalgebras().iter().filter(|s| s.dim() <= 3) {
        let sub = l.restrict(s).unwrap();
        assert!(exhaustive_verdict(&sub, DEFAULT_BUDGET).unwrap().is_true(), "{name}");
    }
}

#[test]
fn quotients_and_subalgebras_of_a_algebras_are_a_algebras() {
    for e in small_corpus() {
        if let leibniz::io::AnyAlgebra::Finite(l) = &e.algebra {
            quotients_stay_a(l, &e.name);
        }
    }
}

#[test]
fn false_verdicts_carry_valid_witnesses() {
    for e in small_corpus() {
        with_algebra!(&e.algebra, l => {
            let v = is_a_algebra(l, DEFAULT_BUDGET, 0);
            if let Some(w) = v.witness() {
                assert!(l.is_subalgebra(w) && l.is_nilpotent_sub(w) && !l.is_abelian_sub(w), "{}", e.name);
            }
        });
    }
}

#[test]
fn battery_reports_serialize_deterministically() {
    let f = leibniz::Gf::with_order(3).unwrap();
    let l = leibniz::io::fixtures::c3b(&f);
    let a = serde_json::to_string(&theorem_battery(&l, DEFAULT_BUDGET, 7).report).unwrap();
    let b = serde_json::to_string(&theorem_battery(&l, DEFAULT_BUDGET, 7).report).unwrap();
    assert_eq!(a, b);
    assert!(theorem_battery(&l, DEFAULT_BUDGET, 7)
        .report
        .clauses
        .iter()
        .all(|c| c.status != Status::Fail));
}
