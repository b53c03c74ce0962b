//! The generated corpus: fixtures over several fields, cyclic sweeps,
//! direct sums of fixtures and quotients by ideals.

use std::collections::BTreeSet;

use crate::algebra::{Enumerator, LeibnizAlgebra, DEFAULT_BUDGET};
use crate::cyclic::{sweep, CyclicSpec};
use crate::error::Result;
use crate::field::{AnyField, Field, Gf, Rationals};
use crate::io::fixtures;
use crate::io::format::{AlgebraFile, AnyAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Origin {
    Fixture,
    Cyclic,
    DirectSum,
    Quotient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    /// File stem, e.g. `c2.gf3` or `cyclic.gf2.n3.1-0`.
    pub name: String,
    pub origin: Origin,
    pub algebra: AnyAlgebra,
}

#[derive(Debug, Clone)]
pub struct CorpusLimits {
    pub fixture_fields: Vec<String>,
    pub cyclic_fields: Vec<String>,
    pub max_cyclic_n: usize,
    pub sum_fields: Vec<String>,
    pub quotients: bool,
    pub budget: u64,
}

impl Default for CorpusLimits {
    fn default() -> Self {
        let tags = |t: &[&str]| t.iter().map(|s| s.to_string()).collect();
        CorpusLimits {
            fixture_fields: tags(&["q", "gf2", "gf3", "gf4", "gf5", "gf9"]),
            cyclic_fields: tags(&["gf2", "gf3"]),
            max_cyclic_n: 5,
            sum_fields: tags(&["q", "gf2", "gf3"]),
            quotients: true,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Canonical key for deduplication: field, dimension and exact table.
fn key(a: &AnyAlgebra) -> String {
    let f = a.to_file();
    serde_json::to_string(&(f.field, f.dim, f.table)).expect("serializable")
}

fn spec_tag<F: Field>(s: &CyclicSpec<F>) -> String {
    let f = s.field();
    let parts: Vec<String> = s.alphas().iter().map(|a| f.format(a)).collect();
    format!("n{}.{}", s.n(), parts.join("-"))
}

fn typed<F: Field>(field: &F, tag: &str, limits: &CorpusLimits, out: &mut Vec<CorpusEntry>, wrap: fn(LeibnizAlgebra<F>) -> AnyAlgebra) {
    let push = |out: &mut Vec<CorpusEntry>, name: String, origin, l| {
        out.push(CorpusEntry {
            name,
            origin,
            algebra: wrap(l),
        })
    };
    if limits.fixture_fields.iter().any(|t| t == tag) {
        for (name, l) in fixtures::NAMES.iter().zip(fixtures::all(field)) {
            push(out, format!("{name}.{tag}"), Origin::Fixture, l);
        }
    }
    if field.is_finite() && limits.cyclic_fields.iter().any(|t| t == tag) {
        for n in 2..=limits.max_cyclic_n {
            for s in sweep(field, n) {
                push(out, format!("cyclic.{tag}.{}", spec_tag(&s)), Origin::Cyclic, s.build());
            }
        }
    }
    if limits.sum_fields.iter().any(|t| t == tag) {
        let all = fixtures::all(field);
        for i in 0..all.len() {
            for j in i..all.len() {
                let l = all[i].direct_sum(&all[j]).expect("same field");
                push(
                    out,
                    format!("sum.{tag}.{}+{}", fixtures::NAMES[i], fixtures::NAMES[j]),
                    Origin::DirectSum,
                    l,
                );
            }
        }
    }
}

fn quotients_of<F: Field>(l: &LeibnizAlgebra<F>, budget: u64) -> Result<Vec<LeibnizAlgebra<F>>> {
    let en = Enumerator::new(l, budget)?;
    Ok(en
        .ideals()
        .into_iter()
        .filter(|i| !i.is_zero() && !i.is_full())
        .map(|i| l.quotient(&i).expect("ideal").0)
        .collect())
}

/// Generates the corpus in a fixed order, dropping exact duplicates.
pub fn generate(limits: &CorpusLimits) -> Result<Vec<CorpusEntry>> {
    let mut tags: Vec<&String> = limits
        .fixture_fields
        .iter()
        .chain(&limits.cyclic_fields)
        .chain(&limits.sum_fields)
        .collect();
    let mut seen_tags = BTreeSet::new();
    tags.retain(|t| seen_tags.insert(t.as_str()));

    let mut raw = Vec::new();
    for tag in tags {
        match AnyField::parse_tag(tag)? {
            AnyField::Rational(f) => typed::<Rationals>(&f, tag, limits, &mut raw, AnyAlgebra::Rational),
            AnyField::Finite(f) => typed::<Gf>(&f, tag, limits, &mut raw, AnyAlgebra::Finite),
        }
    }
    let mut seen = BTreeSet::new();
    let mut out: Vec<CorpusEntry> = raw.into_iter().filter(|e| seen.insert(key(&e.algebra))).collect();
    if limits.quotients {
        let mut extra = Vec::new();
        for e in out.iter().filter(|e| e.origin != Origin::Quotient) {
            let AnyAlgebra::Finite(l) = &e.algebra else { continue };
            for (k, q) in quotients_of(l, limits.budget)?.into_iter().enumerate() {
                let algebra = AnyAlgebra::Finite(q);
                if seen.insert(key(&algebra)) {
                    extra.push(CorpusEntry {
                        name: format!("quotient.{}.{k}", e.name),
                        origin: Origin::Quotient,
                        algebra,
                    });
                }
            }
        }
        out.extend(extra);
    }
    Ok(out)
}

/// Serialized files keyed by file name.
pub fn files(entries: &[CorpusEntry]) -> Vec<(String, AlgebraFile)> {
    entries
        .iter()
        .map(|e| (format!("{}.json", e.name), e.algebra.to_file()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::with_algebra;

    #[test]
    fn small_sweep_counts() {
        let limits = CorpusLimits {
            fixture_fields: vec![],
            cyclic_fields: vec!["gf2".into()],
            max_cyclic_n: 3,
            sum_fields: vec![],
            quotients: false,
            budget: DEFAULT_BUDGET,
        };
        let c = generate(&limits).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c[0].name, "cyclic.gf2.n2.0");
        assert_eq!(c[5].name, "cyclic.gf2.n3.1-1");
    }

    #[test]
    fn default_corpus_is_leibniz_and_parses() {
        let c = generate(&CorpusLimits::default()).unwrap();
        assert!(c.iter().any(|e| e.origin == Origin::Quotient));
        let h3 = c.iter().find(|e| e.name == "h3.q").unwrap();
        with_algebra!(&h3.algebra, l => assert_eq!(l.centre().dim(), 1));
        for (name, file) in files(&c) {
            let back = AlgebraFile::parse(&file.to_json()).unwrap().build();
            assert!(back.is_ok(), "{name}");
        }
        let keys: BTreeSet<_> = c.iter().map(|e| key(&e.algebra)).collect();
        assert_eq!(keys.len(), c.len());
    }
}
