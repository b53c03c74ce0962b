//! Structured pass/fail reports shared by the analysis modules.

use serde::{Deserialize, Serialize};

use crate::field::{Field, ScalarLit, Subspace};

/// A subspace written out as its echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceRecord {
    pub dim: usize,
    pub basis: Vec<Vec<ScalarLit>>,
}

impl SubspaceRecord {
    pub fn new<F: Field>(s: &Subspace<F>) -> Self {
        let f = s.field();
        SubspaceRecord {
            dim: s.dim(),
            basis: s
                .basis()
                .iter()
                .map(|v| v.iter().map(|x| f.to_literal(x)).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    /// Recorded observation that does not count as a failure.
    Finding,
}

/// One checked statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub id: String,
    /// The statement being checked, in symbols.
    pub anchor: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<SubspaceRecord>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            clauses: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        id: &str,
        anchor: &str,
        status: Status,
        detail: impl Into<String>,
        witnesses: Vec<SubspaceRecord>,
    ) {
        self.clauses.push(Clause {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status,
            detail: detail.into(),
            witnesses,
        });
    }

    /// Records `Pass` or `Fail` according to `ok`; witnesses are kept only on failure.
    pub fn check(
        &mut self,
        id: &str,
        anchor: &str,
        ok: bool,
        detail: impl Into<String>,
        witnesses: Vec<SubspaceRecord>,
    ) {
        let status = if ok { Status::Pass } else { Status::Fail };
        let witnesses = if ok { Vec::new() } else { witnesses };
        self.push(id, anchor, status, detail, witnesses);
    }

    pub fn skip(&mut self, id: &str, anchor: &str, reason: impl Into<String>) {
        self.push(id, anchor, Status::NotApplicable, reason, Vec::new());
    }

    pub fn extend(&mut self, other: Report) {
        self.clauses.extend(other.clauses);
    }

    pub fn count(&self, status: Status) -> usize {
        self.clauses.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn findings(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| c.status == Status::Finding)
    }

    pub fn all_passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn clause(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }
}
