//! Machine-readable command output. Every number appears as an exact `p/q`
//! string with a decimal rendering beside it for reading only.

use gately_core::axioms::AxiomReport;
use gately_core::game::CoreViolation;
use gately_core::measures::Measure;
use gately_core::rational::{self, Rational};
use gately_core::verify::{expected_axioms, ClauseStatus, TheoremReport};
use gately_core::{Coalition, HierNet, NetworkClass};
use serde::{Deserialize, Serialize};

pub const DECIMAL_DIGITS: usize = 6;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub network: Option<NetworkSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub measures: Vec<MeasureResult>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub core: Option<CoreReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertices: Option<Vec<Vec<Entry>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verification: Option<VerificationReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkSummary {
    pub n: usize,
    pub n_d: usize,
    pub n_a: usize,
    pub n_b: usize,
    pub labels: Vec<String>,
    pub class: ClassFlags,
    /// Nodes without predecessors.
    pub free: Vec<String>,
    /// Nodes with exactly one predecessor.
    pub sole: Vec<String>,
    /// Nodes with two or more predecessors.
    pub joint: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub simple: bool,
    pub regular: bool,
    pub weakly_regular: bool,
    pub principal: bool,
}

impl From<NetworkClass> for ClassFlags {
    fn from(c: NetworkClass) -> Self {
        ClassFlags {
            simple: c.simple,
            regular: c.regular,
            weakly_regular: c.weakly_regular,
            principal: c.principal,
        }
    }
}

impl NetworkSummary {
    pub fn of(net: &HierNet, labels: &[String]) -> Self {
        let part = net.partition();
        let names = |ids: &[usize]| ids.iter().map(|&i| labels[i].clone()).collect();
        NetworkSummary {
            n: net.n(),
            n_d: part.dominated_count(),
            n_a: part.sole.len(),
            n_b: part.joint.len(),
            labels: labels.to_vec(),
            class: net.classify().into(),
            free: names(&part.free),
            sole: names(&part.sole),
            joint: names(&part.joint),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub label: String,
    pub exact: String,
    pub decimal: String,
}

impl Entry {
    pub fn new(label: &str, value: &Rational) -> Self {
        Entry {
            label: label.to_string(),
            exact: value.to_string(),
            decimal: rational::to_decimal(value, DECIMAL_DIGITS),
        }
    }
}

pub fn entries(labels: &[String], values: &[Rational]) -> Vec<Entry> {
    labels
        .iter()
        .zip(values)
        .map(|(l, v)| Entry::new(l, v))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureResult {
    pub measure: String,
    pub values: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreReport {
    pub measure: String,
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub violation: Option<ViolationDoc>,
    /// Set when the vector is not a power gauge at all.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub coalition: Vec<String>,
    pub allocated: String,
    pub worth: String,
    pub deficit: String,
}

pub fn coalition_labels(c: Coalition, labels: &[String]) -> Vec<String> {
    c.members().map(|i| labels[i].clone()).collect()
}

impl ViolationDoc {
    pub fn new(v: &CoreViolation, labels: &[String]) -> Self {
        ViolationDoc {
            coalition: coalition_labels(v.coalition, labels),
            allocated: v.allocated.to_string(),
            worth: v.worth.to_string(),
            deficit: v.deficit().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub networks: Vec<NetworkVerification>,
    pub axioms: Vec<AxiomDoc>,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkVerification {
    pub index: usize,
    pub n: usize,
    pub edges: Vec<(String, String)>,
    pub clauses: Vec<ClauseDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseDoc {
    pub id: String,
    pub statement: String,
    /// `pass`, `fail`, `not_applicable` or `permitted_failure`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl NetworkVerification {
    pub fn new(index: usize, net: &HierNet, labels: &[String], report: &TheoremReport) -> Self {
        let clauses = report
            .clauses
            .iter()
            .map(|c| {
                let (status, detail) = match &c.status {
                    ClauseStatus::Pass => ("pass", None),
                    ClauseStatus::Fail(d) => ("fail", Some(d.clone())),
                    ClauseStatus::NotApplicable(d) => ("not_applicable", Some(d.clone())),
                    ClauseStatus::PermittedFailure(d) => ("permitted_failure", Some(d.clone())),
                };
                ClauseDoc {
                    id: c.id.to_string(),
                    statement: c.statement.to_string(),
                    status: status.to_string(),
                    detail,
                }
            })
            .collect();
        NetworkVerification {
            index,
            n: net.n(),
            edges: net
                .edges()
                .map(|(i, j)| (labels[i].clone(), labels[j].clone()))
                .collect(),
            clauses,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomDoc {
    pub measure: String,
    pub normalisation: bool,
    pub normality: bool,
    pub restricted_proportionality: bool,
    /// No axiom the measure is known to satisfy failed.
    pub consistent: bool,
}

impl AxiomDoc {
    pub fn new(measure: Measure, report: &AxiomReport) -> Self {
        let consistent = expected_axioms(measure)
            .iter()
            .all(|&(axiom, expected)| !expected || report.holds(axiom));
        AxiomDoc {
            measure: measure.name().to_string(),
            normalisation: report.normalisation,
            normality: report.normality,
            restricted_proportionality: report.restricted_proportionality,
            consistent,
        }
    }
}
