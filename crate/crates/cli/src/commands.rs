//! The subcommands. Each returns a [`ResultDocument`] together with the human
//! rendering, so `main` only chooses which one to print.

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;

use gately_core::axioms::Axiom;
use gately_core::measures::{core_vertices, is_core_gauge, CoreVerdict, Measure};
use gately_core::random::{generate_random, random_networks};
use gately_core::rational::{self, Rational};
use gately_core::verify::{axiom_suite, verify_many, ClauseStatus, TheoremReport};
use gately_core::{Error, HierNet, Limits};

use crate::document::NetworkDocument;
use crate::report::{
    coalition_labels, entries, AxiomDoc, CoreReport, MeasureResult, NetworkSummary,
    NetworkVerification, ResultDocument, VerificationReport, ViolationDoc,
};
use crate::CliError;

/// A parsed input file.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub doc: NetworkDocument,
    pub net: HierNet,
}

impl Loaded {
    pub fn from_document(doc: NetworkDocument, source: &str) -> Result<Self, CliError> {
        let net = doc.to_network().map_err(|e| CliError::Parse {
            path: source.to_string(),
            source: e,
        })?;
        Ok(Loaded { doc, net })
    }

    pub fn labels(&self) -> &[String] {
        &self.doc.labels
    }
}

/// Reads a network from `path`, or from standard input when `path` is `-`.
pub fn load(path: &str) -> Result<Loaded, CliError> {
    let io_err = |source| CliError::Io {
        path: PathBuf::from(path),
        source,
    };
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(io_err)?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(io_err)?
    };
    let format = NetworkDocument::detect_format(path, &text);
    let doc = NetworkDocument::parse(&text, format).map_err(|e| CliError::Parse {
        path: path.to_string(),
        source: e,
    })?;
    Loaded::from_document(doc, path)
}

#[derive(Debug)]
pub struct Outcome {
    pub document: ResultDocument,
    pub text: String,
    /// False when a verification failed; maps to exit code 1.
    pub passed: bool,
}

impl Outcome {
    fn ok(document: ResultDocument, text: String) -> Self {
        Outcome {
            document,
            text,
            passed: true,
        }
    }
}

/// Left-aligns each column to its widest cell.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if c + 1 < row.len() {
                let pad = widths[c] - cell.chars().count();
                line.push_str(&" ".repeat(pad));
            }
        }
        writeln!(out, "{line}").unwrap();
    }
    out
}

fn summary_text(s: &NetworkSummary) -> String {
    let mut out = String::new();
    writeln!(out, "n={} n_D={} n_a={} n_b={}", s.n, s.n_d, s.n_a, s.n_b).unwrap();
    writeln!(
        out,
        "simple={} regular={} weakly_regular={} principal={}",
        s.class.simple, s.class.regular, s.class.weakly_regular, s.class.principal
    )
    .unwrap();
    for (name, nodes) in [
        ("no predecessor", &s.free),
        ("one predecessor", &s.sole),
        ("several predecessors", &s.joint),
    ] {
        let nodes = if nodes.is_empty() {
            "(none)".to_string()
        } else {
            nodes.join(" ")
        };
        writeln!(out, "{name}: {nodes}").unwrap();
    }
    out
}

pub fn classify(input: &Loaded) -> Outcome {
    let summary = NetworkSummary::of(&input.net, input.labels());
    let text = summary_text(&summary);
    Outcome::ok(
        ResultDocument {
            network: Some(summary),
            ..Default::default()
        },
        text,
    )
}

pub fn measure(input: &Loaded, measures: &[Measure]) -> Outcome {
    let labels = input.labels();
    let values: Vec<(Measure, Vec<Rational>)> = measures
        .iter()
        .map(|&m| (m, m.evaluate(&input.net)))
        .collect();
    let mut text = String::new();
    for (m, v) in &values {
        writeln!(text, "{m}: {}", rational::format_vector(v)).unwrap();
    }
    let mut rows = vec![std::iter::once("node".to_string())
        .chain(values.iter().map(|(m, _)| m.to_string()))
        .collect::<Vec<_>>()];
    for (i, label) in labels.iter().enumerate() {
        let mut row = vec![label.clone()];
        for (_, v) in &values {
            row.push(format!(
                "{} ({})",
                v[i],
                rational::to_decimal(&v[i], crate::report::DECIMAL_DIGITS)
            ));
        }
        rows.push(row);
    }
    text.push('\n');
    text.push_str(&table(&rows));
    let document = ResultDocument {
        network: Some(NetworkSummary::of(&input.net, labels)),
        measures: values
            .iter()
            .map(|(m, v)| MeasureResult {
                measure: m.name().to_string(),
                values: entries(labels, v),
            })
            .collect(),
        ..Default::default()
    };
    Outcome::ok(document, text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreQuery {
    Check(Measure),
    Vertices,
}

pub fn core(input: &Loaded, query: CoreQuery, limits: &Limits) -> Result<Outcome, CliError> {
    let labels = input.labels();
    let mut document = ResultDocument {
        network: Some(NetworkSummary::of(&input.net, labels)),
        ..Default::default()
    };
    let text = match query {
        CoreQuery::Check(m) => {
            let values = m.evaluate(&input.net);
            let mut text = format!("{m}: {}\n", rational::format_vector(&values));
            let (report, line) = match is_core_gauge(&input.net, &values, limits) {
                Ok(CoreVerdict::Member) => (
                    CoreReport {
                        measure: m.name().to_string(),
                        member: true,
                        violation: None,
                        reason: None,
                    },
                    "in core".to_string(),
                ),
                Ok(CoreVerdict::Violated(v)) => {
                    let doc = ViolationDoc::new(&v, labels);
                    let line = format!(
                        "NOT in core; violating coalition {{{}}}: {} < {}",
                        coalition_labels(v.coalition, labels).join(","),
                        v.allocated,
                        v.worth
                    );
                    (
                        CoreReport {
                            measure: m.name().to_string(),
                            member: false,
                            violation: Some(doc),
                            reason: None,
                        },
                        line,
                    )
                }
                Err(e @ (Error::InvalidGauge { .. } | Error::LengthMismatch { .. })) => {
                    let reason = format!("not a power gauge: {e}");
                    (
                        CoreReport {
                            measure: m.name().to_string(),
                            member: false,
                            violation: None,
                            reason: Some(reason.clone()),
                        },
                        format!("NOT in core; {reason}"),
                    )
                }
                Err(e) => return Err(e.into()),
            };
            document.core = Some(report);
            text.push_str(&line);
            text.push('\n');
            text
        }
        CoreQuery::Vertices => {
            let vertices = core_vertices(&input.net, limits)?;
            let count = input.net.simple_subnetwork_count();
            let mut text = format!(
                "{} {} ({count} simple {})\n",
                vertices.len(),
                if vertices.len() == 1 {
                    "vertex"
                } else {
                    "vertices"
                },
                if count == 1 {
                    "subnetwork"
                } else {
                    "subnetworks"
                }
            );
            let mut rows = vec![std::iter::once("vertex".to_string())
                .chain(labels.iter().cloned())
                .collect::<Vec<_>>()];
            for (k, v) in vertices.iter().enumerate() {
                rows.push(
                    std::iter::once((k + 1).to_string())
                        .chain(v.iter().map(|x| x.to_string()))
                        .collect(),
                );
            }
            text.push_str(&table(&rows));
            document.vertices = Some(vertices.iter().map(|v| entries(labels, v)).collect());
            text
        }
    };
    Ok(Outcome::ok(document, text))
}

#[derive(Debug, Clone)]
pub enum VerifySource {
    Input(Loaded),
    Random {
        count: usize,
        nodes: usize,
        seed: u64,
        edge_prob: Rational,
    },
}

fn numbered_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn status_counts(reports: &[TheoremReport]) -> String {
    let mut ids: Vec<&'static str> = Vec::new();
    for r in reports {
        for c in &r.clauses {
            if !ids.contains(&c.id) {
                ids.push(c.id);
            }
        }
    }
    let mut rows = vec![vec![
        "clause".to_string(),
        "pass".to_string(),
        "n/a".to_string(),
        "permitted".to_string(),
        "fail".to_string(),
    ]];
    for id in ids {
        let mut counts = [0usize; 4];
        for c in reports.iter().filter_map(|r| r.clause(id)) {
            let slot = match c.status {
                ClauseStatus::Pass => 0,
                ClauseStatus::NotApplicable(_) => 1,
                ClauseStatus::PermittedFailure(_) => 2,
                ClauseStatus::Fail(_) => 3,
            };
            counts[slot] += 1;
        }
        rows.push(
            std::iter::once(id.to_string())
                .chain(counts.iter().map(|c| c.to_string()))
                .collect(),
        );
    }
    table(&rows)
}

fn edges_text(net: &HierNet, labels: &[String]) -> String {
    let edges: Vec<String> = net
        .edges()
        .map(|(i, j)| format!("{}->{}", labels[i], labels[j]))
        .collect();
    if edges.is_empty() {
        "(no edges)".to_string()
    } else {
        edges.join(" ")
    }
}

pub fn verify(source: &VerifySource, limits: &Limits) -> Result<Outcome, CliError> {
    let (nets, labels): (Vec<HierNet>, Vec<Vec<String>>) = match source {
        VerifySource::Input(loaded) => (vec![loaded.net.clone()], vec![loaded.doc.labels.clone()]),
        VerifySource::Random {
            count,
            nodes,
            seed,
            edge_prob,
        } => {
            let nets = random_networks(*count, *nodes, edge_prob, *seed)?;
            let labels = vec![numbered_labels(*nodes); nets.len()];
            (nets, labels)
        }
    };
    let reports = verify_many(&nets, limits)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let suite = axiom_suite(&nets);

    let mut text = String::new();
    let failures: usize = reports.iter().map(|r| r.failures().count()).sum();
    if let [report] = reports.as_slice() {
        writeln!(text, "network: {}", edges_text(&nets[0], &labels[0])).unwrap();
        for c in &report.clauses {
            writeln!(text, "{}: {}", c.id, c.status).unwrap();
        }
    } else {
        writeln!(text, "{} networks", reports.len()).unwrap();
        text.push_str(&status_counts(&reports));
        for (k, report) in reports.iter().enumerate() {
            for c in report.failures() {
                writeln!(
                    text,
                    "#{k} [{}] {}: {}",
                    edges_text(&nets[k], &labels[k]),
                    c.id,
                    c.status
                )
                .unwrap();
            }
        }
    }

    text.push_str("\naxioms\n");
    let mut rows = vec![vec![
        "measure".to_string(),
        "normalisation".to_string(),
        "normality".to_string(),
        "restricted proportionality".to_string(),
        "expected".to_string(),
    ]];
    let mut contradictions = 0;
    for entry in &suite {
        let cell = |axiom: Axiom| match entry.report.witness(axiom) {
            None => "holds".to_string(),
            Some(w) if nets.len() > 1 => format!("fails (#{})", w.net_index),
            Some(_) => "fails".to_string(),
        };
        let consistent = !entry.contradicts_expectation();
        if !consistent {
            contradictions += 1;
        }
        rows.push(vec![
            entry.measure.to_string(),
            cell(Axiom::Normalisation),
            cell(Axiom::Normality),
            cell(Axiom::RestrictedProportionality),
            if consistent { "ok" } else { "CONTRADICTED" }.to_string(),
        ]);
    }
    text.push_str(&table(&rows));

    let passed = failures == 0 && contradictions == 0;
    if passed {
        writeln!(text, "\nverification passed").unwrap();
    } else {
        writeln!(
            text,
            "\nverification FAILED: {failures} clause failure(s), {contradictions} axiom contradiction(s)"
        )
        .unwrap();
    }

    let document = ResultDocument {
        network: match source {
            VerifySource::Input(loaded) => Some(NetworkSummary::of(&loaded.net, loaded.labels())),
            VerifySource::Random { .. } => None,
        },
        verification: Some(VerificationReport {
            networks: reports
                .iter()
                .enumerate()
                .map(|(k, r)| NetworkVerification::new(k, &nets[k], &labels[k], r))
                .collect(),
            axioms: suite
                .iter()
                .map(|e| AxiomDoc::new(e.measure, &e.report))
                .collect(),
            failures: failures + contradictions,
        }),
        ..Default::default()
    };
    Ok(Outcome {
        document,
        text,
        passed,
    })
}

/// A seeded random network with nodes labelled `1..=nodes`.
pub fn generate(
    nodes: usize,
    edge_prob: &Rational,
    seed: u64,
) -> Result<NetworkDocument, CliError> {
    let net = generate_random(nodes, edge_prob, seed)?;
    Ok(NetworkDocument::from_network(&net))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_pads_all_but_the_last_column() {
        let rows = vec![
            vec!["a".to_string(), "bb".to_string(), "c".to_string()],
            vec!["dddd".to_string(), "e".to_string(), "f".to_string()],
        ];
        assert_eq!(table(&rows), "a     bb  c\ndddd  e   f\n");
    }
}
