//! Network input documents: JSON (`{"nodes": [...], "edges": [[a, b], ...]}`)
//! and a plain edge-list text format.
//!
//! Edge-list grammar, one statement per line:
//!
//! ```text
//! # comment
//! node <label>          declares a node (isolated nodes need this)
//! <pred> <succ>         adds an edge; both labels are declared implicitly
//! ```
//!
//! Labels take their ids in order of first appearance.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use gately_core::HierNet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{location}: {message}")]
pub struct ParseError {
    pub location: String,
    pub message: String,
}

impl ParseError {
    fn new(location: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError {
            location: location.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    EdgeList,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkDocument {
    #[serde(rename = "nodes")]
    pub labels: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl NetworkDocument {
    /// Picks the format from the file name, falling back to sniffing for a
    /// leading `{`.
    pub fn detect_format(name: &str, text: &str) -> Format {
        if name.ends_with(".json") || text.trim_start().starts_with('{') {
            Format::Json
        } else {
            Format::EdgeList
        }
    }

    pub fn parse(text: &str, format: Format) -> Result<Self, ParseError> {
        match format {
            Format::Json => NetworkDocument::from_json(text),
            Format::EdgeList => NetworkDocument::from_edge_list(text),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let doc: NetworkDocument = serde_json::from_str(text).map_err(|e| {
            ParseError::new(
                format!("line {}, column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn from_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut labels: Vec<String> = Vec::new();
        let mut known: HashSet<String> = HashSet::new();
        let mut edges = Vec::new();
        let mut seen_edges = HashSet::new();
        let mut declare = |label: &str, labels: &mut Vec<String>| {
            if known.insert(label.to_string()) {
                labels.push(label.to_string());
            }
        };
        for (k, raw) in text.lines().enumerate() {
            let location = format!("line {}", k + 1);
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                ["node", label] => declare(label, &mut labels),
                [from, to] => {
                    if from == to {
                        return Err(ParseError::new(
                            location,
                            format!("self-loop on node {from}"),
                        ));
                    }
                    if !seen_edges.insert((from.to_string(), to.to_string())) {
                        return Err(ParseError::new(
                            location,
                            format!("duplicate edge {from} -> {to}"),
                        ));
                    }
                    declare(from, &mut labels);
                    declare(to, &mut labels);
                    edges.push((from.to_string(), to.to_string()));
                }
                _ => {
                    return Err(ParseError::new(
                        location,
                        format!(
                            "expected `<pred> <succ>` or `node <label>`, got {:?}",
                            line.trim()
                        ),
                    ))
                }
            }
        }
        let doc = NetworkDocument { labels, edges };
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<(), ParseError> {
        if self.labels.is_empty() {
            return Err(ParseError::new("nodes", "network has no nodes"));
        }
        let mut known = HashSet::new();
        for (k, label) in self.labels.iter().enumerate() {
            if !known.insert(label.as_str()) {
                return Err(ParseError::new(
                    format!("nodes[{k}]"),
                    format!("duplicate node label {label:?}"),
                ));
            }
        }
        let mut seen = HashSet::new();
        for (k, (from, to)) in self.edges.iter().enumerate() {
            let location = format!("edges[{k}]");
            for label in [from, to] {
                if !known.contains(label.as_str()) {
                    return Err(ParseError::new(
                        location,
                        format!("unknown node label {label:?}"),
                    ));
                }
            }
            if from == to {
                return Err(ParseError::new(
                    location,
                    format!("self-loop on node {from}"),
                ));
            }
            if !seen.insert((from, to)) {
                return Err(ParseError::new(
                    location,
                    format!("duplicate edge {from} -> {to}"),
                ));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialises")
    }

    /// Declares every node first so isolated nodes and label order survive.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for label in &self.labels {
            writeln!(out, "node {label}").unwrap();
        }
        for (from, to) in &self.edges {
            writeln!(out, "{from} {to}").unwrap();
        }
        out
    }

    pub fn to_network(&self) -> Result<HierNet, ParseError> {
        let index: HashMap<&str, usize> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|(a, b)| (index[a.as_str()], index[b.as_str()]))
            .collect();
        HierNet::from_edges(self.labels.len(), &edges)
            .map_err(|e| ParseError::new("network", e.to_string()))
    }

    /// Labels nodes `1..=n`.
    pub fn from_network(net: &HierNet) -> Self {
        let labels = (1..=net.n()).map(|i| i.to_string()).collect();
        let edges = net
            .edges()
            .map(|(i, j)| ((i + 1).to_string(), (j + 1).to_string()))
            .collect();
        NetworkDocument { labels, edges }
    }
}
