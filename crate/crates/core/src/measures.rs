//! Closed-form power measures and Core diagnostics for hierarchical
//! networks.
//!
//! Every measure here other than the degree vector distributes exactly
//! `n_D` units of control (one per dominated node) over the nodes. The
//! Gately, restricted egalitarian and beta measures all hand out the
//! solely controlled nodes `N^a_D` to their unique predecessor and differ
//! only in how they split control over `N^b_D`.

use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{strong_successor_game, CoreViolation};
use crate::hull;
use crate::limits::Limits;
use crate::network::HierNet;
use crate::rational::{self, Rational};

/// A nonnegative vector over the nodes summing to `n_D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerGauge(Vec<Rational>);

impl PowerGauge {
    /// Validates `delta` against the gauge invariants for `net`.
    pub fn new(delta: Vec<Rational>, net: &HierNet) -> Result<Self> {
        if delta.len() != net.n() {
            return Err(Error::LengthMismatch {
                got: delta.len(),
                expected: net.n(),
            });
        }
        if let Some(i) = delta.iter().position(|d| d.is_negative()) {
            return Err(Error::InvalidGauge {
                reason: format!("entry {i} is negative ({})", delta[i]),
            });
        }
        let total = rational::sum(&delta);
        let dominated = rational::from_usize(net.partition().dominated_count());
        if total != dominated {
            return Err(Error::InvalidGauge {
                reason: format!("entries sum to {total}, expected n_D = {dominated}"),
            });
        }
        Ok(PowerGauge(delta))
    }

    fn trusted(delta: Vec<Rational>) -> Self {
        PowerGauge(delta)
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }
}

impl Deref for PowerGauge {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl fmt::Display for PowerGauge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            rational::format_vector(&self.0).replace(' ', ", ")
        )
    }
}

/// `β_i(D) = sum_{j in D(i)} 1 / p_D(j)`.
pub fn beta_measure(net: &HierNet) -> PowerGauge {
    let delta = (0..net.n())
        .map(|i| {
            net.successors(i)
                .iter()
                .map(|&j| rational::ratio(1, net.in_degree(j) as i64))
                .sum()
        })
        .collect();
    PowerGauge::trusted(delta)
}

/// Gately measure: `s^a_D(i)` plus a share of `n^b_D` proportional to
/// `s^b_D(i)`.
pub fn gately_measure(net: &HierNet) -> PowerGauge {
    let part = net.partition();
    let joint_total = part.joint_predecessor_total();
    let delta = (0..net.n())
        .map(|i| {
            let sole = rational::from_usize(part.sole_successors[i]);
            if part.joint.is_empty() {
                sole
            } else {
                sole + rational::ratio(
                    (part.joint_successors[i] * part.joint.len()) as i64,
                    joint_total as i64,
                )
            }
        })
        .collect();
    PowerGauge::trusted(delta)
}

/// `a_i(D) = s^b_D(i) / sum_j s^b_D(j)`; zero for nodes with no successor
/// in `N^b_D`.
pub fn proportional_allocator(net: &HierNet) -> Result<Vec<Rational>> {
    let part = net.partition();
    if part.joint.is_empty() {
        return Err(Error::AllocatorUndefined);
    }
    let total = part.joint_predecessor_total() as i64;
    Ok(part
        .joint_successors
        .iter()
        .map(|&sb| rational::ratio(sb as i64, total))
        .collect())
}

/// Restricted egalitarian measure: control over `N^b_D` split equally
/// among the nodes that have at least one successor in `N^b_D`.
pub fn restricted_egalitarian(net: &HierNet) -> PowerGauge {
    let part = net.partition();
    let controllers = part.joint_successors.iter().filter(|&&sb| sb > 0).count();
    let delta = (0..net.n())
        .map(|i| {
            let sole = rational::from_usize(part.sole_successors[i]);
            if part.joint_successors[i] > 0 {
                sole + rational::ratio(part.joint.len() as i64, controllers as i64)
            } else {
                sole
            }
        })
        .collect();
    PowerGauge::trusted(delta)
}

/// `ρ(D) = n_D / (sum_i s_D(i)) * s_D`; all zeros on an edgeless network.
pub fn proportional_measure(net: &HierNet) -> PowerGauge {
    let edges = net.edge_count();
    let dominated = net.partition().dominated_count();
    let delta = (0..net.n())
        .map(|i| {
            if edges == 0 {
                Rational::zero()
            } else {
                rational::ratio((net.out_degree(i) * dominated) as i64, edges as i64)
            }
        })
        .collect();
    PowerGauge::trusted(delta)
}

/// Out-degree vector `s_D`. Not normalised to `n_D` in general.
pub fn degree_measure(net: &HierNet) -> Vec<Rational> {
    (0..net.n())
        .map(|i| rational::from_usize(net.out_degree(i)))
        .collect()
}

/// Named measures, for the CLI and the axiom suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Beta,
    Gately,
    Egalitarian,
    Proportional,
    Degree,
}

impl Measure {
    pub const ALL: [Measure; 5] = [
        Measure::Beta,
        Measure::Gately,
        Measure::Egalitarian,
        Measure::Proportional,
        Measure::Degree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Beta => "beta",
            Measure::Gately => "gately",
            Measure::Egalitarian => "egalitarian",
            Measure::Proportional => "proportional",
            Measure::Degree => "degree",
        }
    }

    pub fn evaluate(self, net: &HierNet) -> Vec<Rational> {
        match self {
            Measure::Beta => beta_measure(net).into_inner(),
            Measure::Gately => gately_measure(net).into_inner(),
            Measure::Egalitarian => restricted_egalitarian(net).into_inner(),
            Measure::Proportional => proportional_measure(net).into_inner(),
            Measure::Degree => degree_measure(net),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown measure {s:?}; expected one of beta, gately, egalitarian, proportional, degree"
                )
            })
    }
}

/// Outcome of a Core power-gauge test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreVerdict {
    Member,
    Violated(CoreViolation),
}

impl CoreVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, CoreVerdict::Member)
    }

    pub fn violation(&self) -> Option<&CoreViolation> {
        match self {
            CoreVerdict::Member => None,
            CoreVerdict::Violated(v) => Some(v),
        }
    }
}

/// Checks `sum_{j in H} delta_j >= σ_D(H)` for every coalition. `delta` is
/// validated as a power gauge first.
pub fn is_core_gauge(net: &HierNet, delta: &[Rational], limits: &Limits) -> Result<CoreVerdict> {
    let gauge = PowerGauge::new(delta.to_vec(), net)?;
    let sigma = strong_successor_game(net, limits)?;
    Ok(match sigma.core_violation(&gauge)? {
        None => CoreVerdict::Member,
        Some(v) => CoreVerdict::Violated(v),
    })
}

/// Distinct out-degree gauges of the simple subnetworks, in enumeration
/// order of first appearance. Their convex hull is the Core.
pub fn core_vertices(net: &HierNet, limits: &Limits) -> Result<Vec<PowerGauge>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in net.simple_subnetworks(limits)? {
        let gauge = PowerGauge::trusted(degree_measure(&t));
        if seen.insert(gauge.clone()) {
            out.push(gauge);
        }
    }
    Ok(out)
}

/// Exact test of whether `delta` lies in the convex hull of `vertices`.
pub fn in_core_hull(delta: &[Rational], vertices: &[PowerGauge]) -> bool {
    let points: Vec<Vec<Rational>> = vertices.iter().map(|v| v.to_vec()).collect();
    hull::in_convex_hull(delta, &points)
}

/// `sum_{i in H} delta_i` for a coalition.
pub fn coalition_total(delta: &[Rational], h: Coalition) -> Rational {
    rational::sum(h.members().map(|i| &delta[i]))
}
