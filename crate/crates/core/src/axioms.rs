//! Suite-based checks of the three properties that characterise the Gately
//! measure: normalisation, normality and restricted proportionality.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::network::HierNet;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// `sum_i m_i(D) = n_D`
    Normalisation,
    /// `m(D) = s^a_D + m(P_D)`
    Normality,
    /// On principal networks, `m(D) = λ s_D` for some `λ > 0`.
    RestrictedProportionality,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Normalisation => "normalisation",
            Axiom::Normality => "normality",
            Axiom::RestrictedProportionality => "restricted proportionality",
        })
    }
}

/// First network on which an axiom failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomWitness {
    pub axiom: Axiom,
    /// Index into the suite that was checked.
    pub net_index: usize,
    /// The network the failing check ran on. For restricted
    /// proportionality this may be the principal restriction of the suite
    /// network.
    pub network: HierNet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub normalisation: bool,
    pub normality: bool,
    pub restricted_proportionality: bool,
    /// One entry per failed axiom, in axiom order.
    pub witnesses: Vec<AxiomWitness>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.normalisation && self.normality && self.restricted_proportionality
    }

    pub fn holds(&self, axiom: Axiom) -> bool {
        match axiom {
            Axiom::Normalisation => self.normalisation,
            Axiom::Normality => self.normality,
            Axiom::RestrictedProportionality => self.restricted_proportionality,
        }
    }

    pub fn witness(&self, axiom: Axiom) -> Option<&AxiomWitness> {
        self.witnesses.iter().find(|w| w.axiom == axiom)
    }
}

pub fn satisfies_normalisation(value: &[Rational], net: &HierNet) -> bool {
    rational::sum(value) == rational::from_usize(net.partition().dominated_count())
}

/// `m(D) == s^a_D + m(P_D)`.
pub fn satisfies_normality(measure: impl Fn(&HierNet) -> Vec<Rational>, net: &HierNet) -> bool {
    let part = net.partition();
    let restricted = measure(&net.principal_restriction());
    let expected: Vec<Rational> = part
        .sole_successors
        .iter()
        .zip(restricted)
        .map(|(&sa, m)| rational::from_usize(sa) + m)
        .collect();
    measure(net) == expected
}

/// `value == λ s_D` for some `λ > 0`. When `s_D` is zero any `λ` works, so
/// the value must itself be zero.
pub fn is_positive_multiple_of_degrees(value: &[Rational], net: &HierNet) -> bool {
    let degrees: Vec<Rational> = (0..net.n())
        .map(|i| rational::from_usize(net.out_degree(i)))
        .collect();
    let Some(pivot) = degrees.iter().position(|d| !d.is_zero()) else {
        return value.iter().all(Zero::is_zero);
    };
    let lambda = &value[pivot] / &degrees[pivot];
    lambda.is_positive() && value.iter().zip(&degrees).all(|(m, d)| *m == &lambda * d)
}

/// Runs all three checks over `nets`. Restricted proportionality is checked
/// on every principal network in the suite and on the principal
/// restriction of every other one.
pub fn check_axioms(measure: impl Fn(&HierNet) -> Vec<Rational>, nets: &[HierNet]) -> AxiomReport {
    let mut first: [Option<AxiomWitness>; 3] = [None, None, None];
    let mut record = |axiom: Axiom, net_index: usize, network: &HierNet| {
        let slot = &mut first[axiom as usize];
        if slot.is_none() {
            *slot = Some(AxiomWitness {
                axiom,
                net_index,
                network: network.clone(),
            });
        }
    };
    for (k, net) in nets.iter().enumerate() {
        let value = measure(net);
        if !satisfies_normalisation(&value, net) {
            record(Axiom::Normalisation, k, net);
        }
        if !satisfies_normality(&measure, net) {
            record(Axiom::Normality, k, net);
        }
        let principal = if net.classify().principal {
            net.clone()
        } else {
            net.principal_restriction()
        };
        let principal_value = measure(&principal);
        if !is_positive_multiple_of_degrees(&principal_value, &principal) {
            record(Axiom::RestrictedProportionality, k, &principal);
        }
    }
    let [a, b, c] = first;
    AxiomReport {
        normalisation: a.is_none(),
        normality: b.is_none(),
        restricted_proportionality: c.is_none(),
        witnesses: [a, b, c].into_iter().flatten().collect(),
    }
}
