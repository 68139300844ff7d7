//! Directed hierarchical networks: each node maps to the set of nodes it
//! controls. Node ids are dense `0..n`.

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HierNet {
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
}

impl HierNet {
    /// Builds a network from per-node successor lists. Lists may be in any
    /// order; self-loops, out-of-range ids and repeated successors are
    /// rejected.
    pub fn new(successors: Vec<Vec<usize>>) -> Result<Self> {
        let n = successors.len();
        if n == 0 {
            return Err(Error::EmptyNetwork);
        }
        let mut succ = successors;
        for (node, list) in succ.iter_mut().enumerate() {
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicateEdge {
                        node,
                        successor: w[0],
                    });
                }
            }
            for &successor in list.iter() {
                if successor == node {
                    return Err(Error::SelfLoop { node });
                }
                if successor >= n {
                    return Err(Error::SuccessorOutOfRange { node, successor, n });
                }
            }
        }
        let mut pred = vec![Vec::new(); n];
        for (i, list) in succ.iter().enumerate() {
            for &j in list {
                pred[j].push(i);
            }
        }
        Ok(HierNet { succ, pred })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut succ = vec![Vec::new(); n];
        for &(from, to) in edges {
            if from >= n {
                return Err(Error::PlayerOutOfRange { node: from, n });
            }
            succ[from].push(to);
        }
        HierNet::new(succ)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        HierNet::new(vec![Vec::new(); n])
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    /// `D(i)`, sorted ascending.
    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    /// `D^{-1}(j)`, sorted ascending.
    pub fn predecessors(&self, j: usize) -> &[usize] {
        &self.pred[j]
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.succ[i].len()
    }

    pub fn in_degree(&self, j: usize) -> usize {
        self.pred[j].len()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Edges as `(predecessor, successor)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().map(move |&j| (i, j)))
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.succ[from].binary_search(&to).is_ok()
    }

    /// Number of nodes with at least one successor.
    pub fn controller_count(&self) -> usize {
        self.succ.iter().filter(|s| !s.is_empty()).count()
    }

    pub fn successor_set(&self, i: usize) -> Coalition {
        self.succ[i].iter().copied().collect()
    }

    pub fn predecessor_set(&self, j: usize) -> Coalition {
        self.pred[j].iter().copied().collect()
    }

    fn assert_addressable(&self) {
        assert!(
            self.n() <= Coalition::MAX_WIDTH,
            "coalition operations need at most {} nodes, network has {}",
            Coalition::MAX_WIDTH,
            self.n()
        );
    }

    /// Weak successors `D(H)`: nodes with at least one predecessor in `h`.
    pub fn weak_successors(&self, h: Coalition) -> Coalition {
        self.assert_addressable();
        debug_assert!(h.is_subset_of(Coalition::full(self.n())));
        h.members()
            .fold(Coalition::EMPTY, |acc, i| acc | self.successor_set(i))
    }

    /// Strong successors `D*(H)`: nodes that have predecessors, all in `h`.
    pub fn strong_successors(&self, h: Coalition) -> Coalition {
        self.assert_addressable();
        debug_assert!(h.is_subset_of(Coalition::full(self.n())));
        (0..self.n())
            .filter(|&j| !self.pred[j].is_empty() && self.pred[j].iter().all(|&i| h.contains(i)))
            .collect()
    }

    pub fn partition(&self) -> NodePartition {
        NodePartition::of(self)
    }

    pub fn classify(&self) -> NetworkClass {
        let part = self.partition();
        NetworkClass {
            simple: part.joint.is_empty(),
            regular: all_equal(part.dominated().map(|j| part.predecessors[j])),
            weakly_regular: all_equal(part.joint.iter().map(|&j| part.predecessors[j])),
            principal: part.sole.is_empty(),
        }
    }

    /// `P_D`: keeps only edges into nodes with two or more predecessors.
    pub fn principal_restriction(&self) -> HierNet {
        let succ = self
            .succ
            .iter()
            .map(|list| {
                list.iter()
                    .copied()
                    .filter(|&j| self.pred[j].len() >= 2)
                    .collect()
            })
            .collect();
        HierNet::new(succ).expect("restriction of a valid network is valid")
    }

    /// `prod_{j in N_D} p_D(j)`, saturating at `u128::MAX`.
    pub fn simple_subnetwork_count(&self) -> u128 {
        self.pred
            .iter()
            .filter(|p| !p.is_empty())
            .fold(1u128, |acc, p| acc.saturating_mul(p.len() as u128))
    }

    /// Streams every simple subnetwork: each dominated node keeps exactly
    /// one of its predecessors. Choices vary lexicographically by node id,
    /// the highest dominated node changing fastest.
    pub fn simple_subnetworks(&self, limits: &Limits) -> Result<SimpleSubnetworks<'_>> {
        limits.check_subnetworks(self.simple_subnetwork_count())?;
        let dominated: Vec<usize> = (0..self.n())
            .filter(|&j| !self.pred[j].is_empty())
            .collect();
        let choice = vec![0; dominated.len()];
        Ok(SimpleSubnetworks {
            net: self,
            dominated,
            choice,
            done: false,
        })
    }
}

fn all_equal(mut values: impl Iterator<Item = usize>) -> bool {
    match values.next() {
        None => true,
        Some(first) => values.all(|v| v == first),
    }
}

/// The split of nodes into `N^o` (no predecessor), `N^a` (exactly one) and
/// `N^b` (two or more), together with the per-node counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodePartition {
    /// `N^o_D`
    pub free: Vec<usize>,
    /// `N^a_D`
    pub sole: Vec<usize>,
    /// `N^b_D`
    pub joint: Vec<usize>,
    /// `p_D(i)`
    pub predecessors: Vec<usize>,
    /// `s_D(i)`
    pub successors: Vec<usize>,
    /// `s^a_D(i)`: successors whose only predecessor is `i`.
    pub sole_successors: Vec<usize>,
    /// `s^b_D(i)`: successors shared with other predecessors.
    pub joint_successors: Vec<usize>,
}

impl NodePartition {
    fn of(net: &HierNet) -> Self {
        let n = net.n();
        let predecessors: Vec<usize> = (0..n).map(|j| net.in_degree(j)).collect();
        let successors: Vec<usize> = (0..n).map(|i| net.out_degree(i)).collect();
        let mut free = Vec::new();
        let mut sole = Vec::new();
        let mut joint = Vec::new();
        for (j, &p) in predecessors.iter().enumerate() {
            match p {
                0 => free.push(j),
                1 => sole.push(j),
                _ => joint.push(j),
            }
        }
        let sole_successors: Vec<usize> = (0..n)
            .map(|i| {
                net.successors(i)
                    .iter()
                    .filter(|&&j| predecessors[j] == 1)
                    .count()
            })
            .collect();
        let joint_successors = successors
            .iter()
            .zip(&sole_successors)
            .map(|(s, a)| s - a)
            .collect();
        NodePartition {
            free,
            sole,
            joint,
            predecessors,
            successors,
            sole_successors,
            joint_successors,
        }
    }

    pub fn n(&self) -> usize {
        self.predecessors.len()
    }

    /// `N_D`: nodes with at least one predecessor, ascending.
    pub fn dominated(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&j| self.predecessors[j] > 0)
    }

    /// `n_D`
    pub fn dominated_count(&self) -> usize {
        self.sole.len() + self.joint.len()
    }

    /// `sum_{j in N^b} p_D(j)`, equal to `sum_i s^b_D(i)`.
    pub fn joint_predecessor_total(&self) -> usize {
        self.joint.iter().map(|&j| self.predecessors[j]).sum()
    }

    pub fn is_joint(&self, j: usize) -> bool {
        self.predecessors[j] >= 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NetworkClass {
    pub simple: bool,
    pub regular: bool,
    pub weakly_regular: bool,
    pub principal: bool,
}

pub struct SimpleSubnetworks<'a> {
    net: &'a HierNet,
    dominated: Vec<usize>,
    choice: Vec<usize>,
    done: bool,
}

impl SimpleSubnetworks<'_> {
    fn current(&self) -> HierNet {
        let mut succ = vec![Vec::new(); self.net.n()];
        for (&j, &k) in self.dominated.iter().zip(&self.choice) {
            succ[self.net.predecessors(j)[k]].push(j);
        }
        HierNet::new(succ).expect("subnetwork of a valid network is valid")
    }
}

impl Iterator for SimpleSubnetworks<'_> {
    type Item = HierNet;

    fn next(&mut self) -> Option<HierNet> {
        if self.done {
            return None;
        }
        let out = self.current();
        // odometer step, last dominated node fastest
        let mut pos = self.dominated.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.choice[pos] += 1;
            if self.choice[pos] < self.net.in_degree(self.dominated[pos]) {
                break;
            }
            self.choice[pos] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rejects_invalid_successor_lists() {
        assert_eq!(
            HierNet::new(vec![vec![0], vec![]]),
            Err(Error::SelfLoop { node: 0 })
        );
        assert_eq!(
            HierNet::new(vec![vec![2], vec![]]),
            Err(Error::SuccessorOutOfRange {
                node: 0,
                successor: 2,
                n: 2
            })
        );
        assert_eq!(
            HierNet::new(vec![vec![1, 1], vec![]]),
            Err(Error::DuplicateEdge {
                node: 0,
                successor: 1
            })
        );
        assert_eq!(HierNet::new(vec![]), Err(Error::EmptyNetwork));
    }

    #[test]
    fn cycles_and_mutual_edges_are_allowed() {
        let net = HierNet::from_edges(3, &[(0, 1), (1, 0), (1, 2), (2, 0)]).unwrap();
        assert_eq!(net.predecessors(0), &[1, 2]);
        assert!(net.classify().weakly_regular);
    }

    #[test]
    fn weak_and_strong_successors_on_fixtures() {
        let fig1 = fixtures::core_counterexample();
        let h: Coalition = [0, 1].into_iter().collect();
        assert_eq!(fig1.weak_successors(h), Coalition::singleton(5));
        assert_eq!(fig1.strong_successors(h), Coalition::singleton(5));
        let h34: Coalition = [2, 3].into_iter().collect();
        assert_eq!(fig1.strong_successors(h34), Coalition::EMPTY);
        assert_eq!(fig1.weak_successors(Coalition::EMPTY), Coalition::EMPTY);

        let fig2 = fixtures::five_node_mixed();
        let h23: Coalition = [1, 2].into_iter().collect();
        assert_eq!(fig2.weak_successors(h23), [3, 4].into_iter().collect());
    }

    #[test]
    fn grand_coalition_reaches_every_dominated_node() {
        for net in fixtures::all() {
            let full = Coalition::full(net.n());
            let dominated: Coalition = net.partition().dominated().collect();
            assert_eq!(net.weak_successors(full), dominated);
            assert_eq!(net.strong_successors(full), dominated);
        }
    }

    #[test]
    fn partition_of_fixtures() {
        let p1 = fixtures::core_counterexample().partition();
        assert_eq!(p1.free, vec![0, 1, 2, 3, 4]);
        assert!(p1.sole.is_empty());
        assert_eq!(p1.joint, vec![5, 6, 7]);

        let p2 = fixtures::five_node_mixed().partition();
        assert_eq!(p2.free, vec![0]);
        assert_eq!(p2.sole, vec![1, 2]);
        assert_eq!(p2.joint, vec![3, 4]);
        assert_eq!(p2.sole_successors, vec![2, 0, 0, 0, 0]);
        assert_eq!(p2.joint_successors, vec![2, 2, 1, 0, 0]);

        let p0 = HierNet::edgeless(4).unwrap().partition();
        assert_eq!(p0.free, vec![0, 1, 2, 3]);
        assert_eq!(p0.dominated_count(), 0);
    }

    #[test]
    fn classification_of_fixtures() {
        let c3 = fixtures::paired_controllers().classify();
        assert_eq!(
            c3,
            NetworkClass {
                simple: false,
                regular: true,
                weakly_regular: true,
                principal: true
            }
        );
        let c2 = fixtures::five_node_mixed().classify();
        assert!(!c2.weakly_regular);
        assert!(!c2.principal);
        let c0 = HierNet::edgeless(3).unwrap().classify();
        assert!(c0.simple && c0.regular && c0.weakly_regular && c0.principal);
    }

    #[test]
    fn principal_restriction_drops_edges_into_sole_nodes() {
        let fig2 = fixtures::five_node_mixed();
        let p = fig2.principal_restriction();
        assert_eq!(
            p.edges().collect::<Vec<_>>(),
            vec![(0, 3), (0, 4), (1, 3), (1, 4), (2, 4)]
        );
        assert!(p.classify().principal);
        assert_eq!(p.principal_restriction(), p);
        let fig1 = fixtures::core_counterexample();
        assert_eq!(fig1.principal_restriction(), fig1);
        let e = HierNet::edgeless(2).unwrap();
        assert_eq!(e.principal_restriction(), e);
    }

    #[test]
    fn simple_subnetwork_enumeration() {
        let limits = Limits::DEFAULT;
        let fig1 = fixtures::core_counterexample();
        assert_eq!(fig1.simple_subnetwork_count(), 18);
        let subs: Vec<_> = fig1.simple_subnetworks(&limits).unwrap().collect();
        assert_eq!(subs.len(), 18);
        for t in &subs {
            assert!(t.classify().simple);
            assert!(t.edges().all(|(i, j)| fig1.has_edge(i, j)));
            assert_eq!(t.partition().dominated_count(), 3);
        }
        // first choice is the lowest predecessor everywhere
        assert_eq!(
            subs[0].edges().collect::<Vec<_>>(),
            vec![(0, 5), (2, 6), (2, 7)]
        );

        let chain = HierNet::from_edges(2, &[(0, 1)]).unwrap();
        let only: Vec<_> = chain.simple_subnetworks(&limits).unwrap().collect();
        assert_eq!(only, vec![chain]);

        let e = HierNet::edgeless(3).unwrap();
        let only: Vec<_> = e.simple_subnetworks(&limits).unwrap().collect();
        assert_eq!(only, vec![e]);
    }

    #[test]
    fn subnetwork_cap_is_enforced() {
        let fig1 = fixtures::core_counterexample();
        let tight = Limits {
            max_subnetworks: 17,
            ..Limits::DEFAULT
        };
        assert!(matches!(
            fig1.simple_subnetworks(&tight),
            Err(Error::CapExceeded {
                required: 18,
                cap: 17,
                ..
            })
        ));
    }
}
