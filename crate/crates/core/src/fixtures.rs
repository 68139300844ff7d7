//! Small reference networks used throughout the tests and the CLI fixtures.
//! Ids are zero-based; the shipped fixture files label node `i` as `i + 1`.

use crate::network::HierNet;

fn build(n: usize, one_based: &[(usize, usize)]) -> HierNet {
    let edges: Vec<_> = one_based.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    HierNet::from_edges(n, &edges).expect("fixture is valid")
}

/// Eight nodes: 1,2 jointly control 6; 3,4,5 jointly control 7 and 8.
/// The Gately measure of this network lies outside the Core.
pub fn core_counterexample() -> HierNet {
    build(
        8,
        &[
            (1, 6),
            (2, 6),
            (3, 7),
            (3, 8),
            (4, 7),
            (4, 8),
            (5, 7),
            (5, 8),
        ],
    )
}

/// Five nodes with three controllers; not weakly regular (`p(4)=2`, `p(5)=3`).
pub fn five_node_mixed() -> HierNet {
    build(5, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)])
}

/// Eight nodes: 1,2 jointly control 5; 3,4 jointly control 6, 7 and 8.
pub fn paired_controllers() -> HierNet {
    build(
        8,
        &[
            (1, 5),
            (2, 5),
            (3, 6),
            (3, 7),
            (3, 8),
            (4, 6),
            (4, 7),
            (4, 8),
        ],
    )
}

pub fn all() -> Vec<HierNet> {
    vec![
        core_counterexample(),
        five_node_mixed(),
        paired_controllers(),
    ]
}
