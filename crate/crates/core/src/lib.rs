//! Power measures for directed hierarchical networks, computed exactly.
//!
//! A network maps every node to the set of nodes it controls. Its control
//! structure is represented by two transferable-utility games, the
//! successor game `s_D` (how many nodes a coalition touches) and the strong
//! successor game `σ_D` (how many nodes it controls completely). The beta
//! measure is the Shapley value of both, the Gately measure their Gately
//! value. All arithmetic is exact over big rationals.
//!
//! ```
//! use gately_core::{fixtures, measures, rational::ratio};
//!
//! let net = fixtures::five_node_mixed();
//! let xi = measures::gately_measure(&net);
//! assert_eq!(xi[0], ratio(14, 5));
//! ```

pub mod axioms;
pub mod coalition;
pub mod error;
pub mod fixtures;
pub mod game;
pub mod hull;
pub mod limits;
pub mod measures;
pub mod network;
pub mod oracle;
pub mod random;
pub mod rational;
pub mod verify;

pub use coalition::Coalition;
pub use error::{Error, Result};
pub use game::{Imputation, TuGame};
pub use limits::Limits;
pub use measures::{Measure, PowerGauge};
pub use network::{HierNet, NetworkClass, NodePartition};
pub use rational::Rational;
