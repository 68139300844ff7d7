use thiserror::Error;

use crate::coalition::Coalition;
use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node {node} lists itself as a successor")]
    SelfLoop { node: usize },

    #[error("node {node} has successor {successor}, outside the node range 0..{n}")]
    SuccessorOutOfRange {
        node: usize,
        successor: usize,
        n: usize,
    },

    #[error("node {node} lists successor {successor} more than once")]
    DuplicateEdge { node: usize, successor: usize },

    #[error("a network needs at least one node")]
    EmptyNetwork,

    #[error("{what}: required size {required} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    #[error("game is not regular: neither sum v(i) <= v(N) <= sum M_i nor the reverse chain holds (sum v(i) = {singletons}, v(N) = {grand}, sum M_i = {marginals})")]
    NotRegular {
        singletons: Box<Rational>,
        grand: Box<Rational>,
        marginals: Box<Rational>,
    },

    #[error("the empty coalition must have worth zero, got {0}")]
    NonzeroEmptyWorth(Box<Rational>),

    #[error("allocation is not efficient: sum x = {total}, v(N) = {grand}")]
    NotEfficient {
        total: Box<Rational>,
        grand: Box<Rational>,
    },

    #[error("vector length {got} does not match {expected} players")]
    LengthMismatch { got: usize, expected: usize },

    #[error("invalid power gauge: {reason}")]
    InvalidGauge { reason: String },

    #[error("proportional allocator undefined: no node has two or more predecessors")]
    AllocatorUndefined,

    #[error("edge probability {0} is not a ratio of u32 values in [0, 1]")]
    InvalidProbability(Box<Rational>),

    #[error("node {node} is out of range for {n} players")]
    PlayerOutOfRange { node: usize, n: usize },

    #[error("coalition {coalition} does not fit in {n} players")]
    CoalitionOutOfRange { coalition: Coalition, n: usize },
}
