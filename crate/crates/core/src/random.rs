//! Seeded random networks.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`).
//! Ordered pairs `(i, j)`, `i != j`, are visited row by row (`i` outer, `j`
//! inner, both ascending) and each is kept with probability `num/den` via
//! `Rng::gen_ratio`. The same seed and parameters always give the same
//! network.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::network::HierNet;
use crate::rational::{self, Rational};

/// A probability `num/den` with `u32` parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeProbability {
    num: u32,
    den: u32,
}

impl EdgeProbability {
    pub fn new(p: &Rational) -> Result<Self> {
        let invalid = || Error::InvalidProbability(Box::new(p.clone()));
        if p.is_negative() || p > &Rational::one() {
            return Err(invalid());
        }
        let num = p.numer().to_u32().ok_or_else(invalid)?;
        let den = p.denom().to_u32().ok_or_else(invalid)?;
        Ok(EdgeProbability { num, den })
    }

    pub fn as_rational(self) -> Rational {
        Rational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

fn with_rng(n: usize, p: EdgeProbability, rng: &mut ChaCha8Rng) -> HierNet {
    let succ = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && rng.gen_ratio(p.num, p.den))
                .collect()
        })
        .collect();
    HierNet::new(succ).expect("generated network is valid")
}

/// One network on `n >= 1` nodes.
pub fn generate_random(n: usize, edge_prob: &Rational, seed: u64) -> Result<HierNet> {
    if n == 0 {
        return Err(Error::EmptyNetwork);
    }
    let p = EdgeProbability::new(edge_prob)?;
    Ok(with_rng(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// `count` networks from one stream seeded with `seed`, all on `n` nodes.
pub fn random_networks(
    count: usize,
    n: usize,
    edge_prob: &Rational,
    seed: u64,
) -> Result<Vec<HierNet>> {
    if n == 0 {
        return Err(Error::EmptyNetwork);
    }
    let p = EdgeProbability::new(edge_prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(|_| with_rng(n, p, &mut rng)).collect())
}

/// The standard mixed suite: network `k` has `3 + k % 5` nodes and edge
/// probability `1/4`, `1/2` or `3/4` by `(k / 5) % 3`.
pub fn mixed_suite(count: usize, seed: u64) -> Vec<HierNet> {
    let probs = [
        rational::ratio(1, 4),
        rational::ratio(1, 2),
        rational::ratio(3, 4),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let p = EdgeProbability::new(&probs[(k / 5) % 3]).expect("valid probability");
            with_rng(3 + k % 5, p, &mut rng)
        })
        .collect()
}
