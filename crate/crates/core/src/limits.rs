use crate::error::{Error, Result};

/// Caps on exponential enumeration. Closed-form measures ignore these.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest player count for which a `2^n` worth table is built.
    pub max_players: usize,
    /// Largest number of simple subnetworks that may be enumerated.
    pub max_subnetworks: u128,
    /// Largest player count for the `n!` permutation Shapley oracle.
    pub max_permutation_players: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_players: 24,
        max_subnetworks: 1_000_000,
        max_permutation_players: 8,
    };

    pub fn check_players(&self, n: usize) -> Result<()> {
        if n > self.max_players {
            return Err(Error::CapExceeded {
                what: "coalition enumeration (players)",
                required: n as u128,
                cap: self.max_players as u128,
            });
        }
        Ok(())
    }

    pub fn check_subnetworks(&self, count: u128) -> Result<()> {
        if count > self.max_subnetworks {
            return Err(Error::CapExceeded {
                what: "too many simple subnetworks",
                required: count,
                cap: self.max_subnetworks,
            });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
