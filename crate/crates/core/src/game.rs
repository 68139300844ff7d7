//! Transferable-utility games with exact worths on a dense `2^n` table, the
//! successor representations of a network, and the solution concepts used
//! on them: dual, convexity, Harsanyi dividends, Shapley value, Gately
//! value, Core membership and propensity to disrupt.

use std::fmt;
use std::ops::Deref;

use num_traits::{One, Signed, Zero};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::network::HierNet;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuGame {
    n: usize,
    worth: Vec<Rational>,
}

impl TuGame {
    /// Tabulates `f` over all coalitions of `0..n`. `f(∅)` must be zero.
    pub fn from_fn(
        n: usize,
        limits: &Limits,
        mut f: impl FnMut(Coalition) -> Rational,
    ) -> Result<Self> {
        limits.check_players(n)?;
        let worth: Vec<Rational> = Coalition::all(n).map(&mut f).collect();
        TuGame::from_table(n, worth)
    }

    pub fn from_table(n: usize, worth: Vec<Rational>) -> Result<Self> {
        if n >= Coalition::MAX_WIDTH || worth.len() != 1usize << n {
            return Err(Error::LengthMismatch {
                got: worth.len(),
                expected: n,
            });
        }
        if !worth[0].is_zero() {
            return Err(Error::NonzeroEmptyWorth(Box::new(worth[0].clone())));
        }
        Ok(TuGame { n, worth })
    }

    pub fn zero(n: usize, limits: &Limits) -> Result<Self> {
        TuGame::from_fn(n, limits, |_| Rational::zero())
    }

    /// `v(H) = sum_{i in H} weights[i]`.
    pub fn additive(weights: &[Rational], limits: &Limits) -> Result<Self> {
        TuGame::from_fn(weights.len(), limits, |c| {
            rational::sum(c.members().map(|i| &weights[i]))
        })
    }

    /// `u_H(T) = 1` iff `H ⊆ T`. `h` must be non-empty.
    pub fn unanimity(n: usize, h: Coalition, limits: &Limits) -> Result<Self> {
        assert!(!h.is_empty(), "unanimity game of the empty coalition");
        if h.width() > n {
            return Err(Error::CoalitionOutOfRange { coalition: h, n });
        }
        TuGame::from_fn(n, limits, |t| {
            if h.is_subset_of(t) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn worth(&self, c: Coalition) -> &Rational {
        &self.worth[c.index()]
    }

    pub fn table(&self) -> &[Rational] {
        &self.worth
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::full(self.n)
    }

    /// `v(N)`
    pub fn grand_worth(&self) -> &Rational {
        self.worth(self.grand_coalition())
    }

    /// `v({i})`
    pub fn singleton_worth(&self, i: usize) -> &Rational {
        self.worth(Coalition::singleton(i))
    }

    /// Dual game `v*(H) = v(N) - v(N \ H)`.
    pub fn dual(&self) -> TuGame {
        let grand = self.grand_worth();
        let worth = Coalition::all(self.n)
            .map(|h| grand - self.worth(h.complement(self.n)))
            .collect();
        TuGame { n: self.n, worth }
    }

    /// Pointwise sum of two games on the same player set.
    pub fn sum(&self, other: &TuGame) -> Result<TuGame> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                got: other.n,
                expected: self.n,
            });
        }
        let worth = self
            .worth
            .iter()
            .zip(&other.worth)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TuGame { n: self.n, worth })
    }

    pub fn is_additive(&self) -> bool {
        Coalition::all(self.n)
            .all(|h| *self.worth(h) == rational::sum(h.members().map(|i| self.singleton_worth(i))))
    }

    /// Supermodularity over every pair of coalitions.
    pub fn is_convex(&self) -> bool {
        self.first_pair_violating(|lhs, rhs| lhs <= rhs).is_none()
    }

    /// Submodularity over every pair of coalitions.
    pub fn is_concave(&self) -> bool {
        self.first_pair_violating(|lhs, rhs| lhs >= rhs).is_none()
    }

    /// First `(H, K)` where `holds(v(H) + v(K), v(H∪K) + v(H∩K))` is false.
    fn first_pair_violating(
        &self,
        holds: impl Fn(&Rational, &Rational) -> bool,
    ) -> Option<(Coalition, Coalition)> {
        let size = self.worth.len() as u64;
        for h in 0..size {
            for k in h + 1..size {
                let (hc, kc) = (Coalition::from_bits(h), Coalition::from_bits(k));
                // comparable pairs satisfy the inequality with equality
                if hc.is_subset_of(kc) {
                    continue;
                }
                let lhs = self.worth(hc) + self.worth(kc);
                let rhs = self.worth(hc | kc) + self.worth(hc & kc);
                if !holds(&lhs, &rhs) {
                    return Some((hc, kc));
                }
            }
        }
        None
    }

    /// Möbius inverse of the worth function.
    pub fn harsanyi_dividends(&self) -> Dividends {
        let mut values = self.worth.clone();
        for bit in 0..self.n {
            let b = 1usize << bit;
            for mask in 0..values.len() {
                if mask & b != 0 {
                    let lower = values[mask ^ b].clone();
                    values[mask] -= lower;
                }
            }
        }
        Dividends { n: self.n, values }
    }

    /// Shapley value, distributing every dividend equally over its coalition.
    pub fn shapley(&self) -> Imputation {
        let dividends = self.harsanyi_dividends();
        let mut phi = vec![Rational::zero(); self.n];
        for (h, d) in dividends.nonzero() {
            let share = d / rational::from_usize(h.len());
            for i in h.members() {
                phi[i] += &share;
            }
        }
        Imputation(phi)
    }

    /// `M_i(v) = v(N) - v(N - i)`. Panics if `i` is not a player.
    pub fn marginal(&self, i: usize) -> Rational {
        assert!(i < self.n, "player {i} out of range for {} players", self.n);
        let grand = self.grand_coalition();
        self.worth(grand) - self.worth(grand.without(i))
    }

    /// Which inequality chain makes the Gately value applicable.
    pub fn gately_orientation(&self) -> Result<Orientation> {
        let singletons = rational::sum((0..self.n).map(|i| self.singleton_worth(i)));
        let marginals: Rational = (0..self.n).map(|i| self.marginal(i)).sum();
        let grand = self.grand_worth();
        if &singletons <= grand && grand <= &marginals {
            Ok(Orientation::Surplus)
        } else if &singletons >= grand && grand >= &marginals {
            Ok(Orientation::Cost)
        } else {
            Err(Error::NotRegular {
                singletons: Box::new(singletons),
                grand: Box::new(grand.clone()),
                marginals: Box::new(marginals),
            })
        }
    }

    /// Gately value. The same closed form serves both orientations: the cost
    /// form is the surplus form with numerator and denominator negated.
    /// A zero denominator yields the singleton worths.
    pub fn gately(&self) -> Result<Imputation> {
        self.gately_orientation()?;
        let singles: Vec<Rational> = (0..self.n)
            .map(|i| self.singleton_worth(i).clone())
            .collect();
        let excess: Vec<Rational> = (0..self.n)
            .map(|i| self.marginal(i) - &singles[i])
            .collect();
        let total_excess = rational::sum(&excess);
        if total_excess.is_zero() {
            return Ok(Imputation(singles));
        }
        let surplus = self.grand_worth() - rational::sum(&singles);
        let x = singles
            .iter()
            .zip(&excess)
            .map(|(s, e)| s + e * &surplus / &total_excess)
            .collect();
        Ok(Imputation(x))
    }

    fn check_efficient(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                got: x.len(),
                expected: self.n,
            });
        }
        let total = rational::sum(x);
        if &total != self.grand_worth() {
            return Err(Error::NotEfficient {
                total: Box::new(total),
                grand: Box::new(self.grand_worth().clone()),
            });
        }
        Ok(())
    }

    /// The most deficient coalition `H` with `sum_{i in H} x_i < v(H)`, ties
    /// broken by size and then by id order; `None` when `x` is in the Core.
    pub fn core_violation(&self, x: &[Rational]) -> Result<Option<CoreViolation>> {
        self.check_efficient(x)?;
        let mut worst: Option<CoreViolation> = None;
        for h in Coalition::all(self.n) {
            let allocated = rational::sum(h.members().map(|i| &x[i]));
            let worth = self.worth(h);
            if &allocated >= worth {
                continue;
            }
            let candidate = CoreViolation {
                coalition: h,
                allocated,
                worth: worth.clone(),
            };
            let better = match &worst {
                None => true,
                Some(w) => {
                    let (cd, wd) = (candidate.deficit(), w.deficit());
                    cd > wd || (cd == wd && h.len() < w.coalition.len())
                }
            };
            if better {
                worst = Some(candidate);
            }
        }
        Ok(worst)
    }

    pub fn in_core(&self, x: &[Rational]) -> Result<bool> {
        Ok(self.core_violation(x)?.is_none())
    }

    /// `(M_i - v({i})) / (x_i - v({i}))`. The cost-orientation form negates
    /// numerator and denominator, so the ratio is orientation independent.
    pub fn propensity_to_disrupt(&self, x: &[Rational], i: usize) -> Propensity {
        let single = self.singleton_worth(i);
        let numer = self.marginal(i) - single;
        let denom = &x[i] - single;
        match (numer.is_zero(), denom.is_zero()) {
            (true, true) => Propensity::Indeterminate,
            (false, true) => Propensity::Unbounded,
            _ => Propensity::Finite(numer / denom),
        }
    }
}

/// Successor representation `s_D(H) = |D(H)|`.
pub fn successor_game(net: &HierNet, limits: &Limits) -> Result<TuGame> {
    limits.check_players(net.n())?;
    TuGame::from_fn(net.n(), limits, |h| {
        rational::from_usize(net.weak_successors(h).len())
    })
}

/// Strong successor representation `σ_D(H) = |D*(H)|`.
pub fn strong_successor_game(net: &HierNet, limits: &Limits) -> Result<TuGame> {
    limits.check_players(net.n())?;
    TuGame::from_fn(net.n(), limits, |h| {
        rational::from_usize(net.strong_successors(h).len())
    })
}

/// `(s^a_D, s^b_D)`: weak successors counted inside `N^a_D` and `N^b_D`.
pub fn partial_games(net: &HierNet, limits: &Limits) -> Result<(TuGame, TuGame)> {
    limits.check_players(net.n())?;
    let part = net.partition();
    let sole: Coalition = part.sole.iter().copied().collect();
    let joint: Coalition = part.joint.iter().copied().collect();
    let count_in = |within: Coalition| {
        move |h: Coalition| rational::from_usize((net.weak_successors(h) & within).len())
    };
    Ok((
        TuGame::from_fn(net.n(), limits, count_in(sole))?,
        TuGame::from_fn(net.n(), limits, count_in(joint))?,
    ))
}

/// Harsanyi dividends indexed by coalition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dividends {
    n: usize,
    values: Vec<Rational>,
}

impl Dividends {
    pub fn get(&self, c: Coalition) -> &Rational {
        &self.values[c.index()]
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (Coalition, &Rational)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(k, d)| (Coalition::from_bits(k as u64), d))
    }

    /// `sum_H Δ(H) u_H(t)`.
    pub fn reconstruct(&self, t: Coalition) -> Rational {
        rational::sum(t.subsets().map(|h| self.get(h)))
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// A payoff vector over the players of a game.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Imputation(Vec<Rational>);

impl Imputation {
    pub fn new(values: Vec<Rational>) -> Self {
        Imputation(values)
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }
}

impl Deref for Imputation {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl From<Vec<Rational>> for Imputation {
    fn from(values: Vec<Rational>) -> Self {
        Imputation(values)
    }
}

impl fmt::Display for Imputation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            rational::format_vector(&self.0).replace(' ', ", ")
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `sum v(i) <= v(N) <= sum M_i`
    Surplus,
    /// `sum v(i) >= v(N) >= sum M_i`
    Cost,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreViolation {
    pub coalition: Coalition,
    pub allocated: Rational,
    pub worth: Rational,
}

impl CoreViolation {
    pub fn deficit(&self) -> Rational {
        &self.worth - &self.allocated
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Propensity {
    Finite(Rational),
    /// Non-zero numerator over a zero denominator.
    Unbounded,
    /// `0/0`: the player neither gains nor concedes anything.
    Indeterminate,
}

impl Propensity {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Propensity::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        match self {
            Propensity::Finite(r) => !r.is_negative(),
            _ => true,
        }
    }
}

impl fmt::Display for Propensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Propensity::Finite(r) => write!(f, "{r}"),
            Propensity::Unbounded => f.write_str("+inf"),
            Propensity::Indeterminate => f.write_str("0/0"),
        }
    }
}
