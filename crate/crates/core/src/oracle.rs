//! Reference Shapley value by averaging marginal contributions over every
//! player order. Shares nothing with the dividend route in `game`, so the
//! two can check each other.

use num_traits::Zero;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{Imputation, TuGame};
use crate::limits::Limits;
use crate::rational::Rational;

pub fn shapley_by_permutations(v: &TuGame, limits: &Limits) -> Result<Imputation> {
    let n = v.n();
    if n > limits.max_permutation_players {
        return Err(Error::CapExceeded {
            what: "permutation oracle (players)",
            required: n as u128,
            cap: limits.max_permutation_players as u128,
        });
    }
    let mut totals = vec![Rational::zero(); n];
    let mut order: Vec<usize> = (0..n).collect();
    let mut count: u64 = 0;
    loop {
        let mut before = Coalition::EMPTY;
        for &i in &order {
            let after = before.with(i);
            totals[i] += v.worth(after) - v.worth(before);
            before = after;
        }
        count += 1;
        if !next_permutation(&mut order) {
            break;
        }
    }
    let count = Rational::from_integer(count.into());
    Ok(totals
        .into_iter()
        .map(|t| t / &count)
        .collect::<Vec<_>>()
        .into())
}

/// Advances to the next lexicographic permutation; false after the last.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn visits_every_permutation() {
        let mut xs = vec![0, 1, 2, 3];
        let mut seen = 1;
        while next_permutation(&mut xs) {
            seen += 1;
        }
        assert_eq!(seen, 24);
        assert_eq!(xs, vec![3, 2, 1, 0]);
    }

    #[test]
    fn glove_game() {
        // player 0 holds a left glove, players 1 and 2 right gloves
        let v = TuGame::from_fn(3, &Limits::DEFAULT, |c| {
            int((c.contains(0) && (c.contains(1) || c.contains(2))) as i64)
        })
        .unwrap();
        let phi = shapley_by_permutations(&v, &Limits::DEFAULT).unwrap();
        assert_eq!(&*phi, &[ratio(2, 3), ratio(1, 6), ratio(1, 6)]);
    }

    #[test]
    fn single_player() {
        let v = TuGame::from_table(1, vec![int(0), int(5)]).unwrap();
        assert_eq!(
            &*shapley_by_permutations(&v, &Limits::DEFAULT).unwrap(),
            &[int(5)]
        );
    }
}
