//! Exact convex-hull membership: is there `λ ≥ 0`, `Σλ = 1` with
//! `Σ λ_k v_k = x`? Decided by phase one of a dense rational simplex with
//! Bland's rule, so the answer never depends on floating-point tolerance.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Returns convex weights expressing `point` over `vertices`, or `None` if
/// the point lies outside their hull. All vertices must share the point's
/// dimension.
pub fn convex_combination(point: &[Rational], vertices: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    if vertices.is_empty() {
        return None;
    }
    let dim = point.len();
    assert!(
        vertices.iter().all(|v| v.len() == dim),
        "vertex dimension mismatch"
    );
    // rows: one per coordinate plus the weight-sum row
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(dim + 1);
    let mut rhs: Vec<Rational> = Vec::with_capacity(dim + 1);
    for d in 0..dim {
        rows.push(vertices.iter().map(|v| v[d].clone()).collect());
        rhs.push(point[d].clone());
    }
    rows.push(vec![Rational::one(); vertices.len()]);
    rhs.push(Rational::one());
    feasible_nonnegative(rows, rhs)
}

pub fn in_convex_hull(point: &[Rational], vertices: &[Vec<Rational>]) -> bool {
    convex_combination(point, vertices).is_some()
}

const DEGENERATE_LIMIT: usize = 50;

/// Finds `y ≥ 0` with `A y = b`, or `None` if none exists.
pub fn feasible_nonnegative(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Rational>,
) -> Option<Vec<Rational>> {
    let m = a.len();
    let k = a.first().map_or(0, Vec::len);
    for (row, rhs) in a.iter_mut().zip(b.iter_mut()) {
        if rhs.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
            *rhs = -&*rhs;
        }
    }
    // tableau columns: k structural, m artificial, then rhs
    let width = k + m + 1;
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|r| {
            let mut row = Vec::with_capacity(width);
            row.extend(a[r].iter().cloned());
            row.extend((0..m).map(|c| {
                if c == r {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (k..k + m).collect();
    // reduced costs of minimising the artificial sum
    let mut cost: Vec<Rational> = vec![Rational::zero(); width];
    for row in &t {
        for c in 0..k {
            cost[c] -= &row[c];
        }
        cost[width - 1] -= &row[width - 1];
    }

    // Dantzig pricing, falling back to Bland's rule for good once a run of
    // degenerate pivots suggests cycling
    let mut degenerate_run = 0;
    let mut bland = false;
    loop {
        let candidates = (0..k + m).filter(|&c| cost[c].is_negative());
        let enter = if bland {
            candidates.min()
        } else {
            candidates.min_by(|&x, &y| cost[x].cmp(&cost[y]).then(x.cmp(&y)))
        };
        let Some(enter) = enter else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..m {
            if t[r][enter].is_positive() {
                let ratio = &t[r][width - 1] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so a pivot row always exists
        let (pr, step) = leave.expect("phase-one objective is bounded");
        if step.is_zero() {
            degenerate_run += 1;
            bland |= degenerate_run > DEGENERATE_LIMIT;
        } else {
            degenerate_run = 0;
        }
        pivot(&mut t, &mut cost, pr, enter);
        basis[pr] = enter;
    }

    // optimum of the artificial sum is -cost[rhs]
    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut y = vec![Rational::zero(); k];
    for (r, &col) in basis.iter().enumerate() {
        if col < k {
            y[col] = t[r][width - 1].clone();
        }
    }
    Some(y)
}

fn pivot(t: &mut [Vec<Rational>], cost: &mut [Rational], pr: usize, pc: usize) {
    let p = t[pr][pc].clone();
    for x in t[pr].iter_mut() {
        *x /= &p;
    }
    let pivot_row = t[pr].clone();
    let support: Vec<usize> = (0..pivot_row.len())
        .filter(|&c| !pivot_row[c].is_zero())
        .collect();
    let eliminate = |row: &mut [Rational]| {
        let f = row[pc].clone();
        for &c in &support {
            row[c] -= &f * &pivot_row[c];
        }
    };
    for (r, row) in t.iter_mut().enumerate() {
        if r != pr && !row[pc].is_zero() {
            eliminate(row);
        }
    }
    if !cost[pc].is_zero() {
        eliminate(cost);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn triangle_membership() {
        let tri = vec![v(&[0, 0]), v(&[4, 0]), v(&[0, 4])];
        assert!(in_convex_hull(&v(&[1, 1]), &tri));
        assert!(in_convex_hull(&v(&[4, 0]), &tri));
        assert!(in_convex_hull(&[int(2), int(2)], &tri));
        assert!(!in_convex_hull(&[int(2), ratio(9, 4)], &tri));
        assert!(!in_convex_hull(&v(&[-1, 0]), &tri));
    }

    #[test]
    fn weights_reproduce_the_point() {
        let square = vec![v(&[0, 0]), v(&[2, 0]), v(&[0, 2]), v(&[2, 2])];
        let point = vec![ratio(1, 2), ratio(3, 2)];
        let w = convex_combination(&point, &square).unwrap();
        assert!(w.iter().all(|x| !x.is_negative()));
        assert_eq!(w.iter().cloned().sum::<Rational>(), int(1));
        for d in 0..2 {
            let coord: Rational = w.iter().zip(&square).map(|(l, s)| l * &s[d]).sum();
            assert_eq!(coord, point[d]);
        }
    }

    #[test]
    fn degenerate_inputs() {
        assert!(!in_convex_hull(&v(&[0]), &[]));
        assert!(in_convex_hull(&v(&[3, 1]), &[v(&[3, 1])]));
        assert!(!in_convex_hull(&v(&[3, 2]), &[v(&[3, 1])]));
        // repeated vertices and collinear points
        let seg = vec![v(&[0, 0]), v(&[1, 1]), v(&[1, 1]), v(&[2, 2])];
        assert!(in_convex_hull(&[ratio(3, 2), ratio(3, 2)], &seg));
        assert!(!in_convex_hull(&[ratio(3, 2), ratio(1, 2)], &seg));
    }

    #[test]
    fn long_degenerate_runs_terminate() {
        // every lattice point of a small cube, many times over, so most
        // pivots make no progress
        let mut cube = Vec::new();
        for _ in 0..8 {
            for x in 0..3 {
                for y in 0..3 {
                    for z in 0..3 {
                        cube.push(v(&[x, y, z]));
                    }
                }
            }
        }
        assert!(in_convex_hull(&v(&[0, 0, 0]), &cube));
        assert!(in_convex_hull(&v(&[2, 2, 2]), &cube));
        assert!(in_convex_hull(&[ratio(1, 3), ratio(5, 3), int(2)], &cube));
        assert!(!in_convex_hull(&[ratio(7, 3), int(0), int(0)], &cube));
    }
}
