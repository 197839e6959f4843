//! Exact feasibility for `A y = b, y >= 0` over the rationals.
//!
//! Phase one of the simplex method with Bland's rule, so it always
//! terminates. Problems here are tiny (n rows, n² columns), so the dense
//! tableau is fine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Returns a nonnegative solution of `Σ_j y_j columns[j] = target`, if one exists.
pub fn nonneg_combination(columns: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = target.len();
    let cols = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == rows));
    if rows == 0 {
        return Some(vec![BigRational::zero(); cols]);
    }

    // Tableau: rows × (cols + rows artificials + rhs).
    let width = cols + rows + 1;
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let flip = target[r].is_negative();
        let mut row = vec![BigRational::zero(); width];
        for (c, col) in columns.iter().enumerate() {
            row[c] = if flip { -col[r].clone() } else { col[r].clone() };
        }
        row[cols + r] = BigRational::from_integer(BigInt::from(1));
        row[width - 1] = target[r].abs();
        tab.push(row);
    }
    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    // Reduced costs for minimizing the sum of artificials.
    loop {
        let mut cost = vec![BigRational::zero(); width];
        for j in 0..cols + rows {
            if j >= cols {
                cost[j] = BigRational::from_integer(BigInt::from(1));
            }
        }
        for (r, &b) in basis.iter().enumerate() {
            if b >= cols {
                for j in 0..width {
                    cost[j] = &cost[j] - &tab[r][j];
                }
            }
        }
        // Bland: smallest index with negative reduced cost.
        let entering = (0..cols + rows).find(|&j| cost[j].is_negative());
        let Some(entering) = entering else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if tab[r][entering].is_positive() {
                let ratio = &tab[r][width - 1] / &tab[r][entering];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so an entering column always has a pivot.
        let (pr, _) = leave.expect("phase-one objective is bounded");
        let pivot = tab[pr][entering].clone();
        for j in 0..width {
            tab[pr][j] = &tab[pr][j] / &pivot;
        }
        for r in 0..rows {
            if r != pr && !tab[r][entering].is_zero() {
                let f = tab[r][entering].clone();
                for j in 0..width {
                    let delta = &f * &tab[pr][j];
                    tab[r][j] = &tab[r][j] - delta;
                }
            }
        }
        basis[pr] = entering;
    }

    let mut y = vec![BigRational::zero(); cols];
    for (r, &b) in basis.iter().enumerate() {
        if b >= cols {
            if !tab[r][width - 1].is_zero() {
                return None;
            }
        } else {
            y[b] = tab[r][width - 1].clone();
        }
    }
    Some(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn cols(v: &[&[i64]]) -> Vec<Vec<BigRational>> {
        v.iter().map(|c| c.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn feasible_combination_is_returned() {
        let c = cols(&[&[1, -1], &[1, 1], &[2, 0]]);
        let t = vec![q(1), q(1)];
        let y = nonneg_combination(&c, &t).unwrap();
        for r in 0..2 {
            let s: BigRational = (0..3).map(|j| &y[j] * &c[j][r]).sum();
            assert_eq!(s, t[r]);
        }
        assert!(y.iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn infeasible_is_none() {
        let c = cols(&[&[1, -1], &[0, 2]]);
        assert!(nonneg_combination(&c, &[q(-1), q(0)]).is_none());
        assert!(nonneg_combination(&[], &[q(1)]).is_none());
    }

    #[test]
    fn zero_target_always_feasible() {
        let c = cols(&[&[1, 0]]);
        assert!(nonneg_combination(&c, &[q(0), q(0)]).is_some());
    }
}
