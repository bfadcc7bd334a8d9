//! Exact Gaussian elimination over `Q`.

use num::{One, Zero};

use crate::graded_ring::SparseVec;
use crate::rational::Q;

/// Solve `Σ_j c_j · columns[j] = target` for `c`, or `None` if `target` is not
/// in the span. `dim` is the ambient dimension.
pub fn solve_in_span(columns: &[SparseVec], target: &SparseVec, dim: usize) -> Option<Vec<Q>> {
    let n = columns.len();
    // augmented matrix, rows = ambient coordinates
    let mut m: Vec<Vec<Q>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Q> = columns
                .iter()
                .map(|c| c.get(&r).cloned().unwrap_or_else(Q::zero))
                .collect();
            row.push(target.get(&r).cloned().unwrap_or_else(Q::zero));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..dim).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Q::one() / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..dim {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let d = &m[row][c] * &f;
                    m[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == dim {
            break;
        }
    }
    if m[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let mut sol = vec![Q::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = m[r][n].clone();
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn sv(v: &[(usize, i64)]) -> SparseVec {
        v.iter().map(|&(i, c)| (i, int(c))).collect()
    }

    #[test]
    fn solves_and_rejects() {
        let cols = vec![sv(&[(0, 1), (1, 1)]), sv(&[(1, 2)]), sv(&[(0, 2), (1, 2)])];
        let t = sv(&[(0, 3), (1, 7)]);
        let s = solve_in_span(&cols, &t, 3).unwrap();
        let mut back = SparseVec::new();
        for (c, col) in s.iter().zip(&cols) {
            for (&i, x) in col {
                *back.entry(i).or_insert_with(Q::zero) += c * x;
            }
        }
        back.retain(|_, x| !x.is_zero());
        assert_eq!(back, t);
        assert!(solve_in_span(&cols, &sv(&[(2, 1)]), 3).is_none());
        assert_eq!(solve_in_span(&[], &SparseVec::new(), 2), Some(vec![]));
    }
}
