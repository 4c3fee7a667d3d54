//! Small exact linear algebra over the rationals.
//!
//! Plain Gaussian elimination on dense `Vec<Vec<Rat>>` matrices.  The
//! matrices in this crate are tiny (ambient dimension ≤ 9 for root systems,
//! ≤ 100 for the defining matrix realizations used by the ad-nilpotency
//! check), so no pivoting strategy beyond "first nonzero" is needed.

use crate::rat::{rzero, Rat};
use num_traits::Zero;

/// Row-echelon reduction in place; returns the pivot columns.
fn echelon(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of a matrix.
pub fn rank(m: &[Vec<Rat>]) -> usize {
    let mut m = m.to_vec();
    echelon(&mut m).len()
}

/// Solve `A x = b` for one solution; `None` if inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "solve: shape mismatch");
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.last() == Some(&cols) {
        return None; // pivot in the augmented column: inconsistent
    }
    let mut x = vec![rzero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis of the right nullspace of `A` (solutions of `A x = 0`).
pub fn nullspace(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m = a.to_vec();
    let pivots = echelon(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![rzero(); cols];
            v[f] = crate::rat::rone();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][f].clone();
            }
            v
        })
        .collect()
}
