//! Row reduction over the Gaussian rationals.

use num_traits::{One, Zero};

use crate::dirac4::Gaussian;

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut [Vec<Gaussian>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Gaussian::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(mut rows: Vec<Vec<Gaussian>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    rref(&mut rows, ncols).len()
}

/// Basis of `{ x : A x = 0 }` for the matrix with the given rows.
pub fn nullspace(mut rows: Vec<Vec<Gaussian>>, ncols: usize) -> Vec<Vec<Gaussian>> {
    let pivots = rref(&mut rows, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![Gaussian::zero(); ncols];
            x[free] = Gaussian::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -rows[r][free].clone();
            }
            x
        })
        .collect()
}
