//! Dense linear algebra over a finite field.

use mpoly::{Elem, Field};

/// Row-reduces `rows` in place to reduced echelon form and returns the pivot
/// columns.
pub fn row_reduce(field: &Field, rows: &mut [Vec<Elem>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
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
        let inv = field.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c];
                for (x, &p) in row[c..ncols].iter_mut().zip(&pivot_row[c..ncols]) {
                    *x = field.sub(*x, field.mul(factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a matrix given by rows.
pub fn rank(field: &Field, rows: &[Vec<Elem>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(field, &mut m).len()
}

/// Solutions of `A x = b` for an `r × k` matrix given by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Elem>),
    Inconsistent,
    /// The system is consistent but has more than one solution.
    Underdetermined,
}

/// Solves `sum_j x_j * columns[j] = rhs`.
pub fn solve_columns(field: &Field, columns: &[Vec<Elem>], rhs: &[Elem]) -> Solution {
    let k = columns.len();
    let mut rows: Vec<Vec<Elem>> = (0..rhs.len())
        .map(|i| {
            let mut row: Vec<Elem> = columns.iter().map(|col| col[i]).collect();
            row.push(rhs[i]);
            row
        })
        .collect();
    let pivots = row_reduce(field, &mut rows);
    if pivots.last() == Some(&k) {
        return Solution::Inconsistent;
    }
    if pivots.len() < k {
        return Solution::Underdetermined;
    }
    Solution::Unique((0..k).map(|j| rows[j][k]).collect())
}
