//! Fraction-free (Bareiss) elimination on augmented matrices.
//!
//! Pivots are taken column by column, first nonzero entry wins. Every
//! intermediate entry is a minor of the input, so division by the previous
//! pivot is exact; both exactness and overflow are asserted.

use num_rational::Ratio;
use num_traits::Zero;

use crate::arrangement::AssociatedMatrix;
use crate::scalar::{checked_mul, checked_sub, ExactInt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationResult<T: Clone + num_integer::Integer> {
    pub rank_a: usize,
    pub rank_ab: usize,
    pub consistent: bool,
    /// A rational point on every row, present iff `consistent`. Free
    /// variables are set to zero.
    pub witness: Option<Vec<Ratio<T>>>,
}

/// Exact ranks of `A` and `[A | b]`, plus a solution when one exists.
pub fn eliminate<T: ExactInt>(matrix: &AssociatedMatrix<T>) -> EliminationResult<T> {
    let cols = matrix.cols();
    let mut work: Vec<Vec<T>> = matrix.rows().to_vec();
    let height = work.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = T::one();

    for c in 0..=cols {
        let r = pivots.len();
        let Some(found) = (r..height).find(|&i| !work[i][c].is_zero()) else {
            continue;
        };
        work.swap(r, found);
        let (top, below) = work.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in below.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..=cols {
                let num = checked_sub(&checked_mul(&pivot, &row[j]), &checked_mul(&lead, &pivot_row[j]));
                let (q, rem) = num.div_rem(&prev);
                assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = T::zero();
        }
        prev = pivot;
        pivots.push(c);
    }

    let rank_ab = pivots.len();
    let rank_a = pivots.iter().filter(|&&c| c < cols).count();
    let consistent = rank_a == rank_ab;
    let witness = consistent.then(|| back_substitute(&work, &pivots, cols));
    EliminationResult { rank_a, rank_ab, consistent, witness }
}

fn back_substitute<T: ExactInt>(echelon: &[Vec<T>], pivots: &[usize], cols: usize) -> Vec<Ratio<T>> {
    let mut x = vec![Ratio::zero(); cols];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let row = &echelon[r];
        let mut acc = Ratio::from_integer(row[cols].clone());
        for j in c + 1..cols {
            if !row[j].is_zero() {
                acc = acc - Ratio::from_integer(row[j].clone()) * x[j].clone();
            }
        }
        x[c] = acc / Ratio::from_integer(row[c].clone());
    }
    x
}

/// Whether the walls encoded by `matrix` share a common point.
pub fn matrix_consistent<T: ExactInt>(matrix: &AssociatedMatrix<T>) -> bool {
    eliminate(matrix).consistent
}

/// Substitutes `point` into every row and checks exact equality.
pub fn satisfies<T: ExactInt>(matrix: &AssociatedMatrix<T>, point: &[Ratio<T>]) -> bool {
    point.len() == matrix.cols()
        && (0..matrix.row_count()).all(|i| {
            let lhs = matrix
                .coefficients(i)
                .iter()
                .zip(point)
                .fold(Ratio::zero(), |acc, (a, x)| acc + Ratio::from_integer(a.clone()) * x.clone());
            lhs == Ratio::from_integer(matrix.rhs(i).clone())
        })
}
