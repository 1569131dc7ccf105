//! Dense exact linear algebra over `Q(q)`, sized for weight-space
//! computations (a handful of rows and columns).

use crate::qarith::QRat;

pub type Matrix = Vec<Vec<QRat>>;

/// Row-reduce in place; returns the pivot column of each nonzero row.
pub fn row_echelon(mat: &mut Matrix) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pivot_row) = (row..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pivot_row);
        let inv = mat[row][col].inverse().unwrap();
        for c in col..cols {
            mat[row][c] = &mat[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..cols {
                    let sub = &mat[row][c] * &factor;
                    mat[r][c] = &mat[r][c] - &sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

pub fn rank(mat: &Matrix) -> usize {
    let mut m = mat.clone();
    row_echelon(&mut m).len()
}

/// Indices of the first rows (in order) forming a basis of the row space.
pub fn independent_rows(mat: &Matrix) -> Vec<usize> {
    let mut chosen: Matrix = Vec::new();
    let mut out = Vec::new();
    for (idx, row) in mat.iter().enumerate() {
        let mut candidate = chosen.clone();
        candidate.push(row.clone());
        if rank(&candidate) > chosen.len() {
            chosen = candidate;
            out.push(idx);
        }
    }
    out
}

/// Solve `A x = b` (columns are unknowns); `None` when inconsistent,
/// otherwise the solution with free variables set to zero.
pub fn solve(a: &Matrix, b: &[QRat]) -> Option<Vec<QRat>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_echelon(&mut aug);
    // Inconsistent when a pivot lands in the rhs column.
    if pivots.iter().any(|&c| c == cols) {
        return None;
    }
    let mut x = vec![QRat::zero(); cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug[row][cols].clone();
    }
    Some(x)
}

/// Solve `A x = b` requiring full column rank (unique solution).
pub fn solve_unique(a: &Matrix, b: &[QRat]) -> Option<Vec<QRat>> {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    if rank(a) != cols {
        return None;
    }
    solve(a, b)
}

/// A basis of `{x : A x = 0}`.
pub fn nullspace(a: &Matrix) -> Vec<Vec<QRat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m = a.clone();
    let pivots = row_echelon(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &f in &free {
        let mut v = vec![QRat::zero(); cols];
        v[f] = QRat::one();
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = -&m[row][f];
        }
        out.push(v);
    }
    out
}

/// Inverse of a square matrix, `None` when singular.
pub fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(r, row)| {
            assert_eq!(row.len(), n);
            let mut out = row.clone();
            for c in 0..n {
                out.push(if c == r { QRat::one() } else { QRat::zero() });
            }
            out
        })
        .collect();
    let pivots = row_echelon(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(r, &c)| r != c) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> QRat {
        QRat::parse(text).unwrap()
    }

    #[test]
    fn solve_and_invert() {
        let a = vec![vec![q("1"), q("q")], vec![q("q"), q("1")]];
        let b = vec![q("1+q^2"), q("2*q")];
        let x = solve_unique(&a, &b).unwrap();
        assert_eq!(x, vec![q("1"), q("q")]);
        let inv = invert(&a).unwrap();
        // A * A^-1 = I.
        for r in 0..2 {
            for c in 0..2 {
                let mut acc = QRat::zero();
                for k in 0..2 {
                    acc += &(&a[r][k] * &inv[k][c]);
                }
                assert_eq!(acc, if r == c { QRat::one() } else { QRat::zero() });
            }
        }
    }

    #[test]
    fn nullspace_of_rank_deficient_matrix() {
        let a = vec![vec![q("1"), q("q"), q("q^2")]];
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let mut acc = QRat::zero();
            for (k, entry) in v.iter().enumerate() {
                acc += &(&a[0][k] * entry);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn inconsistent_systems_are_detected() {
        let a = vec![vec![q("1"), q("1")], vec![q("1"), q("1")]];
        let b = vec![q("0"), q("1")];
        assert!(solve(&a, &b).is_none());
    }
}
