//! Small dense linear algebra over a field: row reduction, rank, kernels,
//! and inverses of the tiny matrices that show up in quadric geometry.

use super::scalar::{Field, Scalar};

/// Reduce to reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][col].inv();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for c in 0..ncols {
                    let sub = &factor * &rows[r][c];
                    rows[i][c] = &rows[i][c] - &sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

pub(crate) fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut work: Vec<Vec<Scalar>> = rows.to_vec();
    rref(&mut work).len()
}

/// Basis of the right kernel {x : M x = 0}.
pub(crate) fn kernel_basis(rows: &[Vec<Scalar>], ncols: usize, field: Field) -> Vec<Vec<Scalar>> {
    let mut work: Vec<Vec<Scalar>> = rows.to_vec();
    let pivots = rref(&mut work);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(field); ncols];
        v[free] = Scalar::one(field);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&work[row][free];
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, if it exists.
pub(crate) fn invert(mat: &[Vec<Scalar>], field: Field) -> Option<Vec<Vec<Scalar>>> {
    let n = mat.len();
    let mut work: Vec<Vec<Scalar>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Scalar::one(field)
                } else {
                    Scalar::zero(field)
                }
            }));
            r
        })
        .collect();
    let pivots = rref(&mut work);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: Field, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Scalar::from_i64(field, v)).collect())
            .collect()
    }

    #[test]
    fn rank_and_kernel() {
        let f = Field::Rational;
        let a = m(f, &[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let ker = kernel_basis(&a, 3, f);
        assert_eq!(ker.len(), 1);
        // kernel vector satisfies both independent rows
        let v = &ker[0];
        let dot =
            &(&(&v[0] + &(&v[1] + &v[1])) + &(&v[2] + &(&v[2] + &v[2])));
        assert!(dot.is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::Fp(7);
        let a = m(f, &[&[1, 2], &[3, 4]]);
        let inv = invert(&a, f).unwrap();
        // a * inv = identity
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = Scalar::zero(f);
                for k in 0..2 {
                    acc = &acc + &(&a[i][k] * &inv[k][j]);
                }
                if i == j {
                    assert!(acc.is_one());
                } else {
                    assert!(acc.is_zero());
                }
            }
        }
        let singular = m(f, &[&[1, 2], &[2, 4]]);
        assert!(invert(&singular, f).is_none());
    }
}
