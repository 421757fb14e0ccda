use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::Rational;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Kernel basis of a matrix with `ncols` columns: one vector per free column,
/// equal to one there and zero at the other free columns.
pub fn kernel(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<(usize, Vec<Rational>)> {
    let pivots = if rows.is_empty() { Vec::new() } else { rref(&mut rows) };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][f].clone();
            }
            (f, v)
        })
        .collect()
}

/// Rank by fraction-free (Bareiss) elimination over the integers.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for i in rank + 1..nrows {
            let lead = m[i][c].clone();
            for j in c..ncols {
                let v = (&pivot * &m[i][j] - &lead * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn kernel_of_rank_one() {
        let rows = vec![vec![int(1), int(2), int(3)]];
        let k = kernel(rows, 3);
        assert_eq!(k.len(), 2);
        for (_, v) in &k {
            assert_eq!(&v[0] + int(2) * &v[1] + int(3) * &v[2], int(0));
        }
    }

    #[test]
    fn bareiss_matches_known_ranks() {
        let b = |v: Vec<Vec<i64>>| v.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        assert_eq!(bareiss_rank(b(vec![vec![1, 2], vec![2, 4]])), 1);
        assert_eq!(bareiss_rank(b(vec![vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 0]])), 2);
        assert_eq!(bareiss_rank(b(vec![vec![2, 0], vec![0, 3], vec![5, 7]])), 2);
    }
}
