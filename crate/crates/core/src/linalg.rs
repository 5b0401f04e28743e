//! Dense Gaussian elimination over `F_p`.

use crate::field::{Field, PrimeField};

/// Rank of a dense matrix over `F_p`. Rows may be consumed.
pub fn rank(field: &PrimeField, mut rows: Vec<Vec<u64>>) -> usize {
    row_reduce(field, &mut rows).len()
}

/// Brings `rows` to reduced row echelon form in place and returns the pivot
/// column of each nonzero row, in order. Zero rows are moved to the bottom.
pub fn row_reduce(field: &PrimeField, rows: &mut [Vec<u64>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(&rows[r][c]).expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                if *pv != 0 {
                    *v = field.sub(v, &field.mul(&factor, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Determinant of a square matrix over `F_p`.
pub fn determinant(field: &PrimeField, mut m: Vec<Vec<u64>>) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if pr != c {
            m.swap(pr, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &m[c][c]);
        let inv = field.inv(&m[c][c]).expect("pivot is nonzero");
        for i in c + 1..n {
            if m[i][c] == 0 {
                continue;
            }
            let factor = field.mul(&m[i][c], &inv);
            let (top, bottom) = m.split_at_mut(i);
            for (x, p) in bottom[0][c..n].iter_mut().zip(&top[c][c..n]) {
                *x = field.sub(x, &field.mul(&factor, p));
            }
        }
    }
    det
}

/// Submatrix with the given rows and columns.
pub fn submatrix(m: &[Vec<u64>], rows: &[usize], cols: &[usize]) -> Vec<Vec<u64>> {
    rows.iter().map(|&r| cols.iter().map(|&c| m[r][c]).collect()).collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}
