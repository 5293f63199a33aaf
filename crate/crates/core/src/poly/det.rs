use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Determinant by cofactor expansion, always along the row or column with
/// the most zero entries. Entry (0,0) carries sign +.
pub fn determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let k = m.len();
    if k == 0 || m.iter().any(|r| r.len() != k) {
        return Err(Error::Precondition("determinant needs a nonempty square matrix".into()));
    }
    let rows: Vec<usize> = (0..k).collect();
    Ok(expand(m, &rows, &rows))
}

fn expand(m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Polynomial {
    let k = rows.len();
    if k == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let zeros_in_row = |r: usize| cols.iter().filter(|&&c| m[r][c].is_zero()).count();
    let zeros_in_col = |c: usize| rows.iter().filter(|&&r| m[r][c].is_zero()).count();
    let (best_row, row_zeros) =
        (0..k).map(|i| (i, zeros_in_row(rows[i]))).max_by_key(|&(i, z)| (z, std::cmp::Reverse(i))).unwrap();
    let (best_col, col_zeros) =
        (0..k).map(|j| (j, zeros_in_col(cols[j]))).max_by_key(|&(j, z)| (z, std::cmp::Reverse(j))).unwrap();
    let nvars = m[rows[0]][cols[0]].nvars();
    let mut acc = Polynomial::zero(nvars);
    if row_zeros == k || col_zeros == k {
        return acc;
    }
    let along_row = row_zeros >= col_zeros;
    for t in 0..k {
        let (i, j) = if along_row { (best_row, t) } else { (t, best_col) };
        let entry = &m[rows[i]][cols[j]];
        if entry.is_zero() {
            continue;
        }
        let sub_rows: Vec<usize> = rows.iter().enumerate().filter(|&(a, _)| a != i).map(|(_, &r)| r).collect();
        let sub_cols: Vec<usize> = cols.iter().enumerate().filter(|&(b, _)| b != j).map(|(_, &c)| c).collect();
        let minor = expand(m, &sub_rows, &sub_cols);
        if minor.is_zero() {
            continue;
        }
        let term = entry * &minor;
        acc = if (i + j) % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
