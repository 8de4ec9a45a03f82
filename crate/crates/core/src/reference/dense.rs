use crate::error::{mismatch, Error, Result};

/// Gaussian elimination with partial pivoting on a dense row-major matrix.
pub fn dense_solve(a: &[Vec<f64>], b: &[f64]) -> Result<Vec<f64>> {
    let n = b.len();
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(mismatch("dense system must be square and match the rhs"));
    }
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .expect("non-empty range");
        if m[piv][col] == 0.0 {
            return Err(Error::Oracle("singular dense system".into()));
        }
        m.swap(col, piv);
        let (top, bottom) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in bottom {
            let factor = row[col] / pivot_row[col];
            if factor != 0.0 {
                for (a, b) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *a -= factor * b;
                }
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| m[i][k] * x[k]).sum();
        x[i] = (m[i][n] - s) / m[i][i];
    }
    Ok(x)
}
