use super::{for_each_coupled_run, validate, LineSolver};
use crate::error::Result;

/// Minimiser of `sum (z - f)^2 + sum w_x (z_{x+1} - z_x)^2`.
pub fn wls_1d(f: &[f64], w: &[f64]) -> Result<Vec<f64>> {
    validate(f, w)?;
    let mut out = vec![0.0; f.len()];
    WlsSolver::default().solve_into(f, w, &mut out);
    Ok(out)
}

/// Tridiagonal WLS solver with reusable scratch.
///
/// The matrix `I + D^T W D` is never stored: its rows are formed from `w`
/// during elimination. Each coupled run is shifted by its first sample, so a
/// constant run comes back bit-exact.
#[derive(Debug, Default)]
pub struct WlsSolver {
    /// eliminated super-diagonal
    sup: Vec<f64>,
}

impl WlsSolver {
    fn solve_run(&mut self, f: &[f64], w: &[f64], out: &mut [f64]) {
        let n = f.len();
        let shift = f[0];
        if n == 1 {
            out[0] = shift;
            return;
        }
        self.sup.resize(n, 0.0);
        let sup = &mut self.sup[..n];
        // row i: diag 1 + w[i-1] + w[i], off-diagonals -w[i-1] and -w[i];
        // diag >= 1 and the rows are dominant, so every pivot is >= 1
        let mut pivot = 1.0 + w[0];
        sup[0] = -w[0] / pivot;
        out[0] = (f[0] - shift) / pivot;
        for i in 1..n {
            let left = w[i - 1];
            let right = if i + 1 < n { w[i] } else { 0.0 };
            pivot = 1.0 + left + right + left * sup[i - 1];
            sup[i] = -right / pivot;
            out[i] = (f[i] - shift + left * out[i - 1]) / pivot;
        }
        for i in (0..n - 1).rev() {
            out[i] -= sup[i] * out[i + 1];
        }
        for v in out.iter_mut() {
            *v += shift;
        }
    }
}

impl LineSolver for WlsSolver {
    fn solve_into(&mut self, f: &[f64], w: &[f64], out: &mut [f64]) {
        for_each_coupled_run(w, |a, b| {
            let we = if b > a + 1 { &w[a..b - 1] } else { &[][..] };
            self.solve_run(&f[a..b], we, &mut out[a..b]);
        });
    }
}
