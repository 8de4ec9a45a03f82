use crate::error::{mismatch, param, Error, Result};

/// An `n x n` tridiagonal matrix. `lower[i]` is entry `(i + 1, i)` and
/// `upper[i]` is entry `(i, i + 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    lower: Vec<f64>,
    diag: Vec<f64>,
    upper: Vec<f64>,
}

impl Tridiagonal {
    pub fn new(lower: Vec<f64>, diag: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(param("tridiagonal matrix must be non-empty"));
        }
        if lower.len() + 1 != diag.len() || upper.len() + 1 != diag.len() {
            return Err(mismatch("off-diagonals must have length n - 1"));
        }
        if lower.iter().chain(&diag).chain(&upper).any(|v| !v.is_finite()) {
            return Err(param("matrix entries must be finite"));
        }
        Ok(Self { lower, diag, upper })
    }

    /// `I + D^T diag(w) D` for the forward difference `D`: the normal matrix
    /// of the 1D weighted least-squares problem.
    pub fn from_edge_weights(w: &[f64]) -> Self {
        let n = w.len() + 1;
        let mut diag = vec![1.0; n];
        for (e, &we) in w.iter().enumerate() {
            diag[e] += we;
            diag[e + 1] += we;
        }
        let off: Vec<f64> = w.iter().map(|&we| -we).collect();
        Self { lower: off.clone(), diag, upper: off }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Weak row diagonal dominance with positive diagonal.
    pub fn is_diagonally_dominant(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            let mut off = 0.0;
            if i > 0 {
                off += self.lower[i - 1].abs();
            }
            if i + 1 < n {
                off += self.upper[i].abs();
            }
            self.diag[i] > 0.0 && self.diag[i] >= off
        })
    }

    pub fn apply(&self, z: &[f64]) -> Vec<f64> {
        let n = self.len();
        assert_eq!(z.len(), n);
        (0..n)
            .map(|i| {
                let mut v = self.diag[i] * z[i];
                if i > 0 {
                    v += self.lower[i - 1] * z[i - 1];
                }
                if i + 1 < n {
                    v += self.upper[i] * z[i + 1];
                }
                v
            })
            .collect()
    }

    /// `max |M z - rhs|`.
    pub fn residual_inf(&self, z: &[f64], rhs: &[f64]) -> f64 {
        self.apply(z)
            .iter()
            .zip(rhs)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Solves `m z = rhs` by forward elimination and back substitution, without
/// pivoting.
pub fn thomas_solve(m: &Tridiagonal, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = m.len();
    if rhs.len() != n {
        return Err(mismatch(format!("rhs has length {}, matrix is {n}x{n}", rhs.len())));
    }
    let mut scratch = vec![0.0; n];
    let mut z = vec![0.0; n];
    eliminate(&m.lower, &m.diag, &m.upper, rhs, &mut scratch, &mut z)
        .map_err(|i| Error::Internal(format!("zero pivot at row {i}")))?;
    Ok(z)
}

/// Core elimination; `scratch` holds the modified super-diagonal. Returns the
/// row of a vanishing pivot on failure.
fn eliminate(
    lower: &[f64],
    diag: &[f64],
    upper: &[f64],
    rhs: &[f64],
    scratch: &mut [f64],
    z: &mut [f64],
) -> std::result::Result<(), usize> {
    let n = diag.len();
    if diag[0] == 0.0 {
        return Err(0);
    }
    let mut pivot = diag[0];
    z[0] = rhs[0] / pivot;
    for i in 1..n {
        scratch[i - 1] = upper[i - 1] / pivot;
        pivot = diag[i] - lower[i - 1] * scratch[i - 1];
        if pivot == 0.0 {
            return Err(i);
        }
        z[i] = (rhs[i] - lower[i - 1] * z[i - 1]) / pivot;
    }
    for i in (0..n - 1).rev() {
        z[i] -= scratch[i] * z[i + 1];
    }
    Ok(())
}
