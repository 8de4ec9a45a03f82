//! Weighted 1D total variation by a taut-string sweep.
//!
//! With `F_k = sum_{i<k} f_i`, the minimiser of
//! `sum (z - f)^2 + sum w_x |z_{x+1} - z_x|` is the slope of the shortest
//! path from `(0, 0)` to `(n, F_n)` that stays within `|Z_k - F_k| <= w_{k-1} / 2`
//! at every interior knot. The sweep keeps two hulls rooted at the last
//! committed knot: the convex minorant of the tube ceiling and the concave
//! majorant of the tube floor. Whenever a new knot makes the ceiling hull dip
//! below the floor hull, the string is forced through the first vertex of the
//! other hull, which is committed and becomes the new root. Every knot enters
//! each hull once, so the sweep is O(n).

use super::{for_each_coupled_run, validate, LineSolver};
use crate::error::Result;

/// Minimiser of `sum (z - f)^2 + sum w_x |z_{x+1} - z_x|`.
pub fn wtv_1d(f: &[f64], w: &[f64]) -> Result<Vec<f64>> {
    validate(f, w)?;
    let mut out = vec![0.0; f.len()];
    TautString::default().solve_into(f, w, &mut out);
    Ok(out)
}

type Knot = (usize, f64);

/// Sign of `slope(o, a) - slope(o, b)` for knots right of `o`, without division.
#[inline]
fn cross(o: Knot, a: Knot, b: Knot) -> f64 {
    (a.1 - o.1) * (b.0 - o.0) as f64 - (b.1 - o.1) * (a.0 - o.0) as f64
}

#[derive(Debug, Default)]
struct Hull {
    pts: Vec<Knot>,
    head: usize,
}

impl Hull {
    fn reset(&mut self, root: Knot) {
        self.pts.clear();
        self.pts.push(root);
        self.head = 0;
    }

    fn reset_pair(&mut self, root: Knot, tip: Knot) {
        self.reset(root);
        self.pts.push(tip);
    }

    fn root(&self) -> Knot {
        self.pts[self.head]
    }

    fn next(&self) -> Knot {
        self.pts[self.head + 1]
    }

    fn advance(&mut self) {
        self.head += 1;
    }

    /// Appends `p` keeping slopes strictly increasing.
    fn push_convex(&mut self, p: Knot) {
        while self.pts.len() - self.head >= 2 {
            let m = self.pts.len();
            if cross(self.pts[m - 2], self.pts[m - 1], p) >= 0.0 {
                self.pts.pop();
            } else {
                break;
            }
        }
        self.pts.push(p);
    }

    /// Appends `p` keeping slopes strictly decreasing.
    fn push_concave(&mut self, p: Knot) {
        while self.pts.len() - self.head >= 2 {
            let m = self.pts.len();
            if cross(self.pts[m - 2], self.pts[m - 1], p) <= 0.0 {
                self.pts.pop();
            } else {
                break;
            }
        }
        self.pts.push(p);
    }
}

/// Taut-string WTV solver with reusable hull storage.
#[derive(Debug, Default)]
pub struct TautString {
    ceiling: Hull,
    floor: Hull,
}

fn emit(z: &mut [f64], from: Knot, to: Knot, shift: f64) {
    let v = (to.1 - from.1) / (to.0 - from.0) as f64 + shift;
    z[from.0..to.0].fill(v);
}

impl TautString {
    fn solve_run(&mut self, f: &[f64], w: &[f64], z: &mut [f64]) {
        let n = f.len();
        if n == 1 {
            z[0] = f[0];
            return;
        }
        // running sums of f - f[0] stay small and make constant runs exact
        let shift = f[0];
        self.ceiling.reset((0, 0.0));
        self.floor.reset((0, 0.0));
        let mut cum = 0.0;
        for k in 1..=n {
            cum += f[k - 1] - shift;
            let half = if k < n { 0.5 * w[k - 1] } else { 0.0 };
            let hi = (k, cum + half);
            let lo = (k, cum - half);
            self.ceiling.push_convex(hi);
            self.floor.push_concave(lo);
            loop {
                let root = self.ceiling.root();
                let up = self.ceiling.next();
                let down = self.floor.next();
                if cross(root, up, down) >= 0.0 {
                    break;
                }
                if cross(root, hi, down) < 0.0 {
                    // the new ceiling knot passes under the floor hull
                    emit(z, root, down, shift);
                    self.floor.advance();
                    self.ceiling.reset_pair(down, hi);
                } else {
                    emit(z, root, up, shift);
                    self.ceiling.advance();
                    self.floor.reset_pair(up, lo);
                }
            }
        }
        emit(z, self.ceiling.root(), (n, cum), shift);
    }
}

impl LineSolver for TautString {
    fn solve_into(&mut self, f: &[f64], w: &[f64], out: &mut [f64]) {
        for_each_coupled_run(w, |a, b| {
            let we = if b > a + 1 { &w[a..b - 1] } else { &[][..] };
            self.solve_run(&f[a..b], we, &mut out[a..b]);
        });
    }
}

/// The dual flux `s_j = 2 * sum_{i<j} (z_i - f_i)` for `j = 0..=n`.
///
/// `s[x + 1]` belongs to the edge between samples `x` and `x + 1`; at the
/// optimum `|s[x + 1]| <= w_x`, it equals `+w_x` on upward jumps and `-w_x`
/// on downward ones, and both boundary values vanish.
pub fn dual_flux(f: &[f64], z: &[f64]) -> Vec<f64> {
    let mut s = Vec::with_capacity(f.len() + 1);
    let mut acc = 0.0;
    s.push(0.0);
    for (zi, fi) in z.iter().zip(f) {
        acc += 2.0 * (zi - fi);
        s.push(acc);
    }
    s
}

/// Worst violations of the WTV optimality conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KktReport {
    /// `|s_n|`; `s_0` is zero by construction.
    pub boundary: f64,
    /// `max(|s_x| - w_x, 0)` over interior edges.
    pub box_excess: f64,
    /// `|s_x - sign(jump) w_x|` over edges whose jump exceeds the tolerance.
    pub saturation: f64,
}

impl KktReport {
    pub fn worst(&self) -> f64 {
        self.boundary.max(self.box_excess).max(self.saturation)
    }

    pub fn holds(&self, tol: f64) -> bool {
        self.worst() <= tol
    }
}

/// Checks `z` against the optimality conditions of the weighted TV problem.
/// Jumps of magnitude at most `jump_tol` count as flat.
pub fn kkt_check(f: &[f64], w: &[f64], z: &[f64], jump_tol: f64) -> KktReport {
    let s = dual_flux(f, z);
    let n = f.len();
    let mut report = KktReport { boundary: s[n].abs(), box_excess: 0.0, saturation: 0.0 };
    for x in 0..n.saturating_sub(1) {
        let flux = s[x + 1];
        report.box_excess = report.box_excess.max(flux.abs() - w[x]);
        let jump = z[x + 1] - z[x];
        if jump.abs() > jump_tol {
            let target = w[x] * jump.signum();
            report.saturation = report.saturation.max((flux - target).abs());
        }
    }
    report
}
