//! Per-iteration convergence records.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceEntry {
    /// 1-based iteration index (inner `t` or outer `k`).
    pub iter: usize,
    /// Objective value at the iterate.
    pub energy: f64,
    /// `max |u - v|` between the split variables.
    pub gap: f64,
    /// Cumulative solver time in milliseconds, excluding trace bookkeeping.
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SolverTrace {
    pub entries: Vec<TraceEntry>,
}

impl SolverTrace {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn energies(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.energy).collect()
    }

    pub fn gaps(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.gap).collect()
    }

    pub fn last(&self) -> Option<&TraceEntry> {
        self.entries.last()
    }

    /// Time spent in each iteration.
    pub fn iteration_ms(&self) -> Vec<f64> {
        let mut prev = 0.0;
        self.entries
            .iter()
            .map(|e| {
                let d = e.elapsed_ms - prev;
                prev = e.elapsed_ms;
                d
            })
            .collect()
    }

    /// CSV with header `iter,energy,gap,ms` and one row per iteration.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("iter,energy,gap,ms\n");
        for e in &self.entries {
            // Display for f64 never uses exponent notation
            let _ = writeln!(out, "{},{},{},{}", e.iter, e.energy, e.gap, e.elapsed_ms);
        }
        out
    }
}
