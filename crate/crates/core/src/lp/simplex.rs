//! Two-phase primal simplex on a dense tableau with Bland's anti-cycling rule.

use serde::Serialize;

use super::{LinearProgram, ObjectiveForm, Relation};
use crate::error::{Error, Result};

const PIVOT_TOL: f64 = 1e-9;
const FEAS_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Variable values; empty unless optimal.
    pub values: Vec<f64>,
    pub objective: f64,
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    /// Reduced-cost row; the last entry holds minus the objective value.
    cost: Vec<f64>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> f64 {
        self.rows[i][self.width]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col];
        for v in self.rows[row].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row {
                continue;
            }
            let f = r[col];
            if f != 0.0 {
                for (v, &pv) in r.iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
                r[col] = 0.0;
            }
        }
        let f = self.cost[col];
        if f != 0.0 {
            for (v, &pv) in self.cost.iter_mut().zip(&pivot_row) {
                *v -= f * pv;
            }
            self.cost[col] = 0.0;
        }
        self.basis[row] = col;
    }

    /// Runs Bland-rule pivots over columns `< allowed`. Returns false when
    /// the objective is unbounded below.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(col) = (0..allowed).find(|&j| self.cost[j] < -PIVOT_TOL) else {
                return true;
            };
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..self.rows.len() {
                let a = self.rows[i][col];
                if a > PIVOT_TOL {
                    let ratio = self.rhs(i) / a;
                    leave = match leave {
                        None => Some((i, ratio)),
                        Some((j, best)) => {
                            if ratio < best - PIVOT_TOL
                                || (ratio <= best + PIVOT_TOL && self.basis[i] < self.basis[j])
                            {
                                Some((i, ratio))
                            } else {
                                Some((j, best))
                            }
                        }
                    };
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

/// Solves a program whose variables are all nonnegative.
pub fn solve_lp(program: &LinearProgram) -> Result<LpSolution> {
    program.validate()?;
    if program.objective_form != ObjectiveForm::Linear {
        return Err(Error::MalformedProgram("absolute-value objective; apply abs_value_transform first".into()));
    }
    if program.nonneg.iter().any(|&b| !b) {
        return Err(Error::MalformedProgram("free variables; apply abs_value_transform first".into()));
    }

    let n = program.num_vars;
    let m = program.constraints.len();
    let slack_count = program.constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let mut needs_artificial = Vec::with_capacity(m);
    for c in &program.constraints {
        let flipped = c.rhs < 0.0;
        let rel = match (c.relation, flipped) {
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
            (r, _) => r,
        };
        needs_artificial.push(rel != Relation::Le);
    }
    let art_count = needs_artificial.iter().filter(|&&b| b).count();
    let art_start = n + slack_count;
    let width = art_start + art_count;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut slack, mut art) = (n, art_start);
    for c in &program.constraints {
        let sign = if c.rhs < 0.0 { -1.0 } else { 1.0 };
        let mut row = vec![0.0; width + 1];
        for (j, &a) in c.coeffs.iter().enumerate() {
            row[j] = sign * a;
        }
        row[width] = sign * c.rhs;
        let rel = match (c.relation, sign < 0.0) {
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
            (r, _) => r,
        };
        match rel {
            Relation::Le => {
                row[slack] = 1.0;
                basis.push(slack);
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -1.0;
                slack += 1;
                row[art] = 1.0;
                basis.push(art);
                art += 1;
            }
            Relation::Eq => {
                row[art] = 1.0;
                basis.push(art);
                art += 1;
            }
        }
        rows.push(row);
    }

    let mut t = Tableau { rows, cost: vec![0.0; width + 1], basis, width };

    if art_count > 0 {
        for j in art_start..width {
            t.cost[j] = 1.0;
        }
        for i in 0..m {
            if t.basis[i] >= art_start {
                for j in 0..=width {
                    t.cost[j] -= t.rows[i][j];
                }
            }
        }
        t.optimize(width);
        if -t.cost[width] > FEAS_TOL {
            return Ok(LpSolution { status: LpStatus::Infeasible, values: Vec::new(), objective: f64::NAN });
        }
        for i in 0..m {
            if t.basis[i] >= art_start {
                if let Some(col) = (0..art_start).find(|&j| t.rows[i][j].abs() > PIVOT_TOL) {
                    t.pivot(i, col);
                }
            }
        }
    }

    // phase two: reduced costs of the real objective
    t.cost = vec![0.0; width + 1];
    t.cost[..n].copy_from_slice(&program.objective);
    for i in 0..m {
        let cb = if t.basis[i] < n { program.objective[t.basis[i]] } else { 0.0 };
        if cb != 0.0 {
            for j in 0..=width {
                t.cost[j] -= cb * t.rows[i][j];
            }
        }
    }
    if !t.optimize(art_start) {
        return Ok(LpSolution { status: LpStatus::Unbounded, values: Vec::new(), objective: f64::NEG_INFINITY });
    }

    let mut values = vec![0.0; n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            values[b] = t.rhs(i).max(0.0);
        }
    }
    let objective = values.iter().zip(&program.objective).map(|(x, c)| x * c).sum();
    Ok(LpSolution { status: LpStatus::Optimal, values, objective })
}
