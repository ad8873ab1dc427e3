//! Small dense linear programs.
//!
//! Two-phase tableau simplex with Bland's anti-cycling rule, sized for the
//! handful of variables that convex-hull membership over a few-state
//! simplex needs.

use crate::error::{Error, Result};

const PIVOT_TOL: f64 = 1e-12;
const COST_TOL: f64 = 1e-11;
const FEAS_TOL: f64 = 1e-9;
const MAX_ITER: usize = 50_000;

/// `minimize c.x subject to A x = b, x >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub cost: Vec<f64>,
    pub rows: Vec<Vec<f64>>,
    pub rhs: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<f64>, value: f64 },
    Infeasible,
    Unbounded,
}

struct Tableau {
    t: Vec<Vec<f64>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> f64 {
        self.t[i][self.cols]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.t[row][col];
        self.t[row].iter_mut().for_each(|v| *v /= p);
        let pivot_row = self.t[row].clone();
        for (i, r) in self.t.iter_mut().enumerate() {
            if i == row {
                continue;
            }
            let factor = r[col];
            if factor != 0.0 {
                r.iter_mut()
                    .zip(&pivot_row)
                    .for_each(|(v, pv)| *v -= factor * pv);
            }
        }
        self.basis[row] = col;
    }

    /// Runs simplex iterations for `cost` over columns `< active`.
    fn optimize(&mut self, cost: &[f64], active: usize) -> Result<bool> {
        for _ in 0..MAX_ITER {
            let entering = (0..active).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let reduced = cost[j]
                    - self
                        .basis
                        .iter()
                        .enumerate()
                        .map(|(i, &bj)| cost[bj] * self.t[i][j])
                        .sum::<f64>();
                reduced < -COST_TOL
            });
            let Some(col) = entering else {
                return Ok(true);
            };
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..self.t.len() {
                let a = self.t[i][col];
                if a > PIVOT_TOL {
                    let ratio = self.rhs(i) / a;
                    leave = match leave {
                        None => Some((i, ratio)),
                        Some((li, lr)) => {
                            if ratio < lr - PIVOT_TOL
                                || (ratio <= lr + PIVOT_TOL && self.basis[i] < self.basis[li])
                            {
                                Some((i, ratio))
                            } else {
                                Some((li, lr))
                            }
                        }
                    };
                }
            }
            match leave {
                None => return Ok(false),
                Some((row, _)) => self.pivot(row, col),
            }
        }
        Err(Error::Solver("iteration limit reached".into()))
    }
}

pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    let n = lp.cost.len();
    let m = lp.rows.len();
    if lp.rhs.len() != m || lp.rows.iter().any(|r| r.len() != n) {
        return Err(Error::Solver("inconsistent program dimensions".into()));
    }
    let cols = n + m;
    let mut t = Vec::with_capacity(m);
    for (i, (row, &b)) in lp.rows.iter().zip(&lp.rhs).enumerate() {
        let sign = if b < 0.0 { -1.0 } else { 1.0 };
        let mut r = vec![0.0; cols + 1];
        for (j, &a) in row.iter().enumerate() {
            r[j] = sign * a;
        }
        r[n + i] = 1.0;
        r[cols] = sign * b;
        t.push(r);
    }
    let mut tab = Tableau {
        t,
        basis: (n..n + m).collect(),
        cols,
    };

    let mut phase1 = vec![0.0; cols];
    phase1[n..].iter_mut().for_each(|c| *c = 1.0);
    tab.optimize(&phase1, cols)?;
    let infeasibility: f64 = tab
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &bj)| bj >= n)
        .map(|(i, _)| tab.rhs(i))
        .sum();
    if infeasibility > FEAS_TOL {
        return Ok(LpOutcome::Infeasible);
    }

    // Drive remaining artificials out; drop rows that are redundant.
    let mut i = 0;
    while i < tab.t.len() {
        if tab.basis[i] >= n {
            match (0..n).find(|&j| tab.t[i][j].abs() > PIVOT_TOL) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.t.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut phase2 = lp.cost.clone();
    phase2.resize(cols, 0.0);
    if !tab.optimize(&phase2, n)? {
        return Ok(LpOutcome::Unbounded);
    }
    let mut x = vec![0.0; n];
    for (i, &bj) in tab.basis.iter().enumerate() {
        if bj < n {
            x[bj] = tab.rhs(i).max(0.0);
        }
    }
    let value = x.iter().zip(&lp.cost).map(|(a, c)| a * c).sum();
    Ok(LpOutcome::Optimal { x, value })
}

/// Best convex combination of `points` approximating `target`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexFit {
    pub weights: Vec<f64>,
    /// Largest coordinate error of the combination.
    pub slack: f64,
}

/// Minimizes the max-norm error `t` of `sum_i w_i p_i` against `target`
/// over the simplex of weights.
pub fn convex_fit(points: &[&[f64]], target: &[f64]) -> Result<ConvexFit> {
    let k = points.len();
    let d = target.len();
    if k == 0 {
        return Err(Error::Solver("no points".into()));
    }
    if points.iter().any(|p| p.len() != d) {
        return Err(Error::Solver("point dimension mismatch".into()));
    }
    // variables: w (k), t, upper slacks (d), lower surpluses (d)
    let nvar = k + 1 + 2 * d;
    let mut rows = Vec::with_capacity(2 * d + 1);
    let mut rhs = Vec::with_capacity(2 * d + 1);
    for s in 0..d {
        let mut upper = vec![0.0; nvar];
        let mut lower = vec![0.0; nvar];
        for (i, p) in points.iter().enumerate() {
            upper[i] = p[s];
            lower[i] = p[s];
        }
        upper[k] = -1.0;
        upper[k + 1 + s] = 1.0;
        lower[k] = 1.0;
        lower[k + 1 + d + s] = -1.0;
        rows.push(upper);
        rhs.push(target[s]);
        rows.push(lower);
        rhs.push(target[s]);
    }
    let mut simplex_row = vec![0.0; nvar];
    simplex_row[..k].iter_mut().for_each(|v| *v = 1.0);
    rows.push(simplex_row);
    rhs.push(1.0);
    let mut cost = vec![0.0; nvar];
    cost[k] = 1.0;

    match solve(&LinearProgram { cost, rows, rhs })? {
        LpOutcome::Optimal { x, .. } => {
            let weights = x[..k].to_vec();
            // report the realized error rather than the solver's t
            let slack = (0..d)
                .map(|s| {
                    let v: f64 = points.iter().zip(&weights).map(|(p, w)| w * p[s]).sum();
                    (v - target[s]).abs()
                })
                .fold(0.0, f64::max);
            Ok(ConvexFit { weights, slack })
        }
        other => Err(Error::Solver(format!("convex fit ended as {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_textbook_program() {
        // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
        let lp = LinearProgram {
            cost: vec![-1.0, -1.0, 0.0, 0.0],
            rows: vec![vec![1.0, 2.0, 1.0, 0.0], vec![3.0, 1.0, 0.0, 1.0]],
            rhs: vec![4.0, 6.0],
        };
        match solve(&lp).unwrap() {
            LpOutcome::Optimal { x, value } => {
                assert!((x[0] - 1.6).abs() < 1e-12);
                assert!((x[1] - 1.2).abs() < 1e-12);
                assert!((value + 2.8).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let lp = LinearProgram {
            cost: vec![0.0, 0.0],
            rows: vec![vec![1.0, 1.0], vec![1.0, 1.0]],
            rhs: vec![1.0, 2.0],
        };
        assert_eq!(solve(&lp).unwrap(), LpOutcome::Infeasible);
        let lp = LinearProgram {
            cost: vec![-1.0, 0.0],
            rows: vec![vec![1.0, -1.0]],
            rhs: vec![0.0],
        };
        assert_eq!(solve(&lp).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn handles_redundant_rows() {
        let lp = LinearProgram {
            cost: vec![1.0, 2.0],
            rows: vec![vec![1.0, 1.0], vec![2.0, 2.0]],
            rhs: vec![1.0, 2.0],
        };
        match solve(&lp).unwrap() {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x, vec![1.0, 0.0]);
                assert_eq!(value, 1.0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn convex_fit_inside_and_outside() {
        let a = [1.0, 0.0, 0.0];
        let b = [0.0, 1.0, 0.0];
        let c = [0.0, 0.0, 1.0];
        let pts: Vec<&[f64]> = vec![&a, &b, &c];
        let fit = convex_fit(&pts, &[0.2, 0.3, 0.5]).unwrap();
        assert!(fit.slack < 1e-12);
        assert!((fit.weights[2] - 0.5).abs() < 1e-12);

        let pts: Vec<&[f64]> = vec![&a, &b];
        let fit = convex_fit(&pts, &[0.2, 0.3, 0.5]).unwrap();
        // nearest point of the edge in max-norm misses the third coordinate
        assert!(fit.slack > 0.1);
    }
}
