//! Exact rational linear programming over inequality systems.
//!
//! Two-phase primal simplex with Bland's rule; all pivots are exact, so the
//! solver terminates and never misclassifies feasibility. Sized for desk-scale
//! instances (tens of constraints), which is all this crate needs.


use crate::linalg::QVector;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, point: QVector },
}

struct Tableau {
    cols: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, j: usize, red: &mut [Rational], val: &mut Rational) {
        let inv = self.rows[r][j].recip();
        for c in 0..self.cols {
            let v = &self.rows[r][c] * &inv;
            self.rows[r][c] = v;
        }
        self.rhs[r] = &self.rhs[r] * &inv;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][j].is_zero() {
                continue;
            }
            let factor = self.rows[i][j].clone();
            for c in 0..self.cols {
                let v = &self.rows[i][c] - &(&factor * &self.rows[r][c]);
                self.rows[i][c] = v;
            }
            self.rhs[i] = &self.rhs[i] - &(&factor * &self.rhs[r]);
        }
        if !red[j].is_zero() {
            let factor = red[j].clone();
            for c in 0..self.cols {
                red[c] = &red[c] - &(&factor * &self.rows[r][c]);
            }
            *val = &*val + &(&factor * &self.rhs[r]);
        }
        self.basis[r] = j;
    }

    /// Runs simplex to optimality for the given reduced costs. Columns with
    /// index >= `banned_from` never enter the basis. Returns false on
    /// unboundedness.
    fn solve(&mut self, red: &mut [Rational], val: &mut Rational, banned_from: usize) -> bool {
        loop {
            // Bland's rule: first improving column.
            let Some(j) = (0..banned_from).find(|&j| red[j].is_positive()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][j].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, j, red, val),
                None => return false,
            }
        }
    }

    fn price(&self, costs: &[Rational]) -> (Vec<Rational>, Rational) {
        let mut red = costs.to_vec();
        let mut val = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            if costs[b].is_zero() {
                continue;
            }
            let cb = costs[b].clone();
            for c in 0..self.cols {
                red[c] = &red[c] - &(&cb * &self.rows[i][c]);
            }
            val = val + &cb * &self.rhs[i];
        }
        (red, val)
    }
}

/// Maximizes `objective . x` subject to `normal . x <= offset` for each
/// constraint; variables are free.
pub fn maximize(objective: &QVector, constraints: &[(QVector, Rational)]) -> LpOutcome {
    let n = objective.dim();
    let m = constraints.len();
    // Columns: x+ (n), x- (n), slack (m), artificial (m).
    let art_start = 2 * n + m;
    let cols = 2 * n + 2 * m;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, (a, b)) in constraints.iter().enumerate() {
        debug_assert_eq!(a.dim(), n);
        let flip = b.is_negative();
        let mut row = vec![Rational::zero(); cols];
        for k in 0..n {
            let coeff = if flip { -&a[k] } else { a[k].clone() };
            row[n + k] = -&coeff;
            row[k] = coeff;
        }
        row[2 * n + i] = if flip {
            -Rational::one()
        } else {
            Rational::one()
        };
        row[art_start + i] = Rational::one();
        rows.push(row);
        rhs.push(if flip { -b } else { b.clone() });
    }
    let basis = (0..m).map(|i| art_start + i).collect();
    let mut t = Tableau {
        cols,
        rows,
        rhs,
        basis,
    };

    // Phase 1: maximize minus the sum of artificials.
    let mut phase1 = vec![Rational::zero(); cols];
    for c in art_start..cols {
        phase1[c] = -Rational::one();
    }
    let (mut red, mut val) = t.price(&phase1);
    let ok = t.solve(&mut red, &mut val, cols);
    debug_assert!(ok, "phase 1 is bounded by construction");
    if val.is_negative() {
        return LpOutcome::Infeasible;
    }
    // Drive leftover artificials out of the basis; drop redundant rows.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= art_start {
            debug_assert!(t.rhs[r].is_zero());
            match (0..art_start).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => {
                    let mut dummy_val = Rational::zero();
                    let mut dummy_red = vec![Rational::zero(); t.cols];
                    t.pivot(r, j, &mut dummy_red, &mut dummy_val);
                }
                None => {
                    t.rows.swap_remove(r);
                    t.rhs.swap_remove(r);
                    t.basis.swap_remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // Phase 2 with the real objective.
    let mut phase2 = vec![Rational::zero(); cols];
    for k in 0..n {
        phase2[k] = objective[k].clone();
        phase2[n + k] = -&objective[k];
    }
    let (mut red, mut val) = t.price(&phase2);
    if !t.solve(&mut red, &mut val, art_start) {
        return LpOutcome::Unbounded;
    }
    let mut point = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            point[b] = &point[b] + &t.rhs[i];
        } else if b < 2 * n {
            point[b - n] = &point[b - n] - &t.rhs[i];
        }
    }
    LpOutcome::Optimal {
        value: val,
        point: QVector::new(point),
    }
}

/// Decides whether the system `normal . x <= offset` admits a solution with
/// every `strict` constraint satisfied strictly, returning one if so.
///
/// Solved by maximizing a shared slack `t` added to each strict constraint,
/// capped at 1; the strict system is solvable iff the optimum is positive.
pub fn strictly_feasible_point(
    weak: &[(QVector, Rational)],
    strict: &[(QVector, Rational)],
) -> Option<QVector> {
    let n = weak
        .iter()
        .chain(strict.iter())
        .map(|(a, _)| a.dim())
        .next()?;
    let mut constraints: Vec<(QVector, Rational)> = Vec::new();
    let lift = |a: &QVector, t_coeff: i64| {
        let mut c: Vec<Rational> = a.coords().to_vec();
        c.push(Rational::from_int(t_coeff));
        QVector::new(c)
    };
    for (a, b) in weak {
        constraints.push((lift(a, 0), b.clone()));
    }
    for (a, b) in strict {
        constraints.push((lift(a, 1), b.clone()));
    }
    constraints.push((lift(&QVector::zeros(n), 1), Rational::one()));
    let mut objective = QVector::zeros(n + 1);
    objective = {
        let mut c = objective.coords().to_vec();
        c[n] = Rational::one();
        QVector::new(c)
    };
    match maximize(&objective, &constraints) {
        LpOutcome::Optimal { value, point } if value.is_positive() => {
            Some(QVector::new(point.coords()[..n].to_vec()))
        }
        _ => None,
    }
}
