//! Exact rational linear programming.
//!
//! Dense-tableau primal simplex over [`Rat`], two-phase, with Bland's
//! anti-cycling rule always on. Correctness and determinism are preferred
//! over speed: pivot choices break ties by lowest index, so a fixed input
//! yields a byte-for-byte reproducible outcome, and all arithmetic is exact.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rat;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

/// One linear constraint `coeffs · x  relation  rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub rhs: Rat,
}

/// A linear program over variables `x_0 .. x_{n-1}`.
///
/// Each variable has lower bound 0 unless its entry in `free` is true, in
/// which case it is unbounded in both directions. There are no other bounds;
/// encode them as constraints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearProgram {
    pub direction: Direction,
    pub objective: Vec<Rat>,
    pub constraints: Vec<Constraint>,
    pub free: Vec<bool>,
}

impl LinearProgram {
    /// A program whose variables all have lower bound 0.
    pub fn new(direction: Direction, objective: Vec<Rat>) -> Self {
        let n = objective.len();
        LinearProgram {
            direction,
            objective,
            constraints: Vec::new(),
            free: vec![false; n],
        }
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rat>, relation: Relation, rhs: Rat) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if self.free.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.free.len(),
            });
        }
        for c in &self.constraints {
            if c.coeffs.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.coeffs.len(),
                });
            }
        }
        Ok(())
    }
}

/// Result of an exact solve, with enough data to re-verify it independently.
///
/// * `Optimal`: the point satisfies every constraint and bound exactly and
///   `value` is its exact objective value.
/// * `Infeasible`: `farkas[k]` is a multiplier for constraint `k` read with
///   every `<=` row rewritten as `>=` (coefficients and rhs negated).
///   Multipliers on inequality rows are nonnegative; equality rows may carry
///   either sign. The combined row `Σ farkas[k] · row_k` has nonpositive
///   coefficients on every `x >= 0` variable, zero on every free variable,
///   and a strictly positive right-hand side, which no feasible point can
///   satisfy.
/// * `Unbounded`: from any feasible point, moving along `ray` forever stays
///   feasible and strictly improves the objective.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LPOutcome {
    Optimal { value: Rat, point: Vec<Rat> },
    Infeasible { farkas: Vec<Rat> },
    Unbounded { ray: Vec<Rat> },
}

/// Solves the program exactly. Deterministic: a fixed input always produces
/// the identical outcome.
pub fn solve(lp: &LinearProgram) -> Result<LPOutcome> {
    Ok(solve_with_duals(lp)?.0)
}

/// Like [`solve`], but an `Optimal` outcome also reports the exact dual value
/// of every constraint (multipliers `y` with `y · b` equal to the optimum).
pub fn solve_with_duals(lp: &LinearProgram) -> Result<(LPOutcome, Option<Vec<Rat>>)> {
    lp.validate()?;
    let mut tableau = Tableau::build(lp);
    if let Some(farkas) = tableau.phase_one(lp) {
        return Ok((LPOutcome::Infeasible { farkas }, None));
    }
    match tableau.phase_two(lp) {
        PhaseTwo::Optimal => {
            let point = tableau.extract_point(lp);
            let value: Rat = lp
                .objective
                .iter()
                .zip(&point)
                .map(|(c, x)| c * x)
                .sum();
            let duals = tableau.extract_duals(lp);
            Ok((LPOutcome::Optimal { value, point }, Some(duals)))
        }
        PhaseTwo::Unbounded { entering } => {
            let ray = tableau.extract_ray(lp, entering);
            Ok((LPOutcome::Unbounded { ray }, None))
        }
    }
}

/// Re-verifies an outcome against the program by direct substitution. No
/// solver state is reused: feasibility, certificate sign conditions and the
/// reported value are all recomputed from scratch.
///
/// For `Optimal` this confirms exact feasibility and that `value` is the
/// objective at `point` (optimality itself is established by the caller's
/// primal/dual pair, as in the balance module).
pub fn check_outcome(lp: &LinearProgram, outcome: &LPOutcome) -> bool {
    if lp.validate().is_err() {
        return false;
    }
    match outcome {
        LPOutcome::Optimal { value, point } => {
            if point.len() != lp.num_vars() {
                return false;
            }
            for (j, x) in point.iter().enumerate() {
                if !lp.free[j] && x.is_negative() {
                    return false;
                }
            }
            for c in &lp.constraints {
                let lhs: Rat = c.coeffs.iter().zip(point).map(|(a, x)| a * x).sum();
                let ok = match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                };
                if !ok {
                    return false;
                }
            }
            let obj: Rat = lp.objective.iter().zip(point).map(|(c, x)| c * x).sum();
            obj == *value
        }
        LPOutcome::Infeasible { farkas } => {
            if farkas.len() != lp.constraints.len() {
                return false;
            }
            for (c, m) in lp.constraints.iter().zip(farkas) {
                if c.relation != Relation::Eq && m.is_negative() {
                    return false;
                }
            }
            // combined row of the >=-normalized system
            let mut combined = vec![Rat::zero(); lp.num_vars()];
            let mut rhs = Rat::zero();
            for (c, m) in lp.constraints.iter().zip(farkas) {
                let sign = match c.relation {
                    Relation::Le => -Rat::one(),
                    Relation::Ge | Relation::Eq => Rat::one(),
                };
                let factor = m * &sign;
                for (acc, a) in combined.iter_mut().zip(&c.coeffs) {
                    *acc += a * &factor;
                }
                rhs += &c.rhs * &factor;
            }
            for (j, d) in combined.iter().enumerate() {
                let ok = if lp.free[j] {
                    d.is_zero()
                } else {
                    !d.is_positive()
                };
                if !ok {
                    return false;
                }
            }
            rhs.is_positive()
        }
        LPOutcome::Unbounded { ray } => {
            if ray.len() != lp.num_vars() {
                return false;
            }
            for (j, r) in ray.iter().enumerate() {
                if !lp.free[j] && r.is_negative() {
                    return false;
                }
            }
            for c in &lp.constraints {
                let along: Rat = c.coeffs.iter().zip(ray).map(|(a, r)| a * r).sum();
                let ok = match c.relation {
                    Relation::Le => !along.is_positive(),
                    Relation::Ge => !along.is_negative(),
                    Relation::Eq => along.is_zero(),
                };
                if !ok {
                    return false;
                }
            }
            let gain: Rat = lp.objective.iter().zip(ray).map(|(c, r)| c * r).sum();
            match lp.direction {
                Direction::Maximize => gain.is_positive(),
                Direction::Minimize => gain.is_negative(),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// internal tableau
// ---------------------------------------------------------------------------

/// How one internal column maps back to the program.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Col {
    /// Positive part of original variable `j`.
    Pos(usize),
    /// Negative part of a free original variable `j`.
    Neg(usize),
    /// Slack of internal row `k` (`<=` rows).
    Slack(usize),
    /// Surplus of internal row `k` (`>=` rows).
    Surplus(usize),
    /// Artificial of internal row `k`.
    Artificial(usize),
}

enum PhaseTwo {
    Optimal,
    Unbounded { entering: usize },
}

struct Tableau {
    /// rows[k][j] for the equality-form system; rhs kept separately.
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    /// Reduced costs of the current phase objective.
    cost: Vec<Rat>,
    /// The phase objective as installed, before pricing out the basis. The
    /// dual of row k is `installed_cost[u] - cost[u]` for any unit column u
    /// of that row.
    installed_cost: Vec<Rat>,
    /// Current phase objective value (c_B B⁻¹ b).
    value: Rat,
    basis: Vec<usize>,
    cols: Vec<Col>,
    /// Row scaling applied to reach rhs >= 0: internal row k is
    /// `row_scale[k] ×` original row k.
    row_scale: Vec<Rat>,
    /// Internal relation of each row after scaling.
    row_rel: Vec<Relation>,
    /// Original index of each surviving internal row; phase one may drop
    /// redundant rows but never reorders them.
    surviving_rows: Vec<usize>,
    /// Whether phase one ran (artificial columns exist and are banned from
    /// re-entering afterwards).
    has_artificials: bool,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let m = lp.constraints.len();

        let mut cols = Vec::new();
        for j in 0..lp.num_vars() {
            cols.push(Col::Pos(j));
            if lp.free[j] {
                cols.push(Col::Neg(j));
            }
        }

        let mut row_scale = Vec::with_capacity(m);
        let mut row_rel = Vec::with_capacity(m);
        for c in &lp.constraints {
            let mut scale = Rat::one();
            let mut rel = c.relation;
            // normalize to rhs >= 0; a >= row with zero rhs flips to <= so its
            // slack can start in the basis
            if c.rhs.is_negative() || (c.rhs.is_zero() && rel == Relation::Ge) {
                scale = -Rat::one();
                rel = match rel {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
            }
            row_scale.push(scale);
            row_rel.push(rel);
        }

        for (k, rel) in row_rel.iter().enumerate() {
            match rel {
                Relation::Le => cols.push(Col::Slack(k)),
                Relation::Ge => cols.push(Col::Surplus(k)),
                Relation::Eq => {}
            }
        }
        let mut has_artificials = false;
        for (k, rel) in row_rel.iter().enumerate() {
            if *rel != Relation::Le {
                has_artificials = true;
                cols.push(Col::Artificial(k));
            }
        }

        let ncols = cols.len();
        let mut rows = vec![vec![Rat::zero(); ncols]; m];
        let mut rhs = Vec::with_capacity(m);
        let mut basis = vec![usize::MAX; m];
        for (k, c) in lp.constraints.iter().enumerate() {
            for (j, col) in cols.iter().enumerate() {
                rows[k][j] = match *col {
                    Col::Pos(v) => &c.coeffs[v] * &row_scale[k],
                    Col::Neg(v) => -(&c.coeffs[v] * &row_scale[k]),
                    Col::Slack(r) if r == k => Rat::one(),
                    Col::Surplus(r) if r == k => -Rat::one(),
                    Col::Artificial(r) if r == k => Rat::one(),
                    _ => Rat::zero(),
                };
                match *col {
                    Col::Slack(r) | Col::Artificial(r) if r == k => basis[k] = j,
                    _ => {}
                }
            }
            rhs.push(&c.rhs * &row_scale[k]);
        }
        debug_assert!(basis.iter().all(|&b| b != usize::MAX));

        Tableau {
            rows,
            rhs,
            cost: vec![Rat::zero(); ncols],
            installed_cost: vec![Rat::zero(); ncols],
            value: Rat::zero(),
            basis,
            cols,
            row_scale,
            row_rel,
            surviving_rows: (0..m).collect(),
            has_artificials,
        }
    }

    /// Installs a phase objective (minimization) and prices out the basis.
    fn install_cost(&mut self, cost: Vec<Rat>) {
        self.installed_cost = cost.clone();
        self.cost = cost;
        self.value = Rat::zero();
        for (k, &b) in self.basis.iter().enumerate() {
            if !self.cost[b].is_zero() {
                let factor = self.cost[b].clone();
                for j in 0..self.cost.len() {
                    let delta = &self.rows[k][j] * &factor;
                    self.cost[j] -= delta;
                }
                self.value += &factor * &self.rhs[k];
            }
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v = &*v / &pivot;
        }
        self.rhs[row] = &self.rhs[row] / &pivot;
        for k in 0..self.rows.len() {
            if k == row || self.rows[k][col].is_zero() {
                continue;
            }
            let factor = self.rows[k][col].clone();
            for j in 0..self.cols.len() {
                let delta = &self.rows[row][j] * &factor;
                self.rows[k][j] -= delta;
            }
            let delta = &self.rhs[row] * &factor;
            self.rhs[k] -= delta;
        }
        if !self.cost[col].is_zero() {
            let factor = self.cost[col].clone();
            for j in 0..self.cols.len() {
                let delta = &self.rows[row][j] * &factor;
                self.cost[j] -= delta;
            }
            self.value += &factor * &self.rhs[row];
        }
        self.basis[row] = col;
    }

    /// Minimizes the installed cost with Bland's rule: the entering column is
    /// the lowest-index one with negative reduced cost, the leaving row is
    /// the ratio-test minimum with ties broken by lowest basis variable.
    /// Returns the entering column if the program is unbounded.
    fn run_simplex(&mut self, allow: impl Fn(&Col) -> bool) -> Option<usize> {
        loop {
            let entering = (0..self.cols.len())
                .find(|&j| allow(&self.cols[j]) && self.cost[j].is_negative());
            let entering = match entering {
                Some(j) => j,
                None => return None,
            };
            let mut leave: Option<(usize, Rat)> = None;
            for k in 0..self.rows.len() {
                if !self.rows[k][entering].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[k] / &self.rows[k][entering];
                let better = match &leave {
                    None => true,
                    Some((best_k, best)) => {
                        ratio < *best || (ratio == *best && self.basis[k] < self.basis[*best_k])
                    }
                };
                if better {
                    leave = Some((k, ratio));
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, entering),
                None => return Some(entering),
            }
        }
    }

    /// Runs phase one if artificials are present. Returns the Farkas
    /// certificate when the program is infeasible.
    fn phase_one(&mut self, lp: &LinearProgram) -> Option<Vec<Rat>> {
        if !self.has_artificials {
            return None;
        }
        let cost: Vec<Rat> = self
            .cols
            .iter()
            .map(|c| match c {
                Col::Artificial(_) => Rat::one(),
                _ => Rat::zero(),
            })
            .collect();
        self.install_cost(cost);
        let unbounded = self.run_simplex(|_| true);
        debug_assert!(unbounded.is_none(), "phase one is bounded below by 0");

        if self.value.is_positive() {
            return Some(self.extract_farkas(lp));
        }

        // Drive leftover artificials out of the basis; their values are 0, so
        // pivoting on any nonzero entry of a genuine column keeps feasibility.
        // A row without such an entry is redundant and is dropped.
        let mut k = 0;
        while k < self.rows.len() {
            if matches!(self.cols[self.basis[k]], Col::Artificial(_)) {
                let replacement = (0..self.cols.len()).find(|&j| {
                    !matches!(self.cols[j], Col::Artificial(_)) && !self.rows[k][j].is_zero()
                });
                match replacement {
                    Some(j) => self.pivot(k, j),
                    None => {
                        self.rows.remove(k);
                        self.rhs.remove(k);
                        self.basis.remove(k);
                        self.surviving_rows.remove(k);
                        continue;
                    }
                }
            }
            k += 1;
        }
        // Artificial columns stay in the tableau (their reduced costs recover
        // dual values for equality rows) but are banned from re-entering.
        None
    }

    fn phase_two(&mut self, lp: &LinearProgram) -> PhaseTwo {
        // internally always minimize; maximization negates the objective
        let cost: Vec<Rat> = self
            .cols
            .iter()
            .map(|col| {
                let c = match *col {
                    Col::Pos(j) => lp.objective[j].clone(),
                    Col::Neg(j) => -lp.objective[j].clone(),
                    _ => Rat::zero(),
                };
                match lp.direction {
                    Direction::Minimize => c,
                    Direction::Maximize => -c,
                }
            })
            .collect();
        self.install_cost(cost);
        match self.run_simplex(|c| !matches!(c, Col::Artificial(_))) {
            None => PhaseTwo::Optimal,
            Some(entering) => PhaseTwo::Unbounded { entering },
        }
    }

    fn column_values(&self) -> Vec<Rat> {
        let mut vals = vec![Rat::zero(); self.cols.len()];
        for (k, &b) in self.basis.iter().enumerate() {
            vals[b] = self.rhs[k].clone();
        }
        vals
    }

    fn extract_point(&self, lp: &LinearProgram) -> Vec<Rat> {
        let vals = self.column_values();
        let mut point = vec![Rat::zero(); lp.num_vars()];
        for (j, col) in self.cols.iter().enumerate() {
            match *col {
                Col::Pos(v) => point[v] += &vals[j],
                Col::Neg(v) => point[v] -= &vals[j],
                _ => {}
            }
        }
        point
    }

    fn extract_ray(&self, lp: &LinearProgram, entering: usize) -> Vec<Rat> {
        let mut dir = vec![Rat::zero(); self.cols.len()];
        dir[entering] = Rat::one();
        for (k, &b) in self.basis.iter().enumerate() {
            dir[b] = -self.rows[k][entering].clone();
        }
        let mut ray = vec![Rat::zero(); lp.num_vars()];
        for (j, col) in self.cols.iter().enumerate() {
            match *col {
                Col::Pos(v) => ray[v] += &dir[j],
                Col::Neg(v) => ray[v] -= &dir[j],
                _ => {}
            }
        }
        ray
    }

    /// Dual multipliers (y = c_B B⁻¹) per original row, recovered from the
    /// reduced cost under each row's unit column: for a unit column u of row
    /// k, cost[u] = installed_cost[u] - y_k. Rows dropped as redundant in
    /// phase one get multiplier 0.
    fn internal_duals(&self) -> Vec<Rat> {
        let total = self.row_scale.len();
        let mut position = vec![None; total];
        for (p, &orig) in self.surviving_rows.iter().enumerate() {
            position[orig] = Some(p);
        }
        let mut y: Vec<Option<Rat>> = vec![None; total];
        for (j, col) in self.cols.iter().enumerate() {
            let (k, unit_sign) = match *col {
                Col::Slack(k) => (k, 1),
                Col::Surplus(k) => (k, -1),
                Col::Artificial(k) => (k, 1),
                _ => continue,
            };
            if position[k].is_none() || y[k].is_some() {
                continue;
            }
            // column is ±e_k, so cost[j] = installed[j] ∓ y_k
            let diff = &self.installed_cost[j] - &self.cost[j];
            y[k] = Some(if unit_sign == 1 { diff } else { -diff });
        }
        y.into_iter()
            .map(|v| v.unwrap_or_else(Rat::zero))
            .collect()
    }

    /// Farkas certificate at a positive phase-one optimum, expressed as
    /// multipliers of the >=-normalized original rows.
    fn extract_farkas(&self, lp: &LinearProgram) -> Vec<Rat> {
        let y = self.internal_duals();
        let mut farkas = Vec::with_capacity(lp.constraints.len());
        for (k, c) in lp.constraints.iter().enumerate() {
            // multiplier on the original row in its own orientation
            let m = &y[k] * &self.row_scale[k];
            farkas.push(match c.relation {
                Relation::Le => -m,
                Relation::Ge | Relation::Eq => m,
            });
        }
        farkas
    }

    /// Dual values at phase-two optimality, oriented so that y · rhs equals
    /// the reported optimum for either direction.
    fn extract_duals(&self, lp: &LinearProgram) -> Vec<Rat> {
        let y = self.internal_duals();
        (0..lp.constraints.len())
            .map(|k| {
                let m = &y[k] * &self.row_scale[k];
                match lp.direction {
                    Direction::Minimize => m,
                    Direction::Maximize => -m,
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn lp_max_x_le_1() -> LinearProgram {
        let mut lp = LinearProgram::new(Direction::Maximize, vec![Rat::one()]);
        lp.add_constraint(vec![Rat::one()], Relation::Le, Rat::one());
        lp
    }

    #[test]
    fn one_dimensional_maximum() {
        let outcome = solve(&lp_max_x_le_1()).unwrap();
        assert_eq!(
            outcome,
            LPOutcome::Optimal {
                value: Rat::one(),
                point: vec![Rat::one()]
            }
        );
        assert!(check_outcome(&lp_max_x_le_1(), &outcome));
    }

    #[test]
    fn infeasible_program_yields_farkas_certificate() {
        let mut lp = LinearProgram::new(Direction::Minimize, vec![Rat::zero()]);
        lp.add_constraint(vec![Rat::one()], Relation::Le, -Rat::one());
        let outcome = solve(&lp).unwrap();
        match &outcome {
            LPOutcome::Infeasible { farkas } => assert_eq!(farkas.len(), 1),
            other => panic!("expected infeasible, got {other:?}"),
        }
        assert!(check_outcome(&lp, &outcome));
    }

    #[test]
    fn farkas_combination_recomputed_by_hand() {
        // x1 + x2 >= 3 and x1 + x2 <= 1 contradict each other
        let mut lp = LinearProgram::new(Direction::Minimize, vec![Rat::zero(), Rat::zero()]);
        lp.add_constraint(vec![Rat::one(), Rat::one()], Relation::Ge, rat(3, 1));
        lp.add_constraint(vec![Rat::one(), Rat::one()], Relation::Le, Rat::one());
        let outcome = solve(&lp).unwrap();
        let farkas = match &outcome {
            LPOutcome::Infeasible { farkas } => farkas.clone(),
            other => panic!("expected infeasible, got {other:?}"),
        };
        assert!(farkas.iter().all(|m| !m.is_negative()));
        // combined >=-row: (f0 - f1)·(x1+x2) >= 3 f0 - f1 with nonpositive
        // coefficients and positive rhs
        let coeff = &farkas[0] - &farkas[1];
        let rhs = rat(3, 1) * &farkas[0] - &farkas[1] * &Rat::one();
        assert!(!coeff.is_positive());
        assert!(rhs.is_positive());
        assert!(check_outcome(&lp, &outcome));
    }

    #[test]
    fn unbounded_program_yields_improving_ray() {
        let mut lp = LinearProgram::new(Direction::Maximize, vec![Rat::one(), Rat::zero()]);
        lp.add_constraint(vec![-Rat::one(), Rat::one()], Relation::Le, rat(2, 1));
        let outcome = solve(&lp).unwrap();
        assert!(matches!(outcome, LPOutcome::Unbounded { .. }));
        assert!(check_outcome(&lp, &outcome));
    }

    #[test]
    fn perturbed_value_fails_verification() {
        let lp = lp_max_x_le_1();
        let bad = LPOutcome::Optimal {
            value: rat(9, 10),
            point: vec![Rat::one()],
        };
        assert!(!check_outcome(&lp, &bad));
    }

    #[test]
    fn equality_constraints_and_free_variables() {
        // min x + y  s.t.  x - y = 2, x + y >= 4, y free
        let mut lp = LinearProgram::new(Direction::Minimize, vec![Rat::one(), Rat::one()]);
        lp.free = vec![false, true];
        lp.add_constraint(vec![Rat::one(), -Rat::one()], Relation::Eq, rat(2, 1));
        lp.add_constraint(vec![Rat::one(), Rat::one()], Relation::Ge, rat(4, 1));
        let outcome = solve(&lp).unwrap();
        match &outcome {
            LPOutcome::Optimal { value, point } => {
                assert_eq!(*value, rat(4, 1));
                assert_eq!(point, &vec![rat(3, 1), Rat::one()]);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
        assert!(check_outcome(&lp, &outcome));
    }

    #[test]
    fn duals_match_optimum() {
        // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6
        let mut lp = LinearProgram::new(Direction::Maximize, vec![rat(3, 1), rat(2, 1)]);
        lp.add_constraint(vec![Rat::one(), Rat::one()], Relation::Le, rat(4, 1));
        lp.add_constraint(vec![Rat::one(), rat(3, 1)], Relation::Le, rat(6, 1));
        let (outcome, duals) = solve_with_duals(&lp).unwrap();
        let value = match &outcome {
            LPOutcome::Optimal { value, .. } => value.clone(),
            other => panic!("expected optimal, got {other:?}"),
        };
        let duals = duals.unwrap();
        let dual_value: Rat = duals
            .iter()
            .zip(&lp.constraints)
            .map(|(y, c)| y * &c.rhs)
            .sum();
        assert_eq!(dual_value, value);
        assert!(duals.iter().all(|y| !y.is_negative()));
    }

    fn random_lp(rng: &mut StdRng) -> LinearProgram {
        let nvars = rng.gen_range(1..=12);
        let nrows = rng.gen_range(0..=8);
        let direction = if rng.gen_bool(0.5) {
            Direction::Minimize
        } else {
            Direction::Maximize
        };
        let mut coeff = |rng: &mut StdRng| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        let objective = (0..nvars).map(|_| coeff(rng)).collect();
        let mut lp = LinearProgram::new(direction, objective);
        lp.free = (0..nvars).map(|_| rng.gen_bool(0.2)).collect();
        for _ in 0..nrows {
            let coeffs = (0..nvars).map(|_| coeff(rng)).collect();
            let relation = match rng.gen_range(0..6) {
                0 | 1 | 2 => Relation::Le,
                3 | 4 => Relation::Ge,
                _ => Relation::Eq,
            };
            lp.add_constraint(coeffs, relation, rat(rng.gen_range(-8..=8), 1));
        }
        lp
    }

    #[test]
    fn corpus_of_random_programs_solves_deterministically_and_verifies() {
        let mut rng = StdRng::seed_from_u64(20240901);
        let mut seen = [0usize; 3];
        for _ in 0..1000 {
            let lp = random_lp(&mut rng);
            let outcome = solve(&lp).unwrap();
            assert!(check_outcome(&lp, &outcome), "failed on {lp:?}");
            assert_eq!(solve(&lp).unwrap(), outcome, "nondeterministic on {lp:?}");
            match outcome {
                LPOutcome::Optimal { .. } => seen[0] += 1,
                LPOutcome::Infeasible { .. } => seen[1] += 1,
                LPOutcome::Unbounded { .. } => seen[2] += 1,
            }
        }
        // the corpus must exercise all three outcomes
        assert!(seen.iter().all(|&c| c > 50), "outcome mix {seen:?}");
    }
}
