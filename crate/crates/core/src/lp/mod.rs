//! Linear-programming formulations for making the intersection graph of
//! equal-length intervals edgeless, acyclic, free of `k`-cliques, or
//! `k`-connected.
//!
//! Some optimal shift keeps the intervals in center order, so each property
//! reduces to difference constraints between intervals a fixed number of
//! positions apart in the sorted order. Strict separations are closed with a
//! small positive `eps`. The objective `Σ m_i |x_i|` is linearized by
//! [`abs_value_transform`] before handing the program to the simplex solver.

mod format;
mod simplex;

pub use format::{format_significant, to_lp_format};
pub use simplex::{solve_lp, LpSolution, LpStatus};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{center_order, Collection, ShiftSolution};

pub const DEFAULT_EPS: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

impl Constraint {
    pub fn new(coeffs: Vec<f64>, relation: Relation, rhs: f64) -> Self {
        Self { coeffs, relation, rhs }
    }

    pub fn lhs(&self, x: &[f64]) -> f64 {
        self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum()
    }

    /// Amount by which `x` violates this row (0 when satisfied).
    pub fn violation(&self, x: &[f64]) -> f64 {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Le => (lhs - self.rhs).max(0.0),
            Relation::Ge => (self.rhs - lhs).max(0.0),
            Relation::Eq => (lhs - self.rhs).abs(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ObjectiveForm {
    /// Minimize `Σ c_i x_i`.
    Linear,
    /// Minimize `Σ c_i |x_i|`.
    AbsoluteValue,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<f64>,
    pub objective_form: ObjectiveForm,
    pub constraints: Vec<Constraint>,
    /// `nonneg[j]` is true when variable `j` is constrained to be `>= 0`.
    pub nonneg: Vec<bool>,
}

impl LinearProgram {
    /// Program over `n` free shift variables minimizing `Σ weights_i |x_i|`.
    pub fn shift_program(weights: Vec<f64>) -> Self {
        let n = weights.len();
        Self {
            num_vars: n,
            objective: weights,
            objective_form: ObjectiveForm::AbsoluteValue,
            constraints: Vec::new(),
            nonneg: vec![false; n],
        }
    }

    /// Adds `x_j - x_i  (rel)  rhs`.
    pub fn push_difference(&mut self, j: usize, i: usize, relation: Relation, rhs: f64) {
        let mut coeffs = vec![0.0; self.num_vars];
        coeffs[j] += 1.0;
        coeffs[i] -= 1.0;
        self.constraints.push(Constraint::new(coeffs, relation, rhs));
    }

    pub fn validate(&self) -> Result<()> {
        if self.objective.len() != self.num_vars || self.nonneg.len() != self.num_vars {
            return Err(Error::MalformedProgram("objective or bounds length differs from num_vars".into()));
        }
        if let Some(i) = self.constraints.iter().position(|c| c.coeffs.len() != self.num_vars) {
            return Err(Error::MalformedProgram(format!("row {i} has the wrong number of coefficients")));
        }
        Ok(())
    }

    pub fn objective_value(&self, x: &[f64]) -> f64 {
        match self.objective_form {
            ObjectiveForm::Linear => self.objective.iter().zip(x).map(|(c, v)| c * v).sum(),
            ObjectiveForm::AbsoluteValue => self.objective.iter().zip(x).map(|(c, v)| c * v.abs()).sum(),
        }
    }

    /// Largest violation over all rows and sign bounds.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let rows = self.constraints.iter().map(|c| c.violation(x)).fold(0.0, f64::max);
        let bounds = self
            .nonneg
            .iter()
            .zip(x)
            .filter(|(nn, _)| **nn)
            .map(|(_, v)| (-v).max(0.0))
            .fold(0.0, f64::max);
        rows.max(bounds)
    }
}

/// Rewrites every free variable `x_i` as `x_i' - x_i''` with both parts
/// nonnegative, and `|x_i|` in the objective as `x_i' + x_i''`.
///
/// Variable `i` keeps index `i` for its positive part; negative parts of free
/// variables are appended in order.
pub fn abs_value_transform(program: &LinearProgram) -> LinearProgram {
    let free: Vec<usize> = (0..program.num_vars).filter(|&j| !program.nonneg[j]).collect();
    let total = program.num_vars + free.len();
    let mut objective = program.objective.clone();
    for &j in &free {
        let c = program.objective[j];
        objective.push(match program.objective_form {
            ObjectiveForm::AbsoluteValue => c,
            ObjectiveForm::Linear => -c,
        });
    }
    let constraints = program
        .constraints
        .iter()
        .map(|row| {
            let mut coeffs = row.coeffs.clone();
            coeffs.extend(free.iter().map(|&j| -row.coeffs[j]));
            Constraint::new(coeffs, row.relation, row.rhs)
        })
        .collect();
    LinearProgram {
        num_vars: total,
        objective,
        objective_form: ObjectiveForm::Linear,
        constraints,
        nonneg: vec![true; total],
    }
}

/// Recovers the original variables from a solution of the transformed program.
pub fn recover_split(program: &LinearProgram, split_values: &[f64]) -> Vec<f64> {
    let mut out = split_values[..program.num_vars].to_vec();
    let mut neg = program.num_vars;
    for (j, v) in out.iter_mut().enumerate() {
        if !program.nonneg[j] {
            *v -= split_values[neg];
            neg += 1;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Edgeless,
    Acyclic,
    NoKClique,
    KConnected,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Edgeless => "edgeless",
            Property::Acyclic => "acyclic",
            Property::NoKClique => "no-kclique",
            Property::KConnected => "kconnected",
        }
    }
}

/// Which index offset the `k`-connectivity constraints use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConnectivityOffset {
    /// Pairs `(i, i + k)`, which matches exhaustive vertex-connectivity checks.
    #[default]
    Validated,
    /// Pairs `(i, i + k + 1)`.
    PaperLiteral,
}

impl ConnectivityOffset {
    pub fn offset(self, k: usize) -> usize {
        match self {
            ConnectivityOffset::Validated => k,
            ConnectivityOffset::PaperLiteral => k + 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PropertySpec {
    pub property: Property,
    pub k: usize,
    pub eps: f64,
    pub offset: ConnectivityOffset,
}

impl PropertySpec {
    pub fn new(property: Property) -> Self {
        Self { property, k: 2, eps: DEFAULT_EPS, offset: ConnectivityOffset::Validated }
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = eps;
        self
    }

    pub fn with_offset(mut self, offset: ConnectivityOffset) -> Self {
        self.offset = offset;
        self
    }
}

fn check_sorted_uniform(collection: &Collection) -> Result<f64> {
    if collection.is_empty() {
        return Err(Error::EmptyInstance);
    }
    if !collection.is_sorted_by_center() {
        return Err(Error::Unsorted);
    }
    if !collection.has_uniform_lengths() {
        return Err(Error::NonUniformLengths);
    }
    Ok(collection.items()[0].length())
}

fn check_eps(eps: f64) -> Result<()> {
    if eps.is_finite() && eps > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidEpsilon(eps))
    }
}

fn weights(collection: &Collection) -> Vec<f64> {
    collection.iter().map(|it| it.weight()).collect()
}

/// `(c_j + x_j) - (c_i + x_i) >= len + eps` for every pair `j = i + gap`.
fn separation_program(collection: &Collection, gap: usize, eps: f64) -> Result<LinearProgram> {
    let len = check_sorted_uniform(collection)?;
    check_eps(eps)?;
    let c: Vec<f64> = collection.iter().map(|it| it.center()).collect();
    let mut p = LinearProgram::shift_program(weights(collection));
    for i in 0..c.len().saturating_sub(gap) {
        let j = i + gap;
        p.push_difference(j, i, Relation::Ge, len + eps - (c[j] - c[i]));
    }
    Ok(p)
}

/// Consecutive intervals separated by more than their length.
pub fn build_edgeless_lp(collection: &Collection, eps: f64) -> Result<LinearProgram> {
    separation_program(collection, 1, eps)
}

/// Intervals two apart separated, which rules out triangles and hence cycles.
pub fn build_acyclic_lp(collection: &Collection, eps: f64) -> Result<LinearProgram> {
    separation_program(collection, 2, eps)
}

/// Intervals `k - 1` apart separated, so no `k` consecutive intervals overlap.
/// With `k > n` the program has no rows.
pub fn build_no_kclique_lp(collection: &Collection, k: usize, eps: f64) -> Result<LinearProgram> {
    if k < 2 {
        return Err(Error::InvalidK { k, n: collection.len() });
    }
    separation_program(collection, k - 1, eps)
}

/// `(c_j + x_j) - (c_i + x_i) <= len` for every pair `j = i + offset(k)`,
/// followed by `n - 1` ordering rows `c_{i+1} + x_{i+1} >= c_i + x_i`.
///
/// Without the ordering rows the optimum may swap intervals, after which the
/// index pairs no longer describe the sorted positions and the shifted graph
/// can fail to be `k`-connected. With equal weights some optimum preserves
/// the input order, so the rows never cost anything there.
pub fn build_kconnected_lp(collection: &Collection, k: usize, offset: ConnectivityOffset) -> Result<LinearProgram> {
    let len = check_sorted_uniform(collection)?;
    let n = collection.len();
    if k == 0 {
        return Err(Error::InvalidK { k, n });
    }
    if n <= k {
        return Err(Error::TooFewForConnectivity { k, n });
    }
    let gap = offset.offset(k);
    let c: Vec<f64> = collection.iter().map(|it| it.center()).collect();
    let mut p = LinearProgram::shift_program(weights(collection));
    for i in 0..n.saturating_sub(gap) {
        let j = i + gap;
        p.push_difference(j, i, Relation::Le, len - (c[j] - c[i]));
    }
    for i in 0..n - 1 {
        p.push_difference(i + 1, i, Relation::Ge, c[i] - c[i + 1]);
    }
    Ok(p)
}

/// Builds the program for `spec` over an already sorted collection.
pub fn build_property_lp(collection: &Collection, spec: &PropertySpec) -> Result<LinearProgram> {
    match spec.property {
        Property::Edgeless => build_edgeless_lp(collection, spec.eps),
        Property::Acyclic => build_acyclic_lp(collection, spec.eps),
        Property::NoKClique => build_no_kclique_lp(collection, spec.k, spec.eps),
        Property::KConnected => build_kconnected_lp(collection, spec.k, spec.offset),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertySolution {
    /// Displacements indexed like the input collection.
    pub shifts: ShiftSolution,
    /// Shift variables in center order, as solved.
    pub sorted_shifts: Vec<f64>,
    /// Input index of each position in center order.
    pub order: Vec<usize>,
    pub objective: f64,
    /// Strict (eps-padded) rows that hold with equality.
    pub active_strict: usize,
    /// Optimum of the same program with `eps = 0`: the infimum the strict
    /// problem approaches but does not attain.
    pub cost_without_eps: f64,
    #[serde(skip)]
    pub program: LinearProgram,
}

/// Sorts, builds, linearizes and solves; maps the shifts back to input order.
pub fn solve_property(collection: &Collection, spec: &PropertySpec) -> Result<PropertySolution> {
    let order = center_order(collection);
    let sorted: Collection = order.iter().map(|&i| collection.items()[i]).collect();
    let program = build_property_lp(&sorted, spec)?;
    let split = abs_value_transform(&program);
    let solution = solve_lp(&split)?;
    match solution.status {
        LpStatus::Optimal => {}
        LpStatus::Infeasible => return Err(Error::Unsolvable("infeasible")),
        LpStatus::Unbounded => return Err(Error::Unsolvable("unbounded")),
    }
    let sorted_shifts = recover_split(&program, &solution.values);

    let mut displacements = vec![0.0; collection.len()];
    for (pos, &i) in order.iter().enumerate() {
        displacements[i] = sorted_shifts[pos];
    }
    let shifts = ShiftSolution::new(collection, displacements)?;

    let strict = matches!(spec.property, Property::Edgeless | Property::Acyclic | Property::NoKClique);
    let active_strict = if strict {
        program
            .constraints
            .iter()
            .filter(|row| (row.lhs(&sorted_shifts) - row.rhs).abs() <= 1e-9)
            .count()
    } else {
        0
    };
    let objective = program.objective_value(&sorted_shifts);
    let cost_without_eps = if strict {
        let mut closed = program.clone();
        for row in &mut closed.constraints {
            row.rhs -= spec.eps;
        }
        let relaxed = solve_lp(&abs_value_transform(&closed))?;
        if relaxed.status != LpStatus::Optimal {
            return Err(Error::Unsolvable("infeasible"));
        }
        relaxed.objective
    } else {
        objective
    };
    Ok(PropertySolution {
        shifts,
        sorted_shifts,
        order,
        objective,
        active_strict,
        cost_without_eps,
        program,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-6;

    fn optimum(p: &LinearProgram) -> f64 {
        let s = solve_lp(&abs_value_transform(p)).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        s.objective
    }

    #[test]
    fn abs_transform_one_variable() {
        let mut p = LinearProgram::shift_program(vec![1.0]);
        p.constraints.push(Constraint::new(vec![1.0], Relation::Ge, 3.0));
        let t = abs_value_transform(&p);
        assert_eq!(t.num_vars, 2);
        assert_eq!(t.objective, vec![1.0, 1.0]);
        assert_eq!(t.constraints[0].coeffs, vec![1.0, -1.0]);
        assert!(t.nonneg.iter().all(|&b| b));
        assert!((optimum(&p) - 3.0).abs() < 1e-12);

        assert_eq!(optimum(&LinearProgram::shift_program(vec![1.0])), 0.0);
    }

    #[test]
    fn abs_transform_preserves_feasible_points() {
        let mut p = LinearProgram::shift_program(vec![1.0, 2.0]);
        p.push_difference(1, 0, Relation::Ge, 1.5);
        let t = abs_value_transform(&p);
        for x in [[-1.0f64, 0.5], [2.0, 4.0], [0.0, 1.5]] {
            let split = [x[0].max(0.0), x[1].max(0.0), (-x[0]).max(0.0), (-x[1]).max(0.0)];
            assert_eq!(t.objective_value(&split), p.objective_value(&x));
            assert_eq!(t.max_violation(&split), p.max_violation(&x));
            assert_eq!(recover_split(&p, &split), x.to_vec());
        }
    }

    #[test]
    fn edgeless_stack() {
        let c = Collection::unit(&[0.0, 0.0, 0.0]);
        let p = build_edgeless_lp(&c, EPS).unwrap();
        assert_eq!(p.constraints.len(), 2);
        assert!((optimum(&p) - (2.0 + 2.0 * EPS)).abs() < 1e-9);

        let spread = Collection::unit(&[0.0, 2.0, 4.0]);
        assert_eq!(optimum(&build_edgeless_lp(&spread, EPS).unwrap()), 0.0);

        let single = Collection::unit(&[3.0]);
        assert!(build_edgeless_lp(&single, EPS).unwrap().constraints.is_empty());
        assert_eq!(build_edgeless_lp(&Collection::default(), EPS), Err(Error::EmptyInstance));
    }

    #[test]
    fn acyclic_triangle() {
        let c = Collection::unit(&[0.0, 0.5, 1.0]);
        assert!((optimum(&build_acyclic_lp(&c, EPS).unwrap()) - EPS).abs() < 1e-12);
        assert!(build_acyclic_lp(&Collection::unit(&[0.0, 0.0]), EPS).unwrap().constraints.is_empty());
        let path = Collection::unit(&[0.0, 1.0, 2.0, 3.0]);
        assert_eq!(optimum(&build_acyclic_lp(&path, EPS).unwrap()), 0.0);
    }

    #[test]
    fn no_kclique_cases() {
        let c = Collection::unit(&[0.0, 0.0]);
        assert!((optimum(&build_no_kclique_lp(&c, 2, EPS).unwrap()) - (1.0 + EPS)).abs() < 1e-12);
        assert!(build_no_kclique_lp(&c, 3, EPS).unwrap().constraints.is_empty());
        let c = Collection::unit(&[0.0, 0.5, 3.0, 3.5]);
        assert_eq!(optimum(&build_no_kclique_lp(&c, 3, EPS).unwrap()), 0.0);
        assert!(build_no_kclique_lp(&c, 1, EPS).is_err());
    }

    #[test]
    fn kconnected_offsets() {
        let c = Collection::unit(&[0.0, 1.0, 4.0]);
        let validated = build_kconnected_lp(&c, 1, ConnectivityOffset::Validated).unwrap();
        assert_eq!(validated.constraints.len(), 2 + 2);
        assert!((optimum(&validated) - 2.0).abs() < 1e-9);
        let literal = build_kconnected_lp(&c, 1, ConnectivityOffset::PaperLiteral).unwrap();
        assert_eq!(literal.constraints.len(), 1 + 2);
        assert!((optimum(&literal) - 3.0).abs() < 1e-9);

        let tight = Collection::unit(&[0.0, 0.5, 1.0]);
        assert_eq!(optimum(&build_kconnected_lp(&tight, 2, ConnectivityOffset::Validated).unwrap()), 0.0);
        assert_eq!(
            build_kconnected_lp(&tight, 3, ConnectivityOffset::Validated),
            Err(Error::TooFewForConnectivity { k: 3, n: 3 })
        );
    }

    #[test]
    fn kconnected_optimum_keeps_order() {
        // without ordering rows the optimum swaps the two middle intervals
        let c = Collection::unit(&[-1.5, 0.0, 0.0, 1.0, 1.5]);
        let sol = solve_property(&c, &PropertySpec::new(Property::KConnected).with_k(3)).unwrap();
        let p: Vec<f64> = c.iter().zip(&sol.sorted_shifts).map(|(it, d)| it.center() + d).collect();
        assert!(p.windows(2).all(|w| w[0] <= w[1] + 1e-9), "{p:?}");
        assert!(p[3] - p[0] <= 1.0 + 1e-9 && p[4] - p[1] <= 1.0 + 1e-9, "{p:?}");
    }

    #[test]
    fn builders_require_sorted_input() {
        let c = Collection::unit(&[1.0, 0.0]);
        assert_eq!(build_edgeless_lp(&c, EPS), Err(Error::Unsorted));
        assert_eq!(build_edgeless_lp(&Collection::unit(&[0.0, 1.0]), 0.0), Err(Error::InvalidEpsilon(0.0)));
    }

    #[test]
    fn solve_property_maps_back() {
        let c = Collection::unit(&[0.0, 0.0, 0.0]);
        let s = solve_property(&c, &PropertySpec::new(Property::Edgeless)).unwrap();
        assert!((s.shifts.total_cost - 2.0).abs() < 1e-5);
        assert_eq!(s.active_strict, 2);
        assert!((s.cost_without_eps - 2.0).abs() < 1e-9);

        // eps accumulates along chains of tight rows
        let c = Collection::unit(&[0.0, 0.0, 0.5, 1.0, 4.0, 4.2]);
        let s = solve_property(&c, &PropertySpec::new(Property::Edgeless)).unwrap();
        assert!((s.cost_without_eps - 3.3).abs() < 1e-9, "{}", s.cost_without_eps);
        assert!(s.objective > s.cost_without_eps + 4.0 * DEFAULT_EPS);

        let c = Collection::unit(&[5.0, 0.0]);
        let s = solve_property(&c, &PropertySpec::new(Property::NoKClique).with_k(2)).unwrap();
        assert_eq!(s.order, vec![1, 0]);
        assert_eq!(s.shifts.total_cost, 0.0);
    }
}
