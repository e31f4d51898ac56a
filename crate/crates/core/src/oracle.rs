//! Brute-force references and graph-property checkers.
//!
//! Nothing here shares code paths with the solvers beyond the cost function
//! and graph construction: every reference enumerates candidates and
//! recomputes costs from scratch. Exhaustive searches refuse inputs above a
//! hard size cap.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{build_intersection_graph_within, IntersectionGraph};
use crate::interval::{moving_distance, shifted_in_place, sort_by_center, total_moving_distance, Collection};
use crate::lp::{Property, PropertySpec};
use crate::squares::{square_moving_distance, UnitSquare};

pub const FULL_KCLIQUE_CAP: usize = 12;
pub const EXHAUSTIVE_CONNECTIVITY_CAP: usize = 12;
pub const GRID_SEARCH_CAP: usize = 4;

fn cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::OracleCap { what, n, cap })
    } else {
        Ok(())
    }
}

/// Evaluates the total moving distance at every endpoint and returns the
/// smallest endpoint attaining the minimum.
pub fn oracle_gathering(collection: &Collection) -> Result<(f64, f64)> {
    if collection.is_empty() {
        return Err(Error::EmptyInstance);
    }
    let mut best = (f64::INFINITY, f64::INFINITY);
    for e in collection.endpoints() {
        let cost = total_moving_distance(collection, e)?;
        if cost < best.1 || (cost == best.1 && e < best.0) {
            best = (e, cost);
        }
    }
    Ok(best)
}

/// Minimum of the summed square cost over the grid of x-endpoints × y-endpoints.
pub fn oracle_squares_grid(squares: &[UnitSquare]) -> Result<((f64, f64), f64)> {
    if squares.is_empty() {
        return Err(Error::EmptyInstance);
    }
    let xs: Vec<f64> = squares.iter().flat_map(|s| [s.x - 0.5, s.x + 0.5]).collect();
    let ys: Vec<f64> = squares.iter().flat_map(|s| [s.y - 0.5, s.y + 0.5]).collect();
    let mut best = ((f64::NAN, f64::NAN), f64::INFINITY);
    for &x in &xs {
        for &y in &ys {
            let cost: f64 = squares.iter().map(|s| square_moving_distance(s, (x, y))).sum();
            if cost < best.1 {
                best = ((x, y), cost);
            }
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WindowOptimum {
    /// 1-based start of the window in center order.
    pub window_start: usize,
    pub point: f64,
    pub cost: f64,
}

/// Every window of `k` consecutive intervals (in center order) gathered at its
/// `k`-th and `(k+1)`-th endpoints, each cost recomputed from scratch. Ties go
/// to the lowest window, then to the smaller endpoint.
pub fn oracle_kclique_windows(collection: &Collection, k: usize) -> Result<WindowOptimum> {
    let n = collection.len();
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    let sorted = sort_by_center(collection);
    let mut best: Option<WindowOptimum> = None;
    for start in 0..=n - k {
        let window: Collection = sorted.items()[start..start + k].iter().copied().collect();
        let mut ends = window.endpoints();
        ends.sort_by(f64::total_cmp);
        for x in [ends[k - 1], ends[k]] {
            let cost = total_moving_distance(&window, x)?;
            if best.is_none_or(|b| cost < b.cost) {
                best = Some(WindowOptimum { window_start: start + 1, point: x, cost });
            }
        }
    }
    Ok(best.expect("at least one window"))
}

/// Minimum over every `k`-subset and every endpoint of the subset of the
/// subset's total moving distance. Exponential; `n <= 12`.
pub fn oracle_kclique_full(collection: &Collection, k: usize) -> Result<f64> {
    let n = collection.len();
    cap("full k-clique enumeration", n, FULL_KCLIQUE_CAP)?;
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    let items = collection.items();
    let mut best = f64::INFINITY;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        for &i in &members {
            for x in [items[i].left(), items[i].right()] {
                let cost: f64 = members.iter().map(|&j| moving_distance(&items[j], x)).sum();
                best = best.min(cost);
            }
        }
    }
    Ok(best)
}

/// Largest number of intervals sharing a point, with the members of one such
/// clique. Gaps up to `tol` count as contact.
pub fn clique_number_sweep(collection: &Collection, tol: f64) -> (usize, Vec<usize>) {
    // (coordinate, 0 = opens / 1 = closes, interval)
    let mut events: Vec<(f64, u8, usize)> = Vec::with_capacity(2 * collection.len());
    for (i, it) in collection.iter().enumerate() {
        events.push((it.left(), 0, i));
        events.push((it.right() + tol, 1, i));
    }
    events.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut open = 0usize;
    let mut best = (0usize, f64::NAN);
    for &(x, kind, _) in &events {
        if kind == 0 {
            open += 1;
            if open > best.0 {
                best = (open, x);
            }
        } else {
            open -= 1;
        }
    }
    let members = if best.0 == 0 {
        Vec::new()
    } else {
        let x = best.1;
        collection
            .iter()
            .enumerate()
            .filter(|(_, it)| it.left() <= x && x <= it.right() + tol)
            .map(|(i, _)| i)
            .collect()
    };
    (best.0, members)
}

/// Index-gap test on a center-sorted equal-length collection: some `k`
/// consecutive intervals have first and last centers within one length.
pub fn index_gap_has_kclique(sorted: &Collection, k: usize) -> bool {
    let items = sorted.items();
    if k == 0 {
        return true;
    }
    if k > items.len() {
        return false;
    }
    (0..=items.len() - k).any(|i| items[i + k - 1].center() - items[i].center() <= items[i].length())
}

/// Index-gap test on a center-sorted equal-length collection: every pair
/// `offset` positions apart intersects.
pub fn index_gap_connected(sorted: &Collection, offset: usize) -> bool {
    let items = sorted.items();
    (0..items.len().saturating_sub(offset)).all(|i| items[i + offset].center() - items[i].center() <= items[i].length())
}

fn connected_without(g: &IntersectionGraph, removed: &[bool]) -> bool {
    let n = g.vertex_count();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !removed[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..n).all(|v| removed[v] || seen[v])
}

pub fn is_connected(g: &IntersectionGraph) -> bool {
    connected_without(g, &vec![false; g.vertex_count()])
}

/// Exhaustive `k`-connectivity: more than `k` vertices and connected after
/// deleting any set of fewer than `k` vertices. Returns a separating set on
/// failure (empty when the graph is simply too small).
pub fn k_connected_exhaustive(g: &IntersectionGraph, k: usize) -> Result<std::result::Result<(), Vec<usize>>> {
    let n = g.vertex_count();
    cap("exhaustive connectivity", n, EXHAUSTIVE_CONNECTIVITY_CAP)?;
    if n <= k {
        return Ok(Err(Vec::new()));
    }
    let mut removed = vec![false; n];
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize >= k {
            continue;
        }
        for (v, r) in removed.iter_mut().enumerate() {
            *r = mask >> v & 1 == 1;
        }
        if !connected_without(g, &removed) {
            return Ok(Err((0..n).filter(|&v| removed[v]).collect()));
        }
    }
    Ok(Ok(()))
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths, capped at
/// `limit`, plus a minimum separator when the count is below `limit`.
fn disjoint_paths(g: &IntersectionGraph, s: usize, t: usize, limit: usize) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    // v_in = 2v, v_out = 2v + 1
    let nodes = 2 * n;
    let mut cap: Vec<Vec<(usize, i32, usize)>> = vec![Vec::new(); nodes]; // (to, cap, rev)
    let add = |cap: &mut Vec<Vec<(usize, i32, usize)>>, a: usize, b: usize, c: i32| {
        let ra = cap[b].len();
        let rb = cap[a].len();
        cap[a].push((b, c, ra));
        cap[b].push((a, 0, rb));
    };
    let big = (n + 1) as i32;
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        add(&mut cap, 2 * v, 2 * v + 1, c);
        for &w in g.neighbors(v) {
            add(&mut cap, 2 * v + 1, 2 * w, big);
        }
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        if flow >= limit {
            return (flow, Vec::new());
        }
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; nodes];
        let mut seen = vec![false; nodes];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for (idx, &(v, c, _)) in cap[u].iter().enumerate() {
                if c > 0 && !seen[v] {
                    seen[v] = true;
                    parent[v] = Some((u, idx));
                    queue.push_back(v);
                }
            }
        }
        if !seen[dst] {
            let separator = (0..n)
                .filter(|&v| v != s && v != t && seen[2 * v] && !seen[2 * v + 1])
                .collect();
            return (flow, separator);
        }
        let mut v = dst;
        while let Some((u, idx)) = parent[v] {
            let rev = cap[u][idx].2;
            cap[u][idx].1 -= 1;
            cap[v][rev].1 += 1;
            v = u;
        }
        flow += 1;
    }
}

/// `k`-connectivity through Menger's theorem: every non-adjacent pair is
/// joined by at least `k` internally disjoint paths.
pub fn k_connected_flow(g: &IntersectionGraph, k: usize) -> std::result::Result<(), Vec<usize>> {
    let n = g.vertex_count();
    if n <= k {
        return Err(Vec::new());
    }
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let (paths, separator) = disjoint_paths(g, s, t, k);
            if paths < k {
                return Err(separator);
            }
        }
    }
    Ok(())
}

/// Cycle in the graph, if any, as a vertex sequence.
pub fn find_cycle(g: &IntersectionGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut forest: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, b) in g.edges() {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra == rb {
            // path a -> b inside the forest closes the cycle
            let mut prev = vec![usize::MAX; n];
            prev[a] = a;
            let mut queue = VecDeque::from([a]);
            while let Some(v) = queue.pop_front() {
                if v == b {
                    break;
                }
                for &w in &forest[v] {
                    if prev[w] == usize::MAX {
                        prev[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            let mut path = vec![b];
            let mut v = b;
            while v != a {
                v = prev[v];
                path.push(v);
            }
            path.reverse();
            return Some(path);
        }
        parent[ra] = rb;
        forest[a].push(b);
        forest[b].push(a);
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphProperty {
    Complete,
    Edgeless,
    Acyclic,
    HasKClique,
    NoKClique,
    KConnected,
}

impl From<Property> for GraphProperty {
    fn from(p: Property) -> Self {
        match p {
            Property::Edgeless => GraphProperty::Edgeless,
            Property::Acyclic => GraphProperty::Acyclic,
            Property::NoKClique => GraphProperty::NoKClique,
            Property::KConnected => GraphProperty::KConnected,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "vertices")]
pub enum Witness {
    /// An edge that should not exist.
    Edge(Vec<usize>),
    /// A pair that should be adjacent but is not.
    MissingEdge(Vec<usize>),
    Cycle(Vec<usize>),
    Clique(Vec<usize>),
    /// Vertices whose removal disconnects the graph (empty if the graph has
    /// at most `k` vertices).
    Separator(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: GraphProperty,
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Checks `property` on the intersection graph of `collection`, treating gaps
/// of at most `tol` as contact.
pub fn check_property(collection: &Collection, property: GraphProperty, k: usize, tol: f64) -> PropertyReport {
    let g = build_intersection_graph_within(collection, tol);
    let n = g.vertex_count();
    let (holds, witness) = match property {
        GraphProperty::Complete => {
            let missing = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !g.has_edge(i, j));
            (missing.is_none(), missing.map(|(i, j)| Witness::MissingEdge(vec![i, j])))
        }
        GraphProperty::Edgeless => {
            let edge = g.edges().next();
            (edge.is_none(), edge.map(|(i, j)| Witness::Edge(vec![i, j])))
        }
        GraphProperty::Acyclic => {
            let cycle = find_cycle(&g);
            (cycle.is_none(), cycle.map(Witness::Cycle))
        }
        GraphProperty::HasKClique | GraphProperty::NoKClique => {
            let (size, members) = clique_number_sweep(collection, tol);
            let has = size >= k;
            let clique = has.then(|| Witness::Clique(members.into_iter().take(k).collect()));
            if property == GraphProperty::HasKClique {
                (has, clique)
            } else {
                (!has, clique)
            }
        }
        GraphProperty::KConnected => {
            let verdict = if n <= EXHAUSTIVE_CONNECTIVITY_CAP {
                k_connected_exhaustive(&g, k).expect("within cap")
            } else {
                k_connected_flow(&g, k)
            };
            match verdict {
                Ok(()) => (true, None),
                Err(sep) => (false, Some(Witness::Separator(sep))),
            }
        }
    };
    PropertyReport { property, holds, witness }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridOptions {
    /// Shifts range over `[-bound, bound]`.
    pub bound: f64,
    pub step: f64,
    /// Passes at a quarter of the previous step around the incumbent.
    pub refinements: usize,
}

impl Default for GridOptions {
    fn default() -> Self {
        Self { bound: 5.0, step: 1.0 / 16.0, refinements: 2 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridResult {
    pub cost: f64,
    pub displacements: Vec<f64>,
}

fn satisfies(collection: &Collection, spec: &PropertySpec) -> bool {
    let kind = GraphProperty::from(spec.property);
    let k = match spec.property {
        Property::Edgeless | Property::Acyclic => 0,
        _ => spec.k,
    };
    check_property(collection, kind, k, 0.0).holds
}

struct GridSearch<'a> {
    base: &'a Collection,
    spec: &'a PropertySpec,
    weights: Vec<f64>,
    best_cost: f64,
    best: Option<Vec<f64>>,
    current: Vec<f64>,
}

impl GridSearch<'_> {
    fn descend(&mut self, depth: usize, partial: f64, choices: &[Vec<f64>]) {
        if depth == choices.len() {
            let shifted = shifted_in_place(self.base, &self.current).expect("same length");
            if satisfies(&shifted, self.spec) {
                self.best_cost = partial;
                self.best = Some(self.current.clone());
            }
            return;
        }
        for &v in &choices[depth] {
            let cost = partial + self.weights[depth] * v.abs();
            if cost >= self.best_cost {
                // values are ordered by |v|
                break;
            }
            self.current[depth] = v;
            self.descend(depth + 1, cost, choices);
        }
    }
}

fn by_magnitude(mut values: Vec<f64>) -> Vec<f64> {
    values.sort_by(|a, b| a.abs().total_cmp(&b.abs()).then(a.total_cmp(b)));
    values
}

/// Exhaustive search over a shift grid for the cheapest displacement that
/// gives the property, followed by refinement passes. Graph checks use exact
/// closed intersection, so strict separations must be realized by the grid.
/// `n <= 4`.
pub fn grid_search_lp(collection: &Collection, spec: &PropertySpec, options: GridOptions) -> Result<GridResult> {
    let n = collection.len();
    cap("grid search", n, GRID_SEARCH_CAP)?;
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    let steps = (options.bound / options.step).round() as i64;
    let full: Vec<f64> = by_magnitude((-steps..=steps).map(|j| j as f64 * options.step).collect());

    let mut search = GridSearch {
        base: collection,
        spec,
        weights: collection.iter().map(|it| it.weight()).collect(),
        best_cost: f64::INFINITY,
        best: None,
        current: vec![0.0; n],
    };
    // coarse pass on a sub-lattice of the main grid seeds the incumbent
    let stride = ((0.5 / options.step).round() as i64).max(1);
    let coarse: Vec<f64> = full.iter().copied().filter(|v| ((v / options.step).round() as i64) % stride == 0).collect();
    search.descend(0, 0.0, &vec![coarse; n]);
    search.descend(0, 0.0, &vec![full; n]);

    let mut step = options.step;
    for _ in 0..options.refinements {
        let Some(center) = search.best.clone() else { break };
        step /= 4.0;
        let choices: Vec<Vec<f64>> = center
            .iter()
            .map(|&c| by_magnitude((-4..=4).map(|j| c + j as f64 * step).collect()))
            .collect();
        search.descend(0, 0.0, &choices);
    }

    match search.best {
        Some(displacements) => Ok(GridResult { cost: search.best_cost, displacements }),
        None => Ok(GridResult { cost: f64::INFINITY, displacements: Vec::new() }),
    }
}
