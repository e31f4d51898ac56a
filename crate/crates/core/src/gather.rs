//! Minimum-cost gathering point: the point every interval is moved to touch so
//! that the intersection graph becomes complete.
//!
//! The total moving distance `D(x)` is convex and piecewise linear with
//! breakpoints at interval endpoints, so some endpoint is optimal. The general
//! solver binary-searches over endpoints, halving the set of endpoints inside
//! the active window `[lo, hi]` on every round. Intervals entirely left of `lo`
//! or right of `hi` are folded into two [`SideAccumulator`]s, so each round
//! costs time proportional to the endpoints still inside the window and the
//! whole search is linear.

use std::hash::BuildHasher;

use hashbrown::HashTable;
use rustc_hash::FxBuildHasher;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{displacement_to, moving_distance, Collection, Interval, ShiftSolution};
use crate::select::{lower_median, select_kth, PivotRule};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GatherResult {
    /// Leftmost optimal gathering point.
    pub point_lo: f64,
    /// Rightmost optimal gathering point.
    pub point_hi: f64,
    pub cost: f64,
    pub shifts: ShiftSolution,
}

/// Cost of a group of intervals that all lie strictly on one side of a pivot.
///
/// For intervals entirely left of `pivot`, `D(L, x) = D(L, pivot) + W·(x - pivot)`
/// for every `x >= pivot`, where `W` is their total weight; the mirror identity
/// holds for intervals right of the pivot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideAccumulator {
    pub pivot: f64,
    pub weight: f64,
    pub cost_at_pivot: f64,
}

impl SideAccumulator {
    pub fn new(pivot: f64) -> Self {
        Self { pivot, weight: 0.0, cost_at_pivot: 0.0 }
    }

    /// Cost at `x`, where `x` lies on the far side of the pivot from the group.
    pub fn at(&self, x: f64) -> f64 {
        self.cost_at_pivot + self.weight * (x - self.pivot).abs()
    }

    /// Moves the pivot away from the group (never across a member).
    pub fn move_pivot(&mut self, pivot: f64) {
        self.cost_at_pivot = self.at(pivot);
        self.pivot = pivot;
    }

    pub fn absorb(&mut self, interval: &Interval) {
        self.weight += interval.weight();
        self.cost_at_pivot += moving_distance(interval, self.pivot);
    }
}

/// Solves with the worst-case linear median-of-medians pivot.
pub fn find_optimal_gathering_point(collection: &Collection) -> Result<GatherResult> {
    find_optimal_gathering_point_with(collection, PivotRule::MedianOfMedians)
}

pub fn find_optimal_gathering_point_with(collection: &Collection, pivot: PivotRule) -> Result<GatherResult> {
    if collection.is_empty() {
        return Err(Error::EmptyInstance);
    }
    let merged = merge_coincident(collection.items());
    let x = locate_optimum(merged.clone(), pivot);
    let (point_lo, point_hi) = flat_segment(&merged, x);
    let shifts = gathering_shifts(collection, point_lo);
    Ok(GatherResult { point_lo, point_hi, cost: shifts.total_cost, shifts })
}

/// With one shared weight the optimum lies between the `n`-th and `(n+1)`-th
/// smallest of the `2n` endpoints.
pub fn uniform_slope_gathering_point(collection: &Collection) -> Result<GatherResult> {
    if collection.is_empty() {
        return Err(Error::EmptyInstance);
    }
    if !collection.has_uniform_weights() {
        return Err(Error::NonUniformWeights);
    }
    let n = collection.len();
    let mut ends = collection.endpoints();
    let point_lo = select_kth(&mut ends, n - 1, PivotRule::MedianOfMedians);
    let point_hi = ends[n..].iter().copied().fold(f64::INFINITY, f64::min);
    let shifts = gathering_shifts(collection, point_lo);
    Ok(GatherResult { point_lo, point_hi, cost: shifts.total_cost, shifts })
}

/// Moves each interval just far enough to contain `x`.
pub fn gathering_shifts(collection: &Collection, x: f64) -> ShiftSolution {
    let displacements = collection.iter().map(|it| displacement_to(it, x)).collect();
    let total_cost = collection.iter().map(|it| moving_distance(it, x)).sum();
    ShiftSolution { displacements, total_cost }
}

/// Merges intervals with identical center and length into one whose weight is
/// the sum. Intervals with equal center but different length stay separate.
pub fn merge_coincident(items: &[Interval]) -> Vec<Interval> {
    // + 0.0 folds -0.0 into 0.0
    let key = |it: &Interval| ((it.center() + 0.0).to_bits(), it.length().to_bits());
    let hasher = FxBuildHasher;
    // slots hold indices into `merged`, which keeps the table small
    let mut slots: HashTable<u32> = HashTable::with_capacity(items.len());
    let mut merged: Vec<Interval> = Vec::with_capacity(items.len());
    for it in items {
        let k = key(it);
        let hash = hasher.hash_one(k);
        match slots.find(hash, |&i| key(&merged[i as usize]) == k) {
            Some(&i) => {
                let m = &mut merged[i as usize];
                *m = m.with_weight(m.weight() + it.weight());
            }
            None => {
                slots.insert_unique(hash, merged.len() as u32, |&i| hasher.hash_one(key(&merged[i as usize])));
                merged.push(*it);
            }
        }
    }
    merged
}

fn locate_optimum(mut active: Vec<Interval>, pivot: PivotRule) -> f64 {
    let mut lo = active.iter().map(Interval::left).fold(f64::INFINITY, f64::min);
    let mut hi = active.iter().map(Interval::right).fold(f64::NEG_INFINITY, f64::max);
    let mut left = SideAccumulator::new(lo);
    let mut right = SideAccumulator::new(hi);
    let mut candidates: Vec<f64> = Vec::with_capacity(2 * active.len());

    loop {
        candidates.clear();
        for it in &active {
            for e in [it.left(), it.right()] {
                if lo <= e && e <= hi {
                    candidates.push(e);
                }
            }
        }
        let x = lower_median(&mut candidates, pivot);
        let mut prev: Option<f64> = None;
        let mut next: Option<f64> = None;
        for &e in &candidates {
            if e < x && prev.is_none_or(|p| e > p) {
                prev = Some(e);
            }
            if e > x && next.is_none_or(|q| e < q) {
                next = Some(e);
            }
        }

        // D at prev, x and next in one pass over the active intervals
        let (p_at, q_at) = (prev.unwrap_or(x), next.unwrap_or(x));
        let mut sums = [0.0f64; 3];
        for it in &active {
            sums[0] += moving_distance(it, p_at);
            sums[1] += moving_distance(it, x);
            sums[2] += moving_distance(it, q_at);
        }
        let cost = |i: usize, t: f64| left.at(t) + right.at(t) + sums[i];
        let at_x = cost(1, x);
        if let Some(p) = prev.filter(|&p| cost(0, p) < at_x) {
            hi = p;
            right.move_pivot(hi);
        } else if let Some(q) = next.filter(|&q| cost(2, q) < at_x) {
            lo = q;
            left.move_pivot(lo);
        } else {
            return x;
        }

        active.retain(|it| {
            if it.right() < lo {
                left.absorb(it);
                false
            } else if it.left() > hi {
                right.absorb(it);
                false
            } else {
                // intervals covering the whole window cost nothing inside it
                !(it.left() < lo && it.right() > hi)
            }
        });
    }
}

/// Extends an optimal endpoint `x` to the full optimal segment. The slope of
/// `D` strictly increases at every distinct endpoint, so the flat piece spans
/// at most one gap on each side.
fn flat_segment(items: &[Interval], x: f64) -> (f64, f64) {
    let mut prev: Option<f64> = None;
    let mut next: Option<f64> = None;
    for it in items {
        for e in [it.left(), it.right()] {
            if e < x && prev.is_none_or(|p| e > p) {
                prev = Some(e);
            }
            if e > x && next.is_none_or(|q| e < q) {
                next = Some(e);
            }
        }
    }
    let cost = |t: f64| items.iter().map(|it| moving_distance(it, t)).sum::<f64>();
    let at_x = cost(x);
    let same = |v: f64| (v - at_x).abs() <= 1e-9 * (1.0 + at_x.abs());
    let lo = prev.filter(|&p| same(cost(p))).unwrap_or(x);
    let hi = next.filter(|&q| same(cost(q))).unwrap_or(x);
    (lo, hi)
}
