//! Cheapest way to make some `k` equal-length, equally weighted intervals
//! share a point.
//!
//! An optimal solution always gathers `k` intervals that are consecutive in
//! center order, and each window is optimally gathered at its `k`-th (or
//! `(k+1)`-th) endpoint. The solver slides a window over the sorted intervals
//! and carries the window cost forward with constant-size update formulas,
//! using an [`EndpointIndex`] for the order statistics they need.

use serde::Serialize;

use crate::endpoint_index::EndpointIndex;
use crate::error::{Error, Result};
use crate::interval::{center_order, displacement_to, moving_distance, Collection, Interval, ShiftSolution};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CliqueResult {
    /// 1-based start of the gathered window in center order.
    pub window_start: usize,
    pub point: f64,
    pub cost: f64,
    /// Displacements indexed like the input collection; zero outside the window.
    pub shifts: ShiftSolution,
    /// Input indices of the gathered intervals.
    pub members: Vec<usize>,
}

/// Cost at the `(n+1)`-th endpoint of a window from the cost at its `n`-th.
///
/// `left_at_next` is the number of window intervals strictly left of `x_next`
/// and `right_at_n` the number strictly right of `x_n`.
pub fn update_same_window(cost_at_n: f64, x_n: f64, x_next: f64, left_at_next: usize, right_at_n: usize) -> f64 {
    cost_at_n + (x_next - x_n) * (left_at_next as f64 - right_at_n as f64)
}

/// Interval counts of the new window at the two gathering points involved in
/// a slide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlideCounts {
    pub left_at_new: usize,
    pub right_at_new: usize,
    pub left_at_prev: usize,
    pub right_at_prev: usize,
}

/// Cost of the new window at `x_new` (its `k`-th endpoint) from the old
/// window's cost at `x_prev` (its `(k+1)`-th endpoint), where the window lost
/// one interval with cost `d_out` at `x_prev` and gained one with cost `d_in`.
pub fn update_shift_window(cost_prev: f64, x_prev: f64, x_new: f64, counts: SlideCounts, d_out: f64, d_in: f64) -> f64 {
    let delta = (x_prev - x_new).abs();
    let drift = if x_new >= x_prev {
        counts.left_at_new as f64 - counts.right_at_prev as f64
    } else {
        counts.right_at_new as f64 - counts.left_at_prev as f64
    };
    cost_prev + delta * drift + d_in - d_out
}

/// One slide of the window, recorded for verification.
#[derive(Debug, Clone, PartialEq)]
pub struct SlideStep {
    /// 0-based start of the new window in center order.
    pub start: usize,
    pub x_prev: f64,
    pub x_new: f64,
    pub x_new_next: f64,
    pub cost_at_new: f64,
    pub cost_at_new_next: f64,
    /// No endpoint of the old window plus the incoming interval lies strictly
    /// between `x_prev` and `x_new`.
    pub gap_clear: bool,
}

pub fn solve_kclique(collection: &Collection, k: usize) -> Result<CliqueResult> {
    run(collection, k, None)
}

/// As [`solve_kclique`], also returning every slide with its incrementally
/// maintained costs (in units of one interval weight).
pub fn solve_kclique_traced(collection: &Collection, k: usize) -> Result<(CliqueResult, Vec<SlideStep>)> {
    let mut trace = Vec::new();
    let result = run(collection, k, Some(&mut trace))?;
    Ok((result, trace))
}

fn unit_cost(it: &Interval, x: f64) -> f64 {
    moving_distance(it, x) / it.weight()
}

fn run(collection: &Collection, k: usize, mut trace: Option<&mut Vec<SlideStep>>) -> Result<CliqueResult> {
    let n = collection.len();
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    if !collection.has_uniform_weights() {
        return Err(Error::NonUniformWeights);
    }
    if !collection.has_uniform_lengths() {
        return Err(Error::NonUniformLengths);
    }

    let order = center_order(collection);
    let sorted: Vec<Interval> = order.iter().map(|&i| collection.items()[i]).collect();
    let mut index = EndpointIndex::new(sorted.iter());
    for it in &sorted[..k] {
        index.insert(it);
    }

    // Costs below are in units of the shared weight.
    let x_k = index.select(k);
    let x_k1 = index.select(k + 1);
    let cost_k: f64 = sorted[..k].iter().map(|it| unit_cost(it, x_k)).sum();
    let mut cost_k1 = update_same_window(cost_k, x_k, x_k1, index.count_left_of(x_k1), index.count_right_of(x_k));
    let mut x_prev = x_k1;

    let (mut best_start, mut best_point, mut best_cost) = if cost_k <= cost_k1 {
        (0, x_k, cost_k)
    } else {
        (0, x_k1, cost_k1)
    };

    for start in 1..=n - k {
        let out = &sorted[start - 1];
        let inn = &sorted[start + k - 1];
        let d_out = unit_cost(out, x_prev);
        let d_in = unit_cost(inn, x_prev);
        index.insert(inn);
        index.remove(out);

        let x_new = index.select(k);
        let strays = index.count_strictly_between(x_prev, x_new)
            + [out.left(), out.right()]
                .iter()
                .filter(|&&e| e > x_prev.min(x_new) && e < x_prev.max(x_new))
                .count();
        let gap_clear = strays == 0;
        debug_assert!(gap_clear, "endpoint strictly between x_prev={x_prev} and x_new={x_new} at window {start}");

        let counts = SlideCounts {
            left_at_new: index.count_left_of(x_new),
            right_at_new: index.count_right_of(x_new),
            left_at_prev: index.count_left_of(x_prev),
            right_at_prev: index.count_right_of(x_prev),
        };
        let cost_new = update_shift_window(cost_k1, x_prev, x_new, counts, d_out, d_in);
        let x_new_next = index.select(k + 1);
        cost_k1 = update_same_window(
            cost_new,
            x_new,
            x_new_next,
            index.count_left_of(x_new_next),
            index.count_right_of(x_new),
        );

        if let Some(t) = trace.as_deref_mut() {
            t.push(SlideStep {
                start,
                x_prev,
                x_new,
                x_new_next,
                cost_at_new: cost_new,
                cost_at_new_next: cost_k1,
                gap_clear,
            });
        }

        let (point, cost) = if cost_new <= cost_k1 { (x_new, cost_new) } else { (x_new_next, cost_k1) };
        if cost < best_cost {
            best_start = start;
            best_point = point;
            best_cost = cost;
        }
        x_prev = x_new_next;
    }

    let mut displacements = vec![0.0; n];
    let members: Vec<usize> = order[best_start..best_start + k].to_vec();
    for &i in &members {
        displacements[i] = displacement_to(&collection.items()[i], best_point);
    }
    let shifts = ShiftSolution::new(collection, displacements)?;
    Ok(CliqueResult {
        window_start: best_start + 1,
        point: best_point,
        cost: shifts.total_cost,
        shifts,
        members,
    })
}
