//! Gathering axis-aligned unit squares under L1 displacement.
//!
//! The L1 cost separates into an x part and a y part, each of which is the
//! moving distance of a unit interval, so the 2-D problem is two independent
//! 1-D gathering problems.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gather::{find_optimal_gathering_point, GatherResult};
use crate::interval::{Collection, Interval};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitSquare {
    pub x: f64,
    pub y: f64,
    pub weight: f64,
}

impl UnitSquare {
    pub fn new(x: f64, y: f64, weight: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(Error::InvalidInterval(format!("square center must be finite, got ({x}, {y})")));
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::InvalidInterval(format!("weight must be positive, got {weight}")));
        }
        Ok(Self { x, y, weight })
    }

    pub fn unit(x: f64, y: f64) -> Self {
        Self { x, y, weight: 1.0 }
    }

    pub fn shifted(&self, dx: f64, dy: f64) -> Self {
        Self { x: self.x + dx, y: self.y + dy, ..*self }
    }

    /// Closed intersection of two unit squares.
    pub fn intersects(&self, other: &UnitSquare) -> bool {
        (self.x - other.x).abs() <= 1.0 && (self.y - other.y).abs() <= 1.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SquareGatherResult {
    pub point: (f64, f64),
    pub cost: f64,
    pub shifts: Vec<(f64, f64)>,
    /// Optimal range of the x coordinate.
    pub x_range: (f64, f64),
    /// Optimal range of the y coordinate.
    pub y_range: (f64, f64),
}

pub fn square_moving_distance(square: &UnitSquare, p: (f64, f64)) -> f64 {
    let dx = ((square.x - p.0).abs() - 0.5).max(0.0);
    let dy = ((square.y - p.1).abs() - 0.5).max(0.0);
    square.weight * (dx + dy)
}

/// Unit-interval instance formed by one coordinate of every square.
pub fn axis_instance(squares: &[UnitSquare], axis: Axis) -> Collection {
    squares
        .iter()
        .map(|s| {
            let c = match axis {
                Axis::X => s.x,
                Axis::Y => s.y,
            };
            Interval::new(c, 1.0, s.weight).expect("validated square")
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

pub fn find_optimal_gathering_point_l1(squares: &[UnitSquare]) -> Result<SquareGatherResult> {
    if squares.is_empty() {
        return Err(Error::EmptyInstance);
    }
    let gx: GatherResult = find_optimal_gathering_point(&axis_instance(squares, Axis::X))?;
    let gy: GatherResult = find_optimal_gathering_point(&axis_instance(squares, Axis::Y))?;
    let shifts = gx
        .shifts
        .displacements
        .iter()
        .zip(&gy.shifts.displacements)
        .map(|(&dx, &dy)| (dx, dy))
        .collect();
    Ok(SquareGatherResult {
        point: (gx.point_lo, gy.point_lo),
        cost: gx.cost + gy.cost,
        shifts,
        x_range: (gx.point_lo, gx.point_hi),
        y_range: (gy.point_lo, gy.point_hi),
    })
}
