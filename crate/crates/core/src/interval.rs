//! Weighted closed intervals, collections of them, and the moving-distance
//! cost model shared by every solver.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A closed segment `[center - length/2, center + length/2]` with a slope
/// weight charged per unit of displacement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    center: f64,
    length: f64,
    weight: f64,
}

impl Interval {
    pub fn new(center: f64, length: f64, weight: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::InvalidInterval(format!("center must be finite, got {center}")));
        }
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::InvalidInterval(format!("length must be positive, got {length}")));
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::InvalidInterval(format!("weight must be positive, got {weight}")));
        }
        Ok(Self { center, length, weight })
    }

    /// Unit-length interval with weight 1.
    pub fn unit(center: f64) -> Self {
        Self { center, length: 1.0, weight: 1.0 }
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn left(&self) -> f64 {
        self.center - self.length / 2.0
    }

    pub fn right(&self) -> f64 {
        self.center + self.length / 2.0
    }

    pub fn contains(&self, x: f64) -> bool {
        self.left() <= x && x <= self.right()
    }

    /// Same interval translated by `d`.
    pub fn shifted(&self, d: f64) -> Self {
        Self { center: self.center + d, ..*self }
    }

    pub(crate) fn with_weight(&self, weight: f64) -> Self {
        Self { weight, ..*self }
    }

    /// Closed intersection test.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.intersects_within(other, 0.0)
    }

    /// Intersection test where a gap of at most `tol` still counts as touching.
    pub fn intersects_within(&self, other: &Interval, tol: f64) -> bool {
        self.left().max(other.left()) <= self.right().min(other.right()) + tol
    }
}

/// Weighted cost of translating `interval` just far enough to contain `x`.
pub fn moving_distance(interval: &Interval, x: f64) -> f64 {
    let half = interval.length / 2.0;
    if x - half - interval.center > 0.0 {
        interval.weight * (x - interval.center - half)
    } else if x + half - interval.center < 0.0 {
        interval.weight * (interval.center - x - half)
    } else {
        0.0
    }
}

/// Signed displacement that moves `interval` just far enough to contain `x`.
pub fn displacement_to(interval: &Interval, x: f64) -> f64 {
    if interval.right() < x {
        x - interval.right()
    } else if interval.left() > x {
        x - interval.left()
    } else {
        0.0
    }
}

/// An ordered multiset of intervals.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Collection {
    items: Vec<Interval>,
    sorted_by_center: bool,
}

impl Collection {
    pub fn new(items: Vec<Interval>) -> Self {
        let sorted_by_center = items.windows(2).all(|w| w[0].center <= w[1].center);
        Self { items, sorted_by_center }
    }

    pub fn unit(centers: &[f64]) -> Self {
        Self::new(centers.iter().map(|&c| Interval::unit(c)).collect())
    }

    pub fn items(&self) -> &[Interval] {
        &self.items
    }

    pub fn into_items(self) -> Vec<Interval> {
        self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn is_sorted_by_center(&self) -> bool {
        self.sorted_by_center
    }

    pub fn get(&self, i: usize) -> Option<&Interval> {
        self.items.get(i)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.items.iter()
    }

    /// Endpoint multiset, two values per interval, in item order.
    pub fn endpoints(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(2 * self.items.len());
        for it in &self.items {
            out.push(it.left());
            out.push(it.right());
        }
        out
    }

    pub fn leftmost(&self) -> Option<f64> {
        self.items.iter().map(Interval::left).min_by(f64::total_cmp)
    }

    pub fn rightmost(&self) -> Option<f64> {
        self.items.iter().map(Interval::right).max_by(f64::total_cmp)
    }

    pub fn has_uniform_weights(&self) -> bool {
        self.items.windows(2).all(|w| w[0].weight == w[1].weight)
    }

    pub fn has_uniform_lengths(&self) -> bool {
        self.items.windows(2).all(|w| w[0].length == w[1].length)
    }
}

impl FromIterator<Interval> for Collection {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Collection {
    type Item = &'a Interval;
    type IntoIter = std::slice::Iter<'a, Interval>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// Sum of [`moving_distance`] over every interval.
pub fn total_moving_distance(collection: &Collection, x: f64) -> Result<f64> {
    if collection.is_empty() {
        return Err(Error::EmptyInstance);
    }
    Ok(collection.iter().map(|it| moving_distance(it, x)).sum())
}

/// Stable sort by center.
pub fn sort_by_center(collection: &Collection) -> Collection {
    let mut items = collection.items.clone();
    items.sort_by(|a, b| a.center.total_cmp(&b.center));
    Collection { items, sorted_by_center: true }
}

/// Permutation that stably sorts `collection` by center.
pub fn center_order(collection: &Collection) -> Vec<usize> {
    let mut order: Vec<usize> = (0..collection.len()).collect();
    order.sort_by(|&a, &b| collection.items[a].center.total_cmp(&collection.items[b].center));
    order
}

/// The `k`-th smallest endpoint (1-based, duplicates counted).
pub fn kth_endpoint(collection: &Collection, k: usize) -> Result<f64> {
    let max = 2 * collection.len();
    if k == 0 || k > max {
        return Err(Error::IndexOutOfRange { k, max });
    }
    let mut ends = collection.endpoints();
    let (_, v, _) = ends.select_nth_unstable_by(k - 1, f64::total_cmp);
    Ok(*v)
}

/// Number of intervals strictly left of `x` (`r < x`) and strictly right of
/// `x` (`l > x`).
pub fn left_right_counts(collection: &Collection, x: f64) -> (usize, usize) {
    collection.iter().fold((0, 0), |(l, r), it| {
        (l + usize::from(it.right() < x), r + usize::from(it.left() > x))
    })
}

/// Signed displacement per interval together with its weighted cost.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShiftSolution {
    pub displacements: Vec<f64>,
    pub total_cost: f64,
}

impl ShiftSolution {
    pub fn zero(n: usize) -> Self {
        Self { displacements: vec![0.0; n], total_cost: 0.0 }
    }

    /// Pairs `displacements` with `collection` and computes the weighted cost.
    pub fn new(collection: &Collection, displacements: Vec<f64>) -> Result<Self> {
        if displacements.len() != collection.len() {
            return Err(Error::SizeMismatch { expected: collection.len(), got: displacements.len() });
        }
        let total_cost = collection
            .iter()
            .zip(&displacements)
            .map(|(it, d)| it.weight * d.abs())
            .sum();
        Ok(Self { displacements, total_cost })
    }
}

/// Moves interval `i` by `displacements[i]` and re-sorts the result by center.
pub fn apply_shifts(collection: &Collection, shifts: &ShiftSolution) -> Result<Collection> {
    let shifted = shifted_in_place(collection, &shifts.displacements)?;
    Ok(sort_by_center(&shifted))
}

/// Moves interval `i` by `displacements[i]`, keeping the input order.
pub fn shifted_in_place(collection: &Collection, displacements: &[f64]) -> Result<Collection> {
    if displacements.len() != collection.len() {
        return Err(Error::SizeMismatch { expected: collection.len(), got: displacements.len() });
    }
    Ok(collection
        .iter()
        .zip(displacements)
        .map(|(it, &d)| it.shifted(d))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(c: f64, len: f64, m: f64) -> Interval {
        Interval::new(c, len, m).unwrap()
    }

    #[test]
    fn moving_distance_cases() {
        assert_eq!(moving_distance(&iv(0.0, 1.0, 1.0), 0.3), 0.0);
        assert_eq!(moving_distance(&iv(0.0, 1.0, 2.0), 3.0), 5.0);
        assert_eq!(moving_distance(&iv(4.0, 1.0, 1.0), 2.0), 1.5);
        // boundary is inside the closed interval
        assert_eq!(moving_distance(&iv(0.0, 1.0, 1.0), 0.5), 0.0);
    }

    #[test]
    fn total_moving_distance_cases() {
        let c = Collection::unit(&[0.0, 2.0, 4.0]);
        assert_eq!(total_moving_distance(&c, 2.0).unwrap(), 3.0);

        let c = Collection::new(vec![iv(0.0, 1.0, 1.0), iv(10.0, 1.0, 3.0)]);
        assert_eq!(total_moving_distance(&c, 9.5).unwrap(), 9.0);

        let c = Collection::new(vec![iv(0.0, 4.0, 1.0), iv(1.0, 2.0, 2.0)]);
        assert_eq!(total_moving_distance(&c, 0.5).unwrap(), 0.0);

        assert_eq!(total_moving_distance(&Collection::default(), 0.0), Err(Error::EmptyInstance));
    }

    #[test]
    fn invalid_intervals_rejected() {
        assert!(Interval::new(0.0, 0.0, 1.0).is_err());
        assert!(Interval::new(0.0, -1.0, 1.0).is_err());
        assert!(Interval::new(0.0, 1.0, 0.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn sort_is_stable() {
        let c = Collection::unit(&[4.0, 0.0, 2.0]);
        assert!(!c.is_sorted_by_center());
        let s = sort_by_center(&c);
        let centers: Vec<f64> = s.iter().map(Interval::center).collect();
        assert_eq!(centers, vec![0.0, 2.0, 4.0]);
        assert!(s.is_sorted_by_center());

        let sorted = Collection::unit(&[0.0, 1.0, 2.0]);
        assert_eq!(sort_by_center(&sorted), sorted);

        let dup = Collection::new(vec![iv(1.0, 1.0, 1.0), iv(1.0, 2.0, 1.0)]);
        let s = sort_by_center(&dup);
        assert_eq!(s.items()[0].length(), 1.0);
        assert_eq!(s.items()[1].length(), 2.0);
    }

    #[test]
    fn kth_endpoint_cases() {
        let c = Collection::unit(&[0.0, 2.0, 4.0]);
        assert_eq!(kth_endpoint(&c, 3).unwrap(), 1.5);
        assert_eq!(kth_endpoint(&c, 1).unwrap(), c.leftmost().unwrap());
        assert_eq!(kth_endpoint(&c, 6).unwrap(), 4.5);
        assert_eq!(kth_endpoint(&c, 0), Err(Error::IndexOutOfRange { k: 0, max: 6 }));
        assert_eq!(kth_endpoint(&c, 7), Err(Error::IndexOutOfRange { k: 7, max: 6 }));

        let twin = Collection::unit(&[1.0, 1.0]);
        assert_eq!(kth_endpoint(&twin, 2).unwrap(), kth_endpoint(&twin, 1).unwrap());
    }

    #[test]
    fn left_right_counts_cases() {
        let c = Collection::unit(&[0.0, 2.0, 4.0]);
        assert_eq!(left_right_counts(&c, 2.5), (1, 1));
        assert_eq!(left_right_counts(&c, -10.0), (0, 3));
        // x = r(I_1) = 0.5: I_1 is in neither set
        assert_eq!(left_right_counts(&c, 0.5), (0, 2));
    }

    #[test]
    fn apply_shifts_cases() {
        let c = Collection::unit(&[0.0, 2.0]);
        let zero = ShiftSolution::zero(2);
        assert_eq!(apply_shifts(&c, &zero).unwrap(), c);

        let one = Collection::unit(&[0.0]);
        let s = ShiftSolution::new(&one, vec![2.5]).unwrap();
        assert_eq!(apply_shifts(&one, &s).unwrap().items()[0].center(), 2.5);

        let s = ShiftSolution::new(&c, vec![5.0, 0.0]).unwrap();
        let out = apply_shifts(&c, &s).unwrap();
        assert!(out.is_sorted_by_center());
        assert_eq!(out.items()[0].center(), 2.0);
        assert_eq!(out.items()[1].center(), 5.0);

        assert_eq!(
            apply_shifts(&c, &ShiftSolution::zero(3)),
            Err(Error::SizeMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn shift_cost_is_weighted() {
        let c = Collection::new(vec![iv(0.0, 1.0, 2.0), iv(3.0, 1.0, 1.0)]);
        let s = ShiftSolution::new(&c, vec![-1.5, 2.0]).unwrap();
        assert_eq!(s.total_cost, 5.0);
    }
}
