//! Order-statistic multiset of interval endpoints over a fixed, compressed
//! coordinate set. Backed by Fenwick trees, so insert, delete, select and
//! rank are all `O(log n)`.

use crate::interval::Interval;

#[derive(Debug, Clone)]
struct Fenwick {
    tree: Vec<i64>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Self { tree: vec![0; n + 1] }
    }

    fn add(&mut self, pos: usize, delta: i64) {
        let mut i = pos + 1;
        while i < self.tree.len() {
            self.tree[i] += delta;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum over positions `0..end`.
    fn prefix(&self, end: usize) -> i64 {
        let mut i = end;
        let mut s = 0;
        while i > 0 {
            s += self.tree[i];
            i &= i - 1;
        }
        s
    }

    /// Smallest position whose prefix sum (inclusive) reaches `k >= 1`.
    fn lower_bound(&self, mut k: i64) -> usize {
        let n = self.tree.len() - 1;
        let mut pos = 0;
        let mut step = n.next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next] < k {
                pos = next;
                k -= self.tree[next];
            }
            step >>= 1;
        }
        pos
    }
}

/// Endpoint multiset of a dynamic set of intervals whose endpoints all come
/// from a coordinate universe fixed at construction.
#[derive(Debug, Clone)]
pub struct EndpointIndex {
    coords: Vec<f64>,
    lefts: Fenwick,
    rights: Fenwick,
    all: Fenwick,
    left_total: usize,
    right_total: usize,
}

impl EndpointIndex {
    /// Builds an empty index able to hold endpoints of `universe`.
    pub fn new<'a>(universe: impl IntoIterator<Item = &'a Interval>) -> Self {
        let mut coords: Vec<f64> = universe.into_iter().flat_map(|it| [it.left(), it.right()]).collect();
        coords.sort_by(f64::total_cmp);
        coords.dedup();
        let m = coords.len();
        Self {
            coords,
            lefts: Fenwick::new(m),
            rights: Fenwick::new(m),
            all: Fenwick::new(m),
            left_total: 0,
            right_total: 0,
        }
    }

    fn position(&self, x: f64) -> usize {
        self.coords
            .binary_search_by(|c| c.total_cmp(&x))
            .expect("endpoint outside the index universe")
    }

    pub fn insert(&mut self, interval: &Interval) {
        self.update(interval, 1);
    }

    pub fn remove(&mut self, interval: &Interval) {
        self.update(interval, -1);
    }

    fn update(&mut self, interval: &Interval, delta: i64) {
        let l = self.position(interval.left());
        let r = self.position(interval.right());
        self.lefts.add(l, delta);
        self.rights.add(r, delta);
        self.all.add(l, delta);
        self.all.add(r, delta);
        if delta > 0 {
            self.left_total += 1;
            self.right_total += 1;
        } else {
            self.left_total -= 1;
            self.right_total -= 1;
        }
    }

    /// Number of endpoints stored (twice the number of intervals).
    pub fn len(&self) -> usize {
        self.left_total + self.right_total
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The `k`-th smallest stored endpoint, 1-based.
    pub fn select(&self, k: usize) -> f64 {
        assert!(k >= 1 && k <= self.len(), "select({k}) on {} endpoints", self.len());
        self.coords[self.all.lower_bound(k as i64)]
    }

    fn first_at_or_above(&self, x: f64) -> usize {
        self.coords.partition_point(|&c| c < x)
    }

    fn first_above(&self, x: f64) -> usize {
        self.coords.partition_point(|&c| c <= x)
    }

    /// Intervals entirely left of `x` (right endpoint `< x`).
    pub fn count_left_of(&self, x: f64) -> usize {
        self.rights.prefix(self.first_at_or_above(x)) as usize
    }

    /// Intervals entirely right of `x` (left endpoint `> x`).
    pub fn count_right_of(&self, x: f64) -> usize {
        self.left_total - self.lefts.prefix(self.first_above(x)) as usize
    }

    /// Stored endpoints strictly inside `(a, b)`.
    pub fn count_strictly_between(&self, a: f64, b: f64) -> usize {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let hi = self.first_at_or_above(b);
        let lo = self.first_above(a);
        if hi <= lo {
            0
        } else {
            (self.all.prefix(hi) - self.all.prefix(lo)) as usize
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{left_right_counts, Collection};
    use proptest::prelude::*;

    #[test]
    fn select_and_rank() {
        let c = Collection::unit(&[0.0, 2.0, 4.0, 2.0]);
        let mut idx = EndpointIndex::new(c.iter());
        for it in c.iter() {
            idx.insert(it);
        }
        assert_eq!(idx.len(), 8);
        let got: Vec<f64> = (1..=8).map(|k| idx.select(k)).collect();
        assert_eq!(got, vec![-0.5, 0.5, 1.5, 1.5, 2.5, 2.5, 3.5, 4.5]);
        assert_eq!(idx.count_left_of(1.5), 1);
        assert_eq!(idx.count_right_of(2.5), 1);
        assert_eq!(idx.count_strictly_between(0.5, 3.5), 4);
        assert_eq!(idx.count_strictly_between(3.5, 0.5), 4);

        idx.remove(&c.items()[1]);
        assert_eq!(idx.len(), 6);
        assert_eq!(idx.select(3), 1.5);
        assert_eq!(idx.select(4), 2.5);
    }

    proptest! {
        #[test]
        fn matches_naive(centers in prop::collection::vec(-20i32..20, 1..40), mask in prop::collection::vec(any::<bool>(), 40), probe in -25i32..25) {
            let c = Collection::unit(&centers.iter().map(|&x| x as f64 * 0.5).collect::<Vec<_>>());
            let mut idx = EndpointIndex::new(c.iter());
            let kept: Collection = c.iter().zip(&mask).filter(|(_, &m)| m).map(|(it, _)| *it).collect();
            for it in kept.iter() {
                idx.insert(it);
            }
            let mut ends = kept.endpoints();
            ends.sort_by(f64::total_cmp);
            for (k, &e) in ends.iter().enumerate() {
                prop_assert_eq!(idx.select(k + 1), e);
            }
            let x = probe as f64 * 0.25;
            prop_assert_eq!((idx.count_left_of(x), idx.count_right_of(x)), left_right_counts(&kept, x));
        }
    }
}
