//! Linear-time order statistics on `f64` slices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// How the partition pivot is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Median of medians of groups of five; worst-case linear.
    #[default]
    MedianOfMedians,
    /// Uniform random pivot from a seeded generator; expected linear.
    Random { seed: u64 },
}

/// Returns the `k`-th smallest value (0-based) of `values`, permuting the
/// slice in the process. Panics if `k >= values.len()`.
pub fn select_kth(values: &mut [f64], k: usize, rule: PivotRule) -> f64 {
    assert!(k < values.len(), "select index {k} out of range for {} values", values.len());
    match rule {
        PivotRule::MedianOfMedians => select_mom(values, k),
        PivotRule::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            select_random(values, k, &mut rng)
        }
    }
}

/// Lower median: the `(len - 1) / 2`-th smallest value.
pub fn lower_median(values: &mut [f64], rule: PivotRule) -> f64 {
    let k = (values.len() - 1) / 2;
    select_kth(values, k, rule)
}

fn select_mom(mut v: &mut [f64], mut k: usize) -> f64 {
    loop {
        if v.len() <= 10 {
            insertion_sort(v);
            return v[k];
        }
        let pivot = median_of_medians(v);
        let (lt, eq) = partition3(v, pivot);
        if k < lt {
            v = &mut v[..lt];
        } else if k < lt + eq {
            return pivot;
        } else {
            k -= lt + eq;
            v = &mut v[lt + eq..];
        }
    }
}

fn median_of_medians(v: &mut [f64]) -> f64 {
    let groups = v.len().div_ceil(5);
    for g in 0..groups {
        let start = g * 5;
        let end = (start + 5).min(v.len());
        insertion_sort(&mut v[start..end]);
        let mid = start + (end - start - 1) / 2;
        v.swap(g, mid);
    }
    select_mom(&mut v[..groups], (groups - 1) / 2)
}

fn select_random(mut v: &mut [f64], mut k: usize, rng: &mut impl Rng) -> f64 {
    loop {
        if v.len() <= 10 {
            insertion_sort(v);
            return v[k];
        }
        let pivot = v[rng.gen_range(0..v.len())];
        let (lt, eq) = partition3(v, pivot);
        if k < lt {
            v = &mut v[..lt];
        } else if k < lt + eq {
            return pivot;
        } else {
            k -= lt + eq;
            v = &mut v[lt + eq..];
        }
    }
}

/// Dutch-flag partition; returns `(count < pivot, count == pivot)`.
fn partition3(v: &mut [f64], pivot: f64) -> (usize, usize) {
    let (mut lo, mut mid, mut hi) = (0, 0, v.len());
    while mid < hi {
        if v[mid] < pivot {
            v.swap(lo, mid);
            lo += 1;
            mid += 1;
        } else if v[mid] > pivot {
            hi -= 1;
            v.swap(mid, hi);
        } else {
            mid += 1;
        }
    }
    (lo, hi - lo)
}

fn insertion_sort(v: &mut [f64]) {
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            j -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        let mut a = vec![72.0, 6.0, 57.0, 88.0, 60.0, 42.0, 83.0, 73.0, 48.0, 85.0, 10.0, 14.0, 23.0];
        assert_eq!(select_kth(&mut a.clone(), 5, PivotRule::MedianOfMedians), 48.0);
        assert_eq!(select_kth(&mut a, 5, PivotRule::Random { seed: 7 }), 48.0);
        assert_eq!(lower_median(&mut [3.0, 1.0, 2.0, 4.0], PivotRule::MedianOfMedians), 2.0);
    }

    #[test]
    fn all_equal() {
        let mut a = vec![1.5; 1000];
        assert_eq!(select_kth(&mut a, 999, PivotRule::MedianOfMedians), 1.5);
    }

    proptest! {
        #[test]
        fn matches_sorting(mut v in prop::collection::vec(-50i32..50, 1..400), pick in any::<prop::sample::Index>(), seed in any::<u64>()) {
            let mut v: Vec<f64> = v.drain(..).map(|x| x as f64 * 0.5).collect();
            let k = pick.index(v.len());
            let mut sorted = v.clone();
            sorted.sort_by(f64::total_cmp);
            prop_assert_eq!(select_kth(&mut v.clone(), k, PivotRule::MedianOfMedians), sorted[k]);
            prop_assert_eq!(select_kth(&mut v, k, PivotRule::Random { seed }), sorted[k]);
        }
    }
}
