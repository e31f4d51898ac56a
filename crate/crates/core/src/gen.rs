//! Deterministic random instances.
//!
//! Algorithm (stable across releases): a ChaCha8 stream seeded with
//! `seed_from_u64(seed)`; let `m = floor(span / grid)`. For each item, in
//! order, draw
//!
//! 1. the center (intervals) or `x` then `y` (squares) as `grid * u` with `u`
//!    uniform on the integers `[-m, m]`;
//! 2. intervals only, when `max_length != 1`: the length as `grid * v` with
//!    `v` uniform on `[1, max(1, floor(max_length / grid))]`;
//! 3. when `max_weight > 1`: the weight, uniform on the integers `[1, max_weight]`.
//!
//! With the default `grid = 0.5` every coordinate and endpoint is a multiple
//! of 0.25, so all cost arithmetic on generated data is exact.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::InstanceFile;
use crate::interval::{Collection, Interval};
use crate::squares::UnitSquare;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    #[default]
    Intervals,
    Squares,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenOptions {
    pub n: usize,
    pub seed: u64,
    pub span: f64,
    pub grid: f64,
    pub kind: Kind,
    pub max_length: f64,
    pub max_weight: u32,
}

impl GenOptions {
    pub fn new(n: usize, seed: u64) -> Self {
        Self { n, seed, span: 10.0, grid: 0.5, kind: Kind::Intervals, max_length: 1.0, max_weight: 1 }
    }

    pub fn span(mut self, span: f64) -> Self {
        self.span = span;
        self
    }

    pub fn grid(mut self, grid: f64) -> Self {
        self.grid = grid;
        self
    }

    pub fn kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    pub fn max_length(mut self, max_length: f64) -> Self {
        self.max_length = max_length;
        self
    }

    pub fn max_weight(mut self, max_weight: u32) -> Self {
        self.max_weight = max_weight;
        self
    }

    fn check(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidInterval(format!("generator: {what}")));
        if self.n == 0 {
            return bad("n must be at least 1");
        }
        if !(self.grid.is_finite() && self.grid > 0.0) {
            return bad("grid must be positive");
        }
        if !(self.span.is_finite() && self.span >= 0.0) {
            return bad("span must be non-negative");
        }
        if !(self.max_length.is_finite() && self.max_length > 0.0) {
            return bad("max_length must be positive");
        }
        if self.max_weight == 0 {
            return bad("max_weight must be at least 1");
        }
        Ok(())
    }
}

struct Draw {
    rng: ChaCha8Rng,
    m: i64,
    grid: f64,
}

impl Draw {
    fn coord(&mut self) -> f64 {
        self.grid * self.rng.gen_range(-self.m..=self.m) as f64
    }
}

fn draw(options: &GenOptions) -> Draw {
    Draw {
        rng: ChaCha8Rng::seed_from_u64(options.seed),
        m: (options.span / options.grid).floor() as i64,
        grid: options.grid,
    }
}

fn weight(d: &mut Draw, max_weight: u32) -> f64 {
    if max_weight > 1 {
        d.rng.gen_range(1..=max_weight) as f64
    } else {
        1.0
    }
}

pub fn generate_intervals(options: &GenOptions) -> Result<Collection> {
    options.check()?;
    let mut d = draw(options);
    let length_steps = ((options.max_length / options.grid).floor() as i64).max(1);
    let mut items = Vec::with_capacity(options.n);
    for _ in 0..options.n {
        let center = d.coord();
        let length = if options.max_length == 1.0 {
            1.0
        } else {
            options.grid * d.rng.gen_range(1..=length_steps) as f64
        };
        let w = weight(&mut d, options.max_weight);
        items.push(Interval::new(center, length, w)?);
    }
    Ok(Collection::new(items))
}

pub fn generate_squares(options: &GenOptions) -> Result<Vec<UnitSquare>> {
    options.check()?;
    let mut d = draw(options);
    let mut out = Vec::with_capacity(options.n);
    for _ in 0..options.n {
        let x = d.coord();
        let y = d.coord();
        let w = weight(&mut d, options.max_weight);
        out.push(UnitSquare::new(x, y, w)?);
    }
    Ok(out)
}

/// Generates an instance file of the requested kind, recording the seed.
pub fn generate(options: &GenOptions) -> Result<InstanceFile> {
    let name = Some(format!("random-{}-n{}-s{}", match options.kind {
        Kind::Intervals => "intervals",
        Kind::Squares => "squares",
    }, options.n, options.seed));
    Ok(match options.kind {
        Kind::Intervals => InstanceFile::from_collection(&generate_intervals(options)?, name, Some(options.seed)),
        Kind::Squares => InstanceFile::from_squares(&generate_squares(options)?, name, Some(options.seed)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let o = GenOptions::new(50, 7).max_weight(5).max_length(3.0);
        assert_eq!(generate(&o).unwrap().emit(), generate(&o).unwrap().emit());
        assert_ne!(generate(&o).unwrap().emit(), generate(&GenOptions { seed: 8, ..o }).unwrap().emit());
    }

    #[test]
    fn zero_n_rejected() {
        assert!(generate(&GenOptions::new(0, 1)).is_err());
    }

    #[test]
    fn grid_respected() {
        let c = generate_intervals(&GenOptions::new(500, 3).span(7.3)).unwrap();
        for it in &c {
            assert_eq!((it.center() / 0.5).fract(), 0.0);
            assert!(it.center().abs() <= 7.3);
            assert_eq!((it.length(), it.weight()), (1.0, 1.0));
        }
        let s = generate_squares(&GenOptions::new(100, 3).grid(0.25).kind(Kind::Squares).max_weight(3)).unwrap();
        assert!(s.iter().all(|q| (q.x / 0.25).fract() == 0.0 && (q.y / 0.25).fract() == 0.0));
        assert!(s.iter().all(|q| (1.0..=3.0).contains(&q.weight)));
    }

    #[test]
    fn variable_lengths_stay_on_grid() {
        let c = generate_intervals(&GenOptions::new(300, 11).max_length(2.5)).unwrap();
        assert!(c.iter().all(|it| (it.length() / 0.5).fract() == 0.0 && it.length() >= 0.5 && it.length() <= 2.5));
        assert!(!c.has_uniform_lengths());
    }
}
