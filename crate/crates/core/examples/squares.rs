//! Unit squares under L1 displacement: the problem splits into two interval problems.

use interval_shift::squares::{find_optimal_gathering_point_l1, UnitSquare};

fn main() -> Result<(), interval_shift::error::Error> {
    let squares = [UnitSquare::unit(0.0, 0.0), UnitSquare::unit(3.0, 4.0), UnitSquare::new(1.0, -2.0, 2.0)?];
    let r = find_optimal_gathering_point_l1(&squares)?;
    println!("gather at ({}, {}) for cost {}", r.point.0, r.point.1, r.cost);
    println!("optimal box: x in {:?}, y in {:?}", r.x_range, r.y_range);
    for (s, (dx, dy)) in squares.iter().zip(&r.shifts) {
        println!("  ({}, {}) moves by ({dx:+}, {dy:+})", s.x, s.y);
    }
    Ok(())
}
