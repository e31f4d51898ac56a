//! Cheapest point to gather weighted intervals at, and the shifts that get there.

use interval_shift::gather::{find_optimal_gathering_point, uniform_slope_gathering_point};
use interval_shift::interval::{Collection, Interval};

fn main() -> Result<(), interval_shift::error::Error> {
    let unit = Collection::unit(&[0.0, 2.0, 4.0]);
    let r = uniform_slope_gathering_point(&unit)?;
    println!("unit {{0, 2, 4}}: optimum on [{}, {}], cost {}", r.point_lo, r.point_hi, r.cost);

    let weighted: Collection = [(0.0, 1.0, 1.0), (10.0, 1.0, 3.0), (4.0, 2.5, 2.0)]
        .into_iter()
        .map(|(c, len, w)| Interval::new(c, len, w))
        .collect::<Result<_, _>>()?;
    let r = find_optimal_gathering_point(&weighted)?;
    println!("weighted: point {} cost {}", r.point_lo, r.cost);
    for (it, d) in weighted.iter().zip(&r.shifts.displacements) {
        println!("  center {:>5} (weight {}) moves {:+}", it.center(), it.weight(), d);
    }
    Ok(())
}
