//! Cheapest way to make k unit intervals overlap, with the per-window trace.

use interval_shift::interval::Collection;
use interval_shift::kclique::solve_kclique_traced;

fn main() -> Result<(), interval_shift::error::Error> {
    let c = Collection::unit(&[0.0, 3.0, 6.0, 6.5, 7.0, 9.0, 12.0]);
    for k in 2..=4 {
        let (r, trace) = solve_kclique_traced(&c, k)?;
        println!(
            "k = {k}: window {} (members {:?}) meets at {} for cost {}",
            r.window_start, r.members, r.point, r.cost
        );
        for s in &trace {
            println!("    slide to window {}: D = {} at {}", s.start + 1, s.cost_at_new, s.x_new);
        }
    }
    Ok(())
}
