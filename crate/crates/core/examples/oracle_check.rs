//! Property checks with witnesses, and brute-force references for the solvers.

use interval_shift::gather::find_optimal_gathering_point;
use interval_shift::interval::Collection;
use interval_shift::kclique::solve_kclique;
use interval_shift::lp::{solve_property, Property, PropertySpec};
use interval_shift::oracle::{
    check_property, grid_search_lp, oracle_gathering, oracle_kclique_full, GraphProperty, GridOptions,
};

fn main() -> Result<(), interval_shift::error::Error> {
    let triangle = Collection::unit(&[0.0, 0.5, 1.0]);
    for p in [GraphProperty::Complete, GraphProperty::Acyclic, GraphProperty::KConnected] {
        let r = check_property(&triangle, p, 2, 0.0);
        println!("{p:?}: holds = {}, witness = {:?}", r.holds, r.witness);
    }
    let path = Collection::unit(&[0.0, 0.9, 1.8, 2.7]);
    println!("path 2-connected: {:?}", check_property(&path, GraphProperty::KConnected, 2, 0.0).witness);

    let c = Collection::unit(&[0.0, 3.0, 6.0, 9.0, 12.0]);
    println!("gather: solver {} oracle {}", find_optimal_gathering_point(&c)?.cost, oracle_gathering(&c)?.1);
    println!("2-clique: solver {} oracle {}", solve_kclique(&c, 2)?.cost, oracle_kclique_full(&c, 2)?);

    let stack = Collection::unit(&[0.0, 0.0, 0.0]);
    let spec = PropertySpec::new(Property::Edgeless);
    let lp = solve_property(&stack, &spec)?.objective;
    let grid = grid_search_lp(&stack, &spec, GridOptions { refinements: 5, ..Default::default() })?.cost;
    println!("edgeless stack: lp {lp} grid {grid}");
    Ok(())
}
