//! Shifting unit intervals until their graph is edgeless, acyclic, free of
//! 3-cliques, or 2-connected, by linear programming.

use interval_shift::interval::{shifted_in_place, Collection};
use interval_shift::lp::{solve_property, to_lp_format, ConnectivityOffset, Property, PropertySpec};
use interval_shift::oracle::check_property;

fn main() -> Result<(), interval_shift::error::Error> {
    let c = Collection::unit(&[0.0, 0.0, 0.5, 1.0, 4.0, 4.2]);
    let specs = [
        PropertySpec::new(Property::Edgeless),
        PropertySpec::new(Property::Acyclic),
        PropertySpec::new(Property::NoKClique).with_k(3),
        PropertySpec::new(Property::KConnected).with_k(2),
    ];
    for spec in specs {
        let sol = solve_property(&c, &spec)?;
        let shifted = shifted_in_place(&c, &sol.shifts.displacements)?;
        let report = check_property(&shifted, spec.property.into(), spec.k, spec.eps / 2.0);
        println!(
            "{:<11} cost {:.6} (without eps {:.6}), property holds: {}",
            spec.property.name(),
            sol.objective,
            sol.cost_without_eps,
            report.holds
        );
    }

    let gap = Collection::unit(&[0.0, 1.0, 4.0]);
    let spec = PropertySpec::new(Property::KConnected).with_k(1);
    let validated = solve_property(&gap, &spec)?.objective;
    let literal = solve_property(&gap, &spec.with_offset(ConnectivityOffset::PaperLiteral))?.objective;
    println!("connectivity offsets on {{0, 1, 4}}: k gives {validated}, k + 1 gives {literal}");

    println!("\n{}", to_lp_format(&solve_property(&Collection::unit(&[0.0, 0.0]), &specs[0])?.program));
    Ok(())
}
