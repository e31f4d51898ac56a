//! Reproducible random instances, written in the JSON instance format.

use interval_shift::gen::{generate, GenOptions, Kind};
use interval_shift::instance::InstanceFile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file = generate(&GenOptions::new(5, 42).span(3.0).max_weight(3))?;
    let text = file.emit();
    print!("{text}");
    assert_eq!(InstanceFile::parse_str(&text)?, file);

    let squares = generate(&GenOptions::new(3, 42).kind(Kind::Squares).grid(1.0))?;
    print!("{}", squares.emit());
    Ok(())
}
