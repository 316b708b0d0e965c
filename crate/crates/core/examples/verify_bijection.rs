//! The maps (x, y) ↦ (xy⁻¹, y) and (g, h) ↦ (gh, h) between the pairs with
//! y⁻¹xy = x⁻¹ and the pairs with g²h² = 1.
//!
//!     cargo run --example verify_bijection -- dihedral:4

use fsikit::group::{conjugacy_classes, enumerate_group, parse_group_spec, SpecFormat};
use fsikit::oracle::verify_bijection;

fn main() -> fsikit::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "dihedral:4".into());
    let g = enumerate_group(&parse_group_spec(&name, SpecFormat::Preset)?.named(name.clone()))?;
    let cd = conjugacy_classes(&g);
    let report = verify_bijection(&g, &cd)?;
    println!("{report}");
    std::process::exit(if report.passed() { 0 } else { 1 });
}
