//! s_k(n)/|G|^(n-1) against Σ ε_k(χ)ⁿ/χ(1)^(n-2) from an embedded table.
//!
//!     cargo run --example higher_indicators -- Q8 3

use fsikit::group::{conjugacy_classes, enumerate_group, parse_group_spec, SpecFormat};
use fsikit::indicators::higher_indicator_check;
use fsikit::oracle::{fixture, fixture_preset};

fn main() -> fsikit::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "Q8".into());
    let k: u64 = args.next().map_or(3, |s| s.parse().expect("k must be an integer"));

    let fx = fixture(&name)?;
    let preset = fixture_preset(&name).expect("fixture has a preset");
    let g = enumerate_group(&parse_group_spec(preset, SpecFormat::Preset)?)?;
    let cd = conjugacy_classes(&g);
    let r = higher_indicator_check(&g, &cd, k, 6, Some(&fx))?;

    let eps: Vec<String> = r.indicators.iter().flatten().map(|e| e.to_string()).collect();
    println!("{name}, k = {k}: ε_k = ({})", eps.join(", "));
    for (n, (lhs, rhs)) in r.ratios.iter().zip(r.character_side.iter().flatten()).enumerate() {
        println!("n = {}: {lhs} = {rhs}  {}", n + 1, if lhs == rhs { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
