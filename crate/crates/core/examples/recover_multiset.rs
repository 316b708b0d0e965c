//! Recovers {χ(1)ε(χ)} from s(1), ..., s(k_r + 1), showing each stage.
//!
//!     cargo run --example recover_multiset -- sl23

use fsikit::group::{conjugacy_classes, enumerate_group, parse_group_spec, SpecFormat};
use fsikit::indicators::indicator_summary;
use fsikit::recovery::recover;

fn main() -> fsikit::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "sl23".into());
    let g = enumerate_group(&parse_group_spec(&name, SpecFormat::Preset)?)?;
    let cd = conjugacy_classes(&g);
    let rec = recover(&g, &cd)?;

    let counts: Vec<String> = rec.counts.values.iter().map(|s| s.to_string()).collect();
    let sums: Vec<String> = rec.power_sums.p.iter().map(|p| p.to_string()).collect();
    let roots: Vec<String> = rec.roots.iter().map(|r| r.to_string()).collect();
    println!("{name}: |G| = {}, k_r = {}", rec.order, rec.k_r);
    println!("s(n)        {}", counts.join(", "));
    println!("p(m)        {}", sums.join(", "));
    println!("polynomial  {}", rec.polynomial);
    println!("roots       {}", roots.join(", "));
    println!("multiset    {{{}}}", rec.multiset);

    let s = indicator_summary(&rec.multiset, &cd)?;
    println!("indicator +1: {}, -1: {}, 0: {}", s.plus, s.minus, s.zero);
    Ok(())
}
