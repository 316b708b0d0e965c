//! Compares the recovered multiset with the one read off each embedded
//! character table.
//!
//!     cargo run --example fixture_oracle

use fsikit::group::{conjugacy_classes, enumerate_group, parse_group_spec, SpecFormat};
use fsikit::oracle::{fixture_indicator_multiset, fixture_names, fixture_preset};
use fsikit::recovery::recover_indicator_multiset;

fn main() -> fsikit::Result<()> {
    let mut all = true;
    for name in fixture_names() {
        let preset = fixture_preset(name).unwrap();
        let g = enumerate_group(&parse_group_spec(preset, SpecFormat::Preset)?)?;
        let recovered = recover_indicator_multiset(&g, &conjugacy_classes(&g))?;
        let expected = fixture_indicator_multiset(name)?;
        let same = recovered == expected;
        all &= same;
        println!("{name:<8} {{{recovered}}}  table {{{expected}}}  {}", if same { "ok" } else { "MISMATCH" });
    }
    std::process::exit(if all { 0 } else { 1 });
}
