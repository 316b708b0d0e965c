//! Times the class-algebra and element-level routes to s(1..=N).
//!
//!     cargo run --release --example bench_strategies -- alternating:5 16

use std::time::Instant;

use fsikit::class_algebra::{solution_count_sequence, Strategy};
use fsikit::group::{conjugacy_classes, enumerate_group, parse_group_spec, SpecFormat};

fn main() -> fsikit::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "alternating:5".into());
    let max_n: usize = args.next().map_or(16, |s| s.parse().expect("N must be an integer"));

    let g = enumerate_group(&parse_group_spec(&name, SpecFormat::Preset)?)?;
    let cd = conjugacy_classes(&g);
    let mut results = Vec::new();
    for strategy in Strategy::ALL {
        let start = Instant::now();
        let sc = solution_count_sequence(&g, &cd, 2, max_n, strategy)?;
        results.push((strategy, start.elapsed(), sc));
    }
    assert!(results.windows(2).all(|w| w[0].2 == w[1].2), "strategies disagree");
    println!("{name}, s(1..={max_n}), s({max_n}) = {}", results[0].2.get(max_n).unwrap());
    for (strategy, elapsed, _) in &results {
        println!("{strategy:<14} {elapsed:.2?}");
    }
    Ok(())
}
