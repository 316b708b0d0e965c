//! s_k(n) from the class algebra, next to a literal count of tuples.
//!
//!     cargo run --example solution_counts -- quaternion:8 2

use fsikit::class_algebra::{solution_count_sequence, Strategy};
use fsikit::group::{conjugacy_classes, enumerate_group, parse_group_spec, SpecFormat};
use fsikit::oracle::naive_tuple_count;

fn main() -> fsikit::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "quaternion:8".into());
    let k: u64 = args.next().map_or(2, |s| s.parse().expect("k must be an integer"));

    let g = enumerate_group(&parse_group_spec(&name, SpecFormat::Preset)?)?;
    let cd = conjugacy_classes(&g);
    let sc = solution_count_sequence(&g, &cd, k, 8, Strategy::ClassAlgebra)?;
    for n in 1..=sc.max_n() {
        let s = sc.get(n).unwrap();
        if n <= 4 {
            println!("s_{k}({n}) = {s}  (tuple count {})", naive_tuple_count(&g, n, k)?);
        } else {
            println!("s_{k}({n}) = {s}");
        }
    }
    Ok(())
}
