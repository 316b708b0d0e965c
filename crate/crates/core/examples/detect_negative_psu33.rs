//! PSU(3,3): enumerate, build the class algebra, compute s(1..=8) and look
//! for an odd n with s(n)·|G| < s(n+1).
//!
//!     cargo run --release --example detect_negative_psu33

use std::time::Instant;

use fsikit::class_algebra::{solution_count_sequence, Strategy};
use fsikit::group::{conjugacy_classes, psu33};
use fsikit::indicators::detect_negative_indicator;

fn main() -> fsikit::Result<()> {
    let start = Instant::now();
    let g = psu33()?;
    let cd = conjugacy_classes(&g);
    println!(
        "|G| = {}, {} classes, {} real  ({:.2?})",
        g.order(),
        cd.num_classes,
        cd.num_real_classes,
        start.elapsed()
    );

    let sc = solution_count_sequence(&g, &cd, 2, 8, Strategy::ClassAlgebra)?;
    for (n, s) in sc.values.iter().enumerate() {
        println!("s({}) = {s}", n + 1);
    }
    match detect_negative_indicator(&sc, g.order() as u64, 7)? {
        Some(w) => println!("witness n={}: {} < {}", w.n, w.lhs, w.rhs),
        None => println!("no witness up to 7"),
    }
    println!("total {:.2?}", start.elapsed());
    Ok(())
}
