//! Enumerates a group and lists its conjugacy classes.
//!
//!     cargo run --example enumerate_classes -- dihedral:5

use fsikit::group::{conjugacy_classes, enumerate_group, parse_group_spec, squares_subgroup_index, SpecFormat};

fn main() -> fsikit::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "symmetric:4".into());
    let g = enumerate_group(&parse_group_spec(&name, SpecFormat::Preset)?)?;
    let cd = conjugacy_classes(&g);

    println!("{name}: order {}, degree {}", g.order(), g.degree());
    println!("class  size  order  inverse  real");
    for c in 0..cd.num_classes {
        println!(
            "{c:>5}  {:>4}  {:>5}  {:>7}  {}",
            cd.sizes[c],
            g.element_order(cd.reps[c]),
            cd.inverse_class[c],
            if cd.is_real(c) { "yes" } else { "no" }
        );
    }
    println!("k(G) = {}, k_r(G) = {}", cd.num_classes, cd.num_real_classes);
    println!("[G : <g^2>] = {}", squares_subgroup_index(&g));
    Ok(())
}
