//! The subgroup lattice: enumeration, centers, quotients, and structure
//! classification.
//!
//! Run with: cargo run --example subgroup_lattice

use autocomm::iso::classify;
use autocomm::named::make_named;
use autocomm::subgroup::{all_subgroups, center, quotient_group, subgroup_generated};

fn main() {
    let d4 = make_named("D4").unwrap();

    println!("subgroups of D4:");
    for h in all_subgroups(&d4).unwrap() {
        println!("  order {}: {}", h.order(), h.describe());
    }

    let z = center(&d4);
    println!("\ncenter of D4: {}", z.describe());

    // The rotation subgroup modulo the center is C2.
    let r = d4.element_by_label("r").unwrap();
    let rotations = subgroup_generated(&d4, &[r]);
    let q = quotient_group(&rotations, &z).unwrap();
    let d = classify(&q);
    println!(
        "\n<r> / Z(D4): order {}, cyclic of prime order: {:?}",
        q.order(),
        d.cyclic_prime
    );

    // Structure descriptors across a few groups.
    for spec in ["C5", "C2xC2", "S3", "C9", "Q8"] {
        let g = autocomm::named::parse_group_spec(spec).unwrap();
        let d = classify(&g);
        println!(
            "{:<6} abelian={:<5} cyclic={:<5} exponent={:<2} order histogram {:?}",
            spec, d.is_abelian, d.is_cyclic, d.exponent, d.order_histogram
        );
    }
}
