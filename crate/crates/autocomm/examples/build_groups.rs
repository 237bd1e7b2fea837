//! Constructing groups: named families, direct products, raw Cayley
//! tables, and the text format.
//!
//! Run with: cargo run --example build_groups

use autocomm::group::Group;
use autocomm::named::{make_named, parse_group_spec};

fn main() {
    // Named families. D<n> is the dihedral group of order 2n.
    for spec in ["C6", "D4", "Q8", "S4", "A5", "E2,3"] {
        let g = make_named(spec).unwrap();
        println!("{:<6} order {:>3}, identity {:?}", spec, g.order(), g.label(0));
    }

    // Direct products via the spec grammar.
    let g = parse_group_spec("C3xC4").unwrap();
    println!(
        "\nC3xC4: order {}, element (a,a) has order {}",
        g.order(),
        g.element_order(g.element_by_label("(a,a)").unwrap())
    );

    // A raw Cayley table: the cyclic group of order 3 written by hand.
    // The identity need not sit at index 0; construction relocates it.
    let table = vec![vec![2, 0, 1], vec![0, 1, 2], vec![1, 2, 0]];
    let g = Group::from_cayley_table(table, None).unwrap();
    println!("\nhand-written table: order {}, labels {:?}", g.order(), g.labels());

    // The text format round-trips, labels included.
    let d4 = make_named("D4").unwrap();
    let text = d4.to_cayley_text();
    println!("\nD4 in Cayley-table text format:\n{}", text);
    let back = Group::from_cayley_text(&text).unwrap();
    assert_eq!(d4, back);

    // Validation failures name the offender.
    let bad = Group::from_cayley_table(vec![vec![0, 1], vec![1, 1]], None);
    println!("invalid table: {}", bad.unwrap_err());
}
