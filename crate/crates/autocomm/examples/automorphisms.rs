//! Automorphism groups and the action machinery: orbits, stabilizers,
//! fixed points, the absolute centralizer, autocommutator sets, and the
//! solution sets T_{x,g}.
//!
//! Run with: cargo run --example automorphisms

use autocomm::action::{
    absolute_centralizer, autocommutator_set, autocommutator_subgroup, conjugacy_class, orbit,
    stabilizer, t_set,
};
use autocomm::aut::{automorphism_group, inner_automorphism_group};
use autocomm::named::make_named;
use autocomm::subgroup::{subgroup_generated, Subgroup};

fn main() {
    for spec in ["C3", "C2xC2", "D4", "Q8", "S4"] {
        let k = autocomm::named::parse_group_spec(spec).unwrap();
        let aut = automorphism_group(&k).unwrap();
        let inn = inner_automorphism_group(&k);
        println!("{:<6} |Aut| = {:<3} |Inn| = {}", spec, aut.order(), inn.order());
    }

    let d4 = make_named("D4").unwrap();
    let aut = automorphism_group(&d4).unwrap();

    // Orbits refine conjugacy classes.
    let s = d4.element_by_label("s").unwrap();
    let orbit_labels: Vec<&str> = orbit(&aut, s).into_iter().map(|x| d4.label(x)).collect();
    let class_labels: Vec<&str> = conjugacy_class(&d4, s).into_iter().map(|x| d4.label(x)).collect();
    println!("\norbit of s under Aut(D4): {:?}", orbit_labels);
    println!("conjugacy class of s:      {:?}", class_labels);

    // Stabilizers satisfy the orbit-stabilizer identity (asserted inside).
    let stab = stabilizer(&aut, s);
    println!("stabilizer of s has order {}", stab.order());

    // The absolute centralizer of the rotation subgroup is the center.
    let r = d4.element_by_label("r").unwrap();
    let h = subgroup_generated(&d4, &[r]);
    let l = absolute_centralizer(&h, &aut);
    println!("\nL(<r>, Aut(D4)) = {}", l.describe());

    // Autocommutators of the rotation subgroup land in {e, r^2}.
    let set: Vec<&str> = autocommutator_set(&h, &aut).into_iter().map(|x| d4.label(x)).collect();
    println!("S(<r>, Aut(D4)) = {:?}", set);
    println!(
        "[<r>, Aut(D4)]  = {}",
        autocommutator_subgroup(&h, &aut).describe()
    );

    // T_{x,g}: the automorphisms solving [x, alpha] = g form a coset of
    // the stabilizer (asserted inside t_set).
    let r2 = d4.element_by_label("r^2").unwrap();
    let sols = t_set(r, r2, &aut);
    println!("\n|T_{{r, r^2}}| = {} (equals |C_Aut(r)| = {})", sols.len(), stabilizer(&aut, r).order());

    // Serialization of an automorphism group for fixtures.
    let c3 = make_named("C3").unwrap();
    let aut3 = automorphism_group(&c3).unwrap();
    println!("\nAut(C3) as JSON: {}", aut3.to_json());
    let whole = Subgroup::whole(&c3);
    println!("L(C3, Aut(C3)) = {}", absolute_centralizer(&whole, &aut3).describe());
}
