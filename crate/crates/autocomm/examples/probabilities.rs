//! Autocommuting probabilities: the brute-force route, the counting
//! formulae, full distributions, the trivial-stabilizer closed form, and
//! the inner (commutator) analogue.
//!
//! Run with: cargo run --example probabilities

use autocomm::aut::automorphism_group;
use autocomm::named::{make_named, parse_group_spec};
use autocomm::prob::{
    distribution, pr_autocommuting, pr_g_bruteforce, pr_g_formula, pr_g_inner,
    pr_special_trivial_stabilizers,
};
use autocomm::subgroup::{subgroup_generated, Subgroup};

fn main() {
    // Pr_g(H, Aut(K)) two ways on H = <r> inside K = D4.
    let d4 = make_named("D4").unwrap();
    let aut = automorphism_group(&d4).unwrap();
    let r = d4.element_by_label("r").unwrap();
    let h = subgroup_generated(&d4, &[r]);
    for g_label in ["e", "r", "r^2"] {
        let g = d4.element_by_label(g_label).unwrap();
        let brute = pr_g_bruteforce(&h, &aut, g);
        let formula = pr_g_formula(&h, &aut, g);
        assert_eq!(brute, formula);
        println!("Pr_{:<4}(<r>, Aut(D4)) = {}", g_label, brute);
    }

    // A full distribution with its support.
    let c3 = make_named("C3").unwrap();
    let aut3 = automorphism_group(&c3).unwrap();
    let profile = distribution(&Subgroup::whole(&c3), &aut3);
    println!("\ndistribution over C3: {}", profile.to_json());

    // The identity probability through every route, including the
    // orbit-count form with its validity flag. On the reflection
    // subgroup of D4 the orbit of s escapes H, so the orbit-count form
    // over-counts and is flagged.
    let s = d4.element_by_label("s").unwrap();
    let refl = subgroup_generated(&d4, &[s]);
    let info = pr_autocommuting(&refl, &aut);
    println!(
        "\nPr(<s>, Aut(D4)) = {} ; orbit-count form {} (valid: {}, agrees: {})",
        info.value, info.orbit_count_form, info.orbit_form_valid, info.orbit_form_agrees
    );

    // Closed form when every non-identity stabilizer is trivial.
    let c5 = make_named("C5").unwrap();
    let aut5 = automorphism_group(&c5).unwrap();
    let value = pr_special_trivial_stabilizers(&Subgroup::whole(&c5), &aut5).unwrap();
    println!("\nPr(C5, Aut(C5)) by the closed form = {}", value);
    let c4 = make_named("C4").unwrap();
    let aut4 = automorphism_group(&c4).unwrap();
    let err = pr_special_trivial_stabilizers(&Subgroup::whole(&c4), &aut4).unwrap_err();
    println!("on C4 the closed form is refused: {}", err);

    // The inner analogue Pr_g(H, K) over commutator pairs.
    let s3 = parse_group_spec("S3").unwrap();
    let whole = Subgroup::whole(&s3);
    println!("\nPr_e(S3, S3) = {}", pr_g_inner(&whole, 0));
    let rot = s3.element_by_label("(123)").unwrap();
    println!("Pr_(123)(S3, S3) = {}", pr_g_inner(&whole, rot));
}
