//! Autoisoclinism search: a reflexive witness, transport along a relabeled
//! copy, and a rejected pair.
//!
//! Run with: cargo run --example autoisoclinism

use autocomm::aut::automorphism_group;
use autocomm::autoiso::{
    find_autoisoclinism, verify_invariance, witness_to_json, PairData, SearchOutcome,
};
use autocomm::group::Group;
use autocomm::named::make_named;
use autocomm::subgroup::{subgroup_generated, Subgroup};

fn main() {
    // Reflexive: every pair is autoisoclinic to itself.
    let d4 = make_named("D4").unwrap();
    let aut = automorphism_group(&d4).unwrap();
    let r = d4.element_by_label("r").unwrap();
    let h = subgroup_generated(&d4, &[r]);
    let side = PairData::new(&h, &aut).unwrap();
    match find_autoisoclinism(&side, &side).unwrap() {
        SearchOutcome::Found(w) => {
            println!("(<r>, D4) is autoisoclinic to itself; invariance rows:");
            for row in verify_invariance(&w, &side, &side) {
                println!(
                    "  {} g={:?}: {} == {}",
                    row.name, row.g, row.lhs, row.rhs
                );
            }
        }
        SearchOutcome::NotAutoisoclinic => unreachable!(),
    }

    // A relabeled copy of C3: the probability profile transports exactly
    // along beta.
    let c3 = make_named("C3").unwrap();
    let perm = [0usize, 2, 1];
    let table: Vec<Vec<usize>> = (0..3)
        .map(|i| (0..3).map(|j| perm[c3.mul(perm[i], perm[j])]).collect())
        .collect();
    let copy =
        Group::from_cayley_table(table, Some(vec!["e".into(), "b".into(), "b^2".into()])).unwrap();
    let aut1 = automorphism_group(&c3).unwrap();
    let aut2 = automorphism_group(&copy).unwrap();
    let s1 = PairData::new(&Subgroup::whole(&c3), &aut1).unwrap();
    let s2 = PairData::new(&Subgroup::whole(&copy), &aut2).unwrap();
    if let SearchOutcome::Found(w) = find_autoisoclinism(&s1, &s2).unwrap() {
        println!("\nwitness between C3 and its relabeled copy:");
        println!("{}", serde_json::to_string_pretty(&witness_to_json(&w, &s1, &s2)).unwrap());
    }

    // Quotients of different orders can never be autoisoclinic.
    let s3 = PairData::new(&Subgroup::whole(&c3), &aut1).unwrap();
    match find_autoisoclinism(&side, &s3).unwrap() {
        SearchOutcome::NotAutoisoclinic => {
            println!("(<r>, D4) and (C3, C3) are not autoisoclinic (quotient orders 2 vs 3)")
        }
        SearchOutcome::Found(_) => unreachable!(),
    }
}
