//! Cross-module property tests: group axioms under resampling, closure
//! monotonicity, isomorphism symmetry, orbit structure, and the support
//! and certainty biconditionals of the probability map.

use proptest::prelude::*;

use autocomm::action::{absolute_centralizer, orbit, orbit_partition, t_set};
use autocomm::aut::automorphism_group;
use autocomm::group::Group;
use autocomm::iso::find_isomorphism;
use autocomm::named::parse_group_spec;
use autocomm::prob::{distribution, pr_g_bruteforce};
use autocomm::rational::Rational;
use autocomm::subgroup::{all_subgroups, quotient_group, subgroup_generated, Subgroup};

const POOL: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C8", "C12", "D4", "D6", "Q8", "S3", "A4", "C2xC2",
    "C2xC4", "C3xC3",
];

fn pool_group() -> impl Strategy<Value = Group> {
    (0..POOL.len()).prop_map(|i| parse_group_spec(POOL[i]).unwrap())
}

#[test]
fn associativity_exhaustive_up_to_order_24() {
    for spec in POOL {
        let g = parse_group_spec(spec).unwrap();
        if g.order() > 24 {
            continue;
        }
        for a in g.elements() {
            for b in g.elements() {
                for c in g.elements() {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        for a in g.elements() {
            let inv = g.inv(a);
            assert_eq!(g.mul(a, inv), 0);
            assert_eq!(g.mul(inv, a), 0);
        }
    }
}

proptest! {
    // Larger groups: associativity by random triple resampling.
    #[test]
    fn associativity_resampled_beyond_order_24(seed in 0usize..10_000) {
        let s5 = parse_group_spec("S5").unwrap();
        let n = s5.order();
        let a = seed % n;
        let b = (seed / n) % n;
        let c = (seed * 31 + 7) % n;
        prop_assert_eq!(s5.mul(s5.mul(a, b), c), s5.mul(a, s5.mul(b, c)));
    }

    #[test]
    fn subgroup_generated_idempotent_and_monotone(g in pool_group(), raw in proptest::collection::vec(0usize..24, 0..4)) {
        let gens: Vec<usize> = raw.iter().map(|&x| x % g.order()).collect();
        let h = subgroup_generated(&g, &gens);
        // Idempotent: generating from the members changes nothing.
        let again = subgroup_generated(&g, h.members());
        prop_assert_eq!(h.members(), again.members());
        // Monotone: any sub-multiset of generators reaches a subset.
        if !gens.is_empty() {
            let fewer = subgroup_generated(&g, &gens[1..]);
            prop_assert!(fewer.is_subset_of(&h));
        }
    }

    #[test]
    fn isomorphism_search_is_symmetric(i in 0..POOL.len(), j in 0..POOL.len()) {
        let g1 = parse_group_spec(POOL[i]).unwrap();
        let g2 = parse_group_spec(POOL[j]).unwrap();
        let forward = find_isomorphism(&g1, &g2);
        let backward = find_isomorphism(&g2, &g1);
        prop_assert_eq!(forward.is_some(), backward.is_some());
        if let Some(iso) = forward {
            // The witness satisfies the homomorphism equation everywhere.
            for a in g1.elements() {
                for b in g1.elements() {
                    prop_assert_eq!(iso.apply(g1.mul(a, b)), g2.mul(iso.apply(a), iso.apply(b)));
                }
            }
        }
    }

    #[test]
    fn t_set_coset_law_holds(g in pool_group(), x in 0usize..24, gg in 0usize..24) {
        prop_assume!(g.order() <= 12);
        let aut = automorphism_group(&g).unwrap();
        let x = x % g.order();
        let gg = gg % g.order();
        // Emptiness, the coset law, and the size identity are asserted
        // inside t_set; a nonempty set has the stabilizer's size.
        let sols = t_set(x, gg, &aut);
        if !sols.is_empty() {
            prop_assert_eq!(sols.len() * orbit(&aut, x).len(), aut.order());
        }
    }
}

#[test]
fn subgroup_lattice_members_are_valid_and_counts_match_divisors() {
    for spec in POOL {
        let g = parse_group_spec(spec).unwrap();
        let subs = all_subgroups(&g).unwrap();
        for h in &subs {
            // Re-validate every member set from scratch.
            Subgroup::new(&g, h.members().to_vec()).expect("enumerated member sets are subgroups");
        }
        if spec.starts_with('C') && !spec.contains('x') {
            let divisors = (1..=g.order()).filter(|&d| g.order().is_multiple_of(d)).count();
            assert_eq!(subs.len(), divisors, "cyclic subgroup count for {}", spec);
        }
    }
}

#[test]
fn quotient_order_is_the_index() {
    for spec in ["C12", "D4", "D6", "Q8", "A4"] {
        let g = parse_group_spec(spec).unwrap();
        let subs = all_subgroups(&g).unwrap();
        for h in &subs {
            for n in &subs {
                if !n.is_subset_of(h) {
                    continue;
                }
                if let Ok(q) = quotient_group(h, n) {
                    assert_eq!(q.order(), h.order() / n.order());
                }
            }
        }
    }
}

#[test]
fn orbit_partition_covers_union_and_stays_in_stable_subgroups() {
    for spec in ["D4", "Q8", "S3", "C8"] {
        let g = parse_group_spec(spec).unwrap();
        let aut = automorphism_group(&g).unwrap();
        for h in all_subgroups(&g).unwrap() {
            let parts = orbit_partition(&aut, &h);
            // The parts are exactly the orbits of the members, so their
            // union is the union of member orbits and they are disjoint.
            let mut covered = vec![false; g.order()];
            for part in &parts {
                for &y in part {
                    assert!(!covered[y], "orbits must be disjoint");
                    covered[y] = true;
                }
            }
            for &x in h.members() {
                for y in orbit(&aut, x) {
                    assert!(covered[y]);
                }
            }
            // They partition H itself exactly when H is stable under Aut.
            let stable = h
                .members()
                .iter()
                .all(|&x| orbit(&aut, x).iter().all(|&y| h.contains(y)));
            let total: usize = parts.iter().map(|p| p.len()).sum();
            assert_eq!(stable, total == h.order());
        }
    }
}

#[test]
fn certainty_iff_h_equals_absolute_centralizer_at_identity() {
    for spec in POOL {
        let g = parse_group_spec(spec).unwrap();
        let aut = automorphism_group(&g).unwrap();
        for h in all_subgroups(&g).unwrap() {
            let l = absolute_centralizer(&h, &aut);
            for gg in g.elements() {
                let value = pr_g_bruteforce(&h, &aut, gg);
                let certain = value.is_one();
                assert_eq!(
                    certain,
                    l.order() == h.order() && gg == 0,
                    "certainty biconditional on {} H={} g={}",
                    spec,
                    h.describe(),
                    g.label(gg)
                );
            }
        }
    }
}

#[test]
fn support_iff_nonzero_probability() {
    for spec in ["C6", "D4", "Q8", "S3"] {
        let g = parse_group_spec(spec).unwrap();
        let aut = automorphism_group(&g).unwrap();
        for h in all_subgroups(&g).unwrap() {
            let profile = distribution(&h, &aut);
            for gg in g.elements() {
                assert_eq!(profile.in_support(gg), !profile.value(gg).is_zero());
            }
            let total: Rational = profile.values().iter().cloned().sum();
            assert!(total.is_one());
        }
    }
}
