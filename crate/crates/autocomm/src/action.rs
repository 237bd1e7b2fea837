//! The action of `Aut(K)` on `K` and every auxiliary set built from it:
//! orbits, stabilizers, fixed-point subgroups, the absolute centralizer
//! `L(H, Aut(K))`, the autocommutator set `S(H, Aut(K))` and the subgroup
//! it generates, the solution sets `T_{x,g}`, and conjugacy classes.

use std::collections::BTreeSet;

use crate::aut::{Automorphism, AutomorphismGroup};
use crate::group::Group;
use crate::subgroup::{subgroup_generated, Subgroup};

/// `orb_K(x) = { alpha(x) : alpha in Aut }`, sorted.
pub fn orbit(aut: &AutomorphismGroup, x: usize) -> Vec<usize> {
    let set: BTreeSet<usize> = aut.elements().iter().map(|a| a.apply(x)).collect();
    set.into_iter().collect()
}

/// The distinct orbits of the elements of `h`, sorted by first element.
/// Orbits are taken in the whole parent group and may leave `h`.
pub fn orbit_partition(aut: &AutomorphismGroup, h: &Subgroup) -> Vec<Vec<usize>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for &x in h.members() {
        seen.insert(orbit(aut, x));
    }
    seen.into_iter().collect()
}

/// `C_Aut(x)`: the automorphisms fixing `x`. The orbit-stabilizer identity
/// `|orb(x)| * |C(x)| = |Aut|` is asserted.
pub fn stabilizer(aut: &AutomorphismGroup, x: usize) -> AutomorphismGroup {
    let maps: Vec<Vec<usize>> = aut
        .elements()
        .iter()
        .filter(|a| a.apply(x) == x)
        .map(|a| a.map().to_vec())
        .collect();
    let stab = AutomorphismGroup::from_maps(aut.group(), maps);
    assert_eq!(
        orbit(aut, x).len() * stab.order(),
        aut.order(),
        "orbit-stabilizer identity"
    );
    stab
}

/// `C_Aut(H)`: the automorphisms fixing every element of `h` (the
/// intersection of the stabilizers over `h`).
pub fn aut_centralizer_of_subgroup(aut: &AutomorphismGroup, h: &Subgroup) -> AutomorphismGroup {
    let maps: Vec<Vec<usize>> = aut
        .elements()
        .iter()
        .filter(|a| h.members().iter().all(|&x| a.apply(x) == x))
        .map(|a| a.map().to_vec())
        .collect();
    AutomorphismGroup::from_maps(aut.group(), maps)
}

/// `C_H(alpha) = { x in H : [x, alpha] = 1 }`, a subgroup of `h`.
pub fn fixed_points(h: &Subgroup, alpha: &Automorphism) -> Subgroup {
    let members: Vec<usize> = h
        .members()
        .iter()
        .copied()
        .filter(|&x| alpha.apply(x) == x)
        .collect();
    Subgroup::new(h.parent(), members).expect("fixed points of an automorphism form a subgroup")
}

/// `L(H, Aut(K))`: the elements of `h` fixed by every automorphism.
/// Asserted normal in `h` and contained in `h` intersect `Z(K)`.
pub fn absolute_centralizer(h: &Subgroup, aut: &AutomorphismGroup) -> Subgroup {
    let parent = h.parent();
    let members: Vec<usize> = h
        .members()
        .iter()
        .copied()
        .filter(|&x| aut.elements().iter().all(|a| a.apply(x) == x))
        .collect();
    let l = Subgroup::new(parent, members).expect("absolute centralizer is a subgroup");
    for &x in l.members() {
        // Fixed by everything means a singleton orbit.
        debug_assert_eq!(orbit(aut, x), vec![x]);
        // Contained in the center of the parent.
        assert!(
            parent.elements().all(|y| parent.mul(x, y) == parent.mul(y, x)),
            "absolute centralizer must sit inside the center of K"
        );
        // Normal in h.
        for &y in h.members() {
            let conj = parent.mul(parent.mul(parent.inv(y), x), y);
            assert!(l.contains(conj), "absolute centralizer must be normal in H");
        }
    }
    l
}

/// `S(H, Aut(K)) = { [x, alpha] : x in H, alpha in Aut }`, sorted.
pub fn autocommutator_set(h: &Subgroup, aut: &AutomorphismGroup) -> Vec<usize> {
    let mut set = BTreeSet::new();
    for &x in h.members() {
        for alpha in aut.elements() {
            set.insert(alpha.autocommutator(x));
        }
    }
    set.into_iter().collect()
}

/// `[H, Aut(K)]`: the subgroup of `K` generated by the autocommutator set.
pub fn autocommutator_subgroup(h: &Subgroup, aut: &AutomorphismGroup) -> Subgroup {
    let s = autocommutator_set(h, aut);
    let generated = subgroup_generated(h.parent(), &s);
    assert!(
        s.iter().all(|&x| generated.contains(x)),
        "S(H, Aut(K)) must sit inside the subgroup it generates"
    );
    generated
}

/// `T_{x,g} = { alpha : [x, alpha] = g }`. Nonempty exactly when
/// `xg` lies in the orbit of `x`, and then it is a left coset
/// `sigma * C_Aut(x)`, which is asserted element-for-element.
pub fn t_set(x: usize, g: usize, aut: &AutomorphismGroup) -> Vec<Automorphism> {
    let group = aut.group();
    let solutions: Vec<Automorphism> = aut
        .elements()
        .iter()
        .filter(|a| a.autocommutator(x) == g)
        .cloned()
        .collect();
    let xg = group.mul(x, g);
    let in_orbit = orbit(aut, x).binary_search(&xg).is_ok();
    assert_eq!(!solutions.is_empty(), in_orbit, "T nonempty iff xg in orb(x)");
    if let Some(sigma) = solutions.first() {
        let stab = stabilizer(aut, x);
        assert_eq!(solutions.len(), stab.order(), "|T_{{x,g}}| = |C_Aut(x)|");
        let coset: BTreeSet<Vec<usize>> = stab
            .elements()
            .iter()
            .map(|c| sigma.compose(c).map().to_vec())
            .collect();
        let found: BTreeSet<Vec<usize>> =
            solutions.iter().map(|a| a.map().to_vec()).collect();
        assert_eq!(coset, found, "T_{{x,g}} must be the left coset sigma*C_Aut(x)");
    }
    solutions
}

/// `cl_K(x)`: the conjugacy class of `x`, sorted.
pub fn conjugacy_class(k: &Group, x: usize) -> Vec<usize> {
    let set: BTreeSet<usize> = k
        .elements()
        .map(|y| k.mul(k.mul(k.inv(y), x), y))
        .collect();
    set.into_iter().collect()
}
