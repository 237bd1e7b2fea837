//! Autoisoclinism between subgroup pairs.
//!
//! Two pairs `(H1, K1)` and `(H2, K2)` are autoisoclinic when there are
//! isomorphisms `psi` between the quotients `H_i / L(H_i, Aut(K_i))`,
//! `gamma` between the automorphism groups, and `beta` between the
//! autocommutator subgroups `[H_i, Aut(K_i)]` making the coset
//! autocommutator maps commute. The search backtracks over `(psi, gamma)`
//! and derives `beta` from the diagram, so a candidate pair either forces a
//! consistent `beta` or dies immediately.

use serde_json::json;

use crate::action::{absolute_centralizer, autocommutator_subgroup};
use crate::aut::AutomorphismGroup;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::iso::{enumerate_isomorphisms, find_isomorphism, Isomorphism};
use crate::prob::{distribution, ProbabilityProfile};
use crate::rational::Rational;
use crate::subgroup::{quotient_with_cosets, Subgroup};
use crate::verifier::{BoundCheck, Direction};

/// Search limits: quotient order and automorphism-group order.
const QUOTIENT_BUDGET: usize = 16;
const AUT_BUDGET: usize = 48;

/// `Aut(K)` re-cast as an abstract Cayley-table group under composition.
/// Element `i` of the table is automorphism `i` of `source`.
pub struct AbstractAutGroup {
    pub group: Group,
    pub source: AutomorphismGroup,
}

pub fn aut_group_as_abstract_group(aut: &AutomorphismGroup) -> AbstractAutGroup {
    let m = aut.order();
    let mut table = vec![vec![0usize; m]; m];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = aut.compose_at(i, j);
        }
    }
    let labels = (0..m)
        .map(|i| if i == 0 { "e".to_string() } else { format!("f{}", i) })
        .collect();
    let group = Group::from_cayley_table(table, Some(labels))
        .expect("composition of automorphisms forms a group");
    AbstractAutGroup {
        group,
        source: aut.clone(),
    }
}

/// Everything one side of an autoisoclinism search needs, precomputed.
pub struct PairData {
    pub subgroup: Subgroup,
    pub aut: AutomorphismGroup,
    pub absolute_centralizer: Subgroup,
    pub quotient: Group,
    /// Quotient element -> members of the coset (parent indices).
    pub cosets: Vec<Vec<usize>>,
    pub abstract_aut: AbstractAutGroup,
    /// `[H, Aut(K)]` as a subgroup of `K`.
    pub commutator_subgroup: Subgroup,
    /// The same subgroup re-indexed as a standalone group, plus the member
    /// map (standalone index -> parent index).
    pub commutator_group: Group,
    pub commutator_members: Vec<usize>,
    /// Coset autocommutator table: `[quotient elem][aut index]` to an index
    /// of `commutator_group`.
    pub autocommutator_table: Vec<Vec<usize>>,
}

impl PairData {
    /// Builds the side data. The coset autocommutator map is checked to be
    /// well-defined: `[x, alpha]` must not depend on the representative.
    pub fn new(h: &Subgroup, aut: &AutomorphismGroup) -> Result<PairData> {
        assert!(h.parent().same_group(aut.group()), "H must live inside K");
        let k = h.parent();
        let l = absolute_centralizer(h, aut);
        let (quotient, cosets) = quotient_with_cosets(h, &l)?;
        let commutator_subgroup = autocommutator_subgroup(h, aut);
        let (commutator_group, commutator_members) = commutator_subgroup.as_group();
        let position = |x: usize| {
            commutator_members
                .binary_search(&x)
                .expect("autocommutators land in [H, Aut(K)]")
        };
        let mut autocommutator_table = vec![vec![0usize; aut.order()]; quotient.order()];
        for (c, coset) in cosets.iter().enumerate() {
            for (a, alpha) in aut.elements().iter().enumerate() {
                let value = alpha.autocommutator(coset[0]);
                // Representative independence.
                for &x in coset.iter().skip(1) {
                    if alpha.autocommutator(x) != value {
                        return Err(Error::IllDefinedMap {
                            label: k.label(x).to_string(),
                        });
                    }
                }
                autocommutator_table[c][a] = position(value);
            }
        }
        Ok(PairData {
            subgroup: h.clone(),
            aut: aut.clone(),
            absolute_centralizer: l,
            quotient,
            cosets,
            abstract_aut: aut_group_as_abstract_group(aut),
            commutator_subgroup,
            commutator_group,
            commutator_members,
            autocommutator_table,
        })
    }

    /// The coset autocommutator `a(xL, alpha)` as a parent-group element.
    pub fn coset_autocommutator(&self, coset: usize, aut_index: usize) -> usize {
        self.commutator_members[self.autocommutator_table[coset][aut_index]]
    }

    fn within_budget(&self) -> bool {
        self.quotient.order() <= QUOTIENT_BUDGET && self.aut.order() <= AUT_BUDGET
    }
}

/// A verified autoisoclinism: the three isomorphisms plus the diagram check.
pub struct AutoisoclinismWitness {
    /// Quotient `H1/L1` to `H2/L2`.
    pub psi: Isomorphism,
    /// Abstract `Aut(K1)` to abstract `Aut(K2)`.
    pub gamma: Isomorphism,
    /// `[H1, Aut(K1)]` to `[H2, Aut(K2)]` (standalone groups).
    pub beta: Isomorphism,
}

/// Whether the triple makes the two coset autocommutator maps commute,
/// checked over every (coset, automorphism) pair.
pub fn diagram_commutes(
    side1: &PairData,
    side2: &PairData,
    psi: &Isomorphism,
    gamma: &Isomorphism,
    beta: &Isomorphism,
) -> bool {
    for c in 0..side1.quotient.order() {
        for a in 0..side1.aut.order() {
            let lhs = beta.apply(side1.autocommutator_table[c][a]);
            let rhs = side2.autocommutator_table[psi.apply(c)][gamma.apply(a)];
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

pub enum SearchOutcome {
    Found(Box<AutoisoclinismWitness>),
    NotAutoisoclinic,
}

/// Derives the forced `beta` for one `(psi, gamma)` candidate. The diagram
/// pins `beta` on every autocommutator; the assignment must be functional,
/// injective, and extend multiplicatively to the whole subgroup.
fn derive_beta(side1: &PairData, side2: &PairData, psi: &Isomorphism, gamma: &Isomorphism) -> Option<Vec<usize>> {
    let m1 = side1.commutator_group.order();
    let m2 = side2.commutator_group.order();
    if m1 != m2 {
        return None;
    }
    let mut map = vec![usize::MAX; m1];
    for c in 0..side1.quotient.order() {
        for a in 0..side1.aut.order() {
            let s = side1.autocommutator_table[c][a];
            let t = side2.autocommutator_table[psi.apply(c)][gamma.apply(a)];
            if map[s] == usize::MAX {
                map[s] = t;
            } else if map[s] != t {
                return None;
            }
        }
    }
    // Injectivity on the autocommutator set.
    let mut seen = vec![false; m2];
    for &t in map.iter().filter(|&&t| t != usize::MAX) {
        if seen[t] {
            return None;
        }
        seen[t] = true;
    }
    // Multiplicative extension over the generated subgroup, starting from
    // every forced assignment (products of two autocommutators may land
    // outside the autocommutator set).
    let generators: Vec<usize> = (0..m1).filter(|&s| map[s] != usize::MAX).collect();
    debug_assert_eq!(map[0], 0, "the identity autocommutator maps to the identity");
    let mut queue: Vec<usize> = generators.clone();
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &s in &generators {
            let v = side1.commutator_group.mul(u, s);
            let w = side2.commutator_group.mul(map[u], map[s]);
            if map[v] == usize::MAX {
                if seen[w] {
                    return None;
                }
                map[v] = w;
                seen[w] = true;
                queue.push(v);
            } else if map[v] != w {
                return None;
            }
        }
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    Some(map)
}

/// Backtracking search for an autoisoclinism between two pairs. Candidate
/// `(psi, gamma)` combinations are tried in canonical order and `beta` is
/// derived, so the first witness is deterministic. Sides whose quotient or
/// automorphism group exceeds the search budget are refused rather than
/// reported absent.
pub fn find_autoisoclinism(side1: &PairData, side2: &PairData) -> Result<SearchOutcome> {
    if !side1.within_budget() || !side2.within_budget() {
        return Err(Error::BudgetExceeded {
            reason: format!(
                "quotient orders {} and {} (budget {}), automorphism orders {} and {} (budget {})",
                side1.quotient.order(),
                side2.quotient.order(),
                QUOTIENT_BUDGET,
                side1.aut.order(),
                side2.aut.order(),
                AUT_BUDGET
            ),
        });
    }
    // Order pruning.
    if side1.quotient.order() != side2.quotient.order()
        || side1.aut.order() != side2.aut.order()
        || side1.commutator_group.order() != side2.commutator_group.order()
    {
        return Ok(SearchOutcome::NotAutoisoclinic);
    }
    // Cheap existence pruning before enumerating everything.
    if find_isomorphism(&side1.quotient, &side2.quotient).is_none()
        || find_isomorphism(&side1.abstract_aut.group, &side2.abstract_aut.group).is_none()
        || find_isomorphism(&side1.commutator_group, &side2.commutator_group).is_none()
    {
        return Ok(SearchOutcome::NotAutoisoclinic);
    }
    let psis = enumerate_isomorphisms(&side1.quotient, &side2.quotient);
    let gammas = enumerate_isomorphisms(&side1.abstract_aut.group, &side2.abstract_aut.group);
    for psi in &psis {
        for gamma in &gammas {
            if let Some(map) = derive_beta(side1, side2, psi, gamma) {
                if let Some(beta) =
                    Isomorphism::new(&side1.commutator_group, &side2.commutator_group, map)
                {
                    assert!(
                        diagram_commutes(side1, side2, psi, gamma, &beta),
                        "derived beta must close the diagram"
                    );
                    return Ok(SearchOutcome::Found(Box::new(AutoisoclinismWitness {
                        psi: psi.clone(),
                        gamma: gamma.clone(),
                        beta,
                    })));
                }
            }
        }
    }
    Ok(SearchOutcome::NotAutoisoclinic)
}

/// Checks `Pr_g(H1, Aut(K1)) = Pr_{beta(g)}(H2, Aut(K2))` exactly for every
/// `g` in the domain of `beta`, plus the support sizes, and asserts the
/// coset-pair counting identity on both sides. Returns one row per check.
pub fn verify_invariance(
    witness: &AutoisoclinismWitness,
    side1: &PairData,
    side2: &PairData,
) -> Vec<BoundCheck> {
    let profile1 = distribution(&side1.subgroup, &side1.aut);
    let profile2 = distribution(&side2.subgroup, &side2.aut);
    assert_counting_identity(side1, &profile1);
    assert_counting_identity(side2, &profile2);
    let name1 = side1.subgroup.parent().display_name();
    let mut rows = Vec::new();
    for (idx, &g) in side1.commutator_members.iter().enumerate() {
        let g2 = side2.commutator_members[witness.beta.apply(idx)];
        rows.push(eq_row(
            "invariance",
            &name1,
            side1.subgroup.describe(),
            Some(side1.subgroup.parent().label(g).to_string()),
            profile1.value(g).clone(),
            profile2.value(g2).clone(),
        ));
    }
    rows.push(eq_row(
        "invariance-support-size",
        &name1,
        side1.subgroup.describe(),
        None,
        Rational::ratio(profile1.support().len(), 1),
        Rational::ratio(profile2.support().len(), 1),
    ));
    rows
}

fn eq_row(
    name: &str,
    group: &str,
    subgroup: String,
    g: Option<String>,
    lhs: Rational,
    rhs: Rational,
) -> BoundCheck {
    let holds = lhs == rhs;
    BoundCheck {
        name: name.to_string(),
        group: group.to_string(),
        subgroup,
        g,
        direction: Direction::Eq,
        holds,
        equality: holds,
        equality_condition_holds: None,
        passed: holds,
        lhs,
        rhs,
    }
}

/// `|{(x, alpha) : [x, alpha] = g}| = |L| * |{(coset, alpha) : a(c, alpha) = g}|`.
fn assert_counting_identity(side: &PairData, profile: &ProbabilityProfile) {
    let l = side.absolute_centralizer.order();
    let denom = side.subgroup.order() * side.aut.order();
    for (idx, &g) in side.commutator_members.iter().enumerate() {
        let coset_count = side
            .autocommutator_table
            .iter()
            .flatten()
            .filter(|&&t| t == idx)
            .count();
        assert_eq!(
            profile.value(g).clone(),
            Rational::ratio(l * coset_count, denom),
            "coset-pair counting identity"
        );
    }
}

/// Witness export: the three maps as label-to-label pairs plus the
/// transported probability table.
pub fn witness_to_json(
    witness: &AutoisoclinismWitness,
    side1: &PairData,
    side2: &PairData,
) -> serde_json::Value {
    let map_labels = |iso: &Isomorphism| -> Vec<serde_json::Value> {
        iso.source()
            .elements()
            .map(|x| {
                json!({
                    "from": iso.source().label(x),
                    "to": iso.target().label(iso.apply(x)),
                })
            })
            .collect()
    };
    let profile1 = distribution(&side1.subgroup, &side1.aut);
    let profile2 = distribution(&side2.subgroup, &side2.aut);
    let table: Vec<serde_json::Value> = side1
        .commutator_members
        .iter()
        .enumerate()
        .map(|(idx, &g)| {
            let g2 = side2.commutator_members[witness.beta.apply(idx)];
            json!({
                "g": side1.subgroup.parent().label(g),
                "beta_g": side2.subgroup.parent().label(g2),
                "num": profile1.value(g).num_str(),
                "den": profile1.value(g).den_str(),
                "transported_num": profile2.value(g2).num_str(),
                "transported_den": profile2.value(g2).den_str(),
            })
        })
        .collect();
    json!({
        "psi": map_labels(&witness.psi),
        "gamma": map_labels(&witness.gamma),
        "beta": map_labels(&witness.beta),
        "profile": table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::automorphism_group;
    use crate::named::{make_named, parse_group_spec};
    use crate::subgroup::subgroup_generated;

    fn side(spec: &str) -> PairData {
        let k = parse_group_spec(spec).unwrap();
        let aut = automorphism_group(&k).unwrap();
        PairData::new(&Subgroup::whole(&k), &aut).unwrap()
    }

    #[test]
    fn abstract_aut_groups() {
        let c3 = make_named("C3").unwrap();
        let aut = automorphism_group(&c3).unwrap();
        let abs = aut_group_as_abstract_group(&aut);
        assert_eq!(abs.group.order(), 2);

        let v4 = parse_group_spec("C2xC2").unwrap();
        let aut = automorphism_group(&v4).unwrap();
        let abs = aut_group_as_abstract_group(&aut);
        assert_eq!(abs.group.order(), 6);
        let s3 = make_named("S3").unwrap();
        assert!(find_isomorphism(&abs.group, &s3).is_some());

        let c2 = make_named("C2").unwrap();
        let aut = automorphism_group(&c2).unwrap();
        assert_eq!(aut_group_as_abstract_group(&aut).group.order(), 1);
    }

    #[test]
    fn coset_autocommutator_map_values() {
        let c3 = make_named("C3").unwrap();
        let aut = automorphism_group(&c3).unwrap();
        let data = PairData::new(&Subgroup::whole(&c3), &aut).unwrap();
        // L = {e}, so cosets are singletons in index order; the inversion
        // automorphism sends the coset of a to [a, sigma] = a.
        assert_eq!(data.quotient.order(), 3);
        let sigma = (0..aut.order()).find(|&i| !aut.get(i).is_identity()).unwrap();
        let coset_of_a = data.cosets.iter().position(|c| c.contains(&1)).unwrap();
        assert_eq!(data.coset_autocommutator(coset_of_a, sigma), 1);
        // The identity automorphism sends every coset to e.
        for c in 0..3 {
            assert_eq!(data.coset_autocommutator(c, 0), 0);
        }
    }

    #[test]
    fn coset_autocommutator_on_rotation_subgroup() {
        let d4 = make_named("D4").unwrap();
        let aut = automorphism_group(&d4).unwrap();
        let r = d4.element_by_label("r").unwrap();
        let h = subgroup_generated(&d4, &[r]);
        let data = PairData::new(&h, &aut).unwrap();
        // L = {e, r^2}; the coset rL maps to r^2 under any automorphism
        // sending r to r^3.
        assert_eq!(data.quotient.order(), 2);
        let r2 = d4.element_by_label("r^2").unwrap();
        let alpha = (0..aut.order()).find(|&i| aut.get(i).apply(r) == d4.element_by_label("r^3").unwrap()).unwrap();
        let coset_of_r = data.cosets.iter().position(|c| c.contains(&r)).unwrap();
        assert_eq!(data.coset_autocommutator(coset_of_r, alpha), r2);
    }

    #[test]
    fn reflexive_witness_found() {
        let s1 = side("C3");
        let s2 = side("C3");
        match find_autoisoclinism(&s1, &s2).unwrap() {
            SearchOutcome::Found(w) => {
                assert!(diagram_commutes(&s1, &s2, &w.psi, &w.gamma, &w.beta));
                let rows = verify_invariance(&w, &s1, &s2);
                assert!(rows.iter().all(|r| r.passed));
            }
            SearchOutcome::NotAutoisoclinic => panic!("a pair is autoisoclinic to itself"),
        }
    }

    #[test]
    fn relabeled_copy_transports_the_profile() {
        let c3 = make_named("C3").unwrap();
        // The same table seen through the index swap a <-> a^2.
        let perm = [0usize, 2, 1];
        let table: Vec<Vec<usize>> = (0..3)
            .map(|i| (0..3).map(|j| perm[c3.mul(perm[i], perm[j])]).collect())
            .collect();
        let copy = Group::from_cayley_table(
            table,
            Some(vec!["e".into(), "b".into(), "b^2".into()]),
        )
        .unwrap();
        let aut1 = automorphism_group(&c3).unwrap();
        let aut2 = automorphism_group(&copy).unwrap();
        let s1 = PairData::new(&Subgroup::whole(&c3), &aut1).unwrap();
        let s2 = PairData::new(&Subgroup::whole(&copy), &aut2).unwrap();
        match find_autoisoclinism(&s1, &s2).unwrap() {
            SearchOutcome::Found(w) => {
                let rows = verify_invariance(&w, &s1, &s2);
                assert!(rows.iter().all(|r| r.passed), "rows: {:?}", rows);
                // The C3 profile is e: 2/3 and 1/6 elsewhere; transport
                // must reproduce it exactly.
                let inv_row = rows.iter().find(|r| r.g.as_deref() == Some("a")).unwrap();
                assert_eq!(inv_row.lhs, Rational::new(1, 6));
                assert_eq!(inv_row.rhs, Rational::new(1, 6));
            }
            SearchOutcome::NotAutoisoclinic => panic!("relabeled copies are autoisoclinic"),
        }
    }

    #[test]
    fn mismatched_quotients_are_rejected_quickly() {
        let d4 = make_named("D4").unwrap();
        let aut = automorphism_group(&d4).unwrap();
        let r = d4.element_by_label("r").unwrap();
        let s1 = PairData::new(&subgroup_generated(&d4, &[r]), &aut).unwrap();
        let s2 = side("C3");
        assert!(matches!(
            find_autoisoclinism(&s1, &s2).unwrap(),
            SearchOutcome::NotAutoisoclinic
        ));
    }

    #[test]
    fn budget_refusal() {
        let s1 = side("C2xC2xC2"); // |Aut| = 168 exceeds the budget
        let s2 = side("C2xC2xC2");
        assert!(matches!(
            find_autoisoclinism(&s1, &s2),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn witness_inversion_still_commutes() {
        let s1 = side("C4");
        let s2 = side("C4");
        let SearchOutcome::Found(w) = find_autoisoclinism(&s1, &s2).unwrap() else {
            panic!("reflexive witness expected");
        };
        assert!(diagram_commutes(
            &s2,
            &s1,
            &w.psi.inverse(),
            &w.gamma.inverse(),
            &w.beta.inverse()
        ));
    }

    #[test]
    fn witness_export_shape() {
        let s1 = side("C3");
        let s2 = side("C3");
        let SearchOutcome::Found(w) = find_autoisoclinism(&s1, &s2).unwrap() else {
            panic!("reflexive witness expected");
        };
        let v = witness_to_json(&w, &s1, &s2);
        assert_eq!(v["psi"].as_array().unwrap().len(), 3);
        assert_eq!(v["beta"].as_array().unwrap().len(), 3);
        assert_eq!(v["profile"][0]["num"], "2");
    }
}
