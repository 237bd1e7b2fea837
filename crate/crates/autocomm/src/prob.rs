//! Autocommuting probabilities as exact rationals.
//!
//! `Pr_g(H, Aut(K))` is the probability that a uniformly random pair
//! `(x, alpha)` in `H x Aut(K)` satisfies `x^-1 alpha(x) = g`. The module
//! computes it three ways (raw pair count, stabilizer-order sum, orbit-size
//! sum), asserts the routes agree, and aggregates full distributions over
//! `g`. The inner analogue `Pr_g(H, K)` over commutators is also provided.

use serde_json::json;

use crate::action::{
    absolute_centralizer, autocommutator_set, conjugacy_class, orbit, orbit_partition,
};
use crate::aut::AutomorphismGroup;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::subgroup::Subgroup;

/// `|C_Aut(x)|` by direct count.
fn stabilizer_order(aut: &AutomorphismGroup, x: usize) -> usize {
    aut.elements().iter().filter(|a| a.apply(x) == x).count()
}

/// Raw count of `{(x, alpha) in H x Aut : [x, alpha] = g}` over the grid.
fn bruteforce_count(h: &Subgroup, aut: &AutomorphismGroup, g: usize) -> usize {
    h.members()
        .iter()
        .map(|&x| {
            aut.elements()
                .iter()
                .filter(|alpha| alpha.autocommutator(x) == g)
                .count()
        })
        .sum()
}

/// `Pr_g(H, Aut(K))` by exhaustive pair counting.
pub fn pr_g_bruteforce(h: &Subgroup, aut: &AutomorphismGroup, g: usize) -> Rational {
    assert!(h.parent().same_group(aut.group()), "H must live inside K");
    Rational::ratio(bruteforce_count(h, aut, g), h.order() * aut.order())
}

/// `Pr_g(H, Aut(K))` by the two counting formulae: the stabilizer-order sum
/// and the reciprocal-orbit-size sum over `{x in H : xg in orb(x)}`. Both
/// are evaluated and asserted equal.
pub fn pr_g_formula(h: &Subgroup, aut: &AutomorphismGroup, g: usize) -> Rational {
    assert!(h.parent().same_group(aut.group()), "H must live inside K");
    let k = h.parent();
    let mut stab_sum = 0usize;
    let mut orbit_sum = Rational::zero();
    for &x in h.members() {
        let orb = orbit(aut, x);
        if orb.binary_search(&k.mul(x, g)).is_err() {
            continue;
        }
        stab_sum += stabilizer_order(aut, x);
        orbit_sum = orbit_sum + Rational::ratio(1, orb.len());
    }
    let by_stabilizers = Rational::ratio(stab_sum, h.order() * aut.order());
    let by_orbits = orbit_sum * Rational::ratio(1, h.order());
    assert_eq!(by_stabilizers, by_orbits, "the two computing formulae must agree");
    by_stabilizers
}

/// `Pr(H, Aut(K))` at the identity, evaluated through every route.
#[derive(Clone, Debug)]
pub struct IdentityProbability {
    /// The authoritative value (stabilizer-order sum).
    pub value: Rational,
    /// `sum_x |C_Aut(x)| / (|H| |Aut|)`.
    pub via_stabilizer_sum: Rational,
    /// `sum_alpha |C_H(alpha)| / (|H| |Aut|)`.
    pub via_fixed_point_sum: Rational,
    /// `|orb_K(H)| / |H|`: the count of distinct orbits of H-elements.
    pub orbit_count_form: Rational,
    /// True when every orbit meeting `H` lies inside `H`; only then is the
    /// orbit-count form guaranteed to equal the others.
    pub orbit_form_valid: bool,
    pub orbit_form_agrees: bool,
}

/// Computes `Pr(H, Aut(K))` by the stabilizer-order sum and the
/// fixed-point-count sum, asserts they agree with the formula route, and
/// reports the orbit-count form with its validity flag. The orbit-count
/// form silently over-counts when an orbit escapes `H`, so it is reported,
/// flagged, and never used as the value.
pub fn pr_autocommuting(h: &Subgroup, aut: &AutomorphismGroup) -> IdentityProbability {
    assert!(h.parent().same_group(aut.group()), "H must live inside K");
    let denom = h.order() * aut.order();
    let stab_sum: usize = h
        .members()
        .iter()
        .map(|&x| stabilizer_order(aut, x))
        .sum();
    let fix_sum: usize = aut
        .elements()
        .iter()
        .map(|alpha| {
            h.members()
                .iter()
                .filter(|&&x| alpha.apply(x) == x)
                .count()
        })
        .sum();
    let via_stabilizer_sum = Rational::ratio(stab_sum, denom);
    let via_fixed_point_sum = Rational::ratio(fix_sum, denom);
    assert_eq!(
        via_stabilizer_sum, via_fixed_point_sum,
        "stabilizer-order and fixed-point-count sums must agree"
    );
    assert_eq!(
        via_stabilizer_sum,
        pr_g_formula(h, aut, h.parent().identity()),
        "identity probability must match the g = e formula"
    );

    let orbits = orbit_partition(aut, h);
    let orbit_count_form = Rational::ratio(orbits.len(), h.order());
    let orbit_form_valid = orbits
        .iter()
        .all(|orbit| orbit.iter().all(|&y| h.contains(y)));
    let orbit_form_agrees = orbit_count_form == via_stabilizer_sum;
    if orbit_form_valid {
        // Orbits inside H partition H, so the count must match.
        assert!(orbit_form_agrees, "in-H orbits must reproduce the identity probability");
    }
    IdentityProbability {
        value: via_stabilizer_sum.clone(),
        via_stabilizer_sum,
        via_fixed_point_sum,
        orbit_count_form,
        orbit_form_valid,
        orbit_form_agrees,
    }
}

/// Closed form `1/|H| + 1/|Aut| - 1/(|H||Aut|)`, valid when every
/// non-identity element of `H` has a trivial stabilizer. The hypothesis is
/// checked and the result asserted against the general computation.
pub fn pr_special_trivial_stabilizers(h: &Subgroup, aut: &AutomorphismGroup) -> Result<Rational> {
    for &x in h.members().iter().filter(|&&x| x != 0) {
        let stab = stabilizer_order(aut, x);
        if stab != 1 {
            return Err(Error::HypothesisViolated {
                label: h.parent().label(x).to_string(),
                reason: format!("stabilizer has order {}", stab),
            });
        }
    }
    let value = Rational::ratio(1, h.order()) + Rational::ratio(1, aut.order())
        - Rational::ratio(1, h.order() * aut.order());
    assert_eq!(
        value,
        pr_autocommuting(h, aut).value,
        "closed form must agree with the general computation"
    );
    Ok(value)
}

/// `Pr_g(H, K)`: probability that `x^-1 y^-1 x y = g` over `H x K`.
/// At `g = e` the class-size sum `(1/|H|) sum_x 1/|cl_K(x)|` is evaluated
/// as a cross-check.
pub fn pr_g_inner(h: &Subgroup, g: usize) -> Rational {
    let k = h.parent();
    let count: usize = h
        .members()
        .iter()
        .map(|&x| {
            k.elements()
                .filter(|&y| {
                    let conj = k.mul(k.mul(k.inv(y), x), y); // y^-1 x y
                    k.mul(k.inv(x), conj) == g // x^-1 y^-1 x y
                })
                .count()
        })
        .sum();
    let value = Rational::ratio(count, h.order() * k.order());
    if g == k.identity() {
        let class_sum: Rational = h
            .members()
            .iter()
            .map(|&x| Rational::ratio(1, conjugacy_class(k, x).len()))
            .sum();
        assert_eq!(
            value,
            class_sum * Rational::ratio(1, h.order()),
            "commuting probability must match the class-size sum"
        );
    }
    value
}

/// The full map `g -> Pr_g(H, Aut(K))` with its support.
#[derive(Clone, Debug)]
pub struct ProbabilityProfile {
    group: crate::group::Group,
    subgroup: Subgroup,
    aut_order: usize,
    values: Vec<Rational>,
    support: Vec<usize>,
}

impl ProbabilityProfile {
    pub fn group_name(&self) -> String {
        self.group.display_name()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn aut_order(&self) -> usize {
        self.aut_order
    }

    /// Values indexed by element, in element-index order.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, g: usize) -> &Rational {
        &self.values[g]
    }

    /// Sorted support `S(H, Aut(K))`.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn in_support(&self, g: usize) -> bool {
        self.support.binary_search(&g).is_ok()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "group": self.group_name(),
            "subgroup": self.subgroup.describe(),
            "aut_order": self.aut_order,
            "values": self
                .values
                .iter()
                .enumerate()
                .map(|(g, v)| {
                    json!({
                        "g_label": self.group.label(g),
                        "num": v.num_str(),
                        "den": v.den_str(),
                    })
                })
                .collect::<Vec<_>>(),
            "support": self
                .support
                .iter()
                .map(|&g| self.group.label(g))
                .collect::<Vec<_>>(),
        })
    }

    /// CSV with one row per element: group, subgroup, aut_order, g_label,
    /// num, den, in_support.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["group", "subgroup", "aut_order", "g_label", "num", "den", "in_support"])
            .expect("csv write");
        for (g, v) in self.values.iter().enumerate() {
            w.write_record([
                self.group_name().as_str(),
                self.subgroup.describe().as_str(),
                self.aut_order.to_string().as_str(),
                self.group.label(g),
                v.num_str().as_str(),
                v.den_str().as_str(),
                if self.in_support(g) { "true" } else { "false" },
            ])
            .expect("csv write");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
    }
}

/// Computes the full profile by one pass over `H x Aut` and asserts the
/// profile invariants: normalization, range, and support coincidence.
pub fn distribution(h: &Subgroup, aut: &AutomorphismGroup) -> ProbabilityProfile {
    assert!(h.parent().same_group(aut.group()), "H must live inside K");
    let k = h.parent();
    let mut counts = vec![0usize; k.order()];
    for &x in h.members() {
        for alpha in aut.elements() {
            counts[alpha.autocommutator(x)] += 1;
        }
    }
    let denom = h.order() * aut.order();
    let values: Vec<Rational> = counts.iter().map(|&c| Rational::ratio(c, denom)).collect();
    let support = autocommutator_set(h, aut);

    let total: Rational = values.iter().cloned().sum();
    assert!(total.is_one(), "probabilities must sum to 1");
    for (g, v) in values.iter().enumerate() {
        assert!(v.is_probability(), "each value must lie in [0, 1]");
        let in_support = support.binary_search(&g).is_ok();
        assert_eq!(!v.is_zero(), in_support, "support must match nonzero values");
    }
    ProbabilityProfile {
        group: k.clone(),
        subgroup: h.clone(),
        aut_order: aut.order(),
        values,
        support,
    }
}

/// True exactly when `Pr_g = 1`, which forces `H = L(H, Aut(K))` and `g = e`.
pub fn is_certain(h: &Subgroup, aut: &AutomorphismGroup, g: usize) -> bool {
    let one = pr_g_bruteforce(h, aut, g).is_one();
    if one {
        let l = absolute_centralizer(h, aut);
        assert_eq!(l.members(), h.members(), "certainty forces H = L");
        assert_eq!(g, h.parent().identity(), "certainty forces g = e");
    }
    one
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::automorphism_group;
    use crate::named::{make_named, parse_group_spec};
    use crate::subgroup::{center, subgroup_generated};

    fn whole_with_aut(spec: &str) -> (Subgroup, AutomorphismGroup) {
        let k = parse_group_spec(spec).unwrap();
        let aut = automorphism_group(&k).unwrap();
        (Subgroup::whole(&k), aut)
    }

    #[test]
    fn c3_distribution_frozen_values() {
        let (h, aut) = whole_with_aut("C3");
        // 6 pairs: identity fixes 3 elements, inversion fixes only e.
        assert_eq!(pr_g_bruteforce(&h, &aut, 0), Rational::new(2, 3));
        assert_eq!(pr_g_bruteforce(&h, &aut, 1), Rational::new(1, 6));
        assert_eq!(pr_g_bruteforce(&h, &aut, 2), Rational::new(1, 6));
        let profile = distribution(&h, &aut);
        assert_eq!(profile.values().to_vec(), vec![
            Rational::new(2, 3),
            Rational::new(1, 6),
            Rational::new(1, 6),
        ]);
        assert_eq!(profile.support(), &[0, 1, 2]);
    }

    #[test]
    fn formula_equals_bruteforce_on_d4_rotation_subgroup() {
        let d4 = make_named("D4").unwrap();
        let aut = automorphism_group(&d4).unwrap();
        let r = d4.element_by_label("r").unwrap();
        let r2 = d4.element_by_label("r^2").unwrap();
        let h = subgroup_generated(&d4, &[r]);
        assert_eq!(pr_g_formula(&h, &aut, 0), Rational::new(3, 4));
        assert_eq!(pr_g_formula(&h, &aut, r2), Rational::new(1, 4));
        for g in d4.elements() {
            assert_eq!(pr_g_formula(&h, &aut, g), pr_g_bruteforce(&h, &aut, g));
        }
    }

    #[test]
    fn certainty_on_central_subgroup_of_d4() {
        let d4 = make_named("D4").unwrap();
        let aut = automorphism_group(&d4).unwrap();
        let z = center(&d4);
        assert_eq!(pr_g_bruteforce(&z, &aut, 0), Rational::one());
        assert!(is_certain(&z, &aut, 0));
    }

    #[test]
    fn identity_probability_known_values() {
        let (h, aut) = whole_with_aut("C4");
        assert_eq!(pr_autocommuting(&h, &aut).value, Rational::new(3, 4));
        let (h, aut) = whole_with_aut("C2xC2");
        assert_eq!(pr_autocommuting(&h, &aut).value, Rational::new(1, 2));
        let (h, aut) = whole_with_aut("Q8");
        assert_eq!(aut.order(), 24);
        assert_eq!(pr_autocommuting(&h, &aut).value, Rational::new(3, 8));
    }

    #[test]
    fn orbit_count_form_discrepancy_is_flagged_not_failed() {
        let d4 = make_named("D4").unwrap();
        let aut = automorphism_group(&d4).unwrap();
        let s = d4.element_by_label("s").unwrap();
        let h = subgroup_generated(&d4, &[s]);
        let out = pr_autocommuting(&h, &aut);
        assert_eq!(out.value, Rational::new(5, 8));
        assert_eq!(out.orbit_count_form, Rational::one());
        assert!(!out.orbit_form_valid);
        assert!(!out.orbit_form_agrees);

        // The rotation subgroup is stable under every automorphism, so the
        // orbit-count form is valid and agrees there.
        let r = d4.element_by_label("r").unwrap();
        let h = subgroup_generated(&d4, &[r]);
        let out = pr_autocommuting(&h, &aut);
        assert!(out.orbit_form_valid);
        assert!(out.orbit_form_agrees);
    }

    #[test]
    fn trivial_stabilizer_closed_form() {
        let (h, aut) = whole_with_aut("C3");
        assert_eq!(
            pr_special_trivial_stabilizers(&h, &aut).unwrap(),
            Rational::new(2, 3)
        );
        let (h, aut) = whole_with_aut("C5");
        assert_eq!(
            pr_special_trivial_stabilizers(&h, &aut).unwrap(),
            Rational::new(2, 5)
        );
        let (h, aut) = whole_with_aut("C4");
        let err = pr_special_trivial_stabilizers(&h, &aut).unwrap_err();
        assert_eq!(
            err,
            Error::HypothesisViolated {
                label: "a^2".into(),
                reason: "stabilizer has order 2".into()
            }
        );
    }

    #[test]
    fn inner_probability_on_s3() {
        let s3 = make_named("S3").unwrap();
        let h = Subgroup::whole(&s3);
        assert_eq!(pr_g_inner(&h, 0), Rational::new(1, 2));
        let c = s3.element_by_label("(123)").unwrap();
        // 9 of the 36 pairs have commutator (123).
        assert_eq!(pr_g_inner(&h, c), Rational::new(1, 4));
        let t = s3.element_by_label("(12)").unwrap();
        // Commutators land in the alternating subgroup.
        assert_eq!(pr_g_inner(&h, t), Rational::zero());
    }

    #[test]
    fn inner_probability_abelian_certainty() {
        let c6 = make_named("C6").unwrap();
        let h = Subgroup::whole(&c6);
        assert_eq!(pr_g_inner(&h, 0), Rational::one());
    }

    #[test]
    fn point_mass_under_trivial_automorphism_group() {
        let (h, aut) = whole_with_aut("C2");
        assert_eq!(aut.order(), 1);
        let profile = distribution(&h, &aut);
        assert_eq!(profile.value(0), Rational::one());
        assert_eq!(profile.value(1), Rational::zero());
        assert_eq!(profile.support(), &[0]);
    }

    #[test]
    fn normalization_and_inverse_symmetry_samples() {
        for spec in ["C6", "D4", "Q8", "S3", "A4", "C3xC3"] {
            let k = parse_group_spec(spec).unwrap();
            let aut = automorphism_group(&k).unwrap();
            for h in crate::subgroup::all_subgroups(&k).unwrap() {
                let profile = distribution(&h, &aut);
                let total: Rational = profile.values().iter().cloned().sum();
                assert!(total.is_one());
                for g in k.elements() {
                    assert_eq!(profile.value(g), profile.value(k.inv(g)), "{} at {}", spec, g);
                }
            }
        }
    }

    #[test]
    fn profile_export_shapes() {
        let (h, aut) = whole_with_aut("C3");
        let profile = distribution(&h, &aut);
        let v = profile.to_json();
        assert_eq!(v["group"], "C3");
        assert_eq!(v["aut_order"], 2);
        assert_eq!(v["values"][0]["num"], "2");
        assert_eq!(v["values"][0]["den"], "3");
        assert_eq!(v["support"].as_array().unwrap().len(), 3);
        let csv = profile.to_csv();
        assert!(csv.starts_with("group,subgroup,aut_order,g_label,num,den,in_support"));
        assert!(csv.contains("C3,\"{e,a,a^2}\",2,a,1,6,true"));
    }
}
