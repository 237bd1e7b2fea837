//! Subgroups of a parent group: closures, the full subgroup lattice,
//! centers, and quotient groups.

use std::collections::BTreeSet;

use crate::error::{Error, Result, ENUMERATION_LIMIT};
use crate::group::Group;

/// A subgroup given by a sorted set of element indices of its parent.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: Group,
    members: Vec<usize>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{{{}}}", self.describe())
    }
}

impl Subgroup {
    /// Validates the member set: must contain the identity and be closed
    /// under products and inverses.
    pub fn new(parent: &Group, members: Vec<usize>) -> Result<Subgroup> {
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(Error::NotASubgroup {
                reason: "missing identity".into(),
            });
        }
        if let Some(&bad) = members.iter().find(|&&m| m >= parent.order()) {
            return Err(Error::NotASubgroup {
                reason: format!("element {} outside parent", bad),
            });
        }
        let in_set: BTreeSet<usize> = members.iter().copied().collect();
        for &a in &members {
            if !in_set.contains(&parent.inv(a)) {
                return Err(Error::NotASubgroup {
                    reason: format!("inverse of {:?} missing", parent.label(a)),
                });
            }
            for &b in &members {
                if !in_set.contains(&parent.mul(a, b)) {
                    return Err(Error::NotASubgroup {
                        reason: format!(
                            "product {:?}*{:?} escapes the set",
                            parent.label(a),
                            parent.label(b)
                        ),
                    });
                }
            }
        }
        assert_eq!(
            parent.order() % members.len(),
            0,
            "subgroup order must divide the group order"
        );
        Ok(Subgroup {
            parent: parent.clone(),
            members,
        })
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(parent: &Group) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            members: parent.elements().collect(),
        }
    }

    /// The trivial subgroup.
    pub fn trivial(parent: &Group) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            members: vec![0],
        }
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_whole_group(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.parent.same_group(&other.parent) && self.members.iter().all(|&m| other.contains(m))
    }

    /// True when every pair of members commutes.
    pub fn is_abelian(&self) -> bool {
        self.members.iter().all(|&a| {
            self.members
                .iter()
                .all(|&b| self.parent.mul(a, b) == self.parent.mul(b, a))
        })
    }

    /// Member labels joined for reports: `{e,r^2}`.
    pub fn describe(&self) -> String {
        let labels: Vec<&str> = self.members.iter().map(|&m| self.parent.label(m)).collect();
        format!("{{{}}}", labels.join(","))
    }

    /// Re-indexes the subgroup as a standalone group, keeping parent labels.
    /// Returns the group together with the member map (new index -> parent index).
    pub fn as_group(&self) -> (Group, Vec<usize>) {
        let pos = |x: usize| self.members.binary_search(&x).unwrap();
        let m = self.members.len();
        let mut table = vec![vec![0usize; m]; m];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                table[i][j] = pos(self.parent.mul(a, b));
            }
        }
        let labels = self
            .members
            .iter()
            .map(|&x| self.parent.label(x).to_string())
            .collect();
        let group = Group::from_cayley_table(table, Some(labels))
            .expect("a closed member set re-indexes to a valid group");
        (group, self.members.clone())
    }
}

/// Smallest subgroup containing `gens`, by breadth-first closure.
pub fn subgroup_generated(parent: &Group, gens: &[usize]) -> Subgroup {
    Subgroup {
        parent: parent.clone(),
        members: parent.closure_of(gens),
    }
}

/// The center `{z : zx = xz for all x}`.
pub fn center(parent: &Group) -> Subgroup {
    let members: Vec<usize> = parent
        .elements()
        .filter(|&z| parent.elements().all(|x| parent.mul(z, x) == parent.mul(x, z)))
        .collect();
    Subgroup {
        parent: parent.clone(),
        members,
    }
}

/// Every subgroup of `parent`, each exactly once, sorted by order and then
/// by member set.
///
/// Seeds with all cyclic subgroups and repeatedly extends each known
/// subgroup by one outside element, which reaches every subgroup of a
/// finite group. A direct generator-set search capped at three generators
/// misses rank-4 subgroups (already possible at order 16), so the
/// extension loop is the authoritative enumeration.
pub fn all_subgroups(parent: &Group) -> Result<Vec<Subgroup>> {
    if parent.order() > ENUMERATION_LIMIT {
        return Err(Error::SizeLimitExceeded {
            order: parent.order(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(vec![0]);
    let mut queue: Vec<Vec<usize>> = Vec::new();
    for x in parent.elements() {
        let cyclic = parent.closure_of(&[x]);
        if found.insert(cyclic.clone()) {
            queue.push(cyclic);
        }
    }
    while let Some(base) = queue.pop() {
        for g in parent.elements() {
            if base.binary_search(&g).is_ok() {
                continue;
            }
            let mut gens = base.clone();
            gens.push(g);
            let bigger = parent.closure_of(&gens);
            if found.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
    }
    let mut subs: Vec<Subgroup> = found
        .into_iter()
        .map(|members| Subgroup {
            parent: parent.clone(),
            members,
        })
        .collect();
    subs.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    Ok(subs)
}

/// Left cosets of `n` in `h` as a standalone group, labeled by coset
/// representatives (the smallest member of each coset).
pub fn quotient_group(h: &Subgroup, n: &Subgroup) -> Result<Group> {
    quotient_with_cosets(h, n).map(|(g, _)| g)
}

/// Quotient plus the coset decomposition (quotient index -> parent indices).
pub fn quotient_with_cosets(h: &Subgroup, n: &Subgroup) -> Result<(Group, Vec<Vec<usize>>)> {
    if !n.is_subset_of(h) {
        return Err(Error::NotContained {
            inner: n.describe(),
            outer: h.describe(),
        });
    }
    let parent = h.parent();
    // Normality of n in h.
    for &x in h.members() {
        for &m in n.members() {
            let conj = parent.mul(parent.mul(parent.inv(x), m), x);
            if !n.contains(conj) {
                return Err(Error::NotNormal {
                    inner: n.describe(),
                    outer: h.describe(),
                });
            }
        }
    }
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    let mut coset_of = vec![usize::MAX; parent.order()];
    for &x in h.members() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = n.members().iter().map(|&m| parent.mul(x, m)).collect();
        coset.sort_unstable();
        let id = cosets.len();
        for &y in &coset {
            coset_of[y] = id;
        }
        cosets.push(coset);
    }
    // Identity coset first, the rest ordered by representative.
    cosets.sort_by_key(|c| c[0]);
    for (id, coset) in cosets.iter().enumerate() {
        for &y in coset {
            coset_of[y] = id;
        }
    }
    let m = cosets.len();
    let mut table = vec![vec![0usize; m]; m];
    for (i, ci) in cosets.iter().enumerate() {
        for (j, cj) in cosets.iter().enumerate() {
            table[i][j] = coset_of[parent.mul(ci[0], cj[0])];
        }
    }
    let labels = cosets.iter().map(|c| parent.label(c[0]).to_string()).collect();
    let quotient = Group::from_cayley_table(table, Some(labels))?;
    Ok((quotient, cosets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::make_named;

    #[test]
    fn generated_subgroup_in_d4() {
        let d4 = make_named("D4").unwrap();
        let r = d4.element_by_label("r").unwrap();
        let h = subgroup_generated(&d4, &[r]);
        assert_eq!(h.members(), &[0, 1, 2, 3]);
        let trivial = subgroup_generated(&d4, &[]);
        assert_eq!(trivial.members(), &[0]);
    }

    #[test]
    fn generated_subgroup_s3_full() {
        let s3 = make_named("S3").unwrap();
        let t = s3.element_by_label("(12)").unwrap();
        let c = s3.element_by_label("(123)").unwrap();
        assert_eq!(subgroup_generated(&s3, &[t, c]).order(), 6);
    }

    #[test]
    fn subgroup_counts() {
        // C6: one subgroup per divisor of 6.
        let c6 = make_named("C6").unwrap();
        assert_eq!(all_subgroups(&c6).unwrap().len(), 4);
        // Klein four-group: trivial, three C2, whole.
        let v4 = crate::named::parse_group_spec("C2xC2").unwrap();
        assert_eq!(all_subgroups(&v4).unwrap().len(), 5);
        let c1 = make_named("C1").unwrap();
        assert_eq!(all_subgroups(&c1).unwrap().len(), 1);
    }

    #[test]
    fn subgroup_lattice_matches_exhaustive_scan_for_small_orders() {
        for spec in ["C8", "D4", "Q8", "S3", "C2xC2", "E2,3", "C12"] {
            let g = crate::named::parse_group_spec(spec).unwrap();
            if g.order() > 16 {
                continue;
            }
            let by_lattice = all_subgroups(&g).unwrap();
            let mut by_scan = 0usize;
            let n = g.order();
            for mask in 0..(1u32 << n) {
                if mask & 1 == 0 {
                    continue;
                }
                let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                if Subgroup::new(&g, members).is_ok() {
                    by_scan += 1;
                }
            }
            assert_eq!(by_lattice.len(), by_scan, "subgroup count for {}", spec);
        }
    }

    #[test]
    fn rank_four_subgroups_are_found() {
        let g = make_named("E2,4").unwrap();
        let subs = all_subgroups(&g).unwrap();
        assert!(subs.iter().any(|s| s.order() == 16));
        // Subgroup counts of F_2^4 by order: Gaussian binomials 1,15,35,15,1.
        assert_eq!(subs.len(), 67);
    }

    #[test]
    fn centers() {
        let d4 = make_named("D4").unwrap();
        let z = center(&d4);
        assert_eq!(z.describe(), "{e,r^2}");
        let s3 = make_named("S3").unwrap();
        assert_eq!(center(&s3).order(), 1);
        let c6 = make_named("C6").unwrap();
        assert!(center(&c6).is_whole_group());
    }

    #[test]
    fn quotients() {
        let d4 = make_named("D4").unwrap();
        let r = d4.element_by_label("r").unwrap();
        let r2 = d4.element_by_label("r^2").unwrap();
        let h = subgroup_generated(&d4, &[r]);
        let n = subgroup_generated(&d4, &[r2]);
        let q = quotient_group(&h, &n).unwrap();
        assert_eq!(q.order(), 2);
        // h / h and h / trivial
        assert_eq!(quotient_group(&h, &h).unwrap().order(), 1);
        let q = quotient_group(&h, &Subgroup::trivial(&d4)).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.element_order(1), 4);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = make_named("S3").unwrap();
        let t = s3.element_by_label("(12)").unwrap();
        let h = Subgroup::whole(&s3);
        let n = subgroup_generated(&s3, &[t]);
        assert!(matches!(
            quotient_group(&h, &n),
            Err(Error::NotNormal { .. })
        ));
        let c3 = subgroup_generated(&s3, &[s3.element_by_label("(123)").unwrap()]);
        assert!(matches!(
            quotient_group(&c3, &n),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn subgroup_validation_errors() {
        let c4 = make_named("C4").unwrap();
        assert!(matches!(
            Subgroup::new(&c4, vec![0, 1]),
            Err(Error::NotASubgroup { .. })
        ));
        assert!(matches!(
            Subgroup::new(&c4, vec![1, 2, 3]),
            Err(Error::NotASubgroup { .. })
        ));
        assert!(Subgroup::new(&c4, vec![0, 2]).is_ok());
    }
}
