//! Automorphisms of a finite group and their enumeration.
//!
//! `automorphism_group` enumerates `Aut(K)` completely by backtracking over
//! images of a minimal generating set; `inner_automorphism_group` builds
//! `Inn(K)` from conjugation maps. Automorphisms are stored as full image
//! vectors so that applying one is a single lookup.

use std::collections::HashMap;
use std::fmt;

use serde_json::json;

use crate::error::{Error, Result, ENUMERATION_LIMIT};
use crate::group::Group;
use crate::iso::enumerate_isomorphism_maps;

/// Guard against automorphism groups too large to materialize.
const AUTOMORPHISM_CAP: usize = 200_000;

/// A bijection on a group's elements preserving the table.
#[derive(Clone, PartialEq, Eq)]
pub struct Automorphism {
    group: Group,
    map: Vec<usize>,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism({:?})", self.map)
    }
}

impl Automorphism {
    /// Validates the image vector as an automorphism of `group`.
    pub fn new(group: &Group, map: Vec<usize>) -> Result<Automorphism> {
        let n = group.order();
        if map.len() != n || map[0] != 0 {
            return Err(Error::MalformedTable {
                reason: "automorphism must fix the identity and cover every element".into(),
            });
        }
        let mut seen = vec![false; n];
        for &y in &map {
            if y >= n || seen[y] {
                return Err(Error::MalformedTable {
                    reason: "automorphism image vector is not a bijection".into(),
                });
            }
            seen[y] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if map[group.mul(a, b)] != group.mul(map[a], map[b]) {
                    return Err(Error::MalformedTable {
                        reason: format!(
                            "map breaks the table at ({:?}, {:?})",
                            group.label(a),
                            group.label(b)
                        ),
                    });
                }
            }
        }
        Ok(Automorphism {
            group: group.clone(),
            map,
        })
    }

    pub fn identity(group: &Group) -> Automorphism {
        Automorphism {
            group: group.clone(),
            map: group.elements().collect(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// Composition `(self . other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let map = other.map.iter().map(|&y| self.map[y]).collect();
        Automorphism {
            group: self.group.clone(),
            map,
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0usize; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Automorphism {
            group: self.group.clone(),
            map: inv,
        }
    }

    /// The autocommutator `[x, alpha] = x^-1 * alpha(x)`.
    pub fn autocommutator(&self, x: usize) -> usize {
        self.group.mul(self.group.inv(x), self.map[x])
    }

    /// JSON array of image indices.
    pub fn to_json(&self) -> serde_json::Value {
        json!(self.map)
    }
}

/// Free-function spelling of the autocommutator, matching the notation
/// `[x, alpha]`.
pub fn autocommutator(x: usize, alpha: &Automorphism) -> usize {
    alpha.autocommutator(x)
}

/// A composition-closed, deduplicated collection of automorphisms of one
/// group, sorted by image vector with the identity first.
#[derive(Clone)]
pub struct AutomorphismGroup {
    group: Group,
    elements: Vec<Automorphism>,
    index: HashMap<Vec<usize>, usize>,
}

impl fmt::Debug for AutomorphismGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AutomorphismGroup(group_order={}, order={})",
            self.group.order(),
            self.order()
        )
    }
}

impl AutomorphismGroup {
    /// Builds the collection from image vectors; sorts, deduplicates, and
    /// asserts closure under composition and inversion.
    pub fn from_maps(group: &Group, mut maps: Vec<Vec<usize>>) -> AutomorphismGroup {
        let identity: Vec<usize> = group.elements().collect();
        if !maps.contains(&identity) {
            maps.push(identity);
        }
        maps.sort_unstable();
        maps.dedup();
        let elements: Vec<Automorphism> = maps
            .iter()
            .map(|m| Automorphism {
                group: group.clone(),
                map: m.clone(),
            })
            .collect();
        let index: HashMap<Vec<usize>, usize> = maps
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let out = AutomorphismGroup {
            group: group.clone(),
            elements,
            index,
        };
        out.assert_closed();
        out
    }

    /// Identity-fixing bijections sort with the identity map first, so
    /// position 0 is always the identity automorphism.
    pub fn identity_position(&self) -> usize {
        debug_assert!(self.elements[0].is_identity());
        0
    }

    fn assert_closed(&self) {
        let m = self.elements.len();
        // Full closure check for modest sizes, deterministic sampling above.
        if m <= 1024 {
            for a in &self.elements {
                assert!(
                    self.index.contains_key(a.inverse().map()),
                    "automorphism set not closed under inversion"
                );
                for b in &self.elements {
                    assert!(
                        self.index.contains_key(a.compose(b).map()),
                        "automorphism set not closed under composition"
                    );
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..4096 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = &self.elements[(state >> 33) as usize % m];
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let b = &self.elements[(state >> 33) as usize % m];
                assert!(
                    self.index.contains_key(a.compose(b).map()),
                    "automorphism set not closed under composition"
                );
            }
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Automorphism {
        &self.elements[i]
    }

    pub fn position_of(&self, alpha: &Automorphism) -> Option<usize> {
        self.index.get(alpha.map()).copied()
    }

    pub fn contains(&self, alpha: &Automorphism) -> bool {
        self.index.contains_key(alpha.map())
    }

    /// Composition as an index operation: `compose_at(i, j)` is the position
    /// of `elements[i] . elements[j]`.
    pub fn compose_at(&self, i: usize, j: usize) -> usize {
        let composed = self.elements[i].compose(&self.elements[j]);
        self.index[composed.map()]
    }

    /// JSON list of image vectors plus the group order, for fixtures.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "group_order": self.group.order(),
            "order": self.order(),
            "automorphisms": self.elements.iter().map(|a| a.map()).collect::<Vec<_>>(),
        })
    }
}

/// Complete enumeration of `Aut(K)` for `|K| <= 48`.
pub fn automorphism_group(k: &Group) -> Result<AutomorphismGroup> {
    if k.order() > ENUMERATION_LIMIT {
        return Err(Error::SizeLimitExceeded {
            order: k.order(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let maps = enumerate_isomorphism_maps(k, k, Some(AUTOMORPHISM_CAP + 1));
    if maps.len() > AUTOMORPHISM_CAP {
        return Err(Error::BudgetExceeded {
            reason: format!("more than {} automorphisms", AUTOMORPHISM_CAP),
        });
    }
    Ok(AutomorphismGroup::from_maps(k, maps))
}

/// `Inn(K)`: the deduplicated conjugation maps `x -> y^-1 x y`.
pub fn inner_automorphism_group(k: &Group) -> AutomorphismGroup {
    let maps: Vec<Vec<usize>> = k
        .elements()
        .map(|y| {
            let y_inv = k.inv(y);
            k.elements().map(|x| k.mul(k.mul(y_inv, x), y)).collect()
        })
        .collect();
    AutomorphismGroup::from_maps(k, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{make_named, parse_group_spec};
    use itertools::Itertools;

    /// Independent oracle: every identity-fixing bijection checked against
    /// the table directly.
    fn aut_by_exhaustive_scan(k: &Group) -> Vec<Vec<usize>> {
        let n = k.order();
        let mut found = Vec::new();
        for rest in (1..n).permutations(n.saturating_sub(1)) {
            let mut map = Vec::with_capacity(n);
            map.push(0);
            map.extend(rest);
            let ok = (0..n).all(|a| (0..n).all(|b| map[k.mul(a, b)] == k.mul(map[a], map[b])));
            if ok {
                found.push(map);
            }
        }
        found.sort_unstable();
        found
    }

    #[test]
    fn backtracking_matches_exhaustive_scan_up_to_order_8() {
        for spec in ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "D4", "Q8", "S3", "E2,3", "C2xC4"] {
            let k = parse_group_spec(spec).unwrap();
            if k.order() > 8 {
                continue;
            }
            let by_backtracking: Vec<Vec<usize>> = automorphism_group(&k)
                .unwrap()
                .elements()
                .iter()
                .map(|a| a.map().to_vec())
                .collect();
            assert_eq!(by_backtracking, aut_by_exhaustive_scan(&k), "Aut({})", spec);
        }
    }

    #[test]
    fn known_automorphism_group_orders() {
        assert_eq!(automorphism_group(&make_named("C2").unwrap()).unwrap().order(), 1);
        assert_eq!(automorphism_group(&make_named("C3").unwrap()).unwrap().order(), 2);
        let v4 = parse_group_spec("C2xC2").unwrap();
        assert_eq!(automorphism_group(&v4).unwrap().order(), 6);
        assert_eq!(automorphism_group(&make_named("D4").unwrap()).unwrap().order(), 8);
        assert_eq!(automorphism_group(&make_named("Q8").unwrap()).unwrap().order(), 24);
    }

    #[test]
    fn inner_automorphism_orders() {
        let c6 = make_named("C6").unwrap();
        assert_eq!(inner_automorphism_group(&c6).order(), 1);
        let s3 = make_named("S3").unwrap();
        assert_eq!(inner_automorphism_group(&s3).order(), 6);
        let d4 = make_named("D4").unwrap();
        assert_eq!(inner_automorphism_group(&d4).order(), 4);
    }

    #[test]
    fn inner_maps_are_automorphisms_inside_aut() {
        for spec in ["S3", "D4", "Q8", "A4"] {
            let k = parse_group_spec(spec).unwrap();
            let aut = automorphism_group(&k).unwrap();
            let inn = inner_automorphism_group(&k);
            for alpha in inn.elements() {
                assert!(aut.contains(alpha), "inner map missing from Aut({})", spec);
            }
        }
    }

    #[test]
    fn autocommutator_examples() {
        let c3 = make_named("C3").unwrap();
        let aut = automorphism_group(&c3).unwrap();
        let sigma = aut
            .elements()
            .iter()
            .find(|a| !a.is_identity())
            .unwrap();
        // Inversion sends a to a^2, so [a, sigma] = a^-1 * a^-1 = a.
        assert_eq!(sigma.autocommutator(1), 1);
        let id = Automorphism::identity(&c3);
        for x in c3.elements() {
            assert_eq!(id.autocommutator(x), 0);
            assert_eq!(sigma.autocommutator(0), 0);
        }
    }

    #[test]
    fn composition_convention() {
        let v4 = parse_group_spec("C2xC2").unwrap();
        let aut = automorphism_group(&v4).unwrap();
        for a in aut.elements().iter().take(3) {
            for b in aut.elements() {
                let c = a.compose(b);
                for x in v4.elements() {
                    assert_eq!(c.apply(x), a.apply(b.apply(x)));
                }
            }
        }
    }

    #[test]
    fn rejects_non_automorphism() {
        let c4 = make_named("C4").unwrap();
        assert!(Automorphism::new(&c4, vec![0, 2, 1, 3]).is_err());
        assert!(Automorphism::new(&c4, vec![0, 3, 2, 1]).is_ok());
    }
}
