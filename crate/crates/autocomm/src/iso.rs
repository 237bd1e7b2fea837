//! Isomorphism search between Cayley-table groups, plus structure
//! classification (abelian/cyclic/exponent and the prime-quotient shapes
//! the characterization checks need).
//!
//! The search backtracks over images of a minimal generating set of the
//! source, pruning candidates by element order and by incremental
//! homomorphism consistency. Candidate images are tried in ascending
//! element index, so the witness is deterministic.

use std::collections::BTreeMap;

use crate::group::Group;

/// A verified isomorphism between two groups.
#[derive(Clone, Debug)]
pub struct Isomorphism {
    source: Group,
    target: Group,
    map: Vec<usize>,
}

impl Isomorphism {
    /// Validates bijectivity, identity preservation, and the homomorphism
    /// equation over every pair.
    pub fn new(source: &Group, target: &Group, map: Vec<usize>) -> Option<Isomorphism> {
        let n = source.order();
        if target.order() != n || map.len() != n || map[0] != 0 {
            return None;
        }
        let mut seen = vec![false; n];
        for &y in &map {
            if y >= n || seen[y] {
                return None;
            }
            seen[y] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return None;
                }
            }
        }
        Some(Isomorphism {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(group: &Group) -> Isomorphism {
        Isomorphism {
            source: group.clone(),
            target: group.clone(),
            map: group.elements().collect(),
        }
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn inverse(&self) -> Isomorphism {
        let mut inv = vec![0usize; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Isomorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            map: inv,
        }
    }
}

fn order_multiset(g: &Group) -> Vec<usize> {
    let mut orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    orders.sort_unstable();
    orders
}

/// Closes the assigned generator images over right-products, checking
/// consistency and injectivity on the generated part. Returns the partial
/// map (`usize::MAX` marks undefined entries) or `None` on a conflict.
fn close_images(
    source: &Group,
    target: &Group,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = source.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0usize];
    for (&g, &img) in gens.iter().zip(images) {
        if map[g] == usize::MAX {
            map[g] = img;
            queue.push(g);
        } else if map[g] != img {
            return None;
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let a = queue[head];
        head += 1;
        for (&g, &img) in gens.iter().zip(images) {
            let prod = source.mul(a, g);
            let target_prod = target.mul(map[a], img);
            if map[prod] == usize::MAX {
                map[prod] = target_prod;
                queue.push(prod);
            } else if map[prod] != target_prod {
                return None;
            }
        }
    }
    let mut seen = vec![false; target.order()];
    for &y in map.iter().filter(|&&y| y != usize::MAX) {
        if seen[y] {
            return None;
        }
        seen[y] = true;
    }
    Some(map)
}

/// Depth-first search over generator images. Returns `true` when `limit`
/// results have been collected and the search should stop.
fn backtrack(
    source: &Group,
    target: &Group,
    gens: &[usize],
    images: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: Option<usize>,
) -> bool {
    if images.len() == gens.len() {
        if let Some(map) = close_images(source, target, gens, images) {
            if map.iter().all(|&y| y != usize::MAX) {
                out.push(map);
            }
        }
        limit.is_some_and(|l| out.len() >= l)
    } else {
        let g = gens[images.len()];
        let want_order = source.element_order(g);
        for candidate in target.elements() {
            if target.element_order(candidate) != want_order {
                continue;
            }
            images.push(candidate);
            let consistent = close_images(source, target, &gens[..images.len()], images).is_some();
            let done = consistent && backtrack(source, target, gens, images, out, limit);
            images.pop();
            if done {
                return true;
            }
        }
        false
    }
}

/// First isomorphism between the groups under the deterministic search
/// order, or `None` when they are not isomorphic.
pub fn find_isomorphism(g1: &Group, g2: &Group) -> Option<Isomorphism> {
    enumerate_isomorphism_maps(g1, g2, Some(1)).into_iter().next().map(|map| {
        Isomorphism::new(g1, g2, map).expect("search yields verified isomorphisms")
    })
}

/// Every isomorphism from `g1` to `g2`, sorted by image vector.
pub fn enumerate_isomorphisms(g1: &Group, g2: &Group) -> Vec<Isomorphism> {
    enumerate_isomorphism_maps(g1, g2, None)
        .into_iter()
        .map(|map| Isomorphism::new(g1, g2, map).expect("search yields verified isomorphisms"))
        .collect()
}

/// Raw image vectors of isomorphisms `g1 -> g2`, stopping once `limit`
/// results exist. The output is sorted, so with `limit = None` it is the
/// complete list in canonical order.
pub fn enumerate_isomorphism_maps(g1: &Group, g2: &Group, limit: Option<usize>) -> Vec<Vec<usize>> {
    if g1.order() != g2.order() || order_multiset(g1) != order_multiset(g2) {
        return Vec::new();
    }
    let gens = g1.minimal_generating_set();
    let mut out = Vec::new();
    backtrack(g1, g2, &gens, &mut Vec::new(), &mut out, limit);
    out.sort_unstable();
    out.dedup();
    out
}

/// Structure summary used by the quotient-shape characterizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureDescriptor {
    pub order: usize,
    pub is_abelian: bool,
    pub is_cyclic: bool,
    pub exponent: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    /// `Some(q)` when the group is cyclic of prime order `q`.
    pub cyclic_prime: Option<usize>,
    /// `Some(q)` when the group is elementary abelian of order `q^2`.
    pub elementary_square: Option<usize>,
}

pub fn classify(g: &Group) -> StructureDescriptor {
    let n = g.order();
    let is_abelian = g
        .elements()
        .all(|a| g.elements().all(|b| g.mul(a, b) == g.mul(b, a)));
    let mut histogram = BTreeMap::new();
    let mut exponent = 1usize;
    for x in g.elements() {
        let o = g.element_order(x);
        *histogram.entry(o).or_insert(0) += 1;
        exponent = num::integer::lcm(exponent, o);
    }
    let is_cyclic = histogram.get(&n).copied().unwrap_or(0) > 0;
    let prime = |m: usize| m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| !m.is_multiple_of(d));
    let cyclic_prime = if prime(n) { Some(n) } else { None };
    let elementary_square = match integer_sqrt(n) {
        Some(q) if prime(q) && exponent == q => Some(q),
        _ => None,
    };
    StructureDescriptor {
        order: n,
        is_abelian,
        is_cyclic,
        exponent,
        order_histogram: histogram,
        cyclic_prime,
        elementary_square,
    }
}

fn integer_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r.saturating_sub(1)..=r + 1).find(|&c| c * c == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{make_named, parse_group_spec};

    #[test]
    fn identity_witness_on_c4() {
        let c4 = make_named("C4").unwrap();
        let iso = find_isomorphism(&c4, &c4).unwrap();
        assert_eq!(iso.map(), &[0, 1, 2, 3]);
    }

    #[test]
    fn c4_and_klein_are_not_isomorphic() {
        let c4 = make_named("C4").unwrap();
        let v4 = parse_group_spec("C2xC2").unwrap();
        assert!(find_isomorphism(&c4, &v4).is_none());
        assert!(find_isomorphism(&v4, &c4).is_none());
    }

    #[test]
    fn coprime_product_is_cyclic() {
        let g = parse_group_spec("C3xC4").unwrap();
        let c12 = make_named("C12").unwrap();
        let iso = find_isomorphism(&g, &c12).unwrap();
        // Exhaustive homomorphism sanity on the witness.
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(iso.apply(g.mul(a, b)), c12.mul(iso.apply(a), iso.apply(b)));
            }
        }
    }

    #[test]
    fn enumeration_counts_automorphisms() {
        let c5 = make_named("C5").unwrap();
        assert_eq!(enumerate_isomorphisms(&c5, &c5).len(), 4);
        let v4 = parse_group_spec("C2xC2").unwrap();
        assert_eq!(enumerate_isomorphisms(&v4, &v4).len(), 6);
    }

    #[test]
    fn classify_shapes() {
        let v4 = parse_group_spec("C2xC2").unwrap();
        let d = classify(&v4);
        assert!(d.is_abelian && !d.is_cyclic);
        assert_eq!(d.exponent, 2);
        assert_eq!(d.elementary_square, Some(2));
        assert_eq!(d.cyclic_prime, None);

        let c5 = make_named("C5").unwrap();
        let d = classify(&c5);
        assert_eq!(d.cyclic_prime, Some(5));
        assert!(d.is_cyclic);

        let s3 = make_named("S3").unwrap();
        let d = classify(&s3);
        assert!(!d.is_abelian);
        assert_eq!(d.exponent, 6);

        let c9 = make_named("C9").unwrap();
        assert_eq!(classify(&c9).elementary_square, None);
    }

    #[test]
    fn inverse_round_trips() {
        let g = parse_group_spec("C3xC4").unwrap();
        let c12 = make_named("C12").unwrap();
        let iso = find_isomorphism(&g, &c12).unwrap();
        let back = iso.inverse();
        for x in g.elements() {
            assert_eq!(back.apply(iso.apply(x)), x);
        }
    }
}
