//! Finite groups as validated Cayley tables.
//!
//! A [`Group`] stores an `n x n` multiplication table over element indices
//! `0..n`. Construction checks all four group axioms and relocates the
//! identity to index 0, so every downstream algorithm can rely on
//! `identity == 0`. Groups are immutable and cheap to clone (shared storage).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result, ORDER_LIMIT};

struct GroupCore {
    order: usize,
    table: Vec<usize>,
    labels: Vec<String>,
    inverses: Vec<usize>,
    element_orders: Vec<usize>,
    label_lookup: HashMap<String, usize>,
    name: Option<String>,
}

/// A finite group given by its Cayley table. Element 0 is the identity.
#[derive(Clone)]
pub struct Group(Arc<GroupCore>);

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order
                && self.0.table == other.0.table
                && self.0.labels == other.0.labels)
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order={}, labels={:?})", self.order(), self.0.labels)
    }
}

impl Group {
    /// Validates a raw table and builds the group.
    ///
    /// The identity is relocated to index 0 by an index relabeling if it
    /// sits elsewhere in the input. When `labels` is `None`, elements are
    /// named `e, g1, g2, ...`; provided labels must be unique and assign
    /// `"e"` to the identity.
    pub fn from_cayley_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NoIdentity);
        }
        if n > ORDER_LIMIT {
            return Err(Error::SizeLimitExceeded {
                order: n,
                limit: ORDER_LIMIT,
            });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable {
                    reason: format!("row {} has {} entries, expected {}", i, row.len(), n),
                });
            }
        }
        // Closure: every entry must name an element.
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::NotClosed {
                        row: i,
                        col: j,
                        value: v,
                        order: n,
                    });
                }
            }
        }
        let mut flat: Vec<usize> = table.iter().flatten().copied().collect();

        // Locate the two-sided identity.
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| flat[e * n + x] == x && flat[x * n + e] == x))
            .ok_or(Error::NoIdentity)?;

        let mut labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(Error::InvalidLabels {
                        reason: format!("{} labels for {} elements", l.len(), n),
                    });
                }
                l
            }
            None => (0..n)
                .map(|i| {
                    if i == identity {
                        "e".to_string()
                    } else {
                        format!("g{}", i)
                    }
                })
                .collect(),
        };

        // Relocate the identity to index 0 by swapping indices.
        if identity != 0 {
            let swap = |x: usize| {
                if x == identity {
                    0
                } else if x == 0 {
                    identity
                } else {
                    x
                }
            };
            let mut new_flat = vec![0usize; n * n];
            for i in 0..n {
                for j in 0..n {
                    new_flat[i * n + j] = swap(flat[swap(i) * n + swap(j)]);
                }
            }
            flat = new_flat;
            labels.swap(0, identity);
        }

        if labels[0] != "e" {
            return Err(Error::InvalidLabels {
                reason: format!("identity element must be labeled \"e\", got {:?}", labels[0]),
            });
        }
        let mut label_lookup = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if label_lookup.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidLabels {
                    reason: format!("duplicate label {:?}", l),
                });
            }
        }

        // Inverses.
        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| flat[a * n + b] == 0 && flat[b * n + a] == 0) {
                Some(b) => inverses[a] = b,
                None => return Err(Error::NoInverse { element: a }),
            }
        }

        check_associativity(&flat, n)?;

        let element_orders = compute_element_orders(&flat, n);
        Ok(Group(Arc::new(GroupCore {
            order: n,
            table: flat,
            labels,
            inverses,
            element_orders,
            label_lookup,
            name: None,
        })))
    }

    /// Attaches a display name (used in profiles and reports). The name is
    /// ignored by equality.
    pub fn with_name(self, name: &str) -> Group {
        Group(Arc::new(GroupCore {
            order: self.0.order,
            table: self.0.table.clone(),
            labels: self.0.labels.clone(),
            inverses: self.0.inverses.clone(),
            element_orders: self.0.element_orders.clone(),
            label_lookup: self.0.label_lookup.clone(),
            name: Some(name.to_string()),
        }))
    }

    /// The attached name, or a generic order-based description.
    pub fn display_name(&self) -> String {
        self.0
            .name
            .clone()
            .unwrap_or_else(|| format!("group-of-order-{}", self.0.order))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Table lookup `a * b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inverses[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.0.element_orders[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.0.order
    }

    pub fn label(&self, a: usize) -> &str {
        &self.0.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    /// Resolves an element by label. Accepts the canonical spelling and a
    /// caret-free shorthand (`r2` for `r^2`, `r3s` for `r^3s`).
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        let wanted = label.trim();
        if let Some(&i) = self.0.label_lookup.get(wanted) {
            return Some(i);
        }
        let norm = normalize_label(wanted);
        self.0
            .labels
            .iter()
            .position(|l| normalize_label(l) == norm)
    }

    /// True when both handles denote the same group object or equal tables.
    pub fn same_group(&self, other: &Group) -> bool {
        self == other
    }

    /// Smallest generating set, searched in lexicographic order by element
    /// index over ascending set sizes. The trivial group yields an empty set.
    pub fn minimal_generating_set(&self) -> Vec<usize> {
        let n = self.order();
        if n == 1 {
            return Vec::new();
        }
        for k in 1..=n {
            let mut chosen = Vec::with_capacity(k);
            if self.search_generating_set(k, 1, &mut chosen) {
                return chosen;
            }
        }
        unreachable!("the full element set always generates");
    }

    fn search_generating_set(&self, k: usize, from: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return self.closure_of(chosen).len() == self.order();
        }
        let remaining = k - chosen.len();
        // An element already generated by the prefix cannot shrink the set;
        // a smaller witness would have been found at size k-1.
        let prefix_closure = self.closure_of(chosen);
        for g in from..=self.order().saturating_sub(remaining) {
            if prefix_closure.binary_search(&g).is_ok() {
                continue;
            }
            chosen.push(g);
            if self.search_generating_set(k, g + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Closure of a set of elements under the group operation, as a sorted
    /// vector. Always contains the identity.
    pub fn closure_of(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut in_set = vec![false; n];
        in_set[0] = true;
        let mut frontier: Vec<usize> = vec![0];
        for &g in gens {
            if !in_set[g] {
                in_set[g] = true;
                frontier.push(g);
            }
        }
        let mut members = frontier.clone();
        while let Some(x) = frontier.pop() {
            // Products with every known member, in both orders.
            let snapshot: Vec<usize> = members.clone();
            for &y in &snapshot {
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !in_set[p] {
                        in_set[p] = true;
                        members.push(p);
                        frontier.push(p);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Direct product with componentwise multiplication. Also returns the
    /// two canonical embeddings as member index sets of the product.
    pub fn direct_product(g1: &Group, g2: &Group) -> Result<(Group, Vec<usize>, Vec<usize>)> {
        let n1 = g1.order();
        let n2 = g2.order();
        let n = n1
            .checked_mul(n2)
            .filter(|&n| n <= ORDER_LIMIT)
            .ok_or(Error::SizeLimitExceeded {
                order: n1.saturating_mul(n2),
                limit: ORDER_LIMIT,
            })?;
        let idx = |a: usize, b: usize| a * n2 + b;
        let mut table = vec![vec![0usize; n]; n];
        for a1 in 0..n1 {
            for b1 in 0..n2 {
                for a2 in 0..n1 {
                    for b2 in 0..n2 {
                        table[idx(a1, b1)][idx(a2, b2)] = idx(g1.mul(a1, a2), g2.mul(b1, b2));
                    }
                }
            }
        }
        let labels: Vec<String> = (0..n1)
            .flat_map(|a| {
                (0..n2).map(move |b| {
                    if a == 0 && b == 0 {
                        "e".to_string()
                    } else {
                        format!("({},{})", g1.label(a), g2.label(b))
                    }
                })
            })
            .collect();
        let product = Group::from_cayley_table(table, Some(labels))?;
        let left: Vec<usize> = (0..n1).map(|a| idx(a, 0)).collect();
        let right: Vec<usize> = (0..n2).collect();
        Ok((product, left, right))
    }

    /// Renders the group in the Cayley-table text format: order, table rows,
    /// and a trailing comma-separated label line.
    pub fn to_cayley_text(&self) -> String {
        let n = self.order();
        let mut out = String::new();
        out.push_str(&n.to_string());
        out.push('\n');
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| self.mul(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out.push_str(&self.0.labels.join(","));
        out.push('\n');
        out
    }

    /// Parses the Cayley-table text format. The label line is optional;
    /// commas inside parentheses do not split labels.
    pub fn from_cayley_text(text: &str) -> Result<Group> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (pos, first) = lines.next().ok_or(Error::ParseError {
            position: 0,
            message: "empty input".into(),
        })?;
        let n: usize = first.trim().parse().map_err(|_| Error::ParseError {
            position: pos + 1,
            message: format!("expected group order, got {:?}", first.trim()),
        })?;
        let mut table = Vec::with_capacity(n);
        for _ in 0..n {
            let (pos, line) = lines.next().ok_or(Error::ParseError {
                position: 0,
                message: format!("expected {} table rows", n),
            })?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::ParseError {
                        position: pos + 1,
                        message: format!("bad table entry {:?}", t),
                    })
                })
                .collect::<Result<_>>()?;
            table.push(row);
        }
        let labels = lines
            .next()
            .map(|(_, line)| split_label_line(line))
            .filter(|ls: &Vec<String>| !ls.is_empty());
        Group::from_cayley_table(table, labels)
    }

    pub fn from_cayley_file(path: &std::path::Path) -> Result<Group> {
        let text = std::fs::read_to_string(path)?;
        Group::from_cayley_text(&text)
    }
}

/// Splits a label line on commas that are not nested inside parentheses.
fn split_label_line(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in line.trim().chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur = String::new();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn normalize_label(label: &str) -> String {
    label.chars().filter(|c| !c.is_whitespace() && *c != '^').collect()
}

fn compute_element_orders(table: &[usize], n: usize) -> Vec<usize> {
    (0..n)
        .map(|a| {
            let mut acc = a;
            let mut k = 1;
            while acc != 0 {
                acc = table[acc * n + a];
                k += 1;
            }
            k
        })
        .collect()
}

/// Associativity check. Exhaustive for small orders; for larger tables we
/// verify `(a*g)*b == a*(g*b)` for all `a, b` and `g` in a generating set,
/// which is sufficient once the generators reach every element by products.
fn check_associativity(table: &[usize], n: usize) -> Result<()> {
    let mul = |a: usize, b: usize| table[a * n + b];
    if n <= 64 {
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        return Ok(());
    }
    // Greedy generating set over the raw magma.
    let mut gens: Vec<usize> = Vec::new();
    let mut closed = vec![false; n];
    closed[0] = true;
    let mut count = 1usize;
    while count < n {
        let g = (0..n).find(|&x| !closed[x]).unwrap();
        gens.push(g);
        // Re-close from scratch.
        closed.iter_mut().for_each(|c| *c = false);
        closed[0] = true;
        let mut members = vec![0usize];
        for &h in &gens {
            if !closed[h] {
                closed[h] = true;
                members.push(h);
            }
        }
        let mut frontier = members.clone();
        while let Some(x) = frontier.pop() {
            let snapshot = members.clone();
            for &y in &snapshot {
                for p in [mul(x, y), mul(y, x)] {
                    if !closed[p] {
                        closed[p] = true;
                        members.push(p);
                        frontier.push(p);
                    }
                }
            }
        }
        count = members.len();
    }
    for &g in &gens {
        for a in 0..n {
            let ag = mul(a, g);
            for b in 0..n {
                if mul(ag, b) != mul(a, mul(g, b)) {
                    return Err(Error::NotAssociative { a, b: g, c: b });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = Group::from_cayley_table(vec![vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.label(0), "e");
    }

    #[test]
    fn c2_from_table() {
        let g = Group::from_cayley_table(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.element_order(1), 2);
    }

    #[test]
    fn missing_inverse_is_rejected() {
        let err = Group::from_cayley_table(vec![vec![0, 1], vec![1, 1]], None).unwrap_err();
        assert_eq!(err, Error::NoInverse { element: 1 });
    }

    #[test]
    fn out_of_range_entry_is_rejected() {
        let err = Group::from_cayley_table(vec![vec![0, 1], vec![1, 2]], None).unwrap_err();
        assert!(matches!(err, Error::NotClosed { value: 2, .. }));
    }

    #[test]
    fn no_identity_is_rejected() {
        // x*y = 0 constantly: no identity.
        let err = Group::from_cayley_table(vec![vec![0, 0], vec![0, 0]], None).unwrap_err();
        assert_eq!(err, Error::NoIdentity);
    }

    #[test]
    fn non_associative_is_rejected() {
        // A quasigroup with identity that fails associativity needs order >= 5.
        // 5x5 table: rows/cols 0 fixed, inner 4x4 built from a non-associative loop.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = Group::from_cayley_table(table, None).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
    }

    #[test]
    fn identity_relocation() {
        // C2 with identity at index 1.
        let g = Group::from_cayley_table(vec![vec![1, 0], vec![0, 1]], None).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.label(0), "e");
    }

    #[test]
    fn provided_labels_must_name_identity_e() {
        let err = Group::from_cayley_table(
            vec![vec![0, 1], vec![1, 0]],
            Some(vec!["1".into(), "x".into()]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidLabels { .. }));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = Group::from_cayley_table(
            vec![vec![0, 1], vec![1, 0]],
            Some(vec!["e".into(), "e".into()]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidLabels { .. }));
    }

    #[test]
    fn cayley_text_round_trip() {
        let g = Group::from_cayley_table(
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
            Some(vec!["e".into(), "a".into(), "a^2".into()]),
        )
        .unwrap();
        let text = g.to_cayley_text();
        let h = Group::from_cayley_text(&text).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn label_lookup_normalizes_caret() {
        let g = Group::from_cayley_table(
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
            Some(vec!["e".into(), "a".into(), "a^2".into()]),
        )
        .unwrap();
        assert_eq!(g.element_by_label("a^2"), Some(2));
        assert_eq!(g.element_by_label("a2"), Some(2));
        assert_eq!(g.element_by_label("b"), None);
    }

    #[test]
    fn closure_and_generating_set() {
        let g = Group::from_cayley_table(
            vec![
                vec![0, 1, 2, 3],
                vec![1, 2, 3, 0],
                vec![2, 3, 0, 1],
                vec![3, 0, 1, 2],
            ],
            None,
        )
        .unwrap();
        assert_eq!(g.closure_of(&[1]), vec![0, 1, 2, 3]);
        assert_eq!(g.closure_of(&[2]), vec![0, 2]);
        assert_eq!(g.closure_of(&[]), vec![0]);
        assert_eq!(g.minimal_generating_set(), vec![1]);
    }
}
