//! Constructors for the named groups and the group-spec grammar.
//!
//! Supported names: `C<n>` (cyclic), `D<n>` (dihedral of order `2n`),
//! `Q8`, `S<n>` and `A<n>` for `n <= 5`, and `E<p>,<k>` (elementary
//! abelian of order `p^k`). Specs combine names with `x` for direct
//! products, e.g. `C3xC4`.

use std::collections::HashMap;

use crate::error::{Error, Result, ORDER_LIMIT};
use crate::group::Group;

/// Builds one named group with its canonical labels.
pub fn make_named(spec: &str) -> Result<Group> {
    let spec = spec.trim();
    let unknown = |reason: &str| Error::UnknownSpec {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    if spec == "Q8" {
        return quaternion_group().map(|g| g.with_name(spec));
    }
    let mut chars = spec.chars();
    let family = chars.next().ok_or_else(|| unknown("empty name"))?;
    let rest: &str = &spec[family.len_utf8()..];
    let built = match family {
        'C' => {
            let n: usize = rest.parse().map_err(|_| unknown("expected C<n>"))?;
            cyclic_group(n)
        }
        'D' => {
            let n: usize = rest.parse().map_err(|_| unknown("expected D<n>"))?;
            dihedral_group(n)
        }
        'S' => {
            let n: usize = rest.parse().map_err(|_| unknown("expected S<n>"))?;
            if n == 0 || n > 5 {
                return Err(unknown("symmetric groups are supported for 1 <= n <= 5"));
            }
            symmetric_group(n, false)
        }
        'A' => {
            let n: usize = rest.parse().map_err(|_| unknown("expected A<n>"))?;
            if n == 0 || n > 5 {
                return Err(unknown("alternating groups are supported for 1 <= n <= 5"));
            }
            symmetric_group(n, true)
        }
        'E' => {
            let (p, k) = rest
                .split_once(',')
                .ok_or_else(|| unknown("expected E<p>,<k>"))?;
            let p: usize = p.trim().parse().map_err(|_| unknown("bad prime"))?;
            let k: u32 = k.trim().parse().map_err(|_| unknown("bad exponent"))?;
            if !is_prime(p) {
                return Err(unknown("p must be prime"));
            }
            if k == 0 {
                return Err(unknown("exponent must be positive"));
            }
            elementary_abelian_group(p, k)
        }
        _ => Err(unknown("unknown family")),
    }?;
    Ok(built.with_name(spec))
}

/// Parses the group-spec grammar `name ( "x" name )*` and builds the
/// direct product left to right.
pub fn parse_group_spec(spec: &str) -> Result<Group> {
    let spec = spec.trim();
    let mut parts = spec.split('x');
    let first = parts.next().ok_or(Error::ParseError {
        position: 0,
        message: "empty group spec".into(),
    })?;
    let mut group = make_named(first)?;
    for part in parts {
        let (product, _, _) = Group::direct_product(&group, &make_named(part)?)?;
        group = product;
    }
    Ok(group.with_name(spec))
}

fn check_order(n: usize) -> Result<()> {
    if n > ORDER_LIMIT {
        return Err(Error::SizeLimitExceeded {
            order: n,
            limit: ORDER_LIMIT,
        });
    }
    Ok(())
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn cyclic_label(stem: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => stem.to_string(),
        _ => format!("{}^{}", stem, k),
    }
}

/// Cyclic group of order `n` with labels `e, a, a^2, ...`.
pub fn cyclic_group(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::UnknownSpec {
            spec: "C0".into(),
            reason: "order must be positive".into(),
        });
    }
    check_order(n)?;
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n).map(|k| cyclic_label("a", k)).collect();
    Group::from_cayley_table(table, Some(labels))
}

/// Dihedral group of order `2n`: rotations `e, r, ..., r^{n-1}` followed by
/// reflections `s, rs, ..., r^{n-1}s`, with `r^n = s^2 = e` and `srs = r^-1`.
pub fn dihedral_group(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::UnknownSpec {
            spec: "D0".into(),
            reason: "order must be positive".into(),
        });
    }
    check_order(2 * n)?;
    let idx = |rot: usize, refl: usize| refl * n + rot;
    let size = 2 * n;
    let mut table = vec![vec![0usize; size]; size];
    for i in 0..n {
        for j in 0..2 {
            for k in 0..n {
                for l in 0..2 {
                    // (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j+l)
                    let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                    table[idx(i, j)][idx(k, l)] = idx(rot, (j + l) % 2);
                }
            }
        }
    }
    let mut labels: Vec<String> = (0..n).map(|k| cyclic_label("r", k)).collect();
    for k in 0..n {
        labels.push(match k {
            0 => "s".to_string(),
            1 => "rs".to_string(),
            _ => format!("r^{}s", k),
        });
    }
    Group::from_cayley_table(table, Some(labels))
}

/// The quaternion group with labels `e, -e, i, -i, j, -j, k, -k`.
pub fn quaternion_group() -> Result<Group> {
    // Basis products over {1, i, j, k}: (sign, basis).
    const BASIS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let idx = |sign: usize, basis: usize| 2 * basis + sign;
    let mut table = vec![vec![0usize; 8]; 8];
    for b1 in 0..4 {
        for s1 in 0..2 {
            for b2 in 0..4 {
                for s2 in 0..2 {
                    let (s, b) = BASIS[b1][b2];
                    table[idx(s1, b1)][idx(s2, b2)] = idx((s1 + s2 + s) % 2, b);
                }
            }
        }
    }
    let labels = ["e", "-e", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Group::from_cayley_table(table, Some(labels))
}

/// Symmetric group on `{1..n}` in cycle notation, or its alternating
/// subgroup when `even_only` is set. Permutations are ordered
/// lexicographically by one-line notation, so the identity comes first.
fn symmetric_group(n: usize, even_only: bool) -> Result<Group> {
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        if !even_only || permutation_is_even(&current) {
            perms.push(current.clone());
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    check_order(perms.len())?;
    let index: HashMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let m = perms.len();
    let mut table = vec![vec![0usize; m]; m];
    for (a, pa) in perms.iter().enumerate() {
        for (b, pb) in perms.iter().enumerate() {
            let composed: Vec<usize> = (0..n).map(|x| pa[pb[x]]).collect();
            table[a][b] = index[&composed];
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    Group::from_cayley_table(table, Some(labels))
}

pub fn symmetric(n: usize) -> Result<Group> {
    symmetric_group(n, false)
}

pub fn alternating(n: usize) -> Result<Group> {
    symmetric_group(n, true)
}

/// Elementary abelian group of order `p^k`. For `k = 1` this is the cyclic
/// group; otherwise elements carry flat tuple labels like `(a,e,a^2)`.
pub fn elementary_abelian_group(p: usize, k: u32) -> Result<Group> {
    let n = p
        .checked_pow(k)
        .filter(|&n| n <= ORDER_LIMIT)
        .ok_or(Error::SizeLimitExceeded {
            order: usize::MAX,
            limit: ORDER_LIMIT,
        })?;
    if k == 1 {
        return cyclic_group(p);
    }
    let k = k as usize;
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0usize; k];
        for slot in (0..k).rev() {
            d[slot] = x % p;
            x /= p;
        }
        d
    };
    let value = |d: &[usize]| d.iter().fold(0usize, |acc, &c| acc * p + c);
    let mut table = vec![vec![0usize; n]; n];
    for (a, row) in table.iter_mut().enumerate() {
        let da = digits(a);
        for (b, cell) in row.iter_mut().enumerate() {
            let db = digits(b);
            let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            *cell = value(&sum);
        }
    }
    let labels = (0..n)
        .map(|a| {
            if a == 0 {
                "e".to_string()
            } else {
                let parts: Vec<String> = digits(a).iter().map(|&c| cyclic_label("a", c)).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    Group::from_cayley_table(table, Some(labels))
}

fn permutation_is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Disjoint-cycle notation over points `1..=n`; fixed points are omitted
/// and the identity is rendered `e`.
fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}
