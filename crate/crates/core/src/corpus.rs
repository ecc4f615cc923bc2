//! Built-in inputs: named monoids and the exhaustive list of small monoids
//! with zero.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::semigroup::FiniteSemigroup;

/// Largest carrier the corpus instances are allowed to produce.
pub const MAX_CORPUS_CARRIER: usize = 32;

/// All monoids with zero (zero ≠ identity) of the given order, one per
/// isomorphism class. Index 0 is the identity, the last index is the zero
/// and the elements in between are labelled `a`, `b`, ...
///
/// The search runs over all `order^((order-2)^2)` completions of the table,
/// so it is only practical up to order 4 or 5.
pub fn monoids_with_zero(order: usize) -> Vec<FiniteSemigroup> {
    if order < 2 {
        return Vec::new();
    }
    let free = order - 2;
    let zero = order - 1;
    let mut labels = vec!["1".to_string()];
    labels.extend((0..free).map(|i| char::from(b'a' + i as u8).to_string()));
    labels.push("0".to_string());

    let cells = free * free;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut entries = vec![0usize; cells];
    loop {
        let table = full_table(order, &entries);
        let canonical = canonical_form(order, &table);
        if !seen.contains(&canonical) {
            if let Ok(s) = FiniteSemigroup::from_flat(labels.clone(), canonical.clone()) {
                debug_assert_eq!((s.identity(), s.zero()), (Some(0), Some(zero)));
                let name = format!("M{order}.{}", out.len() + 1);
                out.push(s.with_name(name));
            }
            seen.insert(canonical);
        }
        // odometer over the free cells
        let mut i = 0;
        loop {
            if i == cells {
                return out;
            }
            entries[i] += 1;
            if entries[i] < order {
                break;
            }
            entries[i] = 0;
            i += 1;
        }
    }
}

fn full_table(order: usize, free_entries: &[usize]) -> Vec<usize> {
    let zero = order - 1;
    let free = order - 2;
    let mut table = vec![0; order * order];
    for a in 0..order {
        for b in 0..order {
            table[a * order + b] = if a == zero || b == zero {
                zero
            } else if a == 0 {
                b
            } else if b == 0 {
                a
            } else {
                free_entries[(a - 1) * free + (b - 1)]
            };
        }
    }
    table
}

/// Lexicographically least relabelling over permutations of the free
/// elements (identity and zero are fixed by any isomorphism).
fn canonical_form(order: usize, table: &[usize]) -> Vec<usize> {
    let free = order - 2;
    (1..=free)
        .permutations(free)
        .map(|perm| {
            let mut relabel: Vec<usize> = (0..order).collect();
            for (i, &p) in perm.iter().enumerate() {
                relabel[i + 1] = p;
            }
            let mut out = vec![0; order * order];
            for a in 0..order {
                for b in 0..order {
                    out[relabel[a] * order + relabel[b]] = relabel[table[a * order + b]];
                }
            }
            out
        })
        .min()
        .unwrap_or_else(|| table.to_vec())
}

/// I⁰, Z₂⁰, Z₃⁰, Z₄⁰ and zero semigroups with an adjoined identity.
pub fn named_monoids() -> Vec<FiniteSemigroup> {
    let mut out: Vec<FiniteSemigroup> = (1..=4)
        .map(|m| FiniteSemigroup::cyclic_group_with_zero(m).expect("m >= 1"))
        .collect();
    for k in [2, 3] {
        let s = FiniteSemigroup::zero_semigroup(k).expect("k >= 2").adjoin_identity();
        out.push(s.with_name(format!("zero-{k}^1")));
    }
    out
}

/// The full corpus: every monoid with zero of order at most 4 followed by
/// the named families.
pub fn builtin_corpus() -> Vec<FiniteSemigroup> {
    let mut out: Vec<FiniteSemigroup> = (2..=4).flat_map(monoids_with_zero).collect();
    out.extend(named_monoids());
    out
}

/// `(S, λ)` pairs for λ in `lambdas` whose carrier λ²(|S|−1)+1 stays within
/// `max_carrier`.
pub fn instances(corpus: &[FiniteSemigroup], lambdas: &[usize], max_carrier: usize) -> Vec<(FiniteSemigroup, usize)> {
    corpus
        .iter()
        .flat_map(|s| {
            lambdas
                .iter()
                .filter(move |&&l| l * l * (s.len() - 1) < max_carrier)
                .map(move |&l| (s.clone(), l))
        })
        .collect()
}

/// Built-in semigroups by name, for the command line.
pub fn builtin(name: &str) -> Option<FiniteSemigroup> {
    let s = match name {
        "trivial" => FiniteSemigroup::trivial(),
        "i0" | "matrix-units" => FiniteSemigroup::cyclic_group_with_zero(1).ok()?,
        "zero-semigroup" => FiniteSemigroup::zero_semigroup(3).ok()?,
        _ => {
            if let Some(m) = name.strip_prefix('z').and_then(|r| r.strip_suffix("-0")) {
                FiniteSemigroup::cyclic_group_with_zero(m.parse().ok()?).ok()?
            } else if let Some(k) = name.strip_prefix("zero-").and_then(|r| r.strip_suffix("-1")) {
                let k = k.parse().ok()?;
                FiniteSemigroup::zero_semigroup(k)
                    .ok()?
                    .adjoin_identity()
                    .with_name(format!("zero-{k}^1"))
            } else if let Some(k) = name.strip_prefix("zero-") {
                FiniteSemigroup::zero_semigroup(k.parse().ok()?).ok()?
            } else {
                FiniteSemigroup::cyclic_group(name.strip_prefix('z')?.parse().ok()?).ok()?
            }
        }
    };
    Some(s)
}

/// Names accepted by [`builtin`], for help text.
pub const BUILTIN_NAMES: &str = "trivial, i0, matrix-units, z<m>-0, z<m>, zero-semigroup, zero-<k>, zero-<k>-1";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(monoids_with_zero(2).len(), 1);
        // a² ∈ {1, a, 0}
        assert_eq!(monoids_with_zero(3).len(), 3);
        for s in monoids_with_zero(4) {
            assert!(s.is_monoid_with_zero());
            assert_eq!((s.identity(), s.zero()), (Some(0), Some(3)));
        }
    }

    #[test]
    fn order_four_is_deduplicated() {
        let all = monoids_with_zero(4);
        let tables: BTreeSet<_> = all.iter().map(|s| s.to_document().table).collect();
        assert_eq!(tables.len(), all.len());
        // swapping a and b never produces another listed table
        for s in &all {
            let swapped: Vec<Vec<usize>> = {
                let p = [0, 2, 1, 3];
                let mut t = vec![vec![0; 4]; 4];
                for a in 0..4 {
                    for b in 0..4 {
                        t[p[a]][p[b]] = p[s.mul(a, b)];
                    }
                }
                t
            };
            if swapped != s.to_document().table {
                assert!(!tables.contains(&swapped));
            }
        }
    }

    #[test]
    fn instances_respect_the_carrier_cap() {
        let corpus = builtin_corpus();
        let inst = instances(&corpus, &[1, 2, 3], MAX_CORPUS_CARRIER);
        assert!(inst.iter().all(|(s, l)| l * l * (s.len() - 1) < MAX_CORPUS_CARRIER));
        // Z4^0 has 5 elements: λ = 3 would give 37
        assert!(!inst.iter().any(|(s, l)| s.name() == Some("Z4^0") && *l == 3));
        assert!(inst.iter().any(|(s, l)| s.len() == 4 && *l == 3));
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("z2-0").unwrap().len(), 3);
        assert_eq!(builtin("matrix-units").unwrap().len(), 2);
        assert_eq!(builtin("zero-semigroup").unwrap().len(), 3);
        assert_eq!(builtin("zero-3-1").unwrap().len(), 4);
        assert_eq!(builtin("z3").unwrap().len(), 3);
        assert!(builtin("nope").is_none());
        assert!(builtin("z0-0").is_none());
    }
}
