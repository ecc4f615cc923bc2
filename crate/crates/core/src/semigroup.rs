//! Finite semigroups given by Cayley tables.
//!
//! Elements are identified by their index into an ordered label list and
//! every map between semigroups is an index array. Maps act on the right:
//! `f.then(&g)` sends `x` to `((x)f)g`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite semigroup, validated associative, with its zero and identity
/// detected from the table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    name: Option<String>,
    labels: Vec<String>,
    // row-major n*n
    table: Vec<usize>,
    zero: Option<usize>,
    identity: Option<usize>,
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("name", &self.name)
            .field("order", &self.len())
            .field("zero", &self.zero)
            .field("identity", &self.identity)
            .finish()
    }
}

impl FiniteSemigroup {
    /// Validates a labelled Cayley table: square, total, distinct labels and
    /// associative (checked over all n³ triples).
    pub fn validate(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if table.len() != n {
            return Err(Error::NotSquare {
                row: table.len(),
                len: 0,
                expected: n,
            });
        }
        let mut seen = HashSet::with_capacity(n);
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::BadIndex {
                        row,
                        col,
                        value,
                        size: n,
                    });
                }
                flat.push(value);
            }
        }
        Self::from_flat(labels, flat)
    }

    pub(crate) fn from_flat(labels: Vec<String>, table: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        debug_assert_eq!(table.len(), n * n);
        if let Some((i, j, k)) = associativity_witness(n, &table) {
            return Err(Error::NonAssociative { i, j, k });
        }
        let mut s = FiniteSemigroup {
            name: None,
            labels,
            table,
            zero: None,
            identity: None,
        };
        s.zero = (0..n).find(|&z| (0..n).all(|x| s.mul(z, x) == z && s.mul(x, z) == z));
        s.identity = (0..n).find(|&e| (0..n).all(|x| s.mul(e, x) == x && s.mul(x, e) == x));
        Ok(s)
    }

    /// Builds a semigroup from a product closure over `0..n`.
    pub fn from_fn<F>(labels: Vec<String>, mut product: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> usize,
    {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let value = product(i, j);
                if value >= n {
                    return Err(Error::BadIndex {
                        row: i,
                        col: j,
                        value,
                        size: n,
                    });
                }
                table.push(value);
            }
        }
        Self::from_flat(labels, table)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.labels.len() + b]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        let n = self.labels.len();
        &self.table[a * n..(a + 1) * n]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    /// A monoid with zero in the sense used throughout the crate: both a
    /// zero and an identity exist and they are distinct.
    pub fn is_monoid_with_zero(&self) -> bool {
        matches!((self.zero, self.identity), (Some(z), Some(e)) if z != e)
    }

    pub fn check_index(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: x,
                size: self.len(),
            })
        }
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    /// E(S) in index order.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.is_idempotent(x)).collect()
    }

    /// Natural partial order on idempotents: `e <= f` iff `ef = fe = e`.
    pub fn natural_leq(&self, e: usize, f: usize) -> Result<bool> {
        self.check_index(e)?;
        self.check_index(f)?;
        for x in [e, f] {
            if !self.is_idempotent(x) {
                return Err(Error::NotIdempotent(x));
            }
        }
        Ok(self.leq_unchecked(e, f))
    }

    #[inline]
    pub(crate) fn leq_unchecked(&self, e: usize, f: usize) -> bool {
        self.mul(e, f) == e && self.mul(f, e) == e
    }

    /// Idempotents that are maximal under the natural partial order.
    pub fn maximal_idempotents(&self) -> Vec<usize> {
        let idempotents = self.idempotents();
        idempotents
            .iter()
            .copied()
            .filter(|&e| !idempotents.iter().any(|&f| f != e && self.leq_unchecked(e, f)))
            .collect()
    }

    /// Whether E(S) is closed under multiplication.
    pub fn idempotents_form_band(&self) -> bool {
        let idempotents = self.idempotents();
        idempotents
            .iter()
            .all(|&e| idempotents.iter().all(|&f| self.is_idempotent(self.mul(e, f))))
    }

    pub fn unit_group(&self) -> Result<UnitGroup> {
        let one = self.identity.ok_or(Error::NoIdentity)?;
        let n = self.len();
        let inverse: Vec<Option<usize>> = (0..n)
            .map(|u| (0..n).find(|&v| self.mul(u, v) == one && self.mul(v, u) == one))
            .collect();
        let members = (0..n).filter(|&u| inverse[u].is_some()).collect();
        Ok(UnitGroup {
            identity: one,
            members,
            inverse,
        })
    }

    /// Whether every element has a two-sided inverse with respect to an
    /// identity.
    pub fn is_group(&self) -> bool {
        match self.unit_group() {
            Ok(units) => units.len() == self.len(),
            Err(_) => false,
        }
    }

    /// S⁰: appends a fresh absorbing element, even if S already has a zero.
    pub fn adjoin_zero(&self) -> FiniteSemigroup {
        let fresh = self.fresh_label("0");
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.push(fresh);
        let table = self.extended_table(|a, b| if a == n || b == n { n } else { self.mul(a, b) });
        let name = self.name.as_ref().map(|s| format!("{s}^0"));
        let mut out = Self::from_flat(labels, table).expect("adjoining a zero preserves associativity");
        out.name = name;
        out
    }

    /// S¹: appends a fresh neutral element, even if S already has an identity.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        let fresh = self.fresh_label("1");
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.push(fresh);
        let table = self.extended_table(|a, b| {
            if a == n {
                b
            } else if b == n {
                a
            } else {
                self.mul(a, b)
            }
        });
        let name = self.name.as_ref().map(|s| format!("{s}^1"));
        let mut out = Self::from_flat(labels, table).expect("adjoining an identity preserves associativity");
        out.name = name;
        out
    }

    fn extended_table<F: Fn(usize, usize) -> usize>(&self, product: F) -> Vec<usize> {
        let m = self.len() + 1;
        let mut table = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                table.push(product(a, b));
            }
        }
        table
    }

    fn fresh_label(&self, base: &str) -> String {
        let mut label = base.to_string();
        while self.index_of(&label).is_some() {
            label.push('\'');
        }
        label
    }

    /// The single-element semigroup.
    pub fn trivial() -> FiniteSemigroup {
        Self::from_flat(vec!["e".into()], vec![0]).unwrap().with_name("trivial")
    }

    /// Zero semigroup of cardinality `k`: every product is the zero, which
    /// is the last element.
    pub fn zero_semigroup(k: usize) -> Result<FiniteSemigroup> {
        if k < 2 {
            return Err(Error::BadCardinality {
                what: "zero semigroup",
                value: k,
                min: 2,
            });
        }
        let mut labels: Vec<String> = (1..k).map(|i| format!("a{i}")).collect();
        labels.push("0".into());
        let z = k - 1;
        Ok(Self::from_fn(labels, |_, _| z)?.with_name(format!("zero-{k}")))
    }

    /// Cyclic group Z_m with elements `1, g, g^2, ...`.
    pub fn cyclic_group(m: usize) -> Result<FiniteSemigroup> {
        if m < 1 {
            return Err(Error::BadCardinality {
                what: "cyclic group",
                value: m,
                min: 1,
            });
        }
        let labels = (0..m)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Ok(Self::from_fn(labels, |a, b| (a + b) % m)?.with_name(format!("Z{m}")))
    }

    /// Z_m with an adjoined zero. For `m = 1` this is I⁰.
    pub fn cyclic_group_with_zero(m: usize) -> Result<FiniteSemigroup> {
        let s = Self::cyclic_group(m)?.adjoin_zero();
        Ok(if m == 1 { s.with_name("I^0") } else { s })
    }

    pub fn to_document(&self) -> CayleyTable {
        let n = self.len();
        CayleyTable {
            name: self.name.clone(),
            elements: self.labels.clone(),
            table: (0..n).map(|a| self.row(a).to_vec()).collect(),
        }
    }

    pub fn from_document(doc: CayleyTable) -> Result<Self> {
        let s = Self::validate(doc.elements, doc.table)?;
        Ok(match doc.name {
            Some(name) => s.with_name(name),
            None => s,
        })
    }
}

/// First triple `(i, j, k)` with `(ij)k != i(jk)`, if any.
pub(crate) fn associativity_witness(n: usize, table: &[usize]) -> Option<(usize, usize, usize)> {
    for i in 0..n {
        for j in 0..n {
            let ij = table[i * n + j];
            for k in 0..n {
                if table[ij * n + k] != table[i * n + table[j * n + k]] {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// The group of units H₁ of a monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroup {
    identity: usize,
    members: Vec<usize>,
    // indexed by parent element
    inverse: Vec<Option<usize>>,
}

impl UnitGroup {
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Sorted member indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.inverse.get(x).is_some_and(Option::is_some)
    }

    pub fn inverse(&self, u: usize) -> Option<usize> {
        self.inverse.get(u).copied().flatten()
    }
}

/// A total map between finite semigroups, with its homomorphism and
/// bijectivity status computed at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemigroupMap {
    images: Vec<usize>,
    is_homomorphism: bool,
    is_bijective: bool,
}

impl SemigroupMap {
    pub fn new(source: &FiniteSemigroup, target: &FiniteSemigroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::OutOfRange(format!(
                "map has {} images for {} source elements",
                images.len(),
                source.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= target.len()) {
            return Err(Error::ElementOutOfRange {
                index: bad,
                size: target.len(),
            });
        }
        let is_homomorphism = is_multiplicative(source, target, &images);
        let is_bijective = source.len() == target.len() && is_permutation(&images);
        Ok(SemigroupMap {
            images,
            is_homomorphism,
            is_bijective,
        })
    }

    /// A self-map of `s`.
    pub fn endo(s: &FiniteSemigroup, images: Vec<usize>) -> Result<Self> {
        Self::new(s, s, images)
    }

    pub fn identity(s: &FiniteSemigroup) -> Self {
        SemigroupMap {
            images: (0..s.len()).collect(),
            is_homomorphism: true,
            is_bijective: true,
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_homomorphism(&self) -> bool {
        self.is_homomorphism
    }

    pub fn is_bijective(&self) -> bool {
        self.is_bijective
    }

    pub fn is_automorphism(&self) -> bool {
        self.is_homomorphism && self.is_bijective
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Right-action composition: first `self`, then `next`.
    pub fn then(&self, next: &SemigroupMap) -> SemigroupMap {
        let images = self.images.iter().map(|&x| next.images[x]).collect();
        SemigroupMap {
            images,
            is_homomorphism: self.is_homomorphism && next.is_homomorphism,
            is_bijective: self.is_bijective && next.is_bijective,
        }
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Option<SemigroupMap> {
        if !self.is_bijective {
            return None;
        }
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Some(SemigroupMap {
            images,
            is_homomorphism: self.is_homomorphism,
            is_bijective: true,
        })
    }
}

fn is_permutation(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    for &y in images {
        if y >= seen.len() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    true
}

fn is_multiplicative(source: &FiniteSemigroup, target: &FiniteSemigroup, images: &[usize]) -> bool {
    let n = source.len();
    (0..n).all(|a| (0..n).all(|b| images[source.mul(a, b)] == target.mul(images[a], images[b])))
}

/// True iff `images` is a bijective multiplicative self-map of `s`.
pub fn is_automorphism(s: &FiniteSemigroup, images: &[usize]) -> bool {
    images.len() == s.len()
        && images.iter().all(|&y| y < s.len())
        && is_permutation(images)
        && is_multiplicative(s, s, images)
}

/// Extends an automorphism `f` of `s` to S⁰ by fixing the adjoined zero.
/// Returns the extension together with S⁰.
pub fn extend_automorphism_to_zero(s: &FiniteSemigroup, f: &SemigroupMap) -> Result<(FiniteSemigroup, SemigroupMap)> {
    if f.images().len() != s.len() || !is_automorphism(s, f.images()) {
        return Err(Error::NotAutomorphism);
    }
    let with_zero = s.adjoin_zero();
    let zero = s.len();
    let mut images = f.images().to_vec();
    images.push(zero);
    let extended = SemigroupMap::endo(&with_zero, images)?;
    debug_assert!(extended.is_automorphism());
    Ok((with_zero, extended))
}

/// The Cayley-table JSON document:
/// `{ "name": optional, "elements": [label, ...], "table": [[int, ...], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Deterministic rendering with one table row per line.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        if let Some(name) = &self.name {
            out.push_str(&format!("  \"name\": {},\n", json_string(name)));
        }
        let labels: Vec<String> = self.elements.iter().map(|l| json_string(l)).collect();
        out.push_str(&format!("  \"elements\": [{}],\n", labels.join(", ")));
        out.push_str("  \"table\": [\n");
        for (i, row) in self.table.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            let sep = if i + 1 == self.table.len() { "" } else { "," };
            out.push_str(&format!("    [{}]{}\n", cells.join(", "), sep));
        }
        out.push_str("  ]\n}\n");
        out
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_0() -> FiniteSemigroup {
        FiniteSemigroup::cyclic_group_with_zero(2).unwrap()
    }

    #[test]
    fn trivial_semigroup_is_zero_and_identity() {
        let s = FiniteSemigroup::validate(vec!["x".into()], vec![vec![0]]).unwrap();
        assert_eq!(s.zero(), Some(0));
        assert_eq!(s.identity(), Some(0));
        assert!(!s.is_monoid_with_zero());
        assert_eq!(s.idempotents(), vec![0]);
        assert_eq!(s.maximal_idempotents(), vec![0]);
    }

    #[test]
    fn z2_with_zero_validates() {
        let s = FiniteSemigroup::validate(
            vec!["1".into(), "g".into(), "0".into()],
            vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]],
        )
        .unwrap();
        assert_eq!(s.zero(), Some(2));
        assert_eq!(s.identity(), Some(0));
        assert!(s.is_monoid_with_zero());
        assert_eq!(s.labels(), z2_0().labels());
        assert_eq!(s.to_document().table, z2_0().to_document().table);
    }

    #[test]
    fn non_associative_table_reports_witness() {
        let bad = vec![vec![1, 0], vec![0, 0]];
        let err = FiniteSemigroup::validate(vec!["a".into(), "b".into()], bad).unwrap_err();
        match err {
            Error::NonAssociative { i, j, k } => {
                let t = [[1usize, 0], [0, 0]];
                assert_ne!(t[t[i][j]][k], t[i][t[j][k]]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_index_and_duplicates() {
        let err = FiniteSemigroup::validate(vec!["a".into()], vec![vec![1]]).unwrap_err();
        assert!(matches!(err, Error::BadIndex { value: 1, .. }));
        let err = FiniteSemigroup::validate(vec!["a".into(), "a".into()], vec![vec![0, 0], vec![0, 0]]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("a".into()));
        let err = FiniteSemigroup::validate(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0]]).unwrap_err();
        assert!(matches!(err, Error::NotSquare { row: 1, .. }));
    }

    #[test]
    fn natural_order_examples() {
        let s = z2_0();
        let (one, zero) = (s.identity().unwrap(), s.zero().unwrap());
        assert!(s.natural_leq(zero, one).unwrap());
        assert!(s.natural_leq(one, one).unwrap());
        assert!(!s.natural_leq(one, zero).unwrap());
        let g = s.index_of("g").unwrap();
        assert_eq!(s.natural_leq(g, one), Err(Error::NotIdempotent(g)));
    }

    #[test]
    fn idempotents_of_z2_0() {
        let s = z2_0();
        let names = |xs: Vec<usize>| xs.into_iter().map(|x| s.label(x).to_string()).collect::<Vec<_>>();
        assert_eq!(names(s.idempotents()), ["1", "0"]);
        assert_eq!(names(s.maximal_idempotents()), ["1"]);
        assert!(s.idempotents_form_band());
    }

    #[test]
    fn unit_groups() {
        let s = z2_0();
        let units = s.unit_group().unwrap();
        assert_eq!(units.members(), &[0, 1]);
        assert_eq!(units.inverse(1), Some(1));
        assert!(!units.contains(2));

        let i0 = FiniteSemigroup::cyclic_group_with_zero(1).unwrap();
        assert_eq!(i0.unit_group().unwrap().members(), &[0]);

        let z1 = FiniteSemigroup::zero_semigroup(3).unwrap().adjoin_identity();
        let units = z1.unit_group().unwrap();
        assert_eq!(units.members(), &[z1.identity().unwrap()]);

        let zs = FiniteSemigroup::zero_semigroup(3).unwrap();
        assert_eq!(zs.unit_group(), Err(Error::NoIdentity));
    }

    #[test]
    fn adjoining_elements() {
        let z2 = FiniteSemigroup::cyclic_group(2).unwrap();
        let z2_0 = z2.adjoin_zero();
        assert_eq!(z2_0.len(), 3);
        assert_eq!(z2_0.zero(), Some(2));
        assert_eq!(z2_0, z2_0_reference());

        let trivial = FiniteSemigroup::trivial();
        let i0 = trivial.adjoin_zero();
        assert_eq!(i0.len(), 2);
        assert!(i0.is_monoid_with_zero());

        // fresh element even when one exists already
        let again = z2_0.adjoin_zero();
        assert_eq!(again.len(), 4);
        assert_eq!(again.label(3), "0'");
        assert_eq!(again.zero(), Some(3));
    }

    fn z2_0_reference() -> FiniteSemigroup {
        FiniteSemigroup::validate(
            vec!["1".into(), "g".into(), "0".into()],
            vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]],
        )
        .unwrap()
        .with_name("Z2^0")
    }

    #[test]
    fn automorphism_predicate() {
        let s = z2_0();
        assert!(is_automorphism(&s, &[0, 1, 2]));
        // swapping 1 and g: (g*g) = 1 maps to g, but images multiply to 1*1 = 1
        assert!(!is_automorphism(&s, &[1, 0, 2]));
        assert!(!is_automorphism(&s, &[0, 0, 2]));
    }

    #[test]
    fn extending_to_zero() {
        let z2 = FiniteSemigroup::cyclic_group(2).unwrap();
        let (with_zero, f) = extend_automorphism_to_zero(&z2, &SemigroupMap::identity(&z2)).unwrap();
        assert_eq!(with_zero.len(), 3);
        assert!(f.is_identity());
        assert!(f.is_automorphism());

        let trivial = FiniteSemigroup::trivial();
        let (i0, f) = extend_automorphism_to_zero(&trivial, &SemigroupMap::identity(&trivial)).unwrap();
        assert_eq!(i0.len(), 2);
        assert!(f.is_identity());

        let not_aut = SemigroupMap::endo(&z2, vec![0, 0]).unwrap();
        assert_eq!(extend_automorphism_to_zero(&z2, &not_aut), Err(Error::NotAutomorphism));
    }

    #[test]
    fn named_constructors() {
        let zs = FiniteSemigroup::zero_semigroup(3).unwrap();
        assert_eq!(zs.len(), 3);
        let z = zs.zero().unwrap();
        assert!((0..3).all(|a| (0..3).all(|b| zs.mul(a, b) == z)));
        assert!(matches!(
            FiniteSemigroup::zero_semigroup(1),
            Err(Error::BadCardinality { .. })
        ));
        let i0 = FiniteSemigroup::cyclic_group_with_zero(1).unwrap();
        assert_eq!(i0.labels(), &["1", "0"]);
        assert!(matches!(
            FiniteSemigroup::cyclic_group_with_zero(0),
            Err(Error::BadCardinality { .. })
        ));
    }

    #[test]
    fn json_is_byte_stable() {
        let doc = z2_0().to_document();
        let text = doc.to_json();
        let back = CayleyTable::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), text);
        assert_eq!(
            text,
            "{\n  \"name\": \"Z2^0\",\n  \"elements\": [\"1\", \"g\", \"0\"],\n  \"table\": [\n    [0, 1, 2],\n    [1, 0, 2],\n    [2, 2, 2]\n  ]\n}\n"
        );
    }

    #[test]
    fn map_composition_is_right_action() {
        let s = FiniteSemigroup::zero_semigroup(4).unwrap();
        let f = SemigroupMap::endo(&s, vec![1, 2, 0, 3]).unwrap();
        let g = SemigroupMap::endo(&s, vec![0, 2, 1, 3]).unwrap();
        // (0)f = 1, (1)g = 2
        assert_eq!(f.then(&g).apply(0), 2);
        assert!(f.then(&f.inverse().unwrap()).is_identity());
    }
}
