//! The Brandt λ⁰-extension B⁰_λ(S) of a semigroup with zero, materialized
//! as a Cayley table.
//!
//! Carrier index 0 is the zero of the extension. A nonzero element
//! `(α, s, β)` with `s ∈ S* = S \ {0_S}` has index
//! `1 + α·|S*|·λ + rank(s)·λ + β`, where `rank(s)` is the position of `s`
//! among the nonzero elements of S in index order. Products landing in the
//! ideal of zero-middled triples are sent straight to 0.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, SemigroupMap};

/// Default upper bound on λ.
pub const DEFAULT_LAMBDA_CAP: usize = 6;

/// A decoded element of B⁰_λ(S). `middle` is an index into the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BrandtElement {
    Zero,
    Triple { row: usize, middle: usize, col: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionKind {
    /// Extension of a monoid with zero.
    Monoid,
    /// B⁰_λ(I⁰), displayed as pairs.
    MatrixUnits,
    /// Extension of a semigroup that only has a zero.
    SemigroupWithZero,
}

#[derive(Clone)]
pub struct BrandtSemigroup {
    base: FiniteSemigroup,
    lambda: usize,
    carrier: FiniteSemigroup,
    kind: ExtensionKind,
    // S* in index order
    nonzero: Vec<usize>,
    // base index -> rank in S*
    rank: Vec<Option<usize>>,
}

impl fmt::Debug for BrandtSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BrandtSemigroup")
            .field("base", &self.base)
            .field("lambda", &self.lambda)
            .field("order", &self.carrier.len())
            .field("kind", &self.kind)
            .finish()
    }
}

/// B⁰_λ(S) for a monoid with zero, with the default λ cap.
pub fn construct_brandt(base: &FiniteSemigroup, lambda: usize) -> Result<BrandtSemigroup> {
    BrandtSemigroup::new(base, lambda, DEFAULT_LAMBDA_CAP)
}

/// The semigroup B_λ of λ×λ matrix units.
pub fn matrix_units(lambda: usize) -> Result<BrandtSemigroup> {
    BrandtSemigroup::matrix_units(lambda, DEFAULT_LAMBDA_CAP)
}

/// The Brandt semigroup B_λ(G) = B⁰_λ(G⁰).
pub fn brandt_semigroup_of_group(group: &FiniteSemigroup, lambda: usize) -> Result<BrandtSemigroup> {
    BrandtSemigroup::of_group(group, lambda, DEFAULT_LAMBDA_CAP)
}

impl BrandtSemigroup {
    /// B⁰_λ(S) for a monoid with zero `S` (zero and identity distinct).
    pub fn new(base: &FiniteSemigroup, lambda: usize, cap: usize) -> Result<Self> {
        match (base.zero(), base.identity()) {
            (None, _) => Err(Error::NotMonoidWithZero("no zero".into())),
            (_, None) => Err(Error::NotMonoidWithZero("no identity".into())),
            (Some(z), Some(e)) if z == e => Err(Error::NotMonoidWithZero("zero equals identity".into())),
            _ => Self::build(base, lambda, cap, ExtensionKind::Monoid),
        }
    }

    /// B⁰_λ(S) when `S` merely has a zero (e.g. a zero semigroup). The
    /// automorphism machinery for triples is unavailable for such bases.
    pub fn over_semigroup_with_zero(base: &FiniteSemigroup, lambda: usize, cap: usize) -> Result<Self> {
        if base.zero().is_none() {
            return Err(Error::NotMonoidWithZero("no zero".into()));
        }
        if base.len() < 2 {
            return Err(Error::BadCardinality {
                what: "base semigroup",
                value: base.len(),
                min: 2,
            });
        }
        let kind = if base.is_monoid_with_zero() {
            ExtensionKind::Monoid
        } else {
            ExtensionKind::SemigroupWithZero
        };
        Self::build(base, lambda, cap, kind)
    }

    pub fn matrix_units(lambda: usize, cap: usize) -> Result<Self> {
        let i0 = FiniteSemigroup::cyclic_group_with_zero(1)?;
        Self::build(&i0, lambda, cap, ExtensionKind::MatrixUnits)
    }

    pub fn of_group(group: &FiniteSemigroup, lambda: usize, cap: usize) -> Result<Self> {
        if group.identity().is_none() {
            return Err(Error::NotAGroup("no identity".into()));
        }
        if !group.is_group() {
            return Err(Error::NotAGroup("some element has no inverse".into()));
        }
        Self::new(&group.adjoin_zero(), lambda, cap)
    }

    fn build(base: &FiniteSemigroup, lambda: usize, cap: usize, kind: ExtensionKind) -> Result<Self> {
        if lambda == 0 {
            return Err(Error::BadCardinality {
                what: "lambda",
                value: 0,
                min: 1,
            });
        }
        if lambda > cap {
            return Err(Error::LambdaCap { lambda, cap });
        }
        let zero = base.zero().expect("checked by callers");
        let nonzero: Vec<usize> = (0..base.len()).filter(|&s| s != zero).collect();
        let mut rank = vec![None; base.len()];
        for (r, &s) in nonzero.iter().enumerate() {
            rank[s] = Some(r);
        }
        let mut out = BrandtSemigroup {
            base: base.clone(),
            lambda,
            // placeholder until the table is built
            carrier: FiniteSemigroup::trivial(),
            kind,
            nonzero,
            rank,
        };
        let size = out.expected_size();
        let elements: Vec<BrandtElement> = (0..size).map(|i| out.decode_unchecked(i)).collect();
        let labels = elements.iter().map(|&e| out.render(e)).collect();
        let carrier = FiniteSemigroup::from_fn(labels, |i, j| {
            let product = out.multiply(elements[i], elements[j]);
            out.encode_element(product)
        })?;
        let base_name = base.name().unwrap_or("S").to_string();
        out.carrier = match kind {
            ExtensionKind::MatrixUnits => carrier.with_name(format!("B_{lambda}")),
            _ => carrier.with_name(format!("B^0_{lambda}({base_name})")),
        };
        Ok(out)
    }

    fn expected_size(&self) -> usize {
        self.lambda * self.lambda * self.nonzero.len() + 1
    }

    /// The Rees-quotient product rule on decoded elements.
    pub fn multiply(&self, a: BrandtElement, b: BrandtElement) -> BrandtElement {
        match (a, b) {
            (
                BrandtElement::Triple {
                    row,
                    middle: x,
                    col: inner,
                },
                BrandtElement::Triple {
                    row: inner2,
                    middle: y,
                    col,
                },
            ) if inner == inner2 => {
                let product = self.base.mul(x, y);
                if Some(product) == self.base.zero() {
                    BrandtElement::Zero
                } else {
                    BrandtElement::Triple {
                        row,
                        middle: product,
                        col,
                    }
                }
            }
            _ => BrandtElement::Zero,
        }
    }

    pub fn base(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn carrier(&self) -> &FiniteSemigroup {
        &self.carrier
    }

    pub fn kind(&self) -> ExtensionKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// S* in index order.
    pub fn nonzero_base_elements(&self) -> &[usize] {
        &self.nonzero
    }

    pub fn encode(&self, row: usize, middle: usize, col: usize) -> Result<usize> {
        if row >= self.lambda || col >= self.lambda {
            return Err(Error::OutOfRange(format!(
                "coordinates ({row}, {col}) with lambda = {}",
                self.lambda
            )));
        }
        let rank = self
            .rank
            .get(middle)
            .copied()
            .flatten()
            .ok_or_else(|| Error::OutOfRange(format!("{middle} is not a nonzero base element")))?;
        Ok(1 + row * self.nonzero.len() * self.lambda + rank * self.lambda + col)
    }

    pub fn encode_element(&self, element: BrandtElement) -> usize {
        match element {
            BrandtElement::Zero => 0,
            BrandtElement::Triple { row, middle, col } => self
                .encode(row, middle, col)
                .expect("element produced by this extension"),
        }
    }

    pub fn decode(&self, index: usize) -> Result<BrandtElement> {
        if index >= self.expected_size() {
            return Err(Error::OutOfRange(format!(
                "index {index} for a carrier of size {}",
                self.expected_size()
            )));
        }
        Ok(self.decode_unchecked(index))
    }

    fn decode_unchecked(&self, index: usize) -> BrandtElement {
        if index == 0 {
            return BrandtElement::Zero;
        }
        let k = index - 1;
        let block = self.nonzero.len() * self.lambda;
        BrandtElement::Triple {
            row: k / block,
            middle: self.nonzero[(k % block) / self.lambda],
            col: k % self.lambda,
        }
    }

    /// Index of the diagonal idempotent `(α, 1_S, α)`.
    pub fn diagonal_unit(&self, alpha: usize) -> Option<usize> {
        let one = self.base.identity()?;
        self.encode(alpha, one, alpha).ok()
    }

    /// Display form: `0`, `(α|s|β)`, or `(α|β)` for matrix units.
    pub fn render(&self, element: BrandtElement) -> String {
        match element {
            BrandtElement::Zero => "0".to_string(),
            BrandtElement::Triple { row, col, .. } if self.kind == ExtensionKind::MatrixUnits => {
                format!("({row}|{col})")
            }
            BrandtElement::Triple { row, middle, col } => {
                format!("({row}|{}|{col})", self.base.label(middle))
            }
        }
    }

    /// The embedding `(α, β) ↦ (α, e, β)` of the matrix units B_λ, where `e`
    /// is the first nonzero idempotent of the base. `None` when the base has
    /// no nonzero idempotent.
    pub fn embed_matrix_units(&self) -> Result<Option<(BrandtSemigroup, SemigroupMap)>> {
        let zero = self.base.zero().expect("extension base has a zero");
        let Some(e) = self.base.idempotents().into_iter().find(|&x| x != zero) else {
            return Ok(None);
        };
        let units = BrandtSemigroup::matrix_units(self.lambda, self.lambda)?;
        let images = (0..units.len())
            .map(|i| match units.decode_unchecked(i) {
                BrandtElement::Zero => Ok(0),
                BrandtElement::Triple { row, col, .. } => self.encode(row, e, col),
            })
            .collect::<Result<Vec<_>>>()?;
        let map = SemigroupMap::new(units.carrier(), &self.carrier, images)?;
        Ok(Some((units, map)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let i0 = FiniteSemigroup::cyclic_group_with_zero(1).unwrap();
        let z2_0 = FiniteSemigroup::cyclic_group_with_zero(2).unwrap();
        assert_eq!(construct_brandt(&i0, 2).unwrap().len(), 5);
        assert_eq!(construct_brandt(&z2_0, 2).unwrap().len(), 9);
        assert_eq!(construct_brandt(&z2_0, 1).unwrap().len(), 3);
        assert_eq!(matrix_units(2).unwrap().len(), 5);
        assert_eq!(matrix_units(1).unwrap().len(), 2);
        assert_eq!(matrix_units(3).unwrap().len(), 10);
        let z2 = FiniteSemigroup::cyclic_group(2).unwrap();
        let z3 = FiniteSemigroup::cyclic_group(3).unwrap();
        assert_eq!(brandt_semigroup_of_group(&z2, 2).unwrap().len(), 9);
        assert_eq!(brandt_semigroup_of_group(&z3, 2).unwrap().len(), 13);
    }

    #[test]
    fn lambda_one_is_the_base() {
        let z2_0 = FiniteSemigroup::cyclic_group_with_zero(2).unwrap();
        let b = construct_brandt(&z2_0, 1).unwrap();
        // (0|s|0) <-> s, 0 <-> 0_S
        let to_base = |i: usize| match b.decode(i).unwrap() {
            BrandtElement::Zero => z2_0.zero().unwrap(),
            BrandtElement::Triple { middle, .. } => middle,
        };
        for i in 0..b.len() {
            for j in 0..b.len() {
                assert_eq!(to_base(b.carrier().mul(i, j)), z2_0.mul(to_base(i), to_base(j)));
            }
        }
    }

    #[test]
    fn trivial_group_gives_matrix_units() {
        let trivial = FiniteSemigroup::trivial();
        let b = brandt_semigroup_of_group(&trivial, 2).unwrap();
        let m = matrix_units(2).unwrap();
        let rows = |x: &BrandtSemigroup| x.carrier().to_document().table;
        assert_eq!(rows(&b), rows(&m));
    }

    #[test]
    fn rejects_bad_bases() {
        let zs = FiniteSemigroup::zero_semigroup(3).unwrap();
        assert!(matches!(construct_brandt(&zs, 2), Err(Error::NotMonoidWithZero(_))));
        let z2 = FiniteSemigroup::cyclic_group(2).unwrap();
        assert!(matches!(construct_brandt(&z2, 2), Err(Error::NotMonoidWithZero(_))));
        let trivial = FiniteSemigroup::trivial();
        assert!(matches!(
            construct_brandt(&trivial, 2),
            Err(Error::NotMonoidWithZero(_))
        ));
        let i0 = FiniteSemigroup::cyclic_group_with_zero(1).unwrap();
        assert_eq!(
            construct_brandt(&i0, 7).unwrap_err(),
            Error::LambdaCap { lambda: 7, cap: 6 }
        );
        assert!(matches!(construct_brandt(&i0, 0), Err(Error::BadCardinality { .. })));
        assert!(matches!(brandt_semigroup_of_group(&i0, 2), Err(Error::NotAGroup(_))));
        assert!(BrandtSemigroup::over_semigroup_with_zero(&zs, 2, 6).is_ok());
    }

    #[test]
    fn codec_order_for_matrix_units() {
        let m = matrix_units(2).unwrap();
        assert_eq!(m.decode(0).unwrap(), BrandtElement::Zero);
        let decoded: Vec<_> = (1..5)
            .map(|i| match m.decode(i).unwrap() {
                BrandtElement::Triple { row, middle, col } => (row, m.base().label(middle).to_string(), col),
                BrandtElement::Zero => panic!("nonzero index decoded to zero"),
            })
            .collect();
        let one = "1".to_string();
        assert_eq!(
            decoded,
            vec![
                (0, one.clone(), 0),
                (0, one.clone(), 1),
                (1, one.clone(), 0),
                (1, one, 1)
            ]
        );
        assert!(m.decode(5).is_err());
        assert!(m.encode(2, 0, 0).is_err());
        // the zero of I^0 is not in S*
        assert!(m.encode(0, 1, 0).is_err());
    }

    #[test]
    fn codec_roundtrip() {
        let z3_0 = FiniteSemigroup::cyclic_group_with_zero(3).unwrap();
        let b = construct_brandt(&z3_0, 3).unwrap();
        for i in 0..b.len() {
            assert_eq!(b.encode_element(b.decode(i).unwrap()), i);
        }
    }

    #[test]
    fn labels() {
        let z2_0 = FiniteSemigroup::cyclic_group_with_zero(2).unwrap();
        let b = construct_brandt(&z2_0, 2).unwrap();
        assert_eq!(b.carrier().label(0), "0");
        assert_eq!(b.carrier().label(1), "(0|1|0)");
        assert_eq!(b.carrier().label(4), "(0|g|1)");
        let m = matrix_units(2).unwrap();
        assert_eq!(m.carrier().labels(), &["0", "(0|0)", "(0|1)", "(1|0)", "(1|1)"]);
    }

    #[test]
    fn matrix_units_idempotents() {
        // E(B_2) = {0, (0|0), (1|1)}: off-diagonal units square to 0
        let m2 = matrix_units(2).unwrap();
        assert_eq!(m2.carrier().idempotents(), vec![0, 1, 4]);
        assert_eq!(m2.carrier().maximal_idempotents().len(), 2);
        let m3 = matrix_units(3).unwrap();
        assert_eq!(m3.carrier().maximal_idempotents().len(), 3);
    }

    #[test]
    fn contains_matrix_units() {
        let z2_0 = FiniteSemigroup::cyclic_group_with_zero(2).unwrap();
        let b = construct_brandt(&z2_0, 3).unwrap();
        let (_, map) = b.embed_matrix_units().unwrap().unwrap();
        assert!(map.is_homomorphism());
        let mut images = map.images().to_vec();
        images.sort_unstable();
        images.dedup();
        assert_eq!(images.len(), 10);
    }
}
