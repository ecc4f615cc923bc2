//! Automorphisms of B⁰_λ(S) as triples `[φ, h, u]`.
//!
//! `φ` permutes `0..λ`, `h` is an automorphism of the base monoid S and `u`
//! assigns a unit of S to every coordinate. The triple acts on the carrier by
//!
//! ```text
//! (α, s, β) ↦ ((α)φ, (α)u · (s)h · ((β)u)⁻¹, (β)φ),    0 ↦ 0
//! ```
//!
//! Everything acts on the right. Triples multiply by
//! `[φ, h, u]·[φ', h', u'] = [φφ', hh', α ↦ ((α)φ)u' · ((α)u)h']`, which
//! makes realization a homomorphism onto Aut(B⁰_λ(S)) whose kernel is the
//! set of triples `[id, conj, ũ]` with `u` constant and `(s)h = ũ⁻¹ s ũ`.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::brandt::{BrandtElement, BrandtSemigroup, ExtensionKind};
use crate::budget::{factorial, Budget};
use crate::error::{Error, Result};
use crate::oracle::enumerate_automorphisms;
use crate::semigroup::{FiniteSemigroup, SemigroupMap, UnitGroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutTriple {
    phi: Vec<usize>,
    h: SemigroupMap,
    u: Vec<usize>,
}

impl AutTriple {
    /// `(α)φ` as an array.
    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn h(&self) -> &SemigroupMap {
        &self.h
    }

    /// `(α)u` as an array of base indices.
    pub fn u(&self) -> &[usize] {
        &self.u
    }
}

/// Wire form of a triple: `{ "phi": [...], "h": [...], "u": [label, ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleDoc {
    pub phi: Vec<usize>,
    pub h: Vec<usize>,
    pub u: Vec<String>,
}

/// The group S_λ × Aut(S) × H₁^λ acting on a fixed extension.
#[derive(Debug, Clone)]
pub struct TripleGroup<'a> {
    extension: &'a BrandtSemigroup,
    units: UnitGroup,
    base_automorphisms: Vec<SemigroupMap>,
    identity: AutTriple,
    budget: Budget,
}

impl<'a> TripleGroup<'a> {
    /// Aut(S) is computed with the backtracking search on the base.
    pub fn new(extension: &'a BrandtSemigroup, budget: &Budget) -> Result<Self> {
        let base = extension.base();
        if extension.kind() == ExtensionKind::SemigroupWithZero || !base.is_monoid_with_zero() {
            return Err(Error::NotMonoidWithZero("triples need a base monoid with zero".into()));
        }
        let units = base.unit_group()?;
        let base_automorphisms = enumerate_automorphisms(base, budget)?;
        let lambda = extension.lambda();
        let identity = AutTriple {
            phi: (0..lambda).collect(),
            h: SemigroupMap::identity(base),
            u: vec![units.identity(); lambda],
        };
        Ok(TripleGroup {
            extension,
            units,
            base_automorphisms,
            identity,
            budget: *budget,
        })
    }

    pub fn extension(&self) -> &'a BrandtSemigroup {
        self.extension
    }

    fn base(&self) -> &'a FiniteSemigroup {
        self.extension.base()
    }

    fn lambda(&self) -> usize {
        self.extension.lambda()
    }

    fn one(&self) -> usize {
        self.units.identity()
    }

    fn unit_inverse(&self, u: usize) -> usize {
        self.units.inverse(u).expect("triple components are units")
    }

    pub fn units(&self) -> &UnitGroup {
        &self.units
    }

    /// Aut(S), sorted by image array.
    pub fn base_automorphisms(&self) -> &[SemigroupMap] {
        &self.base_automorphisms
    }

    pub fn identity(&self) -> &AutTriple {
        &self.identity
    }

    /// Builds and validates a triple.
    pub fn triple(&self, phi: Vec<usize>, h: Vec<usize>, u: Vec<usize>) -> Result<AutTriple> {
        let base = self.base();
        if h.len() != base.len() {
            return Err(Error::MismatchedBase(format!(
                "h has {} images, base has {} elements",
                h.len(),
                base.len()
            )));
        }
        let h = SemigroupMap::endo(base, h).map_err(|e| Error::InvalidTriple(e.to_string()))?;
        let t = AutTriple { phi, h, u };
        self.check(&t)?;
        Ok(t)
    }

    /// Validates a triple against this extension.
    pub fn check(&self, t: &AutTriple) -> Result<()> {
        let lambda = self.lambda();
        let base = self.base();
        if t.phi.len() != lambda || t.u.len() != lambda {
            return Err(Error::MismatchedBase(format!(
                "phi/u have lengths {}/{}, lambda is {lambda}",
                t.phi.len(),
                t.u.len()
            )));
        }
        if t.h.images().len() != base.len() {
            return Err(Error::MismatchedBase("h is a map on a different base".into()));
        }
        if !t.phi.iter().sorted().copied().eq(0..lambda) {
            return Err(Error::InvalidTriple("phi is not a permutation".into()));
        }
        if !t.h.is_automorphism() {
            return Err(Error::InvalidTriple("h is not an automorphism of the base".into()));
        }
        let (zero, one) = (base.zero().unwrap(), self.one());
        if t.h.apply(zero) != zero || t.h.apply(one) != one {
            return Err(Error::InvalidTriple("h moves the zero or the identity".into()));
        }
        if let Some(&bad) = t.u.iter().find(|&&x| !self.units.contains(x)) {
            return Err(Error::InvalidTriple(format!(
                "u takes the value {:?}, which is not a unit",
                base.labels().get(bad).map(String::as_str).unwrap_or("?")
            )));
        }
        Ok(())
    }

    /// Image array of the carrier map defined by `t`.
    fn realize_images(&self, t: &AutTriple) -> Vec<usize> {
        let ext = self.extension;
        let base = self.base();
        (0..ext.len())
            .map(|i| match ext.decode(i).expect("carrier index") {
                BrandtElement::Zero => 0,
                BrandtElement::Triple { row, middle, col } => {
                    let left = base.mul(t.u[row], t.h.apply(middle));
                    let middle = base.mul(left, self.unit_inverse(t.u[col]));
                    ext.encode_element(BrandtElement::Triple {
                        row: t.phi[row],
                        middle,
                        col: t.phi[col],
                    })
                }
            })
            .collect()
    }

    /// The automorphism of the carrier defined by `t`, verified bijective and
    /// multiplicative.
    pub fn realize(&self, t: &AutTriple) -> Result<SemigroupMap> {
        self.check(t)?;
        let map = SemigroupMap::endo(self.extension.carrier(), self.realize_images(t))?;
        if !map.is_automorphism() {
            return Err(Error::RealizationNotAutomorphism(format!("{t:?}")));
        }
        Ok(map)
    }

    /// `t·t'`: first `t`, then `t'`.
    pub fn compose(&self, t: &AutTriple, next: &AutTriple) -> Result<AutTriple> {
        self.check(t)?;
        self.check(next)?;
        Ok(self.compose_unchecked(t, next))
    }

    fn compose_unchecked(&self, t: &AutTriple, next: &AutTriple) -> AutTriple {
        let base = self.base();
        let phi = t.phi.iter().map(|&a| next.phi[a]).collect();
        let h = t.h.then(&next.h);
        let u = (0..self.lambda())
            .map(|a| base.mul(next.u[t.phi[a]], next.h.apply(t.u[a])))
            .collect();
        AutTriple { phi, h, u }
    }

    /// `[φ, h, u]⁻¹ = [φ⁻¹, h⁻¹, α ↦ ((((α)φ⁻¹)u)⁻¹)h⁻¹]`.
    pub fn invert(&self, t: &AutTriple) -> Result<AutTriple> {
        self.check(t)?;
        let mut phi_inv = vec![0; self.lambda()];
        for (a, &b) in t.phi.iter().enumerate() {
            phi_inv[b] = a;
        }
        let h_inv = t.h.inverse().expect("checked automorphism");
        let u = phi_inv
            .iter()
            .map(|&a| h_inv.apply(self.unit_inverse(t.u[a])))
            .collect();
        Ok(AutTriple {
            phi: phi_inv,
            h: h_inv,
            u,
        })
    }

    /// Inner automorphism `s ↦ w⁻¹ s w` of the base, for a unit `w`.
    pub fn conjugation(&self, w: usize) -> Result<SemigroupMap> {
        let w_inv = self
            .units
            .inverse(w)
            .ok_or_else(|| Error::InvalidTriple(format!("{w} is not a unit")))?;
        let base = self.base();
        let images = (0..base.len()).map(|s| base.mul(base.mul(w_inv, s), w)).collect();
        SemigroupMap::endo(base, images)
    }

    /// The kernel element `[id, s ↦ w⁻¹ s w, constant w]`.
    pub fn kernel_element(&self, w: usize) -> Result<AutTriple> {
        Ok(AutTriple {
            phi: (0..self.lambda()).collect(),
            h: self.conjugation(w)?,
            u: vec![w; self.lambda()],
        })
    }

    /// Whether `t` lies in the kernel of realization: `φ` trivial, `u`
    /// constant `ũ` and `h` conjugation by `ũ`.
    pub fn is_in_kernel(&self, t: &AutTriple) -> Result<bool> {
        self.check(t)?;
        if !t.phi.iter().enumerate().all(|(a, &b)| a == b) {
            return Ok(false);
        }
        let w = t.u[0];
        if t.u.iter().any(|&x| x != w) {
            return Ok(false);
        }
        Ok(self.conjugation(w)? == t.h)
    }

    /// All kernel elements, one per unit, ordered by the unit's index.
    pub fn kernel(&self) -> Vec<AutTriple> {
        self.units
            .members()
            .iter()
            .map(|&w| self.kernel_element(w).expect("member of the unit group"))
            .collect()
    }

    /// The representative of `t·ker` with `(0)u = 1_S`.
    pub fn normalize(&self, t: &AutTriple) -> Result<AutTriple> {
        self.check(t)?;
        let w = self.unit_inverse(t.u[0]);
        Ok(self.compose_unchecked(t, &self.kernel_element(w)?))
    }

    pub fn is_normalized(&self, t: &AutTriple) -> bool {
        t.u.first() == Some(&self.one())
    }

    /// |S_λ × Aut(S) × H₁^λ|.
    pub fn triple_group_order(&self) -> u128 {
        factorial(self.lambda())
            .saturating_mul(self.base_automorphisms.len() as u128)
            .saturating_mul(pow(self.units.len(), self.lambda()))
    }

    pub fn kernel_order(&self) -> u128 {
        self.units.len() as u128
    }

    /// |Aut(B⁰_λ(S))| as the index of the kernel in the triple group.
    pub fn aut_group_order(&self) -> u128 {
        self.triple_group_order() / self.kernel_order()
    }

    /// Normalized triples in lexicographic order of `(φ, h, u)`; one per
    /// automorphism of the extension.
    pub fn enumerate_normalized(&self) -> Result<Vec<AutTriple>> {
        self.budget
            .check("normalized triples", self.aut_group_order(), self.budget.max_triples)?;
        Ok(self.enumerate_with_u(self.lambda() - 1, |tail| {
            let mut u = vec![self.one()];
            u.extend(tail);
            u
        }))
    }

    /// Every triple of the group, in lexicographic order of `(φ, h, u)`.
    pub fn enumerate_all(&self) -> Result<Vec<AutTriple>> {
        self.budget
            .check("triples", self.triple_group_order(), self.budget.max_triples)?;
        Ok(self.enumerate_with_u(self.lambda(), |u| u.to_vec()))
    }

    fn enumerate_with_u<F>(&self, free: usize, make_u: F) -> Vec<AutTriple>
    where
        F: Fn(&[usize]) -> Vec<usize>,
    {
        let lambda = self.lambda();
        let words = unit_words(self.units.members(), free);
        let mut out = Vec::new();
        for phi in (0..lambda).permutations(lambda) {
            for h in &self.base_automorphisms {
                for word in &words {
                    out.push(AutTriple {
                        phi: phi.clone(),
                        h: h.clone(),
                        u: make_u(word),
                    });
                }
            }
        }
        out
    }

    /// A uniformly random triple.
    pub fn random_triple<R: Rng + ?Sized>(&self, rng: &mut R) -> AutTriple {
        let mut phi: Vec<usize> = (0..self.lambda()).collect();
        phi.shuffle(rng);
        let h = self
            .base_automorphisms
            .choose(rng)
            .expect("identity is always an automorphism")
            .clone();
        let members = self.units.members();
        let u = (0..self.lambda())
            .map(|_| *members.choose(rng).expect("identity is a unit"))
            .collect();
        AutTriple { phi, h, u }
    }

    pub fn to_doc(&self, t: &AutTriple) -> TripleDoc {
        let base = self.base();
        TripleDoc {
            phi: t.phi.clone(),
            h: t.h.images().to_vec(),
            u: t.u.iter().map(|&x| base.label(x).to_string()).collect(),
        }
    }

    pub fn from_doc(&self, doc: &TripleDoc) -> Result<AutTriple> {
        let base = self.base();
        let u = doc
            .u
            .iter()
            .map(|label| {
                base.index_of(label)
                    .ok_or_else(|| Error::InvalidTriple(format!("unknown element label {label:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.triple(doc.phi.clone(), doc.h.clone(), u)
    }
}

/// |Aut(B⁰_λ(S))| for a monoid-with-zero base.
pub fn aut_group_order(extension: &BrandtSemigroup, budget: &Budget) -> Result<u128> {
    Ok(TripleGroup::new(extension, budget)?.aut_group_order())
}

fn pow(base: usize, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

/// All words of length `len` over `alphabet`, lexicographic.
fn unit_words(alphabet: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut words = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&x| {
                    let mut next = w.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brandt::{construct_brandt, matrix_units};

    fn z_n_0(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::cyclic_group_with_zero(n).unwrap()
    }

    fn el(b: &BrandtSemigroup, row: usize, label: &str, col: usize) -> usize {
        b.encode(row, b.base().index_of(label).unwrap(), col).unwrap()
    }

    #[test]
    fn identity_realizes_identity() {
        let b = construct_brandt(&z_n_0(3), 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        assert!(g.realize(g.identity()).unwrap().is_identity());
    }

    #[test]
    fn swap_on_matrix_units() {
        let b = matrix_units(2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        let t = g.triple(vec![1, 0], vec![0, 1], vec![0, 0]).unwrap();
        let sigma = g.realize(&t).unwrap();
        assert_eq!(sigma.apply(el(&b, 0, "1", 1)), el(&b, 1, "1", 0));
        assert_eq!(sigma.apply(el(&b, 0, "1", 0)), el(&b, 1, "1", 1));
        assert_eq!(sigma.apply(0), 0);
    }

    #[test]
    fn unit_twist_on_z2() {
        let b = construct_brandt(&z_n_0(2), 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        // u = (g, 1)
        let t = g.triple(vec![0, 1], vec![0, 1, 2], vec![1, 0]).unwrap();
        let sigma = g.realize(&t).unwrap();
        assert_eq!(sigma.apply(el(&b, 0, "1", 1)), el(&b, 0, "g", 1));
    }

    #[test]
    fn swap_squared_is_identity() {
        let b = construct_brandt(&z_n_0(2), 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        let t = g.triple(vec![1, 0], vec![0, 1, 2], vec![0, 0]).unwrap();
        assert_eq!(&g.compose(&t, &t).unwrap(), g.identity());
        assert_eq!(g.compose(&t, g.identity()).unwrap(), t);
        assert_eq!(g.compose(g.identity(), &t).unwrap(), t);
    }

    /// Two non-commuting triples over Z3^0 with λ = 2, expanded by hand.
    /// t = [swap, id, (g, 1)], t' = [id, s ↦ s², (1, g)].
    /// t·t': φ = swap, h = s ↦ s², u = (u'(1)·h'(g), u'(0)·h'(1)) = (g·g², 1) = (1, 1).
    /// t'·t: φ = swap, h = s ↦ s², u = (u(0)·g, u(1)·g) = (g, g).
    #[test]
    fn composition_convention() {
        let b = construct_brandt(&z_n_0(3), 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        let square = vec![0, 2, 1, 3];
        let t = g.triple(vec![1, 0], vec![0, 1, 2, 3], vec![1, 0]).unwrap();
        let t2 = g.triple(vec![0, 1], square.clone(), vec![0, 1]).unwrap();
        assert_eq!(
            g.compose(&t, &t2).unwrap(),
            g.triple(vec![1, 0], square.clone(), vec![0, 0]).unwrap()
        );
        assert_eq!(
            g.compose(&t2, &t).unwrap(),
            g.triple(vec![1, 0], square, vec![1, 1]).unwrap()
        );

        // (0, g, 1) -t-> (1, g·g·1, 0) = (1, g², 0) -t'-> (1, g·(g²)²·1, 0) = (1, g², 0)
        let x = el(&b, 0, "g", 1);
        let sigma = g.realize(&t).unwrap();
        let sigma2 = g.realize(&t2).unwrap();
        assert_eq!(sigma.apply(x), el(&b, 1, "g^2", 0));
        assert_eq!(sigma2.apply(sigma.apply(x)), el(&b, 1, "g^2", 0));
        assert_eq!(g.realize(&g.compose(&t, &t2).unwrap()).unwrap(), sigma.then(&sigma2));
    }

    #[test]
    fn inverses() {
        let b = construct_brandt(&z_n_0(2), 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        assert_eq!(&g.invert(g.identity()).unwrap(), g.identity());
        let t = g.triple(vec![0, 1], vec![0, 1, 2], vec![1, 0]).unwrap();
        assert_eq!(g.invert(&t).unwrap(), t);

        let m = matrix_units(2).unwrap();
        let gm = TripleGroup::new(&m, &Budget::default()).unwrap();
        let swap = gm.triple(vec![1, 0], vec![0, 1], vec![0, 0]).unwrap();
        assert_eq!(gm.invert(&swap).unwrap(), swap);
    }

    #[test]
    fn kernels() {
        let b = construct_brandt(&z_n_0(2), 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        let kernel = g.kernel();
        let expected = vec![
            g.triple(vec![0, 1], vec![0, 1, 2], vec![0, 0]).unwrap(),
            g.triple(vec![0, 1], vec![0, 1, 2], vec![1, 1]).unwrap(),
        ];
        assert_eq!(kernel, expected);
        for k in &kernel {
            assert!(g.is_in_kernel(k).unwrap());
            assert!(g.realize(k).unwrap().is_identity());
        }
        let twist = g.triple(vec![0, 1], vec![0, 1, 2], vec![1, 0]).unwrap();
        assert!(!g.is_in_kernel(&twist).unwrap());

        for lambda in 1..=3 {
            let m = matrix_units(lambda).unwrap();
            let gm = TripleGroup::new(&m, &Budget::default()).unwrap();
            assert_eq!(gm.kernel(), vec![gm.identity().clone()]);
        }
    }

    #[test]
    fn normalization() {
        let b = construct_brandt(&z_n_0(2), 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        assert_eq!(&g.normalize(g.identity()).unwrap(), g.identity());
        let gg = g.triple(vec![0, 1], vec![0, 1, 2], vec![1, 1]).unwrap();
        assert_eq!(&g.normalize(&gg).unwrap(), g.identity());
        let t = g.triple(vec![1, 0], vec![0, 1, 2], vec![1, 0]).unwrap();
        let n = g.normalize(&t).unwrap();
        assert!(g.is_normalized(&n));
        assert_eq!(g.normalize(&n).unwrap(), n);
        assert_eq!(g.realize(&n).unwrap(), g.realize(&t).unwrap());
    }

    #[test]
    fn group_orders() {
        for (lambda, expected) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
            let m = matrix_units(lambda).unwrap();
            assert_eq!(aut_group_order(&m, &Budget::default()).unwrap(), expected);
        }
        let z2 = FiniteSemigroup::cyclic_group(2).unwrap();
        let b = crate::brandt::brandt_semigroup_of_group(&z2, 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        assert_eq!(g.triple_group_order(), 8);
        assert_eq!(g.kernel_order(), 2);
        assert_eq!(g.aut_group_order(), 4);
        assert_eq!(g.enumerate_normalized().unwrap().len(), 4);
        assert_eq!(g.enumerate_all().unwrap().len(), 8);

        // λ = 1: Aut(Z4^0) = {id, g ↦ g³}
        let b = construct_brandt(&z_n_0(4), 1).unwrap();
        assert_eq!(aut_group_order(&b, &Budget::default()).unwrap(), 2);
    }

    #[test]
    fn rejects_invalid_triples() {
        let b = construct_brandt(&z_n_0(2), 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        assert!(matches!(
            g.triple(vec![0, 0], vec![0, 1, 2], vec![0, 0]),
            Err(Error::InvalidTriple(_))
        ));
        assert!(matches!(
            g.triple(vec![0, 1], vec![1, 0, 2], vec![0, 0]),
            Err(Error::InvalidTriple(_))
        ));
        assert!(matches!(
            g.triple(vec![0, 1], vec![0, 1, 2], vec![2, 0]),
            Err(Error::InvalidTriple(_))
        ));
        assert!(matches!(
            g.triple(vec![0, 1, 2], vec![0, 1, 2], vec![0, 0]),
            Err(Error::MismatchedBase(_))
        ));

        let other = construct_brandt(&z_n_0(2), 3).unwrap();
        let g3 = TripleGroup::new(&other, &Budget::default()).unwrap();
        assert!(matches!(
            g.compose(g3.identity(), g.identity()),
            Err(Error::MismatchedBase(_))
        ));
    }

    #[test]
    fn zero_semigroup_has_no_triples() {
        let zs = FiniteSemigroup::zero_semigroup(3).unwrap();
        let b = BrandtSemigroup::over_semigroup_with_zero(&zs, 2, 6).unwrap();
        assert!(matches!(
            TripleGroup::new(&b, &Budget::default()),
            Err(Error::NotMonoidWithZero(_))
        ));
    }

    #[test]
    fn triple_documents() {
        let b = construct_brandt(&z_n_0(2), 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        let t = g.triple(vec![1, 0], vec![0, 1, 2], vec![1, 0]).unwrap();
        let doc = g.to_doc(&t);
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"phi":[1,0],"h":[0,1,2],"u":["g","1"]}"#
        );
        assert_eq!(g.from_doc(&doc).unwrap(), t);
        let bad = TripleDoc {
            u: vec!["x".into(), "1".into()],
            ..doc
        };
        assert!(g.from_doc(&bad).is_err());
    }

    #[test]
    fn words() {
        assert_eq!(unit_words(&[0, 1], 0), vec![Vec::<usize>::new()]);
        assert_eq!(
            unit_words(&[0, 1], 2),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
    }
}
