//! Reading a triple off an automorphism of B⁰_λ(S).
//!
//! With pivot coordinate 0: the images of the diagonal units `(α, 1, α)`
//! give φ, the middles of the images of `(β, 1, 0)` give u, and the middles
//! of the images of `(0, s, 0)` give h. The triple is then re-realized and
//! compared against the input on every carrier element.

use crate::brandt::BrandtElement;
use crate::error::{Error, Result};
use crate::semigroup::SemigroupMap;
use crate::triples::{AutTriple, TripleGroup};

fn mismatch(msg: impl Into<String>) -> Error {
    Error::DecompositionMismatch(msg.into())
}

/// The normalized triple (`(0)u = 1_S`) realizing `sigma`.
pub fn decompose_automorphism(group: &TripleGroup<'_>, sigma: &SemigroupMap) -> Result<AutTriple> {
    let ext = group.extension();
    let base = ext.base();
    let lambda = ext.lambda();
    if sigma.images().len() != ext.len() || !sigma.is_automorphism() {
        return Err(Error::NotAnAutomorphism);
    }
    let one = base.identity().expect("triple groups have a monoid base");
    let zero = base.zero().expect("triple groups have a monoid base");
    let image = |row: usize, middle: usize, col: usize| -> Result<BrandtElement> {
        let x = ext.encode(row, middle, col)?;
        ext.decode(sigma.apply(x))
    };

    // maximal idempotents are permuted
    let mut phi = Vec::with_capacity(lambda);
    for alpha in 0..lambda {
        match image(alpha, one, alpha)? {
            BrandtElement::Triple { row, middle, col } if row == col && middle == one => phi.push(row),
            other => {
                return Err(mismatch(format!(
                    "diagonal unit ({alpha}|1|{alpha}) maps to {}, not a diagonal unit",
                    ext.render(other)
                )))
            }
        }
    }
    let pivot = phi[0];

    let mut u = Vec::with_capacity(lambda);
    for (beta, &target) in phi.iter().enumerate() {
        match image(beta, one, 0)? {
            BrandtElement::Triple { row, middle, col } if row == target && col == pivot => u.push(middle),
            other => {
                return Err(mismatch(format!(
                    "({beta}|1|0) maps to {}, expected row {} and column {pivot}",
                    ext.render(other),
                    target
                )))
            }
        }
    }
    let u0_inv = group
        .units()
        .inverse(u[0])
        .ok_or_else(|| mismatch("(0)u is not a unit"))?;

    let mut h = vec![zero; base.len()];
    for &s in ext.nonzero_base_elements() {
        match image(0, s, 0)? {
            BrandtElement::Triple { row, middle, col } if row == pivot && col == pivot => {
                h[s] = base.mul(base.mul(u0_inv, middle), u[0]);
            }
            other => {
                return Err(mismatch(format!(
                    "(0|{}|0) maps to {}, outside the pivot block",
                    base.label(s),
                    ext.render(other)
                )))
            }
        }
    }

    let t = group
        .triple(phi, h, u)
        .map_err(|e| mismatch(format!("extracted components are not a triple: {e}")))?;
    let realized = group.realize(&t)?;
    if realized.images() != sigma.images() {
        let x = (0..ext.len())
            .find(|&x| realized.apply(x) != sigma.apply(x))
            .expect("images differ somewhere");
        return Err(mismatch(format!(
            "triple sends {} to {}, automorphism sends it to {}",
            ext.carrier().label(x),
            ext.carrier().label(realized.apply(x)),
            ext.carrier().label(sigma.apply(x))
        )));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brandt::{construct_brandt, matrix_units};
    use crate::budget::Budget;
    use crate::oracle::enumerate_automorphisms;
    use crate::semigroup::FiniteSemigroup;

    #[test]
    fn identity_decomposes_to_identity() {
        let b = construct_brandt(&FiniteSemigroup::cyclic_group_with_zero(3).unwrap(), 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        let id = SemigroupMap::identity(b.carrier());
        assert_eq!(&decompose_automorphism(&g, &id).unwrap(), g.identity());
    }

    #[test]
    fn matrix_units_swap() {
        let b = matrix_units(2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        let auts = enumerate_automorphisms(b.carrier(), &Budget::default()).unwrap();
        assert_eq!(auts.len(), 2);
        let sigma = auts.iter().find(|s| !s.is_identity()).unwrap();
        let t = decompose_automorphism(&g, sigma).unwrap();
        assert_eq!(t, g.triple(vec![1, 0], vec![0, 1], vec![0, 0]).unwrap());
    }

    #[test]
    fn rejects_non_automorphisms() {
        let b = matrix_units(2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        let swap_two = SemigroupMap::endo(b.carrier(), vec![0, 2, 1, 3, 4]).unwrap();
        assert_eq!(decompose_automorphism(&g, &swap_two), Err(Error::NotAnAutomorphism));
    }

    #[test]
    fn roundtrips_through_realization() {
        let b = construct_brandt(&FiniteSemigroup::cyclic_group_with_zero(3).unwrap(), 2).unwrap();
        let g = TripleGroup::new(&b, &Budget::default()).unwrap();
        for t in g.enumerate_all().unwrap() {
            let sigma = g.realize(&t).unwrap();
            assert_eq!(decompose_automorphism(&g, &sigma).unwrap(), g.normalize(&t).unwrap());
        }
    }
}
