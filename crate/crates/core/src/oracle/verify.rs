//! End-to-end comparisons between the triple description of
//! Aut(B⁰_λ(S)) and the backtracking search.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::brandt::{BrandtElement, BrandtSemigroup};
use crate::budget::{factorial, Budget};
use crate::error::{Error, Result};
use crate::semigroup::{is_automorphism, FiniteSemigroup, SemigroupMap};
use crate::triples::TripleGroup;

use super::decompose::decompose_automorphism;
use super::report::{AutGroupReport, Check, NonAutomorphism, Subject, TrialReport, Witness, ZeroFixingReport};
use super::search::enumerate_automorphisms;

/// Seed used by randomized checks unless one is given.
pub const DEFAULT_SEED: u64 = 1729;

fn labels_of(ext: &BrandtSemigroup, images: &[usize]) -> Vec<String> {
    images.iter().map(|&x| ext.carrier().label(x).to_string()).collect()
}

/// Whether `sigma` maps the diagonal units `(α, 1, α)` onto themselves.
pub fn permutes_diagonal_units(ext: &BrandtSemigroup, sigma: &SemigroupMap) -> bool {
    let Some(units) = (0..ext.lambda())
        .map(|a| ext.diagonal_unit(a))
        .collect::<Option<BTreeSet<_>>>()
    else {
        return false;
    };
    units.iter().map(|&x| sigma.apply(x)).collect::<BTreeSet<_>>() == units
}

/// Builds B⁰_λ(S) for a monoid with zero and compares the realized
/// normalized triples with the search result as sets of maps.
pub fn verify_triple_parametrization(base: &FiniteSemigroup, lambda: usize, budget: &Budget) -> Result<AutGroupReport> {
    let ext = BrandtSemigroup::new(base, lambda, budget.max_lambda)?;
    verify_extension(&ext, budget)
}

/// Same comparison for the Brandt semigroup B_λ(G) of a group.
pub fn verify_brandt_semigroup_of_group(
    group: &FiniteSemigroup,
    lambda: usize,
    budget: &Budget,
) -> Result<AutGroupReport> {
    let ext = BrandtSemigroup::of_group(group, lambda, budget.max_lambda)?;
    verify_extension(&ext, budget)
}

/// Set comparison on an already constructed extension, plus the
/// decomposition roundtrips in both directions and preservation of the
/// maximal idempotents by every automorphism found.
pub fn verify_extension(ext: &BrandtSemigroup, budget: &Budget) -> Result<AutGroupReport> {
    let group = TripleGroup::new(ext, budget)?;
    let normalized = group.enumerate_normalized()?;
    let realized = normalized
        .iter()
        .map(|t| group.realize(t))
        .collect::<Result<Vec<_>>>()?;
    let oracle = enumerate_automorphisms(ext.carrier(), budget)?;

    let triple_side: BTreeSet<&[usize]> = realized.iter().map(SemigroupMap::images).collect();
    let oracle_side: BTreeSet<&[usize]> = oracle.iter().map(SemigroupMap::images).collect();
    let mut witnesses = Vec::new();
    if let Some(x) = oracle_side.difference(&triple_side).next() {
        witnesses.push(Witness {
            side: "oracle-only",
            images: labels_of(ext, x),
        });
    }
    if let Some(x) = triple_side.difference(&oracle_side).next() {
        witnesses.push(Witness {
            side: "triples-only",
            images: labels_of(ext, x),
        });
    }

    let maximal = oracle.iter().all(|s| permutes_diagonal_units(ext, s));
    let mut decompose_ok = true;
    for sigma in &oracle {
        match decompose_automorphism(&group, sigma) {
            Ok(t) => decompose_ok &= group.is_normalized(&t) && group.realize(&t)? == *sigma,
            Err(e) if e.is_violation() => decompose_ok = false,
            Err(e) => return Err(e),
        }
    }
    let mut realize_ok = true;
    for (t, sigma) in normalized.iter().zip(&realized) {
        match decompose_automorphism(&group, sigma) {
            Ok(back) => realize_ok &= back == *t,
            Err(e) if e.is_violation() => realize_ok = false,
            Err(e) => return Err(e),
        }
    }

    Ok(AutGroupReport {
        subject: Subject::of(ext),
        oracle_order: oracle_side.len() as u128,
        structural_order: triple_side.len() as u128,
        formula_order: group.aut_group_order(),
        matched: triple_side == oracle_side,
        kernel_size: group.kernel_order(),
        triple_group_order: group.triple_group_order(),
        checks: vec![
            Check {
                name: "normalized-injective",
                passed: triple_side.len() == normalized.len(),
            },
            Check {
                name: "maximal-idempotents",
                passed: maximal,
            },
            Check {
                name: "decompose-realize",
                passed: decompose_ok,
            },
            Check {
                name: "realize-decompose",
                passed: realize_ok,
            },
        ],
        witnesses,
        seed: None,
        elapsed_ms: None,
    })
}

/// Aut(B_λ) by search: λ! maps, each of the form `(α, β) ↦ ((α)φ, (β)φ)`.
pub fn verify_matrix_unit_automorphisms(lambda: usize, budget: &Budget) -> Result<AutGroupReport> {
    let ext = BrandtSemigroup::matrix_units(lambda, budget.max_lambda)?;
    let oracle = enumerate_automorphisms(ext.carrier(), budget)?;
    let one = ext.base().identity().expect("I^0 has an identity");

    let induced: BTreeSet<Vec<usize>> = (0..lambda)
        .permutations(lambda)
        .map(|phi| {
            (0..ext.len())
                .map(|x| match ext.decode(x).expect("carrier index") {
                    BrandtElement::Zero => 0,
                    BrandtElement::Triple { row, col, .. } => ext.encode(phi[row], one, phi[col]).expect("in range"),
                })
                .collect()
        })
        .collect();
    let oracle_side: BTreeSet<Vec<usize>> = oracle.iter().map(|s| s.images().to_vec()).collect();

    // every found automorphism is determined by where it sends the diagonal
    let permutation_form = oracle.iter().all(|sigma| {
        let phi: Vec<usize> = (0..lambda)
            .map(|a| match ext.decode(sigma.apply(ext.diagonal_unit(a).unwrap())) {
                Ok(BrandtElement::Triple { row, col, .. }) if row == col => row,
                _ => usize::MAX,
            })
            .collect();
        phi.iter().all(|&p| p < lambda)
            && (0..ext.len()).all(|x| match ext.decode(x).expect("carrier index") {
                BrandtElement::Zero => sigma.apply(x) == 0,
                BrandtElement::Triple { row, col, .. } => {
                    ext.encode(phi[row], one, phi[col]).ok() == Some(sigma.apply(x))
                }
            })
    });

    let mut witnesses = Vec::new();
    if let Some(x) = oracle_side.difference(&induced).next() {
        witnesses.push(Witness {
            side: "oracle-only",
            images: labels_of(&ext, x),
        });
    }
    if let Some(x) = induced.difference(&oracle_side).next() {
        witnesses.push(Witness {
            side: "permutations-only",
            images: labels_of(&ext, x),
        });
    }
    let lambda_factorial = factorial(lambda);
    Ok(AutGroupReport {
        subject: Subject::of(&ext),
        oracle_order: oracle_side.len() as u128,
        structural_order: induced.len() as u128,
        formula_order: lambda_factorial,
        matched: induced == oracle_side,
        kernel_size: 1,
        triple_group_order: lambda_factorial,
        checks: vec![Check {
            name: "permutation-form",
            passed: permutation_form,
        }],
        witnesses,
        seed: None,
        elapsed_ms: None,
    })
}

/// Iterates every bijection of the carrier fixing 0 and counts the
/// automorphisms among them, keeping the first failure as a witness.
pub fn zero_fixing_census(ext: &BrandtSemigroup, budget: &Budget) -> Result<ZeroFixingReport> {
    let carrier = ext.carrier();
    let n = carrier.len();
    let total = factorial(n - 1);
    budget.check("zero-fixing bijections", total, budget.max_bijections)?;

    let mut automorphisms = 0u128;
    let mut witness = None;
    let mut images = vec![0; n];
    for perm in (1..n).permutations(n - 1) {
        images[1..].copy_from_slice(&perm);
        if is_automorphism(carrier, &images) {
            automorphisms += 1;
        } else if witness.is_none() {
            let (a, b) = (0..n)
                .cartesian_product(0..n)
                .find(|&(a, b)| images[carrier.mul(a, b)] != carrier.mul(images[a], images[b]))
                .expect("a bijection that is not an automorphism breaks some product");
            witness = Some(NonAutomorphism {
                images: labels_of(ext, &images),
                left: carrier.label(a).to_string(),
                right: carrier.label(b).to_string(),
            });
        }
    }
    Ok(ZeroFixingReport {
        subject: Subject::of(ext),
        bijections: total,
        automorphisms,
        all_automorphisms: automorphisms == total,
        witness,
        elapsed_ms: None,
    })
}

/// Over the zero semigroup of cardinality `k ≥ 3` and `λ ≥ 2`, every
/// zero-fixing bijection of B⁰_λ(S) is an automorphism.
pub fn verify_zero_semigroup_bijections(k: usize, lambda: usize, budget: &Budget) -> Result<ZeroFixingReport> {
    if k < 3 {
        return Err(Error::BadCardinality {
            what: "zero semigroup",
            value: k,
            min: 3,
        });
    }
    if lambda < 2 {
        return Err(Error::BadCardinality {
            what: "lambda",
            value: lambda,
            min: 2,
        });
    }
    let base = FiniteSemigroup::zero_semigroup(k)?;
    let ext = BrandtSemigroup::over_semigroup_with_zero(&base, lambda, budget.max_lambda)?;
    zero_fixing_census(&ext, budget)
}

/// The same census over a monoid with zero, where some zero-fixing
/// bijection fails.
pub fn zero_fixing_contrast(base: &FiniteSemigroup, lambda: usize, budget: &Budget) -> Result<ZeroFixingReport> {
    let ext = BrandtSemigroup::new(base, lambda, budget.max_lambda)?;
    zero_fixing_census(&ext, budget)
}

/// Realization of a product equals the composition of realizations, on
/// `trials` random pairs.
pub fn verify_realization_homomorphism(group: &TripleGroup<'_>, trials: usize, seed: u64) -> Result<TrialReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..trials {
        let t = group.random_triple(&mut rng);
        let t2 = group.random_triple(&mut rng);
        let left = group.realize(&group.compose(&t, &t2)?)?;
        let right = group.realize(&t)?.then(&group.realize(&t2)?);
        if left.images() != right.images() {
            failures += 1;
        }
    }
    Ok(TrialReport {
        subject: Subject::of(group.extension()),
        property: "realize(t*t') = realize(t) then realize(t')",
        trials,
        failures,
        seed,
    })
}

/// Associativity, two-sided identity and two-sided inverses on random
/// triples.
pub fn verify_group_axioms(group: &TripleGroup<'_>, trials: usize, seed: u64) -> Result<TrialReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = group.identity();
    let mut failures = 0;
    for _ in 0..trials {
        let a = group.random_triple(&mut rng);
        let b = group.random_triple(&mut rng);
        let c = group.random_triple(&mut rng);
        let assoc = group.compose(&group.compose(&a, &b)?, &c)? == group.compose(&a, &group.compose(&b, &c)?)?;
        let unit = group.compose(&a, id)? == a && group.compose(id, &a)? == a;
        let inv = group.invert(&a)?;
        let inverse = group.compose(&a, &inv)? == *id && group.compose(&inv, &a)? == *id;
        if !(assoc && unit && inverse) {
            failures += 1;
        }
    }
    Ok(TrialReport {
        subject: Subject::of(group.extension()),
        property: "triple group axioms",
        trials,
        failures,
        seed,
    })
}

/// Kernel normality and exactness, surjectivity of realization onto the
/// searched automorphisms, and the order of the quotient. Uses every triple
/// when the group fits in the budget, otherwise `trials` random ones.
pub fn verify_quotient_structure(
    ext: &BrandtSemigroup,
    budget: &Budget,
    trials: usize,
    seed: u64,
) -> Result<AutGroupReport> {
    let group = TripleGroup::new(ext, budget)?;
    let oracle = enumerate_automorphisms(ext.carrier(), budget)?;
    let oracle_side: BTreeSet<&[usize]> = oracle.iter().map(SemigroupMap::images).collect();

    let exhaustive = group.triple_group_order() <= budget.max_triples;
    let triples = if exhaustive {
        group.enumerate_all()?
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..trials).map(|_| group.random_triple(&mut rng)).collect()
    };

    let kernel = group.kernel();
    let mut kernel_members = true;
    for k in &kernel {
        kernel_members &= group.is_in_kernel(k)?;
    }
    let kernel_size_ok = kernel_members && kernel.len() as u128 == group.kernel_order();

    let mut realized = BTreeSet::new();
    let mut kernel_exact = true;
    let mut kernel_normal = true;
    for t in &triples {
        let sigma = group.realize(t)?;
        kernel_exact &= group.is_in_kernel(t)? == sigma.is_identity();
        let t_inv = group.invert(t)?;
        for k in &kernel {
            let conjugate = group.compose(&group.compose(&t_inv, k)?, t)?;
            kernel_normal &= group.is_in_kernel(&conjugate)?;
        }
        realized.insert(sigma.into_images());
    }
    let realized_side: BTreeSet<&[usize]> = realized.iter().map(Vec::as_slice).collect();

    let homomorphism = verify_realization_homomorphism(&group, trials, seed)?;
    let axioms = verify_group_axioms(&group, trials, seed)?;

    let mut witnesses = Vec::new();
    if exhaustive {
        if let Some(x) = oracle_side.difference(&realized_side).next() {
            witnesses.push(Witness {
                side: "oracle-only",
                images: labels_of(ext, x),
            });
        }
    }
    if let Some(x) = realized_side.difference(&oracle_side).next() {
        witnesses.push(Witness {
            side: "triples-only",
            images: labels_of(ext, x),
        });
    }
    let matched = if exhaustive {
        realized_side == oracle_side
    } else {
        realized_side.is_subset(&oracle_side)
    };
    Ok(AutGroupReport {
        subject: Subject::of(ext),
        oracle_order: oracle_side.len() as u128,
        structural_order: if exhaustive {
            realized_side.len() as u128
        } else {
            group.aut_group_order()
        },
        formula_order: group.triple_group_order() / kernel.len() as u128,
        matched,
        kernel_size: kernel.len() as u128,
        triple_group_order: group.triple_group_order(),
        checks: vec![
            Check {
                name: "kernel-size",
                passed: kernel_size_ok,
            },
            Check {
                name: "kernel-exact",
                passed: kernel_exact,
            },
            Check {
                name: "kernel-normal",
                passed: kernel_normal,
            },
            Check {
                name: "homomorphism",
                passed: homomorphism.passed(),
            },
            Check {
                name: "group-axioms",
                passed: axioms.passed(),
            },
        ],
        witnesses,
        seed: Some(seed),
        elapsed_ms: None,
    })
}
