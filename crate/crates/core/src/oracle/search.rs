//! Backtracking enumeration of the automorphisms of a finite semigroup.
//!
//! The search only reads the Cayley table. Images are assigned in the order
//! maximal idempotents, remaining idempotents, then everything else by index.
//! Every assignment is propagated through products with all previously
//! assigned elements: if `x ↦ y` and `z ↦ w` then `xz ↦ yw` is forced.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, SemigroupMap};

const UNSET: usize = usize::MAX;

/// All automorphisms of `s`, sorted by image array.
pub fn enumerate_automorphisms(s: &FiniteSemigroup, budget: &Budget) -> Result<Vec<SemigroupMap>> {
    if s.len() > budget.max_search_elements {
        return Err(Error::BudgetExceeded {
            what: "automorphism search (elements)",
            needed: s.len() as u128,
            budget: budget.max_search_elements as u128,
        });
    }
    let mut search = Search::new(s);
    search.run();
    let mut found = search.found;
    found.sort_unstable();
    found
        .into_iter()
        .map(|images| {
            let map = SemigroupMap::endo(s, images)?;
            debug_assert!(map.is_automorphism());
            Ok(map)
        })
        .collect()
}

/// Number of automorphisms of `s`.
pub fn count_automorphisms(s: &FiniteSemigroup, budget: &Budget) -> Result<usize> {
    enumerate_automorphisms(s, budget).map(|maps| maps.len())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Class {
    Plain,
    Idempotent,
    MaximalIdempotent,
}

struct Search<'a> {
    s: &'a FiniteSemigroup,
    class: Vec<Class>,
    idempotents: Vec<usize>,
    order: Vec<usize>,
    image: Vec<usize>,
    preimage: Vec<usize>,
    trail: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(s: &'a FiniteSemigroup) -> Self {
        let n = s.len();
        let idempotents = s.idempotents();
        let maximal = s.maximal_idempotents();
        let mut class = vec![Class::Plain; n];
        for &e in &idempotents {
            class[e] = Class::Idempotent;
        }
        for &e in &maximal {
            class[e] = Class::MaximalIdempotent;
        }
        let mut order = maximal.clone();
        order.extend(idempotents.iter().filter(|e| !maximal.contains(e)));
        order.extend((0..n).filter(|&x| class[x] == Class::Plain));
        Search {
            s,
            class,
            idempotents,
            order,
            image: vec![UNSET; n],
            preimage: vec![UNSET; n],
            trail: Vec::with_capacity(n),
            found: Vec::new(),
        }
    }

    fn run(&mut self) {
        for fixed in [self.s.zero(), self.s.identity()].into_iter().flatten() {
            if self.image[fixed] == UNSET && !self.assign(fixed, fixed) {
                return;
            }
        }
        self.descend();
    }

    fn descend(&mut self) {
        let Some(&x) = self.order.iter().find(|&&x| self.image[x] == UNSET) else {
            self.found.push(self.image.clone());
            return;
        };
        for y in 0..self.s.len() {
            if self.preimage[y] != UNSET || self.class[x] != self.class[y] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) {
                self.descend();
            }
            self.undo(mark);
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail longer than mark");
            self.preimage[self.image[x]] = UNSET;
            self.image[x] = UNSET;
        }
    }

    /// Assigns `x ↦ y` and everything it forces. On failure the trail may
    /// hold partial assignments; callers undo to their mark.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if self.image[x] != UNSET {
                if self.image[x] != y {
                    return false;
                }
                continue;
            }
            if self.preimage[y] != UNSET || !self.compatible(x, y) {
                return false;
            }
            self.image[x] = y;
            self.preimage[y] = x;
            self.trail.push(x);
            for &z in &self.trail {
                let w = self.image[z];
                queue.push((self.s.mul(x, z), self.s.mul(y, w)));
                queue.push((self.s.mul(z, x), self.s.mul(w, y)));
            }
        }
        true
    }

    fn compatible(&self, x: usize, y: usize) -> bool {
        if self.class[x] != self.class[y] {
            return false;
        }
        if self.class[x] == Class::Plain {
            return true;
        }
        // natural order between x and every assigned idempotent is preserved
        self.idempotents.iter().all(|&e| {
            let f = self.image[e];
            f == UNSET
                || (self.s.leq_unchecked(x, e) == self.s.leq_unchecked(y, f)
                    && self.s.leq_unchecked(e, x) == self.s.leq_unchecked(f, y))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::is_automorphism;
    use itertools::Itertools;

    /// Plain permutation filter, for cross-checking on tiny inputs.
    fn naive(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
        (0..s.len())
            .permutations(s.len())
            .filter(|p| is_automorphism(s, p))
            .collect()
    }

    fn images(maps: Vec<SemigroupMap>) -> Vec<Vec<usize>> {
        maps.into_iter().map(SemigroupMap::into_images).collect()
    }

    #[test]
    fn trivial_semigroup_has_only_identity() {
        let s = FiniteSemigroup::trivial();
        assert_eq!(
            images(enumerate_automorphisms(&s, &Budget::default()).unwrap()),
            vec![vec![0]]
        );
    }

    #[test]
    fn z2_with_zero_is_rigid() {
        let s = FiniteSemigroup::cyclic_group_with_zero(2).unwrap();
        assert_eq!(
            images(enumerate_automorphisms(&s, &Budget::default()).unwrap()),
            vec![vec![0, 1, 2]]
        );
    }

    #[test]
    fn matches_naive_filter_on_small_tables() {
        let cases = [
            FiniteSemigroup::cyclic_group(4).unwrap(),
            FiniteSemigroup::cyclic_group_with_zero(5).unwrap(),
            FiniteSemigroup::zero_semigroup(5).unwrap(),
            FiniteSemigroup::zero_semigroup(4).unwrap().adjoin_identity(),
            crate::brandt::matrix_units(2).unwrap().carrier().clone(),
            crate::brandt::construct_brandt(&FiniteSemigroup::cyclic_group_with_zero(2).unwrap(), 2)
                .unwrap()
                .carrier()
                .clone(),
        ];
        for s in &cases {
            let got = images(enumerate_automorphisms(s, &Budget::default()).unwrap());
            assert_eq!(got, naive(s), "{s:?}");
        }
    }

    #[test]
    fn left_zero_band_is_fully_symmetric() {
        // x*y = x: every permutation is an automorphism
        let labels = (0..4).map(|i| i.to_string()).collect();
        let s = FiniteSemigroup::from_fn(labels, |x, _| x).unwrap();
        assert_eq!(enumerate_automorphisms(&s, &Budget::default()).unwrap().len(), 24);
    }

    #[test]
    fn budget_is_enforced() {
        let s = FiniteSemigroup::zero_semigroup(5).unwrap();
        let budget = Budget {
            max_search_elements: 4,
            ..Budget::default()
        };
        assert!(matches!(
            enumerate_automorphisms(&s, &budget),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
