use std::collections::{BTreeSet, VecDeque};

use crate::semigroup::SemigroupMap;

/// Picks generators greedily from `maps` (a group of permutations): a map is
/// taken when it is not in the subgroup generated by the earlier picks.
/// Returns indices into `maps`.
pub fn greedy_generators(maps: &[SemigroupMap]) -> Vec<usize> {
    let Some(first) = maps.first() else {
        return Vec::new();
    };
    let identity: Vec<usize> = (0..first.images().len()).collect();
    let mut picked: Vec<usize> = Vec::new();
    let mut span: BTreeSet<Vec<usize>> = BTreeSet::from([identity]);
    for (i, m) in maps.iter().enumerate() {
        if span.contains(m.images()) {
            continue;
        }
        picked.push(i);
        span = closure(picked.iter().map(|&j| maps[j].images()).collect());
    }
    picked
}

fn closure(generators: Vec<&[usize]>) -> BTreeSet<Vec<usize>> {
    let n = generators.first().map_or(0, |g| g.len());
    let identity: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in &generators {
            let next: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}
