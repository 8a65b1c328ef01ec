//! Brute-force isomorphism search between finite hyperstructures.
//!
//! An isomorphism here is the strict notion: a bijection fixing zero and
//! one that carries both tables over exactly (f(x+y) = f(x)+f(y) as sets,
//! f(x·y) = f(x)·f(y)). The search permutes the elements outside {0, 1},
//! so carriers are capped at 8 elements (≤ 6! candidate maps).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hyper::finite::FiniteHyperstructure;

const MAX_CARRIER: usize = 8;

/// Find an isomorphism h1 → h2, returned as label pairs sorted by the
/// h1 carrier order, or `None` if the structures are not isomorphic.
pub fn iso_search(
    h1: &FiniteHyperstructure,
    h2: &FiniteHyperstructure,
) -> Result<Option<Vec<(String, String)>>> {
    for h in [h1, h2] {
        if h.size() > MAX_CARRIER {
            return Err(Error::CarrierTooLarge {
                size: h.size(),
                max: MAX_CARRIER,
            });
        }
    }
    if h1.size() != h2.size() {
        return Ok(None);
    }
    let n = h1.size();

    let free1: Vec<usize> = (0..n)
        .filter(|&i| i != h1.zero_index() && i != h1.one_index())
        .collect();
    let free2: Vec<usize> = (0..n)
        .filter(|&i| i != h2.zero_index() && i != h2.one_index())
        .collect();

    let mut map = vec![usize::MAX; n];
    map[h1.zero_index()] = h2.zero_index();
    map[h1.one_index()] = h2.one_index();

    let mut perm: Vec<usize> = free2.clone();
    if try_permutations(h1, h2, &free1, &mut perm, 0, &mut map) {
        let pairs = (0..n)
            .map(|i| (h1.label(i).to_string(), h2.label(map[i]).to_string()))
            .collect();
        return Ok(Some(pairs));
    }
    Ok(None)
}

fn try_permutations(
    h1: &FiniteHyperstructure,
    h2: &FiniteHyperstructure,
    free1: &[usize],
    perm: &mut Vec<usize>,
    depth: usize,
    map: &mut Vec<usize>,
) -> bool {
    if depth == free1.len() {
        return preserves_tables(h1, h2, map);
    }
    for k in depth..perm.len() {
        perm.swap(depth, k);
        map[free1[depth]] = perm[depth];
        if try_permutations(h1, h2, free1, perm, depth + 1, map) {
            return true;
        }
        perm.swap(depth, k);
    }
    map[free1[depth]] = usize::MAX;
    false
}

fn preserves_tables(
    h1: &FiniteHyperstructure,
    h2: &FiniteHyperstructure,
    map: &[usize],
) -> bool {
    let n = h1.size();
    for x in 0..n {
        for y in 0..n {
            if map[h1.mul(x, y)] != h2.mul(map[x], map[y]) {
                return false;
            }
            let image: BTreeSet<usize> = h1.add(x, y).iter().map(|&w| map[w]).collect();
            if &image != h2.add(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}
