//! Quotient hyperrings A/G: the orbits of a unit subgroup G ⊆ (Z/n)^×
//! acting multiplicatively on Z/n, with coset addition
//! xG + yG = { zG | z = xa + yb for some a, b ∈ G }.
//!
//! For prime n this is the field F_n; with G the full unit group and
//! |F_n| ≥ 3 the quotient is the Krasner hyperfield.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::hyper::finite::FiniteHyperstructure;

/// Orbit label: sorted decimal representatives joined with `.`
/// (the orbit {1,3} in Z/4 is `1.3`).
fn orbit_label(orbit: &BTreeSet<u64>) -> String {
    orbit
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(".")
}

/// Build the quotient hyperring (Z/n)/G from the subgroup of units
/// generated by `unit_gens` (the empty list generates the trivial
/// subgroup {1}). A generator that is not a unit modulo n is a domain
/// error. The result carries no axiom guarantees of its own — callers
/// re-verify with `check_hyperring`.
pub fn quotient_hyperring(modulus: u64, unit_gens: &[u64]) -> Result<FiniteHyperstructure> {
    if modulus < 2 {
        return Err(Error::InvalidParameter {
            reason: format!("modulus must be at least 2, got {modulus}"),
        });
    }
    let n = modulus;
    for &g in unit_gens {
        if (g % n).gcd(&n) != 1 {
            return Err(Error::NotAUnit {
                residue: g % n,
                modulus: n,
            });
        }
    }

    // Multiplicative closure of {1} ∪ generators: a subgroup, since a
    // finite cancellative submonoid of the unit group is closed under
    // inverses (powers of each element cycle back to 1).
    let mut group: BTreeSet<u64> = BTreeSet::from([1 % n]);
    let mut frontier: Vec<u64> = unit_gens.iter().map(|&g| g % n).collect();
    while let Some(g) = frontier.pop() {
        if group.insert(g) {
            frontier.extend(group.iter().map(|&h| (g * h) % n).collect::<Vec<_>>());
        }
    }

    // Orbits of G on Z/n; orbit_of[r] = index into `orbits`.
    let mut orbit_of: Vec<Option<usize>> = vec![None; n as usize];
    let mut orbits: Vec<BTreeSet<u64>> = Vec::new();
    for r in 0..n {
        if orbit_of[r as usize].is_some() {
            continue;
        }
        let orbit: BTreeSet<u64> = group.iter().map(|&g| (r * g) % n).collect();
        let id = orbits.len();
        for &m in &orbit {
            orbit_of[m as usize] = Some(id);
        }
        orbits.push(orbit);
    }
    let orbit_of: Vec<usize> = orbit_of.into_iter().map(|o| o.expect("covered")).collect();
    let labels: Vec<String> = orbits.iter().map(orbit_label).collect();
    let rep: Vec<u64> = orbits.iter().map(|o| *o.iter().next().expect("nonempty")).collect();

    let mut add: BTreeMap<(String, String), BTreeSet<String>> = BTreeMap::new();
    let mut mul: BTreeMap<(String, String), String> = BTreeMap::new();
    for (i, x) in rep.iter().enumerate() {
        for (j, y) in rep.iter().enumerate() {
            let mut sum = BTreeSet::new();
            for &a in &group {
                for &b in &group {
                    let z = (x * a + y * b) % n;
                    sum.insert(labels[orbit_of[z as usize]].clone());
                }
            }
            add.insert((labels[i].clone(), labels[j].clone()), sum);
            let prod = (x * y) % n;
            mul.insert(
                (labels[i].clone(), labels[j].clone()),
                labels[orbit_of[prod as usize]].clone(),
            );
        }
    }

    let zero = labels[orbit_of[0]].clone();
    let one = labels[orbit_of[1 % n as usize]].clone();
    FiniteHyperstructure::new(labels, &zero, &one, &add, &mul)
}

/// All units of Z/n (for `quotient --units full`).
pub fn full_unit_group(modulus: u64) -> Vec<u64> {
    (1..modulus).filter(|g| g.gcd(&modulus) == 1).collect()
}
