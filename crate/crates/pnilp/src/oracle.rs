//! Independent brute-force reference computations.
//!
//! Each function here deliberately takes the dumbest correct route — usually
//! a scan of the full subgroup inventory — so the production algorithms
//! (normal-closure cores, normalizer-grown Sylow subgroups, the commutator
//! form of the Frattini subgroup, kernel-based module splitting) can be
//! cross-checked against a genuinely different computation path.

use std::collections::HashSet;

use crate::arith::p_part;
use crate::group::Group;
use crate::modrep::{CyclicModule, Subspace};
use crate::structure::SubgroupInventory;

/// All subgroups of the inventory that are normal in `g`.
pub fn normal_subgroups(g: &Group, inventory: &SubgroupInventory) -> Vec<Group> {
    inventory
        .all
        .iter()
        .filter(|n| n.is_normal_in(g).expect("inventory members live inside g"))
        .cloned()
        .collect()
}

/// The largest normal subgroup of order coprime to p, by exhaustive scan.
/// Panics if the maximum fails to contain some other normal p'-subgroup,
/// since the join of normal p'-subgroups is again one.
pub fn o_p_prime_by_inventory(g: &Group, inventory: &SubgroupInventory, p: u64) -> Group {
    max_normal_with(g, inventory, |order| order % p != 0)
}

/// The largest normal p-subgroup, by exhaustive scan.
pub fn o_p_by_inventory(g: &Group, inventory: &SubgroupInventory, p: u64) -> Group {
    max_normal_with(g, inventory, |order| order == p_part(order, p))
}

fn max_normal_with(
    g: &Group,
    inventory: &SubgroupInventory,
    admissible: impl Fn(u64) -> bool,
) -> Group {
    let candidates: Vec<Group> = normal_subgroups(g, inventory)
        .into_iter()
        .filter(|n| admissible(n.order()))
        .collect();
    let best = candidates
        .iter()
        .max_by_key(|n| n.order())
        .expect("the trivial subgroup always qualifies")
        .clone();
    for other in &candidates {
        assert!(
            other.is_subgroup_of(&best),
            "admissible normal subgroups must share a unique maximum"
        );
    }
    best
}

/// Largest order among the p-subgroups of the inventory.
pub fn sylow_order_by_inventory(inventory: &SubgroupInventory, p: u64) -> u64 {
    inventory
        .all
        .iter()
        .map(Group::order)
        .filter(|&o| o == p_part(o, p))
        .max()
        .unwrap_or(1)
}

/// Frattini subgroup as the intersection of the maximal proper subgroups,
/// located purely by lattice comparisons.
pub fn frattini_by_maximal_intersection(g: &Group, inventory: &SubgroupInventory) -> Group {
    let proper: Vec<&Group> = inventory
        .all
        .iter()
        .filter(|h| h.order() < g.order())
        .collect();
    let maximal: Vec<&&Group> = proper
        .iter()
        .filter(|m| {
            !proper
                .iter()
                .any(|h| h.order() > m.order() && m.is_subgroup_of(h))
        })
        .collect();
    if maximal.is_empty() {
        return Group::trivial(g.degree());
    }
    let mut intersection: Vec<crate::perm::Permutation> = maximal[0].elements().to_vec();
    for m in &maximal[1..] {
        intersection.retain(|e| m.contains(e));
    }
    Group::from_closed_elements(g.degree(), intersection)
}

/// p-nilpotency by definition: some normal subgroup is a p-complement.
pub fn has_normal_p_complement(g: &Group, inventory: &SubgroupInventory, p: u64) -> bool {
    let complement_order = g.order() / p_part(g.order(), p);
    normal_subgroups(g, inventory)
        .iter()
        .any(|n| n.order() == complement_order)
}

/// Nilpotency by definition: every Sylow subgroup is normal.
pub fn is_nilpotent_by_normal_sylows(g: &Group, inventory: &SubgroupInventory) -> bool {
    crate::arith::primes_dividing(g.order()).into_iter().all(|p| {
        let part = p_part(g.order(), p);
        inventory
            .all
            .iter()
            .any(|h| h.order() == part && h.is_normal_in(g).unwrap())
    })
}

/// Simplicity oracle. For p ≤ 3 and dim ≤ 4 it enumerates every subspace and
/// checks that none but 0 and W is invariant; for larger cases it verifies
/// that every nonzero vector generates the whole module, which is equivalent.
pub fn is_simple_module(module: &CyclicModule) -> bool {
    let p = module.p();
    let dim = module.dim();
    if dim == 0 {
        return false;
    }
    if p <= 3 && dim <= 4 {
        let mut proper_invariant = 0;
        for subspace in all_subspaces(p, dim) {
            if subspace.dim() == 0 || subspace.dim() == dim {
                continue;
            }
            if subspace.is_invariant_under(module.action()) {
                proper_invariant += 1;
            }
        }
        proper_invariant == 0
    } else {
        every_vector_generates(module)
    }
}

fn all_vectors(p: u64, dim: usize) -> Vec<Vec<u64>> {
    let total = (p as usize).pow(dim as u32);
    (0..total)
        .map(|mut k| {
            let mut v = Vec::with_capacity(dim);
            for _ in 0..dim {
                v.push((k % p as usize) as u64);
                k /= p as usize;
            }
            v
        })
        .collect()
}

fn all_subspaces(p: u64, dim: usize) -> Vec<Subspace> {
    let vectors = all_vectors(p, dim);
    let mut seen: HashSet<Subspace> = HashSet::new();
    let zero = Subspace::from_spanning(p, dim, &[]);
    let mut frontier = vec![zero.clone()];
    seen.insert(zero);
    while let Some(space) = frontier.pop() {
        for v in &vectors[1..] {
            if space.contains(v) {
                continue;
            }
            let mut spanning = space.basis().to_vec();
            spanning.push(v.clone());
            let grown = Subspace::from_spanning(p, dim, &spanning);
            if seen.insert(grown.clone()) {
                frontier.push(grown);
            }
        }
    }
    seen.into_iter().collect()
}

fn every_vector_generates(module: &CyclicModule) -> bool {
    let p = module.p();
    let dim = module.dim();
    for v in &all_vectors(p, dim)[1..] {
        let mut spanning = vec![v.clone()];
        for _ in 1..dim {
            let next = module.action().mul_vec(spanning.last().unwrap());
            spanning.push(next);
        }
        if Subspace::from_spanning(p, dim, &spanning).dim() != dim {
            return false;
        }
    }
    true
}
