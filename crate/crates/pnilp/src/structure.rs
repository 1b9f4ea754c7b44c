//! Structural subgroup computations: the full subgroup lattice, conjugacy
//! classes of subgroups, Sylow subgroups, the cores O_p and O_{p'}, the
//! Frattini subgroup of a p-group, and section enumeration.
//!
//! Everything here is exhaustive: the subgroup inventory is seeded with all
//! cyclic subgroups and closed under pairwise join, which is complete because
//! every subgroup is the join of its cyclic subgroups.

use std::collections::HashSet;

use crate::arith::p_part;
use crate::error::{Error, Result};
use crate::group::{close, coset_action, Group};
use crate::perm::Permutation;

/// One conjugacy class of subgroups: the canonical (lexicographically least)
/// representative and the number of conjugates.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: Group,
    pub size: usize,
}

/// Every subgroup of a group, plus the partition into conjugacy classes.
#[derive(Clone, Debug)]
pub struct SubgroupInventory {
    pub all: Vec<Group>,
    pub classes: Vec<SubgroupClass>,
}

/// Complete subgroup inventory by cyclic seeding and join fixpoint.
pub fn all_subgroups(g: &Group) -> Result<SubgroupInventory> {
    let mut seen: HashSet<Group> = HashSet::new();
    let mut all: Vec<Group> = Vec::new();
    let mut push = |sub: Group, all: &mut Vec<Group>, frontier: &mut Vec<usize>| {
        if seen.insert(sub.clone()) {
            frontier.push(all.len());
            all.push(sub);
        }
    };

    let mut frontier: Vec<usize> = Vec::new();
    push(Group::trivial(g.degree()), &mut all, &mut frontier);
    for e in g.elements() {
        push(Group::cyclic_hull(e), &mut all, &mut frontier);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        let snapshot = all.len();
        for &i in &frontier {
            for j in 0..snapshot {
                if i == j {
                    continue;
                }
                let a = &all[i];
                let b = &all[j];
                if a.is_subgroup_of(b) || b.is_subgroup_of(a) {
                    continue;
                }
                let joined = join(a, b)?;
                push(joined, &mut all, &mut next);
            }
        }
        frontier = next;
    }

    all.sort_unstable_by(compare_groups);
    let classes = conjugacy_classes(g, &all);
    Ok(SubgroupInventory { all, classes })
}

fn compare_groups(a: &Group, b: &Group) -> std::cmp::Ordering {
    a.order()
        .cmp(&b.order())
        .then_with(|| a.elements().cmp(b.elements()))
}

fn conjugacy_classes(g: &Group, all: &[Group]) -> Vec<SubgroupClass> {
    let mut assigned: HashSet<&Group> = HashSet::new();
    let mut classes = Vec::new();
    for sub in all {
        if assigned.contains(sub) {
            continue;
        }
        // orbit of the subgroup under conjugation by generators
        let mut orbit: Vec<Group> = vec![sub.clone()];
        let mut in_orbit: HashSet<Group> = orbit.iter().cloned().collect();
        let mut head = 0;
        while head < orbit.len() {
            let current = orbit[head].clone();
            head += 1;
            for gen in g.generators() {
                let conj = g
                    .conjugate_subgroup(&current, gen)
                    .expect("inventory members live inside g");
                if in_orbit.insert(conj.clone()) {
                    orbit.push(conj);
                }
            }
        }
        let representative = orbit
            .iter()
            .min_by(|a, b| compare_groups(a, b))
            .expect("orbit is nonempty")
            .clone();
        let size = orbit.len();
        for member in all {
            if in_orbit.contains(member) {
                assigned.insert(member);
            }
        }
        classes.push(SubgroupClass {
            representative,
            size,
        });
    }
    classes.sort_unstable_by(|a, b| compare_groups(&a.representative, &b.representative));
    classes
}

/// ⟨A ∪ B⟩ inside a common ambient degree.
pub fn join(a: &Group, b: &Group) -> Result<Group> {
    let mut gens = a.generators().to_vec();
    gens.extend_from_slice(b.generators());
    close(a.degree(), gens)
}

/// Smallest normal subgroup of `g` containing `seed`.
pub fn normal_closure(g: &Group, seed: &Permutation) -> Result<Group> {
    if !g.contains(seed) {
        return Err(Error::NotContained("element"));
    }
    let mut gens = vec![seed.clone()];
    loop {
        let current = close(g.degree(), gens.clone())?;
        let before = gens.len();
        for i in 0..before {
            for t in g.generators() {
                let conj = gens[i].conjugate_by(t);
                if !current.contains(&conj) && !gens.contains(&conj) {
                    gens.push(conj);
                }
            }
        }
        if gens.len() == before {
            return Ok(current);
        }
    }
}

/// A Sylow p-subgroup, grown inside successive normalizers: a proper
/// p-subgroup always acquires a new p-element in its normalizer.
pub fn sylow(g: &Group, p: u64) -> Group {
    assert!(crate::arith::is_prime(p), "p must be prime");
    let target = p_part(g.order(), p);
    if target == 1 {
        return Group::trivial(g.degree());
    }
    // seed with a cyclic p-subgroup of maximal element order
    let mut best = Permutation::identity(g.degree());
    let mut best_order = 1;
    for e in g.elements() {
        let m = e.order();
        let pe = p_part(m, p);
        if pe > best_order {
            best_order = pe;
            best = e.pow(m / pe);
        }
    }
    let mut current = Group::cyclic_hull(&best);
    while current.order() < target {
        let normalizer = g.normalizer(&current).expect("p-subgroup stays inside g");
        let extension = normalizer
            .elements()
            .iter()
            .find_map(|x| {
                let m = x.order();
                let pe = p_part(m, p);
                if pe == 1 {
                    return None;
                }
                let y = x.pow(m / pe);
                (!current.contains(&y)).then_some(y)
            })
            .expect("a proper p-subgroup grows inside its normalizer");
        let mut gens = current.generators().to_vec();
        gens.push(extension);
        current = close(g.degree(), gens).expect("p-subgroup stays within the cap");
        debug_assert!(current.is_p_group(p));
    }
    current
}

/// O_{p'}(G): the largest normal subgroup of order prime to p, assembled as
/// the join of all normal closures of p'-elements that stay p'-groups.
pub fn o_p_prime(g: &Group, p: u64) -> Group {
    assert!(crate::arith::is_prime(p), "p must be prime");
    core_by_normal_closures(g, |order| order % p != 0)
}

/// O_p(G): the largest normal p-subgroup, dual to [`o_p_prime`].
pub fn o_p(g: &Group, p: u64) -> Group {
    assert!(crate::arith::is_prime(p), "p must be prime");
    core_by_normal_closures(g, |order| {
        let mut n = order;
        while n % p == 0 {
            n /= p;
        }
        n == 1
    })
}

fn core_by_normal_closures(g: &Group, admissible: impl Fn(u64) -> bool) -> Group {
    let mut acc = Group::trivial(g.degree());
    for e in g.elements() {
        if !admissible(e.order()) || acc.contains(e) {
            continue;
        }
        let closure = normal_closure(g, e).expect("element of g");
        if admissible(closure.order()) {
            acc = join(&acc, &closure).expect("join of normal subgroups stays in g");
        }
    }
    acc
}

pub fn is_p_prime_reduced(g: &Group, p: u64) -> bool {
    o_p_prime(g, p).is_trivial()
}

pub fn is_p_reduced(g: &Group, p: u64) -> bool {
    o_p(g, p).is_trivial()
}

/// Φ(P) for a p-group: generated by all commutators and all p-th powers.
/// The quotient P/Φ(P) is elementary abelian.
pub fn frattini(p_group: &Group) -> Result<Group> {
    if p_group.is_trivial() {
        return Ok(Group::trivial(p_group.degree()));
    }
    let p = p_group
        .p_group_prime()
        .ok_or(Error::NotAPGroup { order: p_group.order() })?;
    let mut gens: HashSet<Permutation> = HashSet::new();
    for a in p_group.elements() {
        gens.insert(a.pow(p));
        for b in p_group.elements() {
            // a⁻¹ b⁻¹ a b
            let comm = a
                .inverse()
                .compose(&b.inverse())
                .compose(a)
                .compose(b);
            gens.insert(comm);
        }
    }
    let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
    let closure = close(p_group.degree(), gens)?;
    // rebuild with a small canonical generating set
    Ok(Group::from_closed_elements(
        p_group.degree(),
        closure.elements().to_vec(),
    ))
}

/// How to interpret "each section" when enumerating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionMode {
    All,
    /// Keep only sections K with O_{p'}(K) = 1.
    PPrimeReduced(u64),
}

/// Which subgroups to take as the tops of sections. Conjugate subgroups give
/// isomorphic sections, so representatives suffice for any isomorphism-
/// invariant predicate; `AllSubgroups` is the audit mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionScope {
    Representatives,
    AllSubgroups,
}

/// A section H/N: a subgroup H, a normal subgroup N of H, and the quotient
/// realized as a permutation group on the cosets.
#[derive(Clone, Debug)]
pub struct Section {
    pub subgroup: Group,
    pub normal: Group,
    pub quotient: Group,
}

/// Every section of `g` within the requested scope, in canonical order.
pub fn sections(g: &Group, mode: SectionMode, scope: SectionScope) -> Result<Vec<Section>> {
    let inventory = all_subgroups(g)?;
    sections_from_inventory(&inventory, mode, scope)
}

/// Section enumeration against a precomputed inventory.
pub fn sections_from_inventory(
    inventory: &SubgroupInventory,
    mode: SectionMode,
    scope: SectionScope,
) -> Result<Vec<Section>> {
    let tops: Vec<&Group> = match scope {
        SectionScope::Representatives => {
            inventory.classes.iter().map(|c| &c.representative).collect()
        }
        SectionScope::AllSubgroups => inventory.all.iter().collect(),
    };
    let mut out = Vec::new();
    for h in tops {
        for n in &inventory.all {
            if !n.is_subgroup_of(h) || !n.is_normal_in(h)? {
                continue;
            }
            let quotient = coset_action(h, n)?;
            if let SectionMode::PPrimeReduced(p) = mode {
                if !is_p_prime_reduced(&quotient, p) {
                    continue;
                }
            }
            out.push(Section {
                subgroup: h.clone(),
                normal: n.clone(),
                quotient,
            });
        }
    }
    Ok(out)
}
