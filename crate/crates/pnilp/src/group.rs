//! Finite permutation groups with fully cached element sets.
//!
//! Everything downstream (element-order statistics, section enumeration,
//! centric tests) quantifies over all elements, so groups are closed by
//! breadth-first enumeration up front and kept immutable afterwards. The
//! element list is sorted into canonical order, which makes group equality a
//! plain list comparison and keeps every derived artifact deterministic.

use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Hard cap on enumerated elements unless overridden by `PNILP_ELEMENT_CAP`.
pub const DEFAULT_ELEMENT_CAP: usize = 20_000;

/// Effective element cap: `PNILP_ELEMENT_CAP` if set and parseable, else the
/// default. Read once per process.
pub fn element_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("PNILP_ELEMENT_CAP")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_ELEMENT_CAP)
    })
}

/// A finitely generated permutation group with its full element set cached.
///
/// Equality and hashing ignore the generator list: two groups are equal iff
/// they have the same degree and the same element set.
#[derive(Clone, Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>, // sorted; identity always first
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for Group {}

impl Hash for Group {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

/// Closes `generators` under composition with the process-wide element cap.
pub fn close(degree: usize, generators: Vec<Permutation>) -> Result<Group> {
    close_with_cap(degree, generators, element_cap())
}

/// Breadth-first closure of the generated group, aborting with
/// [`Error::TooLarge`] once more than `cap` elements appear.
pub fn close_with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Group> {
    for g in &generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(identity.clone());
    let mut queue = vec![identity];
    let mut head = 0;
    while head < queue.len() {
        let current = queue[head].clone();
        head += 1;
        for g in &generators {
            let next = current.compose(g);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::TooLarge { cap });
                }
                seen.insert(next.clone());
                queue.push(next);
            }
        }
    }
    let mut elements = queue;
    elements.sort_unstable();
    Ok(Group {
        degree,
        generators,
        elements,
    })
}

impl Group {
    pub fn trivial(degree: usize) -> Self {
        Group {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Builds a group from an element set that is already known to be closed
    /// (filtrations, images of subgroups, cyclic hulls). Picks a small
    /// generating set greedily so emitted witnesses stay readable.
    pub(crate) fn from_closed_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        debug_assert!(
            elements.len() > 256 || is_closed_set(&elements),
            "element set is not closed under composition"
        );
        let generators = greedy_generators(degree, &elements);
        Group {
            degree,
            generators,
            elements,
        }
    }

    /// The cyclic subgroup generated by one element, built from its powers.
    pub fn cyclic_hull(seed: &Permutation) -> Self {
        let mut elements = Vec::new();
        let mut x = Permutation::identity(seed.degree());
        loop {
            elements.push(x.clone());
            x = x.compose(seed);
            if x.is_identity() {
                break;
            }
        }
        Group::from_closed_elements(seed.degree(), elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, ambient: &Group) -> bool {
        self.degree == ambient.degree && self.elements.iter().all(|e| ambient.contains(e))
    }

    /// lcm of the orders of all elements; divides the group order.
    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1u64, |acc, e| lcm(acc, e.order()))
    }

    /// True iff |G| is a power of `p` (the trivial group counts).
    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order();
        while n % p == 0 {
            n /= p;
        }
        n == 1
    }

    /// For a non-trivial group of prime-power order, the prime. `None` if the
    /// order is 1 or has several prime divisors.
    pub fn p_group_prime(&self) -> Option<u64> {
        let n = self.order();
        if n == 1 {
            return None;
        }
        let p = (2..=n).find(|d| n % d == 0).unwrap();
        if self.is_p_group(p) {
            Some(p)
        } else {
            None
        }
    }

    /// {g ∈ G : gs = sg for every s ∈ set}, by filtering the element list.
    pub fn centralizer(&self, set: &[Permutation]) -> Result<Group> {
        if set.iter().any(|s| !self.contains(s)) {
            return Err(Error::NotContained("element set"));
        }
        let elements = self
            .elements
            .iter()
            .filter(|g| set.iter().all(|s| g.compose(s) == s.compose(g)))
            .cloned()
            .collect();
        Ok(Group::from_closed_elements(self.degree, elements))
    }

    /// {g ∈ G : gHg⁻¹ = H}, by filtering the element list.
    pub fn normalizer(&self, h: &Group) -> Result<Group> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotContained("subgroup"));
        }
        // gHg⁻¹ ⊆ H suffices: conjugation is injective and H is finite.
        let elements = self
            .elements
            .iter()
            .filter(|g| h.generators.iter().all(|x| h.contains(&x.conjugate_by(g))))
            .cloned()
            .collect();
        Ok(Group::from_closed_elements(self.degree, elements))
    }

    pub fn center(&self) -> Group {
        self.centralizer(&self.elements).expect("G is contained in itself")
    }

    /// gHg⁻¹ as a group.
    pub fn conjugate_subgroup(&self, h: &Group, g: &Permutation) -> Result<Group> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotContained("subgroup"));
        }
        if !self.contains(g) {
            return Err(Error::NotContained("conjugating element"));
        }
        let elements = h.elements.iter().map(|x| x.conjugate_by(g)).collect();
        Ok(Group::from_closed_elements(self.degree, elements))
    }

    pub fn is_normal_in(&self, ambient: &Group) -> Result<bool> {
        if !self.is_subgroup_of(ambient) {
            return Err(Error::NotContained("subgroup"));
        }
        Ok(ambient
            .generators
            .iter()
            .all(|g| self.generators.iter().all(|x| self.contains(&x.conjugate_by(g)))))
    }

    /// Left multiplication on the sorted element list: an isomorphic copy of
    /// the group acting on |G| points.
    pub fn regular_representation(&self) -> Group {
        let n = self.elements.len();
        let index: HashMap<&Permutation, usize> =
            self.elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let lambda = |g: &Permutation| {
            let images = self
                .elements
                .iter()
                .map(|e| index[&g.compose(e)])
                .collect::<Vec<_>>();
            Permutation::new(images).expect("left multiplication permutes the element list")
        };
        let elements: Vec<Permutation> = self.elements.iter().map(&lambda).collect();
        let generators = self.generators.iter().map(&lambda).collect();
        let mut sorted = elements;
        sorted.sort_unstable();
        Group {
            degree: n,
            generators,
            elements: sorted,
        }
    }
}

fn is_closed_set(elements: &[Permutation]) -> bool {
    let set: HashSet<&Permutation> = elements.iter().collect();
    elements
        .iter()
        .all(|a| elements.iter().all(|b| set.contains(&a.compose(b))))
}

fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut generators: Vec<Permutation> = Vec::new();
    let mut span: HashSet<Permutation> = HashSet::new();
    span.insert(Permutation::identity(degree));
    for e in elements {
        if span.len() == elements.len() {
            break;
        }
        if span.contains(e) {
            continue;
        }
        generators.push(e.clone());
        // re-close the span over the enlarged generating set
        let mut queue: Vec<Permutation> = span.iter().cloned().collect();
        let mut head = 0;
        while head < queue.len() {
            let current = queue[head].clone();
            head += 1;
            for g in &generators {
                let next = current.compose(g);
                if span.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
    }
    generators
}

/// The direct product of the given groups, acting on the disjoint union of
/// their domains.
pub fn direct_product(factors: &[&Group]) -> Result<Group> {
    let degree: usize = factors.iter().map(|f| f.degree()).sum();
    let mut generators = Vec::new();
    let mut offset = 0;
    for f in factors {
        for g in f.generators() {
            let mut images: Vec<usize> = (0..degree).collect();
            for (i, &v) in g.images().iter().enumerate() {
                images[offset + i] = offset + v;
            }
            generators.push(Permutation::new(images).expect("block embedding stays bijective"));
        }
        offset += f.degree();
    }
    let product = close(degree, generators)?;
    let expected: u64 = factors.iter().map(|f| f.order()).product();
    assert_eq!(product.order(), expected, "direct product order must multiply");
    Ok(product)
}

/// The left-multiplication action of `h` on the left cosets of a normal
/// subgroup `n`, together with the induced quotient homomorphism.
///
/// Cosets are indexed in canonical order (by their lexicographically least
/// member), so the construction is deterministic.
pub struct CosetMap {
    reps: Vec<Permutation>,
    index_of: HashMap<Permutation, usize>,
    quotient: Group,
}

impl CosetMap {
    pub fn new(h: &Group, n: &Group) -> Result<Self> {
        if !n.is_subgroup_of(h) {
            return Err(Error::NotContained("subgroup"));
        }
        if !n.is_normal_in(h)? {
            return Err(Error::NotNormal("N is not normal in H"));
        }
        let mut reps: Vec<Permutation> = Vec::new();
        let mut index_of: HashMap<Permutation, usize> =
            HashMap::with_capacity(h.elements().len());
        for x in h.elements() {
            if index_of.contains_key(x) {
                continue;
            }
            let idx = reps.len();
            reps.push(x.clone());
            for y in n.elements() {
                index_of.insert(x.compose(y), idx);
            }
        }
        let degree = reps.len();
        let quotient_generators: Vec<Permutation> = h
            .generators()
            .iter()
            .map(|g| image_raw(&reps, &index_of, g))
            .collect();
        let quotient = close(degree, quotient_generators)?;
        assert_eq!(
            quotient.order() * n.order(),
            h.order(),
            "coset action of a normal subgroup must be faithful on H/N"
        );
        Ok(CosetMap {
            reps,
            index_of,
            quotient,
        })
    }

    /// Number of cosets [H : N].
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn quotient(&self) -> &Group {
        &self.quotient
    }

    /// Image of an element of H in the quotient group.
    pub fn image(&self, g: &Permutation) -> Result<Permutation> {
        if !self.index_of.contains_key(g) {
            return Err(Error::NotContained("element"));
        }
        Ok(image_raw(&self.reps, &self.index_of, g))
    }
}

fn image_raw(
    reps: &[Permutation],
    index_of: &HashMap<Permutation, usize>,
    g: &Permutation,
) -> Permutation {
    let images = reps.iter().map(|r| index_of[&g.compose(r)]).collect();
    Permutation::new(images).expect("left multiplication permutes cosets")
}

/// The quotient H/N realized as a permutation group on the cosets of N.
pub fn coset_action(h: &Group, n: &Group) -> Result<Group> {
    Ok(CosetMap::new(h, n)?.quotient.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles)
    }

    fn s3() -> Group {
        close(3, vec![c(3, &[&[0, 1, 2]]), c(3, &[&[0, 1]])]).unwrap()
    }

    fn s4() -> Group {
        close(4, vec![c(4, &[&[0, 1, 2, 3]]), c(4, &[&[0, 1]])]).unwrap()
    }

    fn a4() -> Group {
        close(4, vec![c(4, &[&[0, 1, 2]]), c(4, &[&[1, 2, 3]])]).unwrap()
    }

    fn v4_in(degree: usize) -> Group {
        close(
            degree,
            vec![
                c(degree, &[&[0, 1], &[2, 3]]),
                c(degree, &[&[0, 2], &[1, 3]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn close_cyclic_of_order_three() {
        let g = close(3, vec![c(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn close_symmetric_groups() {
        assert_eq!(s3().order(), 6);
        assert_eq!(s4().order(), 24);
    }

    #[test]
    fn close_respects_cap() {
        let err = close_with_cap(4, vec![c(4, &[&[0, 1, 2, 3]]), c(4, &[&[0, 1]])], 10)
            .unwrap_err();
        assert!(matches!(err, Error::TooLarge { cap: 10 }));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn close_rejects_degree_mismatch() {
        let err = close(4, vec![c(3, &[&[0, 1, 2]])]).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
    }

    #[test]
    fn equal_groups_compare_equal_regardless_of_generators() {
        let g1 = close(3, vec![c(3, &[&[0, 1, 2]]), c(3, &[&[0, 1]])]).unwrap();
        let g2 = close(3, vec![c(3, &[&[0, 1]]), c(3, &[&[1, 2]])]).unwrap();
        assert_eq!(g1, g2);
    }

    #[test]
    fn exponent_of_cyclic_and_symmetric() {
        let z6 = close(6, vec![c(6, &[&[0, 1, 2, 3, 4, 5]])]).unwrap();
        assert_eq!(z6.exponent(), 6);
        // orders present in S3 are 1, 2, 3
        assert_eq!(s3().exponent(), 6);
    }

    #[test]
    fn centralizer_of_identity_is_whole_group() {
        let g = s3();
        let z = g.centralizer(&[g.identity()]).unwrap();
        assert_eq!(z, g);
    }

    #[test]
    fn centralizer_of_rotation_subgroup_in_s3() {
        let g = s3();
        let a3 = close(3, vec![c(3, &[&[0, 1, 2]])]).unwrap();
        let cent = g.centralizer(a3.elements()).unwrap();
        assert_eq!(cent, a3);
        assert_eq!(cent.order(), 3);
    }

    #[test]
    fn centralizer_of_v4_in_a4_is_v4() {
        let g = a4();
        let v4 = v4_in(4);
        let cent = g.centralizer(v4.elements()).unwrap();
        assert_eq!(cent, v4);
        assert_eq!(cent.order(), 4);
    }

    #[test]
    fn centralizer_rejects_outside_elements() {
        let g = a4();
        let odd = c(4, &[&[0, 1]]);
        assert!(matches!(
            g.centralizer(&[odd]),
            Err(Error::NotContained(_))
        ));
    }

    #[test]
    fn normalizer_of_group_in_itself() {
        let g = s4();
        assert_eq!(g.normalizer(&g).unwrap(), g);
    }

    #[test]
    fn normalizer_of_v4_in_s4_is_everything() {
        let g = s4();
        assert_eq!(g.normalizer(&v4_in(4)).unwrap(), g);
    }

    #[test]
    fn normalizer_of_transposition_in_s3_is_itself() {
        let g = s3();
        let h = close(3, vec![c(3, &[&[0, 1]])]).unwrap();
        let n = g.normalizer(&h).unwrap();
        assert_eq!(n, h);
        assert_eq!(n.order(), 2);
    }

    #[test]
    fn center_of_abelian_group_is_whole() {
        let z4 = close(4, vec![c(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(z4.center(), z4);
    }

    #[test]
    fn center_of_s3_is_trivial() {
        assert!(s3().center().is_trivial());
    }

    #[test]
    fn coset_action_by_trivial_subgroup_is_regular() {
        let g = s3();
        let q = coset_action(&g, &Group::trivial(3)).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.degree(), 6);
    }

    #[test]
    fn coset_action_s3_mod_a3() {
        let g = s3();
        let a3 = close(3, vec![c(3, &[&[0, 1, 2]])]).unwrap();
        let q = coset_action(&g, &a3).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn coset_action_s4_mod_v4_is_s3_shaped() {
        let q = coset_action(&s4(), &v4_in(4)).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.exponent(), 6);
        assert!(q.center().is_trivial()); // nonabelian of order 6
    }

    #[test]
    fn coset_action_rejects_non_normal_subgroup() {
        let g = s3();
        let h = close(3, vec![c(3, &[&[0, 1]])]).unwrap();
        assert!(matches!(coset_action(&g, &h), Err(Error::NotNormal(_))));
    }

    #[test]
    fn coset_map_is_a_homomorphism() {
        let g = s4();
        let map = CosetMap::new(&g, &v4_in(4)).unwrap();
        for a in g.elements().iter().step_by(3) {
            for b in g.elements().iter().step_by(5) {
                let lhs = map.image(&a.compose(b)).unwrap();
                let rhs = map.image(a).unwrap().compose(&map.image(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn conjugate_by_identity_is_identity_map() {
        let g = s4();
        let v4 = v4_in(4);
        assert_eq!(g.conjugate_subgroup(&v4, &g.identity()).unwrap(), v4);
    }

    #[test]
    fn a3_is_normal_in_s3_but_a_transposition_subgroup_is_not() {
        let g = s3();
        let a3 = close(3, vec![c(3, &[&[0, 1, 2]])]).unwrap();
        let t = close(3, vec![c(3, &[&[0, 1]])]).unwrap();
        assert!(a3.is_normal_in(&g).unwrap());
        assert!(!t.is_normal_in(&g).unwrap());
        // conjugating by the 3-cycle moves the transposition
        let moved = g.conjugate_subgroup(&t, &c(3, &[&[0, 1, 2]])).unwrap();
        assert_ne!(moved, t);
    }

    #[test]
    fn regular_representation_preserves_order_and_exponent() {
        let g = s3();
        let reg = g.regular_representation();
        assert_eq!(reg.order(), g.order());
        assert_eq!(reg.degree(), 6);
        assert_eq!(reg.exponent(), g.exponent());
    }

    #[test]
    fn direct_product_multiplies_orders() {
        let g = direct_product(&[&s3(), &s3()]).unwrap();
        assert_eq!(g.order(), 36);
        assert_eq!(g.degree(), 6);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
            Just((0..degree).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::new(v).unwrap())
        }

        fn arb_group() -> impl Strategy<Value = Group> {
            (4usize..=6)
                .prop_flat_map(|d| proptest::collection::vec(arb_perm(d), 1..=2)
                    .prop_map(move |gens| close_with_cap(d, gens, 1000).unwrap()))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn element_orders_divide_exponent_divides_order(g in arb_group()) {
                let exp = g.exponent();
                prop_assert_eq!(g.order() % exp, 0);
                for e in g.elements() {
                    prop_assert_eq!(exp % e.order(), 0);
                }
            }

            #[test]
            fn close_is_idempotent(g in arb_group()) {
                let reclosed = close(g.degree(), g.generators().to_vec()).unwrap();
                prop_assert_eq!(reclosed, g);
            }

            #[test]
            fn centralizer_and_center_satisfy_lagrange(g in arb_group()) {
                let seed = g.elements()[g.elements().len() / 2].clone();
                let cent = g.centralizer(std::slice::from_ref(&seed)).unwrap();
                prop_assert_eq!(g.order() % cent.order(), 0);
                prop_assert_eq!(g.order() % g.center().order(), 0);
            }

            #[test]
            fn centralizer_contained_in_normalizer_of_hull(g in arb_group()) {
                let seed = g.elements().last().unwrap().clone();
                let hull = Group::cyclic_hull(&seed);
                let cent = g.centralizer(hull.elements()).unwrap();
                let norm = g.normalizer(&hull).unwrap();
                prop_assert!(cent.is_subgroup_of(&norm));
            }

            #[test]
            fn coset_action_has_exact_index_order(g in arb_group()) {
                // normal closure of a single element, built by brute force
                let seed = g.elements().last().unwrap().clone();
                let mut elems: Vec<Permutation> = Vec::new();
                for x in g.elements() {
                    elems.push(seed.conjugate_by(x));
                }
                let n = close(g.degree(), elems).unwrap();
                prop_assert!(n.is_normal_in(&g).unwrap());
                let q = coset_action(&g, &n).unwrap();
                prop_assert_eq!(q.order() * n.order(), g.order());
            }
        }
    }
}
