//! The decision procedures: the element-order statistic φ, direct
//! p-nilpotency, p-centric and p-radical subgroup tests, the four equivalent
//! criteria checked against each other, the nilpotency corollary, the
//! constructive section witness, and the direct-product counterexample.
//!
//! φ(G) counts the elements whose order equals exp(G). A p-nilpotent group
//! has φ(K) ≠ 0 for every p'-reduced section K, and conversely; the same
//! statistic restricted to sections of normalizers of p-centric (and
//! p-radical) p-subgroups is already decisive. [`verify_theorem`] evaluates
//! all four routes independently and reports whether they agree.

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_prime, p_part, primes_dividing};
use crate::error::{Error, Result};
use crate::group::{direct_product, CosetMap, Group};
use crate::modrep::{find_simple_submodule, induced_frattini_action, semidirect_product};
use crate::perm::Permutation;
use crate::structure::{
    all_subgroups, is_p_prime_reduced, is_p_reduced, o_p_prime, sections_from_inventory,
    sylow, Section, SectionMode, SectionScope, SubgroupInventory,
};

/// φ(G): the number of elements of order exp(G).
pub fn phi(g: &Group) -> u64 {
    let exponent = g.exponent();
    g.elements().iter().filter(|e| e.order() == exponent).count() as u64
}

/// Direct test: G is p-nilpotent iff O_{p'}(G) is a normal p-complement,
/// i.e. |O_{p'}(G)| · |Syl_p(G)| = |G|.
pub fn is_p_nilpotent(g: &Group, p: u64) -> bool {
    assert!(is_prime(p), "p must be prime");
    o_p_prime(g, p).order() * sylow(g, p).order() == g.order()
}

/// G is nilpotent iff it is p-nilpotent for every prime p dividing |G|.
pub fn is_nilpotent(g: &Group) -> bool {
    primes_dividing(g.order()).into_iter().all(|p| is_p_nilpotent(g, p))
}

fn expect_p_subgroup(g: &Group, q_sub: &Group, p: u64) -> Result<()> {
    assert!(is_prime(p), "p must be prime");
    if !q_sub.is_subgroup_of(g) {
        return Err(Error::NotContained("subgroup"));
    }
    if !q_sub.is_p_group(p) {
        return Err(Error::NotAPSubgroup { p, order: q_sub.order() });
    }
    Ok(())
}

/// Q is p-centric iff Z(Q) is a Sylow p-subgroup of C_G(Q); as Z(Q) is a
/// p-subgroup of C_G(Q), that happens exactly when [C_G(Q) : Z(Q)] is prime
/// to p.
pub fn is_p_centric(g: &Group, q_sub: &Group, p: u64) -> Result<bool> {
    expect_p_subgroup(g, q_sub, p)?;
    let centralizer = g.centralizer(q_sub.elements())?;
    let center = q_sub.center();
    debug_assert!(center.is_subgroup_of(&centralizer));
    Ok((centralizer.order() / center.order()) % p != 0)
}

/// Q is p-radical iff N_G(Q)/Q is p-reduced.
pub fn is_p_radical(g: &Group, q_sub: &Group, p: u64) -> Result<bool> {
    expect_p_subgroup(g, q_sub, p)?;
    let normalizer = g.normalizer(q_sub)?;
    let quotient = crate::group::coset_action(&normalizer, q_sub)?;
    Ok(is_p_reduced(&quotient, p))
}

/// Serializable refutation: the generators of a section H/N whose quotient
/// violates the φ ≠ 0 requirement, plus a human-readable account.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Witness {
    pub h_gens: Vec<Vec<usize>>,
    pub n_gens: Vec<Vec<usize>>,
    pub description: String,
}

fn generator_images(g: &Group) -> Vec<Vec<usize>> {
    if g.generators().is_empty() {
        // keep the witness self-describing: the identity fixes the degree
        return vec![g.identity().images().to_vec()];
    }
    g.generators().iter().map(|p| p.images().to_vec()).collect()
}

fn section_witness(section: &Section, p: u64, context: &str) -> Witness {
    Witness {
        h_gens: generator_images(&section.subgroup),
        n_gens: generator_images(&section.normal),
        description: format!(
            "{context}phi(K)=0 for the {p}'-reduced section K=H/N with |H|={}, |N|={}, |K|={}",
            section.subgroup.order(),
            section.normal.order(),
            section.quotient.order()
        ),
    }
}

/// Condition on sections of G itself: φ(K) ≠ 0 for each p'-reduced section.
pub fn cond2_sections(g: &Group, p: u64, scope: SectionScope) -> Result<(bool, Option<Witness>)> {
    let inventory = all_subgroups(g)?;
    cond2_from_inventory(&inventory, p, scope)
}

pub fn cond2_from_inventory(
    inventory: &SubgroupInventory,
    p: u64,
    scope: SectionScope,
) -> Result<(bool, Option<Witness>)> {
    assert!(is_prime(p), "p must be prime");
    for section in sections_from_inventory(inventory, SectionMode::PPrimeReduced(p), scope)? {
        if phi(&section.quotient) == 0 {
            return Ok((false, Some(section_witness(&section, p, ""))));
        }
    }
    Ok((true, None))
}

fn cond_over_centric_subgroups(
    g: &Group,
    inventory: &SubgroupInventory,
    p: u64,
    scope: SectionScope,
    require_radical: bool,
) -> Result<(bool, Option<Witness>)> {
    assert!(is_prime(p), "p must be prime");
    for class in &inventory.classes {
        let q_sub = &class.representative;
        if q_sub.is_trivial() || !q_sub.is_p_group(p) {
            continue;
        }
        if !is_p_centric(g, q_sub, p)? {
            continue;
        }
        if require_radical && !is_p_radical(g, q_sub, p)? {
            continue;
        }
        let normalizer = g.normalizer(q_sub)?;
        let (holds, witness) = cond2_sections(&normalizer, p, scope)?;
        if !holds {
            let inner = witness.expect("a failing condition carries its section");
            let kind = if require_radical {
                "p-centric p-radical"
            } else {
                "p-centric"
            };
            let q_gens: Vec<String> =
                q_sub.generators().iter().map(|x| x.to_string()).collect();
            let context = format!(
                "inside N_G(Q) for the {kind} subgroup Q of order {} (gens: {}): ",
                q_sub.order(),
                q_gens.join(" | ")
            );
            return Ok((
                false,
                Some(Witness {
                    h_gens: inner.h_gens,
                    n_gens: inner.n_gens,
                    description: format!("{context}{}", inner.description),
                }),
            ));
        }
    }
    Ok((true, None))
}

/// Condition over normalizers of p-centric p-subgroups.
pub fn cond3_centric(g: &Group, p: u64, scope: SectionScope) -> Result<(bool, Option<Witness>)> {
    let inventory = all_subgroups(g)?;
    cond_over_centric_subgroups(g, &inventory, p, scope, false)
}

/// Condition over normalizers of p-centric p-radical p-subgroups.
pub fn cond4_centric_radical(
    g: &Group,
    p: u64,
    scope: SectionScope,
) -> Result<(bool, Option<Witness>)> {
    let inventory = all_subgroups(g)?;
    cond_over_centric_subgroups(g, &inventory, p, scope, true)
}

/// Structured verdict for one (group, prime) pair: the four independently
/// computed booleans, whether they agree, and a self-certifying witness for
/// the first failing condition.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub group_id: String,
    pub order: u64,
    pub prime: u64,
    pub b1: bool,
    pub b2: bool,
    pub b3: bool,
    pub b4: bool,
    pub agree: bool,
    pub witness: Option<Witness>,
}

/// Runs all four criteria on (g, p) and packages the outcome.
pub fn verify_theorem(group_id: &str, g: &Group, p: u64, scope: SectionScope) -> Result<Report> {
    assert!(is_prime(p), "p must be prime");
    let inventory = all_subgroups(g)?;
    let b1 = is_p_nilpotent(g, p);
    let (b2, w2) = cond2_from_inventory(&inventory, p, scope)?;
    let (b3, w3) = cond_over_centric_subgroups(g, &inventory, p, scope, false)?;
    let (b4, w4) = cond_over_centric_subgroups(g, &inventory, p, scope, true)?;
    let agree = b1 == b2 && b2 == b3 && b3 == b4;
    let failed: Vec<&str> = [("b1", b1), ("b2", b2), ("b3", b3), ("b4", b4)]
        .iter()
        .filter(|(_, v)| !v)
        .map(|(n, _)| *n)
        .collect();
    let witness = [w2, w3, w4].into_iter().flatten().next().map(|w| Witness {
        description: format!("failed: {}; {}", failed.join(","), w.description),
        ..w
    });
    Ok(Report {
        group_id: group_id.to_string(),
        order: g.order(),
        prime: p,
        b1,
        b2,
        b3,
        b4,
        agree,
        witness,
    })
}

/// Outcome of the nilpotency cross-check: the direct decision against the
/// all-sections φ test.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CorollaryOutcome {
    pub nilpotent: bool,
    pub all_sections_pass: bool,
    pub consistent: bool,
    pub witness: Option<Witness>,
}

/// Decides nilpotency directly and via φ over every section, and reports
/// whether the two answers coincide.
pub fn verify_corollary(g: &Group) -> Result<CorollaryOutcome> {
    let nilpotent = is_nilpotent(g);
    let inventory = all_subgroups(g)?;
    let mut all_sections_pass = true;
    let mut witness = None;
    for section in
        sections_from_inventory(&inventory, SectionMode::All, SectionScope::Representatives)?
    {
        if phi(&section.quotient) == 0 {
            all_sections_pass = false;
            witness = Some(Witness {
                h_gens: generator_images(&section.subgroup),
                n_gens: generator_images(&section.normal),
                description: format!(
                    "phi(K)=0 for the section K=H/N with |H|={}, |N|={}, |K|={}",
                    section.subgroup.order(),
                    section.normal.order(),
                    section.quotient.order()
                ),
            });
            break;
        }
    }
    Ok(CorollaryOutcome {
        nilpotent,
        all_sections_pass,
        consistent: nilpotent == all_sections_pass,
        witness,
    })
}

/// A constructed section H = V ⋊ Z/q certifying φ(H) = 0 with O_{p'}(H) = 1,
/// together with the data the construction pinned down along the way.
#[derive(Clone, Debug)]
pub struct Lemma2Witness {
    pub group: Group,
    pub q: u64,
    /// The order-q element whose conjugation action was used.
    pub order_q_element: Permutation,
    pub module_dim: usize,
}

/// Constructive witness extraction for a short exact sequence P → G → K with
/// P a non-trivial normal p-subgroup, C_G(P) ≤ P, and K = G/P non-trivial
/// and p-reduced: picks the least prime q ≠ p dividing |K|, an element
/// mapping onto order q (powered by p until its own order is q), induces the
/// conjugation action on P/Φ(P), extracts a non-trivial simple submodule V,
/// and returns H = V ⋊ Z/q with the checks O_{p'}(H) = 1 and φ(H) = 0.
pub fn extract_lemma2_witness(g: &Group, p_sub: &Group, p: u64) -> Result<Lemma2Witness> {
    assert!(is_prime(p), "p must be prime");
    if p_sub.is_trivial() {
        return Err(Error::Hypothesis("P must be non-trivial".into()));
    }
    if !p_sub.is_subgroup_of(g) {
        return Err(Error::Hypothesis("P must be a subgroup of G".into()));
    }
    if !p_sub.is_p_group(p) {
        return Err(Error::Hypothesis(format!("P must be a {p}-group")));
    }
    if !p_sub.is_normal_in(g)? {
        return Err(Error::Hypothesis("P must be normal in G".into()));
    }
    let centralizer = g.centralizer(p_sub.elements())?;
    if !centralizer.is_subgroup_of(p_sub) {
        return Err(Error::Hypothesis("C_G(P) must be contained in P".into()));
    }
    let map = CosetMap::new(g, p_sub)?;
    let quotient = map.quotient();
    if quotient.is_trivial() {
        return Err(Error::Hypothesis("G/P must be non-trivial".into()));
    }
    if !is_p_reduced(quotient, p) {
        return Err(Error::Hypothesis(format!("G/P must be {p}-reduced")));
    }

    let q = primes_dividing(quotient.order())
        .into_iter()
        .find(|&q| q != p)
        .expect("a non-trivial p-reduced group has order divisible by some q != p");
    let mut element = g
        .elements()
        .iter()
        .find(|e| {
            map.image(e)
                .expect("catalog scan stays inside G")
                .order()
                == q
        })
        .expect("some element maps onto an order-q element of G/P")
        .clone();
    // raise to powers of p until the p-part of the order is gone
    while element.order() % p == 0 {
        element = element.pow(p);
    }
    assert_eq!(element.order(), q, "the projection pins the order to q");

    let module = induced_frattini_action(p_sub, &element)?;
    let simple = find_simple_submodule(&module)?;
    let witness_group = semidirect_product(&simple.module)?;
    assert!(
        o_p_prime(&witness_group, p).is_trivial(),
        "V ⋊ Z/q is p'-reduced"
    );
    assert_eq!(phi(&witness_group), 0, "V ⋊ Z/q has no element of full order");
    Ok(Lemma2Witness {
        group: witness_group,
        q,
        order_q_element: element,
        module_dim: simple.module.dim(),
    })
}

/// A direct power K^s with the assembled element realizing the exponent.
#[derive(Clone, Debug)]
pub struct ExampleGroup {
    pub group: Group,
    pub copies: usize,
    pub full_order_element: Permutation,
}

/// For a p'-reduced K with φ(K) = 0 that is not p-nilpotent, builds
/// G = K^s (one copy per distinct prime of exp(K)). The product acquires an
/// element of full order, so φ(G) ≠ 0 while O_{p'}(G) = 1 and G is still
/// not p-nilpotent.
pub fn build_example_group(k: &Group, p: u64) -> Result<ExampleGroup> {
    assert!(is_prime(p), "p must be prime");
    if !is_p_prime_reduced(k, p) {
        return Err(Error::Precondition(format!("O_{{{p}'}}(K) != 1")));
    }
    if phi(k) != 0 {
        return Err(Error::Precondition("phi(K) != 0".into()));
    }
    if is_p_nilpotent(k, p) {
        return Err(Error::Precondition(format!("K is {p}-nilpotent")));
    }
    let exponent = k.exponent();
    let factors = factorize(exponent);
    let copies = factors.len();
    let copies_of_k: Vec<&Group> = std::iter::repeat_n(k, copies).collect();
    let group = direct_product(&copies_of_k)?;

    // assemble (k_1, .., k_s) with o(k_i) the maximal p_i-power in exp(K)
    let mut images: Vec<usize> = Vec::with_capacity(k.degree() * copies);
    for (i, &(prime, e)) in factors.iter().enumerate() {
        let target = prime.pow(e as u32);
        let seed = k
            .elements()
            .iter()
            .find(|x| p_part(x.order(), prime) == target)
            .expect("the exponent's p_i-part is attained by some element");
        // strip the coprime part so the order is exactly p_i^{e_i}
        let component = seed.pow(seed.order() / target);
        let offset = i * k.degree();
        images.extend(component.images().iter().map(|&v| v + offset));
    }
    let full_order_element =
        Permutation::new(images).expect("blockwise images remain a bijection");
    assert_eq!(full_order_element.order(), exponent);
    assert!(group.contains(&full_order_element));

    assert!(
        o_p_prime(&group, p).is_trivial(),
        "the direct power stays p'-reduced"
    );
    assert!(phi(&group) > 0, "the assembled element attains the exponent");
    assert!(
        !is_p_nilpotent(&group, p),
        "the direct power is not p-nilpotent"
    );
    Ok(ExampleGroup {
        group,
        copies,
        full_order_element,
    })
}
