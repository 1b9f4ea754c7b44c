//! Standard group constructors and the built-in verification catalog.

use crate::error::Result;
use crate::group::{close, direct_product, Group};
use crate::modrep::build_lemma1_group;
use crate::perm::Permutation;

/// How a catalog entry was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constructor {
    Cyclic(usize),
    /// Dihedral group of the n-gon, order 2n.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Generalized quaternion group of the given 2-power order.
    Quaternion(usize),
    DirectProduct(Vec<String>),
    Lemma1 { p: u64, q: u64 },
    /// Explicit generator lists (used for the order-20 Frobenius group).
    Explicit { degree: usize },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub constructor: Constructor,
    pub group: Group,
}

/// Z/n as the n-cycle (the trivial group for n = 1).
pub fn cyclic(n: usize) -> Group {
    assert!(n >= 1);
    if n == 1 {
        return Group::trivial(1);
    }
    let cycle: Vec<usize> = (0..n).collect();
    close(n, vec![Permutation::from_cycles(n, &[&cycle])]).expect("cyclic group is tiny")
}

/// Dihedral group of order 2n acting on the vertices of the n-gon (n ≥ 3).
pub fn dihedral(n: usize) -> Group {
    assert!(n >= 3, "the vertex realization needs n >= 3");
    let rotation: Vec<usize> = (0..n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    close(
        n,
        vec![
            Permutation::from_cycles(n, &[&rotation]),
            Permutation::new(reflection).expect("reflection is a bijection"),
        ],
    )
    .expect("dihedral group is tiny")
}

pub fn symmetric(n: usize) -> Group {
    assert!(n >= 1);
    if n == 1 {
        return Group::trivial(1);
    }
    let cycle: Vec<usize> = (0..n).collect();
    close(
        n,
        vec![
            Permutation::from_cycles(n, &[&cycle]),
            Permutation::from_cycles(n, &[&[0, 1]]),
        ],
    )
    .expect("catalog symmetric groups stay under the cap")
}

/// A_n, generated by the 3-cycles (0 1 k).
pub fn alternating(n: usize) -> Group {
    assert!(n >= 3);
    let gens: Vec<Permutation> = (2..n)
        .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]))
        .collect();
    close(n, gens).expect("catalog alternating groups stay under the cap")
}

/// Multiplication in the generalized quaternion group of order 2^k ≥ 8,
/// with elements a^i b^j encoded as i + (order/2)·j.
pub(crate) fn quaternion_mul(order: usize, x: usize, y: usize) -> usize {
    let m = order / 2; // order of a
    let (i1, j1) = (x % m, x / m);
    let (i2, j2) = (y % m, y / m);
    if j1 == 0 {
        (i1 + i2) % m + m * j2
    } else if j2 == 0 {
        // (a^i1 b) a^i2 = a^{i1-i2} b
        (i1 + m - i2) % m + m
    } else {
        // (a^i1 b)(a^i2 b) = a^{i1-i2} b^2 = a^{i1-i2+m/2}
        (i1 + m - i2 + m / 2) % m
    }
}

/// The generalized quaternion group of order 2^k ≥ 8 in its regular
/// representation, built from the multiplication table.
pub fn quaternion(order: usize) -> Group {
    assert!(order >= 8 && order.is_power_of_two());
    let left_mult = |x: usize| {
        let images: Vec<usize> = (0..order).map(|y| quaternion_mul(order, x, y)).collect();
        Permutation::new(images).expect("left multiplication permutes the table")
    };
    let a = left_mult(1);
    let b = left_mult(order / 2);
    let g = close(order, vec![a, b]).expect("quaternion group is tiny");
    assert_eq!(g.order() as usize, order);
    g
}

/// The Frobenius group of order 20: ⟨(0 1 2 3 4), (1 2 4 3)⟩.
pub fn frobenius20() -> Group {
    let g = close(
        5,
        vec![
            Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]),
            Permutation::from_cycles(5, &[&[1, 2, 4, 3]]),
        ],
    )
    .expect("F20 is tiny");
    assert_eq!(g.order(), 20);
    g
}

fn entry(id: &str, constructor: Constructor, group: Group) -> CatalogEntry {
    CatalogEntry {
        id: id.to_string(),
        constructor,
        group,
    }
}

/// The deterministic built-in catalog, filtered to |G| ≤ max_order.
///
/// Contains the cyclic groups up to C32, the dihedral series up to order 64,
/// the quaternion groups of order 8 and 16, S3, S4, A4, A5, the Frobenius
/// group of order 20, four V ⋊ Z/q families, and three direct products.
pub fn catalog(max_order: u64) -> Result<Vec<CatalogEntry>> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    for n in 1..=32 {
        entries.push(entry(&format!("C{n}"), Constructor::Cyclic(n), cyclic(n)));
    }
    for n in 3..=32 {
        entries.push(entry(&format!("D{n}"), Constructor::Dihedral(n), dihedral(n)));
    }
    for order in [8, 16] {
        entries.push(entry(
            &format!("Q{order}"),
            Constructor::Quaternion(order),
            quaternion(order),
        ));
    }
    entries.push(entry("S3", Constructor::Symmetric(3), symmetric(3)));
    entries.push(entry("S4", Constructor::Symmetric(4), symmetric(4)));
    entries.push(entry("A4", Constructor::Alternating(4), alternating(4)));
    entries.push(entry("A5", Constructor::Alternating(5), alternating(5)));
    entries.push(entry(
        "F20",
        Constructor::Explicit { degree: 5 },
        frobenius20(),
    ));
    for (p, q) in [(3, 2), (2, 3), (7, 3), (2, 7)] {
        entries.push(entry(
            &format!("lemma1_{p}_{q}"),
            Constructor::Lemma1 { p, q },
            build_lemma1_group(p, q)?,
        ));
    }
    entries.push(entry(
        "A4xC2",
        Constructor::DirectProduct(vec!["A4".into(), "C2".into()]),
        direct_product(&[&alternating(4), &cyclic(2)])?,
    ));
    entries.push(entry(
        "S3xS3",
        Constructor::DirectProduct(vec!["S3".into(), "S3".into()]),
        direct_product(&[&symmetric(3), &symmetric(3)])?,
    ));
    entries.push(entry(
        "S3xC4",
        Constructor::DirectProduct(vec!["S3".into(), "C4".into()]),
        direct_product(&[&symmetric(3), &cyclic(4)])?,
    ));
    entries.retain(|e| e.group.order() <= max_order);
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructed_orders_match() {
        for n in 1..=12 {
            assert_eq!(cyclic(n).order() as usize, n);
        }
        for n in 3..=10 {
            assert_eq!(dihedral(n).order() as usize, 2 * n, "D{n}");
        }
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(quaternion(8).order(), 8);
        assert_eq!(quaternion(16).order(), 16);
    }

    #[test]
    fn quaternion_groups_have_a_unique_involution() {
        for order in [8usize, 16] {
            let q = quaternion(order);
            let involutions = q
                .elements()
                .iter()
                .filter(|e| e.order() == 2)
                .count();
            assert_eq!(involutions, 1, "Q{order}");
            assert_eq!(q.center().order(), 2);
        }
        assert_eq!(quaternion(8).exponent(), 4);
    }

    #[test]
    fn catalog_filters_by_order() {
        let small = catalog(6).unwrap();
        let ids: Vec<&str> = small.iter().map(|e| e.id.as_str()).collect();
        for want in ["C1", "C2", "C3", "C4", "C5", "C6", "S3", "D3"] {
            assert!(ids.contains(&want), "missing {want}");
        }
        assert!(small.iter().all(|e| e.group.order() <= 6));
    }

    #[test]
    fn catalog_contains_the_required_entries_at_one_hundred() {
        let cat = catalog(100).unwrap();
        let find = |id: &str| cat.iter().find(|e| e.id == id).map(|e| e.group.order());
        assert_eq!(find("A5"), Some(60));
        assert_eq!(find("F20"), Some(20));
        assert_eq!(find("Q16"), Some(16));
        assert_eq!(find("lemma1_2_3"), Some(12));
        assert_eq!(find("lemma1_2_7"), Some(56));
        assert_eq!(find("lemma1_7_3"), Some(21));
        assert_eq!(find("lemma1_3_2"), Some(6));
        assert_eq!(find("A4xC2"), Some(24));
        assert_eq!(find("S3xS3"), Some(36));
        assert_eq!(find("S3xC4"), Some(24));
        assert_eq!(find("D32"), Some(64));
    }

    #[test]
    fn catalog_ids_are_unique_and_deterministic() {
        let a = catalog(100).unwrap();
        let b = catalog(100).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.group, y.group);
        }
        let mut ids: Vec<&String> = a.iter().map(|e| &e.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), a.len());
    }
}
