//! Structural atlas for a few groups: complete subgroup inventory, conjugacy
//! classes, Sylow subgroups, the cores O_p and O_{p'}, and the Frattini
//! subgroup where it applies.
//!
//! ```bash
//! cargo run -p pnilp --example subgroup_atlas
//! ```

use pnilp::arith::primes_dividing;
use pnilp::catalog::{alternating, dihedral, quaternion, symmetric};
use pnilp::structure::{all_subgroups, frattini, o_p, o_p_prime, sylow};

fn main() -> pnilp::Result<()> {
    for (name, group) in [
        ("S3", symmetric(3)),
        ("A4", alternating(4)),
        ("S4", symmetric(4)),
        ("D8 (order 16)", dihedral(8)),
        ("Q8", quaternion(8)),
        ("A5", alternating(5)),
    ] {
        let inventory = all_subgroups(&group)?;
        println!(
            "{name}: |G| = {}, {} subgroups in {} conjugacy classes",
            group.order(),
            inventory.all.len(),
            inventory.classes.len()
        );
        let mut class_line: Vec<String> = Vec::new();
        for class in &inventory.classes {
            class_line.push(format!(
                "{}x{}",
                class.size,
                class.representative.order()
            ));
        }
        println!("  classes (count x order): {}", class_line.join(", "));
        for p in primes_dividing(group.order()) {
            println!(
                "  p = {p}: |Syl_p| = {}, |O_p| = {}, |O_p'| = {}",
                sylow(&group, p).order(),
                o_p(&group, p).order(),
                o_p_prime(&group, p).order()
            );
        }
        if let Ok(phi_sub) = frattini(&group) {
            println!("  |Φ(G)| = {}", phi_sub.order());
        }
        println!();
    }
    Ok(())
}
