//! φ(G) ≠ 0 with O_{p'}(G) = 1 does not imply p-nilpotency: starting from a
//! p'-reduced group K with φ(K) = 0, the direct product of one copy of K per
//! prime of exp(K) acquires an element of full order while staying
//! p'-reduced and non-p-nilpotent.
//!
//! ```bash
//! cargo run -p pnilp --example counterexample_product
//! ```

use pnilp::catalog::{alternating, symmetric};
use pnilp::criteria::{build_example_group, is_p_nilpotent, phi};
use pnilp::structure::o_p_prime;

fn main() -> pnilp::Result<()> {
    for (name, k, p) in [("A4", alternating(4), 2), ("S3", symmetric(3), 3)] {
        println!("K = {name}, p = {p}: |K| = {}, exp(K) = {}, phi(K) = {}",
            k.order(), k.exponent(), phi(&k));
        let built = build_example_group(&k, p)?;
        let g = &built.group;
        println!("  G = K^{}: |G| = {}, exp(G) = {}", built.copies, g.order(), g.exponent());
        println!(
            "  full-order element ({}): order {}",
            built.full_order_element,
            built.full_order_element.order()
        );
        println!(
            "  phi(G) = {}, |O_{p}'(G)| = {}, {p}-nilpotent: {}",
            phi(g),
            o_p_prime(g, p).order(),
            is_p_nilpotent(g, p)
        );
        println!();
    }
    Ok(())
}
