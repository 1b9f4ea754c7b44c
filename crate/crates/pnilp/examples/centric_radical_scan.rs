//! Scan of the non-trivial p-subgroup classes of a group, flagging which are
//! p-centric (the center is Sylow in the centralizer) and which are
//! p-radical (the normalizer quotient is p-reduced). These are the subgroups
//! whose normalizers carry the decisive sections.
//!
//! ```bash
//! cargo run -p pnilp --example centric_radical_scan
//! ```

use pnilp::catalog::{alternating, symmetric};
use pnilp::criteria::{is_p_centric, is_p_radical};
use pnilp::structure::all_subgroups;

fn main() -> pnilp::Result<()> {
    for (name, group, p) in [
        ("S4", symmetric(4), 2u64),
        ("A4", alternating(4), 2),
        ("A5", alternating(5), 2),
        ("A5", alternating(5), 5),
    ] {
        println!("{name} at p = {p}:");
        println!(
            "{:>6} {:>6} {:>9} {:>9} {:>9}",
            "|Q|", "#conj", "centric", "radical", "|N_G(Q)|"
        );
        let inventory = all_subgroups(&group)?;
        for class in &inventory.classes {
            let q_sub = &class.representative;
            if q_sub.is_trivial() || !q_sub.is_p_group(p) {
                continue;
            }
            let centric = is_p_centric(&group, q_sub, p)?;
            let radical = is_p_radical(&group, q_sub, p)?;
            let normalizer = group.normalizer(q_sub)?;
            println!(
                "{:>6} {:>6} {:>9} {:>9} {:>9}",
                q_sub.order(),
                class.size,
                centric,
                radical,
                normalizer.order()
            );
        }
        println!();
    }
    Ok(())
}
