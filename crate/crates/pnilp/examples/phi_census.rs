//! Census of the φ statistic: for each catalog group, the exponent, the
//! number of elements attaining it, and where φ vanishes.
//!
//! ```bash
//! cargo run -p pnilp --example phi_census
//! ```

use pnilp::catalog::catalog;
use pnilp::criteria::phi;

fn main() -> pnilp::Result<()> {
    println!("{:<12} {:>6} {:>6} {:>6}  note", "group", "|G|", "exp", "phi");
    for entry in catalog(100)? {
        let g = &entry.group;
        let value = phi(g);
        let note = if value == 0 {
            "no element reaches the exponent"
        } else {
            ""
        };
        println!(
            "{:<12} {:>6} {:>6} {:>6}  {}",
            entry.id,
            g.order(),
            g.exponent(),
            value,
            note
        );
    }
    Ok(())
}
