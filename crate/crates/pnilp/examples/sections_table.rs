//! All sections of S4 (up to conjugacy of the top subgroup), with the data
//! the p-nilpotency criteria consume: quotient order, p'-reducedness, φ.
//!
//! ```bash
//! cargo run -p pnilp --example sections_table
//! ```

use pnilp::catalog::symmetric;
use pnilp::criteria::phi;
use pnilp::structure::{is_p_prime_reduced, sections, SectionMode, SectionScope};

fn main() -> pnilp::Result<()> {
    let g = symmetric(4);
    let p = 2;
    let all = sections(&g, SectionMode::All, SectionScope::Representatives)?;
    println!("sections H/N of S4 over subgroup-class representatives:");
    println!(
        "{:>5} {:>5} {:>5} {:>12} {:>6}",
        "|H|", "|N|", "|K|", "2'-reduced", "phi(K)"
    );
    for s in &all {
        println!(
            "{:>5} {:>5} {:>5} {:>12} {:>6}",
            s.subgroup.order(),
            s.normal.order(),
            s.quotient.order(),
            is_p_prime_reduced(&s.quotient, p),
            phi(&s.quotient)
        );
    }
    let reduced = sections(&g, SectionMode::PPrimeReduced(p), SectionScope::Representatives)?;
    let failing = reduced
        .iter()
        .filter(|s| phi(&s.quotient) == 0)
        .count();
    println!(
        "\n{} sections, {} of them {p}'-reduced, {failing} with phi = 0",
        all.len(),
        reduced.len()
    );
    println!("(S4 is 2-nilpotent iff that last count is zero — it is not)");
    Ok(())
}
