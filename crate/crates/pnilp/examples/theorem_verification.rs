//! The headline check: decide p-nilpotency four independent ways for every
//! catalog group and prime, and confirm the verdicts coincide.
//!
//! b1 — normal p-complement exists (|O_{p'}(G)| · |Syl_p(G)| = |G|)
//! b2 — φ(K) ≠ 0 for every p'-reduced section K of G
//! b3 — the same, over sections of N_G(Q) for p-centric Q
//! b4 — the same, restricted to p-centric p-radical Q
//!
//! ```bash
//! cargo run -p pnilp --example theorem_verification
//! ```

use pnilp::arith::primes_dividing;
use pnilp::catalog::catalog;
use pnilp::criteria::verify_theorem;
use pnilp::structure::SectionScope;

fn main() -> pnilp::Result<()> {
    let mut disagreements = 0;
    let mut total = 0;
    println!("{:<12} {:>5} {:>3}  b1 b2 b3 b4  agree", "group", "|G|", "p");
    for entry in catalog(100)? {
        for p in primes_dividing(entry.group.order()) {
            let report = verify_theorem(&entry.id, &entry.group, p, SectionScope::Representatives)?;
            total += 1;
            if !report.agree {
                disagreements += 1;
            }
            println!(
                "{:<12} {:>5} {:>3}  {:<5} {:<5} {:<5} {:<5} {}",
                report.group_id,
                report.order,
                report.prime,
                report.b1,
                report.b2,
                report.b3,
                report.b4,
                if report.agree { "yes" } else { "NO" }
            );
            if let Some(w) = &report.witness {
                println!("{:12} witness: {}", "", w.description);
            }
        }
    }
    println!("\n{total} reports, {disagreements} disagreements");
    Ok(())
}
