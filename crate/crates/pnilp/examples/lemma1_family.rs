//! Builds V ⋊ Z/q for simple F_p[Z/q]-modules V and demonstrates that no
//! element reaches the exponent pq: any such element would force a trivial
//! submodule inside V.
//!
//! ```bash
//! cargo run -p pnilp --example lemma1_family
//! ```

use pnilp::criteria::phi;
use pnilp::modrep::{build_simple_module, semidirect_product};

fn main() -> pnilp::Result<()> {
    println!(
        "{:>3} {:>3} {:>4} {:>7} {:>6} {:>4}",
        "p", "q", "dim", "|G|", "exp", "phi"
    );
    for (p, q) in [(3, 2), (2, 3), (5, 2), (7, 3), (2, 7), (3, 13)] {
        let module = build_simple_module(p, q)?;
        let group = semidirect_product(&module)?;
        println!(
            "{:>3} {:>3} {:>4} {:>7} {:>6} {:>4}",
            p,
            q,
            module.dim(),
            group.order(),
            group.exponent(),
            phi(&group)
        );
        assert_eq!(group.exponent(), p * q);
        assert_eq!(phi(&group), 0);
    }
    println!("\nevery member has exponent pq and phi = 0");
    Ok(())
}
