//! A finite permutation-group engine that decides p-nilpotency four
//! independent ways and cross-checks the verdicts.
//!
//! The engine closes small permutation groups exhaustively and then decides
//! p-nilpotency:
//!
//! 1. directly, via the normal p-complement O_{p'}(G);
//! 2. by checking φ(K) ≠ 0 for every p'-reduced section K of G, where φ
//!    counts elements whose order equals the group exponent;
//! 3. by the same φ test on sections of N_G(Q) for every p-centric
//!    p-subgroup Q;
//! 4. likewise, restricted further to p-centric and p-radical Q.
//!
//! The four answers must always coincide; [`criteria::verify_theorem`] runs
//! them independently over a built-in catalog and reports any disagreement
//! together with self-certifying witnesses. The module layer constructs the
//! groups V ⋊ Z/q over simple F_p[Z/q]-modules (these have φ = 0), extracts
//! such a section from any suitable normal p-subgroup, and assembles the
//! direct-power counterexample showing that φ(G) ≠ 0 with O_{p'}(G) = 1 does
//! not imply p-nilpotency.
//!
//! ## Library tour
//!
//! - [`perm`] / [`group`] — permutation arithmetic; closure, centralizers,
//!   normalizers, coset actions.
//! - [`structure`] — subgroup inventory, Sylow subgroups, the cores O_p and
//!   O_{p'}, Frattini subgroups, section enumeration.
//! - [`modrep`] — F_p linear algebra, simple F_p[Z/q]-modules, semidirect
//!   products, the averaging splitting, induced Frattini-quotient actions.
//! - [`criteria`] — φ, the four p-nilpotency criteria, reports, witness
//!   extraction, the counterexample construction.
//! - [`catalog`] / [`io`] — built-in groups and the group file format.
//! - [`oracle`] — brute-force reference computations for cross-checks.
//!
//! ## Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p pnilp --example phi_census              # φ and exp over the catalog
//! cargo run -p pnilp --example theorem_verification    # the four verdicts, side by side
//! cargo run -p pnilp --example lemma1_family           # V ⋊ Z/q groups with φ = 0
//! cargo run -p pnilp --example lemma2_witness          # constructive section extraction
//! cargo run -p pnilp --example counterexample_product  # the direct-power counterexample
//! cargo run -p pnilp --example sections_table          # all sections of one group
//! cargo run -p pnilp --example subgroup_atlas          # inventory, Sylow, cores, Frattini
//! cargo run -p pnilp --example centric_radical_scan    # p-centric / p-radical subgroups
//! ```
//!
//! ## Command line
//!
//! A thin `pnilp` binary exposes the same machinery on group files; see the
//! README for the subcommand reference (`phi`, `check`, `verify`,
//! `corollary`, `construct`, `witness`, `sections`).

pub mod arith;
pub mod catalog;
pub mod criteria;
pub mod error;
pub mod group;
pub mod io;
pub mod modrep;
pub mod oracle;
pub mod perm;
pub mod structure;

pub use error::{Error, Result};
pub use group::{close, close_with_cap, coset_action, direct_product, CosetMap, Group};
pub use perm::Permutation;
