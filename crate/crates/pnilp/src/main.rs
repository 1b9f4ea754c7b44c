use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pnilp::arith::{is_prime, primes_dividing};
use pnilp::catalog::catalog;
use pnilp::criteria::{
    build_example_group, cond2_sections, cond3_centric, cond4_centric_radical,
    extract_lemma2_witness, is_p_nilpotent, phi, verify_corollary, verify_theorem,
};
use pnilp::error::{Error, Result};
use pnilp::io::{parse_group, write_group};
use pnilp::modrep::build_lemma1_group;
use pnilp::structure::{is_p_prime_reduced, sections, SectionMode, SectionScope};

#[derive(Parser)]
#[command(name = "pnilp", version, about = "p-nilpotency engine for small permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print exp(G) and phi(G) for a group file
    Phi {
        #[arg(long)]
        group: PathBuf,
    },
    /// Check one p-nilpotency condition for a group file
    Check {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        prime: u64,
        /// 1 = direct, 2 = sections of G, 3 = centric normalizers, 4 = centric+radical
        #[arg(long, default_value_t = 1)]
        level: u8,
    },
    /// Run the four-way verification over the built-in catalog
    Verify {
        #[arg(long)]
        max_order: u64,
        /// Write the reports as a JSON array to this path
        #[arg(long)]
        json: Option<PathBuf>,
        /// Quantify sections over all subgroups, not class representatives
        #[arg(long)]
        strict: bool,
    },
    /// Cross-check nilpotency against the all-sections phi test
    Corollary {
        #[arg(long)]
        max_order: u64,
    },
    /// Build groups and write them as group files
    Construct {
        #[command(subcommand)]
        what: ConstructCommand,
    },
    /// Extract certified sections
    Witness {
        #[command(subcommand)]
        what: WitnessCommand,
    },
    /// Tabulate the sections of a group
    Sections {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        prime: Option<u64>,
        /// Keep only sections K with O_{p'}(K) = 1 (requires --prime)
        #[arg(long)]
        reduced_only: bool,
    },
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// V ⋊ Z/q over the simple F_p[Z/q]-module
    Lemma1 {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Direct power K^s with phi > 0, O_{p'} = 1, not p-nilpotent
    Example {
        #[arg(long)]
        k: PathBuf,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum WitnessCommand {
    /// A p'-reduced section H with phi(H) = 0 from a normal p-subgroup
    Lemma2 {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        psub: PathBuf,
        #[arg(long)]
        prime: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn expect_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Phi { group } => {
            let g = parse_group(&group)?;
            println!("exp={} phi={}", g.exponent(), phi(&g));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { group, prime, level } => {
            expect_prime(prime)?;
            let g = parse_group(&group)?;
            let scope = SectionScope::Representatives;
            let (holds, witness) = match level {
                1 => (is_p_nilpotent(&g, prime), None),
                2 => cond2_sections(&g, prime, scope)?,
                3 => cond3_centric(&g, prime, scope)?,
                4 => cond4_centric_radical(&g, prime, scope)?,
                other => {
                    return Err(Error::Precondition(format!(
                        "level must be 1, 2, 3 or 4, got {other}"
                    )))
                }
            };
            match (holds, witness) {
                (true, _) => println!("true"),
                (false, Some(w)) => println!("false; witness: {}", w.description),
                (false, None) => println!("false; witness: no normal p-complement"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_order,
            json,
            strict,
        } => {
            let scope = if strict {
                SectionScope::AllSubgroups
            } else {
                SectionScope::Representatives
            };
            let mut reports = Vec::new();
            for entry in catalog(max_order)? {
                for p in primes_dividing(entry.group.order()) {
                    reports.push(verify_theorem(&entry.id, &entry.group, p, scope)?);
                }
            }
            reports.sort_by(|a, b| (&a.group_id, a.prime).cmp(&(&b.group_id, b.prime)));
            for r in &reports {
                println!(
                    "{:<12} order={:<4} p={:<2} b1={} b2={} b3={} b4={} agree={}",
                    r.group_id, r.order, r.prime, r.b1, r.b2, r.b3, r.b4, r.agree
                );
            }
            let agreeing = reports.iter().filter(|r| r.agree).count();
            println!("{agreeing}/{} reports agree", reports.len());
            if let Some(path) = json {
                let body = serde_json::to_string_pretty(&reports)
                    .expect("reports serialize to JSON");
                fs::write(path, body + "\n")?;
            }
            Ok(if agreeing == reports.len() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Corollary { max_order } => {
            let mut all_consistent = true;
            for entry in catalog(max_order)? {
                let out = verify_corollary(&entry.group)?;
                all_consistent &= out.consistent;
                println!(
                    "{:<12} order={:<4} nilpotent={} sections_pass={} consistent={}",
                    entry.id,
                    entry.group.order(),
                    out.nilpotent,
                    out.all_sections_pass,
                    out.consistent
                );
            }
            Ok(if all_consistent {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Construct { what } => match what {
            ConstructCommand::Lemma1 { p, q, out } => {
                let g = build_lemma1_group(p, q)?;
                write_group(&g, &out)?;
                println!("wrote {} (order {})", out.display(), g.order());
                Ok(ExitCode::SUCCESS)
            }
            ConstructCommand::Example { k, prime, out } => {
                expect_prime(prime)?;
                let k_group = parse_group(&k)?;
                let built = build_example_group(&k_group, prime)?;
                write_group(&built.group, &out)?;
                println!(
                    "wrote {} (order {}, {} copies, full-order element of order {})",
                    out.display(),
                    built.group.order(),
                    built.copies,
                    built.full_order_element.order()
                );
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Witness { what } => match what {
            WitnessCommand::Lemma2 { group, psub, prime } => {
                expect_prime(prime)?;
                let g = parse_group(&group)?;
                let p_sub = parse_group(&psub)?;
                let w = extract_lemma2_witness(&g, &p_sub, prime)?;
                println!(
                    "|H|={} phi(H)={} q={} module_dim={}",
                    w.group.order(),
                    phi(&w.group),
                    w.q,
                    w.module_dim
                );
                println!("generators (degree {}):", w.group.degree());
                for gen in w.group.generators() {
                    println!("{gen}");
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Sections {
            group,
            prime,
            reduced_only,
        } => {
            if let Some(p) = prime {
                expect_prime(p)?;
            }
            let g = parse_group(&group)?;
            let mode = if reduced_only {
                let p = prime.ok_or_else(|| {
                    Error::Precondition("--reduced-only requires --prime".into())
                })?;
                SectionMode::PPrimeReduced(p)
            } else {
                SectionMode::All
            };
            let secs = sections(&g, mode, SectionScope::Representatives)?;
            println!("{:>6} {:>6} {:>6} {:>12} {:>8}", "|H|", "|N|", "|K|", "O_p'-trivial", "phi(K)");
            for s in &secs {
                let reduced = match prime {
                    Some(p) => is_p_prime_reduced(&s.quotient, p).to_string(),
                    None => "-".to_string(),
                };
                println!(
                    "{:>6} {:>6} {:>6} {:>12} {:>8}",
                    s.subgroup.order(),
                    s.normal.order(),
                    s.quotient.order(),
                    reduced,
                    phi(&s.quotient)
                );
            }
            println!("{} sections", secs.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}
