//! End-to-end tests of the `pnilp` binary: exact output formats, the JSON
//! report schema, witness self-certification, exit codes, and the element
//! cap override.

use std::path::Path;
use std::process::{Command, Output};

use pnilp::criteria::phi;
use pnilp::io::parse_group;
use pnilp::structure::is_p_prime_reduced;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pnilp"))
}

fn write(dir: &Path, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const S3: &str = "3\n1 2 0\n1 0 2\n";
const S4: &str = "4\n1 2 3 0\n1 0 2 3\n";
const A4: &str = "4\n# generated by two 3-cycles\n1 2 0 3\n0 2 3 1\n";
const V4: &str = "4\n1 0 3 2\n2 3 0 1\n";
const Q8: &str = "8\n1 2 3 0 5 6 7 4\n4 7 6 5 2 1 0 3\n";

#[test]
fn phi_reports_exponent_and_count_for_q8() {
    let dir = tempfile::tempdir().unwrap();
    // sanity: the embedded generators really produce the quaternion group
    let q8 = pnilp::io::parse_group_str(Q8).unwrap();
    assert_eq!(q8.order(), 8);
    assert_eq!(q8.elements().iter().filter(|e| e.order() == 2).count(), 1);

    let path = write(dir.path(), "q8.grp", Q8);
    let out = bin().args(["phi", "--group"]).arg(&path).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "exp=4 phi=6\n");
}

#[test]
fn check_levels_report_verdicts_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "s3.grp", S3);

    let out = bin()
        .args(["check", "--prime", "3", "--level", "2", "--group"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("false; witness:"), "got {text:?}");
    assert!(text.contains("phi(K)=0"));
    assert!(text.contains("|H|=6"));

    let out = bin()
        .args(["check", "--prime", "2", "--group"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "true\n");

    for level in ["1", "3", "4"] {
        let out = bin()
            .args(["check", "--prime", "3", "--level", level, "--group"])
            .arg(&path)
            .output()
            .unwrap();
        assert!(stdout(&out).starts_with("false"), "level {level}");
    }
}

#[test]
fn verify_emits_stable_schema_conformant_json() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("reports.json");
    let out = bin()
        .args(["verify", "--max-order", "24", "--json"])
        .arg(&json_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("reports agree"));

    let first = std::fs::read(&json_path).unwrap();
    let parsed: serde_json::Value = serde_json::from_slice(&first).unwrap();
    let reports = parsed.as_array().unwrap();
    assert!(!reports.is_empty());
    let expected_keys = [
        "group_id", "order", "prime", "b1", "b2", "b3", "b4", "agree", "witness",
    ];
    for report in reports {
        let object = report.as_object().unwrap();
        assert_eq!(object.len(), expected_keys.len());
        for key in expected_keys {
            assert!(object.contains_key(key), "missing {key}");
        }
        assert_eq!(report["agree"], serde_json::Value::Bool(true));
        if let Some(witness) = report["witness"].as_object() {
            let mut keys: Vec<&String> = witness.keys().collect();
            keys.sort();
            assert_eq!(keys, ["description", "h_gens", "n_gens"]);
        }
    }
    // reports are sorted by (group_id, prime)
    let ids: Vec<(String, u64)> = reports
        .iter()
        .map(|r| (r["group_id"].as_str().unwrap().to_owned(), r["prime"].as_u64().unwrap()))
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);

    // byte-stable across runs
    let second_path = dir.path().join("again.json");
    bin()
        .args(["verify", "--max-order", "24", "--json"])
        .arg(&second_path)
        .output()
        .unwrap();
    assert_eq!(first, std::fs::read(&second_path).unwrap());
}

#[test]
fn verify_witnesses_recheck_from_their_generators() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("reports.json");
    bin()
        .args(["verify", "--max-order", "30", "--json"])
        .arg(&json_path)
        .output()
        .unwrap();
    let parsed: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&json_path).unwrap()).unwrap();
    let mut rechecked = 0;
    for report in parsed.as_array().unwrap() {
        let Some(witness) = report["witness"].as_object() else {
            continue;
        };
        let prime = report["prime"].as_u64().unwrap();
        let decode = |key: &str| -> pnilp::Group {
            let rows: Vec<Vec<usize>> = witness[key]
                .as_array()
                .unwrap()
                .iter()
                .map(|row| {
                    row.as_array()
                        .unwrap()
                        .iter()
                        .map(|v| v.as_u64().unwrap() as usize)
                        .collect()
                })
                .collect();
            let degree = rows[0].len();
            let gens = rows
                .into_iter()
                .map(|images| pnilp::Permutation::new(images).unwrap())
                .collect();
            pnilp::close(degree, gens).unwrap()
        };
        let h = decode("h_gens");
        let n = decode("n_gens");
        let quotient = pnilp::coset_action(&h, &n).unwrap();
        // the recorded violation: a p'-reduced section with phi = 0
        assert_eq!(phi(&quotient), 0);
        assert!(is_p_prime_reduced(&quotient, prime));
        rechecked += 1;
    }
    assert!(rechecked > 0, "the sweep must produce some witnesses");
}

#[test]
fn verify_full_default_catalog_agrees() {
    // the headline check: every report over the whole built-in catalog agrees
    let out = bin().args(["verify", "--max-order", "100"]).output().unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    assert!(last.ends_with("reports agree"), "got {last:?}");
    let (agreeing, total) = last
        .split_once('/')
        .map(|(a, rest)| (a.parse::<u32>().unwrap(), rest.split(' ').next().unwrap().parse::<u32>().unwrap()))
        .unwrap();
    assert_eq!(agreeing, total);
    assert!(total > 100);
}

#[test]
fn verify_strict_scope_agrees_on_small_orders() {
    let out = bin()
        .args(["verify", "--max-order", "12", "--strict"])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
}

#[test]
fn corollary_runs_consistently() {
    let out = bin()
        .args(["corollary", "--max-order", "16"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("consistent=true"));
    assert!(!text.contains("consistent=false"));
}

#[test]
fn construct_lemma1_writes_a_parsable_group() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("l1.grp");
    let out = bin()
        .args(["construct", "lemma1", "--p", "3", "--q", "2", "--out"])
        .arg(&out_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("order 6"));
    let g = parse_group(&out_path).unwrap();
    assert_eq!(g.order(), 6);
    assert_eq!(phi(&g), 0);
}

#[test]
fn construct_lemma1_rejects_equal_primes() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("bad.grp");
    let out = bin()
        .args(["construct", "lemma1", "--p", "3", "--q", "3", "--out"])
        .arg(&out_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.starts_with("error: "), "got {err:?}");
    assert_eq!(err.lines().count(), 1, "single-line error");
    assert!(!out_path.exists());
}

#[test]
fn construct_example_builds_the_order_144_product() {
    let dir = tempfile::tempdir().unwrap();
    let a4_path = write(dir.path(), "a4.grp", A4);
    let out_path = dir.path().join("product.grp");
    let out = bin()
        .args(["construct", "example", "--prime", "2", "--k"])
        .arg(&a4_path)
        .arg("--out")
        .arg(&out_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("order 144"));
    let g = parse_group(&out_path).unwrap();
    assert_eq!(g.order(), 144);
    assert!(phi(&g) > 0);
}

#[test]
fn construct_example_rejects_cyclic_input() {
    let dir = tempfile::tempdir().unwrap();
    let z4 = write(dir.path(), "z4.grp", "4\n1 2 3 0\n");
    let out = bin()
        .args(["construct", "example", "--prime", "2", "--k"])
        .arg(&z4)
        .arg("--out")
        .arg(dir.path().join("no.grp"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("precondition"));
}

#[test]
fn witness_lemma2_prints_the_constructed_section() {
    let dir = tempfile::tempdir().unwrap();
    let s4_path = write(dir.path(), "s4.grp", S4);
    let v4_path = write(dir.path(), "v4.grp", V4);
    let out = bin()
        .args(["witness", "lemma2", "--prime", "2", "--group"])
        .arg(&s4_path)
        .arg("--psub")
        .arg(&v4_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("|H|=12 phi(H)=0 q=3"), "got {text:?}");
    assert!(text.contains("generators"));
}

#[test]
fn witness_lemma2_names_the_violated_hypothesis() {
    let dir = tempfile::tempdir().unwrap();
    let z12 = write(dir.path(), "z12.grp", "12\n1 2 3 4 5 6 7 8 9 10 11 0\n");
    let c4 = write(dir.path(), "c4.grp", "12\n3 4 5 6 7 8 9 10 11 0 1 2\n");
    let out = bin()
        .args(["witness", "lemma2", "--prime", "2", "--group"])
        .arg(&z12)
        .arg("--psub")
        .arg(&c4)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("hypothesis violated"));
}

#[test]
fn sections_tabulates_reduced_sections() {
    let dir = tempfile::tempdir().unwrap();
    let s3_path = write(dir.path(), "s3.grp", S3);
    let out = bin()
        .args(["sections", "--prime", "3", "--reduced-only", "--group"])
        .arg(&s3_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("phi(K)"));
    // S3/1 appears with phi 0
    assert!(text.lines().any(|l| l.contains('6') && l.trim_end().ends_with('0')));

    let out = bin()
        .args(["sections", "--reduced-only", "--group"])
        .arg(&s3_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "--reduced-only needs --prime");
}

#[test]
fn parse_errors_carry_line_numbers_and_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.grp", "3\n1 2 0\n0 0 1\n");
    let out = bin().args(["phi", "--group"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 3"));
}

#[test]
fn oversized_closures_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    // S8 has order 40320, past the default element cap
    let s8 = write(dir.path(), "s8.grp", "8\n1 2 3 4 5 6 7 0\n1 0 2 3 4 5 6 7\n");
    let out = bin().args(["phi", "--group"]).arg(&s8).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("too large"));

    // the cap is configurable through the environment
    let out = bin()
        .env("PNILP_ELEMENT_CAP", "50000")
        .args(["phi", "--group"])
        .arg(&s8)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "exp=840 phi=0\n");
}
