use std::path::Path;
use std::process::{Command, Output};

use redei::construct::{cells_from_json, CellRecord};
use redei::{SparsePoly, TableCell};

/// Runs the binary on a whitespace-separated command line plus extra
/// arguments (for paths).
fn redei_with(cmd: &str, extra: &[&str], cap: Option<&str>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_redei"));
    c.args(cmd.split_whitespace()).args(extra);
    match cap {
        Some(v) => c.env("REDEI_EXHAUST_CAP", v),
        None => c.env_remove("REDEI_EXHAUST_CAP"),
    };
    c.output().expect("binary runs")
}

fn redei(cmd: &str) -> Output {
    redei_with(cmd, &[], None)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn data_dir() -> std::path::PathBuf {
    redei::cli::default_data_dir()
}

#[test]
fn construct_permuting_cell() {
    let o = redei("construct --t 3 --n 5 --m 2 --family M");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^51 + x^30 + x^23\npredicate: permutes\n");
}

#[test]
fn construct_excluded_cell_exits_2() {
    let o = redei("construct --t 3 --n 1 --m 3 --family M");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "x^28\nexcluded: gcd(n+m(q+1), q-1) = 7\n");
}

#[test]
fn construct_family_n() {
    let o = redei("construct --t 3 --n 1 --m 1 --family N");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("x^17\n"));
}

#[test]
fn text_output_round_trips_through_parser() {
    let o = redei("construct --t 5 --n 13 --m 2 --family N");
    let first = stdout(&o).lines().next().unwrap().to_string();
    let poly: SparsePoly = first.parse().unwrap();
    assert_eq!(poly.to_string(), first);
    assert_eq!(poly.exponents(), vec![482, 327, 234, 203, 110]);
}

#[test]
fn json_output_matches_cell_schema() {
    let o = redei("construct --t 3 --n 5 --m 2 --family M --format json");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out.trim_end(),
        r#"{"t":3,"n":5,"m":2,"family":"M","status":"permutes","poly":"x^51 + x^30 + x^23","exponents":[51,30,23]}"#
    );
    let rec: CellRecord = serde_json::from_str(&out).unwrap();
    assert!(!TableCell::from_record(&rec).unwrap().is_excluded());

    let o = redei("construct --t 3 --n 1 --m 3 --family M --format json");
    assert_eq!(o.status.code(), Some(2));
    let rec: CellRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rec.status, "excluded");
    assert_eq!(rec.reason.as_deref(), Some("gcd(n+m(q+1),q-1)=7"));
    assert!(TableCell::from_record(&rec).unwrap().is_excluded());
}

#[test]
fn usage_errors_exit_64() {
    let cases = [
        "",
        "construct --t 3",
        "construct --t 3 --n 5 --m 2 --family Q",
        "construct --t 4 --n 5 --m 2 --family M",
        "construct --t 3 --n 5 --m 0 --family M",
        "construct --t 3 --n 5 --m 2 --family M --modulus 1111",
        "construct --t 3 --n 5 --m 2 --family M --format yaml",
        "lemmas --t 4",
        "frobnicate",
    ];
    for cmd in cases {
        let o = redei(cmd);
        assert_eq!(o.status.code(), Some(64), "{cmd:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
    assert!(stderr(&redei("lemmas --t 4")).contains("invalid extension degree 4"));
}

#[test]
fn help_and_version_exit_0() {
    let o = redei("--help");
    assert_eq!(o.status.code(), Some(0));
    for sub in ["construct", "verify", "table", "lemmas", "selftest"] {
        assert!(stdout(&o).contains(sub));
    }
    assert_eq!(redei("--version").status.code(), Some(0));
}

#[test]
fn explicit_modulus() {
    // x^3 + x^2 + 1 instead of the default x^3 + x + 1: same exponents.
    let o = redei("construct --t 3 --n 5 --m 2 --family M --modulus 1101");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("x^51 + x^30 + x^23\n"));
    let o = redei("verify --t 3 --n 5 --m 2 --family M --modulus 1101");
    assert_eq!(stdout(&o), "predicate=true bruteforce=true agree=true\n");
}

#[test]
fn verify_agrees() {
    let o = redei("verify --t 3 --n 5 --m 2 --family M");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "predicate=true bruteforce=true agree=true\n");
    let o = redei("verify --t 3 --n 1 --m 3 --family M");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "predicate=false bruteforce=false agree=true\n");
}

#[test]
fn verify_refuses_large_fields() {
    let o = redei("verify --t 13 --n 1 --m 1 --family M");
    assert_eq!(o.status.code(), Some(69));
    assert!(stderr(&o).contains("REDEI_EXHAUST_CAP"));

    let o = redei_with("verify --t 5 --n 7 --m 1 --family M", &[], Some("1000"));
    assert_eq!(o.status.code(), Some(69));
    let o = redei_with("verify --t 5 --n 7 --m 1 --family M", &[], Some("1024"));
    assert_eq!(o.status.code(), Some(0));
    let o = redei_with(
        "verify --t 5 --n 7 --m 1 --family M --cap 1024",
        &[],
        Some("10"),
    );
    assert_eq!(o.status.code(), Some(0), "flag wins over environment");
    let o = redei_with("verify --t 3 --n 5 --m 2 --family M", &[], Some("lots"));
    assert_eq!(o.status.code(), Some(64));
    assert_eq!(redei("lemmas --t 5 --cap 100").status.code(), Some(69));
}

#[test]
fn table_reproduces_golden_files_byte_for_byte() {
    for (family, file) in [("M", "table1.json"), ("N", "table2.json")] {
        let o = redei(&format!("table --t 3 --family {family}"));
        assert_eq!(o.status.code(), Some(0));
        let golden = std::fs::read_to_string(data_dir().join(file)).unwrap();
        assert_eq!(stdout(&o), golden, "{file}");
    }
}

#[test]
fn table_rows_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t3.json");
    let cmd = "table --t 5 --family M --rows 7,13,34 --m-max 3 --out";
    let o = redei_with(cmd, &[path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let golden_text = std::fs::read_to_string(data_dir().join("table3.json")).unwrap();
    assert_eq!(written, golden_text);

    // --n-max filters rows by the n-only conditions
    let o = redei("table --t 5 --family M --n-max 34 --m-max 3");
    let cells = cells_from_json(&stdout(&o)).unwrap();
    let rows: std::collections::BTreeSet<u64> = cells.iter().map(|c| c.params.n).collect();
    assert!(rows.contains(&7) && rows.contains(&13) && rows.contains(&34));
    assert!(!rows.contains(&3) && !rows.contains(&11));
    let golden = cells_from_json(&written).unwrap();
    let restricted: Vec<_> = cells
        .into_iter()
        .filter(|c| [7, 13, 34].contains(&c.params.n))
        .collect();
    assert_eq!(restricted, golden);
}

#[test]
fn table_io_error_exits_74() {
    let o = redei("table --t 3 --family M --out /nonexistent-dir/x.json");
    assert_eq!(o.status.code(), Some(74));
}

#[test]
fn lemmas_pass() {
    for cmd in ["lemmas --t 3 --n-max 21", "lemmas --t 5 --n-max 34"] {
        let o = redei(cmd);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        let out = stdout(&o);
        assert!(out.lines().count() >= 9);
        assert!(out.lines().all(|l| l.starts_with("[PASS] ")));
    }
}

#[test]
fn selftest_ok_and_deterministic() {
    let a = redei("selftest");
    assert_eq!(a.status.code(), Some(0));
    let out = stdout(&a);
    assert!(
        out.starts_with("OK: ") && out.ends_with(" checks passed\n"),
        "{out}"
    );
    let b = redei("selftest");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn deterministic_table_output() {
    let a = redei("table --t 5 --family N");
    let b = redei("table --t 5 --family N");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

fn copy_golden(dst: &Path) {
    for f in ["table1.json", "table2.json"] {
        std::fs::copy(data_dir().join(f), dst.join(f)).unwrap();
    }
}

fn selftest_in(dir: &Path) -> Output {
    redei_with("selftest --data-dir", &[dir.to_str().unwrap()], None)
}

#[test]
fn corrupted_golden_file_names_the_cell() {
    let dir = tempfile::tempdir().unwrap();
    copy_golden(dir.path());
    let p = dir.path().join("table1.json");
    let text = std::fs::read_to_string(&p).unwrap();
    let corrupted = text.replace(
        r#""poly":"x^61 + x^33 + x^12","exponents":[61,33,12]"#,
        r#""poly":"x^62 + x^33 + x^12","exponents":[62,33,12]"#,
    );
    assert_ne!(text, corrupted);
    std::fs::write(&p, corrupted).unwrap();

    let o = selftest_in(dir.path());
    assert_eq!(o.status.code(), Some(65));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] golden"), "{out}");
    assert!(out.contains("table1.json"));
    assert!(out.contains("n=13 m=3"));
    assert!(out.contains("x^62 + x^33 + x^12"));
    assert!(out.contains("FAILED: 1 of"));
}

#[test]
fn malformed_golden_file_fails() {
    let dir = tempfile::tempdir().unwrap();
    copy_golden(dir.path());
    std::fs::write(dir.path().join("table2.json"), r#"[{"t":3}]"#).unwrap();
    let o = selftest_in(dir.path());
    assert_eq!(o.status.code(), Some(65));
    assert!(stdout(&o).contains("table2.json"));

    let o = selftest_in(&dir.path().join("nothing-here"));
    assert_eq!(o.status.code(), Some(65));
}

#[test]
fn in_process_runner_matches_binary() {
    let cmd = "construct --t 3 --n 10 --m 2 --family M";
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("redei").chain(cmd.split_whitespace());
    let code = redei::cli::run(argv, &mut out, &mut err);
    assert_eq!(code, redei::cli::EXIT_PREDICATE_FALSE);
    assert_eq!(out, redei(cmd).stdout);
}
