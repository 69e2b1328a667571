use std::process::{Command, Output};

fn bncalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bncalc"))
        .args(args)
        .output()
        .expect("failed to launch bncalc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn invariants_json() {
    let o = bncalc(&["invariants", "--a", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim_end(),
        r#"{"a":"4","g":"9","genus_W":"169","exponent":"14","deg_gamma":"43","alpha":"21","beta":"-13","m":"258","dim_Z":"160","rho":"1"}"#
    );
}

#[test]
fn invariants_json_round_trips() {
    let o = bncalc(&["invariants", "--a", "37", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let a = v["a"].as_str().unwrap();
    let again = bncalc(&["invariants", "--a", a, "--format", "json"]);
    assert_eq!(stdout(&o), stdout(&again));
}

#[test]
fn invariants_plain_default() {
    let o = bncalc(&["invariants", "--a", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("genus_W = 11"));
}

#[test]
fn invariants_rejects_small_a() {
    let o = bncalc(&["invariants", "--a", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("a must be ≥ 2"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn unparsable_arguments() {
    for args in [
        &["invariants", "--a", "x"][..],
        &["invariants"],
        &["invariants", "--a", "3", "--format", "yaml"],
        &["table", "--a-min", "2"],
        &["frobnicate"],
        &[],
    ] {
        assert_eq!(bncalc(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn table_csv() {
    let o = bncalc(&["table", "--a-min", "2", "--a-max", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "a,g,genus_W,exponent,deg_gamma,alpha,beta,m,dim_Z,rho"
    );
    let deg: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(4).unwrap())
        .collect();
    assert_eq!(deg, ["1", "8", "43"]);

    let o = bncalc(&["table", "--a-min", "5", "--a-max", "5", "--format", "csv"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 2);
    assert_eq!(out.lines().nth(1).unwrap().split(',').nth(4), Some("199"));
}

#[test]
fn table_invalid_range() {
    assert_eq!(
        bncalc(&["table", "--a-min", "4", "--a-max", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bncalc(&["table", "--a-min", "1", "--a-max", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn csv_and_markdown_agree() {
    let csv = stdout(&bncalc(&[
        "table", "--a-min", "2", "--a-max", "10", "--format", "csv",
    ]));
    let md = stdout(&bncalc(&[
        "table", "--a-min", "2", "--a-max", "10", "--format", "markdown",
    ]));
    let csv_cells: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    let md_cells: Vec<Vec<&str>> = md
        .lines()
        .filter(|l| !l.starts_with("|---"))
        .map(|l| l.trim_matches('|').split('|').map(str::trim).collect())
        .collect();
    assert_eq!(csv_cells, md_cells);
}

#[test]
fn verify_full_range() {
    let o = bncalc(&["verify", "--a-min", "2", "--a-max", "200"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("12/12 checks, 0 failures"));
}

#[test]
fn verify_single_check_json() {
    let o = bncalc(&[
        "verify",
        "--a-min",
        "3",
        "--a-max",
        "3",
        "--check",
        "lemma-rel",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["all_passed"], true);
    let check = &v["checks"][0];
    assert_eq!(check["name"], "lemma-rel");
    assert_eq!(check["passes"], "1");
    assert_eq!(check["failures"].as_array().unwrap().len(), 0);
    assert_eq!(check["witness"]["lhs"], "35");
    assert_eq!(check["witness"]["rhs"], "35");
}

#[test]
fn verify_unknown_check() {
    let o = bncalc(&["verify", "--check", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(
        err.contains("lemma-rel") && err.contains("involution-specialization"),
        "{err}"
    );
}

#[test]
fn verify_repeated_checks() {
    let o = bncalc(&[
        "verify",
        "--a-min",
        "2",
        "--a-max",
        "9",
        "--check",
        "dim-z",
        "--check",
        "rho-is-one",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().nth(1).unwrap().starts_with("dim-z,9,pass,"));
}

#[test]
fn example_genus9() {
    let o = bncalc(&["example", "genus9"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for row in [
        ["genus_W", "169", "169", "✓"],
        ["exponent", "14", "14", "✓"],
    ] {
        let line = out.lines().find(|l| l.starts_with(row[0])).unwrap();
        assert_eq!(line.split_whitespace().collect::<Vec<_>>(), row);
    }
    let line = out.lines().find(|l| l.starts_with("secant_sum")).unwrap();
    assert_eq!(line.matches("M^30 ω^-8").count(), 2);
    assert!(line.ends_with('✓'));
}

#[test]
fn example_genus7_json() {
    let o = bncalc(&["example", "genus7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["all_matched"], true);
    let m = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["label"] == "m")
        .unwrap();
    assert_eq!(
        (
            m["computed"].as_str(),
            m["expected"].as_str(),
            m["match"].as_bool()
        ),
        (Some("40"), Some("40"), Some(true))
    );
}

#[test]
fn example_unknown() {
    assert_eq!(bncalc(&["example", "genus10"]).status.code(), Some(2));
    assert_eq!(bncalc(&["example", "genus8"]).status.code(), Some(2));
}

#[test]
fn help_is_not_an_error() {
    assert_eq!(bncalc(&["--help"]).status.code(), Some(0));
}
