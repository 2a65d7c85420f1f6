use std::path::Path;
use std::process::{Command, Output};

fn cwl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cwl"))
        .args(args)
        .output()
        .expect("cwl binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_reports_borders_and_flags() {
    let o = cwl(&["classify", "alfalfa"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("borders: alfa a"), "{text}");
    assert!(text.contains("closed: yes (alfa)"), "{text}");
    assert!(text.contains("privileged: yes"), "{text}");
    assert!(text.contains("autocorrelation: 1001001"), "{text}");
    assert!(text.contains("f(2): 73"), "{text}");

    let o = cwl(&["classify", "eerie"]);
    assert!(stdout(&o).contains("closed: no"));
}

#[test]
fn classify_rejects_bad_input() {
    assert_eq!(cwl(&["classify", "ab-c"]).status.code(), Some(2));
    assert_eq!(cwl(&["classify", "abc", "--k", "2"]).status.code(), Some(2));
    assert_eq!(cwl(&["classify"]).status.code(), Some(2));
}

#[test]
fn small_table_csv() {
    let o = cwl(&["tables", "--kind", "closed", "--n", "2..5", "--no-cache"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "n,t,count");
    let four: Vec<&str> = rows
        .iter()
        .copied()
        .filter(|r| r.starts_with("4,"))
        .collect();
    assert_eq!(four, ["4,1,2", "4,2,2", "4,3,2"]);
    let mut sorted = rows[1..].to_vec();
    sorted.sort_by_key(|r| {
        let f: Vec<usize> = r.split(',').take(2).map(|x| x.parse().unwrap()).collect();
        (f[0], f[1])
    });
    assert_eq!(sorted, rows[1..]);
}

#[test]
fn csv_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let o = cwl(&[
        "tables",
        "--kind",
        "privileged",
        "--n",
        "6",
        "--no-cache",
        "--csv",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text, "n,t,count\n6,1,2\n6,2,2\n6,3,2\n6,4,0\n6,5,2\n");
}

#[test]
fn golden_diff_on_a_clean_subwindow() {
    let o = cwl(&[
        "tables",
        "--kind",
        "closed",
        "--n",
        "12..14",
        "--diff-golden",
        "--no-cache",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("30 of 110 cells compared, 0 mismatches"));
}

#[test]
fn golden_diff_reports_mismatch_lines() {
    // the reference closed table lists 13 at n=11, t=7; the true count is 12
    let o = cwl(&[
        "tables",
        "--kind",
        "closed",
        "--n",
        "11",
        "--diff-golden",
        "--no-cache",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).lines().any(|l| l == "11,7,13,12"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn golden_diff_needs_binary_alphabet() {
    let o = cwl(&[
        "tables",
        "--kind",
        "closed",
        "--k",
        "3",
        "--n",
        "4",
        "--diff-golden",
        "--no-cache",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_errors_exit_two() {
    let o = cwl(&[
        "tables",
        "--kind",
        "closed",
        "--n",
        "12",
        "--max-states",
        "2^10",
        "--no-cache",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("budget"));
    assert_eq!(
        cwl(&["count", "--kind", "closed", "--n", "30"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn cache_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let args = [
        "tables",
        "--kind",
        "closed",
        "--n",
        "9",
        "--cache-dir",
        path(&cache),
    ];
    let first = cwl(&args);
    assert_eq!(first.status.code(), Some(0));
    let file = cache.join("closed-k2-n9.json");
    assert!(file.exists());
    assert!(cache.join("privileged-k2-n9.json").exists());

    let second = cwl(&args);
    assert_eq!(stdout(&second), stdout(&first));
    assert!(stderr(&second).is_empty());

    let json = std::fs::read_to_string(&file).unwrap();
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["entries"][1]["count"], "22");
    std::fs::write(&file, json.replacen("\"22\"", "\"12x\"", 1)).unwrap();
    let third = cwl(&args);
    assert_eq!(third.status.code(), Some(0));
    assert!(stderr(&third).contains("warning"), "{}", stderr(&third));
    assert_eq!(stdout(&third), stdout(&first));
    // the recomputed row replaced the tampered file
    assert!(std::fs::read_to_string(&file).unwrap().contains("\"22\""));
}

#[test]
fn oeis_bundled_snapshots() {
    for kind in ["closed", "privileged"] {
        let o = cwl(&["oeis", "--kind", kind, "--n-max", "16"]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stdout(&o).contains("17 terms checked"));
    }
}

#[test]
fn oeis_mismatch_and_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let wrong = dir.path().join("wrong.txt");
    std::fs::write(
        &wrong,
        "# closed\n0 1\n1 2\n2 2\n3 4\n4 6\n5 12\n6 20\n7 36\n8 62\n9 116\n10 205\n",
    )
    .unwrap();
    let o = cwl(&[
        "oeis",
        "--kind",
        "closed",
        "--bfile",
        path(&wrong),
        "--n-max",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("10,205,204"));

    let o = cwl(&[
        "oeis",
        "--kind",
        "closed",
        "--bfile",
        path(&wrong),
        "--n-max",
        "9",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 1\nabc\n").unwrap();
    let o = cwl(&[
        "oeis",
        "--kind",
        "closed",
        "--bfile",
        path(&bad),
        "--n-max",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));

    let missing = dir.path().join("missing.txt");
    let o = cwl(&[
        "oeis",
        "--kind",
        "privileged",
        "--bfile",
        path(&missing),
        "--n-max",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));

    let o = cwl(&[
        "oeis",
        "--kind",
        "closed",
        "--bfile",
        path(&wrong),
        "--n-max",
        "11",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bounds_checks_hold() {
    let o = cwl(&["bounds", "lemma6", "--k", "2", "--n", "12", "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(
        text.lines().next(),
        Some("check,k,n,t,detail,lhs,rhs,ratio,holds")
    );
    assert_eq!(
        text.lines()
            .skip(1)
            .filter(|l| l.ends_with(",true"))
            .count(),
        8
    );

    let o = cwl(&["bounds", "betaA", "--k", "2", "--t", "2", "--n-max", "40"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 37);

    let o = cwl(&["bounds", "corollary8", "--n", "10"]);
    assert!(stdout(&o).contains("corollary8,2,10,,,204,606,"));

    let o = cwl(&["bounds", "lemma15", "--n", "10"]);
    assert!(stdout(&o).contains("lemma15,2,10,3,,22,52,"));

    let o = cwl(&["bounds", "binomial", "--k", "2", "--t", "2", "--gamma", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("binomial,2,,2,upper gamma=1,1,1,1.000000,true"));

    for check in ["beta", "corrorder", "tstar"] {
        assert_eq!(cwl(&["bounds", check]).status.code(), Some(0), "{check}");
    }
}

#[test]
fn report_only_checks_exit_zero() {
    let o = cwl(&[
        "bounds", "envelope", "--k", "2", "--n", "10..20", "--j", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 12);
    assert!(text.contains("2,10,1,204,60,1.992188,"));

    let o = cwl(&["bounds", "loglimit", "--i", "1", "--gamma", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o)
        .lines()
        .skip(1)
        .all(|l| l.contains(",2.000000000,2,")));
}

#[test]
fn bounds_usage_errors() {
    assert_eq!(cwl(&["bounds", "nope"]).status.code(), Some(2));
    assert_eq!(
        cwl(&["bounds", "binomial", "--gamma", "1/0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cwl(&["bounds", "binomial", "--t", "2", "--gamma", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(cwl(&["bounds", "betaA", "--t", "1"]).status.code(), Some(2));
    assert_eq!(
        cwl(&["bounds", "lemma6", "--n", "5..2"]).status.code(),
        Some(2)
    );
}

#[test]
fn counts() {
    let value = |args: &[&str]| {
        let o = cwl(args);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        stdout(&o).trim().to_string()
    };
    assert_eq!(value(&["count", "--kind", "closed", "--n", "10"]), "204");
    assert_eq!(
        value(&["count", "--kind", "privileged", "--n", "10", "--jobs", "1"]),
        "60"
    );
    assert_eq!(
        value(&[
            "count",
            "--kind",
            "closed",
            "--k",
            "3",
            "--n",
            "8",
            "--canonical"
        ]),
        value(&["count", "--kind", "closed", "--k", "3", "--n", "8"])
    );
    assert_eq!(
        value(&["count", "--kind", "avoid", "--n", "4", "--pattern", "00"]),
        "8"
    );
    assert_eq!(
        value(&[
            "count",
            "--kind",
            "closed-by-pattern",
            "--n",
            "12",
            "--pattern",
            "0"
        ]),
        "1"
    );
    assert_eq!(
        cwl(&["count", "--kind", "avoid", "--n", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cwl(&["count", "--kind", "closed", "--n", "4", "--jobs", "0"])
            .status
            .code(),
        Some(2)
    );
}
