use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn zcs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zcs")).args(args).output().expect("run zcs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn table_one_file(dir: &Path) -> String {
    let path = dir.join("t1.zcs");
    let path = path.to_str().unwrap().to_owned();
    let o = zcs(&[
        "construct", "--q", "6", "--b", "6", "--m", "3", "--n", "1", "--k", "2", "--blocks", "1,3;2",
        "--beta", "0,0,0,0", "--out", &path,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    path
}

/// Replaces the first digit of data line `row` (0-based across the whole body).
fn alter_digit(text: &str, row: usize) -> String {
    let mut seen = 0;
    text.lines()
        .map(|line| {
            let is_data = !line.starts_with("zcs-v1") && !line.starts_with("set ");
            if is_data {
                seen += 1;
                if seen - 1 == row {
                    let first = line.chars().next().unwrap().to_digit(10).unwrap();
                    return format!("{}{}", (first + 1) % 6, &line[1..]);
                }
            }
            line.to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

#[test]
fn construct_reports_summary_and_verdict() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("t1.zcs");
    let o = zcs(&[
        "construct", "--q", "6", "--b", "6", "--m", "3", "--n", "1", "--blocks", "1,3;2", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("M=6 N=4 L=6 Z=4"), "{out}");
    assert!(out.contains("optimal"));
    assert!(fs::read_to_string(&path).unwrap().starts_with("zcs-v1 q=6 M=6 N=4 L=6 Z=4\nset 0\n000003\n"));
}

#[test]
fn construct_without_out_prints_the_family() {
    let o = zcs(&["construct", "--q", "2", "--b", "2", "--m", "1", "--n", "1", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "zcs-v1 q=2 M=2 N=2 L=2 Z=2\nset 0\n00\n01\nset 1\n01\n00\n");
    assert!(stderr(&o).contains("M=2 N=2 L=2 Z=2"));
}

#[test]
fn singleton_blocks_round_trip_through_verify() {
    let dir = TempDir::new().unwrap();
    for m in 1..=4usize {
        let path = dir.path().join(format!("sq{m}.zcs"));
        let blocks = (1..=m).map(|v| v.to_string()).collect::<Vec<_>>().join(";");
        let ms = m.to_string();
        let o = zcs(&[
            "construct", "--q", "2", "--b", "2", "--m", &ms, "--n", &ms, "--k", &ms, "--blocks", &blocks,
            "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        let side = 1 << m;
        assert!(stdout(&o).contains(&format!("M={side} N={side} L={side} Z={side}")));
        let v = zcs(&["verify", path.to_str().unwrap()]);
        assert_eq!(v.status.code(), Some(0), "{}", stderr(&v));
        assert!(stdout(&v).contains(&format!("ZCS ok, Z={side}, optimal")));
    }
}

#[test]
fn construct_parameter_errors_exit_two() {
    for (args, message) in [
        (vec!["--q", "5", "--b", "5", "--m", "3", "--n", "1", "--k", "1"], "q must be even"),
        (vec!["--q", "6", "--b", "4", "--m", "3", "--n", "1", "--k", "1"], "b does not divide q"),
        (vec!["--q", "6", "--b", "6", "--m", "2", "--n", "1", "--k", "1"], "b^n exceeds 2^m"),
        (vec!["--q", "6", "--b", "6", "--m", "3", "--n", "1", "--blocks", "3,1;2"], "first elements"),
        (vec!["--q", "6", "--b", "6", "--m", "3", "--n", "1", "--k", "1", "--blocks", "1,3;2"], "does not match"),
        (vec!["--q", "6", "--b", "6", "--m", "3", "--n", "1", "--k", "2", "--beta", "0,0"], "beta"),
        (vec!["--q", "6", "--b", "6", "--m", "3", "--n", "1", "--blocks", "1,x;2"], "not a non-negative integer"),
    ] {
        let mut full = vec!["construct"];
        full.extend(args);
        let o = zcs(&full);
        assert_eq!(o.status.code(), Some(2), "{full:?}");
        assert!(stderr(&o).contains(message), "{full:?}: {}", stderr(&o));
    }
}

#[test]
fn verify_table_one() {
    let dir = TempDir::new().unwrap();
    let path = table_one_file(dir.path());
    let o = zcs(&["verify", &path]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("measured_Z=4"));
    assert!(out.contains("4\t6\t4\t9.0000"));
    assert!(out.contains("ZCS ok, Z=4, optimal (6 = ⌊24/4⌋)"), "{out}");

    let o = zcs(&["verify", &path, "--z", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("witness (p="));
}

#[test]
fn every_single_digit_fault_is_caught() {
    let dir = TempDir::new().unwrap();
    let path = table_one_file(dir.path());
    let text = fs::read_to_string(&path).unwrap();
    for row in 0..24 {
        let bad = dir.path().join(format!("bad{row}.zcs"));
        fs::write(&bad, alter_digit(&text, row)).unwrap();
        let o = zcs(&["verify", bad.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(1), "row {row}");
        assert!(stderr(&o).contains("witness (p="), "row {row}");
    }
}

#[test]
fn malformed_files_exit_two() {
    let dir = TempDir::new().unwrap();
    let path = table_one_file(dir.path());
    let text = fs::read_to_string(&path).unwrap();
    let cases = [
        text[..text.len() / 2].to_string(),
        text.replacen("000003", "00003", 1),
        text.replacen("000003", "00000x", 1),
        text.replacen("000003", "000009", 1),
        text.replacen("zcs-v1", "zcs-v2", 1),
        String::new(),
    ];
    for (i, case) in cases.iter().enumerate() {
        let bad = dir.path().join(format!("m{i}.zcs"));
        fs::write(&bad, case).unwrap();
        for cmd in ["verify", "export"] {
            let o = zcs(&[cmd, bad.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(2), "{cmd} case {i}");
        }
    }
    let o = zcs(&["verify", dir.path().join("missing.zcs").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bounds_table() {
    let o = zcs(&["bounds", "--n", "4", "--l", "6", "--z", "4"]);
    assert_eq!(stdout(&o), "Z\ttheorem1\tfan\twelch_feng\n4\t6\t4\t9.0000\n");
    let o = zcs(&["bounds", "--n", "4", "--l", "6", "--z", "6"]);
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("6\t4\t"));
    let o = zcs(&["bounds", "--n", "4", "--l", "6", "--sweep"]);
    let rows: Vec<_> = stdout(&o).lines().skip(1).map(str::to_owned).collect();
    assert_eq!(rows.len(), 6);
    for (z, row) in rows.iter().enumerate() {
        assert!(row.starts_with(&format!("{}\t", z + 1)));
    }
    assert_eq!(rows[2], "3\t8\t8\t10.6667");
    for bad in [vec!["--z", "7"], vec!["--z", "0"], vec![]] {
        let mut args = vec!["bounds", "--n", "4", "--l", "6"];
        args.extend(bad);
        assert_eq!(zcs(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn search_reports_and_writes_witness() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("w.zcs");
    let o = zcs(&["search", "--q", "2", "--n-flock", "2", "--l", "2", "--z", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("best_M=2\nbound=2\nexhaustive=true"), "{out}");
    let v = zcs(&["verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));

    let o = zcs(&["search", "--q", "2", "--n-flock", "1", "--l", "2", "--z", "1"]);
    assert!(stdout(&o).contains("best_M=2"));
}

#[test]
fn search_cap_is_enforced() {
    let o = zcs(&["search", "--q", "4", "--n-flock", "4", "--l", "8", "--z", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--allow-partial"));
    let o = zcs(&[
        "search", "--q", "2", "--n-flock", "2", "--l", "8", "--z", "2", "--cap", "64", "--allow-partial",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exhaustive=false"));
}

#[test]
fn export_and_import_are_lossless() {
    let dir = TempDir::new().unwrap();
    let path = table_one_file(dir.path());
    let o = zcs(&["export", &path, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let json = stdout(&o);
    let compact: String = json.split_whitespace().collect();
    assert!(compact.contains("\"sets\":[[[0,0,0,0,0,3],[0,3,0,3,0,0]"), "{compact}");
    assert!(compact.contains("\"M\":6"));

    let jpath = dir.path().join("t1.json");
    fs::write(&jpath, &json).unwrap();
    let back = dir.path().join("back.zcs");
    let o = zcs(&["import", jpath.to_str().unwrap(), "--out", back.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&back).unwrap(), fs::read_to_string(&path).unwrap());

    fs::write(&jpath, &json[..json.len() / 2]).unwrap();
    assert_eq!(zcs(&["import", jpath.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn large_alphabets_use_letter_digits() {
    let o = zcs(&["construct", "--q", "24", "--b", "12", "--m", "4", "--n", "1", "--k", "1", "--beta", "23,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.lines().nth(2).unwrap().starts_with('n'), "{text}");
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("big.zcs");
    fs::write(&path, &text).unwrap();
    let v = zcs(&["verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{}", stderr(&v));
}
